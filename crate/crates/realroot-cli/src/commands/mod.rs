pub mod check;
pub mod counterexample;
pub mod identity;
pub mod sweep;
pub mod transform;

use std::path::Path;

use realroot_core::io::PolyJson;
use realroot_core::num::parse_rational;
use realroot_core::poly::Poly;
use realroot_core::{Error, Rational};

/// Reads one polynomial from the shared JSON coefficient format.
pub fn read_poly(path: &Path) -> Result<Poly, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let wire: PolyJson = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("malformed polynomial file {}: {e}", path.display())))?;
    wire.to_poly()
}

pub fn parse_rational_flag(raw: &Option<String>, flag: &str) -> Result<Option<Rational>, Error> {
    raw.as_deref()
        .map(|s| parse_rational(s).map_err(|e| Error::Parse(format!("{flag}: {e}"))))
        .transpose()
}
