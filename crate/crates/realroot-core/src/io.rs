//! The shared polynomial JSON format: one polynomial per JSON object,
//! coefficients in ascending powers as exact strings (`"num/den"` or
//! integer strings; small JSON integers are also accepted). Round-trips
//! are bit-exact.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::num::{format_rational, parse_rational, rat_int};
use crate::poly::Poly;

/// A coefficient as it appears on disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffRepr {
    Text(String),
    Int(i64),
}

/// Wire form of a polynomial.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub coeffs: Vec<CoeffRepr>,
}

impl PolyJson {
    pub fn from_poly(p: &Poly) -> Self {
        Self {
            name: None,
            coeffs: p
                .coeffs()
                .iter()
                .map(|c| CoeffRepr::Text(format_rational(c)))
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Poly, Error> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| match c {
                CoeffRepr::Text(s) => parse_rational(s),
                CoeffRepr::Int(i) => Ok(rat_int(*i)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}
