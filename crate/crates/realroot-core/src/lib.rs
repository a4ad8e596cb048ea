//! Exact-arithmetic toolkit for real-rooted polynomials.
//!
//! Everything here runs over arbitrary-precision rationals: polynomial
//! arithmetic, Sturm-sequence root counting and zero classification,
//! the non-linear coefficient transforms (`s_r`, `s_tilde_r`, `f_d`, `j`,
//! `u_alpha`, `v_alpha`, Hadamard-type composition, diagonal sequences),
//! Toeplitz minors with their product formulas, multiplier-sequence
//! diagnostics, and certified enclosures for entire-function series
//! evaluated at rational points.
//!
//! The transform, series-generator and sequence families are exposed as
//! trait objects behind small name registries so a front end can select
//! a strategy at runtime (`transforms::build_transform`,
//! `series::lookup_series`, `gamma::parse_gamma`).

pub mod error;
pub mod gamma;
pub mod io;
pub mod minors;
pub mod msequences;
pub mod num;
pub mod poly;
pub mod series;
pub mod sturm;
pub mod transforms;

pub use error::Error;
pub use num::Rational;
pub use poly::Poly;
pub use sturm::{
    classify_zeros, count_real_roots, squarefree_part, Endpoint, RootVerdict, VerdictKind,
};
