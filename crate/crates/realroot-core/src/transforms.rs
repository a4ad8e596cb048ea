//! Non-linear coefficient transforms on polynomials.
//!
//! For `p = sum a_k x^k` of degree `n` (with `a_k = 0` outside `0..=n`):
//!
//! * `u_alpha`: `b_k = sum_j alpha_j a_{k-j} a_{k+j}`
//! * `v_alpha`: `c_k = sum_j alpha_j a_{k-j} a_{k+1+j}`
//! * `s_r = u_alpha` and `s_tilde_r = v_alpha` with `alpha_0 = 1, alpha_r = -1`
//! * `f_d`: coefficient of `x^k` is the d-by-d Toeplitz minor `det(a_{k-i+j})`
//! * `j_op`: `4(a_k^2 - a_{k-1}a_{k+1})(a_{k+1}^2 - a_k a_{k+2}) - (a_k a_{k+1} - a_{k-1}a_{k+2})^2`
//! * `malo_schur_compose`: `sum a_k b_k x^k`, optionally weighted by `k!`
//! * `apply_gamma`: the diagonal action `a_k -> gamma_k a_k`
//!
//! All outputs are truncated at `deg p`; every coefficient past it is
//! identically zero anyway (each term carries an out-of-range factor), a
//! fact the test suite checks rather than assumes.
//!
//! Each operator is also available as a [`PolyTransform`] strategy object
//! built by name through [`build_transform`], so front ends can dispatch
//! on a runtime string.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use once_cell::sync::Lazy;

use crate::error::Error;
use crate::gamma::GammaSeq;
use crate::minors::bareiss_det;
use crate::num::{factorial, parse_rational, rat_int, Rational};
use crate::poly::Poly;

/// Finitely supported sequence `alpha` parameterizing `u_alpha`/`v_alpha`.
/// Zero entries are dropped on construction.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct AlphaSeq {
    support: BTreeMap<usize, Rational>,
}

impl AlphaSeq {
    pub fn new(entries: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        Self {
            support: entries.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Parses `"0:1,6:-1"` (index:value pairs, rational values).
    pub fn parse(spec: &str) -> Result<Self, Error> {
        let mut entries = Vec::new();
        for item in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (idx, val) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("alpha entry {item:?} is not index:value")))?;
            let j: usize = idx
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad alpha index {idx:?}")))?;
            entries.push((j, parse_rational(val)?));
        }
        Ok(Self::new(entries))
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.support.iter().map(|(&j, v)| (j, v))
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// `alpha_0 = 1, alpha_r = -1`. For `r = 0` the two assignments collide
    /// and cancel, leaving the empty sequence (the zero operator).
    pub fn s_r_alpha(r: usize) -> Self {
        let mut entries = vec![(0, rat_int(1))];
        if r == 0 {
            entries.clear();
        } else {
            entries.push((r, rat_int(-1)));
        }
        Self::new(entries)
    }

    pub fn describe(&self) -> String {
        if self.support.is_empty() {
            return "{}".to_string();
        }
        let items: Vec<String> = self
            .support
            .iter()
            .map(|(j, v)| format!("{j}:{v}"))
            .collect();
        format!("{{{}}}", items.join(","))
    }
}

/// `b_k = sum_j alpha_j a_{k-j} a_{k+j}` for `k = 0..=deg p`.
pub fn u_alpha(alpha: &AlphaSeq, p: &Poly) -> Poly {
    quadratic_transform(alpha, p, 0)
}

/// `c_k = sum_j alpha_j a_{k-j} a_{k+1+j}` for `k = 0..=deg p`.
pub fn v_alpha(alpha: &AlphaSeq, p: &Poly) -> Poly {
    quadratic_transform(alpha, p, 1)
}

fn quadratic_transform(alpha: &AlphaSeq, p: &Poly, offset: i64) -> Poly {
    let Some(n) = p.degree() else {
        return Poly::zero();
    };
    let coeffs = (0..=n as i64)
        .map(|k| {
            let mut acc = Rational::zero();
            for (j, a_j) in alpha.iter() {
                let j = j as i64;
                let lo = p.coeff_i(k - j);
                if lo.is_zero() {
                    continue;
                }
                let hi = p.coeff_i(k + offset + j);
                if hi.is_zero() {
                    continue;
                }
                acc += a_j * lo * hi;
            }
            acc
        })
        .collect();
    Poly::new(coeffs)
}

/// `s_r`: `b_k = a_k^2 - a_{k-r} a_{k+r}`; identically zero for `r = 0`.
pub fn s_r(r: usize, p: &Poly) -> Poly {
    u_alpha(&AlphaSeq::s_r_alpha(r), p)
}

/// `s_tilde_r`: `c_k = a_k a_{k+1} - a_{k-r} a_{k+r+1}`; zero for `r = 0`.
pub fn s_tilde_r(r: usize, p: &Poly) -> Poly {
    v_alpha(&AlphaSeq::s_r_alpha(r), p)
}

/// Coefficient of `x^k` is `det(a_{k-i+j})`, `0 <= i, j <= d-1`, with the
/// zero extension outside `0..=deg p`.
pub fn f_d(d: usize, p: &Poly) -> Result<Poly, Error> {
    if d == 0 {
        return Err(Error::InvalidInput("f_d requires d >= 1".into()));
    }
    let Some(n) = p.degree() else {
        return Ok(Poly::zero());
    };
    let coeffs = (0..=n as i64)
        .map(|k| {
            let m: Vec<Vec<Rational>> = (0..d as i64)
                .map(|i| (0..d as i64).map(|j| p.coeff_i(k - i + j)).collect())
                .collect();
            bareiss_det(m)
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// Coefficient-wise higher-order Turán expression.
pub fn j_op(p: &Poly) -> Poly {
    let Some(n) = p.degree() else {
        return Poly::zero();
    };
    let coeffs = (0..=n as i64)
        .map(|k| {
            let a = |i: i64| p.coeff_i(i);
            let turan_k = a(k) * a(k) - a(k - 1) * a(k + 1);
            let turan_k1 = a(k + 1) * a(k + 1) - a(k) * a(k + 2);
            let cross = a(k) * a(k + 1) - a(k - 1) * a(k + 2);
            rat_int(4) * turan_k * turan_k1 - &cross * &cross
        })
        .collect();
    Poly::new(coeffs)
}

/// Hadamard-type composition `sum a_k b_k x^k` up to `min(deg p, deg q)`,
/// with an optional `k!` weight.
pub fn malo_schur_compose(p: &Poly, q: &Poly, with_factorial: bool) -> Poly {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Poly::zero();
    };
    let m = dp.min(dq);
    let coeffs = (0..=m)
        .map(|k| {
            let mut c = p.coeff(k) * q.coeff(k);
            if with_factorial {
                c *= Rational::from_integer(factorial(k));
            }
            c
        })
        .collect();
    Poly::new(coeffs)
}

/// Diagonal action `a_k -> gamma_k a_k`.
pub fn apply_gamma(gamma: &dyn GammaSeq, p: &Poly) -> Poly {
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, a)| a * gamma.value(k))
        .collect();
    Poly::new(coeffs)
}

/// A coefficient transform selected at runtime.
pub trait PolyTransform: Send + Sync {
    fn apply(&self, p: &Poly) -> Poly;
    fn describe(&self) -> String;
}

struct SrTransform(usize);
struct SrTildeTransform(usize);
struct FdTransform(usize);
struct JTransform;
struct UAlphaTransform(AlphaSeq);
struct VAlphaTransform(AlphaSeq);
struct ComposeTransform {
    with: Poly,
    factorial: bool,
}
struct GammaTransform(Arc<dyn GammaSeq>);

impl PolyTransform for SrTransform {
    fn apply(&self, p: &Poly) -> Poly {
        s_r(self.0, p)
    }
    fn describe(&self) -> String {
        format!("s_r[r={}]", self.0)
    }
}

impl PolyTransform for SrTildeTransform {
    fn apply(&self, p: &Poly) -> Poly {
        s_tilde_r(self.0, p)
    }
    fn describe(&self) -> String {
        format!("s_tilde_r[r={}]", self.0)
    }
}

impl PolyTransform for FdTransform {
    fn apply(&self, p: &Poly) -> Poly {
        f_d(self.0, p).expect("d >= 1 validated at build time")
    }
    fn describe(&self) -> String {
        format!("f_d[d={}]", self.0)
    }
}

impl PolyTransform for JTransform {
    fn apply(&self, p: &Poly) -> Poly {
        j_op(p)
    }
    fn describe(&self) -> String {
        "j".to_string()
    }
}

impl PolyTransform for UAlphaTransform {
    fn apply(&self, p: &Poly) -> Poly {
        u_alpha(&self.0, p)
    }
    fn describe(&self) -> String {
        format!("u_alpha[alpha={}]", self.0.describe())
    }
}

impl PolyTransform for VAlphaTransform {
    fn apply(&self, p: &Poly) -> Poly {
        v_alpha(&self.0, p)
    }
    fn describe(&self) -> String {
        format!("v_alpha[alpha={}]", self.0.describe())
    }
}

impl PolyTransform for ComposeTransform {
    fn apply(&self, p: &Poly) -> Poly {
        malo_schur_compose(p, &self.with, self.factorial)
    }
    fn describe(&self) -> String {
        format!("compose[factorial={}]", self.factorial)
    }
}

impl PolyTransform for GammaTransform {
    fn apply(&self, p: &Poly) -> Poly {
        apply_gamma(self.0.as_ref(), p)
    }
    fn describe(&self) -> String {
        format!("gamma[{}]", self.0.description())
    }
}

/// Parameters a front end may supply when building a transform.
#[derive(Default, Clone)]
pub struct TransformSpec {
    pub r: Option<usize>,
    pub d: Option<usize>,
    pub alpha: Option<AlphaSeq>,
    pub gamma: Option<Arc<dyn GammaSeq>>,
    pub with: Option<Poly>,
    pub factorial: bool,
}

type TransformBuilder = fn(&TransformSpec) -> Result<Box<dyn PolyTransform>, Error>;

static TRANSFORM_REGISTRY: Lazy<Vec<(&'static str, TransformBuilder)>> = Lazy::new(|| {
    vec![
        ("s_r", |spec| {
            let r = spec.r.ok_or_else(|| missing("s_r", "--r"))?;
            Ok(Box::new(SrTransform(r)))
        }),
        ("s_tilde_r", |spec| {
            let r = spec.r.ok_or_else(|| missing("s_tilde_r", "--r"))?;
            Ok(Box::new(SrTildeTransform(r)))
        }),
        ("f_d", |spec| {
            let d = spec.d.ok_or_else(|| missing("f_d", "--d"))?;
            if d == 0 {
                return Err(Error::InvalidInput("f_d requires d >= 1".into()));
            }
            Ok(Box::new(FdTransform(d)))
        }),
        ("j", |_| Ok(Box::new(JTransform))),
        ("u_alpha", |spec| {
            let alpha = spec
                .alpha
                .clone()
                .ok_or_else(|| missing("u_alpha", "--alpha"))?;
            Ok(Box::new(UAlphaTransform(alpha)))
        }),
        ("v_alpha", |spec| {
            let alpha = spec
                .alpha
                .clone()
                .ok_or_else(|| missing("v_alpha", "--alpha"))?;
            Ok(Box::new(VAlphaTransform(alpha)))
        }),
        ("compose", |spec| {
            let with = spec
                .with
                .clone()
                .ok_or_else(|| missing("compose", "--with"))?;
            Ok(Box::new(ComposeTransform {
                with,
                factorial: spec.factorial,
            }))
        }),
        ("gamma", |spec| {
            let gamma = spec
                .gamma
                .clone()
                .ok_or_else(|| missing("gamma", "--gamma"))?;
            Ok(Box::new(GammaTransform(gamma)))
        }),
    ]
});

fn missing(op: &str, flag: &str) -> Error {
    Error::InvalidInput(format!("transform {op} requires {flag}"))
}

/// Names accepted by [`build_transform`].
pub fn transform_names() -> Vec<&'static str> {
    TRANSFORM_REGISTRY.iter().map(|(n, _)| *n).collect()
}

/// Builds the named transform, validating the parameters it needs.
pub fn build_transform(name: &str, spec: &TransformSpec) -> Result<Box<dyn PolyTransform>, Error> {
    for (key, build) in TRANSFORM_REGISTRY.iter() {
        if *key == name {
            return build(spec);
        }
    }
    Err(Error::InvalidInput(format!(
        "unknown transform {name:?}; known: {}",
        transform_names().join(", ")
    )))
}
