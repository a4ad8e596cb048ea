//! Coefficient sequences `{γ_k}` used as diagonal multipliers, as rows of
//! Toeplitz minors, and as inputs to the rapid-decrease checks.
//!
//! Each kind of sequence is a strategy behind the [`GammaSeq`] trait and
//! can be looked up by a spec string (`shifted-factorial:2`,
//! `reversed-factorial:5:2`, `2powk2`, ...), which is how the CLI selects
//! one at runtime.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::Error;
use crate::num::{binomial, factorial, parse_rational, Rational};

pub trait GammaSeq: Send + Sync {
    /// `γ_k`, total for all `k >= 0`.
    fn value(&self, k: usize) -> Rational;
    fn description(&self) -> String;
}

/// `γ_k = 1/(k+j)!`.
pub struct ShiftedFactorial {
    pub j: usize,
}

impl GammaSeq for ShiftedFactorial {
    fn value(&self, k: usize) -> Rational {
        Rational::new(BigInt::one(), factorial(k + self.j))
    }
    fn description(&self) -> String {
        format!("1/(k+{})!", self.j)
    }
}

/// `γ_k = 1/(n-k+d)!`, zero once `n-k+d < 0`.
pub struct ReversedFactorial {
    pub n: usize,
    pub d: usize,
}

impl GammaSeq for ReversedFactorial {
    fn value(&self, k: usize) -> Rational {
        match (self.n + self.d).checked_sub(k) {
            Some(m) => Rational::new(BigInt::one(), factorial(m)),
            None => Rational::zero(),
        }
    }
    fn description(&self) -> String {
        format!("1/({}-k+{})!", self.n, self.d)
    }
}

/// `γ_k = 1` (the identity diagonal operator).
pub struct Ones;

impl GammaSeq for Ones {
    fn value(&self, _k: usize) -> Rational {
        Rational::one()
    }
    fn description(&self) -> String {
        "1".to_string()
    }
}

/// `a_k = C(n, k)`, zero past `k = n`: the coefficients of `(1+x)^n`.
pub struct BinomialRow {
    pub n: usize,
}

impl GammaSeq for BinomialRow {
    fn value(&self, k: usize) -> Rational {
        Rational::from_integer(binomial(self.n, k))
    }
    fn description(&self) -> String {
        format!("C({}, k)", self.n)
    }
}

/// `s_k = 2^(-k^2)`, the standard rapidly decreasing example.
pub struct PowTwoNegSquare;

impl GammaSeq for PowTwoNegSquare {
    fn value(&self, k: usize) -> Rational {
        Rational::new(BigInt::one(), BigInt::one() << (k * k))
    }
    fn description(&self) -> String {
        "2^(-k^2)".to_string()
    }
}

/// Finitely many explicit values, zero beyond.
pub struct Explicit {
    pub values: Vec<Rational>,
    pub label: String,
}

impl GammaSeq for Explicit {
    fn value(&self, k: usize) -> Rational {
        self.values.get(k).cloned().unwrap_or_else(Rational::zero)
    }
    fn description(&self) -> String {
        self.label.clone()
    }
}

/// Image of a base sequence under the r-shifted difference
/// `t_k = a_k^2 - a_{k-r} a_{k+r}` (indices below zero read as zero).
pub struct SrImage {
    pub base: Arc<dyn GammaSeq>,
    pub r: usize,
}

impl GammaSeq for SrImage {
    fn value(&self, k: usize) -> Rational {
        let v = self.base.value(k);
        let square = &v * &v;
        match k.checked_sub(self.r) {
            Some(lo) => square - self.base.value(lo) * self.base.value(k + self.r),
            None => square,
        }
    }
    fn description(&self) -> String {
        format!(
            "a_k^2 - a_(k-{r}) a_(k+{r}) of {}",
            self.base.description(),
            r = self.r
        )
    }
}

/// Spec-name constructors, keyed by the prefix before the first `:`.
type GammaBuilder = fn(&[&str]) -> Result<Arc<dyn GammaSeq>, Error>;

static GAMMA_REGISTRY: Lazy<Vec<(&'static str, GammaBuilder)>> = Lazy::new(|| {
    vec![
        ("shifted-factorial", |args| {
            let j = one_usize_arg("shifted-factorial", args)?;
            Ok(Arc::new(ShiftedFactorial { j }))
        }),
        ("reversed-factorial", |args| {
            if args.len() != 2 {
                return Err(Error::Parse(
                    "reversed-factorial takes two arguments: reversed-factorial:N:D".into(),
                ));
            }
            Ok(Arc::new(ReversedFactorial {
                n: parse_usize(args[0])?,
                d: parse_usize(args[1])?,
            }))
        }),
        ("ones", |_| Ok(Arc::new(Ones))),
        ("exp", |_| Ok(Arc::new(ShiftedFactorial { j: 0 }))),
        ("binomial", |args| {
            let n = one_usize_arg("binomial", args)?;
            Ok(Arc::new(BinomialRow { n }))
        }),
        ("2powk2", |_| Ok(Arc::new(PowTwoNegSquare))),
        ("list", |args| {
            if args.len() != 1 {
                return Err(Error::Parse(
                    "list takes one argument: list:v1,v2,...".into(),
                ));
            }
            let values = args[0]
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Arc::new(Explicit {
                label: format!("list:{}", args[0]),
                values,
            }))
        }),
    ]
});

fn parse_usize(s: &str) -> Result<usize, Error> {
    s.parse()
        .map_err(|_| Error::Parse(format!("expected a nonnegative integer, got {s:?}")))
}

fn one_usize_arg(name: &str, args: &[&str]) -> Result<usize, Error> {
    if args.len() != 1 {
        return Err(Error::Parse(format!(
            "{name} takes one integer argument: {name}:N"
        )));
    }
    parse_usize(args[0])
}

/// Known sequence names.
pub fn gamma_names() -> Vec<&'static str> {
    GAMMA_REGISTRY.iter().map(|(n, _)| *n).collect()
}

/// Resolves a sequence spec like `shifted-factorial:4` or `2powk2`.
pub fn parse_gamma(spec: &str) -> Result<Arc<dyn GammaSeq>, Error> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    for (key, build) in GAMMA_REGISTRY.iter() {
        if *key == name {
            return build(&args);
        }
    }
    Err(Error::Parse(format!(
        "unknown sequence {name:?}; known: {}",
        gamma_names().join(", ")
    )))
}

/// `γ_k = 1/(k+j)!`.
pub fn gamma_shifted_factorial(j: usize) -> Arc<dyn GammaSeq> {
    Arc::new(ShiftedFactorial { j })
}

/// `γ_k = 1/(n-k+d)!` with the zero extension for `n-k+d < 0`.
pub fn gamma_reversed_factorial(n: usize, d: usize) -> Arc<dyn GammaSeq> {
    Arc::new(ReversedFactorial { n, d })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{rat, rat_int};

    #[test]
    fn shifted_factorial_values() {
        assert_eq!(gamma_shifted_factorial(0).value(3), rat(1, 6));
        assert_eq!(gamma_shifted_factorial(2).value(0), rat(1, 2));
    }

    #[test]
    fn reversed_factorial_boundary() {
        let g = gamma_reversed_factorial(3, 1);
        assert_eq!(g.value(4), rat_int(1)); // 1/0!
        assert_eq!(g.value(5), rat_int(0));
        let h = gamma_reversed_factorial(2, 0);
        assert_eq!(
            (0..4).map(|k| h.value(k)).collect::<Vec<_>>(),
            vec![rat(1, 2), rat_int(1), rat_int(1), rat_int(0)]
        );
    }

    #[test]
    fn pow_two_neg_square() {
        let s = PowTwoNegSquare;
        assert_eq!(s.value(0), rat_int(1));
        assert_eq!(s.value(2), rat(1, 16));
    }

    #[test]
    fn registry_lookup() {
        assert_eq!(
            parse_gamma("shifted-factorial:4").unwrap().value(0),
            rat(1, 24)
        );
        assert_eq!(parse_gamma("binomial:4").unwrap().value(2), rat_int(6));
        assert_eq!(parse_gamma("list:1,-1,1/2").unwrap().value(1), rat_int(-1));
        assert!(parse_gamma("no-such-seq").is_err());
        assert!(parse_gamma("shifted-factorial").is_err());
    }
}
