//! Sturm-sequence real root counting and zero-set classification.
//!
//! Counts are exact: the Sturm chain is the signed remainder sequence of
//! `(p, p')` and sign-change differences count distinct real roots in
//! half-open intervals `(a, b]`. Multiplicities are recovered through the
//! gcd chain `p, gcd(p, p'), gcd(gcd(p, p'), ...)`: a root of multiplicity
//! `m` shows up in exactly `m` of the square-free quotients.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Error;
use crate::num::Rational;
use crate::poly::Poly;

/// Interval endpoint for root counting.
#[derive(Debug, Clone, PartialEq)]
pub enum Endpoint {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Endpoint {
    fn le(&self, other: &Endpoint) -> bool {
        use Endpoint::*;
        match (self, other) {
            (NegInf, _) | (_, PosInf) => true,
            (PosInf, _) | (_, NegInf) => false,
            (Finite(a), Finite(b)) => a <= b,
        }
    }
}

/// `p / gcd(p, p')`, monic: same roots, all simple.
pub fn squarefree_part(p: &Poly) -> Result<Poly, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = p.gcd(&p.derivative());
    let (q, r) = p.div_rem(&g)?;
    debug_assert!(r.is_zero());
    Ok(q.monic().expect("nonzero quotient"))
}

/// Signed remainder chain starting from `(p, p')`. Each element is scaled
/// to a primitive integer polynomial (positive factor only), which leaves
/// every sign sequence unchanged while keeping coefficients small.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.primitive_sign_preserving()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d.primitive_sign_preserving());
    loop {
        let n = chain.len();
        let rem = chain[n - 2]
            .div_rem(&chain[n - 1])
            .expect("chain elements nonzero")
            .1;
        if rem.is_zero() {
            return chain;
        }
        chain.push((-&rem).primitive_sign_preserving());
    }
}

fn sign_at(p: &Poly, at: &Endpoint) -> i8 {
    let lead_sign = |c: &Rational| -> i8 {
        if c.is_positive() {
            1
        } else if c.is_negative() {
            -1
        } else {
            0
        }
    };
    match at {
        Endpoint::Finite(x) => lead_sign(&p.eval(x)),
        Endpoint::PosInf => p.leading().map_or(0, lead_sign),
        Endpoint::NegInf => match (p.leading(), p.degree()) {
            (Some(c), Some(d)) => {
                let s = lead_sign(c);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        },
    }
}

/// Sign changes along the chain at a point, zeros skipped.
fn sign_changes(chain: &[Poly], at: &Endpoint) -> usize {
    let mut changes = 0;
    let mut prev = 0i8;
    for p in chain {
        let s = sign_at(p, at);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            changes += 1;
        }
        prev = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the half-open interval
/// `(lo, hi]`. The caller is expected to pass a square-free `p`
/// (apply [`squarefree_part`] first); multiple roots are still counted,
/// but only once each.
pub fn count_real_roots(p: &Poly, lo: &Endpoint, hi: &Endpoint) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.le(hi) {
        return Err(Error::InvalidInterval);
    }
    let chain = sturm_chain(p);
    let va = sign_changes(&chain, lo);
    let vb = sign_changes(&chain, hi);
    Ok(va.saturating_sub(vb))
}

/// Zero-set classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    /// Every zero (with multiplicity) is real and strictly negative.
    AllRealNegative,
    /// Every zero is real; at least one is `>= 0`.
    AllReal,
    /// Some zeros are non-real.
    NotAllReal,
    /// The zero polynomial.
    ZeroPoly,
}

/// Sign-change counts for one square-free factor of the gcd chain.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SturmPart {
    /// Degree of this square-free quotient.
    pub degree: usize,
    /// Sign changes of its Sturm chain at -inf, 0, +inf.
    pub var_neg_inf: usize,
    pub var_at_zero: usize,
    pub var_pos_inf: usize,
}

/// The evidence behind a [`RootVerdict`].
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SturmCertificate {
    /// One entry per gcd-chain quotient; multiplicity-m roots appear in m parts.
    pub parts: Vec<SturmPart>,
    /// Multiplicity of the root at x = 0.
    pub zero_root_multiplicity: usize,
    /// All roots real and `<= 0` (negative-rooted up to factors of x).
    pub all_real_nonpositive: bool,
}

/// Certified classification of a polynomial's zero set.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RootVerdict {
    pub kind: VerdictKind,
    /// Real roots counted with multiplicity.
    pub real_root_count: usize,
    /// Strictly negative real roots counted with multiplicity.
    pub negative_root_count: usize,
    pub certificate: SturmCertificate,
}

impl RootVerdict {
    /// Strictly positive real roots counted with multiplicity.
    pub fn positive_root_count(&self) -> usize {
        self.real_root_count - self.negative_root_count - self.certificate.zero_root_multiplicity
    }

    /// All roots real and no two of strictly opposite sign (roots at the
    /// origin permitted). Vacuously true for constants and the zero
    /// polynomial.
    pub fn all_real_same_sign(&self) -> bool {
        match self.kind {
            VerdictKind::ZeroPoly => true,
            VerdictKind::NotAllReal => false,
            _ => self.negative_root_count == 0 || self.positive_root_count() == 0,
        }
    }
}

/// Multiplicity-aware classification of the zero set of `p`.
///
/// `AllRealNegative` demands every root real and strictly negative; a root
/// at the origin disqualifies it but is recorded in the certificate, with
/// `all_real_nonpositive` covering the "negative up to x-factors" reading.
pub fn classify_zeros(p: &Poly) -> RootVerdict {
    if p.is_zero() {
        return RootVerdict {
            kind: VerdictKind::ZeroPoly,
            real_root_count: 0,
            negative_root_count: 0,
            certificate: SturmCertificate {
                parts: Vec::new(),
                zero_root_multiplicity: 0,
                all_real_nonpositive: true,
            },
        };
    }

    // Strip the x^v factor so every remaining quotient is nonzero at 0.
    let valuation = p
        .coeffs()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero polynomial");
    let reduced = Poly::new(p.coeffs()[valuation..].to_vec());
    let degree = p.degree().expect("nonzero polynomial");

    let mut parts = Vec::new();
    let mut real = valuation;
    let mut negative = 0;

    // gcd chain: c_{j+1} = gcd(c_j, c_j'); the quotient c_j / c_{j+1} is
    // square-free and carries the roots of multiplicity > j, once each.
    let mut current = reduced;
    while current.degree().unwrap_or(0) >= 1 {
        let next = current.gcd(&current.derivative());
        let (quotient, r) = current.div_rem(&next).expect("gcd nonzero");
        debug_assert!(r.is_zero());
        let part = quotient.monic().expect("nonzero quotient");
        if part.degree().unwrap_or(0) >= 1 {
            let chain = sturm_chain(&part);
            let v_neg = sign_changes(&chain, &Endpoint::NegInf);
            let v_zero = sign_changes(&chain, &Endpoint::Finite(Rational::zero()));
            let v_pos = sign_changes(&chain, &Endpoint::PosInf);
            // part(0) != 0, so (-inf, 0] counts exactly the negative roots
            real += v_neg - v_pos;
            negative += v_neg - v_zero;
            parts.push(SturmPart {
                degree: part.degree().expect("nonconstant"),
                var_neg_inf: v_neg,
                var_at_zero: v_zero,
                var_pos_inf: v_pos,
            });
        }
        current = next;
    }

    let all_real = real == degree;
    let kind = if !all_real {
        VerdictKind::NotAllReal
    } else if valuation == 0 && negative == degree {
        VerdictKind::AllRealNegative
    } else {
        VerdictKind::AllReal
    };
    RootVerdict {
        kind,
        real_root_count: real,
        negative_root_count: negative,
        certificate: SturmCertificate {
            parts,
            zero_root_multiplicity: valuation,
            all_real_nonpositive: all_real && negative + valuation == degree,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat_int;

    fn ep(x: i64) -> Endpoint {
        Endpoint::Finite(rat_int(x))
    }

    #[test]
    fn squarefree_examples() {
        // (1+x)^2 -> 1+x
        let p = Poly::from_ints(&[1, 2, 1]);
        assert_eq!(squarefree_part(&p).unwrap(), Poly::from_ints(&[1, 1]));
        // x^2+1 already square-free
        let q = Poly::from_ints(&[1, 0, 1]);
        assert_eq!(squarefree_part(&q).unwrap(), q);
        // x(1+x)^3 -> x(1+x)
        let r = &Poly::from_ints(&[0, 1]) * &Poly::from_ints(&[1, 1]).pow(3);
        assert_eq!(squarefree_part(&r).unwrap(), Poly::from_ints(&[0, 1, 1]));
        assert!(squarefree_part(&Poly::zero()).is_err());
    }

    #[test]
    fn count_whole_line() {
        let p = Poly::from_ints(&[-2, 0, 1]); // x^2 - 2
        assert_eq!(
            count_real_roots(&p, &Endpoint::NegInf, &Endpoint::PosInf).unwrap(),
            2
        );
        let q = Poly::from_ints(&[1, 0, 1]); // x^2 + 1
        assert_eq!(
            count_real_roots(&q, &Endpoint::NegInf, &Endpoint::PosInf).unwrap(),
            0
        );
    }

    #[test]
    fn count_half_open_convention() {
        // roots of x^2 - 1 at -1, 1; intervals are (a, b]
        let p = Poly::from_ints(&[-1, 0, 1]);
        assert_eq!(count_real_roots(&p, &ep(-2), &ep(-1)).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &ep(-1), &ep(0)).unwrap(), 0);
        assert_eq!(count_real_roots(&p, &ep(0), &ep(1)).unwrap(), 1);
        assert_eq!(count_real_roots(&p, &ep(1), &ep(5)).unwrap(), 0);
        assert_eq!(count_real_roots(&p, &ep(1), &ep(1)).unwrap(), 0);
        assert_eq!(count_real_roots(&p, &ep(0), &Endpoint::PosInf).unwrap(), 1);
        assert!(count_real_roots(&p, &ep(1), &ep(0)).is_err());
        assert!(count_real_roots(&p, &Endpoint::PosInf, &Endpoint::NegInf).is_err());
    }

    #[test]
    fn classify_binomial_power() {
        let p = Poly::one_plus_x_pow(5);
        let v = classify_zeros(&p);
        assert_eq!(v.kind, VerdictKind::AllRealNegative);
        assert_eq!(v.real_root_count, 5);
        assert_eq!(v.negative_root_count, 5);
    }

    #[test]
    fn classify_not_all_real() {
        let v = classify_zeros(&Poly::from_ints(&[1, 1, 1]));
        assert_eq!(v.kind, VerdictKind::NotAllReal);
        assert_eq!(v.real_root_count, 0);
    }

    #[test]
    fn classify_zero_poly_and_constants() {
        assert_eq!(classify_zeros(&Poly::zero()).kind, VerdictKind::ZeroPoly);
        // nonzero constants are vacuously all-real-negative
        let v = classify_zeros(&Poly::from_ints(&[7]));
        assert_eq!(v.kind, VerdictKind::AllRealNegative);
        assert_eq!(v.real_root_count, 0);
    }

    #[test]
    fn root_at_origin_disqualifies_negative() {
        // x(1+x)^2: all real, nonpositive, but not strictly negative
        let p = &Poly::from_ints(&[0, 1]) * &Poly::from_ints(&[1, 2, 1]);
        let v = classify_zeros(&p);
        assert_eq!(v.kind, VerdictKind::AllReal);
        assert_eq!(v.real_root_count, 3);
        assert_eq!(v.negative_root_count, 2);
        assert_eq!(v.certificate.zero_root_multiplicity, 1);
        assert!(v.certificate.all_real_nonpositive);
    }

    #[test]
    fn multiplicities_counted() {
        // (1+x)^3 (x-2)^2: 5 real roots with multiplicity, 3 negative
        let p = &Poly::from_ints(&[1, 1]).pow(3) * &Poly::from_ints(&[-2, 1]).pow(2);
        let v = classify_zeros(&p);
        assert_eq!(v.kind, VerdictKind::AllReal);
        assert_eq!(v.real_root_count, 5);
        assert_eq!(v.negative_root_count, 3);
        assert_eq!(v.positive_root_count(), 2);
        assert!(!v.all_real_same_sign());
    }

    #[test]
    fn mixed_real_and_complex() {
        // (x^2+1)(1+x)^2: 2 real of 4
        let p = &Poly::from_ints(&[1, 0, 1]) * &Poly::from_ints(&[1, 2, 1]);
        let v = classify_zeros(&p);
        assert_eq!(v.kind, VerdictKind::NotAllReal);
        assert_eq!(v.real_root_count, 2);
        assert_eq!(v.negative_root_count, 2);
    }
}
