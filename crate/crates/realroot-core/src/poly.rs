//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending powers with trailing zeros
//! stripped; the empty coefficient list is the zero polynomial. All
//! arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::num::{binomial, factorial, rat_int, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    /// Builds a polynomial from ascending-power coefficients, stripping
    /// trailing zeros.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// Convenience constructor from small integers, ascending powers.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `(1 + x)^n` expanded.
    pub fn one_plus_x_pow(n: usize) -> Self {
        Self::new(
            (0..=n)
                .map(|k| Rational::from_integer(binomial(n, k)))
                .collect(),
        )
    }

    /// Partial sum of the exponential series, `sum_{k<=m} x^k / k!`.
    pub fn exp_truncation(m: usize) -> Self {
        Self::new(
            (0..=m)
                .map(|k| Rational::new(1.into(), factorial(k)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the stored range.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient accessor over all of `Z`: zero for negative powers and
    /// past the degree. This is the zero-extension used by the transforms.
    pub fn coeff_i(&self, k: i64) -> Rational {
        if k < 0 {
            Rational::zero()
        } else {
            self.coeff(k as usize)
        }
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitutes `q` for the variable: `self(q(x))`, by Horner.
    pub fn compose(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::constant(c.clone());
        }
        acc
    }

    /// `self(x + shift)`.
    pub fn shift_var(&self, shift: &Rational) -> Poly {
        self.compose(&Poly::new(vec![shift.clone(), Rational::one()]))
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Leading coefficient forced to 1; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Poly> {
        let lead = self.leading()?;
        Some(self.scale(&lead.recip()))
    }

    /// Divides by the largest positive rational that leaves the
    /// coefficients integral and primitive. The sign of every coefficient
    /// is preserved, which keeps Sturm sign sequences valid.
    pub fn primitive_sign_preserving(&self) -> Poly {
        use num_bigint::BigInt;
        use num_integer::Integer;
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        Poly {
            coeffs: ints
                .into_iter()
                .map(|v| Rational::from_integer(v / &content))
                .collect(),
        }
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    pub fn div_rem(&self, div: &Poly) -> Result<(Poly, Poly), Error> {
        let ddeg = div.degree().ok_or(Error::ZeroPolynomial)?;
        let dlead = div.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let rlead = rem.last().expect("nonempty").clone();
            let shift = rem.len() - 1 - ddeg;
            let factor = rlead / &dlead;
            for (i, dc) in div.coeffs.iter().enumerate() {
                let t = dc * &factor;
                rem[shift + i] -= t;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("b nonzero").1;
            a = b;
            b = r;
        }
        a.monic().unwrap_or_else(Poly::zero)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rat;

    #[test]
    fn zero_poly_representation() {
        assert!(Poly::new(vec![Rational::zero(), Rational::zero()]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[3]).degree(), Some(0));
    }

    #[test]
    fn eval_root_of_square() {
        // (1+x)^2 at -1
        let p = Poly::from_ints(&[1, 2, 1]);
        assert!(p.eval(&rat_int(-1)).is_zero());
        assert_eq!(p.eval(&rat_int(2)), rat_int(9));
    }

    #[test]
    fn derivative_of_cube() {
        let p = Poly::monomial(Rational::one(), 3);
        assert_eq!(p.derivative(), Poly::from_ints(&[0, 0, 3]));
    }

    #[test]
    fn p6_constant_term() {
        let p6 = Poly::from_ints(&[5040, 35280, 52920, 29400, 6360, 552, 16]);
        assert_eq!(p6.eval(&rat_int(0)), rat_int(5040));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Poly::from_ints(&[2, 0, -3, 1, 4]);
        let b = Poly::from_ints(&[1, 1, 2]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let f = Poly::from_ints(&[1, 1]); // 1 + x
        let a = &f * &Poly::from_ints(&[2, 0, 1]);
        let b = &f * &Poly::from_ints(&[-3, 1]);
        assert_eq!(a.gcd(&b), f.monic().unwrap());
    }

    #[test]
    fn compose_shift() {
        // (x^2)(x+1) = x^2 + 2x + 1
        let p = Poly::monomial(Rational::one(), 2);
        assert_eq!(p.shift_var(&rat_int(1)), Poly::from_ints(&[1, 2, 1]));
    }

    #[test]
    fn primitive_keeps_signs() {
        let p = Poly::new(vec![rat(-2, 3), rat(4, 9), rat(-8, 3)]);
        let q = p.primitive_sign_preserving();
        assert_eq!(q, Poly::from_ints(&[-3, 2, -12]));
    }

    #[test]
    fn display_format() {
        let p = Poly::from_ints(&[5040, 35280, 0, -3]);
        assert_eq!(p.to_string(), "5040 + 35280*x - 3*x^3");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
