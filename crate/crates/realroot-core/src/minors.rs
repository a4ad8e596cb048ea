//! Toeplitz minors of coefficient sequences and their closed-form
//! counterparts: Stanley's product formula for binomial sequences, the
//! factorial product for the exponential sequence, and the hypergeometric
//! polynomial constructions built from ratios of binomials.

use num_traits::{One, Zero};

use crate::error::Error;
use crate::gamma::GammaSeq;
use crate::num::{binomial, factorial, pochhammer, rat_int, Rational};
use crate::poly::Poly;

/// Determinant by fraction-free Bareiss elimination. Exact over rationals;
/// intermediate entries stay of subresultant size instead of blowing up.
pub fn bareiss_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i64;
    let mut prev_pivot = Rational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev_pivot;
            }
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// The d-by-d minor `det(a_{k-i+j})`, `0 <= i, j <= d-1`, of the Toeplitz
/// matrix generated by `seq` (indices below zero read as zero).
pub fn toeplitz_minor(seq: &dyn GammaSeq, k: usize, d: usize) -> Rational {
    let m: Vec<Vec<Rational>> = (0..d as i64)
        .map(|i| {
            (0..d as i64)
                .map(|j| {
                    let idx = k as i64 - i + j;
                    if idx < 0 {
                        Rational::zero()
                    } else {
                        seq.value(idx as usize)
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(m)
}

/// Stanley's product formula for the minors of the binomial sequence
/// `a_k = C(n, k)`:
///
/// `D_k^(d) = prod_{j=0}^{d-1} C(n+j, k+j) / C(n-k+j, n-k)`
pub fn stanley_product(n: usize, d: usize, k: usize) -> Result<Rational, Error> {
    if k > n {
        return Err(Error::InvalidInput(format!(
            "stanley_product requires 0 <= k <= n, got k={k}, n={n}"
        )));
    }
    let mut acc = Rational::one();
    for j in 0..d {
        acc *= Rational::new(binomial(n + j, k + j), binomial(n - k + j, n - k));
    }
    Ok(acc)
}

/// Closed form for the minors of the exponential sequence `a_k = 1/k!`:
///
/// `D_k^(d) = prod_{j=0}^{d-1} j!/(k+j)!`
pub fn exp_minor_product(d: usize, k: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..d {
        acc *= Rational::new(factorial(j), factorial(k + j));
    }
    acc
}

/// The degree-n polynomial
/// `B(x) = sum_k C(n,k) [(n+d)! d! / ((k+d)! (n-k+d)!)] x^k`,
/// real-negative-rooted for every `n, d`.
pub fn b_poly(n: usize, d: usize) -> Poly {
    let fixed = Rational::from_integer(factorial(n + d) * factorial(d));
    Poly::new(
        (0..=n)
            .map(|k| {
                Rational::from_integer(binomial(n, k)) * &fixed
                    / Rational::from_integer(factorial(k + d) * factorial(n - k + d))
            })
            .collect(),
    )
}

/// The hypergeometric-type polynomial
/// `sum_k C(n,k) [prod_i C(n+a_i, k+a_i) / C(n-k+a_i, n-k)] x^k`
/// for a set of distinct positive integers `a_i`; `(1+x)^n` for the empty
/// set.
pub fn hypergeom_poly(alphas: &[usize], n: usize) -> Result<Poly, Error> {
    for (idx, &a) in alphas.iter().enumerate() {
        if a == 0 {
            return Err(Error::InvalidInput(
                "hypergeom_poly requires positive alphas".into(),
            ));
        }
        if alphas[..idx].contains(&a) {
            return Err(Error::InvalidInput(
                "hypergeom_poly requires distinct alphas".into(),
            ));
        }
    }
    let coeffs = (0..=n)
        .map(|k| {
            let mut c = Rational::from_integer(binomial(n, k));
            for &a in alphas {
                c *= Rational::new(binomial(n + a, k + a), binomial(n - k + a, n - k));
            }
            c
        })
        .collect();
    Ok(Poly::new(coeffs))
}

/// The same coefficient written with Pochhammer symbols:
/// `[(n-k+1)_k / k!] * prod_i [(n-k+a_i+1)_k / (a_i+1)_k]`.
/// Used as an independent route to cross-check [`hypergeom_poly`].
pub fn hypergeom_coeff_pochhammer(alphas: &[usize], n: usize, k: usize) -> Rational {
    let mut c = pochhammer(&rat_int((n - k + 1) as i64), k) / Rational::from_integer(factorial(k));
    for &a in alphas {
        c *= pochhammer(&rat_int((n - k + a + 1) as i64), k)
            / pochhammer(&rat_int((a + 1) as i64), k);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{BinomialRow, ShiftedFactorial};
    use crate::num::rat;
    use crate::sturm::{classify_zeros, VerdictKind};

    #[test]
    fn bareiss_small_matrices() {
        assert_eq!(bareiss_det(vec![]), rat_int(1));
        assert_eq!(bareiss_det(vec![vec![rat(3, 2)]]), rat(3, 2));
        let m = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(3), rat_int(4)]];
        assert_eq!(bareiss_det(m), rat_int(-2));
        // singular
        let s = vec![vec![rat_int(1), rat_int(2)], vec![rat_int(2), rat_int(4)]];
        assert_eq!(bareiss_det(s), rat_int(0));
        // needs a row swap
        let w = vec![vec![rat_int(0), rat_int(1)], vec![rat_int(1), rat_int(0)]];
        assert_eq!(bareiss_det(w), rat_int(-1));
    }

    #[test]
    fn minor_d1_is_the_sequence() {
        let seq = ShiftedFactorial { j: 0 };
        assert_eq!(toeplitz_minor(&seq, 5, 1), rat(1, 120));
    }

    #[test]
    fn binomial_minor_matches_product() {
        // n=4, k=1, d=2
        let seq = BinomialRow { n: 4 };
        assert_eq!(
            toeplitz_minor(&seq, 1, 2),
            stanley_product(4, 2, 1).unwrap()
        );
    }

    #[test]
    fn stanley_product_values() {
        // d=1 reduces to C(n,k)
        assert_eq!(stanley_product(7, 1, 3).unwrap(), rat_int(35));
        // worked 2x2 case
        assert_eq!(stanley_product(4, 2, 2).unwrap(), rat_int(20));
        // triangular minor at k=0
        assert_eq!(stanley_product(3, 3, 0).unwrap(), rat_int(1));
        assert!(stanley_product(3, 1, 4).is_err());
    }

    #[test]
    fn exp_minor_values() {
        assert_eq!(exp_minor_product(1, 4), rat(1, 24));
        // d=3, k=2: (0!/2!)(1!/3!)(2!/4!) = 1/144
        assert_eq!(exp_minor_product(3, 2), rat(1, 144));
        assert_eq!(exp_minor_product(2, 0), rat_int(1));
        // against the determinant
        let seq = ShiftedFactorial { j: 0 };
        assert_eq!(toeplitz_minor(&seq, 2, 3), rat(1, 144));
    }

    #[test]
    fn b_poly_small() {
        // n=0: constant
        assert_eq!(b_poly(0, 3).degree(), Some(0));
        // n=1, d=1: linear with a negative root
        let p = b_poly(1, 1);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(classify_zeros(&p).kind, VerdictKind::AllRealNegative);
    }

    #[test]
    fn hypergeom_empty_is_binomial_power() {
        assert_eq!(hypergeom_poly(&[], 6).unwrap(), Poly::one_plus_x_pow(6));
    }

    #[test]
    fn hypergeom_single_alpha_matches_b_poly() {
        for (n, d) in [(1usize, 1usize), (4, 2), (6, 3)] {
            assert_eq!(hypergeom_poly(&[d], n).unwrap(), b_poly(n, d));
        }
    }

    #[test]
    fn hypergeom_rejects_bad_alphas() {
        assert!(hypergeom_poly(&[0], 3).is_err());
        assert!(hypergeom_poly(&[2, 2], 3).is_err());
    }

    #[test]
    fn pochhammer_route_agrees() {
        for n in 0..=8usize {
            for k in 0..=n {
                for alphas in [vec![], vec![1], vec![2], vec![1, 3]] {
                    let direct = hypergeom_poly(&alphas, n).unwrap().coeff(k);
                    let poch = hypergeom_coeff_pochhammer(&alphas, n, k);
                    assert_eq!(direct, poch, "n={n} k={k} alphas={alphas:?}");
                }
            }
        }
    }
}
