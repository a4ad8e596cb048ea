//! Rational scalar helpers: parsing, formatting, factorial-type products
//! and exact decimal rendering.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// All scalar quantities in this crate are arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// `n/d` as a rational. Panics if `d == 0`; test/construction convenience.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"num/den"` or a plain integer string (optional sign, underscores
/// not accepted). The denominator must be positive after normalization.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator: {s:?}")))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator: {s:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"num"` for integers, `"num/den"` otherwise.
/// Round-trips bit-exactly through [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

thread_local! {
    static FACTORIALS: std::cell::RefCell<Vec<BigInt>> =
        std::cell::RefCell::new(vec![BigInt::one()]);
}

/// `n!` as a big integer, memoized per thread: series evaluation and the
/// tail windows hit the same factorials thousands of times.
pub fn factorial(n: usize) -> BigInt {
    FACTORIALS.with(|cell| {
        let mut cache = cell.borrow_mut();
        while cache.len() <= n {
            let next = cache.last().expect("seeded with 0!") * BigInt::from(cache.len());
            cache.push(next);
        }
        cache[n].clone()
    })
}

/// `1/n!` as a rational.
pub fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Falling factorial `k (k-1) ... (k-j+1)`; the empty product for `j = 0`.
pub fn falling(k: usize, j: usize) -> BigInt {
    if j > k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..j {
        acc *= BigInt::from(k - i);
    }
    acc
}

/// Pochhammer symbol `(m)_j = m (m+1) ... (m+j-1)`; 1 for `j = 0`.
pub fn pochhammer(m: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = m.clone();
    for _ in 0..j {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `x^e` for nonnegative `e`.
pub fn pow(x: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

/// Sign and scientific-notation parts of a nonzero rational, truncated
/// toward zero: returns `(negative, digits, exp)` such that the value is
/// `±0.digits × 10^(exp+1)`, i.e. the first digit is the leading one and
/// `value ≈ ±d.igits × 10^exp`. Exact integer arithmetic throughout.
pub fn sci_parts(r: &Rational, sig_digits: usize) -> Option<(bool, String, i64)> {
    if r.is_zero() || sig_digits == 0 {
        return None;
    }
    let negative = r.is_negative();
    let a = r.numer().abs();
    let b = r.denom().clone();

    // exp = floor(log10(a/b)): start from digit-count difference, adjust.
    let mut exp = a.to_string().len() as i64 - b.to_string().len() as i64;
    let ten = BigInt::from(10);
    loop {
        // a/b >= 10^exp  <=>  a * 10^(-exp clamped) ... compare cross-multiplied
        let (lhs, rhs) = if exp >= 0 {
            (a.clone(), &b * ten.pow(exp as u32))
        } else {
            (&a * ten.pow((-exp) as u32), b.clone())
        };
        if lhs < rhs {
            exp -= 1;
            continue;
        }
        let (lhs2, rhs2) = if exp + 1 >= 0 {
            (a.clone(), &b * ten.pow((exp + 1) as u32))
        } else {
            (&a * ten.pow((-(exp + 1)) as u32), b.clone())
        };
        if lhs2 >= rhs2 {
            exp += 1;
            continue;
        }
        break;
    }

    // mantissa = floor(|r| * 10^(sig-1-exp)), exactly sig_digits digits
    let shift = sig_digits as i64 - 1 - exp;
    let mantissa = if shift >= 0 {
        (&a * ten.pow(shift as u32)) / &b
    } else {
        &a / (&b * ten.pow((-shift) as u32))
    };
    debug_assert_eq!(mantissa.sign(), Sign::Plus);
    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), sig_digits);
    Some((negative, digits, exp))
}

/// Decimal rendering with `sig_digits` significant digits, truncated toward
/// zero, in scientific notation (`-5.354465e-2`). Zero renders as `"0"`.
/// The exact rational is the source of truth; this is display only.
pub fn decimal_truncated(r: &Rational, sig_digits: usize) -> String {
    match sci_parts(r, sig_digits) {
        None => "0".to_string(),
        Some((neg, digits, exp)) => {
            let sign = if neg { "-" } else { "" };
            if digits.len() == 1 {
                format!("{sign}{digits}e{exp}")
            } else {
                format!("{sign}{}.{}e{exp}", &digits[..1], &digits[1..])
            }
        }
    }
}
