//! Exact coefficient generators for entire-function series, exact partial
//! sums at rational points, and rigorously certified tail enclosures.
//!
//! Every generator here is of factorial type: `b_k = N(k) / prod_s (k+s)!`
//! with a numerator polynomial `N` that has nonnegative coefficients and
//! `N(0) > 0`. That structure is what makes the tail argument finite:
//!
//! * positivity: `b_k > 0` for every `k`, so at a negative evaluation
//!   point the terms strictly alternate in sign;
//! * the one-step magnitude ratio is the explicit rational function
//!   `|x0| * w_j(k+1)/w_j(k) * N(k+1) / (N(k) prod_s (k+s+1))`, so the
//!   statement "ratio <= 1/2 for ALL k >= E" reduces to nonnegativity of
//!   a single polynomial on `[E, oo)`, which is certified by shifting the
//!   polynomial to `E` and checking that every coefficient is nonnegative.
//!
//! Together with a termwise monotonicity check on `[n+1, E]` this bounds
//! the tail by its first omitted term, with no asymptotic hand-waving.

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::num::{decimal_truncated, factorial, falling, format_rational, rat_int, Rational};
use crate::poly::Poly;

/// Exact coefficient generator for an entire-function series.
pub trait SeriesGen: Send + Sync {
    /// `b_k`, exact, total for `k >= 0`.
    fn coeff(&self, k: usize) -> Rational;

    fn description(&self) -> String;

    /// `b_{k+1}/b_k` as an explicit rational function of `k`, valid for all
    /// `k >= 0`, with numerator and denominator both positive on `k >= 0`.
    /// `None` means the generator carries no global ratio certificate and
    /// tail bounds will be refused.
    fn ratio_fn(&self) -> Option<RatioFn> {
        None
    }

    /// True only for the identically-zero series, whose tails are zero.
    fn is_identically_zero(&self) -> bool {
        false
    }
}

/// `b_{k+1}/b_k = num(k)/den(k)`.
pub struct RatioFn {
    pub num: Poly,
    pub den: Poly,
}

/// `b_k = numer(k) / prod_s (k+s)!` with nonnegative-coefficient `numer`.
pub struct FactorialSeries {
    numer: Poly,
    shifts: Vec<usize>,
    desc: String,
}

impl FactorialSeries {
    fn new(numer: Poly, shifts: Vec<usize>, desc: String) -> Self {
        assert!(
            !numer.is_zero(),
            "factorial series numerator must be nonzero"
        );
        assert!(
            numer.coeffs().iter().all(|c| !c.is_negative()),
            "factorial series numerator must have nonnegative coefficients"
        );
        assert!(
            numer.coeff(0).is_positive(),
            "factorial series numerator must be positive at 0"
        );
        Self {
            numer,
            shifts,
            desc,
        }
    }

    /// Coefficients of `s_r[exp]`: `a_k^2 - a_{k-r} a_{k+r}` with
    /// `a_k = 1/k!`, in the single closed form
    /// `[prod_{i=1..r}(k+i) - prod_{i=0..r-1}(k-i)] / (k! (k+r)!)`.
    /// The subtracted product vanishes at the integers `0..r-1`, which is
    /// exactly where `a_{k-r}` vanishes, so the form holds for all `k`.
    pub fn sr(r: usize) -> Self {
        assert!(r >= 1, "s_0 is the zero operator; use gen_sr_exp");
        let numer = &rising_product(1, r) - &falling_product(r);
        Self::new(numer, vec![0, r], format!("s_{r}[exp]"))
    }

    /// Coefficients of `s_tilde_r[exp]`: `a_k a_{k+1} - a_{k-r} a_{k+r+1}`
    /// as `[prod_{i=2..r+1}(k+i) - prod_{i=0..r-1}(k-i)] / (k! (k+r+1)!)`.
    pub fn sr_tilde(r: usize) -> Self {
        assert!(
            r >= 1,
            "s_tilde_0 is the zero operator; use gen_srtilde_exp"
        );
        let numer = &rising_product(2, r + 1) - &falling_product(r);
        Self::new(numer, vec![0, r + 1], format!("s_tilde_{r}[exp]"))
    }

    /// Coefficients of `f_d[exp]`: `prod_{j<d} j!/(k+j)!`.
    pub fn fd(d: usize) -> Self {
        assert!(d >= 1, "f_d requires d >= 1");
        let mut c = Rational::one();
        for j in 0..d {
            c *= Rational::from_integer(factorial(j));
        }
        Self::new(Poly::constant(c), (0..d).collect(), format!("f_{d}[exp]"))
    }

    /// Coefficients of `j[exp]`: `4 / (k! (k+1)! ((k+2)!)^2)`.
    pub fn j() -> Self {
        Self::new(
            Poly::constant(rat_int(4)),
            vec![0, 1, 2, 2],
            "j[exp]".to_string(),
        )
    }

    /// Coefficients of `exp` itself: `1/k!`.
    pub fn exp() -> Self {
        Self::new(Poly::one(), vec![0], "exp".to_string())
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }
}

/// `prod_{i=lo..=hi} (x + i)`.
fn rising_product(lo: usize, hi: usize) -> Poly {
    let mut acc = Poly::one();
    for i in lo..=hi {
        acc = &acc * &Poly::new(vec![rat_int(i as i64), Rational::one()]);
    }
    acc
}

/// `prod_{i=0..r-1} (x - i)`.
fn falling_product(r: usize) -> Poly {
    let mut acc = Poly::one();
    for i in 0..r {
        acc = &acc * &Poly::new(vec![rat_int(-(i as i64)), Rational::one()]);
    }
    acc
}

impl SeriesGen for FactorialSeries {
    fn coeff(&self, k: usize) -> Rational {
        let mut den = Rational::one();
        for &s in &self.shifts {
            den *= Rational::from_integer(factorial(k + s));
        }
        self.numer.eval(&rat_int(k as i64)) / den
    }

    fn description(&self) -> String {
        self.desc.clone()
    }

    fn ratio_fn(&self) -> Option<RatioFn> {
        let num = self.numer.shift_var(&Rational::one());
        let mut den = self.numer.clone();
        for &s in &self.shifts {
            den = &den * &Poly::new(vec![rat_int((s + 1) as i64), Rational::one()]);
        }
        Some(RatioFn { num, den })
    }
}

/// The identically-zero series (image of `s_0` and `s_tilde_0`).
pub struct ZeroSeries;

impl SeriesGen for ZeroSeries {
    fn coeff(&self, _k: usize) -> Rational {
        Rational::zero()
    }
    fn description(&self) -> String {
        "0".to_string()
    }
    fn is_identically_zero(&self) -> bool {
        true
    }
}

pub fn gen_sr_exp(r: usize) -> Box<dyn SeriesGen> {
    if r == 0 {
        Box::new(ZeroSeries)
    } else {
        Box::new(FactorialSeries::sr(r))
    }
}

pub fn gen_srtilde_exp(r: usize) -> Box<dyn SeriesGen> {
    if r == 0 {
        Box::new(ZeroSeries)
    } else {
        Box::new(FactorialSeries::sr_tilde(r))
    }
}

pub fn gen_fd_exp(d: usize) -> Result<Box<dyn SeriesGen>, Error> {
    if d == 0 {
        return Err(Error::InvalidInput("f_d requires d >= 1".into()));
    }
    Ok(Box::new(FactorialSeries::fd(d)))
}

pub fn gen_j_exp() -> Box<dyn SeriesGen> {
    Box::new(FactorialSeries::j())
}

pub fn gen_exp() -> Box<dyn SeriesGen> {
    Box::new(FactorialSeries::exp())
}

/// Resolves a generator spec: `sr:6`, `srtilde:6`, `fd:3`, `j`, `exp`.
pub fn lookup_series(spec: &str) -> Result<Box<dyn SeriesGen>, Error> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let parse = |a: Option<&str>| -> Result<usize, Error> {
        a.ok_or_else(|| Error::Parse(format!("{name} requires an integer argument: {name}:N")))?
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer in series spec {spec:?}")))
    };
    match name {
        "sr" => Ok(gen_sr_exp(parse(arg)?)),
        "srtilde" => Ok(gen_srtilde_exp(parse(arg)?)),
        "fd" => gen_fd_exp(parse(arg)?),
        "j" => Ok(gen_j_exp()),
        "exp" => Ok(gen_exp()),
        _ => Err(Error::Parse(format!(
            "unknown series generator {name:?}; known: sr:R, srtilde:R, fd:D, j, exp"
        ))),
    }
}

/// Exact `j`-th derivative of the partial sum:
/// `sum_{k=j}^n k(k-1)...(k-j+1) b_k x0^(k-j)`.
pub fn partial_sum(gen: &dyn SeriesGen, n: usize, x0: &Rational, j: usize) -> Rational {
    let mut acc = Rational::zero();
    let mut power = Rational::one();
    for k in j..=n {
        let w = Rational::from_integer(falling(k, j));
        acc += w * gen.coeff(k) * &power;
        power *= x0;
    }
    acc
}

/// A rational interval certified to contain a real value.
#[derive(Debug, Clone, PartialEq)]
pub struct Enclosure {
    lo: Rational,
    hi: Rational,
}

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        Self { lo, hi }
    }

    pub fn point(v: Rational) -> Self {
        Self {
            lo: v.clone(),
            hi: v,
        }
    }

    /// `[center - radius, center + radius]`, `radius >= 0`.
    pub fn centered(center: &Rational, radius: &Rational) -> Self {
        assert!(!radius.is_negative());
        Self {
            lo: center - radius,
            hi: center + radius,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, other: &Enclosure) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn add(&self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }

    pub fn sub(&self, rhs: &Enclosure) -> Enclosure {
        Enclosure {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }

    pub fn mul(&self, rhs: &Enclosure) -> Enclosure {
        let products = [
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ];
        let lo = products.iter().min().expect("nonempty").clone();
        let hi = products.iter().max().expect("nonempty").clone();
        Enclosure { lo, hi }
    }

    /// Image of the interval under squaring (tighter than `mul(self)`).
    pub fn square(&self) -> Enclosure {
        let lo2 = &self.lo * &self.lo;
        let hi2 = &self.hi * &self.hi;
        if !self.lo.is_negative() {
            Enclosure { lo: lo2, hi: hi2 }
        } else if !self.hi.is_positive() {
            Enclosure { lo: hi2, hi: lo2 }
        } else {
            Enclosure {
                lo: Rational::zero(),
                hi: lo2.max(hi2),
            }
        }
    }
}

impl Serialize for Enclosure {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Enclosure", 4)?;
        s.serialize_field("lo", &format_rational(&self.lo))?;
        s.serialize_field("hi", &format_rational(&self.hi))?;
        s.serialize_field("decimal_lo", &decimal_truncated(&self.lo, 15))?;
        s.serialize_field("decimal_hi", &decimal_truncated(&self.hi, 15))?;
        s.end()
    }
}

/// Evidence that the series tail past `start_index` is bounded by `bound`:
/// term magnitudes were verified nonincreasing on the checked window, the
/// window-edge ratio is recorded, and beyond the horizon a polynomial
/// certificate pins the one-step ratio at or below 1/2.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TailCertificate {
    pub start_index: usize,
    pub checked_horizon: usize,
    #[serde(serialize_with = "ser_rational")]
    pub geometric_ratio: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub bound: Rational,
    pub decimal_bound: String,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

const TAIL_WINDOW: usize = 200;
const TAIL_ESCALATIONS: usize = 3;

/// Certifies `|E_n^(j)(x0)| <= bound` for the `j`-th derivative tail
/// `sum_{k>n} k(k-1)...(k-j+1) b_k x0^(k-j)` and returns the tail
/// enclosure `[-bound, bound]` with its certificate.
///
/// Fails loudly (`Error::NotCertified`) whenever any hypothesis cannot be
/// verified: the bound must never be trusted on a best-effort basis.
pub fn tail_enclosure(
    gen: &dyn SeriesGen,
    n: usize,
    x0: &Rational,
    j: usize,
) -> Result<(Enclosure, TailCertificate), Error> {
    if j > 2 {
        return Err(Error::InvalidInput(
            "tail_enclosure supports j in {0, 1, 2}".into(),
        ));
    }
    let start = n + 1;
    let zero_certificate = |horizon: usize| TailCertificate {
        start_index: start,
        checked_horizon: horizon,
        geometric_ratio: Rational::zero(),
        bound: Rational::zero(),
        decimal_bound: "0".to_string(),
    };
    if gen.is_identically_zero() || x0.is_zero() {
        return Ok((Enclosure::point(Rational::zero()), zero_certificate(start)));
    }
    if x0.is_positive() {
        return Err(Error::NotCertified(
            "tail terms alternate only for x0 < 0; positive points are not supported".into(),
        ));
    }

    let ratio = gen.ratio_fn().ok_or_else(|| {
        Error::NotCertified(format!(
            "generator {} has no global term-ratio certificate",
            gen.description()
        ))
    })?;
    for (label, p) in [("numerator", &ratio.num), ("denominator", &ratio.den)] {
        if p.is_zero() || p.coeffs().iter().any(|c| c.is_negative()) || !p.coeff(0).is_positive() {
            return Err(Error::NotCertified(format!(
                "ratio-function {label} is not manifestly positive on k >= 0"
            )));
        }
    }
    if !gen.coeff(0).is_positive() {
        return Err(Error::NotCertified(
            "series coefficients are not certified positive (b_0 <= 0)".into(),
        ));
    }

    let abs_x0 = x0.abs();
    // Terms with k < j have zero weight; the tail effectively starts there.
    let start = start.max(j);
    // |T_k| for k in [start, horizon]; signs alternate because b_k > 0
    // (b_0 > 0 plus positive ratio function) and x0 < 0.
    let magnitudes = |horizon: usize| -> Result<Vec<Rational>, Error> {
        let mut mags = Vec::with_capacity(horizon - start + 1);
        let mut power = crate::num::pow(&abs_x0, start - j);
        for k in start..=horizon {
            let b = gen.coeff(k);
            if !b.is_positive() {
                return Err(Error::NotCertified(format!(
                    "coefficient b_{k} of {} is not positive",
                    gen.description()
                )));
            }
            // consistency of the declared ratio function with the coefficients
            if k < horizon {
                let lhs = gen.coeff(k + 1) * ratio.den.eval(&rat_int(k as i64));
                let rhs = &b * ratio.num.eval(&rat_int(k as i64));
                if lhs != rhs {
                    return Err(Error::NotCertified(format!(
                        "ratio function inconsistent with coefficients at k = {k}"
                    )));
                }
            }
            mags.push(Rational::from_integer(falling(k, j)) * b * &power);
            power *= &abs_x0;
        }
        Ok(mags)
    };

    let half = Rational::new(1.into(), 2.into());
    let mut last_failure = String::new();
    for attempt in 1..=TAIL_ESCALATIONS {
        let horizon = start + TAIL_WINDOW * attempt;
        let mags = magnitudes(horizon)?;

        if let Some(k) = (0..mags.len() - 1).find(|&i| mags[i + 1] > mags[i]) {
            return Err(Error::NotCertified(format!(
                "term magnitudes increase at k = {}; enlarge n",
                start + k
            )));
        }

        let edge_ratio = &mags[mags.len() - 1] / &mags[mags.len() - 2];
        if edge_ratio > half {
            last_failure = format!(
                "window-edge ratio {} exceeds 1/2 at horizon {horizon}",
                format_rational(&edge_ratio)
            );
            continue;
        }

        // D(x) = (1/2)(x+1-j) den(x) - |x0| (x+1) num(x) >= 0 on [horizon, oo),
        // certified by nonnegative coefficients after shifting to the horizon.
        let lin_weight = Poly::new(vec![rat_int(1 - j as i64), Rational::one()]);
        let lhs = (&lin_weight * &ratio.den).scale(&half);
        let rhs = (&Poly::from_ints(&[1, 1]) * &ratio.num).scale(&abs_x0);
        let gap = &lhs - &rhs;
        let shifted = gap.shift_var(&rat_int(horizon as i64));
        if shifted.coeffs().iter().any(|c| c.is_negative()) {
            last_failure = format!(
                "geometric domination past horizon {horizon} not certified by coefficient signs"
            );
            continue;
        }

        let bound = mags[0].clone();
        let certificate = TailCertificate {
            start_index: start,
            checked_horizon: horizon,
            geometric_ratio: edge_ratio,
            decimal_bound: decimal_truncated(&bound, 15),
            bound: bound.clone(),
        };
        return Ok((Enclosure::centered(&Rational::zero(), &bound), certificate));
    }
    Err(Error::NotCertified(last_failure))
}

/// Everything behind a certified enclosure of `(f')^2 - f f''` at `x0`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LaguerreEvidence {
    /// Exact `f_n^(j)(x0)` for j = 0, 1, 2.
    #[serde(serialize_with = "ser_rational_array")]
    pub partial_sums: [Rational; 3],
    /// Decimal renderings of the partial sums (truncated, 15 digits).
    pub decimal_partial_sums: [String; 3],
    pub tails: [TailCertificate; 3],
    /// Certified enclosures of `f^(j)(x0)`.
    pub derivative_enclosures: [Enclosure; 3],
    /// Certified enclosure of `(f')^2 - f f''` at `x0`.
    pub enclosure: Enclosure,
}

fn ser_rational_array<S: Serializer>(arr: &[Rational; 3], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(3))?;
    for r in arr {
        seq.serialize_element(&format_rational(r))?;
    }
    seq.end()
}

/// Interval arithmetic over exact rationals: combines the three partial
/// sums and tail bounds into a certified enclosure of `(f')^2 - f f''`.
pub fn laguerre_l1_enclosure(
    gen: &dyn SeriesGen,
    n: usize,
    x0: &Rational,
) -> Result<LaguerreEvidence, Error> {
    let derivative = |j: usize| -> Result<(Rational, TailCertificate, Enclosure), Error> {
        let sum = partial_sum(gen, n, x0, j);
        let (tail_range, certificate) = tail_enclosure(gen, n, x0, j)?;
        let value = Enclosure::point(sum.clone()).add(&tail_range);
        Ok((sum, certificate, value))
    };
    let (s0, t0, v0) = derivative(0)?;
    let (s1, t1, v1) = derivative(1)?;
    let (s2, t2, v2) = derivative(2)?;
    let enclosure = v1.square().sub(&v0.mul(&v2));
    let decimal = |r: &Rational| decimal_truncated(r, 15);
    Ok(LaguerreEvidence {
        decimal_partial_sums: [decimal(&s0), decimal(&s1), decimal(&s2)],
        partial_sums: [s0, s1, s2],
        tails: [t0, t1, t2],
        derivative_enclosures: [v0, v1, v2],
        enclosure,
    })
}

/// The n-th Laguerre-type expression of a polynomial:
/// `L_n(p) = sum_{k=0}^{2n} (-1)^(k+n)/(2n)! C(2n,k) p^(k) p^(2n-k)`.
/// `L_0(p) = p^2` and `L_1(p) = (p')^2 - p p''`.
pub fn laguerre_ln_poly(p: &Poly, n: usize) -> Poly {
    let order = 2 * n;
    let mut derivatives = Vec::with_capacity(order + 1);
    derivatives.push(p.clone());
    for _ in 0..order {
        let next = derivatives.last().expect("nonempty").derivative();
        derivatives.push(next);
    }
    let inv_fact = Rational::new(1.into(), factorial(order));
    let mut acc = Poly::zero();
    for k in 0..=order {
        let mut c = Rational::from_integer(crate::num::binomial(order, k)) * &inv_fact;
        if (k + n) % 2 == 1 {
            c = -c;
        }
        acc = &acc + &(&derivatives[k] * &derivatives[order - k]).scale(&c);
    }
    acc
}
