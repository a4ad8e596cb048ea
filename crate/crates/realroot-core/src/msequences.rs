//! Multiplier-sequence diagnostics: the finite-horizon Pólya–Schur test,
//! rapidly-decreasing-sequence checks, and exploratory sweeps of the
//! `s_r` transforms over polynomial families.
//!
//! Verdicts here are always horizon-qualified. The tool never asserts the
//! universally quantified multiplier-sequence property; it reports either
//! "consistent up to N" or a concrete refuting degree.

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Error;
use crate::gamma::GammaSeq;
use crate::num::{format_rational, rat_int, Rational};
use crate::poly::Poly;
use crate::sturm::{classify_zeros, RootVerdict, VerdictKind};
use crate::transforms::{apply_gamma, s_r, s_tilde_r};

/// One row of a Pólya–Schur horizon check.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MsRow {
    pub n: usize,
    pub verdict: RootVerdict,
}

/// Horizon-qualified multiplier-sequence verdict: consistent iff every
/// `T[(1+x)^n]`, `n <= horizon`, has only real zeros of one sign (or is
/// zero).
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MsVerdict {
    pub horizon: usize,
    pub per_n: Vec<MsRow>,
    pub consistent_up_to_horizon: bool,
    /// Smallest degree at which the criterion fails, if any.
    pub refuting_n: Option<usize>,
}

/// Applies `gamma` diagonally to `(1+x)^n` for every `n <= horizon` and
/// classifies each image by Sturm sequences. Per-degree checks run in
/// parallel; the report order is deterministic.
pub fn polya_schur_check(gamma: &dyn GammaSeq, horizon: usize) -> MsVerdict {
    let per_n: Vec<MsRow> = (0..=horizon)
        .into_par_iter()
        .map(|n| MsRow {
            n,
            verdict: classify_zeros(&apply_gamma(gamma, &Poly::one_plus_x_pow(n))),
        })
        .collect();
    let refuting_n = per_n
        .iter()
        .find(|row| !row.verdict.all_real_same_sign())
        .map(|row| row.n);
    MsVerdict {
        horizon,
        per_n,
        consistent_up_to_horizon: refuting_n.is_none(),
        refuting_n,
    }
}

/// First index at which a rapid-decrease ratio condition fails.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RapidViolation {
    pub k: usize,
    /// `s_k^2` and `alpha^2 s_{k-1} s_{k+1}` as exact rationals.
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of [`rapid_check`].
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RapidReport {
    pub holds: bool,
    /// `alpha >= max(2, (sqrt(2)/2)(1 + sqrt(1 + s_1)))`, decided in exact
    /// rational arithmetic: with `alpha >= 2` both sides of
    /// `alpha sqrt(2) - 1 >= sqrt(1 + s_1)` are positive, and squaring
    /// twice reduces it to `2 alpha^2 - s_1 >= 0` and
    /// `(2 alpha^2 - s_1)^2 >= 8 alpha^2`.
    pub alpha_threshold_ok: bool,
    pub checked_k: usize,
    pub first_violation: Option<RapidViolation>,
}

/// Verifies the rapid-decrease conditions for `s` on indices `0..=k_max`:
/// the alpha threshold and `s_k^2 >= alpha^2 s_{k-1} s_{k+1}` for
/// `k = 1..k_max-1`. Errors on a nonpositive term.
pub fn rapid_check(s: &dyn GammaSeq, alpha: &Rational, k_max: usize) -> Result<RapidReport, Error> {
    let values: Vec<Rational> = (0..=k_max).map(|k| s.value(k)).collect();
    if let Some(k) = values.iter().position(|v| !v.is_positive()) {
        return Err(Error::InvalidInput(format!(
            "rapid_check requires positive terms; s_{k} = {}",
            format_rational(&values[k])
        )));
    }

    let two_alpha_sq = rat_int(2) * alpha * alpha;
    let gap = &two_alpha_sq - &values.get(1).cloned().unwrap_or_else(Rational::zero);
    let alpha_threshold_ok =
        alpha >= &rat_int(2) && !gap.is_negative() && &gap * &gap >= rat_int(8) * alpha * alpha;

    let alpha_sq = alpha * alpha;
    let mut first_violation = None;
    for k in 1..k_max {
        let lhs = &values[k] * &values[k];
        let rhs = &alpha_sq * &values[k - 1] * &values[k + 1];
        if lhs < rhs {
            first_violation = Some(RapidViolation {
                k,
                lhs: format_rational(&lhs),
                rhs: format_rational(&rhs),
            });
            break;
        }
    }

    Ok(RapidReport {
        holds: alpha_threshold_ok && first_violation.is_none(),
        alpha_threshold_ok,
        checked_k: k_max,
        first_violation,
    })
}

/// Exact Turán ratio `s_k^2 / (s_{k-1} s_{k+1})`; `None` if the
/// denominator vanishes.
pub fn turan_ratio(s: &dyn GammaSeq, k: usize) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    let den = s.value(k - 1) * s.value(k + 1);
    if den.is_zero() {
        return None;
    }
    let v = s.value(k);
    Some(&v * &v / den)
}

/// Polynomial family for the exploratory sweeps.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PolyFamily {
    /// `(1+x)^n` for `n = 0..=max`.
    Binomial,
    /// Partial sums of the exponential series, `sum_{k<=m} x^k/k!`.
    ExpTruncation,
}

impl PolyFamily {
    pub fn member(&self, n: usize) -> Poly {
        match self {
            PolyFamily::Binomial => Poly::one_plus_x_pow(n),
            PolyFamily::ExpTruncation => Poly::exp_truncation(n),
        }
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        match s {
            "binomial" => Ok(PolyFamily::Binomial),
            "exp-truncation" => Ok(PolyFamily::ExpTruncation),
            _ => Err(Error::Parse(format!(
                "unknown family {s:?}; known: binomial, exp-truncation"
            ))),
        }
    }
}

/// One sweep cell: the classification of `s_r[p_n]` (or the tilde variant).
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SweepRow {
    pub r: usize,
    pub n: usize,
    pub verdict: VerdictKind,
    pub negative_root_count: usize,
    pub degree: Option<usize>,
}

/// Batch classification of `s_r` (or `s_tilde_r`) images over a family.
/// Results are labeled empirical by the caller; nothing here asserts a
/// theorem. Cells are independent and computed in parallel, the returned
/// order is deterministic (r-major, then n).
pub fn sweep_sr_on_family(
    r_values: &[usize],
    n_max: usize,
    family: PolyFamily,
    tilde: bool,
) -> Vec<SweepRow> {
    let cells: Vec<(usize, usize)> = r_values
        .iter()
        .flat_map(|&r| (0..=n_max).map(move |n| (r, n)))
        .collect();
    cells
        .into_par_iter()
        .map(|(r, n)| {
            let p = family.member(n);
            let image = if tilde { s_tilde_r(r, &p) } else { s_r(r, &p) };
            let verdict = classify_zeros(&image);
            SweepRow {
                r,
                n,
                negative_root_count: verdict.negative_root_count,
                degree: image.degree(),
                verdict: verdict.kind,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_shifted_factorial, parse_gamma, Ones, PowTwoNegSquare, SrImage};
    use crate::num::rat;
    use std::sync::Arc;

    #[test]
    fn identity_sequence_consistent() {
        let v = polya_schur_check(&Ones, 10);
        assert!(v.consistent_up_to_horizon);
        assert_eq!(v.per_n.len(), 11);
        assert!(v.refuting_n.is_none());
    }

    #[test]
    fn shifted_factorial_consistent_and_monotone() {
        let g = gamma_shifted_factorial(1);
        let at20 = polya_schur_check(g.as_ref(), 20);
        assert!(at20.consistent_up_to_horizon);
        // consistency at N implies consistency at any smaller horizon
        let at7 = polya_schur_check(g.as_ref(), 7);
        assert!(at7.consistent_up_to_horizon);
        for (row20, row7) in at20.per_n.iter().zip(&at7.per_n) {
            assert_eq!(row20.verdict.kind, row7.verdict.kind);
        }
    }

    #[test]
    fn artificial_sequence_refuted_with_witness() {
        // gamma = (1, 1, -1, 1, ...): already fails at small degree
        let g = parse_gamma("list:1,1,-1,1,1,1,1,1,1").unwrap();
        let v = polya_schur_check(g.as_ref(), 8);
        assert!(!v.consistent_up_to_horizon);
        let witness = v.refuting_n.expect("must produce a witness");
        assert!(!v.per_n[witness].verdict.all_real_same_sign());
    }

    #[test]
    fn rapid_check_pow_two() {
        // s_k = 2^(-k^2): the Turán ratio is exactly 4 at every k
        let s = PowTwoNegSquare;
        let report = rapid_check(&s, &rat_int(2), 50).unwrap();
        assert!(report.holds);
        for k in 1..=40 {
            assert_eq!(turan_ratio(&s, k), Some(rat_int(4)));
        }
    }

    #[test]
    fn rapid_check_factorial_fails() {
        // s_k = 1/k!: ratio is (k+1)/k -> fails against alpha^2 = 4
        let s = gamma_shifted_factorial(0);
        let report = rapid_check(s.as_ref(), &rat_int(2), 10).unwrap();
        assert!(!report.holds);
        let violation = report.first_violation.expect("violation expected");
        assert_eq!(violation.k, 1);
        assert_eq!(turan_ratio(s.as_ref(), 3), Some(rat(4, 3)));
    }

    #[test]
    fn rapid_check_rejects_nonpositive() {
        let s = parse_gamma("list:1,0,1").unwrap();
        assert!(rapid_check(s.as_ref(), &rat_int(2), 2).is_err());
    }

    #[test]
    fn rapid_check_alpha_threshold() {
        // alpha = 2, s_1 = 1/2: 2a^2 - s_1 = 15/2, (15/2)^2 = 56.25 >= 32
        let s = PowTwoNegSquare;
        assert!(rapid_check(&s, &rat_int(2), 5).unwrap().alpha_threshold_ok);
        // alpha below 2 never passes
        assert!(!rapid_check(&s, &rat(3, 2), 5).unwrap().alpha_threshold_ok);
    }

    #[test]
    fn sr_image_of_pow_two_rapidly_decreasing() {
        for r in 1..=4 {
            let t = SrImage {
                base: Arc::new(PowTwoNegSquare),
                r,
            };
            assert!(rapid_check(&t, &rat_int(2), 30).unwrap().holds, "r = {r}");
        }
    }

    #[test]
    fn sweep_small_binomials_closed() {
        let rows = sweep_sr_on_family(&[1, 2], 6, PolyFamily::Binomial, false);
        assert_eq!(rows.len(), 14);
        assert!(rows.iter().all(|row| matches!(
            row.verdict,
            VerdictKind::AllRealNegative | VerdictKind::ZeroPoly
        )));
    }

    #[test]
    fn sweep_exp_truncation_finds_failures_for_r6() {
        // the transformed truncations eventually leave the real-rooted class
        let rows = sweep_sr_on_family(&[6], 20, PolyFamily::ExpTruncation, false);
        assert!(rows
            .iter()
            .any(|row| row.verdict == VerdictKind::NotAllReal));
    }

    #[test]
    fn sweep_row_wire_format() {
        let rows = sweep_sr_on_family(&[1], 2, PolyFamily::Binomial, false);
        let json = serde_json::to_value(&rows[2]).unwrap();
        assert_eq!(json["r"], 1);
        assert_eq!(json["n"], 2);
        assert_eq!(json["verdict"], "AllRealNegative");
        assert_eq!(json["negativeRootCount"], 2);
        assert_eq!(json["degree"], 2);
    }
}
