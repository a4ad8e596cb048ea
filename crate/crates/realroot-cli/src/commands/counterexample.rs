use num_traits::Signed;
use serde::Serialize;
use serde_json::json;

use realroot_core::num::{format_rational, rat_int};
use realroot_core::series::{laguerre_l1_enclosure, lookup_series, Enclosure, TailCertificate};
use realroot_core::Error;

use crate::report::{Outcome, Report};
use crate::{CommandResult, CounterexampleArgs};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Attempt {
    n: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    partial_sums: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decimal_partial_sums: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    enclosure: Option<Enclosure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagnostic: Option<String>,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AttemptCertificates {
    n: usize,
    tails: [TailCertificate; 3],
    derivative_enclosures: [Enclosure; 3],
}

pub fn run(args: &CounterexampleArgs) -> CommandResult {
    let (series_spec, default_x0) = match args.name.as_str() {
        "s6" => ("sr:6", -43),
        "s6tilde" => ("srtilde:6", -56),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown counterexample {other:?}; known: s6, s6tilde"
            )))
        }
    };
    let gen = lookup_series(series_spec)?;
    let x0 = super::parse_rational_flag(&args.x0, "--x0")?.unwrap_or_else(|| rat_int(default_x0));

    // Defaults follow the worked counterexamples: n = 30, escalating to 60
    // and 120 while the enclosure straddles zero. An explicit --n pins the
    // truncation order and disables escalation.
    let orders: Vec<usize> = match args.n {
        Some(n) => vec![n],
        None => vec![30, 60, 120],
    };

    let mut attempts = Vec::new();
    let mut certificates = Vec::new();
    let mut verdict = "UNCERTIFIED";
    let mut refuted_at = None;
    for &n in &orders {
        match laguerre_l1_enclosure(gen.as_ref(), n, &x0) {
            Ok(ev) => {
                let status = if ev.enclosure.hi().is_negative() {
                    "REFUTED"
                } else if ev.enclosure.lo().is_positive() {
                    "NOT-REFUTED-HERE"
                } else {
                    "STRADDLES-ZERO"
                };
                attempts.push(Attempt {
                    n,
                    status,
                    partial_sums: Some(ev.partial_sums.iter().map(format_rational).collect()),
                    decimal_partial_sums: Some(ev.decimal_partial_sums.clone()),
                    enclosure: Some(ev.enclosure.clone()),
                    diagnostic: None,
                });
                certificates.push(AttemptCertificates {
                    n,
                    tails: ev.tails,
                    derivative_enclosures: ev.derivative_enclosures,
                });
                match status {
                    "REFUTED" => {
                        verdict = "REFUTED";
                        refuted_at = Some(n);
                        break;
                    }
                    "NOT-REFUTED-HERE" => {
                        verdict = "NOT-REFUTED-HERE";
                        break;
                    }
                    _ => verdict = "INCONCLUSIVE",
                }
            }
            Err(Error::NotCertified(msg)) => {
                attempts.push(Attempt {
                    n,
                    status: "UNCERTIFIED",
                    partial_sums: None,
                    decimal_partial_sums: None,
                    enclosure: None,
                    diagnostic: Some(msg),
                });
            }
            Err(other) => return Err(other),
        }
    }

    let outcome = match verdict {
        "REFUTED" => Outcome::Verified,
        "UNCERTIFIED" => Outcome::Uncertified,
        _ => Outcome::Inconclusive,
    };
    let inputs = json!({
        "name": args.name,
        "n": args.n,
        "x0": format_rational(&x0),
        "x0Overridden": args.x0.is_some(),
        "nOverridden": args.n.is_some(),
    });
    let results = json!({
        "generator": gen.description(),
        "laguerreExpression": "(f')^2 - f f''",
        "x0": format_rational(&x0),
        "verdict": verdict,
        "refutedAtN": refuted_at,
        "attempts": attempts,
    });
    let certs = json!({ "attempts": certificates });
    Ok((
        Report::new("counterexample", inputs, results, certs),
        outcome,
    ))
}
