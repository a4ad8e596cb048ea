use num_traits::Signed;
use serde_json::{json, Value};

use realroot_core::gamma::parse_gamma;
use realroot_core::io::PolyJson;
use realroot_core::msequences::{polya_schur_check, rapid_check};
use realroot_core::num::{format_rational, parse_rational, rat, rat_int, Rational};
use realroot_core::series::laguerre_ln_poly;
use realroot_core::sturm::classify_zeros;
use realroot_core::Error;

use crate::report::{Outcome, Report};
use crate::{CheckArgs, CommandResult};

pub fn run(args: &CheckArgs) -> CommandResult {
    match args.kind.as_str() {
        "real-rooted" => real_rooted(args),
        "ms" => multiplier_sequence(args),
        "rapid" => rapid(args),
        "laguerre-poly" => laguerre_poly(args),
        other => Err(Error::InvalidInput(format!(
            "unknown check {other:?}; known: real-rooted, ms, rapid, laguerre-poly"
        ))),
    }
}

fn require_input(args: &CheckArgs) -> Result<&std::path::PathBuf, Error> {
    args.input
        .as_ref()
        .ok_or_else(|| Error::InvalidInput(format!("check {} needs a polynomial file", args.kind)))
}

fn real_rooted(args: &CheckArgs) -> CommandResult {
    let path = require_input(args)?;
    let p = super::read_poly(path)?;
    let verdict = classify_zeros(&p);
    let inputs = json!({ "kind": "real-rooted", "input": path.display().to_string() });
    let results = json!({
        "input": PolyJson::from_poly(&p),
        "kind": verdict.kind,
        "realRootCount": verdict.real_root_count,
        "negativeRootCount": verdict.negative_root_count,
        "degree": p.degree(),
    });
    let certificates = serde_json::to_value(&verdict).expect("verdict serializes");
    Ok((
        Report::new("check", inputs, results, certificates),
        Outcome::Verified,
    ))
}

fn multiplier_sequence(args: &CheckArgs) -> CommandResult {
    let spec = args
        .gamma
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("check ms needs --gamma".into()))?;
    let gamma = parse_gamma(spec)?;
    let verdict = polya_schur_check(gamma.as_ref(), args.horizon);

    // Horizon-qualified by construction; the universally quantified
    // multiplier-sequence property is never asserted here.
    let summary: Vec<Value> = verdict
        .per_n
        .iter()
        .map(|row| {
            json!({
                "n": row.n,
                "kind": row.verdict.kind,
                "sameSign": row.verdict.all_real_same_sign(),
                "negativeRootCount": row.verdict.negative_root_count,
            })
        })
        .collect();
    let inputs = json!({ "kind": "ms", "gamma": spec, "horizon": args.horizon });
    let results = json!({
        "gamma": gamma.description(),
        "horizon": verdict.horizon,
        "verdict": if verdict.consistent_up_to_horizon {
            format!("consistent-with-MS-up-to-{}", verdict.horizon)
        } else {
            format!("refuted-at-n-{}", verdict.refuting_n.expect("witness"))
        },
        "consistentUpToHorizon": verdict.consistent_up_to_horizon,
        "refutingN": verdict.refuting_n,
        "perN": summary,
    });
    let certificates = serde_json::to_value(&verdict.per_n).expect("rows serialize");
    Ok((
        Report::new("check", inputs, results, certificates),
        Outcome::Verified,
    ))
}

fn rapid(args: &CheckArgs) -> CommandResult {
    let spec = args
        .seq
        .as_deref()
        .ok_or_else(|| Error::InvalidInput("check rapid needs --seq".into()))?;
    let seq = parse_gamma(spec)?;
    let alpha = match &args.alpha {
        Some(raw) => parse_rational(raw)?,
        None => rat_int(2),
    };
    let report = rapid_check(seq.as_ref(), &alpha, args.k_cap)?;
    let inputs = json!({
        "kind": "rapid",
        "seq": spec,
        "alpha": format_rational(&alpha),
        "K": args.k_cap,
    });
    let results = json!({
        "sequence": seq.description(),
        "alpha": format_rational(&alpha),
        "holds": report.holds,
        "alphaThresholdOk": report.alpha_threshold_ok,
        "checkedK": report.checked_k,
        "firstViolation": report.first_violation,
    });
    Ok((
        Report::new("check", inputs, results, Value::Null),
        Outcome::Verified,
    ))
}

fn default_samples() -> Vec<Rational> {
    (-10..=10).map(|i| rat(i, 2)).collect()
}

fn laguerre_poly(args: &CheckArgs) -> CommandResult {
    let path = require_input(args)?;
    let p = super::read_poly(path)?;
    let samples = match &args.samples {
        Some(raw) => raw
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>, _>>()?,
        None => default_samples(),
    };
    let ln = laguerre_ln_poly(&p, args.order);
    let evaluations: Vec<Value> = samples
        .iter()
        .map(|x| {
            let v = ln.eval(x);
            json!({
                "x": format_rational(x),
                "value": format_rational(&v),
                "nonnegative": !v.is_negative(),
            })
        })
        .collect();
    let all_nonnegative = samples.iter().all(|x| !ln.eval(x).is_negative());
    let inputs = json!({
        "kind": "laguerre-poly",
        "input": path.display().to_string(),
        "order": args.order,
        "samples": args.samples,
    });
    let results = json!({
        "input": PolyJson::from_poly(&p),
        "order": args.order,
        "laguerrePoly": PolyJson::from_poly(&ln),
        "evaluations": evaluations,
        "allSampledNonnegative": all_nonnegative,
        "note": "sampled evaluations only; nonnegativity is necessary, not sufficient, for membership",
    });
    Ok((
        Report::new("check", inputs, results, Value::Null),
        Outcome::Verified,
    ))
}
