use serde_json::{json, Value};
use std::sync::Arc;

use realroot_core::gamma::{parse_gamma, SrImage};
use realroot_core::msequences::{rapid_check, sweep_sr_on_family, PolyFamily};
use realroot_core::num::{format_rational, parse_rational};
use realroot_core::Error;

use crate::report::{Outcome, Report};
use crate::{CommandResult, SweepArgs};

const EXPLORATORY_NOTE: &str =
    "exploratory sweep: rows are empirical observations, no theorem is asserted";

pub fn run(args: &SweepArgs) -> CommandResult {
    match args.kind.as_str() {
        "sr" => sr_sweep(args),
        "rapid-image" => rapid_image(args),
        other => Err(Error::InvalidInput(format!(
            "unknown sweep {other:?}; known: sr, rapid-image"
        ))),
    }
}

fn sr_sweep(args: &SweepArgs) -> CommandResult {
    if args.r_min > args.r_max {
        return Err(Error::InvalidInput(
            "--r-min must not exceed --r-max".into(),
        ));
    }
    let family = PolyFamily::parse(&args.family)?;
    let r_values: Vec<usize> = (args.r_min..=args.r_max).collect();
    let rows = sweep_sr_on_family(&r_values, args.n_max, family, args.tilde);
    let inputs = json!({
        "kind": "sr",
        "rMin": args.r_min,
        "rMax": args.r_max,
        "nMax": args.n_max,
        "family": args.family,
        "tilde": args.tilde,
    });
    let results = json!({
        "note": EXPLORATORY_NOTE,
        "operator": if args.tilde { "s_tilde_r" } else { "s_r" },
        "family": family,
        "rows": rows,
    });
    Ok((
        Report::new("sweep", inputs, results, Value::Null),
        Outcome::Verified,
    ))
}

fn rapid_image(args: &SweepArgs) -> CommandResult {
    let base = parse_gamma(&args.seq)?;
    let alpha = parse_rational(&args.alpha)?;
    let mut rows = Vec::new();
    for r in args.r_min..=args.r_max {
        let image = SrImage {
            base: Arc::clone(&base),
            r,
        };
        let report = rapid_check(&image, &alpha, args.k_cap)?;
        rows.push(json!({
            "r": r,
            "holds": report.holds,
            "alphaThresholdOk": report.alpha_threshold_ok,
            "firstViolation": report.first_violation,
        }));
    }
    let inputs = json!({
        "kind": "rapid-image",
        "seq": args.seq,
        "rMin": args.r_min,
        "rMax": args.r_max,
        "alpha": format_rational(&alpha),
        "K": args.k_cap,
    });
    let results = json!({
        "note": EXPLORATORY_NOTE,
        "baseSequence": base.description(),
        "rows": rows,
    });
    Ok((
        Report::new("sweep", inputs, results, Value::Null),
        Outcome::Verified,
    ))
}
