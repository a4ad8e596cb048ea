use serde_json::json;

use realroot_core::gamma::parse_gamma;
use realroot_core::io::PolyJson;
use realroot_core::sturm::classify_zeros;
use realroot_core::transforms::{build_transform, AlphaSeq, TransformSpec};
use realroot_core::Error;

use crate::report::{Outcome, Report};
use crate::{CommandResult, TransformArgs};

pub fn run(args: &TransformArgs) -> CommandResult {
    let input = super::read_poly(&args.input)?;
    let spec = TransformSpec {
        r: args.r,
        d: args.d,
        alpha: args.alpha.as_deref().map(AlphaSeq::parse).transpose()?,
        gamma: args.gamma.as_deref().map(parse_gamma).transpose()?,
        with: args.with.as_deref().map(super::read_poly).transpose()?,
        factorial: args.factorial,
    };
    let transform = build_transform(&args.op, &spec)?;
    let output = transform.apply(&input);

    let classification = args.classify.then(|| classify_zeros(&output));
    let inputs = json!({
        "op": args.op,
        "input": args.input.display().to_string(),
        "r": args.r,
        "d": args.d,
        "alpha": args.alpha,
        "gamma": args.gamma,
        "with": args.with.as_ref().map(|p| p.display().to_string()),
        "factorial": args.factorial,
        "classify": args.classify,
    });
    let results = json!({
        "transform": transform.describe(),
        "input": PolyJson::from_poly(&input),
        "output": PolyJson::from_poly(&output),
        "outputDegree": output.degree(),
        "classification": classification.as_ref().map(|v| v.kind),
    });
    let certificates = match &classification {
        Some(v) => serde_json::to_value(v).map_err(|e| Error::InvalidInput(e.to_string()))?,
        None => serde_json::Value::Null,
    };
    Ok((
        Report::new("transform", inputs, results, certificates),
        Outcome::Verified,
    ))
}
