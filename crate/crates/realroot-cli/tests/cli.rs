//! End-to-end tests of the binary: exit-code contract, report schema
//! conformance, and byte-level determinism.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_realroot-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let code = out.status.code().expect("exit code");
    let value = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad report JSON for {args:?}: {e}"));
    (value, code)
}

fn write_poly(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

fn schema() -> jsonschema::Validator {
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas/report.schema.json"),
    )
    .expect("schema file");
    jsonschema::validator_for(&serde_json::from_str(&text).expect("schema JSON"))
        .expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, value: &Value) {
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| format!("{e} at {}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn exit_codes_are_the_documented_contract() {
    let dir = tempfile::tempdir().unwrap();
    let p6 = write_poly(
        dir.path(),
        "p6.json",
        r#"{"coeffs": ["5040","35280","52920","29400","6360","552","16"]}"#,
    );

    // 0: verified
    assert_eq!(run(&["check", "real-rooted", &p6]).status.code(), Some(0));
    assert_eq!(run(&["counterexample", "s6"]).status.code(), Some(0));

    // 2: input errors
    let garbled = write_poly(dir.path(), "bad.json", r#"{"coeffs": ["5x"]}"#);
    assert_eq!(
        run(&["check", "real-rooted", &garbled]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["transform", "no-such-op", &p6]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["transform", "s_r", &p6]).status.code(), Some(2)); // missing --r
    assert_eq!(run(&["counterexample", "s9"]).status.code(), Some(2));
    assert_eq!(run(&["identity", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["check", "real-rooted", "/definitely/not/here.json"])
            .status
            .code(),
        Some(2)
    );

    // 3: inconclusive enclosure (L1 at 0 is b_1^2 - 2 b_0 b_2 = 1/2 > 0,
    // an exact point: all tail terms vanish at x0 = 0)
    let (peek, code) = report(&["counterexample", "s6", "--x0", "0"]);
    assert_eq!(code, 3);
    assert_eq!(peek["results"]["verdict"], "NOT-REFUTED-HERE");
    let enclosure = &peek["results"]["attempts"][0]["enclosure"];
    assert_eq!(enclosure["lo"], "1/2");
    assert_eq!(enclosure["hi"], "1/2");

    // 4: certification failure (window starts while terms still grow)
    let (peek, code) = report(&["counterexample", "s6", "--n", "2"]);
    assert_eq!(code, 4);
    assert_eq!(peek["results"]["verdict"], "UNCERTIFIED");
    assert!(peek["results"]["attempts"][0]["diagnostic"]
        .as_str()
        .unwrap()
        .contains("increase"));
}

#[test]
fn reports_conform_to_published_schema() {
    let validator = schema();
    let dir = tempfile::tempdir().unwrap();
    let p6 = write_poly(
        dir.path(),
        "p6.json",
        r#"{"coeffs": ["5040","35280","52920","29400","6360","552","16"]}"#,
    );
    let square = write_poly(dir.path(), "sq.json", r#"{"coeffs": ["1","2","1"]}"#);

    let cases: Vec<Vec<&str>> = vec![
        vec!["counterexample", "s6"],
        vec!["counterexample", "s6tilde"],
        vec!["counterexample", "s6", "--x0", "0"],
        vec!["transform", "s_r", "--r", "1", "--classify", &square],
        vec!["transform", "f_d", "--d", "1", &p6],
        vec!["transform", "j", "--classify", &square],
        vec![
            "transform",
            "gamma",
            "--gamma",
            "shifted-factorial:1",
            &square,
        ],
        vec![
            "transform",
            "compose",
            "--with",
            &square,
            "--factorial",
            &square,
        ],
        vec!["transform", "u_alpha", "--alpha", "0:1,1:-1", &square],
        vec!["identity", "stanley", "--n-max", "6", "--d-max", "3"],
        vec!["identity", "mace", "--d-max", "3", "--k-max", "8"],
        vec!["identity", "fd-exp", "--d-max", "3", "--k-max", "8"],
        vec!["identity", "s4-closed-form", "--k-max", "12"],
        vec!["identity", "j-exp", "--k-max", "12"],
        vec!["identity", "j-binomial", "--n-max", "8"],
        vec!["identity", "pochhammer", "--n-max", "5"],
        vec!["check", "real-rooted", &p6],
        vec![
            "check",
            "ms",
            "--gamma",
            "shifted-factorial:4",
            "--horizon",
            "8",
        ],
        vec![
            "check", "rapid", "--seq", "2powk2", "--alpha", "2", "--K", "30",
        ],
        vec!["check", "laguerre-poly", &square, "--order", "1"],
        vec![
            "sweep", "sr", "--r-min", "1", "--r-max", "2", "--n-max", "6",
        ],
        vec!["sweep", "rapid-image", "--r-max", "4", "--K", "20"],
    ];
    for case in cases {
        let (value, code) = report(&case);
        assert!(
            code == 0 || code == 3,
            "unexpected exit {code} for {case:?}"
        );
        assert_valid(&validator, &value);
    }
}

#[test]
fn identity_failure_exits_uncertified() {
    // force a mismatch by checking an identity against deliberately wrong
    // ranges is not possible (the identities are true); instead rely on the
    // input-error path staying distinct: a capped range is an input error.
    assert_eq!(
        run(&["identity", "stanley", "--n-max", "500"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn transform_output_is_exact_and_classified() {
    let dir = tempfile::tempdir().unwrap();
    let square = write_poly(dir.path(), "sq.json", r#"{"coeffs": ["1","2","1"]}"#);
    let (value, code) = report(&["transform", "s_r", "--r", "1", "--classify", &square]);
    assert_eq!(code, 0);
    assert_eq!(
        value["results"]["output"]["coeffs"],
        serde_json::json!(["1", "3", "1"])
    );
    assert_eq!(value["results"]["classification"], "AllRealNegative");
    assert_eq!(value["certificates"]["kind"], "AllRealNegative");
}

#[test]
fn rerun_is_byte_identical() {
    let first = run(&["counterexample", "s6"]);
    let second = run(&["counterexample", "s6"]);
    assert_eq!(first.stdout, second.stdout);

    let first = run(&[
        "sweep", "sr", "--r-min", "1", "--r-max", "3", "--n-max", "8",
    ]);
    let second = run(&[
        "sweep", "sr", "--r-min", "1", "--r-max", "3", "--n-max", "8",
    ]);
    assert_eq!(first.stdout, second.stdout);

    // parallelism must not affect output ordering
    let serial = bin()
        .args(["identity", "stanley", "--n-max", "8", "--d-max", "4"])
        .env("REALROOT_LAB_THREADS", "1")
        .output()
        .unwrap();
    let parallel = bin()
        .args(["identity", "stanley", "--n-max", "8", "--d-max", "4"])
        .env("REALROOT_LAB_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let square = write_poly(dir.path(), "sq.json", r#"{"coeffs": ["1","2","1"]}"#);
    let out = bin()
        .args(["transform", "j", &square, "--out", path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let value: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["command"], "transform");
}

#[test]
fn unsettled_sweeps_stay_exploratory() {
    // sweeping past the settled shifts records rows without asserting
    // anything beyond the per-instance certificates
    let (value, code) = report(&[
        "sweep", "sr", "--r-min", "5", "--r-max", "6", "--n-max", "10",
    ]);
    assert_eq!(code, 0);
    let note = value["results"]["note"].as_str().unwrap();
    assert!(note.contains("no theorem"));
    assert_eq!(value["results"]["rows"].as_array().unwrap().len(), 22);

    // the transformed exp truncations eventually leave the class; the
    // sweep records that as data, still exit 0
    let (value, code) = report(&[
        "sweep",
        "sr",
        "--r-min",
        "6",
        "--r-max",
        "6",
        "--n-max",
        "20",
        "--family",
        "exp-truncation",
    ]);
    assert_eq!(code, 0);
    let rows = value["results"]["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["verdict"] == "NotAllReal"));
}

#[test]
fn thread_env_var_is_honored_and_validated() {
    let out = bin()
        .args(["check", "rapid", "--seq", "2powk2", "--K", "10"])
        .env("REALROOT_LAB_THREADS", "bogus")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("REALROOT_LAB_THREADS"));
}
