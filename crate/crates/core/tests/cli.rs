use std::process::{Command, Output};

fn hilbcurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hilbcurve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_values(o: &Output) -> Vec<String> {
    let text = stdout(o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("exponent,coefficient"));
    lines
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect()
}

#[test]
fn zseries_closed_542() {
    let o = hilbcurve(&[
        "zseries", "--r", "5", "--s", "4", "--n", "2", "--order", "6", "--method", "closed",
        "--format", "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv_values(&o), ["0", "0", "1", "1", "3", "4", "5"]);
}

#[test]
fn zseries_752_vanishes_below_four() {
    let o = hilbcurve(&[
        "zseries",
        "--r",
        "7",
        "--s",
        "5",
        "--n",
        "2",
        "--order",
        "3",
        "--method",
        "partitions",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(csv_values(&o), ["0", "0", "0", "0"]);
}

#[test]
fn zseries_gcd_needs_force() {
    let args = [
        "zseries", "--r", "6", "--s", "4", "--n", "2", "--order", "5",
    ];
    assert_eq!(hilbcurve(&args).status.code(), Some(1));
    let mut forced = args.to_vec();
    forced.extend(["--force", "--format", "json"]);
    let o = hilbcurve(&forced);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unsupported"], true);
}

#[test]
fn hilb_examples() {
    let o = hilbcurve(&[
        "hilb", "--gens", "2,3", "--order", "4", "--method", "oracle", "--format", "csv",
    ]);
    assert_eq!(csv_values(&o), ["1", "1", "2", "2", "2"]);
    let o = hilbcurve(&[
        "hilb", "--r", "5", "--t", "2", "--n", "2", "--order", "2", "--method", "formula",
        "--format", "csv",
    ]);
    assert_eq!(csv_values(&o), ["1", "1", "3"]);
    let o = hilbcurve(&["hilb", "--gens", "1", "--order", "3", "--format", "csv"]);
    assert_eq!(csv_values(&o), ["1", "1", "1", "1"]);
}

#[test]
fn hilb_routes_agree() {
    let run = |m: &str| {
        stdout(&hilbcurve(&[
            "hilb", "--r", "7", "--t", "2", "--n", "3", "--order", "8", "--method", m,
        ]))
    };
    assert_eq!(run("formula"), run("oracle"));
}

#[test]
fn semigroup_examples() {
    let o = hilbcurve(&["semigroup", "--gens", "4,5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["genus"], 6);
    assert_eq!(v["conductor"], 12);
    let o = hilbcurve(&["semigroup", "--gens", "4,5,6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"generators": [4, 5, 6], "conductor": 8, "genus": 4, "gaps": [1, 2, 3, 7]})
    );
    assert_eq!(
        hilbcurve(&["semigroup", "--gens", "2,4"]).status.code(),
        Some(1)
    );
}

#[test]
fn partitions_dump() {
    let o = hilbcurve(&[
        "partitions",
        "rsn",
        "--r",
        "5",
        "--s",
        "4",
        "--n",
        "2",
        "--budget",
        "2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([[2, 2, 1, 1]]));
    let o = hilbcurve(&[
        "partitions",
        "member",
        "--parts",
        "8,8,3,3,1",
        "--r",
        "7",
        "--s",
        "5",
        "--n",
        "2",
    ]);
    assert_eq!(stdout(&o), "(8,8,3,3,1) in P(7,5,2): false\n");
    let o = hilbcurve(&["partitions", "tm", "--t", "2", "--m", "1"]);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn verify_default_passes_and_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = hilbcurve(&[
        "verify",
        "--suite",
        "default",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let all = v.as_array().unwrap();
    assert!(!all.is_empty());
    assert!(all.iter().all(|r| r["status"] == "PASS"));
}

#[test]
fn verify_report_feeds_back_as_suite() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let first = hilbcurve(&[
        "verify",
        "--max-order",
        "4",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(first.status.code(), Some(0));
    let second = hilbcurve(&["verify", "--suite", report.to_str().unwrap()]);
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
}

#[test]
fn verify_max_order_is_deterministic() {
    let a = hilbcurve(&["verify", "--suite", "default", "--max-order", "2"]);
    let b = hilbcurve(&["verify", "--suite", "default", "--max-order", "2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_bad_suite() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"[{"name": "x", "params": {"r": 5}, "order": 3, "routes": ["closed_form"]}]"#,
    )
    .unwrap();
    assert_eq!(
        hilbcurve(&["verify", "--suite", bad.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        hilbcurve(&["verify", "--suite", "/nonexistent/suite.json"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_fail_and_resource_codes() {
    let dir = tempfile::tempdir().unwrap();
    let suite = dir.path().join("suite.json");
    std::fs::write(
        &suite,
        r#"[{"name": "fault", "params": {"r": 5, "s": 4, "n": 2}, "order": 6,
             "routes": ["closed_form", "partition_enum"], "inject_fault": 4}]"#,
    )
    .unwrap();
    let o = hilbcurve(&[
        "verify",
        "--suite",
        suite.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["first_mismatch"], 4);

    std::fs::write(
        &suite,
        r#"[{"name": "tight", "params": {"r": 7, "t": 2, "n": 3}, "order": 8,
             "routes": ["lci_formula", "semigroup_oracle"]}]"#,
    )
    .unwrap();
    let o = hilbcurve(&[
        "verify",
        "--suite",
        suite.to_str().unwrap(),
        "--max-nodes",
        "50",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z.csv");
    let o = hilbcurve(&[
        "zseries",
        "--r",
        "5",
        "--s",
        "4",
        "--n",
        "2",
        "--order",
        "2",
        "--format",
        "csv",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(out).unwrap(),
        "exponent,coefficient\n0,0\n1,0\n2,1\n"
    );
}
