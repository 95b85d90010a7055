use std::process::{Command, Output};

fn qw22(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qw22"))
        .args(args)
        .env_remove("QW22_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn normalize_text_and_json() {
    let o = qw22(&["normalize", "L[2]*L[1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q^-2 * L[1] L[2] - q^-1 * L[3]\n");

    let o = qw22(&["normalize", "L[3]", "--json"]);
    assert_eq!(stdout(&o), "{\"terms\":[{\"coeff\":{\"terms\":[{\"eq\":0,\"c\":\"1\"}]},\"t\":0,\"l\":[[3,1]],\"w\":[]}]}\n");

    let o = qw22(&["normalize", "L[1] - L[1]", "--json"]);
    assert_eq!(stdout(&o), "{\"terms\":[]}\n");
}

#[test]
fn generalized_profile() {
    let o = qw22(&[
        "normalize",
        "L[1] L[0]",
        "--profile",
        "generalized",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"ep\""));
    let o = qw22(&["normalize", "T", "--profile", "generalized"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hopf_commands() {
    assert_eq!(stdout(&qw22(&["counit", "T^2"])), "1\n");
    assert_eq!(stdout(&qw22(&["counit", "L[3] + 5"])), "5\n");
    assert_eq!(stdout(&qw22(&["coproduct", "T"])), "(T) (x) (T)\n");
    assert_eq!(stdout(&qw22(&["antipode", "T^-1"])), "T\n");
    let o = qw22(&["coproduct", "L[0]", "--json"]);
    assert!(stdout(&o).contains("\"slots\""));
}

#[test]
fn eval_and_limit() {
    let o = qw22(&["eval", "L[2] L[1]", "--q", "2"]);
    assert_eq!(stdout(&o), "1/4 * L[1] L[2] - 1/2 * L[3]\n");
    let o = qw22(&["eval", "q - q^-1", "--q", "1"]);
    assert_eq!(stdout(&o), "0\n");
    let o = qw22(&["limit", "L[2] L[1]"]);
    assert_eq!(stdout(&o), "L[1] L[2] - L[3]\n");
    let o = qw22(&["eval", "L[0]", "--q", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qw22(&["eval", "p L[0]", "--q", "2", "--profile", "generalized"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qw22(&[
        "eval",
        "p L[0]",
        "--q",
        "2",
        "--p",
        "3/5",
        "--profile",
        "generalized",
    ]);
    assert_eq!(stdout(&o), "3/5 * L[0]\n");
}

#[test]
fn exit_codes() {
    assert_eq!(qw22(&["normalize", "L[1"]).status.code(), Some(2));
    assert_eq!(qw22(&["normalize", "L[99999999]"]).status.code(), Some(3));
    assert_eq!(qw22(&["normalize", "L[1]^-1"]).status.code(), Some(2));
    assert_eq!(qw22(&["check", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(qw22(&["frobnicate"]).status.code(), Some(2));
    let o = qw22(&["check", "q-identities", "--max-index", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cases failed: 0"));
}

#[test]
fn parse_errors_name_the_position() {
    let o = qw22(&["normalize", "L[1] + * W[0]"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 1, column 8"), "{err}");
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "rewrite-assoc", "--cases", "20", "--seed", "5"];
    let a = qw22(&args);
    let b = qw22(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("seed: 5"));

    let c = Command::new(env!("CARGO_BIN_EXE_qw22"))
        .args(["check", "rewrite-assoc", "--cases", "20", "--seed", "1"])
        .env("QW22_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(c.stdout, a.stdout);
}

#[test]
fn json_report() {
    let o = qw22(&[
        "check",
        "osc-relations",
        "--max-index",
        "2",
        "--k-range",
        "-3..3",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["suite"], "osc-relations");
    assert_eq!(v[0]["cases_failed"], 0);
    assert_eq!(v[0]["bounds"]["k_min"], -3);
}

#[test]
fn failing_suite_still_reports() {
    let o = qw22(&["check", "relation-preservation", "--max-index", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first counterexample: relation-preservation"));
}
