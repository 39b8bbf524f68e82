use std::process::{Command, Output};

use gkm_workbench::exactalg::scalar;
use gkm_workbench::gkm::{sl2_classes, FixedPoint};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm-workbench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_threads(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkm-workbench"))
        .args(args)
        .env("GKM_WORKBENCH_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn catalan_three() {
    let o = run(&["catalan", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["total"], 5);
    assert_eq!(v["table"].as_object().unwrap().len(), 5);
}

#[test]
fn gkm_verify_b0() {
    let o = run(&["gkm-verify", "--group", "SL2", "--d", "2", "--class", "b0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["status"], "PASS");
}

#[test]
fn perturbed_tuple_is_a_mismatch() {
    let bad = sl2_classes(2, 0).perturbed(&FixedPoint::lattice(&[1]), &scalar::int(1));
    let path = std::env::temp_dir().join(format!("gkm-workbench-bad-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&bad.to_json()).unwrap()).unwrap();
    let o = run(&[
        "gkm-verify",
        "--group",
        "SL2",
        "--d",
        "2",
        "--tuple",
        path.to_str().unwrap(),
    ]);
    std::fs::remove_file(&path).ok();
    assert_eq!(
        o.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&o.stdout)
    );
    let v = json(&o);
    assert_eq!(v["status"], "FAIL");
    assert!(!v["certificate"].is_null());
}

#[test]
fn compare_knot_t33() {
    let o = run(&["compare-knot", "--link", "T33"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["equal"], true);
    assert_eq!(v["normalization"], "T^3");
}

#[test]
fn uncertified_catalan_is_inconclusive() {
    assert_eq!(
        run(&["catalan", "--n", "4", "--maxdeg", "3"]).status.code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(run(&["catalan", "--n", "0"]).status.code(), Some(64));
    assert_eq!(run(&["msv", "--curve", "3"]).status.code(), Some(64));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("gkm-workbench-out-{}.json", std::process::id()));
    let o = run(&[
        "--output",
        path.to_str().unwrap(),
        "conjecture-check",
        "--n",
        "2",
        "--d",
        "1",
        "--order",
        "4",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["status"], "match");
}

#[test]
fn formats() {
    let o = run(&["--format", "csv", "catalan", "--n", "2"]);
    assert_eq!(
        String::from_utf8(o.stdout).unwrap(),
        "a,b,dim\n0,1,1\n1,0,1\n"
    );
    let o = run(&[
        "--format",
        "dot",
        "gkm-graph",
        "--group",
        "SL2",
        "--d",
        "1",
        "--window",
        "0,1",
    ]);
    assert!(String::from_utf8(o.stdout).unwrap().starts_with("graph"));
}

#[test]
fn byte_identical_reruns() {
    let configs: &[&[&str]] = &[
        &["catalan", "--n", "3"],
        &[
            "jd-series",
            "--group",
            "GL",
            "--n",
            "2",
            "--d",
            "2",
            "--maxdeg",
            "5",
        ],
        &["freeness", "--n", "2", "--d", "1", "--maxdeg", "5"],
        &["gkm-graph", "--group", "SL2", "--d", "2"],
        &["msv", "--curve", "3,3"],
        &["conjecture-check", "--n", "3", "--d", "1", "--order", "4"],
        &[
            "ordinary-quotient",
            "--group",
            "GL",
            "--n",
            "2",
            "--d",
            "1",
            "--window",
            "0,1",
        ],
        &["flag-rank1"],
    ];
    for args in configs {
        let a = run_threads(args, "1");
        let b = run_threads(args, "4");
        let c = run(args);
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stdout, c.stdout, "{args:?}");
        assert!(!a.stdout.is_empty());
    }
}
