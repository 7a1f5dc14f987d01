use std::process::{Command, Output};

use splinequad::engine::{generate, Family, FreeParameter, Partition, RuleRequest};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_splinequad"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn flat(doc: &serde_json::Value) -> Vec<(f64, f64)> {
    serde_json::from_value(doc["rule"]["flat"].clone()).unwrap()
}

#[test]
fn fixtures_pass() {
    for (name, nodes) in [("5.1", 7), ("9.1", 10)] {
        let out = run(&["--fixture", name]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let doc = json(&out);
        assert_eq!(doc["fixture"]["passed"], true);
        assert!(doc["fixture"]["max_relative_error"].as_f64().unwrap() <= 1e-12);
        assert_eq!(flat(&doc).len(), nodes);
    }
}

#[test]
fn single_interval_is_gauss_legendre() {
    let out = run(&[
        "--continuity",
        "1",
        "--nodes",
        "1",
        "--lengths",
        "2",
        "--interval",
        "-1",
        "1",
        "--middle",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let g = 1.0 / 3f64.sqrt();
    let rule = flat(&json(&out));
    assert_eq!(rule.len(), 2);
    for ((x, w), ex) in rule.into_iter().zip([-g, g]) {
        assert!((x - ex).abs() <= 1e-15 && (w - 1.0).abs() <= 1e-15);
    }
}

#[test]
fn pinned_rule_verifies() {
    let out = run(&[
        "--continuity",
        "0",
        "--nodes",
        "2",
        "--family",
        "half",
        "--lengths",
        "1,2,3,1,1,1",
        "--interval",
        "0",
        "9",
        "--middle",
        "3",
        "--free",
        "pin=3.0",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    assert!(doc["residuals"]["max_residual"].as_f64().unwrap() <= 1e-12);
    assert!(doc["provenance"]["free_parameter"].is_f64());
    assert!(flat(&doc).iter().any(|&(x, _)| (x - 3.0).abs() <= 1e-12));
}

#[test]
fn csv_rows_are_sorted() {
    let out = run(&["--fixture", "5.1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("subinterval,x,w"));
    let rows: Vec<(usize, f64)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    assert_eq!(
        rows.iter().map(|r| r.0).collect::<Vec<_>>(),
        [1, 2, 3, 3, 4, 5, 6]
    );
    assert!(rows.windows(2).all(|w| w[0].1 < w[1].1));
}

#[test]
fn json_round_trips_bit_for_bit() {
    let out = run(&[
        "--continuity",
        "1",
        "--nodes",
        "2",
        "--lengths",
        "0.5,1.3,0.9,0.7",
        "--middle",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let req = RuleRequest {
        continuity: 1,
        nodes_per_subinterval: 2,
        family: Family::Full,
        middle_index: 2,
        free_parameter: FreeParameter::DefaultZero,
    };
    let part = Partition::from_lengths(0.0, vec![0.5, 1.3, 0.9, 0.7]).unwrap();
    let direct = generate(&req, &part).unwrap();
    let parsed: splinequad::engine::QuadratureRule =
        serde_json::from_value(doc["rule"].clone()).unwrap();
    assert_eq!(parsed, direct);
    let parsed_req: RuleRequest = serde_json::from_value(doc["request"].clone()).unwrap();
    assert_eq!(parsed_req, req);
}

#[test]
fn realline_rules() {
    let out = run(&["--realline", "c1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let doc = json(&out);
    let w1 = doc["rule"]["weights"][0].as_f64().unwrap();
    assert!((w1 - 14.0 / 15.0).abs() <= 1e-15);
    let out = run(&["--realline", "c0", "--n", "3", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 4);
}

#[test]
fn validation_errors_exit_2() {
    let cases: [(&[&str], &str); 5] = [
        (
            &[
                "--continuity",
                "1",
                "--nodes",
                "1",
                "--lengths",
                "1,-1",
                "--middle",
                "1",
            ],
            "subinterval 2",
        ),
        (
            &[
                "--continuity",
                "1",
                "--nodes",
                "1",
                "--lengths",
                "1,1",
                "--middle",
                "3",
            ],
            "middle index",
        ),
        (
            &["--continuity", "1", "--nodes", "1", "--lengths", "1,1"],
            "--middle",
        ),
        (
            &[
                "--continuity",
                "2",
                "--nodes",
                "1",
                "--lengths",
                "1",
                "--middle",
                "1",
            ],
            "--continuity",
        ),
        (
            &[
                "--continuity",
                "0",
                "--nodes",
                "1",
                "--lengths",
                "1",
                "--middle",
                "1",
                "--free",
                "pin",
            ],
            "--free",
        ),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(needle), "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn numeric_failures_exit_3() {
    let out = run(&[
        "--continuity",
        "1",
        "--nodes",
        "1",
        "--lengths",
        "1,0.7,0.3",
        "--middle",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("subinterval 2"), "{}", stderr(&out));
}
