use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn ggx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ggx"))
        .args(args)
        .current_dir(fixtures())
        .env_remove("GGX_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_matches_expectations() {
    let text = std::fs::read_to_string(fixtures().join("expectations.json")).unwrap();
    let expectations: serde_json::Map<String, Value> = serde_json::from_str(&text).unwrap();
    for (file, want) in &expectations {
        let o = ggx(&["verify", "--json", file]);
        assert_eq!(
            o.status.code(),
            want["exit"].as_i64().map(|c| c as i32),
            "{file}"
        );
        let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
        if let Some(axiom) = want.get("axiom") {
            assert_eq!(&report["axiom"], axiom, "{file}");
            assert_eq!(&report["component"], &want["component"], "{file}");
        } else {
            assert_eq!(report["valid"], Value::Bool(true), "{file}");
        }
    }
}

#[test]
fn verify_examples() {
    let o = ggx(&["verify", "z2-group.doc"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ggx(&["verify", "broken-latin.doc"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("group axiom: Latin square, row 1"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn gamma_theta_round_trip_on_identity_xmod() {
    let o = ggx(&["roundtrip", "gamma-theta", "identity-xmod-z2.doc"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).contains("isomorphism verified, |G⋊H| = 4"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn witnesses_are_identical_across_runs() {
    for file in [
        "broken-latin.doc",
        "perturbed/xsq-cs2.doc",
        "perturbed/xmod-cm1.doc",
    ] {
        let a = ggx(&["verify", "--json", file]);
        let b = ggx(&["verify", "--json", file]);
        assert_eq!(a.stdout, b.stdout, "{file}");
        let a = ggx(&["verify", file]);
        let b = ggx(&["verify", file]);
        assert_eq!(a.stdout, b.stdout, "{file}");
    }
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(ggx(&[]).status.code(), Some(2));
    assert_eq!(ggx(&["verify"]).status.code(), Some(2));
    assert_eq!(ggx(&["verify", "missing.doc"]).status.code(), Some(2));
    assert_eq!(
        ggx(&["apply", "theta", "z2-group.doc"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ggx(&["catalog", "emit", "no-such-entry"]).status.code(),
        Some(2)
    );
    assert_eq!(ggx(&["verify", "expectations.json"]).status.code(), Some(2));
}

#[test]
fn apply_then_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let o = ggx(&["catalog", "emit", "pair-xmod-Z2", "-o", &out("xm.doc")]);
    assert_eq!(o.status.code(), Some(0));
    for (functor, input, output) in [
        ("theta", "xm.doc", "d.doc"),
        ("gamma", "d.doc", "back.doc"),
        ("delta", "xm.doc", "s.doc"),
        ("eta", "s.doc", "xm2.doc"),
    ] {
        let o = ggx(&["apply", functor, &out(input), "-o", &out(output)]);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{functor}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert_eq!(
            ggx(&["verify", &out(output)]).status.code(),
            Some(0),
            "{functor}"
        );
    }
    for (trip, input) in [
        ("theta-gamma", "d.doc"),
        ("gamma-theta", "xm.doc"),
        ("delta-eta", "s.doc"),
        ("eta-delta", "xm.doc"),
    ] {
        let o = ggx(&["roundtrip", trip, &out(input)]);
        assert_eq!(o.status.code(), Some(0), "{trip}");
        assert!(stdout(&o).contains("isomorphism verified"), "{trip}");
    }
}

#[test]
fn invalid_input_to_apply_exits_1() {
    let o = ggx(&["apply", "theta", "perturbed/xmod-gg-action.doc"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn catalog_entries_verify() {
    let list = stdout(&ggx(&["catalog", "list"]));
    let dir = tempfile::tempdir().unwrap();
    for name in list.lines() {
        let path = dir.path().join(format!("{name}.doc"));
        let path = path.to_str().unwrap();
        assert_eq!(
            ggx(&["catalog", "emit", name, "-o", path]).status.code(),
            Some(0)
        );
        assert_eq!(ggx(&["verify", path]).status.code(), Some(0), "{name}");
    }
}

#[test]
fn enumerate_counts_and_bounds() {
    assert_eq!(
        stdout(&ggx(&["enumerate", "homs", "Z2", "Z2"])),
        "count: 2\n"
    );
    assert_eq!(
        stdout(&ggx(&["enumerate", "actions", "Z2", "Z3"])),
        "count: 2\n"
    );
    assert_eq!(
        stdout(&ggx(&["enumerate", "xmod-groups", "Z2", "Z2"])),
        "count: 2\n"
    );
    assert_eq!(
        stdout(&ggx(&["enumerate", "xmod-gg", "--max-order", "2"])),
        "count: 11\n"
    );
    let bounded = Command::new(env!("CARGO_BIN_EXE_ggx"))
        .args(["enumerate", "homs", "D4", "Z2"])
        .env("GGX_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(bounded.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let o = ggx(&[
        "enumerate",
        "gg",
        "K4",
        "Z2",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(stdout(&o), "count: 12\n");
    let mut files: Vec<_> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert_eq!(files.len(), 12);
    for f in files {
        assert_eq!(ggx(&["verify", f.to_str().unwrap()]).status.code(), Some(0));
    }
}

#[test]
fn frozen_counts_reproduce() {
    let o = ggx(&["enumerate", "counts", "--max-order", "8"]);
    let frozen = std::fs::read_to_string(fixtures().join("counts.json")).unwrap();
    assert_eq!(stdout(&o), frozen);
}
