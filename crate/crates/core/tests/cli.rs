use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn motzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_motzeta"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("motzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn closed_ball_volume_from_file() {
    let o = motzeta(&["compute", "mv", "--input", "data/ball_closed_3.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(1*L^3) * [pt; mu=1; base=k]");
}

#[test]
fn poincare_coefficients_one_line_each() {
    let o = motzeta(&["compute", "poincare", "--input", "data/cusp.json", "--coeffs", "1..12"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert!(lines[0].starts_with("T^1: "));
    assert_eq!(lines[1], "T^2: (1*L^-1) * [E1~; mu=2; base=k]");
}

#[test]
fn euler_specialized_nearby_cycles() {
    let o = motzeta(&["compute", "nearby", "--example", "cusp", "--specialize", "euler"]);
    assert_eq!(stdout(&o).trim(), "-1");
}

#[test]
fn mv_at_least_accepts_negative_ell() {
    let a = motzeta(&["compute", "mv-at-least", "--example", "cusp", "--gamma", "1/3", "--ell", "2,-1"]);
    let b = motzeta(&["compute", "mv-at-least", "--example", "cusp", "--gamma", "1/3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn verify_commands_pass_on_shipped_data() {
    for (kind, file) in [
        ("identity", "data/xy_plus_z3.identity.json"),
        ("unit", "data/cusp_unit.json"),
        ("hadamard", "data/cusp_x_ball.hadamard.json"),
        ("ell", "data/cusp.ell.json"),
    ] {
        let o = motzeta(&["verify", kind, "--input", file]);
        assert_eq!(o.status.code(), Some(0), "{kind}: {}", stdout(&o));
        assert!(stdout(&o).trim_end().ends_with("PASS"));
    }
}

#[test]
fn failed_verification_exits_one() {
    let text = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("data/xy_plus_z2.identity.json")).unwrap();
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["data_ftilde"]["classes"][0]["class"][0]["coeff"] = serde_json::json!({"0": 2});
    let path = scratch("perturbed.identity.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let o = motzeta(&["verify", "identity", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL class equality"));
}

#[test]
fn bad_input_exits_two() {
    let path = scratch("bad.json");
    std::fs::write(&path, r#"{"d": 1, "base": "k", "strata": [], "classes": [], "extra": 0}"#).unwrap();
    for args in [
        vec!["compute", "mv", "--input", path.to_str().unwrap()],
        vec!["compute", "mv", "--input", "no/such/file.json"],
        vec!["compute", "mv", "--example", "no_such_example"],
        vec!["compute", "mv-at-least", "--example", "cusp", "--gamma", "1/3", "--ell", "-1,0"],
        vec!["compute", "frobnicate"],
    ] {
        let o = motzeta(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn list_examples_names_every_builtin() {
    let out = stdout(&motzeta(&["list-examples"]));
    for name in ["ball_open_1", "ball_closed_5_p3", "cusp", "cusp_twisted", "xy_plus_z3", "z_pow_4"] {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}

#[test]
fn suite_passes() {
    let o = motzeta(&["verify", "suite", "--seed", "3", "--cases", "10"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
