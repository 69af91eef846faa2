//! End-to-end runs of the `symcalc` binary.

use std::process::Command;

fn symcalc(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symcalc")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    let (code, out, _) = symcalc(&["homology", "sym(2, sphere(1))", "--max-dim", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("H̃_* = 0"));

    let (code, out, _) = symcalc(&["chain-counterexample"]);
    assert_eq!(code, 0);
    assert!(out.contains("H_{-2} = Z/2"));

    let (code, out, _) = symcalc(&["verify-macdonald", "sphere(2)", "--order", "3", "--max-dim", "7"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 + t + t^2 + t^3 + O(t^4)") && out.ends_with("PASS\n"), "{out}");
}

#[test]
fn every_criterion_runs_from_the_command_line() {
    let runs: &[&[&str]] = &[
        &["homology", "sym(3, sphere(1))"],
        &["homology", "sym(2, sphere(2))"],
        &["verify-macdonald", "wedge(sphere(1), sphere(1))", "--order", "4"],
        &["verify-mult", "wedge_left(sphere(1), sphere(2))", "--order", "3"],
        &["verify-susp-inv", "sphere(1)", "--order", "3"],
        &["verify-kunneth", "wedge_left(sphere(0), sphere(0))", "--n", "4"],
        &["verify-symmetrizable", "--seed", "2024", "--n", "3"],
        &["verify-slices"],
        &["verify-adjunction", "--seed", "5"],
        &["additivity-probe", "wedge_left(sphere(1), sphere(1))", "--n", "3"],
        &["tower", "cone_incl(sphere(0))", "--n", "3"],
        &["zeta", "wedge(sphere(0), sphere(1))", "--order", "3"],
        &["euler", "cone(sphere(1))"],
    ];
    for args in runs {
        let (code, out, err) = symcalc(args);
        assert_eq!(code, 0, "{args:?}\n{out}\n{err}");
    }
    let (_, out, _) = symcalc(&["homology", "sym(2, sphere(2))"]);
    assert!(out.contains("H_4 = Z"));
}

#[test]
fn json_reports_are_byte_identical() {
    for args in [
        &["tower", "wedge_left(sphere(0), sphere(0))", "--n", "2", "--json"][..],
        &["verify-symmetrizable", "--seed", "9", "--json"][..],
        &["zeta", "sphere(1)", "--json"][..],
    ] {
        let (c1, a, _) = symcalc(args);
        let (c2, b, _) = symcalc(args);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], symcalc::report::SCHEMA);
    }
}

#[test]
fn usage_errors() {
    let (code, _, err) = symcalc(&["homology", "sym(-1, point)"]);
    assert_eq!(code, 2);
    assert!(err.contains("syntax error"), "{err}");
    let (code, _, err) = symcalc(&["verify-macdonald", "sphere(2)", "--order", "3", "--max-dim", "5"]);
    assert_eq!(code, 2);
    assert!(err.contains("needs --max-dim 6"), "{err}");
    let (code, _, _) = symcalc(&["homology", "load(\"/nonexistent/x.json\")"]);
    assert_eq!(code, 2);
    let (code, _, _) = symcalc(&["verify-mult", "sphere(1)"]);
    assert_eq!(code, 2);
}

#[test]
fn load_reads_pss_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("circle.json");
    let circle = symcalc::sset::sphere(1, 1).unwrap();
    symcalc::pss_json::write_file(&circle, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(symcalc::pss_json::write_string(&symcalc::pss_json::read_str(&text).unwrap()), text);

    let expr = format!("sym(2, load({:?}))", path.to_str().unwrap());
    let (code, out, err) = symcalc(&["homology", &expr]);
    assert_eq!(code, 0, "{err}");
    assert!(out.contains("H̃_* = 0"));
    let expr = format!("load({:?})", path.to_str().unwrap());
    let (code, out, _) = symcalc(&["verify-macdonald", &expr, "--order", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("1 - t + O(t^5)"), "{out}");
}
