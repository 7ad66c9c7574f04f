use std::path::PathBuf;
use std::process::Command;

use fepkit::format::AlgebraFile;
use fepkit::logic::{eval, parse, refutes};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fepkit(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_fepkit")).args(args).output().expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn check_lukasiewicz() {
    let r = fepkit(&["check", &fixture("l3.alg")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.lines().any(|l| l == "class: IUL_omega chain"));
    assert!(r.stdout.contains("fin: yes"));
}

#[test]
fn check_reports_violations_and_bad_input() {
    let r = fepkit(&["check", &fixture("diamond.alg")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("semilinear: no"));
    let r = fepkit(&["check", &fixture("not_monotone.alg")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("residuated: no"));
    let r = fepkit(&["check", &fixture("bad_row.alg")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("line 10"), "{}", r.stderr);
    let r = fepkit(&["check", "/nonexistent/file.alg"]);
    assert_eq!(r.code, 2);
}

#[test]
fn fep_on_full_lukasiewicz() {
    let r = fepkit(&["fep", &fixture("l3.alg"), "--mode", "ul"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert_eq!(r.stdout.lines().last(), Some("|M|=3 |D|=3 embedding=ok"));
    assert!(!r.stdout.contains("FAIL"));
    let explicit = fepkit(&["fep", &fixture("l3.alg"), "--subset", "0,1,2", "--mode", "ul"]);
    assert_eq!(explicit.stdout, r.stdout);
}

#[test]
fn fep_involutive_mode_records_added_elements() {
    let r = fepkit(&["fep", &fixture("l4.alg"), "--subset", "0,1,3", "--mode", "iul"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("added-by-negation: 2"));
    assert!(r.stdout.contains("check double-negation: pass"));
}

#[test]
fn fep_rejects_bad_preconditions() {
    assert_eq!(fepkit(&["fep", &fixture("l3.alg"), "--subset", "1"]).code, 2);
    assert_eq!(fepkit(&["fep", &fixture("no_wcm.alg"), "--mode", "psul"]).code, 2);
    assert_eq!(fepkit(&["fep", &fixture("square.alg")]).code, 2);
    assert_eq!(fepkit(&["fep", &fixture("l3.alg"), "--mode", "nope"]).code, 2);
}

#[test]
fn decide_integrality_gives_a_checked_counter_model() {
    let r = fepkit(&["decide", "--class", "ul-omega", "--max-size", "3", "--formula", "x1 \\ e"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("verdict: counterexample"));
    let model_text = &r.stdout[r.stdout.find("algebra ").unwrap()..];
    let model = AlgebraFile::parse(model_text).unwrap().algebra;
    let line = r.stdout.lines().find(|l| l.starts_with("assignment: ")).unwrap();
    let assignment: Vec<usize> = line["assignment: ".len()..]
        .split(' ')
        .map(|kv| kv.split('=').nth(1).unwrap().parse().unwrap())
        .collect();
    let phi = parse("x1 \\ e").unwrap();
    assert_eq!(refutes(&model, &[], &phi, &assignment), Ok(true));
    assert!(!model.leq(model.e(), eval(&phi, &model, &assignment).unwrap()));
}

#[test]
fn decide_valid_and_premises() {
    let r = fepkit(&["decide", "--class", "ul-omega", "--max-size", "4", "--formula", "(x1 \\ e) <-> ((x1 * x1) \\ e)"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("verdict: valid up to size 4 (55 chains searched)"));
    let r = fepkit(&[
        "decide", "--class", "hpsul-star-omega", "--max-size", "4", "--premise", "x1 \\ x2", "--premise", "x2 \\ x3",
        "--formula", "x1 \\ x3",
    ]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = fepkit(&["decide", "--class", "ul", "--max-size", "3", "--formula", "x1 \\ x2 \\ x3"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("position 8"), "{}", r.stderr);
    assert_eq!(fepkit(&["decide", "--class", "nope", "--max-size", "3", "--formula", "e"]).code, 2);
}

#[test]
fn enumerate_emits_loadable_files_deterministically() {
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    let r1 = fepkit(&["enumerate", "--size", "4", "--class", "iul", "--emit", d1.path().to_str().unwrap()]);
    let r2 = fepkit(&["enumerate", "--size", "4", "--class", "iul", "--emit", d2.path().to_str().unwrap()]);
    assert_eq!((r1.code, r2.code), (0, 0));
    assert!(r1.stdout.contains("total: 7"));
    let names = |d: &tempfile::TempDir| {
        let mut v: Vec<_> = std::fs::read_dir(d.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
        v.sort();
        v
    };
    assert_eq!(names(&d1), names(&d2));
    assert_eq!(names(&d1).len(), 7);
    for name in names(&d1) {
        let a = std::fs::read(d1.path().join(&name)).unwrap();
        let b = std::fs::read(d2.path().join(&name)).unwrap();
        assert_eq!(a, b);
        let file = AlgebraFile::parse(std::str::from_utf8(&a).unwrap()).unwrap();
        assert_eq!(file.to_text().as_bytes(), &a[..]);
        let r = fepkit(&["check", d1.path().join(&name).to_str().unwrap()]);
        assert!(r.stdout.contains("class: IUL_omega chain"));
    }
    assert_eq!(fepkit(&["enumerate", "--size", "1", "--class", "ul"]).code, 2);
}

#[test]
fn decompose_commands() {
    let r = fepkit(&["decompose", &fixture("square.alg")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("factors: 2"));
    let r = fepkit(&["decompose", &fixture("diamond.alg")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("factors: none"));
}

#[test]
fn omega_command() {
    let r = fepkit(&["omega", &fixture("pairs.seq"), "--len", "3"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("positions: 2 3 5"));
    assert!(r.stdout.contains("labels: ascending ascending"));
    let r = fepkit(&["omega", &fixture("pairs.seq"), "--len", "5"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("result: insufficient"));
    assert_eq!(fepkit(&["omega", &fixture("l3.alg"), "--len", "2"]).code, 2);
}

#[test]
fn save_then_load_round_trips() {
    let file = AlgebraFile::load(std::path::Path::new(&fixture("square.alg"))).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("copy.alg");
    file.save(&path).unwrap();
    assert_eq!(AlgebraFile::load(&path).unwrap(), file);
}

#[test]
fn usage_errors() {
    assert_eq!(fepkit(&[]).code, 2);
    assert_eq!(fepkit(&["frobnicate"]).code, 2);
    assert_eq!(fepkit(&["--help"]).code, 0);
}
