use std::path::{Path, PathBuf};
use std::process::Command;

use qtwist::cochain::{extend_seed, SeedKind};
use qtwist::io::{emit_cochain, emit_space, load_space};
use qtwist::linalg::{frac, q, Matrix};
use qtwist::scenarios::{build_psi_q, plane, plane_weights, r_matrix};
use qtwist::space::twist;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str]) -> Run {
    let mut all = vec!["qtwist"];
    all.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = qtwist::cli::run(all, &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PLANE: &str = r#"{"name": "plane", "generators": ["a", "b"], "cutoff": 3,
  "relations": [{"degree": 2, "terms": [{"word": [0, 1], "coef": "1"}, {"word": [1, 0], "coef": "-1"}]}]}"#;
const PSI_Q: &str = r#"{"kind": "diagonal", "cutoff": 3, "q": "3/2", "weights": [[0, 1], [0, 0]]}"#;

#[test]
fn twist_writes_the_quantum_plane() {
    let dir = tempfile::tempdir().unwrap();
    let (sp, cp, out) = (write(dir.path(), "p.json", PLANE), write(dir.path(), "c.json", PSI_Q), dir.path().join("q.json"));
    let r = run(&["twist", "--space", s(&sp), "--cochain", s(&cp), "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("degree 2: ab - 3/2 ba"), "{}", r.stdout);
    let expected = twist(&plane(3), &build_psi_q(&plane_weights(), &frac(3, 2), 3).unwrap()).unwrap();
    assert_eq!(load_space(&out, None).unwrap().ideal(), expected.ideal());
}

#[test]
fn binary_runs_a_suite() {
    let o = Command::new(env!("CARGO_BIN_EXE_qtwist")).args(["verify", "--suite", "cosimplicial", "--seed", "7"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("PASS"));
}

#[test]
fn non_cocycle_exits_one_with_the_failing_block() {
    let dir = tempfile::tempdir().unwrap();
    let seed = Matrix::from_i64(&[&[1, 2, 0, 1], &[0, 1, 1, 0], &[3, 0, 1, 1], &[0, 1, 0, 2]]);
    let c = write(dir.path(), "c.json", &emit_cochain(&extend_seed(&seed, SeedKind::Bicharacter, 3).unwrap()));
    let r = run(&["check", "--cochain", s(&c)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("cocycle: FAIL ["), "{}", r.stdout);
}

#[test]
fn inadmissible_twist_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let sp = write(dir.path(), "p.json", PLANE);
    let c = write(dir.path(), "c.json", &emit_cochain(&extend_seed(&r_matrix(&q(2)), SeedKind::Bicharacter, 3).unwrap()));
    let r = run(&["twist", "--space", s(&sp), "--cochain", s(&c)]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("not admissible [1, 2]"), "{}", r.stdout);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", PSI_Q);
    let bad = write(dir.path(), "bad.json", &PLANE.replace("[0, 1]", "[0]"));
    let r = run(&["twist", "--space", s(&bad), "--cochain", s(&c)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("relations[0].terms[0]"), "{}", r.stderr);
    assert_eq!(run(&["twist", "--space", s(&dir.path().join("none.json")), "--cochain", s(&c)]).code, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    let sp = write(dir.path(), "p.json", PLANE);
    assert_eq!(run(&["twist", "--space", s(&sp), "--cochain", s(&c), "--cutoff", "4"]).code, 2);
}

#[test]
fn lowering_the_cutoff_is_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let (sp, cp) = (write(dir.path(), "p.json", PLANE), write(dir.path(), "c.json", PSI_Q));
    let r = run(&["hilbert", "--space", s(&sp), "--cochain", s(&cp), "--cutoff", "2"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("hilbert: 1 2 3\n"), "{}", r.stdout);
}

#[test]
fn identical_invocations_give_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let (sp, cp) = (write(dir.path(), "p.json", PLANE), write(dir.path(), "c.json", PSI_Q));
    let (o1, o2) = (dir.path().join("1.json"), dir.path().join("2.json"));
    let r1 = run(&["twist", "--space", s(&sp), "--cochain", s(&cp), "--out", s(&o1)]);
    let r2 = run(&["twist", "--space", s(&sp), "--cochain", s(&cp), "--out", s(&o2)]);
    assert_eq!(r1.stdout, r2.stdout);
    assert_eq!(std::fs::read(&o1).unwrap(), std::fs::read(&o2).unwrap());
    let v1 = run(&["verify", "--suite", "star", "--seed", "3"]);
    assert_eq!(v1.stdout, run(&["verify", "--suite", "star", "--seed", "3"]).stdout);
}

#[test]
fn t14_unmet_precondition_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let sp = write(dir.path(), "p.json", PLANE);
    let c = write(dir.path(), "c.json", &emit_cochain(&extend_seed(&r_matrix(&q(2)), SeedKind::Bicharacter, 3).unwrap()));
    let r = run(&["verify", "--suite", "T14", "--space", s(&sp), "--cochain", s(&c)]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert!(r.stdout.contains("PRECONDITION-UNMET"), "{}", r.stdout);
}

#[test]
fn summary_omits_runtime_without_timing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    assert_eq!(run(&["verify", "--suite", "q_plane", "--out", s(&out)]).code, 0);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["runtime_ms"].is_null());
    assert_eq!(v["passed"], serde_json::json!(true));
    let r = run(&["verify", "--suite", "q_plane", "--out", s(&out), "--timing"]);
    assert!(r.stdout.contains("runtime: "));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v["runtime_ms"].is_number());
}

#[test]
fn dual_of_the_plane_is_the_exterior_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let sp = write(dir.path(), "p.json", &emit_space(&plane(3)));
    let r = run(&["dual", "--space", s(&sp)]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("hilbert: 1 2 1 0"), "{}", r.stdout);
}

#[test]
fn bridge_command_passes_on_a_cocycle() {
    let dir = tempfile::tempdir().unwrap();
    let c = write(dir.path(), "c.json", &emit_cochain(&build_psi_q(&plane_weights(), &frac(3, 2), 2).unwrap()));
    let r = run(&["bridge", "--cochain", s(&c), "--seed", "1"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
}
