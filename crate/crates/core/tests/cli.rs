//! End-to-end runs of the `rivercross` binary. Golden files live in
//! `tests/golden`; set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::Command;

use rivercross::export::{parse_solution, SolutionsReport};
use rivercross::model::{McMove, McState};
use rivercross::path::validate_solution;
use rivercross::{Limits, McPuzzle};

fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn data(name: &str) -> String {
    manifest().join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_rivercross")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str, actual: &str) {
    let path = manifest().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "output differs from {name}");
}

#[test]
fn solve_counts() {
    assert_eq!(run(&["solve", "--flavor", "mc", "-n", "3"]), (0, "length=11 count=4\n".into(), String::new()));
    let (code, out, _) = run(&["solve", "--flavor", "hw", "-n", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("count=486"), "{out}");
}

#[test]
fn infeasible_instances_exit_2() {
    for (n, b, comp) in [("4", "2", 11), ("5", "2", 13), ("6", "3", 17), ("7", "3", 19)] {
        let (code, out, _) = run(&["solve", "--flavor", "mc", "-n", n, "-b", b]);
        assert_eq!(code, 2);
        assert_eq!(out, format!("unreachable; component={comp}\n"));
        assert_eq!(run(&["feasible", "--flavor", "hw", "-n", n, "-b", b]).0, 2);
    }
    assert_eq!(run(&["feasible", "-n", "4", "-b", "3"]).0, 0);
}

#[test]
fn user_errors_exit_1() {
    for args in [
        &["solve", "-n", "1"][..],
        &["solve", "-n", "3", "-b", "0"],
        &["solve", "-n", "9"],
        &["solve", "--flavor", "xx"],
        &["orbit", "[w1 w1 | : L]"],
        &["lift", "/nonexistent/file"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(out.is_empty() && !err.is_empty(), "{args:?}");
    }
    // the enumeration cap is a flag
    assert_eq!(run(&["--max-n", "9", "solve", "-n", "9", "--flavor", "mc"]).0, 0);
}

#[test]
fn lift_worked_solution() {
    let (code, out, _) = run(&["lift", &data("mc3_worked.txt"), "--fiber"]);
    assert_eq!(code, 0);
    assert!(out.contains("trace=e,[3,1,2],[3,1,2],e,[2,3,1],[3,1,2],[3,1,2],[2,3,1],e,[3,1,2],[3,1,2]\n"));
    assert!(out.ends_with("fiber=216\n"));
    golden("lift_mc3_worked.txt", &out);
}

#[test]
fn malformed_solution_names_the_step() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "[(3,3)|(0,0):L]\n[(1,3)|(2,0):R]\n[(3,3)|(0,0):R]\n").unwrap();
    let (code, _, err) = run(&["lift", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid step 2"), "{err}");

    std::fs::write(&bad, "[(3,3)|(0,0):L]\n[(1,3)|(2,0:R]\n").unwrap();
    let (code, _, err) = run(&["lift", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("invalid step 1"), "{err}");

    std::fs::write(&bad, "[(3,3)|(0,0):L]\n[(1,3)|(2,0):R]\n").unwrap();
    let (code, _, err) = run(&["lift", bad.to_str().unwrap()]);
    assert_eq!(code, 1, "a partial path is not a solution");
    assert!(err.contains("not the goal"), "{err}");
}

#[test]
fn json_round_trip() {
    let (code, out, _) = run(&["solve", "--flavor", "mc", "-n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let report: SolutionsReport<McState, McMove> = serde_json::from_str(&out).unwrap();
    assert_eq!((report.n, report.b, report.length, report.count), (3, 2, 11, 4));
    let puzzle = McPuzzle::new(3, 2, &Limits::default()).unwrap();
    for p in report.paths().unwrap() {
        validate_solution(&puzzle, &p).unwrap();
    }
    assert_eq!(parse_solution(&puzzle, &out).unwrap(), report.paths().unwrap()[0]);

    // the report is accepted by `lift` as a solution file
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("solutions.json");
    std::fs::write(&file, &out).unwrap();
    let (code, lifted, _) = run(&["lift", file.to_str().unwrap(), "--format", "json", "--fiber"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&lifted).unwrap();
    assert_eq!(v["rotations_only"], true);
    assert!(v["fiber"]["count"].as_u64().unwrap() > 0);
    golden("solve_mc3.json", &out);
}

#[test]
fn outputs_are_deterministic() {
    let cases: [&[&str]; 4] = [
        &["solve", "--flavor", "hw", "-n", "3", "--format", "json", "--max-solutions", "20"],
        &["export", "--flavor", "hw", "-n", "3", "--optimal"],
        &["catcheck", "-n", "2", "-L", "5", "--seed", "9"],
        &["export", "--fiber", "-n", "3"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a, b, "{args:?}");
        let mut one_thread = vec!["--jobs", "1"];
        one_thread.extend_from_slice(args);
        assert_eq!(run(&one_thread), a, "{args:?} with one thread");
    }
}

#[test]
fn exports() {
    let (code, out, _) = run(&["export", "--flavor", "mc", "-n", "4", "-b", "2", "--component"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.contains("[label=\"[")).count(), 11);
    golden("mc_n4_b2_component.dot", &out);

    let (code, out, _) = run(&["export", "--fiber", "--solution", &data("mc3_worked.txt")]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("rank=same").count(), 12);
    golden("fiber_mc3_worked.dot", &out);

    let (code, out, _) = run(&["export", "--flavor", "mc", "-n", "3", "--optimal"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph mc_n3_b2_optimal {"));

    assert_eq!(run(&["export", "--flavor", "mc", "-n", "4", "-b", "2", "--optimal"]).0, 2);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.dot");
    let (code, out, _) = run(&["export", "-n", "3", "-o", file.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(std::fs::read_to_string(file).unwrap().starts_with("graph mc_n3_b2 {"));
}

#[test]
fn orbit_listing() {
    let (code, out, _) = run(&["orbit", "[w3 h1 h2 h3 | w1 w2 : R]"]);
    assert_eq!(code, 0);
    golden("orbit_w3.txt", &out);
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn catcheck_n3() {
    let (code, out, _) = run(&["catcheck", "-n", "3", "-L", "6"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["full", "faithful", "essentially_surjective"] {
        assert_eq!(v[key], true, "{key}");
    }
    assert_eq!(v["L"], 6);
    assert!(v["counterexamples"].as_array().unwrap().is_empty());
    assert!(v["laws"].as_array().unwrap().iter().all(|l| l["failures"] == 0));
}

#[test]
fn budgets_are_clean_errors() {
    let (code, _, err) = run(&["catcheck", "-n", "3", "-L", "8", "--budget", "1000"]);
    assert_eq!(code, 1);
    assert!(err.contains("budget exceeded"), "{err}");
}
