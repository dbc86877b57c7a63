use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_planar-defect");

fn run(args: &[&str], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(bytes) = stdin {
            pipe.write_all(bytes).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "bad JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn gadget_text(args: &[&str]) -> Vec<u8> {
    let mut all = vec!["gadget"];
    all.extend(args);
    let out = run(&all, None);
    assert!(out.status.success());
    out.stdout
}

/// Cycle C_n in the rotation format, written with plain string formatting.
fn cycle_file(n: usize) -> String {
    let mut s = String::from("planar-rot 1\n");
    for v in 0..n {
        s.push_str(&format!("{v}: {} {}\n", (v + n - 1) % n, (v + 1) % n));
    }
    s
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn x1_is_not_001_colourable() {
    let out = run(&["solve", "--spec", "0,0,1", "--expect", "infeasible"], Some(&gadget_text(&["X", "--D", "1"])));
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["status"], "infeasible");
    assert!(v["result"]["coloring"].is_null());
    assert_eq!(v["schema"], 1);
    assert_eq!(v["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn wrong_expectation_exits_one() {
    let out = run(&["solve", "--spec", "0,0,1", "--expect", "feasible"], Some(&gadget_text(&["X", "--D", "1"])));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn feasible_solve_reports_one_based_colouring() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.rot", &cycle_file(5));
    let out = run(&["solve", "--spec", "0,0,0", "--pin", "1=3", &c5], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["status"], "feasible");
    let coloring = v["result"]["coloring"].as_object().unwrap();
    assert_eq!(coloring.len(), 5);
    assert_eq!(coloring["1"], 3);
    assert!(coloring.values().all(|c| (1..=3).contains(&c.as_u64().unwrap())));
}

#[test]
fn c8_has_no_3_4_or_6_cycle() {
    let dir = tempfile::tempdir().unwrap();
    let c8 = write(dir.path(), "c8.rot", &cycle_file(8));
    let out = run(&["check-cycles", "--forbid", "3,4,6", "--spectrum", &c8], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"][0]["spectrum"], serde_json::json!([8]));

    let out = run(&["check-cycles", "--forbid", "8", &c8], None);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"][0]["violations"], serde_json::json!([8]));
}

#[test]
fn discharge_reports_totals_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let c7 = write(dir.path(), "c7.rot", &cycle_file(7));
    let csv = dir.path().join("ledger.csv");
    let out = run(&["discharge", "--section", "bal2", "--csv", csv.to_str().unwrap(), &c7], None);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v = json(&out);
    let audit = &v["result"][0]["audit"];
    assert_eq!(audit["initial_total"], "-12");
    assert_eq!(audit["final_total"], "-12");
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("graph,rule,source,target,amount\n"));
}

#[test]
fn discharge_precondition_failure_exits_two() {
    let out = run(&["discharge", "--section", "bal2"], Some(&gadget_text(&["H", "--D", "1", "--l", "1"])));
    assert_eq!(out.status.code(), Some(2));
    assert!(json(&out)["result"][0]["error"].as_str().unwrap().contains("4-cycle"));
}

#[test]
fn gadget_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let rot = dir.path().join("t1.rot");
    let out = run(&["gadget", "T", "--D", "1", "--out", rot.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(rot.exists());
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("t1.rot.json")).unwrap()).unwrap();
    assert_eq!(sidecar["descriptor"]["D"], 1);

    let out = run(&["verify-gadget", rot.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["failed"], 0);
    assert!(v["result"]["passed"].as_u64().unwrap() > 0);
}

#[test]
fn verify_gadget_catches_a_wrong_graph() {
    let dir = tempfile::tempdir().unwrap();
    let rot = dir.path().join("t1.rot");
    run(&["gadget", "T", "--D", "1", "--out", rot.to_str().unwrap()], None);
    // a plain cycle under the T(1) descriptor
    let c5 = write(dir.path(), "c5.rot", &cycle_file(5));
    let desc = dir.path().join("t1.rot.json");
    let out = run(&["verify-gadget", &c5, "--descriptor", desc.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn color55_writes_a_colouring() {
    let dir = tempfile::tempdir().unwrap();
    let c9 = write(dir.path(), "c9.rot", &cycle_file(9));
    let target = dir.path().join("col.json");
    let out = run(&["color55", &c9, "--out", target.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let coloring: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(coloring.as_object().unwrap().len(), 9);
}

#[test]
fn color55_rejects_four_cycles() {
    let out = run(&["color55"], Some(cycle_file(4).as_bytes()));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_two() {
    let out = run(&["solve", "--spec", "1,1"], Some(b"planar-rot 1\n0: 1\n1: 2\n"));
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = run(&["solve", "--spec", "1,x"], Some(&cycle_file(3).into_bytes()));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn min_d_and_cnf() {
    let out = run(&["min-d", "-k", "2"], Some(cycle_file(5).as_bytes()));
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["min_d"], 1);

    let out = run(&["cnf", "--spec", "0,0"], Some(cycle_file(5).as_bytes()));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("p cnf ")));
}

#[test]
fn corpus_audit_over_exported_files() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("corpus");
    let out = run(&["corpus-audit", "--seed", "5", "--export", export.to_str().unwrap()], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let count = v["result"]["graphs"].as_u64().unwrap() as usize;
    assert_eq!(std::fs::read_dir(&export).unwrap().count(), count);
    assert_eq!(v["result"]["checks_failed"], 0);

    let mut files: Vec<String> =
        std::fs::read_dir(&export).unwrap().map(|e| e.unwrap().path().display().to_string()).collect();
    files.sort();
    let mut args = vec!["corpus-audit"];
    args.extend(files.iter().take(10).map(String::as_str));
    let out = run(&args, None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["inputs"].as_array().unwrap().len(), 10);
}
