//! CLI contract tests: exit codes, stream routing, determinism, and the
//! on-disk formats, driven through the same `run` entry point the binary
//! uses (plus one real process spawn to cover the executable wiring).

mod common;

use chromatiq::cli::{run, Cli};
use chromatiq::{compute_depth, optimize, CircuitDoc, OptimizeOptions, QubitDisjoint};
use clap::Parser;
use std::path::Path;
use std::process::Command;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let cli = Cli::try_parse_from(args).expect("test arguments must parse");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(cli, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn write_motivating_circuit(path: &Path) {
    std::fs::write(
        path,
        r#"{
  "qubits": 9,
  "gates": [
    { "id": 0, "kind": "toffoli", "controls": [1, 3], "targets": [4] },
    { "id": 1, "kind": "toffoli", "controls": [2, 3], "targets": [5] },
    { "id": 2, "kind": "toffoli", "controls": [1, 6], "targets": [7] },
    { "id": 3, "kind": "toffoli", "controls": [2, 6], "targets": [8] }
  ]
}"#,
    )
    .unwrap();
}

#[test]
fn optimize_output_file_reparses_to_the_in_memory_result() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.json");
    let output = dir.path().join("out.json");
    write_motivating_circuit(&input);

    let (code, report, _) = invoke(&[
        "chromatiq",
        "optimize",
        "--in",
        input.to_str().unwrap(),
        "--out",
        output.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    // The written file must equal what the library computes in memory.
    let original: CircuitDoc = chromatiq::read_json(&input).unwrap();
    let (expected, expected_report) = optimize(
        &original.into_circuit().unwrap(),
        &QubitDisjoint,
        OptimizeOptions::default(),
    )
    .unwrap();
    let written = chromatiq::read_json::<CircuitDoc>(&output)
        .unwrap()
        .into_circuit()
        .unwrap();
    assert_eq!(written, expected);
    assert_eq!(compute_depth(&written, &QubitDisjoint).0, 2);

    let report: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(report["output_depth"], expected_report.output_depth as u64);
    assert_eq!(report["solver_name"], "dsatur");
}

#[test]
fn malformed_and_invalid_inputs_exit_one_with_a_diagnostic() {
    let dir = tempfile::tempdir().unwrap();

    let truncated = dir.path().join("truncated.json");
    std::fs::write(&truncated, "{\"qubits\": 3, \"gates\": [").unwrap();
    let (code, _, err) = invoke(&["chromatiq", "optimize", "--in", truncated.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("truncated.json"), "diagnostic: {err}");

    // Structurally valid JSON, illegal gate: a control repeated as the
    // target. The diagnostic must name the offending gate.
    let clash = dir.path().join("clash.json");
    std::fs::write(
        &clash,
        "{\"qubits\": 2, \"gates\": [{\"id\": 7, \"kind\": \"cnot\", \
         \"controls\": [0], \"targets\": [0]}]}",
    )
    .unwrap();
    let (code, _, err) = invoke(&["chromatiq", "graph", "--in", clash.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains('7'), "names the gate: {err}");
}

#[test]
fn exact_solver_budget_exhaustion_exits_two() {
    // Four Mycielski steps from a 5-cycle build a triangle-free 95-vertex
    // graph with chromatic number 7. Its largest clique is a single edge,
    // so clique-based pruning gets no traction and the exact solver burns
    // through its node budget; the CLI must report that as exit 2,
    // distinct from validation failures.
    let (mut vertices, mut edges) = (5u32, vec![(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]);
    for _ in 0..4 {
        (vertices, edges) = common::mycielski_step(vertices, &edges);
    }
    assert_eq!((vertices, edges.len()), (95, 755));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mycielski.json");
    chromatiq::write_json(&path, &chromatiq::GraphDoc { vertices, edges }).unwrap();

    let (code, _, err) = invoke(&[
        "chromatiq",
        "chromatic",
        "--in",
        path.to_str().unwrap(),
        "--solver",
        "exact",
    ]);
    assert_eq!(code, 2, "stderr: {err}");
    assert!(err.starts_with("error: "), "diagnostic: {err}");

    // The same graph colors fine heuristically.
    let (code, out, _) = invoke(&["chromatiq", "chromatic", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let doc: chromatiq::ColoringDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(doc.colors.len(), 95);
}

#[test]
fn artifacts_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();

    // gen-mult file output, twice.
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    for path in [&a, &b] {
        let (code, _, _) = invoke(&[
            "chromatiq", "gen-mult", "--n", "8", "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    // optimize over that file, twice, comparing circuit and report.
    let (opt1, opt2) = (dir.path().join("o1.json"), dir.path().join("o2.json"));
    let mut reports = Vec::new();
    for path in [&opt1, &opt2] {
        let (code, report, _) = invoke(&[
            "chromatiq",
            "optimize",
            "--in",
            a.to_str().unwrap(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        reports.push(report);
    }
    assert_eq!(std::fs::read(&opt1).unwrap(), std::fs::read(&opt2).unwrap());
    assert_eq!(reports[0], reports[1]);

    // tradeoff CSV + summary, twice, including the seeded-solver paths.
    let (csv1, csv2) = (dir.path().join("t1.csv"), dir.path().join("t2.csv"));
    let mut summaries = Vec::new();
    for path in [&csv1, &csv2] {
        let (code, summary, _) = invoke(&[
            "chromatiq", "tradeoff", "--n", "6", "--variant", "product", "--budget-max", "40",
            "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        summaries.push(summary);
    }
    let csv = std::fs::read_to_string(&csv1).unwrap();
    assert_eq!(csv, std::fs::read_to_string(&csv2).unwrap());
    assert_eq!(summaries[0], summaries[1]);
    assert!(csv.starts_with("qubits,depth,S,T\n"), "csv: {csv}");

    // verify's summary, twice with an explicit seed.
    let v = ["chromatiq", "verify", "--trials", "25", "--seed", "99"];
    assert_eq!(invoke(&v), invoke(&v));
}

#[test]
fn gen_pipes_into_optimize_and_chromatic() {
    let dir = tempfile::tempdir().unwrap();
    let adder = dir.path().join("adder.json");
    let (code, _, _) = invoke(&[
        "chromatiq", "gen-qft-add", "--n", "12", "--variant", "add",
        "--out", adder.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);

    // The adder's rotations commute; optimize should land on depth 12.
    let (code, _, report) = invoke(&["chromatiq", "optimize", "--in", adder.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(report["output_depth"], 12);

    // Its conflict graph colors to the same number.
    let (code, out, _) = invoke(&["chromatiq", "chromatic", "--in", adder.to_str().unwrap()]);
    assert_eq!(code, 0);
    let coloring: chromatiq::ColoringDoc = serde_json::from_str(&out).unwrap();
    assert_eq!(coloring.count, 12);

    // DOT export of the same circuit.
    let dot = dir.path().join("adder.dot");
    let (code, _, _) = invoke(&[
        "chromatiq", "graph", "--in", adder.to_str().unwrap(), "--out", dot.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph conflicts {"));
}

#[test]
fn the_installed_binary_honors_the_exit_contract() {
    let exe = env!("CARGO_BIN_EXE_chromatiq");

    let help = Command::new(exe).arg("--help").output().unwrap();
    assert!(help.status.success());
    let text = String::from_utf8(help.stdout).unwrap();
    for command in ["optimize", "chromatic", "gen-mult", "tradeoff", "verify"] {
        assert!(text.contains(command), "help lists {command}");
    }

    let verify = Command::new(exe)
        .args(["verify", "--trials", "3", "--max-gates", "5", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(verify.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(verify.stdout).unwrap(),
        "3/3 P1, 3/3 P2, 3/3 Remark1\n"
    );

    // Usage errors are validation errors (exit 1), not clap's default 2,
    // which this tool reserves for solver budget exhaustion.
    let bogus = Command::new(exe).arg("--no-such-flag").output().unwrap();
    assert_eq!(bogus.status.code(), Some(1));
}
