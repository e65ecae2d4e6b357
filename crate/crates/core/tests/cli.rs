use std::process::{Command, Output};

use aluffi_kit::report::{AnalysisReport, CubicExperiment, FamilyScan};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aluffi-kit"))
        .args(args)
        .env_remove("ALUFFI_KIT_JOBS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn analyze_json_to_stdout_round_trips() {
    let out = run(&[
        "analyze",
        "--vars",
        "x,y",
        "--poly",
        "x^4 - x^2*y^2 + y^5",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert!(report.verdicts.reduced && report.verdicts.isolated);
    assert!(!report.verdicts.locally_eulerian);
    assert!(!report.verdicts.jacobian_linear_type);
    assert_eq!(report.verdicts.witness_t_degree, Some(2));
    assert_eq!(report.singular_points.len(), 1);
    assert_eq!(
        (
            report.singular_points[0].milnor,
            report.singular_points[0].tjurina
        ),
        (10, 9)
    );
}

#[test]
fn analyze_writes_json_file_and_text() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cusp.json");
    let out = run(&[
        "analyze",
        "--vars",
        "x,y",
        "--poly",
        "y^2 - x^3",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("locally Eulerian: true"), "{text}");
    let report = AnalysisReport::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(report.verdicts.quasi_homogeneous.is_some());
    assert!(report.verdicts.jacobian_linear_type);
}

#[test]
fn analyze_projective_cayley_cubic() {
    let out = run(&[
        "analyze",
        "--vars",
        "x,y,z,w",
        "--poly",
        "x*y*z + x*y*w + x*z*w + y*z*w",
        "--projective",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(report.verdicts.gradient_linear_type, Some(true));
    assert_eq!(report.singular_points.len(), 4);
}

#[test]
fn analyze_presentations_are_included_on_request() {
    let out = run(&[
        "analyze",
        "--vars",
        "x,y",
        "--poly",
        "x*y",
        "--presentations",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let report = AnalysisReport::from_json(&stdout(&out)).unwrap();
    let p = report.presentations.expect("presentations requested");
    assert!(!p.sym.is_empty() && !p.rees.is_empty() && !p.aluffi.is_empty());
}

#[test]
fn exit_codes_distinguish_failure_kinds() {
    // syntax error
    assert_eq!(
        code(&run(&["analyze", "--vars", "x,y", "--poly", "x^^2"])),
        1
    );
    // unknown variable
    assert_eq!(
        code(&run(&["analyze", "--vars", "x,y", "--poly", "x + z"])),
        1
    );
    // not reduced: precondition
    assert_eq!(
        code(&run(&["analyze", "--vars", "x,y", "--poly", "x^2*y"])),
        2
    );
    // projective input that is not homogeneous
    assert_eq!(
        code(&run(&[
            "analyze",
            "--vars",
            "x,y,z",
            "--poly",
            "x^2 + y",
            "--projective"
        ])),
        2
    );
    // resource ceiling
    let out = run(&[
        "--limit-pairs",
        "1",
        "analyze",
        "--vars",
        "x,y",
        "--poly",
        "x^4 - x^2*y^2 + y^5",
    ]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    // usage
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(
        code(&run(&["family-scan", "--a-max", "1", "--b-max", "4"])),
        1
    );
}

#[test]
fn family_scan_json() {
    let out = run(&[
        "--jobs",
        "2",
        "family-scan",
        "--a-max",
        "4",
        "--b-max",
        "4",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let scan: FamilyScan = serde_json::from_str(&stdout(&out)).unwrap();
    // 0 <= c <= a, 0 <= d <= b for 2 <= a, b <= 4
    let per_side: usize = (2..=4).map(|a| a + 1).sum();
    assert_eq!(scan.records.len(), per_side * per_side);
    assert_eq!(scan.disagreements, 0);
}

#[test]
fn cubic_experiment_with_no_trials() {
    let out = run(&[
        "cubic-experiment",
        "--trials",
        "0",
        "--seed",
        "3",
        "--json",
        "-",
    ]);
    assert_eq!(code(&out), 0);
    let exp: CubicExperiment = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(exp.seed, 3);
    assert!(exp.trials.is_empty() && exp.counterexamples.is_empty());
}

#[test]
fn cubic_experiment_is_reproducible() {
    let args = [
        "cubic-experiment",
        "--trials",
        "3",
        "--seed",
        "11",
        "--json",
        "-",
    ];
    let a: CubicExperiment = serde_json::from_str(&stdout(&run(&args))).unwrap();
    let b: CubicExperiment = serde_json::from_str(&stdout(&run(&args))).unwrap();
    let polys = |e: &CubicExperiment| {
        e.trials
            .iter()
            .map(|t| t.polynomial.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(polys(&a), polys(&b));
    assert_eq!(a.trials.len(), 3);
}

#[test]
fn corpus_text_lists_every_curve() {
    let out = run(&["corpus"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("12/12 curves match"), "{text}");
}
