use std::time::Duration;

use super::*;
use crate::hypersurface::SingularityLabel;
use crate::limits::Limits;

fn projective() -> AnalyzeOptions {
    AnalyzeOptions {
        projective: true,
        ..AnalyzeOptions::default()
    }
}

#[test]
fn cayley_cubic_report() {
    let r = analyze_text("x,y,z,w", "x*y*z + x*y*w + x*z*w + y*z*w", projective()).unwrap();
    assert_eq!(r.verdicts.gradient_linear_type, Some(true));
    assert_eq!(r.singular_points.len(), 4);
    assert!(r
        .singular_points
        .iter()
        .all(|p| p.label == SingularityLabel::A(1) && p.milnor == 1 && p.tjurina == 1));
    assert_eq!(r.verdicts.charts.len(), 4);
}

#[test]
fn json_round_trip() {
    let r = analyze_text(
        "x,y",
        "x^4 - x^2*y^2 + y^5",
        AnalyzeOptions {
            presentations: true,
            ..AnalyzeOptions::default()
        },
    )
    .unwrap();
    assert!(!r.verdicts.locally_eulerian);
    assert!(!r.verdicts.jacobian_linear_type);
    assert_eq!(r.verdicts.witness_t_degree, Some(2));
    let back = AnalysisReport::from_json(&r.to_json()).unwrap();
    assert_eq!(back, r);
    let text = r.to_text();
    assert!(text.contains("locally Eulerian: false"));
    assert!(text.contains("Jacobian linear type: false"));
}

#[test]
fn projective_non_eulerian_quintic() {
    let r = analyze_text("x,y,z", "x^4*z - x^2*y^2*z + y^5", projective()).unwrap();
    assert_eq!(r.verdicts.gradient_linear_type, Some(false));
    assert!(r.to_text().contains("gradient linear type: false"));
}

#[test]
fn deep_projective_agrees_with_charts() {
    let opts = AnalyzeOptions {
        projective: true,
        deep: true,
        presentations: true,
    };
    let r = analyze_text("x,y,z", "y^2*z - x^3 - x^2*z", opts).unwrap();
    assert_eq!(r.verdicts.gradient_linear_type, Some(true));
    assert!(r.verdicts.witness.is_none());
    assert!(r.presentations.is_some());
}

#[test]
fn preconditions_are_reported() {
    let e = analyze_text("x,y", "x^2*y", AnalyzeOptions::default()).unwrap_err();
    assert!(e.is_precondition());
    let e = analyze_text("x,y,z", "x^2*y*z", projective()).unwrap_err();
    assert!(e.is_precondition());
}

#[test]
fn nodal_quartics_are_deterministic_and_nodal() {
    for seed in 1..=5 {
        let f = nodal_quartic(seed);
        assert_eq!(f, nodal_quartic(seed));
        assert_eq!(f.total_degree(), Some(4));
    }
    assert_ne!(nodal_quartic(1), nodal_quartic(2));
}

#[test]
fn shipped_corpus_matches() {
    let curves = corpus();
    assert!(curves.len() >= 12);
    for r in run_corpus(&curves, Limits::default()).unwrap() {
        assert!(r.matches, "{} {:?}", r.name, r.labels);
    }
}

#[test]
fn family_scan_summary() {
    let scan = family_scan(4, 4, Limits::default()).unwrap();
    assert_eq!(
        scan.records.len(),
        scan.agreements + scan.disagreements + scan.unspecified + scan.degenerate
    );
    assert_eq!(scan.disagreements, 0);
    assert_eq!(
        (
            scan.records[0].a,
            scan.records[0].b,
            scan.records[0].c,
            scan.records[0].d
        ),
        (2, 2, 0, 0)
    );
}

#[test]
fn cubic_experiment_is_reproducible() {
    let limits = with_timeout(Limits::default(), Duration::from_secs(30));
    let a = cubic_experiment(4, 7, limits).unwrap();
    let b = cubic_experiment(4, 7, limits).unwrap();
    let polys = |e: &CubicExperiment| {
        e.trials
            .iter()
            .map(|t| t.polynomial.clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(polys(&a), polys(&b));
    assert_eq!(a.trials.len(), 4);
    assert_eq!(a.trials[0].polynomial, "x*y*z + x*y*w + x*z*w + y*z*w");
    assert!(matches!(
        a.trials[0].status,
        TrialStatus::Checked {
            gradient_linear_type: true,
            singular: true
        }
    ));
    assert_eq!(
        a.linear_type + a.not_linear_type + a.skipped + a.timeouts,
        4
    );
    let empty = cubic_experiment(0, 7, limits).unwrap();
    assert!(empty.trials.is_empty() && empty.counterexamples.is_empty());
}

#[test]
fn tight_limits_surface_as_resource_errors() {
    let tight = Limits {
        max_pairs: 1,
        max_terms: 10,
        timeout: None,
    };
    let e = crate::limits::scoped(tight, || {
        analyze_text("x,y,z,w", "x*y*z + x*y*w + x*z*w + y*z*w", projective())
    })
    .unwrap_err();
    assert!(matches!(e, Error::ResourceLimit(_)));
}
