use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze, AnalyzeOptions};
use crate::error::{Error, Result};
use crate::hypersurface::{
    family_member_verdict, FamilyStatus, FamilyVerdict, ProjectiveHypersurface, SingularityLabel,
};
use crate::limits::{self, Limits};
use crate::poly::{parse_polynomial, Monomial, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyScan {
    pub a_max: u32,
    pub b_max: u32,
    pub records: Vec<FamilyVerdict>,
    pub agreements: usize,
    pub disagreements: usize,
    pub unspecified: usize,
    pub degenerate: usize,
}

/// Every member `x^a + x^c y^d + y^b` with `2 ≤ a ≤ a_max`, `2 ≤ b ≤ b_max`,
/// `0 ≤ c ≤ a`, `0 ≤ d ≤ b`, in lexicographic order of `(a, b, c, d)`.
pub fn family_scan(a_max: u32, b_max: u32, limits: Limits) -> Result<FamilyScan> {
    let mut members = Vec::new();
    for a in 2..=a_max {
        for b in 2..=b_max {
            for c in 0..=a {
                for d in 0..=b {
                    members.push((a, b, c, d));
                }
            }
        }
    }
    let records = members
        .par_iter()
        .map(|&(a, b, c, d)| limits::scoped(limits, || family_member_verdict(a, b, c, d)))
        .collect::<Result<Vec<_>>>()?;
    let count = |pred: &dyn Fn(&FamilyVerdict) -> bool| records.iter().filter(|r| pred(r)).count();
    Ok(FamilyScan {
        a_max,
        b_max,
        agreements: count(&|r| r.agrees == Some(true)),
        disagreements: count(&|r| r.agrees == Some(false)),
        unspecified: count(&|r| r.status == FamilyStatus::Ok && r.expected.is_none()),
        degenerate: count(&|r| r.status != FamilyStatus::Ok),
        records,
    })
}

/// A projective plane curve with its expected verdict and singularity labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusCurve {
    pub name: String,
    pub vars: String,
    pub polynomial: String,
    pub gradient_linear_type: bool,
    pub labels: Vec<SingularityLabel>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusResult {
    pub name: String,
    pub polynomial: String,
    pub gradient_linear_type: bool,
    pub labels: Vec<SingularityLabel>,
    pub matches: bool,
}

fn curve(name: &str, poly: &str, labels: &[SingularityLabel]) -> CorpusCurve {
    CorpusCurve {
        name: name.into(),
        vars: "x,y,z".into(),
        polynomial: poly.into(),
        gradient_linear_type: true,
        labels: labels.to_vec(),
    }
}

/// The shipped curve list: nodal and cuspidal curves plus the reducible cubics.
pub fn corpus() -> Vec<CorpusCurve> {
    use SingularityLabel::*;
    let mut curves = vec![
        curve("nodal cubic", "y^2*z - x^3 - x^2*z", &[A(1)]),
        curve("cuspidal cubic", "y^2*z - x^3", &[A(2)]),
        curve(
            "three concurrent lines",
            "(y - z)*(z - x)*(x - y)",
            &[NonDoublePoint],
        ),
        curve(
            "conic and secant line",
            "(x^2 + y^2 - z^2)*y",
            &[A(1), A(1)],
        ),
        curve("conic and tangent line", "(y*z - x^2)*y", &[A(3)]),
        curve("three general lines", "x*y*z", &[A(1), A(1), A(1)]),
        curve(
            "tricuspidal quartic",
            "x^2*y^2 + y^2*z^2 + z^2*x^2 - 2*x*y*z*(x + y + z)",
            &[A(2), A(2), A(2)],
        ),
    ];
    for seed in 1..=5 {
        curves.push(CorpusCurve {
            name: format!("random nodal quartic {seed}"),
            vars: "x,y,z".into(),
            polynomial: nodal_quartic(seed).to_string(),
            gradient_linear_type: true,
            labels: vec![A(1); 3],
        });
    }
    curves
}

/// Analyze every curve; a mismatch is reported in the result, not as an error.
pub fn run_corpus(curves: &[CorpusCurve], limits: Limits) -> Result<Vec<CorpusResult>> {
    curves
        .par_iter()
        .map(|c| {
            limits::scoped(limits, || {
                let ring = Ring::from_list(&c.vars)?;
                let f = parse_polynomial(&c.polynomial, &ring)?;
                let report = analyze(
                    &f,
                    AnalyzeOptions {
                        projective: true,
                        ..AnalyzeOptions::default()
                    },
                )?;
                let glt = report.verdicts.gradient_linear_type.unwrap_or(false);
                let mut labels: Vec<SingularityLabel> =
                    report.singular_points.iter().map(|p| p.label).collect();
                labels.sort_by_key(|l| l.to_string());
                let mut expected = c.labels.clone();
                expected.sort_by_key(|l| l.to_string());
                Ok(CorpusResult {
                    name: c.name.clone(),
                    polynomial: report.input.polynomial,
                    gradient_linear_type: glt,
                    matches: glt == c.gradient_linear_type
                        && labels == expected
                        && report.verdicts.all_points_rational,
                    labels,
                })
            })
        })
        .collect()
}

/// A quartic `a x²y² + b y²z² + c z²x² + xyz(dx + ey + gz)` whose singular
/// locus is exactly three nodes at the coordinate points; deterministic in `seed`.
pub fn nodal_quartic(seed: u64) -> Polynomial {
    let ring = Ring::from_list("x,y,z").expect("valid ring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut nonzero = || loop {
            let v: i64 = rng.gen_range(-4..=4);
            if v != 0 {
                return v;
            }
        };
        let (a, b, c) = (nonzero(), nonzero(), nonzero());
        let (d, e, g) = (
            rng.gen_range(-4..=4i64),
            rng.gen_range(-4..=4i64),
            rng.gen_range(-4..=4i64),
        );
        let f = Polynomial::from_integer_terms(
            &ring,
            [
                (vec![2, 2, 0], a),
                (vec![0, 2, 2], b),
                (vec![2, 0, 2], c),
                (vec![2, 1, 1], d),
                (vec![1, 2, 1], e),
                (vec![1, 1, 2], g),
            ],
        );
        if is_three_node_quartic(&f).unwrap_or(false) {
            return f;
        }
    }
}

fn is_three_node_quartic(f: &Polynomial) -> Result<bool> {
    let h = ProjectiveHypersurface::new(f.clone())?;
    if !h.is_reduced()? || !h.has_isolated_singularities()? {
        return Ok(false);
    }
    let found = h.rational_singular_points()?;
    if !found.complete || found.points.len() != 3 {
        return Ok(false);
    }
    for p in &found.points {
        if h.classify(p)?.label != SingularityLabel::A(1) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum TrialStatus {
    Checked {
        gradient_linear_type: bool,
        singular: bool,
    },
    Skipped {
        reason: String,
    },
    Timeout {
        message: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicTrial {
    pub trial: usize,
    pub polynomial: String,
    #[serde(flatten)]
    pub status: TrialStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicExperiment {
    pub seed: u64,
    pub trials: Vec<CubicTrial>,
    pub linear_type: usize,
    pub not_linear_type: usize,
    pub skipped: usize,
    pub timeouts: usize,
    /// Checked singular cubics that are not of gradient linear type, verbatim.
    pub counterexamples: Vec<String>,
}

/// Cubic surfaces in `Q[x,y,z,w]`: trial 0 is Cayley's nodal cubic, later
/// trials are `w·q(x,y,z) + c(x,y,z)` with random sparse integer coefficients,
/// which are singular at `[0:0:0:1]`. Samples depend only on `seed`.
pub fn cubic_experiment(trials: usize, seed: u64, per_trial: Limits) -> Result<CubicExperiment> {
    let samples = cubic_samples(trials, seed);
    let records: Vec<CubicTrial> = samples
        .into_par_iter()
        .enumerate()
        .map(|(trial, f)| {
            let status = limits::scoped(per_trial, || check_cubic(&f));
            let status = match status {
                Ok(s) => s,
                Err(Error::ResourceLimit(message)) => TrialStatus::Timeout { message },
                Err(e) if e.is_precondition() => TrialStatus::Skipped {
                    reason: e.to_string(),
                },
                Err(e) => return Err(e),
            };
            Ok(CubicTrial {
                trial,
                polynomial: f.to_string(),
                status,
            })
        })
        .collect::<Result<_>>()?;
    let mut out = CubicExperiment {
        seed,
        linear_type: 0,
        not_linear_type: 0,
        skipped: 0,
        timeouts: 0,
        counterexamples: Vec::new(),
        trials: Vec::new(),
    };
    for t in &records {
        match &t.status {
            TrialStatus::Checked {
                gradient_linear_type: true,
                ..
            } => out.linear_type += 1,
            TrialStatus::Checked { .. } => {
                out.not_linear_type += 1;
                out.counterexamples.push(t.polynomial.clone());
            }
            TrialStatus::Skipped { .. } => out.skipped += 1,
            TrialStatus::Timeout { .. } => out.timeouts += 1,
        }
    }
    out.trials = records;
    Ok(out)
}

fn check_cubic(f: &Polynomial) -> Result<TrialStatus> {
    let h = ProjectiveHypersurface::new(f.clone())?;
    if !h.is_reduced()? {
        return Err(Error::NotReduced);
    }
    if !h.has_isolated_singularities()? {
        return Err(Error::NotIsolated);
    }
    let singular = h.gradient_ideal()?.krull_dimension()? >= 1;
    Ok(TrialStatus::Checked {
        gradient_linear_type: h.gradient_linear_type()?.value,
        singular,
    })
}

pub(crate) fn cubic_samples(trials: usize, seed: u64) -> Vec<Polynomial> {
    let ring = Ring::from_list("x,y,z,w").expect("valid ring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(trials);
    if trials > 0 {
        out.push(parse_polynomial("x*y*z + x*y*w + x*z*w + y*z*w", &ring).expect("valid cubic"));
    }
    let mut cubic_monomials = Vec::new();
    for i in 0..=3u32 {
        for j in 0..=3 - i {
            for k in 0..=3 - i - j {
                let l = 3 - i - j - k;
                // drop w^3 and w^2·(linear): keeps [0:0:0:1] singular
                if l < 2 {
                    cubic_monomials.push([i, j, k, l]);
                }
            }
        }
    }
    while out.len() < trials {
        let terms: Vec<(Monomial, Rational)> = cubic_monomials
            .iter()
            .filter_map(|&m| {
                let keep = rng.gen_bool(0.5);
                let c: i64 = rng.gen_range(-3..=3);
                (keep && c != 0).then(|| (Monomial::new(m), Rational::from_integer(c.into())))
            })
            .collect();
        let f = Polynomial::from_terms(&ring, terms);
        if f.total_degree() == Some(3) && f.is_homogeneous() {
            out.push(f);
        }
    }
    out
}

/// Per-trial limits: the global ceilings with a wall-clock budget.
pub fn with_timeout(limits: Limits, timeout: Duration) -> Limits {
    Limits {
        timeout: Some(timeout),
        ..limits
    }
}
