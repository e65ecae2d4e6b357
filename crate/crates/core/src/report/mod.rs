//! Whole-hypersurface analysis reports and the batch drivers behind the CLI.

mod batch;
mod text;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::blowup::{
    aluffi_presentation, linear_type_analysis, rees_ideal, sym_ideal, PresentationIdeal,
};
use crate::error::{Error, Result};
use crate::hypersurface::{
    jacobian_ideal, quasi_homogeneous_type, AffineHypersurface, ChartVerdict,
    ProjectiveHypersurface, QuasiHomogeneousType, SingularityReport,
};
use crate::poly::{parse_polynomial, Polynomial, Ring};

pub use batch::{
    corpus, cubic_experiment, family_scan, nodal_quartic, run_corpus, with_timeout, CorpusCurve,
    CorpusResult, CubicExperiment, CubicTrial, FamilyScan, TrialStatus,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub projective: bool,
    pub presentations: bool,
    /// Also decide gradient linear type of a projective hypersurface directly
    /// through the Rees algebra of `J(f)`.
    pub deep: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub polynomial: String,
    pub vars: Vec<String>,
    pub projective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub reduced: bool,
    pub isolated: bool,
    pub locally_eulerian: bool,
    pub jacobian_linear_type: bool,
    /// Projective input only.
    pub gradient_linear_type: Option<bool>,
    pub charts: Vec<ChartVerdict>,
    /// Whether all singular points are rational (so the point list is the whole singular locus).
    pub all_points_rational: bool,
    pub quasi_homogeneous: Option<QuasiHomogeneousType>,
    /// A nonlinear Rees relation when the linear-type test failed.
    pub witness: Option<String>,
    pub witness_t_degree: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentations {
    /// `R[T]` variable order of every polynomial below.
    pub ring: Vec<String>,
    pub sym: Vec<String>,
    pub rees: Vec<String>,
    pub aluffi: Vec<String>,
    pub sym_basis: Vec<String>,
    pub rees_basis: Vec<String>,
    pub aluffi_basis: Vec<String>,
    /// Quasi-homogeneous shape of the Aluffi ideal, when it applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aluffi_quasi_homogeneous: Option<Vec<String>>,
    /// Locally Eulerian shape of the Aluffi ideal, when it applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aluffi_eulerian: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub input: InputEcho,
    pub verdicts: Verdicts,
    pub singular_points: Vec<SingularityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentations: Option<Presentations>,
    /// Microseconds per stage.
    pub timings: BTreeMap<String, u64>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<AnalysisReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        text::render(self)
    }
}

struct Stopwatch {
    timings: BTreeMap<String, u64>,
}

impl Stopwatch {
    fn new() -> Self {
        Stopwatch {
            timings: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> Result<T>) -> Result<T> {
        let start = Instant::now();
        let out = f();
        self.timings
            .insert(stage.to_string(), start.elapsed().as_micros() as u64);
        out
    }
}

/// Parse `poly` over `vars` (comma separated) and analyze it.
pub fn analyze_text(vars: &str, poly: &str, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let ring = Ring::from_list(vars)?;
    let f = parse_polynomial(poly, &ring)?;
    analyze(&f, options)
}

/// Full analysis of `V(f)`; fails with a precondition error for non-reduced
/// or non-isolated input and with `Inconsistent` if independent verdicts disagree.
pub fn analyze(f: &Polynomial, options: AnalyzeOptions) -> Result<AnalysisReport> {
    if options.projective {
        analyze_projective(f, options)
    } else {
        analyze_affine(f, options)
    }
}

fn echo(f: &Polynomial, projective: bool) -> InputEcho {
    InputEcho {
        polynomial: f.to_string(),
        vars: f.ring().vars().to_vec(),
        projective,
    }
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn basis_strings(p: &PresentationIdeal) -> Result<Vec<String>> {
    Ok(strings(p.reduced_basis()?.elements()))
}

fn analyze_affine(f: &Polynomial, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let mut clock = Stopwatch::new();
    let h = AffineHypersurface::new(f.clone())?;
    clock.time("preconditions", || {
        if !h.is_reduced()? {
            return Err(Error::NotReduced);
        }
        if !h.has_isolated_singularities()? {
            return Err(Error::NotIsolated);
        }
        Ok(())
    })?;
    let found = clock.time("singular_points", || h.rational_singular_points())?;
    let singular_points = clock.time("classification", || {
        found
            .points
            .iter()
            .map(|p| h.classify(p))
            .collect::<Result<Vec<_>>>()
    })?;
    let locally_eulerian = clock.time("locally_eulerian", || h.is_locally_eulerian(None))?;
    let lt = clock.time("linear_type", || linear_type_analysis(h.jacobian_ideal()?))?;
    let quasi_homogeneous = quasi_homogeneous_type(f);

    let nbase = f.ring().nvars();
    let verdicts = Verdicts {
        reduced: true,
        isolated: true,
        locally_eulerian,
        jacobian_linear_type: lt.verdict.is_linear_type,
        gradient_linear_type: None,
        charts: Vec::new(),
        all_points_rational: found.complete,
        quasi_homogeneous,
        witness: lt.verdict.witness.as_ref().map(|w| w.to_string()),
        witness_t_degree: lt.verdict.witness_t_degree(nbase),
    };
    check_equivalence(&verdicts, &singular_points, verdicts.jacobian_linear_type)?;

    let presentations = if options.presentations {
        Some(clock.time("presentations", || {
            let al = aluffi_presentation(f)?;
            Ok(Presentations {
                ring: lt.sym.ring().vars().to_vec(),
                sym: strings(lt.sym.generators()),
                rees: strings(lt.rees.generators()),
                aluffi: strings(al.general.generators()),
                sym_basis: basis_strings(&lt.sym)?,
                rees_basis: basis_strings(&lt.rees)?,
                aluffi_basis: basis_strings(&al.general)?,
                aluffi_quasi_homogeneous: al.quasi_homogeneous.map(|p| strings(p.generators())),
                aluffi_eulerian: al.eulerian.map(|p| strings(p.generators())),
            })
        })?)
    } else {
        None
    };

    Ok(AnalysisReport {
        input: echo(f, false),
        verdicts,
        singular_points,
        presentations,
        timings: clock.timings,
    })
}

fn analyze_projective(f: &Polynomial, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let mut clock = Stopwatch::new();
    let h = ProjectiveHypersurface::new(f.clone())?;
    clock.time("preconditions", || {
        if !h.is_reduced()? {
            return Err(Error::NotReduced);
        }
        if !h.has_isolated_singularities()? {
            return Err(Error::NotIsolated);
        }
        Ok(())
    })?;
    let found = clock.time("singular_points", || h.rational_singular_points())?;
    let singular_points = clock.time("classification", || {
        found
            .points
            .iter()
            .map(|p| h.classify(p))
            .collect::<Result<Vec<_>>>()
    })?;
    let glt = clock.time("gradient_linear_type", || h.gradient_linear_type())?;

    let nbase = f.ring().nvars();
    let direct = if options.deep {
        Some(clock.time("rees_gradient", || {
            linear_type_analysis(h.gradient_ideal()?)
        })?)
    } else {
        None
    };
    let (witness, witness_t_degree) = match &direct {
        Some(lt) => (
            lt.verdict.witness.as_ref().map(|w| w.to_string()),
            lt.verdict.witness_t_degree(nbase),
        ),
        None => (None, None),
    };
    if let Some(lt) = &direct {
        if lt.verdict.is_linear_type != glt.value {
            return Err(Error::Inconsistent(format!(
                "chart-wise gradient linear type {} but Rees comparison says {}",
                glt.value, lt.verdict.is_linear_type
            )));
        }
    }
    let verdicts = Verdicts {
        reduced: true,
        isolated: true,
        locally_eulerian: glt.value,
        jacobian_linear_type: glt.value,
        gradient_linear_type: Some(glt.value),
        charts: glt.charts,
        all_points_rational: found.complete,
        quasi_homogeneous: quasi_homogeneous_type(f),
        witness,
        witness_t_degree,
    };
    check_equivalence(&verdicts, &singular_points, glt.value)?;

    let presentations = if options.presentations {
        Some(clock.time("presentations", || {
            let (sym, rees) = match direct {
                Some(lt) => (lt.sym, lt.rees),
                None => {
                    let j = h.gradient_ideal()?;
                    (sym_ideal(j)?, rees_ideal(j)?)
                }
            };
            // Aluffi ideal of I(f) = (f, J(f)) with T0 paired with f
            let jac = jacobian_ideal(f)?;
            let jac_rees = rees_ideal(&jac)?;
            let ring = jac_rees.ring().clone();
            let mut gens = jac_rees.generators().to_vec();
            gens.push(f.embed(&ring)?);
            gens.push(Polynomial::var(&ring, nbase)?);
            let aluffi = crate::ideal::Ideal::new(&ring, gens)?;
            Ok(Presentations {
                ring: sym.ring().vars().to_vec(),
                sym: strings(sym.generators()),
                rees: strings(rees.generators()),
                aluffi: strings(aluffi.generators()),
                sym_basis: basis_strings(&sym)?,
                rees_basis: basis_strings(&rees)?,
                aluffi_basis: strings(aluffi.gb()?.elements()),
                aluffi_quasi_homogeneous: None,
                aluffi_eulerian: None,
            })
        })?)
    } else {
        None
    };

    Ok(AnalysisReport {
        input: echo(f, true),
        verdicts,
        singular_points,
        presentations,
        timings: clock.timings,
    })
}

/// Locally Eulerian ⟺ linear type ⟺ `μ = τ` at every singular point.
fn check_equivalence(
    verdicts: &Verdicts,
    points: &[SingularityReport],
    linear_type: bool,
) -> Result<()> {
    if verdicts.locally_eulerian != linear_type {
        return Err(Error::Inconsistent(format!(
            "locally Eulerian {} but linear type {}",
            verdicts.locally_eulerian, linear_type
        )));
    }
    for p in points {
        if p.locally_eulerian != (p.milnor == p.tjurina) {
            return Err(Error::Inconsistent(format!(
                "at {}: locally Eulerian {} with mu = {}, tau = {}",
                p.point, p.locally_eulerian, p.milnor, p.tjurina
            )));
        }
        if p.milnor < p.tjurina {
            return Err(Error::Inconsistent(format!("at {}: mu < tau", p.point)));
        }
    }
    let pointwise = points.iter().all(|p| p.locally_eulerian);
    if verdicts.all_points_rational && pointwise != verdicts.locally_eulerian {
        return Err(Error::Inconsistent(format!(
            "point-wise verdict {pointwise} disagrees with global verdict {}",
            verdicts.locally_eulerian
        )));
    }
    if !pointwise && verdicts.locally_eulerian {
        return Err(Error::Inconsistent(
            "a rational point fails but the global verdict holds".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
