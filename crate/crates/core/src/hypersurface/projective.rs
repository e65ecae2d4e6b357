use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{
    get_or_try, gradient_ideal, points_with_completeness, AffineHypersurface, SingularPoints,
    SingularityReport,
};
use crate::error::{Error, Result};
use crate::ideal::{Ideal, RationalPoint};
use crate::poly::{Polynomial, Ring};

/// `V(f)` in projective space for a homogeneous `f` of degree at least two.
pub struct ProjectiveHypersurface {
    f: Polynomial,
    gradient: OnceLock<Ideal>,
    charts: Vec<OnceLock<AffineHypersurface>>,
}

/// Locally-Eulerian verdict of one affine chart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartVerdict {
    pub chart: usize,
    pub variable: String,
    pub polynomial: String,
    pub locally_eulerian: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradientLinearType {
    pub value: bool,
    pub charts: Vec<ChartVerdict>,
}

impl ProjectiveHypersurface {
    pub fn new(f: Polynomial) -> Result<ProjectiveHypersurface> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if f.total_degree().unwrap_or(0) < 2 {
            return Err(Error::InvalidRing(
                "projective hypersurface needs degree at least 2".into(),
            ));
        }
        let charts = (0..f.ring().nvars()).map(|_| OnceLock::new()).collect();
        Ok(ProjectiveHypersurface {
            f,
            gradient: OnceLock::new(),
            charts,
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    pub fn degree(&self) -> u32 {
        self.f.total_degree().expect("nonzero")
    }

    /// `J(f)`, which equals `I(f)` for homogeneous `f`.
    pub fn gradient_ideal(&self) -> Result<&Ideal> {
        get_or_try(&self.gradient, || gradient_ideal(&self.f))
    }

    /// The affine hypersurface `f = 0` with variable `i` set to one.
    ///
    /// `None` when the chart polynomial is constant (then the chart meets no point of `V(f)`).
    pub fn chart(&self, i: usize) -> Result<Option<&AffineHypersurface>> {
        self.ring().check_index(i)?;
        let g = self.f.dehomogenize(i)?;
        if g.is_constant() {
            return Ok(None);
        }
        get_or_try(&self.charts[i], || AffineHypersurface::new(g)).map(Some)
    }

    pub fn is_reduced(&self) -> Result<bool> {
        let n = self.ring().nvars() as i64;
        Ok(self.gradient_ideal()?.krull_dimension()? <= n - 2)
    }

    /// Singular locus is finite: the affine cone over it has dimension at most one.
    pub fn has_isolated_singularities(&self) -> Result<bool> {
        if !self.is_reduced()? {
            return Err(Error::NotReduced);
        }
        Ok(self.gradient_ideal()?.krull_dimension()? <= 1)
    }

    fn check_preconditions(&self) -> Result<()> {
        if !self.has_isolated_singularities()? {
            return Err(Error::NotIsolated);
        }
        Ok(())
    }

    /// Rational singular points, normalized so the first nonzero coordinate is one.
    ///
    /// Chart `i` contributes the points whose first nonzero coordinate is `x_i`,
    /// so every point is found exactly once.
    pub fn rational_singular_points(&self) -> Result<SingularPoints> {
        self.check_preconditions()?;
        let mut points = Vec::new();
        let mut complete = true;
        for i in 0..self.ring().nvars() {
            let Some(chart) = self.chart(i)? else {
                continue;
            };
            let ring = chart.ring();
            let mut gens = chart.jacobian_ideal()?.generators().to_vec();
            gens.extend((0..i).map(|j| Polynomial::var(ring, j).expect("index in range")));
            let found = points_with_completeness(&Ideal::new(ring, gens)?)?;
            complete &= found.complete;
            for p in found.points {
                points.push(RationalPoint::from_chart(i, p.coords())?);
            }
        }
        Ok(SingularPoints { points, complete })
    }

    /// Classification of a projective singular point in its own chart.
    pub fn classify(&self, p: &RationalPoint) -> Result<SingularityReport> {
        let (chart, affine) = self.chart_of(p)?;
        let mut report = chart.classify(&affine)?;
        report.point = p.clone();
        report.evidence.chart = p.chart();
        Ok(report)
    }

    pub fn milnor_tjurina(&self, p: &RationalPoint) -> Result<(u64, u64)> {
        let (chart, affine) = self.chart_of(p)?;
        chart.milnor_tjurina(&affine)
    }

    fn chart_of(&self, p: &RationalPoint) -> Result<(&AffineHypersurface, RationalPoint)> {
        if p.dim() != self.ring().nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring().nvars(),
                got: p.dim(),
            });
        }
        let p = if p.is_projective() {
            p.clone()
        } else {
            RationalPoint::projective(p.coords().to_vec())?
        };
        let i = p.chart().expect("projective point");
        let chart = self.chart(i)?.ok_or(Error::NotSingular)?;
        Ok((chart, RationalPoint::affine(p.chart_coords())))
    }

    /// Chart-wise gradient-linear-type test: every chart is locally Eulerian.
    pub fn gradient_linear_type(&self) -> Result<GradientLinearType> {
        self.check_preconditions()?;
        let mut charts = Vec::new();
        for i in 0..self.ring().nvars() {
            let variable = self.ring().vars()[i].clone();
            let (polynomial, locally_eulerian) = match self.chart(i)? {
                None => (self.f.dehomogenize(i)?.to_string(), true),
                Some(c) => (c.polynomial().to_string(), c.is_locally_eulerian(None)?),
            };
            charts.push(ChartVerdict {
                chart: i,
                variable,
                polynomial,
                locally_eulerian,
            });
        }
        Ok(GradientLinearType {
            value: charts.iter().all(|c| c.locally_eulerian),
            charts,
        })
    }
}

pub fn gradient_linear_type(f: &Polynomial) -> Result<GradientLinearType> {
    ProjectiveHypersurface::new(f.clone())?.gradient_linear_type()
}
