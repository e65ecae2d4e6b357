//! Singular loci of hypersurfaces and the locally-Eulerian / linear-type verdicts.

mod classify;
mod family;
mod projective;
mod qh;

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::ideal::{Ideal, RationalPoint};
use crate::poly::{Polynomial, Ring};

pub use classify::{
    classify_plane_singularity, classify_singularity, intersection_multiplicity_with_line,
    SingularityEvidence, SingularityLabel, SingularityReport,
};
pub use family::{
    family_member_verdict, family_polynomial, family_prediction, FamilyPrediction, FamilyStatus,
    FamilyVerdict,
};
pub use projective::{
    gradient_linear_type, ChartVerdict, GradientLinearType, ProjectiveHypersurface,
};
pub use qh::{quasi_homogeneous_type, QuasiHomogeneousType};

/// Ideal of all first partial derivatives.
pub fn gradient_ideal(f: &Polynomial) -> Result<Ideal> {
    check_nonconstant(f)?;
    Ideal::new(f.ring(), f.gradient())
}

/// `(f, ∂f/∂x_1, …, ∂f/∂x_n)` with `f` as the first generator.
pub fn jacobian_ideal(f: &Polynomial) -> Result<Ideal> {
    check_nonconstant(f)?;
    let mut gens = vec![f.clone()];
    gens.extend(f.gradient());
    Ideal::new(f.ring(), gens)
}

fn check_nonconstant(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if f.is_constant() {
        Err(Error::ConstantPolynomial)
    } else {
        Ok(())
    }
}

fn get_or_try<T>(cell: &OnceLock<T>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = init()?;
    Ok(cell.get_or_init(|| v))
}

/// Rational singular points of a hypersurface.
#[derive(Clone, Debug, PartialEq)]
pub struct SingularPoints {
    pub points: Vec<RationalPoint>,
    /// True when the local colengths of the found points add up to the
    /// global one, i.e. no singular point has irrational coordinates.
    pub complete: bool,
}

/// `V(f)` in affine space. Derived ideals are computed on first use and cached.
pub struct AffineHypersurface {
    f: Polynomial,
    jacobian: OnceLock<Ideal>,
    gradient: OnceLock<Ideal>,
    colon: OnceLock<Ideal>,
}

impl AffineHypersurface {
    pub fn new(f: Polynomial) -> Result<AffineHypersurface> {
        check_nonconstant(&f)?;
        Ok(AffineHypersurface {
            f,
            jacobian: OnceLock::new(),
            gradient: OnceLock::new(),
            colon: OnceLock::new(),
        })
    }

    pub fn polynomial(&self) -> &Polynomial {
        &self.f
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    /// `I(f)`.
    pub fn jacobian_ideal(&self) -> Result<&Ideal> {
        get_or_try(&self.jacobian, || jacobian_ideal(&self.f))
    }

    /// `J(f)`.
    pub fn gradient_ideal(&self) -> Result<&Ideal> {
        get_or_try(&self.gradient, || gradient_ideal(&self.f))
    }

    /// `(J(f) : f)`.
    pub fn eulerian_colon(&self) -> Result<&Ideal> {
        get_or_try(&self.colon, || self.gradient_ideal()?.quotient(&self.f))
    }

    /// Squarefree test: `dim R/I(f) ≤ n − 2`.
    pub fn is_reduced(&self) -> Result<bool> {
        let n = self.ring().nvars() as i64;
        Ok(self.jacobian_ideal()?.krull_dimension()? <= n - 2)
    }

    /// Whether the singular locus is finite (possibly empty).
    pub fn has_isolated_singularities(&self) -> Result<bool> {
        if !self.is_reduced()? {
            return Err(Error::NotReduced);
        }
        Ok(self.jacobian_ideal()?.krull_dimension()? <= 0)
    }

    fn check_preconditions(&self) -> Result<()> {
        if !self.has_isolated_singularities()? {
            return Err(Error::NotIsolated);
        }
        Ok(())
    }

    pub fn is_smooth(&self) -> Result<bool> {
        self.jacobian_ideal()?.is_unit()
    }

    pub fn is_singular_at(&self, p: &RationalPoint) -> Result<bool> {
        self.jacobian_ideal()?.vanishes_at(p.coords())
    }

    pub fn rational_singular_points(&self) -> Result<SingularPoints> {
        self.check_preconditions()?;
        points_with_completeness(self.jacobian_ideal()?)
    }

    /// Milnor and Tjurina numbers at a singular point.
    pub fn milnor_tjurina(&self, p: &RationalPoint) -> Result<(u64, u64)> {
        if p.dim() != self.ring().nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring().nvars(),
                got: p.dim(),
            });
        }
        if !self.is_singular_at(p)? {
            return Err(Error::NotSingular);
        }
        let tau = self.jacobian_ideal()?.local_colength(p)?;
        let mu = self
            .gradient_ideal()?
            .local_colength(p)
            .map_err(|e| match e {
                Error::NotZeroDimensional => Error::NotIsolated,
                e => e,
            })?;
        Ok((mu, tau))
    }

    /// Locally Eulerian at `p`, or at every singular point when `p` is `None`.
    ///
    /// At a point: some element of a basis of `(J(f):f)` is nonzero there.
    /// Globally: `1 ∈ I(f) + (J(f):f)`, which also covers irrational points.
    pub fn is_locally_eulerian(&self, p: Option<&RationalPoint>) -> Result<bool> {
        self.check_preconditions()?;
        match p {
            Some(p) => {
                if p.dim() != self.ring().nvars() {
                    return Err(Error::DimensionMismatch {
                        expected: self.ring().nvars(),
                        got: p.dim(),
                    });
                }
                if !self.is_singular_at(p)? {
                    return Err(Error::NotSingular);
                }
                crate::ideal::not_contained_in_point(self.eulerian_colon()?, p.coords())
            }
            None => {
                let jac = self.jacobian_ideal()?;
                if jac.is_unit()? {
                    return Ok(true);
                }
                jac.sum(self.eulerian_colon()?)?.is_unit()
            }
        }
    }
}

/// Points of a zero-dimensional ideal plus the colength completeness check.
fn points_with_completeness(ideal: &Ideal) -> Result<SingularPoints> {
    if ideal.is_unit()? {
        return Ok(SingularPoints {
            points: Vec::new(),
            complete: true,
        });
    }
    let mut points = ideal.rational_points()?;
    points.sort_by(|a, b| a.coords().cmp(b.coords()));
    let total = ideal.vector_space_dimension()?;
    let mut found = 0;
    for p in &points {
        found += ideal.local_colength(p)?;
    }
    Ok(SingularPoints {
        points,
        complete: found == total,
    })
}

pub fn check_reduced(f: &Polynomial) -> Result<bool> {
    AffineHypersurface::new(f.clone())?.is_reduced()
}

pub fn has_isolated_singularities(f: &Polynomial) -> Result<bool> {
    AffineHypersurface::new(f.clone())?.has_isolated_singularities()
}

pub fn rational_singular_points(f: &Polynomial) -> Result<SingularPoints> {
    AffineHypersurface::new(f.clone())?.rational_singular_points()
}

pub fn milnor_tjurina(f: &Polynomial, p: &RationalPoint) -> Result<(u64, u64)> {
    AffineHypersurface::new(f.clone())?.milnor_tjurina(p)
}

pub fn is_locally_eulerian(f: &Polynomial, p: Option<&RationalPoint>) -> Result<bool> {
    AffineHypersurface::new(f.clone())?.is_locally_eulerian(p)
}

#[cfg(test)]
mod tests;
