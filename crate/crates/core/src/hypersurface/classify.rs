use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::AffineHypersurface;
use crate::error::{Error, Result};
use crate::ideal::{Ideal, RationalPoint};
use crate::poly::{format_rational, Monomial, Polynomial, Rational};

/// Singularity type at a point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityLabel {
    Smooth,
    /// Double point of corank at most one; the index is the Milnor number.
    A(u64),
    /// Double point whose quadratic part has corank at least two (three or more variables).
    DoublePoint,
    NonDoublePoint,
}

impl fmt::Display for SingularityLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityLabel::Smooth => f.write_str("smooth"),
            SingularityLabel::A(k) => write!(f, "A_{k}"),
            SingularityLabel::DoublePoint => f.write_str("double-point"),
            SingularityLabel::NonDoublePoint => f.write_str("non-double-point"),
        }
    }
}

impl FromStr for SingularityLabel {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "smooth" => Ok(SingularityLabel::Smooth),
            "double-point" => Ok(SingularityLabel::DoublePoint),
            "non-double-point" => Ok(SingularityLabel::NonDoublePoint),
            _ => s
                .strip_prefix("A_")
                .and_then(|k| k.parse().ok())
                .map(SingularityLabel::A)
                .ok_or_else(|| format!("unknown singularity label `{s}`")),
        }
    }
}

impl Serialize for SingularityLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularityLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Side data behind a classification.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityEvidence {
    /// Chart (index of the variable set to one) for projective points.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chart: Option<usize>,
    /// Rank of the Hessian of the quadratic part.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hessian_rank: Option<usize>,
    /// `b² − 4ac` of the quadratic part `ax² + bxy + cy²` (plane curves only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub discriminant: Option<String>,
    /// Repeated tangent line of a cusp-type double point, in the point's own coordinates.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent: Option<String>,
    /// Intersection multiplicity of the curve with that tangent line.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tangent_intersection: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityReport {
    pub point: RationalPoint,
    pub multiplicity: u32,
    pub milnor: u64,
    pub tjurina: u64,
    pub locally_eulerian: bool,
    pub label: SingularityLabel,
    pub evidence: SingularityEvidence,
}

impl AffineHypersurface {
    /// Multiplicity, Milnor/Tjurina numbers, locally-Eulerian flag and label at a singular point.
    pub fn classify(&self, p: &RationalPoint) -> Result<SingularityReport> {
        let n = self.ring().nvars();
        if p.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.dim(),
            });
        }
        if !self.is_singular_at(p)? {
            return Err(Error::NotSingular);
        }
        let local = self.polynomial().translate_to_origin(p.coords())?;
        let multiplicity = local.multiplicity_at_origin()?;
        let (milnor, tjurina) = self.milnor_tjurina(p)?;
        let locally_eulerian = self.is_locally_eulerian(Some(p))?;
        let mut evidence = SingularityEvidence::default();
        let label = if multiplicity >= 3 {
            SingularityLabel::NonDoublePoint
        } else {
            let quadratic = local.homogeneous_part(2);
            let rank = hessian_rank(&quadratic);
            evidence.hessian_rank = Some(rank);
            if n == 2 {
                let (a, b, c) = plane_quadratic(&quadratic);
                let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
                evidence.discriminant = Some(format_rational(&disc));
                if disc.is_zero() {
                    let tangent = repeated_tangent(&local, &a, &b);
                    evidence.tangent = Some(tangent.to_string());
                    // None when the tangent line is a component of the curve
                    evidence.tangent_intersection = match intersection_multiplicity_with_line(
                        &local,
                        &RationalPoint::origin(2),
                        &tangent,
                    ) {
                        Ok(m) => Some(m),
                        Err(Error::BadLine(_)) => None,
                        Err(e) => return Err(e),
                    };
                }
            }
            if n >= 2 && rank + 2 <= n {
                SingularityLabel::DoublePoint
            } else {
                SingularityLabel::A(milnor)
            }
        };
        Ok(SingularityReport {
            point: p.clone(),
            multiplicity,
            milnor,
            tjurina,
            locally_eulerian,
            label,
            evidence,
        })
    }
}

/// Coefficients of `ax² + bxy + cy²`.
fn plane_quadratic(q: &Polynomial) -> (Rational, Rational, Rational) {
    let c = |e: [u32; 2]| q.coefficient(&Monomial::new(e));
    (c([2, 0]), c([1, 1]), c([0, 2]))
}

/// The line `L` with `ax² + bxy + cy² = const · L²` when `b² = 4ac`.
fn repeated_tangent(local: &Polynomial, a: &Rational, b: &Rational) -> Polynomial {
    let ring = local.ring();
    let x = Polynomial::var(ring, 0).expect("plane curve");
    let y = Polynomial::var(ring, 1).expect("plane curve");
    if a.is_zero() {
        y
    } else {
        &x + &y.scale(&(b / (Rational::from_integer(2.into()) * a)))
    }
}

/// Rank of the symmetric matrix of second derivatives of a quadratic form.
fn hessian_rank(q: &Polynomial) -> usize {
    let n = q.ring().nvars();
    let mut rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let di = q.partial_derivative(i).expect("index in range");
            (0..n)
                .map(|j| {
                    di.partial_derivative(j)
                        .expect("index in range")
                        .constant_term()
                })
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        let pivot_row: Vec<Rational> = rows[rank].iter().map(|v| v / &lead).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &factor * pv;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Full classification at a singular point.
pub fn classify_singularity(f: &Polynomial, p: &RationalPoint) -> Result<SingularityReport> {
    AffineHypersurface::new(f.clone())?.classify(p)
}

/// Classification of a plane-curve singular point.
pub fn classify_plane_singularity(f: &Polynomial, p: &RationalPoint) -> Result<SingularityReport> {
    if f.ring().nvars() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: f.ring().nvars(),
        });
    }
    classify_singularity(f, p)
}

/// Local intersection multiplicity of `V(f)` with a line through `p`.
pub fn intersection_multiplicity_with_line(
    f: &Polynomial,
    p: &RationalPoint,
    line: &Polynomial,
) -> Result<u64> {
    if line.ring() != f.ring() {
        return Err(Error::RingMismatch);
    }
    if line.total_degree() != Some(1) {
        return Err(Error::BadLine("not of degree one".into()));
    }
    if !line.eval(p.coords())?.is_zero() {
        return Err(Error::BadLine("does not pass through the point".into()));
    }
    let ideal = Ideal::new(f.ring(), vec![f.clone(), line.clone()])?;
    if !ideal.vanishes_at(p.coords())? {
        return Ok(0);
    }
    ideal.local_colength(p).map_err(|e| match e {
        Error::NotIsolated | Error::NotZeroDimensional => {
            Error::BadLine("line is a component of the hypersurface".into())
        }
        e => e,
    })
}
