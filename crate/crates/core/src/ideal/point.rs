use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{format_rational, parse_rational, Rational};

/// A point with rational coordinates, affine or projective.
///
/// Projective points store the representative whose first nonzero
/// coordinate is one; that coordinate's index is the chart.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalPoint {
    coords: Vec<Rational>,
    chart: Option<usize>,
}

impl RationalPoint {
    pub fn affine(coords: Vec<Rational>) -> RationalPoint {
        RationalPoint {
            coords,
            chart: None,
        }
    }

    pub fn origin(n: usize) -> RationalPoint {
        RationalPoint::affine(vec![Rational::zero(); n])
    }

    pub fn from_integers(coords: &[i64]) -> RationalPoint {
        RationalPoint::affine(
            coords
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    /// Normalized projective point; fails on the zero vector.
    pub fn projective(coords: Vec<Rational>) -> Result<RationalPoint> {
        let chart = coords.iter().position(|c| !c.is_zero()).ok_or_else(|| {
            Error::Inconsistent("projective point with all coordinates zero".into())
        })?;
        let scale = coords[chart].recip();
        let coords = coords.into_iter().map(|c| c * &scale).collect();
        Ok(RationalPoint {
            coords,
            chart: Some(chart),
        })
    }

    /// Projective point from affine coordinates in chart `chart` (that coordinate set to one).
    pub fn from_chart(chart: usize, affine: &[Rational]) -> Result<RationalPoint> {
        let mut coords = affine.to_vec();
        coords.insert(chart, Rational::one());
        RationalPoint::projective(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_projective(&self) -> bool {
        self.chart.is_some()
    }

    pub fn chart(&self) -> Option<usize> {
        self.chart
    }

    /// Coordinates in the affine chart of the point (the chart coordinate dropped).
    pub fn chart_coords(&self) -> Vec<Rational> {
        match self.chart {
            None => self.coords.clone(),
            Some(c) => self
                .coords
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != c)
                .map(|(_, x)| x.clone())
                .collect(),
        }
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn negated(&self) -> RationalPoint {
        RationalPoint {
            coords: self.coords.iter().map(|c| -c).collect(),
            chart: self.chart,
        }
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        match self.chart {
            None => write!(f, "({})", parts.join(", ")),
            Some(_) => write!(f, "[{}]", parts.join(":")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    coords: Vec<String>,
    projective: bool,
}

impl Serialize for RationalPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointRepr {
            coords: self.coords.iter().map(format_rational).collect(),
            projective: self.is_projective(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = PointRepr::deserialize(d)?;
        let coords = repr
            .coords
            .iter()
            .map(|c| {
                parse_rational(c)
                    .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{c}`")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if repr.projective {
            RationalPoint::projective(coords).map_err(serde::de::Error::custom)
        } else {
            Ok(RationalPoint::affine(coords))
        }
    }
}
