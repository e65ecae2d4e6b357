use serde::{Deserialize, Serialize};

use super::{quasi_homogeneous_type, AffineHypersurface};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational, Ring};

/// Predicted locally-Eulerian verdict for `x^a + x^c y^d + y^b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FamilyPrediction {
    /// One of the listed locally-Eulerian cases (numbered 1 to 8).
    Case {
        case: u8,
    },
    /// Region 1, 2 or 3: locally Eulerian exactly when quasi-homogeneous.
    ConditionalOnQh {
        region: u8,
    },
    Unspecified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum FamilyStatus {
    Ok,
    Degenerate { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyVerdict {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub polynomial: String,
    pub status: FamilyStatus,
    pub locally_eulerian: Option<bool>,
    pub quasi_homogeneous: bool,
    pub prediction: FamilyPrediction,
    pub expected: Option<bool>,
    /// `Some(false)` only for a definite prediction contradicted by the computation.
    pub agrees: Option<bool>,
}

/// `x^a + x^c y^d + y^b` in `Q[x, y]`.
pub fn family_polynomial(a: u32, b: u32, c: u32, d: u32) -> Polynomial {
    let ring = Ring::from_list("x,y").expect("valid ring");
    let one = || Rational::from_integer(1.into());
    Polynomial::from_terms(
        &ring,
        [
            (Monomial::new([a, 0]), one()),
            (Monomial::new([c, d]), one()),
            (Monomial::new([0, b]), one()),
        ],
    )
}

/// Which listed case or region `(a, b, c, d)` falls into.
///
/// Cases take precedence over regions. Regions are read inside the box
/// `1 ≤ c ≤ a − 1`, `1 ≤ d ≤ b − 1`.
pub fn family_prediction(a: u32, b: u32, c: u32, d: u32) -> FamilyPrediction {
    let (a, b, c, d) = (a as i64, b as i64, c as i64, d as i64);
    let two = a >= 2 && b >= 2;
    let three = a >= 3 && b >= 3;
    let case = if c >= a && d >= b {
        Some(1)
    } else if two && c == a - 1 && d == b - 1 {
        Some(2)
    } else if two && c == 1 && d == 1 {
        Some(3)
    } else if three && c == 1 && 2 * d <= b + 1 {
        Some(4)
    } else if three && d == 1 && 2 * c <= a + 1 {
        Some(5)
    } else if three && c == a - 1 && 2 * d >= b - 1 {
        Some(6)
    } else if three && d == b - 1 && 2 * c >= a - 1 {
        Some(7)
    } else if a == 2 || b == 2 {
        Some(8)
    } else {
        None
    };
    if let Some(case) = case {
        return FamilyPrediction::Case { case };
    }
    let inside = three && (1..a).contains(&c) && (1..b).contains(&d);
    let region = if !inside {
        None
    } else if (2..=a - 2).contains(&c) && (2..=b - 2).contains(&d) {
        Some(1)
    } else if (c == 1 && 2 * d > b + 1) || (d == b - 1 && 2 * c < a - 1) {
        Some(2)
    } else if (d == 1 && 2 * c > a + 1) || (c == a - 1 && 2 * d < b - 1) {
        Some(3)
    } else {
        None
    };
    match region {
        Some(region) => FamilyPrediction::ConditionalOnQh { region },
        None => FamilyPrediction::Unspecified,
    }
}

/// Computed and predicted locally-Eulerian verdicts for one family member.
///
/// Non-reduced or non-isolated members come back as `Degenerate`; only
/// resource exhaustion is an error.
pub fn family_member_verdict(a: u32, b: u32, c: u32, d: u32) -> Result<FamilyVerdict> {
    let f = family_polynomial(a, b, c, d);
    let quasi_homogeneous = quasi_homogeneous_type(&f).is_some();
    let prediction = family_prediction(a, b, c, d);
    let expected = match prediction {
        FamilyPrediction::Case { .. } => Some(true),
        FamilyPrediction::ConditionalOnQh { .. } => Some(quasi_homogeneous),
        FamilyPrediction::Unspecified => None,
    };
    let mut verdict = FamilyVerdict {
        a,
        b,
        c,
        d,
        polynomial: f.to_string(),
        status: FamilyStatus::Ok,
        locally_eulerian: None,
        quasi_homogeneous,
        prediction,
        expected,
        agrees: None,
    };
    let computed = AffineHypersurface::new(f).and_then(|h| h.is_locally_eulerian(None));
    match computed {
        Ok(le) => {
            verdict.locally_eulerian = Some(le);
            verdict.agrees = expected.map(|e| e == le);
        }
        Err(e @ (Error::NotReduced | Error::NotIsolated | Error::ConstantPolynomial)) => {
            verdict.status = FamilyStatus::Degenerate {
                reason: e.to_string(),
            };
        }
        Err(e) => return Err(e),
    }
    Ok(verdict)
}
