use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{format_rational, Polynomial, Rational};

/// Weights `r` and degree `d` with `⟨r, α⟩ = d` on the support of `f`.
///
/// Normalized to coprime positive integers; among all weight vectors the
/// one minimizing `Σ r_i` (after scaling all weights to be at least one) is chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiHomogeneousType {
    pub degree: Rational,
    pub weights: Vec<Rational>,
}

impl QuasiHomogeneousType {
    /// `Σ (r_i/d) x_i ∂f/∂x_i`, which equals `f` for a quasi-homogeneous `f`.
    pub fn euler_combination(&self, f: &Polynomial) -> Polynomial {
        let ring = f.ring();
        let mut acc = Polynomial::zero(ring);
        for (i, w) in self.weights.iter().enumerate() {
            let xi = Polynomial::var(ring, i).expect("weight per variable");
            let di = f.partial_derivative(i).expect("index in range");
            acc = &acc + &(&xi * &di).scale(&(w / &self.degree));
        }
        acc
    }

    /// Whether every term of `f` has weighted degree `d`.
    pub fn fits(&self, f: &Polynomial) -> bool {
        f.terms().iter().all(|(m, _)| {
            let deg: Rational = m
                .exps()
                .iter()
                .zip(&self.weights)
                .map(|(&e, w)| w * Rational::from_integer(e.into()))
                .sum();
            deg == self.degree
        })
    }
}

#[derive(Serialize, Deserialize)]
struct QhRepr {
    degree: String,
    weights: Vec<String>,
}

impl Serialize for QuasiHomogeneousType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        QhRepr {
            degree: format_rational(&self.degree),
            weights: self.weights.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuasiHomogeneousType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = QhRepr::deserialize(d)?;
        let parse = |s: &str| {
            crate::poly::parse_rational(s)
                .ok_or_else(|| serde::de::Error::custom(format!("bad rational `{s}`")))
        };
        Ok(QuasiHomogeneousType {
            degree: parse(&repr.degree)?,
            weights: repr
                .weights
                .iter()
                .map(|w| parse(w))
                .collect::<Result<_, _>>()?,
        })
    }
}

/// Positive weights making `f` weighted homogeneous, if any exist.
pub fn quasi_homogeneous_type(f: &Polynomial) -> Option<QuasiHomogeneousType> {
    let terms = f.terms();
    let (first, _) = terms.first()?;
    let n = f.ring().nvars();
    let base: Vec<i64> = first.exps().iter().map(|&e| e as i64).collect();
    // with r = 1 + s: Σ_i D_ki s_i = −Σ_i D_ki, where D_k = α_k − α_0
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (m, _) in &terms[1..] {
        let diff: Vec<Rational> = m
            .exps()
            .iter()
            .zip(&base)
            .map(|(&e, &b)| Rational::from_integer((e as i64 - b).into()))
            .collect();
        let total: Rational = diff.iter().sum();
        rows.push(diff);
        rhs.push(-total);
    }
    let s = minimize_sum(rows, rhs, n)?;
    let weights: Vec<Rational> = s.into_iter().map(|v| v + Rational::one()).collect();
    let degree: Rational = weights
        .iter()
        .zip(&base)
        .map(|(w, &b)| w * Rational::from_integer(b.into()))
        .sum();
    if !degree.is_positive() {
        return None;
    }
    Some(normalize(degree, weights))
}

/// Scale to coprime integers.
fn normalize(degree: Rational, weights: Vec<Rational>) -> QuasiHomogeneousType {
    let lcm = weights
        .iter()
        .chain(std::iter::once(&degree))
        .fold(num_bigint::BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scaled: Vec<num_bigint::BigInt> = weights
        .iter()
        .chain(std::iter::once(&degree))
        .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let gcd = scaled
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, v| acc.gcd(v));
    let mut ints: Vec<Rational> = scaled
        .into_iter()
        .map(|v| Rational::from_integer(v / &gcd))
        .collect();
    let degree = ints.pop().expect("degree appended");
    QuasiHomogeneousType {
        degree,
        weights: ints,
    }
}

/// Minimize `Σ s` subject to `A s = b`, `s ≥ 0` by two-phase simplex with Bland's rule.
fn minimize_sum(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    nv: usize,
) -> Option<Vec<Rational>> {
    let m = a.len();
    if m == 0 {
        return Some(vec![Rational::zero(); nv]);
    }
    for (row, rhs) in a.iter_mut().zip(b.iter_mut()) {
        if rhs.is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
            *rhs = -rhs.clone();
        }
    }
    // columns: nv originals, then m artificials
    let width = nv + m;
    let mut t: Vec<Vec<Rational>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.resize(width, Rational::zero());
            row[nv + i] = Rational::one();
            row
        })
        .collect();
    let mut basis: Vec<usize> = (nv..width).collect();

    let phase1: Vec<Rational> = (0..width)
        .map(|j| {
            if j < nv {
                Rational::zero()
            } else {
                Rational::one()
            }
        })
        .collect();
    run_simplex(&mut t, &mut b, &mut basis, &phase1, width);
    let infeasibility: Rational = basis
        .iter()
        .zip(&b)
        .filter(|(&j, _)| j >= nv)
        .map(|(_, v)| v.clone())
        .sum();
    if !infeasibility.is_zero() {
        return None;
    }
    // drive remaining artificials out; drop redundant rows
    let mut i = 0;
    while i < t.len() {
        if basis[i] >= nv {
            match (0..nv).find(|&j| !t[i][j].is_zero()) {
                Some(j) => pivot(&mut t, &mut b, &mut basis, i, j),
                None => {
                    t.remove(i);
                    b.remove(i);
                    basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    let phase2: Vec<Rational> = (0..width)
        .map(|j| {
            if j < nv {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    run_simplex(&mut t, &mut b, &mut basis, &phase2, nv);
    let mut s = vec![Rational::zero(); nv];
    for (row, &j) in basis.iter().enumerate() {
        if j < nv {
            s[j] = b[row].clone();
        }
    }
    Some(s)
}

/// Simplex iterations restricted to entering columns `< allowed`. The objective is bounded below.
fn run_simplex(
    t: &mut [Vec<Rational>],
    b: &mut [Rational],
    basis: &mut [usize],
    cost: &[Rational],
    allowed: usize,
) {
    loop {
        let entering = (0..allowed).find(|&j| {
            if basis.contains(&j) {
                return false;
            }
            let reduced = t
                .iter()
                .zip(basis.iter())
                .fold(cost[j].clone(), |acc, (row, &bj)| acc - &cost[bj] * &row[j]);
            reduced.is_negative()
        });
        let Some(j) = entering else { return };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..t.len() {
            if t[i][j].is_positive() {
                let ratio = &b[i] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((i, _)) = leave else { return };
        pivot(t, b, basis, i, j);
    }
}

fn pivot(t: &mut [Vec<Rational>], b: &mut [Rational], basis: &mut [usize], i: usize, j: usize) {
    let p = t[i][j].clone();
    for v in t[i].iter_mut() {
        *v = &*v / &p;
    }
    b[i] = &b[i] / &p;
    let pivot_row = t[i].clone();
    let pivot_rhs = b[i].clone();
    for k in 0..t.len() {
        if k == i || t[k][j].is_zero() {
            continue;
        }
        let factor = t[k][j].clone();
        for (v, pv) in t[k].iter_mut().zip(&pivot_row) {
            *v = &*v - &factor * pv;
        }
        b[k] = &b[k] - &factor * &pivot_rhs;
    }
    basis[i] = j;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qh(vars: &str, f: &str) -> Option<QuasiHomogeneousType> {
        let r = Ring::from_list(vars).unwrap();
        quasi_homogeneous_type(&parse_polynomial(f, &r).unwrap())
    }

    #[test]
    fn cusp_weights() {
        let t = qh("x,y", "y^2 - x^3").unwrap();
        assert_eq!(t.degree, q(6));
        assert_eq!(t.weights, vec![q(2), q(3)]);
    }

    #[test]
    fn non_quasi_homogeneous_examples() {
        assert!(qh("x,y", "x*y + x^3 + y^3").is_none());
        assert!(qh("x,y", "x^5 + x^2*y^2 + y^5").is_none());
        assert!(qh("x,y", "x^2 + 1").is_none());
    }

    #[test]
    fn homogeneous_and_monomial_inputs() {
        let t = qh("x,y,z", "x*y*z + x^3").unwrap();
        assert_eq!(t.weights, vec![q(1), q(1), q(1)]);
        assert_eq!(t.degree, q(3));
        let t = qh("x,y", "x*y").unwrap();
        assert_eq!((t.degree, t.weights), (q(2), vec![q(1), q(1)]));
        let t = qh("x,y", "x^4 + x*y^3").unwrap();
        assert_eq!((t.degree, t.weights), (q(4), vec![q(1), q(1)]));
        let t = qh("x,y", "x^2*y + y^4").unwrap();
        assert_eq!((t.degree, t.weights), (q(8), vec![q(3), q(2)]));
    }

    #[test]
    fn euler_identity_holds() {
        let r = Ring::from_list("x,y,z").unwrap();
        for s in [
            "y^2 - x^3",
            "x^2*y + y^4 + z^2",
            "x^3 + y^5 + z^7 + x*y^2*z^0",
        ] {
            let f = parse_polynomial(s, &r).unwrap();
            if let Some(t) = quasi_homogeneous_type(&f) {
                assert!(t.fits(&f));
                assert_eq!(t.euler_combination(&f), f);
            }
        }
    }

    #[test]
    fn serde_roundtrip() {
        let t = qh("x,y", "y^2 - x^3").unwrap();
        let back: QuasiHomogeneousType =
            serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
