//! Exact rational root finding for univariate polynomials.
//!
//! Real roots of the squarefree part are isolated with a Sturm sequence and
//! refined by bisection until an interval is short enough to contain at most
//! one rational of the admissible denominator, which is then tested exactly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Rational};
use crate::error::{Error, Result};

/// Dense univariate polynomial, `coeffs[i]` multiplies `x^i`; no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct Dense(Vec<Rational>);

impl Dense {
    fn trim(mut self) -> Dense {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &Rational {
        self.0.last().expect("nonzero polynomial")
    }

    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn derivative(&self) -> Dense {
        Dense(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
        .trim()
    }

    fn div_rem(&self, d: &Dense) -> (Dense, Dense) {
        let mut rem = self.0.clone();
        if self.0.len() < d.0.len() {
            return (Dense(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); self.0.len() - d.0.len() + 1];
        let dl = d.lead().clone();
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d.degree()] / &dl;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.0.iter().enumerate() {
                rem[k + j] -= &c * dc;
            }
            quot[k] = c;
        }
        (Dense(quot).trim(), Dense(rem).trim())
    }

    fn gcd(&self, other: &Dense) -> Dense {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    fn neg(&self) -> Dense {
        Dense(self.0.iter().map(|c| -c).collect())
    }
}

fn sign_changes(seq: &[Dense], x: &Rational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

struct Isolator {
    squarefree: Dense,
    sturm: Vec<Dense>,
    /// Every rational root times this scale is an integer.
    scale: BigInt,
    found: BTreeSet<Rational>,
}

impl Isolator {
    fn check(&mut self, x: &Rational) -> bool {
        if self.squarefree.eval(x).is_zero() {
            self.found.insert(x.clone());
            true
        } else {
            false
        }
    }

    fn count(&self, a: &Rational, b: &Rational) -> usize {
        sign_changes(&self.sturm, a) - sign_changes(&self.sturm, b)
    }

    /// `a`, `b` are not roots.
    fn isolate(&mut self, a: Rational, b: Rational) {
        let n = self.count(&a, &b);
        if n == 0 {
            return;
        }
        if n == 1 {
            self.refine(a, b);
            return;
        }
        let two = Rational::from_integer(2.into());
        let mut mid = (&a + &b) / &two;
        let mut step = (&b - &a) / Rational::from_integer(8.into());
        while self.check(&mid) {
            mid += &step;
            step /= &two;
        }
        self.isolate(a, mid.clone());
        self.isolate(mid, b);
    }

    fn refine(&mut self, mut a: Rational, mut b: Rational) {
        let scale = Rational::from_integer(self.scale.clone());
        let sa = self.squarefree.eval(&a).is_positive();
        let two = Rational::from_integer(2.into());
        while (&b - &a) * &scale >= Rational::one() {
            let mid = (&a + &b) / &two;
            if self.check(&mid) {
                return;
            }
            if self.squarefree.eval(&mid).is_positive() == sa {
                a = mid;
            } else {
                b = mid;
            }
        }
        let n = (&b * &scale).floor();
        let candidate = n / &scale;
        if candidate > a && candidate < b {
            self.check(&candidate);
        }
    }
}

/// Distinct rational roots of a dense coefficient vector (`coeffs[i]` multiplies `x^i`).
pub fn rational_roots_dense(coeffs: &[Rational]) -> Vec<Rational> {
    let p = Dense(coeffs.to_vec()).trim();
    if p.degree() == 0 {
        return Vec::new();
    }
    let g = p.gcd(&p.derivative());
    let squarefree = p.div_rem(&g).0;

    // clear denominators to get the admissible denominator bound
    let mut den = BigInt::one();
    for c in &squarefree.0 {
        den = den.lcm(c.denom());
    }
    let lead = (squarefree.lead() * Rational::from_integer(den))
        .abs()
        .to_integer();

    let mut sturm = vec![squarefree.clone(), squarefree.derivative()];
    loop {
        let n = sturm.len();
        let r = sturm[n - 2].div_rem(&sturm[n - 1]).1;
        if r.is_zero() {
            break;
        }
        sturm.push(r.neg());
    }

    // Cauchy bound: all roots lie strictly inside (-bound, bound)
    let lc = squarefree.lead().abs();
    let max = squarefree.0[..squarefree.degree()]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    let bound = max + Rational::one();

    let mut iso = Isolator {
        squarefree,
        sturm,
        scale: lead,
        found: BTreeSet::new(),
    };
    iso.isolate(-bound.clone(), bound);
    iso.found.into_iter().collect()
}

/// Distinct rational roots of `p`, which may only involve variable `index`.
pub fn rational_roots(p: &Polynomial, index: usize) -> Result<Vec<Rational>> {
    p.ring().check_index(index)?;
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let deg = p.degree_in(index) as usize;
    let mut coeffs = vec![Rational::zero(); deg + 1];
    for (m, c) in p.terms() {
        if m.exps()
            .iter()
            .enumerate()
            .any(|(i, &e)| i != index && e > 0)
        {
            return Err(Error::Inconsistent(
                "rational_roots expects a univariate polynomial".into(),
            ));
        }
        coeffs[m.exps()[index] as usize] += c;
    }
    Ok(rational_roots_dense(&coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn from_roots(roots: &[Rational], extra: &[Rational]) -> Vec<Rational> {
        // product of (x - r) times the extra factor
        let mut coeffs = extra.to_vec();
        for r in roots {
            let mut next = vec![Rational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            coeffs = next;
        }
        coeffs
    }

    #[test]
    fn finds_simple_rational_roots() {
        let roots = [q(1, 2), q(-3, 1), q(7, 5), q(0, 1)];
        let coeffs = from_roots(&roots, &[q(3, 1)]);
        let mut expected = roots.to_vec();
        expected.sort();
        assert_eq!(rational_roots_dense(&coeffs), expected);
    }

    #[test]
    fn ignores_irrational_and_complex_roots() {
        // (x^2 - 2)(x^2 + 1)(x - 2/3)^3
        let base = vec![q(-2, 1), q(0, 1), q(1, 1)];
        let mut coeffs = from_roots(&[q(2, 3), q(2, 3), q(2, 3)], &base);
        coeffs = {
            let mut out = vec![Rational::zero(); coeffs.len() + 2];
            for (i, c) in coeffs.iter().enumerate() {
                out[i] += c;
                out[i + 2] += c;
            }
            out
        };
        assert_eq!(rational_roots_dense(&coeffs), vec![q(2, 3)]);
    }

    #[test]
    fn close_roots_are_separated() {
        let roots = [q(1, 1000), q(1, 999), q(-5, 7), q(-5, 6)];
        let coeffs = from_roots(&roots, &[q(1, 1)]);
        assert_eq!(rational_roots_dense(&coeffs).len(), 4);
    }

    #[test]
    fn constants_have_no_roots() {
        assert!(rational_roots_dense(&[q(5, 1)]).is_empty());
    }
}
