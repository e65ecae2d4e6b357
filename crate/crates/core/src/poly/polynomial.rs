use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, Rational, Ring};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in canonical form: no zero coefficients, no repeated
/// monomials, sorted descending in degrevlex.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::DegRevLex.cmp(b.exps(), a.exps())
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Polynomial {
        Polynomial::from_terms(ring, [(Monomial::one(ring.nvars()), c)])
    }

    pub fn one(ring: &Ring) -> Polynomial {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, index: usize) -> Result<Polynomial> {
        ring.check_index(index)?;
        Ok(Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), Rational::one())],
        })
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Polynomial> {
        let index = ring.index_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            offset: 0,
        })?;
        Polynomial::var(ring, index)
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Polynomial {
        Polynomial::from_terms(ring, [(m, c)])
    }

    /// Build a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars(), "monomial length must match ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        Polynomial::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<Monomial, Rational>) -> Polynomial {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_integer_terms<I>(ring: &Ring, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Vec<u32>, i64)>,
    {
        Polynomial::from_terms(
            ring,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::new(e), Rational::from_integer(c.into()))),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.exps()[index])
            .max()
            .unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(n, _)| n == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    /// Leading term with respect to `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0.exps(), b.0.exps()))
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(n, _)| n.degree() == d)
            }
        }
    }

    /// Sum of the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .cloned()
                .collect(),
        }
    }

    /// Variables occurring in some term.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.terms.iter().any(|(m, _)| m.exps()[i] > 0))
            .collect()
    }

    fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => canonical_cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Polynomial::from_map(&self.ring, acc)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        // multiplication by a monomial preserves the order of terms
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(n, c)| (n.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Rescale so the leading (canonical) coefficient is one.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Integer multiple with coprime integer coefficients and positive leading coefficient.
    pub fn primitive_integer(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&den / c.denom())));
        }
        let mut factor = Rational::new(den, g);
        if self.terms[0].1.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    pub fn partial_derivative(&self, index: usize) -> Result<Polynomial> {
        self.ring.check_index(index)?;
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exps()[index];
            (e > 0).then(|| {
                let mut n = m.clone();
                n.exps_mut()[index] -= 1;
                (n, c * Rational::from_integer(e.into()))
            })
        });
        Ok(Polynomial::from_terms(&self.ring, terms))
    }

    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.ring.nvars())
            .map(|i| self.partial_derivative(i).expect("index in range"))
            .collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        let mut sum = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += t;
        }
        Ok(sum)
    }

    /// Substitute `x_i -> images[i]`; images live in `target`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: images.len(),
            });
        }
        if images.iter().any(|p| p.ring() != target) {
            return Err(Error::RingMismatch);
        }
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::one(target), p.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().product(&images[i]);
                    powers[i].push(next);
                }
                t = t.product(&powers[i][e as usize]);
            }
            for (n, a) in t.terms {
                *acc.entry(n).or_insert_with(Rational::zero) += a;
            }
        }
        Ok(Polynomial::from_map(target, acc))
    }

    /// `f(x + p)`: moves the point `p` to the origin.
    pub fn translate_to_origin(&self, point: &[Rational]) -> Result<Polynomial> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.nvars(),
                got: point.len(),
            });
        }
        if point.iter().all(Zero::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, c)| {
                Polynomial::var(&self.ring, i)
                    .expect("index in range")
                    .merge(&Polynomial::constant(&self.ring, c.clone()), false)
            })
            .collect();
        self.substitute(&self.ring, &images)
    }

    /// Set variable `index` to one and drop it from the ring.
    pub fn dehomogenize(&self, index: usize) -> Result<Polynomial> {
        self.ring.check_index(index)?;
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let ring = self.ring.without(index)?;
        Ok(self.set_to_one(&ring, index))
    }

    /// Set variable `index` to one without requiring homogeneity.
    pub fn set_to_one(&self, target: &Ring, index: usize) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let e: Vec<u32> = m
                    .exps()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != index)
                    .map(|(_, &e)| e)
                    .collect();
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Homogenize with a new variable appended to the ring.
    pub fn homogenize(&self, new_var: &str) -> Result<Polynomial> {
        let d = self.total_degree().ok_or(Error::ZeroPolynomial)?;
        let ring = self.ring.extend(&[new_var])?;
        Ok(Polynomial::from_terms(
            &ring,
            self.terms.iter().map(|(m, c)| {
                let e = m.exps().iter().copied().chain([d - m.degree()]);
                (Monomial::new(e), c.clone())
            }),
        ))
    }

    /// Order of vanishing at the origin (lowest total degree in the support).
    pub fn multiplicity_at_origin(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .min()
            .ok_or(Error::ZeroPolynomial)
    }

    /// Re-express in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .ring
            .vars()
            .iter()
            .map(|v| {
                target.index_of(v).ok_or_else(|| Error::UnknownVariable {
                    name: v.clone(),
                    offset: 0,
                })
            })
            .collect::<Result<_>>()?;
        Ok(self.remap(target, &map))
    }

    /// Move variable `i` to position `map[i]` of `target`.
    pub(crate) fn remap(&self, target: &Ring, map: &[usize]) -> Polynomial {
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u32; target.nvars()];
                for (i, &x) in m.exps().iter().enumerate() {
                    e[map[i]] += x;
                }
                (Monomial::new(e), c.clone())
            }),
        )
    }

    /// Restrict to a subring: drops variables absent from `target`, which must not occur.
    pub fn restrict(&self, target: &Ring) -> Result<Polynomial> {
        let keep: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.index_of(v))
            .collect();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut e = vec![0u32; target.nvars()];
            for (i, &x) in m.exps().iter().enumerate() {
                match keep[i] {
                    Some(j) => e[j] = x,
                    None if x > 0 => {
                        return Err(Error::UnknownVariable {
                            name: self.ring.vars()[i].clone(),
                            offset: 0,
                        })
                    }
                    None => {}
                }
            }
            terms.push((Monomial::new(e), c.clone()));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.same_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (lm, lc) = divisor.terms[0].clone();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = m.div(&lm);
            let qc = &c / &lc;
            rem = rem.merge(&divisor.mul_monomial(&qm).scale(&qc), true);
            quotient.push((qm, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quotient)))
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs)
            .expect("ring mismatch in polynomial addition")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("ring mismatch in polynomial subtraction")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("ring mismatch in polynomial multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

pub(crate) fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    /// Prints in the input grammar, so the output parses back to the same polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(fmt_rational(&abs));
            }
            for (i, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.vars()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.vars()[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {:?}", self, self.ring)
    }
}
