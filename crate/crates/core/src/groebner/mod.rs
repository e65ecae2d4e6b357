//! Reduced Gröbner bases, normal forms and first syzygies.

pub(crate) mod engine;
pub(crate) mod modular;
mod syzygy;

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};
use engine::{EPoly, Reducers};

pub use syzygy::{module_normal_form, syzygy_basis, SyzygyMatrix};

/// Reduced Gröbner basis of an ideal: monic, inter-reduced, unique for its order.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    engine: Vec<EPoly>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// Basis of the ideal generated by `gens` in `ring`.
    pub fn compute(
        ring: &Ring,
        gens: &[Polynomial],
        order: &MonomialOrder,
    ) -> Result<GroebnerBasis> {
        order.check_arity(ring.nvars())?;
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        let input: Vec<EPoly> = gens
            .iter()
            .map(|g| engine::poly_to_engine(order, g).0)
            .collect();
        let engine = modular::groebner(order, input, false)?;
        let elements = engine
            .iter()
            .map(|e| engine::monic_from_engine(ring, e))
            .collect();
        Ok(GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            engine,
            elements,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic elements, sorted by leading monomial descending.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.engine.len() == 1 && self.engine[0].lead().m.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.engine.iter().map(|e| e.lead().m.clone()).collect()
    }

    /// Remainder of `p` on division by the basis: no term is divisible by a leading term.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let (e, den) = engine::poly_to_engine(&self.order, p);
        let reducers = Reducers::new(&self.engine, (0..self.engine.len()).collect());
        let r = engine::reduce(&self.order, e, &reducers, None, true)?;
        // r.poly = (num/den_r) * den * p - (ideal element)
        let scale = Rational::new(r.num, r.den) * Rational::from_integer(den);
        Ok(engine::component_from_engine(
            &self.ring, &r.poly, 0, &scale,
        ))
    }

    pub fn reduces_to_zero(&self, p: &Polynomial) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let (e, _) = engine::poly_to_engine(&self.order, p);
        let reducers = Reducers::new(&self.engine, (0..self.engine.len()).collect());
        Ok(engine::reduce(&self.order, e, &reducers, None, false)?
            .poly
            .is_zero())
    }

    /// Post-hoc Buchberger criterion.
    pub fn is_groebner(&self) -> Result<bool> {
        engine::s_pairs_reduce_to_zero(&self.order, &self.engine, false)
    }

    /// Monic and no leading term divides any term of another element.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_term(&self.order).is_some_and(|(_, c)| c.is_one())
                && g.terms()
                    .iter()
                    .all(|(m, _)| lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }

    /// Whether every element of `other` reduces to zero here.
    pub fn contains_basis(&self, other: &GroebnerBasis) -> Result<bool> {
        for g in other.elements() {
            if !self.reduces_to_zero(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialEq for GroebnerBasis {
    /// Reduced bases are canonical, so equal bases mean equal ideals.
    fn eq(&self, other: &GroebnerBasis) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.elements.iter().map(|e| e.to_string()))
            .finish()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens` (all in one ring).
pub fn reduced_groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::InvalidRing("an empty generator list carries no ring".into()))?;
    GroebnerBasis::compute(&ring.ring().clone(), gens, order)
}

pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(vars.iter().copied()).unwrap()
    }

    fn polys(r: &Ring, s: &[&str]) -> Vec<Polynomial> {
        s.iter().map(|t| parse_polynomial(t, r).unwrap()).collect()
    }

    #[test]
    fn simple_bases() {
        let r = ring(&["x", "y"]);
        let gb = reduced_groebner_basis(&polys(&r, &["y - x^2", "y"]), &MonomialOrder::DegRevLex)
            .unwrap();
        assert_eq!(gb.elements(), polys(&r, &["x^2", "y"]).as_slice());
        for order in [MonomialOrder::Lex, MonomialOrder::DegRevLex] {
            let gb = reduced_groebner_basis(&polys(&r, &["x", "y"]), &order).unwrap();
            assert_eq!(gb.elements(), polys(&r, &["x", "y"]).as_slice());
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let gb = reduced_groebner_basis(&polys(&r, &["x"]), &MonomialOrder::DegRevLex).unwrap();
        assert!(gb.normal_form(&polys(&r, &["x^2*y"])[0]).unwrap().is_zero());
        let p = &polys(&r, &["y+1"])[0];
        assert_eq!(&gb.normal_form(p).unwrap(), p);

        let f = &polys(&r, &["x^4 - x^2*y^2 + y^5"])[0];
        let gb = reduced_groebner_basis(&f.gradient(), &MonomialOrder::DegRevLex).unwrap();
        let nf = gb.normal_form(f).unwrap();
        assert!(!nf.is_zero());
        // f - nf lies in the ideal
        assert!(gb.normal_form(&(f - &nf)).unwrap().is_zero());
        assert_eq!(gb.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn normal_form_scale_is_exact() {
        let r = ring(&["x", "y"]);
        let gb = reduced_groebner_basis(&polys(&r, &["3*x - 2*y"]), &MonomialOrder::Lex).unwrap();
        // x -> 2/3 y, so x^2 + 1/5 -> 4/9 y^2 + 1/5
        let nf = gb.normal_form(&polys(&r, &["x^2 + 1/5"])[0]).unwrap();
        assert_eq!(nf, polys(&r, &["4/9*y^2 + 1/5"])[0]);
    }

    #[test]
    fn unit_ideal_and_zero() {
        let r = ring(&["x", "y"]);
        let gb =
            reduced_groebner_basis(&polys(&r, &["x", "x+1"]), &MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_unit());
        let gb = reduced_groebner_basis(&polys(&r, &["0"]), &MonomialOrder::DegRevLex).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn cyclic4_is_groebner_and_reduced() {
        let r = ring(&["a", "b", "c", "d"]);
        let gens = polys(
            &r,
            &[
                "a+b+c+d",
                "a*b+b*c+c*d+d*a",
                "a*b*c+b*c*d+c*d*a+d*a*b",
                "a*b*c*d-1",
            ],
        );
        for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
            let gb = reduced_groebner_basis(&gens, &order).unwrap();
            assert!(gb.is_groebner().unwrap());
            assert!(gb.is_reduced());
            for g in &gens {
                assert!(gb.reduces_to_zero(g).unwrap());
            }
        }
        let gb = reduced_groebner_basis(&gens, &MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb.len(), 7);
    }

    #[test]
    fn order_arity_checked() {
        let r = ring(&["x", "y"]);
        let bad = MonomialOrder::elimination(1, 2);
        assert!(reduced_groebner_basis(&polys(&r, &["x"]), &bad).is_ok());
        let bad = MonomialOrder::elimination(1, 3);
        assert!(reduced_groebner_basis(&polys(&r, &["x"]), &bad).is_err());
    }
}
