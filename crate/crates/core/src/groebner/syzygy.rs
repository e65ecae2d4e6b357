use num_traits::{One, Zero};

use super::engine::{self, EPoly, Reducers};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, Polynomial, Rational, Ring};

/// First syzygies of a generator tuple; each column `s` satisfies `sum_j s_j g_j = 0`.
#[derive(Clone, Debug)]
pub struct SyzygyMatrix {
    ring: Ring,
    ngens: usize,
    columns: Vec<Vec<Polynomial>>,
}

impl SyzygyMatrix {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of generators, i.e. the length of every column.
    pub fn rows(&self) -> usize {
        self.ngens
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    /// Whether `v` lies in the module spanned by the columns.
    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(module_normal_form(&self.columns, v)?
            .iter()
            .all(Polynomial::is_zero))
    }

    /// Whether every column annihilates `gens`.
    pub fn annihilates(&self, gens: &[Polynomial]) -> Result<bool> {
        if gens.len() != self.ngens {
            return Err(Error::DimensionMismatch {
                expected: self.ngens,
                got: gens.len(),
            });
        }
        for col in &self.columns {
            let mut acc = Polynomial::zero(&self.ring);
            for (s, g) in col.iter().zip(gens) {
                acc = acc.try_add(&s.try_mul(g)?)?;
            }
            if !acc.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn vector_entries(v: &[Polynomial], offset: u32) -> Vec<(u32, &Polynomial)> {
    v.iter()
        .enumerate()
        .map(|(k, p)| (offset + k as u32, p))
        .collect()
}

/// Generators of the first syzygy module of `gens`.
///
/// Lifts the generators to `(g_j, e_j)` in `R ⊕ R^m` and computes a module
/// Gröbner basis position-over-term with the ideal component dominant; the
/// basis elements with vanishing ideal component generate the syzygies.
pub fn syzygy_basis(gens: &[Polynomial]) -> Result<SyzygyMatrix> {
    let ring = gens
        .first()
        .ok_or_else(|| Error::InvalidRing("empty generator list".into()))?
        .ring()
        .clone();
    if gens.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch);
    }
    let order = MonomialOrder::DegRevLex;
    let m = gens.len();
    let lifted: Vec<EPoly> = gens
        .iter()
        .enumerate()
        .map(|(j, g)| {
            let unit = Polynomial::one(&ring);
            let mut entries = vec![(0u32, g)];
            entries.push(((j + 1) as u32, &unit));
            // sugar and ordering computed by to_engine
            engine::to_engine(&order, &entries).0
        })
        .collect();
    let basis = super::modular::groebner(&order, lifted, true)?;
    let one = Rational::one();
    let columns = basis
        .iter()
        .filter(|e| e.terms.iter().all(|t| t.comp != 0))
        .map(|e| {
            (1..=m)
                .map(|c| engine::component_from_engine(&ring, e, c as u32, &one))
                .collect()
        })
        .collect();
    Ok(SyzygyMatrix {
        ring,
        ngens: m,
        columns,
    })
}

/// Remainder of the vector `v` modulo the submodule spanned by `columns`.
pub fn module_normal_form(
    columns: &[Vec<Polynomial>],
    v: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let ring = v
        .first()
        .ok_or_else(|| Error::InvalidRing("empty vector".into()))?
        .ring()
        .clone();
    if columns.iter().any(|c| c.len() != v.len()) {
        return Err(Error::DimensionMismatch {
            expected: v.len(),
            got: columns.first().map(Vec::len).unwrap_or(0),
        });
    }
    let order = MonomialOrder::DegRevLex;
    let gens: Vec<EPoly> = columns
        .iter()
        .map(|c| engine::to_engine(&order, &vector_entries(c, 0)).0)
        .collect();
    let basis = super::modular::groebner(&order, gens, true)?;
    let (e, den) = engine::to_engine(&order, &vector_entries(v, 0));
    let reducers = Reducers::new(&basis, (0..basis.len()).collect());
    let r = engine::reduce(&order, e, &reducers, None, true)?;
    let scale = Rational::new(r.num, r.den) * Rational::from_integer(den);
    let scale = if scale.is_zero() {
        Rational::one()
    } else {
        scale
    };
    Ok((0..v.len())
        .map(|k| engine::component_from_engine(&ring, &r.poly, k as u32, &scale))
        .collect())
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
    fn koszul_syzygy_of_two_variables() {
        let r = ring(&["x", "y"]);
        let gens = polys(&r, &["x", "y"]);
        let syz = syzygy_basis(&gens).unwrap();
        assert_eq!(syz.columns().len(), 1);
        assert!(syz.annihilates(&gens).unwrap());
        assert!(syz.contains(&polys(&r, &["y", "-x"])).unwrap());
        assert!(!syz.contains(&polys(&r, &["1", "0"])).unwrap());
    }

    #[test]
    fn linear_relation_found() {
        let r = ring(&["x", "y"]);
        let gens = polys(&r, &["x", "y", "x+y"]);
        let syz = syzygy_basis(&gens).unwrap();
        assert!(syz.annihilates(&gens).unwrap());
        assert!(syz.contains(&polys(&r, &["1", "1", "-1"])).unwrap());
        assert!(syz.contains(&polys(&r, &["y", "-x", "0"])).unwrap());
    }

    #[test]
    fn quasi_homogeneous_gradient_has_only_koszul_syzygies() {
        let r = ring(&["x", "y"]);
        let gens = polys(&r, &["-3*x^2", "2*y"]);
        let syz = syzygy_basis(&gens).unwrap();
        assert!(syz.annihilates(&gens).unwrap());
        let koszul = polys(&r, &["2*y", "3*x^2"]);
        assert!(syz.contains(&koszul).unwrap());
        for col in syz.columns() {
            assert!(module_normal_form(std::slice::from_ref(&koszul), col)
                .unwrap()
                .iter()
                .all(Polynomial::is_zero));
        }
    }

    #[test]
    fn zero_generator_is_a_free_syzygy() {
        let r = ring(&["x"]);
        let gens = polys(&r, &["x", "0"]);
        let syz = syzygy_basis(&gens).unwrap();
        assert!(syz.contains(&polys(&r, &["0", "1"])).unwrap());
    }
}
