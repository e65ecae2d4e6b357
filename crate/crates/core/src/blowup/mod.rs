//! Presentations of the symmetric, Rees and Aluffi algebras of an ideal, and
//! the linear-type test comparing them.
//!
//! All presentations live in `R[T_0, …, T_m]`, one `T_j` per generator `g_j`
//! of the ideal. For Jacobian ideals `g_0 = f`, so `T_0` is the degree-one
//! copy of `f`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{syzygy_basis, GroebnerBasis};
use crate::hypersurface::{quasi_homogeneous_type, AffineHypersurface};
use crate::ideal::Ideal;
use crate::poly::{MonomialOrder, Polynomial, Rational, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PresentationKind {
    Sym,
    Rees,
    Aluffi,
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresentationKind::Sym => "sym",
            PresentationKind::Rees => "rees",
            PresentationKind::Aluffi => "aluffi",
        })
    }
}

/// An ideal of `R[T_0, …, T_m]` presenting one of the blowup algebras.
#[derive(Clone)]
pub struct PresentationIdeal {
    kind: PresentationKind,
    base: Ring,
    ideal: Ideal,
}

impl PresentationIdeal {
    fn new(
        kind: PresentationKind,
        base: &Ring,
        ring: &Ring,
        generators: Vec<Polynomial>,
    ) -> Result<Self> {
        Ok(PresentationIdeal {
            kind,
            base: base.clone(),
            ideal: Ideal::new(ring, generators)?,
        })
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    /// The ring `R` the presented algebra lives over.
    pub fn base_ring(&self) -> &Ring {
        &self.base
    }

    /// `R[T_0, …, T_m]`.
    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    /// Generators as constructed.
    pub fn generators(&self) -> &[Polynomial] {
        self.ideal.generators()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Reduced degrevlex basis (variables of `R` before the `T`s).
    pub fn reduced_basis(&self) -> Result<Arc<GroebnerBasis>> {
        self.ideal.gb()
    }

    /// Degree in the `T` variables, `None` unless `p` is `T`-homogeneous.
    pub fn t_degree(&self, p: &Polynomial) -> Option<u32> {
        t_degree(p, self.base.nvars())
    }

    /// `T`-degree of each constructed generator.
    pub fn t_degrees(&self) -> Vec<Option<u32>> {
        self.generators().iter().map(|g| self.t_degree(g)).collect()
    }

    pub fn same_as(&self, other: &PresentationIdeal) -> Result<bool> {
        self.ideal.same_as(&other.ideal)
    }

    /// Whether every generator of `other` lies in this ideal.
    pub fn contains(&self, other: &PresentationIdeal) -> Result<bool> {
        other.ideal.is_subset_of(&self.ideal)
    }
}

impl fmt::Debug for PresentationIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.kind, self.ideal)
    }
}

fn t_degree(p: &Polynomial, nbase: usize) -> Option<u32> {
    let mut degrees = p
        .terms()
        .iter()
        .map(|(m, _)| m.exps()[nbase..].iter().sum::<u32>());
    let first = degrees.next()?;
    degrees.all(|d| d == first).then_some(first)
}

/// `R[T_0, …, T_m]` for an ideal with `m + 1` generators.
fn extended_ring(base: &Ring, ngens: usize) -> Result<Ring> {
    base.extend(&base.fresh_names("T", ngens))
}

fn t_var(ring: &Ring, nbase: usize, j: usize) -> Polynomial {
    Polynomial::var(ring, nbase + j).expect("T variable in range")
}

/// `[T_0 … T_m] · φ` for the first syzygies `φ` of the generators.
pub fn sym_ideal(ideal: &Ideal) -> Result<PresentationIdeal> {
    let gens = ideal.generators();
    if gens.is_empty() || gens.iter().all(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let base = ideal.ring();
    let ring = extended_ring(base, gens.len())?;
    let nbase = base.nvars();
    let syz = syzygy_basis(gens)?;
    let mut forms = Vec::with_capacity(syz.columns().len());
    for col in syz.columns() {
        let mut form = Polynomial::zero(&ring);
        for (j, s) in col.iter().enumerate() {
            form = &form + &(&s.embed(&ring)? * &t_var(&ring, nbase, j));
        }
        if !form.is_zero() {
            forms.push(form);
        }
    }
    PresentationIdeal::new(PresentationKind::Sym, base, &ring, forms)
}

/// `(T_j − t·g_j)_j ∩ R[T]`, computed with `t` eliminated first.
pub fn rees_ideal(ideal: &Ideal) -> Result<PresentationIdeal> {
    let gens = ideal.generators();
    if gens.is_empty() || gens.iter().all(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let base = ideal.ring();
    let ring = extended_ring(base, gens.len())?;
    let nbase = base.nvars();
    let t_name = ring.fresh_name("t");
    let big = ring.prepend(&[t_name])?;
    let t = Polynomial::var(&big, 0)?;
    let mut input = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        let tj = Polynomial::var(&big, 1 + nbase + j)?;
        input.push(&tj - &(&t * &g.embed(&big)?));
    }
    let order = MonomialOrder::elimination(1, big.nvars());
    let gb = GroebnerBasis::compute(&big, &input, &order)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.degree_in(0) == 0)
        .map(|g| g.restrict(&ring))
        .collect::<Result<Vec<_>>>()?;
    PresentationIdeal::new(PresentationKind::Rees, base, &ring, kept)
}

/// Outcome of comparing the Rees and symmetric presentations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearTypeVerdict {
    pub is_linear_type: bool,
    /// A Rees relation of least `T`-degree that is not in the symmetric ideal.
    pub witness: Option<Polynomial>,
}

impl LinearTypeVerdict {
    pub fn witness_t_degree(&self, nbase: usize) -> Option<u32> {
        self.witness.as_ref().and_then(|w| t_degree(w, nbase))
    }
}

/// Both presentations plus the verdict, for callers that report all three.
pub struct LinearTypeAnalysis {
    pub sym: PresentationIdeal,
    pub rees: PresentationIdeal,
    pub verdict: LinearTypeVerdict,
}

pub fn linear_type_analysis(ideal: &Ideal) -> Result<LinearTypeAnalysis> {
    let sym = sym_ideal(ideal)?;
    let rees = rees_ideal(ideal)?;
    let sym_gb = sym.reduced_basis()?;
    let nbase = ideal.ring().nvars();
    let mut witness: Option<(u32, Polynomial)> = None;
    for g in rees.reduced_basis()?.elements() {
        if sym_gb.reduces_to_zero(g)? {
            continue;
        }
        let deg = t_degree(g, nbase).unwrap_or(u32::MAX);
        if witness.as_ref().is_none_or(|(d, _)| deg < *d) {
            witness = Some((deg, g.clone()));
        }
    }
    let verdict = LinearTypeVerdict {
        is_linear_type: witness.is_none(),
        witness: witness.map(|(_, w)| w),
    };
    Ok(LinearTypeAnalysis { sym, rees, verdict })
}

/// Linear type ⟺ the reduced bases of the Rees and symmetric ideals coincide.
pub fn is_linear_type(ideal: &Ideal) -> Result<LinearTypeVerdict> {
    Ok(linear_type_analysis(ideal)?.verdict)
}

/// Aluffi-algebra presentation of `I(f)/(f)` over `R/(f)`, with the special
/// shapes available for quasi-homogeneous and locally Eulerian `f`.
pub struct AluffiPresentation {
    /// `rees(I(f)) + (f, T_0)`.
    pub general: PresentationIdeal,
    /// `(f, T_0, Σ (r_i/d) x_i T_i, f_i T_j − f_j T_i)` when `f` is quasi-homogeneous.
    pub quasi_homogeneous: Option<PresentationIdeal>,
    /// `(f, T_0, [T_1 … T_n]·φ')`, `φ'` the syzygies of `I(f)` without their first row,
    /// when `f` is locally Eulerian.
    pub eulerian: Option<PresentationIdeal>,
}

pub fn aluffi_presentation(f: &Polynomial) -> Result<AluffiPresentation> {
    let h = AffineHypersurface::new(f.clone())?;
    let locally_eulerian = h.is_locally_eulerian(None)?;
    let jac = h.jacobian_ideal()?;
    let base = f.ring();
    let nbase = base.nvars();
    let rees = rees_ideal(jac)?;
    let ring = rees.ring().clone();
    let f_ext = f.embed(&ring)?;
    let t0 = t_var(&ring, nbase, 0);

    let mut gens = rees.generators().to_vec();
    gens.push(f_ext.clone());
    gens.push(t0.clone());
    let general = PresentationIdeal::new(PresentationKind::Aluffi, base, &ring, gens)?;

    let quasi_homogeneous = match quasi_homogeneous_type(f) {
        None => None,
        Some(qh) => {
            let mut gens = vec![f_ext.clone(), t0.clone()];
            let mut euler = Polynomial::zero(&ring);
            for i in 0..nbase {
                let xi = Polynomial::var(&ring, i)?;
                let c: Rational = &qh.weights[i] / &qh.degree;
                euler = &euler + &(&xi * &t_var(&ring, nbase, i + 1)).scale(&c);
            }
            gens.push(euler);
            let partials: Vec<Polynomial> = f
                .gradient()
                .iter()
                .map(|p| p.embed(&ring))
                .collect::<Result<_>>()?;
            for i in 0..nbase {
                for j in i + 1..nbase {
                    let minor = &(&partials[i] * &t_var(&ring, nbase, j + 1))
                        - &(&partials[j] * &t_var(&ring, nbase, i + 1));
                    if !minor.is_zero() {
                        gens.push(minor);
                    }
                }
            }
            let shape = PresentationIdeal::new(PresentationKind::Aluffi, base, &ring, gens)?;
            if !shape.same_as(&general)? {
                return Err(Error::Inconsistent(
                    "quasi-homogeneous Aluffi presentation differs from the general one".into(),
                ));
            }
            Some(shape)
        }
    };

    let eulerian = if locally_eulerian {
        let mut gens = vec![f_ext, t0];
        for col in syzygy_basis(jac.generators())?.columns() {
            let mut form = Polynomial::zero(&ring);
            for (j, s) in col.iter().enumerate().skip(1) {
                form = &form + &(&s.embed(&ring)? * &t_var(&ring, nbase, j));
            }
            if !form.is_zero() {
                gens.push(form);
            }
        }
        let shape = PresentationIdeal::new(PresentationKind::Aluffi, base, &ring, gens)?;
        if !shape.same_as(&general)? {
            return Err(Error::Inconsistent(
                "locally Eulerian Aluffi presentation differs from the general one".into(),
            ));
        }
        Some(shape)
    } else {
        None
    };

    Ok(AluffiPresentation {
        general,
        quasi_homogeneous,
        eulerian,
    })
}

#[cfg(test)]
mod tests;
