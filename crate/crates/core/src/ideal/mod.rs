//! Ideal-level operations: membership, quotients, saturation, elimination,
//! dimensions, rational points and local (point-primary) components.

mod point;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{univariate, Monomial, MonomialOrder, Polynomial, Rational, Ring};

pub use point::RationalPoint;

type BasisCache = Arc<RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>;

/// An ideal given by generators, with reduced Gröbner bases cached per order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    cache: BasisCache,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Arc::default(),
        })
    }

    /// Ideal of generators sharing one ring; the list must be nonempty.
    pub fn from_gens(gens: Vec<Polynomial>) -> Result<Ideal> {
        let ring = gens
            .first()
            .ok_or_else(|| Error::InvalidRing("empty generator list".into()))?
            .ring()
            .clone();
        Ideal::new(&ring, gens)
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by all variables.
    pub fn maximal_at_origin(ring: &Ring) -> Ideal {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i).expect("index in range"))
            .collect();
        Ideal::new(ring, gens).expect("same ring")
    }

    /// Maximal ideal of a rational affine point.
    pub fn of_point(ring: &Ring, p: &RationalPoint) -> Result<Ideal> {
        check_dim(ring, p.coords())?;
        let gens = p
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let x = Polynomial::var(ring, i).expect("index in range");
                &x - &Polynomial::constant(ring, c.clone())
            })
            .collect();
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(GroebnerBasis::compute(&self.ring, &self.gens, order)?);
        self.cache
            .write()
            .entry(order.clone())
            .or_insert_with(|| gb.clone());
        Ok(gb)
    }

    /// Degrevlex reduced basis, the canonical form used for comparisons.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(&MonomialOrder::DegRevLex)
    }

    /// The ideal generated by its own reduced degrevlex basis (drops redundant generators).
    pub fn canonical(&self) -> Result<Ideal> {
        let gb = self.gb()?;
        let ideal = Ideal::new(&self.ring, gb.elements().to_vec())?;
        ideal.cache.write().insert(MonomialOrder::DegRevLex, gb);
        Ok(ideal)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        self.gb()?.reduces_to_zero(p)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.gb()?.is_empty())
    }

    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let gb = other.gb()?;
        for g in &self.gens {
            if !gb.reduces_to_zero(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via reduced degrevlex bases.
    pub fn same_as(&self, other: &Ideal) -> Result<bool> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        Ok(*self.gb()? == *other.gb()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generator(&self, p: Polynomial) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.push(p);
        Ideal::new(&self.ring, gens)
    }

    /// Generators translated so that `p` moves to the origin.
    pub fn translate_to_origin(&self, p: &[Rational]) -> Result<Ideal> {
        check_dim(&self.ring, p)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.translate_to_origin(p))
            .collect::<Result<_>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Whether all generators vanish at `p`.
    pub fn vanishes_at(&self, p: &[Rational]) -> Result<bool> {
        for g in &self.gens {
            if !g.eval(p)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `I ∩ J` via `(t·I + (1−t)·J) ∩ R`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let t_name = self.ring.fresh_name("t");
        let big = self.ring.prepend(&[t_name])?;
        let t = Polynomial::var(&big, 0)?;
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for g in self.gb()?.elements() {
            gens.push(&t * &g.embed(&big)?);
        }
        for h in other.gb()?.elements() {
            gens.push(&one_minus_t * &h.embed(&big)?);
        }
        let order = MonomialOrder::elimination(1, big.nvars());
        let gb = GroebnerBasis::compute(&big, &gens, &order)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| g.restrict(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// `(I : p) = {q : q·p ∈ I}`.
    pub fn quotient(&self, p: &Polynomial) -> Result<Ideal> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if p.is_constant() {
            return Ok(self.clone());
        }
        if self.krull_dimension()? == 0 {
            return self.quotient_zero_dimensional(p);
        }
        let principal = Ideal::new(&self.ring, vec![p.clone()])?;
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                g.div_exact(p)?.ok_or_else(|| {
                    Error::Inconsistent("intersection element not divisible by p".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// Kernel of multiplication by `p` on `R/I`, lifted and added to `I`.
    fn quotient_zero_dimensional(&self, p: &Polynomial) -> Result<Ideal> {
        let basis = self.standard_monomials()?;
        let columns = self.multiplication_matrix(p, &basis)?;
        let mut gens = self.gb()?.elements().to_vec();
        for v in kernel(columns, basis.len()) {
            gens.push(Polynomial::from_terms(
                &self.ring,
                basis.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()),
            ));
        }
        Ideal::new(&self.ring, gens)
    }

    /// Columns of multiplication by `p` on `R/I` in the basis of standard monomials.
    fn multiplication_matrix(
        &self,
        p: &Polynomial,
        basis: &[Monomial],
    ) -> Result<Vec<Vec<Rational>>> {
        let gb = self.gb()?;
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut columns = Vec::with_capacity(basis.len());
        for b in basis {
            let nf = gb.normal_form(&p.mul_monomial(b))?;
            let mut col = vec![Rational::zero(); basis.len()];
            for (m, c) in nf.terms() {
                let row = *index.get(m).ok_or_else(|| {
                    Error::Inconsistent("normal form left the standard monomials".into())
                })?;
                col[row] = c.clone();
            }
            columns.push(col);
        }
        Ok(columns)
    }

    /// `(I : J) = ∩_k (I : j_k)` over the reduced basis of `J`.
    pub fn quotient_ideal(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        let gb = other.gb()?;
        if gb.is_empty() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut acc: Option<Ideal> = None;
        for g in gb.elements() {
            let q = self.quotient(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonempty basis"))
    }

    /// `(I : p^∞)` by iterated quotients until the basis stabilizes.
    pub fn saturation(&self, p: &Polynomial) -> Result<Ideal> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut current = self.canonical()?;
        loop {
            let next = current.quotient(p)?.canonical()?;
            if next.same_as(&current)? {
                return Ok(next);
            }
            current = next;
        }
    }

    /// `(I : J^∞) = ∩_k (I : j_k^∞)` over generators of `J`.
    pub fn saturation_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for g in other.gens.iter().filter(|g| !g.is_zero()) {
            let s = self.saturation(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(match acc {
            Some(a) => a,
            None => self.clone(),
        })
    }

    /// `I ∩ k[remaining variables]`, expressed in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        let n = self.ring.nvars();
        for &v in vars {
            self.ring.check_index(v)?;
        }
        let mut elim: Vec<usize> = vars.to_vec();
        elim.sort_unstable();
        elim.dedup();
        if elim.is_empty() {
            return Ok(self.clone());
        }
        if elim.len() == n {
            return Err(Error::EliminateAll);
        }
        let rest: Vec<usize> = (0..n).filter(|i| !elim.contains(i)).collect();
        let perm: Vec<usize> = elim.iter().chain(&rest).copied().collect();
        // map[i] = position of variable i in the permuted ring
        let mut map = vec![0; n];
        for (pos, &v) in perm.iter().enumerate() {
            map[v] = pos;
        }
        let permuted = Ring::new(perm.iter().map(|&v| self.ring.vars()[v].clone()))?;
        let gens: Vec<Polynomial> = self.gens.iter().map(|g| g.remap(&permuted, &map)).collect();
        let order = MonomialOrder::elimination(elim.len(), n);
        let gb = GroebnerBasis::compute(&permuted, &gens, &order)?;
        let kept = gb
            .elements()
            .iter()
            .filter(|g| (0..elim.len()).all(|k| g.degree_in(k) == 0))
            .map(|g| g.embed(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, kept)
    }

    /// Krull dimension of `R/I` from the leading-term staircase; −1 for the unit ideal.
    pub fn krull_dimension(&self) -> Result<i64> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(-1);
        }
        let n = self.ring.nvars();
        let lms = gb.leading_monomials();
        let supports: Vec<u64> = lms
            .iter()
            .map(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .fold(0u64, |acc, (i, _)| acc | (1 << i))
            })
            .collect();
        if n > 20 {
            return Err(Error::ResourceLimit(
                "dimension count limited to 20 variables".into(),
            ));
        }
        let mut best = 0;
        for subset in 0u64..(1 << n) {
            let size = subset.count_ones();
            if size > best && supports.iter().all(|s| s & !subset != 0) {
                best = size;
            }
        }
        Ok(best as i64)
    }

    /// `dim_k R/I` by counting standard monomials; requires a zero-dimensional (or unit) ideal.
    pub fn vector_space_dimension(&self) -> Result<u64> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(0);
        }
        if self.krull_dimension()? != 0 {
            return Err(Error::NotZeroDimensional);
        }
        Ok(standard_monomials(&gb.leading_monomials(), self.ring.nvars()).len() as u64)
    }

    /// Monomials outside the leading-term ideal (zero-dimensional ideals only).
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(Vec::new());
        }
        if self.krull_dimension()? != 0 {
            return Err(Error::NotZeroDimensional);
        }
        Ok(standard_monomials(
            &gb.leading_monomials(),
            self.ring.nvars(),
        ))
    }

    /// The component of `I` supported at `p`, in coordinates translated so `p` is the origin.
    ///
    /// Computed as `I : (I : m^∞)` with `m` the maximal ideal of the origin.
    pub fn local_primary_component(&self, p: &RationalPoint) -> Result<Ideal> {
        check_dim(&self.ring, p.coords())?;
        if !self.vanishes_at(p.coords())? {
            return Err(Error::PointNotInVariety);
        }
        if self.krull_dimension()? != 0 {
            return Err(Error::NotZeroDimensional);
        }
        self.isolated_component(p)
    }

    /// Like [`Ideal::local_primary_component`] but only requires `p` to be an
    /// isolated point of `V(I)`; other components may have any dimension.
    pub fn isolated_component(&self, p: &RationalPoint) -> Result<Ideal> {
        check_dim(&self.ring, p.coords())?;
        if !self.vanishes_at(p.coords())? {
            return Err(Error::PointNotInVariety);
        }
        let moved = self.translate_to_origin(p.coords())?.canonical()?;
        let m = Ideal::maximal_at_origin(&self.ring);
        let away = moved.saturation_ideal(&m)?;
        let component = if away.is_unit()? {
            moved
        } else {
            moved.quotient_ideal(&away)?.canonical()?
        };
        // the component must be m-primary: zero-dimensional and supported only at the origin
        if component.krull_dimension()? != 0 || !component.saturation_ideal(&m)?.is_unit()? {
            return Err(Error::NotIsolated);
        }
        Ok(component)
    }

    pub fn local_vector_space_dimension(&self, p: &RationalPoint) -> Result<u64> {
        self.local_primary_component(p)?.vector_space_dimension()
    }

    /// Local colength `dim R_m / I_m` at an isolated point `p` of `V(I)`.
    ///
    /// For zero-dimensional `I` this is the dimension of the joint generalized
    /// eigenspace of multiplication by `x_i - p_i` on `R/I`; otherwise it falls
    /// back to [`Ideal::isolated_component`].
    pub fn local_colength(&self, p: &RationalPoint) -> Result<u64> {
        check_dim(&self.ring, p.coords())?;
        if !self.vanishes_at(p.coords())? {
            return Err(Error::PointNotInVariety);
        }
        if self.krull_dimension()? != 0 {
            return self.isolated_component(p)?.vector_space_dimension();
        }
        let basis = self.standard_monomials()?;
        let d = basis.len();
        let mut stacked: Vec<Vec<Rational>> = vec![Vec::new(); d];
        for (i, a) in p.coords().iter().enumerate() {
            let shift =
                &Polynomial::var(&self.ring, i)? - &Polynomial::constant(&self.ring, a.clone());
            let b = self.multiplication_matrix(&shift, &basis)?;
            // kernels of b^k grow until they reach the generalized eigenspace
            let mut power = b.clone();
            let mut nullity = kernel(power.clone(), d).len();
            loop {
                crate::limits::check_deadline()?;
                let next = mat_mul(&b, &power);
                let next_nullity = kernel(next.clone(), d).len();
                if next_nullity == nullity {
                    break;
                }
                power = next;
                nullity = next_nullity;
            }
            for (col, extra) in stacked.iter_mut().zip(power) {
                col.extend(extra);
            }
        }
        let rows = d * p.coords().len();
        Ok(kernel(stacked, rows).len() as u64)
    }

    /// Colength via the explicit local component; slower cross-check for [`Ideal::local_colength`].
    pub fn isolated_colength(&self, p: &RationalPoint) -> Result<u64> {
        self.isolated_component(p)?.vector_space_dimension()
    }

    /// All rational points of `V(I)` for a zero-dimensional ideal.
    pub fn rational_points(&self) -> Result<Vec<RationalPoint>> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Ok(Vec::new());
        }
        if self.krull_dimension()? != 0 {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let canonical = self.canonical()?;
        let mut partial: Vec<Vec<Rational>> = vec![Vec::new()];
        for i in 0..n {
            let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
            let uni = if others.is_empty() {
                canonical.clone()
            } else {
                canonical.eliminate(&others)?
            };
            let g = uni
                .gb()?
                .elements()
                .first()
                .cloned()
                .ok_or(Error::NotZeroDimensional)?;
            let roots = univariate::rational_roots(&g, i)?;
            let mut next = Vec::new();
            for prefix in &partial {
                for r in &roots {
                    let mut v = prefix.clone();
                    v.push(r.clone());
                    next.push(v);
                }
            }
            if next.len() > 1_000_000 {
                return Err(Error::ResourceLimit("too many candidate points".into()));
            }
            partial = next;
            if partial.is_empty() {
                return Ok(Vec::new());
            }
        }
        let mut points = Vec::new();
        for coords in partial {
            if self.vanishes_at(&coords)? {
                points.push(RationalPoint::affine(coords));
            }
        }
        Ok(points)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {:?}", gens.join(", "), self.ring)
    }
}

fn check_dim(ring: &Ring, p: &[Rational]) -> Result<()> {
    if p.len() != ring.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ring.nvars(),
            got: p.len(),
        });
    }
    Ok(())
}

/// Product of two square matrices given by columns.
fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    b.iter()
        .map(|col| {
            let mut out = vec![Rational::zero(); a.first().map_or(0, Vec::len)];
            for (acol, x) in a.iter().zip(col) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(acol) {
                    *o += x * y;
                }
            }
            out
        })
        .collect()
}

/// Basis of `{c : Σ c_j columns[j] = 0}` by reduction to row echelon form.
fn kernel(columns: Vec<Vec<Rational>>, nrows: usize) -> Vec<Vec<Rational>> {
    let ncols = columns.len();
    let mut rows: Vec<Vec<Rational>> = (0..nrows)
        .map(|r| columns.iter().map(|c| c[r].clone()).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..nrows).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::from_integer(1.into());
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[i][free].clone();
        }
        out.push(v);
    }
    out
}

/// Standard monomials of a zero-dimensional leading-term ideal.
fn standard_monomials(lms: &[Monomial], n: usize) -> Vec<Monomial> {
    fn divisible(lms: &[Monomial], e: &[u32]) -> bool {
        lms.iter()
            .any(|m| m.exps().iter().zip(e).all(|(a, b)| a <= b))
    }
    fn walk(lms: &[Monomial], e: &mut Vec<u32>, i: usize, out: &mut Vec<Monomial>) {
        if i == e.len() {
            out.push(Monomial::new(e.iter().copied()));
            return;
        }
        loop {
            if divisible(lms, e) {
                break;
            }
            walk(lms, e, i + 1, out);
            e[i] += 1;
        }
        e[i] = 0;
    }
    let mut out = Vec::new();
    let mut e = vec![0u32; n];
    walk(lms, &mut e, 0, &mut out);
    out
}

pub fn ideal_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(p)
}

pub fn ideal_quotient(ideal: &Ideal, p: &Polynomial) -> Result<Ideal> {
    ideal.quotient(p)
}

pub fn saturation(ideal: &Ideal, p: &Polynomial) -> Result<Ideal> {
    ideal.saturation(p)
}

pub fn eliminate(ideal: &Ideal, vars: &[usize]) -> Result<Ideal> {
    ideal.eliminate(vars)
}

pub fn krull_dimension(ideal: &Ideal) -> Result<i64> {
    ideal.krull_dimension()
}

pub fn vector_space_dimension(ideal: &Ideal) -> Result<u64> {
    ideal.vector_space_dimension()
}

pub fn local_primary_component(ideal: &Ideal, p: &RationalPoint) -> Result<Ideal> {
    ideal.local_primary_component(p)
}

pub fn local_vector_space_dimension(ideal: &Ideal, p: &RationalPoint) -> Result<u64> {
    ideal.local_vector_space_dimension(p)
}

/// Whether some element of the ideal's reduced basis is nonzero at `p`.
pub fn not_contained_in_point(ideal: &Ideal, p: &[Rational]) -> Result<bool> {
    for g in ideal.gb()?.elements() {
        if !g.eval(p)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests;
