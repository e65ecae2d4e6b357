//! Fraction-free Buchberger engine over the integers.
//!
//! Works uniformly on ideals and on submodules of free modules: every term
//! carries a component index, compared position-over-term with component 0
//! largest. Ideals simply live in component 0.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::limits;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term<C = BigInt> {
    pub m: Monomial,
    pub comp: u32,
    pub c: C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct EPoly<C = BigInt> {
    /// Sorted descending, nonzero coefficients.
    pub terms: Vec<Term<C>>,
    pub sugar: u32,
}

impl<C> EPoly<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term<C> {
        &self.terms[0]
    }
}

#[inline]
pub(crate) fn cmp_terms(
    order: &MonomialOrder,
    am: &Monomial,
    ac: u32,
    bm: &Monomial,
    bc: u32,
) -> Ordering {
    bc.cmp(&ac).then_with(|| order.cmp(am.exps(), bm.exps()))
}

/// Coefficient arithmetic used by the Buchberger driver.
pub(crate) trait Domain {
    type C: Clone;

    /// Cost of using `p` as a reducer; cheaper reducers are preferred.
    fn size(&self, p: &EPoly<Self::C>) -> u64;

    /// S-polynomial of `f` and `g` with the leading terms cancelled.
    fn spoly(
        &self,
        order: &MonomialOrder,
        f: &EPoly<Self::C>,
        g: &EPoly<Self::C>,
        lcm: &Monomial,
        sugar: u32,
    ) -> EPoly<Self::C>;

    /// Full reduction, normalized (primitive or monic).
    fn reduce(
        &self,
        order: &MonomialOrder,
        p: EPoly<Self::C>,
        reducers: &Reducers<'_, Self::C>,
        skip: Option<usize>,
    ) -> Result<EPoly<Self::C>>;
}

/// Fraction-free arithmetic over the integers; results are primitive.
pub(crate) struct Integers;

impl Domain for Integers {
    type C = BigInt;

    fn size(&self, p: &EPoly) -> u64 {
        p.terms.iter().map(|t| t.c.bits() + 1).sum()
    }

    fn spoly(
        &self,
        order: &MonomialOrder,
        f: &EPoly,
        g: &EPoly,
        lcm: &Monomial,
        sugar: u32,
    ) -> EPoly {
        let mf = lcm.div(&f.lead().m);
        let mg = lcm.div(&g.lead().m);
        let (a, b) = (&f.lead().c, &g.lead().c);
        let d = a.gcd(b);
        // (b/d) * mf * f - (a/d) * mg * g
        let f_shift: Vec<Term> = f
            .terms
            .iter()
            .map(|t| Term {
                m: t.m.mul(&mf),
                comp: t.comp,
                c: t.c.clone(),
            })
            .collect();
        let mut terms = scaled_sub(order, &f_shift, &(b / &d), &g.terms, &(a / &d), &mg, 0);
        // leading terms cancel exactly
        let comp = f.lead().comp;
        if terms.first().is_some_and(|t| &t.m == lcm && t.comp == comp) {
            terms.remove(0);
        }
        EPoly { terms, sugar }
    }

    fn reduce(
        &self,
        order: &MonomialOrder,
        p: EPoly,
        reducers: &Reducers<'_>,
        skip: Option<usize>,
    ) -> Result<EPoly> {
        Ok(reduce(order, p, reducers, skip, false)?.poly)
    }
}

fn divmask(m: &Monomial) -> u64 {
    let mut mask = 0u64;
    for (i, &e) in m.exps().iter().enumerate() {
        if e > 0 {
            mask |= 1 << (i % 64);
        }
    }
    mask
}

pub(crate) fn sort_terms<C>(order: &MonomialOrder, terms: &mut [Term<C>]) {
    terms.sort_by(|a, b| cmp_terms(order, &b.m, b.comp, &a.m, a.comp));
}

fn content(terms: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for t in terms {
        g = g.gcd(&t.c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide out the content and make the leading coefficient positive.
/// Returns the factor the polynomial was divided by (signed).
fn make_primitive(p: &mut EPoly) -> BigInt {
    if p.terms.is_empty() {
        return BigInt::one();
    }
    let mut g = content(&p.terms);
    if p.terms[0].c.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in &mut p.terms {
            t.c /= &g;
        }
    }
    g
}

/// `a * p - b * mono * q`, where the prefix `p[..start]` is known to be larger
/// than every term of `mono * q`.
fn scaled_sub(
    order: &MonomialOrder,
    p: &[Term],
    a: &BigInt,
    q: &[Term],
    b: &BigInt,
    mono: &Monomial,
    start: usize,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let a_one = a.is_one();
    let scale = |c: &BigInt| if a_one { c.clone() } else { c * a };
    for t in &p[..start] {
        out.push(Term {
            m: t.m.clone(),
            comp: t.comp,
            c: scale(&t.c),
        });
    }
    let mut i = start;
    let mut qi = q.iter().map(|t| (t.m.mul(mono), t.comp, &t.c)).peekable();
    loop {
        let next_q = qi.peek();
        match (p.get(i), next_q) {
            (None, None) => break,
            (Some(t), None) => {
                out.push(Term {
                    m: t.m.clone(),
                    comp: t.comp,
                    c: scale(&t.c),
                });
                i += 1;
            }
            (None, Some(_)) => {
                let (m, comp, c) = qi.next().unwrap();
                out.push(Term {
                    m,
                    comp,
                    c: -(c * b),
                });
            }
            (Some(t), Some((m, comp, _))) => match cmp_terms(order, &t.m, t.comp, m, *comp) {
                Ordering::Greater => {
                    out.push(Term {
                        m: t.m.clone(),
                        comp: t.comp,
                        c: scale(&t.c),
                    });
                    i += 1;
                }
                Ordering::Less => {
                    let (m, comp, c) = qi.next().unwrap();
                    out.push(Term {
                        m,
                        comp,
                        c: -(c * b),
                    });
                }
                Ordering::Equal => {
                    let (m, comp, c) = qi.next().unwrap();
                    let v = scale(&t.c) - c * b;
                    if !v.is_zero() {
                        out.push(Term { m, comp, c: v });
                    }
                    i += 1;
                }
            },
        }
    }
    out
}

/// Reducers available to the normal-form routine.
pub(crate) struct Reducers<'a, C = BigInt> {
    pub polys: &'a [EPoly<C>],
    masks: Vec<u64>,
    idx: Vec<usize>,
    sizes: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: &'a [EPoly], idx: Vec<usize>) -> Reducers<'a> {
        Reducers::in_domain(&Integers, polys, idx)
    }
}

impl<'a, C> Reducers<'a, C> {
    pub fn in_domain<D: Domain<C = C>>(
        dom: &D,
        polys: &'a [EPoly<C>],
        idx: Vec<usize>,
    ) -> Reducers<'a, C> {
        let masks = polys
            .iter()
            .map(|p| if p.is_zero() { 0 } else { divmask(&p.lead().m) })
            .collect();
        let sizes = polys.iter().map(|p| dom.size(p)).collect();
        Reducers {
            polys,
            masks,
            idx,
            sizes,
        }
    }

    /// The cheapest reducer (by total coefficient size) whose lead divides `m`.
    pub(crate) fn find(&self, m: &Monomial, comp: u32, skip: Option<usize>) -> Option<usize> {
        let mask = divmask(m);
        self.idx
            .iter()
            .copied()
            .filter(|&k| {
                Some(k) != skip && self.masks[k] & !mask == 0 && {
                    let l = self.polys[k].lead();
                    l.comp == comp && l.m.divides(m)
                }
            })
            .min_by_key(|&k| (self.sizes[k], k))
    }
}

/// Result of a reduction: the reduced polynomial equals `scale * p - (ideal element)`.
pub(crate) struct Reduced {
    pub poly: EPoly,
    /// `scale = num / den`
    pub num: BigInt,
    pub den: BigInt,
}

/// Full reduction of `p` by `reducers`; the result is made primitive.
pub(crate) fn reduce(
    order: &MonomialOrder,
    mut p: EPoly,
    reducers: &Reducers<'_>,
    skip: Option<usize>,
    track: bool,
) -> Result<Reduced> {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut i = 0;
    let mut steps = 0u32;
    while i < p.terms.len() {
        let (k, mono) = {
            let t = &p.terms[i];
            match reducers.find(&t.m, t.comp, skip) {
                None => {
                    i += 1;
                    continue;
                }
                Some(k) => (k, t.m.div(&reducers.polys[k].lead().m)),
            }
        };
        let g = &reducers.polys[k];
        let a = &p.terms[i].c;
        let b = &g.lead().c;
        let d = a.gcd(b);
        let mut pa = b / &d;
        let mut qb = a / &d;
        if pa.is_negative() {
            pa = -pa;
            qb = -qb;
        }
        p.sugar = p.sugar.max(mono.degree() + g.sugar);
        let terms = scaled_sub(order, &p.terms, &pa, &g.terms, &qb, &mono, i);
        p.terms = terms;
        if track {
            num *= &pa;
        }
        steps += 1;
        if steps.is_multiple_of(64) {
            limits::check_deadline()?;
        }
        if steps.is_multiple_of(8) {
            let c = content(&p.terms);
            if !c.is_one() && !c.is_zero() {
                for t in &mut p.terms {
                    t.c /= &c;
                }
                if track {
                    den *= &c;
                }
            }
        }
    }
    let g = make_primitive(&mut p);
    if track {
        den *= g;
    }
    Ok(Reduced { poly: p, num, den })
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: u32,
}

struct Buchberger<'a, D: Domain> {
    dom: &'a D,
    order: &'a MonomialOrder,
    module: bool,
    polys: Vec<EPoly<D::C>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    terms: usize,
}

impl<'a, D: Domain> Buchberger<'a, D> {
    fn coprime(&self, i: usize, j: usize) -> bool {
        !self.module && self.polys[i].lead().m.is_coprime(&self.polys[j].lead().m)
    }

    fn lcm(&self, i: usize, j: usize) -> Monomial {
        self.polys[i].lead().m.lcm(&self.polys[j].lead().m)
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.lcm(i, j);
        let d = lcm.degree();
        let si = self.polys[i].sugar + d - self.polys[i].lead().m.degree();
        let sj = self.polys[j].sugar + d - self.polys[j].lead().m.degree();
        Pair {
            i,
            j,
            comp: self.polys[i].lead().comp,
            lcm,
            sugar: si.max(sj),
        }
    }

    /// Gebauer–Möller update after adding polynomial `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lead().m.clone();
        let hc = self.polys[h].lead().comp;
        let mut c: Vec<Pair> = self
            .active
            .iter()
            .copied()
            .filter(|&g| self.polys[g].lead().comp == hc)
            .map(|g| self.pair(h, g))
            .collect();
        let mut d: Vec<Pair> = Vec::new();
        while let Some(p) = c.pop() {
            let keep = self.coprime(h, p.j)
                || (!c.iter().any(|q| q.lcm.divides(&p.lcm))
                    && !d.iter().any(|q| q.lcm.divides(&p.lcm)));
            if keep {
                d.push(p);
            }
        }
        let e: Vec<Pair> = d.into_iter().filter(|p| !self.coprime(h, p.j)).collect();
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if p.comp != hc || !lh.divides(&p.lcm) {
                return true;
            }
            let l1 = polys[p.i].lead().m.lcm(&lh);
            let l2 = polys[p.j].lead().m.lcm(&lh);
            l1 == p.lcm || l2 == p.lcm
        });
        self.pairs.extend(e);
        self.active.retain(|&g| {
            let l = polys[g].lead();
            !(l.comp == hc && lh.divides(&l.m))
        });
        self.active.push(h);
    }

    fn add(&mut self, p: EPoly<D::C>) {
        self.terms += p.terms.len();
        self.polys.push(p);
        let h = self.polys.len() - 1;
        self.update(h);
    }

    fn select(&mut self) -> Pair {
        let order = self.order;
        let (best, _) = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| cmp_terms(order, &a.lcm, a.comp, &b.lcm, b.comp))
            })
            .expect("nonempty pair set");
        self.pairs.swap_remove(best)
    }

    fn spoly(&self, p: &Pair) -> EPoly<D::C> {
        self.dom.spoly(
            self.order,
            &self.polys[p.i],
            &self.polys[p.j],
            &p.lcm,
            p.sugar,
        )
    }
}

/// Reduced Gröbner basis (primitive integer form) of the given generators.
pub(crate) fn groebner(
    order: &MonomialOrder,
    gens: Vec<EPoly>,
    module: bool,
) -> Result<Vec<EPoly>> {
    groebner_in(&Integers, order, gens, module)
}

/// Reduced Gröbner basis over the domain `dom`, sorted by leading term descending.
pub(crate) fn groebner_in<D: Domain>(
    dom: &D,
    order: &MonomialOrder,
    gens: Vec<EPoly<D::C>>,
    module: bool,
) -> Result<Vec<EPoly<D::C>>> {
    let mut bb = Buchberger {
        dom,
        order,
        module,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        terms: 0,
    };
    // Inputs enter in sugar order alongside the pairs, so that high-degree
    // generators are only reduced once the low-degree part of the basis is in
    // place. Reducing them early against a partial basis blows up coefficients.
    let mut inputs: Vec<EPoly<D::C>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| {
        b.sugar.cmp(&a.sugar).then_with(|| {
            cmp_terms(
                order,
                &b.lead().m,
                b.lead().comp,
                &a.lead().m,
                a.lead().comp,
            )
        })
    });
    loop {
        let pair_sugar = bb.pairs.iter().map(|p| p.sugar).min();
        let s = match (inputs.last(), pair_sugar) {
            (None, None) => break,
            (Some(g), Some(ps)) if g.sugar > ps => {
                limits::check(bb.pairs.len(), bb.terms)?;
                let pair = bb.select();
                bb.spoly(&pair)
            }
            (Some(_), _) => inputs.pop().expect("nonempty input queue"),
            (None, Some(_)) => {
                limits::check(bb.pairs.len(), bb.terms)?;
                let pair = bb.select();
                bb.spoly(&pair)
            }
        };
        if s.is_zero() {
            continue;
        }
        let reducers = Reducers::in_domain(dom, &bb.polys, bb.active.clone());
        let r = dom.reduce(order, s, &reducers, None)?;
        if !r.is_zero() {
            bb.add(r);
        }
    }
    limits::check(0, bb.terms)?;
    interreduce(dom, order, bb.polys, bb.active)
}

/// Buchberger test with the Gebauer–Möller criteria: `basis` must be a
/// reduced Gröbner basis candidate (no lead divides another).
pub(crate) fn is_groebner_in<D: Domain>(
    dom: &D,
    order: &MonomialOrder,
    basis: Vec<EPoly<D::C>>,
    module: bool,
) -> Result<bool> {
    let mut bb = Buchberger {
        dom,
        order,
        module,
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        terms: 0,
    };
    for g in basis {
        bb.add(g);
    }
    let pairs = std::mem::take(&mut bb.pairs);
    let reducers = Reducers::in_domain(dom, &bb.polys, bb.active.clone());
    for pair in &pairs {
        limits::check_deadline()?;
        let s = bb.spoly(pair);
        if !dom.reduce(order, s, &reducers, None)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn interreduce<D: Domain>(
    dom: &D,
    order: &MonomialOrder,
    polys: Vec<EPoly<D::C>>,
    active: Vec<usize>,
) -> Result<Vec<EPoly<D::C>>> {
    let mut out = Vec::with_capacity(active.len());
    {
        let reducers = Reducers::in_domain(dom, &polys, active.clone());
        for &k in &active {
            let r = dom.reduce(order, polys[k].clone(), &reducers, Some(k))?;
            debug_assert!(!r.is_zero());
            out.push(r);
        }
    }
    out.sort_by(|a, b| {
        cmp_terms(
            order,
            &b.lead().m,
            b.lead().comp,
            &a.lead().m,
            a.lead().comp,
        )
    });
    Ok(out)
}

/// Check the Buchberger criterion: every S-polynomial reduces to zero.
pub(crate) fn s_pairs_reduce_to_zero(
    order: &MonomialOrder,
    basis: &[EPoly],
    module: bool,
) -> Result<bool> {
    let bb = Buchberger {
        dom: &Integers,
        order,
        module,
        polys: basis.to_vec(),
        active: (0..basis.len()).collect(),
        pairs: Vec::new(),
        terms: 0,
    };
    let reducers = Reducers::new(basis, (0..basis.len()).collect());
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            if basis[i].lead().comp != basis[j].lead().comp || bb.coprime(i, j) {
                continue;
            }
            let s = bb.spoly(&bb.pair(i, j));
            if !reduce(order, s, &reducers, None, false)?.poly.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Integer form of a vector of polynomials; entry `k` goes to component `first_comp + k`.
pub(crate) fn to_engine(order: &MonomialOrder, entries: &[(u32, &Polynomial)]) -> (EPoly, BigInt) {
    let mut den = BigInt::one();
    for (_, p) in entries {
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
    }
    let mut terms = Vec::new();
    let mut sugar = 0;
    for (comp, p) in entries {
        for (m, c) in p.terms() {
            sugar = sugar.max(m.degree());
            terms.push(Term {
                m: m.clone(),
                comp: *comp,
                c: c.numer() * (&den / c.denom()),
            });
        }
    }
    sort_terms(order, &mut terms);
    (EPoly { terms, sugar }, den)
}

pub(crate) fn poly_to_engine(order: &MonomialOrder, p: &Polynomial) -> (EPoly, BigInt) {
    to_engine(order, &[(0, p)])
}

/// Rational polynomial of component `comp`, scaled by `1/scale`.
pub(crate) fn component_from_engine(
    ring: &Ring,
    e: &EPoly,
    comp: u32,
    scale: &Rational,
) -> Polynomial {
    let inv = scale.recip();
    Polynomial::from_terms(
        ring,
        e.terms
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| (t.m.clone(), Rational::from_integer(t.c.clone()) * &inv)),
    )
}

/// Monic rational form of an ideal element (component 0) whose leading term is w.r.t. the engine order.
pub(crate) fn monic_from_engine(ring: &Ring, e: &EPoly) -> Polynomial {
    let lead = Rational::from_integer(e.lead().c.clone());
    component_from_engine(ring, e, 0, &lead)
}
