//! Multi-modular Gröbner bases of ideals.
//!
//! The reduced basis is computed modulo word-size primes, lifted by Chinese
//! remaindering and rational reconstruction, and accepted only once the lift
//! is stable and verified over the rationals: every input and every S-pair
//! reduces to zero. Exact integer arithmetic stays the fallback.

use std::cmp::Ordering;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::engine::{self, cmp_terms, groebner_in, Domain, EPoly, Reducers, Term};
use crate::error::Result;
use crate::limits;
use crate::poly::{Monomial, MonomialOrder, Rational};

/// Most primes tried before falling back to exact arithmetic.
const MAX_PRIMES: usize = 128;

/// Field arithmetic; reduction over a field keeps every basis element monic.
pub(crate) trait Field {
    type C: Clone + PartialEq;
    fn zero(&self) -> Self::C;
    fn one(&self) -> Self::C;
    fn is_zero(&self, a: &Self::C) -> bool;
    fn mul(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn sub(&self, a: &Self::C, b: &Self::C) -> Self::C;
    fn inv(&self, a: &Self::C) -> Self::C;
}

/// Integers modulo a prime below 2^31.
pub(crate) struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Monic image of an integer polynomial whose leading coefficient is a unit mod p.
    fn input(&self, g: &EPoly) -> EPoly<u64> {
        let pb = BigInt::from(self.p);
        let terms = g
            .terms
            .iter()
            .filter_map(|t| {
                let c =
                    t.c.mod_floor(&pb)
                        .to_u64()
                        .expect("residue below the modulus");
                (c != 0).then(|| Term {
                    m: t.m.clone(),
                    comp: t.comp,
                    c,
                })
            })
            .collect();
        monic(
            self,
            EPoly {
                terms,
                sugar: g.sugar,
            },
        )
    }
}

impl Field for PrimeField {
    type C = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        pow_mod(*a, self.p - 2, self.p)
    }
}

/// The rationals, used to verify a lifted basis.
pub(crate) struct Rationals;

impl Field for Rationals {
    type C = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }

    fn one(&self) -> Rational {
        Rational::one()
    }

    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn inv(&self, a: &Rational) -> Rational {
        a.recip()
    }
}

fn monic<F: Field>(f: &F, mut p: EPoly<F::C>) -> EPoly<F::C> {
    if let Some(lead) = p.terms.first() {
        if lead.c != f.one() {
            let inv = f.inv(&lead.c);
            for t in &mut p.terms {
                t.c = f.mul(&t.c, &inv);
            }
        }
    }
    p
}

/// `p - a * mono * q`, where `p[..start]` is larger than every term of `mono * q`.
fn sub_mul<F: Field>(
    f: &F,
    order: &MonomialOrder,
    p: &[Term<F::C>],
    q: &[Term<F::C>],
    a: &F::C,
    mono: &Monomial,
    start: usize,
) -> Vec<Term<F::C>> {
    let mut out = Vec::with_capacity(p.len() + q.len());
    out.extend_from_slice(&p[..start]);
    let mut i = start;
    let mut qi = q.iter().map(|t| (t.m.mul(mono), t.comp, &t.c)).peekable();
    let zero = f.zero();
    loop {
        let ord = match (p.get(i), qi.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Greater,
            (None, Some(_)) => Ordering::Less,
            (Some(t), Some((m, comp, _))) => cmp_terms(order, &t.m, t.comp, m, *comp),
        };
        match ord {
            Ordering::Greater => {
                out.push(p[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let (m, comp, c) = qi.next().expect("peeked");
                out.push(Term {
                    m,
                    comp,
                    c: f.sub(&zero, &f.mul(a, c)),
                });
            }
            Ordering::Equal => {
                let (m, comp, c) = qi.next().expect("peeked");
                let v = f.sub(&p[i].c, &f.mul(a, c));
                if !f.is_zero(&v) {
                    out.push(Term { m, comp, c: v });
                }
                i += 1;
            }
        }
    }
    out
}

/// Reduction over a field, for the Buchberger driver.
pub(crate) struct Over<F>(F);

impl<F: Field> Domain for Over<F> {
    type C = F::C;

    fn size(&self, p: &EPoly<F::C>) -> u64 {
        p.terms.len() as u64
    }

    fn spoly(
        &self,
        order: &MonomialOrder,
        f: &EPoly<F::C>,
        g: &EPoly<F::C>,
        lcm: &Monomial,
        sugar: u32,
    ) -> EPoly<F::C> {
        let mf = lcm.div(&f.lead().m);
        let mg = lcm.div(&g.lead().m);
        let shifted: Vec<Term<F::C>> = f
            .terms
            .iter()
            .map(|t| Term {
                m: t.m.mul(&mf),
                comp: t.comp,
                c: t.c.clone(),
            })
            .collect();
        // both leads are 1, so the leading terms cancel
        let terms = sub_mul(&self.0, order, &shifted, &g.terms, &self.0.one(), &mg, 0);
        EPoly { terms, sugar }
    }

    fn reduce(
        &self,
        order: &MonomialOrder,
        mut p: EPoly<F::C>,
        reducers: &Reducers<'_, F::C>,
        skip: Option<usize>,
    ) -> Result<EPoly<F::C>> {
        let mut i = 0;
        let mut steps = 0u32;
        while i < p.terms.len() {
            let t = &p.terms[i];
            let Some(k) = reducers.find(&t.m, t.comp, skip) else {
                i += 1;
                continue;
            };
            let g = &reducers.polys[k];
            let mono = t.m.div(&g.lead().m);
            let a = t.c.clone();
            p.sugar = p.sugar.max(mono.degree() + g.sugar);
            p.terms = sub_mul(&self.0, order, &p.terms, &g.terms, &a, &mono, i);
            steps += 1;
            if steps.is_multiple_of(64) {
                limits::check_deadline()?;
            }
        }
        Ok(monic(&self.0, p))
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Miller–Rabin with bases 2, 3, 5, 7, deterministic below 3.2e9.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2, 3, 5, 7] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for a in [2, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// The largest primes below 2^31, descending.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        (1u64..(1 << 31))
            .rev()
            .step_by(2)
            .filter(|&n| is_prime(n))
            .take(MAX_PRIMES)
            .collect()
    })
}

/// `n/d` with `|n|, d ≤ sqrt(m/2)` and `n ≡ a d (mod m)`, if one exists.
fn reconstruct(a: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::new(r1, t1))
}

type Lift = Vec<EPoly<Rational>>;

/// Images that share one leading-term pattern, combined modulo the product of their primes.
struct Group {
    leads: Vec<(Monomial, u32)>,
    primes: usize,
    modulus: BigInt,
    residues: Vec<Vec<Term>>,
    last: Option<Lift>,
    rejected: Option<Lift>,
}

impl Group {
    fn absorb(&mut self, order: &MonomialOrder, image: &[EPoly<u64>], p: u64) {
        let pb = BigInt::from(p);
        if self.primes == 0 {
            self.residues = image
                .iter()
                .map(|e| {
                    e.terms
                        .iter()
                        .map(|t| Term {
                            m: t.m.clone(),
                            comp: t.comp,
                            c: BigInt::from(t.c),
                        })
                        .collect()
                })
                .collect();
        } else {
            let minv = BigInt::from(pow_mod(
                self.modulus
                    .mod_floor(&pb)
                    .to_u64()
                    .expect("residue below the modulus"),
                p - 2,
                p,
            ));
            let modulus = &self.modulus;
            // x + M * ((r - x) / M mod p)
            let lift = |x: &BigInt, r: u64| -> BigInt {
                x + modulus * ((BigInt::from(r) - x) * &minv).mod_floor(&pb)
            };
            for (old, e) in self.residues.iter_mut().zip(image) {
                let mut merged = Vec::with_capacity(old.len().max(e.terms.len()));
                let mut a = std::mem::take(old).into_iter().peekable();
                let mut b = e.terms.iter().peekable();
                loop {
                    let ord = match (a.peek(), b.peek()) {
                        (None, None) => break,
                        (Some(_), None) => Ordering::Greater,
                        (None, Some(_)) => Ordering::Less,
                        (Some(x), Some(t)) => cmp_terms(order, &x.m, x.comp, &t.m, t.comp),
                    };
                    match ord {
                        Ordering::Greater => {
                            let x = a.next().expect("peeked");
                            merged.push(Term {
                                c: lift(&x.c, 0),
                                ..x
                            });
                        }
                        Ordering::Less => {
                            let t = b.next().expect("peeked");
                            merged.push(Term {
                                m: t.m.clone(),
                                comp: t.comp,
                                c: lift(&BigInt::zero(), t.c),
                            });
                        }
                        Ordering::Equal => {
                            let x = a.next().expect("peeked");
                            let t = b.next().expect("peeked");
                            merged.push(Term {
                                c: lift(&x.c, t.c),
                                ..x
                            });
                        }
                    }
                }
                *old = merged;
            }
        }
        self.modulus *= pb;
        self.primes += 1;
    }

    fn reconstruct(&self) -> Option<Lift> {
        self.residues
            .iter()
            .map(|e| {
                let terms = e
                    .iter()
                    .filter(|t| !t.c.is_zero())
                    .map(|t| {
                        Some(Term {
                            m: t.m.clone(),
                            comp: t.comp,
                            c: reconstruct(&t.c, &self.modulus)?,
                        })
                    })
                    .collect::<Option<Vec<_>>>()?;
                let sugar = terms.iter().map(|t| t.m.degree()).max().unwrap_or(0);
                Some(EPoly { terms, sugar })
            })
            .collect()
    }
}

/// Primitive integer form of a lifted monic basis.
fn to_integer(lift: &Lift) -> Vec<EPoly> {
    lift.iter()
        .map(|e| {
            let den = e
                .terms
                .iter()
                .fold(BigInt::one(), |d, t| d.lcm(t.c.denom()));
            let mut terms: Vec<Term> = e
                .terms
                .iter()
                .map(|t| Term {
                    m: t.m.clone(),
                    comp: t.comp,
                    c: t.c.numer() * (&den / t.c.denom()),
                })
                .collect();
            let g = terms.iter().fold(BigInt::zero(), |g, t| g.gcd(&t.c));
            if !g.is_one() {
                for t in &mut terms {
                    t.c /= &g;
                }
            }
            EPoly {
                terms,
                sugar: e.sugar,
            }
        })
        .collect()
}

/// The lift is a Gröbner basis whose span contains every input.
fn verified(order: &MonomialOrder, lift: &Lift, gens: &[EPoly], module: bool) -> Result<bool> {
    let field = Over(Rationals);
    {
        let reducers = Reducers::in_domain(&field, lift, (0..lift.len()).collect());
        for g in gens {
            let q = EPoly {
                terms: g
                    .terms
                    .iter()
                    .map(|t| Term {
                        m: t.m.clone(),
                        comp: t.comp,
                        c: Rational::from_integer(t.c.clone()),
                    })
                    .collect(),
                sugar: g.sugar,
            };
            if !field.reduce(order, q, &reducers, None)?.is_zero() {
                return Ok(false);
            }
        }
    }
    engine::is_groebner_in(&field, order, lift.clone(), module)
}

/// Reduced Gröbner basis (primitive integer form) by modular lifting, with the
/// exact engine as fallback when no stable verified lift is found.
pub(crate) fn groebner(
    order: &MonomialOrder,
    gens: Vec<EPoly>,
    module: bool,
) -> Result<Vec<EPoly>> {
    let gens: Vec<EPoly> = gens.into_iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let mut groups: Vec<Group> = Vec::new();
    for &p in primes() {
        let pb = BigInt::from(p);
        if gens.iter().any(|g| (&g.lead().c % &pb).is_zero()) {
            continue;
        }
        let field = PrimeField { p };
        let inputs = gens.iter().map(|g| field.input(g)).collect();
        let image = groebner_in(&Over(field), order, inputs, module)?;
        let leads: Vec<(Monomial, u32)> = image
            .iter()
            .map(|e| (e.lead().m.clone(), e.lead().comp))
            .collect();
        let gi = match groups.iter().position(|g| g.leads == leads) {
            Some(i) => i,
            None => {
                groups.push(Group {
                    leads,
                    primes: 0,
                    modulus: BigInt::one(),
                    residues: Vec::new(),
                    last: None,
                    rejected: None,
                });
                groups.len() - 1
            }
        };
        groups[gi].absorb(order, &image, p);
        let count = groups[gi].primes;
        let majority = groups
            .iter()
            .enumerate()
            .all(|(j, g)| j == gi || g.primes < count);
        let group = &mut groups[gi];
        let Some(lift) = group.reconstruct() else {
            continue;
        };
        let stable = group.last.as_ref() == Some(&lift);
        group.last = Some(lift);
        if !stable || !majority || group.rejected == group.last {
            continue;
        }
        let lift = group.last.as_ref().expect("just stored");
        if verified(order, lift, &gens, module)? {
            return Ok(to_integer(lift));
        }
        group.rejected = group.last.clone();
    }
    engine::groebner(order, gens, module)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Ring};

    fn engine_input(order: &MonomialOrder, vars: &[&str], gens: &[&str]) -> Vec<EPoly> {
        let r = Ring::new(vars.iter().copied()).unwrap();
        gens.iter()
            .map(|g| engine::poly_to_engine(order, &parse_polynomial(g, &r).unwrap()).0)
            .collect()
    }

    fn terms(basis: Vec<EPoly>) -> Vec<Vec<Term>> {
        basis.into_iter().map(|e| e.terms).collect()
    }

    #[test]
    fn lift_matches_exact_engine() {
        let cases: [(&[&str], &[&str], MonomialOrder); 4] = [
            (
                &["x", "y"],
                &["x^3 - 2*x*y", "x^2*y - 2*y^2 + x"],
                MonomialOrder::DegRevLex,
            ),
            (
                &["x", "y", "z"],
                &["x^2 + y^2 + z^2 - 1", "x*y*z - 1/7", "x - 12345*y + z^3"],
                MonomialOrder::Lex,
            ),
            (
                &["t", "x", "y"],
                &["x - t^2", "y - 3/5*t^3 + 1000003*t"],
                MonomialOrder::elimination(1, 3),
            ),
            (
                &["x", "y"],
                &["x^2", "x*y", "y^2", "x + 2", "y - 1"],
                MonomialOrder::DegRevLex,
            ),
        ];
        for (vars, gens, order) in cases {
            let input = engine_input(&order, vars, gens);
            let exact = engine::groebner(&order, input.clone(), false).unwrap();
            assert_eq!(
                terms(groebner(&order, input, false).unwrap()),
                terms(exact),
                "{gens:?}"
            );
        }
    }

    #[test]
    fn module_lift_matches_exact_engine() {
        let order = MonomialOrder::DegRevLex;
        let r = Ring::new(["x", "y"]).unwrap();
        let p = |s: &str| parse_polynomial(s, &r).unwrap();
        let (a, b, c) = (p("x^2 - 3*y"), p("x*y + 5"), p("y^3 - x"));
        let one = p("1");
        let input = vec![
            engine::to_engine(&order, &[(0, &a), (1, &one)]).0,
            engine::to_engine(&order, &[(0, &b), (2, &one)]).0,
            engine::to_engine(&order, &[(0, &c), (3, &one)]).0,
        ];
        let exact = engine::groebner(&order, input.clone(), true).unwrap();
        assert_eq!(terms(groebner(&order, input, true).unwrap()), terms(exact));
    }

    #[test]
    fn primes_are_prime_and_descending() {
        let ps = primes();
        assert_eq!(ps[0], 2_147_483_647);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        for &p in &ps[..4] {
            assert!((2..50_000u64).all(|d| p % d != 0));
        }
        assert!(!is_prime(2_147_483_649));
    }

    #[test]
    fn rational_reconstruction_inverts_reduction() {
        let m = BigInt::from(2_147_483_647u64) * BigInt::from(2_147_483_629u64);
        for (n, d) in [(3i64, 7i64), (-22, 5), (0, 1), (123_456, 789)] {
            let q = Rational::new(BigInt::from(n), BigInt::from(d));
            let inv = BigInt::from(d).extended_gcd(&m).x.mod_floor(&m);
            let a = (BigInt::from(n) * inv).mod_floor(&m);
            assert_eq!(reconstruct(&a, &m), Some(q));
        }
    }
}
