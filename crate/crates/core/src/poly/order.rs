use std::cmp::Ordering;

use crate::error::{Error, Result};

/// A global, multiplicative total order on monomials.
///
/// Within each order, ties are broken with the earlier-declared variable larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
    /// Weighted degree (positive weights), ties broken by reverse lexicographic order.
    WeightedDegRevLex(Vec<u32>),
    /// Consecutive variable blocks, each compared with its own order; earlier blocks dominate.
    Block(Vec<(MonomialOrder, usize)>),
}

impl MonomialOrder {
    pub fn weighted(weights: Vec<u32>) -> Result<MonomialOrder> {
        if weights.contains(&0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        Ok(MonomialOrder::WeightedDegRevLex(weights))
    }

    /// Elimination order for the first `k` of `n` variables: degrevlex on both blocks.
    pub fn elimination(k: usize, n: usize) -> MonomialOrder {
        MonomialOrder::Block(vec![
            (MonomialOrder::DegRevLex, k),
            (MonomialOrder::DegRevLex, n - k),
        ])
    }

    /// Number of variables the order is defined on, when it is fixed.
    pub fn arity(&self) -> Option<usize> {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => None,
            MonomialOrder::WeightedDegRevLex(w) => Some(w.len()),
            MonomialOrder::Block(blocks) => Some(blocks.iter().map(|b| b.1).sum()),
        }
    }

    pub fn check_arity(&self, nvars: usize) -> Result<()> {
        match self.arity() {
            Some(a) if a != nvars => Err(Error::InvalidRing(format!(
                "order defined on {a} variables used in a ring with {nvars}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::DegRevLex => {
                let da: u64 = a.iter().map(|&e| e as u64).sum();
                let db: u64 = b.iter().map(|&e| e as u64).sum();
                da.cmp(&db).then_with(|| revlex(a, b))
            }
            MonomialOrder::WeightedDegRevLex(w) => {
                let wa: u64 = a.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                let wb: u64 = b.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum();
                wa.cmp(&wb).then_with(|| revlex(a, b))
            }
            MonomialOrder::Block(blocks) => {
                let mut start = 0;
                for (order, size) in blocks {
                    let end = start + size;
                    let c = order.cmp(&a[start..end], &b[start..end]);
                    if c != Ordering::Equal {
                        return c;
                    }
                    start = end;
                }
                Ordering::Equal
            }
        }
    }
}

fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_examples() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > xz
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[1, 1, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 0, 1], &[1, 0, 0]), Ordering::Less);
    }

    #[test]
    fn lex_and_block() {
        assert_eq!(MonomialOrder::Lex.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        let b = MonomialOrder::elimination(1, 2);
        assert_eq!(b.cmp(&[1, 0], &[0, 5]), Ordering::Greater);
        assert_eq!(b.cmp(&[0, 2], &[0, 1]), Ordering::Greater);
        assert!(MonomialOrder::weighted(vec![1, 0]).is_err());
        let w = MonomialOrder::weighted(vec![2, 3]).unwrap();
        // equal weighted degree, revlex decides
        assert_eq!(w.cmp(&[3, 0], &[0, 2]), Ordering::Greater);
        assert_eq!(w.cmp(&[0, 1], &[1, 0]), Ordering::Greater);
    }
}
