//! Term orders: global degrevlex, the antigraded local variant, lex, and
//! block orders for elimination. Under a global kind 1 is the smallest
//! monomial; under a local kind 1 is the largest.

use std::cmp::Ordering;

use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TermOrder {
    /// Graded reverse lexicographic, 1 smallest.
    Degrevlex,
    /// Antigraded degrevlex ("ds"): smaller total degree means larger
    /// monomial, ties broken as in degrevlex. 1 is the largest monomial.
    LocalDegrevlex,
    /// Lexicographic, 1 smallest.
    Lex,
    /// Compares the first `split` exponents with `outer`, ties decided by
    /// `inner` on the rest. Ranking eliminated variables first in the outer
    /// block makes this an elimination order.
    Block {
        split: usize,
        outer: Box<TermOrder>,
        inner: Box<TermOrder>,
    },
}

fn cmp_revlex_tie(a: &[u32], b: &[u32]) -> Ordering {
    // a > b when the last nonzero entry of a - b is negative
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn cmp_slices(order: &TermOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        TermOrder::Degrevlex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            da.cmp(&db).then_with(|| cmp_revlex_tie(a, b))
        }
        TermOrder::LocalDegrevlex => {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| cmp_revlex_tie(a, b))
        }
        TermOrder::Lex => {
            for i in 0..a.len() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        }
        TermOrder::Block { split, outer, inner } => {
            cmp_slices(outer, &a[..*split], &b[..*split])
                .then_with(|| cmp_slices(inner, &a[*split..], &b[*split..]))
        }
    }
}

impl TermOrder {
    /// `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        cmp_slices(self, a.exps(), b.exps())
    }

    /// 1 is the smallest monomial.
    pub fn is_global(&self) -> bool {
        match self {
            TermOrder::Degrevlex | TermOrder::Lex => true,
            TermOrder::LocalDegrevlex => false,
            TermOrder::Block { outer, inner, .. } => outer.is_global() && inner.is_global(),
        }
    }

    /// 1 is the largest monomial.
    pub fn is_local(&self) -> bool {
        match self {
            TermOrder::LocalDegrevlex => true,
            TermOrder::Degrevlex | TermOrder::Lex => false,
            TermOrder::Block { outer, inner, .. } => outer.is_local() && inner.is_local(),
        }
    }

    /// Elimination order for the first `split` variables.
    pub fn elimination(split: usize) -> TermOrder {
        TermOrder::Block {
            split,
            outer: Box::new(TermOrder::Degrevlex),
            inner: Box::new(TermOrder::Degrevlex),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn one_is_extremal() {
        let one = m(&[0, 0]);
        let x = m(&[1, 0]);
        assert_eq!(TermOrder::Degrevlex.cmp(&x, &one), Ordering::Greater);
        assert_eq!(TermOrder::Lex.cmp(&x, &one), Ordering::Greater);
        assert_eq!(TermOrder::LocalDegrevlex.cmp(&one, &x), Ordering::Greater);
    }

    #[test]
    fn degrevlex_tiebreak() {
        // x^2*y^2 > y^4 in degrevlex (same degree, smaller last exponent wins)
        let a = m(&[2, 2]);
        let b = m(&[0, 4]);
        assert_eq!(TermOrder::Degrevlex.cmp(&a, &b), Ordering::Greater);
        // in the local variant the same tiebreak applies on equal degrees
        assert_eq!(TermOrder::LocalDegrevlex.cmp(&a, &b), Ordering::Greater);
        // lower degree is larger locally
        assert_eq!(
            TermOrder::LocalDegrevlex.cmp(&m(&[1, 0]), &m(&[0, 4])),
            Ordering::Greater
        );
    }

    #[test]
    fn elimination_ranks_dropped_vars_first() {
        let ord = TermOrder::elimination(1);
        // any monomial containing the first variable beats any without it
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
    }
}
