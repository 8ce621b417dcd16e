//! Monomial orders.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic with `x1 > x2 > ... > xn`.
    #[default]
    Grevlex,
    /// Pure lexicographic with `x1 > x2 > ... > xn`.
    Lex,
    /// Lex on the first `k` variables, ties broken by grevlex on the rest.
    Eliminate(usize),
}

#[inline]
fn grevlex_range(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Comparison without the variable-count check.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.degree() != b.degree() {
                    return a.degree().cmp(&b.degree());
                }
                let (ea, eb) = (a.exps(), b.exps());
                for i in (0..ea.len()).rev() {
                    if ea[i] != eb[i] {
                        return eb[i].cmp(&ea[i]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps().cmp(b.exps()),
            MonomialOrder::Eliminate(k) => {
                let (ea, eb) = (a.exps(), b.exps());
                let k = k.min(ea.len());
                let da: u32 = ea[..k].iter().map(|&e| e as u32).sum();
                let db: u32 = eb[..k].iter().map(|&e| e as u32).sum();
                // block degree first keeps the order degree compatible on the
                // eliminated block, then lex inside it
                da.cmp(&db)
                    .then_with(|| ea[..k].cmp(&eb[..k]))
                    .then_with(|| grevlex_range(&ea[k..], &eb[k..]))
            }
        }
    }

    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex)
    }
}

/// Checked comparison of two monomials.
pub fn monomial_cmp(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::VarCountMismatch(a.nvars(), b.nvars()));
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn spec_examples() {
        let g = MonomialOrder::Grevlex;
        assert_eq!(monomial_cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0]), g), Ok(Ordering::Greater));
        assert_eq!(monomial_cmp(&m(&[1, 2, 3]), &m(&[1, 2, 3]), g), Ok(Ordering::Equal));
        let l = MonomialOrder::Lex;
        assert_eq!(monomial_cmp(&m(&[0, 3, 0]), &m(&[1, 0, 0]), l), Ok(Ordering::Less));
        assert!(monomial_cmp(&m(&[1, 0]), &m(&[1, 0, 0]), g).is_err());
    }

    #[test]
    fn grevlex_is_reverse_on_last() {
        // x1*x3 < x2^2 in grevlex
        assert_eq!(MonomialOrder::Grevlex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn eliminate_kills_first_block() {
        let o = MonomialOrder::Eliminate(1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 1, 1])), Ordering::Greater);
    }

    fn exps3() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..5, 3)
    }

    proptest! {
        #[test]
        fn order_axioms(a in exps3(), b in exps3(), c in exps3(), k in 0usize..4) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Eliminate(k)] {
                let ab = ord.cmp(&a, &b);
                prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(ord.cmp(&Monomial::one(3), &a), Ordering::Greater);
                if ab != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
                }
            }
        }
    }
}
