//! Graded pieces of a presented module as explicit vector spaces.

use std::collections::HashMap;

use crate::groebner::vector::{sort_vector, Term, Vector};
use crate::groebner::{module_gb, MonomialIdeal};
use crate::groebner::modules::ModuleGb;
use crate::ring::{Coeff, Monomial};

use crate::resolution::ModulePresentation;

/// Standard monomials of `coker relations` and coordinates in them.
pub struct DegreePieces {
    gb: ModuleGb,
    init: Vec<MonomialIdeal>,
    twists: Vec<i32>,
}

impl DegreePieces {
    pub fn new(m: &ModulePresentation) -> Self {
        let gb = module_gb(&m.relations, None);
        let init = gb.initial_ideals();
        DegreePieces { gb, init, twists: m.cover.twists.clone() }
    }

    /// Basis of `M_d` as standard terms `x^a e_c`.
    pub fn basis(&self, d: i32) -> Vec<(Monomial, u32)> {
        let n = self.gb.n;
        let mut out = Vec::new();
        for (c, &a) in self.twists.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in Monomial::all_of_degree(n, (d - a) as u32) {
                if !self.init[c].contains(&m) {
                    out.push((m, c as u32));
                }
            }
        }
        out
    }

    pub fn index(basis: &[(Monomial, u32)]) -> HashMap<(Monomial, u32), usize> {
        basis.iter().enumerate().map(|(i, &k)| (k, i)).collect()
    }

    /// Coordinates of `x^mult * (standard term)` in the basis of its degree.
    pub fn times(&self, mult: &Monomial, t: (Monomial, u32), index: &HashMap<(Monomial, u32), usize>) -> Vec<Coeff> {
        let mut v: Vector = vec![Term { m: t.0.mul(mult), comp: t.1, c: 1 }];
        sort_vector(&mut v, &self.gb.order);
        let r = self.gb.reduce(v);
        let mut out = vec![0; index.len()];
        for t in r {
            out[index[&(t.m, t.comp)]] = t.c;
        }
        out
    }
}
