//! Single graded pieces of ideals as explicit vector spaces.

use std::collections::HashMap;

use crate::ring::linalg::Echelon;
use crate::ring::{Coeff, FieldSpec, Monomial, Polynomial};

/// `span(gens)` inside `S_deg`, kept in echelon form.
pub struct DegreeSpan {
    pub deg: u32,
    n: usize,
    field: FieldSpec,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    ech: Echelon,
}

impl DegreeSpan {
    pub fn new(n: usize, field: FieldSpec, deg: u32) -> Self {
        let basis = Monomial::all_of_degree(n, deg);
        let index = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let ech = Echelon::new(field, basis.len());
        DegreeSpan { deg, n, field, basis, index, ech }
    }

    pub fn of(n: usize, field: FieldSpec, deg: u32, gens: &[Polynomial]) -> Self {
        let mut s = Self::new(n, field, deg);
        for g in gens {
            s.insert(g);
        }
        s
    }

    fn coords(&self, f: &Polynomial) -> Vec<Coeff> {
        let mut v = vec![0; self.basis.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = *c;
        }
        v
    }

    pub fn insert(&mut self, f: &Polynomial) {
        if !f.is_zero() && !self.ech.is_full() {
            debug_assert_eq!(f.degree(), Some(self.deg));
            let v = self.coords(f);
            self.ech.insert(v);
        }
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    /// Whether this is all of `S_deg`.
    pub fn is_full(&self) -> bool {
        self.ech.is_full()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.ech.contains(&self.coords(f))
    }

    /// A basis as polynomials.
    pub fn elements(&self) -> Vec<Polynomial> {
        self.ech
            .rows()
            .iter()
            .map(|r| {
                let terms = r.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (self.basis[i], c)).collect();
                Polynomial::from_terms(self.n, self.field, terms)
            })
            .collect()
    }

    /// `span(gens · self)` in degree `deg + e` for forms `gens` of degree `e`.
    pub fn times(&self, gens: &[Polynomial], e: u32) -> DegreeSpan {
        let mut out = DegreeSpan::new(self.n, self.field, self.deg + e);
        for b in self.elements() {
            for g in gens {
                out.insert(&b.mul(g));
                if out.is_full() {
                    return out;
                }
            }
        }
        out
    }
}
