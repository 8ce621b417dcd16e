//! Monomial ideals.

use serde::{Deserialize, Serialize};

use crate::ring::{FieldSpec, Monomial, Polynomial};

/// Ideal generated by monomials, kept minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let mut g: Vec<Monomial> = gens.into_iter().collect();
        g.sort();
        g.dedup();
        let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
        // ascending degree: a later monomial can only be divisible by an earlier one
        for m in g {
            if !out.iter().any(|a| a.divides(&m)) {
                out.push(m);
            }
        }
        MonomialIdeal { n, gens: out }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    /// `m^d`.
    pub fn power_of_max(n: usize, d: u32) -> Self {
        MonomialIdeal { n, gens: Monomial::all_of_degree(n, d) }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        let mask = m.divmask();
        self.gens.iter().any(|g| g.divmask() & !mask == 0 && g.divides(m))
    }

    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Self {
        MonomialIdeal::new(self.n, self.gens.iter().chain(other.gens.iter()).copied())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Self {
        let mut g = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        MonomialIdeal::new(self.n, g)
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = MonomialIdeal::new(self.n, [Monomial::one(self.n)]);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `(self : m)`.
    pub fn colon(&self, m: &Monomial) -> Self {
        MonomialIdeal::new(self.n, self.gens.iter().map(|g| m.gcd(g).quotient_of(g)))
    }

    pub fn polynomials(&self, field: FieldSpec) -> Vec<Polynomial> {
        self.gens.iter().map(|&m| Polynomial::term(field, m, 1)).collect()
    }

    /// Krull dimension of `S / self`, `-1` for the unit ideal.
    ///
    /// The largest set of variables containing the support of no generator.
    pub fn krull_dim(&self) -> i32 {
        if self.gens.iter().any(|g| g.is_one()) {
            return -1;
        }
        let supports: Vec<u32> = {
            let mut s: Vec<u32> = self.gens.iter().map(|g| g.support_mask()).collect();
            s.sort_by_key(|m| m.count_ones());
            s.dedup();
            s
        };
        let n = self.n;
        let mut best = 0;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones() as i32;
            if size <= best {
                continue;
            }
            if supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    /// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `S / self`.
    pub fn hilbert_numerator(&self) -> Vec<i64> {
        numerator(self.n, self.gens.clone())
    }
}

fn poly_add(a: &mut Vec<i64>, b: &[i64], shift: usize, sign: i64) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (k, &c) in b.iter().enumerate() {
        a[k + shift] += sign * c;
    }
}

fn minimalize(mut g: Vec<Monomial>) -> Vec<Monomial> {
    g.sort();
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g {
        if !out.iter().any(|a| a.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Pivot recursion `N(M) = N(M + (x^e)) - t^e N(M : x^e)` down to ideals of
/// pure powers, where the numerator factors.
fn numerator(n: usize, gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        return vec![0];
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support_mask().count_ones() > 1).collect();
    if mixed.is_empty() {
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = acc.clone();
            poly_add(&mut next, &acc, d, -1);
            acc = next;
        }
        return acc;
    }
    // variable occurring in most mixed generators
    let mut count = vec![0usize; n];
    for g in &mixed {
        for (i, c) in count.iter_mut().enumerate() {
            if g.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let var = (0..n).max_by_key(|&i| (count[i], std::cmp::Reverse(i))).unwrap();
    let mut exps: Vec<u32> = mixed.iter().map(|g| g.exp(var)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let mut pe = vec![0u32; n];
    pe[var] = e;
    let p = Monomial::from_exps(&pe);

    let mut with_p = gens.clone();
    with_p.push(p);
    let colon: Vec<Monomial> = gens.iter().map(|g| p.gcd(g).quotient_of(g)).collect();
    let mut out = numerator(n, with_p);
    let c = numerator(n, colon);
    poly_add(&mut out, &c, e as usize, 1);
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims() {
        let n = 3;
        assert_eq!(MonomialIdeal::power_of_max(n, 2).krull_dim(), 0);
        assert_eq!(MonomialIdeal::new(n, [Monomial::var(n, 0)]).krull_dim(), 2);
        assert_eq!(MonomialIdeal::new(n, [Monomial::one(n)]).krull_dim(), -1);
        assert_eq!(MonomialIdeal::zero(n).krull_dim(), 3);
    }

    #[test]
    fn numerator_of_power() {
        // S/m^2 in 2 vars: 1 + 2t, numerator (1+2t)(1-t)^2 = 1 - 3t^2 + 2t^3
        let m2 = MonomialIdeal::power_of_max(2, 2);
        assert_eq!(m2.hilbert_numerator(), vec![1, 0, -3, 2]);
    }

    #[test]
    fn minimal_generators() {
        let a = Monomial::from_exps(&[1, 0]);
        let b = Monomial::from_exps(&[2, 1]);
        assert_eq!(MonomialIdeal::new(2, [b, a]).gens(), &[a]);
    }
}
