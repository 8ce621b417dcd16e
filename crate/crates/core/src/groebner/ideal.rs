//! Homogeneous ideals and the operations built on Gröbner bases.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::engine::{self, GbSpec};
use super::hilbert::HilbertSeries;
use super::monideal::MonomialIdeal;
use super::vector::{from_poly, to_poly, ModOrder};
use crate::ring::{linalg, Monomial, MonomialOrder, Polynomial, RingContext};
use crate::{Error, Result};

/// A reduced Gröbner basis: monic, inter-reduced, sorted by leading term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBasis {
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading(self.order).unwrap().0).collect()
    }

    pub fn initial_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::new(n, self.leading_monomials())
    }

    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.degree() == Some(0))
    }

    fn vectors(&self, ord: &ModOrder) -> Vec<Vec<super::vector::Term>> {
        self.elements.iter().map(|g| from_poly(g, ord)).collect()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// Inhomogeneous input is accepted and handled with the sugar strategy.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> GroebnerBasis {
    buchberger_weighted(gens, ord, None, None)
}

pub(crate) fn buchberger_weighted(
    gens: &[Polynomial],
    ord: MonomialOrder,
    weights: Option<&[u32]>,
    max_degree: Option<i32>,
) -> GroebnerBasis {
    let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
        return GroebnerBasis { order: ord, elements: Vec::new() };
    };
    let (n, field) = (first.nvars(), first.field());
    let mo = ModOrder::top(ord);
    let graded = gens.iter().all(|g| is_weighted_homogeneous(g, weights));
    let mut spec = GbSpec::new(field, &mo, &[0]);
    spec.weights = weights;
    spec.graded = graded;
    spec.max_degree = max_degree;
    let inputs: Vec<_> = gens.iter().map(|g| from_poly(g, &mo)).collect();
    let out = engine::run(&spec, &[], &inputs);
    let elements = out.basis.iter().map(|v| to_poly(v, n, field)).collect();
    GroebnerBasis { order: ord, elements }
}

fn weighted_degree(m: &Monomial, weights: Option<&[u32]>) -> u32 {
    match weights {
        None => m.degree(),
        Some(w) => m.exps().iter().zip(w).map(|(&e, &w)| e as u32 * w).sum(),
    }
}

fn is_weighted_homogeneous(f: &Polynomial, weights: Option<&[u32]>) -> bool {
    let mut it = f.terms().iter().map(|t| weighted_degree(&t.0, weights));
    match it.next() {
        None => true,
        Some(d) => it.all(|e| e == d),
    }
}

/// Remainder of `f` modulo a reduced Gröbner basis.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if let Some(h) = g.elements.first() {
        if h.nvars() != f.nvars() || h.field() != f.field() {
            return Err(Error::RingMismatch);
        }
    }
    let mo = ModOrder::top(g.order);
    let spec = GbSpec::new(f.field(), &mo, &[0]);
    let r = engine::normal_form(&spec, &g.vectors(&mo), from_poly(f, &mo));
    Ok(to_poly(&r, f.nvars(), f.field()))
}

/// Exact quotient `f / g`, or `None` when `g` does not divide `f`.
pub fn divide_exact(f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let ord = MonomialOrder::Grevlex;
    let (lg, cg) = g.leading(ord)?;
    let inv = f.field().inv(cg);
    let mut rest = f.clone();
    let mut q = Vec::new();
    while let Some((m, c)) = rest.leading(ord) {
        let t = m.div(&lg)?;
        let c = f.field().mul(c, inv);
        q.push((t, c));
        rest = rest.sub(&g.mul_term(&t, c));
    }
    Some(Polynomial::from_terms(f.nvars(), f.field(), q))
}

/// Homogeneous ideal with a lazily computed grevlex basis.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Ideal {
    pub ring: RingContext,
    gens: Vec<Polynomial>,
    #[serde(skip)]
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb().elements == other.gb().elements
    }
}

impl Ideal {
    /// Zero generators are dropped; inhomogeneous ones are rejected.
    pub fn new(ring: RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if g.nvars() != ring.n() || g.field() != ring.field {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            let key = g.monic(MonomialOrder::Grevlex);
            if seen.insert(key) {
                out.push(g);
            }
        }
        Ok(Ideal { ring, gens: out, gb: OnceLock::new() })
    }

    pub fn from_monomials(ring: RingContext, m: &MonomialIdeal) -> Self {
        let gens = m.polynomials(ring.field);
        Ideal { ring, gens, gb: OnceLock::new() }
    }

    /// The maximal homogeneous ideal `m`.
    pub fn maximal(ring: &RingContext) -> Self {
        let gens = (0..ring.n()).map(|i| ring.var(i)).collect();
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn unit(ring: &RingContext) -> Self {
        Ideal { ring: ring.clone(), gens: vec![ring.one()], gb: OnceLock::new() }
    }

    pub fn zero(ring: &RingContext) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced grevlex basis, computed once.
    pub fn gb(&self) -> Arc<GroebnerBasis> {
        self.gb
            .get_or_init(|| Arc::new(buchberger(&self.gens, MonomialOrder::Grevlex)))
            .clone()
    }

    pub fn gb_in(&self, ord: MonomialOrder) -> Arc<GroebnerBasis> {
        if ord == MonomialOrder::Grevlex {
            self.gb()
        } else {
            Arc::new(buchberger(&self.gens, ord))
        }
    }

    pub fn initial_ideal(&self, ord: MonomialOrder) -> MonomialIdeal {
        self.gb_in(ord).initial_ideal(self.n())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, &self.gb()).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn same_as(&self, other: &Ideal) -> bool {
        self.gb().elements == other.gb().elements
    }

    /// Minimal homogeneous generators.
    pub fn mingens(&self) -> Vec<Polynomial> {
        let mo = ModOrder::top(MonomialOrder::Grevlex);
        let spec = GbSpec::new(self.ring.field, &mo, &[0]);
        let inputs: Vec<_> = self.gens.iter().map(|g| from_poly(g, &mo)).collect();
        let out = engine::run(&spec, &[], &inputs);
        out.mingens.iter().map(|&i| self.gens[i].clone()).collect()
    }

    pub fn minimalized(&self) -> Ideal {
        let mut gens = self.mingens();
        gens.sort_by_key(|a| a.degree());
        let gb = self.gb.get().cloned();
        let out = Ideal { ring: self.ring.clone(), gens, gb: OnceLock::new() };
        if let Some(g) = gb {
            let _ = out.gb.set(g);
        }
        out
    }

    /// Degrees of the given generators.
    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.degree().unwrap()).collect()
    }

    /// Common degree of all generators, if there is one.
    pub fn single_degree(&self) -> Option<u32> {
        let d = self.gens.first()?.degree()?;
        self.gens.iter().all(|g| g.degree() == Some(d)).then_some(d)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), g).expect("homogeneous")
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(b));
            }
        }
        Ideal::new(self.ring.clone(), g).expect("homogeneous")
    }

    /// All `k`-fold products of generators.
    pub fn power(&self, k: u32) -> Ideal {
        assert!(k >= 1, "powers start at 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self);
        }
        acc
    }

    /// `I ∩ J` through `t I + (1 - t) J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        let n = self.n();
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        let field = self.ring.field;
        let t = Polynomial::var(n + 1, field, 0);
        let one_minus_t = Polynomial::constant(n + 1, field, 1).sub(&t);
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.embed(n + 1, 1).mul(&t));
        }
        for g in &other.gens {
            gens.push(g.embed(n + 1, 1).mul(&one_minus_t));
        }
        let mut w = vec![1u32; n + 1];
        w[0] = 0;
        let gb = buchberger_weighted(&gens, MonomialOrder::Eliminate(1), Some(&w), None);
        let kept = gb
            .elements
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|g| drop_leading_vars(g, 1))
            .collect();
        Ideal::new(self.ring.clone(), kept).expect("homogeneous").minimalized()
    }

    /// `(I : f)`.
    pub fn quotient_by(&self, f: &Polynomial) -> Ideal {
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let fi = Ideal::new(self.ring.clone(), vec![f.clone()]).expect("homogeneous");
        let meet = self.intersect(&fi);
        let gens = meet.gens.iter().map(|g| divide_exact(g, f).expect("divisible")).collect();
        Ideal::new(self.ring.clone(), gens).expect("homogeneous")
    }

    /// `(I : J) = ∩_g (I : g)` over generators `g` of `J`.
    pub fn quotient(&self, other: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let q = self.quotient_by(g);
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// `(I : J^∞)`.
    pub fn saturate(&self, other: &Ideal) -> Ideal {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other);
            if next.same_as(&cur) {
                return cur;
            }
            cur = next;
        }
    }

    pub fn krull_dim(&self) -> i32 {
        self.initial_ideal(MonomialOrder::Grevlex).krull_dim()
    }

    pub fn codim(&self) -> i32 {
        let d = self.krull_dim();
        if d < 0 {
            self.n() as i32 + 1
        } else {
            self.n() as i32 - d
        }
    }

    pub fn is_m_primary(&self) -> bool {
        self.krull_dim() == 0
    }

    /// Hilbert series of `S / I`.
    pub fn hilbert_series(&self) -> HilbertSeries {
        let init = self.initial_ideal(MonomialOrder::Grevlex);
        HilbertSeries::of_components(self.n(), &[(0, &init)])
    }

    /// `dim_K (S/I)_d`.
    pub fn hilbert_function(&self, d: i32) -> i64 {
        self.hilbert_series().value(d)
    }

    /// Applies `x_i ↦ Σ_j a[i][j] x_j`.
    pub fn linear_change(&self, a: &[Vec<u32>]) -> Ideal {
        let images: Vec<Polynomial> = a
            .iter()
            .map(|row| {
                let terms = row
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| (Monomial::var(self.n(), j), c))
                    .collect();
                Polynomial::from_terms(self.n(), self.ring.field, terms)
            })
            .collect();
        let gens = self.gens.iter().map(|g| g.substitute(&images)).collect();
        Ideal::new(self.ring.clone(), gens).expect("homogeneous")
    }
}

/// Drops the first `k` variables, which must not occur.
pub(crate) fn drop_leading_vars(f: &Polynomial, k: usize) -> Polynomial {
    let m = f.nvars() - k;
    let terms = f
        .terms()
        .iter()
        .map(|&(t, c)| {
            let e: Vec<u32> = (k..f.nvars()).map(|i| t.exp(i)).collect();
            (Monomial::from_exps(&e), c)
        })
        .collect();
    Polynomial::from_terms(m, f.field(), terms)
}

/// Eliminates the first `k` variables of `ring` from the ideal of `gens`.
///
/// `weights` makes the input homogeneous when given; otherwise the sugar
/// strategy runs on whatever comes in. Returns the ring on the remaining
/// variables and a Gröbner basis of the elimination ideal.
pub fn elimination_ideal(
    ring: &RingContext,
    gens: &[Polynomial],
    k: usize,
    weights: Option<&[u32]>,
) -> Result<(RingContext, Vec<Polynomial>)> {
    if k >= ring.n() {
        return Err(Error::InvalidParameter("nothing left after elimination".into()));
    }
    let gb = buchberger_weighted(gens, MonomialOrder::Eliminate(k), weights, None);
    let kept: Vec<Polynomial> = gb
        .elements
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| (0..k).all(|i| m.exp(i) == 0)))
        .map(|g| drop_leading_vars(g, k))
        .collect();
    let small = RingContext::new(ring.names[k..].to_vec(), ring.field)?;
    Ok((small, kept))
}

/// Seeded uniformly random invertible `n x n` matrix.
pub fn random_invertible(field: crate::ring::FieldSpec, n: usize, seed: u64) -> Result<Vec<Vec<u32>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let a: Vec<Vec<u32>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..field.p())).collect()).collect();
        if linalg::rank(field, n, a.clone()) == n {
            return Ok(a);
        }
    }
    Err(Error::RetriesExhausted(16))
}

/// Generic initial ideal in grevlex after a seeded random coordinate change.
pub fn gin(ideal: &Ideal, seed: u64) -> Result<MonomialIdeal> {
    let a = random_invertible(ideal.ring.field, ideal.n(), seed)?;
    Ok(ideal.linear_change(&a).initial_ideal(MonomialOrder::Grevlex))
}

/// `gin` at two seeds; the flag tells whether they agree.
pub fn gin_checked(ideal: &Ideal, seed: u64) -> Result<(MonomialIdeal, bool)> {
    let a = gin(ideal, seed)?;
    let b = gin(ideal, seed.wrapping_add(0x9e37_79b9))?;
    let stable = a == b;
    Ok((a, stable))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r3() -> RingContext {
        RingContext::standard(3)
    }

    fn mon(e: &[u32]) -> Polynomial {
        r3().monomial(e)
    }

    #[test]
    fn normal_form_examples() {
        let r = r3();
        let g1 = mon(&[2, 0, 0]).sub(&mon(&[0, 2, 0]));
        let g2 = mon(&[0, 2, 0]).sub(&mon(&[0, 0, 2]));
        let gb = buchberger(&[g1.clone(), g2.clone()], MonomialOrder::Grevlex);
        assert_eq!(gb.elements.len(), 2);
        let nf = normal_form(&mon(&[2, 1, 0]), &gb).unwrap();
        assert_eq!(nf, mon(&[0, 1, 2]));
        let gx = buchberger(&[r.var(1)], MonomialOrder::Grevlex);
        assert_eq!(normal_form(&r.var(0), &gx).unwrap(), r.var(0));
        assert!(normal_form(&g1, &gb).unwrap().is_zero());
    }

    #[test]
    fn membership() {
        let r = r3();
        let i = Ideal::new(r.clone(), vec![mon(&[2, 0, 0]).add(&mon(&[0, 2, 0])), mon(&[1, 1, 0])]).unwrap();
        assert!(i.contains(&mon(&[0, 3, 0])));
        assert!(!i.contains(&r.one()));
        assert!(!i.contains(&r.var(0)));
    }

    #[test]
    fn intersections_and_quotients() {
        let r = r3();
        let a = Ideal::new(r.clone(), vec![r.var(0), r.var(1)]).unwrap();
        let b = Ideal::new(r.clone(), vec![r.var(1), r.var(2)]).unwrap();
        let c = Ideal::new(r.clone(), vec![r.var(1), mon(&[1, 0, 1])]).unwrap();
        assert!(a.intersect(&b).same_as(&c));
        let x = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let y = Ideal::new(r.clone(), vec![r.var(1)]).unwrap();
        assert!(x.intersect(&y).same_as(&Ideal::new(r.clone(), vec![mon(&[1, 1, 0])]).unwrap()));
        let i = Ideal::new(r.clone(), vec![mon(&[2, 0, 0]), mon(&[1, 1, 0])]).unwrap();
        assert!(i.quotient(&x).same_as(&a));
        assert!(i.quotient(&Ideal::unit(&r)).same_as(&i));
        let m2 = Ideal::maximal(&r).power(2);
        assert!(m2.saturate(&Ideal::maximal(&r)).same_as(&Ideal::unit(&r)));
    }

    #[test]
    fn elimination() {
        let r = RingContext::new(vec!["t".into(), "x".into(), "y".into()], Default::default()).unwrap();
        let (t, x, y) = (r.var(0), r.var(1), r.var(2));
        let (small, gb) = elimination_ideal(&r, &[t.sub(&x), t.sub(&y)], 1, None).unwrap();
        assert_eq!(gb, vec![small.var(0).sub(&small.var(1))]);
        let (_, gb) = elimination_ideal(&r, &[x.sub(&t.pow(2)), y.sub(&t.pow(3))], 1, None).unwrap();
        assert_eq!(gb.len(), 1);
        let want = small.var(0).pow(3).sub(&small.var(1).pow(2));
        assert_eq!(gb[0].monic(MonomialOrder::Grevlex), want.monic(MonomialOrder::Grevlex));
    }

    #[test]
    fn dimensions() {
        let r = RingContext::standard(4);
        assert_eq!(Ideal::maximal(&r).krull_dim(), 0);
        assert_eq!(Ideal::new(r.clone(), vec![r.var(0)]).unwrap().krull_dim(), 3);
        assert_eq!(Ideal::unit(&r).krull_dim(), -1);
    }

    #[test]
    fn gin_of_power() {
        let r = r3();
        let m2 = Ideal::maximal(&r).power(2);
        let (g, stable) = gin_checked(&m2, 7).unwrap();
        assert!(stable);
        assert_eq!(g, MonomialIdeal::power_of_max(3, 2));
    }
}
