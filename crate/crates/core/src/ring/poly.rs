//! Sparse polynomials over `F_p`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{Coeff, FieldSpec};
use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use crate::{Error, Result};

/// Variables, field and default order of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingContext {
    pub names: Vec<String>,
    pub field: FieldSpec,
    pub default_order: MonomialOrder,
}

impl RingContext {
    pub fn new(names: Vec<String>, field: FieldSpec) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidParameter("a ring needs at least one variable".into()));
        }
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { got: names.len(), max: MAX_VARS });
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(Error::InvalidParameter(format!("duplicate variable `{a}`")));
            }
        }
        Ok(RingContext { names, field, default_order: MonomialOrder::Grevlex })
    }

    /// `K[x1, ..., xn]` over the default prime.
    pub fn standard(n: usize) -> Self {
        Self::with_prime(n, crate::ring::DEFAULT_PRIME)
    }

    pub fn with_prime(n: usize, p: u32) -> Self {
        let names = (1..=n).map(|i| format!("x{i}")).collect();
        Self::new(names, FieldSpec::new(p).expect("prime")).expect("valid ring")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.n(), self.field, i)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.n(), self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.n(), self.field, 1)
    }

    pub fn monomial(&self, exps: &[u32]) -> Polynomial {
        Polynomial::term(self.field, Monomial::from_exps(exps), 1)
    }

    /// Same field, `extra` fresh variables prepended.
    pub fn with_leading_vars(&self, extra: &[String]) -> Result<RingContext> {
        let mut names = extra.to_vec();
        names.extend(self.names.iter().cloned());
        RingContext::new(names, self.field)
    }
}

/// A polynomial stored as terms sorted descending in grevlex.
///
/// The storage order is only a canonical key; callers that need another order
/// ask for it through [`Polynomial::leading`] or [`Polynomial::terms_in`].
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polynomial {
    n: usize,
    field: FieldSpec,
    terms: Vec<(Monomial, Coeff)>,
}

#[inline]
fn storage_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    MonomialOrder::Grevlex.cmp(b, a)
}

impl Polynomial {
    pub fn zero(n: usize, field: FieldSpec) -> Self {
        Polynomial { n, field, terms: Vec::new() }
    }

    pub fn constant(n: usize, field: FieldSpec, c: i64) -> Self {
        Self::term(field, Monomial::one(n), field.from_i64(c))
    }

    pub fn var(n: usize, field: FieldSpec, i: usize) -> Self {
        Self::term(field, Monomial::var(n, i), 1)
    }

    pub fn term(field: FieldSpec, m: Monomial, c: Coeff) -> Self {
        let c = c % field.p();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial { n: m.nvars(), field, terms }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(n: usize, field: FieldSpec, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        terms.sort_by(|a, b| storage_cmp(&a.0, &b.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), n);
            let c = c % field.p();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { n, field, terms: out }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order.
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn terms_in(&self, ord: MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        if ord != MonomialOrder::Grevlex {
            t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        t
    }

    pub fn leading(&self, ord: MonomialOrder) -> Option<(Monomial, Coeff)> {
        if ord == MonomialOrder::Grevlex {
            return self.terms.first().copied();
        }
        self.terms.iter().copied().max_by(|a, b| ord.cmp(&a.0, &b.0))
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|t| storage_cmp(&t.0, m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Highest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    fn check(&self, other: &Polynomial) {
        assert!(
            self.n == other.n && self.field == other.field,
            "polynomials from different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        self.merge(other, self.field.neg(1))
    }

    /// `self + c*other`.
    pub fn add_scaled(&self, other: &Polynomial, c: Coeff) -> Polynomial {
        self.check(other);
        self.merge(other, c % self.field.p())
    }

    fn merge(&self, other: &Polynomial, c: Coeff) -> Polynomial {
        let f = self.field;
        if c == 0 {
            return self.clone();
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match storage_cmp(&a[i].0, &b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((b[j].0, f.mul(c, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = f.add(a[i].1, f.mul(c, b[j].1));
                    if s != 0 {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(m, d)| (m, f.mul(c, d))));
        Polynomial { n: self.n, field: f, terms: out }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(1))
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(self.n, f);
        }
        let terms = self.terms.iter().map(|&(m, d)| (m, f.mul(c, d))).collect();
        Polynomial { n: self.n, field: f, terms }
    }

    pub fn mul_term(&self, m: &Monomial, c: Coeff) -> Polynomial {
        let f = self.field;
        let c = c % f.p();
        if c == 0 {
            return Polynomial::zero(self.n, f);
        }
        // multiplication by a monomial preserves grevlex order
        let terms = self.terms.iter().map(|&(t, d)| (t.mul(m), f.mul(c, d))).collect();
        Polynomial { n: self.n, field: f, terms }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.n, self.field);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms[0];
            return other.mul_term(&m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = other.terms[0];
            return self.mul_term(&m, c);
        }
        let f = self.field;
        let mut all = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(a, c) in &self.terms {
            for &(b, d) in &other.terms {
                all.push((a.mul(&b), f.mul(c, d)));
            }
        }
        Polynomial::from_terms(self.n, f, all)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::constant(self.n, self.field, 1);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Scales so that the leading coefficient in `ord` is 1.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c)),
        }
    }

    /// Substitutes `images[i]` for `x_i`; images may live in another ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.n, "one image per variable");
        let target_n = images.first().map(|p| p.n).unwrap_or(self.n);
        let mut out = Polynomial::zero(target_n, self.field);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|p| vec![Polynomial::constant(p.n, self.field, 1)])
            .collect();
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(target_n, self.field, c as i64);
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap().mul(&images[i]);
                    pw.push(next);
                }
                if e > 0 {
                    t = t.mul(&pw[e]);
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Reinterprets the polynomial in a ring with `m` variables, shifting
    /// variable `i` to `i + offset`.
    pub fn embed(&self, m: usize, offset: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|&(t, c)| {
                let mut e = vec![0u32; m];
                for i in 0..self.n {
                    e[i + offset] = t.exp(i);
                }
                (Monomial::from_exps(&e), c)
            })
            .collect();
        Polynomial::from_terms(m, self.field, terms)
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let v = self.field.to_signed(c);
            let (neg, a) = (v < 0, v.unsigned_abs());
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else if a == 1 {
                s.push_str(&m.display_with(names));
            } else {
                s.push_str(&format!("{}*{}", a, m.display_with(names)));
            }
        }
        s
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

/// Checked product.
pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if f.n != g.n || f.field != g.field {
        return Err(Error::RingMismatch);
    }
    Ok(f.mul(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let r = RingContext::standard(2);
        let (x, y) = (r.var(0), r.var(1));
        let p = poly_mul(&x.add(&y), &x.sub(&y)).unwrap();
        assert_eq!(p, r.monomial(&[2, 0]).sub(&r.monomial(&[0, 2])));
        assert!(poly_mul(&p, &r.zero()).unwrap().is_zero());
    }

    #[test]
    fn binomial_mod_three() {
        let r = RingContext::with_prime(2, 3);
        let s = r.var(0).add(&r.var(1));
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&Monomial::from_exps(&[1, 1])), 2);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.display_with(&r.names), "x1^2 - x1*x2 + x2^2");
    }

    #[test]
    fn ring_mismatch() {
        let a = RingContext::standard(2).var(0);
        let b = RingContext::standard(3).var(0);
        assert_eq!(poly_mul(&a, &b), Err(Error::RingMismatch));
    }

    #[test]
    fn leading_depends_on_order() {
        let r = RingContext::standard(3);
        let f = r.monomial(&[0, 3, 0]).add(&r.var(0));
        assert_eq!(f.leading(MonomialOrder::Grevlex).unwrap().0, Monomial::from_exps(&[0, 3, 0]));
        assert_eq!(f.leading(MonomialOrder::Lex).unwrap().0, Monomial::from_exps(&[1, 0, 0]));
    }

    #[test]
    fn substitution() {
        let r = RingContext::standard(2);
        let f = r.monomial(&[1, 1]);
        let s = f.substitute(&[r.var(0).add(&r.var(1)), r.var(0).sub(&r.var(1))]);
        assert_eq!(s, r.monomial(&[2, 0]).sub(&r.monomial(&[0, 2])));
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), 0u32..32003), 0..6).prop_map(|ts| {
            let terms = ts.into_iter().map(|(e, c)| (Monomial::from_exps(&e), c)).collect();
            Polynomial::from_terms(3, FieldSpec::default(), terms)
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
        }
    }
}
