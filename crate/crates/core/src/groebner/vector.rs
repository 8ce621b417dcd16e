//! Sparse module elements and module orders used by the engine.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::ring::{Coeff, FieldSpec, ModuleMap, Monomial, MonomialOrder, Polynomial};

/// One term `c * m * e_comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub m: Monomial,
    pub comp: u32,
    pub c: Coeff,
}

/// Terms sorted strictly descending in some [`ModOrder`].
pub type Vector = Vec<Term>;

/// Flattened Schreyer data for one free module in a frame.
///
/// Column `a` stands for the element `total[a] * e_base[a]` of the bottom
/// module; ties are broken by `chain[a]`, smaller indices being larger.
#[derive(Debug, Clone)]
pub struct SchreyerData {
    pub total: Vec<Monomial>,
    pub base: Vec<u32>,
    pub chain: Vec<Vec<u32>>,
}

#[derive(Clone, Debug)]
pub enum ModKind {
    /// Term over position; smaller component index is larger.
    Top,
    /// Position over term; smaller component index is larger.
    Pot,
    /// Components `< split` dominate the rest, term over position inside.
    Blocks(usize),
    Schreyer(Arc<SchreyerData>),
}

#[derive(Clone, Debug)]
pub struct ModOrder {
    pub mono: MonomialOrder,
    pub kind: ModKind,
}

impl ModOrder {
    pub fn top(mono: MonomialOrder) -> Self {
        ModOrder { mono, kind: ModKind::Top }
    }

    pub fn pot(mono: MonomialOrder) -> Self {
        ModOrder { mono, kind: ModKind::Pot }
    }

    pub fn blocks(mono: MonomialOrder, split: usize) -> Self {
        ModOrder { mono, kind: ModKind::Blocks(split) }
    }

    #[inline]
    pub fn cmp(&self, am: &Monomial, ac: u32, bm: &Monomial, bc: u32) -> Ordering {
        match &self.kind {
            ModKind::Top => self.mono.cmp(am, bm).then_with(|| bc.cmp(&ac)),
            ModKind::Pot => bc.cmp(&ac).then_with(|| self.mono.cmp(am, bm)),
            ModKind::Blocks(split) => {
                let (ba, bb) = (ac as usize >= *split, bc as usize >= *split);
                bb.cmp(&ba)
                    .then_with(|| self.mono.cmp(am, bm))
                    .then_with(|| bc.cmp(&ac))
            }
            ModKind::Schreyer(s) => {
                if ac == bc {
                    return self.mono.cmp(am, bm);
                }
                let (a, b) = (ac as usize, bc as usize);
                self.mono
                    .cmp(&am.mul(&s.total[a]), &bm.mul(&s.total[b]))
                    .then_with(|| s.base[b].cmp(&s.base[a]))
                    .then_with(|| s.chain[b].cmp(&s.chain[a]))
            }
        }
    }

    #[inline]
    pub fn cmp_terms(&self, a: &Term, b: &Term) -> Ordering {
        self.cmp(&a.m, a.comp, &b.m, b.comp)
    }
}

pub fn sort_vector(v: &mut Vector, ord: &ModOrder) {
    v.sort_by(|a, b| ord.cmp_terms(b, a));
}

/// Builds a sorted vector from arbitrary terms, combining duplicates.
pub fn normalize(mut v: Vector, ord: &ModOrder, field: FieldSpec) -> Vector {
    sort_vector(&mut v, ord);
    let mut out: Vector = Vec::with_capacity(v.len());
    for t in v {
        match out.last_mut() {
            Some(l) if l.comp == t.comp && l.m == t.m => l.c = field.add(l.c, t.c),
            _ => out.push(t),
        }
    }
    out.retain(|t| t.c != 0);
    out
}

/// `a - c * m * b`, where `a` and `b` are sorted.
pub fn sub_mul(a: &[Term], c: Coeff, m: &Monomial, b: &[Term], ord: &ModOrder, field: FieldSpec) -> Vector {
    let nc = field.neg(c);
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bj = b.first().map(|t| t.m.mul(m));
    while i < a.len() {
        let Some(bm) = bj else { break };
        let tb = &b[j];
        match ord.cmp(&a[i].m, a[i].comp, &bm, tb.comp) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { m: bm, comp: tb.comp, c: field.mul(nc, tb.c) });
                j += 1;
                bj = b.get(j).map(|t| t.m.mul(m));
            }
            Ordering::Equal => {
                let s = field.add(a[i].c, field.mul(nc, tb.c));
                if s != 0 {
                    out.push(Term { m: bm, comp: tb.comp, c: s });
                }
                i += 1;
                j += 1;
                bj = b.get(j).map(|t| t.m.mul(m));
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while j < b.len() {
        let tb = &b[j];
        out.push(Term { m: tb.m.mul(m), comp: tb.comp, c: field.mul(nc, tb.c) });
        j += 1;
    }
    out
}

/// `a + b` for sorted vectors.
pub fn add(a: &[Term], b: &[Term], ord: &ModOrder, field: FieldSpec) -> Vector {
    let one = Monomial::one(a.first().or(b.first()).map(|t| t.m.nvars()).unwrap_or(0));
    sub_mul(a, field.neg(1), &one, b, ord, field)
}

pub fn scale(v: &[Term], c: Coeff, field: FieldSpec) -> Vector {
    if c == 0 {
        return Vec::new();
    }
    v.iter().map(|t| Term { c: field.mul(t.c, c), ..*t }).collect()
}

pub fn make_monic(v: &mut Vector, field: FieldSpec) {
    if let Some(t) = v.first() {
        if t.c != 1 {
            let inv = field.inv(t.c);
            for x in v.iter_mut() {
                x.c = field.mul(x.c, inv);
            }
        }
    }
}

/// Column of polynomials to a sorted vector.
pub fn from_column(col: &[Polynomial], ord: &ModOrder) -> Vector {
    let mut v = Vec::new();
    for (i, p) in col.iter().enumerate() {
        for &(m, c) in p.terms() {
            v.push(Term { m, comp: i as u32, c });
        }
    }
    sort_vector(&mut v, ord);
    v
}

/// Sorted vector to a column of `rank` polynomials.
pub fn to_column(v: &[Term], rank: usize, n: usize, field: FieldSpec) -> Vec<Polynomial> {
    let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for t in v {
        parts[t.comp as usize].push((t.m, t.c));
    }
    parts.into_iter().map(|ts| Polynomial::from_terms(n, field, ts)).collect()
}

/// Columns of a map as vectors.
pub fn map_vectors(f: &ModuleMap, ord: &ModOrder) -> Vec<Vector> {
    f.columns().iter().map(|c| from_column(c, ord)).collect()
}

/// Polynomial as a vector in a rank one module.
pub fn from_poly(p: &Polynomial, ord: &ModOrder) -> Vector {
    let mut v: Vector = p.terms().iter().map(|&(m, c)| Term { m, comp: 0, c }).collect();
    if !matches!(ord.mono, MonomialOrder::Grevlex) {
        sort_vector(&mut v, ord);
    }
    v
}

pub fn to_poly(v: &[Term], n: usize, field: FieldSpec) -> Polynomial {
    Polynomial::from_terms(n, field, v.iter().map(|t| (t.m, t.c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn orders_on_components() {
        let top = ModOrder::top(MonomialOrder::Grevlex);
        let pot = ModOrder::pot(MonomialOrder::Grevlex);
        // x^2 e_1 vs x e_0
        assert_eq!(top.cmp(&m(&[2, 0]), 1, &m(&[1, 0]), 0), Ordering::Greater);
        assert_eq!(pot.cmp(&m(&[2, 0]), 1, &m(&[1, 0]), 0), Ordering::Less);
        let bl = ModOrder::blocks(MonomialOrder::Grevlex, 1);
        assert_eq!(bl.cmp(&m(&[0, 0]), 0, &m(&[5, 0]), 1), Ordering::Greater);
    }

    #[test]
    fn merge_cancels() {
        let f = FieldSpec::default();
        let ord = ModOrder::top(MonomialOrder::Grevlex);
        let a = vec![Term { m: m(&[1, 1]), comp: 0, c: 1 }, Term { m: m(&[0, 2]), comp: 0, c: 3 }];
        let b = vec![Term { m: m(&[0, 1]), comp: 0, c: 1 }];
        let r = sub_mul(&a, 1, &m(&[1, 0]), &b, &ord, f);
        assert_eq!(r, vec![Term { m: m(&[0, 2]), comp: 0, c: 3 }]);
    }
}
