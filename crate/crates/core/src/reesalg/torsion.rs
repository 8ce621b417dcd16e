//! Torsion of symmetric powers of m-primary ideals.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::groebner::{HilbertSeries, Ideal};
use crate::homalg::{DegreePieces, GradedVectorSpaceSummary};
use crate::resolution::ModulePresentation;
use crate::ring::{linalg, Coeff, GradedFreeModule, ModuleMap, Monomial, Polynomial};
use crate::{Error, Result};

/// `A_t = ker(Sym_t(I) -> I^t)` in the x-grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionReport {
    pub t: u32,
    pub degrees: GradedVectorSpaceSummary,
    pub gen_degrees: Vec<i32>,
    /// Top degree; `None` when `A_t = 0`.
    pub reg: Option<i32>,
}

fn multisets(n: usize, k: u32) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, left: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i, n, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `Sym_t(I)` presented on monomials `T^α`, `|α| = t`, in the generators.
pub fn sym_power_presentation(i: &Ideal, t: u32) -> Result<(ModulePresentation, Vec<Polynomial>)> {
    let ring = &i.ring;
    let (n, field) = (ring.n(), ring.field);
    let pres = ModulePresentation::of_ideal(i);
    let gens = i.mingens();
    debug_assert_eq!(gens.len(), pres.cover.rank());
    let big_n = gens.len();
    let d = gens[0].degree().unwrap() as i32;
    let alphas = multisets(big_n, t);
    let index: HashMap<Vec<usize>, usize> = alphas.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
    let cover = GradedFreeModule::new(vec![t as i32 * d; alphas.len()]);
    let mut cols = Vec::new();
    let mut twists = Vec::new();
    let phi = &pres.relations;
    for c in 0..phi.ncols() {
        let col = phi.column(c);
        let deg = crate::ring::column_degree(col, &pres.cover);
        let Some(deg) = deg else { continue };
        for beta in multisets(big_n, t - 1) {
            let mut v = vec![Polynomial::zero(n, field); alphas.len()];
            for (k, p) in col.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let mut a = beta.clone();
                a.push(k);
                a.sort_unstable();
                let at = index[&a];
                v[at] = v[at].add(p);
            }
            if v.iter().any(|p| !p.is_zero()) {
                cols.push(v);
                twists.push(deg + (t as i32 - 1) * d);
            }
        }
    }
    let rel = ModuleMap::from_columns(n, field, GradedFreeModule::new(twists), cover, cols)?;
    let images = alphas
        .iter()
        .map(|a| a.iter().fold(Polynomial::constant(n, field, 1), |acc, &k| acc.mul(&gens[k])))
        .collect();
    Ok((ModulePresentation::new(ring, rel)?, images))
}

/// `A_t` for an m-primary ideal generated in a single degree.
pub fn sym_power_torsion(i: &Ideal, t: u32) -> Result<TorsionReport> {
    if t == 0 {
        return Err(Error::InvalidParameter("t must be positive".into()));
    }
    let i = i.minimalized();
    i.single_degree().ok_or(Error::MixedDegrees)?;
    if !i.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let (n, field) = (i.n(), i.ring.field);
    let (sym, images) = sym_power_presentation(&i, t)?;

    // dims of A_t from Hilbert series: Sym_t(I) minus I^t
    let it = i.power(t);
    let s_series = Ideal::zero(&i.ring).hilbert_series();
    let it_series = s_series.sub(&it.hilbert_series());
    let diff: HilbertSeries = sym.hilbert_series().sub(&it_series);
    let (Some(lo), Some(hi)) = (diff.min_degree(), diff.top_degree()) else {
        return Ok(TorsionReport { t, degrees: GradedVectorSpaceSummary::default(), gen_degrees: Vec::new(), reg: None });
    };

    // explicit elements degree by degree for the generator count
    let pieces = DegreePieces::new(&sym);
    let mut dims = BTreeMap::new();
    let mut gen_degrees = Vec::new();
    let mut prev: Option<(Vec<(Monomial, u32)>, Vec<Vec<Coeff>>)> = None;
    for deg in lo..=hi {
        let basis = pieces.basis(deg);
        let smon = Monomial::all_of_degree(n, deg as u32);
        let sidx: HashMap<Monomial, usize> = smon.iter().enumerate().map(|(k, &m)| (m, k)).collect();
        // rows of the multiplication map Sym_t(I)_deg -> S_deg
        let mut rows = vec![vec![0 as Coeff; basis.len()]; smon.len()];
        for (c, &(m, a)) in basis.iter().enumerate() {
            for (mm, cc) in images[a as usize].mul_term(&m, 1).terms() {
                rows[sidx[mm]][c] = *cc;
            }
        }
        let ker = linalg::kernel(field, basis.len(), &rows);
        let want = diff.value(deg);
        if ker.len() as i64 != want {
            return Err(Error::InvalidParameter(format!(
                "inconsistent torsion dimension in degree {deg}: {} vs {want}",
                ker.len()
            )));
        }
        let generated = match &prev {
            Some((pbasis, pker)) if !pker.is_empty() => {
                let idx = DegreePieces::index(&basis);
                let mut e = linalg::Echelon::new(field, basis.len());
                for v in pker {
                    for x in 0..n {
                        let xm = Monomial::var(n, x);
                        let mut w = vec![0 as Coeff; basis.len()];
                        for (k, &c) in v.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            let img = pieces.times(&xm, pbasis[k], &idx);
                            for (a, b) in w.iter_mut().zip(img) {
                                *a = field.add(*a, field.mul(c, b));
                            }
                        }
                        e.insert(w);
                    }
                }
                e.rank()
            }
            _ => 0,
        };
        for _ in generated..ker.len() {
            gen_degrees.push(deg);
        }
        if !ker.is_empty() {
            dims.insert(deg, ker.len() as u64);
        }
        prev = Some((basis, ker));
    }
    Ok(TorsionReport { t, degrees: GradedVectorSpaceSummary::from_dims(dims), gen_degrees, reg: Some(hi) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn complete_intersection_is_linear_type() {
        let r = RingContext::standard(3);
        let i = Ideal::new(r.clone(), (0..3).map(|k| r.var(k).pow(2)).collect()).unwrap();
        for t in 2..=3 {
            let a = sym_power_torsion(&i, t).unwrap();
            assert!(a.degrees.is_zero());
            assert_eq!(a.reg, None);
        }
    }

    #[test]
    fn refuses_non_m_primary() {
        let r = RingContext::standard(3);
        let i = Ideal::new(r.clone(), vec![r.var(0).pow(2), r.var(1).pow(2)]).unwrap();
        assert_eq!(sym_power_torsion(&i, 2), Err(Error::NotMPrimary));
    }

    #[test]
    fn multiset_count() {
        assert_eq!(multisets(4, 2).len(), 10);
        assert_eq!(multisets(3, 0), vec![Vec::<usize>::new()]);
    }
}
