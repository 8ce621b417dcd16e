//! Syzygies, minimal free resolutions and the invariants read from them.

mod betti;
mod frame;
mod presentation;

use serde::{Deserialize, Serialize};

pub use betti::BettiTable;
pub use frame::{minimize, schreyer_resolution};
pub use presentation::ModulePresentation;

use crate::groebner::{kernel, Ideal};
use crate::ring::{map_compose, GradedFreeModule, ModuleMap, Monomial, MonomialOrder, Polynomial};
use crate::{Error, Result};

/// `F_0 <- F_1 <- ... <- F_l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub modules: Vec<GradedFreeModule>,
    /// `maps[t]` is `phi_{t+1}: F_{t+1} -> F_t`.
    pub maps: Vec<ModuleMap>,
    pub minimal: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn betti(&self) -> BettiTable {
        BettiTable::from_modules(&self.modules)
    }

    /// Consecutive composites vanish.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| map_compose(&w[0], &w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// No differential has a nonzero constant entry.
    pub fn has_no_units(&self) -> bool {
        self.maps.iter().all(|m| {
            (0..m.ncols()).all(|j| (0..m.nrows()).all(|i| m.entry(i, j).constant_term() == 0))
        })
    }
}

/// Generators of `ker f`, as a map into the source of `f`.
///
/// Only graded reverse lexicographic order on the ring is supported; the
/// module order is fixed internally.
pub fn syzygies(f: &ModuleMap, ord: MonomialOrder) -> Result<ModuleMap> {
    if ord != MonomialOrder::Grevlex {
        return Err(Error::InvalidParameter("syzygies are computed in grevlex".into()));
    }
    f.check_homogeneous()?;
    Ok(kernel(f))
}

/// Minimal graded free resolution of a presented module.
pub fn minimal_free_resolution(m: &ModulePresentation) -> (Resolution, BettiTable) {
    let frame = schreyer_resolution(&m.relations);
    let (modules, maps) = minimize(&m.cover, frame);
    let modules = if modules.len() == 1 && modules[0].rank() == 0 { Vec::new() } else { modules };
    let res = Resolution { modules, maps, minimal: true };
    let t = res.betti();
    (res, t)
}

pub fn betti_entry(t: &BettiTable, i: usize, j: i32) -> u64 {
    t.betti(i, j)
}

/// `t_p`; `Ok(None)` stands for minus infinity.
pub fn t_p(t: &BettiTable, p: i64) -> Result<Option<i32>> {
    t.t_checked(p)
}

pub fn regularity(t: &BettiTable) -> Option<i32> {
    t.reg()
}

/// Projective dimension, depth, Krull dimension and codimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologicalInvariants {
    pub pd: Option<usize>,
    pub depth: Option<usize>,
    pub dim: i32,
    pub codim: i32,
}

pub fn homological_invariants(m: &ModulePresentation) -> HomologicalInvariants {
    let (res, _) = minimal_free_resolution(m);
    let n = m.n();
    let dim = m.dim();
    if res.modules.is_empty() {
        return HomologicalInvariants { pd: None, depth: None, dim: -1, codim: n as i32 + 1 };
    }
    let pd = res.length();
    HomologicalInvariants { pd: Some(pd), depth: Some(n - pd), dim, codim: n as i32 - dim }
}

/// Betti table of `S/I`.
pub fn betti_of_quotient(i: &Ideal) -> BettiTable {
    minimal_free_resolution(&ModulePresentation::cyclic(i)).1
}

/// Largest `s` with `t_i(I) = d + i` for `0 <= i <= s`, where `I` is
/// generated in the single degree `d`.
pub fn linear_steps(i: &Ideal) -> Result<i64> {
    let i = i.minimalized();
    let d = i.single_degree().ok_or(Error::MixedDegrees)? as i32;
    let t = betti_of_quotient(&i);
    Ok(linear_steps_from(&t, d))
}

/// Linear steps of `I` read from the table of `S/I`; `-1` when none.
pub fn linear_steps_from(t_quot: &BettiTable, d: i32) -> i64 {
    let mut s = -1i64;
    loop {
        let i = (s + 1) as usize;
        if t_quot.t(i + 1) == Some(d + i as i32) {
            s += 1;
        } else {
            return s;
        }
    }
}

/// `I_{>= k}` on its minimal generators.
pub fn truncate_at_degree(i: &Ideal, k: u32) -> Ideal {
    let n = i.n();
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in i.mingens() {
        let dg = g.degree().unwrap();
        if dg >= k {
            gens.push(g);
        } else {
            for m in Monomial::all_of_degree(n, k - dg) {
                gens.push(g.mul_term(&m, 1));
            }
        }
    }
    Ideal::new(i.ring.clone(), gens).expect("homogeneous").minimalized()
}

/// `I ∩ m^{t_s(I) - s}`.
pub fn truncate(i: &Ideal, s: usize) -> Result<Ideal> {
    let t = betti_of_quotient(i);
    let ts = t.t(s + 1).ok_or_else(|| Error::InvalidParameter(format!("step {s} of the resolution is empty")))?;
    let k = (ts - s as i32).max(0) as u32;
    Ok(truncate_at_degree(i, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binom;
    use crate::ring::RingContext;

    #[test]
    fn koszul_betti() {
        for n in 1..=4 {
            let r = RingContext::standard(n);
            let t = betti_of_quotient(&Ideal::maximal(&r));
            for i in 0..=n {
                assert_eq!(t.betti(i, i as i32) as i64, binom(n as i64, i as i64));
            }
            assert_eq!(t.reg(), Some(0));
            assert_eq!(t.pd(), Some(n));
        }
    }

    #[test]
    fn powers_of_max() {
        let r = RingContext::standard(3);
        for d in 1..=4 {
            let md = Ideal::maximal(&r).power(d);
            let t = betti_of_quotient(&md);
            assert_eq!(t.reg(), Some(d as i32 - 1));
            assert_eq!(linear_steps(&md).unwrap(), 2);
        }
    }

    #[test]
    fn resolution_is_minimal_complex() {
        let r = RingContext::standard(3);
        let gens = vec![
            r.monomial(&[2, 0, 0]).add(&r.monomial(&[0, 1, 1])),
            r.monomial(&[0, 2, 0]).sub(&r.monomial(&[1, 0, 1])),
            r.monomial(&[1, 1, 0]),
        ];
        let i = Ideal::new(r, gens).unwrap();
        let (res, t) = minimal_free_resolution(&ModulePresentation::cyclic(&i));
        assert!(res.is_complex());
        assert!(res.has_no_units());
        assert!(t.pd().unwrap() <= 3);
    }

    #[test]
    fn mixed_degrees_rejected() {
        let r = RingContext::standard(2);
        let i = Ideal::new(r.clone(), vec![r.var(0), r.monomial(&[0, 2])]).unwrap();
        assert_eq!(linear_steps(&i), Err(Error::MixedDegrees));
    }

    #[test]
    fn invariants_of_hyperplane() {
        let r = RingContext::standard(3);
        let i = Ideal::new(r.clone(), vec![r.var(0)]).unwrap();
        let h = homological_invariants(&ModulePresentation::cyclic(&i));
        assert_eq!(h, HomologicalInvariants { pd: Some(1), depth: Some(2), dim: 2, codim: 1 });
    }
}
