//! Finitely presented graded modules.

use serde::{Deserialize, Serialize};

use crate::groebner::{kernel, mingens_mod, module_gb, HilbertSeries, Ideal};
use crate::ring::{FieldSpec, GradedFreeModule, ModuleMap, Polynomial, RingContext};
use crate::Result;

/// `coker(relations: F_1 -> cover)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePresentation {
    pub ring: RingContext,
    pub cover: GradedFreeModule,
    pub relations: ModuleMap,
}

impl ModulePresentation {
    pub fn new(ring: &RingContext, relations: ModuleMap) -> Result<Self> {
        if relations.n != ring.n() || relations.field != ring.field {
            return Err(crate::Error::RingMismatch);
        }
        relations.check_homogeneous()?;
        Ok(ModulePresentation { ring: ring.clone(), cover: relations.target.clone(), relations })
    }

    /// The free module `F` itself.
    pub fn free(ring: &RingContext, cover: GradedFreeModule) -> Self {
        let relations = ModuleMap::zero(ring.n(), ring.field, GradedFreeModule::default(), cover.clone());
        ModulePresentation { ring: ring.clone(), cover, relations }
    }

    pub fn zero(ring: &RingContext) -> Self {
        Self::free(ring, GradedFreeModule::default())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.ring.n()
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.ring.field
    }

    /// `S / I`.
    pub fn cyclic(ideal: &Ideal) -> Self {
        let (n, field) = (ideal.n(), ideal.ring.field);
        let gens = ideal.gens();
        let tw = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        let cols = gens.iter().map(|g| vec![g.clone()]).collect();
        let relations = ModuleMap::from_columns(n, field, GradedFreeModule::new(tw), GradedFreeModule::ring(), cols)
            .expect("shape");
        ModulePresentation { ring: ideal.ring.clone(), cover: GradedFreeModule::ring(), relations }
    }

    /// The ideal `I` as a module, presented on its minimal generators.
    pub fn of_ideal(ideal: &Ideal) -> Self {
        let (n, field) = (ideal.n(), ideal.ring.field);
        let gens = ideal.mingens();
        let cover = GradedFreeModule::new(gens.iter().map(|g| g.degree().unwrap() as i32).collect());
        let row = ModuleMap::from_columns(
            n,
            field,
            cover.clone(),
            GradedFreeModule::ring(),
            gens.into_iter().map(|g| vec![g]).collect(),
        )
        .expect("shape");
        let relations = kernel(&row);
        ModulePresentation { ring: ideal.ring.clone(), cover, relations }
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        if self.cover.rank() == 0 {
            return HilbertSeries::zero(self.n());
        }
        module_gb(&self.relations, None).quotient_series()
    }

    pub fn hilbert_function(&self, d: i32) -> i64 {
        self.hilbert_series().value(d)
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert_series().is_zero()
    }

    /// Krull dimension, `-1` for the zero module.
    pub fn dim(&self) -> i32 {
        self.hilbert_series().dimension()
    }

    /// Drops redundant generators and relations.
    pub fn pruned(&self) -> ModulePresentation {
        let (cover, rel) = prune(&self.cover, &self.relations);
        ModulePresentation { ring: self.ring.clone(), cover, relations: rel }
    }
}

/// Minimal presentation of `coker rel`.
fn prune(cover: &GradedFreeModule, rel: &ModuleMap) -> (GradedFreeModule, ModuleMap) {
    let (n, field) = (rel.n, rel.field);
    let mut cols: Vec<Vec<Polynomial>> = rel.columns().to_vec();
    let mut alive_rows: Vec<bool> = vec![true; cover.rank()];
    // pivot out unit entries: each one kills a generator and a relation
    loop {
        let mut hit = None;
        'search: for (j, c) in cols.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                if alive_rows[i] && !p.is_zero() && p.degree() == Some(0) {
                    hit = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((r, c)) = hit else { break };
        let pivot = cols.remove(c);
        let u_inv = field.inv(pivot[r].constant_term());
        for col in cols.iter_mut() {
            if col[r].is_zero() {
                continue;
            }
            let b = col[r].scale(u_inv);
            for (i, p) in pivot.iter().enumerate() {
                if !p.is_zero() {
                    col[i] = col[i].sub(&b.mul(p));
                }
            }
        }
        alive_rows[r] = false;
    }
    let keep: Vec<usize> = (0..cover.rank()).filter(|&i| alive_rows[i]).collect();
    let new_cover = GradedFreeModule::new(keep.iter().map(|&i| cover.twists[i]).collect());
    let cols: Vec<Vec<Polynomial>> = cols
        .into_iter()
        .map(|c| keep.iter().map(|&i| c[i].clone()).collect())
        .filter(|c: &Vec<Polynomial>| c.iter().any(|p| !p.is_zero()))
        .collect();
    let map = ModuleMap::with_inferred_source(n, field, new_cover.clone(), cols, 0).expect("homogeneous");
    let zero = ModuleMap::zero(n, field, GradedFreeModule::default(), new_cover.clone());
    let idx = mingens_mod(&map, &zero, None);
    (new_cover, map.select_columns(&idx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    #[test]
    fn cyclic_series() {
        let r = RingContext::standard(2);
        let i = Ideal::maximal(&r);
        let m = ModulePresentation::cyclic(&i);
        assert_eq!(m.hilbert_function(0), 1);
        assert_eq!(m.hilbert_function(1), 0);
        assert_eq!(m.dim(), 0);
    }

    #[test]
    fn prune_removes_units() {
        let r = RingContext::standard(2);
        // S^2 / (e0 - x e1): isomorphic to S
        let rel = ModuleMap::homogeneous(
            2,
            r.field,
            GradedFreeModule::new(vec![1]),
            GradedFreeModule::new(vec![1, 0]),
            vec![vec![r.one(), r.var(0).neg()]],
        )
        .unwrap();
        let m = ModulePresentation::new(&r, rel).unwrap().pruned();
        assert_eq!(m.cover.twists, vec![0]);
        assert_eq!(m.relations.ncols(), 0);
    }
}
