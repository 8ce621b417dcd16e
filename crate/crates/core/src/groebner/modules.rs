//! Submodules of graded free modules.

use super::engine::{self, GbSpec};
use super::hilbert::HilbertSeries;
use super::monideal::MonomialIdeal;
use super::vector::{from_column, map_vectors, to_column, ModOrder, Term, Vector};
use crate::ring::{FieldSpec, GradedFreeModule, ModuleMap, MonomialOrder};

/// Gröbner basis of the image of `f` in its target, term over position.
#[derive(Clone, Debug)]
pub struct ModuleGb {
    pub order: ModOrder,
    pub target: GradedFreeModule,
    pub basis: Vec<Vector>,
    pub n: usize,
    pub field: FieldSpec,
}

impl ModuleGb {
    pub fn initial_ideals(&self) -> Vec<MonomialIdeal> {
        let mut parts = vec![Vec::new(); self.target.rank()];
        for v in &self.basis {
            parts[v[0].comp as usize].push(v[0].m);
        }
        parts.into_iter().map(|g| MonomialIdeal::new(self.n, g)).collect()
    }

    /// Hilbert series of `target / image`.
    pub fn quotient_series(&self) -> HilbertSeries {
        let init = self.initial_ideals();
        let parts: Vec<(i32, &MonomialIdeal)> =
            self.target.twists.iter().copied().zip(init.iter()).collect();
        HilbertSeries::of_components(self.n, &parts)
    }

    pub fn reduce(&self, v: Vector) -> Vector {
        let spec = GbSpec::new(self.field, &self.order, &self.target.twists);
        engine::normal_form(&spec, &self.basis, v)
    }
}

/// Module Gröbner basis of the columns of `f`.
pub fn module_gb(f: &ModuleMap, max_degree: Option<i32>) -> ModuleGb {
    let order = ModOrder::top(MonomialOrder::Grevlex);
    let mut spec = GbSpec::new(f.field, &order, &f.target.twists);
    spec.max_degree = max_degree;
    let out = engine::run(&spec, &[], &map_vectors(f, &order));
    ModuleGb { order, target: f.target.clone(), basis: out.basis, n: f.n, field: f.field }
}

/// Hilbert series of `coker f`.
pub fn module_hilbert_series(f: &ModuleMap) -> HilbertSeries {
    module_gb(f, None).quotient_series()
}

/// Indices of columns of `u` forming minimal generators of `(U + V) / V`.
pub fn mingens_mod(u: &ModuleMap, v: &ModuleMap, max_degree: Option<i32>) -> Vec<usize> {
    let order = ModOrder::top(MonomialOrder::Grevlex);
    let mut spec = GbSpec::new(u.field, &order, &u.target.twists);
    spec.max_degree = max_degree;
    let out = engine::run(&spec, &map_vectors(v, &order), &map_vectors(u, &order));
    let mut idx = out.mingens;
    idx.sort_unstable();
    idx
}

/// Minimal generators of `ker f`, as a map into the source of `f`.
pub fn kernel(f: &ModuleMap) -> ModuleMap {
    kernel_upto(f, None)
}

/// Kernel generators up to a degree bound.
pub fn kernel_upto(f: &ModuleMap, max_degree: Option<i32>) -> ModuleMap {
    let r = f.nrows();
    let order = ModOrder::blocks(MonomialOrder::Grevlex, r);
    let twists: Vec<i32> = f.target.twists.iter().chain(f.source.twists.iter()).copied().collect();
    let inputs: Vec<Vector> = f
        .columns()
        .iter()
        .enumerate()
        .map(|(j, col)| {
            let mut v = from_column(col, &order);
            v.push(Term { m: crate::ring::Monomial::one(f.n), comp: (r + j) as u32, c: 1 });
            v
        })
        .collect();
    let mut spec = GbSpec::new(f.field, &order, &twists);
    spec.split = Some(r);
    spec.max_degree = max_degree;
    let out = engine::run(&spec, &[], &inputs);
    let cols: Vec<_> = out
        .kernel
        .iter()
        .map(|v| {
            let shifted: Vec<Term> = v.iter().map(|t| Term { comp: t.comp - r as u32, ..*t }).collect();
            to_column(&shifted, f.ncols(), f.n, f.field)
        })
        .collect();
    ModuleMap::with_inferred_source(f.n, f.field, f.source.clone(), cols, 0).expect("homogeneous kernel")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{map_compose, Polynomial, RingContext};

    fn row(r: &RingContext, entries: Vec<Polynomial>) -> ModuleMap {
        let tw = entries.iter().map(|p| p.degree().unwrap() as i32).collect();
        ModuleMap::homogeneous(r.n(), r.field, GradedFreeModule::new(tw), GradedFreeModule::ring(), entries.into_iter().map(|p| vec![p]).collect()).unwrap()
    }

    #[test]
    fn koszul_syzygies() {
        let r = RingContext::standard(3);
        let f = row(&r, vec![r.var(0), r.var(1)]);
        let k = kernel(&f);
        assert_eq!(k.ncols(), 1);
        assert!(map_compose(&f, &k).unwrap().is_zero());
        let g = row(&r, vec![r.var(0), r.var(1), r.var(2)]);
        let k = kernel(&g);
        assert_eq!(k.ncols(), 3);
        assert_eq!(k.source.twists, vec![2, 2, 2]);
        assert!(map_compose(&g, &k).unwrap().is_zero());
    }

    #[test]
    fn injective_map() {
        let r = RingContext::standard(2);
        let f = row(&r, vec![r.var(0)]);
        assert_eq!(kernel(&f).ncols(), 0);
    }

    #[test]
    fn mingens_of_quotient() {
        let r = RingContext::standard(2);
        let u = row(&r, vec![r.var(0), r.monomial(&[1, 1]), r.var(1)]);
        let v = row(&r, vec![r.var(1)]);
        assert_eq!(mingens_mod(&u, &v, None), vec![0]);
    }
}
