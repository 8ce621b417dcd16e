//! Kernels, images, Tor, Ext, annihilators, socles and local cohomology
//! regularity for presented graded modules.

mod pieces;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use pieces::DegreePieces;

use crate::groebner::vector::{map_vectors, ModOrder};
use crate::groebner::{kernel, module_gb, Ideal};
use crate::resolution::{minimal_free_resolution, ModulePresentation, Resolution};
use crate::ring::{linalg, GradedFreeModule, ModuleMap, Monomial, MonomialOrder, Polynomial, RingContext};
use crate::{Error, Result};

/// Dimensions of the graded pieces of a vector space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedVectorSpaceSummary {
    pub dims: BTreeMap<i32, u64>,
    /// `None` is minus infinity.
    pub top: Option<i32>,
    /// `None` is plus infinity.
    pub bottom: Option<i32>,
}

impl GradedVectorSpaceSummary {
    pub fn from_dims(dims: BTreeMap<i32, u64>) -> Self {
        let dims: BTreeMap<i32, u64> = dims.into_iter().filter(|&(_, v)| v > 0).collect();
        let top = dims.keys().next_back().copied();
        let bottom = dims.keys().next().copied();
        GradedVectorSpaceSummary { dims, top, bottom }
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }
}

/// A homogeneous map of presented modules, given on the covers.
#[derive(Clone, Debug)]
pub struct PresentationMap {
    pub source: ModulePresentation,
    pub target: ModulePresentation,
    pub matrix: ModuleMap,
}

impl PresentationMap {
    pub fn new(source: ModulePresentation, target: ModulePresentation, matrix: ModuleMap) -> Result<Self> {
        if matrix.source != source.cover || matrix.target != target.cover {
            return Err(Error::ShapeMismatch("map does not match the covers".into()));
        }
        matrix.check_homogeneous()?;
        // relations must land in the relations of the target
        let comp = matrix.compose(&source.relations)?;
        if comp.ncols() > 0 && target.cover.rank() > 0 {
            let gb = module_gb(&target.relations, None);
            for v in map_vectors(&comp, &gb.order) {
                if !gb.reduce(v).is_empty() {
                    return Err(Error::IllDefinedMap);
                }
            }
        }
        Ok(PresentationMap { source, target, matrix })
    }
}

/// `(U + V) / V` presented on the columns of `u`.
pub fn subquotient(ring: &RingContext, u: &ModuleMap, v: &ModuleMap) -> Result<ModulePresentation> {
    if u.ncols() == 0 {
        return Ok(ModulePresentation::zero(ring));
    }
    let both = u.hstack(v)?;
    let k = kernel(&both);
    let first: Vec<usize> = (0..u.ncols()).collect();
    let proj = k.select_rows(&first);
    Ok(ModulePresentation::new(ring, proj)?.pruned())
}

/// Elements of the cover of `f.source` mapping into the target relations.
fn preimage_of_relations(f: &PresentationMap) -> Result<ModuleMap> {
    let both = f.matrix.hstack(&f.target.relations)?;
    let k = kernel(&both);
    let first: Vec<usize> = (0..f.matrix.ncols()).collect();
    Ok(k.select_rows(&first))
}

pub fn module_kernel(f: &PresentationMap) -> Result<ModulePresentation> {
    let u = preimage_of_relations(f)?;
    subquotient(&f.source.ring, &u, &f.source.relations)
}

pub fn module_image(f: &PresentationMap) -> Result<ModulePresentation> {
    subquotient(&f.target.ring, &f.matrix, &f.target.relations)
}

/// `U / V` for `V ⊆ U` given by generators in a common free module.
pub fn module_subquotient(ring: &RingContext, u: &ModuleMap, v: &ModuleMap) -> Result<ModulePresentation> {
    subquotient(ring, u, v)
}

fn same_ring(a: &ModulePresentation, b: &ModulePresentation) -> Result<()> {
    if a.n() != b.n() || a.field() != b.field() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `Tor_k(A, B)` as the homology of `F ⊗ B` for a minimal resolution `F`
/// of `A`.
pub fn tor_module(a: &ModulePresentation, b: &ModulePresentation, k: usize) -> Result<ModulePresentation> {
    same_ring(a, b)?;
    let (res, _) = minimal_free_resolution(a);
    tor_from_resolution(&res, a, b, k)
}

/// Same as [`tor_module`] with the resolution of `A` supplied.
pub fn tor_from_resolution(
    res: &Resolution,
    a: &ModulePresentation,
    b: &ModulePresentation,
    k: usize,
) -> Result<ModulePresentation> {
    let ring = &a.ring;
    let (n, field) = (a.n(), a.field());
    if k >= res.modules.len() || b.cover.rank() == 0 {
        return Ok(ModulePresentation::zero(ring));
    }
    let g0 = &b.cover;
    let psi = &b.relations;
    let fk = &res.modules[k];
    let cover = kron_modules(fk, g0);
    let u = if k == 0 {
        ModuleMap::identity(n, field, cover.clone())
    } else {
        let d = res.maps[k - 1].kron_identity(g0);
        let rel_prev = psi.identity_kron(&res.modules[k - 1]);
        let both = d.hstack(&rel_prev)?;
        let ker = kernel(&both);
        ker.select_rows(&(0..cover.rank()).collect::<Vec<_>>())
    };
    let mut v = psi.identity_kron(fk);
    if k < res.maps.len() {
        v = v.hstack(&res.maps[k].kron_identity(g0))?;
    }
    subquotient(ring, &u, &v)
}

/// Graded dimensions of `Tor_k(A, B)` for `B` of finite length, as the
/// homology of `F ⊗ B` computed one degree at a time. `None` when `B`
/// does not have finite length.
pub fn tor_dims_finite(res: &Resolution, b: &ModulePresentation, k: usize) -> Result<Option<BTreeMap<i32, u64>>> {
    let hs = b.hilbert_series();
    if hs.dimension() > 0 {
        return Ok(None);
    }
    let (Some(lo), Some(hi)) = (hs.min_degree(), hs.top_degree()) else {
        return Ok(Some(BTreeMap::new()));
    };
    if k >= res.modules.len() {
        return Ok(Some(BTreeMap::new()));
    }
    let pieces = DegreePieces::new(b);
    let bases: BTreeMap<i32, Vec<(Monomial, u32)>> = (lo..=hi).map(|e| (e, pieces.basis(e))).collect();
    let indices: BTreeMap<i32, std::collections::HashMap<(Monomial, u32), usize>> =
        bases.iter().map(|(&e, v)| (e, DegreePieces::index(v))).collect();
    let basis = |e: i32| bases.get(&e).map_or(&[][..], |v| v.as_slice());
    let field = b.field();

    // offsets of the blocks B_{d - a_g} inside (F_t ⊗ B)_d
    let blocks = |t: usize, d: i32| -> Vec<usize> {
        let mut off = vec![0];
        for &a in &res.modules[t].twists {
            off.push(off.last().unwrap() + basis(d - a).len());
        }
        off
    };
    // rank of phi_t ⊗ B in degree d
    let rank = |t: usize, d: i32| -> usize {
        if t == 0 || t >= res.modules.len() {
            return 0;
        }
        let map = &res.maps[t - 1];
        let (src, dst) = (&res.modules[t].twists, &res.modules[t - 1].twists);
        let off = blocks(t - 1, d);
        let width = *off.last().unwrap();
        if width == 0 {
            return 0;
        }
        let mut rows = Vec::new();
        for (g, &a) in src.iter().enumerate() {
            for &bt in basis(d - a) {
                let mut row = vec![0; width];
                for (h, &c) in dst.iter().enumerate() {
                    let Some(idx) = indices.get(&(d - c)) else { continue };
                    for (mu, coef) in map.entry(h, g).terms() {
                        let v = pieces.times(mu, bt, idx);
                        for (i, x) in v.into_iter().enumerate() {
                            if x != 0 {
                                let at = off[h] + i;
                                row[at] = field.add(row[at], field.mul(*coef, x));
                            }
                        }
                    }
                }
                rows.push(row);
            }
        }
        linalg::rank(field, width, rows)
    };
    let twists = &res.modules[k].twists;
    let (dlo, dhi) = (twists.iter().min().unwrap() + lo, twists.iter().max().unwrap() + hi);
    let mut dims = BTreeMap::new();
    for d in dlo..=dhi {
        let size = *blocks(k, d).last().unwrap();
        if size == 0 {
            continue;
        }
        let h = size - rank(k, d) - rank(k + 1, d);
        if h > 0 {
            dims.insert(d, h as u64);
        }
    }
    Ok(Some(dims))
}

fn kron_modules(f: &GradedFreeModule, g: &GradedFreeModule) -> GradedFreeModule {
    let mut t = Vec::with_capacity(f.rank() * g.rank());
    for a in &f.twists {
        for b in &g.twists {
            t.push(a + b);
        }
    }
    GradedFreeModule::new(t)
}

/// `Ext^k(M, S)` from the dual of a minimal resolution.
pub fn ext_module(m: &ModulePresentation, k: usize) -> Result<ModulePresentation> {
    let (res, _) = minimal_free_resolution(m);
    ext_from_resolution(&res, m, k)
}

pub fn ext_from_resolution(res: &Resolution, m: &ModulePresentation, k: usize) -> Result<ModulePresentation> {
    let ring = &m.ring;
    let (n, field) = (m.n(), m.field());
    if k >= res.modules.len() {
        return Ok(ModulePresentation::zero(ring));
    }
    let dual = res.modules[k].dual();
    let u = if k < res.maps.len() {
        kernel(&res.maps[k].transpose())
    } else {
        ModuleMap::identity(n, field, dual.clone())
    };
    let v = if k == 0 {
        ModuleMap::zero(n, field, GradedFreeModule::default(), dual.clone())
    } else {
        res.maps[k - 1].transpose()
    };
    subquotient(ring, &u, &v)
}

/// Lowest nonzero degree; `None` is plus infinity.
pub fn mindeg(m: &ModulePresentation) -> Option<i32> {
    m.hilbert_series().min_degree()
}

/// `reg H^j_m(M)`; `None` is minus infinity.
///
/// Modules of dimension at most zero are read off their Hilbert series;
/// everything else goes through `Ext^{n-j}(M, S)` and local duality.
pub fn reg_local_cohomology(m: &ModulePresentation, j: usize) -> Result<Option<i32>> {
    let n = m.n();
    if j > n {
        return Err(Error::InvalidParameter(format!("cohomological index {j} exceeds {n}")));
    }
    let hs = m.hilbert_series();
    let dim = hs.dimension();
    if dim < j as i32 {
        return Ok(None);
    }
    if dim == 0 {
        return Ok(hs.top_degree());
    }
    reg_local_cohomology_via_ext(m, j)
}

/// `-mindeg Ext^{n-j}(M, S) - n`, with no shortcut.
pub fn reg_local_cohomology_via_ext(m: &ModulePresentation, j: usize) -> Result<Option<i32>> {
    let n = m.n();
    if j > n {
        return Err(Error::InvalidParameter(format!("cohomological index {j} exceeds {n}")));
    }
    let e = ext_module(m, n - j)?;
    Ok(mindeg(&e).map(|d| -d - n as i32))
}

/// `{f : f M = 0}` as the intersection of `(relations : e_i)`.
pub fn annihilator(m: &ModulePresentation) -> Ideal {
    let ring = &m.ring;
    let (n, field) = (m.n(), m.field());
    let mut acc: Option<Ideal> = None;
    for (i, &a) in m.cover.twists.iter().enumerate() {
        let mut col = vec![Polynomial::zero(n, field); m.cover.rank()];
        col[i] = Polynomial::constant(n, field, 1);
        let ei = ModuleMap::from_columns(n, field, GradedFreeModule::new(vec![a]), m.cover.clone(), vec![col])
            .expect("shape");
        let both = ei.hstack(&m.relations).expect("same cover");
        let k = kernel(&both);
        let gens: Vec<Polynomial> = (0..k.ncols()).map(|j| k.entry(0, j).clone()).filter(|p| !p.is_zero()).collect();
        let ann = Ideal::new(ring.clone(), gens).expect("homogeneous");
        acc = Some(match acc {
            None => ann,
            Some(x) => x.intersect(&ann),
        });
        if acc.as_ref().is_some_and(|x| x.is_zero()) {
            break;
        }
    }
    acc.unwrap_or_else(|| Ideal::unit(ring)).minimalized()
}

/// Graded dimensions of a finite length module.
pub fn finite_summary(m: &ModulePresentation) -> Result<GradedVectorSpaceSummary> {
    let hs = m.hilbert_series();
    if hs.is_zero() {
        return Ok(GradedVectorSpaceSummary::default());
    }
    if hs.dimension() > 0 {
        return Err(Error::InfiniteLength);
    }
    let lo = hs.min_degree().unwrap();
    let hi = hs.top_degree().unwrap();
    Ok(GradedVectorSpaceSummary::from_dims((lo..=hi).map(|d| (d, hs.value(d) as u64)).collect()))
}

/// Graded dimensions up to a degree cap.
pub fn summary_upto(m: &ModulePresentation, cap: i32) -> GradedVectorSpaceSummary {
    let hs = m.hilbert_series();
    let Some(lo) = hs.min_degree() else {
        return GradedVectorSpaceSummary::default();
    };
    GradedVectorSpaceSummary::from_dims((lo..=cap).map(|d| (d, hs.value(d) as u64)).collect())
}

/// `{x in M : m x = 0}` by linear algebra in each degree.
pub fn socle_summary(m: &ModulePresentation) -> Result<GradedVectorSpaceSummary> {
    let sizes = finite_summary(m)?;
    let (Some(lo), Some(hi)) = (sizes.bottom, sizes.top) else {
        return Ok(GradedVectorSpaceSummary::default());
    };
    let n = m.n();
    let pieces = DegreePieces::new(m);
    let vars: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i)).collect();
    let mut dims = BTreeMap::new();
    for d in lo..=hi {
        let here = pieces.basis(d);
        let next = pieces.basis(d + 1);
        if next.is_empty() {
            dims.insert(d, here.len() as u64);
            continue;
        }
        let idx = DegreePieces::index(&next);
        let cols: Vec<Vec<u32>> = here
            .iter()
            .map(|&b| {
                let mut v = Vec::with_capacity(n * next.len());
                for x in &vars {
                    v.extend(pieces.times(x, b, &idx));
                }
                v
            })
            .collect();
        let r = linalg::rank(m.field(), n * next.len(), cols);
        dims.insert(d, (here.len() - r) as u64);
    }
    Ok(GradedVectorSpaceSummary::from_dims(dims))
}

/// Krull dimension of `Tor_1(A, B)`, `-1` when it vanishes.
pub fn dim_tor1(a: &ModulePresentation, b: &ModulePresentation) -> Result<i32> {
    Ok(tor_module(a, b, 1)?.dim())
}

/// Module order used for degree pieces; exposed for tests.
pub fn default_module_order() -> ModOrder {
    ModOrder::top(MonomialOrder::Grevlex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binom;

    fn max_ideal(n: usize) -> (RingContext, ModulePresentation) {
        let r = RingContext::standard(n);
        let k = ModulePresentation::cyclic(&Ideal::maximal(&r));
        (r, k)
    }

    #[test]
    fn tor_of_residue_fields() {
        let (_, k) = max_ideal(3);
        for i in 0..=3 {
            let t = tor_module(&k, &k, i).unwrap();
            let s = finite_summary(&t).unwrap();
            assert_eq!(s.dims.get(&(i as i32)).copied().unwrap_or(0) as i64, binom(3, i as i64));
            assert_eq!(s.total() as i64, binom(3, i as i64));
        }
    }

    #[test]
    fn degreewise_tor_matches_module_tor() {
        let r = RingContext::standard(3);
        let x = |i| r.var(i);
        let i = Ideal::new(r.clone(), vec![x(0).pow(2), x(0).mul(&x(1)), x(1).pow(3).add(&x(2).pow(3))]).unwrap();
        let j = Ideal::new(r.clone(), vec![x(0).add(&x(1)).pow(2), x(1).pow(2), x(2).pow(2)]).unwrap();
        let (a, b) = (ModulePresentation::cyclic(&i), ModulePresentation::cyclic(&j));
        let (res, _) = minimal_free_resolution(&a);
        for k in 0..=3 {
            let direct = tor_dims_finite(&res, &b, k).unwrap().unwrap();
            let t = tor_module(&a, &b, k).unwrap();
            assert_eq!(direct, finite_summary(&t).unwrap().dims, "k = {k}");
        }
        let (_, m) = max_ideal(3);
        assert!(tor_dims_finite(&res, &ModulePresentation::cyclic(&i), 1).unwrap().is_none());
        assert_eq!(tor_dims_finite(&res, &m, 0).unwrap().unwrap().len(), 1);
    }

    #[test]
    fn ext_of_residue_field() {
        let (_, k) = max_ideal(3);
        for i in 0..3 {
            assert!(ext_module(&k, i).unwrap().is_zero());
        }
        let e = ext_module(&k, 3).unwrap();
        assert_eq!(mindeg(&e), Some(-3));
        assert_eq!(finite_summary(&e).unwrap().total(), 1);
    }

    #[test]
    fn local_cohomology_of_free_and_field() {
        let (r, k) = max_ideal(3);
        assert_eq!(reg_local_cohomology(&k, 0).unwrap(), Some(0));
        assert_eq!(reg_local_cohomology_via_ext(&k, 0).unwrap(), Some(0));
        let s = ModulePresentation::free(&r, GradedFreeModule::ring());
        assert_eq!(reg_local_cohomology(&s, 3).unwrap(), Some(-3));
        assert_eq!(reg_local_cohomology(&s, 1).unwrap(), None);
    }

    #[test]
    fn annihilators() {
        let r = RingContext::standard(2);
        let i = Ideal::new(r.clone(), vec![r.monomial(&[2, 0]), r.monomial(&[1, 1])]).unwrap();
        let ann = annihilator(&ModulePresentation::cyclic(&i));
        assert!(ann.same_as(&i));
        assert!(annihilator(&ModulePresentation::zero(&r)).contains(&r.one()));
    }

    #[test]
    fn socle_of_power() {
        let r = RingContext::standard(3);
        let md = Ideal::maximal(&r).power(3);
        let s = socle_summary(&ModulePresentation::cyclic(&md)).unwrap();
        assert_eq!(s.bottom, Some(2));
        assert_eq!(s.top, Some(2));
        assert_eq!(s.total(), 6);
    }
}
