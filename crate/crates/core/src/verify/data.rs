//! Resolutions and cohomological data computed once per module.

use crate::groebner::Ideal;
use std::collections::BTreeMap;

use crate::homalg::{ext_from_resolution, mindeg, tor_dims_finite, tor_from_resolution};
use crate::resolution::{minimal_free_resolution, BettiTable, ModulePresentation, Resolution};
use crate::Result;

/// A module with its minimal resolution and `reg H^j_m` for every `j`.
#[derive(Clone, Debug)]
pub struct ModuleData {
    pub module: ModulePresentation,
    pub res: Resolution,
    pub betti: BettiTable,
    /// Krull dimension, `-1` for zero.
    pub dim: i64,
    /// `None` for the zero module.
    pub depth: Option<i64>,
    hcoh: Vec<Option<i64>>,
}

impl ModuleData {
    pub fn new(m: &ModulePresentation) -> Result<Self> {
        let n = m.n();
        let (res, betti) = minimal_free_resolution(m);
        let hs = m.hilbert_series();
        let dim = hs.dimension() as i64;
        let depth = betti.pd().map(|pd| n as i64 - pd as i64);
        let mut hcoh = vec![None; n + 1];
        if let Some(depth) = depth {
            for (j, slot) in hcoh.iter_mut().enumerate() {
                let j = j as i64;
                if j < depth || j > dim {
                    continue;
                }
                *slot = if dim == 0 {
                    hs.top_degree().map(i64::from)
                } else {
                    let e = ext_from_resolution(&res, m, n - j as usize)?;
                    mindeg(&e).map(|d| -(d as i64) - n as i64)
                };
            }
        }
        Ok(ModuleData { module: m.clone(), res, betti, dim, depth, hcoh })
    }

    /// `S / I`.
    pub fn quotient(i: &Ideal) -> Result<Self> {
        Self::new(&ModulePresentation::cyclic(i))
    }

    pub fn n(&self) -> usize {
        self.module.n()
    }

    pub fn codim(&self) -> i64 {
        if self.dim < 0 {
            self.n() as i64 + 1
        } else {
            self.n() as i64 - self.dim
        }
    }

    /// `t_p`; minus infinity for negative `p` or past the resolution.
    pub fn t(&self, p: i64) -> Option<i64> {
        if p < 0 {
            return None;
        }
        self.betti.t(p as usize).map(i64::from)
    }

    pub fn reg(&self) -> Option<i64> {
        self.betti.reg().map(i64::from)
    }

    /// `reg H^j_m`; minus infinity outside `0..=n`.
    pub fn reg_h(&self, j: i64) -> Option<i64> {
        if j < 0 || j as usize >= self.hcoh.len() {
            return None;
        }
        self.hcoh[j as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.depth.is_none()
    }

    pub fn is_cohen_macaulay(&self) -> bool {
        self.depth == Some(self.dim)
    }

    /// Cohen-Macaulay with a one-dimensional last syzygy module.
    pub fn is_gorenstein(&self) -> bool {
        self.is_cohen_macaulay() && self.betti.pd().is_some_and(|pd| self.betti.total(pd) == 1)
    }
}

/// Dimension, regularity and local cohomology of a module, without its
/// resolution when it has finite length.
#[derive(Clone, Debug)]
pub struct ModuleSummary {
    pub dim: i64,
    pub depth: Option<i64>,
    reg: Option<i64>,
    hcoh: Vec<Option<i64>>,
}

impl ModuleSummary {
    pub fn new(m: &ModulePresentation) -> Result<Self> {
        let hs = m.hilbert_series();
        if hs.dimension() > 0 {
            return Ok(ModuleData::new(m)?.into());
        }
        let dims = (hs.min_degree().unwrap_or(0)..=hs.top_degree().unwrap_or(-1))
            .map(|d| (d, hs.value(d) as u64))
            .filter(|&(_, v)| v > 0)
            .collect();
        Ok(Self::finite(m.n(), &dims))
    }

    fn finite(n: usize, dims: &BTreeMap<i32, u64>) -> Self {
        let top = dims.keys().next_back().map(|&d| i64::from(d));
        let mut hcoh = vec![None; n + 1];
        hcoh[0] = top;
        let (dim, depth) = if top.is_some() { (0, Some(0)) } else { (-1, None) };
        ModuleSummary { dim, depth, reg: top, hcoh }
    }

    pub fn reg(&self) -> Option<i64> {
        self.reg
    }

    pub fn reg_h(&self, j: i64) -> Option<i64> {
        if j < 0 || j as usize >= self.hcoh.len() {
            return None;
        }
        self.hcoh[j as usize]
    }
}

impl From<ModuleData> for ModuleSummary {
    fn from(m: ModuleData) -> Self {
        ModuleSummary { dim: m.dim, depth: m.depth, reg: m.reg(), hcoh: m.hcoh }
    }
}

/// Two modules, `A ⊗ B`, and `Tor_k(A, B)` for `1 <= k <= kmax`.
#[derive(Clone, Debug)]
pub struct PairData {
    pub a: ModuleData,
    pub b: ModuleData,
    /// `dim Tor_1(A, B)`, `-1` when it vanishes.
    pub delta: i64,
    pub tor0: ModuleData,
    /// `tor[k]` is `Tor_k`; `tor[0]` summarizes `tor0`.
    pub tor: Vec<ModuleSummary>,
}

impl PairData {
    pub fn new(a: ModuleData, b: ModuleData, kmax: usize) -> Result<Self> {
        let tor0 = ModuleData::new(&tor_from_resolution(&a.res, &a.module, &b.module, 0)?)?;
        let mut tor = vec![ModuleSummary::from(tor0.clone())];
        let mut pair = PairData { a, b, delta: -1, tor0, tor: Vec::new() };
        for k in 1..=kmax.max(1) {
            let t = pair.compute_tor(k)?;
            tor.push(t);
        }
        pair.delta = tor[1].dim;
        pair.tor = tor;
        Ok(pair)
    }

    /// By linear algebra in each degree when either side has finite
    /// length, by module homology otherwise.
    fn compute_tor(&self, k: usize) -> Result<ModuleSummary> {
        let n = self.n();
        if self.b.dim <= 0 {
            if let Some(d) = tor_dims_finite(&self.a.res, &self.b.module, k)? {
                return Ok(ModuleSummary::finite(n, &d));
            }
        }
        if self.a.dim <= 0 {
            if let Some(d) = tor_dims_finite(&self.b.res, &self.a.module, k)? {
                return Ok(ModuleSummary::finite(n, &d));
            }
        }
        ModuleSummary::new(&tor_from_resolution(&self.a.res, &self.a.module, &self.b.module, k)?)
    }

    pub fn from_modules(a: &ModulePresentation, b: &ModulePresentation, kmax: usize) -> Result<Self> {
        Self::new(ModuleData::new(a)?, ModuleData::new(b)?, kmax)
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn kmax(&self) -> usize {
        self.tor.len() - 1
    }

    /// `Tor_k(A, B)`, computed on demand past `kmax`.
    pub fn tor(&self, k: usize) -> Result<std::borrow::Cow<'_, ModuleSummary>> {
        if let Some(t) = self.tor.get(k) {
            return Ok(std::borrow::Cow::Borrowed(t));
        }
        Ok(std::borrow::Cow::Owned(self.compute_tor(k)?))
    }
}

/// `reg S/I`, read off the Hilbert series when `S/I` has finite length.
pub fn quotient_reg(i: &Ideal) -> Result<Option<i64>> {
    let hs = i.hilbert_series();
    if hs.dimension() == 0 {
        return Ok(hs.top_degree().map(i64::from));
    }
    let (_, betti) = minimal_free_resolution(&ModulePresentation::cyclic(i));
    Ok(betti.reg().map(i64::from))
}
