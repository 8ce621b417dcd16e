//! Graded free modules and homogeneous maps between them.

use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use super::poly::Polynomial;
use crate::{Error, Result};

/// `⊕ S(-a_i)`, stored by the generator degrees `a_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedFreeModule {
    pub twists: Vec<i32>,
}

impl GradedFreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        GradedFreeModule { twists }
    }

    /// The ring itself.
    pub fn ring() -> Self {
        GradedFreeModule { twists: vec![0] }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    /// Generator degrees negated, as for `Hom(F, S)`.
    pub fn dual(&self) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|a| -a).collect() }
    }

    pub fn shifted(&self, d: i32) -> Self {
        GradedFreeModule { twists: self.twists.iter().map(|a| a + d).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut t = self.twists.clone();
        t.extend_from_slice(&other.twists);
        GradedFreeModule { twists: t }
    }
}

/// A matrix of polynomials, stored by columns; column `j` is the image of
/// the `j`-th generator of the source.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleMap {
    pub n: usize,
    pub field: FieldSpec,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    cols: Vec<Vec<Polynomial>>,
}

impl std::fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ModuleMap {:?} <- {:?}", self.target.twists, self.source.twists)?;
        for i in 0..self.nrows() {
            let row: Vec<String> = (0..self.ncols()).map(|j| format!("{:?}", self.cols[j][i])).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl ModuleMap {
    /// Builds a map from columns, checking shapes only.
    pub fn from_columns(
        n: usize,
        field: FieldSpec,
        source: GradedFreeModule,
        target: GradedFreeModule,
        cols: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        for c in &cols {
            if c.len() != target.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "column of length {} for a target of rank {}",
                    c.len(),
                    target.rank()
                )));
            }
            if c.iter().any(|p| p.nvars() != n || p.field() != field) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModuleMap { n, field, source, target, cols })
    }

    /// Like [`ModuleMap::from_columns`] but also checks homogeneity.
    pub fn homogeneous(
        n: usize,
        field: FieldSpec,
        source: GradedFreeModule,
        target: GradedFreeModule,
        cols: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let m = Self::from_columns(n, field, source, target, cols)?;
        m.check_homogeneous()?;
        Ok(m)
    }

    /// Columns whose degrees define the source twists.
    ///
    /// The twist of column `j` is the degree of its first nonzero entry plus
    /// the corresponding target twist; zero columns get twist `zero_twist`.
    pub fn with_inferred_source(
        n: usize,
        field: FieldSpec,
        target: GradedFreeModule,
        cols: Vec<Vec<Polynomial>>,
        zero_twist: i32,
    ) -> Result<Self> {
        let twists = cols
            .iter()
            .map(|c| column_degree(c, &target).unwrap_or(zero_twist))
            .collect();
        Self::homogeneous(n, field, GradedFreeModule::new(twists), target, cols)
    }

    pub fn zero(n: usize, field: FieldSpec, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let cols = vec![vec![Polynomial::zero(n, field); target.rank()]; source.rank()];
        ModuleMap { n, field, source, target, cols }
    }

    pub fn identity(n: usize, field: FieldSpec, m: GradedFreeModule) -> Self {
        let r = m.rank();
        let cols = (0..r)
            .map(|j| {
                (0..r)
                    .map(|i| Polynomial::constant(n, field, (i == j) as i64))
                    .collect()
            })
            .collect();
        ModuleMap { n, field, source: m.clone(), target: m, cols }
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<Vec<Polynomial>> {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = self.source.twists[j] - self.target.twists[i];
                if want < 0 || !p.is_homogeneous() || p.degree() != Some(want as u32) {
                    return Err(Error::NotHomogeneous { row: i, col: j });
                }
            }
        }
        Ok(())
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ModuleMap) -> Result<ModuleMap> {
        map_compose(self, f)
    }

    pub fn transpose(&self) -> ModuleMap {
        let cols = (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| self.cols[j][i].clone()).collect())
            .collect();
        ModuleMap {
            n: self.n,
            field: self.field,
            source: self.target.dual(),
            target: self.source.dual(),
            cols,
        }
    }

    /// Columns of `self` followed by columns of `other` (same target).
    pub fn hstack(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.target {
            return Err(Error::ShapeMismatch("hstack with different targets".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Ok(ModuleMap {
            n: self.n,
            field: self.field,
            source: self.source.direct_sum(&other.source),
            target: self.target.clone(),
            cols,
        })
    }

    pub fn select_columns(&self, keep: &[usize]) -> ModuleMap {
        ModuleMap {
            n: self.n,
            field: self.field,
            source: GradedFreeModule::new(keep.iter().map(|&j| self.source.twists[j]).collect()),
            target: self.target.clone(),
            cols: keep.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn select_rows(&self, keep: &[usize]) -> ModuleMap {
        ModuleMap {
            n: self.n,
            field: self.field,
            source: self.source.clone(),
            target: GradedFreeModule::new(keep.iter().map(|&i| self.target.twists[i]).collect()),
            cols: self.cols.iter().map(|c| keep.iter().map(|&i| c[i].clone()).collect()).collect(),
        }
    }

    /// `self ⊗ id_r`: each entry becomes an `r x r` scalar block, with the
    /// tensored free module `G` ordered as (row of self, index in G).
    pub fn kron_identity(&self, g: &GradedFreeModule) -> ModuleMap {
        let r = g.rank();
        let tw = |m: &GradedFreeModule| {
            let mut t = Vec::with_capacity(m.rank() * r);
            for a in &m.twists {
                for b in &g.twists {
                    t.push(a + b);
                }
            }
            GradedFreeModule::new(t)
        };
        let zero = Polynomial::zero(self.n, self.field);
        let mut cols = Vec::with_capacity(self.ncols() * r);
        for c in &self.cols {
            for b in 0..r {
                let mut col = vec![zero.clone(); self.nrows() * r];
                for (i, p) in c.iter().enumerate() {
                    col[i * r + b] = p.clone();
                }
                cols.push(col);
            }
        }
        ModuleMap { n: self.n, field: self.field, source: tw(&self.source), target: tw(&self.target), cols }
    }

    /// `id_F ⊗ self` for a free module `F` of rank `r`: block diagonal with
    /// ordering (index in F, row of self).
    pub fn identity_kron(&self, f: &GradedFreeModule) -> ModuleMap {
        let tw = |m: &GradedFreeModule| {
            let mut t = Vec::new();
            for a in &f.twists {
                for b in &m.twists {
                    t.push(a + b);
                }
            }
            GradedFreeModule::new(t)
        };
        let zero = Polynomial::zero(self.n, self.field);
        let (rows, r) = (self.nrows(), f.rank());
        let mut cols = Vec::new();
        for a in 0..r {
            for c in &self.cols {
                let mut col = vec![zero.clone(); rows * r];
                for (i, p) in c.iter().enumerate() {
                    col[a * rows + i] = p.clone();
                }
                cols.push(col);
            }
        }
        ModuleMap { n: self.n, field: self.field, source: tw(&self.source), target: tw(&self.target), cols }
    }
}

/// Degree of a homogeneous column in the grading of `target`.
pub fn column_degree(col: &[Polynomial], target: &GradedFreeModule) -> Option<i32> {
    col.iter()
        .enumerate()
        .find(|(_, p)| !p.is_zero())
        .map(|(i, p)| p.degree().unwrap() as i32 + target.twists[i])
}

/// `g ∘ f`.
pub fn map_compose(g: &ModuleMap, f: &ModuleMap) -> Result<ModuleMap> {
    if g.source.rank() != f.target.rank() || g.n != f.n || g.field != f.field {
        return Err(Error::ShapeMismatch(format!(
            "cannot compose a map from rank {} with a map into rank {}",
            g.source.rank(),
            f.target.rank()
        )));
    }
    if g.source != f.target {
        return Err(Error::ShapeMismatch("twists of the middle module differ".into()));
    }
    let zero = Polynomial::zero(g.n, g.field);
    let cols = f
        .cols
        .iter()
        .map(|fc| {
            (0..g.nrows())
                .map(|i| {
                    let mut acc = zero.clone();
                    for (k, p) in fc.iter().enumerate() {
                        if !p.is_zero() && !g.cols[k][i].is_zero() {
                            acc = acc.add(&g.cols[k][i].mul(p));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    Ok(ModuleMap { n: g.n, field: g.field, source: f.source.clone(), target: g.target.clone(), cols })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    /// Koszul differentials on three variables.
    fn koszul3() -> (ModuleMap, ModuleMap) {
        let r = RingContext::standard(3);
        let x: Vec<Polynomial> = (0..3).map(|i| r.var(i)).collect();
        let z = r.zero();
        let d1 = ModuleMap::homogeneous(
            3,
            r.field,
            GradedFreeModule::new(vec![1; 3]),
            GradedFreeModule::ring(),
            x.iter().map(|v| vec![v.clone()]).collect(),
        )
        .unwrap();
        // basis e12, e13, e23
        let d2 = ModuleMap::homogeneous(
            3,
            r.field,
            GradedFreeModule::new(vec![2; 3]),
            GradedFreeModule::new(vec![1; 3]),
            vec![
                vec![x[1].neg(), x[0].clone(), z.clone()],
                vec![x[2].neg(), z.clone(), x[0].clone()],
                vec![z.clone(), x[2].neg(), x[1].clone()],
            ],
        )
        .unwrap();
        (d1, d2)
    }

    #[test]
    fn koszul_square_zero() {
        let (d1, d2) = koszul3();
        let c = map_compose(&d1, &d2).unwrap();
        assert!(c.is_zero());
        c.check_homogeneous().unwrap();
    }

    #[test]
    fn identity_is_neutral() {
        let (d1, d2) = koszul3();
        let id = ModuleMap::identity(3, d2.field, d2.target.clone());
        assert_eq!(map_compose(&id, &d2).unwrap(), d2);
        assert!(map_compose(&d2, &d1).is_err());
    }

    #[test]
    fn rejects_inhomogeneous() {
        let r = RingContext::standard(2);
        let bad = ModuleMap::homogeneous(
            2,
            r.field,
            GradedFreeModule::new(vec![2]),
            GradedFreeModule::ring(),
            vec![vec![r.var(0)]],
        );
        assert!(matches!(bad, Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn transpose_twice() {
        let (_, d2) = koszul3();
        assert_eq!(d2.transpose().transpose(), d2);
        d2.transpose().check_homogeneous().unwrap();
    }
}
