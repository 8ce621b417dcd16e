//! Dense linear algebra over `F_p`.

use super::field::{Coeff, FieldSpec};

/// Incrementally built row echelon form.
///
/// Every stored row has a 1 in its pivot column and zeros in the pivot
/// columns of earlier rows, so reducing a vector against the rows in
/// insertion order clears all pivots.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Vec<Coeff>>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivots: Vec::new(), is_pivot: vec![false; ncols] }
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.is_pivot[c]
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    /// Reduces `v` in place against the stored rows.
    pub fn reduce(&self, v: &mut [Coeff]) {
        let f = self.field;
        let p = f.p() as u64;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc];
            if c == 0 {
                continue;
            }
            let m = (p - c as u64) % p;
            for j in pc..self.ncols {
                let r = row[j];
                if r != 0 {
                    v[j] = ((v[j] as u64 + m * r as u64) % p) as Coeff;
                }
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        self.push_reduced(v)
    }

    /// Inserts a vector already reduced by [`Echelon::reduce`].
    pub fn push_reduced(&mut self, mut v: Vec<Coeff>) -> bool {
        let Some(pc) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = self.field.inv(v[pc]);
        for x in v[pc..].iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(v);
        self.pivots.push(pc);
        self.is_pivot[pc] = true;
        true
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&c| c == 0)
    }
}

/// Rank of a list of row vectors.
pub fn rank(field: FieldSpec, ncols: usize, rows: impl IntoIterator<Item = Vec<Coeff>>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Basis of `{x : A x = 0}` where `A` is given by its rows.
pub fn kernel(field: FieldSpec, ncols: usize, rows: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    // back substitution to reduced row echelon form
    let mut rref = e.rows.clone();
    let piv = e.pivots.clone();
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..rref.len()).collect();
        o.sort_by_key(|&i| piv[i]);
        o
    };
    for a in (0..order.len()).rev() {
        let i = order[a];
        let pc = piv[i];
        for &k in &order[..a] {
            let c = rref[k][pc];
            if c != 0 {
                let m = field.neg(c);
                let (src, dst) = if i < k {
                    let (l, r) = rref.split_at_mut(k);
                    (&l[i], &mut r[0])
                } else {
                    let (l, r) = rref.split_at_mut(i);
                    (&r[0], &mut l[k])
                };
                for j in pc..ncols {
                    if src[j] != 0 {
                        dst[j] = field.add(dst[j], field.mul(m, src[j]));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !e.is_pivot[c]) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (i, row) in rref.iter().enumerate() {
            if row[free] != 0 {
                v[piv[i]] = field.neg(row[free]);
            }
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_rank() {
        let f = FieldSpec::new(7).unwrap();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank(f, 3, rows.clone()), 2);
        let k = kernel(f, 3, &rows);
        assert_eq!(k.len(), 1);
        for r in &rows {
            let dot = (0..3).fold(0, |acc, j| f.add(acc, f.mul(r[j], k[0][j])));
            assert_eq!(dot, 0);
        }
    }

    proptest! {
        #[test]
        fn rank_nullity(rows in proptest::collection::vec(proptest::collection::vec(0u32..5, 6), 0..8)) {
            let f = FieldSpec::new(5).unwrap();
            let r = rank(f, 6, rows.clone());
            let k = kernel(f, 6, &rows);
            prop_assert_eq!(r + k.len(), 6);
            for v in &k {
                for row in &rows {
                    let dot = (0..6).fold(0, |acc, j| f.add(acc, f.mul(row[j], v[j])));
                    prop_assert_eq!(dot, 0);
                }
            }
            prop_assert_eq!(rank(f, 6, k.clone()), k.len());
        }
    }
}
