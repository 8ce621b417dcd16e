//! Betti numbers as Koszul homology, by dense linear algebra only.
//!
//! `M_e` is `F_e / R_e` with `R_e` spanned by monomial multiples of the
//! relations; `β_{i,j}` is the homology of `M ⊗ ∧K^n` in degree `j`.

use std::collections::{BTreeMap, HashMap};

use crate::resolution::{BettiTable, ModulePresentation};
use crate::ring::linalg::{self, Echelon};
use crate::ring::{column_degree, Coeff, Monomial};
use crate::{Error, Result};

/// One graded piece of `M`, with coordinates on the non-pivot columns.
struct Piece {
    /// `(generator, monomial)` for each coordinate of `F_e`.
    free: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    rel: Echelon,
    /// Positions in `free` that form a basis of `M_e`.
    basis: Vec<usize>,
}

impl Piece {
    fn new(m: &ModulePresentation, cols: &[(Vec<crate::ring::Polynomial>, i32)], e: i32) -> Piece {
        let n = m.n();
        let field = m.field();
        let mut free = Vec::new();
        for (g, &a) in m.cover.twists.iter().enumerate() {
            if e >= a {
                for mon in Monomial::all_of_degree(n, (e - a) as u32) {
                    free.push((g, mon));
                }
            }
        }
        let index: HashMap<(usize, Monomial), usize> = free.iter().enumerate().map(|(k, &x)| (x, k)).collect();
        let mut rel = Echelon::new(field, free.len());
        for (col, deg) in cols {
            if *deg > e || rel.is_full() {
                continue;
            }
            for mult in Monomial::all_of_degree(n, (e - deg) as u32) {
                let mut v = vec![0 as Coeff; free.len()];
                for (g, p) in col.iter().enumerate() {
                    for (mm, c) in p.terms() {
                        v[index[&(g, mm.mul(&mult))]] = *c;
                    }
                }
                rel.insert(v);
                if rel.is_full() {
                    break;
                }
            }
        }
        let basis: Vec<usize> = (0..free.len()).filter(|&k| !rel.is_pivot(k)).collect();
        Piece { free, index, rel, basis }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates in `M_e` of a vector of `F_e`.
    fn coords(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        self.rel.reduce(&mut v);
        self.basis.iter().map(|&k| v[k]).collect()
    }
}

/// Koszul homology Betti table with all `β_{i,j}` for `j <= degree_cap`.
pub fn oracle_betti(m: &ModulePresentation, degree_cap: i32) -> Result<BettiTable> {
    let n = m.n();
    let field = m.field();
    let Some(&lo) = m.cover.twists.iter().min() else {
        return Ok(BettiTable::default());
    };
    let hi = *m.cover.twists.iter().max().unwrap();
    if degree_cap < hi {
        return Err(Error::InvalidParameter(format!("degree cap {degree_cap} is below generator degree {hi}")));
    }
    let cols: Vec<(Vec<crate::ring::Polynomial>, i32)> = m
        .relations
        .columns()
        .iter()
        .filter_map(|c| column_degree(c, &m.cover).map(|d| (c.clone(), d)))
        .collect();
    let pieces: BTreeMap<i32, Piece> = (lo..=degree_cap).map(|e| (e, Piece::new(m, &cols, e))).collect();

    // mult[(e, v)][b]: coordinates of x_v times basis element b of M_e
    let mut mult: HashMap<(i32, usize), Vec<Vec<Coeff>>> = HashMap::new();
    for e in lo..degree_cap {
        let (src, dst) = (&pieces[&e], &pieces[&(e + 1)]);
        for v in 0..n {
            let xv = Monomial::var(n, v);
            let imgs = src
                .basis
                .iter()
                .map(|&k| {
                    let (g, mon) = src.free[k];
                    let mut w = vec![0 as Coeff; dst.free.len()];
                    w[dst.index[&(g, mon.mul(&xv))]] = 1;
                    dst.coords(w)
                })
                .collect();
            mult.insert((e, v), imgs);
        }
    }

    let subsets: Vec<Vec<u32>> = (0..=n).map(|i| subsets_of_size(n, i)).collect();
    let sub_index: Vec<HashMap<u32, usize>> =
        subsets.iter().map(|s| s.iter().enumerate().map(|(k, &x)| (x, k)).collect()).collect();
    let dim_at = |e: i32| pieces.get(&e).map_or(0, |p| p.dim());

    // rank of d_{i}: K_{i,j} = M_{j-i} ⊗ ∧^i -> K_{i-1,j} = M_{j-i+1} ⊗ ∧^{i-1}
    let rank_d = |i: usize, j: i32| -> usize {
        if i == 0 || i > n {
            return 0;
        }
        let e = j - i as i32;
        let (ds, dt) = (dim_at(e), dim_at(e + 1));
        if ds == 0 || dt == 0 {
            return 0;
        }
        let width = dt * subsets[i - 1].len();
        let mut rows = Vec::with_capacity(ds * subsets[i].len());
        for &set in &subsets[i] {
            for b in 0..ds {
                let mut row = vec![0 as Coeff; width];
                let mut sign_pos = 0;
                for v in 0..n {
                    if set & (1 << v) == 0 {
                        continue;
                    }
                    let smaller = sub_index[i - 1][&(set & !(1 << v))];
                    let img = &mult[&(e, v)][b];
                    let neg = sign_pos % 2 == 1;
                    for (k, &c) in img.iter().enumerate() {
                        if c != 0 {
                            let at = smaller * dt + k;
                            let c = if neg { field.neg(c) } else { c };
                            row[at] = field.add(row[at], c);
                        }
                    }
                    sign_pos += 1;
                }
                rows.push(row);
            }
        }
        linalg::rank(field, width, rows)
    };

    let mut entries = BTreeMap::new();
    for j in lo..=degree_cap {
        for i in 0..=n {
            let e = j - i as i32;
            if e < lo {
                continue;
            }
            let size = dim_at(e) * subsets[i].len();
            if size == 0 {
                continue;
            }
            let b = size - rank_d(i, j) - rank_d(i + 1, j);
            if b > 0 {
                entries.insert((i, j), b as u64);
            }
        }
    }
    Ok(BettiTable { entries })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|s| s.count_ones() as usize == k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{binom, Ideal};
    use crate::resolution::minimal_free_resolution;
    use crate::ring::RingContext;

    #[test]
    fn residue_field_is_koszul() {
        let r = RingContext::standard(3);
        let t = oracle_betti(&ModulePresentation::cyclic(&Ideal::maximal(&r)), 4).unwrap();
        for i in 0..=3 {
            assert_eq!(t.betti(i, i as i32), binom(3, i as i64) as u64);
        }
        assert_eq!(t.entries.len(), 4);
    }

    #[test]
    fn matches_resolution_on_a_small_ideal() {
        let r = RingContext::standard(3);
        let i = Ideal::new(r.clone(), vec![r.monomial(&[2, 0, 0]), r.monomial(&[1, 1, 0]), r.monomial(&[0, 2, 1])])
            .unwrap();
        let m = ModulePresentation::cyclic(&i);
        let (_, res) = minimal_free_resolution(&m);
        let cap = res.entries.keys().map(|&(_, j)| j).max().unwrap() + 1;
        assert_eq!(oracle_betti(&m, cap).unwrap(), res);
    }

    #[test]
    fn cap_below_generators() {
        let r = RingContext::standard(2);
        let m = ModulePresentation::of_ideal(&Ideal::new(r.clone(), vec![r.var(0).pow(3)]).unwrap());
        assert!(oracle_betti(&m, 2).is_err());
    }
}
