//! Schreyer frames and their minimization.
//!
//! Level 1 is a Gröbner basis of the relations in term-over-position order.
//! Each later level consists of the syzygies of the previous one read off
//! the S-pairs, which form a Gröbner basis for the induced Schreyer order.
//! Elements are sorted inside each lead component by decreasing exponent of
//! `x_k` at level `k`, which keeps the frame length at most `n`.

use std::sync::Arc;

use crate::groebner::engine::{self, GbSpec};
use crate::groebner::vector::{map_vectors, normalize, sub_mul, to_column, ModKind, ModOrder, SchreyerData, Term, Vector};
use crate::ring::{FieldSpec, GradedFreeModule, ModuleMap, Monomial, MonomialOrder, Polynomial};

/// One level of a frame: elements of `F_{k-1}` indexing the basis of `F_k`.
struct Level {
    elems: Vec<Vector>,
    twists: Vec<i32>,
    data: Arc<SchreyerData>,
}

fn schreyer_order(data: &Arc<SchreyerData>) -> ModOrder {
    ModOrder { mono: MonomialOrder::Grevlex, kind: ModKind::Schreyer(data.clone()) }
}

/// Reorders `elems` by lead component, then by decreasing exponent of `var`.
fn sort_level(elems: &mut [Vector], var: usize) {
    elems.sort_by(|a, b| {
        a[0].comp
            .cmp(&b[0].comp)
            .then_with(|| b[0].m.exp(var).cmp(&a[0].m.exp(var)))
            .then_with(|| a[0].m.cmp(&b[0].m))
    });
}

fn level_data(elems: &[Vector], prev: &SchreyerData) -> SchreyerData {
    let mut total = Vec::with_capacity(elems.len());
    let mut base = Vec::with_capacity(elems.len());
    let mut chain = Vec::with_capacity(elems.len());
    for (a, g) in elems.iter().enumerate() {
        let c = g[0].comp as usize;
        total.push(g[0].m.mul(&prev.total[c]));
        base.push(prev.base[c]);
        let mut ch = prev.chain[c].clone();
        ch.push(a as u32);
        chain.push(ch);
    }
    SchreyerData { total, base, chain }
}

/// Division of `v` by a Gröbner basis, returning the quotient terms.
fn divide(mut v: Vector, elems: &[Vector], by_comp: &[Vec<usize>], ord: &ModOrder, field: FieldSpec) -> Vec<Term> {
    let mut quot = Vec::new();
    while let Some(t) = v.first().copied() {
        let mask = t.m.divmask();
        let red = by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| {
                let l = &elems[i][0].m;
                l.divmask() & !mask == 0 && l.divides(&t.m)
            })
            .expect("Schreyer frame: S-pair does not reduce to zero");
        let g = &elems[red];
        let q = g[0].m.quotient_of(&t.m);
        quot.push(Term { m: q, comp: red as u32, c: t.c });
        v = sub_mul(&v[1..], t.c, &q, &g[1..], ord, field);
    }
    quot
}

/// Syzygies of one level, as elements of the free module it indexes.
fn next_level(level: &Level, ord_prev: &ModOrder, ord_here: &ModOrder, field: FieldSpec) -> Vec<Vector> {
    let elems = &level.elems;
    let ncomp = elems.iter().map(|g| g[0].comp as usize + 1).max().unwrap_or(0);
    let mut by_comp: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
    for (i, g) in elems.iter().enumerate() {
        by_comp[g[0].comp as usize].push(i);
    }
    let mut out = Vec::new();
    for list in &by_comp {
        for (x, &i) in list.iter().enumerate() {
            // multipliers m_ij = lcm / lead_i for j > i, keeping minimal ones
            let li = elems[i][0].m;
            let mut cands: Vec<(Monomial, usize)> = list[x + 1..]
                .iter()
                .map(|&j| (li.lcm(&elems[j][0].m).div(&li).unwrap(), j))
                .collect();
            cands.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.0.cmp(&b.0)));
            let mut kept: Vec<(Monomial, usize)> = Vec::new();
            for (m, j) in cands {
                if !kept.iter().any(|(k, _)| k.divides(&m)) {
                    kept.push((m, j));
                }
            }
            for (mi, j) in kept {
                let lj = elems[j][0].m;
                let mj = li.mul(&mi).div(&lj).unwrap();
                // m_i g_i - m_j g_j with the leads cancelled
                let left: Vector = elems[i][1..].iter().map(|t| Term { m: t.m.mul(&mi), ..*t }).collect();
                let s = sub_mul(&left, 1, &mj, &elems[j][1..], ord_prev, field);
                let quot = divide(s, elems, &by_comp, ord_prev, field);
                let mut syz = vec![
                    Term { m: mi, comp: i as u32, c: 1 },
                    Term { m: mj, comp: j as u32, c: field.neg(1) },
                ];
                syz.extend(quot.into_iter().map(|t| Term { c: field.neg(t.c), ..t }));
                let syz = normalize(syz, ord_here, field);
                debug_assert!(syz[0].comp == i as u32 && syz[0].m == mi);
                out.push(syz);
            }
        }
    }
    out
}

/// A possibly nonminimal free resolution of `coker rel`, as maps
/// `phi_1, phi_2, ...` with `phi_1` landing in the target of `rel`.
pub fn schreyer_resolution(rel: &ModuleMap) -> Vec<ModuleMap> {
    let (n, field) = (rel.n, rel.field);
    let f0 = rel.target.clone();
    let top = ModOrder::top(MonomialOrder::Grevlex);
    let spec = GbSpec::new(field, &top, &f0.twists);
    let mut gb = engine::run(&spec, &[], &map_vectors(rel, &top)).basis;
    let mut maps = Vec::new();
    if gb.is_empty() {
        return maps;
    }
    sort_level(&mut gb, 0);
    let base0 = SchreyerData {
        total: vec![Monomial::one(n); f0.rank()],
        base: (0..f0.rank() as u32).collect(),
        chain: vec![Vec::new(); f0.rank()],
    };
    let mut prev_twists = f0.twists.clone();
    let mut prev_data = Arc::new(base0);
    let mut elems = gb;
    let mut k = 1;
    loop {
        let twists: Vec<i32> =
            elems.iter().map(|g| g[0].m.degree() as i32 + prev_twists[g[0].comp as usize]).collect();
        let data = Arc::new(level_data(&elems, &prev_data));
        let cols: Vec<Vec<Polynomial>> = elems.iter().map(|g| to_column(g, prev_twists.len(), n, field)).collect();
        maps.push(
            ModuleMap::from_columns(
                n,
                field,
                GradedFreeModule::new(twists.clone()),
                GradedFreeModule::new(prev_twists.clone()),
                cols,
            )
            .expect("frame shape"),
        );
        let level = Level { elems, twists, data };
        let ord_prev = if k == 1 { top.clone() } else { schreyer_order(&prev_data) };
        let ord_here = schreyer_order(&level.data);
        let mut next = next_level(&level, &ord_prev, &ord_here, field);
        if next.is_empty() {
            break;
        }
        sort_level(&mut next, k.min(n - 1));
        prev_twists = level.twists;
        prev_data = level.data;
        elems = next;
        k += 1;
    }
    maps
}

/// Removes unit entries from a complex `F_0 <- F_1 <- ...` by Gaussian
/// elimination, returning the minimal complex.
pub fn minimize(f0: &GradedFreeModule, maps: Vec<ModuleMap>) -> (Vec<GradedFreeModule>, Vec<ModuleMap>) {
    let len = maps.len();
    if len == 0 {
        return (vec![f0.clone()], Vec::new());
    }
    let (n, field) = (maps[0].n, maps[0].field);
    let mut twists: Vec<Vec<i32>> = vec![f0.twists.clone()];
    for m in &maps {
        twists.push(m.source.twists.clone());
    }
    let mut alive: Vec<Vec<bool>> = twists.iter().map(|t| vec![true; t.len()]).collect();
    let mut cols: Vec<Vec<Vec<Polynomial>>> = maps.into_iter().map(|m| m.into_columns()).collect();

    for k in 0..len {
        // cols[k] is phi_{k+1}: F_{k+1} -> F_k
        loop {
            let mut hit = None;
            'search: for (c, col) in cols[k].iter().enumerate() {
                if !alive[k + 1][c] {
                    continue;
                }
                for (r, p) in col.iter().enumerate() {
                    if alive[k][r] && twists[k][r] == twists[k + 1][c] && !p.is_zero() {
                        hit = Some((r, c));
                        break 'search;
                    }
                }
            }
            let Some((r, c)) = hit else { break };
            let pivot = cols[k][c].clone();
            let u_inv = field.inv(pivot[r].constant_term());
            for j in 0..cols[k].len() {
                if j == c || !alive[k + 1][j] || cols[k][j][r].is_zero() {
                    continue;
                }
                let b = cols[k][j][r].scale(u_inv);
                let col = &mut cols[k][j];
                for (i, p) in pivot.iter().enumerate() {
                    if alive[k][i] && !p.is_zero() {
                        col[i] = col[i].sub(&b.mul(p));
                    }
                }
            }
            alive[k][r] = false;
            alive[k + 1][c] = false;
        }
    }

    let keep: Vec<Vec<usize>> = alive
        .iter()
        .map(|a| a.iter().enumerate().filter(|(_, &x)| x).map(|(i, _)| i).collect())
        .collect();
    let modules: Vec<GradedFreeModule> = keep
        .iter()
        .zip(&twists)
        .map(|(kp, tw)| GradedFreeModule::new(kp.iter().map(|&i| tw[i]).collect()))
        .collect();
    let mut out_maps = Vec::new();
    for k in 0..len {
        let c: Vec<Vec<Polynomial>> = keep[k + 1]
            .iter()
            .map(|&j| keep[k].iter().map(|&i| cols[k][j][i].clone()).collect())
            .collect();
        out_maps.push(
            ModuleMap::from_columns(n, field, modules[k + 1].clone(), modules[k].clone(), c).expect("shape"),
        );
    }
    // trailing zero modules carry no information
    let mut modules = modules;
    while modules.len() > 1 && modules.last().unwrap().rank() == 0 {
        modules.pop();
        out_maps.pop();
    }
    (modules, out_maps)
}
