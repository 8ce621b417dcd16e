//! Bounds on the local cohomology and regularity of Tor.

use crate::groebner::{normal_form, Ideal};
use crate::resolution::ModulePresentation;
use crate::ring::linalg;
use crate::ring::{Coeff, Monomial};
use crate::verify::data::{ModuleData, PairData};
use crate::verify::report::{add_opt, max_opt, BoundReport, ClaimKind, Hypothesis};
use crate::{Error, Result};

use std::collections::HashMap;

fn delta_hyp(delta: i64) -> Hypothesis {
    Hypothesis::new("dim Tor_1(A,B) <= 1", delta <= 1).with("delta", delta)
}

fn sub(a: Option<i64>, c: i64) -> Option<i64> {
    a.map(|x| x - c)
}

/// Three-term bound and its two specializations at one `(j, k, p, q)`.
pub fn tor_bound_reports(pair: &PairData, j: i64, k: usize, p: i64, q: i64) -> Result<Vec<BoundReport>> {
    let n = pair.n() as i64;
    let total = n - j + k as i64;
    if p + q != total {
        return Err(Error::IndexConstraint { expected: total, got: p + q });
    }
    if j < 0 {
        return Err(Error::NegativeIndex(j));
    }
    let (a, b) = (&pair.a, &pair.b);
    let lhs = pair.tor(k)?.reg_h(j);
    let x = sub(add_opt(a.t(p), b.t(q)), n);
    let range = -(2 * n + 4)..=(total + 2 * n + 4);
    let y = max_opt(range.clone().filter(|&p2| p2 > p).map(|p2| add_opt(a.t(p2), b.reg_h(n - (total - p2)))));
    let z = max_opt(range.filter(|&p2| p2 < p).map(|p2| add_opt(a.reg_h(n - p2), b.t(total - p2))));
    let tag = |r: BoundReport| r.param("j", j).param("k", k as i64).param("p", p).param("q", q);

    let mut out = Vec::new();
    let mut r = BoundReport::bound("tor-bound", ClaimKind::Theorem, vec![delta_hyp(pair.delta)], lhs, max_opt([x, y, z]));
    r.rhs_parts = Some([x, y, z]);
    out.push(tag(r));

    let (ca, cb) = (a.codim(), b.codim());
    if p <= ca && q <= cb {
        out.push(tag(BoundReport::bound("tor-bound1", ClaimKind::Theorem, vec![delta_hyp(pair.delta)], lhs, x)));
    }
    if total >= ca + cb {
        let rhs = max_opt((ca..=total - cb).map(|p2| add_opt(a.t(p2), b.t(total - p2))));
        out.push(tag(BoundReport::bound(
            "generalization-of-regularity",
            ClaimKind::Theorem,
            vec![delta_hyp(pair.delta)],
            lhs,
            sub(rhs, n),
        )));
    }
    Ok(out)
}

/// Reports for `reg H^j_m(Tor_k(A, B))` at the given indices.
pub fn check_tor_bound(
    a: &ModulePresentation,
    b: &ModulePresentation,
    j: i64,
    k: usize,
    p: i64,
    q: i64,
) -> Result<Vec<BoundReport>> {
    let n = a.n() as i64;
    if p + q != n - j + k as i64 {
        return Err(Error::IndexConstraint { expected: n - j + k as i64, got: p + q });
    }
    let pair = PairData::from_modules(a, b, k)?;
    tor_bound_reports(&pair, j, k, p, q)
}

/// `B = S/J` Cohen-Macaulay: the one-term bound, and for Gorenstein `B`
/// with `A ⊗ B` of finite length the equality criterion on rows of the
/// resolution of `A`.
pub fn cm_case_reports(pair: &PairData, jideal: &Ideal, j: i64, k: usize) -> Result<Vec<BoundReport>> {
    let (a, b) = (&pair.a, &pair.b);
    if !b.is_cohen_macaulay() {
        return Err(Error::NotCohenMacaulay);
    }
    let bdim = b.dim;
    let tor = pair.tor(k)?;
    let lhs = tor.reg_h(j);
    let rhs = add_opt(sub(a.t(bdim - j + k as i64), bdim), b.reg());
    let mut out = vec![BoundReport::bound("cm-case", ClaimKind::Theorem, vec![delta_hyp(pair.delta)], lhs, rhs)
        .param("j", j)
        .param("k", k as i64)
        .param("b", bdim)];

    let finite = pair.tor[0].dim <= 0;
    if j == 0 && b.is_gorenstein() && finite {
        let hyps = vec![
            Hypothesis::new("S/J Gorenstein", true),
            Hypothesis::new("A/JA finite length", true),
            Hypothesis::new("k <= codim A - b", (k as i64) <= a.codim() - bdim)
                .with("k", k as i64)
                .with("codim A", a.codim())
                .with("b", bdim),
        ];
        let lhs = tor.reg();
        let rhs = add_opt(sub(a.t(bdim + k as i64), bdim), b.reg());
        out.push(
            BoundReport::bound("sharpness", ClaimKind::Theorem, hyps.clone(), lhs, rhs).param("k", k as i64),
        );
        let row = max_row_in_ideal(a, (bdim + k as i64) as usize, jideal)?;
        let equal = lhs.is_some() && lhs == rhs;
        out.push(
            BoundReport::statement("sharpness-rows", ClaimKind::Theorem, hyps, equal == row)
                .param("k", k as i64)
                .note(format!("equality: {equal}, row of maximal degree inside J: {row}")),
        );
    }
    Ok(out)
}

/// Whether some generalized row of maximal degree of `phi_{s+1}` has all
/// its entries in `J`.
fn max_row_in_ideal(a: &ModuleData, s: usize, j: &Ideal) -> Result<bool> {
    let Some(fs) = a.res.modules.get(s) else {
        return Ok(false);
    };
    let Some(&top) = fs.twists.iter().max() else {
        return Ok(false);
    };
    let rows: Vec<usize> = (0..fs.rank()).filter(|&i| fs.twists[i] == top).collect();
    let Some(phi) = a.res.maps.get(s) else {
        // F_{s+1} = 0: every row is empty
        return Ok(true);
    };
    let gb = j.gb();
    // columns of the linear map c -> (c^T phi mod J), one coordinate per
    // (column, monomial)
    let mut coord: HashMap<(usize, Monomial), usize> = HashMap::new();
    let mut cols: Vec<Vec<(usize, Coeff)>> = Vec::new();
    for &i in &rows {
        let mut v = Vec::new();
        for c in 0..phi.ncols() {
            let nf = normal_form(phi.entry(i, c), &gb)?;
            for (m, x) in nf.terms() {
                let len = coord.len();
                let at = *coord.entry((c, *m)).or_insert(len);
                v.push((at, *x));
            }
        }
        cols.push(v);
    }
    let width = coord.len();
    // kernel of the matrix whose columns are `cols`
    let mut dense = vec![vec![0 as Coeff; rows.len()]; width];
    for (ci, v) in cols.iter().enumerate() {
        for &(r, x) in v {
            dense[r][ci] = x;
        }
    }
    Ok(!linalg::kernel(a.module.field(), rows.len(), &dense).is_empty())
}

pub fn check_cm_case(a: &ModulePresentation, jideal: &Ideal, j: i64, k: usize) -> Result<Vec<BoundReport>> {
    let pair = PairData::from_modules(a, &ModulePresentation::cyclic(jideal), k)?;
    cm_case_reports(&pair, jideal, j, k)
}

/// `reg Tor_k <= reg A + reg B + k`, the `t_p` form for every admissible
/// `p`, and the Cohen-Macaulay refinement when `B` is Cohen-Macaulay.
pub fn reg_tor_reports(pair: &PairData, k: usize) -> Result<Vec<BoundReport>> {
    let (a, b) = (&pair.a, &pair.b);
    let n = pair.n() as i64;
    let ki = k as i64;
    let lhs = pair.tor(k)?.reg();
    let mut out = vec![BoundReport::bound(
        "reg-of-tor",
        ClaimKind::Theorem,
        vec![delta_hyp(pair.delta)],
        lhs,
        add_opt(add_opt(a.reg(), b.reg()), Some(ki)),
    )
    .param("k", ki)];
    for p in (ki + b.dim.max(0))..=a.codim().min(n + ki) {
        out.push(
            BoundReport::bound(
                "newregtor",
                ClaimKind::Theorem,
                vec![delta_hyp(pair.delta)],
                lhs,
                sub(add_opt(a.t(p), b.t(n + ki - p)), n),
            )
            .param("k", ki)
            .param("p", p),
        );
    }
    if k > 0 && b.is_cohen_macaulay() {
        let bd = b.dim;
        let rhs = max_opt(((bd + ki - pair.delta).max(0)..=bd + ki).map(|p| sub(a.t(p), p)));
        out.push(
            BoundReport::bound(
                "reg-of-tor-cm",
                ClaimKind::Theorem,
                vec![delta_hyp(pair.delta), Hypothesis::new("B Cohen-Macaulay", true)],
                lhs,
                add_opt(add_opt(rhs, b.reg()), Some(ki)),
            )
            .param("k", ki),
        );
    }
    Ok(out)
}

pub fn check_reg_tor(a: &ModulePresentation, b: &ModulePresentation, k: usize) -> Result<Vec<BoundReport>> {
    let pair = PairData::from_modules(a, b, k)?;
    reg_tor_reports(&pair, k)
}

/// `t_n(A ⊗ B) <= t_p(A) + t_{n-p}(B)` for `dim B <= p <= codim A`.
pub fn subadd_reports(pair: &PairData) -> Vec<BoundReport> {
    let n = pair.n() as i64;
    let (a, b) = (&pair.a, &pair.b);
    let lhs = pair.tor0.t(n);
    (b.dim.max(0)..=a.codim().min(n))
        .map(|p| {
            BoundReport::bound("subadd", ClaimKind::Theorem, vec![delta_hyp(pair.delta)], lhs, add_opt(a.t(p), b.t(n - p)))
                .param("p", p)
        })
        .collect()
}

/// `t_{c+δ}(A) <= t_{c+δ-q}(A) + t_q(S/J)` for `J ⊆ ann A`.
pub fn socle_estimation_reports(a: &ModuleData, ann: &Ideal, j: &Ideal) -> Result<Vec<BoundReport>> {
    let sj = ModuleData::quotient(j)?;
    let (Some(depth_a), Some(depth_j)) = (a.depth, sj.depth) else {
        return Ok(Vec::new());
    };
    let c = a.codim();
    let delta = a.dim - depth_a;
    let hyps = vec![
        Hypothesis::new("dim A - depth A <= 1", delta <= 1).with("delta", delta),
        Hypothesis::new("J inside ann A", j.is_subset_of(ann)),
        Hypothesis::new("depth S/J >= depth A", depth_j >= depth_a).with("depth S/J", depth_j).with("depth A", depth_a),
    ];
    let lhs = a.t(c + delta);
    Ok((0..=sj.codim().min(c + delta))
        .map(|q| {
            BoundReport::bound(
                "socle-estimation",
                ClaimKind::Theorem,
                hyps.clone(),
                lhs,
                add_opt(a.t(c + delta - q), sj.t(q)),
            )
            .param("q", q)
        })
        .collect())
}

/// The stepwise variant `t_{i+1}(S/I) <= t_i(S/I) + e`, `e` the least
/// generator degree; known to fail, recorded only.
pub fn socle_stepwise_reports(quot: &ModuleData, i: &Ideal) -> Vec<BoundReport> {
    let e = i.generator_degrees().into_iter().min().map(i64::from);
    let pd = quot.betti.pd().unwrap_or(0) as i64;
    (1..pd)
        .map(|s| {
            BoundReport::bound("socle-stepwise", ClaimKind::Informational, vec![], quot.t(s + 1), add_opt(quot.t(s), e))
                .param("i", s)
        })
        .collect()
}

/// `m^{m-p+s} ⊆ I + L^s` for `n-p` seeded linear forms `L`.
pub fn linear_complements_report(i: &Ideal, quot: &ModuleData, p: usize, s: u32, seed: u64) -> Result<BoundReport> {
    let n = i.n();
    let l = crate::constructions::linear_subspace_ideal(&i.ring, n - p.min(n), seed)?;
    let hyp = i.sum(&l).is_m_primary() || l.is_zero() && i.is_m_primary();
    let big = if l.is_zero() { i.clone() } else { i.sum(&l.power(s)) };
    let hs = big.hilbert_series();
    let lhs = if hs.dimension() == 0 { Some(hs.top_degree().map_or(0, |t| t as i64 + 1)) } else { None };
    let rhs = quot.t(p as i64).map(|m| m - p as i64 + s as i64);
    Ok(BoundReport::bound(
        "linear-complements",
        ClaimKind::Theorem,
        vec![Hypothesis::new("I + L contains a power of m", hyp)],
        lhs,
        rhs,
    )
    .param("p", p as i64)
    .param("s", s as i64))
}

/// `(x_1..x_p)^{m-p+1} ⊆ in(I)` in grevlex, `m = t_p(S/I)`.
pub fn initials_report(i: &Ideal, quot: &ModuleData, p: usize) -> BoundReport {
    let n = i.n();
    let hyp = Hypothesis::new("I m-primary", quot.dim == 0);
    let Some(m) = quot.t(p as i64) else {
        return BoundReport::statement("initials", ClaimKind::Theorem, vec![hyp, Hypothesis::new("t_p finite", false)], false)
            .param("p", p as i64);
    };
    let e = (m - p as i64 + 1).max(0) as u32;
    let init = i.initial_ideal(crate::ring::MonomialOrder::Grevlex);
    let ok = Monomial::all_of_degree(p, e).iter().all(|mm| {
        let mut exps = vec![0u32; n];
        for (v, slot) in exps.iter_mut().enumerate().take(p) {
            *slot = mm.exp(v);
        }
        init.contains(&Monomial::from_exps(&exps))
    });
    BoundReport::statement("initials", ClaimKind::Theorem, vec![hyp], ok).param("p", p as i64).param("exponent", e as i64)
}

/// Linear complements, initials and the socle estimate for `S/I`.
pub fn check_specialization(i: &Ideal, p: usize, s: u32, seed: u64) -> Result<Vec<BoundReport>> {
    let quot = ModuleData::quotient(i)?;
    let mut out = vec![linear_complements_report(i, &quot, p, s, seed)?];
    if p >= 1 && p <= i.n() {
        out.push(initials_report(i, &quot, p));
    }
    out.extend(socle_estimation_reports(&quot, i, i)?);
    out.extend(socle_stepwise_reports(&quot, i));
    Ok(out)
}
