//! Products and powers of ideals, symmetric power torsion, and ideals
//! with almost linear resolution.

use crate::groebner::{binom, Ideal};
use crate::reesalg::{power_is_max_power, sym_power_torsion};
use crate::resolution::linear_steps_from;
use crate::verify::data::{quotient_reg, ModuleData, PairData};
use crate::verify::report::{add_opt, max_opt, BoundReport, ClaimKind, Hypothesis};
use crate::Result;

fn delta_hyp(delta: i64) -> Hypothesis {
    Hypothesis::new("dim Tor_1(S/I,S/J) <= 1", delta <= 1).with("delta", delta)
}

/// `reg I = reg S/I + 1`.
fn reg_ideal(q: &ModuleData) -> Option<i64> {
    q.reg().map(|r| r + 1)
}

/// `t_p(I) = t_{p+1}(S/I)`.
fn t_ideal(q: &ModuleData, p: i64) -> Option<i64> {
    q.t(p + 1)
}

/// Statements about `IJ` for the pair `(S/I, S/J)`.
pub fn product_reports(i: &Ideal, j: &Ideal, pair: &PairData) -> Result<Vec<BoundReport>> {
    let n = i.n() as i64;
    let (qi, qj) = (&pair.a, &pair.b);
    let lhs = quotient_reg(&i.product(j))?.map(|r| r + 1);
    let mut out = vec![BoundReport::bound(
        "reg-of-products",
        ClaimKind::Theorem,
        vec![delta_hyp(pair.delta)],
        lhs,
        add_opt(reg_ideal(qi), reg_ideal(qj)),
    )];
    for p in (n + 1 - qj.codim()).max(0)..=qi.codim().min(n + 1) {
        let q = n + 1 - p;
        let rhs = max_opt([reg_ideal(qi), reg_ideal(qj), add_opt(qi.t(p), qj.t(q)).map(|x| x - n + 1)]);
        out.push(
            BoundReport::bound("reg-of-products2a", ClaimKind::Theorem, vec![delta_hyp(pair.delta)], lhs, rhs)
                .param("p", p)
                .param("q", q),
        );
    }

    // (IJ)_d = (I ∩ J)_d from degree reg Tor_1 + 1 on
    let tor1 = &pair.tor[1];
    let hyp = vec![Hypothesis::new("(IJ)_d = (I∩J)_d for d >> 0", tor1.dim <= 0).with("dim Tor_1", tor1.dim)];
    let start = tor1.reg().map(|r| r + 1);
    out.push(BoundReport::bound(
        "intersection-and-product",
        ClaimKind::Theorem,
        hyp.clone(),
        start,
        add_opt(reg_ideal(qi), reg_ideal(qj)),
    ));
    if qj.is_cohen_macaulay() {
        let b = qj.dim;
        out.push(
            BoundReport::bound(
                "intersection-and-product",
                ClaimKind::Theorem,
                hyp,
                start,
                add_opt(t_ideal(qi, b).map(|x| x - b), reg_ideal(qj)),
            )
            .note("S/J Cohen-Macaulay form"),
        );
    }

    // both generated in degree d and linear for ceil((n-1)/2) steps
    let half = (n - 1 + 1) / 2;
    let d = i.minimalized().single_degree();
    if d.is_some() && j.minimalized().single_degree() == d {
        let d = d.unwrap() as i64;
        let si = linear_steps_from(&qi.betti, d as i32);
        let sj = linear_steps_from(&qj.betti, d as i32);
        let hyps = vec![
            Hypothesis::new("dim <= 1", qi.dim <= 1 && qj.dim <= 1),
            Hypothesis::new("linear for ceil((n-1)/2) steps", si >= half && sj >= half)
                .with("steps I", si)
                .with("steps J", sj),
        ];
        out.push(BoundReport::equality("half-way-linear2", ClaimKind::Theorem, hyps, lhs, Some(2 * d)));
    }
    Ok(out)
}

/// Regularity of `I^t` for `t` in `2..=tmax`.
pub fn power_reports(i: &Ideal, quot: &ModuleData, tmax: u32) -> Result<Vec<BoundReport>> {
    let n = i.n() as i64;
    let dim = quot.dim;
    let t0 = t_ideal(quot, 0).unwrap_or(0);
    let d = if dim <= 0 { t0 } else { t0.max(t_ideal(quot, 1).map_or(t0, |x| x - 1)) };
    let hyp = Hypothesis::new("dim S/I <= 1", (0..=1).contains(&dim)).with("dim", dim).with("d", d);
    let single = i.minimalized().single_degree().map(i64::from);
    let steps = single.map(|e| linear_steps_from(&quot.betti, e as i32));
    let mut out = Vec::new();
    for t in 2..=tmax {
        let ti = t as i64;
        let lhs = quotient_reg(&i.power(t))?.map(|r| r + 1);
        out.push(
            BoundReport::bound(
                "reg-of-powers2",
                ClaimKind::Theorem,
                vec![hyp.clone()],
                lhs,
                reg_ideal(quot).map(|r| r + (ti - 1) * d),
            )
            .param("t", ti),
        );
        for p in (1 + dim.max(0))..=quot.codim().min(n) {
            let rhs = add_opt(t_ideal(quot, p - 1), t_ideal(quot, n - p)).map(|x| x - n + (ti - 2) * d + 1);
            out.push(
                BoundReport::bound("reg-of-powers2", ClaimKind::Theorem, vec![hyp.clone()], lhs, rhs)
                    .param("t", ti)
                    .param("p", p),
            );
        }
        if let (Some(e), Some(s)) = (single, steps) {
            let hyps = vec![
                Hypothesis::new("dim <= 1", dim <= 1),
                Hypothesis::new("linear for ceil((n-1)/2) steps", s >= n / 2).with("steps", s),
            ];
            out.push(
                BoundReport::equality("half-way-linear", ClaimKind::Theorem, hyps, lhs, Some(ti * e)).param("t", ti),
            );
        }
    }
    Ok(out)
}

/// Products with `J`, and powers of `I` up to `tmax`.
pub fn check_products_powers(i: &Ideal, j: Option<&Ideal>, tmax: u32) -> Result<Vec<BoundReport>> {
    let qi = ModuleData::quotient(i)?;
    let mut out = power_reports(i, &qi, tmax)?;
    if let Some(j) = j {
        let pair = PairData::new(qi, ModuleData::quotient(j)?, 1)?;
        out.extend(product_reports(i, j, &pair)?);
    }
    Ok(out)
}

/// Torsion of `Sym_t(I)` for an m-primary ideal in one degree `d`:
/// the recursive bound for `t < tmax` and concentration in degree `td`
/// when the resolution is linear for `ceil(n/2)` steps.
pub fn torsion_reports(i: &Ideal, quot: &ModuleData, tmax: u32) -> Result<Vec<BoundReport>> {
    let i = i.minimalized();
    let (Some(d), true) = (i.single_degree(), quot.dim == 0) else {
        return Ok(Vec::new());
    };
    let n = i.n() as i64;
    let d = d as i64;
    let steps = linear_steps_from(&quot.betti, d as i32);
    let mut out = Vec::new();
    let mut prev: Option<i64> = None;
    for t in 1..tmax {
        let next = sym_power_torsion(&i, t + 1)?;
        let tor2 = PairData::new(quot.clone(), ModuleData::quotient(&i.power(t))?, 2)?.tor[2].reg();
        let lhs = next.reg.map(i64::from);
        out.push(
            BoundReport::bound(
                "reg-of-a",
                ClaimKind::Theorem,
                vec![Hypothesis::new("I m-primary", true)],
                lhs,
                max_opt([prev.map(|r| r + d), tor2]),
            )
            .param("t", t as i64),
        );
        let td = (t as i64 + 1) * d;
        let concentrated = next.degrees.is_zero() || (next.degrees.bottom == Some(td as i32) && lhs == Some(td));
        out.push(
            BoundReport::statement(
                "partial-annihilation",
                ClaimKind::Theorem,
                vec![Hypothesis::new("linear for ceil(n/2) steps", steps >= (n + 1) / 2).with("steps", steps)],
                concentrated,
            )
            .param("t", t as i64 + 1),
        );
        let gens_ok = next.gen_degrees.iter().all(|&g| g as i64 == td);
        out.push(
            BoundReport::statement(
                "sym-torsion",
                ClaimKind::Conjecture,
                vec![Hypothesis::new("linearly presented", steps >= 1).with("steps", steps)],
                gens_ok,
            )
                .param("t", t as i64 + 1),
        );
        prev = lhs;
    }
    Ok(out)
}

/// Identities and the generator bound for almost linear resolutions of
/// finite length `S/I`, `n = r + 1`.
pub fn check_generator_bound(i: &Ideal) -> Result<Vec<BoundReport>> {
    let quot = ModuleData::quotient(i)?;
    Ok(generator_bound_reports(i, &quot))
}

pub fn generator_bound_reports(i: &Ideal, quot: &ModuleData) -> Vec<BoundReport> {
    let n = i.n();
    let r = n as i64 - 1;
    let t = &quot.betti;
    let d = i.minimalized().single_degree().map(i64::from);
    let shape = match d {
        Some(d) if r >= 2 && quot.dim == 0 && t.pd() == Some(n) => {
            (1..=r as usize).all(|s| t.min_degree(s) == Some((d + s as i64 - 1) as i32) && t.t(s) == t.min_degree(s))
                && t.min_degree(n).is_some_and(|m| m as i64 >= d + r)
        }
        _ => false,
    };
    let hyp = vec![Hypothesis::new("finite length, almost linear", shape)];
    let Some(d) = d.filter(|_| shape) else {
        return vec![BoundReport::statement("generator-bound", ClaimKind::Theorem, hyp, true)];
    };
    let bs: Vec<i64> = t
        .entries
        .iter()
        .filter(|((s, _), _)| *s == n)
        .flat_map(|(&(_, j), &c)| std::iter::repeat_n(j as i64 - d - r, c as usize))
        .collect();
    let m1 = t.total(1) as i64;
    let last = t.total(n) as i64;
    let id1 = bs.iter().map(|&b| binom(b + r, r)).sum::<i64>();
    let id2 = binom(d + r, r) - bs.iter().map(|&b| binom(b + r - 1, r)).sum::<i64>();
    let bound = binom(d + r - 1, r - 1) + binom(d + r - 2, r - 1);
    vec![
        BoundReport::equality("generator-identity-1", ClaimKind::Theorem, hyp.clone(), Some(binom(d + r - 1, r)), Some(id1)),
        BoundReport::equality("generator-identity-2", ClaimKind::Theorem, hyp.clone(), Some(m1), Some(id2)),
        BoundReport::bound("generator-bound", ClaimKind::Theorem, hyp.clone(), Some(bound), Some(m1)),
        BoundReport::statement("generator-bound-gorenstein", ClaimKind::Theorem, hyp, (m1 == bound) == (last == 1))
            .note(format!("m_1 = {m1}, bound = {bound}, m_(r+1) = {last}")),
    ]
}

/// `I^t = m^{td}` for `t >= (n-1)/s` when a monomial `I` is linear for
/// `s >= 1` steps.
pub fn monomial_linear_report(i: &Ideal, quot: &ModuleData) -> Result<Option<BoundReport>> {
    let i = i.minimalized();
    if !i.gens().iter().all(|g| g.is_monomial()) || quot.dim != 0 {
        return Ok(None);
    }
    let Some(d) = i.single_degree() else {
        return Ok(None);
    };
    let s = linear_steps_from(&quot.betti, d as i32);
    if s < 1 {
        return Ok(None);
    }
    let n = i.n() as i64;
    let t = ((n - 1) + s - 1) / s;
    let ok = power_is_max_power(&i, t.max(1) as u32)?;
    Ok(Some(
        BoundReport::statement(
            "monomial-linear",
            ClaimKind::Theorem,
            vec![Hypothesis::new("monomial, m-primary, linearly presented", true).with("steps", s)],
            ok,
        )
        .param("t", t),
    ))
}
