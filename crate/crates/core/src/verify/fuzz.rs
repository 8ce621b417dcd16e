//! Seeded random instances run through every checker and conjecture.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constructions::{linear_subspace_ideal, random_ideal, Flavor};
use crate::groebner::{binom, gin_checked, Ideal};
use crate::reesalg::{instant_eliminate, power_is_max_power};
use crate::resolution::linear_steps_from;
use crate::ring::{FieldSpec, Monomial, Polynomial};
use crate::source::print_source;
use crate::verify::data::{ModuleData, PairData};
use crate::verify::products::{
    generator_bound_reports, monomial_linear_report, power_reports, product_reports, torsion_reports,
};
use crate::verify::report::{BoundReport, ClaimKind, Hypothesis};
use crate::verify::tor::{
    cm_case_reports, initials_report, linear_complements_report, reg_tor_reports, socle_estimation_reports,
    socle_stepwise_reports, subadd_reports, tor_bound_reports,
};
use crate::Result;

pub const GIN_CAVEAT: &str = "generic initial ideals are computed after a seeded random change of coordinates \
over a prime field; a result is evidence, not a certificate of genericity";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub seed: u64,
    pub n_range: (usize, usize),
    pub d_range: (u32, u32),
    pub count: usize,
    pub flavors: Vec<Flavor>,
    pub prime: u32,
    /// Largest `k` for `Tor_k` bounds.
    pub kmax: usize,
    /// Largest power for the power bounds.
    pub tmax: u32,
    pub theorems: bool,
    pub conjectures: bool,
    /// Keep only linearly presented instances, adding generators until
    /// the presentation is linear.
    pub linearly_presented: bool,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            n_range: (3, 4),
            d_range: (2, 3),
            count: 200,
            flavors: vec![Flavor::Forms, Flavor::Monomials, Flavor::MPrimaryForms],
            prime: crate::ring::DEFAULT_PRIME,
            kmax: 2,
            tmax: 2,
            theorems: true,
            conjectures: true,
            linearly_presented: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    /// The instance in the ideal file format, ideals `I` and `J`.
    pub source: String,
    pub report: BoundReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NearSharp {
    pub index: usize,
    pub theorem_id: String,
    pub params: Vec<(String, i64)>,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub instances: usize,
    /// Instances with at least one applicable theorem check.
    pub hypothesis_satisfying: usize,
    pub theorem_checks: usize,
    pub applicable_theorem_checks: usize,
    pub theorem_violations: Vec<Witness>,
    pub conjecture_checks: usize,
    pub applicable_conjecture_checks: usize,
    pub conjecture_violations: Vec<Witness>,
    /// Checks run and checks applicable, per theorem or conjecture id.
    pub per_id: std::collections::BTreeMap<String, (usize, usize)>,
    /// Recorded-only statements that came out false, by id.
    pub informational_failures: Vec<(String, usize)>,
    pub near_sharp: Vec<NearSharp>,
    pub skipped: Vec<(usize, String)>,
    pub gin_caveat: String,
}

/// Ids whose near-sharp cases are logged.
const SHARPNESS_IDS: [&str; 4] = ["tor-bound1", "generalization-of-regularity", "cm-case", "sharpness"];

struct Instance {
    i: Ideal,
    j: Ideal,
}

fn instance_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(index as u64).rotate_left(17) ^ 0x5851_f42d_4c95_7f2d
}

fn make_instance(cfg: &FuzzConfig, index: usize) -> Result<Instance> {
    let field = FieldSpec::new(cfg.prime)?;
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(cfg.seed, index));
    let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
    let d = rng.gen_range(cfg.d_range.0..=cfg.d_range.1);
    let flavor = cfg.flavors[index % cfg.flavors.len()];
    let s1: u64 = rng.gen();
    let s2: u64 = rng.gen();
    let mut count = match flavor {
        Flavor::Forms => rng.gen_range(1..=n + 1),
        Flavor::Monomials => rng.gen_range(0..=n),
        Flavor::MPrimaryForms => rng.gen_range(n..=n + 2),
    };
    let room = binom(n as i64 + d as i64 - 1, n as i64 - 1) as usize;
    let i = loop {
        let i = random_ideal(n, d, count.max(1), s1, flavor, field)?;
        if !cfg.linearly_presented {
            break i;
        }
        let q = ModuleData::quotient(&i)?;
        let lp = i.minimalized().single_degree().is_some() && linear_steps_from(&q.betti, d as i32) >= 1;
        if lp && q.dim == 0 {
            break i;
        }
        count += 1;
        // monomials are drawn with replacement, so filling S_d takes longer
        let cap = if flavor == Flavor::Monomials { 4 * room + n } else { room + n };
        if count > cap {
            return Err(crate::Error::RetriesExhausted(count));
        }
    };
    let j = if index.is_multiple_of(2) {
        let dj = rng.gen_range(cfg.d_range.0..=cfg.d_range.1);
        let cj = rng.gen_range(1..=n);
        random_ideal(n, dj, cj, s2, Flavor::Forms, field)?
    } else {
        let k = rng.gen_range(1..n);
        let l = linear_subspace_ideal(&i.ring, k, s2)?;
        Ideal::new(i.ring.clone(), l.gens().to_vec())?
    };
    Ok(Instance { i, j })
}

/// Random combinations of minimal generators, as many as `codim I`.
fn regular_sequence_guess(i: &Ideal, codim: i64, seed: u64) -> Result<Ideal> {
    let gens = i.mingens();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = i.ring.field.p();
    let mut out = Vec::new();
    for _ in 0..codim.max(0) as usize {
        let mut by_deg = gens.clone();
        by_deg.sort_by_key(|g| g.degree());
        let deg = by_deg[rng.gen_range(0..by_deg.len())].degree();
        let f = by_deg
            .iter()
            .filter(|g| g.degree() == deg)
            .fold(Polynomial::zero(i.n(), i.ring.field), |acc, g| acc.add_scaled(g, rng.gen_range(1..p)));
        if !f.is_zero() {
            out.push(f);
        }
    }
    Ideal::new(i.ring.clone(), out)
}

fn theorem_reports(inst: &Instance, cfg: &FuzzConfig, seed: u64) -> Result<Vec<BoundReport>> {
    let (i, j) = (&inst.i, &inst.j);
    let n = i.n() as i64;
    let qi = ModuleData::quotient(i)?;
    let qj = ModuleData::quotient(j)?;
    let mut out = Vec::new();

    for (pair, jideal) in [
        (PairData::new(qi.clone(), qj.clone(), cfg.kmax)?, Some(j)),
        (PairData::new(qi.clone(), qi.clone(), cfg.kmax.min(1))?, None),
    ] {
        for k in 0..=pair.kmax() {
            for jj in 0..=n {
                let total = n - jj + k as i64;
                for p in 0..=total {
                    out.extend(tor_bound_reports(&pair, jj, k, p, total - p)?);
                }
                if let Some(jideal) = jideal.filter(|_| pair.b.is_cohen_macaulay()) {
                    out.extend(cm_case_reports(&pair, jideal, jj, k)?);
                }
            }
            out.extend(reg_tor_reports(&pair, k)?);
        }
        out.extend(subadd_reports(&pair));
        if let Some(jideal) = jideal {
            out.extend(product_reports(i, jideal, &pair)?);
        }
    }

    out.extend(socle_estimation_reports(&qi, i, i)?);
    let ci = regular_sequence_guess(i, qi.codim(), seed ^ 0xa5a5)?;
    if !ci.is_zero() {
        out.extend(socle_estimation_reports(&qi, i, &ci)?);
    }
    out.extend(socle_stepwise_reports(&qi, i));
    for p in 0..=i.n() {
        for s in 1..=2 {
            out.push(linear_complements_report(i, &qi, p, s, seed.wrapping_add(p as u64))?);
        }
        if p >= 1 && qi.dim == 0 {
            out.push(initials_report(i, &qi, p));
        }
    }
    out.extend(power_reports(i, &qi, cfg.tmax)?);
    out.extend(torsion_reports(i, &qi, 2)?);
    out.extend(generator_bound_reports(i, &qi));
    out.extend(monomial_linear_report(i, &qi)?);

    let im = i.minimalized();
    if let (Some(d), true) = (im.single_degree(), qi.dim == 0) {
        let steps = linear_steps_from(&qi.betti, d as i32);
        if steps >= (n + 1) / 2 && im.gens().len() + i.n() <= 12 {
            let e = instant_eliminate(&im)?;
            out.push(BoundReport::statement(
                "instant-elimination",
                ClaimKind::Theorem,
                vec![Hypothesis::new("linear for ceil(n/2) steps", e.hypothesis).with("steps", e.linear_steps)],
                e.equal,
            ));
        }
    }
    Ok(out)
}

/// The conjectures, on m-primary instances.
fn conjecture_reports(inst: &Instance, seed: u64) -> Result<Vec<BoundReport>> {
    let i = inst.i.minimalized();
    let n = i.n() as i64;
    let qi = ModuleData::quotient(&i)?;
    if qi.dim != 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let t_i = |p: i64| qi.t(p + 1);
    let single = i.single_degree();
    let steps = single.map_or(-1, |d| linear_steps_from(&qi.betti, d as i32));
    let sq = ModuleData::quotient(&i.power(2))?;
    let lp = Hypothesis::new("linearly presented, one degree", steps >= 1).with("steps", steps);

    if let Some(d) = single {
        let eu = steps >= 1 && power_is_max_power(&i, (n - 1) as u32)?;
        out.push(BoundReport::statement("lp-max-power", ClaimKind::Conjecture, vec![lp.clone()], eu || steps < 1));

        if steps >= 1 {
            let t0 = ((n - 1) + steps - 1) / steps;
            let ok = power_is_max_power(&i, t0.max(1) as u32)?;
            out.push(
                BoundReport::statement("us", ClaimKind::Conjecture, vec![lp.clone()], ok).param("t", t0.max(1)),
            );
            let s2 = linear_steps_from(&sq.betti, 2 * d as i32);
            out.push(
                BoundReport::bound("us-linear-steps", ClaimKind::Conjecture, vec![lp.clone()], Some((2 * steps).min(n - 1)), Some(s2))
                    .param("t", 2),
            );

            // (z1, z2)^{d-1} m inside Gin I
            let (g, stable) = gin_checked(&i, seed ^ 0x61)?;
            let nn = i.n();
            let ok = Monomial::all_of_degree(2, d - 1).iter().all(|m| {
                (0..nn).all(|v| {
                    let mut e = vec![0u32; nn];
                    e[0] = m.exp(0);
                    e[1] = m.exp(1);
                    e[v] += 1;
                    g.contains(&Monomial::from_exps(&e))
                })
            });
            out.push(
                BoundReport::statement("gin-conjecture", ClaimKind::Conjecture, vec![lp.clone()], ok)
                    .note(format!("two seeds agree: {stable}; {GIN_CAVEAT}")),
            );
            if steps >= n - 2 {
                let mu = g.len() as i64;
                out.push(BoundReport::equality(
                    "hehi",
                    ClaimKind::Informational,
                    vec![Hypothesis::new("linear for n-2 steps", true)],
                    Some(mu),
                    Some(binom(n + d as i64 - 1, n - 1)),
                ));
            }
        }
    }

    // t_m(I^2) <= 2 t_j(I) - (2j - m), and the s-form of part (b)
    let t_sq = |p: i64| sq.t(p + 1);
    let mprim = Hypothesis::new("I m-primary", true);
    for jj in 0..n {
        for m in 0..=(2 * jj).min(n - 1) {
            let rhs = t_i(jj).map(|t| 2 * t - (2 * jj - m));
            out.push(
                BoundReport::bound("us-reg-a", ClaimKind::Conjecture, vec![mprim.clone()], t_sq(m), rhs)
                    .param("k", 2)
                    .param("j", jj)
                    .param("m", m),
            );
        }
    }
    for s in 0..n {
        let rhs = t_sq(s).and_then(|a| t_i(0).map(|b| a + (n - 1 - s) * b));
        out.push(
            BoundReport::bound("us-reg-b", ClaimKind::Conjecture, vec![mprim.clone()], t_sq(n - 1), rhs)
                .param("k", 2)
                .param("s", s),
        );
    }
    Ok(out)
}

enum Outcome {
    Done { source: String, reports: Vec<BoundReport> },
    Skipped(String),
}

fn run_one(cfg: &FuzzConfig, index: usize) -> Outcome {
    let go = || -> Result<(String, Vec<BoundReport>)> {
        let inst = make_instance(cfg, index)?;
        let source = print_source(&inst.i.ring, &[("I".into(), inst.i.clone()), ("J".into(), inst.j.clone())]);
        let seed = instance_seed(cfg.seed, index);
        let mut reports = Vec::new();
        if cfg.theorems {
            reports.extend(theorem_reports(&inst, cfg, seed)?);
        }
        if cfg.conjectures {
            let conj = conjecture_reports(&inst, seed)?;
            if cfg.theorems {
                reports.extend(conj);
            } else {
                // sym torsion belongs with the conjectures
                reports.extend(conj);
                let q = ModuleData::quotient(&inst.i)?;
                reports.extend(torsion_reports(&inst.i, &q, 2)?.into_iter().filter(|r| r.kind == ClaimKind::Conjecture));
            }
        }
        Ok((source, reports))
    };
    match go() {
        Ok((source, reports)) => Outcome::Done { source, reports },
        Err(e) => Outcome::Skipped(e.to_string()),
    }
}

pub fn fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<Outcome> = (0..cfg.count).into_par_iter().map(|k| run_one(cfg, k)).collect();
    let mut rep = FuzzReport {
        config: cfg.clone(),
        instances: 0,
        hypothesis_satisfying: 0,
        theorem_checks: 0,
        applicable_theorem_checks: 0,
        theorem_violations: Vec::new(),
        conjecture_checks: 0,
        applicable_conjecture_checks: 0,
        conjecture_violations: Vec::new(),
        per_id: Default::default(),
        informational_failures: Vec::new(),
        near_sharp: Vec::new(),
        skipped: Vec::new(),
        gin_caveat: GIN_CAVEAT.into(),
    };
    let mut info: std::collections::BTreeMap<String, usize> = Default::default();
    for (index, o) in outcomes.into_iter().enumerate() {
        let (source, reports) = match o {
            Outcome::Done { source, reports } => (source, reports),
            Outcome::Skipped(msg) => {
                rep.skipped.push((index, msg));
                continue;
            }
        };
        rep.instances += 1;
        let mut any = false;
        let mut logged: Vec<&str> = Vec::new();
        for r in &reports {
            let applicable = r.hypotheses_pass();
            if r.kind != ClaimKind::Informational {
                let c = rep.per_id.entry(r.theorem_id.clone()).or_default();
                c.0 += 1;
                c.1 += applicable as usize;
            }
            match r.kind {
                ClaimKind::Theorem => {
                    rep.theorem_checks += 1;
                    if applicable {
                        rep.applicable_theorem_checks += 1;
                        any = true;
                    }
                    if r.is_violation() {
                        rep.theorem_violations.push(Witness { index, source: source.clone(), report: r.clone() });
                    }
                    if r.near_sharp() && SHARPNESS_IDS.contains(&r.theorem_id.as_str()) && !logged.contains(&r.theorem_id.as_str()) {
                        logged.push(&r.theorem_id);
                        rep.near_sharp.push(NearSharp {
                            index,
                            theorem_id: r.theorem_id.clone(),
                            params: r.params.clone(),
                            lhs: r.lhs,
                            rhs: r.rhs,
                        });
                    }
                }
                ClaimKind::Conjecture => {
                    rep.conjecture_checks += 1;
                    if applicable {
                        rep.applicable_conjecture_checks += 1;
                    }
                    if r.is_violation() {
                        rep.conjecture_violations.push(Witness { index, source: source.clone(), report: r.clone() });
                    }
                }
                ClaimKind::Informational => {
                    if r.holds == crate::verify::report::Verdict::Fails {
                        *info.entry(r.theorem_id.clone()).or_default() += 1;
                    }
                }
            }
        }
        if any {
            rep.hypothesis_satisfying += 1;
        }
    }
    rep.informational_failures = info.into_iter().collect();
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_reproducible() {
        let cfg = FuzzConfig { count: 4, n_range: (3, 3), d_range: (2, 2), ..FuzzConfig::default() };
        let a = fuzz(&cfg);
        let b = fuzz(&cfg);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        assert!(a.theorem_violations.is_empty(), "{:#?}", a.theorem_violations);
        assert_eq!(a.instances + a.skipped.len(), 4);
    }
}
