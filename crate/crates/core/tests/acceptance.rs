//! Acceptance run: one PASS/FAIL line per criterion, with timings.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use regtor_core::constructions::{
    catalecticant_space, herzog_hibi_j, monomial_j, orthogonal_complement, named_example, power_max_ideal,
    quadric_rank, random_ideal, Flavor, QuadraticForm, QuadricSpace,
};
use regtor_core::groebner::{binom, Ideal};
use regtor_core::homalg::dim_tor1;
use regtor_core::reesalg::{instant_eliminate, power_is_max_power, reduction_number, sym_power_torsion};
use regtor_core::resolution::{betti_of_quotient, linear_steps, ModulePresentation};
use regtor_core::ring::{FieldSpec, Polynomial, RingContext};
use regtor_core::verify::{check_reg_tor, fuzz, oracle_betti, ClaimKind, FuzzConfig, Verdict};

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e(err: regtor_core::Error) -> String {
    err.to_string()
}

fn field() -> FieldSpec {
    FieldSpec::new(32003).unwrap()
}

fn t(i: &Ideal, p: usize) -> Option<i32> {
    betti_of_quotient(i).t(p)
}

fn caviglia_a() -> Outcome {
    let ex = named_example("caviglia1", None, field()).map_err(e)?;
    let i = &ex.ideals[0].1;
    let b = betti_of_quotient(i);
    ensure(b.t(1) == Some(3) && b.t(2) == Some(7), format!("t_1 = {:?}, t_2 = {:?}", b.t(1), b.t(2)))?;
    let cap = b.entries.keys().map(|&(_, j)| j).max().unwrap() + 1;
    let o = oracle_betti(&ModulePresentation::cyclic(i), cap).map_err(e)?;
    ensure(o.t(2) == Some(7), "Koszul homology disagrees on t_2")?;
    Ok("t_1(S/I) = 3, t_2(S/I) = 7, t_2 confirmed by Koszul homology".into())
}

fn caviglia_b() -> Outcome {
    let mut out = Vec::new();
    for n in [3u32, 4] {
        let ex = named_example("caviglia2", Some(n), field()).map_err(e)?;
        let b = betti_of_quotient(&ex.ideals[0].1);
        let (t2, reg) = (b.t(2), b.reg());
        let want = (n * n) as i32;
        ensure(t2 == Some(want) && reg == Some(want - 2), format!("n = {n}: t_2 = {t2:?}, reg = {reg:?}"))?;
        out.push(format!("n={n}: t_2 = {want}, reg = {}", want - 2));
    }
    Ok(out.join("; "))
}

fn hypothesis_failure() -> Outcome {
    let ex = named_example("caviglia-pair", Some(3), field()).map_err(e)?;
    let (j, l) = (&ex.ideals[0].1, &ex.ideals[1].1);
    let (a, b) = (ModulePresentation::cyclic(j), ModulePresentation::cyclic(l));
    let delta = dim_tor1(&a, &b).map_err(e)?;
    ensure(delta == 2, format!("dim Tor_1 = {delta}"))?;
    let reports = check_reg_tor(&a, &b, 0).map_err(e)?;
    let r = reports.iter().find(|r| r.theorem_id == "reg-of-tor").ok_or("no reg-of-tor report")?;
    ensure(r.holds == Verdict::NotApplicable, format!("verdict {:?}", r.holds))?;
    ensure(r.lhs == Some(7) && r.rhs == Some(6) && !r.numeric, format!("lhs {:?}, rhs {:?}", r.lhs, r.rhs))?;
    let reg_sum = betti_of_quotient(j).reg().zip(betti_of_quotient(l).reg()).map(|(x, y)| x + y);
    ensure(reg_sum == Some(6), "reg T/J + reg T/L is not 6")?;
    Ok("dim Tor_1 = 2; reg Tor_0 = 7 > 6; not-applicable with raw comparison false".into())
}

fn monomial_powers() -> Outcome {
    let r = RingContext::with_prime(4, 32003);
    let j31 = monomial_j(&r, 3, 1).map_err(e)?;
    ensure(power_is_max_power(&j31, 3).map_err(e)?, "J(3,1)^3 != m^9 by spans")?;
    // the same through Groebner bases: S/J^3 vanishes in degree 9
    ensure(j31.power(3).hilbert_function(9) == 0, "J(3,1)^3 misses degree 9 monomials")?;
    let j62 = monomial_j(&r, 6, 2).map_err(e)?;
    ensure(j62.is_subset_of(&j31.power(2)), "J(6,2) not inside J(3,1)^2")?;
    Ok("J(3,1)^3 = m^9 and J(6,2) ⊆ J(3,1)^2".into())
}

fn herzog_hibi() -> Outcome {
    let r = RingContext::with_prime(3, 32003);
    let j = herzog_hibi_j(&r, 4).map_err(e)?;
    let four = power_is_max_power(&j, 4).map_err(e)?;
    let three = power_is_max_power(&j, 3).map_err(e)?;
    ensure(four && !three, format!("J^4 = m^16: {four}, J^3 = m^12: {three}"))?;
    ensure(j.power(4).hilbert_function(16) == 0, "J^4 misses degree 16")?;
    ensure(j.power(3).hilbert_function(12) > 0, "J^3 fills degree 12")?;
    Ok("J^4 = m^16, J^3 != m^12".into())
}

fn example_93() -> Outcome {
    let ex = named_example("ex93", None, field()).map_err(e)?;
    let i = &ex.ideals[0].1;
    ensure(i.mingens().len() == 18, "not 18 generators")?;
    let t1 = t(i, 2);
    ensure(t1 == Some(6), format!("t_1(I) = {t1:?}"))?;
    let steps = linear_steps(i).map_err(e)?;
    ensure(steps == 1, format!("{steps} linear steps"))?;
    let a2 = sym_power_torsion(i, 2).map_err(e)?;
    ensure(a2.reg == Some(11), format!("reg A_2 = {:?}", a2.reg))?;
    ensure(!a2.gen_degrees.is_empty() && a2.gen_degrees.iter().all(|&d| d == 10), "A_2 not generated in degree 10")?;
    Ok("t_1(I) = 6, 1 linear step, reg A_2 = 11, A_2 generated in degree 10".into())
}

fn random_combinations(i: &Ideal, k: usize, seed: u64) -> Ideal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens = i.mingens();
    let p = i.ring.field.p();
    let combos: Vec<Polynomial> = (0..k)
        .map(|_| gens.iter().fold(i.ring.zero(), |acc, g| acc.add(&g.scale(rng.gen_range(1..p)))))
        .collect();
    Ideal::new(i.ring.clone(), combos).unwrap()
}

fn half_way_linear() -> Outcome {
    let r = RingContext::with_prime(3, 32003);
    let i = catalecticant_space(3, field()).and_then(|c| c.ideal(&r)).map_err(e)?;
    ensure(power_is_max_power(&i, 2).map_err(e)?, "I^2 != m^4")?;
    ensure(i.power(2).hilbert_function(4) == 0, "I^2 misses degree 4")?;
    let mut seen = Vec::new();
    for seed in [11u64, 12, 13] {
        let j = random_combinations(&i, 3, seed);
        let rn = reduction_number(&j, &i, 10).map_err(e)?;
        ensure(rn == Some(2), format!("seed {seed}: r_J(I) = {rn:?}"))?;
        // independently: I^3 = J I^2 but I^2 != J I
        ensure(i.power(3).is_subset_of(&j.product(&i.power(2))), "I^3 not in J I^2")?;
        ensure(!i.power(2).is_subset_of(&j.product(&i)), "I^2 inside J I")?;
        seen.push(seed);
    }
    Ok(format!("I^2 = m^4; r_J(I) = 2 for seeds {seen:?}"))
}

fn diag(d: &[u32]) -> QuadraticForm {
    let n = d.len();
    QuadraticForm::new(field(), (0..n).map(|i| (0..n).map(|j| if i == j { d[i] } else { 0 }).collect()).collect())
        .unwrap()
}

fn quadric_rank_steps() -> Outcome {
    let r = RingContext::with_prime(3, 32003);
    let x = |i| r.var(i);
    let forms = [
        (2usize, diag(&[1, 1, 0])),
        (3, diag(&[1, 1, 1])),
        (2, QuadraticForm::from_polynomial(&x(0).mul(&x(1))).map_err(e)?),
        (3, QuadraticForm::from_polynomial(&x(0).mul(&x(1)).add(&x(2).pow(2))).map_err(e)?),
    ];
    let mut out = Vec::new();
    for (rank, q) in forms {
        ensure(quadric_rank(&q) == rank, "rank of the test form")?;
        let v = orthogonal_complement(&QuadricSpace::spanned_by(field(), 3, vec![q]).map_err(e)?).map_err(e)?;
        let steps = linear_steps(&v.ideal(&r).map_err(e)?).map_err(e)?;
        ensure(steps == rank as i64 - 2, format!("rank {rank}: {steps} linear steps"))?;
        out.push(format!("r={rank}: {steps}"));
    }
    Ok(format!("linear steps {}", out.join(", ")))
}

fn instant_elimination() -> Outcome {
    let r = RingContext::with_prime(3, 32003);
    let v = power_max_ideal(&r, 2).map_err(e)?;
    let rep = instant_eliminate(&v).map_err(e)?;
    ensure(rep.hypothesis, "m^2 is not linear for ceil(n/2) steps")?;
    ensure(rep.equal, "annihilator and elimination ideal differ")?;
    // the Veronese surface: T/P in degree d is S_{2d}
    for d in 0..6 {
        let hf = rep.elimination.hilbert_function(d);
        ensure(hf == binom(2 * d as i64 + 2, 2), format!("HF({d}) = {hf}"))?;
    }
    let degs = rep.elimination.minimalized().generator_degrees();
    ensure(degs.len() == 6 && degs.iter().all(|&d| d == 2), "not 6 quadrics")?;
    Ok("ann coker ψ = elimination ideal = Veronese surface ideal (6 quadrics)".into())
}

fn theorem_fuzz() -> Outcome {
    let cfg = FuzzConfig { seed: 2024, count: 200, conjectures: false, ..FuzzConfig::default() };
    let rep = fuzz(&cfg);
    ensure(rep.instances == 200, format!("{} instances ran, skipped {:?}", rep.instances, rep.skipped))?;
    if let Some(w) = rep.theorem_violations.first() {
        return Err(format!(
            "{} violations; first: {} at instance {}\n{}",
            rep.theorem_violations.len(),
            w.report.theorem_id,
            w.index,
            w.source
        ));
    }
    let again = fuzz(&FuzzConfig { count: 12, ..cfg.clone() });
    let head = fuzz(&FuzzConfig { count: 12, ..cfg });
    ensure(serde_json::to_string(&again).unwrap() == serde_json::to_string(&head).unwrap(), "not reproducible")?;
    let per_id: Vec<String> = rep.per_id.iter().map(|(id, (n, a))| format!("{id} {a}/{n}")).collect();
    Ok(format!(
        "{} instances, {} theorem checks ({} applicable), 0 violations, {} near-sharp; applicable/run by id: {}",
        rep.instances,
        rep.theorem_checks,
        rep.applicable_theorem_checks,
        rep.near_sharp.len(),
        per_id.join(", ")
    ))
}

fn oracle_equivalence() -> Outcome {
    let flavors = [Flavor::Forms, Flavor::Monomials, Flavor::MPrimaryForms];
    let mut entries = 0;
    for k in 0..50u64 {
        let n = 2 + (k % 3) as usize;
        let d = 2 + (k / 3 % 2) as u32;
        let flavor = flavors[(k % 3) as usize];
        let mut count = 2 + (k % 4) as usize;
        if flavor == Flavor::MPrimaryForms {
            count = count.max(n);
        }
        let i = random_ideal(n, d, count, 7000 + k, flavor, field()).map_err(e)?;
        let m = ModulePresentation::cyclic(&i);
        let res = betti_of_quotient(&i);
        let cap = res.entries.keys().map(|&(_, j)| j).max().unwrap() + 1;
        let o = oracle_betti(&m, cap).map_err(e)?;
        if o != res {
            return Err(format!("instance {k} (n={n}, d={d}, {flavor:?}) differs: {:?} vs {:?}", o.entries, res.entries));
        }
        entries += res.entries.len();
    }
    Ok(format!("50 ideals, {entries} Betti entries agree"))
}

fn lp_max_power() -> Outcome {
    let cfg = FuzzConfig {
        seed: 31,
        n_range: (3, 3),
        count: 100,
        flavors: vec![Flavor::MPrimaryForms, Flavor::Monomials, Flavor::Forms],
        theorems: false,
        conjectures: true,
        linearly_presented: true,
        ..FuzzConfig::default()
    };
    let rep = fuzz(&cfg);
    let json = serde_json::to_string_pretty(&rep).map_err(|x| x.to_string())?;
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("conjecture-evidence.json");
    std::fs::write(&path, &json).map_err(|x| x.to_string())?;
    ensure(rep.instances == 100, format!("{} instances, skipped {:?}", rep.instances, rep.skipped))?;
    let eu: Vec<_> = rep.conjecture_violations.iter().filter(|w| w.report.theorem_id == "lp-max-power").collect();
    ensure(eu.is_empty(), format!("{} lp-max-power violations", eu.len()))?;
    let (eu_run, eu_applicable) = rep.per_id.get("lp-max-power").copied().unwrap_or_default();
    ensure(eu_applicable > 0, "no applicable lp-max-power check")?;
    ensure(rep.theorem_violations.is_empty(), "theorem violations")?;
    let mut other: BTreeMap<&str, usize> = BTreeMap::new();
    for w in &rep.conjecture_violations {
        *other.entry(w.report.theorem_id.as_str()).or_default() += 1;
    }
    let kinds = rep.conjecture_violations.iter().all(|w| w.report.kind == ClaimKind::Conjecture);
    ensure(kinds, "non-conjecture in the conjecture list")?;
    Ok(format!(
        "100 linearly presented m-primary instances, {eu_applicable}/{eu_run} applicable checks, 0 violations; \
         report in {}; other conjecture violations {other:?}",
        path.display()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 caviglia example A", 5, caviglia_a),
        ("2 caviglia example B", 30, caviglia_b),
        ("3 hypothesis-failure witness", 60, hypothesis_failure),
        ("4 monomial powers", 60, monomial_powers),
        ("5 herzog-hibi threshold", 60, herzog_hibi),
        ("6 sym-torsion example", 120, example_93),
        ("7 half-way linear", 30, half_way_linear),
        ("8 quadric rank and linear steps", 30, quadric_rank_steps),
        ("9 instant elimination", 120, instant_elimination),
        ("10 theorem fuzz", 1800, theorem_fuzz),
        ("11 oracle equivalence", 900, oracle_equivalence),
        ("12 conjecture evidence", 1800, lp_max_power),
    ];
    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let over = took > Duration::from_secs(budget);
        match (&outcome, over) {
            (Ok(msg), false) => println!("PASS [{name}] {msg} ({:.2} s, budget {budget} s)", took.as_secs_f64()),
            (Ok(msg), true) => {
                failed += 1;
                println!("FAIL [{name}] {msg}; took {:.2} s, over the {budget} s budget", took.as_secs_f64())
            }
            (Err(msg), _) => {
                failed += 1;
                println!("FAIL [{name}] {msg} ({:.2} s)", took.as_secs_f64())
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
