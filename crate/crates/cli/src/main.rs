use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use regtor_core::constructions::{
    catalecticant_space, herzog_hibi_j, monomial_j, named_example, power_max_ideal, Flavor, EXAMPLE_NAMES,
};
use regtor_core::groebner::Ideal;
use regtor_core::homalg::{ext_module, finite_summary, summary_upto, tor_module, GradedVectorSpaceSummary};
use regtor_core::reesalg::{instant_eliminate, power_stabilization, reduction_number, sym_power_torsion};
use regtor_core::resolution::{homological_invariants, minimal_free_resolution, BettiTable, ModulePresentation};
use regtor_core::ring::{FieldSpec, RingContext, DEFAULT_PRIME};
use regtor_core::source::{parse_source, print_source, IdealSource};
use regtor_core::verify::{
    check_cm_case, check_generator_bound, check_products_powers, check_reg_tor, check_specialization,
    check_tor_bound, fuzz, oracle_betti, BoundReport, ClaimKind, FuzzConfig, Verdict,
};
use regtor_cli::{parse_ideal_expr, parse_module_expr, render_betti, render_json, BettiJson, CliError};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "regtor", version, about = "Betti numbers, regularity and Tor over prime fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Ideal file, `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis in grevlex.
    Gb {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
    },
    /// Graded Betti table.
    Betti {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "S/I")]
        of: String,
        /// Use Koszul homology up to `--degree-cap` instead of a resolution.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        degree_cap: Option<i32>,
    },
    /// Castelnuovo-Mumford regularity.
    Reg {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "S/I")]
        of: String,
    },
    /// Generators of the grevlex initial ideal.
    Initial {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
    },
    /// Dimension, depth, codimension and projective dimension.
    Dim {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "S/I")]
        of: String,
    },
    /// `Tor_k(A, B)`.
    Tor {
        #[command(flatten)]
        c: Common,
        #[arg(long = "A", default_value = "S/I")]
        a: String,
        #[arg(long = "B", default_value = "S/I")]
        b: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        degree_cap: Option<i32>,
    },
    /// `Ext^k(M, S)`.
    Ext {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "S/I")]
        of: String,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Least `s` with `I^s` equal to a power of the maximal ideal.
    PowerCheck {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
        #[arg(long, default_value_t = 8)]
        power_cap: u32,
    },
    /// Torsion of the symmetric power `Sym_t(I)`.
    Torsion {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
        #[arg(long, default_value_t = 2)]
        t: u32,
    },
    /// Annihilator of the adjoint cokernel against the elimination ideal.
    Eliminate {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
    },
    /// Reduction number of `I` with respect to `J`.
    Reduction {
        #[command(flatten)]
        c: Common,
        #[arg(long, default_value = "I")]
        of: String,
        #[arg(long = "J", default_value = "J")]
        j: String,
        #[arg(long, default_value_t = 10)]
        reduction_cap: u32,
    },
    /// Run one checker and print its reports.
    Check(CheckArgs),
    /// Seeded run of every checker and conjecture on random instances.
    Fuzz(FuzzArgs),
    /// Print a named example in the ideal file format.
    Example {
        name: String,
        /// `n` for the caviglia families, `r` for conca, `d` for the
        /// power and monomial families.
        #[arg(long)]
        param: Option<u32>,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u32,
    },
}

#[derive(Args)]
struct CheckArgs {
    /// tor-bound, cm-case, reg-tor, products-powers, specialization or
    /// generator-bound.
    id: String,
    #[command(flatten)]
    c: Common,
    #[arg(long = "A", default_value = "S/I")]
    a: String,
    #[arg(long = "B", default_value = "S/I")]
    b: String,
    #[arg(long = "I", default_value = "I")]
    i: String,
    #[arg(long = "J")]
    jideal: Option<String>,
    #[arg(long, default_value_t = 0)]
    j: i64,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long)]
    p: Option<i64>,
    #[arg(long)]
    q: Option<i64>,
    #[arg(long, default_value_t = 1)]
    s: u32,
    #[arg(long, default_value_t = 2)]
    t: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct FuzzArgs {
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    #[arg(long, default_value_t = 2)]
    d_min: u32,
    #[arg(long, default_value_t = 3)]
    d_max: u32,
    /// Comma separated: forms, monomials, m-primary-forms.
    #[arg(long, default_value = "forms,monomials,m-primary-forms")]
    flavors: String,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u32,
    #[arg(long, default_value_t = 2)]
    kmax: usize,
    #[arg(long, default_value_t = 2)]
    tmax: u32,
    #[arg(long)]
    no_theorems: bool,
    #[arg(long)]
    no_conjectures: bool,
    #[arg(long)]
    linearly_presented: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

const EXIT_USAGE: u8 = 1;
const EXIT_NOT_APPLICABLE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn load(input: &str) -> Result<IdealSource, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(input)?
    };
    Ok(parse_source(&text)?)
}

fn module(src: &IdealSource, expr: &str) -> Result<ModulePresentation, CliError> {
    parse_module_expr(expr)?.eval(src)
}

fn ideal(src: &IdealSource, expr: &str) -> Result<Ideal, CliError> {
    let e = expr.trim();
    if e.starts_with("S/") {
        return Err(CliError::Usage(format!("`{expr}` is a quotient; an ideal is expected")));
    }
    parse_ideal_expr(e)?.eval(src)
}

fn polys(ring: &RingContext, ps: &[regtor_core::ring::Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.display_with(&ring.names)).collect()
}

fn emit<T: Serialize>(json: bool, value: &T, text: impl FnOnce() -> String) {
    if json {
        print!("{}", render_json(value));
    } else {
        print!("{}", text());
    }
}

fn opt(v: Option<impl ToString>) -> String {
    v.map_or("-inf".to_string(), |x| x.to_string())
}

fn summary_text(s: &GradedVectorSpaceSummary) -> String {
    if s.dims.is_empty() {
        return "0\n".into();
    }
    s.dims.iter().map(|(d, v)| format!("{d}: {v}\n")).collect()
}

fn run(cmd: Cmd) -> Result<u8, CliError> {
    match cmd {
        Cmd::Gb { c, of } => {
            let src = load(&c.input)?;
            let i = ideal(&src, &of)?;
            let g = polys(&src.ring, &i.gb().elements);
            emit(c.json, &g, || g.iter().map(|s| s.clone() + "\n").collect());
        }
        Cmd::Betti { c, of, oracle, degree_cap } => {
            let src = load(&c.input)?;
            let m = module(&src, &of)?;
            let t = if oracle {
                let cap = degree_cap.ok_or_else(|| CliError::Usage("--oracle needs --degree-cap".into()))?;
                oracle_betti(&m, cap)?
            } else {
                let t = minimal_free_resolution(&m).1;
                degree_cap.map_or(t.clone(), |cap| t.truncated(cap))
            };
            print_betti(&src.ring, &t, c.json);
        }
        Cmd::Reg { c, of } => {
            let src = load(&c.input)?;
            let t = minimal_free_resolution(&module(&src, &of)?).1;
            emit(c.json, &serde_json::json!({ "reg": t.reg() }), || opt(t.reg()) + "\n");
        }
        Cmd::Initial { c, of } => {
            let src = load(&c.input)?;
            let i = ideal(&src, &of)?;
            let r = &src.ring;
            let gens: Vec<String> = i.gb().leading_monomials().iter().map(|m| m.display_with(&r.names)).collect();
            emit(c.json, &gens, || gens.iter().map(|s| s.clone() + "\n").collect());
        }
        Cmd::Dim { c, of } => {
            let src = load(&c.input)?;
            let h = homological_invariants(&module(&src, &of)?);
            let v = serde_json::json!({ "dim": h.dim, "depth": h.depth, "codim": h.codim, "pd": h.pd });
            emit(c.json, &v, || {
                format!("dim {}\ndepth {}\ncodim {}\npd {}\n", h.dim, opt(h.depth), h.codim, opt(h.pd))
            });
        }
        Cmd::Tor { c, a, b, k, degree_cap } => {
            let src = load(&c.input)?;
            let t = tor_module(&module(&src, &a)?, &module(&src, &b)?, k)?;
            print_module_summary(&src.ring, &t, degree_cap, c.json)?;
        }
        Cmd::Ext { c, of, k } => {
            let src = load(&c.input)?;
            let e = ext_module(&module(&src, &of)?, k)?;
            print_betti(&src.ring, &minimal_free_resolution(&e).1, c.json);
        }
        Cmd::PowerCheck { c, of, power_cap } => {
            let src = load(&c.input)?;
            let st = power_stabilization(&ideal(&src, &of)?, power_cap)?;
            emit(c.json, &st, || match st.s {
                Some(s) => format!("s = {s}\nnext power confirmed: {}\n", st.next_confirmed),
                None => format!("none <= {power_cap}\n"),
            });
        }
        Cmd::Torsion { c, of, t } => {
            let src = load(&c.input)?;
            let r = sym_power_torsion(&ideal(&src, &of)?, t)?;
            emit(c.json, &r, || {
                format!(
                    "reg {}\ngenerator degrees {:?}\n{}",
                    opt(r.reg),
                    r.gen_degrees,
                    summary_text(&r.degrees)
                )
            });
        }
        Cmd::Eliminate { c, of } => {
            let src = load(&c.input)?;
            let e = instant_eliminate(&ideal(&src, &of)?)?;
            let tr = &e.t_ring;
            let v = serde_json::json!({
                "linear_steps": e.linear_steps,
                "hypothesis": e.hypothesis,
                "equal": e.equal,
                "annihilator": polys(tr, e.annihilator.gens()),
                "elimination": polys(tr, e.elimination.gens()),
            });
            emit(c.json, &v, || {
                format!(
                    "linear steps {}\nhypothesis {}\nequal {}\nannihilator {}\nelimination {}\n",
                    e.linear_steps,
                    e.hypothesis,
                    e.equal,
                    polys(tr, e.annihilator.gens()).join(", "),
                    polys(tr, e.elimination.gens()).join(", ")
                )
            });
        }
        Cmd::Reduction { c, of, j, reduction_cap } => {
            let src = load(&c.input)?;
            let r = reduction_number(&ideal(&src, &j)?, &ideal(&src, &of)?, reduction_cap)?;
            emit(c.json, &serde_json::json!({ "reduction_number": r }), || match r {
                Some(r) => format!("{r}\n"),
                None => format!("exceeded {reduction_cap}\n"),
            });
        }
        Cmd::Check(args) => return check(args),
        Cmd::Fuzz(args) => return run_fuzz(args),
        Cmd::Example { name, param, vars, prime } => {
            let field = FieldSpec::new(prime)?;
            let (ring, ideals) = example(&name, param, vars, field)?;
            print!("{}", print_source(&ring, &ideals));
        }
    }
    Ok(0)
}

fn print_betti(ring: &RingContext, t: &BettiTable, json: bool) {
    emit(json, &BettiJson::new(ring, t), || render_betti(t));
}

fn print_module_summary(
    ring: &RingContext,
    m: &ModulePresentation,
    cap: Option<i32>,
    json: bool,
) -> Result<(), CliError> {
    let t = minimal_free_resolution(m).1;
    let summary = match finite_summary(m) {
        Ok(s) => s,
        Err(_) => summary_upto(m, cap.unwrap_or_else(|| t.reg().unwrap_or(0) + 5)),
    };
    let v = serde_json::json!({
        "dim": m.dim(),
        "hilbert_function": summary.dims.iter().map(|(d, v)| (*d, *v)).collect::<Vec<_>>(),
        "resolution": BettiJson::new(ring, &t),
    });
    emit(json, &v, || {
        format!("dim {}\nhilbert function\n{}betti\n{}", m.dim(), summary_text(&summary), render_betti(&t))
    });
    Ok(())
}

fn example(name: &str, param: Option<u32>, vars: usize, field: FieldSpec) -> Result<(RingContext, Vec<(String, Ideal)>), CliError> {
    let ring = || -> Result<RingContext, CliError> {
        Ok(RingContext::new((1..=vars).map(|i| format!("x{i}")).collect(), field)?)
    };
    let one = |r: RingContext, i: Ideal| Ok((r, vec![("I".to_string(), i)]));
    match name {
        "max-power" => {
            let r = ring()?;
            let i = power_max_ideal(&r, param.unwrap_or(2))?;
            one(r, i)
        }
        "monomial-j" => {
            let r = ring()?;
            let i = monomial_j(&r, param.unwrap_or(3), 1)?;
            one(r, i)
        }
        "herzog-hibi" => {
            let r = ring()?;
            let i = herzog_hibi_j(&r, param.unwrap_or(4))?;
            one(r, i)
        }
        "catalecticant" => {
            let r = ring()?;
            let i = catalecticant_space(vars, field)?.ideal(&r)?;
            one(r, i)
        }
        _ if EXAMPLE_NAMES.contains(&name) => {
            let e = named_example(name, param, field)?;
            Ok((e.ring, e.ideals))
        }
        _ => Err(CliError::Usage(format!(
            "unknown example `{name}`; known: {}, max-power, monomial-j, herzog-hibi, catalecticant",
            EXAMPLE_NAMES.join(", ")
        ))),
    }
}

fn report_line(r: &BoundReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let verdict = match r.holds {
        Verdict::Holds => "holds",
        Verdict::Fails => "FAILS",
        Verdict::NotApplicable => "not-applicable",
    };
    let body = match r.relation {
        regtor_core::verify::Relation::Le => format!("{} <= {}", opt(r.lhs), opt(r.rhs)),
        regtor_core::verify::Relation::Eq => format!("{} = {}", opt(r.lhs), opt(r.rhs)),
        regtor_core::verify::Relation::Statement => format!("statement {}", if r.numeric { "true" } else { "false" }),
    };
    let mut s = format!("{} [{}] {body}: {verdict}", r.theorem_id, params.join(" "));
    if r.holds == Verdict::NotApplicable && r.relation != regtor_core::verify::Relation::Statement {
        s += &format!(" (raw comparison {})", if r.numeric { "true" } else { "false" });
    }
    if let Some(parts) = r.rhs_parts {
        s += &format!(" X={} Y={} Z={}", opt(parts[0]), opt(parts[1]), opt(parts[2]));
    }
    for h in &r.hypothesis_results {
        let w: Vec<String> = h.witness.iter().map(|(k, v)| format!("{k}={}", opt(*v))).collect();
        s += &format!("\n  hypothesis {}: {}{}", h.name, if h.pass { "pass" } else { "fail" }, if w.is_empty() {
            String::new()
        } else {
            format!(" ({})", w.join(", "))
        });
    }
    if let Some(n) = &r.note {
        s += &format!("\n  note: {n}");
    }
    s + "\n"
}

/// Exit 3 on a theorem violation, 2 when the first report is not
/// applicable, 0 otherwise.
fn check(a: CheckArgs) -> Result<u8, CliError> {
    let src = load(&a.c.input)?;
    let n = src.ring.n() as i64;
    let reports = match a.id.as_str() {
        "tor-bound" => {
            let total = n - a.j + a.k as i64;
            let (p, q) = match (a.p, a.q) {
                (Some(p), Some(q)) => (p, q),
                (Some(p), None) => (p, total - p),
                (None, Some(q)) => (total - q, q),
                (None, None) => return Err(CliError::Usage("tor-bound needs --p or --q".into())),
            };
            check_tor_bound(&module(&src, &a.a)?, &module(&src, &a.b)?, a.j, a.k, p, q)?
        }
        "cm-case" => {
            let jname = a.jideal.as_deref().unwrap_or("J");
            check_cm_case(&module(&src, &a.a)?, &ideal(&src, jname)?, a.j, a.k)?
        }
        "reg-tor" => check_reg_tor(&module(&src, &a.a)?, &module(&src, &a.b)?, a.k)?,
        "products-powers" => {
            let j = a.jideal.as_deref().map(|e| ideal(&src, e)).transpose()?;
            check_products_powers(&ideal(&src, &a.i)?, j.as_ref(), a.t)?
        }
        "specialization" => {
            let p = a.p.unwrap_or(1);
            if p < 0 {
                return Err(CliError::Usage("--p must be nonnegative".into()));
            }
            check_specialization(&ideal(&src, &a.i)?, p as usize, a.s, a.seed)?
        }
        "generator-bound" => check_generator_bound(&ideal(&src, &a.i)?)?,
        other => {
            return Err(CliError::Usage(format!(
                "unknown check `{other}`; known: tor-bound, cm-case, reg-tor, products-powers, specialization, generator-bound"
            )))
        }
    };
    emit(a.c.json, &reports, || reports.iter().map(report_line).collect());
    let violation = reports.iter().any(|r| r.kind == ClaimKind::Theorem && r.is_violation());
    Ok(if violation {
        EXIT_VIOLATION
    } else if reports.first().is_some_and(|r| r.holds == Verdict::NotApplicable) {
        EXIT_NOT_APPLICABLE
    } else {
        0
    })
}

fn run_fuzz(a: FuzzArgs) -> Result<u8, CliError> {
    let flavors = a
        .flavors
        .split(',')
        .map(|s| s.trim().parse::<Flavor>())
        .collect::<Result<Vec<_>, _>>()?;
    if a.n_min > a.n_max || a.d_min > a.d_max || flavors.is_empty() {
        return Err(CliError::Usage("empty fuzz range".into()));
    }
    let cfg = FuzzConfig {
        seed: a.seed,
        n_range: (a.n_min, a.n_max),
        d_range: (a.d_min, a.d_max),
        count: a.count,
        flavors,
        prime: a.prime,
        kmax: a.kmax,
        tmax: a.tmax,
        theorems: !a.no_theorems,
        conjectures: !a.no_conjectures,
        linearly_presented: a.linearly_presented,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rep = pool.install(|| fuzz(&cfg));
    emit(a.json, &rep, || {
        let mut s = format!(
            "instances {}\nhypothesis-satisfying {}\ntheorem checks {} (applicable {})\ntheorem violations {}\n\
             conjecture checks {} (applicable {})\nconjecture violations {}\nnear-sharp {}\nskipped {}\n",
            rep.instances,
            rep.hypothesis_satisfying,
            rep.theorem_checks,
            rep.applicable_theorem_checks,
            rep.theorem_violations.len(),
            rep.conjecture_checks,
            rep.applicable_conjecture_checks,
            rep.conjecture_violations.len(),
            rep.near_sharp.len(),
            rep.skipped.len(),
        );
        for w in rep.theorem_violations.iter().chain(&rep.conjecture_violations) {
            s += &format!("\ninstance {}\n{}{}", w.index, w.source, report_line(&w.report));
        }
        for (id, count) in &rep.informational_failures {
            s += &format!("informational {id}: {count} false\n");
        }
        s += &format!("note: {}\n", rep.gin_caveat);
        s
    });
    Ok(if rep.theorem_violations.is_empty() { 0 } else { EXIT_VIOLATION })
}
