use std::io::Write;
use std::process::{Command, Output, Stdio};

use regtor_cli::{parse_module_expr, render_betti, BettiJson, IdealExpr, ModuleExpr};
use regtor_core::groebner::Ideal;
use regtor_core::resolution::{betti_of_quotient, BettiTable};
use regtor_core::ring::RingContext;

fn regtor(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_regtor"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn regtor");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const SMALL: &str = "ring 32003 [x,y,z]\nideal I = x^3, y^3, x*y - z^2\nideal J = x, y\nideal Q = x^2, y^2, z^2, x*y, x*z, y*z\n";

#[test]
fn residue_field_grid() {
    let r = RingContext::standard(2);
    let t = betti_of_quotient(&Ideal::maximal(&r));
    let g = render_betti(&t);
    assert!(g.lines().any(|l| l.trim() == "total: 1 2 1"), "{g}");
    assert!(g.lines().any(|l| l.trim() == "0: 1 2 1"), "{g}");
}

#[test]
fn empty_table_is_zero() {
    assert_eq!(render_betti(&BettiTable::default()), "0\n");
    let r = RingContext::standard(2);
    let j: serde_json::Value = serde_json::to_value(BettiJson::new(&r, &BettiTable::default())).unwrap();
    assert!(j["reg"].is_null());
    assert!(j["pd"].is_null());
}

#[test]
fn json_round_trip() {
    let r = RingContext::standard(3);
    let i = Ideal::new(r.clone(), vec![r.monomial(&[2, 0, 0]), r.monomial(&[1, 1, 0]), r.monomial(&[0, 2, 1])]).unwrap();
    let t = betti_of_quotient(&i);
    let text = serde_json::to_string(&BettiJson::new(&r, &t)).unwrap();
    let back: BettiJson = serde_json::from_str(&text).unwrap();
    assert_eq!(back.table(), t);
    assert_eq!(back.ring.p, 32003);
    let keys: Vec<&str> = ["\"ring\"", "\"betti\"", "\"reg\"", "\"pd\"", "\"t\""].to_vec();
    let pos: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn module_expressions() {
    assert_eq!(parse_module_expr("S/I").unwrap(), ModuleExpr::Quotient(IdealExpr::Name("I".into())));
    assert_eq!(parse_module_expr("I^3").unwrap(), ModuleExpr::Ideal(IdealExpr::Power("I".into(), 3)));
    assert_eq!(parse_module_expr("S/I*J").unwrap(), ModuleExpr::Quotient(IdealExpr::Product("I".into(), "J".into())));
    assert_eq!(parse_module_expr("I + J").unwrap(), ModuleExpr::Ideal(IdealExpr::Sum("I".into(), "J".into())));
    assert_eq!(
        parse_module_expr("S/intersect(I,J)").unwrap(),
        ModuleExpr::Quotient(IdealExpr::Intersect("I".into(), "J".into()))
    );
    assert!(parse_module_expr("S/I^x").is_err());
    assert!(parse_module_expr("").is_err());
}

#[test]
fn example_pipes_into_betti() {
    let ex = regtor(&["example", "caviglia1"], None);
    assert!(ex.status.success());
    let src = stdout(&ex);
    assert!(src.starts_with("ring 32003 [x1,x2,x3,x4]"));
    let out = regtor(&["betti", "--input", "-", "--json"], Some(&src));
    assert!(out.status.success());
    let j: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(j["t"][1], 3);
    assert_eq!(j["t"][2], 7);
    let grid = stdout(&regtor(&["betti"], Some(&src)));
    let row5 = grid.lines().find(|l| l.trim_start().starts_with("5:")).expect("row 5");
    assert_ne!(row5.split_whitespace().nth(3), Some("."), "{grid}");
}

#[test]
fn output_is_deterministic() {
    let a = regtor(&["betti", "--of", "S/I*J"], Some(SMALL));
    let b = regtor(&["betti", "--of", "S/I*J"], Some(SMALL));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn subcommands_run() {
    for args in [
        vec!["gb"],
        vec!["reg", "--of", "I^2"],
        vec!["initial"],
        vec!["dim", "--of", "S/J"],
        vec!["tor", "--A", "S/I", "--B", "S/J", "--k", "1"],
        vec!["ext", "--of", "S/J", "--k", "2"],
        vec!["betti", "--of", "S/intersect(I,J)", "--json"],
        vec!["torsion", "--of", "Q", "--t", "2"],
        vec!["eliminate", "--of", "Q"],
        vec!["check", "products-powers", "--J", "J"],
        vec!["check", "specialization", "--p", "1"],
        vec!["check", "cm-case", "--A", "S/I", "--J", "J", "--k", "1"],
        vec!["check", "generator-bound", "--I", "Q"],
    ] {
        let o = regtor(&args, Some(SMALL));
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn oracle_flag_agrees() {
    let a = regtor(&["betti", "--json"], Some(SMALL));
    let b = regtor(&["betti", "--json", "--oracle", "--degree-cap", "12"], Some(SMALL));
    let ja: BettiJson = serde_json::from_str(&stdout(&a)).unwrap();
    let jb: BettiJson = serde_json::from_str(&stdout(&b)).unwrap();
    assert_eq!(ja.table(), jb.table());
}

#[test]
fn reduction_and_powers() {
    let src = stdout(&regtor(&["example", "catalecticant"], None));
    let o = regtor(&["power-check", "--json"], Some(&src));
    let j: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(j["s"], 2);
    let mp = stdout(&regtor(&["example", "max-power", "--param", "2"], None));
    let with_j = format!("{mp}ideal J = x1^2, x2^2, x3^2\n");
    let o = regtor(&["reduction"], Some(&with_j));
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(regtor(&["betti"], Some("ring 32003 [x]\nideal I = x - x\n")).status.code(), Some(1));
    assert_eq!(regtor(&["betti"], Some("ring 32003 [x]\nideal I = w\n")).status.code(), Some(1));
    assert_eq!(regtor(&["betti", "--of", "S/K"], Some(SMALL)).status.code(), Some(1));
    assert_eq!(regtor(&["frobnicate"], None).status.code(), Some(1));
    assert_eq!(regtor(&["example", "nope"], None).status.code(), Some(1));
    assert_eq!(regtor(&["check", "nope"], Some(SMALL)).status.code(), Some(1));
    let err = regtor(&["betti"], Some("ring 32003 [x]\nideal I = x +\n"));
    assert!(String::from_utf8_lossy(&err.stderr).contains("line 2"));
}

#[test]
fn check_tor_bound_prints_reports() {
    let o = regtor(
        &["check", "tor-bound", "--A", "S/I", "--B", "S/I", "--j", "0", "--k", "0", "--p", "2", "--q", "1"],
        Some(SMALL),
    );
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("tor-bound [j=0 k=0 p=2 q=1]"));
    let bad = regtor(&["check", "tor-bound", "--p", "2", "--q", "2"], Some(SMALL));
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn hypothesis_failure_exits_two() {
    let src = stdout(&regtor(&["example", "caviglia-pair"], None));
    let o = regtor(&["check", "reg-tor", "--A", "S/J", "--B", "S/L", "--k", "0", "--json"], Some(&src));
    assert_eq!(o.status.code(), Some(2));
    let reps: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let first = &reps[0];
    assert_eq!(first["theorem_id"], "reg-of-tor");
    assert_eq!(first["holds"], "not-applicable");
    assert_eq!(first["lhs"], 7);
    assert_eq!(first["rhs"], 6);
    assert_eq!(first["numeric"], false);
}

#[test]
fn small_fuzz_exits_zero() {
    let o = regtor(&["fuzz", "--count", "4", "--n-max", "3", "--seed", "5", "--jobs", "1", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let rep: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rep["instances"], 4);
    assert_eq!(rep["theorem_violations"].as_array().unwrap().len(), 0);
    let again = regtor(&["fuzz", "--count", "4", "--n-max", "3", "--seed", "5", "--jobs", "1", "--json"], None);
    assert_eq!(o.stdout, again.stdout);
}
