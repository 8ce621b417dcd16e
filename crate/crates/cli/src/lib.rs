//! Rendering and module expressions for the `regtor` binary.

use regtor_core::groebner::Ideal;
use regtor_core::resolution::{BettiTable, ModulePresentation};
use regtor_core::ring::RingContext;
use regtor_core::source::IdealSource;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] regtor_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
}

/// Macaulay2-style grid: columns are homological degrees, rows `j - i`.
/// The zero module renders as `0`.
pub fn render_betti(t: &BettiTable) -> String {
    if t.entries.is_empty() {
        return "0\n".to_string();
    }
    let ncols = t.entries.keys().map(|&(i, _)| i).max().unwrap() + 1;
    let rows: Vec<i32> = {
        let lo = t.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
        let hi = t.entries.keys().map(|&(i, j)| j - i as i32).max().unwrap();
        (lo..=hi).collect()
    };
    let cell = |i: usize, r: i32| -> String {
        match t.betti(i, r + i as i32) {
            0 => ".".to_string(),
            b => b.to_string(),
        }
    };
    let totals: Vec<String> = (0..ncols).map(|i| t.total(i).to_string()).collect();
    let mut width = vec![0usize; ncols];
    for i in 0..ncols {
        width[i] = totals[i].len().max(i.to_string().len());
        for &r in &rows {
            width[i] = width[i].max(cell(i, r).len());
        }
    }
    let label_w = rows.iter().map(|r| format!("{r}:").len()).max().unwrap().max("total:".len());
    let line = |label: &str, cells: Vec<String>| -> String {
        let mut s = format!("{label:>label_w$}");
        for (i, c) in cells.iter().enumerate() {
            s.push(' ');
            s.push_str(&format!("{c:>w$}", w = width[i]));
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line("", (0..ncols).map(|i| i.to_string()).collect());
    out += &line("total:", totals);
    for &r in &rows {
        out += &line(&format!("{r}:"), (0..ncols).map(|i| cell(i, r)).collect());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingJson {
    pub p: u32,
    pub vars: Vec<String>,
}

/// Betti data in the JSON schema; `None` is minus infinity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub ring: RingJson,
    pub betti: Vec<(usize, i32, u64)>,
    pub reg: Option<i32>,
    pub pd: Option<usize>,
    pub t: Vec<Option<i32>>,
}

impl BettiJson {
    pub fn new(ring: &RingContext, t: &BettiTable) -> Self {
        BettiJson {
            ring: RingJson { p: ring.field.p(), vars: ring.names.clone() },
            betti: t.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect(),
            reg: t.reg(),
            pd: t.pd(),
            t: t.t_vector(),
        }
    }

    pub fn table(&self) -> BettiTable {
        BettiTable { entries: self.betti.iter().map(|&(i, j, b)| ((i, j), b)).collect() }
    }
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

/// `S/<ideal>` or an ideal expression: `I`, `I^k`, `I*J`, `I+J`,
/// `intersect(I,J)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Quotient(IdealExpr),
    Ideal(IdealExpr),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    Name(String),
    Power(String, u32),
    Product(String, String),
    Sum(String, String),
    Intersect(String, String),
}

pub fn parse_module_expr(text: &str) -> Result<ModuleExpr, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    match s.strip_prefix("S/") {
        Some(rest) => Ok(ModuleExpr::Quotient(parse_ideal_expr(rest)?)),
        None => Ok(ModuleExpr::Ideal(parse_ideal_expr(&s)?)),
    }
}

pub fn parse_ideal_expr(text: &str) -> Result<IdealExpr, CliError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::Usage(format!("cannot read module expression `{text}`"));
    let name = |x: &str| -> Result<String, CliError> {
        let ok = !x.is_empty()
            && x.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && x.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        ok.then(|| x.to_string()).ok_or_else(bad)
    };
    if let Some(inner) = s.strip_prefix("intersect(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        return Ok(IdealExpr::Intersect(name(a)?, name(b)?));
    }
    if let Some((a, k)) = s.split_once('^') {
        let k: u32 = k.parse().map_err(|_| bad())?;
        return Ok(IdealExpr::Power(name(a)?, k));
    }
    if let Some((a, b)) = s.split_once('*') {
        return Ok(IdealExpr::Product(name(a)?, name(b)?));
    }
    if let Some((a, b)) = s.split_once('+') {
        return Ok(IdealExpr::Sum(name(a)?, name(b)?));
    }
    Ok(IdealExpr::Name(name(&s)?))
}

fn lookup<'a>(src: &'a IdealSource, name: &str) -> Result<&'a Ideal, CliError> {
    src.get(name).ok_or_else(|| CliError::Usage(format!("no ideal named `{name}` in the input")))
}

impl IdealExpr {
    pub fn eval(&self, src: &IdealSource) -> Result<Ideal, CliError> {
        Ok(match self {
            IdealExpr::Name(a) => lookup(src, a)?.clone(),
            IdealExpr::Power(a, k) => lookup(src, a)?.power(*k),
            IdealExpr::Product(a, b) => lookup(src, a)?.product(lookup(src, b)?),
            IdealExpr::Sum(a, b) => lookup(src, a)?.sum(lookup(src, b)?),
            IdealExpr::Intersect(a, b) => lookup(src, a)?.intersect(lookup(src, b)?),
        })
    }
}

impl ModuleExpr {
    pub fn ideal(&self) -> &IdealExpr {
        match self {
            ModuleExpr::Quotient(e) | ModuleExpr::Ideal(e) => e,
        }
    }

    pub fn eval(&self, src: &IdealSource) -> Result<ModulePresentation, CliError> {
        let i = self.ideal().eval(src)?;
        Ok(match self {
            ModuleExpr::Quotient(_) => ModulePresentation::cyclic(&i),
            ModuleExpr::Ideal(_) => ModulePresentation::of_ideal(&i),
        })
    }
}
