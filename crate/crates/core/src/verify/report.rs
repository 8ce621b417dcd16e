//! Report types shared by the checkers and the fuzzer.

use serde::{Deserialize, Serialize};

/// Outcome of one statement instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

/// Proven statements, open conjectures, and numbers recorded for reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Theorem,
    Conjecture,
    Informational,
}

/// How `lhs` and `rhs` are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    /// `lhs <= rhs`, with `None` as minus infinity.
    Le,
    /// `lhs == rhs`.
    Eq,
    /// A yes/no statement; `lhs` and `rhs` are absent.
    Statement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypothesis {
    pub name: String,
    pub pass: bool,
    pub witness: Vec<(String, Option<i64>)>,
}

impl Hypothesis {
    pub fn new(name: &str, pass: bool) -> Self {
        Hypothesis { name: name.into(), pass, witness: Vec::new() }
    }

    pub fn with(mut self, key: &str, value: impl Into<Option<i64>>) -> Self {
        self.witness.push((key.into(), value.into()));
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem_id: String,
    pub kind: ClaimKind,
    /// Indices and parameters of this instance, e.g. `j`, `k`, `p`, `q`.
    pub params: Vec<(String, i64)>,
    pub hypothesis_results: Vec<Hypothesis>,
    pub relation: Relation,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    /// `(X, Y, Z)` for the three-term bound.
    pub rhs_parts: Option<[Option<i64>; 3]>,
    /// Outcome of the comparison itself, ignoring hypotheses.
    pub numeric: bool,
    pub holds: Verdict,
    pub sharp: bool,
    pub note: Option<String>,
}

/// `a <= b` with `None` as minus infinity.
pub fn le(a: Option<i64>, b: Option<i64>) -> bool {
    match (a, b) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

/// Maximum with `None` as minus infinity.
pub fn max_opt(xs: impl IntoIterator<Item = Option<i64>>) -> Option<i64> {
    xs.into_iter().flatten().max()
}

/// Sum with `None` absorbing.
pub fn add_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    Some(a? + b?)
}

impl BoundReport {
    fn base(id: &str, kind: ClaimKind, hyps: Vec<Hypothesis>, relation: Relation) -> Self {
        BoundReport {
            theorem_id: id.into(),
            kind,
            params: Vec::new(),
            hypothesis_results: hyps,
            relation,
            lhs: None,
            rhs: None,
            rhs_parts: None,
            numeric: true,
            holds: Verdict::NotApplicable,
            sharp: false,
            note: None,
        }
    }

    fn settle(mut self) -> Self {
        self.holds = if !self.hypotheses_pass() {
            Verdict::NotApplicable
        } else if self.numeric {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        self
    }

    /// `lhs <= rhs` under `hyps`.
    pub fn bound(id: &str, kind: ClaimKind, hyps: Vec<Hypothesis>, lhs: Option<i64>, rhs: Option<i64>) -> Self {
        let mut r = Self::base(id, kind, hyps, Relation::Le);
        r.lhs = lhs;
        r.rhs = rhs;
        r.numeric = le(lhs, rhs);
        r.sharp = lhs == rhs;
        r.settle()
    }

    /// `lhs == rhs` under `hyps`.
    pub fn equality(id: &str, kind: ClaimKind, hyps: Vec<Hypothesis>, lhs: Option<i64>, rhs: Option<i64>) -> Self {
        let mut r = Self::base(id, kind, hyps, Relation::Eq);
        r.lhs = lhs;
        r.rhs = rhs;
        r.numeric = lhs == rhs;
        r.sharp = r.numeric;
        r.settle()
    }

    /// A yes/no claim under `hyps`.
    pub fn statement(id: &str, kind: ClaimKind, hyps: Vec<Hypothesis>, ok: bool) -> Self {
        let mut r = Self::base(id, kind, hyps, Relation::Statement);
        r.numeric = ok;
        r.settle()
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.push((key.into(), value));
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.note = Some(text.into());
        self
    }

    pub fn hypotheses_pass(&self) -> bool {
        self.hypothesis_results.iter().all(|h| h.pass)
    }

    /// A failed proven statement whose hypotheses all hold.
    pub fn is_violation(&self) -> bool {
        self.holds == Verdict::Fails
    }

    /// Applicable inequality with `rhs - lhs <= 1`.
    pub fn near_sharp(&self) -> bool {
        self.holds == Verdict::Holds
            && self.relation == Relation::Le
            && matches!((self.lhs, self.rhs), (Some(l), Some(r)) if r - l <= 1)
    }
}
