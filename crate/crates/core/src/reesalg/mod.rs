//! Symmetric power torsion, the adjoint matrix, instant elimination and
//! reduction numbers.

mod span;
mod torsion;

use serde::{Deserialize, Serialize};

pub use span::DegreeSpan;
pub use torsion::{sym_power_presentation, sym_power_torsion, TorsionReport};

use crate::groebner::{elimination_ideal, Ideal};
use crate::homalg::annihilator;
use crate::resolution::{betti_of_quotient, linear_steps_from, ModulePresentation};
use crate::ring::{GradedFreeModule, ModuleMap, Monomial, Polynomial, RingContext};
use crate::{Error, Result};

pub const DEFAULT_POWER_CAP: u32 = 8;
pub const DEFAULT_REDUCTION_CAP: u32 = 10;

/// A linear presentation and its adjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjointPair {
    pub phi: ModuleMap,
    pub psi: ModuleMap,
}

/// Linear coefficient of variable `v` in `f`.
fn linear_coeff(f: &Polynomial, v: usize) -> u32 {
    f.coeff(&Monomial::var(f.nvars(), v))
}

/// Rereads an `N x M` matrix of linear forms in `n` variables as an
/// `n x M` matrix of linear forms in `N` new variables.
pub fn adjoint_matrix(phi: &ModuleMap) -> Result<AdjointPair> {
    let (n, field) = (phi.n, phi.field);
    let big_n = phi.nrows();
    for c in phi.columns() {
        if c.iter().any(|p| !p.is_zero() && (p.degree() != Some(1) || !p.is_homogeneous())) {
            return Err(Error::NonLinear);
        }
    }
    let cols = phi
        .columns()
        .iter()
        .map(|c| {
            (0..n)
                .map(|i| {
                    let terms = (0..big_n).map(|k| (Monomial::var(big_n, k), linear_coeff(&c[k], i))).collect();
                    Polynomial::from_terms(big_n, field, terms)
                })
                .collect()
        })
        .collect();
    let psi = ModuleMap::from_columns(
        big_n,
        field,
        GradedFreeModule::new(vec![1; phi.ncols()]),
        GradedFreeModule::new(vec![0; n]),
        cols,
    )?;
    Ok(AdjointPair { phi: phi.clone(), psi })
}

/// Outcome of [`instant_eliminate`].
#[derive(Clone, Debug)]
pub struct EliminationReport {
    pub t_ring: RingContext,
    pub annihilator: Ideal,
    pub elimination: Ideal,
    pub linear_steps: i64,
    /// Whether the resolution is linear for at least `ceil(n/2)` steps.
    pub hypothesis: bool,
    pub equal: bool,
}

/// `ann coker ψ` next to the ideal of the image of the map given by `v`.
pub fn instant_eliminate(v: &Ideal) -> Result<EliminationReport> {
    let v = v.minimalized();
    let d = v.single_degree().ok_or(Error::MixedDegrees)?;
    if !v.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let (n, field) = (v.n(), v.ring.field);
    let steps = linear_steps_from(&betti_of_quotient(&v), d as i32);
    if steps < 1 {
        return Err(Error::InvalidParameter("no linear presentation".into()));
    }
    let pres = ModulePresentation::of_ideal(&v);
    let lin: Vec<usize> = (0..pres.relations.ncols())
        .filter(|&j| pres.relations.source.twists[j] == d as i32 + 1)
        .collect();
    let phi = pres.relations.select_columns(&lin);
    let pair = adjoint_matrix(&phi)?;
    let big_n = phi.nrows();
    if n + big_n > crate::ring::MAX_VARS {
        return Err(Error::TooManyVariables { got: n + big_n, max: crate::ring::MAX_VARS });
    }
    let t_names: Vec<String> = (1..=big_n).map(|k| format!("T{k}")).collect();
    let t_ring = RingContext::new(t_names.clone(), field)?;
    let ann = annihilator(&ModulePresentation::new(&t_ring, pair.psi)?);

    // T_k - f_k in x..., T...; x has weight 1 and T weight d
    let mut names = v.ring.names.clone();
    names.extend(t_names);
    let big = RingContext::new(names, field)?;
    let gens: Vec<Polynomial> = pres
        .cover
        .twists
        .iter()
        .enumerate()
        .map(|(k, _)| big.var(n + k).sub(&v.mingens()[k].embed(n + big_n, 0)))
        .collect();
    let mut w = vec![1u32; n];
    w.extend(std::iter::repeat_n(d, big_n));
    let (_, elim) = elimination_ideal(&big, &gens, n, Some(&w))?;
    let elim = Ideal::new(t_ring.clone(), elim)?.minimalized();
    let equal = ann.same_as(&elim);
    let hypothesis = steps >= n.div_ceil(2) as i64;
    Ok(EliminationReport { t_ring, annihilator: ann, elimination: elim, linear_steps: steps, hypothesis, equal })
}

/// `I^{r+1} = J I^r` tested in degree `(r+1) d`.
fn reduction_holds(j_gens: &[Polynomial], i_gens: &[Polynomial], ipow: &DegreeSpan, d: u32) -> bool {
    ipow.times(i_gens, d).dim() == ipow.times(j_gens, d).dim()
}

/// Reduction number, or `None` beyond `cap`.
///
/// Both ideals must be generated in the same single degree; then every
/// power is generated in one degree and equality is a rank comparison.
pub fn reduction_number(j: &Ideal, i: &Ideal, cap: u32) -> Result<Option<u32>> {
    if !j.is_subset_of(i) {
        return Err(Error::NotContained);
    }
    let i = i.minimalized();
    let j = j.minimalized();
    let d = i.single_degree().ok_or(Error::MixedDegrees)?;
    if j.single_degree() != Some(d) {
        return Err(Error::MixedDegrees);
    }
    let (n, field) = (i.n(), i.ring.field);
    // I^0 = S: the span of 1 in degree 0
    let mut ipow = DegreeSpan::of(n, field, 0, &[Polynomial::constant(n, field, 1)]);
    for r in 0..=cap {
        if reduction_holds(j.gens(), i.gens(), &ipow, d) {
            return Ok(Some(r));
        }
        ipow = ipow.times(i.gens(), d);
    }
    Ok(None)
}

/// Whether `I^s = m^{ds}` for `I` generated in degree `d`.
pub fn power_is_max_power(i: &Ideal, s: u32) -> Result<bool> {
    let i = i.minimalized();
    let d = i.single_degree().ok_or(Error::MixedDegrees)?;
    let (n, field) = (i.n(), i.ring.field);
    let mut span = DegreeSpan::of(n, field, d, i.gens());
    for _ in 1..s {
        span = span.times(i.gens(), d);
    }
    Ok(span.is_full())
}

/// Stabilization index of `I^s = m^{ds}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilization {
    /// Least `s <= cap` with `I^s = m^{ds}`.
    pub s: Option<u32>,
    /// `I^{s+1} = m^{d(s+1)}` was confirmed.
    pub next_confirmed: bool,
}

pub fn power_stabilization(i: &Ideal, cap: u32) -> Result<Stabilization> {
    let i = i.minimalized();
    let d = i.single_degree().ok_or(Error::MixedDegrees)?;
    if !i.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let (n, field) = (i.n(), i.ring.field);
    let mut span = DegreeSpan::of(n, field, d, i.gens());
    for s in 1..=cap {
        if span.is_full() {
            let next = span.times(i.gens(), d).is_full();
            return Ok(Stabilization { s: Some(s), next_confirmed: next });
        }
        span = span.times(i.gens(), d);
    }
    Ok(Stabilization { s: None, next_confirmed: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalecticant_space, herzog_hibi_j, power_max_ideal};
    use crate::ring::FieldSpec;

    #[test]
    fn adjoint_of_column() {
        let r = RingContext::standard(2);
        let phi = ModuleMap::from_columns(
            2,
            r.field,
            GradedFreeModule::new(vec![2]),
            GradedFreeModule::new(vec![1, 1]),
            vec![vec![r.var(0), r.var(1)]],
        )
        .unwrap();
        let a = adjoint_matrix(&phi).unwrap();
        assert_eq!(a.psi.nrows(), 2);
        assert_eq!(a.psi.entry(0, 0), &Polynomial::var(2, r.field, 0));
        assert_eq!(a.psi.entry(1, 0), &Polynomial::var(2, r.field, 1));
        let back = adjoint_matrix(&a.psi).unwrap().psi;
        assert_eq!(back.columns(), phi.columns());
        let bad = ModuleMap::from_columns(
            2,
            r.field,
            GradedFreeModule::new(vec![2]),
            GradedFreeModule::new(vec![0]),
            vec![vec![r.monomial(&[2, 0])]],
        )
        .unwrap();
        assert_eq!(adjoint_matrix(&bad), Err(Error::NonLinear));
    }

    #[test]
    fn stabilization() {
        let r = RingContext::standard(3);
        let m2 = power_max_ideal(&r, 2).unwrap();
        assert_eq!(power_stabilization(&m2, 8).unwrap().s, Some(1));
        let hh = herzog_hibi_j(&r, 4).unwrap();
        let st = power_stabilization(&hh, 8).unwrap();
        assert_eq!(st.s, Some(4));
        assert!(st.next_confirmed);
        let cat = catalecticant_space(3, FieldSpec::default()).unwrap().ideal(&r).unwrap();
        assert_eq!(power_stabilization(&cat, 8).unwrap().s, Some(2));
    }

    #[test]
    fn reduction_numbers() {
        let r = RingContext::standard(3);
        let m2 = power_max_ideal(&r, 2).unwrap();
        assert_eq!(reduction_number(&m2, &m2, 10).unwrap(), Some(0));
        let j = Ideal::new(r.clone(), (0..3).map(|k| r.var(k).pow(2)).collect()).unwrap();
        assert_eq!(reduction_number(&j, &m2, 10).unwrap(), Some(1));
        assert_eq!(reduction_number(&m2, &j, 10), Err(Error::NotContained));
    }

    #[test]
    fn rational_normal_curve() {
        let r = RingContext::standard(2);
        let rep = instant_eliminate(&power_max_ideal(&r, 3).unwrap()).unwrap();
        assert!(rep.hypothesis);
        assert!(rep.equal);
        assert_eq!(rep.elimination.generator_degrees(), vec![2, 2, 2]);
    }
}
