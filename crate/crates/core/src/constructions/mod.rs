//! Named ideals and quadric spaces, plus seeded random instances.

mod quadrics;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::groebner::{Ideal, MonomialIdeal};
use crate::ring::{linalg, FieldSpec, Monomial, Polynomial, RingContext};
use crate::{Error, Result};

pub use quadrics::{
    apolar_ideal_of_quadric, catalecticant_space, orthogonal_complement, quadric_rank, QuadraticForm,
    QuadricSpace,
};

pub fn power_max_ideal(ring: &RingContext, d: u32) -> Result<Ideal> {
    if d == 0 {
        return Err(Error::InvalidParameter("d must be at least 1".into()));
    }
    Ok(Ideal::from_monomials(ring.clone(), &MonomialIdeal::power_of_max(ring.n(), d)))
}

/// `k` seeded random linear forms, checked to be independent.
pub fn linear_subspace_ideal(ring: &RingContext, k: usize, seed: u64) -> Result<Ideal> {
    let n = ring.n();
    if k > n {
        return Err(Error::TooManyForms { k, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = ring.field.p();
    for _ in 0..16 {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect()).collect();
        if linalg::rank(ring.field, n, rows.clone()) == k {
            let gens = rows.iter().map(|r| linear_form(ring, r)).collect();
            return Ideal::new(ring.clone(), gens);
        }
    }
    Err(Error::RetriesExhausted(16))
}

pub(crate) fn linear_form(ring: &RingContext, coeffs: &[u32]) -> Polynomial {
    let terms = coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(ring.n(), i), c)).collect();
    Polynomial::from_terms(ring.n(), ring.field, terms)
}

/// Monomials of degree `d` supported on at most `q + 1` variables.
pub fn monomial_j(ring: &RingContext, d: u32, q: usize) -> Result<Ideal> {
    let n = ring.n();
    if q + 1 > n || d == 0 {
        return Err(Error::InvalidParameter(format!("need 1 <= q+1 <= {n} and d >= 1")));
    }
    let gens = Monomial::all_of_degree(n, d)
        .into_iter()
        .filter(|m| m.support_mask().count_ones() as usize <= q + 1);
    Ok(Ideal::from_monomials(ring.clone(), &MonomialIdeal::new(n, gens)))
}

/// `m (x_1^{d-1}, ..., x_n^{d-1})`.
pub fn herzog_hibi_j(ring: &RingContext, d: u32) -> Result<Ideal> {
    if d < 2 {
        return Err(Error::InvalidParameter("d must be at least 2".into()));
    }
    let n = ring.n();
    let m = MonomialIdeal::power_of_max(n, 1);
    let pw = MonomialIdeal::new(n, (0..n).map(|i| Monomial::var(n, i).pow(d - 1)));
    Ok(Ideal::from_monomials(ring.clone(), &m.product(&pw)))
}

/// Names accepted by [`named_example`].
pub const EXAMPLE_NAMES: &[&str] = &["caviglia1", "caviglia2", "conca", "ex93", "caviglia-pair"];

/// A named example as a ring and one or more labelled ideals.
#[derive(Clone, Debug)]
pub struct Example {
    pub ring: RingContext,
    pub ideals: Vec<(String, Ideal)>,
}

fn ring_named(names: &[&str], field: FieldSpec) -> RingContext {
    RingContext::new(names.iter().map(|s| s.to_string()).collect(), field).expect("valid ring")
}

fn mono(r: &RingContext, e: &[u32]) -> Polynomial {
    r.monomial(e)
}

/// Builds a named example. `param` is `n` for `caviglia2` and
/// `caviglia-pair`, `r` for `conca`, and ignored otherwise.
pub fn named_example(name: &str, param: Option<u32>, field: FieldSpec) -> Result<Example> {
    let bad = |m: &str| Error::InvalidParameter(m.to_string());
    match name {
        "caviglia1" => {
            let r = ring_named(&["x1", "x2", "x3", "x4"], field);
            let mut gens: Vec<Polynomial> = (0..4).map(|i| r.var(i).pow(3)).collect();
            let s = (0..4).fold(r.zero(), |a, i| a.add(&r.var(i)));
            gens.push(s.pow(3));
            let i = Ideal::new(r.clone(), gens)?;
            Ok(Example { ring: r, ideals: vec![("I".into(), i)] })
        }
        "caviglia2" => {
            let n = param.unwrap_or(3);
            if n < 2 {
                return Err(bad("caviglia2 needs n >= 2"));
            }
            let r = ring_named(&["x1", "x2", "x3", "x4"], field);
            let i = Ideal::new(r.clone(), caviglia2_gens(&r, n))?;
            Ok(Example { ring: r, ideals: vec![("I".into(), i)] })
        }
        "caviglia-pair" => {
            let n = param.unwrap_or(3);
            if n < 2 {
                return Err(bad("caviglia-pair needs n >= 2"));
            }
            let r = ring_named(&["x1", "x2", "x3", "x4", "t"], field);
            let mut g = caviglia2_gens(&r, n);
            g[2] = g[2].add(&r.var(4).pow(n));
            let j = Ideal::new(r.clone(), g)?;
            let l = Ideal::new(r.clone(), vec![r.var(4)])?;
            Ok(Example { ring: r, ideals: vec![("J".into(), j), ("L".into(), l)] })
        }
        "conca" => {
            let k = param.unwrap_or(2);
            if k < 2 {
                return Err(bad("conca needs r >= 2"));
            }
            let r = ring_named(&["a", "b", "c", "d"], field);
            let mut gens = vec![
                mono(&r, &[1, k, 0, 0]),
                mono(&r, &[1, 0, k, 0]),
                mono(&r, &[0, k - 1, 1, 1]),
            ];
            for e in 0..k {
                gens.push(mono(&r, &[0, 1 + e, 1 + (k - 1 - e), 0]));
            }
            let i = Ideal::new(r.clone(), gens)?;
            Ok(Example { ring: r, ideals: vec![("I".into(), i)] })
        }
        "ex93" => {
            let r = ring_named(&["x", "y", "z"], field);
            let skip = [[3, 1, 1], [1, 3, 1], [1, 1, 3]];
            let gens = Monomial::all_of_degree(3, 5)
                .into_iter()
                .filter(|m| !skip.iter().any(|s| (0..3).all(|i| m.exp(i) == s[i])))
                .map(|m| Polynomial::term(field, m, 1))
                .collect();
            let i = Ideal::new(r.clone(), gens)?;
            Ok(Example { ring: r, ideals: vec![("I".into(), i)] })
        }
        _ => Err(Error::UnknownExample(name.to_string())),
    }
}

/// `x1^n, x2^n, x1 x3^{n-1} - x2 x4^{n-1}` in a ring with at least 4 variables.
fn caviglia2_gens(r: &RingContext, n: u32) -> Vec<Polynomial> {
    let nv = r.n();
    let e = |v: &[(usize, u32)]| {
        let mut x = vec![0u32; nv];
        for &(i, a) in v {
            x[i] = a;
        }
        r.monomial(&x)
    };
    vec![e(&[(0, n)]), e(&[(1, n)]), e(&[(0, 1), (2, n - 1)]).sub(&e(&[(1, 1), (3, n - 1)]))]
}

/// Flavors of [`random_ideal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    Forms,
    Monomials,
    MPrimaryForms,
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forms" => Ok(Flavor::Forms),
            "monomials" => Ok(Flavor::Monomials),
            "m-primary-forms" => Ok(Flavor::MPrimaryForms),
            _ => Err(Error::InvalidParameter(format!("unknown flavor `{s}`"))),
        }
    }
}

const RANDOM_RETRIES: usize = 32;

/// Seeded random ideal in `x1..xn` over `field`.
///
/// `Monomials` always includes the pure powers `x_i^d`, so its instances
/// are m-primary; `count` further monomials are drawn on top.
pub fn random_ideal(n: usize, d: u32, count: usize, seed: u64, flavor: Flavor, field: FieldSpec) -> Result<Ideal> {
    if count == 0 || d == 0 {
        return Err(Error::InvalidParameter("count and d must be positive".into()));
    }
    let names = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = RingContext::new(names, field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = Monomial::all_of_degree(n, d);
    let form = |rng: &mut ChaCha8Rng| {
        let terms = basis.iter().map(|&m| (m, rng.gen_range(0..field.p()))).collect();
        Polynomial::from_terms(n, field, terms)
    };
    match flavor {
        Flavor::Forms => Ideal::new(ring.clone(), (0..count).map(|_| form(&mut rng)).collect()),
        Flavor::Monomials => {
            let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i).pow(d)).collect();
            for _ in 0..count {
                gens.push(basis[rng.gen_range(0..basis.len())]);
            }
            Ok(Ideal::from_monomials(ring, &MonomialIdeal::new(n, gens)))
        }
        Flavor::MPrimaryForms => {
            for _ in 0..RANDOM_RETRIES {
                let i = Ideal::new(ring.clone(), (0..count).map(|_| form(&mut rng)).collect())?;
                if i.is_m_primary() {
                    return Ok(i);
                }
            }
            Err(Error::RetriesExhausted(RANDOM_RETRIES))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::binom;

    #[test]
    fn j_counts() {
        let r = RingContext::standard(3);
        assert_eq!(monomial_j(&r, 3, 1).unwrap().gens().len(), 9);
        let r4 = RingContext::standard(4);
        assert!(monomial_j(&r4, 2, 3).unwrap().same_as(&power_max_ideal(&r4, 2).unwrap()));
        assert_eq!(monomial_j(&r4, 2, 0).unwrap().gens().len(), 4);
    }

    #[test]
    fn max_powers() {
        let r = RingContext::standard(3);
        assert_eq!(power_max_ideal(&r, 4).unwrap().gens().len() as i64, binom(6, 2));
        assert!(power_max_ideal(&r, 1).unwrap().same_as(&Ideal::maximal(&r)));
    }

    #[test]
    fn hh_ideal() {
        let r = RingContext::standard(3);
        assert!(herzog_hibi_j(&r, 2).unwrap().same_as(&power_max_ideal(&r, 2).unwrap()));
        let j = herzog_hibi_j(&r, 3).unwrap();
        assert!(!j.same_as(&power_max_ideal(&r, 3).unwrap()));
        assert!(j.contains(&r.monomial(&[1, 0, 2])));
        let r2 = RingContext::standard(2);
        assert!(herzog_hibi_j(&r2, 3).unwrap().same_as(&power_max_ideal(&r2, 3).unwrap()));
    }

    #[test]
    fn examples_have_stated_shapes() {
        let f = FieldSpec::default();
        assert_eq!(named_example("caviglia1", None, f).unwrap().ideals[0].1.gens().len(), 5);
        let c2 = named_example("caviglia2", Some(3), f).unwrap();
        assert_eq!(c2.ideals[0].1.generator_degrees(), vec![3, 3, 3]);
        assert_eq!(named_example("ex93", None, f).unwrap().ideals[0].1.gens().len(), 18);
        assert!(named_example("nope", None, f).is_err());
        let c = named_example("conca", Some(2), f).unwrap();
        assert_eq!(c.ideals[0].1.krull_dim(), 2);
    }

    #[test]
    fn linear_forms_are_independent() {
        let r = RingContext::standard(4);
        let l = linear_subspace_ideal(&r, 3, 7).unwrap();
        assert_eq!(l.gens().len(), 3);
        assert_eq!(l.codim(), 3);
        assert!(linear_subspace_ideal(&r, 5, 7).is_err());
    }

    #[test]
    fn random_is_seeded() {
        let f = FieldSpec::default();
        let a = random_ideal(3, 2, 4, 11, Flavor::Forms, f).unwrap();
        let b = random_ideal(3, 2, 4, 11, Flavor::Forms, f).unwrap();
        assert_eq!(a.gens(), b.gens());
        let m = random_ideal(3, 3, 2, 5, Flavor::Monomials, f).unwrap();
        assert!(m.is_m_primary());
        assert_eq!(m.single_degree(), Some(3));
        for s in 0..20 {
            assert!(random_ideal(3, 2, 3, s, Flavor::MPrimaryForms, f).unwrap().is_m_primary());
        }
    }
}
