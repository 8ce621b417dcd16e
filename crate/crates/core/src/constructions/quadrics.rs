//! Quadratic forms, spaces of quadrics and their apolar data.

use serde::{Deserialize, Serialize};

use crate::groebner::{Ideal, MonomialIdeal};
use crate::ring::{linalg, Coeff, FieldSpec, Monomial, Polynomial, RingContext};
use crate::{Error, Result};

fn check_char(field: FieldSpec) -> Result<()> {
    if field.p() == 2 {
        Err(Error::CharTwo)
    } else {
        Ok(())
    }
}

/// Symmetric Gram matrix of a quadric.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticForm {
    pub field: FieldSpec,
    pub gram: Vec<Vec<Coeff>>,
}

impl QuadraticForm {
    pub fn new(field: FieldSpec, gram: Vec<Vec<Coeff>>) -> Result<Self> {
        check_char(field)?;
        let n = gram.len();
        if gram.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidParameter("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(QuadraticForm { field, gram })
    }

    pub fn from_polynomial(q: &Polynomial) -> Result<Self> {
        let field = q.field();
        check_char(field)?;
        if !q.is_zero() && q.degree() != Some(2) || !q.is_homogeneous() {
            return Err(Error::InvalidParameter("not a quadratic form".into()));
        }
        let n = q.nvars();
        let half = field.inv(2);
        let mut gram = vec![vec![0; n]; n];
        for &(m, c) in q.terms() {
            let vars: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, m.exp(i) as usize)).collect();
            let (i, j) = (vars[0], vars[1]);
            if i == j {
                gram[i][i] = c;
            } else {
                gram[i][j] = field.mul(c, half);
                gram[j][i] = gram[i][j];
            }
        }
        Ok(QuadraticForm { field, gram })
    }

    pub fn n(&self) -> usize {
        self.gram.len()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.n();
        let f = self.field;
        let mut terms = Vec::new();
        for i in 0..n {
            for j in i..n {
                let c = if i == j { self.gram[i][i] } else { f.add(self.gram[i][j], self.gram[j][i]) };
                let m = Monomial::var(n, i).mul(&Monomial::var(n, j));
                terms.push((m, c));
            }
        }
        Polynomial::from_terms(n, f, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.gram.iter().flatten().all(|&c| c == 0)
    }

    /// Upper-triangle coordinates `(a_ij)_{i <= j}`.
    fn coords(&self) -> Vec<Coeff> {
        let n = self.n();
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| self.gram[i][j]).collect()
    }

    fn from_coords(field: FieldSpec, n: usize, v: &[Coeff]) -> Self {
        let mut gram = vec![vec![0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                gram[i][j] = v[k];
                gram[j][i] = v[k];
                k += 1;
            }
        }
        QuadraticForm { field, gram }
    }
}

pub fn quadric_rank(q: &QuadraticForm) -> usize {
    linalg::rank(q.field, q.n(), q.gram.clone())
}

/// A linear space of quadrics in `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricSpace {
    pub n: usize,
    pub field: FieldSpec,
    pub basis: Vec<QuadraticForm>,
}

impl QuadricSpace {
    /// Keeps an independent subset of `forms`.
    pub fn spanned_by(field: FieldSpec, n: usize, forms: Vec<QuadraticForm>) -> Result<Self> {
        check_char(field)?;
        let mut e = linalg::Echelon::new(field, n * (n + 1) / 2);
        let mut basis = Vec::new();
        for q in forms {
            if q.n() != n {
                return Err(Error::VarCountMismatch(q.n(), n));
            }
            if e.insert(q.coords()) {
                basis.push(q);
            }
        }
        Ok(QuadricSpace { n, field, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Symmetric `n x n` matrix of linear forms in `dim` parameters.
    pub fn pencil_matrix(&self) -> Vec<Vec<Polynomial>> {
        let m = self.dim();
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let terms = self.basis.iter().enumerate().map(|(k, q)| (Monomial::var(m, k), q.gram[i][j])).collect();
                        Polynomial::from_terms(m, self.field, terms)
                    })
                    .collect()
            })
            .collect()
    }

    /// Ideal in `ring` generated by the quadrics.
    pub fn ideal(&self, ring: &RingContext) -> Result<Ideal> {
        if ring.n() != self.n || ring.field != self.field {
            return Err(Error::RingMismatch);
        }
        Ideal::new(ring.clone(), self.basis.iter().map(|q| q.to_polynomial()).collect())
    }
}

/// Hankel pencil `(y_{i+j-1})` in `2n - 1` parameters.
pub fn catalecticant_space(n: usize, field: FieldSpec) -> Result<QuadricSpace> {
    check_char(field)?;
    if n < 2 {
        return Err(Error::InvalidParameter("n must be at least 2".into()));
    }
    let forms = (0..2 * n - 1)
        .map(|k| {
            let gram = (0..n).map(|i| (0..n).map(|j| if i + j == k { 1 } else { 0 }).collect()).collect();
            QuadraticForm { field, gram }
        })
        .collect();
    QuadricSpace::spanned_by(field, n, forms)
}

/// Complement under `(A, B) = Σ a_ij b_ij`.
pub fn orthogonal_complement(u: &QuadricSpace) -> Result<QuadricSpace> {
    let (n, f) = (u.n, u.field);
    check_char(f)?;
    let two = f.from_i64(2);
    let weights: Vec<Coeff> = (0..n).flat_map(|i| (i..n).map(move |j| if i == j { 1 } else { two })).collect();
    let rows: Vec<Vec<Coeff>> = u
        .basis
        .iter()
        .map(|q| q.coords().iter().zip(&weights).map(|(&a, &w)| f.mul(a, w)).collect())
        .collect();
    let ker = linalg::kernel(f, weights.len(), &rows);
    let forms = ker.iter().map(|v| QuadraticForm::from_coords(f, n, v)).collect();
    QuadricSpace::spanned_by(f, n, forms)
}

/// Ideal of forms annihilating `q` under apolarity: the kernel linear
/// forms, the quadrics orthogonal to `q`, and all cubics.
pub fn apolar_ideal_of_quadric(ring: &RingContext, q: &QuadraticForm) -> Result<Ideal> {
    check_char(q.field)?;
    if q.is_zero() {
        return Err(Error::ZeroForm);
    }
    let n = q.n();
    if ring.n() != n || ring.field != q.field {
        return Err(Error::RingMismatch);
    }
    let mut gens: Vec<Polynomial> = linalg::kernel(q.field, n, &q.gram)
        .iter()
        .map(|c| super::linear_form(ring, c))
        .collect();
    let line = QuadricSpace { n, field: q.field, basis: vec![q.clone()] };
    gens.extend(orthogonal_complement(&line)?.basis.iter().map(|b| b.to_polynomial()));
    gens.extend(MonomialIdeal::power_of_max(n, 3).polynomials(q.field));
    Ok(Ideal::new(ring.clone(), gens)?.minimalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::linear_steps;

    fn diag(f: FieldSpec, d: &[Coeff]) -> QuadraticForm {
        let n = d.len();
        let gram = (0..n).map(|i| (0..n).map(|j| if i == j { d[i] } else { 0 }).collect()).collect();
        QuadraticForm::new(f, gram).unwrap()
    }

    #[test]
    fn polynomial_round_trip() {
        let r = RingContext::standard(3);
        let p = r.monomial(&[1, 1, 0]).add(&r.monomial(&[0, 0, 2]).scale(5));
        let q = QuadraticForm::from_polynomial(&p).unwrap();
        assert_eq!(q.to_polynomial(), p);
        assert_eq!(quadric_rank(&q), 3);
    }

    #[test]
    fn complements() {
        let f = FieldSpec::default();
        let cat = catalecticant_space(3, f).unwrap();
        assert_eq!(cat.dim(), 5);
        let perp = orthogonal_complement(&cat).unwrap();
        assert_eq!(perp.dim(), 1);
        let back = orthogonal_complement(&perp).unwrap();
        assert_eq!(back.dim(), 5);
        let all = orthogonal_complement(&QuadricSpace { n: 3, field: f, basis: vec![] }).unwrap();
        assert_eq!(orthogonal_complement(&all).unwrap().dim(), 0);
    }

    #[test]
    fn pencil_specializes_to_basis() {
        let f = FieldSpec::default();
        let cat = catalecticant_space(3, f).unwrap();
        let pm = cat.pencil_matrix();
        for (k, q) in cat.basis.iter().enumerate() {
            let m = Monomial::var(5, k);
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(pm[i][j].coeff(&m), q.gram[i][j]);
                }
            }
        }
    }

    #[test]
    fn rank_controls_linear_steps() {
        let f = FieldSpec::default();
        let r = RingContext::standard(3);
        for (d, want) in [(&[1, 1, 0][..], 0), (&[1, 1, 1][..], 1)] {
            let q = diag(f, d);
            let v = orthogonal_complement(&QuadricSpace { n: 3, field: f, basis: vec![q.clone()] }).unwrap();
            assert_eq!(linear_steps(&v.ideal(&r).unwrap()).unwrap(), quadric_rank(&q) as i64 - 2);
            assert_eq!(want, quadric_rank(&q) as i64 - 2);
        }
    }

    #[test]
    fn apolar_ideals() {
        let f = FieldSpec::default();
        let r = RingContext::standard(3);
        let j = apolar_ideal_of_quadric(&r, &diag(f, &[1, 0, 0])).unwrap();
        let hs: Vec<i64> = (0..4).map(|d| j.hilbert_function(d)).collect();
        assert_eq!(hs, vec![1, 1, 1, 0]);
        let full = apolar_ideal_of_quadric(&r, &diag(f, &[1, 1, 1])).unwrap();
        assert!(full.generator_degrees().iter().all(|&d| d >= 2));
        let q2 = apolar_ideal_of_quadric(&r, &diag(f, &[1, 1, 0])).unwrap();
        assert_eq!(q2.generator_degrees().iter().filter(|&&d| d == 1).count(), 1);
        assert!(QuadraticForm::new(FieldSpec::new(2).unwrap(), vec![vec![1]]).is_err());
    }
}
