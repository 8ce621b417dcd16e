//! Exponent vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Hard cap on the number of variables of any ring.
pub const MAX_VARS: usize = 16;

/// A monomial `x^a` in at most [`MAX_VARS`] variables.
///
/// Field order matters: the derived `Ord` is degree first, then the exponent
/// array, which makes it usable as a canonical storage key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    deg: u32,
    exps: [u16; MAX_VARS],
    n: u8,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        assert!(n <= MAX_VARS, "at most {MAX_VARS} variables supported");
        Monomial { deg: 0, exps: [0; MAX_VARS], n: n as u8 }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        assert!(i < n, "variable index {i} out of range");
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Self::one(exps.len());
        let mut deg = 0u32;
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).unwrap_or_else(|_| panic!("exponent {e} overflows u16"));
            deg += e;
        }
        m.deg = deg;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.n as usize]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for i in 0..self.n as usize {
            out.exps[i] = self.exps[i]
                .checked_add(other.exps[i])
                .unwrap_or_else(|| panic!("exponent overflow in x{}", i + 1));
        }
        out.deg = self.deg + other.deg;
        out
    }

    /// Does `self` divide `other`?
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        (0..self.n as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut out = *other;
        for i in 0..self.n as usize {
            out.exps[i] = other.exps[i] - self.exps[i];
        }
        out.deg = other.deg - self.deg;
        out
    }

    /// `self / other` if it exists.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(other.quotient_of(self))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.n as usize {
            out.exps[i] = self.exps[i].max(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        let mut deg = 0;
        for i in 0..self.n as usize {
            out.exps[i] = self.exps[i].min(other.exps[i]);
            deg += out.exps[i] as u32;
        }
        out.deg = deg;
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..self.n as usize).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut out = Self::one(self.n as usize);
        for i in 0..self.n as usize {
            let e = self.exps[i] as u32 * k;
            out.exps[i] = u16::try_from(e).unwrap_or_else(|_| panic!("exponent overflow in x{}", i + 1));
        }
        out.deg = self.deg * k;
        out
    }

    /// Bit set of variables with nonzero exponent.
    #[inline]
    pub fn support_mask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.n as usize {
            if self.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    /// Coarse divisibility filter: bit i set when exponent i is at least 1,
    /// bit 16+i when it is at least 2.
    #[inline]
    pub fn divmask(&self) -> u32 {
        let mut mask = 0;
        for i in 0..self.n as usize {
            let e = self.exps[i];
            if e > 0 {
                mask |= 1 << i;
            }
            if e > 1 {
                mask |= 1 << (16 + i);
            }
        }
        mask
    }

    /// Same monomial reinterpreted in `m` variables (padding with zeros or
    /// dropping trailing variables, which must then be absent).
    pub fn resized(&self, m: usize) -> Monomial {
        assert!(m <= MAX_VARS);
        let mut out = *self;
        for i in m..MAX_VARS {
            assert!(out.exps[i] == 0, "cannot drop a variable that occurs");
        }
        out.n = m as u8;
        out
    }

    /// All monomials of degree `d` in `n` variables, ascending in the
    /// storage key.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; n];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            let n = exps.len();
            if i + 1 == n {
                exps[i] = left;
                out.push(Monomial::from_exps(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if n == 0 {
            if d == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort();
        out
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in 0..self.n as usize {
            match self.exps[i] {
                0 => {}
                1 => parts.push(names[i].clone()),
                e => parts.push(format!("{}^{}", names[i], e)),
            }
        }
        parts.join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.n as usize).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.display_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exps(&[2, 1, 0]);
        let b = Monomial::from_exps(&[1, 0, 3]);
        assert_eq!(a.mul(&b), Monomial::from_exps(&[3, 1, 3]));
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 1, 3]));
        assert_eq!(a.gcd(&b), Monomial::from_exps(&[1, 0, 0]));
        assert!(Monomial::from_exps(&[1, 1, 0]).divides(&a));
        assert_eq!(a.div(&Monomial::var(3, 0)), Some(Monomial::from_exps(&[1, 1, 0])));
        assert_eq!(a.div(&b), None);
        assert!(!a.is_coprime(&b));
    }

    #[test]
    fn counts_monomials() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(2, 0).len(), 1);
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_aborts() {
        let a = Monomial::from_exps(&[60000]);
        let _ = a.mul(&a);
    }
}
