//! Hilbert functions and series.

use serde::{Deserialize, Serialize};

use super::monideal::MonomialIdeal;

/// `C(a, b)` with the convention `C(a, b) = 0` unless `0 <= b <= a`.
pub fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < b || a < 0 {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as i128 / (i + 1) as i128;
    }
    acc as i64
}

/// `t^shift * N(t) / (1 - t)^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSeries {
    pub n: usize,
    pub shift: i32,
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(n: usize) -> Self {
        HilbertSeries { n, shift: 0, numerator: Vec::new() }
    }

    /// Series of `⊕ S(-a_c) / M_c`.
    pub fn of_components(n: usize, parts: &[(i32, &MonomialIdeal)]) -> Self {
        let mut out = HilbertSeries::zero(n);
        for (a, m) in parts {
            out.add_shifted(&m.hilbert_numerator(), *a, 1);
        }
        out
    }

    pub fn add_shifted(&mut self, num: &[i64], at: i32, sign: i64) {
        if num.iter().all(|&c| c == 0) {
            return;
        }
        if self.numerator.is_empty() {
            self.shift = at;
        }
        if at < self.shift {
            let pad = (self.shift - at) as usize;
            let mut v = vec![0; pad];
            v.extend_from_slice(&self.numerator);
            self.numerator = v;
            self.shift = at;
        }
        let off = (at - self.shift) as usize;
        if self.numerator.len() < off + num.len() {
            self.numerator.resize(off + num.len(), 0);
        }
        for (k, &c) in num.iter().enumerate() {
            self.numerator[off + k] += sign * c;
        }
        self.trim();
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        let mut out = self.clone();
        out.add_shifted(&other.numerator, other.shift, -1);
        out
    }

    fn trim(&mut self) {
        while self.numerator.last() == Some(&0) {
            self.numerator.pop();
        }
        let lead = self.numerator.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.numerator.drain(..lead);
            self.shift += lead as i32;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Value in degree `d`.
    pub fn value(&self, d: i32) -> i64 {
        let n = self.n as i64;
        let mut acc = 0;
        for (k, &c) in self.numerator.iter().enumerate() {
            let e = (d - self.shift) as i64 - k as i64;
            if e < 0 {
                break;
            }
            acc += c * if n == 0 { (e == 0) as i64 } else { binom(e + n - 1, n - 1) };
        }
        acc
    }

    /// Krull dimension: order of the pole at `t = 1`, `-1` for zero.
    pub fn dimension(&self) -> i32 {
        if self.is_zero() {
            return -1;
        }
        let mut num = self.numerator.clone();
        let mut d = self.n as i32;
        // divide by (1 - t) while N(1) = 0
        while d > 0 && num.iter().sum::<i64>() == 0 {
            let mut q = vec![0i64; num.len() - 1];
            let mut carry = 0;
            for k in 0..q.len() {
                carry += num[k];
                q[k] = carry;
            }
            num = q;
            d -= 1;
        }
        d
    }

    /// Lowest degree with a nonzero value, `None` for zero.
    pub fn min_degree(&self) -> Option<i32> {
        if self.is_zero() {
            None
        } else {
            Some(self.shift)
        }
    }

    /// Highest nonzero degree when finite (dimension 0).
    pub fn top_degree(&self) -> Option<i32> {
        if self.dimension() != 0 {
            return None;
        }
        let hi = self.shift + self.numerator.len() as i32;
        (self.shift..=hi).rev().find(|&d| self.value(d) != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_ring() {
        let s = HilbertSeries { n: 3, shift: 0, numerator: vec![1] };
        assert_eq!(s.value(4), binom(6, 2));
        assert_eq!(s.dimension(), 3);
    }

    #[test]
    fn artinian() {
        let m3 = MonomialIdeal::power_of_max(3, 3);
        let s = HilbertSeries::of_components(3, &[(0, &m3)]);
        assert_eq!((0..5).map(|d| s.value(d)).collect::<Vec<_>>(), vec![1, 3, 6, 0, 0]);
        assert_eq!(s.dimension(), 0);
        assert_eq!(s.top_degree(), Some(2));
    }
}
