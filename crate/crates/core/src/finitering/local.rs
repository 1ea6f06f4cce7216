//! The truncated power series ring O_alpha = F_q[t]/(t^alpha).

use std::fmt;
use std::sync::Arc;

use super::field::Fq;
use crate::error::{Error, Result};

/// Largest supported truncation order.
pub const MAX_ALPHA: usize = 8;

/// Coefficients of t^0..t^{alpha-1}; slots at or beyond alpha stay zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OElem {
    pub c: [u8; MAX_ALPHA],
}

#[derive(Clone, Debug)]
pub struct ORing {
    f: Arc<Fq>,
    alpha: usize,
}

impl ORing {
    pub fn new(q: u32, alpha: usize) -> Result<Self> {
        if alpha == 0 || alpha > MAX_ALPHA {
            return Err(Error::InvalidInput(format!("alpha must be in 1..={MAX_ALPHA}")));
        }
        Ok(ORing {
            f: Arc::new(Fq::new(q)?),
            alpha,
        })
    }

    pub fn field(&self) -> &Fq {
        &self.f
    }

    pub fn q(&self) -> u32 {
        self.f.q()
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    /// |O_alpha| = q^alpha.
    pub fn size(&self) -> u64 {
        (self.q() as u64).pow(self.alpha as u32)
    }

    pub fn zero(&self) -> OElem {
        OElem::default()
    }

    pub fn one(&self) -> OElem {
        self.from_fq(1)
    }

    pub fn from_fq(&self, a: u8) -> OElem {
        let mut e = OElem::default();
        e.c[0] = a;
        e
    }

    pub fn from_int(&self, n: i64) -> OElem {
        self.from_fq(self.f.from_int(n))
    }

    /// t^k (zero when k >= alpha).
    pub fn t_pow(&self, k: usize) -> OElem {
        let mut e = OElem::default();
        if k < self.alpha {
            e.c[k] = 1;
        }
        e
    }

    pub fn is_zero(&self, x: &OElem) -> bool {
        x.c[..self.alpha].iter().all(|&c| c == 0)
    }

    pub fn is_unit(&self, x: &OElem) -> bool {
        x.c[0] != 0
    }

    /// Least i with a nonzero coefficient; alpha for zero.
    pub fn val(&self, x: &OElem) -> usize {
        x.c[..self.alpha].iter().position(|&c| c != 0).unwrap_or(self.alpha)
    }

    #[inline]
    pub fn add(&self, x: &OElem, y: &OElem) -> OElem {
        let mut r = OElem::default();
        for i in 0..self.alpha {
            r.c[i] = self.f.add(x.c[i], y.c[i]);
        }
        r
    }

    #[inline]
    pub fn neg(&self, x: &OElem) -> OElem {
        let mut r = OElem::default();
        for i in 0..self.alpha {
            r.c[i] = self.f.neg(x.c[i]);
        }
        r
    }

    #[inline]
    pub fn sub(&self, x: &OElem, y: &OElem) -> OElem {
        self.add(x, &self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: &OElem, y: &OElem) -> OElem {
        let mut r = OElem::default();
        let a = self.alpha;
        for i in 0..a {
            if x.c[i] == 0 {
                continue;
            }
            for j in 0..a - i {
                if y.c[j] != 0 {
                    r.c[i + j] = self.f.add(r.c[i + j], self.f.mul(x.c[i], y.c[j]));
                }
            }
        }
        r
    }

    /// Inverse of a unit.
    pub fn inv(&self, x: &OElem) -> Option<OElem> {
        if !self.is_unit(x) {
            return None;
        }
        let c0i = self.f.inv(x.c[0]);
        let mut b = OElem::default();
        b.c[0] = c0i;
        for k in 1..self.alpha {
            let mut s = 0u8;
            for j in 1..=k {
                s = self.f.add(s, self.f.mul(x.c[j], b.c[k - j]));
            }
            b.c[k] = self.f.neg(self.f.mul(c0i, s));
        }
        Some(b)
    }

    /// Some y with t^v y = x, assuming val(x) >= v (top coefficients set to zero).
    pub fn div_t_pow(&self, x: &OElem, v: usize) -> OElem {
        let mut r = OElem::default();
        for i in v..self.alpha {
            r.c[i - v] = x.c[i];
        }
        r
    }

    /// Reduction mod t.
    pub fn residue(&self, x: &OElem) -> u8 {
        x.c[0]
    }

    /// Element with base-q digit expansion `idx` (digit i = coefficient of t^i).
    pub fn from_index(&self, mut idx: u64) -> OElem {
        let q = self.q() as u64;
        let mut e = OElem::default();
        for i in 0..self.alpha {
            e.c[i] = (idx % q) as u8;
            idx /= q;
        }
        e
    }

    pub fn index(&self, x: &OElem) -> u64 {
        let q = self.q() as u64;
        x.c[..self.alpha].iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }

    pub fn elements(&self) -> impl Iterator<Item = OElem> + '_ {
        (0..self.size()).map(move |i| self.from_index(i))
    }

    pub fn display(&self, x: &OElem) -> String {
        let mut parts = Vec::new();
        for i in (0..self.alpha).rev() {
            let c = x.c[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".into(),
                _ => format!("t^{i}"),
            };
            parts.push(if mono.is_empty() {
                format!("{c}")
            } else if c == 1 {
                mono
            } else {
                format!("{c}{mono}")
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for OElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units_and_valuations() {
        let r = ORing::new(3, 3).unwrap();
        let mut units = 0;
        for x in r.elements() {
            if r.is_unit(&x) {
                units += 1;
                assert_eq!(r.mul(&x, &r.inv(&x).unwrap()), r.one());
            }
            let v = r.val(&x);
            assert_eq!(r.mul(&r.t_pow(v), &r.div_t_pow(&x, v)), x);
        }
        assert_eq!(units, 2 * 9);
        assert_eq!(r.val(&r.zero()), 3);
        assert_eq!(r.display(&r.add(&r.t_pow(2), &r.from_int(2))), "t^2 + 2");
    }
}
