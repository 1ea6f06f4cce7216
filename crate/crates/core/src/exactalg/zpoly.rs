//! Dense univariate polynomials with integer coefficients.
//!
//! This is the workhorse behind `RationalFunction`: numerators and
//! denominators are kept in Z[q] and reduced with a primitive remainder
//! sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from degree 0 upwards, never with a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub(crate) struct ZPoly(pub(crate) Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly(vec![c]);
        p.trim();
        p
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        ZPoly(v)
    }

    pub fn from_coeffs(v: Vec<BigInt>) -> Self {
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Number of trailing zero coefficients (the q-adic valuation).
    pub fn low_degree(&self) -> usize {
        self.0.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        ZPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = o.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(v)
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.0.len() == 1 {
            return self.scale(&o.0[0]);
        }
        if self.0.len() == 1 {
            return o.scale(&self.0[0]);
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        ZPoly(self.0.iter().map(|x| x / c).collect())
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `b` (some positive power of lc(b) times the remainder).
    fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        let lb = b.lc().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc().clone();
            let g = lr.gcd(&lb);
            let fr = &lb / &g;
            let fb = &lr / &g;
            let mut v: Vec<BigInt> = r.0.iter().map(|c| c * &fr).collect();
            let off = dr - db;
            for (j, c) in b.0.iter().enumerate() {
                v[off + j] -= c * &fb;
            }
            r = Self::from_coeffs(v);
        }
        r
    }

    /// Greatest common divisor in Q[q], returned primitive with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.primitive();
        }
        if o.is_zero() {
            return self.primitive();
        }
        // Powers of q are split off first; they are the most common common factor.
        let k = self.low_degree().min(o.low_degree());
        let mut a = self.shift_down(self.low_degree()).primitive();
        let mut b = o.shift_down(o.low_degree()).primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree() == Some(0) {
                return ZPoly::monomial(BigInt::one(), k);
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return b.shift_up(k);
            }
            a = b;
            b = r.primitive();
        }
    }

    /// Exact quotient; panics in debug builds if `b` does not divide `self`.
    pub fn div_exact(&self, b: &Self) -> Self {
        let db = b.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Self::zero();
        }
        if b.is_one() {
            return self.clone();
        }
        let da = self.degree().unwrap();
        assert!(da >= db, "exact division with smaller dividend degree");
        let lb = b.lc();
        let mut r = self.0.clone();
        let mut quo = vec![BigInt::zero(); da - db + 1];
        for i in (0..=da - db).rev() {
            let c = &r[i + db];
            if c.is_zero() {
                continue;
            }
            let (qc, rem) = c.div_rem(lb);
            debug_assert!(rem.is_zero(), "inexact polynomial division");
            for (j, bc) in b.0.iter().enumerate() {
                r[i + j] -= &qc * bc;
            }
            quo[i] = qc;
        }
        debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Self::from_coeffs(quo)
    }

    /// Substitutes q -> q^m.
    pub fn adams(&self, m: usize) -> Self {
        if m == 1 || self.0.len() <= 1 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); (self.0.len() - 1) * m + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[i * m] = c.clone();
        }
        ZPoly(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(v: &[i64]) -> ZPoly {
        ZPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q^2-1)(q^3-1) and (q^6-1) share (q-1)(q+1)(q^2+q+1)... check via q^6-1 / gcd.
        let a = zp(&[-1, 0, 1]).mul(&zp(&[-1, 0, 0, 1]));
        let b = zp(&[-1, 0, 0, 0, 0, 0, 1]);
        let g = a.gcd(&b);
        // gcd is (q-1)(q+1)(q^2+q+1) = q^4 + q^3 - q - 1
        assert_eq!(g, zp(&[-1, -1, 0, 1, 1]));
    }

    #[test]
    fn gcd_handles_q_powers_and_content() {
        let a = zp(&[0, 0, 6, 6]);
        let b = zp(&[0, 4, 4]);
        assert_eq!(a.gcd(&b), zp(&[0, 1, 1]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = zp(&[3, -1, 4, 1, -5]);
        let b = zp(&[2, 7, 1]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }
}
