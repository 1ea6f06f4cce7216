//! Univariate power series in T, truncated at a fixed degree, with rational-function
//! coefficients in q.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::parse::{parse_value, ParseValue};
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

/// sum_{n <= prec} c_n T^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<RationalFunction>,
}

impl PowerSeries {
    pub fn zero(prec: usize) -> Self {
        PowerSeries {
            coeffs: vec![RationalFunction::zero(); prec + 1],
        }
    }

    pub fn constant(c: RationalFunction, prec: usize) -> Self {
        let mut s = Self::zero(prec);
        s.coeffs[0] = c;
        s
    }

    pub fn t(prec: usize) -> Self {
        let mut s = Self::zero(prec);
        if prec >= 1 {
            s.coeffs[1] = RationalFunction::one();
        }
        s
    }

    /// Reads an expression in q and T, e.g. `(q^3-1)(q^(2g)-1)/((q^3-T)(q^(2g)-T))`.
    /// Every division must be by a series with nonzero constant term.
    pub fn parse(s: &str, params: &[(&str, i64)], prec: usize) -> Result<Self> {
        parse_value(s, params, Self::zero(prec))
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &RationalFunction {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficients evaluated at q = q0.
    pub fn eval_coeffs(&self, q0: &BigRational) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.eval(q0)).collect()
    }

    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::PoleAtEvaluationPoint("T = 0".into()));
        }
        let inv0 = c0.recip()?;
        let n = self.precision();
        let mut b: Vec<RationalFunction> = Vec::with_capacity(n + 1);
        b.push(inv0.clone());
        for k in 1..=n {
            let s: RationalFunction = (1..=k).map(|j| &self.coeffs[j] * &b[k - j]).sum();
            b.push(-(&inv0 * &s));
        }
        Ok(PowerSeries { coeffs: b })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut acc = Self::constant(RationalFunction::one(), self.precision());
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }
}

// Series of different lengths combine at the longer length: a length-one series is an
// exact constant (parsed integers), every other series carries the common precision.
fn pad(mut a: Vec<RationalFunction>, n: usize) -> Vec<RationalFunction> {
    a.resize(n, RationalFunction::zero());
    a
}

impl Add for PowerSeries {
    type Output = PowerSeries;
    fn add(self, o: PowerSeries) -> PowerSeries {
        let n = self.coeffs.len().max(o.coeffs.len());
        let (a, b) = (pad(self.coeffs, n), pad(o.coeffs, n));
        PowerSeries {
            coeffs: a.iter().zip(&b).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for PowerSeries {
    type Output = PowerSeries;
    fn sub(self, o: PowerSeries) -> PowerSeries {
        self + (-o)
    }
}

impl Neg for PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for PowerSeries {
    type Output = PowerSeries;
    fn mul(self, o: PowerSeries) -> PowerSeries {
        let n = self.precision().max(o.precision());
        let mut out = vec![RationalFunction::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        PowerSeries { coeffs: out }
    }
}

impl ParseValue for PowerSeries {
    fn from_int(n: i64) -> Self {
        // Precision is fixed by the prototype; see `variable`.
        PowerSeries {
            coeffs: vec![RationalFunction::from_int(n)],
        }
    }

    fn variable(&self, name: &str) -> Option<Self> {
        match name {
            "q" => Some(Self::constant(RationalFunction::q(), self.precision())),
            "T" => Some(Self::t(self.precision())),
            _ => None,
        }
    }

    fn recip(&self) -> Result<Self> {
        PowerSeries::recip(self)
    }

    fn pow(&self, e: i64) -> Result<Self> {
        PowerSeries::pow(self, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_rf, rat};

    #[test]
    fn geometric_expansion() {
        let s = PowerSeries::parse("1/(1-qT)", &[], 4).unwrap();
        for n in 0..=4 {
            assert_eq!(s.coeff(n), &RationalFunction::q_pow(n as i64));
        }
        let r = PowerSeries::parse("(q^3-1)/(q^3-T)", &[], 2).unwrap();
        assert_eq!(r.coeff(1), &parse_rf("(q^3-1)/q^6").unwrap());
        assert_eq!(r.eval_coeffs(&rat(2)).unwrap()[0], BigRational::new(7.into(), 8.into()));
    }

    #[test]
    fn pole_at_origin() {
        assert!(matches!(PowerSeries::parse("1/T", &[], 3), Err(Error::PoleAtEvaluationPoint(_))));
    }

    #[test]
    fn powers_and_constants() {
        let s = PowerSeries::parse("(1+T)^3 - 3T", &[], 2).unwrap();
        assert_eq!(s.coeffs(), &[RationalFunction::one(), RationalFunction::zero(), RationalFunction::from_int(3)]);
        let t = PowerSeries::parse("(1-T)^-2", &[], 3).unwrap();
        assert_eq!(t.coeff(3), &RationalFunction::from_int(4));
    }
}
