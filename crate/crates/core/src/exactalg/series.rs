//! Box-truncated multivariate power series and the plethystic Exp/Log.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde_json::json;

use super::ratfunc::RationalFunction;
use super::volume::VolumeSequence;
use crate::error::{Error, Result};

/// Coefficient ring of a series: a Q-algebra carrying Adams operators.
pub trait SeriesCoeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn scaled(&self, c: &BigRational) -> Self;
    /// The m-th Adams operator on coefficients.
    fn psi(&self, m: u32) -> Self;
}

impl SeriesCoeff for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn scaled(&self, c: &BigRational) -> Self {
        self.scale(c)
    }
    fn psi(&self, m: u32) -> Self {
        self.adams(m)
    }
}

/// Power series in one variable per vertex, truncated to exponents `r <= bound` componentwise.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C: SeriesCoeff = RationalFunction> {
    bound: Vec<u32>,
    coeffs: BTreeMap<Vec<u32>, C>,
}

pub type RfSeries = TruncatedSeries<RationalFunction>;
pub type VolumeSeries = TruncatedSeries<VolumeSequence>;

fn within(r: &[u32], bound: &[u32]) -> bool {
    r.iter().zip(bound).all(|(a, b)| a <= b)
}

impl<C: SeriesCoeff> TruncatedSeries<C> {
    pub fn zero(bound: Vec<u32>) -> Self {
        TruncatedSeries {
            bound,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(bound: Vec<u32>) -> Self {
        let mut s = Self::zero(bound);
        let z = vec![0; s.bound.len()];
        s.set(z, C::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, C)>>(bound: Vec<u32>, it: I) -> Self {
        let mut s = Self::zero(bound);
        for (r, c) in it {
            let old = s.coeff(&r);
            s.set(r, old.plus(&c));
        }
        s
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn nvars(&self) -> usize {
        self.bound.len()
    }

    /// Stores `c` at `r`; exponents outside the box are dropped.
    pub fn set(&mut self, r: Vec<u32>, c: C) {
        assert_eq!(r.len(), self.bound.len(), "exponent length mismatch");
        if !within(&r, &self.bound) {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&r);
        } else {
            self.coeffs.insert(r, c);
        }
    }

    pub fn coeff(&self, r: &[u32]) -> C {
        self.coeffs.get(r).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&vec![0; self.bound.len()])
    }

    /// Nonzero terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            let v = r.coeff(k).plus(c);
            r.set(k.clone(), v);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.coeffs {
            let v = r.coeff(k).minus(c);
            r.set(k.clone(), v);
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_terms(
            self.bound.clone(),
            self.coeffs.iter().map(|(k, v)| (k.clone(), v.scaled(c))),
        )
    }

    pub fn scale_coeff(&self, c: &C) -> Self {
        Self::from_terms(
            self.bound.clone(),
            self.coeffs.iter().map(|(k, v)| (k.clone(), v.times(c))),
        )
    }

    /// Product; exact on the box because every contributing exponent is below the result.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.bound, o.bound, "series bounds differ");
        let mut acc: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                let r: Vec<u32> = a.iter().zip(b).map(|(i, j)| i + j).collect();
                if !within(&r, &self.bound) {
                    continue;
                }
                let p = x.times(y);
                match acc.get_mut(&r) {
                    Some(v) => *v = v.plus(&p),
                    None => {
                        acc.insert(r, p);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        TruncatedSeries {
            bound: self.bound.clone(),
            coeffs: acc,
        }
    }

    /// psi_m: coefficients by the Adams operator, t^r -> t^{mr}; out-of-box terms dropped.
    pub fn psi(&self, m: u32) -> Self {
        Self::from_terms(
            self.bound.clone(),
            self.coeffs
                .iter()
                .map(|(k, v)| (k.iter().map(|e| e * m).collect::<Vec<_>>(), v.psi(m)))
                .filter(|(k, _)| within(k, &self.bound)),
        )
    }

    fn max_total_degree(&self) -> u32 {
        self.bound.iter().sum()
    }

    /// Ordinary exponential of a series without constant term.
    fn exp_nilpotent(&self) -> Self {
        let mut result = Self::one(self.bound.clone());
        let mut power = Self::one(self.bound.clone());
        for k in 1..=self.max_total_degree() {
            power = power.mul(self).scale(&BigRational::new(1.into(), k.into()));
            if power.is_zero() {
                break;
            }
            result = result.add(&power);
        }
        result
    }

    /// Ordinary logarithm of a series with constant term 1.
    fn log_unipotent(&self) -> Self {
        let h = self.sub(&Self::one(self.bound.clone()));
        let mut result = Self::zero(self.bound.clone());
        let mut power = Self::one(self.bound.clone());
        for k in 1..=self.max_total_degree() {
            power = power.mul(&h);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            result = result.add(&power.scale(&BigRational::new(sign.into(), k.into())));
        }
        result
    }

    fn max_adams_index(&self) -> u32 {
        self.bound.iter().copied().max().unwrap_or(0).max(1)
    }

    /// Exp(F) = exp(sum_m psi_m(F)/m). F must have zero constant term.
    pub fn plethystic_exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut h = Self::zero(self.bound.clone());
        for m in 1..=self.max_adams_index() {
            h = h.add(&self.psi(m).scale(&BigRational::new(1.into(), m.into())));
        }
        Ok(h.exp_nilpotent())
    }

    /// Inverse of `plethystic_exp`: sum_m mu(m)/m psi_m(log G). G must have constant term 1.
    pub fn plethystic_log(&self) -> Result<Self> {
        if self.constant_term() != C::one() {
            return Err(Error::ConstantTermNotOne);
        }
        let l = self.log_unipotent();
        let mut f = Self::zero(self.bound.clone());
        for m in 1..=self.max_adams_index() {
            let mu = mobius(m);
            if mu != 0 {
                f = f.add(&l.psi(m).scale(&BigRational::new(mu.into(), m.into())));
            }
        }
        Ok(f)
    }

    /// `{"bound":[...], "terms":[{"r":[...], "coeff":"..."}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "bound": self.bound,
            "terms": self.coeffs.iter().map(|(r, c)| json!({"r": r, "coeff": c.to_string()})).collect::<Vec<_>>(),
        })
    }
}

/// Moebius function.
pub fn mobius(n: u32) -> i32 {
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl<C: SeriesCoeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(r, c)| {
                let mono: Vec<String> = r
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| if *e == 1 { format!("t{i}") } else { format!("t{i}^{e}") })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }

    #[test]
    fn exp_of_single_variable() {
        let f = RfSeries::from_terms(vec![3], [(vec![1], rf(1))]);
        let e = f.plethystic_exp().unwrap();
        for k in 0..=3 {
            assert_eq!(e.coeff(&[k]), rf(1));
        }
    }

    #[test]
    fn exp_of_two_variables() {
        let f = RfSeries::from_terms(vec![1, 1], [(vec![1, 0], rf(1)), (vec![0, 1], rf(1))]);
        let e = f.plethystic_exp().unwrap();
        for r in [[0, 0], [1, 0], [0, 1], [1, 1]] {
            assert_eq!(e.coeff(&r), rf(1));
        }
    }

    #[test]
    fn exp_of_q_t_degree_two() {
        // Exp(q t) = 1/(1 - q t): the t^2 coefficient is (q^2 + q^2)/2 = q^2.
        let q = RationalFunction::q();
        let f = RfSeries::from_terms(vec![2], [(vec![1], q.clone())]);
        let e = f.plethystic_exp().unwrap();
        assert_eq!(e.coeff(&[2]), &q * &q);
        assert_eq!(e.plethystic_log().unwrap(), f);
    }

    #[test]
    fn log_inverts_geometric_series() {
        let g = RfSeries::from_terms(vec![4], (0..=4).map(|k| (vec![k], rf(1))));
        let f = g.plethystic_log().unwrap();
        assert_eq!(f, RfSeries::from_terms(vec![4], [(vec![1], rf(1))]));
    }

    #[test]
    fn errors_on_bad_constant_terms() {
        let g = RfSeries::from_terms(vec![2], [(vec![0], rf(2))]);
        assert_eq!(g.plethystic_exp(), Err(Error::NonzeroConstantTerm));
        assert_eq!(g.plethystic_log(), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn mobius_values() {
        let v: Vec<i32> = (1..=10).map(mobius).collect();
        assert_eq!(v, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }
}
