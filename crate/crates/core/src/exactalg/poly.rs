//! Laurent polynomials in q with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::ZPoly;

/// Sparse Laurent polynomial: exponent -> nonzero rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    terms: BTreeMap<i64, BigRational>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    /// The variable q.
    pub fn q() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(c: BigRational, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        QPolynomial { terms }
    }

    /// Builds from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    /// Integer coefficients listed from degree 0 upwards.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i64, BigRational::from_integer(c.into()))),
        )
    }

    fn add_term(&mut self, k: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i64) -> BigRational {
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Highest exponent; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Lowest exponent; `None` for zero.
    pub fn low_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    /// Dense coefficient list from degree 0 when the polynomial is an ordinary one.
    pub fn coefficient_vec(&self) -> Option<Vec<BigRational>> {
        if self.low_degree().is_some_and(|k| k < 0) {
            return None;
        }
        let d = self.degree().unwrap_or(-1);
        Some((0..=d).map(|k| self.coeff(k)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(*k, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        QPolynomial {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                r.add_term(a + b, x * y);
            }
        }
        r
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QPolynomial {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: i64) -> Self {
        QPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes q -> q^m.
    pub fn adams(&self, m: u32) -> Self {
        QPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e * m as i64, c.clone()))
                .collect(),
        }
    }

    /// Evaluates at a rational point; q0 must be nonzero if negative exponents occur.
    pub fn eval(&self, q0: &BigRational) -> BigRational {
        let mut s = BigRational::zero();
        for (k, c) in &self.terms {
            let p = if *k >= 0 {
                num_traits::pow(q0.clone(), *k as usize)
            } else {
                num_traits::pow(q0.recip(), (-k) as usize)
            };
            s += c * p;
        }
        s
    }

    /// Splits into `(z, shift, scale)` with `self = z(q) * q^shift / scale`, `z` in Z[q].
    pub(crate) fn to_zpoly(&self) -> (ZPoly, i64, BigInt) {
        if self.is_zero() {
            return (ZPoly::zero(), 0, BigInt::one());
        }
        let lo = self.low_degree().unwrap();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let len = (self.degree().unwrap() - lo + 1) as usize;
        let mut v = vec![BigInt::zero(); len];
        for (k, c) in &self.terms {
            v[(k - lo) as usize] = c.numer() * (&den / c.denom());
        }
        (ZPoly::from_coeffs(v), lo, den)
    }

    pub(crate) fn from_zpoly(z: &ZPoly) -> Self {
        Self::from_terms(
            z.0.iter()
                .enumerate()
                .map(|(i, c)| (i as i64, BigRational::from_integer(c.clone()))),
        )
    }

    /// Rendering without spaces, used inside compact rational-function strings.
    pub fn to_compact_string(&self) -> String {
        render_terms(self, false)
    }
}

fn render_coeff_prefix(c: &BigRational, k: i64) -> String {
    let a = c.abs();
    if k == 0 {
        return if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        };
    }
    if a.is_one() {
        String::new()
    } else if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("({}/{})", a.numer(), a.denom())
    }
}

fn render_power(k: i64) -> String {
    match k {
        0 => String::new(),
        1 => "q".to_string(),
        _ => format!("q^{k}"),
    }
}

fn render_terms(p: &QPolynomial, spaced: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut s = String::new();
    for (i, (k, c)) in p.terms.iter().rev().enumerate() {
        let body = format!("{}{}", render_coeff_prefix(c, *k), render_power(*k));
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else if spaced {
            s.push_str(if neg { " - " } else { " + " });
        } else {
            s.push(if neg { '-' } else { '+' });
        }
        s.push_str(&body);
    }
    s
}

impl fmt::Display for QPolynomial {
    /// Decreasing degree with explicit `q^k` tokens, e.g. `q^7 + q^6 + 3q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self, true))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_cli_format() {
        let p = QPolynomial::from_int_coeffs(&[0, 0, 0, 2, 2, 3, 1, 1]);
        assert_eq!(p.to_string(), "q^7 + q^6 + 3q^5 + 2q^4 + 2q^3");
        let r = QPolynomial::from_int_coeffs(&[1, 4, 1]);
        assert_eq!(r.to_compact_string(), "q^2+4q+1");
        let m = QPolynomial::from_int_coeffs(&[-1, 0, 1]);
        assert_eq!(m.to_string(), "q^2 - 1");
    }

    #[test]
    fn laurent_eval() {
        let p = QPolynomial::q().add(&QPolynomial::monomial(BigRational::one(), -1));
        let v = p.eval(&BigRational::from_integer(2.into()));
        assert_eq!(v, BigRational::new(5.into(), 2.into()));
    }
}
