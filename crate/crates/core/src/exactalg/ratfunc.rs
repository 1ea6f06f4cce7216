//! Elements of Q(q), kept as reduced quotients of integer polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QPolynomial;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// `num / den` with `num, den` in Z[q] coprime over Q[q], joint content 1,
/// and `den` with positive leading coefficient. Equal functions are stored identically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: ZPoly,
    den: ZPoly,
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: ZPoly::zero(),
            den: ZPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// q^k for any integer k.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            RationalFunction {
                num: ZPoly::monomial(BigInt::one(), k as usize),
                den: ZPoly::one(),
            }
        } else {
            RationalFunction {
                num: ZPoly::one(),
                den: ZPoly::monomial(BigInt::one(), (-k) as usize),
            }
        }
    }

    pub fn from_int(c: i64) -> Self {
        RationalFunction {
            num: ZPoly::constant(c.into()),
            den: ZPoly::one(),
        }
    }

    pub fn from_rational(c: &BigRational) -> Self {
        RationalFunction {
            num: ZPoly::constant(c.numer().clone()),
            den: ZPoly::constant(c.denom().clone()),
        }
    }

    pub fn from_poly(p: &QPolynomial) -> Self {
        Self::new(p, &QPolynomial::one()).expect("nonzero denominator")
    }

    /// `num / den`, reduced. Fails if `den` is zero.
    pub fn new(num: &QPolynomial, den: &QPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (nz, ns, nd) = num.to_zpoly();
        let (dz, ds, dd) = den.to_zpoly();
        // num/den = (nz q^ns / nd) / (dz q^ds / dd)
        let mut n = nz.scale(&dd);
        let mut d = dz.scale(&nd);
        let shift = ns - ds;
        if shift >= 0 {
            n = n.shift_up(shift as usize);
        } else {
            d = d.shift_up((-shift) as usize);
        }
        Ok(Self::reduce(n, d))
    }

    fn reduce(n: ZPoly, d: ZPoly) -> Self {
        if n.is_zero() {
            return Self::zero();
        }
        let g = n.gcd(&d);
        let (n, d) = if g.degree() == Some(0) {
            (n, d)
        } else {
            (n.div_exact(&g), d.div_exact(&g))
        };
        Self::normalize_content(n, d)
    }

    fn normalize_content(n: ZPoly, d: ZPoly) -> Self {
        let mut c = n.content().gcd(&d.content());
        if d.lc().is_negative() {
            c = -c;
        }
        RationalFunction {
            num: n.div_scalar_exact(&c),
            den: d.div_scalar_exact(&c),
        }
    }

    pub fn numer(&self) -> QPolynomial {
        QPolynomial::from_zpoly(&self.num)
    }

    pub fn denom(&self) -> QPolynomial {
        QPolynomial::from_zpoly(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is a nonzero constant.
    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial value when the denominator is a constant, else `None`.
    pub fn as_polynomial(&self) -> Option<QPolynomial> {
        if !self.is_polynomial() {
            return None;
        }
        let d = BigRational::from_integer(self.den.0[0].clone());
        Some(QPolynomial::from_zpoly(&self.num).scale(&d.recip()))
    }

    /// The value when this is a constant, else `None`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.degree().unwrap_or(0) == 0 && self.is_polynomial() {
            let n = self.num.0.first().cloned().unwrap_or_default();
            Some(BigRational::new(n, self.den.0[0].clone()))
        } else {
            None
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize_content(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.recip()? } else { self.clone() };
        let mut r = Self::one();
        let mut b = base;
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                r = &r * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::normalize_content(self.num.scale(c.numer()), self.den.scale(c.denom()))
    }

    /// Adams operator: q -> q^m. Coprimality survives the substitution, so no gcd is needed.
    pub fn adams(&self, m: u32) -> Self {
        assert!(m >= 1, "Adams operator index must be positive");
        RationalFunction {
            num: self.num.adams(m as usize),
            den: self.den.adams(m as usize),
        }
    }

    /// Value at `q0`; errors at a pole.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = horner(&self.den, q0);
        if d.is_zero() {
            return Err(Error::PoleAtEvaluationPoint(q0.to_string()));
        }
        Ok(horner(&self.num, q0) / d)
    }

    /// Canonical `num / den` string (just `num` when the denominator is 1).
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Short form with the denominator factored into powers of q and cyclotomic factors,
    /// e.g. `(q^2+4q+1)/(q-1)^2`.
    pub fn to_compact_string(&self) -> String {
        let n = QPolynomial::from_zpoly(&self.num);
        let ns = if n.terms().count() > 1 && !self.den.is_one() {
            format!("({})", n.to_compact_string())
        } else {
            n.to_compact_string()
        };
        if self.den.is_one() {
            return ns;
        }
        format!("{}/{}", ns, factored_string(&self.den))
    }
}

fn horner(p: &ZPoly, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in p.0.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Cyclotomic polynomial Phi_n in Z[q].
pub(crate) fn cyclotomic(n: usize) -> ZPoly {
    let mut p = ZPoly::monomial(BigInt::one(), n).sub(&ZPoly::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p.div_exact(&cyclotomic(d));
        }
    }
    p
}

fn divides(p: &ZPoly, f: &ZPoly) -> Option<ZPoly> {
    let (df, dp) = (f.degree()?, p.degree()?);
    if df > dp {
        return None;
    }
    // Long division over Q with a monic divisor (cyclotomics are monic).
    let mut r = p.0.clone();
    let mut quo = vec![BigInt::zero(); dp - df + 1];
    for i in (0..=dp - df).rev() {
        let c = r[i + df].clone();
        if c.is_zero() {
            continue;
        }
        for (j, fc) in f.0.iter().enumerate() {
            r[i + j] -= &c * fc;
        }
        quo[i] = c;
    }
    if r.iter().all(|c| c.is_zero()) {
        Some(ZPoly::from_coeffs(quo))
    } else {
        None
    }
}

fn factored_string(d: &ZPoly) -> String {
    let content = d.content();
    let mut rest = d.div_scalar_exact(&content);
    let mut parts: Vec<String> = Vec::new();
    if !content.is_one() {
        parts.push(content.to_string());
    }
    let k = rest.low_degree();
    if k > 0 {
        rest = rest.shift_down(k);
        parts.push(if k == 1 { "q".into() } else { format!("q^{k}") });
    }
    let mut n = 1;
    while rest.degree().unwrap_or(0) > 0 && n <= 2 * rest.degree().unwrap() + 30 {
        let phi = cyclotomic(n);
        let mut e = 0;
        while let Some(qt) = divides(&rest, &phi) {
            rest = qt;
            e += 1;
        }
        if e > 0 {
            let s = format!("({})", QPolynomial::from_zpoly(&phi).to_compact_string());
            parts.push(if e == 1 { s } else { format!("{s}^{e}") });
        }
        n += 1;
    }
    if rest.degree().unwrap_or(0) > 0 {
        parts.push(format!("({})", QPolynomial::from_zpoly(&rest).to_compact_string()));
    }
    parts.concat()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = QPolynomial::from_zpoly(&self.num);
        if self.den.is_one() {
            write!(f, "{n}")
        } else {
            let d = QPolynomial::from_zpoly(&self.den);
            let wrap = |p: &QPolynomial| {
                if p.terms().count() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{} / {}", wrap(&n), wrap(&d))
        }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<&QPolynomial> for RationalFunction {
    fn from(p: &QPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return RationalFunction::reduce(self.num.add(&o.num), self.den.clone());
        }
        if self.den.is_one() {
            return RationalFunction::normalize_content(o.num.add(&self.num.mul(&o.den)), o.den.clone());
        }
        if o.den.is_one() {
            return RationalFunction::normalize_content(self.num.add(&o.num.mul(&self.den)), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.degree() == Some(0) {
            let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
            return RationalFunction::normalize_content(n, self.den.mul(&o.den));
        }
        let b1 = self.den.div_exact(&g);
        let d1 = o.den.div_exact(&g);
        let n = self.num.mul(&d1).add(&o.num.mul(&b1));
        RationalFunction::reduce(n, b1.mul(&o.den))
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &(-o)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel first so the product is already coprime.
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (a, d) = if g1.degree() == Some(0) {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1), o.den.div_exact(&g1))
        };
        let (c, b) = if g2.degree() == Some(0) {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2), self.den.div_exact(&g2))
        };
        RationalFunction::normalize_content(a.mul(&c), b.mul(&d))
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero; use `recip` for a fallible version.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &RationalFunction) -> RationalFunction {
        self * &o.recip().expect("division by zero rational function")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: &RationalFunction) -> RationalFunction { (&self).$m(o) }
        }
        impl<'a> $tr<RationalFunction> for &'a RationalFunction {
            type Output = RationalFunction;
            fn $m(self, o: RationalFunction) -> RationalFunction { self.$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for RationalFunction {
    fn sum<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(Self::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for RationalFunction {
    fn product<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(Self::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RationalFunction {
        RationalFunction::q()
    }
    fn c(n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }
    fn r(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn eval_examples() {
        assert_eq!(q().eval(&r(2)).unwrap(), r(2));
        let f = (q() * q() + c(4) * q() + c(1)) / ((q() - c(1)) * (q() - c(1)));
        assert_eq!(f.eval(&r(2)).unwrap(), r(13));
        let g = (q().pow(3).unwrap() - c(1)) / (q() - c(1));
        assert_eq!(g.eval(&r(3)).unwrap(), r(13));
        assert!(matches!(f.eval(&r(1)), Err(Error::PoleAtEvaluationPoint(_))));
    }

    #[test]
    fn adams_examples() {
        assert_eq!(q().adams(2), q().pow(2).unwrap());
        let f = c(1) / (c(1) - q().recip().unwrap());
        assert_eq!(f.adams(1), f);
        let g = (q() + c(1)) / (q() - c(1));
        let q3 = q().pow(3).unwrap();
        assert_eq!(g.adams(3), (&q3 + &c(1)) / (&q3 - &c(1)));
    }

    #[test]
    fn canonical_and_compact_strings() {
        let f = (q() * q() + c(4) * q() + c(1)) / ((q() - c(1)) * (q() - c(1)));
        assert_eq!(f.to_string(), "(q^2 + 4q + 1) / (q^2 - 2q + 1)");
        assert_eq!(crate::exactalg::parse_rf(&f.to_string()).unwrap(), f);
        assert_eq!(f.to_compact_string(), "(q^2+4q+1)/(q-1)^2");
        let b = (q() * q() + c(4) * q() + c(1)) / (q() * q());
        assert_eq!(b.to_compact_string(), "(q^2+4q+1)/q^2");
    }

    #[test]
    fn normalization_is_canonical() {
        let a = (c(2) * q() - c(2)) / (c(4) * q() * q() - c(4));
        let b = c(1) / (c(2) * q() + c(2));
        assert_eq!(a, b);
        let neg = c(1) / (c(1) - q());
        assert_eq!(neg, c(-1) / (q() - c(1)));
    }
}
