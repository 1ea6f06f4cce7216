//! The Ringel-Hall algebra of A_2 = (1 -> 2) over O_alpha = F_q[t]/(t^alpha).
//!
//! A representation of rank (r1, r2) is one matrix x: O^{r1} -> O^{r2}; its orbit is
//! labelled by the Smith data (q_0, ..., q_{alpha-1}), q_i counting invariants t^i.
//! Functions are Q-valued on orbits. The product `f * g` puts `g` on the submodule and
//! `f` on the quotient:
//! (f * g)(x) = sum over x-stable free M of rank(g) of f(x on O^r/M) g(x on M).

mod flags;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::json;

use crate::config::Caps;
use crate::error::{Error, Result};
use crate::exactalg::{rat, QPolynomial};
use crate::finitering::ORing;

/// Smith data (q_0, ..., q_{alpha-1}).
pub type Label = Vec<u32>;

/// An orbit: rank vector and Smith data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orbit {
    pub rank: [usize; 2],
    pub label: Label,
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.label.iter().map(|c| c.to_string()).collect();
        write!(f, "({},{})[{}]", self.rank[0], self.rank[1], l.join(","))
    }
}

/// All orbit labels in rank `rank`: sum q_i <= min(r1, r2).
pub fn orbit_labels(alpha: usize, rank: [usize; 2]) -> Vec<Label> {
    let m = rank[0].min(rank[1]) as u32;
    let mut out = Vec::new();
    let mut cur = vec![0u32; alpha];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Label>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for c in 0..=left {
            cur[i] = c;
            rec(i + 1, left - c, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, m, &mut cur, &mut out);
    out
}

/// Indecomposable orbits: the simples and t^i: O -> O for i < alpha.
pub fn is_indecomposable(o: &Orbit) -> bool {
    match o.rank {
        [1, 0] | [0, 1] => true,
        [1, 1] => o.label.iter().sum::<u32>() == 1,
        _ => false,
    }
}

/// A function on the orbits of one rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallFunction {
    alpha: usize,
    rank: [usize; 2],
    values: BTreeMap<Label, BigRational>,
}

impl HallFunction {
    pub fn zero(alpha: usize, rank: [usize; 2]) -> Self {
        HallFunction { alpha, rank, values: BTreeMap::new() }
    }

    pub fn from_values(alpha: usize, rank: [usize; 2], values: BTreeMap<Label, BigRational>) -> Result<Self> {
        let labels = orbit_labels(alpha, rank);
        if let Some(bad) = values.keys().find(|l| !labels.contains(l)) {
            return Err(Error::InvalidInput(format!("{bad:?} is not an orbit label in rank {rank:?}")));
        }
        let mut f = Self::zero(alpha, rank);
        for (l, v) in values {
            f.set(l, v);
        }
        Ok(f)
    }

    pub fn indicator(alpha: usize, o: &Orbit) -> Result<Self> {
        Self::from_values(alpha, o.rank, BTreeMap::from([(o.label.clone(), BigRational::one())]))
    }

    /// The unit: value 1 on the rank-zero representation.
    pub fn unit(alpha: usize) -> Self {
        Self::constant(alpha, [0, 0], BigRational::one())
    }

    pub fn constant(alpha: usize, rank: [usize; 2], c: BigRational) -> Self {
        let mut f = Self::zero(alpha, rank);
        for l in orbit_labels(alpha, rank) {
            f.set(l, c.clone());
        }
        f
    }

    /// 1_{eps_i}, i in {1, 2}.
    pub fn simple(alpha: usize, i: usize) -> Self {
        let rank = if i == 1 { [1, 0] } else { [0, 1] };
        Self::constant(alpha, rank, BigRational::one())
    }

    /// 1_{O_i}: the orbit of t^i in rank (1,1); i = alpha is the zero orbit.
    pub fn t_orbit(alpha: usize, i: usize) -> Self {
        let mut label = vec![0; alpha];
        if i < alpha {
            label[i] = 1;
        }
        Self::indicator(alpha, &Orbit { rank: [1, 1], label }).expect("valid label")
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn rank(&self) -> [usize; 2] {
        self.rank
    }

    pub fn get(&self, label: &[u32]) -> BigRational {
        self.values.get(label).cloned().unwrap_or_else(BigRational::zero)
    }

    fn set(&mut self, label: Label, v: BigRational) {
        if v.is_zero() {
            self.values.remove(&label);
        } else {
            self.values.insert(label, v);
        }
    }

    /// Nonzero values.
    pub fn values(&self) -> &BTreeMap<Label, BigRational> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.alpha != o.alpha || self.rank != o.rank {
            return Err(Error::InvalidInput(format!(
                "rank mismatch: {:?} vs {:?} (alpha {} vs {})",
                self.rank, o.rank, self.alpha, o.alpha
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (l, v) in &o.values {
            let s = out.get(l) + v;
            out.set(l.clone(), s);
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.alpha, self.rank);
        for (l, v) in &self.values {
            out.set(l.clone(), v * c);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "alpha": self.alpha,
            "rank": self.rank,
            "values": self.values.iter().map(|(l, v)| json!({"label": l, "value": v.to_string()})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for HallFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|(l, v)| format!("{v}*1{}", Orbit { rank: self.rank, label: l.clone() }))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of the tensor square, as coefficients of 1_a (x) 1_b.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Tensor {
    pub terms: BTreeMap<(Orbit, Orbit), BigRational>,
}

impl Tensor {
    fn add_term(&mut self, a: Orbit, b: Orbit, c: BigRational) {
        let e = self.terms.entry((a, b)).or_insert_with(BigRational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn from_pair(f: &HallFunction, g: &HallFunction) -> Tensor {
        let mut t = Tensor::default();
        for (la, va) in &f.values {
            for (lb, vb) in &g.values {
                t.add_term(
                    Orbit { rank: f.rank, label: la.clone() },
                    Orbit { rank: g.rank, label: lb.clone() },
                    va * vb,
                );
            }
        }
        t
    }

    pub fn add(&self, o: &Tensor) -> Tensor {
        let mut t = self.clone();
        for ((a, b), c) in &o.terms {
            t.add_term(a.clone(), b.clone(), c.clone());
        }
        t
    }
}

/// Delta(f)(x1, x2) = f(x1 + x2), over all splittings of the rank.
pub fn hall_coproduct(f: &HallFunction) -> Tensor {
    let mut t = Tensor::default();
    let [r1, r2] = f.rank;
    for s1 in 0..=r1 {
        for s2 in 0..=r2 {
            let (a, b) = ([s1, s2], [r1 - s1, r2 - s2]);
            for la in orbit_labels(f.alpha, a) {
                for lb in orbit_labels(f.alpha, b) {
                    let sum: Label = la.iter().zip(&lb).map(|(x, y)| x + y).collect();
                    let v = f.get(&sum);
                    if !v.is_zero() {
                        t.add_term(Orbit { rank: a, label: la.clone() }, Orbit { rank: b, label: lb }, v);
                    }
                }
            }
        }
    }
    t
}

/// Delta(f) = f (x) 1 + 1 (x) f.
pub fn is_primitive(f: &HallFunction) -> bool {
    let unit = HallFunction::unit(f.alpha);
    hall_coproduct(f) == Tensor::from_pair(f, &unit).add(&Tensor::from_pair(&unit, f))
}

/// Dimension of the primitive subspace in rank `rank`, by solving the linear condition
/// "Delta(f) has no mixed terms" over the orbit basis.
pub fn primitive_space_dim(alpha: usize, rank: [usize; 2]) -> usize {
    if rank == [0, 0] {
        return 0;
    }
    // Delta(1_O) is f (x) 1 + 1 (x) f plus mixed terms supported on decompositions of O;
    // distinct orbits have disjoint mixed supports, so the primitive subspace is spanned
    // by the indicators with no mixed terms.
    orbit_labels(alpha, rank)
        .into_iter()
        .filter(|l| is_primitive(&HallFunction::indicator(alpha, &Orbit { rank, label: l.clone() }).expect("label")))
        .count()
}

/// Where structure constants are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Specialization {
    /// Counting over F_q.
    AtQ(u32),
    /// q -> 1: structure constants interpolated as polynomials in q and evaluated at 1.
    Classical,
}

/// Fields used to interpolate structure constants, and the fields they are checked at.
pub const INTERPOLATION_FIELDS: [u32; 5] = [2, 3, 4, 5, 7];
pub const CHECK_FIELDS: [u32; 1] = [9];

type ProductKey = (Orbit, Orbit);

/// Hall algebra of (A_2, alpha) at one specialization, with a product cache.
pub struct HallAlgebra {
    alpha: usize,
    spec: Specialization,
    caps: Caps,
    cache: Mutex<HashMap<ProductKey, BTreeMap<Label, BigRational>>>,
}

impl HallAlgebra {
    pub fn new(alpha: usize, spec: Specialization, caps: Caps) -> Result<Self> {
        if let Specialization::AtQ(q) = spec {
            ORing::new(q, alpha)?;
        } else if alpha == 0 || alpha > crate::finitering::MAX_ALPHA {
            return Err(Error::InvalidInput(format!("alpha {alpha} out of range")));
        }
        Ok(HallAlgebra { alpha, spec, caps, cache: Mutex::new(HashMap::new()) })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn specialization(&self) -> Specialization {
        self.spec
    }

    /// 1_a * 1_b over F_q, as values on orbits of rank a + b.
    fn product_at(q: u32, alpha: usize, a: &Orbit, b: &Orbit, caps: &Caps) -> Result<BTreeMap<Label, BigRational>> {
        let ring = ORing::new(q, alpha)?;
        let rank = [a.rank[0] + b.rank[0], a.rank[1] + b.rank[1]];
        let mut out = BTreeMap::new();
        for label in orbit_labels(alpha, rank) {
            let census = flags::flag_census(&ring, rank, &label, b.rank, caps)?;
            let n = census.get(&(a.label.clone(), b.label.clone())).copied().unwrap_or(0);
            if n > 0 {
                out.insert(label, rat(n as i64));
            }
        }
        Ok(out)
    }

    /// Structure constants of 1_a * 1_b as polynomials in q.
    pub fn fitted_structure_constants(alpha: usize, a: &Orbit, b: &Orbit, caps: &Caps) -> Result<BTreeMap<Label, QPolynomial>> {
        let samples = INTERPOLATION_FIELDS
            .iter()
            .map(|&q| Ok((q, Self::product_at(q, alpha, a, b, caps)?)))
            .collect::<Result<Vec<_>>>()?;
        let rank = [a.rank[0] + b.rank[0], a.rank[1] + b.rank[1]];
        let mut out = BTreeMap::new();
        for label in orbit_labels(alpha, rank) {
            let pts: Vec<(BigRational, BigRational)> = samples
                .iter()
                .map(|(q, m)| (rat(*q as i64), m.get(&label).cloned().unwrap_or_else(BigRational::zero)))
                .collect();
            let p = lagrange(&pts);
            if !p.is_zero() {
                out.insert(label, p);
            }
        }
        for &q in &CHECK_FIELDS {
            let m = Self::product_at(q, alpha, a, b, caps)?;
            for label in orbit_labels(alpha, rank) {
                let fit = out.get(&label).map(|p| p.eval(&rat(q as i64))).unwrap_or_else(BigRational::zero);
                let got = m.get(&label).cloned().unwrap_or_else(BigRational::zero);
                if fit != got {
                    return Err(Error::InvalidInput(format!(
                        "structure constant of {a} * {b} at {label:?} is not a polynomial of degree < {} in q",
                        INTERPOLATION_FIELDS.len()
                    )));
                }
            }
        }
        Ok(out)
    }

    fn basis_product(&self, a: &Orbit, b: &Orbit) -> Result<BTreeMap<Label, BigRational>> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.cache.lock().expect("cache").get(&key) {
            return Ok(v.clone());
        }
        let v = match self.spec {
            Specialization::AtQ(q) => Self::product_at(q, self.alpha, a, b, &self.caps)?,
            Specialization::Classical => Self::fitted_structure_constants(self.alpha, a, b, &self.caps)?
                .into_iter()
                .map(|(l, p)| (l, p.eval(&BigRational::one())))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        };
        self.cache.lock().expect("cache").insert(key, v.clone());
        Ok(v)
    }

    /// f * g: g on the submodule, f on the quotient.
    pub fn product(&self, f: &HallFunction, g: &HallFunction) -> Result<HallFunction> {
        if f.alpha != self.alpha || g.alpha != self.alpha {
            return Err(Error::InvalidInput("alpha mismatch".into()));
        }
        let rank = [f.rank[0] + g.rank[0], f.rank[1] + g.rank[1]];
        let mut out = HallFunction::zero(self.alpha, rank);
        for (la, va) in &f.values {
            for (lb, vb) in &g.values {
                let a = Orbit { rank: f.rank, label: la.clone() };
                let b = Orbit { rank: g.rank, label: lb.clone() };
                for (l, c) in self.basis_product(&a, &b)? {
                    let s = out.get(&l) + c * va * vb;
                    out.set(l, s);
                }
            }
        }
        Ok(out)
    }

    /// [f, g] = f * g - g * f.
    pub fn bracket(&self, f: &HallFunction, g: &HallFunction) -> Result<HallFunction> {
        self.product(f, g)?.sub(&self.product(g, f)?)
    }

    /// Componentwise product on the tensor square: (a (x) b)(c (x) d) = (a*c) (x) (b*d).
    pub fn tensor_product(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        let mut out = Tensor::default();
        for ((a, b), u) in &x.terms {
            for ((c, d), v) in &y.terms {
                let ac = self.basis_product(a, c)?;
                let bd = self.basis_product(b, d)?;
                let r1 = [a.rank[0] + c.rank[0], a.rank[1] + c.rank[1]];
                let r2 = [b.rank[0] + d.rank[0], b.rank[1] + d.rank[1]];
                for (l1, c1) in &ac {
                    for (l2, c2) in &bd {
                        out.add_term(
                            Orbit { rank: r1, label: l1.clone() },
                            Orbit { rank: r2, label: l2.clone() },
                            c1 * c2 * u * v,
                        );
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Lagrange interpolation through distinct points.
fn lagrange(pts: &[(BigRational, BigRational)]) -> QPolynomial {
    let mut acc = QPolynomial::zero();
    for (i, (xi, yi)) in pts.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = QPolynomial::constant(yi.clone());
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i != j {
                let lin = QPolynomial::q().sub(&QPolynomial::constant(xj.clone()));
                basis = basis.mul(&lin).scale(&(BigRational::one() / (xi - xj)));
            }
        }
        acc = acc.add(&basis);
    }
    acc
}

/// Product at a single finite field.
pub fn hall_product(f: &HallFunction, g: &HallFunction, q: u32, caps: &Caps) -> Result<HallFunction> {
    HallAlgebra::new(f.alpha, Specialization::AtQ(q), *caps)?.product(f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(alpha: usize, i: usize) -> HallFunction {
        HallFunction::simple(alpha, i)
    }

    #[test]
    fn simple_products() {
        for alpha in 1..=2 {
            for q in [2, 3] {
                let h = HallAlgebra::new(alpha, Specialization::AtQ(q), Caps::default()).unwrap();
                let p12 = h.product(&e(alpha, 1), &e(alpha, 2)).unwrap();
                assert_eq!(p12, HallFunction::constant(alpha, [1, 1], BigRational::one()));
                let p21 = h.product(&e(alpha, 2), &e(alpha, 1)).unwrap();
                assert_eq!(p21, HallFunction::t_orbit(alpha, alpha));
                let u = HallFunction::unit(alpha);
                assert_eq!(h.product(&p12, &u).unwrap(), p12);
                assert_eq!(h.product(&u, &p21).unwrap(), p21);
            }
        }
    }

    #[test]
    fn bracket_of_simples() {
        let alpha = 2;
        let h = HallAlgebra::new(alpha, Specialization::AtQ(3), Caps::default()).unwrap();
        let b = h.bracket(&e(alpha, 1), &e(alpha, 2)).unwrap();
        let s = HallFunction::t_orbit(alpha, 0).add(&HallFunction::t_orbit(alpha, 1)).unwrap();
        assert_eq!(b, s);
    }

    #[test]
    fn fitted_square_of_simple() {
        // 1_{e1} * 1_{e1} = q^{alpha-1}(q+1) 1_{2 e1}.
        let a = Orbit { rank: [1, 0], label: vec![0, 0] };
        let fit = HallAlgebra::fitted_structure_constants(2, &a, &a, &Caps::default()).unwrap();
        assert_eq!(fit[&vec![0, 0]], QPolynomial::from_int_coeffs(&[0, 1, 1]));
    }

    #[test]
    fn primitives() {
        for alpha in 1..=3 {
            assert_eq!(primitive_space_dim(alpha, [1, 1]), alpha);
            assert_eq!(primitive_space_dim(alpha, [1, 0]), 1);
            assert_eq!(primitive_space_dim(alpha, [2, 1]), 0);
        }
        assert!(!is_primitive(&HallFunction::t_orbit(2, 2)));
        assert!(is_primitive(&HallFunction::t_orbit(2, 1)));
    }

    #[test]
    fn coproduct_of_zero_orbit() {
        let d = hall_coproduct(&HallFunction::t_orbit(1, 1));
        // Zero orbit in rank (1,1): (1,1)(x)0, e1(x)e2, e2(x)e1, 0(x)(1,1).
        assert_eq!(d.terms.len(), 4);
    }
}
