//! Rank-one moment-fiber counts and the alpha -> infinity limits.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::toric::{subset_data, toric_kac_chains};
use crate::error::{cap_error, Error, Result};
use crate::exactalg::{QPolynomial, RationalFunction};
use crate::quiver::{set_partitions, Quiver};

/// Largest arrow count for the subset-chain sum of `limit_a`.
pub const LIMIT_MAX_ARROWS: usize = 10;
/// Largest arrow count for explicit chain enumeration in `order_complex_hilbert`.
pub const HILBERT_MAX_ARROWS: usize = 8;

fn one_minus_inv_q() -> RationalFunction {
    RationalFunction::one() - RationalFunction::q_pow(-1)
}

/// #mu^{-1}(0) for rank vector (1,...,1) over O_alpha, assembled from toric Kac
/// polynomials of vertex restrictions:
/// (1-q^{-1})^{|Q_0|} q^{alpha |Q_1|} sum_{partitions} prod_j A_{Q|I_j}/(1-q^{-1}).
/// A block whose restriction is disconnected carries no indecomposable and contributes 0.
pub fn rank1_fiber_count(q: &Quiver, alpha: usize) -> Result<RationalFunction> {
    let n = q.num_vertices();
    let c = one_minus_inv_q();
    let cinv = c.recip()?;
    // Cache A over vertex subsets.
    let mut a_of: HashMap<Vec<usize>, RationalFunction> = HashMap::new();
    let mut total = RationalFunction::zero();
    for part in set_partitions(n) {
        let mut prod = RationalFunction::one();
        for block in &part {
            let a = match a_of.get(block) {
                Some(v) => v.clone(),
                None => {
                    let sub = q.restrict_vertices(block);
                    let v = if sub.is_connected() {
                        RationalFunction::from_poly(&toric_kac_chains(&sub, alpha)?) * &cinv
                    } else {
                        RationalFunction::zero()
                    };
                    a_of.insert(block.clone(), v.clone());
                    v
                }
            };
            prod = prod * a;
            if prod.is_zero() {
                break;
            }
        }
        total = total + prod;
    }
    Ok(total * c.pow(n as i64)? * RationalFunction::q_pow((alpha * q.num_arrows()) as i64))
}

fn require_2_connected(q: &Quiver, cap: usize) -> Result<()> {
    if !q.is_2_connected() {
        return Err(Error::Not2Connected);
    }
    if q.num_arrows() > cap {
        return Err(cap_error("arrows", q.num_arrows(), cap));
    }
    Ok(())
}

/// A_Q = lim q^{-alpha b} A_{(Q,alpha),1}
///     = (1-q^{-1})^b sum_{E_1 < ... < E_s = Q_1} prod_{j<s} 1/(q^{b - b(E_j)} - 1).
pub fn limit_a(q: &Quiver) -> Result<RationalFunction> {
    require_2_connected(q, LIMIT_MAX_ARROWS)?;
    let sd = subset_data(q)?;
    let b = q.betti();
    let n = sd.betti.len();
    let full = n - 1;
    // w depends only on b(E).
    let w: Vec<RationalFunction> = (0..=b)
        .map(|bb| {
            if bb == b {
                Ok(RationalFunction::zero())
            } else {
                (RationalFunction::q_pow(b - bb) - RationalFunction::one()).recip()
            }
        })
        .collect::<Result<_>>()?;
    // s[E] = chains ending at E; t[E] = w(E) s[E].
    let mut t: Vec<RationalFunction> = vec![RationalFunction::zero(); n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|e| e.count_ones());
    let mut s_full = RationalFunction::zero();
    for &e in &order {
        let mut s = RationalFunction::one();
        if e != 0 {
            let mut sub = (e - 1) & e;
            loop {
                if !t[sub].is_zero() {
                    s = s + &t[sub];
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & e;
            }
        }
        if e == full {
            s_full = s;
        } else {
            t[e] = &w[sd.betti[e] as usize] * &s;
        }
    }
    Ok(one_minus_inv_q().pow(b)? * s_full)
}

/// B = lim q^{-alpha(2|Q_1| - |Q_0| + 1)} #mu^{-1}(0) = A_Q (1-q^{-1})^{|Q_0|-1}.
pub fn limit_b(q: &Quiver) -> Result<RationalFunction> {
    Ok(limit_a(q)? * one_minus_inv_q().pow(q.num_vertices() as i64 - 1)?)
}

/// Fine Hilbert series of the order complex of proper nonempty arrow subsets,
/// specialised at u_E = q^{-(b - b(E))}, by explicit chain enumeration.
pub fn order_complex_hilbert(q: &Quiver) -> Result<RationalFunction> {
    require_2_connected(q, HILBERT_MAX_ARROWS)?;
    let sd = subset_data(q)?;
    let b = q.betti();
    let full = sd.betti.len() - 1;
    // Chains grouped by the multiset of exponents b - b(E), as counts per exponent.
    let mut census: HashMap<Vec<u32>, u64> = HashMap::new();
    let mut counts = vec![0u32; b as usize + 1];
    fn rec(
        last: usize,
        full: usize,
        b: i64,
        betti: &[i64],
        counts: &mut Vec<u32>,
        census: &mut HashMap<Vec<u32>, u64>,
    ) {
        *census.entry(counts.clone()).or_insert(0) += 1;
        // Proper supersets of `last` other than the full set.
        let free = full & !last;
        let mut s = free;
        while s != 0 {
            let next = last | s;
            if next != full {
                let e = (b - betti[next]) as usize;
                counts[e] += 1;
                rec(next, full, b, betti, counts, census);
                counts[e] -= 1;
            }
            s = (s - 1) & free;
        }
    }
    rec(0, full, b, &sd.betti, &mut counts, &mut census);
    // u/(1-u) with u = q^{-e} equals 1/(q^e - 1).
    let x: Vec<RationalFunction> = (0..=b)
        .map(|e| {
            if e == 0 {
                Ok(RationalFunction::zero())
            } else {
                (RationalFunction::q_pow(e) - RationalFunction::one()).recip()
            }
        })
        .collect::<Result<_>>()?;
    let mut total = RationalFunction::zero();
    for (mult, n) in census {
        let mut term = RationalFunction::from_int(n as i64);
        for (e, &k) in mult.iter().enumerate() {
            if k > 0 {
                term = term * x[e].pow(k as i64)?;
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// First `k` coefficients of f(q) as a series in q^{-1}, starting at q^{deg num - deg den}:
/// returns (leading exponent, coefficients).
pub fn expand_at_infinity(f: &RationalFunction, k: usize) -> (i64, Vec<BigRational>) {
    let num = f.numer();
    let den = f.denom();
    let (dn, dd) = (num.degree().unwrap_or(0), den.degree().unwrap());
    let rev = |p: &QPolynomial, d: i64| -> Vec<BigRational> { (0..k as i64).map(|i| p.coeff(d - i)).collect() };
    let (a, b) = (rev(&num, dn), rev(&den, dd));
    let mut c: Vec<BigRational> = Vec::with_capacity(k);
    for i in 0..k {
        let mut s = a[i].clone();
        for j in 1..=i {
            s -= &b[j] * &c[i - j];
        }
        c.push(s / &b[0]);
    }
    if num.is_zero() {
        return (0, vec![BigRational::zero(); k]);
    }
    (dn - dd, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{parse_rf, rat};

    #[test]
    fn cyclic_three_limits() {
        let c3 = Quiver::cycle(3);
        assert_eq!(limit_a(&c3).unwrap(), parse_rf("(q^2+4q+1)/(q-1)^2").unwrap());
        assert_eq!(limit_b(&c3).unwrap(), parse_rf("(q^2+4q+1)/q^2").unwrap());
        assert_eq!(order_complex_hilbert(&c3).unwrap(), parse_rf("1 + 6/(q-1) + 6/(q-1)^2").unwrap());
    }

    #[test]
    fn jordan_limits() {
        let j = Quiver::jordan();
        assert_eq!(limit_a(&j).unwrap(), RationalFunction::one());
        assert_eq!(order_complex_hilbert(&j).unwrap(), RationalFunction::one());
    }

    #[test]
    fn bridges_rejected() {
        assert!(matches!(limit_a(&Quiver::a2()), Err(Error::Not2Connected)));
        assert!(matches!(order_complex_hilbert(&Quiver::a2()), Err(Error::Not2Connected)));
    }

    #[test]
    fn hilbert_identity_two_cycle() {
        let q = Quiver::new(2, &[(0, 1), (1, 0)]).unwrap();
        let b = q.betti();
        let c = one_minus_inv_q();
        let factor = c.pow(b).unwrap() * (RationalFunction::one() - RationalFunction::q_pow(-b)).recip().unwrap();
        assert_eq!(limit_a(&q).unwrap(), factor * order_complex_hilbert(&q).unwrap());
    }

    #[test]
    fn two_cycle_limit_matches_leading_coefficients() {
        // q^{-alpha b} A_alpha stabilises coefficientwise in q^{-1} towards A_Q.
        let q = Quiver::new(2, &[(0, 1), (1, 0)]).unwrap();
        let (lead, lim) = expand_at_infinity(&limit_a(&q).unwrap(), 4);
        assert_eq!(lead, 0);
        for alpha in 5..=6 {
            let p = toric_kac_chains(&q, alpha).unwrap();
            let d = alpha as i64 * q.betti();
            for (i, c) in lim.iter().enumerate() {
                assert_eq!(&p.coeff(d - i as i64), c);
            }
        }
    }

    #[test]
    fn rank1_fibers_small() {
        assert_eq!(rank1_fiber_count(&Quiver::jordan(), 1).unwrap(), parse_rf("q^2").unwrap());
        assert_eq!(rank1_fiber_count(&Quiver::a2(), 1).unwrap(), parse_rf("2q-1").unwrap());
        let v = rank1_fiber_count(&Quiver::a2(), 1).unwrap().eval(&rat(5)).unwrap();
        assert_eq!(v, rat(9));
    }
}
