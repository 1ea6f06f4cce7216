//! Jet counts from zeta functions, and Kac polynomials from moment-map fiber counts.

use num_rational::BigRational;

use super::closed::{gloop_z, kronecker_z};
use super::limits::rank1_fiber_count;
use crate::error::{Error, Result};
use crate::exactalg::{PowerSeries, RationalFunction, RfSeries};
use crate::quiver::Quiver;

/// N_1..N_{n_max} from Z(T), T = q^{-s}, where P(q^{-m} T) = (1 - T Z(T)) / (1 - T)
/// and m is the ambient dimension. Z = 0 (the zero map) gives N_n = q^{mn}.
pub fn poincare_from_zeta(z: &PowerSeries, m: usize, n_max: usize) -> Result<Vec<RationalFunction>> {
    let prec = n_max + 1;
    let t = PowerSeries::t(prec);
    let one = PowerSeries::constant(RationalFunction::one(), prec);
    let p = (one.clone() - t.clone() * z.clone()) * (one - t).recip()?;
    Ok((1..=n_max)
        .map(|n| {
            let c = if n < p.precision() { p.coeff(n).clone() } else { RationalFunction::zero() };
            c * RationalFunction::q_pow((m * n) as i64)
        })
        .collect())
}

/// `poincare_from_zeta` with coefficients evaluated at q = q0.
pub fn poincare_from_zeta_at(z: &PowerSeries, q0: &BigRational, m: usize, n_max: usize) -> Result<Vec<BigRational>> {
    // Evaluate Z first so that a pole of Z at q0 is reported.
    z.eval_coeffs(q0)?;
    poincare_from_zeta(z, m, n_max)?.iter().map(|c| c.eval(q0)).collect()
}

/// |GL_n(F_q[t]/(t^alpha))|.
pub fn gl_order(n: usize, alpha: usize) -> RationalFunction {
    let n = n as i64;
    let mut out = RationalFunction::q_pow((alpha as i64 - 1) * n * n);
    for i in 0..n {
        out = out * (RationalFunction::q_pow(n) - RationalFunction::q_pow(i));
    }
    out
}

/// Kac polynomials from zero-fiber counts: Sum_r #mu^{-1}(0)/|GL_r| q^{alpha <r,r>} t^r
/// = Exp(Sum_r A_r/(1-q^{-1}) t^r). `fiber(r)` supplies #mu^{-1}(0) for 0 < r <= bound.
pub fn kac_from_fibers(
    q: &Quiver,
    alpha: usize,
    bound: &[u32],
    mut fiber: impl FnMut(&[u32]) -> Result<RationalFunction>,
) -> Result<RfSeries> {
    if bound.len() != q.num_vertices() {
        return Err(Error::DimensionMismatch { expected: q.num_vertices(), got: bound.len() });
    }
    let mut vol = RfSeries::one(bound.to_vec());
    let mut r = vec![0u32; bound.len()];
    loop {
        // Next vector in the box, odometer order.
        let mut i = 0;
        while i < r.len() && r[i] == bound[i] {
            r[i] = 0;
            i += 1;
        }
        if i == r.len() {
            break;
        }
        r[i] += 1;
        let ri: Vec<i64> = r.iter().map(|&x| x as i64).collect();
        let mut v = fiber(&r)? * RationalFunction::q_pow(alpha as i64 * q.euler_form(&ri, &ri)?);
        for &n in &r {
            v = v * gl_order(n as usize, alpha).recip()?;
        }
        vol.set(r.clone(), v);
    }
    let c = RationalFunction::one() - RationalFunction::q_pow(-1);
    Ok(vol.plethystic_log()?.scale_coeff(&c))
}

/// Zero-fiber counts N_1..N_{n_max} for the g-loop quiver in rank 2, from its zeta function.
pub fn gloop_fiber_from_zeta(g: usize, n_max: usize) -> Result<Vec<RationalFunction>> {
    poincare_from_zeta(&gloop_z(g, n_max + 1)?, 8 * g, n_max)
}

/// Zero-fiber counts for the r-Kronecker quiver in rank (1,2), from its zeta function.
pub fn kronecker_fiber_from_zeta(r: usize, n_max: usize) -> Result<Vec<RationalFunction>> {
    poincare_from_zeta(&kronecker_z(r, n_max + 1)?, 4 * r, n_max)
}

/// A_{(Q,alpha),2} for the g-loop quiver, from the zeta function.
pub fn gloop_kac_from_zeta(g: usize, alpha: usize) -> Result<RationalFunction> {
    let n2 = gloop_fiber_from_zeta(g, alpha)?.pop().expect("alpha >= 1");
    let quiver = Quiver::g_loop(g);
    let a = kac_from_fibers(&quiver, alpha, &[2], |r| {
        Ok(match r[0] {
            1 => RationalFunction::q_pow((2 * g * alpha) as i64),
            _ => n2.clone(),
        })
    })?;
    Ok(a.coeff(&[2]))
}

/// A_{(Q,alpha),(1,2)} for the r-Kronecker quiver, from the zeta function.
pub fn kronecker_kac_from_zeta(r: usize, alpha: usize) -> Result<RationalFunction> {
    if alpha == 0 {
        return Err(Error::InvalidInput("alpha must be at least 1".into()));
    }
    let n12 = kronecker_fiber_from_zeta(r, alpha)?.pop().expect("alpha >= 1");
    let quiver = Quiver::kronecker(r);
    let n11 = rank1_fiber_count(&quiver, alpha)?;
    let a = kac_from_fibers(&quiver, alpha, &[1, 2], |d| match d {
        [1, 1] => Ok(n11.clone()),
        [1, 2] => Ok(n12.clone()),
        // No arrows are supported on these rank vectors.
        [_, 0] | [0, _] => Ok(RationalFunction::one()),
        _ => unreachable!("box (1,2)"),
    })?;
    Ok(a.coeff(&[1, 2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;
    use crate::kacpoly::{gloop_a2, gloop_fiber, kronecker_a};

    #[test]
    fn zero_map_convention() {
        let n = poincare_from_zeta(&PowerSeries::zero(4), 2, 3).unwrap();
        assert_eq!(n, vec![RationalFunction::q_pow(2), RationalFunction::q_pow(4), RationalFunction::q_pow(6)]);
    }

    #[test]
    fn gloop_fibers_agree() {
        for g in 1..=3 {
            let n = gloop_fiber_from_zeta(g, 3).unwrap();
            for (i, v) in n.iter().enumerate() {
                assert_eq!(v, &gloop_fiber(g, i + 1).unwrap());
            }
        }
        let n = poincare_from_zeta_at(&gloop_z(2, 3).unwrap(), &rat(2), 16, 1).unwrap();
        assert_eq!(n, vec![rat(11776)]);
    }

    #[test]
    fn gloop_rank2_from_zeta() {
        for alpha in 1..=3 {
            assert_eq!(gloop_kac_from_zeta(2, alpha).unwrap(), gloop_a2(2, alpha).unwrap());
        }
    }

    #[test]
    fn kronecker_from_zeta() {
        for alpha in 1..=3 {
            assert_eq!(kronecker_kac_from_zeta(3, alpha).unwrap(), kronecker_a(3, alpha).unwrap());
        }
    }
}
