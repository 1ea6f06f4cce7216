//! The groups GL_r(O_alpha): order formula and exhaustive enumeration.

use num_bigint::BigUint;
use num_traits::One;

use super::fqlinalg::FqMatrix;
use super::local::ORing;
use super::matrix::OMatrix;
use crate::error::{cap_error, Result};

/// |GL_r(O_alpha)| = q^{(alpha-1) r^2} prod_{i<r} (q^r - q^i).
pub fn gl_order(q: u32, alpha: usize, r: usize) -> BigUint {
    let qb = BigUint::from(q);
    let mut n = qb.pow(((alpha - 1) * r * r) as u32);
    for i in 0..r {
        n *= qb.pow(r as u32) - qb.pow(i as u32);
    }
    n
}

/// Order of prod_i GL_{r_i}(O_alpha).
pub fn gl_order_rank(q: u32, alpha: usize, rank: &[usize]) -> BigUint {
    rank.iter().fold(BigUint::one(), |acc, &r| acc * gl_order(q, alpha, r))
}

/// Every element of GL_r(O_alpha), residues in lexicographic order; errors above `cap`.
pub fn gl_enumerate(ring: &ORing, r: usize, cap: u64) -> Result<Vec<OMatrix>> {
    let order = gl_order(ring.q(), ring.alpha(), r);
    if order > BigUint::from(cap) {
        return Err(cap_error(&format!("GL_{r}(O_{})", ring.alpha()), &order, cap));
    }
    let q = ring.q() as u64;
    let f = ring.field();
    let n = r * r;
    let mut out = Vec::new();
    let residues = q.pow(n as u32);
    let lifts = q.pow(((ring.alpha() - 1) * n) as u32);
    for res in 0..residues {
        let mut digits = vec![0u8; n];
        let mut x = res;
        for d in digits.iter_mut() {
            *d = (x % q) as u8;
            x /= q;
        }
        if FqMatrix::from_data(r, r, digits.clone()).rank(f) != r {
            continue;
        }
        for lift in 0..lifts {
            let mut m = OMatrix::zero(r, r);
            let mut y = lift;
            for (k, &d) in digits.iter().enumerate() {
                let mut e = ring.from_fq(d);
                for i in 1..ring.alpha() {
                    e.c[i] = (y % q) as u8;
                    y /= q;
                }
                m.data[k] = e;
            }
            out.push(m);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_examples() {
        assert_eq!(gl_order(2, 1, 2), BigUint::from(6u32));
        assert_eq!(gl_order(2, 2, 2), BigUint::from(96u32));
        assert_eq!(gl_order(3, 2, 1), BigUint::from(6u32));
    }

    #[test]
    fn enumeration_matches_order() {
        for (q, a, r) in [(2, 1, 2), (2, 2, 1), (2, 2, 2), (3, 1, 2), (3, 2, 1)] {
            let ring = ORing::new(q, a).unwrap();
            let els = gl_enumerate(&ring, r, 100_000).unwrap();
            assert_eq!(BigUint::from(els.len()), gl_order(q, a, r));
            assert!(els.iter().all(|m| m.is_invertible(&ring)));
        }
    }

    #[test]
    fn cap_is_enforced() {
        let ring = ORing::new(3, 2).unwrap();
        assert!(gl_enumerate(&ring, 2, 100).is_err());
    }
}
