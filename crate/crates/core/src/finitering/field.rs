//! Finite fields F_{p^k} for p in {2,3,5,7}, k in {1,2}, with lookup tables.

use crate::error::{Error, Result};

/// F_q with elements encoded as integers `0..q`: the base-p digits are the
/// coefficients of a polynomial in the generator modulo a fixed irreducible.
#[derive(Clone, Debug)]
pub struct Fq {
    p: u32,
    k: u32,
    q: u32,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Irreducible x^2 + c1 x + c0 over F_p, as (c1, c0).
fn quadratic_modulus(p: u32) -> (u32, u32) {
    match p {
        2 => (1, 1), // x^2 + x + 1
        3 => (0, 1), // x^2 + 1
        5 => (0, 2), // x^2 + 2
        7 => (0, 1), // x^2 + 1
        _ => unreachable!(),
    }
}

impl Fq {
    /// The field with `q` elements, `q` in {2,3,4,5,7,9,25,49}.
    pub fn new(q: u32) -> Result<Self> {
        let (p, k) = match q {
            2 | 3 | 5 | 7 => (q, 1),
            4 => (2, 2),
            9 => (3, 2),
            25 => (5, 2),
            49 => (7, 2),
            _ => return Err(Error::UnsupportedField(q)),
        };
        let n = q as usize;
        let mut add = vec![0u8; n * n];
        let mut mul = vec![0u8; n * n];
        let dig = |x: u32| (x % p, x / p);
        let enc = |a0: u32, a1: u32| (a0 % p + p * (a1 % p)) as u8;
        for a in 0..q {
            for b in 0..q {
                let (a0, a1) = dig(a);
                let (b0, b1) = dig(b);
                add[(a * q + b) as usize] = enc(a0 + b0, a1 + b1);
                let m = if k == 1 {
                    (a * b % p) as u8
                } else {
                    // (a0 + a1 x)(b0 + b1 x) with x^2 = -c1 x - c0.
                    let (c1, c0) = quadratic_modulus(p);
                    let c = a0 * b0;
                    let x1 = a0 * b1 + a1 * b0;
                    let x2 = a1 * b1;
                    let r0 = (c + (p - c0) * x2) % p;
                    let r1 = (x1 + (p - c1) * x2) % p;
                    enc(r0, r1)
                };
                mul[(a * q + b) as usize] = m;
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[(a * q + b) as usize] == 0).unwrap() as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[(a * q + b) as usize] == 1).unwrap() as u8
                }
            })
            .collect();
        Ok(Fq {
            p,
            k,
            q,
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `inv(0)` is 0 by convention.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut r = 1u8;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        r
    }

    /// Image of an integer in the prime field.
    pub fn from_int(&self, n: i64) -> u8 {
        n.rem_euclid(self.p as i64) as u8
    }

    pub fn frobenius(&self, a: u8) -> u8 {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u8) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const QS: [u32; 8] = [2, 3, 4, 5, 7, 9, 25, 49];

    #[test]
    fn field_axioms() {
        for q in QS {
            let f = Fq::new(q).unwrap();
            let n = q as u8;
            for a in 0..n {
                assert_eq!(f.pow(a, q as u64), a, "x^q = x in F_{q}");
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..n {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..n {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism() {
        for q in QS {
            let f = Fq::new(q).unwrap();
            let mut img: Vec<u8> = (0..q as u8).map(|a| f.frobenius(a)).collect();
            for a in 0..q as u8 {
                for b in 0..q as u8 {
                    assert_eq!(f.frobenius(f.mul(a, b)), f.mul(f.frobenius(a), f.frobenius(b)));
                    assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
                }
            }
            img.sort_unstable();
            img.dedup();
            assert_eq!(img.len(), q as usize);
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic() {
        for q in [2, 3, 4, 5, 7, 9] {
            let f = Fq::new(q).unwrap();
            assert!((1..q as u8).any(|a| f.order(a) == q - 1), "no generator in F_{q}");
        }
    }

    #[test]
    fn unsupported_sizes() {
        assert_eq!(Fq::new(8).unwrap_err(), Error::UnsupportedField(8));
        assert!(Fq::new(6).is_err());
    }
}
