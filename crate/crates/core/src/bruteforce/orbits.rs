//! Orbit enumeration with End/Aut analysis.

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::space::{GroupElems, RepSpace};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::finitering::{FqMatrix, OMatrix};
use crate::quiver::Quiver;

/// One GL-orbit of R(Q, alpha; r).
#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    /// Arrow matrices of the lexicographically smallest point of the orbit.
    #[serde(skip)]
    pub representative: Vec<OMatrix>,
    /// Index of the representative in the base-q encoding of the space.
    pub representative_index: u64,
    pub orbit_size: u64,
    /// |End| = q^end_size_exp.
    pub end_size_exp: usize,
    #[serde(serialize_with = "ser_big")]
    pub aut_size: BigUint,
    pub indecomposable: bool,
    /// |Aut| = |End| (1 - q^{-d}) for indecomposables.
    pub top_degree: Option<u32>,
    pub absolutely_indecomposable: bool,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Units and locality of the residue algebra spanned by `basis`, enumerated exhaustively.
struct ResidueAnalysis {
    units: u64,
    local: bool,
}

fn analyse_residue(space: &RepSpace, basis: &[Vec<u8>], caps: &Caps) -> Result<ResidueAnalysis> {
    let f = space.ring().field();
    let q = f.q() as u64;
    let dim = basis.len();
    let size = (q as f64).powi(dim as i32);
    if size > caps.max_end as f64 {
        return Err(Error::EndTooLargeForLocalityTest(format!(
            "residue endomorphism algebra has q^{dim} elements, cap {}",
            caps.max_end
        )));
    }
    let size = q.pow(dim as u32);
    let res_dim: usize = space.rank.iter().map(|r| r * r).sum();
    let mut units = 0u64;
    let mut local = true;
    let mut v = vec![0u8; res_dim];
    for idx in 0..size {
        v.iter_mut().for_each(|e| *e = 0);
        let mut k = idx;
        for b in basis {
            let c = (k % q) as u8;
            k /= q;
            if c != 0 {
                for (e, &be) in v.iter_mut().zip(b) {
                    *e = f.add(*e, f.mul(c, be));
                }
            }
        }
        let mut unit = true;
        let mut nil = true;
        let mut off = 0;
        for &r in &space.rank {
            let m = FqMatrix::from_data(r, r, v[off..off + r * r].to_vec());
            off += r * r;
            if m.rank(f) != r {
                unit = false;
            }
            if !m.is_nilpotent(f) {
                nil = false;
            }
        }
        if unit {
            units += 1;
        }
        if !unit && !nil {
            local = false;
        }
    }
    Ok(ResidueAnalysis { units, local })
}

/// Partition R(Q, alpha; r) into GL_{alpha,r}-orbits and classify each orbit.
pub fn enumerate_orbits(quiver: &Quiver, alpha: usize, rank: &[usize], q: u32, caps: &Caps) -> Result<Vec<OrbitRecord>> {
    let space = RepSpace::new(quiver, alpha, rank, q, caps)?;
    let group = GroupElems::new(&space, caps, true)?;
    let gorder = group.order();
    let n = space.n_entries;
    let size = space.size;
    let mut visited = vec![0u64; (size as usize).div_ceil(64)];
    let mut x = vec![0u16; n];
    let mut y = vec![0u16; n];
    let max_block = rank.iter().max().copied().unwrap_or(0);
    let mut tmp = vec![0u16; max_block * max_block];
    let mut choice = vec![0usize; rank.len()];
    let qb = BigUint::from(q);
    let total_rank: usize = rank.iter().sum();
    let mut out = Vec::new();
    for idx in 0..size {
        if visited[(idx / 64) as usize] >> (idx % 64) & 1 == 1 {
            continue;
        }
        space.decode(idx, &mut x);
        let mut count = 0u64;
        for g in 0..gorder {
            group.choice(g, &mut choice);
            group.act(&space, &choice, &x, &mut y, &mut tmp);
            let j = space.encode(&y);
            let (w, b) = ((j / 64) as usize, j % 64);
            if visited[w] >> b & 1 == 0 {
                visited[w] |= 1 << b;
                count += 1;
            }
        }
        let (end_exp, res_basis) = space.end_structure(&x);
        let res = analyse_residue(&space, &res_basis, caps)?;
        let dim_r = res_basis.len();
        let aut_size = BigUint::from(res.units) * qb.pow((end_exp - dim_r) as u32);
        let indecomposable = total_rank > 0 && res.local;
        let top_degree = if indecomposable {
            // |R| - |R^x| = q^{dim R - d}
            let nonunits = (q as u64).pow(dim_r as u32) - res.units;
            Some(dim_r as u32 - exact_log(nonunits, q as u64))
        } else {
            None
        };
        out.push(OrbitRecord {
            representative: space.matrices(&x),
            representative_index: idx,
            orbit_size: count,
            end_size_exp: end_exp,
            aut_size,
            indecomposable,
            top_degree,
            absolutely_indecomposable: top_degree == Some(1),
        });
    }
    Ok(out)
}

fn exact_log(mut n: u64, q: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        assert_eq!(n % q, 0, "non-unit count of a local algebra is a power of q");
        n /= q;
        k += 1;
    }
    assert_eq!(n, 1);
    k
}

/// Number of orbits with an absolutely indecomposable representative: A_{(Q,alpha),r}(q).
pub fn absolutely_indecomposable_count(orbits: &[OrbitRecord]) -> u64 {
    orbits.iter().filter(|o| o.absolutely_indecomposable).count() as u64
}

/// Number of orbits with an indecomposable representative: I_{(Q,alpha),r}(q).
pub fn indecomposable_count(orbits: &[OrbitRecord]) -> u64 {
    orbits.iter().filter(|o| o.indecomposable).count() as u64
}

/// |GL_{alpha,r}| recovered from an orbit: orbit size times stabiliser size (= |Aut|).
pub fn orbit_stabiliser_product(o: &OrbitRecord) -> BigUint {
    if o.aut_size.is_zero() {
        return BigUint::zero();
    }
    BigUint::from(o.orbit_size) * &o.aut_size
}

