//! Burnside counts, moment-map fibers, jet counts and ASK averages.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use super::space::{GroupElems, RepSpace};
use crate::config::Caps;
use crate::error::{cap_error, Error, Result};
use crate::finitering::{kernel_size, solve_linear, OElem, OMatrix, ORing};
use crate::quiver::Quiver;

/// M_{(Q,alpha),r}(q) by Burnside's lemma: the average number of fixed points.
pub fn count_iso_classes(quiver: &Quiver, alpha: usize, rank: &[usize], q: u32, caps: &Caps) -> Result<BigUint> {
    let space = RepSpace::new(quiver, alpha, rank, q, caps)?;
    let group = GroupElems::new(&space, caps, true)?;
    let ring = space.ring().clone();
    // Arrows with the same endpoints have the same fixed-point count.
    let mut pairs: Vec<((usize, usize), u32)> = Vec::new();
    for a in quiver.arrows() {
        match pairs.iter_mut().find(|(p, _)| *p == (a.src, a.dst)) {
            Some((_, m)) => *m += 1,
            None => pairs.push(((a.src, a.dst), 1)),
        }
    }
    let order = group.order();
    let total: BigUint = (0..order)
        .into_par_iter()
        .map_init(
            || vec![0usize; rank.len()],
            |choice, g| {
                group.choice(g, choice);
                let mut e = 0usize;
                for &((s, t), m) in &pairs {
                    let gs = &group.per_vertex[s][choice[s]].0;
                    let gt = &group.per_vertex[t][choice[t]].0;
                    let op = commutator_operator(&space, gt, rank[t], gs, rank[s]);
                    e += m as usize * kernel_size(&op, &ring);
                }
                BigUint::from(q).pow(e as u32)
            },
        )
        .sum();
    let (m, r) = total.div_rem(&BigUint::from(order));
    assert!(r.is_zero(), "Burnside sum divisible by the group order");
    Ok(m)
}

/// Matrix of X -> g_t X - X g_s on Mat_{rt x rs}(O_alpha), X flattened row-major.
fn commutator_operator(space: &RepSpace, gt: &[u16], rt: usize, gs: &[u16], rs: usize) -> OMatrix {
    let ring = space.ring();
    let n = rt * rs;
    let mut m = OMatrix::zero(n, n);
    for u in 0..rt {
        for v in 0..rs {
            let col = u * rs + v;
            for p in 0..rt {
                let row = p * rs + v;
                let e = ring.add(&m.get(row, col), &space.tab.elem(gt[p * rt + u]));
                m.set(row, col, e);
            }
            for w in 0..rs {
                let row = u * rs + w;
                let e = ring.sub(&m.get(row, col), &space.tab.elem(gs[v * rs + w]));
                m.set(row, col, e);
            }
        }
    }
    m
}

impl RepSpace {
    /// Matrix of the O_alpha-linear map y -> mu(x, y), where
    /// mu_i = sum_{a into i} x_a y_a - sum_{a out of i} y_a x_a and y_a has shape r_s x r_t.
    pub(crate) fn moment_operator(&self, x: &[u16]) -> OMatrix {
        let ring = self.ring();
        let mut row_off = Vec::new();
        let mut nr = 0;
        for &r in &self.rank {
            row_off.push(nr);
            nr += r * r;
        }
        let mut m = OMatrix::zero(nr, self.n_entries);
        for (k, a) in self.quiver.arrows().iter().enumerate() {
            let (s, t) = (a.src, a.dst);
            let (rs, rt) = (self.rank[s], self.rank[t]);
            let o = self.offsets[k];
            let xa = |i: usize, j: usize| self.tab.elem(x[o + i * rs + j]);
            for u in 0..rs {
                for v in 0..rt {
                    // y_a = E_{uv}
                    let col = o + u * rt + v;
                    // x_a E_{uv}: column v of an rt x rt block gets column u of x_a.
                    for p in 0..rt {
                        let row = row_off[t] + p * rt + v;
                        m.set(row, col, ring.add(&m.get(row, col), &xa(p, u)));
                    }
                    // E_{uv} x_a: row u of an rs x rs block gets row v of x_a.
                    for w in 0..rs {
                        let row = row_off[s] + u * rs + w;
                        m.set(row, col, ring.sub(&m.get(row, col), &xa(v, w)));
                    }
                }
            }
        }
        m
    }

    /// Exponent of |{y : mu(x, y) = 0}| for the point with index `idx`.
    pub fn fiber_exponent(&self, idx: u64) -> usize {
        let mut x = vec![0u16; self.n_entries];
        self.decode(idx, &mut x);
        kernel_size(&self.moment_operator(&x), self.ring())
    }

    /// Exponent of |End| for the point with index `idx`.
    pub fn end_exponent(&self, idx: u64) -> usize {
        let mut x = vec![0u16; self.n_entries];
        self.decode(idx, &mut x);
        self.end_structure(&x).0
    }

    /// |{y : mu(x, y) = 0}| by enumerating every y.
    pub fn naive_fiber_count(&self, idx: u64) -> u64 {
        let mut x = vec![0u16; self.n_entries];
        self.decode(idx, &mut x);
        let op = self.moment_operator(&x);
        let ring = self.ring();
        let mut y = vec![0u16; self.n_entries];
        let mut count = 0;
        for j in 0..self.size {
            self.decode(j, &mut y);
            let ye: Vec<OElem> = y.iter().map(|&e| self.tab.elem(e)).collect();
            if op.apply(&ye, ring).iter().all(|e| ring.is_zero(e)) {
                count += 1;
            }
        }
        count
    }
}

/// #{(x, y) : mu(x, y) = t^{alpha-1} lambda} over O_alpha.
pub fn moment_fiber_count(
    quiver: &Quiver,
    alpha: usize,
    rank: &[usize],
    q: u32,
    lambda: &[i64],
    caps: &Caps,
) -> Result<BigUint> {
    if rank.iter().all(|&r| r == 0) {
        return Ok(BigUint::from(1u32));
    }
    let deformed = lambda.iter().any(|&l| l != 0);
    if deformed {
        if lambda.len() != rank.len() {
            return Err(Error::DimensionMismatch {
                expected: rank.len(),
                got: lambda.len(),
            });
        }
        let dot: i64 = lambda.iter().zip(rank).map(|(l, &r)| l * r as i64).sum();
        if dot != 0 {
            return Err(Error::NonGenericLambda(dot));
        }
        let bound: i64 = lambda.iter().zip(rank).map(|(l, &r)| l.abs() * r as i64).sum();
        let p = ORing::new(q, alpha)?.field().characteristic();
        if p as i64 <= bound {
            return Err(Error::CharacteristicTooSmall { p, bound });
        }
    }
    let space = RepSpace::new(quiver, alpha, rank, q, caps)?;
    let ring = space.ring().clone();
    let target: Option<Vec<OElem>> = deformed.then(|| {
        let tt = ring.t_pow(alpha - 1);
        let mut b = Vec::new();
        for (i, &r) in rank.iter().enumerate() {
            let c = ring.mul(&ring.from_int(lambda[i]), &tt);
            for u in 0..r {
                for v in 0..r {
                    b.push(if u == v { c } else { ring.zero() });
                }
            }
        }
        b
    });
    let n = space.n_entries;
    let qb = BigUint::from(q);
    let sum: BigUint = (0..space.size)
        .into_par_iter()
        .map_init(
            || vec![0u16; n],
            |x, idx| {
                space.decode(idx, x);
                let op = space.moment_operator(x);
                let e = match &target {
                    None => Some(kernel_size(&op, &ring)),
                    Some(b) => {
                        let s = solve_linear(&op, b, &ring);
                        s.solvable.then_some(s.kernel_exp)
                    }
                };
                e.map(|e| qb.pow(e as u32)).unwrap_or_default()
            },
        )
        .sum();
    Ok(sum)
}

/// N_n = #mu^{-1}(0)(F_q[t]/(t^n)) for n = 1..=n_max.
pub fn jet_counts(quiver: &Quiver, rank: &[usize], q: u32, n_max: usize, caps: &Caps) -> Result<Vec<BigUint>> {
    (1..=n_max)
        .map(|n| moment_fiber_count(quiver, n, rank, q, &[], caps))
        .collect()
}

/// A linear family theta(a) = sum_k a_k B_k of rows x cols integer matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFamily {
    pub rows: usize,
    pub cols: usize,
    /// Basis matrices, row-major.
    pub basis: Vec<Vec<i64>>,
}

impl LinearFamily {
    pub fn new(rows: usize, cols: usize, basis: Vec<Vec<i64>>) -> Result<Self> {
        if let Some(b) = basis.iter().find(|b| b.len() != rows * cols) {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: b.len(),
            });
        }
        Ok(LinearFamily { rows, cols, basis })
    }

    /// The family y -> mu(x, y) with x ranging over R(Q, 1; r): the moment map as a
    /// bilinear form, basis indexed by the coordinates of x.
    pub fn moment_map(quiver: &Quiver, rank: &[usize]) -> Result<Self> {
        let caps = Caps {
            max_space_log2: 62,
            ..Caps::default()
        };
        // Over F_3 every coordinate vector is a point; its operator is the basis matrix
        // for that coordinate, with signs lifted back to integers.
        let space = RepSpace::new(quiver, 1, rank, 3, &caps)?;
        let n = space.n_entries;
        let mut basis = Vec::with_capacity(n);
        for k in 0..n {
            let mut x = vec![0u16; n];
            x[k] = 1;
            let op = space.moment_operator(&x);
            basis.push(
                op.data
                    .iter()
                    .map(|e| match e.c[0] {
                        0 => 0,
                        1 => 1,
                        _ => -1,
                    })
                    .collect(),
            );
        }
        let rows = rank.iter().map(|r| r * r).sum();
        LinearFamily::new(rows, n, basis)
    }
}

/// ask_n = q^{-n r_A} sum_{a in O_n^{r_A}} |Ker theta(a)| for n = 1..=n_max.
pub fn ask_counts(family: &LinearFamily, q: u32, n_max: usize, caps: &Caps) -> Result<Vec<BigRational>> {
    let ra = family.basis.len();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let ring = ORing::new(q, n)?;
        let log2 = (n * ra) as f64 * (q as f64).log2();
        if log2 > caps.max_space_log2 as f64 {
            return Err(cap_error(
                "ASK parameter space",
                format!("2^{log2:.1}"),
                format!("2^{}", caps.max_space_log2),
            ));
        }
        let size = ring.size().pow(ra as u32);
        let basis: Vec<Vec<OElem>> = family
            .basis
            .iter()
            .map(|b| b.iter().map(|&v| ring.from_int(v)).collect())
            .collect();
        let qb = BigUint::from(q);
        let sum: BigUint = (0..size)
            .into_par_iter()
            .map(|mut idx| {
                let mut m = OMatrix::zero(family.rows, family.cols);
                for b in &basis {
                    let a = ring.from_index(idx % ring.size());
                    idx /= ring.size();
                    for (e, be) in m.data.iter_mut().zip(b) {
                        *e = ring.add(e, &ring.mul(&a, be));
                    }
                }
                qb.pow(kernel_size(&m, &ring) as u32)
            })
            .sum();
        let denom = qb.pow((n * ra) as u32);
        out.push(BigRational::new(sum.into(), denom.into()));
    }
    Ok(out)
}

