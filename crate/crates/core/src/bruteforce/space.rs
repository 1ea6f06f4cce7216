//! Representation spaces over O_alpha with table-driven ring arithmetic.

use crate::config::Caps;
use crate::error::{cap_error, Error, Result};
use crate::finitering::{gl_enumerate, FqMatrix, OElem, OMatrix, ORing};
use crate::quiver::Quiver;

/// Lookup tables for O_alpha with elements encoded by `ORing::index`.
#[derive(Clone, Debug)]
pub(crate) struct OTable {
    pub ring: ORing,
    pub n: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

/// Largest ring tabulated.
const MAX_TABLE: u64 = 1024;

impl OTable {
    pub fn new(ring: ORing) -> Result<Self> {
        let n64 = ring.size();
        if n64 > MAX_TABLE {
            return Err(cap_error("|O_alpha| for table arithmetic", n64, MAX_TABLE));
        }
        let n = n64 as usize;
        let els: Vec<OElem> = ring.elements().collect();
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = ring.index(&ring.add(&els[a], &els[b])) as u16;
                mul[a * n + b] = ring.index(&ring.mul(&els[a], &els[b])) as u16;
            }
        }
        Ok(OTable {
            ring,
            n,
            add,
            mul,
        })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.n + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.n + b as usize]
    }

    pub fn elem(&self, a: u16) -> OElem {
        self.ring.from_index(a as u64)
    }

    pub fn code(&self, e: &OElem) -> u16 {
        self.ring.index(e) as u16
    }

    /// out = a (ar x ac) * b (ac x bc)
    #[inline]
    pub fn matmul(&self, a: &[u16], ar: usize, ac: usize, b: &[u16], bc: usize, out: &mut [u16]) {
        for i in 0..ar {
            for j in 0..bc {
                let mut s = 0u16;
                for k in 0..ac {
                    s = self.add(s, self.mul(a[i * ac + k], b[k * bc + j]));
                }
                out[i * bc + j] = s;
            }
        }
    }
}

/// The space R(Q, alpha; r) of tuples x_a in Mat_{r_t(a) x r_s(a)}(O_alpha), flattened
/// arrow by arrow in row-major order.
#[derive(Clone, Debug)]
pub struct RepSpace {
    pub(crate) quiver: Quiver,
    pub(crate) rank: Vec<usize>,
    pub(crate) tab: OTable,
    pub(crate) offsets: Vec<usize>,
    pub(crate) n_entries: usize,
    pub(crate) size: u64,
}

impl RepSpace {
    pub fn new(quiver: &Quiver, alpha: usize, rank: &[usize], q: u32, caps: &Caps) -> Result<Self> {
        if rank.len() != quiver.num_vertices() {
            return Err(Error::DimensionMismatch {
                expected: quiver.num_vertices(),
                got: rank.len(),
            });
        }
        if quiver.multiplicities().iter().any(|&m| m != quiver.multiplicities()[0]) {
            return Err(Error::InvalidInput("brute force supports equal multiplicities only".into()));
        }
        let ring = ORing::new(q, alpha)?;
        let mut offsets = Vec::with_capacity(quiver.num_arrows());
        let mut n = 0;
        for a in quiver.arrows() {
            offsets.push(n);
            n += rank[a.dst] * rank[a.src];
        }
        let log2 = (n * alpha) as f64 * (q as f64).log2();
        if log2 > caps.max_space_log2 as f64 || log2 > 62.0 {
            return Err(cap_error(
                "representation space",
                format!("2^{log2:.1}"),
                format!("2^{}", caps.max_space_log2),
            ));
        }
        let tab = OTable::new(ring)?;
        let size = (tab.n as u64).pow(n as u32);
        Ok(RepSpace {
            quiver: quiver.clone(),
            rank: rank.to_vec(),
            tab,
            offsets,
            n_entries: n,
            size,
        })
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn ring(&self) -> &ORing {
        &self.tab.ring
    }

    pub fn q(&self) -> u32 {
        self.tab.ring.q()
    }

    pub fn alpha(&self) -> usize {
        self.tab.ring.alpha()
    }

    pub fn decode(&self, mut idx: u64, out: &mut [u16]) {
        let n = self.tab.n as u64;
        for e in out.iter_mut().take(self.n_entries) {
            *e = (idx % n) as u16;
            idx /= n;
        }
    }

    pub fn encode(&self, x: &[u16]) -> u64 {
        let n = self.tab.n as u64;
        x[..self.n_entries].iter().rev().fold(0, |acc, &e| acc * n + e as u64)
    }

    /// Arrow matrices of a point.
    pub fn matrices(&self, x: &[u16]) -> Vec<OMatrix> {
        self.quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let (rt, rs) = (self.rank[a.dst], self.rank[a.src]);
                let o = self.offsets[k];
                OMatrix {
                    rows: rt,
                    cols: rs,
                    data: x[o..o + rt * rs].iter().map(|&e| self.tab.elem(e)).collect(),
                }
            })
            .collect()
    }

    /// Exponent of |End(x)| and the residue algebra End(x) mod t, as a basis of
    /// vectors in the direct sum of Mat_{r_i}(F_q).
    pub(crate) fn end_structure(&self, x: &[u16]) -> (usize, Vec<Vec<u8>>) {
        let ring = &self.tab.ring;
        let f = ring.field();
        let alpha = ring.alpha();
        // Variable layout: vertex blocks, entries row-major, then power.
        let mut var_off = Vec::new();
        let mut nv = 0;
        for &r in &self.rank {
            var_off.push(nv);
            nv += r * r * alpha;
        }
        let neq = self.n_entries * alpha;
        let mut m = FqMatrix::zero(neq, nv);
        let mats = self.matrices(x);
        for (i, &ri) in self.rank.iter().enumerate() {
            for u in 0..ri {
                for v in 0..ri {
                    for p in 0..alpha {
                        let col = var_off[i] + (u * ri + v) * alpha + p;
                        for (k, a) in self.quiver.arrows().iter().enumerate() {
                            let (rt, rs) = (self.rank[a.dst], self.rank[a.src]);
                            let xa = &mats[k];
                            let base = self.offsets[k] * alpha;
                            // xi_t x_a: row u of the result is t^p * row v of x_a.
                            if a.dst == i {
                                for w in 0..rs {
                                    let e = xa.get(v, w);
                                    for s in 0..alpha - p {
                                        let row = base + (u * rs + w) * alpha + s + p;
                                        m.set(row, col, f.add(m.get(row, col), e.c[s]));
                                    }
                                }
                            }
                            // - x_a xi_s: column v of the result is -t^p * column u of x_a.
                            if a.src == i {
                                for w in 0..rt {
                                    let e = xa.get(w, u);
                                    for s in 0..alpha - p {
                                        let row = base + (w * rs + v) * alpha + s + p;
                                        m.set(row, col, f.sub(m.get(row, col), e.c[s]));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let ker = m.kernel_basis(f);
        // Residue coordinates: p = 0 slots, ordered by vertex then entry.
        let res_dim: usize = self.rank.iter().map(|r| r * r).sum();
        let residues: Vec<Vec<u8>> = ker
            .iter()
            .map(|v| {
                let mut out = Vec::with_capacity(res_dim);
                for (i, &ri) in self.rank.iter().enumerate() {
                    for e in 0..ri * ri {
                        out.push(v[var_off[i] + e * alpha]);
                    }
                }
                out
            })
            .collect();
        let basis = crate::finitering::fqlinalg::span_basis(&residues, res_dim, f);
        (ker.len(), basis)
    }
}

/// Elements of prod_i GL_{r_i}(O_alpha) as per-vertex (g, g^{-1}) lists in table encoding.
pub(crate) struct GroupElems {
    pub per_vertex: Vec<Vec<(Vec<u16>, Vec<u16>)>>,
}

impl GroupElems {
    /// When `drop_scalars` is set and some vertex has rank 1, that vertex's component is
    /// fixed to 1: diagonal scalars act trivially, so orbits are unchanged.
    pub fn new(space: &RepSpace, caps: &Caps, drop_scalars: bool) -> Result<Self> {
        let ring = space.ring();
        let fixed = if drop_scalars {
            space.rank.iter().position(|&r| r == 1)
        } else {
            None
        };
        let mut total: f64 = 1.0;
        for (i, &r) in space.rank.iter().enumerate() {
            if Some(i) != fixed {
                total *= crate::finitering::gl_order(ring.q(), ring.alpha(), r).to_string().parse::<f64>().unwrap();
            }
        }
        if total > caps.max_group as f64 {
            return Err(cap_error("group GL_{alpha,r}", total, caps.max_group));
        }
        let mut per_vertex = Vec::new();
        for (i, &r) in space.rank.iter().enumerate() {
            let els = if Some(i) == fixed {
                vec![OMatrix::identity(ring, 1)]
            } else {
                gl_enumerate(ring, r, caps.max_group)?
            };
            per_vertex.push(
                els.iter()
                    .map(|g| {
                        let gi = g.inverse(ring).expect("group element is invertible");
                        (
                            g.data.iter().map(|e| space.tab.code(e)).collect(),
                            gi.data.iter().map(|e| space.tab.code(e)).collect(),
                        )
                    })
                    .collect(),
            );
        }
        Ok(GroupElems { per_vertex })
    }

    pub fn order(&self) -> u64 {
        self.per_vertex.iter().map(|v| v.len() as u64).product()
    }

    /// Mixed-radix decoding of a group element index into per-vertex choices.
    pub fn choice(&self, mut idx: u64, out: &mut [usize]) {
        for (i, v) in self.per_vertex.iter().enumerate() {
            let n = v.len() as u64;
            out[i] = (idx % n) as usize;
            idx /= n;
        }
    }

    /// y_a = g_t x_a g_s^{-1} for every arrow.
    pub fn act(&self, space: &RepSpace, choice: &[usize], x: &[u16], y: &mut [u16], tmp: &mut [u16]) {
        for (k, a) in space.quiver.arrows().iter().enumerate() {
            let (rt, rs) = (space.rank[a.dst], space.rank[a.src]);
            let o = space.offsets[k];
            let gt = &self.per_vertex[a.dst][choice[a.dst]].0;
            let gsi = &self.per_vertex[a.src][choice[a.src]].1;
            let xa = &x[o..o + rt * rs];
            space.tab.matmul(xa, rt, rs, gsi, rs, &mut tmp[..rt * rs]);
            space.tab.matmul(gt, rt, rt, &tmp[..rt * rs], rs, &mut y[o..o + rt * rs]);
        }
    }
}
