//! Matrices over O_alpha, Smith normal form, kernels and linear solving.

use super::local::{OElem, ORing};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<OElem>,
}

impl OMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        OMatrix {
            rows,
            cols,
            data: vec![OElem::default(); rows * cols],
        }
    }

    pub fn identity(ring: &ORing, n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<OElem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        OMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Diagonal matrix with entries t^{gamma_i} (gamma = alpha gives 0).
    pub fn diagonal(ring: &ORing, rows: usize, cols: usize, gammas: &[usize]) -> Self {
        let mut m = Self::zero(rows, cols);
        for (i, &g) in gammas.iter().enumerate() {
            m.set(i, i, ring.t_pow(g));
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> OElem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: OElem) {
        self.data[i * self.cols + j] = x;
    }

    pub fn mul(&self, o: &OMatrix, ring: &ORing) -> OMatrix {
        assert_eq!(self.cols, o.rows, "shape mismatch in matrix product");
        let mut m = OMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(&a) {
                    continue;
                }
                for j in 0..o.cols {
                    let cur = m.get(i, j);
                    m.set(i, j, ring.add(&cur, &ring.mul(&a, &o.get(k, j))));
                }
            }
        }
        m
    }

    pub fn add(&self, o: &OMatrix, ring: &ORing) -> OMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        OMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| ring.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, o: &OMatrix, ring: &ORing) -> OMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        OMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| ring.sub(a, b)).collect(),
        }
    }

    pub fn apply(&self, v: &[OElem], ring: &ORing) -> Vec<OElem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(&self.get(i, j), &v[j])))
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row_dst += c * row_src
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &OElem, ring: &ORing) {
        for j in 0..self.cols {
            let v = ring.add(&self.get(dst, j), &ring.mul(c, &self.get(src, j)));
            self.set(dst, j, v);
        }
    }

    /// col_dst += c * col_src
    fn add_col_multiple(&mut self, dst: usize, src: usize, c: &OElem, ring: &ORing) {
        for i in 0..self.rows {
            let v = ring.add(&self.get(i, dst), &ring.mul(c, &self.get(i, src)));
            self.set(i, dst, v);
        }
    }

    fn scale_row(&mut self, r: usize, c: &OElem, ring: &ORing) {
        for j in 0..self.cols {
            let v = ring.mul(c, &self.get(r, j));
            self.set(r, j, v);
        }
    }

    /// Invertible over O_alpha (square with unit determinant).
    pub fn is_invertible(&self, ring: &ORing) -> bool {
        self.rows == self.cols && smith_invariants(self, ring).gammas.iter().all(|&g| g == 0)
    }

    /// Inverse via Gauss-Jordan with unit pivots.
    pub fn inverse(&self, ring: &ORing) -> Option<OMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = OMatrix::identity(ring, n);
        for k in 0..n {
            let p = (k..n).find(|&i| ring.is_unit(&a.get(i, k)))?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let u = ring.inv(&a.get(k, k)).unwrap();
            a.scale_row(k, &u, ring);
            inv.scale_row(k, &u, ring);
            for i in 0..n {
                if i != k {
                    let c = ring.neg(&a.get(i, k));
                    if !ring.is_zero(&c) {
                        a.add_row_multiple(i, k, &c, ring);
                        inv.add_row_multiple(i, k, &c, ring);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Reduction mod t as F_q entries, row-major.
    pub fn residue(&self, ring: &ORing) -> Vec<u8> {
        self.data.iter().map(|x| ring.residue(x)).collect()
    }
}

/// Smith invariants gamma_1 <= ... (padded to min(rows, cols)); alpha encodes a zero invariant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmithInvariants {
    pub alpha: usize,
    pub gammas: Vec<usize>,
}

impl SmithInvariants {
    /// Number of nonzero invariants.
    pub fn rank(&self) -> usize {
        self.gammas.iter().filter(|&&g| g < self.alpha).count()
    }

    /// Multiplicities (q_0, ..., q_{alpha-1}) of each invariant t^i.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.alpha];
        for &g in &self.gammas {
            if g < self.alpha {
                c[g] += 1;
            }
        }
        c
    }
}

/// Smith normal form `U M V = diag(t^gamma)`. Pivots: minimal valuation, ties by row-major position.
pub fn smith_normal_form(m: &OMatrix, ring: &ORing) -> (SmithInvariants, OMatrix, OMatrix) {
    let mut a = m.clone();
    let mut u = OMatrix::identity(ring, m.rows);
    let mut v = OMatrix::identity(ring, m.cols);
    let gammas = snf_core(&mut a, ring, Some((&mut u, &mut v)));
    (
        SmithInvariants {
            alpha: ring.alpha(),
            gammas,
        },
        u,
        v,
    )
}

/// Invariants only (no transforms tracked).
pub fn smith_invariants(m: &OMatrix, ring: &ORing) -> SmithInvariants {
    let mut a = m.clone();
    SmithInvariants {
        alpha: ring.alpha(),
        gammas: snf_core(&mut a, ring, None),
    }
}

fn snf_core(a: &mut OMatrix, ring: &ORing, mut uv: Option<(&mut OMatrix, &mut OMatrix)>) -> Vec<usize> {
    let n = a.rows.min(a.cols);
    let alpha = ring.alpha();
    let mut gammas = Vec::with_capacity(n);
    for k in 0..n {
        let mut best = (alpha, k, k);
        'search: for i in k..a.rows {
            for j in k..a.cols {
                let vv = ring.val(&a.get(i, j));
                if vv < best.0 {
                    best = (vv, i, j);
                    if vv == 0 {
                        break 'search;
                    }
                }
            }
        }
        let (val, pi, pj) = best;
        if val == alpha {
            gammas.resize(n, alpha);
            break;
        }
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        if let Some((u, v)) = uv.as_mut() {
            u.swap_rows(k, pi);
            v.swap_cols(k, pj);
        }
        // Pivot = t^val * unit; normalize the unit away.
        let unit = ring.div_t_pow(&a.get(k, k), val);
        let uinv = ring.inv(&unit).expect("pivot cofactor is a unit");
        a.scale_row(k, &uinv, ring);
        if let Some((u, _)) = uv.as_mut() {
            u.scale_row(k, &uinv, ring);
        }
        for i in k + 1..a.rows {
            let x = a.get(i, k);
            if ring.is_zero(&x) {
                continue;
            }
            let c = ring.neg(&ring.div_t_pow(&x, val));
            a.add_row_multiple(i, k, &c, ring);
            if let Some((u, _)) = uv.as_mut() {
                u.add_row_multiple(i, k, &c, ring);
            }
        }
        for j in k + 1..a.cols {
            let x = a.get(k, j);
            if ring.is_zero(&x) {
                continue;
            }
            let c = ring.neg(&ring.div_t_pow(&x, val));
            a.add_col_multiple(j, k, &c, ring);
            if let Some((_, v)) = uv.as_mut() {
                v.add_col_multiple(j, k, &c, ring);
            }
        }
        gammas.push(val);
    }
    gammas
}

/// Exponent e with |Ker(M : O^cols -> O^rows)| = q^e.
pub fn kernel_size(m: &OMatrix, ring: &ORing) -> usize {
    let inv = smith_invariants(m, ring);
    let r = inv.rank();
    ring.alpha() * (m.cols - r) + inv.gammas.iter().filter(|&&g| g < ring.alpha()).sum::<usize>()
}

/// Outcome of solving `A x = b` over O_alpha.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub solvable: bool,
    /// |Ker A| = q^kernel_exp; the solution set, when nonempty, is a coset of the kernel.
    pub kernel_exp: usize,
    pub particular: Option<Vec<OElem>>,
}

pub fn solve_linear(a: &OMatrix, b: &[OElem], ring: &ORing) -> LinearSolution {
    assert_eq!(b.len(), a.rows, "right-hand side length");
    let (inv, u, v) = smith_normal_form(a, ring);
    let kernel_exp = ring.alpha() * (a.cols - inv.rank()) + inv.gammas.iter().filter(|&&g| g < ring.alpha()).sum::<usize>();
    let ub = u.apply(b, ring);
    let mut y = vec![ring.zero(); a.cols];
    let mut ok = true;
    for (i, c) in ub.iter().enumerate() {
        let g = inv.gammas.get(i).copied().unwrap_or(ring.alpha());
        if ring.val(c) < g {
            ok = false;
            break;
        }
        if g < ring.alpha() {
            y[i] = ring.div_t_pow(c, g);
        }
    }
    LinearSolution {
        solvable: ok,
        kernel_exp,
        particular: if ok { Some(v.apply(&y, ring)) } else { None },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(q: u32, a: usize) -> ORing {
        ORing::new(q, a).unwrap()
    }

    #[test]
    fn snf_examples() {
        let r = ring(2, 2);
        let t = r.t_pow(1);
        let m = OMatrix::from_rows(vec![vec![t, r.one()], vec![r.zero(), t]]);
        assert_eq!(smith_invariants(&m, &r).gammas, vec![0, 2]);
        assert_eq!(kernel_size(&m, &r), 2);
        let r3 = ring(2, 3);
        let d = OMatrix::diagonal(&r3, 2, 2, &[0, 1]);
        assert_eq!(smith_invariants(&d, &r3).gammas, vec![0, 1]);
        assert_eq!(smith_invariants(&OMatrix::zero(2, 2), &r3).gammas, vec![3, 3]);
        assert_eq!(kernel_size(&OMatrix::zero(1, 1), &r), 2);
        assert_eq!(kernel_size(&OMatrix::identity(&r, 3), &r), 0);
    }

    #[test]
    fn transforms_reconstruct_diagonal() {
        let r = ring(3, 2);
        let m = OMatrix::from_rows(vec![
            vec![r.from_index(3), r.from_index(4), r.from_index(0)],
            vec![r.from_index(6), r.from_index(5), r.from_index(8)],
        ]);
        let (inv, u, v) = smith_normal_form(&m, &r);
        let d = u.mul(&m, &r).mul(&v, &r);
        assert_eq!(d, OMatrix::diagonal(&r, 2, 3, &inv.gammas));
        assert!(u.is_invertible(&r) && v.is_invertible(&r));
    }

    #[test]
    fn solve_examples() {
        let r = ring(2, 2);
        let id = OMatrix::identity(&r, 2);
        let s = solve_linear(&id, &[r.zero(), r.zero()], &r);
        assert!(s.solvable);
        assert_eq!(s.kernel_exp, 0);
        let a = OMatrix::from_rows(vec![vec![r.t_pow(1)]]);
        let s = solve_linear(&a, &[r.t_pow(1)], &r);
        assert!(s.solvable);
        assert_eq!(s.kernel_exp, 1);
        assert_eq!(a.apply(&s.particular.unwrap(), &r), vec![r.t_pow(1)]);
        assert!(!solve_linear(&a, &[r.one()], &r).solvable);
    }

    #[test]
    fn inverse_roundtrip() {
        let r = ring(3, 2);
        let m = OMatrix::from_rows(vec![vec![r.from_index(4), r.from_index(3)], vec![r.from_index(1), r.from_index(2)]]);
        let inv = m.inverse(&r).unwrap();
        assert_eq!(m.mul(&inv, &r), OMatrix::identity(&r, 2));
    }
}
