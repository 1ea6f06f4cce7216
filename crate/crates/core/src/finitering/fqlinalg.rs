//! Dense linear algebra over F_q: row reduction, rank, kernels.

use super::field::Fq;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FqMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_data(rows: usize, cols: usize, data: Vec<u8>) -> Self {
        assert_eq!(data.len(), rows * cols);
        FqMatrix { rows, cols, data }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, f: &Fq) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.data.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = f.inv(self.get(row, col));
            for j in col..self.cols {
                let v = f.mul(inv, self.get(row, j));
                self.set(row, j, v);
            }
            for i in 0..self.rows {
                if i == row {
                    continue;
                }
                let c = self.get(i, col);
                if c == 0 {
                    continue;
                }
                let nc = f.neg(c);
                for j in col..self.cols {
                    let v = f.add(self.get(i, j), f.mul(nc, self.get(row, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Fq) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of the right kernel {x : M x = 0}.
    pub fn kernel_basis(&self, f: &Fq) -> Vec<Vec<u8>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u8; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    /// Nilpotency test for a square matrix (M^n = 0).
    pub fn is_nilpotent(&self, f: &Fq) -> bool {
        let n = self.rows;
        let mut p = self.clone();
        for _ in 1..n {
            p = p.mul(self, f);
        }
        p.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, o: &FqMatrix, f: &Fq) -> FqMatrix {
        let mut m = FqMatrix::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    let v = f.add(m.get(i, j), f.mul(a, o.get(k, j)));
                    m.set(i, j, v);
                }
            }
        }
        m
    }
}

/// Row-reduces a list of vectors and returns a basis of their span.
pub fn span_basis(vectors: &[Vec<u8>], dim: usize, f: &Fq) -> Vec<Vec<u8>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = FqMatrix::from_data(vectors.len(), dim, vectors.concat());
    let r = m.rref(f).len();
    (0..r).map(|i| m.data[i * dim..(i + 1) * dim].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_rank_one() {
        let f = Fq::new(3).unwrap();
        let m = FqMatrix::from_data(2, 3, vec![1, 2, 0, 2, 1, 0]);
        assert_eq!(m.rank(&f), 1);
        let k = m.kernel_basis(&f);
        assert_eq!(k.len(), 2);
        for v in k {
            for i in 0..2 {
                let s = (0..3).fold(0u8, |acc, j| f.add(acc, f.mul(m.get(i, j), v[j])));
                assert_eq!(s, 0);
            }
        }
    }
}
