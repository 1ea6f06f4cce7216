//! Quivers with multiplicities and their combinatorics.

mod combinat;
pub mod corpus;

pub use combinat::{chains_of_edge_subsets, set_partitions, ChainConstraints};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-vertex integer vector (dimension or rank vector).
pub type RankVector = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
}

impl Arrow {
    pub fn is_loop(&self) -> bool {
        self.src == self.dst
    }
}

/// A quiver with per-vertex multiplicities. The arrow list order is the total order
/// on arrows that the spanning-tree formula depends on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    multiplicities: Vec<u32>,
}

#[derive(Deserialize)]
struct RawQuiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    #[serde(default)]
    multiplicities: Option<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Quiver {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawQuiver::deserialize(d)?;
        let mult = raw.multiplicities.unwrap_or_else(|| vec![1; raw.vertices.len()]);
        Quiver::with_labels(raw.vertices, raw.arrows, mult).map_err(serde::de::Error::custom)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }
    /// Returns false when already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

impl Quiver {
    /// Quiver on `n` vertices labelled `0..n`, multiplicity 1 everywhere.
    pub fn new(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Self::with_labels(
            (0..n).map(|i| i.to_string()).collect(),
            arrows.iter().map(|&(src, dst)| Arrow { src, dst }).collect(),
            vec![1; n],
        )
    }

    pub fn with_labels(vertices: Vec<String>, arrows: Vec<Arrow>, multiplicities: Vec<u32>) -> Result<Self> {
        let n = vertices.len();
        if multiplicities.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: multiplicities.len(),
            });
        }
        if multiplicities.contains(&0) {
            return Err(Error::InvalidInput("multiplicities must be positive".into()));
        }
        if let Some(a) = arrows.iter().find(|a| a.src >= n || a.dst >= n) {
            return Err(Error::InvalidInput(format!("arrow {}->{} has an invalid endpoint", a.src, a.dst)));
        }
        Ok(Quiver {
            vertices,
            arrows,
            multiplicities,
        })
    }

    /// Same quiver with the given multiplicities.
    pub fn with_multiplicities(&self, m: Vec<u32>) -> Result<Self> {
        Self::with_labels(self.vertices.clone(), self.arrows.clone(), m)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("quiver serializes")
    }

    /// One vertex, one loop.
    pub fn jordan() -> Self {
        Self::g_loop(1)
    }

    /// One vertex with `g` loops.
    pub fn g_loop(g: usize) -> Self {
        Self::new(1, &vec![(0, 0); g]).unwrap()
    }

    /// Two vertices, one arrow.
    pub fn a2() -> Self {
        Self::new(2, &[(0, 1)]).unwrap()
    }

    /// Two vertices, `r` parallel arrows 0 -> 1.
    pub fn kronecker(r: usize) -> Self {
        Self::new(2, &vec![(0, 1); r]).unwrap()
    }

    /// Oriented n-cycle.
    pub fn cycle(n: usize) -> Self {
        let arrows: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &arrows).unwrap()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn loops_at(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.src == i && a.dst == i).count()
    }

    /// Number of arrows joining distinct vertices `i` and `j`, either direction.
    pub fn edges_between(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.src == i && a.dst == j) || (a.src == j && a.dst == i))
            .count()
    }

    fn check_dims(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.num_vertices() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vertices(),
                got: v.len(),
            });
        }
        Ok(())
    }

    /// <d,e> = sum_i d_i e_i - sum_{a: i -> j} d_i e_j.
    pub fn euler_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        self.check_dims(d)?;
        self.check_dims(e)?;
        let diag: i64 = d.iter().zip(e).map(|(a, b)| a * b).sum();
        let off: i64 = self.arrows.iter().map(|a| d[a.src] * e[a.dst]).sum();
        Ok(diag - off)
    }

    /// (d,e) = <d,e> + <e,d>.
    pub fn symmetric_form(&self, d: &[i64], e: &[i64]) -> Result<i64> {
        Ok(self.euler_form(d, e)? + self.euler_form(e, d)?)
    }

    /// Euler form with multiplicities: sum_i n_i r_i s_i minus, for each arrow a: i -> j,
    /// (n_i n_j / gcd(n_i, n_j)) r_i s_j. Equal multiplicities alpha give alpha <r,s>.
    pub fn euler_form_h(&self, r: &[i64], s: &[i64]) -> Result<i64> {
        self.check_dims(r)?;
        self.check_dims(s)?;
        let n = &self.multiplicities;
        let diag: i64 = (0..n.len()).map(|i| n[i] as i64 * r[i] * s[i]).sum();
        let off: i64 = self
            .arrows
            .iter()
            .map(|a| {
                let (ni, nj) = (n[a.src] as i64, n[a.dst] as i64);
                ni * nj / num_integer::gcd(ni, nj) * r[a.src] * s[a.dst]
            })
            .sum();
        Ok(diag - off)
    }

    pub fn connected_components(&self) -> usize {
        let mut uf = UnionFind::new(self.num_vertices());
        let mut c = self.num_vertices();
        for a in &self.arrows {
            if uf.union(a.src, a.dst) {
                c -= 1;
            }
        }
        c
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Betti number C - V + E of the underlying graph.
    pub fn betti(&self) -> i64 {
        self.connected_components() as i64 - self.num_vertices() as i64 + self.num_arrows() as i64
    }

    /// Connected and no arrow is a bridge. Loops never disconnect.
    pub fn is_2_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        (0..self.num_arrows()).all(|a| self.arrows[a].is_loop() || self.delete(a).is_connected())
    }

    /// Full subquiver on the vertex set `vs` (kept in increasing order); arrow order is inherited.
    pub fn restrict_vertices(&self, vs: &[usize]) -> Quiver {
        let mut keep: Vec<usize> = vs.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let pos = |v: usize| keep.iter().position(|&x| x == v);
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| Some(Arrow { src: pos(a.src)?, dst: pos(a.dst)? }))
            .collect();
        Quiver {
            vertices: keep.iter().map(|&i| self.vertices[i].clone()).collect(),
            arrows,
            multiplicities: keep.iter().map(|&i| self.multiplicities[i]).collect(),
        }
    }

    /// All vertices, only the arrows in `js` (kept in increasing index order).
    pub fn restrict_arrows(&self, js: &[usize]) -> Quiver {
        let mut keep: Vec<usize> = js.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Quiver {
            vertices: self.vertices.clone(),
            arrows: keep.iter().map(|&j| self.arrows[j]).collect(),
            multiplicities: self.multiplicities.clone(),
        }
    }

    /// Arrows selected by a bitmask over arrow indices.
    pub fn restrict_arrow_mask(&self, mask: u64) -> Quiver {
        let js: Vec<usize> = (0..self.num_arrows()).filter(|j| mask >> j & 1 == 1).collect();
        self.restrict_arrows(&js)
    }

    pub fn delete(&self, a: usize) -> Quiver {
        let mut q = self.clone();
        q.arrows.remove(a);
        q
    }

    /// Contracts non-loop arrow `a`: its target merges into its source. Surviving arrows
    /// keep their relative order; parallel copies of `a` become loops.
    pub fn contract(&self, a: usize) -> Result<Quiver> {
        let ar = self.arrows[a];
        if ar.is_loop() {
            return Err(Error::ContractLoop(a));
        }
        let (keep, gone) = (ar.src.min(ar.dst), ar.src.max(ar.dst));
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let arrows = self
            .arrows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != a)
            .map(|(_, x)| Arrow {
                src: relabel(x.src),
                dst: relabel(x.dst),
            })
            .collect();
        let mut vertices = self.vertices.clone();
        vertices[keep] = format!("{}{}", self.vertices[keep], self.vertices[gone]);
        vertices.remove(gone);
        let mut multiplicities = self.multiplicities.clone();
        multiplicities.remove(gone);
        Ok(Quiver {
            vertices,
            arrows,
            multiplicities,
        })
    }

    /// All spanning trees as sorted lists of non-loop arrow indices, in lexicographic order.
    pub fn spanning_trees(&self) -> Result<Vec<Vec<usize>>> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        let edges: Vec<usize> = (0..self.num_arrows()).filter(|&j| !self.arrows[j].is_loop()).collect();
        let need = self.num_vertices() - 1;
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(need);
        self.trees_rec(&edges, 0, need, &mut cur, &mut out);
        Ok(out)
    }

    fn trees_rec(&self, edges: &[usize], start: usize, need: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == need {
            out.push(cur.clone());
            return;
        }
        for k in start..edges.len() {
            if edges.len() - k < need - cur.len() {
                break;
            }
            cur.push(edges[k]);
            if self.is_forest(cur) {
                self.trees_rec(edges, k + 1, need, cur, out);
            }
            cur.pop();
        }
    }

    fn is_forest(&self, es: &[usize]) -> bool {
        let mut uf = UnionFind::new(self.num_vertices());
        es.iter().all(|&j| uf.union(self.arrows[j].src, self.arrows[j].dst))
    }

    /// Arrow indices on the unique path in tree `tree` between `u` and `v`.
    pub fn tree_path(&self, tree: &[usize], u: usize, v: usize) -> Vec<usize> {
        fn dfs(q: &Quiver, tree: &[usize], at: usize, target: usize, from: Option<usize>, path: &mut Vec<usize>) -> bool {
            if at == target {
                return true;
            }
            for &j in tree {
                if Some(j) == from {
                    continue;
                }
                let a = q.arrows[j];
                let next = if a.src == at {
                    a.dst
                } else if a.dst == at {
                    a.src
                } else {
                    continue;
                };
                path.push(j);
                if dfs(q, tree, next, target, Some(j), path) {
                    return true;
                }
                path.pop();
            }
            false
        }
        let mut path = Vec::new();
        dfs(self, tree, u, v, None, &mut path);
        path
    }

    /// Support of a vertex vector.
    fn support(d: &[i64]) -> Vec<usize> {
        (0..d.len()).filter(|&i| d[i] != 0).collect()
    }

    /// Every vertex has at least two loops and every pair of vertices is joined.
    pub fn is_totally_negative(&self) -> bool {
        let n = self.num_vertices();
        (0..n).all(|i| self.loops_at(i) >= 2) && (0..n).all(|i| (i + 1..n).all(|j| self.edges_between(i, j) >= 1))
    }

    /// Property (P) for the pair (Q, d).
    pub fn has_property_p(&self, d: &[i64]) -> Result<bool> {
        self.check_dims(d)?;
        if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
            return Err(Error::InvalidInput("property (P) needs a nonzero nonnegative vector".into()));
        }
        if !self.is_totally_negative() {
            return Ok(false);
        }
        let s = Self::support(d);
        if s.len() == 2 && self.edges_between(s[0], s[1]) == 1 && d[s[0]] == 1 && d[s[1]] == 1 {
            return Ok(false);
        }
        Ok(true)
    }

    /// Auxiliary quiver of a semisimple type: one vertex per part, 1 - <d_i,d_i> loops at i,
    /// and -(d_i,d_j) arrows oriented from the lower to the higher part index.
    pub fn aux_quiver(&self, tau: &SemisimpleType) -> Result<Quiver> {
        let parts = &tau.parts;
        for (d, e) in parts {
            self.check_dims(d)?;
            if *e < 1 || d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
                return Err(Error::InvalidType("parts need positive rank vectors and multiplicities".into()));
            }
        }
        let mut arrows = Vec::new();
        for (i, (d, _)) in parts.iter().enumerate() {
            let loops = 1 - self.euler_form(d, d)?;
            if loops < 0 {
                return Err(Error::InvalidType(format!("part {i} has <d,d> > 1")));
            }
            arrows.extend(std::iter::repeat_n(Arrow { src: i, dst: i }, loops as usize));
        }
        for i in 0..parts.len() {
            for j in i + 1..parts.len() {
                let k = -self.symmetric_form(&parts[i].0, &parts[j].0)?;
                if k < 0 {
                    return Err(Error::InvalidType(format!("parts {i},{j} have positive pairing")));
                }
                arrows.extend(std::iter::repeat_n(Arrow { src: i, dst: j }, k as usize));
            }
        }
        Ok(Quiver {
            vertices: (0..parts.len()).map(|i| format!("tau{i}")).collect(),
            arrows,
            multiplicities: vec![1; parts.len()],
        })
    }

    /// d != 0, d >= 0, (d, e_i) <= 0 for every vertex i, and connected support.
    pub fn fundamental_set_member(&self, d: &[i64]) -> Result<bool> {
        self.check_dims(d)?;
        if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        let n = self.num_vertices();
        for i in 0..n {
            let mut ei = vec![0; n];
            ei[i] = 1;
            if self.symmetric_form(d, &ei)? > 0 {
                return Ok(false);
            }
        }
        Ok(self.restrict_vertices(&Self::support(d)).is_connected())
    }

    /// r_i(d) = d - (d, e_i) e_i at a loop-free vertex i.
    pub fn simple_reflection(&self, i: usize, d: &[i64]) -> Result<RankVector> {
        self.check_dims(d)?;
        if i >= self.num_vertices() {
            return Err(Error::InvalidInput(format!("vertex {i} out of range")));
        }
        if self.loops_at(i) > 0 {
            return Err(Error::ReflectionAtImaginaryVertex(i));
        }
        let mut ei = vec![0; d.len()];
        ei[i] = 1;
        let c = self.symmetric_form(d, &ei)?;
        let mut r = d.to_vec();
        r[i] -= c;
        Ok(r)
    }
}

/// Semisimple type: parts `(d_i, e_i)`. Repeated rank vectors are allowed
/// (non-isomorphic simples may share a dimension vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleType {
    pub parts: Vec<(RankVector, i64)>,
}

/// Spanning tree with a valuation in `[0, alpha)` on each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedSpanningTree {
    pub edges: Vec<usize>,
    pub valuation: Vec<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_form_examples() {
        assert_eq!(Quiver::jordan().euler_form(&[1], &[1]).unwrap(), 0);
        assert_eq!(Quiver::a2().euler_form(&[1, 1], &[1, 1]).unwrap(), 1);
        assert_eq!(Quiver::g_loop(2).euler_form(&[2], &[2]).unwrap(), -4);
        assert!(matches!(Quiver::a2().euler_form(&[1], &[1, 1]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn euler_form_h_examples() {
        let a22 = Quiver::a2().with_multiplicities(vec![2, 2]).unwrap();
        assert_eq!(a22.euler_form_h(&[1, 1], &[1, 1]).unwrap(), 2);
        // n = (2,3): 2 + 3 - lcm(2,3) = -1.
        let a23 = Quiver::a2().with_multiplicities(vec![2, 3]).unwrap();
        assert_eq!(a23.euler_form_h(&[1, 1], &[1, 1]).unwrap(), -1);
        // One loop with n = 3: 3 - 3 = 0 = 3 <1,1>.
        let j3 = Quiver::jordan().with_multiplicities(vec![3]).unwrap();
        assert_eq!(j3.euler_form_h(&[1], &[1]).unwrap(), 0);
    }

    #[test]
    fn betti_and_connectivity() {
        let c3 = Quiver::cycle(3);
        assert_eq!((c3.betti(), c3.is_connected(), c3.is_2_connected()), (1, true, true));
        let a2 = Quiver::a2();
        assert_eq!((a2.betti(), a2.is_2_connected()), (0, false));
        let j = Quiver::jordan();
        assert_eq!((j.betti(), j.is_2_connected()), (1, true));
    }

    #[test]
    fn contraction_and_deletion() {
        let c3 = Quiver::cycle(3);
        let c2 = c3.contract(0).unwrap();
        assert_eq!((c2.num_vertices(), c2.betti()), (2, 1));
        assert_eq!(Quiver::a2().delete(0).connected_components(), 2);
        assert_eq!(Quiver::jordan().contract(0), Err(Error::ContractLoop(0)));
        // b(Q) = b(Q') + sum b(Q|I) for the partition {0},{1,2} of C3.
        let parts = [vec![0usize], vec![1, 2]];
        let inner: i64 = parts.iter().map(|p| c3.restrict_vertices(p).betti()).sum();
        // Q' contracts the arrows inside each part: arrow 1 (1 -> 2).
        let qp = c3.contract(1).unwrap();
        assert_eq!(c3.betti(), qp.betti() + inner);
    }

    #[test]
    fn spanning_tree_counts() {
        assert_eq!(Quiver::cycle(3).spanning_trees().unwrap().len(), 3);
        assert_eq!(Quiver::a2().spanning_trees().unwrap().len(), 1);
        assert_eq!(Quiver::kronecker(2).spanning_trees().unwrap().len(), 2);
        assert_eq!(Quiver::new(2, &[]).unwrap().spanning_trees(), Err(Error::NotConnected));
    }

    #[test]
    fn property_p_and_aux_quiver() {
        assert!(Quiver::g_loop(2).has_property_p(&[1]).unwrap());
        assert!(!Quiver::a2().has_property_p(&[1, 1]).unwrap());
        let tau = SemisimpleType {
            parts: vec![(vec![1], 1), (vec![1], 1)],
        };
        let aux = Quiver::g_loop(2).aux_quiver(&tau).unwrap();
        assert_eq!(aux.num_vertices(), 2);
        assert_eq!((aux.loops_at(0), aux.loops_at(1), aux.edges_between(0, 1)), (2, 2, 2));
        assert!(aux.is_totally_negative());
    }

    #[test]
    fn fundamental_set_and_reflections() {
        let c3 = Quiver::cycle(3);
        assert!(c3.fundamental_set_member(&[1, 1, 1]).unwrap());
        let a2 = Quiver::a2();
        assert_eq!(a2.simple_reflection(1, &[1, 0]).unwrap(), vec![1, 1]);
        assert!(!a2.fundamental_set_member(&[1, 1]).unwrap());
        assert_eq!(Quiver::jordan().simple_reflection(0, &[1]), Err(Error::ReflectionAtImaginaryVertex(0)));
    }

    #[test]
    fn json_roundtrip_keeps_arrow_order() {
        let q = Quiver::new(3, &[(2, 0), (0, 1), (1, 2), (0, 0)]).unwrap();
        let back = Quiver::from_json(&q.to_json()).unwrap();
        assert_eq!(q, back);
        let no_mult = Quiver::from_json(r#"{"vertices":["a","b"],"arrows":[{"src":0,"dst":1}]}"#).unwrap();
        assert_eq!(no_mult.multiplicities(), &[1, 1]);
        assert!(Quiver::from_json(r#"{"vertices":["a"],"arrows":[{"src":0,"dst":3}]}"#).is_err());
    }
}
