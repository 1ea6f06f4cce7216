//! Exhaustive corpus of small connected quivers, up to isomorphism of the
//! underlying multigraph. Orientation is canonical (lower to higher index);
//! loops come first, then edges by endpoints.

use super::Quiver;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut v = p.clone();
            v.insert(i, n - 1);
            out.push(v);
        }
    }
    out
}

/// Lexicographically least relabelling of the edge multiset.
fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p[a], p[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Connected quivers with `1..=max_vertices` vertices and at most `max_edges` arrows
/// (loops included), one per isomorphism class, in a deterministic order.
pub fn connected_quivers(max_vertices: usize, max_edges: usize) -> Vec<Quiver> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let perms = permutations(n);
        let mut slots = Vec::new();
        for i in 0..n {
            for j in i..n {
                slots.push((i, j));
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        for e in 0..=max_edges {
            // Multisets of size e from slots, as nondecreasing index sequences.
            let mut idx = vec![0usize; e];
            loop {
                let edges: Vec<(usize, usize)> = idx.iter().map(|&k| slots[k]).collect();
                let q = Quiver::new(n, &edges).unwrap();
                if q.is_connected() {
                    let key = canonical(&edges, &perms);
                    if seen.insert(key.clone()) {
                        let mut ordered = key.clone();
                        ordered.sort_by_key(|&(a, b)| (a != b, a, b));
                        out.push(Quiver::new(n, &ordered).unwrap());
                    }
                }
                // Advance the nondecreasing sequence.
                let mut k = e;
                loop {
                    if k == 0 {
                        break;
                    }
                    k -= 1;
                    if idx[k] + 1 < slots.len() {
                        idx[k] += 1;
                        for t in k + 1..e {
                            idx[t] = idx[k];
                        }
                        k = usize::MAX;
                        break;
                    }
                }
                if k != usize::MAX {
                    break;
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // One vertex: 0..=2 loops -> 3 quivers. Two vertices with <= 2 edges, connected:
        // one edge; two parallel edges; edge + loop (2 placements up to symmetry: 1).
        let qs = connected_quivers(2, 2);
        let one: usize = qs.iter().filter(|q| q.num_vertices() == 1).count();
        let two: usize = qs.iter().filter(|q| q.num_vertices() == 2).count();
        assert_eq!((one, two), (3, 3));
        assert!(qs.iter().all(|q| q.is_connected()));
    }
}
