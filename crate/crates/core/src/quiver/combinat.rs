//! Set partitions and chains of arrow subsets.

use super::Quiver;

/// All set partitions of `0..n`, blocks in increasing order of their least element.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    // Restricted growth strings.
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
        let n = rgs.len();
        if i == n {
            let blocks = if n == 0 { 0 } else { max + 1 };
            let mut p = vec![Vec::new(); blocks];
            for (j, &b) in rgs.iter().enumerate() {
                p[b].push(j);
            }
            out.push(p);
            return;
        }
        let top = if i == 0 { 0 } else { max + 1 };
        for b in 0..=top {
            rgs[i] = b;
            rec(i + 1, max.max(b), rgs, out);
        }
    }
    rec(0, 0, &mut rgs, &mut out);
    out
}

/// Filters for `chains_of_edge_subsets`.
#[derive(Clone, Debug, Default)]
pub struct ChainConstraints {
    /// Require E_1 < E_2 < ... (strict inclusions).
    pub strict: bool,
    /// Require the last term to equal this arrow set.
    pub final_term: Option<u64>,
    /// Require Q restricted to the last term (all vertices kept) to be connected.
    pub connected_final: bool,
    /// Require every term to be a proper nonempty subset of the arrow set.
    pub proper_nonempty: bool,
}

/// Chains E_1 <= ... <= E_len of arrow subsets (bitmasks). `len = None` means every
/// length >= 1, which is only finite for strict chains.
pub fn chains_of_edge_subsets(q: &Quiver, len: Option<usize>, c: &ChainConstraints) -> Vec<Vec<u64>> {
    let m = q.num_arrows();
    assert!(m < 64, "too many arrows for bitmask chains");
    assert!(len.is_some() || c.strict, "unbounded chain length needs strict inclusions");
    let full: u64 = if m == 0 { 0 } else { (1u64 << m) - 1 };
    let mut out = Vec::new();
    let mut cur: Vec<u64> = Vec::new();
    let allowed = |e: u64| !c.proper_nonempty || (e != 0 && e != full);
    let accept = |chain: &[u64]| {
        let last = *chain.last().unwrap();
        c.final_term.is_none_or(|f| f == last) && (!c.connected_final || q.restrict_arrow_mask(last).is_connected())
    };
    // Enumerate the first term, then supersets.
    fn rec(
        full: u64,
        len: Option<usize>,
        strict: bool,
        cur: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
        allowed: &dyn Fn(u64) -> bool,
        accept: &dyn Fn(&[u64]) -> bool,
    ) {
        let done = len.is_some_and(|l| cur.len() == l);
        if !cur.is_empty() && (len.is_none() || done) && accept(cur) {
            out.push(cur.clone());
        }
        if done {
            return;
        }
        let base = cur.last().copied().unwrap_or(0);
        let free = full & !base;
        // Iterate over subsets s of `free`; next term = base | s.
        let mut s = 0u64;
        loop {
            let next = base | s;
            let first = cur.is_empty();
            if allowed(next) && (first || !strict || s != 0) {
                cur.push(next);
                rec(full, len, strict, cur, out, allowed, accept);
                cur.pop();
            }
            if s == free {
                break;
            }
            s = (s.wrapping_sub(free)) & free;
        }
    }
    rec(full, len, c.strict, &mut cur, &mut out, &allowed, &accept);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52]);
    }

    #[test]
    fn weak_chains_on_one_edge() {
        let q = Quiver::a2();
        assert_eq!(chains_of_edge_subsets(&q, Some(2), &ChainConstraints::default()).len(), 3);
    }

    #[test]
    fn strict_proper_chains_of_three_set() {
        let c = ChainConstraints {
            strict: true,
            proper_nonempty: true,
            ..Default::default()
        };
        let chains = chains_of_edge_subsets(&Quiver::cycle(3), None, &c);
        let by_len = |l: usize| chains.iter().filter(|ch| ch.len() == l).count();
        assert_eq!((by_len(1), by_len(2), chains.len()), (6, 6, 12));
    }
}
