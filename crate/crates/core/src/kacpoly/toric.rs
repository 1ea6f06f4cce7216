//! Toric Kac polynomials A_{(Q,alpha),1}: the chain formula over arrow subsets and the
//! valued-spanning-tree formula.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::QPolynomial;
use crate::quiver::Quiver;

/// Betti number and connectivity of Q restricted to each arrow subset.
pub(crate) struct SubsetData {
    pub betti: Vec<i64>,
    pub connected: Vec<bool>,
}

pub(crate) fn subset_data(q: &Quiver) -> Result<SubsetData> {
    let m = q.num_arrows();
    if m > 20 {
        return Err(crate::error::cap_error("arrows for subset enumeration", m, 20));
    }
    let n = 1usize << m;
    let mut betti = Vec::with_capacity(n);
    let mut connected = Vec::with_capacity(n);
    for mask in 0..n as u64 {
        let r = q.restrict_arrow_mask(mask);
        betti.push(r.betti());
        connected.push(r.is_connected());
    }
    Ok(SubsetData { betti, connected })
}

fn q_pow_int(k: i64) -> QPolynomial {
    QPolynomial::monomial(BigRational::from_integer(BigInt::from(1)), k)
}

/// sum over E_1 <= ... <= E_alpha with Q|E_alpha connected of
/// (q-1)^{b(E_alpha)} q^{b(E_1) + ... + b(E_{alpha-1})}.
pub fn toric_kac_chains(q: &Quiver, alpha: usize) -> Result<QPolynomial> {
    if !q.is_connected() {
        return Err(Error::NotConnected);
    }
    if alpha == 0 {
        return Err(Error::InvalidInput("alpha must be at least 1".into()));
    }
    let sd = subset_data(q)?;
    let n = sd.betti.len();
    // f[E] = sum over chains E_1 <= ... <= E_k = E of q^{b(E_1)+...+b(E_{k-1})}, k = 1 first.
    let mut f = vec![QPolynomial::one(); n];
    for _ in 1..alpha {
        let weighted: Vec<QPolynomial> = (0..n).map(|e| f[e].mul(&q_pow_int(sd.betti[e]))).collect();
        f = (0..n)
            .map(|e| {
                let mut acc = QPolynomial::zero();
                let mut s = e;
                loop {
                    acc = acc.add(&weighted[s]);
                    if s == 0 {
                        break;
                    }
                    s = (s - 1) & e;
                }
                acc
            })
            .collect();
    }
    let qm1 = QPolynomial::from_int_coeffs(&[-1, 1]);
    let mut total = QPolynomial::zero();
    for (e, fe) in f.iter().enumerate().take(n) {
        if sd.connected[e] {
            total = total.add(&qm1.pow(sd.betti[e] as u32).mul(fe));
        }
    }
    Ok(total)
}

/// sum over valued spanning trees T of q^{n_T}, where each non-tree non-loop arrow a
/// contributes alpha - v_{T_a} - [a > e_{T_a}] and each loop contributes alpha.
pub fn toric_kac_trees(q: &Quiver, alpha: usize) -> Result<QPolynomial> {
    if alpha == 0 {
        return Err(Error::InvalidInput("alpha must be at least 1".into()));
    }
    let trees = q.spanning_trees()?;
    let a = alpha as i64;
    let mut exps: Vec<u64> = Vec::new();
    for tree in &trees {
        let loops = q.arrows().iter().filter(|x| x.is_loop()).count() as i64;
        // Tree paths of the chords, as positions within `tree`.
        let chords: Vec<(usize, Vec<usize>)> = (0..q.num_arrows())
            .filter(|j| !q.arrows()[*j].is_loop() && !tree.contains(j))
            .map(|j| {
                let ar = q.arrows()[j];
                let path = q.tree_path(tree, ar.src, ar.dst);
                (j, path.iter().map(|e| tree.iter().position(|t| t == e).unwrap()).collect())
            })
            .collect();
        let k = tree.len();
        let mut val = vec![0usize; k];
        loop {
            let mut nt = loops * a;
            for (j, path) in &chords {
                let vmax = path.iter().map(|&p| val[p]).max().unwrap();
                // Smallest arrow index among path edges of maximal valuation.
                let e = path.iter().filter(|&&p| val[p] == vmax).map(|&p| tree[p]).min().unwrap();
                nt += a - vmax as i64 - (*j > e) as i64;
            }
            let nt = nt as usize;
            if exps.len() <= nt {
                exps.resize(nt + 1, 0);
            }
            exps[nt] += 1;
            // Next valuation in [0, alpha-1]^k.
            let mut i = 0;
            while i < k && val[i] == alpha - 1 {
                val[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            val[i] += 1;
        }
    }
    Ok(QPolynomial::from_terms(
        exps.iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(d, &c)| (d as i64, BigRational::from_integer(BigInt::from(c)))),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_rf;
    use crate::quiver::{chains_of_edge_subsets, ChainConstraints};

    fn poly(s: &str) -> QPolynomial {
        parse_rf(s).unwrap().as_polynomial().unwrap()
    }

    #[test]
    fn jordan_is_q_alpha() {
        for a in 1..=5 {
            let m = QPolynomial::monomial(BigRational::from_integer(1.into()), a as i64);
            assert_eq!(toric_kac_chains(&Quiver::jordan(), a).unwrap(), m);
            assert_eq!(toric_kac_trees(&Quiver::jordan(), a).unwrap(), m);
        }
    }

    #[test]
    fn cycle_and_trees() {
        let c3 = Quiver::cycle(3);
        assert_eq!(toric_kac_chains(&c3, 1).unwrap(), poly("q+2"));
        assert_eq!(toric_kac_trees(&c3, 1).unwrap(), poly("q+2"));
        let a2 = Quiver::a2();
        assert_eq!(toric_kac_chains(&a2, 3).unwrap(), QPolynomial::from_int(3));
        assert_eq!(toric_kac_trees(&a2, 3).unwrap(), QPolynomial::from_int(3));
        let path = Quiver::new(4, &[(0, 1), (2, 1), (2, 3)]).unwrap();
        assert_eq!(toric_kac_chains(&path, 1).unwrap(), QPolynomial::one());
    }

    #[test]
    fn disconnected_rejected() {
        let q = Quiver::new(2, &[]).unwrap();
        assert!(matches!(toric_kac_chains(&q, 1), Err(Error::NotConnected)));
        assert!(matches!(toric_kac_trees(&q, 1), Err(Error::NotConnected)));
    }

    #[test]
    fn dp_matches_explicit_chains() {
        let q = Quiver::new(3, &[(0, 1), (1, 2), (2, 0), (0, 0), (1, 2)]).unwrap();
        for alpha in 1..=3 {
            let chains = chains_of_edge_subsets(
                &q,
                Some(alpha),
                &ChainConstraints {
                    connected_final: true,
                    ..Default::default()
                },
            );
            let qm1 = QPolynomial::from_int_coeffs(&[-1, 1]);
            let mut total = QPolynomial::zero();
            for ch in chains {
                let b = |m: u64| q.restrict_arrow_mask(m).betti();
                let last = *ch.last().unwrap();
                let e: i64 = ch[..ch.len() - 1].iter().map(|&m| b(m)).sum();
                total = total.add(&qm1.pow(b(last) as u32).mul(&q_pow_int(e)));
            }
            assert_eq!(toric_kac_chains(&q, alpha).unwrap(), total);
        }
    }
}
