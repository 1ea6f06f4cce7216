//! Symbolic engines against brute-force enumeration and against each other.

use kacjet::bruteforce::{
    absolutely_indecomposable_count, count_iso_classes, enumerate_orbits, jet_counts, moment_fiber_count,
};
use kacjet::exactalg::{rat, PowerSeries};
use kacjet::finitering::{gl_order_rank, smith_invariants, OMatrix, ORing};
use kacjet::kacpoly::{
    gloop_kac_from_recurrence, gloop_rank2_recurrence, gloop_rank3_recurrence, poincare_from_zeta,
    rank1_fiber_count, toric_kac_trees, toric_kac_chains,
};
use kacjet::quiver::corpus::connected_quivers;
use kacjet::{Caps, Quiver};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

fn big(n: &BigUint) -> BigRational {
    BigRational::from_integer(n.clone().into())
}

#[test]
fn toric_degree_law() {
    for q in connected_quivers(3, 4) {
        for alpha in 1..=3 {
            let a = toric_kac_chains(&q, alpha).unwrap();
            assert_eq!(a.degree(), Some(alpha as i64 * q.betti()), "{}", q.to_json());
        }
    }
}

#[test]
fn toric_kac_ignores_orientation() {
    let q1 = Quiver::new(3, &[(0, 1), (1, 2), (2, 0), (0, 0)]).unwrap();
    let q2 = Quiver::new(3, &[(1, 0), (1, 2), (0, 2), (0, 0)]).unwrap();
    for alpha in 1..=3 {
        assert_eq!(toric_kac_trees(&q1, alpha).unwrap(), toric_kac_trees(&q2, alpha).unwrap());
    }
}

#[test]
fn toric_examples() {
    let c3 = Quiver::cycle(3);
    assert_eq!(toric_kac_chains(&c3, 1).unwrap().to_string(), "q + 2");
    let orbits = enumerate_orbits(&c3, 1, &[1, 1, 1], 2, &Caps::default()).unwrap();
    assert_eq!(absolutely_indecomposable_count(&orbits), 4);
    assert_eq!(toric_kac_trees(&Quiver::a2(), 3).unwrap().to_string(), "3");
    for alpha in 1..=4 {
        assert_eq!(toric_kac_chains(&Quiver::jordan(), alpha).unwrap(), kacjet::QPolynomial::monomial(rat(1), alpha as i64));
    }
}

#[test]
fn rank1_fibers_match_brute_force() {
    let caps = Caps::default();
    for quiver in connected_quivers(3, 3) {
        let ones = vec![1usize; quiver.num_vertices()];
        for alpha in 1..=2 {
            let f = rank1_fiber_count(&quiver, alpha).unwrap();
            for q in [2u32, 3] {
                let got = moment_fiber_count(&quiver, alpha, &ones, q, &[], &caps).unwrap();
                assert_eq!(big(&got), f.eval(&rat(q as i64)).unwrap(), "{} alpha={alpha} q={q}", quiver.to_json());
            }
        }
    }
}

#[test]
fn gloop_m_series_match_iso_class_counts() {
    let caps = Caps::default();
    let jordan = Quiver::jordan();
    for (alpha, q) in [(1usize, 2u32), (1, 3), (2, 2), (2, 3), (3, 2)] {
        let m2 = big(&count_iso_classes(&jordan, alpha, &[2], q, &caps).unwrap());
        assert_eq!(m2, gloop_rank2_recurrence(1, alpha).unwrap().eval(&rat(q as i64)).unwrap());
    }
    for (alpha, q) in [(1usize, 2u32), (1, 3), (2, 2)] {
        let m3 = big(&count_iso_classes(&jordan, alpha, &[3], q, &caps).unwrap());
        assert_eq!(m3, gloop_rank3_recurrence(1, alpha).unwrap().eval(&rat(q as i64)).unwrap());
    }
    let m3 = big(&count_iso_classes(&Quiver::g_loop(2), 1, &[3], 2, &caps).unwrap());
    assert_eq!(m3, gloop_rank3_recurrence(2, 1).unwrap().eval(&rat(2)).unwrap());
}

#[test]
fn recurrence_kac_polynomials_are_positive() {
    for g in 1..=3 {
        for alpha in 1..=5 {
            for rank in 2..=3 {
                let a = gloop_kac_from_recurrence(g, alpha, rank).unwrap();
                let p = a.as_polynomial().unwrap_or_else(|| panic!("A_{rank} g={g} alpha={alpha} not a polynomial"));
                assert!(p.terms().all(|(_, c)| *c > BigRational::zero()), "g={g} alpha={alpha} rank={rank}: {p}");
            }
        }
    }
}

#[test]
fn zero_map_jets() {
    // The Jordan moment map in rank 1 vanishes identically: N_n = q^{2n}.
    let brute = jet_counts(&Quiver::jordan(), &[1], 2, 3, &Caps::default()).unwrap();
    let zeta = poincare_from_zeta(&PowerSeries::zero(4), 2, 3).unwrap();
    for (b, z) in brute.iter().zip(&zeta) {
        assert_eq!(big(b), z.eval(&rat(2)).unwrap());
    }
}

#[test]
fn deformed_fiber_example() {
    // xy = 1 over F_3 has q - 1 solutions.
    let n = moment_fiber_count(&Quiver::a2(), 1, &[1, 1], 3, &[1, -1], &Caps::default()).unwrap();
    assert_eq!(n, BigUint::from(2u32));
    assert_eq!(gl_order_rank(3, 1, &[1, 1]), BigUint::from(4u32));
}

#[test]
fn smith_examples() {
    let ring = ORing::new(2, 2).unwrap();
    let t = ring.t_pow(1);
    let m = OMatrix::from_rows(vec![vec![t, ring.one()], vec![ring.zero(), t]]);
    assert_eq!(smith_invariants(&m, &ring).gammas, vec![0, 2]);
    let ring3 = ORing::new(3, 3).unwrap();
    let d = OMatrix::diagonal(&ring3, 2, 2, &[0, 1]);
    assert_eq!(smith_invariants(&d, &ring3).gammas, vec![0, 1]);
    assert_eq!(smith_invariants(&OMatrix::zero(2, 2), &ring3).gammas, vec![3, 3]);
}
