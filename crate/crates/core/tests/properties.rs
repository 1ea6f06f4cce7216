//! Property tests for the algebraic invariants.

use kacjet::exactalg::{rat, RfSeries};
use kacjet::finitering::{kernel_size, smith_normal_form, OMatrix, ORing};
use kacjet::kacpoly::{toric_kac_trees, toric_kac_chains};
use kacjet::{QPolynomial, Quiver, RationalFunction};
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = QPolynomial> {
    prop::collection::vec(-4i64..=4, 0..5).prop_map(|c| QPolynomial::from_int_coeffs(&c))
}

fn ratfunc() -> impl Strategy<Value = RationalFunction> {
    (poly(), poly()).prop_filter_map("nonzero denominator", |(n, d)| {
        if d.is_zero() {
            None
        } else {
            RationalFunction::new(&n, &d).ok()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) * &b.recip().unwrap(), a.clone());
        }
    }

    #[test]
    fn adams_is_a_ring_map(a in ratfunc(), b in ratfunc(), m in 1u32..4) {
        prop_assert_eq!((&a * &b).adams(m), &a.adams(m) * &b.adams(m));
        prop_assert_eq!((&a + &b).adams(m), &a.adams(m) + &b.adams(m));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in ratfunc(), b in ratfunc(), q0 in 2i64..8) {
        let q0 = rat(q0);
        if let (Ok(x), Ok(y)) = (a.eval(&q0), b.eval(&q0)) {
            prop_assert_eq!((&a * &b).eval(&q0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&q0).unwrap(), x + y);
        }
    }

    #[test]
    fn plethystic_exp_log_roundtrip(coeffs in prop::collection::vec(poly(), 3)) {
        let mut a = RfSeries::zero(vec![3]);
        for (i, p) in coeffs.iter().enumerate() {
            a.set(vec![i as u32 + 1], RationalFunction::from_poly(p));
        }
        let m = a.plethystic_exp().unwrap();
        prop_assert!(m.coeff(&[0]).is_one());
        prop_assert_eq!(m.plethystic_log().unwrap(), a);
    }

    #[test]
    fn smith_normal_form_is_a_factorisation(
        q in prop::sample::select(vec![2u32, 3, 4]),
        alpha in 1usize..=3,
        rows in 1usize..=3,
        cols in 1usize..=3,
        seed in prop::collection::vec(any::<u64>(), 9),
    ) {
        let ring = ORing::new(q, alpha).unwrap();
        let mut m = OMatrix::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, ring.from_index(seed[i * cols + j] % ring.size()));
            }
        }
        let (inv, u, v) = smith_normal_form(&m, &ring);
        let d = OMatrix::diagonal(&ring, rows, cols, &inv.gammas);
        prop_assert_eq!(u.mul(&m, &ring).mul(&v, &ring), d);
        prop_assert!(u.is_invertible(&ring) && v.is_invertible(&ring));
        prop_assert!(inv.gammas.windows(2).all(|w| w[0] <= w[1]));
        // Kernel size by enumeration of O^cols.
        let n = ring.size().pow(cols as u32);
        let mut kernel = 0u64;
        for idx in 0..n {
            let mut k = idx;
            let x: Vec<_> = (0..cols).map(|_| { let e = ring.from_index(k % ring.size()); k /= ring.size(); e }).collect();
            if m.apply(&x, &ring).iter().all(|e| ring.is_zero(e)) {
                kernel += 1;
            }
        }
        prop_assert_eq!(kernel, (q as u64).pow(kernel_size(&m, &ring) as u32));
    }

    #[test]
    fn toric_formulas_agree_on_random_quivers(
        n in 1usize..=3,
        arrows in prop::collection::vec((0usize..3, 0usize..3), 0..5),
        alpha in 1usize..=3,
    ) {
        let mut arrows: Vec<(usize, usize)> = arrows.into_iter().map(|(a, b)| (a % n, b % n)).collect();
        // A path keeps the quiver connected.
        arrows.extend((1..n).map(|i| (i - 1, i)));
        let q = Quiver::new(n, &arrows).unwrap();
        let t = toric_kac_trees(&q, alpha).unwrap();
        prop_assert_eq!(&t, &toric_kac_chains(&q, alpha).unwrap());
        prop_assert!(t.terms().all(|(_, c)| *c >= rat(0)));
        prop_assert_eq!(t.degree(), Some(alpha as i64 * q.betti()));
    }

    #[test]
    fn euler_form_h_scales_with_equal_multiplicities(
        arrows in prop::collection::vec((0usize..3, 0usize..3), 0..5),
        r in prop::collection::vec(0i64..3, 3),
        s in prop::collection::vec(0i64..3, 3),
        alpha in 1u32..4,
    ) {
        let q = Quiver::new(3, &arrows).unwrap();
        let qa = q.with_multiplicities(vec![alpha; 3]).unwrap();
        prop_assert_eq!(qa.euler_form_h(&r, &s).unwrap(), alpha as i64 * q.euler_form(&r, &s).unwrap());
    }
}
