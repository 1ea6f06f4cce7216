//! Exhaustive enumeration over representation spaces of (Q, alpha): orbits and their
//! endomorphism rings, Burnside counts, moment-map fibers and ASK averages.

mod counts;
mod orbits;
mod space;

pub use counts::{ask_counts, count_iso_classes, jet_counts, moment_fiber_count, LinearFamily};
pub use orbits::{
    absolutely_indecomposable_count, enumerate_orbits, indecomposable_count, orbit_stabiliser_product, OrbitRecord,
};
pub use space::RepSpace;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Caps;
    use crate::finitering::gl_order_rank;
    use crate::quiver::Quiver;
    use num_bigint::BigUint;
    use num_rational::BigRational;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn jordan_orbits() {
        let o = enumerate_orbits(&Quiver::jordan(), 1, &[1], 2, &caps()).unwrap();
        assert_eq!(o.len(), 2);
        assert!(o.iter().all(|r| r.absolutely_indecomposable));
        assert_eq!(absolutely_indecomposable_count(&o), 2);
    }

    #[test]
    fn a2_alpha2_valuation_classes() {
        let o = enumerate_orbits(&Quiver::a2(), 2, &[1, 1], 2, &caps()).unwrap();
        assert_eq!(o.len(), 3);
        let mut sizes: Vec<u64> = o.iter().map(|r| r.orbit_size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert_eq!(absolutely_indecomposable_count(&o), 2);
        // x = 0 decomposes.
        assert!(!o[0].indecomposable);
    }

    #[test]
    fn orbit_stabiliser_law() {
        for (qv, a, r) in [
            (Quiver::a2(), 2, vec![1, 1]),
            (Quiver::jordan(), 2, vec![2]),
            (Quiver::kronecker(2), 1, vec![1, 2]),
        ] {
            let order = gl_order_rank(2, a, &r);
            for o in enumerate_orbits(&qv, a, &r, 2, &caps()).unwrap() {
                assert_eq!(orbit_stabiliser_product(&o), order);
            }
        }
    }

    #[test]
    fn burnside_examples() {
        let c = caps();
        assert_eq!(count_iso_classes(&Quiver::jordan(), 1, &[1], 3, &c).unwrap(), BigUint::from(3u32));
        assert_eq!(count_iso_classes(&Quiver::jordan(), 2, &[1], 2, &c).unwrap(), BigUint::from(4u32));
        assert_eq!(count_iso_classes(&Quiver::a2(), 1, &[1, 1], 2, &c).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn burnside_matches_orbits() {
        let c = caps();
        for (qv, a, r, q) in [
            (Quiver::jordan(), 2, vec![2], 2),
            (Quiver::a2(), 2, vec![2, 1], 2),
            (Quiver::kronecker(2), 1, vec![2, 2], 2),
            (Quiver::g_loop(2), 1, vec![2], 2),
            (Quiver::cycle(3), 1, vec![1, 1, 1], 3),
        ] {
            let n = enumerate_orbits(&qv, a, &r, q, &c).unwrap().len();
            assert_eq!(count_iso_classes(&qv, a, &r, q, &c).unwrap(), BigUint::from(n));
        }
    }

    #[test]
    fn jordan_rank2_alpha1() {
        // Kac polynomial of the Jordan quiver in rank 2 is q.
        let o = enumerate_orbits(&Quiver::jordan(), 1, &[2], 3, &caps()).unwrap();
        assert_eq!(absolutely_indecomposable_count(&o), 3);
        // Over F_3 the 2x2 matrices with irreducible characteristic polynomial are
        // indecomposable but not absolutely so: 3 such classes.
        assert_eq!(indecomposable_count(&o), 6);
        assert!(o.iter().filter(|r| r.indecomposable && !r.absolutely_indecomposable).all(|r| r.top_degree == Some(2)));
    }

    #[test]
    fn moment_examples() {
        let c = caps();
        assert_eq!(
            moment_fiber_count(&Quiver::a2(), 1, &[1, 1], 3, &[1, -1], &c).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(moment_fiber_count(&Quiver::g_loop(2), 1, &[2], 2, &[], &c).unwrap(), BigUint::from(11776u32));
        assert_eq!(moment_fiber_count(&Quiver::kronecker(3), 2, &[0, 0], 2, &[], &c).unwrap(), BigUint::from(1u32));
        assert!(matches!(
            moment_fiber_count(&Quiver::a2(), 1, &[1, 1], 3, &[1, 1], &c),
            Err(crate::Error::NonGenericLambda(2))
        ));
        assert!(matches!(
            moment_fiber_count(&Quiver::a2(), 1, &[1, 1], 2, &[1, -1], &c),
            Err(crate::Error::CharacteristicTooSmall { p: 2, bound: 2 })
        ));
    }

    #[test]
    fn jordan_jets() {
        let j = jet_counts(&Quiver::jordan(), &[1], 2, 3, &caps()).unwrap();
        assert_eq!(j, vec![BigUint::from(4u32), BigUint::from(16u32), BigUint::from(64u32)]);
    }

    #[test]
    fn fiber_equals_end_shift_and_naive() {
        let c = caps();
        for (qv, a, r) in [
            (Quiver::a2(), 2, vec![1, 1]),
            (Quiver::jordan(), 1, vec![2]),
            (Quiver::kronecker(2), 1, vec![1, 1]),
            (Quiver::jordan(), 2, vec![1]),
        ] {
            let space = RepSpace::new(&qv, a, &r, 2, &c).unwrap();
            let ri: Vec<i64> = r.iter().map(|&v| v as i64).collect();
            let shift = a as i64 * qv.euler_form(&ri, &ri).unwrap();
            for idx in 0..space.size() {
                let e = space.fiber_exponent(idx) as i64;
                assert_eq!(e, space.end_exponent(idx) as i64 - shift);
                assert_eq!(space.naive_fiber_count(idx), 2u64.pow(e as u32));
            }
        }
    }

    #[test]
    fn ask_examples() {
        let c = caps();
        let id = LinearFamily::new(1, 1, vec![vec![1]]).unwrap();
        let a = ask_counts(&id, 2, 2, &c).unwrap();
        assert_eq!(a[0], BigRational::new(3.into(), 2.into()));
        // n = 2: (1 + 1*2... ) val 0: 2 elements, kernel 1; val 1: 1, kernel 2; val 2: 1, kernel 4.
        assert_eq!(a[1], BigRational::new(8.into(), 4.into()));
        let zero = LinearFamily::new(2, 3, vec![vec![0; 6]]).unwrap();
        let z = ask_counts(&zero, 3, 2, &c).unwrap();
        assert_eq!(z[1], BigRational::from_integer(729.into()));
        let mu = LinearFamily::moment_map(&Quiver::jordan(), &[1]).unwrap();
        assert_eq!(mu.basis, vec![vec![0]]);
        let m = ask_counts(&mu, 2, 3, &c).unwrap();
        assert_eq!(m[2], BigRational::from_integer(8.into()));
    }

    #[test]
    fn caps_are_enforced() {
        let small = Caps {
            max_space_log2: 4,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_orbits(&Quiver::g_loop(2), 1, &[2], 2, &small),
            Err(crate::Error::CapExceeded { .. })
        ));
        let tiny_group = Caps {
            max_group: 5,
            ..Caps::default()
        };
        assert!(matches!(
            count_iso_classes(&Quiver::jordan(), 1, &[2], 2, &tiny_group),
            Err(crate::Error::CapExceeded { .. })
        ));
    }
}
