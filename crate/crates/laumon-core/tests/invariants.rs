//! Property tests on randomly drawn fixed points and scalars.

use laumon_core::affine_module::AffineModule;
use laumon_core::detline::{verify_phi_closed_on, verify_xvi_on};
use laumon_core::exactalg::{parse_scalar, Rat, Scalar};
use laumon_core::localization::{
    kunneth_corners, kunneth_solve, verify_k_identity_pair, verify_localization_on, verify_rank_on,
};
use laumon_core::patterns::{cylindric, from_cylindric, AffinePattern, DominantWeight, Partition};
use proptest::prelude::*;

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn pattern(n: usize, max_len: usize, max_part: u32) -> impl Strategy<Value = AffinePattern> {
    prop::collection::vec(partition(max_len, max_part), n).prop_map(AffinePattern::new)
}

/// Small pattern at `n = 3` or `n = 4`.
fn small_pattern() -> impl Strategy<Value = AffinePattern> {
    prop_oneof![pattern(3, 2, 2), pattern(4, 1, 2)]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-3i64..=3, -3i64..=3, -2i64..=2, 1i64..=3).prop_map(|(a, b, c, d)| {
        let x1 = Scalar::x(1).scale(&Rat::from_int(a.into()));
        let lin = x1
            .add(&Scalar::h().scale(&Rat::from_int(b.into())))
            .add(&Scalar::from_int(c));
        lin.checked_div(&Scalar::hp().add(&Scalar::from_int(d)))
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.checked_div(&a).unwrap().is_one());
        }
    }

    #[test]
    fn scalar_display_parses_back(a in scalar(), b in scalar()) {
        let s = a.mul(&b).add(&a);
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn collection_round_trip(p in small_pattern()) {
        prop_assert_eq!(AffinePattern::from_collection(&p.to_collection()).unwrap(), p);
    }

    #[test]
    fn cylindric_round_trip(p in pattern(3, 2, 2), k in 1i64..=2) {
        let w = DominantWeight::zero(3, k);
        match cylindric(&p, &w) {
            Ok(c) => {
                prop_assert_eq!(c.degree(), p.degree());
                prop_assert_eq!(from_cylindric(&c), p);
            }
            Err(_) => prop_assert!(!w.contains(&p)),
        }
    }

    #[test]
    fn rank_of_e(p in small_pattern()) {
        let r = verify_rank_on(&[p]);
        prop_assert!(r.all_passed(), "{:?}", r.failures().next());
    }

    #[test]
    fn localization_matches_closed_form(p in small_pattern()) {
        let m = AffineModule::new(p.n());
        let r = verify_localization_on(&m, &[p]);
        prop_assert!(r.all_passed(), "{:?}", r.failures().next());
    }

    #[test]
    fn k_identity_on_pairs(p in pattern(3, 2, 1), pick in any::<prop::sample::Index>()) {
        let same = AffinePattern::enumerate(3, &p.degree());
        let q = same[pick.index(same.len())].clone();
        let inst = verify_k_identity_pair(&p, &q);
        prop_assert!(inst.passed, "{:?}", inst.residual);
    }

    #[test]
    fn determinant_line(p in small_pattern()) {
        let r = verify_xvi_on(std::slice::from_ref(&p));
        prop_assert!(r.all_passed(), "{:?}", r.failures().next());
        let r = verify_phi_closed_on(&[p]);
        prop_assert!(r.all_passed(), "{:?}", r.failures().next());
    }

    #[test]
    fn kunneth_round_trip(a in scalar(), b in scalar(), c in scalar(), d in scalar()) {
        let coeffs = [a, b, c, d];
        let corners = kunneth_corners(&coeffs);
        let back = kunneth_solve([&corners[0], &corners[1], &corners[2], &corners[3]]);
        prop_assert_eq!(back, coeffs);
    }
}
