use laumon_core::affine_module::AffineModule;
use laumon_core::detline::{verify_phi_closed_on, verify_xvi, xvi_patterns, DegreeMode};
use laumon_core::localization::{verify_k_identity, verify_localization, verify_rank};
use laumon_core::patterns::AffinePattern;

#[test]
fn localization_matches_closed_forms() {
    let r = verify_localization(&AffineModule::new(3), 3);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    let bad = verify_localization(&AffineModule::new(3).with_flipped_e_sign(), 1);
    assert!(bad.failed() > 0);
}

#[test]
fn k_identity_and_rank() {
    let r = verify_k_identity(3, 2);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    let r = verify_rank(3, 3);
    assert!(r.all_passed(), "{:?}", r.failures().next());
}

#[test]
fn n4_localization() {
    let r = verify_localization(&AffineModule::new(4), 2);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    assert!(verify_k_identity(4, 1).all_passed());
}

#[test]
fn determinant_line() {
    assert!(!xvi_patterns(3, 4, DegreeMode::Diagonal).is_empty());
    let r = verify_xvi(3, 4, DegreeMode::Diagonal);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    // Off-diagonal degree vectors are not covered by the theorem but pass too.
    let r = verify_xvi(3, 3, DegreeMode::All);
    assert!(r.all_passed(), "{:?}", r.summary());
    let r = verify_phi_closed_on(&AffinePattern::up_to(3, 3));
    assert!(r.all_passed(), "{:?}", r.failures().next());
}
