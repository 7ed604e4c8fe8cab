use laumon_core::integrable::{
    check_character, check_renormalized_antisymmetry, check_truncation, oracle,
};
use laumon_core::patterns::DominantWeight;

#[test]
fn truncation_level_one() {
    let w = DominantWeight::zero(3, 1);
    let r = check_truncation(&w, 4, 2);
    assert!(r.instances.len() > 100);
    assert!(r.all_passed(), "{:?}", r.failures().next());
}

#[test]
fn truncation_other_weights() {
    for (k, mu) in [
        (2, vec![0, 0, 0]),
        (1, vec![1, 0, 0]),
        (2, vec![2, 1, 0]),
        (3, vec![1, 1, 0]),
    ] {
        let w = DominantWeight::new(k, mu).unwrap();
        let r = check_truncation(&w, 3, 1);
        assert!(r.all_passed(), "{} {:?}", w, r.failures().next());
    }
}

#[test]
fn characters() {
    let w = DominantWeight::zero(3, 1);
    let r = check_character(&w, 6);
    assert!(r.all_passed(), "{:?}", r.failures().next());
    for (k, mu) in [
        (2, vec![0, 0, 0]),
        (1, vec![1, 0, 0]),
        (2, vec![2, 1, 0]),
        (2, vec![1, 0, 0, 0]),
    ] {
        let w = DominantWeight::new(k, mu).unwrap();
        let r = check_character(&w, 5);
        assert!(r.all_passed(), "{} {:?}", w, r.failures().next());
    }
    assert_eq!(
        oracle::fock_counts(4, 3),
        oracle::cylindric_counts(&DominantWeight::zero(4, 1), 3)
    );
}

#[test]
fn renormalized_antisymmetry() {
    let w = DominantWeight::zero(3, 1);
    let r = check_renormalized_antisymmetry(&w, 3);
    assert!(r.instances.len() > 10);
    assert!(r.all_passed(), "{:?}", r.failures().next());
}
