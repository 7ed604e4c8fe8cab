use laumon_core::finite_module::FiniteModule;

#[test]
fn yangian_and_gl_relations_hold_up_to_degree_three() {
    let report = FiniteModule::new(3).verify_relations(3, 2);
    for f in report.failures().take(5) {
        eprintln!("{:?}", f);
    }
    assert!(report.all_passed(), "{} failures", report.failed());
    assert!(report.passed() > 1000);
}

#[test]
fn n_four_small_degree() {
    let report = FiniteModule::new(4).verify_relations(1, 1);
    assert!(report.all_passed(), "{} failures", report.failed());
}
