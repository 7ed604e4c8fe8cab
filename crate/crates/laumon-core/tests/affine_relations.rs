use laumon_core::affine_module::AffineModule;

fn show(report: &laumon_core::rep::Report) {
    for f in report.failures().take(5) {
        eprintln!("{:?}", f);
    }
    eprintln!("{:?}", report.summary());
}

#[test]
fn affine_yangian_relations_degree_three() {
    let report = AffineModule::new(3).verify_relations(3, 2);
    show(&report);
    assert!(report.all_passed(), "{} failures", report.failed());
}

#[test]
fn sl_hat_specialization_degree_three() {
    let report = AffineModule::sl_hat(3).verify_relations(3, 2);
    show(&report);
    assert!(report.all_passed());
}

#[test]
fn recursion_and_critical_value() {
    let rec = AffineModule::new(3).verify_recursion(3);
    show(&rec);
    assert!(rec.all_passed());
    let crit = AffineModule::critical(3).verify_critical(3);
    assert!(crit.all_passed());
    // Away from the critical value the product is not trivial.
    assert!(!AffineModule::new(3).verify_critical(1).all_passed());
}

#[test]
fn irreducibility_data() {
    let rep = AffineModule::new(3).verify_irreducibility(3);
    assert!(rep.all_passed());
}

#[test]
fn n_four_low_degree() {
    let report = AffineModule::new(4).verify_relations(1, 1);
    show(&report);
    assert!(report.all_passed());
}
