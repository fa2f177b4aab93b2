use fitting::corpus::{builtin_catalog, exit_code, find_builtin, run_suite, SuiteOptions};
use fitting::theorems::{CheckKind, Status, CHECKS};

#[test]
fn catalog_has_no_theorem_failures() {
    let out = run_suite(&builtin_catalog(), &SuiteOptions::default()).unwrap();
    assert_eq!(out.exit_code, 0);
    for r in &out.records {
        let kind = CHECKS.iter().find(|c| c.id == r.check_id).map(|c| c.kind);
        if kind == Some(CheckKind::Theorem) {
            assert_ne!(
                r.status,
                Status::Fails,
                "{} {}: {:?}",
                r.group,
                r.check_id,
                r.witness
            );
        }
        assert!(!r.is_internal(), "{} {:?}", r.group, r.witness);
    }
    assert_eq!(out.records.len(), builtin_catalog().len() * CHECKS.len());
}

#[test]
fn coprime_pair_statement_fails_on_the_order_294_group() {
    let corpus = vec![find_builtin("R294").unwrap()];
    let opts = SuiteOptions {
        checks: vec!["pair-coprime-supersoluble".into()],
        max_product_order: 294,
        ..Default::default()
    };
    let out = run_suite(&corpus, &opts).unwrap();
    assert_eq!(out.records.len(), 1);
    assert_eq!(out.records[0].status, Status::Fails);
    // an expected-negative failure is a finding, not a defect
    assert_eq!(out.exit_code, 0);

    let default = run_suite(
        &corpus,
        &SuiteOptions {
            max_product_order: 200,
            ..opts
        },
    )
    .unwrap();
    assert_eq!(default.records[0].status, Status::Skipped);
}

#[test]
fn product_theorems_hold_on_the_order_294_group() {
    let corpus = vec![find_builtin("R294").unwrap()];
    let opts = SuiteOptions {
        max_product_order: 294,
        ..Default::default()
    };
    let out = run_suite(&corpus, &opts).unwrap();
    assert_eq!(exit_code(&out.records), 0);
    let skipped: Vec<&str> = out
        .records
        .iter()
        .filter(|r| r.status == Status::Skipped)
        .map(|r| r.check_id.as_str())
        .collect();
    assert!(skipped.is_empty(), "{skipped:?}");
}
