use branchpair::catalog::{build, build_s4, CatalogKey};
use branchpair::verify::{
    exhaustive_report, randomized_check, verify_key, DecompositionStatus, Mode, ReportOptions, VerificationReport,
};

const FULL: ReportOptions = ReportOptions {
    certificates: true,
    decomposition: true,
};

#[test]
fn report_roundtrips_through_json() {
    for key in [CatalogKey::S4, CatalogKey::Appendix(9), CatalogKey::StructureCe2] {
        let report = verify_key(key).unwrap();
        let text = serde_json::to_string(&report).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report, "{key}");
    }
    let randomized = randomized_check(&build_s4(), 100, 124);
    let text = serde_json::to_string(&randomized).unwrap();
    assert_eq!(serde_json::from_str::<VerificationReport>(&text).unwrap(), randomized);
    assert!(matches!(
        randomized.mode,
        Mode::Randomized {
            seed: 124,
            samples: 100
        }
    ));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let d = build(CatalogKey::Combination {
        e: branchpair::catalog::BasicCase::Iv,
        f: branchpair::catalog::BasicCase::Ii,
        dashed: true,
    })
    .unwrap();
    let a = exhaustive_report("combo", &d, FULL).unwrap().without_timing();
    let b = exhaustive_report("combo", &d, FULL).unwrap().without_timing();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn report_fields_for_s4() {
    let report = exhaustive_report("s4", &build_s4(), FULL).unwrap();
    assert_eq!(report.n, 4);
    assert_eq!(report.k_arc_strong, 2);
    assert_eq!(report.witness_cut.as_ref().map(Vec::len), Some(2));
    assert!(report.all_good);
    assert_eq!(report.certificates.as_ref().unwrap().len(), 16);
    assert_eq!(report.decomposition_status, DecompositionStatus::NoneProved);
    assert!(report.decomposition.is_none());
    // any single vertex of a semicomplete digraph can serve as V1
    assert!(report.split_partition.is_some());

    let value = serde_json::to_value(&report).unwrap();
    assert_eq!(value["mode"], "exhaustive");
    assert_eq!(value["decomposition_status"], "none-proved");
    let cert = &value["certificates"]["v1,v3"];
    assert_eq!(cert["out"].as_array().unwrap().len(), 3);
    assert_eq!(cert["in"].as_array().unwrap().len(), 3);
}

#[test]
fn failures_are_recorded_not_hidden() {
    // D1 is not 2-arc-strong, and the catalog says so without failing
    let d1 = verify_key(CatalogKey::D1).unwrap();
    assert_eq!(d1.k_arc_strong, 1);
    assert!(!d1.all_good);
    assert!(d1.passed());

    let ce2 = verify_key(CatalogKey::StructureCe2).unwrap();
    assert!(ce2.split_partition.is_none());
    assert!(ce2.passed());
}
