use pvs_core::verify::*;

#[test]
fn full_run_passes() {
    let opts = VerifyOptions { workers: 2, samples: 4, ..Default::default() };
    let report = run(Golden::builtin(), &opts).unwrap();
    for c in report.failures() {
        let m = c.mismatch.as_ref().unwrap();
        eprintln!("{}: {} expected {} got {}", c.name, m.what, m.expected, m.actual);
    }
    assert!(report.passed);
    assert!(report.checks.len() > 40);
    for c in &report.checks {
        eprintln!("{:>9.2} ms {}", c.millis, c.name);
    }
}

#[test]
fn filter_selects_a_subset() {
    let opts = VerifyOptions { filter: Some("pfaffian*".into()), samples: 2, ..Default::default() };
    let report = run(Golden::builtin(), &opts).unwrap();
    let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
    assert_eq!(names, ["pfaffians.golden", "pfaffians.double_sum"]);
    assert!(report.passed);
    assert!(report.warnings.is_empty());
}

#[test]
fn unknown_filter_warns() {
    let opts = VerifyOptions { filter: Some("no-such-check".into()), ..Default::default() };
    let report = run(Golden::builtin(), &opts).unwrap();
    assert!(report.checks.is_empty());
    assert_eq!(report.warnings.len(), 1);
}

#[test]
fn perturbed_golden_fails_with_diff() {
    let mut g = Golden::builtin();
    g.cubic_form = g.cubic_form.replace("72*", "71*");
    g.delta = pvs_core::rat::RatText(pvs_core::rat::int(4));
    let opts = VerifyOptions { filter: Some("*.golden".into()), ..Default::default() };
    let report = run(g, &opts).unwrap();
    assert!(!report.passed);
    let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, ["cubic.golden", "delta.golden"]);
    let m = report.failures().next().unwrap().mismatch.as_ref().unwrap();
    assert!(m.expected.contains("71*a0*a2*a4"));
    assert!(m.actual.contains("72*a0*a2*a4"));
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["passed"], false);
}

#[test]
fn report_order_is_stable_across_workers() {
    let names = |k| {
        let opts = VerifyOptions { workers: k, samples: 1, filter: Some("brackets.*".into()), ..Default::default() };
        run(Golden::builtin(), &opts).unwrap().checks.into_iter().map(|c| c.name).collect::<Vec<_>>()
    };
    assert_eq!(names(1), names(3));
}

#[test]
fn fixture_round_trips() {
    let g = Golden::builtin();
    let text = serde_json::to_string(&g).unwrap();
    let back = Golden::from_json(&text).unwrap();
    assert_eq!(check_names(&back), check_names(&g));
    assert!(Golden::from_json("{}").is_err());
}
