use pvs_core::pvs::cubic_form;
use pvs_core::rat::{int, rat, to_f64};
use pvs_core::sample::Sampler;
use pvs_core::search::*;
use pvs_core::wpoint::w_literal;

#[test]
fn exact_values_by_construction() {
    for (r, t) in [(2, -1), (16, -2), (-2, 1), (250, -5)] {
        let c = construct_exact_value(&int(r), &int(1)).unwrap();
        assert_eq!(c.t, Some(int(t)));
        assert_eq!(c.value, Some(int(r)));
        assert!(c.holds);
        assert_eq!(c.a, [0, 0, 1, 0, 0]);
    }
    let c = construct_exact_value(&rat(2, 27), &int(1)).unwrap();
    assert_eq!(c.t, Some(rat(-1, 3)));
    assert!(c.holds);
    let c = construct_exact_value(&int(16), &int(-1)).unwrap();
    assert!(c.holds);
    assert!(construct_exact_value(&int(0), &int(1)).is_err());
}

#[test]
fn float_branch_for_irrational_t() {
    let c = construct_exact_value(&int(3), &int(1)).unwrap();
    assert!(c.t.is_none());
    assert!(c.holds, "{c:?}");
    let c = construct_exact_value(&int(5), &rat(11, 10)).unwrap();
    assert!(c.holds, "{c:?}");
}

#[test]
fn cubic_form_has_degree_36_in_x() {
    let x = w_literal().scale(&int(2));
    let lambda36 = num_traits::pow(int(2), 36);
    assert_eq!(cubic_form(&x), cubic_form(&w_literal()).scale(&lambda36));
}

#[test]
fn odd_symmetry_in_floats() {
    let g = RealTransform::golden();
    let mut s = Sampler::new(3);
    for _ in 0..200 {
        let a = s.int_vector5(25);
        assert_eq!(g.f_value(&a.map(|x| -x)), -g.f_value(&a));
    }
}

#[test]
fn float_values_match_exact_core() {
    let mut s = Sampler::new(11);
    let g = s.invertible(5);
    let t = RealTransform::from_exact(&g).unwrap();
    for _ in 0..100 {
        let a = s.int_vector5(20);
        let exact = to_f64(&exact_f_value(&g, &a).unwrap());
        let float = t.f_value(&a);
        let scale = exact.abs().max(1.0);
        assert!((exact - float).abs() <= 1e-12 * scale, "{a:?}: {exact} vs {float}");
    }
}

#[test]
fn identity_gives_integers() {
    let g = RealTransform::identity();
    let mut values = std::collections::BTreeSet::new();
    let mut count = 0;
    for_each_representative(&g, 1, |_, v| {
        assert!(is_integral(v));
        values.insert(v as i64);
        values.insert(-v as i64);
        count += 1;
    });
    assert_eq!(count, 121);
    for v in [0, 2, -2, 25, -25] {
        assert!(values.contains(&v), "{v}");
    }
    let report = search(&g, &SearchParams::new(3, 100.0, 1.0), 2).unwrap();
    for b in &report.histogram {
        if let Some(w) = &b.witness {
            assert!(is_integral(w.value));
            assert_eq!(w.value, b.lo);
        }
    }
}

#[test]
fn report_is_consistent() {
    let g = RealTransform::golden();
    let params = SearchParams::new(4, 10.0, 0.5);
    let r = search(&g, &params, 3).unwrap();
    assert_eq!(r.histogram.len(), 40);
    assert!((0.0..=1.0).contains(&r.coverage));
    let mut primitive = 0;
    let mut in_range = 0;
    let n = 4i64;
    let range: Vec<i64> = (-n..=n).collect();
    for &a0 in &range {
        for &a1 in &range {
            for &a2 in &range {
                for &a3 in &range {
                    for &a4 in &range {
                        let a = [a0, a1, a2, a3, a4];
                        if a == [0; 5] || !is_primitive(&a).unwrap() {
                            continue;
                        }
                        primitive += 1;
                        let v = g.f_value(&a);
                        if (-10.0..10.0).contains(&v) {
                            in_range += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(r.point_count, primitive);
    let total: u64 = r.histogram.iter().map(|b| b.count).sum();
    assert!(total.abs_diff(in_range) <= 2, "{total} vs {in_range}");
    for b in &r.histogram {
        assert_eq!(b.count > 0, b.witness.is_some());
        if let Some(w) = &b.witness {
            assert!(w.value >= b.lo && w.value < b.hi);
            assert!((g.f_value(&w.a) - w.value).abs() < 1e-9);
        }
    }
    let json = serde_json::to_string(&r).unwrap();
    let back: SearchReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
}

#[test]
fn worker_count_does_not_matter() {
    let g = RealTransform::golden();
    let params = SearchParams::new(6, 10.0, 0.5);
    let one = serde_json::to_string(&search(&g, &params, 1).unwrap()).unwrap();
    for k in [2, 4, 7] {
        assert_eq!(serde_json::to_string(&search(&g, &params, k).unwrap()).unwrap(), one);
    }
}

#[test]
fn larger_box_covers_more() {
    let g = RealTransform::golden();
    let small = search(&g, &SearchParams::new(3, 10.0, 0.5), 2).unwrap();
    let large = search(&g, &SearchParams::new(6, 10.0, 0.5), 2).unwrap();
    assert!(large.coverage >= small.coverage);
    assert!(large.min_abs_nonzero.unwrap() <= small.min_abs_nonzero.unwrap());
}

#[test]
fn bad_parameters() {
    let g = RealTransform::identity();
    assert!(search(&g, &SearchParams::new(0, 1.0, 1.0), 1).is_err());
    assert!(search(&g, &SearchParams::new(1, -1.0, 1.0), 1).is_err());
    assert!(search(&g, &SearchParams::new(1, 1.0, 0.0), 1).is_err());
    assert!(RealTransform::preset("nope").is_err());
}

#[test]
fn probe_examples() {
    let f: Vec<f64> = cubic_form(&w_literal()).dense_coeffs().iter().map(to_f64).collect();
    assert_eq!(rationality_probe(&f, DEFAULT_DENOMINATOR_BOUND).unwrap().verdict, Verdict::RationalLooking);
    let scaled: Vec<f64> = f.iter().map(|x| x * std::f64::consts::PI).collect();
    assert_eq!(
        rationality_probe(&scaled, DEFAULT_DENOMINATOR_BOUND).unwrap().verdict,
        Verdict::RationalLooking
    );
    let golden = RealTransform::golden();
    let s = rationality_probe(&golden.transported_s(), DEFAULT_DENOMINATOR_BOUND).unwrap();
    assert_eq!(s.verdict, Verdict::IrrationalLooking);
    let q = rationality_probe(&golden.transported_q(), DEFAULT_DENOMINATOR_BOUND).unwrap();
    assert_eq!(q.verdict, Verdict::IrrationalLooking);
    let id = RealTransform::identity();
    assert_eq!(
        rationality_probe(&id.transported_s(), DEFAULT_DENOMINATOR_BOUND).unwrap().verdict,
        Verdict::RationalLooking
    );
    assert!(rationality_probe(&[0.0, 0.0], 10).is_err());
}

#[test]
fn transform_files() {
    let exact = r#"{"g1": [["1","1/2","0","0","0"],["0","1","0","0","0"],["0","0","1","0","0"],["0","0","0","1","0"],["0","0","0","0","1"]]}"#;
    let t = RealTransform::from_json(exact, "shear.json").unwrap();
    assert!(t.exact().is_some());
    let float = r#"{"g1": [[1,0.5,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]}"#;
    let t = RealTransform::from_json(float, "shear.json").unwrap();
    assert!(t.exact().is_none());
    assert!(RealTransform::from_json(r#"{"g1": [[1]]}"#, "x").is_err());
}
