//! Exit gate: one PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Zero;

use pvs_core::action::{act_v, h_image};
use pvs_core::equivariance::all_laws;
use pvs_core::lie::{self, Representation};
use pvs_core::pvs::{
    composite_matrix, cubic_form, delta, pfaffians, phi1_bar, quadratic_form, span_dim, ternary_form,
};
use pvs_core::rat::{int, rat};
use pvs_core::sample::{Sampler, DEFAULT_SEED};
use pvs_core::search::{self, construct_exact_value, RealTransform, SearchParams};
use pvs_core::wpoint::{s_span, w_literal};
use pvs_core::{LiePair, Matrix, Rat};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn same<T: PartialEq + std::fmt::Debug>(what: &str, expected: T, actual: T) -> Check {
    ensure(expected == actual, || format!("{what}: expected {expected:?}, got {actual:?}"))
}

/// `[[i][j] -> coefficients of m0*..m4*]` from a compact list of `(i, j, k, value)`.
fn dual_matrix(terms: &[(usize, usize, usize, Rat)]) -> [[[Rat; 5]; 3]; 3] {
    let mut m: [[[Rat; 5]; 3]; 3] = Default::default();
    for (i, j, k, v) in terms {
        m[*i][*j][*k] = v.clone();
    }
    m
}

fn golden_values() -> Check {
    let w = w_literal();
    let pf: Vec<String> = pfaffians(&w).iter().map(|f| f.to_text("l")).collect();
    same("Pfaffians", vec!["-3*l0^2", "-3*l0*l1", "-l0*l2 - 2*l1^2", "-3*l1*l2", "-3*l2^2"], pf.iter().map(String::as_str).collect())?;

    let h = rat(-3, 2);
    let expected = dual_matrix(&[
        (0, 0, 0, int(-3)),
        (0, 1, 1, h.clone()),
        (0, 2, 2, rat(-1, 2)),
        (1, 0, 1, h.clone()),
        (1, 1, 2, int(-2)),
        (1, 2, 3, h.clone()),
        (2, 0, 2, rat(-1, 2)),
        (2, 1, 3, h.clone()),
        (2, 2, 4, int(-3)),
    ]);
    let pb = phi1_bar(&w);
    for i in 0..3 {
        for j in 0..3 {
            same(&format!("phi1_bar(w)[{i}][{j}]"), &expected[i][j], pb.entry(i, j))?;
        }
    }

    let q = ternary_form(&w);
    same("Phi1(w) = n1* - 2 n5*", vec![int(0), int(1), int(0), int(0), int(0), int(-2)], q.n_star().to_vec())?;
    same(
        "matrix of Phi1(w)",
        &Matrix::from_ints([[0, 0, -2], [0, 1, 0], [-2, 0, 0]]),
        q.matrix(),
    )?;

    let expected = dual_matrix(&[
        (0, 0, 2, int(1)),
        (0, 1, 1, h.clone()),
        (0, 2, 0, int(6)),
        (1, 0, 3, int(3)),
        (1, 1, 2, int(-2)),
        (1, 2, 1, int(3)),
        (2, 0, 4, int(6)),
        (2, 1, 3, h.clone()),
        (2, 2, 2, int(1)),
    ]);
    let p3 = composite_matrix(&w);
    for i in 0..3 {
        for j in 0..3 {
            same(&format!("phi3(w)[{i}][{j}]"), &expected[i][j], p3.entry(i, j))?;
        }
    }

    let phi2 = quadratic_form(&w);
    let coeffs = [([1, 0, 0, 0, 1], int(72)), ([0, 1, 0, 1, 0], int(-18)), ([0, 0, 2, 0, 0], int(6))];
    same("number of Phi2(w) terms", 3, phi2.terms().count())?;
    for (idx, c) in coeffs {
        same(&format!("Phi2(w) coefficient {idx:?}"), c, phi2.coeff(&idx))?;
    }

    let f = cubic_form(&w);
    let coeffs = [
        ([1, 0, 1, 0, 1], int(72)),
        ([0, 1, 1, 1, 0], int(9)),
        ([0, 0, 3, 0, 0], int(-2)),
        ([1, 0, 0, 2, 0], int(-27)),
        ([0, 2, 0, 0, 1], int(-27)),
    ];
    same("number of F_w terms", 5, f.terms().count())?;
    for (idx, c) in coeffs {
        same(&format!("F_w coefficient {idx:?}"), c, f.coeff(&idx))?;
    }
    Ok(())
}

fn equivariance() -> Check {
    let mut s = Sampler::new(DEFAULT_SEED);
    for k in 0..20 {
        let (_, x) = s.orbit_point();
        let g = s.group_element();
        all_laws(&g, &x).map_err(|m| format!("sample {k}: {}: expected {} got {}", m.what, m.expected, m.actual))?;
    }
    Ok(())
}

fn fixedness() -> Check {
    let w = w_literal();
    let mut s = Sampler::new(DEFAULT_SEED);
    for _ in 0..20 {
        let g = s.pgl2_element();
        ensure(act_v(&g, &w) == w, || "a PGL(2) element moves w".into())?;
    }
    let stab = lie::stabilizer_algebra(&w);
    same("dim stabilizer", 4, stab.len())?;
    let span = lie::span_of(&stab);
    for p in h_image() {
        ensure(span.contains(&p.to_vec()), || "sl(2) image not in the stabilizer".into())?;
    }
    let torus = LiePair { x: Matrix::identity(5), y: Matrix::scalar(3, &int(-2)) };
    ensure(span.contains(&torus.to_vec()), || "(I5, -2I3) not in the stabilizer".into())?;
    let fixed = lie::fixed_subspace(&h_image(), Representation::V);
    same("dim of invariants in V", 1, fixed.dim())?;
    ensure(fixed.contains(&w.coords()), || "w does not span the invariants".into())
}

fn lie_lattice() -> Check {
    for id in lie::builtin_bracket_table().identities {
        id.verify().map_err(|m| format!("{}: expected {} got {}", m.what, m.expected, m.actual))?;
    }
    for (a, b, claimed) in lie::span_claims() {
        lie::verify_span_claim(a, b, &claimed).map_err(|m| format!("{}: expected {} got {}", m.what, m.expected, m.actual))?;
    }
    let algs = lie::enumerate_intermediate();
    same("dimensions", vec![3, 6, 11, 13, 18, 27, 32], algs.iter().map(|a| a.dim()).collect())?;
    for a in &algs {
        same(&format!("closure of {}", a.name), a.dim(), lie::closure(&a.basis).len())?;
        ensure(lie::is_closed(&a.basis), || format!("{} is not bracket-closed", a.name))?;
    }
    Ok(())
}

fn alt2_weights() -> Check {
    let mut union = lie::irreducible_weights(6);
    union.extend(lie::irreducible_weights(2));
    union.sort_by(|a, b| b.cmp(a));
    same("A1 weights", union, lie::alt2_weights())?;
    let (highest, span) = lie::weight_two_submodule();
    same("highest-weight vectors of weight 2", 1, highest)?;
    same("dim of the 3-dimensional submodule", 3, span.dim())?;
    ensure(span.same_as(&s_span()), || "the 3-dimensional submodule is not S".into())
}

fn exact_values() -> Check {
    for r in [2, 16, -2, 250] {
        let c = construct_exact_value(&int(r), &int(1)).map_err(|e| e.to_string())?;
        ensure(c.t.is_some(), || format!("r = {r}: t is not rational"))?;
        same(&format!("F at a for r = {r}"), Some(int(r)), c.value)?;
    }
    Ok(())
}

fn density() -> Check {
    let g = RealTransform::golden();
    let budget = Duration::from_secs(60);
    let mut reports = Vec::new();
    for n in [10, 25] {
        let params = SearchParams::new(n, 10.0, 0.5);
        let t = Instant::now();
        let one = search::search(&g, &params, 1).map_err(|e| e.to_string())?;
        let elapsed = t.elapsed();
        ensure(elapsed < budget, || format!("N = {n} took {elapsed:?}"))?;
        let four = search::search(&g, &params, 4).map_err(|e| e.to_string())?;
        let a = serde_json::to_string(&one).unwrap();
        let b = serde_json::to_string(&four).unwrap();
        ensure(a == b, || format!("N = {n}: reports differ between 1 and 4 workers"))?;
        reports.push(one);
    }
    let (small, large) = (&reports[0], &reports[1]);
    ensure(large.coverage >= small.coverage, || {
        format!("coverage {} at N = 25 below {} at N = 10", large.coverage, small.coverage)
    })?;
    let (m10, m25) = (small.min_abs_nonzero, large.min_abs_nonzero);
    ensure(matches!((m10, m25), (Some(a), Some(b)) if b <= a), || {
        format!("min nonzero |F|: {m25:?} at N = 25 vs {m10:?} at N = 10")
    })?;
    let id = RealTransform::identity();
    let mut bad = None;
    search::for_each_representative(&id, 10, |a, v| {
        if bad.is_none() && !search::is_integral(v) {
            bad = Some((a, v));
        }
    });
    ensure(bad.is_none(), || format!("identity gives a non-integer value {bad:?}"))
}

fn semistability() -> Check {
    same("Delta(w)", int(-4), delta(&w_literal()))?;
    let mut s = Sampler::new(DEFAULT_SEED);
    for k in 0..50 {
        let (_, x) = s.orbit_point();
        same(&format!("sample {k}: dim S_x"), 3, span_dim(&x))?;
        let m = quadratic_form(&x).quadratic_matrix().map_err(|e| e.to_string())?;
        ensure(!m.det().is_zero(), || format!("sample {k}: Phi2 degenerate"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, u64); 8] = [
        ("golden values at w", golden_values, 1),
        ("equivariance on 20 orbit points", equivariance, 10),
        ("fixedness and stabilizer of w", fixedness, 5),
        ("Lie lattice brackets, spans and subalgebras", lie_lattice, 10),
        ("weights of the alternating square", alt2_weights, 1),
        ("exact values by construction", exact_values, 1),
        ("density probe", density, 180),
        ("semistability on 50 orbit points", semistability, 10),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let mut outcome = run();
        let elapsed = t.elapsed();
        if outcome.is_ok() && elapsed > Duration::from_secs(limit) {
            outcome = Err(format!("took {elapsed:.2?}, limit {limit} s"));
        }
        match outcome {
            Ok(()) => println!("PASS [{}] {name} ({elapsed:.2?})", k + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL [{}] {name} ({elapsed:.2?}): {e}", k + 1);
            }
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
