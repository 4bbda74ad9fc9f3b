use pvs_core::action::h_image;
use pvs_core::lie::*;
use pvs_core::linalg::Span;
use pvs_core::rat::int;
use pvs_core::wpoint::{s_span, w_literal};
use pvs_core::LiePair;

#[test]
fn bracket_table_holds() {
    let table = builtin_bracket_table();
    assert_eq!(table.identities.len(), 19);
    for id in &table.identities {
        if let Err(m) = id.verify() {
            panic!("{}: expected {} got {}", m.what, m.expected, m.actual);
        }
    }
}

#[test]
fn span_claims_hold() {
    for (a, b, claimed) in span_claims() {
        if let Err(m) = verify_span_claim(a, b, &claimed) {
            panic!("{}: expected {} got {}", m.what, m.expected, m.actual);
        }
    }
}

#[test]
fn intermediate_algebras() {
    let algs = enumerate_intermediate();
    let dims: Vec<usize> = algs.iter().map(|a| a.dim()).collect();
    assert_eq!(dims, [3, 6, 11, 13, 18, 27, 32]);
    let h = Span::from_vectors(34, h_image().iter().map(|p| p.to_vec()));
    for a in &algs {
        assert!(is_closed(&a.basis), "{}", a.name);
        assert!(span_of(&a.basis).contains_span(&h), "{}", a.name);
        assert_eq!(closure(&a.basis).len(), a.dim(), "{}", a.name);
        assert_eq!(identify(&a.basis), Some(a.name));
    }
}

#[test]
fn closure_of_h_plus_one_vector() {
    let mut gens = h_image().to_vec();
    gens.push(family_basis(Family::U2)[0].clone());
    let c = classify(&gens);
    assert!(c.contains_h);
    assert_eq!(c.closure_dim, 27);
    assert_eq!(c.matches, Some("sl5 x sl2"));
    let mut gens = h_image().to_vec();
    gens.push(family_basis(Family::U3)[0].clone());
    assert_eq!(classify(&gens).matches, Some("so5 x sl2"));
    let mut gens = h_image().to_vec();
    gens.push(family_basis(Family::U2)[0].add(&family_basis(Family::V2)[0]));
    assert_eq!(classify(&gens).matches, Some("sl5 x sl3"));
}

#[test]
fn stabilizer_of_w() {
    let stab = stabilizer_algebra(&w_literal());
    assert_eq!(stab.len(), 4);
    let s = span_of(&stab);
    for p in h_image() {
        assert!(s.contains(&p.to_vec()));
    }
    let scalar = LiePair {
        x: pvs_core::Matrix::scalar(5, &int(1)),
        y: pvs_core::Matrix::scalar(3, &int(-2)),
    };
    assert!(s.contains(&scalar.to_vec()));
}

#[test]
fn invariants_at_w() {
    if let Err(m) = fixed_point_checks(&w_literal()) {
        panic!("{}: expected {} got {}", m.what, m.expected, m.actual);
    }
    let so = orthogonal_algebra_of(&pvs_core::pvs::quadratic_form(&w_literal()));
    assert!(so.same_as(&family_span(&[Family::U1, Family::U3])));
}

#[test]
fn alt2_structure() {
    let w: Vec<_> = alt2_weights();
    let mut expected = irreducible_weights(6);
    expected.extend(irreducible_weights(2));
    expected.sort_by(|a, b| b.cmp(a));
    assert_eq!(w, expected);
    let (highest, span) = weight_two_submodule();
    assert_eq!(highest, 1);
    assert_eq!(span.dim(), 3);
    assert!(span.same_as(&s_span()));
}

#[test]
fn perturbed_identity_is_rejected() {
    let mut table = builtin_bracket_table();
    for id in &mut table.identities {
        match id.result.values_mut().next() {
            Some(exprs) => {
                let i = exprs.iter().position(|e| e != "0").unwrap_or(0);
                exprs[i] = format!("{} + 1", exprs[i]);
            }
            None => {
                id.result.insert("U1".into(), vec!["1".into(), "0".into(), "0".into()]);
            }
        }
        assert!(id.verify().is_err(), "{}", id.name);
    }
}

#[test]
fn closure_grows_within_the_list() {
    let mut sampler = pvs_core::sample::Sampler::new(pvs_core::sample::DEFAULT_SEED);
    let algs = enumerate_intermediate();
    for a in &algs[..algs.len() - 1] {
        let v = sampler.lie_pair();
        let s = span_of(&a.basis);
        assert!(!s.contains(&v.to_vec()));
        let mut gens = a.basis.clone();
        gens.push(v);
        let c = classify(&gens);
        assert!(c.closure_dim > a.dim(), "{}", a.name);
        assert!(c.matches.is_some(), "{} grew to an unlisted algebra", a.name);
    }
}

#[test]
fn stabilizer_dimensions() {
    assert_eq!(stabilizer_algebra(&pvs_core::VElement::zero()).len(), 34);
    let mut sampler = pvs_core::sample::Sampler::new(7);
    for _ in 0..3 {
        let (_, x) = sampler.orbit_point();
        assert_eq!(stabilizer_algebra(&x).len(), 4);
    }
}

#[test]
fn full_algebra_has_no_invariants_in_v() {
    let all = enumerate_intermediate().pop().unwrap();
    assert_eq!(fixed_subspace(&all.basis, Representation::V).dim(), 0);
    let on_v = fixed_subspace(&h_image(), Representation::V);
    assert_eq!(on_v.dim(), 1);
    assert!(on_v.contains(&w_literal().coords()));
}
