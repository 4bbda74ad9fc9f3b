use num_traits::Zero;
use proptest::prelude::*;

use pvs_core::action::{act_v, h_image, lie_act_v, pgl2_embed};
use pvs_core::lie::{decompose_pair, reassemble};
use pvs_core::pvs::{
    composite_matrix, cubic_form, delta, pfaffians, phi1, phi1_double_sum, quadratic_form, span_dim, span_point,
    ternary_form,
};
use pvs_core::rat::{self, int, Rat};
use pvs_core::sample::Sampler;
use pvs_core::search::RealTransform;
use pvs_core::tensor::{multi_indices, wedge4_pair, Alt2Tensor, Alt4Dual, SymForm, Variance};
use pvs_core::wpoint::w_literal;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| rat::rat(p, q))
}

fn rat_vec(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(small_rat(), n)
}

fn form(n: usize, d: u32, variance: Variance) -> impl Strategy<Value = SymForm> {
    rat_vec(multi_indices(n, d).len()).prop_map(move |c| SymForm::from_dense(n, d, variance, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn product_is_commutative_and_associative(
        a in form(3, 1, Variance::Covariant),
        b in form(3, 2, Variance::Covariant),
        c in form(3, 1, Variance::Covariant),
    ) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b).degree(), 3);
    }

    #[test]
    fn evaluation_is_pairing_with_a_power(f in form(3, 3, Variance::Contravariant), a in rat_vec(3)) {
        let lin = SymForm::linear(Variance::Covariant, &a);
        let paired = SymForm::pairing(&SymForm::power_embed(&lin, 3).unwrap(), &f).unwrap();
        prop_assert_eq!(f.eval(&lin).unwrap(), paired.clone());
        prop_assert_eq!(f.eval_at(&a), paired);
    }

    #[test]
    fn wedge_is_alternating_and_bilinear(a in rat_vec(5), b in rat_vec(5), c in rat_vec(5), s in small_rat()) {
        prop_assert!(Alt2Tensor::wedge(&a, &a).is_zero());
        prop_assert_eq!(Alt2Tensor::wedge(&a, &b), Alt2Tensor::wedge(&b, &a).scale(&int(-1)));
        let sa_c: Vec<Rat> = a.iter().zip(&c).map(|(x, y)| &s * x + y).collect();
        prop_assert_eq!(
            Alt2Tensor::wedge(&sa_c, &b),
            Alt2Tensor::wedge(&a, &b).scale(&s).add(&Alt2Tensor::wedge(&c, &b))
        );
    }

    #[test]
    fn pfaffian_routes_agree(seed in any::<u64>()) {
        let x = Sampler::new(seed).v_element();
        prop_assert_eq!(phi1(&x), phi1_double_sum(&x));
    }

    #[test]
    fn pfaffian_polarization(seed in any::<u64>(), gamma in rat_vec(3)) {
        let x = Sampler::new(seed).v_element();
        for p in pfaffians(&x) {
            let m = p.quadratic_matrix().unwrap();
            let mg = m.mul_vec(&gamma);
            let quad = gamma.iter().zip(&mg).fold(Rat::zero(), |acc, (g, h)| acc + g * h);
            prop_assert_eq!(p.eval_at(&gamma), quad);
        }
    }

    #[test]
    fn odd_symmetry_of_float_values(a in proptest::array::uniform5(-30i64..=30)) {
        let g = RealTransform::golden();
        prop_assert_eq!(g.f_value(&a.map(|x| -x)), -g.f_value(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn homogeneity_degrees(seed in any::<u64>()) {
        let x = Sampler::new(seed).v_element();
        for t in [int(2), int(-3)] {
            let tx = x.scale(&t);
            let p = |d: usize| num_traits::pow(t.clone(), d);
            prop_assert_eq!(phi1(&tx), pvs_core::pvs::DualQuadratic { parts: phi1(&x).parts.map(|q| q.scale(&p(2))) });
            prop_assert_eq!(ternary_form(&tx).n_star().to_vec(), ternary_form(&x).n_star().iter().map(|c| c * p(10)).collect::<Vec<_>>());
            prop_assert_eq!(composite_matrix(&tx), composite_matrix(&x).scale(&p(12)));
            prop_assert_eq!(quadratic_form(&tx), quadratic_form(&x).scale(&p(24)));
            prop_assert_eq!(cubic_form(&tx), cubic_form(&x).scale(&p(36)));
        }
    }

    #[test]
    fn orbit_points_are_semistable(seed in any::<u64>()) {
        let (_, x) = Sampler::new(seed).orbit_point();
        prop_assert!(!delta(&x).is_zero());
        prop_assert!(!ternary_form(&x).discriminant().is_zero());
        prop_assert!(!quadratic_form(&x).quadratic_matrix().unwrap().det().is_zero());
        prop_assert_eq!(span_dim(&x), 3);
        prop_assert!(span_point(&x).unwrap().satisfies_relations());
    }

    #[test]
    fn delta_ratio_depends_only_on_g(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (_, x) = s.orbit_point();
        let (_, y) = s.orbit_point();
        let g = s.group_element();
        prop_assert_eq!(delta(&act_v(&g, &x)) / delta(&x), delta(&act_v(&g, &y)) / delta(&y));
    }

    #[test]
    fn pgl2_embedding_is_multiplicative(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (h, k) = (s.pgl2(), s.pgl2());
        let lhs = pgl2_embed(&(&h * &k)).unwrap();
        let rhs = pgl2_embed(&h).unwrap().mul(&pgl2_embed(&k).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_identity(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.lie_pair(), s.lie_pair(), s.lie_pair());
        let sum = a.bracket(&b.bracket(&c))
            .add(&b.bracket(&c.bracket(&a)))
            .add(&c.bracket(&a.bracket(&b)));
        prop_assert!(sum.is_zero());
        prop_assert!(a.bracket(&a).is_zero());
    }

    #[test]
    fn decomposition_reassembles(seed in any::<u64>()) {
        let p = Sampler::new(seed).lie_pair();
        prop_assert_eq!(reassemble(&decompose_pair(&p).unwrap()), p);
    }
}

#[test]
fn dual_basis_sign_convention() {
    for i in 0..5 {
        let v: Vec<Rat> = (0..5).map(|k| int((k == i) as i64)).collect();
        assert_eq!(wedge4_pair(&v, &Alt4Dual::basis(i).unwrap()), int(1));
    }
}

#[test]
fn sl2_image_kills_w() {
    for h in h_image() {
        assert!(lie_act_v(&h, &w_literal()).is_zero());
    }
}
