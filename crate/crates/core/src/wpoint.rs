//! The invariant bilinear form `Q` on binary quartics and the
//! `PGL(2)`-fixed point `w ∈ V` built from it.

use num_traits::Zero;

use crate::action::{h_basis, lie_act_quartic, quartic_action_matrix};
use crate::error::Result;
use crate::linalg::{Matrix, Span};
use crate::pvs::VElement;
use crate::rat::{self, Rat};
use crate::tensor::{Alt2Tensor, SymForm, Variance};

/// Matrix of `Q(a, b) = a_0b_4 - ¼a_1b_3 + ⅙a_2b_2 - ¼a_3b_1 + a_4b_0`.
pub fn q_matrix() -> Matrix {
    let mut m = Matrix::zeros(5, 5);
    m[(0, 4)] = rat::int(1);
    m[(4, 0)] = rat::int(1);
    m[(1, 3)] = rat::rat(-1, 4);
    m[(3, 1)] = rat::rat(-1, 4);
    m[(2, 2)] = rat::rat(1, 6);
    m
}

pub fn q_bilinear(a: &[Rat; 5], b: &[Rat; 5]) -> Rat {
    let m = q_matrix();
    let mut total = Rat::zero();
    for i in 0..5 {
        for j in 0..5 {
            if !m[(i, j)].is_zero() {
                total += &a[i] * &m[(i, j)] * &b[j];
            }
        }
    }
    total
}

/// `Q(a) = a_0a_4 - ¼a_1a_3 + (1/12)a_2² = ½Q(a, a)` as a contravariant
/// quadratic form on `V₁`.
pub fn q_form() -> SymForm {
    SymForm::from_quadratic_matrix(Variance::Contravariant, &q_matrix()).scale(&rat::rat(1, 2))
}

/// `Q(H_i a, b) + Q(a, H_i b)`, which vanishes by invariance of `Q`.
pub fn q_invariance_check(index: usize, a: &[Rat; 5], b: &[Rat; 5]) -> Result<Rat> {
    let ha = lie_act_quartic(index, a)?;
    let hb = lie_act_quartic(index, b)?;
    Ok(q_bilinear(&ha, b) + q_bilinear(a, &hb))
}

/// Binomial coefficient `C(4, k)`: the pairing gives `(m_k, a)_4 = a_k / C(4, k)`.
fn binom4(k: usize) -> Rat {
    rat::int([1, 4, 6, 4, 1][k])
}

/// The element of `∧²V₁` representing the alternating form
/// `(a, b) ↦ M(a, b)` on `V₁*` for a matrix `M` with `M(a,b) = aᵀMb`.
pub fn alternating_form_to_alt2(m: &Matrix) -> Alt2Tensor {
    let mut terms = Vec::new();
    for k in 0..5 {
        for l in k + 1..5 {
            let c = &m[(k, l)] * binom4(k) * binom4(l);
            terms.push((k, l, c));
        }
    }
    Alt2Tensor::from_terms(&terms)
}

/// `f_{H_i}(a, b) = Q(H_i a, b)` as an element of `∧²V₁`.
pub fn f_h(index: usize) -> Result<Alt2Tensor> {
    let h = quartic_action_matrix(index)?;
    let m = &h.transpose() * &q_matrix();
    Ok(alternating_form_to_alt2(&m))
}

/// `f_H` for an arbitrary `H ∈ sl(2)`, linear in `H = αH_0 + βH_1 + γH_2`.
pub fn f_h_general(h: &Matrix) -> Alt2Tensor {
    let [c0, c1, c2] = h_coords(h);
    f_h(0)
        .unwrap()
        .scale(&c0)
        .add(&f_h(1).unwrap().scale(&c1))
        .add(&f_h(2).unwrap().scale(&c2))
}

/// Coordinates of a traceless 2×2 matrix in the basis `H_0, H_1, H_2`.
pub fn h_coords(h: &Matrix) -> [Rat; 3] {
    [h[(0, 1)].clone(), h[(0, 0)].clone(), -h[(1, 0)].clone()]
}

/// The module action of `H'` on an alternating form given as a matrix:
/// `(H'f)(a, b) = -f(H'a, b) - f(a, H'b)`.
pub fn act_on_alternating(index: usize, m: &Matrix) -> Result<Matrix> {
    let h = quartic_action_matrix(index)?;
    Ok(-&(&(&h.transpose() * m) + &(m * &h)))
}

/// Alternating form of `f_{H_i}` as a matrix on coefficient vectors.
pub fn f_h_matrix(index: usize) -> Result<Matrix> {
    let h = quartic_action_matrix(index)?;
    Ok(&h.transpose() * &q_matrix())
}

/// The dual-basis vectors `2l_2, 2l_1, 2l_0` attached to `H_0, H_1, H_2`.
pub fn dual_of_h(index: usize) -> [Rat; 3] {
    let mut v: [Rat; 3] = std::array::from_fn(|_| Rat::zero());
    v[2 - index] = rat::int(2);
    v
}

/// `Σ_i f_{H_i} ⊗ (dual of H_i)`, which equals `8w`.
pub fn eight_w() -> VElement {
    let mut x = VElement::zero();
    for i in 0..3 {
        let f = f_h(i).expect("index in range");
        let d = dual_of_h(i);
        let mut comps = [Alt2Tensor::zero(), Alt2Tensor::zero(), Alt2Tensor::zero()];
        for (k, c) in d.iter().enumerate() {
            comps[k] = f.scale(c);
        }
        x = x.add(&VElement::from_components([&comps[0], &comps[1], &comps[2]]));
    }
    x
}

/// `w` assembled from `f_H` and the dual basis.
pub fn build_w() -> VElement {
    eight_w().scale(&rat::rat(1, 8))
}

/// `w = (m_0∧m_3 - 3m_1∧m_2)⊗l_2 + (-m_0∧m_4 + 2m_1∧m_3)⊗l_1 + (m_1∧m_4 - 3m_2∧m_3)⊗l_0`.
pub fn w_literal() -> VElement {
    let i = rat::int;
    VElement::from_terms(&[
        (0, 3, 2, i(1)),
        (1, 2, 2, i(-3)),
        (0, 4, 1, i(-1)),
        (1, 3, 1, i(2)),
        (1, 4, 0, i(1)),
        (2, 3, 0, i(-3)),
    ])
}

/// The three spanning vectors of `S`: `m_1∧m_4 - 3m_2∧m_3`,
/// `m_0∧m_4 - 2m_1∧m_3`, `m_0∧m_3 - 3m_1∧m_2`.
pub fn s_generators() -> [Alt2Tensor; 3] {
    let i = rat::int;
    [
        Alt2Tensor::from_terms(&[(1, 4, i(1)), (2, 3, i(-3))]),
        Alt2Tensor::from_terms(&[(0, 4, i(1)), (1, 3, i(-2))]),
        Alt2Tensor::from_terms(&[(0, 3, i(1)), (1, 2, i(-3))]),
    ]
}

pub fn s_span() -> Span {
    Span::from_vectors(10, s_generators().iter().map(|t| t.coeffs().to_vec()))
}

/// The quartic action on `V₁*` transported from `H ∈ sl(2)` as a matrix.
pub fn quartic_matrix_of(h: &Matrix) -> Matrix {
    let [c0, c1, c2] = h_coords(h);
    let ms: Vec<Matrix> = (0..3).map(|i| quartic_action_matrix(i).unwrap()).collect();
    &(&ms[0].scale(&c0) + &ms[1].scale(&c1)) + &ms[2].scale(&c2)
}

/// Independent derivation of the quartic action: the first-order term of
/// `a(v) ↦ a((1 - εH)v)` on `a = Σ a_k v_1^{4-k} v_2^k`.
pub fn quartic_action_by_substitution(h: &Matrix, a: &[Rat; 5]) -> [Rat; 5] {
    let f = SymForm::from_terms(
        2,
        4,
        Variance::Contravariant,
        (0..5).map(|k| (vec![4 - k as u32, k as u32], a[k].clone())),
    )
    .expect("binary quartic");
    let d = f.derivation(&-h);
    std::array::from_fn(|k| d.coeff(&[4 - k as u32, k as u32]))
}

/// Checks `f_{[H', H]} = H'·f_H` for all basis pairs.
pub fn homomorphism_holds() -> bool {
    let hs = h_basis();
    for (j, hp) in hs.iter().enumerate() {
        for (i, h) in hs.iter().enumerate() {
            let br = hp.commutator(h);
            let lhs = f_h_general(&br);
            let moved = act_on_alternating(j, &f_h_matrix(i).unwrap()).unwrap();
            if lhs != alternating_form_to_alt2(&moved) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ints, rat};

    #[test]
    fn q_examples() {
        let e = |i: usize| -> [Rat; 5] { std::array::from_fn(|k| int((k == i) as i64)) };
        assert_eq!(q_bilinear(&e(0), &e(4)), int(1));
        assert_eq!(q_bilinear(&e(2), &e(2)), rat(1, 6));
        assert_eq!(q_bilinear(&e(1), &e(3)), rat(-1, 4));
        assert!(!q_matrix().det().is_zero());
        let h1a = lie_act_quartic(1, &e(0)).unwrap();
        assert_eq!(q_bilinear(&h1a, &e(4)), int(-4));
        let h0a = lie_act_quartic(0, &e(0)).unwrap();
        assert_eq!(q_bilinear(&h0a, &e(3)), int(1));
    }

    #[test]
    fn f_h_values() {
        let i = int;
        assert_eq!(f_h(0).unwrap(), Alt2Tensor::from_terms(&[(0, 3, i(4)), (1, 2, i(-12))]));
        assert_eq!(f_h(1).unwrap(), Alt2Tensor::from_terms(&[(0, 4, i(-4)), (1, 3, i(8))]));
        assert_eq!(f_h(2).unwrap(), Alt2Tensor::from_terms(&[(1, 4, i(4)), (2, 3, i(-12))]));
    }

    #[test]
    fn w_assembles() {
        assert_eq!(build_w(), w_literal());
        assert_eq!(eight_w(), w_literal().scale(&int(8)));
    }

    #[test]
    fn quartic_action_matches_substitution() {
        let a = ints([3, -1, 4, 1, -5]);
        for (i, h) in h_basis().iter().enumerate() {
            assert_eq!(quartic_action_by_substitution(h, &a), lie_act_quartic(i, &a).unwrap());
        }
    }

    #[test]
    fn f_h_is_homomorphism() {
        assert!(homomorphism_holds());
    }

    #[test]
    fn pipeline_at_w() {
        use crate::pvs::*;
        let w = w_literal();
        let pf: Vec<String> = pfaffians(&w).iter().map(|f| f.to_text("l")).collect();
        assert_eq!(pf, ["-3*l0^2", "-3*l0*l1", "-l0*l2 - 2*l1^2", "-3*l1*l2", "-3*l2^2"]);
        assert_eq!(phi1_double_sum(&w), phi1(&w));
        let q = ternary_form(&w);
        assert_eq!(q.n_star(), ints([0, 1, 0, 0, 0, -2]));
        assert_eq!(delta(&w), int(-4));
        let f = cubic_form(&w);
        assert_eq!(
            f.to_text("a"),
            "72*a0*a2*a4 - 27*a0*a3^2 - 27*a1^2*a4 + 9*a1*a2*a3 - 2*a2^3"
        );
        assert_eq!(quadratic_form(&w), q_form().scale(&int(72)));
        let p = span_point(&w).unwrap();
        assert!(p.satisfies_relations());
        assert!(p.span().same_as(&s_span()));
    }
}
