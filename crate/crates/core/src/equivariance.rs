//! Transformation laws of the equivariant maps under `g = (g₁, g₂)`.
//!
//! With `d₁ = det g₁`, `d₂ = det g₂`:
//!
//! | map | factor |
//! |-----|--------|
//! | `φ₁`, `φ̄₁` | `d₁` |
//! | `Φ₁` | `d₁⁴ d₂⁴` |
//! | `φ₃` | `d₁⁵ d₂⁴` |
//! | `Φ₂` | `d₁¹⁰ d₂⁸` |
//! | `F_x` | `d₁¹⁵ d₂¹²` |
//! | `Δ` | `d₁¹² d₂¹⁰` |
//!
//! The exponents of `d₂` are forced by the kernel `(tI₅, t⁻²I₃)` of the
//! action, which fixes every `x`.

use num_traits::pow;

use crate::action::{
    act_bilinear_matrix, act_contravariant, act_dual_quadratic, act_endomorphism, act_grassmann,
    act_ternary, act_v, GroupElement,
};
use crate::check::{expect_eq, Outcome};
use crate::pvs::{
    composite_matrix, cubic_form, delta, phi1, phi1_bar, quadratic_form, span_point, ternary_form,
    VElement,
};
use crate::rat::Rat;

/// `d₁^a d₂^b`.
pub fn character(g: &GroupElement, a: usize, b: usize) -> Rat {
    pow(g.det1(), a) * pow(g.det2(), b)
}

pub fn phi1_law(g: &GroupElement, x: &VElement) -> Outcome {
    let gx = act_v(g, x);
    let d = g.det1();
    let lhs = phi1(&gx);
    let rhs = act_dual_quadratic(g, &phi1(x));
    let rhs = crate::pvs::DualQuadratic {
        parts: rhs.parts.map(|q| q.scale(&d)),
    };
    expect_eq("phi1(gx) = det g1 · g phi1(x)", &rhs, &lhs)?;
    let lhs = phi1_bar(&gx);
    let rhs = act_bilinear_matrix(g, &phi1_bar(x)).scale(&d);
    expect_eq("phi1_bar(gx) = det g1 · g phi1_bar(x)", &rhs, &lhs)
}

pub fn ternary_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = ternary_form(&act_v(g, x));
    let rhs = act_ternary(g.g2(), &ternary_form(x));
    let rhs = crate::pvs::QuadForm3::from_matrix(rhs.matrix().scale(&character(g, 4, 4)))
        .expect("symmetric");
    expect_eq("Phi1(gx) = d1^4 d2^4 · g2 Phi1(x)", &rhs, &lhs)
}

pub fn composite_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = composite_matrix(&act_v(g, x));
    let rhs = act_endomorphism(g, &composite_matrix(x)).scale(&character(g, 5, 4));
    expect_eq("phi3(gx) = d1^5 d2^4 · g phi3(x)", &rhs, &lhs)
}

pub fn quadratic_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = quadratic_form(&act_v(g, x));
    let rhs = act_contravariant(g.g1(), &quadratic_form(x))
        .expect("quadratic on V1")
        .scale(&character(g, 10, 8));
    expect_eq("Phi2(gx) = d1^10 d2^8 · g1 Phi2(x)", &rhs, &lhs)
}

pub fn cubic_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = cubic_form(&act_v(g, x));
    let rhs = act_contravariant(g.g1(), &cubic_form(x))
        .expect("cubic on V1")
        .scale(&character(g, 15, 12));
    expect_eq("F_gx(a) = d1^15 d2^12 · F_x(g1^-1 a)", &rhs, &lhs)
}

pub fn span_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = span_point(&act_v(g, x)).map_err(|e| crate::check::Mismatch {
        what: "Phi3(gx) defined".into(),
        expected: "a 3-plane".into(),
        actual: e.to_string(),
    })?;
    let p = span_point(x).map_err(|e| crate::check::Mismatch {
        what: "Phi3(x) defined".into(),
        expected: "a 3-plane".into(),
        actual: e.to_string(),
    })?;
    let rhs = act_grassmann(g.g1(), &p).expect("g1 invertible");
    expect_eq("Phi3(gx) = g1 Phi3(x)", &rhs, &lhs)
}

pub fn delta_law(g: &GroupElement, x: &VElement) -> Outcome {
    let lhs = delta(&act_v(g, x));
    let rhs = character(g, 12, 10) * delta(x);
    expect_eq("Delta(gx) = d1^12 d2^10 · Delta(x)", &rhs, &lhs)
}

/// All laws at once.
pub fn all_laws(g: &GroupElement, x: &VElement) -> Outcome {
    phi1_law(g, x)?;
    ternary_law(g, x)?;
    composite_law(g, x)?;
    quadratic_law(g, x)?;
    cubic_law(g, x)?;
    span_law(g, x)?;
    delta_law(g, x)
}
