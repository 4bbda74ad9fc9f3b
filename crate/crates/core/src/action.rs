//! Actions of `G = GL(V₁) × GL(V₂)` and of its Lie algebra.
//!
//! `g₁` acts on `V₁` by `m_i ↦ Σ_k (g₁)_ki m_k` (column `i` is the image of
//! `m_i`), and likewise `g₂` on the `l`-basis of `V₂`. Dual spaces carry the
//! contragredient action `(gf)(v) = f(g⁻¹v)`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pvs::{DualMatrix3, DualQuadratic, PlueckerPoint, QuadForm3, VElement};
use crate::rat::{self, Rat, RatText};
use crate::tensor::{Alt2Tensor, SymForm, Variance, PAIRS};

/// `g = (g₁, g₂)` with `det g₁ ≠ 0` and `det g₂ ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    g1: Matrix,
    g2: Matrix,
}

impl GroupElement {
    pub fn new(g1: Matrix, g2: Matrix) -> Result<Self> {
        if g1.rows() != 5 || g1.cols() != 5 || g2.rows() != 3 || g2.cols() != 3 {
            return Err(Error::DimensionMismatch(
                "a group element needs a 5x5 and a 3x3 matrix".into(),
            ));
        }
        if g1.det().is_zero() || g2.det().is_zero() {
            return Err(Error::Singular);
        }
        Ok(GroupElement { g1, g2 })
    }

    pub fn identity() -> Self {
        GroupElement {
            g1: Matrix::identity(5),
            g2: Matrix::identity(3),
        }
    }

    pub fn g1(&self) -> &Matrix {
        &self.g1
    }

    pub fn g2(&self) -> &Matrix {
        &self.g2
    }

    pub fn det1(&self) -> Rat {
        self.g1.det()
    }

    pub fn det2(&self) -> Rat {
        self.g2.det()
    }

    pub fn mul(&self, other: &Self) -> Self {
        GroupElement {
            g1: &self.g1 * &other.g1,
            g2: &self.g2 * &other.g2,
        }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            g1: self.g1.inverse().expect("invertible by construction"),
            g2: self.g2.inverse().expect("invertible by construction"),
        }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(g1 = {:?}, g2 = {:?})", self.g1, self.g2)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupWire {
    g1: Vec<Vec<RatText>>,
    g2: Vec<Vec<RatText>>,
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GroupWire {
            g1: self.g1.to_text(),
            g2: self.g2.to_text(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = GroupWire::deserialize(d)?;
        let g1 = Matrix::from_text(w.g1).map_err(serde::de::Error::custom)?;
        let g2 = Matrix::from_text(w.g2).map_err(serde::de::Error::custom)?;
        GroupElement::new(g1, g2).map_err(serde::de::Error::custom)
    }
}

/// An element `(X, Y)` of `gl(V₁) ⊕ gl(V₂)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LiePair {
    pub x: Matrix,
    pub y: Matrix,
}

impl LiePair {
    pub fn new(x: Matrix, y: Matrix) -> Result<Self> {
        if x.rows() != 5 || x.cols() != 5 || y.rows() != 3 || y.cols() != 3 {
            return Err(Error::DimensionMismatch(
                "a Lie pair needs a 5x5 and a 3x3 matrix".into(),
            ));
        }
        Ok(LiePair { x, y })
    }

    /// Checks `tr X = tr Y = 0`.
    pub fn new_traceless(x: Matrix, y: Matrix) -> Result<Self> {
        let p = Self::new(x, y)?;
        if !p.is_traceless() {
            return Err(Error::NotTraceless);
        }
        Ok(p)
    }

    pub fn zero() -> Self {
        LiePair {
            x: Matrix::zeros(5, 5),
            y: Matrix::zeros(3, 3),
        }
    }

    pub fn first(x: Matrix) -> Self {
        LiePair {
            x,
            y: Matrix::zeros(3, 3),
        }
    }

    pub fn second(y: Matrix) -> Self {
        LiePair {
            x: Matrix::zeros(5, 5),
            y,
        }
    }

    pub fn is_traceless(&self) -> bool {
        self.x.trace().is_zero() && self.y.trace().is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn bracket(&self, other: &Self) -> Self {
        LiePair {
            x: self.x.commutator(&other.x),
            y: self.y.commutator(&other.y),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        LiePair {
            x: &self.x + &other.x,
            y: &self.y + &other.y,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        LiePair {
            x: &self.x - &other.x,
            y: &self.y - &other.y,
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LiePair {
            x: self.x.scale(c),
            y: self.y.scale(c),
        }
    }

    /// The 34 entries of `X` then `Y`, row-major.
    pub fn to_vec(&self) -> Vec<Rat> {
        self.x.entries().iter().chain(self.y.entries()).cloned().collect()
    }

    pub fn from_vec(v: &[Rat]) -> Result<Self> {
        if v.len() != 34 {
            return Err(Error::DimensionMismatch(format!(
                "gl(5)+gl(3) has 34 coordinates, got {}",
                v.len()
            )));
        }
        Ok(LiePair {
            x: Matrix::from_fn(5, 5, |r, c| v[5 * r + c].clone()),
            y: Matrix::from_fn(3, 3, |r, c| v[25 + 3 * r + c].clone()),
        })
    }
}

impl fmt::Debug for LiePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LiePair(X = {:?}, Y = {:?})", self.x, self.y)
    }
}

#[derive(Serialize, Deserialize)]
struct LieWire {
    x: Vec<Vec<RatText>>,
    y: Vec<Vec<RatText>>,
}

impl Serialize for LiePair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        LieWire {
            x: self.x.to_text(),
            y: self.y.to_text(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LiePair {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = LieWire::deserialize(d)?;
        let x = Matrix::from_text(w.x).map_err(serde::de::Error::custom)?;
        let y = Matrix::from_text(w.y).map_err(serde::de::Error::custom)?;
        LiePair::new(x, y).map_err(serde::de::Error::custom)
    }
}

/// The matrix of `∧²g₁` on `∧²V₁` in the [`PAIRS`] basis.
pub fn alt2_matrix(g1: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(10, 10);
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        let t = Alt2Tensor::wedge(&g1.column(i), &g1.column(j));
        for (q, v) in t.coeffs().iter().enumerate() {
            m[(q, p)] = v.clone();
        }
    }
    m
}

/// The derivation induced by `X ∈ gl(V₁)` on `∧²V₁`.
pub fn alt2_derivation(x: &Matrix) -> Matrix {
    let mut m = Matrix::zeros(10, 10);
    let unit = |i: usize| -> Vec<Rat> { (0..5).map(|k| rat::int((k == i) as i64)).collect() };
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        let t = Alt2Tensor::wedge(&x.column(i), &unit(j)).add(&Alt2Tensor::wedge(&unit(i), &x.column(j)));
        for (q, v) in t.coeffs().iter().enumerate() {
            m[(q, p)] = v.clone();
        }
    }
    m
}

/// The 10×3 coordinate matrix of `x` (rows: pairs, columns: `l_k`).
fn v_matrix(x: &VElement) -> Matrix {
    Matrix::from_fn(10, 3, |p, k| x.entries()[p][k].clone())
}

fn from_v_matrix(m: &Matrix) -> VElement {
    VElement::from_entries(std::array::from_fn(|p| std::array::from_fn(|k| m[(p, k)].clone())))
}

pub fn act_v(g: &GroupElement, x: &VElement) -> VElement {
    let e = &(&alt2_matrix(&g.g1) * &v_matrix(x)) * &g.g2.transpose();
    from_v_matrix(&e)
}

/// The derivation action of `(X, Y)` on `V`.
pub fn lie_act_v(h: &LiePair, x: &VElement) -> VElement {
    let e = v_matrix(x);
    let d = &(&alt2_derivation(&h.x) * &e) + &(&e * &h.y.transpose());
    from_v_matrix(&d)
}

/// `(g·f)(a) = f(g⁻¹a)` for a contravariant form on the space `g` acts on.
pub fn act_contravariant(g: &Matrix, f: &SymForm) -> Result<SymForm> {
    if f.variance() != Variance::Contravariant {
        return Err(Error::VarianceMismatch("expected a contravariant form".into()));
    }
    if g.rows() != f.dim() || g.cols() != f.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix acting on forms over a {}-space",
            g.rows(),
            g.cols(),
            f.dim()
        )));
    }
    Ok(f.substitute(&g.inverse()?))
}

/// The induced action on a covariant form (an element of `Sym^d` of the space).
pub fn act_covariant(g: &Matrix, f: &SymForm) -> Result<SymForm> {
    if f.variance() != Variance::Covariant {
        return Err(Error::VarianceMismatch("expected a covariant form".into()));
    }
    if g.rows() != f.dim() || g.cols() != f.dim() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix acting on forms over a {}-space",
            g.rows(),
            g.cols(),
            f.dim()
        )));
    }
    Ok(f.substitute(&g.transpose()))
}

/// Coordinates of `g₁ · c` for `c ∈ V₁*` in the dual basis.
fn dual_matrix(g1: &Matrix) -> Matrix {
    g1.inverse().expect("invertible by construction").transpose()
}

/// `g · Σ m_i* ⊗ q_i = Σ g₁m_i* ⊗ g₂q_i`.
pub fn act_dual_quadratic(g: &GroupElement, f: &DualQuadratic) -> DualQuadratic {
    let d = dual_matrix(&g.g1);
    let moved: Vec<SymForm> = f
        .parts
        .iter()
        .map(|q| act_covariant(&g.g2, q).expect("quadratic in l"))
        .collect();
    DualQuadratic {
        parts: std::array::from_fn(|r| {
            let mut acc = SymForm::zero(3, 2, Variance::Covariant);
            for (i, q) in moved.iter().enumerate() {
                if !d[(r, i)].is_zero() {
                    acc = acc.add(&q.scale(&d[(r, i)]));
                }
            }
            acc
        }),
    }
}

/// Action on `V₁* ⊗ V₂ ⊗ V₂`: `A ↦ g₂ A g₂ᵀ`, entries moved by `g₁`.
pub fn act_bilinear_matrix(g: &GroupElement, a: &DualMatrix3) -> DualMatrix3 {
    a.mul_left(&g.g2)
        .mul_right(&g.g2.transpose())
        .map_entries(&dual_matrix(&g.g1))
}

/// Action on `Hom(V₂, V₁* ⊗ V₂)`: `A ↦ g₂ A g₂⁻¹`, entries moved by `g₁`.
pub fn act_endomorphism(g: &GroupElement, a: &DualMatrix3) -> DualMatrix3 {
    a.mul_left(&g.g2)
        .mul_right(&g.g2.inverse().expect("invertible by construction"))
        .map_entries(&dual_matrix(&g.g1))
}

/// Action of `g₂` on a quadratic form on `V₂`: `b ↦ g₂⁻ᵀ b g₂⁻¹`.
pub fn act_ternary(g2: &Matrix, q: &QuadForm3) -> QuadForm3 {
    let inv = g2.inverse().expect("invertible by construction");
    QuadForm3::from_matrix(&(&inv.transpose() * q.matrix()) * &inv).expect("stays symmetric")
}

/// The plane `g₁ · P` in `Gr(3, ∧²V₁)`.
pub fn act_grassmann(g1: &Matrix, p: &PlueckerPoint) -> Result<PlueckerPoint> {
    let m = alt2_matrix(g1);
    let b = p.basis();
    let moved: Vec<Vec<Rat>> = b.iter().map(|v| m.mul_vec(v)).collect();
    PlueckerPoint::from_rows([&moved[0], &moved[1], &moved[2]])
}

/// Matrix of `Sym^d(h)` on the monomial basis `e_1^{d-i} e_2^i`, `i = 0..d`.
pub fn sym_power_matrix(h: &Matrix, d: u32) -> Matrix {
    let he1 = SymForm::linear(Variance::Covariant, &h.column(0));
    let he2 = SymForm::linear(Variance::Covariant, &h.column(1));
    let n = d as usize + 1;
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let mut img = SymForm::constant(2, Variance::Covariant, Rat::one());
        for _ in 0..(d as usize - i) {
            img = img.mul(&he1);
        }
        for _ in 0..i {
            img = img.mul(&he2);
        }
        for j in 0..n {
            m[(j, i)] = img.coeff(&[d - j as u32, j as u32]);
        }
    }
    m
}

/// The twisted embedding `h ↦ ((det h)⁻² Sym⁴h, (det h)⁻¹ Sym²h)`.
pub fn pgl2_embed(h: &Matrix) -> Result<GroupElement> {
    if h.rows() != 2 || h.cols() != 2 {
        return Err(Error::DimensionMismatch("pgl2_embed needs a 2x2 matrix".into()));
    }
    let d = h.det();
    if d.is_zero() {
        return Err(Error::Singular);
    }
    let inv = d.recip();
    GroupElement::new(
        sym_power_matrix(h, 4).scale(&(&inv * &inv)),
        sym_power_matrix(h, 2).scale(&inv),
    )
}

/// The six matrices `A_0, A_1, A_2` (on `V₁`) and `A'_0, A'_1, A'_2` (on `V₂`).
pub struct LieMatrices {
    pub a: [Matrix; 3],
    pub a_prime: [Matrix; 3],
}

pub fn lie_matrices() -> LieMatrices {
    let a0 = Matrix::from_fn(5, 5, |r, c| rat::int(if c == r + 1 { c as i64 } else { 0 }));
    let a1 = Matrix::from_fn(5, 5, |r, c| rat::int(if r == c { 4 - 2 * r as i64 } else { 0 }));
    let a2 = Matrix::from_fn(5, 5, |r, c| rat::int(if r == c + 1 { 4 - c as i64 } else { 0 }));
    LieMatrices {
        a: [a0, a1, a2],
        a_prime: [
            Matrix::from_ints([[0, 1, 0], [0, 0, 2], [0, 0, 0]]),
            Matrix::from_ints([[2, 0, 0], [0, 0, 0], [0, 0, -2]]),
            Matrix::from_ints([[0, 0, 0], [2, 0, 0], [0, 1, 0]]),
        ],
    }
}

/// The images `P_0, P_1, P_2` of `H_0, H_1, H_2`: `(A_0, A'_0)`,
/// `(A_1, A'_1)` and `-(A_2, A'_2)`.
pub fn h_image() -> [LiePair; 3] {
    let m = lie_matrices();
    let [a0, a1, a2] = m.a;
    let [b0, b1, b2] = m.a_prime;
    [
        LiePair { x: a0, y: b0 },
        LiePair { x: a1, y: b1 },
        LiePair { x: -&a2, y: -&b2 },
    ]
}

/// The 2×2 matrices `H_0, H_1, H_2`.
pub fn h_basis() -> [Matrix; 3] {
    [
        Matrix::from_ints([[0, 1], [0, 0]]),
        Matrix::from_ints([[1, 0], [0, -1]]),
        Matrix::from_ints([[0, 0], [-1, 0]]),
    ]
}

/// `H_i · a` on quartic-form coefficients `a = (a_0, ..., a_4)`.
pub fn lie_act_quartic(index: usize, a: &[Rat; 5]) -> Result<[Rat; 5]> {
    let k = |n: i64| rat::int(n);
    match index {
        0 => Ok([
            Rat::zero(),
            -k(4) * &a[0],
            -k(3) * &a[1],
            -k(2) * &a[2],
            -a[3].clone(),
        ]),
        1 => Ok([
            -k(4) * &a[0],
            -k(2) * &a[1],
            Rat::zero(),
            k(2) * &a[3],
            k(4) * &a[4],
        ]),
        2 => Ok([
            a[1].clone(),
            k(2) * &a[2],
            k(3) * &a[3],
            k(4) * &a[4],
            Rat::zero(),
        ]),
        _ => Err(Error::IndexOutOfRange { index, bound: 3 }),
    }
}

/// The 5×5 matrix of `a ↦ H_i a`.
pub fn quartic_action_matrix(index: usize) -> Result<Matrix> {
    let mut m = Matrix::zeros(5, 5);
    for c in 0..5 {
        let e: [Rat; 5] = std::array::from_fn(|k| rat::int((k == c) as i64));
        let img = lie_act_quartic(index, &e)?;
        for (r, v) in img.into_iter().enumerate() {
            m[(r, c)] = v;
        }
    }
    Ok(m)
}
