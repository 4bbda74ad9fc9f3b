//! Points of `V = ∧²V₁ ⊗ V₂` and the equivariant maps out of `V`.
//!
//! `V₁` has basis `m_0..m_4`, `V₂` has basis `l_0, l_1, l_2`, and
//! `x = Σ_{i<j} m_i ∧ m_j ⊗ x_ij` with `x_ij ∈ V₂`. Quadratic forms on `V₂`
//! (the Pfaffians) are covariant [`SymForm`]s in `l`; forms on `V₁` (such as
//! the cubic `F_x`) are contravariant [`SymForm`]s whose variables `a_0..a_4`
//! are the coordinates of `a = Σ a_i m_i`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rat::{self, Rat, RatText};
use crate::tensor::{Alt2Tensor, Alt4Dual, SymForm, Variance, PAIRS};

/// A point `x ∈ V`, stored as `x_ij ∈ V₂` (three `l`-coordinates) for each
/// pair `i < j` in [`PAIRS`] order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VElement {
    entries: [[Rat; 3]; 10],
}

impl VElement {
    pub fn zero() -> Self {
        VElement {
            entries: std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero())),
        }
    }

    pub fn from_entries(entries: [[Rat; 3]; 10]) -> Self {
        VElement { entries }
    }

    /// `Σ c · m_i ∧ m_j ⊗ l_k` from `(i, j, k, c)` terms in any order.
    pub fn from_terms(terms: &[(usize, usize, usize, Rat)]) -> Self {
        let mut x = Self::zero();
        for (i, j, k, c) in terms {
            let t = Alt2Tensor::from_terms(&[(*i, *j, c.clone())]);
            for (p, v) in t.coeffs().iter().enumerate() {
                x.entries[p][*k] += v;
            }
        }
        x
    }

    /// `x = x_0 ⊗ l_0 + x_1 ⊗ l_1 + x_2 ⊗ l_2`.
    pub fn from_components(c: [&Alt2Tensor; 3]) -> Self {
        VElement {
            entries: std::array::from_fn(|p| std::array::from_fn(|k| c[k].coeffs()[p].clone())),
        }
    }

    /// The 30 coordinates, pair-major.
    pub fn coords(&self) -> Vec<Rat> {
        self.entries.iter().flatten().cloned().collect()
    }

    pub fn from_coords(v: &[Rat]) -> Result<Self> {
        if v.len() != 30 {
            return Err(Error::DimensionMismatch(format!(
                "V has 30 coordinates, got {}",
                v.len()
            )));
        }
        Ok(VElement {
            entries: std::array::from_fn(|p| std::array::from_fn(|k| v[3 * p + k].clone())),
        })
    }

    pub fn entries(&self) -> &[[Rat; 3]; 10] {
        &self.entries
    }

    /// `x_ij` as `l`-coordinates, alternating in `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> [Rat; 3] {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.entries[crate::tensor::pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => {
                self.entries[crate::tensor::pair_index(j, i)].clone().map(|c| -c)
            }
            std::cmp::Ordering::Equal => std::array::from_fn(|_| Rat::zero()),
        }
    }

    /// `x_ij` as a linear form in `l`.
    pub fn entry_form(&self, i: usize, j: usize) -> SymForm {
        SymForm::linear(Variance::Covariant, &self.get(i, j))
    }

    /// The component `x_k ∈ ∧²V₁` with `x = Σ x_k ⊗ l_k`.
    pub fn component(&self, k: usize) -> Alt2Tensor {
        Alt2Tensor::from_coeffs(std::array::from_fn(|p| self.entries[p][k].clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        VElement {
            entries: std::array::from_fn(|p| {
                std::array::from_fn(|k| &self.entries[p][k] + &other.entries[p][k])
            }),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        VElement {
            entries: self.entries.clone().map(|e| e.map(|v| v * c)),
        }
    }

    /// Ten lines `i j : c0 c1 c2`.
    pub fn to_text(&self) -> String {
        PAIRS
            .iter()
            .zip(&self.entries)
            .map(|(&(i, j), e)| {
                format!(
                    "{i} {j} : {} {} {}",
                    rat::to_pq(&e[0]),
                    rat::to_pq(&e[1]),
                    rat::to_pq(&e[2])
                )
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Parses [`to_text`](Self::to_text) output. Pairs may appear in any
    /// order; missing pairs are zero and `j i` lines are read as `-x_ij`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut x = Self::zero();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let bad = || Error::Parse(format!("bad V line {line:?}"));
            let (ij, cs) = line.split_once(':').ok_or_else(bad)?;
            let ij: Vec<usize> = ij
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            let cs: Vec<Rat> = cs.split_whitespace().map(rat::parse).collect::<Result<_>>()?;
            if ij.len() != 2 || cs.len() != 3 || ij[0] == ij[1] || ij[0] > 4 || ij[1] > 4 {
                return Err(bad());
            }
            for (k, c) in cs.into_iter().enumerate() {
                x = x.add(&VElement::from_terms(&[(ij[0], ij[1], k, c)]));
            }
        }
        Ok(x)
    }

    /// The alternating 5×5 matrix with entries in `V₂`, one row per line.
    pub fn to_matrix_text(&self) -> String {
        (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| {
                        let s = self.entry_form(i, j).to_text("l");
                        format!("{s:>14}")
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// `Σ c · m_i∧m_j ⊗ l_k` notation grouped by `l_k`.
    pub fn to_tensor_text(&self) -> String {
        let parts: Vec<String> = (0..3)
            .rev()
            .filter_map(|k| {
                let c = self.component(k);
                (!c.is_zero()).then(|| format!("({}) ⊗ l{k}", c.to_text()))
            })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VElement({})", self.to_tensor_text())
    }
}

#[derive(Serialize, Deserialize)]
struct VElementWire {
    pairs: Vec<(usize, usize, [RatText; 3])>,
}

impl Serialize for VElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        VElementWire {
            pairs: PAIRS
                .iter()
                .zip(&self.entries)
                .map(|(&(i, j), e)| (i, j, e.clone().map(RatText)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for VElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = VElementWire::deserialize(d)?;
        let mut x = VElement::zero();
        for (i, j, c) in w.pairs {
            if i == j || i > 4 || j > 4 {
                return Err(serde::de::Error::custom(format!("bad pair ({i}, {j})")));
            }
            for (k, v) in c.into_iter().enumerate() {
                x = x.add(&VElement::from_terms(&[(i, j, k, v.0)]));
            }
        }
        Ok(x)
    }
}

/// Exponent vectors of `l_0², l_1², l_2², l_0l_1, l_1l_2, l_0l_2`, the basis
/// `n_0..n_5` of `Sym²V₂`.
pub const N_BASIS: [[u32; 3]; 6] = [
    [2, 0, 0],
    [0, 2, 0],
    [0, 0, 2],
    [1, 1, 0],
    [0, 1, 1],
    [1, 0, 1],
];

/// Position of `(i, j)` in the `n`-basis for `i <= j`.
fn n_index(i: usize, j: usize) -> usize {
    let mut e = [0u32; 3];
    e[i] += 1;
    e[j] += 1;
    N_BASIS.iter().position(|b| *b == e).unwrap()
}

/// The five quadratic forms `Pfaff_0(x), ..., Pfaff_4(x)` in `l`.
pub fn pfaffians(x: &VElement) -> [SymForm; 5] {
    let p = |i, j, k, l| x.entry_form(i, j).mul(&x.entry_form(k, l));
    let pf = |a: [usize; 4]| {
        let [i, j, k, l] = a;
        p(i, j, k, l).sub(&p(i, k, j, l)).add(&p(i, l, j, k))
    };
    [
        pf([1, 2, 3, 4]),
        pf([0, 2, 3, 4]).scale(&-Rat::one()),
        pf([0, 1, 3, 4]),
        pf([0, 1, 2, 4]).scale(&-Rat::one()),
        pf([0, 1, 2, 3]),
    ]
}

/// An element of `V₁* ⊗ Sym²V₂`, written `Σ m_i* ⊗ q_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualQuadratic {
    pub parts: [SymForm; 5],
}

/// `φ₁(x) = Σ m_i* ⊗ Pfaff_i(x)`.
pub fn phi1(x: &VElement) -> DualQuadratic {
    DualQuadratic {
        parts: pfaffians(x),
    }
}

/// `φ₁(x)` from the double sum `½ Σ_{i<j} Σ_{k<l} m_i∧m_j∧m_k∧m_l ⊗ x_ij x_kl`,
/// converting each 4-wedge to the dual basis.
pub fn phi1_double_sum(x: &VElement) -> DualQuadratic {
    let zero = SymForm::zero(3, 2, Variance::Covariant);
    let mut parts: [SymForm; 5] = std::array::from_fn(|_| zero.clone());
    let half = rat::rat(1, 2);
    for &(i, j) in &PAIRS {
        for &(k, l) in &PAIRS {
            let d = Alt4Dual::from_wedges(&[(half.clone(), [i, j, k, l])]);
            if d.coords().iter().all(Zero::is_zero) {
                continue;
            }
            let q = x.entry_form(i, j).mul(&x.entry_form(k, l));
            for (r, c) in d.coords().iter().enumerate() {
                if !c.is_zero() {
                    parts[r] = parts[r].add(&q.scale(c));
                }
            }
        }
    }
    DualQuadratic { parts }
}

/// A 3×3 matrix whose entries are linear forms on `V₁`, each stored as its
/// five coordinates in `m_0*, ..., m_4*`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualMatrix3 {
    entries: [[[Rat; 5]; 3]; 3],
}

impl DualMatrix3 {
    pub fn zero() -> Self {
        DualMatrix3 {
            entries: std::array::from_fn(|_| {
                std::array::from_fn(|_| std::array::from_fn(|_| Rat::zero()))
            }),
        }
    }

    pub fn from_entries(entries: [[[Rat; 5]; 3]; 3]) -> Self {
        DualMatrix3 { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Rat; 5] {
        &self.entries[i][j]
    }

    pub fn entry_form(&self, i: usize, j: usize) -> SymForm {
        SymForm::linear(Variance::Contravariant, &self.entries[i][j])
    }

    pub fn is_symmetric(&self) -> bool {
        (0..3).all(|i| (0..3).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        DualMatrix3 {
            entries: self.entries.clone().map(|r| r.map(|e| e.map(|v| v * c))),
        }
    }

    /// Product with a rational matrix on the right.
    pub fn mul_right(&self, b: &Matrix) -> Self {
        assert!(b.rows() == 3 && b.cols() == 3, "need a 3x3 matrix");
        DualMatrix3 {
            entries: std::array::from_fn(|j| {
                std::array::from_fn(|s| {
                    std::array::from_fn(|k| {
                        (0..3).fold(Rat::zero(), |acc, i| acc + &self.entries[j][i][k] * &b[(i, s)])
                    })
                })
            }),
        }
    }

    /// Product with a rational matrix on the left.
    pub fn mul_left(&self, b: &Matrix) -> Self {
        assert!(b.rows() == 3 && b.cols() == 3, "need a 3x3 matrix");
        DualMatrix3 {
            entries: std::array::from_fn(|j| {
                std::array::from_fn(|s| {
                    std::array::from_fn(|k| {
                        (0..3).fold(Rat::zero(), |acc, i| acc + &b[(j, i)] * &self.entries[i][s][k])
                    })
                })
            }),
        }
    }

    /// Applies a 5×5 matrix to every entry's coordinate vector.
    pub fn map_entries(&self, m: &Matrix) -> Self {
        DualMatrix3 {
            entries: self
                .entries
                .clone()
                .map(|r| r.map(|e| m.mul_vec(&e).try_into().unwrap())),
        }
    }

    /// `tr(M²)` as a quadratic form on `V₁`.
    pub fn trace_square(&self) -> SymForm {
        let mut out = SymForm::zero(5, 2, Variance::Contravariant);
        for i in 0..3 {
            for j in 0..3 {
                out = out.add(&self.entry_form(i, j).mul(&self.entry_form(j, i)));
            }
        }
        out
    }

    /// `det M` as a cubic form on `V₁`.
    pub fn determinant(&self) -> SymForm {
        let e = |i, j| self.entry_form(i, j);
        let minor = |r1, r2, c1, c2| e(r1, c1).mul(&e(r2, c2)).sub(&e(r1, c2).mul(&e(r2, c1)));
        e(0, 0)
            .mul(&minor(1, 2, 1, 2))
            .sub(&e(0, 1).mul(&minor(1, 2, 0, 2)))
            .add(&e(0, 2).mul(&minor(1, 2, 0, 1)))
    }

    pub fn to_text(&self) -> String {
        (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| {
                        let s = dual_names(&self.entry_form(i, j).to_text("m"));
                        format!("{s:>12}")
                    })
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Rewrites `m3` as `m3*`.
fn dual_names(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 4);
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c.is_ascii_digit() && !chars.peek().is_some_and(|n| n.is_ascii_digit() || *n == '/') {
            if out.trim_end_matches(|d: char| d.is_ascii_digit()).ends_with('m') {
                out.push('*');
            }
        }
    }
    out
}

impl fmt::Debug for DualMatrix3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualMatrix3[\n{}\n]", self.to_text())
    }
}

impl Serialize for DualMatrix3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<Vec<RatText>>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| rat::to_text_vec(e)).collect())
            .collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualMatrix3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Vec<Vec<RatText>>>::deserialize(d)?;
        let bad = || serde::de::Error::custom("expected a 3x3 array of 5-vectors");
        if v.len() != 3 || v.iter().any(|r| r.len() != 3 || r.iter().any(|e| e.len() != 5)) {
            return Err(bad());
        }
        Ok(DualMatrix3 {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| std::array::from_fn(|k| v[i][j][k].0.clone()))
            }),
        })
    }
}

/// `φ̄₁(x) = Σ a_ij ⊗ l_i ⊗ l_j`: `a_ii` is the `l_i²` coefficient of the
/// Pfaffians and `a_ij` (`i ≠ j`) half the `l_i l_j` coefficient.
pub fn phi1_bar(x: &VElement) -> DualMatrix3 {
    let pf = pfaffians(x);
    let half = rat::rat(1, 2);
    DualMatrix3 {
        entries: std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                std::array::from_fn(|k| {
                    let mut e = [0u32; 3];
                    e[i] += 1;
                    e[j] += 1;
                    let c = pf[k].coeff(&e);
                    if i == j {
                        c
                    } else {
                        c * &half
                    }
                })
            })
        }),
    }
}

/// A ternary quadratic form `Σ b_ts p_t p_s` on `V₂`, stored as the symmetric
/// matrix `b` in the dual basis `p_0, p_1, p_2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadForm3 {
    b: Matrix,
}

impl QuadForm3 {
    pub fn from_matrix(b: Matrix) -> Result<Self> {
        if b.rows() != 3 || b.cols() != 3 || b.transpose() != b {
            return Err(Error::DimensionMismatch(
                "a ternary quadratic form needs a symmetric 3x3 matrix".into(),
            ));
        }
        Ok(QuadForm3 { b })
    }

    /// From coordinates in `n_0*, ..., n_5*`.
    pub fn from_n_star(c: &[Rat; 6]) -> Self {
        let mut b = Matrix::zeros(3, 3);
        for i in 0..3 {
            for j in i..3 {
                let v = c[n_index(i, j)].clone();
                b[(i, j)] = v.clone();
                b[(j, i)] = v;
            }
        }
        QuadForm3 { b }
    }

    /// Coordinates in `n_0*, ..., n_5*`.
    pub fn n_star(&self) -> [Rat; 6] {
        std::array::from_fn(|r| {
            let e = N_BASIS[r];
            let idx: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat(i).take(e[i] as usize)).collect();
            self.b[(idx[0], idx[1])].clone()
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.b
    }

    pub fn discriminant(&self) -> Rat {
        self.b.det()
    }

    /// The form as a contravariant quadratic in `p`.
    pub fn to_form(&self) -> SymForm {
        SymForm::from_quadratic_matrix(Variance::Contravariant, &self.b)
    }

    pub fn to_text(&self) -> String {
        self.to_form().to_text("p")
    }
}

impl fmt::Debug for QuadForm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadForm3({})", self.to_text())
    }
}

impl Serialize for QuadForm3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.b.to_text().serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadForm3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<RatText>>::deserialize(d)?;
        let m = Matrix::from_text(rows).map_err(serde::de::Error::custom)?;
        QuadForm3::from_matrix(m).map_err(serde::de::Error::custom)
    }
}

/// `q_0 ∧ ... ∧ q_4` in `∧⁵ Sym²V₂`, as coordinates in `n_0*, ..., n_5*`
/// with `n_r ∧ n_s* = δ_rs n_0 ∧ ... ∧ n_5`.
pub fn wedge5(q: &[SymForm; 5]) -> [Rat; 6] {
    let rows: Vec<Vec<Rat>> = q
        .iter()
        .map(|f| N_BASIS.iter().map(|e| f.coeff(e)).collect())
        .collect();
    std::array::from_fn(|r| {
        let cols: Vec<usize> = (0..6).filter(|&c| c != r).collect();
        let minor = Matrix::from_fn(5, 5, |i, j| rows[i][cols[j]].clone());
        let d = minor.det();
        if r % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

/// `Φ₁(x) = 3⁻⁴ · φ₂(φ₁(x))`.
pub fn ternary_form(x: &VElement) -> QuadForm3 {
    let c = wedge5(&pfaffians(x));
    let k = Rat::from_integer(81.into());
    QuadForm3::from_n_star(&c.map(|v| v / &k))
}

/// `φ₃(x) = φ̄₁(x) · Φ̄₁(x)`.
pub fn composite_matrix(x: &VElement) -> DualMatrix3 {
    phi1_bar(x).mul_right(ternary_form(x).matrix())
}

/// `Φ₂(x) = tr(φ₃(x)²)`.
pub fn quadratic_form(x: &VElement) -> SymForm {
    composite_matrix(x).trace_square()
}

/// `F_x = det φ₃(x)`.
pub fn cubic_form(x: &VElement) -> SymForm {
    composite_matrix(x).determinant()
}

/// The discriminant `Δ(x) = det Φ̄₁(x)`.
pub fn delta(x: &VElement) -> Rat {
    ternary_form(x).discriminant()
}

pub fn is_semistable(x: &VElement) -> bool {
    !delta(x).is_zero()
}

/// All 3-subsets of `0..10` in lexicographic order.
pub fn triples() -> &'static [[usize; 3]; 120] {
    static T: std::sync::OnceLock<[[usize; 3]; 120]> = std::sync::OnceLock::new();
    T.get_or_init(|| {
        let mut out = [[0; 3]; 120];
        let mut k = 0;
        for a in 0..10 {
            for b in a + 1..10 {
                for c in b + 1..10 {
                    out[k] = [a, b, c];
                    k += 1;
                }
            }
        }
        out
    })
}

pub fn triple_index(t: [usize; 3]) -> usize {
    triples().iter().position(|&s| s == t).expect("not an ordered triple")
}

/// A point of `Gr(3, ∧²V₁)` in Plücker coordinates indexed by [`triples`],
/// scaled so the first nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlueckerPoint {
    coords: Vec<Rat>,
}

impl PlueckerPoint {
    /// The Plücker point of the row span of three vectors in `∧²V₁`.
    pub fn from_rows(rows: [&[Rat]; 3]) -> Result<Self> {
        let m = Matrix::from_rows(rows.iter().map(|r| r.to_vec()).collect())?;
        let rank = m.rank();
        if rank < 3 {
            return Err(Error::DegenerateSpan { rank });
        }
        let coords = triples()
            .iter()
            .map(|t| m.select(&[0, 1, 2], t).det())
            .collect();
        Self::from_coords(coords)
    }

    /// Canonicalizes raw coordinates; fails when all vanish.
    pub fn from_coords(mut coords: Vec<Rat>) -> Result<Self> {
        if coords.len() != 120 {
            return Err(Error::DimensionMismatch(format!(
                "Gr(3,10) has 120 Plücker coordinates, got {}",
                coords.len()
            )));
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or(Error::DegenerateSpan { rank: 0 })?;
        for c in &mut coords {
            *c /= &lead;
        }
        Ok(PlueckerPoint { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// `p_I` for an arbitrary index triple, with the alternating sign.
    pub fn coord(&self, idx: [usize; 3]) -> Rat {
        let s = crate::tensor::wedge_sign(&idx);
        if s == 0 {
            return Rat::zero();
        }
        let mut t = idx;
        t.sort_unstable();
        let v = self.coords[triple_index(t)].clone();
        if s < 0 {
            -v
        } else {
            v
        }
    }

    /// Three vectors spanning the plane, read off from the leading coordinate.
    pub fn basis(&self) -> [Vec<Rat>; 3] {
        let lead = self.coords.iter().position(|c| !c.is_zero()).unwrap();
        let t = triples()[lead];
        std::array::from_fn(|r| {
            (0..10)
                .map(|j| {
                    let mut idx = t;
                    idx[r] = j;
                    self.coord(idx)
                })
                .collect()
        })
    }

    /// The span as a subspace of `∧²V₁`.
    pub fn span(&self) -> crate::linalg::Span {
        let b = self.basis();
        crate::linalg::Span::from_vectors(10, &b)
    }

    /// The Grassmann–Plücker relations
    /// `Σ_l (-1)^l p_{I ∪ j_l} p_{J \ j_l} = 0` for all 2-subsets `I` and
    /// 4-subsets `J`; returns whether all vanish.
    pub fn satisfies_relations(&self) -> bool {
        for i0 in 0..10 {
            for i1 in i0 + 1..10 {
                for j0 in 0..10 {
                    for j1 in j0 + 1..10 {
                        for j2 in j1 + 1..10 {
                            for j3 in j2 + 1..10 {
                                let j = [j0, j1, j2, j3];
                                let mut total = Rat::zero();
                                for l in 0..4 {
                                    let rest: Vec<usize> =
                                        (0..4).filter(|&k| k != l).map(|k| j[k]).collect();
                                    let t = self.coord([i0, i1, j[l]])
                                        * self.coord([rest[0], rest[1], rest[2]]);
                                    if l % 2 == 0 {
                                        total += t;
                                    } else {
                                        total -= t;
                                    }
                                }
                                if !total.is_zero() {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(rat::to_f64).collect()
    }
}

impl fmt::Debug for PlueckerPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nz: Vec<String> = triples()
            .iter()
            .zip(&self.coords)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| format!("{t:?}={c}"))
            .collect();
        write!(f, "Pluecker{{{}}}", nz.join(", "))
    }
}

impl Serialize for PlueckerPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rat::to_text_vec(&self.coords).serialize(s)
    }
}

impl<'de> Deserialize<'de> for PlueckerPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = rat::from_text_vec(Vec::<RatText>::deserialize(d)?);
        PlueckerPoint::from_coords(v).map_err(serde::de::Error::custom)
    }
}

/// `Φ₃(x)`: the plane spanned by the components `x_0, x_1, x_2`.
pub fn span_point(x: &VElement) -> Result<PlueckerPoint> {
    let c: [Alt2Tensor; 3] = std::array::from_fn(|k| x.component(k));
    PlueckerPoint::from_rows([c[0].coeffs(), c[1].coeffs(), c[2].coeffs()])
}

/// `dim S_x`.
pub fn span_dim(x: &VElement) -> usize {
    let rows: Vec<Vec<Rat>> = (0..3).map(|k| x.component(k).coeffs().to_vec()).collect();
    Matrix::from_rows(rows).expect("three 10-vectors").rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn sample() -> VElement {
        VElement::from_terms(&[(0, 1, 0, int(1)), (2, 3, 1, int(1))])
    }

    #[test]
    fn pfaffians_of_sample() {
        let pf = pfaffians(&sample());
        for f in &pf[..4] {
            assert!(f.is_zero());
        }
        assert_eq!(pf[4], SymForm::monomial(Variance::Covariant, &[1, 1, 0], int(1)));
        assert!(pfaffians(&VElement::zero()).iter().all(SymForm::is_zero));
    }

    #[test]
    fn sample_is_degenerate() {
        let x = sample();
        assert!(ternary_form(&x).matrix().is_zero());
        assert_eq!(delta(&x), int(0));
        assert!(!is_semistable(&x));
        assert!(matches!(span_point(&x), Err(Error::DegenerateSpan { rank: 2 })));
    }

    #[test]
    fn n_star_round_trip() {
        let c = [int(1), int(2), int(3), int(4), int(5), int(6)];
        assert_eq!(QuadForm3::from_n_star(&c).n_star(), c);
        let q = QuadForm3::from_n_star(&[int(0), int(1), int(0), int(0), int(0), int(-2)]);
        assert_eq!(q.matrix(), &Matrix::from_ints([[0, 0, -2], [0, 1, 0], [-2, 0, 0]]));
        assert_eq!(q.to_text(), "-4*p0*p2 + p1^2");
    }

    #[test]
    fn v_text_round_trip() {
        let x = VElement::from_terms(&[(0, 3, 2, int(1)), (1, 2, 2, int(-3)), (4, 0, 1, rat(1, 2))]);
        let text = x.to_text();
        assert!(text.lines().count() == 10);
        assert_eq!(VElement::parse_text(&text).unwrap(), x);
        assert_eq!(x.get(0, 4)[1], rat(-1, 2));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<VElement>(&json).unwrap(), x);
    }

    #[test]
    fn pluecker_of_coordinate_plane() {
        let e = |i: usize| -> Vec<Rat> { (0..10).map(|k| int((k == i) as i64)).collect() };
        let (a, b, c) = (e(0), e(3), e(7));
        let p = PlueckerPoint::from_rows([&a, &b, &c]).unwrap();
        assert_eq!(p.coord([0, 3, 7]), int(1));
        assert_eq!(p.coord([3, 0, 7]), int(-1));
        assert_eq!(p.coords().iter().filter(|c| !c.is_zero()).count(), 1);
        assert!(p.satisfies_relations());
        assert!(p.span().same_as(&crate::linalg::Span::from_vectors(10, [&a, &b, &c])));
    }
}
