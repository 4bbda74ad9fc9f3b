//! Symmetric and exterior tensors over small vector spaces.
//!
//! A [`SymForm`] is an element of `Sym^d W` (covariant) or `Sym^d W*`
//! (contravariant) written in the monomial basis `e^I = e_1^{i_1}...e_n^{i_n}`.
//! The product is `[a_1..a_p][a_{p+1}..a_{p+q}] = [a_1..a_{p+q}]`, so the
//! algebra is the ordinary polynomial ring, and the pairing between
//! `Sym^d W` and `Sym^d W*` is normalized so that
//! `(e^I, f^J)_d = delta_IJ * i_1!...i_n! / d!`.
//!
//! Exterior powers are only needed for a five-dimensional space: [`Alt2Tensor`]
//! holds `∧²`, [`Alt4Dual`] holds `∧⁴` identified with the dual space through
//! `m_i ∧ m_j* = δ_ij m_0∧...∧m_4`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rat::{self, Rat, RatText};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// Exponent vector of a monomial.
pub type MultiIndex = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymForm {
    dim: usize,
    degree: u32,
    variance: Variance,
    coeffs: BTreeMap<MultiIndex, Rat>,
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn multi_factorial(idx: &[u32]) -> BigInt {
    idx.iter().map(|&i| factorial(i)).product()
}

/// All exponent vectors of length `n` summing to `d`, in descending
/// lexicographic order (`e_1^d` first).
pub fn multi_indices(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for i in (0..=d).rev() {
            prefix.push(i);
            rec(n, d - i, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

impl SymForm {
    pub fn zero(dim: usize, degree: u32, variance: Variance) -> Self {
        SymForm {
            dim,
            degree,
            variance,
            coeffs: BTreeMap::new(),
        }
    }

    /// Degree-0 form; the unit of the product when `c = 1`.
    pub fn constant(dim: usize, variance: Variance, c: Rat) -> Self {
        let mut f = Self::zero(dim, 0, variance);
        f.add_term(vec![0; dim], c);
        f
    }

    pub fn monomial(variance: Variance, exponents: &[u32], coeff: Rat) -> Self {
        let mut f = Self::zero(exponents.len(), exponents.iter().sum(), variance);
        f.add_term(exponents.to_vec(), coeff);
        f
    }

    /// Basis vector `e_i` (or `f_i`) as a degree-1 form.
    pub fn basis(dim: usize, variance: Variance, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(variance, &e, Rat::one())
    }

    pub fn linear(variance: Variance, coords: &[Rat]) -> Self {
        let mut f = Self::zero(coords.len(), 1, variance);
        for (i, c) in coords.iter().enumerate() {
            let mut e = vec![0; coords.len()];
            e[i] = 1;
            f.add_term(e, c.clone());
        }
        f
    }

    /// Builds a form from `(exponents, coefficient)` terms; every exponent
    /// vector must have length `dim` and sum to `degree`.
    pub fn from_terms(
        dim: usize,
        degree: u32,
        variance: Variance,
        terms: impl IntoIterator<Item = (MultiIndex, Rat)>,
    ) -> Result<Self> {
        let mut f = Self::zero(dim, degree, variance);
        for (idx, c) in terms {
            if idx.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "multi-index {idx:?} for a {dim}-dimensional space"
                )));
            }
            let d: u32 = idx.iter().sum();
            if d != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
            f.add_term(idx, c);
        }
        Ok(f)
    }

    fn add_term(&mut self, idx: MultiIndex, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[u32]) -> Rat {
        self.coeffs.get(idx).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms in descending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rat)> {
        self.coeffs.iter().rev()
    }

    /// Coordinates of a degree-1 form.
    pub fn linear_coords(&self) -> Result<Vec<Rat>> {
        if self.degree != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: self.degree,
            });
        }
        Ok((0..self.dim)
            .map(|i| {
                let mut e = vec![0; self.dim];
                e[i] = 1;
                self.coeff(&e)
            })
            .collect())
    }

    /// Coefficients over the full monomial basis, in [`multi_indices`] order.
    pub fn dense_coeffs(&self) -> Vec<Rat> {
        multi_indices(self.dim, self.degree)
            .iter()
            .map(|i| self.coeff(i))
            .collect()
    }

    pub fn from_dense(dim: usize, degree: u32, variance: Variance, v: &[Rat]) -> Self {
        let mut f = Self::zero(dim, degree, variance);
        for (idx, c) in multi_indices(dim, degree).into_iter().zip(v) {
            f.add_term(idx, c.clone());
        }
        f
    }

    fn check_same_space(&self, other: &SymForm) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(format!(
                "forms over spaces of dimension {} and {}",
                self.dim, other.dim
            )));
        }
        if self.variance != other.variance {
            return Err(Error::DimensionMismatch(format!(
                "{:?} form combined with {:?} form",
                self.variance, other.variance
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &SymForm) -> Result<SymForm> {
        self.check_same_space(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(i.clone(), c.clone());
        }
        Ok(out)
    }

    /// Sum of two forms of the same space and degree. Panics otherwise.
    pub fn add(&self, other: &SymForm) -> SymForm {
        self.try_add(other).expect("adding incompatible forms")
    }

    pub fn sub(&self, other: &SymForm) -> SymForm {
        self.add(&other.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> SymForm {
        let mut out = Self::zero(self.dim, self.degree, self.variance);
        for (i, v) in &self.coeffs {
            out.add_term(i.clone(), v * c);
        }
        out
    }

    /// The symmetric product.
    pub fn product(&self, other: &SymForm) -> Result<SymForm> {
        self.check_same_space(other)?;
        let mut out = Self::zero(self.dim, self.degree + other.degree, self.variance);
        for (i, a) in &self.coeffs {
            for (j, b) in &other.coeffs {
                let idx = i.iter().zip(j).map(|(x, y)| x + y).collect();
                out.add_term(idx, a * b);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &SymForm) -> SymForm {
        self.product(other).expect("multiplying incompatible forms")
    }

    /// The normalized pairing `(a, b)_d` of a covariant and a contravariant
    /// form of equal degree.
    pub fn pairing(a: &SymForm, b: &SymForm) -> Result<Rat> {
        if a.variance != Variance::Covariant || b.variance != Variance::Contravariant {
            return Err(Error::VarianceMismatch(
                "pairing needs a covariant and a contravariant form".into(),
            ));
        }
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch(format!(
                "pairing spaces of dimension {} and {}",
                a.dim, b.dim
            )));
        }
        if a.degree != b.degree {
            return Err(Error::DegreeMismatch {
                expected: a.degree,
                found: b.degree,
            });
        }
        let d_fact = Rat::from_integer(factorial(a.degree));
        let mut total = Rat::zero();
        for (idx, x) in &a.coeffs {
            if let Some(y) = b.coeffs.get(idx) {
                total += x * y * Rat::from_integer(multi_factorial(idx)) / &d_fact;
            }
        }
        Ok(total)
    }

    /// `i_d(a) = a ⊗ ... ⊗ a` for a degree-1 form `a`.
    pub fn power_embed(a: &SymForm, d: u32) -> Result<SymForm> {
        if d == 0 {
            return Err(Error::InvalidParameter("power_embed needs d >= 1".into()));
        }
        let coords = a.linear_coords()?;
        let d_fact = Rat::from_integer(factorial(d));
        let mut out = Self::zero(a.dim, d, a.variance);
        for idx in multi_indices(a.dim, d) {
            let mut c = &d_fact / Rat::from_integer(multi_factorial(&idx));
            for (x, &e) in coords.iter().zip(&idx) {
                c *= num_traits::pow(x.clone(), e as usize);
            }
            out.add_term(idx, c);
        }
        Ok(out)
    }

    /// `f(a)` for a contravariant form `f` and a covariant degree-1 form `a`.
    pub fn eval(&self, a: &SymForm) -> Result<Rat> {
        if self.variance != Variance::Contravariant || a.variance != Variance::Covariant {
            return Err(Error::VarianceMismatch(
                "evaluation needs a contravariant form and a covariant vector".into(),
            ));
        }
        if self.dim != a.dim {
            return Err(Error::DimensionMismatch(format!(
                "evaluating a form on a {}-space at a vector of a {}-space",
                self.dim, a.dim
            )));
        }
        Ok(self.eval_at(&a.linear_coords()?))
    }

    /// Polynomial evaluation at coordinates, regardless of variance.
    pub fn eval_at(&self, coords: &[Rat]) -> Rat {
        assert_eq!(coords.len(), self.dim, "coordinate count mismatch");
        let mut total = Rat::zero();
        for (idx, c) in &self.coeffs {
            let mut t = c.clone();
            for (x, &e) in coords.iter().zip(idx) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes variable `i` by `Σ_k m[i][k] x_k`.
    pub fn substitute(&self, m: &Matrix) -> SymForm {
        assert!(
            m.rows() == self.dim && m.cols() == self.dim,
            "substitution matrix must be {0}x{0}",
            self.dim
        );
        let images: Vec<SymForm> = (0..self.dim)
            .map(|i| SymForm::linear(self.variance, m.row(i)))
            .collect();
        let mut out = Self::zero(self.dim, self.degree, self.variance);
        let one = SymForm::constant(self.dim, self.variance, Rat::one());
        for (idx, c) in &self.coeffs {
            let mut t = one.clone();
            for (img, &e) in images.iter().zip(idx) {
                for _ in 0..e {
                    t = t.mul(img);
                }
            }
            out = out.add(&t.scale(c));
        }
        out
    }

    /// `Σ_i ∂f/∂x_i · (Σ_k m[i][k] x_k)`, the first-order term of
    /// [`substitute`](Self::substitute) at `I + εm`.
    pub fn derivation(&self, m: &Matrix) -> SymForm {
        let mut out = Self::zero(self.dim, self.degree, self.variance);
        for (idx, c) in &self.coeffs {
            for i in 0..self.dim {
                if idx[i] == 0 {
                    continue;
                }
                let base = c * rat::int(idx[i] as i64);
                for k in 0..self.dim {
                    let mk = &m[(i, k)];
                    if mk.is_zero() {
                        continue;
                    }
                    let mut e = idx.clone();
                    e[i] -= 1;
                    e[k] += 1;
                    out.add_term(e, &base * mk);
                }
            }
        }
        out
    }

    /// Symmetric coefficient matrix of a quadratic form: `f(x) = xᵀ B x`.
    pub fn quadratic_matrix(&self) -> Result<Matrix> {
        if self.degree != 2 {
            return Err(Error::DegreeMismatch {
                expected: 2,
                found: self.degree,
            });
        }
        let n = self.dim;
        let half = rat::rat(1, 2);
        Ok(Matrix::from_fn(n, n, |r, c| {
            let mut e = vec![0u32; n];
            e[r] += 1;
            e[c] += 1;
            let v = self.coeff(&e);
            if r == c {
                v
            } else {
                v * &half
            }
        }))
    }

    pub fn from_quadratic_matrix(variance: Variance, b: &Matrix) -> SymForm {
        let n = b.rows();
        let mut f = Self::zero(n, 2, variance);
        for r in 0..n {
            for c in 0..n {
                let mut e = vec![0u32; n];
                e[r] += 1;
                e[c] += 1;
                f.add_term(e, b[(r, c)].clone());
            }
        }
        f
    }

    /// Human-readable polynomial using variables `{prefix}0, {prefix}1, ...`.
    pub fn to_text(&self, prefix: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (idx, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let vars: Vec<String> = idx
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("{prefix}{i}")
                    } else {
                        format!("{prefix}{i}^{e}")
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push('*');
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    /// Parses the output of [`to_text`](Self::to_text).
    pub fn parse_text(
        text: &str,
        prefix: &str,
        dim: usize,
        degree: u32,
        variance: Variance,
    ) -> Result<SymForm> {
        let bad = |m: &str| Error::Parse(format!("{m} in {text:?}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" {
            return Ok(Self::zero(dim, degree, variance));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut out = Self::zero(dim, degree, variance);
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let mut coeff = Rat::one();
            let mut idx = vec![0u32; dim];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix(prefix) {
                    let (i, e) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad("bad exponent"))?),
                        None => (var, 1),
                    };
                    let i: usize = i.parse().map_err(|_| bad("bad variable index"))?;
                    if i >= dim {
                        return Err(bad("variable index out of range"));
                    }
                    idx[i] += e;
                } else {
                    coeff *= rat::parse(factor)?;
                }
            }
            let d: u32 = idx.iter().sum();
            if d != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
            out.add_term(idx, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl fmt::Debug for SymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SymForm(n={}, d={}, {:?}: {})",
            self.dim,
            self.degree,
            self.variance,
            self.to_text("x")
        )
    }
}

#[derive(Serialize, Deserialize)]
struct SymFormWire {
    dim: usize,
    degree: u32,
    variance: Variance,
    terms: Vec<(MultiIndex, RatText)>,
}

impl Serialize for SymForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SymFormWire {
            dim: self.dim,
            degree: self.degree,
            variance: self.variance,
            terms: self
                .coeffs
                .iter()
                .map(|(i, c)| (i.clone(), RatText::from(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = SymFormWire::deserialize(d)?;
        SymForm::from_terms(
            w.dim,
            w.degree,
            w.variance,
            w.terms.into_iter().map(|(i, c)| (i, c.0)),
        )
        .map_err(serde::de::Error::custom)
    }
}

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
pub fn wedge_sign(idx: &[usize]) -> i32 {
    let mut sign = 1;
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            match idx[i].cmp(&idx[j]) {
                std::cmp::Ordering::Equal => return 0,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    sign
}

/// The ten pairs `i < j` of `0..5` in lexicographic order.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub fn pair_index(i: usize, j: usize) -> usize {
    assert!(i < j && j < 5, "pair ({i}, {j}) is not ordered within 0..5");
    PAIRS.iter().position(|&p| p == (i, j)).unwrap()
}

/// An element of `∧² V₁` for the five-dimensional `V₁`, stored as the ten
/// coefficients of `m_i ∧ m_j`, `i < j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alt2Tensor {
    coeffs: [Rat; 10],
}

impl Alt2Tensor {
    pub fn zero() -> Self {
        Alt2Tensor {
            coeffs: std::array::from_fn(|_| Rat::zero()),
        }
    }

    pub fn from_coeffs(coeffs: [Rat; 10]) -> Self {
        Alt2Tensor { coeffs }
    }

    pub fn from_slice(v: &[Rat]) -> Result<Self> {
        if v.len() != 10 {
            return Err(Error::DimensionMismatch(format!(
                "∧² of a 5-space has 10 coordinates, got {}",
                v.len()
            )));
        }
        Ok(Alt2Tensor {
            coeffs: std::array::from_fn(|k| v[k].clone()),
        })
    }

    /// `Σ c · m_i ∧ m_j` from `(i, j, c)` triples in any order.
    pub fn from_terms(terms: &[(usize, usize, Rat)]) -> Self {
        let mut t = Self::zero();
        for (i, j, c) in terms {
            t.add_basis(*i, *j, c);
        }
        t
    }

    fn add_basis(&mut self, i: usize, j: usize, c: &Rat) {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(i, j)] += c,
            std::cmp::Ordering::Greater => self.coeffs[pair_index(j, i)] -= c,
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn coeffs(&self) -> &[Rat; 10] {
        &self.coeffs
    }

    /// `x_ij` with `x_ji = -x_ij` and `x_ii = 0`.
    pub fn get(&self, i: usize, j: usize) -> Rat {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.coeffs[pair_index(j, i)].clone(),
            std::cmp::Ordering::Equal => Rat::zero(),
        }
    }

    /// `a ∧ b` for coordinate vectors of `V₁`.
    pub fn wedge(a: &[Rat], b: &[Rat]) -> Self {
        assert!(a.len() == 5 && b.len() == 5, "wedge2 needs 5-vectors");
        Alt2Tensor {
            coeffs: PAIRS.map(|(i, j)| &a[i] * &b[j] - &a[j] * &b[i]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Alt2Tensor {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &other.coeffs[k]),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Alt2Tensor {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] * c),
        }
    }

    /// The alternating bilinear form `(a, b) ↦ Σ x_ij ((m_i,a)(m_j,b) - (m_i,b)(m_j,a))`
    /// for a given diagonal pairing `(m_i, e_i*) = pair[i]`, as a 5×5 matrix.
    pub fn as_bilinear(&self, pair: &[Rat; 5]) -> Matrix {
        Matrix::from_fn(5, 5, |r, c| self.get(r, c) * &pair[r] * &pair[c])
    }

    pub fn to_text(&self) -> String {
        let terms: Vec<(MultiIndex, Rat)> = PAIRS
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&(i, j), c)| (vec![i as u32, j as u32], c.clone()))
            .collect();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (ij, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&format!("m{}^m{}", ij[0], ij[1]));
        }
        out
    }
}

impl fmt::Debug for Alt2Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alt2({})", self.to_text())
    }
}

impl Serialize for Alt2Tensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        rat::to_text_vec(&self.coeffs).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Alt2Tensor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = rat::from_text_vec(Vec::<RatText>::deserialize(d)?);
        Alt2Tensor::from_slice(&v).map_err(serde::de::Error::custom)
    }
}

/// An element of `∧⁴ V₁ ≅ V₁*`, coordinates in the basis `m_0*, ..., m_4*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Alt4Dual {
    #[serde(with = "rat_array5")]
    coords: [Rat; 5],
}

impl Alt4Dual {
    pub fn new(coords: [Rat; 5]) -> Self {
        Alt4Dual { coords }
    }

    /// `m_i* = (-1)^i · m_0 ∧ .. (omit m_i) .. ∧ m_4`.
    pub fn basis(i: usize) -> Result<Self> {
        if i >= 5 {
            return Err(Error::IndexOutOfRange { index: i, bound: 5 });
        }
        Ok(Alt4Dual {
            coords: std::array::from_fn(|k| if k == i { Rat::one() } else { Rat::zero() }),
        })
    }

    pub fn coords(&self) -> &[Rat; 5] {
        &self.coords
    }

    /// Expansion over ascending 4-wedges: `(coefficient, indices)`.
    pub fn as_wedges(&self) -> Vec<(Rat, [usize; 4])> {
        (0..5)
            .filter(|&i| !self.coords[i].is_zero())
            .map(|i| {
                let mut idx = [0; 4];
                let mut k = 0;
                for j in (0..5).filter(|&j| j != i) {
                    idx[k] = j;
                    k += 1;
                }
                let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
                (sign * &self.coords[i], idx)
            })
            .collect()
    }

    /// Coordinates of an element given as a sum of 4-wedges `c · m_a∧m_b∧m_c∧m_d`.
    pub fn from_wedges(terms: &[(Rat, [usize; 4])]) -> Self {
        let mut coords: [Rat; 5] = std::array::from_fn(|_| Rat::zero());
        for (c, idx) in terms {
            let s = wedge_sign(idx);
            if s == 0 {
                continue;
            }
            let missing = (0..5).find(|k| !idx.contains(k)).unwrap();
            // ascending wedge omitting `missing` equals (-1)^missing · m_missing*
            let parity = if missing % 2 == 0 { 1 } else { -1 };
            coords[missing] += c * rat::int((s * parity) as i64);
        }
        Alt4Dual { coords }
    }
}

/// `v ∧ d` as a multiple of `m_0 ∧ ... ∧ m_4`, computed from the wedge
/// expansion of `d`.
pub fn wedge4_pair(v: &[Rat], d: &Alt4Dual) -> Rat {
    let mut total = Rat::zero();
    for (c, idx) in d.as_wedges() {
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let full = [i, idx[0], idx[1], idx[2], idx[3]];
            let s = wedge_sign(&full);
            if s != 0 {
                total += vi * &c * rat::int(s as i64);
            }
        }
    }
    total
}

mod rat_array5 {
    use super::*;

    pub fn serialize<S: serde::Serializer>(v: &[Rat; 5], s: S) -> std::result::Result<S::Ok, S::Error> {
        rat::to_text_vec(v).serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<[Rat; 5], D::Error> {
        let v = rat::from_text_vec(Vec::<RatText>::deserialize(d)?);
        v.try_into()
            .map_err(|_| serde::de::Error::custom("expected 5 coordinates"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};
    use Variance::*;

    fn e(dim: usize, i: usize) -> SymForm {
        SymForm::basis(dim, Covariant, i)
    }

    #[test]
    fn product_examples() {
        let l0 = e(3, 0);
        let n0 = l0.mul(&l0);
        assert_eq!(n0, SymForm::monomial(Covariant, &[2, 0, 0], int(1)));
        let one = SymForm::constant(3, Covariant, int(1));
        assert_eq!(l0.mul(&one), l0);
        let s = e(2, 0).add(&e(2, 1));
        let sq = s.mul(&s);
        assert_eq!(sq.coeff(&[2, 0]), int(1));
        assert_eq!(sq.coeff(&[1, 1]), int(2));
        assert_eq!(sq.coeff(&[0, 2]), int(1));
    }

    #[test]
    fn product_rejects_mixed_spaces() {
        let a = e(2, 0);
        assert!(matches!(a.product(&e(3, 0)), Err(Error::DimensionMismatch(_))));
        let f = SymForm::basis(2, Contravariant, 0);
        assert!(matches!(a.product(&f), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn pairing_examples() {
        let e11 = SymForm::monomial(Covariant, &[2, 0], int(1));
        let f11 = SymForm::monomial(Contravariant, &[2, 0], int(1));
        let e12 = SymForm::monomial(Covariant, &[1, 1], int(1));
        let f12 = SymForm::monomial(Contravariant, &[1, 1], int(1));
        assert_eq!(SymForm::pairing(&e11, &f11).unwrap(), int(1));
        assert_eq!(SymForm::pairing(&e12, &f12).unwrap(), rat(1, 2));
        assert_eq!(SymForm::pairing(&e11, &f12).unwrap(), int(0));
        let f1 = SymForm::basis(2, Contravariant, 0);
        assert!(matches!(
            SymForm::pairing(&e11, &f1),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn power_embed_examples() {
        let s = e(2, 0).add(&e(2, 1));
        let i2 = SymForm::power_embed(&s, 2).unwrap();
        assert_eq!(i2, s.mul(&s));
        assert_eq!(
            SymForm::power_embed(&e(2, 0), 3).unwrap(),
            SymForm::monomial(Covariant, &[3, 0], int(1))
        );
        let two_e1 = e(2, 0).scale(&int(2));
        assert_eq!(
            SymForm::power_embed(&two_e1, 2).unwrap(),
            SymForm::monomial(Covariant, &[2, 0], int(4))
        );
    }

    #[test]
    fn eval_examples() {
        let f = SymForm::monomial(Contravariant, &[2, 1], int(1));
        let a = SymForm::linear(Covariant, &[int(2), int(3)]);
        assert_eq!(f.eval(&a).unwrap(), int(12));
        let zero = SymForm::linear(Covariant, &[int(0), int(0)]);
        assert_eq!(f.eval(&zero).unwrap(), int(0));
    }

    #[test]
    fn wedge2_examples() {
        let m = |i: usize| -> Vec<Rat> { (0..5).map(|k| int((k == i) as i64)).collect() };
        let w01 = Alt2Tensor::wedge(&m(0), &m(1));
        assert_eq!(w01.get(0, 1), int(1));
        assert_eq!(w01.coeffs().iter().filter(|c| !c.is_zero()).count(), 1);
        assert_eq!(Alt2Tensor::wedge(&m(1), &m(0)).get(0, 1), int(-1));
        let s: Vec<Rat> = (0..5).map(|k| int((k < 2) as i64)).collect();
        assert!(Alt2Tensor::wedge(&s, &s).is_zero());
    }

    #[test]
    fn dual4_examples() {
        let d0 = Alt4Dual::basis(0).unwrap();
        assert_eq!(d0.as_wedges(), vec![(int(1), [1, 2, 3, 4])]);
        let d1 = Alt4Dual::basis(1).unwrap();
        assert_eq!(d1.as_wedges(), vec![(int(-1), [0, 2, 3, 4])]);
        let m2: Vec<Rat> = (0..5).map(|k| int((k == 2) as i64)).collect();
        assert_eq!(wedge4_pair(&m2, &Alt4Dual::basis(3).unwrap()), int(0));
        assert!(matches!(
            Alt4Dual::basis(5),
            Err(Error::IndexOutOfRange { index: 5, bound: 5 })
        ));
    }

    #[test]
    fn dual4_sign_convention() {
        for i in 0..5 {
            let mi: Vec<Rat> = (0..5).map(|k| int((k == i) as i64)).collect();
            for j in 0..5 {
                let expect = int((i == j) as i64);
                assert_eq!(wedge4_pair(&mi, &Alt4Dual::basis(j).unwrap()), expect);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let f = SymForm::from_terms(
            5,
            3,
            Contravariant,
            [
                (vec![1, 0, 1, 0, 1], int(72)),
                (vec![0, 0, 3, 0, 0], int(-2)),
                (vec![0, 1, 0, 2, 0], rat(-1, 2)),
            ],
        )
        .unwrap();
        let text = f.to_text("a");
        assert_eq!(text, "72*a0*a2*a4 - 1/2*a1*a3^2 - 2*a2^3");
        assert_eq!(SymForm::parse_text(&text, "a", 5, 3, Contravariant).unwrap(), f);
    }

    #[test]
    fn derivation_is_first_order_substitution() {
        let f = SymForm::from_terms(2, 2, Contravariant, [(vec![2, 0], int(1)), (vec![1, 1], int(3))])
            .unwrap();
        let m = Matrix::from_ints([[0, 1], [2, 0]]);
        // f(x + ε m x) with x0 -> x0 + ε x1, x1 -> x1 + 2ε x0
        // first order: 2 x0 x1 + 3 (x1^2 + 2 x0^2)
        let d = f.derivation(&m);
        assert_eq!(d.coeff(&[1, 1]), int(2));
        assert_eq!(d.coeff(&[0, 2]), int(3));
        assert_eq!(d.coeff(&[2, 0]), int(6));
    }
}
