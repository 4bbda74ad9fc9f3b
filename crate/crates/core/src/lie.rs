//! The `sl(2)`-module structure of `sl(5) ⊕ sl(3)` under the principal
//! embedding, its bracket tables and the subalgebras containing the image
//! of `sl(2)`.
//!
//! `sl(5) = U1 ⊕ U2 ⊕ U3 ⊕ U4` (dimensions 3, 5, 7, 9) and
//! `sl(3) = V1 ⊕ V2` (dimensions 3, 5), where `U1`, `V1` are the images of
//! `sl(2)` and the others are the `B`, `C`, `D`, `B'` matrix families.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::action::{alt2_derivation, h_image, lie_act_v, lie_matrices, LiePair};
use crate::check::{expect, expect_eq, Mismatch, Outcome};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Span};
use crate::pvs::{quadratic_form, ternary_form, VElement, N_BASIS};
use crate::rat::{self, Rat, RatText};
use crate::tensor::{multi_indices, SymForm, Variance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    U1,
    U2,
    U3,
    U4,
    V1,
    V2,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::U1,
        Family::U2,
        Family::U3,
        Family::U4,
        Family::V1,
        Family::V2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::U1 => "U1",
            Family::U2 => "U2",
            Family::U3 => "U3",
            Family::U4 => "U4",
            Family::V1 => "V1",
            Family::V2 => "V2",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::U1 | Family::V1 => 3,
            Family::U2 | Family::V2 => 5,
            Family::U3 => 7,
            Family::U4 => 9,
        }
    }

    /// Whether the family lives in `sl(5)` (otherwise `sl(3)`).
    pub fn in_first_factor(self) -> bool {
        matches!(self, Family::U1 | Family::U2 | Family::U3 | Family::U4)
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The matrix of `family(params)`: 5×5 for `U*`, 3×3 for `V*`.
pub fn family_matrix(family: Family, p: &[Rat]) -> Result<Matrix> {
    if p.len() != family.arity() {
        return Err(Error::Arity {
            family: family.name(),
            expected: family.arity(),
            found: p.len(),
        });
    }
    let k = |n: i64, v: &Rat| rat::int(n) * v;
    let z = Rat::zero;
    let m = match family {
        Family::U1 | Family::V1 => {
            let lm = lie_matrices();
            let a = if family == Family::U1 { lm.a } else { lm.a_prime };
            &(&a[0].scale(&p[0]) + &a[1].scale(&p[1])) + &a[2].scale(&p[2])
        }
        Family::U2 => {
            let b = p;
            Matrix::from_rows(vec![
                vec![k(2, &b[2]), k(-3, &b[1]), b[0].clone(), z(), z()],
                vec![k(12, &b[3]), -b[2].clone(), k(-2, &b[1]), k(3, &b[0]), z()],
                vec![k(6, &b[4]), k(3, &b[3]), k(-2, &b[2]), k(3, &b[1]), k(6, &b[0])],
                vec![z(), k(3, &b[4]), k(-2, &b[3]), -b[2].clone(), k(12, &b[1])],
                vec![z(), z(), b[4].clone(), k(-3, &b[3]), k(2, &b[2])],
            ])?
        }
        Family::U3 => {
            let c = p;
            Matrix::from_rows(vec![
                vec![c[3].clone(), k(3, &c[2]), -c[1].clone(), c[0].clone(), z()],
                vec![k(12, &c[4]), k(-2, &c[3]), k(-4, &c[2]), z(), k(4, &c[0])],
                vec![k(6, &c[5]), k(-6, &c[4]), z(), k(-6, &c[2]), k(6, &c[1])],
                vec![k(4, &c[6]), z(), k(-4, &c[4]), k(2, &c[3]), k(12, &c[2])],
                vec![z(), c[6].clone(), -c[5].clone(), k(3, &c[4]), -c[3].clone()],
            ])?
        }
        Family::U4 => {
            // Row r, column s holds w_r · (-1)^s · d_{4 - s + r}.
            let w = [1, 4, 6, 4, 1];
            Matrix::from_fn(5, 5, |r, s| {
                let sign = if s % 2 == 0 { 1 } else { -1 };
                k(w[r] * sign, &p[4 + r - s])
            })
        }
        Family::V2 => {
            let b = p;
            Matrix::from_rows(vec![
                vec![b[2].clone(), -b[1].clone(), b[0].clone()],
                vec![k(2, &b[3]), k(-2, &b[2]), k(2, &b[1])],
                vec![b[4].clone(), -b[3].clone(), b[2].clone()],
            ])?
        }
    };
    Ok(m)
}

/// `family(params)` placed in its factor of `sl(5) ⊕ sl(3)`.
pub fn family_pair(family: Family, p: &[Rat]) -> Result<LiePair> {
    let m = family_matrix(family, p)?;
    Ok(if family.in_first_factor() {
        LiePair::first(m)
    } else {
        LiePair::second(m)
    })
}

fn unit(n: usize, k: usize) -> Vec<Rat> {
    (0..n).map(|i| rat::int((i == k) as i64)).collect()
}

/// The standard basis `family(e_k)` of a family, as Lie pairs.
pub fn family_basis(family: Family) -> Vec<LiePair> {
    (0..family.arity())
        .map(|k| family_pair(family, &unit(family.arity(), k)).expect("arity matches"))
        .collect()
}

pub fn family_span(families: &[Family]) -> Span {
    Span::from_vectors(
        34,
        families.iter().flat_map(|&f| family_basis(f)).map(|p| p.to_vec()),
    )
}

/// Coordinates of a traceless matrix in the family bases, keyed by family.
pub type Decomposition = BTreeMap<Family, Vec<Rat>>;

fn decompose(m: &Matrix, families: &[Family]) -> Result<Decomposition> {
    if !m.trace().is_zero() {
        return Err(Error::NotTraceless);
    }
    let cols: Vec<Vec<Rat>> = families
        .iter()
        .flat_map(|&f| (0..f.arity()).map(move |k| (f, k)))
        .map(|(f, k)| family_matrix(f, &unit(f.arity(), k)).unwrap().entries().to_vec())
        .collect();
    let n = m.rows() * m.cols();
    let basis = Matrix::from_fn(n, cols.len(), |r, c| cols[c][r].clone());
    let x = basis
        .solve(m.entries())
        .ok_or_else(|| Error::DimensionMismatch("matrix outside the family span".into()))?;
    let mut out = Decomposition::new();
    let mut at = 0;
    for &f in families {
        out.insert(f, x[at..at + f.arity()].to_vec());
        at += f.arity();
    }
    Ok(out)
}

/// Components of `X ∈ sl(5)` in `U1 ⊕ U2 ⊕ U3 ⊕ U4`.
pub fn decompose_sl5(x: &Matrix) -> Result<Decomposition> {
    if x.rows() != 5 || x.cols() != 5 {
        return Err(Error::DimensionMismatch("decompose_sl5 needs a 5x5 matrix".into()));
    }
    decompose(x, &[Family::U1, Family::U2, Family::U3, Family::U4])
}

/// Components of `Y ∈ sl(3)` in `V1 ⊕ V2`.
pub fn decompose_sl3(y: &Matrix) -> Result<Decomposition> {
    if y.rows() != 3 || y.cols() != 3 {
        return Err(Error::DimensionMismatch("decompose_sl3 needs a 3x3 matrix".into()));
    }
    decompose(y, &[Family::V1, Family::V2])
}

/// Components of a traceless pair in all six families.
pub fn decompose_pair(p: &LiePair) -> Result<Decomposition> {
    let mut d = decompose_sl5(&p.x)?;
    d.extend(decompose_sl3(&p.y)?);
    Ok(d)
}

pub fn reassemble(d: &Decomposition) -> LiePair {
    d.iter().fold(LiePair::zero(), |acc, (&f, p)| {
        acc.add(&family_pair(f, p).expect("arity matches"))
    })
}

/// An affine expression `c + Σ c_k p_k` in the generic parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineExpr {
    pub constant: Rat,
    pub linear: BTreeMap<usize, Rat>,
}

impl AffineExpr {
    /// Parses sums of terms `c`, `c*x7`, `x7` or `-x7`, where `x` is any
    /// lowercase letter naming the parameter family.
    pub fn parse(s: &str) -> Result<AffineExpr> {
        let bad = |m: &str| Error::Parse(format!("{m} in expression {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut e = AffineExpr {
            constant: Rat::zero(),
            linear: BTreeMap::new(),
        };
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b.to_string()),
                None => (false, t.trim_start_matches('+').to_string()),
            };
            let (coef, var) = match body.split_once('*') {
                Some((c, v)) => (rat::parse(c)?, Some(v.to_string())),
                None if body.starts_with(|c: char| c.is_ascii_lowercase()) => (Rat::one(), Some(body)),
                None => (rat::parse(&body)?, None),
            };
            let coef = if neg { -coef } else { coef };
            match var {
                None => e.constant += coef,
                Some(v) => {
                    let idx = v
                        .trim_start_matches(|c: char| c.is_ascii_lowercase())
                        .parse::<usize>()
                        .map_err(|_| bad("bad parameter name"))?;
                    *e.linear.entry(idx).or_insert_with(Rat::zero) += coef;
                }
            }
        }
        Ok(e)
    }

    pub fn eval(&self, p: &[Rat]) -> Rat {
        self.linear
            .iter()
            .fold(self.constant.clone(), |acc, (&k, c)| acc + c * &p[k])
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Operand {
    pub family: String,
    #[serde(default)]
    pub params: Option<Vec<RatText>>,
    #[serde(default)]
    pub generic: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketIdentity {
    pub name: String,
    #[serde(default)]
    pub note: String,
    pub left: Operand,
    pub right: Operand,
    pub result: BTreeMap<String, Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketTable {
    #[serde(default)]
    pub description: String,
    pub identities: Vec<BracketIdentity>,
}

pub const BRACKETS_JSON: &str = include_str!("../fixtures/brackets.json");

pub fn builtin_bracket_table() -> BracketTable {
    serde_json::from_str(BRACKETS_JSON).expect("bundled bracket table parses")
}

fn operand_pair(o: &Operand, generic: &[Rat]) -> Result<LiePair> {
    let f = Family::parse(&o.family)?;
    match &o.params {
        Some(p) => family_pair(f, &rat::from_text_vec(p.clone())),
        None if o.generic => family_pair(f, generic),
        None => Err(Error::Parse(format!("operand {} has neither params nor generic", o.family))),
    }
}

impl BracketIdentity {
    /// Checks the identity at the origin and at every unit parameter vector,
    /// which determines both sides since they are affine in the parameters.
    pub fn verify(&self) -> Outcome {
        let parse_err = |e: Error| Mismatch {
            what: format!("{}: fixture", self.name),
            expected: "a well-formed identity".into(),
            actual: e.to_string(),
        };
        let rf = Family::parse(&self.right.family).map_err(parse_err)?;
        let n = rf.arity();
        let mut points = vec![vec![Rat::zero(); n]];
        if self.right.generic {
            points.extend((0..n).map(|k| unit(n, k)));
        }
        let mut result = Vec::new();
        for (fam, exprs) in &self.result {
            let f = Family::parse(fam).map_err(parse_err)?;
            let es: Vec<AffineExpr> = exprs
                .iter()
                .map(|s| AffineExpr::parse(s))
                .collect::<Result<_>>()
                .map_err(parse_err)?;
            result.push((f, es));
        }
        for p in &points {
            let left = operand_pair(&self.left, p).map_err(parse_err)?;
            let right = operand_pair(&self.right, p).map_err(parse_err)?;
            let lhs = left.bracket(&right);
            let mut rhs = LiePair::zero();
            for (f, es) in &result {
                let params: Vec<Rat> = es.iter().map(|e| e.eval(p)).collect();
                rhs = rhs.add(&family_pair(*f, &params).map_err(parse_err)?);
            }
            if lhs != rhs {
                let show = |x: &LiePair| {
                    decompose_pair(x)
                        .map(|d| format!("{d:?}"))
                        .unwrap_or_else(|_| format!("{x:?}"))
                };
                return Err(Mismatch {
                    what: format!("{} at parameters {:?}", self.name, p.iter().map(rat::to_pq).collect::<Vec<_>>()),
                    expected: show(&rhs),
                    actual: show(&lhs),
                });
            }
        }
        Ok(())
    }
}

/// The claimed bracket spans `[X, Y] = Z_1 ⊕ ...` between module pairs.
pub fn span_claims() -> Vec<(Family, Family, Vec<Family>)> {
    use Family::*;
    vec![
        (U2, U2, vec![U1, U3]),
        (U2, U3, vec![U2, U4]),
        (U2, U4, vec![U3]),
        (U3, U3, vec![U1, U3]),
        (U3, U4, vec![U2, U4]),
        (U4, U4, vec![U1, U3]),
        (V2, V2, vec![V1]),
    ]
}

/// Checks `[X, Y]` lands in the claimed sum and spans all of it.
pub fn verify_span_claim(a: Family, b: Family, claimed: &[Family]) -> Outcome {
    let target = family_span(claimed);
    let mut got = Span::new(34);
    for x in family_basis(a) {
        for y in family_basis(b) {
            let v = x.bracket(&y).to_vec();
            if !target.contains(&v) {
                return Err(Mismatch {
                    what: format!("[{a}, {b}] inside {claimed:?}"),
                    expected: format!("components only in {claimed:?}"),
                    actual: format!("{:?}", decompose_pair(&x.bracket(&y))),
                });
            }
            got.insert(&v);
        }
    }
    expect_eq(format!("dim [{a}, {b}]"), &target.dim(), &got.dim())
}

/// The smallest bracket-closed subspace containing `gens`. Every new basis
/// vector is bracketed with every basis vector until nothing new appears.
pub fn closure(gens: &[LiePair]) -> Vec<LiePair> {
    let mut span = Span::new(34);
    let mut basis: Vec<LiePair> = Vec::new();
    for g in gens {
        if span.insert(&g.to_vec()) {
            basis.push(g.clone());
        }
    }
    let mut frontier = 0;
    while frontier < basis.len() {
        let end = basis.len();
        for i in frontier..end {
            for j in 0..end {
                let v = basis[i].bracket(&basis[j]);
                if span.insert(&v.to_vec()) {
                    basis.push(v);
                }
            }
        }
        frontier = end;
    }
    basis
}

pub fn span_of(pairs: &[LiePair]) -> Span {
    Span::from_vectors(34, pairs.iter().map(|p| p.to_vec()))
}

pub fn is_closed(pairs: &[LiePair]) -> bool {
    let s = span_of(pairs);
    pairs
        .iter()
        .all(|a| pairs.iter().all(|b| s.contains(&a.bracket(b).to_vec())))
}

/// A named subalgebra between the image of `sl(2)` and `sl(5) ⊕ sl(3)`.
#[derive(Debug, Clone)]
pub struct NamedAlgebra {
    pub name: &'static str,
    pub basis: Vec<LiePair>,
}

impl NamedAlgebra {
    pub fn dim(&self) -> usize {
        span_of(&self.basis).dim()
    }
}

/// The seven intermediate subalgebras, smallest first.
pub fn enumerate_intermediate() -> Vec<NamedAlgebra> {
    use Family::*;
    let fam = |fs: &[Family]| -> Vec<LiePair> { fs.iter().flat_map(|&f| family_basis(f)).collect() };
    vec![
        NamedAlgebra {
            name: "h",
            basis: h_image().to_vec(),
        },
        NamedAlgebra {
            name: "sl2 x sl2",
            basis: fam(&[U1, V1]),
        },
        NamedAlgebra {
            name: "sl2 x sl3",
            basis: fam(&[U1, V1, V2]),
        },
        NamedAlgebra {
            name: "so5 x sl2",
            basis: fam(&[U1, U3, V1]),
        },
        NamedAlgebra {
            name: "so5 x sl3",
            basis: fam(&[U1, U3, V1, V2]),
        },
        NamedAlgebra {
            name: "sl5 x sl2",
            basis: fam(&[U1, U2, U3, U4, V1]),
        },
        NamedAlgebra {
            name: "sl5 x sl3",
            basis: fam(&[U1, U2, U3, U4, V1, V2]),
        },
    ]
}

/// The name of the intermediate subalgebra equal to `span(pairs)`, if any.
pub fn identify(pairs: &[LiePair]) -> Option<&'static str> {
    let s = span_of(pairs);
    enumerate_intermediate()
        .into_iter()
        .find(|a| span_of(&a.basis).same_as(&s))
        .map(|a| a.name)
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub input_dim: usize,
    pub closure_dim: usize,
    pub contains_h: bool,
    pub matches: Option<&'static str>,
}

/// Closes `gens` under brackets and names the result when it is one of the
/// intermediate subalgebras.
pub fn classify(gens: &[LiePair]) -> Classification {
    let c = closure(gens);
    let s = span_of(&c);
    Classification {
        input_dim: span_of(gens).dim(),
        closure_dim: s.dim(),
        contains_h: h_image().iter().all(|p| s.contains(&p.to_vec())),
        matches: identify(&c),
    }
}

fn gl_basis() -> Vec<LiePair> {
    (0..34)
        .map(|k| LiePair::from_vec(&unit(34, k)).expect("34 coordinates"))
        .collect()
}

/// Basis of `{(X, Y) ∈ gl(5) ⊕ gl(3) : (X, Y)·x = 0}`.
pub fn stabilizer_algebra(x: &VElement) -> Vec<LiePair> {
    let cols: Vec<Vec<Rat>> = gl_basis().iter().map(|b| lie_act_v(b, x).coords()).collect();
    let m = Matrix::from_fn(30, 34, |r, c| cols[c][r].clone());
    m.kernel()
        .into_iter()
        .map(|v| LiePair::from_vec(&v).expect("34 coordinates"))
        .collect()
}

/// Representations on which [`fixed_subspace`] can solve for invariants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Representation {
    /// `V = ∧²V₁ ⊗ V₂`, 30 coordinates pair-major.
    V,
    /// `∧²V₁`, 10 coordinates.
    Alt2,
    /// Quadratic forms on `V₂`, coordinates in `n_0*, ..., n_5*`.
    Sym2V2Dual,
    /// Quadratic forms on `V₁`, monomial coefficients.
    Sym2V1Dual,
}

impl Representation {
    pub fn dim(self) -> usize {
        match self {
            Representation::V => 30,
            Representation::Alt2 => 10,
            Representation::Sym2V2Dual => 6,
            Representation::Sym2V1Dual => 15,
        }
    }

    /// Matrix of the derivation action of `h`.
    pub fn action_matrix(self, h: &LiePair) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rat>> = (0..n).map(|k| self.act(h, &unit(n, k))).collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    pub fn act(self, h: &LiePair, v: &[Rat]) -> Vec<Rat> {
        match self {
            Representation::V => {
                lie_act_v(h, &VElement::from_coords(v).expect("30 coordinates")).coords()
            }
            Representation::Alt2 => alt2_derivation(&h.x).mul_vec(v),
            Representation::Sym2V2Dual => {
                let q = crate::pvs::QuadForm3::from_n_star(&v.to_vec().try_into().expect("6 coordinates"));
                let b = q.matrix();
                let d = -&(&(&h.y.transpose() * b) + &(b * &h.y));
                crate::pvs::QuadForm3::from_matrix(d).expect("symmetric").n_star().to_vec()
            }
            Representation::Sym2V1Dual => {
                let f = SymForm::from_dense(5, 2, Variance::Contravariant, v);
                f.derivation(&-&h.x).dense_coeffs()
            }
        }
    }
}

/// Coordinates of a ternary quadratic form in the [`Representation::Sym2V2Dual`] layout.
pub fn sym2v2_coords(q: &crate::pvs::QuadForm3) -> Vec<Rat> {
    q.n_star().to_vec()
}

/// Coordinates of a quadratic form on `V₁` in the [`Representation::Sym2V1Dual`] layout.
pub fn sym2v1_coords(f: &SymForm) -> Vec<Rat> {
    f.dense_coeffs()
}

/// Joint kernel of the actions of all `gens` on `rep`.
pub fn fixed_subspace(gens: &[LiePair], rep: Representation) -> Span {
    let n = rep.dim();
    let mut rows = Vec::new();
    for g in gens {
        rows.extend(rep.action_matrix(g).to_rows());
    }
    if rows.is_empty() {
        return Span::from_vectors(n, (0..n).map(|k| unit(n, k)));
    }
    let m = Matrix::from_rows(rows).expect("rectangular");
    Span::from_vectors(n, m.kernel())
}

/// `A_1`-eigenvalues on `∧²V₁`, sorted descending.
pub fn alt2_weights() -> Vec<Rat> {
    let d = alt2_derivation(&lie_matrices().a[1]);
    let mut w: Vec<Rat> = (0..10).map(|i| d[(i, i)].clone()).collect();
    w.sort_by(|a, b| b.cmp(a));
    w
}

/// Weights of the irreducible `sl(2)`-module of highest weight `d`.
pub fn irreducible_weights(d: i64) -> Vec<Rat> {
    (0..=d).map(|k| rat::int(d - 2 * k)).collect()
}

/// The `sl(2)`-submodule of `∧²V₁` generated by the highest-weight vectors
/// of weight 2, together with the dimension of that highest-weight space.
pub fn weight_two_submodule() -> (usize, Span) {
    let [p0, p1, p2] = h_image();
    let raise = alt2_derivation(&p0.x);
    let cartan = alt2_derivation(&p1.x);
    let lower = alt2_derivation(&p2.x);
    let two = Matrix::scalar(10, &rat::int(2));
    let mut rows = raise.to_rows();
    rows.extend((&cartan - &two).to_rows());
    let highest = Matrix::from_rows(rows).expect("rectangular").kernel();
    let mut span = Span::new(10);
    for v in &highest {
        let mut cur = v.clone();
        while cur.iter().any(|c| !c.is_zero()) {
            span.insert(&cur);
            cur = lower.mul_vec(&cur);
        }
    }
    (highest.len(), span)
}

/// `{X ∈ gl(5) : X preserves Φ₂(w)}` as a subspace of the 34 pair coordinates.
pub fn orthogonal_algebra_of(f: &SymForm) -> Span {
    let basis: Vec<LiePair> = (0..25).map(|k| LiePair::from_vec(&unit(34, k)).unwrap()).collect();
    let cols: Vec<Vec<Rat>> = basis
        .iter()
        .map(|b| f.derivation(&-&b.x).dense_coeffs())
        .collect();
    let m = Matrix::from_fn(cols[0].len(), 25, |r, c| cols[c][r].clone());
    Span::from_vectors(
        34,
        m.kernel().into_iter().map(|mut v| {
            v.extend(std::iter::repeat(Rat::zero()).take(9));
            v
        }),
    )
}

/// `(X - tr(X)/5, Y - tr(Y)/3)`.
pub fn traceless_part(p: &LiePair) -> LiePair {
    let t1 = p.x.trace() / rat::int(5);
    let t2 = p.y.trace() / rat::int(3);
    LiePair {
        x: &p.x - &Matrix::scalar(5, &t1),
        y: &p.y - &Matrix::scalar(3, &t2),
    }
}

/// The checks that the invariants of the stabilizer pieces at `x` are
/// exactly the lines through the equivariant images of `x`.
pub fn fixed_point_checks(x: &VElement) -> Outcome {
    let stab = stabilizer_algebra(x);
    let sl: Vec<LiePair> = span_of(&stab)
        .basis()
        .iter()
        .map(|v| traceless_part(&LiePair::from_vec(v).expect("34 coordinates")))
        .filter(|p| !p.is_zero())
        .collect();
    let on_v = fixed_subspace(&sl, Representation::V);
    expect_eq("dim of invariants in V", &1, &on_v.dim())?;
    expect("x spans the invariants in V", on_v.contains(&x.coords()))?;

    let second: Vec<LiePair> = sl.iter().map(|p| LiePair::second(p.y.clone())).collect();
    let on_q = fixed_subspace(&second, Representation::Sym2V2Dual);
    expect_eq("dim of invariants in Sym2 V2*", &1, &on_q.dim())?;
    expect(
        "Phi1(x) spans the invariants in Sym2 V2*",
        on_q.contains(&sym2v2_coords(&ternary_form(x))),
    )?;

    let phi2 = quadratic_form(x);
    let so = orthogonal_algebra_of(&phi2);
    expect_eq("dim so(Phi2(x))", &10, &so.dim())?;
    let so_gens: Vec<LiePair> = so.basis().iter().map(|v| LiePair::from_vec(v).unwrap()).collect();
    let on_f = fixed_subspace(&so_gens, Representation::Sym2V1Dual);
    expect_eq("dim of invariants in Sym2 V1*", &1, &on_f.dim())?;
    expect(
        "Phi2(x) spans the invariants in Sym2 V1*",
        on_f.contains(&sym2v1_coords(&phi2)),
    )
}

/// Number of `Sym²V₂*` coordinates; kept beside [`N_BASIS`] for callers that
/// size buffers.
pub const SYM2V2_DIM: usize = N_BASIS.len();

/// Number of quadratic monomials in five variables.
pub fn sym2v1_dim() -> usize {
    multi_indices(5, 2).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ints};

    #[test]
    fn families_are_traceless() {
        for f in Family::ALL {
            for b in family_basis(f) {
                assert!(b.is_traceless(), "{f}");
            }
        }
        assert_eq!(family_span(&[Family::U1, Family::U2, Family::U3, Family::U4]).dim(), 24);
        assert_eq!(family_span(&[Family::V1, Family::V2]).dim(), 8);
    }

    #[test]
    fn family_examples() {
        let b = family_matrix(Family::U2, &ints([1, 0, 0, 0, 0])).unwrap();
        assert_eq!(b[(0, 2)], int(1));
        assert_eq!(b[(1, 3)], int(3));
        assert_eq!(b[(2, 4)], int(6));
        assert!(family_matrix(Family::U4, &vec![int(0); 9]).unwrap().is_zero());
        let c = family_matrix(Family::U3, &ints([0, 0, 0, 1, 0, 0, 0])).unwrap();
        assert_eq!(c, Matrix::diagonal(&ints([1, -2, 0, 2, -1])));
        assert!(matches!(
            family_matrix(Family::U2, &ints([1, 2])),
            Err(Error::Arity { family: "U2", expected: 5, found: 2 })
        ));
    }

    #[test]
    fn affine_parse() {
        let e = AffineExpr::parse("-21/5*b1 + 3 - c4").unwrap();
        assert_eq!(e.constant, int(3));
        assert_eq!(e.linear[&1], rat::rat(-21, 5));
        assert_eq!(e.linear[&4], int(-1));
        assert_eq!(AffineExpr::parse("0").unwrap().eval(&[]), int(0));
    }

    #[test]
    fn decompose_examples() {
        let a0 = lie_matrices().a[0].clone();
        let d = decompose_sl5(&a0).unwrap();
        assert_eq!(d[&Family::U1], ints([1, 0, 0]));
        assert!(d[&Family::U2].iter().all(Zero::is_zero));
        assert!(matches!(decompose_sl5(&Matrix::identity(5)), Err(Error::NotTraceless)));
    }

    #[test]
    fn h_closure_is_h() {
        let h = h_image();
        assert_eq!(closure(&h).len(), 3);
    }
}
