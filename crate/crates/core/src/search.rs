//! Values of the cubic form `F_w` at primitive integer points, after a real
//! change of variables, and the bookkeeping that renders their density as a
//! coverage report.

use std::fmt;

use nalgebra::Matrix5;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{act_v, GroupElement};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pvs::{cubic_form, VElement};
use crate::rat::{self, Rat};
use crate::tensor::PAIRS;
use crate::wpoint::{q_matrix, s_generators, w_literal};

/// Where a [`RealTransform`] came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "name", rename_all = "snake_case")]
pub enum Provenance {
    Preset(String),
    File(String),
    ExactRational,
}

/// A real 5×5 matrix `g` acting on forms on `V₁` by `F ↦ F ∘ g⁻¹`.
#[derive(Clone)]
pub struct RealTransform {
    g1: Matrix5<f64>,
    inverse: Matrix5<f64>,
    exact: Option<Matrix>,
    provenance: Provenance,
}

pub const PRESETS: [&str; 2] = ["identity", "golden"];

/// Smallest `|det g|` accepted.
pub const MIN_ABS_DET: f64 = 1e-9;

impl RealTransform {
    pub fn from_rows(rows: [[f64; 5]; 5], provenance: Provenance) -> Result<Self> {
        let g1 = Matrix5::from_fn(|r, c| rows[r][c]);
        let det = g1.determinant();
        if !det.is_finite() || det.abs() <= MIN_ABS_DET {
            return Err(Error::Singular);
        }
        let inverse = g1.try_inverse().ok_or(Error::Singular)?;
        Ok(RealTransform {
            g1,
            inverse,
            exact: None,
            provenance,
        })
    }

    /// A rational matrix, kept alongside its float image for exact checks.
    pub fn from_exact(m: &Matrix) -> Result<Self> {
        if m.rows() != 5 || m.cols() != 5 {
            return Err(Error::DimensionMismatch("a transform of V1 is 5x5".into()));
        }
        let rows = std::array::from_fn(|r| std::array::from_fn(|c| rat::to_f64(&m[(r, c)])));
        let mut t = Self::from_rows(rows, Provenance::ExactRational)?;
        t.exact = Some(m.clone());
        Ok(t)
    }

    pub fn identity() -> Self {
        let mut t = Self::from_exact(&Matrix::identity(5)).expect("identity is invertible");
        t.provenance = Provenance::Preset("identity".into());
        t
    }

    /// `I + φE₀₁ + φ⁻¹E₂₃` with `φ = (1 + √5)/2`.
    pub fn golden() -> Self {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let mut rows = [[0.0; 5]; 5];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        rows[0][1] = phi;
        rows[2][3] = 1.0 / phi;
        Self::from_rows(rows, Provenance::Preset("golden".into())).expect("unipotent")
    }

    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "identity" => Ok(Self::identity()),
            "golden" => Ok(Self::golden()),
            _ => Err(Error::InvalidParameter(format!(
                "unknown preset {name:?}; expected one of {PRESETS:?}"
            ))),
        }
    }

    /// Parses `{"g1": [[...], ...]}`. Entries are JSON numbers, or strings
    /// `"p/q"`; when every entry is a string the transform is exact.
    pub fn from_json(text: &str, source: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Entry {
            Num(f64),
            Text(String),
        }
        #[derive(Deserialize)]
        struct File {
            g1: Vec<Vec<Entry>>,
        }
        let file: File = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.g1.len() != 5 || file.g1.iter().any(|r| r.len() != 5) {
            return Err(Error::DimensionMismatch("g1 must be 5x5".into()));
        }
        if file.g1.iter().flatten().all(|e| matches!(e, Entry::Text(_))) {
            let mut rows = Vec::new();
            for r in &file.g1 {
                let mut row = Vec::new();
                for e in r {
                    if let Entry::Text(s) = e {
                        row.push(rat::parse(s)?);
                    }
                }
                rows.push(row);
            }
            let mut t = Self::from_exact(&Matrix::from_rows(rows)?)?;
            t.provenance = Provenance::File(source.into());
            return Ok(t);
        }
        let mut rows = [[0.0; 5]; 5];
        for (r, row) in file.g1.iter().enumerate() {
            for (c, e) in row.iter().enumerate() {
                rows[r][c] = match e {
                    Entry::Num(x) => *x,
                    Entry::Text(s) => s
                        .parse::<f64>()
                        .or_else(|_| rat::parse(s).map(|q| rat::to_f64(&q)))
                        .map_err(|_| Error::Parse(format!("bad matrix entry {s:?}")))?,
                };
            }
        }
        Self::from_rows(rows, Provenance::File(source.into()))
    }

    pub fn matrix(&self) -> [[f64; 5]; 5] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.g1[(r, c)]))
    }

    pub fn inverse_matrix(&self) -> [[f64; 5]; 5] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.inverse[(r, c)]))
    }

    pub fn exact(&self) -> Option<&Matrix> {
        self.exact.as_ref()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// `g⁻¹a`.
    pub fn pull_back(&self, a: &[i64; 5]) -> [f64; 5] {
        std::array::from_fn(|r| (0..5).map(|c| self.inverse[(r, c)] * a[c] as f64).sum())
    }

    /// `F(g⁻¹a)`.
    pub fn f_value(&self, a: &[i64; 5]) -> f64 {
        cubic_f64(&self.pull_back(a))
    }

    /// Plücker coordinates of `g[S] ⊂ ∧²V₁`.
    pub fn transported_s(&self) -> Vec<f64> {
        let alt = alt2_f64(&self.g1);
        let rows: Vec<[f64; 10]> = s_generators()
            .iter()
            .map(|t| {
                let v: Vec<f64> = t.coeffs().iter().map(rat::to_f64).collect();
                std::array::from_fn(|q| (0..10).map(|p| alt[q][p] * v[p]).sum())
            })
            .collect();
        crate::pvs::triples()
            .iter()
            .map(|&[a, b, c]| {
                let m = nalgebra::Matrix3::from_fn(|r, k| rows[r][[a, b, c][k]]);
                m.determinant()
            })
            .collect()
    }

    /// Upper-triangular entries of the matrix of `Q ∘ g⁻¹`.
    pub fn transported_q(&self) -> Vec<f64> {
        let q = q_matrix();
        let qf = Matrix5::from_fn(|r, c| rat::to_f64(&q[(r, c)]));
        let m = self.inverse.transpose() * qf * self.inverse;
        let mut out = Vec::new();
        for i in 0..5 {
            for j in i..5 {
                out.push(m[(i, j)]);
            }
        }
        out
    }
}

impl fmt::Debug for RealTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RealTransform")
            .field("g1", &self.matrix())
            .field("provenance", &self.provenance)
            .finish()
    }
}

/// `∧²g` in the [`PAIRS`] basis.
fn alt2_f64(g: &Matrix5<f64>) -> [[f64; 10]; 10] {
    let mut m = [[0.0; 10]; 10];
    for (p, &(i, j)) in PAIRS.iter().enumerate() {
        for (q, &(k, l)) in PAIRS.iter().enumerate() {
            m[q][p] = g[(k, i)] * g[(l, j)] - g[(l, i)] * g[(k, j)];
        }
    }
    m
}

/// `F_w(b) = 72b₀b₂b₄ + 9b₁b₂b₃ - 2b₂³ - 27b₀b₃² - 27b₁²b₄` in floats.
#[inline]
pub fn cubic_f64(b: &[f64; 5]) -> f64 {
    72.0 * b[0] * b[2] * b[4] + 9.0 * b[1] * b[2] * b[3]
        - 2.0 * b[2] * b[2] * b[2]
        - 27.0 * b[0] * b[3] * b[3]
        - 27.0 * b[1] * b[1] * b[4]
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Whether the entries of a nonzero vector have gcd 1.
pub fn is_primitive(a: &[i64; 5]) -> Result<bool> {
    if a.iter().all(|&x| x == 0) {
        return Err(Error::ZeroVector);
    }
    Ok(a.iter().fold(0, |g, &x| gcd(g, x)) == 1)
}

/// Output of [`construct_exact_value`].
#[derive(Debug, Clone)]
pub struct ExactValue {
    pub r: Rat,
    pub lambda: Rat,
    /// `t` when it is rational.
    pub t: Option<Rat>,
    pub t_f64: f64,
    /// `h = diag(t⁻¹, 1, t, 1, 1) × I₃` when `t` is rational.
    pub h: Option<GroupElement>,
    pub a: [i64; 5],
    /// `F_{h⁻¹(λw)}(a)`; exact when `t` is rational.
    pub value: Option<Rat>,
    pub value_f64: f64,
    pub holds: bool,
}

/// Relative tolerance of the floating branch of [`construct_exact_value`].
pub const FLOAT_TOLERANCE: f64 = 1e-9;

/// Builds `h` and `a = e₂` with `F_{h⁻¹(λw)}(a) = r`, taking
/// `t = -λ⁻¹²(r/2)^{1/3}`. When `t` is rational the value is recomputed
/// exactly through the cubic-form pipeline; otherwise it is checked in floats.
pub fn construct_exact_value(r: &Rat, lambda: &Rat) -> Result<ExactValue> {
    if r.is_zero() {
        return Err(Error::ZeroValue("r"));
    }
    if lambda.is_zero() {
        return Err(Error::ZeroValue("lambda"));
    }
    let a = [0, 0, 1, 0, 0];
    let half = r / rat::int(2);
    let lambda12 = num_traits::pow(lambda.clone(), 12);
    let lambda36 = num_traits::pow(lambda.clone(), 36);
    let t = rat::cube_root(&half).map(|c| -(c / &lambda12));
    match t {
        Some(t) => {
            let h1 = Matrix::diagonal(&[t.recip(), Rat::one(), t.clone(), Rat::one(), Rat::one()]);
            let h = GroupElement::new(h1, Matrix::identity(3))?;
            let x = act_v(&h.inverse(), &w_literal().scale(lambda));
            let e2: Vec<Rat> = a.iter().map(|&k| rat::int(k)).collect();
            let value = cubic_form(&x).eval_at(&e2);
            Ok(ExactValue {
                r: r.clone(),
                lambda: lambda.clone(),
                t_f64: rat::to_f64(&t),
                t: Some(t),
                h: Some(h),
                a,
                value_f64: rat::to_f64(&value),
                holds: &value == r,
                value: Some(value),
            })
        }
        None => {
            let rf = rat::to_f64(r);
            let lf = rat::to_f64(lambda);
            let t = -(rf / 2.0).cbrt() / lf.powi(12);
            let rows = std::array::from_fn(|i| {
                std::array::from_fn(|j| match (i, j) {
                    (0, 0) => 1.0 / t,
                    (2, 2) => t,
                    _ if i == j => 1.0,
                    _ => 0.0,
                })
            });
            let h = RealTransform::from_rows(rows, Provenance::Preset("construction".into()))?;
            let value = rat::to_f64(&lambda36) * cubic_f64(&apply(&h.g1, &a));
            Ok(ExactValue {
                r: r.clone(),
                lambda: lambda.clone(),
                t: None,
                t_f64: t,
                h: None,
                a,
                value: None,
                value_f64: value,
                holds: ((value - rf) / rf).abs() <= FLOAT_TOLERANCE,
            })
        }
    }
}

fn apply(g: &Matrix5<f64>, a: &[i64; 5]) -> [f64; 5] {
    std::array::from_fn(|r| (0..5).map(|c| g[(r, c)] * a[c] as f64).sum())
}

/// Parameters of a box search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchParams {
    /// Box radius `N` in the max norm.
    pub box_radius: i64,
    /// Histogram range `[-R, R)`.
    pub range: f64,
    /// Bin width.
    pub eps: f64,
    /// Values with `|F| <= zero_tol` count as zero for the minimum.
    pub zero_tol: f64,
}

pub const DEFAULT_ZERO_TOL: f64 = 1e-9;

/// Most histogram bins a search will allocate.
pub const MAX_BINS: usize = 10_000_000;

impl SearchParams {
    pub fn new(box_radius: i64, range: f64, eps: f64) -> Self {
        SearchParams {
            box_radius,
            range,
            eps,
            zero_tol: DEFAULT_ZERO_TOL,
        }
    }

    pub fn bins(&self) -> usize {
        (2.0 * self.range / self.eps).ceil() as usize
    }

    fn validate(&self) -> Result<()> {
        if self.box_radius < 1 {
            return Err(Error::InvalidParameter("box radius must be at least 1".into()));
        }
        if !(self.range > 0.0 && self.range.is_finite()) {
            return Err(Error::InvalidParameter("range must be positive".into()));
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(Error::InvalidParameter("eps must be positive".into()));
        }
        if self.bins() > MAX_BINS {
            return Err(Error::InvalidParameter(format!(
                "2R/eps = {} bins exceeds {MAX_BINS}",
                self.bins()
            )));
        }
        Ok(())
    }

    /// Bin of `v`: `k` with `v ∈ [-R + kε, -R + (k+1)ε)`.
    fn bin(&self, v: f64) -> Option<usize> {
        if !(v >= -self.range && v < self.range) {
            return None;
        }
        let k = ((v + self.range) / self.eps).floor() as usize;
        (k < self.bins()).then_some(k)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub a: [i64; 5],
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bin {
    pub lo: f64,
    pub hi: f64,
    pub count: u64,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub transform: Provenance,
    pub g1: [[f64; 5]; 5],
    #[serde(flatten)]
    pub search: SearchParams,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub params: ReportParams,
    /// Primitive points in the box, counting `a` and `-a` separately.
    pub point_count: u64,
    pub histogram: Vec<Bin>,
    pub min_abs_nonzero: Option<f64>,
    /// Fraction of bins with a nonzero count.
    pub coverage: f64,
}

struct Partial {
    points: u64,
    counts: Vec<u64>,
    witnesses: Vec<Option<Witness>>,
    min_abs: Option<f64>,
}

impl Partial {
    fn new(bins: usize) -> Self {
        Partial {
            points: 0,
            counts: vec![0; bins],
            witnesses: vec![None; bins],
            min_abs: None,
        }
    }

    fn record(&mut self, params: &SearchParams, a: [i64; 5], v: f64) {
        self.points += 1;
        if v.abs() > params.zero_tol {
            self.min_abs = Some(self.min_abs.map_or(v.abs(), |m| m.min(v.abs())));
        }
        if let Some(k) = params.bin(v) {
            self.counts[k] += 1;
            if self.witnesses[k].is_none() {
                self.witnesses[k] = Some(Witness { a, value: v });
            }
        }
    }

    fn merge(&mut self, other: Partial) {
        self.points += other.points;
        for (c, o) in self.counts.iter_mut().zip(other.counts) {
            *c += o;
        }
        for (w, o) in self.witnesses.iter_mut().zip(other.witnesses) {
            if w.is_none() {
                *w = o;
            }
        }
        self.min_abs = match (self.min_abs, other.min_abs) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// The prefixes `(a₀, a₁)` of sign representatives, in lexicographic order.
fn work_items(n: i64) -> Vec<(i64, i64)> {
    let mut items = Vec::new();
    for a0 in 0..=n {
        let lo = if a0 == 0 { 0 } else { -n };
        for a1 in lo..=n {
            items.push((a0, a1));
        }
    }
    items
}

/// Visits every primitive `a` with `|a|∞ <= N` whose first nonzero entry is
/// positive and prefix `(a₀, a₁)`, in lexicographic order, with `F(g⁻¹a)`.
fn scan_prefix(g: &RealTransform, n: i64, (a0, a1): (i64, i64), mut visit: impl FnMut([i64; 5], f64)) {
    let col = |c: usize| -> [f64; 5] { std::array::from_fn(|r| g.inverse[(r, c)]) };
    let (c2, c3, c4) = (col(2), col(3), col(4));
    let base: [f64; 5] = std::array::from_fn(|r| g.inverse[(r, 0)] * a0 as f64 + g.inverse[(r, 1)] * a1 as f64);
    let g01 = gcd(a0, a1);
    let lead_zero = a0 == 0 && a1 == 0;
    for a2 in -n..=n {
        if lead_zero && a2 < 0 {
            continue;
        }
        let g012 = gcd(g01, a2);
        let b2: [f64; 5] = std::array::from_fn(|r| base[r] + c2[r] * a2 as f64);
        for a3 in -n..=n {
            if lead_zero && a2 == 0 && a3 < 0 {
                continue;
            }
            let g0123 = gcd(g012, a3);
            let b3: [f64; 5] = std::array::from_fn(|r| b2[r] + c3[r] * a3 as f64);
            for a4 in -n..=n {
                if lead_zero && a2 == 0 && a3 == 0 && a4 <= 0 {
                    continue;
                }
                if gcd(g0123, a4) != 1 {
                    continue;
                }
                let b: [f64; 5] = std::array::from_fn(|r| b3[r] + c4[r] * a4 as f64);
                visit([a0, a1, a2, a3, a4], cubic_f64(&b));
            }
        }
    }
}

/// Calls `visit(a, F(g⁻¹a))` on every sign representative in the box, in
/// lexicographic order.
pub fn for_each_representative(g: &RealTransform, n: i64, mut visit: impl FnMut([i64; 5], f64)) {
    for item in work_items(n) {
        scan_prefix(g, n, item, &mut visit);
    }
}

/// Runs the box search on a pool of `workers` threads. The report does not
/// depend on `workers`.
pub fn search(g: &RealTransform, params: &SearchParams, workers: usize) -> Result<SearchReport> {
    params.validate()?;
    let bins = params.bins();
    let n = params.box_radius;
    let process = |item: &(i64, i64)| {
        let mut part = Partial::new(bins);
        scan_prefix(g, n, *item, |a, v| {
            part.record(params, a, v);
            part.record(params, a.map(|x| -x), -v);
        });
        part
    };
    let items = work_items(n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(e.to_string()))?;
    let parts: Vec<Partial> = pool.install(|| items.par_iter().map(process).collect());
    let mut total = Partial::new(bins);
    for p in parts {
        total.merge(p);
    }
    let histogram: Vec<Bin> = total
        .counts
        .iter()
        .zip(total.witnesses)
        .enumerate()
        .map(|(k, (&count, witness))| Bin {
            lo: -params.range + k as f64 * params.eps,
            hi: (-params.range + (k + 1) as f64 * params.eps).min(params.range),
            count,
            witness,
        })
        .collect();
    let hit = histogram.iter().filter(|b| b.count > 0).count();
    Ok(SearchReport {
        params: ReportParams {
            transform: g.provenance.clone(),
            g1: g.matrix(),
            search: params.clone(),
        },
        point_count: total.points,
        coverage: hit as f64 / bins as f64,
        histogram,
        min_abs_nonzero: total.min_abs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    RationalLooking,
    IrrationalLooking,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::RationalLooking => "rational-looking",
            Verdict::IrrationalLooking => "irrational-looking",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordinateEvidence {
    pub index: usize,
    pub normalized: f64,
    /// Best convergent `p/q` with `q` within the bound.
    pub p: i64,
    pub q: i64,
    pub error: f64,
    pub rational: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub verdict: Verdict,
    pub heuristic: bool,
    pub denominator_bound: i64,
    pub evidence: Vec<CoordinateEvidence>,
}

pub const DEFAULT_DENOMINATOR_BOUND: i64 = 1_000_000;

/// A convergent `p/q` is accepted when `|x - p/q| <= ABS_TOL` and
/// `|x - p/q|·q² <= SCALED_TOL`.
const ABS_TOL: f64 = 1e-12;
const SCALED_TOL: f64 = 1e-3;

/// Continued-fraction convergents of `x` with denominators up to `bound`;
/// returns the first accepted one, or the last one tried.
fn best_convergent(x: f64, bound: i64) -> (i64, i64, f64, bool) {
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut y = x;
    let mut best = (0, 1, x.abs(), x.abs() <= ABS_TOL);
    if best.3 {
        return best;
    }
    for _ in 0..64 {
        let a = y.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        if k2 > bound as i128 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let err = (x - h2 as f64 / k2 as f64).abs();
        let ok = err <= ABS_TOL && err * (k2 as f64) * (k2 as f64) <= SCALED_TOL;
        best = (h2 as i64, k2 as i64, err, ok);
        if ok {
            break;
        }
        let frac = y - a;
        if frac == 0.0 {
            break;
        }
        y = 1.0 / frac;
    }
    best
}

/// Heuristic test for whether a projective point has rational coordinates:
/// divides by the coordinate of largest modulus and looks for small-denominator
/// convergents of every ratio.
pub fn rationality_probe(coords: &[f64], denominator_bound: i64) -> Result<ProbeReport> {
    let scale = coords
        .iter()
        .copied()
        .max_by(|a, b| a.abs().total_cmp(&b.abs()))
        .filter(|m| *m != 0.0)
        .ok_or(Error::ZeroVector)?;
    let evidence: Vec<CoordinateEvidence> = coords
        .iter()
        .enumerate()
        .map(|(index, &c)| {
            let x = c / scale;
            let (p, q, error, rational) = best_convergent(x, denominator_bound);
            CoordinateEvidence {
                index,
                normalized: x,
                p,
                q,
                error,
                rational,
            }
        })
        .collect();
    let verdict = if evidence.iter().all(|e| e.rational) {
        Verdict::RationalLooking
    } else {
        Verdict::IrrationalLooking
    };
    Ok(ProbeReport {
        verdict,
        heuristic: true,
        denominator_bound,
        evidence,
    })
}

/// Exact value of `(g·F_w)(a) = F_w(g⁻¹a)` for a rational transform.
pub fn exact_f_value(g: &Matrix, a: &[i64; 5]) -> Result<Rat> {
    let inv = g.inverse()?;
    let v: Vec<Rat> = a.iter().map(|&k| rat::int(k)).collect();
    Ok(cubic_form(&w_literal()).eval_at(&inv.mul_vec(&v)))
}

/// Exact `F_x(a)` for any `x ∈ V`.
pub fn f_at(x: &VElement, a: &[i64; 5]) -> Rat {
    let v: Vec<Rat> = a.iter().map(|&k| rat::int(k)).collect();
    cubic_form(x).eval_at(&v)
}

/// Whether a float value is an integer.
pub fn is_integral(v: f64) -> bool {
    v.fract() == 0.0
}
