//! Dense matrices over [`Rat`] with exact elimination.
//!
//! Row reduction runs fraction-free: each row is scaled to integers and
//! eliminated with Bareiss updates, so every intermediate division is exact.
//! Rank and kernel decisions therefore carry no tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::{self, Rat, RatText};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        Self::identity(n).scale(c)
    }

    pub fn diagonal(d: &[Rat]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, v) in d.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Small-integer literal, mostly for tests and constant tables.
    pub fn from_ints<const R: usize, const C: usize>(rows: [[i64; C]; R]) -> Self {
        Self::from_fn(R, C, |r, c| rat::int(rows[r][c]))
    }

    pub fn from_elementary(n: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(r, c)] = Rat::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rat] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> Rat {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Self::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }
        let (mut m, scale) = integer_rows(&self.to_rows());
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Rat::zero();
            };
            if p != k {
                m.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let d = Rat::new(m[n - 1][n - 1].clone(), scale);
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                Rat::one()
            } else {
                Rat::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (mut m, _) = integer_rows(&self.to_rows());
        let pivots = bareiss_echelon(&mut m, self.cols);
        // Back-substitute in rationals; the echelon rows are already integral.
        let mut out: Vec<Vec<Rat>> = m
            .into_iter()
            .take(pivots.len())
            .map(|row| row.into_iter().map(Rat::from_integer).collect())
            .collect();
        for (i, &pc) in pivots.iter().enumerate().rev() {
            let p = out[i][pc].clone();
            for v in out[i].iter_mut() {
                *v = &*v / &p;
            }
            for k in 0..i {
                let f = out[k][pc].clone();
                if f.is_zero() {
                    continue;
                }
                for c in pc..self.cols {
                    let d = &f * &out[i][c];
                    out[k][c] -= d;
                }
            }
        }
        while out.len() < self.rows {
            out.push(vec![Rat::zero(); self.cols]);
        }
        (
            Matrix::from_rows(out).unwrap_or_else(|_| Matrix::zeros(self.rows, self.cols)),
            pivots,
        )
    }

    pub fn rank(&self) -> usize {
        let (mut m, _) = integer_rows(&self.to_rows());
        bareiss_echelon(&mut m, self.cols).len()
    }

    /// A solution of `self * x = b`, if one exists; free variables are zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = -red[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn to_text(&self) -> Vec<Vec<RatText>> {
        (0..self.rows).map(|r| rat::to_text_vec(self.row(r))).collect()
    }

    pub fn from_text(rows: Vec<Vec<RatText>>) -> Result<Matrix> {
        Matrix::from_rows(rows.into_iter().map(rat::from_text_vec).collect())
    }
}

/// Scales each row to integers; returns the rows and the product of the
/// scale factors used.
fn integer_rows(rows: &[Vec<Rat>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let out = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            total *= &l;
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    (out, total)
}

/// Fraction-free forward elimination in place. Returns pivot columns; the
/// first `pivots.len()` rows hold the echelon form.
fn bareiss_echelon(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rat;
    fn index(&self, (r, c): (usize, usize)) -> &Rat {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

/// Incrementally maintained row-echelon basis of a subspace of `Rat^n`.
#[derive(Clone, Debug, Default)]
pub struct Span {
    dim: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span {
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<V: AsRef<[Rat]>>(dim: usize, vs: impl IntoIterator<Item = V>) -> Self {
        let mut s = Span::new(dim);
        for v in vs {
            s.insert(v.as_ref());
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, y) in v.iter_mut().zip(row).skip(p) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.dim, "span ambient dimension mismatch");
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for x in r.iter_mut() {
            *x = &*x / &lead;
        }
        // Keep the basis fully reduced so membership tests stay one pass.
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        true
    }

    pub fn contains_span(&self, other: &Span) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn same_as(&self, other: &Span) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }
}
