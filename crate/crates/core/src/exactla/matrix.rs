use std::fmt;
use std::ops::Deref;

use super::scalar::{Field, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// A coordinate vector over an exact field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(field: Field, n: usize) -> Self {
        Vector(vec![field.zero(); n])
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.0[i] = field.one();
        v
    }

    pub fn from_i64(field: Field, coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn into_inner(self) -> Vec<Scalar> {
        self.0
    }

    pub fn as_mut_slice(&mut self) -> &mut [Scalar] {
        &mut self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.0.iter().position(|x| !x.is_zero())
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.iter().zip(other.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.len(), other.len());
        Vector(self.iter().zip(other.iter()).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector(self.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.iter().map(|a| -a).collect())
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Scalar, other: &Vector) {
        if s.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other.iter()) {
            if !b.is_zero() {
                *a += &(s * b);
            }
        }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        let mut acc = self[0].field().zero();
        for (a, b) in self.iter().zip(other.iter()) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }
}

impl Deref for Vector {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", x.to_literal())?;
        }
        write!(f, ")")
    }
}

/// A dense row-major matrix whose entries all lie in one field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from rows, rejecting ragged input and entries from
    /// another field.
    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Dimension("ragged matrix rows".into()));
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::InvalidField(format!(
                        "entry {x} is not in {field}"
                    )));
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Self::from_rows(field, rows).expect("well-formed integer matrix")
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, nrows: usize, cols: &[Vector]) -> Self {
        let mut m = Self::zeros(field, nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..nrows {
                m.set(i, j, c[i].clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        debug_assert_eq!(x.field(), self.field);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vector(&self, i: usize) -> Vector {
        Vector::new(self.row(i).to_vec())
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "{}x{} matrix applied to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(Vector::new(
            (0..self.rows)
                .map(|i| {
                    let mut acc = self.field.zero();
                    for (a, b) in self.row(i).iter().zip(v) {
                        if !a.is_zero() && !b.is_zero() {
                            acc += &(a * b);
                        }
                    }
                    acc
                })
                .collect(),
        ))
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Dimension("matrix shapes differ".into()));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `self - lambda * I`
    pub fn shift(&self, lambda: &Scalar) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let d = m.get(i, i) - lambda;
            m.set(i, i, d);
        }
        m
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(field: Field, cols: usize, blocks: &[Matrix]) -> Result<Matrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::Dimension("vstack column mismatch".into()));
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    /// Reduced row-echelon form with leftmost-nonzero pivoting, together with
    /// the pivot columns.
    pub fn rref_with_pivots(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pj = m.get(r, j);
                    if pj.is_zero() {
                        continue;
                    }
                    let x = m.get(i, j) - &(&factor * pj);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, self.field.one());
        }
        let (r, pivots) = aug.rref_with_pivots();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{}", self.row_vector(i))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form. Entries share one field by construction of
/// [`Matrix`], so this cannot fail.
pub fn rref(m: &Matrix) -> Matrix {
    m.rref_with_pivots().0
}

/// Exact null space `{ v : m v = 0 }`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref_with_pivots();
    let n = m.ncols();
    let field = m.field();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|free| {
        let mut v = Vector::zeros(field, n);
        v.as_mut_slice()[free] = field.one();
        for (row, &p) in pivots.iter().enumerate() {
            v.as_mut_slice()[p] = -r.get(row, free);
        }
        v
    });
    Subspace::from_vectors(field, n, vectors).expect("kernel vectors have ambient length")
}

/// Result of [`solve_linear`]: the solution set is `particular + kernel`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Option<Vector>,
    pub kernel: Subspace,
}

impl LinearSolution {
    pub fn is_solvable(&self) -> bool {
        self.particular.is_some()
    }
}

/// Solves `a x = b` exactly.
pub fn solve_linear(a: &Matrix, b: &[Scalar]) -> Result<LinearSolution> {
    if b.len() != a.nrows() {
        return Err(Error::Dimension(format!(
            "right-hand side has length {}, matrix has {} rows",
            b.len(),
            a.nrows()
        )));
    }
    let field = a.field();
    let n = a.ncols();
    let mut aug = Matrix::zeros(field, a.nrows(), n + 1);
    for (i, bi) in b.iter().enumerate() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        if bi.field() != field {
            return Err(Error::InvalidField("right-hand side field".into()));
        }
        aug.set(i, n, bi.clone());
    }
    let (r, pivots) = aug.rref_with_pivots();
    let particular = if pivots.last() == Some(&n) {
        None
    } else {
        let mut x = Vector::zeros(field, n);
        for (row, &p) in pivots.iter().enumerate() {
            x.as_mut_slice()[p] = r.get(row, n).clone();
        }
        Some(x)
    };
    Ok(LinearSolution {
        particular,
        kernel: kernel(a),
    })
}
