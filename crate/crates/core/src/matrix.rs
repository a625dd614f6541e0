//! Dense matrices over an exact field, with exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|x| x.to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from integer rows.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn row_vector(v: Vec<F>) -> Self {
        Matrix {
            rows: 1,
            cols: v.len(),
            data: v,
        }
    }

    pub fn column_vector(v: Vec<F>) -> Self {
        Matrix {
            rows: v.len(),
            cols: 1,
            data: v,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Iterator over `(row, col, value)` for the nonzero entries.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &F)> + '_ {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx].add_assign(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix product; panics on a dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a.add(b)).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.mul(s)).collect(),
        }
    }

    /// Kronecker product.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for (i, j, a) in self.nonzeros() {
            for (k, l, b) in rhs.nonzeros() {
                out.set(i * rhs.rows + k, j * rhs.cols + l, a.mul(b));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![F::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, a) in self.row(i).iter().enumerate() {
                if !a.is_zero() {
                    out[j].add_assign(&x.mul(a));
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Maps every entry into another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<Matrix<G>, E> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>, E>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Rank by exact Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce()
    }

    /// In-place reduction to reduced row echelon form; returns the rank.
    fn row_reduce(&mut self) -> usize {
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let Some(pivot) = (rank..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(rank, pivot);
            let inv = self.get(rank, col).inv().expect("nonzero pivot");
            for j in col..self.cols {
                let v = self.get(rank, j).mul(&inv);
                self.set(rank, j, v);
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in col..self.cols {
                    let p = self.get(rank, j);
                    if p.is_zero() {
                        continue;
                    }
                    let v = self.get(r, j).sub(&factor.mul(p));
                    self.set(r, j, v);
                }
            }
            rank += 1;
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        aug.row_reduce();
        for i in 0..n {
            if !aug.get(i, i).is_one() {
                return None;
            }
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(aug.select(&rows, &cols))
    }

    /// Solves `self * x = rhs` exactly.
    pub fn solve(&self, rhs: &[F]) -> Solution<F> {
        assert_eq!(rhs.len(), self.rows);
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n, rhs[i].clone());
        }
        let rank = aug.row_reduce();
        // A pivot in the augmented column means no solution.
        for r in 0..rank {
            let lead = (0..=n).find(|&j| !aug.get(r, j).is_zero());
            if lead == Some(n) {
                return Solution::Inconsistent;
            }
        }
        if rank < n {
            return Solution::Underdetermined { rank };
        }
        Solution::Unique((0..n).map(|i| aug.get(i, n).clone()).collect())
    }
}

/// Outcome of an exact linear solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    Inconsistent,
    Underdetermined { rank: usize },
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    assert_eq!(a.len(), b.len());
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc.add_assign(&x.mul(y));
        }
    }
    acc
}

/// Incrementally maintained basis of a subspace of `F^n`.
///
/// Vectors are inserted in order; each inserted vector becomes a basis element
/// unless it already lies in the span. The echelon rows keep, next to each
/// reduced row, its coefficients over the inserted basis vectors, so any vector
/// of the span can be expressed in basis coordinates.
#[derive(Clone, Debug)]
pub struct SpanBasis<F> {
    dim: usize,
    basis: Vec<Vec<F>>,
    echelon: Vec<EchelonRow<F>>,
}

#[derive(Clone, Debug)]
struct EchelonRow<F> {
    pivot: usize,
    row: Vec<F>,
    coeffs: Vec<F>,
}

impl<F: Field> SpanBasis<F> {
    pub fn new(dim: usize) -> Self {
        SpanBasis {
            dim,
            basis: Vec::new(),
            echelon: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<F>] {
        &self.basis
    }

    /// Reduces `v` against the echelon rows. Returns the residual and the
    /// coefficients (over the basis) of the part that was removed.
    fn reduce(&self, v: &[F]) -> (Vec<F>, Vec<F>) {
        assert_eq!(v.len(), self.dim);
        let mut residual = v.to_vec();
        let mut combo = vec![F::zero(); self.basis.len()];
        for e in &self.echelon {
            let x = &residual[e.pivot];
            if x.is_zero() {
                continue;
            }
            let factor = x.mul(&e.row[e.pivot].inv().expect("pivot nonzero"));
            for (r, a) in residual.iter_mut().zip(&e.row) {
                if !a.is_zero() {
                    *r = r.sub(&factor.mul(a));
                }
            }
            for (c, a) in combo.iter_mut().zip(&e.coeffs) {
                if !a.is_zero() {
                    c.add_assign(&factor.mul(a));
                }
            }
        }
        (residual, combo)
    }

    /// Coordinates of `v` over the basis, or `None` when `v` is outside the span.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let (residual, combo) = self.reduce(v);
        residual.iter().all(F::is_zero).then_some(combo)
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Inserts `v`; returns its basis index when it was independent.
    pub fn insert(&mut self, v: Vec<F>) -> Option<usize> {
        let (residual, combo) = self.reduce(&v);
        let pivot = residual.iter().position(|x| !x.is_zero())?;
        let idx = self.basis.len();
        let mut coeffs: Vec<F> = combo.iter().map(F::neg).collect();
        coeffs.push(F::one());
        for e in &mut self.echelon {
            e.coeffs.push(F::zero());
        }
        self.echelon.push(EchelonRow {
            pivot,
            row: residual,
            coeffs,
        });
        self.basis.push(v);
        Some(idx)
    }
}
