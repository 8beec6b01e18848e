//! Dense matrices over an exact field.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::field::Field;

/// Row-major dense matrix. `entries.len() == rows * cols` always.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, entries: Vec<F>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count does not match shape");
        Matrix { rows, cols, entries }
    }

    /// Builds a matrix from row vectors; `cols` is needed when `rows` is empty.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r);
        }
        Matrix { rows: n, cols, entries }
    }

    pub fn from_i64(rows: usize, cols: usize, values: &[i64]) -> Self {
        Self::from_vec(rows, cols, values.iter().map(|&v| F::from_integer(v)).collect())
    }

    pub fn diagonal(values: &[F]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, v) in values.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(F::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    let slot = &mut out[(i, j)];
                    *slot = slot.clone() + prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Matrix<F> {
        self.add(&rhs.scale(&-F::one()))
    }

    pub fn scale(&self, c: &F) -> Matrix<F> {
        let entries = self.entries.iter().map(|a| a.clone() * c.clone()).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    /// Stacks `blocks` vertically; all must share the column count `cols`.
    pub fn vstack(cols: usize, blocks: &[Matrix<F>]) -> Matrix<F> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            rows += b.rows;
            entries.extend(b.entries.iter().cloned());
        }
        Matrix { rows, cols, entries }
    }

    /// Appends `v` as an extra column.
    pub fn with_column(&self, v: &[F]) -> Matrix<F> {
        assert_eq!(v.len(), self.rows);
        let mut entries = Vec::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            entries.extend(self.row(i).iter().cloned());
            entries.push(v[i].clone());
        }
        Matrix { rows: self.rows, cols: self.cols + 1, entries }
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn truncate_rows(&mut self, n: usize) {
        self.rows = n;
        self.entries.truncate(n * self.cols);
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;

    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| format!("{:?}", self.entries[i * self.cols + j]))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::<Scalar>::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]);
        let b = a.transpose();
        let p = a.mul(&b);
        assert_eq!(p, Matrix::from_i64(2, 2, &[14, 32, 32, 77]));
        assert!(p.is_symmetric());
        assert_eq!(p.trace(), Scalar::integer(91));
    }

    #[test]
    fn stacking() {
        let a = Matrix::<Scalar>::identity(2);
        let s = Matrix::vstack(2, &[a.clone(), a.scale(&Scalar::integer(3))]);
        assert_eq!(s.rows(), 4);
        assert_eq!(s[(3, 1)], Scalar::integer(3));
        let c = a.with_column(&[Scalar::integer(5), Scalar::integer(6)]);
        assert_eq!(c.column(2), vec![Scalar::integer(5), Scalar::integer(6)]);
    }
}
