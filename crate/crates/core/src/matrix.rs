// Copyright 2026 The photonsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! A small dense complex matrix, sized for optical components.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut, Mul};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance used when checking that a component matrix is unitary.
pub const UNITARY_TOL: f64 = 1e-9;

/// Dense row-major complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build a matrix from rows. All rows must have the same length.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidSpec("ragged matrix rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().copied()).collect();
        Ok(CMatrix { rows: n, cols: m, data })
    }

    /// Build a square matrix from a fixed array of rows.
    pub fn from_array<const N: usize>(a: [[Complex64; N]; N]) -> Self {
        let data = a.iter().flat_map(|r| r.iter().copied()).collect();
        CMatrix { rows: N, cols: N, data }
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(d: &[Complex64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
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

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].conj();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)];
            }
        }
        m
    }

    pub fn scale(&self, s: Complex64) -> Self {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * s).collect() }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &CMatrix) -> Self {
        let mut m = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        m
    }

    /// Largest absolute entry of `self - other`; infinite on shape mismatch.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        if self.rows != other.rows || self.cols != other.cols {
            return f64::INFINITY;
        }
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }

    /// Largest absolute entry of `U^† U - I`.
    pub fn unitarity_deviation(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        (&self.adjoint() * self).max_abs_diff(&Self::identity(self.rows))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.unitarity_deviation() <= tol
    }

    /// Fail with [`Error::NotUnitary`] unless the deviation is within `tol`.
    pub fn check_unitary(&self, tol: f64) -> Result<()> {
        if !self.is_square() {
            return Err(Error::InvalidSpec("matrix is not square".into()));
        }
        let deviation = self.unitarity_deviation();
        if deviation <= tol {
            Ok(())
        } else {
            Err(Error::NotUnitary { deviation })
        }
    }

    /// True if the row and column `i` coincide with those of the identity.
    pub fn is_identity_at(&self, i: usize, tol: f64) -> bool {
        (0..self.rows).all(|k| {
            let e = if k == i { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
            (self[(i, k)] - e).norm() <= tol && (self[(k, i)] - e).norm() <= tol
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Sub-matrix with the given row and column indices; repeats allowed.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)];
            }
        }
        m
    }

    /// Embed `self` into an `n`-dimensional identity at the given indices.
    pub fn embed(&self, n: usize, at: &[usize]) -> Self {
        let mut m = Self::identity(n);
        for &i in at {
            m[(i, i)] = Complex64::new(0.0, 0.0);
        }
        for (a, &i) in at.iter().enumerate() {
            for (b, &j) in at.iter().enumerate() {
                m[(i, j)] = self[(a, b)];
            }
        }
        m
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not match");
        let mut m = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_is_unitary() {
        assert!(CMatrix::identity(5).is_unitary(1e-15));
    }

    #[test]
    fn non_unitary_reports_deviation() {
        let m = CMatrix::from_array([[c(1.0, 0.0), c(1.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]]);
        match m.check_unitary(1e-9) {
            Err(Error::NotUnitary { deviation }) => assert!(deviation >= 1.0),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn embed_and_select_roundtrip() {
        let x = CMatrix::from_array([[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]]);
        let e = x.embed(4, &[3, 1]);
        assert_eq!(e[(3, 1)], c(1.0, 0.0));
        assert_eq!(e[(0, 0)], c(1.0, 0.0));
        assert_eq!(e.select(&[3, 1], &[3, 1]), x);
        assert!(e.is_identity_at(0, 0.0) && e.is_identity_at(2, 0.0));
        assert!(!e.is_identity_at(1, 0.0));
    }

    #[test]
    fn kron_shape() {
        let k = CMatrix::identity(2).kron(&CMatrix::identity(3));
        assert_eq!(k, CMatrix::identity(6));
    }
}
