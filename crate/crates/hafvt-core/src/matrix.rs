//! Dense row-major matrix over `f64`.
//!
//! Small and allocation-friendly on purpose: every shape in this model is
//! desk-scale (catalogs of hundreds of items, sequences of tens of events),
//! so plain `Vec<f64>` loops beat pulling in a linear-algebra stack.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense matrix, row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    /// All-zeros matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Build from row-major data; the length must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "matrix data length {} does not match {}x{}",
                data.len(),
                rows,
                cols
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Build from explicit rows (test and small-fixture helper).
    pub fn from_rows(rows: &[&[f64]]) -> Result<Self> {
        let n = rows.len();
        let d = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(n * d);
        for r in rows {
            if r.len() != d {
                return Err(Error::Dimension(String::from("ragged rows")));
            }
            data.extend_from_slice(r);
        }
        Ok(Self {
            rows: n,
            cols: d,
            data,
        })
    }

    /// Identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: f64) {
        self.data[r * self.cols + c] = v;
    }

    /// Borrow row `r` as a slice.
    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    /// True when every entry is finite.
    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    /// `self * other`, or `self * other^T` when `transpose_b` is set.
    pub fn matmul(&self, other: &Matrix, transpose_b: bool) -> Result<Matrix> {
        let (bk, bn) = if transpose_b {
            (other.cols, other.rows)
        } else {
            (other.rows, other.cols)
        };
        if self.cols != bk {
            return Err(Error::Dimension(format!(
                "matmul {}x{} by {}x{}{}",
                self.rows,
                self.cols,
                other.rows,
                other.cols,
                if transpose_b { " (transposed)" } else { "" }
            )));
        }
        let mut out = Matrix::zeros(self.rows, bn);
        for i in 0..self.rows {
            let a_row = self.row(i);
            let out_row = out.row_mut(i);
            if transpose_b {
                for (j, o) in out_row.iter_mut().enumerate() {
                    let b_row = other.row(j);
                    let mut sum = 0.0;
                    for k in 0..bk {
                        sum += a_row[k] * b_row[k];
                    }
                    *o = sum;
                }
            } else {
                for (k, &a) in a_row.iter().enumerate() {
                    if a == 0.0 {
                        continue;
                    }
                    let b_row = other.row(k);
                    for j in 0..bn {
                        out_row[j] += a * b_row[j];
                    }
                }
            }
        }
        Ok(out)
    }

    /// New matrix whose row `t` is `self`'s row `indices[t]`.
    pub fn gather_rows(&self, indices: &[usize]) -> Result<Matrix> {
        let mut out = Matrix::zeros(indices.len(), self.cols);
        for (t, &idx) in indices.iter().enumerate() {
            if idx >= self.rows {
                return Err(Error::Index(format!(
                    "gather index {} out of range for {} rows",
                    idx, self.rows
                )));
            }
            out.row_mut(t).copy_from_slice(self.row(idx));
        }
        Ok(out)
    }

    /// Adds row `t` of `src` into row `indices[t]` of `self`.
    /// Adjoint of [`gather_rows`](Self::gather_rows); repeated indices accumulate.
    pub fn scatter_add_rows(&mut self, indices: &[usize], src: &Matrix) -> Result<()> {
        if src.rows != indices.len() || src.cols != self.cols {
            return Err(Error::Dimension(String::from("scatter shape mismatch")));
        }
        for (t, &idx) in indices.iter().enumerate() {
            if idx >= self.rows {
                return Err(Error::Index(format!(
                    "scatter index {} out of range for {} rows",
                    idx, self.rows
                )));
            }
            let row = self.row_mut(idx);
            for (o, &s) in row.iter_mut().zip(src.row(t)) {
                *o += s;
            }
        }
        Ok(())
    }

    /// `self += c * other` elementwise.
    pub fn add_scaled_assign(&mut self, other: &Matrix, c: f64) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "add {}x{} to {}x{}",
                other.rows, other.cols, self.rows, self.cols
            )));
        }
        for (o, &s) in self.data.iter_mut().zip(&other.data) {
            *o += c * s;
        }
        Ok(())
    }

    pub fn scale_assign(&mut self, c: f64) {
        for v in &mut self.data {
            *v *= c;
        }
    }

    /// Sum of squared entries.
    pub fn sum_squares(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }
}
