//! Minimal dense matrix support for linear operators.
//!
//! Only the products actually used on the solver path live here; instance
//! generation and spectral tooling build on top in the problems crate.

use crate::error::{CoreError, CoreResult};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Dense row-major square-or-rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<F: Scalar> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> DenseMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> CoreResult<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(CoreError::DimensionMismatch {
                    expected: c,
                    got: row.len(),
                });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(CoreError::NonFinite {
                    context: "matrix construction",
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn matvec(&self, x: &Vector<F>) -> CoreResult<Vector<F>> {
        x.check_dim(self.cols)?;
        let xs = x.as_slice();
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let mut acc = F::zero();
            for (a, b) in row.iter().zip(xs) {
                acc = acc + *a * *b;
            }
            out.push(acc);
        }
        Vector::new(out)
    }

    /// `Mᵀ x` without materializing the transpose.
    pub fn t_matvec(&self, x: &Vector<F>) -> CoreResult<Vector<F>> {
        x.check_dim(self.rows)?;
        let xs = x.as_slice();
        let mut out = vec![F::zero(); self.cols];
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let xi = xs[i];
            for (o, a) in out.iter_mut().zip(row) {
                *o = *o + *a * xi;
            }
        }
        Vector::new(out)
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, c: F, other: &Self) -> CoreResult<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CoreError::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = *a + c * *b;
        }
        Ok(())
    }

    pub fn scale_in_place(&mut self, c: F) {
        for a in &mut self.data {
            *a = *a * c;
        }
    }

    /// `max_ij |M_ij + M_ji|`; zero for exactly skew-symmetric matrices.
    pub fn skew_defect(&self) -> F {
        debug_assert_eq!(self.rows, self.cols);
        let mut worst = F::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                worst = worst.max((self.get(i, j) + self.get(j, i)).abs());
            }
        }
        worst
    }

    pub fn max_abs(&self) -> F {
        let mut m = F::zero();
        for a in &self.data {
            m = m.max(a.abs());
        }
        m
    }

    /// Entry-wise conversion into another scalar type.
    pub fn map_scalar<G: Scalar>(&self, f: impl Fn(F) -> G) -> DenseMatrix<G> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| f(*v)).collect(),
        }
    }
}
