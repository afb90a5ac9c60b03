//! Dense real vectors: the universal currency of all updates.

use crate::error::{CoreError, CoreResult};
use crate::scalar::Scalar;

/// Dense d-dimensional point/gradient with finite entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<F: Scalar> {
    entries: Vec<F>,
}

impl<F: Scalar> Vector<F> {
    /// Builds a vector, rejecting NaN/Inf entries.
    pub fn new(entries: Vec<F>) -> CoreResult<Self> {
        if entries.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::NonFinite {
                context: "vector construction",
            });
        }
        Ok(Self { entries })
    }

    /// Builds a vector without the finiteness check.
    ///
    /// Used by arithmetic on already-validated inputs; debug builds still
    /// assert finiteness.
    #[inline]
    pub fn from_vec_unchecked(entries: Vec<F>) -> Self {
        debug_assert!(entries.iter().all(|v| v.is_finite()));
        Self { entries }
    }

    pub fn from_slice(entries: &[F]) -> CoreResult<Self> {
        Self::new(entries.to_vec())
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![F::zero(); dim],
        }
    }

    pub fn from_fn(dim: usize, f: impl FnMut(usize) -> F) -> CoreResult<Self> {
        Self::new((0..dim).map(f).collect())
    }

    /// Standard basis vector `e_k`.
    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[k] = F::one();
        v
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn as_slice(&self) -> &[F] {
        &self.entries
    }

    #[inline]
    pub fn as_mut_slice(&mut self) -> &mut [F] {
        &mut self.entries
    }

    pub fn into_vec(self) -> Vec<F> {
        self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|v| v.is_finite())
    }

    pub fn check_dim(&self, expected: usize) -> CoreResult<()> {
        if self.dim() != expected {
            return Err(CoreError::DimensionMismatch {
                expected,
                got: self.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_vec_unchecked(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a + *b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_vec_unchecked(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a - *b)
                .collect(),
        )
    }

    pub fn scale(&self, c: F) -> Self {
        Self::from_vec_unchecked(self.entries.iter().map(|a| *a * c).collect())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: F, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self::from_vec_unchecked(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a + c * *b)
                .collect(),
        )
    }

    /// In-place `self += other`, for running sums.
    pub fn accumulate(&mut self, other: &Self) {
        debug_assert_eq!(self.dim(), other.dim());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            *a = *a + *b;
        }
    }

    pub fn dot(&self, other: &Self) -> F {
        debug_assert_eq!(self.dim(), other.dim());
        // Fixed-order sequential accumulation keeps results bit-reproducible.
        let mut acc = F::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = acc + *a * *b;
        }
        acc
    }

    pub fn norm_sq(&self) -> F {
        self.dot(self)
    }

    pub fn norm(&self) -> F {
        self.norm_sq().sqrt()
    }

    pub fn norm_inf(&self) -> F {
        let mut m = F::zero();
        for a in &self.entries {
            m = m.max(a.abs());
        }
        m
    }

    pub fn dist(&self, other: &Self) -> F {
        self.sub(other).norm()
    }

    /// `sum_i w_i * v_i^2`; the squared Mahalanobis norm for diagonal weights.
    pub fn weighted_norm_sq(&self, weights: &[F]) -> F {
        debug_assert_eq!(self.dim(), weights.len());
        let mut acc = F::zero();
        for (a, w) in self.entries.iter().zip(weights) {
            acc = acc + *w * *a * *a;
        }
        acc
    }

    pub fn sum(&self) -> F {
        let mut acc = F::zero();
        for a in &self.entries {
            acc = acc + *a;
        }
        acc
    }
}

impl<F: Scalar> std::ops::Index<usize> for Vector<F> {
    type Output = F;
    #[inline]
    fn index(&self, i: usize) -> &F {
        &self.entries[i]
    }
}

impl<F: Scalar> std::ops::IndexMut<usize> for Vector<F> {
    #[inline]
    fn index_mut(&mut self, i: usize) -> &mut F {
        &mut self.entries[i]
    }
}
