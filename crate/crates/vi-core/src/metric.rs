//! Diagonal metrics for the per-coordinate algorithms.

use crate::error::{CoreError, CoreResult};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Strictly positive diagonal weights; induces the norm
/// `|v|_D = sqrt(sum_i D_i v_i^2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagMetric<F: Scalar> {
    weights: Vec<F>,
}

impl<F: Scalar> DiagMetric<F> {
    pub fn new(weights: Vec<F>) -> CoreResult<Self> {
        if weights.iter().any(|w| !(*w > F::zero()) || !w.is_finite()) {
            return Err(CoreError::InvalidConfig(
                "diagonal metric weights must be strictly positive and finite".into(),
            ));
        }
        Ok(Self { weights })
    }

    pub fn uniform(dim: usize, value: F) -> CoreResult<Self> {
        Self::new(vec![value; dim])
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    #[inline]
    pub fn weights(&self) -> &[F] {
        &self.weights
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

    pub fn norm_sq(&self, v: &Vector<F>) -> F {
        v.weighted_norm_sq(&self.weights)
    }

    pub fn norm(&self, v: &Vector<F>) -> F {
        self.norm_sq(v).sqrt()
    }

    /// `sum_i v_i^2 / D_i`, the squared dual norm.
    pub fn dual_norm_sq(&self, v: &Vector<F>) -> F {
        let mut acc = F::zero();
        for (a, w) in v.as_slice().iter().zip(&self.weights) {
            acc = acc + *a * *a / *w;
        }
        acc
    }

    pub fn trace(&self) -> F {
        self.weights.iter().fold(F::zero(), |a, b| a + *b)
    }
}
