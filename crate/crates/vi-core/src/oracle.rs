//! Stochastic first-order evaluation oracle.
//!
//! Minibatch estimates average uniformly-with-replacement sampled blocks, so
//! the estimator is unbiased by construction. Randomness is derived, never
//! mutated: the draw for `(step, tag)` is a pure function of the seed, which
//! makes replay bit-exact and concurrent use safe.

use std::sync::Arc;

use rand::Rng;

use crate::error::{CoreError, CoreResult};
use crate::operator::OperatorSpec;
use crate::rng::substream;
use crate::scalar::{fl, Scalar};
use crate::vector::Vector;

/// Distinguishes the oracle calls made within one iteration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryTag {
    /// The one-off query at `x_0` performed at initialization.
    Init,
    /// Query at the extrapolated iterate `x_t`.
    AtX,
    /// Query at `z_{t-1}` (two-call algorithms).
    AtZ,
}

impl QueryTag {
    fn code(self) -> u64 {
        match self {
            QueryTag::Init => 0,
            QueryTag::AtX => 1,
            QueryTag::AtZ => 2,
        }
    }
}

/// Evaluation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Deterministic: always the exact full-batch value.
    Exact,
    /// Average of `size` blocks sampled uniformly with replacement.
    Minibatch { size: usize },
}

#[derive(Debug, Clone)]
pub struct StochasticOracle<F: Scalar> {
    operator: Arc<OperatorSpec<F>>,
    mode: OracleMode,
    seed: u64,
}

impl<F: Scalar> StochasticOracle<F> {
    pub fn exact(operator: Arc<OperatorSpec<F>>) -> Self {
        Self {
            operator,
            mode: OracleMode::Exact,
            seed: 0,
        }
    }

    pub fn minibatch(
        operator: Arc<OperatorSpec<F>>,
        size: usize,
        seed: u64,
    ) -> CoreResult<Self> {
        if size == 0 {
            return Err(CoreError::InvalidConfig(
                "minibatch size must be at least 1".into(),
            ));
        }
        if operator.n_blocks().is_none() {
            return Err(CoreError::OracleUnsupported(
                "minibatch sampling requires an operator with block structure".into(),
            ));
        }
        Ok(Self {
            operator,
            mode: OracleMode::Minibatch { size },
            seed,
        })
    }

    pub fn operator(&self) -> &OperatorSpec<F> {
        &self.operator
    }

    pub fn mode(&self) -> OracleMode {
        self.mode
    }

    pub fn is_deterministic(&self) -> bool {
        matches!(self.mode, OracleMode::Exact)
            || self.operator.n_blocks() == Some(1)
    }

    /// Evaluates `F̂(x)` for the query `(step_index, tag)`.
    pub fn evaluate(
        &self,
        x: &Vector<F>,
        step_index: u64,
        tag: QueryTag,
    ) -> CoreResult<Vector<F>> {
        match self.mode {
            OracleMode::Exact => self.operator.eval_full(x),
            OracleMode::Minibatch { size } => {
                let n = self
                    .operator
                    .n_blocks()
                    .ok_or_else(|| CoreError::OracleUnsupported(
                        "minibatch sampling requires block structure".into(),
                    ))?;
                if n == 1 {
                    return self.operator.eval_full(x);
                }
                let mut rng = substream(self.seed, tag.code(), step_index);
                let mut acc = Vector::zeros(self.operator.dim());
                for _ in 0..size {
                    let idx = rng.random_range(0..n);
                    acc.accumulate(&self.operator.eval_block(idx, x)?);
                }
                Ok(acc.scale(fl::<F>(1.0 / size as f64)))
            }
        }
    }
}
