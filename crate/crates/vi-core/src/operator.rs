//! Monotone operator definitions.

use std::fmt;
use std::sync::Arc;

use crate::error::{CoreError, CoreResult};
use crate::matrix::DenseMatrix;
use crate::scalar::{fl, Scalar};
use crate::vector::Vector;

/// Evaluation callback for operators given only as a black box.
pub type EvalFn<F> = Arc<dyn Fn(&Vector<F>) -> Vector<F> + Send + Sync>;

/// Operator definition: the mean of n linear skew blocks, or a callback.
#[derive(Clone)]
pub enum OperatorKind<F: Scalar> {
    /// `F(x) = (1/n) sum_i M_i x` with each `M_i` skew-symmetric.
    LinearSkew(Arc<Vec<DenseMatrix<F>>>),
    Callback(EvalFn<F>),
}

impl<F: Scalar> fmt::Debug for OperatorKind<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::LinearSkew(blocks) => {
                write!(f, "LinearSkew({} blocks)", blocks.len())
            }
            OperatorKind::Callback(_) => write!(f, "Callback"),
        }
    }
}

/// Monotone operator with optional structural metadata.
#[derive(Debug, Clone)]
pub struct OperatorSpec<F: Scalar> {
    kind: OperatorKind<F>,
    dim: usize,
    /// Mean of the blocks, precomputed for exact full-batch evaluation.
    mean: Option<Arc<DenseMatrix<F>>>,
    /// Smoothness constant, when known.
    pub beta: Option<F>,
    /// Bound on `|F(x)|` over the working domain, when known.
    pub norm_bound: Option<F>,
}

impl<F: Scalar> OperatorSpec<F> {
    pub fn linear_skew(blocks: Vec<DenseMatrix<F>>) -> CoreResult<Self> {
        if blocks.is_empty() {
            return Err(CoreError::InvalidConfig(
                "linear skew operator needs at least one block".into(),
            ));
        }
        let dim = blocks[0].nrows();
        for b in &blocks {
            if b.nrows() != dim || b.ncols() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    got: b.nrows().max(b.ncols()),
                });
            }
        }
        let inv_n = fl::<F>(1.0 / blocks.len() as f64);
        let mut mean = DenseMatrix::zeros(dim, dim);
        for b in &blocks {
            mean.add_scaled(inv_n, b)?;
        }
        Ok(Self {
            kind: OperatorKind::LinearSkew(Arc::new(blocks)),
            dim,
            mean: Some(Arc::new(mean)),
            beta: None,
            norm_bound: None,
        })
    }

    pub fn callback(dim: usize, eval: EvalFn<F>) -> Self {
        Self {
            kind: OperatorKind::Callback(eval),
            dim,
            mean: None,
            beta: None,
            norm_bound: None,
        }
    }

    pub fn with_beta(mut self, beta: F) -> Self {
        self.beta = Some(beta);
        self
    }

    pub fn with_norm_bound(mut self, g: F) -> Self {
        self.norm_bound = Some(g);
        self
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kind(&self) -> &OperatorKind<F> {
        &self.kind
    }

    /// Number of blocks, when the operator has finite-sum structure.
    pub fn n_blocks(&self) -> Option<usize> {
        match &self.kind {
            OperatorKind::LinearSkew(blocks) => Some(blocks.len()),
            OperatorKind::Callback(_) => None,
        }
    }

    /// Mean matrix of the skew blocks.
    pub fn mean_matrix(&self) -> Option<&DenseMatrix<F>> {
        self.mean.as_deref()
    }

    /// Exact full-batch value `F(x)`.
    pub fn eval_full(&self, x: &Vector<F>) -> CoreResult<Vector<F>> {
        x.check_dim(self.dim)?;
        match &self.kind {
            OperatorKind::LinearSkew(_) => self
                .mean
                .as_ref()
                .expect("linear skew operators precompute the mean")
                .matvec(x),
            OperatorKind::Callback(eval) => {
                let out = eval(x);
                out.check_dim(self.dim)?;
                if !out.is_finite() {
                    return Err(CoreError::NonFinite {
                        context: "operator callback output",
                    });
                }
                Ok(out)
            }
        }
    }

    /// Value of block `i`: `M_i x`.
    pub fn eval_block(&self, index: usize, x: &Vector<F>) -> CoreResult<Vector<F>> {
        match &self.kind {
            OperatorKind::LinearSkew(blocks) => {
                let n = blocks.len();
                blocks
                    .get(index)
                    .ok_or(CoreError::BlockOutOfRange { index, n })?
                    .matvec(x)
            }
            OperatorKind::Callback(_) => Err(CoreError::OracleUnsupported(
                "callback operators have no block structure".into(),
            )),
        }
    }
}
