//! Core types for variational-inequality solvers: dense vectors, feasible
//! sets with projection and linear-minimization oracles, diagonal metrics,
//! mirror maps, composite prox subproblems, and the stochastic evaluation
//! oracle shared by every algorithm.
//!
//! All math is generic over the floating-point type via [`Scalar`]; the
//! `*64` aliases below are the instantiations used by the higher layers.

pub mod domain;
pub mod error;
pub mod matrix;
pub mod metric;
pub mod mirror;
pub mod operator;
pub mod oracle;
pub mod prox;
pub mod rng;
pub mod scalar;
pub mod vector;

pub use domain::Domain;
pub use error::{CoreError, CoreResult};
pub use matrix::DenseMatrix;
pub use metric::DiagMetric;
pub use mirror::MirrorMap;
pub use operator::{EvalFn, OperatorKind, OperatorSpec};
pub use oracle::{OracleMode, QueryTag, StochasticOracle};
pub use prox::{prox_diag, prox_step, Anchor, DiagAnchor};
pub use scalar::{fl, Scalar};
pub use vector::Vector;

pub type Vector64 = Vector<f64>;
pub type Domain64 = Domain<f64>;
pub type DiagMetric64 = DiagMetric<f64>;
pub type DenseMatrix64 = DenseMatrix<f64>;
pub type OperatorSpec64 = OperatorSpec<f64>;
pub type StochasticOracle64 = StochasticOracle<f64>;
