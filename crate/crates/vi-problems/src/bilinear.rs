//! Bilinear saddle-point instances: `f(u, v) = (1/n) sum_i uᵀ A_i v` with the
//! VI operator `F = (∇_u f, -∇_v f)`, linear and skew-symmetric on the full
//! 2d-dimensional space. The strong solution is the origin.

use std::sync::Arc;

use nalgebra::DMatrix;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use vi_core::rng::substream;
use vi_core::{fl, DenseMatrix, Domain, OperatorSpec, Scalar, Vector};

use crate::haar::haar_rotation;
use crate::spectral::spectral_norm;

const TAG_SPECTRUM: u64 = 0x73_70_65_63; // "spec"(trum)
const TAG_ROTATION: u64 = 0x72_6f_74_61; // "rota"(tion)
const TAG_X0: u64 = 0x78_30;
const TAG_POWER: u64 = 0x70_6f_77_72;

#[derive(Debug, Error)]
pub enum ProblemError {
    #[error("invalid instance parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Core(#[from] vi_core::CoreError),
}

/// How the sampled diagonal is rotated into each block.
///
/// The similarity transform `Q diag(s) Qᵀ` preserves the sampled spectrum
/// (singular values |s_j|), which keeps the smoothness constant
/// interpretable; the one-sided form `Q diag(s)` is available for
/// sensitivity checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RotationKind {
    #[default]
    Similarity,
    OneSided,
}

/// Generation parameters; everything an instance needs to be regenerated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearParams {
    /// Half-dimension: each block A_i is d x d, the VI lives in 2d dims.
    pub d: usize,
    /// Number of blocks.
    pub n: usize,
    pub seed: u64,
    #[serde(default)]
    pub rotation: RotationKind,
}

/// Serializable provenance: parameters plus the sampled spectra and the
/// derived sub-seeds. Matrices are regenerated, never stored.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub params: BilinearParams,
    pub spectra: Vec<Vec<f64>>,
    pub rotation_seeds: Vec<u64>,
    /// Index of the x0 sub-stream actually used (> 0 after regeneration).
    pub x0_stream_index: u64,
    pub beta: f64,
}

#[derive(Debug, Clone)]
pub struct BilinearInstance<F: Scalar> {
    pub params: BilinearParams,
    pub operator: Arc<OperatorSpec<F>>,
    pub x0: Vector<F>,
    /// Spectral norm of the mean matrix; the operator's Lipschitz constant.
    pub beta: F,
    /// Sampled diagonal entries per block, kept for provenance.
    pub spectra: Vec<Vec<f64>>,
    /// How many degenerate x0 draws were discarded (x0 = 0 regenerates).
    pub x0_stream_index: u64,
}

impl<F: Scalar> BilinearInstance<F> {
    /// Full problem dimension (2d).
    pub fn dim(&self) -> usize {
        2 * self.params.d
    }

    /// The strong solution x* = 0.
    pub fn x_star(&self) -> Vector<F> {
        Vector::zeros(self.dim())
    }

    /// Experiment domains: the centered l2 ball of radius 2|x0| and free
    /// space. The ball contains x0 with margin |x0|.
    pub fn default_domains(&self) -> (Domain<F>, Domain<F>) {
        let radius = fl::<F>(2.0) * self.x0.norm();
        let ball = Domain::ball(Vector::zeros(self.dim()), radius)
            .expect("x0 is nonzero by construction");
        (ball, Domain::FreeSpace { dim: self.dim() })
    }

    /// Bound on |F(x)| over a centered ball of the given radius.
    pub fn norm_bound_on_ball(&self, radius: F) -> F {
        self.beta * radius
    }

    pub fn descriptor(&self) -> InstanceDescriptor {
        InstanceDescriptor {
            params: self.params.clone(),
            spectra: self.spectra.clone(),
            rotation_seeds: (0..self.params.n as u64)
                .map(|i| vi_core::rng::derive_seed(self.params.seed, TAG_ROTATION, i))
                .collect(),
            x0_stream_index: self.x0_stream_index,
            beta: self.beta.to_f64().unwrap_or(f64::NAN),
        }
    }
}

/// Generates an instance with independent per-block Haar rotations and
/// Uniform([-10, 10)) spectra and initial point.
pub fn gen_bilinear<F: Scalar>(
    d: usize,
    n: usize,
    seed: u64,
) -> Result<BilinearInstance<F>, ProblemError> {
    gen_bilinear_with(&BilinearParams {
        d,
        n,
        seed,
        rotation: RotationKind::Similarity,
    })
}

pub fn gen_bilinear_with<F: Scalar>(
    params: &BilinearParams,
) -> Result<BilinearInstance<F>, ProblemError> {
    let (d, n) = (params.d, params.n);
    if d == 0 || n == 0 {
        return Err(ProblemError::InvalidParams(
            "d and n must be at least 1".into(),
        ));
    }
    let full = 2 * d;

    let mut spectra = Vec::with_capacity(n);
    let mut blocks_f64: Vec<DenseMatrix<f64>> = Vec::with_capacity(n);
    for i in 0..n as u64 {
        let mut spec_rng = substream(params.seed, TAG_SPECTRUM, i);
        let s: Vec<f64> = (0..d).map(|_| spec_rng.random_range(-10.0..10.0)).collect();
        let mut rot_rng = substream(params.seed, TAG_ROTATION, i);
        let q = haar_rotation(d, &mut rot_rng);
        let diag = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(s.clone()));
        let a = match params.rotation {
            RotationKind::Similarity => &q * &diag * q.transpose(),
            RotationKind::OneSided => &q * &diag,
        };
        blocks_f64.push(assemble_skew_block(&a));
        spectra.push(s);
    }

    // Mean matrix and its spectral norm, both in f64 for bit-stable metadata.
    let mut mean = DenseMatrix::zeros(full, full);
    for b in &blocks_f64 {
        mean.add_scaled(1.0 / n as f64, b).expect("square blocks");
    }
    let mut power_rng = substream(params.seed, TAG_POWER, 0);
    let beta = spectral_norm(&mean, &mut power_rng);

    // Initial point; a zero draw regenerates from the next sub-stream.
    let mut x0_stream_index = 0u64;
    let x0_f64: Vec<f64> = loop {
        let mut rng = substream(params.seed, TAG_X0, x0_stream_index);
        let candidate: Vec<f64> = (0..full).map(|_| rng.random_range(-10.0..10.0)).collect();
        if candidate.iter().any(|v| *v != 0.0) {
            break candidate;
        }
        x0_stream_index += 1;
    };

    let blocks: Vec<DenseMatrix<F>> = blocks_f64
        .iter()
        .map(|b| b.map_scalar(|v| fl::<F>(v)))
        .collect();
    let operator = OperatorSpec::linear_skew(blocks)
        .map_err(ProblemError::Core)?
        .with_beta(fl::<F>(beta));

    Ok(BilinearInstance {
        params: params.clone(),
        operator: Arc::new(operator),
        x0: Vector::new(x0_f64.into_iter().map(fl::<F>).collect()).map_err(ProblemError::Core)?,
        beta: fl::<F>(beta),
        spectra,
        x0_stream_index,
    })
}

/// `M = [[0, A], [-Aᵀ, 0]]`.
fn assemble_skew_block(a: &DMatrix<f64>) -> DenseMatrix<f64> {
    let d = a.nrows();
    let mut m = DenseMatrix::zeros(2 * d, 2 * d);
    for i in 0..d {
        for j in 0..d {
            m.set(i, d + j, a[(i, j)]);
            m.set(d + j, i, -a[(i, j)]);
        }
    }
    m
}

/// Regenerates the instance named by a descriptor and checks the recorded
/// spectra still match (guards against provenance drift).
pub fn regenerate<F: Scalar>(
    desc: &InstanceDescriptor,
) -> Result<BilinearInstance<F>, ProblemError> {
    let inst = gen_bilinear_with::<F>(&desc.params)?;
    if inst.spectra != desc.spectra {
        return Err(ProblemError::InvalidParams(
            "regenerated spectra differ from the descriptor".into(),
        ));
    }
    Ok(inst)
}
