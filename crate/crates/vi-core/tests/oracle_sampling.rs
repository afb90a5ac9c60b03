//! Statistical and determinism contracts of the minibatch oracle.

use std::sync::Arc;

use rand::Rng;

use vi_core::rng::substream;
use vi_core::{DenseMatrix, OperatorSpec, QueryTag, StochasticOracle, Vector};

/// Random skew blocks assembled by antisymmetrizing Gaussian-ish matrices.
fn random_skew_blocks(dim: usize, n: usize, seed: u64) -> Vec<DenseMatrix<f64>> {
    let mut rng = substream(seed, 77, 0);
    (0..n)
        .map(|_| {
            let mut m = DenseMatrix::zeros(dim, dim);
            for i in 0..dim {
                for j in (i + 1)..dim {
                    let v: f64 = rng.random_range(-3.0..3.0);
                    m.set(i, j, v);
                    m.set(j, i, -v);
                }
            }
            m
        })
        .collect()
}

#[test]
fn skew_operators_are_monotone_with_zero_product() {
    let op = OperatorSpec::linear_skew(random_skew_blocks(6, 4, 1)).unwrap();
    let mut rng = substream(2, 0, 0);
    for _ in 0..200 {
        let x = Vector::from_fn(6, |_| rng.random_range(-5.0..5.0)).unwrap();
        let y = Vector::from_fn(6, |_| rng.random_range(-5.0..5.0)).unwrap();
        let fx = op.eval_full(&x).unwrap();
        let fy = op.eval_full(&y).unwrap();
        let inner = fx.sub(&fy).dot(&x.sub(&y));
        let scale = x.sub(&y).norm() * (fx.norm() + fy.norm());
        assert!(inner.abs() <= 1e-9 * scale.max(1e-30));
    }
}

#[test]
fn full_batch_is_mean_of_blocks() {
    let blocks = random_skew_blocks(4, 5, 3);
    let op = OperatorSpec::linear_skew(blocks.clone()).unwrap();
    let mut rng = substream(4, 0, 0);
    for _ in 0..50 {
        let x = Vector::from_fn(4, |_| rng.random_range(-2.0..2.0)).unwrap();
        let full = op.eval_full(&x).unwrap();
        let mut acc = Vector::zeros(4);
        for i in 0..5 {
            acc.accumulate(&op.eval_block(i, &x).unwrap());
        }
        let mean = acc.scale(1.0 / 5.0);
        assert!(full.dist(&mean) <= 1e-12 * (1.0 + full.norm()));
    }
    assert!(op.eval_block(5, &Vector::zeros(4)).is_err());
}

#[test]
fn minibatch_mean_is_unbiased_monte_carlo() {
    let dim = 6;
    let n = 20;
    let op = Arc::new(OperatorSpec::linear_skew(random_skew_blocks(dim, n, 9)).unwrap());
    let oracle = StochasticOracle::minibatch(op.clone(), 4, 123).unwrap();
    let mut rng = substream(10, 0, 0);
    let x = Vector::from_fn(dim, |_| rng.random_range(-5.0..5.0)).unwrap();
    let full = op.eval_full(&x).unwrap();

    let resamples: u64 = 20_000;
    let mut sum = vec![0.0; dim];
    let mut sum_sq = vec![0.0; dim];
    for step in 0..resamples {
        let v = oracle.evaluate(&x, step, QueryTag::AtX).unwrap();
        for i in 0..dim {
            sum[i] += v[i];
            sum_sq[i] += v[i] * v[i];
        }
    }
    let k = resamples as f64;
    for i in 0..dim {
        let mean = sum[i] / k;
        let var = (sum_sq[i] / k - mean * mean).max(0.0);
        let std_err = (var / k).sqrt();
        assert!(
            (mean - full[i]).abs() <= 5.0 * std_err + 1e-12,
            "coordinate {i}: mean {mean} vs full {} (stderr {std_err})",
            full[i]
        );
    }
}
