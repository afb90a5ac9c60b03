//! Spectral norm by power iteration on `Mᵀ M`.

use rand::Rng;

use vi_core::{DenseMatrix, Vector};

/// Largest singular value of `m`, via power iteration on the Gram matrix to
/// relative residual 1e-10 (capped at 1e4 iterations).
pub fn spectral_norm<R: Rng + ?Sized>(m: &DenseMatrix<f64>, rng: &mut R) -> f64 {
    let dim = m.ncols();
    let mut v = Vector::from_vec_unchecked(
        (0..dim)
            .map(|_| rng.random_range(-1.0..1.0))
            .collect::<Vec<f64>>(),
    );
    let norm = v.norm();
    if norm == 0.0 {
        return 0.0;
    }
    v = v.scale(1.0 / norm);
    let gram = |x: &Vector<f64>| -> Vector<f64> {
        let mx = m.matvec(x).expect("dimensions fixed");
        m.t_matvec(&mx).expect("dimensions fixed")
    };
    let mut lambda = 0.0;
    for _ in 0..10_000 {
        let bv = gram(&v);
        let bv_norm = bv.norm();
        if bv_norm == 0.0 {
            return 0.0;
        }
        lambda = v.dot(&bv);
        let residual = bv.add_scaled(-lambda, &v).norm();
        if residual <= 1e-10 * lambda.abs().max(f64::MIN_POSITIVE) {
            break;
        }
        v = bv.scale(1.0 / bv_norm);
    }
    lambda.max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use vi_core::rng::substream;

    #[test]
    fn skew_2x2_norm_is_entry_magnitude() {
        let m =
            DenseMatrix::from_rows(vec![vec![0.0, -3.5], vec![3.5, 0.0]]).unwrap();
        let mut rng = substream(1, 0, 0);
        assert!((spectral_norm(&m, &mut rng) - 3.5).abs() < 1e-9);
    }

    #[test]
    fn diagonal_norm_is_max_abs() {
        let m = DenseMatrix::from_rows(vec![
            vec![2.0, 0.0, 0.0],
            vec![0.0, -7.0, 0.0],
            vec![0.0, 0.0, 0.5],
        ])
        .unwrap();
        let mut rng = substream(2, 0, 0);
        assert!((spectral_norm(&m, &mut rng) - 7.0).abs() < 1e-8);
    }
}
