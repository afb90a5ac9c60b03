//! Haar-distributed random rotations.

use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::StandardNormal;

/// Samples a d x d orthogonal matrix from the Haar distribution: QR-factorize
/// a Gaussian matrix and fix the column signs by the diagonal of R
/// (sign(0) maps to +1).
pub fn haar_rotation<R: Rng + ?Sized>(d: usize, rng: &mut R) -> DMatrix<f64> {
    let gauss = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = gauss.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..d {
        if r[(j, j)] < 0.0 {
            for i in 0..d {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    q
}
