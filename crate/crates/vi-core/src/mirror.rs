//! Mirror maps and Bregman divergences.

use crate::domain::Domain;
use crate::error::{CoreError, CoreResult};
use crate::scalar::{fl, Scalar};
use crate::vector::Vector;

/// Numerical floor applied to anchor coordinates before taking logarithms.
/// Keeps log-space arithmetic finite without perturbing results above 1e-12.
pub const ENTROPY_FLOOR: f64 = 1e-300;

/// Distance-generating function for the Bregman prox subproblems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MirrorMap {
    /// psi(x) = 1/2 |x|^2; the Bregman divergence is 1/2 |x - y|^2.
    #[default]
    Euclidean,
    /// psi(x) = sum_i x_i ln x_i on the simplex; the divergence is the KL
    /// divergence. Defined only on the simplex interior.
    NegativeEntropy,
}

impl MirrorMap {
    /// Checks the mirror map can serve prox subproblems on this domain.
    pub fn check_compatible<F: Scalar>(&self, domain: &Domain<F>) -> CoreResult<()> {
        match self {
            MirrorMap::Euclidean => Ok(()),
            MirrorMap::NegativeEntropy => match domain {
                Domain::Simplex { .. } => Ok(()),
                _ => Err(CoreError::IncompatibleMirror(
                    "negative entropy requires the simplex domain".into(),
                )),
            },
        }
    }

    /// Bregman divergence `D_psi(x, y) = psi(x) - psi(y) - <grad psi(y), x - y>`.
    pub fn bregman<F: Scalar>(&self, x: &Vector<F>, y: &Vector<F>) -> CoreResult<F> {
        x.check_dim(y.dim())?;
        match self {
            MirrorMap::Euclidean => Ok(x.sub(y).norm_sq() * fl(0.5)),
            MirrorMap::NegativeEntropy => {
                let floor = entropy_floor::<F>();
                let mut acc = F::zero();
                for (xi, yi) in x.as_slice().iter().zip(y.as_slice()) {
                    if *xi < F::zero() || *yi < F::zero() {
                        return Err(CoreError::InvalidConfig(
                            "entropy divergence requires nonnegative coordinates".into(),
                        ));
                    }
                    let yc = yi.max(floor);
                    // x ln(x/y) - x + y with the 0 ln 0 = 0 convention.
                    if *xi > F::zero() {
                        acc = acc + *xi * (*xi / yc).ln() - *xi + *yi;
                    } else {
                        acc = acc + *yi;
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Gradient of the distance-generating function.
    pub fn grad<F: Scalar>(&self, x: &Vector<F>) -> CoreResult<Vector<F>> {
        match self {
            MirrorMap::Euclidean => Ok(x.clone()),
            MirrorMap::NegativeEntropy => {
                let floor = entropy_floor::<F>();
                Vector::new(
                    x.as_slice()
                        .iter()
                        .map(|v| v.max(floor).ln() + F::one())
                        .collect(),
                )
            }
        }
    }
}

pub(crate) fn entropy_floor<F: Scalar>() -> F {
    fl::<F>(ENTROPY_FLOOR).max(F::min_positive_value())
}
