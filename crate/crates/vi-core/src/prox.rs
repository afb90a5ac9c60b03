//! Composite prox subproblems shared by every solver step.
//!
//! `prox_step` solves `argmin_u <g, u> + sum_k c_k D_psi(u, a_k)` over the
//! domain for scalar anchor weights; `prox_diag` solves the Euclidean
//! analogue with per-coordinate (diagonal) anchor weights.

use crate::domain::Domain;
use crate::error::{CoreError, CoreResult};
use crate::metric::DiagMetric;
use crate::mirror::{entropy_floor, MirrorMap};
use crate::scalar::Scalar;
use crate::vector::Vector;

/// Anchor with a scalar weight.
pub type Anchor<'a, F> = (&'a Vector<F>, F);

/// Anchor with per-coordinate weights (all entries >= 0).
pub type DiagAnchor<'a, F> = (&'a Vector<F>, &'a [F]);

pub fn prox_step<F: Scalar>(
    domain: &Domain<F>,
    mirror: MirrorMap,
    g: &Vector<F>,
    anchors: &[Anchor<'_, F>],
) -> CoreResult<Vector<F>> {
    let dim = domain.dim();
    g.check_dim(dim)?;
    mirror.check_compatible(domain)?;
    let mut total = F::zero();
    for (a, c) in anchors {
        a.check_dim(dim)?;
        if *c < F::zero() || !c.is_finite() {
            return Err(CoreError::InvalidConfig(
                "anchor weights must be nonnegative and finite".into(),
            ));
        }
        total = total + *c;
    }
    if total == F::zero() {
        if domain.is_bounded() {
            return domain.linear_minimize(g);
        }
        return Err(CoreError::UnboundedSubproblem(
            "prox subproblem with zero total anchor weight on an unbounded domain".into(),
        ));
    }
    match mirror {
        MirrorMap::Euclidean => {
            // Unconstrained minimizer (sum c_k a_k - g) / C, then project.
            let mut m = g.scale(-F::one());
            for (a, c) in anchors {
                m = m.add_scaled(*c, a);
            }
            domain.project(&m.scale(F::one() / total))
        }
        MirrorMap::NegativeEntropy => {
            // u_i proportional to exp((sum_k c_k ln a_{k,i} - g_i) / C);
            // all arithmetic in log space for stability.
            let floor = entropy_floor::<F>();
            let mut s = vec![F::zero(); dim];
            for (a, c) in anchors {
                if *c == F::zero() {
                    continue;
                }
                for (si, ai) in s.iter_mut().zip(a.as_slice()) {
                    if *ai < F::zero() {
                        return Err(CoreError::InvalidConfig(
                            "entropy anchors must be nonnegative".into(),
                        ));
                    }
                    *si = *si + *c * ai.max(floor).ln();
                }
            }
            for (si, gi) in s.iter_mut().zip(g.as_slice()) {
                *si = (*si - *gi) / total;
            }
            let mut smax = s[0];
            for v in &s {
                smax = smax.max(*v);
            }
            let mut z = F::zero();
            let mut out = Vec::with_capacity(dim);
            for v in &s {
                let e = (*v - smax).exp();
                z = z + e;
                out.push(e);
            }
            Vector::new(out.into_iter().map(|v| v / z).collect())
        }
    }
}

pub fn prox_diag<F: Scalar>(
    domain: &Domain<F>,
    g: &Vector<F>,
    anchors: &[DiagAnchor<'_, F>],
) -> CoreResult<Vector<F>> {
    let dim = domain.dim();
    g.check_dim(dim)?;
    let mut w = vec![F::zero(); dim];
    for (a, weights) in anchors {
        a.check_dim(dim)?;
        if weights.len() != dim {
            return Err(CoreError::DimensionMismatch {
                expected: dim,
                got: weights.len(),
            });
        }
        for (wi, v) in w.iter_mut().zip(*weights) {
            if *v < F::zero() || !v.is_finite() {
                return Err(CoreError::InvalidConfig(
                    "diagonal anchor weights must be nonnegative and finite".into(),
                ));
            }
            *wi = *wi + *v;
        }
    }
    let all_zero = w.iter().all(|v| *v == F::zero());
    if all_zero {
        if domain.is_bounded() {
            return domain.linear_minimize(g);
        }
        return Err(CoreError::UnboundedSubproblem(
            "diagonal prox with zero metric on an unbounded domain".into(),
        ));
    }
    let any_zero = w.iter().any(|v| *v == F::zero());

    // Unconstrained per-coordinate minimizer where the weight is positive.
    let mut m = vec![F::zero(); dim];
    for i in 0..dim {
        if w[i] > F::zero() {
            let mut num = -g[i];
            for (a, weights) in anchors {
                num = num + weights[i] * a.as_slice()[i];
            }
            m[i] = num / w[i];
        }
    }

    match domain {
        Domain::FreeSpace { .. } => {
            if any_zero {
                // A zero-weight coordinate leaves a bare linear term.
                for i in 0..dim {
                    if w[i] == F::zero() {
                        if g[i] != F::zero() {
                            return Err(CoreError::UnboundedSubproblem(
                                "zero-weight coordinate with nonzero gradient on free space"
                                    .into(),
                            ));
                        }
                        m[i] = anchors
                            .first()
                            .map(|(a, _)| a.as_slice()[i])
                            .unwrap_or(F::zero());
                    }
                }
            }
            Vector::new(m)
        }
        Domain::Box { lower, upper } => {
            for i in 0..dim {
                if w[i] == F::zero() {
                    // Linear in this coordinate; pick the minimizing face
                    // (ties toward the lower bound, or hold the anchor).
                    m[i] = if g[i] > F::zero() {
                        lower.as_slice()[i]
                    } else if g[i] < F::zero() {
                        upper.as_slice()[i]
                    } else {
                        let a = anchors
                            .first()
                            .map(|(a, _)| a.as_slice()[i])
                            .unwrap_or(lower.as_slice()[i]);
                        a.max(lower.as_slice()[i]).min(upper.as_slice()[i])
                    };
                } else {
                    m[i] = m[i].max(lower.as_slice()[i]).min(upper.as_slice()[i]);
                }
            }
            Vector::new(m)
        }
        Domain::Ball { .. } | Domain::Simplex { .. } => {
            if any_zero {
                return Err(CoreError::InvalidConfig(
                    "diagonal prox on ball/simplex requires strictly positive weights".into(),
                ));
            }
            let metric = DiagMetric::new(w)?;
            domain.project_diag(&Vector::new(m)?, &metric)
        }
    }
}
