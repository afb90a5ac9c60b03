//! Generic constrained argmin by projected gradient descent.

use crate::domain::{naive_project, TestDomain};
use crate::{norm, sub};

/// Minimizes `f` over the domain by projected gradient descent with a probed
/// Lipschitz step, run until the iterate movement stalls below 1e-14 scale.
///
/// Intended for the strongly convex prox objectives that appear in the
/// algorithm boxes; deliberately ignorant of their closed forms. Acceptance
/// never compares objective values (which would hit the f64 noise floor near
/// the optimum); only gradients enter, so the attainable accuracy is limited
/// by gradient rounding alone.
pub fn minimize_on(
    domain: &TestDomain,
    f: &dyn Fn(&[f64]) -> f64,
    grad: &dyn Fn(&[f64]) -> Vec<f64>,
    start: &[f64],
) -> Vec<f64> {
    let _ = f;
    let mut x = naive_project(domain, start);
    let mut lip = estimate_lipschitz(grad, &x).max(1e-12);
    let mut prev_move = f64::INFINITY;
    let mut grow_streak = 0u32;
    for iter in 0..500_000usize {
        let g = grad(&x);
        let step = 1.0 / lip;
        let cand = naive_project(
            domain,
            &x.iter()
                .zip(&g)
                .map(|(xi, gi)| xi - step * gi)
                .collect::<Vec<_>>(),
        );
        let movement = norm(&sub(&cand, &x));
        if movement <= 1e-14 * (1.0 + norm(&x)) {
            x = cand;
            break;
        }
        // A contraction never grows the movement; persistent growth means the
        // local curvature exceeds the probed estimate.
        if movement > prev_move * (1.0 + 1e-9) {
            grow_streak += 1;
            if grow_streak >= 8 {
                lip *= 2.0;
                grow_streak = 0;
            }
        } else {
            grow_streak = 0;
        }
        prev_move = movement;
        x = cand;
        if iter % 4096 == 4095 {
            lip = lip.max(estimate_lipschitz(grad, &x));
        }
    }
    x
}

/// Largest gradient-difference ratio over coordinate probes around `x`.
fn estimate_lipschitz(grad: &dyn Fn(&[f64]) -> Vec<f64>, x: &[f64]) -> f64 {
    let g0 = grad(x);
    let h = 1e-5 * (1.0 + norm(x));
    let mut lip = 0.0f64;
    for i in 0..x.len() {
        let mut probe = x.to_vec();
        probe[i] += h;
        let gi = grad(&probe);
        lip = lip.max(norm(&sub(&gi, &g0)) / h);
    }
    // Headroom so the fixed step stays on the stable side.
    2.0 * lip.max(1e-12)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_on_ball() {
        // argmin |u - (3, 4)|^2 / 2 over the unit ball is (0.6, 0.8).
        let domain = TestDomain::Ball {
            center: vec![0.0, 0.0],
            radius: 1.0,
        };
        let target = [3.0, 4.0];
        let f = |u: &[f64]| 0.5 * (u[0] - target[0]).powi(2) + 0.5 * (u[1] - target[1]).powi(2);
        let g = |u: &[f64]| vec![u[0] - target[0], u[1] - target[1]];
        let u = minimize_on(&domain, &f, &g, &[0.0, 0.0]);
        assert!((u[0] - 0.6).abs() < 1e-10);
        assert!((u[1] - 0.8).abs() < 1e-10);
    }

    #[test]
    fn linear_plus_quadratic_free() {
        // argmin <g, u> + (c/2)|u - a|^2 = a - g / c.
        let f = |u: &[f64]| 2.0 * u[0] - u[1] + 1.5 * ((u[0] - 1.0).powi(2) + (u[1] + 2.0).powi(2));
        let g = |u: &[f64]| vec![2.0 + 3.0 * (u[0] - 1.0), -1.0 + 3.0 * (u[1] + 2.0)];
        let u = minimize_on(&TestDomain::Free { dim: 2 }, &f, &g, &[0.0, 0.0]);
        assert!((u[0] - (1.0 - 2.0 / 3.0)).abs() < 1e-10);
        assert!((u[1] - (-2.0 + 1.0 / 3.0)).abs() < 1e-10);
    }

    #[test]
    fn entropy_prox_on_simplex() {
        // argmin <g, u> + KL(u, uniform) has the softmax closed form.
        let g_lin = [0.0, (2.0f64).ln(), (2.0f64).ln()];
        let a = [1.0 / 3.0; 3];
        let f = |u: &[f64]| {
            let mut v = 0.0;
            for i in 0..3 {
                let uc = u[i].max(1e-15);
                v += g_lin[i] * u[i] + uc * (uc / a[i]).ln() - uc + a[i];
            }
            v
        };
        let gr = |u: &[f64]| {
            (0..3)
                .map(|i| g_lin[i] + (u[i].max(1e-15) / a[i]).ln())
                .collect::<Vec<_>>()
        };
        let u = minimize_on(&TestDomain::Simplex { dim: 3 }, &f, &gr, &a);
        assert!((u[0] - 0.5).abs() < 1e-9, "{u:?}");
        assert!((u[1] - 0.25).abs() < 1e-9);
        assert!((u[2] - 0.25).abs() < 1e-9);
    }
}
