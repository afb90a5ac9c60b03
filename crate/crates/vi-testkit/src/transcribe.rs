//! Straight-line transcriptions of every stepper, written directly from the
//! update rules with the generic argmin in place of closed-form prox steps.
//!
//! Oracles passed in here must be deterministic functions of the query point
//! (the cross-checks run in deterministic mode), so re-evaluating F at a
//! stored iterate reproduces the solver's cached value exactly.

use crate::argmin::minimize_on;
use crate::domain::{naive_project, TestDomain};
use crate::{dot, norm_sq, sub};

pub type OracleFn<'a> = &'a dyn Fn(&[f64]) -> Vec<f64>;

/// Iterates produced by a transcription: `x[t]`, `z[t]` for t = 0..=T, and
/// the step-size sequence (`gamma[t]` = scalar, or `diag[t]` per coordinate).
#[derive(Debug, Clone, Default)]
pub struct Transcript {
    pub x: Vec<Vec<f64>>,
    pub z: Vec<Vec<f64>>,
    pub gamma: Vec<f64>,
    pub diag: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestMirror {
    Euclidean,
    Entropy,
}

fn breg(mirror: TestMirror, u: &[f64], a: &[f64]) -> f64 {
    match mirror {
        TestMirror::Euclidean => 0.5 * norm_sq(&sub(u, a)),
        TestMirror::Entropy => {
            let mut acc = 0.0;
            for (ui, ai) in u.iter().zip(a) {
                let uc = ui.max(1e-15);
                let ac = ai.max(1e-15);
                acc += uc * (uc / ac).ln() - uc + ac;
            }
            acc
        }
    }
}

fn breg_grad(mirror: TestMirror, u: &[f64], a: &[f64]) -> Vec<f64> {
    match mirror {
        TestMirror::Euclidean => sub(u, a),
        TestMirror::Entropy => u
            .iter()
            .zip(a)
            .map(|(ui, ai)| (ui.max(1e-15) / ai.max(1e-15)).ln())
            .collect(),
    }
}

/// argmin over the domain of `<g, u> + sum_k c_k D(u, a_k)` with the mirror
/// map `mirror`, solved numerically.
fn argmin_prox(
    domain: &TestDomain,
    mirror: TestMirror,
    g: &[f64],
    anchors: &[(&[f64], f64)],
    start: &[f64],
) -> Vec<f64> {
    let f = |u: &[f64]| -> f64 {
        let mut v = dot(g, u);
        for (a, c) in anchors {
            if *c != 0.0 {
                v += c * breg(mirror, u, a);
            }
        }
        v
    };
    let gr = |u: &[f64]| -> Vec<f64> {
        let mut out = g.to_vec();
        for (a, c) in anchors {
            if *c != 0.0 {
                for (o, d) in out.iter_mut().zip(breg_grad(mirror, u, a)) {
                    *o += c * d;
                }
            }
        }
        out
    };
    minimize_on(domain, &f, &gr, start)
}

/// Like `argmin_prox` but with per-coordinate quadratic weights.
fn argmin_prox_diag(
    domain: &TestDomain,
    g: &[f64],
    anchors: &[(&[f64], &[f64])],
    start: &[f64],
) -> Vec<f64> {
    let f = |u: &[f64]| -> f64 {
        let mut v = dot(g, u);
        for (a, w) in anchors {
            for i in 0..u.len() {
                v += 0.5 * w[i] * (u[i] - a[i]).powi(2);
            }
        }
        v
    };
    let gr = |u: &[f64]| -> Vec<f64> {
        let mut out = g.to_vec();
        for (a, w) in anchors {
            for i in 0..u.len() {
                out[i] += w[i] * (u[i] - a[i]);
            }
        }
        out
    };
    minimize_on(domain, &f, &gr, start)
}

fn gamma_update(eta: f64, gamma0: f64, sq_sum: f64) -> f64 {
    (eta * eta * gamma0 * gamma0 + sq_sum).sqrt() / eta
}

pub fn adapeg(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    mirror: TestMirror,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.gamma.push(gamma0);
    let mut sq_sum = 0.0;
    for t in 1..=t_max {
        let f_prev = oracle(&tr.x[t - 1]);
        let g_prev = tr.gamma[t - 1];
        let x_t = argmin_prox(domain, mirror, &f_prev, &[(&tr.z[t - 1], g_prev)], &tr.z[t - 1]);
        let f_t = oracle(&x_t);
        sq_sum += norm_sq(&sub(&f_t, &f_prev));
        let g_t = gamma_update(eta, gamma0, sq_sum);
        let z_t = argmin_prox(
            domain,
            mirror,
            &f_t,
            &[(&tr.z[t - 1], g_prev), (&x_t, g_t - g_prev)],
            &tr.z[t - 1],
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.gamma.push(g_t);
    }
    tr
}

pub fn adapeg_unbounded(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    mirror: TestMirror,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.gamma.push(gamma0);
    let mut sq_sum = 0.0;
    for t in 1..=t_max {
        // gamma_{-1} = 0 per the header.
        let g2 = if t >= 2 { tr.gamma[t - 2] } else { 0.0 };
        let g1 = tr.gamma[t - 1];
        let f_prev = oracle(&tr.x[t - 1]);
        let anchors_x: Vec<(&[f64], f64)> =
            vec![(&tr.z[t - 1], g2), (&tr.x[0], g1 - g2)];
        let x_t = argmin_prox(domain, mirror, &f_prev, &anchors_x, &tr.z[t - 1]);
        let f_t = oracle(&x_t);
        let anchors_z: Vec<(&[f64], f64)> =
            vec![(&tr.z[t - 1], g2), (&tr.x[0], g1 - g2)];
        let z_t = argmin_prox(domain, mirror, &f_t, &anchors_z, &tr.z[t - 1]);
        sq_sum += norm_sq(&sub(&f_t, &f_prev));
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.gamma.push(gamma_update(eta, gamma0, sq_sum));
    }
    tr
}

pub fn adaeg(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.gamma.push(gamma0);
    let mut sq_sum = 0.0;
    for t in 1..=t_max {
        let f_z = oracle(&tr.z[t - 1]);
        let g_prev = tr.gamma[t - 1];
        let x_t = argmin_prox(
            domain,
            TestMirror::Euclidean,
            &f_z,
            &[(&tr.z[t - 1], g_prev)],
            &tr.z[t - 1],
        );
        let f_x = oracle(&x_t);
        sq_sum += norm_sq(&sub(&f_x, &f_z));
        let g_t = gamma_update(eta, gamma0, sq_sum);
        let z_t = argmin_prox(
            domain,
            TestMirror::Euclidean,
            &f_x,
            &[(&tr.z[t - 1], g_prev), (&x_t, g_t - g_prev)],
            &tr.z[t - 1],
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.gamma.push(g_t);
    }
    tr
}

pub fn adaeg_unbounded(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.gamma.push(gamma0);
    let mut sq_sum = 0.0;
    for t in 1..=t_max {
        let g2 = if t >= 2 { tr.gamma[t - 2] } else { 0.0 };
        let g1 = tr.gamma[t - 1];
        let f_z = oracle(&tr.z[t - 1]);
        let anchors: Vec<(&[f64], f64)> = vec![(&tr.z[t - 1], g2), (&tr.x[0], g1 - g2)];
        let x_t = argmin_prox(domain, TestMirror::Euclidean, &f_z, &anchors, &tr.z[t - 1]);
        let f_x = oracle(&x_t);
        let z_t = argmin_prox(domain, TestMirror::Euclidean, &f_x, &anchors, &tr.z[t - 1]);
        sq_sum += norm_sq(&sub(&f_x, &f_z));
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.gamma.push(gamma_update(eta, gamma0, sq_sum));
    }
    tr
}

fn diag_update(eta: f64, d0: &[f64], sq_sums: &[f64]) -> Vec<f64> {
    d0.iter()
        .zip(sq_sums)
        .map(|(d, s)| (eta * eta * d * d + s).sqrt() / eta)
        .collect()
}

pub fn adapeg_vector(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let dim = x0.len();
    let d0 = vec![gamma0; dim];
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.diag.push(d0.clone());
    let mut sq_sums = vec![0.0; dim];
    for t in 1..=t_max {
        let f_prev = oracle(&tr.x[t - 1]);
        let d_prev = tr.diag[t - 1].clone();
        let x_t = argmin_prox_diag(
            domain,
            &f_prev,
            &[(&tr.z[t - 1], &d_prev)],
            &tr.z[t - 1],
        );
        let f_t = oracle(&x_t);
        for i in 0..dim {
            sq_sums[i] += (f_t[i] - f_prev[i]).powi(2);
        }
        let d_t = diag_update(eta, &d0, &sq_sums);
        let extra: Vec<f64> = d_t.iter().zip(&d_prev).map(|(a, b)| a - b).collect();
        let z_t = argmin_prox_diag(
            domain,
            &f_t,
            &[(&tr.z[t - 1], &d_prev), (&x_t, &extra)],
            &tr.z[t - 1],
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.diag.push(d_t);
    }
    tr
}

pub fn adapeg_vector_unbounded(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    t_max: usize,
) -> Transcript {
    let dim = x0.len();
    let d0 = vec![gamma0; dim];
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.diag.push(d0.clone());
    let mut sq_sums = vec![0.0; dim];
    for t in 1..=t_max {
        let d2 = if t >= 2 {
            tr.diag[t - 2].clone()
        } else {
            vec![0.0; dim]
        };
        let d1 = tr.diag[t - 1].clone();
        let delta: Vec<f64> = d1.iter().zip(&d2).map(|(a, b)| a - b).collect();
        let f_prev = oracle(&tr.x[t - 1]);
        let x_t = argmin_prox_diag(
            domain,
            &f_prev,
            &[(&tr.z[t - 1], &d2), (&tr.x[0], &delta)],
            &tr.z[t - 1],
        );
        let f_t = oracle(&x_t);
        let z_t = argmin_prox_diag(
            domain,
            &f_t,
            &[(&tr.z[t - 1], &d2), (&tr.x[0], &delta)],
            &tr.z[t - 1],
        );
        for i in 0..dim {
            sq_sums[i] += (f_t[i] - f_prev[i]).powi(2);
        }
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.diag.push(diag_update(eta, &d0, &sq_sums));
    }
    tr
}

pub fn single_call_movement(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    r_inf: f64,
    t_max: usize,
) -> Transcript {
    let dim = x0.len();
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.diag.push(vec![gamma0; dim]);
    for t in 1..=t_max {
        let d_prev = tr.diag[t - 1].clone();
        let f_prev = oracle(&tr.x[t - 1]);
        let x_t = argmin_prox_diag(domain, &f_prev, &[(&tr.z[t - 1], &d_prev)], &tr.z[t - 1]);
        let f_t = oracle(&x_t);
        let z_t = argmin_prox_diag(domain, &f_t, &[(&tr.z[t - 1], &d_prev)], &tr.z[t - 1]);
        let d_t: Vec<f64> = (0..dim)
            .map(|i| {
                let move_sq =
                    (x_t[i] - tr.z[t - 1][i]).powi(2) + (x_t[i] - z_t[i]).powi(2);
                (d_prev[i] * d_prev[i] * (1.0 + move_sq / (2.0 * r_inf * r_inf))).sqrt()
            })
            .collect();
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.diag.push(d_t);
    }
    tr
}

/// `z_t` drops the extra `|u - x_t|^2` term; `use_current_gamma` selects the
/// optimistic variant (gamma_t) over the past-extra-gradient one (gamma_{t-1}).
pub fn adapeg_variant(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    gamma0: f64,
    eta: f64,
    use_current_gamma: bool,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    tr.gamma.push(gamma0);
    let mut sq_sum = 0.0;
    for t in 1..=t_max {
        let g_prev = tr.gamma[t - 1];
        let f_prev = oracle(&tr.x[t - 1]);
        let x_t = argmin_prox(
            domain,
            TestMirror::Euclidean,
            &f_prev,
            &[(&tr.z[t - 1], g_prev)],
            &tr.z[t - 1],
        );
        let f_t = oracle(&x_t);
        sq_sum += norm_sq(&sub(&f_t, &f_prev));
        let g_t = gamma_update(eta, gamma0, sq_sum);
        let g_used = if use_current_gamma { g_t } else { g_prev };
        let z_t = argmin_prox(
            domain,
            TestMirror::Euclidean,
            &f_t,
            &[(&tr.z[t - 1], g_used)],
            &tr.z[t - 1],
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
        tr.gamma.push(g_t);
    }
    tr
}

/// Non-adaptive extra-gradient with the step schedule `eta_t`.
pub fn eg(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    eta_t: &dyn Fn(usize) -> f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    for t in 1..=t_max {
        let step = eta_t(t);
        let f_z = oracle(&tr.z[t - 1]);
        let x_t = naive_project(
            domain,
            &tr.z[t - 1]
                .iter()
                .zip(&f_z)
                .map(|(z, f)| z - step * f)
                .collect::<Vec<_>>(),
        );
        let f_x = oracle(&x_t);
        let z_t = naive_project(
            domain,
            &tr.z[t - 1]
                .iter()
                .zip(&f_x)
                .map(|(z, f)| z - step * f)
                .collect::<Vec<_>>(),
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
    }
    tr
}

/// Non-adaptive past extra-gradient: extrapolates with the previous value.
pub fn peg(
    oracle: OracleFn<'_>,
    domain: &TestDomain,
    x0: &[f64],
    eta_t: &dyn Fn(usize) -> f64,
    t_max: usize,
) -> Transcript {
    let mut tr = Transcript::default();
    tr.x.push(x0.to_vec());
    tr.z.push(x0.to_vec());
    for t in 1..=t_max {
        let step = eta_t(t);
        let f_prev = oracle(&tr.x[t - 1]);
        let x_t = naive_project(
            domain,
            &tr.z[t - 1]
                .iter()
                .zip(&f_prev)
                .map(|(z, f)| z - step * f)
                .collect::<Vec<_>>(),
        );
        let f_x = oracle(&x_t);
        let z_t = naive_project(
            domain,
            &tr.z[t - 1]
                .iter()
                .zip(&f_x)
                .map(|(z, f)| z - step * f)
                .collect::<Vec<_>>(),
        );
        tr.x.push(x_t);
        tr.z.push(z_t);
    }
    tr
}

/// Adam-style update transcription; moments recomputed from the explicit
/// geometric sums rather than the incremental recurrences.
///
/// Returns `theta[0..=T]` with `theta[0]` the initial parameters.
pub fn adapeg_adam(
    grads: &[Vec<f64>],
    theta0: &[f64],
    eta: f64,
    beta1: f64,
    beta2: f64,
    epsilon: f64,
) -> Vec<Vec<f64>> {
    let dim = theta0.len();
    let t_max = grads.len();
    let mut thetas = vec![theta0.to_vec()];
    // m_t = (1 - b1) * sum_{s=1..t} b1^{t-s} g_s ; v_t analogous on squared
    // gradient differences (g_0 = 0 by convention).
    let m_at = |t: usize, i: usize| -> f64 {
        let mut acc = 0.0;
        for s in 1..=t {
            acc += beta1.powi((t - s) as i32) * grads[s - 1][i];
        }
        (1.0 - beta1) * acc
    };
    let v_at = |t: usize, i: usize| -> f64 {
        let mut acc = 0.0;
        for s in 1..=t {
            let prev = if s >= 2 { grads[s - 2][i] } else { 0.0 };
            acc += beta2.powi((t - s) as i32) * (grads[s - 1][i] - prev).powi(2);
        }
        (1.0 - beta2) * acc
    };
    let term = |t: usize, i: usize| -> f64 {
        if t == 0 {
            return 0.0;
        }
        let mh = m_at(t, i) / (1.0 - beta1.powi(t as i32));
        let vh = v_at(t, i) / (1.0 - beta2.powi(t as i32));
        mh / (vh.sqrt() + epsilon)
    };
    for t in 1..=t_max {
        let prev = thetas[t - 1].clone();
        let next: Vec<f64> = (0..dim)
            .map(|i| prev[i] - 2.0 * eta * term(t, i) + eta * term(t - 1, i))
            .collect();
        thetas.push(next);
    }
    thetas
}
