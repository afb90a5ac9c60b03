//! Feasible sets and their projection / linear-minimization oracles.

use rand::Rng;

use crate::error::{CoreError, CoreResult};
use crate::metric::DiagMetric;
use crate::scalar::{fl, Scalar};
use crate::vector::Vector;

/// Absolute tolerance of the membership-by-projection test.
const MEMBERSHIP_TOL: f64 = 1e-12;

/// Feasible set with closed-form Euclidean projection.
#[derive(Debug, Clone, PartialEq)]
pub enum Domain<F: Scalar> {
    /// All of R^d.
    FreeSpace { dim: usize },
    /// Euclidean ball `{x : |x - center| <= radius}`, radius > 0.
    Ball { center: Vector<F>, radius: F },
    /// Axis-aligned box `{x : lower <= x <= upper}` component-wise.
    Box { lower: Vector<F>, upper: Vector<F> },
    /// Probability simplex `{x >= 0 : sum x = 1}`.
    Simplex { dim: usize },
}

impl<F: Scalar> Domain<F> {
    pub fn ball(center: Vector<F>, radius: F) -> CoreResult<Self> {
        if !(radius > F::zero()) || !radius.is_finite() {
            return Err(CoreError::InvalidConfig(
                "ball radius must be strictly positive and finite".into(),
            ));
        }
        Ok(Domain::Ball { center, radius })
    }

    pub fn boxed(lower: Vector<F>, upper: Vector<F>) -> CoreResult<Self> {
        lower.check_dim(upper.dim())?;
        if lower
            .as_slice()
            .iter()
            .zip(upper.as_slice())
            .any(|(l, u)| l > u)
        {
            return Err(CoreError::InvalidConfig(
                "box lower bound exceeds upper bound".into(),
            ));
        }
        Ok(Domain::Box { lower, upper })
    }

    pub fn dim(&self) -> usize {
        match self {
            Domain::FreeSpace { dim } | Domain::Simplex { dim } => *dim,
            Domain::Ball { center, .. } => center.dim(),
            Domain::Box { lower, .. } => lower.dim(),
        }
    }

    pub fn is_bounded(&self) -> bool {
        !matches!(self, Domain::FreeSpace { .. })
    }

    /// l2 diameter `max |x - y|` over the domain; `None` for free space.
    pub fn l2_diameter(&self) -> Option<F> {
        match self {
            Domain::FreeSpace { .. } => None,
            Domain::Ball { radius, .. } => Some(fl::<F>(2.0) * *radius),
            Domain::Box { lower, upper } => Some(upper.sub(lower).norm()),
            Domain::Simplex { .. } => Some(fl::<F>(2.0).sqrt()),
        }
    }

    /// l-infinity diameter; `None` for free space.
    pub fn linf_diameter(&self) -> Option<F> {
        match self {
            Domain::FreeSpace { .. } => None,
            Domain::Ball { radius, .. } => Some(fl::<F>(2.0) * *radius),
            Domain::Box { lower, upper } => Some(upper.sub(lower).norm_inf()),
            Domain::Simplex { .. } => Some(F::one()),
        }
    }

    /// Euclidean projection onto the domain.
    pub fn project(&self, p: &Vector<F>) -> CoreResult<Vector<F>> {
        p.check_dim(self.dim())?;
        if !p.is_finite() {
            return Err(CoreError::NonFinite {
                context: "projection input",
            });
        }
        Ok(match self {
            Domain::FreeSpace { .. } => p.clone(),
            Domain::Ball { center, radius } => {
                let delta = p.sub(center);
                let norm = delta.norm();
                // The ulp-level slack keeps projection exactly idempotent:
                // a freshly projected point re-projects to itself bit-for-bit.
                let slack = F::one() + fl::<F>(4.0) * F::epsilon();
                if norm <= *radius * slack {
                    p.clone()
                } else {
                    center.add_scaled(*radius / norm, &delta)
                }
            }
            Domain::Box { lower, upper } => Vector::from_vec_unchecked(
                p.as_slice()
                    .iter()
                    .zip(lower.as_slice().iter().zip(upper.as_slice()))
                    .map(|(v, (l, u))| v.max(*l).min(*u))
                    .collect(),
            ),
            Domain::Simplex { .. } => project_simplex(p),
        })
    }

    /// Distance from `p` to the domain.
    pub fn distance(&self, p: &Vector<F>) -> CoreResult<F> {
        Ok(self.project(p)?.dist(p))
    }

    /// Membership test, consistent with projection: a point is a member iff
    /// the projection moves it by at most 1e-12.
    pub fn contains(&self, p: &Vector<F>) -> CoreResult<bool> {
        Ok(self.distance(p)? <= fl(MEMBERSHIP_TOL))
    }

    /// Projection in the diagonal Mahalanobis norm: `argmin |u - p|_D` over
    /// the domain.
    ///
    /// Box and free space are separable so the Euclidean answer is exact.
    /// The ball case solves for the Lagrange multiplier by safeguarded
    /// bisection on the radius equation (residual 1e-10, at most 200 steps).
    pub fn project_diag(&self, p: &Vector<F>, metric: &DiagMetric<F>) -> CoreResult<Vector<F>> {
        p.check_dim(self.dim())?;
        metric.check_dim(self.dim())?;
        match self {
            Domain::FreeSpace { .. } | Domain::Box { .. } => self.project(p),
            Domain::Ball { center, radius } => {
                let delta = p.sub(center);
                if delta.norm() <= *radius {
                    return Ok(p.clone());
                }
                let w = metric.weights();
                // u(lam)_i = c_i + d_i * w_i / (w_i + lam); residual(lam) = |u - c| - r.
                let residual = |lam: F| -> F {
                    let mut acc = F::zero();
                    for (d, wi) in delta.as_slice().iter().zip(w) {
                        let s = *d * *wi / (*wi + lam);
                        acc = acc + s * s;
                    }
                    acc.sqrt() - *radius
                };
                let mut lo = F::zero();
                let mut hi = F::one();
                let mut guard = 0;
                while residual(hi) > F::zero() {
                    hi = hi * fl(2.0);
                    guard += 1;
                    if guard > 2000 {
                        return Err(CoreError::InvalidConfig(
                            "ball projection bisection failed to bracket the multiplier".into(),
                        ));
                    }
                }
                let tol = fl::<F>(1e-10);
                let mut lam = (lo + hi) * fl(0.5);
                for _ in 0..200 {
                    lam = (lo + hi) * fl(0.5);
                    let r = residual(lam);
                    if r.abs() <= tol {
                        break;
                    }
                    if r > F::zero() {
                        lo = lam;
                    } else {
                        hi = lam;
                    }
                }
                let out: Vec<F> = delta
                    .as_slice()
                    .iter()
                    .zip(w)
                    .zip(center.as_slice())
                    .map(|((d, wi), c)| *c + *d * *wi / (*wi + lam))
                    .collect();
                Vector::new(out)
            }
            Domain::Simplex { .. } => project_simplex_diag(p, metric),
        }
    }

    /// `argmin <g, u>` over the domain. Degenerate case of the prox
    /// subproblems when the quadratic coefficient vanishes.
    pub fn linear_minimize(&self, g: &Vector<F>) -> CoreResult<Vector<F>> {
        g.check_dim(self.dim())?;
        if !g.is_finite() {
            return Err(CoreError::NonFinite {
                context: "linear_minimize gradient",
            });
        }
        match self {
            Domain::FreeSpace { dim } => {
                if g.norm_inf() > F::zero() {
                    Err(CoreError::UnboundedSubproblem(
                        "linear minimization over free space".into(),
                    ))
                } else {
                    Ok(Vector::zeros(*dim))
                }
            }
            Domain::Ball { center, radius } => {
                let norm = g.norm();
                if norm == F::zero() {
                    Ok(center.clone())
                } else {
                    Ok(center.add_scaled(-*radius / norm, g))
                }
            }
            Domain::Box { lower, upper } => Ok(Vector::from_vec_unchecked(
                g.as_slice()
                    .iter()
                    .zip(lower.as_slice().iter().zip(upper.as_slice()))
                    .map(|(gi, (l, u))| if *gi < F::zero() { *u } else { *l })
                    .collect(),
            )),
            Domain::Simplex { dim } => {
                let mut best = 0;
                for i in 1..*dim {
                    if g[i] < g[best] {
                        best = i;
                    }
                }
                Ok(Vector::basis(*dim, best))
            }
        }
    }

    /// Uniform-ish sample from a bounded domain (exact for box/ball/simplex).
    pub fn sample_point<R: Rng + ?Sized>(&self, rng: &mut R) -> CoreResult<Vector<F>> {
        match self {
            Domain::FreeSpace { .. } => Err(CoreError::UnboundedSubproblem(
                "cannot sample uniformly from free space".into(),
            )),
            Domain::Ball { center, radius } => {
                let dim = center.dim();
                let dir: Vec<f64> = (0..dim).map(|_| gaussian(rng)).collect();
                let norm = dir.iter().map(|v| v * v).sum::<f64>().sqrt().max(1e-300);
                let u: f64 = rng.random_range(0.0..1.0);
                let r = u.powf(1.0 / dim as f64);
                let v: Vec<F> = dir.iter().map(|d| fl::<F>(d / norm * r)).collect();
                Ok(center.add_scaled(*radius, &Vector::new(v)?))
            }
            Domain::Box { lower, upper } => {
                let v: Vec<F> = lower
                    .as_slice()
                    .iter()
                    .zip(upper.as_slice())
                    .map(|(l, u)| {
                        let t: f64 = rng.random_range(0.0..1.0);
                        *l + (*u - *l) * fl::<F>(t)
                    })
                    .collect();
                Vector::new(v)
            }
            Domain::Simplex { dim } => {
                // Exponential spacings normalize to a uniform simplex sample.
                let e: Vec<f64> = (0..*dim)
                    .map(|_| -(rng.random_range(1e-300..1.0f64).ln()))
                    .collect();
                let s: f64 = e.iter().sum();
                Vector::new(e.iter().map(|v| fl::<F>(v / s)).collect())
            }
        }
    }

    /// A boundary point in direction `dir` (bounded domains only); used by
    /// merit-function search oracles.
    pub fn support_point(&self, dir: &Vector<F>) -> CoreResult<Vector<F>> {
        // argmax <dir, u> = argmin <-dir, u>
        self.linear_minimize(&dir.scale(-F::one()))
    }
}

/// Euclidean projection onto the probability simplex (sort and threshold).
fn project_simplex<F: Scalar>(p: &Vector<F>) -> Vector<F> {
    // Members return unchanged so projection is exactly idempotent; the
    // ulp-level sum slack matches what thresholding itself can produce.
    let eps = F::epsilon() * fl::<F>(64.0);
    if p.as_slice().iter().all(|v| *v >= F::zero()) && (p.sum() - F::one()).abs() <= eps {
        return p.clone();
    }
    let mut sorted: Vec<F> = p.as_slice().to_vec();
    sorted.sort_by(|a, b| b.partial_cmp(a).expect("finite entries"));
    let mut cumsum = F::zero();
    let mut theta = F::zero();
    for (j, v) in sorted.iter().enumerate() {
        cumsum = cumsum + *v;
        let k = fl::<F>((j + 1) as f64);
        let candidate = (cumsum - F::one()) / k;
        if *v - candidate > F::zero() {
            theta = candidate;
        } else {
            break;
        }
    }
    let mut out: Vec<F> = p
        .as_slice()
        .iter()
        .map(|v| (*v - theta).max(F::zero()))
        .collect();
    // Pin the sum to 1 up to one rounding step by adjusting the largest
    // coordinate; keeps the output inside the member fast path above.
    for _ in 0..4 {
        let s: F = out.iter().fold(F::zero(), |a, b| a + *b);
        if s == F::one() {
            break;
        }
        let mut argmax = 0;
        for (i, v) in out.iter().enumerate() {
            if *v > out[argmax] {
                argmax = i;
            }
        }
        out[argmax] = out[argmax] + (F::one() - s);
    }
    Vector::from_vec_unchecked(out)
}

/// Diagonal-metric projection onto the simplex via bisection on the
/// equality multiplier: `u_i = max(0, p_i - nu / w_i)`, `sum u = 1`.
fn project_simplex_diag<F: Scalar>(p: &Vector<F>, metric: &DiagMetric<F>) -> CoreResult<Vector<F>> {
    let w = metric.weights();
    let total = |nu: F| -> F {
        let mut acc = F::zero();
        for (pi, wi) in p.as_slice().iter().zip(w) {
            acc = acc + (*pi - nu / *wi).max(F::zero());
        }
        acc
    };
    let mut lo = -F::one();
    let mut guard = 0;
    while total(lo) < F::one() {
        lo = lo * fl(2.0);
        guard += 1;
        if guard > 2000 {
            return Err(CoreError::InvalidConfig(
                "simplex diag projection failed to bracket".into(),
            ));
        }
    }
    let mut hi = F::one();
    guard = 0;
    while total(hi) > F::one() {
        hi = hi * fl(2.0);
        guard += 1;
        if guard > 2000 {
            return Err(CoreError::InvalidConfig(
                "simplex diag projection failed to bracket".into(),
            ));
        }
    }
    for _ in 0..200 {
        let mid = (lo + hi) * fl(0.5);
        if total(mid) >= F::one() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let nu = (lo + hi) * fl(0.5);
    let raw: Vec<F> = p
        .as_slice()
        .iter()
        .zip(w)
        .map(|(pi, wi)| (*pi - nu / *wi).max(F::zero()))
        .collect();
    // Renormalize the residual mass so the output lies exactly on the simplex.
    let s: F = raw.iter().fold(F::zero(), |a, b| a + *b);
    if s <= F::zero() {
        return Err(CoreError::InvalidConfig(
            "simplex diag projection collapsed to zero".into(),
        ));
    }
    Vector::new(raw.into_iter().map(|v| v / s).collect())
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    // Box-Muller; avoids pulling rand_distr into the core crate.
    let u1: f64 = rng.random_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.random_range(0.0..1.0);
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}
