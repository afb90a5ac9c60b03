//! Naive feasible-set descriptions with from-scratch projections.

/// Feasible set, mirrored from the production crate but re-implemented here.
#[derive(Debug, Clone)]
pub enum TestDomain {
    Free { dim: usize },
    Ball { center: Vec<f64>, radius: f64 },
    Box { lower: Vec<f64>, upper: Vec<f64> },
    Simplex { dim: usize },
}

impl TestDomain {
    pub fn dim(&self) -> usize {
        match self {
            TestDomain::Free { dim } | TestDomain::Simplex { dim } => *dim,
            TestDomain::Ball { center, .. } => center.len(),
            TestDomain::Box { lower, .. } => lower.len(),
        }
    }
}

/// Euclidean projection; the simplex case uses Michelot's iterative
/// active-set algorithm rather than sort-and-threshold.
pub fn naive_project(domain: &TestDomain, p: &[f64]) -> Vec<f64> {
    match domain {
        TestDomain::Free { .. } => p.to_vec(),
        TestDomain::Ball { center, radius } => {
            let delta: Vec<f64> = p.iter().zip(center).map(|(a, c)| a - c).collect();
            let n = delta.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n <= *radius {
                p.to_vec()
            } else {
                center
                    .iter()
                    .zip(&delta)
                    .map(|(c, d)| c + d * radius / n)
                    .collect()
            }
        }
        TestDomain::Box { lower, upper } => p
            .iter()
            .zip(lower.iter().zip(upper))
            .map(|(v, (l, u))| v.max(*l).min(*u))
            .collect(),
        TestDomain::Simplex { dim } => michelot_simplex(p, *dim),
    }
}

fn michelot_simplex(p: &[f64], dim: usize) -> Vec<f64> {
    let mut active: Vec<bool> = vec![true; dim];
    let mut nu;
    loop {
        let count = active.iter().filter(|a| **a).count();
        let sum: f64 = p
            .iter()
            .zip(&active)
            .filter(|(_, a)| **a)
            .map(|(v, _)| *v)
            .sum();
        nu = (sum - 1.0) / count as f64;
        let mut removed = false;
        for i in 0..dim {
            if active[i] && p[i] - nu <= 0.0 {
                active[i] = false;
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    (0..dim)
        .map(|i| if active[i] { p[i] - nu } else { 0.0 })
        .collect()
}
