//! Brute-force grid search oracles.

/// Minimizes `f` over the 3-simplex on the barycentric grid with spacing
/// `1/resolution`; returns (argmin, min value).
pub fn simplex3_grid_min(f: &dyn Fn(&[f64]) -> f64, resolution: usize) -> (Vec<f64>, f64) {
    let n = resolution;
    let mut best = (vec![1.0, 0.0, 0.0], f(&[1.0, 0.0, 0.0]));
    for i in 0..=n {
        for j in 0..=(n - i) {
            let k = n - i - j;
            let u = [
                i as f64 / n as f64,
                j as f64 / n as f64,
                k as f64 / n as f64,
            ];
            let v = f(&u);
            if v < best.1 {
                best = (u.to_vec(), v);
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_vertex_minimum() {
        let f = |u: &[f64]| u[0] + 2.0 * u[1] + 3.0 * u[2];
        let (arg, val) = simplex3_grid_min(&f, 100);
        assert_eq!(arg, vec![1.0, 0.0, 0.0]);
        assert!((val - 1.0).abs() < 1e-12);
    }
}
