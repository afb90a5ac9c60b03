//! Projection, linear minimization, and prox subproblems against
//! independent oracles (grid search, Michelot projection, generic argmin).

use rand::Rng;

use vi_core::rng::substream;
use vi_core::{fl, prox_diag, prox_step, DiagMetric, Domain, MirrorMap, Vector};
use vi_testkit::{grid::simplex3_grid_min, minimize_on, naive_project, TestDomain};

fn vec64(s: &[f64]) -> Vector<f64> {
    Vector::from_slice(s).unwrap()
}

#[test]
fn ball_projection_scales_radially() {
    let domain = Domain::ball(Vector::zeros(2), 1.0).unwrap();
    let u = domain.project(&vec64(&[3.0, 4.0])).unwrap();
    assert!((u[0] - 0.6).abs() < 1e-15);
    assert!((u[1] - 0.8).abs() < 1e-15);
}

#[test]
fn projection_is_identity_inside() {
    let p = vec64(&[0.25, -0.1]);
    for domain in [
        Domain::FreeSpace { dim: 2 },
        Domain::ball(Vector::zeros(2), 1.0).unwrap(),
        Domain::boxed(vec64(&[-1.0, -1.0]), vec64(&[1.0, 1.0])).unwrap(),
    ] {
        assert_eq!(domain.project(&p).unwrap().as_slice(), p.as_slice());
    }
    let s = vec64(&[0.5, 0.3, 0.2]);
    let simplex = Domain::Simplex { dim: 3 };
    assert_eq!(simplex.project(&s).unwrap().as_slice(), s.as_slice());
}

#[test]
fn simplex_projection_matches_grid_and_michelot() {
    let simplex = Domain::<f64>::Simplex { dim: 3 };
    let p = vec64(&[0.5, 0.5, 0.5]);
    let u = simplex.project(&p).unwrap();

    // Independent route 1: brute-force grid at resolution 1e-3.
    let objective = |y: &[f64]| {
        (y[0] - 0.5f64).powi(2) + (y[1] - 0.5f64).powi(2) + (y[2] - 0.5f64).powi(2)
    };
    let (grid_arg, grid_val) = simplex3_grid_min(&objective, 1000);
    assert!(objective(u.as_slice()) <= grid_val + 1e-12);
    for i in 0..3 {
        assert!((u[i] - grid_arg[i]).abs() < 2e-3);
    }

    // Independent route 2: Michelot's active-set algorithm.
    let m = naive_project(&TestDomain::Simplex { dim: 3 }, p.as_slice());
    for i in 0..3 {
        assert!((u[i] - m[i]).abs() < 1e-12);
    }
}

#[test]
fn projection_idempotent_and_optimal() {
    let mut rng = substream(11, 0, 0);
    let domains: Vec<Domain<f64>> = vec![
        Domain::ball(vec64(&[0.5, -1.0, 2.0]), 1.7).unwrap(),
        Domain::boxed(vec64(&[-1.0, 0.0, -3.0]), vec64(&[1.0, 0.5, -1.0])).unwrap(),
        Domain::Simplex { dim: 3 },
    ];
    for domain in &domains {
        for _ in 0..50 {
            let p = Vector::from_fn(3, |_| rng.random_range(-5.0..5.0)).unwrap();
            let u = domain.project(&p).unwrap();
            // Idempotence is exact.
            assert_eq!(domain.project(&u).unwrap().as_slice(), u.as_slice());
            // Optimality vs random members.
            let du = u.dist(&p);
            for _ in 0..1000 {
                let y = domain.sample_point(&mut rng).unwrap();
                assert!(du <= y.dist(&p) + 1e-12);
            }
            // Membership consistent with projection.
            assert!(domain.contains(&u).unwrap());
        }
    }
}

#[test]
fn diag_projection_reduces_to_euclidean_for_uniform_weights() {
    let mut rng = substream(12, 0, 0);
    let domain = Domain::ball(Vector::zeros(4), 1.3).unwrap();
    let metric = DiagMetric::uniform(4, 2.5).unwrap();
    for _ in 0..20 {
        let p = Vector::from_fn(4, |_| rng.random_range(-4.0..4.0)).unwrap();
        let a = domain.project(&p).unwrap();
        let b = domain.project_diag(&p, &metric).unwrap();
        assert!(a.dist(&b) < 1e-9, "{a:?} vs {b:?}");
    }
}

#[test]
fn diag_ball_projection_matches_descent_oracle() {
    let mut rng = substream(13, 0, 0);
    let domain = Domain::ball(Vector::zeros(3), 1.0).unwrap();
    let metric = DiagMetric::new(vec![1.0, 4.0, 9.0]).unwrap();
    for _ in 0..10 {
        let dir: Vector<f64> = Vector::from_fn(3, |_| rng.random_range(-1.0..1.0)).unwrap();
        let p = dir.scale(2.0 / dir.norm());
        assert!((p.norm() - 2.0).abs() < 1e-12);
        let u = domain.project_diag(&p, &metric).unwrap();

        let w = [1.0, 4.0, 9.0];
        let ps = p.as_slice().to_vec();
        let f = move |y: &[f64]| -> f64 {
            y.iter()
                .zip(&ps)
                .zip(&w)
                .map(|((yi, pi), wi)| 0.5 * wi * (yi - pi) * (yi - pi))
                .sum()
        };
        let ps2 = p.as_slice().to_vec();
        let g = move |y: &[f64]| -> Vec<f64> {
            y.iter()
                .zip(&ps2)
                .zip(&w)
                .map(|((yi, pi), wi)| wi * (yi - pi))
                .collect()
        };
        let oracle = minimize_on(
            &TestDomain::Ball {
                center: vec![0.0; 3],
                radius: 1.0,
            },
            &f,
            &g,
            &[0.0; 3],
        );
        for i in 0..3 {
            assert!((u[i] - oracle[i]).abs() < 1e-8, "{u:?} vs {oracle:?}");
        }
    }
}

#[test]
fn diag_projection_identity_inside() {
    let domain = Domain::ball(Vector::zeros(2), 2.0).unwrap();
    let metric = DiagMetric::new(vec![3.0, 0.5]).unwrap();
    let p = vec64(&[0.3, -1.1]);
    assert_eq!(
        domain.project_diag(&p, &metric).unwrap().as_slice(),
        p.as_slice()
    );
}

#[test]
fn linear_minimize_closed_forms() {
    let ball = Domain::ball(Vector::zeros(2), 2.0).unwrap();
    assert_eq!(
        ball.linear_minimize(&vec64(&[1.0, 0.0])).unwrap().as_slice(),
        &[-2.0, 0.0]
    );
    assert_eq!(
        ball.linear_minimize(&vec64(&[0.0, 0.0])).unwrap().as_slice(),
        &[0.0, 0.0]
    );

    let simplex = Domain::<f64>::Simplex { dim: 4 };
    assert_eq!(
        simplex
            .linear_minimize(&vec64(&[3.0, 1.0, 2.0, 5.0]))
            .unwrap()
            .as_slice(),
        &[0.0, 1.0, 0.0, 0.0]
    );
    // Ties break toward the smallest index.
    assert_eq!(
        simplex
            .linear_minimize(&vec64(&[2.0, 1.0, 1.0, 5.0]))
            .unwrap()
            .as_slice(),
        &[0.0, 1.0, 0.0, 0.0]
    );

    let boxd = Domain::boxed(vec64(&[-1.0, -2.0]), vec64(&[3.0, 4.0])).unwrap();
    // Zero component ties toward the lower bound.
    assert_eq!(
        boxd.linear_minimize(&vec64(&[1.0, 0.0])).unwrap().as_slice(),
        &[-1.0, -2.0]
    );

    let free = Domain::<f64>::FreeSpace { dim: 2 };
    assert!(free.linear_minimize(&vec64(&[1.0, 0.0])).is_err());
}

#[test]
fn prox_step_euclidean_cases() {
    let ball = Domain::ball(Vector::zeros(2), 1.0).unwrap();
    let a = vec64(&[3.0, 4.0]);
    // Zero gradient, single anchor: projection of the anchor.
    let u = prox_step(&ball, MirrorMap::Euclidean, &Vector::zeros(2), &[(&a, 2.0)]).unwrap();
    assert!((u[0] - 0.6).abs() < 1e-15 && (u[1] - 0.8).abs() < 1e-15);

    // Weighted mean on free space.
    let free = Domain::FreeSpace { dim: 2 };
    let b = vec64(&[1.0, -1.0]);
    let u = prox_step(
        &free,
        MirrorMap::Euclidean,
        &Vector::zeros(2),
        &[(&a, 1.0), (&b, 3.0)],
    )
    .unwrap();
    assert!((u[0] - (3.0 + 3.0) / 4.0).abs() < 1e-15);
    assert!((u[1] - (4.0 - 3.0) / 4.0).abs() < 1e-15);

    // Zero total weight delegates to linear minimization on bounded domains
    // and fails on free space.
    let g = vec64(&[1.0, 0.0]);
    let u = prox_step(&ball, MirrorMap::Euclidean, &g, &[(&a, 0.0)]).unwrap();
    assert_eq!(u.as_slice(), &[-1.0, 0.0]);
    assert!(prox_step(&free, MirrorMap::Euclidean, &g, &[(&a, 0.0)]).is_err());
}

#[test]
fn prox_step_entropy_matches_grid_search() {
    let simplex = Domain::<f64>::Simplex { dim: 3 };
    let uniform = vec64(&[1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0]);
    let g = vec64(&[0.0, 2.0f64.ln(), 2.0f64.ln()]);
    let u = prox_step(&simplex, MirrorMap::NegativeEntropy, &g, &[(&uniform, 1.0)]).unwrap();
    assert!((u[0] - 0.5).abs() < 1e-12, "{u:?}");
    assert!((u[1] - 0.25).abs() < 1e-12);
    assert!((u[2] - 0.25).abs() < 1e-12);

    // Grid oracle at resolution 1e-4 on the composite objective.
    let gs = g.as_slice().to_vec();
    let objective = move |y: &[f64]| -> f64 {
        let mut v = 0.0;
        for i in 0..3 {
            let yc = y[i].max(1e-300);
            v += gs[i] * y[i] + yc * (yc * 3.0).ln() - yc + 1.0 / 3.0;
        }
        v
    };
    let (_, grid_val) = simplex3_grid_min(&objective, 10_000);
    assert!(objective(u.as_slice()) <= grid_val + 1e-8);
}

#[test]
fn entropy_mirror_requires_simplex() {
    let ball = Domain::ball(Vector::zeros(2), 1.0).unwrap();
    let a = vec64(&[0.5, 0.5]);
    assert!(prox_step(
        &ball,
        MirrorMap::NegativeEntropy,
        &Vector::zeros(2),
        &[(&a, 1.0)]
    )
    .is_err());
}

#[test]
fn prox_first_order_optimality() {
    let mut rng = substream(14, 0, 0);
    let domains: Vec<(Domain<f64>, MirrorMap)> = vec![
        (Domain::ball(Vector::zeros(3), 1.5).unwrap(), MirrorMap::Euclidean),
        (
            Domain::boxed(vec64(&[-1.0, -1.0, -1.0]), vec64(&[1.0, 2.0, 0.5])).unwrap(),
            MirrorMap::Euclidean,
        ),
        (Domain::Simplex { dim: 3 }, MirrorMap::NegativeEntropy),
    ];
    for (domain, mirror) in &domains {
        for _ in 0..5 {
            let g = Vector::from_fn(3, |_| rng.random_range(-2.0..2.0)).unwrap();
            let a1 = domain.sample_point(&mut rng).unwrap();
            let a2 = domain.sample_point(&mut rng).unwrap();
            let (c1, c2) = (rng.random_range(0.1..3.0), rng.random_range(0.1..3.0));
            let u = prox_step(domain, *mirror, &g, &[(&a1, c1), (&a2, c2)]).unwrap();
            let grad_at = |x: &Vector<f64>| {
                let gu = mirror.grad(x).unwrap();
                let g1 = mirror.grad(&a1).unwrap();
                let g2 = mirror.grad(&a2).unwrap();
                let mut out = g.clone();
                out = out.add_scaled(c1, &gu.sub(&g1));
                out = out.add_scaled(c2, &gu.sub(&g2));
                out
            };
            let grad_u = grad_at(&u);
            let scale = 1.0 + grad_u.norm();
            for _ in 0..1000 {
                let y = domain.sample_point(&mut rng).unwrap();
                let slack = grad_u.dot(&y.sub(&u));
                assert!(slack >= -1e-8 * scale, "optimality violated: {slack}");
            }
        }
    }
}

#[test]
fn prox_diag_matches_descent_oracle_on_box() {
    let mut rng = substream(15, 0, 0);
    let lower = vec64(&[-1.0, -1.0, -1.0, -1.0]);
    let upper = vec64(&[1.0, 1.5, 0.5, 2.0]);
    let domain = Domain::boxed(lower.clone(), upper.clone()).unwrap();
    for _ in 0..10 {
        let g = Vector::from_fn(4, |_| rng.random_range(-2.0..2.0)).unwrap();
        let a = domain.sample_point(&mut rng).unwrap();
        let b = domain.sample_point(&mut rng).unwrap();
        let w1: Vec<f64> = (0..4).map(|_| rng.random_range(0.1..2.0)).collect();
        let w2: Vec<f64> = (0..4).map(|_| rng.random_range(0.1..2.0)).collect();
        let u = prox_diag(&domain, &g, &[(&a, &w1), (&b, &w2)]).unwrap();

        let (gs, av, bv) = (g.as_slice().to_vec(), a.as_slice().to_vec(), b.as_slice().to_vec());
        let (w1c, w2c) = (w1.clone(), w2.clone());
        let f = move |y: &[f64]| -> f64 {
            let mut v = 0.0;
            for i in 0..4 {
                v += gs[i] * y[i]
                    + 0.5 * w1c[i] * (y[i] - av[i]).powi(2)
                    + 0.5 * w2c[i] * (y[i] - bv[i]).powi(2);
            }
            v
        };
        let (gs2, av2, bv2) = (g.as_slice().to_vec(), a.as_slice().to_vec(), b.as_slice().to_vec());
        let (w1d, w2d) = (w1.clone(), w2.clone());
        let gr = move |y: &[f64]| -> Vec<f64> {
            (0..4)
                .map(|i| gs2[i] + w1d[i] * (y[i] - av2[i]) + w2d[i] * (y[i] - bv2[i]))
                .collect()
        };
        let oracle = minimize_on(
            &TestDomain::Box {
                lower: lower.as_slice().to_vec(),
                upper: upper.as_slice().to_vec(),
            },
            &f,
            &gr,
            a.as_slice(),
        );
        for i in 0..4 {
            assert!((u[i] - oracle[i]).abs() < 1e-9);
        }
    }
}

#[test]
fn bregman_divergence_properties() {
    let mut rng = substream(16, 0, 0);
    let simplex = Domain::<f64>::Simplex { dim: 4 };
    for _ in 0..200 {
        let x = simplex.sample_point(&mut rng).unwrap();
        let y = simplex.sample_point(&mut rng).unwrap();
        for mirror in [MirrorMap::Euclidean, MirrorMap::NegativeEntropy] {
            let d = mirror.bregman(&x, &y).unwrap();
            assert!(d >= -1e-12);
            assert!(mirror.bregman(&x, &x).unwrap() <= 1e-12);
        }
    }
}
