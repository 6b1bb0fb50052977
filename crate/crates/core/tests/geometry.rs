#![allow(clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sagnac_wigner::geometry::{PHI, R, T, Z};
use sagnac_wigner::real::{eta, Precise, Real};
use sagnac_wigner::{christoffel_at, MetricProvider, RotatingMinkowski, SpacetimePoint};

/// Random admissible event: log-uniform radius, |ωr| < 0.99.
fn random_point(rng: &mut StdRng) -> (RotatingMinkowski, SpacetimePoint) {
    let r = 10f64.powf(rng.gen_range(-2.0..3.0));
    let wr: f64 = rng.gen_range(-0.99..0.99);
    let p = SpacetimePoint::new(
        rng.gen_range(-1e3..1e3),
        r,
        rng.gen_range(-10.0..10.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    )
    .unwrap();
    (RotatingMinkowski::new(wr / r).unwrap(), p)
}

#[test]
fn tetrad_reconstructs_metric_at_random_points() {
    let mut rng = StdRng::seed_from_u64(0x5a6_7ac);
    let mut worst_g = 0.0_f64;
    let mut worst_eta = 0.0_f64;
    for _ in 0..1_000_000 {
        let (m, p) = random_point(&mut rng);
        let metric = m.metric_at(&p).unwrap();
        let tet = m.tetrad_at(&p).unwrap();

        let g = tet.reconstruct_metric();
        for mu in 0..4 {
            for nu in 0..4 {
                // scale-aware: g_φφ = r² spans twelve decades
                let scale = (metric.g[mu][mu].abs() * metric.g[nu][nu].abs())
                    .sqrt()
                    .max(1.0);
                worst_g = worst_g.max((g[mu][nu] - metric.g[mu][nu]).abs() / scale);
            }
        }

        let h = tet.frame_metric(&metric);
        for a in 0..4 {
            for b in 0..4 {
                let want = if a == b { eta::<f64>(a) } else { 0.0 };
                worst_eta = worst_eta.max((h[a][b] - want).abs());
            }
        }
    }
    assert!(worst_g < 1e-12, "η e e vs g: {worst_g:e}");
    assert!(worst_eta < 1e-12, "g e e vs η: {worst_eta:e}");
}

#[test]
fn analytic_metric_derivative_matches_central_differences() {
    // differences taken in double-double: g_tt = −1 + ω²r² loses its
    // r-dependence to rounding in f64 when ωr is small
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..2000 {
        let (m, p) = random_point(&mut rng);
        let h = 1e-6 * p.r.max(1.0);
        if (m.omega() * (p.r + h)).abs() >= 1.0 || p.r - h <= 0.0 {
            continue;
        }
        let dg = m.metric_at(&p).unwrap().dg;
        let at = |r: f64| {
            let q = SpacetimePoint::<Precise>::new(
                p.t.into(),
                Precise::of(p.r) + Precise::of(r),
                p.z.into(),
                p.phi.into(),
            )
            .unwrap();
            m.metric_at(&q).unwrap().g
        };
        let (plus, minus) = (at(h), at(-h));
        for mu in 0..4 {
            for nu in 0..4 {
                let fd = ((plus[mu][nu] - minus[mu][nu]) / Precise::of(2.0 * h)).as_f64();
                let an = dg[R][mu][nu];
                if an == 0.0 {
                    assert_eq!(fd, 0.0);
                } else {
                    assert!(
                        ((fd - an) / an).abs() < 1e-6,
                        "mu={mu} nu={nu} fd={fd} an={an}"
                    );
                }
            }
        }
        for rho in [T, Z, PHI] {
            assert!(dg[rho].iter().flatten().all(|&v| v == 0.0));
        }
    }
}

#[test]
fn christoffels_at_reference_point_match_finite_differences() {
    let m = RotatingMinkowski::new(0.1).unwrap();
    let p = SpacetimePoint::at_radius(2.0).unwrap();
    let gamma = christoffel_at(&m, &p).unwrap();

    // Γ built from a central-difference dg and the same inverse metric
    let h = 1e-6 * 2.0;
    let g = m.metric_at(&p).unwrap();
    let ginv = g.inverse().unwrap();
    let gp = m.metric_at(&SpacetimePoint { r: 2.0 + h, ..p }).unwrap().g;
    let gm = m.metric_at(&SpacetimePoint { r: 2.0 - h, ..p }).unwrap().g;
    let mut dg = [[[0.0; 4]; 4]; 4];
    for mu in 0..4 {
        for nu in 0..4 {
            dg[R][mu][nu] = (gp[mu][nu] - gm[mu][nu]) / (2.0 * h);
        }
    }
    for rho in 0..4 {
        for mu in 0..4 {
            for nu in 0..4 {
                let mut fd = 0.0;
                for s in 0..4 {
                    fd += 0.5 * ginv[rho][s] * (dg[mu][s][nu] + dg[nu][s][mu] - dg[s][mu][nu]);
                }
                assert!(
                    (fd - gamma.get(rho, mu, nu)).abs() < 1e-8,
                    "Γ^{rho}_{mu}{nu}"
                );
            }
        }
    }
    // −r ω² at r = 2, ω = 0.1
    assert!((gamma.get(R, T, T) + 0.02).abs() < 1e-15);
}

#[test]
fn metric_is_covariantly_constant() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..20_000 {
        let (m, p) = random_point(&mut rng);
        let metric = m.metric_at(&p).unwrap();
        let gamma = christoffel_at(&m, &p).unwrap();
        let scale = metric
            .g
            .iter()
            .flatten()
            .fold(1.0_f64, |a, v| a.max(v.abs()));
        for nu in 0..4 {
            for mu in 0..4 {
                for rho in 0..4 {
                    let mut d = metric.dg[nu][mu][rho];
                    for s in 0..4 {
                        d -= gamma.get(s, nu, mu) * metric.g[s][rho];
                        d -= gamma.get(s, nu, rho) * metric.g[mu][s];
                    }
                    let tol = 1e-10 * scale / p.r.min(1.0);
                    assert!(d.abs() < tol, "∇_{nu} g_{mu}{rho} = {d:e} at r={}", p.r);
                }
            }
        }
    }
}

#[test]
fn zamo_observers_are_inertial() {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..20_000 {
        let (m, p) = random_point(&mut rng);
        let tet = m.tetrad_at(&p).unwrap();
        let gamma = christoffel_at(&m, &p).unwrap();
        let v = tet.e_inv[0];
        // components of e_0^μ are constant, so only the connection term remains
        let acc = gamma.directional_derivative(&v, &v, &[0.0; 4]);
        let tol = 1e-10 * (1.0 / p.r).max(1.0);
        for (mu, a) in acc.iter().enumerate() {
            assert!(a.abs() < tol, "A^{mu} = {a:e}");
        }
    }
}
