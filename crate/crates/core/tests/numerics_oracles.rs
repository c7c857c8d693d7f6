use qhydro::numerics::fd::{finite_diff_gradient, gradient, laplacian, Stencil};
use qhydro::numerics::grid::{GridSpec, SingularSet};
use qhydro::numerics::quad::{integrate, integrate_1d, QuadratureConfig, Region};
use qhydro::numerics::testfn::*;
use qhydro::specfun::gamma;
use std::f64::consts::PI;

struct Lcg(u64);
impl Lcg {
    fn next(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
    fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next()
    }
}

#[test]
fn integrate_examples() {
    let cfg = QuadratureConfig::<f64>::default();
    let e = integrate_1d(|x: f64| (-x).exp(), 0.0, f64::INFINITY, &cfg).unwrap();
    assert!((e.value - 1.0).abs() < 1e-10);
    assert!(e.error <= cfg.abs_tol.max(cfg.rel_tol * e.value.abs()));
    let e = integrate(|p: &[f64; 3]| (-(p[0] * p[0] + p[1] * p[1])).exp() / PI, &Region::plane(), &cfg).unwrap();
    assert!((e.value - 1.0).abs() < 1e-8);
    let e = integrate(
        |p: &[f64; 3]| (-(p[0] * p[0] + p[1] * p[1])).exp() / PI,
        &Region::rect([f64::NEG_INFINITY; 2], [f64::INFINITY; 2]),
        &cfg,
    )
    .unwrap();
    assert!((e.value - 1.0).abs() < 1e-8);
    let e = integrate_1d(|x: f64| x.sqrt() * (-x).exp(), 0.0, f64::INFINITY, &cfg).unwrap();
    assert!((e.value - gamma(1.5).unwrap()).abs() < 1e-8);
    // trapezoid oracle after x = s²
    let n = 200_000;
    let (hi, h) = (12.0, 12.0 / n as f64);
    let trap: f64 = (1..n).map(|i| {
        let s = i as f64 * h;
        2.0 * s * s * (-s * s).exp()
    }).sum::<f64>() * h + 0.5 * h * 2.0 * hi * hi * (-hi * hi).exp();
    assert!((e.value - trap).abs() < 1e-8);
}

#[test]
fn integrate_is_linear() {
    let cfg = QuadratureConfig::<f64>::default();
    let mut r = Lcg(7);
    for _ in 0..10 {
        let (a, b, k1, k2) = (r.range(-2.0, 2.0), r.range(-2.0, 2.0), r.range(0.5, 3.0), r.range(0.5, 3.0));
        let f = move |x: f64| (k1 * x).sin() * (-x * x).exp();
        let g = move |x: f64| (k2 * x).cos() / (1.0 + x * x);
        let ef = integrate_1d(f, -3.0, 4.0, &cfg).unwrap();
        let eg = integrate_1d(g, -3.0, 4.0, &cfg).unwrap();
        let ec = integrate_1d(|x: f64| a * f(x) + b * g(x), -3.0, 4.0, &cfg).unwrap();
        let tol = a.abs() * ef.error + b.abs() * eg.error + ec.error + 1e-14;
        assert!((ec.value - a * ef.value - b * eg.value).abs() <= tol);
    }
}

#[test]
fn finite_difference_examples() {
    let none = SingularSet::<f64>::none();
    let g = finite_diff_gradient(&|p: &[f64; 3]| p[0] * p[0] + p[1] * p[1], &[1.0, 2.0, 0.0], 1e-4, 2, &none).unwrap();
    assert!((g[0] - 2.0).abs() < 1e-6 && (g[1] - 4.0).abs() < 1e-6);
    let g = finite_diff_gradient(&|_: &[f64; 3]| 3.5, &[0.3, -0.2, 0.1], 1e-3, 3, &none).unwrap();
    assert_eq!(g, [0.0; 3]);
    let origin = SingularSet::<f64>::planar_origin();
    let r = finite_diff_gradient(&|p: &[f64; 3]| p[0], &[1e-4, 0.0, 0.0], 1e-4, 2, &origin);
    assert!(matches!(r, Err(qhydro::Error::StencilTouchesSingularSet { .. })));
}

#[test]
fn finite_difference_order() {
    let f = |p: &[f64; 3]| (p[0] * 1.3).sin() * (p[1] * 0.7).exp() + p[2] * p[0].cos();
    let exact = |p: &[f64; 3]| {
        [1.3 * (p[0] * 1.3).cos() * (p[1] * 0.7).exp() - p[2] * p[0].sin(), 0.7 * (p[0] * 1.3).sin() * (p[1] * 0.7).exp(), p[0].cos()]
    };
    let p = [0.4, -0.3, 0.8];
    let e = exact(&p);
    let err = |h: f64| {
        let g = gradient(&f, &p, h, 3, Stencil::Central2);
        (0..3).map(|k| (g[k] - e[k]).abs()).fold(0.0, f64::max)
    };
    let hs = [0.08, 0.04, 0.02, 0.01];
    let errs: Vec<f64> = hs.iter().map(|&h| err(h)).collect();
    let slope = (errs[0].ln() - errs[3].ln()) / (hs[0].ln() - hs[3].ln());
    assert!(slope >= 1.9, "slope {slope}");
    let lap_exact = -1.69 * (p[0] * 1.3).sin() * (p[1] * 0.7).exp() + 0.49 * (p[0] * 1.3).sin() * (p[1] * 0.7).exp()
        - p[2] * p[0].cos();
    assert!((laplacian(&f, &p, 1e-3, 3, Stencil::Central4) - lap_exact).abs() < 1e-8);
}

#[test]
fn grid_spec_invariants() {
    assert!(GridSpec::<f64>::new(2, vec![(0.0, 1.0), (1.0, 1.0)], 16).is_err());
    assert!(GridSpec::<f64>::cube(2, 1.0, 4).is_err());
    let g = GridSpec::<f64>::cube(2, 1.0, 21).unwrap().exclude_singular(&SingularSet::planar_origin(), 0.15).unwrap();
    let pts = g.points();
    assert!(pts.len() < 21 * 21);
    assert!(pts.iter().all(|p| (p[0] * p[0] + p[1] * p[1]).sqrt() >= 0.15));
}

fn check_derivatives(t: &TestFunction<f64>, r: &mut Lcg, n: usize) {
    let (lo, hi) = t.support_box().unwrap_or(([-2.0; 3], [2.0; 3]));
    let h = 1e-5;
    for _ in 0..n {
        let mut p = [0.0; 3];
        for k in 0..t.dim {
            let c = 0.5 * (lo[k] + hi[k]);
            let w = 0.5 * (hi[k] - lo[k]);
            p[k] = c + 0.9 * w * r.range(-1.0, 1.0);
        }
        let f = |q: &[f64; 3]| t.value(q);
        let g = gradient(&f, &p, h, t.dim, Stencil::Central4);
        let ga = t.gradient(&p);
        let l = laplacian(&f, &p, 3e-4, t.dim, Stencil::Central4);
        for k in 0..t.dim {
            assert!((g[k] - ga[k]).abs() < 1e-6, "{}: grad {k} {} vs {}", t.tag, g[k], ga[k]);
        }
        assert!((l - t.laplacian(&p)).abs() < 1e-6, "{}: lap {} vs {}", t.tag, l, t.laplacian(&p));
    }
}

#[test]
fn test_function_derivatives_match_differences() {
    let mut r = Lcg(99);
    for dim in 1..=3 {
        let c = [0.3, -0.2, 0.5];
        check_derivatives(&TestFunction::radial(c, 1.3, 1.0, Profile::Bump, dim), &mut r, 50);
        check_derivatives(&TestFunction::radial(c, 1.0, 2.0, Profile::Gaussian, dim), &mut r, 50);
        check_derivatives(&TestFunction::radial(c, 0.8, 1.0, Profile::Plateau { inner: 0.4 }, dim), &mut r, 50);
        check_derivatives(&make_mollifier(c, 0.7, dim).unwrap(), &mut r, 50);
        check_derivatives(
            &TestFunction::product(c, [1.0, 0.7, 1.5], 1.0, [Profile::Bump, Profile::Plateau { inner: 0.3 }, Profile::Bump], dim),
            &mut r,
            50,
        );
    }
}

#[test]
fn test_functions_vanish_outside_support() {
    let t = TestFunction::radial([1.0, 0.0, 0.0], 0.5, 1.0, Profile::Bump, 2);
    assert_eq!(t.value(&[1.5, 0.0, 0.0]), 0.0);
    assert_eq!(t.value(&[1.0, 0.6, 0.0]), 0.0);
    assert_eq!(t.gradient(&[2.0, 0.0, 0.0]), [0.0; 3]);
    assert!(TestFunction::radial([0.0; 3], 1.0, 1.0, Profile::Gaussian, 2).support_box().is_none());
}

#[test]
fn mollifier_properties() {
    let cfg = QuadratureConfig::<f64>::with_tol(1e-13, 1e-11);
    for dim in 1..=3 {
        for eps in [1.0, 0.1, 0.01] {
            let m = make_mollifier([0.0; 3], eps, dim).unwrap();
            let region = match dim {
                1 => Region::interval(-eps, eps),
                2 => Region::annulus([0.0; 3], 0.0, eps),
                _ => Region::shell([0.0; 3], 0.0, eps),
            };
            let e = integrate(|p: &[f64; 3]| m.value(p), &region, &cfg).unwrap();
            assert!((e.value - 1.0).abs() < 1e-8, "dim {dim} eps {eps}: {}", e.value);
            assert_eq!(m.value(&[eps, 0.0, 0.0]), 0.0);
            if dim >= 2 {
                assert_eq!(m.value(&[0.0, 1.01 * eps, 0.0]), 0.0);
            }
        }
    }
    let eps = 1e-2;
    let m = make_mollifier([0.0; 3], eps, 1).unwrap();
    let e = integrate_1d(|x: f64| m.value(&[x, 0.0, 0.0]) * x.cos(), -eps, eps, &cfg).unwrap();
    assert!((e.value - 1.0).abs() < 1e-3);
}

#[test]
fn decreasing_bump_sequence() {
    for k in [1, 5, 20] {
        assert!((make_decreasing_bump_sequence::<f64>(k).value(&[0.0; 3]) - 1.0).abs() < 1e-15);
    }
    let z1 = make_decreasing_bump_sequence::<f64>(1);
    let z5 = make_decreasing_bump_sequence::<f64>(5);
    let mut r = Lcg(3);
    for _ in 0..100 {
        let x = r.range(-1.2, 1.2);
        let (a, b) = (z5.value(&[x, 0.0, 0.0]), z1.value(&[x, 0.0, 0.0]));
        assert!(0.0 <= a && a <= b);
    }
    let cfg = QuadratureConfig::<f64>::default();
    let int = |k: usize| {
        let z = make_decreasing_bump_sequence::<f64>(k);
        integrate_1d(|x: f64| z.value(&[x, 0.0, 0.0]), -1.0, 1.0, &cfg).unwrap().value
    };
    assert!(int(50) < 0.1 * int(1));
}
