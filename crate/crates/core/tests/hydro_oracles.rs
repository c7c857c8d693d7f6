use qhydro::hydro::*;
use qhydro::numerics::grid::{eps_sing_default, GridSpec, SingularSet};
use qhydro::numerics::quad::QuadratureConfig;
use qhydro::numerics::testfn::{Profile, TestFunction, VectorTest};
use qhydro::states::*;
use std::sync::Arc;

type C = PhysicalConstants<f64>;

fn nat() -> C {
    C::natural()
}

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

fn grid2(half: f64, n: usize, s: &SingularSet<f64>, eps: f64) -> GridSpec<f64> {
    GridSpec::cube(2, half, n).unwrap().exclude_singular(s, eps).unwrap()
}

fn grid3(half: f64, n: usize, s: &SingularSet<f64>, eps: f64) -> GridSpec<f64> {
    GridSpec::cube(3, half, n).unwrap().exclude_singular(s, eps).unwrap()
}

#[test]
fn transform_of_real_and_plane_wave_gaussians() {
    let (wf, _) = gaussian_state(3, 0.5, [0.0; 3], [0.0; 3], nat()).unwrap();
    let f = madelung_transform(&wf);
    let (wk, _) = gaussian_state(3, 0.5, [0.0; 3], [0.7, -0.2, 0.3], nat()).unwrap();
    let fk = madelung_transform(&wk);
    for p in [[0.3, -0.4, 0.2], [1.0, 0.5, -1.2], [-2.0, 0.1, 0.0]] {
        let v = (f.v)(&p, 0.0).unwrap();
        assert!(v.iter().all(|x| x.abs() < 1e-14));
        let u = (f.u)(&p, 0.0).unwrap();
        for k in 0..3 {
            assert!((u[k] + p[k]).abs() < 1e-12);
        }
        let vk = (fk.v)(&p, 0.0).unwrap();
        for (a, b) in vk.iter().zip([0.7, -0.2, 0.3]) {
            assert!((a - b).abs() < 1e-12);
        }
        let rho = (f.rho)(&p, 0.0).unwrap();
        assert!((rho - wf.density(&p).unwrap()).abs() < 1e-15);
    }
}

#[test]
fn transform_of_hydrogen_matches_closed_form() {
    let (wf, closed) = hydrogen_state(2, 1, 1.0, nat()).unwrap();
    let f = madelung_transform(&wf);
    for p in [[0.5, 0.2, 0.1], [-1.0, 2.0, 0.5], [3.0, -1.0, -2.0]] {
        let a = (f.v)(&p, 0.0).unwrap();
        let b = (closed.v)(&p, 0.0).unwrap();
        for k in 0..3 {
            assert!((a[k] - b[k]).abs() < 1e-10);
        }
        let r2 = p[0] * p[0] + p[1] * p[1];
        assert!((a[0] + p[1] / r2).abs() < 1e-10 && (a[1] - p[0] / r2).abs() < 1e-10);
    }
}

#[test]
fn transform_reports_nodes() {
    let (wf, _) = oscillator2d_standard(0, 1.0, nat()).unwrap();
    let f = madelung_transform(&wf);
    assert!(matches!((f.v)(&[0.0, 0.0, 0.0], 0.0), Err(qhydro::Error::NodeEncountered { .. })));
}

#[test]
fn bohm_force_examples() {
    let rho = |p: &[f64; 3]| Ok((-(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])).exp());
    let f = bohm_force(rho, &[1.0, 0.0, 0.0], 1e-2, 3, 1.0, 1.0).unwrap();
    assert!((f[0] - 1.0).abs() < 1e-6 && f[1].abs() < 1e-6 && f[2].abs() < 1e-6, "{f:?}");

    let c = bohm_force(|_: &[f64; 3]| Ok(2.5), &[0.3, 0.1, 0.0], 1e-2, 3, 1.0, 1.0).unwrap();
    assert!(c.iter().all(|x| x.abs() < 1e-9));

    let wf = oscillator3d_ground(nat()).unwrap();
    let flow = madelung_transform(&wf);
    let a = bohm_force_flow(&flow, &[1.0, 0.0, 0.0], &ResidualOptions::analytic()).unwrap();
    assert!((a[0] - 1.0).abs() < 1e-10 && a[1].abs() < 1e-12);

    let z = bohm_force(|_: &[f64; 3]| Ok(0.0), &[0.0; 3], 1e-2, 3, 1.0, 1.0);
    assert!(matches!(z, Err(qhydro::Error::StencilTouchesNode { .. })));
}

#[test]
fn madelung_standard_oscillator() {
    let (wf, flow) = oscillator2d_standard(0, 1.0, nat()).unwrap();
    let pot = Potential::harmonic(2, nat());
    let g = grid2(3.0, 41, &wf.singular, eps_sing_default());
    let [m, c] = madelung_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    assert!(m.max_abs_residual < 1e-5, "{}", m.max_abs_residual);
    assert!(c.max_abs_residual < 1e-5, "{}", c.max_abs_residual);
    assert!(m.sample_count > 1600);

    let fd = madelung_residual(&flow, &pot, &grid2(3.0, 21, &wf.singular, 0.5), &ResidualOptions::fd(1e-2)).unwrap();
    assert!(fd[0].max_abs_residual < 1e-5, "{}", fd[0].max_abs_residual);
    assert!(fd[1].max_abs_residual < 1e-5, "{}", fd[1].max_abs_residual);
}

#[test]
fn madelung_hydrogen() {
    let (wf, flow) = hydrogen_state(2, 1, 1.0, nat()).unwrap();
    let pot = Potential::coulomb(nat());
    let g = grid3(8.0, 17, &wf.singular, eps_sing_default());
    let [m, c] = madelung_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    assert!(m.max_abs_residual < 1e-4, "{}", m.max_abs_residual);
    assert!(c.max_abs_residual < 1e-4, "{}", c.max_abs_residual);
    assert!(m.excluded_radius > 0.0);
}

#[test]
fn madelung_case_l_and_negative_control() {
    let (wf, flow) = oscillator2d_nonquantized(Case::L, QuantumLabels::case_l(0, 0.5), nat()).unwrap();
    let pot = Potential::harmonic(2, nat());
    let g = grid2(3.0, 40, &SingularSet::planar_origin(), eps_sing_default());
    let [m, c] = madelung_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    let bound = 1e-5;
    assert!(m.max_abs_residual < bound, "{}", m.max_abs_residual);
    assert!(c.max_abs_residual < bound);

    let bad = flow.scaled(1.0, 1.1, 1.0);
    let [mb, _] = madelung_residual(&bad, &pot, &g, &ResidualOptions::default()).unwrap();
    assert!(mb.max_abs_residual > 1e-2 && mb.max_abs_residual > 100.0 * bound);
    let _ = wf;
}

#[test]
fn third_equation_curl() {
    let (wf, flow) = oscillator2d_standard(0, 1.0, nat()).unwrap();
    let g = grid2(3.0, 40, &wf.singular, 0.1);
    let r = third_madelung_pointwise(&flow, &g, &ResidualOptions::default()).unwrap();
    assert!(r.max_abs_residual < 1e-8, "{}", r.max_abs_residual);

    let rot = FlowFields::new(
        Arc::new(|_, _| Ok(1.0)),
        Arc::new(|p: &[f64; 3], _| Ok([-p[1], p[0], 0.0])),
        Arc::new(|_, _| Ok([0.0; 3])),
        2,
        nat(),
        "rigid",
    );
    let r = third_madelung_pointwise(&rot, &GridSpec::cube(2, 2.0, 10).unwrap(), &ResidualOptions::default()).unwrap();
    assert!((r.max_abs_residual - 2.0).abs() < 1e-8);

    let (wf, flow) = hydrogen_state(3, 2, 2.0, nat()).unwrap();
    let g = grid3(8.0, 16, &wf.singular, 0.1);
    let r = third_madelung_pointwise(&flow, &g, &ResidualOptions::default()).unwrap();
    assert!(r.max_abs_residual < 1e-8, "{}", r.max_abs_residual);
}

#[test]
fn nelson_examples() {
    let flow = oscillator3d_ground_nelson(nat()).unwrap();
    let pot = Potential::harmonic(3, nat());
    let g = GridSpec::cube(3, 2.5, 13).unwrap();
    let [a, b] = nelson_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    let bound = 1e-8;
    assert!(a.max_abs_residual < bound, "{}", a.max_abs_residual);
    assert!(b.max_abs_residual < bound, "{}", b.max_abs_residual);

    let (_, f2) = oscillator2d_standard(0, 0.0, nat()).unwrap();
    let pot2 = Potential::harmonic(2, nat());
    let g2 = GridSpec::cube(2, 3.0, 31).unwrap();
    let [a, b] = nelson_residual(&f2, &pot2, &g2, &ResidualOptions::default()).unwrap();
    assert!(a.max_abs_residual < bound && b.max_abs_residual < bound);

    let bad = flow.scaled(1.0, 1.0, 1.1);
    let [ab, _] = nelson_residual(&bad, &pot, &g, &ResidualOptions::default()).unwrap();
    assert!(ab.max_abs_residual > 1e-2 && ab.max_abs_residual > 100.0 * bound);
}

#[test]
fn nelson_fd_path_without_derivatives() {
    let flow = oscillator3d_ground_nelson(nat()).unwrap().without_derivs();
    let pot = Potential::harmonic(3, nat());
    let g = GridSpec::cube(3, 2.0, 9).unwrap();
    let [a, b] = nelson_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    assert!(a.max_abs_residual < 1e-6 && b.max_abs_residual < 1e-6, "{} {}", a.max_abs_residual, b.max_abs_residual);
}

#[test]
fn vorticity_stationary_irrotational() {
    let (wf, flow) = oscillator2d_standard(0, 1.0, nat()).unwrap();
    let g = grid2(3.0, 20, &wf.singular, 0.5);
    let r = vorticity_evolution_residual(&flow, &g, 0.0, 1e-3, 1e-3).unwrap();
    assert!(r.max_abs_residual < 1e-8, "{}", r.max_abs_residual);
}

#[test]
fn vorticity_rigid_rotation_in_time() {
    let f = |t: f64| 1.0 + 0.5 * t.sin();
    let fp = |t: f64| 0.5 * t.cos();
    let flow = FlowFields::new(
        Arc::new(|_, _| Ok(1.0)),
        Arc::new(move |p: &[f64; 3], t| Ok([-p[1] * f(t), p[0] * f(t), 0.0])),
        Arc::new(|_, _| Ok([0.0; 3])),
        3,
        nat(),
        "rotating",
    );
    for t in [0.0, 0.4, 1.3] {
        for p in [[0.5, 0.2, 0.1], [-1.0, 0.7, 0.0], [0.1, -0.3, 0.9]] {
            let terms = vorticity_terms(&flow, &p, t, 1e-2, 1e-3).unwrap();
            assert!((terms.omega[2] - 2.0 * f(t)).abs() < 1e-8);
            assert!((terms.dt_omega[2] - 2.0 * fp(t)).abs() < 1e-4);
            let cf = terms.curl_form();
            assert!((cf[2] - 2.0 * fp(t)).abs() < 1e-4 && cf[0].abs() < 1e-4 && cf[1].abs() < 1e-4);
        }
    }
}

#[test]
fn vorticity_identity_form_matches_curl_form() {
    let mut rng = Lcg(7);
    for _ in 0..4 {
        let a: [f64; 9] = std::array::from_fn(|_| rng.range(-1.0, 1.0));
        let v = move |p: &[f64; 3], t: f64| {
            let g = 1.0 + 0.3 * t;
            Ok([
                g * (a[0] * (p[1] + a[3]).sin() + a[6] * p[2] * p[0]),
                g * (a[1] * (p[2] * p[0]).cos() + a[7] * p[1]),
                g * (a[2] * (p[0] - p[1]).sin() + a[8] * p[2] * p[2]),
            ])
        };
        let flow = FlowFields::new(Arc::new(|_, _| Ok(1.0)), Arc::new(v), Arc::new(|_, _| Ok([0.0; 3])), 3, nat(), "random");
        for _ in 0..5 {
            let p = [rng.range(-1.0, 1.0), rng.range(-1.0, 1.0), rng.range(-1.0, 1.0)];
            let t = rng.range(0.0, 1.0);
            let terms = vorticity_terms(&flow, &p, t, 1e-2, 1e-3).unwrap();
            let (x, y) = (terms.curl_form(), terms.identity_form());
            for k in 0..3 {
                assert!((x[k] - y[k]).abs() < 1e-6, "{x:?} {y:?}");
            }
        }
    }
}

#[test]
fn nottale_examples() {
    let g = GridSpec::cube(3, 1.5, 8).unwrap();
    let gauss = |p: &[f64; 3]| (-(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) * 0.5).exp();
    let r = nottale_identity_check(&gauss, 0.5, &g, 1e-2).unwrap();
    assert!(r.max_abs_residual < 1e-5, "{}", r.max_abs_residual);

    let lin = |p: &[f64; 3]| (0.3 * p[0] - 0.2 * p[1] + 0.5 * p[2]).exp();
    let p = [0.2, -0.4, 0.7];
    let (l, rr) = nottale_sides(&lin, 1.0, &p, 3, 1e-2).unwrap();
    assert!(l.iter().chain(rr.iter()).all(|x| x.abs() < 1e-6), "{l:?} {rr:?}");

    let trig = |p: &[f64; 3]| 2.5 + (p[0] + 0.3 * p[1]).sin() * (p[2] - 0.2 * p[0]).cos() + 0.4 * (1.3 * p[1]).cos();
    let r = nottale_identity_check(&trig, 2.0, &g, 1e-2).unwrap();
    assert!(r.max_abs_residual < 1e-4, "{}", r.max_abs_residual);

    assert!(nottale_identity_check(&gauss, -1.0, &g, 1e-2).is_err());
}

#[test]
fn weber_examples() {
    let g = GridSpec::cube(2, 2.0, 11).unwrap();
    let s = |p: &[f64; 3]| 0.5 * (p[0] * p[0] + p[1] * p[1]);
    let r = weber_from_potential(&s, &g, 1e-2).unwrap();
    assert!(r.max_abs_residual < 1e-10, "{}", r.max_abs_residual);

    let g3 = GridSpec::cube(3, 1.0, 8).unwrap();
    let s2 = |p: &[f64; 3]| (p[0] * p[1]).sin() + (0.5 * p[2]).cos() * p[0] + (0.3 * p[1] * p[2]).exp();
    let r = weber_from_potential(&s2, &g3, 1e-2).unwrap();
    assert!(r.max_abs_residual < 1e-5, "{}", r.max_abs_residual);

    let rot = |p: &[f64; 3]| [-p[1], p[0], 0.0];
    let r = weber_identity_check(&rot, &g, 1e-2).unwrap();
    // (w·∇)w = (−x, −y), ∇(w²/2) = (x, y)
    assert!((r.max_abs_residual - 2.0 * 8f64.sqrt()).abs() < 1e-8, "{}", r.max_abs_residual);
}

fn bumps3(centres: &[[f64; 3]], radius: f64) -> Vec<VectorTest<f64>> {
    centres
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let f = |amp: f64| TestFunction::radial(*c, radius, amp, Profile::Poly { k: 4 }, 3);
            VectorTest::new([f(1.0), f(-0.5), f(0.8)], &format!("bump{i}"))
        })
        .collect()
}

#[test]
fn antonelli_standard_real_state() {
    let (wf, _) = oscillator2d_standard(0, 0.0, nat()).unwrap();
    let tests: Vec<_> = [[0.0, 0.0, 0.0], [1.0, -0.5, 0.0]]
        .iter()
        .map(|c| VectorTest::vertical(TestFunction::radial(*c, 1.5, 1.0, Profile::Bump, 2)))
        .collect();
    for row in antonelli_irrotationality_residual(&wf, &tests, &QuadratureConfig::with_tol(1e-12, 1e-9)).unwrap() {
        assert!(row.residual.abs() < 1e-8 && row.lhs.abs() < 1e-8, "{row:?}");
    }
}

#[test]
fn antonelli_hydrogen() {
    let (wf, _) = hydrogen_state(2, 1, 1.0, nat()).unwrap();
    let tests = bumps3(&[[0.0, 0.0, 1.0], [0.5, 0.3, -0.5], [2.0, 0.0, 0.0]], 1.5);
    let rows = antonelli_irrotationality_residual(&wf, &tests, &QuadratureConfig::with_tol(1e-9, 1e-8)).unwrap();
    for row in rows {
        assert!(row.residual.abs() < 1e-5, "{row:?}");
    }
}

#[test]
fn antonelli_plane_wave_gaussian() {
    let (wf, _) = gaussian_state(3, 0.5, [0.0; 3], [0.6, 0.0, -0.3], nat()).unwrap();
    let tests = bumps3(&[[0.0, 0.0, 0.0], [0.7, -0.4, 0.2]], 1.2);
    for row in antonelli_irrotationality_residual(&wf, &tests, &QuadratureConfig::with_tol(1e-10, 1e-9)).unwrap() {
        assert!(row.residual.abs() < 1e-6, "{row:?}");
    }
}

#[test]
fn residuals_are_translation_consistent() {
    let d = [0.37, -0.21, 0.0];
    let (wf, flow) = oscillator2d_standard(0, 2.0, nat()).unwrap();
    let pot = Potential::harmonic(2, nat());
    let eps = 0.1;
    let g = grid2(2.5, 24, &wf.singular, eps);
    let mut gs = g.clone();
    for (k, e) in gs.extents.iter_mut().enumerate() {
        e.0 += d[k];
        e.1 += d[k];
    }
    let gs = GridSpec { excluded_regions: Vec::new(), ..gs }.exclude_singular(&wf.singular.shifted(&d), eps).unwrap();
    let a = madelung_residual(&flow, &pot, &g, &ResidualOptions::default()).unwrap();
    let b = madelung_residual(&flow.translated(d), &pot.translated(d), &gs, &ResidualOptions::default()).unwrap();
    for k in 0..2 {
        assert_eq!(a[k].sample_count, b[k].sample_count);
        assert!((a[k].max_abs_residual - b[k].max_abs_residual).abs() < 1e-9);
        assert!((a[k].l2_residual - b[k].l2_residual).abs() < 1e-9, "{:?} {:?}", (a[k].max_abs_residual, a[k].l2_residual), (b[k].max_abs_residual, b[k].l2_residual));
    }
}

#[test]
fn fd_and_analytic_paths_agree() {
    let mut rng = Lcg(11);
    let keys = [
        "osc2d:standard:n=0:mu=1",
        "osc2d:standard:n=1:mu=-2",
        "osc2d:L:n=0:mu=0.5",
        "osc2d:U:a=0.3:mu=0.5",
        "hydrogen:n=2:l=1:mu=1",
        "phi_a:n=2:a=0.5",
        "gaussian:dim=3:alpha=0.5:kx=0.4",
        "osc3d:ground",
    ];
    for key in keys {
        let fk: FamilyKey = key.parse().unwrap();
        let (wf, flow) = fk.build::<f64>(nat()).unwrap();
        let pot = fk.potential::<f64>(nat());
        let mut pts = Vec::new();
        while pts.len() < 6 {
            let p = [rng.range(0.3, 2.0), rng.range(-2.0, -0.3), if wf.dim == 3 { rng.range(-1.0, 1.0) } else { 0.0 }];
            if wf.singular.distance(&p) > 0.3 {
                pts.push(p);
            }
        }
        let cmp = compare_paths(&flow, &pot, &pts, 1e-2, 1e-7).unwrap();
        assert!(cmp.agrees(), "{key}: {cmp:?}");
        assert_eq!(cmp.points, 6);
    }
}

#[test]
fn report_serializes_with_typed_fields() {
    let (wf, flow) = oscillator2d_standard(0, 1.0, nat()).unwrap();
    let g = grid2(2.0, 10, &wf.singular, 0.1);
    let [m, _] = madelung_residual(&flow, &Potential::harmonic(2, nat()), &g, &ResidualOptions::default().keep()).unwrap();
    let v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
    for k in ["equation_tag", "max_abs_residual", "l2_residual", "sample_count", "excluded_radius", "per_point"] {
        assert!(v.get(k).is_some(), "{k}");
    }
    assert_eq!(v["per_point"].as_array().unwrap().len(), m.sample_count);
    let back: ResidualReport = serde_json::from_str(&m.to_json()).unwrap();
    assert_eq!(back, m);
}
