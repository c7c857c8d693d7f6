use crate::config::Params;
use crate::error::CliError;
use crate::output::{Artifact, Cell, Table};
use qhydro::circulation::{circulation_scan_phi_a, coaxial_circles, quantization_sweep, winding_number, ScanStatus};
use qhydro::distcurl::{curl_expectation_state, defect_for, delta_coefficient_extract, PairingOptions};
use qhydro::hydro::{
    antonelli_irrotationality_residual, madelung_residual, nelson_residual, nottale_identity_check, vorticity_evolution_residual, weber_from_potential, weber_identity_check,
    DerivMode, ResidualOptions, ResidualReport,
};
use qhydro::numerics::fd::Stencil;
use qhydro::numerics::grid::GridSpec;
use qhydro::numerics::quad::QuadratureConfig;
use qhydro::numerics::testfn::{Profile, TestFunction, VectorTest};
use qhydro::spectral::{domain_membership_heuristic, nonsolution_certificate, project_to_hermite, wallstrom_demo, ProjectionOptions, WallstromConfig};
use qhydro::states::{default_cutoffs, radial_integrability_probe, Angular, Branch, Case, FamilyKey, QuantumLabels};
use qhydro::weakforms::{battery_json, gm_weak_residual, nelson_weak_residual, NelsonPotential, SpaceTimeTest, TimeProfile, WeakOptions};
use qhydro::{Constants, Flow, Wave};
use serde_json::{json, Value};
use std::f64::consts::PI;

pub struct Ctx<'a> {
    pub params: &'a Params,
    pub family: Option<&'a str>,
    pub consts: Constants,
}

pub struct Experiment {
    pub name: &'static str,
    pub keys: &'static [&'static str],
    /// Positional variant stored under this key, e.g. `residuals madelung`.
    pub variant_key: Option<&'static str>,
    pub family: FamilyUse,
    pub run: fn(&Ctx) -> Result<Artifact, CliError>,
}

#[derive(Clone, Copy)]
pub enum FamilyUse {
    None,
    /// Required, with a default depending on the parameters.
    Default(fn(&Params) -> &'static str),
    /// Absent means a built-in set of families.
    Optional,
}

pub const EXPERIMENTS: &[Experiment] = &[
    Experiment { name: "fig1-scan", keys: &["n", "r0", "points", "a_min", "a_max"], variant_key: None, family: FamilyUse::None, run: fig1_scan },
    Experiment { name: "circulation-sweep", keys: &["radii", "heights", "samples"], variant_key: None, family: FamilyUse::Optional, run: circulation_sweep },
    Experiment {
        name: "residuals",
        keys: &["equation", "half", "points", "eps_sing", "mode", "h", "ht", "t", "tests", "ring", "radius", "t_center"],
        variant_key: Some("equation"),
        family: FamilyUse::Default(residual_family),
        run: residuals,
    },
    Experiment { name: "curl-delta", keys: &["eps0", "levels", "cx", "cy", "cz"], variant_key: None, family: FamilyUse::Default(|_| "osc2d:standard:n=0:mu=1"), run: curl_delta },
    Experiment { name: "curl-expectation", keys: &["abs_tol", "rel_tol"], variant_key: None, family: FamilyUse::Default(|_| "hydrogen:n=2:l=1:mu=1"), run: curl_expectation },
    Experiment { name: "defect", keys: &["variant", "mu"], variant_key: None, family: FamilyUse::None, run: defect },
    Experiment { name: "spectrum-project", keys: &["n_max", "r_max", "threshold"], variant_key: None, family: FamilyUse::Default(|_| "osc2d:L:n=0:mu=0.5"), run: spectrum_project },
    Experiment { name: "nonsolution-cert", keys: &["n_max", "t_probe", "r_max"], variant_key: None, family: FamilyUse::Default(|_| "osc2d:L:n=0:mu=0.5"), run: nonsolution_cert },
    Experiment { name: "integrability-probe", keys: &["cutoffs"], variant_key: None, family: FamilyUse::Default(|_| "osc2d:L:n=0:mu=0.5"), run: integrability_probe },
    Experiment { name: "domain-heuristic", keys: &[], variant_key: None, family: FamilyUse::Default(|_| "osc2d:L:n=0:mu=0.5"), run: domain_heuristic },
    Experiment {
        name: "wallstrom-demo",
        keys: &["separation", "width", "x_min", "x_max", "points", "dt", "t_end", "record_every", "t_pre", "t_post"],
        variant_key: None,
        family: FamilyUse::None,
        run: wallstrom,
    },
    Experiment {
        name: "identity-checks",
        keys: &["identity", "field", "alpha", "dim", "half", "points", "h"],
        variant_key: Some("identity"),
        family: FamilyUse::Default(|_| "hydrogen:n=2:l=1:mu=1"),
        run: identity_checks,
    },
];

pub fn find(name: &str) -> Option<&'static Experiment> {
    EXPERIMENTS.iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    EXPERIMENTS.iter().map(|e| e.name).collect()
}

fn residual_family(p: &Params) -> &'static str {
    match p.choice("equation", "madelung", EQUATIONS).as_deref() {
        Ok("gm-weak") => "osc2d:standard:n=0:mu=0",
        Ok("nelson-weak") => "osc3d:ground",
        _ => "osc2d:standard:n=0:mu=1",
    }
}

fn to_value<S: serde::Serialize + ?Sized>(x: &S) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn family_key(ctx: &Ctx) -> Result<FamilyKey, CliError> {
    let s = ctx.family.ok_or_else(|| CliError::Config("this experiment needs --family".into()))?;
    Ok(s.parse::<FamilyKey>()?)
}

fn build(ctx: &Ctx) -> Result<(FamilyKey, Wave, Flow), CliError> {
    let key = family_key(ctx)?;
    let (wf, flow) = key.build(ctx.consts)?;
    Ok((key, wf, flow))
}

/// Natural length of a family: a₀ for Coulomb states, (ħ/mω)^{1/2} otherwise.
fn length_scale(key: &FamilyKey, c: &Constants) -> f64 {
    match key {
        FamilyKey::Hydrogen { .. } | FamilyKey::PhiA { .. } => c.a0(),
        _ => c.k_osc().sqrt().recip(),
    }
}

fn fig1_scan(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let n = p.usize("n", 2)?;
    let r0 = p.f64("r0", 1.0)?;
    let points = p.usize("points", 100)?;
    let (lo, hi) = (p.f64("a_min", -1.0)?, p.f64("a_max", 1.0)?);
    if points < 2 || !(hi > lo) {
        return Err(CliError::Config("fig1-scan needs points ≥ 2 and a_max > a_min".into()));
    }
    let grid: Vec<f64> = (0..points).map(|i| lo + (hi - lo) * i as f64 / (points - 1) as f64).collect();
    let rows = circulation_scan_phi_a(n, r0 * ctx.consts.a0(), &grid, &ctx.consts)?;
    let mut t = Table::new(&["a", "I_a", "status"]);
    for r in &rows {
        let st = to_value(&r.status);
        t.push(vec![r.a.into(), r.value.into(), st.as_str().unwrap_or("").into()]);
    }
    let failures = rows.iter().filter(|r| r.status == ScanStatus::Error).count();
    Ok(Artifact::csv(json!({ "rows": to_value(&rows) }), t).with_failures(failures))
}

fn default_sweep_families() -> Vec<String> {
    let mut v = Vec::new();
    for n in 1..=3usize {
        for l in 0..n {
            for m in -(l as i32)..=(l as i32) {
                v.push(format!("hydrogen:n={n}:l={l}:mu={m}"));
            }
        }
    }
    for n in 0..=3usize {
        for m in -3..=3i32 {
            v.push(format!("osc2d:standard:n={n}:mu={m}"));
        }
    }
    v
}

fn circulation_sweep(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let radii = p.f64_list("radii", &[0.5, 1.5, 4.0])?;
    let heights = p.f64_list("heights", &[0.7])?;
    let samples = p.usize("samples", 128)?;
    let families = match ctx.family {
        Some(f) => vec![f.to_string()],
        None => default_sweep_families(),
    };
    let mut t = Table::new(&["family", "curve", "circulation", "deviation", "winding", "error"]);
    let mut rows = Vec::new();
    let mut failures = 0;
    let mut max_dev = 0.0f64;
    for f in &families {
        let key: FamilyKey = f.parse()?;
        let (wf, flow) = key.build(ctx.consts)?;
        let l = length_scale(&key, &ctx.consts);
        let r: Vec<f64> = radii.iter().map(|x| x * l).collect();
        let z: Vec<f64> = if wf.dim == 3 { heights.iter().map(|x| x * l).collect() } else { vec![0.0] };
        let curves = coaxial_circles(&r, &z, samples)?;
        let rep = quantization_sweep(std::slice::from_ref(&flow), &curves);
        failures += rep.failures;
        max_dev = max_dev.max(rep.max_deviation);
        for (row, c) in rep.rows.iter().zip(&curves) {
            let w = winding_number(&wf, c);
            // an undefined winding number is a finding for non-quantized families, not a failure
            let werr = w.as_ref().err().map(|e| e.to_string());
            let w = w.ok();
            let err = row.error.clone().or(werr);
            t.push(vec![f.as_str().into(), row.curve.as_str().into(), row.circulation.into(), row.deviation.into(), w.into(), err.clone().into()]);
            rows.push(json!({ "family": f, "curve": row.curve, "circulation": row.circulation, "deviation": row.deviation, "winding": w, "error": err }));
        }
    }
    Ok(Artifact::json(json!({ "families": families, "max_deviation": max_dev, "failures": failures, "rows": rows }), t).with_failures(failures))
}

const EQUATIONS: &[&str] = &["madelung", "nelson", "gm-weak", "nelson-weak", "vorticity"];

fn report_table(reports: &[ResidualReport]) -> Table {
    let mut t = Table::new(&["equation", "max_abs_residual", "l2_residual", "sample_count", "excluded_radius"]);
    for r in reports {
        t.push(vec![r.equation_tag.as_str().into(), r.max_abs_residual.into(), r.l2_residual.into(), r.sample_count.into(), r.excluded_radius.into()]);
    }
    t
}

fn weak_battery(dim: usize, count: usize, ring: f64, radius: f64, t_center: f64, l: f64, tau: f64) -> Vec<SpaceTimeTest<f64>> {
    let prof = Profile::Poly { k: 4 };
    (0..count)
        .map(|k| {
            let a = 2.0 * PI * k as f64 / count as f64;
            let z = if dim == 3 { 0.3 * l * if k % 2 == 0 { 1.0 } else { -1.0 } } else { 0.0 };
            let c = [ring * l * a.cos(), ring * l * a.sin(), z];
            let f = |amp: f64| TestFunction::radial(c, radius * l, amp, prof, dim);
            let zero = || TestFunction::zero(dim);
            let space = if dim == 3 {
                let s = [1.0, 0.5, -0.3];
                VectorTest::new([f(s[k % 3]), f(s[(k + 1) % 3]), f(s[(k + 2) % 3])], "ball")
            } else if k % 2 == 0 {
                VectorTest::new([f(1.0), zero(), zero()], "x")
            } else {
                VectorTest::new([zero(), f(1.0), zero()], "y")
            };
            let tc = if k % 3 == 0 { (t_center - 1.0).max(0.0) } else { t_center };
            SpaceTimeTest::new(TimeProfile::new(tc * tau, tau, prof), space, &format!("test{k}"))
        })
        .collect()
}

fn residuals(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let eq = p.choice("equation", "madelung", EQUATIONS)?;
    let (key, wf, flow) = build(ctx)?;
    let l = length_scale(&key, &ctx.consts);
    let pot = key.potential(ctx.consts);
    let weak = eq.ends_with("-weak");
    if weak {
        let count = p.usize("tests", 10)?;
        let ring = p.f64("ring", 0.8)?;
        let radius = p.f64("radius", 0.9)?;
        let tc = p.f64("t_center", 1.5)?;
        if count == 0 || !(radius > 0.0) {
            return Err(CliError::Config("weak batteries need tests ≥ 1 and radius > 0".into()));
        }
        let tests = weak_battery(flow.dim, count, ring, radius, tc, l, ctx.consts.omega.recip());
        let opts = WeakOptions::default();
        let (rows, probes) = if eq == "gm-weak" {
            (gm_weak_residual(&flow, &pot, &tests, &opts)?, Value::Null)
        } else {
            let rep = nelson_weak_residual(&flow, &NelsonPotential::Field(pot), &tests, &opts)?;
            (rep.residuals, to_value(&rep.probes))
        };
        let mut t = Table::new(&["test_tag", "momentum", "continuity", "quad_error"]);
        for r in &rows {
            t.push(vec![r.test_tag.as_str().into(), r.momentum.into(), r.continuity.into(), r.quad_error.into()]);
        }
        let max = rows.iter().fold(0.0f64, |m, r| m.max(r.max_abs()));
        return Ok(Artifact::json(json!({ "equation": eq, "family": wf.tag, "battery": battery_json(&rows), "max_abs_residual": max, "probes": probes }), t));
    }
    let dim = wf.dim;
    let half = p.f64("half", if dim == 3 { 8.0 } else { 3.0 })?;
    let points = p.usize("points", if dim == 3 { 17 } else { 41 })?;
    let eps = p.f64("eps_sing", if eq == "vorticity" { 0.1 } else { 1e-3 })?;
    let t0 = p.f64("t", 0.0)?;
    let grid = GridSpec::cube(dim, half * l, points)?.exclude_singular(&wf.singular, eps * l)?;
    let reports: Vec<ResidualReport> = if eq == "vorticity" {
        let h = p.f64("h", 1e-3)?;
        let ht = p.f64("ht", 1e-3)?;
        vec![vorticity_evolution_residual(&flow, &grid, t0, h * l, ht)?]
    } else {
        let mode = p.choice("mode", "auto", &["auto", "analytic", "fd"])?;
        let mut opts = match mode.as_str() {
            "analytic" => ResidualOptions::analytic(),
            "fd" => ResidualOptions::fd(p.f64("h", 1e-2)? * l),
            _ => ResidualOptions::default(),
        };
        if mode == "fd" {
            opts.mode = DerivMode::FiniteDifference { h: p.f64("h", 1e-2)? * l, stencil: Stencil::Central4 };
        }
        let opts = opts.at_time(t0);
        let pair = if eq == "madelung" { madelung_residual(&flow, &pot, &grid, &opts)? } else { nelson_residual(&flow, &pot, &grid, &opts)? };
        pair.to_vec()
    };
    let max = reports.iter().fold(0.0f64, |m, r| m.max(r.max_abs_residual));
    Ok(Artifact::json(json!({ "equation": eq, "family": wf.tag, "reports": to_value(&reports), "max_abs_residual": max }), report_table(&reports)))
}

fn curl_delta(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let (key, _wf, flow) = build(ctx)?;
    let l = length_scale(&key, &ctx.consts);
    let eps0 = p.f64("eps0", 1.0)?;
    let levels = p.usize("levels", 4)?;
    let center = [p.f64("cx", 0.0)? * l, p.f64("cy", 0.0)? * l, p.f64("cz", 0.0)? * l];
    let v = |q: &[f64; 3]| (flow.v)(q, 0.0);
    let d = delta_coefficient_extract(v, &flow.singular, center, flow.dim, eps0 * l, levels, &PairingOptions::default())?;
    let mut t = Table::new(&["eps", "pairing", "coefficient", "quad_error"]);
    for r in &d.table {
        t.push(vec![r.eps.into(), r.pairing.into(), r.coefficient.into(), r.quad_error.into()]);
    }
    Ok(Artifact::json(json!({ "family": flow.tag, "center": center, "delta": to_value(&d) }), t))
}

fn curl_expectation(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let (_, wf, flow) = build(ctx)?;
    let opts = PairingOptions::with_tol(p.f64("abs_tol", 1e-10)?, p.f64("rel_tol", 1e-8)?);
    let e = curl_expectation_state(&wf, &flow, &opts)?;
    let mut t = Table::new(&["component", "value"]);
    for (k, c) in ["x", "y", "z"].iter().enumerate() {
        t.push(vec![(*c).into(), e.value[k].into()]);
    }
    Ok(Artifact::json(json!({ "family": wf.tag, "expectation": to_value(&e) }), t))
}

fn angular(s: &str) -> Angular {
    match s {
        "cos" => Angular::Cos,
        "sin" => Angular::Sin,
        _ => Angular::Exp,
    }
}

fn defect(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let variants = p.choice_list("variant", &["exp", "cos", "sin"], &["exp", "cos", "sin"])?;
    let mus = p.f64_list("mu", &[0.25, 0.5, 0.75, 1.0, 1.5])?;
    let mut t = Table::new(&["variant", "mu", "factor_re", "factor_im", "line_integral", "defect_re", "defect_im", "weakly_differentiable", "error"]);
    let mut rows = Vec::new();
    let mut failures = 0;
    for v in &variants {
        for &mu in &mus {
            match defect_for(angular(v), mu, ctx.consts) {
                Ok(r) => {
                    t.push(vec![
                        v.as_str().into(),
                        mu.into(),
                        r.factor.re.into(),
                        r.factor.im.into(),
                        r.line_integral.into(),
                        r.defect.re.into(),
                        r.defect.im.into(),
                        r.weakly_differentiable.into(),
                        Cell::Empty,
                    ]);
                    rows.push(to_value(&r));
                }
                Err(e) => {
                    let e = CliError::from(e);
                    if e.exit_code() == crate::error::EXIT_VALIDATION {
                        return Err(e);
                    }
                    failures += 1;
                    let empty = || Cell::Empty;
                    t.push(vec![v.as_str().into(), mu.into(), empty(), empty(), empty(), empty(), empty(), empty(), e.to_string().into()]);
                    rows.push(json!({ "variant": v, "mu": mu, "error": e.to_string() }));
                }
            }
        }
    }
    Ok(Artifact::json(json!({ "rows": rows }), t).with_failures(failures))
}

fn projection_opts(p: &Params) -> Result<ProjectionOptions<f64>, CliError> {
    let mut o = ProjectionOptions::default();
    o.r_max = p.opt_f64("r_max")?;
    Ok(o)
}

fn spectrum_project(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let (_, wf, _) = build(ctx)?;
    let n_max = p.usize("n_max", 40)?;
    let th = p.f64("threshold", 1e-6)?;
    let pr = project_to_hermite(&wf, n_max, ctx.consts, &projection_opts(p)?)?;
    let s = &pr.state;
    let mut t = Table::new(&["n1", "n2", "shell", "re", "im", "abs"]);
    let mut coeffs = Vec::new();
    for shell in 0..=n_max {
        for n2 in 0..=shell {
            let n1 = shell - n2;
            let c = s.coefficient(n1, n2).expect("index inside the basis");
            t.push(vec![n1.into(), n2.into(), shell.into(), c.re.into(), c.im.into(), c.norm().into()]);
            coeffs.push(json!([n1, n2, c.re, c.im]));
        }
    }
    let result = json!({
        "family": wf.tag,
        "n_max": n_max,
        "norm": pr.norm,
        "norm_error": pr.norm_error,
        "norm_captured": s.norm_captured,
        "threshold": th,
        "significant": s.significant(th),
        "shells_above": s.shells_above(th),
        "shell_weights": s.shell_weights(),
        "coefficients": coeffs,
    });
    Ok(Artifact::json(result, t))
}

fn nonsolution_cert(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let (_, wf, _) = build(ctx)?;
    let n_max = p.usize("n_max", 40)?;
    let t_probe = p.f64("t_probe", PI / ctx.consts.omega)?;
    let r = nonsolution_certificate(&wf, t_probe, n_max, &projection_opts(p)?)?;
    let mut t = Table::new(&["tag", "energy", "t_probe", "n_max", "defect", "threshold", "norm_captured", "significant", "shells", "certified"]);
    t.push(vec![
        r.tag.as_str().into(),
        r.energy.into(),
        r.t_probe.into(),
        r.n_max.into(),
        r.defect.into(),
        r.threshold.into(),
        r.norm_captured.into(),
        r.significant.into(),
        r.shells.into(),
        r.certified.into(),
    ]);
    Ok(Artifact::json(to_value(&r), t))
}

fn integrability_probe(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let key = family_key(ctx)?;
    let k = p.usize("cutoffs", 12)?;
    if k < 3 {
        return Err(CliError::Config("cutoffs must be at least 3".into()));
    }
    // labels are built without regime checks so that out-of-range controls can be probed
    let (case, labels) = match key {
        FamilyKey::NonQuantized { case, n, a, mu, variant, minus } => {
            let l = match case {
                Case::L => QuantumLabels::case_l(n, mu),
                Case::U => QuantumLabels::case_u(a, mu),
            };
            (case, l.with_variant(variant).with_branch(if minus { Branch::Minus } else { Branch::Plus }))
        }
        _ => return Err(CliError::Config("integrability-probe needs an osc2d:L or osc2d:U family".into())),
    };
    let r = radial_integrability_probe(case, &labels, &ctx.consts, &default_cutoffs(k));
    let mut t = Table::new(&["cutoff", "integral"]);
    for (c, v) in r.cutoffs.iter().zip(&r.integrals) {
        t.push(vec![(*c).into(), (*v).into()]);
    }
    Ok(Artifact::json(json!({ "family": ctx.family, "report": to_value(&r) }), t))
}

fn domain_heuristic(ctx: &Ctx) -> Result<Artifact, CliError> {
    let (_, wf, _) = build(ctx)?;
    let r = domain_membership_heuristic(&wf, ctx.consts)?;
    let mut t = Table::new(&["r_in", "stencil", "h2", "x2"]);
    for row in &r.scan {
        t.push(vec![row.r_in.into(), row.stencil.into(), row.h2.into(), row.x2.into()]);
    }
    Ok(Artifact::json(to_value(&r), t))
}

fn wallstrom(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let d = WallstromConfig::default();
    let cfg = WallstromConfig {
        separation: p.f64("separation", d.separation)?,
        width: p.f64("width", d.width)?,
        x_min: p.f64("x_min", d.x_min)?,
        x_max: p.f64("x_max", d.x_max)?,
        points: p.usize("points", d.points)?,
        dt: p.f64("dt", d.dt)?,
        t_end: p.f64("t_end", d.t_end)?,
        record_every: p.usize("record_every", d.record_every)?,
        t_pre: p.f64("t_pre", d.t_pre)?,
        t_post: p.f64("t_post", d.t_post)?,
    };
    let r = wallstrom_demo(&cfg, ctx.consts)?;
    let mut t = Table::new(&["t", "l1_distance"]);
    for row in &r.rows {
        t.push(vec![row.t.into(), row.l1_distance.into()]);
    }
    Ok(Artifact::csv(to_value(&r), t))
}

fn gauss(p: &[f64; 3]) -> f64 {
    (-(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]) * 0.5).exp()
}

fn trig(p: &[f64; 3]) -> f64 {
    2.5 + (p[0] + 0.3 * p[1]).sin() * (p[2] - 0.2 * p[0]).cos() + 0.4 * (1.3 * p[1]).cos()
}

fn linexp(p: &[f64; 3]) -> f64 {
    (0.3 * p[0] - 0.2 * p[1] + 0.5 * p[2]).exp()
}

fn quadratic(p: &[f64; 3]) -> f64 {
    0.5 * (p[0] * p[0] + p[1] * p[1])
}

fn mixed(p: &[f64; 3]) -> f64 {
    (p[0] * p[1]).sin() + (0.5 * p[2]).cos() * p[0] + (0.3 * p[1] * p[2]).exp()
}

fn rotation(p: &[f64; 3]) -> [f64; 3] {
    [-p[1], p[0], 0.0]
}

fn identity_checks(ctx: &Ctx) -> Result<Artifact, CliError> {
    let p = ctx.params;
    let which = p.choice("identity", "nottale", &["nottale", "weber", "antonelli"])?;
    match which.as_str() {
        "nottale" | "weber" => {
            let (fields, default): (&[&str], &str) = if which == "nottale" { (&["gauss", "trig", "linexp"], "gauss") } else { (&["quadratic", "mixed", "rotation"], "quadratic") };
            let field = p.choice("field", default, fields)?;
            let dim = p.usize("dim", if field == "quadratic" || field == "rotation" { 2 } else { 3 })?;
            let half = p.f64("half", 1.5)?;
            let points = p.usize("points", 8)?;
            let h = p.f64("h", 1e-2)?;
            let grid = GridSpec::cube(dim, half, points)?;
            let rep = match field.as_str() {
                "gauss" => nottale_identity_check(&gauss, p.f64("alpha", 0.5)?, &grid, h)?,
                "trig" => nottale_identity_check(&trig, p.f64("alpha", 0.5)?, &grid, h)?,
                "linexp" => nottale_identity_check(&linexp, p.f64("alpha", 0.5)?, &grid, h)?,
                "quadratic" => weber_from_potential(&quadratic, &grid, h)?,
                "mixed" => weber_from_potential(&mixed, &grid, h)?,
                _ => weber_identity_check(&rotation, &grid, h)?,
            };
            let reports = [rep];
            Ok(Artifact::json(json!({ "identity": which, "field": field, "report": to_value(&reports[0]) }), report_table(&reports)))
        }
        _ => {
            let (key, wf, _) = build(ctx)?;
            let l = length_scale(&key, &ctx.consts);
            let prof = Profile::Poly { k: 4 };
            let tests: Vec<VectorTest<f64>> = if wf.dim == 3 {
                [[0.0, 0.0, 1.0], [0.5, 0.3, -0.5], [2.0, 0.0, 0.0]]
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let c = c.map(|x| x * l);
                        let f = |amp: f64| TestFunction::radial(c, 1.5 * l, amp, prof, 3);
                        VectorTest::new([f(1.0), f(-0.5), f(0.8)], &format!("bump{i}"))
                    })
                    .collect()
            } else {
                [[0.0, 0.0, 0.0], [1.0, -0.5, 0.0]]
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        let f = TestFunction::radial(c.map(|x| x * l), 1.5 * l, 1.0, prof, 2);
                        let mut v = VectorTest::vertical(f);
                        v.tag = format!("bump{i}");
                        v
                    })
                    .collect()
            };
            let rows = antonelli_irrotationality_residual(&wf, &tests, &QuadratureConfig::with_tol(1e-9, 1e-8))?;
            let mut t = Table::new(&["test", "lhs", "rhs", "residual", "quad_error"]);
            for r in &rows {
                t.push(vec![r.test.as_str().into(), r.lhs.into(), r.rhs.into(), r.residual.into(), r.quad_error.into()]);
            }
            let max = rows.iter().fold(0.0f64, |m, r| m.max(r.residual.abs()));
            Ok(Artifact::json(json!({ "identity": which, "family": wf.tag, "rows": to_value(&rows), "max_abs_residual": max }), t))
        }
    }
}
