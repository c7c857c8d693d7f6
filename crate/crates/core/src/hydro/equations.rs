use super::catch::Catch;
use super::{report, DerivMode, ResidualOptions, ResidualReport};
use crate::error::{Error, Result};
use crate::numerics::fd::{check_clearance, divergence, gradient, jacobian, laplacian, vector_laplacian, Stencil};
use crate::numerics::grid::GridSpec;
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::{FlowFields, FlowJet, Potential, WaveFunction};
use crate::vec3::{self, cross, curl_of, dot, mat_t_vec, mat_vec, norm, V3};

/// ρ = |ψ|², v = (ħ/m) Im(∇ψ/ψ), u = (ħ/2m)∇ρ/ρ, j = ρv.
pub fn madelung_transform<T: Primitive>(psi: &WaveFunction<T>) -> FlowFields<T> {
    FlowFields::from_wavefunction(psi, crate::states::eps_node_default())
}

pub fn madelung_transform_with<T: Primitive>(psi: &WaveFunction<T>, eps_node_rel: T) -> FlowFields<T> {
    FlowFields::from_wavefunction(psi, eps_node_rel)
}

fn fd_dt<T: Primitive, F: Fn(T) -> V3<T>>(f: F, t: T, ht: T) -> V3<T> {
    let two = lit::<T>(2.0);
    let (a, b, c, d) = (f(t - two * ht), f(t - ht), f(t + ht), f(t + two * ht));
    [0, 1, 2].map(|i| (a[i] - lit::<T>(8.0) * b[i] + lit::<T>(8.0) * c[i] - d[i]) / (lit::<T>(12.0) * ht))
}

/// All derivative data by nested finite differences with step `h`.
pub fn fd_flow_jet<T: Primitive>(flow: &FlowFields<T>, p: &V3<T>, t: T, h: T, s: Stencil) -> Result<FlowJet<T>> {
    check_clearance(p, h, 2 * s.reach(), &flow.singular)?;
    let c = Catch::new();
    let d = flow.dim;
    let rho = |q: &V3<T>| c.s((flow.rho)(q, t));
    let v = |q: &V3<T>| c.v((flow.v)(q, t));
    let u = |q: &V3<T>| c.v((flow.u)(q, t));
    let sqrt_rho = |q: &V3<T>| {
        let r = rho(q);
        if !(r > T::zero()) {
            c.s::<T>(Err(Error::StencilTouchesNode { at: vec3::to_f64(*q) }))
        } else {
            r.sqrt()
        }
    };
    let qfield = |q: &V3<T>| laplacian(&sqrt_rho, q, h, d, s) / sqrt_rho(q);
    let mut jet = FlowJet {
        rho: rho(p),
        grad_rho: gradient(&rho, p, h, d, s),
        v: v(p),
        jac_v: jacobian(&v, p, h, d, s),
        grad_div_v: gradient(&|q: &V3<T>| divergence(&v, q, h, d, s), p, h, d, s),
        lap_v: vector_laplacian(&v, p, h, d, s),
        u: u(p),
        jac_u: jacobian(&u, p, h, d, s),
        grad_div_u: gradient(&|q: &V3<T>| divergence(&u, q, h, d, s), p, h, d, s),
        lap_u: vector_laplacian(&u, p, h, d, s),
        grad_q: gradient(&qfield, p, h, d, s),
        ..Default::default()
    };
    if !flow.stationary {
        let ht = h;
        jet.dt_rho = fd_dt(|tt| [c.s((flow.rho)(p, tt)), T::zero(), T::zero()], t, ht)[0];
        jet.dt_v = fd_dt(|tt| c.v((flow.v)(p, tt)), t, ht);
        jet.dt_u = fd_dt(|tt| c.v((flow.u)(p, tt)), t, ht);
    }
    c.take(jet)
}

/// Derivative data according to `mode`.
pub fn flow_jet<T: Primitive>(flow: &FlowFields<T>, p: &V3<T>, t: T, mode: DerivMode<T>) -> Result<FlowJet<T>> {
    match (mode, &flow.derivs) {
        (DerivMode::Analytic, None) => Err(Error::InvalidInput(format!("{} has no analytic derivatives", flow.tag))),
        (DerivMode::Analytic | DerivMode::Auto, Some(d)) => d(p, t),
        (DerivMode::Auto, None) => fd_flow_jet(flow, p, t, lit(1e-2), Stencil::Central4),
        (DerivMode::FiniteDifference { h, stencil }, _) => fd_flow_jet(flow, p, t, h, stencil),
    }
}

/// (ħ²/2m)∇(Δ√ρ/√ρ) by nested central differences.
pub fn bohm_force<T: Primitive, F>(rho: F, p: &V3<T>, h: T, dim: usize, hbar: T, mass: T) -> Result<V3<T>>
where
    F: Fn(&V3<T>) -> Result<T>,
{
    let c = Catch::new();
    let s = Stencil::Central4;
    let sq = |q: &V3<T>| {
        let r = c.s(rho(q));
        if !(r > T::zero()) {
            c.s::<T>(Err(Error::StencilTouchesNode { at: vec3::to_f64(*q) }))
        } else {
            r.sqrt()
        }
    };
    let qf = |q: &V3<T>| laplacian(&sq, q, h, dim, s) / sq(q);
    let g = gradient(&qf, p, h, dim, s);
    let k = hbar * hbar / (lit::<T>(2.0) * mass);
    c.take(vec3::scale(k, g))
}

/// Bohm force from the flow's derivative data.
pub fn bohm_force_flow<T: Primitive>(flow: &FlowFields<T>, p: &V3<T>, opts: &ResidualOptions<T>) -> Result<V3<T>> {
    let j = flow_jet(flow, p, opts.t, opts.mode)?;
    let c = &flow.consts;
    Ok(vec3::scale(c.hbar * c.hbar / (lit::<T>(2.0) * c.mass), j.grad_q))
}

/// m(∂v/∂t + (v·∇)v) + ∇V − (ħ²/2m)∇Q.
pub fn momentum_at<T: Primitive>(flow: &FlowFields<T>, j: &FlowJet<T>, pot: &Potential<T>, p: &V3<T>) -> V3<T> {
    let c = &flow.consts;
    let conv = mat_vec(&j.jac_v, j.v);
    let gv = pot.gradient(p);
    let k = c.hbar * c.hbar / (lit::<T>(2.0) * c.mass);
    [0, 1, 2].map(|i| if i < flow.dim { c.mass * (j.dt_v[i] + conv[i]) + gv[i] - k * j.grad_q[i] } else { T::zero() })
}

/// ∂ρ/∂t + ∇·(ρv).
pub fn continuity_at<T: Primitive>(j: &FlowJet<T>) -> T {
    j.dt_rho + dot(j.grad_rho, j.v) + j.rho * j.div_v()
}

/// m(∂v/∂t + (v·∇)v) + ∇V − m(u·∇)u − (ħ/2)Δu.
pub fn nelson1_at<T: Primitive>(flow: &FlowFields<T>, j: &FlowJet<T>, pot: &Potential<T>, p: &V3<T>) -> V3<T> {
    let c = &flow.consts;
    let cv = mat_vec(&j.jac_v, j.v);
    let cu = mat_vec(&j.jac_u, j.u);
    let gv = pot.gradient(p);
    let half = lit::<T>(0.5);
    [0, 1, 2].map(|i| {
        if i < flow.dim {
            c.mass * (j.dt_v[i] + cv[i]) + gv[i] - c.mass * cu[i] - half * c.hbar * j.lap_u[i]
        } else {
            T::zero()
        }
    })
}

/// ∂u/∂t + ∇(v·u + (ħ/2m)∇·v).
pub fn nelson2_at<T: Primitive>(flow: &FlowFields<T>, j: &FlowJet<T>) -> V3<T> {
    let c = &flow.consts;
    let a = mat_t_vec(&j.jac_v, j.u);
    let b = mat_t_vec(&j.jac_u, j.v);
    let k = c.hbar / (lit::<T>(2.0) * c.mass);
    [0, 1, 2].map(|i| if i < flow.dim { j.dt_u[i] + a[i] + b[i] + k * j.grad_div_v[i] } else { T::zero() })
}

/// Reports for the momentum and the continuity equation.
pub fn madelung_residual<T: Primitive>(flow: &FlowFields<T>, pot: &Potential<T>, grid: &GridSpec<T>, opts: &ResidualOptions<T>) -> Result<[ResidualReport; 2]> {
    let m = report(&format!("madelung_momentum:{}", flow.tag), grid, opts.keep_points, |p| {
        let j = flow_jet(flow, p, opts.t, opts.mode)?;
        Ok(norm(momentum_at(flow, &j, pot, p)))
    })?;
    let c = report(&format!("madelung_continuity:{}", flow.tag), grid, opts.keep_points, |p| {
        let j = flow_jet(flow, p, opts.t, opts.mode)?;
        Ok(continuity_at(&j).abs())
    })?;
    Ok([m, c])
}

/// Strong curl of v on the grid. `Auto` differentiates the v closure
/// numerically: Hessian-based Jacobians are symmetric by construction.
pub fn third_madelung_pointwise<T: Primitive>(flow: &FlowFields<T>, grid: &GridSpec<T>, opts: &ResidualOptions<T>) -> Result<ResidualReport> {
    report(&format!("madelung_irrotational:{}", flow.tag), grid, opts.keep_points, |p| {
        let jac = match (opts.mode, &flow.derivs) {
            (DerivMode::Analytic, Some(d)) => d(p, opts.t)?.jac_v,
            (DerivMode::Analytic, None) => return Err(Error::InvalidInput(format!("{} has no analytic derivatives", flow.tag))),
            (DerivMode::FiniteDifference { h, stencil }, _) => fd_jac_v(flow, p, opts.t, h, stencil)?,
            (DerivMode::Auto, _) => fd_jac_v(flow, p, opts.t, lit(1e-3), Stencil::Central4)?,
        };
        Ok(norm(curl_of(&jac)))
    })
}

fn fd_jac_v<T: Primitive>(flow: &FlowFields<T>, p: &V3<T>, t: T, h: T, s: Stencil) -> Result<vec3::M3<T>> {
    check_clearance(p, h, s.reach(), &flow.singular)?;
    let c = Catch::new();
    let j = jacobian(&|q: &V3<T>| c.v((flow.v)(q, t)), p, h, flow.dim, s);
    c.take(j)
}

/// Reports for both Nelson equations.
pub fn nelson_residual<T: Primitive>(flow: &FlowFields<T>, pot: &Potential<T>, grid: &GridSpec<T>, opts: &ResidualOptions<T>) -> Result<[ResidualReport; 2]> {
    let a = report(&format!("nelson_1:{}", flow.tag), grid, opts.keep_points, |p| {
        let j = flow_jet(flow, p, opts.t, opts.mode)?;
        Ok(norm(nelson1_at(flow, &j, pot, p)))
    })?;
    let b = report(&format!("nelson_2:{}", flow.tag), grid, opts.keep_points, |p| {
        let j = flow_jet(flow, p, opts.t, opts.mode)?;
        Ok(norm(nelson2_at(flow, &j)))
    })?;
    Ok([a, b])
}

/// Comparison of the analytic and the finite-difference residual paths.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PathComparison {
    /// max over points and components of |analytic − FD(h)|
    pub max_diff: f64,
    /// max of |FD(h) − FD(2h)|
    pub max_estimate: f64,
    /// max of |analytic − FD(h)| / (10·|FD(h) − FD(2h)| + floor)
    pub worst_ratio: f64,
    pub points: usize,
}

impl PathComparison {
    pub fn agrees(&self) -> bool {
        self.worst_ratio <= 1.0
    }
}

/// Compare all four equation residuals (momentum, continuity, Nelson 1, 2)
/// between the analytic path and central differences with step `h`.
/// `floor` absorbs round-off in the nested differences.
pub fn compare_paths<T: Primitive>(flow: &FlowFields<T>, pot: &Potential<T>, points: &[V3<T>], h: T, floor: f64) -> Result<PathComparison> {
    let d = flow.derivs.as_ref().ok_or_else(|| Error::InvalidInput(format!("{} has no analytic derivatives", flow.tag)))?;
    let eval = |j: &FlowJet<T>, p: &V3<T>| -> [T; 10] {
        let m = momentum_at(flow, j, pot, p);
        let n1 = nelson1_at(flow, j, pot, p);
        let n2 = nelson2_at(flow, j);
        [m[0], m[1], m[2], continuity_at(j), n1[0], n1[1], n1[2], n2[0], n2[1], n2[2]]
    };
    let mut out = PathComparison { max_diff: 0.0, max_estimate: 0.0, worst_ratio: 0.0, points: 0 };
    for p in points {
        let ja = match d(p, T::zero()) {
            Ok(j) => j,
            Err(Error::NodeEncountered { .. }) => continue,
            Err(e) => return Err(e),
        };
        let a = eval(&ja, p);
        let f1 = eval(&fd_flow_jet(flow, p, T::zero(), h, Stencil::Central4)?, p);
        let f2 = eval(&fd_flow_jet(flow, p, T::zero(), h * lit(2.0), Stencil::Central4)?, p);
        for k in 0..10 {
            let diff = to_f64((a[k] - f1[k]).abs());
            let est = to_f64((f1[k] - f2[k]).abs());
            out.max_diff = out.max_diff.max(diff);
            out.max_estimate = out.max_estimate.max(est);
            out.worst_ratio = out.worst_ratio.max(diff / (10.0 * est + floor));
        }
        out.points += 1;
    }
    Ok(out)
}

/// Terms of the vorticity transport equation at one point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VorticityTerms<T> {
    pub omega: V3<T>,
    pub dt_omega: V3<T>,
    /// ∇×(v×ω)
    pub curl_v_cross_omega: V3<T>,
    /// (v·∇)ω
    pub advection: V3<T>,
    /// (ω·∇)v
    pub stretching: V3<T>,
    pub div_v: T,
}

impl<T: Primitive> VorticityTerms<T> {
    /// ∂ω/∂t − ∇×(v×ω)
    pub fn curl_form(&self) -> V3<T> {
        vec3::sub(self.dt_omega, self.curl_v_cross_omega)
    }

    /// ∂ω/∂t + (v·∇)ω − (ω·∇)v + (∇·v)ω
    pub fn identity_form(&self) -> V3<T> {
        [0, 1, 2].map(|i| self.dt_omega[i] + self.advection[i] - self.stretching[i] + self.div_v * self.omega[i])
    }
}

/// Vorticity terms by nested central differences (space step `h`, time step `ht`).
pub fn vorticity_terms<T: Primitive>(flow: &FlowFields<T>, p: &V3<T>, t: T, h: T, ht: T) -> Result<VorticityTerms<T>> {
    let s = Stencil::Central4;
    check_clearance(p, h, 2 * s.reach(), &flow.singular)?;
    let c = Catch::new();
    let d = flow.dim.max(2);
    let vel = |q: &V3<T>, tt: T| c.v((flow.v)(q, tt));
    let omega_at = |q: &V3<T>, tt: T| curl_of(&jacobian(&|r: &V3<T>| vel(r, tt), q, h, flow.dim, s));
    let omega = omega_at(p, t);
    let dt_omega = if flow.stationary { [T::zero(); 3] } else { fd_dt(|tt| omega_at(p, tt), t, ht) };
    let vxw = |q: &V3<T>| cross(vel(q, t), omega_at(q, t));
    let curl_vxw = curl_of(&jacobian(&vxw, p, h, d, s));
    let jw = jacobian(&|q: &V3<T>| omega_at(q, t), p, h, flow.dim, s);
    let jv = jacobian(&|q: &V3<T>| vel(q, t), p, h, flow.dim, s);
    let v = vel(p, t);
    let out = VorticityTerms {
        omega,
        dt_omega,
        curl_v_cross_omega: curl_vxw,
        advection: mat_vec(&jw, v),
        stretching: mat_vec(&jv, omega),
        div_v: vec3::trace(&jv),
    };
    c.take(out)
}

/// Report of |∂ω/∂t − ∇×(v×ω)| on the grid.
pub fn vorticity_evolution_residual<T: Primitive>(flow: &FlowFields<T>, grid: &GridSpec<T>, t: T, h: T, ht: T) -> Result<ResidualReport> {
    report(&format!("vorticity_evolution:{}", flow.tag), grid, false, |p| Ok(norm(vorticity_terms(flow, p, t, h, ht)?.curl_form())))
}
