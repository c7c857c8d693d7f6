use super::constants::PhysicalConstants;
use super::families::Potential;
use super::labels::{Case, QuantumLabels};
use super::wavefunction::{RadialProfile, WaveFunction};
use crate::error::{Error, Result};
use crate::numerics::fd::{partial, second, Stencil};
use crate::numerics::quad::{integrate, integrate_1d, Estimate, QuadratureConfig, Region};
use crate::scalar::{from_usize, lit, Primitive};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Convergent,
    Divergent,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntegrabilityReport<T> {
    pub verdict: Verdict,
    pub cutoffs: Vec<T>,
    /// ∫_{1/c}^{c} |R|² ρ dρ per cutoff
    pub integrals: Vec<T>,
}

/// Cutoffs 2, 4, …, 2^k.
pub fn default_cutoffs<T: Primitive>(k: usize) -> Vec<T> {
    (1..=k).map(|i| lit::<T>(2.0).powi(i as i32)).collect()
}

/// Radial profile for the given case with no regime checks.
pub fn probe_profile<T: Primitive>(case: Case, labels: &QuantumLabels<T>, consts: &PhysicalConstants<T>) -> RadialProfile<T> {
    let k = consts.k_osc();
    match case {
        Case::L => RadialProfile::Laguerre { n: labels.n, mu: labels.mu, k },
        Case::U => RadialProfile::Tricomi { a: labels.a_param, mu: labels.mu, k },
    }
}

/// Decide whether ∫₀^∞ |R|² ρ dρ is finite from the growth of truncated integrals.
pub fn radial_integrability_probe<T: Primitive>(
    case: Case,
    labels: &QuantumLabels<T>,
    consts: &PhysicalConstants<T>,
    cutoffs: &[T],
) -> IntegrabilityReport<T> {
    let prof = probe_profile(case, labels, consts);
    let cfg = QuadratureConfig { max_subdivisions: 2000, ..QuadratureConfig::with_tol(1e-300, 1e-10) };
    let mut integrals = Vec::with_capacity(cutoffs.len());
    let mut failed = false;
    for &c in cutoffs {
        // log-variable form: ∫ |R(e^t)|² e^{2t} dt
        let r = integrate_1d(
            |t: T| {
                let rho = t.exp();
                match prof.eval(rho) {
                    Ok(v) => v * v * rho * rho,
                    Err(_) => T::nan(),
                }
            },
            -c.ln(),
            c.ln(),
            &cfg,
        );
        match r {
            Ok(e) if e.value.is_finite() => integrals.push(e.value),
            _ => {
                failed = true;
                integrals.push(T::infinity());
            }
        }
    }
    let verdict = if failed { Verdict::Divergent } else { verdict_of(&integrals) };
    IntegrabilityReport { verdict, cutoffs: cutoffs.to_vec(), integrals }
}

fn verdict_of<T: Primitive>(integrals: &[T]) -> Verdict {
    if integrals.len() < 5 {
        return Verdict::Divergent;
    }
    let inc: Vec<T> = integrals.windows(2).map(|w| w[1] - w[0]).collect();
    let last = *integrals.last().unwrap();
    let tiny = last.abs() * lit(1e-13);
    let tail = &inc[inc.len() - 4..];
    let ok = tail.windows(2).all(|w| w[1].abs() <= tiny || w[1].abs() < lit::<T>(0.99) * w[0].abs());
    if ok {
        Verdict::Convergent
    } else {
        Verdict::Divergent
    }
}

/// ⟨ψ, Hψ⟩/⟨ψ, ψ⟩ over the part of the domain at distance ≥ `eps` from the
/// origin (planar families: annulus; 3-D: shell), up to radius `r_out`.
pub fn rayleigh_quotient<T: Primitive>(wf: &WaveFunction<T>, v: &Potential<T>, eps: T, r_out: T, cfg: &QuadratureConfig<T>) -> Result<Estimate<T, T>> {
    if !wf.has_analytic() {
        return Err(Error::InvalidInput("Rayleigh quotient needs an analytic wave function".into()));
    }
    let k2 = wf.consts.hbar * wf.consts.hbar / (lit::<T>(2.0) * wf.consts.mass);
    let region = if wf.dim == 2 { Region::annulus([T::zero(); 3], eps, r_out) } else { Region::shell([T::zero(); 3], eps, r_out) };
    let err = std::sync::Mutex::new(None);
    let e = integrate(
        |p: &[T; 3]| -> [T; 2] {
            match wf.phase_amp_taylor(p) {
                Ok([th, sg]) => {
                    let rho = (sg.value * lit::<T>(2.0)).exp();
                    let g2 = |g: &[T; 3]| g[0] * g[0] + g[1] * g[1] + g[2] * g[2];
                    let kin = -k2 * (sg.lap() + g2(&sg.grad) - g2(&th.grad));
                    [rho * (kin + v.value(p)), rho]
                }
                Err(e) => {
                    err.lock().unwrap().get_or_insert(e);
                    [T::zero(); 2]
                }
            }
        },
        &region,
        cfg,
    )?;
    if let Some(e) = err.into_inner().unwrap() {
        return Err(e);
    }
    let [num, den] = e.value;
    Ok(Estimate { value: num / den, error: (e.error / den) * lit(2.0), evaluations: e.evaluations })
}

/// Residual of the separated radial equation at radius `r`, relative to the
/// magnitude of its terms. Planar families use
/// −(ħ²/2m)(R'' + R'/ρ − μ²R/ρ²) + ½mω²ρ²R − ER; 3-D families
/// −(ħ²/2m)(R'' + 2R'/r − l(l+1)R/r²) + VR − ER.
pub fn radial_ode_residual<T: Primitive>(wf: &WaveFunction<T>, r: T, h: T) -> Result<T> {
    let c = &wf.consts;
    let e = wf.energy().ok_or_else(|| Error::InvalidInput("state has no energy".into()))?;
    let k2 = c.hbar * c.hbar / (lit::<T>(2.0) * c.mass);
    let (rad, ang, pot): (Box<dyn Fn(T) -> T>, T, T) = if let Some(prof) = wf.radial_profile() {
        let mu = wf.labels.mu;
        let f = move |x: T| prof.eval(x).unwrap_or(T::nan());
        (Box::new(f), mu * mu, lit::<T>(0.5) * c.mass * c.omega * c.omega * r * r)
    } else if wf.dim == 3 {
        // radial part from ψ along a ray off the z-axis
        let dir = [lit::<T>(0.6), lit::<T>(0.0), lit::<T>(0.8)];
        let w = wf.clone();
        let f = move |x: T| w.evaluate(&[x * dir[0], x * dir[1], x * dir[2]]).map(|z| z.re).unwrap_or(T::nan());
        let l = from_usize::<T>(wf.labels.l);
        let pot = Potential::coulomb(*c).value(&[r, T::zero(), T::zero()]);
        (Box::new(f), l * (l + T::one()), pot)
    } else {
        return Err(Error::InvalidInput("no radial equation for this family".into()));
    };
    let g = |p: &[T; 3]| rad(p[0]);
    let q = [r, T::zero(), T::zero()];
    let r0 = rad(r);
    let d1 = partial(&g, &q, 0, h, Stencil::Central4);
    let d2 = second(&g, &q, 0, h, Stencil::Central4);
    let first = if wf.dim == 3 { lit::<T>(2.0) * d1 / r } else { d1 / r };
    let terms = [-k2 * d2, -k2 * first, k2 * ang * r0 / (r * r), pot * r0, -e * r0];
    let res = terms.iter().fold(T::zero(), |a, &b| a + b);
    let scale = terms.iter().fold(T::zero(), |a, &b| a + b.abs());
    Ok(res.abs() / scale)
}
