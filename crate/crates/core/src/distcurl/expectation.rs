use super::{relevant, run_pairing, PairingJob, PairingOptions, ScanEntry, SyncCatch};
use crate::error::{Error, Result};
use crate::numerics::fd::{gradient, Stencil};
use crate::numerics::grid::{Singular, SingularSet};
use crate::numerics::quad::{integrate_1d, QuadratureConfig};
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::{FlowFields, WaveFunction};
use crate::vec3::{self, V3};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurlExpectation {
    /// (∇×v)(ρ), one component per axis.
    pub value: [f64; 3],
    pub quadrature_error: f64,
    pub truncation_error: f64,
    /// ∫ρ along the singular line, or ρ at the singular point.
    pub singular_density: f64,
    pub epsilon_scan: Vec<ScanEntry>,
}

fn ray_directions<T: Primitive>(dim: usize) -> Vec<V3<T>> {
    let s = lit::<T>(1.0 / 3f64.sqrt());
    let mut d = vec![[T::one(), T::zero(), T::zero()], [T::zero(), -T::one(), T::zero()]];
    if dim == 3 {
        d.push([s, s, s]);
        d.push([T::zero(), T::zero(), -T::one()]);
    } else {
        let h = lit::<T>(0.5f64.sqrt());
        d.push([-h, h, T::zero()]);
    }
    d
}

/// Finite, decaying on rays faster than r^{-(d+1)}, and Cauchy on
/// approach to the singular set.
fn check_extension_hypotheses<T: Primitive>(rho: &(dyn Fn(&V3<T>) -> Result<T> + Sync), singular: &SingularSet<T>, dim: usize, length: T) -> Result<T> {
    let bad = |m: String| Error::ExtensionHypothesisViolated(m);
    let eval = |p: &V3<T>| -> Result<T> {
        let r = rho(p).map_err(|e| bad(format!("ρ failed at {:?}: {e}", vec3::to_f64(*p))))?;
        if !r.is_finite() {
            return Err(bad(format!("ρ is not finite at {:?}", vec3::to_f64(*p))));
        }
        Ok(r)
    };
    let radii: Vec<T> = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0].iter().map(|&x| lit::<T>(x) * length).collect();
    let mut peak = T::zero();
    let mut tails = Vec::new();
    for d in ray_directions::<T>(dim) {
        let vals: Vec<T> = radii.iter().map(|&r| eval(&vec3::scale(r, d))).collect::<Result<_>>()?;
        peak = vals.iter().fold(peak, |a, b| a.max(b.abs()));
        tails.push(vals);
    }
    if !(peak > T::zero()) {
        return Err(bad("ρ vanishes on every probe ray".into()));
    }
    let pw = dim as i32 + 1;
    for vals in &tails {
        let n = vals.len();
        let last = vals[n - 1].abs();
        if last > lit::<T>(1e-8) * peak {
            return Err(bad(format!("ρ does not vanish at infinity: ρ(64L)/peak = {:e}", to_f64(last / peak))));
        }
        let w = |i: usize| radii[i].powi(pw) * vals[i].abs();
        if w(n - 1) > w(n - 2) && w(n - 1) > lit::<T>(1e-12) * peak * length.powi(pw) {
            return Err(bad("r^{d+1}ρ grows along a probe ray".into()));
        }
    }
    let anchors: Vec<(V3<T>, V3<T>)> = relevant(singular)
        .iter()
        .filter_map(|s| match s {
            Singular::Point { center, .. } => Some((*center, [T::one(), T::zero(), T::zero()])),
            Singular::Line { axis } => Some(([axis[0], axis[1], lit::<T>(0.3) * length], [lit(0.6), lit(0.8), T::zero()])),
            _ => None,
        })
        .collect();
    for (c, dir) in anchors {
        let vals: Vec<T> = (2..=6).map(|k| eval(&vec3::add(c, vec3::scale(length * lit::<T>(10f64.powi(-k)), dir)))).collect::<Result<_>>()?;
        for w in vals.windows(3) {
            let (a, b) = ((w[1] - w[0]).abs(), (w[2] - w[1]).abs());
            if b > a + lit::<T>(1e-10) * peak {
                return Err(bad(format!("ρ is not continuous at {:?}", vec3::to_f64(c))));
            }
        }
    }
    Ok(peak)
}

/// The extended pairing (∇×v)(ρ) = ∫ (v × ∇ρ)_i for each component i, after
/// checking that ρ is continuous, decays and is integrable.
pub fn curl_expectation<T, F, R, G>(v: F, rho: R, grad_rho: G, singular: &SingularSet<T>, dim: usize, opts: &PairingOptions<T>) -> Result<CurlExpectation>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<V3<T>> + Sync,
    R: Fn(&V3<T>) -> Result<T> + Sync,
    G: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    let length = opts.length_scale.unwrap_or(T::one());
    check_extension_hypotheses(&rho, singular, dim, length)?;
    let job = PairingJob { singular, dim, region: None, bbox: None, tag: "rho".into() };
    let c = SyncCatch::new();
    let grads = |p: &V3<T>| {
        let g = c.or_zero(grad_rho(p), [T::zero(); 3]);
        [g, g, g]
    };
    let planar = |p: &V3<T>| v(p).map(|w| if dim == 2 { [w[0], w[1], T::zero()] } else { w });
    let opts = PairingOptions { length_scale: Some(length), ..*opts };
    let raw = run_pairing(&job, &planar, &grads, &opts)?;
    let raw = c.take(raw)?;

    let line_cfg = QuadratureConfig::<T>::with_tol(1e-300, 1e-10);
    let mut singular_density = T::zero();
    for s in relevant(singular) {
        singular_density += match s {
            Singular::Point { center, .. } => rho(&center)?,
            Singular::Line { axis } => integrate_1d(|z: T| rho(&[axis[0], axis[1], z]).unwrap_or(T::nan()), T::neg_infinity(), T::infinity(), &line_cfg)?.value,
            _ => T::zero(),
        };
    }
    Ok(CurlExpectation {
        value: vec3::to_f64(raw.value),
        quadrature_error: to_f64(raw.quad_error),
        truncation_error: to_f64(raw.truncation),
        singular_density: to_f64(singular_density),
        epsilon_scan: raw.scan.into_iter().map(|(e, x)| ScanEntry { eps_sing: to_f64(e), value: super::PairingValue::Vector(vec3::to_f64(x)) }).collect(),
    })
}

/// (∇×v)(ρ) for ρ = |ψ|² and the drift field of `flow`, with ∇ρ = 2Re(ψ*∇ψ).
pub fn curl_expectation_state<T: Primitive>(wf: &WaveFunction<T>, flow: &FlowFields<T>, opts: &PairingOptions<T>) -> Result<CurlExpectation> {
    let length = opts.length_scale.unwrap_or_else(|| if wf.dim == 3 { wf.consts.a0() } else { wf.consts.k_osc().sqrt().recip() });
    let h = lit::<T>(1e-4) * length;
    let grad_rho = |p: &V3<T>| -> Result<V3<T>> {
        match wf.gradient(p) {
            Some(g) => {
                let g = g?;
                let z = wf.evaluate(p)?;
                Ok([0, 1, 2].map(|k| lit::<T>(2.0) * (z.conj() * g[k]).re))
            }
            None => {
                let c = SyncCatch::new();
                let g = gradient(&|q: &V3<T>| c.or_zero(wf.density(q), T::nan()), p, h, wf.dim, Stencil::Central4);
                c.take(g)
            }
        }
    };
    let opts = PairingOptions { length_scale: Some(length), ..*opts };
    curl_expectation(|p: &V3<T>| (flow.v)(p, T::zero()), |p: &V3<T>| wf.density(p), grad_rho, &flow.singular, wf.dim, &opts)
}
