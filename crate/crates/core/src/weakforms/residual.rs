use super::probe::{local_l2_probe, L2Probe};
use super::spacetime::{pair_term, SpaceTimeTest, TestJet};
use crate::error::{Error, Result};
use crate::numerics::quad::{integrate_1d, QuadratureConfig};
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::{FlowFields, Potential};
use crate::vec3::{self, V3};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeakResidual {
    pub test_tag: String,
    pub momentum: f64,
    pub continuity: f64,
    /// Summed quadrature error of both residuals.
    pub quad_error: f64,
}

impl WeakResidual {
    pub fn max_abs(&self) -> f64 {
        self.momentum.abs().max(self.continuity.abs())
    }
}

/// A battery as a JSON object keyed by test tag.
pub fn battery_json(rows: &[WeakResidual]) -> serde_json::Value {
    serde_json::Value::Object(rows.iter().map(|r| (r.test_tag.clone(), serde_json::to_value(r).expect("residual serializes"))).collect())
}

#[derive(Clone, Copy, Debug)]
pub struct WeakOptions<T> {
    pub cfg: QuadratureConfig<T>,
    /// Used by the local L² probes, which only compare decades.
    pub probe_cfg: QuadratureConfig<T>,
}

impl<T: Primitive> Default for WeakOptions<T> {
    fn default() -> Self {
        WeakOptions { cfg: QuadratureConfig::with_tol(1e-10, 1e-8), probe_cfg: QuadratureConfig::with_tol(1e-8, 1e-5) }
    }
}

fn contract<T: Primitive>(a: V3<T>, b: V3<T>, jac: &[[T; 3]; 3]) -> T {
    let mut s = T::zero();
    for i in 0..3 {
        for k in 0..3 {
            s += a[i] * b[k] * jac[i][k];
        }
    }
    s
}

fn residual_battery<T, F, G>(tests: &[SpaceTimeTest<T>], dim: usize, stationary: bool, f: &F, g: &G, opts: &WeakOptions<T>) -> Result<Vec<WeakResidual>>
where
    T: Primitive,
    F: Fn(&V3<T>, T, &TestJet<T>) -> Result<[T; 2]> + Sync,
    G: Fn(&V3<T>, &TestJet<T>) -> Result<[T; 2]> + Sync,
{
    tests
        .iter()
        .map(|test| {
            let mut acc = [T::zero(); 2];
            let mut err = T::zero();
            for term in &test.terms {
                let (v, e) = pair_term(term, dim, stationary, f, g, &opts.cfg)?;
                acc = [acc[0] + v[0], acc[1] + v[1]];
                err += e;
            }
            Ok(WeakResidual { test_tag: test.tag.clone(), momentum: to_f64(acc[0]), continuity: to_f64(acc[1]), quad_error: to_f64(err) })
        })
        .collect()
}

/// Residuals of the space-time weak momentum and continuity equations in
/// (ρ, j), with ∇ρ = (2m/ħ)ρu. The continuity residual pairs with the first
/// component of each test.
pub fn gm_weak_residual<T: Primitive>(flow: &FlowFields<T>, potential: &Potential<T>, tests: &[SpaceTimeTest<T>], opts: &WeakOptions<T>) -> Result<Vec<WeakResidual>> {
    let c = flow.consts;
    let two_m_h = lit::<T>(2.0) * c.mass / c.hbar;
    let q = c.hbar * c.hbar / (lit::<T>(4.0) * c.mass * c.mass);
    let positive = |p: &V3<T>, r: T| -> Result<()> {
        if r > T::zero() && r.is_finite() {
            Ok(())
        } else {
            Err(Error::DensityVanishesOnSupport { at: vec3::to_f64(*p) })
        }
    };
    let f = |p: &V3<T>, t: T, jet: &TestJet<T>| -> Result<[T; 2]> {
        let rho = (flow.rho)(p, t)?;
        positive(p, rho)?;
        let j = (flow.j)(p, t)?;
        let g = vec3::scale(two_m_h * rho, (flow.u)(p, t)?);
        let gv = potential.gradient(p);
        let mom = vec3::dot(j, jet.dt) + contract(j, j, &jet.jac) / rho - rho * vec3::dot(gv, jet.value) / c.mass
            + q * (vec3::dot(g, jet.lap) + contract(g, g, &jet.jac) / rho);
        let cont = rho * jet.dt[0] + vec3::dot(j, jet.jac[0]);
        Ok([mom, cont])
    };
    let g = |p: &V3<T>, jet: &TestJet<T>| -> Result<[T; 2]> {
        let rho0 = (flow.rho)(p, T::zero())?;
        let j0 = (flow.j)(p, T::zero())?;
        Ok([vec3::dot(j0, jet.value), rho0 * jet.value[0]])
    };
    residual_battery(tests, flow.dim, flow.stationary, &f, &g, opts)
}

/// Potential term of the Nelson weak form: a field V, or α δ(r) acting
/// through α ∫dt (∇·φ)(t, 0).
#[derive(Clone, Debug)]
pub enum NelsonPotential<T: Primitive> {
    Field(Potential<T>),
    Delta { alpha: T },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NelsonReport {
    pub residuals: Vec<WeakResidual>,
    pub probes: Vec<L2Probe>,
}

/// α ∫dt (∇·φ)(t, 0) for each test.
pub fn delta_potential_term<T: Primitive>(alpha: T, tests: &[SpaceTimeTest<T>]) -> Result<Vec<T>> {
    let cfg = QuadratureConfig::<T>::with_tol(1e-300, 1e-13);
    tests
        .iter()
        .map(|test| {
            let mut s = T::zero();
            for term in &test.terms {
                let (lo, hi) = term.time.support();
                let div0 = term.space.divergence(&[T::zero(); 3]);
                if hi > lo && div0 != T::zero() && alpha != T::zero() {
                    s += term.coef * div0 * integrate_1d(|t: T| term.time.eval(t).0, lo, hi, &cfg)?.value;
                }
            }
            Ok(alpha * s)
        })
        .collect()
}

/// Residuals of the Nelson weak system in (u, v), after checking that u and v
/// are square integrable near the singular set on every test support.
pub fn nelson_weak_residual<T: Primitive>(flow: &FlowFields<T>, potential: &NelsonPotential<T>, tests: &[SpaceTimeTest<T>], opts: &WeakOptions<T>) -> Result<NelsonReport> {
    let c = flow.consts;
    let m = c.mass;
    let half = lit::<T>(0.5);
    let mut probes = Vec::new();
    for test in tests {
        for term in &test.terms {
            let (lo, hi) = term.time.support();
            let t = term.time.center.max(lo).min(hi);
            for (name, field) in [("v", &flow.v), ("u", &flow.u)] {
                let pr = local_l2_probe(|p: &V3<T>| field(p, t), name, &flow.singular, &term.space, flow.dim, &opts.probe_cfg)?;
                if pr.divergent {
                    let n = pr.values.len();
                    let growth = if n >= 2 { pr.values[n - 1] / pr.values[n - 2] } else { f64::INFINITY };
                    return Err(Error::LocalL2ProbeFailed { field: format!("{name} on {}", test.tag), growth });
                }
                probes.push(pr);
            }
        }
    }
    let f = |p: &V3<T>, t: T, jet: &TestJet<T>| -> Result<[T; 2]> {
        let u = (flow.u)(p, t)?;
        let v = (flow.v)(p, t)?;
        let pot = match potential {
            NelsonPotential::Field(pf) => pf.value(p),
            NelsonPotential::Delta { .. } => T::zero(),
        };
        let mom = m * vec3::dot(v, jet.dt) + (half * m * vec3::dot(v, v) + pot - half * m * vec3::dot(u, u)) * jet.div + half * c.hbar * vec3::dot(u, jet.lap);
        let cont = vec3::dot(u, jet.dt) + vec3::dot(u, v) * jet.div - half * c.hbar / m * vec3::dot(v, jet.grad_div);
        Ok([mom, cont])
    };
    let g = |p: &V3<T>, jet: &TestJet<T>| -> Result<[T; 2]> {
        let u0 = (flow.u)(p, T::zero())?;
        let v0 = (flow.v)(p, T::zero())?;
        Ok([m * vec3::dot(v0, jet.value), vec3::dot(u0, jet.value)])
    };
    let mut residuals = residual_battery(tests, flow.dim, flow.stationary, &f, &g, opts)?;
    if let NelsonPotential::Delta { alpha } = potential {
        for (r, d) in residuals.iter_mut().zip(delta_potential_term(*alpha, tests)?) {
            r.momentum += to_f64(d);
        }
    }
    Ok(NelsonReport { residuals, probes })
}
