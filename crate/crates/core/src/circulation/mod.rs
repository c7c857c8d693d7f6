//! Circulation integrals (m/2πħ)∮v·dr, winding numbers by phase unwrapping,
//! and the scan over the Φ_a superposition family.

mod curve;

pub use curve::{CurveFn, CurveSpec};

use crate::error::{Error, Result};
use crate::numerics::grid::{eps_sing_default, Singular, SingularSet};
use crate::numerics::quad::{integrate_fallible, QuadratureConfig};
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::{eps_node_default, phi_a_flow, phi_a_superposition, FlowFields, PhysicalConstants, WaveFunction};
use crate::vec3::{self, V3};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Largest accepted sample count when refining the phase walk.
pub const REFINEMENT_CAP: usize = 1 << 16;

fn line_cfg<T: Primitive>() -> QuadratureConfig<T> {
    QuadratureConfig { max_subdivisions: 5000, ..QuadratureConfig::with_tol(1e-14, 1e-12) }
}

/// Fail if a sample of γ lies within `eps` times the curve's extent of the
/// set. Branch cuts are ignored.
pub fn check_curve_clearance<T: Primitive>(curve: &CurveSpec<T>, singular: &SingularSet<T>, eps: T) -> Result<()> {
    let items: Vec<&Singular<T>> = singular.items.iter().filter(|s| !matches!(s, Singular::PositiveXCut)).collect();
    if items.is_empty() {
        return Ok(());
    }
    let pts: Vec<V3<T>> = curve.sample_params().into_iter().map(|t| curve.point(t)).collect();
    let extent = pts.iter().map(|p| vec3::norm(vec3::sub(*p, pts[0]))).fold(T::zero(), |a, b| a.max(b));
    for p in &pts {
        if items.iter().any(|s| s.distance(p) < eps * extent) {
            return Err(Error::CurveHitsSingularSet { at: vec3::to_f64(*p) });
        }
    }
    Ok(())
}

/// ∫_γ v·dr by adaptive quadrature along the parametrization.
pub fn line_integral<T, F>(v: F, curve: &CurveSpec<T>) -> Result<T>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    let breaks = curve.breakpoints(16);
    let e = integrate_fallible(
        |t: T| {
            let p = curve.point(t);
            let val = vec3::dot(v(&p)?, curve.tangent(t));
            Ok((val, T::zero()))
        },
        &breaks,
        &line_cfg(),
    )?;
    Ok(e.value)
}

/// (m/2πħ)∮_γ v·dr for a closed curve avoiding `singular` by ε_sing (relative).
pub fn circulation<T, F>(v: F, singular: &SingularSet<T>, curve: &CurveSpec<T>, consts: &PhysicalConstants<T>) -> Result<T>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    if !curve.closed {
        return Err(Error::InvalidInput(format!("{} is not closed", curve.tag)));
    }
    check_curve_clearance(curve, singular, eps_sing_default())?;
    let i = line_integral(v, curve)?;
    Ok(i / (lit::<T>(2.0) * T::PI() * consts.hm()))
}

/// Circulation of the drift field of a flow at t = 0.
pub fn flow_circulation<T: Primitive>(flow: &FlowFields<T>, curve: &CurveSpec<T>) -> Result<T> {
    circulation(|p: &V3<T>| (flow.v)(p, T::zero()), &flow.singular, curve, &flow.consts)
}

/// Accumulated phase of ψ along γ, in radians. Steps are bisected until each
/// phase increment is below π/2.
pub fn unwrapped_phase<T: Primitive>(psi: &WaveFunction<T>, curve: &CurveSpec<T>) -> Result<T> {
    let floor = eps_node_default::<T>() * psi.peak_abs();
    let eval = |t: T| -> Result<num_complex::Complex<T>> {
        let p = curve.point(t);
        let z = match psi.evaluate(&p) {
            Ok(z) => z,
            Err(Error::NodeEncountered { at }) => return Err(Error::NodeOnCurve { at }),
            Err(e) => return Err(e),
        };
        if !(z.norm() > floor) {
            return Err(Error::NodeOnCurve { at: vec3::to_f64(p) });
        }
        Ok(z)
    };
    let params = curve.sample_params();
    let mut used = params.len();
    let mut total = T::zero();
    let limit = T::FRAC_PI_2();
    for w in params.windows(2) {
        // depth-first bisection of [w0, w1]
        let mut stack = vec![(w[0], eval(w[0])?, w[1], eval(w[1])?)];
        while let Some((t0, z0, t1, z1)) = stack.pop() {
            let d = (z1 * z0.conj()).arg();
            if d.abs() < limit {
                total += d;
                continue;
            }
            used += 1;
            if used > REFINEMENT_CAP {
                return Err(Error::RefinementCap { cap: REFINEMENT_CAP });
            }
            let tm = lit::<T>(0.5) * (t0 + t1);
            let zm = eval(tm)?;
            stack.push((tm, zm, t1, z1));
            stack.push((t0, z0, tm, zm));
        }
    }
    Ok(total)
}

/// Winding number of Q = ψ/|ψ| along a closed curve.
pub fn winding_number<T: Primitive>(psi: &WaveFunction<T>, curve: &CurveSpec<T>) -> Result<i64> {
    if !curve.closed {
        return Err(Error::InvalidInput(format!("{} is not closed", curve.tag)));
    }
    let turns = to_f64(unwrapped_phase(psi, curve)?) / (2.0 * std::f64::consts::PI);
    let w = turns.round();
    // a phase that does not close (non-integer μ behind a cut) has no winding number
    if (turns - w).abs() > 1e-3 {
        return Err(Error::Inconclusive(format!("phase along {} accumulates {turns:.6} turns, not an integer", curve.tag)));
    }
    Ok(w as i64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanStatus {
    Ok,
    /// The curve meets the nodal set, so I(a) is not defined.
    Undefined,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub a: f64,
    pub value: Option<f64>,
    pub status: ScanStatus,
    pub message: Option<String>,
}

/// I(a) on the circle of radius `r0` in the plane z = 0 for each a.
pub fn circulation_scan_phi_a<T: Primitive>(n: usize, r0: T, a_grid: &[T], consts: &PhysicalConstants<T>) -> Result<Vec<ScanRow>> {
    if n < 2 {
        return Err(Error::InvalidQuantumNumbers(format!("the Φ_a family needs n > 1, got {n}")));
    }
    let curve = CurveSpec::circle([T::zero(); 3], r0, 256)?;
    Ok(a_grid
        .par_iter()
        .map(|&a| {
            let row = |value, status, message| ScanRow { a: to_f64(a), value, status, message };
            let r = phi_a_superposition(n, a, *consts).and_then(|wf| flow_circulation(&phi_a_flow(&wf), &curve));
            match r {
                Ok(v) => row(Some(to_f64(v)), ScanStatus::Ok, None),
                Err(Error::CurveHitsSingularSet { .. }) | Err(Error::NodeOnCurve { .. }) | Err(Error::NodeEncountered { .. }) => {
                    row(None, ScanStatus::Undefined, Some("curve meets the nodal set".into()))
                }
                Err(e) => row(None, ScanStatus::Error, Some(e.to_string())),
            }
        })
        .collect())
}

/// CSV with columns a, I_a, status. Undefined values are left empty.
pub fn scan_to_csv(rows: &[ScanRow]) -> String {
    let mut s = String::from("a,I_a,status\n");
    for r in rows {
        let v = r.value.map(|x| format!("{x:.16e}")).unwrap_or_default();
        let st = match r.status {
            ScanStatus::Ok => "ok",
            ScanStatus::Undefined => "undefined",
            ScanStatus::Error => "error",
        };
        s.push_str(&format!("{:.16e},{v},{st}\n", r.a));
    }
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub family: String,
    pub curve: String,
    pub circulation: Option<f64>,
    pub deviation: Option<f64>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    /// max |circulation − nearest integer| over rows without errors
    pub max_deviation: f64,
    pub failures: usize,
}

/// Circulation of every flow on every curve.
pub fn quantization_sweep<T: Primitive>(flows: &[FlowFields<T>], curves: &[CurveSpec<T>]) -> SweepReport {
    let jobs: Vec<(&FlowFields<T>, &CurveSpec<T>)> = flows.iter().flat_map(|f| curves.iter().map(move |c| (f, c))).collect();
    let rows: Vec<SweepRow> = jobs
        .par_iter()
        .map(|(f, c)| match flow_circulation(f, c) {
            Ok(v) => {
                let v = to_f64(v);
                SweepRow { family: f.tag.clone(), curve: c.tag.clone(), circulation: Some(v), deviation: Some((v - v.round()).abs()), error: None }
            }
            Err(e) => SweepRow { family: f.tag.clone(), curve: c.tag.clone(), circulation: None, deviation: None, error: Some(e.to_string()) },
        })
        .collect();
    let max_deviation = rows.iter().filter_map(|r| r.deviation).fold(0.0, f64::max);
    let failures = rows.iter().filter(|r| r.error.is_some()).count();
    SweepReport { rows, max_deviation, failures }
}

/// Horizontal circles about the z-axis for every (radius, height) pair.
pub fn coaxial_circles<T: Primitive>(radii: &[T], heights: &[T], samples: usize) -> Result<Vec<CurveSpec<T>>> {
    let mut out = Vec::new();
    for &z in heights {
        for &r in radii {
            out.push(CurveSpec::circle([T::zero(), T::zero(), z], r, samples)?);
        }
    }
    Ok(out)
}
