use super::{run_pairing, vector_job, PairingOptions};
use crate::error::{Error, Result};
use crate::numerics::grid::{Singular, SingularSet};
use crate::numerics::quad::{integrate_1d, QuadratureConfig};
use crate::numerics::testfn::{Profile, TestFunction, VectorTest};
use crate::scalar::{lit, to_f64, Primitive};
use crate::vec3::{self, V3};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaRow {
    pub eps: f64,
    pub pairing: f64,
    /// Pairing divided by φ_ε(center) (planar) or by ∫φ_ε along the line.
    pub coefficient: f64,
    pub quad_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaCoefficient {
    pub coefficient: f64,
    pub richardson_error: f64,
    /// Observed order of the ε-dependence, when measurable.
    pub order: Option<f64>,
    pub table: Vec<DeltaRow>,
}

fn mollifier<T: Primitive>(center: V3<T>, eps: T, dim: usize) -> TestFunction<T> {
    TestFunction::radial(center, eps, T::one(), Profile::Poly { k: 4 }, dim).tagged(&format!("delta-probe({})", to_f64(eps)))
}

/// Weight of the vorticity δ at `center`: limit of ⟨curl v, φ_ε⟩ with
/// φ_ε(center) = 1 over ε = ε₀ 2^{-k}, k < levels, Richardson-extrapolated.
/// In 3-D the singular set is the vertical line through `center` and the
/// pairing of the third component is divided by ∫φ_ε(center + z e_z) dz.
pub fn delta_coefficient_extract<T, F>(
    v: F,
    singular: &SingularSet<T>,
    center: V3<T>,
    dim: usize,
    eps0: T,
    levels: usize,
    opts: &PairingOptions<T>,
) -> Result<DeltaCoefficient>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    if levels < 3 || !(eps0 > T::zero()) || !(dim == 2 || dim == 3) {
        return Err(Error::InvalidInput("need dim 2 or 3, eps0 > 0 and at least 3 levels".into()));
    }
    let mut table = Vec::with_capacity(levels);
    let line_cfg = QuadratureConfig::<T>::with_tol(1e-15, 1e-13);
    for k in 0..levels {
        let eps = eps0 / lit::<T>(2f64.powi(k as i32));
        let phi = mollifier(center, eps, dim);
        let vt = VectorTest::vertical(phi.clone());
        let job = vector_job(singular, dim, &vt);
        let raw = if dim == 2 {
            let planar = |p: &V3<T>| v(p).map(|w| [w[0], w[1], T::zero()]);
            run_pairing(&job, &planar, &|p: &V3<T>| vt.jacobian(p), opts)?
        } else {
            run_pairing(&job, &v, &|p: &V3<T>| vt.jacobian(p), opts)?
        };
        let norm = if dim == 2 {
            phi.value(&center)
        } else {
            integrate_1d(|z: T| phi.value(&[center[0], center[1], center[2] + z]), -eps, eps, &line_cfg)?.value
        };
        let pairing = to_f64(raw.value[2]);
        table.push(DeltaRow {
            eps: to_f64(eps),
            pairing,
            coefficient: pairing / to_f64(norm),
            quad_error: to_f64(raw.quad_error + raw.truncation) / to_f64(norm).abs(),
        });
    }
    let c: Vec<f64> = table.iter().map(|r| r.coefficient).collect();
    let n = c.len();
    let qerr = table.iter().map(|r| r.quad_error).fold(0.0, f64::max);
    let noise = 10.0 * qerr + 1e-13 * c[n - 1].abs();
    let d_prev = (c[n - 2] - c[n - 3]).abs();
    let d_last = (c[n - 1] - c[n - 2]).abs();
    if d_last <= noise {
        return Ok(DeltaCoefficient { coefficient: c[n - 1], richardson_error: d_last + qerr, order: None, table });
    }
    // c(ε) ≈ c + Aε^p with p from the ratio of the last two differences
    let p = (d_prev / d_last).log2();
    if !(p > 0.5) {
        return Err(Error::NoConvergence(format!("delta pairings do not settle: last differences {d_prev:e}, {d_last:e}")));
    }
    let f = 2f64.powf(p) - 1.0;
    let extrap = c[n - 1] + (c[n - 1] - c[n - 2]) / f;
    let prev = c[n - 2] + (c[n - 2] - c[n - 3]) / f;
    Ok(DeltaCoefficient { coefficient: extrap, richardson_error: (extrap - prev).abs() + qerr, order: Some(p), table })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SupportGeometry {
    Point,
    Line,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum CurlVerdict {
    Irrotational,
    QuasiIrrotational { support: SupportGeometry },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub test: String,
    pub on_support: bool,
    pub magnitude: f64,
    pub quad_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuasiReport {
    pub verdict: CurlVerdict,
    pub tol: f64,
    pub off_support_max: f64,
    pub on_support_max: f64,
    pub rows: Vec<ProbeRow>,
}

fn geometry<T: Primitive>(singular: &SingularSet<T>, dim: usize) -> Option<SupportGeometry> {
    let items: Vec<&Singular<T>> = singular.items.iter().filter(|s| !matches!(s, Singular::PositiveXCut)).collect();
    match (items.as_slice(), dim) {
        ([Singular::Point { .. }], 2) => Some(SupportGeometry::Point),
        ([Singular::Point { planar: false, .. }], 3) => Some(SupportGeometry::Point),
        ([Singular::Point { planar: true, .. }], 3) | ([Singular::Line { .. }], 3) => Some(SupportGeometry::Line),
        _ => None,
    }
}

/// Off-support probes (balls clear of the set, all components) and
/// on-support probes (vertical balls centred on it) at length scale `s`.
pub fn default_probes<T: Primitive>(singular: &SingularSet<T>, dim: usize, s: T) -> Result<(Vec<VectorTest<T>>, Vec<VectorTest<T>>)> {
    let prof = Profile::Poly { k: 4 };
    let ball = |c: V3<T>, r: T| TestFunction::radial(c, r * s, T::one(), prof, dim);
    let at = |x: f64, y: f64, z: f64| [lit::<T>(x) * s, lit::<T>(y) * s, if dim == 3 { lit::<T>(z) * s } else { T::zero() }];
    let origin = match singular.items.iter().find(|i| !matches!(i, Singular::PositiveXCut)) {
        Some(Singular::Point { center, .. }) => *center,
        Some(Singular::Line { axis }) => [axis[0], axis[1], T::zero()],
        Some(_) => return Err(Error::Inconclusive("only point and line singular sets are supported".into())),
        None => [T::zero(); 3],
    };
    let shift = |p: V3<T>| vec3::add(origin, p);
    let off = [(1.5, 0.0, 0.0), (-1.0, 1.2, 0.7), (-1.0, -1.0, -1.0)]
        .into_iter()
        .map(|(x, y, z)| {
            let f = ball(shift(at(x, y, z)), lit(0.5));
            VectorTest::new([f.clone(), f.clone(), f], &format!("off({x},{y},{z})"))
        })
        .collect();
    let on = [(0.0, 1.0), (0.7, 0.6)]
        .into_iter()
        .map(|(z, r)| {
            let f = ball(shift(at(0.0, 0.0, z)), lit(r));
            let mut t = VectorTest::vertical(f);
            t.tag = format!("on(z={z},r={r})");
            t
        })
        .collect();
    Ok((off, on))
}

/// QuasiIrrotational when every off-support pairing is below `tol` and some
/// on-support pairing exceeds 100·tol; Irrotational when all are below `tol`.
pub fn quasi_irrotationality_report<T, F>(
    v: F,
    singular: &SingularSet<T>,
    dim: usize,
    off_support: &[VectorTest<T>],
    on_support: &[VectorTest<T>],
    tol: f64,
    opts: &PairingOptions<T>,
) -> Result<QuasiReport>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    let planar = |p: &V3<T>| v(p).map(|w| if dim == 2 { [w[0], w[1], T::zero()] } else { w });
    let mut rows = Vec::new();
    for (tests, on) in [(off_support, false), (on_support, true)] {
        for t in tests {
            let job = vector_job(singular, dim, t);
            let raw = run_pairing(&job, &planar, &|p: &V3<T>| t.jacobian(p), opts)?;
            rows.push(ProbeRow { test: t.tag.clone(), on_support: on, magnitude: to_f64(vec3::norm(raw.value)), quad_error: to_f64(raw.quad_error) });
        }
    }
    let max_of = |on: bool| rows.iter().filter(|r| r.on_support == on).map(|r| r.magnitude).fold(0.0, f64::max);
    let (off_max, on_max) = (max_of(false), max_of(true));
    let verdict = if off_max >= tol {
        return Err(Error::Inconclusive(format!("off-support pairing {off_max:e} exceeds tolerance {tol:e}")));
    } else if on_max < tol {
        CurlVerdict::Irrotational
    } else if on_max > 100.0 * tol {
        match geometry(singular, dim) {
            Some(support) => CurlVerdict::QuasiIrrotational { support },
            None => return Err(Error::Inconclusive("vorticity found but the singular set is not a single point or line".into())),
        }
    } else {
        return Err(Error::Inconclusive(format!("on-support pairing {on_max:e} is between tol and 100·tol")));
    };
    Ok(QuasiReport { verdict, tol, off_support_max: off_max, on_support_max: on_max, rows })
}
