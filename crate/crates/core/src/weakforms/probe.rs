use crate::distcurl::SyncCatch;
use crate::error::{Error, Result};
use crate::numerics::grid::{Singular, SingularSet};
use crate::numerics::quad::{integrate, QuadratureConfig, Region, RegionKind};
use crate::numerics::testfn::VectorTest;
use crate::scalar::{lit, to_f64, Primitive};
use crate::vec3::{self, V3};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct L2Probe {
    pub field: String,
    /// Exclusion radii, largest first; empty when the support avoids the singular set.
    pub radii: Vec<f64>,
    /// ∫|w|² over the support minus the excluded tube or disc.
    pub values: Vec<f64>,
    pub divergent: bool,
}

pub const PROBE_RADII: [f64; 3] = [1e-1, 1e-2, 1e-3];

fn axis_of<T: Primitive>(s: &Singular<T>, dim: usize) -> Option<V3<T>> {
    match (s, dim) {
        (Singular::Point { center, .. }, 2) | (Singular::Point { center, planar: true }, 3) => Some(*center),
        (Singular::Line { axis }, 3) => Some([axis[0], axis[1], T::zero()]),
        _ => None,
    }
}

/// ∫|w|² over the support of `test` with the singular set excised at radii
/// PROBE_RADII × support size. Divergent when the last decade contributes
/// more than half of the previous one (the log-divergent |w| ~ 1/d case)
/// or the integral more than doubles.
pub fn local_l2_probe<T, W>(w: W, field: &str, singular: &SingularSet<T>, test: &VectorTest<T>, dim: usize, cfg: &QuadratureConfig<T>) -> Result<L2Probe>
where
    T: Primitive,
    W: Fn(&V3<T>) -> Result<V3<T>> + Sync,
{
    let region = test.support_region(dim).ok_or_else(|| Error::InvalidInput(format!("test {} needs compact support", test.tag)))?;
    let (lo, hi) = test.support_box().ok_or_else(|| Error::InvalidInput(format!("test {} needs compact support", test.tag)))?;
    let center = vec3::scale(lit(0.5), vec3::add(lo, hi));
    let size = (0..dim).fold(T::zero(), |m, k| m.max(hi[k] - lo[k])) * lit(0.5);
    let reach = (0..dim).fold(T::zero(), |a, k| a + (hi[k] - lo[k]) * (hi[k] - lo[k])).sqrt() * lit(0.5);
    let items: Vec<Singular<T>> = singular
        .items
        .iter()
        .filter(|s| !matches!(s, Singular::PositiveXCut) && s.distance(&center) < reach)
        .cloned()
        .collect();
    let sq = |p: &V3<T>, c: &SyncCatch| {
        let v = c.or_zero(w(p), [T::zero(); 3]);
        vec3::dot(v, v)
    };
    if items.is_empty() {
        let c = SyncCatch::new();
        let e = integrate(|p: &V3<T>| sq(p, &c), &region, cfg);
        let val = to_f64(c.take(e)??.value);
        return Ok(L2Probe { field: field.into(), radii: vec![], values: vec![val], divergent: !val.is_finite() });
    }
    let ball = match &region.kind {
        RegionKind::Ball { center, radius, .. } => Some((*center, *radius)),
        _ => None,
    };
    let mut values = Vec::new();
    let mut radii = Vec::new();
    for rel in PROBE_RADII {
        let eps = lit::<T>(rel) * size;
        let c = SyncCatch::new();
        let e = match (items.as_slice(), ball) {
            ([one], Some((bc, br))) if axis_of(one, dim).is_some() => {
                let ax = axis_of(one, dim).expect("checked");
                integrate(|p: &V3<T>| sq(p, &c), &Region::axial_ball(ax, bc, br, eps, dim), cfg)
            }
            _ => integrate(|p: &V3<T>| if items.iter().any(|s| s.distance(p) < eps) { T::zero() } else { sq(p, &c) }, &region, cfg),
        };
        values.push(to_f64(c.take(e)??.value));
        radii.push(to_f64(eps));
    }
    let n = values.len();
    let (d1, d2) = (values[n - 2] - values[n - 3], values[n - 1] - values[n - 2]);
    let divergent = !values[n - 1].is_finite() || values[n - 1] > 2.0 * values[n - 2] || (d2 > 0.5 * d1 && d2 > 1e-9 * values[n - 1]);
    Ok(L2Probe { field: field.into(), radii, values, divergent })
}
