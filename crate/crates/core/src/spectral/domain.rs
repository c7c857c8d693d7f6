use super::polar::polar_nodes;
use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Primitive};
use crate::states::{PhysicalConstants, WaveFunction};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "snake_case")]
pub enum ScanIntegral {
    Finite(f64),
    Diverged,
}

impl ScanIntegral {
    pub fn is_finite(&self) -> bool {
        matches!(self, ScanIntegral::Finite(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainScanRow {
    pub r_in: f64,
    pub stencil: f64,
    pub h2: f64,
    pub x2: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DomainReport {
    pub tag: String,
    /// ∫|Δψ|² with a five-point Laplacian of spacing r_in/4.
    pub h2_proxy: ScanIntegral,
    /// ∫(x²+y²)²|ψ|².
    pub x2psi_norm: ScanIntegral,
    pub scan: Vec<DomainScanRow>,
}

pub const DOMAIN_SCAN: [f64; 3] = [1e-1, 1e-2, 1e-3];

fn verdict(v: &[f64]) -> ScanIntegral {
    let n = v.len();
    if !v[n - 1].is_finite() || v[n - 1] > 2.0 * v[n - 2] {
        ScanIntegral::Diverged
    } else {
        ScanIntegral::Finite(v[n - 1])
    }
}

/// Probes ∫|Δψ|² and ∫r⁴|ψ|² on r > r_in for shrinking r_in. The discrete
/// Laplacian sees jumps across a cut, so it grows like r_in⁻³ there.
pub fn domain_membership_heuristic<T: Primitive>(wf: &WaveFunction<T>, consts: PhysicalConstants<T>) -> Result<DomainReport> {
    if wf.dim != 2 {
        return Err(Error::InvalidInput(format!("{} is not planar", wf.tag)));
    }
    consts.validate()?;
    let l = consts.k_osc().sqrt().recip();
    let r_max = lit::<T>(12.0) * l;
    let two_pi = lit::<T>(2.0) * T::PI();
    let mut scan = Vec::new();
    for &rel in &DOMAIN_SCAN {
        let r_in = lit::<T>(rel) * l;
        let h = r_in / lit(4.0);
        let mut breaks = Vec::new();
        let mut r = r_in;
        while r < l {
            breaks.push(r);
            r = r * lit(4.0);
        }
        let mut r = l;
        while r < r_max {
            breaks.push(r);
            r += l;
        }
        breaks.push(r_max);
        let cut = wf.cut;
        let phis = move |r: T| {
            let mut b: Vec<T> = (0..=16).map(|j| two_pi * from_usize::<T>(j) / lit(16.0)).collect();
            if cut {
                let a = (h / r).min(T::one()).asin();
                b.push(a);
                b.push(two_pi - a);
                b.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
            }
            b
        };
        let nodes = polar_nodes(&breaks, &phis);
        let (mut h2, mut x2) = (T::zero(), T::zero());
        for nd in &nodes {
            let at = |dx: T, dy: T| wf.evaluate(&[nd.x + dx, nd.y + dy, T::zero()]);
            let c = at(T::zero(), T::zero())?;
            let lap = (at(h, T::zero())? + at(-h, T::zero())? + at(T::zero(), h)? + at(T::zero(), -h)? - c * lit::<T>(4.0)) / (h * h);
            h2 += nd.w * lap.norm_sqr();
            let r2 = nd.x * nd.x + nd.y * nd.y;
            x2 += nd.w * r2 * r2 * c.norm_sqr();
        }
        scan.push(DomainScanRow { r_in: to_f64(r_in), stencil: to_f64(h), h2: to_f64(h2), x2: to_f64(x2) });
    }
    let h2: Vec<f64> = scan.iter().map(|r| r.h2).collect();
    let x2: Vec<f64> = scan.iter().map(|r| r.x2).collect();
    Ok(DomainReport { tag: wf.tag.clone(), h2_proxy: verdict(&h2), x2psi_norm: verdict(&x2), scan })
}
