use crate::distcurl::SyncCatch;
use crate::error::{Error, Result};
use crate::numerics::quad::{integrate, QuadratureConfig, Region};
use crate::numerics::testfn::VectorTest;
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::PhysicalConstants;
use crate::vec3::{self, V3};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BvpRow {
    pub test_tag: String,
    pub residual: f64,
    pub quad_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BvpReport {
    pub rows: Vec<BvpRow>,
    pub mass: f64,
    /// |∫ρ − 1|
    pub mass_defect: f64,
}

impl BvpReport {
    pub fn max_abs(&self) -> f64 {
        self.rows.iter().fold(0.0, |m, r| m.max(r.residual.abs()))
    }
}

pub const MASS_TOL: f64 = 1e-7;

/// ∫(u·φ + (ħ/2m) ln ρ ∇·φ) per test, for a candidate ρ with ∫ρ = 1.
pub fn osmotic_bvp_check<T, U, R>(u: U, rho: R, tests: &[VectorTest<T>], dim: usize, consts: PhysicalConstants<T>, cfg: &QuadratureConfig<T>) -> Result<BvpReport>
where
    T: Primitive,
    U: Fn(&V3<T>) -> Result<V3<T>> + Sync,
    R: Fn(&V3<T>) -> Result<T> + Sync,
{
    let whole = if dim == 3 { Region::space() } else { Region::plane() };
    let c = SyncCatch::new();
    let mass = integrate(|p: &V3<T>| c.or_zero(rho(p), T::zero()), &whole, cfg);
    let mass = to_f64(c.take(mass)??.value);
    if !mass.is_finite() || (mass - 1.0).abs() > MASS_TOL {
        return Err(Error::NonNormalizable { integral: mass });
    }
    let k = consts.hbar / (lit::<T>(2.0) * consts.mass);
    let mut rows = Vec::with_capacity(tests.len());
    for test in tests {
        let region = test.support_region(dim).ok_or_else(|| Error::InvalidInput(format!("test {} needs compact support", test.tag)))?;
        let c = SyncCatch::new();
        let e = integrate(
            |p: &V3<T>| {
                let phi = test.value(p);
                let div = test.divergence(p);
                if div == T::zero() && phi.iter().all(|x| *x == T::zero()) {
                    return T::zero();
                }
                let r = c.or_zero(rho(p), T::one());
                if !(r > T::zero()) {
                    c.or_zero::<T>(Err(Error::DensityVanishesOnSupport { at: vec3::to_f64(*p) }), T::zero());
                    return T::zero();
                }
                let uu = c.or_zero(u(p), [T::zero(); 3]);
                vec3::dot(uu, phi) + k * r.ln() * div
            },
            &region,
            cfg,
        );
        let e = c.take(e)??;
        rows.push(BvpRow { test_tag: test.tag.clone(), residual: to_f64(e.value), quad_error: to_f64(e.error) });
    }
    Ok(BvpReport { rows, mass, mass_defect: (mass - 1.0).abs() })
}
