use crate::error::{Error, Result};
use crate::numerics::quad::{integrate_fallible, QuadratureConfig};
use crate::numerics::testfn::{Profile, TestFunction};
use crate::scalar::{lit, to_f64, Primitive};
use crate::states::{oscillator2d_nonquantized, oscillator2d_standard_with, Angular, Case, PhysicalConstants, QuantumLabels, WaveFunction};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DefectReport {
    pub variant: Angular,
    pub mu: f64,
    /// Angular mismatch across the cut: e^{2πiμ}−1, cos(2πμ)−1 or sin(2πμ).
    pub factor: Complex<f64>,
    /// ∫₀^∞ Φ(x,0) ξ(x,0) dx with Φ the normalized radial factor.
    pub line_integral: f64,
    pub defect: Complex<f64>,
    /// |defect| ≤ 1e-10·|line_integral|.
    pub weakly_differentiable: bool,
}

/// ξ(x, y) = bump(x − 2)·bump(y).
pub fn reference_defect_test<T: Primitive>() -> TestFunction<T> {
    TestFunction::product([lit(2.0), T::zero(), T::zero()], [T::one(); 3], T::one(), [Profile::Bump; 3], 2).tagged("xi-ref")
}

/// Boundary term of the weak y-derivative of a planar radial × angular
/// state across the cut {y = 0, x > 0}, paired with the reference ξ.
pub fn weak_derivative_defect<T: Primitive>(wf: &WaveFunction<T>) -> Result<DefectReport> {
    let (jump, _) = wf
        .angular_jump()
        .ok_or_else(|| Error::InvalidInput(format!("{} is not a planar radial × angular state", wf.tag)))?;
    let radial = wf.radial_profile().ok_or_else(|| Error::InvalidInput(format!("{} has no radial factor", wf.tag)))?;
    let xi = reference_defect_test::<T>();
    let cfg = QuadratureConfig::<T>::with_tol(1e-300, 1e-13);
    let e = integrate_fallible(
        |x: T| -> Result<(T, T)> {
            let w = xi.value(&[x, T::zero(), T::zero()]);
            if w == T::zero() {
                return Ok((T::zero(), T::zero()));
            }
            Ok((radial.eval(x)? * wf.normalization * w, T::zero()))
        },
        &[T::zero(), T::one(), lit(2.0), lit(3.0), T::infinity()],
        &cfg,
    )
    .map_err(|e| match e {
        Error::NonConvergent { .. } | Error::NonFinite { .. } => Error::LineIntegralDiverged,
        e => e,
    })?;
    let li = to_f64(e.value);
    if !li.is_finite() {
        return Err(Error::LineIntegralDiverged);
    }
    let factor = Complex::new(to_f64(jump.re), to_f64(jump.im));
    let defect = factor * li;
    Ok(DefectReport {
        variant: wf.labels.variant,
        mu: to_f64(wf.labels.mu),
        factor,
        line_integral: li,
        defect,
        weakly_differentiable: defect.norm() <= 1e-10 * li.abs(),
    })
}

/// Defect for the n = 0 planar state with angular factor `variant` and μ > 0:
/// the standard family for integer μ, the L-case otherwise.
pub fn defect_for<T: Primitive>(variant: Angular, mu: T, consts: PhysicalConstants<T>) -> Result<DefectReport> {
    let (wf, _) = if crate::states::labels::is_integer(mu) {
        oscillator2d_standard_with(0, mu, variant, consts)?
    } else {
        oscillator2d_nonquantized(Case::L, QuantumLabels::case_l(0, mu).with_variant(variant), consts)?
    };
    weak_derivative_defect(&wf)
}
