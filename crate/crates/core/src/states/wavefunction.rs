use super::constants::PhysicalConstants;
use super::labels::{Angular, Branch, Family, QuantumLabels};
use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::numerics::grid::SingularSet;
use crate::numerics::quad::{integrate_1d, integrate_breaks, integrate_nested, Estimate, QuadratureConfig};
use crate::numerics::taylor::{taylor, Taylor};
use crate::scalar::{from_usize, lit, Primitive, Real};
use crate::specfun::{laguerre_unchecked, legendre_assoc, legendre_assoc_cs, tricomi_u_s};
use crate::vec3::V3;
use num_complex::Complex;
use std::sync::Arc;

pub type CustomPsi<T> = Arc<dyn Fn(&V3<T>) -> Complex<T> + Send + Sync>;

/// Radial factor of the planar oscillator families as a function of ρ²:
/// (ρ²)^{p/2} F(kρ²) e^{−kρ²/2}.
/// Beyond this argument e^{−x/2} underflows and the polynomial factor may overflow.
fn underflow<T: Primitive>() -> T {
    lit(1400.0)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RadialProfile<T> {
    /// F = L_n^μ, power μ.
    Laguerre { n: usize, mu: T, k: T },
    /// F = U(a, μ+1; ·), power μ.
    Tricomi { a: T, mu: T, k: T },
}

impl<T: Primitive> RadialProfile<T> {
    pub fn eval_s<S: Real<Prim = T>>(&self, rho2: S) -> Result<S> {
        let half = lit::<S>(0.5);
        let pw = |mu: T| if mu == T::zero() { S::one() } else { rho2.powf(S::from_prim(mu) * half) };
        match *self {
            RadialProfile::Laguerre { n, mu, k } => {
                let x = rho2 * S::from_prim(k);
                if x.prim() > underflow::<T>() {
                    return Ok(S::zero());
                }
                let f = laguerre_unchecked(n, mu, x);
                Ok(pw(mu) * f * (-x * half).exp())
            }
            RadialProfile::Tricomi { a, mu, k } => {
                let x = rho2 * S::from_prim(k);
                if x.prim() > underflow::<T>() {
                    return Ok(S::zero());
                }
                let f = tricomi_u_s(a, mu + T::one(), x)?;
                Ok(pw(mu) * f * (-x * half).exp())
            }
        }
    }

    /// R(ρ) for ρ > 0.
    pub fn eval(&self, rho: T) -> Result<T> {
        self.eval_s(rho * rho)
    }

    pub fn mu(&self) -> T {
        match *self {
            RadialProfile::Laguerre { mu, .. } | RadialProfile::Tricomi { mu, .. } => mu,
        }
    }

    pub fn k(&self) -> T {
        match *self {
            RadialProfile::Laguerre { k, .. } | RadialProfile::Tricomi { k, .. } => k,
        }
    }
}

#[derive(Clone)]
pub(crate) enum Shape<T: Primitive> {
    Osc2d { radial: RadialProfile<T>, mu_phase: T, variant: Angular },
    Hydrogen { n: usize, l: usize, m: i32, a0: T },
    PhiA { n: usize, a: T, a0: T },
    Gaussian { dim: usize, alpha: T, center: V3<T>, k: V3<T> },
    Custom { f: CustomPsi<T>, peak: T },
}

/// A complex scalar field with analytic evaluators and a numerically
/// determined normalization.
#[derive(Clone)]
pub struct WaveFunction<T: Primitive> {
    pub labels: QuantumLabels<T>,
    pub consts: PhysicalConstants<T>,
    pub dim: usize,
    /// Singular and nodal sets of the phase.
    pub singular: SingularSet<T>,
    /// Whether the domain excludes the cut {y = 0, x ≥ 0}.
    pub cut: bool,
    /// A = ∫|ψ_raw|².
    pub norm_integral: T,
    /// 1/√A.
    pub normalization: T,
    pub tag: String,
    peak: T,
    pub(crate) shape: Shape<T>,
}

impl<T: Primitive> std::fmt::Debug for WaveFunction<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WaveFunction")
            .field("tag", &self.tag)
            .field("labels", &self.labels)
            .field("dim", &self.dim)
            .field("norm_integral", &self.norm_integral)
            .finish()
    }
}

pub(crate) fn norm_cfg<T: Primitive>() -> QuadratureConfig<T> {
    QuadratureConfig { max_subdivisions: 2000, ..QuadratureConfig::with_tol(1e-300, 1e-12) }
}

/// ∫₀^∞ f(r) dr. The inner part is taken on a log scale down to
/// r = e^{-40}·scale, below which f is extrapolated as a power law.
pub fn radial_integral<T: Primitive, F: Fn(T) -> T + Sync>(f: F, scale: T, cfg: &QuadratureConfig<T>) -> Result<Estimate<T, T>> {
    let g = |t: T| {
        let r = t.exp();
        f(r) * r
    };
    let hi = scale.ln();
    let lo = hi - lit(40.0);
    let (g0, g1) = (g(lo), g(lo + T::one()));
    let tail = if g0 == T::zero() {
        T::zero()
    } else {
        let slope = (g1 / g0).ln();
        if !(slope > lit(1e-3)) || !slope.is_finite() {
            return Err(Error::NormalizationDiverged);
        }
        g0 / slope
    };
    let inner = integrate_1d(g, lo, hi, cfg)?;
    let outer = integrate_breaks(&f, &[scale, scale * lit(4.0), T::infinity()], cfg)?;
    Ok(Estimate {
        value: tail + inner.value + outer.value,
        error: inner.error + outer.error + tail.abs() * lit(1e-8),
        evaluations: inner.evaluations + outer.evaluations + 2,
    })
}

fn phi_0_2pi<S: Real>(y: S, x: S) -> S {
    let phi = y.atan2(x);
    if phi < S::zero() {
        phi + S::PI() * lit::<S>(2.0)
    } else {
        phi
    }
}

impl<T: Primitive> WaveFunction<T> {
    pub(crate) fn build(
        labels: QuantumLabels<T>,
        consts: PhysicalConstants<T>,
        dim: usize,
        singular: SingularSet<T>,
        cut: bool,
        shape: Shape<T>,
        tag: String,
    ) -> Result<Self> {
        let mut wf = WaveFunction {
            labels,
            consts,
            dim,
            singular,
            cut,
            norm_integral: T::one(),
            normalization: T::one(),
            tag,
            peak: T::one(),
            shape,
        };
        let a = wf.compute_norm_integral()?;
        if !(a.is_finite() && a > T::zero()) {
            return Err(Error::NormalizationDiverged);
        }
        wf.norm_integral = a;
        wf.normalization = a.sqrt().recip();
        wf.peak = wf.compute_peak()? * wf.normalization;
        Ok(wf)
    }

    /// Wrap an arbitrary evaluator; derivatives then come from finite differences.
    pub fn custom(f: CustomPsi<T>, dim: usize, consts: PhysicalConstants<T>, singular: SingularSet<T>, peak: T, tag: &str) -> Self {
        WaveFunction {
            labels: QuantumLabels::custom(),
            consts,
            dim,
            singular,
            cut: false,
            norm_integral: T::one(),
            normalization: T::one(),
            tag: tag.into(),
            peak,
            shape: Shape::Custom { f, peak },
        }
    }

    pub fn has_analytic(&self) -> bool {
        !matches!(self.shape, Shape::Custom { .. })
    }

    pub fn is_stationary(&self) -> bool {
        true
    }

    pub fn energy(&self) -> Option<T> {
        self.labels.energy
    }

    /// Approximate max |ψ| (normalized), used for the relative node threshold.
    pub fn peak_abs(&self) -> T {
        self.peak
    }

    pub fn radial_profile(&self) -> Option<RadialProfile<T>> {
        match &self.shape {
            Shape::Osc2d { radial, .. } => Some(*radial),
            _ => None,
        }
    }

    /// Unnormalized ψ for any scalar type.
    pub(crate) fn raw_s<S: Real<Prim = T>>(&self, p: &[S; 3]) -> Result<Complex<S>> {
        match &self.shape {
            Shape::Osc2d { radial, mu_phase, variant } => {
                let rho2 = p[0] * p[0] + p[1] * p[1];
                let r = radial.eval_s(rho2)?;
                let phi = phi_0_2pi(p[1], p[0]);
                let arg = phi * S::from_prim(*mu_phase);
                Ok(match variant {
                    Angular::Exp => Complex::new(r * arg.cos(), r * arg.sin()),
                    Angular::Cos => Complex::new(r * arg.cos(), S::zero()),
                    Angular::Sin => Complex::new(r * arg.sin(), S::zero()),
                })
            }
            Shape::Hydrogen { n, l, m, a0 } => {
                let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                let lam = r * S::from_prim(lit::<T>(2.0) / (from_usize::<T>(*n) * *a0));
                if lam.prim() > underflow::<T>() {
                    return Ok(Complex::new(S::zero(), S::zero()));
                }
                let rad = lam.powi(*l as i32) * laguerre_unchecked(n - l - 1, from_usize::<T>(2 * l + 1), lam) * (-lam * lit::<S>(0.5)).exp();
                let (t, st) = if r.prim() == T::zero() {
                    (S::zero(), S::one())
                } else {
                    (p[2] / r, (p[0] * p[0] + p[1] * p[1]).sqrt() / r)
                };
                let pl = legendre_assoc_cs(*l, m.abs(), t, st)?;
                let amp = rad * pl;
                if *m == 0 {
                    return Ok(Complex::new(amp, S::zero()));
                }
                let arg = p[1].atan2(p[0]) * lit::<S>(*m as f64);
                Ok(Complex::new(amp * arg.cos(), amp * arg.sin()))
            }
            Shape::PhiA { n, a, a0 } => {
                // [(1−a)Y₁⁻¹ + (1+a)Y₁¹] ∝ −(a x + i y)/r; R_{n1}/r ∝ L_{n−2}^3(λ) e^{−λ/2}
                let r = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
                let lam = r * S::from_prim(lit::<T>(2.0) / (from_usize::<T>(*n) * *a0));
                if lam.prim() > underflow::<T>() {
                    return Ok(Complex::new(S::zero(), S::zero()));
                }
                let rad = laguerre_unchecked(n - 2, lit(3.0), lam) * (-lam * lit::<S>(0.5)).exp();
                Ok(Complex::new(-rad * S::from_prim(*a) * p[0], -rad * p[1]))
            }
            Shape::Gaussian { dim, alpha, center, k } => {
                let mut r2 = S::zero();
                let mut ph = S::zero();
                for i in 0..*dim {
                    let d = p[i] - S::from_prim(center[i]);
                    r2 += d * d;
                    ph += S::from_prim(k[i]) * p[i];
                }
                let g = (-S::from_prim(*alpha) * r2).exp();
                Ok(Complex::new(g * ph.cos(), g * ph.sin()))
            }
            Shape::Custom { .. } => Err(Error::InvalidInput("custom wave functions have no generic evaluator".into())),
        }
    }

    /// Normalized ψ for any scalar type.
    pub fn psi_s<S: Real<Prim = T>>(&self, p: &[S; 3]) -> Result<Complex<S>> {
        Ok(self.raw_s(p)? * S::from_prim(self.normalization))
    }

    /// ψ(p).
    pub fn evaluate(&self, p: &V3<T>) -> Result<Complex<T>> {
        match &self.shape {
            Shape::Custom { f, .. } => Ok(f(p)),
            _ => self.psi_s(p),
        }
    }

    /// ψ(p) e^{−iEt/ħ}.
    pub fn evaluate_t(&self, p: &V3<T>, t: T) -> Result<Complex<T>> {
        let v = self.evaluate(p)?;
        Ok(match self.labels.energy {
            Some(e) => v * Complex::from_polar(T::one(), -e * t / self.consts.hbar),
            None => v,
        })
    }

    pub fn density(&self, p: &V3<T>) -> Result<T> {
        Ok(self.evaluate(p)?.norm_sqr())
    }

    /// Analytic ∇ψ; `None` for custom evaluators.
    pub fn gradient(&self, p: &V3<T>) -> Option<Result<[Complex<T>; 3]>> {
        if !self.has_analytic() {
            return None;
        }
        let mut g = [Complex::new(T::zero(), T::zero()); 3];
        for (i, gi) in g.iter_mut().enumerate().take(self.dim) {
            let q: [Jet<T>; 3] = [0, 1, 2].map(|k| Jet::var(p[k], if k == i { T::one() } else { T::zero() }));
            match self.psi_s(&q) {
                Ok(c) => *gi = Complex::new(c.re.deriv(1), c.im.deriv(1)),
                Err(e) => return Some(Err(e)),
            }
        }
        Some(Ok(g))
    }

    /// Taylor data of the phase θ = arg ψ and of σ = ln|ψ|.
    pub fn phase_amp_taylor(&self, p: &V3<T>) -> Result<[Taylor<T>; 2]> {
        use num_traits::Float as _;
        let at = crate::vec3::to_f64(*p);
        taylor(self.dim, p, |q: &[Jet<T>; 3]| {
            let c = self.psi_s(q)?;
            let m2 = c.re * c.re + c.im * c.im;
            if m2.value() == T::zero() {
                return Err(Error::NodeEncountered { at });
            }
            Ok([c.im.atan2(c.re), m2.ln() * lit::<Jet<T>>(0.5)])
        })
    }

    fn compute_norm_integral(&self) -> Result<T> {
        let cfg = norm_cfg::<T>();
        let two_pi = T::PI() * lit(2.0);
        let fail = |_| Error::NormalizationDiverged;
        match &self.shape {
            Shape::Osc2d { radial, mu_phase, variant } => {
                let scale = radial.k().sqrt().recip();
                let rad = radial_integral(
                    |r: T| match radial.eval(r) {
                        Ok(v) => v * v * r,
                        Err(_) => T::nan(),
                    },
                    scale,
                    &cfg,
                )
                .map_err(fail)?;
                let ang = integrate_1d(
                    |phi: T| {
                        let a = phi * *mu_phase;
                        match variant {
                            Angular::Exp => T::one(),
                            Angular::Cos => a.cos() * a.cos(),
                            Angular::Sin => a.sin() * a.sin(),
                        }
                    },
                    T::zero(),
                    two_pi,
                    &cfg,
                )?;
                Ok(rad.value * ang.value)
            }
            Shape::Hydrogen { n, l, m, a0 } => {
                let c = lit::<T>(2.0) / (from_usize::<T>(*n) * *a0);
                let rad = radial_integral(
                    |r: T| {
                        let lam = r * c;
                        let f = lam.powi(*l as i32) * laguerre_unchecked(n - l - 1, from_usize::<T>(2 * l + 1), lam) * (-lam * lit::<T>(0.5)).exp();
                        f * f * r * r
                    },
                    *a0,
                    &cfg,
                )
                .map_err(fail)?;
                let ang = integrate_1d(
                    |th: T| {
                        let pl = legendre_assoc(*l, m.abs(), th.cos()).unwrap_or(T::nan());
                        pl * pl * th.sin()
                    },
                    T::zero(),
                    T::PI(),
                    &cfg,
                )?;
                Ok(rad.value * ang.value * two_pi)
            }
            Shape::PhiA { n, a, a0 } => {
                let c = lit::<T>(2.0) / (from_usize::<T>(*n) * *a0);
                let rad = radial_integral(
                    |r: T| {
                        let lam = r * c;
                        let f = laguerre_unchecked(n - 2, lit(3.0), lam) * (-lam * lit::<T>(0.5)).exp();
                        f * f * r.powi(4)
                    },
                    *a0,
                    &cfg,
                )
                .map_err(fail)?;
                let a2 = *a * *a;
                let ang = integrate_nested(
                    |q: &[T; 3]| {
                        let (st, (sp, cp)) = (q[0].sin(), q[1].sin_cos());
                        (a2 * cp * cp + sp * sp) * st * st * st
                    },
                    2,
                    |lev, _| if lev == 0 { vec![T::zero(), T::PI()] } else { vec![T::zero(), two_pi] },
                    &cfg,
                )?;
                Ok(rad.value * ang.value)
            }
            Shape::Gaussian { dim, alpha, .. } => {
                let one = integrate_1d(|x: T| (-lit::<T>(2.0) * *alpha * x * x).exp(), T::neg_infinity(), T::infinity(), &cfg)?;
                Ok(one.value.powi(*dim as i32))
            }
            Shape::Custom { .. } => Ok(T::one()),
        }
    }

    fn compute_peak(&self) -> Result<T> {
        let samples = 400;
        let sample_max = |f: &dyn Fn(T) -> Result<T>, lo: T, hi: T| -> Result<T> {
            let mut m = T::zero();
            for i in 0..=samples {
                let r = lo + (hi - lo) * from_usize::<T>(i) / from_usize::<T>(samples);
                let v = f(r)?.abs();
                if v.is_finite() {
                    m = m.max(v);
                }
            }
            Ok(m)
        };
        match &self.shape {
            Shape::Osc2d { radial, .. } => {
                let s = radial.k().sqrt().recip();
                sample_max(&|r| radial.eval(r), s * lit(0.01), s * lit(8.0))
            }
            Shape::Hydrogen { n, a0, .. } | Shape::PhiA { n, a0, .. } => {
                let hi = *a0 * from_usize::<T>(6 * n * n);
                let mut best = T::zero();
                // radial sweep in a few directions covers the angular maximum well enough for a scale
                for &(st, ct) in &[(T::one(), T::zero()), (lit(std::f64::consts::FRAC_1_SQRT_2), lit(std::f64::consts::FRAC_1_SQRT_2)), (T::zero(), T::one()), (lit(0.5), lit(0.866))] {
                    let f = |r: T| Ok(self.raw_s(&[r * st, T::zero(), r * ct])?.norm().max(self.raw_s(&[T::zero(), r * st, r * ct])?.norm()));
                    best = best.max(sample_max(&f, T::zero(), hi)?);
                }
                Ok(best)
            }
            Shape::Gaussian { .. } => Ok(T::one()),
            Shape::Custom { peak, .. } => Ok(*peak),
        }
    }

    /// Closed-form drift velocity of the family, when one is known.
    pub fn closed_form_v(&self, p: &V3<T>) -> Option<V3<T>> {
        let c = self.consts.hm();
        let z = T::zero();
        match &self.shape {
            Shape::Osc2d { mu_phase, variant, .. } => {
                if *variant != Angular::Exp {
                    return Some([z; 3]);
                }
                let r2 = p[0] * p[0] + p[1] * p[1];
                let s = c * *mu_phase / r2;
                Some([-s * p[1], s * p[0], z])
            }
            Shape::Hydrogen { m, .. } => {
                let r2 = p[0] * p[0] + p[1] * p[1];
                let s = c * lit::<T>(*m as f64) / r2;
                Some([-s * p[1], s * p[0], z])
            }
            Shape::PhiA { a, .. } => {
                let d = *a * *a * p[0] * p[0] + p[1] * p[1];
                let s = c * *a / d;
                Some([-s * p[1], s * p[0], z])
            }
            Shape::Gaussian { k, .. } => Some([c * k[0], c * k[1], c * k[2]]),
            Shape::Custom { .. } => None,
        }
    }

    /// Left/right mismatch Φ(2π⁻) − Φ(0⁺) of the angular factor and of its
    /// φ-derivative (planar families).
    pub fn angular_jump(&self) -> Option<(Complex<T>, Complex<T>)> {
        match &self.shape {
            Shape::Osc2d { mu_phase, variant, .. } => {
                use crate::scalar::{cos_pi, sin_pi};
                let mu = *mu_phase;
                let two = lit::<T>(2.0);
                let (c, s) = (cos_pi(two * mu), sin_pi(two * mu));
                let one = T::one();
                let z = T::zero();
                Some(match variant {
                    // e^{iμφ}: value jump e^{2πiμ} − 1, derivative jump iμ(e^{2πiμ} − 1)
                    Angular::Exp => {
                        let j = Complex::new(c - one, s);
                        (j, Complex::new(z, mu) * j)
                    }
                    Angular::Cos => (Complex::new(c - one, z), Complex::new(-mu * s, z)),
                    Angular::Sin => (Complex::new(s, z), Complex::new(mu * (c - one), z)),
                })
            }
            _ => None,
        }
    }

    /// Family drift sign (planar families).
    pub fn branch(&self) -> Branch {
        self.labels.branch
    }

    pub fn family(&self) -> Family {
        self.labels.family
    }
}
