use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Primitive};
use crate::states::PhysicalConstants;
use num_complex::Complex;
use rustfft::{FftNum, FftPlanner};
use serde::{Deserialize, Serialize};

/// Samples on the periodic grid x_j = x_min + j·dx, dx = (x_max − x_min)/n.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Grid1DState<T> {
    pub x_min: T,
    pub x_max: T,
    pub samples: Vec<Complex<T>>,
    pub time: T,
}

impl<T: Primitive> Grid1DState<T> {
    pub fn sample<F: Fn(T) -> Complex<T>>(x_min: T, x_max: T, n: usize, f: F) -> Result<Self> {
        if !n.is_power_of_two() || n < 8 || !(x_max > x_min) {
            return Err(Error::InvalidInput("grid needs a power-of-two point count and x_max > x_min".into()));
        }
        let dx = (x_max - x_min) / from_usize::<T>(n);
        let samples = (0..n).map(|j| f(x_min + from_usize::<T>(j) * dx)).collect();
        Ok(Grid1DState { x_min, x_max, samples, time: T::zero() })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn dx(&self) -> T {
        (self.x_max - self.x_min) / from_usize::<T>(self.len())
    }

    pub fn x(&self, j: usize) -> T {
        self.x_min + from_usize::<T>(j) * self.dx()
    }

    pub fn density(&self) -> Vec<T> {
        self.samples.iter().map(|z| z.norm_sqr()).collect()
    }

    /// Σ|ψ_j|² dx
    pub fn norm_sqr(&self) -> T {
        self.density().into_iter().fold(T::zero(), |a, b| a + b) * self.dx()
    }

    pub fn normalized(mut self) -> Self {
        let s = self.norm_sqr().sqrt().recip();
        for z in &mut self.samples {
            *z = *z * s;
        }
        self
    }

    /// ⟨x⟩ and ⟨x²⟩ − ⟨x⟩² of the density.
    pub fn moments(&self) -> (T, T) {
        let n = self.norm_sqr();
        let dx = self.dx();
        let (mut m1, mut m2) = (T::zero(), T::zero());
        for (j, z) in self.samples.iter().enumerate() {
            let x = self.x(j);
            let w = z.norm_sqr() * dx;
            m1 += w * x;
            m2 += w * x * x;
        }
        let mean = m1 / n;
        (mean, m2 / n - mean * mean)
    }

    /// Largest |ψ| over the outer 1/64 of the grid on each side, relative to the peak.
    pub fn boundary_ratio(&self) -> T {
        let n = self.len();
        let edge = (n / 64).max(1);
        let peak = self.samples.iter().fold(T::zero(), |m, z| m.max(z.norm()));
        let b = self.samples[..edge].iter().chain(&self.samples[n - edge..]).fold(T::zero(), |m, z| m.max(z.norm()));
        if peak > T::zero() {
            b / peak
        } else {
            T::zero()
        }
    }

    /// L¹ distance of the two densities.
    pub fn density_l1(&self, o: &Self) -> T {
        self.samples.iter().zip(&o.samples).map(|(a, b)| (a.norm_sqr() - b.norm_sqr()).abs()).fold(T::zero(), |a, b| a + b) * self.dx()
    }
}

fn wavenumbers<T: Primitive>(n: usize, length: T) -> Vec<T> {
    let dk = lit::<T>(2.0) * T::PI() / length;
    (0..n).map(|j| if j < n / 2 { from_usize::<T>(j) } else { -from_usize::<T>(n - j) } * dk).collect()
}

/// Fraction of Σ|ψ̂|² carried by |k| above half the Nyquist wavenumber.
pub fn spectral_tail<T: Primitive + FftNum>(s: &Grid1DState<T>) -> T {
    let n = s.len();
    let mut buf = s.samples.clone();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);
    let total = buf.iter().fold(T::zero(), |a, z| a + z.norm_sqr());
    let tail = buf[n / 4..n - n / 4].iter().fold(T::zero(), |a, z| a + z.norm_sqr());
    if total > T::zero() {
        tail / total
    } else {
        T::zero()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitStepOptions<T> {
    pub norm_tol: T,
    pub boundary_tol: T,
    pub tail_tol: T,
    /// Keep every k-th step (the initial and final states are always kept).
    pub record_every: usize,
}

impl<T: Primitive> Default for SplitStepOptions<T> {
    fn default() -> Self {
        SplitStepOptions { norm_tol: lit(1e-10), boundary_tol: lit(1e-10), tail_tol: lit(1e-10), record_every: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trajectory<T> {
    pub frames: Vec<Grid1DState<T>>,
    pub norm_drift: T,
}

impl<T: Primitive> Trajectory<T> {
    pub fn last(&self) -> &Grid1DState<T> {
        self.frames.last().expect("trajectory holds the initial state")
    }
}

/// Strang splitting e^{−iVdt/2ħ} e^{−iTdt/ħ} e^{−iVdt/2ħ} with the kinetic
/// step diagonal in Fourier space.
pub fn split_step_evolve_1d<T, V>(
    psi0: &Grid1DState<T>,
    potential: V,
    dt: T,
    steps: usize,
    consts: PhysicalConstants<T>,
    opts: &SplitStepOptions<T>,
) -> Result<Trajectory<T>>
where
    T: Primitive + FftNum,
    V: Fn(T) -> T,
{
    consts.validate()?;
    let n = psi0.len();
    let tail = spectral_tail(psi0);
    if tail > opts.tail_tol {
        return Err(Error::Underresolved { tail: to_f64(tail) });
    }
    let check_boundary = |s: &Grid1DState<T>| -> Result<()> {
        let b = s.boundary_ratio();
        if b > opts.boundary_tol {
            return Err(Error::BoundaryContamination { ratio: to_f64(b) });
        }
        Ok(())
    };
    check_boundary(psi0)?;
    let hbar = consts.hbar;
    let half = lit::<T>(0.5);
    let vhalf: Vec<Complex<T>> = (0..n).map(|j| Complex::from_polar(T::one(), -potential(psi0.x(j)) * dt * half / hbar)).collect();
    let inv_n = from_usize::<T>(n).recip();
    let kin: Vec<Complex<T>> = wavenumbers(n, psi0.x_max - psi0.x_min)
        .into_iter()
        .map(|k| Complex::from_polar(inv_n, -hbar * k * k * dt * half / consts.mass))
        .collect();
    let mut planner = FftPlanner::new();
    let fwd = planner.plan_fft_forward(n);
    let inv = planner.plan_fft_inverse(n);
    let n0 = psi0.norm_sqr();
    let mut cur = psi0.clone();
    let mut frames = vec![psi0.clone()];
    let every = opts.record_every.max(1);
    for step in 1..=steps {
        let buf = &mut cur.samples;
        for (z, p) in buf.iter_mut().zip(&vhalf) {
            *z = *z * p;
        }
        fwd.process(buf);
        for (z, p) in buf.iter_mut().zip(&kin) {
            *z = *z * p;
        }
        inv.process(buf);
        for (z, p) in buf.iter_mut().zip(&vhalf) {
            *z = *z * p;
        }
        cur.time = psi0.time + from_usize::<T>(step) * dt;
        if step % every == 0 || step == steps {
            check_boundary(&cur)?;
            frames.push(cur.clone());
        }
    }
    let drift = (cur.norm_sqr() - n0).abs() / n0;
    if drift > opts.norm_tol {
        return Err(Error::NormDrift { drift: to_f64(drift) });
    }
    Ok(Trajectory { frames, norm_drift: drift })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallstromConfig {
    pub separation: f64,
    pub width: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub points: usize,
    pub dt: f64,
    pub t_end: f64,
    pub record_every: usize,
    pub t_pre: f64,
    pub t_post: f64,
}

impl Default for WallstromConfig {
    fn default() -> Self {
        WallstromConfig { separation: 10.0, width: 1.0, x_min: -40.0, x_max: 40.0, points: 4096, dt: 0.01, t_end: 4.5, record_every: 10, t_pre: 0.5, t_post: 4.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallstromRow {
    pub t: f64,
    pub l1_distance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WallstromReport {
    pub config: WallstromConfig,
    /// L¹ distance of the initial densities.
    pub initial_distance: f64,
    pub pre_merge_distance: f64,
    pub post_merge_distance: f64,
    pub rows: Vec<WallstromRow>,
}

/// Two free runs from g(x − d/2) + e^{iθ} g(x + d/2) with θ = 0 and θ = π:
/// equal initial densities and vanishing initial velocity, different futures.
pub fn wallstrom_demo(cfg: &WallstromConfig, consts: PhysicalConstants<f64>) -> Result<WallstromReport> {
    if !(cfg.dt > 0.0 && cfg.t_end > 0.0 && cfg.t_pre <= cfg.t_end && cfg.t_post <= cfg.t_end) {
        return Err(Error::InvalidInput("wallstrom-demo needs dt, t_end > 0 and probe times inside the run".into()));
    }
    let c = cfg.separation / 2.0;
    let g = |x: f64| (-(x * x) / (2.0 * cfg.width * cfg.width)).exp();
    let run = |sign: f64| -> Result<Trajectory<f64>> {
        let s = Grid1DState::sample(cfg.x_min, cfg.x_max, cfg.points, |x| Complex::new(g(x - c) + sign * g(x + c), 0.0))?.normalized();
        let steps = (cfg.t_end / cfg.dt).round() as usize;
        split_step_evolve_1d(&s, |_| 0.0, cfg.dt, steps, consts, &SplitStepOptions { record_every: cfg.record_every.max(1), ..Default::default() })
    };
    let (a, b) = (run(1.0)?, run(-1.0)?);
    let rows: Vec<WallstromRow> = a.frames.iter().zip(&b.frames).map(|(x, y)| WallstromRow { t: x.time, l1_distance: x.density_l1(y) }).collect();
    let at = |t: f64| {
        rows.iter()
            .min_by(|p, q| (p.t - t).abs().total_cmp(&(q.t - t).abs()))
            .map(|r| r.l1_distance)
            .unwrap_or(f64::NAN)
    };
    Ok(WallstromReport { config: *cfg, initial_distance: rows[0].l1_distance, pre_merge_distance: at(cfg.t_pre), post_merge_distance: at(cfg.t_post), rows })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub dts: Vec<f64>,
    pub errors: Vec<f64>,
    /// log₂ of successive error ratios (dt halves each level).
    pub slopes: Vec<f64>,
}

/// Density error of the harmonic coherent state (displacement x0, ħ = m = ω = 1)
/// against the exact rigidly oscillating Gaussian at t_end, for dt₀·2^{-k}.
pub fn coherent_state_order(x0: f64, t_end: f64, dt0: f64, levels: usize) -> Result<OrderCheck> {
    let consts = PhysicalConstants::<f64>::natural();
    let pi4 = std::f64::consts::PI.powf(-0.25);
    let s0 = Grid1DState::sample(-20.0, 20.0, 1024, |x| Complex::new(pi4 * (-(x - x0) * (x - x0) / 2.0).exp(), 0.0))?;
    let q = x0 * t_end.cos();
    let exact = |x: f64| std::f64::consts::PI.powf(-0.5) * (-(x - q) * (x - q)).exp();
    let mut dts = Vec::new();
    let mut errors = Vec::new();
    for k in 0..levels {
        let dt = dt0 / 2f64.powi(k as i32);
        let steps = (t_end / dt).round() as usize;
        let tr = split_step_evolve_1d(&s0, |x| 0.5 * x * x, dt, steps, consts, &SplitStepOptions { record_every: steps.max(1), ..Default::default() })?;
        let last = tr.last();
        let err = last.samples.iter().enumerate().map(|(j, z)| (z.norm_sqr() - exact(last.x(j))).abs()).sum::<f64>() * last.dx();
        dts.push(dt);
        errors.push(err);
    }
    let slopes = errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect();
    Ok(OrderCheck { dts, errors, slopes })
}
