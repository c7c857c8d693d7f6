//! Confluent hypergeometric functions M = ₁F₁ and Tricomi U for real parameters.

use super::gamma::{gamma, ln_gamma, pochhammer, rgamma};
use crate::error::{Error, Result};
use crate::numerics::quad::{integrate_breaks, QuadratureConfig};
use crate::scalar::{lit, to_f64, Primitive, Real};
use num_traits::Float;
use serde::{Deserialize, Serialize};

const SERIES_CAP: usize = 10_000;
const SERIES_TOL: f64 = 1e-16;
/// Connection formula is trusted up to this cancellation ratio.
const CONNECTION_TRUST: f64 = 1e4;
/// `tricomi_u_connection` reports cancellation beyond this ratio.
const CANCELLATION_FLAG: f64 = 1e6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypergeometricParams<T> {
    pub a: T,
    pub b: T,
    pub x: T,
}

impl<T: Primitive> HypergeometricParams<T> {
    pub fn new(a: T, b: T, x: T) -> Self {
        HypergeometricParams { a, b, x }
    }
}

fn is_int<T: Primitive>(x: T) -> bool {
    x == x.round()
}

/// Neumaier-compensated sum.
#[derive(Default)]
struct Compensated {
    sum: f64,
    c: f64,
}

impl Compensated {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.c += (self.sum - t) + v;
        } else {
            self.c += (v - t) + self.sum;
        }
        self.sum = t;
    }
    fn value(&self) -> f64 {
        self.sum + self.c
    }
}

fn m_series(a: f64, b: f64, x: f64) -> Result<f64> {
    if b <= 0.0 && b == b.round() {
        // terminating numerator of lower degree cancels the pole
        let terminates = a <= 0.0 && a == a.round() && a > b;
        if !terminates {
            return Err(Error::ParameterPole(format!("1F1 denominator parameter b = {b} is a nonpositive integer")));
        }
    }
    let mut s = Compensated::default();
    let mut term = 1.0f64;
    s.add(term);
    let mut small = 0;
    for k in 0..SERIES_CAP {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * x / (kf + 1.0);
        if term == 0.0 {
            return Ok(s.value());
        }
        s.add(term);
        if !s.sum.is_finite() {
            return Err(Error::Overflow { scale: x + (a - b) * x.max(1.0).ln() });
        }
        if term.abs() < SERIES_TOL * s.sum.abs() {
            small += 1;
            if small >= 3 {
                return Ok(s.value());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergent { estimate: s.value(), error: term.abs() })
}

/// ₁F₁(a, b; x) by its power series.
pub fn kummer_1f1<T: Primitive>(p: &HypergeometricParams<T>) -> Result<T> {
    if p.x < T::zero() {
        return Err(Error::InvalidInput("1F1 argument must be nonnegative".into()));
    }
    m_series(to_f64(p.a), to_f64(p.b), to_f64(p.x)).map(lit)
}

/// Shorthand for [`kummer_1f1`].
pub fn hyp1f1<T: Primitive>(a: T, b: T, x: T) -> Result<T> {
    kummer_1f1(&HypergeometricParams::new(a, b, x))
}

/// Terms of the connection formula and their cancellation ratio.
fn connection_terms(a: f64, b: f64, x: f64) -> Result<(f64, f64)> {
    let t1 = if rgamma(1.0 + a - b) == 0.0 { 0.0 } else { gamma(1.0 - b)? * rgamma(1.0 + a - b) * m_series(a, b, x)? };
    let t2 = if rgamma(a) == 0.0 {
        0.0
    } else {
        gamma(b - 1.0)? * rgamma(a) * x.powf(1.0 - b) * m_series(1.0 + a - b, 2.0 - b, x)?
    };
    let u = t1 + t2;
    let ratio = (t1.abs() + t2.abs()) / u.abs();
    Ok((u, ratio))
}

/// U(a, b; x) from the ₁F₁ connection formula alone.
pub fn tricomi_u_connection<T: Primitive>(p: &HypergeometricParams<T>) -> Result<T> {
    check_u_domain(p)?;
    let (u, ratio) = connection_terms(to_f64(p.a), to_f64(p.b), to_f64(p.x))?;
    if !(ratio <= CANCELLATION_FLAG) {
        return Err(Error::CatastrophicCancellation { ratio });
    }
    Ok(lit(u))
}

fn check_u_domain<T: Primitive>(p: &HypergeometricParams<T>) -> Result<()> {
    if is_int(p.b) {
        return Err(Error::IntegerB { b: to_f64(p.b) });
    }
    if !(p.x > T::zero()) {
        return Err(Error::InvalidInput("U requires x > 0".into()));
    }
    Ok(())
}

/// Large-x expansion x^{−a} Σ (a)_k (a−b+1)_k / k! (−x)^{−k}; `None` unless it
/// reaches full precision before the terms start growing.
fn u_asymptotic(a: f64, b: f64, x: f64) -> Option<f64> {
    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    let mut prev = f64::INFINITY;
    for k in 0..200 {
        let kf = k as f64;
        term *= -(a + kf) * (a - b + 1.0 + kf) / ((kf + 1.0) * x);
        if term == 0.0 {
            return Some(sum * x.powf(-a));
        }
        if term.abs() > prev {
            return None;
        }
        prev = term.abs();
        sum += term;
        if term.abs() < 1e-16 * sum.abs() {
            return Some(sum * x.powf(-a));
        }
    }
    None
}

/// Integral representation, valid for a > 0 and any b.
fn u_integral(a: f64, b: f64, x: f64) -> Result<f64> {
    let cfg = QuadratureConfig::<f64>::with_tol(1e-300, 5e-14);
    let cfg = QuadratureConfig { max_subdivisions: 2000, ..cfg };
    let c = b - a - 1.0;
    let (value, pref) = if a >= 1.0 {
        // t = s/x: x^{−a}/Γ(a) ∫ e^{−s} s^{a−1} (1+s/x)^c ds
        let mode = (a - 1.0).max(0.0);
        let e = integrate_breaks(
            |s: f64| if s == 0.0 { 0.0 } else { (-s + (a - 1.0) * s.ln() + c * (s / x).ln_1p()).exp() },
            &[0.0, mode.max(1.0), f64::INFINITY],
            &cfg,
        )?;
        (e.value, (-a * x.ln() - ln_gamma(a)).exp())
    } else {
        // w = s^a removes the endpoint singularity
        let ia = 1.0 / a;
        let e = integrate_breaks(
            |w: f64| {
                let s = w.powf(ia);
                (-s + c * (s / x).ln_1p()).exp()
            },
            &[0.0, 1.0, f64::INFINITY],
            &cfg,
        )?;
        (e.value, (-a * x.ln() - ln_gamma(a + 1.0)).exp())
    };
    Ok(value * pref)
}

fn u_positive_a(a: f64, b: f64, x: f64) -> Result<f64> {
    if let Some(v) = u_asymptotic(a, b, x) {
        return Ok(v);
    }
    if !is_int(b) {
        let (u, ratio) = connection_terms(a, b, x)?;
        if ratio <= CONNECTION_TRUST {
            return Ok(u);
        }
    }
    u_integral(a, b, x)
}

/// U for real a, b and x > 0, without the non-integer-b restriction.
pub(crate) fn u_any(a: f64, b: f64, x: f64) -> Result<f64> {
    if a <= 0.0 && is_int(a) {
        // polynomial: U(−n, b; x) = (−1)^n (b)_n M(−n, b; x)
        let n = (-a) as usize;
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * pochhammer(b, n) * m_series(a, b, x)?);
    }
    if let Some(v) = u_asymptotic(a, b, x) {
        return Ok(v);
    }
    if !is_int(b) {
        let (u, ratio) = connection_terms(a, b, x)?;
        if ratio <= CONNECTION_TRUST {
            return Ok(u);
        }
    }
    if a > 0.0 {
        return u_integral(a, b, x);
    }
    // lift a into (0, 1] then recur downward:
    // U(c−1) = (2c + x − b) U(c) − c (c − b + 1) U(c+1)
    let k = (-a).floor() as usize + 1;
    let top = a + k as f64;
    let mut u_hi = u_positive_a(top + 1.0, b, x)?;
    let mut u_c = u_positive_a(top, b, x)?;
    let mut c = top;
    for _ in 0..k {
        let u_lo = (2.0 * c + x - b) * u_c - c * (c - b + 1.0) * u_hi;
        u_hi = u_c;
        u_c = u_lo;
        c -= 1.0;
    }
    Ok(u_c)
}

/// Tricomi U(a, b; x) for b ∉ ℤ, x > 0.
pub fn tricomi_u<T: Primitive>(p: &HypergeometricParams<T>) -> Result<T> {
    check_u_domain(p)?;
    u_any(to_f64(p.a), to_f64(p.b), to_f64(p.x)).map(lit)
}

/// Apply a fallible smooth function through `map_smooth`.
/// `f(order)` returns the derivatives up to `order` at the value of `x`.
pub(crate) fn smooth_fallible<S: Real, F: Fn(usize) -> Result<[f64; 4]>>(x: S, f: F) -> Result<S> {
    let err = std::cell::RefCell::new(None);
    let out = x.map_smooth(|_, order| match f(order) {
        Ok(d) => d.map(lit),
        Err(e) => {
            *err.borrow_mut() = Some(e);
            [S::Prim::nan(); 4]
        }
    });
    match err.into_inner() {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// U(a, b; x) for a generic scalar argument, carrying derivatives through
/// U^{(k)} = (−1)^k (a)_k U(a+k, b+k; x).
pub fn tricomi_u_s<S: Real>(a: S::Prim, b: S::Prim, x: S) -> Result<S> {
    let (af, bf, xf) = (to_f64(a), to_f64(b), to_f64(x));
    if is_int(b) {
        return Err(Error::IntegerB { b: bf });
    }
    if !(xf > 0.0) {
        return Err(Error::InvalidInput("U requires x > 0".into()));
    }
    smooth_fallible(x, |order| {
        let mut d = [u_any(af, bf, xf)?, 0.0, 0.0, 0.0];
        for k in 1..=order {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let pk = pochhammer(af, k);
            d[k] = if pk == 0.0 { 0.0 } else { sign * pk * u_any(af + k as f64, bf + k as f64, xf)? };
        }
        Ok(d)
    })
}

/// ₁F₁(a, b; x) for a generic scalar argument, with M^{(k)} = (a)_k/(b)_k M(a+k, b+k; x).
pub fn hyp1f1_s<S: Real>(a: S::Prim, b: S::Prim, x: S) -> Result<S> {
    let (af, bf, xf) = (to_f64(a), to_f64(b), to_f64(x));
    smooth_fallible(x, |order| {
        let mut d = [m_series(af, bf, xf)?, 0.0, 0.0, 0.0];
        for k in 1..=order {
            let r = pochhammer(af, k) / pochhammer(bf, k);
            d[k] = if r == 0.0 { 0.0 } else { r * m_series(af + k as f64, bf + k as f64, xf)? };
        }
        Ok(d)
    })
}
