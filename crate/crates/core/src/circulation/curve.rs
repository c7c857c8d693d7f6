use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, to_f64, Primitive};
use crate::vec3::{self, V3};
use std::sync::Arc;

pub type CurveFn<T> = Arc<dyn Fn(T) -> V3<T> + Send + Sync>;

/// A C¹ curve t ∈ [a, b] ↦ γ(t) with its tangent γ'(t).
#[derive(Clone)]
pub struct CurveSpec<T: Primitive> {
    pub parametrization: CurveFn<T>,
    pub derivative: CurveFn<T>,
    pub interval: (T, T),
    pub closed: bool,
    /// Sample count used for proximity checks and phase unwrapping.
    pub samples: usize,
    /// Interior parameters where the tangent may jump (joins of concatenated pieces).
    pub joins: Vec<T>,
    pub tag: String,
}

impl<T: Primitive> std::fmt::Debug for CurveSpec<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CurveSpec")
            .field("tag", &self.tag)
            .field("interval", &(to_f64(self.interval.0), to_f64(self.interval.1)))
            .field("closed", &self.closed)
            .field("samples", &self.samples)
            .finish()
    }
}

impl<T: Primitive> CurveSpec<T> {
    /// Build and validate a curve.
    pub fn new(parametrization: CurveFn<T>, derivative: CurveFn<T>, interval: (T, T), closed: bool, samples: usize, tag: &str) -> Result<Self> {
        let c = CurveSpec { parametrization, derivative, interval, closed, samples, joins: Vec::new(), tag: tag.into() };
        c.validate()?;
        Ok(c)
    }

    /// Horizontal circle of radius `r` about `center`, counter-clockwise seen from +z.
    pub fn circle(center: V3<T>, r: T, samples: usize) -> Result<Self> {
        if !(r > T::zero()) {
            return Err(Error::InvalidInput("circle radius must be positive".into()));
        }
        let p: CurveFn<T> = Arc::new(move |t: T| {
            let (s, c) = t.sin_cos();
            [center[0] + r * c, center[1] + r * s, center[2]]
        });
        let d: CurveFn<T> = Arc::new(move |t: T| {
            let (s, c) = t.sin_cos();
            [-r * s, r * c, T::zero()]
        });
        let tag = format!("circle(r={},z={})", to_f64(r), to_f64(center[2]));
        Self::new(p, d, (T::zero(), T::PI() * lit(2.0)), true, samples, &tag)
    }

    pub fn start(&self) -> V3<T> {
        (self.parametrization)(self.interval.0)
    }

    pub fn end(&self) -> V3<T> {
        (self.parametrization)(self.interval.1)
    }

    pub fn point(&self, t: T) -> V3<T> {
        (self.parametrization)(t)
    }

    pub fn tangent(&self, t: T) -> V3<T> {
        (self.derivative)(t)
    }

    /// `samples + 1` equidistant parameter values including both ends.
    pub fn sample_params(&self) -> Vec<T> {
        let (a, b) = self.interval;
        let n = from_usize::<T>(self.samples);
        (0..=self.samples).map(|i| a + (b - a) * from_usize::<T>(i) / n).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let (a, b) = self.interval;
        if !(a < b) || !a.is_finite() || !b.is_finite() {
            return Err(Error::InvalidInput("curve interval must be finite with a < b".into()));
        }
        if self.samples < 64 {
            return Err(Error::InvalidInput(format!("curve needs at least 64 samples, got {}", self.samples)));
        }
        if self.closed {
            let gap = vec3::norm(vec3::sub(self.start(), self.end()));
            let scale = T::one().max(vec3::norm(self.start()));
            if gap > lit::<T>(1e-12) * scale {
                return Err(Error::InvalidInput(format!("closed curve has endpoint gap {:e}", to_f64(gap))));
            }
        }
        // derivative against central differences of the parametrization
        let h = (b - a) * lit(1e-5);
        for t in self.sample_params().into_iter().take(self.samples).step_by(self.samples / 16) {
            let (t0, t1) = if t - lit::<T>(2.0) * h < a { (t, t + lit::<T>(2.0) * h) } else { (t - h, t + h) };
            let mid = lit::<T>(0.5) * (t0 + t1);
            let fd = vec3::scale((t1 - t0).recip(), vec3::sub(self.point(t1), self.point(t0)));
            let d = self.tangent(mid);
            let err = vec3::norm(vec3::sub(fd, d));
            if !(err <= lit::<T>(1e-6) * T::one().max(vec3::norm(d))) {
                return Err(Error::InvalidInput(format!("{}: derivative mismatch {:e} at t = {}", self.tag, to_f64(err), to_f64(mid))));
            }
        }
        Ok(())
    }

    /// Same image traversed backwards.
    pub fn reversed(&self) -> Self {
        let (a, b) = self.interval;
        let (p, d) = (self.parametrization.clone(), self.derivative.clone());
        CurveSpec {
            parametrization: Arc::new(move |t: T| p(a + b - t)),
            derivative: Arc::new(move |t: T| vec3::scale(-T::one(), d(a + b - t))),
            interval: self.interval,
            closed: self.closed,
            samples: self.samples,
            joins: self.joins.iter().rev().map(|&t| a + b - t).collect(),
            tag: format!("reversed({})", self.tag),
        }
    }

    /// `self` followed by `other`; the end of `self` must be the start of `other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let gap = vec3::norm(vec3::sub(self.end(), other.start()));
        if gap > lit::<T>(1e-12) * T::one().max(vec3::norm(self.end())) {
            return Err(Error::InvalidInput(format!("curves do not join: gap {:e}", to_f64(gap))));
        }
        let (a, b) = self.interval;
        let (c, d) = other.interval;
        let len = b - a + d - c;
        let (p1, d1, p2, d2) = (self.parametrization.clone(), self.derivative.clone(), other.parametrization.clone(), other.derivative.clone());
        let mut joins = self.joins.clone();
        joins.push(b);
        joins.extend(other.joins.iter().map(|&t| t - c + b));
        let closed = vec3::norm(vec3::sub(self.start(), other.end())) <= lit::<T>(1e-12) * T::one().max(vec3::norm(self.start()));
        Ok(CurveSpec {
            parametrization: Arc::new(move |t: T| if t <= b { p1(t) } else { p2(t - b + c) }),
            derivative: Arc::new(move |t: T| if t <= b { d1(t) } else { d2(t - b + c) }),
            interval: (a, a + len),
            closed,
            samples: self.samples + other.samples,
            joins,
            tag: format!("{}+{}", self.tag, other.tag),
        })
    }

    /// `pieces` equal parameter segments, refined at the joins.
    pub(crate) fn breakpoints(&self, pieces: usize) -> Vec<T> {
        let (a, b) = self.interval;
        let mut v: Vec<T> = (0..=pieces).map(|i| a + (b - a) * from_usize::<T>(i) / from_usize::<T>(pieces)).collect();
        v.extend(self.joins.iter().copied().filter(|&t| t > a && t < b));
        v.sort_by(|x, y| x.partial_cmp(y).unwrap());
        v.dedup();
        v
    }
}
