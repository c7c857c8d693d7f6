use crate::distcurl::SyncCatch;
use crate::error::{Error, Result};
use crate::numerics::quad::{integrate, integrate_1d, integrate_fallible, Estimate, QuadratureConfig};
use crate::numerics::testfn::{Profile, TestFunction, VectorTest};
use crate::scalar::{lit, Primitive};
use crate::vec3::{M3, V3};
use serde::{Deserialize, Serialize};

/// h(((t − center)/half_width)²) for a radial profile h.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TimeProfile<T> {
    pub center: T,
    pub half_width: T,
    pub profile: Profile<T>,
}

impl<T: Primitive> TimeProfile<T> {
    pub fn new(center: T, half_width: T, profile: Profile<T>) -> Self {
        TimeProfile { center, half_width, profile }
    }

    /// Value and time derivative.
    pub fn eval(&self, t: T) -> (T, T) {
        let s = (t - self.center) / self.half_width;
        let [h, dh, _] = self.profile.derivs(s * s);
        (h, dh * lit::<T>(2.0) * s / self.half_width)
    }

    /// Support clipped to t ≥ 0; Gaussian profiles are cut at 8 widths.
    pub fn support(&self) -> (T, T) {
        let w = if self.profile.compact() { self.half_width } else { lit::<T>(8.0) * self.half_width };
        ((self.center - w).max(T::zero()), (self.center + w).max(T::zero()))
    }
}

/// A test field and its derivatives at one space-time point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TestJet<T> {
    pub value: V3<T>,
    /// ∂φ/∂t
    pub dt: V3<T>,
    /// `jac[i][k] = ∂_k φ_i`
    pub jac: M3<T>,
    pub div: T,
    pub lap: V3<T>,
    pub grad_div: V3<T>,
}

impl<T: Primitive> TestJet<T> {
    pub fn is_zero(&self) -> bool {
        let z = T::zero();
        self.value.iter().chain(&self.dt).chain(&self.lap).chain(&self.grad_div).all(|x| *x == z) && self.jac.iter().flatten().all(|x| *x == z)
    }
}

/// One separable term c·h(t)·φ(x).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceTimeTerm<T> {
    pub coef: T,
    pub time: TimeProfile<T>,
    pub space: VectorTest<T>,
}

impl<T: Primitive> SpaceTimeTerm<T> {
    /// Spatial derivatives scaled by c·h(t), and the time derivative by c·h'(t).
    pub fn jet(&self, p: &V3<T>, t: T) -> TestJet<T> {
        let (h, dh) = self.time.eval(t);
        self.weighted_jet(p, h, dh)
    }

    /// Spatial part weighted by c·h and the time-derivative slot by c·dh.
    pub fn weighted_jet(&self, p: &V3<T>, h: T, dh: T) -> TestJet<T> {
        let (a, b) = (self.coef * h, self.coef * dh);
        let v = self.space.value(p);
        if a == T::zero() && b == T::zero() {
            let z = [T::zero(); 3];
            return TestJet { value: z, dt: z, jac: [z; 3], div: T::zero(), lap: z, grad_div: z };
        }
        let jac = self.space.jacobian(p);
        TestJet {
            value: v.map(|x| a * x),
            dt: v.map(|x| b * x),
            jac: jac.map(|r| r.map(|x| a * x)),
            div: a * (jac[0][0] + jac[1][1] + jac[2][2]),
            lap: self.space.laplacian(p).map(|x| a * x),
            grad_div: self.space.grad_div(p).map(|x| a * x),
        }
    }
}

/// A finite sum of separable space-time test fields. Scalar tests ξ are
/// carried as the first component.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaceTimeTest<T> {
    pub terms: Vec<SpaceTimeTerm<T>>,
    pub tag: String,
}

impl<T: Primitive> SpaceTimeTest<T> {
    pub fn new(time: TimeProfile<T>, space: VectorTest<T>, tag: &str) -> Self {
        SpaceTimeTest { terms: vec![SpaceTimeTerm { coef: T::one(), time, space }], tag: tag.into() }
    }

    pub fn scalar(time: TimeProfile<T>, f: TestFunction<T>, tag: &str) -> Self {
        let dim = f.dim;
        Self::new(time, VectorTest::new([f, TestFunction::zero(dim), TestFunction::zero(dim)], tag), tag)
    }

    /// a·x + b·y
    pub fn combine(a: T, x: &Self, b: T, y: &Self) -> Self {
        let scaled = |s: T, t: &Self| -> Vec<SpaceTimeTerm<T>> { t.terms.iter().map(|term| SpaceTimeTerm { coef: s * term.coef, ..term.clone() }).collect() };
        let mut terms = scaled(a, x);
        terms.extend(scaled(b, y));
        SpaceTimeTest { terms, tag: format!("{a:e}*{}+{b:e}*{}", x.tag, y.tag) }
    }

    pub fn jet(&self, p: &V3<T>, t: T) -> TestJet<T> {
        let mut out = self.terms[0].jet(p, t);
        for term in &self.terms[1..] {
            let j = term.jet(p, t);
            for i in 0..3 {
                out.value[i] += j.value[i];
                out.dt[i] += j.dt[i];
                out.lap[i] += j.lap[i];
                out.grad_div[i] += j.grad_div[i];
                for k in 0..3 {
                    out.jac[i][k] += j.jac[i][k];
                }
            }
            out.div += j.div;
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.terms.iter().map(|t| t.space.dim()).max().unwrap_or(1)
    }
}

/// ∫dt ∫dx f over the support of one term, plus ∫dx g at t = 0. `f` must be
/// linear in the jet; for time-independent fields the time integral is then
/// taken in closed form through the jet weights.
pub(crate) fn pair_term<T, F, G>(term: &SpaceTimeTerm<T>, dim: usize, stationary: bool, f: &F, g: &G, cfg: &QuadratureConfig<T>) -> Result<([T; 2], T)>
where
    T: Primitive,
    F: Fn(&V3<T>, T, &TestJet<T>) -> Result<[T; 2]> + Sync,
    G: Fn(&V3<T>, &TestJet<T>) -> Result<[T; 2]> + Sync,
{
    let region = term
        .space
        .support_region(dim)
        .ok_or_else(|| Error::InvalidInput(format!("space-time test {} needs compact spatial support", term.space.tag)))?;
    let (lo, hi) = term.time.support();
    let zero = [T::zero(); 2];
    let spatial = |t: T| -> Result<Estimate<[T; 2], T>> {
        let c = SyncCatch::new();
        let e = integrate(
            |p: &V3<T>| {
                let jet = term.jet(p, t);
                if jet.is_zero() {
                    return zero;
                }
                c.or_zero(f(p, t, &jet), zero)
            },
            &region,
            cfg,
        );
        c.take(e)?
    };
    let mut value = zero;
    let mut err = T::zero();
    if hi > lo && stationary {
        let mass = integrate_1d(|t: T| term.time.eval(t).0, lo, hi, &QuadratureConfig::with_tol(1e-300, 1e-14))?;
        let dh = term.time.eval(hi).0 - term.time.eval(lo).0;
        let c = SyncCatch::new();
        let e = integrate(
            |p: &V3<T>| {
                let jet = term.weighted_jet(p, mass.value, dh);
                if jet.is_zero() {
                    return zero;
                }
                c.or_zero(f(p, T::zero(), &jet), zero)
            },
            &region,
            cfg,
        );
        let e = c.take(e)??;
        value = e.value;
        err += e.error;
    } else if hi > lo {
        let e = integrate_fallible(
            |t: T| -> Result<([T; 2], T)> {
                let s = spatial(t)?;
                Ok((s.value, s.error))
            },
            &[lo, hi],
            cfg,
        )?;
        value = e.value;
        err += e.error;
    }
    if lo == T::zero() {
        let c = SyncCatch::new();
        let e = integrate(
            |p: &V3<T>| {
                let jet = term.jet(p, T::zero());
                if jet.is_zero() {
                    return zero;
                }
                c.or_zero(g(p, &jet), zero)
            },
            &region,
            cfg,
        );
        let e = c.take(e)??;
        value = [value[0] + e.value[0], value[1] + e.value[1]];
        err += e.error;
    }
    Ok((value, err))
}
