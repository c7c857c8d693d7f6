//! Smooth test functions with analytic gradients and Hessians.

use super::quad::{integrate_1d, QuadratureConfig, Region};
use crate::error::Result;
use crate::jet::Jet;
use crate::scalar::{lit, Primitive, Real};
use crate::vec3::{M3, V3};
use serde::{Deserialize, Serialize};

/// Radial profile as a function of the squared scaled radius `u = s²`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Profile<T> {
    /// exp(−1/(1−u)) on u < 1.
    Bump,
    /// 1 on s ≤ inner, smooth monotone step to 0 at s = 1.
    Plateau { inner: T },
    /// exp(−u), Schwartz class.
    Gaussian,
    /// (1−u)^k on u < 1, of class C^{k−1}. Cheap to integrate accurately.
    Poly { k: u32 },
}

impl<T: Primitive> Profile<T> {
    pub fn eval<S: Real<Prim = T>>(&self, u: S) -> S {
        match *self {
            Profile::Bump => {
                if u.prim() >= T::one() {
                    S::zero()
                } else {
                    (-(S::one() - u).recip()).exp()
                }
            }
            Profile::Gaussian => (-u).exp(),
            Profile::Poly { k } => {
                if u.prim() >= T::one() {
                    S::zero()
                } else {
                    (S::one() - u).powi(k as i32)
                }
            }
            Profile::Plateau { inner } => {
                if u.prim() >= T::one() {
                    return S::zero();
                }
                if u.prim() <= inner * inner {
                    return S::one();
                }
                let s = u.sqrt();
                let tau = (s - S::from_prim(inner)) / S::from_prim(T::one() - inner);
                let f = |t: S| (-t.recip()).exp();
                let a = f(S::one() - tau);
                a / (a + f(tau))
            }
        }
    }

    /// h(u), h'(u), h''(u).
    pub fn derivs(&self, u: T) -> [T; 3] {
        let j = self.eval(Jet::var(u, T::one()));
        [j.deriv(0), j.deriv(1), j.deriv(2)]
    }

    pub fn compact(&self) -> bool {
        !matches!(self, Profile::Gaussian)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum TestKind<T> {
    Zero,
    /// A·h(|x−c|²/R²)
    Radial { center: V3<T>, radius: T, amplitude: T, profile: Profile<T> },
    /// A·Π_k h_k(((x_k − c_k)/w_k)²) over the active axes.
    Product { center: V3<T>, widths: V3<T>, amplitude: T, profiles: [Profile<T>; 3] },
    Sum(Vec<(T, TestFunction<T>)>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TestFunction<T> {
    pub kind: TestKind<T>,
    pub dim: usize,
    pub tag: String,
}

/// Axis-aligned support box, or `None` for Schwartz-class functions.
pub type SupportBox<T> = Option<(V3<T>, V3<T>)>;

impl<T: Primitive> TestFunction<T> {
    pub fn zero(dim: usize) -> Self {
        TestFunction { kind: TestKind::Zero, dim, tag: "zero".into() }
    }

    pub fn radial(center: V3<T>, radius: T, amplitude: T, profile: Profile<T>, dim: usize) -> Self {
        let tag = match profile {
            Profile::Bump => "bump",
            Profile::Plateau { .. } => "plateau",
            Profile::Gaussian => "gaussian",
            Profile::Poly { .. } => "poly",
        };
        TestFunction { kind: TestKind::Radial { center, radius, amplitude, profile }, dim, tag: tag.into() }
    }

    pub fn product(center: V3<T>, widths: V3<T>, amplitude: T, profiles: [Profile<T>; 3], dim: usize) -> Self {
        TestFunction { kind: TestKind::Product { center, widths, amplitude, profiles }, dim, tag: "product".into() }
    }

    pub fn sum(terms: Vec<(T, TestFunction<T>)>) -> Self {
        let dim = terms.iter().map(|t| t.1.dim).max().unwrap_or(1);
        TestFunction { kind: TestKind::Sum(terms), dim, tag: "sum".into() }
    }

    pub fn tagged(mut self, tag: &str) -> Self {
        self.tag = tag.into();
        self
    }

    pub fn family_tag(&self) -> &str {
        &self.tag
    }

    pub fn value(&self, p: &V3<T>) -> T {
        self.full(p, 0).0
    }

    pub fn gradient(&self, p: &V3<T>) -> V3<T> {
        self.full(p, 1).1
    }

    pub fn hessian(&self, p: &V3<T>) -> M3<T> {
        self.full(p, 2).2
    }

    pub fn laplacian(&self, p: &V3<T>) -> T {
        let h = self.hessian(p);
        (0..self.dim).fold(T::zero(), |a, k| a + h[k][k])
    }

    /// Value, gradient and Hessian up to the requested order.
    pub fn full(&self, p: &V3<T>, order: usize) -> (T, V3<T>, M3<T>) {
        let z = T::zero();
        let mut g = [z; 3];
        let mut h = [[z; 3]; 3];
        match &self.kind {
            TestKind::Zero => (z, g, h),
            TestKind::Radial { center, radius, amplitude, profile } => {
                let r2 = *radius * *radius;
                let mut d = [z; 3];
                let mut u = z;
                for k in 0..self.dim {
                    d[k] = p[k] - center[k];
                    u += d[k] * d[k];
                }
                u = u / r2;
                if profile.compact() && u >= T::one() {
                    return (z, g, h);
                }
                if order == 0 {
                    return (*amplitude * profile.eval(u), g, h);
                }
                let [h0, h1, h2] = profile.derivs(u);
                let two = lit::<T>(2.0);
                for k in 0..self.dim {
                    g[k] = *amplitude * h1 * two * d[k] / r2;
                    if order >= 2 {
                        for l in 0..self.dim {
                            let delta = if k == l { two * h1 / r2 } else { z };
                            h[k][l] = *amplitude * (h2 * lit::<T>(4.0) * d[k] * d[l] / (r2 * r2) + delta);
                        }
                    }
                }
                (*amplitude * h0, g, h)
            }
            TestKind::Product { center, widths, amplitude, profiles } => {
                let mut f = [[T::one(), z, z]; 3];
                for k in 0..self.dim {
                    let w2 = widths[k] * widths[k];
                    let t = p[k] - center[k];
                    let u = t * t / w2;
                    if profiles[k].compact() && u >= T::one() {
                        return (z, g, h);
                    }
                    let [h0, h1, h2] = profiles[k].derivs(u);
                    let two = lit::<T>(2.0);
                    f[k] = [h0, h1 * two * t / w2, h2 * lit::<T>(4.0) * t * t / (w2 * w2) + h1 * two / w2];
                }
                let prod_except = |skip: &[usize]| {
                    (0..self.dim).filter(|k| !skip.contains(k)).fold(T::one(), |a, k| a * f[k][0])
                };
                let val = *amplitude * prod_except(&[]);
                if order >= 1 {
                    for k in 0..self.dim {
                        g[k] = *amplitude * f[k][1] * prod_except(&[k]);
                        if order >= 2 {
                            for l in 0..self.dim {
                                h[k][l] = if k == l {
                                    *amplitude * f[k][2] * prod_except(&[k])
                                } else {
                                    *amplitude * f[k][1] * f[l][1] * prod_except(&[k, l])
                                };
                            }
                        }
                    }
                }
                (val, g, h)
            }
            TestKind::Sum(terms) => {
                let mut v = z;
                for (c, t) in terms {
                    let (tv, tg, th) = t.full(p, order);
                    v += *c * tv;
                    for k in 0..3 {
                        g[k] += *c * tg[k];
                        for l in 0..3 {
                            h[k][l] += *c * th[k][l];
                        }
                    }
                }
                (v, g, h)
            }
        }
    }

    pub fn support_box(&self) -> SupportBox<T> {
        let z = T::zero();
        match &self.kind {
            TestKind::Zero => Some(([z; 3], [z; 3])),
            TestKind::Radial { center, radius, profile, .. } => {
                if !profile.compact() {
                    return None;
                }
                let mut lo = [z; 3];
                let mut hi = [z; 3];
                for k in 0..self.dim {
                    lo[k] = center[k] - *radius;
                    hi[k] = center[k] + *radius;
                }
                Some((lo, hi))
            }
            TestKind::Product { center, widths, profiles, .. } => {
                let mut lo = [z; 3];
                let mut hi = [z; 3];
                for k in 0..self.dim {
                    if !profiles[k].compact() {
                        return None;
                    }
                    lo[k] = center[k] - widths[k];
                    hi[k] = center[k] + widths[k];
                }
                Some((lo, hi))
            }
            TestKind::Sum(terms) => {
                let mut acc: Option<(V3<T>, V3<T>)> = None;
                for (_, t) in terms {
                    if matches!(t.kind, TestKind::Zero) {
                        continue;
                    }
                    let (lo, hi) = t.support_box()?;
                    acc = Some(match acc {
                        None => (lo, hi),
                        Some((a, b)) => ([0, 1, 2].map(|k| a[k].min(lo[k])), [0, 1, 2].map(|k| b[k].max(hi[k]))),
                    });
                }
                Some(acc.unwrap_or(([z; 3], [z; 3])))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.kind, TestKind::Zero)
    }

    /// Centre and radius when the support is a ball.
    pub fn support_ball(&self) -> Option<(V3<T>, T)> {
        match &self.kind {
            TestKind::Radial { center, radius, profile, .. } if profile.compact() => Some((*center, *radius)),
            _ => None,
        }
    }

    /// Integration region in `dim` dimensions covering the support.
    pub fn support_region(&self, dim: usize) -> Option<Region<T>> {
        support_region_of(std::slice::from_ref(self), dim)
    }
}

fn support_region_of<T: Primitive>(fs: &[TestFunction<T>], dim: usize) -> Option<Region<T>> {
    let nz: Vec<&TestFunction<T>> = fs.iter().filter(|f| !f.is_zero()).collect();
    let balls: Vec<(V3<T>, T)> = nz.iter().filter_map(|f| f.support_ball()).collect();
    if !balls.is_empty() && balls.len() == nz.len() && balls.iter().all(|b| *b == balls[0]) {
        return Some(Region::ball(balls[0].0, balls[0].1, dim));
    }
    let sum = TestFunction::sum(nz.into_iter().map(|c| (T::one(), c.clone())).collect());
    sum.support_box().map(|(lo, hi)| Region::support(lo, hi, dim))
}

/// Vector-valued test function with one scalar test per component.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VectorTest<T> {
    pub comps: [TestFunction<T>; 3],
    pub tag: String,
}

impl<T: Primitive> VectorTest<T> {
    pub fn new(comps: [TestFunction<T>; 3], tag: &str) -> Self {
        VectorTest { comps, tag: tag.into() }
    }

    /// Only the third component non-zero.
    pub fn vertical(f: TestFunction<T>) -> Self {
        let dim = f.dim;
        let tag = format!("vertical-{}", f.tag);
        VectorTest { comps: [TestFunction::zero(dim), TestFunction::zero(dim), f], tag }
    }

    pub fn value(&self, p: &V3<T>) -> V3<T> {
        [0, 1, 2].map(|i| self.comps[i].value(p))
    }

    /// `J[i][j] = ∂_j φ_i`.
    pub fn jacobian(&self, p: &V3<T>) -> M3<T> {
        [0, 1, 2].map(|i| self.comps[i].gradient(p))
    }

    pub fn divergence(&self, p: &V3<T>) -> T {
        let j = self.jacobian(p);
        j[0][0] + j[1][1] + j[2][2]
    }

    pub fn laplacian(&self, p: &V3<T>) -> V3<T> {
        [0, 1, 2].map(|i| self.comps[i].laplacian(p))
    }

    /// ∇(∇·φ).
    pub fn grad_div(&self, p: &V3<T>) -> V3<T> {
        let hs: [M3<T>; 3] = [0, 1, 2].map(|i| self.comps[i].hessian(p));
        [0, 1, 2].map(|j| hs[0][0][j] + hs[1][1][j] + hs[2][2][j])
    }

    pub fn support_box(&self) -> SupportBox<T> {
        let nonzero: Vec<TestFunction<T>> = self.comps.iter().filter(|c| !c.is_zero()).cloned().collect();
        TestFunction::sum(nonzero.into_iter().map(|c| (T::one(), c)).collect()).support_box()
    }

    pub fn support_region(&self, dim: usize) -> Option<Region<T>> {
        support_region_of(&self.comps, dim)
    }

    pub fn dim(&self) -> usize {
        self.comps.iter().map(|c| c.dim).max().unwrap_or(1)
    }
}

fn unit_sphere_area<T: Primitive>(dim: usize) -> T {
    match dim {
        1 => lit(2.0),
        2 => T::PI() * lit(2.0),
        _ => T::PI() * lit(4.0),
    }
}

/// Smooth bump supported in the ball of radius ε with unit integral.
pub fn make_mollifier<T: Primitive>(center: V3<T>, eps: T, dim: usize) -> Result<TestFunction<T>> {
    let cfg = QuadratureConfig::<T>::with_tol(1e-15, 1e-13);
    let profile = Profile::<T>::Bump;
    let d = dim as i32;
    let radial = integrate_1d(|s: T| profile.eval(s * s) * s.powi(d - 1), T::zero(), T::one(), &cfg)?;
    let z = unit_sphere_area::<T>(dim) * radial.value * eps.powi(d);
    Ok(TestFunction::radial(center, eps, z.recip(), profile, dim).tagged(&format!("mollifier({})", eps)))
}

/// Plateau bump of radius ε with value 1 on the inner half, used for point evaluation.
pub fn point_probe<T: Primitive>(center: V3<T>, eps: T, dim: usize) -> TestFunction<T> {
    TestFunction::radial(center, eps, T::one(), Profile::Plateau { inner: lit(0.5) }, dim).tagged(&format!("probe({})", eps))
}

/// ζ_k(x) = e·exp(−1/(1−k²x²)): ζ_k(0) = 1, support [−1/k, 1/k], pointwise decreasing in k.
pub fn make_decreasing_bump_sequence<T: Primitive>(k: usize) -> TestFunction<T> {
    let k = k.max(1);
    TestFunction::radial([T::zero(); 3], lit::<T>(1.0 / k as f64), T::E(), Profile::Bump, 1).tagged(&format!("zeta_{k}"))
}
