//! Central finite-difference stencils on fields of `[T; 3]` points.

use super::grid::SingularSet;
use crate::error::{Error, Result};
use crate::scalar::{lit, Primitive};
use crate::vec3::{to_f64, M3, V3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stencil {
    Central2,
    Central4,
}

impl Stencil {
    /// Half-width of the stencil in units of the step.
    pub fn reach(self) -> usize {
        match self {
            Stencil::Central2 => 1,
            Stencil::Central4 => 2,
        }
    }
}

#[inline]
fn shifted<T: Primitive>(p: &V3<T>, k: usize, d: T) -> V3<T> {
    let mut q = *p;
    q[k] += d;
    q
}

/// ∂_k f at p.
pub fn partial<T: Primitive, F: Fn(&V3<T>) -> T>(f: &F, p: &V3<T>, k: usize, h: T, s: Stencil) -> T {
    match s {
        Stencil::Central2 => (f(&shifted(p, k, h)) - f(&shifted(p, k, -h))) / (lit::<T>(2.0) * h),
        Stencil::Central4 => {
            let two = lit::<T>(2.0);
            (f(&shifted(p, k, -two * h)) - lit::<T>(8.0) * f(&shifted(p, k, -h)) + lit::<T>(8.0) * f(&shifted(p, k, h))
                - f(&shifted(p, k, two * h)))
                / (lit::<T>(12.0) * h)
        }
    }
}

/// ∂_k² f at p.
pub fn second<T: Primitive, F: Fn(&V3<T>) -> T>(f: &F, p: &V3<T>, k: usize, h: T, s: Stencil) -> T {
    let f0 = f(p);
    match s {
        Stencil::Central2 => (f(&shifted(p, k, h)) - lit::<T>(2.0) * f0 + f(&shifted(p, k, -h))) / (h * h),
        Stencil::Central4 => {
            let two = lit::<T>(2.0);
            (-f(&shifted(p, k, -two * h)) + lit::<T>(16.0) * f(&shifted(p, k, -h)) - lit::<T>(30.0) * f0
                + lit::<T>(16.0) * f(&shifted(p, k, h))
                - f(&shifted(p, k, two * h)))
                / (lit::<T>(12.0) * h * h)
        }
    }
}

pub fn gradient<T: Primitive, F: Fn(&V3<T>) -> T>(f: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> V3<T> {
    let mut g = [T::zero(); 3];
    for (k, gk) in g.iter_mut().enumerate().take(dim) {
        *gk = partial(f, p, k, h, s);
    }
    g
}

pub fn laplacian<T: Primitive, F: Fn(&V3<T>) -> T>(f: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> T {
    (0..dim).fold(T::zero(), |acc, k| acc + second(f, p, k, h, s))
}

/// `J[i][j] = ∂_j v_i`.
pub fn jacobian<T: Primitive, F: Fn(&V3<T>) -> V3<T>>(v: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> M3<T> {
    let mut j = [[T::zero(); 3]; 3];
    for k in 0..dim {
        let c: [T; 3] = match s {
            Stencil::Central2 => {
                let a = v(&shifted(p, k, h));
                let b = v(&shifted(p, k, -h));
                [0, 1, 2].map(|i| (a[i] - b[i]) / (lit::<T>(2.0) * h))
            }
            Stencil::Central4 => {
                let two = lit::<T>(2.0);
                let m2 = v(&shifted(p, k, -two * h));
                let m1 = v(&shifted(p, k, -h));
                let p1 = v(&shifted(p, k, h));
                let p2 = v(&shifted(p, k, two * h));
                [0, 1, 2].map(|i| (m2[i] - lit::<T>(8.0) * m1[i] + lit::<T>(8.0) * p1[i] - p2[i]) / (lit::<T>(12.0) * h))
            }
        };
        for i in 0..3 {
            j[i][k] = c[i];
        }
    }
    j
}

/// Componentwise Laplacian of a vector field.
pub fn vector_laplacian<T: Primitive, F: Fn(&V3<T>) -> V3<T>>(v: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> V3<T> {
    [0, 1, 2].map(|i| laplacian(&|q: &V3<T>| v(q)[i], p, h, dim, s))
}

pub fn divergence<T: Primitive, F: Fn(&V3<T>) -> V3<T>>(v: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> T {
    (0..dim).fold(T::zero(), |acc, k| acc + partial(&|q: &V3<T>| v(q)[k], p, k, h, s))
}

pub fn curl<T: Primitive, F: Fn(&V3<T>) -> V3<T>>(v: &F, p: &V3<T>, h: T, dim: usize, s: Stencil) -> V3<T> {
    crate::vec3::curl_of(&jacobian(v, p, h, dim, s))
}

/// Central-difference gradient with O(step²) accuracy.
///
/// Fails if the stencil comes within `2·step` of the singular set.
pub fn finite_diff_gradient<T: Primitive, F: Fn(&V3<T>) -> T>(
    f: &F,
    point: &V3<T>,
    step: T,
    dim: usize,
    singular: &SingularSet<T>,
) -> Result<V3<T>> {
    check_clearance(point, step, 1, singular)?;
    Ok(gradient(f, point, step, dim, Stencil::Central2))
}

pub fn check_clearance<T: Primitive>(p: &V3<T>, h: T, reach: usize, singular: &SingularSet<T>) -> Result<()> {
    let need = h * lit::<T>(2.0 * reach as f64);
    if singular.distance(p) <= need {
        return Err(Error::StencilTouchesSingularSet { at: to_f64(*p) });
    }
    Ok(())
}
