//! Fixed-size vector helpers. Points are always `[T; 3]`; planar fields
//! ignore the third coordinate.

use crate::scalar::Real;

pub type V3<T> = [T; 3];
/// `m[i][j] = ∂_j f_i`.
pub type M3<T> = [[T; 3]; 3];

#[inline]
pub fn zero<T: Real>() -> V3<T> {
    [T::zero(); 3]
}

#[inline]
pub fn add<T: Real>(a: V3<T>, b: V3<T>) -> V3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn sub<T: Real>(a: V3<T>, b: V3<T>) -> V3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn scale<T: Real>(s: T, a: V3<T>) -> V3<T> {
    [s * a[0], s * a[1], s * a[2]]
}

#[inline]
pub fn dot<T: Real>(a: V3<T>, b: V3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross<T: Real>(a: V3<T>, b: V3<T>) -> V3<T> {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

#[inline]
pub fn norm<T: Real>(a: V3<T>) -> T {
    dot(a, a).sqrt()
}

#[inline]
pub fn max_abs<T: Real>(a: V3<T>) -> T {
    a[0].abs().max(a[1].abs()).max(a[2].abs())
}

/// `m · a` with `m[i][j] = ∂_j f_i`: gives `(a·∇) f`.
#[inline]
pub fn mat_vec<T: Real>(m: &M3<T>, a: V3<T>) -> V3<T> {
    [dot(m[0], a), dot(m[1], a), dot(m[2], a)]
}

/// `mᵀ · a`: gives `∇(f·a)` contributions with `a` held fixed.
#[inline]
pub fn mat_t_vec<T: Real>(m: &M3<T>, a: V3<T>) -> V3<T> {
    [
        m[0][0] * a[0] + m[1][0] * a[1] + m[2][0] * a[2],
        m[0][1] * a[0] + m[1][1] * a[1] + m[2][1] * a[2],
        m[0][2] * a[0] + m[1][2] * a[1] + m[2][2] * a[2],
    ]
}

#[inline]
pub fn trace<T: Real>(m: &M3<T>) -> T {
    m[0][0] + m[1][1] + m[2][2]
}

/// Curl from a Jacobian.
#[inline]
pub fn curl_of<T: Real>(m: &M3<T>) -> V3<T> {
    [m[2][1] - m[1][2], m[0][2] - m[2][0], m[1][0] - m[0][1]]
}

#[inline]
pub fn mat_scale<T: Real>(s: T, m: &M3<T>) -> M3<T> {
    let mut o = *m;
    for row in o.iter_mut() {
        for x in row.iter_mut() {
            *x *= s;
        }
    }
    o
}

pub fn unit<T: Real>(i: usize) -> V3<T> {
    let mut e = zero();
    e[i] = T::one();
    e
}

pub fn to_f64<T: Real>(a: V3<T>) -> [f64; 3] {
    [crate::scalar::to_f64(a[0]), crate::scalar::to_f64(a[1]), crate::scalar::to_f64(a[2])]
}
