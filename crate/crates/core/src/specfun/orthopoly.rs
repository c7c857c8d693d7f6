use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, Primitive, Real};
use num_complex::Complex;

/// Generalized Laguerre L_n^μ(x) by the three-term recurrence (L_0 = 1, L_1 = 1+μ−x).
pub fn laguerre<S: Real>(n: usize, mu: S::Prim, x: S) -> Result<S> {
    if !(mu > -<S::Prim as num_traits::One>::one()) {
        return Err(Error::InvalidInput(format!("Laguerre parameter μ = {mu} must exceed −1")));
    }
    Ok(laguerre_unchecked(n, mu, x))
}

/// Recurrence without the μ > −1 precondition (polynomial identity holds for all μ).
pub fn laguerre_unchecked<S: Real>(n: usize, mu: S::Prim, x: S) -> S {
    let mu = S::from_prim(mu);
    let mut l0 = S::one();
    if n == 0 {
        return l0;
    }
    let mut l1 = S::one() + mu - x;
    for k in 1..n {
        let kf: S = from_usize(k);
        let l2 = ((lit::<S>(2.0) * kf + S::one() + mu - x) * l1 - (kf + mu) * l0) / (kf + S::one());
        l0 = l1;
        l1 = l2;
    }
    l1
}

/// Associated Legendre P_l^m(t) with the Condon–Shortley phase.
pub fn legendre_assoc<S: Real>(l: usize, m: i32, t: S) -> Result<S> {
    let s = (S::one() - t * t).max(S::zero()).sqrt();
    legendre_assoc_cs(l, m, t, s)
}

/// P_l^m(cos θ) from cos θ and sin θ ≥ 0 given separately, which keeps
/// derivatives accurate near the poles.
pub fn legendre_assoc_cs<S: Real>(l: usize, m: i32, t: S, s: S) -> Result<S> {
    let ma = m.unsigned_abs() as usize;
    if ma > l {
        return Err(Error::InvalidInput(format!("|m| = {ma} exceeds l = {l}")));
    }
    let p = legendre_nonneg(l, ma, t, s);
    if m >= 0 {
        return Ok(p);
    }
    // P_l^{−m} = (−1)^m (l−m)!/(l+m)! P_l^m
    let ratio = (l - ma + 1..=l + ma).fold(S::one(), |acc, k| acc / from_usize::<S>(k));
    let sign = if ma % 2 == 0 { S::one() } else { -S::one() };
    Ok(sign * ratio * p)
}

fn legendre_nonneg<S: Real>(l: usize, m: usize, t: S, s: S) -> S {
    let one = S::one();
    let mut pmm = one;
    for k in 0..m {
        pmm = -pmm * from_usize::<S>(2 * k + 1) * s;
    }
    if l == m {
        return pmm;
    }
    let mut p1 = t * from_usize::<S>(2 * m + 1) * pmm;
    if l == m + 1 {
        return p1;
    }
    let mut p0 = pmm;
    for ll in m + 2..=l {
        let p2 = (t * from_usize::<S>(2 * ll - 1) * p1 - from_usize::<S>(ll + m - 1) * p0) / from_usize::<S>(ll - m);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// Orthonormalization constant √((2l+1)/4π · (l−m)!/(l+m)!).
pub fn ylm_norm<T: Primitive>(l: usize, m: i32) -> T {
    let ma = m.unsigned_abs() as usize;
    let mut r = T::one();
    if m >= 0 {
        for k in l - ma + 1..=l + ma {
            r /= from_usize::<T>(k);
        }
    } else {
        for k in l - ma + 1..=l + ma {
            r *= from_usize::<T>(k);
        }
    }
    (from_usize::<T>(2 * l + 1) / (lit::<T>(4.0) * T::PI()) * r).sqrt()
}

/// Orthonormal Y_l^m(θ, φ) with the Condon–Shortley phase.
pub fn spherical_harmonic<T: Primitive>(l: usize, m: i32, theta: T, phi: T) -> Result<Complex<T>> {
    let p = legendre_assoc(l, m, theta.cos())?;
    let (s, c) = (lit::<T>(m as f64) * phi).sin_cos();
    let a = ylm_norm::<T>(l, m) * p;
    Ok(Complex::new(a * c, a * s))
}
