use crate::error::{Error, Result};
use crate::scalar::{lit, sin_pi, to_f64, Primitive};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer<T: Primitive>(x: T) -> bool {
    x <= T::zero() && x == x.round()
}

/// Lanczos sum and t = x + g − 1/2 for x ≥ 1/2, in the shifted variable x − 1.
fn lanczos_parts(x: f64) -> (f64, f64) {
    let z = x - 1.0;
    let mut s = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        s += c / (z + i as f64);
    }
    (s, z + LANCZOS_G + 0.5)
}

fn gamma_f64(x: f64) -> f64 {
    if x < 0.5 {
        let s = sin_pi(x);
        std::f64::consts::PI / (s * gamma_f64(1.0 - x))
    } else {
        let (s, t) = lanczos_parts(x);
        // split the power to delay overflow
        let p = t.powf(0.5 * (x - 0.5));
        (2.0 * std::f64::consts::PI).sqrt() * p * (p * (-t).exp()) * s
    }
}

/// Γ(x).
pub fn gamma<T: Primitive>(x: T) -> Result<T> {
    if is_nonpositive_integer(x) {
        return Err(Error::PoleAtNonpositiveInteger { x: to_f64(x) });
    }
    let g = gamma_f64(to_f64(x));
    if !g.is_finite() {
        return Err(Error::Overflow { scale: ln_gamma(x) });
    }
    Ok(lit(g))
}

/// 1/Γ(x), zero at the poles.
pub fn rgamma<T: Primitive>(x: T) -> T {
    if is_nonpositive_integer(x) {
        return T::zero();
    }
    let xf = to_f64(x);
    if xf > 170.0 {
        return lit((-ln_gamma(x)).exp());
    }
    lit(1.0 / gamma_f64(xf))
}

/// ln|Γ(x)| (as f64).
pub fn ln_gamma<T: Primitive>(x: T) -> f64 {
    let x = to_f64(x);
    if x < 0.5 {
        let s = sin_pi(x).abs();
        std::f64::consts::PI.ln() - s.ln() - ln_gamma(1.0 - x)
    } else {
        let (s, t) = lanczos_parts(x);
        0.5 * (2.0 * std::f64::consts::PI).ln() + (x - 0.5) * t.ln() - t + s.ln()
    }
}

/// Pochhammer symbol (a)_k.
pub fn pochhammer<T: Primitive>(a: T, k: usize) -> T {
    (0..k).fold(T::one(), |p, i| p * (a + lit::<T>(i as f64)))
}
