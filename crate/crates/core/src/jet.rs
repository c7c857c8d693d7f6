//! Third-order truncated Taylor arithmetic (forward-mode differentiation).
//!
//! A `Jet` stores `c[k] = f^(k)(x0) / k!` for `k = 0..=3`. Seeding a point
//! coordinate with `Jet::var(x0, d)` and evaluating any `Real`-generic code
//! yields the directional derivatives up to third order.

use crate::scalar::{lit, Primitive, Real};
use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet<F: Primitive> {
    pub c: [F; 4],
}

impl<F: Primitive> Jet<F> {
    pub fn constant(x: F) -> Self {
        Jet { c: [x, F::zero(), F::zero(), F::zero()] }
    }

    /// The function `s ↦ x0 + d·s` expanded at `s = 0`.
    pub fn var(x0: F, d: F) -> Self {
        Jet { c: [x0, d, F::zero(), F::zero()] }
    }

    pub fn value(&self) -> F {
        self.c[0]
    }

    /// k-th derivative with respect to the seed parameter.
    pub fn deriv(&self, k: usize) -> F {
        let fact = [1.0, 1.0, 2.0, 6.0][k];
        self.c[k] * lit::<F>(fact)
    }

    /// Compose with g given g(x0), g'(x0), g''(x0), g'''(x0).
    pub fn compose(self, g: [F; 4]) -> Self {
        let [_, c1, c2, c3] = self.c;
        let half = lit::<F>(0.5);
        let sixth = lit::<F>(1.0 / 6.0);
        Jet {
            c: [
                g[0],
                g[1] * c1,
                g[1] * c2 + half * g[2] * c1 * c1,
                g[1] * c3 + g[2] * c1 * c2 + sixth * g[3] * c1 * c1 * c1,
            ],
        }
    }

    fn map_const(self, v: F) -> Self {
        Jet::constant(v)
    }

    fn powc(self, n: F) -> Self {
        let a = self.c[0];
        let one = F::one();
        let two = lit::<F>(2.0);
        let p0 = a.powf(n);
        let p1 = n * a.powf(n - one);
        let p2 = n * (n - one) * a.powf(n - two);
        let p3 = n * (n - one) * (n - two) * a.powf(n - lit::<F>(3.0));
        self.compose([p0, p1, p2, p3])
    }
}

impl<F: Primitive> From<F> for Jet<F> {
    fn from(x: F) -> Self {
        Jet::constant(x)
    }
}

impl<F: Primitive> fmt::Display for Jet<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε + {}ε² + {}ε³", self.c[0], self.c[1], self.c[2], self.c[3])
    }
}

impl<F: Primitive> PartialOrd for Jet<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.c[0].partial_cmp(&other.c[0])
    }
}

impl<F: Primitive> Neg for Jet<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Jet { c: [-self.c[0], -self.c[1], -self.c[2], -self.c[3]] }
    }
}

impl<F: Primitive> Add for Jet<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Jet { c: [self.c[0] + o.c[0], self.c[1] + o.c[1], self.c[2] + o.c[2], self.c[3] + o.c[3]] }
    }
}

impl<F: Primitive> Sub for Jet<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Jet { c: [self.c[0] - o.c[0], self.c[1] - o.c[1], self.c[2] - o.c[2], self.c[3] - o.c[3]] }
    }
}

impl<F: Primitive> Mul for Jet<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let a = self.c;
        let b = o.c;
        Jet {
            c: [
                a[0] * b[0],
                a[0] * b[1] + a[1] * b[0],
                a[0] * b[2] + a[1] * b[1] + a[2] * b[0],
                a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0],
            ],
        }
    }
}

impl<F: Primitive> Div for Jet<F> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.recip()
    }
}

impl<F: Primitive> Rem for Jet<F> {
    type Output = Self;
    fn rem(self, o: Self) -> Self {
        let q = (self.c[0] / o.c[0]).trunc();
        self - o * Jet::constant(q)
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {$(
        impl<F: Primitive> $tr for Jet<F> {
            fn $m(&mut self, o: Self) { *self = *self $op o; }
        }
    )*};
}
assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl<F: Primitive> Zero for Jet<F> {
    fn zero() -> Self {
        Jet::constant(F::zero())
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }
}

impl<F: Primitive> One for Jet<F> {
    fn one() -> Self {
        Jet::constant(F::one())
    }
}

impl<F: Primitive> Num for Jet<F> {
    type FromStrRadixErr = F::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        F::from_str_radix(s, radix).map(Jet::constant)
    }
}

impl<F: Primitive> ToPrimitive for Jet<F> {
    fn to_i64(&self) -> Option<i64> {
        self.c[0].to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.c[0].to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        self.c[0].to_f64()
    }
}

impl<F: Primitive> NumCast for Jet<F> {
    fn from<N: ToPrimitive>(n: N) -> Option<Self> {
        <F as NumCast>::from(n).map(Jet::constant)
    }
}

impl<F: Primitive> FromPrimitive for Jet<F> {
    fn from_i64(n: i64) -> Option<Self> {
        F::from_i64(n).map(Jet::constant)
    }
    fn from_u64(n: u64) -> Option<Self> {
        F::from_u64(n).map(Jet::constant)
    }
    fn from_f64(n: f64) -> Option<Self> {
        F::from_f64(n).map(Jet::constant)
    }
}

macro_rules! consts {
    ($($name:ident),*) => {$(
        fn $name() -> Self { Jet::constant(F::$name()) }
    )*};
}

impl<F: Primitive> FloatConst for Jet<F> {
    consts!(
        E, FRAC_1_PI, FRAC_1_SQRT_2, FRAC_2_PI, FRAC_2_SQRT_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4,
        FRAC_PI_6, FRAC_PI_8, LN_10, LN_2, LOG10_E, LOG2_E, PI, SQRT_2
    );
}

impl<F: Primitive> Float for Jet<F> {
    fn nan() -> Self {
        Jet::constant(F::nan())
    }
    fn infinity() -> Self {
        Jet::constant(F::infinity())
    }
    fn neg_infinity() -> Self {
        Jet::constant(F::neg_infinity())
    }
    fn neg_zero() -> Self {
        Jet::constant(F::neg_zero())
    }
    fn min_value() -> Self {
        Jet::constant(F::min_value())
    }
    fn min_positive_value() -> Self {
        Jet::constant(F::min_positive_value())
    }
    fn epsilon() -> Self {
        Jet::constant(F::epsilon())
    }
    fn max_value() -> Self {
        Jet::constant(F::max_value())
    }
    fn is_nan(self) -> bool {
        self.c.iter().any(|x| x.is_nan())
    }
    fn is_infinite(self) -> bool {
        self.c.iter().any(|x| x.is_infinite())
    }
    fn is_finite(self) -> bool {
        self.c.iter().all(|x| x.is_finite())
    }
    fn is_normal(self) -> bool {
        self.c[0].is_normal()
    }
    fn classify(self) -> FpCategory {
        self.c[0].classify()
    }
    fn floor(self) -> Self {
        self.map_const(self.c[0].floor())
    }
    fn ceil(self) -> Self {
        self.map_const(self.c[0].ceil())
    }
    fn round(self) -> Self {
        self.map_const(self.c[0].round())
    }
    fn trunc(self) -> Self {
        self.map_const(self.c[0].trunc())
    }
    fn fract(self) -> Self {
        self - self.trunc()
    }
    fn abs(self) -> Self {
        if self.c[0] < F::zero() {
            -self
        } else {
            self
        }
    }
    fn signum(self) -> Self {
        self.map_const(self.c[0].signum())
    }
    fn is_sign_positive(self) -> bool {
        self.c[0].is_sign_positive()
    }
    fn is_sign_negative(self) -> bool {
        self.c[0].is_sign_negative()
    }
    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }
    fn recip(self) -> Self {
        let r = self.c[0].recip();
        let r2 = r * r;
        self.compose([r, -r2, lit::<F>(2.0) * r2 * r, lit::<F>(-6.0) * r2 * r2])
    }
    fn powi(self, n: i32) -> Self {
        match n {
            0 => Jet::one(),
            1 => self,
            2 => self * self,
            3 => self * self * self,
            _ if n < 0 => self.powi(-n).recip(),
            _ => self.powc(F::from_i32(n).unwrap()),
        }
    }
    fn powf(self, n: Self) -> Self {
        if n.c[1..].iter().all(|x| x.is_zero()) {
            self.powc(n.c[0])
        } else {
            (n * self.ln()).exp()
        }
    }
    fn sqrt(self) -> Self {
        let s = self.c[0].sqrt();
        let i = s.recip();
        let i3 = i * i * i;
        self.compose([s, lit::<F>(0.5) * i, lit::<F>(-0.25) * i3, lit::<F>(0.375) * i3 * i * i])
    }
    fn exp(self) -> Self {
        let e = self.c[0].exp();
        self.compose([e, e, e, e])
    }
    fn exp2(self) -> Self {
        (self * Jet::constant(F::LN_2())).exp()
    }
    fn ln(self) -> Self {
        let i = self.c[0].recip();
        self.compose([self.c[0].ln(), i, -i * i, lit::<F>(2.0) * i * i * i])
    }
    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }
    fn log2(self) -> Self {
        self.ln() * Jet::constant(F::LOG2_E())
    }
    fn log10(self) -> Self {
        self.ln() * Jet::constant(F::LOG10_E())
    }
    fn max(self, o: Self) -> Self {
        if o.c[0] > self.c[0] || self.c[0].is_nan() {
            o
        } else {
            self
        }
    }
    fn min(self, o: Self) -> Self {
        if o.c[0] < self.c[0] || self.c[0].is_nan() {
            o
        } else {
            self
        }
    }
    fn abs_sub(self, o: Self) -> Self {
        if self.c[0] > o.c[0] {
            self - o
        } else {
            Jet::zero()
        }
    }
    fn cbrt(self) -> Self {
        let c = self.c[0].cbrt();
        let i = c.recip();
        let third = lit::<F>(1.0 / 3.0);
        self.compose([
            c,
            third * i * i,
            lit::<F>(-2.0 / 9.0) * i.powi(5),
            lit::<F>(10.0 / 27.0) * i.powi(8),
        ])
    }
    fn hypot(self, o: Self) -> Self {
        (self * self + o * o).sqrt()
    }
    fn sin(self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.compose([s, c, -s, -c])
    }
    fn cos(self) -> Self {
        let (s, c) = self.c[0].sin_cos();
        self.compose([c, -s, -c, s])
    }
    fn tan(self) -> Self {
        let t = self.c[0].tan();
        let s = F::one() + t * t;
        let two = lit::<F>(2.0);
        self.compose([t, s, two * t * s, two * s * (F::one() + lit::<F>(3.0) * t * t)])
    }
    fn asin(self) -> Self {
        let a = self.c[0];
        let w = F::one() - a * a;
        let r = w.sqrt().recip();
        let r3 = r * r * r;
        self.compose([a.asin(), r, a * r3, (F::one() + lit::<F>(2.0) * a * a) * r3 * r * r])
    }
    fn acos(self) -> Self {
        let v = self.asin();
        let mut out = -v;
        out.c[0] = self.c[0].acos();
        out
    }
    fn atan(self) -> Self {
        let a = self.c[0];
        let w = (F::one() + a * a).recip();
        self.compose([
            a.atan(),
            w,
            lit::<F>(-2.0) * a * w * w,
            (lit::<F>(6.0) * a * a - lit::<F>(2.0)) * w * w * w,
        ])
    }
    fn atan2(self, x: Self) -> Self {
        // rotate so that the base point lies on the positive real axis
        let y0 = self.c[0];
        let x0 = x.c[0];
        let th = y0.atan2(x0);
        let r = (x0 * x0 + y0 * y0).sqrt();
        if r == F::zero() {
            return Jet::constant(th);
        }
        let (cs, sn) = (x0 / r, y0 / r);
        let xr = x * Jet::constant(cs) + self * Jet::constant(sn);
        let yr = self * Jet::constant(cs) - x * Jet::constant(sn);
        let mut out = (yr / xr).atan();
        out.c[0] = th;
        out
    }
    fn sin_cos(self) -> (Self, Self) {
        (self.sin(), self.cos())
    }
    fn exp_m1(self) -> Self {
        let e = self.c[0].exp();
        self.compose([self.c[0].exp_m1(), e, e, e])
    }
    fn ln_1p(self) -> Self {
        let i = (F::one() + self.c[0]).recip();
        self.compose([self.c[0].ln_1p(), i, -i * i, lit::<F>(2.0) * i * i * i])
    }
    fn sinh(self) -> Self {
        let (s, c) = (self.c[0].sinh(), self.c[0].cosh());
        self.compose([s, c, s, c])
    }
    fn cosh(self) -> Self {
        let (s, c) = (self.c[0].sinh(), self.c[0].cosh());
        self.compose([c, s, c, s])
    }
    fn tanh(self) -> Self {
        let t = self.c[0].tanh();
        let s = F::one() - t * t;
        self.compose([t, s, lit::<F>(-2.0) * t * s, s * (lit::<F>(6.0) * t * t - lit::<F>(2.0))])
    }
    fn asinh(self) -> Self {
        let a = self.c[0];
        let r = (F::one() + a * a).sqrt().recip();
        let r3 = r * r * r;
        self.compose([a.asinh(), r, -a * r3, (lit::<F>(2.0) * a * a - F::one()) * r3 * r * r])
    }
    fn acosh(self) -> Self {
        let a = self.c[0];
        let r = (a * a - F::one()).sqrt().recip();
        let r3 = r * r * r;
        self.compose([a.acosh(), r, -a * r3, (lit::<F>(2.0) * a * a + F::one()) * r3 * r * r])
    }
    fn atanh(self) -> Self {
        let a = self.c[0];
        let w = (F::one() - a * a).recip();
        self.compose([
            a.atanh(),
            w,
            lit::<F>(2.0) * a * w * w,
            (lit::<F>(2.0) + lit::<F>(6.0) * a * a) * w * w * w,
        ])
    }
    fn integer_decode(self) -> (u64, i16, i8) {
        self.c[0].integer_decode()
    }
}

impl<F: Primitive> Real for Jet<F> {
    type Prim = F;
    fn from_prim(p: F) -> Self {
        Jet::constant(p)
    }
    fn prim(self) -> F {
        self.c[0]
    }
    fn map_smooth<G: Fn(F, usize) -> [F; 4]>(self, f: G) -> Self {
        self.compose(f(self.c[0], 3))
    }
}

/// Value and first three derivatives of `f` at `x` along the seed direction `d`.
pub fn derivs3<F: Primitive>(f: impl Fn(Jet<F>) -> Jet<F>, x: F) -> [F; 4] {
    let j = f(Jet::var(x, F::one()));
    [j.deriv(0), j.deriv(1), j.deriv(2), j.deriv(3)]
}
