//! Scalar abstraction shared by every module.
//!
//! `Real` is implemented by the primitive floats and by [`Jet`](crate::jet::Jet),
//! a truncated Taylor series used to obtain exact derivatives of the generic
//! evaluators.

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display, LowerExp};

pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Default + Debug + Display + Send + Sync + 'static
{
    /// Underlying primitive float.
    type Prim: Primitive;

    fn from_prim(p: Self::Prim) -> Self;

    /// Value part (the scalar itself for primitives).
    fn prim(self) -> Self::Prim;

    /// Apply a smooth univariate function given its derivatives at the value.
    ///
    /// `f(x0, order)` must fill derivatives `f^(k)(x0)` for `k <= order`;
    /// primitives request order 0, jets order 3.
    fn map_smooth<F: Fn(Self::Prim, usize) -> [Self::Prim; 4]>(self, f: F) -> Self;
}

pub trait Primitive: Real<Prim = Self> + LowerExp + serde::Serialize + for<'de> serde::Deserialize<'de> {}

macro_rules! impl_primitive {
    ($t:ty) => {
        impl Real for $t {
            type Prim = $t;
            #[inline]
            fn from_prim(p: $t) -> $t {
                p
            }
            #[inline]
            fn prim(self) -> $t {
                self
            }
            #[inline]
            fn map_smooth<F: Fn($t, usize) -> [$t; 4]>(self, f: F) -> $t {
                f(self, 0)[0]
            }
        }
        impl Primitive for $t {}
    };
}

impl_primitive!(f32);
impl_primitive!(f64);

/// Literal conversion; every `Real` represents f64 constants (rounded for f32).
#[inline]
pub fn lit<S: Real>(x: f64) -> S {
    S::from_f64(x).expect("literal representable")
}

#[inline]
pub fn from_usize<S: Real>(n: usize) -> S {
    S::from_usize(n).expect("integer representable")
}

#[inline]
pub fn from_i32<S: Real>(n: i32) -> S {
    S::from_i32(n).expect("integer representable")
}

#[inline]
pub fn to_f64<S: Real>(x: S) -> f64 {
    num_traits::ToPrimitive::to_f64(&x.prim()).unwrap_or(f64::NAN)
}

/// sin(πx) with exact zeros at integers.
pub fn sin_pi<T: Primitive>(x: T) -> T {
    let two = lit::<T>(2.0);
    let mut r = x % two;
    if r < T::zero() {
        r += two;
    }
    // r in [0, 2)
    let half = lit::<T>(0.5);
    if r == T::zero() || r == T::one() {
        return T::zero();
    }
    if r == half {
        return T::one();
    }
    if r == lit::<T>(1.5) {
        return -T::one();
    }
    (r * T::PI()).sin()
}

/// cos(πx) with exact zeros at half-integers.
pub fn cos_pi<T: Primitive>(x: T) -> T {
    sin_pi(x + lit::<T>(0.5))
}
