//! Adaptive Gauss–Kronrod quadrature in one dimension, iterated for boxes and
//! curvilinear regions.

use crate::error::{Error, Result};
use crate::scalar::{lit, to_f64, Primitive};
use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BinaryHeap;

/// Values that can be integrated: scalars, complex numbers, fixed arrays.
pub trait Integrand<T: Primitive>: Copy + Send + Sync {
    fn zero() -> Self;
    fn add(self, o: Self) -> Self;
    fn scale(self, s: T) -> Self;
    fn norm(self) -> T;
    fn is_finite(self) -> bool;
}

impl<T: Primitive> Integrand<T> for T {
    fn zero() -> Self {
        T::zero()
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn scale(self, s: T) -> Self {
        self * s
    }
    fn norm(self) -> T {
        self.abs()
    }
    fn is_finite(self) -> bool {
        num_traits::Float::is_finite(self)
    }
}

impl<T: Primitive> Integrand<T> for Complex<T> {
    fn zero() -> Self {
        Complex::new(T::zero(), T::zero())
    }
    fn add(self, o: Self) -> Self {
        self + o
    }
    fn scale(self, s: T) -> Self {
        self * s
    }
    fn norm(self) -> T {
        self.norm()
    }
    fn is_finite(self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl<T: Primitive, const N: usize> Integrand<T> for [T; N] {
    fn zero() -> Self {
        [T::zero(); N]
    }
    fn add(mut self, o: Self) -> Self {
        for (a, b) in self.iter_mut().zip(o) {
            *a += b;
        }
        self
    }
    fn scale(mut self, s: T) -> Self {
        for a in self.iter_mut() {
            *a *= s;
        }
        self
    }
    fn norm(self) -> T {
        self.iter().fold(T::zero(), |m, x| m.max(x.abs()))
    }
    fn is_finite(self) -> bool {
        self.iter().all(|x| x.is_finite())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    GaussKronrod21,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct QuadratureConfig<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_subdivisions: usize,
    pub scheme: Scheme,
    /// Evaluate the outermost level's nodes on the rayon pool.
    pub parallel: bool,
}

impl<T: Primitive> Default for QuadratureConfig<T> {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: lit(1e-10),
            rel_tol: lit(1e-8),
            max_subdivisions: 4000,
            scheme: Scheme::GaussKronrod21,
            parallel: false,
        }
    }
}

impl<T: Primitive> QuadratureConfig<T> {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        QuadratureConfig { abs_tol: lit(abs_tol), rel_tol: lit(rel_tol), ..Default::default() }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > T::zero() && self.rel_tol > T::zero()) || self.max_subdivisions == 0 {
            return Err(Error::InvalidInput("quadrature tolerances must be positive".into()));
        }
        Ok(())
    }

    fn inner(&self) -> Self {
        QuadratureConfig {
            abs_tol: self.abs_tol * lit(0.1),
            rel_tol: self.rel_tol * lit(0.1),
            parallel: false,
            ..*self
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct Estimate<V, T> {
    pub value: V,
    pub error: T,
    pub evaluations: usize,
}

const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077600271894999,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

/// Nodes and weights of the 21-point Kronrod rule on [a, b], together with
/// the embedded 10-point Gauss weights (zero at Kronrod-only nodes).
pub fn kronrod_panel<T: Primitive>(a: T, b: T) -> [(T, T, T); 21] {
    let c = lit::<T>(0.5) * (a + b);
    let h = lit::<T>(0.5) * (b - a);
    let mut out = [(c, h * lit(WGK[10]), T::zero()); 21];
    for i in 0..10 {
        let g = if i % 2 == 1 { h * lit(WG[i / 2]) } else { T::zero() };
        out[2 * i] = (c - h * lit(XGK[i]), h * lit(WGK[i]), g);
        out[2 * i + 1] = (c + h * lit(XGK[i]), h * lit(WGK[i]), g);
    }
    out
}

/// Map from the finite working interval to the user variable.
#[derive(Clone, Copy, Debug)]
enum Map<T> {
    Identity,
    /// x = a + t/(1−t), t ∈ [0,1)
    Upper(T),
    /// x = b − t/(1−t)
    Lower(T),
    /// x = t/(1−t²), t ∈ (−1,1)
    Whole,
}

impl<T: Primitive> Map<T> {
    fn apply(&self, t: T) -> (T, T) {
        let one = T::one();
        match *self {
            Map::Identity => (t, one),
            Map::Upper(a) => {
                let w = one - t;
                (a + t / w, one / (w * w))
            }
            Map::Lower(b) => {
                let w = one - t;
                (b - t / w, one / (w * w))
            }
            Map::Whole => {
                let w = one - t * t;
                (t / w, (one + t * t) / (w * w))
            }
        }
    }
}

struct Interval<V, T> {
    a: T,
    b: T,
    value: V,
    error: T,
    /// part of `error` that subdivision cannot reduce
    floor: T,
    seg: usize,
}

impl<V, T: PartialOrd> PartialEq for Interval<V, T> {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl<V, T: PartialOrd> Eq for Interval<V, T> {}
impl<V, T: PartialOrd> PartialOrd for Interval<V, T> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl<V, T: PartialOrd> Ord for Interval<V, T> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.error.partial_cmp(&o.error).unwrap_or(std::cmp::Ordering::Equal)
    }
}

/// GK21 on [a,b] of a fallible integrand returning (value, inner error density).
fn gk21<T, V, F>(f: &F, map: Map<T>, a: T, b: T, parallel: bool) -> Result<(V, T, T)>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(T) -> Result<(V, T)> + Sync,
{
    let c = lit::<T>(0.5) * (a + b);
    let h = lit::<T>(0.5) * (b - a);
    let mut nodes = [T::zero(); 21];
    for i in 0..10 {
        nodes[2 * i] = c - h * lit(XGK[i]);
        nodes[2 * i + 1] = c + h * lit(XGK[i]);
    }
    nodes[20] = c;
    let eval = |t: &T| -> Result<(V, T)> {
        let (x, jac) = map.apply(*t);
        let (v, e) = f(x)?;
        if !v.is_finite() {
            return Err(Error::NonFinite { at: [to_f64(x), 0.0, 0.0] });
        }
        Ok((v.scale(jac), e * jac))
    };
    let vals: Vec<Result<(V, T)>> = if parallel {
        nodes.par_iter().map(eval).collect()
    } else {
        nodes.iter().map(eval).collect()
    };
    let mut fv = [(V::zero(), T::zero()); 21];
    for (slot, v) in fv.iter_mut().zip(vals) {
        *slot = v?;
    }
    let center = fv[20].0;
    let mut resk = center.scale(lit(WGK[10]));
    let mut resg = V::zero();
    let mut inner = fv[20].1 * lit(WGK[10]);
    for i in 0..10 {
        let pair = fv[2 * i].0.add(fv[2 * i + 1].0);
        resk = resk.add(pair.scale(lit(WGK[i])));
        inner += (fv[2 * i].1 + fv[2 * i + 1].1) * lit(WGK[i]);
        if i % 2 == 1 {
            resg = resg.add(pair.scale(lit(WG[i / 2])));
        }
    }
    // QUADPACK-style error scaling
    let mean = resk.scale(lit(0.5));
    let mut resasc = WGK[10] * to_f64(center.add(mean.scale(-T::one())).norm());
    let mut resabs = WGK[10] * to_f64(center.norm());
    for i in 0..10 {
        let w = WGK[i];
        resabs += w * (to_f64(fv[2 * i].0.norm()) + to_f64(fv[2 * i + 1].0.norm()));
        resasc += w
            * (to_f64(fv[2 * i].0.add(mean.scale(-T::one())).norm())
                + to_f64(fv[2 * i + 1].0.add(mean.scale(-T::one())).norm()));
    }
    let hab = to_f64(h.abs());
    resasc *= hab;
    resabs *= hab;
    let diff = to_f64(resk.add(resg.scale(-T::one())).norm()) * hab;
    let mut err = diff;
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (1.0f64).min((200.0 * err / resasc).powf(1.5));
    }
    let eps = to_f64(T::epsilon());
    let mut floor = 0.0;
    if resabs > f64::MIN_POSITIVE / (50.0 * eps) {
        floor = 50.0 * eps * resabs;
        err = err.max(floor);
    }
    let carried = inner.abs() * h.abs();
    Ok((resk.scale(h), lit::<T>(err) + carried, lit::<T>(floor) + carried))
}

/// Adaptive integral of a fallible integrand over consecutive breakpoints.
/// Endpoints may be infinite. The integrand also returns an error density
/// that is integrated into the reported error (used by nested rules).
pub fn integrate_fallible<T, V, F>(f: F, breaks: &[T], cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(T) -> Result<(V, T)> + Sync,
{
    cfg.validate()?;
    if breaks.len() < 2 {
        return Err(Error::InvalidInput("need at least two integration limits".into()));
    }
    let mut segs: Vec<(Map<T>, T, T)> = Vec::new();
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        if a == b {
            continue;
        }
        if a > b {
            return Err(Error::InvalidInput("breakpoints must be increasing".into()));
        }
        let seg = match (a.is_finite(), b.is_finite()) {
            (true, true) => (Map::Identity, a, b),
            (true, false) => (Map::Upper(a), T::zero(), T::one()),
            (false, true) => (Map::Lower(b), T::zero(), T::one()),
            (false, false) => (Map::Whole, -T::one(), T::one()),
        };
        segs.push(seg);
    }
    let mut heap: BinaryHeap<Interval<V, T>> = BinaryHeap::new();
    let mut evals = 0usize;
    for (k, &(map, a, b)) in segs.iter().enumerate() {
        let (v, e, fl) = gk21(&f, map, a, b, cfg.parallel)?;
        evals += 21;
        heap.push(Interval { a, b, value: v, error: e, floor: fl, seg: k });
    }
    let total = |h: &BinaryHeap<Interval<V, T>>| -> (V, T, T) {
        // deterministic summation order: by position
        let mut items: Vec<&Interval<V, T>> = h.iter().collect();
        items.sort_by(|p, q| p.seg.cmp(&q.seg).then(p.a.partial_cmp(&q.a).unwrap_or(std::cmp::Ordering::Equal)));
        let mut v = V::zero();
        let mut e = T::zero();
        let mut fl = T::zero();
        for it in items {
            v = v.add(it.value);
            e += it.error;
            fl += it.floor;
        }
        (v, e, fl)
    };
    let mut subdiv = 0usize;
    let (mut run_v, mut run_e, mut run_f) = total(&heap);
    loop {
        // below the round-off floor further subdivision cannot help
        let tol = cfg.abs_tol.max(cfg.rel_tol * run_v.norm()).max(lit::<T>(2.0) * run_f);
        if run_e <= tol {
            let (v, e, _) = total(&heap);
            return Ok(Estimate { value: v, error: e, evaluations: evals });
        }
        if subdiv >= cfg.max_subdivisions {
            let (v, e, _) = total(&heap);
            return Err(Error::NonConvergent { estimate: to_f64(v.norm()), error: to_f64(e) });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = lit::<T>(0.5) * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            heap.push(worst);
            let (v, e, _) = total(&heap);
            return Err(Error::NonConvergent { estimate: to_f64(v.norm()), error: to_f64(e) });
        }
        let map = segs[worst.seg].0;
        let (v1, e1, f1) = gk21(&f, map, worst.a, mid, cfg.parallel)?;
        let (v2, e2, f2) = gk21(&f, map, mid, worst.b, cfg.parallel)?;
        evals += 42;
        subdiv += 1;
        run_v = run_v.add(worst.value.scale(-T::one())).add(v1).add(v2);
        run_e = run_e - worst.error + e1 + e2;
        run_f = run_f - worst.floor + f1 + f2;
        if subdiv % 64 == 0 {
            let (v, e, fl) = total(&heap);
            run_v = v.add(v1).add(v2);
            run_e = e + e1 + e2;
            run_f = fl + f1 + f2;
        }
        heap.push(Interval { a: worst.a, b: mid, value: v1, error: e1, floor: f1, seg: worst.seg });
        heap.push(Interval { a: mid, b: worst.b, value: v2, error: e2, floor: f2, seg: worst.seg });
    }
}

/// Adaptive integral of `f` over `[a, b]` (infinite limits allowed).
pub fn integrate_1d<T, V, F>(f: F, a: T, b: T, cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(T) -> V + Sync,
{
    integrate_fallible(|x| Ok((f(x), T::zero())), &[a, b], cfg)
}

/// Same as [`integrate_1d`] with interior breakpoints.
pub fn integrate_breaks<T, V, F>(f: F, breaks: &[T], cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(T) -> V + Sync,
{
    integrate_fallible(|x| Ok((f(x), T::zero())), breaks, cfg)
}

/// Iterated integral over `ndim` coordinates. `limits(level, coords)` returns
/// the breakpoints of axis `level` given the outer coordinates already fixed
/// in `coords[..level]`.
pub fn integrate_nested<T, V, F, L>(f: F, ndim: usize, limits: L, cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(&[T; 3]) -> V + Sync,
    L: Fn(usize, &[T; 3]) -> Vec<T> + Sync,
{
    assert!((1..=3).contains(&ndim));
    nested_level(&f, ndim, &limits, 0, [T::zero(); 3], cfg)
}

fn nested_level<T, V, F, L>(f: &F, ndim: usize, limits: &L, level: usize, coords: [T; 3], cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(&[T; 3]) -> V + Sync,
    L: Fn(usize, &[T; 3]) -> Vec<T> + Sync,
{
    let breaks = limits(level, &coords);
    if level + 1 == ndim {
        integrate_fallible(
            |x| {
                let mut q = coords;
                q[level] = x;
                Ok((f(&q), T::zero()))
            },
            &breaks,
            cfg,
        )
    } else {
        let inner = cfg.inner();
        integrate_fallible(
            |x| {
                let mut q = coords;
                q[level] = x;
                let e = nested_level(f, ndim, limits, level + 1, q, &inner)?;
                Ok((e.value, e.error))
            },
            &breaks,
            cfg,
        )
    }
}

/// Integration regions with their natural coordinates.
#[derive(Clone, Debug)]
pub enum RegionKind<T> {
    /// 1-D interval on the first coordinate.
    Interval { lo: T, hi: T },
    /// Axis-aligned box in `dim` dimensions; limits may be infinite.
    Box { lo: [T; 3], hi: [T; 3], dim: usize },
    /// Planar annulus in polar coordinates (r, φ) about `center`.
    Annulus { center: [T; 3], r_in: T, r_out: T },
    /// Spherical shell in (r, θ, φ) about `center`.
    Shell { center: [T; 3], r_in: T, r_out: T },
    /// Cartesian ball in `dim` dimensions; each axis is cut to the chord
    /// through the outer coordinates.
    Ball { center: [T; 3], radius: T, dim: usize },
    /// The ball about `center` outside the radius `r_in` of the vertical line
    /// (or planar point) `axis`, in coordinates (φ, ρ) or (z, φ, ρ) about it.
    AxialBall { axis: [T; 3], center: [T; 3], radius: T, r_in: T, dim: usize },
    /// Cylindrical shell about the vertical line through (axis[0], axis[1]),
    /// coordinates (ρ, z, φ).
    Cylinder { axis: [T; 2], r_in: T, r_out: T, z_lo: T, z_hi: T },
}

#[derive(Clone, Debug)]
pub struct Region<T> {
    pub kind: RegionKind<T>,
    /// extra breakpoints per natural coordinate
    pub breaks: [Vec<T>; 3],
}

impl<T: Primitive> Region<T> {
    pub fn new(kind: RegionKind<T>) -> Self {
        Region { kind, breaks: [Vec::new(), Vec::new(), Vec::new()] }
    }
    pub fn interval(lo: T, hi: T) -> Self {
        Self::new(RegionKind::Interval { lo, hi })
    }
    pub fn rect(lo: [T; 2], hi: [T; 2]) -> Self {
        Self::new(RegionKind::Box { lo: [lo[0], lo[1], T::zero()], hi: [hi[0], hi[1], T::zero()], dim: 2 })
    }
    pub fn cuboid(lo: [T; 3], hi: [T; 3]) -> Self {
        Self::new(RegionKind::Box { lo, hi, dim: 3 })
    }
    pub fn plane() -> Self {
        Self::new(RegionKind::Annulus { center: [T::zero(); 3], r_in: T::zero(), r_out: T::infinity() })
    }
    pub fn space() -> Self {
        Self::new(RegionKind::Shell { center: [T::zero(); 3], r_in: T::zero(), r_out: T::infinity() })
    }
    pub fn annulus(center: [T; 3], r_in: T, r_out: T) -> Self {
        Self::new(RegionKind::Annulus { center, r_in, r_out })
    }
    pub fn shell(center: [T; 3], r_in: T, r_out: T) -> Self {
        Self::new(RegionKind::Shell { center, r_in, r_out })
    }
    pub fn cylinder(axis: [T; 2], r_in: T, r_out: T, z_lo: T, z_hi: T) -> Self {
        Self::new(RegionKind::Cylinder { axis, r_in, r_out, z_lo, z_hi })
    }
    pub fn ball(center: [T; 3], radius: T, dim: usize) -> Self {
        Self::new(RegionKind::Ball { center, radius, dim })
    }
    pub fn axial_ball(axis: [T; 3], center: [T; 3], radius: T, r_in: T, dim: usize) -> Self {
        Self::new(RegionKind::AxialBall { axis, center, radius, r_in, dim })
    }
    /// Box [lo, hi] over the first `dim` coordinates.
    pub fn support(lo: [T; 3], hi: [T; 3], dim: usize) -> Self {
        match dim {
            1 => Self::interval(lo[0], hi[0]),
            2 => Self::rect([lo[0], lo[1]], [hi[0], hi[1]]),
            _ => Self::cuboid(lo, hi),
        }
    }

    /// For Cartesian regions, add breakpoints at the coordinates of the singular items.
    pub fn with_singular_breaks(mut self, set: &crate::numerics::grid::SingularSet<T>) -> Self {
        use crate::numerics::grid::Singular;
        if !matches!(self.kind, RegionKind::Box { .. } | RegionKind::Interval { .. } | RegionKind::Ball { .. }) {
            return self;
        }
        for s in &set.items {
            match s {
                Singular::Point { center, .. } => (0..3).for_each(|k| self.breaks[k].push(center[k])),
                Singular::Line { axis } => (0..2).for_each(|k| self.breaks[k].push(axis[k])),
                Singular::PositiveXCut => self.breaks[1].push(T::zero()),
                Singular::Plane { axis, offset } => self.breaks[*axis].push(*offset),
            }
        }
        self
    }

    pub fn with_breaks(mut self, axis: usize, pts: Vec<T>) -> Self {
        self.breaks[axis] = pts;
        self
    }

    pub fn dim(&self) -> usize {
        match self.kind {
            RegionKind::Interval { .. } => 1,
            RegionKind::Box { dim, .. } | RegionKind::Ball { dim, .. } | RegionKind::AxialBall { dim, .. } => dim,
            RegionKind::Annulus { .. } => 2,
            RegionKind::Shell { .. } | RegionKind::Cylinder { .. } => 3,
        }
    }

    fn natural_limits(&self, level: usize, outer: &[T; 3]) -> (T, T) {
        let two_pi = T::PI() * lit(2.0);
        match self.kind {
            RegionKind::Ball { center, radius, .. } => {
                let mut r2 = radius * radius;
                for k in 0..level {
                    r2 -= (outer[k] - center[k]) * (outer[k] - center[k]);
                }
                let h = r2.max(T::zero()).sqrt();
                (center[level] - h, center[level] + h)
            }
            RegionKind::AxialBall { axis, center, radius, r_in, dim } => {
                let lvl = level + 3 - dim;
                if lvl == 0 {
                    return (center[2] - radius, center[2] + radius);
                }
                if lvl == 1 {
                    return (T::zero(), two_pi);
                }
                let rz2 = if dim == 3 { radius * radius - (outer[0] - center[2]) * (outer[0] - center[2]) } else { radius * radius };
                let (s, c) = outer[level - 1].sin_cos();
                let (dx, dy) = (center[0] - axis[0], center[1] - axis[1]);
                let along = dx * c + dy * s;
                let perp = dy * c - dx * s;
                let disc = rz2 - perp * perp;
                if !(disc > T::zero()) {
                    return (r_in, r_in);
                }
                let w = disc.sqrt();
                let lo = r_in.max(along - w);
                (lo, lo.max(along + w))
            }
            RegionKind::Interval { lo, hi } => (lo, hi),
            RegionKind::Box { lo, hi, .. } => (lo[level], hi[level]),
            RegionKind::Annulus { r_in, r_out, .. } => [(r_in, r_out), (T::zero(), two_pi)][level],
            RegionKind::Shell { r_in, r_out, .. } => [(r_in, r_out), (T::zero(), T::PI()), (T::zero(), two_pi)][level],
            RegionKind::Cylinder { r_in, r_out, z_lo, z_hi, .. } => [(r_in, r_out), (z_lo, z_hi), (T::zero(), two_pi)][level],
        }
    }

    fn limits(&self, level: usize, outer: &[T; 3]) -> Vec<T> {
        let (lo, hi) = self.natural_limits(level, outer);
        let mut v = vec![lo];
        let mut extra: Vec<T> = self.breaks[level].iter().copied().filter(|&b| b > lo && b < hi).collect();
        extra.sort_by(|a, b| a.partial_cmp(b).unwrap());
        extra.dedup();
        v.extend(extra);
        v.push(hi);
        v
    }

    /// Cartesian point and Jacobian for natural coordinates `q`.
    fn to_point(&self, q: &[T; 3]) -> ([T; 3], T) {
        match self.kind {
            RegionKind::Interval { .. } => ([q[0], T::zero(), T::zero()], T::one()),
            RegionKind::Box { dim, .. } | RegionKind::Ball { dim, .. } => {
                let mut p = *q;
                for x in p.iter_mut().skip(dim) {
                    *x = T::zero();
                }
                (p, T::one())
            }
            RegionKind::Annulus { center, .. } => {
                let (s, c) = q[1].sin_cos();
                ([center[0] + q[0] * c, center[1] + q[0] * s, center[2]], q[0])
            }
            RegionKind::Shell { center, .. } => {
                let (st, ct) = q[1].sin_cos();
                let (sp, cp) = q[2].sin_cos();
                (
                    [center[0] + q[0] * st * cp, center[1] + q[0] * st * sp, center[2] + q[0] * ct],
                    q[0] * q[0] * st,
                )
            }
            RegionKind::AxialBall { axis, dim, .. } => {
                let (phi, r, z) = if dim == 3 { (q[1], q[2], q[0]) } else { (q[0], q[1], axis[2]) };
                let (s, c) = phi.sin_cos();
                ([axis[0] + r * c, axis[1] + r * s, z], r)
            }
            RegionKind::Cylinder { axis, .. } => {
                let (s, c) = q[2].sin_cos();
                ([axis[0] + q[0] * c, axis[1] + q[0] * s, q[1]], q[0])
            }
        }
    }
}

/// Integrate a field of Cartesian points over a region.
pub fn integrate<T, V, F>(f: F, region: &Region<T>, cfg: &QuadratureConfig<T>) -> Result<Estimate<V, T>>
where
    T: Primitive,
    V: Integrand<T>,
    F: Fn(&[T; 3]) -> V + Sync,
{
    let ndim = region.dim();
    integrate_nested(
        |q| {
            let (p, jac) = region.to_point(q);
            if jac == T::zero() {
                V::zero()
            } else {
                f(&p).scale(jac)
            }
        },
        ndim,
        |level, outer| region.limits(level, outer),
        cfg,
    )
}
