use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, Primitive};
use crate::vec3::V3;
use serde::{Deserialize, Serialize};

/// Measure-zero sets on which fields are singular.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Singular<T> {
    /// A point; `planar` measures distance in the (x, y) plane only.
    Point { center: V3<T>, planar: bool },
    /// The vertical line through (x, y) = axis.
    Line { axis: [T; 2] },
    /// Branch cut {y = 0, x ≥ 0} of arg ∈ [0, 2π), planar.
    PositiveXCut,
    /// The plane {p[axis] = offset}.
    Plane { axis: usize, offset: T },
}

impl<T: Primitive> Singular<T> {
    pub fn distance(&self, p: &V3<T>) -> T {
        match self {
            Singular::Point { center, planar } => {
                let dx = p[0] - center[0];
                let dy = p[1] - center[1];
                let dz = if *planar { T::zero() } else { p[2] - center[2] };
                (dx * dx + dy * dy + dz * dz).sqrt()
            }
            Singular::Line { axis } => {
                let dx = p[0] - axis[0];
                let dy = p[1] - axis[1];
                (dx * dx + dy * dy).sqrt()
            }
            Singular::PositiveXCut => {
                if p[0] >= T::zero() {
                    p[1].abs()
                } else {
                    (p[0] * p[0] + p[1] * p[1]).sqrt()
                }
            }
            Singular::Plane { axis, offset } => (p[*axis] - *offset).abs(),
        }
    }

    /// The same set translated by `d`. The cut is anchored at the origin and is not moved.
    pub fn shifted(&self, d: &V3<T>) -> Self {
        match self {
            Singular::Point { center, planar } => Singular::Point { center: [center[0] + d[0], center[1] + d[1], center[2] + d[2]], planar: *planar },
            Singular::Line { axis } => Singular::Line { axis: [axis[0] + d[0], axis[1] + d[1]] },
            Singular::PositiveXCut => Singular::PositiveXCut,
            Singular::Plane { axis, offset } => Singular::Plane { axis: *axis, offset: *offset + d[*axis] },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct SingularSet<T> {
    pub items: Vec<Singular<T>>,
}

impl<T: Primitive> SingularSet<T> {
    pub fn none() -> Self {
        SingularSet { items: Vec::new() }
    }
    pub fn planar_origin() -> Self {
        SingularSet { items: vec![Singular::Point { center: [T::zero(); 3], planar: true }] }
    }
    pub fn z_axis() -> Self {
        SingularSet { items: vec![Singular::Line { axis: [T::zero(); 2] }] }
    }
    pub fn with(mut self, s: Singular<T>) -> Self {
        self.items.push(s);
        self
    }
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }
    pub fn shifted(&self, d: &V3<T>) -> Self {
        SingularSet { items: self.items.iter().map(|s| s.shifted(d)).collect() }
    }
    pub fn distance(&self, p: &V3<T>) -> T {
        self.items.iter().map(|s| s.distance(p)).fold(T::infinity(), |a, b| a.min(b))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Exclusion<T> {
    Ball { center: V3<T>, radius: T },
    /// Vertical cylinder about the line through (x, y) = axis.
    Cylinder { axis: [T; 2], radius: T },
}

impl<T: Primitive> Exclusion<T> {
    pub fn contains(&self, p: &V3<T>, dim: usize) -> bool {
        match self {
            Exclusion::Ball { center, radius } => {
                let mut d2 = T::zero();
                for k in 0..dim {
                    d2 += (p[k] - center[k]) * (p[k] - center[k]);
                }
                d2 < *radius * *radius
            }
            Exclusion::Cylinder { axis, radius } => {
                let dx = p[0] - axis[0];
                let dy = p[1] - axis[1];
                dx * dx + dy * dy < *radius * *radius
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec<T> {
    pub dimension: usize,
    pub extents: Vec<(T, T)>,
    pub points_per_axis: usize,
    pub excluded_regions: Vec<Exclusion<T>>,
}

impl<T: Primitive> GridSpec<T> {
    pub fn new(dimension: usize, extents: Vec<(T, T)>, points_per_axis: usize) -> Result<Self> {
        let g = GridSpec { dimension, extents, points_per_axis, excluded_regions: Vec::new() };
        g.validate()?;
        Ok(g)
    }

    /// Cube [−half, half]^dim.
    pub fn cube(dimension: usize, half: T, points_per_axis: usize) -> Result<Self> {
        Self::new(dimension, vec![(-half, half); dimension], points_per_axis)
    }

    pub fn exclude(mut self, e: Exclusion<T>) -> Result<Self> {
        self.excluded_regions.push(e);
        self.validate()?;
        Ok(self)
    }

    /// Exclude an ε-neighbourhood of each singular item (cuts are not excluded).
    pub fn exclude_singular(mut self, set: &SingularSet<T>, eps: T) -> Result<Self> {
        for s in &set.items {
            match s {
                Singular::Point { center, .. } => {
                    self.excluded_regions.push(Exclusion::Ball { center: *center, radius: eps })
                }
                Singular::Line { axis } => self.excluded_regions.push(Exclusion::Cylinder { axis: *axis, radius: eps }),
                Singular::PositiveXCut | Singular::Plane { .. } => {}
            }
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=3).contains(&self.dimension) || self.extents.len() != self.dimension {
            return Err(Error::InvalidInput("grid dimension must be 1, 2 or 3 with one extent per axis".into()));
        }
        if self.points_per_axis < 8 {
            return Err(Error::InvalidInput("grid needs at least 8 points per axis".into()));
        }
        for &(lo, hi) in &self.extents {
            if !(lo < hi) {
                return Err(Error::InvalidInput("grid extents must satisfy lower < upper".into()));
            }
        }
        for e in &self.excluded_regions {
            let inside = match e {
                Exclusion::Ball { center, .. } => (0..self.dimension).all(|k| {
                    center[k] >= self.extents[k].0 && center[k] <= self.extents[k].1
                }),
                Exclusion::Cylinder { axis, .. } => (0..self.dimension.min(2)).all(|k| {
                    axis[k] >= self.extents[k].0 && axis[k] <= self.extents[k].1
                }),
            };
            if !inside {
                return Err(Error::InvalidInput("excluded region lies outside the grid extents".into()));
            }
        }
        Ok(())
    }

    fn axis(&self, k: usize) -> Vec<T> {
        let (lo, hi) = self.extents[k];
        let n = self.points_per_axis;
        (0..n).map(|i| lo + (hi - lo) * from_usize::<T>(i) / from_usize::<T>(n - 1)).collect()
    }

    /// All grid points outside the excluded regions.
    pub fn points(&self) -> Vec<V3<T>> {
        let axes: Vec<Vec<T>> = (0..self.dimension).map(|k| self.axis(k)).collect();
        let mut out = Vec::new();
        let n = self.points_per_axis;
        let total = n.pow(self.dimension as u32);
        for idx in 0..total {
            let mut p = [T::zero(); 3];
            let mut r = idx;
            for (k, ax) in axes.iter().enumerate() {
                p[k] = ax[r % n];
                r /= n;
            }
            if !self.excluded_regions.iter().any(|e| e.contains(&p, self.dimension)) {
                out.push(p);
            }
        }
        out
    }

    /// Largest radius among excluded regions (reported alongside residuals).
    pub fn excluded_radius(&self) -> T {
        self.excluded_regions
            .iter()
            .map(|e| match e {
                Exclusion::Ball { radius, .. } | Exclusion::Cylinder { radius, .. } => *radius,
            })
            .fold(T::zero(), |a, b| a.max(b))
    }

    pub fn cell_volume(&self) -> T {
        let n = from_usize::<T>(self.points_per_axis - 1);
        self.extents.iter().fold(T::one(), |v, &(lo, hi)| v * (hi - lo) / n)
    }
}

/// Default excluded-radius scan.
pub fn eps_sing_scan<T: Primitive>() -> [T; 3] {
    [lit(1e-2), lit(1e-3), lit(1e-4)]
}

/// Default excluded radius.
pub fn eps_sing_default<T: Primitive>() -> T {
    lit(1e-3)
}
