//! Madelung and Nelson residuals, vorticity transport and the vector identities
//! used to pass between the hydrodynamic forms.

mod catch;
pub mod equations;
pub mod identities;

pub use equations::*;
pub use identities::*;

use crate::error::{Error, Result};
use crate::numerics::fd::Stencil;
use crate::numerics::grid::GridSpec;
use crate::scalar::{to_f64, Primitive};
use crate::vec3::V3;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointResidual {
    pub point: [f64; 3],
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub equation_tag: String,
    pub max_abs_residual: f64,
    pub l2_residual: f64,
    pub sample_count: usize,
    pub excluded_radius: f64,
    pub per_point: Option<Vec<PointResidual>>,
}

impl ResidualReport {
    /// Reduce per-point residuals; `l2_residual` is (Σ r² ΔV)^{1/2}.
    pub fn from_samples(tag: &str, samples: Vec<PointResidual>, cell_volume: f64, excluded_radius: f64, keep: bool) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::InvalidInput(format!("{tag}: no admissible grid points")));
        }
        let max = samples.iter().fold(0.0f64, |m, s| m.max(s.residual.abs()));
        let l2 = (samples.iter().map(|s| s.residual * s.residual).sum::<f64>() * cell_volume).sqrt();
        Ok(ResidualReport {
            equation_tag: tag.into(),
            max_abs_residual: max,
            l2_residual: l2,
            sample_count: samples.len(),
            excluded_radius,
            per_point: if keep { Some(samples) } else { None },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// How derivatives of the fields are obtained.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DerivMode<T> {
    /// Analytic when the flow provides derivatives, otherwise finite differences with h = 1e-2.
    Auto,
    Analytic,
    FiniteDifference { h: T, stencil: Stencil },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResidualOptions<T> {
    pub mode: DerivMode<T>,
    /// Evaluation time.
    pub t: T,
    pub keep_points: bool,
}

impl<T: Primitive> Default for ResidualOptions<T> {
    fn default() -> Self {
        ResidualOptions { mode: DerivMode::Auto, t: T::zero(), keep_points: false }
    }
}

impl<T: Primitive> ResidualOptions<T> {
    pub fn fd(h: T) -> Self {
        ResidualOptions { mode: DerivMode::FiniteDifference { h, stencil: Stencil::Central4 }, ..Default::default() }
    }
    pub fn analytic() -> Self {
        ResidualOptions { mode: DerivMode::Analytic, ..Default::default() }
    }
    pub fn at_time(mut self, t: T) -> Self {
        self.t = t;
        self
    }
    pub fn keep(mut self) -> Self {
        self.keep_points = true;
        self
    }
}

/// Evaluate `f` on every grid point in parallel. Points where the density
/// vanishes (`NodeEncountered`) are skipped; other errors propagate.
pub(crate) fn sweep<T, F>(grid: &GridSpec<T>, f: F) -> Result<(Vec<PointResidual>, usize)>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<T> + Sync,
{
    let pts = grid.points();
    let res: Vec<Result<Option<PointResidual>>> = pts
        .par_iter()
        .map(|p| match f(p) {
            Ok(r) => Ok(Some(PointResidual { point: crate::vec3::to_f64(*p), residual: to_f64(r) })),
            Err(Error::NodeEncountered { .. }) => Ok(None),
            Err(e) => Err(e),
        })
        .collect();
    let mut out = Vec::with_capacity(res.len());
    let mut skipped = 0;
    for r in res {
        match r? {
            Some(s) => out.push(s),
            None => skipped += 1,
        }
    }
    Ok((out, skipped))
}

pub(crate) fn report<T, F>(tag: &str, grid: &GridSpec<T>, keep: bool, f: F) -> Result<ResidualReport>
where
    T: Primitive,
    F: Fn(&V3<T>) -> Result<T> + Sync,
{
    let (samples, _) = sweep(grid, f)?;
    ResidualReport::from_samples(tag, samples, to_f64(grid.cell_volume()), to_f64(grid.excluded_radius()), keep)
}
