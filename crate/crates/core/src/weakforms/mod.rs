//! Weak formulations of the hydrodynamic equations: the (ρ, j) space-time
//! form, the Nelson (u, v) form and the osmotic boundary-value problem.

mod bvp;
mod probe;
mod residual;
mod spacetime;

pub use bvp::{osmotic_bvp_check, BvpReport, BvpRow, MASS_TOL};
pub use probe::{local_l2_probe, L2Probe, PROBE_RADII};
pub use residual::{battery_json, delta_potential_term, gm_weak_residual, nelson_weak_residual, NelsonPotential, NelsonReport, WeakOptions, WeakResidual};
pub use spacetime::{SpaceTimeTerm, SpaceTimeTest, TestJet, TimeProfile};
