//! Hermite-product eigenbasis of the planar oscillator, exact spectral time
//! evolution, and a 1-D split-step Fourier integrator.

mod domain;
mod hermite;
mod polar;
mod splitstep;

pub use domain::{domain_membership_heuristic, DomainReport, DomainScanRow, ScanIntegral, DOMAIN_SCAN};
pub use hermite::{
    basis_index, basis_size, evolve_spectral, hermite_functions, nonsolution_certificate, project_to_hermite, stationarity_defect, CertificateReport, Projection,
    ProjectionOptions, SpectralState, CERTIFICATE_THRESHOLD,
};
pub use splitstep::{
    coherent_state_order, spectral_tail, split_step_evolve_1d, wallstrom_demo, Grid1DState, OrderCheck, SplitStepOptions, Trajectory, WallstromConfig,
    WallstromReport, WallstromRow,
};
