//! Explicit solution families: wave functions, hydrodynamic fields, energies.

pub mod constants;
pub mod families;
pub mod flow;
pub mod labels;
pub mod probe;
pub mod wavefunction;

pub use constants::PhysicalConstants;
pub use families::{
    gaussian_state, hydrogen_state, oscillator2d_nonquantized, oscillator2d_standard, oscillator2d_standard_with, oscillator3d_ground,
    oscillator3d_ground_nelson, phi_a_flow, phi_a_superposition, FamilyKey, Potential,
};
pub use flow::{eps_node_default, FlowFields, FlowJet, JetFn, ScalarFn, VectorFn};
pub use labels::{Angular, Branch, Case, Family, QuantumLabels};
pub use probe::{default_cutoffs, radial_integrability_probe, radial_ode_residual, rayleigh_quotient, IntegrabilityReport, Verdict};
pub use wavefunction::{radial_integral, CustomPsi, RadialProfile, WaveFunction};
