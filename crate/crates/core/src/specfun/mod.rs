//! Real-parameter special functions.

pub mod gamma;
pub mod hyper;
pub mod orthopoly;

pub use gamma::{gamma, ln_gamma, pochhammer, rgamma};
pub use hyper::{hyp1f1, hyp1f1_s, kummer_1f1, tricomi_u, tricomi_u_connection, tricomi_u_s, HypergeometricParams};
pub use orthopoly::{laguerre, laguerre_unchecked, legendre_assoc, legendre_assoc_cs, spherical_harmonic, ylm_norm};
