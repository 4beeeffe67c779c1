//! Simulation library for a thermally seeded nonlinear interferometer.
//!
//! The model is a two-crystal parametric down-conversion interferometer in
//! which the infrared arm may be seeded by thermal radiation while only the
//! visible arm is detected. Three mutually verifying engines compute the
//! visible-mode photon number:
//!
//! * [`interferometer`] — exact closed forms for N_v and the fringe
//!   visibility, plus scan-based extremum location and sensitivities;
//! * [`gaussian`] — a continuous-variable engine evolving quadrature
//!   covariance matrices through symplectic maps;
//! * [`fock`] — a brute-force density-matrix oracle on a truncated Fock
//!   space using dense matrix exponentials.
//!
//! [`blackbody`] supplies thermal occupations and band-integrated detector
//! radiometry, and [`sweeps`] regenerates the reference figures as CSV and
//! runs the cross-engine verification campaign.

pub mod blackbody;
pub mod constants;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod interferometer;
pub mod sweeps;

pub use error::{Error, Result};
pub use interferometer::{InterferometerParams, VisibilityResult};
