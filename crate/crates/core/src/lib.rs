//! Transmission eigenvalues of a penetrable disk against an artificial
//! background `n_b = ρ/k²`, and their detection from far-field spectra
//! through the inside-outside duality.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod disk_model;
pub mod duality;
pub mod error;
pub mod scalar;
pub mod scaled;
pub mod specfun;
pub mod spectral;
pub mod te_solver;

pub use error::{Error, Result};
pub use scalar::Real;
pub use scaled::{ScaledComplex, ScaledReal};

pub type ScaledF64 = ScaledReal<f64>;
pub type ScaledComplexF64 = ScaledComplex<f64>;

/// Double-precision instantiations.
pub type Medium = disk_model::MediumConfig<f64>;
pub type Coefficients = disk_model::ModeCoefficients<f64>;
pub type Phase = spectral::PhaseRecord<f64>;
pub type Star = spectral::StarTrack<f64>;
pub type Root = te_solver::TERoot<f64>;
pub type Sweep = duality::SweepResult<f64>;
pub type SweepGrid = duality::SweepSpec<f64>;
pub type Detection = duality::DetectedTE<f64>;
pub type Profile = duality::EigenProfile<f64>;
