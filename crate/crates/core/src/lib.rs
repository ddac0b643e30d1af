//! Dissipative dynamics of laser-driven two-level emitters in a cavity.
//!
//! The crate computes Floquet quasienergy spectra, photon emission spectra,
//! Glauber correlation functions, and emitter-emitter entanglement for up to
//! three emitters coupled to a single cavity mode and a thermal environment.
//! The drive makes the Hamiltonian time-periodic, so the dissipative evolution
//! is formulated in the Floquet basis, where the secular master equation has
//! constant coefficients: populations follow a classical rate (Pauli) equation
//! and coherences decay exponentially.
//!
//! All frequencies and energies are expressed in units of a reference
//! frequency `omega_0` (set to one), times in `1/omega_0`, and `hbar = k_B = 1`.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); file I/O, the
//! command line, and parallel sweeps live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bath;
pub mod entangle;
pub mod floquet;
pub mod glauber;
pub mod hilbert;
pub mod linalg;
pub mod model;
pub mod output;
pub mod params;
pub mod pipeline;
pub mod propagator;
pub mod tc;

use alloc::string::String;

pub use num_complex::Complex;

/// Double-precision complex scalar used throughout.
pub type C64 = Complex<f64>;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex vector.
pub type CVector = nalgebra::DVector<C64>;
/// Dense real matrix.
pub type RMatrix = nalgebra::DMatrix<f64>;
/// Dense real vector.
pub type RVector = nalgebra::DVector<f64>;

/// Errors produced by the simulation routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("Hilbert dimension {dim} exceeds the configured maximum {max}")]
    DimensionOverflow { dim: usize, max: usize },
    #[error("eigensolver did not converge")]
    EigenConvergence,
    #[error("unitarity defect {defect:.3e} exceeds {tol:.3e}; increase n_steps")]
    UnitarityDrift { defect: f64, tol: f64 },
    #[error("Fourier weight {weight:.3e} outside the mode window exceeds {tol:.1e}; increase n_fourier")]
    FourierCutoff { weight: f64, tol: f64 },
    #[error("quadrature did not converge ({0})")]
    Quadrature(String),
    #[error("stationary state is not unique: kernel dimension {kernel_dim}")]
    NonUniqueStationary { kernel_dim: usize },
    #[error("propagation time must be non-negative, got {0}")]
    NegativeTime(f64),
    #[error("output flux is numerically zero; correlation functions are undefined")]
    DarkSystem,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = core::result::Result<T, Error>;
