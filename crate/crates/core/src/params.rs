//! Physical and numerical parameters of the driven emitter-cavity model.

use alloc::format;

use crate::{Error, Result};

/// Full parameter set for one simulation point.
///
/// Frequencies, couplings, and temperature are in units of the reference
/// frequency `omega_0 = 1`. `drive` and `drive_prime` are the laser
/// intensities of the corotating and counterrotating photon-laser coupling;
/// `g` and `g_prime` play the same roles for the emitter-cavity coupling.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams {
    /// Number of two-level emitters (1 to 3).
    pub n_emitters: usize,
    /// Cavity mode frequency.
    pub omega_c: f64,
    /// Emitter transition frequency.
    pub omega_x: f64,
    /// Laser drive frequency; the drive period is `2 pi / omega_d`.
    pub omega_d: f64,
    /// Corotating emitter-cavity coupling.
    pub g: f64,
    /// Counterrotating emitter-cavity coupling.
    pub g_prime: f64,
    /// Corotating laser intensity.
    pub drive: f64,
    /// Counterrotating laser intensity.
    pub drive_prime: f64,
    /// Cavity Fock-space truncation: photon numbers `0..=n_ph` are kept.
    pub n_ph: usize,
    /// One-sided Fourier-mode cutoff; modes `-n_fourier..=n_fourier` are kept.
    pub n_fourier: usize,
    /// Time steps per drive period; also the DFT length for mode extraction.
    pub n_steps: usize,
    /// System-environment coupling scale of the Ohmic spectral function.
    pub gamma: f64,
    /// Environment temperature (energy units).
    pub temperature: f64,
    /// Include the Lamb-shift terms of the master equation.
    pub lamb_shift: bool,
    /// High-frequency cutoff of the Lamb-shift integral.
    pub cutoff: f64,
    /// Guard against accidentally huge Hilbert spaces.
    pub max_dim: usize,
}

impl ModelParams {
    /// Resonant single-emitter setup (`omega_c = omega_x = omega_d = 1`)
    /// without drive. Callers adjust fields from here.
    pub fn resonant(n_emitters: usize) -> Self {
        Self {
            n_emitters,
            omega_c: 1.0,
            omega_x: 1.0,
            omega_d: 1.0,
            g: 0.5,
            g_prime: 0.0,
            drive: 0.0,
            drive_prime: 0.0,
            n_ph: 10,
            n_fourier: 16,
            n_steps: 128,
            gamma: 1e-3,
            temperature: 0.1,
            lamb_shift: false,
            cutoff: 50.0,
            max_dim: 4096,
        }
    }

    /// Hilbert-space dimension `(n_ph + 1) * 2^N`.
    pub fn dim(&self) -> usize {
        (self.n_ph + 1) << self.n_emitters
    }

    /// Drive period `2 pi / omega_d`.
    pub fn period(&self) -> f64 {
        2.0 * core::f64::consts::PI / self.omega_d
    }

    /// A Fourier window that comfortably covers the undriven sideband indices
    /// `nu_n = (E_n - eps_n) / omega_d` plus drive-induced sidebands, for runs
    /// near resonance. A tighter choice is often possible; the mode-leakage
    /// check catches a window that is too small.
    pub fn auto_fourier(&self) -> usize {
        let span = (self.n_ph + self.n_emitters) as f64
            * self.omega_c.max(self.omega_x).max(1.0)
            / self.omega_d;
        libm::ceil(1.3 * span) as usize + 6
    }

    pub fn validate(&self) -> Result<()> {
        fn nonneg(name: &str, v: f64) -> Result<()> {
            if v.is_finite() && v >= 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParams(format!("{name} must be >= 0, got {v}")))
            }
        }
        if !(1..=3).contains(&self.n_emitters) {
            return Err(Error::InvalidParams(format!(
                "n_emitters must be 1..=3, got {}",
                self.n_emitters
            )));
        }
        nonneg("omega_c", self.omega_c)?;
        nonneg("omega_x", self.omega_x)?;
        nonneg("g", self.g)?;
        nonneg("g_prime", self.g_prime)?;
        nonneg("drive", self.drive)?;
        nonneg("drive_prime", self.drive_prime)?;
        nonneg("gamma", self.gamma)?;
        nonneg("temperature", self.temperature)?;
        nonneg("cutoff", self.cutoff)?;
        if !(self.omega_d.is_finite() && self.omega_d > 0.0) {
            return Err(Error::InvalidParams(format!(
                "omega_d must be > 0 for a periodic drive, got {}",
                self.omega_d
            )));
        }
        if self.n_ph < 1 {
            return Err(Error::InvalidParams("n_ph must be >= 1".into()));
        }
        if self.n_fourier < 1 {
            return Err(Error::InvalidParams("n_fourier must be >= 1".into()));
        }
        if self.n_steps < 4 * self.n_fourier {
            return Err(Error::InvalidParams(format!(
                "n_steps ({}) must be >= 4 * n_fourier ({})",
                self.n_steps,
                4 * self.n_fourier
            )));
        }
        let dim = self.dim();
        if dim > self.max_dim {
            return Err(Error::DimensionOverflow { dim, max: self.max_dim });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resonant_defaults_validate() {
        for n in 1..=3 {
            ModelParams::resonant(n).validate().unwrap();
        }
    }

    #[test]
    fn dimension_arithmetic() {
        let mut p = ModelParams::resonant(1);
        p.n_ph = 1;
        assert_eq!(p.dim(), 4);
        p.n_emitters = 2;
        assert_eq!(p.dim(), 8);
    }

    #[test]
    fn rejects_bad_inputs() {
        let mut p = ModelParams::resonant(1);
        p.g = -0.1;
        assert!(matches!(p.validate(), Err(Error::InvalidParams(_))));

        let mut p = ModelParams::resonant(1);
        p.n_steps = 2 * p.n_fourier;
        assert!(matches!(p.validate(), Err(Error::InvalidParams(_))));

        let mut p = ModelParams::resonant(1);
        p.n_ph = 4000;
        assert!(matches!(p.validate(), Err(Error::DimensionOverflow { .. })));

        let mut p = ModelParams::resonant(1);
        p.n_emitters = 0;
        assert!(p.validate().is_err());
    }
}
