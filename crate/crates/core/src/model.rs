//! Dicke and laser Hamiltonians and the system-energy spectrum.

use alloc::vec::Vec;

use num_complex::Complex;

use crate::hilbert::{hermiticity_defect, OperatorSet};
use crate::linalg::{hermitian_eigen, phase_fix_columns};
use crate::params::ModelParams;
use crate::{C64, CMatrix, RVector, Result};

/// Gap below which eigenvalues are treated as degenerate when stabilizing
/// eigenvectors, in units of `omega_0`.
pub const DEGENERACY_GAP: f64 = 1e-9;

/// The static Dicke Hamiltonian
/// `H_D = omega_c a^dag a + omega_x sum_j s+_j s-_j
///        + g sum_j (a^dag s-_j + a s+_j) + g' sum_j (a s-_j + a^dag s+_j)`.
pub fn dicke_hamiltonian(params: &ModelParams, ops: &OperatorSet) -> CMatrix {
    let dim = ops.space.dim;
    let mut h = &ops.a_dag * &ops.a * Complex::new(params.omega_c, 0.0);
    for j in 0..params.n_emitters {
        h += &ops.sigma_plus[j] * &ops.sigma_minus[j] * Complex::new(params.omega_x, 0.0);
        h += (&ops.a_dag * &ops.sigma_minus[j] + &ops.a * &ops.sigma_plus[j])
            * Complex::new(params.g, 0.0);
        h += (&ops.a * &ops.sigma_minus[j] + &ops.a_dag * &ops.sigma_plus[j])
            * Complex::new(params.g_prime, 0.0);
    }
    debug_assert_eq!(h.nrows(), dim);
    debug_assert!(hermiticity_defect(&h) < 1e-12);
    h
}

/// Complex amplitude `z(t)` such that `H_L(t) = z(t) a + conj(z(t)) a^dag`:
/// `z(t) = (drive/2) e^{i w_d t} + (drive'/2) e^{-i w_d t}`.
pub fn laser_coefficient(params: &ModelParams, t: f64) -> C64 {
    let phase = params.omega_d * t;
    Complex::from_polar(0.5 * params.drive, phase)
        + Complex::from_polar(0.5 * params.drive_prime, -phase)
}

/// The time-dependent laser Hamiltonian at time `t`.
pub fn laser_hamiltonian(params: &ModelParams, ops: &OperatorSet, t: f64) -> CMatrix {
    let z = laser_coefficient(params, t);
    &ops.a * z + &ops.a_dag * z.conj()
}

/// `H(t) = H_D + H_L(t)` assembled without rebuilding the static part.
pub fn hamiltonian_at(params: &ModelParams, ops: &OperatorSet, h_d: &CMatrix, t: f64) -> CMatrix {
    let z = laser_coefficient(params, t);
    h_d + &ops.a * z + &ops.a_dag * z.conj()
}

/// Eigenvalues and eigenvectors of a Hermitian system Hamiltonian.
///
/// Eigenvalues ascend; within degenerate clusters (gap below
/// [`DEGENERACY_GAP`]) the eigenvectors are re-orthonormalized and each
/// column's phase is fixed so its largest component is real positive,
/// giving a reproducible labeling.
pub struct SystemEigen {
    pub energies: RVector,
    pub vectors: CMatrix,
}

pub fn system_energies(h: &CMatrix) -> Result<SystemEigen> {
    let (energies, mut vectors) = hermitian_eigen(h)?;

    // Re-orthonormalize degenerate clusters: the eigensolver already returns
    // orthonormal columns, but within a cluster rounding can leave a small
    // mutual overlap that Gram-Schmidt removes deterministically.
    let n = energies.len();
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && energies[end] - energies[end - 1] < DEGENERACY_GAP {
            end += 1;
        }
        if end - start > 1 {
            for k in start..end {
                let mut col = vectors.column(k).into_owned();
                for j in start..k {
                    let proj = vectors.column(j).adjoint() * &col;
                    col -= vectors.column(j).into_owned() * proj[(0, 0)];
                }
                let norm = col.norm();
                col /= Complex::new(norm, 0.0);
                vectors.set_column(k, &col);
            }
        }
        start = end;
    }
    phase_fix_columns(&mut vectors);
    Ok(SystemEigen { energies, vectors })
}

impl SystemEigen {
    /// Worst eigen-residual `|H v - E v|` over all pairs.
    pub fn max_residual(&self, h: &CMatrix) -> f64 {
        let mut worst = 0.0f64;
        for k in 0..self.energies.len() {
            let v = self.vectors.column(k).into_owned();
            let r = h * &v - &v * Complex::new(self.energies[k], 0.0);
            worst = worst.max(r.norm());
        }
        worst
    }
}

/// Jaynes-Cummings energies for one emitter at resonance in the
/// rotating-wave approximation: the ground state plus doublets
/// `n omega_0 +- sqrt(n) g` for each excitation manifold `n >= 1`.
pub fn jaynes_cummings_energies(omega_0: f64, g: f64, n_max: usize) -> Vec<f64> {
    let mut e = Vec::with_capacity(2 * n_max + 1);
    e.push(0.0);
    for n in 1..=n_max {
        let split = libm::sqrt(n as f64) * g;
        e.push(n as f64 * omega_0 - split);
        e.push(n as f64 * omega_0 + split);
    }
    e.sort_by(f64::total_cmp);
    e
}
