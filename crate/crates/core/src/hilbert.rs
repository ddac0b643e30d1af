//! Truncated Hilbert space and elementary operators.
//!
//! The basis is the tensor product of the cavity Fock space (photon numbers
//! `0..=n_ph`) and one qubit per emitter. The Fock index runs slow and the
//! emitter configuration fast: state `|f; s>` sits at index `f * 2^N + s`,
//! where bit `j` of `s` is the excitation of emitter `j`.

use alloc::vec::Vec;

use num_complex::Complex;

use crate::params::ModelParams;
use crate::{CMatrix, Error, Result};

/// Shape of the truncated product space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HilbertSpace {
    pub n_ph: usize,
    pub n_emitters: usize,
    pub dim: usize,
}

impl HilbertSpace {
    pub fn new(n_ph: usize, n_emitters: usize) -> Self {
        Self { n_ph, n_emitters, dim: (n_ph + 1) << n_emitters }
    }

    /// Number of emitter configurations, `2^N`.
    pub fn spin_dim(&self) -> usize {
        1 << self.n_emitters
    }

    /// Basis index of `|fock; spins>`.
    pub fn index(&self, fock: usize, spins: usize) -> usize {
        debug_assert!(fock <= self.n_ph && spins < self.spin_dim());
        fock * self.spin_dim() + spins
    }

    /// Inverse of [`HilbertSpace::index`].
    pub fn split(&self, index: usize) -> (usize, usize) {
        (index / self.spin_dim(), index % self.spin_dim())
    }
}

/// The ladder, spin, and coupling operators on the truncated space.
pub struct OperatorSet {
    pub space: HilbertSpace,
    /// Photon annihilation operator, `<f-1|a|f> = sqrt(f)`.
    pub a: CMatrix,
    /// Photon creation operator.
    pub a_dag: CMatrix,
    /// Raising operator of each emitter.
    pub sigma_plus: Vec<CMatrix>,
    /// Lowering operator of each emitter.
    pub sigma_minus: Vec<CMatrix>,
    /// Cavity-environment coupling operator `X = -i (a - a^dag)`.
    pub x: CMatrix,
}

impl OperatorSet {
    pub fn build(params: &ModelParams) -> Result<Self> {
        params.validate()?;
        let space = HilbertSpace::new(params.n_ph, params.n_emitters);
        let dim = space.dim;
        if dim > params.max_dim {
            return Err(Error::DimensionOverflow { dim, max: params.max_dim });
        }

        let mut a = CMatrix::zeros(dim, dim);
        for f in 1..=space.n_ph {
            let amp = Complex::new(libm::sqrt(f as f64), 0.0);
            for s in 0..space.spin_dim() {
                a[(space.index(f - 1, s), space.index(f, s))] = amp;
            }
        }
        let a_dag = a.adjoint();

        let mut sigma_minus = Vec::with_capacity(space.n_emitters);
        for j in 0..space.n_emitters {
            let bit = 1 << j;
            let mut sm = CMatrix::zeros(dim, dim);
            for f in 0..=space.n_ph {
                for s in 0..space.spin_dim() {
                    if s & bit != 0 {
                        sm[(space.index(f, s & !bit), space.index(f, s))] =
                            Complex::new(1.0, 0.0);
                    }
                }
            }
            sigma_minus.push(sm);
        }
        let sigma_plus: Vec<CMatrix> = sigma_minus.iter().map(CMatrix::adjoint).collect();

        let x = (&a - &a_dag) * Complex::new(0.0, -1.0);

        Ok(Self { space, a, a_dag, sigma_plus, sigma_minus, x })
    }

    /// Total excitation number `a^dag a + sum_j sigma_+ sigma_-`.
    pub fn total_excitations(&self) -> CMatrix {
        let mut n = &self.a_dag * &self.a;
        for (sp, sm) in self.sigma_plus.iter().zip(&self.sigma_minus) {
            n += sp * sm;
        }
        n
    }
}

/// Largest absolute deviation from Hermiticity, relative to the largest entry.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let scale = m.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(1e-300);
    let mut worst = 0.0f64;
    for i in 0..m.nrows() {
        for j in i..m.ncols() {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst / scale
}
