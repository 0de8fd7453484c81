//! Initial pure states and density matrices.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::matrix::ComplexMatrix;
use crate::{Error, Result};

const NORM_TOLERANCE: f64 = 1e-12;

/// Normalized state vector.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Checks `‖amplitudes‖₂ = 1` within 1e-12.
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm = l2_norm(&amplitudes);
        if !((norm - 1.0).abs() <= NORM_TOLERANCE) {
            return Err(Error::NotNormalized { norm });
        }
        Ok(PureState { amplitudes })
    }

    /// Computational basis state `|index⟩` of a `dim`-dimensional space.
    pub fn basis(dim: usize, index: usize) -> Result<Self> {
        if index >= dim {
            return Err(Error::InvalidDimension(dim));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(PureState { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        l2_norm(&self.amplitudes)
    }
}

fn l2_norm(v: &[Complex64]) -> f64 {
    libm::sqrt(v.iter().map(|x| x.norm_sqr()).sum())
}

/// `(|000⟩ + |111⟩)/√2`.
pub fn ghz_state() -> PureState {
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 8];
    let h = core::f64::consts::FRAC_1_SQRT_2;
    amplitudes[0b000] = Complex64::new(h, 0.0);
    amplitudes[0b111] = Complex64::new(h, 0.0);
    PureState { amplitudes }
}

/// `(|100⟩ + |010⟩ + |001⟩)/√3`.
pub fn w_state() -> PureState {
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 8];
    let t = 1.0 / libm::sqrt(3.0);
    for idx in [0b100, 0b010, 0b001] {
        amplitudes[idx] = Complex64::new(t, 0.0);
    }
    PureState { amplitudes }
}

/// Whether a density matrix is expected to have unit trace.
///
/// `Literal` marks the raw output of a Kraus sum that may not be trace
/// preserving; its trace lies in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceContract {
    Unit,
    Literal,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    trace_contract: TraceContract,
}

impl DensityMatrix {
    /// Wraps a matrix without running the (eigenvalue based) checks; use
    /// [`validate_density`] to measure them.
    pub fn new(matrix: ComplexMatrix, trace_contract: TraceContract) -> Self {
        DensityMatrix {
            matrix,
            trace_contract,
        }
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        DensityMatrix {
            matrix: ComplexMatrix::identity(dim).scale(1.0 / dim as f64),
            trace_contract: TraceContract::Unit,
        }
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.matrix
    }

    pub fn trace_contract(&self) -> TraceContract {
        self.trace_contract
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Divides by the trace and marks the result as unit trace.
    pub fn renormalized(&self) -> Result<DensityMatrix> {
        let t = self.trace();
        if !(t > 1e-14) {
            return Err(Error::DegenerateTrace(t));
        }
        Ok(DensityMatrix {
            matrix: self.matrix.scale(1.0 / t),
            trace_contract: TraceContract::Unit,
        })
    }

    /// Convex combination `α·self + (1-α)·other`, keeping `self`'s contract.
    pub fn mix(&self, alpha: f64, other: &DensityMatrix) -> Result<DensityMatrix> {
        let matrix = self
            .matrix
            .scale(alpha)
            .add(&other.matrix.scale(1.0 - alpha))?;
        Ok(DensityMatrix {
            matrix,
            trace_contract: self.trace_contract,
        })
    }
}

/// `|ψ⟩⟨ψ|` for a normalized `ψ`.
pub fn density_from_pure(psi: &PureState) -> Result<DensityMatrix> {
    let norm = psi.norm();
    if !((norm - 1.0).abs() <= NORM_TOLERANCE) {
        return Err(Error::NotNormalized { norm });
    }
    let matrix = ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes())?;
    Ok(DensityMatrix::new(matrix, TraceContract::Unit))
}

/// Measured well-formedness quantities of a density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityDiagnostics {
    pub hermiticity_defect: f64,
    /// Smallest eigenvalue of the Hermitian part; NaN when the matrix is too
    /// far from Hermitian to diagonalize.
    pub min_eigenvalue: f64,
    pub trace: f64,
}

impl DensityDiagnostics {
    /// Checks the invariants for the given contract: Hermitian to 1e-10,
    /// eigenvalues ≥ -1e-9, and the trace rule.
    pub fn is_valid(&self, contract: TraceContract) -> bool {
        let trace_ok = match contract {
            TraceContract::Unit => (self.trace - 1.0).abs() <= 1e-10,
            TraceContract::Literal => self.trace > 0.0 && self.trace <= 1.0 + 1e-10,
        };
        self.hermiticity_defect <= crate::matrix::HERMITICITY_TOLERANCE
            && self.min_eigenvalue >= crate::matrix::NEGATIVE_EIGENVALUE_THRESHOLD
            && trace_ok
    }
}

pub fn validate_density(rho: &DensityMatrix) -> DensityDiagnostics {
    let m = rho.matrix();
    let hermiticity_defect = m.hermiticity_defect();
    let min_eigenvalue = m
        .hermitian_eigenvalues()
        .map(|s| s.min())
        .unwrap_or(f64::NAN);
    DensityDiagnostics {
        hermiticity_defect,
        min_eigenvalue,
        trace: rho.trace(),
    }
}
