//! One-qubit state and operator algebra.
//!
//! States are normalized amplitude pairs over the computational basis
//! `|0⟩, |1⟩`. Operators are plain 2×2 complex matrices wrapped in
//! role-specific newtypes ([`Unitary2`], [`DiagonalUnitary2`], [`Projector2`])
//! that check their defining identity at construction.

mod bloch;
mod decompose;
mod matrix;
mod measure;
mod state;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bloch::{bloch_coordinates, BlochPoint};
pub use decompose::{euler_decompose, phase_shift_form, EulerAngles, PhaseShift};
pub use matrix::{gates, DiagonalUnitary2, Mat2, Projector2, Unitary2};
pub use measure::{
    collapse, dual_basis_mirror, fuzzy_measure, liar_inverse, liar_measure, mirror_inverse,
    mirror_measure, project, projective_after_mirror, projective_measure, projective_measure_with,
    MeasurementRecord,
};
pub use state::{normalize, QubitState};

/// Complex amplitude / matrix entry.
pub type ComplexScalar = num_complex::Complex64;

/// Tolerance for construction-time invariants (normalization, unitarity,
/// idempotence).
pub const INVARIANT_TOL: f64 = 1e-12;

/// Tolerance for decomposition round trips, which accumulate trig error.
pub const DECOMPOSITION_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QubitError {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("state is not normalized: |a|^2 + |b|^2 = {norm_sq}")]
    NotNormalized { norm_sq: f64 },
    #[error("matrix is not unitary: max |U†U - I| = {residual:e}")]
    NotUnitary { residual: f64 },
    #[error("diagonal entry is not unit modulus: |alpha|^2 = {modulus_sq}")]
    NotUnitModulus { modulus_sq: f64 },
    #[error("matrix is not an orthogonal projector: residual {residual:e}")]
    NotProjector { residual: f64 },
    #[error("basis index must be 0 or 1, got {0}")]
    InvalidBasisIndex(u64),
    #[error("outcome {0} has zero probability")]
    ZeroProbability(Basis),
}

/// Computational-basis index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u64")]
pub enum Basis {
    Zero,
    One,
}

impl Basis {
    pub fn index(self) -> usize {
        match self {
            Basis::Zero => 0,
            Basis::One => 1,
        }
    }

    pub fn flip(self) -> Basis {
        match self {
            Basis::Zero => Basis::One,
            Basis::One => Basis::Zero,
        }
    }
}

impl From<Basis> for u8 {
    fn from(b: Basis) -> u8 {
        b.index() as u8
    }
}

impl TryFrom<u64> for Basis {
    type Error = QubitError;

    fn try_from(i: u64) -> Result<Self, Self::Error> {
        match i {
            0 => Ok(Basis::Zero),
            1 => Ok(Basis::One),
            other => Err(QubitError::InvalidBasisIndex(other)),
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

pub(crate) fn check_finite(z: ComplexScalar, what: &'static str) -> Result<(), QubitError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(QubitError::NonFinite(what))
    }
}
