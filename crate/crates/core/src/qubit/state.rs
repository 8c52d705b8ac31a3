use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_finite, Basis, ComplexScalar, Mat2, QubitError, INVARIANT_TOL};

/// Normalized qubit `a|0⟩ + b|1⟩`.
///
/// Serialized as `{ "a": [re, im], "b": [re, im] }`; deserialization
/// rejects unnormalized pairs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawState")]
pub struct QubitState {
    a: ComplexScalar,
    b: ComplexScalar,
}

#[derive(Deserialize)]
struct RawState {
    a: ComplexScalar,
    b: ComplexScalar,
}

impl TryFrom<RawState> for QubitState {
    type Error = QubitError;

    fn try_from(raw: RawState) -> Result<Self, Self::Error> {
        QubitState::new(raw.a, raw.b)
    }
}

impl QubitState {
    /// Requires `|a|² + |b|² = 1` within [`INVARIANT_TOL`].
    pub fn new(a: ComplexScalar, b: ComplexScalar) -> Result<Self, QubitError> {
        check_finite(a, "amplitude a")?;
        check_finite(b, "amplitude b")?;
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if (norm_sq - 1.0).abs() > INVARIANT_TOL {
            return Err(QubitError::NotNormalized { norm_sq });
        }
        Ok(QubitState { a, b })
    }

    pub fn from_real(a: f64, b: f64) -> Result<Self, QubitError> {
        QubitState::new(Complex64::new(a, 0.0), Complex64::new(b, 0.0))
    }

    pub fn zero() -> Self {
        QubitState::basis(Basis::Zero)
    }

    pub fn one() -> Self {
        QubitState::basis(Basis::One)
    }

    pub fn basis(i: Basis) -> Self {
        let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        match i {
            Basis::Zero => QubitState { a: one, b: zero },
            Basis::One => QubitState { a: zero, b: one },
        }
    }

    /// `|+⟩ = (|0⟩ + |1⟩)/√2`.
    pub fn plus() -> Self {
        let h = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        QubitState { a: h, b: h }
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn b(&self) -> ComplexScalar {
        self.b
    }

    pub fn amplitudes(&self) -> [ComplexScalar; 2] {
        [self.a, self.b]
    }

    pub fn amplitude(&self, i: Basis) -> ComplexScalar {
        self.amplitudes()[i.index()]
    }

    /// `(|a|², |b|²)`.
    pub fn probabilities(&self) -> [f64; 2] {
        [self.a.norm_sqr(), self.b.norm_sqr()]
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QubitState) -> ComplexScalar {
        self.a.conj() * other.a + self.b.conj() * other.b
    }

    /// Largest componentwise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &QubitState) -> f64 {
        (self.a - other.a).norm().max((self.b - other.b).norm())
    }

    /// Apply a matrix that is known to preserve the norm. The result is
    /// renormalized to absorb rounding.
    pub(crate) fn evolve(&self, m: &Mat2) -> QubitState {
        let [a, b] = m.apply(self.amplitudes());
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        QubitState { a: a / n, b: b / n }
    }
}

/// Rescales `(a, b)` to unit norm, keeping its direction.
pub fn normalize(a: ComplexScalar, b: ComplexScalar) -> Result<QubitState, QubitError> {
    check_finite(a, "amplitude a")?;
    check_finite(b, "amplitude b")?;
    let norm = a.norm().hypot(b.norm());
    if norm == 0.0 {
        return Err(QubitError::ZeroVector);
    }
    if !norm.is_finite() {
        return Err(QubitError::NonFinite("norm"));
    }
    QubitState::new(a / norm, b / norm)
}
