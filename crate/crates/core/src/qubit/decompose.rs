use num_complex::Complex64;
use serde::Serialize;

use super::{gates, DiagonalUnitary2, Mat2, Unitary2};

/// Below this magnitude an off-diagonal (or diagonal) block of the SU(2)
/// part is treated as zero and the undetermined angle combination is fixed
/// by convention. The reconstruction error this introduces is bounded by
/// twice the threshold.
const DEGENERATE_EPS: f64 = 1e-13;

/// `U = e^{iφ} R_Z(γ) R_Y(θ) R_Z(δ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerAngles {
    pub phi: f64,
    pub gamma: f64,
    pub theta: f64,
    pub delta: f64,
}

impl EulerAngles {
    pub fn reconstruct(&self) -> Mat2 {
        (gates::rz(self.gamma) * gates::ry(self.theta) * gates::rz(self.delta))
            .scale(Complex64::from_polar(1.0, self.phi))
    }
}

/// ZYZ Euler decomposition with `θ ∈ [0, π]`.
///
/// `φ` is the unitary's own global phase (`det U = e^{2iφ}`). When `θ = 0`
/// only `γ + δ` is determined and the split is `γ = δ`; when `θ = π` only
/// `γ − δ` is determined and the split is `γ = −δ`.
pub fn euler_decompose(u: &Unitary2) -> EulerAngles {
    let phi = u.phase();
    let su = u.special();
    let (diag, lower) = (su.get(0, 0), su.get(1, 0));
    // su = [[e^{-i(γ+δ)/2} cos θ/2, ·], [e^{i(γ-δ)/2} sin θ/2, ·]]
    let theta = 2.0 * lower.norm().atan2(diag.norm());
    let sum = if diag.norm() < DEGENERATE_EPS { 0.0 } else { -2.0 * diag.arg() };
    let diff = if lower.norm() < DEGENERATE_EPS { 0.0 } else { 2.0 * lower.arg() };
    EulerAngles {
        phi,
        gamma: (sum + diff) / 2.0,
        theta,
        delta: (sum - diff) / 2.0,
    }
}

/// `U_D = e^{iφ'} diag(1, e^{iλ})`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhaseShift {
    pub phi_prime: f64,
    pub lambda: f64,
}

impl PhaseShift {
    pub fn reconstruct(&self) -> Mat2 {
        gates::phase_shift(self.lambda).scale(Complex64::from_polar(1.0, self.phi_prime))
    }
}

/// Writes a diagonal unitary as a phase-shift gate times a global phase.
///
/// With `α = e^{−iδ}` (`δ = −arg α ∈ [−π, π)`), `λ = 2δ` and
/// `φ' = φ − δ`.
pub fn phase_shift_form(u: &DiagonalUnitary2) -> PhaseShift {
    let delta = -u.alpha().arg();
    PhaseShift {
        phi_prime: u.phase() - delta,
        lambda: 2.0 * delta,
    }
}
