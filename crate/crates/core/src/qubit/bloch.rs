use std::f64::consts::TAU;

use num_complex::Complex64;
use serde::Serialize;

use super::QubitState;

/// Point on the Bloch sphere, `cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BlochPoint {
    pub theta: f64,
    pub phi: f64,
}

impl BlochPoint {
    pub fn to_state(&self) -> QubitState {
        let (s, c) = (self.theta / 2.0).sin_cos();
        QubitState::new(Complex64::new(c, 0.0), Complex64::from_polar(s, self.phi))
            .expect("cos² + sin² = 1")
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn cartesian(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }
}

/// Bloch angles of `psi` modulo its global phase. At the poles `φ = 0`.
pub fn bloch_coordinates(psi: &QubitState) -> BlochPoint {
    let (a, b) = (psi.a(), psi.b());
    let theta = 2.0 * b.norm().atan2(a.norm());
    if a.norm() <= f64::EPSILON || b.norm() <= f64::EPSILON {
        return BlochPoint { theta, phi: 0.0 };
    }
    let phi = (b.arg() - a.arg()).rem_euclid(TAU);
    // rem_euclid may round up to exactly TAU
    let phi = if phi >= TAU { 0.0 } else { phi };
    BlochPoint { theta, phi }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    #[test]
    fn poles() {
        assert_eq!(bloch_coordinates(&QubitState::zero()), BlochPoint { theta: 0.0, phi: 0.0 });
        assert_eq!(bloch_coordinates(&QubitState::one()), BlochPoint { theta: PI, phi: 0.0 });
    }

    #[test]
    fn equator_state() {
        let psi = QubitState::new(Complex64::new(FRAC_1_SQRT_2, 0.0), Complex64::new(0.0, FRAC_1_SQRT_2)).unwrap();
        let p = bloch_coordinates(&psi);
        assert!((p.theta - FRAC_PI_2).abs() < 1e-15);
        assert!((p.phi - FRAC_PI_2).abs() < 1e-15);
        assert!((psi.inner(&p.to_state()).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn global_phase_is_ignored() {
        let g = Complex64::from_polar(1.0, 2.1);
        let psi = QubitState::new(g * 0.6, g * Complex64::new(0.0, -0.8)).unwrap();
        let p = bloch_coordinates(&psi);
        assert!((p.phi - 3.0 * FRAC_PI_2).abs() < 1e-12);
        assert!((psi.inner(&p.to_state()).norm() - 1.0).abs() < 1e-12);
        let [x, y, z] = p.cartesian();
        assert!((x * x + y * y + z * z - 1.0).abs() < 1e-15);
    }
}
