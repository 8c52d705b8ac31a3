use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{check_finite, ComplexScalar, QubitError, INVARIANT_TOL};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A 2×2 complex matrix, row-major.
///
/// Serialized as `{ "rows": [[[re, im], [re, im]], [[re, im], [re, im]]] }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMat2")]
pub struct Mat2 {
    rows: [[ComplexScalar; 2]; 2],
}

#[derive(Deserialize)]
struct RawMat2 {
    rows: [[ComplexScalar; 2]; 2],
}

impl TryFrom<RawMat2> for Mat2 {
    type Error = QubitError;

    fn try_from(raw: RawMat2) -> Result<Self, Self::Error> {
        Mat2::from_rows(raw.rows)
    }
}

impl Mat2 {
    pub fn from_rows(rows: [[ComplexScalar; 2]; 2]) -> Result<Self, QubitError> {
        for z in rows.iter().flatten() {
            check_finite(*z, "matrix entry")?;
        }
        Ok(Mat2 { rows })
    }

    pub(crate) const fn new_unchecked(rows: [[ComplexScalar; 2]; 2]) -> Self {
        Mat2 { rows }
    }

    pub fn new(
        e00: ComplexScalar,
        e01: ComplexScalar,
        e10: ComplexScalar,
        e11: ComplexScalar,
    ) -> Result<Self, QubitError> {
        Mat2::from_rows([[e00, e01], [e10, e11]])
    }

    pub const fn identity() -> Self {
        Mat2::new_unchecked([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn zero() -> Self {
        Mat2::new_unchecked([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub fn diag(d0: ComplexScalar, d1: ComplexScalar) -> Self {
        Mat2::new_unchecked([[d0, ZERO], [ZERO, d1]])
    }

    pub fn rows(&self) -> &[[ComplexScalar; 2]; 2] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> ComplexScalar {
        self.rows[r][c]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        let m = &self.rows;
        Mat2::new_unchecked([
            [m[0][0].conj(), m[1][0].conj()],
            [m[0][1].conj(), m[1][1].conj()],
        ])
    }

    pub fn det(&self) -> ComplexScalar {
        let m = &self.rows;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn scale(&self, s: ComplexScalar) -> Mat2 {
        let mut rows = self.rows;
        rows.iter_mut().flatten().for_each(|z| *z *= s);
        Mat2::new_unchecked(rows)
    }

    pub fn apply(&self, v: [ComplexScalar; 2]) -> [ComplexScalar; 2] {
        let m = &self.rows;
        [
            m[0][0] * v[0] + m[0][1] * v[1],
            m[1][0] * v[0] + m[1][1] * v[1],
        ]
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        self.rows
            .iter()
            .flatten()
            .zip(other.rows.iter().flatten())
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entrywise deviation of `U†U` from the identity.
    pub fn unitarity_residual(&self) -> f64 {
        (self.adjoint() * *self).max_abs_diff(&Mat2::identity())
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.rows, &rhs.rows);
        let mut out = [[ZERO; 2]; 2];
        for (r, row) in out.iter_mut().enumerate() {
            for (c, e) in row.iter_mut().enumerate() {
                *e = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Mat2::new_unchecked(out)
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = self.rows;
        for (z, w) in out.iter_mut().flatten().zip(rhs.rows.iter().flatten()) {
            *z += w;
        }
        Mat2::new_unchecked(out)
    }
}

impl Sub for Mat2 {
    type Output = Mat2;

    fn sub(self, rhs: Mat2) -> Mat2 {
        self + rhs.scale(-ONE)
    }
}

/// General one-qubit unitary `e^{iφ} [[α, β], [-β*, α*]]` with
/// `|α|² + |β|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    m: Mat2,
    phase: f64,
}

impl Unitary2 {
    pub fn new(alpha: ComplexScalar, beta: ComplexScalar, phase: f64) -> Result<Self, QubitError> {
        check_finite(alpha, "alpha")?;
        check_finite(beta, "beta")?;
        if !phase.is_finite() {
            return Err(QubitError::NonFinite("phase"));
        }
        let norm_sq = alpha.norm_sqr() + beta.norm_sqr();
        if (norm_sq - 1.0).abs() > INVARIANT_TOL {
            return Err(QubitError::NotUnitary {
                residual: (norm_sq - 1.0).abs(),
            });
        }
        let su = Mat2::new_unchecked([[alpha, beta], [-beta.conj(), alpha.conj()]]);
        Ok(Unitary2 {
            m: su.scale(Complex64::from_polar(1.0, phase)),
            phase,
        })
    }

    /// Wraps an arbitrary unitary matrix. The global phase is read off the
    /// determinant, `det U = e^{2iφ}`, taking `φ ∈ (-π/2, π/2]`.
    pub fn from_matrix(m: Mat2) -> Result<Self, QubitError> {
        let residual = m.unitarity_residual();
        if residual.is_nan() || residual > INVARIANT_TOL {
            return Err(QubitError::NotUnitary { residual });
        }
        // + 0.0 turns a -0.0 imaginary part into +0.0, keeping arg in (-pi, pi]
        let d = m.det();
        let phase = ComplexScalar::new(d.re, d.im + 0.0).arg() / 2.0;
        Ok(Unitary2 { m, phase })
    }

    pub fn identity() -> Self {
        Unitary2 {
            m: Mat2::identity(),
            phase: 0.0,
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    /// SU(2) part `e^{-iφ} U`.
    pub fn special(&self) -> Mat2 {
        self.m.scale(Complex64::from_polar(1.0, -self.phase))
    }

    pub fn alpha(&self) -> ComplexScalar {
        self.special().get(0, 0)
    }

    pub fn beta(&self) -> ComplexScalar {
        self.special().get(0, 1)
    }
}

impl From<DiagonalUnitary2> for Unitary2 {
    fn from(d: DiagonalUnitary2) -> Self {
        Unitary2 {
            m: d.matrix(),
            phase: d.phase,
        }
    }
}

/// Diagonal unitary `e^{iφ} diag(α, α*)` with `|α| = 1`; the operator of a
/// mirror measurement.
///
/// Serialized as `{ "alpha": [re, im], "phi": φ }`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDiagonal")]
pub struct DiagonalUnitary2 {
    alpha: ComplexScalar,
    #[serde(rename = "phi")]
    phase: f64,
}

#[derive(Deserialize)]
struct RawDiagonal {
    alpha: ComplexScalar,
    phi: f64,
}

impl TryFrom<RawDiagonal> for DiagonalUnitary2 {
    type Error = QubitError;

    fn try_from(raw: RawDiagonal) -> Result<Self, Self::Error> {
        DiagonalUnitary2::new(raw.alpha, raw.phi)
    }
}

impl DiagonalUnitary2 {
    pub fn new(alpha: ComplexScalar, phase: f64) -> Result<Self, QubitError> {
        check_finite(alpha, "alpha")?;
        if !phase.is_finite() {
            return Err(QubitError::NonFinite("phase"));
        }
        let modulus_sq = alpha.norm_sqr();
        if (modulus_sq - 1.0).abs() > INVARIANT_TOL {
            return Err(QubitError::NotUnitModulus { modulus_sq });
        }
        Ok(DiagonalUnitary2 { alpha, phase })
    }

    /// `α = e^{i·alpha_arg}`.
    pub fn from_angles(alpha_arg: f64, phase: f64) -> Result<Self, QubitError> {
        DiagonalUnitary2::new(Complex64::from_polar(1.0, alpha_arg), phase)
    }

    pub fn identity() -> Self {
        DiagonalUnitary2 {
            alpha: ONE,
            phase: 0.0,
        }
    }

    pub fn alpha(&self) -> ComplexScalar {
        self.alpha
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn matrix(&self) -> Mat2 {
        let g = Complex64::from_polar(1.0, self.phase);
        Mat2::diag(g * self.alpha, g * self.alpha.conj())
    }

    /// `e^{iφ}(α P0 + α* P1)`, the same operator written as a superposition
    /// of the two computational-basis projectors.
    pub fn as_projector_superposition(&self) -> Mat2 {
        let g = Complex64::from_polar(1.0, self.phase);
        (Projector2::p0().matrix().scale(self.alpha) + Projector2::p1().matrix().scale(self.alpha.conj()))
            .scale(g)
    }

    pub fn inverse(&self) -> DiagonalUnitary2 {
        DiagonalUnitary2 {
            alpha: self.alpha.conj(),
            phase: -self.phase,
        }
    }
}

/// Orthogonal projector: `P² = P`, `P† = P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Projector2 {
    m: Mat2,
}

impl Projector2 {
    pub fn new(m: Mat2) -> Result<Self, QubitError> {
        let residual = (m * m)
            .max_abs_diff(&m)
            .max(m.adjoint().max_abs_diff(&m));
        if residual.is_nan() || residual > INVARIANT_TOL {
            return Err(QubitError::NotProjector { residual });
        }
        Ok(Projector2 { m })
    }

    pub fn p0() -> Self {
        Projector2 {
            m: Mat2::diag(ONE, ZERO),
        }
    }

    pub fn p1() -> Self {
        Projector2 {
            m: Mat2::diag(ZERO, ONE),
        }
    }

    pub fn computational(i: super::Basis) -> Self {
        match i {
            super::Basis::Zero => Projector2::p0(),
            super::Basis::One => Projector2::p1(),
        }
    }

    /// `H P0 H⁻¹`, projector onto `|+⟩`.
    pub fn plus() -> Self {
        let h = gates::hadamard();
        Projector2 {
            m: h * Projector2::p0().m * h,
        }
    }

    /// `H P1 H⁻¹`, projector onto `|−⟩`.
    pub fn minus() -> Self {
        let h = gates::hadamard();
        Projector2 {
            m: h * Projector2::p1().m * h,
        }
    }

    pub fn matrix(&self) -> &Mat2 {
        &self.m
    }
}

/// Fixed one-qubit gates and rotations.
pub mod gates {
    use std::f64::consts::FRAC_1_SQRT_2;

    use num_complex::Complex64;

    use super::{Mat2, ONE, ZERO};

    const I: Complex64 = Complex64::new(0.0, 1.0);

    pub fn hadamard() -> Mat2 {
        let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
        Mat2::new_unchecked([[h, h], [h, -h]])
    }

    /// Classical NOT, Pauli X.
    pub fn not() -> Mat2 {
        Mat2::new_unchecked([[ZERO, ONE], [ONE, ZERO]])
    }

    pub fn pauli_x() -> Mat2 {
        not()
    }

    pub fn pauli_y() -> Mat2 {
        Mat2::new_unchecked([[ZERO, -I], [I, ZERO]])
    }

    pub fn pauli_z() -> Mat2 {
        Mat2::new_unchecked([[ONE, ZERO], [ZERO, -ONE]])
    }

    /// `Q0 = NOT·P0`; sends `|0⟩` to `|1⟩` and annihilates `|1⟩`.
    pub fn q0() -> Mat2 {
        not() * *super::Projector2::p0().matrix()
    }

    /// `Q1 = NOT·P1`; sends `|1⟩` to `|0⟩` and annihilates `|0⟩`.
    pub fn q1() -> Mat2 {
        not() * *super::Projector2::p1().matrix()
    }

    /// `R_Z(δ) = diag(e^{-iδ/2}, e^{iδ/2})`.
    pub fn rz(angle: f64) -> Mat2 {
        Mat2::diag(
            Complex64::from_polar(1.0, -angle / 2.0),
            Complex64::from_polar(1.0, angle / 2.0),
        )
    }

    /// `R_Y(θ) = [[cos θ/2, -sin θ/2], [sin θ/2, cos θ/2]]`.
    pub fn ry(angle: f64) -> Mat2 {
        let (s, c) = (angle / 2.0).sin_cos();
        Mat2::new_unchecked([
            [Complex64::new(c, 0.0), Complex64::new(-s, 0.0)],
            [Complex64::new(s, 0.0), Complex64::new(c, 0.0)],
        ])
    }

    /// Phase-shift gate `diag(1, e^{iλ})`.
    pub fn phase_shift(lambda: f64) -> Mat2 {
        Mat2::diag(ONE, Complex64::from_polar(1.0, lambda))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubit::Basis;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn projector_algebra_is_exact() {
        let (p0, p1) = (*Projector2::p0().matrix(), *Projector2::p1().matrix());
        assert_eq!(p0 * p1, Mat2::zero());
        assert_eq!(p1 * p0, Mat2::zero());
        assert_eq!(p0 * p0, p0);
        assert_eq!(p1 * p1, p1);
        assert_eq!(p0 + p1, Mat2::identity());
        assert_eq!(p0.adjoint(), p0);
        assert_eq!(p1.adjoint(), p1);
    }

    #[test]
    fn q_operators_exchange_truth_values() {
        let (q0, q1) = (gates::q0(), gates::q1());
        let ket0 = [ONE, ZERO];
        let ket1 = [ZERO, ONE];
        assert_eq!(q0.apply(ket0), ket1);
        assert_eq!(q0.apply(ket1), [ZERO, ZERO]);
        assert_eq!(q1.apply(ket1), ket0);
        assert_eq!(q1.apply(ket0), [ZERO, ZERO]);
        assert_eq!(q0, Mat2::new(ZERO, ZERO, ONE, ZERO).unwrap());
        assert_eq!(q1, Mat2::new(ZERO, ONE, ZERO, ZERO).unwrap());
    }

    #[test]
    fn dual_projectors_are_projectors() {
        for p in [Projector2::plus(), Projector2::minus()] {
            assert!(Projector2::new(*p.matrix()).is_ok());
        }
        let sum = *Projector2::plus().matrix() + *Projector2::minus().matrix();
        assert!(sum.max_abs_diff(&Mat2::identity()) < 1e-15);
        assert_eq!(Projector2::computational(Basis::One), Projector2::p1());
    }

    #[test]
    fn non_projector_rejected() {
        assert!(matches!(
            Projector2::new(gates::hadamard()),
            Err(QubitError::NotProjector { .. })
        ));
    }

    #[test]
    fn unitary_construction_checks_norm() {
        assert!(Unitary2::new(c(0.6, 0.0), c(0.8, 0.0), 0.3).is_ok());
        assert!(matches!(
            Unitary2::new(c(0.6, 0.0), c(0.6, 0.0), 0.0),
            Err(QubitError::NotUnitary { .. })
        ));
        assert!(matches!(
            Unitary2::from_matrix(Mat2::diag(ONE, c(2.0, 0.0))),
            Err(QubitError::NotUnitary { .. })
        ));
        assert!(matches!(
            Unitary2::new(c(f64::NAN, 0.0), ZERO, 0.0),
            Err(QubitError::NonFinite(_))
        ));
    }

    #[test]
    fn from_matrix_recovers_alpha_beta_up_to_sign() {
        let u = Unitary2::new(c(0.6, 0.0), c(0.0, 0.8), 0.4).unwrap();
        let w = Unitary2::from_matrix(*u.matrix()).unwrap();
        assert!(w.matrix().max_abs_diff(u.matrix()) == 0.0);
        assert!((w.phase() - 0.4).abs() < 1e-15);
        assert!((w.alpha() - u.alpha()).norm() < 1e-15);
        assert!((w.beta() - u.beta()).norm() < 1e-15);
    }

    #[test]
    fn hadamard_phase_from_determinant() {
        let h = Unitary2::from_matrix(gates::hadamard()).unwrap();
        assert!((h.phase() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(h.special().det().re - 1.0 < 1e-15);
    }

    #[test]
    fn diagonal_requires_unit_modulus() {
        assert!(matches!(
            DiagonalUnitary2::new(c(0.9, 0.0), 0.0),
            Err(QubitError::NotUnitModulus { .. })
        ));
        let d = DiagonalUnitary2::from_angles(0.7, -0.2).unwrap();
        assert!(d.matrix().max_abs_diff(&d.as_projector_superposition()) < 1e-15);
        assert!((d.matrix() * d.inverse().matrix()).max_abs_diff(&Mat2::identity()) < 1e-15);
    }

    #[test]
    fn serde_shapes() {
        let d = DiagonalUnitary2::new(c(0.0, 1.0), 0.5).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"alpha":[0.0,1.0],"phi":0.5}"#);
        let back: DiagonalUnitary2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<DiagonalUnitary2>(r#"{"alpha":[2,0],"phi":0}"#).is_err());

        let json = serde_json::to_string(&gates::not()).unwrap();
        assert_eq!(json, r#"{"rows":[[[0.0,0.0],[1.0,0.0]],[[1.0,0.0],[0.0,0.0]]]}"#);
        let back: Mat2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, gates::not());
    }
}
