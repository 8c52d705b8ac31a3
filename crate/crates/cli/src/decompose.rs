//! Euler and phase-shift decompositions of a 2×2 unitary.

use num_complex::Complex64;
use qmirror_core::qubit::{euler_decompose, gates, phase_shift_form, INVARIANT_TOL};
use qmirror_core::{DiagonalUnitary2, EulerAngles, Mat2, PhaseShift, QubitError, Unitary2};
use serde::Serialize;

use crate::error::CliError;
use crate::format::Display;

/// Gates that can be named instead of spelled out.
pub const NAMED: [&str; 7] = ["identity", "hadamard", "not", "pauli-x", "pauli-y", "pauli-z", "phase-i"];

pub fn named_gate(name: &str) -> Option<Mat2> {
    Some(match name {
        "identity" => Mat2::identity(),
        "hadamard" => gates::hadamard(),
        "not" | "pauli-x" => gates::pauli_x(),
        "pauli-y" => gates::pauli_y(),
        "pauli-z" => gates::pauli_z(),
        "phase-i" => Mat2::diag(Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)),
        _ => return None,
    })
}

/// Reads a gate name, inline `{"rows": ...}` JSON, or a path to such a file.
pub fn read_matrix(input: &str) -> Result<Mat2, CliError> {
    if let Some(m) = named_gate(input) {
        return Ok(m);
    }
    let text = if input.trim_start().starts_with('{') {
        input.to_string()
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::validation(format!("{input}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::validation(format!("matrix: {e}")))
}

#[derive(Debug, Clone, Serialize)]
pub struct DiagonalReport {
    pub alpha: Complex64,
    pub phi: f64,
    pub phase_shift: PhaseShift,
    pub residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub matrix: Mat2,
    pub euler: EulerAngles,
    pub residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagonal: Option<DiagonalReport>,
}

pub fn decompose(m: Mat2) -> Result<DecompositionReport, CliError> {
    let u = Unitary2::from_matrix(m).map_err(|e| match e {
        QubitError::NotUnitary { residual } => {
            CliError::validation(format!("matrix is not unitary (residual {residual:e})"))
        }
        other => other.into(),
    })?;
    let euler = euler_decompose(&u);
    let residual = euler.reconstruct().max_abs_diff(&m);
    let diagonal = if m.get(0, 1).norm() < INVARIANT_TOL && m.get(1, 0).norm() < INVARIANT_TOL {
        // m = e^{iφ} diag(α, α*) with e^{2iφ} = det m
        let phi = u.phase();
        let alpha = m.get(0, 0) * Complex64::from_polar(1.0, -phi);
        let d = DiagonalUnitary2::new(alpha, phi)?;
        let form = phase_shift_form(&d);
        Some(DiagonalReport {
            alpha,
            phi,
            phase_shift: form,
            residual: form.reconstruct().max_abs_diff(&m),
        })
    } else {
        None
    };
    Ok(DecompositionReport {
        matrix: m,
        euler,
        residual,
        diagonal,
    })
}

pub fn render(r: &DecompositionReport, d: &Display) -> String {
    let mut out = String::from("matrix\n");
    for row in r.matrix.rows() {
        out.push_str(&format!("  [{}  {}]\n", d.complex(row[0]), d.complex(row[1])));
    }
    let e = &r.euler;
    out.push_str(&format!(
        "euler     phi = {}, gamma = {}, theta = {}, delta = {}\nresidual  {:e}\n",
        d.real(e.phi),
        d.real(e.gamma),
        d.real(e.theta),
        d.real(e.delta),
        r.residual
    ));
    if let Some(diag) = &r.diagonal {
        out.push_str(&format!(
            "diagonal  alpha = {}, phi = {}\nphase     phi' = {}, lambda = {}\nresidual  {:e}\n",
            d.complex(diag.alpha),
            d.real(diag.phi),
            d.real(diag.phase_shift.phi_prime),
            d.real(diag.phase_shift.lambda),
            diag.residual
        ));
    }
    out
}
