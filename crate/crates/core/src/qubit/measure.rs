//! Projective, mirror, liar and fuzzy measurements.
//!
//! Only projective measurement is irreversible. The other three apply a
//! unitary: the mirror keeps both probabilities, the liar swaps them and the
//! fuzzy measurement mixes the amplitudes.

use num_complex::Complex64;
use rand::Rng;
use serde::Serialize;

use super::{gates, Basis, DiagonalUnitary2, Mat2, Projector2, QubitError, QubitState, Unitary2};
use crate::sampling;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementRecord {
    pub outcome: Basis,
    pub probability: f64,
    pub post_state: QubitState,
}

/// `(P_i ψ, |P_i ψ|²)`.
pub fn project(psi: &QubitState, i: Basis) -> ([Complex64; 2], f64) {
    let v = Projector2::computational(i).matrix().apply(psi.amplitudes());
    let p = v[0].norm_sqr() + v[1].norm_sqr();
    (v, p)
}

/// Projection onto `|i⟩` followed by renormalization, `P_i ψ / √p(i)`.
pub fn collapse(psi: &QubitState, i: Basis) -> Result<MeasurementRecord, QubitError> {
    let (v, p) = project(psi, i);
    if p == 0.0 {
        return Err(QubitError::ZeroProbability(i));
    }
    let n = p.sqrt();
    let post_state = QubitState::new(v[0] / n, v[1] / n)?;
    Ok(MeasurementRecord {
        outcome: i,
        probability: p,
        post_state,
    })
}

/// Standard measurement driven by a [`sampling::SimRng`] seeded with
/// `seed`.
pub fn projective_measure(psi: &QubitState, seed: u64) -> MeasurementRecord {
    projective_measure_with(psi, &mut sampling::seeded_rng(seed))
}

/// Standard measurement drawing one uniform variate `u ∈ [0, 1)` from `rng`;
/// outcome 0 iff `u < |a|²`. A zero-probability branch is never selected.
pub fn projective_measure_with<R: Rng + ?Sized>(psi: &QubitState, rng: &mut R) -> MeasurementRecord {
    let u: f64 = rng.random();
    let p0 = project(psi, Basis::Zero).1;
    let outcome = if u < p0 { Basis::Zero } else { Basis::One };
    collapse(psi, outcome).expect("drawn branch has positive probability")
}

/// `U_D ψ = (e^{iφ}α a, e^{iφ}α* b)`.
pub fn mirror_measure(psi: &QubitState, u: &DiagonalUnitary2) -> QubitState {
    psi.evolve(&u.matrix())
}

pub fn mirror_inverse(psi_prime: &QubitState, u: &DiagonalUnitary2) -> QubitState {
    psi_prime.evolve(&u.inverse().matrix())
}

/// `L ψ = NOT·U_D ψ = (e^{iφ}α* b, e^{iφ}α a)`.
pub fn liar_matrix(u: &DiagonalUnitary2) -> Mat2 {
    gates::not() * u.matrix()
}

pub fn liar_measure(psi: &QubitState, u: &DiagonalUnitary2) -> QubitState {
    psi.evolve(&liar_matrix(u))
}

/// `L⁻¹ = U_D⁻¹·NOT`.
pub fn liar_inverse(psi_prime: &QubitState, u: &DiagonalUnitary2) -> QubitState {
    psi_prime.evolve(&(u.inverse().matrix() * gates::not()))
}

/// `e^{iφ}(αa + βb, −β*a + α*b)`.
pub fn fuzzy_measure(psi: &QubitState, u: &Unitary2) -> QubitState {
    psi.evolve(u.matrix())
}

/// Mirror measurement in the `|±⟩` basis, `H U_D H⁻¹ ψ`.
pub fn dual_basis_mirror(psi: &QubitState, u: &DiagonalUnitary2) -> QubitState {
    let h = gates::hadamard();
    psi.evolve(&(h * u.matrix() * h))
}

/// Standard measurement with `P_i` after a mirror measurement. The
/// probability is that of the original state; the post-state is `|i⟩`
/// (the collapsed vector up to its global phase).
pub fn projective_after_mirror(
    psi: &QubitState,
    u: &DiagonalUnitary2,
    i: Basis,
) -> Result<MeasurementRecord, QubitError> {
    let record = collapse(&mirror_measure(psi, u), i)?;
    Ok(MeasurementRecord {
        post_state: QubitState::basis(i),
        ..record
    })
}
