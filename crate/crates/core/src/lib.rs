//! Single-qubit reversible measurements, fuzzy-sphere matrix geometry and a
//! sequent engine for the three observers that watch a one-qubit machine.
//!
//! The crate is split into three areas:
//!
//! - [`qubit`]: states, 2×2 operators, projective / mirror / fuzzy / liar
//!   measurements, Euler and phase-shift decompositions, Bloch coordinates.
//! - [`fuzzy`]: n-dimensional SU(2) irreps and unit-radius fuzzy-sphere
//!   coordinates.
//! - [`logic`]: formulas, one-formula-per-side sequents, observer profiles
//!   with linear axiom ledgers, derivation trees and bounded proof search.
//!
//! [`sampling`] holds the seeded generators shared by simulations and tests.

pub mod fuzzy;
pub mod logic;
pub mod qubit;
pub mod sampling;

pub use fuzzy::{FuzzyCoordinates, FuzzyError, MatN, Su2Irrep};
pub use logic::{
    AxiomId, AxiomLedger, DerivationTree, Formula, LogicError, Observer, ObserverProfile, Rule,
    RuleKind, Sequent,
};
pub use qubit::{
    Basis, BlochPoint, ComplexScalar, DiagonalUnitary2, EulerAngles, Mat2, MeasurementRecord,
    PhaseShift, Projector2, QubitError, QubitState, Unitary2,
};
