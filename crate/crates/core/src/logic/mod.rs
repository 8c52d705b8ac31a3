//! Sequent engine for the three observers.
//!
//! Sequents carry at most one formula per side. Axioms handed out by a
//! reversible measurement are rationed through an [`AxiomLedger`], so a
//! judgement the insider produces can be used once and no more.

mod axiom;
mod derivation;
mod formula;
mod observer;
mod rule;
pub mod scenario;
mod script;
pub mod search;
mod sequent;

use thiserror::Error;

pub use axiom::{AxiomId, AxiomLedger, LedgerEntry, Uses, BASE_ATOM};
pub use derivation::{apply_rule, use_axiom, DerivationTree, Step};
pub use formula::{parse_formula, Formula};
pub use observer::{can_communicate, InsiderConfig, Observer, ObserverProfile};
pub use rule::{Rule, RuleKind};
pub use scenario::{
    classical_collapse, cloning_paradox_demo, derive_cut, derive_cut_scenario, literal, post_measurement_judgements,
    CloningReport,
};
pub use script::{run_script, ScriptError, ScriptStep};
pub use search::{bounded_search, search_for, SearchOutcome};
pub use sequent::{parse_sequent, Sequent};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("observer {observer} has no rule {rule}")]
    RuleNotAvailable { observer: Observer, rule: RuleKind },
    #[error("{rule}: {reason}")]
    PatternMismatch { rule: RuleKind, reason: String },
    #[error("axiom {axiom} exhausted")]
    AxiomExhausted { axiom: AxiomId },
    #[error("axiom {axiom} not held")]
    AxiomNotHeld { axiom: AxiomId },
    #[error("invalid derivation: {reason}")]
    InvalidDerivation { reason: String },
}
