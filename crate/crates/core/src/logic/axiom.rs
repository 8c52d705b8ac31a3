//! The insider's axioms and the ledger that rations them.
//!
//! A reversible measurement hands out its judgement exactly once: the state
//! it describes cannot be copied. The ledger models that by giving each
//! axiom a use count that [`AxiomLedger::consume`] decrements.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Formula, LogicError, Sequent};

/// Atom naming the first computational basis state; `A^` is the second.
pub const BASE_ATOM: &str = "A";

fn base() -> Formula {
    Formula::atom(BASE_ATOM)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AxiomId {
    /// `⊢ A & A^`: a mirror measurement of the superposed state. Denies
    /// non-contradiction.
    Superposition,
    /// `A & A^ ⊢ A & A^`: the superposed state is measurable by a diagonal
    /// unitary; the turnstile reads "via U_D".
    Mirror,
    /// `A^ (+) A ⊢`: a liar measurement. Denies the excluded middle.
    Liar,
    /// `A^ (+) A ⊢ A^ (+) A`: mirror image of [`AxiomId::Mirror`].
    LiarMirror,
}

impl AxiomId {
    pub const ALL: [AxiomId; 4] = [AxiomId::Superposition, AxiomId::Mirror, AxiomId::Liar, AxiomId::LiarMirror];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Superposition => "superposition",
            AxiomId::Mirror => "mirror",
            AxiomId::Liar => "liar",
            AxiomId::LiarMirror => "liar-mirror",
        }
    }

    pub fn sequent(self) -> Sequent {
        let sup = base().conj(base().orth());
        match self {
            AxiomId::Superposition => Sequent::asserts(sup),
            AxiomId::Mirror => Sequent::entails(sup.clone(), sup),
            AxiomId::Liar => AxiomId::Superposition.sequent().mirror(),
            AxiomId::LiarMirror => AxiomId::Mirror.sequent().mirror(),
        }
    }

    /// Annotation printed next to the axiom in transcripts.
    pub fn reading(self) -> &'static str {
        match self {
            AxiomId::Superposition => "mirror measurement of the superposed state",
            AxiomId::Mirror | AxiomId::LiarMirror => "transition via U_D",
            AxiomId::Liar => "liar measurement of the superposed state",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Uses {
    Finite(u32),
    Unlimited,
}

impl fmt::Display for Uses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Uses::Finite(n) => write!(f, "{n}"),
            Uses::Unlimited => f.write_str("unlimited"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub axiom: AxiomId,
    pub sequent: Sequent,
    pub remaining: Uses,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomLedger {
    entries: Vec<LedgerEntry>,
}

impl AxiomLedger {
    pub fn new() -> Self {
        AxiomLedger::default()
    }

    pub fn with(mut self, axiom: AxiomId, uses: Uses) -> Self {
        self.grant(axiom, uses);
        self
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn remaining(&self, axiom: AxiomId) -> Option<Uses> {
        self.entry(axiom).map(|e| e.remaining)
    }

    fn entry(&self, axiom: AxiomId) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.axiom == axiom)
    }

    /// Adds `uses` to the axiom's allotment, creating the entry if needed.
    pub fn grant(&mut self, axiom: AxiomId, uses: Uses) {
        match self.entries.iter_mut().find(|e| e.axiom == axiom) {
            Some(e) => {
                e.remaining = match (e.remaining, uses) {
                    (Uses::Finite(a), Uses::Finite(b)) => Uses::Finite(a.saturating_add(b)),
                    _ => Uses::Unlimited,
                }
            }
            None => self.entries.push(LedgerEntry {
                axiom,
                sequent: axiom.sequent(),
                remaining: uses,
            }),
        }
    }

    /// Takes one use of `axiom`.
    pub fn consume(&mut self, axiom: AxiomId) -> Result<Sequent, LogicError> {
        let entry = self
            .entries
            .iter_mut()
            .find(|e| e.axiom == axiom)
            .ok_or(LogicError::AxiomNotHeld { axiom })?;
        match &mut entry.remaining {
            Uses::Unlimited => {}
            Uses::Finite(0) => return Err(LogicError::AxiomExhausted { axiom }),
            Uses::Finite(n) => *n -= 1,
        }
        Ok(entry.sequent.clone())
    }

    /// Moves one use of `axiom` from `self` into `other`; an unlimited
    /// source hands over an unlimited allotment.
    pub fn transfer(&mut self, axiom: AxiomId, other: &mut AxiomLedger) -> Result<(), LogicError> {
        let unlimited = self.remaining(axiom) == Some(Uses::Unlimited);
        self.consume(axiom)?;
        other.grant(axiom, if unlimited { Uses::Unlimited } else { Uses::Finite(1) });
        Ok(())
    }

    /// Axioms whose use count is finite, i.e. linear resources.
    pub fn is_linear(&self, axiom: AxiomId) -> bool {
        matches!(self.remaining(axiom), Some(Uses::Finite(_)))
    }
}
