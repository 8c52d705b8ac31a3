use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::axiom::{AxiomId, AxiomLedger, Uses};
use super::RuleKind;

/// The three observers of the one-qubit machine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Observer {
    /// Insider, performs reversible measurements; paraconsistent.
    P,
    /// External quantum logician, performs projective measurements.
    G,
    /// External classical logician.
    A,
}

impl Observer {
    pub const ALL: [Observer; 3] = [Observer::A, Observer::G, Observer::P];

    pub fn describe(self) -> &'static str {
        match self {
            Observer::P => "insider (paraconsistent)",
            Observer::G => "quantum logician",
            Observer::A => "classical logician",
        }
    }
}

impl fmt::Display for Observer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Observer::P => "P",
            Observer::G => "G",
            Observer::A => "A",
        };
        f.write_str(c)
    }
}

impl FromStr for Observer {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(Observer::P),
            "G" | "g" => Ok(Observer::G),
            "A" | "a" => Ok(Observer::A),
            other => Err(format!("unknown observer `{other}` (expected P, G or A)")),
        }
    }
}

/// `x @ y`: the observers can communicate. Holds for `A @ G` and `G @ P`
/// (either order) and for nothing else; in particular it is not
/// transitive.
pub fn can_communicate(x: Observer, y: Observer) -> bool {
    use Observer::*;
    matches!((x, y), (A, G) | (G, A) | (G, P) | (P, G))
}

/// How the insider's falsity axiom is rationed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InsiderConfig {
    /// `A^ (+) A ⊢` is use-once like `⊢ A & A^` (default), or reusable.
    pub liar_use_once: bool,
}

impl Default for InsiderConfig {
    fn default() -> Self {
        InsiderConfig { liar_use_once: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObserverProfile {
    pub observer: Observer,
    pub rules: BTreeSet<RuleKind>,
    pub ledger: AxiomLedger,
}

impl ObserverProfile {
    pub fn insider() -> Self {
        ObserverProfile::insider_with(InsiderConfig::default())
    }

    /// P: no cut, no modus ponens, no falsum definition, no identity. Holds
    /// both paraconsistent axioms and their transition axioms.
    pub fn insider_with(config: InsiderConfig) -> Self {
        let liar_uses = if config.liar_use_once { Uses::Finite(1) } else { Uses::Unlimited };
        ObserverProfile {
            observer: Observer::P,
            rules: [RuleKind::AndFormation, RuleKind::OrFormation].into(),
            ledger: AxiomLedger::new()
                .with(AxiomId::Superposition, Uses::Finite(1))
                .with(AxiomId::Mirror, Uses::Unlimited)
                .with(AxiomId::Liar, liar_uses)
                .with(AxiomId::LiarMirror, Uses::Unlimited),
        }
    }

    /// G with an empty ledger.
    pub fn quantum_logician() -> Self {
        ObserverProfile {
            observer: Observer::G,
            rules: [
                RuleKind::Identity,
                RuleKind::AndLeft1,
                RuleKind::AndLeft2,
                RuleKind::AndFormation,
                RuleKind::OrFormation,
                RuleKind::Cut,
            ]
            .into(),
            ledger: AxiomLedger::new(),
        }
    }

    /// G holding what P hands over at the border: one use each of the
    /// truth and falsity axioms.
    pub fn quantum_external() -> Self {
        let mut g = ObserverProfile::quantum_logician();
        g.ledger.grant(AxiomId::Superposition, Uses::Finite(1));
        g.ledger.grant(AxiomId::Liar, Uses::Finite(1));
        g
    }

    /// A: G's rules plus the falsum definition, modus ponens and weakening.
    pub fn classical() -> Self {
        let mut rules = ObserverProfile::quantum_logician().rules;
        rules.extend([
            RuleKind::FalsumDef,
            RuleKind::ModusPonens,
            RuleKind::WeakenLeft,
            RuleKind::WeakenRight,
        ]);
        ObserverProfile {
            observer: Observer::A,
            rules,
            ledger: AxiomLedger::new(),
        }
    }

    pub fn for_observer(observer: Observer) -> Self {
        match observer {
            Observer::P => ObserverProfile::insider(),
            Observer::G => ObserverProfile::quantum_external(),
            Observer::A => ObserverProfile::classical(),
        }
    }

    pub fn with_axiom(mut self, axiom: AxiomId, uses: Uses) -> Self {
        self.ledger.grant(axiom, uses);
        self
    }

    pub fn has_rule(&self, rule: RuleKind) -> bool {
        self.rules.contains(&rule)
    }
}
