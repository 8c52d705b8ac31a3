use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::formula::{Parser, Token};
use super::{Formula, LogicError};

/// `Γ ⊢ Δ` with at most one formula on each side.
///
/// `⊢ F` asserts `F`; `F ⊢` asserts that `F` is false.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequent {
    pub antecedent: Option<Formula>,
    pub succedent: Option<Formula>,
}

impl Sequent {
    pub fn new(antecedent: Option<Formula>, succedent: Option<Formula>) -> Self {
        Sequent {
            antecedent,
            succedent,
        }
    }

    /// `⊢ F`
    pub fn asserts(f: Formula) -> Self {
        Sequent::new(None, Some(f))
    }

    /// `F ⊢`
    pub fn refutes(f: Formula) -> Self {
        Sequent::new(Some(f), None)
    }

    /// `F ⊢ G`
    pub fn entails(f: Formula, g: Formula) -> Self {
        Sequent::new(Some(f), Some(g))
    }

    /// Swaps the two sides and mirrors both formulas (`&` ↔ `(+)`, operand
    /// order reversed).
    pub fn mirror(&self) -> Sequent {
        Sequent::new(
            self.succedent.as_ref().map(Formula::mirror),
            self.antecedent.as_ref().map(Formula::mirror),
        )
    }

    pub fn contains_falsum(&self) -> bool {
        self.antecedent.iter().chain(&self.succedent).any(Formula::contains_falsum)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.antecedent, &self.succedent) {
            (Some(l), Some(r)) => write!(f, "{l} |- {r}"),
            (Some(l), None) => write!(f, "{l} |-"),
            (None, Some(r)) => write!(f, "|- {r}"),
            (None, None) => f.write_str("|-"),
        }
    }
}

pub fn parse_sequent(text: &str) -> Result<Sequent, LogicError> {
    let mut p = Parser::new(text)?;
    let antecedent = if p.peek() == Some(&Token::Turnstile) {
        None
    } else {
        Some(p.implication()?)
    };
    let pos = p.position();
    match p.bump() {
        Some(Token::Turnstile) => {}
        Some(t) => {
            return Err(LogicError::Syntax {
                position: pos,
                message: format!("expected `|-`, found {t}"),
            })
        }
        None => {
            return Err(LogicError::Syntax {
                position: pos,
                message: "expected `|-`, found end of input".into(),
            })
        }
    }
    let succedent = if p.at_end() { None } else { Some(p.implication()?) };
    p.expect_end()?;
    Ok(Sequent::new(antecedent, succedent))
}

impl FromStr for Sequent {
    type Err = LogicError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequent(s)
    }
}

impl Serialize for Sequent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Sequent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_sequent(&s).map_err(serde::de::Error::custom)
    }
}
