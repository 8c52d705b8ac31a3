//! Inference rules of the additive fragment plus cut and the classical
//! falsum rules. Every rule maps premise sequents to one conclusion.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Formula, LogicError, Sequent};

/// Rule names, independent of their parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleKind {
    /// `F ⊢ F`
    Identity,
    /// `F ⊢ Δ` gives `F & G ⊢ Δ`
    #[serde(rename = "and-left-1")]
    AndLeft1,
    /// `G ⊢ Δ` gives `F & G ⊢ Δ`
    #[serde(rename = "and-left-2")]
    AndLeft2,
    /// `Γ ⊢ F` and `Γ ⊢ G` give `Γ ⊢ F & G`
    AndFormation,
    /// `F ⊢ Δ` and `G ⊢ Δ` give `F (+) G ⊢ Δ`
    OrFormation,
    /// `Γ ⊢ F` and `F ⊢ Δ` give `Γ ⊢ Δ`
    Cut,
    /// `Γ ⊢ F^` and `Γ ⊢ F -> _|_` rewrite into each other
    FalsumDef,
    /// `Γ ⊢ F` and `Γ ⊢ F -> G` give `Γ ⊢ G`
    ModusPonens,
    /// `⊢ Δ` gives `F ⊢ Δ`
    WeakenLeft,
    /// `Γ ⊢` gives `Γ ⊢ F`
    WeakenRight,
}

impl RuleKind {
    pub const ALL: [RuleKind; 10] = [
        RuleKind::Identity,
        RuleKind::AndLeft1,
        RuleKind::AndLeft2,
        RuleKind::AndFormation,
        RuleKind::OrFormation,
        RuleKind::Cut,
        RuleKind::FalsumDef,
        RuleKind::ModusPonens,
        RuleKind::WeakenLeft,
        RuleKind::WeakenRight,
    ];

    /// Script / CLI name.
    pub fn name(self) -> &'static str {
        match self {
            RuleKind::Identity => "identity",
            RuleKind::AndLeft1 => "and-left-1",
            RuleKind::AndLeft2 => "and-left-2",
            RuleKind::AndFormation => "and-formation",
            RuleKind::OrFormation => "or-formation",
            RuleKind::Cut => "cut",
            RuleKind::FalsumDef => "falsum-def",
            RuleKind::ModusPonens => "modus-ponens",
            RuleKind::WeakenLeft => "weaken-left",
            RuleKind::WeakenRight => "weaken-right",
        }
    }

    /// Short label used in printed derivations.
    pub fn label(self) -> &'static str {
        match self {
            RuleKind::Identity => "id",
            RuleKind::AndLeft1 => "&L1",
            RuleKind::AndLeft2 => "&L2",
            RuleKind::AndFormation => "&R",
            RuleKind::OrFormation => "(+)L",
            RuleKind::Cut => "cut",
            RuleKind::FalsumDef => "def-falsum",
            RuleKind::ModusPonens => "mp",
            RuleKind::WeakenLeft => "wL",
            RuleKind::WeakenRight => "wR",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            RuleKind::Identity => 0,
            RuleKind::AndLeft1
            | RuleKind::AndLeft2
            | RuleKind::FalsumDef
            | RuleKind::WeakenLeft
            | RuleKind::WeakenRight => 1,
            RuleKind::AndFormation | RuleKind::OrFormation | RuleKind::Cut | RuleKind::ModusPonens => 2,
        }
    }

    /// Whether the rule needs a formula parameter to fix its conclusion.
    pub fn takes_formula(self) -> bool {
        matches!(
            self,
            RuleKind::Identity
                | RuleKind::AndLeft1
                | RuleKind::AndLeft2
                | RuleKind::WeakenLeft
                | RuleKind::WeakenRight
        )
    }
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RuleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RuleKind::ALL
            .into_iter()
            .find(|k| k.name() == s || k.label() == s)
            .ok_or_else(|| format!("unknown rule `{s}`"))
    }
}

/// A rule together with the formula parameter its conclusion needs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Identity(Formula),
    /// Parameter: the added right conjunct.
    AndLeft1(Formula),
    /// Parameter: the added left conjunct.
    AndLeft2(Formula),
    AndFormation,
    OrFormation,
    Cut,
    FalsumDef,
    ModusPonens,
    WeakenLeft(Formula),
    WeakenRight(Formula),
}

impl Rule {
    pub fn kind(&self) -> RuleKind {
        match self {
            Rule::Identity(_) => RuleKind::Identity,
            Rule::AndLeft1(_) => RuleKind::AndLeft1,
            Rule::AndLeft2(_) => RuleKind::AndLeft2,
            Rule::AndFormation => RuleKind::AndFormation,
            Rule::OrFormation => RuleKind::OrFormation,
            Rule::Cut => RuleKind::Cut,
            Rule::FalsumDef => RuleKind::FalsumDef,
            Rule::ModusPonens => RuleKind::ModusPonens,
            Rule::WeakenLeft(_) => RuleKind::WeakenLeft,
            Rule::WeakenRight(_) => RuleKind::WeakenRight,
        }
    }

    pub fn parameter(&self) -> Option<&Formula> {
        match self {
            Rule::Identity(f)
            | Rule::AndLeft1(f)
            | Rule::AndLeft2(f)
            | Rule::WeakenLeft(f)
            | Rule::WeakenRight(f) => Some(f),
            _ => None,
        }
    }

    /// Assembles a rule from its kind and optional parameter.
    pub fn build(kind: RuleKind, parameter: Option<Formula>) -> Result<Rule, LogicError> {
        let need = |p: Option<Formula>| {
            p.ok_or_else(|| mismatch(kind, "rule needs a formula parameter"))
        };
        if !kind.takes_formula() && parameter.is_some() {
            return Err(mismatch(kind, "rule takes no formula parameter"));
        }
        Ok(match kind {
            RuleKind::Identity => Rule::Identity(need(parameter)?),
            RuleKind::AndLeft1 => Rule::AndLeft1(need(parameter)?),
            RuleKind::AndLeft2 => Rule::AndLeft2(need(parameter)?),
            RuleKind::WeakenLeft => Rule::WeakenLeft(need(parameter)?),
            RuleKind::WeakenRight => Rule::WeakenRight(need(parameter)?),
            RuleKind::AndFormation => Rule::AndFormation,
            RuleKind::OrFormation => Rule::OrFormation,
            RuleKind::Cut => Rule::Cut,
            RuleKind::FalsumDef => Rule::FalsumDef,
            RuleKind::ModusPonens => Rule::ModusPonens,
        })
    }

    /// Instantiates the conclusion from premise sequents, or reports why the
    /// premises do not fit the rule's pattern.
    pub fn conclude(&self, premises: &[&Sequent]) -> Result<Sequent, LogicError> {
        let kind = self.kind();
        if premises.len() != kind.arity() {
            return Err(mismatch(
                kind,
                format!("expected {} premise(s), got {}", kind.arity(), premises.len()),
            ));
        }
        let fail = |why: String| Err(mismatch(kind, why));
        match self {
            Rule::Identity(f) => Ok(Sequent::entails(f.clone(), f.clone())),
            Rule::AndLeft1(other) => {
                let p = premises[0];
                match &p.antecedent {
                    Some(f) => Ok(Sequent::new(Some(f.clone().conj(other.clone())), p.succedent.clone())),
                    None => fail(format!("premise `{p}` has an empty antecedent")),
                }
            }
            Rule::AndLeft2(other) => {
                let p = premises[0];
                match &p.antecedent {
                    Some(f) => Ok(Sequent::new(Some(other.clone().conj(f.clone())), p.succedent.clone())),
                    None => fail(format!("premise `{p}` has an empty antecedent")),
                }
            }
            Rule::AndFormation => {
                let (l, r) = (premises[0], premises[1]);
                if l.antecedent != r.antecedent {
                    return fail(format!("antecedents of `{l}` and `{r}` differ"));
                }
                match (&l.succedent, &r.succedent) {
                    (Some(f), Some(g)) => Ok(Sequent::new(l.antecedent.clone(), Some(f.clone().conj(g.clone())))),
                    _ => fail(format!("`{l}` and `{r}` must both have a succedent")),
                }
            }
            Rule::OrFormation => {
                let (l, r) = (premises[0], premises[1]);
                if l.succedent != r.succedent {
                    return fail(format!("succedents of `{l}` and `{r}` differ"));
                }
                match (&l.antecedent, &r.antecedent) {
                    (Some(f), Some(g)) => Ok(Sequent::new(Some(f.clone().disj(g.clone())), l.succedent.clone())),
                    _ => fail(format!("`{l}` and `{r}` must both have an antecedent")),
                }
            }
            Rule::Cut => {
                let (l, r) = (premises[0], premises[1]);
                match (&l.succedent, &r.antecedent) {
                    (Some(f), Some(g)) if f == g => Ok(Sequent::new(l.antecedent.clone(), r.succedent.clone())),
                    _ => fail(format!("no cut formula between `{l}` and `{r}`")),
                }
            }
            Rule::FalsumDef => {
                let p = premises[0];
                let rewritten = match &p.succedent {
                    Some(Formula::Orth(f)) => (**f).clone().implies(Formula::Falsum),
                    Some(Formula::Implies(f, g)) if **g == Formula::Falsum => (**f).clone().orth(),
                    _ => return fail(format!("succedent of `{p}` is neither `F^` nor `F -> _|_`")),
                };
                Ok(Sequent::new(p.antecedent.clone(), Some(rewritten)))
            }
            Rule::ModusPonens => {
                let (l, r) = (premises[0], premises[1]);
                if l.antecedent != r.antecedent {
                    return fail(format!("antecedents of `{l}` and `{r}` differ"));
                }
                match (&l.succedent, &r.succedent) {
                    (Some(f), Some(Formula::Implies(h, g))) if **h == *f => {
                        Ok(Sequent::new(l.antecedent.clone(), Some((**g).clone())))
                    }
                    _ => fail(format!("`{r}` is not an implication from the succedent of `{l}`")),
                }
            }
            Rule::WeakenLeft(f) => {
                let p = premises[0];
                if p.antecedent.is_some() {
                    return fail(format!("antecedent of `{p}` is occupied"));
                }
                Ok(Sequent::new(Some(f.clone()), p.succedent.clone()))
            }
            Rule::WeakenRight(f) => {
                let p = premises[0];
                if p.succedent.is_some() {
                    return fail(format!("succedent of `{p}` is occupied"));
                }
                Ok(Sequent::new(p.antecedent.clone(), Some(f.clone())))
            }
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind().label())
    }
}

fn mismatch(rule: RuleKind, reason: impl Into<String>) -> LogicError {
    LogicError::PatternMismatch {
        rule,
        reason: reason.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Sequent {
        text.parse().unwrap()
    }

    fn a() -> Formula {
        Formula::atom("A")
    }

    #[test]
    fn and_formation() {
        let out = Rule::AndFormation.conclude(&[&s("|- A"), &s("|- A^")]).unwrap();
        assert_eq!(out, s("|- A & A^"));
        assert!(Rule::AndFormation.conclude(&[&s("|- A"), &s("A |- A^")]).is_err());
    }

    #[test]
    fn or_formation() {
        let out = Rule::OrFormation.conclude(&[&s("A |-"), &s("A^ |-")]).unwrap();
        assert_eq!(out, s("A (+) A^ |-"));
    }

    #[test]
    fn and_left_and_cut() {
        let left = Rule::AndLeft1(a().orth()).conclude(&[&s("A |- A")]).unwrap();
        assert_eq!(left, s("A & A^ |- A"));
        let right = Rule::AndLeft2(a()).conclude(&[&s("A^ |- A^")]).unwrap();
        assert_eq!(right, s("A & A^ |- A^"));
        assert_eq!(Rule::Cut.conclude(&[&s("|- A & A^"), &left]).unwrap(), s("|- A"));
        assert!(matches!(
            Rule::Cut.conclude(&[&s("|- A"), &left]),
            Err(LogicError::PatternMismatch { rule: RuleKind::Cut, .. })
        ));
    }

    #[test]
    fn falsum_rules() {
        let def = Rule::FalsumDef.conclude(&[&s("|- A^")]).unwrap();
        assert_eq!(def, s("|- A -> _|_"));
        assert_eq!(Rule::FalsumDef.conclude(&[&def]).unwrap(), s("|- A^"));
        assert_eq!(Rule::ModusPonens.conclude(&[&s("|- A"), &def]).unwrap(), s("|- _|_"));
        assert!(Rule::ModusPonens.conclude(&[&s("|- A^"), &def]).is_err());
        assert!(Rule::FalsumDef.conclude(&[&s("|- A")]).is_err());
    }

    #[test]
    fn weakening() {
        assert_eq!(Rule::WeakenLeft(a()).conclude(&[&s("|- A^")]).unwrap(), s("A |- A^"));
        assert_eq!(Rule::WeakenRight(a()).conclude(&[&s("A^ |-")]).unwrap(), s("A^ |- A"));
        assert!(Rule::WeakenLeft(a()).conclude(&[&s("A |- A")]).is_err());
    }

    #[test]
    fn arity_checked() {
        assert!(matches!(
            Rule::AndFormation.conclude(&[&s("|- A")]),
            Err(LogicError::PatternMismatch { .. })
        ));
        assert_eq!(Rule::Identity(a()).conclude(&[]).unwrap(), s("A |- A"));
    }

    #[test]
    fn names_round_trip() {
        for k in RuleKind::ALL {
            assert_eq!(k.name().parse::<RuleKind>().unwrap(), k);
            assert_eq!(k.label().parse::<RuleKind>().unwrap(), k);
            assert_eq!(Rule::build(k, k.takes_formula().then(a)).unwrap().kind(), k);
        }
        assert!(Rule::build(RuleKind::Cut, Some(a())).is_err());
        assert!(Rule::build(RuleKind::Identity, None).is_err());
    }
}
