use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{AxiomId, LogicError, ObserverProfile, Rule, Sequent};

/// How a derivation node was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Step {
    Axiom(AxiomId),
    Rule(Rule),
    /// A judgement received from another observer and taken as given.
    Assumption,
}

impl Step {
    /// Machine name: rule name, `axiom(<id>)` or `assumption`.
    pub fn name(&self) -> String {
        match self {
            Step::Axiom(id) => format!("axiom({id})"),
            Step::Rule(r) => r.kind().name().to_string(),
            Step::Assumption => "assumption".to_string(),
        }
    }

    fn label(&self) -> String {
        match self {
            Step::Axiom(id) => format!("axiom {id}: {}", id.reading()),
            Step::Rule(r) => r.kind().label().to_string(),
            Step::Assumption => "given".to_string(),
        }
    }
}

/// A proof tree. Build it with [`use_axiom`], [`apply_rule`] or
/// [`DerivationTree::assume`]; [`DerivationTree::validate`] rechecks every
/// node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTree {
    conclusion: Sequent,
    step: Step,
    children: Vec<DerivationTree>,
}

impl DerivationTree {
    pub fn assume(conclusion: Sequent) -> Self {
        DerivationTree {
            conclusion,
            step: Step::Assumption,
            children: Vec::new(),
        }
    }

    pub(crate) fn from_parts(conclusion: Sequent, step: Step, children: Vec<DerivationTree>) -> Self {
        DerivationTree {
            conclusion,
            step,
            children,
        }
    }

    pub fn conclusion(&self) -> &Sequent {
        &self.conclusion
    }

    pub fn step(&self) -> &Step {
        &self.step
    }

    pub fn children(&self) -> &[DerivationTree] {
        &self.children
    }

    /// Number of nodes on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(DerivationTree::depth).max().unwrap_or(0)
    }

    /// Preorder traversal.
    pub fn nodes(&self) -> Vec<&DerivationTree> {
        let mut out = vec![self];
        for c in &self.children {
            out.extend(c.nodes());
        }
        out
    }

    /// How many times each axiom occurs as a leaf.
    pub fn axiom_uses(&self) -> BTreeMap<AxiomId, usize> {
        let mut uses = BTreeMap::new();
        for node in self.nodes() {
            if let Step::Axiom(id) = node.step {
                *uses.entry(id).or_default() += 1;
            }
        }
        uses
    }

    pub fn contains_falsum(&self) -> bool {
        self.nodes().iter().any(|n| n.conclusion.contains_falsum())
    }

    /// Rechecks every node against its rule or axiom.
    pub fn validate(&self) -> Result<(), LogicError> {
        let invalid = |reason: String| Err(LogicError::InvalidDerivation { reason });
        match &self.step {
            Step::Axiom(id) => {
                if !self.children.is_empty() {
                    return invalid(format!("axiom {id} node has children"));
                }
                if self.conclusion != id.sequent() {
                    return invalid(format!("`{}` is not axiom {id}", self.conclusion));
                }
            }
            Step::Assumption => {
                if !self.children.is_empty() {
                    return invalid("assumption node has children".into());
                }
            }
            Step::Rule(rule) => {
                for c in &self.children {
                    c.validate()?;
                }
                let premises: Vec<&Sequent> = self.children.iter().map(|c| &c.conclusion).collect();
                let expected = rule.conclude(&premises).map_err(|e| LogicError::InvalidDerivation { reason: e.to_string() })?;
                if expected != self.conclusion {
                    return invalid(format!(
                        "{} yields `{expected}`, node claims `{}`",
                        rule.kind().label(),
                        self.conclusion
                    ));
                }
            }
        }
        Ok(())
    }

    /// Checks that every rule in the tree is available to `profile`.
    pub fn check_rules(&self, profile: &ObserverProfile) -> Result<(), LogicError> {
        for node in self.nodes() {
            if let Step::Rule(r) = &node.step {
                if !profile.has_rule(r.kind()) {
                    return Err(LogicError::RuleNotAvailable {
                        observer: profile.observer,
                        rule: r.kind(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Indented text, conclusion first, children two spaces deeper.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(&mut out, 0);
        out
    }

    fn render_into(&self, out: &mut String, indent: usize) {
        let _ = writeln!(out, "{:indent$}{}    [{}]", "", self.conclusion, self.step.label());
        for c in &self.children {
            c.render_into(out, indent + 2);
        }
    }
}

impl fmt::Display for DerivationTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for DerivationTree {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let param = match &self.step {
            Step::Rule(r) => r.parameter(),
            _ => None,
        };
        let mut s = serializer.serialize_struct("DerivationTree", 3 + usize::from(param.is_some()))?;
        s.serialize_field("conclusion", &self.conclusion)?;
        s.serialize_field("rule", &self.step.name())?;
        if let Some(p) = param {
            s.serialize_field("parameter", p)?;
        }
        s.serialize_field("children", &self.children)?;
        s.end()
    }
}

/// Leaf for one use of `axiom`, taken from the profile's ledger.
pub fn use_axiom(profile: &mut ObserverProfile, axiom: AxiomId) -> Result<DerivationTree, LogicError> {
    let conclusion = profile.ledger.consume(axiom)?;
    Ok(DerivationTree::from_parts(conclusion, Step::Axiom(axiom), Vec::new()))
}

/// Applies `rule` on top of `premises` (in rule order). The ledger is not
/// touched.
pub fn apply_rule(
    profile: &ObserverProfile,
    rule: Rule,
    premises: Vec<DerivationTree>,
) -> Result<DerivationTree, LogicError> {
    if !profile.has_rule(rule.kind()) {
        return Err(LogicError::RuleNotAvailable {
            observer: profile.observer,
            rule: rule.kind(),
        });
    }
    let refs: Vec<&Sequent> = premises.iter().map(|t| &t.conclusion).collect();
    let conclusion = rule.conclude(&refs)?;
    Ok(DerivationTree::from_parts(conclusion, Step::Rule(rule), premises))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::{Formula, Observer, RuleKind};

    fn a() -> Formula {
        Formula::atom("A")
    }

    fn s(text: &str) -> Sequent {
        text.parse().unwrap()
    }

    #[test]
    fn and_formation_for_g() {
        let g = ObserverProfile::quantum_external();
        let t = apply_rule(
            &g,
            Rule::AndFormation,
            vec![DerivationTree::assume(s("|- A")), DerivationTree::assume(s("|- A^"))],
        )
        .unwrap();
        assert_eq!(t.conclusion(), &s("|- A & A^"));
        t.validate().unwrap();
    }

    #[test]
    fn or_formation_for_g() {
        let g = ObserverProfile::quantum_external();
        let t = apply_rule(
            &g,
            Rule::OrFormation,
            vec![DerivationTree::assume(s("A |-")), DerivationTree::assume(s("A^ |-"))],
        )
        .unwrap();
        assert_eq!(t.conclusion(), &s("A (+) A^ |-"));
    }

    #[test]
    fn insider_cannot_cut() {
        let mut p = ObserverProfile::insider();
        let ax = use_axiom(&mut p, AxiomId::Superposition).unwrap();
        let err = apply_rule(&p, Rule::Cut, vec![ax, DerivationTree::assume(s("A & A^ |- A"))]).unwrap_err();
        assert_eq!(
            err,
            LogicError::RuleNotAvailable {
                observer: Observer::P,
                rule: RuleKind::Cut
            }
        );
    }

    #[test]
    fn axiom_uses_are_linear() {
        let mut p = ObserverProfile::insider();
        let t = use_axiom(&mut p, AxiomId::Superposition).unwrap();
        assert_eq!(t.conclusion(), &s("|- A & A^"));
        assert_eq!(
            use_axiom(&mut p, AxiomId::Superposition),
            Err(LogicError::AxiomExhausted {
                axiom: AxiomId::Superposition
            })
        );
        let t = use_axiom(&mut p, AxiomId::Liar).unwrap();
        assert_eq!(t.conclusion(), &s("A^ (+) A |-"));
        // transition axioms are reusable
        for _ in 0..3 {
            use_axiom(&mut p, AxiomId::Mirror).unwrap();
        }
    }

    #[test]
    fn validate_rejects_tampering() {
        let g = ObserverProfile::quantum_external();
        let id = apply_rule(&g, Rule::Identity(a()), vec![]).unwrap();
        let good = apply_rule(&g, Rule::AndLeft1(a().orth()), vec![id]).unwrap();
        good.validate().unwrap();

        let mut bad = good.clone();
        bad.conclusion = s("A & A^ |- A^");
        assert!(matches!(bad.validate(), Err(LogicError::InvalidDerivation { .. })));

        let mut bad = good.clone();
        bad.children[0].conclusion = s("A^ |- A^");
        assert!(bad.validate().is_err());

        let fake_axiom = DerivationTree::from_parts(s("|- A"), Step::Axiom(AxiomId::Superposition), vec![]);
        assert!(fake_axiom.validate().is_err());
    }

    #[test]
    fn render_and_json() {
        let g = ObserverProfile::quantum_external();
        let id = apply_rule(&g, Rule::Identity(a()), vec![]).unwrap();
        let t = apply_rule(&g, Rule::AndLeft1(a().orth()), vec![id]).unwrap();
        assert_eq!(t.render(), "A & A^ |- A    [&L1]\n  A |- A    [id]\n");
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["rule"], "and-left-1");
        assert_eq!(v["parameter"], "A^");
        assert_eq!(v["children"][0]["conclusion"], "A |- A");
        assert_eq!(t.depth(), 2);
    }
}
