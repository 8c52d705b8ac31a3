//! Step-by-step derivation scripts.
//!
//! Each step produces one tree; rule steps refer to earlier results by
//! index. A result resting on a use-once axiom can feed only one later
//! step, otherwise the script would copy the judgement.

use serde::Deserialize;
use thiserror::Error;

use super::{apply_rule, use_axiom, AxiomId, DerivationTree, Formula, LogicError, ObserverProfile, Rule, RuleKind};
use super::Sequent;

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(tag = "op", rename_all = "lowercase", deny_unknown_fields)]
pub enum ScriptStep {
    Axiom {
        id: AxiomId,
    },
    Rule {
        name: RuleKind,
        #[serde(default)]
        premises: Vec<usize>,
        #[serde(default)]
        formula: Option<Formula>,
    },
    /// A judgement received from another observer.
    Assume {
        sequent: Sequent,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {step}: {source}")]
pub struct ScriptError {
    pub step: usize,
    pub source: LogicError,
}

/// Runs `steps` under `profile`, consuming axioms from its ledger. Returns
/// one tree per step.
pub fn run_script(profile: &mut ObserverProfile, steps: &[ScriptStep]) -> Result<Vec<DerivationTree>, ScriptError> {
    let mut results: Vec<DerivationTree> = Vec::with_capacity(steps.len());
    // linear axiom a result depends on, and whether it was already used
    let mut linear: Vec<Option<AxiomId>> = Vec::with_capacity(steps.len());
    let mut spent: Vec<bool> = Vec::with_capacity(steps.len());

    for (step, s) in steps.iter().enumerate() {
        let fail = |source: LogicError| ScriptError { step, source };
        let (tree, dep) = match s {
            ScriptStep::Axiom { id } => {
                let once = profile.ledger.is_linear(*id);
                (use_axiom(profile, *id).map_err(fail)?, once.then_some(*id))
            }
            ScriptStep::Assume { sequent } => (DerivationTree::assume(sequent.clone()), None),
            ScriptStep::Rule {
                name,
                premises,
                formula,
            } => {
                let rule = Rule::build(*name, formula.clone()).map_err(fail)?;
                let mut inputs = Vec::with_capacity(premises.len());
                let mut dep = None;
                for &i in premises {
                    if i >= step {
                        return Err(fail(LogicError::InvalidDerivation {
                            reason: format!("premise {i} is not an earlier step"),
                        }));
                    }
                    if let Some(axiom) = linear[i] {
                        if spent[i] {
                            return Err(fail(LogicError::AxiomExhausted { axiom }));
                        }
                        spent[i] = true;
                        dep = dep.or(Some(axiom));
                    }
                    inputs.push(results[i].clone());
                }
                (apply_rule(profile, rule, inputs).map_err(fail)?, dep)
            }
        };
        results.push(tree);
        linear.push(dep);
        spent.push(false);
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn steps(json: &str) -> Vec<ScriptStep> {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn cut_script() {
        let script = steps(
            r#"[
                {"op":"axiom","id":"superposition"},
                {"op":"rule","name":"identity","formula":"A"},
                {"op":"rule","name":"and-left-1","premises":[1],"formula":"A^"},
                {"op":"rule","name":"cut","premises":[0,2]}
            ]"#,
        );
        let mut g = ObserverProfile::quantum_external();
        let out = run_script(&mut g, &script).unwrap();
        assert_eq!(out[3].conclusion().to_string(), "|- A");
    }

    #[test]
    fn linear_result_cannot_feed_two_steps() {
        let script = steps(
            r#"[
                {"op":"axiom","id":"superposition"},
                {"op":"rule","name":"and-formation","premises":[0,0]}
            ]"#,
        );
        let mut g = ObserverProfile::quantum_external();
        let err = run_script(&mut g, &script).unwrap_err();
        assert_eq!(err.step, 1);
        assert_eq!(
            err.source,
            LogicError::AxiomExhausted {
                axiom: AxiomId::Superposition
            }
        );
    }

    #[test]
    fn errors_carry_step_index() {
        let script = steps(r#"[{"op":"axiom","id":"superposition"},{"op":"axiom","id":"superposition"}]"#);
        let err = run_script(&mut ObserverProfile::quantum_external(), &script).unwrap_err();
        assert_eq!(err.step, 1);
        let script = steps(r#"[{"op":"rule","name":"cut","premises":[3,4]}]"#);
        let err = run_script(&mut ObserverProfile::quantum_external(), &script).unwrap_err();
        assert!(matches!(err.source, LogicError::InvalidDerivation { .. }));
        let script = steps(r#"[{"op":"rule","name":"modus-ponens","premises":[]}]"#);
        let err = run_script(&mut ObserverProfile::quantum_external(), &script).unwrap_err();
        assert!(matches!(err.source, LogicError::RuleNotAvailable { .. }));
    }

    #[test]
    fn unknown_fields_rejected() {
        assert!(serde_json::from_str::<Vec<ScriptStep>>(r#"[{"op":"axiom","id":"mirror","x":1}]"#).is_err());
        assert!(serde_json::from_str::<Vec<ScriptStep>>(r#"[{"op":"jump"}]"#).is_err());
    }
}
