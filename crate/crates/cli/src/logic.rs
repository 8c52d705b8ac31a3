//! Derivation scripts run under an observer profile.

use qmirror_core::logic::{run_script, AxiomId, ScriptStep, Uses};
use qmirror_core::{DerivationTree, Observer, ObserverProfile};
use serde_json::{json, Value};

use crate::error::CliError;

pub fn parse_script(text: &str) -> Result<Vec<ScriptStep>, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::validation(format!("derivation script: {e}")))
}

/// Profile for `observer`; with cloning the truth and falsity axioms are
/// unlimited.
pub fn profile(observer: Observer, allow_cloning: bool) -> ObserverProfile {
    let mut p = ObserverProfile::for_observer(observer);
    if allow_cloning {
        for axiom in [AxiomId::Superposition, AxiomId::Liar] {
            p.ledger.grant(axiom, Uses::Unlimited);
        }
    }
    p
}

pub struct LogicReport {
    pub profile: ObserverProfile,
    /// One entry per completed run: the tree of every step.
    pub runs: Vec<Vec<DerivationTree>>,
}

/// Runs the script `repeat` times on one ledger. A failing run aborts with
/// its index; earlier runs are discarded.
pub fn run(steps: &[ScriptStep], mut profile: ObserverProfile, repeat: usize) -> Result<LogicReport, CliError> {
    let mut runs = Vec::with_capacity(repeat);
    for r in 0..repeat {
        let trees = run_script(&mut profile, steps).map_err(|e| CliError::Engine {
            run: Some(r),
            step: Some(e.step),
            source: e.source,
        })?;
        runs.push(trees);
    }
    Ok(LogicReport { profile, runs })
}

fn ledger_json(p: &ObserverProfile) -> Value {
    p.ledger
        .entries()
        .iter()
        .map(|e| json!({ "axiom": e.axiom, "sequent": e.sequent, "remaining": e.remaining.to_string() }))
        .collect()
}

pub fn to_json(r: &LogicReport) -> Value {
    json!({
        "observer": r.profile.observer,
        "rules": r.profile.rules,
        "runs": r.runs.iter().map(|trees| json!({
            "conclusion": trees.last().map(|t| t.conclusion()),
            "tree": trees.last(),
            "steps": trees.iter().map(|t| t.conclusion()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "ledger": ledger_json(&r.profile),
    })
}

pub fn render(r: &LogicReport) -> String {
    let p = &r.profile;
    let mut out = format!("observer {} ({})\n", p.observer, p.observer.describe());
    for (i, trees) in r.runs.iter().enumerate() {
        out.push_str(&format!("run {i}\n"));
        match trees.last() {
            Some(t) => out.push_str(&t.render()),
            None => out.push_str("(empty script)\n"),
        }
    }
    out.push_str("ledger\n");
    if p.ledger.entries().is_empty() {
        out.push_str("  (empty)\n");
    }
    for e in p.ledger.entries() {
        out.push_str(&format!("  {:<14} {:<22} remaining {}\n", e.axiom.name(), e.sequent.to_string(), e.remaining));
    }
    out
}
