//! The end-to-end border scheme.
//!
//! 1. A supplies a classical bit `b`; the machine prepares `|b>` and applies
//!    a Hadamard so that P faces a superposition.
//! 2. P performs a mirror measurement with a diagonal unitary (drawn from
//!    the seed unless given) and hands the resulting axioms to G.
//! 3. G measures projectively (seeded) and cuts the superposition axiom
//!    toward the observed literal. A second cut toward the opposite literal
//!    is attempted and, without cloning, refused.
//! 4. A receives G's judgement and the empirical instances of excluded
//!    middle and non-contradiction, and looks for a derivation of falsum.

use num_complex::Complex64;
use qmirror_core::logic::search::{search_for, DEFAULT_DEPTH};
use qmirror_core::logic::{
    apply_rule, can_communicate, classical_collapse, derive_cut, post_measurement_judgements, AxiomId, Uses,
};
use qmirror_core::qubit::{gates, mirror_measure, normalize, projective_measure_with};
use qmirror_core::sampling::{random_diagonal, seeded_rng};
use qmirror_core::{
    Basis, DerivationTree, DiagonalUnitary2, Formula, LogicError, MeasurementRecord, Observer, ObserverProfile, QubitState,
    Rule, Sequent,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::format::Display;

#[derive(Debug, Clone, Copy)]
pub struct BorderConfig {
    pub seed: u64,
    pub input_bit: Basis,
    pub alpha: Option<Complex64>,
    pub allow_cloning: bool,
}

#[derive(Debug, Clone)]
pub struct BorderReport {
    pub config: BorderConfig,
    pub prepared: QubitState,
    pub superposed: QubitState,
    pub mirror: DiagonalUnitary2,
    pub mirrored: QubitState,
    pub measurement: MeasurementRecord,
    pub insider: ObserverProfile,
    pub external: ObserverProfile,
    /// G's cuts: toward the outcome, then (if allowed) toward its opposite.
    pub cuts: Vec<DerivationTree>,
    pub refused: Option<LogicError>,
    pub conjunction: Option<DerivationTree>,
    pub received: Vec<Sequent>,
    pub falsum: Option<DerivationTree>,
    pub falsum_derivable: bool,
}

pub fn run(config: BorderConfig) -> Result<BorderReport, CliError> {
    let mut rng = seeded_rng(config.seed);

    let prepared = QubitState::basis(config.input_bit);
    let [a, b] = gates::hadamard().apply(prepared.amplitudes());
    let superposed = normalize(a, b)?;

    let mirror = match config.alpha {
        Some(a) => DiagonalUnitary2::new(a, 0.0)?,
        None => random_diagonal(&mut rng),
    };
    let mirrored = mirror_measure(&superposed, &mirror);

    let mut insider = ObserverProfile::insider();
    if config.allow_cloning {
        insider.ledger.grant(AxiomId::Superposition, Uses::Unlimited);
    }
    let mut external = ObserverProfile::quantum_logician();
    insider.ledger.transfer(AxiomId::Superposition, &mut external.ledger)?;
    insider.ledger.transfer(AxiomId::Liar, &mut external.ledger)?;

    let measurement = projective_measure_with(&mirrored, &mut rng);
    let outcome = measurement.outcome;

    let mut cuts = vec![derive_cut(&mut external, outcome)?];
    let mut refused = None;
    let mut conjunction = None;
    match derive_cut(&mut external, outcome.flip()) {
        Ok(t) => {
            cuts.push(t);
            let mut ordered = cuts.clone();
            if outcome == Basis::One {
                ordered.reverse();
            }
            conjunction = Some(apply_rule(&external, Rule::AndFormation, ordered)?);
        }
        Err(e) => refused = Some(e),
    }

    let mut received: Vec<Sequent> = cuts.iter().map(|t| t.conclusion().clone()).collect();
    received.extend(post_measurement_judgements(outcome));

    let classical = ObserverProfile::classical();
    let falsum = if cuts.len() == 2 {
        let given = cuts.iter().map(|t| DerivationTree::assume(t.conclusion().clone())).collect();
        Some(classical_collapse(&classical, given)?)
    } else {
        None
    };
    let falsum_derivable = falsum.is_some()
        || {
            let bottom = Sequent::asserts(Formula::Falsum);
            search_for(&classical, &received, DEFAULT_DEPTH, std::slice::from_ref(&bottom)).derivable(&bottom)
        };

    Ok(BorderReport {
        config,
        prepared,
        superposed,
        mirror,
        mirrored,
        measurement,
        insider,
        external,
        cuts,
        refused,
        conjunction,
        received,
        falsum,
        falsum_derivable,
    })
}

fn pairs() -> [(Observer, Observer); 3] {
    [(Observer::A, Observer::G), (Observer::G, Observer::P), (Observer::A, Observer::P)]
}

fn remaining(p: &ObserverProfile, axiom: AxiomId) -> String {
    p.ledger.remaining(axiom).map_or("none".into(), |u| u.to_string())
}

pub fn to_json(r: &BorderReport) -> Value {
    json!({
        "seed": r.config.seed,
        "input_bit": r.config.input_bit,
        "allow_cloning": r.config.allow_cloning,
        "prepared": r.prepared,
        "superposed": r.superposed,
        "mirror": r.mirror,
        "mirrored": r.mirrored,
        "probabilities_before": r.superposed.probabilities(),
        "probabilities_after": r.mirrored.probabilities(),
        "measurement": { "outcome": r.measurement.outcome, "probability": r.measurement.probability },
        "P": { "superposition_remaining": remaining(&r.insider, AxiomId::Superposition) },
        "G": {
            "derivations": r.cuts,
            "refused": r.refused.as_ref().map(ToString::to_string),
            "conjunction": r.conjunction,
            "superposition_remaining": remaining(&r.external, AxiomId::Superposition),
        },
        "A": {
            "received": r.received,
            "falsum_derivable": r.falsum_derivable,
            "falsum": r.falsum,
        },
        "communication": pairs().iter().map(|&(x, y)| json!({
            "pair": format!("{x}@{y}"),
            "holds": can_communicate(x, y),
        })).collect::<Vec<_>>(),
    })
}

fn indent(text: &str, by: usize) -> String {
    text.lines().map(|l| format!("{:by$}{l}\n", "")).collect()
}

pub fn render(r: &BorderReport, d: &Display) -> String {
    let c = &r.config;
    let mut out = format!(
        "border scheme, seed {}, input bit {}{}\n",
        c.seed,
        c.input_bit,
        if c.allow_cloning { ", cloning allowed" } else { "" }
    );
    out.push_str(&format!("A  prepares |{}>, Hadamard gives {}\n", c.input_bit, d.state(&r.superposed)));
    out.push_str(&format!(
        "P  mirror measurement, alpha = {}, phi = {}\n   {}\n   {} (before: {})\n",
        d.complex(r.mirror.alpha()),
        d.real(r.mirror.phase()),
        d.state(&r.mirrored),
        d.probabilities(r.mirrored.probabilities()),
        d.probabilities(r.superposed.probabilities()),
    ));
    out.push_str(&format!(
        "P  hands {} to G (P keeps {})\n",
        AxiomId::Superposition.sequent(),
        remaining(&r.insider, AxiomId::Superposition)
    ));
    out.push_str(&format!(
        "G  projective measurement: outcome {} with probability {}\n",
        r.measurement.outcome,
        d.real(r.measurement.probability)
    ));
    for t in &r.cuts {
        out.push_str(&format!("G  derives {}\n", t.conclusion()));
        out.push_str(&indent(&t.render(), 5));
    }
    if let Some(e) = &r.refused {
        out.push_str(&format!("G  second cut refused: {e}\n"));
    }
    if let Some(t) = &r.conjunction {
        out.push_str(&format!("G  forms {}\n", t.conclusion()));
    }
    let received: Vec<String> = r.received.iter().map(ToString::to_string).collect();
    out.push_str(&format!("A  receives {}\n", received.join(", ")));
    match &r.falsum {
        Some(t) => {
            out.push_str(&format!("A  derives {}\n", t.conclusion()));
            out.push_str(&indent(&t.render(), 5));
        }
        None => out.push_str(&format!(
            "A  bounded search (depth {DEFAULT_DEPTH}): falsum {}\n",
            if r.falsum_derivable { "derivable" } else { "not derivable" }
        )),
    }
    out.push_str("communication");
    for (x, y) in pairs() {
        out.push_str(&format!("  {x}@{y} {}", if can_communicate(x, y) { "yes" } else { "no" }));
    }
    out.push('\n');
    out
}
