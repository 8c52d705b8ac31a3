//! Measurement scripts.
//!
//! ```json
//! {
//!   "initial_state": { "a": [0.6, 0.0], "b": "0.8" },
//!   "seed": 7,
//!   "steps": [
//!     { "kind": "mirror", "alpha": [0.0, 1.0] },
//!     { "kind": "project", "outcome": 0 }
//!   ]
//! }
//! ```
//!
//! The initial amplitudes are normalized on load. `mirror`, `liar` and
//! `dual-mirror` take `alpha` (unit modulus) and an optional `phi`; `fuzzy`
//! takes `alpha`, `beta` with `|alpha|^2 + |beta|^2 = 1` and an optional
//! `phi`; `project` samples an outcome from the seeded generator unless
//! `outcome` forces one.

use qmirror_core::qubit::{
    bloch_coordinates, collapse, dual_basis_mirror, fuzzy_measure, liar_measure, mirror_measure, normalize,
    projective_measure_with,
};
use qmirror_core::sampling::seeded_rng;
use qmirror_core::{Basis, DiagonalUnitary2, QubitState, Unitary2};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::amplitude::Amplitude;
use crate::error::CliError;
use crate::format::Display;

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawState {
    pub a: Amplitude,
    pub b: Amplitude,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioScript {
    pub initial_state: RawState,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub steps: Vec<Value>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum StepSpec {
    Mirror {
        alpha: Amplitude,
        #[serde(default)]
        phi: f64,
    },
    Liar {
        alpha: Amplitude,
        #[serde(default)]
        phi: f64,
    },
    DualMirror {
        alpha: Amplitude,
        #[serde(default)]
        phi: f64,
    },
    Fuzzy {
        alpha: Amplitude,
        beta: Amplitude,
        #[serde(default)]
        phi: f64,
    },
    Project {
        #[serde(default)]
        outcome: Option<Basis>,
    },
}

/// A validated step.
#[derive(Debug, Clone, Copy)]
pub enum Step {
    Mirror(DiagonalUnitary2),
    Liar(DiagonalUnitary2),
    DualMirror(DiagonalUnitary2),
    Fuzzy(Unitary2),
    Project(Option<Basis>),
}

impl Step {
    fn kind(&self) -> &'static str {
        match self {
            Step::Mirror(_) => "mirror",
            Step::Liar(_) => "liar",
            Step::DualMirror(_) => "dual-mirror",
            Step::Fuzzy(_) => "fuzzy",
            Step::Project(_) => "project",
        }
    }
}

impl TryFrom<StepSpec> for Step {
    type Error = qmirror_core::QubitError;

    fn try_from(spec: StepSpec) -> Result<Self, Self::Error> {
        Ok(match spec {
            StepSpec::Mirror { alpha, phi } => Step::Mirror(DiagonalUnitary2::new(alpha.value(), phi)?),
            StepSpec::Liar { alpha, phi } => Step::Liar(DiagonalUnitary2::new(alpha.value(), phi)?),
            StepSpec::DualMirror { alpha, phi } => Step::DualMirror(DiagonalUnitary2::new(alpha.value(), phi)?),
            StepSpec::Fuzzy { alpha, beta, phi } => Step::Fuzzy(Unitary2::new(alpha.value(), beta.value(), phi)?),
            StepSpec::Project { outcome } => Step::Project(outcome),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StepReport {
    pub index: usize,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<Basis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probability: Option<f64>,
    pub state: QubitState,
    pub probabilities: [f64; 2],
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioReport {
    pub seed: u64,
    pub initial_state: QubitState,
    pub steps: Vec<StepReport>,
    pub final_state: QubitState,
    pub final_probabilities: [f64; 2],
    pub bloch: qmirror_core::BlochPoint,
}

pub fn parse_script(text: &str) -> Result<ScenarioScript, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::validation(format!("script: {e}")))
}

/// Parses and checks every step before anything runs.
pub fn validate_steps(raw: &[Value]) -> Result<Vec<Step>, CliError> {
    raw.iter()
        .enumerate()
        .map(|(i, v)| {
            let spec: StepSpec = serde_json::from_value(v.clone()).map_err(|e| CliError::at_step(i, e))?;
            Step::try_from(spec).map_err(|e| CliError::at_step(i, e))
        })
        .collect()
}

pub fn initial_state(raw: RawState) -> Result<QubitState, CliError> {
    normalize(raw.a.value(), raw.b.value()).map_err(|e| CliError::validation(format!("initial_state: {e}")))
}

pub fn run_steps(initial: QubitState, steps: &[Step], seed: u64) -> Result<ScenarioReport, CliError> {
    let mut rng = seeded_rng(seed);
    let mut psi = initial;
    let mut reports = Vec::with_capacity(steps.len());
    for (index, step) in steps.iter().enumerate() {
        let (mut outcome, mut probability) = (None, None);
        psi = match step {
            Step::Mirror(u) => mirror_measure(&psi, u),
            Step::Liar(u) => liar_measure(&psi, u),
            Step::DualMirror(u) => dual_basis_mirror(&psi, u),
            Step::Fuzzy(u) => fuzzy_measure(&psi, u),
            Step::Project(forced) => {
                let record = match forced {
                    Some(i) => collapse(&psi, *i).map_err(|e| CliError::at_step(index, e))?,
                    None => projective_measure_with(&psi, &mut rng),
                };
                outcome = Some(record.outcome);
                probability = Some(record.probability);
                record.post_state
            }
        };
        reports.push(StepReport {
            index,
            kind: step.kind(),
            outcome,
            probability,
            state: psi,
            probabilities: psi.probabilities(),
        });
    }
    Ok(ScenarioReport {
        seed,
        initial_state: initial,
        steps: reports,
        final_state: psi,
        final_probabilities: psi.probabilities(),
        bloch: bloch_coordinates(&psi),
    })
}

pub fn render(report: &ScenarioReport, d: &Display) -> String {
    let mut out = format!("seed {}\n", report.seed);
    out.push_str(&format!("initial   {}\n", d.state(&report.initial_state)));
    out.push_str(&format!("          {}\n", d.probabilities(report.initial_state.probabilities())));
    for s in &report.steps {
        out.push_str(&format!("[{}] {}", s.index, s.kind));
        if let (Some(o), Some(p)) = (s.outcome, s.probability) {
            out.push_str(&format!(" -> outcome {o} with probability {}", d.real(p)));
        }
        out.push('\n');
        out.push_str(&format!("          {}\n", d.state(&s.state)));
        out.push_str(&format!("          {}\n", d.probabilities(s.probabilities)));
    }
    out.push_str(&format!(
        "final     {}\nbloch     theta = {}, phi = {}\n",
        d.state(&report.final_state),
        d.real(report.bloch.theta),
        d.real(report.bloch.phi)
    ));
    out
}
