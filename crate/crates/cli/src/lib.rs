//! Command-line front end: measurement scripts, decompositions, fuzzy
//! spheres, derivation scripts and the border scheme.

pub mod amplitude;
pub mod border;
pub mod decompose;
pub mod error;
pub mod format;
pub mod fuzzy;
pub mod logic;
pub mod simulate;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use qmirror_core::{Basis, Observer};
use serde_json::Value;

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "qmirror", version, about = "Reversible single-qubit measurements and the observers that reason about them")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for every random draw (overrides a script's own seed).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Emit JSON instead of text, including errors.
    #[arg(long, global = true)]
    pub json: bool,
    /// Magnitudes below this print as 0 in text output. Checks are unaffected.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tolerance: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a measurement script.
    Simulate {
        /// JSON script with `initial_state`, `seed` and `steps`.
        script: PathBuf,
        /// Replace the initial state, e.g. `0.6,0.8i` or `1@0,1@1.57`.
        #[arg(long)]
        state: Option<String>,
    },
    /// Euler and phase-shift decomposition of a 2x2 unitary.
    Decompose {
        /// Gate name (identity, hadamard, not, pauli-x, pauli-y, pauli-z,
        /// phase-i), inline `{"rows": ...}` JSON, or a file holding it.
        matrix: String,
    },
    /// Unit-radius fuzzy sphere of dimension n.
    Fuzzy {
        /// Matrix dimension, 2 to 1024.
        n: usize,
    },
    /// Run a derivation script under an observer's rules and ledger.
    Logic {
        /// JSON array of `axiom`, `rule` and `assume` steps.
        script: PathBuf,
        /// Observer: P (insider), G (quantum logician) or A (classical).
        #[arg(long, default_value = "G")]
        profile: Observer,
        /// Run the script this many times on the same ledger.
        #[arg(long, default_value_t = 1)]
        repeat: usize,
        /// Make the truth and falsity axioms unlimited.
        #[arg(long)]
        allow_cloning: bool,
    },
    /// End-to-end border scheme: A's input bit is prepared as |b> and put
    /// through a Hadamard before P's mirror measurement; G measures and
    /// cuts; A checks for falsum.
    Border {
        /// Classical input bit supplied by A.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=1))]
        input_bit: u8,
        /// Alpha of P's mirror unitary, e.g. `i` or `1@0.3`; drawn from the
        /// seed when omitted.
        #[arg(long)]
        alpha: Option<String>,
        /// Let P's superposition axiom be copied.
        #[arg(long)]
        allow_cloning: bool,
    },
}

/// Result of a command in both renderings.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::validation(format!("{}: {e}", path.display())))
}

fn parse_state(text: &str) -> Result<qmirror_core::QubitState, CliError> {
    let (a, b) = text
        .split_once(',')
        .ok_or_else(|| CliError::Usage(format!("--state expects `a,b`, got `{text}`")))?;
    let a = amplitude::parse_amplitude(a).map_err(CliError::Usage)?;
    let b = amplitude::parse_amplitude(b).map_err(CliError::Usage)?;
    Ok(qmirror_core::qubit::normalize(a, b)?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    if !(cli.tolerance.is_finite() && cli.tolerance >= 0.0) {
        return Err(CliError::Usage(format!("--tolerance must be a non-negative number, got {}", cli.tolerance)));
    }
    let display = format::Display { tol: cli.tolerance };
    match &cli.command {
        Command::Simulate { script, state } => {
            let parsed = simulate::parse_script(&read(script)?)?;
            let initial = match state {
                Some(s) => parse_state(s)?,
                None => simulate::initial_state(parsed.initial_state)?,
            };
            let steps = simulate::validate_steps(&parsed.steps)?;
            let report = simulate::run_steps(initial, &steps, cli.seed.unwrap_or(parsed.seed))?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("report serializes"),
                text: simulate::render(&report, &display),
            })
        }
        Command::Decompose { matrix } => {
            let report = decompose::decompose(decompose::read_matrix(matrix)?)?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("report serializes"),
                text: decompose::render(&report, &display),
            })
        }
        Command::Fuzzy { n } => {
            let report = fuzzy::build(*n)?;
            Ok(Output {
                json: fuzzy::to_json(&report),
                text: fuzzy::render(&report, &display),
            })
        }
        Command::Logic {
            script,
            profile,
            repeat,
            allow_cloning,
        } => {
            let steps = logic::parse_script(&read(script)?)?;
            let report = logic::run(&steps, logic::profile(*profile, *allow_cloning), *repeat)?;
            Ok(Output {
                json: logic::to_json(&report),
                text: logic::render(&report),
            })
        }
        Command::Border {
            input_bit,
            alpha,
            allow_cloning,
        } => {
            let alpha = alpha
                .as_deref()
                .map(amplitude::parse_amplitude)
                .transpose()
                .map_err(CliError::Usage)?;
            let report = border::run(border::BorderConfig {
                seed: cli.seed.unwrap_or(0),
                input_bit: if *input_bit == 0 { Basis::Zero } else { Basis::One },
                alpha,
                allow_cloning: *allow_cloning,
            })?;
            Ok(Output {
                json: border::to_json(&report),
                text: border::render(&report, &display),
            })
        }
    }
}
