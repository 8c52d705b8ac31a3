use qmirror_core::logic::ScriptError;
use qmirror_core::{FuzzyError, LogicError, QubitError};
use serde_json::{json, Value};
use thiserror::Error;

/// Failure of a command, classified by exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad command line.
    #[error("{0}")]
    Usage(String),
    /// Input that does not satisfy a precondition.
    #[error("{}", located(.step, .message))]
    Validation { step: Option<usize>, message: String },
    /// The logic engine refused a derivation.
    #[error("{}", engine(.run, .step, .source))]
    Engine {
        run: Option<usize>,
        step: Option<usize>,
        source: LogicError,
    },
}

fn located(step: &Option<usize>, message: &str) -> String {
    match step {
        Some(i) => format!("step {i}: {message}"),
        None => message.to_string(),
    }
}

fn engine(run: &Option<usize>, step: &Option<usize>, source: &LogicError) -> String {
    let mut prefix = String::new();
    if let Some(r) = run {
        prefix.push_str(&format!("run {r}, "));
    }
    if let Some(s) = step {
        prefix.push_str(&format!("step {s}: "));
    }
    format!("{prefix}{source}")
}

impl CliError {
    pub fn validation(message: impl Into<String>) -> Self {
        CliError::Validation {
            step: None,
            message: message.into(),
        }
    }

    pub fn at_step(step: usize, message: impl ToString) -> Self {
        CliError::Validation {
            step: Some(step),
            message: message.to_string(),
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Validation { .. } => 2,
            CliError::Engine { .. } => 3,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Validation { .. } => "validation",
            CliError::Engine { .. } => "engine",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut err = json!({
            "kind": self.kind(),
            "code": self.exit_code(),
            "message": self.to_string(),
        });
        match self {
            CliError::Validation { step: Some(s), .. } => err["step"] = json!(s),
            CliError::Engine { run, step, .. } => {
                if let Some(r) = run {
                    err["run"] = json!(r);
                }
                if let Some(s) = step {
                    err["step"] = json!(s);
                }
            }
            _ => {}
        }
        json!({ "error": err })
    }
}

impl From<QubitError> for CliError {
    fn from(e: QubitError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<FuzzyError> for CliError {
    fn from(e: FuzzyError) -> Self {
        CliError::validation(e.to_string())
    }
}

impl From<LogicError> for CliError {
    fn from(source: LogicError) -> Self {
        CliError::Engine {
            run: None,
            step: None,
            source,
        }
    }
}

impl From<ScriptError> for CliError {
    fn from(e: ScriptError) -> Self {
        CliError::Engine {
            run: None,
            step: Some(e.step),
            source: e.source,
        }
    }
}
