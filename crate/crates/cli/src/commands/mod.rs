//! One module per subcommand. Each returns an [`Output`] carrying both the
//! JSON report and the text rendering; `main` picks one.

pub mod analyze;
pub mod compare;
pub mod family;
pub mod growth;
pub mod partition;
pub mod states;

use std::path::Path;

use kmsgraph::spectral::{scc_decomposition_with, SccReport};
use kmsgraph::{parse_any, DirectedMultigraph, Error, Settings};
use serde_json::Value;

use crate::report::Report;
use crate::BetaArgs;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ISO_MISMATCH: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_CRITICAL: i32 = 4;
pub const EXIT_OTHER: i32 = 5;

pub struct Ctx {
    pub settings: Settings,
    /// Raw arguments after the program name, echoed into the report.
    pub args: Vec<String>,
}

impl Ctx {
    pub fn report(&self, command: &str, g: Option<&DirectedMultigraph>, payload: Value) -> Report {
        Report::new(command, self.args.clone(), g, payload)
    }

    pub fn scc(&self, g: &DirectedMultigraph) -> Result<SccReport, CliError> {
        Ok(scc_decomposition_with(g, &self.settings)?)
    }
}

pub struct Output {
    pub report: Report,
    pub text: String,
    pub code: i32,
}

impl Output {
    pub fn ok(report: Report, text: String) -> Self {
        Self {
            report,
            text,
            code: EXIT_OK,
        }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::UnknownVertex(_) | Error::InvalidInput(_) => EXIT_INPUT,
            Error::AtCriticality { .. } => EXIT_CRITICAL,
            _ => EXIT_OTHER,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

pub fn load_graph(path: &Path) -> Result<DirectedMultigraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_any(&text).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

/// `beta` itself, or `ln x` for `--beta-log x`.
pub fn resolve_beta(b: BetaArgs) -> Result<f64, CliError> {
    let beta = match (b.beta, b.beta_log) {
        (Some(beta), _) => beta,
        (None, Some(x)) if x > 0.0 => x.ln(),
        (None, Some(x)) => return Err(CliError::input(format!("--beta-log needs a positive argument, got {x}"))),
        (None, None) => return Err(CliError::input("no inverse temperature given")),
    };
    if !beta.is_finite() {
        return Err(CliError::input(format!("beta must be finite, got {beta}")));
    }
    Ok(beta)
}

/// `{a, b}` style rendering of a vertex set.
pub fn set_text(g: &DirectedMultigraph, ids: &[usize]) -> String {
    format!("{{{}}}", g.names_of(ids).join(", "))
}
