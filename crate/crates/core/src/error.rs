use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("path enumeration exceeded the cap of {cap} paths")]
    PathCapExceeded { cap: usize },

    #[error("power iteration did not converge after {iterations} iterations; radius lies in [{lower}, {upper}]")]
    NonConvergence {
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("component {component:?} contains no cycle")]
    NoCycle { component: Vec<String> },

    #[error("beta = {beta} lies within {band} of the critical value {critical} of component {component:?}")]
    AtCriticality {
        beta: f64,
        critical: f64,
        band: f64,
        component: Vec<String>,
    },

    #[error("component {component:?} is not a minimal component")]
    NotMinimal { component: Vec<String> },

    #[error("radii of {first:?} and {second:?} agree within tolerance; minimality is undecidable")]
    NearTie {
        first: Vec<String>,
        second: Vec<String>,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("graph has {size} vertices, above the cap of {cap}")]
    SizeCap { size: usize, cap: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),
}
