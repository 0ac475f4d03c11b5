use thiserror::Error;

/// Failures reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the supported domain of a special function.
    #[error("domain error in {function}: order {order}, argument {x}")]
    Domain {
        function: &'static str,
        order: u32,
        x: f64,
    },
    /// A coefficient denominator evaluated to exact zero.
    #[error("resonance denominator vanished at k = {k}, m = {m}")]
    ResonanceDenominator { k: f64, m: u32 },
    /// A phase was requested for a value off the unit circle.
    #[error("eigenvalue is not unimodular: |gamma| = {modulus}")]
    NotUnimodular { modulus: f64 },
    /// Cayley transform requested at the branch point `delta = 0`.
    #[error("phase {delta} is at the Cayley branch point")]
    PhaseAtBranchPoint { delta: f64 },
    /// Invalid configuration or precondition violation.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A numerical failure while evaluating mode `m` at wavenumber `k`.
    #[error("at k = {k}, m = {m}: {source}")]
    AtMode {
        k: f64,
        m: u32,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attaches the `(k, m)` pair, unless the error already names one.
    pub fn at_mode(self, k: f64, m: u32) -> Self {
        match self {
            e @ (Error::AtMode { .. } | Error::ResonanceDenominator { .. } | Error::InvalidInput(_)) => e,
            e => Error::AtMode { k, m, source: Box::new(e) },
        }
    }

    /// Configuration problems, as opposed to numerical failures.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::InvalidInput(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
