use thiserror::Error;

/// Errors raised by the series, continuation, integral and matrix-element
/// evaluators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: f64 },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("series diverges: {0}")]
    Divergence(String),

    #[error("{what} did not converge within {terms} terms")]
    NonConvergence { what: String, terms: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular configuration: {0}")]
    Singular(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("method not applicable: {0}")]
    Method(String),

    #[error("branch ambiguity: {0}")]
    Branch(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("no applicable strategy; tried: {}", tried.join("; "))]
    NoStrategy { tried: Vec<String> },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("quadrature failed: {0}")]
    Quadrature(String),

    #[error("{side} side failed: {source}")]
    Side {
        side: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("element ({n}, {m}): {source}")]
    Element {
        n: usize,
        m: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for errors caused by the caller's input (bad parameters, domain
    /// violations) as opposed to numerical failures.
    pub fn is_input_error(&self) -> bool {
        match self {
            Error::Pole { .. }
            | Error::Parameter(_)
            | Error::Domain(_)
            | Error::Singular(_)
            | Error::Precondition(_)
            | Error::Method(_)
            | Error::Branch(_)
            | Error::Degenerate(_)
            | Error::Divergence(_)
            | Error::UnknownIdentity(_) => true,
            Error::NonConvergence { .. } | Error::NoStrategy { .. } | Error::Quadrature(_) => {
                false
            }
            Error::Side { source, .. } | Error::Element { source, .. } => source.is_input_error(),
        }
    }

    pub(crate) fn on_side(self, side: &'static str) -> Error {
        Error::Side {
            side,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
