use thiserror::Error;

/// Errors raised while constructing or certifying a quadrature rule.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The polynomial does not have the expected number of real roots in the bracket.
    #[error("expected {expected} real roots in the bracket, found {found}")]
    RootCountMismatch { expected: usize, found: usize },

    /// Newton polishing of a root did not settle.
    #[error("Newton polish did not converge near x = {x}")]
    ConvergenceFailure { x: f64 },

    /// A denominator of a closed formula vanished.
    #[error("degenerate denominator in {context}")]
    DegenerateDenominator { context: &'static str },

    /// A quadratic for a recursion parameter has no real solution.
    #[error("negative discriminant in {context}")]
    NegativeDiscriminant { context: &'static str },

    /// The request asks for a node distribution the sweeps cannot build.
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),

    /// Malformed input such as a non-positive subinterval length.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// No admissible free parameter places a node at the requested abscissa.
    #[error("no free parameter places a node at x = {target}")]
    TargetUnreachable { target: f64 },

    /// A fixed-point iteration ran out of iterations.
    #[error("fixed-point iteration did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    /// An error raised while building the rule of one subinterval.
    #[error("subinterval {index}: {source}")]
    AtSubinterval {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Attaches a one-based subinterval index.
    pub fn at(self, index: usize) -> Self {
        Error::AtSubinterval {
            index,
            source: Box::new(self),
        }
    }

    /// The innermost error, with subinterval wrappers removed.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::AtSubinterval { source, .. } => source.root_cause(),
            other => other,
        }
    }

    /// True for failures of the numerics as opposed to malformed requests.
    pub fn is_numeric(&self) -> bool {
        !matches!(
            self.root_cause(),
            Error::UnsupportedConfiguration(_) | Error::InvalidInput(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
