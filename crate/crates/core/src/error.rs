use thiserror::Error;

/// Errors raised anywhere in the evaluation stack.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Γ evaluated at a nonpositive integer.
    #[error("pole of the gamma function at x = {0}")]
    Pole(f64),

    /// A series ran out of terms before meeting its stopping rule.
    #[error("series did not converge after {terms} terms ({what})")]
    SeriesNonConvergence { what: &'static str, terms: usize },

    /// An adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: {what} (estimate {value:e} +/- {err:e})")]
    QuadratureNonConvergence { what: String, value: f64, err: f64 },

    /// A nested quadrature asked for more accuracy than its inner values carry.
    #[error("rel_tol {requested:e} is below the quadrature floor {floor:e} for {what}")]
    BelowFloor { what: String, requested: f64, floor: f64 },

    /// The semi-infinite integrator could not find the decay point.
    #[error("integrand tail not found below the truncation ratio by u = {searched_to:e}")]
    TailNotFound { searched_to: f64 },

    /// The integrand returned NaN or an infinity.
    #[error("integrand returned a non-finite value at x = {0}")]
    NonFiniteIntegrand(f64),

    /// A series lost too many digits to cancellation for the requested route.
    #[error("cancellation: {0}")]
    Cancellation(String),

    /// Identity id not present in the catalog.
    #[error("unknown identity {0}")]
    UnknownIdentity(String),

    /// A failure while evaluating one identity, tagged with its id.
    #[error("{id}: {source}")]
    Identity {
        id: String,
        #[source]
        source: Box<Error>,
    },

    /// Malformed command line or configuration input.
    #[error("usage: {0}")]
    Usage(String),

    #[error("i/o: {0}")]
    Io(String),
}

impl Error {
    /// True for caller mistakes (bad parameters, unknown ids), false for
    /// numerical failures.
    pub fn is_usage(&self) -> bool {
        match self {
            Error::Domain(_) | Error::Pole(_) | Error::UnknownIdentity(_) | Error::Usage(_) => true,
            Error::Identity { source, .. } => source.is_usage(),
            _ => false,
        }
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

/// Collects the first error raised inside an integrand closure, which must
/// itself return a plain f64.
#[derive(Default)]
pub(crate) struct ErrorTrap(std::cell::RefCell<Option<Error>>);

impl ErrorTrap {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// The value of `f`, or 0 after recording its error. Once an error is
    /// held, `f` is no longer called.
    pub(crate) fn take(&self, f: impl FnOnce() -> Result<f64>) -> f64 {
        if self.0.borrow().is_some() {
            return 0.0;
        }
        match f() {
            Ok(v) => v,
            Err(e) => {
                *self.0.borrow_mut() = Some(e);
                0.0
            }
        }
    }

    /// Passes `r` through unless an error was trapped on the way.
    pub(crate) fn check<T>(self, r: Result<T>) -> Result<T> {
        match self.0.into_inner() {
            Some(e) => Err(e),
            None => r,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
