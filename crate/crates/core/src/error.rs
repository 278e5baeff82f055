use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid value {value} for `{field}`: {reason}")]
    InvalidParameter {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "{what} did not converge after {evals} evaluations (estimate {value:e}, error {abs_err:e})"
    )]
    NotConverged {
        what: &'static str,
        value: f64,
        abs_err: f64,
        evals: usize,
    },

    #[error("integrand returned a non-finite value at x = {0:e}")]
    NonFinite(f64),

    #[error("zeta = {zeta:e} eV lies outside the tabulated range [{min:e}, {max:e}] eV")]
    OutOfRange { zeta: f64, min: f64, max: f64 },

    #[error("no Drude row for ambient index {index}; valid indices are {valid}")]
    UnknownTableRow { index: f64, valid: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("missing mandatory field `{0}`")]
    MissingField(&'static str),

    #[error("unknown material `{0}`")]
    UnknownMaterial(String),

    #[error("duplicate material name `{0}`")]
    DuplicateMaterial(String),

    #[error("at separation {separation} nm: {source}")]
    AtSeparation {
        separation: f64,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(field: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParameter {
            field,
            value,
            reason,
        }
    }
}
