use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("power series must have constant term 1, found {0}")]
    BadSeriesConstant(String),

    #[error("expression is not symmetric under root permutations")]
    NonSymmetric,

    #[error("expression is neither even in the roots nor divisible by the Euler factor")]
    NotPontryagin,

    #[error("weight {0} is not dominant for n = {1}")]
    NotDominant(String, usize),

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("dimension mismatch: class has ambient degree {class} but manifold has dimension {manifold}")]
    DimensionMismatch { class: usize, manifold: usize },

    #[error("pairing undefined: monomial {0} carries more than one Chern-character factor")]
    NonlinearChern(String),

    #[error("manifold '{name}' fails self-consistency: {reason}")]
    InconsistentDescriptor { name: String, reason: String },

    #[error("malformed descriptor{}: {reason}", path.as_ref().map(|p| format!(" {p}")).unwrap_or_default())]
    MalformedDescriptor { path: Option<String>, reason: String },

    #[error("operator requires a spin structure but manifold '{0}' is not spin")]
    SpinRequired(String),

    #[error("linear system is singular in the block k = {k} (column partition {column})")]
    SingularSystem { k: usize, column: String },

    #[error("no generator manifold of dimension {0} available")]
    MissingGenerator(usize),

    #[error("jet data supplied to order {got}, need order {need}")]
    InsufficientJets { got: usize, need: usize },

    #[error("heat coefficient has a nonvanishing imaginary part: {0}")]
    ImaginaryHeatCoefficient(String),

    #[error("class is not divisible by the Euler generator: monomial {0}")]
    NotEulerDivisible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown manifold '{0}'")]
    UnknownManifold(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
