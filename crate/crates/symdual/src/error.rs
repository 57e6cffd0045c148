use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix contains non-finite entries")]
    InvalidMatrix,
    #[error("dimension mismatch: {0}")]
    DimensionError(String),
    #[error("form is not definite where definiteness is required")]
    FormNotDefinite,
    #[error("matrix is not an involution within tolerance (residual {0:.3e})")]
    NotInvolution(f64),
    #[error("basis is linearly dependent over the reals")]
    DependentBasis,
    #[error("span is not closed under the bracket (residual {0:.3e})")]
    NotClosed(f64),
    #[error("element is not in the span (residual {0:.3e})")]
    NotInSpan(f64),
    #[error("ambient algebra is not semisimple")]
    AmbientNotSemisimple,
    #[error("basis span is not closed under X -> -X^H")]
    NotStarClosed,
    #[error("B_theta is not positive definite: not a Cartan involution")]
    NotCartan,
    #[error("subspace is not contained in p (residual {0:.3e})")]
    NotInP(f64),
    #[error("dual basis failed bracket closure (residual {0:.3e})")]
    DualityBroken(f64),
    #[error("Killing form of the dual is not negative definite")]
    NotCompactForm,
    #[error("subalgebra is not theta-stable (defect dimension {0})")]
    NotThetaStable(usize),
    #[error("no principal point found after {0} samples")]
    SamplingFailed(usize),
    #[error("conjugated involution matrices do not commute")]
    NotCommuting,
    #[error("unsupported catalog parameters: {0}")]
    Unsupported(String),
    #[error("report is not a verified polar action")]
    NotPolar,
    #[error("unknown catalog key: {0}")]
    UnknownEntry(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
