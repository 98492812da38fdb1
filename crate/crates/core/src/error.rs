use thiserror::Error;

/// Errors raised by the numerical kernels and state constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |H_ij - conj(H_ji)| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not positive semidefinite (smallest eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("Jacobi eigensolver did not converge within {sweeps} sweeps")]
    NoConvergence { sweeps: usize },

    #[error("matrix is not unitary (max |U U^dagger - I| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("state is not in the a=d, b=c family (|a-d| = {a_minus_d:.3e}, |b-c| = {b_minus_c:.3e})")]
    NotSymmetricFamily { a_minus_d: f64, b_minus_c: f64 },

    #[error("degenerate-case preconditions not met: {0}")]
    PreconditionNotMet(String),

    #[error("invalid search grid: {0}")]
    InvalidGrid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotHermitian { .. } => "not_hermitian",
            Error::NotPsd { .. } => "not_psd",
            Error::NoConvergence { .. } => "no_convergence",
            Error::NotUnitary { .. } => "not_unitary",
            Error::InvalidParams(_) => "invalid_params",
            Error::NotSymmetricFamily { .. } => "not_symmetric_family",
            Error::PreconditionNotMet(_) => "precondition_not_met",
            Error::InvalidGrid(_) => "invalid_grid",
        }
    }
}
