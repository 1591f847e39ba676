use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by the numerical and symbolic kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("jet division by a value of magnitude {magnitude:e} (floor {floor:e})")]
    DivisionByZeroJet { magnitude: f64, floor: f64 },

    #[error("exponential overflow: real part of the exponent is {0}")]
    Overflow(f64),

    #[error("Hermite index {0} exceeds the supported maximum of {max}", max = crate::numerics::MAX_HERMITE_INDEX)]
    IndexTooLarge(usize),

    #[error("evaluation at a pole: z = {0}")]
    Pole(Complex64),

    #[error("series outside its convergence disk: |2 eps x| = {0}")]
    ConvergenceDomain(f64),

    #[error("CPT norm has imaginary residue {0:e}")]
    NonRealNorm(f64),

    #[error("tridiagonal eigenvalue iteration did not converge within {0} sweeps")]
    NoConvergence(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
