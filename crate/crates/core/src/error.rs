use thiserror::Error;

use crate::numerics::NumError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A denominator factor vanished; the payload names the factor.
    #[error("pole: {0} vanishes")]
    Pole(String),
    #[error("non-terminating series cannot be summed in the exact backend")]
    NonTerminatingExact,
    #[error("infinite product is not available in the exact backend")]
    ExactInfiniteProduct,
    #[error("series tail bound not met within {0} terms")]
    MaxTerms(usize),
    #[error("parameter out of domain: {0}")]
    Domain(String),
    #[error(transparent)]
    Num(#[from] NumError),
}

impl Error {
    /// True when the error comes from a vanishing denominator.
    pub fn is_pole(&self) -> bool {
        matches!(
            self,
            Error::Pole(_)
                | Error::Num(NumError::DivisionByZero)
                | Error::Num(NumError::DenominatorVanishes)
                | Error::Num(NumError::ZeroNegativePower(_))
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
