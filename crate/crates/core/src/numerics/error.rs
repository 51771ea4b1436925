use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("float precision mismatch: {left} vs {right} bits")]
    PrecisionMismatch { left: u32, right: u32 },
    #[error("zero raised to negative power {0}")]
    ZeroNegativePower(i64),
    #[error("cannot parse numeric literal {0:?}")]
    Parse(String),
    #[error("denominator of rational function vanishes at the evaluation point")]
    DenominatorVanishes,
}
