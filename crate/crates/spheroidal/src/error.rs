//! Error type shared across the crate.

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Index outside the validity range of the requested family.
    #[error("invalid index: n={n}, m={m} ({context})")]
    InvalidIndex { n: u32, m: u32, context: &'static str },

    /// A '-' parity element with m = 0 (the zero function) was requested.
    #[error("parity '-' requires m >= 1 (got n={n}, m=0)")]
    MinusParityZeroOrder { n: u32 },

    /// Spheroid parameter outside t < 1.
    #[error("spheroid parameter out of range: t = {t} (need t < 1)")]
    InvalidParameter { t: Rational },

    /// Operation only defined on a prolate spheroid (0 < t < 1).
    #[error("unsupported regime: {context} requires a prolate parameter, got t = {t}")]
    UnsupportedRegime { t: Rational, context: &'static str },

    /// Operation requires mu = sqrt(t) to be rational.
    #[error("unsupported parameter: sqrt({t}) is not rational")]
    IrrationalMu { t: Rational },

    /// Unknown family name at a conversion or CLI boundary.
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
