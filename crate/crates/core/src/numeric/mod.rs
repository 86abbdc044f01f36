//! Exact rationals and reals observed through finite-precision intervals.

use alloc::string::String;
use core::fmt;

pub mod decide;
mod interval;
mod rational;
mod real;

pub use decide::{apartness, dichotomy, sign, Apartness, Branch, Mode, SignKind, SignWitness, Undecided};
pub use interval::DyadicInterval;
pub use rational::Rational;
pub use real::{dyadic_enclosure, Oracle, OracleReal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NumericError {
    DivisionByZero,
    Malformed(String),
    InvertedInterval,
    IntervalTooWide { precision: u32 },
    NonPositiveGap,
    EmptyDichotomy,
    NoBackingValue,
    PrecisionExhausted,
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DivisionByZero => write!(f, "division by zero"),
            Self::Malformed(text) => write!(f, "malformed rational {text:?}"),
            Self::InvertedInterval => write!(f, "interval lower end exceeds upper end"),
            Self::IntervalTooWide { precision } => {
                write!(f, "interval wider than 2*2^-{precision}")
            }
            Self::NonPositiveGap => write!(f, "apartness gap must be positive"),
            Self::EmptyDichotomy => write!(f, "dichotomy needs lower < upper"),
            Self::NoBackingValue => write!(f, "exact mode needs a rational-backed real"),
            Self::PrecisionExhausted => write!(f, "precision counter overflowed"),
        }
    }
}

impl core::error::Error for NumericError {}
