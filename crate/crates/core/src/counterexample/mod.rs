//! Executable counterexamples.
//!
//! The centerpiece is the five-point gadget built from a real `alpha`:
//! for `alpha > 0` the lines RP and RQ each carry three points, for
//! `alpha < 0` line PQ carries four, and at `alpha = 0` the set collapses to a
//! triangle. Naming an ordinary line therefore requires knowing which side
//! of zero `alpha` is on. [`adversary_run`] makes this concrete: it lets any
//! [`Strategy`] query a [`HiddenSignReal`] as much as it likes, then picks
//! `alpha = +-2^-m` below every precision it looked at so the answer is
//! wrong.
//!
//! [`demo_min_not_attained`] and [`demo_subset_min`] turn claimed minimizers
//! into sign decisions, and [`demo_goldbach_point`] encloses a point whose
//! position depends on an open problem.

use alloc::string::String;
use core::fmt;

use crate::numeric::{NumericError, Rational};
use crate::oracle::OracleError;
use crate::sylvester::SylvesterError;

mod demos;
mod gadget;
mod hidden;
mod strategy;

pub use demos::{
    demo_goldbach_point, demo_min_not_attained, demo_subset_min, goldbach_exceptions, SignConclusion,
    Verified, ZeroConclusion,
};
pub use gadget::{
    adversary_run, build_gallai_gadget, gadget_points, Gadget, Label, LabelPair, Refutation,
    StrategyTranscript,
};
pub use hidden::HiddenSignReal;
pub use strategy::{
    strategy_by_name, ConstantStrategy, DichotomyStrategy, FinderStrategy, RandomStrategy, Strategy,
    STRATEGY_NAMES,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CounterexampleError {
    AlphaOutOfRange,
    AlreadyCommitted,
    /// A commitment must be `0` or `+-2^-m`.
    NotSignedPowerOfTwo,
    /// `2^-m` would contradict an answer already given at precision
    /// `max_queried >= m`.
    CommitTooCoarse {
        m: u32,
        max_queried: u32,
    },
    Uncommitted,
    RepeatedLabel(Label),
    BadPair(String),
    UnknownStrategy(String),
    GoldbachTooSmall {
        n: u64,
    },
    BadSelectorIndex(usize),
    SelectorLied {
        alpha: Rational,
        conclusion: SignConclusion,
    },
    ClaimLied {
        alpha: Rational,
        conclusion: ZeroConclusion,
    },
    Numeric(NumericError),
    Oracle(OracleError),
    Sylvester(SylvesterError),
}

impl fmt::Display for CounterexampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AlphaOutOfRange => write!(f, "alpha is outside the allowed range"),
            Self::AlreadyCommitted => write!(f, "hidden real is already committed"),
            Self::NotSignedPowerOfTwo => write!(f, "hidden real can only be committed to 0 or +-2^-m"),
            Self::CommitTooCoarse { m, max_queried } => {
                write!(
                    f,
                    "cannot commit to 2^-{m} after answering precision {max_queried}"
                )
            }
            Self::Uncommitted => write!(f, "hidden real has not been committed"),
            Self::RepeatedLabel(label) => write!(f, "pair repeats label {label}"),
            Self::BadPair(text) => write!(f, "{text:?} is not a pair of labels from PQRST"),
            Self::UnknownStrategy(name) => {
                write!(f, "unknown strategy {name:?}; expected one of {STRATEGY_NAMES}")
            }
            Self::GoldbachTooSmall { n } => write!(f, "need N >= 2, got {n}"),
            Self::BadSelectorIndex(index) => write!(f, "selector returned index {index}, expected 0 or 1"),
            Self::SelectorLied { alpha, conclusion } => {
                write!(f, "selector lied: it implies {conclusion:?} but alpha = {alpha}")
            }
            Self::ClaimLied { alpha, conclusion } => {
                write!(
                    f,
                    "claimed minimum lied: it implies {conclusion:?} but alpha = {alpha}"
                )
            }
            Self::Numeric(e) => write!(f, "{e}"),
            Self::Oracle(e) => write!(f, "{e}"),
            Self::Sylvester(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CounterexampleError {}

impl From<NumericError> for CounterexampleError {
    fn from(err: NumericError) -> Self {
        CounterexampleError::Numeric(err)
    }
}

impl From<OracleError> for CounterexampleError {
    fn from(err: OracleError) -> Self {
        CounterexampleError::Oracle(err)
    }
}

impl From<SylvesterError> for CounterexampleError {
    fn from(err: SylvesterError) -> Self {
        CounterexampleError::Sylvester(err)
    }
}

#[cfg(test)]
mod tests;
