use core::fmt;

use super::{NumericError, Rational};

/// Closed interval `[lo, hi]` returned by an oracle real at precision `n`.
///
/// The width never exceeds `2 * 2^-n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DyadicInterval {
    lo: Rational,
    hi: Rational,
    precision: u32,
}

impl DyadicInterval {
    pub fn new(lo: Rational, hi: Rational, precision: u32) -> Result<Self, NumericError> {
        if lo > hi {
            return Err(NumericError::InvertedInterval);
        }
        if &hi - &lo > Rational::dyadic(precision) * Rational::from_integer(2) {
            return Err(NumericError::IntervalTooWide { precision });
        }
        Ok(DyadicInterval { lo, hi, precision })
    }

    /// Degenerate interval `[v, v]`.
    pub fn point(value: Rational, precision: u32) -> Self {
        DyadicInterval {
            lo: value.clone(),
            hi: value,
            precision,
        }
    }

    // Callers guarantee ordering and width.
    pub(crate) fn new_unchecked(lo: Rational, hi: Rational, precision: u32) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval { lo, hi, precision }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, value: &Rational) -> bool {
        &self.lo <= value && value <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&Rational::zero())
    }

    pub fn intersects(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] @{}", self.lo, self.hi, self.precision)
    }
}
