//! Sign decisions on oracle reals: dichotomy, sign with a precision cap, and
//! apartness.

use core::fmt;

use super::{NumericError, OracleReal, Rational};

/// How a decision may be made.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Use the exact backing rational. Always decides.
    Exact,
    /// Use only interval queries, at precisions `1, 2, 4, ...` up to `cap`.
    Robust { cap: u32 },
}

/// The precision cap was reached with zero still inside the interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Undecided {
    pub cap: u32,
}

impl fmt::Display for Undecided {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "undecided at precision cap {}", self.cap)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignKind {
    Positive,
    Negative,
    ZeroAsserted,
}

/// A sign together with a positive lower bound on the magnitude.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignWitness {
    kind: SignKind,
    gap: Rational,
}

impl SignWitness {
    pub fn positive(gap: Rational) -> Result<Self, NumericError> {
        Self::apart(SignKind::Positive, gap)
    }

    pub fn negative(gap: Rational) -> Result<Self, NumericError> {
        Self::apart(SignKind::Negative, gap)
    }

    pub fn zero() -> Self {
        SignWitness {
            kind: SignKind::ZeroAsserted,
            gap: Rational::zero(),
        }
    }

    fn apart(kind: SignKind, gap: Rational) -> Result<Self, NumericError> {
        if !gap.is_positive() {
            return Err(NumericError::NonPositiveGap);
        }
        Ok(SignWitness { kind, gap })
    }

    pub fn kind(&self) -> SignKind {
        self.kind
    }

    pub fn gap(&self) -> &Rational {
        &self.gap
    }

    pub fn is_zero(&self) -> bool {
        self.kind == SignKind::ZeroAsserted
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Apartness {
    Distinct(SignWitness),
    Equal,
    Undecided(Undecided),
}

/// Branch returned by [`dichotomy`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `x > lower`
    Above,
    /// `x < upper`
    Below,
}

/// Precisions `1, 2, 4, ...` below `cap`, then `cap` itself.
pub fn precision_schedule(cap: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(1u32.min(cap));
    core::iter::from_fn(move || {
        let current = next?;
        next = if current >= cap {
            None
        } else {
            Some(current.saturating_mul(2).min(cap))
        };
        Some(current)
    })
}

/// Decides `x > lower` or `x < upper`, given `lower < upper`.
///
/// Refines at `n = 1, 2, 4, 8, ...` until an interval certifies one of the
/// two. `x > lower` wins when both are certified at the same precision.
pub fn dichotomy(x: &OracleReal, lower: &Rational, upper: &Rational) -> Result<Branch, NumericError> {
    if lower >= upper {
        return Err(NumericError::EmptyDichotomy);
    }
    let mut n = 1u32;
    loop {
        let q = x.query(n);
        if q.lo() > lower {
            return Ok(Branch::Above);
        }
        if q.hi() < upper {
            return Ok(Branch::Below);
        }
        n = n.checked_mul(2).ok_or(NumericError::PrecisionExhausted)?;
    }
}

fn exact_sign(value: &Rational) -> SignWitness {
    if value.is_positive() {
        SignWitness {
            kind: SignKind::Positive,
            gap: value.clone(),
        }
    } else if value.is_negative() {
        SignWitness {
            kind: SignKind::Negative,
            gap: -value,
        }
    } else {
        SignWitness::zero()
    }
}

/// Sign of `x`. Robust mode asserts zero only from a degenerate `[0, 0]`
/// answer, and gives up with [`Undecided`] at the cap.
pub fn sign(x: &OracleReal, mode: Mode) -> Result<Result<SignWitness, Undecided>, NumericError> {
    match mode {
        Mode::Exact => {
            let value = x.backing().ok_or(NumericError::NoBackingValue)?;
            Ok(Ok(exact_sign(&value)))
        }
        Mode::Robust { cap } => {
            for n in precision_schedule(cap) {
                let q = x.query(n);
                if q.lo().is_positive() {
                    return Ok(Ok(SignWitness {
                        kind: SignKind::Positive,
                        gap: q.lo().clone(),
                    }));
                }
                if q.hi().is_negative() {
                    return Ok(Ok(SignWitness {
                        kind: SignKind::Negative,
                        gap: -q.hi(),
                    }));
                }
                if q.is_point() {
                    return Ok(Ok(SignWitness::zero()));
                }
            }
            Ok(Err(Undecided { cap }))
        }
    }
}

/// Decides `x = y` or `x # y` (apart, with a witness on `x - y`).
pub fn apartness(x: &OracleReal, y: &OracleReal, mode: Mode) -> Result<Apartness, NumericError> {
    let diff = x - y;
    Ok(match sign(&diff, mode)? {
        Ok(w) if w.is_zero() => Apartness::Equal,
        Ok(w) => Apartness::Distinct(w),
        Err(undecided) => Apartness::Undecided(undecided),
    })
}
