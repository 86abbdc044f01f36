//! Reals that can only be observed through finite-precision queries.
//!
//! An [`OracleReal`] answers `query(n)` with a [`DyadicInterval`] of width at
//! most `2 * 2^-n` that contains the value. Answers at different precisions
//! always overlap because every one of them contains the value. Values built
//! from exact rationals also remember that rational as a *backing value*,
//! which tests use as ground truth; the decision procedures in
//! [`crate::numeric::decide`] only look at it in exact mode.

use alloc::sync::Arc;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{DyadicInterval, Rational};

/// Something that can be refined to any requested precision.
pub trait Oracle: Send + Sync {
    fn query(&self, precision: u32) -> DyadicInterval;

    /// The exact rational value, when one is known.
    fn backing(&self) -> Option<Rational> {
        None
    }
}

#[derive(Clone)]
enum Expr {
    Exact(Rational),
    Neg(OracleReal),
    Add(OracleReal, OracleReal),
    Mul(OracleReal, OracleReal),
    PlusPart(OracleReal),
    Abs(OracleReal),
    External(Arc<dyn Oracle>),
}

#[derive(Clone)]
pub struct OracleReal(Arc<Expr>);

/// Finite-precision view of an exact rational: the dyadic cell of width
/// `2^-n` containing it, or the point itself once `2^n` clears its denominator.
pub fn dyadic_enclosure(value: &Rational, precision: u32) -> DyadicInterval {
    if value.is_dyadic_at(precision) {
        return DyadicInterval::point(value.clone(), precision);
    }
    let lo = value.floor_dyadic(precision);
    let hi = &lo + Rational::dyadic(precision);
    DyadicInterval::new_unchecked(lo, hi, precision)
}

// Smallest k with 2^k >= bound (bound > 0).
fn magnitude_bits(bound: &Rational) -> u32 {
    let mut k = 0u32;
    let mut power = Rational::one();
    while &power < bound {
        power = &power + &power;
        k += 1;
    }
    k
}

// Bound on |x| for every point of every interval the real can return:
// each answer contains the value and has width <= 2.
fn magnitude_bound(real: &OracleReal) -> Rational {
    let coarse = real.query(0);
    coarse.lo().abs().max(coarse.hi().abs()) + Rational::from_integer(2)
}

impl OracleReal {
    pub fn exact(value: Rational) -> Self {
        OracleReal(Arc::new(Expr::Exact(value)))
    }

    pub fn from_integer(value: i64) -> Self {
        Self::exact(Rational::from_integer(value))
    }

    pub fn from_oracle(oracle: Arc<dyn Oracle>) -> Self {
        OracleReal(Arc::new(Expr::External(oracle)))
    }

    pub fn query(&self, precision: u32) -> DyadicInterval {
        match &*self.0 {
            Expr::Exact(value) => dyadic_enclosure(value, precision),
            Expr::Neg(inner) => {
                let q = inner.query(precision);
                DyadicInterval::new_unchecked(-q.hi(), -q.lo(), precision)
            }
            Expr::Add(a, b) => {
                let finer = precision.saturating_add(1);
                let (qa, qb) = (a.query(finer), b.query(finer));
                DyadicInterval::new_unchecked(qa.lo() + qb.lo(), qa.hi() + qb.hi(), precision)
            }
            Expr::Mul(a, b) => {
                let bits_a = magnitude_bits(&magnitude_bound(a));
                let bits_b = magnitude_bits(&magnitude_bound(b));
                let qa = a.query(precision.saturating_add(bits_b).saturating_add(2));
                let qb = b.query(precision.saturating_add(bits_a).saturating_add(2));
                let corners = [
                    qa.lo() * qb.lo(),
                    qa.lo() * qb.hi(),
                    qa.hi() * qb.lo(),
                    qa.hi() * qb.hi(),
                ];
                let lo = corners.iter().min().cloned().unwrap_or_default();
                let hi = corners.iter().max().cloned().unwrap_or_default();
                DyadicInterval::new_unchecked(lo, hi, precision)
            }
            Expr::PlusPart(inner) => {
                let q = inner.query(precision);
                let zero = Rational::zero();
                DyadicInterval::new_unchecked(
                    q.lo().clone().max(zero.clone()),
                    q.hi().clone().max(zero),
                    precision,
                )
            }
            Expr::Abs(inner) => {
                let q = inner.query(precision);
                let (lo, hi) = if !q.lo().is_negative() {
                    (q.lo().clone(), q.hi().clone())
                } else if !q.hi().is_positive() {
                    (-q.hi(), -q.lo())
                } else {
                    (Rational::zero(), q.hi().clone().max(-q.lo()))
                };
                DyadicInterval::new_unchecked(lo, hi, precision)
            }
            Expr::External(oracle) => oracle.query(precision),
        }
    }

    /// Exact value, if every leaf of the expression has one.
    pub fn backing(&self) -> Option<Rational> {
        match &*self.0 {
            Expr::Exact(value) => Some(value.clone()),
            Expr::Neg(inner) => inner.backing().map(|v| -v),
            Expr::Add(a, b) => Some(a.backing()? + b.backing()?),
            Expr::Mul(a, b) => Some(a.backing()? * b.backing()?),
            Expr::PlusPart(inner) => inner.backing().map(|v| v.max(Rational::zero())),
            Expr::Abs(inner) => inner.backing().map(|v| v.abs()),
            Expr::External(oracle) => oracle.backing(),
        }
    }

    /// `max(x, 0)`.
    pub fn plus_part(&self) -> OracleReal {
        OracleReal(Arc::new(Expr::PlusPart(self.clone())))
    }

    /// `max(-x, 0)`.
    pub fn minus_part(&self) -> OracleReal {
        (-self).plus_part()
    }

    pub fn abs(&self) -> OracleReal {
        OracleReal(Arc::new(Expr::Abs(self.clone())))
    }

    pub fn square(&self) -> OracleReal {
        self * self
    }
}

impl From<Rational> for OracleReal {
    fn from(value: Rational) -> Self {
        OracleReal::exact(value)
    }
}

impl fmt::Debug for OracleReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.backing() {
            Some(v) => write!(f, "OracleReal({v})"),
            None => write!(f, "OracleReal(~{})", self.query(8)),
        }
    }
}

impl Neg for &OracleReal {
    type Output = OracleReal;
    fn neg(self) -> OracleReal {
        OracleReal(Arc::new(Expr::Neg(self.clone())))
    }
}

impl Add for &OracleReal {
    type Output = OracleReal;
    fn add(self, rhs: &OracleReal) -> OracleReal {
        OracleReal(Arc::new(Expr::Add(self.clone(), rhs.clone())))
    }
}

impl Sub for &OracleReal {
    type Output = OracleReal;
    fn sub(self, rhs: &OracleReal) -> OracleReal {
        self + &(-rhs)
    }
}

impl Mul for &OracleReal {
    type Output = OracleReal;
    fn mul(self, rhs: &OracleReal) -> OracleReal {
        OracleReal(Arc::new(Expr::Mul(self.clone(), rhs.clone())))
    }
}
