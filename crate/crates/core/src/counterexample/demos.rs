use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::{dichotomy, Branch, DyadicInterval, OracleReal, Rational};

use super::CounterexampleError;

/// `primes[k]` is true iff `k` is prime, for `k <= limit`.
fn sieve(limit: usize) -> Vec<bool> {
    let mut primes = vec![true; limit + 1];
    primes[0] = false;
    if limit >= 1 {
        primes[1] = false;
    }
    let mut p = 2;
    while p * p <= limit {
        if primes[p] {
            for multiple in (p * p..=limit).step_by(p) {
                primes[multiple] = false;
            }
        }
        p += 1;
    }
    primes
}

/// `n <= N` with `2n` not a sum of two primes, for `2 <= n <= N`.
pub fn goldbach_exceptions(max_n: u64) -> Vec<u64> {
    let limit = (2 * max_n) as usize;
    let primes = sieve(limit);
    (2..=max_n)
        .filter(|&n| {
            let even = (2 * n) as usize;
            !(2..=even / 2).any(|p| primes[p] && primes[even - p])
        })
        .collect()
}

/// Encloses `sum_{n >= 2} a_n / n^2`, where `a_n = 1` iff `2n` is not a sum of
/// two primes, using the terms up to `N` and the tail bound
/// `sum_{n > N} 1/n^2 < 1/N`.
///
/// The enclosure is `[partial sum, partial sum + 1/N]` at the largest
/// precision `p` with `2^p <= 2N`. It says nothing about whether the point
/// is on the x-axis.
pub fn demo_goldbach_point(max_n: u64) -> Result<DyadicInterval, CounterexampleError> {
    if max_n < 2 {
        return Err(CounterexampleError::GoldbachTooSmall { n: max_n });
    }
    let mut partial = Rational::zero();
    for n in goldbach_exceptions(max_n) {
        partial = partial + Rational::from_integer((n * n) as i64).recip()?;
    }
    let n_rational = Rational::from_integer(max_n as i64);
    let hi = &partial + n_rational.recip()?;
    let precision = 63 - (2 * max_n).leading_zeros();
    Ok(DyadicInterval::new(partial, hi, precision)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignConclusion {
    /// `alpha <= 0`
    NonPositive,
    /// `alpha >= 0`
    NonNegative,
}

/// A conclusion drawn from a claimed selector, with whether it could be
/// checked against an exact value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verified<C> {
    pub conclusion: C,
    pub verified: bool,
}

/// If the minimum of `{a+, a-}` were always attained by a known element,
/// the sign of `a` would follow: `m = a+` means `a <= 0` and `m = a-` means
/// `a >= 0`. `selector` claims the index of the minimizer among
/// `[a+, a-]`.
pub fn demo_min_not_attained<F>(
    alpha: &OracleReal,
    selector: F,
) -> Result<Verified<SignConclusion>, CounterexampleError>
where
    F: FnOnce(&OracleReal, &OracleReal) -> usize,
{
    let plus = alpha.plus_part();
    let minus = alpha.minus_part();
    let conclusion = match selector(&plus, &minus) {
        0 => SignConclusion::NonPositive,
        1 => SignConclusion::NonNegative,
        index => return Err(CounterexampleError::BadSelectorIndex(index)),
    };
    let Some(value) = alpha.backing() else {
        return Ok(Verified {
            conclusion,
            verified: false,
        });
    };
    let holds = match conclusion {
        SignConclusion::NonPositive => !value.is_positive(),
        SignConclusion::NonNegative => !value.is_negative(),
    };
    if !holds {
        return Err(CounterexampleError::SelectorLied {
            alpha: value,
            conclusion,
        });
    }
    Ok(Verified {
        conclusion,
        verified: true,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroConclusion {
    Zero,
    Positive,
}

/// If `min {x in {a, 1} : x > 0}` always existed, whether `a = 0` would
/// follow for `0 <= a < 1/2`: decide `m > 1/2` or `m < 1`; the first means
/// the set is `{1}`, so `a = 0`, the second means `m = a`, so `a > 0`.
/// `min_oracle` claims that minimum.
pub fn demo_subset_min<F>(
    alpha: &OracleReal,
    min_oracle: F,
) -> Result<Verified<ZeroConclusion>, CounterexampleError>
where
    F: FnOnce(&OracleReal) -> OracleReal,
{
    let half = Rational::new(1, 2)?;
    if let Some(value) = alpha.backing() {
        if value.is_negative() || value >= half {
            return Err(CounterexampleError::AlphaOutOfRange);
        }
    }
    let m = min_oracle(alpha);
    let conclusion = match dichotomy(&m, &half, &Rational::one())? {
        Branch::Above => ZeroConclusion::Zero,
        Branch::Below => ZeroConclusion::Positive,
    };
    let Some(value) = alpha.backing() else {
        return Ok(Verified {
            conclusion,
            verified: false,
        });
    };
    let holds = match conclusion {
        ZeroConclusion::Zero => value.is_zero(),
        ZeroConclusion::Positive => value.is_positive(),
    };
    if !holds {
        return Err(CounterexampleError::ClaimLied {
            alpha: value,
            conclusion,
        });
    }
    Ok(Verified {
        conclusion,
        verified: true,
    })
}
