use alloc::sync::Arc;
use alloc::vec::Vec;

use spin::Mutex;

use crate::numeric::{dyadic_enclosure, DyadicInterval, Oracle, OracleReal, Rational};

use super::CounterexampleError;

#[derive(Debug, Default)]
struct State {
    committed: Option<Rational>,
    log: Vec<u32>,
}

/// A real whose sign is chosen after the fact.
///
/// Until [`commit`](HiddenSignReal::commit) is called every query at
/// precision `n` is answered with `[-2^-n, 2^-n]`, which is consistent with
/// `0` and with `+-2^-m` for every `m > n`. The value is then fixed to one of
/// those, so all earlier answers stay correct.
#[derive(Debug, Default)]
pub struct HiddenSignReal {
    state: Mutex<State>,
}

impl HiddenSignReal {
    pub fn new() -> Arc<Self> {
        Arc::new(Self::default())
    }

    /// A hidden real whose value is fixed before anyone looks at it.
    pub fn committed_to(value: Rational) -> Result<Arc<Self>, CounterexampleError> {
        let hidden = Self::new();
        hidden.commit(value)?;
        Ok(hidden)
    }

    pub fn real(self: &Arc<Self>) -> OracleReal {
        OracleReal::from_oracle(self.clone())
    }

    /// Precisions answered so far, in order.
    pub fn queries(&self) -> Vec<u32> {
        self.state.lock().log.clone()
    }

    pub fn max_queried(&self) -> Option<u32> {
        self.state.lock().log.iter().copied().max()
    }

    pub fn committed(&self) -> Option<Rational> {
        self.state.lock().committed.clone()
    }

    /// Fixes the value to `0` or `+-2^-m`. `m` must exceed every precision
    /// already answered.
    pub fn commit(&self, value: Rational) -> Result<(), CounterexampleError> {
        let mut state = self.state.lock();
        if state.committed.is_some() {
            return Err(CounterexampleError::AlreadyCommitted);
        }
        if !value.is_zero() {
            let m = dyadic_exponent(&value.abs()).ok_or(CounterexampleError::NotSignedPowerOfTwo)?;
            if let Some(max_queried) = state.log.iter().copied().max() {
                if m <= max_queried {
                    return Err(CounterexampleError::CommitTooCoarse { m, max_queried });
                }
            }
        }
        state.committed = Some(value);
        Ok(())
    }
}

// m with value == 2^-m, for 0 < value <= 1.
fn dyadic_exponent(value: &Rational) -> Option<u32> {
    let mut m = 0u32;
    let mut power = Rational::one();
    while &power > value {
        power = Rational::dyadic(m + 1);
        m += 1;
    }
    (&power == value).then_some(m)
}

impl Oracle for HiddenSignReal {
    fn query(&self, precision: u32) -> DyadicInterval {
        let mut state = self.state.lock();
        state.log.push(precision);
        match &state.committed {
            Some(value) => dyadic_enclosure(value, precision),
            None => {
                let eps = Rational::dyadic(precision);
                DyadicInterval::new_unchecked(-&eps, eps, precision)
            }
        }
    }

    fn backing(&self) -> Option<Rational> {
        self.state.lock().committed.clone()
    }
}
