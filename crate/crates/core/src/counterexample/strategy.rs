use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numeric::{dichotomy, Branch, Rational};
use crate::sylvester::find_ordinary_line_robust;

use super::{CounterexampleError, Gadget, Label, LabelPair};

/// A finite-precision attempt at naming an ordinary line of the gadget.
/// It may query the gadget's coordinates as often as it likes, but must
/// answer after finitely many queries.
pub trait Strategy {
    fn name(&self) -> String;
    fn answer(&mut self, gadget: &Gadget) -> LabelPair;
}

/// Looks at `alpha` up to precision `depth`, then answers `pair` regardless.
#[derive(Clone, Debug)]
pub struct ConstantStrategy {
    pub pair: LabelPair,
    pub depth: Option<u32>,
}

impl Strategy for ConstantStrategy {
    fn name(&self) -> String {
        format!("constant {}", self.pair)
    }

    fn answer(&mut self, gadget: &Gadget) -> LabelPair {
        if let Some(depth) = self.depth {
            for n in 0..=depth {
                gadget.alpha.query(n);
            }
        }
        self.pair
    }
}

/// Queries random coordinates at random precisions. Answers PQ if it ever
/// sees `alpha` certified positive, a random pair otherwise.
#[derive(Clone, Debug)]
pub struct RandomStrategy {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomStrategy {
    pub fn new(seed: u64) -> Self {
        RandomStrategy {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Strategy for RandomStrategy {
    fn name(&self) -> String {
        format!("random seed={}", self.seed)
    }

    fn answer(&mut self, gadget: &Gadget) -> LabelPair {
        let mut saw_positive = false;
        for _ in 0..self.rng.gen_range(0..=8) {
            let label = Label::ALL[self.rng.gen_range(0..5)];
            let point = gadget.point(label);
            let precision = self.rng.gen_range(0..=30);
            let q = if self.rng.gen_bool(0.5) {
                point.x.query(precision)
            } else {
                point.y.query(precision)
            };
            if label == Label::S && q.lo().is_positive() {
                saw_positive = true;
            }
        }
        let pairs = LabelPair::all();
        if saw_positive {
            return LabelPair::new(Label::P, Label::Q).expect("distinct labels");
        }
        pairs[self.rng.gen_range(0..pairs.len())]
    }
}

/// Bets on the sign of `alpha`: if `alpha > -2^-k` it treats `alpha` as
/// nonnegative and answers PQ, otherwise it treats it as nonpositive and
/// answers RP.
#[derive(Clone, Debug)]
pub struct DichotomyStrategy {
    pub k: u32,
}

impl Strategy for DichotomyStrategy {
    fn name(&self) -> String {
        format!("dichotomy k={}", self.k)
    }

    fn answer(&mut self, gadget: &Gadget) -> LabelPair {
        let eps = Rational::dyadic(self.k);
        let (a, b) = match dichotomy(&gadget.alpha, &-&eps, &eps) {
            Ok(Branch::Below) => (Label::R, Label::P),
            _ => (Label::P, Label::Q),
        };
        LabelPair::new(a, b).expect("distinct labels")
    }
}

/// Runs the robust finder on the gadget and answers its certified pair,
/// falling back to PQ when it cannot decide within `cap`.
#[derive(Clone, Debug)]
pub struct FinderStrategy {
    pub cap: u32,
}

impl Strategy for FinderStrategy {
    fn name(&self) -> String {
        format!("robust finder cap={}", self.cap)
    }

    fn answer(&mut self, gadget: &Gadget) -> LabelPair {
        let fallback = LabelPair::new(Label::P, Label::Q).expect("distinct labels");
        match find_ordinary_line_robust(&gadget.points, self.cap) {
            Ok(run) => {
                let a = Label::ALL[run.certificate.a_idx];
                let b = Label::ALL[run.certificate.b_idx];
                LabelPair::new(a, b).unwrap_or(fallback)
            }
            Err(_) => fallback,
        }
    }
}

/// Strategy names accepted by [`strategy_by_name`].
pub const STRATEGY_NAMES: &str = "PQ|PR|PS|PT|QR|QS|QT|RS|RT|ST|random|dichotomy|finder";

/// `"PQ"` and the other pairs give constant strategies that look at `alpha`
/// up to precision 5; `"random"` uses `seed`.
pub fn strategy_by_name(name: &str, seed: u64) -> Result<Box<dyn Strategy>, CounterexampleError> {
    match name {
        "random" => Ok(Box::new(RandomStrategy::new(seed))),
        "dichotomy" => Ok(Box::new(DichotomyStrategy { k: 8 })),
        "finder" => Ok(Box::new(FinderStrategy { cap: 16 })),
        other => {
            let pair =
                LabelPair::parse(other).map_err(|_| CounterexampleError::UnknownStrategy(other.into()))?;
            Ok(Box::new(ConstantStrategy { pair, depth: Some(5) }))
        }
    }
}
