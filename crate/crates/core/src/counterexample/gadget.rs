use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{Point, RealPoint};
use crate::numeric::{OracleReal, Rational};
use crate::oracle::{count_incidences, LineReport};
use crate::sylvester::PointSet;

use super::{CounterexampleError, HiddenSignReal, Strategy};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    P,
    Q,
    R,
    S,
    T,
}

impl Label {
    pub const ALL: [Label; 5] = [Label::P, Label::Q, Label::R, Label::S, Label::T];

    /// Position of the point in the gadget's point list.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_char(c: char) -> Option<Label> {
        match c.to_ascii_uppercase() {
            'P' => Some(Label::P),
            'Q' => Some(Label::Q),
            'R' => Some(Label::R),
            'S' => Some(Label::S),
            'T' => Some(Label::T),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Label::P => 'P',
            Label::Q => 'Q',
            Label::R => 'R',
            Label::S => 'S',
            Label::T => 'T',
        };
        write!(f, "{c}")
    }
}

/// Two distinct labels, stored in label order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelPair(Label, Label);

impl LabelPair {
    pub fn new(a: Label, b: Label) -> Result<Self, CounterexampleError> {
        match a.cmp(&b) {
            core::cmp::Ordering::Less => Ok(LabelPair(a, b)),
            core::cmp::Ordering::Greater => Ok(LabelPair(b, a)),
            core::cmp::Ordering::Equal => Err(CounterexampleError::RepeatedLabel(a)),
        }
    }

    /// All ten pairs, in label order.
    pub fn all() -> Vec<LabelPair> {
        let mut pairs = Vec::with_capacity(10);
        for (i, &a) in Label::ALL.iter().enumerate() {
            for &b in &Label::ALL[i + 1..] {
                pairs.push(LabelPair(a, b));
            }
        }
        pairs
    }

    pub fn labels(self) -> (Label, Label) {
        (self.0, self.1)
    }

    /// One of RP, RQ, RS, RT.
    pub fn contains_r(self) -> bool {
        self.0 == Label::R || self.1 == Label::R
    }

    /// Parses two letters such as `"PQ"` or `"rs"`.
    pub fn parse(text: &str) -> Result<Self, CounterexampleError> {
        let mut chars = text.chars();
        let bad = || CounterexampleError::BadPair(text.into());
        let a = chars.next().and_then(Label::from_char).ok_or_else(bad)?;
        let b = chars.next().and_then(Label::from_char).ok_or_else(bad)?;
        if chars.next().is_some() {
            return Err(bad());
        }
        LabelPair::new(a, b)
    }
}

impl fmt::Display for LabelPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

/// The five gadget points as reals derived from `alpha`, indexed by
/// [`Label::index`].
#[derive(Clone, Debug)]
pub struct Gadget {
    pub alpha: OracleReal,
    pub points: [RealPoint; 5],
}

impl Gadget {
    pub fn point(&self, label: Label) -> &RealPoint {
        &self.points[label.index()]
    }

    /// The exact point set, once `alpha` has a rational value.
    pub fn exact(&self) -> Option<PointSet> {
        let points: Option<Vec<Point>> = self.points.iter().map(RealPoint::backing).collect();
        PointSet::new(points?).ok()
    }
}

/// `P = (-1, 0)`, `Q = (1, 0)`, `R = (0, 1)`, `S = (-1 + |a|, a+)`,
/// `T = (1 - |a|, a+)`.
///
/// Requires `|alpha| <= 1/2`, checked exactly when `alpha` has a rational
/// value. An unbacked `alpha` is taken on trust so that building the gadget
/// around a hidden real spends no query.
pub fn build_gallai_gadget(alpha: &OracleReal) -> Result<Gadget, CounterexampleError> {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    if let Some(value) = alpha.backing() {
        if value.abs() > half {
            return Err(CounterexampleError::AlphaOutOfRange);
        }
    }
    let abs = alpha.abs();
    let plus = alpha.plus_part();
    let one = OracleReal::from_integer(1);
    let zero = OracleReal::from_integer(0);
    let points = [
        RealPoint::new(-&one, zero.clone()),
        RealPoint::new(one.clone(), zero.clone()),
        RealPoint::new(zero, one.clone()),
        RealPoint::new(&abs - &one, plus.clone()),
        RealPoint::new(&one - &abs, plus),
    ];
    Ok(Gadget {
        alpha: alpha.clone(),
        points,
    })
}

/// The gadget evaluated directly from the formulas at a rational `alpha`.
pub fn gadget_points(alpha: &Rational) -> Result<PointSet, CounterexampleError> {
    let half = Rational::new(1, 2).expect("nonzero denominator");
    if alpha.abs() > half {
        return Err(CounterexampleError::AlphaOutOfRange);
    }
    let one = Rational::one();
    let abs = alpha.abs();
    let plus = alpha.clone().max(Rational::zero());
    let points = alloc::vec![
        Point::from_integers(-1, 0),
        Point::from_integers(1, 0),
        Point::from_integers(0, 1),
        Point::new(&abs - &one, plus.clone()),
        Point::new(&one - &abs, plus),
    ];
    Ok(PointSet::new(points)?)
}

/// What a strategy asked and what it answered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrategyTranscript {
    /// Every precision at which the hidden real was queried, in order.
    pub queries: Vec<u32>,
    pub answer: LabelPair,
}

/// A value of `alpha`, consistent with everything the strategy saw, for
/// which the answered line is not ordinary.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub transcript: StrategyTranscript,
    pub alpha: Rational,
    /// `|alpha| = 2^-m`.
    pub m: u32,
    pub points: PointSet,
    pub report: LineReport,
}

impl Refutation {
    pub fn distinct_count(&self) -> usize {
        self.report.distinct_count()
    }
}

/// Plays the strategy against a hidden `alpha`, then commits `alpha` so that
/// its answer is wrong: `+2^-m` puts S on line RP and T on line RQ, `-2^-m`
/// puts S and T on line PQ.
pub fn adversary_run(strategy: &mut dyn Strategy) -> Result<Refutation, CounterexampleError> {
    let hidden = HiddenSignReal::new();
    let gadget = build_gallai_gadget(&hidden.real())?;
    let answer = strategy.answer(&gadget);
    let m = match hidden.max_queried() {
        None => 1,
        Some(n) => n
            .checked_add(1)
            .ok_or(CounterexampleError::CommitTooCoarse { m: n, max_queried: n })?,
    };
    let magnitude = Rational::dyadic(m);
    let alpha = if answer.contains_r() {
        magnitude
    } else {
        -magnitude
    };
    hidden.commit(alpha.clone())?;
    let points = gadget.exact().ok_or(CounterexampleError::Uncommitted)?;
    let (a, b) = answer.labels();
    let report = count_incidences(&points, a.index(), b.index())?;
    Ok(Refutation {
        transcript: StrategyTranscript {
            queries: hidden.queries(),
            answer,
        },
        alpha,
        m,
        points,
        report,
    })
}
