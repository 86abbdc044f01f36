//! Incidence and equality for points whose coordinates are only known
//! through interval queries. Each decision either resolves within the
//! precision cap or reports [`Undecided`].

use crate::numeric::{sign, Mode, OracleReal, Rational, SignWitness, Undecided};

use super::{GeometryError, Point};

#[derive(Clone, Debug)]
pub struct RealPoint {
    pub x: OracleReal,
    pub y: OracleReal,
}

impl RealPoint {
    pub fn new(x: OracleReal, y: OracleReal) -> Self {
        RealPoint { x, y }
    }

    /// The exact point, when both coordinates are rational-backed.
    pub fn backing(&self) -> Option<Point> {
        Some(Point::new(self.x.backing()?, self.y.backing()?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RobustIncidence {
    On,
    /// `|cross(b - a, p - a)| >= cross_gap > 0`.
    Outside {
        cross_gap: Rational,
    },
}

fn robust_sign(value: &OracleReal, cap: u32) -> Result<SignWitness, GeometryError> {
    match sign(value, Mode::Robust { cap })? {
        Ok(w) => Ok(w),
        Err(undecided) => Err(GeometryError::Undecided(undecided)),
    }
}

/// `Ok(true)` when `p = q` is certified, `Ok(false)` when `p # q`.
pub fn robust_same_point(p: &RealPoint, q: &RealPoint, cap: u32) -> Result<bool, GeometryError> {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    let sq = &dx.square() + &dy.square();
    Ok(robust_sign(&sq, cap)?.is_zero())
}

pub fn robust_incidence(
    p: &RealPoint,
    a: &RealPoint,
    b: &RealPoint,
    cap: u32,
) -> Result<RobustIncidence, GeometryError> {
    let cross = &(&(&b.x - &a.x) * &(&p.y - &a.y)) - &(&(&b.y - &a.y) * &(&p.x - &a.x));
    let witness = robust_sign(&cross, cap)?;
    if witness.is_zero() {
        Ok(RobustIncidence::On)
    } else {
        Ok(RobustIncidence::Outside {
            cross_gap: witness.gap().clone(),
        })
    }
}

impl From<Undecided> for GeometryError {
    fn from(u: Undecided) -> Self {
        GeometryError::Undecided(u)
    }
}
