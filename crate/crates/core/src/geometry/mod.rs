//! Exact planar primitives over [`Rational`] coordinates.
//!
//! Distances are kept squared and coordinates along a line are scaled by the
//! length of its defining segment, so no square root is ever taken.

use core::fmt;

use crate::numeric::{NumericError, OracleReal, Rational, Undecided};

mod robust;

pub use robust::{robust_incidence, robust_same_point, RealPoint, RobustIncidence};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_integers(x: i64, y: i64) -> Self {
        Point::new(Rational::from_integer(x), Rational::from_integer(y))
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn dot(&self, other: &Point) -> Rational {
        &self.x * &other.x + &self.y * &other.y
    }

    /// z-component of the 2D cross product.
    pub fn cross(&self, other: &Point) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn to_real(&self) -> RealPoint {
        RealPoint::new(
            OracleReal::exact(self.x.clone()),
            OracleReal::exact(self.y.clone()),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The line through two distinct points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinePair {
    a: Point,
    b: Point,
}

impl LinePair {
    pub fn new(a: Point, b: Point) -> Result<Self, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateLine);
        }
        Ok(LinePair { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn direction(&self) -> Point {
        self.b.sub(&self.a)
    }

    /// `|b - a|^2`, always positive.
    pub fn sq_len(&self) -> Rational {
        sq_dist(&self.a, &self.b)
    }

    pub fn reversed(&self) -> LinePair {
        LinePair {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IncidenceResult {
    On,
    /// Carries the squared distance to the line, always positive.
    Outside {
        sq_gap: Rational,
    },
}

impl IncidenceResult {
    pub fn is_on(&self) -> bool {
        matches!(self, IncidenceResult::On)
    }
}

/// Which of the two anchors a point is certified apart from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CotransitiveBranch {
    ApartFromA { sq_gap: Rational },
    ApartFromB { sq_gap: Rational },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Orientation {
    Forward,
    Reverse,
}

impl Orientation {
    pub fn flipped(self) -> Self {
        match self {
            Orientation::Forward => Orientation::Reverse,
            Orientation::Reverse => Orientation::Forward,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GeometryError {
    DegenerateLine,
    EqualAnchors,
    NotOnLine,
    Undecided(Undecided),
    Numeric(NumericError),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegenerateLine => write!(f, "a line needs two distinct points"),
            Self::EqualAnchors => write!(f, "cotransitivity needs two distinct anchors"),
            Self::NotOnLine => write!(f, "point does not lie on the line"),
            Self::Undecided(u) => write!(f, "{u}"),
            Self::Numeric(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GeometryError {}

impl From<NumericError> for GeometryError {
    fn from(err: NumericError) -> Self {
        GeometryError::Numeric(err)
    }
}

pub fn sq_dist(p: &Point, q: &Point) -> Rational {
    let d = p.sub(q);
    d.dot(&d)
}

/// `cross(b - a, p - a)`: zero iff `p` is on the line, signed by side.
pub fn line_cross(p: &Point, l: &LinePair) -> Rational {
    l.direction().cross(&p.sub(&l.a))
}

pub fn sq_dist_point_line(p: &Point, l: &LinePair) -> Rational {
    let cross = line_cross(p, l);
    // sq_len > 0 by construction of LinePair
    (cross.square())
        .checked_div(&l.sq_len())
        .expect("line has positive length")
}

pub fn foot_of_perpendicular(p: &Point, l: &LinePair) -> Point {
    let dir = l.direction();
    let t = p
        .sub(&l.a)
        .dot(&dir)
        .checked_div(&l.sq_len())
        .expect("line has positive length");
    Point::new(&l.a.x + &t * &dir.x, &l.a.y + &t * &dir.y)
}

pub fn incidence(p: &Point, l: &LinePair) -> IncidenceResult {
    if line_cross(p, l).is_zero() {
        IncidenceResult::On
    } else {
        IncidenceResult::Outside {
            sq_gap: sq_dist_point_line(p, l),
        }
    }
}

/// Given `a != b`, certifies `x != a` or `x != b`; `x != a` is tried first.
pub fn cotransitive_split(x: &Point, a: &Point, b: &Point) -> Result<CotransitiveBranch, GeometryError> {
    if a == b {
        return Err(GeometryError::EqualAnchors);
    }
    let to_a = sq_dist(x, a);
    if to_a.is_positive() {
        return Ok(CotransitiveBranch::ApartFromA { sq_gap: to_a });
    }
    Ok(CotransitiveBranch::ApartFromB {
        sq_gap: sq_dist(x, b),
    })
}

/// Signed coordinate of `x` along `l`, measured from `origin` and scaled by
/// `|l.b - l.a|`. Differences of scaled coordinates square to
/// `sq_dist * sq_len`.
pub fn scaled_coordinate(
    x: &Point,
    l: &LinePair,
    origin: &Point,
    orient: Orientation,
) -> Result<Rational, GeometryError> {
    if !incidence(x, l).is_on() || !incidence(origin, l).is_on() {
        return Err(GeometryError::NotOnLine);
    }
    let along = x.sub(origin).dot(&l.direction());
    Ok(match orient {
        Orientation::Forward => along,
        Orientation::Reverse => -along,
    })
}

/// Intersection point of two lines, or `None` when they are parallel or equal.
pub fn line_intersection(l1: &LinePair, l2: &LinePair) -> Option<Point> {
    let d1 = l1.direction();
    let d2 = l2.direction();
    let denom = d1.cross(&d2);
    if denom.is_zero() {
        return None;
    }
    let t = l2.a.sub(&l1.a).cross(&d2).checked_div(&denom).ok()?;
    Some(Point::new(&l1.a.x + &t * &d1.x, &l1.a.y + &t * &d1.y))
}
