//! Certified ordinary lines.
//!
//! Given a finite list of points with at least one point off a line through
//! two others, [`find_ordinary_line`] picks a point-line pair whose distance
//! is close enough to the smallest positive point-line distance, and proves
//! that every listed point on that line equals one of its two defining
//! points. The proof is emitted as an [`OrdinaryLineCertificate`] which
//! [`crate::oracle::verify_certificate`] re-checks from scratch.
//!
//! The pipeline is:
//!
//! 1. decide every equality and incidence ([`IncidenceStructure`]);
//! 2. list all triads and their squared distances ([`TriadTable`]);
//! 3. select a triad satisfying `e^2 D^2 < d^2 (D^2 + d^2)`;
//! 4. coordinatize the selected line from the foot of the perpendicular and
//!    classify every point ([`classify_on_line`]).
//!
//! Exact mode runs step 1 with rational comparisons. Robust mode
//! ([`find_ordinary_line_robust`]) runs steps 1 and 3 from interval queries
//! under a precision cap and stops with [`SylvesterError::Undecided`] when a
//! query cannot be resolved.

use alloc::vec::Vec;
use core::fmt;

use crate::geometry::{sq_dist_point_line, GeometryError, LinePair, Point, RealPoint};
use crate::numeric::Rational;

mod classify;
mod decisions;
mod lemma;
mod triads;

pub use classify::{classify_on_line, Coordinatization};
pub use decisions::IncidenceStructure;
pub use lemma::{lemma_decide_equal, LemmaDecision, LemmaOutcome, LemmaStep};
pub use triads::{satisfies_selection_bound, Selection, Triad, TriadTable};

/// A finite list of points; repeats are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, SylvesterError> {
        if points.is_empty() {
            return Err(SylvesterError::EmptySet);
        }
        Ok(PointSet { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, index: usize) -> Result<&Point, SylvesterError> {
        self.points
            .get(index)
            .ok_or(SylvesterError::IndexOutOfRange { index })
    }
}

/// Indices `i, j, k` with `points[j] != points[k]` and `points[i]` off the
/// line through them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NoncollinearityWitness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Disposition {
    EqualsA,
    EqualsB,
    OffLine { sq_gap: Rational },
}

/// The selected pair, the anchor point and one disposition per input point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryLineCertificate {
    pub a_idx: usize,
    pub b_idx: usize,
    pub k_idx: usize,
    pub e_sq: Rational,
    pub dispositions: Vec<Disposition>,
}

/// Pipeline stage at which a robust run gave up.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Incidence,
    Selection,
}

/// The decision a robust run could not make, or found inconsistent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Equality {
        i: usize,
        j: usize,
    },
    /// Is `point` on the line through `j` and `k`?
    Incidence {
        point: usize,
        j: usize,
        k: usize,
    },
    Selection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SylvesterError {
    EmptySet,
    Collinear,
    IndexOutOfRange {
        index: usize,
    },
    InvalidWitness,
    BoundViolated,
    /// Two distinct points found on the same side of the foot. Cannot happen
    /// when the selection bound holds.
    MergeViolation {
        first: usize,
        second: usize,
    },
    Undecided {
        stage: Stage,
        cap: u32,
        decision: Decision,
    },
    MissingBacking {
        index: usize,
    },
    /// A robust decision disagreed with the exact backing values.
    Inconsistent(Decision),
    Geometry(GeometryError),
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Incidence => write!(f, "incidence"),
            Stage::Selection => write!(f, "selection"),
        }
    }
}

impl fmt::Display for Decision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decision::Equality { i, j } => write!(f, "is point {i} equal to point {j}"),
            Decision::Incidence { point, j, k } => {
                write!(f, "does point {point} lie on line({j}, {k})")
            }
            Decision::Selection => write!(f, "which triad satisfies the selection bound"),
        }
    }
}

impl fmt::Display for SylvesterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptySet => write!(f, "point set is empty"),
            Self::Collinear => write!(f, "point set is collinear"),
            Self::IndexOutOfRange { index } => write!(f, "index {index} out of range"),
            Self::InvalidWitness => write!(f, "noncollinearity witness is invalid"),
            Self::BoundViolated => write!(f, "selected distance violates the selection bound"),
            Self::MergeViolation { first, second } => {
                write!(
                    f,
                    "points {first} and {second} are distinct but on the same side of the foot"
                )
            }
            Self::Undecided { stage, cap, decision } => write!(
                f,
                "undecided in {stage} stage at precision cap {cap}: cannot decide {decision}"
            ),
            Self::MissingBacking { index } => write!(f, "point {index} has no exact value"),
            Self::Inconsistent(decision) => write!(f, "inconsistent decision: {decision}"),
            Self::Geometry(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SylvesterError {}

impl From<GeometryError> for SylvesterError {
    fn from(err: GeometryError) -> Self {
        SylvesterError::Geometry(err)
    }
}

fn witness_from(structure: &IncidenceStructure) -> Result<NoncollinearityWitness, SylvesterError> {
    let n = structure.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if structure.same(j, k) {
                    continue;
                }
                if !structure.on_line(i, j, k) {
                    return Ok(NoncollinearityWitness { i, j, k });
                }
            }
        }
    }
    Err(SylvesterError::Collinear)
}

/// First `(i, j, k)` in lexicographic order witnessing noncollinearity.
pub fn find_noncollinear_witness(s: &PointSet) -> Result<NoncollinearityWitness, SylvesterError> {
    witness_from(&IncidenceStructure::exact(s))
}

pub fn build_triad_table(s: &PointSet) -> Result<TriadTable, SylvesterError> {
    TriadTable::build(s, &IncidenceStructure::exact(s))
}

pub fn select_e(t: &TriadTable) -> Result<Selection, SylvesterError> {
    t.select_e()
}

fn run_pipeline(
    s: &PointSet,
    structure: &IncidenceStructure,
    robust_cap: Option<u32>,
) -> Result<OrdinaryLineCertificate, SylvesterError> {
    witness_from(structure)?;
    let table = TriadTable::build(s, structure)?;
    let selection = match robust_cap {
        None => table.select_e()?,
        Some(cap) => table.select_e_robust(cap)?,
    };
    let (certificate, _) = classify_on_line(s, &selection, structure)?;
    Ok(certificate)
}

pub fn find_ordinary_line(s: &PointSet) -> Result<OrdinaryLineCertificate, SylvesterError> {
    run_pipeline(s, &IncidenceStructure::exact(s), None)
}

/// Result of a robust run: the exact points the certificate refers to.
#[derive(Clone, Debug)]
pub struct RobustRun {
    pub points: PointSet,
    pub certificate: OrdinaryLineCertificate,
}

/// Robust mode. Equality and incidence are decided only from interval
/// queries at precisions up to `cap`, and the triad is selected from
/// interval approximations of the distances. Metric quantities in the
/// certificate come from the points' exact backing values, which must exist.
pub fn find_ordinary_line_robust(points: &[RealPoint], cap: u32) -> Result<RobustRun, SylvesterError> {
    if points.is_empty() {
        return Err(SylvesterError::EmptySet);
    }
    let structure = IncidenceStructure::robust(points, cap)?;
    let exact: Vec<Point> = points
        .iter()
        .enumerate()
        .map(|(index, p)| p.backing().ok_or(SylvesterError::MissingBacking { index }))
        .collect::<Result<_, _>>()?;
    let s = PointSet::new(exact)?;
    let certificate = run_pipeline(&s, &structure, Some(cap))?;
    Ok(RobustRun {
        points: s,
        certificate,
    })
}

/// Squared distance from `z` to the line through `y` and `k`. In the
/// step where two on-line points `Z`, `Y` sit on the same side of the foot
/// with `y > z >= 0`, this is strictly below `d_sq`.
pub fn check_similar_triangle_bound(z: &Point, y: &Point, k: &Point) -> Result<Rational, SylvesterError> {
    let line = LinePair::new(y.clone(), k.clone())?;
    Ok(sq_dist_point_line(z, &line))
}

#[cfg(test)]
mod tests;
