//! Brute-force ground truth.
//!
//! Everything here is deliberately naive and uses its own arithmetic route
//! (implicit line equations `c0*x + c1*y + c2 = 0`) rather than the
//! predicates in [`crate::geometry`], so it can check them.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::geometry::Point;
use crate::numeric::Rational;
use crate::sylvester::{Disposition, OrdinaryLineCertificate, PointSet};

/// A line through two listed points with all set points on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineReport {
    pub pair: (usize, usize),
    /// Distinct locations on the line, in order of first listing.
    pub distinct_incident: Vec<Point>,
    /// Number of list entries on the line, duplicates included.
    pub multiplicity: usize,
}

impl LineReport {
    pub fn distinct_count(&self) -> usize {
        self.distinct_incident.len()
    }

    pub fn is_ordinary(&self) -> bool {
        self.distinct_count() == 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    DegeneratePair { i: usize, j: usize },
    IndexOutOfRange { index: usize },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::DegeneratePair { i, j } => write!(f, "points {i} and {j} coincide"),
            Self::IndexOutOfRange { index } => write!(f, "index {index} out of range"),
        }
    }
}

impl core::error::Error for OracleError {}

/// Coefficients `(c0, c1, c2)` normalized so the first nonzero one is 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct LineKey([Rational; 3]);

impl LineKey {
    fn through(a: &Point, b: &Point) -> LineKey {
        let c0 = &a.y - &b.y;
        let c1 = &b.x - &a.x;
        let c2 = &a.x * &b.y - &b.x * &a.y;
        let lead = if c0.is_zero() { c1.clone() } else { c0.clone() };
        let inv = lead.recip().expect("distinct points give a nonzero coefficient");
        LineKey([c0 * &inv, c1 * &inv, c2 * &inv])
    }

    fn eval(&self, p: &Point) -> Rational {
        let [c0, c1, c2] = &self.0;
        c0 * &p.x + c1 * &p.y + c2
    }

    fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    fn sq_dist(&self, p: &Point) -> Rational {
        let [c0, c1, _] = &self.0;
        let norm = c0.square() + c1.square();
        self.eval(p)
            .square()
            .checked_div(&norm)
            .expect("normalized line has a nonzero normal")
    }
}

fn report_for(points: &[Point], pair: (usize, usize), key: &LineKey) -> LineReport {
    let mut distinct: Vec<Point> = Vec::new();
    let mut multiplicity = 0;
    for p in points.iter().filter(|p| key.contains(p)) {
        multiplicity += 1;
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    LineReport {
        pair,
        distinct_incident: distinct,
        multiplicity,
    }
}

pub fn count_incidences(s: &PointSet, i: usize, j: usize) -> Result<LineReport, OracleError> {
    let points = s.points();
    let get = |index: usize| points.get(index).ok_or(OracleError::IndexOutOfRange { index });
    let (a, b) = (get(i)?, get(j)?);
    if a == b {
        return Err(OracleError::DegeneratePair { i, j });
    }
    Ok(report_for(points, (i, j), &LineKey::through(a, b)))
}

/// Every line spanned by two distinct listed points, one report per
/// geometric line, keyed by the lowest spanning index pair.
pub fn enumerate_lines(s: &PointSet) -> Vec<LineReport> {
    let points = s.points();
    let mut seen: BTreeMap<LineKey, (usize, usize)> = BTreeMap::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if points[i] == points[j] {
                continue;
            }
            seen.entry(LineKey::through(&points[i], &points[j]))
                .or_insert((i, j));
        }
    }
    let mut reports: Vec<LineReport> = seen
        .iter()
        .map(|(key, &pair)| report_for(points, pair, key))
        .collect();
    reports.sort_by_key(|r| r.pair);
    reports
}

pub fn enumerate_ordinary_lines(s: &PointSet) -> Vec<LineReport> {
    enumerate_lines(s)
        .into_iter()
        .filter(LineReport::is_ordinary)
        .collect()
}

/// `(d_sq, diam_sq)` by brute force over all ordered triples, or `None` when
/// no point lies off any spanned line.
pub fn min_distance_and_diameter(s: &PointSet) -> Option<(Rational, Rational)> {
    let points = s.points();
    let mut d_sq: Option<Rational> = None;
    for (j, q) in points.iter().enumerate() {
        for (k, r) in points.iter().enumerate() {
            if j == k || q == r {
                continue;
            }
            let key = LineKey::through(q, r);
            for p in points.iter().filter(|p| !key.contains(p)) {
                let dist = key.sq_dist(p);
                if d_sq.as_ref().is_none_or(|best| &dist < best) {
                    d_sq = Some(dist);
                }
            }
        }
    }
    let mut diam_sq = Rational::zero();
    for p in points {
        for q in points {
            let dx = &p.x - &q.x;
            let dy = &p.y - &q.y;
            let sq = dx.square() + dy.square();
            if sq > diam_sq {
                diam_sq = sq;
            }
        }
    }
    d_sq.map(|d| (d, diam_sq))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RejectReason {
    IndexOutOfRange,
    DispositionCount { expected: usize, found: usize },
    EndpointsCoincide,
    AnchorOnLine,
    ESqMismatch { expected: Rational },
    NoTriads,
    BoundViolated,
    NotEqualToA,
    NotEqualToB,
    OnLine,
    SqGapMismatch { expected: Rational },
    NonPositiveGap,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::IndexOutOfRange => write!(f, "index out of range"),
            Self::DispositionCount { expected, found } => {
                write!(f, "expected {expected} dispositions, found {found}")
            }
            Self::EndpointsCoincide => write!(f, "selected points coincide"),
            Self::AnchorOnLine => write!(f, "anchor point lies on the selected line"),
            Self::ESqMismatch { expected } => write!(f, "e_sq mismatch (recomputed {expected})"),
            Self::NoTriads => write!(f, "point set is collinear"),
            Self::BoundViolated => write!(f, "e_sq violates the selection bound"),
            Self::NotEqualToA => write!(f, "point claimed equal to a is not"),
            Self::NotEqualToB => write!(f, "point claimed equal to b is not"),
            Self::OnLine => write!(f, "point claimed off the line lies on it"),
            Self::SqGapMismatch { expected } => {
                write!(f, "sq_gap mismatch (recomputed {expected})")
            }
            Self::NonPositiveGap => write!(f, "sq_gap must be positive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// First failing point index (if the failure is about one point) and why.
    Reject {
        index: Option<usize>,
        reason: RejectReason,
    },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }

    fn reject(index: Option<usize>, reason: RejectReason) -> Verdict {
        Verdict::Reject { index, reason }
    }
}

/// Recomputes every claim in the certificate from scratch.
pub fn verify_certificate(s: &PointSet, c: &OrdinaryLineCertificate) -> Verdict {
    let points = s.points();
    let n = points.len();
    if c.dispositions.len() != n {
        return Verdict::reject(
            None,
            RejectReason::DispositionCount {
                expected: n,
                found: c.dispositions.len(),
            },
        );
    }
    for index in [c.a_idx, c.b_idx, c.k_idx] {
        if index >= n {
            return Verdict::reject(Some(index), RejectReason::IndexOutOfRange);
        }
    }
    let (a, b, k) = (&points[c.a_idx], &points[c.b_idx], &points[c.k_idx]);
    if a == b {
        return Verdict::reject(Some(c.b_idx), RejectReason::EndpointsCoincide);
    }
    let key = LineKey::through(a, b);
    if key.contains(k) {
        return Verdict::reject(Some(c.k_idx), RejectReason::AnchorOnLine);
    }
    let e_sq = key.sq_dist(k);
    if e_sq != c.e_sq {
        return Verdict::reject(Some(c.k_idx), RejectReason::ESqMismatch { expected: e_sq });
    }
    let Some((d_sq, diam_sq)) = min_distance_and_diameter(s) else {
        return Verdict::reject(None, RejectReason::NoTriads);
    };
    if &e_sq * &diam_sq >= &d_sq * (&diam_sq + &d_sq) {
        return Verdict::reject(Some(c.k_idx), RejectReason::BoundViolated);
    }
    for (index, (p, disposition)) in points.iter().zip(&c.dispositions).enumerate() {
        let failure = match disposition {
            Disposition::EqualsA => (p != a).then_some(RejectReason::NotEqualToA),
            Disposition::EqualsB => (p != b).then_some(RejectReason::NotEqualToB),
            Disposition::OffLine { sq_gap } => {
                let expected = key.sq_dist(p);
                if !sq_gap.is_positive() {
                    Some(RejectReason::NonPositiveGap)
                } else if key.contains(p) {
                    Some(RejectReason::OnLine)
                } else if &expected != sq_gap {
                    Some(RejectReason::SqGapMismatch { expected })
                } else {
                    None
                }
            }
        };
        if let Some(reason) = failure {
            return Verdict::reject(Some(index), reason);
        }
    }
    Verdict::Accept
}
