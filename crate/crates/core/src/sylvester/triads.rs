use alloc::vec::Vec;

use crate::geometry::{sq_dist, sq_dist_point_line, LinePair};
use crate::numeric::{decide::precision_schedule, OracleReal, Rational};

use super::{Decision, IncidenceStructure, PointSet, Stage, SylvesterError};

/// Ordered index triple `(k, a, b)`: points `a` and `b` are distinct and
/// point `k` lies off the line through them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triad {
    pub k: usize,
    pub a: usize,
    pub b: usize,
}

/// All triads of a point set with their squared point-line distances.
#[derive(Clone, Debug)]
pub struct TriadTable {
    triads: Vec<Triad>,
    sq_dists: Vec<Rational>,
    argmin: usize,
    d_sq: Rational,
    diam_sq: Rational,
}

/// A triad whose distance is close enough to the minimum for the
/// construction to go through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selection {
    pub index: usize,
    pub triad: Triad,
    pub e_sq: Rational,
}

/// `e_sq * diam_sq < d_sq * (diam_sq + d_sq)`, the squared and
/// denominator-free form of `e < d * sqrt(1 + d^2/D^2)`.
pub fn satisfies_selection_bound(e_sq: &Rational, d_sq: &Rational, diam_sq: &Rational) -> bool {
    e_sq * diam_sq < d_sq * (diam_sq + d_sq)
}

impl TriadTable {
    /// Enumerates ordered triples in lexicographic `(k, a, b)` order.
    /// Minimum and maximum keep their first occurrence.
    pub fn build(s: &PointSet, structure: &IncidenceStructure) -> Result<Self, SylvesterError> {
        let points = s.points();
        let n = points.len();
        let mut triads = Vec::new();
        let mut sq_dists = Vec::new();
        for k in 0..n {
            for a in 0..n {
                for b in 0..n {
                    if structure.same(a, b) || structure.on_line(k, a, b) {
                        continue;
                    }
                    let line = LinePair::new(points[a].clone(), points[b].clone())?;
                    let dist = sq_dist_point_line(&points[k], &line);
                    if !dist.is_positive() {
                        return Err(SylvesterError::Inconsistent(Decision::Incidence {
                            point: k,
                            j: a,
                            k: b,
                        }));
                    }
                    triads.push(Triad { k, a, b });
                    sq_dists.push(dist);
                }
            }
        }
        let mut argmin = None;
        for (index, dist) in sq_dists.iter().enumerate() {
            if argmin.is_none_or(|best: usize| dist < &sq_dists[best]) {
                argmin = Some(index);
            }
        }
        let argmin = argmin.ok_or(SylvesterError::Collinear)?;
        let mut diam_sq = Rational::zero();
        for p in points {
            for q in points {
                let candidate = sq_dist(p, q);
                if candidate > diam_sq {
                    diam_sq = candidate;
                }
            }
        }
        Ok(TriadTable {
            d_sq: sq_dists[argmin].clone(),
            triads,
            sq_dists,
            argmin,
            diam_sq,
        })
    }

    pub fn triads(&self) -> &[Triad] {
        &self.triads
    }

    pub fn sq_dists(&self) -> &[Rational] {
        &self.sq_dists
    }

    pub fn len(&self) -> usize {
        self.triads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triads.is_empty()
    }

    pub fn d_sq(&self) -> &Rational {
        &self.d_sq
    }

    pub fn diam_sq(&self) -> &Rational {
        &self.diam_sq
    }

    pub fn argmin(&self) -> usize {
        self.argmin
    }

    pub fn satisfies_bound(&self, e_sq: &Rational) -> bool {
        satisfies_selection_bound(e_sq, &self.d_sq, &self.diam_sq)
    }

    /// Exact selection: the minimum is attained, so the first minimizing
    /// triad is returned. The bound is still checked.
    pub fn select_e(&self) -> Result<Selection, SylvesterError> {
        self.selection_at(self.argmin)
    }

    fn selection_at(&self, index: usize) -> Result<Selection, SylvesterError> {
        let e_sq = self.sq_dists[index].clone();
        if !self.satisfies_bound(&e_sq) {
            return Err(SylvesterError::BoundViolated);
        }
        Ok(Selection {
            index,
            triad: self.triads[index],
            e_sq,
        })
    }

    /// Selection through interval approximations only: at each precision the
    /// triad with the smallest upper bound `hi` is taken, and accepted once
    /// `hi * U < L * (U + L)` where `L` is the smallest lower bound over all
    /// triads and `U` the upper bound on the squared diameter. The chosen
    /// triad need not be a minimizer.
    pub fn select_e_robust(&self, cap: u32) -> Result<Selection, SylvesterError> {
        let dists: Vec<OracleReal> = self.sq_dists.iter().cloned().map(OracleReal::exact).collect();
        let diam = OracleReal::exact(self.diam_sq.clone());
        for n in precision_schedule(cap) {
            let intervals: Vec<_> = dists.iter().map(|d| d.query(n)).collect();
            let Some(lower) = intervals.iter().map(|q| q.lo().clone()).min() else {
                return Err(SylvesterError::Collinear);
            };
            if !lower.is_positive() {
                continue;
            }
            let mut best = 0;
            for (index, q) in intervals.iter().enumerate() {
                if q.hi() < intervals[best].hi() {
                    best = index;
                }
            }
            let upper_diam = diam.query(n).hi().clone();
            let e_hi = intervals[best].hi();
            if e_hi * &upper_diam < &lower * (&upper_diam + &lower) {
                return self.selection_at(best);
            }
        }
        Err(SylvesterError::Undecided {
            stage: Stage::Selection,
            cap,
            decision: Decision::Selection,
        })
    }
}
