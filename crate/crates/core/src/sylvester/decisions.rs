use alloc::vec;
use alloc::vec::Vec;

use crate::geometry::{
    incidence, robust_incidence, robust_same_point, GeometryError, LinePair, RealPoint, RobustIncidence,
};

use super::{Decision, PointSet, Stage, SylvesterError};

/// Every equality and incidence fact the algorithm may ask about, decided up
/// front. A point set is linearly discrete exactly when this table can be
/// filled in.
#[derive(Clone, Debug)]
pub struct IncidenceStructure {
    n: usize,
    same: Vec<bool>,
    // on[(i * n + j) * n + k]: point i lies on line(j, k); only meaningful
    // when points j and k are distinct
    on: Vec<bool>,
}

impl IncidenceStructure {
    fn empty(n: usize) -> Self {
        IncidenceStructure {
            n,
            same: vec![false; n * n],
            on: vec![false; n * n * n],
        }
    }

    fn set_same(&mut self, i: usize, j: usize, value: bool) {
        self.same[i * self.n + j] = value;
        self.same[j * self.n + i] = value;
    }

    fn set_on(&mut self, i: usize, j: usize, k: usize, value: bool) {
        let n = self.n;
        self.on[(i * n + j) * n + k] = value;
        self.on[(i * n + k) * n + j] = value;
    }

    /// Decided by exact rational comparison; never fails.
    pub fn exact(s: &PointSet) -> Self {
        let points = s.points();
        let n = points.len();
        let mut table = Self::empty(n);
        for i in 0..n {
            for j in i..n {
                table.set_same(i, j, points[i] == points[j]);
            }
        }
        for j in 0..n {
            for k in j + 1..n {
                let Ok(line) = LinePair::new(points[j].clone(), points[k].clone()) else {
                    continue;
                };
                for (i, p) in points.iter().enumerate() {
                    table.set_on(i, j, k, incidence(p, &line).is_on());
                }
            }
        }
        table
    }

    /// Decided from interval queries alone, each within `cap`. The first
    /// decision that cannot be made aborts the whole stage.
    pub fn robust(points: &[RealPoint], cap: u32) -> Result<Self, SylvesterError> {
        let n = points.len();
        let undecided = |decision: Decision, err: GeometryError| match err {
            GeometryError::Undecided(u) => SylvesterError::Undecided {
                stage: Stage::Incidence,
                cap: u.cap,
                decision,
            },
            other => SylvesterError::Geometry(other),
        };
        let mut table = Self::empty(n);
        for i in 0..n {
            table.set_same(i, i, true);
            for j in i + 1..n {
                let same = robust_same_point(&points[i], &points[j], cap)
                    .map_err(|e| undecided(Decision::Equality { i, j }, e))?;
                table.set_same(i, j, same);
            }
        }
        for j in 0..n {
            for k in j + 1..n {
                if table.same(j, k) {
                    continue;
                }
                for i in 0..n {
                    let on = if i == j || i == k {
                        true
                    } else {
                        let decided = robust_incidence(&points[i], &points[j], &points[k], cap)
                            .map_err(|e| undecided(Decision::Incidence { point: i, j, k }, e))?;
                        decided == RobustIncidence::On
                    };
                    table.set_on(i, j, k, on);
                }
            }
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn same(&self, i: usize, j: usize) -> bool {
        self.same[i * self.n + j]
    }

    /// Point `i` lies on the line through points `j` and `k` (which must be
    /// distinct).
    pub fn on_line(&self, i: usize, j: usize, k: usize) -> bool {
        debug_assert!(!self.same(j, k));
        self.on[(i * self.n + j) * self.n + k]
    }
}
