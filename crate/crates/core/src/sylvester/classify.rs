use alloc::vec::Vec;

use crate::geometry::{foot_of_perpendicular, scaled_coordinate, sq_dist_point_line, LinePair, Orientation};
use crate::numeric::Rational;

use super::{Disposition, IncidenceStructure, OrdinaryLineCertificate, PointSet, Selection, SylvesterError};

/// How the selected line was coordinatized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinatization {
    /// The line through the selected pair in its original order.
    pub line: LinePair,
    /// Foot of the perpendicular from the anchor point; coordinate zero.
    pub foot: crate::geometry::Point,
    pub orientation: Orientation,
    /// Whether the roles of the selected pair were exchanged so that the
    /// point called `a` has positive coordinate.
    pub swapped: bool,
}

/// Turns a selected triad into a certificate: every point on the selected
/// line is shown equal to one of its two defining points.
///
/// The line is coordinatized from the foot of the perpendicular dropped from
/// the anchor point. Roles and orientation are fixed so that `a > 0`; then
/// every on-line point with coordinate `>= 0` must equal `a` and every one
/// with coordinate `<= 0` must equal `b`. A violation means the selection
/// bound did not hold and is reported as [`SylvesterError::MergeViolation`].
pub fn classify_on_line(
    s: &PointSet,
    selection: &Selection,
    structure: &IncidenceStructure,
) -> Result<(OrdinaryLineCertificate, Coordinatization), SylvesterError> {
    let points = s.points();
    let triad = selection.triad;
    let line = LinePair::new(points[triad.a].clone(), points[triad.b].clone())?;
    let foot = foot_of_perpendicular(&points[triad.k], &line);
    let coord = |index: usize, orient: Orientation| -> Result<Rational, SylvesterError> {
        Ok(scaled_coordinate(&points[index], &line, &foot, orient)?)
    };

    let (mut a_idx, mut b_idx) = (triad.a, triad.b);
    let mut orientation = Orientation::Forward;
    let mut swapped = false;
    if !coord(a_idx, orientation)?.is_positive() {
        if coord(b_idx, orientation)?.is_positive() {
            core::mem::swap(&mut a_idx, &mut b_idx);
            swapped = true;
        } else {
            orientation = orientation.flipped();
            if !coord(a_idx, orientation)?.is_positive() {
                core::mem::swap(&mut a_idx, &mut b_idx);
                swapped = true;
            }
        }
    }
    let a_coord = coord(a_idx, orientation)?;
    let b_coord = coord(b_idx, orientation)?;
    debug_assert!(a_coord.is_positive());
    if b_coord.is_positive() {
        return Err(SylvesterError::MergeViolation {
            first: a_idx,
            second: b_idx,
        });
    }

    let mut dispositions = Vec::with_capacity(points.len());
    for (x, point) in points.iter().enumerate() {
        if !structure.on_line(x, a_idx, b_idx) {
            let sq_gap = sq_dist_point_line(point, &line);
            if !sq_gap.is_positive() {
                return Err(SylvesterError::Inconsistent(super::Decision::Incidence {
                    point: x,
                    j: a_idx,
                    k: b_idx,
                }));
            }
            dispositions.push(Disposition::OffLine { sq_gap });
            continue;
        }
        let x_coord = coord(x, orientation)?;
        // Points on the nonnegative side all coincide with a, points on the
        // nonpositive side all coincide with b.
        if !x_coord.is_negative() && !structure.same(x, a_idx) {
            return Err(SylvesterError::MergeViolation {
                first: a_idx,
                second: x,
            });
        }
        if !x_coord.is_positive() && !structure.same(x, b_idx) {
            return Err(SylvesterError::MergeViolation {
                first: b_idx,
                second: x,
            });
        }
        // cotransitivity: x # a or x # b
        let disposition = if !structure.same(x, a_idx) {
            Disposition::EqualsB
        } else {
            Disposition::EqualsA
        };
        dispositions.push(disposition);
    }

    let certificate = OrdinaryLineCertificate {
        a_idx,
        b_idx,
        k_idx: triad.k,
        e_sq: selection.e_sq.clone(),
        dispositions,
    };
    Ok((
        certificate,
        Coordinatization {
            line,
            foot,
            orientation,
            swapped,
        },
    ))
}
