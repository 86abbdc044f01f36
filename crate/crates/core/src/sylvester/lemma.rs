//! Deciding equality of two points of a noncollinear, linearly discrete set
//! using only cotransitivity, incidence and the uniqueness of the
//! intersection of two distinct lines.

use alloc::vec::Vec;

use crate::geometry::{
    cotransitive_split, incidence, line_intersection, CotransitiveBranch, IncidenceResult, LinePair,
};

use super::{NoncollinearityWitness, PointSet, SylvesterError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaOutcome {
    Equal,
    Distinct,
}

/// One step of the decision, in the order it was taken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LemmaStep {
    /// `a` is apart from witness point `anchor` (called P).
    AnchorApartFromA {
        anchor: usize,
    },
    /// `b` lies outside line(a, P): distinct.
    BOutsideAP,
    BOnAP,
    /// Witness point `pivot` (called Q) lies outside line(a, P).
    PivotOffAP {
        pivot: usize,
    },
    /// `a` lies outside line(b, Q): distinct.
    AOutsideBQ,
    AOnBQ,
    /// Lines aP and bQ differ and meet in a single point, which is both a
    /// and b.
    LineIntersection,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaDecision {
    pub outcome: LemmaOutcome,
    pub trace: Vec<LemmaStep>,
}

pub fn lemma_decide_equal(
    s: &PointSet,
    witness: &NoncollinearityWitness,
    a_idx: usize,
    b_idx: usize,
) -> Result<LemmaDecision, SylvesterError> {
    let points = s.points();
    let a = s.get(a_idx)?;
    let b = s.get(b_idx)?;
    let corners = [witness.i, witness.j, witness.k];
    for &c in &corners {
        s.get(c)?;
    }
    let mut trace = Vec::new();

    // One of the first two witness corners is apart from a.
    let anchor = match cotransitive_split(a, &points[corners[0]], &points[corners[1]])? {
        CotransitiveBranch::ApartFromA { .. } => corners[0],
        CotransitiveBranch::ApartFromB { .. } => corners[1],
    };
    trace.push(LemmaStep::AnchorApartFromA { anchor });
    let ap = LinePair::new(a.clone(), points[anchor].clone())?;

    if let IncidenceResult::Outside { .. } = incidence(b, &ap) {
        trace.push(LemmaStep::BOutsideAP);
        return Ok(LemmaDecision {
            outcome: LemmaOutcome::Distinct,
            trace,
        });
    }
    trace.push(LemmaStep::BOnAP);

    let pivot = corners
        .iter()
        .copied()
        .find(|&c| !incidence(&points[c], &ap).is_on())
        .ok_or(SylvesterError::InvalidWitness)?;
    trace.push(LemmaStep::PivotOffAP { pivot });
    // pivot is off aP while b is on it, so pivot # b
    let bq = LinePair::new(b.clone(), points[pivot].clone())?;

    if let IncidenceResult::Outside { .. } = incidence(a, &bq) {
        trace.push(LemmaStep::AOutsideBQ);
        return Ok(LemmaDecision {
            outcome: LemmaOutcome::Distinct,
            trace,
        });
    }
    trace.push(LemmaStep::AOnBQ);

    let meet = line_intersection(&ap, &bq).ok_or(SylvesterError::InvalidWitness)?;
    if &meet != a || &meet != b {
        return Err(SylvesterError::InvalidWitness);
    }
    trace.push(LemmaStep::LineIntersection);
    Ok(LemmaDecision {
        outcome: LemmaOutcome::Equal,
        trace,
    })
}
