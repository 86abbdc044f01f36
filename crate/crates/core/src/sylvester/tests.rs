use alloc::vec;
use alloc::vec::Vec;

use proptest::prelude::*;

use super::*;
use crate::geometry::{incidence, sq_dist, Orientation};
use crate::oracle::{
    count_incidences, enumerate_ordinary_lines, min_distance_and_diameter, verify_certificate,
};

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

fn set(coords: &[(i64, i64)]) -> PointSet {
    PointSet::new(coords.iter().map(|&(x, y)| Point::from_integers(x, y)).collect()).unwrap()
}

fn triangle() -> PointSet {
    set(&[(0, 0), (1, 0), (0, 1)])
}

fn square_plus_center() -> PointSet {
    set(&[(0, 0), (2, 0), (0, 2), (2, 2), (1, 1)])
}

fn gadget(alpha: Rational) -> PointSet {
    let plus = alpha.clone().max(Rational::zero());
    let abs = alpha.abs();
    PointSet::new(vec![
        Point::from_integers(-1, 0),
        Point::from_integers(1, 0),
        Point::from_integers(0, 1),
        Point::new(Rational::from_integer(-1) + &abs, plus.clone()),
        Point::new(Rational::one() - &abs, plus),
    ])
    .unwrap()
}

#[test]
fn empty_set_is_rejected() {
    assert_eq!(PointSet::new(Vec::new()), Err(SylvesterError::EmptySet));
}

#[test]
fn witness_examples() {
    let w = find_noncollinear_witness(&triangle()).unwrap();
    assert_eq!(w, NoncollinearityWitness { i: 0, j: 1, k: 2 });
    assert_eq!(
        find_noncollinear_witness(&set(&[(0, 0), (1, 1), (2, 2)])),
        Err(SylvesterError::Collinear)
    );
    assert_eq!(
        find_noncollinear_witness(&set(&[(3, 3), (3, 3)])),
        Err(SylvesterError::Collinear)
    );

    let g = gadget(Rational::zero());
    let w = find_noncollinear_witness(&g).unwrap();
    let pts = g.points();
    let r = Point::from_integers(0, 1);
    assert!([w.i, w.j, w.k].iter().any(|&idx| pts[idx] == r));
    let line = LinePair::new(pts[w.j].clone(), pts[w.k].clone()).unwrap();
    assert!(!incidence(&pts[w.i], &line).is_on());
    // R is off the line through P and Q
    assert!(!incidence(&r, &LinePair::new(pts[0].clone(), pts[1].clone()).unwrap()).is_on());
}

// Independent enumeration of squared distances over ordered triples using
// the implicit line form.
fn brute_force_sq_dists(s: &PointSet) -> Vec<Rational> {
    let pts = s.points();
    let mut out = Vec::new();
    for p in pts {
        for a in pts {
            for b in pts {
                if a == b {
                    continue;
                }
                let c0 = &a.y - &b.y;
                let c1 = &b.x - &a.x;
                let c2 = &a.x * &b.y - &b.x * &a.y;
                let value = &c0 * &p.x + &c1 * &p.y + c2;
                if !value.is_zero() {
                    out.push(value.square().checked_div(&(c0.square() + c1.square())).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn triangle_triad_table() {
    let table = build_triad_table(&triangle()).unwrap();
    let brute = brute_force_sq_dists(&triangle());
    assert_eq!(brute.len(), 6);
    assert_eq!(table.len(), 6);
    assert_eq!(table.d_sq(), &q(1, 2));
    assert_eq!(table.diam_sq(), &q(2, 1));
    // (1,0) to the y-axis and (0,1) to the x-axis, each seen from both
    // orderings of the line's defining pair
    let ones = |v: &[Rational]| v.iter().filter(|d| **d == Rational::one()).count();
    assert_eq!(ones(&brute), 4);
    assert_eq!(ones(table.sq_dists()), 4);
    let mut sorted = table.sq_dists().to_vec();
    sorted.sort();
    let mut expected = brute;
    expected.sort();
    assert_eq!(sorted, expected);
}

#[test]
fn square_plus_center_table() {
    let s = square_plus_center();
    let table = build_triad_table(&s).unwrap();
    assert_eq!(table.diam_sq(), &q(8, 1));
    let (d_sq, diam_sq) = min_distance_and_diameter(&s).unwrap();
    assert_eq!(table.d_sq(), &d_sq);
    assert_eq!(table.diam_sq(), &diam_sq);
}

#[test]
fn select_e_examples() {
    let table = build_triad_table(&triangle()).unwrap();
    let sel = select_e(&table).unwrap();
    assert_eq!(sel.e_sq, q(1, 2));
    let bound = q(1, 2) * (Rational::one() + q(1, 2).checked_div(&q(2, 1)).unwrap());
    assert_eq!(bound, q(5, 8));
    assert!(sel.e_sq < bound);
    assert!(table.satisfies_bound(&sel.e_sq));

    let s = square_plus_center();
    let table = build_triad_table(&s).unwrap();
    let sel = select_e(&table).unwrap();
    let brute_min = brute_force_sq_dists(&s).into_iter().min().unwrap();
    assert_eq!(sel.e_sq, brute_min);
    assert!(sel.e_sq >= *table.d_sq());
    assert!(satisfies_selection_bound(
        &sel.e_sq,
        table.d_sq(),
        table.diam_sq()
    ));
}

#[test]
fn classify_triangle_from_origin() {
    let s = triangle();
    let structure = IncidenceStructure::exact(&s);
    let table = TriadTable::build(&s, &structure).unwrap();
    let index = table
        .triads()
        .iter()
        .position(|t| *t == Triad { k: 0, a: 1, b: 2 })
        .unwrap();
    let selection = Selection {
        index,
        triad: table.triads()[index],
        e_sq: table.sq_dists()[index].clone(),
    };
    let (cert, coords) = classify_on_line(&s, &selection, &structure).unwrap();
    assert_eq!(coords.foot, Point::new(q(1, 2), q(1, 2)));
    // (1,0) has coordinate -1 and (0,1) has +1 along direction (-1, 1), so
    // the roles are exchanged
    assert!(coords.swapped);
    assert_eq!(coords.orientation, Orientation::Forward);
    assert_eq!((cert.a_idx, cert.b_idx, cert.k_idx), (2, 1, 0));
    assert_eq!(
        cert.dispositions,
        vec![
            Disposition::OffLine { sq_gap: q(1, 2) },
            Disposition::EqualsB,
            Disposition::EqualsA
        ]
    );
    assert_eq!(verify_certificate(&s, &cert), crate::oracle::Verdict::Accept);
}

#[test]
fn gadget_at_zero_is_classified() {
    let s = gadget(Rational::zero());
    let cert = find_ordinary_line(&s).unwrap();
    assert!(verify_certificate(&s, &cert).is_accept());
    let report = count_incidences(&s, cert.a_idx, cert.b_idx).unwrap();
    assert_eq!(report.distinct_count(), 2);
    assert_eq!(cert.dispositions.len(), 5);
    // three distinct locations, so the chosen line passes through two of them
    let distinct: Vec<_> = {
        let mut v: Vec<Point> = Vec::new();
        for p in s.points() {
            if !v.contains(p) {
                v.push(p.clone());
            }
        }
        v
    };
    assert_eq!(distinct.len(), 3);
}

#[test]
fn duplicates_share_disposition() {
    let s = set(&[(0, 0), (0, 0), (1, 0), (0, 1)]);
    let cert = find_ordinary_line(&s).unwrap();
    assert!(verify_certificate(&s, &cert).is_accept());
    let kind = |d: &Disposition| core::mem::discriminant(d);
    assert_eq!(kind(&cert.dispositions[0]), kind(&cert.dispositions[1]));
    assert_eq!(cert.dispositions[0], cert.dispositions[1]);
}

#[test]
fn find_ordinary_line_examples() {
    let tri = triangle();
    let cert = find_ordinary_line(&tri).unwrap();
    assert!(verify_certificate(&tri, &cert).is_accept());
    assert_eq!(
        count_incidences(&tri, cert.a_idx, cert.b_idx)
            .unwrap()
            .distinct_count(),
        2
    );

    let s = square_plus_center();
    let cert = find_ordinary_line(&s).unwrap();
    assert!(verify_certificate(&s, &cert).is_accept());
    let sides = enumerate_ordinary_lines(&s);
    assert_eq!(sides.len(), 4);
    let chosen = count_incidences(&s, cert.a_idx, cert.b_idx).unwrap();
    assert!(sides
        .iter()
        .any(|l| l.distinct_incident == chosen.distinct_incident
            || l.distinct_incident
                .iter()
                .all(|p| chosen.distinct_incident.contains(p))));

    assert_eq!(
        find_ordinary_line(&set(&[(0, 0), (1, 1), (2, 2)])),
        Err(SylvesterError::Collinear)
    );
}

#[test]
fn lemma_examples() {
    let s = set(&[(0, 0), (1, 0), (0, 1), (0, 0)]);
    let w = find_noncollinear_witness(&s).unwrap();
    let equal = lemma_decide_equal(&s, &w, 0, 3).unwrap();
    assert_eq!(equal.outcome, LemmaOutcome::Equal);
    assert_eq!(equal.trace.last(), Some(&LemmaStep::LineIntersection));
    assert!(equal.trace.contains(&LemmaStep::AOnBQ));

    let distinct = lemma_decide_equal(&s, &w, 0, 1).unwrap();
    assert_eq!(distinct.outcome, LemmaOutcome::Distinct);
    assert!(!distinct.trace.contains(&LemmaStep::LineIntersection));

    let same_index = lemma_decide_equal(&s, &w, 2, 2).unwrap();
    assert_eq!(same_index.outcome, LemmaOutcome::Equal);
}

#[test]
fn lemma_reaches_second_incidence_test() {
    // b on line(a, P) but a off line(b, Q): a = (2,0), b = (3,0), P = (0,0),
    // Q = (0,1)
    let s = set(&[(0, 0), (1, 0), (0, 1), (2, 0), (3, 0)]);
    let w = NoncollinearityWitness { i: 0, j: 1, k: 2 };
    let d = lemma_decide_equal(&s, &w, 3, 4).unwrap();
    assert_eq!(d.outcome, LemmaOutcome::Distinct);
    assert_eq!(d.trace.last(), Some(&LemmaStep::AOutsideBQ));
}

#[test]
fn similar_triangle_examples() {
    let h = check_similar_triangle_bound(
        &Point::from_integers(1, 0),
        &Point::from_integers(3, 0),
        &Point::from_integers(0, 1),
    )
    .unwrap();
    assert_eq!(h, q(2, 5));
    let on = check_similar_triangle_bound(
        &Point::new(q(3, 2), q(1, 2)),
        &Point::from_integers(3, 0),
        &Point::from_integers(0, 1),
    )
    .unwrap();
    assert_eq!(on, Rational::zero());
    assert!(check_similar_triangle_bound(
        &Point::from_integers(1, 0),
        &Point::from_integers(3, 0),
        &Point::from_integers(3, 0)
    )
    .is_err());
}

#[test]
fn robust_mode_on_dyadic_input_matches_exact() {
    let s = set(&[(0, 0), (2, 0), (0, 2), (2, 2), (1, 1), (1, 1)]);
    let reals: Vec<_> = s.points().iter().map(Point::to_real).collect();
    let run = find_ordinary_line_robust(&reals, 8).unwrap();
    assert_eq!(run.points, s);
    assert!(verify_certificate(&s, &run.certificate).is_accept());
}

#[test]
fn robust_mode_cannot_confirm_repeated_thirds() {
    let s = PointSet::new(vec![
        Point::new(q(1, 3), Rational::zero()),
        Point::new(q(1, 3), Rational::zero()),
        Point::from_integers(1, 0),
        Point::from_integers(0, 1),
    ])
    .unwrap();
    let reals: Vec<_> = s.points().iter().map(Point::to_real).collect();
    assert_eq!(
        find_ordinary_line_robust(&reals, 24).unwrap_err(),
        SylvesterError::Undecided {
            stage: Stage::Incidence,
            cap: 24,
            decision: Decision::Equality { i: 0, j: 1 }
        }
    );
    assert!(find_ordinary_line(&s).is_ok());
}

#[test]
fn robust_selection_with_nearly_tied_minima() {
    // Two almost-equal smallest distances: coarse intervals cannot separate
    // them, but the bound is met by either.
    let s = PointSet::new(vec![
        Point::from_integers(0, 0),
        Point::from_integers(8, 0),
        Point::new(q(4, 1), q(1, 1)),
        Point::new(q(4, 1), q(-1000001, 1000000)),
    ])
    .unwrap();
    let table = build_triad_table(&s).unwrap();
    let sel = table.select_e_robust(32).unwrap();
    assert!(table.satisfies_bound(&sel.e_sq));
    let reals: Vec<_> = s.points().iter().map(Point::to_real).collect();
    // no coincidences, so every robust decision is an apartness and resolves
    let run = find_ordinary_line_robust(&reals, 32).unwrap();
    assert!(verify_certificate(&s, &run.certificate).is_accept());
}

// Random sets for the property tests: 3..=12 points, coordinates p/q with
// |p| <= 8 and 1 <= q <= 8.
fn coordinate() -> impl Strategy<Value = Rational> {
    (-8i64..=8, 1i64..=8).prop_map(|(p, d)| q(p, d))
}

fn point_set() -> impl Strategy<Value = PointSet> {
    prop::collection::vec((coordinate(), coordinate()), 3..=12).prop_map(|coords| {
        PointSet::new(coords.into_iter().map(|(x, y)| Point::new(x, y)).collect()).unwrap()
    })
}

fn noncollinear_set() -> impl Strategy<Value = PointSet> {
    point_set().prop_filter("noncollinear", |s| find_noncollinear_witness(s).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn certificate_matches_oracle(s in noncollinear_set()) {
        let cert = find_ordinary_line(&s).unwrap();
        prop_assert!(verify_certificate(&s, &cert).is_accept());
        let chosen = count_incidences(&s, cert.a_idx, cert.b_idx).unwrap();
        prop_assert_eq!(chosen.distinct_count(), 2);
        let ordinary = enumerate_ordinary_lines(&s);
        prop_assert!(ordinary.iter().any(|l| l.distinct_incident.iter().all(|p| chosen.distinct_incident.contains(p))));
    }

    #[test]
    fn selection_bound_and_step_three(s in noncollinear_set()) {
        let structure = IncidenceStructure::exact(&s);
        let table = TriadTable::build(&s, &structure).unwrap();
        let sel = table.select_e().unwrap();
        prop_assert!(&sel.e_sq * table.diam_sq() < table.d_sq() * &(table.diam_sq() + table.d_sq()));
        let (cert, coords) = classify_on_line(&s, &sel, &structure).unwrap();
        let mut positive: Vec<Point> = Vec::new();
        let mut nonpositive: Vec<Point> = Vec::new();
        for p in s.points() {
            if !incidence(p, &coords.line).is_on() {
                continue;
            }
            let c = crate::geometry::scaled_coordinate(p, &coords.line, &coords.foot, coords.orientation).unwrap();
            let bucket = if c.is_positive() { &mut positive } else { &mut nonpositive };
            if !bucket.contains(p) {
                bucket.push(p.clone());
            }
        }
        prop_assert!(positive.len() <= 1);
        prop_assert!(nonpositive.len() <= 1);
        prop_assert_eq!(&positive[0], &s.points()[cert.a_idx]);
    }

    #[test]
    fn mutated_dispositions_are_rejected(s in noncollinear_set(), pick in any::<prop::sample::Index>(), variant in 0usize..3) {
        let cert = find_ordinary_line(&s).unwrap();
        let mut bad = cert.clone();
        let i = pick.index(bad.dispositions.len());
        bad.dispositions[i] = match (&cert.dispositions[i], variant) {
            (Disposition::OffLine { sq_gap }, 0) => Disposition::OffLine { sq_gap: sq_gap + Rational::one() },
            (Disposition::OffLine { .. }, 1) => Disposition::EqualsA,
            (Disposition::OffLine { .. }, _) => Disposition::EqualsB,
            (Disposition::EqualsA, 0) => Disposition::EqualsB,
            (Disposition::EqualsB, 0) => Disposition::EqualsA,
            (_, _) => Disposition::OffLine { sq_gap: Rational::one() },
        };
        prop_assert!(!verify_certificate(&s, &bad).is_accept());
    }

    #[test]
    fn permutations_keep_certificates_valid(s in noncollinear_set(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut shuffled = s.points().to_vec();
        shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let t = PointSet::new(shuffled).unwrap();
        let cert = find_ordinary_line(&t).unwrap();
        prop_assert!(verify_certificate(&t, &cert).is_accept());
    }

    #[test]
    fn lemma_agrees_with_equality(s in noncollinear_set(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let w = find_noncollinear_witness(&s).unwrap();
        let (ai, bi) = (a.index(s.len()), b.index(s.len()));
        let decided = lemma_decide_equal(&s, &w, ai, bi).unwrap();
        let expected = if s.points()[ai] == s.points()[bi] { LemmaOutcome::Equal } else { LemmaOutcome::Distinct };
        prop_assert_eq!(decided.outcome, expected);
    }

    #[test]
    fn robust_and_exact_agree_on_integer_grids(coords in prop::collection::vec((-4i64..=4, -4i64..=4), 3..=7)) {
        let s = set(&coords);
        prop_assume!(find_noncollinear_witness(&s).is_ok());
        let reals: Vec<_> = s.points().iter().map(Point::to_real).collect();
        let run = find_ordinary_line_robust(&reals, 64).unwrap();
        prop_assert!(verify_certificate(&s, &run.certificate).is_accept());
    }
}

#[test]
fn sq_dist_of_certificate_endpoints_positive() {
    let s = square_plus_center();
    let cert = find_ordinary_line(&s).unwrap();
    assert!(sq_dist(&s.points()[cert.a_idx], &s.points()[cert.b_idx]).is_positive());
}
