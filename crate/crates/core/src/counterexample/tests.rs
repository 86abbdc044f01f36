use alloc::vec::Vec;

use proptest::prelude::*;

use super::Strategy;
use super::*;
use crate::geometry::Point;
use crate::numeric::{OracleReal, Rational};
use crate::oracle::count_incidences;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn pair(text: &str) -> LabelPair {
    LabelPair::parse(text).unwrap()
}

#[test]
fn hidden_real_answers_symmetric_intervals_until_commit() {
    let hidden = HiddenSignReal::new();
    let alpha = hidden.real();
    let answer = alpha.query(3);
    assert_eq!(answer.lo(), &-Rational::dyadic(3));
    assert_eq!(answer.hi(), &Rational::dyadic(3));
    assert!(alpha.backing().is_none());
    assert_eq!(hidden.queries(), [3]);
}

#[test]
fn commit_must_be_finer_than_every_query() {
    let hidden = HiddenSignReal::new();
    hidden.real().query(7);
    assert_eq!(
        hidden.commit(Rational::dyadic(7)),
        Err(CounterexampleError::CommitTooCoarse { m: 7, max_queried: 7 })
    );
    assert_eq!(
        hidden.commit(q(3, 8)),
        Err(CounterexampleError::NotSignedPowerOfTwo)
    );
    hidden.commit(-Rational::dyadic(8)).unwrap();
    assert_eq!(
        hidden.commit(Rational::zero()),
        Err(CounterexampleError::AlreadyCommitted)
    );
    assert_eq!(hidden.real().backing(), Some(-Rational::dyadic(8)));
}

#[test]
fn zero_commit_is_always_allowed() {
    let hidden = HiddenSignReal::new();
    hidden.real().query(40);
    hidden.commit(Rational::zero()).unwrap();
    assert!(hidden.real().query(2).is_point());
}

proptest! {
    #[test]
    fn answers_stay_consistent_across_commit(
        before in proptest::collection::vec(0u32..20, 0..6),
        after in proptest::collection::vec(0u32..40, 1..6),
        extra in 1u32..6,
        choice in 0u8..3,
    ) {
        let hidden = HiddenSignReal::new();
        let alpha = hidden.real();
        let early: Vec<_> = before.iter().map(|&n| alpha.query(n)).collect();
        let m = before.iter().copied().max().map_or(0, |n| n + extra);
        let value = match choice {
            0 => Rational::zero(),
            1 => Rational::dyadic(m),
            _ => -Rational::dyadic(m),
        };
        hidden.commit(value.clone()).unwrap();
        for &n in &after {
            let late = alpha.query(n);
            prop_assert!(late.contains(&value));
            for e in &early {
                prop_assert!(late.intersects(e));
            }
        }
    }

    #[test]
    fn gadget_matches_formulas(num in -64i64..=64) {
        let alpha = q(num, 128);
        let built = build_gallai_gadget(&OracleReal::exact(alpha.clone())).unwrap();
        let from_reals = built.exact().unwrap();
        // formulas, written out independently
        let a = alpha.abs();
        let plus = if alpha.is_positive() { alpha.clone() } else { Rational::zero() };
        let expected = [
            Point::from_integers(-1, 0),
            Point::from_integers(1, 0),
            Point::from_integers(0, 1),
            Point::new(Rational::from_integer(-1) + &a, plus.clone()),
            Point::new(Rational::one() - &a, plus),
        ];
        prop_assert_eq!(from_reals.points(), &expected[..]);
        let direct = gadget_points(&alpha).unwrap();
        prop_assert_eq!(direct.points(), &expected[..]);
    }
}

#[test]
fn gadget_at_zero_collapses() {
    let s = gadget_points(&Rational::zero()).unwrap();
    assert_eq!(s.points()[3], s.points()[0]);
    assert_eq!(s.points()[4], s.points()[1]);
}

#[test]
fn gadget_positive_alpha_puts_s_on_rp() {
    let s = gadget_points(&q(1, 4)).unwrap();
    assert_eq!(s.points()[3], Point::new(q(-3, 4), q(1, 4)));
    assert_eq!(count_incidences(&s, 2, 0).unwrap().distinct_count(), 3);
}

#[test]
fn gadget_negative_alpha_puts_s_and_t_on_pq() {
    let s = gadget_points(&q(-1, 4)).unwrap();
    assert_eq!(s.points()[3], Point::new(q(-3, 4), Rational::zero()));
    assert_eq!(s.points()[4], Point::new(q(3, 4), Rational::zero()));
    assert_eq!(count_incidences(&s, 0, 1).unwrap().distinct_count(), 4);
}

#[test]
fn gadget_rejects_large_alpha() {
    let err = build_gallai_gadget(&OracleReal::exact(q(3, 4))).unwrap_err();
    assert_eq!(err, CounterexampleError::AlphaOutOfRange);
    assert!(build_gallai_gadget(&OracleReal::exact(q(-1, 2))).is_ok());
}

#[test]
fn label_pairs() {
    assert_eq!(LabelPair::all().len(), 10);
    assert_eq!(pair("qp"), pair("PQ"));
    assert_eq!(pair("TS").to_string(), "ST");
    assert!(LabelPair::parse("PP").is_err());
    assert!(LabelPair::parse("PQR").is_err());
    assert!(LabelPair::parse("PX").is_err());
    let with_r = LabelPair::all().into_iter().filter(|p| p.contains_r()).count();
    assert_eq!(with_r, 4);
}

#[test]
fn constant_pq_to_depth_five() {
    let mut strategy = ConstantStrategy {
        pair: pair("PQ"),
        depth: Some(5),
    };
    let refutation = adversary_run(&mut strategy).unwrap();
    assert_eq!(refutation.m, 6);
    assert_eq!(refutation.alpha, -Rational::dyadic(6));
    assert_eq!(refutation.distinct_count(), 4);
    assert_eq!(refutation.transcript.queries, [0, 1, 2, 3, 4, 5]);
}

#[test]
fn constant_rp_gets_three_points() {
    let mut strategy = ConstantStrategy {
        pair: pair("RP"),
        depth: None,
    };
    let refutation = adversary_run(&mut strategy).unwrap();
    assert_eq!(refutation.m, 1);
    assert!(refutation.alpha.is_positive());
    let points = refutation.points.points();
    assert_eq!(
        refutation.report.distinct_incident,
        [points[0].clone(), points[2].clone(), points[3].clone()]
    );
}

#[test]
fn constant_st_lies_on_pq() {
    let mut strategy = ConstantStrategy {
        pair: pair("ST"),
        depth: Some(2),
    };
    let refutation = adversary_run(&mut strategy).unwrap();
    assert!(refutation.alpha.is_negative());
    assert_eq!(refutation.distinct_count(), 4);
}

#[test]
fn every_constant_answer_is_refuted() {
    for answer in LabelPair::all() {
        let mut strategy = ConstantStrategy {
            pair: answer,
            depth: Some(3),
        };
        let refutation = adversary_run(&mut strategy).unwrap();
        let expected = if answer.contains_r() { 3 } else { 4 };
        assert_eq!(refutation.distinct_count(), expected, "{answer}");
        assert_eq!(refutation.transcript.answer, answer);
    }
}

#[test]
fn seeded_strategies_are_refuted_and_reproducible() {
    for seed in 0..20 {
        let first = adversary_run(&mut RandomStrategy::new(seed)).unwrap();
        let second = adversary_run(&mut RandomStrategy::new(seed)).unwrap();
        assert_eq!(first.transcript, second.transcript);
        assert!(first.distinct_count() >= 3);
        let max = first.transcript.queries.iter().copied().max();
        assert!(max.is_none_or(|n| n < first.m));
    }
}

#[test]
fn probing_strategies_are_refuted() {
    let strategies: [&mut dyn Strategy; 2] =
        [&mut DichotomyStrategy { k: 6 }, &mut FinderStrategy { cap: 16 }];
    for strategy in strategies {
        let refutation = adversary_run(strategy).unwrap();
        assert!(refutation.distinct_count() >= 3);
        assert!(!refutation.transcript.queries.is_empty());
    }
}

#[test]
fn strategy_names() {
    assert!(strategy_by_name("random", 3).is_ok());
    assert!(strategy_by_name("rs", 0).is_ok());
    assert!(matches!(
        strategy_by_name("nope", 0),
        Err(CounterexampleError::UnknownStrategy(_))
    ));
}

// Independent check of Goldbach up to 2 * max_n by trial division.
fn is_prime(n: u64) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[test]
fn goldbach_small_ranges() {
    for n in 2..=60u64 {
        assert!((2..=n).any(|p| is_prime(p) && is_prime(2 * n - p)), "{n}");
    }
    assert!(goldbach_exceptions(2000).is_empty());

    let ten = demo_goldbach_point(10).unwrap();
    assert_eq!(ten.lo(), &Rational::zero());
    assert_eq!(ten.hi(), &q(1, 10));
    let two = demo_goldbach_point(2).unwrap();
    assert_eq!(two.lo(), &Rational::zero());
    assert_eq!(two.hi(), &q(1, 2));
    assert!(matches!(
        demo_goldbach_point(1),
        Err(CounterexampleError::GoldbachTooSmall { n: 1 })
    ));
}

#[test]
fn goldbach_tail_bound() {
    // sum_{n > N} 1/n^2 < 1/N, checked on a long finite stretch of the tail
    for max_n in [2u64, 3, 10, 50] {
        let mut tail = Rational::zero();
        for n in max_n + 1..=max_n + 400 {
            tail = tail + Rational::from_integer((n * n) as i64).recip().unwrap();
        }
        assert!(tail < Rational::from_integer(max_n as i64).recip().unwrap());
        let interval = demo_goldbach_point(max_n).unwrap();
        assert!(!interval.lo().is_negative());
    }
}

fn honest_selector(alpha: &Rational) -> usize {
    if alpha.is_positive() {
        1
    } else {
        0
    }
}

#[test]
fn min_not_attained_with_honest_selectors() {
    let one = OracleReal::from_integer(1);
    let v = demo_min_not_attained(&one, |_, _| honest_selector(&Rational::one())).unwrap();
    assert_eq!(
        v,
        Verified {
            conclusion: SignConclusion::NonNegative,
            verified: true
        }
    );

    let minus_one = OracleReal::from_integer(-1);
    let v = demo_min_not_attained(&minus_one, |_, _| 0).unwrap();
    assert_eq!(v.conclusion, SignConclusion::NonPositive);

    let zero = OracleReal::from_integer(0);
    for index in 0..2 {
        assert!(demo_min_not_attained(&zero, |_, _| index).unwrap().verified);
    }
}

#[test]
fn lying_selector_is_caught() {
    let alpha = OracleReal::exact(Rational::dyadic(40));
    let err = demo_min_not_attained(&alpha, |_, _| 0).unwrap_err();
    assert!(matches!(
        err,
        CounterexampleError::SelectorLied {
            conclusion: SignConclusion::NonPositive,
            ..
        }
    ));
    assert!(matches!(
        demo_min_not_attained(&alpha, |_, _| 2),
        Err(CounterexampleError::BadSelectorIndex(2))
    ));
}

#[test]
fn unbacked_selector_conclusion_is_unverified() {
    let hidden = HiddenSignReal::new();
    let v = demo_min_not_attained(&hidden.real(), |_, _| 1).unwrap();
    assert!(!v.verified);
}

#[test]
fn subset_min_examples() {
    let zero = OracleReal::from_integer(0);
    let v = demo_subset_min(&zero, |_| OracleReal::from_integer(1)).unwrap();
    assert_eq!(
        v,
        Verified {
            conclusion: ZeroConclusion::Zero,
            verified: true
        }
    );

    let quarter = OracleReal::exact(q(1, 4));
    let v = demo_subset_min(&quarter, |a| a.clone()).unwrap();
    assert_eq!(v.conclusion, ZeroConclusion::Positive);

    let tiny = OracleReal::exact(Rational::dyadic(50));
    let err = demo_subset_min(&tiny, |_| OracleReal::from_integer(1)).unwrap_err();
    assert!(matches!(
        err,
        CounterexampleError::ClaimLied {
            conclusion: ZeroConclusion::Zero,
            ..
        }
    ));

    let err = demo_subset_min(&OracleReal::exact(q(3, 4)), |a| a.clone()).unwrap_err();
    assert_eq!(err, CounterexampleError::AlphaOutOfRange);
}
