use proptest::prelude::*;

use waringlab::binform::{apolar_span, contract, squarefree};
use waringlab::curves::Projection;
use waringlab::rankengine::{non_uniqueness_set, rank_profile};
use waringlab::veronese::PointSet;
use waringlab::{BinaryForm, DualForm, LinearSubspace, Scalar};

fn s(x: i64) -> Scalar {
    Scalar::from_integer(x.into())
}

fn form(max_deg: usize) -> impl Strategy<Value = BinaryForm> {
    (1..=max_deg)
        .prop_flat_map(|d| prop::collection::vec(-6i64..=6, d + 1))
        .prop_filter("nonzero", |c| c.iter().any(|&x| x != 0))
        .prop_map(|c| BinaryForm::from_i64(&c))
}

/// Distinct points of `P^1` as `(1:t)` and optionally `(0:1)`.
fn roots(max: usize) -> impl Strategy<Value = Vec<(Scalar, Scalar)>> {
    (prop::collection::btree_set(-20i64..=20, 1..=max), any::<bool>()).prop_map(|(ts, inf)| {
        let mut out: Vec<(Scalar, Scalar)> = ts.into_iter().map(|t| (s(1), s(t))).collect();
        if inf {
            out.push((s(0), s(1)));
        }
        out
    })
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, n), k).prop_map(|vs| vs.into_iter().map(|v| v.into_iter().map(s).collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_profile_is_consistent(f in form(8)) {
        let p = rank_profile(&f).unwrap();
        let d = f.degree();
        prop_assert_eq!(p.cactus_rank, p.border_rank);
        prop_assert!(p.border_rank <= d / 2 + 1);
        prop_assert!(p.rank == p.border_rank || p.rank == d + 2 - p.border_rank);
        prop_assert!(p.rank >= p.border_rank);
        prop_assert!(contract(&p.min_generator, &f).unwrap().is_zero());
    }

    #[test]
    fn sums_of_few_powers_have_small_rank(rs in roots(4), d in 7usize..=9, cs in prop::collection::vec(1i64..=5, 5)) {
        let mut f = BinaryForm::zero(d);
        for ((a, b), c) in rs.iter().zip(&cs) {
            f = f.add(&BinaryForm::power_of_linear(a, b, d).scale(&s(*c)));
        }
        let p = rank_profile(&f).unwrap();
        prop_assert!(p.rank <= rs.len().min(cs.len()));
    }

    #[test]
    fn span_of_distinct_roots_has_full_dimension(rs in roots(6), extra in 0usize..4) {
        let g = DualForm::from_roots(&rs);
        let d = (rs.len() - 1 + extra).max(1);
        let span = apolar_span(&g, d).unwrap();
        prop_assert_eq!(span.rank(), rs.len().min(d + 1));
        prop_assert!(squarefree(&g).unwrap());
        let doubled = g.mul(&DualForm::vanishing_at(&rs[0].0, &rs[0].1));
        prop_assert!(!squarefree(&doubled).unwrap());
    }

    #[test]
    fn exact_division_round_trips(a in form(5), b in form(5)) {
        let p = a.mul(&b);
        prop_assert_eq!(p.div_exact(&a), Some(b.clone()));
        prop_assert_eq!(p.div_exact(&b), Some(a));
    }

    #[test]
    fn form_text_round_trips(f in form(9)) {
        prop_assert_eq!(BinaryForm::parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn subspaces_are_canonical(vs in vectors(5, 3), scale in 1i64..=7) {
        let a = LinearSubspace::span(4, &vs).unwrap();
        let mut shuffled: Vec<Vec<Scalar>> = vs.iter().rev().map(|v| v.iter().map(|x| x * s(-scale)).collect()).collect();
        shuffled.push(vs.iter().fold(vec![s(0); 5], |acc, v| acc.iter().zip(v).map(|(x, y)| x + y).collect()));
        prop_assert_eq!(LinearSubspace::span(4, &shuffled).unwrap(), a);
    }

    #[test]
    fn projection_drops_dimension_iff_center_inside(vs in vectors(5, 2), o in vectors(5, 1)) {
        let o = &o[0];
        prop_assume!(o.iter().any(|x| *x != s(0)));
        let span = LinearSubspace::span(4, &vs).unwrap();
        let img = Projection::new(o).unwrap().subspace(&span).unwrap();
        let inside = span.contains(o).unwrap();
        prop_assert_eq!(img.rank() + inside as usize, span.rank());
    }

    #[test]
    fn point_set_text_round_trips(vs in vectors(3, 6)) {
        let pts: Vec<Vec<Scalar>> = vs.into_iter().filter(|v| v.iter().any(|x| *x != s(0))).collect();
        if let Ok(set) = PointSet::new(2, pts) {
            let back = PointSet::parse(&set.to_text()).unwrap();
            prop_assert_eq!(back.points(), set.points());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn nonuniqueness_set_contains_the_form(f in form(7), seed in any::<u64>()) {
        let w = non_uniqueness_set(&f, None, Some(8), seed).unwrap();
        prop_assert!(w.subspace.contains(f.coeffs()).unwrap());
        if w.certified_point {
            prop_assert!(w.subspace.is_point());
        }
    }
}
