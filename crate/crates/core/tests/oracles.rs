mod common;

use common::{kernel_trick_agreement, oracle_population, rank_oracle, squarefree_oracle};
use num_traits::Zero;
use waringlab::binform::{squarefree, squarefree_via_discriminant, squarefree_via_gcd};
use waringlab::exactlin::{integer_rank, Matrix};
use waringlab::rankengine::rank_profile;
use waringlab::rng::{random_vec, seeded};
use waringlab::veronese::{generic_points, h_values, VeroneseMap};
use waringlab::{DualForm, LinearSubspace, Scalar};

#[test]
fn kernel_trick_matches_direct_spans() {
    assert_eq!(kernel_trick_agreement(100, 1), 100);
}

#[test]
fn rank_profile_matches_hankel_oracle() {
    for f in oracle_population(500, 2) {
        let p = rank_profile(&f).unwrap();
        assert_eq!((p.border_rank, p.rank), rank_oracle(&f), "{f}");
    }
}

#[test]
fn squarefree_routes_agree_with_oracle() {
    let mut rng = seeded(3);
    for i in 0..300 {
        let t = 1 + i % 7;
        let g = if i % 3 == 0 {
            // force a repeated factor
            let h = DualForm::random(&mut rng, t, 4);
            h.mul(&DualForm::random(&mut rng, 1, 3)).mul(&DualForm::random(&mut rng, 1, 3))
        } else {
            DualForm::random(&mut rng, t, 3)
        };
        let expected = squarefree_oracle(g.coeffs());
        assert_eq!(squarefree(&g).unwrap(), expected, "{g}");
        assert_eq!(squarefree_via_gcd(&g).unwrap(), expected, "{g}");
        assert_eq!(squarefree_via_discriminant(&g).unwrap(), expected, "{g}");
    }
}

#[test]
fn rref_replay_restores_the_matrix() {
    let mut rng = seeded(4);
    for i in 0..50 {
        let (r, c) = (2 + i % 5, 2 + (i * 3) % 6);
        let rows: Vec<Vec<Scalar>> = (0..r).map(|_| random_vec(&mut rng, c, 3)).collect();
        let m = Matrix::from_rows(c, rows);
        let (reduced, ops) = m.rref_recorded();
        assert_eq!(reduced, m.rref());
        let mut back = reduced.clone();
        for op in ops.iter().rev() {
            op.undo(&mut back);
        }
        assert_eq!(back, m);
    }
}

#[test]
fn grassmann_formula() {
    let mut rng = seeded(5);
    for i in 0..60 {
        let n = 3 + i % 6;
        let (a, b) = (1 + i % (n + 1), 1 + (i * 7) % (n + 1));
        let u = LinearSubspace::span(n, &(0..a).map(|_| random_vec(&mut rng, n + 1, 2)).collect::<Vec<_>>()).unwrap();
        let v = LinearSubspace::span(n, &(0..b).map(|_| random_vec(&mut rng, n + 1, 2)).collect::<Vec<_>>()).unwrap();
        let meet = u.intersect(&v).unwrap();
        let join = u.join(&v).unwrap();
        assert_eq!(meet.rank() + join.rank(), u.rank() + v.rank());
        assert!(u.contains_subspace(&meet).unwrap() && v.contains_subspace(&meet).unwrap());
        assert!(join.contains_subspace(&u).unwrap() && join.contains_subspace(&v).unwrap());
    }
}

#[test]
fn h1_matches_rational_rank() {
    let mut rng = seeded(6);
    for i in 0..20 {
        let (n, d) = (2 + i % 2, 2 + i % 4);
        let s = generic_points(&mut rng, n, 3 + i, 6);
        let r = h_values(&s, d).unwrap();
        let map = VeroneseMap::new(n, d).unwrap();
        let rows: Vec<Vec<Scalar>> = s.points().iter().map(|p| map.embed(p).unwrap()).collect();
        let rank = Matrix::from_rows(map.monomials().len(), rows).rank();
        assert_eq!(r.h1, s.len() - rank);
        assert_eq!(r.h0, map.monomials().len() - rank);
    }
}

#[test]
fn bareiss_rank_matches_rational_rank() {
    let mut rng = seeded(7);
    for i in 0..40 {
        let (r, c) = (1 + i % 6, 1 + (i * 5) % 7);
        let rows: Vec<Vec<Scalar>> = (0..r)
            .map(|k| if k % 3 == 2 { vec![Scalar::zero(); c] } else { random_vec(&mut rng, c, 2) })
            .collect();
        let ints = rows.iter().map(|row| row.iter().map(|x| x.to_integer()).collect()).collect();
        assert_eq!(integer_rank(ints, c), Matrix::from_rows(c, rows).rank());
    }
}
