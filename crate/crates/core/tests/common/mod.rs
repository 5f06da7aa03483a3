//! Independent oracles shared by the integration tests. None of these call the
//! library's catalecticant, apolar slice or squarefree routines.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use waringlab::binform::apolar_span;
use waringlab::exactlin::scalar::binomial;
use waringlab::exactlin::{integer_rank, Matrix};
use waringlab::rng::{random_int, seeded, sub_seed};
use waringlab::{BinaryForm, DualForm, LinearSubspace, Scalar};

type Poly = Vec<Scalar>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn rem(mut a: Poly, b: &Poly) -> Poly {
    let lead = b.last().unwrap().clone();
    while a.len() >= b.len() && !a.is_empty() {
        let f = a.last().unwrap() / &lead;
        let shift = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[shift + i] -= &f * c;
        }
        a = trim(a);
    }
    a
}

fn poly_gcd_degree(a: Poly, b: Poly) -> usize {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = rem(a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// Squarefree test of a nonzero binary form `Σ w_j X^{t-j} Y^j` by Euclid on the
/// affine part `z ↦ g(z, 1)` plus the multiplicity of the root at `(1:0)`.
pub fn squarefree_oracle(w: &[Scalar]) -> bool {
    let at_infinity = w.iter().position(|c| !c.is_zero()).expect("nonzero form");
    if at_infinity >= 2 {
        return false;
    }
    // ascending in z: coefficient of z^{t-j} is w_j
    let p: Poly = trim(w.iter().rev().cloned().collect());
    if p.len() <= 2 {
        return true;
    }
    let dp: Poly = p.iter().enumerate().skip(1).map(|(k, c)| c * Scalar::from_integer(k.into())).collect();
    poly_gcd_degree(p, dp) == 0
}

/// `(border rank, rank)` of a nonzero binary form from Hankel matrices of the
/// scaled coefficients `a_k = c_k / C(d, k)` and a pencil discriminant scan.
pub fn rank_oracle(f: &BinaryForm) -> (usize, usize) {
    let d = f.degree();
    let a: Vec<Scalar> = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c / Scalar::from_integer(binomial(d as u64, k as u64)))
        .collect();
    let hankel = |t: usize| -> Matrix {
        Matrix::from_rows(t + 1, (0..=d - t).map(|i| (0..=t).map(|j| a[i + j].clone()).collect()).collect())
    };
    // the middle Hankel matrix has rank equal to the border rank; Bareiss on cleared rows
    let mid = hankel(d / 2);
    let rows: Vec<Vec<BigInt>> = mid
        .row_vecs()
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
            r.iter().map(|x| (x * Scalar::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let b = integer_rank(rows, d / 2 + 1);
    let kernel = hankel(b).kernel_vectors();
    assert!(!kernel.is_empty() && kernel.len() <= 2, "slice at the border rank is a point or a pencil");
    let has_squarefree = if kernel.len() == 1 {
        squarefree_oracle(&kernel[0])
    } else {
        // the discriminant of g0 + λ g1 has degree at most 2b - 2 in λ
        squarefree_oracle(&kernel[1])
            || (0..=(2 * b - 2) as i64).any(|l| {
                let g: Vec<Scalar> =
                    kernel[0].iter().zip(&kernel[1]).map(|(x, y)| x + Scalar::from_integer(l.into()) * y).collect();
                !g.iter().all(Zero::is_zero) && squarefree_oracle(&g)
            })
    };
    (b, if has_squarefree { b } else { d + 2 - b })
}

/// Random forms mixing generic draws with structured families (sums of few
/// powers, sparse forms, monomials and binomials) so non-generic branches are hit.
pub fn oracle_population(n: usize, seed: u64) -> Vec<BinaryForm> {
    (0..n)
        .map(|i| {
            let mut rng = seeded(sub_seed(seed, &[i as u64]));
            let d = rng.gen_range(2..=9);
            let f = match i % 5 {
                0 => BinaryForm::random(&mut rng, d, 6),
                1 => {
                    let k = rng.gen_range(1..=d / 2 + 1);
                    let mut acc = BinaryForm::zero(d);
                    for _ in 0..k {
                        let (p, q) = (random_int(&mut rng, 4), random_int(&mut rng, 4));
                        acc = acc.add(&BinaryForm::power_of_linear(&p, &q, d).scale(&random_int(&mut rng, 3)));
                    }
                    acc
                }
                2 => BinaryForm::new((0..=d).map(|_| Scalar::from_integer(rng.gen_range(-1..=1).into())).collect()).unwrap(),
                3 => BinaryForm::monomial(d, rng.gen_range(0..=d)),
                _ => {
                    let j = rng.gen_range(1..=d);
                    BinaryForm::monomial(d, 0).add(&BinaryForm::monomial(d, j).scale(&random_int(&mut rng, 5)))
                }
            };
            if f.is_zero() {
                BinaryForm::monomial(d, 0)
            } else {
                f
            }
        })
        .collect()
}

/// Compares the kernel-trick span of planted rational roots with the span of the
/// corresponding powers `(a x + b y)^d`, for `n` random cases.
pub fn kernel_trick_agreement(n: usize, seed: u64) -> usize {
    let mut agree = 0;
    for i in 0..n {
        let mut rng = seeded(sub_seed(seed, &[0x6b, i as u64]));
        let d = rng.gen_range(3..=10);
        let t = rng.gen_range(1..=d + 1);
        let mut roots: Vec<(Scalar, Scalar)> = Vec::new();
        while roots.len() < t {
            let (a, b) = (random_int(&mut rng, 12), random_int(&mut rng, 12));
            if a.is_zero() && b.is_zero() {
                continue;
            }
            // distinct projective points: compare a_1 b_2 - a_2 b_1
            if roots.iter().all(|(c, e)| &a * e != &b * c) {
                roots.push((a, b));
            }
        }
        let g = DualForm::from_roots(&roots);
        let via_kernel = apolar_span(&g, d).unwrap();
        let powers: Vec<Vec<Scalar>> =
            roots.iter().map(|(a, b)| BinaryForm::power_of_linear(a, b, d).into_coeffs()).collect();
        let direct = LinearSubspace::span(d, &powers).unwrap();
        agree += (via_kernel == direct) as usize;
    }
    agree
}
