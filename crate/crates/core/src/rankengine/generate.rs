use rand::Rng;

use super::rank_profile;
use crate::binform::{contraction_matrix, BinaryForm, DualForm};
use crate::exactlin::Scalar;
use crate::rng::{random_int, seeded, DEFAULT_HEIGHT};
use crate::Error;

const MAX_RETRIES: usize = 100;

/// Random form with border rank `b` and rank `d + 2 - b`, `2 ≤ b` and `2b ≤ d + 1`.
///
/// `F` is drawn from the forms annihilated by `Y^2 ∏ (X - α_i Y)`, a length-`b`
/// scheme with a double point, and kept only if its computed profile matches.
pub fn prescribed_profile_form_with<R: Rng>(rng: &mut R, d: usize, b: usize, h: i64) -> Result<BinaryForm, Error> {
    if b < 2 || 2 * b > d + 1 {
        return Err(Error::Precondition(format!("profile (b, d + 2 - b) needs 2 <= b and 2b <= d + 1, got d = {d}, b = {b}")));
    }
    for _ in 0..MAX_RETRIES {
        let mut roots = vec![(Scalar::from_integer(1.into()), Scalar::from_integer(0.into())); 2];
        while roots.len() < b {
            let a = random_int(rng, h);
            if roots[2..].iter().all(|(u, _)| *u != a) {
                roots.push((a, Scalar::from_integer(1.into())));
            }
        }
        let g0 = DualForm::from_roots(&roots);
        let kernel = contraction_matrix(&g0, d)?.kernel();
        let f = BinaryForm::new(kernel.random_point(rng, h).expect("kernel has dimension b"))?;
        let p = rank_profile(&f)?;
        if p.border_rank == b && p.rank == d + 2 - b {
            return Ok(f);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

pub fn prescribed_profile_form(d: usize, b: usize, seed: u64) -> Result<BinaryForm, Error> {
    prescribed_profile_form_with(&mut seeded(seed), d, b, DEFAULT_HEIGHT)
}

/// Form with independent uniform integer coefficients in `[-h, h]`.
pub fn generic_form<R: Rng>(rng: &mut R, d: usize, h: i64) -> BinaryForm {
    BinaryForm::random(rng, d, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_match_request() {
        for d in 4..9 {
            for b in 2..=(d + 1) / 2 {
                let f = prescribed_profile_form(d, b, (d * 10 + b) as u64).unwrap();
                let p = rank_profile(&f).unwrap();
                assert_eq!((p.border_rank, p.rank), (b, d + 2 - b));
            }
        }
        assert!(prescribed_profile_form(6, 4, 0).is_err());
    }
}
