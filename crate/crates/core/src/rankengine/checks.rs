use super::{draw_decomposition, rank_profile, DecompositionSample, WqResult};
use crate::binform::{apolar_slice, apolar_span, contract, is_irredundant, BinaryForm};
use crate::exactlin::LinearSubspace;
use crate::rng::{seeded, DEFAULT_HEIGHT};
use crate::Error;

const MAX_DRAWS: usize = 100;

fn first_irredundant_sample(f: &BinaryForm, t: usize, seed: u64) -> Result<DecompositionSample, Error> {
    let slice = apolar_slice(f, t)?;
    let mut rng = seeded(seed);
    for _ in 0..MAX_DRAWS {
        if let Some(s) = draw_decomposition(f, &slice, &mut rng, DEFAULT_HEIGHT)? {
            if s.irredundant {
                return Ok(s);
            }
        }
    }
    Err(Error::RetriesExhausted(MAX_DRAWS))
}

/// `⟨Z⟩ ∩ ⟨S⟩` for the cactus scheme `Z` cut out by the minimal generator and one
/// sampled rank decomposition `S`. Requires rank greater than border rank.
pub fn cactus_span_intersection(f: &BinaryForm, seed: u64) -> Result<LinearSubspace, Error> {
    let p = rank_profile(f)?;
    if p.rank == p.border_rank {
        return Err(Error::Precondition(format!(
            "rank {} equals border rank; no cactus scheme separate from the decompositions",
            p.rank
        )));
    }
    let z = apolar_span(&p.min_generator, f.degree())?;
    let s = first_irredundant_sample(f, p.rank, seed)?;
    z.intersect(&s.span)
}

/// Projective dimension of the family of rank decompositions, read off as the
/// projective dimension of the apolar slice of degree `d + 2 - b`.
pub fn family_dimension(f: &BinaryForm) -> Result<usize, Error> {
    let p = rank_profile(f)?;
    let d = f.degree();
    if p.rank != d + 2 - p.border_rank || p.rank <= p.border_rank {
        return Err(Error::Precondition(format!(
            "family dimension needs rank d + 2 - b > b, got b = {}, rank = {}",
            p.border_rank, p.rank
        )));
    }
    Ok(apolar_slice(f, p.rank)?.dim() - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairwiseReport {
    pub samples: usize,
    pub pairs: usize,
    /// Every pair of distinct samples meets exactly in `⟨F⟩`.
    pub all_meet_in_point: bool,
}

/// Draws `n_samples` distinct rank decompositions and intersects their spans pairwise.
pub fn pairwise_span_check(f: &BinaryForm, n_samples: usize, seed: u64) -> Result<PairwiseReport, Error> {
    let p = rank_profile(f)?;
    let slice = apolar_slice(f, p.rank)?;
    let point = LinearSubspace::point(f.coeffs())?;
    let mut rng = seeded(seed);
    let mut samples: Vec<DecompositionSample> = Vec::new();
    let mut draws = 0;
    while samples.len() < n_samples && draws < MAX_DRAWS * n_samples.max(1) {
        draws += 1;
        if let Some(s) = draw_decomposition(f, &slice, &mut rng, DEFAULT_HEIGHT)? {
            if s.irredundant && !samples.iter().any(|o| o.g == s.g) {
                samples.push(s);
            }
        }
    }
    let mut pairs = 0;
    let mut all = true;
    for i in 0..samples.len() {
        for j in i + 1..samples.len() {
            pairs += 1;
            all &= samples[i].span.intersect(&samples[j].span)? == point;
        }
    }
    Ok(PairwiseReport { samples: samples.len(), pairs, all_meet_in_point: all && pairs > 0 })
}

/// Samples a point `o` of a stabilized non-uniqueness set that is spanned
/// irredundantly by the first recorded decomposition, and checks that `o` has the
/// same rank as `F` and lies in every recorded span.
pub fn wprime_check(f: &BinaryForm, wq: &WqResult, seed: u64) -> Result<bool, Error> {
    if !wq.stabilized {
        return Err(Error::Precondition("non-uniqueness set has not stabilized".into()));
    }
    if wq.subspace.is_point() {
        return Ok(true);
    }
    let Some(first) = wq.samples.first() else {
        return Err(Error::Precondition("no recorded decompositions".into()));
    };
    let rank = rank_profile(f)?.rank;
    let mut rng = seeded(seed);
    for _ in 0..MAX_DRAWS {
        let o = BinaryForm::new(wq.subspace.random_point(&mut rng, DEFAULT_HEIGHT).expect("nonempty subspace"))?;
        if !contract(&first.g, &o)?.is_zero() || !is_irredundant(&first.g, &o)? {
            continue;
        }
        let in_all = wq.samples.iter().all(|s| s.span.contains(o.coeffs()).unwrap_or(false));
        return Ok(in_all && rank_profile(&o)?.rank == rank);
    }
    Ok(false)
}

/// Looks for an irredundant decomposition of size `d`. Returns whether one was found
/// within a bounded number of draws.
pub fn lemma_q2_check(f: &BinaryForm, seed: u64) -> Result<bool, Error> {
    let d = f.degree();
    match first_irredundant_sample(f, d, seed) {
        Ok(_) => Ok(true),
        Err(Error::RetriesExhausted(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rankengine::{non_uniqueness_set, prescribed_profile_form};

    #[test]
    fn cactus_meets_decomposition_in_the_point() {
        let f = BinaryForm::from_i64(&[0, 1, 0, 0, 0]);
        let point = LinearSubspace::point(f.coeffs()).unwrap();
        assert_eq!(cactus_span_intersection(&f, 5).unwrap(), point);
        for d in 5..10 {
            let f = BinaryForm::monomial(d, 1);
            assert_eq!(cactus_span_intersection(&f, d as u64).unwrap(), LinearSubspace::point(f.coeffs()).unwrap());
        }
        assert!(cactus_span_intersection(&BinaryForm::binomial_pure_powers(4), 0).is_err());
    }

    #[test]
    fn family_dimensions() {
        assert_eq!(family_dimension(&BinaryForm::from_i64(&[0, 1, 0, 0, 0])).unwrap(), 3);
        assert_eq!(family_dimension(&BinaryForm::monomial(6, 1)).unwrap(), 5);
        let f = prescribed_profile_form(6, 3, 2).unwrap();
        assert_eq!(family_dimension(&f).unwrap(), 3);
        assert!(family_dimension(&BinaryForm::binomial_pure_powers(5)).is_err());
    }

    #[test]
    fn pairwise_meet_for_generic_sextic() {
        let f = BinaryForm::from_i64(&[2, -7, 1, 8, -3, 5, 4]);
        assert_eq!(rank_profile(&f).unwrap().rank, 4);
        let r = pairwise_span_check(&f, 4, 9).unwrap();
        assert_eq!(r.samples, 4);
        assert!(r.all_meet_in_point);
    }

    #[test]
    fn wprime_on_point_and_on_a_line() {
        let f = BinaryForm::from_i64(&[0, 1, 0, 0, 0]);
        let w = non_uniqueness_set(&f, None, None, 1).unwrap();
        assert!(wprime_check(&f, &w, 0).unwrap());
        // binomial: single decomposition, W is the secant line through x^5, y^5
        let f = BinaryForm::binomial_pure_powers(5);
        let w = non_uniqueness_set(&f, None, None, 1).unwrap();
        assert_eq!(w.subspace.proj_dim(), 1);
        assert!(wprime_check(&f, &w, 4).unwrap());
    }

    #[test]
    fn size_d_decompositions() {
        assert!(lemma_q2_check(&BinaryForm::from_i64(&[1, 4, -2, 7, 3, -1, 5]), 0).unwrap());
        assert!(lemma_q2_check(&BinaryForm::binomial_pure_powers(6), 0).unwrap());
        // a point of the curve lies on no irredundant set of d > 1 curve points
        assert!(!lemma_q2_check(&BinaryForm::power_of_linear_i64(2, 1, 6), 0).unwrap());
    }
}
