use super::{draw_decomposition, rank_profile, DecompositionSample};
use crate::binform::{apolar_slice, BinaryForm};
use crate::exactlin::LinearSubspace;
use crate::rng::{seeded, DEFAULT_HEIGHT};
use crate::Error;

/// Upper approximation of the non-uniqueness set `W_q` (or `W_{q,t}`): the
/// intersection of the spans of the sampled irredundant decompositions.
#[derive(Clone, Debug)]
pub struct WqResult {
    pub t: usize,
    pub subspace: LinearSubspace,
    /// Distinct irredundant decompositions intersected.
    pub samples_used: usize,
    /// Random slice elements drawn, including rejected ones.
    pub draws: usize,
    /// The subspace did not shrink over the last three accepted samples.
    pub stabilized: bool,
    /// The subspace is exactly `⟨F⟩`, which proves `W = {q}`.
    pub certified_point: bool,
    /// No irredundant decomposition was found; `subspace` is then all of `P^d`.
    pub family_exhausted: bool,
    pub samples: Vec<DecompositionSample>,
}

/// `⌈d / (b - 1)⌉ + 10`, or `d + 10` on the curve.
pub fn default_max_samples(d: usize, border_rank: usize) -> usize {
    if border_rank <= 1 {
        d + 10
    } else {
        d.div_ceil(border_rank - 1) + 10
    }
}

const STABLE_STREAK: usize = 3;

/// Intersects spans of pseudo-random irredundant decompositions of size `t`
/// (default: the rank) until the result is `⟨F⟩`, stops shrinking for three
/// consecutive accepted samples, or `max_samples` draws are spent.
pub fn non_uniqueness_set(
    f: &BinaryForm,
    t: Option<usize>,
    max_samples: Option<usize>,
    seed: u64,
) -> Result<WqResult, Error> {
    let d = f.degree();
    let profile = rank_profile(f)?;
    let t = t.unwrap_or(profile.rank);
    if t < profile.rank {
        return Err(Error::BelowRank { t, rank: profile.rank });
    }
    if t > d + 1 {
        return Err(Error::Precondition(format!("sample size {t} exceeds d + 1 = {}", d + 1)));
    }
    let point = LinearSubspace::point(f.coeffs())?;
    if profile.rank == 1 && t == 1 {
        return Ok(WqResult {
            t,
            subspace: point,
            samples_used: 0,
            draws: 0,
            stabilized: true,
            certified_point: true,
            family_exhausted: false,
            samples: Vec::new(),
        });
    }
    let max_samples = max_samples.unwrap_or_else(|| default_max_samples(d, profile.border_rank));
    let slice = apolar_slice(f, t)?;
    let mut rng = seeded(seed);
    let mut current: Option<LinearSubspace> = None;
    let mut samples: Vec<DecompositionSample> = Vec::new();
    let mut streak = 0;
    let mut draws = 0;
    let mut stabilized = false;
    while draws < max_samples {
        draws += 1;
        let Some(sample) = draw_decomposition(f, &slice, &mut rng, DEFAULT_HEIGHT)? else {
            continue;
        };
        if !sample.irredundant {
            continue;
        }
        let next = match &current {
            None => sample.span.clone(),
            Some(w) => w.intersect(&sample.span)?,
        };
        if current.as_ref() == Some(&next) {
            streak += 1;
        } else {
            streak = 0;
        }
        if !samples.iter().any(|s| s.g == sample.g) {
            samples.push(sample);
        }
        let done = next == point;
        current = Some(next);
        if done {
            break;
        }
        if streak >= STABLE_STREAK {
            stabilized = true;
            break;
        }
    }
    let family_exhausted = current.is_none();
    let subspace = current.unwrap_or_else(|| LinearSubspace::whole(d));
    let certified_point = subspace == point;
    Ok(WqResult {
        t,
        samples_used: samples.len(),
        draws,
        stabilized: stabilized || certified_point,
        certified_point,
        family_exhausted,
        subspace,
        samples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::int;

    #[test]
    fn x3y_is_certified() {
        let f = BinaryForm::from_i64(&[0, 1, 0, 0, 0]);
        let w = non_uniqueness_set(&f, Some(4), None, 3).unwrap();
        assert!(w.certified_point);
        assert!(w.samples_used >= 2);
    }

    #[test]
    fn generic_quartic_needs_two_samples() {
        let f = BinaryForm::from_i64(&[3, -1, 4, 1, -5]);
        let w = non_uniqueness_set(&f, Some(3), None, 11).unwrap();
        assert!(w.certified_point);
        assert!(w.samples_used >= 2);
    }

    #[test]
    fn binomial_family_has_one_member() {
        let f = BinaryForm::binomial_pure_powers(5);
        let w = non_uniqueness_set(&f, Some(2), None, 0).unwrap();
        assert!(!w.certified_point);
        assert!(w.stabilized);
        assert_eq!(w.samples_used, 1);
        let mut x = vec![int(0); 6];
        x[0] = int(1);
        let mut y = vec![int(0); 6];
        y[5] = int(1);
        assert_eq!(w.subspace, LinearSubspace::span(5, &[x, y]).unwrap());
    }

    #[test]
    fn binomial_in_the_gap_exhausts() {
        let f = BinaryForm::binomial_pure_powers(6);
        let w = non_uniqueness_set(&f, Some(4), Some(15), 0).unwrap();
        assert!(w.family_exhausted);
        assert_eq!(w.subspace, LinearSubspace::whole(6));
    }

    #[test]
    fn curve_point_short_circuits() {
        let f = BinaryForm::power_of_linear_i64(1, 4, 5);
        let w = non_uniqueness_set(&f, None, None, 0).unwrap();
        assert!(w.certified_point);
        assert_eq!(w.samples_used, 0);
    }
}
