use rand::Rng;

use super::rank_profile;
use crate::binform::{apolar_slice, apolar_span, contract, is_irredundant, squarefree, ApolarSlice, BinaryForm, DualForm};
use crate::exactlin::LinearSubspace;
use crate::rng::{seeded, DEFAULT_HEIGHT};
use crate::Error;

/// A set of `t` points of the curve spanning `F`, carried by the squarefree apolar
/// form `g` vanishing on it.
#[derive(Clone, Debug)]
pub struct DecompositionSample {
    pub t: usize,
    pub g: DualForm,
    pub span: LinearSubspace,
    pub irredundant: bool,
}

/// Builds the sample carried by `g`; `g` must be squarefree and apolar to `F`.
pub fn decomposition_from_form(f: &BinaryForm, g: &DualForm) -> Result<DecompositionSample, Error> {
    let (t, d) = (g.degree(), f.degree());
    if t > d + 1 {
        return Err(Error::Precondition(format!("sample size {t} exceeds d + 1 = {}", d + 1)));
    }
    if !squarefree(g)? {
        return Err(Error::NotSquarefree);
    }
    if !contract(g, f)?.is_zero() {
        return Err(Error::Precondition(format!("{g} is not apolar to {f}")));
    }
    Ok(DecompositionSample {
        t,
        g: g.normalized(),
        span: apolar_span(g, d)?,
        irredundant: is_irredundant(g, f)?,
    })
}

/// One draw from a slice: `None` when the random element is not squarefree.
pub fn draw_decomposition<R: Rng>(
    f: &BinaryForm,
    slice: &ApolarSlice,
    rng: &mut R,
    h: i64,
) -> Result<Option<DecompositionSample>, Error> {
    let Some(g) = slice.random_element(rng, h) else {
        return Ok(None);
    };
    if !squarefree(&g)? {
        return Ok(None);
    }
    decomposition_from_form(f, &g).map(Some)
}

/// Draws a pseudo-random element of the degree-`t` apolar slice of `F` and returns
/// the decomposition it carries, or `None` if the draw is not squarefree.
pub fn sample_decomposition(f: &BinaryForm, t: usize, seed: u64) -> Result<Option<DecompositionSample>, Error> {
    let d = f.degree();
    let profile = rank_profile(f)?;
    if t < profile.rank {
        return Err(Error::BelowRank { t, rank: profile.rank });
    }
    if t > d {
        return Err(Error::Precondition(format!("sample size {t} exceeds d = {d}")));
    }
    let slice = apolar_slice(f, t)?;
    draw_decomposition(f, &slice, &mut seeded(seed), DEFAULT_HEIGHT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_has_one_sample() {
        let f = BinaryForm::binomial_pure_powers(3);
        let s = sample_decomposition(&f, 2, 1).unwrap().unwrap();
        assert!(s.g.proportional(&DualForm::monomial(2, 1)));
        let expected = LinearSubspace::span(3, &[BinaryForm::monomial(3, 0).into_coeffs(), BinaryForm::monomial(3, 3).into_coeffs()]).unwrap();
        assert_eq!(s.span, expected);
        assert!(s.irredundant);
    }

    #[test]
    fn x3y_at_size_four() {
        let f = BinaryForm::from_i64(&[0, 1, 0, 0, 0]);
        let s = (0..20).find_map(|seed| sample_decomposition(&f, 4, seed).unwrap()).unwrap();
        assert_eq!(s.span.proj_dim(), 3);
        assert!(s.span.contains(f.coeffs()).unwrap());
        assert!(s.irredundant);
    }

    #[test]
    fn below_rank_is_an_error() {
        let f = BinaryForm::from_i64(&[0, 1, 0, 0, 0]);
        assert!(matches!(sample_decomposition(&f, 3, 0), Err(Error::BelowRank { t: 3, rank: 4 })));
    }

    #[test]
    fn binomial_samples_in_the_gap_are_redundant() {
        let f = BinaryForm::binomial_pure_powers(6);
        for seed in 0..10 {
            if let Some(s) = sample_decomposition(&f, 4, seed).unwrap() {
                assert!(!s.irredundant);
            }
        }
    }
}
