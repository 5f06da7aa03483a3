//! Ranks, cactus schemes, sampled decomposition families and non-uniqueness sets for
//! points of `P^d` relative to the rational normal curve of degree `d`.
//!
//! A point `q` is a binary form `F`. Its border rank `b` is the first degree in which
//! the apolar ideal of `F` is nonzero; the rank is `b` when that degree contains a
//! squarefree form and `d + 2 - b` otherwise. Decompositions of size `t` are sampled
//! as squarefree elements of the degree-`t` apolar slice, and the non-uniqueness set
//! is approximated from above by intersecting their spans.

mod checks;
mod generate;
mod profile;
mod sample;
mod wq;

pub use checks::{
    cactus_span_intersection, family_dimension, lemma_q2_check, pairwise_span_check, wprime_check,
    PairwiseReport,
};
pub use generate::{generic_form, prescribed_profile_form, prescribed_profile_form_with};
pub use profile::{rank_profile, RankProfile};
pub use sample::{decomposition_from_form, draw_decomposition, sample_decomposition, DecompositionSample};
pub use wq::{default_max_samples, non_uniqueness_set, WqResult};
