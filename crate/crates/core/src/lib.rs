//! Exact computation of ranks, border ranks, decomposition families and
//! non-uniqueness sets for points of `P^d` with respect to the rational normal
//! curve, for Veronese embeddings of `P^n`, and for general rational curves.
//!
//! All arithmetic is over exact rationals. Point sets on the rational normal curve
//! are never materialized as roots: a set `S` of `t` points is carried by a
//! squarefree binary form `g` of degree `t` vanishing on it, and spans, membership
//! and irredundancy are computed through kernels of contraction maps and gcds.
//!
//! Runnable walkthroughs live in the crate's `examples/` directory, one per
//! capability (`cargo run --example rank_profile`, ...). The `waringlab` binary is a
//! thin command-line front end over [`suites`] and [`report`].

pub mod binform;
pub mod curves;
pub mod exactlin;
pub mod rankengine;
pub mod report;
pub mod rng;
pub mod suites;
pub mod veronese;

pub use binform::{BinaryForm, DualForm};
pub use exactlin::{LinearSubspace, Matrix, Scalar};

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected} coordinates, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("the zero vector is not a projective point")]
    ZeroVector,
    #[error("the zero form has no roots or degree")]
    ZeroForm,
    #[error("contraction of degree {dual} form into degree {form} form is undefined")]
    DegreeTooLarge { dual: usize, form: usize },
    #[error("form is not squarefree")]
    NotSquarefree,
    #[error("size {t} is below the rank {rank}; no decomposition of that size exists")]
    BelowRank { t: usize, rank: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("degenerate draw: {0}")]
    Degenerate(String),
    #[error("no generic draw found after {0} attempts")]
    RetriesExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
