use crate::binform::{apolar_slice, find_squarefree_element, ApolarSlice, BinaryForm, DualForm};
use crate::Error;

/// Border rank, cactus rank, rank and minimal apolar generator of a binary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub d: usize,
    pub border_rank: usize,
    pub cactus_rank: usize,
    pub rank: usize,
    /// A generator of the first nonzero apolar slice; the unique one up to scalar
    /// when `z_unique`. When the rank equals the border rank it is squarefree.
    pub min_generator: DualForm,
    pub z_unique: bool,
}

impl RankProfile {
    pub fn on_curve(&self) -> bool {
        self.rank == 1
    }
}

/// First nonzero apolar slice of a nonzero form.
pub(crate) fn first_slice(f: &BinaryForm) -> Result<ApolarSlice, Error> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let d = f.degree();
    for t in 1..=d + 1 {
        let slice = apolar_slice(f, t)?;
        if !slice.is_empty() {
            return Ok(slice);
        }
    }
    unreachable!("the slice of degree d + 1 is never empty")
}

pub fn rank_profile(f: &BinaryForm) -> Result<RankProfile, Error> {
    let d = f.degree();
    let slice = first_slice(f)?;
    let b = slice.slice_degree;
    let z_unique = slice.dim() == 1;
    let (rank, generator) = match find_squarefree_element(&slice.basis)? {
        Some(g) => (b, if z_unique { slice.basis[0].clone() } else { g }),
        None => (d + 2 - b, slice.basis[0].clone()),
    };
    Ok(RankProfile {
        d,
        border_rank: b,
        cactus_rank: b,
        rank,
        min_generator: generator.normalized(),
        z_unique,
    })
}
