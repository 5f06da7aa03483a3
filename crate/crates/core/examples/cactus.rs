//! The scheme cut out by the minimal apolar generator meets a rank decomposition
//! only in the point, and the decomposition family has the expected dimension.

use waringlab::binform::apolar_span;
use waringlab::rankengine::{cactus_span_intersection, family_dimension, pairwise_span_check, rank_profile};
use waringlab::{BinaryForm, LinearSubspace};

fn main() -> waringlab::Result<()> {
    for d in 4..=9 {
        let f = BinaryForm::monomial(d, 1);
        let p = rank_profile(&f)?;
        let z = apolar_span(&p.min_generator, d)?;
        let meet = cactus_span_intersection(&f, d as u64)?;
        println!(
            "x^{}y: scheme span dim {}, meet with a decomposition is the point: {}, family dimension {}",
            d - 1,
            z.proj_dim(),
            meet == LinearSubspace::point(f.coeffs())?,
            family_dimension(&f)?
        );
    }
    let f = BinaryForm::from_i64(&[5, -2, 7, 1, -3, 4, 8]);
    let r = pairwise_span_check(&f, 5, 9)?;
    println!("generic sextic: {} samples, {} pairs, every pair meets only in the point: {}", r.samples, r.pairs, r.all_meet_in_point);
    Ok(())
}
