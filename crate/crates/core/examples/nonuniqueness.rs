//! Folds the spans of sampled rank decompositions until only the point is left.

use waringlab::rankengine::{non_uniqueness_set, prescribed_profile_form, rank_profile};
use waringlab::BinaryForm;

fn main() -> waringlab::Result<()> {
    let forms = [
        ("x^3 y", BinaryForm::from_i64(&[0, 1, 0, 0, 0])),
        ("prescribed d=8 b=3", prescribed_profile_form(8, 3, 5)?),
        ("x^5 + y^5", BinaryForm::binomial_pure_powers(5)),
    ];
    for (label, f) in &forms {
        let p = rank_profile(f)?;
        let w = non_uniqueness_set(f, None, None, 1)?;
        println!(
            "{label:<20} rank {} (border {}): {} samples, {} draws, result of projective dimension {}, point certified: {}",
            p.rank,
            p.border_rank,
            w.samples_used,
            w.draws,
            w.subspace.proj_dim(),
            w.certified_point
        );
    }
    // decompositions larger than the rank
    let f = BinaryForm::from_i64(&[3, -1, 4, 1, -5, 9, 2]);
    for t in rank_profile(&f)?.rank..=6 {
        let w = non_uniqueness_set(&f, Some(t), Some(30), 2)?;
        println!("generic sextic, t = {t}: projective dimension {}, certified {}", w.subspace.proj_dim(), w.certified_point);
    }
    Ok(())
}
