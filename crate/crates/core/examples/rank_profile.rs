//! Border, cactus and Waring rank of a few binary forms, plus a form with a
//! prescribed profile.
//!
//! cargo run --example rank_profile [-- d:c0,...,cd]

use waringlab::rankengine::{prescribed_profile_form, rank_profile};
use waringlab::BinaryForm;

fn show(label: &str, f: &BinaryForm) -> waringlab::Result<()> {
    let p = rank_profile(f)?;
    println!(
        "{label:<28} {f:<28} border {}  cactus {}  rank {}  generator {}  unique scheme {}",
        p.border_rank, p.cactus_rank, p.rank, p.min_generator, p.z_unique
    );
    Ok(())
}

fn main() -> waringlab::Result<()> {
    if let Some(arg) = std::env::args().nth(1) {
        return show("input", &BinaryForm::parse(&arg)?);
    }
    show("x^3 y", &BinaryForm::from_i64(&[0, 1, 0, 0, 0]))?;
    show("x^2 + y^2", &BinaryForm::from_i64(&[1, 0, 1]))?;
    show("x^3 + y^3", &BinaryForm::binomial_pure_powers(3))?;
    show("(x + 2y)^6", &BinaryForm::power_of_linear_i64(1, 2, 6))?;
    for b in 2..=4 {
        let f = prescribed_profile_form(9, b, 11)?;
        show(&format!("prescribed d=9 b={b}"), &f)?;
    }
    Ok(())
}
