//! Division-family certificates: every squarefree apolar form of x^d + y^d in
//! degrees 3..d-1 has a removable root, while a generic degree-d draw does not.

use waringlab::binform::{apolar_slice, irredundancy_certificate, is_irredundant, squarefree};
use waringlab::rankengine::sample_decomposition;
use waringlab::rng::{random_int, seeded};
use waringlab::{BinaryForm, DualForm};

fn main() -> waringlab::Result<()> {
    let mut rng = seeded(4);
    for d in 5..=7 {
        let f = BinaryForm::binomial_pure_powers(d);
        for t in 3..d {
            let slice = apolar_slice(&f, t)?;
            let (mut tried, mut redundant) = (0, 0);
            let mut last = None;
            while tried < 25 {
                let c: Vec<_> = slice.basis.iter().map(|_| random_int(&mut rng, 20)).collect();
                let g = DualForm::combination(&slice.basis, &c);
                if g.is_zero() || !squarefree(&g)? {
                    continue;
                }
                tried += 1;
                redundant += (!is_irredundant(&g, &f)?) as usize;
                last = Some(g);
            }
            let cert = irredundancy_certificate(&last.expect("at least one draw"), &f)?;
            println!("x^{d}+y^{d}, t={t}: {redundant}/{tried} squarefree draws redundant; sample certificate {cert}");
        }
    }
    let f = BinaryForm::from_i64(&[2, 7, -1, 3, 5, -4]);
    if let Some(s) = sample_decomposition(&f, 5, 3)? {
        println!("generic quintic, size 5 decomposition {}: irredundant {}", s.g, s.irredundant);
    }
    Ok(())
}
