//! A point of P^44 spanned by a binary octic on a line of P^2 and general points off
//! the line; sampled decompositions recover the span of those points and the octic.

use waringlab::veronese::{a43_construct, a43_verify};

fn main() -> waringlab::Result<()> {
    for (b, k) in [(2, 10), (3, 11), (4, 13), (2, 14)] {
        let inst = a43_construct(2, 8, b, k, 21)?;
        let r = a43_verify(&inst, 12, 22)?;
        println!(
            "b={b} k={k}: |U|={}, containment {}, intersection dim {} (expected {}), matches {}, q' recovered {}, pass {}",
            r.u_size, r.containment, r.intersection_dim, r.expected_dim, r.intersection_matches, r.qprime_recovered, r.pass
        );
        println!("    {}", r.note);
    }
    Ok(())
}
