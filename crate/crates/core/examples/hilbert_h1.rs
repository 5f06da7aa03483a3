//! Planted point configurations in P^2 and P^3, the failure h^1 of I_S(d), and
//! the configuration the search finds.

use waringlab::rng::seeded;
use waringlab::veronese::{detect_configuration, planted_configuration, PlantedKind};

fn main() -> waringlab::Result<()> {
    let d = 6;
    for n in [2, 3] {
        for kind in PlantedKind::ALL {
            if kind == PlantedKind::CompleteIntersection && n != 2 {
                continue;
            }
            let inst = planted_configuration(&mut seeded(kind as u64 + 10 * n as u64), kind, n, d, 40)?;
            let r = detect_configuration(&inst.points, d)?;
            let found = r.witness.as_ref().map_or("none".to_string(), |w| format!("{} on {} points", w.kind.name(), w.points.len()));
            println!("n={n} {:<22} |S|={:<3} h0={:<4} h1={}  witness: {found}", format!("{kind:?}"), r.size, r.h0, r.h1);
        }
    }
    Ok(())
}
