//! Two random parameter sets on a rational curve span subspaces meeting in one
//! point; on the rational normal curve its rank is certified. Also projects the
//! rational normal curve from one of its points.

use waringlab::curves::{construct_qsa, curve_zoo, project_curve, random_parameters, rnc_point_to_form, ParamCurve};
use waringlab::exactlin::scalar::int;
use waringlab::rankengine::rank_profile;
use waringlab::rng::seeded;

fn main() -> waringlab::Result<()> {
    let mut rng = seeded(8);
    for r in [4, 6] {
        for (name, c) in curve_zoo(&mut rng, r, 9)? {
            let (s, a) = random_parameters(&mut rng, r, 2500);
            let res = construct_qsa(&c, &s, &a)?;
            let rank = if c.is_rational_normal() {
                rank_profile(&rnc_point_to_form(&res.q)?)?.rank.to_string()
            } else {
                "not certified".into()
            };
            println!(
                "P^{r} {name:<7} degree {}: single point, irredundant {} / {}, rank {rank}",
                c.degree(),
                res.s_irredundant,
                res.a_irredundant
            );
        }
    }
    let rnc = ParamCurve::rational_normal(6);
    let img = project_curve(&rnc, &rnc.curve_point(&int(3))?)?;
    println!(
        "rational normal sextic projected from a point: P^{} curve of degree {}, rational normal up to coordinates: {}",
        img.r(),
        img.degree(),
        img.is_normal_up_to_coordinates()
    );
    Ok(())
}
