//! VC dimension, shatter functions and separated packings of set systems.

use adjlabel::generators::{generate, random_set_system, Family, GeneratorSpec};
use adjlabel::set_system::{
    dual_shatter, greedy_delta_packing, neighborhood_system, primal_shatter, unit_distance_graph,
    vc_dimension, verify_packing_bound,
};

fn main() -> adjlabel::Result<()> {
    let grid = generate(&GeneratorSpec::new(Family::Grid { rows: 4, cols: 4 }, 0))?;
    let s = neighborhood_system(&grid);
    println!(
        "4x4 grid neighbourhoods: VC dimension {}",
        vc_dimension(&s)?
    );
    for m in 1..=6 {
        println!(
            "  m = {m}: primal {:>2}, dual {:>2}",
            primal_shatter(&s, m)?,
            dual_shatter(&s, m)?
        );
    }

    let r = random_set_system(12, 20, 0.4, 9)?;
    let d = vc_dimension(&r)?;
    let (ud, distinct) = unit_distance_graph(&r);
    println!(
        "random system: d = {d}, unit distance edges {} <= {}",
        ud.edge_count(),
        d * distinct.len()
    );
    for delta in [1, 2, 4] {
        let p = greedy_delta_packing(&r, delta, 0)?;
        let rep = verify_packing_bound(&r, &p, d, delta)?;
        println!(
            "  delta = {delta}: |P| = {} <= {}: {}",
            rep.lhs, rep.rhs, rep.holds
        );
    }
    Ok(())
}
