//! A spanning path with few crossings, with its exact weight certificate.

use adjlabel::crossing::{build_low_crossing_path, optimal_path_crossing, BuildOptions, PathBound};
use adjlabel::generators::{generate, Family, GeneratorSpec};
use adjlabel::set_system::neighborhood_system;

fn main() -> adjlabel::Result<()> {
    let g = generate(&GeneratorSpec::new(Family::RandomGnp { n: 8, p: 0.4 }, 3))?;
    let s = neighborhood_system(&g);
    let p = build_low_crossing_path(&s, &BuildOptions::default())?;
    println!("tree edges {:?}", p.tree.edges.pairs());
    println!("path order {:?}", p.order);
    println!(
        "k_T = {}, k_P = {}, log2 W_final = {:.3}, certificate holds: {}, per-set factor two: {}",
        p.tree_crossing,
        p.path_crossing,
        p.tree.final_log_weight_bound,
        p.tree.holds(),
        p.factor_two_holds()
    );
    let (best, _) = optimal_path_crossing(&s)?;
    println!("best possible path crossing: {best}");

    let b = PathBound::for_system(&s, p.tree_crossing, p.path_crossing, 10_000_000)?;
    println!(
        "d = {}, bound {:.2}, holds: {}",
        b.d, b.path_rhs, b.path_holds
    );
    Ok(())
}
