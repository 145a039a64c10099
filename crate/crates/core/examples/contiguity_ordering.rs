//! Orders vertices so that neighbourhoods split into few intervals.

use adjlabel::contiguity::{exact_contiguity, low_contiguity_ordering, PipelineOptions};
use adjlabel::generators::{generate, Family, GeneratorSpec};

fn main() -> adjlabel::Result<()> {
    let g = generate(&GeneratorSpec::new(Family::Grid { rows: 2, cols: 4 }, 0))?;
    let opts = PipelineOptions {
        bound_budget: Some(10_000_000),
        ..PipelineOptions::default()
    };
    let p = low_contiguity_ordering(&g, &opts)?;
    println!("ordering {:?}", p.contiguity.ordering.order());
    for (v, runs) in p.contiguity.per_vertex.iter().enumerate() {
        println!("  N({v}) = {:?}", runs.intervals());
    }
    println!(
        "k = {} from k_P = {} (k <= k_P/2 + 1: {})",
        p.report.k, p.report.path_crossing, p.report.path_bound_holds
    );
    let (best, sigma) = exact_contiguity(&g)?;
    println!("optimum {best} with {:?}", sigma.order());
    Ok(())
}
