//! Seeded generators: the same spec always yields the same graph.

use adjlabel::generators::{corpus, generate, Family, FamilyKind, GeneratorSpec};

fn main() -> adjlabel::Result<()> {
    for kind in FamilyKind::ALL {
        let g = generate(&GeneratorSpec::new(Family::sized(kind, 12), 1))?;
        println!("{:<22} n = {:>2}, m = {:>2}", kind, g.n(), g.edge_count());
    }

    let spec = GeneratorSpec::new(Family::RandomGnp { n: 6, p: 0.5 }, 42);
    print!(
        "gnp(6, 0.5) with seed 42:\n{}",
        generate(&spec)?.to_edge_list_string()
    );
    assert_eq!(generate(&spec)?, generate(&spec)?);

    let c = corpus();
    let largest = c.iter().map(|e| e.graph.n()).max().unwrap_or(0);
    println!("fixed corpus: {} graphs, up to {largest} vertices", c.len());
    Ok(())
}
