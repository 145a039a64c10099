//! Degeneracy orderings, automorphism counts and subdivisions.

use adjlabel::generators::{generate, Family, GeneratorSpec};
use adjlabel::graph::{
    are_isomorphic, automorphism_count, automorphism_count_within, contains_biclique,
    degeneracy_ordering, subdivide,
};
use adjlabel::Graph;

fn main() -> adjlabel::Result<()> {
    let g = generate(&GeneratorSpec::new(
        Family::RandomDDegenerate { n: 30, d: 2 },
        5,
    ))?;
    let dg = degeneracy_ordering(&g);
    println!("random 2-degenerate graph: degeneracy {}", dg.d);
    let v = dg.ordering.order()[29];
    println!(
        "last vertex {v} has back-neighbours {:?}",
        dg.back_neighbors(&g, v).collect::<Vec<_>>()
    );

    let k4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let s = subdivide(&k4, 2).graph;
    println!(
        "aut(K4) = {}, aut of its 2-subdivision ({} vertices) = {}",
        automorphism_count(&k4)?,
        s.n(),
        automorphism_count_within(&s, s.n())?
    );

    let c6 = Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])?;
    let two_triangles =
        Graph::from_edge_list(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])?;
    println!("C6 ~ 2K3: {}", are_isomorphic(&c6, &two_triangles)?);

    let k33 = generate(&GeneratorSpec::new(
        Family::CompleteBipartite { a: 3, b: 3 },
        0,
    ))?;
    println!("K3,3 contains K3,3: {}", contains_biclique(&k33, 3, 64)?);
    Ok(())
}
