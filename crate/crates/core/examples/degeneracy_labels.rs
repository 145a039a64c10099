//! Back-neighbour labels for sparse graphs.

use adjlabel::generators::{generate, Family, GeneratorSpec};
use adjlabel::labeling::{choose_scheme, encode_degeneracy, label_stats, parse_degeneracy};

fn main() -> adjlabel::Result<()> {
    let g = generate(&GeneratorSpec::new(
        Family::RandomDDegenerate { n: 128, d: 3 },
        0,
    ))?;
    let ls = encode_degeneracy(&g);
    let st = label_stats(&ls);
    println!(
        "degeneracy {}, max {} of {} bits",
        ls.parameter, st.max_bits, st.bound_bits
    );
    let f = parse_degeneracy(ls.label(5))?;
    println!("vertex 5: id {} with back ids {:?}", f.id, f.back);
    assert!(ls.adjacent(0, 1)? == g.has_edge(0, 1));

    let dense = generate(&GeneratorSpec::new(Family::Complete { n: 20 }, 0))?;
    println!(
        "auto scheme for K20: {}",
        choose_scheme(&dense, 4)?.scheme.name()
    );
    Ok(())
}
