//! Interval labels: encode, write the label file, read it back, query pairs.

use adjlabel::generators::{generate, Family, GeneratorSpec};
use adjlabel::labeling::{encode_interval, label_stats, read_label_file, write_label_file};

fn main() -> adjlabel::Result<()> {
    let g = generate(&GeneratorSpec::new(Family::RandomGnp { n: 40, p: 0.15 }, 8))?;
    let ls = encode_interval(&g)?;
    let st = label_stats(&ls);
    println!(
        "k = {}, max {} bits (format bound {}), mean {:.1}",
        ls.parameter, st.max_bits, st.bound_bits, st.mean_bits
    );
    println!("label of vertex 0: {}", ls.label(0).to_bit_string());

    let file = read_label_file(&write_label_file(&ls))?;
    let mut wrong = 0;
    for u in 0..g.n() {
        for v in 0..g.n() {
            wrong += (file.adjacent(u, v)? != g.has_edge(u, v)) as usize;
        }
    }
    println!("{} pairs decoded, {wrong} wrong", g.n() * g.n());
    Ok(())
}
