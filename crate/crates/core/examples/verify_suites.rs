//! Runs every property check and prints one line per check with its notes.
//!
//! cargo run --release --example verify_suites [suite]

use adjlabel::verify::{Suite, Verifier, VerifyConfig};

fn main() -> adjlabel::Result<()> {
    let suite: Suite = std::env::args()
        .nth(1)
        .as_deref()
        .unwrap_or("all")
        .parse()?;
    let v = Verifier::new(VerifyConfig::default());
    for &check in suite.checks() {
        let o = v.run(check)?;
        println!("{}", o.summary_line());
        for note in &o.notes {
            println!("    {note}");
        }
        if let Some(f) = o.witness() {
            println!("    smallest witness: {}", f.witness);
        }
    }
    Ok(())
}
