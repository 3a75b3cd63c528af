//! Trimming before reduction: the eight-state example has four useless
//! states, and skipping the trim leaves one more state in the result.

use fuzzred::reduction::{soft_state_reduction, soft_state_reduction_untrimmed};
use fuzzred::{format, Bound, Lattice, ReductionConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(format!("{}/data/in7.txt", env!("CARGO_MANIFEST_DIR")))?;
    let a = format::parse_dense(&text)?;
    let (t, kept) = a.trim();
    println!("trim keeps {kept:?} ({} of {} states)", t.states(), a.states());
    let cfg = ReductionConfig::new(0.0, Bound::Infinite, Lattice::Godel)?;
    println!("with trim: {} states", soft_state_reduction(&a, &cfg)?.states());
    println!("without trim: {} states", soft_state_reduction_untrimmed(&a, &cfg)?.states());
    Ok(())
}
