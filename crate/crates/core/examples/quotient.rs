//! Builds the afterset automaton of the greatest right invariance by hand
//! and compares it with one call to the right reduction.

use fuzzred::reduction::{afterset_automaton, closure, greatest_right_invariance, reduce_by_right_invariance};
use fuzzred::{format, Bound, Lattice, ReductionConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(format!("{}/data/in1.txt", env!("CARGO_MANIFEST_DIR")))?;
    let a = format::parse_sparse(&text)?;
    let cfg = ReductionConfig::new(0.1, Bound::Infinite, Lattice::Product)?;
    let z = greatest_right_invariance(&closure(&a, &cfg)?, &cfg);
    let (q, reps) = afterset_automaton(&a, &z, &cfg)?;
    println!("representatives {reps:?}");
    print!("{}", format::to_dense(&q));
    let (r, stats) = reduce_by_right_invariance(&a, &cfg)?;
    println!("right reduction: {} -> {} states, {} closure steps", a.states(), r.states(), stats.closure_steps);
    Ok(())
}
