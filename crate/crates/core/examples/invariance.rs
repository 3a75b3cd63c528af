//! Closure of the final vector under the truncated transitions, and the
//! greatest right invariant fuzzy preorder it induces.

use fuzzred::reduction::{closure, greatest_right_invariance};
use fuzzred::{format, Bound, Lattice, ReductionConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(format!("{}/data/in1.txt", env!("CARGO_MANIFEST_DIR")))?;
    let a = format::parse_sparse(&text)?;
    for k in [Bound::Finite(1), Bound::Finite(3), Bound::Infinite] {
        let cfg = ReductionConfig::new(0.1, k, Lattice::Product)?;
        let set = closure(&a, &cfg)?;
        println!("k={k}: {} vectors after {} steps", set.len(), set.steps());
        for v in set.vectors() {
            println!("  {:?}", v.0);
        }
        let z = greatest_right_invariance(&set, &cfg);
        for row in z.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:.3}")).collect();
            println!("  | {} |", cells.join(" "));
        }
    }
    Ok(())
}
