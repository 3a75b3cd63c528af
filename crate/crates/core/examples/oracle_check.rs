//! Brute-force comparison of languages on all words up to a length.

use fuzzred::oracle::{check_eps_equivalent, language_table, Verdict};
use fuzzred::reduction::soft_state_reduction;
use fuzzred::{format, Bound, Lattice, ReductionConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = std::fs::read_to_string(format!("{}/data/in1.txt", env!("CARGO_MANIFEST_DIR")))?;
    let a = format::parse_sparse(&text)?;
    let lat = Lattice::Product;

    let table = language_table(&a, 3, lat)?;
    for (w, d) in table.iter().take(8) {
        println!("{:>8} -> {d:.4}", w.display(a.alphabet()).to_string());
    }

    let good = soft_state_reduction(&a, &ReductionConfig::new(0.1, Bound::Infinite, lat)?)?;
    println!("eps = 0.1: {:?}", check_eps_equivalent(&a, &good.result, 0.1, 8, lat)?);

    // A rounding step this coarse merges states that should stay apart.
    let cfg = ReductionConfig::new(0.0, Bound::Finite(6), lat)?.with_precision(0.9)?;
    let bad = soft_state_reduction(&a, &cfg)?;
    match check_eps_equivalent(&a, &bad.result, 0.0, 6, lat)? {
        Verdict::Equal => println!("precision 0.9: equal"),
        Verdict::Counterexample { word, left, right } => {
            println!("precision 0.9: '{}' gives {left} vs {right}", word.display(a.alphabet()))
        }
    }
    Ok(())
}
