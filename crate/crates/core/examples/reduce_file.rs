//! Usage: reduce_file [FILE] [EPSILON] [STRUCTURE] [K]
//! Defaults to the bundled seven-state automaton at ε = 0.1 over the product.

use fuzzred::format::{self, Format};
use fuzzred::reduction::soft_state_reduction;
use fuzzred::{Bound, Error, Lattice, ReductionConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| format!("{}/data/in1.txt", env!("CARGO_MANIFEST_DIR")));
    let eps: f64 = args.next().map_or(Ok(0.1), |s| s.parse()).map_err(|_| Error::Config("bad epsilon".into()))?;
    let lat = args
        .next()
        .map_or(Some(Lattice::Product), |s| s.chars().next().and_then(Lattice::from_code))
        .ok_or_else(|| Error::Config("bad structure".into()))?;
    let k: Bound = args.next().map_or(Ok(Bound::Infinite), |s| s.parse())?;

    let text = std::fs::read_to_string(&path)?;
    let fmt = if text.lines().any(|l| l.starts_with("states")) { Format::Sparse } else { Format::Dense };
    let a = format::parse_automaton(&text, fmt)?;
    let report = soft_state_reduction(&a, &ReductionConfig::new(eps, k, lat)?)?;
    for (phase, n) in &report.phase_state_counts {
        println!("{phase:>9}: {n} states");
    }
    println!("branch {}, {} closure steps", report.branch, report.closure_step_executions);
    print!("{}", format::to_dense(&report.result));
    Ok(())
}
