//! Reduces a batch of random automata over every structure and prints CSV.

use fuzzred::sweep::{run_sweep, write_csv, RandomShape, Source, SweepSpec, ValueSet};
use fuzzred::{Bound, Lattice};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let shape = RandomShape {
        states: 6,
        symbols: 2,
        density: 0.4,
        values: ValueSet::Grid(vec![0.25, 0.5, 1.0]),
        seeds: 0..5,
    };
    let mut spec = SweepSpec::new(
        Lattice::all().to_vec(),
        vec![0.1, 0.3],
        vec![Bound::Finite(4), Bound::Infinite],
        Source::Random(shape),
    );
    spec.check = 6;
    spec.max_closure = 200_000;
    let rows = run_sweep(&spec)?;
    write_csv(&rows, std::io::stdout().lock())?;
    Ok(())
}
