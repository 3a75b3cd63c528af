mod common;

use fuzzred::reduction::{soft_state_reduction, Bound, ReductionConfig};
use fuzzred::sweep::{run_sweep, to_csv_string, RandomShape, Source, SweepSpec, ValueSet};
use fuzzred::Lattice;

fn file_source(name: &str) -> Source {
    Source::Automaton { name: name.into(), automaton: common::load(name) }
}

#[test]
fn in1_grid_matches_golden() {
    let mut spec = SweepSpec::new(
        Lattice::all().to_vec(),
        vec![0.0, 0.1, 0.2, 0.3],
        vec![Bound::Finite(2), Bound::Finite(3), Bound::Finite(4), Bound::Infinite],
        file_source("in1.txt"),
    );
    spec.check = 6;
    spec.max_closure = 200_000;
    let csv = to_csv_string(&run_sweep(&spec).unwrap()).unwrap();
    let golden = std::fs::read_to_string(format!("{}/tests/golden/in1_grid.csv", env!("CARGO_MANIFEST_DIR"))).unwrap();
    assert_eq!(csv, golden);
}

#[test]
fn singleton_grid_equals_direct_run() {
    let a = common::load("in1.txt");
    for lat in Lattice::all() {
        let spec = SweepSpec::new(vec![lat], vec![0.1], vec![Bound::Finite(5)], file_source("in1.txt"));
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 1);
        let cfg = ReductionConfig::new(0.1, Bound::Finite(5), lat).unwrap();
        let r = soft_state_reduction(&a, &cfg).unwrap();
        assert_eq!(rows[0].remaining_states, Some(r.result.states()));
        assert_eq!(rows[0].closure_steps, Some(r.closure_step_executions));
        assert_eq!(rows[0].loop_iterations, Some(r.while_loop_iterations));
        assert!(rows[0].error.is_empty());
    }
}

#[test]
fn in3_product_grid() {
    let eps = vec![0.1, 0.01, 0.004, 0.003, 0.002, 0.001];
    let spec = SweepSpec::new(vec![Lattice::Product], eps, vec![Bound::Infinite], file_source("in3.txt"));
    let rows = run_sweep(&spec).unwrap();
    let states: Vec<_> = rows.iter().map(|r| r.remaining_states.unwrap()).collect();
    // Rows come out sorted by epsilon.
    assert_eq!(states, [28, 27, 25, 24, 19, 6]);
}

fn random_spec(values: ValueSet, structures: Vec<Lattice>, epsilons: Vec<f64>) -> SweepSpec {
    let shape = RandomShape { states: 6, symbols: 2, density: 0.5, values, seeds: 0..12 };
    let mut spec = SweepSpec::new(structures, epsilons, vec![Bound::Finite(3), Bound::Infinite], Source::Random(shape));
    spec.check = 8;
    spec
}

#[test]
fn random_cells_pass_the_check() {
    let specs = [
        random_spec(
            ValueSet::Grid(vec![0.5, 1.0]),
            vec![Lattice::Product, Lattice::Godel, Lattice::Lukasiewicz, Lattice::Nilpotent],
            vec![0.0, 0.1, 0.2],
        ),
        random_spec(ValueSet::Interval { lo: 0.1, hi: 1.0 }, vec![Lattice::Godel, Lattice::Lukasiewicz, Lattice::Nilpotent], vec![0.0, 0.1]),
        random_spec(ValueSet::Interval { lo: 0.1, hi: 1.0 }, vec![Lattice::Product], vec![0.1, 0.2]),
        random_spec(ValueSet::Interval { lo: 0.1, hi: 1.0 }, vec![Lattice::HAMACHER], vec![0.3]),
    ];
    for spec in specs {
        let rows = run_sweep(&spec).unwrap();
        for r in &rows {
            assert!(r.error.is_empty() && r.check == "equal", "{r:?}");
        }
        assert_eq!(rows, run_sweep(&spec).unwrap());
    }
}
