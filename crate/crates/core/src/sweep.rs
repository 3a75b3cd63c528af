//! Parameter sweeps over structure × ε × k, and random automata.

use std::cmp::Ordering;
use std::io::Write;
use std::ops::Range;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::Ffa;
use crate::error::{Error, Result};
use crate::format::format_value;
use crate::fuzzy::{FuzzyMat, FuzzyVec};
use crate::lattice::Lattice;
use crate::oracle::{self, Verdict};
use crate::reduction::{soft_state_reduction, Bound, ReductionConfig};

/// Where nonzero random degrees are drawn from.
#[derive(Clone, Debug, PartialEq)]
pub enum ValueSet {
    /// Uniform choice among finitely many values in `(0, 1]`.
    Grid(Vec<f64>),
    /// Uniform on `[lo, hi]` with `0 < lo ≤ hi ≤ 1`.
    Interval { lo: f64, hi: f64 },
}

impl ValueSet {
    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            ValueSet::Grid(v) => !v.is_empty() && v.iter().all(|&x| x > 0.0 && x <= 1.0),
            ValueSet::Interval { lo, hi } => *lo > 0.0 && lo <= hi && *hi <= 1.0,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Config(format!("invalid value set {self:?}")))
        }
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> f64 {
        match self {
            ValueSet::Grid(v) => v[rng.gen_range(0..v.len())],
            ValueSet::Interval { lo, hi } => {
                if lo == hi {
                    *lo
                } else {
                    rng.gen_range(*lo..=*hi)
                }
            }
        }
    }
}

impl FromStr for ValueSet {
    type Err = Error;

    /// `lo..hi` for an interval, `a,b,c` for a grid.
    fn from_str(s: &str) -> Result<Self> {
        let num = |t: &str| -> Result<f64> {
            t.trim().parse().map_err(|_| Error::Config(format!("'{t}' is not a number")))
        };
        let set = match s.split_once("..") {
            Some((lo, hi)) => ValueSet::Interval { lo: num(lo)?, hi: num(hi)? },
            None => ValueSet::Grid(s.split(',').map(num).collect::<Result<_>>()?),
        };
        set.validate()?;
        Ok(set)
    }
}

/// A reproducible random automaton. Every transition row, and each of `I`
/// and `F`, gets at least one nonzero entry.
pub fn generate_random(n: usize, s: usize, density: f64, values: &ValueSet, seed: u64) -> Result<Ffa> {
    if n == 0 || s == 0 {
        return Err(Error::Infeasible(format!("need at least one state and one symbol, got n={n}, s={s}")));
    }
    if !(density > 0.0 && density <= 1.0) {
        return Err(Error::Config(format!("density must be in (0, 1], got {density}")));
    }
    values.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fill = |rng: &mut ChaCha8Rng| -> Vec<f64> {
        let mut row: Vec<f64> =
            (0..n).map(|_| if rng.gen_bool(density) { values.sample(rng) } else { 0.0 }).collect();
        if row.iter().all(|&x| x == 0.0) {
            let j = rng.gen_range(0..n);
            row[j] = values.sample(rng);
        }
        row
    };
    let initial = FuzzyVec(fill(&mut rng));
    let delta = (0..s)
        .map(|_| FuzzyMat::from_rows((0..n).map(|_| fill(&mut rng)).collect()))
        .collect::<Result<Vec<_>>>()?;
    let fin = FuzzyVec(fill(&mut rng));
    Ffa::with_numbered_symbols(initial, delta, fin)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RandomShape {
    pub states: usize,
    pub symbols: usize,
    pub density: f64,
    pub values: ValueSet,
    pub seeds: Range<u64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Automaton { name: String, automaton: Ffa },
    Random(RandomShape),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub structures: Vec<Lattice>,
    pub epsilons: Vec<f64>,
    pub ks: Vec<Bound>,
    pub source: Source,
    /// Oracle word length per cell (capped by the cell's k); 0 skips it.
    pub check: usize,
    pub precision: f64,
    pub max_closure: usize,
}

impl SweepSpec {
    pub fn new(structures: Vec<Lattice>, epsilons: Vec<f64>, ks: Vec<Bound>, source: Source) -> Self {
        SweepSpec {
            structures,
            epsilons,
            ks,
            source,
            check: 0,
            precision: ReductionConfig::DEFAULT_PRECISION,
            max_closure: ReductionConfig::DEFAULT_MAX_CLOSURE,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub instance: String,
    pub seed: Option<u64>,
    pub structure: Lattice,
    pub epsilon: f64,
    pub k: Bound,
    pub remaining_states: Option<usize>,
    pub closure_steps: Option<u64>,
    pub loop_iterations: Option<u64>,
    /// `equal`, `counterexample …`, or empty when not checked.
    pub check: String,
    pub error: String,
}

fn structure_rank(l: &Lattice) -> (usize, f64) {
    let lambda = match l {
        Lattice::Hamacher { lambda } => *lambda,
        _ => 0.0,
    };
    ("PHGLN".find(l.code()).unwrap_or(5), lambda)
}

fn row_order(a: &SweepRow, b: &SweepRow) -> Ordering {
    let (ra, rb) = (structure_rank(&a.structure), structure_rank(&b.structure));
    ra.0.cmp(&rb.0)
        .then(ra.1.total_cmp(&rb.1))
        .then(a.epsilon.total_cmp(&b.epsilon))
        .then(a.k.cmp(&b.k))
        .then(a.seed.cmp(&b.seed))
}

/// One row per (instance, structure, ε, k). Failures inside a cell land in
/// the row's `error` column; only an empty axis is an error for the sweep.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    if spec.structures.is_empty() || spec.epsilons.is_empty() || spec.ks.is_empty() {
        return Err(Error::Config("sweep axes must be nonempty".into()));
    }
    let instances: Vec<(String, Option<u64>, Result<Ffa>)> = match &spec.source {
        Source::Automaton { name, automaton } => vec![(name.clone(), None, Ok(automaton.clone()))],
        Source::Random(shape) => {
            if shape.seeds.is_empty() {
                return Err(Error::Config("seed range is empty".into()));
            }
            shape
                .seeds
                .clone()
                .map(|seed| {
                    let a = generate_random(shape.states, shape.symbols, shape.density, &shape.values, seed);
                    ("random".to_string(), Some(seed), a)
                })
                .collect()
        }
    };

    let mut rows = Vec::new();
    for (name, seed, automaton) in &instances {
        for &structure in &spec.structures {
            for &epsilon in &spec.epsilons {
                for &k in &spec.ks {
                    let mut row = SweepRow {
                        instance: name.clone(),
                        seed: *seed,
                        structure,
                        epsilon,
                        k,
                        remaining_states: None,
                        closure_steps: None,
                        loop_iterations: None,
                        check: String::new(),
                        error: String::new(),
                    };
                    if let Err(e) = run_cell(spec, automaton, &mut row) {
                        row.error = e.to_string();
                    }
                    rows.push(row);
                }
            }
        }
    }
    rows.sort_by(row_order);
    Ok(rows)
}

fn run_cell(spec: &SweepSpec, automaton: &Result<Ffa>, row: &mut SweepRow) -> Result<()> {
    let a = automaton.as_ref().map_err(Clone::clone)?;
    let cfg = ReductionConfig::new(row.epsilon, row.k, row.structure)?
        .with_precision(spec.precision)?
        .with_max_closure(spec.max_closure);
    let report = soft_state_reduction(a, &cfg)?;
    row.remaining_states = Some(report.states());
    row.closure_steps = Some(report.closure_step_executions);
    row.loop_iterations = Some(report.while_loop_iterations);
    if spec.check > 0 {
        let len = row.k.min(spec.check);
        row.check = match oracle::check_eps_equivalent(a, &report.result, row.epsilon, len, row.structure)? {
            Verdict::Equal => "equal".into(),
            Verdict::Counterexample { word, left, right } => format!(
                "counterexample {} {} {}",
                word.display(a.alphabet()),
                format_value(left),
                format_value(right)
            ),
        };
    }
    Ok(())
}

pub const CSV_HEADER: [&str; 10] = [
    "instance",
    "seed",
    "structure",
    "epsilon",
    "k",
    "remaining_states",
    "closure_steps",
    "loop_iterations",
    "check",
    "error",
];

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Config(format!("cannot write CSV: {e}"));
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER).map_err(io)?;
    let opt = |v: Option<String>| v.unwrap_or_default();
    for r in rows {
        w.write_record([
            r.instance.clone(),
            opt(r.seed.map(|s| s.to_string())),
            r.structure.to_string(),
            format_value(r.epsilon),
            r.k.to_string(),
            opt(r.remaining_states.map(|s| s.to_string())),
            opt(r.closure_steps.map(|s| s.to_string())),
            opt(r.loop_iterations.map(|s| s.to_string())),
            r.check.clone(),
            r.error.clone(),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Config(format!("cannot write CSV: {e}")))?;
    Ok(())
}

pub fn to_csv_string(rows: &[SweepRow]) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_is_reproducible() {
        let v = ValueSet::Grid(vec![0.2, 0.5, 1.0]);
        let a = generate_random(5, 2, 0.3, &v, 7).unwrap();
        assert_eq!(a, generate_random(5, 2, 0.3, &v, 7).unwrap());
        assert_ne!(a, generate_random(5, 2, 0.3, &v, 8).unwrap());
    }

    #[test]
    fn random_rows_are_nonempty() {
        let v = ValueSet::Interval { lo: 0.1, hi: 0.5 };
        for seed in 0..20 {
            let a = generate_random(6, 2, 0.05, &v, seed).unwrap();
            assert!(a.initial().iter().any(|&x| x > 0.0));
            assert!(a.final_states().iter().any(|&x| x > 0.0));
            for d in a.deltas() {
                assert!(d.rows().all(|r| r.iter().any(|&x| x > 0.0)));
            }
            assert!(a.deltas().iter().flat_map(|d| d.values()).all(|&x| x == 0.0 || (0.1..=0.5).contains(&x)));
        }
    }

    #[test]
    fn full_density_is_full() {
        let a = generate_random(4, 1, 1.0, &ValueSet::Grid(vec![0.3]), 1).unwrap();
        assert!(a.delta(0).values().iter().all(|&x| x == 0.3));
    }

    #[test]
    fn infeasible_shapes() {
        let v = ValueSet::Grid(vec![0.5]);
        assert!(matches!(generate_random(0, 1, 0.5, &v, 0), Err(Error::Infeasible(_))));
        assert!(generate_random(3, 1, 0.0, &v, 0).is_err());
        assert!("0..0.5".parse::<ValueSet>().is_err());
        assert!("0.2,1.5".parse::<ValueSet>().is_err());
        assert_eq!("0.1..0.5".parse::<ValueSet>().unwrap(), ValueSet::Interval { lo: 0.1, hi: 0.5 });
    }

    #[test]
    fn sweep_rows_are_sorted_and_errors_are_captured() {
        let a = generate_random(3, 1, 0.8, &ValueSet::Grid(vec![0.9]), 3).unwrap();
        let mut spec = SweepSpec::new(
            vec![Lattice::Godel, Lattice::Product],
            vec![0.2, 0.0],
            vec![Bound::Infinite, Bound::Finite(2)],
            Source::Automaton { name: "x".into(), automaton: a },
        );
        spec.max_closure = 3;
        let rows = run_sweep(&spec).unwrap();
        assert_eq!(rows.len(), 8);
        assert_eq!(rows[0].structure, Lattice::Product);
        assert_eq!((rows[0].epsilon, rows[0].k), (0.0, Bound::Finite(2)));
        assert_eq!((rows[1].epsilon, rows[1].k), (0.0, Bound::Infinite));
        // product at ε = 0 with an unbounded k hits the tiny closure cap
        assert!(rows[1].error.contains("closure"));
        assert!(rows[1].remaining_states.is_none());
        let csv = to_csv_string(&rows).unwrap();
        assert!(csv.starts_with("instance,seed,structure,epsilon,k,remaining_states"));
        assert_eq!(csv.lines().count(), 9);
    }

    #[test]
    fn empty_axis_is_rejected() {
        let a = generate_random(2, 1, 1.0, &ValueSet::Grid(vec![0.5]), 0).unwrap();
        let spec = SweepSpec::new(vec![], vec![0.0], vec![Bound::Infinite], Source::Automaton { name: "x".into(), automaton: a });
        assert!(run_sweep(&spec).is_err());
    }
}
