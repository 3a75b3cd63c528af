//! Soft state reduction by approximate right and left invariances.
//!
//! The pipeline is:
//!
//! 1. [`closure`] collects the ε-truncated backward vectors `(F_w)_ε` for
//!    `|w| ≤ k`, stopping early once a round adds nothing new;
//! 2. [`greatest_right_invariance`] meets their residuals `f /ε f`;
//! 3. [`afterset_automaton`] merges states with equal aftersets.
//!
//! [`reduce_by_right_invariance`] runs all three. [`soft_state_reduction_0`]
//! alternates right reductions and reversed (left) reductions while the state
//! count drops, and [`soft_state_reduction`] trims the input and keeps the
//! better of a direct and a reversed run.
//!
//! Vectors and aftersets are compared through quantized keys: every entry is
//! rounded to the nearest multiple of [`ReductionConfig::precision`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::automaton::Ffa;
use crate::error::{Error, Result};
use crate::fuzzy::{self, quantize, FuzzyMat, FuzzyVec};
use crate::lattice::{self, Lattice, Value};

/// Maximum word length considered: a natural number or unbounded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bound {
    Finite(usize),
    Infinite,
}

impl Bound {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(k) => Some(k),
            Bound::Infinite => None,
        }
    }

    /// `min(self, cap)` as a number.
    pub fn min(self, cap: usize) -> usize {
        self.finite().map_or(cap, |k| k.min(cap))
    }
}

impl Default for Bound {
    fn default() -> Self {
        Bound::Infinite
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(k) => write!(f, "{k}"),
            Bound::Infinite => write!(f, "infinity"),
        }
    }
}

impl FromStr for Bound {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "∞" => Ok(Bound::Infinite),
            t => t
                .parse()
                .map(Bound::Finite)
                .map_err(|_| Error::Config(format!("k must be a natural number or 'infinity', got '{s}'"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReductionConfig {
    pub epsilon: f64,
    pub k: Bound,
    pub lattice: Lattice,
    pub precision: f64,
    pub max_closure: usize,
}

impl ReductionConfig {
    pub const DEFAULT_PRECISION: f64 = 1e-12;
    pub const DEFAULT_MAX_CLOSURE: usize = 10_000_000;

    pub fn new(epsilon: f64, k: Bound, lattice: Lattice) -> Result<Self> {
        let epsilon = Value::new(epsilon)?.get();
        Ok(ReductionConfig {
            epsilon,
            k,
            lattice,
            precision: Self::DEFAULT_PRECISION,
            max_closure: Self::DEFAULT_MAX_CLOSURE,
        })
    }

    pub fn with_precision(mut self, precision: f64) -> Result<Self> {
        if !(precision > 0.0 && precision.is_finite()) {
            return Err(Error::Config(format!("precision must be positive, got {precision}")));
        }
        self.precision = precision;
        Ok(self)
    }

    pub fn with_max_closure(mut self, max_closure: usize) -> Self {
        self.max_closure = max_closure;
        self
    }

    pub fn with_k(mut self, k: Bound) -> Self {
        self.k = k;
        self
    }
}

/// The set of truncated backward vectors built by [`closure`].
#[derive(Clone, Debug)]
pub struct ClosureSet {
    vectors: Vec<FuzzyVec>,
    index: HashMap<Vec<i64>, usize>,
    frontier: Vec<usize>,
    steps: u64,
    rounds: usize,
    halted: bool,
}

impl ClosureSet {
    /// Stored vectors in insertion order.
    pub fn vectors(&self) -> &[FuzzyVec] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Indices (into [`ClosureSet::vectors`]) added in the last round.
    pub fn frontier(&self) -> &[usize] {
        &self.frontier
    }

    /// Number of `δ_σ ∘ε f` evaluations.
    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Rounds of the outer loop that ran.
    pub fn rounds(&self) -> usize {
        self.rounds
    }

    /// Whether the loop stopped because a round found nothing new.
    pub fn halted(&self) -> bool {
        self.halted
    }

    /// The smallest `k` giving the same set, when the loop halted early.
    pub fn stable_depth(&self) -> Option<usize> {
        self.halted.then(|| self.rounds - 1)
    }

    pub fn contains(&self, f: &[f64], precision: f64) -> bool {
        self.index.contains_key(&quantize(f, precision))
    }
}

/// `{(F_w)_ε : |w| ≤ k}`, breadth first, symbols in alphabet order.
pub fn closure(a: &Ffa, cfg: &ReductionConfig) -> Result<ClosureSet> {
    let eps = cfg.epsilon;
    let start = fuzzy::truncate_vec(a.final_states(), eps);
    let mut set = ClosureSet {
        index: HashMap::from([(start.key(cfg.precision), 0)]),
        vectors: vec![start],
        frontier: vec![0],
        steps: 0,
        rounds: 0,
        halted: false,
    };
    let limit = cfg.k.finite().unwrap_or(usize::MAX);
    while set.rounds < limit {
        set.rounds += 1;
        let mut next = Vec::new();
        for &fi in &set.frontier {
            for sym in 0..a.symbols() {
                let g = fuzzy::compose_eps_mv(a.delta(sym), &set.vectors[fi], eps, cfg.lattice)?;
                set.steps += 1;
                let key = g.key(cfg.precision);
                if !set.index.contains_key(&key) {
                    if set.vectors.len() >= cfg.max_closure {
                        return Err(Error::ClosureCapExceeded { cap: cfg.max_closure });
                    }
                    set.index.insert(key, set.vectors.len());
                    next.push(set.vectors.len());
                    set.vectors.push(g);
                }
            }
        }
        set.frontier = next;
        if set.frontier.is_empty() {
            set.halted = true;
            break;
        }
    }
    Ok(set)
}

/// `⋀ε { f /ε f : f ∈ 𝓕 }`.
pub fn greatest_right_invariance(set: &ClosureSet, cfg: &ReductionConfig) -> FuzzyMat {
    let n = set.vectors.first().map_or(0, |f| f.len());
    let (eps, lat) = (cfg.epsilon, cfg.lattice);
    FuzzyMat::from_fn(n, |a, b| {
        lattice::meet_eps(set.vectors.iter().map(|f| lat.residuum_eps(f[b], f[a], eps)), eps)
    })
}

/// Indices of the first state of each afterset class, ascending.
pub fn afterset_representatives(z: &FuzzyMat, precision: f64) -> Vec<usize> {
    let mut seen = HashMap::new();
    let mut reps = Vec::new();
    for q in 0..z.dim() {
        if seen.insert(quantize(z.row(q), precision), q).is_none() {
            reps.push(q);
        }
    }
    reps
}

/// The (Z,ε)-afterset automaton, with states relabelled `0..d` in the order of
/// their representatives. Returns the automaton and the representatives.
pub fn afterset_automaton(a: &Ffa, z: &FuzzyMat, cfg: &ReductionConfig) -> Result<(Ffa, Vec<usize>)> {
    if z.dim() != a.states() {
        return Err(Error::DimensionMismatch { expected: a.states(), found: z.dim() });
    }
    let (eps, lat) = (cfg.epsilon, cfg.lattice);
    if !fuzzy::is_eps_fpo_within(z, eps, lat, cfg.precision) {
        return Err(Error::NotEpsFpo { epsilon: eps });
    }
    let reps = afterset_representatives(z, cfg.precision);
    let cols: Vec<FuzzyVec> = reps.iter().map(|&q| z.column(q)).collect();

    let mut initial = Vec::with_capacity(reps.len());
    let mut fin = Vec::with_capacity(reps.len());
    for (i, &q) in reps.iter().enumerate() {
        initial.push(fuzzy::compose_eps_vv(a.initial(), &cols[i], eps, lat)?);
        fin.push(fuzzy::compose_eps_vv(z.row(q), a.final_states(), eps, lat)?);
    }
    let mut delta = Vec::with_capacity(a.symbols());
    for d in a.deltas() {
        let left: Vec<FuzzyVec> = reps
            .iter()
            .map(|&p| fuzzy::compose_eps_vm(z.row(p), d, eps, lat))
            .collect::<Result<_>>()?;
        let mut m = FuzzyMat::zeros(reps.len());
        for (i, row) in left.iter().enumerate() {
            for (j, col) in cols.iter().enumerate() {
                m[(i, j)] = fuzzy::compose_eps_vv(row, col, eps, lat)?;
            }
        }
        delta.push(m);
    }
    let out = Ffa::new(a.alphabet().to_vec(), FuzzyVec(initial), delta, FuzzyVec(fin))?;
    Ok((out, reps))
}

/// Statistics of one right reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightReduction {
    pub closure_steps: u64,
    pub closure_size: usize,
    pub closure_rounds: usize,
    pub representatives: Vec<usize>,
}

/// Closure, greatest right invariance and afterset quotient. When no two
/// states share an afterset the input is returned as is, not its quotient.
pub fn reduce_by_right_invariance(a: &Ffa, cfg: &ReductionConfig) -> Result<(Ffa, RightReduction)> {
    let set = closure(a, cfg)?;
    let z = greatest_right_invariance(&set, cfg);
    let (mut out, reps) = afterset_automaton(a, &z, cfg)?;
    if reps.len() == a.states() {
        out = a.clone();
    }
    Ok((
        out,
        RightReduction {
            closure_steps: set.steps(),
            closure_size: set.len(),
            closure_rounds: set.rounds(),
            representatives: reps,
        },
    ))
}

/// Counters accumulated over a reduction run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    pub while_loop_iterations: u64,
    pub closure_step_executions: u64,
    pub closure_vectors: u64,
    /// Representatives chosen by each right reduction, in call order.
    pub representatives: Vec<Vec<usize>>,
}

impl Counters {
    fn absorb(&mut self, r: RightReduction) {
        self.closure_step_executions += r.closure_steps;
        self.closure_vectors += r.closure_size as u64;
        self.representatives.push(r.representatives);
    }
}

/// Right reduction followed by a left one, repeated while the state count
/// strictly decreases. Returns the input unchanged if nothing shrinks.
pub fn soft_state_reduction_0(a: &Ffa, cfg: &ReductionConfig) -> Result<(Ffa, Counters)> {
    let mut counters = Counters::default();
    let out = ssr0(a, cfg, &mut counters)?;
    Ok((out, counters))
}

fn ssr0(a: &Ffa, cfg: &ReductionConfig, counters: &mut Counters) -> Result<Ffa> {
    let mut current = a.clone();
    loop {
        counters.while_loop_iterations += 1;
        let (a2, r2) = reduce_by_right_invariance(&current, cfg)?;
        counters.absorb(r2);
        let (a3_rev, r3) = reduce_by_right_invariance(&a2.reverse(), cfg)?;
        counters.absorb(r3);
        let a3 = a3_rev.reverse();
        if a3.states() < current.states() {
            current = a3;
        } else {
            return Ok(current);
        }
    }
}

/// Which of the two top-level runs produced the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Reduction of the trimmed automaton itself.
    Direct,
    /// Reduction of its reverse, reversed back. Chosen on ties.
    Reversed,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Direct => "direct",
            Branch::Reversed => "reversed",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionReport {
    pub result: Ffa,
    pub while_loop_iterations: u64,
    pub closure_step_executions: u64,
    /// Sum of closure sizes over all right reductions.
    pub closure_vectors: u64,
    /// `(label, states)` for `input`, `trimmed`, `direct`, `reversed`, `result`.
    pub phase_state_counts: Vec<(String, usize)>,
    pub representatives: Vec<Vec<usize>>,
    pub branch: Branch,
    /// Original indices of the states kept by trimming.
    pub kept_states: Vec<usize>,
}

impl ReductionReport {
    pub fn states(&self) -> usize {
        self.result.states()
    }
}

/// Trims `a`, then returns the smaller of the direct and the reversed soft
/// state reduction (the reversed one on ties).
pub fn soft_state_reduction(a: &Ffa, cfg: &ReductionConfig) -> Result<ReductionReport> {
    let (trimmed, kept) = a.trim();
    let mut report = reduce_trimmed(&trimmed, cfg)?;
    report.phase_state_counts.insert(0, ("input".into(), a.states()));
    report.kept_states = kept;
    Ok(report)
}

/// Same as [`soft_state_reduction`] but without the trimming step.
#[doc(hidden)]
pub fn soft_state_reduction_untrimmed(a: &Ffa, cfg: &ReductionConfig) -> Result<ReductionReport> {
    let mut report = reduce_trimmed(a, cfg)?;
    report.phase_state_counts.insert(0, ("input".into(), a.states()));
    report.kept_states = (0..a.states()).collect();
    Ok(report)
}

fn reduce_trimmed(a: &Ffa, cfg: &ReductionConfig) -> Result<ReductionReport> {
    let n = a.states();
    let mut counters = Counters::default();
    let (result, branch, direct, reversed) = if n == 0 {
        (a.clone(), Branch::Reversed, 0, 0)
    } else {
        let a2 = ssr0(a, cfg, &mut counters)?;
        let a3 = ssr0(&a.reverse(), cfg, &mut counters)?.reverse();
        let (d, r) = (a2.states(), a3.states());
        if d < r {
            (a2, Branch::Direct, d, r)
        } else {
            (a3, Branch::Reversed, d, r)
        }
    };
    let phase_state_counts = vec![
        ("trimmed".into(), n),
        ("direct".into(), direct),
        ("reversed".into(), reversed),
        ("result".into(), result.states()),
    ];
    Ok(ReductionReport {
        result,
        while_loop_iterations: counters.while_loop_iterations,
        closure_step_executions: counters.closure_step_executions,
        closure_vectors: counters.closure_vectors,
        phase_state_counts,
        representatives: counters.representatives,
        branch,
        kept_states: Vec::new(),
    })
}
