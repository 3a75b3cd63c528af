//! Brute-force checks over all words up to a length bound.
//!
//! Nothing here goes through the closure or residual machinery of
//! [`crate::reduction`]: languages are evaluated word by word with exact
//! compositions, so the results can be used to validate reductions.

use crate::automaton::{Ffa, Word};
use crate::error::{Error, Result};
use crate::fuzzy::{self, FuzzyMat, FuzzyVec};
use crate::lattice::{self, Lattice};
use crate::reduction::{closure, Bound, ReductionConfig};

/// Maximum number of words any enumeration may visit.
pub const WORD_BUDGET: u128 = 1_000_000;

/// Slack for comparisons between degrees computed along different paths.
pub const ORACLE_TOLERANCE: f64 = 1e-9;

/// Number of words of length at most `k` over `s` symbols.
pub fn word_count(s: usize, k: usize) -> u128 {
    let s = s as u128;
    let mut total: u128 = 0;
    let mut level: u128 = 1;
    for _ in 0..=k {
        total = total.saturating_add(level);
        level = level.saturating_mul(s);
    }
    total
}

fn check_budget(s: usize, k: usize) -> Result<usize> {
    let needed = word_count(s, k);
    if needed > WORD_BUDGET {
        Err(Error::BudgetExceeded { needed, budget: WORD_BUDGET })
    } else {
        Ok(needed as usize)
    }
}

/// Degrees of every word of length `≤ k`, in length-then-lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct LanguageTable {
    k: usize,
    symbols: usize,
    degrees: Vec<f64>,
}

impl LanguageTable {
    pub fn max_len(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degrees(&self) -> &[f64] {
        &self.degrees
    }

    fn offset(&self, len: usize) -> usize {
        match len {
            0 => 0,
            l => word_count(self.symbols, l - 1) as usize,
        }
    }

    /// Position of `w` in the table, if it is short enough.
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        if w.len() > self.k || w.0.iter().any(|&j| j >= self.symbols) {
            return None;
        }
        let rank = w.0.iter().fold(0usize, |acc, &j| acc * self.symbols + j);
        Some(self.offset(w.len()) + rank)
    }

    pub fn word_at(&self, index: usize) -> Word {
        let mut len = 0;
        while len < self.k && self.offset(len + 1) <= index {
            len += 1;
        }
        let mut rank = index - self.offset(len);
        let mut w = vec![0; len];
        for slot in w.iter_mut().rev() {
            *slot = rank % self.symbols;
            rank /= self.symbols;
        }
        Word(w)
    }

    pub fn degree(&self, w: &Word) -> Option<f64> {
        self.index_of(w).map(|i| self.degrees[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Word, f64)> + '_ {
        self.degrees.iter().enumerate().map(|(i, &d)| (self.word_at(i), d))
    }
}

/// `L^{≤k}(A)` by depth-first enumeration, one forward vector per prefix.
pub fn language_table(a: &Ffa, k: usize, lat: Lattice) -> Result<LanguageTable> {
    let total = check_budget(a.symbols(), k)?;
    let mut table = LanguageTable { k, symbols: a.symbols(), degrees: vec![0.0; total] };
    let mut word = Vec::with_capacity(k);
    visit_forward(a, lat, a.initial().clone(), &mut word, k, &mut table)?;
    Ok(table)
}

fn visit_forward(
    a: &Ffa,
    lat: Lattice,
    fw: FuzzyVec,
    word: &mut Vec<usize>,
    k: usize,
    table: &mut LanguageTable,
) -> Result<()> {
    let w = Word(word.clone());
    let i = table.index_of(&w).expect("within bound");
    table.degrees[i] = fuzzy::compose_vv(&fw, a.final_states(), lat)?;
    if word.len() == k {
        return Ok(());
    }
    for j in 0..a.symbols() {
        let next = fuzzy::compose_vm(&fw, a.delta(j), lat)?;
        word.push(j);
        visit_forward(a, lat, next, word, k, table)?;
        word.pop();
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Equal,
    /// First differing word in length-then-lexicographic order.
    Counterexample { word: Word, left: f64, right: f64 },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal)
    }
}

/// `x =ε y` with [`ORACLE_TOLERANCE`] slack on each side.
pub fn eq_eps_tolerant(x: f64, y: f64, eps: f64) -> bool {
    let leq = |p: f64, q: f64| p <= q + ORACLE_TOLERANCE || p <= eps + ORACLE_TOLERANCE;
    leq(x, y) && leq(y, x)
}

/// Compares `L^{≤k}(a)` and `L^{≤k}(b)` up to ε.
pub fn check_eps_equivalent(a: &Ffa, b: &Ffa, eps: f64, k: usize, lat: Lattice) -> Result<Verdict> {
    if a.symbols() != b.symbols() {
        return Err(Error::AlphabetMismatch { left: a.symbols(), right: b.symbols() });
    }
    let ta = language_table(a, k, lat)?;
    let tb = language_table(b, k, lat)?;
    for (i, (&x, &y)) in ta.degrees.iter().zip(&tb.degrees).enumerate() {
        if !eq_eps_tolerant(x, y, eps) {
            return Ok(Verdict::Counterexample { word: ta.word_at(i), left: x, right: y });
        }
    }
    Ok(Verdict::Equal)
}

/// Every distinct `F_w` with `|w| ≤ k`, computed with exact compositions.
fn backward_vectors(a: &Ffa, k: usize, lat: Lattice) -> Result<Vec<FuzzyVec>> {
    check_budget(a.symbols(), k)?;
    let mut out = vec![a.final_states().clone()];
    let mut level = vec![a.final_states().clone()];
    for _ in 0..k {
        let mut next = Vec::new();
        for f in &level {
            for d in a.deltas() {
                next.push(fuzzy::compose_mv(d, f, lat)?);
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out.sort_by(|x, y| x.0.partial_cmp(&y.0).expect("no NaN"));
    out.dedup();
    Ok(out)
}

fn row_is_invariant(row: &[f64], a: usize, vectors: &[FuzzyVec], eps: f64, lat: Lattice) -> bool {
    vectors.iter().all(|f| {
        let lhs = row.iter().zip(f.iter()).fold(0.0_f64, |m, (&z, &x)| m.max(lat.tnorm(z, x)));
        lhs <= f[a] + ORACLE_TOLERANCE || lhs <= eps + ORACLE_TOLERANCE
    })
}

fn is_right_invariance(z: &FuzzyMat, vectors: &[FuzzyVec], eps: f64, lat: Lattice) -> bool {
    z.is_reflexive() && (0..z.dim()).all(|a| row_is_invariant(z.row(a), a, vectors, eps, lat))
}

/// Whether `z` is reflexive and `z ∘ F_w =ε F_w` for every `|w| ≤ k`.
pub fn verify_right_invariance(a: &Ffa, z: &FuzzyMat, eps: f64, k: usize, lat: Lattice) -> Result<bool> {
    if z.dim() != a.states() {
        return Err(Error::DimensionMismatch { expected: a.states(), found: z.dim() });
    }
    let vectors = backward_vectors(a, k, lat)?;
    Ok(is_right_invariance(z, &vectors, eps, lat))
}

/// Exhaustive search for a right (ε,k)-invariance not below `z`.
///
/// Candidates are reflexive matrices whose off-diagonal entries come from the
/// values of `f /ε f` over the closure, together with ε, 1 and the entries of
/// `z`. The invariance condition is checked row by row, so each row is
/// enumerated independently. Returns `true` iff `z` is an invariance and
/// every candidate invariance lies entrywise below it.
pub fn verify_greatest(a: &Ffa, z: &FuzzyMat, eps: f64, k: usize, lat: Lattice) -> Result<bool> {
    let n = a.states();
    if z.dim() != n {
        return Err(Error::DimensionMismatch { expected: n, found: z.dim() });
    }
    let vectors = backward_vectors(a, k, lat)?;
    if !is_right_invariance(z, &vectors, eps, lat) {
        return Ok(false);
    }
    let grid = candidate_grid(a, z, eps, k, lat)?;
    let per_row = (grid.len() as u128).saturating_pow(n.saturating_sub(1) as u32);
    let needed = per_row.saturating_mul(n as u128);
    if needed > WORD_BUDGET {
        return Err(Error::BudgetExceeded { needed, budget: WORD_BUDGET });
    }
    let mut row = vec![0.0; n];
    for a_idx in 0..n {
        let others: Vec<usize> = (0..n).filter(|&b| b != a_idx).collect();
        let mut digits = vec![0usize; others.len()];
        loop {
            row[a_idx] = 1.0;
            for (slot, &b) in others.iter().enumerate() {
                row[b] = grid[digits[slot]];
            }
            if row_is_invariant(&row, a_idx, &vectors, eps, lat)
                && row.iter().zip(z.row(a_idx)).any(|(&c, &zv)| c > zv + ORACLE_TOLERANCE)
            {
                return Ok(false);
            }
            // odometer increment
            let mut pos = 0;
            while pos < digits.len() {
                digits[pos] += 1;
                if digits[pos] < grid.len() {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == digits.len() {
                break;
            }
        }
    }
    Ok(true)
}

fn candidate_grid(a: &Ffa, z: &FuzzyMat, eps: f64, k: usize, lat: Lattice) -> Result<Vec<f64>> {
    let cfg = ReductionConfig::new(eps, Bound::Finite(k), lat)?;
    let set = closure(a, &cfg)?;
    let mut grid = vec![eps, 1.0];
    for f in set.vectors() {
        let r = fuzzy::right_residual_eps(f, f, eps, lat)?;
        grid.extend_from_slice(r.values());
    }
    grid.extend_from_slice(z.values());
    grid.retain(|&x| lattice::Value::new(x).is_ok());
    grid.sort_by(|x, y| x.partial_cmp(y).expect("no NaN"));
    grid.dedup();
    Ok(grid)
}
