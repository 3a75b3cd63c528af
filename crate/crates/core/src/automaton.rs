//! Fuzzy finite automata `⟨Q, Σ, I, δ, F⟩` and their word semantics.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{self, FuzzyMat, FuzzyVec};
use crate::lattice::{Lattice, Value};

/// A word over the alphabet, as symbol indices. The empty word is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// `sym` repeated `times` times.
    pub fn power(sym: usize, times: usize) -> Self {
        Word(vec![sym; times])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Renders the word with symbol names, `ε` when empty.
    pub fn display<'a>(&'a self, alphabet: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, alphabet }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "ε");
        }
        let names: Vec<&str> = self
            .word
            .0
            .iter()
            .map(|&j| self.alphabet.get(j).map(String::as_str).unwrap_or("?"))
            .collect();
        write!(f, "{}", names.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Ffa {
    alphabet: Vec<String>,
    initial: FuzzyVec,
    delta: Vec<FuzzyMat>,
    fin: FuzzyVec,
}

impl Ffa {
    /// Validates dimensions and value ranges.
    pub fn new(alphabet: Vec<String>, initial: FuzzyVec, delta: Vec<FuzzyMat>, fin: FuzzyVec) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if delta.len() != alphabet.len() {
            return Err(Error::DimensionMismatch { expected: alphabet.len(), found: delta.len() });
        }
        let n = initial.len();
        if fin.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: fin.len() });
        }
        for m in &delta {
            if m.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: m.dim() });
            }
        }
        for &x in initial.iter().chain(fin.iter()).chain(delta.iter().flat_map(|m| m.values())) {
            Value::new(x)?;
        }
        Ok(Ffa { alphabet, initial, delta, fin })
    }

    /// Symbols named `"0"`, `"1"`, ….
    pub fn with_numbered_symbols(initial: FuzzyVec, delta: Vec<FuzzyMat>, fin: FuzzyVec) -> Result<Self> {
        let alphabet = (0..delta.len()).map(|j| j.to_string()).collect();
        Ffa::new(alphabet, initial, delta, fin)
    }

    pub fn states(&self) -> usize {
        self.initial.len()
    }

    pub fn symbols(&self) -> usize {
        self.alphabet.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn initial(&self) -> &FuzzyVec {
        &self.initial
    }

    pub fn final_states(&self) -> &FuzzyVec {
        &self.fin
    }

    pub fn delta(&self, sym: usize) -> &FuzzyMat {
        &self.delta[sym]
    }

    pub fn deltas(&self) -> &[FuzzyMat] {
        &self.delta
    }

    pub fn symbol_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == name)
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        match w.0.iter().find(|&&j| j >= self.symbols()) {
            Some(&symbol) => Err(Error::BadSymbol { symbol, alphabet: self.symbols() }),
            None => Ok(()),
        }
    }

    /// `δ_w`, with `δ_ε` the identity.
    pub fn delta_word(&self, w: &Word, lat: Lattice) -> Result<FuzzyMat> {
        self.check_word(w)?;
        let mut acc = FuzzyMat::identity(self.states());
        for &j in &w.0 {
            acc = fuzzy::compose_mm(&acc, &self.delta[j], lat)?;
        }
        Ok(acc)
    }

    /// `I_w = I ∘ δ_w`, folded left to right.
    pub fn forward(&self, w: &Word, lat: Lattice) -> Result<FuzzyVec> {
        self.check_word(w)?;
        let mut v = self.initial.clone();
        for &j in &w.0 {
            v = fuzzy::compose_vm(&v, &self.delta[j], lat)?;
        }
        Ok(v)
    }

    /// `F_w = δ_w ∘ F`, folded right to left.
    pub fn backward(&self, w: &Word, lat: Lattice) -> Result<FuzzyVec> {
        self.check_word(w)?;
        let mut v = self.fin.clone();
        for &j in w.0.iter().rev() {
            v = fuzzy::compose_mv(&self.delta[j], &v, lat)?;
        }
        Ok(v)
    }

    /// `L(A)(w)`.
    pub fn language_degree(&self, w: &Word, lat: Lattice) -> Result<f64> {
        let fw = self.forward(w, lat)?;
        fuzzy::compose_vv(&fw, &self.fin, lat)
    }

    /// Transposed transitions with initial and final degrees swapped.
    pub fn reverse(&self) -> Ffa {
        Ffa {
            alphabet: self.alphabet.clone(),
            initial: self.fin.clone(),
            delta: self.delta.iter().map(FuzzyMat::transpose).collect(),
            fin: self.initial.clone(),
        }
    }

    /// The sub-automaton on `keep`, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Ffa {
        Ffa {
            alphabet: self.alphabet.clone(),
            initial: FuzzyVec(keep.iter().map(|&q| self.initial[q]).collect()),
            delta: self.delta.iter().map(|m| m.restrict(keep)).collect(),
            fin: FuzzyVec(keep.iter().map(|&q| self.fin[q]).collect()),
        }
    }

    /// States reachable from the support of `I` along positive transitions.
    pub fn reachable(&self) -> Vec<bool> {
        self.support_closure(&self.initial, false)
    }

    /// States from which the support of `F` is reachable.
    pub fn productive(&self) -> Vec<bool> {
        self.support_closure(&self.fin, true)
    }

    fn support_closure(&self, start: &FuzzyVec, backwards: bool) -> Vec<bool> {
        let n = self.states();
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = start.support().into();
        for &q in &queue {
            seen[q] = true;
        }
        while let Some(p) = queue.pop_front() {
            for m in &self.delta {
                for q in 0..n {
                    let v = if backwards { m[(q, p)] } else { m[(p, q)] };
                    if v > 0.0 && !seen[q] {
                        seen[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        seen
    }

    /// Drops every state that is unreachable or unproductive. Returns the
    /// trimmed automaton and the original indices of the kept states.
    pub fn trim(&self) -> (Ffa, Vec<usize>) {
        let reach = self.reachable();
        let prod = self.productive();
        let keep: Vec<usize> = (0..self.states()).filter(|&q| reach[q] && prod[q]).collect();
        (self.restrict(&keep), keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Lattice = Lattice::Product;

    fn fig1() -> Ffa {
        let mut d = FuzzyMat::zeros(7);
        for (i, j, v) in [
            (0, 1, 0.6),
            (1, 2, 0.8),
            (2, 0, 0.4),
            (3, 4, 1.0),
            (4, 1, 0.5),
            (4, 5, 0.4),
            (5, 2, 0.7),
            (5, 6, 0.8),
            (6, 4, 0.4),
        ] {
            d[(i, j)] = v;
        }
        Ffa::new(
            vec!["σ".into()],
            FuzzyVec(vec![1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0]),
            vec![d],
            FuzzyVec(vec![0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.5]),
        )
        .unwrap()
    }

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-12)
    }

    #[test]
    fn construction_is_validated() {
        let a = fig1();
        assert!(Ffa::new(vec![], a.initial().clone(), vec![], a.final_states().clone()).is_err());
        assert!(Ffa::new(vec!["a".into()], FuzzyVec(vec![1.0]), vec![FuzzyMat::identity(2)], FuzzyVec(vec![1.0])).is_err());
        assert!(matches!(
            Ffa::new(vec!["a".into()], FuzzyVec(vec![1.2]), vec![FuzzyMat::identity(1)], FuzzyVec(vec![1.0])),
            Err(Error::ValueOutOfRange(_))
        ));
        assert!(matches!(a.forward(&Word(vec![1]), P), Err(Error::BadSymbol { symbol: 1, alphabet: 1 })));
    }

    #[test]
    fn word_semantics() {
        let a = fig1();
        assert_eq!(a.delta_word(&Word::empty(), P).unwrap(), FuzzyMat::identity(7));
        assert_eq!(&a.delta_word(&Word(vec![0]), P).unwrap(), a.delta(0));
        let d = a.delta(0);
        assert_eq!(a.delta_word(&Word::power(0, 2), P).unwrap(), fuzzy::compose_mm(d, d, P).unwrap());

        assert!(close(&a.backward(&Word::power(0, 3), P).unwrap(), &[0.0, 0.0, 0.096, 0.2, 0.0, 0.0, 0.08]));
        assert!(close(&a.backward(&Word::power(0, 4), P).unwrap(), &[0.0, 0.0768, 0.0, 0.0, 0.0, 0.0672, 0.0]));
        assert_eq!(a.forward(&Word::empty(), P).unwrap(), *a.initial());

        assert_eq!(a.language_degree(&Word::empty(), P).unwrap(), 0.0);
        assert!((a.language_degree(&Word::power(0, 2), P).unwrap() - 0.24).abs() < 1e-12);
        assert!((a.language_degree(&Word::power(0, 3), P).unwrap() - 0.2).abs() < 1e-12);
        for k in 0..6 {
            let w = Word::power(0, k);
            let via_back = fuzzy::compose_vv(a.initial(), &a.backward(&w, P).unwrap(), P).unwrap();
            assert!((a.language_degree(&w, P).unwrap() - via_back).abs() < 1e-15);
        }
    }

    #[test]
    fn reverse_is_an_involution() {
        let a = fig1();
        assert_eq!(a.reverse().reverse(), a);
        let one = Ffa::new(vec!["a".into()], FuzzyVec(vec![0.4]), vec![FuzzyMat::constant(1, 0.3)], FuzzyVec(vec![0.4]))
            .unwrap();
        assert_eq!(one.reverse(), one);
    }

    #[test]
    fn trim_examples() {
        let a = fig1();
        let (t, keep) = a.trim();
        assert_eq!(keep, (0..7).collect::<Vec<_>>());
        assert_eq!(t, a);

        let mut chain = FuzzyMat::zeros(3);
        chain[(0, 1)] = 0.5;
        chain[(1, 2)] = 0.5;
        let dead = Ffa::new(vec!["a".into()], FuzzyVec(vec![1.0, 0.0, 0.0]), vec![chain], FuzzyVec::zeros(3)).unwrap();
        let (t, keep) = dead.trim();
        assert_eq!(t.states(), 0);
        assert!(keep.is_empty());
        assert_eq!(t.language_degree(&Word::power(0, 2), P).unwrap(), 0.0);

        let full = Ffa::new(
            vec!["a".into()],
            FuzzyVec(vec![0.2, 0.3]),
            vec![FuzzyMat::zeros(2)],
            FuzzyVec(vec![0.4, 0.5]),
        )
        .unwrap();
        assert_eq!(full.trim().0, full);
    }

    #[test]
    fn word_rendering() {
        let names = vec!["a".to_string(), "b".to_string()];
        assert_eq!(Word(vec![0, 1, 1]).display(&names).to_string(), "a b b");
        assert_eq!(Word::empty().display(&names).to_string(), "ε");
        assert_eq!(Word(vec![0, 1]).reversed(), Word(vec![1, 0]));
    }
}
