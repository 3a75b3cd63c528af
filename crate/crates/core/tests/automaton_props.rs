mod common;

use common::{automaton, lattice, rich_automaton};
use fuzzred::oracle::{check_eps_equivalent, language_table, Verdict};
use fuzzred::{Ffa, Word};
use proptest::prelude::*;

fn words(s: usize, k: usize) -> Vec<Word> {
    let mut all = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..k {
        layer = layer
            .iter()
            .flat_map(|w| (0..s).map(move |c| Word(w.0.iter().copied().chain([c]).collect())))
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn forward_equals_backward(a in rich_automaton(6), lat in lattice()) {
        for w in words(a.symbols(), 5) {
            let fwd = fuzzred::fuzzy::compose_vv(&a.forward(&w, lat).unwrap(), a.final_states(), lat).unwrap();
            let bwd = fuzzred::fuzzy::compose_vv(a.initial(), &a.backward(&w, lat).unwrap(), lat).unwrap();
            prop_assert!((fwd - bwd).abs() < 1e-12, "{:?}: {} vs {}", w, fwd, bwd);
        }
    }

    #[test]
    fn trim_preserves_language(a in padded(), lat in lattice()) {
        let (t, kept) = a.trim();
        prop_assert_eq!(t.states(), kept.len());
        let v = check_eps_equivalent(&a, &t, 0.0, 6, lat).unwrap();
        prop_assert!(v.is_equal(), "{:?}", v);
    }

    #[test]
    fn reachability_matches_words(a in padded()) {
        let reach = a.reachable();
        let prod = a.productive();
        let n = a.states();
        let ws = words(a.symbols(), n);
        let lat = fuzzred::Lattice::Godel;
        for q in 0..n {
            let by_words = ws.iter().any(|w| a.forward(w, lat).unwrap()[q] > 0.0);
            prop_assert_eq!(reach[q], by_words, "reachable {}", q);
            let by_words = ws.iter().any(|w| a.backward(w, lat).unwrap()[q] > 0.0);
            prop_assert_eq!(prod[q], by_words, "productive {}", q);
        }
    }

    #[test]
    fn reverse_language_law(a in automaton(6), lat in lattice()) {
        let k = 5;
        let t = language_table(&a, k, lat).unwrap();
        let r = language_table(&a.reverse(), k, lat).unwrap();
        for (w, d) in t.iter() {
            let back = r.degree(&w.reversed()).unwrap();
            prop_assert!((d - back).abs() < 1e-12, "{:?}", w);
        }
    }

    #[test]
    fn self_equivalence(a in automaton(5), lat in lattice()) {
        prop_assert_eq!(check_eps_equivalent(&a, &a, 0.0, 4, lat).unwrap(), Verdict::Equal);
    }
}

/// Random automata with some rows and initial/final entries cleared, so that
/// trimming has something to remove.
fn padded() -> impl Strategy<Value = Ffa> {
    (automaton(6), any::<u64>()).prop_map(|(a, mask)| {
        let n = a.states();
        let bit = |i: usize| mask >> (i % 64) & 1 == 1;
        let clear = |v: &[f64], off: usize| {
            fuzzred::FuzzyVec(v.iter().enumerate().map(|(i, &x)| if bit(i + off) { 0.0 } else { x }).collect())
        };
        let deltas = a
            .deltas()
            .iter()
            .enumerate()
            .map(|(s, d)| fuzzred::FuzzyMat::from_fn(n, |i, j| if bit(7 * i + 3 * j + 11 * s + 20) { 0.0 } else { d[(i, j)] }))
            .collect();
        Ffa::new(a.alphabet().to_vec(), clear(a.initial(), 0), deltas, clear(a.final_states(), 10)).unwrap()
    })
}
