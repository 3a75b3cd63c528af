#![allow(dead_code)]

use fuzzred::format::{self, Format};
use fuzzred::fuzzy::{FuzzyMat, FuzzyVec};
use fuzzred::sweep::{generate_random, ValueSet};
use fuzzred::{Ffa, Lattice};
use proptest::prelude::*;

pub fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn data_text(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).unwrap()
}

pub fn data_format(text: &str) -> Format {
    if text.lines().any(|l| l.starts_with("states")) {
        Format::Sparse
    } else {
        Format::Dense
    }
}

pub fn load(name: &str) -> Ffa {
    let text = data_text(name);
    format::parse_automaton(&text, data_format(&text)).unwrap()
}

pub fn structures() -> Vec<Lattice> {
    let mut v = Lattice::all().to_vec();
    v.push(Lattice::hamacher(0.5).unwrap());
    v.push(Lattice::hamacher(3.0).unwrap());
    v
}

pub fn lattice() -> impl Strategy<Value = Lattice> {
    prop::sample::select(structures())
}

/// Multiples of 1/16, so products and sums are exact.
pub fn dyadic() -> impl Strategy<Value = f64> {
    (0..=16u32).prop_map(|k| k as f64 / 16.0)
}

pub fn value() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(1.0), (0..=20u32).prop_map(|k| k as f64 / 20.0), 0.0..=1.0f64]
}

pub fn fvec(n: usize) -> impl Strategy<Value = FuzzyVec> {
    prop::collection::vec(value(), n).prop_map(FuzzyVec)
}

pub fn fmat(n: usize) -> impl Strategy<Value = FuzzyMat> {
    prop::collection::vec(prop::collection::vec(value(), n), n).prop_map(|rows| FuzzyMat::from_rows(rows).unwrap())
}

pub fn grid(i: usize) -> ValueSet {
    ValueSet::Grid(match i % 4 {
        0 => vec![0.5, 1.0],
        1 => vec![0.25, 0.5, 1.0],
        2 => vec![1.0 / 3.0, 1.0],
        _ => vec![0.6, 1.0],
    })
}

/// Small random automata over single-generator grids.
pub fn automaton(max_states: usize) -> impl Strategy<Value = Ffa> {
    (1..=max_states, 1..=2usize, 1..=10u32, 0..4usize, any::<u64>())
        .prop_map(|(n, s, d, g, seed)| generate_random(n, s, d as f64 / 10.0, &grid(g), seed).unwrap())
}

/// Random automata over a richer grid; only for ε > 0 or bounded k.
pub fn rich_automaton(max_states: usize) -> impl Strategy<Value = Ffa> {
    (1..=max_states, 1..=2usize, 1..=10u32, any::<u64>()).prop_map(|(n, s, d, seed)| {
        let g = ValueSet::Grid((1..=10).map(|v| v as f64 / 10.0).collect());
        generate_random(n, s, d as f64 / 10.0, &g, seed).unwrap()
    })
}
