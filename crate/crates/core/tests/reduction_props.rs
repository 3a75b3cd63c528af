mod common;

use common::{automaton, lattice, rich_automaton};
use fuzzred::fuzzy::{self, FuzzyMat};
use fuzzred::oracle::{check_eps_equivalent, verify_greatest, verify_right_invariance, Verdict};
use fuzzred::reduction::{
    afterset_representatives, closure, greatest_right_invariance, reduce_by_right_invariance,
    soft_state_reduction, Bound, ReductionConfig,
};
use fuzzred::{Ffa, Lattice};
use proptest::prelude::*;

const TOL: f64 = 1e-9;

fn cfg(e: f64, k: Bound, lat: Lattice) -> ReductionConfig {
    ReductionConfig::new(e, k, lat).unwrap()
}

fn invariance(a: &Ffa, c: &ReductionConfig) -> FuzzyMat {
    greatest_right_invariance(&closure(a, c).unwrap(), c)
}

fn dominates(big: &FuzzyMat, small: &FuzzyMat) -> bool {
    big.values().iter().zip(small.values()).all(|(&b, &s)| b >= s - TOL)
}

type Case = (Ffa, f64, Bound, Lattice);

fn locally_small() -> impl Strategy<Value = Lattice> {
    prop::sample::select(vec![Lattice::Godel, Lattice::Lukasiewicz, Lattice::Nilpotent])
}

/// Unbounded runs whose closure stays small: single-generator grids with ε > 0,
/// or Gödel, Łukasiewicz and nilpotent minimum on any grid.
fn unbounded_case() -> impl Strategy<Value = Case> {
    prop_oneof![
        (automaton(7), prop::sample::select(vec![0.05, 0.1, 0.2, 0.3]), lattice()),
        (rich_automaton(7), prop::sample::select(vec![0.0, 0.05, 0.1, 0.2]), locally_small()),
    ]
    .prop_map(|(a, e, lat)| (a, e, Bound::Infinite, lat))
}

fn case() -> impl Strategy<Value = Case> {
    prop_oneof![
        unbounded_case(),
        (rich_automaton(7), prop::sample::select(vec![0.0, 0.1]), 1..=5usize, lattice())
            .prop_map(|(a, e, k, lat)| (a, e, Bound::Finite(k), lat)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_sound((a, e, k, lat) in case()) {
        let r = soft_state_reduction(&a, &cfg(e, k, lat)).unwrap();
        prop_assert!(r.states() <= a.states());
        let v = check_eps_equivalent(&a, &r.result, e, k.min(7), lat).unwrap();
        prop_assert_eq!(v, Verdict::Equal);
    }

    #[test]
    fn product_at_zero_is_sound(a in automaton(6), k in prop_oneof![Just(Bound::Infinite), (1..=6usize).prop_map(Bound::Finite)]) {
        let r = soft_state_reduction(&a, &cfg(0.0, k, Lattice::Product)).unwrap();
        prop_assert_eq!(check_eps_equivalent(&a, &r.result, 0.0, k.min(7), Lattice::Product).unwrap(), Verdict::Equal);
    }

    #[test]
    fn invariance_passes_oracle((a, e, k, lat) in case()) {
        let z = invariance(&a, &cfg(e, k, lat));
        prop_assert!(z.is_reflexive());
        prop_assert!(verify_right_invariance(&a, &z, e, k.min(6), lat).unwrap());
    }

    #[test]
    fn invariance_grows_as_k_shrinks(a in rich_automaton(6), e in prop::sample::select(vec![0.0, 0.1]), lat in lattice(), k in 1..5usize) {
        let z_small = invariance(&a, &cfg(e, Bound::Finite(k), lat));
        let z_big = invariance(&a, &cfg(e, Bound::Finite(k + 1), lat));
        prop_assert!(dominates(&z_small, &z_big));
        let (n_small, n_big) = (afterset_representatives(&z_small, 1e-12).len(), afterset_representatives(&z_big, 1e-12).len());
        prop_assert!(n_small <= n_big, "{} classes at k={}, {} at k={}", n_small, k, n_big, k + 1);
    }

    #[test]
    fn invariance_grows_with_eps(a in rich_automaton(6), lat in lattice(), k in 1..5usize, i in 0..3usize) {
        let (lo, hi) = [(0.0, 0.1), (0.05, 0.2), (0.1, 0.3)][i];
        let z_lo = invariance(&a, &cfg(lo, Bound::Finite(k), lat));
        let z_hi = invariance(&a, &cfg(hi, Bound::Finite(k), lat));
        prop_assert!(dominates(&z_hi, &z_lo));
    }

    #[test]
    fn single_pass_states_fall_with_eps((a, _, k, lat) in case()) {
        let mut last = usize::MAX;
        for e in [0.05, 0.1, 0.2, 0.3] {
            let (out, _) = reduce_by_right_invariance(&a, &cfg(e, k, lat)).unwrap();
            prop_assert!(out.states() <= last, "ε={}: {} states after {}", e, out.states(), last);
            last = out.states();
        }
    }

    #[test]
    fn closure_halts_at_its_depth((a, e, _, lat) in unbounded_case()) {
        let full = cfg(e, Bound::Infinite, lat);
        let set = closure(&a, &full).unwrap();
        let depth = set.stable_depth().unwrap();
        let bounded = full.with_k(Bound::Finite(depth));
        prop_assert_eq!(invariance(&a, &bounded), greatest_right_invariance(&set, &full));
        if depth > 0 {
            let shorter = full.with_k(Bound::Finite(depth - 1));
            prop_assert!(closure(&a, &shorter).unwrap().len() < set.len());
        }
    }

    #[test]
    fn reduction_is_deterministic((a, e, k, lat) in case()) {
        let c = cfg(e, k, lat);
        prop_assert_eq!(soft_state_reduction(&a, &c).unwrap(), soft_state_reduction(&a, &c).unwrap());
    }

    #[test]
    fn quotient_is_eps_fpo_quotient((a, e, k, lat) in case()) {
        let c = cfg(e, k, lat);
        let z = invariance(&a, &c);
        prop_assert!(fuzzy::is_eps_fpo_within(&z, e, lat, 1e-12));
        let (out, _) = reduce_by_right_invariance(&a, &c).unwrap();
        prop_assert_eq!(out.states(), afterset_representatives(&z, 1e-12).len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn invariance_is_greatest_on_tiny_instances(a in automaton(3), e in prop::sample::select(vec![0.0, 0.1, 0.25]), lat in lattice(), k in 1..=3usize) {
        let z = invariance(&a, &cfg(e, Bound::Finite(k), lat));
        prop_assert!(verify_greatest(&a, &z, e, k, lat).unwrap());
    }
}
