//! Brute-force oracles, independent of the family scans in the library.
//!
//! Closure is checked as "the least closed superset", found by searching the
//! whole grid for a closed superset below every other closed superset; interior
//! dually. Topology counts are checked against closed forms and against a
//! second construction that collects distinct completions of every generator
//! subset.

use std::collections::BTreeSet;
use std::sync::Arc;

use fuzzbound_core::boundary::{boundary, cuchillo_ibanez_boundary, pu_liu_boundary, warren_boundary};
use fuzzbound_core::search::enumerate::{count_topologies, enumerate_fuzzy_sets, enumerate_topologies};
use fuzzbound_core::search::pool::example_space;
use fuzzbound_core::search::{random_topology, SearchRng};
use fuzzbound_core::topology::{complete_family, DEFAULT_COMPLETION_CAP};
use fuzzbound_core::{Carrier, FuzzySet, FuzzyTopology};

fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn grid(t: &FuzzyTopology) -> Vec<Vec<u32>> {
    enumerate_fuzzy_sets(t.carrier(), t.denominator())
        .map(|s| s.values().to_vec())
        .collect()
}

fn is_open_raw(t: &FuzzyTopology, v: &[u32]) -> bool {
    t.opens().iter().any(|u| u.values() == v)
}

fn is_closed_raw(t: &FuzzyTopology, v: &[u32]) -> bool {
    let d = t.denominator();
    let comp: Vec<u32> = v.iter().map(|x| d - x).collect();
    is_open_raw(t, &comp)
}

/// Least element of `{ C closed : A <= C }`, searched over the whole grid.
fn closure_oracle(t: &FuzzyTopology, a: &[u32]) -> Vec<u32> {
    let supersets: Vec<Vec<u32>> = grid(t)
        .into_iter()
        .filter(|c| is_closed_raw(t, c) && leq(a, c))
        .collect();
    supersets
        .iter()
        .find(|c| supersets.iter().all(|other| leq(c, other)))
        .expect("closed supersets have a least element")
        .clone()
}

/// Greatest element of `{ U open : U <= A }`.
fn interior_oracle(t: &FuzzyTopology, a: &[u32]) -> Vec<u32> {
    let subsets: Vec<Vec<u32>> = grid(t).into_iter().filter(|u| is_open_raw(t, u) && leq(u, a)).collect();
    subsets
        .iter()
        .find(|u| subsets.iter().all(|other| leq(other, u)))
        .expect("open subsets have a greatest element")
        .clone()
}

fn pointwise_min(family: &[Vec<u32>], n: usize, d: u32) -> Vec<u32> {
    (0..n).map(|x| family.iter().map(|v| v[x]).min().unwrap_or(d)).collect()
}

/// Infimum of closed sets dominating `cl A` on the support selected by `in_support`.
fn dominated_inf_oracle(t: &FuzzyTopology, a: &[u32], in_support: impl Fn(usize) -> bool) -> Vec<u32> {
    let cl = closure_oracle(t, a);
    let n = a.len();
    let admissible: Vec<Vec<u32>> = grid(t)
        .into_iter()
        .filter(|c| is_closed_raw(t, c))
        .filter(|c| (0..n).filter(|&x| in_support(x)).all(|x| c[x] >= cl[x]))
        .collect();
    pointwise_min(&admissible, n, t.denominator())
}

fn warren_oracle(t: &FuzzyTopology, a: &[u32]) -> Vec<u32> {
    let d = t.denominator();
    let cl = closure_oracle(t, a);
    let comp: Vec<u32> = a.iter().map(|x| d - x).collect();
    let cl_c = closure_oracle(t, &comp);
    dominated_inf_oracle(t, a, |x| cl[x].min(cl_c[x]) > 0)
}

fn cit_oracle(t: &FuzzyTopology, a: &[u32]) -> Vec<u32> {
    let cl = closure_oracle(t, a);
    let int = interior_oracle(t, a);
    dominated_inf_oracle(t, a, |x| cl[x] > int[x])
}

fn bd_oracle(t: &FuzzyTopology, a: &[u32]) -> Vec<u32> {
    let int_cl = interior_oracle(t, &closure_oracle(t, a));
    let cl_int = closure_oracle(t, &interior_oracle(t, a));
    int_cl.iter().zip(&cl_int).map(|(x, y)| *x.min(y)).collect()
}

fn sample_spaces() -> Vec<FuzzyTopology> {
    let mut spaces = vec![example_space()];
    let mut rng = SearchRng::new(2024);
    for (n, d) in [(1, 6), (2, 4), (2, 5), (3, 2)] {
        let c = Arc::new(Carrier::alphabetic(n).unwrap());
        for g in 0..5 {
            spaces.push(random_topology(&c, d, g, &mut rng, DEFAULT_COMPLETION_CAP).unwrap());
        }
    }
    for n in 1..=2 {
        let c = Arc::new(Carrier::alphabetic(n).unwrap());
        spaces.extend(enumerate_topologies(&c, 1).unwrap());
    }
    spaces
}

#[test]
fn example_space_values_from_oracle() {
    let t = example_space();
    let a = [4, 3];
    assert_eq!(closure_oracle(&t, &a), [7, 6]);
    assert_eq!(interior_oracle(&t, &a), [3, 2]);
    assert_eq!(interior_oracle(&t, &[7, 6]), [3, 4]);
    assert_eq!(closure_oracle(&t, &[3, 2]), [7, 6]);
    assert_eq!(closure_oracle(&t, &[6, 7]), [7, 8]);
    assert_eq!(bd_oracle(&t, &a), [3, 4]);
    assert_eq!(warren_oracle(&t, &a), [7, 6]);
    assert_eq!(cit_oracle(&t, &a), [7, 6]);
}

#[test]
fn closure_and_interior_match_oracle_on_every_grid_set() {
    for t in sample_spaces() {
        for a in enumerate_fuzzy_sets(t.carrier(), t.denominator()) {
            assert_eq!(
                t.closure(&a).unwrap().values(),
                closure_oracle(&t, a.values()),
                "{t:?} {a:?}"
            );
            assert_eq!(
                t.interior(&a).unwrap().values(),
                interior_oracle(&t, a.values()),
                "{t:?} {a:?}"
            );
        }
    }
}

#[test]
fn boundaries_match_oracle_on_every_grid_set() {
    for t in sample_spaces() {
        for a in enumerate_fuzzy_sets(t.carrier(), t.denominator()) {
            let v = a.values();
            assert_eq!(boundary(&t, &a).unwrap().values(), bd_oracle(&t, v));
            assert_eq!(warren_boundary(&t, &a).unwrap().values(), warren_oracle(&t, v));
            assert_eq!(cuchillo_ibanez_boundary(&t, &a).unwrap().values(), cit_oracle(&t, v));
            let d = t.denominator();
            let comp: Vec<u32> = v.iter().map(|x| d - x).collect();
            let bd2: Vec<u32> = closure_oracle(&t, v)
                .iter()
                .zip(closure_oracle(&t, &comp))
                .map(|(x, y)| *x.min(&y))
                .collect();
            assert_eq!(pu_liu_boundary(&t, &a).unwrap().values(), bd2);
        }
    }
}

#[test]
fn one_point_counts_follow_chain_formula() {
    // Every subset of the inner chain points together with the two ends is a topology.
    for d in 1..=11u32 {
        assert_eq!(count_topologies(1, d).unwrap(), 1usize << (d - 1), "d={d}");
    }
}

#[test]
fn three_point_crisp_count_is_number_of_finite_topologies() {
    // Labelled topologies on a 3-element set.
    assert_eq!(count_topologies(3, 1).unwrap(), 29);
}

#[test]
fn counts_match_completion_of_all_generator_subsets() {
    for (n, d) in [(2usize, 1u32), (1, 4), (2, 2), (3, 1)] {
        let c = Arc::new(Carrier::alphabetic(n).unwrap());
        let all: Vec<FuzzySet> = enumerate_fuzzy_sets(&c, d).collect();
        let mut distinct = BTreeSet::new();
        for mask in 0u32..(1 << all.len()) {
            let gens: Vec<FuzzySet> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            let t = complete_family(&c, d, &gens, DEFAULT_COMPLETION_CAP).unwrap();
            distinct.insert(t.opens().iter().map(|s| s.values().to_vec()).collect::<Vec<_>>());
        }
        assert_eq!(count_topologies(n, d).unwrap(), distinct.len(), "n={n} d={d}");
    }
}

#[test]
fn frozen_counts() {
    // Values produced by the completion oracle above.
    assert_eq!(count_topologies(2, 2).unwrap(), 49);
}
