mod common;

use common::*;
use qtorus_core::forcing::forcing_number;
use qtorus_core::matching::{
    count_matchings, enumerate_matchings, find_alternating_cycle, is_forcing_set, PerfectMatching,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn library_masks(t: &qtorus_core::torus::TorusGraph) -> Vec<Mask> {
    let mut v: Vec<Mask> = enumerate_matchings(t.graph()).map(|m| mask_of(m.edges())).collect();
    v.sort_unstable();
    v
}

#[test]
fn matching_counts_match_subset_filter() {
    for (n, m, r) in [(2, 4, 2), (2, 5, 1)] {
        let t = torus(n, m, r);
        let brute = matchings_by_subsets(t.graph());
        assert_eq!(library_masks(&t), brute, "T({n},{m},{r})");
        assert_eq!(count_matchings(t.graph()), brute.len());
    }
}

#[test]
fn enumeration_matches_recursion_on_small_tori() {
    for t in small_tori(16) {
        assert_eq!(library_masks(&t), matchings_by_recursion(t.graph()), "{}", t.params());
    }
}

#[test]
fn forcing_test_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for t in small_tori(16) {
        let all = matchings_by_recursion(t.graph());
        let pms: Vec<PerfectMatching> = enumerate_matchings(t.graph()).collect();
        for _ in 0..12 {
            let pm = &pms[rng.gen_range(0..pms.len())];
            let subset: Vec<usize> = pm.edges().iter().copied().filter(|_| rng.gen_bool(0.4)).collect();
            let got = is_forcing_set(t.graph(), pm, &subset).unwrap();
            assert_eq!(
                got.is_forcing(),
                forces(&all, mask_of(pm.edges()), mask_of(&subset)),
                "{} {:?}",
                t.params(),
                subset
            );
        }
    }
}

/// An alternating cycle avoiding `forbidden` exists iff another perfect
/// matching contains `forbidden`. Covers bipartite and non-bipartite tori,
/// i.e. both search routes.
#[test]
fn alternating_cycle_existence_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut bipartite, mut other) = (0, 0);
    for t in small_tori(16) {
        if t.graph().bipartition().is_some() {
            bipartite += 1;
        } else {
            other += 1;
        }
        let all = matchings_by_recursion(t.graph());
        let pms: Vec<PerfectMatching> = enumerate_matchings(t.graph()).collect();
        for _ in 0..10 {
            let pm = &pms[rng.gen_range(0..pms.len())];
            let forbidden: Vec<usize> =
                pm.edges().iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
            let found = find_alternating_cycle(t.graph(), pm, &forbidden);
            if let Some(c) = &found {
                assert!(c.is_valid_for(t.graph(), pm));
                assert!(c.edges().iter().all(|e| !forbidden.contains(e)));
            }
            assert_eq!(
                found.is_some(),
                !forces(&all, mask_of(pm.edges()), mask_of(&forbidden)),
                "{}",
                t.params()
            );
        }
    }
    assert!(bipartite > 0 && other > 0);
}

#[test]
fn forcing_numbers_match_subset_oracle() {
    for (n, m, r) in [(2, 4, 2), (2, 5, 1), (4, 3, 1), (2, 6, 3)] {
        let t = torus(n, m, r);
        let all = matchings_by_recursion(t.graph());
        for pm in enumerate_matchings(t.graph()) {
            let w = forcing_number(t.graph(), &pm).unwrap();
            assert_eq!(w.value, forcing_number_oracle(&all, mask_of(pm.edges())));
            assert!(forces(&all, mask_of(pm.edges()), mask_of(&w.witness_set)));
        }
    }
}
