mod common;

use common::{all_graphs, combinations, connected_er, naive_resolves};
use metdim::resolving::{is_doubly_resolving, is_resolving, is_strongly_resolving, is_truncated_resolving, resolves_table};
use metdim::{DistanceMatrix, GeneralTable, Graph, VertexSet};
use proptest::prelude::*;

fn set(v: &[usize]) -> VertexSet {
    VertexSet::new(v.to_vec()).unwrap()
}

/// Pairwise definition: some pair of members sees different differences.
fn naive_doubly(d: &DistanceMatrix, s: &[usize]) -> bool {
    let n = d.n();
    let diff = |v: usize, a: usize, b: usize| d.get(a, v) as i64 - d.get(b, v) as i64;
    (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&a| s.iter().any(|&b| diff(u, a, b) != diff(v, a, b)))))
}

/// Pairwise definition via shortest paths.
fn naive_strong(d: &DistanceMatrix, s: &[usize]) -> bool {
    let n = d.n();
    let on_path = |w: usize, x: usize, y: usize| d.get(w, y) == d.get(w, x) + d.get(x, y);
    (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&w| on_path(w, u, v) || on_path(w, v, u))))
}

fn connected_small() -> Vec<Graph> {
    all_graphs(5).into_iter().filter(Graph::is_connected).step_by(7).collect()
}

#[test]
fn predicates_match_pairwise_definitions() {
    for g in connected_small() {
        let d = g.all_pairs_distances();
        for k in 1..=3 {
            for s in combinations(g.n(), k) {
                let r = set(&s);
                assert_eq!(is_resolving(&d, &r).unwrap().is_resolved(), naive_resolves(&d, &s));
                assert_eq!(is_strongly_resolving(&g, &d, &r).unwrap().is_resolved(), naive_strong(&d, &s));
                if k >= 2 {
                    assert_eq!(is_doubly_resolving(&d, &r).unwrap().is_resolved(), naive_doubly(&d, &s));
                }
            }
        }
    }
}

#[test]
fn doubly_and_strong_imply_resolving() {
    for g in connected_er(20, 5..=9, 0.4, 17) {
        let d = g.all_pairs_distances();
        for k in 2..=3 {
            for s in combinations(g.n(), k) {
                let r = set(&s);
                let plain = is_resolving(&d, &r).unwrap().is_resolved();
                if is_doubly_resolving(&d, &r).unwrap().is_resolved() {
                    assert!(plain);
                }
                if is_strongly_resolving(&g, &d, &r).unwrap().is_resolved() {
                    assert!(plain);
                }
            }
        }
    }
}

#[test]
fn truncation_chain() {
    // resolving at depth k implies resolving at depth k + 1 and without truncation
    for g in connected_er(20, 6..=12, 0.3, 23) {
        let d = g.all_pairs_distances();
        let diam = g.diameter();
        for s in combinations(g.n(), 3) {
            let r = set(&s);
            let mut prev = false;
            for k in 1..=diam {
                let now = is_truncated_resolving(&d, k, &r).unwrap().is_resolved();
                assert!(!prev || now);
                prev = now;
            }
            assert_eq!(prev, is_resolving(&d, &r).unwrap().is_resolved());
        }
    }
}

#[test]
fn unresolved_witness_really_collides() {
    let g = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let d = g.all_pairs_distances();
    let (u, v) = is_resolving(&d, &set(&[0])).unwrap().witness().unwrap();
    assert!(u < v);
    assert_eq!(d.get(0, u), d.get(0, v));
}

#[test]
fn general_tables_see_only_equality() {
    let words = vec![vec!["a", "x"], vec!["b", "x"], vec!["a", "y"], vec!["b", "y"]];
    let t = GeneralTable::new(&words).unwrap();
    assert!(resolves_table(&t, &[0, 1]).unwrap().is_resolved());
    assert_eq!(resolves_table(&t, &[0]).unwrap().witness(), Some((0, 2)));
    assert!(resolves_table(&t, &[2]).is_err());
}

proptest! {
    #[test]
    fn supersets_stay_resolving(idx in 0usize..200, extra in 0usize..20, seed in any::<u64>()) {
        let graphs = connected_er(1, 6..=14, 0.3, seed);
        let g = &graphs[0];
        let d = g.all_pairs_distances();
        let mut rng = metdim::rng::SplitMix64::new(idx as u64);
        let base = rng.sample_subset(g.n(), 3);
        if is_resolving(&d, &set(&base)).unwrap().is_resolved() {
            let w = extra % g.n();
            let mut bigger = base.clone();
            if !bigger.contains(&w) {
                bigger.push(w);
            }
            prop_assert!(is_resolving(&d, &set(&bigger)).unwrap().is_resolved());
            if is_doubly_resolving(&d, &set(&base)).unwrap().is_resolved() {
                prop_assert!(is_doubly_resolving(&d, &set(&bigger)).unwrap().is_resolved());
            }
        }
    }

    #[test]
    fn order_of_members_is_irrelevant(seed in any::<u64>()) {
        let graphs = connected_er(1, 5..=12, 0.35, seed);
        let g = &graphs[0];
        let d = g.all_pairs_distances();
        let mut rng = metdim::rng::SplitMix64::new(seed);
        let mut s = rng.sample_subset(g.n(), 3.min(g.n()));
        let a = is_doubly_resolving(&d, &set(&s)).unwrap().is_resolved();
        let b = is_resolving(&d, &set(&s)).unwrap().is_resolved();
        s.reverse();
        prop_assert_eq!(is_doubly_resolving(&d, &set(&s)).unwrap().is_resolved(), a);
        prop_assert_eq!(is_resolving(&d, &set(&s)).unwrap().is_resolved(), b);
    }
}
