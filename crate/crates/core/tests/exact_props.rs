mod common;

use common::{all_graphs, combinations, connected_er, corpus, family, naive_beta, naive_min_set, naive_resolves, random_tree};
use metdim::exact::{
    brute_force_beta, brute_force_variant, diameter_lower_bound, disconnected_beta, family_beta, resolving_sets_of_size,
    tree_beta, twin_lower_bound, unicyclic_interval, unicyclic_spanning_tree, Variant,
};
use metdim::families::FamilySpec;
use metdim::rng::split;
use metdim::Graph;
use proptest::prelude::*;

#[test]
fn brute_force_matches_naive_search() {
    for (name, g) in corpus().into_iter().filter(|(_, g)| g.n() <= 14) {
        let d = g.all_pairs_distances();
        let r = brute_force_beta(&d);
        let want = naive_min_set(g.n(), |s| naive_resolves(&d, s));
        assert_eq!(r.witness.members(), &want[..], "{name}");
    }
}

#[test]
fn extreme_dimensions_on_all_small_graphs() {
    // beta = 1 exactly for paths, beta = n - 1 exactly for complete graphs
    for n in 2..=6 {
        for g in all_graphs(n).into_iter().filter(Graph::is_connected) {
            let beta = brute_force_beta(&g.all_pairs_distances()).beta;
            let is_path = g.m() == n - 1 && (0..n).all(|v| g.degree(v) <= 2);
            let is_complete = g.m() == n * (n - 1) / 2;
            assert_eq!(beta == 1, is_path);
            assert_eq!(beta == n - 1, is_complete);
        }
    }
}

#[test]
fn every_minimum_set_is_listed() {
    for g in connected_er(10, 5..=10, 0.4, 31) {
        let d = g.all_pairs_distances();
        let beta = naive_beta(&d);
        let want: Vec<Vec<usize>> = combinations(g.n(), beta).into_iter().filter(|s| naive_resolves(&d, s)).collect();
        assert_eq!(resolving_sets_of_size(&d, beta), want);
    }
}

#[test]
fn tree_formula_on_small_trees() {
    for i in 0..100 {
        let g = random_tree(2 + i % 14, split(3, i as u64));
        let d = g.all_pairs_distances();
        let t = tree_beta(&g).unwrap();
        assert_eq!(t.beta, brute_force_beta(&d).beta);
        assert!(naive_resolves(&d, t.witness.members()));
    }
    assert!(tree_beta(&family(FamilySpec::Cycle(4))).is_err());
}

#[test]
fn lower_bounds_hold_on_all_small_graphs() {
    for g in all_graphs(6).into_iter().filter(Graph::is_connected).step_by(5) {
        let beta = brute_force_beta(&g.all_pairs_distances()).beta;
        assert!(twin_lower_bound(&g) <= beta);
        assert!(diameter_lower_bound(&g).unwrap() <= beta);
    }
}

#[test]
fn variant_solvers_match_naive_search() {
    for g in connected_er(15, 4..=8, 0.45, 41) {
        let d = g.all_pairs_distances();
        let n = g.n();
        let on_path = |w: usize, x: usize, y: usize| d.get(w, y) == d.get(w, x) + d.get(x, y);
        let strong = naive_min_set(n, |s| {
            (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&w| on_path(w, u, v) || on_path(w, v, u))))
        });
        assert_eq!(brute_force_variant(&g, Variant::Strong).unwrap().beta, strong.len());
        let diff = |v: usize, a: usize, b: usize| d.get(a, v) as i64 - d.get(b, v) as i64;
        let doubly = naive_min_set(n, |s| {
            s.len() >= 2
                && (0..n).all(|u| (u + 1..n).all(|v| s.iter().any(|&a| s.iter().any(|&b| diff(u, a, b) != diff(v, a, b)))))
        });
        assert_eq!(brute_force_variant(&g, Variant::Doubly).unwrap().beta, doubly.len());
        for k in 1..=2 {
            let t = d.truncate(k).unwrap();
            assert_eq!(brute_force_variant(&g, Variant::Truncated(k)).unwrap().beta, naive_beta(&t));
        }
    }
}

#[test]
fn component_sums() {
    let g = metdim::families::disjoint_union(&family(FamilySpec::Cycle(5)), &family(FamilySpec::Path(4)));
    assert_eq!(disconnected_beta(&g), 3);
    let k1p3 = metdim::families::disjoint_union(&family(FamilySpec::Complete(1)), &family(FamilySpec::Path(3)));
    assert_eq!(disconnected_beta(&k1p3), 1);
}

#[test]
fn unicyclic_offsets() {
    // beta(G) - beta(T) for the four configurations
    let configs: [(isize, usize, &[(usize, usize)]); 4] = [
        (-2, 9, &[(0, 2), (0, 3), (0, 6), (0, 7), (1, 5), (2, 5), (4, 5), (5, 8), (6, 8)]),
        (-1, 5, &[(0, 1), (1, 2), (1, 3), (1, 4), (2, 3)]),
        (0, 5, &[(0, 3), (1, 2), (2, 3), (2, 4), (3, 4)]),
        (1, 5, &[(0, 2), (0, 3), (1, 2), (1, 3), (3, 4)]),
    ];
    for (offset, n, edges) in configs {
        let g = Graph::new(n, edges.iter().copied()).unwrap();
        let beta = brute_force_beta(&g.all_pairs_distances()).beta;
        let t = unicyclic_spanning_tree(&g).unwrap();
        let bt = brute_force_beta(&t.all_pairs_distances()).beta;
        assert_eq!(beta as isize - bt as isize, offset);
        assert!(unicyclic_interval(&g).unwrap().contains(beta));
    }
}

#[test]
fn closed_forms_match_brute_force_on_extra_sizes() {
    use FamilySpec::*;
    for spec in [Grid(vec![2, 2, 2]), Grid(vec![1, 6]), Prism(9), Hamming { k: 2, a: 6 }, Hexagon(3), Fan(14), Wheel(14)] {
        let r = family_beta(&spec).unwrap();
        assert_eq!(r.beta, brute_force_beta(&family(spec.clone()).all_pairs_distances()).beta, "{spec}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn unicyclic_interval_contains_beta(n in 4usize..12, seed in any::<u64>()) {
        // a random tree plus one edge closing a cycle
        let t = random_tree(n, seed);
        let mut rng = metdim::rng::SplitMix64::new(seed);
        let (u, v) = loop {
            let u = rng.below_usize(n);
            let v = rng.below_usize(n);
            if u != v && !t.has_edge(u, v) {
                break (u, v);
            }
        };
        let g = Graph::new(n, t.edges().chain([(u, v)])).unwrap();
        let beta = brute_force_beta(&g.all_pairs_distances()).beta;
        prop_assert!(unicyclic_interval(&g).unwrap().contains(beta));
    }

    #[test]
    fn permuting_keeps_beta(seed in any::<u64>()) {
        let g = &connected_er(1, 5..=11, 0.35, seed)[0];
        let mut perm: Vec<usize> = (0..g.n()).collect();
        metdim::rng::SplitMix64::new(seed).shuffle(&mut perm);
        let h = g.permute(&perm).unwrap();
        prop_assert_eq!(brute_force_beta(&g.all_pairs_distances()).beta, brute_force_beta(&h.all_pairs_distances()).beta);
    }
}
