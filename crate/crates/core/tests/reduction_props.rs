mod common;

use common::naive_resolves;
use metdim::exact::{brute_force_beta, resolving_sets_of_size};
use metdim::reductions::{
    assignment_to_resolving_set, resolving_set_to_assignment, sat_to_graph, Literal, Role, SatFormula,
};
use metdim::rng::SplitMix64;
use metdim::VertexSet;

fn random_formula(n: usize, m: usize, seed: u64) -> SatFormula {
    let mut rng = SplitMix64::new(seed);
    let clauses = (0..m)
        .map(|_| {
            let vars = rng.sample_subset(n, 3);
            let lit = |v: usize, rng: &mut SplitMix64| if rng.below(2) == 0 { Literal::pos(v) } else { Literal::neg(v) };
            [lit(vars[0], &mut rng), lit(vars[1], &mut rng), lit(vars[2], &mut rng)]
        })
        .collect();
    SatFormula::new(n, clauses).unwrap()
}

fn all_sign_patterns() -> SatFormula {
    let clauses: Vec<[i64; 3]> = (0..8)
        .map(|mask| {
            let s = |b: i64, v: i64| if mask >> b & 1 == 1 { -v } else { v };
            [s(0, 1), s(1, 2), s(2, 3)]
        })
        .collect();
    SatFormula::from_ints(3, &clauses).unwrap()
}

#[test]
fn satisfiable_formulas_have_dimension_vars_plus_clauses() {
    for (n, m) in [(3, 1), (3, 2), (4, 1), (4, 2)] {
        for seed in 0..3 {
            let f = random_formula(n, m, seed);
            assert!(!f.satisfying_assignments().is_empty());
            let rg = sat_to_graph(&f);
            let d = rg.graph.all_pairs_distances();
            assert_eq!(rg.graph.n(), 6 * n + 5 * m);
            assert_eq!(brute_force_beta(&d).beta, n + m, "{}", f.to_dimacs());
        }
    }
}

#[test]
fn every_minimum_set_decodes_to_a_satisfying_assignment() {
    let f = random_formula(3, 2, 9);
    let rg = sat_to_graph(&f);
    let d = rg.graph.all_pairs_distances();
    let sets = resolving_sets_of_size(&d, 5);
    assert!(!sets.is_empty());
    for s in sets {
        let a = resolving_set_to_assignment(&rg, &VertexSet::new(s).unwrap()).unwrap();
        assert!(f.is_satisfied_by(&a).unwrap());
    }
}

#[test]
fn satisfying_assignments_give_resolving_sets() {
    for seed in 0..10 {
        let f = random_formula(5, 4, seed);
        let rg = sat_to_graph(&f);
        let d = rg.graph.all_pairs_distances();
        for a in f.satisfying_assignments() {
            let (set, ok) = assignment_to_resolving_set(&rg, &a).unwrap();
            assert!(ok);
            assert!(naive_resolves(&d, set.members()));
            assert_eq!(set.len(), 5 + 4);
            assert_eq!(resolving_set_to_assignment(&rg, &set).unwrap(), a);
        }
    }
}

#[test]
fn structural_lower_bound() {
    // each variable six-cycle and each clause star needs its own landmark
    for seed in 0..5 {
        let f = random_formula(4, 3, seed);
        let rg = sat_to_graph(&f);
        let d = rg.graph.all_pairs_distances();
        assert!(resolving_sets_of_size(&d, 6).is_empty());
    }
}

#[test]
fn unsatisfiable_formula_defeats_every_assignment() {
    let f = all_sign_patterns();
    assert!(f.satisfying_assignments().is_empty());
    let rg = sat_to_graph(&f);
    assert_eq!(rg.graph.n(), 18 + 40);
    for mask in 0..8u32 {
        let a: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
        let (_, ok) = assignment_to_resolving_set(&rg, &a).unwrap();
        assert!(!ok, "assignment {a:?}");
    }
}

#[test]
fn star_centres_and_variable_cycles() {
    let f = random_formula(4, 2, 1);
    let rg = sat_to_graph(&f);
    let g = &rg.graph;
    for j in 0..2 {
        let centre = rg.vertex(Role::C(2, j));
        assert_eq!(g.degree(centre), 4);
    }
    for i in 0..4 {
        let cyc = [Role::T(i), Role::A1(i), Role::B1(i), Role::F(i), Role::B2(i), Role::A2(i)];
        for s in 0..6 {
            assert!(g.has_edge(rg.vertex(cyc[s]), rg.vertex(cyc[(s + 1) % 6])));
        }
    }
}
