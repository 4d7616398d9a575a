//! Independent oracles and corpora shared by the integration tests. Nothing
//! here calls the solvers under test.
#![allow(dead_code)]

use std::collections::HashSet;

use metdim::families::{generate, generate_random, FamilySpec, RandomSpec};
use metdim::rng::split;
use metdim::{DistanceMatrix, Graph, INF};

/// Floyd-Warshall over `u64`, with `None` for no path.
pub fn floyd(g: &Graph) -> Vec<Vec<Option<u64>>> {
    let n = g.n();
    let mut d = vec![vec![None; n]; n];
    for v in 0..n {
        d[v][v] = Some(0);
        for &w in g.neighbors(v) {
            d[v][w] = Some(1);
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][k], d[k][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Resolving by the pairwise definition.
pub fn naive_resolves(d: &DistanceMatrix, set: &[usize]) -> bool {
    let n = d.n();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&r| d.get(r, u) != d.get(r, v))))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Smallest-size, then lexicographically first, set accepted by `ok`.
pub fn naive_min_set(n: usize, ok: impl Fn(&[usize]) -> bool) -> Vec<usize> {
    for k in 0..=n {
        if let Some(s) = combinations(n, k).into_iter().find(|s| ok(s)) {
            return s;
        }
    }
    panic!("no accepted set")
}

pub fn naive_beta(d: &DistanceMatrix) -> usize {
    naive_min_set(d.n(), |s| naive_resolves(d, s)).len()
}

/// Every labelled graph on `n` vertices (edge bitmask over pairs in
/// lexicographic order).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| Graph::new(n, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e)).unwrap())
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every permutation.
pub fn iso_oracle(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    let eb: HashSet<(usize, usize)> = b.edges().collect();
    permutations(a.n()).iter().any(|p| {
        a.edges().all(|(u, v)| {
            let (x, y) = (p[u], p[v]);
            eb.contains(&(x.min(y), x.max(y)))
        })
    })
}

pub fn family(spec: FamilySpec) -> Graph {
    generate(&spec).unwrap()
}

/// Connected Erdős–Rényi graphs, drawn with successive split seeds.
pub fn connected_er(count: usize, n_range: std::ops::RangeInclusive<usize>, p: f64, master: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let span = n_range.end() - n_range.start() + 1;
    let mut i = 0u64;
    while out.len() < count {
        let s = split(master, i);
        i += 1;
        let n = n_range.start() + (s % span as u64) as usize;
        let g = generate_random(&RandomSpec::erdos_renyi(n, p, s)).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    generate_random(&RandomSpec::uniform_tree(n, seed)).unwrap()
}

/// Small named graphs plus seeded random ones: the verification corpus.
pub fn corpus() -> Vec<(String, Graph)> {
    use FamilySpec::*;
    let mut out: Vec<(String, Graph)> = Vec::new();
    let specs = vec![
        Path(2),
        Path(7),
        Cycle(3),
        Cycle(8),
        Complete(5),
        CompleteBipartite(2, 3),
        CompleteBipartite(3, 4),
        Grid(vec![4, 3]),
        Grid(vec![3, 3, 2]),
        Fan(7),
        Wheel(8),
        Hypercube(3),
        Hamming { k: 2, a: 3 },
        Hexagon(2),
        Honeycomb(1),
        Prism(5),
        Petersen2(5),
        Join(Box::new(Complete(2)), Box::new(Empty(3))),
    ];
    for s in specs {
        out.push((s.to_string(), family(s)));
    }
    for (i, g) in connected_er(12, 6..=14, 0.35, 99).into_iter().enumerate() {
        out.push((format!("er#{i}"), g));
    }
    for i in 0..8u64 {
        out.push((format!("tree#{i}"), random_tree(6 + i as usize, split(7, i))));
    }
    out
}

pub fn is_inf(x: u32) -> bool {
    x == INF
}
