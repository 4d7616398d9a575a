//! Resolvability predicates: plain, doubly, strong, truncated, and the
//! multilateration form over arbitrary item-by-function tables.
//!
//! Every predicate groups the vertices by their (possibly normalised)
//! distance vector and reports the first colliding pair when the grouping is
//! not injective.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex, VertexSet};

/// Rows are items, columns are the candidate landmarks/functions. Only
/// equality of entries within a column matters.
pub trait Table {
    fn rows(&self) -> usize;
    fn cols(&self) -> usize;
    fn entry(&self, row: usize, col: usize) -> u32;
}

impl Table for DistanceMatrix {
    fn rows(&self) -> usize {
        self.n()
    }

    fn cols(&self) -> usize {
        self.n()
    }

    /// `d(col, row)`: column `c` is the landmark `c`.
    fn entry(&self, row: usize, col: usize) -> u32 {
        self.get(col, row)
    }
}

/// Item-by-function table over any alphabet with equality. Entries are
/// interned per column, so only within-column equality survives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralTable {
    rows: usize,
    columns: Vec<Vec<u32>>,
}

impl GeneralTable {
    pub fn new<T: Eq + Hash + Clone>(rows: &[Vec<T>]) -> Result<GeneralTable> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::input(format!("row {i} has {} entries, expected {cols}", r.len())));
        }
        let columns = (0..cols)
            .map(|c| {
                let mut seen: HashMap<T, u32> = HashMap::new();
                rows.iter()
                    .map(|r| {
                        let next = seen.len() as u32;
                        *seen.entry(r[c].clone()).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        Ok(GeneralTable { rows: rows.len(), columns })
    }
}

impl Table for GeneralTable {
    fn rows(&self) -> usize {
        self.rows
    }

    fn cols(&self) -> usize {
        self.columns.len()
    }

    fn entry(&self, row: usize, col: usize) -> u32 {
        self.columns[col][row]
    }
}

/// Outcome of a resolvability check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Resolved,
    /// Two items the set fails to separate, `u < v`.
    Unresolved(usize, usize),
}

impl Verdict {
    pub fn is_resolved(&self) -> bool {
        matches!(self, Verdict::Resolved)
    }

    pub fn witness(&self) -> Option<(usize, usize)> {
        match *self {
            Verdict::Resolved => None,
            Verdict::Unresolved(u, v) => Some((u, v)),
        }
    }
}

/// Group items by key; report the collision with the smallest second member.
fn injective_by<K: Eq + Hash>(count: usize, key: impl Fn(usize) -> K) -> Verdict {
    let mut first: HashMap<K, usize> = HashMap::with_capacity(count);
    for v in 0..count {
        if let Some(&u) = first.get(&key(v)) {
            return Verdict::Unresolved(u, v);
        }
        first.insert(key(v), v);
    }
    Verdict::Resolved
}

/// `d(v | R) = (d(r_1, v), ..., d(r_k, v))` in the order of `r`.
pub fn distance_vector(d: &DistanceMatrix, v: Vertex, r: &VertexSet) -> Result<Vec<u32>> {
    if v >= d.n() {
        return Err(Error::input(format!("vertex {v} out of range for n = {}", d.n())));
    }
    r.check_range(d.n())?;
    Ok(r.members().iter().map(|&x| d.get(x, v)).collect())
}

pub fn is_resolving(d: &DistanceMatrix, r: &VertexSet) -> Result<Verdict> {
    resolves_table(d, r.members())
}

/// True iff the rows restricted to `cols` are pairwise distinct.
pub fn resolves_table<T: Table + ?Sized>(m: &T, cols: &[usize]) -> Result<Verdict> {
    if let Some(c) = cols.iter().find(|&&c| c >= m.cols()) {
        return Err(Error::input(format!("column {c} out of range for {} columns", m.cols())));
    }
    Ok(injective_by(m.rows(), |row| cols.iter().map(|&c| m.entry(row, c)).collect::<Vec<_>>()))
}

/// Resolving with respect to the `k`-truncated distances.
pub fn is_truncated_resolving(d: &DistanceMatrix, k: u32, r: &VertexSet) -> Result<Verdict> {
    is_resolving(&d.truncate(k)?, r)
}

/// Doubly resolving: the vectors `d(v|R) - d(r_1, v)` are injective, with
/// `r_1` the first member of `r`.
pub fn is_doubly_resolving(d: &DistanceMatrix, r: &VertexSet) -> Result<Verdict> {
    if r.len() < 2 {
        return Err(Error::input("a doubly resolving set needs at least two members"));
    }
    r.check_range(d.n())?;
    if !d.is_finite() {
        return Err(Error::input("doubly resolving sets are only defined on connected graphs"));
    }
    let anchor = r.members()[0];
    let rest = &r.members()[1..];
    Ok(injective_by(d.n(), |v| {
        let base = d.get(anchor, v) as i64;
        rest.iter().map(|&x| d.get(x, v) as i64 - base).collect::<Vec<_>>()
    }))
}

/// Does `s` strongly resolve `u` and `v`: one of them lies on a shortest path
/// from `s` to the other.
pub(crate) fn strongly_separates(d: &DistanceMatrix, s: Vertex, u: Vertex, v: Vertex) -> bool {
    let (su, sv, uv) = (d.get(s, u) as u64, d.get(s, v) as u64, d.get(u, v) as u64);
    sv == su + uv || su == sv + uv
}

pub fn is_strongly_resolving(g: &Graph, d: &DistanceMatrix, s: &VertexSet) -> Result<Verdict> {
    if g.n() != d.n() {
        return Err(Error::input("graph and distance matrix sizes differ"));
    }
    if !g.is_connected() || !d.is_finite() {
        return Err(Error::input("strong resolvability needs a connected graph"));
    }
    s.check_range(d.n())?;
    let n = d.n();
    for v in 0..n {
        for u in 0..v {
            if !s.members().iter().any(|&x| strongly_separates(d, x, u, v)) {
                return Ok(Verdict::Unresolved(u, v));
            }
        }
    }
    Ok(Verdict::Resolved)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn distance_vector_examples() {
        let d = cycle(5).all_pairs_distances();
        assert_eq!(distance_vector(&d, 3, &set(&[0, 1])).unwrap(), vec![2, 2]);
        let v = distance_vector(&d, 1, &set(&[4, 1])).unwrap();
        assert_eq!(v[1], 0);
        assert!(distance_vector(&d, 5, &set(&[0])).is_err());
        assert!(distance_vector(&d, 0, &set(&[9])).is_err());
    }

    #[test]
    fn grid_distance_vector_formula() {
        // 4 x 3 grid, vertex (a, b) has index 3a + b
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..3 {
                if a + 1 < 4 {
                    edges.push((3 * a + b, 3 * (a + 1) + b));
                }
                if b + 1 < 3 {
                    edges.push((3 * a + b, 3 * a + b + 1));
                }
            }
        }
        let d = Graph::new(12, edges).unwrap().all_pairs_distances();
        let r = set(&[0, 2]);
        for a in 0..4u32 {
            for b in 0..3u32 {
                let v = (3 * a + b) as usize;
                assert_eq!(distance_vector(&d, v, &r).unwrap(), vec![a + b, a + 2 - b]);
            }
        }
        assert!(is_resolving(&d, &r).unwrap().is_resolved());
    }

    #[test]
    fn resolving_examples() {
        let c5 = cycle(5).all_pairs_distances();
        assert!(is_resolving(&c5, &set(&[0, 1])).unwrap().is_resolved());
        let k5 = complete(5).all_pairs_distances();
        assert_eq!(is_resolving(&k5, &set(&[0, 1, 2])).unwrap(), Verdict::Unresolved(3, 4));
        let all = set(&(0..5).collect::<Vec<_>>());
        assert!(is_resolving(&k5, &all).unwrap().is_resolved());
    }

    #[test]
    fn multilateration_matrix() {
        // rows A, B, C; columns A, B, C
        let m = GeneralTable::new(&[
            vec![0u64, 10, 100],
            vec![u64::MAX, 0, 10],
            vec![u64::MAX, u64::MAX, 0],
        ])
        .unwrap();
        assert_eq!(resolves_table(&m, &[0]).unwrap(), Verdict::Unresolved(1, 2));
        assert!(resolves_table(&m, &[0, 1]).unwrap().is_resolved());
        assert!(resolves_table(&m, &[0, 1, 2]).unwrap().is_resolved());
        assert!(resolves_table(&m, &[3]).is_err());
        assert!(GeneralTable::new(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn doubly_examples() {
        let p6 = path(6).all_pairs_distances();
        assert!(is_doubly_resolving(&p6, &set(&[0, 5])).unwrap().is_resolved());
        assert!(is_doubly_resolving(&p6, &set(&[0])).is_err());
        assert!(!is_doubly_resolving(&p6, &set(&[0, 1])).unwrap().is_resolved());
        let k3 = complete(3).all_pairs_distances();
        assert!(is_doubly_resolving(&k3, &set(&[0, 1, 2])).unwrap().is_resolved());
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap().all_pairs_distances();
        assert!(is_doubly_resolving(&split, &set(&[0, 2])).is_err());
    }

    #[test]
    fn strong_examples() {
        for n in 2..8 {
            let g = path(n);
            let d = g.all_pairs_distances();
            assert!(is_strongly_resolving(&g, &d, &set(&[0, n - 1])).unwrap().is_resolved());
        }
        let c6 = cycle(6);
        let d = c6.all_pairs_distances();
        assert!(!is_strongly_resolving(&c6, &d, &set(&[1, 3])).unwrap().is_resolved());
        for n in 2..7 {
            let g = complete(n);
            let d = g.all_pairs_distances();
            assert!(is_strongly_resolving(&g, &d, &set(&(0..n - 1).collect::<Vec<_>>())).unwrap().is_resolved());
        }
        let split = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(is_strongly_resolving(&split, &split.all_pairs_distances(), &set(&[0])).is_err());
    }

    #[test]
    fn truncated_examples() {
        let p5 = path(5).all_pairs_distances();
        assert!(!is_truncated_resolving(&p5, 1, &set(&[0])).unwrap().is_resolved());
        assert!(is_truncated_resolving(&p5, 4, &set(&[0])).unwrap().is_resolved());
    }
}
