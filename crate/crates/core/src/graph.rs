//! Simple undirected graphs, shortest-path distances, and twin classes.
//!
//! Vertices are the dense integers `0..n`. Graphs are immutable once built;
//! [`Graph::new`] rejects self-loops, duplicate edges and out-of-range
//! endpoints.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Sentinel for "no path". Strictly larger than every finite distance.
pub const INF: u32 = u32::MAX;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::input(format!("edge ({u},{v}) has an endpoint >= n = {n}")));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::input(format!("duplicate edge ({u},{})", w[0])));
            }
        }
        Ok(Graph { adj, m })
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Graph {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<u32>> {
        if source >= self.n() {
            return Err(Error::input(format!("source {source} out of range for n = {}", self.n())));
        }
        Ok(self.bfs_row(source))
    }

    fn bfs_row(&self, source: Vertex) -> Vec<u32> {
        let mut dist = vec![INF; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adj[u] {
                if dist[v] == INF {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.n();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(self.bfs_row(s));
        }
        DistanceMatrix { n, data }
    }

    /// Largest finite distance; [`INF`] when disconnected; 0 for `n <= 1`.
    pub fn diameter(&self) -> u32 {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.bfs_row(s) {
                if d == INF {
                    return INF;
                }
                best = best.max(d);
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Twin classes: `u` and `v` are twins when `N(u) \ {v} = N(v) \ {u}`,
    /// which covers both adjacent twins (equal closed neighbourhoods) and
    /// non-adjacent twins (equal open neighbourhoods). Classes are sorted and
    /// ordered by smallest member.
    pub fn twin_classes(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut parent: Vec<Vertex> = (0..n).collect();
        fn find(parent: &mut [Vertex], mut x: Vertex) -> Vertex {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut by_open: HashMap<&[Vertex], Vertex> = HashMap::new();
        let mut by_closed: HashMap<Vec<Vertex>, Vertex> = HashMap::new();
        for v in 0..n {
            let mut closed = self.adj[v].clone();
            let at = closed.partition_point(|&x| x < v);
            closed.insert(at, v);
            for first in [*by_open.entry(&self.adj[v]).or_insert(v), *by_closed.entry(closed).or_insert(v)] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut slot = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Vertex>> = Vec::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            if slot[r] == usize::MAX {
                slot[r] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[r]].push(v);
        }
        classes
    }

    /// True when `N(u) \ {v} = N(v) \ {u}`.
    pub fn are_twins(&self, u: Vertex, v: Vertex) -> bool {
        let strip = |list: &[Vertex], x: Vertex| list.iter().copied().filter(|&w| w != x).collect::<Vec<_>>();
        u != v && strip(&self.adj[u], v) == strip(&self.adj[v], u)
    }

    /// The subgraph induced by `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut m = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if i < j {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m }
    }

    /// Relabel so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::input("permutation does not match the vertex set"));
        }
        Graph::new(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

/// `n x n` table of shortest-path lengths, [`INF`] for unreachable pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Build from explicit rows. Rows must be square, symmetric and have a zero
    /// diagonal.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<DistanceMatrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::input(format!("row {i} has {} entries, expected {n}", row.len())));
            }
            if row[i] != 0 {
                return Err(Error::input(format!("diagonal entry ({i},{i}) is not zero")));
            }
            data.extend_from_slice(row);
        }
        let d = DistanceMatrix { n, data };
        for u in 0..n {
            for v in u + 1..n {
                if d.get(u, v) != d.get(v, u) {
                    return Err(Error::input(format!("entries ({u},{v}) and ({v},{u}) differ")));
                }
            }
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|&d| d != INF)
    }

    /// Largest finite entry.
    pub fn max_finite(&self) -> u32 {
        self.data.iter().copied().filter(|&d| d != INF).max().unwrap_or(0)
    }

    /// Distances capped at `k + 1`; [`INF`] also becomes `k + 1`.
    pub fn truncate(&self, k: u32) -> Result<DistanceMatrix> {
        if k < 1 {
            return Err(Error::input("truncation depth k must be at least 1"));
        }
        let cap = k.checked_add(1).ok_or_else(|| Error::input("truncation depth too large"))?;
        let data = self.data.iter().map(|&d| if d == INF { cap } else { d.min(cap) }).collect();
        Ok(DistanceMatrix { n: self.n, data })
    }
}

/// Ordered list of distinct vertices. The order fixes the coordinate order of
/// distance vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(members: Vec<Vertex>) -> Result<VertexSet> {
        let mut sorted = members.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::input(format!("vertex {} listed twice", w[0])));
        }
        Ok(VertexSet(members))
    }

    pub fn members(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    pub fn check_range(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&v| v >= n) {
            Some(v) => Err(Error::input(format!("vertex {v} out of range for n = {n}"))),
            None => Ok(()),
        }
    }

    /// Parse `"0,3,7"`. Whitespace around items is ignored; the empty string is
    /// the empty set.
    pub fn parse(text: &str) -> Result<VertexSet> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(VertexSet::default());
        }
        let members = text
            .split(',')
            .map(|t| t.trim().parse::<Vertex>().map_err(|_| Error::parse(format!("bad vertex '{t}'"))))
            .collect::<Result<Vec<_>>>()?;
        VertexSet::new(members)
    }
}

impl From<VertexSet> for Vec<Vertex> {
    fn from(s: VertexSet) -> Self {
        s.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
