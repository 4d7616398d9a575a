//! Generators for named graph families and the random models.
//!
//! Labelling conventions (every generator is deterministic):
//!
//! | family | vertices |
//! |---|---|
//! | `path(n)`, `cycle(n)` | `0..n` in order |
//! | `complete_bipartite(s, t)` | side A `0..s`, side B `s..s+t` |
//! | `grid(n_1 x .. x n_d)` | mixed radix, last coordinate fastest: `(x_1..x_d) -> ((x_1 n_2 + x_2) n_3 + ..)` |
//! | `fan(n)`, `wheel(n)` | hub `0`, path/cycle `1..=n` in order |
//! | `hamming(k, a)` | base-`a` numeral of the string, first symbol most significant |
//! | `hexagon(n)` | triangular-lattice points `(x, y, -x-y)` with `max(|x|,|y|,|x+y|) <= n-1`, sorted by `(x, y)` |
//! | `honeycomb(n)` | bounded faces (triangles) of `hexagon(n+1)`, sorted by their vertex triples |
//! | `prism(n)` | outer cycle `0..n`, inner cycle `n..2n`, spokes `i -- n+i` |
//! | `petersen2(n)` | outer cycle `0..n`, inner `n+i -- n+(i+2 mod n)`, spokes `i -- n+i` |
//! | `join(g1, g2)`, `union(g1, g2)` | `g1` first, `g2` shifted by `g1.n` |
//!
//! Random graphs draw from [`SplitMix64`] in a fixed order: Erdős–Rényi and
//! SBM visit pairs `(u, v)`, `u < v`, lexicographically and keep the edge when
//! `next_f64() < p`; uniform trees decode a Prüfer sequence of `n - 2` draws
//! of `below(n)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Grid(Vec<usize>),
    Fan(usize),
    Wheel(usize),
    Hypercube(usize),
    Hamming { k: usize, a: usize },
    Honeycomb(usize),
    Hexagon(usize),
    Prism(usize),
    Petersen2(usize),
    Join(Box<FamilySpec>, Box<FamilySpec>),
    DisjointUnion(Box<FamilySpec>, Box<FamilySpec>),
    Empty(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let need = |ok: bool, msg: &str| if ok { Ok(()) } else { Err(Error::input(msg.to_string())) };
        match self {
            Path(n) => need(*n >= 1, "path needs n >= 1"),
            Cycle(n) => need(*n >= 3, "cycle needs n >= 3"),
            Complete(n) => need(*n >= 1, "complete needs n >= 1"),
            CompleteBipartite(s, t) => need(*s >= 1 && *t >= 1, "complete_bipartite needs s, t >= 1"),
            Grid(dims) => need(!dims.is_empty() && dims.iter().all(|&d| d >= 1), "grid needs at least one dimension, each >= 1"),
            Fan(n) => need(*n >= 1, "fan needs n >= 1"),
            Wheel(n) => need(*n >= 3, "wheel needs n >= 3"),
            Hypercube(k) => need(*k >= 1 && *k <= 24, "hypercube needs 1 <= k <= 24"),
            Hamming { k, a } => {
                need(*k >= 1 && *a >= 2, "hamming needs k >= 1 and a >= 2")?;
                need((*a as f64).powi(*k as i32) <= (1u64 << 24) as f64, "hamming graph too large (a^k > 2^24)")
            }
            Honeycomb(n) => need(*n >= 1, "honeycomb needs n >= 1"),
            Hexagon(n) => need(*n >= 1, "hexagon needs n >= 1"),
            Prism(n) => need(*n >= 3, "prism needs n >= 3"),
            Petersen2(n) => need(*n >= 5, "petersen2 needs n >= 5"),
            Join(a, b) | DisjointUnion(a, b) => a.validate().and_then(|_| b.validate()),
            Empty(_) => Ok(()),
        }
    }

    /// Vertex count implied by the parameters (no generation).
    pub fn order(&self) -> usize {
        use FamilySpec::*;
        match self {
            Path(n) | Cycle(n) | Complete(n) | Empty(n) => *n,
            CompleteBipartite(s, t) => s + t,
            Grid(dims) => dims.iter().product(),
            Fan(n) | Wheel(n) => n + 1,
            Hypercube(k) => 1 << k,
            Hamming { k, a } => a.pow(*k as u32),
            Honeycomb(n) => 6 * n * n,
            Hexagon(n) => 3 * n * n - 3 * n + 1,
            Prism(n) | Petersen2(n) => 2 * n,
            Join(a, b) | DisjointUnion(a, b) => a.order() + b.order(),
        }
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    use FamilySpec::*;
    match spec {
        Path(n) => path(*n),
        Cycle(n) => Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n))),
        Complete(n) => Ok(complete(*n)),
        CompleteBipartite(s, t) => Graph::new(s + t, (0..*s).flat_map(|u| (*s..s + t).map(move |v| (u, v)))),
        Grid(dims) => grid(dims),
        Fan(n) => Ok(join(&complete(1), &path(*n)?)),
        Wheel(n) => Ok(join(&complete(1), &generate(&Cycle(*n))?)),
        Hypercube(k) => hamming(*k, 2),
        Hamming { k, a } => hamming(*k, *a),
        Honeycomb(n) => honeycomb(*n),
        Hexagon(n) => Ok(hexagon(*n).0),
        Prism(n) => {
            let n = *n;
            let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 1) % n), (i, n + i)]);
            Graph::new(2 * n, edges)
        }
        Petersen2(n) => {
            let n = *n;
            let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (n + i, n + (i + 2) % n), (i, n + i)]);
            Graph::new(2 * n, edges)
        }
        Join(a, b) => Ok(join(&generate(a)?, &generate(b)?)),
        DisjointUnion(a, b) => Ok(disjoint_union(&generate(a)?, &generate(b)?)),
        Empty(n) => Ok(Graph::empty(*n)),
    }
}

fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n).map(|i| (i - 1, i)))
}

fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph is simple")
}

fn grid(dims: &[usize]) -> Result<Graph> {
    let n: usize = dims.iter().product();
    // stride of coordinate i in the mixed-radix index
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let mut edges = Vec::new();
    for v in 0..n {
        for (&stride, &len) in strides.iter().zip(dims) {
            if (v / stride) % len + 1 < len {
                edges.push((v, v + stride));
            }
        }
    }
    Graph::new(n, edges)
}

fn hamming(k: usize, a: usize) -> Result<Graph> {
    let n = a.pow(k as u32);
    let mut edges = Vec::new();
    for v in 0..n {
        let mut stride = 1;
        for _ in 0..k {
            let digit = (v / stride) % a;
            for d in digit + 1..a {
                edges.push((v, v + (d - digit) * stride));
            }
            stride *= a;
        }
    }
    Graph::new(n, edges)
}

const HEX_DIRS: [(i64, i64); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// Hexagon network and its lattice coordinates `(x, y)` (third coordinate
/// `-x-y`).
pub fn hexagon(n: usize) -> (Graph, Vec<(i64, i64)>) {
    let r = n as i64 - 1;
    let mut points = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if (x + y).abs() <= r {
                points.push((x, y));
            }
        }
    }
    let index = |p: (i64, i64)| points.binary_search(&p).ok();
    let mut edges = Vec::new();
    for (i, &(x, y)) in points.iter().enumerate() {
        for (dx, dy) in HEX_DIRS {
            if let Some(j) = index((x + dx, y + dy)) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    (Graph::new(points.len(), edges).expect("lattice graph is simple"), points)
}

/// Triangular faces of a plane graph whose every triangle bounds a face
/// (true for the hexagon networks), as sorted vertex triples.
pub fn triangles(g: &Graph) -> Vec<[Vertex; 3]> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        for &w in g.neighbors(v) {
            if w > v && g.has_edge(u, w) {
                out.push([u, v, w]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Bounded dual of `hexagon(n + 1)`: one vertex per triangle, adjacent when
/// the triangles share an edge.
fn honeycomb(n: usize) -> Result<Graph> {
    let (hx, _) = hexagon(n + 1);
    let faces = triangles(&hx);
    let mut by_edge: std::collections::HashMap<(Vertex, Vertex), Vec<usize>> = std::collections::HashMap::new();
    for (f, t) in faces.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            by_edge.entry((a, b)).or_default().push(f);
        }
    }
    let mut edges = BTreeSet::new();
    for fs in by_edge.values() {
        if let [a, b] = fs[..] {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::new(faces.len(), edges)
}

/// Disjoint union plus every edge between the two parts.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let edges = g1
        .edges()
        .chain(g2.edges().map(|(u, v)| (u + off, v + off)))
        .chain((0..off).flat_map(|u| (0..g2.n()).map(move |v| (u, v + off))));
    Graph::new(off + g2.n(), edges).expect("join of simple graphs is simple")
}

/// `g2` relabelled by `+g1.n`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.n();
    let edges = g1.edges().chain(g2.edges().map(|(u, v)| (u + off, v + off)));
    Graph::new(off + g2.n(), edges).expect("union of simple graphs is simple")
}

#[derive(Debug, Clone, PartialEq)]
pub enum RandomKind {
    UniformTree { n: usize },
    ErdosRenyi { n: usize, p: f64 },
    /// Communities are contiguous blocks of vertices in `sizes` order.
    Sbm { sizes: Vec<usize>, p: Vec<Vec<f64>> },
}

#[derive(Debug, Clone, PartialEq)]
pub struct RandomSpec {
    pub kind: RandomKind,
    pub seed: u64,
}

impl RandomSpec {
    pub fn uniform_tree(n: usize, seed: u64) -> Self {
        RandomSpec { kind: RandomKind::UniformTree { n }, seed }
    }

    pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Self {
        RandomSpec { kind: RandomKind::ErdosRenyi { n, p }, seed }
    }

    pub fn sbm(sizes: Vec<usize>, p: Vec<Vec<f64>>, seed: u64) -> Self {
        RandomSpec { kind: RandomKind::Sbm { sizes, p }, seed }
    }

    pub fn validate(&self) -> Result<()> {
        let prob = |p: f64| (0.0..=1.0).contains(&p);
        match &self.kind {
            RandomKind::UniformTree { n } if *n == 0 => Err(Error::input("tree needs n >= 1")),
            RandomKind::ErdosRenyi { p, .. } if !prob(*p) => Err(Error::input("p must lie in [0, 1]")),
            RandomKind::Sbm { sizes, p } => {
                let c = sizes.len();
                if c == 0 || sizes.contains(&0) {
                    return Err(Error::input("sbm needs at least one community, all sizes positive"));
                }
                if p.len() != c || p.iter().any(|row| row.len() != c) {
                    return Err(Error::input(format!("sbm probability matrix must be {c} x {c}")));
                }
                for i in 0..c {
                    for j in 0..c {
                        if !prob(p[i][j]) {
                            return Err(Error::input("sbm probabilities must lie in [0, 1]"));
                        }
                        if p[i][j] != p[j][i] {
                            return Err(Error::input("sbm probability matrix must be symmetric"));
                        }
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

pub fn generate_random(spec: &RandomSpec) -> Result<Graph> {
    spec.validate()?;
    let mut rng = SplitMix64::new(spec.seed);
    match &spec.kind {
        RandomKind::UniformTree { n } => {
            let n = *n;
            let seq: Vec<usize> = (0..n.saturating_sub(2)).map(|_| rng.below_usize(n)).collect();
            prufer_decode(n, &seq)
        }
        RandomKind::ErdosRenyi { n, p } => {
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if rng.next_f64() < *p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(*n, edges)
        }
        RandomKind::Sbm { sizes, p } => {
            let community: Vec<usize> = sizes.iter().enumerate().flat_map(|(c, &s)| std::iter::repeat(c).take(s)).collect();
            let n = community.len();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < p[community[u]][community[v]] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, edges)
        }
    }
}

/// Tree on `0..n` from a Prüfer sequence of length `n - 2` (linear time).
pub fn prufer_decode(n: usize, seq: &[usize]) -> Result<Graph> {
    if n <= 1 {
        return if seq.is_empty() { Ok(Graph::empty(n)) } else { Err(Error::input("sequence too long")) };
    }
    if seq.len() != n - 2 {
        return Err(Error::input(format!("Prüfer sequence for n = {n} must have {} entries", n - 2)));
    }
    if let Some(&x) = seq.iter().find(|&&x| x >= n) {
        return Err(Error::input(format!("Prüfer entry {x} out of range")));
    }
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&i| degree[i] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for &x in seq {
        edges.push((leaf, x));
        degree[x] -= 1;
        if x < ptr && degree[x] == 1 {
            leaf = x;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Graph::new(n, edges)
}

/// Prüfer sequence of a labelled tree on `n >= 2` vertices.
pub fn prufer_encode(tree: &Graph) -> Result<Vec<usize>> {
    let n = tree.n();
    if !tree.is_tree() {
        return Err(Error::input("Prüfer encoding needs a tree"));
    }
    if n <= 2 {
        return Ok(Vec::new());
    }
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut seq = Vec::with_capacity(n - 2);
    let mut ptr = (0..n).find(|&i| degree[i] == 1).expect("a leaf exists");
    let mut leaf = ptr;
    for _ in 0..n - 2 {
        removed[leaf] = true;
        let parent = *tree.neighbors(leaf).iter().find(|&&w| !removed[w]).expect("leaf has a live neighbour");
        seq.push(parent);
        degree[parent] -= 1;
        if parent < ptr && degree[parent] == 1 {
            leaf = parent;
        } else {
            ptr += 1;
            while degree[ptr] != 1 || removed[ptr] {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    Ok(seq)
}

/// Either a named family or a seeded random model.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSpec {
    Family(FamilySpec),
    Random(RandomSpec),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f) => generate(f),
            GraphSpec::Random(r) => generate_random(r),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    /// `"fan:12"`, `"grid:4x3x2"`, `"hamming:k=3,a=4"`, `"er:n=100,p=0.5,seed=7"`,
    /// `"tree:n=50,seed=1"`, `"sbm:sizes=50/50,p=0.5/0.1/0.1/0.5,seed=3"`,
    /// `"join(complete:1;path:4)"`, `"union(path:2;path:2)"`.
    fn from_str(s: &str) -> Result<GraphSpec> {
        let s = s.trim();
        let (head, body) = s.split_once(':').unwrap_or((s, ""));
        match head {
            "er" | "tree" | "sbm" => parse_random(head, body).map(GraphSpec::Random),
            _ => s.parse().map(GraphSpec::Family),
        }
    }
}

fn key_values(body: &str) -> Result<Vec<(&str, &str)>> {
    body.split(',')
        .map(|kv| kv.trim().split_once('=').ok_or_else(|| Error::parse(format!("expected key=value, got '{kv}'"))))
        .collect()
}

fn num<T: FromStr>(what: &str, text: &str) -> Result<T> {
    text.trim().parse().map_err(|_| Error::parse(format!("bad value for {what}: '{text}'")))
}

fn parse_random(head: &str, body: &str) -> Result<RandomSpec> {
    let mut n = None;
    let mut p = None;
    let mut seed = None;
    let mut sizes = None;
    for (k, v) in key_values(body)? {
        match k {
            "n" => n = Some(num::<usize>("n", v)?),
            "seed" => seed = Some(num::<u64>("seed", v)?),
            "p" => p = Some(v.split('/').map(|x| num::<f64>("p", x)).collect::<Result<Vec<_>>>()?),
            "sizes" => sizes = Some(v.split('/').map(|x| num::<usize>("sizes", x)).collect::<Result<Vec<_>>>()?),
            other => return Err(Error::parse(format!("unknown key '{other}' for {head}"))),
        }
    }
    let seed = seed.ok_or_else(|| Error::parse(format!("{head} needs an explicit seed")))?;
    let missing = |what: &str| Error::parse(format!("{head} needs {what}"));
    let spec = match head {
        "tree" => RandomSpec::uniform_tree(n.ok_or_else(|| missing("n"))?, seed),
        "er" => {
            let p = p.ok_or_else(|| missing("p"))?;
            if p.len() != 1 {
                return Err(Error::parse("er takes a single p"));
            }
            RandomSpec::erdos_renyi(n.ok_or_else(|| missing("n"))?, p[0], seed)
        }
        _ => {
            let sizes = sizes.ok_or_else(|| missing("sizes"))?;
            let flat = p.ok_or_else(|| missing("p"))?;
            let c = sizes.len();
            if flat.len() != c * c {
                return Err(Error::parse(format!("sbm needs {} probabilities for {c} communities", c * c)));
            }
            RandomSpec::sbm(sizes, flat.chunks(c).map(<[f64]>::to_vec).collect(), seed)
        }
    };
    spec.validate()?;
    Ok(spec)
}

/// Split `a;b` at the top-level `;` of a parenthesised pair.
fn split_pair(inner: &str) -> Result<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ';' if depth == 0 => return Ok((&inner[..i], &inner[i + 1..])),
            _ => {}
        }
    }
    Err(Error::parse(format!("expected 'a;b' in '{inner}'")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let s = s.trim();
        for (name, is_join) in [("join(", true), ("union(", false)] {
            if let Some(rest) = s.strip_prefix(name) {
                let inner = rest.strip_suffix(')').ok_or_else(|| Error::parse(format!("unclosed '{name}'")))?;
                let (a, b) = split_pair(inner)?;
                let (a, b) = (Box::new(a.parse()?), Box::new(b.parse()?));
                return Ok(if is_join { FamilySpec::Join(a, b) } else { FamilySpec::DisjointUnion(a, b) });
            }
        }
        let (head, body) = s.split_once(':').ok_or_else(|| Error::parse(format!("expected 'family:params', got '{s}'")))?;
        let one = || num::<usize>(head, body);
        let dims = || body.split('x').map(|x| num::<usize>(head, x)).collect::<Result<Vec<_>>>();
        let spec = match head {
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "kbip" | "complete_bipartite" => match dims()?[..] {
                [a, b] => FamilySpec::CompleteBipartite(a, b),
                _ => return Err(Error::parse("complete_bipartite expects SxT")),
            },
            "grid" => FamilySpec::Grid(dims()?),
            "fan" => FamilySpec::Fan(one()?),
            "wheel" => FamilySpec::Wheel(one()?),
            "hypercube" => FamilySpec::Hypercube(one()?),
            "hamming" => {
                let (mut k, mut a) = (None, None);
                for (key, v) in key_values(body)? {
                    match key {
                        "k" => k = Some(num("k", v)?),
                        "a" => a = Some(num("a", v)?),
                        other => return Err(Error::parse(format!("unknown hamming key '{other}'"))),
                    }
                }
                match (k, a) {
                    (Some(k), Some(a)) => FamilySpec::Hamming { k, a },
                    _ => return Err(Error::parse("hamming needs k and a")),
                }
            }
            "honeycomb" => FamilySpec::Honeycomb(one()?),
            "hexagon" => FamilySpec::Hexagon(one()?),
            "prism" => FamilySpec::Prism(one()?),
            "petersen2" => FamilySpec::Petersen2(one()?),
            "empty" => FamilySpec::Empty(one()?),
            other => return Err(Error::parse(format!("unknown family '{other}'"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteBipartite(s, t) => write!(f, "kbip:{s}x{t}"),
            Grid(dims) => {
                let parts: Vec<String> = dims.iter().map(usize::to_string).collect();
                write!(f, "grid:{}", parts.join("x"))
            }
            Fan(n) => write!(f, "fan:{n}"),
            Wheel(n) => write!(f, "wheel:{n}"),
            Hypercube(k) => write!(f, "hypercube:{k}"),
            Hamming { k, a } => write!(f, "hamming:k={k},a={a}"),
            Honeycomb(n) => write!(f, "honeycomb:{n}"),
            Hexagon(n) => write!(f, "hexagon:{n}"),
            Prism(n) => write!(f, "prism:{n}"),
            Petersen2(n) => write!(f, "petersen2:{n}"),
            Join(a, b) => write!(f, "join({a};{b})"),
            DisjointUnion(a, b) => write!(f, "union({a};{b})"),
            Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Graph {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn grid_4x3() {
        let grid = g("grid:4x3");
        assert_eq!(grid.n(), 12);
        assert!((0..12).all(|v| grid.degree(v) <= 4));
        assert_eq!(grid.all_pairs_distances().get(0, 11), 5);
    }

    #[test]
    fn hexagon_and_honeycomb_counts() {
        assert_eq!(g("hexagon:1").n(), 1);
        assert_eq!(g("hexagon:2").n(), 7);
        assert_eq!(g("hexagon:3").n(), 19);
        assert_eq!(g("honeycomb:1").n(), 6);
        assert_eq!(g("honeycomb:2").n(), 24);
        // HC(1) is a single hexagon
        let hc1 = g("honeycomb:1");
        assert_eq!(hc1.m(), 6);
        assert!((0..6).all(|v| hc1.degree(v) == 2));
    }

    #[test]
    fn fan_and_wheel_shape() {
        let fan = g("fan:7");
        assert_eq!(fan.n(), 8);
        assert_eq!(fan.degree(0), 7);
        assert!((1..7).all(|v| fan.has_edge(v, v + 1)));
        assert!(!fan.has_edge(1, 7));
        assert!(g("wheel:7").has_edge(1, 7));
        assert_eq!(g("join(complete:1;path:4)"), g("fan:4"));
        assert_eq!(g("join(complete:1;cycle:5)"), g("wheel:5"));
    }

    #[test]
    fn union_example() {
        let u = g("union(path:2;path:2)");
        assert_eq!((u.n(), u.m()), (4, 2));
        assert!(!u.is_connected());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = g("petersen2:5");
        assert_eq!((p.n(), p.m()), (10, 15));
        assert!((0..10).all(|v| p.degree(v) == 3));
        assert_eq!(p.diameter(), 2);
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["fan:12", "grid:4x3x2", "hamming:k=3,a=4", "kbip:2x3", "join(complete:1;path:4)", "union(cycle:3;empty:2)"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("petersen2:4".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("er:n=10,p=0.5".parse::<GraphSpec>().is_err(), "seed is mandatory");
        let er: GraphSpec = "er:n=100,p=0.5,seed=7".parse().unwrap();
        assert_eq!(er, GraphSpec::Random(RandomSpec::erdos_renyi(100, 0.5, 7)));
        let sbm: GraphSpec = "sbm:sizes=3/2,p=0.5/0.1/0.1/0.5,seed=3".parse().unwrap();
        assert_eq!(sbm.build().unwrap().n(), 5);
    }

    #[test]
    fn random_examples() {
        let t = generate_random(&RandomSpec::uniform_tree(5, 11)).unwrap();
        assert!(t.is_tree());
        assert_eq!(t.m(), 4);
        assert_eq!(generate_random(&RandomSpec::erdos_renyi(100, 0.0, 1)).unwrap().m(), 0);
        assert_eq!(generate_random(&RandomSpec::erdos_renyi(100, 1.0, 1)).unwrap().m(), 4950);
        assert!(generate_random(&RandomSpec::erdos_renyi(10, 1.5, 1)).is_err());
        let asym = RandomSpec::sbm(vec![2, 2], vec![vec![0.5, 0.1], vec![0.2, 0.5]], 1);
        assert!(generate_random(&asym).is_err());
    }

    #[test]
    fn prufer_small_cases() {
        assert_eq!(prufer_decode(1, &[]).unwrap().n(), 1);
        assert_eq!(prufer_decode(2, &[]).unwrap().m(), 1);
        // star centred at 0
        let star = prufer_decode(5, &[0, 0, 0]).unwrap();
        assert_eq!(star.degree(0), 4);
        assert_eq!(prufer_encode(&star).unwrap(), vec![0, 0, 0]);
        assert!(prufer_decode(4, &[0]).is_err());
        assert!(prufer_decode(4, &[0, 9]).is_err());
    }
}
