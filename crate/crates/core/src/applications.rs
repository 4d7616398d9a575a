//! Uses of resolving sets: locating the source of a spreading process from
//! arrival times, canonical labelling for isomorphism testing, and embedding
//! sequences through Hamming distances to landmark strings.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::exact::{brute_force_beta, resolving_sets_of_size};
use crate::graph::{DistanceMatrix, Graph, Vertex, VertexSet};

// ---------------------------------------------------------------------------
// source localisation

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpreadObservation {
    pub observer: Vertex,
    pub arrival_time: i64,
}

/// Unit-speed spread from `source` started at `t0`: observer `r` sees it at
/// `t0 + d(source, r)`.
pub fn spread_simulate(g: &Graph, source: Vertex, t0: i64, observers: &VertexSet) -> Result<Vec<SpreadObservation>> {
    if !g.is_connected() {
        return Err(Error::input("spread simulation needs a connected graph"));
    }
    if observers.is_empty() {
        return Err(Error::input("no observers"));
    }
    observers.check_range(g.n())?;
    let dist = g.bfs_distances(source)?;
    Ok(observers
        .members()
        .iter()
        .map(|&r| SpreadObservation { observer: r, arrival_time: t0 + dist[r] as i64 })
        .collect())
}

/// The vertex whose distance differences to the observers (relative to the
/// first observer) match the arrival-time differences. The start time never
/// enters.
pub fn locate_source(g: &Graph, observers: &VertexSet, observations: &[SpreadObservation]) -> Result<Vertex> {
    if observers.len() < 2 {
        return Err(Error::input("locating a source with unknown start time needs at least two observers"));
    }
    if !g.is_connected() {
        return Err(Error::input("source localisation needs a connected graph"));
    }
    observers.check_range(g.n())?;
    let times: HashMap<Vertex, i64> = observations.iter().map(|o| (o.observer, o.arrival_time)).collect();
    let t: Vec<i64> = observers
        .members()
        .iter()
        .map(|r| times.get(r).copied().ok_or_else(|| Error::input(format!("no observation for observer {r}"))))
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<u32>> = observers.members().iter().map(|&r| g.bfs_distances(r)).collect::<Result<_>>()?;
    let mut found: Option<Vertex> = None;
    for v in 0..g.n() {
        let matches = (1..t.len()).all(|i| rows[i][v] as i64 - rows[0][v] as i64 == t[i] - t[0]);
        if matches {
            if let Some(u) = found {
                return Err(Error::AmbiguousSource(u, v));
            }
            found = Some(v);
        }
    }
    found.ok_or(Error::InconsistentObservations)
}

// ---------------------------------------------------------------------------
// canonical labelling

/// Adjacency matrix in canonical vertex order, flattened row by row.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub matrix: Vec<u8>,
    /// `labeling[i]` is the input vertex placed at position `i`.
    pub labeling: Vec<Vertex>,
}

impl CanonicalForm {
    /// The form without the labelling, which is what isomorphic graphs share.
    pub fn certificate(&self) -> (usize, &[u8]) {
        (self.n, &self.matrix)
    }
}

/// Canonical form from resolving sets: over every minimum resolving set `R`
/// and every ordering of `R`, sort the vertices by their distance vectors and
/// keep the lexicographically smallest flattened adjacency matrix.
///
/// Twins are interchangeable, so only sets using the lowest-index members of
/// each twin class, listed in increasing order within the class, are tried.
/// Disconnected graphs are handled per component; components are ordered by
/// (size, matrix) and laid out block-diagonally. Exponential in the worst
/// case; meant for graphs of a few dozen vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let comps = g.components();
    if comps.len() <= 1 {
        return connected_form(g);
    }
    let mut forms: Vec<(CanonicalForm, Vec<Vertex>)> = comps.iter().map(|c| (connected_form(&g.induced(c)), c.clone())).collect();
    forms.sort_by(|a, b| (a.0.n, &a.0.matrix).cmp(&(b.0.n, &b.0.matrix)));
    let n = g.n();
    let mut matrix = vec![0u8; n * n];
    let mut labeling = Vec::with_capacity(n);
    let mut off = 0;
    for (form, comp) in &forms {
        for i in 0..form.n {
            for j in 0..form.n {
                matrix[(off + i) * n + off + j] = form.matrix[i * form.n + j];
            }
        }
        labeling.extend(form.labeling.iter().map(|&v| comp[v]));
        off += form.n;
    }
    CanonicalForm { n, matrix, labeling }
}

fn connected_form(g: &Graph) -> CanonicalForm {
    let n = g.n();
    if n <= 1 {
        return CanonicalForm { n, matrix: vec![0; n * n], labeling: (0..n).collect() };
    }
    let d = g.all_pairs_distances();
    let beta = brute_force_beta(&d).beta;
    let classes = g.twin_classes();
    let mut class_of = vec![0; n];
    for (i, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = i;
        }
    }
    // a set is a representative when, inside every twin class, it takes a
    // prefix of the class
    let representative = |set: &[Vertex]| {
        let chosen: HashSet<Vertex> = set.iter().copied().collect();
        classes.iter().all(|c| {
            let taken = c.iter().filter(|v| chosen.contains(v)).count();
            c[..taken].iter().all(|v| chosen.contains(v))
        })
    };
    let mut best: Option<(Vec<u8>, Vec<Vertex>)> = None;
    for set in resolving_sets_of_size(&d, beta).into_iter().filter(|s| representative(s)) {
        let mut order = set.clone();
        for_each_permutation(&mut order, &mut |perm| {
            // twins appear in increasing order
            let mut last: HashMap<usize, Vertex> = HashMap::new();
            for &v in perm.iter() {
                if let Some(&prev) = last.get(&class_of[v]) {
                    if prev > v {
                        return;
                    }
                }
                last.insert(class_of[v], v);
            }
            let (matrix, labeling) = matrix_for(g, &d, perm);
            if best.as_ref().map_or(true, |(m, _)| matrix < *m) {
                best = Some((matrix, labeling));
            }
        });
    }
    let (matrix, labeling) = best.expect("a minimum resolving set exists");
    CanonicalForm { n, matrix, labeling }
}

fn matrix_for(g: &Graph, d: &DistanceMatrix, order: &[Vertex]) -> (Vec<u8>, Vec<Vertex>) {
    let n = g.n();
    let mut labeling: Vec<Vertex> = (0..n).collect();
    labeling.sort_by_cached_key(|&v| order.iter().map(|&r| d.get(r, v)).collect::<Vec<_>>());
    let mut matrix = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            matrix[i * n + j] = u8::from(g.has_edge(labeling[i], labeling[j]));
        }
    }
    (matrix, labeling)
}

/// Heap's algorithm.
fn for_each_permutation<F: FnMut(&[Vertex])>(items: &mut [Vertex], f: &mut F) {
    fn heap<F: FnMut(&[Vertex])>(k: usize, items: &mut [Vertex], f: &mut F) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k - 1 {
            heap(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
        heap(k - 1, items, f);
    }
    let k = items.len();
    heap(k, items, f);
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> bool {
    if g1.n() != g2.n() || g1.m() != g2.m() {
        return false;
    }
    let mut d1: Vec<usize> = (0..g1.n()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.n()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    d1 == d2 && canonical_form(g1).certificate() == canonical_form(g2).certificate()
}

/// Outcome of [`high_degree_labeling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeLabeling {
    /// The chosen top-degree vertices, highest degree first (lower index on
    /// ties).
    pub selected: Vec<Vertex>,
    /// Per vertex: 0 for itself, 1 for a neighbour, 2 otherwise, one entry
    /// per selected vertex.
    pub labels: Vec<Vec<u8>>,
    pub labels_unique: bool,
    pub degrees_distinct: bool,
}

impl DegreeLabeling {
    pub fn success(&self) -> bool {
        self.labels_unique && self.degrees_distinct
    }
}

/// Label every vertex by its adjacency to the `ceil(3 log2 n)` vertices of
/// highest degree. Succeeds when the labels are unique and the selected
/// degrees are pairwise distinct, so that the selection itself can be
/// recovered from the degrees.
pub fn high_degree_labeling(g: &Graph) -> DegreeLabeling {
    let n = g.n();
    let want = if n <= 1 { n } else { ((3.0 * (n as f64).log2()) - 1e-9).ceil() as usize };
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let selected: Vec<Vertex> = by_degree.into_iter().take(want.min(n)).collect();
    let labels: Vec<Vec<u8>> = (0..n)
        .map(|v| {
            selected
                .iter()
                .map(|&s| if s == v { 0 } else if g.has_edge(s, v) { 1 } else { 2 })
                .collect()
        })
        .collect();
    let labels_unique = labels.iter().collect::<HashSet<_>>().len() == n;
    let degrees: HashSet<usize> = selected.iter().map(|&s| g.degree(s)).collect();
    DegreeLabeling { degrees_distinct: degrees.len() == selected.len(), selected, labels, labels_unique }
}

// ---------------------------------------------------------------------------
// sequence embedding

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceEmbedding {
    pub a: usize,
    pub k: usize,
    pub landmarks: Vec<String>,
    pub sequences: Vec<String>,
    /// `vectors[i][j]`: Hamming distance from sequence `i` to landmark `j`.
    pub vectors: Vec<Vec<u32>>,
    /// Distinct input sequences received distinct vectors.
    pub injective: bool,
}

fn check_sequence(s: &str, a: usize, k: usize) -> Result<()> {
    if s.chars().count() != k {
        return Err(Error::input(format!("'{s}' has length {}, expected {k}", s.chars().count())));
    }
    if let Some(c) = s.chars().find(|c| c.to_digit(10).map_or(true, |d| d as usize >= a)) {
        return Err(Error::input(format!("'{s}' uses symbol '{c}' outside 0..{a}")));
    }
    Ok(())
}

pub fn hamming_distance(x: &str, y: &str) -> u32 {
    x.chars().zip(y.chars()).filter(|(a, b)| a != b).count() as u32
}

/// Vertex `v` of `hamming(k, a)` as a string (first symbol most significant).
pub fn sequence_of(v: usize, a: usize, k: usize) -> String {
    let mut digits = vec![0u8; k];
    let mut x = v;
    for d in digits.iter_mut().rev() {
        *d = (x % a) as u8;
        x /= a;
    }
    digits.iter().map(|d| char::from(b'0' + d)).collect()
}

/// Every string of length `k` over `0..a`, in vertex order of `hamming(k, a)`.
pub fn all_sequences(a: usize, k: usize) -> Vec<String> {
    (0..a.pow(k as u32)).map(|v| sequence_of(v, a, k)).collect()
}

/// Map each sequence to its Hamming distances to the landmarks. Symbols are
/// the digits `0..a`, so `a <= 10`.
pub fn embed_sequences(a: usize, k: usize, landmarks: &[String], sequences: &[String]) -> Result<SequenceEmbedding> {
    if !(1..=10).contains(&a) {
        return Err(Error::input(format!("alphabet size must be in 1..=10, got {a}")));
    }
    for s in landmarks.iter().chain(sequences) {
        check_sequence(s, a, k)?;
    }
    let vectors: Vec<Vec<u32>> =
        sequences.iter().map(|s| landmarks.iter().map(|l| hamming_distance(s, l)).collect()).collect();
    let mut seen: HashMap<&Vec<u32>, &String> = HashMap::new();
    let mut injective = true;
    for (s, v) in sequences.iter().zip(&vectors) {
        if let Some(prev) = seen.insert(v, s) {
            if prev != s {
                injective = false;
            }
        }
    }
    Ok(SequenceEmbedding { a, k, landmarks: landmarks.to_vec(), sequences: sequences.to_vec(), vectors, injective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn set(v: &[usize]) -> VertexSet {
        VertexSet::new(v.to_vec()).unwrap()
    }

    #[test]
    fn spread_examples() {
        let p5 = g(FamilySpec::Path(5));
        let obs = spread_simulate(&p5, 2, 7, &set(&[0, 4])).unwrap();
        assert_eq!(obs.iter().map(|o| o.arrival_time).collect::<Vec<_>>(), vec![9, 9]);
        let obs = spread_simulate(&p5, 4, -3, &set(&[0, 4])).unwrap();
        assert_eq!(obs[1].arrival_time, -3);
        assert!(spread_simulate(&Graph::empty(2), 0, 0, &set(&[1])).is_err());
    }

    #[test]
    fn locate_on_path() {
        let p6 = g(FamilySpec::Path(6));
        let obs = set(&[0, 5]);
        for s in 0..6 {
            for t0 in -5..=5 {
                let o = spread_simulate(&p6, s, t0, &obs).unwrap();
                assert_eq!(locate_source(&p6, &obs, &o).unwrap(), s);
            }
        }
        let single = set(&[0]);
        let o = spread_simulate(&p6, 2, 0, &single).unwrap();
        assert!(locate_source(&p6, &single, &o).is_err());
    }

    #[test]
    fn locate_errors() {
        let p6 = g(FamilySpec::Path(6));
        let obs = set(&[0, 5]);
        let bad = [SpreadObservation { observer: 0, arrival_time: 0 }, SpreadObservation { observer: 5, arrival_time: 10 }];
        assert_eq!(locate_source(&p6, &obs, &bad), Err(Error::InconsistentObservations));
        let c4 = g(FamilySpec::Cycle(4));
        let two = set(&[0, 2]);
        let o = spread_simulate(&c4, 1, 0, &two).unwrap();
        assert!(matches!(locate_source(&c4, &two, &o), Err(Error::AmbiguousSource(..))));
        assert!(locate_source(&p6, &obs, &bad[..1]).is_err());
    }

    #[test]
    fn canonical_forms() {
        let c4 = g(FamilySpec::Cycle(4));
        let p4 = g(FamilySpec::Path(4));
        assert_ne!(canonical_form(&c4).certificate(), canonical_form(&p4).certificate());
        let perm = [2, 0, 3, 1];
        assert_eq!(canonical_form(&p4).certificate(), canonical_form(&p4.permute(&perm).unwrap()).certificate());
        assert!(!is_isomorphic(&g(FamilySpec::CompleteBipartite(3, 3)), &g(FamilySpec::Cycle(6))));
        let f = canonical_form(&c4);
        let relabelled = c4.permute(&invert(&f.labeling)).unwrap();
        assert_eq!(canonical_form(&relabelled).certificate(), f.certificate());
    }

    fn invert(p: &[usize]) -> Vec<usize> {
        let mut inv = vec![0; p.len()];
        for (i, &v) in p.iter().enumerate() {
            inv[v] = i;
        }
        inv
    }

    #[test]
    fn spider_and_caterpillar_differ() {
        // same degree sequence (3,2,2,1,1,1)
        let spider = Graph::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let caterpillar = Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        assert!(!is_isomorphic(&spider, &caterpillar));
        let shuffled = spider.permute(&[5, 3, 1, 0, 2, 4]).unwrap();
        assert!(is_isomorphic(&spider, &shuffled));
    }

    #[test]
    fn disconnected_forms() {
        let a = Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let b = Graph::new(5, [(3, 4), (0, 1), (1, 2)]).unwrap();
        assert!(is_isomorphic(&a, &b));
        let c = Graph::new(5, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_isomorphic(&a, &c));
    }

    #[test]
    fn degree_labelings() {
        assert!(!high_degree_labeling(&g(FamilySpec::Complete(8))).success());
        let star = g(FamilySpec::Join(Box::new(FamilySpec::Complete(1)), Box::new(FamilySpec::Empty(8))));
        let r = high_degree_labeling(&star);
        assert_eq!(r.selected[0], 0);
        assert!(!r.success());
    }

    #[test]
    fn embeddings() {
        assert_eq!(sequence_of(6, 4, 3), "012");
        let all = all_sequences(2, 3);
        let e = embed_sequences(2, 3, &all, &all).unwrap();
        assert!(e.injective);
        let single = embed_sequences(2, 3, &all[..1], &all).unwrap();
        assert!(!single.injective);
        assert!(embed_sequences(2, 3, &["01".to_string()], &all).is_err());
        assert!(embed_sequences(2, 3, &["012".to_string()], &all).is_err());
    }
}
