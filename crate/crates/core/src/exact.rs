//! Exact metric dimension: lexicographic brute force (plain, doubly, strong
//! and truncated), closed forms for the named families, the linear-time tree
//! formula, and lower bounds.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::graph::{DistanceMatrix, Graph, Vertex, VertexSet, INF};
use crate::partition::{Coded, Refiner};
use crate::resolving::{self, strongly_separates, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    ClosedForm,
    TreeFormula,
    Ich,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "brute_force",
            Method::ClosedForm => "closed_form",
            Method::TreeFormula => "tree_formula",
            Method::Ich => "ich",
        })
    }
}

/// A resolving set together with its size. For exact methods `beta` is the
/// metric dimension; for [`Method::Ich`] it is an upper bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaResult {
    pub beta: usize,
    pub witness: VertexSet,
    pub method: Method,
}

impl BetaResult {
    fn new(witness: Vec<Vertex>, method: Method) -> BetaResult {
        BetaResult { beta: witness.len(), witness: VertexSet::new(witness).expect("witness members are distinct"), method }
    }
}

impl fmt::Display for BetaResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "beta={} witness={}", self.beta, self.witness)
    }
}

/// Closed interval `[lo, hi]` known to contain the metric dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BetaInterval {
    pub lo: usize,
    pub hi: usize,
}

impl BetaInterval {
    pub fn contains(&self, beta: usize) -> bool {
        self.lo <= beta && beta <= self.hi
    }
}

/// Which resolvability notion a solver or checker targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Resolving,
    Doubly,
    Strong,
    /// Distances capped at `k + 1`.
    Truncated(u32),
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s.trim() {
            "resolving" => Ok(Variant::Resolving),
            "doubly" => Ok(Variant::Doubly),
            "strong" => Ok(Variant::Strong),
            other => match other.strip_prefix("truncated:") {
                Some(k) => {
                    let k = k.parse().map_err(|_| Error::parse(format!("bad truncation level '{k}'")))?;
                    if k == 0 {
                        return Err(Error::input("truncation level must be at least 1"));
                    }
                    Ok(Variant::Truncated(k))
                }
                None => Err(Error::parse(format!("unknown variant '{other}' (resolving|doubly|strong|truncated:k)"))),
            },
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Resolving => f.write_str("resolving"),
            Variant::Doubly => f.write_str("doubly"),
            Variant::Strong => f.write_str("strong"),
            Variant::Truncated(k) => write!(f, "truncated:{k}"),
        }
    }
}

/// Check `set` against `variant` on `g`.
pub fn verify_variant(g: &Graph, d: &DistanceMatrix, set: &VertexSet, variant: Variant) -> Result<resolving::Verdict> {
    match variant {
        Variant::Resolving => resolving::is_resolving(d, set),
        Variant::Doubly => resolving::is_doubly_resolving(d, set),
        Variant::Strong => resolving::is_strongly_resolving(g, d, set),
        Variant::Truncated(k) => resolving::is_truncated_resolving(d, k, set),
    }
}

// ---------------------------------------------------------------------------
// brute force

/// Depth-first search for a column set of exactly `k` columns whose joint
/// refinement separates every row. Columns are tried in increasing order, so
/// the first success is the lexicographically smallest such set.
///
/// Only called for `k` no larger than the optimum, which makes every member
/// of a solution non-redundant: a column that does not split the current
/// partition can be skipped.
struct LevelSearch<'a> {
    coded: &'a Coded,
    k: usize,
    /// `cap[r]`: most rows that `r` further columns can still tell apart.
    cap: Vec<u64>,
}

impl<'a> LevelSearch<'a> {
    fn new(coded: &'a Coded, k: usize) -> Self {
        let width = coded.ncodes.iter().copied().max().unwrap_or(1) as u64;
        let mut cap = vec![1u64; k + 1];
        for r in 1..=k {
            cap[r] = cap[r - 1].saturating_mul(width);
        }
        LevelSearch { coded, k, cap }
    }

    fn buffers(&self) -> Vec<Vec<u32>> {
        let mut level = vec![Vec::with_capacity(self.coded.rows); self.k + 1];
        level[0] = vec![0; self.coded.rows];
        level
    }

    fn initial_classes(&self) -> u32 {
        u32::from(self.coded.rows > 0)
    }

    /// Smallest solution, searching first columns in parallel.
    fn first(&self) -> Option<Vec<usize>> {
        if self.coded.rows <= 1 {
            return Some(Vec::new());
        }
        if self.k == 0 {
            return None;
        }
        (0..self.coded.cols()).into_par_iter().find_map_first(|c0| {
            let mut level = self.buffers();
            let mut refiner = Refiner::new();
            let mut sizes = Vec::new();
            let mut chosen = Vec::with_capacity(self.k);
            self.try_column(c0, &mut level, self.initial_classes(), &mut chosen, &mut refiner, &mut sizes)
                .then_some(chosen)
        })
    }

    /// Every solution, in lexicographic order.
    fn all(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if self.coded.rows <= 1 {
            out.push(Vec::new());
            return out;
        }
        let mut level = self.buffers();
        let mut refiner = Refiner::new();
        let mut sizes = Vec::new();
        let mut chosen = Vec::with_capacity(self.k);
        self.collect(0, &mut level, self.initial_classes(), &mut chosen, &mut refiner, &mut sizes, &mut out);
        out
    }

    /// Refine by column `c` and recurse. Leaves `chosen` extended on success.
    fn try_column(
        &self,
        c: usize,
        level: &mut [Vec<u32>],
        ncl: u32,
        chosen: &mut Vec<usize>,
        refiner: &mut Refiner,
        sizes: &mut Vec<u32>,
    ) -> bool {
        let Some(m) = self.step(c, level, ncl, chosen.len(), refiner, sizes) else {
            return false;
        };
        chosen.push(c);
        if m as usize == self.coded.rows || self.descend(c + 1, &mut level[1..], m, chosen, refiner, sizes) {
            return true;
        }
        chosen.pop();
        false
    }

    /// Refine `level[0]` by column `c` into `level[1]`; `None` if the column
    /// is useless here or the result cannot be completed.
    fn step(&self, c: usize, level: &mut [Vec<u32>], ncl: u32, depth: usize, refiner: &mut Refiner, sizes: &mut Vec<u32>) -> Option<u32> {
        let rem = self.k - depth;
        if rem == 0 || self.coded.cols() - c < rem {
            return None;
        }
        let (cur, rest) = level.split_first_mut().expect("one buffer per depth");
        let out = &mut rest[0];
        let m = refiner.refine(cur, ncl, &self.coded.codes[c], self.coded.ncodes[c], out);
        if m == ncl {
            return None;
        }
        if (m as usize) < self.coded.rows {
            sizes.clear();
            sizes.resize(m as usize, 0);
            let mut largest = 0;
            for &x in out.iter() {
                sizes[x as usize] += 1;
                largest = largest.max(sizes[x as usize]);
            }
            if largest as u64 > self.cap[rem - 1] {
                return None;
            }
        }
        Some(m)
    }

    fn descend(&self, next: usize, level: &mut [Vec<u32>], ncl: u32, chosen: &mut Vec<usize>, refiner: &mut Refiner, sizes: &mut Vec<u32>) -> bool {
        (next..self.coded.cols()).any(|c| self.try_column(c, level, ncl, chosen, refiner, sizes))
    }

    #[allow(clippy::too_many_arguments)]
    fn collect(
        &self,
        next: usize,
        level: &mut [Vec<u32>],
        ncl: u32,
        chosen: &mut Vec<usize>,
        refiner: &mut Refiner,
        sizes: &mut Vec<u32>,
        out: &mut Vec<Vec<usize>>,
    ) {
        for c in next..self.coded.cols() {
            let Some(m) = self.step(c, level, ncl, chosen.len(), refiner, sizes) else {
                continue;
            };
            chosen.push(c);
            if m as usize == self.coded.rows {
                if chosen.len() == self.k {
                    out.push(chosen.clone());
                }
            } else {
                self.collect(c + 1, &mut level[1..], m, chosen, refiner, sizes, out);
            }
            chosen.pop();
        }
    }
}

/// Smallest `k >= 0` with `base^k + k >= n`.
fn power_bound(base: u64, n: usize) -> usize {
    let n = n as u64;
    let mut k = 0u64;
    let mut pow = 1u64;
    while pow.saturating_add(k) < n {
        k += 1;
        pow = pow.saturating_mul(base);
    }
    k as usize
}

/// Lower bounds available from the matrix alone: at most `delta^k` vertices
/// outside a `k`-set, where `delta` counts the distinct nonzero entries of a
/// row; and all but one member of every class of interchangeable vertices.
fn matrix_lower_bound(d: &DistanceMatrix, coded: &Coded) -> usize {
    let n = d.n();
    if n <= 1 {
        return 0;
    }
    let delta = coded.ncodes.iter().map(|&c| c as u64 - 1).max().unwrap_or(0);
    power_bound(delta, n).max(distance_twin_bound(d))
}

/// `sum (|class| - 1)` over classes of `u ~ v` iff `d(u, w) = d(v, w)` for
/// every other `w`. Skipped (0) above 256 vertices.
fn distance_twin_bound(d: &DistanceMatrix) -> usize {
    let n = d.n();
    if n > 256 {
        return 0;
    }
    // twins have equal row multisets, so only compare within those groups
    let mut groups: HashMap<Vec<u32>, Vec<Vertex>> = HashMap::new();
    for v in 0..n {
        let mut key = d.row(v).to_vec();
        key.sort_unstable();
        groups.entry(key).or_default().push(v);
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut bound = 0;
    for members in groups.values() {
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                let twins = (0..n).all(|w| w == u || w == v || d.get(u, w) == d.get(v, w));
                if twins {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                        bound += 1;
                    }
                }
            }
        }
    }
    bound
}

fn run_levels(coded: &Coded, from: usize) -> Vec<usize> {
    let mut k = from;
    loop {
        if let Some(found) = LevelSearch::new(coded, k).first() {
            return found;
        }
        k += 1;
    }
}

/// Metric dimension by exhaustive search over subsets of increasing size,
/// starting at the matrix lower bounds. The witness is the lexicographically
/// smallest resolving set of minimum size. Works equally on truncated
/// matrices. A single vertex gives `beta = 0`.
pub fn brute_force_beta(d: &DistanceMatrix) -> BetaResult {
    let coded = Coded::from_table(d);
    let lb = matrix_lower_bound(d, &coded);
    BetaResult::new(run_levels(&coded, lb), Method::BruteForce)
}

/// Smallest column set separating all rows of `table` (multilateration).
/// Fails when two rows are identical.
pub fn brute_force_table<T: Table + ?Sized>(table: &T) -> Result<BetaResult> {
    let coded = Coded::from_table(table);
    let all: Vec<usize> = (0..coded.cols()).collect();
    if let Some((u, v)) = resolving::resolves_table(table, &all)?.witness() {
        return Err(Error::Unresolvable(u, v));
    }
    let width = coded.ncodes.iter().copied().max().unwrap_or(1) as u64;
    let mut lb = 0;
    let mut reach = 1u64;
    while reach < coded.rows as u64 && width > 1 {
        reach = reach.saturating_mul(width);
        lb += 1;
    }
    Ok(BetaResult::new(run_levels(&coded, lb), Method::BruteForce))
}

/// Every resolving set of size `k`, in lexicographic order. Meaningful when
/// `k` is the metric dimension (smaller `k` yields nothing; for larger `k`
/// sets with redundant members are skipped).
pub fn resolving_sets_of_size(d: &DistanceMatrix, k: usize) -> Vec<Vec<Vertex>> {
    LevelSearch::new(&Coded::from_table(d), k).all()
}

/// Smallest doubly resolving set. Needs a connected graph on `n >= 2`
/// vertices. The witness is lexicographically smallest; its first member is
/// the anchor of the difference vectors.
pub fn brute_force_doubly(d: &DistanceMatrix) -> Result<BetaResult> {
    let n = d.n();
    if n < 2 {
        return Err(Error::input("doubly resolving sets need at least two vertices"));
    }
    if !d.is_finite() {
        return Err(Error::input("doubly resolving sets are only defined on connected graphs"));
    }
    let tables: Vec<Coded> = (0..n)
        .map(|a| {
            let cols = (a + 1..n)
                .map(|c| (0..n).map(|v| d.get(c, v) as i64 - d.get(a, v) as i64).collect())
                .collect();
            Coded::from_columns(n, cols)
        })
        .collect();
    for k in 2..=n {
        let found = tables.par_iter().enumerate().find_map_first(|(a, coded)| {
            LevelSearch::new(coded, k - 1)
                .first()
                .map(|rest| std::iter::once(a).chain(rest.into_iter().map(|c| a + 1 + c)).collect::<Vec<_>>())
        });
        if let Some(w) = found {
            return Ok(BetaResult::new(w, Method::BruteForce));
        }
    }
    unreachable!("the whole vertex set is doubly resolving on a connected graph")
}

/// Smallest strong resolving set of a connected graph with at most 128
/// vertices, by lexicographic hitting-set search over vertex pairs.
pub fn brute_force_strong(g: &Graph, d: &DistanceMatrix) -> Result<BetaResult> {
    let n = g.n();
    if n != d.n() {
        return Err(Error::input("graph and distance matrix sizes differ"));
    }
    if !g.is_connected() {
        return Err(Error::input("strong resolvability needs a connected graph"));
    }
    if n > 128 {
        return Err(Error::input("strong brute force supports at most 128 vertices"));
    }
    let mut masks: Vec<u128> = Vec::new();
    for v in 0..n {
        for u in 0..v {
            let mask = (0..n).filter(|&s| strongly_separates(d, s, u, v)).fold(0u128, |m, s| m | 1 << s);
            masks.push(mask);
        }
    }
    // a constraint implied by a smaller one can go
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks.dedup();
    let mut kept: Vec<u128> = Vec::new();
    for m in masks {
        if !kept.iter().any(|&k| k & m == k) {
            kept.push(m);
        }
    }
    for k in 0..=n {
        let mut chosen = Vec::with_capacity(k);
        if strong_dfs(n, k, 0, &kept, &mut chosen) {
            return Ok(BetaResult::new(chosen, Method::BruteForce));
        }
    }
    unreachable!("all vertices strongly resolve a connected graph")
}

fn strong_dfs(n: usize, k: usize, next: usize, unhit: &[u128], chosen: &mut Vec<usize>) -> bool {
    if unhit.is_empty() {
        return true;
    }
    let rem = k - chosen.len();
    if rem == 0 {
        return false;
    }
    let ahead = if next >= 128 { 0 } else { u128::MAX << next };
    // the next member cannot exceed the last feasible hitter of any constraint
    let mut limit = n;
    for &m in unhit {
        let feasible = m & ahead;
        if feasible == 0 {
            return false;
        }
        limit = limit.min(127 - feasible.leading_zeros() as usize + 1);
    }
    // pairwise-disjoint constraints each need their own member
    let mut used = 0u128;
    let mut disjoint = 0;
    for &m in unhit {
        let f = m & ahead;
        if f & used == 0 {
            used |= f;
            disjoint += 1;
            if disjoint > rem {
                return false;
            }
        }
    }
    for c in next..limit.min(n + 1 - rem) {
        let rest: Vec<u128> = unhit.iter().copied().filter(|m| m >> c & 1 == 0).collect();
        chosen.push(c);
        if strong_dfs(n, k, c + 1, &rest, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Exhaustive solver for any variant on `g`.
pub fn brute_force_variant(g: &Graph, variant: Variant) -> Result<BetaResult> {
    let d = g.all_pairs_distances();
    match variant {
        Variant::Resolving => Ok(brute_force_beta(&d)),
        Variant::Doubly => brute_force_doubly(&d),
        Variant::Strong => brute_force_strong(g, &d),
        Variant::Truncated(k) => Ok(brute_force_beta(&d.truncate(k)?)),
    }
}

// ---------------------------------------------------------------------------
// trees

/// `beta(T) = leaves - exterior major vertices` in one pass. Each leaf walks
/// through degree-2 vertices to its major vertex; the witness keeps every
/// leaf except the smallest one per major vertex. Paths give `{0-end}` and a
/// single vertex gives the empty set.
pub fn tree_beta(g: &Graph) -> Result<BetaResult> {
    if !g.is_tree() {
        return Err(Error::input("tree_beta needs a connected acyclic graph"));
    }
    let n = g.n();
    if n == 1 {
        return Ok(BetaResult::new(Vec::new(), Method::TreeFormula));
    }
    if (0..n).all(|v| g.degree(v) <= 2) {
        let end = (0..n).find(|&v| g.degree(v) == 1).expect("a path has an endpoint");
        return Ok(BetaResult::new(vec![end], Method::TreeFormula));
    }
    // owner[major] = smallest leaf attached to it so far
    let mut owner = vec![usize::MAX; n];
    let mut witness = Vec::new();
    for leaf in (0..n).filter(|&v| g.degree(v) == 1) {
        let (mut prev, mut cur) = (leaf, g.neighbors(leaf)[0]);
        while g.degree(cur) == 2 {
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            prev = cur;
            cur = next;
        }
        if owner[cur] == usize::MAX {
            owner[cur] = leaf;
        } else {
            witness.push(leaf);
        }
    }
    witness.sort_unstable();
    Ok(BetaResult::new(witness, Method::TreeFormula))
}

/// Sum of the metric dimensions of the connected components, with a single
/// vertex contributing 0. Trees use the tree formula, everything else brute
/// force.
pub fn disconnected_beta(g: &Graph) -> usize {
    g.components()
        .iter()
        .map(|comp| {
            let h = g.induced(comp);
            match tree_beta(&h) {
                Ok(r) => r.beta,
                Err(_) => brute_force_beta(&h.all_pairs_distances()).beta,
            }
        })
        .sum()
}

// ---------------------------------------------------------------------------
// lower bounds

/// All but one vertex of every twin class must be in any resolving set.
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.twin_classes().iter().map(|c| c.len() - 1).sum()
}

/// Smallest `k` with `diam^k + k >= n`.
pub fn diameter_lower_bound(g: &Graph) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::input("diameter bound needs at least two vertices"));
    }
    let diam = g.diameter();
    if diam == INF {
        return Err(Error::input("diameter bound needs a connected graph"));
    }
    Ok(power_bound(diam as u64, g.n()).max(1))
}

/// `[max(1, beta(T) - 2), beta(T) + 1]` for a connected unicyclic graph,
/// where `T` drops the lexicographically largest edge of the cycle.
pub fn unicyclic_interval(g: &Graph) -> Result<BetaInterval> {
    let tree = unicyclic_spanning_tree(g)?;
    let b = tree_beta(&tree)?.beta;
    Ok(BetaInterval { lo: b.saturating_sub(2).max(1), hi: b + 1 })
}

/// The spanning tree used by [`unicyclic_interval`].
pub fn unicyclic_spanning_tree(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if !g.is_connected() || g.m() != n || n < 3 {
        return Err(Error::input("graph is not connected and unicyclic"));
    }
    // peel leaves; what survives is the cycle
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<Vertex> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut removed = vec![false; n];
    while let Some(v) = stack.pop() {
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    let drop = g.edges().filter(|&(u, v)| !removed[u] && !removed[v]).last().expect("unicyclic graph has a cycle");
    Graph::new(n, g.edges().filter(|&e| e != drop))
}

// ---------------------------------------------------------------------------
// closed forms

/// Closed-form metric dimension with a verified witness when one is known for
/// `spec`, otherwise brute force.
pub fn family_beta(spec: &FamilySpec) -> Result<BetaResult> {
    match closed_form_beta(spec) {
        Ok(r) => Ok(r),
        Err(Error::InvalidInput(_)) if spec.validate().is_ok() => {
            Ok(brute_force_beta(&families::generate(spec)?.all_pairs_distances()))
        }
        Err(e) => Err(e),
    }
}

/// Closed-form metric dimension only; an input error when `spec` has none.
/// Every witness is checked before it is returned.
pub fn closed_form_beta(spec: &FamilySpec) -> Result<BetaResult> {
    spec.validate()?;
    use FamilySpec::*;
    let none = || Err(Error::input(format!("no closed form for {spec}")));
    let witness: Vec<Vertex> = match spec {
        Path(1) | Complete(1) | Empty(1) => Vec::new(),
        Path(_) => vec![0],
        Cycle(_) => vec![0, 1],
        Complete(n) => (0..n - 1).collect(),
        CompleteBipartite(s, t) if s + t >= 3 => (0..s - 1).chain(*s..s + t - 1).collect(),
        Grid(dims) => grid_witness(dims),
        Fan(n) | Wheel(n) if *n >= 7 => fan_resolving_set(*n)?.into(),
        Hamming { k: 2, a } if *a >= 2 => rook_witness(*a),
        Hexagon(n) if *n >= 2 => hexagon_witness(*n),
        // a single hexagon is just C_6
        Honeycomb(1) => vec![0, families::generate(spec)?.neighbors(0)[0]],
        Honeycomb(n) => honeycomb_witness(*n),
        Prism(n) if n % 2 == 1 => vec![0, (n - 1) / 2],
        Prism(n) => vec![0, 1, *n],
        Petersen2(_) => return petersen2_beta(spec),
        _ => return none(),
    };
    let g = families::generate(spec)?;
    let mut w = witness;
    w.sort_unstable();
    let set = VertexSet::new(w)?;
    if let Some((u, v)) = resolving::is_resolving(&g.all_pairs_distances(), &set)?.witness() {
        return Err(Error::input(format!("closed-form witness {set} for {spec} leaves {u} and {v} unresolved")));
    }
    Ok(BetaResult { beta: set.len(), witness: set, method: Method::ClosedForm })
}

/// Origin plus the far corner along each non-trivial axis but the last.
fn grid_witness(dims: &[usize]) -> Vec<Vertex> {
    let mut strides = vec![1usize; dims.len()];
    for i in (0..dims.len().saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    let axes: Vec<usize> = (0..dims.len()).filter(|&i| dims[i] > 1).collect();
    if axes.is_empty() {
        return Vec::new();
    }
    let mut w = vec![0];
    w.extend(axes[..axes.len() - 1].iter().map(|&i| (dims[i] - 1) * strides[i]));
    w
}

/// Resolving set of the fan `F_n`, `n >= 7`: path positions `5j+2` and `5j+4`
/// of each full block of five, then `v_n` when `n mod 5` is 2 or 3, and
/// `v_{n-2}, v_n` when it is 4. Path vertex `v_i` is vertex `i`.
pub fn fan_resolving_set(n: usize) -> Result<VertexSet> {
    if n < 7 {
        return Err(Error::input(format!("fan construction needs n >= 7, got {n}")));
    }
    let mut set: Vec<Vertex> = (0..n / 5).flat_map(|j| [5 * j + 2, 5 * j + 4]).collect();
    match n % 5 {
        2 | 3 => set.push(n),
        4 => set.extend([n - 2, n]),
        _ => {}
    }
    VertexSet::new(set)
}

/// `floor((2n + 2) / 5)`, the fan/wheel value for `n >= 7`.
pub fn fan_beta_formula(n: usize) -> usize {
    (2 * n + 2) / 5
}

/// Rook graph `H_{2,a}` (cell `(r, c)` is vertex `r*a + c`): blocks of three
/// rows/columns along the diagonal, each contributing four cells, and a
/// remainder pattern.
fn rook_witness(a: usize) -> Vec<Vertex> {
    let cell = |r: usize, c: usize| r * a + c;
    let (t, rem) = (a / 3, a % 3);
    let blocks = if rem != 0 { t } else { t - 1 };
    let mut w = Vec::new();
    for b in 0..blocks {
        let r = 3 * b;
        w.extend([cell(r, r), cell(r + 1, r), cell(r + 2, r + 1), cell(r + 2, r + 2)]);
    }
    let base = 3 * blocks;
    match rem {
        0 => w.extend([cell(base, base), cell(base + 1, base), cell(base + 1, base + 1)]),
        2 => w.extend([cell(base, base), cell(base, base + 1)]),
        _ => {}
    }
    w
}

/// `floor(2(2a - 1) / 3)`.
pub fn rook_beta_formula(a: usize) -> usize {
    2 * (2 * a - 1) / 3
}

/// Three consecutive corners of the hexagon.
fn hexagon_witness(n: usize) -> Vec<Vertex> {
    let (_, points) = families::hexagon(n);
    let r = n as i64 - 1;
    [(r, -r), (r, 0), (0, r)].iter().map(|p| points.binary_search(p).expect("corner exists")).collect()
}

/// The triangles extreme in the directions 0, 60 and 120 degrees (smallest
/// index on ties), scored by their lattice-coordinate sums.
fn honeycomb_witness(n: usize) -> Vec<Vertex> {
    let (hx, points) = families::hexagon(n + 1);
    let sums: Vec<(i64, i64)> = families::triangles(&hx)
        .iter()
        .map(|t| t.iter().fold((0, 0), |(x, y), &v| (x + points[v].0, y + points[v].1)))
        .collect();
    let scores: [fn(i64, i64) -> i64; 3] = [|x, y| 2 * x + y, |x, y| x + 2 * y, |x, y| y - x];
    scores
        .iter()
        .map(|score| {
            let best = sums.iter().map(|&(x, y)| score(x, y)).max().expect("nonempty");
            sums.iter().position(|&(x, y)| score(x, y) == best).expect("max is attained")
        })
        .collect()
}

/// `P(n, 2)` has dimension 3; the witness is the first resolving triple
/// through vertex 0.
fn petersen2_beta(spec: &FamilySpec) -> Result<BetaResult> {
    let g = families::generate(spec)?;
    let d = g.all_pairs_distances();
    let n = g.n();
    for a in 1..n {
        for b in a + 1..n {
            let set = VertexSet::new(vec![0, a, b])?;
            if resolving::is_resolving(&d, &set)?.is_resolved() {
                return Ok(BetaResult { beta: 3, witness: set, method: Method::ClosedForm });
            }
        }
    }
    Err(Error::input(format!("no resolving triple through vertex 0 in {spec}")))
}

// ---------------------------------------------------------------------------
// metric dimension two

/// The structural checks every graph with a resolving pair `{u, v}` passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Beta2Report {
    pub no_k5: bool,
    pub no_k33: bool,
    pub unique_shortest_path: bool,
    /// Vertices strictly inside a shortest `u`-`v` path have degree at most 5.
    pub interior_degrees_ok: bool,
    /// `u` and `v` have degree at most 3.
    pub endpoint_degrees_ok: bool,
}

impl Beta2Report {
    pub fn all_hold(&self) -> bool {
        self.no_k5 && self.no_k33 && self.unique_shortest_path && self.interior_degrees_ok && self.endpoint_degrees_ok
    }
}

pub fn beta2_necessary_properties(g: &Graph, pair: &VertexSet) -> Result<Beta2Report> {
    if pair.len() != 2 {
        return Err(Error::input("expected a pair of vertices"));
    }
    if !g.is_connected() {
        return Err(Error::input("graph must be connected"));
    }
    let d = g.all_pairs_distances();
    if let Some((a, b)) = resolving::is_resolving(&d, pair)?.witness() {
        return Err(Error::input(format!("pair does not resolve: {a} and {b} collide")));
    }
    let (u, v) = (pair.members()[0], pair.members()[1]);
    let n = g.n();
    // count shortest u-v paths
    let mut count = vec![0u64; n];
    count[u] = 1;
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&w| d.get(u, w));
    for &w in &order {
        for &x in g.neighbors(w) {
            if d.get(u, x) == d.get(u, w) + 1 {
                count[x] = count[x].saturating_add(count[w]);
            }
        }
    }
    let duv = d.get(u, v);
    let on_path = |w: Vertex| w != u && w != v && d.get(u, w) + d.get(w, v) == duv;
    Ok(Beta2Report {
        no_k5: !has_k5(g),
        no_k33: !has_k33(g),
        unique_shortest_path: count[v] == 1,
        interior_degrees_ok: (0..n).filter(|&w| on_path(w)).all(|w| g.degree(w) <= 5),
        endpoint_degrees_ok: g.degree(u) <= 3 && g.degree(v) <= 3,
    })
}

fn has_k5(g: &Graph) -> bool {
    fn grow(g: &Graph, clique: &mut Vec<Vertex>, cands: &[Vertex]) -> bool {
        if clique.len() == 5 {
            return true;
        }
        if clique.len() + cands.len() < 5 {
            return false;
        }
        for (i, &c) in cands.iter().enumerate() {
            let next: Vec<Vertex> = cands[i + 1..].iter().copied().filter(|&x| g.has_edge(c, x)).collect();
            clique.push(c);
            if grow(g, clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }
    (0..g.n()).any(|v| {
        let cands: Vec<Vertex> = g.neighbors(v).iter().copied().filter(|&x| x > v).collect();
        grow(g, &mut vec![v], &cands)
    })
}

/// `K_{3,3}` as a (not necessarily induced) subgraph: three vertices with
/// three common neighbours outside the triple.
fn has_k33(g: &Graph) -> bool {
    let n = g.n();
    let common = |a: &[Vertex], v: Vertex| a.iter().copied().filter(|&x| g.has_edge(v, x)).collect::<Vec<_>>();
    for a in 0..n {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..n {
            let ab = common(g.neighbors(a), b);
            if ab.len() < 3 {
                continue;
            }
            for c in b + 1..n {
                let abc = common(&ab, c);
                if abc.iter().filter(|&&x| x != a && x != b && x != c).count() >= 3 {
                    return true;
                }
            }
        }
    }
    false
}
