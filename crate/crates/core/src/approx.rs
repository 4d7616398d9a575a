//! The entropy-greedy heuristic (ICH) and the random-model upper bounds:
//! random subsets in Erdős–Rényi graphs and the first-moment allocation for
//! stochastic block models.
//!
//! Entropies are in nats.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{BetaResult, Method};
use crate::graph::{DistanceMatrix, VertexSet};
use crate::partition::{class_sizes, first_collision, Coded, Refiner};
use crate::resolving::Table;

/// Partition of the rows by their vectors on a set of columns.
#[derive(Debug, Clone, PartialEq)]
pub struct EntropyState {
    /// Classes in first-seen row order, each sorted.
    pub classes: Vec<Vec<usize>>,
    pub class_count: usize,
    /// `-sum (s/n) ln(s/n)` over class sizes `s`.
    pub entropy: f64,
}

impl EntropyState {
    pub fn of<T: Table + ?Sized>(table: &T, cols: &[usize]) -> Result<EntropyState> {
        if let Some(&c) = cols.iter().find(|&&c| c >= table.cols()) {
            return Err(Error::input(format!("column {c} out of range for {} columns", table.cols())));
        }
        let coded = Coded::from_table(table);
        let mut refiner = Refiner::new();
        let mut classes = vec![0u32; coded.rows];
        let mut ncl = u32::from(coded.rows > 0);
        let mut out = Vec::new();
        for &c in cols {
            ncl = refiner.refine(&classes, ncl, &coded.codes[c], coded.ncodes[c], &mut out);
            std::mem::swap(&mut classes, &mut out);
        }
        let mut groups = vec![Vec::new(); ncl as usize];
        for (row, &c) in classes.iter().enumerate() {
            groups[c as usize].push(row);
        }
        let sizes = class_sizes(&classes, ncl);
        Ok(EntropyState { classes: groups, class_count: ncl as usize, entropy: entropy(&sizes, coded.rows) })
    }
}

fn entropy(sizes: &[u32], n: usize) -> f64 {
    let n = n as f64;
    -sizes.iter().map(|&s| s as f64 / n * (s as f64 / n).ln()).sum::<f64>()
}

/// What a candidate column would produce; lower `xlogx` means higher entropy.
#[derive(Debug, Clone)]
struct Score {
    col: usize,
    class_count: u32,
    sorted_sizes: Vec<u32>,
    xlogx: f64,
}

impl Score {
    /// Strictly better than `other` under (entropy, class count, lower index).
    fn beats(&self, other: &Score) -> bool {
        if self.sorted_sizes != other.sorted_sizes {
            let (a, b) = (self.xlogx, other.xlogx);
            let tol = 1e-12 * a.abs().max(b.abs()).max(1.0);
            if a < b - tol {
                return true;
            }
            if a > b + tol {
                return false;
            }
        }
        if self.class_count != other.class_count {
            return self.class_count > other.class_count;
        }
        self.col < other.col
    }
}

/// Greedy resolving set: repeatedly add the column whose refinement has the
/// largest entropy (ties: more classes, then lower index) until every row is
/// alone. Identical class-size multisets count as exact ties.
///
/// Works on any table, in particular truncated matrices and multilateration
/// tables. Fails with the first identical pair when the rows are not
/// pairwise distinct.
pub fn ich_table<T: Table + ?Sized>(table: &T) -> Result<BetaResult> {
    let coded = Coded::from_table(table);
    let n = coded.rows;
    let mut classes = vec![0u32; n];
    let mut ncl = u32::from(n > 0);
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = vec![false; coded.cols()];
    while (ncl as usize) < n {
        let best = (0..coded.cols())
            .into_par_iter()
            .filter(|&c| !used[c])
            .map_init(
                || (Refiner::new(), Vec::new()),
                |(refiner, out), c| {
                    let m = refiner.refine(&classes, ncl, &coded.codes[c], coded.ncodes[c], out);
                    let mut sorted_sizes = class_sizes(out, m);
                    sorted_sizes.sort_unstable();
                    let xlogx = sorted_sizes.iter().map(|&s| s as f64 * (s as f64).ln()).sum();
                    Score { col: c, class_count: m, sorted_sizes, xlogx }
                },
            )
            .reduce_with(|a, b| if b.beats(&a) { b } else { a });
        match best {
            Some(s) if s.class_count > ncl => {
                let mut out = Vec::new();
                ncl = Refiner::new().refine(&classes, ncl, &coded.codes[s.col], coded.ncodes[s.col], &mut out);
                classes = out;
                used[s.col] = true;
                chosen.push(s.col);
            }
            _ => {
                let (u, v) = first_collision(&classes, ncl).expect("unfinished partition has a collision");
                return Err(Error::Unresolvable(u, v));
            }
        }
    }
    Ok(BetaResult { beta: chosen.len(), witness: VertexSet::new(chosen)?, method: Method::Ich })
}

/// [`ich_table`] on a distance matrix. The witness keeps the order in which
/// vertices were added.
pub fn ich(d: &DistanceMatrix) -> Result<BetaResult> {
    ich_table(d)
}

/// `ceil(-3 ln n / ln(p^2 + (1-p)^2))`: size of a uniformly random subset
/// that resolves `G(n, p)` with high probability.
pub fn er_subset_size(n: usize, p: f64) -> Result<usize> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::input(format!("p must lie strictly between 0 and 1, got {p}")));
    }
    if n < 2 {
        return Err(Error::input("n must be at least 2"));
    }
    let x = -3.0 * (n as f64).ln() / (p * p + (1.0 - p) * (1.0 - p)).ln();
    // absorb rounding noise when x is an integer, e.g. n = 2^7, p = 1/2
    Ok((x - 1e-9).ceil() as usize)
}

fn check_sbm(sizes: &[usize], p: &[Vec<f64>]) -> Result<()> {
    let c = sizes.len();
    if c == 0 {
        return Err(Error::input("need at least one community"));
    }
    if p.len() != c || p.iter().any(|row| row.len() != c) {
        return Err(Error::input(format!("probability matrix must be {c}x{c}")));
    }
    for i in 0..c {
        for j in 0..c {
            if !(0.0..=1.0).contains(&p[i][j]) {
                return Err(Error::input(format!("P[{i}][{j}] = {} is not a probability", p[i][j])));
            }
            if p[i][j] != p[j][i] {
                return Err(Error::input(format!("P is not symmetric at ({i},{j})")));
            }
        }
    }
    Ok(())
}

/// First-moment bound on the probability that `k[l]` random vertices from
/// each community `l` fail to resolve an SBM graph:
///
/// `sum_{i<=j} |V_i||V_j| prod_l (P_il P_jl + (1-P_il)(1-P_jl))^k_l`.
pub fn sbm_failure_bound(sizes: &[usize], p: &[Vec<f64>], k: &[usize]) -> Result<f64> {
    check_sbm(sizes, p)?;
    if k.len() != sizes.len() {
        return Err(Error::input(format!("expected {} per-community counts, got {}", sizes.len(), k.len())));
    }
    if let Some(l) = (0..k.len()).find(|&l| k[l] > sizes[l]) {
        return Err(Error::input(format!("k[{l}] = {} exceeds community size {}", k[l], sizes[l])));
    }
    Ok(bound_unchecked(sizes, p, k))
}

fn bound_unchecked(sizes: &[usize], p: &[Vec<f64>], k: &[usize]) -> f64 {
    let c = sizes.len();
    let mut total = 0.0;
    for i in 0..c {
        for j in i..c {
            let prod: f64 = (0..c)
                .map(|l| (p[i][l] * p[j][l] + (1.0 - p[i][l]) * (1.0 - p[j][l])).powi(k[l] as i32))
                .product();
            total += (sizes[i] * sizes[j]) as f64 * prod;
        }
    }
    total
}

#[derive(Debug, Clone, PartialEq)]
pub struct SbmAllocation {
    pub k: Vec<usize>,
    pub bound: f64,
}

impl SbmAllocation {
    pub fn total(&self) -> usize {
        self.k.iter().sum()
    }
}

/// Greedy allocation: starting from nothing, add one vertex to whichever
/// community lowers the bound most (lowest index on ties) until the bound is
/// at most `threshold`.
pub fn sbm_allocate(sizes: &[usize], p: &[Vec<f64>], threshold: f64) -> Result<SbmAllocation> {
    check_sbm(sizes, p)?;
    if !(threshold > 0.0) {
        return Err(Error::input("threshold must be positive"));
    }
    let mut k = vec![0usize; sizes.len()];
    let mut bound = bound_unchecked(sizes, p, &k);
    while bound > threshold {
        let mut best: Option<(usize, f64)> = None;
        for l in 0..k.len() {
            if k[l] == sizes[l] {
                continue;
            }
            k[l] += 1;
            let b = bound_unchecked(sizes, p, &k);
            k[l] -= 1;
            if best.map_or(true, |(_, bb)| b < bb) {
                best = Some((l, b));
            }
        }
        match best {
            Some((l, b)) => {
                k[l] += 1;
                bound = b;
            }
            None => return Err(Error::ThresholdUnreachable { threshold, floor: bound }),
        }
    }
    Ok(SbmAllocation { k, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::resolving::{is_resolving, GeneralTable};

    fn d(spec: FamilySpec) -> DistanceMatrix {
        generate(&spec).unwrap().all_pairs_distances()
    }

    #[test]
    fn ich_examples() {
        assert_eq!(ich(&d(FamilySpec::Complete(4))).unwrap().beta, 3);
        let p8 = ich(&d(FamilySpec::Path(8))).unwrap();
        assert_eq!(p8.witness.members(), &[0]);
        let pet = d(FamilySpec::Petersen2(5));
        let r = ich(&pet).unwrap();
        assert!(r.beta >= 3);
        assert!(is_resolving(&pet, &r.witness).unwrap().is_resolved());
    }

    #[test]
    fn ich_reports_duplicate_rows() {
        let t = GeneralTable::new(&[vec![1, 2], vec![3, 4], vec![1, 2]]).unwrap();
        assert_eq!(ich_table(&t), Err(Error::Unresolvable(0, 2)));
    }

    #[test]
    fn entropy_state() {
        let p4 = d(FamilySpec::Path(4));
        let s = EntropyState::of(&p4, &[1]).unwrap();
        assert_eq!(s.class_count, 3);
        assert_eq!(s.classes, vec![vec![0, 2], vec![1], vec![3]]);
        let full = EntropyState::of(&p4, &[0]).unwrap();
        assert!((full.entropy - 4f64.ln()).abs() < 1e-12);
        assert_eq!(EntropyState::of(&p4, &[]).unwrap().entropy, 0.0);
    }

    #[test]
    fn er_sizes() {
        assert_eq!(er_subset_size(128, 0.5).unwrap(), 21);
        assert_eq!(er_subset_size(100, 0.5).unwrap(), 20);
        assert!(er_subset_size(100, 0.3).unwrap() > 20);
        assert!(er_subset_size(100, 0.0).is_err());
        assert!(er_subset_size(100, 1.0).is_err());
    }

    #[test]
    fn sbm_bounds() {
        let one = sbm_failure_bound(&[20], &[vec![0.3]], &[4]).unwrap();
        let q: f64 = 0.3 * 0.3 + 0.7 * 0.7;
        assert!((one - 400.0 * q.powi(4)).abs() < 1e-9);
        let half = vec![vec![0.5, 0.5], vec![0.5, 0.5]];
        let two = sbm_failure_bound(&[10, 10], &half, &[5, 5]).unwrap();
        assert!((two - 300.0 * 0.5f64.powi(10)).abs() < 1e-12);
        assert!(sbm_failure_bound(&[10, 10], &half, &[11, 0]).is_err());
        assert!(sbm_failure_bound(&[10], &half, &[1]).is_err());
    }

    #[test]
    fn sbm_allocation() {
        let a = sbm_allocate(&[100], &[vec![0.5]], 0.01).unwrap();
        // 10^4 * 2^-k <= 0.01 first at k = 20
        assert_eq!(a.k, vec![20]);
        let sym = vec![vec![0.5, 0.1], vec![0.1, 0.5]];
        let b = sbm_allocate(&[50, 50], &sym, 0.01).unwrap();
        assert!(b.k[0].abs_diff(b.k[1]) <= 1);
        assert!(b.bound <= 0.01);
        let zero = sbm_allocate(&[50, 50], &sym, 1e9).unwrap();
        assert_eq!(zero.k, vec![0, 0]);
        match sbm_allocate(&[3], &[vec![0.5]], 1e-9) {
            Err(Error::ThresholdUnreachable { floor, .. }) => assert!((floor - 9.0 / 8.0).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }
}
