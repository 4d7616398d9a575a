//! Seeded experiments with reproducible per-sample rows.
//!
//! Sample `i` of a run with master seed `s` uses the seed
//! [`rng::split`]`(s, i)`, so rows do not depend on thread count or
//! scheduling. Parameters are `key=value` pairs; list values are separated by
//! `/`.
//!
//! | name | parameters (defaults) | columns |
//! |---|---|---|
//! | `random-trees` | `n=2000, samples=200` | `sample seed beta beta_over_n` |
//! | `er-bound` | `n=128, p=0.5, trials=100` | `trial seed edges size resolved` |
//! | `er-zigzag` | `n=200, steps=10, samples=3` | `x p sample seed beta_hat log_n_beta_hat` |
//! | `sbm-alloc` | `sizes=50/50, p=0.5/0.1/0.1/0.5, thresholds=1/0.1/0.01/0.001` | `threshold k total bound` |
//!
//! `er-bound` draws its subset from a generator seeded with
//! `split(sample_seed, 0)`; `er-zigzag` uses `p = n^(x-1)` for
//! `x = 1/steps, .., (steps-1)/steps` and samples `x_index * samples + j`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::approx::{er_subset_size, ich, sbm_allocate};
use crate::error::{Error, Result};
use crate::exact::tree_beta;
use crate::families::{generate_random, RandomSpec};
use crate::resolving::is_resolving;
use crate::rng::{split, SplitMix64};
use crate::VertexSet;

/// Mean, sample variance (`n - 1` denominator), minimum and maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct Aggregate {
    pub name: String,
    pub mean: f64,
    pub variance: f64,
    pub min: f64,
    pub max: f64,
}

impl Aggregate {
    pub fn of(name: &str, xs: &[f64]) -> Aggregate {
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let variance = if xs.len() > 1 { xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0) } else { 0.0 };
        Aggregate {
            name: name.to_string(),
            mean,
            variance,
            min: xs.iter().copied().fold(f64::INFINITY, f64::min),
            max: xs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub name: String,
    /// Every parameter in effect, defaults included.
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub aggregates: Vec<Aggregate>,
    /// Named scalars derived from the rows.
    pub derived: Vec<(String, f64)>,
    pub wall_clock: Duration,
}

impl ExperimentReport {
    pub fn aggregate(&self, name: &str) -> Option<&Aggregate> {
        self.aggregates.iter().find(|a| a.name == name)
    }

    pub fn derived(&self, name: &str) -> Option<f64> {
        self.derived.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    /// Column header and rows as TSV, followed by `#`-prefixed summary lines.
    /// Wall-clock time is left out so that reruns compare equal.
    pub fn to_tsv(&self) -> String {
        let mut s = self.columns.join("\t");
        s.push('\n');
        for row in &self.rows {
            s += &row.join("\t");
            s.push('\n');
        }
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(s, "# experiment {} seed={} {}", self.name, self.seed, params.join(","));
        for a in &self.aggregates {
            let _ = writeln!(s, "# {}: mean={} variance={} min={} max={}", a.name, a.mean, a.variance, a.min, a.max);
        }
        for (k, v) in &self.derived {
            let _ = writeln!(s, "# {k}={v}");
        }
        s
    }
}

/// Parse `key=value,key=value`.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, String>> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.split_once('=')
                .map(|(k, v)| (k.trim().to_string(), v.trim().to_string()))
                .ok_or_else(|| Error::parse(format!("parameter '{p}' is not key=value")))
        })
        .collect()
}

struct Params {
    given: BTreeMap<String, String>,
    used: BTreeMap<String, String>,
}

impl Params {
    fn get<T: std::str::FromStr>(&mut self, key: &str, default: &str) -> Result<T> {
        let raw = self.given.remove(key).unwrap_or_else(|| default.to_string());
        let v = raw.parse().map_err(|_| Error::parse(format!("parameter {key}: cannot parse '{raw}'")))?;
        self.used.insert(key.to_string(), raw);
        Ok(v)
    }

    fn list<T: std::str::FromStr>(&mut self, key: &str, default: &str) -> Result<Vec<T>> {
        let raw = self.given.remove(key).unwrap_or_else(|| default.to_string());
        let v = raw
            .split('/')
            .map(|x| x.trim().parse().map_err(|_| Error::parse(format!("parameter {key}: cannot parse '{x}'"))))
            .collect::<Result<Vec<T>>>()?;
        self.used.insert(key.to_string(), raw);
        Ok(v)
    }

    fn finish(self) -> Result<BTreeMap<String, String>> {
        if let Some(k) = self.given.keys().next() {
            return Err(Error::input(format!("unknown parameter '{k}'")));
        }
        Ok(self.used)
    }
}

pub const EXPERIMENTS: [&str; 4] = ["random-trees", "er-bound", "er-zigzag", "sbm-alloc"];

pub fn run_experiment(name: &str, params: &BTreeMap<String, String>, seed: u64) -> Result<ExperimentReport> {
    let start = Instant::now();
    let mut p = Params { given: params.clone(), used: BTreeMap::new() };
    let (columns, rows, aggregates, derived) = match name {
        "random-trees" => random_trees(&mut p, seed)?,
        "er-bound" => er_bound(&mut p, seed)?,
        "er-zigzag" => er_zigzag(&mut p, seed)?,
        "sbm-alloc" => sbm_alloc(&mut p)?,
        other => return Err(Error::input(format!("unknown experiment '{other}' (one of {})", EXPERIMENTS.join(", ")))),
    };
    Ok(ExperimentReport {
        name: name.to_string(),
        params: p.finish()?,
        seed,
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows,
        aggregates,
        derived,
        wall_clock: start.elapsed(),
    })
}

type Outcome = (Vec<&'static str>, Vec<Vec<String>>, Vec<Aggregate>, Vec<(String, f64)>);

fn random_trees(p: &mut Params, seed: u64) -> Result<Outcome> {
    let n: usize = p.get("n", "2000")?;
    let samples: usize = p.get("samples", "200")?;
    if n < 1 || samples < 1 {
        return Err(Error::input("n and samples must be positive"));
    }
    let betas = (0..samples)
        .into_par_iter()
        .map(|i| {
            let s = split(seed, i as u64);
            let tree = generate_random(&RandomSpec::uniform_tree(n, s))?;
            Ok((s, tree_beta(&tree)?.beta))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = betas
        .iter()
        .enumerate()
        .map(|(i, &(s, b))| vec![i.to_string(), s.to_string(), b.to_string(), (b as f64 / n as f64).to_string()])
        .collect();
    let b: Vec<f64> = betas.iter().map(|&(_, b)| b as f64).collect();
    let ratio: Vec<f64> = b.iter().map(|x| x / n as f64).collect();
    let beta = Aggregate::of("beta", &b);
    let derived = vec![("variance_beta_per_n".to_string(), beta.variance / n as f64)];
    Ok((vec!["sample", "seed", "beta", "beta_over_n"], rows, vec![beta, Aggregate::of("beta_over_n", &ratio)], derived))
}

fn er_bound(p: &mut Params, seed: u64) -> Result<Outcome> {
    let n: usize = p.get("n", "128")?;
    let prob: f64 = p.get("p", "0.5")?;
    let trials: usize = p.get("trials", "100")?;
    let size = er_subset_size(n, prob)?.min(n);
    let results = (0..trials)
        .into_par_iter()
        .map(|i| {
            let s = split(seed, i as u64);
            let g = generate_random(&RandomSpec::erdos_renyi(n, prob, s))?;
            let subset = SplitMix64::new(split(s, 0)).sample_subset(n, size);
            let ok = is_resolving(&g.all_pairs_distances(), &VertexSet::new(subset)?)?.is_resolved();
            Ok((s, g.m(), ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = results
        .iter()
        .enumerate()
        .map(|(i, &(s, m, ok))| vec![i.to_string(), s.to_string(), m.to_string(), size.to_string(), u8::from(ok).to_string()])
        .collect();
    let hits: Vec<f64> = results.iter().map(|&(_, _, ok)| f64::from(u8::from(ok))).collect();
    let derived = vec![("resolving_frequency".to_string(), Aggregate::of("resolved", &hits).mean)];
    Ok((vec!["trial", "seed", "edges", "size", "resolved"], rows, vec![Aggregate::of("resolved", &hits)], derived))
}

fn er_zigzag(p: &mut Params, seed: u64) -> Result<Outcome> {
    let n: usize = p.get("n", "200")?;
    let steps: usize = p.get("steps", "10")?;
    let samples: usize = p.get("samples", "3")?;
    if n < 2 || steps < 2 || samples < 1 {
        return Err(Error::input("need n >= 2, steps >= 2, samples >= 1"));
    }
    let jobs: Vec<(usize, usize)> = (1..steps).flat_map(|xi| (0..samples).map(move |j| (xi, j))).collect();
    let results = jobs
        .par_iter()
        .map(|&(xi, j)| {
            let x = xi as f64 / steps as f64;
            let prob = (n as f64).powf(x - 1.0);
            let s = split(seed, (xi * samples + j) as u64);
            let g = generate_random(&RandomSpec::erdos_renyi(n, prob, s))?;
            let b = ich(&g.all_pairs_distances())?.beta;
            Ok((x, prob, j, s, b))
        })
        .collect::<Result<Vec<_>>>()?;
    let logn = (n as f64).ln();
    let rows = results
        .iter()
        .map(|&(x, prob, j, s, b)| {
            vec![x.to_string(), prob.to_string(), j.to_string(), s.to_string(), b.to_string(), ((b as f64).ln() / logn).to_string()]
        })
        .collect();
    let logs: Vec<f64> = results.iter().map(|r| (r.4 as f64).ln() / logn).collect();
    Ok((vec!["x", "p", "sample", "seed", "beta_hat", "log_n_beta_hat"], rows, vec![Aggregate::of("log_n_beta_hat", &logs)], Vec::new()))
}

fn sbm_alloc(p: &mut Params) -> Result<Outcome> {
    let sizes: Vec<usize> = p.list("sizes", "50/50")?;
    let flat: Vec<f64> = p.list("p", "0.5/0.1/0.1/0.5")?;
    let thresholds: Vec<f64> = p.list("thresholds", "1/0.1/0.01/0.001")?;
    let c = sizes.len();
    if flat.len() != c * c {
        return Err(Error::input(format!("p needs {} entries for {c} communities", c * c)));
    }
    let matrix: Vec<Vec<f64>> = flat.chunks(c).map(<[f64]>::to_vec).collect();
    let mut rows = Vec::new();
    let mut totals = Vec::new();
    for &t in &thresholds {
        let a = sbm_allocate(&sizes, &matrix, t)?;
        let k: Vec<String> = a.k.iter().map(|x| x.to_string()).collect();
        totals.push(a.total() as f64);
        rows.push(vec![t.to_string(), k.join("/"), a.total().to_string(), a.bound.to_string()]);
    }
    Ok((vec!["threshold", "k", "total", "bound"], rows, vec![Aggregate::of("total", &totals)], Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &str) -> BTreeMap<String, String> {
        parse_params(s).unwrap()
    }

    #[test]
    fn reruns_are_identical() {
        let a = run_experiment("random-trees", &params("n=50,samples=20"), 3).unwrap();
        let b = run_experiment("random-trees", &params("n=50,samples=20"), 3).unwrap();
        assert_eq!(a.to_tsv(), b.to_tsv());
        assert_eq!(a.rows.len(), 20);
        let c = run_experiment("random-trees", &params("n=50,samples=20"), 4).unwrap();
        assert_ne!(a.rows, c.rows);
    }

    #[test]
    fn small_runs_of_each() {
        let r = run_experiment("er-bound", &params("n=40,trials=5"), 1).unwrap();
        assert_eq!(r.columns[4], "resolved");
        assert!(r.derived("resolving_frequency").is_some());
        let z = run_experiment("er-zigzag", &params("n=30,steps=3,samples=2"), 1).unwrap();
        assert_eq!(z.rows.len(), 4);
        let s = run_experiment("sbm-alloc", &params(""), 0).unwrap();
        assert_eq!(s.rows.len(), 4);
        assert_eq!(s.params["sizes"], "50/50");
    }

    #[test]
    fn bad_requests() {
        assert!(run_experiment("nope", &params(""), 0).is_err());
        assert!(run_experiment("er-bound", &params("trails=5"), 0).is_err());
        assert!(parse_params("n").is_err());
    }

    #[test]
    fn aggregates() {
        let a = Aggregate::of("x", &[1.0, 2.0, 3.0]);
        assert_eq!((a.mean, a.variance, a.min, a.max), (2.0, 1.0, 1.0, 3.0));
    }
}
