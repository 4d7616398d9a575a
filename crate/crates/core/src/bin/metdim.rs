//! Command-line front end. Exit status: 0 success, 1 negative result (not
//! resolving, no consistent source, threshold unreachable), 2 usage or input
//! error. Results go to stdout, timings and diagnostics to stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use metdim::applications::{canonical_form, embed_sequences, locate_source, SpreadObservation};
use metdim::approx::{ich, sbm_allocate, sbm_failure_bound};
use metdim::exact::{self, Variant};
use metdim::experiment::{parse_params, run_experiment};
use metdim::families::GraphSpec;
use metdim::reductions::{assignment_to_resolving_set, sat_to_graph, SatFormula};
use metdim::{io, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "metdim", version, about = "Metric dimension toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveMethod {
    Brute,
    Family,
    Tree,
    Ich,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family or random graph as an edge list.
    Generate {
        /// e.g. fan:12, grid:4x3, hamming:k=2,a=4, er:n=50,p=0.3,seed=7
        #[arg(long)]
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a (minimum or heuristic) resolving set.
    Solve {
        /// Edge-list file, or a graph spec string.
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum, default_value = "brute")]
        method: SolveMethod,
        /// resolving | doubly | strong | truncated:k
        #[arg(long, default_value = "resolving")]
        variant: String,
    },
    /// Check a vertex set against a resolvability variant.
    Verify {
        #[arg(long)]
        graph: String,
        /// Comma-separated vertices, e.g. 0,3,7
        #[arg(long)]
        set: String,
        #[arg(long, default_value = "resolving")]
        variant: String,
    },
    /// Build the reduction graph of a 3-CNF formula.
    ReduceSat {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        labels: Option<PathBuf>,
        /// Signed DIMACS literals of a full assignment, e.g. 1,2,-3,-4;
        /// prints the derived resolving set.
        #[arg(long, allow_hyphen_values = true)]
        assignment: Option<String>,
    },
    /// Find the source of a unit-speed spread from arrival times.
    Locate {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        observers: String,
        /// Arrival times, one per observer, same order.
        #[arg(long, allow_hyphen_values = true)]
        times: String,
    },
    /// Print the canonical adjacency matrix and labelling.
    Canon {
        #[arg(long)]
        graph: String,
    },
    /// Embed sequences by Hamming distances to landmarks, as CSV.
    Embed {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        landmarks: PathBuf,
        #[arg(long)]
        sequences: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// SBM failure bound for given counts, or a greedy allocation.
    SbmBound {
        #[arg(long)]
        sizes: String,
        /// Row-major probability matrix.
        #[arg(long)]
        p: String,
        #[arg(long)]
        threshold: Option<f64>,
        /// Per-community counts; evaluates the bound instead of allocating.
        #[arg(long)]
        k: Option<String>,
    },
    /// Run a seeded experiment and print TSV.
    Experiment {
        /// random-trees | er-bound | er-zigzag | sbm-alloc
        #[arg(long)]
        name: String,
        /// key=value pairs, e.g. n=2000,samples=200
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        seed: u64,
    },
}

/// Failure kinds mapped to exit codes.
enum Fail {
    Negative(String),
    Input(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        match e {
            Error::InconsistentObservations | Error::AmbiguousSource(..) | Error::ThresholdUnreachable { .. } => {
                Fail::Negative(e.to_string())
            }
            _ => Fail::Input(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fail> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// A file path when one exists, otherwise a graph spec.
fn load_graph(arg: &str) -> Result<(Graph, Option<GraphSpec>), Fail> {
    let path = Path::new(arg);
    if path.is_file() {
        return Ok((io::parse_edge_list(&read(path)?)?, None));
    }
    let spec: GraphSpec = arg
        .parse()
        .map_err(|e: Error| Fail::Input(format!("'{arg}' is neither a readable file nor a graph spec ({e})")))?;
    Ok((spec.build()?, Some(spec)))
}

fn list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, Fail> {
    text.split(',')
        .map(|x| x.trim().parse().map_err(|_| Fail::Input(format!("bad {what} '{x}'"))))
        .collect()
}

fn run(cli: Cli) -> Result<(), Fail> {
    match cli.command {
        Command::Generate { spec, out } => {
            let spec: GraphSpec = spec.parse()?;
            emit(out.as_deref(), &io::write_edge_list(&spec.build()?))
        }
        Command::Solve { graph, method, variant } => {
            let (g, spec) = load_graph(&graph)?;
            let variant: Variant = variant.parse()?;
            let start = Instant::now();
            let result = match (method, variant) {
                (SolveMethod::Brute, v) => exact::brute_force_variant(&g, v)?,
                (SolveMethod::Family, Variant::Resolving) => match spec {
                    Some(GraphSpec::Family(f)) => exact::family_beta(&f)?,
                    _ => return Err(Fail::Input("--method family needs a family spec as --graph".into())),
                },
                (SolveMethod::Tree, Variant::Resolving) => exact::tree_beta(&g)?,
                (SolveMethod::Ich, Variant::Resolving) => ich(&g.all_pairs_distances())?,
                (SolveMethod::Ich, Variant::Truncated(k)) => ich(&g.all_pairs_distances().truncate(k)?)?,
                _ => return Err(Fail::Input(format!("variant {variant} is only supported by --method brute"))),
            };
            println!("{result}");
            eprintln!("method={} variant={variant} time_ms={:.3}", result.method, start.elapsed().as_secs_f64() * 1e3);
            Ok(())
        }
        Command::Verify { graph, set, variant } => {
            let (g, _) = load_graph(&graph)?;
            let set = VertexSet::parse(&set)?;
            let variant: Variant = variant.parse()?;
            let verdict = exact::verify_variant(&g, &g.all_pairs_distances(), &set, variant)?;
            match verdict.witness() {
                None => {
                    println!("{variant}: yes");
                    Ok(())
                }
                Some((u, v)) => {
                    println!("{variant}: no, unresolved pair {u} {v}");
                    Err(Fail::Negative(String::new()))
                }
            }
        }
        Command::ReduceSat { cnf, out, labels, assignment } => {
            let formula = SatFormula::from_dimacs(&read(&cnf)?)?;
            let rg = sat_to_graph(&formula);
            emit(out.as_deref(), &io::write_edge_list(&rg.graph))?;
            if let Some(path) = labels {
                emit(Some(&path), &io::write_labels(&rg.labels()))?;
            }
            eprintln!("vars={} clauses={} vertices={}", formula.num_vars(), formula.clauses().len(), rg.graph.n());
            if let Some(a) = assignment {
                let lits: Vec<i64> = list(&a, "literal")?;
                let mut values = vec![None; formula.num_vars()];
                for x in lits {
                    let i = x.unsigned_abs() as usize;
                    if x == 0 || i > values.len() {
                        return Err(Fail::Input(format!("literal {x} out of range")));
                    }
                    values[i - 1] = Some(x > 0);
                }
                let values: Vec<bool> = values
                    .into_iter()
                    .enumerate()
                    .map(|(i, v)| v.ok_or_else(|| Fail::Input(format!("variable {} unassigned", i + 1))))
                    .collect::<Result<_, _>>()?;
                let (set, ok) = assignment_to_resolving_set(&rg, &values)?;
                eprintln!("set={set} resolving={ok}");
                if !ok {
                    return Err(Fail::Negative(String::new()));
                }
            }
            Ok(())
        }
        Command::Locate { graph, observers, times } => {
            let (g, _) = load_graph(&graph)?;
            let observers = VertexSet::parse(&observers)?;
            let times: Vec<i64> = list(&times, "time")?;
            if times.len() != observers.len() {
                return Err(Fail::Input(format!("{} times for {} observers", times.len(), observers.len())));
            }
            let obs: Vec<SpreadObservation> = observers
                .members()
                .iter()
                .zip(&times)
                .map(|(&observer, &arrival_time)| SpreadObservation { observer, arrival_time })
                .collect();
            let source = locate_source(&g, &observers, &obs)?;
            println!("source={source}");
            Ok(())
        }
        Command::Canon { graph } => {
            let (g, _) = load_graph(&graph)?;
            let start = Instant::now();
            let form = canonical_form(&g);
            let labeling: Vec<String> = form.labeling.iter().map(|v| v.to_string()).collect();
            println!("labeling={}", labeling.join(","));
            for row in form.matrix.chunks(form.n.max(1)) {
                println!("{}", row.iter().map(|b| b.to_string()).collect::<String>());
            }
            eprintln!("time_ms={:.3}", start.elapsed().as_secs_f64() * 1e3);
            Ok(())
        }
        Command::Embed { a, k, landmarks, sequences, out } => {
            let landmarks = io::parse_sequences(&read(&landmarks)?);
            let sequences = io::parse_sequences(&read(&sequences)?);
            let e = embed_sequences(a, k, &landmarks, &sequences)?;
            let mut csv = String::from("sequence");
            for l in &e.landmarks {
                csv += &format!(",{l}");
            }
            csv.push('\n');
            for (s, v) in e.sequences.iter().zip(&e.vectors) {
                csv += s;
                for x in v {
                    csv += &format!(",{x}");
                }
                csv.push('\n');
            }
            emit(out.as_deref(), &csv)?;
            eprintln!("dimension={} injective={}", e.landmarks.len(), e.injective);
            Ok(())
        }
        Command::SbmBound { sizes, p, threshold, k } => {
            let sizes: Vec<usize> = list(&sizes, "size")?;
            let flat: Vec<f64> = list(&p, "probability")?;
            let c = sizes.len();
            if flat.len() != c * c {
                return Err(Fail::Input(format!("--p needs {} entries for {c} communities", c * c)));
            }
            let matrix: Vec<Vec<f64>> = flat.chunks(c).map(<[f64]>::to_vec).collect();
            match (k, threshold) {
                (Some(k), _) => {
                    let k: Vec<usize> = list(&k, "count")?;
                    println!("bound={}", sbm_failure_bound(&sizes, &matrix, &k)?);
                }
                (None, Some(t)) => {
                    let a = sbm_allocate(&sizes, &matrix, t)?;
                    let ks: Vec<String> = a.k.iter().map(|x| x.to_string()).collect();
                    println!("k={} total={} bound={}", ks.join(","), a.total(), a.bound);
                }
                (None, None) => return Err(Fail::Input("give --threshold or --k".into())),
            }
            Ok(())
        }
        Command::Experiment { name, params, seed } => {
            let report = run_experiment(&name, &parse_params(&params)?, seed)?;
            print!("{}", report.to_tsv());
            eprintln!("wall_clock_s={:.3}", report.wall_clock.as_secs_f64());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Negative(msg)) => {
            if !msg.is_empty() {
                eprintln!("{msg}");
            }
            ExitCode::from(1)
        }
        Err(Fail::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
