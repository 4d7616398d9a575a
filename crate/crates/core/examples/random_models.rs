//! Random-graph bounds: subset size for G(n, p), the SBM failure bound and
//! its greedy allocation, and the seeded experiment runner.

use metdim::approx::{er_subset_size, sbm_allocate, sbm_failure_bound};
use metdim::experiment::{parse_params, run_experiment};

fn main() -> metdim::Result<()> {
    for n in [128, 1024, 1 << 16] {
        println!("G({n}, 1/2): random subsets of size {} resolve whp", er_subset_size(n, 0.5)?);
    }

    let sizes = [50, 30];
    let p = vec![vec![0.5, 0.1], vec![0.1, 0.4]];
    println!("bound with k=(10,10): {:.4}", sbm_failure_bound(&sizes, &p, &[10, 10])?);
    let a = sbm_allocate(&sizes, &p, 0.01)?;
    println!("allocation for 0.01: k={:?} total={} bound={:.5}", a.k, a.total(), a.bound);

    let report = run_experiment("random-trees", &parse_params("n=500,samples=50")?, 7)?;
    let agg = report.aggregate("beta_over_n").expect("reported");
    println!("random trees n=500: mean beta/n = {:.4} (sd {:.4})", agg.mean, agg.variance.sqrt());
    Ok(())
}
