//! Linear-time tree formula, unicyclic bounds, and a large random tree.

use std::time::Instant;

use metdim::exact::{brute_force_beta, tree_beta, unicyclic_interval};
use metdim::families::{generate_random, RandomSpec};
use metdim::Graph;

fn main() -> metdim::Result<()> {
    let small = generate_random(&RandomSpec::uniform_tree(14, 5))?;
    let t = tree_beta(&small)?;
    let b = brute_force_beta(&small.all_pairs_distances());
    println!("n=14 tree: formula {t}, brute force beta={}", b.beta);

    let big = generate_random(&RandomSpec::uniform_tree(1_000_000, 9))?;
    let start = Instant::now();
    let r = tree_beta(&big)?;
    println!("n=10^6 tree: beta={} ({:.3} beta/n) in {:?}", r.beta, r.beta as f64 / 1e6, start.elapsed());

    // tree plus one edge
    let g = Graph::new(9, [(0, 2), (0, 3), (0, 6), (0, 7), (1, 5), (2, 5), (4, 5), (5, 8), (6, 8)])?;
    let iv = unicyclic_interval(&g)?;
    println!("unicyclic: beta in [{}, {}], actual {}", iv.lo, iv.hi, brute_force_beta(&g.all_pairs_distances()).beta);
    Ok(())
}
