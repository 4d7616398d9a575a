//! Exact metric dimension by exhaustive search, with the lexicographically
//! smallest witness.

use metdim::exact::{brute_force_beta, resolving_sets_of_size};
use metdim::families::{generate, FamilySpec};

fn main() -> metdim::Result<()> {
    for k in 1..=6 {
        let d = generate(&FamilySpec::Hypercube(k))?.all_pairs_distances();
        println!("Q{k}: {}", brute_force_beta(&d));
    }

    let c6 = generate(&FamilySpec::Cycle(6))?.all_pairs_distances();
    let all = resolving_sets_of_size(&c6, 2);
    println!("C6 has {} minimum resolving sets, e.g. {:?}", all.len(), &all[..3]);
    Ok(())
}
