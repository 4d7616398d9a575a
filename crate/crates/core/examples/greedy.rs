//! Entropy-greedy heuristic on graphs too large for exhaustive search, and on
//! a plain item-by-test table.

use metdim::approx::{ich, ich_table, EntropyState};
use metdim::families::{generate, generate_random, FamilySpec, RandomSpec};
use metdim::GeneralTable;

fn main() -> metdim::Result<()> {
    for k in 7..=10 {
        let d = generate(&FamilySpec::Hypercube(k))?.all_pairs_distances();
        println!("Q{k}: greedy size {}", ich(&d)?.beta);
    }

    let g = generate_random(&RandomSpec::erdos_renyi(300, 0.05, 11))?;
    let d = g.all_pairs_distances();
    let r = ich(&d)?;
    let first = EntropyState::of(&d, &r.witness.members()[..1])?;
    println!("G(300, 0.05): {} landmarks; first one alone gives {} classes", r.beta, first.class_count);

    // any table works; only equality within a column matters
    let tests = vec![
        vec!["red", "small", "yes"],
        vec!["red", "large", "no"],
        vec!["blue", "small", "no"],
        vec!["blue", "large", "no"],
    ];
    let r = ich_table(&GeneralTable::new(&tests)?)?;
    println!("table: columns {}", r.witness);
    Ok(())
}
