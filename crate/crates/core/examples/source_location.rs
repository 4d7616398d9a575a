//! Place observers on a doubly resolving set, simulate a spread with an
//! unknown start time, and recover the source.

use metdim::applications::{locate_source, spread_simulate};
use metdim::exact::brute_force_doubly;
use metdim::families::{generate, FamilySpec};

fn main() -> metdim::Result<()> {
    let g = generate(&FamilySpec::Grid(vec![5, 4]))?;
    let observers = brute_force_doubly(&g.all_pairs_distances())?.witness;
    println!("observers: {observers}");

    let seen = spread_simulate(&g, 13, -3, &observers)?;
    for o in &seen {
        println!("  vertex {} saw it at t={}", o.observer, o.arrival_time);
    }
    println!("source = {}", locate_source(&g, &observers, &seen)?);
    Ok(())
}
