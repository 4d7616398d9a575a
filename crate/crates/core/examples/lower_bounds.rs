//! Twin and diameter lower bounds next to the exact value, plus the
//! necessary conditions for dimension two.

use metdim::exact::{beta2_necessary_properties, brute_force_beta, diameter_lower_bound, twin_lower_bound};
use metdim::families::{generate, FamilySpec};
use metdim::VertexSet;

fn main() -> metdim::Result<()> {
    for text in ["complete:7", "complete_bipartite:3x4", "petersen2:5", "hypercube:4", "wheel:10"] {
        let g = generate(&text.parse::<FamilySpec>()?)?;
        let b = brute_force_beta(&g.all_pairs_distances()).beta;
        println!("{text:<24} twin={} diameter={} beta={b}", twin_lower_bound(&g), diameter_lower_bound(&g)?);
    }

    let grid = generate(&FamilySpec::Grid(vec![5, 5]))?;
    let report = beta2_necessary_properties(&grid, &VertexSet::new(vec![0, 4])?)?;
    println!("5x5 grid with {{0,4}}: {report:?}");
    Ok(())
}
