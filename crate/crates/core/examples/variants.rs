//! Doubly, strong and truncated resolving sets on one graph.

use metdim::exact::{brute_force_variant, verify_variant, Variant};
use metdim::families::{generate, FamilySpec};
use metdim::VertexSet;

fn main() -> metdim::Result<()> {
    let g = generate(&FamilySpec::Grid(vec![4, 4]))?;
    let d = g.all_pairs_distances();
    for v in ["resolving", "doubly", "strong", "truncated:1", "truncated:2", "truncated:3"] {
        let variant: Variant = v.parse()?;
        println!("{v:<12} {}", brute_force_variant(&g, variant)?);
    }

    let corners = VertexSet::new(vec![0, 3])?;
    for variant in [Variant::Resolving, Variant::Doubly, Variant::Truncated(1)] {
        println!("{{0,3}} {variant}: {:?}", verify_variant(&g, &d, &corners, variant)?);
    }
    Ok(())
}
