//! Closed-form metric dimension for named families, each witness checked
//! against the graph before it is returned.

use metdim::exact::{closed_form_beta, fan_beta_formula, fan_resolving_set, family_beta, rook_beta_formula};
use metdim::families::FamilySpec;

fn main() -> metdim::Result<()> {
    for text in ["fan:12", "wheel:20", "grid:5x4x3", "hamming:k=2,a=5", "hexagon:4", "honeycomb:3", "prism:8", "complete_bipartite:3x5"] {
        let spec: FamilySpec = text.parse()?;
        println!("{text:<24} {}", closed_form_beta(&spec)?);
    }

    println!("fan formula n=7..16: {:?}", (7..=16).map(fan_beta_formula).collect::<Vec<_>>());
    println!("fan set for n=23: {}", fan_resolving_set(23)?);
    println!("rook graphs a=2..8: {:?}", (2..=8).map(rook_beta_formula).collect::<Vec<_>>());

    // no closed form here: family_beta falls back to brute force
    let q4 = FamilySpec::Hypercube(4);
    assert!(closed_form_beta(&q4).is_err());
    let r = family_beta(&q4)?;
    println!("hypercube:4 {} via {}", r, r.method);
    Ok(())
}
