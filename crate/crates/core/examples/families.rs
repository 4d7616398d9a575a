//! Build the named families and a few random graphs, print their sizes.

use metdim::families::{generate, generate_random, FamilySpec, GraphSpec, RandomSpec};

fn main() -> metdim::Result<()> {
    for text in ["path:6", "grid:4x3x2", "fan:9", "wheel:9", "hamming:k=2,a=4", "hexagon:3", "honeycomb:2", "prism:7", "petersen2:5"] {
        let spec: FamilySpec = text.parse()?;
        let g = generate(&spec)?;
        println!("{text:<18} n={:<3} m={:<3} diam={}", g.n(), g.m(), g.diameter());
    }

    let er = generate_random(&RandomSpec::erdos_renyi(50, 0.1, 7))?;
    println!("er(50, 0.1)        m={} connected={}", er.m(), er.is_connected());

    // strings work for random models too, but the seed is mandatory
    let sbm: GraphSpec = "sbm:sizes=20/20,p=0.6/0.05/0.05/0.6,seed=3".parse()?;
    let g = sbm.build()?;
    println!("sbm 20/20          m={}", g.m());

    let tree = generate_random(&RandomSpec::uniform_tree(12, 1))?;
    println!("tree prufer        {:?}", metdim::families::prufer_encode(&tree)?);
    Ok(())
}
