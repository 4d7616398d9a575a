//! Edge lists, distance matrices, and multilateration over a distance table
//! that did not come from a graph.

use metdim::exact::brute_force_table;
use metdim::families::{generate, FamilySpec};
use metdim::io::{parse_distance_csv, parse_edge_list, write_distance_csv, write_edge_list};

fn main() -> metdim::Result<()> {
    let g = generate(&FamilySpec::Cycle(5))?;
    let text = write_edge_list(&g);
    print!("{text}");
    assert_eq!(parse_edge_list(&text)?, g);

    let csv = write_distance_csv(&g.all_pairs_distances());
    print!("{csv}");

    // points on a line, distances as a table
    let d = parse_distance_csv("0,1,3,4\n1,0,2,3\n3,2,0,1\n4,3,1,0\n")?;
    println!("line points: {}", brute_force_table(&d)?);
    Ok(())
}
