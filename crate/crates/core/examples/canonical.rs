//! Canonical labelling from resolving sets, used as an isomorphism test.

use std::collections::HashSet;

use metdim::applications::{canonical_form, is_isomorphic};
use metdim::families::{generate, FamilySpec};
use metdim::Graph;

fn main() -> metdim::Result<()> {
    let p = generate(&FamilySpec::Petersen2(5))?;
    let relabeled = p.permute(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4])?;
    println!("petersen vs relabeled: {}", is_isomorphic(&p, &relabeled));
    println!("petersen vs prism:5:   {}", is_isomorphic(&p, &generate(&FamilySpec::Prism(5))?));

    // count isomorphism classes among all labelled graphs on 5 vertices
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    let mut classes = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let g = Graph::new(5, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e))?;
        classes.insert(canonical_form(&g).matrix);
    }
    println!("5-vertex graphs: {} classes", classes.len());
    Ok(())
}
