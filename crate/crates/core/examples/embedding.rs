//! Embed strings through Hamming distances to a few landmark strings chosen
//! by the greedy heuristic on the Hamming graph.

use metdim::applications::{all_sequences, embed_sequences, high_degree_labeling, sequence_of};
use metdim::approx::ich;
use metdim::families::{generate, generate_random, FamilySpec, RandomSpec};

fn main() -> metdim::Result<()> {
    let (a, k) = (4, 3);
    let h = generate(&FamilySpec::Hamming { k, a })?;
    let landmarks: Vec<String> = ich(&h.all_pairs_distances())?.witness.members().iter().map(|&v| sequence_of(v, a, k)).collect();
    let e = embed_sequences(a, k, &landmarks, &all_sequences(a, k))?;
    println!("landmarks {:?}: {} dimensions (one-hot would need {}), injective={}", landmarks, landmarks.len(), a * k, e.injective);
    println!("'{}' -> {:?}", e.sequences[27], e.vectors[27]);

    let g = generate_random(&RandomSpec::erdos_renyi(128, 0.5, 1))?;
    let l = high_degree_labeling(&g);
    println!("G(128, 1/2) degree labelling: unique labels={} distinct degrees={}", l.labels_unique, l.degrees_distinct);
    Ok(())
}
