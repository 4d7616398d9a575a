//! 3-SAT to metric dimension: build the gadget graph and move between
//! satisfying assignments and resolving sets.

use metdim::exact::brute_force_beta;
use metdim::reductions::{assignment_to_resolving_set, resolving_set_to_assignment, sat_to_graph, SatFormula};

fn main() -> metdim::Result<()> {
    let f = SatFormula::from_dimacs("p cnf 4 2\n1 -2 3 0\n2 3 -4 0\n")?;
    let rg = sat_to_graph(&f);
    println!("{} vertices, {} edges", rg.graph.n(), rg.graph.m());

    let (set, ok) = assignment_to_resolving_set(&rg, &[true, true, false, false])?;
    let names: Vec<String> = set.members().iter().map(|&v| rg.role(v).to_string()).collect();
    println!("x = TTFF -> {} resolving={ok}", names.join(" "));
    println!("decoded back: {:?}", resolving_set_to_assignment(&rg, &set)?);

    let b = brute_force_beta(&rg.graph.all_pairs_distances());
    println!("beta = {} = vars + clauses", b.beta);
    Ok(())
}
