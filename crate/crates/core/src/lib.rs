//! Metric dimension of graphs.
//!
//! A resolving set `R` of a graph is a set of landmark vertices such that
//! every vertex is identified by its vector of distances to `R`; the metric
//! dimension `β(G)` is the smallest size of one. This crate provides
//!
//! * [`graph`]: simple graphs, BFS distances, truncation, twin classes;
//! * [`families`]: named families (grids, fans, wheels, Hamming graphs,
//!   hexagon and honeycomb networks, ...) and seeded random models;
//! * [`resolving`]: resolving, doubly, strong, truncated and
//!   multilateration checks;
//! * [`exact`]: brute force, closed forms, the tree formula and lower bounds;
//! * [`approx`]: the entropy-greedy heuristic and random-model bounds;
//! * [`reductions`]: the 3-SAT gadget construction;
//! * [`applications`]: source localisation, canonical labelling,
//!   sequence embedding;
//! * [`experiment`]: seeded, reproducible experiment runs.
//!
//! ```
//! use metdim::{exact, families::{generate, FamilySpec}};
//!
//! let fan = generate(&FamilySpec::Fan(12)).unwrap();
//! let result = exact::brute_force_beta(&fan.all_pairs_distances());
//! assert_eq!(result.beta, 5);
//! ```

pub mod applications;
pub mod approx;
pub mod error;
pub mod exact;
pub mod experiment;
pub mod families;
pub mod graph;
pub mod io;
mod partition;
pub mod reductions;
pub mod resolving;
pub mod rng;

pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph, Vertex, VertexSet, INF};
pub use resolving::{GeneralTable, Table, Verdict};
