//! Orbit parameters: graphs, partial permutation pairs, enumeration and
//! invariants.

mod enumerate;
mod graph;
mod invariants;
mod matrix;
mod shape;
mod weyl;

pub use enumerate::{
    admissible_triples, count_orbits, enumerate_graphs, multinomial3, orbits_with_triple,
    stabilizer_order,
};
pub use graph::{Graph, Incidence, Side, Triple};
pub use invariants::{invariants, orbit_dimension, rank_matrix, Invariants, RankMatrix};
pub use matrix::{graph_from_matrix, matrix_from_graph, PartialPermutationPair};
pub use shape::Shape;
pub use weyl::{weyl_act, Permutation, WeylElement};
