//! Distance arrays, seed graphs and the walk-driven construction of
//! fullerenes with anti-forcing number four.

pub mod array;
pub mod digraph;
pub mod seed;
pub mod synth;
pub mod walk;

pub use array::{o4_applicable, DistanceArray, OpTag};
pub use digraph::{generate_digraph, initial_array, ArrayDigraph, INITIAL_ARRAYS, WALK_LENGTH_CAP};
pub use seed::{gadget, seed, seed_catalog, Boundary, SeedGraph, Slot};
pub use synth::{
    construct_af4, f20_walk, f24_walks, f26_parity_check, grow, l14_walk, synthesize, ParityReport, Synthesis,
};
pub use walk::Walk;
