//! Anti-forcing and forcing numbers of fullerene graphs, perfect-matching
//! tools, and the distance-array construction of fullerenes whose
//! anti-forcing number is four.

pub mod cuts;
pub mod error;
pub mod fixtures;
pub mod forcing;
pub mod graph;
pub mod iso;
pub mod matching;
pub mod patchwork;
pub mod plane;
pub mod verify;

pub use cuts::{cyclic_edge_connectivity, CyclicConnectivity};
pub use error::{Diagnostic, ForcingError, GraphError, ParseError, PatchError};
pub use forcing::{
    anti_forcing_number, classify_antiforcing_shape, forcing_number, refute_size, residual_structure_check,
    AntiForcingCertificate, AntiForcingShape, ForcingCertificate, ResidualReport, SearchOptions,
};
pub use graph::{EdgeId, EdgeSet, Graph, Matching, VertexId};
pub use iso::plane_isomorphic;
pub use matching::{
    bridges, enumerate_perfect_matchings, has_unique_perfect_matching, kotzig_reduce, KotzigReduction,
    PerfectMatchings, ReductionVerdict,
};
pub use plane::{validate_fullerene, FullereneGraph, PlaneGraph};
pub use patchwork::{construct_af4, generate_digraph, synthesize, ArrayDigraph, DistanceArray, OpTag, SeedGraph, Walk};
