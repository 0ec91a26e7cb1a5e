use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {edge} references vertex {vertex} outside the graph")]
    VertexOutOfRange { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} is a loop")]
    SelfLoop { edge: EdgeId },
    #[error("duplicate edge between {u} and {v}")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("edge {edge} is not an edge of the graph")]
    UnknownEdge { edge: EdgeId },
    #[error("vertex {vertex} is covered twice")]
    NotAMatching { vertex: VertexId },
}

/// Failure to read the plain-text graph format.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(String),
}

/// The first fullerene invariant a candidate graph violates.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Diagnostic {
    #[error("malformed rotation: vertex {vertex} lists {len} edges, expected 3")]
    MalformedRotation { vertex: VertexId, len: usize },
    #[error("rotation of vertex {vertex} lists edge {edge}, which is not incident to it")]
    RotationMismatch { vertex: VertexId, edge: EdgeId },
    #[error("edge {edge} is a loop")]
    SelfLoop { edge: EdgeId },
    #[error("duplicate edge between {u} and {v}")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("face of size {size} found; only pentagons and hexagons are allowed")]
    FaceSize { size: usize },
    #[error("{pentagons} pentagonal faces, expected 12")]
    PentagonCount { pentagons: usize },
    #[error("Euler check failed: V - E + F = {value}")]
    Euler { value: i64 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ForcingError {
    #[error("anti-forcing number exceeds budget: af > {budget}")]
    AntiForcingBudget { budget: usize },
    #[error("forcing number exceeds budget: f > {budget}")]
    ForcingBudget { budget: usize },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge set is not an anti-forcing set")]
    NotAntiForcing,
    #[error("expected an edge set of size {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("residual graph with {residual_vertices} vertices is neither empty nor two pentagons joined by an edge")]
    ResidualShape { residual_vertices: usize },
    #[error("residual is two pentagons but {boundary} boundary edges were found, expected 8")]
    BoundarySize { boundary: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PatchError {
    #[error("distance-array entry {0} outside 1..=6")]
    EntryOutOfRange(u8),
    #[error("malformed distance-array literal {0:?}")]
    BadLiteral(String),
    #[error("malformed operation tag {0:?}")]
    BadTag(String),
    #[error("operation {tag} is not applicable to {array}")]
    Inapplicable { tag: String, array: String },
    #[error("no seed graph with index {0}")]
    UnknownSeed(usize),
    #[error("walk stalls at step {step} ({tag}): {reason}")]
    WalkStalled { step: usize, tag: String, reason: String },
    #[error("walk ends at {0} instead of []")]
    WalkUnfinished(String),
    #[error("geometric step disagrees with the array operation: expected {expected}, boundary reads {found}")]
    BoundaryMismatch { expected: String, found: String },
    #[error("patch face violation: {0}")]
    FaceViolation(String),
    #[error("gadget attachment has {0} admissible alignments, expected exactly one")]
    GadgetAlignment(usize),
    #[error("marked edges e1..e4 collapsed into {0} distinct edges")]
    MarkedEdgesCollapsed(usize),
    #[error("synthesized graph is not a fullerene: {0}")]
    NotFullerene(Diagnostic),
    #[error("synthesized graph minus the marked edges has no unique perfect matching")]
    NotAntiForcing,
    #[error("{n} is not a valid order: need even n >= 20 with n not in {{22, 26}}")]
    InvalidOrder { n: usize },
    #[error("no path from {from} to [] in the digraph")]
    NoPath { from: String },
}
