//! Embedded graphs used throughout the crate and its tests.
//!
//! `f20`, `f24` and `f26` are the unique fullerenes on 20, 24 and 26 vertices,
//! frozen as rotation-system text (see `fixtures/*.graph`).

use crate::graph::{EdgeSet, Graph};
use crate::plane::{FullereneGraph, PlaneGraph};

pub const F20_TEXT: &str = include_str!("../fixtures/f20.graph");
pub const F24_TEXT: &str = include_str!("../fixtures/f24.graph");
pub const F26_TEXT: &str = include_str!("../fixtures/f26.graph");

fn load(text: &str) -> FullereneGraph {
    let plane = PlaneGraph::parse(text).expect("embedded fixture parses");
    FullereneGraph::new(plane).expect("embedded fixture is a fullerene")
}

/// The dodecahedron.
pub fn f20() -> FullereneGraph {
    load(F20_TEXT)
}

pub fn f24() -> FullereneGraph {
    load(F24_TEXT)
}

pub fn f26() -> FullereneGraph {
    load(F26_TEXT)
}

/// Anti-forcing set of size 4 on [`f20`]; deleting it leaves a graph that
/// pendant stripping consumes completely.
pub fn f20_marked() -> EdgeSet {
    EdgeSet::new(F20_MARKED)
}

/// Anti-forcing set of size 4 on [`f24`] whose pendant stripping stops at two
/// pentagons joined by an edge.
pub fn f24_marked() -> EdgeSet {
    EdgeSet::new(F24_MARKED)
}

/// Anti-forcing set of size 5 on [`f26`].
pub fn f26_marked() -> EdgeSet {
    EdgeSet::new(F26_MARKED)
}

const F20_MARKED: [usize; 4] = [0, 1, 3, 17];
const F24_MARKED: [usize; 4] = [0, 1, 3, 17];
const F26_MARKED: [usize; 5] = [0, 1, 3, 5, 18];

/// Looks a fixture up by name: `f20`, `f24` or `f26`.
pub fn by_name(name: &str) -> Option<FullereneGraph> {
    match name {
        "f20" => Some(f20()),
        "f24" => Some(f24()),
        "f26" => Some(f26()),
        _ => None,
    }
}

/// Two pentagons `0..5` and `5..10` joined by the edge `{0, 5}` (edge id 10).
pub fn two_pentagons() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 1) % 5)));
    edges.push((0, 5));
    Graph::from_edges(10, &edges).expect("gadget is simple")
}

/// The 3-cube with a planar rotation system.
pub fn cube() -> PlaneGraph {
    PlaneGraph::new(
        vec![
            vec![2, 0, 1],
            vec![3, 0, 4],
            vec![6, 1, 5],
            vec![5, 3, 7],
            vec![2, 9, 8],
            vec![4, 8, 10],
            vec![9, 6, 11],
            vec![10, 11, 7],
        ],
        vec![
            [0, 1],
            [0, 2],
            [0, 4],
            [1, 3],
            [1, 5],
            [2, 3],
            [2, 6],
            [3, 7],
            [4, 5],
            [4, 6],
            [5, 7],
            [6, 7],
        ],
    )
    .expect("cube literal")
}

/// K4 drawn as a triangle with a centre vertex.
pub fn k4() -> PlaneGraph {
    PlaneGraph::new(
        vec![vec![0, 2, 1], vec![0, 3, 4], vec![3, 1, 5], vec![5, 2, 4]],
        vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]],
    )
    .expect("k4 literal")
}

/// Cycle on `n` vertices, edge `i` joining `i` and `i + 1 mod n`.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle is simple")
}

/// Path on `n` vertices, edge `i` joining `i` and `i + 1`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("path is simple")
}
