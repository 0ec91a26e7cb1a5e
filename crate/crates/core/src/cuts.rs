//! Cyclic edge connectivity of fullerenes.
//!
//! In a plane graph every cyclic edge-cut separates two vertex-disjoint faces
//! (each side contains a cycle, and the disc it bounds away from the other side
//! is tiled by faces on that side). So the smallest cyclic cut is the smallest
//! edge cut separating the vertex sets of some pair of disjoint faces, which
//! unit-capacity max-flow finds directly.

use std::collections::VecDeque;

use crate::graph::{EdgeSet, Graph, VertexId};
use crate::plane::FullereneGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicConnectivity {
    /// No cyclic cut below 5 exists; `witness` is the cut around a pentagon.
    Five { witness: EdgeSet },
    /// A cyclic cut of size below 5; impossible for a genuine fullerene.
    Smaller { value: usize, cut: EdgeSet },
}

impl CyclicConnectivity {
    pub fn value(&self) -> usize {
        match self {
            Self::Five { .. } => 5,
            Self::Smaller { value, .. } => *value,
        }
    }
}

/// Confirms that `g` has cyclic edge connectivity 5.
pub fn cyclic_edge_connectivity(g: &FullereneGraph) -> CyclicConnectivity {
    let graph = g.graph();
    let faces = g.faces();
    let mut best: Option<(usize, EdgeSet)> = None;
    for i in 0..faces.len() {
        for j in i + 1..faces.len() {
            if faces[i].iter().any(|v| faces[j].contains(v)) {
                continue;
            }
            let bound = best.as_ref().map_or(5, |(v, _)| *v);
            let (flow, cut) = min_cut_between(graph, &faces[i], &faces[j], bound);
            if flow < bound {
                best = Some((flow, cut));
            }
        }
    }
    match best {
        Some((value, cut)) => CyclicConnectivity::Smaller { value, cut },
        None => {
            let pentagon = g.pentagons().next().expect("fullerene has pentagons");
            CyclicConnectivity::Five { witness: face_cut(graph, pentagon) }
        }
    }
}

/// Edges with exactly one end on the face.
pub fn face_cut(g: &Graph, face: &[VertexId]) -> EdgeSet {
    EdgeSet::new(
        g.edges()
            .filter(|&(_, u, v)| face.contains(&u) != face.contains(&v))
            .map(|(e, _, _)| e),
    )
}

/// Unit-capacity max-flow between two vertex sets, stopping once `limit` is
/// reached. Returns the flow value and, when below `limit`, a minimum cut.
pub fn min_cut_between(g: &Graph, sources: &[VertexId], sinks: &[VertexId], limit: usize) -> (usize, EdgeSet) {
    let n = g.vertex_bound();
    let m = g.edge_bound();
    // flow[2e] is flow from ends[0] to ends[1], flow[2e+1] the reverse
    let mut flow = vec![0i8; 2 * m];
    let mut is_source = vec![false; n];
    let mut is_sink = vec![false; n];
    sources.iter().for_each(|&v| is_source[v] = true);
    sinks.iter().for_each(|&v| is_sink[v] = true);

    let residual = |flow: &[i8], e: usize, from: VertexId| -> bool {
        let forward = g.endpoints(e)[0] == from;
        let (out, back) = if forward { (2 * e, 2 * e + 1) } else { (2 * e + 1, 2 * e) };
        // undirected unit edge: usable if not saturated in this direction
        flow[out] - flow[back] < 1
    };

    let mut value = 0;
    loop {
        if value >= limit {
            return (value, EdgeSet::empty());
        }
        let mut pred: Vec<Option<(VertexId, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            seen[s] = true;
            queue.push_back(s);
        }
        let mut reached = None;
        while let Some(v) = queue.pop_front() {
            if is_sink[v] {
                reached = Some(v);
                break;
            }
            for (w, e) in g.neighbors(v) {
                if !seen[w] && residual(&flow, e, v) {
                    seen[w] = true;
                    pred[w] = Some((v, e));
                    queue.push_back(w);
                }
            }
        }
        let Some(mut at) = reached else {
            let cut = EdgeSet::new(
                g.edges()
                    .filter(|&(_, u, v)| seen[u] != seen[v])
                    .map(|(e, _, _)| e),
            );
            return (value, cut);
        };
        while let Some((p, e)) = pred[at] {
            if is_source[at] {
                break;
            }
            let forward = g.endpoints(e)[0] == p;
            if forward {
                flow[2 * e] += 1;
            } else {
                flow[2 * e + 1] += 1;
            }
            at = p;
        }
        value += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixtures_have_cyclic_connectivity_five() {
        for f in [fixtures::f20(), fixtures::f24(), fixtures::f26()] {
            match cyclic_edge_connectivity(&f) {
                CyclicConnectivity::Five { witness } => {
                    assert_eq!(witness.len(), 5);
                    let rest = f.graph().without_edges(&witness);
                    let comps = rest.components();
                    assert_eq!(comps.len(), 2);
                    assert!(comps.iter().any(|c| c.len() == 5));
                }
                other => panic!("unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn cut_between_opposite_cube_faces_is_four() {
        let cube = fixtures::cube().to_graph().unwrap();
        let (value, cut) = min_cut_between(&cube, &[0, 1, 3, 2], &[4, 5, 7, 6], 10);
        assert_eq!(value, 4);
        assert_eq!(cut.len(), 4);
    }
}
