//! Isomorphism of plane graphs given as rotation systems.
//!
//! Fixing the image of one dart (and an orientation) determines a map
//! isomorphism completely, so trying every target dart in both orientations is
//! exact. For 3-connected plane graphs, which have a unique embedding up to
//! reflection, this decides ordinary graph isomorphism.

use crate::graph::{EdgeId, VertexId};
use crate::plane::PlaneGraph;

/// True when `a` and `b` are isomorphic as plane graphs, reflections allowed.
pub fn plane_isomorphic(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    find_plane_isomorphism(a, b).is_some()
}

/// A vertex bijection `a -> b` preserving rotations (or reversing all of them).
pub fn find_plane_isomorphism(a: &PlaneGraph, b: &PlaneGraph) -> Option<Vec<VertexId>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    if a.vertex_count() == 0 {
        return Some(Vec::new());
    }
    let mut deg_a: Vec<usize> = (0..a.vertex_count()).map(|v| a.rotation(v).len()).collect();
    let mut deg_b: Vec<usize> = (0..b.vertex_count()).map(|v| b.rotation(v).len()).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return None;
    }
    let start = (0..a.vertex_count()).find(|&v| !a.rotation(v).is_empty())?;
    let start_edge = a.rotation(start)[0];
    for target in 0..b.vertex_count() {
        if b.rotation(target).len() != a.rotation(start).len() {
            continue;
        }
        for &target_edge in b.rotation(target) {
            for mirror in [false, true] {
                if let Some(map) = extend(a, b, (start, start_edge), (target, target_edge), mirror) {
                    return Some(map);
                }
            }
        }
    }
    None
}

fn other(g: &PlaneGraph, e: EdgeId, v: VertexId) -> VertexId {
    let [x, y] = g.endpoints(e);
    if x == v {
        y
    } else {
        x
    }
}

fn extend(
    a: &PlaneGraph,
    b: &PlaneGraph,
    from: (VertexId, EdgeId),
    to: (VertexId, EdgeId),
    mirror: bool,
) -> Option<Vec<VertexId>> {
    let n = a.vertex_count();
    let mut vmap = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut emap = vec![usize::MAX; a.edge_count()];
    // each queued item pairs a vertex with one incident edge and its image
    let mut queue = vec![(from, to)];
    vmap[from.0] = to.0;
    used[to.0] = true;
    while let Some(((va, ea), (vb, eb))) = queue.pop() {
        let ra = a.rotation(va);
        let rb = b.rotation(vb);
        if ra.len() != rb.len() {
            return None;
        }
        let ia = ra.iter().position(|&x| x == ea)?;
        let ib = rb.iter().position(|&x| x == eb)?;
        let k = ra.len();
        for step in 0..k {
            let xa = ra[(ia + step) % k];
            let xb = if mirror { rb[(ib + k - step) % k] } else { rb[(ib + step) % k] };
            if emap[xa] != usize::MAX {
                if emap[xa] != xb {
                    return None;
                }
                continue;
            }
            emap[xa] = xb;
            let wa = other(a, xa, va);
            let wb = other(b, xb, vb);
            if vmap[wa] == usize::MAX {
                if used[wb] {
                    return None;
                }
                vmap[wa] = wb;
                used[wb] = true;
                queue.push(((wa, xa), (wb, xb)));
            } else if vmap[wa] != wb {
                return None;
            }
        }
    }
    if vmap.contains(&usize::MAX) {
        return None;
    }
    Some(vmap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let f = fixtures::f24();
        let p = f.plane();
        let n = p.vertex_count();
        // reverse vertex ids and every rotation (a mirror image)
        let rotation: Vec<Vec<usize>> = (0..n)
            .rev()
            .map(|v| p.rotation(v).iter().rev().copied().collect())
            .collect();
        let ends: Vec<[usize; 2]> = p.edges().iter().map(|&[u, v]| [n - 1 - u, n - 1 - v]).collect();
        let q = PlaneGraph::new(rotation, ends).unwrap();
        assert!(plane_isomorphic(p, &q));
    }

    #[test]
    fn different_fullerenes_are_not_isomorphic() {
        assert!(!plane_isomorphic(fixtures::f20().plane(), fixtures::f24().plane()));
        assert!(!plane_isomorphic(&fixtures::cube(), &fixtures::k4()));
    }
}
