//! Simple undirected graphs over a fixed host, with stable edge ids.
//!
//! A [`Graph`] is a view of a host graph: vertex and edge masks select what is
//! alive, while ids always refer to the host. Deleting an edge set `S` from a
//! fullerene therefore yields a graph whose edge ids still point at the
//! fullerene's edges.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::error::GraphError;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug)]
struct Host {
    ends: Vec<[VertexId; 2]>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

#[derive(Clone)]
pub struct Graph {
    host: Arc<Host>,
    vertex_on: Vec<bool>,
    edge_on: Vec<bool>,
}

impl Graph {
    /// Builds a simple graph on vertices `0..n`; edge `i` is `edges[i]`.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut ends = Vec::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { edge: id, vertex: u.max(v) });
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: id });
            }
            if adj[u].iter().any(|&(w, _)| w == v) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            adj[u].push((v, id));
            adj[v].push((u, id));
            ends.push([u, v]);
        }
        Ok(Self {
            host: Arc::new(Host { ends, adj }),
            vertex_on: vec![true; n],
            edge_on: vec![true; edges.len()],
        })
    }

    /// Size of the host's vertex id space.
    pub fn vertex_bound(&self) -> usize {
        self.vertex_on.len()
    }

    /// Size of the host's edge id space.
    pub fn edge_bound(&self) -> usize {
        self.edge_on.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_on.iter().filter(|&&b| b).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertex_on.get(v).copied().unwrap_or(false)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        match self.host.ends.get(e) {
            Some(&[u, v]) => self.edge_on[e] && self.vertex_on[u] && self.vertex_on[v],
            None => false,
        }
    }

    /// Endpoints of `e` in the host, whether or not `e` is alive here.
    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.host.ends[e]
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.host.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_on.len()).filter(move |&v| self.vertex_on[v])
    }

    /// Alive edges as `(id, u, v)`, in id order.
    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        (0..self.edge_on.len())
            .filter(move |&e| self.has_edge(e))
            .map(move |e| (e, self.host.ends[e][0], self.host.ends[e][1]))
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges().map(|(e, _, _)| e).collect()
    }

    /// Alive `(neighbour, edge)` pairs around `v`.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = (VertexId, EdgeId)> + '_ {
        let live = self.has_vertex(v);
        self.host.adj[v]
            .iter()
            .copied()
            .filter(move |&(w, e)| live && self.edge_on[e] && self.vertex_on[w])
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).count()
    }

    /// All host edges at `v`, ignoring masks.
    pub fn host_neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.host.adj[v]
    }

    /// The graph with every host vertex and edge switched back on.
    pub fn host_graph(&self) -> Graph {
        Graph {
            host: Arc::clone(&self.host),
            vertex_on: vec![true; self.vertex_on.len()],
            edge_on: vec![true; self.edge_on.len()],
        }
    }

    pub fn without_edges(&self, s: &EdgeSet) -> Graph {
        let mut g = self.clone();
        for &e in s.iter() {
            if e < g.edge_on.len() {
                g.edge_on[e] = false;
            }
        }
        g
    }

    pub fn without_vertices(&self, vs: impl IntoIterator<Item = VertexId>) -> Graph {
        let mut g = self.clone();
        for v in vs {
            if v < g.vertex_on.len() {
                g.vertex_on[v] = false;
            }
        }
        g
    }

    /// Subgraph induced (within this graph) by the given vertices.
    pub fn induced(&self, vs: impl IntoIterator<Item = VertexId>) -> Graph {
        let mut g = self.clone();
        g.vertex_on.iter_mut().for_each(|b| *b = false);
        for v in vs {
            if self.has_vertex(v) {
                g.vertex_on[v] = true;
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, e: EdgeId, on: bool) {
        self.edge_on[e] = on;
    }

    pub(crate) fn set_vertex(&mut self, v: VertexId, on: bool) {
        self.vertex_on[v] = on;
    }

    /// Connected components of the alive part, each sorted.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.vertex_on.len()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for (w, _) in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A sorted set of edge ids referring to some host graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(Vec<EdgeId>);

impl EdgeSet {
    pub fn new(ids: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut v: Vec<EdgeId> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.binary_search(&e).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, EdgeId> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[EdgeId] {
        &self.0
    }

    /// Checks that every id names an alive edge of `g`.
    pub fn check_in(&self, g: &Graph) -> Result<(), GraphError> {
        match self.0.iter().find(|&&e| !g.has_edge(e)) {
            Some(&e) => Err(GraphError::UnknownEdge { edge: e }),
            None => Ok(()),
        }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        self.0.iter().any(|&e| other.contains(e))
    }
}

impl fmt::Display for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a EdgeId;
    type IntoIter = std::slice::Iter<'a, EdgeId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = EdgeId>>(iter: T) -> Self {
        EdgeSet::new(iter)
    }
}

/// An independent edge set of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self, GraphError> {
        edges.check_in(g)?;
        let mut covered = vec![false; g.vertex_bound()];
        for &e in edges.iter() {
            for v in g.endpoints(e) {
                if std::mem::replace(&mut covered[v], true) {
                    return Err(GraphError::NotAMatching { vertex: v });
                }
            }
        }
        Ok(Self { edges })
    }

    pub(crate) fn from_trusted(edges: EdgeSet) -> Self {
        Self { edges }
    }

    pub fn edges(&self) -> &EdgeSet {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True when every alive vertex of `g` is covered.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        let mut covered = vec![false; g.vertex_bound()];
        for &e in self.edges.iter() {
            for v in g.endpoints(e) {
                covered[v] = true;
            }
        }
        g.vertices().all(|v| covered[v])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(GraphError::SelfLoop { edge: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn edge_ids_survive_deletion() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.without_edges(&EdgeSet::new([1]));
        assert_eq!(h.edge_ids(), vec![0, 2]);
        assert_eq!(h.components().len(), 2);
        let k = g.without_vertices([0]);
        assert_eq!(k.edge_ids(), vec![1, 2]);
        assert_eq!(k.vertex_count(), 3);
    }

    #[test]
    fn matching_rejects_shared_vertex() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(Matching::new(&g, EdgeSet::new([0, 1])).is_err());
        let m = Matching::new(&g, EdgeSet::new([0])).unwrap();
        assert!(!m.is_perfect(&g));
    }
}
