//! Rotation systems, the plain-text graph format, face tracing and the
//! fullerene validator.
//!
//! Text format:
//!
//! ```text
//! n m
//! v: e_a e_b e_c        (n lines, clockwise rotation as edge ids)
//! e: u v                (m lines)
//! ```
//!
//! Lines starting with `#` are comments. The writer emits single spaces and LF
//! line endings.

use std::fmt::Write as _;

use crate::error::{Diagnostic, GraphError, ParseError};
use crate::graph::{EdgeId, Graph, VertexId};

/// A graph with a clockwise cyclic order of edge ids at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: Vec<Vec<EdgeId>>,
    ends: Vec<[VertexId; 2]>,
}

/// A face as the cyclic sequence of vertices met along its boundary walk.
pub type Face = Vec<VertexId>;

impl PlaneGraph {
    /// Structural constructor. Checks only that ids are in range; use
    /// [`validate_fullerene`] for the geometric invariants.
    pub fn new(rotation: Vec<Vec<EdgeId>>, ends: Vec<[VertexId; 2]>) -> Result<Self, ParseError> {
        let n = rotation.len();
        for (e, &[u, v]) in ends.iter().enumerate() {
            if u >= n || v >= n {
                return Err(ParseError::Syntax {
                    line: 0,
                    message: format!("edge {e} references a vertex outside 0..{n}"),
                });
            }
        }
        for (v, rot) in rotation.iter().enumerate() {
            if let Some(&e) = rot.iter().find(|&&e| e >= ends.len()) {
                return Err(ParseError::Syntax {
                    line: 0,
                    message: format!("vertex {v} lists edge {e} outside 0..{}", ends.len()),
                });
            }
        }
        Ok(Self { rotation, ends })
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v]
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e]
    }

    pub fn edges(&self) -> &[[VertexId; 2]] {
        &self.ends
    }

    /// Abstract graph on the same ids.
    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        let edges: Vec<_> = self.ends.iter().map(|&[u, v]| (u, v)).collect();
        Graph::from_edges(self.vertex_count(), &edges)
    }

    /// Parses the plain-text format.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

        let (lno, header) = lines
            .next()
            .ok_or_else(|| ParseError::Truncated("missing header".into()))?;
        let nums = parse_numbers(lno, header)?;
        let [n, m] = nums[..] else {
            return Err(syntax(lno, "header must be `n m`"));
        };

        let mut rotation = vec![Vec::new(); n];
        for expected in 0..n {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| ParseError::Truncated(format!("rotation line for vertex {expected}")))?;
            let (id, rest) = split_labelled(lno, line)?;
            if id != expected {
                return Err(syntax(lno, &format!("expected vertex {expected}, found {id}")));
            }
            rotation[id] = parse_numbers(lno, rest)?;
        }

        let mut ends = vec![[0, 0]; m];
        for expected in 0..m {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| ParseError::Truncated(format!("endpoint line for edge {expected}")))?;
            let (id, rest) = split_labelled(lno, line)?;
            if id != expected {
                return Err(syntax(lno, &format!("expected edge {expected}, found {id}")));
            }
            let uv = parse_numbers(lno, rest)?;
            let [u, v] = uv[..] else {
                return Err(syntax(lno, "edge line must be `e: u v`"));
            };
            ends[id] = [u, v];
        }
        if let Some((lno, _)) = lines.next() {
            return Err(syntax(lno, "trailing content after the edge list"));
        }
        Self::new(rotation, ends)
    }

    /// Serializes to the plain-text format, with an optional leading comment.
    pub fn to_text(&self, comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for line in c.lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "{} {}", self.vertex_count(), self.edge_count());
        for (v, rot) in self.rotation.iter().enumerate() {
            let ids: Vec<String> = rot.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{v}: {}", ids.join(" "));
        }
        for (e, [u, v]) in self.ends.iter().enumerate() {
            let _ = writeln!(out, "{e}: {u} {v}");
        }
        out
    }

    /// Traces every face. A dart `u -> v` along `e` is followed by the dart
    /// leaving `v` along the successor of `e` in `v`'s rotation.
    ///
    /// Requires a consistent rotation system (every edge listed exactly once
    /// at each endpoint).
    pub fn faces(&self) -> Vec<Face> {
        let m = self.ends.len();
        // dart 2e leaves ends[e][0], dart 2e+1 leaves ends[e][1]
        let mut used = vec![false; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if used[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut dart = start;
            while !used[dart] {
                used[dart] = true;
                let e = dart / 2;
                let tail = self.ends[e][dart % 2];
                let head = self.ends[e][1 - dart % 2];
                face.push(tail);
                let rot = &self.rotation[head];
                let pos = rot.iter().position(|&x| x == e).expect("consistent rotation");
                let next = rot[(pos + 1) % rot.len()];
                dart = 2 * next + usize::from(self.ends[next][0] != head);
            }
            faces.push(face);
        }
        faces
    }
}

fn syntax(line: usize, message: &str) -> ParseError {
    ParseError::Syntax { line, message: message.to_string() }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| syntax(line, &format!("not a number: {t:?}"))))
        .collect()
}

fn split_labelled(line: usize, text: &str) -> Result<(usize, &str), ParseError> {
    let (label, rest) = text
        .split_once(':')
        .ok_or_else(|| syntax(line, "expected `id: ...`"))?;
    let id = label
        .trim()
        .parse()
        .map_err(|_| syntax(line, &format!("bad id {label:?}")))?;
    Ok((id, rest))
}

/// A plane graph that passed [`validate_fullerene`].
#[derive(Clone, Debug)]
pub struct FullereneGraph {
    plane: PlaneGraph,
    graph: Graph,
    faces: Vec<Face>,
}

impl FullereneGraph {
    pub fn new(plane: PlaneGraph) -> Result<Self, Diagnostic> {
        validate_fullerene(&plane)
    }

    pub fn plane(&self) -> &PlaneGraph {
        &self.plane
    }

    /// The underlying abstract graph; edge ids match the rotation system.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.plane.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.plane.edge_count()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn pentagons(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.len() == 5)
    }

    pub fn to_text(&self, comment: Option<&str>) -> String {
        self.plane.to_text(comment)
    }
}

/// Accepts iff `g` is a cubic, simple, connected plane graph whose faces are
/// pentagons and hexagons with exactly 12 pentagons, and `V - E + F = 2`.
pub fn validate_fullerene(g: &PlaneGraph) -> Result<FullereneGraph, Diagnostic> {
    let n = g.vertex_count();
    for v in 0..n {
        let len = g.rotation(v).len();
        if len != 3 {
            return Err(Diagnostic::MalformedRotation { vertex: v, len });
        }
    }
    for (e, &[u, v]) in g.edges().iter().enumerate() {
        if u == v {
            return Err(Diagnostic::SelfLoop { edge: e });
        }
    }
    // each edge exactly once in each endpoint's rotation
    let mut seen = vec![0u8; g.edge_count()];
    for v in 0..n {
        for &e in g.rotation(v) {
            let [a, b] = g.endpoints(e);
            if a != v && b != v {
                return Err(Diagnostic::RotationMismatch { vertex: v, edge: e });
            }
            seen[e] += 1;
            if seen[e] > 2 || g.rotation(v).iter().filter(|&&x| x == e).count() > 1 {
                return Err(Diagnostic::RotationMismatch { vertex: v, edge: e });
            }
        }
    }
    if let Some(e) = seen.iter().position(|&c| c != 2) {
        let v = g.endpoints(e)[0];
        return Err(Diagnostic::RotationMismatch { vertex: v, edge: e });
    }
    let graph = match g.to_graph() {
        Ok(graph) => graph,
        Err(GraphError::DuplicateEdge { u, v }) => return Err(Diagnostic::DuplicateEdge { u, v }),
        Err(GraphError::SelfLoop { edge }) => return Err(Diagnostic::SelfLoop { edge }),
        Err(_) => unreachable!("endpoints were range-checked at construction"),
    };
    let components = graph.components().len();
    if components != 1 {
        return Err(Diagnostic::Disconnected { components });
    }
    let faces = g.faces();
    if let Some(f) = faces.iter().find(|f| f.len() != 5 && f.len() != 6) {
        return Err(Diagnostic::FaceSize { size: f.len() });
    }
    let pentagons = faces.iter().filter(|f| f.len() == 5).count();
    if pentagons != 12 {
        return Err(Diagnostic::PentagonCount { pentagons });
    }
    let euler = n as i64 - g.edge_count() as i64 + faces.len() as i64;
    if euler != 2 {
        return Err(Diagnostic::Euler { value: euler });
    }
    Ok(FullereneGraph { plane: g.clone(), graph, faces })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn text_round_trip() {
        let f = fixtures::f24();
        let text = f.to_text(None);
        assert_eq!(PlaneGraph::parse(&text).unwrap(), *f.plane());
        assert!(!text.contains('\r'));
        assert!(!text.contains("  "));
    }

    #[test]
    fn truncated_input_is_reported() {
        let text = fixtures::f20().to_text(None);
        let cut: String = text.lines().take(10).map(|l| format!("{l}\n")).collect();
        assert!(matches!(PlaneGraph::parse(&cut), Err(ParseError::Truncated(_))));
    }

    #[test]
    fn comments_are_skipped() {
        let g = PlaneGraph::parse("# k2\n2 1\n0: 0\n# mid\n1: 0\n0: 0 1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn face_walks_use_each_dart_once() {
        for f in [fixtures::f20(), fixtures::f24(), fixtures::f26()] {
            let total: usize = f.faces().iter().map(|face| face.len()).sum();
            assert_eq!(total, 2 * f.edge_count());
        }
    }

    #[test]
    fn face_counts_of_fixtures() {
        let count = |f: &FullereneGraph, s: usize| f.faces().iter().filter(|x| x.len() == s).count();
        let f20 = fixtures::f20();
        assert_eq!((count(&f20, 5), count(&f20, 6)), (12, 0));
        let f24 = fixtures::f24();
        assert_eq!((count(&f24, 5), count(&f24, 6)), (12, 2));
        let f26 = fixtures::f26();
        assert_eq!((count(&f26, 5), count(&f26, 6)), (12, 3));
    }

    #[test]
    fn cube_is_rejected_for_its_faces() {
        assert_eq!(validate_fullerene(&fixtures::cube()).unwrap_err(), Diagnostic::FaceSize { size: 4 });
    }

    #[test]
    fn distinct_structural_diagnostics() {
        let bad_len = PlaneGraph::new(vec![vec![0], vec![0]], vec![[0, 1]]).unwrap();
        assert!(matches!(
            validate_fullerene(&bad_len),
            Err(Diagnostic::MalformedRotation { vertex: 0, len: 1 })
        ));

        // theta graph: three parallel edges between two vertices
        let dup = PlaneGraph::new(vec![vec![0, 1, 2], vec![0, 2, 1]], vec![[0, 1], [0, 1], [0, 1]]).unwrap();
        assert!(matches!(validate_fullerene(&dup), Err(Diagnostic::DuplicateEdge { .. })));

        // two disjoint copies of K4
        let k4 = fixtures::k4();
        let n = k4.vertex_count();
        let m = k4.edge_count();
        let mut rotation: Vec<Vec<usize>> = (0..n).map(|v| k4.rotation(v).to_vec()).collect();
        rotation.extend((0..n).map(|v| k4.rotation(v).iter().map(|e| e + m).collect::<Vec<_>>()));
        let mut ends = k4.edges().to_vec();
        ends.extend(k4.edges().iter().map(|[u, v]| [u + n, v + n]));
        let two = PlaneGraph::new(rotation, ends).unwrap();
        assert_eq!(validate_fullerene(&two).unwrap_err(), Diagnostic::Disconnected { components: 2 });
    }
}
