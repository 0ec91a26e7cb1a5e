//! Generalized patches with boundary half-edges, the fifteen initial seed
//! graphs, and the geometric counterparts of the array operations.

use std::collections::BTreeSet;
use std::fmt;

use super::array::{canonical_alignment, raw_index, DistanceArray, OpTag};
use crate::error::PatchError;
use crate::graph::{EdgeId, EdgeSet, VertexId};
use crate::plane::PlaneGraph;

/// One position in a vertex rotation: an edge, or a half-edge (stub) still
/// waiting for its other end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Edge(EdgeId),
    Stub(usize),
}

use Slot::{Edge, Stub};

/// A plane patch grown from one of the initial seeds.
///
/// `rotation[v]` lists the three slots of `v` in clockwise order. `marked`
/// holds e1..e4, which start as stubs or edges and follow a stub when it
/// becomes an edge. `pairing` is the forced matching built so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedGraph {
    seed: usize,
    rotation: Vec<[Slot; 3]>,
    ends: Vec<[VertexId; 2]>,
    next_stub: usize,
    marked: [Slot; 4],
    pairing: Vec<(VertexId, VertexId)>,
}

/// Stubs of the outer face in walk order and the gaps between consecutive
/// stubs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    /// `(vertex, slot index, stub id)`.
    pub stubs: Vec<(VertexId, usize, usize)>,
    pub gaps: Vec<u8>,
}

impl Boundary {
    pub fn array(&self) -> Result<DistanceArray, PatchError> {
        DistanceArray::new(&self.gaps).map_err(|_| PatchError::FaceViolation(format!("boundary gaps {:?}", self.gaps)))
    }
}

struct SeedRow {
    index: usize,
    array: &'static str,
    edges: &'static [(VertexId, VertexId)],
    rotation: &'static [[Slot; 3]],
    e0: [Slot; 4],
    pairing: &'static [(VertexId, VertexId)],
}

const SEEDS: [SeedRow; 15] = [
    SeedRow {
        index: 1,
        array: "[12222216]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Stub(1), Edge(2)], [Edge(1), Edge(3), Stub(2)], [Edge(2), Stub(3), Edge(4)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 2,
        array: "[13222152]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Stub(1), Edge(2)], [Edge(1), Edge(3), Stub(2)], [Edge(2), Edge(4), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 3,
        array: "[12322143]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Edge(2), Stub(1)], [Edge(1), Edge(3), Stub(2)], [Edge(2), Stub(3), Edge(4)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 4,
        array: "[14221422]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Edge(2), Stub(1)], [Edge(1), Edge(3), Stub(2)], [Edge(2), Edge(4), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 5,
        array: "[12421323]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Stub(1), Edge(2)], [Edge(1), Stub(2), Edge(3)], [Edge(2), Edge(4), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 6,
        array: "[13321332]",
        edges: &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 5)],
        rotation: &[[Edge(0), Edge(1), Stub(0)], [Edge(0), Edge(2), Stub(1)], [Edge(1), Stub(2), Edge(3)], [Edge(2), Stub(3), Edge(4)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(3), Stub(4), Stub(5)],
        pairing: &[(4, 2), (0, 1), (3, 5)],
    },
    SeedRow {
        index: 7,
        array: "[13215123]",
        edges: &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Stub(0), Edge(3)], [Edge(1), Edge(4), Stub(1)], [Edge(2), Stub(2), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(1), Stub(2), Stub(3)],
        pairing: &[(3, 0), (1, 4), (2, 5)],
    },
    SeedRow {
        index: 8,
        array: "[14123214]",
        edges: &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Edge(3), Stub(0)], [Edge(1), Stub(1), Edge(4)], [Edge(2), Stub(2), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(1), Stub(2), Stub(3)],
        pairing: &[(3, 0), (1, 4), (2, 5)],
    },
    SeedRow {
        index: 9,
        array: "[14124123]",
        edges: &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Edge(3), Stub(0)], [Edge(1), Edge(4), Stub(1)], [Edge(2), Stub(2), Stub(3)], [Edge(3), Stub(4), Stub(5)], [Edge(4), Stub(6), Stub(7)]],
        e0: [Stub(0), Stub(1), Stub(2), Stub(3)],
        pairing: &[(3, 0), (1, 4), (2, 5)],
    },
    SeedRow {
        index: 10,
        array: "[32151322]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (3, 4), (5, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Edge(4), Edge(3)], [Edge(3), Stub(0), Edge(5)], [Edge(5), Stub(1), Edge(6)], [Edge(1), Edge(6), Stub(2)], [Edge(2), Stub(3), Edge(7)], [Edge(4), Stub(4), Stub(5)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(6), Stub(1), Stub(2), Stub(3)],
        pairing: &[(3, 2), (4, 0), (1, 6), (5, 7)],
    },
    SeedRow {
        index: 11,
        array: "[41241322]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (3, 4), (5, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Edge(4), Edge(3)], [Edge(3), Stub(0), Edge(5)], [Edge(5), Stub(1), Edge(6)], [Edge(1), Edge(6), Stub(2)], [Edge(2), Edge(7), Stub(3)], [Edge(4), Stub(4), Stub(5)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(6), Stub(1), Stub(2), Stub(3)],
        pairing: &[(3, 2), (4, 0), (1, 6), (5, 7)],
    },
    SeedRow {
        index: 12,
        array: "[41232313]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (2, 6), (3, 4), (5, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Stub(0), Edge(3)], [Edge(3), Edge(5), Edge(4)], [Edge(4), Stub(1), Edge(6)], [Edge(1), Edge(6), Stub(2)], [Edge(2), Stub(3), Edge(7)], [Edge(5), Stub(4), Stub(5)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(4), Stub(1), Stub(6), Stub(7)],
        pairing: &[(3, 4), (7, 5), (0, 1), (2, 6)],
    },
    SeedRow {
        index: 13,
        array: "[32142313]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (2, 6), (3, 4), (5, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Stub(0), Edge(3)], [Edge(3), Edge(5), Edge(4)], [Edge(4), Stub(1), Edge(6)], [Edge(1), Edge(6), Stub(2)], [Edge(2), Edge(7), Stub(3)], [Edge(5), Stub(4), Stub(5)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(4), Stub(1), Stub(6), Stub(7)],
        pairing: &[(3, 4), (7, 5), (0, 1), (2, 6)],
    },
    SeedRow {
        index: 14,
        array: "[25122322]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Stub(0), Edge(3)], [Edge(3), Stub(1), Edge(4)], [Edge(4), Stub(2), Edge(5)], [Edge(1), Edge(5), Stub(3)], [Edge(2), Edge(6), Stub(4)], [Edge(6), Edge(7), Stub(5)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(4), Stub(1), Stub(2), Stub(5)],
        pairing: &[(2, 1), (3, 4), (0, 5), (6, 7)],
    },
    SeedRow {
        index: 15,
        array: "[24213322]",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7)],
        rotation: &[[Edge(0), Edge(1), Edge(2)], [Edge(0), Stub(0), Edge(3)], [Edge(3), Stub(1), Edge(4)], [Edge(4), Stub(2), Edge(5)], [Edge(1), Edge(5), Stub(3)], [Edge(2), Edge(6), Stub(4)], [Edge(6), Stub(5), Edge(7)], [Edge(7), Stub(6), Stub(7)]],
        e0: [Edge(4), Stub(1), Stub(2), Stub(5)],
        pairing: &[(2, 1), (3, 4), (0, 5), (6, 7)],
    },
];

/// The fifteen initial seed graphs, `seed_catalog()[i - 1]` reading `L_i`.
pub fn seed_catalog() -> Vec<SeedGraph> {
    SEEDS.iter().map(SeedGraph::from_row).collect()
}

/// Seed graph `F_si`, `i` in 1..=15.
pub fn seed(i: usize) -> Result<SeedGraph, PatchError> {
    SEEDS.iter().find(|s| s.index == i).map(SeedGraph::from_row).ok_or(PatchError::UnknownSeed(i))
}

/// Printed array of seed `i`.
pub fn seed_array_literal(i: usize) -> Option<&'static str> {
    SEEDS.iter().find(|s| s.index == i).map(|s| s.array)
}

impl SeedGraph {
    fn from_row(row: &SeedRow) -> Self {
        let stubs = row.rotation.iter().flatten().filter(|s| matches!(s, Stub(_))).count();
        SeedGraph {
            seed: row.index,
            rotation: row.rotation.to_vec(),
            ends: row.edges.iter().map(|&(u, v)| [u, v]).collect(),
            next_stub: stubs,
            marked: row.e0,
            pairing: row.pairing.to_vec(),
        }
    }

    /// Index of the initial seed this patch grew from.
    pub fn seed_index(&self) -> usize {
        self.seed
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn rotation(&self, v: VertexId) -> &[Slot; 3] {
        &self.rotation[v]
    }

    pub fn endpoints(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e]
    }

    pub fn marked(&self) -> &[Slot; 4] {
        &self.marked
    }

    pub fn pairing(&self) -> &[(VertexId, VertexId)] {
        &self.pairing
    }

    pub fn stub_count(&self) -> usize {
        self.rotation.iter().flatten().filter(|s| matches!(s, Stub(_))).count()
    }

    pub fn is_closed(&self) -> bool {
        self.stub_count() == 0
    }

    fn next_dart(&self, (v, j): (VertexId, usize)) -> (VertexId, usize) {
        match self.rotation[v][j] {
            Stub(_) => (v, (j + 1) % 3),
            Edge(e) => {
                let [a, b] = self.ends[e];
                let w = if a == v { b } else { a };
                let k = self.rotation[w].iter().position(|&s| s == Edge(e)).expect("rotation lists its edges");
                (w, (k + 1) % 3)
            }
        }
    }

    /// Face walks as dart sequences; the outer face is the one carrying the
    /// stubs.
    pub fn face_walks(&self) -> Vec<Vec<(VertexId, usize)>> {
        let mut seen = vec![[false; 3]; self.vertex_count()];
        let mut faces = Vec::new();
        for v in 0..self.vertex_count() {
            for j in 0..3 {
                if seen[v][j] {
                    continue;
                }
                let mut walk = Vec::new();
                let mut at = (v, j);
                while !seen[at.0][at.1] {
                    seen[at.0][at.1] = true;
                    walk.push(at);
                    at = self.next_dart(at);
                }
                faces.push(walk);
            }
        }
        faces
    }

    fn is_stub_dart(&self, (v, j): (VertexId, usize)) -> bool {
        matches!(self.rotation[v][j], Stub(_))
    }

    pub fn boundary(&self) -> Result<Boundary, PatchError> {
        let outer: Vec<Vec<(VertexId, usize)>> =
            self.face_walks().into_iter().filter(|f| f.iter().any(|&d| self.is_stub_dart(d))).collect();
        let face = match outer.as_slice() {
            [] => return Ok(Boundary { stubs: Vec::new(), gaps: Vec::new() }),
            [f] => f,
            _ => return Err(PatchError::FaceViolation(format!("stubs lie on {} faces", outer.len()))),
        };
        let stub_id = |(v, j): (VertexId, usize)| match self.rotation[v][j] {
            Stub(s) => s,
            Edge(_) => usize::MAX,
        };
        let start = (0..face.len()).min_by_key(|&i| stub_id(face[i])).unwrap();
        let len = face.len();
        let idx: Vec<usize> = (0..len).filter(|&i| self.is_stub_dart(face[(start + i) % len])).collect();
        let stubs = idx
            .iter()
            .map(|&i| {
                let (v, j) = face[(start + i) % len];
                (v, j, stub_id((v, j)))
            })
            .collect();
        let gaps = idx
            .iter()
            .enumerate()
            .map(|(m, &i)| {
                let next = idx.get(m + 1).copied().unwrap_or(idx[0] + len);
                u8::try_from(next - i).unwrap_or(u8::MAX)
            })
            .collect();
        Ok(Boundary { stubs, gaps })
    }

    /// Canonical distance array of the boundary.
    pub fn distance_array(&self) -> Result<DistanceArray, PatchError> {
        self.boundary()?.array()
    }

    /// All faces other than the outer one are pentagons or hexagons.
    pub fn check_inner_faces(&self) -> Result<(), PatchError> {
        for f in self.face_walks() {
            if f.iter().any(|&d| self.is_stub_dart(d)) {
                continue;
            }
            if !(5..=6).contains(&f.len()) {
                return Err(PatchError::FaceViolation(format!("inner face of size {}", f.len())));
            }
        }
        Ok(())
    }

    /// Applies the geometric counterpart of `tag`, with `tag` read against
    /// the canonical form of the current boundary.
    pub fn grow(&self, tag: OpTag) -> Result<SeedGraph, PatchError> {
        let b = self.boundary()?;
        let current = b.array()?;
        let expected = current.apply(tag)?;
        let k = b.gaps.len();
        let (_, r, reversed) = canonical_alignment(&b.gaps);
        let mut next = self.clone();
        match tag {
            OpTag::O1(i) => next.add_cap(&b, raw_index(k, i - 1, r, reversed)),
            OpTag::O2(i) => {
                let j = raw_index(k, i - 1, r, reversed);
                next.join(b.stubs[j], b.stubs[(j + 1) % k])?;
            }
            OpTag::O3 => next.join(b.stubs[0], b.stubs[1])?,
            OpTag::O4(_) => next = self.attach_gadget(&b)?,
        }
        let found = next.distance_array()?;
        if found != expected {
            return Err(PatchError::BoundaryMismatch { expected: expected.to_string(), found: found.to_string() });
        }
        next.check_inner_faces()?;
        Ok(next)
    }

    fn remark(&mut self, stub: usize, edge: EdgeId) -> Result<(), PatchError> {
        if self.marked.contains(&Edge(edge)) && self.marked.contains(&Stub(stub)) {
            return Err(PatchError::MarkedEdgesCollapsed(3));
        }
        for m in self.marked.iter_mut() {
            if *m == Stub(stub) {
                *m = Edge(edge);
            }
        }
        Ok(())
    }

    fn fresh_stub(&mut self) -> Slot {
        self.next_stub += 1;
        Stub(self.next_stub - 1)
    }

    /// New vertex `u` joined to the stubs `t_j`, `t_{j+1}` and to a new
    /// vertex `v` carrying two stubs; `uv` joins the pairing.
    fn add_cap(&mut self, b: &Boundary, j: usize) {
        let k = b.stubs.len();
        let (x, xs, xid) = b.stubs[j];
        let (y, ys, yid) = b.stubs[(j + 1) % k];
        let u = self.vertex_count();
        let v = u + 1;
        let exu = self.push_edge(x, u);
        let eyu = self.push_edge(y, u);
        let euv = self.push_edge(u, v);
        self.rotation[x][xs] = Edge(exu);
        self.rotation[y][ys] = Edge(eyu);
        let s1 = self.fresh_stub();
        let s2 = self.fresh_stub();
        self.rotation.push([Edge(eyu), Edge(exu), Edge(euv)]);
        self.rotation.push([Edge(euv), s1, s2]);
        self.remark(xid, exu).expect("distinct stubs");
        self.remark(yid, eyu).expect("distinct stubs");
        self.pairing.push((u, v));
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        self.ends.push([u, v]);
        self.ends.len() - 1
    }

    /// Merges two stubs into one edge.
    fn join(&mut self, s: (VertexId, usize, usize), t: (VertexId, usize, usize)) -> Result<(), PatchError> {
        let (x, xs, xid) = s;
        let (y, ys, yid) = t;
        if x == y {
            return Err(PatchError::FaceViolation(format!("merge would create a loop at {x}")));
        }
        if self.ends.iter().any(|&[a, b]| (a, b) == (x, y) || (a, b) == (y, x)) {
            return Err(PatchError::FaceViolation(format!("merge would double the edge {x}-{y}")));
        }
        if self.marked.contains(&Stub(xid)) && self.marked.contains(&Stub(yid)) {
            return Err(PatchError::MarkedEdgesCollapsed(3));
        }
        let e = self.push_edge(x, y);
        self.rotation[x][xs] = Edge(e);
        self.rotation[y][ys] = Edge(e);
        self.remark(xid, e)?;
        self.remark(yid, e)
    }

    /// Glues the two-pentagon gadget onto the eight stubs. Every rotation and
    /// reflection of the gadget boundary is tried; the admissible ones must
    /// form a single class under the gadget's own symmetry.
    fn attach_gadget(&self, b: &Boundary) -> Result<SeedGraph, PatchError> {
        if b.stubs.len() != 8 {
            return Err(PatchError::GadgetAlignment(0));
        }
        let gadget = gadget();
        let gb = gadget.boundary()?;
        let mut admissible: Vec<(usize, bool, SeedGraph)> = Vec::new();
        for shift in 0..8 {
            for reversed in [false, true] {
                let cand = self.glue(&gadget, &gb, b, shift, reversed);
                let ok = cand
                    .to_plane()
                    .ok()
                    .is_some_and(|p| crate::plane::validate_fullerene(&p).is_ok());
                if ok {
                    admissible.push((shift, reversed, cand));
                }
            }
        }
        let classes: BTreeSet<(usize, bool)> = admissible.iter().map(|&(s, r, _)| (s % 4, r)).collect();
        if classes.len() != 1 {
            return Err(PatchError::GadgetAlignment(classes.len()));
        }
        Ok(admissible.swap_remove(0).2)
    }

    fn glue(&self, gadget: &SeedGraph, gb: &Boundary, b: &Boundary, shift: usize, reversed: bool) -> SeedGraph {
        let mut out = self.clone();
        let n = out.vertex_count();
        let m = out.edge_count();
        let lift = |s: Slot| match s {
            Edge(e) => Edge(e + m),
            other => other,
        };
        out.ends.extend(gadget.ends.iter().map(|&[u, v]| [u + n, v + n]));
        out.rotation.extend(gadget.rotation.iter().map(|r| r.map(lift)));
        out.pairing.extend(gadget.pairing.iter().map(|&(u, v)| (u + n, v + n)));
        for (i, &(x, xs, xid)) in b.stubs.iter().enumerate() {
            let g = if reversed { (shift + 8 - i) % 8 } else { (shift + i) % 8 };
            let (y, ys, _) = gb.stubs[g];
            let e = out.push_edge(x, y + n);
            out.rotation[x][xs] = Edge(e);
            out.rotation[y + n][ys] = Edge(e);
            out.remark(xid, e).expect("distinct stubs");
        }
        out
    }

    /// The closed patch as a plane graph.
    pub fn to_plane(&self) -> Result<PlaneGraph, PatchError> {
        let rotation = self
            .rotation
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| match s {
                        Edge(e) => Ok(*e),
                        Stub(_) => Err(PatchError::FaceViolation("patch still has half-edges".into())),
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        PlaneGraph::new(rotation, self.ends.clone()).map_err(|e| PatchError::FaceViolation(e.to_string()))
    }

    /// e1..e4 once every marked slot is an edge.
    pub fn marked_edges(&self) -> Result<EdgeSet, PatchError> {
        let mut ids = Vec::new();
        for m in self.marked {
            match m {
                Edge(e) => ids.push(e),
                Stub(_) => return Err(PatchError::FaceViolation("marked half-edge left open".into())),
            }
        }
        let set = EdgeSet::new(ids);
        if set.len() != 4 {
            return Err(PatchError::MarkedEdgesCollapsed(set.len()));
        }
        Ok(set)
    }

    /// Edge ids of the forced pairing.
    pub fn pairing_edges(&self) -> Vec<EdgeId> {
        self.pairing
            .iter()
            .filter_map(|&(u, v)| self.ends.iter().position(|&[a, b]| (a, b) == (u, v) || (a, b) == (v, u)))
            .collect()
    }
}

/// Two pentagons `a0..a4` (vertices 0..5) and `b0..b4` (5..10) joined by the
/// edge `a0 b0`; the other eight vertices each carry one stub.
pub fn gadget() -> SeedGraph {
    let mut ends = Vec::new();
    for base in [0, 5] {
        ends.extend((0..5).map(|j| [base + j, base + (j + 1) % 5]));
    }
    ends.push([0, 5]);
    let mut rotation = Vec::new();
    let mut stub = 0;
    for base in [0, 5] {
        rotation.push([Edge(base + 4), Edge(base), Edge(10)]);
        for j in 1..5 {
            rotation.push([Edge(base + j - 1), Edge(base + j), Stub(stub)]);
            stub += 1;
        }
    }
    SeedGraph {
        seed: 0,
        rotation,
        ends,
        next_stub: stub,
        marked: [Stub(usize::MAX); 4],
        pairing: vec![(0, 5), (1, 2), (3, 4), (6, 7), (8, 9)],
    }
}

impl fmt::Display for SeedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {} with {} vertices", self.seed, self.vertex_count())?;
        for (v, r) in self.rotation.iter().enumerate() {
            let slots: Vec<String> = r
                .iter()
                .map(|s| match s {
                    Edge(e) => format!("e{e}"),
                    Stub(t) => format!("t{t}"),
                })
                .collect();
            writeln!(f, "{v}: {}", slots.join(" "))?;
        }
        Ok(())
    }
}
