//! Turning walks into fullerenes, the fullerene families with anti-forcing
//! number four, and the parity argument for 26 vertices.

use std::collections::BTreeSet;

use super::array::{DistanceArray, OpTag};
use super::digraph::{initial_array, ArrayDigraph};
use super::seed::{seed, SeedGraph};
use super::walk::Walk;
use crate::error::PatchError;
use crate::graph::EdgeSet;
use crate::matching::has_unique_perfect_matching;
use crate::plane::{validate_fullerene, FullereneGraph};

/// The published walk from `L15` to the dodecahedron.
pub const F20_WALK_ARRAYS: [&str; 11] = [
    "[24213322]",
    "[23314142]",
    "[33143142]",
    "[33315142]",
    "[333242]",
    "[333414]",
    "[335134]",
    "[3434]",
    "[5451]",
    "[55]",
    "[]",
];

/// The walk from `L14` with one pass through the loop node.
pub const L14_WALK_ARRAYS: [&str; 16] = [
    "[25122322]",
    "[41322322]",
    "[13322324]",
    "[33322341]",
    "[33322513]",
    "[33324133]",
    "[33341333]",
    "[33513333]",
    "[33513333]",
    "[343333]",
    "[515333]",
    "[533513]",
    "[5343]",
    "[5451]",
    "[55]",
    "[]",
];

/// The array every 24-vertex walk passes before the gadget is attached.
pub const F24_GATE: &str = "[33133323]";

#[derive(Clone, Debug)]
pub struct Synthesis {
    pub graph: FullereneGraph,
    /// e1..e4; deleting them leaves a unique perfect matching.
    pub marked: EdgeSet,
    pub walk: Walk,
    pub seed_vertices: usize,
}

impl Synthesis {
    /// Seed vertices plus two per O1 step plus ten per O4 step.
    pub fn ledger(&self) -> usize {
        self.seed_vertices + 2 * self.walk.o1_count() + 10 * self.walk.o4_count()
    }
}

/// One geometric step; see [`SeedGraph::grow`].
pub fn grow(s: &SeedGraph, tag: OpTag) -> Result<SeedGraph, PatchError> {
    s.grow(tag)
}

/// Grows the seed along the walk and checks the result.
pub fn synthesize(w: &Walk) -> Result<Synthesis, PatchError> {
    let start = seed(w.seed)?;
    let seed_vertices = start.vertex_count();
    let mut patch = start;
    for (i, &tag) in w.steps.iter().enumerate() {
        patch = patch.grow(tag).map_err(|e| PatchError::WalkStalled {
            step: i + 1,
            tag: tag.to_string(),
            reason: e.to_string(),
        })?;
    }
    if !patch.is_closed() {
        return Err(PatchError::WalkUnfinished(patch.distance_array()?.to_string()));
    }
    let plane = patch.to_plane()?;
    let graph = validate_fullerene(&plane).map_err(PatchError::NotFullerene)?;
    let marked = patch.marked_edges()?;
    let unique = has_unique_perfect_matching(&graph.graph().without_edges(&marked)).ok_or(PatchError::NotAntiForcing)?;
    if *unique.edges() != EdgeSet::new(patch.pairing_edges()) {
        return Err(PatchError::NotAntiForcing);
    }
    Ok(Synthesis { graph, marked, walk: w.clone(), seed_vertices })
}

pub fn f20_walk() -> Walk {
    Walk::from_array_literals(15, &F20_WALK_ARRAYS).expect("published walk replays")
}

/// Walk from `L14` to a fullerene on `2k` vertices, `k >= 14`: the loop at
/// `[33513333]` is taken `k - 14` times.
pub fn l14_walk(k: usize) -> Result<Walk, PatchError> {
    if k < 14 {
        return Err(PatchError::InvalidOrder { n: 2 * k });
    }
    let base = Walk::from_array_literals(14, &L14_WALK_ARRAYS).expect("published walk replays");
    let loop_at = L14_WALK_ARRAYS.iter().position(|&a| a == "[33513333]").unwrap();
    let mut steps = base.steps[..loop_at].to_vec();
    // base contains one pass through the loop; repeat it k - 14 times
    steps.extend(std::iter::repeat_n(base.steps[loop_at], k - 14));
    steps.extend(&base.steps[loop_at + 1..]);
    Ok(Walk::new(14, steps))
}

/// Every path without repeated nodes from `L5`, `L9` or `L13` to the gate
/// array, finished by O4.
pub fn f24_walks(d: &ArrayDigraph) -> Vec<Walk> {
    let gate: DistanceArray = F24_GATE.parse().unwrap();
    let mut out = Vec::new();
    for i in [5, 9, 13] {
        let from = initial_array(i).unwrap();
        for mut path in d.simple_paths(&from, &gate) {
            path.push(DistanceArray::empty());
            out.push(Walk::from_arrays(i, &path).expect("digraph arcs are operations"));
        }
    }
    out
}

/// A fullerene on `n` vertices with anti-forcing number four.
pub fn construct_af4(n: usize) -> Result<Synthesis, PatchError> {
    if n % 2 == 1 || n < 20 || n == 22 || n == 26 {
        return Err(PatchError::InvalidOrder { n });
    }
    match n {
        20 => synthesize(&f20_walk()),
        24 => {
            let d = super::digraph::generate_digraph();
            let walk = f24_walks(&d).into_iter().next().ok_or(PatchError::NoPath { from: F24_GATE.into() })?;
            synthesize(&walk)
        }
        _ => synthesize(&l14_walk(n / 2)?),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityReport {
    /// Nodes of the restriction to walks from `L4`, `L11`, `L15`.
    pub restricted_nodes: usize,
    pub bipartite: bool,
    /// Seeds among `L11`, `L15` with a walk of length 10 to `[]`.
    pub length_ten_from: Vec<usize>,
    pub shortest_from_l15: Option<usize>,
    /// Vertex counts of every synthesized walk from `L11` and `L15` up to
    /// the length cap.
    pub vertex_counts: BTreeSet<usize>,
    pub walks_synthesized: usize,
    pub failures: Vec<String>,
}

impl ParityReport {
    pub fn passed(&self) -> bool {
        self.bipartite
            && self.length_ten_from == [11, 15]
            && self.shortest_from_l15.is_some_and(|l| l % 2 == 0)
            && self.vertex_counts.iter().all(|n| n % 4 == 0)
            && self.failures.is_empty()
    }
}

/// Checks the restriction of `d` to walks from `L4`, `L11`, `L15`, and
/// synthesizes every walk from `L11` and `L15` with at most `max_len` steps.
pub fn f26_parity_check(d: &ArrayDigraph, max_len: usize) -> ParityReport {
    let sources: Vec<DistanceArray> = [4, 11, 15].iter().map(|&i| initial_array(i).unwrap()).collect();
    let restricted = d.reachable_from(&sources);
    let bipartite = d.two_colouring(&restricted).is_some();
    let length_ten_from = [11, 15]
        .into_iter()
        .filter(|&i| d.walks_to_empty(&initial_array(i).unwrap(), 10).iter().any(|w| w.len() == 11))
        .collect();
    let shortest_from_l15 = d.shortest_walk_len(&sources[2], super::digraph::WALK_LENGTH_CAP);
    let mut vertex_counts = BTreeSet::new();
    let mut failures = Vec::new();
    let mut walks_synthesized = 0;
    for i in [11, 15] {
        for arrays in d.walks_to_empty(&initial_array(i).unwrap(), max_len) {
            let walk = Walk::from_arrays(i, &arrays).expect("digraph arcs are operations");
            walks_synthesized += 1;
            match synthesize(&walk) {
                Ok(s) => {
                    vertex_counts.insert(s.graph.vertex_count());
                }
                Err(e) => failures.push(format!("{walk}: {e}")),
            }
        }
    }
    ParityReport {
        restricted_nodes: restricted.len(),
        bipartite,
        length_ten_from,
        shortest_from_l15,
        vertex_counts,
        walks_synthesized,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::plane_isomorphic;

    #[test]
    fn f20_walk_gives_the_dodecahedron() {
        let s = synthesize(&f20_walk()).unwrap();
        assert_eq!(s.graph.vertex_count(), 20);
        assert_eq!(s.ledger(), 20);
        assert!(plane_isomorphic(s.graph.plane(), fixtures::f20().plane()));
    }

    #[test]
    fn l14_family_orders() {
        for k in 14..=17 {
            let s = synthesize(&l14_walk(k).unwrap()).unwrap();
            assert_eq!(s.graph.vertex_count(), 2 * k);
            assert_eq!(s.ledger(), 2 * k);
            assert_eq!(s.walk.o1_count(), k - 4);
        }
    }

    #[test]
    fn invalid_orders() {
        for n in [18, 21, 22, 26] {
            assert_eq!(construct_af4(n).unwrap_err(), PatchError::InvalidOrder { n });
        }
    }

    #[test]
    fn unfinished_walk() {
        let w = Walk::new(15, vec![]);
        assert!(matches!(synthesize(&w), Err(PatchError::WalkUnfinished(_))));
    }
}
