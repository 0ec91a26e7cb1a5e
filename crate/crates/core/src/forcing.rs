//! Exact anti-forcing and forcing numbers by subset enumeration, and the
//! structural checks on anti-forcing sets of size four.
//!
//! Subsets are visited in lexicographic order of sorted edge ids and the first
//! hit is the witness. Parallel sweeps split on the first element of the subset
//! and keep the lexicographically least hit, so any `jobs` value gives the same
//! certificate.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::ForcingError;
use crate::graph::{EdgeId, EdgeSet, Graph, Matching};
use crate::matching::{enumerate_perfect_matchings, has_unique_perfect_matching, kotzig_reduce, ReductionVerdict};
use crate::plane::FullereneGraph;

pub const DEFAULT_AF_BUDGET: usize = 6;
pub const DEFAULT_FORCING_BUDGET: usize = 5;

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub budget: usize,
    /// Worker threads for subset sweeps; 1 runs inline.
    pub jobs: usize,
    /// At size 4, try subsets that are not matchings before 4-matchings.
    /// Only the visiting order changes; every subset is still examined.
    pub matchings_last_at_four: bool,
}

impl SearchOptions {
    pub fn anti_forcing() -> Self {
        Self { budget: DEFAULT_AF_BUDGET, jobs: 1, matchings_last_at_four: false }
    }

    pub fn forcing() -> Self {
        Self { budget: DEFAULT_FORCING_BUDGET, jobs: 1, matchings_last_at_four: false }
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiForcingCertificate {
    pub number: usize,
    pub witness: EdgeSet,
    /// Every smaller subset was examined and rejected.
    pub exhausted_below: bool,
}

impl fmt::Display for AntiForcingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "number: {}", self.number)?;
        writeln!(f, "witness: {}", join_ids(self.witness.as_slice()))?;
        write!(f, "exhausted_below: {}", self.exhausted_below)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingCertificate {
    pub number: usize,
    pub matching: Matching,
    pub witness: EdgeSet,
    /// All perfect matchings were swept.
    pub exhaustive: bool,
}

impl fmt::Display for ForcingCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "number: {}", self.number)?;
        writeln!(f, "matching: {}", join_ids(self.matching.edges().as_slice()))?;
        writeln!(f, "witness: {}", join_ids(self.witness.as_slice()))?;
        write!(f, "exhausted_below: {}", self.exhaustive)
    }
}

fn join_ids(ids: &[EdgeId]) -> String {
    ids.iter().map(|e| e.to_string()).join(" ")
}

/// `g - s` has exactly one perfect matching.
pub fn is_anti_forcing(g: &Graph, s: &EdgeSet) -> bool {
    has_unique_perfect_matching(&g.without_edges(s)).is_some()
}

/// Smallest anti-forcing set of a fullerene.
pub fn anti_forcing_number(g: &FullereneGraph, opts: SearchOptions) -> Result<AntiForcingCertificate, ForcingError> {
    anti_forcing_number_of(g.graph(), opts)
}

/// [`anti_forcing_number`] for an arbitrary graph.
pub fn anti_forcing_number_of(g: &Graph, opts: SearchOptions) -> Result<AntiForcingCertificate, ForcingError> {
    let edges = g.edge_ids();
    let probe = |scratch: &mut Graph, subset: &[EdgeId]| {
        subset.iter().for_each(|&e| scratch.set_edge(e, false));
        let hit = has_unique_perfect_matching(scratch).is_some();
        subset.iter().for_each(|&e| scratch.set_edge(e, true));
        hit
    };
    for k in 0..=opts.budget.min(edges.len()) {
        let found = if k == 4 && opts.matchings_last_at_four {
            let not_matching = |s: &[EdgeId]| !is_edge_matching(g, s);
            sweep(g, &edges, k, opts.jobs, |sc, s| not_matching(s) && probe(sc, s))
                .or_else(|| sweep(g, &edges, k, opts.jobs, |sc, s| !not_matching(s) && probe(sc, s)))
        } else {
            sweep(g, &edges, k, opts.jobs, probe)
        };
        if let Some(witness) = found {
            return Ok(AntiForcingCertificate { number: k, witness: EdgeSet::new(witness), exhausted_below: true });
        }
    }
    Err(ForcingError::AntiForcingBudget { budget: opts.budget })
}

/// True iff no `k`-subset of the edges is anti-forcing.
///
/// Brute-force reference: each subset is judged by enumerating perfect
/// matchings of `g - S` up to two, with no structural shortcuts.
pub fn refute_size(g: &FullereneGraph, k: usize) -> bool {
    refute_size_of(g.graph(), k, 1)
}

pub fn refute_size_of(g: &Graph, k: usize, jobs: usize) -> bool {
    let edges = g.edge_ids();
    sweep(g, &edges, k, jobs, |scratch, subset| {
        subset.iter().for_each(|&e| scratch.set_edge(e, false));
        let pms = enumerate_perfect_matchings(scratch, 2);
        subset.iter().for_each(|&e| scratch.set_edge(e, true));
        pms.matchings.len() == 1 && !pms.truncated
    })
    .is_none()
}

/// Every anti-forcing set of size `k`, in lexicographic order.
pub fn all_anti_forcing_sets(g: &Graph, k: usize) -> Vec<EdgeSet> {
    g.edge_ids()
        .into_iter()
        .combinations(k)
        .filter(|s| is_anti_forcing(g, &EdgeSet::new(s.iter().copied())))
        .map(EdgeSet::new)
        .collect()
}

fn is_edge_matching(g: &Graph, s: &[EdgeId]) -> bool {
    let mut ends: Vec<usize> = s.iter().flat_map(|&e| g.endpoints(e)).collect();
    ends.sort_unstable();
    ends.windows(2).all(|w| w[0] != w[1])
}

/// First `k`-subset of `items` (lexicographic) accepted by `test`.
fn sweep<F>(g: &Graph, items: &[EdgeId], k: usize, jobs: usize, test: F) -> Option<Vec<EdgeId>>
where
    F: Fn(&mut Graph, &[EdgeId]) -> bool + Sync,
{
    if k == 0 {
        let mut scratch = g.clone();
        return test(&mut scratch, &[]).then(Vec::new);
    }
    if k > items.len() {
        return None;
    }
    let by_first = |first: usize| -> Option<Vec<EdgeId>> {
        let mut scratch = g.clone();
        let mut subset = Vec::with_capacity(k);
        subset.push(items[first]);
        for rest in items[first + 1..].iter().copied().combinations(k - 1) {
            subset.truncate(1);
            subset.extend(rest);
            if test(&mut scratch, &subset) {
                return Some(subset);
            }
        }
        None
    };
    let firsts = 0..=items.len() - k;
    if jobs <= 1 {
        return firsts.into_iter().find_map(by_first);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().ok()?;
    pool.install(|| firsts.into_par_iter().find_map_first(by_first))
}

/// Shape of the subgraph formed by four edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntiForcingShape {
    /// A path with two edges plus two independent edges.
    PathTwoPlusTwoEdges,
    /// A path with three edges plus one independent edge.
    PathThreePlusEdge,
    Other,
}

impl fmt::Display for AntiForcingShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::PathTwoPlusTwoEdges => "P2+2K2",
            Self::PathThreePlusEdge => "P3+K2",
            Self::Other => "other",
        })
    }
}

/// Classifies the subgraph spanned by an anti-forcing set of size four.
pub fn classify_antiforcing_shape(g: &FullereneGraph, s: &EdgeSet) -> Result<AntiForcingShape, ForcingError> {
    if s.len() != 4 {
        return Err(ForcingError::WrongSize { expected: 4, got: s.len() });
    }
    s.check_in(g.graph())?;
    if !is_anti_forcing(g.graph(), s) {
        return Err(ForcingError::NotAntiForcing);
    }
    Ok(edge_set_shape(g.graph(), s))
}

/// Isomorphism type of the graph whose edges are `s`, for `|s| = 4`.
pub fn edge_set_shape(g: &Graph, s: &EdgeSet) -> AntiForcingShape {
    let pairs: Vec<(usize, usize)> = s
        .iter()
        .map(|&e| {
            let [u, v] = g.endpoints(e);
            (u, v)
        })
        .collect();
    let mut verts: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(u, v)| (verts.binary_search(&u).unwrap(), verts.binary_search(&v).unwrap()))
        .collect();
    let h = Graph::from_edges(verts.len(), &local).expect("subset of a simple graph");
    let mut comps: Vec<(usize, usize, usize)> = h
        .components()
        .into_iter()
        .map(|c| {
            let edges = h.edges().filter(|&(_, u, _)| c.contains(&u)).count();
            let max_deg = c.iter().map(|&v| h.degree(v)).max().unwrap_or(0);
            (edges, c.len(), max_deg)
        })
        .collect();
    comps.sort_unstable();
    // a component is a path iff it is a tree with maximum degree <= 2
    let is_path = |&(edges, verts, deg): &(usize, usize, usize)| verts == edges + 1 && deg <= 2;
    if !comps.iter().all(is_path) {
        return AntiForcingShape::Other;
    }
    let sizes: Vec<usize> = comps.iter().map(|c| c.0).collect();
    match sizes.as_slice() {
        [1, 1, 2] => AntiForcingShape::PathTwoPlusTwoEdges,
        [1, 3] => AntiForcingShape::PathThreePlusEdge,
        _ => AntiForcingShape::Other,
    }
}

/// Which of the two permitted outcomes pendant stripping of `g - s` reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidualReport {
    /// Everything was stripped.
    Empty { forced: Vec<EdgeId> },
    /// Two disjoint pentagons joined by `bridge` remain, attached to the
    /// stripped part by exactly eight `boundary` edges.
    TwoPentagons { forced: Vec<EdgeId>, bridge: EdgeId, boundary: EdgeSet },
}

/// Strips `g - s` and checks that the residual is empty or two pentagons
/// joined by an edge with eight boundary edges.
pub fn residual_structure_check(g: &FullereneGraph, s: &EdgeSet) -> Result<ResidualReport, ForcingError> {
    if s.len() != 4 {
        return Err(ForcingError::WrongSize { expected: 4, got: s.len() });
    }
    s.check_in(g.graph())?;
    if !is_anti_forcing(g.graph(), s) {
        return Err(ForcingError::NotAntiForcing);
    }
    let red = kotzig_reduce(&g.graph().without_edges(s));
    if red.verdict != ReductionVerdict::Stable {
        return Err(ForcingError::NotAntiForcing);
    }
    if red.residual_is_empty() {
        return Ok(ResidualReport::Empty { forced: red.forced });
    }
    let residual_vertices = red.residual.vertex_count();
    let bridge = two_pentagons_bridge(&red.residual).ok_or(ForcingError::ResidualShape { residual_vertices })?;
    if red.boundary.len() != 8 {
        return Err(ForcingError::BoundarySize { boundary: red.boundary.len() });
    }
    Ok(ResidualReport::TwoPentagons { forced: red.forced, bridge, boundary: red.boundary })
}

/// The joining edge when `h` is two disjoint 5-cycles plus one edge between
/// them.
pub fn two_pentagons_bridge(h: &Graph) -> Option<EdgeId> {
    if h.vertex_count() != 10 || h.edge_count() != 11 {
        return None;
    }
    let bridges = crate::matching::bridges(h);
    let [bridge] = bridges.as_slice() else {
        return None;
    };
    let rest = h.without_edges(&bridges);
    let comps = rest.components();
    let pentagon = |c: &Vec<usize>| c.len() == 5 && c.iter().all(|&v| rest.degree(v) == 2);
    (comps.len() == 2 && comps.iter().all(pentagon)).then_some(*bridge)
}

/// Smallest forcing number over all perfect matchings.
///
/// `S ⊆ M` forces `M` iff `g` with the ends of `S` deleted has a unique
/// perfect matching.
pub fn forcing_number(g: &FullereneGraph, opts: SearchOptions) -> Result<ForcingCertificate, ForcingError> {
    forcing_number_of(g.graph(), opts)
}

pub fn forcing_number_of(g: &Graph, opts: SearchOptions) -> Result<ForcingCertificate, ForcingError> {
    let all = enumerate_perfect_matchings(g, usize::MAX - 1).matchings;
    if all.is_empty() {
        return Err(ForcingError::NoPerfectMatching);
    }
    let mut best: Option<ForcingCertificate> = None;
    for m in all {
        let limit = best.as_ref().map_or(opts.budget, |b| b.number.saturating_sub(1));
        if let Some(s) = smallest_forcing_subset(g, &m, limit) {
            if best.as_ref().is_none_or(|b| s.len() < b.number) {
                best = Some(ForcingCertificate { number: s.len(), matching: m, witness: s, exhaustive: true });
                if best.as_ref().unwrap().number == 0 {
                    break;
                }
            }
        }
    }
    best.ok_or(ForcingError::ForcingBudget { budget: opts.budget })
}

/// Smallest `S ⊆ m` of size at most `limit` contained in no other perfect
/// matching.
pub fn smallest_forcing_subset(g: &Graph, m: &Matching, limit: usize) -> Option<EdgeSet> {
    let edges = m.edges().as_slice();
    for k in 0..=limit.min(edges.len()) {
        for s in edges.iter().copied().combinations(k) {
            let ends = s.iter().flat_map(|&e| g.endpoints(e));
            if has_unique_perfect_matching(&g.without_vertices(ends)).is_some() {
                return Some(EdgeSet::new(s));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k2_needs_nothing() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let f = forcing_number_of(&k2, SearchOptions::forcing()).unwrap();
        assert_eq!(f.number, 0);
        let af = anti_forcing_number_of(&k2, SearchOptions::anti_forcing()).unwrap();
        assert_eq!(af.number, 0);
    }

    #[test]
    fn hexagon_numbers() {
        let c6 = fixtures::cycle(6);
        assert_eq!(anti_forcing_number_of(&c6, SearchOptions::anti_forcing()).unwrap().number, 1);
        assert_eq!(forcing_number_of(&c6, SearchOptions::forcing()).unwrap().number, 1);
    }

    #[test]
    fn dodecahedron_anti_forcing_number() {
        let f = fixtures::f20();
        let cert = anti_forcing_number(&f, SearchOptions::anti_forcing()).unwrap();
        assert_eq!(cert.number, 4);
        assert!(cert.exhausted_below);
        let left = f.graph().without_edges(&cert.witness);
        assert_eq!(enumerate_perfect_matchings(&left, 2).matchings.len(), 1);
    }

    #[test]
    fn budget_below_answer_is_an_error() {
        let f = fixtures::f20();
        let err = anti_forcing_number(&f, SearchOptions::anti_forcing().with_budget(3)).unwrap_err();
        assert_eq!(err, ForcingError::AntiForcingBudget { budget: 3 });
    }

    #[test]
    fn refute_size_on_dodecahedron() {
        let f = fixtures::f20();
        assert!(refute_size(&f, 3));
        assert!(!refute_size(&f, 4));
    }

    #[test]
    fn parallel_sweep_matches_sequential() {
        let f = fixtures::f24();
        let seq = anti_forcing_number(&f, SearchOptions::anti_forcing()).unwrap();
        let par = anti_forcing_number(&f, SearchOptions::anti_forcing().with_jobs(4)).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.to_string(), par.to_string());
    }

    #[test]
    fn accelerated_order_still_finds_a_minimum() {
        let f = fixtures::f20();
        let mut opts = SearchOptions::anti_forcing();
        opts.matchings_last_at_four = true;
        let cert = anti_forcing_number(&f, opts).unwrap();
        assert_eq!(cert.number, 4);
        assert!(is_anti_forcing(f.graph(), &cert.witness));
    }

    #[test]
    fn matching_of_size_four_is_rejected_by_classifier() {
        let f = fixtures::f20();
        let g = f.graph();
        let m = enumerate_perfect_matchings(g, 1).matchings.remove(0);
        let four = EdgeSet::new(m.edges().iter().copied().take(4));
        assert_eq!(classify_antiforcing_shape(&f, &four), Err(ForcingError::NotAntiForcing));
    }

    #[test]
    fn shape_classifier_on_synthetic_sets() {
        let p = fixtures::path(8);
        // edges 0,1 form a 2-path; 3 and 5 are isolated
        assert_eq!(edge_set_shape(&p, &EdgeSet::new([0, 1, 3, 5])), AntiForcingShape::PathTwoPlusTwoEdges);
        assert_eq!(edge_set_shape(&p, &EdgeSet::new([0, 1, 2, 4])), AntiForcingShape::PathThreePlusEdge);
        assert_eq!(edge_set_shape(&p, &EdgeSet::new([0, 2, 4, 6])), AntiForcingShape::Other);
        assert_eq!(edge_set_shape(&p, &EdgeSet::new([0, 1, 2, 3])), AntiForcingShape::Other);
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
        assert_eq!(edge_set_shape(&star, &EdgeSet::new([0, 1, 2, 3])), AntiForcingShape::Other);
    }

    #[test]
    fn gadget_recognised() {
        assert_eq!(two_pentagons_bridge(&fixtures::two_pentagons()), Some(10));
        assert_eq!(two_pentagons_bridge(&fixtures::cycle(10)), None);
    }

    #[test]
    fn forcing_number_of_dodecahedron_is_at_least_three() {
        let f = fixtures::f20();
        let cert = forcing_number(&f, SearchOptions::forcing()).unwrap();
        assert!(cert.number >= 3);
        assert!(cert.witness.iter().all(|e| cert.matching.edges().contains(*e)));
    }
}
