//! Perfect matchings: exhaustive enumeration, pendant-edge (Kotzig) reduction,
//! the unique-perfect-matching decision and bridges.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{EdgeId, EdgeSet, Graph, Matching, VertexId};

/// Result of [`enumerate_perfect_matchings`].
#[derive(Clone, Debug)]
pub struct PerfectMatchings {
    pub matchings: Vec<Matching>,
    /// More perfect matchings exist beyond the cap.
    pub truncated: bool,
}

/// Lists the perfect matchings of `g`, at most `cap` of them.
///
/// Plain backtracking: the lowest-id uncovered vertex is matched along each of
/// its alive edges in turn. This is the reference oracle for every matching
/// claim in the crate, so it deliberately does no pruning.
pub fn enumerate_perfect_matchings(g: &Graph, cap: usize) -> PerfectMatchings {
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 1 || cap == 0 {
        return PerfectMatchings { matchings: out, truncated: cap == 0 && g.vertex_count().is_multiple_of(2) };
    }
    let order: Vec<VertexId> = g.vertices().collect();
    let mut covered = vec![false; g.vertex_bound()];
    let mut chosen = Vec::new();
    let limit = cap.saturating_add(1);
    backtrack(g, &order, 0, &mut covered, &mut chosen, &mut out, limit);
    let truncated = out.len() > cap;
    out.truncate(cap);
    PerfectMatchings { matchings: out, truncated }
}

fn backtrack(
    g: &Graph,
    order: &[VertexId],
    mut idx: usize,
    covered: &mut [bool],
    chosen: &mut Vec<EdgeId>,
    out: &mut Vec<Matching>,
    limit: usize,
) {
    while idx < order.len() && covered[order[idx]] {
        idx += 1;
    }
    if idx == order.len() {
        out.push(Matching::from_trusted(EdgeSet::new(chosen.iter().copied())));
        return;
    }
    let v = order[idx];
    covered[v] = true;
    let mut options: Vec<(EdgeId, VertexId)> = g.neighbors(v).map(|(w, e)| (e, w)).collect();
    options.sort_unstable();
    for (e, w) in options {
        if covered[w] {
            continue;
        }
        covered[w] = true;
        chosen.push(e);
        backtrack(g, order, idx + 1, covered, chosen, out, limit);
        chosen.pop();
        covered[w] = false;
        if out.len() >= limit {
            break;
        }
    }
    covered[v] = false;
}

/// Verdict of the pendant stripping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionVerdict {
    /// Stripping stopped with no pendant vertex left.
    Stable,
    /// A vertex lost all its edges, so the graph has no perfect matching.
    NoPerfectMatching { isolated: VertexId },
}

/// Record of repeatedly deleting a pendant edge together with both ends.
#[derive(Clone, Debug)]
pub struct KotzigReduction {
    /// Pendant edges in removal order. Any pendant vertex may be taken at each
    /// step; this implementation always takes the lowest id, so the order is
    /// implementation-defined while the set is not.
    pub forced: Vec<EdgeId>,
    /// What is left of the input graph.
    pub residual: Graph,
    /// Host graph induced by the deleted vertices.
    pub stripped: Graph,
    /// Host edges joining the residual to the stripped part.
    pub boundary: EdgeSet,
    pub verdict: ReductionVerdict,
}

impl KotzigReduction {
    pub fn residual_is_empty(&self) -> bool {
        self.residual.vertex_count() == 0
    }
}

/// Strips pendant edges from `g` until none is left (or a vertex becomes
/// isolated). The stripped part and the boundary are measured against the
/// host graph `g` was derived from, so deleted edge sets still count.
pub fn kotzig_reduce(g: &Graph) -> KotzigReduction {
    let mut residual = g.clone();
    let mut degree = vec![0usize; g.vertex_bound()];
    let mut heap = BinaryHeap::new();
    let mut forced = Vec::new();
    let mut removed = Vec::new();
    let mut verdict = ReductionVerdict::Stable;

    for v in g.vertices() {
        degree[v] = g.degree(v);
        match degree[v] {
            0 => {
                verdict = ReductionVerdict::NoPerfectMatching { isolated: v };
                break;
            }
            1 => heap.push(Reverse(v)),
            _ => {}
        }
    }

    if verdict == ReductionVerdict::Stable {
        'strip: while let Some(Reverse(v)) = heap.pop() {
            if !residual.has_vertex(v) || degree[v] != 1 {
                continue;
            }
            let (u, e) = residual.neighbors(v).next().expect("pendant vertex has an edge");
            forced.push(e);
            residual.set_vertex(v, false);
            residual.set_vertex(u, false);
            removed.push(v);
            removed.push(u);
            let touched: Vec<VertexId> = residual.host_neighbors(u).iter().map(|&(w, _)| w).collect();
            for w in touched {
                if !residual.has_vertex(w) {
                    continue;
                }
                degree[w] = residual.degree(w);
                match degree[w] {
                    0 => {
                        verdict = ReductionVerdict::NoPerfectMatching { isolated: w };
                        break 'strip;
                    }
                    1 => heap.push(Reverse(w)),
                    _ => {}
                }
            }
        }
    }

    let host = g.host_graph();
    let stripped = host.induced(removed.iter().copied());
    let boundary = EdgeSet::new(host.edges().filter_map(|(e, u, v)| {
        let (ru, rv) = (residual.has_vertex(u), residual.has_vertex(v));
        let (su, sv) = (stripped.has_vertex(u), stripped.has_vertex(v));
        ((ru && sv) || (rv && su)).then_some(e)
    }));
    KotzigReduction { forced, residual, stripped, boundary, verdict }
}

/// Returns the perfect matching of `g` when it is the only one.
///
/// Pendant stripping first; a non-empty residual is then given one perfect
/// matching `M`, and `M` is unique iff no `M`-alternating cycle exists.
pub fn has_unique_perfect_matching(g: &Graph) -> Option<Matching> {
    let red = kotzig_reduce(g);
    if red.verdict != ReductionVerdict::Stable {
        return None;
    }
    let mut edges = red.forced.clone();
    if !red.residual_is_empty() {
        let m = find_perfect_matching(&red.residual)?;
        if find_alternating_cycle(&red.residual, &m).is_some() {
            return None;
        }
        edges.extend(m);
    }
    Some(Matching::from_trusted(EdgeSet::new(edges)))
}

/// Convenience wrapper around [`has_unique_perfect_matching`].
pub fn is_uniquely_matchable(g: &Graph) -> bool {
    has_unique_perfect_matching(g).is_some()
}

/// Finds some perfect matching, branching on the uncovered vertex with the
/// fewest available partners.
pub fn find_perfect_matching(g: &Graph) -> Option<Vec<EdgeId>> {
    if g.vertex_count() % 2 == 1 {
        return None;
    }
    let mut covered = vec![false; g.vertex_bound()];
    for v in 0..g.vertex_bound() {
        covered[v] = !g.has_vertex(v);
    }
    let mut chosen = Vec::with_capacity(g.vertex_count() / 2);
    search_one(g, &mut covered, &mut chosen).then_some(chosen)
}

fn search_one(g: &Graph, covered: &mut [bool], chosen: &mut Vec<EdgeId>) -> bool {
    let mut best: Option<(usize, VertexId)> = None;
    for v in 0..covered.len() {
        if covered[v] {
            continue;
        }
        let free = g.neighbors(v).filter(|&(w, _)| !covered[w]).count();
        if free == 0 {
            return false;
        }
        if best.is_none_or(|(d, _)| free < d) {
            best = Some((free, v));
            if free == 1 {
                break;
            }
        }
    }
    let Some((_, v)) = best else {
        return true;
    };
    covered[v] = true;
    let options: Vec<(VertexId, EdgeId)> = g.neighbors(v).filter(|&(w, _)| !covered[w]).collect();
    for (w, e) in options {
        covered[w] = true;
        chosen.push(e);
        if search_one(g, covered, chosen) {
            return true;
        }
        chosen.pop();
        covered[w] = false;
    }
    covered[v] = false;
    false
}

/// Looks for a cycle alternating between `m` and non-`m` edges.
///
/// For each matched edge `e`, a perfect matching of `g - e` is searched; if
/// one exists, its symmetric difference with `m` contains an alternating
/// cycle through `e`, which is returned as an edge list.
pub fn find_alternating_cycle(g: &Graph, m: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let in_m = EdgeSet::new(m.iter().copied());
    for &e in in_m.iter() {
        let mut h = g.clone();
        h.set_edge(e, false);
        if let Some(other) = find_perfect_matching(&h) {
            let other = EdgeSet::new(other);
            return Some(trace_cycle(g, &in_m, &other, e));
        }
    }
    None
}

/// Follows the component of `a XOR b` that contains `start`.
fn trace_cycle(g: &Graph, a: &EdgeSet, b: &EdgeSet, start: EdgeId) -> Vec<EdgeId> {
    let mut cycle = vec![start];
    let [first, _] = g.endpoints(start);
    let mut at = g.other_end(start, first);
    let mut use_b = true;
    while at != first {
        let set = if use_b { b } else { a };
        let (next_v, next_e) = g
            .neighbors(at)
            .find(|&(_, e)| set.contains(e) && !(a.contains(e) && b.contains(e)))
            .expect("symmetric difference of two perfect matchings is a union of cycles");
        cycle.push(next_e);
        at = next_v;
        use_b = !use_b;
    }
    cycle
}

/// Cut edges of `g` via the low-link computation.
pub fn bridges(g: &Graph) -> EdgeSet {
    let n = g.vertex_bound();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter it, neighbour cursor)
        let mut stack: Vec<(VertexId, Option<EdgeId>, Vec<(VertexId, EdgeId)>)> = Vec::new();
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, None, g.neighbors(root).collect()));
        while let Some((v, parent_edge, pending)) = stack.last_mut() {
            let v = *v;
            let parent_edge = *parent_edge;
            if let Some((w, e)) = pending.pop() {
                if Some(e) == parent_edge {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), g.neighbors(w).collect()));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let (Some(e), Some((p, _, _))) = (parent_edge, stack.last()) {
                    let p = *p;
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(e);
                    }
                }
            }
        }
    }
    EdgeSet::new(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_perfect_matchings(&k2(), 10).matchings.len(), 1);
        assert_eq!(enumerate_perfect_matchings(&fixtures::cycle(6), 10).matchings.len(), 2);
        assert_eq!(enumerate_perfect_matchings(&fixtures::two_pentagons(), 10).matchings.len(), 1);
        assert!(enumerate_perfect_matchings(&fixtures::cycle(5), 10).matchings.is_empty());
    }

    #[test]
    fn enumeration_truncates() {
        let c6 = fixtures::cycle(6);
        let r = enumerate_perfect_matchings(&c6, 1);
        assert_eq!(r.matchings.len(), 1);
        assert!(r.truncated);
        let r = enumerate_perfect_matchings(&c6, 2);
        assert!(!r.truncated);
    }

    #[test]
    fn dodecahedron_has_36_perfect_matchings() {
        let f = fixtures::f20();
        let all = enumerate_perfect_matchings(f.graph(), 1000);
        assert_eq!(all.matchings.len(), 36);
        let mut distinct = all.matchings.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 36);
        assert!(all.matchings.iter().all(|m| m.is_perfect(f.graph())));
    }

    #[test]
    fn kotzig_on_path_and_cycle() {
        let r = kotzig_reduce(&fixtures::path(4));
        assert_eq!(r.forced, vec![0, 2]);
        assert!(r.residual_is_empty());
        assert_eq!(r.verdict, ReductionVerdict::Stable);

        let r = kotzig_reduce(&fixtures::cycle(6));
        assert!(r.forced.is_empty());
        assert_eq!(r.residual.vertex_count(), 6);
        assert!(r.boundary.is_empty());
    }

    #[test]
    fn kotzig_reports_isolation() {
        let r = kotzig_reduce(&fixtures::path(3));
        assert!(matches!(r.verdict, ReductionVerdict::NoPerfectMatching { .. }));
    }

    #[test]
    fn kotzig_on_marked_dodecahedron() {
        let f = fixtures::f20();
        let g = f.graph().without_edges(&fixtures::f20_marked());
        let r = kotzig_reduce(&g);
        assert_eq!(r.verdict, ReductionVerdict::Stable);
        assert!(r.residual_is_empty());
        assert_eq!(r.forced.len(), 10);
        assert_eq!(r.stripped.edge_count(), 30);
    }

    #[test]
    fn uniqueness_small_cases() {
        let m = has_unique_perfect_matching(&k2()).unwrap();
        assert_eq!(m.edges().as_slice(), &[0]);
        assert!(has_unique_perfect_matching(&fixtures::cycle(6)).is_none());
        let gadget = has_unique_perfect_matching(&fixtures::two_pentagons()).unwrap();
        assert!(gadget.edges().contains(10));
        for f in [fixtures::f20(), fixtures::f24(), fixtures::f26()] {
            assert!(has_unique_perfect_matching(f.graph()).is_none());
        }
    }

    #[test]
    fn alternating_cycle_is_alternating() {
        let c6 = fixtures::cycle(6);
        let m = vec![0, 2, 4];
        let cyc = find_alternating_cycle(&c6, &m).unwrap();
        assert_eq!(cyc.len(), 6);
        for (i, e) in cyc.iter().enumerate() {
            assert_eq!(m.contains(e), i % 2 == 0);
        }
    }

    #[test]
    fn bridges_small_cases() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(bridges(&star).as_slice(), &[0, 1, 2]);
        assert_eq!(bridges(&fixtures::two_pentagons()).as_slice(), &[10]);
        assert!(bridges(fixtures::f20().graph()).is_empty());
        assert_eq!(bridges(&fixtures::path(4)).len(), 3);
    }
}
