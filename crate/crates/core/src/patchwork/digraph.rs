//! The distance-array digraph: worklist closure of the four operations from
//! the fifteen initial arrays, pruned to the nodes that reach `[]`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use super::array::{DistanceArray, OpTag};

/// Initial arrays L1..L15 as printed.
pub const INITIAL_ARRAYS: [&str; 15] = [
    "[12222216]",
    "[13222152]",
    "[12322143]",
    "[14221422]",
    "[12421323]",
    "[13321332]",
    "[13215123]",
    "[14123214]",
    "[14124123]",
    "[32151322]",
    "[41241322]",
    "[41232313]",
    "[32142313]",
    "[25122322]",
    "[24213322]",
];

/// Default cap on walk length for walk searches.
pub const WALK_LENGTH_CAP: usize = 40;

/// `L_i` in canonical form, `i` in 1..=15.
pub fn initial_array(i: usize) -> Option<DistanceArray> {
    INITIAL_ARRAYS.get(i.checked_sub(1)?).map(|s| s.parse().expect("built-in literal"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrayDigraph {
    nodes: BTreeSet<DistanceArray>,
    /// Arcs keyed by endpoints; several tags may realize the same arc.
    arcs: BTreeMap<(DistanceArray, DistanceArray), Vec<OpTag>>,
    initial: Vec<DistanceArray>,
    generated_nodes: usize,
    generated_arcs: usize,
}

/// Runs the closure and the pruning step.
pub fn generate_digraph() -> ArrayDigraph {
    let initial: Vec<DistanceArray> = (1..=15).map(|i| initial_array(i).unwrap()).collect();
    let mut nodes: BTreeSet<DistanceArray> = initial.iter().cloned().collect();
    let mut arcs: BTreeMap<(DistanceArray, DistanceArray), Vec<OpTag>> = BTreeMap::new();
    let mut work: VecDeque<DistanceArray> = nodes.iter().cloned().collect();
    while let Some(s) = work.pop_front() {
        for (tag, t) in s.successors() {
            arcs.entry((s.clone(), t.clone())).or_default().push(tag);
            if nodes.insert(t.clone()) {
                work.push_back(t);
            }
        }
    }
    let generated_nodes = nodes.len();
    let generated_arcs = arcs.len();

    let mut preds: BTreeMap<&DistanceArray, Vec<&DistanceArray>> = BTreeMap::new();
    for (s, t) in arcs.keys() {
        preds.entry(t).or_default().push(s);
    }
    let terminal = DistanceArray::empty();
    let mut good: BTreeSet<DistanceArray> = BTreeSet::new();
    let mut stack = Vec::new();
    if nodes.contains(&terminal) {
        good.insert(terminal.clone());
        stack.push(terminal);
    }
    while let Some(t) = stack.pop() {
        for &s in preds.get(&t).into_iter().flatten() {
            if good.insert(s.clone()) {
                stack.push(s.clone());
            }
        }
    }
    arcs.retain(|(s, t), _| good.contains(s) && good.contains(t));
    ArrayDigraph { nodes: good, arcs, initial, generated_nodes, generated_arcs }
}

impl ArrayDigraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Sizes before pruning.
    pub fn generated_counts(&self) -> (usize, usize) {
        (self.generated_nodes, self.generated_arcs)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &DistanceArray> {
        self.nodes.iter()
    }

    pub fn contains(&self, a: &DistanceArray) -> bool {
        self.nodes.contains(a)
    }

    pub fn arcs(&self) -> impl Iterator<Item = (&DistanceArray, &DistanceArray, &[OpTag])> {
        self.arcs.iter().map(|((s, t), tags)| (s, t, tags.as_slice()))
    }

    pub fn tags(&self, from: &DistanceArray, to: &DistanceArray) -> Option<&[OpTag]> {
        self.arcs.get(&(from.clone(), to.clone())).map(Vec::as_slice)
    }

    pub fn initial(&self) -> &[DistanceArray] {
        &self.initial
    }

    pub fn successors<'a>(&'a self, a: &'a DistanceArray) -> impl Iterator<Item = &'a DistanceArray> + 'a {
        self.arcs.keys().filter(move |(s, _)| s == a).map(|(_, t)| t)
    }

    pub fn loops(&self) -> Vec<&DistanceArray> {
        self.arcs.keys().filter(|(s, t)| s == t).map(|(s, _)| s).collect()
    }

    /// Pairs of distinct nodes joined by arcs in both directions.
    pub fn symmetric_pairs(&self) -> Vec<(&DistanceArray, &DistanceArray)> {
        self.arcs
            .keys()
            .filter(|(s, t)| s < t && self.arcs.contains_key(&(t.clone(), s.clone())))
            .map(|(s, t)| (s, t))
            .collect()
    }

    /// Indices `i` of the initial arrays `L_i` removed by pruning.
    pub fn dead_seeds(&self) -> Vec<usize> {
        (1..=15).filter(|&i| !self.contains(&self.initial[i - 1])).collect()
    }

    pub fn productive_seeds(&self) -> Vec<usize> {
        (1..=15).filter(|&i| self.contains(&self.initial[i - 1])).collect()
    }

    /// Nodes reachable from any of `sources`.
    pub fn reachable_from(&self, sources: &[DistanceArray]) -> BTreeSet<DistanceArray> {
        let mut seen: BTreeSet<DistanceArray> = BTreeSet::new();
        let mut stack: Vec<DistanceArray> = sources.iter().filter(|s| self.contains(s)).cloned().collect();
        seen.extend(stack.iter().cloned());
        while let Some(x) = stack.pop() {
            for y in self.successors(&x) {
                if seen.insert(y.clone()) {
                    stack.push(y.clone());
                }
            }
        }
        seen
    }

    /// Two-colouring of the underlying undirected graph on `nodes`, if one
    /// exists. A loop makes it fail.
    pub fn two_colouring(&self, nodes: &BTreeSet<DistanceArray>) -> Option<BTreeMap<DistanceArray, bool>> {
        let mut adj: BTreeMap<&DistanceArray, Vec<&DistanceArray>> = BTreeMap::new();
        for (s, t) in self.arcs.keys() {
            if nodes.contains(s) && nodes.contains(t) {
                adj.entry(s).or_default().push(t);
                adj.entry(t).or_default().push(s);
            }
        }
        let mut colour: BTreeMap<DistanceArray, bool> = BTreeMap::new();
        for start in nodes {
            if colour.contains_key(start) {
                continue;
            }
            colour.insert(start.clone(), false);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let cx = colour[x];
                for &y in adj.get(x).into_iter().flatten() {
                    match colour.get(y) {
                        Some(&cy) if cy == cx => return None,
                        Some(_) => {}
                        None => {
                            colour.insert(y.clone(), !cx);
                            stack.push(y);
                        }
                    }
                }
            }
        }
        Some(colour)
    }

    /// Every walk from `from` to `[]` with at most `max_len` arcs, as node
    /// sequences, shortest first then lexicographic.
    pub fn walks_to_empty(&self, from: &DistanceArray, max_len: usize) -> Vec<Vec<DistanceArray>> {
        self.walks_between(from, &DistanceArray::empty(), max_len)
    }

    pub fn walks_between(&self, from: &DistanceArray, to: &DistanceArray, max_len: usize) -> Vec<Vec<DistanceArray>> {
        let mut out = Vec::new();
        if !self.contains(from) {
            return out;
        }
        let mut queue = VecDeque::from([vec![from.clone()]]);
        while let Some(walk) = queue.pop_front() {
            let last = walk.last().unwrap();
            if last == to {
                out.push(walk.clone());
                if to.is_empty() {
                    continue;
                }
            }
            if walk.len() > max_len {
                continue;
            }
            for next in self.successors(last) {
                let mut w = walk.clone();
                w.push(next.clone());
                queue.push_back(w);
            }
        }
        out
    }

    /// Paths without repeated nodes from `from` to `to`.
    pub fn simple_paths(&self, from: &DistanceArray, to: &DistanceArray) -> Vec<Vec<DistanceArray>> {
        fn go(
            d: &ArrayDigraph,
            path: &mut Vec<DistanceArray>,
            to: &DistanceArray,
            out: &mut Vec<Vec<DistanceArray>>,
        ) {
            let last = path.last().unwrap().clone();
            if &last == to {
                out.push(path.clone());
                return;
            }
            for next in d.successors(&last) {
                if !path.contains(next) {
                    path.push(next.clone());
                    go(d, path, to, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        if self.contains(from) {
            go(self, &mut vec![from.clone()], to, &mut out);
        }
        out
    }

    /// Length of a shortest walk from `from` to `[]`, searching up to `cap`.
    pub fn shortest_walk_len(&self, from: &DistanceArray, cap: usize) -> Option<usize> {
        let mut dist: BTreeMap<DistanceArray, usize> = BTreeMap::from([(from.clone(), 0)]);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if x.is_empty() {
                return Some(d);
            }
            if d >= cap {
                continue;
            }
            for y in self.successors(&x) {
                if !dist.contains_key(y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y.clone());
                }
            }
        }
        None
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph D {\n");
        for n in &self.nodes {
            let _ = writeln!(s, "  \"{n}\";");
        }
        for ((a, b), tags) in &self.arcs {
            let label = tags.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",");
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\" [label=\"{label}\"];");
        }
        s.push_str("}\n");
        s
    }

    /// One line per node: `node -> succ (tags) ...`, in canonical order.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# nodes {} arcs {}", self.node_count(), self.arc_count());
        for n in &self.nodes {
            let _ = write!(s, "{n}:");
            for ((a, b), tags) in self.arcs.range((n.clone(), DistanceArray::empty())..) {
                if a != n {
                    break;
                }
                let label = tags.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",");
                let _ = write!(s, " {b} ({label})");
            }
            s.push('\n');
        }
        s
    }
}
