//! The acceptance checks, runnable from tests and from the command line.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cuts::{cyclic_edge_connectivity, CyclicConnectivity};
use crate::fixtures;
use crate::forcing::{
    all_anti_forcing_sets, anti_forcing_number, classify_antiforcing_shape, forcing_number, refute_size_of,
    residual_structure_check, AntiForcingShape, SearchOptions,
};
use crate::graph::{EdgeSet, Graph};
use crate::iso::plane_isomorphic;
use crate::matching::{enumerate_perfect_matchings, has_unique_perfect_matching};
use crate::patchwork::digraph::initial_array;
use crate::patchwork::{construct_af4, f20_walk, f24_walks, f26_parity_check, generate_digraph, synthesize};
use crate::plane::{validate_fullerene, FullereneGraph, PlaneGraph};

pub const FIXTURE_NAMES: [&str; 3] = ["f20", "f24", "f26"];

/// The three fixtures, each either valid or carrying the reason it is not.
#[derive(Clone, Debug)]
pub struct Corpus {
    entries: Vec<(&'static str, Result<FullereneGraph, String>)>,
}

impl Corpus {
    pub fn embedded() -> Self {
        let entries = FIXTURE_NAMES.iter().map(|&n| (n, Ok(fixtures::by_name(n).unwrap()))).collect();
        Self { entries }
    }

    /// Reads `f20.graph`, `f24.graph` and `f26.graph` from `dir`.
    pub fn from_dir(dir: &Path) -> Self {
        let entries = FIXTURE_NAMES
            .iter()
            .map(|&n| {
                let path = dir.join(format!("{n}.graph"));
                let loaded = std::fs::read_to_string(&path)
                    .map_err(|e| format!("{}: {e}", path.display()))
                    .and_then(|t| PlaneGraph::parse(&t).map_err(|e| format!("{}: {e}", path.display())))
                    .and_then(|p| validate_fullerene(&p).map_err(|e| format!("{}: {e}", path.display())));
                (n, loaded)
            })
            .collect();
        Self { entries }
    }

    pub fn get(&self, name: &str) -> Result<&FullereneGraph, String> {
        match self.entries.iter().find(|(n, _)| *n == name) {
            Some((_, Ok(g))) => Ok(g),
            Some((_, Err(e))) => Err(format!("fixture {name} invalid: {e}")),
            None => Err(format!("no fixture {name}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    /// 0 is fixture validation, 1..=10 the acceptance criteria.
    pub id: usize,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn line(&self, timings: bool) -> String {
        let mut s = format!("criterion {:>2} {}: {}: {}", self.id, self.status, self.title, self.detail);
        if timings {
            s.push_str(&format!(" ({:.2}s)", self.elapsed.as_secs_f64()));
        }
        s
    }
}

pub const TITLES: [&str; 11] = [
    "fixtures validate",
    "af(F20) = 4 and af(F24) = 4",
    "af(F26) = 5",
    "lower bounds af >= 4 and f >= 3",
    "digraph D statistics",
    "walk synthesis of F20 and F24",
    "family construction for n in {20, 24, 28, 30, 32}",
    "shape and residual of all minimum anti-forcing sets",
    "unique-matching test agrees with enumeration",
    "parity restriction for 26 vertices",
    "cyclic edge connectivity 5",
];

const LIMITS: [Option<u64>; 11] =
    [None, Some(20), Some(60), None, Some(1), None, Some(300), None, None, None, None];

/// Runs check `id` (0..=10).
pub fn run_check(id: usize, corpus: &Corpus, jobs: usize) -> CheckResult {
    let start = Instant::now();
    let outcome = match id {
        0 => check_fixtures(corpus),
        1 => check_af_four(corpus, jobs),
        2 => check_af_f26(corpus, jobs),
        3 => check_lower_bounds(corpus, jobs),
        4 => check_digraph(),
        5 => check_walks(corpus),
        6 => check_family(jobs),
        7 => check_structure(corpus),
        8 => check_oracle_equivalence(corpus),
        9 => check_parity(),
        10 => check_cyclic_connectivity(corpus),
        _ => Err(format!("no check {id}")),
    };
    let elapsed = start.elapsed();
    let limit = LIMITS.get(id).copied().flatten().map(Duration::from_secs);
    let (mut status, mut detail) = match outcome {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    };
    if let Some(l) = limit {
        if elapsed > l && status == Status::Pass {
            status = Status::Fail;
            detail = format!("{detail}; exceeded {}s", l.as_secs());
        }
    }
    CheckResult { id, title: TITLES.get(id).copied().unwrap_or("unknown"), status, detail, elapsed, limit }
}

pub fn run_all(corpus: &Corpus, jobs: usize) -> Vec<CheckResult> {
    (0..=10).map(|id| run_check(id, corpus, jobs)).collect()
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unique_by_enumeration(g: &Graph, s: &EdgeSet) -> bool {
    let pms = enumerate_perfect_matchings(&g.without_edges(s), 2);
    pms.matchings.len() == 1 && !pms.truncated
}

fn check_fixtures(corpus: &Corpus) -> Outcome {
    let mut parts = Vec::new();
    for name in FIXTURE_NAMES {
        let g = corpus.get(name)?;
        parts.push(format!("{name} {} vertices", g.vertex_count()));
    }
    Ok(parts.join(", "))
}

fn check_af_four(corpus: &Corpus, jobs: usize) -> Outcome {
    let mut parts = Vec::new();
    for name in ["f20", "f24"] {
        let g = corpus.get(name)?;
        let cert = anti_forcing_number(g, SearchOptions::anti_forcing().with_jobs(jobs)).map_err(|e| e.to_string())?;
        ensure(cert.number == 4, || format!("af({name}) = {}", cert.number))?;
        ensure(unique_by_enumeration(g.graph(), &cert.witness), || {
            format!("{name} witness {} fails enumeration", cert.witness)
        })?;
        parts.push(format!("af({name}) = 4 witness {}", cert.witness));
    }
    Ok(parts.join("; "))
}

fn check_af_f26(corpus: &Corpus, jobs: usize) -> Outcome {
    let g = corpus.get("f26")?;
    ensure(refute_size_of(g.graph(), 4, jobs), || "f26 has an anti-forcing set of size 4".into())?;
    let cert = anti_forcing_number(g, SearchOptions::anti_forcing().with_jobs(jobs)).map_err(|e| e.to_string())?;
    ensure(cert.number == 5, || format!("af(f26) = {}", cert.number))?;
    ensure(unique_by_enumeration(g.graph(), &cert.witness), || "witness fails enumeration".into())?;
    Ok(format!("no 4-set; 5-witness {}", cert.witness))
}

fn check_lower_bounds(corpus: &Corpus, jobs: usize) -> Outcome {
    let mut graphs = Vec::new();
    for name in FIXTURE_NAMES {
        graphs.push((name.to_string(), corpus.get(name)?.clone()));
    }
    for n in [28, 30] {
        let s = construct_af4(n).map_err(|e| e.to_string())?;
        graphs.push((format!("constructed {n}"), s.graph));
    }
    for (name, g) in &graphs {
        ensure(refute_size_of(g.graph(), 3, jobs), || format!("{name} has an anti-forcing set of size 3"))?;
    }
    let mut forcing = Vec::new();
    let mut low = Vec::new();
    for name in ["f20", "f24"] {
        let cert = forcing_number(corpus.get(name)?, SearchOptions::forcing()).map_err(|e| e.to_string())?;
        forcing.push(format!("f({name}) = {}", cert.number));
        if cert.number < 3 {
            low.push(format!("f({name}) = {} with matching {} forced by {}", cert.number, cert.matching.edges(), cert.witness));
        }
    }
    let summary = format!("no 3-set in {} graphs; {}", graphs.len(), forcing.join(", "));
    if low.is_empty() {
        Ok(summary)
    } else {
        Err(format!("{summary}; below 3: {}", low.join("; ")))
    }
}

fn check_digraph() -> Outcome {
    let d = generate_digraph();
    let loops = d.loops();
    let pairs = d.symmetric_pairs().len();
    let dead = d.dead_seeds();
    let summary = format!(
        "{} nodes, {} arcs, {} loop(s) at {}, {} symmetric pairs, dead seeds {:?}",
        d.node_count(),
        d.arc_count(),
        loops.len(),
        loops.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "),
        pairs,
        dead
    );
    let ok = d.node_count() == 52
        && d.arc_count() == 72
        && loops.len() == 1
        && pairs == 3
        && dead == [1, 2, 3, 6, 7, 8, 10, 12];
    if ok {
        Ok(summary)
    } else {
        Err(format!("{summary}; expected 52 nodes, 72 arcs, 1 loop, 3 pairs"))
    }
}

fn check_walks(corpus: &Corpus) -> Outcome {
    let f20 = corpus.get("f20")?;
    let f24 = corpus.get("f24")?;
    let s = synthesize(&f20_walk()).map_err(|e| e.to_string())?;
    ensure(plane_isomorphic(s.graph.plane(), f20.plane()), || "F20 walk is not the dodecahedron".into())?;
    let d = generate_digraph();
    let walks = f24_walks(&d);
    ensure(!walks.is_empty(), || "no walk reaches [33133323]".into())?;
    for w in &walks {
        let s = synthesize(w).map_err(|e| format!("{w}: {e}"))?;
        ensure(s.graph.vertex_count() == 24, || format!("{w}: {} vertices", s.graph.vertex_count()))?;
        ensure(plane_isomorphic(s.graph.plane(), f24.plane()), || format!("{w}: not isomorphic to F24"))?;
    }
    let seeds: BTreeSet<usize> = walks.iter().map(|w| w.seed).collect();
    Ok(format!("F20 walk gives the dodecahedron; {} walks from seeds {seeds:?} give F24", walks.len()))
}

fn check_family(jobs: usize) -> Outcome {
    let mut parts = Vec::new();
    for n in [20, 24, 28, 30, 32] {
        let s = construct_af4(n).map_err(|e| format!("n = {n}: {e}"))?;
        let g = s.graph.graph();
        ensure(s.graph.vertex_count() == n, || format!("n = {n}: got {} vertices", s.graph.vertex_count()))?;
        ensure(refute_size_of(g, 3, jobs), || format!("n = {n}: anti-forcing set of size 3 exists"))?;
        ensure(unique_by_enumeration(g, &s.marked), || format!("n = {n}: marked set fails enumeration"))?;
        parts.push(n.to_string());
    }
    Ok(format!("af = 4 verified for n = {}", parts.join(", ")))
}

fn check_structure(corpus: &Corpus) -> Outcome {
    let mut parts = Vec::new();
    let mut violations = Vec::new();
    for name in ["f20", "f24"] {
        let g = corpus.get(name)?;
        let sets = all_anti_forcing_sets(g.graph(), 4);
        ensure(!sets.is_empty(), || format!("{name} has no anti-forcing set of size 4"))?;
        let (mut p2, mut p3, mut other) = (0, 0, Vec::new());
        let (mut empty, mut gadget, mut bad_residual) = (0, 0, Vec::new());
        for s in &sets {
            match classify_antiforcing_shape(g, s).map_err(|e| format!("{name} {s}: {e}"))? {
                AntiForcingShape::PathTwoPlusTwoEdges => p2 += 1,
                AntiForcingShape::PathThreePlusEdge => p3 += 1,
                AntiForcingShape::Other => other.push(s.to_string()),
            }
            match residual_structure_check(g, s) {
                Ok(crate::forcing::ResidualReport::Empty { .. }) => empty += 1,
                Ok(crate::forcing::ResidualReport::TwoPentagons { .. }) => gadget += 1,
                Err(e) => bad_residual.push(format!("{s} ({e})")),
            }
        }
        parts.push(format!(
            "{name}: {} sets, {p2} P2+2K2, {p3} P3+K2, {} other; {empty} empty residual, {gadget} two-pentagon residual, {} other residual",
            sets.len(),
            other.len(),
            bad_residual.len()
        ));
        if let Some(first) = other.first() {
            violations.push(format!("{name} shape other, first {first}"));
        }
        if let Some(first) = bad_residual.first() {
            violations.push(format!("{name} residual violation, first {first}"));
        }
    }
    if violations.is_empty() {
        Ok(parts.join("; "))
    } else {
        Err(format!("{}; {}", parts.join("; "), violations.join("; ")))
    }
}

/// Number of random subgraphs compared in the oracle check.
pub const ORACLE_SAMPLES: usize = 600;

fn check_oracle_equivalence(corpus: &Corpus) -> Outcome {
    let mut graphs = Vec::new();
    for name in FIXTURE_NAMES {
        graphs.push(corpus.get(name)?.graph().clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut unique = 0;
    for i in 0..ORACLE_SAMPLES {
        let g = random_subgraph(&graphs[i % graphs.len()], &mut rng);
        let fast = has_unique_perfect_matching(&g);
        let pms = enumerate_perfect_matchings(&g, 2);
        let slow = pms.matchings.len() == 1 && !pms.truncated;
        ensure(fast.is_some() == slow, || format!("sample {i} disagrees: fast {} slow {slow}", fast.is_some()))?;
        if let Some(m) = fast {
            ensure(m.edges() == pms.matchings[0].edges(), || format!("sample {i}: different matchings"))?;
            unique += 1;
        }
    }
    Ok(format!("{ORACLE_SAMPLES} subgraphs agree ({unique} uniquely matchable)"))
}

/// Deletes a random subset of edges and, sometimes, a few vertices.
pub fn random_subgraph(g: &Graph, rng: &mut impl Rng) -> Graph {
    let p: f64 = rng.gen_range(0.05..0.45);
    let drop = EdgeSet::new(g.edge_ids().into_iter().filter(|_| rng.gen_bool(p)));
    let mut h = g.without_edges(&drop);
    if rng.gen_bool(0.3) {
        let k = 2 * rng.gen_range(1..=2);
        let verts: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.vertex_bound())).collect();
        h = h.without_vertices(verts);
    }
    h
}

fn check_parity() -> Outcome {
    let d = generate_digraph();
    let r = f26_parity_check(&d, 12);
    let summary = format!(
        "restriction has {} nodes, bipartite {}, length-10 walks from {:?}, shortest from L15 {:?}, {} walks give orders {:?}",
        r.restricted_nodes, r.bipartite, r.length_ten_from, r.shortest_from_l15, r.walks_synthesized, r.vertex_counts
    );
    let l15 = initial_array(15).unwrap();
    ensure(d.contains(&l15), || "L15 pruned".into())?;
    if r.passed() {
        Ok(summary)
    } else {
        Err(format!("{summary}; failures {:?}", r.failures))
    }
}

fn check_cyclic_connectivity(corpus: &Corpus) -> Outcome {
    let mut parts = Vec::new();
    for name in FIXTURE_NAMES {
        match cyclic_edge_connectivity(corpus.get(name)?) {
            CyclicConnectivity::Five { witness } => parts.push(format!("{name} 5 via {witness}")),
            CyclicConnectivity::Smaller { value, cut } => return Err(format!("{name} has cyclic cut {cut} of size {value}")),
        }
    }
    Ok(parts.join(", "))
}
