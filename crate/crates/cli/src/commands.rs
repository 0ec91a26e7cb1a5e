use std::fs;
use std::path::{Path, PathBuf};

use fullerene_af::error::ForcingError;
use fullerene_af::forcing::{is_anti_forcing, refute_size_of};
use fullerene_af::patchwork::{self, Synthesis, Walk};
use fullerene_af::verify::{self, Corpus};
use fullerene_af::{
    anti_forcing_number, construct_af4, cyclic_edge_connectivity, fixtures, forcing_number, generate_digraph,
    plane_isomorphic, validate_fullerene, CyclicConnectivity, FullereneGraph, PatchError, PlaneGraph, SearchOptions,
};

use crate::report::{CheckStatus, Exit, RunReport};

/// Reads a plane graph from a file or from `fixture:<name>`.
fn read_plane(path: &str) -> Result<PlaneGraph, String> {
    if let Some(name) = path.strip_prefix("fixture:") {
        return fixtures::by_name(name).map(|f| f.plane().clone()).ok_or_else(|| format!("unknown fixture {name}"));
    }
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    PlaneGraph::parse(&text).map_err(|e| format!("{path}: {e}"))
}

/// Reads and validates; invalid fullerenes are input errors here.
fn read_fullerene(path: &str) -> Result<FullereneGraph, String> {
    let plane = read_plane(path)?;
    validate_fullerene(&plane).map_err(|d| format!("{path}: not a fullerene: {d}"))
}

fn write(report: &mut RunReport, path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    report.artifact(path.to_path_buf());
    Ok(())
}

pub fn validate(echo: String, path: &str) -> RunReport {
    let mut r = RunReport::new(echo);
    let plane = match read_plane(path) {
        Ok(p) => p,
        Err(e) => return r.fail(Exit::Input, e),
    };
    match validate_fullerene(&plane) {
        Ok(g) => {
            r.line(format!(
                "fullerene: {} vertices, {} edges, {} faces",
                g.vertex_count(),
                g.edge_count(),
                g.faces().len()
            ));
            r.check("fullerene", CheckStatus::Pass);
        }
        Err(d) => {
            r.line(format!("diagnostic: {d}"));
            r.check("fullerene", CheckStatus::Fail);
        }
    }
    r
}

fn budget_exit(r: RunReport, e: ForcingError) -> RunReport {
    match e {
        ForcingError::AntiForcingBudget { .. } | ForcingError::ForcingBudget { .. } => r.fail(Exit::Budget, e.to_string()),
        other => r.fail(Exit::Domain, other.to_string()),
    }
}

pub fn af(echo: String, path: &str, budget: usize, jobs: usize) -> RunReport {
    let mut r = RunReport::new(echo);
    let g = match read_fullerene(path) {
        Ok(g) => g,
        Err(e) => return r.fail(Exit::Input, e),
    };
    match anti_forcing_number(&g, SearchOptions::anti_forcing().with_budget(budget).with_jobs(jobs)) {
        Ok(cert) => {
            r.line(format!("af = {}", cert.number));
            r.line(cert.to_string());
            r
        }
        Err(e) => budget_exit(r, e),
    }
}

pub fn forcing(echo: String, path: &str, budget: usize, jobs: usize) -> RunReport {
    let mut r = RunReport::new(echo);
    let g = match read_fullerene(path) {
        Ok(g) => g,
        Err(e) => return r.fail(Exit::Input, e),
    };
    match forcing_number(&g, SearchOptions::forcing().with_budget(budget).with_jobs(jobs)) {
        Ok(cert) => {
            r.line(format!("f = {}", cert.number));
            r.line(cert.to_string());
            r
        }
        Err(e) => budget_exit(r, e),
    }
}

pub fn cec(echo: String, path: &str) -> RunReport {
    let mut r = RunReport::new(echo);
    let g = match read_fullerene(path) {
        Ok(g) => g,
        Err(e) => return r.fail(Exit::Input, e),
    };
    match cyclic_edge_connectivity(&g) {
        CyclicConnectivity::Five { witness } => {
            r.line("cyclic edge connectivity = 5");
            r.line(format!("witness cut: {witness}"));
            r.check("cyclic edge connectivity 5", CheckStatus::Pass);
        }
        CyclicConnectivity::Smaller { value, cut } => {
            r.line(format!("cyclic edge connectivity = {value}"));
            r.line(format!("cyclic cut: {cut}"));
            r.check("cyclic edge connectivity 5", CheckStatus::Fail);
        }
    }
    r
}

pub fn digraph(echo: String, dot: Option<PathBuf>, dump: Option<PathBuf>) -> RunReport {
    let mut r = RunReport::new(echo);
    let d = generate_digraph();
    let (gen_nodes, gen_arcs) = d.generated_counts();
    r.line(format!("{} nodes, {} arcs", d.node_count(), d.arc_count()));
    r.line(format!("before pruning: {gen_nodes} nodes, {gen_arcs} arcs"));
    let loops = d.loops();
    r.line(format!(
        "loops: {} ({})",
        loops.len(),
        loops.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" ")
    ));
    r.line(format!("symmetric pairs: {}", d.symmetric_pairs().len()));
    r.line(format!("productive seeds: {:?}", d.productive_seeds()));
    r.line(format!("dead seeds: {:?}", d.dead_seeds()));
    for (path, text) in [(dot, d.to_dot()), (dump, d.dump())] {
        if let Some(p) = path {
            if let Err(e) = write(&mut r, &p, &text) {
                return r.fail(Exit::Input, e);
            }
        }
    }
    r
}

/// Re-checks af = 4 by search when the graph is small enough.
fn report_synthesis(r: &mut RunReport, s: &Synthesis, out: Option<PathBuf>, verify_limit: usize, jobs: usize) -> Result<(), String> {
    let n = s.graph.vertex_count();
    r.line(format!("vertices: {n}"));
    r.line(format!("walk: {}", s.walk));
    r.line(format!("marked edges: {}", s.marked));
    for name in verify::FIXTURE_NAMES {
        let f = fixtures::by_name(name).unwrap();
        if f.vertex_count() == n && plane_isomorphic(f.plane(), s.graph.plane()) {
            r.line(format!("isomorphic to fixture {name}"));
        }
    }
    if n <= verify_limit {
        let ok = is_anti_forcing(s.graph.graph(), &s.marked) && refute_size_of(s.graph.graph(), 3, jobs);
        r.line(if ok { "af = 4 (verified)".to_string() } else { "af != 4".to_string() });
        r.check("af = 4", if ok { CheckStatus::Pass } else { CheckStatus::Fail });
    } else {
        r.line(format!("af = 4 by construction; search skipped above {verify_limit} vertices"));
        r.check("af = 4", CheckStatus::Skip);
    }
    if let Some(p) = out {
        let text = s.graph.to_text(Some(&format!("walk {} marked {}", s.walk, s.marked)));
        write(r, &p, &text)?;
    }
    Ok(())
}

fn patch_exit(r: RunReport, e: PatchError) -> RunReport {
    match e {
        PatchError::InvalidOrder { .. } => r.fail(
            Exit::Domain,
            format!("{e}; no fullerene has 22 vertices and none on 26 vertices has anti-forcing number 4"),
        ),
        PatchError::BadTag(_) | PatchError::BadLiteral(_) | PatchError::UnknownSeed(_) => r.fail(Exit::Input, e.to_string()),
        other => r.fail(Exit::Domain, other.to_string()),
    }
}

pub fn construct(echo: String, n: usize, out: Option<PathBuf>, verify_limit: usize, jobs: usize) -> RunReport {
    let mut r = RunReport::new(echo);
    let s = match construct_af4(n) {
        Ok(s) => s,
        Err(e) => return patch_exit(r, e),
    };
    match report_synthesis(&mut r, &s, out, verify_limit, jobs) {
        Ok(()) => r,
        Err(e) => r.fail(Exit::Input, e),
    }
}

fn parse_seed(s: &str) -> Option<usize> {
    s.strip_prefix("Fs").or_else(|| s.strip_prefix("L")).unwrap_or(s).parse().ok()
}

pub fn synthesize(echo: String, seed: &str, walk: &Path, out: Option<PathBuf>, verify_limit: usize, jobs: usize) -> RunReport {
    let mut r = RunReport::new(echo);
    let Some(i) = parse_seed(seed) else {
        return r.fail(Exit::Input, format!("bad seed name {seed:?}"));
    };
    let text = match fs::read_to_string(walk) {
        Ok(t) => t,
        Err(e) => return r.fail(Exit::Input, format!("{}: {e}", walk.display())),
    };
    let w = match Walk::parse(i, &text) {
        Ok(w) => w,
        Err(e) => return patch_exit(r, e),
    };
    let s = match patchwork::synthesize(&w) {
        Ok(s) => s,
        Err(e) => return patch_exit(r, e),
    };
    match report_synthesis(&mut r, &s, out, verify_limit, jobs) {
        Ok(()) => r,
        Err(e) => r.fail(Exit::Input, e),
    }
}

pub fn verify_all(echo: String, fixture_dir: Option<PathBuf>, timings: bool, jobs: usize) -> RunReport {
    let mut r = RunReport::new(echo);
    let corpus = match &fixture_dir {
        Some(d) => Corpus::from_dir(d),
        None => Corpus::embedded(),
    };
    for c in verify::run_all(&corpus, jobs) {
        r.line(c.line(timings));
        let status = if c.passed() { CheckStatus::Pass } else { CheckStatus::Fail };
        r.check(format!("criterion {}", c.id), status);
    }
    r
}

pub fn export_fixtures(echo: String, dir: &Path) -> RunReport {
    let mut r = RunReport::new(echo);
    if let Err(e) = fs::create_dir_all(dir) {
        return r.fail(Exit::Input, format!("{}: {e}", dir.display()));
    }
    let marked = [fixtures::f20_marked(), fixtures::f24_marked(), fixtures::f26_marked()];
    let files = verify::FIXTURE_NAMES.iter().zip(marked).map(|(name, m)| {
        let g = fixtures::by_name(name).unwrap();
        (format!("{name}.graph"), g.to_text(Some(&format!("{name} marked {m}"))))
    });
    let walk = (String::from("f20.walk"), format!("# seed Fs15\n{}", patchwork::f20_walk().to_text()));
    for (file, text) in files.chain([walk]) {
        if let Err(e) = write(&mut r, &dir.join(file), &text) {
            return r.fail(Exit::Input, e);
        }
    }
    r
}
