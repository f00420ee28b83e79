//! The find-witness engine: orchestrates the chain route, the type-tree
//! extraction route, homogeneous-set extraction, and the detector fallback
//! into one traced search, plus corpus experiments and oracle cross-checks.

use crate::chains::{
    brute_force_is_prime, chain_exists, chain_radius, find_any_chain, is_prime, module_closure,
    shrink_to_prime_chain,
};
use crate::configs::{
    detect_any, find_induced, ladder_index, oracle_find_induced, verify_witness, ConfigKind,
    Search, Witness, DETECT_ORDER,
};
use crate::corpus::{enumerate_graphs, is_connected};
use crate::error::{Error, Result};
use crate::graph::{parse_auto, Graph, VertexSet};
use crate::ramsey::{ramsey_upper, ColorSizes};
use crate::typetree::{
    arrange_full, extract_config_from_tree, extract_homogeneous, tree_rank_witness,
    verify_rank_height, SelectionPolicy,
};
use serde::Serialize;
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    ChainRoute,
    TreeExtractionRoute,
    HomogeneousSetRoute,
    DetectorFallback,
    NoneFound,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineResult {
    pub witness: Option<Witness>,
    pub route: Route,
    pub trace: Vec<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    /// target configuration height
    pub n: usize,
    pub chain_budget: u64,
    pub tree_budget: u64,
    pub detector_budget: u64,
    pub seed: u64,
    /// cross-check every produced witness against the tuple oracle
    /// (only feasible at small order)
    pub oracle_mode: bool,
}

impl RunConfig {
    pub fn new(n: usize) -> Result<RunConfig> {
        if n < 2 {
            return Err(Error::Input(format!("target height must be >= 2, got {n}")));
        }
        Ok(RunConfig {
            n,
            chain_budget: 2_000_000,
            tree_budget: 2_000_000,
            detector_budget: 20_000_000,
            seed: 0,
            oracle_mode: false,
        })
    }
}

/// The terminal families searched after a HalfSplitGraph / InducedMatching
/// outcome of the tree extraction (stand-ins for the constructions whose
/// proofs are external): apex variants, subdivided star, line graph of
/// K_{2,n}, and spiders.
const TERMINAL_FAMILIES: [ConfigKind; 6] = [
    ConfigKind::HPrimeNI,
    ConfigKind::HStarN,
    ConfigKind::StarSubdivision,
    ConfigKind::LineK2n,
    ConfigKind::ThinSpider,
    ConfigKind::ThickSpider,
];

fn gate(g: &Graph, w: Witness, route: Route, trace: Vec<String>) -> Result<PipelineResult> {
    if !verify_witness(g, &w) {
        return Err(Error::Invariant(format!(
            "{route:?} produced a witness that fails verification"
        )));
    }
    Ok(PipelineResult { witness: Some(w), route, trace })
}

/// Run the staged witness search. Non-prime inputs are processed with a
/// trace warning; each stage is attempted only when its threshold is
/// verifiable at this size, and every fallthrough is recorded.
pub fn find_witness(g: &Graph, cfg: &RunConfig) -> Result<PipelineResult> {
    let n = cfg.n;
    let mut trace = Vec::new();
    let report = is_prime(g);
    if !report.prime {
        let module = report.counterexample.expect("non-prime has a module");
        trace.push(format!(
            "warning: input not prime (module {:?}); continuing anyway",
            module.iter().collect::<Vec<_>>()
        ));
    } else {
        trace.push("input is prime".into());
    }

    // (1) chain route: a chain of length n+1 shrinks to a prime-inducing
    // chain of length n when n >= 3 (no 3-vertex graph is prime, so the
    // route cannot emit at n = 2)
    if n >= 3 {
        let mut budget = cfg.chain_budget;
        match find_any_chain(g, n + 1, &mut budget) {
            Ok(Some(chain)) => {
                trace.push(format!("chain of length {} found from base {:?}", n + 1, chain.base));
                match shrink_to_prime_chain(g, &chain) {
                    Ok(short) => {
                        trace.push(format!(
                            "shrunk to prime-inducing chain of length {}",
                            short.length
                        ));
                        let roles = short
                            .vertices
                            .iter()
                            .enumerate()
                            .map(|(i, &v)| (format!("v{i}"), v))
                            .collect();
                        let w = Witness::new(ConfigKind::PrimeChain, short.length, false, roles);
                        return gate(g, w, Route::ChainRoute, trace);
                    }
                    Err(e) => trace.push(format!("shrink failed: {e}")),
                }
            }
            Ok(None) => trace.push(format!("no chain of length {}", n + 1)),
            Err(Error::Budget(_)) => trace.push("chain search budget exhausted".into()),
            Err(e) => return Err(e),
        }
    } else {
        trace.push("chain route skipped: length-2 chains cannot induce a prime subgraph".into());
    }

    // (2) tree route
    let cap = (usize::BITS - (g.order() + 1).leading_zeros()) as usize;
    let mut budget = cfg.tree_budget;
    match tree_rank_witness(g, cap.max(1), &mut budget) {
        Ok(rank) => {
            trace.push(format!(
                "tree rank witness t={} ({})",
                rank.t,
                if rank.exact { "exact" } else { "lower bound" }
            ));
            if let Some(tree) = rank.tree {
                let sizes =
                    ColorSizes::from_u64s(&[n as u64, n as u64, n as u64, n as u64])?;
                let upper = ramsey_upper(&sizes);
                let threshold = upper.as_u64().filter(|_| upper.is_exact());
                match threshold {
                    Some(v) => trace.push(format!(
                        "spine threshold R({n},{n},{n},{n}) = {v} vs t = {}",
                        rank.t
                    )),
                    None => trace.push(format!(
                        "spine threshold R({n},{n},{n},{n}) not exactly known; extraction is opportunistic"
                    )),
                }
                match extract_config_from_tree(&tree, n, n, n) {
                    Ok(w) => {
                        trace.push(format!("spine extraction produced {}", w.kind.name()));
                        if matches!(
                            w.kind,
                            ConfigKind::HalfSplitGraph | ConfigKind::InducedMatching
                        ) {
                            trace.push(
                                "continuing with terminal-family detectors".into(),
                            );
                            let mut budget = cfg.detector_budget;
                            for kind in TERMINAL_FAMILIES {
                                for (host, complemented) in
                                    [(g, false), (&g.complement(), true)]
                                {
                                    if let Search::Found(mut tw) =
                                        find_induced(host, kind, n, &mut budget)?
                                    {
                                        tw.complemented = complemented;
                                        trace.push(format!(
                                            "terminal family {} found{}",
                                            kind.name(),
                                            if complemented { " (complemented)" } else { "" }
                                        ));
                                        return gate(g, tw, Route::TreeExtractionRoute, trace);
                                    }
                                }
                            }
                            trace.push(
                                "no terminal family found; keeping the extracted witness".into(),
                            );
                        }
                        return gate(g, w, Route::TreeExtractionRoute, trace);
                    }
                    Err(Error::Refused(msg)) => trace.push(format!("spine extraction: {msg}")),
                    Err(Error::Input(msg)) => trace.push(format!("spine extraction: {msg}")),
                    Err(e) => return Err(e),
                }
            }
        }
        Err(Error::Budget(_)) => trace.push("tree witness budget exhausted".into()),
        Err(e) => return Err(e),
    }

    // (3) homogeneous route: report the set, then look for a witness inside it
    match extract_homogeneous(g, cfg.seed) {
        Ok((set, kind, report)) => {
            trace.push(format!(
                "homogeneous set of size {} ({kind:?}); n={}, t={}, h={}",
                set.len(),
                report.n,
                report.t,
                report.h
            ));
            if set.len() >= 2 {
                let (sub, map) = g.induced_subgraph(&set)?;
                let mut budget = cfg.detector_budget;
                if let Search::Found(w) = detect_any(&sub, n, &mut budget)? {
                    let roles = w
                        .roles
                        .iter()
                        .map(|r| (r.role.clone(), map.apply(r.vertex)))
                        .collect();
                    let w = Witness::new(w.kind, w.height, w.complemented, roles);
                    trace.push("witness found inside the homogeneous set".into());
                    return gate(g, w, Route::HomogeneousSetRoute, trace);
                }
            }
        }
        Err(e) => trace.push(format!("homogeneous extraction failed: {e}")),
    }

    // (4) detector fallback over the full list including complements
    let mut budget = cfg.detector_budget;
    match detect_any(g, n, &mut budget)? {
        Search::Found(w) => {
            trace.push(format!(
                "detector fallback found {}{}",
                w.kind.name(),
                if w.complemented { " (complemented)" } else { "" }
            ));
            if cfg.oracle_mode {
                let host = if w.complemented { g.complement() } else { g.clone() };
                let oracle = oracle_find_induced(&host, w.kind, w.height)?;
                if oracle.is_none() {
                    return Err(Error::Invariant(
                        "detector found a witness the oracle says is absent".into(),
                    ));
                }
                trace.push("oracle cross-check passed".into());
            }
            gate(g, w, Route::DetectorFallback, trace)
        }
        Search::Absent => {
            trace.push("exhaustive detector search: no configuration present".into());
            Ok(PipelineResult { witness: None, route: Route::NoneFound, trace })
        }
        Search::Exhausted => {
            trace.push("detector budget exhausted".into());
            Ok(PipelineResult { witness: None, route: Route::NoneFound, trace })
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusRow {
    pub index: usize,
    pub order: usize,
    pub prime: bool,
    pub chain_radius: Option<usize>,
    pub ladder_index: usize,
    pub tree_t: usize,
    pub tree_h: usize,
    pub rank_height_ok: bool,
    pub witness_n: Option<usize>,
    pub witness_kind: Option<String>,
    pub error: Option<String>,
}

/// Parse a corpus description: "order:N" / "connected-order:N" for the
/// exhaustive enumeration, otherwise a file body of graph6 or
/// adjacency-list lines (one graph per line / paragraph handled per line).
pub fn load_corpus(spec: &str) -> Result<Vec<std::result::Result<Graph, String>>> {
    if let Some(ns) = spec.strip_prefix("order:") {
        let n: usize = ns
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad corpus order {ns:?}")))?;
        return Ok(enumerate_graphs(n)?.into_iter().map(Ok).collect());
    }
    if let Some(ns) = spec.strip_prefix("connected-order:") {
        let n: usize = ns
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("bad corpus order {ns:?}")))?;
        return Ok(enumerate_graphs(n)?
            .into_iter()
            .filter(is_connected)
            .map(Ok)
            .collect());
    }
    let body = std::fs::read_to_string(spec)
        .map_err(|e| Error::Input(format!("cannot read corpus {spec:?}: {e}")))?;
    Ok(body
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_auto(l).map_err(|e| format!("{l:?}: {e}")))
        .collect())
}

/// Per-graph statistics table; unreadable entries become error rows.
pub fn run_corpus(spec: &str, cfg: &RunConfig) -> Result<Vec<CorpusRow>> {
    let graphs = load_corpus(spec)?;
    let mut rows = Vec::with_capacity(graphs.len());
    for (index, entry) in graphs.into_iter().enumerate() {
        let g = match entry {
            Ok(g) => g,
            Err(msg) => {
                rows.push(CorpusRow {
                    index,
                    order: 0,
                    prime: false,
                    chain_radius: None,
                    ladder_index: 0,
                    tree_t: 0,
                    tree_h: 0,
                    rank_height_ok: false,
                    witness_n: None,
                    witness_kind: None,
                    error: Some(msg),
                });
                continue;
            }
        };
        rows.push(corpus_row(index, &g, cfg)?);
    }
    Ok(rows)
}

fn corpus_row(index: usize, g: &Graph, cfg: &RunConfig) -> Result<CorpusRow> {
    let prime = is_prime(g).prime;
    let radius = if g.order() >= 3 { chain_radius(g)? } else { None };
    let mut budget = cfg.detector_budget;
    let ladder = ladder_index(g, g.order(), &mut budget)?.value;
    let tree = arrange_full(g, SelectionPolicy::MinIndex, cfg.seed)?;
    let report = verify_rank_height(g, &tree)?;
    let mut witness_n = None;
    let mut witness_kind = None;
    for n in (2..=cfg.n).rev() {
        let r = find_witness(g, &RunConfig { n, ..*cfg })?;
        if let Some(w) = r.witness {
            witness_n = Some(n);
            witness_kind = Some(format!(
                "{}{}",
                w.kind.name(),
                if w.complemented { "-complement" } else { "" }
            ));
            break;
        }
    }
    Ok(CorpusRow {
        index,
        order: g.order(),
        prime,
        chain_radius: radius,
        ladder_index: ladder,
        tree_t: report.t,
        tree_h: report.h,
        rank_height_ok: true,
        witness_n,
        witness_kind,
        error: None,
    })
}

pub fn rows_to_csv(rows: &[CorpusRow]) -> String {
    let mut out = String::from(
        "index,order,prime,chain_radius,ladder_index,tree_t,tree_h,rank_height_ok,witness_n,witness_kind,error\n",
    );
    let opt = |o: &Option<String>| o.clone().unwrap_or_default();
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.index,
            r.order,
            r.prime,
            r.chain_radius.map(|v| v.to_string()).unwrap_or_default(),
            r.ladder_index,
            r.tree_t,
            r.tree_h,
            r.rank_height_ok,
            r.witness_n.map(|v| v.to_string()).unwrap_or_default(),
            opt(&r.witness_kind),
            opt(&r.error),
        );
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub checks: Vec<OracleCheck>,
    pub all_pass: bool,
}

const ORACLE_MAX_ORDER: usize = 8;

/// Cross-check every fast path against its exhaustive oracle on one graph.
pub fn oracle_check(g: &Graph) -> Result<OracleReport> {
    if g.order() > ORACLE_MAX_ORDER {
        return Err(Error::Refused(format!(
            "oracle checks are exhaustive and limited to order <= {ORACLE_MAX_ORDER}"
        )));
    }
    if g.order() == 0 {
        return Err(Error::Input("oracle checks need a nonempty graph".into()));
    }
    let mut checks = Vec::new();
    let mut push = |name: &str, pass: bool, detail: String| {
        checks.push(OracleCheck { name: name.into(), pass, detail });
    };

    let fast = is_prime(g).prime;
    let brute = brute_force_is_prime(g).prime;
    push(
        "primality: closure criterion vs subset brute force",
        fast == brute,
        format!("closure={fast} brute={brute}"),
    );

    let mut chain_ok = true;
    let mut pairs = 0usize;
    for u in 0..g.order() {
        for v in (u + 1)..g.order() {
            let base = VertexSet::new([u, v]);
            let closure = module_closure(g, &base)?;
            for w in 0..g.order() {
                if w == u || w == v {
                    continue;
                }
                pairs += 1;
                if chain_exists(g, &base, w)? != closure.contains(w) {
                    chain_ok = false;
                }
            }
        }
    }
    push(
        "duality: chain existence vs module closure",
        chain_ok,
        format!("{pairs} (pair, target) cases"),
    );

    let mut det_ok = true;
    let mut det_cases = 0usize;
    for kind in DETECT_ORDER {
        for n in kind.min_height()..=2.max(kind.min_height()) {
            let mut budget = u64::MAX;
            let det = find_induced(g, kind, n, &mut budget)?;
            let ora = oracle_find_induced(g, kind, n)?;
            det_cases += 1;
            if det.is_found() != ora.is_some() {
                det_ok = false;
            }
        }
    }
    push(
        "detectors vs tuple-enumeration oracle",
        det_ok,
        format!("{det_cases} kind/height cases"),
    );

    let (set, _, report) = extract_homogeneous(g, 0)?;
    let needed = report.h.div_ceil(2);
    push(
        "homogeneous extraction size bound",
        set.len() >= needed.min(report.n),
        format!("size={} needed>={needed}", set.len()),
    );

    let all_pass = checks.iter().all(|c| c.pass);
    Ok(OracleReport { checks, all_pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::build_config;
    use crate::graph::path_graph;

    #[test]
    fn planted_half_graph_found() {
        let g = build_config(ConfigKind::BipartiteHalfGraph, 6).unwrap();
        let cfg = RunConfig::new(6).unwrap();
        let r = find_witness(&g, &cfg).unwrap();
        let w = r.witness.expect("planted witness");
        assert!(verify_witness(&g, &w));
    }

    #[test]
    fn chain_route_on_long_path() {
        let g = path_graph(20);
        let cfg = RunConfig::new(3).unwrap();
        let r = find_witness(&g, &cfg).unwrap();
        assert_eq!(r.route, Route::ChainRoute);
        let w = r.witness.unwrap();
        assert_eq!(w.kind, ConfigKind::PrimeChain);
        assert_eq!(w.height, 3);
    }

    #[test]
    fn complemented_spider_reported_dual() {
        let g = build_config(ConfigKind::ThinSpider, 7).unwrap().complement();
        let cfg = RunConfig::new(7).unwrap();
        let r = find_witness(&g, &cfg).unwrap();
        let w = r.witness.expect("complement witness");
        assert!(verify_witness(&g, &w));
    }

    #[test]
    fn trace_is_replayable() {
        let g = Graph::random(14, 0.5, 3).unwrap();
        let cfg = RunConfig::new(3).unwrap();
        let a = find_witness(&g, &cfg).unwrap();
        let b = find_witness(&g, &cfg).unwrap();
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.route, b.route);
    }

    #[test]
    fn none_found_is_traced() {
        let g = Graph::from_edges(2, &[]).unwrap();
        let cfg = RunConfig::new(4).unwrap();
        let r = find_witness(&g, &cfg).unwrap();
        assert_eq!(r.route, Route::NoneFound);
        assert!(!r.trace.is_empty());
        assert!(r.witness.is_none());
    }

    #[test]
    fn corpus_connected_order_5_inequality() {
        let cfg = RunConfig::new(3).unwrap();
        let rows = run_corpus("connected-order:5", &cfg).unwrap();
        assert_eq!(rows.len(), 21);
        assert!(rows.iter().all(|r| r.rank_height_ok && r.error.is_none()));
    }

    #[test]
    fn corpus_from_file_with_bad_line() {
        let dir = std::env::temp_dir().join("corpus_bad_line_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("corpus.g6");
        std::fs::write(&path, "A_\nnot-a-graph\n").unwrap();
        let cfg = RunConfig::new(2).unwrap();
        let rows = run_corpus(path.to_str().unwrap(), &cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].error.is_none());
        assert!(rows[1].error.is_some());
        let csv = rows_to_csv(&rows);
        assert!(csv.lines().count() == 3);
    }

    #[test]
    fn empty_corpus_is_empty_table() {
        let dir = std::env::temp_dir().join("corpus_empty_test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("empty.g6");
        std::fs::write(&path, "").unwrap();
        let cfg = RunConfig::new(2).unwrap();
        let rows = run_corpus(path.to_str().unwrap(), &cfg).unwrap();
        assert!(rows.is_empty());
    }

    #[test]
    fn oracle_check_small_orders() {
        for order in 1..=4 {
            for g in enumerate_graphs(order).unwrap() {
                let r = oracle_check(&g).unwrap();
                assert!(r.all_pass, "oracle disagreement on order {order}");
            }
        }
    }

    #[test]
    fn oracle_check_refuses_large() {
        let g = Graph::random(9, 0.5, 0).unwrap();
        assert!(matches!(oracle_check(&g), Err(Error::Refused(_))));
    }
}
