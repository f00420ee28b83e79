//! End-to-end acceptance gate. One pass/fail line is printed per criterion;
//! the single test fails if any criterion fails, but every criterion is
//! evaluated regardless so the full scoreboard always prints.

use primegraph::chains::{brute_force_is_prime, chain_exists, is_prime, module_closure};
use primegraph::configs::{
    build_config, find_induced, oracle_find_induced, verify_witness, ConfigKind, Search, ALL_KINDS,
};
use primegraph::corpus::enumerate_graphs;
use primegraph::graph::{emit_graph6, parse_graph6, Graph, VertexSet};
use primegraph::magnitude::BigBound;
use primegraph::pipeline::{find_witness, RunConfig};
use primegraph::ramsey::{
    brute_force_ramsey_holds, compare_bounds, f_fn, g_fn, h_fn, ramsey_upper, ColorSizes,
};
use primegraph::typetree::{
    arrange_full, build_tree_graph, extract_config_from_tree, extract_homogeneous, verify_rank_height,
    Homogeneity, SelectionPolicy, TypeTree,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

fn corpus_upto(max_order: usize) -> Vec<Graph> {
    (0..=max_order)
        .flat_map(|k| enumerate_graphs(k).expect("enumeration within supported range"))
        .collect()
}

/// Criterion 1: chain existence from every pair to every target agrees with
/// membership in the module closure of the pair, on every graph of order <= 7.
fn chain_closure_duality(corpus: &[Graph]) -> bool {
    for g in corpus {
        let n = g.order();
        for x1 in 0..n {
            for x2 in (x1 + 1)..n {
                let base = VertexSet::new([x1, x2]);
                let closure = match module_closure(g, &base) {
                    Ok(c) => c,
                    Err(_) => return false,
                };
                for target in 0..n {
                    if target == x1 || target == x2 {
                        continue;
                    }
                    let by_chain = match chain_exists(g, &base, target) {
                        Ok(b) => b,
                        Err(_) => return false,
                    };
                    if by_chain != closure.contains(target) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Criterion 2: subset-brute-force primality agrees with the chain-based
/// criterion on the same corpus.
fn primality_equivalence(corpus: &[Graph]) -> bool {
    corpus
        .iter()
        .all(|g| brute_force_is_prime(g).prime == is_prime(g).prime)
}

fn sweep_trees() -> Option<Vec<(Graph, TypeTree)>> {
    let mut out = Vec::new();
    for g in corpus_upto(7) {
        if g.order() == 0 {
            continue;
        }
        let tree = arrange_full(&g, SelectionPolicy::MinIndex, 0).ok()?;
        out.push((g, tree));
    }
    for i in 0..200u64 {
        let order = 1 + (i as usize * 37) % 64;
        let p = 0.1 + 0.8 * ((i % 9) as f64) / 8.0;
        let g = Graph::random(order, p, 0xACCE_97 + i).ok()?;
        let policy = if i % 2 == 0 { SelectionPolicy::MinIndex } else { SelectionPolicy::SeededRandom };
        let tree = arrange_full(&g, policy, i).ok()?;
        out.push((g, tree));
    }
    Some(out)
}

/// Criterion 3: every full arrangement in the sweep passes validation
/// (prefix closure, injectivity, path consistency) and covers the graph.
fn arrangement_invariants(sweep: &[(Graph, TypeTree)]) -> bool {
    sweep
        .iter()
        .all(|(g, t)| t.validate().is_ok() && t.is_full() && t.len() == g.order())
}

/// Criterion 4: n <= t(2h)^{t+1} for every tree in the criterion-3 sweep.
fn rank_height_inequality(sweep: &[(Graph, TypeTree)]) -> bool {
    sweep.iter().all(|(g, t)| verify_rank_height(g, t).is_ok())
}

/// Criterion 5: extracted homogeneous sets are genuinely homogeneous and of
/// size >= max{t, ceil(h/2)} and >= ((n/t)^{1/(t+1)})/4 on the corpus.
fn homogeneous_extraction_bounds(corpus: &[Graph]) -> bool {
    for g in corpus {
        if g.order() == 0 {
            continue;
        }
        let (set, kind, report) = match extract_homogeneous(g, 0) {
            Ok(v) => v,
            Err(_) => return false,
        };
        let homogeneous = match kind {
            Homogeneity::Complete => g.is_complete(&set),
            Homogeneity::Independent => g.is_independent(&set),
        };
        if !matches!(homogeneous, Ok(true)) {
            return false;
        }
        let need = report.t.max(report.h.div_ceil(2));
        if set.len() < need {
            return false;
        }
        let analytic = ((report.n as f64 / report.t as f64).powf(1.0 / (report.t as f64 + 1.0))) / 4.0;
        if (set.len() as f64) < analytic {
            return false;
        }
    }
    true
}

/// Criterion 6: the four constant spine colorings extract their designated
/// kinds at height 6, and 100 random colorings at the exactly-verified
/// (2,2,2,2) threshold all extract some verified witness. A full binary tree
/// of height t carries t - 1 complete spine pairs, so six pairs come from
/// build_tree_graph(7).
fn spine_extraction() -> bool {
    let cases = [
        ((false, false), ConfigKind::InducedMatching),
        ((false, true), ConfigKind::ThinSpider),
        ((true, false), ConfigKind::BipartiteHalfGraph),
        ((true, true), ConfigKind::HalfSplitGraph),
    ];
    for (color, kind) in cases {
        let (g, tree) = match build_tree_graph(7, &|_, _| color) {
            Ok(v) => v,
            Err(_) => return false,
        };
        match extract_config_from_tree(&tree, 6, 6, 6) {
            Ok(w) => {
                if w.kind != kind || w.height != 6 || !verify_witness(&g, &w) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    for _ in 0..100 {
        let mut colors = [[(false, false); 7]; 7];
        for row in colors.iter_mut() {
            for cell in row.iter_mut() {
                *cell = (rng.gen(), rng.gen());
            }
        }
        let (g, tree) = match build_tree_graph(7, &|i, j| colors[i][j]) {
            Ok(v) => v,
            Err(_) => return false,
        };
        match extract_config_from_tree(&tree, 2, 2, 2) {
            Ok(w) => {
                if w.height < 2 || !verify_witness(&g, &w) {
                    return false;
                }
            }
            Err(_) => return false,
        }
    }
    true
}

/// Criterion 7: brute force certifies R(2,2) = 2 and R(3,3) = 6, and the
/// symbolic upper bound dominates both.
fn ramsey_exact_values() -> bool {
    let r22 = ColorSizes::from_u64s(&[2, 2]).expect("sizes");
    let r33 = ColorSizes::from_u64s(&[3, 3]).expect("sizes");
    let holds = |s: &ColorSizes, m: usize| matches!(brute_force_ramsey_holds(s, m), Ok(true));
    let fails = |s: &ColorSizes, m: usize| matches!(brute_force_ramsey_holds(s, m), Ok(false));
    holds(&r22, 2)
        && fails(&r22, 1)
        && holds(&r33, 6)
        && fails(&r33, 5)
        && ramsey_upper(&r22).cmp_value(&BigBound::exact_u64(2)) != Ordering::Less
        && ramsey_upper(&r33).cmp_value(&BigBound::exact_u64(6)) != Ordering::Less
}

/// Criterion 8: closed-form values of g, the base case of h, and the shape
/// and exactness flags of f.
fn bound_formula_values() -> bool {
    let g_ok = [(2u64, 4u64), (3, 19), (4, 85)]
        .iter()
        .all(|&(n, v)| matches!(g_fn(n), Ok(b) if b.as_u64() == Some(v) && b.is_exact()));
    let h_ok = (2u64..=6).all(|n| {
        let nprime = BigBound::exact_u64(n + 10);
        matches!(h_fn(n, &nprime, 2), Ok(b) if b.as_u64() == Some(n) && b.is_exact())
    });
    // f(1,1,1): the inner Ramsey arguments include a size-1 color, so M = 1
    // exactly and f = 2^{M+1} = 4
    let small = matches!(
        f_fn(1, &BigBound::exact_u64(1), &BigBound::exact_u64(1)),
        Ok(b) if b.as_u64() == Some(4) && b.is_exact()
    );
    // beyond the exact table, f is flagged as an upper bound
    let big = matches!(
        f_fn(2, &BigBound::exact_u64(2), &BigBound::exact_u64(4)),
        Ok(b) if !b.is_exact()
    );
    g_ok && h_ok && small && big
}

/// Criterion 9: every link of the asymptotic comparison holds for n in 2..20.
fn asymptotic_comparison() -> bool {
    (2u64..20).all(|n| matches!(compare_bounds(n), Ok(v) if v.all_hold))
}

/// Criterion 10: planting each configuration family at heights 3..6 (and its
/// complement) and running the pipeline recovers a verified witness of the
/// planted height.
fn planted_recovery() -> bool {
    let families = [
        ConfigKind::StarSubdivision,
        ConfigKind::LineK2n,
        ConfigKind::ThinSpider,
        ConfigKind::BipartiteHalfGraph,
        ConfigKind::HPrimeNI,
        ConfigKind::HStarN,
        ConfigKind::PrimeChain,
    ];
    for kind in families {
        for n in 3..=6usize {
            let planted = match build_config(kind, n) {
                Ok(g) => g,
                Err(_) => return false,
            };
            for host in [planted.clone(), planted.complement()] {
                let cfg = match RunConfig::new(n) {
                    Ok(c) => c,
                    Err(_) => return false,
                };
                let res = match find_witness(&host, &cfg) {
                    Ok(r) => r,
                    Err(_) => return false,
                };
                let w = match res.witness {
                    Some(w) => w,
                    None => return false,
                };
                if w.height != n || !verify_witness(&host, &w) {
                    return false;
                }
            }
        }
    }
    true
}

/// Criterion 11: the backtracking detectors agree with the tuple-enumeration
/// oracle for every kind at heights up to 3 on every graph of order <= 7.
fn detector_soundness(corpus: &[Graph]) -> bool {
    for g in corpus {
        for kind in ALL_KINDS {
            for n in kind.min_height()..=3 {
                let oracle = match oracle_find_induced(g, kind, n) {
                    Ok(o) => o,
                    Err(_) => return false,
                };
                let mut budget = u64::MAX;
                let got = match find_induced(g, kind, n, &mut budget) {
                    Ok(s) => s,
                    Err(_) => return false,
                };
                match (&got, &oracle) {
                    (Search::Found(w), Some(_)) => {
                        if !verify_witness(g, w) {
                            return false;
                        }
                    }
                    (Search::Absent, None) => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Criterion 12: graph6 round trip is the identity, bit-exact, on the corpus.
fn graph6_round_trip(corpus: &[Graph]) -> bool {
    corpus.iter().all(|g| {
        let text = emit_graph6(g);
        match parse_graph6(&text) {
            Ok(back) => back == *g && emit_graph6(&back) == text,
            Err(_) => false,
        }
    })
}

#[test]
fn acceptance() {
    let corpus = corpus_upto(7);
    let sweep = sweep_trees();
    let sweep_ref = sweep.as_deref().unwrap_or(&[]);

    let results = [
        ("01 module/chain duality", chain_closure_duality(&corpus)),
        ("02 primality equivalence", primality_equivalence(&corpus)),
        ("03 type-tree invariants", sweep.is_some() && arrangement_invariants(sweep_ref)),
        ("04 rank-height inequality", sweep.is_some() && rank_height_inequality(sweep_ref)),
        ("05 homogeneous extraction", homogeneous_extraction_bounds(&corpus)),
        ("06 spine extraction", spine_extraction()),
        ("07 ramsey exactness", ramsey_exact_values()),
        ("08 bound formulas", bound_formula_values()),
        ("09 asymptotic comparison", asymptotic_comparison()),
        ("10 planted recovery", planted_recovery()),
        ("11 detector soundness", detector_soundness(&corpus)),
        ("12 graph6 round trip", graph6_round_trip(&corpus)),
    ];

    let mut all = true;
    for (name, pass) in results {
        println!("criterion {name}: {}", if pass { "pass" } else { "FAIL" });
        all &= pass;
    }
    assert!(all, "one or more acceptance criteria failed");
}
