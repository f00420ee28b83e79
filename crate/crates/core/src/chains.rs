//! Modules, primality, and chains, together with their duality: a chain from
//! a pair reaches exactly the vertices forced into every module containing
//! that pair. Smallest-module queries are all the pipeline needs, so there is
//! no full modular decomposition here.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::Serialize;

/// Outcome of a primality query. When the graph is not prime the report
/// carries a nontrivial module as the counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimalityReport {
    pub prime: bool,
    pub counterexample: Option<VertexSet>,
}

/// True iff no outside vertex is mixed on `s`. Vacuously true for |s| <= 1
/// and s = V.
pub fn is_module(g: &Graph, s: &VertexSet) -> bool {
    if s.len() <= 1 || s.len() == g.order() {
        return true;
    }
    (0..g.order())
        .filter(|&v| !s.contains(v))
        .all(|v| !g.is_mixed(v, s).unwrap_or(false))
}

/// Smallest module containing `s`, computed by repeatedly absorbing the
/// lowest-index vertex mixed on the current set.
pub fn module_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    s.validate(g.order())?;
    if s.len() < 2 {
        return Err(Error::Input(format!(
            "module closure needs at least two vertices, got {}",
            s.len()
        )));
    }
    let mut cur = s.clone();
    loop {
        let mixed = (0..g.order())
            .find(|&v| !cur.contains(v) && g.is_mixed(v, &cur).unwrap());
        match mixed {
            Some(v) => {
                cur.insert(v);
            }
            None => return Ok(cur),
        }
    }
}

/// Primality via pair closures: prime iff the closure of every pair is the
/// whole vertex set. Graphs of order <= 2 are vacuously prime (no vertex
/// subset is nontrivial); the empty set counts as trivial.
pub fn is_prime(g: &Graph) -> PrimalityReport {
    let n = g.order();
    if n <= 2 {
        return PrimalityReport { prime: true, counterexample: None };
    }
    for u in 0..n {
        for v in u + 1..n {
            let closure = module_closure(g, &VertexSet::new([u, v])).unwrap();
            if closure.len() < n {
                return PrimalityReport { prime: false, counterexample: Some(closure) };
            }
        }
    }
    PrimalityReport { prime: true, counterexample: None }
}

/// Independent oracle: enumerate every vertex subset and look for a
/// nontrivial module. Exponential; intended for graphs of order <= ~20.
pub fn brute_force_is_prime(g: &Graph) -> PrimalityReport {
    let n = g.order();
    assert!(n <= 24, "subset enumeration oracle limited to small graphs");
    if n <= 2 {
        return PrimalityReport { prime: true, counterexample: None };
    }
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < 2 || size == n {
            continue;
        }
        let s = VertexSet::new((0..n).filter(|&i| mask >> i & 1 == 1));
        if is_module(g, &s) {
            return PrimalityReport { prime: false, counterexample: Some(s) };
        }
    }
    PrimalityReport { prime: true, counterexample: None }
}

/// A chain v_0,...,v_m from the base pair {v_0,v_1}: each later vertex sees
/// its predecessor as its unique neighbor or unique non-neighbor among all
/// earlier vertices. Length is m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Chain {
    pub base: [usize; 2],
    pub vertices: Vec<usize>,
    pub length: usize,
}

impl Chain {
    fn new(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.len() >= 3);
        Chain {
            base: [vertices[0], vertices[1]],
            vertices: vertices.clone(),
            length: vertices.len() - 1,
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::new(self.vertices.iter().copied())
    }
}

/// Incremental chain condition: appending `v` after `prefix` is legal iff
/// the last prefix vertex is v's unique neighbor or unique non-neighbor
/// among the prefix.
fn chain_step_ok(g: &Graph, prefix: &[usize], v: usize) -> bool {
    let last = *prefix.last().unwrap();
    let deg = prefix.iter().filter(|&&u| g.adjacent(u, v)).count();
    (deg == 1 && g.adjacent(last, v)) || (deg == prefix.len() - 1 && !g.adjacent(last, v))
}

/// Full chain predicate against a base pair.
pub fn is_chain(g: &Graph, seq: &[usize], base: &VertexSet) -> bool {
    if seq.len() < 3 || base.len() != 2 {
        return false;
    }
    if seq.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != seq.len() {
        return false;
    }
    if !(base.contains(seq[0]) && base.contains(seq[1])) {
        return false;
    }
    if seq[2..].iter().any(|&v| base.contains(v)) {
        return false;
    }
    (2..seq.len()).all(|i| chain_step_ok(g, &seq[..i], seq[i]))
}

fn dfs_to_target(
    g: &Graph,
    prefix: &mut Vec<usize>,
    used: &mut Vec<bool>,
    target: usize,
    limit: usize,
) -> bool {
    if *prefix.last().unwrap() == target {
        return prefix.len() >= 3;
    }
    if prefix.len() > limit {
        return false;
    }
    for v in 0..g.order() {
        if used[v] || !chain_step_ok(g, prefix, v) {
            continue;
        }
        prefix.push(v);
        used[v] = true;
        if dfs_to_target(g, prefix, used, target, limit) {
            return true;
        }
        used[v] = false;
        prefix.pop();
    }
    false
}

/// Shortest chain from the base pair to `target` of length at most `max_len`,
/// found by iterative deepening with lowest-index extension first.
pub fn find_chain(
    g: &Graph,
    base: &VertexSet,
    target: usize,
    max_len: usize,
) -> Result<Option<Chain>> {
    base.validate(g.order())?;
    if base.len() != 2 {
        return Err(Error::Input(format!("chain base must be a pair, got {}", base.len())));
    }
    if target >= g.order() || base.contains(target) {
        return Err(Error::Input(format!("bad chain target {target}")));
    }
    let b: Vec<usize> = base.iter().collect();
    for limit in 2..=max_len {
        for &(v0, v1) in &[(b[0], b[1]), (b[1], b[0])] {
            let mut prefix = vec![v0, v1];
            let mut used = vec![false; g.order()];
            used[v0] = true;
            used[v1] = true;
            if dfs_to_target(g, &mut prefix, &mut used, target, limit) {
                return Ok(Some(Chain::new(prefix)));
            }
        }
    }
    Ok(None)
}

/// Unlimited-length chain existence; cross-checkable against
/// `target ∈ module_closure(base)`. Chain vertices are distinct, so length
/// `order - 1` is already unlimited.
pub fn chain_exists(g: &Graph, base: &VertexSet, target: usize) -> Result<bool> {
    Ok(find_chain(g, base, target, g.order().saturating_sub(1))?.is_some())
}

/// Smallest n such that every pairwise-distinct triple (x1,x2,x3) admits a
/// chain of length at most n from {x1,x2} to x3. `None` when some triple has
/// no chain at all (the graph is then not prime).
pub fn chain_radius(g: &Graph) -> Result<Option<usize>> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Input(format!("chain radius needs order >= 3, got {n}")));
    }
    let mut radius = 0;
    for x1 in 0..n {
        for x2 in x1 + 1..n {
            let base = VertexSet::new([x1, x2]);
            for x3 in 0..n {
                if x3 == x1 || x3 == x2 {
                    continue;
                }
                match find_chain(g, &base, x3, n - 1)? {
                    Some(c) => radius = radius.max(c.length),
                    None => return Ok(None),
                }
            }
        }
    }
    Ok(Some(radius))
}

fn dfs_sub_chain(
    g: &Graph,
    pool: &[usize],
    prefix: &mut Vec<usize>,
    want: usize,
) -> Option<Vec<usize>> {
    if prefix.len() == want {
        let (sub, _) = g.induced_subgraph(&VertexSet::new(prefix.iter().copied())).ok()?;
        if is_prime(&sub).prime {
            return Some(prefix.clone());
        }
        return None;
    }
    for &v in pool {
        if prefix.contains(&v) || !chain_step_ok(g, prefix, v) {
            continue;
        }
        prefix.push(v);
        if let Some(found) = dfs_sub_chain(g, pool, prefix, want) {
            return Some(found);
        }
        prefix.pop();
    }
    None
}

/// Given a chain of length t > 3, returns a chain of length t-1 over a subset
/// of its vertices that induces a prime subgraph. Exhaustive search; failure
/// is escalated as a bug signal since the shorter chain always exists.
pub fn shrink_to_prime_chain(g: &Graph, c: &Chain) -> Result<Chain> {
    if c.length <= 3 {
        return Err(Error::Input(format!(
            "shrink needs a chain of length > 3, got {}",
            c.length
        )));
    }
    if !is_chain(g, &c.vertices, &VertexSet::new(c.base.iter().copied())) {
        return Err(Error::Input("input sequence is not a chain".into()));
    }
    let mut pool = c.vertices.clone();
    pool.sort_unstable();
    let want = c.vertices.len() - 1;
    for i in 0..pool.len() {
        for j in 0..pool.len() {
            if i == j {
                continue;
            }
            let mut prefix = vec![pool[i], pool[j]];
            if let Some(seq) = dfs_sub_chain(g, &pool, &mut prefix, want) {
                return Ok(Chain::new(seq));
            }
        }
    }
    Err(Error::Invariant(format!(
        "no prime-inducing sub-chain of length {} found",
        c.length - 1
    )))
}

fn dfs_any_chain(
    g: &Graph,
    prefix: &mut Vec<usize>,
    used: &mut Vec<bool>,
    want_len: usize,
    budget: &mut u64,
    require_prime: bool,
) -> Result<Option<Vec<usize>>> {
    if prefix.len() == want_len + 1 {
        if require_prime {
            let (sub, _) = g.induced_subgraph(&VertexSet::new(prefix.iter().copied()))?;
            if !is_prime(&sub).prime {
                return Ok(None);
            }
        }
        return Ok(Some(prefix.clone()));
    }
    for v in 0..g.order() {
        if used[v] || !chain_step_ok(g, prefix, v) {
            continue;
        }
        if *budget == 0 {
            return Err(Error::Budget("chain search".into()));
        }
        *budget -= 1;
        prefix.push(v);
        used[v] = true;
        if let Some(found) = dfs_any_chain(g, prefix, used, want_len, budget, require_prime)? {
            return Ok(Some(found));
        }
        used[v] = false;
        prefix.pop();
    }
    Ok(None)
}

fn search_chain_of_length(
    g: &Graph,
    len: usize,
    budget: &mut u64,
    require_prime: bool,
) -> Result<Option<Chain>> {
    if len < 2 || len + 1 > g.order() {
        return Ok(None);
    }
    for v0 in 0..g.order() {
        for v1 in 0..g.order() {
            if v0 == v1 {
                continue;
            }
            let mut prefix = vec![v0, v1];
            let mut used = vec![false; g.order()];
            used[v0] = true;
            used[v1] = true;
            if let Some(seq) = dfs_any_chain(g, &mut prefix, &mut used, len, budget, require_prime)? {
                return Ok(Some(Chain::new(seq)));
            }
        }
    }
    Ok(None)
}

/// Any chain of length exactly `len` from any base pair.
pub fn find_any_chain(g: &Graph, len: usize, budget: &mut u64) -> Result<Option<Chain>> {
    search_chain_of_length(g, len, budget, false)
}

/// A chain of length `len` whose vertex set induces a prime subgraph. This is
/// the detector behind the PrimeChain configuration kind.
pub fn find_prime_chain(g: &Graph, len: usize, budget: &mut u64) -> Result<Option<Chain>> {
    search_chain_of_length(g, len, budget, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph};

    #[test]
    fn module_basics() {
        let c4 = cycle_graph(4);
        assert!(is_module(&c4, &VertexSet::new([0])));
        assert!(is_module(&c4, &VertexSet::new([0, 2])));
        let p4 = path_graph(4);
        assert!(!is_module(&p4, &VertexSet::new([0, 1])));
    }

    #[test]
    fn closure_examples() {
        let c4 = cycle_graph(4);
        assert_eq!(
            module_closure(&c4, &VertexSet::new([0, 2])).unwrap(),
            VertexSet::new([0, 2])
        );
        let p4 = path_graph(4);
        assert_eq!(
            module_closure(&p4, &VertexSet::new([0, 1])).unwrap(),
            VertexSet::new([0, 1, 2, 3])
        );
        assert_eq!(
            module_closure(&p4, &p4.full_vertex_set()).unwrap(),
            p4.full_vertex_set()
        );
        assert!(matches!(
            module_closure(&p4, &VertexSet::new([1])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&path_graph(4)).prime);
        assert!(brute_force_is_prime(&path_graph(4)).prime);
        let r = is_prime(&cycle_graph(4));
        assert!(!r.prime);
        assert_eq!(r.counterexample, Some(VertexSet::new([0, 2])));
        assert!(!is_prime(&complete_graph(3)).prime);
        // small-order convention
        assert!(is_prime(&Graph::empty(0)).prime);
        assert!(is_prime(&Graph::empty(2)).prime);
    }

    #[test]
    fn chain_predicate_examples() {
        let p4 = path_graph(4);
        let base = VertexSet::new([0, 1]);
        assert!(is_chain(&p4, &[0, 1, 2, 3], &base));
        assert!(!is_chain(&p4, &[0, 1], &base)); // m >= 2 required
        assert!(!is_chain(&p4, &[0, 1, 0, 2], &base));
        assert!(!is_chain(&p4, &[0, 1, 1, 2], &base));
        // v_2 inside the base set
        assert!(!is_chain(&p4, &[0, 1, 0], &base));
    }

    #[test]
    fn find_chain_examples() {
        let p4 = path_graph(4);
        let c = find_chain(&p4, &VertexSet::new([0, 1]), 3, 3).unwrap().unwrap();
        assert_eq!(c.vertices, vec![0, 1, 2, 3]);
        assert_eq!(c.length, 3);

        let c4 = cycle_graph(4);
        assert!(find_chain(&c4, &VertexSet::new([0, 2]), 1, 3).unwrap().is_none());

        // target adjacent to exactly one base vertex: the m=2 case
        let p3 = path_graph(3);
        let c = find_chain(&p3, &VertexSet::new([0, 1]), 2, 5).unwrap().unwrap();
        assert_eq!(c.length, 2);
    }

    #[test]
    fn chain_radius_examples() {
        assert_eq!(chain_radius(&path_graph(4)).unwrap(), Some(3));
        assert_eq!(chain_radius(&cycle_graph(4)).unwrap(), None);
        assert!(matches!(chain_radius(&path_graph(2)), Err(Error::Input(_))));
        // chains use distinct vertices, so the radius is at most order - 1
        let p6 = path_graph(6);
        let r = chain_radius(&p6).unwrap().unwrap();
        assert!((3..=5).contains(&r));
    }

    #[test]
    fn shrink_examples() {
        let p5 = path_graph(5);
        let c = find_chain(&p5, &VertexSet::new([0, 1]), 4, 4).unwrap().unwrap();
        assert_eq!(c.length, 4);
        let s = shrink_to_prime_chain(&p5, &c).unwrap();
        assert_eq!(s.length, 3);
        let (sub, _) = p5.induced_subgraph(&s.vertex_set()).unwrap();
        assert!(is_prime(&sub).prime);
        assert!(is_chain(&p5, &s.vertices, &VertexSet::new(s.base.iter().copied())));

        // two applications starting from a length-6 chain
        let p7 = path_graph(7);
        let c6 = find_chain(&p7, &VertexSet::new([0, 1]), 6, 6).unwrap().unwrap();
        let c5 = shrink_to_prime_chain(&p7, &c6).unwrap();
        let c4 = shrink_to_prime_chain(&p7, &c5).unwrap();
        assert_eq!(c4.length, 4);
        let (sub, _) = p7.induced_subgraph(&c4.vertex_set()).unwrap();
        assert!(is_prime(&sub).prime);

        let short = find_chain(&p5, &VertexSet::new([0, 1]), 2, 3).unwrap().unwrap();
        assert!(matches!(shrink_to_prime_chain(&p5, &short), Err(Error::Input(_))));
    }

    #[test]
    fn prime_chain_detector() {
        let p6 = path_graph(6);
        let mut budget = u64::MAX;
        let c = find_prime_chain(&p6, 4, &mut budget).unwrap().unwrap();
        assert_eq!(c.length, 4);
        let (sub, _) = p6.induced_subgraph(&c.vertex_set()).unwrap();
        assert!(is_prime(&sub).prime);
    }
}
