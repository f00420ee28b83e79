//! Isomorph-free enumeration of all graphs of small order, used as the
//! exhaustive test corpus. Graphs of order k are produced by extending each
//! canonical graph of order k-1 with every possible neighborhood for a new
//! vertex and deduplicating by canonical code (minimum upper-triangle
//! bit string over all vertex permutations).

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

pub const MAX_ENUM_ORDER: usize = 7;

type Matrix = Vec<Vec<bool>>;

fn code_under_perm(adj: &Matrix, perm: &[usize]) -> u32 {
    let k = perm.len();
    let mut code = 0u32;
    for i in 0..k {
        for j in (i + 1)..k {
            code = (code << 1) | (adj[perm[i]][perm[j]] as u32);
        }
    }
    code
}

/// Minimum code over all vertex permutations (Heap's algorithm).
fn canonical_code(adj: &Matrix) -> u32 {
    let k = adj.len();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut best = code_under_perm(adj, &perm);
    let mut c = vec![0usize; k];
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(code_under_perm(adj, &perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn matrix_to_graph(adj: &Matrix) -> Graph {
    let k = adj.len();
    let mut edges = Vec::new();
    for u in 0..k {
        for v in (u + 1)..k {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(k, &edges).expect("matrix in range")
}

fn extend_level(prev: &[Matrix], k: usize) -> Vec<Matrix> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for parent in prev {
        for mask in 0u32..(1 << (k - 1)) {
            let mut adj = vec![vec![false; k]; k];
            for u in 0..k - 1 {
                for v in 0..k - 1 {
                    adj[u][v] = parent[u][v];
                }
                let bit = mask & (1 << u) != 0;
                adj[u][k - 1] = bit;
                adj[k - 1][u] = bit;
            }
            if seen.insert(canonical_code(&adj)) {
                out.push(adj);
            }
        }
    }
    out
}

/// All graphs of the given order up to isomorphism, deterministic order.
pub fn enumerate_graphs(order: usize) -> Result<Vec<Graph>> {
    if order > MAX_ENUM_ORDER {
        return Err(Error::Refused(format!(
            "exhaustive enumeration limited to order <= {MAX_ENUM_ORDER}"
        )));
    }
    static CACHE: OnceLock<Mutex<Vec<Vec<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![vec![Vec::new()]]));
    let mut levels = cache.lock().expect("corpus cache");
    while levels.len() <= order {
        let k = levels.len();
        let next = extend_level(&levels[k - 1], k);
        levels.push(next);
    }
    Ok(levels[order].iter().map(matrix_to_graph).collect())
}

pub fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen[v] && g.adjacent(u, v) {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{emit_graph6, path_graph};

    #[test]
    fn counts_match_known_sequence() {
        // number of graphs on n unlabeled vertices
        let expected = [1usize, 1, 2, 4, 11, 34, 156, 1044];
        for (order, &want) in expected.iter().enumerate() {
            assert_eq!(enumerate_graphs(order).unwrap().len(), want, "order {order}");
        }
    }

    #[test]
    fn enumeration_has_no_isomorphic_duplicates_at_order_4() {
        let graphs = enumerate_graphs(4).unwrap();
        let codes: HashSet<u32> = graphs
            .iter()
            .map(|g| {
                let adj: Matrix = (0..4)
                    .map(|u| (0..4).map(|v| u != v && g.adjacent(u, v)).collect())
                    .collect();
                canonical_code(&adj)
            })
            .collect();
        assert_eq!(codes.len(), graphs.len());
    }

    #[test]
    fn refuses_above_threshold() {
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn deterministic_output() {
        let a: Vec<String> = enumerate_graphs(5).unwrap().iter().map(emit_graph6).collect();
        let b: Vec<String> = enumerate_graphs(5).unwrap().iter().map(emit_graph6).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn connectivity() {
        assert!(is_connected(&path_graph(5)));
        assert!(!is_connected(&Graph::from_edges(3, &[(0, 1)]).unwrap()));
        let connected: Vec<_> = enumerate_graphs(4)
            .unwrap()
            .into_iter()
            .filter(is_connected)
            .collect();
        assert_eq!(connected.len(), 6);
    }
}
