//! Immutable simple undirected graphs with dense vertex indices, plus the
//! elementary predicates and constructors everything else is built from.
//!
//! Interchange formats: graph6 (bit-exact) and a plain adjacency list
//! ("p <order> <edges>" header, then one "u v" line per edge). DOT export is
//! best-effort for visualization.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Simple undirected graph. Adjacency is a packed symmetric bit relation;
/// vertices are anonymous indices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    pub fn empty(order: usize) -> Self {
        let words = (order * order + 63) / 64;
        Graph { order, bits: vec![0; words] }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.order || v >= self.order {
            return Err(Error::Input(format!(
                "edge ({u},{v}) out of range for order {}",
                self.order
            )));
        }
        if u == v {
            return Err(Error::Input(format!("self-loop at vertex {u}")));
        }
        self.set_bit(u, v);
        self.set_bit(v, u);
        Ok(())
    }

    fn set_bit(&mut self, u: usize, v: usize) {
        let idx = u * self.order + v;
        self.bits[idx / 64] |= 1u64 << (idx % 64);
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        if u == v {
            return false;
        }
        let idx = u * self.order + v;
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            (u + 1..self.order).filter_map(move |v| self.adjacent(u, v).then_some((u, v)))
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.adjacent(u, v)).count()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| self.adjacent(u, v))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.order);
        for u in 0..self.order {
            for v in u + 1..self.order {
                if !self.adjacent(u, v) {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        g
    }

    /// Restricts the graph to `s`. The returned map sends new vertex `i` to
    /// the old vertex it came from (members of `s` in increasing order).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, VertexMap)> {
        s.validate(self.order)?;
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(members.len());
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if self.adjacent(members[i], members[j]) {
                    g.set_bit(i, j);
                    g.set_bit(j, i);
                }
            }
        }
        Ok((g, VertexMap::new(members)))
    }

    pub fn is_independent(&self, s: &VertexSet) -> Result<bool> {
        s.validate(self.order)?;
        let m: Vec<usize> = s.iter().collect();
        let ok = pairs(&m).all(|(u, v)| !self.adjacent(u, v));
        Ok(ok)
    }

    pub fn is_complete(&self, s: &VertexSet) -> Result<bool> {
        s.validate(self.order)?;
        let m: Vec<usize> = s.iter().collect();
        let ok = pairs(&m).all(|(u, v)| self.adjacent(u, v));
        Ok(ok)
    }

    /// A vertex is mixed on `s` when it has both a neighbor and a non-neighbor
    /// inside `s`.
    pub fn is_mixed(&self, v: usize, s: &VertexSet) -> Result<bool> {
        s.validate(self.order)?;
        if v >= self.order {
            return Err(Error::Input(format!("vertex {v} out of range")));
        }
        if s.contains(v) {
            return Err(Error::Input(format!("vertex {v} lies inside the set")));
        }
        let mut seen_adj = false;
        let mut seen_non = false;
        for x in s.iter() {
            if self.adjacent(v, x) {
                seen_adj = true;
            } else {
                seen_non = true;
            }
            if seen_adj && seen_non {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// One vertex per edge; two result vertices are adjacent iff the edges
    /// share an endpoint. Result vertex order follows `self.edges()`.
    pub fn line_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut g = Graph::empty(edges.len());
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.set_bit(i, j);
                    g.set_bit(j, i);
                }
            }
        }
        g
    }

    /// Replaces every edge uv with an induced path u, w_1, ..., w_m, v through
    /// fresh internal vertices. `m = 0` returns the graph unchanged.
    pub fn subdivision(&self, m: usize) -> Graph {
        if m == 0 {
            return self.clone();
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let order = self.order + m * edges.len();
        let mut g = Graph::empty(order);
        let mut next = self.order;
        for (u, v) in edges {
            let mut prev = u;
            for _ in 0..m {
                g.set_bit(prev, next);
                g.set_bit(next, prev);
                prev = next;
                next += 1;
            }
            g.set_bit(prev, v);
            g.set_bit(v, prev);
        }
        g
    }

    /// Deterministic G(n, p) sample: each unordered pair is an edge with
    /// probability `p`, independently, driven by a seeded ChaCha stream.
    pub fn random(order: usize, p: f64, seed: u64) -> Result<Graph> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Input(format!("edge probability {p} outside [0,1]")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = Graph::empty(order);
        for u in 0..order {
            for v in u + 1..order {
                if rng.gen::<f64>() < p {
                    g.set_bit(u, v);
                    g.set_bit(v, u);
                }
            }
        }
        Ok(g)
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::new(0..self.order)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph g {\n");
        for v in 0..self.order {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn pairs(m: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    (0..m.len()).flat_map(move |i| (i + 1..m.len()).map(move |j| (m[i], m[j])))
}

/// Sorted, duplicate-free set of vertex indices of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(iter: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn validate(&self, order: usize) -> Result<()> {
        match self.members.last() {
            Some(&m) if m >= order => Err(Error::Input(format!(
                "vertex {m} out of range for order {order}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.members.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.members.insert(pos, v);
                true
            }
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}

/// Injective map from pattern vertex indices to host vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pairs: Vec<usize>,
}

impl VertexMap {
    pub fn new(pairs: Vec<usize>) -> Self {
        debug_assert!({
            let mut sorted = pairs.clone();
            sorted.sort_unstable();
            sorted.windows(2).all(|w| w[0] != w[1])
        });
        VertexMap { pairs }
    }

    pub fn apply(&self, pattern_vertex: usize) -> usize {
        self.pairs[pattern_vertex]
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.pairs
    }
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

/// Parses one line of graph6. Bit-exact to the published format: order header
/// (short or 4-byte long form), then upper-triangle bits column by column,
/// packed big-endian into 6-bit groups offset by 63.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse { offset: 0, msg: "empty input".into() });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: i,
                msg: format!("byte {b} outside printable graph6 range 63..126"),
            });
        }
    }
    let (order, mut pos) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Parse { offset: 1, msg: "8-byte order form not supported".into() });
        }
        if bytes.len() < 4 {
            return Err(Error::Parse { offset: bytes.len(), msg: "truncated length header".into() });
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        if n < 63 {
            return Err(Error::Parse { offset: 1, msg: "long order form used for order < 63".into() });
        }
        (n, 4)
    } else {
        (bytes[0] as usize - 63, 1)
    };
    let nbits = order * order.saturating_sub(1) / 2;
    let nbytes = (nbits + 5) / 6;
    if bytes.len() - pos != nbytes {
        return Err(Error::Parse {
            offset: bytes.len().min(pos + nbytes),
            msg: format!("expected {} adjacency bytes, found {}", nbytes, bytes.len() - pos),
        });
    }
    let mut g = Graph::empty(order);
    let mut bit = 0usize;
    for v in 1..order {
        for u in 0..v {
            let byte = bytes[pos + bit / 6];
            let val = (byte - 63) >> (5 - bit % 6) & 1;
            if val == 1 {
                g.set_bit(u, v);
                g.set_bit(v, u);
            }
            bit += 1;
        }
    }
    // padding bits must be zero
    while bit < nbytes * 6 {
        let byte = bytes[pos + bit / 6];
        if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
            return Err(Error::Parse {
                offset: pos + bit / 6,
                msg: "nonzero trailing padding bits".into(),
            });
        }
        bit += 1;
    }
    pos += nbytes;
    let _ = pos;
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258047 {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    } else {
        // orders this large never arise here
        panic!("graph too large for supported graph6 forms");
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.adjacent(u, v) as u8;
            nbits += 1;
            if nbits == 6 {
                bytes.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        bytes.push(63 + (acc << (6 - nbits)));
    }
    String::from_utf8(bytes).unwrap()
}

// ---------------------------------------------------------------------------
// adjacency-list text format
// ---------------------------------------------------------------------------

/// Parses the plain text format: "p <order> <edges>" header, then one
/// "u v" pair per line, 0-indexed.
pub fn parse_adjacency_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Input("missing header line".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "p" {
        return Err(Error::Input(format!("bad header line {header:?}, expected \"p <order> <edges>\"")));
    }
    let order: usize = fields[1]
        .parse()
        .map_err(|_| Error::Input(format!("bad order {:?}", fields[1])))?;
    let edge_count: usize = fields[2]
        .parse()
        .map_err(|_| Error::Input(format!("bad edge count {:?}", fields[2])))?;
    let mut edges = Vec::with_capacity(edge_count);
    for line in lines {
        let pair: Vec<&str> = line.split_whitespace().collect();
        if pair.len() != 2 {
            return Err(Error::Input(format!("bad edge line {line:?}")));
        }
        let u: usize = pair[0].parse().map_err(|_| Error::Input(format!("bad vertex {:?}", pair[0])))?;
        let v: usize = pair[1].parse().map_err(|_| Error::Input(format!("bad vertex {:?}", pair[1])))?;
        edges.push((u, v));
    }
    if edges.len() != edge_count {
        return Err(Error::Input(format!(
            "header promised {edge_count} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(order, &edges)
}

pub fn emit_adjacency_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parse either interchange format, deciding by the header.
pub fn parse_auto(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with("p ") {
        parse_adjacency_list(text)
    } else {
        parse_graph6(text)
    }
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    if n > 2 {
        edges.push((n - 1, 0));
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::empty(n).complement()
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..n {
            edges.push((i, m + j));
        }
    }
    Graph::from_edges(m + n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_of_complete_is_edgeless() {
        let g = complete_graph(3).complement();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn complement_of_empty_graph() {
        let g = Graph::empty(0).complement();
        assert_eq!(g.order(), 0);
    }

    #[test]
    fn induced_subgraph_of_cycle() {
        let c4 = cycle_graph(4);
        let (g, map) = c4.induced_subgraph(&VertexSet::new([0, 1, 2])).unwrap();
        // path on 3 vertices
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 2) && !g.adjacent(0, 2));
        assert_eq!(map.as_slice(), &[0, 1, 2]);
    }

    #[test]
    fn induced_full_and_singleton() {
        let g = cycle_graph(5);
        let (h, map) = g.induced_subgraph(&g.full_vertex_set()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map.as_slice(), &[0, 1, 2, 3, 4]);
        let (one, _) = g.induced_subgraph(&VertexSet::new([3])).unwrap();
        assert_eq!(one.order(), 1);
    }

    #[test]
    fn induced_out_of_range_is_input_error() {
        let g = path_graph(3);
        assert!(matches!(
            g.induced_subgraph(&VertexSet::new([0, 5])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn singleton_is_independent_and_complete() {
        let g = path_graph(4);
        let s = VertexSet::new([2]);
        assert!(g.is_independent(&s).unwrap());
        assert!(g.is_complete(&s).unwrap());
    }

    #[test]
    fn mixed_on_path() {
        // path p0-p1-p2-p3: p2 on {p0, p3} is mixed (adjacent p3, not p0)
        let g = path_graph(4);
        assert!(g.is_mixed(2, &VertexSet::new([0, 3])).unwrap());
        // adjacent to all / none of s -> not mixed
        assert!(!g.is_mixed(1, &VertexSet::new([0, 2])).unwrap());
        assert!(!g.is_mixed(3, &VertexSet::new([0, 1])).unwrap());
        assert!(matches!(
            g.is_mixed(0, &VertexSet::new([0, 1])),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn line_graph_of_path3_is_single_edge() {
        let g = path_graph(3).line_graph();
        assert_eq!(g.order(), 2);
        assert!(g.adjacent(0, 1));
        assert_eq!(Graph::empty(5).line_graph().order(), 0);
    }

    #[test]
    fn subdivision_of_star() {
        let star = complete_bipartite(1, 3);
        assert_eq!(star.subdivision(0), star);
        let sub = star.subdivision(1);
        assert_eq!(sub.order(), 7);
        assert_eq!(sub.edge_count(), 6);
        // center keeps degree 3, all original edges gone
        assert_eq!(sub.degree(0), 3);
        for leaf in 1..4 {
            assert!(!sub.adjacent(0, leaf));
            assert_eq!(sub.degree(leaf), 1);
        }
    }

    #[test]
    fn graph6_hand_decoded_cases() {
        // "A_" decodes to a single edge on 2 vertices
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.order(), 2);
        assert!(g.adjacent(0, 1));
        // order 0 emits "?"
        assert_eq!(emit_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(matches!(parse_graph6("A"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("A\t"), Err(Error::Parse { .. })));
        // single edge with nonzero padding bits
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph6_roundtrip_long_form() {
        let g = Graph::random(70, 0.4, 9).unwrap();
        let enc = emit_graph6(&g);
        assert_eq!(parse_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn random_graph_extremes_and_determinism() {
        assert_eq!(Graph::random(6, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(Graph::random(6, 1.0, 1).unwrap().edge_count(), 15);
        assert_eq!(
            Graph::random(12, 0.5, 42).unwrap(),
            Graph::random(12, 0.5, 42).unwrap()
        );
    }

    #[test]
    fn adjacency_list_roundtrip() {
        let g = cycle_graph(5);
        let text = emit_adjacency_list(&g);
        assert_eq!(parse_adjacency_list(&text).unwrap(), g);
        assert_eq!(parse_auto(&text).unwrap(), g);
    }
}
