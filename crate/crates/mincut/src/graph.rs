//! Weighted undirected multigraphs, rooted trees and cut bookkeeping.
//!
//! Vertices are dense ids `0..n`. Every edge carries a stable id (`eid`)
//! that survives contraction and ternarization, so cuts found on derived
//! graphs can be mapped back to the input.

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One undirected edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: u64,
    pub eid: usize,
}

impl Edge {
    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected graph with positive integer weights; parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<Edge>,
    total: u64,
}

impl WeightedGraph {
    /// Builds a graph from `(u, v, w)` triples; edge ids are the positions.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, u64)>) -> Result<Self> {
        let edges = edges
            .into_iter()
            .enumerate()
            .map(|(eid, (u, v, w))| Edge { u, v, w, eid })
            .collect();
        Self::from_edges(n, edges)
    }

    /// Builds a graph from edges that already carry ids.
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut total = 0u64;
        for e in &edges {
            if e.u >= n || e.v >= n {
                return Err(Error::InvalidEdge { eid: e.eid, reason: "endpoint out of range" });
            }
            if e.u == e.v {
                return Err(Error::InvalidEdge { eid: e.eid, reason: "self-loop" });
            }
            if e.w == 0 {
                return Err(Error::InvalidEdge { eid: e.eid, reason: "zero weight" });
            }
            total = total.checked_add(e.w).ok_or(Error::WeightOverflow)?;
        }
        Ok(Self { n, edges, total })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Sum of all edge weights.
    pub fn total_weight(&self) -> u64 {
        self.total
    }

    /// Largest edge id plus one (0 for an edgeless graph).
    pub fn eid_bound(&self) -> usize {
        self.edges.iter().map(|e| e.eid + 1).max().unwrap_or(0)
    }

    /// Weighted degree of every vertex.
    pub fn weighted_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.n];
        for e in &self.edges {
            deg[e.u] += e.w;
            deg[e.v] += e.w;
        }
        deg
    }

    /// Incidence lists: for each vertex the indices (into `edges()`) of its edges.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.u].push(i);
            adj[e.v].push(i);
        }
        adj
    }

    /// Component label per vertex (labels are dense, ordered by smallest member).
    pub fn components(&self) -> (usize, Vec<usize>) {
        let mut dsu = UnionFind::new(self.n);
        for e in &self.edges {
            dsu.union(e.u, e.v);
        }
        dsu.labels()
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().0 == 1
    }
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// Dense labels ordered by each set's smallest element.
    pub fn labels(&mut self) -> (usize, Vec<usize>) {
        let n = self.parent.len();
        let mut label_of_root = vec![usize::MAX; n];
        let mut labels = vec![0; n];
        let mut count = 0;
        for v in 0..n {
            let r = self.find(v);
            if label_of_root[r] == usize::MAX {
                label_of_root[r] = count;
                count += 1;
            }
            labels[v] = label_of_root[r];
        }
        (count, labels)
    }
}

/// A spanning tree hung from a root. Every non-root vertex stores the weight
/// and the label of the edge to its parent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    weight: Vec<u64>,
    edge_id: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl RootedTree {
    /// Builds a tree from parent pointers. `weight[v]` and `edge_id[v]` describe
    /// the edge from `v` to its parent and are ignored at the root.
    pub fn from_parents(
        root: usize,
        parent: Vec<Option<usize>>,
        weight: Vec<u64>,
        edge_id: Vec<usize>,
    ) -> Result<Self> {
        let n = parent.len();
        if root >= n || weight.len() != n || edge_id.len() != n {
            return Err(Error::InvalidTree("array lengths disagree"));
        }
        if parent[root].is_some() {
            return Err(Error::InvalidTree("root has a parent"));
        }
        let mut children = vec![Vec::new(); n];
        for (v, p) in parent.iter().enumerate() {
            match p {
                Some(p) if *p >= n => return Err(Error::InvalidTree("parent out of range")),
                Some(p) => children[*p].push(v),
                None if v != root => return Err(Error::InvalidTree("second root")),
                None => {}
            }
        }
        let tree = Self { root, parent, weight, edge_id, children };
        if tree.preorder().len() != n {
            return Err(Error::InvalidTree("not connected to the root"));
        }
        Ok(tree)
    }

    /// Hangs the tree formed by `edges` from `root`.
    pub fn from_edges(n: usize, root: usize, edges: &[Edge]) -> Result<Self> {
        if n == 0 || root >= n {
            return Err(Error::InvalidTree("root out of range"));
        }
        if edges.len() + 1 != n {
            return Err(Error::InvalidTree("a spanning tree needs n - 1 edges"));
        }
        let mut adj = vec![Vec::new(); n];
        for e in edges {
            if e.u >= n || e.v >= n || e.u == e.v {
                return Err(Error::InvalidTree("bad edge endpoint"));
            }
            adj[e.u].push(*e);
            adj[e.v].push(*e);
        }
        let mut parent = vec![None; n];
        let mut weight = vec![0; n];
        let mut edge_id = vec![usize::MAX; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for e in &adj[x] {
                let y = e.other(x);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    weight[y] = e.w;
                    edge_id[y] = e.eid;
                    queue.push_back(y);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }
        Self::from_parents(root, parent, weight, edge_id)
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Weight of the edge from `v` to its parent.
    pub fn weight(&self, v: usize) -> u64 {
        self.weight[v]
    }

    pub fn set_weight(&mut self, v: usize, w: u64) {
        self.weight[v] = w;
    }

    /// Label of the edge from `v` to its parent.
    pub fn edge_id(&self, v: usize) -> usize {
        self.edge_id[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_ternary(&self) -> bool {
        self.max_degree() <= 3
    }

    /// Vertices in depth-first preorder from the root.
    pub fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.n());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            if order.len() > self.n() {
                break;
            }
            stack.extend(self.children[v].iter().rev());
        }
        order
    }

    /// Depth of every vertex (root has depth 0).
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.n()];
        for v in self.preorder() {
            if let Some(p) = self.parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        depth
    }

    /// The tree's edges as graph edges `(parent, child)`.
    pub fn to_edges(&self) -> Vec<Edge> {
        (0..self.n())
            .filter_map(|v| {
                self.parent[v].map(|p| Edge { u: p, v, w: self.weight[v], eid: self.edge_id[v] })
            })
            .collect()
    }
}

/// Which tree and which tree edges produced a cut.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub tree: usize,
    pub edges: Vec<usize>,
}

/// A vertex bipartition together with its weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutResult {
    pub side: Vec<bool>,
    pub weight: u64,
    pub witness: Option<Witness>,
}

impl CutResult {
    /// Builds a cut from a side vector, computing its weight in `g`.
    pub fn from_side(g: &WeightedGraph, side: Vec<bool>) -> Result<Self> {
        let weight = cut_weight(g, &side)?;
        Ok(Self { side, weight, witness: None })
    }

    /// Maps the cut of a derived graph back to the vertices of the original.
    /// `map[v]` is the derived vertex holding original vertex `v`.
    pub fn lift(&self, g: &WeightedGraph, map: &[usize]) -> Result<Self> {
        let side = map.iter().map(|&x| self.side[x]).collect();
        let mut cut = Self::from_side(g, side)?;
        cut.witness = self.witness.clone();
        Ok(cut)
    }
}

/// Exact weight of the edges crossing `side`.
pub fn cut_weight(g: &WeightedGraph, side: &[bool]) -> Result<u64> {
    if side.len() != g.n() {
        return Err(Error::InvalidArgument("side vector length differs from n"));
    }
    let inside = side.iter().filter(|&&s| s).count();
    if inside == 0 || inside == g.n() {
        return Err(Error::TrivialCut);
    }
    Ok(g.edges().iter().filter(|e| side[e.u] != side[e.v]).map(|e| e.w).sum())
}

/// Merges each class of `labels` into one vertex. Edges inside a class are
/// dropped; all others are kept with their ids, parallel edges included.
/// Returns the contracted graph and the new id of every original vertex.
pub fn contract(g: &WeightedGraph, labels: &[usize]) -> (WeightedGraph, Vec<usize>) {
    let mut distinct: Vec<usize> = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let map: Vec<usize> = labels
        .iter()
        .map(|l| distinct.binary_search(l).expect("label present"))
        .collect();
    let edges = g
        .edges()
        .iter()
        .filter(|e| map[e.u] != map[e.v])
        .map(|e| Edge { u: map[e.u], v: map[e.v], w: e.w, eid: e.eid })
        .collect();
    let h = WeightedGraph::from_edges(distinct.len(), edges).expect("contraction keeps edges valid");
    (h, map)
}

/// Result of replacing high-degree vertices by cycles.
#[derive(Debug, Clone)]
pub struct Ternarized {
    pub graph: WeightedGraph,
    /// For each original vertex, its cycle vertices; the first is the vertex itself.
    pub copies: Vec<Vec<usize>>,
    /// For each vertex of `graph`, the original vertex it came from.
    pub origin: Vec<usize>,
    /// Weight used for the cycle edges.
    pub sentinel: u64,
    /// Edge ids at or above this value are cycle edges.
    pub first_cycle_eid: usize,
}

impl Ternarized {
    /// Projects a cut of the ternarized graph onto the original vertices.
    pub fn project(&self, side: &[bool]) -> Vec<bool> {
        self.copies.iter().map(|c| side[c[0]]).collect()
    }

    /// Extends a cut of the original graph to the ternarized one.
    pub fn extend(&self, side: &[bool]) -> Vec<bool> {
        self.origin.iter().map(|&v| side[v]).collect()
    }
}

/// Replaces every vertex of degree above 3 by a cycle of sentinel-weight
/// edges, one cycle vertex per incident edge.
pub fn ternarize(g: &WeightedGraph) -> Result<Ternarized> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let sentinel = g.total_weight().checked_add(1).ok_or(Error::WeightOverflow)?;
    let incidence = g.incidence();
    let mut copies: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
    let mut origin: Vec<usize> = (0..g.n()).collect();
    // Endpoint replacement: slot[i] = (copy used for edge i at u, copy at v).
    let mut ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    for v in 0..g.n() {
        let inc = &incidence[v];
        if inc.len() <= 3 {
            continue;
        }
        for (j, &ei) in inc.iter().enumerate() {
            let copy = if j == 0 {
                v
            } else {
                origin.push(v);
                copies[v].push(origin.len() - 1);
                origin.len() - 1
            };
            if g.edges()[ei].u == v {
                ends[ei].0 = copy;
            } else {
                ends[ei].1 = copy;
            }
        }
    }
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .zip(&ends)
        .map(|(e, &(u, v))| Edge { u, v, w: e.w, eid: e.eid })
        .collect();
    let first_cycle_eid = g.eid_bound();
    let mut next = first_cycle_eid;
    for c in &copies {
        if c.len() < 2 {
            continue;
        }
        for j in 0..c.len() {
            edges.push(Edge { u: c[j], v: c[(j + 1) % c.len()], w: sentinel, eid: next });
            next += 1;
        }
    }
    let n = origin.len();
    let graph = WeightedGraph::from_edges(n, edges)?;
    Ok(Ternarized { graph, copies, origin, sentinel, first_cycle_eid })
}

/// Spanning tree minimizing the lexicographic key order, ties broken by eid,
/// hung from vertex 0.
pub fn minimum_spanning_tree<K: Ord>(
    g: &WeightedGraph,
    key: impl Fn(&Edge) -> K,
) -> Result<RootedTree> {
    if g.n() == 0 {
        return Err(Error::Disconnected);
    }
    let mut order: Vec<(K, usize, usize)> =
        g.edges().iter().enumerate().map(|(i, e)| (key(e), e.eid, i)).collect();
    order.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut dsu = UnionFind::new(g.n());
    let mut chosen = Vec::with_capacity(g.n().saturating_sub(1));
    for (_, _, i) in order {
        let e = g.edges()[i];
        if dsu.union(e.u, e.v) {
            chosen.push(e);
        }
    }
    if chosen.len() + 1 != g.n() {
        return Err(Error::Disconnected);
    }
    RootedTree::from_edges(g.n(), 0, &chosen)
}

/// Parses the `p max n m` / `e u v w` text format (1-based vertex ids).
pub fn read_dimacs(text: &str) -> Result<WeightedGraph> {
    let parse_err = |line: usize, message: &str| Error::Parse { line, message: message.to_string() };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                if fields.len() != 4 || fields[1] != "max" {
                    return Err(parse_err(line, "expected `p max <n> <m>`"));
                }
                let n = fields[2].parse().map_err(|_| parse_err(line, "bad vertex count"))?;
                let m = fields[3].parse().map_err(|_| parse_err(line, "bad edge count"))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                if fields.len() != 4 {
                    return Err(parse_err(line, "expected `e <u> <v> <w>`"));
                }
                let u: usize = fields[1].parse().map_err(|_| parse_err(line, "bad vertex id"))?;
                let v: usize = fields[2].parse().map_err(|_| parse_err(line, "bad vertex id"))?;
                let w: u64 = fields[3].parse().map_err(|_| parse_err(line, "bad weight"))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(parse_err(line, "vertex id out of range"));
                }
                if u == v {
                    return Err(parse_err(line, "self-loop"));
                }
                if w == 0 {
                    return Err(parse_err(line, "weight must be positive"));
                }
                edges.push((u - 1, v - 1, w));
            }
            _ => return Err(parse_err(line, "unknown line type")),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != m {
        return Err(parse_err(text.lines().count().max(1), "edge count differs from header"));
    }
    WeightedGraph::new(n, edges).map_err(|e| match e {
        Error::WeightOverflow => parse_err(text.lines().count().max(1), "total weight overflows"),
        other => other,
    })
}

/// Writes the text format read by [`read_dimacs`], edges in stored order.
pub fn write_dimacs(g: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "p max {} {}", g.n(), g.m()).unwrap();
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u + 1, e.v + 1, e.w).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> WeightedGraph {
        WeightedGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap()
    }

    #[test]
    fn cut_weight_of_singletons() {
        let g = triangle();
        assert_eq!(cut_weight(&g, &[true, false, false]).unwrap(), 4);
        assert_eq!(cut_weight(&g, &[false, true, false]).unwrap(), 3);
        assert_eq!(cut_weight(&g, &[false, false, true]).unwrap(), 5);
        assert_eq!(cut_weight(&g, &[true, true, true]), Err(Error::TrivialCut));
    }

    #[test]
    fn single_edge_cut() {
        let g = WeightedGraph::new(2, [(0, 1, 7)]).unwrap();
        assert_eq!(cut_weight(&g, &[true, false]).unwrap(), 7);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(WeightedGraph::new(2, [(0, 0, 1)]).is_err());
        assert!(WeightedGraph::new(2, [(0, 1, 0)]).is_err());
        assert!(WeightedGraph::new(2, [(0, 2, 1)]).is_err());
        assert_eq!(
            WeightedGraph::new(2, [(0, 1, u64::MAX), (0, 1, 1)]),
            Err(Error::WeightOverflow)
        );
    }

    #[test]
    fn contract_triangle_edge() {
        let g = triangle();
        let (h, map) = contract(&g, &[0, 0, 1]);
        assert_eq!(h.n(), 2);
        assert_eq!(h.m(), 2);
        assert_eq!(map, vec![0, 0, 1]);
        let eids: Vec<usize> = h.edges().iter().map(|e| e.eid).collect();
        assert_eq!(eids, vec![1, 2]);
    }

    #[test]
    fn contract_nothing_is_identity() {
        let g = triangle();
        let (h, map) = contract(&g, &[0, 1, 2]);
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2]);
    }

    #[test]
    fn ternarize_star() {
        let g = WeightedGraph::new(5, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (0, 4, 1)]).unwrap();
        let t = ternarize(&g).unwrap();
        assert_eq!(t.graph.n(), 8);
        assert_eq!(t.graph.m(), 8);
        assert_eq!(t.sentinel, 5);
        assert_eq!(t.copies[0].len(), 4);
        assert!(t.graph.weighted_degrees().len() == 8);
        let mut deg = vec![0; 8];
        for e in t.graph.edges() {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        assert!(deg.iter().all(|&d| d <= 3));
    }

    #[test]
    fn ternarize_path_is_identity() {
        let g = WeightedGraph::new(3, [(0, 1, 2), (1, 2, 3)]).unwrap();
        let t = ternarize(&g).unwrap();
        assert_eq!(t.graph, g);
        assert_eq!(t.copies, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn ternarize_rejects_disconnected() {
        let g = WeightedGraph::new(3, [(0, 1, 2)]).unwrap();
        assert!(matches!(ternarize(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn mst_triangle() {
        let g = triangle();
        let t = minimum_spanning_tree(&g, |e| e.w).unwrap();
        let mut ids: Vec<usize> = t.to_edges().iter().map(|e| e.eid).collect();
        ids.sort();
        assert_eq!(ids, vec![0, 1]);
    }

    #[test]
    fn mst_equal_keys_prefers_small_eids() {
        let g = triangle();
        let t = minimum_spanning_tree(&g, |_| 0u8).unwrap();
        let mut ids: Vec<usize> = t.to_edges().iter().map(|e| e.eid).collect();
        ids.sort();
        assert_eq!(ids, vec![0, 1]);
    }

    #[test]
    fn dimacs_path_fixture() {
        let g = read_dimacs("p max 3 2\ne 1 2 5\ne 2 3 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges()[0], Edge { u: 0, v: 1, w: 5, eid: 0 });
        assert_eq!(g.edges()[1], Edge { u: 1, v: 2, w: 3, eid: 1 });
        assert_eq!(write_dimacs(&g), "p max 3 2\ne 1 2 5\ne 2 3 3\n");
    }

    #[test]
    fn dimacs_errors_carry_line_numbers() {
        let err = read_dimacs("c hello\np max 3 1\ne 1 4 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = read_dimacs("p max 3 1\nx\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(read_dimacs("e 1 2 3\n").is_err());
    }

    #[test]
    fn rooted_tree_from_edges() {
        let g = WeightedGraph::new(3, [(0, 1, 5), (1, 2, 3)]).unwrap();
        let t = RootedTree::from_edges(3, 0, g.edges()).unwrap();
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.weight(2), 3);
        assert_eq!(t.edge_id(1), 0);
        assert_eq!(t.depths(), vec![0, 1, 2]);
    }
}
