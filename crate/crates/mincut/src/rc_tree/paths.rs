//! Path utilities over rooted trees: compressed path trees, bulk root-path
//! additions on an RC tree, and expansion of high-degree vertices.

use super::{ClusterKind, EulerTour, RcTree, Slot};
use crate::graph::{Edge, RootedTree};

/// Binary-lifting table of path minima: `best[j][v]` is the minimum over the
/// `2^j` edges above `v`.
#[derive(Debug, Clone)]
pub(crate) struct PathMin<W> {
    up: Vec<Vec<usize>>,
    best: Vec<Vec<W>>,
    depth: Vec<usize>,
}

impl<W: Ord + Copy> PathMin<W> {
    /// `weight(v)` is the weight of the edge from `v` to its parent; the value
    /// at the root is never read.
    pub(crate) fn new(t: &RootedTree, weight: impl Fn(usize) -> W) -> Self {
        let n = t.n();
        let depth = t.depths();
        let root = t.root();
        let up0: Vec<usize> = (0..n).map(|v| t.parent(v).unwrap_or(root)).collect();
        let best0: Vec<W> = (0..n).map(&weight).collect();
        let mut up = vec![up0];
        let mut best = vec![best0];
        let levels = usize::BITS as usize - n.leading_zeros() as usize;
        for j in 1..levels.max(1) {
            let (pu, pb) = (&up[j - 1], &best[j - 1]);
            let nu: Vec<usize> = (0..n).map(|v| pu[pu[v]]).collect();
            let nb: Vec<W> = (0..n).map(|v| pb[v].min(pb[pu[v]])).collect();
            up.push(nu);
            best.push(nb);
        }
        Self { up, best, depth }
    }

    /// Minimum edge weight on the path from `v` up to its ancestor `a`
    /// (`None` when `v == a`).
    pub(crate) fn min_to_ancestor(&self, mut v: usize, a: usize) -> Option<W> {
        let mut steps = self.depth[v] - self.depth[a];
        let mut out: Option<W> = None;
        let mut j = 0;
        while steps > 0 {
            if steps & 1 == 1 {
                let w = self.best[j][v];
                out = Some(out.map_or(w, |o| o.min(w)));
                v = self.up[j][v];
            }
            steps >>= 1;
            j += 1;
        }
        out
    }
}

/// Marked vertices plus pairwise LCAs, with each kept vertex's nearest kept
/// ancestor. `nodes` is in preorder and starts with `top`.
pub(crate) fn virtual_tree(et: &EulerTour, marked: &[usize], top: usize) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut nodes: Vec<usize> = marked.iter().copied().chain(std::iter::once(top)).collect();
    nodes.sort_unstable_by_key(|&v| et.tin(v));
    nodes.dedup();
    let extra: Vec<usize> = nodes.windows(2).map(|w| et.lca(w[0], w[1])).collect();
    nodes.extend(extra);
    nodes.sort_unstable_by_key(|&v| et.tin(v));
    nodes.dedup();
    debug_assert_eq!(nodes[0], top, "marked vertices must lie below top");
    let mut parent = vec![None; nodes.len()];
    let mut stack: Vec<usize> = Vec::new();
    for (i, &v) in nodes.iter().enumerate() {
        while let Some(&s) = stack.last() {
            if et.is_ancestor(nodes[s], v) {
                break;
            }
            stack.pop();
        }
        parent[i] = stack.last().copied();
        stack.push(i);
    }
    (nodes, parent)
}

/// A compressed path tree and the original id of each of its vertices.
#[derive(Debug, Clone)]
pub struct CompressedTree {
    pub tree: RootedTree,
    pub origin: Vec<usize>,
}

/// Compressed path tree of `t` over `marked`, rooted at `t`'s root.
pub fn compressed_path_tree(t: &RootedTree, marked: &[usize]) -> CompressedTree {
    compressed_path_tree_at(t, marked, t.root())
}

/// Compressed path tree over `marked` (all inside the subtree of `top`),
/// rooted at `top`. Each spliced path becomes one edge carrying the minimum
/// weight along it and the label of that minimum edge (smaller label on ties).
pub fn compressed_path_tree_at(t: &RootedTree, marked: &[usize], top: usize) -> CompressedTree {
    let et = EulerTour::new(t);
    let pm = PathMin::new(t, |v| (t.weight(v), t.edge_id(v)));
    let (nodes, parent) = virtual_tree(&et, marked, top);
    let k = nodes.len();
    let mut weight = vec![0; k];
    let mut edge_id = vec![usize::MAX; k];
    for i in 1..k {
        let p = parent[i].expect("non-root has a kept ancestor");
        let (w, id) = pm.min_to_ancestor(nodes[i], nodes[p]).expect("distinct vertices");
        weight[i] = w;
        edge_id[i] = id;
    }
    let tree = RootedTree::from_parents(0, parent, weight, edge_id).expect("virtual tree is a tree");
    CompressedTree { tree, origin: nodes }
}

/// Adds `x` to every edge on the root-to-`v` path for every update `(v, x)`,
/// using one bottom-up pass of interior sums and one top-down pass.
/// Returns the total change per edge, indexed by the edge's child vertex.
pub fn bulk_add_root_paths(rc: &RcTree, updates: &[(usize, i64)]) -> Vec<i64> {
    let clusters = rc.clusters();
    let mut at_vertex = vec![0i64; rc.n()];
    for &(v, x) in updates {
        at_vertex[v] += x;
    }
    // Interior sums; children always have smaller ids than their parent.
    let mut interior = vec![0i64; clusters.len()];
    for (id, c) in clusters.iter().enumerate() {
        interior[id] = match c.kind {
            ClusterKind::LeafVertex => at_vertex[c.rep],
            ClusterKind::LeafEdge => 0,
            _ => c.children().map(|(_, ch)| interior[ch]).sum(),
        };
    }
    // Pending additions from below each cluster's bottom boundary.
    let mut below = vec![0i64; clusters.len()];
    let mut delta = vec![0i64; rc.n()];
    for id in (0..clusters.len()).rev() {
        let c = &clusters[id];
        if c.kind == ClusterKind::LeafEdge {
            delta[c.rep] = below[id];
            continue;
        }
        for (slot, ch) in c.children() {
            below[ch] = match slot {
                Slot::Top => below[id] + interior[id] - interior[ch],
                Slot::Bottom => below[id],
                Slot::Unary(_) | Slot::Rep => 0,
            };
        }
    }
    delta
}

/// A tree whose high-degree vertices were replaced by chains.
#[derive(Debug, Clone)]
pub struct Expanded {
    pub tree: RootedTree,
    /// Original vertex of every expanded vertex; originals keep their ids.
    pub origin: Vec<usize>,
    /// True for vertices whose parent edge is a chain edge.
    pub chain: Vec<bool>,
}

/// Splits every vertex of degree above 3 into a chain of copies so that each
/// copy has degree at most 3. Chain edges get label `usize::MAX` and weight 0.
pub fn expand_to_ternary(t: &RootedTree) -> Expanded {
    let n = t.n();
    let mut origin: Vec<usize> = (0..n).collect();
    let mut edges: Vec<Edge> = Vec::with_capacity(n);
    let mut chain = vec![false; n];
    for x in 0..n {
        let kids = t.children(x);
        let mut cap = 3 - usize::from(t.parent(x).is_some());
        let mut holder = x;
        let mut i = 0;
        while i < kids.len() {
            let remaining = kids.len() - i;
            if remaining <= cap {
                for &c in &kids[i..] {
                    edges.push(Edge { u: holder, v: c, w: t.weight(c), eid: t.edge_id(c) });
                }
                break;
            }
            for &c in &kids[i..i + cap - 1] {
                edges.push(Edge { u: holder, v: c, w: t.weight(c), eid: t.edge_id(c) });
            }
            i += cap - 1;
            let next = origin.len();
            origin.push(x);
            chain.push(true);
            edges.push(Edge { u: holder, v: next, w: 0, eid: usize::MAX });
            holder = next;
            cap = 2;
        }
    }
    let tree = RootedTree::from_edges(origin.len(), t.root(), &edges).expect("expansion keeps a tree");
    Expanded { tree, origin, chain }
}
