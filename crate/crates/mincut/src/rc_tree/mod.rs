//! Rake-compress trees built by random-mate tree contraction.
//!
//! Each contraction round rakes every non-root leaf into its parent and
//! compresses an independent set of non-root vertices with exactly one
//! child. Every contracted vertex becomes the representative of a new
//! cluster whose children are its vertex leaf, the cluster(s) of its parent
//! and child edges, and the unary clusters previously raked onto it.

mod check;
mod euler;
mod paths;

pub use check::{check_invariants, cluster_edges, cluster_path};
pub use euler::{euler_tour, Direction, EulerTour};
pub use paths::{
    bulk_add_root_paths, compressed_path_tree, compressed_path_tree_at, expand_to_ternary,
    CompressedTree, Expanded,
};
pub(crate) use paths::{virtual_tree, PathMin};

use arrayvec::ArrayVec;
use rand::RngCore;

use crate::error::{Error, Result};
use crate::graph::RootedTree;
use crate::rng::Rng;

pub type ClusterId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterKind {
    LeafVertex,
    LeafEdge,
    Unary,
    Binary,
    Nullary,
}

/// Position of a cluster among its parent's children.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Rep,
    Top,
    Bottom,
    Unary(u8),
}

#[derive(Debug, Clone)]
pub struct Cluster {
    pub kind: ClusterKind,
    /// Representative vertex; for an edge leaf, the child endpoint of the edge.
    pub rep: usize,
    /// Upper boundary vertex (towards the root), if any.
    pub top_boundary: Option<usize>,
    /// Lower boundary vertex, binary clusters only.
    pub bottom_boundary: Option<usize>,
    pub rep_leaf: Option<ClusterId>,
    pub top: Option<ClusterId>,
    pub bottom: Option<ClusterId>,
    pub unary: ArrayVec<ClusterId, 3>,
    pub parent: Option<ClusterId>,
    pub slot: Slot,
    pub round: u32,
    pub height: u32,
}

impl Cluster {
    fn leaf(kind: ClusterKind, rep: usize, top: Option<usize>, bottom: Option<usize>) -> Self {
        Self {
            kind,
            rep,
            top_boundary: top,
            bottom_boundary: bottom,
            rep_leaf: None,
            top: None,
            bottom: None,
            unary: ArrayVec::new(),
            parent: None,
            slot: Slot::Rep,
            round: 0,
            height: 0,
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, ClusterKind::LeafVertex | ClusterKind::LeafEdge)
    }

    /// Children in slot order: rep leaf, top, bottom, unary.
    pub fn children(&self) -> impl Iterator<Item = (Slot, ClusterId)> + '_ {
        self.rep_leaf
            .map(|c| (Slot::Rep, c))
            .into_iter()
            .chain(self.top.map(|c| (Slot::Top, c)))
            .chain(self.bottom.map(|c| (Slot::Bottom, c)))
            .chain(self.unary.iter().enumerate().map(|(i, &c)| (Slot::Unary(i as u8), c)))
    }
}

/// A finished RC tree over a rooted tree with maximum degree 3.
#[derive(Debug, Clone)]
pub struct RcTree {
    n: usize,
    root_vertex: usize,
    clusters: Vec<Cluster>,
    vertex_leaf: Vec<ClusterId>,
    edge_leaf: Vec<Option<ClusterId>>,
    rep_cluster: Vec<ClusterId>,
    root: ClusterId,
    height: u32,
    rounds: u32,
    depth: Vec<u32>,
    levels: Vec<Vec<ClusterId>>,
}

impl RcTree {
    /// Contracts `t` with coins drawn from streams keyed by `(seed, round)`.
    pub fn build(t: &RootedTree, seed: u64) -> Result<Self> {
        let n = t.n();
        for v in 0..n {
            let degree = t.degree(v);
            if degree > 3 {
                return Err(Error::DegreeTooHigh { vertex: v, degree });
            }
        }
        let root_vertex = t.root();
        let mut clusters: Vec<Cluster> = Vec::with_capacity(3 * n);
        let mut vertex_leaf = Vec::with_capacity(n);
        for v in 0..n {
            vertex_leaf.push(clusters.len());
            clusters.push(Cluster::leaf(ClusterKind::LeafVertex, v, None, None));
        }
        let mut edge_leaf = vec![None; n];
        for v in 0..n {
            if let Some(p) = t.parent(v) {
                edge_leaf[v] = Some(clusters.len());
                clusters.push(Cluster::leaf(ClusterKind::LeafEdge, v, Some(p), Some(v)));
            }
        }

        // Round-local contraction state.
        let mut alive = vec![true; n];
        let mut cur_parent: Vec<usize> = (0..n).map(|v| t.parent(v).unwrap_or(usize::MAX)).collect();
        let mut up: Vec<ClusterId> = edge_leaf.iter().map(|e| e.unwrap_or(usize::MAX)).collect();
        let mut kids: Vec<ArrayVec<usize, 3>> =
            (0..n).map(|v| t.children(v).iter().copied().collect()).collect();
        let mut hanging: Vec<ArrayVec<ClusterId, 3>> = vec![ArrayVec::new(); n];
        let mut rep_cluster = vec![usize::MAX; n];
        let mut live: Vec<usize> = (0..n).filter(|&v| v != root_vertex).collect();
        let mut heads = vec![false; n];
        let mut round: u32 = 0;

        while !kids[root_vertex].is_empty() {
            round += 1;
            let mut coins = Rng::with_stream(seed, round as u64);
            for h in heads.iter_mut() {
                *h = coins.next_u32() & 1 == 1;
            }
            let candidate = |v: usize| kids[v].len() == 1 && heads[v];
            let mut rakes = Vec::new();
            let mut compresses = Vec::new();
            for &v in &live {
                if kids[v].is_empty() {
                    rakes.push(v);
                } else if candidate(v) {
                    let c = kids[v][0];
                    if !kids[c].is_empty() && !candidate(c) {
                        compresses.push(v);
                    }
                }
            }
            for &v in &rakes {
                let p = cur_parent[v];
                let id = clusters.len();
                let mut cl = Cluster::leaf(ClusterKind::Unary, v, Some(p), None);
                cl.rep_leaf = Some(vertex_leaf[v]);
                cl.top = Some(up[v]);
                cl.unary = hanging[v].clone();
                cl.round = round;
                clusters.push(cl);
                rep_cluster[v] = id;
                hanging[p].push(id);
                let pos = kids[p].iter().position(|&x| x == v).expect("child listed");
                kids[p].remove(pos);
                alive[v] = false;
            }
            for &v in &compresses {
                let p = cur_parent[v];
                let c = kids[v][0];
                let id = clusters.len();
                let mut cl = Cluster::leaf(ClusterKind::Binary, v, Some(p), Some(c));
                cl.rep_leaf = Some(vertex_leaf[v]);
                cl.top = Some(up[v]);
                cl.bottom = Some(up[c]);
                cl.unary = hanging[v].clone();
                cl.round = round;
                clusters.push(cl);
                rep_cluster[v] = id;
                up[c] = id;
                cur_parent[c] = p;
                let pos = kids[p].iter().position(|&x| x == v).expect("child listed");
                kids[p][pos] = c;
                alive[v] = false;
            }
            live.retain(|&v| alive[v]);
        }
        let root = clusters.len();
        let mut cl = Cluster::leaf(ClusterKind::Nullary, root_vertex, None, None);
        cl.rep_leaf = Some(vertex_leaf[root_vertex]);
        cl.unary = hanging[root_vertex].clone();
        cl.round = round + 1;
        clusters.push(cl);
        rep_cluster[root_vertex] = root;

        // Parent links, slots and heights (children are always created first).
        for id in 0..clusters.len() {
            let children: Vec<(Slot, ClusterId)> = clusters[id].children().collect();
            let mut height = 0;
            for (slot, c) in children {
                clusters[c].parent = Some(id);
                clusters[c].slot = slot;
                height = height.max(clusters[c].height + 1);
            }
            clusters[id].height = height;
        }
        let mut depth = vec![0u32; clusters.len()];
        for id in (0..clusters.len()).rev() {
            if let Some(p) = clusters[id].parent {
                depth[id] = depth[p] + 1;
            }
        }
        let height = clusters[root].height;
        let mut levels = vec![Vec::new(); height as usize + 1];
        for (id, c) in clusters.iter().enumerate() {
            levels[c.height as usize].push(id);
        }
        Ok(Self {
            n,
            root_vertex,
            clusters,
            vertex_leaf,
            edge_leaf,
            rep_cluster,
            root,
            height,
            rounds: round,
            depth,
            levels,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root_vertex(&self) -> usize {
        self.root_vertex
    }

    pub fn root(&self) -> ClusterId {
        self.root
    }

    pub fn clusters(&self) -> &[Cluster] {
        &self.clusters
    }

    pub fn cluster(&self, id: ClusterId) -> &Cluster {
        &self.clusters[id]
    }

    pub fn vertex_leaf(&self, v: usize) -> ClusterId {
        self.vertex_leaf[v]
    }

    /// Leaf cluster of the edge between `child` and its parent.
    pub fn edge_leaf(&self, child: usize) -> Option<ClusterId> {
        self.edge_leaf.get(child).copied().flatten()
    }

    /// The internal cluster whose representative is `v`.
    pub fn rep_cluster(&self, v: usize) -> ClusterId {
        self.rep_cluster[v]
    }

    /// Number of clusters on the longest leaf-to-root path, minus one.
    pub fn height(&self) -> u32 {
        self.height
    }

    /// Number of contraction rounds performed.
    pub fn rounds(&self) -> u32 {
        self.rounds
    }

    /// Distance of a cluster from the root cluster.
    pub fn depth(&self, id: ClusterId) -> u32 {
        self.depth[id]
    }

    /// Cluster ids grouped by height; every child sits in a lower group.
    pub fn levels(&self) -> &[Vec<ClusterId>] {
        &self.levels
    }

    /// Lowest common ancestor of two clusters.
    pub fn rc_lca(&self, mut a: ClusterId, mut b: ClusterId) -> ClusterId {
        while self.depth[a] > self.depth[b] {
            a = self.clusters[a].parent.expect("non-root has a parent");
        }
        while self.depth[b] > self.depth[a] {
            b = self.clusters[b].parent.expect("non-root has a parent");
        }
        while a != b {
            a = self.clusters[a].parent.expect("non-root has a parent");
            b = self.clusters[b].parent.expect("non-root has a parent");
        }
        a
    }

    /// Ancestors of a cluster, starting with the cluster itself.
    pub fn ancestors(&self, id: ClusterId) -> impl Iterator<Item = ClusterId> + '_ {
        std::iter::successors(Some(id), move |&c| self.clusters[c].parent)
    }
}

/// Convenience wrapper for [`RcTree::build`].
pub fn build_rc_tree(t: &RootedTree, seed: u64) -> Result<RcTree> {
    RcTree::build(t, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, WeightedGraph};

    fn path(n: usize) -> RootedTree {
        let g = WeightedGraph::new(n, (1..n).map(|i| (i - 1, i, i as u64))).unwrap();
        RootedTree::from_edges(n, 0, g.edges()).unwrap()
    }

    #[test]
    fn single_edge() {
        let t = path(2);
        let rc = RcTree::build(&t, 0).unwrap();
        let root = rc.cluster(rc.root());
        assert_eq!(root.kind, ClusterKind::Nullary);
        assert_eq!(root.rep, 0);
        assert_eq!(root.unary.len(), 1);
        let a = rc.cluster(root.unary[0]);
        assert_eq!(a.kind, ClusterKind::Unary);
        assert_eq!(a.rep, 1);
        assert_eq!(rc.cluster(a.top.unwrap()).kind, ClusterKind::LeafEdge);
        check_invariants(&rc, &t).unwrap();
    }

    #[test]
    fn short_path_any_seed() {
        let t = path(3);
        for seed in 0..20 {
            let rc = RcTree::build(&t, seed).unwrap();
            check_invariants(&rc, &t).unwrap();
            assert!((2..=3).contains(&rc.height()));
        }
    }

    #[test]
    fn single_vertex() {
        let t = RootedTree::from_parents(0, vec![None], vec![0], vec![0]).unwrap();
        let rc = RcTree::build(&t, 1).unwrap();
        assert_eq!(rc.cluster(rc.root()).kind, ClusterKind::Nullary);
        check_invariants(&rc, &t).unwrap();
    }

    #[test]
    fn degree_four_rejected() {
        let edges: Vec<Edge> =
            (1..5).map(|i| Edge { u: 0, v: i, w: 1, eid: i }).collect();
        let t = RootedTree::from_edges(5, 1, &edges).unwrap();
        assert!(matches!(RcTree::build(&t, 0), Err(Error::DegreeTooHigh { vertex: 0, .. })));
    }

    #[test]
    fn same_seed_same_tree() {
        let t = path(50);
        let a = RcTree::build(&t, 9).unwrap();
        let b = RcTree::build(&t, 9).unwrap();
        let shape = |rc: &RcTree| {
            rc.clusters().iter().map(|c| (c.rep, c.parent, c.height)).collect::<Vec<_>>()
        };
        assert_eq!(shape(&a), shape(&b));
    }

    #[test]
    fn lca_of_leaf_with_itself() {
        let t = path(6);
        let rc = RcTree::build(&t, 3).unwrap();
        let x = rc.vertex_leaf(4);
        assert_eq!(rc.rc_lca(x, x), x);
    }
}
