//! Structural checks for RC trees.

use super::{ClusterId, ClusterKind, RcTree, Slot};
use crate::graph::RootedTree;

/// Edges (named by child vertex) contained in a cluster, sorted.
pub fn cluster_edges(rc: &RcTree, id: ClusterId) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![id];
    while let Some(c) = stack.pop() {
        let cl = rc.cluster(c);
        match cl.kind {
            ClusterKind::LeafEdge => out.push(cl.rep),
            ClusterKind::LeafVertex => {}
            _ => stack.extend(cl.children().map(|(_, ch)| ch)),
        }
    }
    out.sort_unstable();
    out
}

/// Edges on a binary cluster's path from top boundary to bottom boundary,
/// in that order. Empty for non-binary clusters.
pub fn cluster_path(rc: &RcTree, id: ClusterId) -> Vec<usize> {
    let cl = rc.cluster(id);
    match cl.kind {
        ClusterKind::LeafEdge => vec![cl.rep],
        ClusterKind::Binary => {
            let mut p = cluster_path(rc, cl.top.expect("binary has top"));
            p.extend(cluster_path(rc, cl.bottom.expect("binary has bottom")));
            p
        }
        _ => Vec::new(),
    }
}

/// Checks the cluster invariants of `rc` against the tree it was built from:
/// every vertex and edge is a leaf exactly once, each cluster is the disjoint
/// union of its children, each non-leaf has exactly its representative as
/// vertex-leaf child, children share the representative as a boundary, binary
/// paths compose, and every root-to-vertex path is covered exactly by the
/// cluster paths met along the vertex's RC ancestry.
pub fn check_invariants(rc: &RcTree, t: &RootedTree) -> Result<(), String> {
    let n = t.n();
    let clusters = rc.clusters();
    // Reachability from the root: every cluster exactly once.
    let mut seen = vec![0u32; clusters.len()];
    let mut stack = vec![rc.root()];
    while let Some(c) = stack.pop() {
        seen[c] += 1;
        stack.extend(clusters[c].children().map(|(_, ch)| ch));
    }
    if let Some(c) = seen.iter().position(|&s| s != 1) {
        return Err(format!("cluster {c} reached {} times", seen[c]));
    }
    for v in 0..n {
        let leaf = rc.vertex_leaf(v);
        if clusters[leaf].kind != ClusterKind::LeafVertex || clusters[leaf].rep != v {
            return Err(format!("vertex {v} has no vertex leaf"));
        }
        match (t.parent(v), rc.edge_leaf(v)) {
            (Some(p), Some(e)) => {
                let cl = &clusters[e];
                if cl.kind != ClusterKind::LeafEdge
                    || cl.top_boundary != Some(p)
                    || cl.bottom_boundary != Some(v)
                {
                    return Err(format!("edge above {v} has a malformed leaf"));
                }
            }
            (None, None) => {}
            _ => return Err(format!("edge leaf mismatch at vertex {v}")),
        }
    }
    if clusters[rc.root()].kind != ClusterKind::Nullary || clusters[rc.root()].rep != t.root() {
        return Err("root cluster is not the nullary cluster of the tree root".into());
    }

    // Disjoint union of edge sets, computed bottom-up by merging.
    let mut edges: Vec<Vec<usize>> = vec![Vec::new(); clusters.len()];
    for (id, cl) in clusters.iter().enumerate() {
        match cl.kind {
            ClusterKind::LeafEdge => edges[id] = vec![cl.rep],
            ClusterKind::LeafVertex => {}
            _ => {
                let mut all: Vec<usize> = Vec::new();
                let mut count = 0;
                for (_, ch) in cl.children() {
                    count += edges[ch].len();
                    all.extend_from_slice(&edges[ch]);
                }
                all.sort_unstable();
                all.dedup();
                if all.len() != count {
                    return Err(format!("children of cluster {id} share edges"));
                }
                edges[id] = all;
            }
        }
    }
    if edges[rc.root()].len() != n.saturating_sub(1) {
        return Err("root cluster does not contain every edge".into());
    }

    for (id, cl) in clusters.iter().enumerate() {
        if cl.is_leaf() {
            continue;
        }
        let vertex_children: Vec<ClusterId> = cl
            .children()
            .filter(|&(_, ch)| clusters[ch].kind == ClusterKind::LeafVertex)
            .map(|(_, ch)| ch)
            .collect();
        if vertex_children != [rc.vertex_leaf(cl.rep)] {
            return Err(format!("cluster {id} does not have exactly its representative leaf"));
        }
        for (slot, ch) in cl.children() {
            let c = &clusters[ch];
            let ok = match slot {
                Slot::Rep => true,
                Slot::Top => {
                    c.top_boundary == cl.top_boundary && c.bottom_boundary == Some(cl.rep)
                }
                Slot::Bottom => {
                    c.top_boundary == Some(cl.rep) && c.bottom_boundary == cl.bottom_boundary
                }
                Slot::Unary(_) => {
                    c.kind == ClusterKind::Unary && c.top_boundary == Some(cl.rep)
                }
            };
            if !ok {
                return Err(format!("child {ch} of cluster {id} has wrong boundaries"));
            }
        }
        let expected_kind = match (cl.top, cl.bottom) {
            (Some(_), Some(_)) => ClusterKind::Binary,
            (Some(_), None) => ClusterKind::Unary,
            (None, None) => ClusterKind::Nullary,
            (None, Some(_)) => return Err(format!("cluster {id} has bottom without top")),
        };
        if cl.kind != expected_kind {
            return Err(format!("cluster {id} kind disagrees with its children"));
        }
    }

    // Path decomposition of every root-to-vertex path.
    for v in 0..n {
        let mut expected: Vec<usize> = Vec::new();
        let mut x = v;
        while let Some(p) = t.parent(x) {
            expected.push(x);
            x = p;
        }
        expected.sort_unstable();
        let mut covered: Vec<usize> = Vec::new();
        let mut cur = rc.vertex_leaf(v);
        while let Some(p) = clusters[cur].parent {
            let pc = &clusters[p];
            if clusters[cur].slot != Slot::Top {
                if let Some(top) = pc.top {
                    covered.extend(cluster_path(rc, top));
                }
            }
            cur = p;
        }
        let before = covered.len();
        covered.sort_unstable();
        covered.dedup();
        if covered.len() != before || covered != expected {
            return Err(format!("root path of vertex {v} is not covered exactly"));
        }
    }
    Ok(())
}
