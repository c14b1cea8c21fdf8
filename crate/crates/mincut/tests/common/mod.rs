//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use mincut::batch::{ComponentOp, PathOp};
use mincut::graph::{Edge, RootedTree, WeightedGraph};
use mincut::rc_tree::{EulerTour, RcTree};
use mincut::rng::Rng;
use rand::Rng as _;

/// Random tree where every vertex has degree at most 3, rooted at a
/// random vertex.
pub fn ternary_tree(n: usize, max_w: u64, rng: &mut Rng) -> RootedTree {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut open: Vec<usize> = vec![0];
    for v in 1..n {
        let i = rng.gen_range(0..open.len());
        let p = open[i];
        degree[p] += 1;
        degree[v] += 1;
        if degree[p] == 3 {
            open.swap_remove(i);
        }
        open.push(v);
        edges.push(Edge { u: p, v, w: rng.gen_range(1..=max_w), eid: v - 1 });
    }
    // A leaf root keeps every vertex at no more than three neighbours.
    let root = rng.gen_range(0..n);
    RootedTree::from_edges(n, root, &edges).unwrap()
}

/// Random tree with unrestricted degrees, rooted at 0.
pub fn any_tree(n: usize, max_w: u64, rng: &mut Rng) -> RootedTree {
    let edges: Vec<Edge> = (1..n)
        .map(|v| Edge { u: rng.gen_range(0..v), v, w: rng.gen_range(1..=max_w), eid: v - 1 })
        .collect();
    RootedTree::from_edges(n, 0, &edges).unwrap()
}

/// Random connected multigraph: a random spanning tree plus extra edges.
pub fn connected_graph(n: usize, m: usize, max_w: u64, rng: &mut Rng) -> WeightedGraph {
    assert!(n >= 2 && m + 1 >= n);
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut edges = Vec::with_capacity(m);
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((perm[i], perm[j], rng.gen_range(1..=max_w)));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            edges.push((u, v, rng.gen_range(1..=max_w)));
        }
    }
    WeightedGraph::new(n, edges).unwrap()
}

/// A random spanning tree of a connected graph, hung from `root`.
pub fn random_spanning_tree(g: &WeightedGraph, root: usize, rng: &mut Rng) -> RootedTree {
    let mut order: Vec<usize> = (0..g.m()).collect();
    for i in (1..order.len()).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    let mut dsu = mincut::graph::UnionFind::new(g.n());
    let chosen: Vec<Edge> = order
        .into_iter()
        .map(|i| g.edges()[i])
        .filter(|e| dsu.union(e.u, e.v))
        .collect();
    RootedTree::from_edges(g.n(), root, &chosen).unwrap()
}

/// Random mix of path additions and all three query kinds.
pub fn path_ops(t: &RootedTree, rc: &RcTree, k: usize, rng: &mut Rng) -> Vec<mincut::batch::PathOp> {
    let n = t.n();
    let et = EulerTour::new(t);
    let mut ops = Vec::with_capacity(k + 4);
    while ops.len() < k {
        match rng.gen_range(0..5) {
            0 | 1 => {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let w = rng.gen_range(-20..=20);
                if rng.gen_bool(0.5) {
                    ops.push(PathOp::AddPath { v: u, w });
                } else {
                    ops.extend(mincut::batch::add_path_ops(&et, u, v, w));
                }
            }
            2 => ops.push(PathOp::QuerySubtree { v: rng.gen_range(0..n) }),
            3 if n > 1 => {
                let c = rng.gen_range(0..n);
                if c != t.root() {
                    ops.push(PathOp::QueryEdge { child: c });
                }
            }
            _ if n > 1 => {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v {
                    ops.extend(mincut::batch::query_path_ops(rc, u, v).unwrap());
                }
            }
            _ => {}
        }
    }
    ops
}

/// Random component-weight sequence: weight changes, joins and queries.
pub fn component_ops(t: &RootedTree, k: usize, rng: &mut Rng) -> Vec<ComponentOp> {
    let n = t.n();
    (0..k)
        .filter_map(|_| match rng.gen_range(0..3) {
            0 => Some(ComponentOp::SubtractWeight { v: rng.gen_range(0..n), w: rng.gen_range(-9..=9) }),
            1 => {
                let c = rng.gen_range(0..n);
                (c != t.root()).then_some(ComponentOp::JoinEdge { child: c })
            }
            _ => Some(ComponentOp::QueryWeight { v: rng.gen_range(0..n) }),
        })
        .collect()
}
