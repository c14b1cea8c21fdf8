//! Spanning tree packing on a sampled skeleton.
//!
//! The skeleton's multiplicities act as capacities. Each round takes a
//! minimum spanning tree under the key `load / multiplicity` and adds one to
//! the load of its edges, so heavily used edges become expensive. A few of
//! the packed trees are then sampled and lifted back to the input graph.

use std::cmp::Ordering;

use rand::Rng as _;

use crate::approx::{constant_approx_bounded, logn_approx, Constants};
use crate::error::{Error, Result};
use crate::graph::{minimum_spanning_tree, Edge, RootedTree, UnionFind, WeightedGraph};
use crate::rng::Rng;
use crate::sampling::{log2_ceil, low_weight_transform, skeleton, Prob, Skeleton};

/// `load / mult`, compared exactly by cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Ratio {
    load: u64,
    mult: u64,
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.load as u128 * other.mult as u128).cmp(&(other.load as u128 * self.mult as u128))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Trees packed into a graph, as edge indices, with final per-edge loads.
#[derive(Debug, Clone)]
pub struct Packing {
    pub trees: Vec<Vec<usize>>,
    /// Indexed like the graph's edge list.
    pub loads: Vec<u64>,
}

/// Runs `rounds` rounds of minimum-load spanning trees on a connected graph
/// whose weights are multiplicities.
pub fn pack_rounds(s: &WeightedGraph, rounds: usize) -> Result<Packing> {
    let mut index = vec![usize::MAX; s.eid_bound()];
    for (i, e) in s.edges().iter().enumerate() {
        index[e.eid] = i;
    }
    let mut loads = vec![0u64; s.m()];
    let mut trees = Vec::with_capacity(rounds);
    for _ in 0..rounds {
        let t = minimum_spanning_tree(s, |e| Ratio { load: loads[index[e.eid]], mult: e.w })?;
        let edges: Vec<usize> =
            (0..t.n()).filter(|&v| t.parent(v).is_some()).map(|v| index[t.edge_id(v)]).collect();
        for &i in &edges {
            loads[i] += 1;
        }
        trees.push(edges);
    }
    Ok(Packing { trees, loads })
}

/// Default number of trees: `ceil(delta * log2 n)`, at least 1.
pub fn default_tree_count(n: usize, delta: f64) -> usize {
    ((delta * (n.max(2) as f64).log2()).ceil() as usize).max(1)
}

/// Spanning trees of `g`, rooted at vertex 0, such that with high probability
/// the minimum cut crosses at most two edges of one of them.
pub fn pack_trees(g: &WeightedGraph, consts: &Constants, tree_count: usize, rng: &Rng) -> Result<Vec<RootedTree>> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if tree_count == 0 {
        return Err(Error::InvalidArgument("at least one tree is required"));
    }
    let c0 = logn_approx(g, consts.alpha, &rng.fork(1))?;
    let tr = low_weight_transform(g, c0.weight)?;
    let h = &tr.graph;
    let approx = constant_approx_bounded(h, consts, &rng.fork(2))?;
    let l = log2_ceil(h.n()) as usize;
    let p = Prob::from_f64_floor((consts.gamma * l as f64 / approx.cut.weight as f64).min(1.0))?;
    let mut skel: Skeleton = skeleton(h, p, &rng.fork(3))?;
    if !skel.graph.is_connected() {
        skel = skeleton(h, p.double(), &rng.fork(4))?;
        if !skel.graph.is_connected() {
            return Err(Error::SkeletonDisconnected);
        }
    }
    let rounds = l * l;
    let packing = pack_rounds(&skel.graph, rounds)?;

    // Distinct trees chosen uniformly by a partial shuffle.
    let mut picker = rng.fork(5);
    let mut idx: Vec<usize> = (0..rounds).collect();
    let take = tree_count.min(rounds);
    for i in 0..take {
        let j = picker.gen_range(i..rounds);
        idx.swap(i, j);
    }
    let mut chosen = idx[..take].to_vec();
    chosen.sort_unstable();

    let mut by_eid = vec![usize::MAX; g.eid_bound()];
    for (i, e) in g.edges().iter().enumerate() {
        by_eid[e.eid] = i;
    }
    chosen
        .into_iter()
        .map(|r| {
            let eids = packing.trees[r].iter().map(|&i| skel.graph.edges()[i].eid);
            lift_tree(g, eids.map(|eid| by_eid[eid]), c0.weight)
        })
        .collect()
}

/// Spanning tree of `g` made of the given edges plus edges heavier than
/// `heavy` (which connect the inside of every contracted vertex), then any
/// remaining edges.
fn lift_tree(g: &WeightedGraph, tree: impl Iterator<Item = usize>, heavy: u64) -> Result<RootedTree> {
    let mut dsu = UnionFind::new(g.n());
    let mut kept: Vec<Edge> = Vec::with_capacity(g.n() - 1);
    let mut add = |e: Edge, dsu: &mut UnionFind| {
        if dsu.union(e.u, e.v) {
            kept.push(e);
        }
    };
    for i in tree {
        add(g.edges()[i], &mut dsu);
    }
    for e in g.edges().iter().filter(|e| e.w > heavy) {
        add(*e, &mut dsu);
    }
    for e in g.edges() {
        add(*e, &mut dsu);
    }
    RootedTree::from_edges(g.n(), 0, &kept)
}
