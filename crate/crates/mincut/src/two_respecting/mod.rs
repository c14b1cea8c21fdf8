//! Minimum cuts that cross at most two edges of a spanning tree.
//!
//! For a tree edge `e` let `F(e)` be the total weight of graph edges whose
//! tree path uses `e`. Removing `e` alone cuts `F(e)`; removing `e` and `f`
//! cuts `F(e) + F(f) - 2 w(e, f)`, where `w(e, f)` is the weight of graph
//! edges whose paths use both. Three families of candidates cover every
//! choice:
//!
//! * one edge: `min F(e)`;
//! * `f` below `e`: one batch of path additions along an Euler tour
//!   ([`descendant_case`]);
//! * `e` and `f` in different subtrees of their common ancestor `z`: one
//!   bipartite problem per `z`, built from the graph edges whose endpoints
//!   have `z` as their lowest common ancestor ([`generate_bipartite`],
//!   [`solve_bipartite`]).
//!
//! Pairs whose paths share no graph edge never beat the better of the two
//! single-edge cuts, so bipartite problems only need the edges above.
//!
//! The input tree may have any degree. Internally it gains a new root above
//! the old one and is expanded so that every vertex has at most three
//! neighbours, hence at most two children; the added edges never take part
//! in a cut, and ancestor relations between real edges are unchanged.

mod bipartite;
mod descendant;

pub use bipartite::{generate_bipartite, solve_bipartite, BipartiteProblem, BipartiteSolution};
pub use descendant::descendant_case;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::batch::{add_path_ops, evaluate_batch, Extremum, Lab, PathOp, PathSubtree, INF};
use crate::error::{Error, Result};
use crate::graph::{RootedTree, WeightedGraph};
use crate::rc_tree::{expand_to_ternary, EulerTour, RcTree};

/// Seed for the RC trees built here; it only affects their shape.
const RC_SEED: u64 = 0x5eed_2e5;

/// A cut given by removing one or two tree edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCut {
    pub value: u64,
    /// Tree edges named by their child vertex, ascending.
    pub edges: Vec<usize>,
}

impl TwoCut {
    /// Side of every vertex: whether its root path crosses an odd number of
    /// the removed edges.
    pub fn side(&self, t: &RootedTree) -> Vec<bool> {
        let et = EulerTour::new(t);
        (0..t.n())
            .map(|v| self.edges.iter().filter(|&&c| et.is_ancestor(c, v)).count() % 2 == 1)
            .collect()
    }
}

/// The expanded, rerooted tree every family works on.
pub(crate) struct Work {
    /// `edge_id(c)` is the original child vertex of the edge above `c`, or
    /// `usize::MAX` for expansion edges.
    pub(crate) tree: RootedTree,
    pub(crate) et: EulerTour,
    pub(crate) rc: RcTree,
    /// `F` per edge (by child vertex); `INF` for expansion edges.
    pub(crate) f: Vec<i64>,
}

impl Work {
    pub(crate) fn new(g: &WeightedGraph, t: &RootedTree) -> Result<Self> {
        if t.n() != g.n() || t.n() < 2 {
            return Err(Error::InvalidTree("tree must span the graph and have an edge"));
        }
        if g.total_weight() >= 1 << 60 {
            return Err(Error::WeightOverflow);
        }
        // A new top vertex `n` above the root, joined by an uncuttable edge,
        // leaves the old root room for three children after expansion.
        let n = t.n();
        let mut parent = t.parents().to_vec();
        parent[t.root()] = Some(n);
        parent.push(None);
        let mut label: Vec<usize> = (0..n).collect();
        label[t.root()] = usize::MAX;
        label.push(usize::MAX);
        let named = RootedTree::from_parents(n, parent, vec![0; n + 1], label)?;
        let tree = expand_to_ternary(&named).tree;
        let et = EulerTour::new(&tree);
        let rc = RcTree::build(&tree, RC_SEED)?;

        let zero = (0..tree.n()).map(|c| Lab::new(0, c)).collect();
        let mut ops: Vec<PathOp> = Vec::with_capacity(3 * g.m() + tree.n());
        for e in g.edges() {
            ops.extend(add_path_ops(&et, e.u, e.v, e.w as i64));
        }
        let edges: Vec<usize> = (0..tree.n()).filter(|&c| tree.parent(c).is_some()).collect();
        ops.extend(edges.iter().map(|&c| PathOp::QueryEdge { child: c }));
        let out = evaluate_batch(&rc, &PathSubtree::with_weights(Extremum::Min, zero), &ops)?;
        let mut f = vec![INF; tree.n()];
        for (&c, lab) in edges.iter().zip(out) {
            if tree.edge_id(c) != usize::MAX {
                f[c] = lab.w;
            }
        }
        Ok(Self { tree, et, rc, f })
    }

    pub(crate) fn is_real(&self, c: usize) -> bool {
        self.tree.parent(c).is_some() && self.tree.edge_id(c) != usize::MAX
    }

    /// Labels for path/subtree batches: `F` on real edges, the sentinel on
    /// expansion edges.
    pub(crate) fn labels(&self) -> Vec<Lab> {
        (0..self.tree.n()).map(|c| Lab::new(if self.is_real(c) { self.f[c] } else { INF }, c)).collect()
    }

    /// Best single-edge cut.
    pub(crate) fn one_respecting(&self) -> Option<Candidate> {
        (0..self.tree.n())
            .filter(|&c| self.is_real(c))
            .map(|c| Candidate::new(self.f[c], &[c]))
            .min()
    }

    /// Converts a candidate over working-tree edges to one over the input tree.
    pub(crate) fn to_cut(&self, c: &Candidate) -> TwoCut {
        let mut edges: Vec<usize> = c.edges.iter().map(|&x| self.tree.edge_id(x)).collect();
        edges.sort_unstable();
        edges.dedup();
        TwoCut { value: u64::try_from(c.value).expect("cut weights are non-negative"), edges }
    }
}

/// A candidate cut over working-tree edges, ordered by value then edges.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Candidate {
    pub(crate) value: i64,
    pub(crate) edges: Vec<usize>,
}

impl Candidate {
    pub(crate) fn new(value: i64, edges: &[usize]) -> Self {
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        Self { value, edges }
    }
}

/// `F(e)` for every edge of `t`, indexed by child vertex (0 at the root).
pub fn f_e_weights(g: &WeightedGraph, t: &RootedTree) -> Result<Vec<u64>> {
    let work = Work::new(g, t)?;
    let mut out = vec![0u64; t.n()];
    for c in 0..work.tree.n() {
        if work.is_real(c) {
            out[work.tree.edge_id(c)] = work.f[c] as u64;
        }
    }
    Ok(out)
}

/// Minimum cut of `g` among those crossing one or two edges of `t`.
pub fn min_2respecting(g: &WeightedGraph, t: &RootedTree) -> Result<TwoCut> {
    let work = Work::new(g, t)?;
    let mut best = work.one_respecting().expect("the tree has an edge");
    if let Some(c) = descendant::descendant_candidate(&work, g)? {
        best = best.min(c);
    }
    let problems = bipartite::problems(&work, g);
    let solved: Vec<Option<Candidate>> = problems
        .par_iter()
        .map(|bp| {
            solve_bipartite(bp).map(|s| Candidate::new(s.value, &[s.e1, s.e2]))
        })
        .collect();
    for c in solved.into_iter().flatten() {
        best = best.min(c);
    }
    Ok(work.to_cut(&best))
}
