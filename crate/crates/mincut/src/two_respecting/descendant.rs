//! Pairs of tree edges where one lies below the other.
//!
//! Walk the tree depth first. On entering edge `e`, every graph edge whose
//! path climbs through `e` to its top adds `-2w` to the part of its path on
//! that side. While the walk is inside `e`'s subtree, exactly the graph
//! edges using `e` are active there, so each edge `f` below `e` carries
//! `F(f) - 2 w(e, f)` and a subtree query at `e`'s lower endpoint finds the
//! best partner. Leaving `e` undoes its additions. All of it is one batch.

use super::{Candidate, TwoCut, Work};
use crate::batch::{evaluate_batch, Extremum, PathOp, PathSubtree};
use crate::error::Result;
use crate::graph::{RootedTree, WeightedGraph};
use crate::rc_tree::{euler_tour, Direction};

/// Best cut crossing two ancestor-related edges of `t`, or a single edge of
/// `t` if that is better.
pub fn descendant_case(g: &WeightedGraph, t: &RootedTree) -> Result<TwoCut> {
    let work = Work::new(g, t)?;
    let single = work.one_respecting().expect("the tree has an edge");
    let best = match descendant_candidate(&work, g)? {
        Some(c) => c.min(single),
        None => single,
    };
    Ok(work.to_cut(&best))
}

pub(crate) fn descendant_candidate(work: &Work, g: &WeightedGraph) -> Result<Option<Candidate>> {
    let t = &work.tree;
    let et = &work.et;
    // Per top edge: (endpoint, lca, weight) of the path sides it heads.
    let mut heads: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); t.n()];
    for e in g.edges() {
        let z = et.lca(e.u, e.v);
        for s in [e.u, e.v] {
            if s == z {
                continue;
            }
            let top = *t
                .children(z)
                .iter()
                .find(|&&c| et.is_ancestor(c, s))
                .expect("endpoint lies below its lca");
            heads[top].push((s, z, e.w as i64));
        }
    }
    let mut ops: Vec<PathOp> = Vec::with_capacity(4 * g.m() + t.n());
    let mut queried: Vec<usize> = Vec::with_capacity(t.n());
    for (c, dir) in euler_tour(t) {
        let sign = if dir == Direction::Down { 1 } else { -1 };
        for &(s, z, w) in &heads[c] {
            ops.push(PathOp::AddPath { v: s, w: -2 * w * sign });
            ops.push(PathOp::AddPath { v: z, w: 2 * w * sign });
        }
        if dir == Direction::Down && work.is_real(c) {
            ops.push(PathOp::QuerySubtree { v: c });
            queried.push(c);
        }
    }
    if cfg!(debug_assertions) {
        // Every addition was undone: the tree is back to its initial weights.
        ops.extend((0..t.n()).filter(|&c| t.parent(c).is_some()).map(|c| PathOp::QueryEdge { child: c }));
    }
    let labels = work.labels();
    let out = evaluate_batch(&work.rc, &PathSubtree::with_weights(Extremum::Min, labels.clone()), &ops)?;
    if cfg!(debug_assertions) {
        let tail = &out[queried.len()..];
        let edges = (0..t.n()).filter(|&c| t.parent(c).is_some());
        for (c, lab) in edges.zip(tail) {
            debug_assert_eq!(*lab, labels[c], "descendant batch left edge {c} changed");
        }
    }
    Ok(queried
        .iter()
        .zip(&out)
        .filter(|(_, lab)| !lab.is_sentinel())
        .map(|(&c, lab)| Candidate::new(work.f[c] + lab.w, &[c, lab.id]))
        .min())
}
