//! Random contraction simulated on a minimum spanning tree.
//!
//! Contracting edges in a random weighted order merges vertices exactly as
//! Kruskal's algorithm merges components under that order. An edge of the
//! graph becomes internal when the heaviest (latest) spanning tree edge on its
//! tree path is contracted. With vertex weights equal to weighted degrees and
//! each internal edge subtracting its weight from both endpoints, the weight
//! of a component is the weight of the edges leaving it.

use rand::RngCore;
use rayon::prelude::*;

use crate::batch::{
    evaluate_batch, query_path_ops, ComponentOp, ComponentWeight, Extremum, Lab, PathOp, PathSubtree,
};
use crate::error::{Error, Result};
use crate::graph::{minimum_spanning_tree, CutResult, UnionFind, WeightedGraph};
use crate::rc_tree::{expand_to_ternary, RcTree};
use crate::rng::Rng;
use crate::sampling::{log2_ceil, weighted_permutation};

/// Number of trials for a `k`-approximation: `ceil(alpha * n^(2/k) * ln n)`,
/// at least 1.
pub fn trials_for(n: usize, k: u32, alpha: f64) -> usize {
    let n = n.max(2) as f64;
    let t = alpha * n.powf(2.0 / k.max(1) as f64) * n.ln();
    (t.ceil() as usize).max(1)
}

/// Best cut seen while contracting in one random order: its weight and the
/// side containing the witnessing component.
fn trial(g: &WeightedGraph, rng: &Rng) -> Result<(u64, Vec<bool>)> {
    let n = g.n();
    let order = weighted_permutation(g, rng);
    let mut rank = vec![0i64; g.eid_bound()];
    for (r, &i) in order.iter().enumerate() {
        rank[g.edges()[i].eid] = r as i64;
    }
    let mst = minimum_spanning_tree(g, |e| rank[e.eid])?;
    let ex = expand_to_ternary(&mst);
    let t = &ex.tree;
    let rc = RcTree::build(t, rng.fork(u64::MAX).next_u64())?;

    // Heaviest tree edge on every graph edge's path, labelled by child vertex.
    let labels: Vec<Lab> = (0..t.n())
        .map(|c| {
            let r = if t.parent(c).is_none() || ex.chain[c] { -1 } else { rank[t.edge_id(c)] };
            Lab::new(r, c)
        })
        .collect();
    let mut queries: Vec<PathOp> = Vec::with_capacity(2 * g.m());
    for e in g.edges() {
        queries.extend(query_path_ops(&rc, e.u, e.v)?);
    }
    let heaviest = evaluate_batch(&rc, &PathSubtree::with_weights(Extremum::Max, labels), &queries)?;
    let mut internal: Vec<Vec<usize>> = vec![Vec::new(); t.n()];
    for (i, pair) in heaviest.chunks(2).enumerate() {
        let best = Extremum::Max.best(pair[0], pair[1]);
        internal[best.id].push(i);
    }

    // Contraction in rank order; the final join leaves a single component.
    let mut steps: Vec<usize> =
        (0..t.n()).filter(|&c| t.parent(c).is_some() && !ex.chain[c]).collect();
    steps.sort_unstable_by_key(|&c| rank[t.edge_id(c)]);
    let degrees = g.weighted_degrees();
    let weight: Vec<i64> = (0..t.n()).map(|v| if v < n { degrees[v] as i64 } else { 0 }).collect();
    let opset = ComponentWeight::new(weight, ex.chain.clone());
    let mut ops = Vec::with_capacity(2 * g.m() + 2 * steps.len());
    for (j, &c) in steps.iter().enumerate() {
        ops.push(ComponentOp::JoinEdge { child: c });
        for &i in &internal[c] {
            let e = g.edges()[i];
            ops.push(ComponentOp::SubtractWeight { v: e.u, w: e.w as i64 });
            ops.push(ComponentOp::SubtractWeight { v: e.v, w: e.w as i64 });
        }
        if j + 1 < steps.len() {
            ops.push(ComponentOp::QueryWeight { v: c });
        }
    }
    let values = evaluate_batch(&rc, &opset, &ops)?;
    let Some((best, j)) = values.iter().enumerate().map(|(j, &v)| (v, j)).min() else {
        return Err(Error::Degenerate);
    };

    // Replay the first j + 1 merges to recover the component.
    let mut dsu = UnionFind::new(n);
    for &c in &steps[..=j] {
        let p = t.parent(c).expect("step edges have parents");
        dsu.union(ex.origin[c], ex.origin[p]);
    }
    let root = dsu.find(ex.origin[steps[j]]);
    let side: Vec<bool> = (0..n).map(|v| dsu.find(v) == root).collect();
    Ok((best as u64, side))
}

/// Minimum cut found over `trials` independent contraction orders and all
/// single-vertex cuts. Every reported value is the weight of the returned
/// partition.
pub fn k_approx_min_cut(g: &WeightedGraph, trials: usize, rng: &Rng) -> Result<CutResult> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if trials == 0 {
        return Err(Error::InvalidArgument("at least one trial is required"));
    }
    let degrees = g.weighted_degrees();
    let (dmin, dv) = degrees.iter().enumerate().map(|(v, &d)| (d, v)).min().expect("n >= 2");
    let mut best = (dmin, 0usize, (0..g.n()).map(|v| v == dv).collect::<Vec<bool>>());
    if g.n() > 2 {
        let results: Vec<(u64, Vec<bool>)> =
            (0..trials).into_par_iter().map(|i| trial(g, &rng.fork(i as u64))).collect::<Result<_>>()?;
        for (i, (value, side)) in results.into_iter().enumerate() {
            if (value, i + 1) < (best.0, best.1) {
                best = (value, i + 1, side);
            }
        }
    }
    let cut = CutResult::from_side(g, best.2)?;
    debug_assert_eq!(cut.weight, best.0);
    Ok(cut)
}

/// `ceil(log2 n)`-approximation with the matching trial count.
pub fn logn_approx(g: &WeightedGraph, alpha: f64, rng: &Rng) -> Result<CutResult> {
    let k = log2_ceil(g.n());
    k_approx_min_cut(g, trials_for(g.n(), k, alpha), rng)
}
