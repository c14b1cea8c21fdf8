//! Brute-force references: exact minimum cuts, one-at-a-time replay of tree
//! operation sequences, and exhaustive 2-respecting cuts and bipartite
//! problems.
//!
//! These are deliberately simple and single-threaded. They ship with the
//! library so the command line tool can verify its own answers.

use crate::batch::{ComponentOp, Extremum, Lab, PathOp};
use crate::error::{Error, Result};
use crate::graph::{CutResult, RootedTree, UnionFind, WeightedGraph};
use crate::rc_tree::EulerTour;
use crate::two_respecting::{BipartiteProblem, BipartiteSolution, TwoCut};

/// Exact global minimum cut by Stoer and Wagner's maximum adjacency phases.
/// A disconnected graph yields weight 0 and one of its components.
pub fn stoer_wagner(g: &WeightedGraph) -> Result<CutResult> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument("minimum cut needs at least two vertices"));
    }
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edges() {
        w[e.u][e.v] += e.w;
        w[e.v][e.u] += e.w;
    }
    let mut members: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<(u64, Vec<usize>)> = None;
    while active.len() > 1 {
        let k = active.len();
        let mut key = vec![0u64; k];
        let mut added = vec![false; k];
        let (mut prev, mut last) = (usize::MAX, usize::MAX);
        for _ in 0..k {
            let mut pick = usize::MAX;
            for i in 0..k {
                if !added[i] && (pick == usize::MAX || key[i] > key[pick]) {
                    pick = i;
                }
            }
            added[pick] = true;
            prev = last;
            last = pick;
            for i in 0..k {
                if !added[i] {
                    key[i] += w[active[pick]][active[i]];
                }
            }
        }
        let (s, t) = (active[prev], active[last]);
        let phase = key[last];
        if best.as_ref().map_or(true, |(b, _)| phase < *b) {
            best = Some((phase, members[t].clone()));
        }
        let moved = std::mem::take(&mut members[t]);
        members[s].extend(moved);
        for i in 0..n {
            w[s][i] += w[t][i];
            w[i][s] = w[s][i];
        }
        w[s][s] = 0;
        active.remove(last);
    }
    let (weight, set) = best.expect("at least one phase");
    let mut side = vec![false; n];
    for v in set {
        side[v] = true;
    }
    debug_assert_eq!(crate::graph::cut_weight(g, &side).ok(), Some(weight));
    Ok(CutResult { side, weight, witness: None })
}

/// Minimum over all `2^(n-1) - 1` bipartitions, walked in Gray-code order.
pub fn enumerate_cuts(g: &WeightedGraph) -> Result<CutResult> {
    const LIMIT: usize = 20;
    let n = g.n();
    if n > LIMIT {
        return Err(Error::TooLarge { n, limit: LIMIT });
    }
    if n < 2 {
        return Err(Error::InvalidArgument("minimum cut needs at least two vertices"));
    }
    let mut adj = vec![Vec::new(); n];
    for e in g.edges() {
        adj[e.u].push((e.v, e.w));
        adj[e.v].push((e.u, e.w));
    }
    let mut side = vec![false; n];
    let mut current: i128 = 0;
    let mut best: Option<(u64, Vec<bool>)> = None;
    for i in 1u64..(1u64 << (n - 1)) {
        let x = i.trailing_zeros() as usize;
        for &(y, w) in &adj[x] {
            if side[x] == side[y] {
                current += w as i128;
            } else {
                current -= w as i128;
            }
        }
        side[x] = !side[x];
        let value = current as u64;
        if best.as_ref().map_or(true, |(b, _)| value < *b) {
            best = Some((value, side.clone()));
        }
    }
    let (weight, side) = best.expect("n >= 2 gives at least one cut");
    Ok(CutResult { side, weight, witness: None })
}

/// Replays path/subtree operations one at a time with direct tree walks.
/// `edge[c]` is the initial weight and label of the edge above `c`.
pub fn sequential_replay_path(
    t: &RootedTree,
    mode: Extremum,
    edge: &[Lab],
    ops: &[PathOp],
) -> Vec<Lab> {
    let mut cur: Vec<i64> = edge.iter().map(|l| l.w).collect();
    let depth = t.depths();
    let lab = |cur: &[i64], c: usize| Lab::new(cur[c], edge[c].id);
    let mut out = Vec::new();
    for op in ops {
        match *op {
            PathOp::AddPath { v, w } => {
                let mut x = v;
                while let Some(p) = t.parent(x) {
                    cur[x] += w;
                    x = p;
                }
            }
            PathOp::QuerySubtree { v } => {
                let mut best = mode.none();
                let mut stack: Vec<usize> = t.children(v).to_vec();
                while let Some(x) = stack.pop() {
                    best = mode.best(best, lab(&cur, x));
                    stack.extend_from_slice(t.children(x));
                }
                out.push(best);
            }
            PathOp::QueryEdge { child } => out.push(lab(&cur, child)),
            PathOp::QueryPath { u, v } => {
                let (mut a, mut b) = (u, v);
                let mut best = mode.none();
                while a != b {
                    if depth[a] >= depth[b] {
                        best = mode.best(best, lab(&cur, a));
                        a = t.parent(a).expect("deeper vertex has a parent");
                    } else {
                        best = mode.best(best, lab(&cur, b));
                        b = t.parent(b).expect("deeper vertex has a parent");
                    }
                }
                out.push(best);
            }
        }
    }
    out
}

/// Replays component-weight operations with a union-find and weight array.
pub fn sequential_replay_component(
    t: &RootedTree,
    weight: &[i64],
    joined: &[bool],
    ops: &[ComponentOp],
) -> Vec<i64> {
    let n = t.n();
    let mut w = weight.to_vec();
    let mut join = joined.to_vec();
    let mut out = Vec::new();
    for op in ops {
        match *op {
            ComponentOp::SubtractWeight { v, w: x } => w[v] -= x,
            ComponentOp::JoinEdge { child } => join[child] = true,
            ComponentOp::QueryWeight { v } => {
                let mut dsu = UnionFind::new(n);
                for c in 0..n {
                    if let Some(p) = t.parent(c) {
                        if join[c] {
                            dsu.union(c, p);
                        }
                    }
                }
                let r = dsu.find(v);
                out.push((0..n).filter(|&x| dsu.find(x) == r).map(|x| w[x]).sum());
            }
        }
    }
    out
}

/// Minimum over every cut obtained by removing one or two edges of `t`.
pub fn brute_2respecting(g: &WeightedGraph, t: &RootedTree) -> Result<TwoCut> {
    const LIMIT: usize = 200;
    if t.n() > LIMIT {
        return Err(Error::TooLarge { n: t.n(), limit: LIMIT });
    }
    let et = EulerTour::new(t);
    let tree_edges: Vec<usize> = (0..t.n()).filter(|&v| t.parent(v).is_some()).collect();
    let below = |c: usize, v: usize| et.is_ancestor(c, v);
    let mut best: Option<TwoCut> = None;
    for (i, &a) in tree_edges.iter().enumerate() {
        for &b in &tree_edges[i..] {
            let side = |v: usize| if a == b { below(a, v) } else { below(a, v) ^ below(b, v) };
            let value: u64 =
                g.edges().iter().filter(|e| side(e.u) != side(e.v)).map(|e| e.w).sum();
            let edges = if a == b { vec![a] } else { vec![a, b] };
            if best.as_ref().map_or(true, |c| value < c.value) {
                best = Some(TwoCut { value, edges });
            }
        }
    }
    best.ok_or(Error::InvalidArgument("tree has no edges"))
}

/// Exhaustive solution of a bipartite problem: every pair of cuttable edges,
/// each scored by scanning all crossing edges.
pub fn brute_bipartite(bp: &BipartiteProblem) -> Option<BipartiteSolution> {
    const UNCUTTABLE: u64 = 1 << 62;
    let (e1, e2) = (EulerTour::new(&bp.t1), EulerTour::new(&bp.t2));
    let cuttable = |t: &RootedTree| -> Vec<usize> {
        (0..t.n()).filter(|&v| t.parent(v).is_some() && t.weight(v) < UNCUTTABLE).collect()
    };
    let mut best: Option<BipartiteSolution> = None;
    for a in cuttable(&bp.t1) {
        for b in cuttable(&bp.t2) {
            let shared: i64 = bp
                .crossing
                .iter()
                .filter(|&&(u, v, _)| e1.is_ancestor(a, u) && e2.is_ancestor(b, v))
                .map(|c| c.2)
                .sum();
            let s = BipartiteSolution {
                value: bp.t1.weight(a) as i64 + bp.t2.weight(b) as i64 + shared,
                e1: bp.t1.edge_id(a),
                e2: bp.t2.edge_id(b),
            };
            best = Some(best.map_or(s, |o| o.min(s)));
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 9)]).unwrap();
        assert_eq!(stoer_wagner(&g).unwrap().weight, 9);
        assert_eq!(enumerate_cuts(&g).unwrap().weight, 9);
    }

    #[test]
    fn triangle() {
        let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        assert_eq!(stoer_wagner(&g).unwrap().weight, 3);
        assert_eq!(enumerate_cuts(&g).unwrap().weight, 3);
    }

    #[test]
    fn path_graph_min_edge() {
        let g = WeightedGraph::new(4, [(0, 1, 5), (1, 2, 2), (2, 3, 7)]).unwrap();
        assert_eq!(enumerate_cuts(&g).unwrap().weight, 2);
    }

    #[test]
    fn enumeration_limit() {
        let g = WeightedGraph::new(21, (1..21).map(|i| (i - 1, i, 1))).unwrap();
        assert!(matches!(enumerate_cuts(&g), Err(Error::TooLarge { n: 21, .. })));
    }

    #[test]
    fn disconnected_gives_zero() {
        let g = WeightedGraph::new(4, [(0, 1, 5), (2, 3, 2)]).unwrap();
        assert_eq!(stoer_wagner(&g).unwrap().weight, 0);
    }

    #[test]
    fn brute_on_tree_is_min_edge() {
        let g = WeightedGraph::new(4, [(0, 1, 5), (1, 2, 2), (1, 3, 7)]).unwrap();
        let t = RootedTree::from_edges(4, 0, g.edges()).unwrap();
        assert_eq!(brute_2respecting(&g, &t).unwrap().value, 2);
    }

    #[test]
    fn brute_path_with_chord() {
        let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 4)]).unwrap();
        let tree: Vec<_> = g.edges()[..2].to_vec();
        let t = RootedTree::from_edges(3, 0, &tree).unwrap();
        assert_eq!(brute_2respecting(&g, &t).unwrap().value, 2);
    }
}
