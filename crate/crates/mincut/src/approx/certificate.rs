//! Scan-first search forests and sparse connectivity certificates.

use std::collections::VecDeque;

use crate::graph::{Edge, WeightedGraph};

/// Scan-first search over the edges with positive `residual`. Vertices are
/// numbered in breadth-first order from `r` (then from the smallest unvisited
/// vertex of each further component), and every other vertex attaches to its
/// neighbour with the smallest number, using the lowest-index edge to it.
/// Returns, per vertex, the index of its attaching edge.
fn scan(n: usize, edges: &[Edge], residual: &[u64], adj: &[Vec<usize>], r: usize) -> Vec<Option<usize>> {
    let mut num = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for start in std::iter::once(r).chain(0..n) {
        if num[start] != usize::MAX {
            continue;
        }
        num[start] = next;
        next += 1;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for &i in &adj[x] {
                let y = edges[i].other(x);
                if residual[i] > 0 && num[y] == usize::MAX {
                    num[y] = next;
                    next += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    (0..n)
        .map(|v| {
            adj[v]
                .iter()
                .filter(|&&i| residual[i] > 0)
                .map(|&i| (num[edges[i].other(v)], i))
                .filter(|&(k, _)| k < num[v])
                .min()
                .map(|(_, i)| i)
        })
        .collect()
}

/// Scan-first search forest of `g` from `r`: for every vertex, the index
/// (into `g.edges()`) of the edge to its parent, `None` for the root of each
/// component.
pub fn scan_first_search(g: &WeightedGraph, r: usize) -> Vec<Option<usize>> {
    let residual: Vec<u64> = g.edges().iter().map(|e| e.w).collect();
    scan(g.n(), g.edges(), &residual, &g.incidence(), r)
}

/// Per edge: units taken into a `k`-round certificate, and the last round
/// (1-based, 0 if none) that took a unit.
pub(crate) fn certificate_rounds(g: &WeightedGraph, k: u64) -> (Vec<u64>, Vec<u64>) {
    let adj = g.incidence();
    let mut residual: Vec<u64> = g.edges().iter().map(|e| e.w).collect();
    let mut taken = vec![0u64; g.m()];
    let mut last = vec![0u64; g.m()];
    let mut round = 0u64;
    while round < k {
        let forest: Vec<usize> = scan(g.n(), g.edges(), &residual, &adj, 0).into_iter().flatten().collect();
        if forest.is_empty() {
            break;
        }
        // The forest depends only on which edges have positive residual, so
        // it repeats until one of its edges runs out.
        let repeat = forest.iter().map(|&i| residual[i]).min().expect("non-empty").min(k - round);
        for &i in &forest {
            residual[i] -= repeat;
            taken[i] += repeat;
            last[i] = round + repeat;
        }
        round += repeat;
    }
    (taken, last)
}

/// Union of `k` scan-first search forests, each taking one unit of weight
/// from every edge it uses. Every cut of weight at most `k` in `g` has the
/// same weight in the certificate, whose total weight is at most `k (n - 1)`.
pub fn sparse_certificate(g: &WeightedGraph, k: u64) -> WeightedGraph {
    let (taken, _) = certificate_rounds(g, k);
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .zip(taken)
        .filter(|(_, t)| *t > 0)
        .map(|(e, t)| Edge { w: t, ..*e })
        .collect();
    WeightedGraph::from_edges(g.n(), edges).expect("subgraph of a valid graph")
}
