//! Matula-style `(2 + eps)`-approximation by repeated certificate contraction.

use super::certificate::certificate_rounds;
use crate::error::{Error, Result};
use crate::graph::{contract, CutResult, UnionFind, WeightedGraph};

/// Approximate minimum cut within a factor `2 + eps`.
///
/// Each round records the minimum weighted degree `d` of the current
/// contracted graph as a candidate, builds a certificate with
/// `k = ceil(d / (2 + eps))` rounds, and contracts every edge whose endpoints
/// the certificate shows to be `k`-connected: edges with weight left over
/// after the last round, and edges the last round used. Cuts lighter than `k`
/// survive contraction, and when the minimum cut is at least `k` the degree
/// `d` is already within `2 + eps`. The returned cut is the best degree
/// candidate, as a partition of the original vertices.
pub fn matula_approx(g: &WeightedGraph, eps: f64) -> Result<CutResult> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !(eps > 0.0) {
        return Err(Error::InvalidArgument("eps must be positive"));
    }
    let mut h = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    let mut best: Option<(u64, usize, Vec<usize>)> = None;
    while h.n() > 1 {
        let degrees = h.weighted_degrees();
        let (d, v) = degrees.iter().enumerate().map(|(v, &d)| (d, v)).min().expect("n > 1");
        if best.as_ref().map_or(true, |b| d < b.0) {
            best = Some((d, v, map.clone()));
        }
        let k = ((d as f64 / (2.0 + eps)).ceil() as u64).clamp(1, d);
        let (taken, last) = certificate_rounds(&h, k);
        let mut dsu = UnionFind::new(h.n());
        let mut merged = false;
        for (i, e) in h.edges().iter().enumerate() {
            if taken[i] < e.w || last[i] == k {
                merged |= dsu.union(e.u, e.v);
            }
        }
        if !merged {
            return Err(Error::NoProgress);
        }
        let before = h.total_weight();
        let (_, labels) = dsu.labels();
        let (next, step) = contract(&h, &labels);
        assert!(next.total_weight() < before, "contraction must remove weight");
        map = map.iter().map(|&x| step[x]).collect();
        h = next;
    }
    let (_, v, at) = best.expect("at least one round");
    let side: Vec<bool> = at.iter().map(|&x| x == v).collect();
    CutResult::from_side(g, side)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 9)]).unwrap();
        assert_eq!(matula_approx(&g, 1.0).unwrap().weight, 9);
    }

    #[test]
    fn unit_cycle() {
        let g = WeightedGraph::new(6, (0..6).map(|i| (i, (i + 1) % 6, 1))).unwrap();
        assert_eq!(matula_approx(&g, 1.0).unwrap().weight, 2);
    }

    #[test]
    fn heavy_weights_are_fast() {
        let g = WeightedGraph::new(4, [(0, 1, 1 << 40), (1, 2, 1 << 40), (2, 3, 1 << 40), (3, 0, 1 << 41)])
            .unwrap();
        let cut = matula_approx(&g, 1.0).unwrap();
        assert!(cut.weight >= 1 << 41 && cut.weight <= 3 << 41);
    }
}
