//! Constant-factor approximation from sampled skeletons.
//!
//! After bounding the weights, a `ceil(log2 n)`-approximation `C` brackets
//! the minimum cut in `[C / L, C]`. For each guess `c` in that range, halving
//! from the smallest, the skeleton at `p = tau / c` is certified with
//! `beta * L` rounds and cut with Matula. The smallest `p` whose skeleton cut
//! still reaches `tau` gives the estimate `value / p`. Every candidate
//! partition met along the way is also evaluated on the real graph, and the
//! lightest of them is returned.

use rayon::prelude::*;

use super::{logn_approx, matula_approx, sparse_certificate, Constants};
use crate::error::{Error, Result};
use crate::graph::{CutResult, WeightedGraph};
use crate::rng::Rng;
use crate::sampling::{log2_ceil, low_weight_transform, subsample_chain, Prob};

/// Result of [`constant_approx_min_cut`].
#[derive(Debug, Clone)]
pub struct ConstantApprox {
    /// The lightest real cut found; its weight is the reported value.
    pub cut: CutResult,
    /// Skeleton-based estimate of the minimum cut (not necessarily the
    /// weight of any cut).
    pub estimate: f64,
}

/// Constant-factor approximation of the minimum cut of a connected graph.
pub fn constant_approx_min_cut(g: &WeightedGraph, consts: &Constants, rng: &Rng) -> Result<ConstantApprox> {
    let c0 = logn_approx(g, consts.alpha, &rng.fork(1))?;
    let tr = low_weight_transform(g, c0.weight)?;
    let inner = constant_approx_bounded(&tr.graph, consts, &rng.fork(2))?;
    let lifted = inner.cut.lift(g, &tr.map)?;
    let cut = if lifted.weight < c0.weight { lifted } else { c0 };
    Ok(ConstantApprox { cut, estimate: inner.estimate * tr.scale as f64 })
}

/// The skeleton stage alone, for a graph whose weights are already bounded.
pub(crate) fn constant_approx_bounded(
    h: &WeightedGraph,
    consts: &Constants,
    rng: &Rng,
) -> Result<ConstantApprox> {
    let coarse = logn_approx(h, consts.alpha, &rng.fork(1))?;
    let big_c = coarse.weight as f64;
    let l = log2_ceil(h.n()) as f64;
    let rounds = (consts.beta * l).ceil().max(1.0) as u64;
    let tau = consts.beta * l / 2.0;
    let p0 = Prob::from_f64_floor((tau * l / big_c).min(1.0))?;
    let guesses = log2_ceil(l as usize) as usize;
    let chain = subsample_chain(h, p0, guesses, &rng.fork(2))?;

    // Skeleton cut value and partition per guess; a disconnected skeleton
    // has a zero cut and no useful partition.
    let results: Vec<Option<(u64, CutResult)>> = chain
        .par_iter()
        .map(|s| {
            if s.p == Prob::ZERO || !s.graph.is_connected() {
                return Ok(None);
            }
            let cert = sparse_certificate(&s.graph, rounds);
            let m = matula_approx(&cert, consts.eps)?;
            let real = CutResult::from_side(h, m.side.clone())?;
            Ok(Some((m.weight, real)))
        })
        .collect::<Result<_>>()?;

    let value = |j: usize| results[j].as_ref().map_or(0, |r| r.0) as f64;
    let chosen = (0..chain.len()).rev().find(|&j| value(j) >= tau).unwrap_or(0);
    let p = chain[chosen].p.as_f64();
    let estimate = if p > 0.0 { value(chosen) / p } else { big_c };

    let mut cut = coarse;
    for (_, real) in results.into_iter().flatten() {
        if real.weight < cut.weight {
            cut = real;
        }
    }
    if cut.weight == 0 {
        return Err(Error::Disconnected);
    }
    Ok(ConstantApprox { cut, estimate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 9)]).unwrap();
        let r = constant_approx_min_cut(&g, &Constants::default(), &Rng::new(0)).unwrap();
        assert_eq!(r.cut.weight, 9);
    }

    #[test]
    fn deterministic() {
        let g = WeightedGraph::new(5, [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 0, 7), (0, 2, 2)])
            .unwrap();
        let a = constant_approx_min_cut(&g, &Constants::default(), &Rng::new(11)).unwrap();
        let b = constant_approx_min_cut(&g, &Constants::default(), &Rng::new(11)).unwrap();
        assert_eq!(a.cut, b.cut);
        assert_eq!(a.estimate, b.estimate);
    }
}
