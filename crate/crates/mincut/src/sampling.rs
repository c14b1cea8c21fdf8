//! Exact binomial sampling, weighted random edge orders, skeleton graphs and
//! the transformation that bounds edge weights.
//!
//! Probabilities are dyadic fixed-point numbers with 64 fractional bits, so
//! every sampler here is exact for the probabilities it accepts.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{contract, Edge, UnionFind, WeightedGraph};
use crate::rng::Rng;
use rand::RngCore;

/// A probability `raw / 2^64` with `raw <= 2^64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Prob(u128);

impl Prob {
    pub const ZERO: Prob = Prob(0);
    pub const ONE: Prob = Prob(1 << 64);

    pub fn new(raw: u128) -> Result<Self> {
        if raw > Self::ONE.0 {
            return Err(Error::BadProbability);
        }
        Ok(Prob(raw))
    }

    /// `num / 2^log2_den`.
    pub fn dyadic(num: u64, log2_den: u32) -> Result<Self> {
        if log2_den > 64 {
            return Err(Error::BadProbability);
        }
        Self::new((num as u128) << (64 - log2_den))
    }

    /// The largest dyadic value not above `x`, for `x` in `[0, 1]`.
    pub fn from_f64_floor(x: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::BadProbability);
        }
        if x == 1.0 {
            return Ok(Self::ONE);
        }
        // Exact for the 53-bit mantissa; the remaining bits are zero.
        let scaled = x * 2f64.powi(64);
        Ok(Prob((scaled as u128).min(Self::ONE.0)))
    }

    pub fn raw(self) -> u128 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2f64.powi(64)
    }

    /// Half of this probability, rounded down.
    pub fn half(self) -> Self {
        Prob(self.0 >> 1)
    }

    /// Twice this probability, capped at one.
    pub fn double(self) -> Self {
        Prob((self.0 << 1).min(Self::ONE.0))
    }
}

/// Exact sample of Binomial(n, 1/2): the number of one bits among `n`
/// random bits.
pub fn binom_half(n: u64, rng: &mut Rng) -> u64 {
    let mut left = n;
    let mut count = 0u64;
    while left >= 64 {
        count += rng.next_u64().count_ones() as u64;
        left -= 64;
    }
    if left > 0 {
        let mask = (1u64 << left) - 1;
        count += (rng.next_u64() & mask).count_ones() as u64;
    }
    count
}

/// Exact sample of Binomial(n, p).
///
/// Each trial compares a uniform `U` with `p` one bit at a time; the trials
/// whose bits still agree with `p` are the unresolved ones, and each bit
/// splits them by a Binomial(count, 1/2) draw. Trials with `U = p` exactly
/// count as failures.
pub fn binom_p(n: u64, p: Prob, rng: &mut Rng) -> Result<u64> {
    if p.0 > Prob::ONE.0 {
        return Err(Error::BadProbability);
    }
    if p == Prob::ONE {
        return Ok(n);
    }
    let frac = p.0 as u64;
    let mut count = n;
    let mut successes = 0u64;
    for bit in (0..64).rev() {
        if count == 0 || frac & ((1u64 << bit) | ((1u64 << bit) - 1)) == 0 {
            break;
        }
        let ones = binom_half(count, rng);
        if frac >> bit & 1 == 1 {
            successes += count - ones;
            count = ones;
        } else {
            count -= ones;
        }
    }
    Ok(successes)
}

/// Orders the edges (as indices into `g.edges()`) like repeatedly drawing an
/// edge with probability proportional to its weight without replacement.
/// Every edge races an exponential clock of rate `w`; the order is the order
/// of arrival, ties broken by edge id.
pub fn weighted_permutation(g: &WeightedGraph, rng: &Rng) -> Vec<usize> {
    let mut keyed: Vec<(f64, usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let u = rng.fork(e.eid as u64).unit_open0();
            (-u.ln() / e.w as f64, e.eid, i)
        })
        .collect();
    keyed.sort_unstable_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, _, i)| i).collect()
}

/// A random subgraph whose edge weights are sampled multiplicities.
#[derive(Debug, Clone)]
pub struct Skeleton {
    /// Same vertices as the source graph; edges with multiplicity zero are
    /// omitted and the rest keep their ids.
    pub graph: WeightedGraph,
    pub p: Prob,
}

fn thin(g: &WeightedGraph, p: Prob, mult: Vec<u64>) -> Skeleton {
    let edges: Vec<Edge> = g
        .edges()
        .iter()
        .zip(mult)
        .filter(|(_, x)| *x > 0)
        .map(|(e, x)| Edge { w: x, ..*e })
        .collect();
    let graph = WeightedGraph::from_edges(g.n(), edges).expect("subgraph of a valid graph");
    Skeleton { graph, p }
}

/// Keeps each unit of every edge's weight independently with probability `p`.
pub fn skeleton(g: &WeightedGraph, p: Prob, rng: &Rng) -> Result<Skeleton> {
    if p.0 > Prob::ONE.0 {
        return Err(Error::BadProbability);
    }
    let mult: Vec<u64> = g
        .edges()
        .par_iter()
        .map(|e| binom_p(e.w, p, &mut rng.fork(e.eid as u64)).expect("p checked above"))
        .collect();
    Ok(thin(g, p, mult))
}

/// Skeletons at `p, p/2, ..., p/2^k`, each obtained by halving the
/// previous one, so multiplicities never increase along the chain.
pub fn subsample_chain(g: &WeightedGraph, p: Prob, k: usize, rng: &Rng) -> Result<Vec<Skeleton>> {
    if p.0 > Prob::ONE.0 {
        return Err(Error::BadProbability);
    }
    let first = rng.fork(0);
    let mut mult: Vec<u64> = g
        .edges()
        .par_iter()
        .map(|e| binom_p(e.w, p, &mut first.fork(e.eid as u64)).expect("p checked above"))
        .collect();
    let mut chain = vec![thin(g, p, mult.clone())];
    let mut q = p;
    for i in 1..=k {
        let step = rng.fork(i as u64);
        mult = g
            .edges()
            .par_iter()
            .zip(mult.par_iter())
            .map(|(e, &x)| binom_half(x, &mut step.fork(e.eid as u64)))
            .collect();
        q = q.half();
        chain.push(thin(g, q, mult.clone()));
    }
    Ok(chain)
}

/// `ceil(log2(n))`, at least 1.
pub fn log2_ceil(n: usize) -> u32 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()).max(1)
}

/// A graph with bounded weights derived from an original one.
#[derive(Debug, Clone)]
pub struct Transformed {
    pub graph: WeightedGraph,
    /// Every kept weight was divided (rounding down) by this factor.
    pub scale: u64,
    /// Vertex of `graph` holding each original vertex.
    pub map: Vec<usize>,
    /// True when dropping light edges would have disconnected the graph, in
    /// which case every weight was rounded up instead of down.
    pub fallback: bool,
}

/// Contracts edges heavier than `c_tilde`, then divides all weights by
/// `s = max(1, ceil(c_tilde / (2 m L)))` with `L = ceil(log2 n)`, dropping
/// edges that fall to zero. Every resulting weight lies in `[1, 2 m L]`.
/// If dropping edges would disconnect the graph, weights are rounded up and
/// nothing is dropped.
/// `c_tilde` must be at least the minimum cut of `g`.
pub fn low_weight_transform(g: &WeightedGraph, c_tilde: u64) -> Result<Transformed> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if c_tilde == 0 {
        return Err(Error::InvalidArgument("weight bound must be positive"));
    }
    let bound = 2 * g.m() as u64 * log2_ceil(g.n()) as u64;
    let scale = c_tilde.div_ceil(bound).max(1);
    let mut dsu = UnionFind::new(g.n());
    for e in g.edges() {
        if e.w > c_tilde {
            dsu.union(e.u, e.v);
        }
    }
    let (_, labels) = dsu.labels();
    let (h, map) = contract(g, &labels);
    if h.n() < 2 {
        // Only possible when `c_tilde` is below the minimum cut.
        return Err(Error::Degenerate);
    }
    let edges: Vec<Edge> = h
        .edges()
        .iter()
        .filter(|e| e.w >= scale)
        .map(|e| Edge { w: e.w / scale, ..*e })
        .collect();
    let scaled = WeightedGraph::from_edges(h.n(), edges).expect("subgraph of a valid graph");
    if scaled.is_connected() {
        return Ok(Transformed { graph: scaled, scale, map, fallback: false });
    }
    // Dropping light edges split the graph: keep them all, rounding up.
    let edges: Vec<Edge> =
        h.edges().iter().map(|e| Edge { w: e.w.div_ceil(scale), ..*e }).collect();
    let graph = WeightedGraph::from_edges(h.n(), edges).expect("same edges as the contraction");
    Ok(Transformed { graph, scale, map, fallback: true })
}
