//! End-to-end runs: configuration, algorithm dispatch, verification and the
//! report printed by the command line tool.
//!
//! The exact pipeline ternarizes the input, packs spanning trees, solves the
//! 2-respecting problem for every tree concurrently and keeps the lightest
//! cut, projected back onto the original vertices. Every random choice is
//! drawn from streams forked off the seed, so the report does not depend on
//! the number of worker threads.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::approx::{constant_approx_min_cut, k_approx_min_cut, matula_approx, trials_for, Constants};
use crate::error::{Error, Result};
use crate::graph::{cut_weight, ternarize, CutResult, WeightedGraph, Witness};
use crate::oracles::stoer_wagner;
use crate::packing::{default_tree_count, pack_trees};
use crate::rng::Rng;
use crate::two_respecting::min_2respecting;

/// Largest graph the driver cross-checks against Stoer-Wagner.
pub const ORACLE_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    /// Tree packing plus exact 2-respecting cuts.
    Exact,
    /// `(2 + eps)`-approximation by certificate contraction.
    Matula,
    /// Best of repeated random contractions (`k`-approximation).
    KApprox,
    /// Skeleton-based constant-factor approximation.
    ConstApprox,
}

impl Algo {
    pub const NAMES: [&'static str; 4] = ["exact", "matula", "kapprox", "constapprox"];

    pub fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Matula => "matula",
            Algo::KApprox => "kapprox",
            Algo::ConstApprox => "constapprox",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "exact" => Ok(Algo::Exact),
            "matula" => Ok(Algo::Matula),
            "kapprox" => Ok(Algo::KApprox),
            "constapprox" => Ok(Algo::ConstApprox),
            _ => Err(format!("unknown algorithm `{s}` (expected one of {})", Algo::NAMES.join(", "))),
        }
    }
}

/// Everything that determines a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub algo: Algo,
    /// Number of packed trees; `None` uses `ceil(delta * log2 n)`.
    pub trees: Option<usize>,
    /// Worker threads; 0 lets the pool decide.
    pub threads: usize,
    pub verify: bool,
    pub consts: Constants,
    /// Approximation factor for [`Algo::KApprox`].
    pub k: u32,
    /// Perturbs the reported value so verification must fail. Test hook.
    #[serde(skip)]
    pub inject_fault: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            algo: Algo::Exact,
            trees: None,
            threads: 0,
            verify: false,
            consts: Constants::default(),
            k: 2,
            inject_fault: false,
        }
    }
}

/// Machine-readable outcome of a run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub value: u64,
    /// 0/1 per original vertex.
    pub side: Vec<u8>,
    /// For the exact pipeline: the packed tree and the edge ids it cuts.
    pub witness: Option<Witness>,
    pub seed: u64,
    pub algo: Algo,
    /// 2-respecting value found in each packed tree (exact pipeline only).
    pub trees: Vec<u64>,
    pub constants: Constants,
    pub timings_ms: BTreeMap<String, f64>,
    /// `None` unless verification was requested.
    pub verified: Option<bool>,
    /// Guarantee attached to an approximate answer, and the skeleton
    /// estimate for the constant-factor algorithm.
    pub note: Option<String>,
}

impl Report {
    /// The report with timings cleared, for comparing runs.
    pub fn without_timings(&self) -> Self {
        Self { timings_ms: BTreeMap::new(), ..self.clone() }
    }
}

/// Runs the configured algorithm on a connected graph.
pub fn run_mincut(g: &WeightedGraph, cfg: &RunConfig) -> Result<(CutResult, Report)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|_| Error::InvalidArgument("cannot start the worker pool"))?;
    pool.install(|| run_in_pool(g, cfg))
}

fn run_in_pool(g: &WeightedGraph, cfg: &RunConfig) -> Result<(CutResult, Report)> {
    if g.n() < 2 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rng = Rng::new(cfg.seed);
    let mut timings = BTreeMap::new();
    let mut clock = Instant::now();
    let mut lap = |name: &str, timings: &mut BTreeMap<String, f64>| {
        timings.insert(name.to_string(), clock.elapsed().as_secs_f64() * 1e3);
        clock = Instant::now();
    };

    let mut per_tree = Vec::new();
    let mut note = None;
    let mut cut = match cfg.algo {
        Algo::Exact => {
            let tern = ternarize(g)?;
            let h = &tern.graph;
            let count = cfg.trees.unwrap_or_else(|| default_tree_count(h.n(), cfg.consts.delta));
            let trees = pack_trees(h, &cfg.consts, count, &rng.fork(10))?;
            lap("pack", &mut timings);
            let cuts = trees.par_iter().map(|t| min_2respecting(h, t)).collect::<Result<Vec<_>>>()?;
            lap("two_respecting", &mut timings);
            per_tree = cuts.iter().map(|c| c.value).collect();
            let (i, best) =
                cuts.iter().enumerate().min_by_key(|(i, c)| (c.value, *i)).expect("at least one tree");
            let side = tern.project(&best.side(&trees[i]));
            let mut cut = CutResult::from_side(g, side)?;
            debug_assert_eq!(cut.weight, best.value);
            let edges = best.edges.iter().map(|&c| trees[i].edge_id(c)).collect();
            cut.witness = Some(Witness { tree: i, edges });
            cut
        }
        Algo::Matula => {
            note = Some(format!("within a factor {} of the minimum", 2.0 + cfg.consts.eps));
            matula_approx(g, cfg.consts.eps)?
        }
        Algo::KApprox => {
            let k = cfg.k.max(1);
            note = Some(format!("within a factor {k} of the minimum with high probability"));
            k_approx_min_cut(g, trials_for(g.n(), k, cfg.consts.alpha), &rng.fork(11))?
        }
        Algo::ConstApprox => {
            let r = constant_approx_min_cut(g, &cfg.consts, &rng.fork(12))?;
            note = Some(format!("constant-factor approximation; skeleton estimate {:.3}", r.estimate));
            r.cut
        }
    };
    if cfg.algo != Algo::Exact {
        lap("solve", &mut timings);
    }
    if cfg.inject_fault {
        cut.weight += 1;
    }

    let verified = if cfg.verify {
        let mut ok = cut_weight(g, &cut.side)? == cut.weight;
        if ok && g.n() <= ORACLE_LIMIT {
            let exact = stoer_wagner(g)?.weight;
            ok = match cfg.algo {
                Algo::Exact => exact == cut.weight,
                _ => exact <= cut.weight,
            };
        }
        lap("verify", &mut timings);
        Some(ok)
    } else {
        None
    };

    let report = Report {
        value: cut.weight,
        side: cut.side.iter().map(|&s| u8::from(s)).collect(),
        witness: cut.witness.clone(),
        seed: cfg.seed,
        algo: cfg.algo,
        trees: per_tree,
        constants: cfg.consts,
        timings_ms: timings,
        verified,
        note,
    };
    Ok((cut, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_fixture() {
        let g = WeightedGraph::new(4, [(0, 1, 5), (1, 2, 2), (2, 3, 7)]).unwrap();
        let (cut, report) = run_mincut(&g, &RunConfig { verify: true, ..RunConfig::default() }).unwrap();
        assert_eq!(cut.weight, 2);
        assert_eq!(report.verified, Some(true));
        assert_eq!(report.witness.unwrap().edges, vec![1]);
    }

    #[test]
    fn triangle_verifies() {
        let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let (cut, report) = run_mincut(&g, &RunConfig { verify: true, ..RunConfig::default() }).unwrap();
        assert_eq!(cut.weight, 3);
        assert_eq!(report.verified, Some(true));
    }

    #[test]
    fn fault_fails_verification() {
        let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let cfg = RunConfig { verify: true, inject_fault: true, ..RunConfig::default() };
        assert_eq!(run_mincut(&g, &cfg).unwrap().1.verified, Some(false));
    }

    #[test]
    fn algo_names_round_trip() {
        for name in Algo::NAMES {
            assert_eq!(name.parse::<Algo>().unwrap().name(), name);
        }
        assert!("fast".parse::<Algo>().is_err());
    }
}
