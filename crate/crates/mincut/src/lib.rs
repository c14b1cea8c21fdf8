//! Parallel minimum cut toolkit for weighted undirected graphs.
//!
//! The pipeline packs `O(log n)` spanning trees into the graph and finds, for
//! each tree, the minimum cut that crosses at most two of its edges. The
//! building blocks are exposed as separate modules:
//!
//! * [`graph`]: graphs, rooted trees, contraction, ternarization, cut bookkeeping
//! * [`rc_tree`]: rake-compress trees and tree path utilities
//! * [`batch`]: batched evaluation of mixed tree updates and queries
//! * [`sampling`]: binomial variates, skeletons, weight reduction
//! * [`approx`]: approximate minimum cuts and sparse certificates
//! * [`packing`]: spanning tree packing
//! * [`two_respecting`]: minimum cuts crossing at most two tree edges
//! * [`oracles`]: brute-force references
//! * [`driver`]: end-to-end runs and reports

pub mod approx;
pub mod driver;
pub mod batch;
pub mod error;
pub mod graph;
pub mod oracles;
pub mod packing;
pub mod rc_tree;
pub mod rng;
pub mod sampling;
pub mod two_respecting;

pub use error::{Error, Result};
