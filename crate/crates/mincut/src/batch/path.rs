//! Path and subtree operations: add a weight to every edge on a root path,
//! and read subtree minima, single edges or path minima.
//!
//! A vertex leaf stores the total weight added at that vertex. The current
//! weight of an edge is its initial weight plus everything added at vertices
//! below it, so a binary cluster keeps the minimum over its cluster path
//! *before* additions coming from below its bottom boundary (`l`), the
//! minimum over its other edges (`m`), and the total added inside it (`w`).
//! The same machinery runs in "max" mode for heaviest-edge queries.

use super::{ChildValues, Leaf, OpKind, OpSet};
use crate::error::{Error, Result};
use crate::graph::RootedTree;
use crate::rc_tree::{Cluster, EulerTour, RcTree, Slot};

/// Sentinel magnitude for "no edge".
pub const INF: i64 = 1 << 62;

/// An edge weight together with the label of the edge that carries it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lab {
    pub w: i64,
    pub id: usize,
}

impl Lab {
    pub fn new(w: i64, id: usize) -> Self {
        Self { w, id }
    }

    pub fn is_sentinel(&self) -> bool {
        self.w == INF || self.w == -INF
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    Min,
    Max,
}

impl Extremum {
    pub fn none(self) -> Lab {
        match self {
            Extremum::Min => Lab::new(INF, usize::MAX),
            Extremum::Max => Lab::new(-INF, usize::MAX),
        }
    }

    /// The better of two labels; ties go to the smaller edge label.
    pub fn best(self, a: Lab, b: Lab) -> Lab {
        let a_wins = match self {
            Extremum::Min => (a.w, a.id) <= (b.w, b.id),
            Extremum::Max => a.w > b.w || (a.w == b.w && a.id <= b.id),
        };
        if a_wins {
            a
        } else {
            b
        }
    }
}

/// Adds `d` unless `a` is the sentinel.
fn shift(a: Lab, d: i64) -> Lab {
    if a.is_sentinel() {
        a
    } else {
        let w = a.w + d;
        debug_assert!(w.abs() < INF, "edge weight reached the sentinel");
        Lab::new(w, a.id)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathValue {
    /// Best edge on the cluster path, before additions from below it.
    pub l: Lab,
    /// Best edge off the cluster path (everywhere, for unary clusters).
    pub m: Lab,
    /// Total weight added at interior vertices.
    pub w: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathOp {
    /// Adds `w` to every edge on the path from the root to `v`.
    AddPath { v: usize, w: i64 },
    /// Best edge weight in the subtree below `v`.
    QuerySubtree { v: usize },
    /// Current weight of the edge above `child`.
    QueryEdge { child: usize },
    /// Best edge weight on the `u`-`v` path, where `v` must represent an
    /// RC ancestor of `u`'s leaf.
    QueryPath { u: usize, v: usize },
}

/// Best edge on a path from the query vertex to one cluster boundary.
#[derive(Debug, Clone, Copy)]
pub struct Side {
    pub abs: Lab,
    pub pend: Lab,
}

#[derive(Debug, Clone, Copy)]
pub enum PathState {
    Start,
    /// A fixed edge set: `abs` is final, `pend` lies on the current cluster
    /// path and still awaits additions from below.
    Climb { abs: Lab, pend: Lab },
    /// Subtree accumulator; `below` says whether the subtree continues below
    /// the current cluster's bottom boundary.
    Subtree { abs: Lab, pend: Lab, below: bool },
    /// Paths from the query vertex to the current cluster's boundaries.
    Sides { top: Side, bot: Side },
}

/// The path/subtree operation set over a fixed rooted tree.
#[derive(Debug, Clone)]
pub struct PathSubtree {
    mode: Extremum,
    edge: Vec<Lab>,
}

impl PathSubtree {
    /// Uses the tree's own weights and edge labels.
    pub fn new(t: &RootedTree, mode: Extremum) -> Self {
        let edge = (0..t.n()).map(|v| Lab::new(t.weight(v) as i64, t.edge_id(v))).collect();
        Self { mode, edge }
    }

    /// Uses explicit initial weights, indexed by child vertex.
    pub fn with_weights(mode: Extremum, edge: Vec<Lab>) -> Self {
        Self { mode, edge }
    }

    pub fn mode(&self) -> Extremum {
        self.mode
    }

    fn best(&self, a: Lab, b: Lab) -> Lab {
        self.mode.best(a, b)
    }

    fn none(&self) -> Lab {
        self.mode.none()
    }

    /// Weight added at the representative and its unary children, and the
    /// best edge among the unary children.
    fn hanging(&self, ch: &ChildValues<'_, PathValue>) -> (i64, Lab) {
        let mut s = ch.rep.w;
        let mut m = self.none();
        for u in &ch.unary {
            s += u.w;
            m = self.best(m, u.m);
        }
        (s, m)
    }

    /// Moves a fixed edge set from child `from` into its parent.
    fn climb(&self, abs: Lab, pend: Lab, from: Slot, ch: &ChildValues<'_, PathValue>) -> PathState {
        match from {
            Slot::Top => {
                let (s, _) = self.hanging(ch);
                match ch.bottom {
                    Some(b) => PathState::Climb { abs, pend: shift(pend, s + b.w) },
                    None => PathState::Climb { abs: self.best(abs, shift(pend, s)), pend: self.none() },
                }
            }
            _ => PathState::Climb { abs, pend },
        }
    }

    /// Sides of the parent when the query vertex hangs at the representative,
    /// `abs` being the best edge between them.
    fn sides_from_rep(&self, abs: Lab, ch: &ChildValues<'_, PathValue>) -> PathState {
        let (s, _) = self.hanging(ch);
        let top = ch.top.expect("query path climbed past its target");
        match ch.bottom {
            Some(b) => PathState::Sides {
                top: Side { abs, pend: shift(top.l, s + b.w) },
                bot: Side { abs, pend: b.l },
            },
            None => PathState::Sides {
                top: Side { abs: self.best(abs, shift(top.l, s)), pend: self.none() },
                bot: Side { abs: self.none(), pend: self.none() },
            },
        }
    }
}

impl OpSet for PathSubtree {
    type Value = PathValue;
    type Op = PathOp;
    type State = PathState;
    type Output = Lab;

    fn vertex_value(&self, _v: usize) -> PathValue {
        PathValue { l: self.none(), m: self.none(), w: 0 }
    }

    fn edge_value(&self, child: usize) -> PathValue {
        PathValue { l: self.edge[child], m: self.none(), w: 0 }
    }

    fn combine(&self, ch: &ChildValues<'_, PathValue>) -> PathValue {
        let (s, mu) = self.hanging(ch);
        match (ch.top, ch.bottom) {
            (None, _) => PathValue { l: self.none(), m: mu, w: s },
            (Some(t), None) => PathValue {
                l: self.none(),
                m: self.best(self.best(t.m, shift(t.l, s)), mu),
                w: s + t.w,
            },
            (Some(t), Some(b)) => PathValue {
                l: self.best(shift(t.l, s + b.w), b.l),
                m: self.best(self.best(t.m, b.m), mu),
                w: s + t.w + b.w,
            },
        }
    }

    fn leaf(&self, op: &PathOp) -> Leaf {
        match *op {
            PathOp::AddPath { v, .. } | PathOp::QuerySubtree { v } => Leaf::Vertex(v),
            PathOp::QueryEdge { child } => Leaf::Edge(child),
            PathOp::QueryPath { u, .. } => Leaf::Vertex(u),
        }
    }

    fn kind(&self, op: &PathOp) -> OpKind {
        match op {
            PathOp::AddPath { .. } => OpKind::Update,
            _ => OpKind::Query,
        }
    }

    fn apply(&self, value: &PathValue, op: &PathOp) -> PathValue {
        match *op {
            PathOp::AddPath { w, .. } => PathValue { w: value.w + w, ..*value },
            _ => *value,
        }
    }

    fn query_start(&self, op: &PathOp, leaf_value: &PathValue) -> PathState {
        match *op {
            PathOp::QueryEdge { .. } => PathState::Climb { abs: self.none(), pend: leaf_value.l },
            PathOp::QueryPath { u, v } if u == v => {
                PathState::Climb { abs: self.none(), pend: self.none() }
            }
            _ => PathState::Start,
        }
    }

    fn query_step(
        &self,
        op: &PathOp,
        state: &PathState,
        cluster: &Cluster,
        from: Slot,
        ch: &ChildValues<'_, PathValue>,
    ) -> PathState {
        match (*op, *state) {
            (_, PathState::Climb { abs, pend }) => self.climb(abs, pend, from, ch),
            (PathOp::QuerySubtree { .. }, PathState::Start) => {
                let (_, mu) = self.hanging(ch);
                match ch.bottom {
                    Some(b) => PathState::Subtree { abs: self.best(mu, b.m), pend: b.l, below: true },
                    None => PathState::Subtree { abs: mu, pend: self.none(), below: false },
                }
            }
            (PathOp::QuerySubtree { .. }, PathState::Subtree { abs, pend, below }) => match from {
                Slot::Top if below => {
                    let (s, mu) = self.hanging(ch);
                    match ch.bottom {
                        Some(b) => PathState::Subtree {
                            abs: self.best(self.best(abs, mu), b.m),
                            pend: self.best(shift(pend, s + b.w), b.l),
                            below: true,
                        },
                        None => PathState::Subtree {
                            abs: self.best(self.best(abs, mu), shift(pend, s)),
                            pend: self.none(),
                            below: false,
                        },
                    }
                }
                Slot::Bottom => PathState::Subtree { abs, pend, below },
                _ => PathState::Subtree { abs, pend, below: false },
            },
            (PathOp::QueryPath { .. }, PathState::Start) => self.sides_from_rep(self.none(), ch),
            (PathOp::QueryPath { v, .. }, PathState::Sides { top, bot }) => {
                if cluster.rep == v {
                    // The side of the child that touches the target.
                    let side = if from == Slot::Top { bot } else { top };
                    return self.climb(side.abs, side.pend, from, ch);
                }
                let (s, _) = self.hanging(ch);
                match from {
                    Slot::Top => match ch.bottom {
                        Some(b) => PathState::Sides {
                            top: Side { abs: top.abs, pend: shift(top.pend, s + b.w) },
                            bot: Side {
                                abs: bot.abs,
                                pend: self.best(shift(bot.pend, s + b.w), b.l),
                            },
                        },
                        None => PathState::Sides {
                            top: Side { abs: self.best(top.abs, shift(top.pend, s)), pend: self.none() },
                            bot: Side { abs: self.none(), pend: self.none() },
                        },
                    },
                    Slot::Bottom => {
                        let t = ch.top.expect("binary cluster has a top");
                        let b = ch.bottom.expect("binary cluster has a bottom");
                        PathState::Sides {
                            top: Side { abs: top.abs, pend: self.best(top.pend, shift(t.l, s + b.w)) },
                            bot,
                        }
                    }
                    Slot::Unary(_) | Slot::Rep => self.sides_from_rep(top.abs, ch),
                }
            }
            _ => unreachable!("query state does not match its operation"),
        }
    }

    fn query_finish(&self, _op: &PathOp, state: PathState) -> Lab {
        match state {
            PathState::Climb { abs, .. } | PathState::Subtree { abs, .. } => abs,
            _ => unreachable!("query finished in an intermediate state"),
        }
    }

    fn check(&self, rc: &RcTree, op: &PathOp, index: usize) -> Result<()> {
        if let PathOp::QueryPath { u, v } = *op {
            if v >= rc.n() {
                return Err(Error::NoSuchLeaf { index });
            }
            if u != v && !rc.ancestors(rc.vertex_leaf(u)).any(|c| c == rc.rep_cluster(v)) {
                return Err(Error::NotAnAncestorRep { index });
            }
        }
        Ok(())
    }
}

/// The three root-path additions that add `w` exactly to the `u`-`v` path.
pub fn add_path_ops(et: &EulerTour, u: usize, v: usize, w: i64) -> [PathOp; 3] {
    let a = et.lca(u, v);
    [
        PathOp::AddPath { v: u, w },
        PathOp::AddPath { v, w },
        PathOp::AddPath { v: a, w: -2 * w },
    ]
}

/// Two ancestor-path queries whose better result is the best edge on the
/// `u`-`v` path. The split vertex is the representative of the RC LCA of the
/// two vertex leaves; a query from an endpoint to itself yields the sentinel.
pub fn query_path_ops(rc: &RcTree, u: usize, v: usize) -> Result<[PathOp; 2]> {
    if u == v {
        return Err(Error::EmptyPath);
    }
    let x = rc.cluster(rc.rc_lca(rc.vertex_leaf(u), rc.vertex_leaf(v))).rep;
    Ok([PathOp::QueryPath { u, v: x }, PathOp::QueryPath { u: v, v: x }])
}
