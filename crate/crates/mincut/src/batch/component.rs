//! Component weights under edge joins.
//!
//! Every vertex carries an integer weight and every tree edge is either
//! joined or not. A query asks for the total weight of the component of a
//! vertex in the forest of joined edges. A binary cluster is either joined
//! (its two boundaries are connected inside it) and stores the weight
//! attached to that connection, or split and stores the weights attached to
//! each boundary separately. Boundary vertices themselves never count.

use super::{ChildValues, Leaf, OpKind, OpSet};
use crate::rc_tree::{Cluster, Slot};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComponentValue {
    pub joined: bool,
    /// Vertex/unary weight, joined total, or the top part when split.
    pub a: i64,
    /// Bottom part when split.
    pub b: i64,
}

impl ComponentValue {
    /// Weight connected to the top boundary.
    fn top_part(&self) -> i64 {
        self.a
    }

    /// Weight connected to the bottom boundary.
    fn bottom_part(&self) -> i64 {
        if self.joined {
            self.a
        } else {
            self.b
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentOp {
    SubtractWeight { v: usize, w: i64 },
    /// Joins the edge above `child`.
    JoinEdge { child: usize },
    QueryWeight { v: usize },
}

#[derive(Debug, Clone, Copy)]
pub enum ComponentState {
    Start,
    /// Weight of the query vertex's component inside the current cluster,
    /// and whether it reaches the top and bottom boundaries.
    Inside { weight: i64, top: bool, bottom: bool },
}

/// Component weights over a fixed tree with initial vertex weights and
/// initially joined edges.
#[derive(Debug, Clone)]
pub struct ComponentWeight {
    weight: Vec<i64>,
    joined: Vec<bool>,
}

impl ComponentWeight {
    /// `joined[c]` marks the edge above `c` as joined from the start.
    pub fn new(weight: Vec<i64>, joined: Vec<bool>) -> Self {
        Self { weight, joined }
    }

    /// Weight at the representative plus its unary children, skipping one
    /// unary child if given.
    fn at_rep(ch: &ChildValues<'_, ComponentValue>, skip: Option<u8>) -> i64 {
        ch.rep.a
            + ch
                .unary
                .iter()
                .enumerate()
                .filter(|(i, _)| Some(*i as u8) != skip)
                .map(|(_, u)| u.a)
                .sum::<i64>()
    }
}

impl OpSet for ComponentWeight {
    type Value = ComponentValue;
    type Op = ComponentOp;
    type State = ComponentState;
    type Output = i64;

    fn vertex_value(&self, v: usize) -> ComponentValue {
        ComponentValue { joined: false, a: self.weight[v], b: 0 }
    }

    fn edge_value(&self, child: usize) -> ComponentValue {
        ComponentValue { joined: self.joined[child], a: 0, b: 0 }
    }

    fn combine(&self, ch: &ChildValues<'_, ComponentValue>) -> ComponentValue {
        let conn = Self::at_rep(ch, None);
        match (ch.top, ch.bottom) {
            (None, _) => ComponentValue { joined: false, a: conn, b: 0 },
            (Some(t), None) => {
                let a = if t.joined { t.a + conn } else { t.a };
                ComponentValue { joined: false, a, b: 0 }
            }
            (Some(t), Some(b)) => match (t.joined, b.joined) {
                (true, true) => ComponentValue { joined: true, a: t.a + conn + b.a, b: 0 },
                (true, false) => ComponentValue { joined: false, a: t.a + conn + b.a, b: b.b },
                (false, true) => ComponentValue { joined: false, a: t.a, b: t.b + conn + b.a },
                (false, false) => ComponentValue { joined: false, a: t.a, b: b.b },
            },
        }
    }

    fn leaf(&self, op: &ComponentOp) -> Leaf {
        match *op {
            ComponentOp::SubtractWeight { v, .. } | ComponentOp::QueryWeight { v } => Leaf::Vertex(v),
            ComponentOp::JoinEdge { child } => Leaf::Edge(child),
        }
    }

    fn kind(&self, op: &ComponentOp) -> OpKind {
        match op {
            ComponentOp::QueryWeight { .. } => OpKind::Query,
            _ => OpKind::Update,
        }
    }

    fn apply(&self, value: &ComponentValue, op: &ComponentOp) -> ComponentValue {
        match *op {
            ComponentOp::SubtractWeight { w, .. } => ComponentValue { a: value.a - w, ..*value },
            ComponentOp::JoinEdge { .. } => ComponentValue { joined: true, ..*value },
            ComponentOp::QueryWeight { .. } => *value,
        }
    }

    fn query_start(&self, _op: &ComponentOp, _leaf_value: &ComponentValue) -> ComponentState {
        ComponentState::Start
    }

    fn query_step(
        &self,
        _op: &ComponentOp,
        state: &ComponentState,
        _cluster: &Cluster,
        from: Slot,
        ch: &ChildValues<'_, ComponentValue>,
    ) -> ComponentState {
        let (weight, top, bottom) = match *state {
            ComponentState::Start => (0, true, false),
            ComponentState::Inside { weight, top, bottom } => (weight, top, bottom),
        };
        match from {
            Slot::Rep | Slot::Unary(_) => {
                // The child hangs at the representative; `top` says whether
                // the query vertex reaches it.
                if !top {
                    return ComponentState::Inside { weight, top: false, bottom: false };
                }
                let skip = if let Slot::Unary(i) = from { Some(i) } else { None };
                let mut weight = weight + Self::at_rep(ch, skip);
                let t = ch.top.map(|t| (t.bottom_part(), t.joined));
                let b = ch.bottom.map(|b| (b.top_part(), b.joined));
                weight += t.map_or(0, |x| x.0) + b.map_or(0, |x| x.0);
                ComponentState::Inside {
                    weight,
                    top: t.is_some_and(|x| x.1),
                    bottom: b.is_some_and(|x| x.1),
                }
            }
            Slot::Top => {
                if !bottom {
                    return ComponentState::Inside { weight, top, bottom: false };
                }
                let b = ch.bottom.map(|b| (b.top_part(), b.joined));
                ComponentState::Inside {
                    weight: weight + Self::at_rep(ch, None) + b.map_or(0, |x| x.0),
                    top,
                    bottom: b.is_some_and(|x| x.1),
                }
            }
            Slot::Bottom => {
                if !top {
                    return ComponentState::Inside { weight, top: false, bottom };
                }
                let t = ch.top.expect("binary cluster has a top");
                ComponentState::Inside {
                    weight: weight + Self::at_rep(ch, None) + t.bottom_part(),
                    top: t.joined,
                    bottom,
                }
            }
        }
    }

    fn query_finish(&self, _op: &ComponentOp, state: ComponentState) -> i64 {
        match state {
            ComponentState::Inside { weight, .. } => weight,
            ComponentState::Start => unreachable!("query never left its leaf"),
        }
    }
}
