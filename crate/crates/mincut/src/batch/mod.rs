//! Batched evaluation of mixed updates and queries over an RC tree.
//!
//! An [`OpSet`] says how leaf values are updated, how a cluster's value is
//! combined from its children, and how a query's accumulator advances one
//! RC level at a time. [`evaluate_batch`] runs a whole operation sequence in
//! one upward sweep: operations are timestamped, grouped per leaf, and every
//! cluster merges its children's timestamped value lists so that each entry
//! sees the children exactly as they were at that moment.

mod component;
mod path;

pub use component::{ComponentOp, ComponentWeight, ComponentValue};
pub use path::{add_path_ops, query_path_ops, Extremum, Lab, PathOp, PathSubtree, PathValue, INF};

use arrayvec::ArrayVec;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rc_tree::{Cluster, ClusterId, ClusterKind, RcTree, Slot};

/// The leaf an operation acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Leaf {
    Vertex(usize),
    /// The edge between this vertex and its parent.
    Edge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Update,
    Query,
}

/// Values of a cluster's children at one moment.
#[derive(Debug)]
pub struct ChildValues<'a, V> {
    pub rep: &'a V,
    pub top: Option<&'a V>,
    pub bottom: Option<&'a V>,
    pub unary: ArrayVec<&'a V, 3>,
}

/// An operation set whose values combine in constant time up the RC tree.
pub trait OpSet: Sync {
    type Value: Clone + Send + Sync;
    type Op: Sync;
    type State: Clone + Send + Sync;
    type Output: Send;

    fn vertex_value(&self, v: usize) -> Self::Value;
    fn edge_value(&self, child: usize) -> Self::Value;
    /// Value of a non-leaf cluster from its children's values.
    fn combine(&self, ch: &ChildValues<'_, Self::Value>) -> Self::Value;
    fn leaf(&self, op: &Self::Op) -> Leaf;
    fn kind(&self, op: &Self::Op) -> OpKind;
    /// New leaf value after an update.
    fn apply(&self, value: &Self::Value, op: &Self::Op) -> Self::Value;
    /// Accumulator of a query at its leaf.
    fn query_start(&self, op: &Self::Op, leaf_value: &Self::Value) -> Self::State;
    /// Advances a query from child slot `from` into `cluster`.
    fn query_step(
        &self,
        op: &Self::Op,
        state: &Self::State,
        cluster: &Cluster,
        from: Slot,
        ch: &ChildValues<'_, Self::Value>,
    ) -> Self::State;
    fn query_finish(&self, op: &Self::Op, state: Self::State) -> Self::Output;
    /// Rejects operations whose preconditions fail on this RC tree.
    fn check(&self, _rc: &RcTree, _op: &Self::Op, _index: usize) -> Result<()> {
        Ok(())
    }
}

/// Size accounting for one batch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BatchStats {
    /// Entries summed over all non-trivial cluster operation lists.
    pub total_list_len: usize,
    pub height: u32,
    pub ops: usize,
}

struct Entry<V, S> {
    t: u32,
    value: V,
    query: Option<(u32, S)>,
}

/// Evaluates `ops` in sequence order and returns the query results in the
/// order the queries appear.
pub fn evaluate_batch<O: OpSet>(rc: &RcTree, opset: &O, ops: &[O::Op]) -> Result<Vec<O::Output>> {
    evaluate_batch_with_stats(rc, opset, ops).map(|(out, _)| out)
}

/// Like [`evaluate_batch`], also reporting operation-list sizes.
pub fn evaluate_batch_with_stats<O: OpSet>(
    rc: &RcTree,
    opset: &O,
    ops: &[O::Op],
) -> Result<(Vec<O::Output>, BatchStats)> {
    let times: Vec<u32> = (1..=ops.len() as u32).collect();
    run(rc, opset, ops, &times)
}

/// Evaluates operations carrying explicit timestamps, which must be exactly
/// `1..=k` in some order. Results follow the input order of the queries.
pub fn evaluate_timestamped<O: OpSet>(
    rc: &RcTree,
    opset: &O,
    ops: &[(u32, O::Op)],
) -> Result<Vec<O::Output>> {
    let mut seen = vec![false; ops.len()];
    for (t, _) in ops {
        let t = *t as usize;
        if t == 0 || t > ops.len() || seen[t - 1] {
            return Err(Error::BadTimestamps);
        }
        seen[t - 1] = true;
    }
    let times: Vec<u32> = ops.iter().map(|(t, _)| *t).collect();
    let bare: Vec<&O::Op> = ops.iter().map(|(_, op)| op).collect();
    run(rc, &ByRef(opset), &bare, &times).map(|(out, _)| out)
}

/// Adapter letting an op set evaluate a slice of references.
struct ByRef<'a, O>(&'a O);

impl<'o, O: OpSet> OpSet for ByRef<'o, O> {
    type Value = O::Value;
    type Op = &'o O::Op;
    type State = O::State;
    type Output = O::Output;

    fn vertex_value(&self, v: usize) -> Self::Value {
        self.0.vertex_value(v)
    }
    fn edge_value(&self, child: usize) -> Self::Value {
        self.0.edge_value(child)
    }
    fn combine(&self, ch: &ChildValues<'_, Self::Value>) -> Self::Value {
        self.0.combine(ch)
    }
    fn leaf(&self, op: &Self::Op) -> Leaf {
        self.0.leaf(op)
    }
    fn kind(&self, op: &Self::Op) -> OpKind {
        self.0.kind(op)
    }
    fn apply(&self, value: &Self::Value, op: &Self::Op) -> Self::Value {
        self.0.apply(value, op)
    }
    fn query_start(&self, op: &Self::Op, leaf_value: &Self::Value) -> Self::State {
        self.0.query_start(op, leaf_value)
    }
    fn query_step(
        &self,
        op: &Self::Op,
        state: &Self::State,
        cluster: &Cluster,
        from: Slot,
        ch: &ChildValues<'_, Self::Value>,
    ) -> Self::State {
        self.0.query_step(op, state, cluster, from, ch)
    }
    fn query_finish(&self, op: &Self::Op, state: Self::State) -> Self::Output {
        self.0.query_finish(op, state)
    }
    fn check(&self, rc: &RcTree, op: &Self::Op, index: usize) -> Result<()> {
        self.0.check(rc, op, index)
    }
}

/// Initial value of every cluster, bottom-up.
pub fn initial_values<O: OpSet>(rc: &RcTree, opset: &O) -> Vec<O::Value> {
    let clusters = rc.clusters();
    let mut vals: Vec<O::Value> = Vec::with_capacity(clusters.len());
    for c in clusters {
        let v = match c.kind {
            ClusterKind::LeafVertex => opset.vertex_value(c.rep),
            ClusterKind::LeafEdge => opset.edge_value(c.rep),
            _ => {
                let kids: ArrayVec<(Slot, ClusterId), 6> = c.children().collect();
                let refs: ArrayVec<&O::Value, 6> = kids.iter().map(|&(_, k)| &vals[k]).collect();
                opset.combine(&child_values(&kids, &refs))
            }
        };
        vals.push(v);
    }
    vals
}

fn child_values<'a, V>(kids: &[(Slot, ClusterId)], cur: &[&'a V]) -> ChildValues<'a, V> {
    let mut rep = None;
    let mut top = None;
    let mut bottom = None;
    let mut unary = ArrayVec::new();
    for (i, &(slot, _)) in kids.iter().enumerate() {
        match slot {
            Slot::Rep => rep = Some(cur[i]),
            Slot::Top => top = Some(cur[i]),
            Slot::Bottom => bottom = Some(cur[i]),
            Slot::Unary(_) => unary.push(cur[i]),
        }
    }
    ChildValues { rep: rep.expect("non-leaf cluster has a representative"), top, bottom, unary }
}

fn run<O: OpSet>(
    rc: &RcTree,
    opset: &O,
    ops: &[O::Op],
    times: &[u32],
) -> Result<(Vec<O::Output>, BatchStats)> {
    let clusters = rc.clusters();
    let mut leaf_of = Vec::with_capacity(ops.len());
    let mut query_slot = vec![u32::MAX; ops.len()];
    let mut queries = 0u32;
    for (i, op) in ops.iter().enumerate() {
        let leaf = match opset.leaf(op) {
            Leaf::Vertex(v) if v < rc.n() => rc.vertex_leaf(v),
            Leaf::Edge(c) => rc.edge_leaf(c).ok_or(Error::NoSuchLeaf { index: i })?,
            Leaf::Vertex(_) => return Err(Error::NoSuchLeaf { index: i }),
        };
        opset.check(rc, op, i)?;
        leaf_of.push(leaf);
        if opset.kind(op) == OpKind::Query {
            query_slot[i] = queries;
            queries += 1;
        }
    }
    let init = initial_values(rc, opset);
    let mut stats = BatchStats { total_list_len: 0, height: rc.height(), ops: ops.len() };

    // Steps 1-3: sort by (leaf, time), prefix-apply updates, start queries.
    let mut order: Vec<usize> = (0..ops.len()).collect();
    order.sort_unstable_by_key(|&i| (leaf_of[i], times[i]));
    let mut lists: Vec<Option<Vec<Entry<O::Value, O::State>>>> =
        (0..clusters.len()).map(|_| None).collect();
    let mut start = 0;
    while start < order.len() {
        let leaf = leaf_of[order[start]];
        let mut end = start;
        let mut value = init[leaf].clone();
        let mut list = Vec::new();
        while end < order.len() && leaf_of[order[end]] == leaf {
            let i = order[end];
            let op = &ops[i];
            let query = match opset.kind(op) {
                OpKind::Update => {
                    value = opset.apply(&value, op);
                    None
                }
                OpKind::Query => Some((i as u32, opset.query_start(op, &value))),
            };
            list.push(Entry { t: times[i], value: value.clone(), query });
            end += 1;
        }
        stats.total_list_len += list.len();
        lists[leaf] = Some(list);
        start = end;
    }

    // Step 4: level-by-level merge of child operation lists.
    for level in rc.levels().iter().skip(1) {
        let produced: Vec<(ClusterId, Vec<Entry<O::Value, O::State>>)> = level
            .par_iter()
            .filter_map(|&id| {
                let c = &clusters[id];
                if !c.children().any(|(_, k)| lists[k].is_some()) {
                    return None;
                }
                Some((id, merge(opset, ops, c, &lists, &init)))
            })
            .collect();
        for (id, list) in produced {
            stats.total_list_len += list.len();
            for (_, k) in clusters[id].children() {
                lists[k] = None;
            }
            lists[id] = Some(list);
        }
    }

    // Step 5: queries that reached the root are complete.
    let mut out: Vec<Option<O::Output>> = (0..queries).map(|_| None).collect();
    if let Some(list) = lists[rc.root()].take() {
        for e in list {
            if let Some((i, state)) = e.query {
                let i = i as usize;
                out[query_slot[i] as usize] = Some(opset.query_finish(&ops[i], state));
            }
        }
    }
    let out = out.into_iter().map(|o| o.expect("every query reaches the root")).collect();
    Ok((out, stats))
}

fn merge<O: OpSet>(
    opset: &O,
    ops: &[O::Op],
    c: &Cluster,
    lists: &[Option<Vec<Entry<O::Value, O::State>>>],
    init: &[O::Value],
) -> Vec<Entry<O::Value, O::State>> {
    let kids: ArrayVec<(Slot, ClusterId), 6> = c.children().collect();
    let mut cur: ArrayVec<&O::Value, 6> = kids.iter().map(|&(_, k)| &init[k]).collect();
    let srcs: ArrayVec<&[Entry<O::Value, O::State>], 6> =
        kids.iter().map(|&(_, k)| lists[k].as_deref().unwrap_or(&[])).collect();
    let mut pos = [0usize; 6];
    let total: usize = srcs.iter().map(|s| s.len()).sum();
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        let mut pick = usize::MAX;
        let mut best_t = u32::MAX;
        for (j, s) in srcs.iter().enumerate() {
            if let Some(e) = s.get(pos[j]) {
                if e.t < best_t {
                    best_t = e.t;
                    pick = j;
                }
            }
        }
        let e = &srcs[pick][pos[pick]];
        pos[pick] += 1;
        cur[pick] = &e.value;
        let ch = child_values(&kids, &cur);
        let value = opset.combine(&ch);
        let query = e
            .query
            .as_ref()
            .map(|(i, s)| (*i, opset.query_step(&ops[*i as usize], s, c, kids[pick].0, &ch)));
        out.push(Entry { t: e.t, value, query });
    }
    out
}
