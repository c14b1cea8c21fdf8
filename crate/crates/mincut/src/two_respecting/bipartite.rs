//! Pairs of tree edges in different subtrees of their common ancestor.
//!
//! Graph edges are grouped by the lowest common ancestor `z` of their
//! endpoints. For each group, the endpoints on either side of `z` span two
//! compressed trees `T1` and `T2` hanging from `z`; a compressed edge keeps
//! the smallest `F` along the path it replaces. Choosing `e1` in `T1` and
//! `e2` in `T2` costs `w(e1) + w(e2)` plus the weight (already `-2w`) of
//! every crossing edge with one endpoint below `e1` and the other below `e2`.
//!
//! The solver descends the RC tree of `T1` while carrying two weighted copies
//! of `T2`, both compressed to the crossing endpoints still relevant below
//! the current cluster:
//!
//! * `a` holds the crossing weights of every edge whose `T1` endpoint lies
//!   under the cluster's lower boundary, which is what a spine edge of the
//!   cluster sees in addition to the cluster's own crossings;
//! * `b` holds the bare weights, which is what an edge hanging off the spine
//!   sees.
//!
//! At an edge leaf the best partner is simply the lightest edge of `a`.

use rayon::prelude::*;

use super::Work;
use crate::batch::{Lab, INF};
use crate::error::Result;
use crate::graph::{RootedTree, WeightedGraph};
use crate::rc_tree::{virtual_tree, ClusterId, ClusterKind, PathMin, RcTree, Slot};

/// Two trees hanging from a common vertex and the crossing edges between
/// them. Tree-edge weights of `INF` or more mark edges that may not be cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteProblem {
    pub t1: RootedTree,
    pub t2: RootedTree,
    /// `(vertex of t1, vertex of t2, weight)`; weights are typically `-2w`.
    pub crossing: Vec<(usize, usize, i64)>,
}

/// Best pair: its total cost and the `edge_id` labels of the chosen edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct BipartiteSolution {
    pub value: i64,
    pub e1: usize,
    pub e2: usize,
}

/// Bipartite problems of `t`, one per vertex whose two subtrees are joined
/// by graph edges. Edge labels name tree edges by their child vertex in `t`.
pub fn generate_bipartite(g: &WeightedGraph, t: &RootedTree) -> Result<Vec<BipartiteProblem>> {
    let work = Work::new(g, t)?;
    let relabel = |tree: &RootedTree| {
        let ids = (0..tree.n())
            .map(|v| match tree.parent(v) {
                Some(_) if tree.edge_id(v) != usize::MAX => work.tree.edge_id(tree.edge_id(v)),
                _ => usize::MAX,
            })
            .collect();
        RootedTree::from_parents(tree.root(), tree.parents().to_vec(), (0..tree.n()).map(|v| tree.weight(v)).collect(), ids)
            .expect("relabelling keeps the shape")
    };
    Ok(problems(&work, g)
        .into_iter()
        .map(|bp| BipartiteProblem { t1: relabel(&bp.t1), t2: relabel(&bp.t2), crossing: bp.crossing })
        .collect())
}

/// Problems over the working tree, labelled by working-tree child vertices.
pub(crate) fn problems(work: &Work, g: &WeightedGraph) -> Vec<BipartiteProblem> {
    let (tree, et) = (&work.tree, &work.et);
    let mut groups: Vec<Vec<(usize, usize, u64)>> = vec![Vec::new(); tree.n()];
    for e in g.edges() {
        let z = et.lca(e.u, e.v);
        if z == e.u || z == e.v {
            continue;
        }
        let first = tree.children(z)[0];
        let (u, v) = if et.is_ancestor(first, e.u) { (e.u, e.v) } else { (e.v, e.u) };
        groups[z].push((u, v, e.w));
    }
    if groups.iter().all(Vec::is_empty) {
        return Vec::new();
    }
    let pm = PathMin::new(tree, |c| (work.f[c], c));
    let side = |marked: &[usize], z: usize| {
        let (nodes, parent) = virtual_tree(et, marked, z);
        let k = nodes.len();
        let mut weight = vec![0u64; k];
        let mut label = vec![usize::MAX; k];
        for i in 1..k {
            let p = parent[i].expect("non-root has a kept ancestor");
            let (w, c) = pm.min_to_ancestor(nodes[i], nodes[p]).expect("distinct vertices");
            weight[i] = w as u64;
            label[i] = if w >= INF { usize::MAX } else { c };
        }
        let t = RootedTree::from_parents(0, parent, weight, label).expect("virtual tree is a tree");
        (t, nodes)
    };
    let index = |nodes: &[usize], v: usize| {
        nodes.binary_search_by_key(&et.tin(v), |&x| et.tin(x)).expect("endpoint is kept")
    };
    groups
        .par_iter()
        .enumerate()
        .filter(|(_, grp)| !grp.is_empty())
        .map(|(z, grp)| {
            let us: Vec<usize> = grp.iter().map(|e| e.0).collect();
            let vs: Vec<usize> = grp.iter().map(|e| e.1).collect();
            let (t1, n1) = side(&us, z);
            let (t2, n2) = side(&vs, z);
            let crossing =
                grp.iter().map(|&(u, v, w)| (index(&n1, u), index(&n2, v), -2 * w as i64)).collect();
            BipartiteProblem { t1, t2, crossing }
        })
        .collect()
}

/// Seed for the RC tree over `T1`; it only affects the recursion shape.
const T1_SEED: u64 = 0xb1_9a27;

/// Below this many crossing edges a cluster's children are solved in turn.
const PAR_CUTOFF: usize = 256;

/// Exact minimum of the bipartite problem, or `None` when either tree has no
/// cuttable edge. Ties go to the smaller `(e1, e2)`.
pub fn solve_bipartite(bp: &BipartiteProblem) -> Option<BipartiteSolution> {
    if bp.t1.n() < 2 || bp.t2.n() < 2 {
        return None;
    }
    let rc = RcTree::build(&bp.t1, T1_SEED).expect("problem trees have at most two children per vertex");

    // T2 vertices by preorder position, so copies stay sorted.
    let order = bp.t2.preorder();
    let mut pos = vec![0usize; bp.t2.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let crossing: Vec<(usize, usize, i64)> = bp.crossing.iter().map(|&(u, v, w)| (u, pos[v], w)).collect();

    // Crossing edges whose T1 endpoint is inside each cluster.
    let mut at_vertex: Vec<Vec<u32>> = vec![Vec::new(); bp.t1.n()];
    for (i, &(u, _, _)) in crossing.iter().enumerate() {
        at_vertex[u].push(i as u32);
    }
    let clusters = rc.clusters();
    let mut inside: Vec<Vec<u32>> = vec![Vec::new(); clusters.len()];
    for id in 0..clusters.len() {
        let c = &clusters[id];
        inside[id] = match c.kind {
            ClusterKind::LeafVertex => std::mem::take(&mut at_vertex[c.rep]),
            ClusterKind::LeafEdge => Vec::new(),
            _ => c.children().flat_map(|(_, y)| inside[y].iter().copied()).collect(),
        };
    }

    let full = Copy::full(&bp.t2, &order);
    let ctx = Ctx { t1: &bp.t1, rc: &rc, crossing: &crossing, inside: &inside };
    let root = full.compress(&ctx.marks(rc.root()));
    ctx.solve(rc.root(), &root, &root)
}

struct Ctx<'a> {
    t1: &'a RootedTree,
    rc: &'a RcTree,
    crossing: &'a [(usize, usize, i64)],
    inside: &'a [Vec<u32>],
}

impl Ctx<'_> {
    /// T2 positions of the crossing edges inside cluster `x`.
    fn marks(&self, x: ClusterId) -> Vec<usize> {
        self.inside[x].iter().map(|&i| self.crossing[i as usize].1).collect()
    }

    fn solve(&self, x: ClusterId, a: &Copy, b: &Copy) -> Option<BipartiteSolution> {
        let cluster = self.rc.cluster(x);
        if cluster.kind == ClusterKind::LeafEdge {
            let c = cluster.rep;
            let w1 = self.t1.weight(c);
            if w1 >= INF as u64 {
                return None;
            }
            let best = a.lightest()?;
            return Some(BipartiteSolution { value: w1 as i64 + best.w, e1: self.t1.edge_id(c), e2: best.id });
        }
        let children: Vec<(Slot, ClusterId)> = cluster.children().filter(|&(s, _)| s != Slot::Rep).collect();
        let child = |&(slot, y): &(Slot, ClusterId)| {
            let marks = self.marks(y);
            let leaf = self.rc.cluster(y).kind == ClusterKind::LeafEdge;
            let (ay, by) = match slot {
                Slot::Top => {
                    // Everything else inside x lies below y's lower boundary.
                    let adds: Vec<(usize, i64)> = cluster
                        .children()
                        .filter(|&(_, o)| o != y)
                        .flat_map(|(_, o)| self.inside[o].iter())
                        .map(|&i| (self.crossing[i as usize].1, self.crossing[i as usize].2))
                        .collect();
                    let mut grown = a.clone();
                    grown.add_paths(&adds);
                    (grown.compress(&marks), if leaf { None } else { Some(b.compress(&marks)) })
                }
                Slot::Bottom => (a.compress(&marks), if leaf { None } else { Some(b.compress(&marks)) }),
                Slot::Unary(_) => (b.compress(&marks), None),
                Slot::Rep => unreachable!("rep leaves are filtered out"),
            };
            let by = by.as_ref().unwrap_or(&ay);
            self.solve(y, &ay, by)
        };
        if self.inside[x].len() >= PAR_CUTOFF {
            children.par_iter().filter_map(child).min()
        } else {
            children.iter().filter_map(child).min()
        }
    }
}

fn lab_min(a: Lab, b: Lab) -> Lab {
    if (a.w, a.id) <= (b.w, b.id) {
        a
    } else {
        b
    }
}

const NO_LAB: Lab = Lab { w: INF, id: usize::MAX };

/// A weighted copy of `T2` restricted to some of its vertices. Vertices are
/// stored by increasing preorder position, index 0 being the root; each
/// non-root vertex keeps the lightest edge on the path to its kept parent.
#[derive(Debug, Clone)]
struct Copy {
    pos: Vec<usize>,
    parent: Vec<usize>,
    edge: Vec<Lab>,
    /// Lightest edge among those that no longer lead to a kept vertex.
    dropped: Lab,
}

impl Copy {
    fn full(t2: &RootedTree, order: &[usize]) -> Self {
        let mut at = vec![0usize; t2.n()];
        for (i, &v) in order.iter().enumerate() {
            at[v] = i;
        }
        let parent = order.iter().map(|&v| t2.parent(v).map_or(usize::MAX, |p| at[p])).collect();
        let edge = order
            .iter()
            .map(|&v| match t2.parent(v) {
                Some(_) if t2.weight(v) < INF as u64 => Lab::new(t2.weight(v) as i64, t2.edge_id(v)),
                _ => NO_LAB,
            })
            .collect();
        Self { pos: (0..order.len()).collect(), parent, edge, dropped: NO_LAB }
    }

    fn index(&self, p: usize) -> usize {
        self.pos.binary_search(&p).expect("marked vertex is kept in the copy")
    }

    /// Adds `w` to every edge between the root and `v`, for each `(v, w)`.
    fn add_paths(&mut self, adds: &[(usize, i64)]) {
        if adds.is_empty() {
            return;
        }
        let mut acc = vec![0i64; self.pos.len()];
        for &(p, w) in adds {
            acc[self.index(p)] += w;
        }
        for i in (1..self.pos.len()).rev() {
            let s = acc[i];
            acc[self.parent[i]] += s;
            if self.edge[i].w != INF {
                self.edge[i].w += s;
            }
        }
    }

    /// Keeps the root, the marked vertices and their branching points,
    /// splicing out every other vertex.
    fn compress(&self, marked: &[usize]) -> Self {
        let k = self.pos.len();
        let mut count = vec![0u32; k];
        let mut keep = vec![false; k];
        keep[0] = true;
        for &p in marked {
            let i = self.index(p);
            count[i] = 1;
            keep[i] = true;
        }
        let mut branches = vec![0u8; k];
        for i in (1..k).rev() {
            let p = self.parent[i];
            if count[i] > 0 {
                count[p] += count[i];
                branches[p] = branches[p].saturating_add(1);
            }
        }
        let mut out = Self { pos: Vec::new(), parent: Vec::new(), edge: Vec::new(), dropped: self.dropped };
        // Per vertex: nearest kept vertex at or above it (new index) and the
        // lightest edge on the way there.
        let mut up: Vec<(usize, Lab)> = vec![(0, NO_LAB); k];
        out.pos.push(self.pos[0]);
        out.parent.push(usize::MAX);
        out.edge.push(NO_LAB);
        for i in 1..k {
            if count[i] == 0 {
                out.dropped = lab_min(out.dropped, self.edge[i]);
                continue;
            }
            let (anchor, seg) = up[self.parent[i]];
            let seg = lab_min(seg, self.edge[i]);
            if keep[i] || branches[i] >= 2 {
                up[i] = (out.pos.len(), NO_LAB);
                out.pos.push(self.pos[i]);
                out.parent.push(anchor);
                out.edge.push(seg);
            } else {
                up[i] = (anchor, seg);
            }
        }
        out
    }

    fn lightest(&self) -> Option<Lab> {
        let best = self.edge[1..].iter().fold(self.dropped, |m, &e| lab_min(m, e));
        (best.w != INF).then_some(best)
    }
}
