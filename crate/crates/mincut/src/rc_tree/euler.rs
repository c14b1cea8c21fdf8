//! Euler tours, subtree intervals and constant-time LCA.

use crate::graph::RootedTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Down,
    Up,
}

/// Edge traversal order of a depth-first walk. Edges are named by their
/// child endpoint; every edge appears once going down and once going up.
pub fn euler_tour(t: &RootedTree) -> Vec<(usize, Direction)> {
    let mut out = Vec::with_capacity(2 * t.n().saturating_sub(1));
    // (vertex, next child index)
    let mut stack = vec![(t.root(), 0usize)];
    while let Some(&mut (v, ref mut i)) = stack.last_mut() {
        if let Some(&c) = t.children(v).get(*i) {
            *i += 1;
            out.push((c, Direction::Down));
            stack.push((c, 0));
        } else {
            stack.pop();
            if t.parent(v).is_some() {
                out.push((v, Direction::Up));
            }
        }
    }
    out
}

/// Entry/exit times plus a sparse table over the vertex Euler sequence.
#[derive(Debug, Clone)]
pub struct EulerTour {
    tin: Vec<usize>,
    tout: Vec<usize>,
    depth: Vec<usize>,
    first: Vec<usize>,
    table: Vec<Vec<usize>>,
}

impl EulerTour {
    pub fn new(t: &RootedTree) -> Self {
        let n = t.n();
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut depth = vec![0; n];
        let mut first = vec![0; n];
        let mut seq: Vec<usize> = Vec::with_capacity(2 * n);
        let mut clock = 0;
        let mut stack = vec![(t.root(), 0usize)];
        tin[t.root()] = clock;
        clock += 1;
        first[t.root()] = 0;
        seq.push(t.root());
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if let Some(&c) = t.children(v).get(*i) {
                *i += 1;
                depth[c] = depth[v] + 1;
                tin[c] = clock;
                clock += 1;
                first[c] = seq.len();
                seq.push(c);
                stack.push((c, 0));
            } else {
                stack.pop();
                tout[v] = clock;
                if let Some(&(p, _)) = stack.last() {
                    seq.push(p);
                }
            }
        }
        let mut table = vec![seq];
        let mut span = 1;
        while 2 * span <= table[0].len() {
            let prev = table.last().unwrap();
            let row: Vec<usize> = (0..prev.len() - span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[a] <= depth[b] {
                        a
                    } else {
                        b
                    }
                })
                .collect();
            table.push(row);
            span *= 2;
        }
        Self { tin, tout, depth, first, table }
    }

    /// Preorder entry time of `v`.
    pub fn tin(&self, v: usize) -> usize {
        self.tin[v]
    }

    /// One past the last entry time inside the subtree of `v`.
    pub fn tout(&self, v: usize) -> usize {
        self.tout[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// True when `a` is an ancestor of `b` (or equal to it).
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        self.tin[a] <= self.tin[b] && self.tin[b] < self.tout[a]
    }

    pub fn lca(&self, u: usize, v: usize) -> usize {
        let (mut l, mut r) = (self.first[u], self.first[v]);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let len = r - l + 1;
        let k = usize::BITS as usize - 1 - len.leading_zeros() as usize;
        let (a, b) = (self.table[k][l], self.table[k][r + 1 - (1 << k)]);
        if self.depth[a] <= self.depth[b] {
            a
        } else {
            b
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedGraph;

    fn path3() -> RootedTree {
        let g = WeightedGraph::new(3, [(0, 1, 5), (1, 2, 3)]).unwrap();
        RootedTree::from_edges(3, 0, g.edges()).unwrap()
    }

    #[test]
    fn tour_of_path() {
        let t = path3();
        assert_eq!(
            euler_tour(&t),
            vec![(1, Direction::Down), (2, Direction::Down), (2, Direction::Up), (1, Direction::Up)]
        );
    }

    #[test]
    fn tour_of_single_edge() {
        let g = WeightedGraph::new(2, [(0, 1, 5)]).unwrap();
        let t = RootedTree::from_edges(2, 0, g.edges()).unwrap();
        assert_eq!(euler_tour(&t), vec![(1, Direction::Down), (1, Direction::Up)]);
    }

    #[test]
    fn lca_on_path() {
        let t = path3();
        let e = EulerTour::new(&t);
        assert_eq!(e.lca(1, 2), 1);
        assert_eq!(e.lca(2, 2), 2);
        assert_eq!(e.lca(0, 2), 0);
        assert!(e.is_ancestor(0, 2));
        assert!(!e.is_ancestor(2, 1));
    }
}
