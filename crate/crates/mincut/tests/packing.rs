mod common;

use mincut::approx::Constants;
use mincut::graph::{ternarize, UnionFind, WeightedGraph};
use mincut::oracles::stoer_wagner;
use mincut::packing::{default_tree_count, pack_rounds, pack_trees};
use mincut::rng::Rng;
use mincut::two_respecting::min_2respecting;
use rand::Rng as _;

fn is_spanning_tree(g: &WeightedGraph, t: &mincut::graph::RootedTree) -> bool {
    let mut dsu = UnionFind::new(g.n());
    let mut count = 0;
    for v in (0..t.n()).filter(|&v| t.parent(v).is_some()) {
        let Some(e) = g.edges().iter().find(|e| e.eid == t.edge_id(v)) else { return false };
        let p = t.parent(v).unwrap();
        if !((e.u, e.v) == (v, p) || (e.u, e.v) == (p, v)) || !dsu.union(e.u, e.v) {
            return false;
        }
        count += 1;
    }
    t.n() == g.n() && count + 1 == g.n()
}

#[test]
fn two_vertices() {
    let g = WeightedGraph::new(2, [(0, 1, 5)]).unwrap();
    let trees = pack_trees(&g, &Constants::default(), 2, &Rng::new(0)).unwrap();
    assert!(trees.iter().all(|t| t.edge_id(1) == 0));
}

#[test]
fn trees_span_and_are_deterministic() {
    let mut rng = Rng::new(1);
    for seed in 0..30 {
        let n = rng.gen_range(2..40);
        let g = common::connected_graph(n, n - 1 + rng.gen_range(0..3 * n), 1000, &mut rng);
        let count = default_tree_count(n, 2.0);
        let trees = pack_trees(&g, &Constants::default(), count, &Rng::new(seed)).unwrap();
        assert!(!trees.is_empty() && trees.len() <= count);
        assert!(trees.iter().all(|t| is_spanning_tree(&g, t)));
        assert_eq!(trees, pack_trees(&g, &Constants::default(), count, &Rng::new(seed)).unwrap());
    }
}

#[test]
fn loads_grow_by_one_tree_per_round() {
    let mut rng = Rng::new(2);
    let g = common::connected_graph(20, 70, 6, &mut rng);
    for rounds in [1, 5, 17] {
        let p = pack_rounds(&g, rounds).unwrap();
        assert_eq!(p.trees.len(), rounds);
        assert_eq!(p.loads.iter().sum::<u64>(), rounds as u64 * 19);
        for (i, load) in p.loads.iter().enumerate() {
            assert_eq!(*load, p.trees.iter().filter(|t| t.contains(&i)).count() as u64);
        }
    }
}

#[test]
fn minimum_cut_two_respects_a_packed_tree() {
    let consts = Constants::default();
    let mut hits = 0;
    for seed in 0..200 {
        let mut rng = Rng::new(500 + seed);
        let n = rng.gen_range(2..=20);
        let g = common::connected_graph(n, n - 1 + rng.gen_range(0..3 * n), 50, &mut rng);
        let h = ternarize(&g).unwrap().graph;
        let trees = pack_trees(&h, &consts, default_tree_count(h.n(), consts.delta), &Rng::new(seed)).unwrap();
        let best = trees.iter().map(|t| min_2respecting(&h, t).unwrap().value).min().unwrap();
        hits += usize::from(best == stoer_wagner(&g).unwrap().weight);
    }
    assert!(hits >= 190, "{hits}/200");
}
