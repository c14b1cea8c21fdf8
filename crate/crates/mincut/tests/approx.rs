mod common;

use mincut::approx::{
    constant_approx_min_cut, k_approx_min_cut, logn_approx, matula_approx, scan_first_search, sparse_certificate,
    trials_for, Constants,
};
use mincut::graph::{cut_weight, UnionFind, WeightedGraph};
use mincut::oracles::stoer_wagner;
use mincut::rng::Rng;
use mincut::sampling::log2_ceil;
use proptest::prelude::*;
use rand::Rng as _;

fn random_graph(seed: u64, n_max: usize, w_max: u64) -> WeightedGraph {
    let mut rng = Rng::new(seed);
    let n = rng.gen_range(2..=n_max);
    common::connected_graph(n, n - 1 + rng.gen_range(0..3 * n), w_max, &mut rng)
}

#[test]
fn logn_approx_brackets_the_minimum() {
    let mut within = 0;
    for seed in 0..200 {
        let g = random_graph(seed, 20, 50);
        let exact = stoer_wagner(&g).unwrap().weight;
        let c = logn_approx(&g, 3.0, &Rng::new(seed)).unwrap();
        assert!(c.weight >= exact);
        assert_eq!(cut_weight(&g, &c.side).unwrap(), c.weight);
        within += usize::from(c.weight <= log2_ceil(g.n()) as u64 * exact);
    }
    assert!(within >= 198, "{within}");
}

#[test]
fn k_approx_large_k_finds_triangle_cut() {
    let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
    assert_eq!(k_approx_min_cut(&g, trials_for(3, 8, 3.0), &Rng::new(0)).unwrap().weight, 3);
}

#[test]
fn scan_first_search_spans_each_component() {
    let mut rng = Rng::new(1);
    for _ in 0..50 {
        let a = common::connected_graph(8, 15, 5, &mut rng);
        let b = common::connected_graph(6, 9, 5, &mut rng);
        let mut edges: Vec<(usize, usize, u64)> = a.edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        edges.extend(b.edges().iter().map(|e| (e.u + 8, e.v + 8, e.w)));
        let g = WeightedGraph::new(14, edges).unwrap();
        let parent = scan_first_search(&g, 0);
        let mut dsu = UnionFind::new(14);
        let used: Vec<usize> = parent.iter().flatten().copied().collect();
        assert_eq!(used.len(), 12);
        for &i in &used {
            let e = g.edges()[i];
            assert!(dsu.union(e.u, e.v), "forest edges never close a cycle");
        }
    }
}

#[test]
fn certificate_of_unit_cycle() {
    let g = WeightedGraph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
    let cert = sparse_certificate(&g, 2);
    assert_eq!(cert.edges().iter().map(|e| e.w).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
}

#[test]
fn matula_on_cycles() {
    for n in 3..20 {
        let g = WeightedGraph::new(n, (0..n).map(|v| (v, (v + 1) % n, 1))).unwrap();
        assert_eq!(matula_approx(&g, 1.0).unwrap().weight, 2);
    }
}

#[test]
fn matula_factor_for_small_eps() {
    for seed in 0..100 {
        let g = random_graph(1000 + seed, 20, 40);
        let exact = stoer_wagner(&g).unwrap().weight;
        let eps = 0.25;
        let m = matula_approx(&g, eps).unwrap();
        assert!(m.weight >= exact);
        assert!(m.weight as f64 <= (2.0 + eps) * exact as f64, "seed {seed}: {} vs {exact}", m.weight);
        assert_eq!(cut_weight(&g, &m.side).unwrap(), m.weight);
    }
}

#[test]
fn constant_approx_within_four() {
    let consts = Constants::default();
    let mut within = 0;
    for seed in 0..200 {
        let g = random_graph(2000 + seed, 20, 50);
        let exact = stoer_wagner(&g).unwrap().weight;
        let r = constant_approx_min_cut(&g, &consts, &Rng::new(seed)).unwrap();
        assert_eq!(cut_weight(&g, &r.cut.side).unwrap(), r.cut.weight);
        within += usize::from(r.cut.weight <= 4 * exact);
    }
    assert!(within >= 190, "{within}");
}

#[test]
fn constant_approx_on_heavy_weights() {
    let mut rng = Rng::new(3);
    let g0 = common::connected_graph(25, 90, 100, &mut rng);
    let g = WeightedGraph::new(25, g0.edges().iter().map(|e| (e.u, e.v, e.w * 1_000_003))).unwrap();
    let exact = stoer_wagner(&g).unwrap().weight;
    let r = constant_approx_min_cut(&g, &Constants::default(), &Rng::new(4)).unwrap();
    assert!(r.cut.weight >= exact && r.cut.weight <= 4 * exact);
    assert!(r.estimate > 0.0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_approximation_is_a_real_cut(seed in any::<u64>()) {
        let g = random_graph(seed, 16, 30);
        let exact = stoer_wagner(&g).unwrap().weight;
        let rng = Rng::new(seed);
        for cut in [
            k_approx_min_cut(&g, 4, &rng).unwrap(),
            matula_approx(&g, 1.0).unwrap(),
            constant_approx_min_cut(&g, &Constants::default(), &rng).unwrap().cut,
        ] {
            prop_assert_eq!(cut_weight(&g, &cut.side).unwrap(), cut.weight);
            prop_assert!(cut.weight >= exact);
        }
    }

    #[test]
    fn certificates_are_bounded(seed in any::<u64>(), k in 1u64..6) {
        let g = random_graph(seed, 15, 4);
        let cert = sparse_certificate(&g, k);
        prop_assert!(cert.total_weight() <= k * (g.n() as u64 - 1));
        for e in cert.edges() {
            let orig = g.edges().iter().find(|f| f.eid == e.eid).unwrap();
            prop_assert!(e.w <= orig.w.min(k));
        }
    }
}
