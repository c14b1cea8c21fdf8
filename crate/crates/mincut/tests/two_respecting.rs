mod common;

use common::{any_tree, connected_graph, random_spanning_tree, ternary_tree};
use mincut::graph::{cut_weight, RootedTree, WeightedGraph};
use mincut::oracles::{brute_2respecting, brute_bipartite};
use mincut::rc_tree::EulerTour;
use mincut::rng::Rng;
use mincut::two_respecting::{
    descendant_case, f_e_weights, generate_bipartite, min_2respecting, solve_bipartite, BipartiteProblem,
};
use proptest::prelude::*;
use rand::Rng as _;

/// Tree whose root has one child and every other vertex at most two.
fn hanging_binary_tree(n: usize, max_w: u64, rng: &mut Rng) -> RootedTree {
    let mut parent = vec![None; n];
    let mut kids = vec![0usize; n];
    let mut open: Vec<usize> = vec![0];
    for v in 1..n {
        let i = rng.gen_range(0..open.len());
        let p = open[i];
        parent[v] = Some(p);
        kids[p] += 1;
        if kids[p] == if p == 0 { 1 } else { 2 } {
            open.swap_remove(i);
        }
        open.push(v);
    }
    let weight = (0..n).map(|v| if v == 0 { 0 } else { rng.gen_range(1..=max_w) }).collect();
    RootedTree::from_parents(0, parent, weight, (0..n).map(|v| 100 + v).collect()).unwrap()
}

fn random_problem(seed: u64) -> BipartiteProblem {
    let mut rng = Rng::new(seed);
    let n1 = rng.gen_range(2..12);
    let n2 = rng.gen_range(2..12);
    let t1 = hanging_binary_tree(n1, 30, &mut rng);
    let t2 = hanging_binary_tree(n2, 30, &mut rng);
    let k = rng.gen_range(1..=40);
    let crossing = (0..k)
        .map(|_| (rng.gen_range(0..n1), rng.gen_range(0..n2), -2 * rng.gen_range(1..=10i64)))
        .collect();
    BipartiteProblem { t1, t2, crossing }
}

/// Smallest cut over single edges and ancestor-related pairs, by brute force.
fn brute_descendant(g: &WeightedGraph, t: &RootedTree) -> u64 {
    let et = EulerTour::new(t);
    let edges: Vec<usize> = (0..t.n()).filter(|&v| t.parent(v).is_some()).collect();
    let mut best = u64::MAX;
    for &a in &edges {
        for &b in &edges {
            if a != b && !et.is_ancestor(a, b) {
                continue;
            }
            let side: Vec<bool> = (0..t.n()).map(|v| et.is_ancestor(a, v) ^ (a != b && et.is_ancestor(b, v))).collect();
            best = best.min(cut_weight(g, &side).unwrap());
        }
    }
    best
}

#[test]
fn f_matches_naive_marking() {
    let mut rng = Rng::new(5);
    for _ in 0..30 {
        let n = rng.gen_range(2..25);
        let g = connected_graph(n, n + rng.gen_range(0..30), 20, &mut rng);
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        let et = EulerTour::new(&t);
        let f = f_e_weights(&g, &t).unwrap();
        for c in (0..n).filter(|&c| t.parent(c).is_some()) {
            let naive: u64 =
                g.edges().iter().filter(|e| et.is_ancestor(c, e.u) != et.is_ancestor(c, e.v)).map(|e| e.w).sum();
            assert_eq!(f[c], naive, "edge above {c}");
        }
    }
}

#[test]
fn min_2respecting_matches_brute_force() {
    let mut rng = Rng::new(17);
    for round in 0..200 {
        let n = rng.gen_range(2..30);
        let g = connected_graph(n, n - 1 + rng.gen_range(0..3 * n), 25, &mut rng);
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        let fast = min_2respecting(&g, &t).unwrap();
        let slow = brute_2respecting(&g, &t).unwrap();
        assert_eq!(fast.value, slow.value, "round {round}");
        assert_eq!(cut_weight(&g, &fast.side(&t)).unwrap(), fast.value, "round {round}");
        assert!(matches!(fast.edges.len(), 1 | 2));
    }
}

#[test]
fn high_degree_trees() {
    let mut rng = Rng::new(23);
    for _ in 0..60 {
        let n = rng.gen_range(3..40);
        let t = any_tree(n, 9, &mut rng);
        let mut edges: Vec<(usize, usize, u64)> = t.to_edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        for _ in 0..rng.gen_range(0..2 * n) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                edges.push((u, v, rng.gen_range(1..=9)));
            }
        }
        let g = WeightedGraph::new(n, edges).unwrap();
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        assert_eq!(min_2respecting(&g, &t).unwrap().value, brute_2respecting(&g, &t).unwrap().value);
    }
}

#[test]
fn descendant_case_matches_ancestor_pairs() {
    let mut rng = Rng::new(29);
    for _ in 0..100 {
        let n = rng.gen_range(2..25);
        let g = connected_graph(n, n - 1 + rng.gen_range(0..2 * n), 15, &mut rng);
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        let cut = descendant_case(&g, &t).unwrap();
        assert_eq!(cut.value, brute_descendant(&g, &t));
        assert_eq!(cut_weight(&g, &cut.side(&t)).unwrap(), cut.value);
    }
}

#[test]
fn descendant_fixture() {
    let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 1), (0, 2, 4)]).unwrap();
    let t = RootedTree::from_edges(3, 0, &g.edges()[..2]).unwrap();
    assert_eq!(descendant_case(&g, &t).unwrap().value, 2);
}

#[test]
fn bipartite_matches_brute_force() {
    for seed in 0..400 {
        let bp = random_problem(seed);
        assert_eq!(solve_bipartite(&bp), brute_bipartite(&bp), "seed {seed}");
    }
}

#[test]
fn bipartite_uniform_root_side_crossings() {
    // All T2 endpoints at the top of T2: every T2 edge sees the same shift.
    for seed in 0..50 {
        let mut bp = random_problem(1000 + seed);
        let child = bp.t2.children(bp.t2.root())[0];
        for c in &mut bp.crossing {
            c.1 = child;
        }
        assert_eq!(solve_bipartite(&bp), brute_bipartite(&bp), "seed {seed}");
    }
}

#[test]
fn no_bipartite_problems_without_independent_edges() {
    let g = WeightedGraph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
    let t = RootedTree::from_edges(4, 0, g.edges()).unwrap();
    assert!(generate_bipartite(&g, &t).unwrap().is_empty());

    // Path r - a - b with a chord between a and b: the chord is on one side.
    let g = WeightedGraph::new(3, [(0, 1, 1), (1, 2, 1), (1, 2, 2)]).unwrap();
    let t = RootedTree::from_edges(3, 0, &g.edges()[..2]).unwrap();
    assert!(generate_bipartite(&g, &t).unwrap().is_empty());
}

#[test]
fn generated_problems_are_small_and_cover_each_edge_once() {
    let mut rng = Rng::new(31);
    for _ in 0..50 {
        let n = rng.gen_range(2..40);
        let t0 = ternary_tree(n, 10, &mut rng);
        let mut edges: Vec<(usize, usize, u64)> = t0.to_edges().iter().map(|e| (e.u, e.v, e.w)).collect();
        for _ in 0..rng.gen_range(0..3 * n) {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                edges.push((u, v, rng.gen_range(1..=10)));
            }
        }
        let g = WeightedGraph::new(n, edges).unwrap();
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        let problems = generate_bipartite(&g, &t).unwrap();
        let total: usize = problems.iter().map(|p| p.crossing.len()).sum();
        let et = EulerTour::new(&t);
        let independent = g.edges().iter().filter(|e| !et.is_ancestor(e.u, e.v) && !et.is_ancestor(e.v, e.u)).count();
        assert_eq!(total, independent);
        for p in &problems {
            assert!(!p.crossing.is_empty());
            // Each side holds its distinct endpoints, their branching points and the top.
            assert!(p.t1.n() + p.t2.n() <= 4 * p.crossing.len());
            let solved = solve_bipartite(p);
            assert_eq!(solved.map(|s| s.value), brute_bipartite(p).map(|s| s.value));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prop_two_respecting_exact(seed in any::<u64>(), n in 2usize..20, extra in 0usize..30) {
        let mut rng = Rng::new(seed);
        let g = connected_graph(n, n - 1 + extra, 12, &mut rng);
        let t = random_spanning_tree(&g, rng.gen_range(0..n), &mut rng);
        prop_assert_eq!(min_2respecting(&g, &t).unwrap().value, brute_2respecting(&g, &t).unwrap().value);
    }

    #[test]
    fn prop_bipartite_exact(seed in any::<u64>()) {
        let bp = random_problem(seed);
        prop_assert_eq!(solve_bipartite(&bp), brute_bipartite(&bp));
    }
}
