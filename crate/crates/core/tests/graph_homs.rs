use std::collections::BTreeSet;

use kunzlab::graphs::{
    complete_bipartite, cycle, h_q, heavy_index_graph, hom_count, hom_count_dp, hom_kdd,
    hom_kdd_within_bound, regularize, rooted_regular_graphs, zhao_holds, LabeledGraph,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> LabeledGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    LabeledGraph::from_edges(n, &edges).unwrap()
}

/// Maps `V(G) → [q]` with every edge label sum at least `q`.
fn hom_into_threshold(g: &LabeledGraph, q: u32) -> u64 {
    let n = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    (0..(q as u64).pow(n as u32))
        .filter(|&code| {
            let label = |v: usize| (code / (q as u64).pow(v as u32)) % q as u64 + 1;
            edges.iter().all(|&(u, v)| label(u) + label(v) >= q as u64)
        })
        .count() as u64
}

fn random_edges() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..7).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (
            Just(n),
            proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()),
        )
    })
}

#[test]
fn regularize_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut runs = 0;
    while runs < 600 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, n, p);
        let d = rng.gen_range(g.max_degree().max(1)..=4.max(g.max_degree()));
        if d > 4 {
            continue;
        }
        runs += 1;
        let r = regularize(&g, d).unwrap();
        assert!(r.graph.is_regular(d), "d = {d}\n{g}");
        assert!(!r.graph.has_loops());
        let disc = g.discrepancy(d);
        let extra = (r.graph.vertex_count() - 1 - n) as i64 * d as i64;
        let bound = (3 * d as i64 + disc).max(2 * d.div_ceil(2) as i64 * d as i64);
        assert!(
            extra <= bound,
            "{} vertices for d = {d}\n{g}",
            r.graph.vertex_count()
        );
        for q in 2..=4 {
            let h = h_q(q);
            assert!(
                hom_count_dp(&g, &h).value() <= hom_count_dp(&r.graph, &h).value(),
                "q = {q}\n{g}"
            );
        }
        for (u, v) in g.edges() {
            assert!(r.graph.has_edge(u, v) || r.removed_edges.contains(&(u, v)));
        }
    }
}

#[test]
fn kdd_closed_form_and_dominance() {
    for d in 1..=3u32 {
        for q in 1..=5u32 {
            let k = complete_bipartite(d as usize, d as usize);
            assert_eq!(hom_kdd(d, q), hom_into_threshold(&k, q), "d = {d}, q = {q}");
        }
    }
    for d in 1..=8 {
        for q in 1..=10 {
            assert!(hom_kdd_within_bound(d, q), "d = {d}, q = {q}");
        }
    }
}

#[test]
fn zhao_on_cycles_and_complete_graphs() {
    for n in 3..=12 {
        for q in 1..=6 {
            assert!(zhao_holds(&cycle(n), &h_q(q), 2), "C_{n}, q = {q}");
        }
    }
    for d in 1..=5usize {
        let edges: Vec<_> = (0..=d)
            .flat_map(|u| (u + 1..=d).map(move |v| (u, v)))
            .collect();
        let k = LabeledGraph::from_edges(d + 1, &edges).unwrap();
        for q in 1..=5 {
            assert!(zhao_holds(&k, &h_q(q), d), "K_{}, q = {q}", d + 1);
        }
    }
}

#[test]
fn rooted_regular_graphs_are_regular() {
    for d in 1..=3 {
        for n in 2..=8 {
            for g in rooted_regular_graphs(n, d) {
                assert!(g.is_regular(d));
                assert!(!g.has_loops());
            }
        }
    }
    // K_4 is the only cubic graph on four vertices
    assert_eq!(rooted_regular_graphs(4, 3).len(), 1);
    assert!(rooted_regular_graphs(5, 3).is_empty());
}

proptest! {
    #[test]
    fn dp_agrees_with_brute_force((n, edges) in random_edges(), q in 1u32..5) {
        let g = LabeledGraph::from_edges(n, &edges).unwrap();
        let want = hom_into_threshold(&g, q);
        prop_assert_eq!(hom_count_dp(&g, &h_q(q)), want);
        prop_assert_eq!(hom_count(&g, &h_q(q)).unwrap(), want);
    }

    #[test]
    fn discrepancy_two_ways((n, edges) in random_edges(), d in 0usize..6) {
        let g = LabeledGraph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(g.discrepancy(d), g.discrepancy_by_degrees(d));
    }

    #[test]
    fn edge_list_round_trip((n, edges) in random_edges()) {
        let g = LabeledGraph::from_edges(n, &edges).unwrap();
        let back: LabeledGraph = g.to_edge_list().parse().unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn heavy_index_graph_dominates_heads(
        ell in 2usize..=10,
        h_frac in 0.2f64..0.8,
        q in 2u32..5,
        mask in any::<u16>(),
    ) {
        let h = ((ell as f64 * h_frac) as usize).clamp(1, ell - 1);
        let positions: BTreeSet<usize> = (h + 1..=ell).filter(|p| mask >> (p - h - 1) & 1 == 1).collect();
        let g = heavy_index_graph(h, &positions).unwrap();
        let homs = hom_count_dp(&g, &h_q(q));
        // heads whose pairs (diagonal included) summing into `positions`
        // reach q
        let heads = (0..(q as u64).pow(h as u32))
            .filter(|&code| {
                let w = |x: usize| (code / (q as u64).pow(x as u32 - 1)) % q as u64 + 1;
                (1..=h).all(|x| (x..=h).all(|y| !positions.contains(&(x + y)) || w(x) + w(y) >= q as u64))
            })
            .count() as u64;
        prop_assert!(homs.value() >= &heads.into());
    }
}

#[test]
fn heavy_index_example() {
    let g = heavy_index_graph(3, &BTreeSet::from([4])).unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 2)]);
}
