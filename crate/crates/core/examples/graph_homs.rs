//! Threshold graphs, homomorphism counts, regularization and Zhao's
//! inequality.

use std::collections::BTreeSet;

use kunzlab::graphs::{
    complete_bipartite, cycle, h_q, heavy_index_graph, hom_count_dp, hom_kdd, regularize,
    rooted_regular_graphs, zhao_holds, LabeledGraph,
};

fn main() -> kunzlab::Result<()> {
    let h3 = h_q(3);
    print!("H_3:\n{h3}");

    for d in 1..=3 {
        println!("hom(K_{d},{d}, H_4) = {}", hom_kdd(d, 4));
    }
    println!("hom(C_5, H_3) = {}", hom_count_dp(&cycle(5), &h3));

    let path = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?;
    let r = regularize(&path, 3)?;
    println!(
        "path P_4 regularized to degree 3: {} vertices, {} red, removed {:?}",
        r.graph.vertex_count(),
        r.red_added,
        r.removed_edges
    );
    for q in 2..=4 {
        let h = h_q(q);
        println!(
            "  H_{q}: {} -> {}",
            hom_count_dp(&path, &h),
            hom_count_dp(&r.graph, &h)
        );
    }

    let cubic = rooted_regular_graphs(6, 3);
    let ok = cubic
        .iter()
        .all(|g| (1..=5).all(|q| zhao_holds(g, &h_q(q), 3)));
    println!(
        "{} rooted cubic graphs on 6 vertices, Zhao holds: {ok}",
        cubic.len()
    );
    println!("K_3,3 edges: {}", complete_bipartite(3, 3).edge_count());

    let g = heavy_index_graph(5, &BTreeSet::from([6, 8]))?;
    println!(
        "heavy index graph h = 5, I = {{6, 8}}: edges {:?}",
        g.edges().collect::<Vec<_>>()
    );
    println!("hom into H_3: {}", hom_count_dp(&g, &h3));
    Ok(())
}
