//! The two classical necessary conditions for global rigidity, and graphs
//! that satisfy both without being globally rigid.

use rigidity::{
    complete_bipartite, complete_graph, figure1_graph, figure2a_graph, hendrickson_check,
    is_h_graph, RigidityEngine,
};

fn main() {
    let engine = RigidityEngine::default();
    let cases = [
        ("K_{5,5}", complete_bipartite(5, 5)),
        ("separable wheel construction", figure2a_graph()),
        ("four overlapping K_5 blocks", figure1_graph()),
        ("K_6", complete_graph(6)),
    ];
    for (name, g) in &cases {
        let h = hendrickson_check(&engine, g, 3).unwrap();
        println!(
            "{name}: connectivity {}, 4-connected: {}, redundantly rigid: {}, passes: {}",
            h.connectivity, h.is_d_plus_1_connected, h.is_redundantly_rigid, h.passes_hendrickson
        );
        // an H-graph passes the necessary conditions yet is not globally
        // rigid, so the conditions are not sufficient in d = 3
        if is_h_graph(&engine, g, 3).unwrap() {
            println!("  -> H-graph: necessary conditions hold, global rigidity fails");
        }
    }
}
