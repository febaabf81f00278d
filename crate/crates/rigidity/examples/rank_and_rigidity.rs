//! Rank, degrees of freedom, and rigidity of a few graphs across
//! dimensions 1 to 3.
//!
//! The rank is computed on randomized frameworks over a large prime
//! field, so a reported rank never exceeds the generic one; repeating
//! with the same seed reproduces the numbers exactly.

use rigidity::{complete_graph, cone, cycle_graph, figure2a_graph, RigidityEngine};

fn main() {
    let engine = RigidityEngine::default();
    let graphs = [
        ("K_5", complete_graph(5)),
        ("C_6", cycle_graph(6)),
        ("wheel on 7 vertices", cone(&cycle_graph(6))),
        ("K_4 minus an edge", complete_graph(4).delete_edge(0, 1).unwrap()),
        ("separable wheel construction", figure2a_graph()),
    ];
    for (name, g) in &graphs {
        println!("{name} ({} vertices, {} edges)", g.vertex_count(), g.edge_count());
        for d in 1..=3 {
            let rank = engine.rank_d(g, d);
            let rigid = engine.is_rigid(g, d);
            match engine.dof(g, d) {
                Some(dof) => println!("  d={d}: rank {rank}, dof {dof}, rigid: {rigid}"),
                None => println!("  d={d}: rank {rank}, rigid: {rigid} (too few vertices for dof)"),
            }
        }
    }

    // a rigid graph stays rigid after a rank-preserving vertex addition
    let k4 = complete_graph(4);
    assert!(engine.is_rigid(&k4, 2));
    assert_eq!(engine.rank_d(&k4, 2), 5, "one edge beyond independence");
}
