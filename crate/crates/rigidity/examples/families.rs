//! Build the named graph families and print their vital statistics plus
//! the canonical JSON interchange form.

use rigidity::{
    complete_bipartite, complete_graph, cone, cycle_graph, figure1_graph, figure2a_graph,
    glue, ring_of_k5, VertexPartitionSpec,
};

fn main() {
    let wheel = cone(&cycle_graph(5));
    let spec = VertexPartitionSpec::new(vec![(0, 0), (1, 1)]);
    let glued = glue(&complete_graph(5), &complete_graph(5), &spec).unwrap();
    let named = [
        ("K_5", complete_graph(5)),
        ("K_{5,5}", complete_bipartite(5, 5)),
        ("wheel on 6 vertices", wheel),
        ("ring of six K_5 blocks", ring_of_k5(6).unwrap()),
        ("four overlapping K_5 blocks", figure1_graph()),
        ("separable wheel construction", figure2a_graph()),
        ("two K_5 sharing two vertices", glued),
    ];
    for (name, g) in &named {
        println!("{name}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    }

    // the interchange format round-trips byte-identically
    let k4 = complete_graph(4);
    let json = k4.to_json();
    print!("\nK_4 as JSON: {json}");
    assert_eq!(rigidity::Graph::from_json(&json).unwrap(), k4);
}
