//! Component partition of the rigidity matroid: M-connected graphs,
//! separability witnesses, and bridges.

use rigidity::{figure1_graph, ring_of_k5, RigidityEngine};

fn main() {
    let engine = RigidityEngine::default();

    // four K_5 blocks overlapping in single vertices: rank splits as
    // 36 = 9 + 27 against any one block
    let fig = figure1_graph();
    let report = engine.analyze(&fig, 3).unwrap();
    println!(
        "overlap graph: rank {}, {} components, M-connected: {}",
        report.rank,
        report.components.len(),
        report.m_connected
    );
    for (i, class) in report.components.iter().enumerate() {
        let rank = engine.rank_of_edge_set(&fig, 3, class).unwrap();
        println!("  component {i}: {} edges, rank {rank}", class.len());
    }
    if let Some(w) = &report.witness {
        let r1 = engine.rank_of_edge_set(&fig, 3, &w.e1).unwrap();
        let r2 = engine.rank_of_edge_set(&fig, 3, &w.e2).unwrap();
        println!("  witness split: {r1} + {r2} = {}", report.rank);
    }

    // the ring of six K_5 blocks is M-connected, but deleting one
    // degree-4 vertex exposes four bridges
    let ring = ring_of_k5(6).unwrap();
    println!("\n6-ring: M-connected: {}", engine.is_m_connected(&ring, 3).unwrap());
    let keep: Vec<usize> = (0..ring.vertex_count()).filter(|&v| v != 2).collect();
    let cut = ring.induced_subgraph(&keep).unwrap();
    let bridges = engine.bridges(&cut, 3).unwrap();
    println!("after deleting a degree-4 vertex: {} bridges: {bridges:?}", bridges.len());
}
