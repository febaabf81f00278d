//! Global rigidity verdicts with replayable stress certificates.
//!
//! A positive verdict exhibits an equilibrium stress whose stress matrix
//! reaches the maximal possible rank n - d - 1; the certificate records
//! the framework and stress seeds, so the matrix can be rebuilt and the
//! rank checked independently.

use rigidity::{
    complete_bipartite, cone, cycle_graph, is_globally_rigid, ring_of_k5, sample_framework,
    stress_matrix, stress_space_basis, RigidityEngine,
};

fn main() {
    let engine = RigidityEngine::default();
    let cases = [
        ("wheel on 6 vertices, d=2", cone(&cycle_graph(5)), 2),
        ("K_{5,5}, d=3", complete_bipartite(5, 5), 3),
        ("ring of six K_5 blocks, d=3", ring_of_k5(6).unwrap(), 3),
        ("C_5, d=1", cycle_graph(5), 1),
    ];
    for (name, g, d) in &cases {
        let verdict = is_globally_rigid(&engine, g, *d);
        println!("{name}: {:?} ({})", verdict.decision, verdict.failure_probability_note);
        if let Some(cert) = &verdict.certificate {
            // replay: rebuild the certified stress and its matrix rank
            let fw = sample_framework(g, *d, engine.config().field, cert.framework_seed);
            let basis = stress_space_basis(&fw);
            println!(
                "  certificate: stress matrix rank {} of target {}, stress space dim {}",
                cert.achieved_rank,
                cert.target_rank,
                basis.len()
            );
            let omega = &basis[0];
            let m = stress_matrix(&fw, omega).unwrap();
            assert!(m.rank() <= cert.target_rank);
        }
    }

    // every equilibrium stress annihilates the framework coordinates
    let wheel = cone(&cycle_graph(5));
    let fw = sample_framework(&wheel, 2, engine.config().field, 42);
    for omega in stress_space_basis(&fw) {
        let m = stress_matrix(&fw, &omega).unwrap();
        for k in 0..2 {
            let coords: Vec<u64> = (0..wheel.vertex_count()).map(|v| fw.coordinate(v, k)).collect();
            assert!(m.mul_vec(&coords).unwrap().iter().all(|&x| x == 0));
        }
    }
    println!("\nstress matrices annihilate the generating framework: verified");
}
