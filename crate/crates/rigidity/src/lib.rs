//! Generic rigidity analysis of finite simple graphs.
//!
//! The crate computes ranks in the d-dimensional generic rigidity matroid
//! by sampling frameworks over large prime fields, and builds on that one
//! primitive: rigidity and redundant rigidity tests, the matroid component
//! partition with separability witnesses, global rigidity certificates via
//! stress matrix ranks, Hendrickson condition reports, and a
//! reconstructibility classifier. A verification harness replays the
//! structural theorems behind those verdicts on generated corpora, with
//! brute-force oracles for small instances.
//!
//! Randomized rank computations can only underestimate the generic rank,
//! so every positive certificate is sound; negative verdicts are Monte
//! Carlo with error probability bounded by trials x |E| x (degree / p).
//! All sampling is deterministic in (graph, dimension, seed, modulus), and
//! reports serialize to stable bytes.
//!
//! ```
//! use rigidity::{complete_graph, RigidityEngine};
//!
//! let engine = RigidityEngine::default();
//! let k5 = complete_graph(5);
//! assert_eq!(engine.rank_d(&k5, 3), 9);
//! assert!(engine.is_rigid(&k5, 3));
//! ```

pub mod cli;
pub mod engine;
pub mod field;
pub mod global;
pub mod graph;
pub mod harness;
pub mod linalg;

pub use engine::{EngineConfig, EngineError, MatroidReport, RigidityEngine, Witness};
pub use field::{derive_seed, PrimeField, SplitMix64, ALT62, MERSENNE61};
pub use global::{
    classify_reconstructibility, hendrickson_check, is_globally_rigid, is_h_graph,
    stress_matrix, stress_space_basis, Decomposition, GlobalDecision, GlobalError,
    GlobalRigidityVerdict, HendricksonReport, ReconstructibilityVerdict,
    ReconstructionDecision, ReconstructionEvidence, StressCertificate, StressVector,
};
pub use graph::{
    complete_bipartite, complete_graph, cone, cycle_graph, figure1_graph, figure2a_graph,
    figure2b_graph, glue, glue_full, is_k_connected, path_graph, ring_of_k5,
    vertex_connectivity, Graph, GraphError, GlueOutcome, VertexPartitionSpec,
};
pub use harness::{
    brute_circuits, brute_m_components, default_corpus, motion_dims, named_graphs,
    random_corpus, run_suite, CorpusSpec, HarnessError, MotionDims, PropertyResult, Suite,
    Violation,
};
pub use linalg::{sample_framework, FieldMatrix, Framework, LinalgError};
