//! Global rigidity via stress-matrix certificates, the Hendrickson
//! necessary conditions, H-graph detection, and theorem-driven
//! classification of edge-length reconstructibility.
//!
//! The certificate route: a generic framework of a globally rigid graph on
//! n >= d+2 vertices carries an equilibrium stress whose n x n stress
//! matrix has rank exactly n - d - 1, and conversely a random stress
//! achieving that rank at a random placement certifies global rigidity.
//! Over a prime field the sampled rank can only fall below the generic
//! one, so the search is one-sided: certificates are trustworthy,
//! negatives carry a small per-trial miss probability.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{
    rigidity_matrix, EngineError, RigidityEngine, Witness, PURPOSE_STRESS_COEFFS,
    PURPOSE_STRESS_FRAMEWORK,
};
use crate::graph::{is_k_connected, vertex_connectivity, Graph, GraphError};
use crate::linalg::{random_kernel_element, sample_framework, FieldMatrix, Framework};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GlobalError {
    #[error("stress vector has {got} entries but the graph has {expected} edges")]
    StressLength { expected: usize, got: usize },
    #[error("stress vector violates the equilibrium condition at coordinate {0}")]
    NotAStress(usize),
    #[error("graph has {n} vertices but this check requires at least {needed}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("reconstructibility rules apply in dimension 2 and up, got {0}")]
    DimensionTooSmall(usize),
    #[error("vertex {0} is isolated; reconstructibility rules require minimum degree 1")]
    IsolatedVertex(usize),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An equilibrium stress of one sampled framework: per-edge weights in
/// canonical edge order annihilated by the transposed rigidity matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StressVector {
    pub weights: Vec<u64>,
    /// seed of the framework this stress belongs to
    pub framework_seed: u64,
    pub dim: usize,
}

/// Basis of the stress space of a framework; size is |E| - rank(R).
pub fn stress_space_basis(fw: &Framework) -> Vec<StressVector> {
    let rt = rigidity_matrix(fw).transpose();
    rt.kernel_basis()
        .into_iter()
        .map(|weights| StressVector { weights, framework_seed: fw.seed(), dim: fw.dim() })
        .collect()
}

/// The n x n stress matrix of ω: off-diagonal (u, v) entries -ω_uv on
/// edges, zero elsewhere, diagonal chosen to zero every row sum. Rejects
/// weight vectors that fail the equilibrium condition.
pub fn stress_matrix(fw: &Framework, stress: &StressVector) -> Result<FieldMatrix, GlobalError> {
    let g = fw.graph();
    let f = fw.field();
    let m = g.edge_count();
    if stress.weights.len() != m {
        return Err(GlobalError::StressLength { expected: m, got: stress.weights.len() });
    }
    let rt = rigidity_matrix(fw).transpose();
    let image = rt.mul_vec(&stress.weights).expect("length checked");
    if let Some(bad) = image.iter().position(|&x| x != 0) {
        return Err(GlobalError::NotAStress(bad));
    }
    let n = g.vertex_count();
    let mut omega = FieldMatrix::zeros(f, n, n);
    for (&(u, v), &w) in g.edges().iter().zip(&stress.weights) {
        omega.set(u, v, f.neg(w));
        omega.set(v, u, f.neg(w));
        omega.set(u, u, f.add(omega.get(u, u), w));
        omega.set(v, v, f.add(omega.get(v, v), w));
    }
    Ok(omega)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GlobalDecision {
    GloballyRigid,
    NotGloballyRigid,
    /// at most d+1 vertices: globally rigid exactly when complete
    TriviallyRigidSmall,
}

/// Replay data for a positive verdict: reseeding the framework and stress
/// streams reproduces the rank below bit for bit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StressCertificate {
    pub framework_seed: u64,
    pub stress_seed: u64,
    pub achieved_rank: usize,
    pub target_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalRigidityVerdict {
    pub decision: GlobalDecision,
    pub certificate: Option<StressCertificate>,
    pub trials_used: usize,
    pub failure_probability_note: String,
    pub dim: usize,
    pub modulus: String,
}

impl GlobalRigidityVerdict {
    pub fn is_globally_rigid(&self) -> bool {
        matches!(self.decision, GlobalDecision::GloballyRigid | GlobalDecision::TriviallyRigidSmall)
    }
}

/// Decide global rigidity of g in dimension d.
///
/// Graphs on at most d+1 vertices are decided by completeness, dimension
/// one by exact 2-connectivity. Otherwise up to `global_trials` rounds
/// sample a framework and a random equilibrium stress and accept on stress
/// matrix rank n - d - 1.
pub fn is_globally_rigid(engine: &RigidityEngine, g: &Graph, d: usize) -> GlobalRigidityVerdict {
    assert!(d >= 1, "dimension must be at least 1");
    let n = g.vertex_count();
    let f = engine.config().field;
    let modulus = f.modulus().to_string();
    if n <= d + 1 {
        let decision = if g.is_complete() {
            GlobalDecision::TriviallyRigidSmall
        } else {
            GlobalDecision::NotGloballyRigid
        };
        return GlobalRigidityVerdict {
            decision,
            certificate: None,
            trials_used: 0,
            failure_probability_note:
                "exact: on at most d+1 vertices global rigidity is completeness".into(),
            dim: d,
            modulus,
        };
    }
    if d == 1 {
        let decision = if is_k_connected(g, 2) {
            GlobalDecision::GloballyRigid
        } else {
            GlobalDecision::NotGloballyRigid
        };
        return GlobalRigidityVerdict {
            decision,
            certificate: None,
            trials_used: 0,
            failure_probability_note:
                "exact: on the line global rigidity is 2-connectivity, no sampling involved"
                    .into(),
            dim: d,
            modulus,
        };
    }
    let target = n - d - 1;
    let trials = engine.config().global_trials;
    let note = format!(
        "one-sided Monte Carlo over F_p, p = {}: sampled stress-matrix rank never exceeds the \
         generic rank, so an achieved target of {} certifies global rigidity (assuming the \
         standard transfer from the prime field to characteristic zero); a negative verdict \
         misses a certificate with probability at most about n^2/p per trial, {} trials",
        f.modulus(),
        target,
        trials
    );
    for trial in 0..trials {
        let framework_seed = engine.purpose_seed(g, d, PURPOSE_STRESS_FRAMEWORK, trial);
        let fw = sample_framework(g, d, f, framework_seed);
        let rt = rigidity_matrix(&fw).transpose();
        let stress_seed = engine.purpose_seed(g, d, PURPOSE_STRESS_COEFFS, trial);
        let Ok(weights) = random_kernel_element(&rt, stress_seed) else {
            // independent edge set: the only stress is zero, keep trying
            // (every trial will agree, but the loop stays uniform)
            continue;
        };
        let stress = StressVector { weights, framework_seed, dim: d };
        let omega = stress_matrix(&fw, &stress).expect("kernel element is a stress");
        let achieved = omega.rank();
        if achieved == target {
            return GlobalRigidityVerdict {
                decision: GlobalDecision::GloballyRigid,
                certificate: Some(StressCertificate {
                    framework_seed,
                    stress_seed,
                    achieved_rank: achieved,
                    target_rank: target,
                }),
                trials_used: trial + 1,
                failure_probability_note: note,
                dim: d,
                modulus,
            };
        }
    }
    GlobalRigidityVerdict {
        decision: GlobalDecision::NotGloballyRigid,
        certificate: None,
        trials_used: trials,
        failure_probability_note: note,
        dim: d,
        modulus,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HendricksonReport {
    pub connectivity: usize,
    pub is_d_plus_1_connected: bool,
    pub is_redundantly_rigid: bool,
    pub passes_hendrickson: bool,
}

/// The two necessary conditions for global rigidity on >= d+2 vertices:
/// (d+1)-connectivity and redundant rigidity. Connectivity is exact,
/// redundancy probabilistic.
pub fn hendrickson_check(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
) -> Result<HendricksonReport, GlobalError> {
    let n = g.vertex_count();
    if n < d + 2 {
        return Err(GlobalError::TooFewVertices { n, needed: d + 2 });
    }
    let connectivity = vertex_connectivity(g);
    let is_d_plus_1_connected = connectivity > d;
    let is_redundantly_rigid = engine.is_redundantly_rigid(g, d)?;
    Ok(HendricksonReport {
        connectivity,
        is_d_plus_1_connected,
        is_redundantly_rigid,
        passes_hendrickson: is_d_plus_1_connected && is_redundantly_rigid,
    })
}

/// Passes the Hendrickson conditions yet is not globally rigid.
pub fn is_h_graph(engine: &RigidityEngine, g: &Graph, d: usize) -> Result<bool, GlobalError> {
    let report = hendrickson_check(engine, g, d)?;
    Ok(report.passes_hendrickson && !is_globally_rigid(engine, g, d).is_globally_rigid())
}

/// A two-piece cover of the vertex set; the pieces overlap in their
/// intersection and every edge lies inside one piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Decomposition {
    pub fn new(mut side_a: Vec<usize>, mut side_b: Vec<usize>) -> Self {
        side_a.sort_unstable();
        side_a.dedup();
        side_b.sort_unstable();
        side_b.dedup();
        Decomposition { side_a, side_b }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReconstructionDecision {
    FullyReconstructible,
    NotFullyReconstructible,
    Unknown,
}

/// Supporting data for a non-Unknown classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReconstructionEvidence {
    GlobalRigidity(GlobalRigidityVerdict),
    Separation(Witness),
    Gluing(Decomposition),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconstructibilityVerdict {
    pub decision: ReconstructionDecision,
    /// which rule fired; None exactly for Unknown
    pub rule: Option<String>,
    pub evidence: Option<ReconstructionEvidence>,
}

/// How deep the gluing rule may recurse when certifying the two sides.
const GLUING_DEPTH: usize = 3;
/// Cut enumeration budget: sizes 3..=5, size 5 only while C(n,5) stays
/// within this bound.
const CUT_ENUMERATION_BUDGET: u128 = 200_000;

/// Classify whether the unlabeled generic edge lengths of g determine the
/// graph, by a cascade of sufficient and necessary conditions:
///
/// 1. globally rigid on at least d+2 vertices: fully reconstructible;
/// 2. not M-connected: not fully reconstructible, with a separation witness;
/// 3. a cover by two rigid, fully reconstructible induced subgraphs on at
///    least d+1 vertices each, overlapping in a connected subgraph on at
///    least 3 vertices: fully reconstructible. Candidate covers come from
///    the caller plus small vertex cuts.
///
/// Anything the rules cannot settle is reported Unknown rather than
/// guessed.
pub fn classify_reconstructibility(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
    provided: &[Decomposition],
) -> Result<ReconstructibilityVerdict, GlobalError> {
    if d < 2 {
        return Err(GlobalError::DimensionTooSmall(d));
    }
    if let Some(v) = isolated_vertex(g) {
        return Err(GlobalError::IsolatedVertex(v));
    }
    classify_inner(engine, g, d, provided, GLUING_DEPTH)
}

fn isolated_vertex(g: &Graph) -> Option<usize> {
    (0..g.vertex_count()).find(|&v| g.degree(v) == 0)
}

fn classify_inner(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
    provided: &[Decomposition],
    depth: usize,
) -> Result<ReconstructibilityVerdict, GlobalError> {
    let n = g.vertex_count();
    let verdict = is_globally_rigid(engine, g, d);
    if verdict.is_globally_rigid() && n >= d + 2 {
        return Ok(ReconstructibilityVerdict {
            decision: ReconstructionDecision::FullyReconstructible,
            rule: Some("globally_rigid".into()),
            evidence: Some(ReconstructionEvidence::GlobalRigidity(verdict)),
        });
    }
    if g.edge_count() == 0 {
        return Ok(unknown());
    }
    if !engine.is_m_connected(g, d)? {
        let (e1, e2) = engine
            .separability_witness(g, d)?
            .expect("separable graph has a witness");
        return Ok(ReconstructibilityVerdict {
            decision: ReconstructionDecision::NotFullyReconstructible,
            rule: Some("m_separable".into()),
            evidence: Some(ReconstructionEvidence::Separation(Witness { e1, e2 })),
        });
    }
    if depth == 0 {
        return Ok(unknown());
    }
    for cand in provided {
        if try_decomposition(engine, g, d, cand, depth)? {
            return Ok(glued(cand.clone()));
        }
    }
    for cand in cut_decompositions(g) {
        if try_decomposition(engine, g, d, &cand, depth)? {
            return Ok(glued(cand));
        }
    }
    Ok(unknown())
}

fn unknown() -> ReconstructibilityVerdict {
    ReconstructibilityVerdict {
        decision: ReconstructionDecision::Unknown,
        rule: None,
        evidence: None,
    }
}

fn glued(d: Decomposition) -> ReconstructibilityVerdict {
    ReconstructibilityVerdict {
        decision: ReconstructionDecision::FullyReconstructible,
        rule: Some("gluing".into()),
        evidence: Some(ReconstructionEvidence::Gluing(d)),
    }
}

/// Check one candidate cover against the gluing rule. False means the
/// candidate is unusable, not that the graph failed to classify.
fn try_decomposition(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
    cand: &Decomposition,
    depth: usize,
) -> Result<bool, GlobalError> {
    let n = g.vertex_count();
    let (a, b) = (&cand.side_a, &cand.side_b);
    if a.iter().chain(b).any(|&v| v >= n) {
        return Ok(false);
    }
    if a.len() < d + 1 || b.len() < d + 1 || a.len() == n || b.len() == n {
        return Ok(false);
    }
    let in_a = member_mask(n, a);
    let in_b = member_mask(n, b);
    if (0..n).any(|v| !in_a[v] && !in_b[v]) {
        return Ok(false);
    }
    // every edge must live inside one side
    if g.edges()
        .iter()
        .any(|&(u, v)| !(in_a[u] && in_a[v]) && !(in_b[u] && in_b[v]))
    {
        return Ok(false);
    }
    let overlap: Vec<usize> = (0..n).filter(|&v| in_a[v] && in_b[v]).collect();
    if overlap.len() < 3 || !g.induced_subgraph(&overlap)?.is_connected() {
        return Ok(false);
    }
    let ga = g.induced_subgraph(a)?;
    let gb = g.induced_subgraph(b)?;
    if ga.has_isolated_vertex() || gb.has_isolated_vertex() {
        return Ok(false);
    }
    if !engine.is_rigid(&ga, d) || !engine.is_rigid(&gb, d) {
        return Ok(false);
    }
    let ra = classify_inner(engine, &ga, d, &[], depth - 1)?;
    if ra.decision != ReconstructionDecision::FullyReconstructible {
        return Ok(false);
    }
    let rb = classify_inner(engine, &gb, d, &[], depth - 1)?;
    Ok(rb.decision == ReconstructionDecision::FullyReconstructible)
}

fn member_mask(n: usize, vs: &[usize]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in vs {
        mask[v] = true;
    }
    mask
}

/// Candidate covers from small vertex cuts: for every separating set S of
/// size 3..=5 and every component C of g - S, the pair (S ∪ C, rest) is a
/// cover whose overlap is exactly S. Sizes below the connectivity cannot
/// separate and are skipped, as is size 5 past the enumeration budget.
fn cut_decompositions(g: &Graph) -> Vec<Decomposition> {
    let n = g.vertex_count();
    let kappa = vertex_connectivity(g);
    let mut out = Vec::new();
    for size in 3..=5usize {
        if size < kappa || size >= n {
            continue;
        }
        if size == 5 && binomial(n, 5) > CUT_ENUMERATION_BUDGET {
            continue;
        }
        let mut cut = vec![0usize; size];
        enumerate_subsets(n, size, 0, 0, &mut cut, &mut |cut| {
            let keep: Vec<usize> = (0..n).filter(|v| !cut.contains(v)).collect();
            if keep.is_empty() {
                return;
            }
            let rest = match g.induced_subgraph(&keep) {
                Ok(h) => h,
                Err(_) => return,
            };
            let comps = rest.connected_components();
            if comps.len() < 2 {
                return;
            }
            for i in 0..comps.len() {
                let mut side_a: Vec<usize> = comps[i].iter().map(|&x| keep[x]).collect();
                side_a.extend_from_slice(cut);
                let mut side_b: Vec<usize> = comps
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .flat_map(|(_, c)| c.iter().map(|&x| keep[x]))
                    .collect();
                side_b.extend_from_slice(cut);
                out.push(Decomposition::new(side_a, side_b));
            }
        });
    }
    out
}

fn enumerate_subsets(
    n: usize,
    size: usize,
    start: usize,
    filled: usize,
    buf: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if filled == size {
        visit(buf);
        return;
    }
    for v in start..n {
        if n - v < size - filled {
            break;
        }
        buf[filled] = v;
        enumerate_subsets(n, size, v + 1, filled + 1, buf, visit);
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
