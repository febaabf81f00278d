//! Executable verification of the structural theorems on generated and
//! random corpora, with brute-force oracles for small instances.
//!
//! Every suite walks a deterministic corpus, filters by the hypotheses of
//! the statement under test, and records each skipped instance as "not
//! applicable" instead of dropping it: the hypotheses are part of what is
//! being tested. A suite passes exactly when its violation list is empty.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{EngineError, RigidityEngine};
use crate::field::{derive_seed, PrimeField, SplitMix64};
use crate::global::is_globally_rigid;
use crate::graph::{
    complete_bipartite, complete_graph, cone, cycle_graph, figure1_graph, figure2a_graph,
    figure2b_graph, glue, is_k_connected, path_graph, ring_of_k5, Graph, VertexPartitionSpec,
};
use crate::linalg::{sample_framework, FieldMatrix};

/// Stream label separating brute-force oracle placements from the engine's.
const PURPOSE_BRUTE: u64 = 4;
const PURPOSE_CORPUS_ER: u64 = 10;
const PURPOSE_CORPUS_EXT: u64 = 11;
const PURPOSE_CORPUS_SMALL: u64 = 12;

const BRUTE_COMPONENT_LIMIT: usize = 20;
const BRUTE_CIRCUIT_LIMIT: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HarnessError {
    #[error("edge count {got} exceeds the brute-force limit {limit}")]
    TooLarge { limit: usize, got: usize },
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// One failed instance of a property check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub graph: Graph,
    pub dim: usize,
    pub details: String,
}

/// Outcome of one property over one corpus. `not_applicable` counts the
/// instances filtered out by the hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyResult {
    pub property: String,
    pub corpus: String,
    pub tested: usize,
    pub not_applicable: usize,
    pub violations: Vec<Violation>,
    pub seed: u64,
}

impl PropertyResult {
    fn new(property: &str, corpus: &str, seed: u64) -> Self {
        PropertyResult {
            property: property.into(),
            corpus: corpus.into(),
            tested: 0,
            not_applicable: 0,
            violations: Vec::new(),
            seed,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn violation(&mut self, graph: &Graph, dim: usize, details: String) {
        self.violations.push(Violation { graph: graph.clone(), dim, details });
    }

    fn absorb(&mut self, other: PropertyResult) {
        self.tested += other.tested;
        self.not_applicable += other.not_applicable;
        self.violations.extend(other.violations);
    }
}

/// Motion space dimensions k_i = n·i − r_i(g) for i = 1..d.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotionDims {
    /// ks[i-1] holds k_i
    pub ks: Vec<usize>,
}

pub fn motion_dims(engine: &RigidityEngine, g: &Graph, d: usize) -> MotionDims {
    assert!(d >= 1, "dimension must be at least 1");
    let n = g.vertex_count();
    MotionDims { ks: (1..=d).map(|i| n * i - engine.rank_d(g, i)).collect() }
}

/// Shared rank oracle over all edge subsets of one small graph: rigidity
/// matrix rows are sampled once per trial (on streams independent of the
/// engine's) and each subset rank is the max of its row-subset ranks,
/// memoized by bitmask.
struct SubsetRankOracle {
    field: PrimeField,
    /// [trial][edge] -> matrix row
    rows: Vec<Vec<Vec<u64>>>,
    memo: HashMap<u64, usize>,
}

impl SubsetRankOracle {
    fn new(engine: &RigidityEngine, g: &Graph, d: usize) -> Self {
        let cfg = engine.config();
        let rows = (0..cfg.trials)
            .map(|trial| {
                let seed =
                    derive_seed(cfg.seed, &[g.fingerprint(), d as u64, PURPOSE_BRUTE, trial as u64]);
                let fw = sample_framework(g, d, cfg.field, seed);
                let f = cfg.field;
                g.edges()
                    .iter()
                    .map(|&(u, v)| {
                        let mut row = vec![0u64; g.vertex_count() * d];
                        for k in 0..d {
                            let diff = f.sub(fw.coordinate(u, k), fw.coordinate(v, k));
                            row[u * d + k] = diff;
                            row[v * d + k] = f.neg(diff);
                        }
                        row
                    })
                    .collect()
            })
            .collect();
        SubsetRankOracle { field: cfg.field, rows, memo: HashMap::new() }
    }

    fn rank(&mut self, mask: u64) -> usize {
        if let Some(&r) = self.memo.get(&mask) {
            return r;
        }
        let mut best = 0;
        for trial in &self.rows {
            let selected: Vec<Vec<u64>> = (0..trial.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| trial[i].clone())
                .collect();
            if selected.is_empty() {
                break;
            }
            best = best.max(FieldMatrix::from_rows(self.field, selected).rank());
        }
        self.memo.insert(mask, best);
        best
    }
}

fn mask_to_edges(g: &Graph, mask: u64) -> Vec<(usize, usize)> {
    (0..g.edge_count()).filter(|&i| mask & (1 << i) != 0).map(|i| g.edges()[i]).collect()
}

/// Finest partition of the edge set reachable by recursively splitting
/// along rank-additive 2-partitions; the definition of the component
/// partition, evaluated literally.
pub fn brute_m_components(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
) -> Result<Vec<Vec<(usize, usize)>>, HarnessError> {
    let m = g.edge_count();
    if m > BRUTE_COMPONENT_LIMIT {
        return Err(HarnessError::TooLarge { limit: BRUTE_COMPONENT_LIMIT, got: m });
    }
    let mut oracle = SubsetRankOracle::new(engine, g, d);
    Ok(brute_m_components_core(&mut oracle, g, d))
}

fn brute_m_components_core(
    oracle: &mut SubsetRankOracle,
    g: &Graph,
    _d: usize,
) -> Vec<Vec<(usize, usize)>> {
    let m = g.edge_count();
    if m == 0 {
        return Vec::new();
    }
    let full: u64 = if m == 64 { !0 } else { (1u64 << m) - 1 };
    let mut classes = Vec::new();
    split_additive(oracle, full, &mut classes);
    classes.sort_by_key(|mask| mask.trailing_zeros());
    classes.into_iter().map(|mask| mask_to_edges(g, mask)).collect()
}

fn split_additive(oracle: &mut SubsetRankOracle, mask: u64, out: &mut Vec<u64>) {
    if mask.count_ones() <= 1 {
        out.push(mask);
        return;
    }
    let total = oracle.rank(mask);
    let low = mask & mask.wrapping_neg();
    let rest = mask ^ low;
    // all 2-partitions, anchored by keeping the lowest edge on side a
    let mut s = rest;
    loop {
        s = s.wrapping_sub(1) & rest;
        let a = low | s;
        let b = mask ^ a;
        if oracle.rank(a) + oracle.rank(b) == total {
            split_additive(oracle, a, out);
            split_additive(oracle, b, out);
            return;
        }
        if s == 0 {
            break;
        }
    }
    out.push(mask);
}

/// All minimal dependent edge subsets, by full subset enumeration.
pub fn brute_circuits(
    engine: &RigidityEngine,
    g: &Graph,
    d: usize,
) -> Result<Vec<Vec<(usize, usize)>>, HarnessError> {
    let m = g.edge_count();
    if m > BRUTE_CIRCUIT_LIMIT {
        return Err(HarnessError::TooLarge { limit: BRUTE_CIRCUIT_LIMIT, got: m });
    }
    let mut oracle = SubsetRankOracle::new(engine, g, d);
    Ok(brute_circuits_core(&mut oracle, g, d))
}

fn brute_circuits_core(
    oracle: &mut SubsetRankOracle,
    g: &Graph,
    _d: usize,
) -> Vec<Vec<(usize, usize)>> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << m) {
        let size = mask.count_ones() as usize;
        if oracle.rank(mask) != size - 1 {
            continue; // independent, or nullity above one
        }
        // minimal: every one-edge deletion is independent
        let minimal = (0..m)
            .filter(|&i| mask & (1 << i) != 0)
            .all(|i| oracle.rank(mask ^ (1 << i)) == size - 1);
        if minimal {
            out.push(mask_to_edges(g, mask));
        }
    }
    out
}

/// Globally rigid graphs on >= d+2 vertices are M-connected.
pub fn verify_mconnected_theorem(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("globally_rigid_implies_m_connected_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    for g in corpus {
        let applicable = g.vertex_count() >= d + 2
            && is_globally_rigid(engine, g, d).decision
                == crate::global::GlobalDecision::GloballyRigid;
        if !applicable {
            res.not_applicable += 1;
            continue;
        }
        res.tested += 1;
        match engine.is_m_connected(g, d) {
            Ok(true) => {}
            Ok(false) => res.violation(g, d, "globally rigid but M-separable".into()),
            Err(e) => res.violation(g, d, format!("engine error: {e}")),
        }
    }
    res
}

/// M-connectivity in dimension d implies M-connectivity in every lower
/// dimension.
pub fn verify_dimension_monotonicity(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("m_connectivity_descends_from_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    for g in corpus {
        let applicable = g.edge_count() >= 1 && engine.is_m_connected(g, d).unwrap_or(false);
        if !applicable {
            res.not_applicable += 1;
            continue;
        }
        res.tested += 1;
        for lower in 1..d {
            match engine.is_m_connected(g, lower) {
                Ok(true) => {}
                Ok(false) => {
                    res.violation(g, d, format!("M-connected at {d} but not at {lower}"))
                }
                Err(e) => res.violation(g, lower, format!("engine error: {e}")),
            }
        }
    }
    res
}

/// g is a circuit in dimension d exactly when its cone is one in d+1.
pub fn verify_cone_circuit(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("cone_circuit_equivalence_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    for g in corpus {
        res.tested += 1;
        let base = engine.is_circuit(g, d);
        let coned = engine.is_circuit(&cone(g), d + 1);
        if base != coned {
            res.violation(
                g,
                d,
                format!("is_circuit(g, {d}) = {base} but is_circuit(cone, {}) = {coned}", d + 1),
            );
        }
    }
    res
}

/// The cone is M-connected in d+1 exactly when g is connected with no
/// bridges in d.
pub fn verify_cone_mconnected(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("cone_m_connectivity_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    for g in corpus {
        if g.vertex_count() == 0 {
            res.not_applicable += 1;
            continue;
        }
        res.tested += 1;
        let lhs = match engine.is_m_connected(&cone(g), d + 1) {
            Ok(v) => v,
            Err(e) => {
                res.violation(g, d, format!("engine error on cone: {e}"));
                continue;
            }
        };
        let rhs = g.is_connected()
            && match engine.bridges(g, d) {
                Ok(b) => b.is_empty(),
                Err(e) => {
                    res.violation(g, d, format!("engine error: {e}"));
                    continue;
                }
            };
        if lhs != rhs {
            res.violation(
                g,
                d,
                format!("cone M-connected = {lhs}, connected-and-bridgeless = {rhs}"),
            );
        }
    }
    res
}

/// On a (d+1)-connected, redundantly rigid, M-separable graph the
/// component degrees of freedom sum to at least C(d+1, 2).
pub fn verify_dof_bound(engine: &RigidityEngine, g: &Graph, d: usize, seed: u64) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("dof_sum_lower_bound_d{d}"),
        "single graph",
        seed,
    );
    let hypotheses = is_k_connected(g, d + 1)
        && engine.is_redundantly_rigid(g, d).unwrap_or(false)
        && matches!(engine.m_components(g, d), Ok(c) if c.len() >= 2);
    if !hypotheses {
        res.not_applicable += 1;
        return res;
    }
    res.tested += 1;
    let classes = engine.m_components(g, d).expect("checked above");
    let mut sum = 0usize;
    for class in &classes {
        let indices: Vec<usize> = class
            .iter()
            .map(|&(u, v)| g.edges().binary_search(&(u, v)).expect("component edge"))
            .collect();
        let (sub, _) = g.edge_subgraph(&indices);
        match engine.dof(&sub, d) {
            Some(dof) => sum += dof,
            None => {
                // the hypotheses force every component to span at least
                // d+2 vertices, so this is itself a counterexample
                res.violation(g, d, format!("component spans only {} vertices", sub.vertex_count()));
                return res;
            }
        }
    }
    let bound = d * (d + 1) / 2;
    if sum < bound {
        res.violation(g, d, format!("dof sum {sum} below bound {bound}"));
    }
    res
}

fn verify_dof_bound_corpus(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("dof_sum_lower_bound_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    for g in corpus {
        res.absorb(verify_dof_bound(engine, g, d, seed));
    }
    res
}

/// Motion dimension recursion k_i >= 2k_{i+1} − k_{i+2} + 1 plus its closed
/// form, on graphs that are not M-independent in dimension d−2.
pub fn verify_motion_recursion(
    engine: &RigidityEngine,
    corpus: &[Graph],
    d: usize,
    seed: u64,
) -> PropertyResult {
    assert!(d >= 3, "the recursion needs dimension at least 3");
    let mut res = PropertyResult::new(
        &format!("motion_dimension_recursion_d{d}"),
        &format!("{} corpus graphs", corpus.len()),
        seed,
    );
    let choose2 = |t: usize| (t * (t.saturating_sub(1)) / 2) as i64;
    for g in corpus {
        if g.edge_count() == 0 || engine.is_independent(g, d - 2) {
            res.not_applicable += 1;
            continue;
        }
        res.tested += 1;
        let ks = motion_dims(engine, g, d).ks;
        let k = |i: usize| ks[i - 1] as i64; // 1-based
        let x = k(d) - choose2(d + 1);
        let y = k(d - 1) - choose2(d);
        for i in 1..=d - 2 {
            let rec = 2 * k(i + 1) - k(i + 2) + 1;
            if k(i) < rec {
                res.violation(g, d, format!("k_{i} = {} below recursion bound {rec}", k(i)));
            }
            let closed = choose2(i + 1) + (d - i) as i64 * (y - x) + x;
            if k(i) < closed {
                res.violation(g, d, format!("k_{i} = {} below closed-form bound {closed}", k(i)));
            }
        }
    }
    res
}

/// Rank of the union of two rigid graphs identified on k vertices:
/// d·|V| − C(d+1,2) − C(d−k+1,2) for k < d, full (rigid) for k >= d.
pub fn verify_gluing_rank(
    engine: &RigidityEngine,
    g1: &Graph,
    g2: &Graph,
    spec: &VertexPartitionSpec,
    d: usize,
    seed: u64,
) -> PropertyResult {
    let mut res = PropertyResult::new(
        &format!("gluing_rank_formula_d{d}"),
        "single glued pair",
        seed,
    );
    let sides_ok = g1.vertex_count() > d
        && g2.vertex_count() > d
        && engine.is_rigid(g1, d)
        && engine.is_rigid(g2, d);
    if !sides_ok {
        res.not_applicable += 1;
        return res;
    }
    let glued = match glue(g1, g2, spec) {
        Ok(g) => g,
        Err(_) => {
            res.not_applicable += 1;
            return res;
        }
    };
    res.tested += 1;
    let k = spec.pairs.len();
    if k >= d {
        if !engine.is_rigid(&glued, d) {
            res.violation(&glued, d, format!("gluing on {k} >= {d} vertices should be rigid"));
        }
    } else {
        let n = glued.vertex_count();
        let expected = d * n - d * (d + 1) / 2 - (d - k) * (d - k + 1) / 2;
        let got = engine.rank_d(&glued, d);
        if got != expected {
            res.violation(&glued, d, format!("rank {got}, formula gives {expected} (k = {k})"));
        }
    }
    res
}

/// Deterministic pool of rigid graphs and identification sizes covering
/// both regimes of the gluing formula.
pub fn gluing_pairs(d: usize) -> Vec<(Graph, Graph, VertexPartitionSpec)> {
    let pool: Vec<Graph> = match d {
        2 => vec![
            complete_graph(4),
            cone(&cycle_graph(4)),
            cone(&cycle_graph(5)),
            complete_graph(5),
            cone(&cycle_graph(6)),
        ],
        _ => vec![
            complete_graph(5),
            complete_graph(6),
            cone(&cone(&cycle_graph(4))),
            complete_graph(7),
            cone(&cone(&cycle_graph(5))),
        ],
    };
    let mut out = Vec::new();
    for i in 0..12usize {
        let g1 = pool[i % pool.len()].clone();
        let g2 = pool[(i + 1) % pool.len()].clone();
        let k = i % (d + 2);
        let spec = VertexPartitionSpec::new((0..k).map(|t| (t, t)).collect());
        out.push((g1, g2, spec));
    }
    out
}

fn verify_gluing_suite(engine: &RigidityEngine, d: usize, seed: u64) -> PropertyResult {
    let pairs = gluing_pairs(d);
    let mut res = PropertyResult::new(
        &format!("gluing_rank_formula_d{d}"),
        &format!("{} generated rigid pairs", pairs.len()),
        seed,
    );
    for (g1, g2, spec) in &pairs {
        res.absorb(verify_gluing_rank(engine, g1, g2, spec, d, seed));
    }
    res
}

/// Engine results against the brute-force oracles on every corpus graph
/// with at most 12 edges, dimensions cycling through 1, 2, 3.
pub fn verify_oracle_equivalence(
    engine: &RigidityEngine,
    corpus: &[Graph],
    seed: u64,
) -> PropertyResult {
    let small: Vec<&Graph> = corpus
        .iter()
        .filter(|g| g.edge_count() >= 1 && g.edge_count() <= BRUTE_CIRCUIT_LIMIT)
        .collect();
    let mut res = PropertyResult::new(
        "oracle_equivalence",
        &format!("{} corpus graphs with at most {BRUTE_CIRCUIT_LIMIT} edges", small.len()),
        seed,
    );
    for (i, g) in small.iter().enumerate() {
        let d = 1 + i % 3;
        res.tested += 1;
        let mut oracle = SubsetRankOracle::new(engine, g, d);
        let brute_comps = brute_m_components_core(&mut oracle, g, d);
        match engine.m_components(g, d) {
            Ok(engine_comps) => {
                if engine_comps != brute_comps {
                    res.violation(
                        g,
                        d,
                        format!(
                            "components disagree: engine {} classes, brute {} classes",
                            engine_comps.len(),
                            brute_comps.len()
                        ),
                    );
                }
            }
            Err(e) => res.violation(g, d, format!("engine error: {e}")),
        }
        let circuits = brute_circuits_core(&mut oracle, g, d);
        for c in &circuits {
            let indices: Vec<usize> = c
                .iter()
                .map(|&(u, v)| g.edges().binary_search(&(u, v)).expect("circuit edge"))
                .collect();
            let (sub, _) = g.edge_subgraph(&indices);
            if !engine.is_circuit(&sub, d) {
                res.violation(g, d, format!("brute circuit of size {} rejected", c.len()));
            }
            // any proper subset, here the circuit minus its first edge,
            // must not be a circuit
            if indices.len() >= 2 {
                let (sub2, _) = g.edge_subgraph(&indices[1..]);
                if engine.is_circuit(&sub2, d) {
                    res.violation(g, d, "proper subset of a circuit accepted".into());
                }
            }
        }
        // whole-edge-set membership agrees in both directions
        let full_is_circuit = circuits.iter().any(|c| c.len() == g.edge_count());
        if engine.is_circuit(g, d) != full_is_circuit {
            res.violation(g, d, "whole edge set circuit status disagrees".into());
        }
    }
    res
}

/// Example 4.1-style reduction of the separable wheel graph: drop the nine
/// degree-4 vertices, then one edge from each of the four corner blocks
/// that stay complete.
pub fn figure2a_reduction_replay() -> Graph {
    let g = figure2a_graph();
    // keep the two 12-cycles and the four corner hubs
    let keep: Vec<usize> = (0..24).chain(32..36).collect();
    let mut h = g.induced_subgraph(&keep).expect("vertices exist");
    for j in [0usize, 3, 6, 9] {
        h = h.delete_edge(j, j + 1).expect("outer cycle edge");
    }
    h
}

/// What goes into a generated corpus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub include_named: bool,
    pub random_connected: usize,
    pub extension_rigid: usize,
    pub small_instances: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            include_named: true,
            random_connected: 100,
            extension_rigid: 60,
            small_instances: 55,
            max_vertices: 40,
            max_edges: 140,
        }
    }
}

/// The hand-picked instances: complete and complete bipartite graphs,
/// cycles, paths, wheels, block rings, the named separability examples,
/// and a few near-complete and glued graphs.
pub fn named_graphs() -> Vec<Graph> {
    let mut out: Vec<Graph> = Vec::new();
    out.extend((3..=8).map(complete_graph));
    for (a, b) in [(3, 3), (3, 4), (3, 5), (4, 4), (4, 5), (5, 5), (4, 6)] {
        out.push(complete_bipartite(a, b));
    }
    out.extend((3..=10).map(cycle_graph));
    out.extend((2..=6).map(path_graph));
    out.extend((4..=7).map(|n| cone(&cycle_graph(n))));
    out.extend((3..=6).map(|k| ring_of_k5(k).expect("k >= 3")));
    out.push(figure1_graph());
    out.push(figure2a_graph());
    out.push(figure2b_graph());
    out.push(complete_graph(4).delete_edge(0, 1).unwrap());
    out.push(complete_graph(5).delete_edge(0, 1).unwrap());
    for k in 1..=3usize {
        let spec = VertexPartitionSpec::new((0..k).map(|t| (t, t)).collect());
        out.push(glue(&complete_graph(5), &complete_graph(5), &spec).unwrap());
    }
    out
}

/// New vertex joined to `d` distinct existing vertices; preserves rigidity
/// in dimension d.
pub fn zero_extension(g: &Graph, d: usize, rng: &mut SplitMix64) -> Graph {
    let n = g.vertex_count();
    assert!(n >= d, "need at least d vertices to extend");
    let targets = distinct_vertices(rng, n, d, &[]);
    let edges = g.edges().iter().copied().chain(targets.into_iter().map(|t| (t, n)));
    Graph::new(n + 1, edges).expect("extension is simple")
}

/// Delete an edge (u, w), add a new vertex joined to u, w and d−1 further
/// vertices; preserves rigidity in dimension d.
pub fn one_extension(g: &Graph, d: usize, rng: &mut SplitMix64) -> Graph {
    let n = g.vertex_count();
    let m = g.edge_count();
    assert!(m >= 1 && n > d, "need an edge and d+1 vertices");
    let (u, w) = g.edges()[(rng.next_u64() % m as u64) as usize];
    let others = distinct_vertices(rng, n, d - 1, &[u, w]);
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != (u, w))
        .chain([(u, n), (w, n)])
        .chain(others.into_iter().map(|t| (t, n)));
    Graph::new(n + 1, edges).expect("extension is simple")
}

fn distinct_vertices(rng: &mut SplitMix64, n: usize, count: usize, avoid: &[usize]) -> Vec<usize> {
    assert!(count + avoid.len() <= n);
    let mut picked = Vec::with_capacity(count);
    while picked.len() < count {
        let v = (rng.next_u64() % n as u64) as usize;
        if !picked.contains(&v) && !avoid.contains(&v) {
            picked.push(v);
        }
    }
    picked
}

fn random_connected_graph(rng: &mut SplitMix64, n: usize, density_percent: u64) -> Graph {
    // conditioned on connectivity by resampling; the valve below keeps the
    // loop finite without affecting realistic densities
    for _ in 0..200 {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.next_u64() % 100 < density_percent {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges).expect("simple by construction");
        if g.is_connected() {
            return g;
        }
    }
    // join what the unlucky stream left apart
    let mut g = Graph::new(n, Vec::<(usize, usize)>::new()).unwrap();
    for w in g.connected_components().windows(2) {
        g = g.add_edge(w[0][0], w[1][0]).unwrap();
    }
    g
}

fn random_tree(rng: &mut SplitMix64, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> =
        (1..n).map(|v| ((rng.next_u64() % v as u64) as usize, v)).collect();
    Graph::new(n, edges).expect("attachment tree")
}

/// Deterministic mixed corpus described by `spec`: named instances,
/// random connected graphs, extension-built rigid graphs, and small
/// graphs for the brute-force oracles.
pub fn random_corpus(spec: &CorpusSpec, seed: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    if spec.include_named {
        out.extend(named_graphs());
    }
    let mut er = SplitMix64::new(derive_seed(seed, &[PURPOSE_CORPUS_ER]));
    for i in 0..spec.random_connected {
        let n = 4 + i % 11;
        let density = [30u64, 45, 60, 75][i % 4];
        out.push(random_connected_graph(&mut er, n, density));
    }
    let mut ext = SplitMix64::new(derive_seed(seed, &[PURPOSE_CORPUS_EXT]));
    for i in 0..spec.extension_rigid {
        let d = 2 + i % 2;
        let mut g = if i % 4 < 2 { complete_graph(d + 1) } else { complete_graph(d + 2) };
        for _ in 0..3 + i % 6 {
            g = if ext.next_u64().is_multiple_of(2) {
                zero_extension(&g, d, &mut ext)
            } else {
                one_extension(&g, d, &mut ext)
            };
        }
        out.push(g);
    }
    let mut small = small_fixed_instances();
    let mut sm = SplitMix64::new(derive_seed(seed, &[PURPOSE_CORPUS_SMALL]));
    while small.len() < spec.small_instances {
        let n = 3 + (sm.next_u64() % 6) as usize; // 3..=8
        let tree = random_tree(&mut sm, n);
        if small.len().is_multiple_of(2) {
            small.push(tree);
        } else {
            // unicyclic: close a random non-edge
            let mut g = tree;
            loop {
                let u = (sm.next_u64() % n as u64) as usize;
                let v = (sm.next_u64() % n as u64) as usize;
                if u != v && !g.has_edge(u, v) {
                    g = g.add_edge(u, v).unwrap();
                    break;
                }
            }
            small.push(g);
        }
    }
    small.truncate(spec.small_instances);
    out.extend(small);
    out.retain(|g| g.vertex_count() <= spec.max_vertices && g.edge_count() <= spec.max_edges);
    out
}

fn small_fixed_instances() -> Vec<Graph> {
    let mut out = vec![
        // two disjoint triangles and two sharing a vertex
        Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
        Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap(),
        complete_graph(4),
        complete_graph(4).delete_edge(0, 1).unwrap(),
        complete_bipartite(2, 3),
        complete_bipartite(1, 5),
    ];
    out.extend((3..=6).map(cycle_graph));
    out.extend((2..=5).map(path_graph));
    out
}

pub fn default_corpus() -> Vec<Graph> {
    random_corpus(&CorpusSpec::default(), 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    MConnected,
    Monotonicity,
    Cone,
    DofBound,
    Motion,
    Gluing,
    Oracle,
    All,
}

/// Run one suite (or all of them) against the default corpus built from
/// `corpus_seed`. Results come back in a fixed order.
pub fn run_suite(engine: &RigidityEngine, suite: Suite, corpus_seed: u64) -> Vec<PropertyResult> {
    let corpus = random_corpus(&CorpusSpec::default(), corpus_seed);
    let s = corpus_seed;
    match suite {
        Suite::MConnected => vec![
            verify_mconnected_theorem(engine, &corpus, 2, s),
            verify_mconnected_theorem(engine, &corpus, 3, s),
        ],
        Suite::Monotonicity => vec![verify_dimension_monotonicity(engine, &corpus, 3, s)],
        Suite::Cone => vec![
            verify_cone_circuit(engine, &corpus, 1, s),
            verify_cone_circuit(engine, &corpus, 2, s),
            verify_cone_mconnected(engine, &corpus, 1, s),
            verify_cone_mconnected(engine, &corpus, 2, s),
        ],
        Suite::DofBound => vec![verify_dof_bound_corpus(engine, &corpus, 3, s)],
        Suite::Motion => vec![verify_motion_recursion(engine, &corpus, 3, s)],
        Suite::Gluing => vec![
            verify_gluing_suite(engine, 2, s),
            verify_gluing_suite(engine, 3, s),
        ],
        Suite::Oracle => vec![verify_oracle_equivalence(engine, &corpus, s)],
        Suite::All => {
            let mut all = Vec::new();
            for sub in [
                Suite::MConnected,
                Suite::Monotonicity,
                Suite::Cone,
                Suite::DofBound,
                Suite::Motion,
                Suite::Gluing,
                Suite::Oracle,
            ] {
                all.extend(run_suite(engine, sub, corpus_seed));
            }
            all
        }
    }
}
