//! The rigidity matroid engine: randomized rank queries, matroid structure
//! (basis, circuits, components, bridges), and the combined report.
//!
//! Ranks of rigidity matrices are evaluated at uniformly random prime-field
//! placements. A specialization can only lower the rank of a matrix whose
//! entries are polynomials in the coordinates, so the generic rank is
//! recovered as the maximum over independently seeded trials; each query is
//! therefore one-sided Monte Carlo with per-trial failure probability
//! bounded by (matrix size)/p, vanishing at p around 2^61.
//!
//! Component structure is derived from the fundamental circuits of one
//! greedy basis and then verified against the rank additivity law: a class
//! split is only returned if rank(class) + rank(rest) = rank(all) holds for
//! every class. A verification failure is reported as an error and means an
//! unlucky specialization; retrying with a fresh seed resolves it.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::{derive_seed, PrimeField};
use crate::graph::{Graph, GraphError};
use crate::linalg::{sample_framework, FieldMatrix, Framework};

/// Purpose labels for derived random streams, so rank, stress framework and
/// stress coefficient draws never share a stream.
pub(crate) const PURPOSE_RANK: u64 = 1;
pub(crate) const PURPOSE_STRESS_FRAMEWORK: u64 = 2;
pub(crate) const PURPOSE_STRESS_COEFFS: u64 = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error(
        "component additivity verification failed (class rank {class_rank} + rest rank \
         {rest_rank} != total rank {total}); an unlucky specialization was sampled, retry \
         with a different seed"
    )]
    AdditivityFailure { class_rank: usize, rest_rank: usize, total: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeNotInGraph(usize, usize),
    #[error("supplied basis is dependent: rank {rank} < size {size}")]
    BasisDependent { rank: usize, size: usize },
    #[error("edge ({0}, {1}) is already in the supplied basis")]
    EdgeInBasis(usize, usize),
    #[error("edge ({0}, {1}) is independent of the supplied basis; no circuit exists")]
    NoCircuit(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Engine configuration. The memo tables are keyed per engine, so results
/// for one configuration never leak into another.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    pub field: PrimeField,
    /// independent placements per rank query
    pub trials: usize,
    /// independent placements per global rigidity certificate search
    pub global_trials: usize,
    /// base seed; every random draw in the engine derives from it
    pub seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            field: PrimeField::mersenne61(),
            trials: 3,
            global_trials: 5,
            seed: 0,
        }
    }
}

impl EngineConfig {
    pub fn with_seed(seed: u64) -> Self {
        EngineConfig { seed, ..Default::default() }
    }
}

/// The rigidity matrix R(G, p): one row per edge (u, v) carrying
/// p(u) - p(v) in the d columns of u and p(v) - p(u) in the columns of v.
pub fn rigidity_matrix(fw: &Framework) -> FieldMatrix {
    let g = fw.graph();
    let (d, f) = (fw.dim(), fw.field());
    let mut m = FieldMatrix::zeros(f, g.edge_count(), g.vertex_count() * d);
    for (row, &(u, v)) in g.edges().iter().enumerate() {
        for k in 0..d {
            let diff = f.sub(fw.coordinate(u, k), fw.coordinate(v, k));
            m.set(row, u * d + k, diff);
            m.set(row, v * d + k, f.neg(diff));
        }
    }
    m
}

/// Matroid structure of one (graph, dim) pair: greedy basis, component
/// partition and bridges, all in terms of canonical edge indices.
#[derive(Debug)]
struct MatroidStructure {
    rank: usize,
    basis: Vec<usize>,
    components: Vec<Vec<usize>>,
    bridges: Vec<usize>,
}

type Memo<V> = RwLock<HashMap<(Graph, usize), V>>;

/// Randomized rank oracle and matroid analyzer over a fixed configuration.
///
/// All methods take `&self`; the memo tables are internally synchronized, so
/// one engine can serve concurrent callers. Results are deterministic in
/// (graph, dim, config) regardless of query order, because every random
/// stream is derived from the canonical graph fingerprint rather than from
/// shared mutable state.
pub struct RigidityEngine {
    config: EngineConfig,
    rank_memo: Memo<usize>,
    structure_memo: Memo<Arc<MatroidStructure>>,
}

impl Default for RigidityEngine {
    fn default() -> Self {
        RigidityEngine::new(EngineConfig::default())
    }
}

impl RigidityEngine {
    pub fn new(config: EngineConfig) -> Self {
        assert!(config.trials >= 1 && config.global_trials >= 1, "need at least one trial");
        RigidityEngine {
            config,
            rank_memo: RwLock::new(HashMap::new()),
            structure_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    /// Seed for one rank trial of one (graph, dim) query.
    fn trial_seed(&self, g: &Graph, d: usize, trial: usize) -> u64 {
        derive_seed(self.config.seed, &[g.fingerprint(), d as u64, PURPOSE_RANK, trial as u64])
    }

    pub(crate) fn purpose_seed(&self, g: &Graph, d: usize, purpose: u64, trial: usize) -> u64 {
        derive_seed(self.config.seed, &[g.fingerprint(), d as u64, purpose, trial as u64])
    }

    /// Generic rank of the d-dimensional rigidity matroid of g: the maximum
    /// over the configured trials of the rigidity matrix rank at a random
    /// placement. Memoized per (graph, dim).
    pub fn rank_d(&self, g: &Graph, d: usize) -> usize {
        assert!(d >= 1, "dimension must be at least 1");
        let key = (g.clone(), d);
        if let Some(&r) = self.rank_memo.read().unwrap().get(&key) {
            return r;
        }
        let mut best = 0;
        for trial in 0..self.config.trials {
            let fw = sample_framework(g, d, self.config.field, self.trial_seed(g, d, trial));
            best = best.max(rigidity_matrix(&fw).rank());
        }
        self.rank_memo.write().unwrap().insert(key, best);
        best
    }

    /// Rank of an edge subset inside the matroid of g, evaluated on the
    /// subgraph spanned by the subset (rows of absent edges play no role and
    /// columns of non-incident vertices are zero on the present rows).
    pub fn rank_of_edge_indices(&self, g: &Graph, d: usize, indices: &[usize]) -> usize {
        if indices.is_empty() {
            return 0;
        }
        let (sub, _) = g.edge_subgraph(indices);
        self.rank_d(&sub, d)
    }

    /// Rank of an edge subset given as endpoint pairs.
    pub fn rank_of_edge_set(
        &self,
        g: &Graph,
        d: usize,
        edges: &[(usize, usize)],
    ) -> Result<usize, EngineError> {
        let indices = self.edge_indices(g, edges)?;
        Ok(self.rank_of_edge_indices(g, d, &indices))
    }

    fn edge_indices(&self, g: &Graph, edges: &[(usize, usize)]) -> Result<Vec<usize>, EngineError> {
        edges
            .iter()
            .map(|&(u, v)| {
                let key = (u.min(v), u.max(v));
                g.edges()
                    .binary_search(&key)
                    .map_err(|_| EngineError::EdgeNotInGraph(u, v))
            })
            .collect()
    }

    /// Degrees of freedom d|V| - C(d+1, 2) - rank; None when |V| < d + 1,
    /// where the normalization does not apply.
    pub fn dof(&self, g: &Graph, d: usize) -> Option<usize> {
        let n = g.vertex_count();
        if n < d + 1 {
            return None;
        }
        Some(d * n - d * (d + 1) / 2 - self.rank_d(g, d))
    }

    /// Rigidity in dimension d: full rank d|V| - C(d+1, 2) when |V| >= d+1,
    /// completeness below that.
    pub fn is_rigid(&self, g: &Graph, d: usize) -> bool {
        let n = g.vertex_count();
        if n > d {
            self.rank_d(g, d) == d * n - d * (d + 1) / 2
        } else {
            g.is_complete()
        }
    }

    /// Rigid, and still rigid after deleting any single edge. Equivalently:
    /// rigid with no bridges, since deleting a non-bridge never changes the
    /// rank and deleting a bridge always lowers it.
    pub fn is_redundantly_rigid(&self, g: &Graph, d: usize) -> Result<bool, EngineError> {
        if !self.is_rigid(g, d) {
            return Ok(false);
        }
        if g.edge_count() == 0 {
            return Ok(true); // vacuous: nothing to delete
        }
        Ok(self.structure(g, d)?.bridges.is_empty())
    }

    pub fn is_independent(&self, g: &Graph, d: usize) -> bool {
        self.rank_d(g, d) == g.edge_count()
    }

    /// Whole-edge-set circuit test: rank |E| - 1 and every single-edge
    /// deletion independent.
    pub fn is_circuit(&self, g: &Graph, d: usize) -> bool {
        let m = g.edge_count();
        if m == 0 || self.rank_d(g, d) != m - 1 {
            return false;
        }
        (0..m).all(|skip| {
            let rest: Vec<usize> = (0..m).filter(|&i| i != skip).collect();
            self.rank_of_edge_indices(g, d, &rest) == m - 1
        })
    }

    /// Greedy basis: scan edges in canonical order, keep each edge whose row
    /// increases the rank. Size always equals rank_d(g).
    pub fn find_basis(&self, g: &Graph, d: usize) -> Result<Vec<(usize, usize)>, EngineError> {
        let s = self.structure(g, d)?;
        Ok(s.basis.iter().map(|&i| g.edges()[i]).collect())
    }

    /// The unique circuit inside basis + e, located by deletion probes: a
    /// basis edge f lies in the circuit iff basis + e - f still has full
    /// basis rank. Errors if the basis is dependent or e does not depend on
    /// it.
    pub fn fundamental_circuit(
        &self,
        g: &Graph,
        d: usize,
        basis: &[(usize, usize)],
        e: (usize, usize),
    ) -> Result<Vec<(usize, usize)>, EngineError> {
        let basis_idx = self.edge_indices(g, basis)?;
        let e_idx = self.edge_indices(g, &[e])?[0];
        if basis_idx.contains(&e_idx) {
            return Err(EngineError::EdgeInBasis(e.0, e.1));
        }
        let b = basis_idx.len();
        let base_rank = self.rank_of_edge_indices(g, d, &basis_idx);
        if base_rank < b {
            return Err(EngineError::BasisDependent { rank: base_rank, size: b });
        }
        let mut with_e = basis_idx.clone();
        with_e.push(e_idx);
        if self.rank_of_edge_indices(g, d, &with_e) != b {
            return Err(EngineError::NoCircuit(e.0, e.1));
        }
        let mut circuit = vec![e_idx];
        for (pos, &f) in basis_idx.iter().enumerate() {
            let probe: Vec<usize> = with_e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != pos)
                .map(|(_, &x)| x)
                .collect();
            if self.rank_of_edge_indices(g, d, &probe) == b {
                circuit.push(f);
            }
        }
        circuit.sort_unstable();
        Ok(circuit.into_iter().map(|i| g.edges()[i]).collect())
    }

    /// Partition of the edge set into rigidity matroid components: the
    /// equivalence classes of "lie on a common circuit". Classes are listed
    /// by least edge index; a class of size one is a bridge. The partition
    /// is checked against rank additivity before being returned.
    pub fn m_components(&self, g: &Graph, d: usize) -> Result<Vec<Vec<(usize, usize)>>, EngineError> {
        let s = self.structure(g, d)?;
        Ok(s.components
            .iter()
            .map(|class| class.iter().map(|&i| g.edges()[i]).collect())
            .collect())
    }

    /// Edges whose deletion lowers the rank; exactly the one-edge classes of
    /// the component partition, in canonical edge order.
    pub fn bridges(&self, g: &Graph, d: usize) -> Result<Vec<(usize, usize)>, EngineError> {
        let s = self.structure(g, d)?;
        Ok(s.bridges.iter().map(|&i| g.edges()[i]).collect())
    }

    /// Single component test. Errors on an empty edge set.
    pub fn is_m_connected(&self, g: &Graph, d: usize) -> Result<bool, EngineError> {
        if g.edge_count() == 0 {
            return Err(EngineError::EmptyEdgeSet);
        }
        Ok(self.structure(g, d)?.components.len() == 1)
    }

    /// For a separable matroid, one component versus the union of the rest;
    /// the two ranks always add up to the full rank. None when M-connected.
    #[allow(clippy::type_complexity)]
    pub fn separability_witness(
        &self,
        g: &Graph,
        d: usize,
    ) -> Result<Option<(Vec<(usize, usize)>, Vec<(usize, usize)>)>, EngineError> {
        let s = self.structure(g, d)?;
        if s.components.len() < 2 {
            return Ok(None);
        }
        let first: Vec<usize> = s.components[0].clone();
        let mut rest: Vec<usize> = s.components[1..].iter().flatten().copied().collect();
        rest.sort_unstable();
        Ok(Some((
            first.into_iter().map(|i| g.edges()[i]).collect(),
            rest.into_iter().map(|i| g.edges()[i]).collect(),
        )))
    }

    /// Full matroid report for one (graph, dim) pair.
    pub fn analyze(&self, g: &Graph, d: usize) -> Result<MatroidReport, EngineError> {
        let rank = self.rank_d(g, d);
        let (components, bridges, witness, m_connected) = if g.edge_count() == 0 {
            (Vec::new(), Vec::new(), None, false)
        } else {
            let witness = self.separability_witness(g, d)?;
            let s = self.structure(g, d)?;
            (
                s.components
                    .iter()
                    .map(|class| class.iter().map(|&i| g.edges()[i]).collect())
                    .collect(),
                s.bridges.iter().map(|&i| g.edges()[i]).collect(),
                witness.map(|(e1, e2)| Witness { e1, e2 }),
                s.components.len() == 1,
            )
        };
        Ok(MatroidReport {
            rank,
            dof: self.dof(g, d),
            rigid: self.is_rigid(g, d),
            redundantly_rigid: self.is_redundantly_rigid(g, d)?,
            independent: self.is_independent(g, d),
            bridges,
            components,
            m_connected,
            witness,
            dim: d,
            seed: self.config.seed,
            trials: self.config.trials,
            modulus: self.config.field.modulus().to_string(),
        })
    }

    /// Compute or fetch the memoized matroid structure.
    fn structure(&self, g: &Graph, d: usize) -> Result<Arc<MatroidStructure>, EngineError> {
        assert!(d >= 1, "dimension must be at least 1");
        let key = (g.clone(), d);
        if let Some(s) = self.structure_memo.read().unwrap().get(&key) {
            return Ok(s.clone());
        }
        // Run the tracked elimination at every trial seed and keep the first
        // trial achieving the maximal rank, so the structure agrees with
        // rank_d, which uses the same seeds.
        let mut best: Option<TrackedElimination> = None;
        for trial in 0..self.config.trials {
            let fw = sample_framework(g, d, self.config.field, self.trial_seed(g, d, trial));
            let t = TrackedElimination::run(&fw);
            if best.as_ref().is_none_or(|b| t.basis.len() > b.basis.len()) {
                best = Some(t);
            }
        }
        let t = best.expect("at least one trial");
        debug_assert_eq!(t.basis.len(), self.rank_d(g, d));

        // Union of fundamental circuit supports gives the component
        // partition; the supports come from the coefficients of each
        // dependent row over the greedy basis.
        let m = g.edge_count();
        let mut uf = UnionFind::new(m);
        for (_, support) in &t.circuits {
            for &f in &support[1..] {
                uf.union(support[0], f);
            }
        }
        let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..m {
            classes.entry(uf.find(i)).or_default().push(i);
        }
        let mut components: Vec<Vec<usize>> = classes.into_values().collect();
        for class in &mut components {
            class.sort_unstable();
        }
        components.sort_by_key(|class| class[0]);
        let bridges: Vec<usize> =
            components.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();

        // Rank additivity verification. Skipped for independent graphs,
        // where every class is provably a singleton coloop.
        let total = t.basis.len();
        if total < m && components.len() >= 2 {
            for class in &components {
                let rest: Vec<usize> = (0..m).filter(|i| !class.contains(i)).collect();
                let class_rank = self.rank_of_edge_indices(g, d, class);
                let rest_rank = self.rank_of_edge_indices(g, d, &rest);
                if class_rank + rest_rank != total {
                    return Err(EngineError::AdditivityFailure { class_rank, rest_rank, total });
                }
            }
        }

        let s = Arc::new(MatroidStructure { rank: total, basis: t.basis, components, bridges });
        debug_assert_eq!(s.rank, self.rank_d(g, d));
        self.structure_memo.write().unwrap().insert(key, s.clone());
        Ok(s)
    }
}

/// One elimination pass that records, for every dependent row, the support
/// of its unique representation over the greedy basis rows. That support is
/// the fundamental circuit of the edge with respect to the greedy basis.
struct TrackedElimination {
    basis: Vec<usize>,
    /// (dependent edge index, sorted circuit support including the edge)
    circuits: Vec<(usize, Vec<usize>)>,
}

impl TrackedElimination {
    fn run(fw: &Framework) -> Self {
        let g = fw.graph();
        let f = fw.field();
        let d = fw.dim();
        let m = g.edge_count();
        let cols = g.vertex_count() * d;
        // echelon rows, their pivot columns, and their expansions over the
        // original rows (coefficients indexed by edge)
        let mut ech_rows: Vec<Vec<u64>> = Vec::new();
        let mut ech_pivots: Vec<usize> = Vec::new();
        let mut ech_combos: Vec<Vec<u64>> = Vec::new();
        let mut basis = Vec::new();
        let mut circuits = Vec::new();
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let mut row = vec![0u64; cols];
            for k in 0..d {
                let diff = f.sub(fw.coordinate(u, k), fw.coordinate(v, k));
                row[u * d + k] = diff;
                row[v * d + k] = f.neg(diff);
            }
            let mut combo = vec![0u64; m];
            combo[i] = 1;
            for e in 0..ech_rows.len() {
                let lead = row[ech_pivots[e]];
                if lead == 0 {
                    continue;
                }
                // echelon rows are stored with unit pivots
                for (slot, &x) in row.iter_mut().zip(&ech_rows[e]) {
                    *slot = f.sub(*slot, f.mul(lead, x));
                }
                for (slot, &x) in combo.iter_mut().zip(&ech_combos[e]) {
                    *slot = f.sub(*slot, f.mul(lead, x));
                }
            }
            match row.iter().position(|&x| x != 0) {
                Some(pivot) => {
                    let inv = f.inv(row[pivot]);
                    for x in row.iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    for x in combo.iter_mut() {
                        *x = f.mul(*x, inv);
                    }
                    ech_rows.push(row);
                    ech_pivots.push(pivot);
                    ech_combos.push(combo);
                    basis.push(i);
                }
                None => {
                    let support: Vec<usize> =
                        (0..m).filter(|&j| combo[j] != 0).collect();
                    circuits.push((i, support));
                }
            }
        }
        TrackedElimination { basis, circuits }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Separability witness: two complementary edge sets whose ranks add to the
/// full rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "E1")]
    pub e1: Vec<(usize, usize)>,
    #[serde(rename = "E2")]
    pub e2: Vec<(usize, usize)>,
}

/// Everything the engine can say about one (graph, dim) pair. Serializes to
/// the stable report format; field order is the wire order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidReport {
    pub rank: usize,
    /// None when |V| < d + 1
    pub dof: Option<usize>,
    pub rigid: bool,
    pub redundantly_rigid: bool,
    pub independent: bool,
    pub bridges: Vec<(usize, usize)>,
    pub components: Vec<Vec<(usize, usize)>>,
    pub m_connected: bool,
    pub witness: Option<Witness>,
    pub dim: usize,
    pub seed: u64,
    pub trials: usize,
    pub modulus: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        complete_bipartite, complete_graph, cycle_graph, figure1_graph, figure2a_graph,
        path_graph, ring_of_k5,
    };

    fn engine() -> RigidityEngine {
        RigidityEngine::default()
    }

    #[test]
    fn rigidity_matrix_row_layout() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let fw = sample_framework(&g, 2, PrimeField::mersenne61(), 11);
        let m = rigidity_matrix(&fw);
        assert_eq!((m.rows(), m.cols()), (1, 4));
        let f = fw.field();
        let dx = f.sub(fw.coordinate(0, 0), fw.coordinate(1, 0));
        let dy = f.sub(fw.coordinate(0, 1), fw.coordinate(1, 1));
        assert_eq!(
            [m.get(0, 0), m.get(0, 1), m.get(0, 2), m.get(0, 3)],
            [dx, dy, f.neg(dx), f.neg(dy)]
        );
    }

    #[test]
    fn rank_matches_known_values() {
        let e = engine();
        for d in 1..=4 {
            assert_eq!(e.rank_d(&Graph::new(2, vec![(0, 1)]).unwrap(), d), 1);
        }
        assert_eq!(e.rank_d(&complete_graph(5), 3), 9);
        assert_eq!(e.rank_d(&complete_bipartite(5, 5), 3), 24);
        assert_eq!(e.rank_d(&cycle_graph(4), 2), 4);
        // one-dimensional rank is n minus the number of connected components
        assert_eq!(e.rank_d(&path_graph(6), 1), 5);
        let two_triangles = Graph::new(6, vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(e.rank_d(&two_triangles, 1), 4);
    }

    #[test]
    fn rank_is_deterministic_and_memoized() {
        let e = engine();
        let g = figure1_graph();
        let r1 = e.rank_d(&g, 3);
        let r2 = e.rank_d(&g, 3);
        assert_eq!(r1, 36);
        assert_eq!(r1, r2);
        // a second engine with the same config reproduces the value
        let e2 = RigidityEngine::default();
        assert_eq!(e2.rank_d(&g, 3), 36);
    }

    #[test]
    fn dof_and_rigidity() {
        let e = engine();
        assert_eq!(e.dof(&complete_graph(5), 3), Some(0));
        assert!(e.is_rigid(&complete_graph(5), 3));
        let k4_minus = complete_graph(4).delete_edge(0, 1).unwrap();
        assert!(e.is_rigid(&k4_minus, 2));
        assert!(!e.is_rigid(&k4_minus, 3));
        assert!(!e.is_rigid(&cycle_graph(4), 2));
        assert_eq!(e.dof(&cycle_graph(4), 2), Some(1));
        // below d + 1 vertices rigidity means completeness
        assert!(e.is_rigid(&complete_graph(3), 3));
        assert!(!e.is_rigid(&path_graph(3), 3));
        assert_eq!(e.dof(&complete_graph(3), 3), None);
        // ring of three blocks without the hub block: 30 edges, 3 dof short
        let fig = figure1_graph();
        let hub = [0usize, 4, 8, 12, 13];
        let outer: Vec<(usize, usize)> = fig
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| !(hub.contains(&u) && hub.contains(&v)))
            .collect();
        assert_eq!(outer.len(), 30);
        let sub = Graph::new(14, outer).unwrap();
        assert_eq!(e.rank_d(&sub, 3), 27);
    }

    #[test]
    fn redundancy_and_independence() {
        let e = engine();
        assert!(e.is_redundantly_rigid(&complete_graph(4), 2).unwrap());
        assert!(!e.is_redundantly_rigid(&complete_graph(4), 3).unwrap());
        assert!(e.is_redundantly_rigid(&complete_graph(5), 3).unwrap());
        let k5_minus = complete_graph(5).delete_edge(0, 1).unwrap();
        assert!(e.is_independent(&k5_minus, 3));
        assert!(!e.is_independent(&complete_graph(5), 3));
        // redundancy agrees with explicit edge deletion probing
        for (g, d) in [(complete_graph(5), 3), (complete_graph(4), 2), (cycle_graph(5), 1)] {
            let direct = e.is_rigid(&g, d)
                && g.edges().iter().all(|&(u, v)| {
                    e.is_rigid(&g.delete_edge(u, v).unwrap(), d)
                });
            assert_eq!(e.is_redundantly_rigid(&g, d).unwrap(), direct);
        }
    }

    #[test]
    fn circuits_among_small_graphs() {
        let e = engine();
        assert!(e.is_circuit(&cycle_graph(4), 1));
        assert!(e.is_circuit(&cycle_graph(7), 1));
        assert!(e.is_circuit(&complete_graph(4), 2));
        assert!(e.is_circuit(&complete_graph(5), 3));
        assert!(e.is_circuit(&complete_bipartite(5, 5), 3));
        assert!(!e.is_circuit(&complete_graph(5), 2));
        assert!(!e.is_circuit(&complete_graph(5).delete_edge(0, 1).unwrap(), 3));
        assert!(!e.is_circuit(&path_graph(4), 1));
    }

    #[test]
    fn basis_and_fundamental_circuits() {
        let e = engine();
        let c4 = cycle_graph(4);
        let basis = e.find_basis(&c4, 1).unwrap();
        assert_eq!(basis.len(), 3);
        // chord completes the unique cycle: circuit is everything
        let chord = c4.edges().iter().copied().find(|e| !basis.contains(e)).unwrap();
        let circuit = e.fundamental_circuit(&c4, 1, &basis, chord).unwrap();
        assert_eq!(circuit, c4.edges());

        let k4 = complete_graph(4);
        let basis = e.find_basis(&k4, 2).unwrap();
        assert_eq!(basis.len(), 5);
        let extra = k4.edges().iter().copied().find(|e| !basis.contains(e)).unwrap();
        let circuit = e.fundamental_circuit(&k4, 2, &basis, extra).unwrap();
        assert_eq!(circuit, k4.edges());

        // error paths
        assert!(matches!(
            e.fundamental_circuit(&k4, 2, &basis, basis[0]),
            Err(EngineError::EdgeInBasis(_, _))
        ));
        let tree_edges = vec![(0, 1), (1, 2)];
        assert!(matches!(
            e.fundamental_circuit(&path_graph(4), 1, &tree_edges, (2, 3)),
            Err(EngineError::NoCircuit(2, 3))
        ));
        assert!(matches!(
            e.fundamental_circuit(&c4, 1, c4.edges(), (0, 1)),
            Err(EngineError::EdgeInBasis(0, 1)) | Err(EngineError::BasisDependent { .. })
        ));
    }

    #[test]
    fn components_of_small_graphs() {
        let e = engine();
        // forest: every edge its own bridge class
        let p = path_graph(4);
        let comps = e.m_components(&p, 1).unwrap();
        assert_eq!(comps.len(), 3);
        assert_eq!(e.bridges(&p, 1).unwrap().len(), 3);
        // two triangles sharing a vertex: two classes in one dimension
        let bowtie =
            Graph::new(5, vec![(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let comps = e.m_components(&bowtie, 1).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(e.bridges(&bowtie, 1).unwrap().is_empty());
        assert!(!e.is_m_connected(&bowtie, 1).unwrap());
        // one triangle is M-connected in one dimension
        assert!(e.is_m_connected(&cycle_graph(3), 1).unwrap());
        // empty edge set is a precondition violation
        assert_eq!(
            e.is_m_connected(&Graph::new(3, Vec::<(usize, usize)>::new()).unwrap(), 1),
            Err(EngineError::EmptyEdgeSet)
        );
    }

    #[test]
    fn figure1_separates_into_four_blocks() {
        let e = engine();
        let g = figure1_graph();
        let comps = e.m_components(&g, 3).unwrap();
        assert_eq!(comps.len(), 4);
        for class in &comps {
            assert_eq!(class.len(), 10);
            assert_eq!(e.rank_of_edge_set(&g, 3, class).unwrap(), 9);
        }
        let (e1, e2) = e.separability_witness(&g, 3).unwrap().unwrap();
        let r1 = e.rank_of_edge_set(&g, 3, &e1).unwrap();
        let r2 = e.rank_of_edge_set(&g, 3, &e2).unwrap();
        assert_eq!(r1 + r2, 36);
        assert_eq!((r1, r2), (9, 27));
    }

    #[test]
    fn figure2a_splits_into_band_and_core() {
        let e = engine();
        let g = figure2a_graph();
        assert_eq!(e.rank_d(&g, 3), 105);
        let comps = e.m_components(&g, 3).unwrap();
        let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![10, 108]);
        assert!(!e.is_m_connected(&g, 3).unwrap());
        assert!(e.bridges(&g, 3).unwrap().is_empty());
    }

    #[test]
    fn ring_is_m_connected_and_vertex_deletion_exposes_bridges() {
        let e = engine();
        let g = ring_of_k5(6).unwrap();
        assert_eq!(e.rank_d(&g, 3), 48);
        assert!(e.is_m_connected(&g, 3).unwrap());
        assert!(e.is_redundantly_rigid(&g, 3).unwrap());
        // delete the degree-4 vertex of block 0 (index 2); the four edges
        // between the two shared pairs become bridges
        let h = g.delete_vertex(2).unwrap();
        let bridges = e.bridges(&h, 3).unwrap();
        assert_eq!(bridges, vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
    }

    #[test]
    fn analyze_aggregates_consistently() {
        let e = engine();
        let g = complete_bipartite(5, 5);
        let r = e.analyze(&g, 3).unwrap();
        assert_eq!(r.rank, 24);
        assert!(r.rigid && r.redundantly_rigid && r.m_connected);
        assert!(!r.independent);
        assert!(r.bridges.is_empty() && r.witness.is_none());
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.dof, Some(0));
        assert_eq!(r.modulus, "2305843009213693951");

        let empty = Graph::new(3, Vec::<(usize, usize)>::new()).unwrap();
        let r = e.analyze(&empty, 2).unwrap();
        assert_eq!(r.rank, 0);
        assert!(!r.m_connected && r.components.is_empty());

        // witness ranks always add to the full rank
        let fig = figure2a_graph();
        let r = e.analyze(&fig, 3).unwrap();
        let w = r.witness.unwrap();
        let r1 = e.rank_of_edge_set(&fig, 3, &w.e1).unwrap();
        let r2 = e.rank_of_edge_set(&fig, 3, &w.e2).unwrap();
        assert_eq!(r1 + r2, r.rank);
    }

    #[test]
    fn report_serialization_is_stable() {
        let e = engine();
        let g = complete_graph(4);
        let r = e.analyze(&g, 2).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: MatroidReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert!(json.starts_with(r#"{"rank":5,"dof":0,"rigid":true"#), "{json}");
        assert!(json.contains(r#""witness":null"#));
    }

    #[test]
    fn engine_is_safe_to_share_across_threads() {
        let e = std::sync::Arc::new(engine());
        let g = ring_of_k5(4).unwrap();
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let e = e.clone();
                let g = g.clone();
                std::thread::spawn(move || e.rank_d(&g, 3))
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), 3 * 12 - 6);
        }
    }
}
