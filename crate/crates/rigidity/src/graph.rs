//! Graphs, named generators, and vertex connectivity.
//!
//! Vertices are `0..n`. Edges are stored canonically: endpoints ordered
//! `u < v`, list sorted lexicographically, duplicates removed. Every
//! constructor and editing operation re-canonicalizes, so two graphs are
//! equal iff their JSON bytes are equal.

use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::field::mix64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) not present")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) already present")]
    DuplicateEdge(usize, usize),
    #[error("ring of K5 blocks needs at least 3 blocks, got {0}")]
    RingTooShort(usize),
    #[error("vertex {0} appears twice in the identification list")]
    RepeatedIdentification(usize),
    #[error("empty vertex selection")]
    EmptySelection,
}

/// A finite simple graph in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build from any edge list. Endpoints are swapped into `u < v` order,
    /// duplicates are dropped silently; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        Ok(Graph { n, edges: list })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order. All edge indices used elsewhere in the
    /// crate refer to positions in this slice.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn has_isolated_vertex(&self) -> bool {
        let mut seen = vec![false; self.n];
        for &(u, v) in &self.edges {
            seen[u] = true;
            seen[v] = true;
        }
        seen.iter().any(|s| !s)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Delete a vertex; remaining vertices are reindexed compactly
    /// (every index above `v` shifts down by one).
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != v && b != v)
            .map(|&(a, b)| (shift(a), shift(b)));
        Graph::new(self.n - 1, edges)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u, v));
        }
        let key = (u.min(v), u.max(v));
        let edges = self.edges.iter().copied().filter(|&e| e != key);
        Graph::new(self.n, edges)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let mut edges = self.edges.clone();
        edges.push((u.min(v), u.max(v)));
        Graph::new(self.n, edges)
    }

    /// Subgraph induced by a vertex set, reindexed compactly in the sorted
    /// order of the selection.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut sel: Vec<usize> = vertices.to_vec();
        sel.sort_unstable();
        sel.dedup();
        if sel.is_empty() {
            return Err(GraphError::EmptySelection);
        }
        if let Some(&v) = sel.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in sel.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]));
        Graph::new(sel.len(), edges)
    }

    /// Subgraph carrying exactly the given edges (by index into `edges()`),
    /// spanning only incident vertices. Returns the compacted graph plus the
    /// list of original vertex ids in compact order.
    pub fn edge_subgraph(&self, edge_indices: &[usize]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = edge_indices
            .iter()
            .flat_map(|&i| {
                let (u, v) = self.edges[i];
                [u, v]
            })
            .collect();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<(usize, usize)> = edge_indices
            .iter()
            .map(|&i| {
                let (u, v) = self.edges[i];
                (index[u], index[v])
            })
            .collect();
        let g = Graph::new(verts.len(), edges).expect("edge subgraph is always valid");
        (g, verts)
    }

    /// 64-bit fingerprint of the canonical form. Used only to key derived
    /// random streams, never for equality.
    pub fn fingerprint(&self) -> u64 {
        let mut acc = mix64(self.n as u64 ^ 0xC0FFEE);
        for &(u, v) in &self.edges {
            acc = mix64(acc ^ ((u as u64) << 32 | v as u64));
        }
        acc
    }

    /// Serialize to the interchange format: `{"n": ..., "edges": [[u,v], ...]}`,
    /// newline-terminated. Canonical input produces canonical bytes, so
    /// read-then-write round-trips are byte-identical.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Graph, serde_json::Error> {
        serde_json::from_str(text)
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
        }
        Wire { n: self.n, edges: &self.edges }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let w = Wire::deserialize(deserializer)?;
        Graph::new(w.n, w.edges).map_err(D::Error::custom)
    }
}

/// Complete graph K_n.
pub fn complete_graph(n: usize) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    Graph::new(n, edges).expect("complete graph is valid")
}

/// Complete bipartite graph K_{a,b}: parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)));
    Graph::new(a + b, edges).expect("bipartite graph is valid")
}

/// Cycle C_n (n >= 3).
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is valid")
}

/// Path on n vertices.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is valid")
}

/// Cone over g: one new vertex (index n) adjacent to every vertex of g.
pub fn cone(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain((0..n).map(|v| (v, n)));
    Graph::new(n + 1, edges).expect("cone is valid")
}

/// Which vertices of the two operands to identify when gluing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexPartitionSpec {
    /// (vertex in the first graph, vertex in the second graph)
    pub pairs: Vec<(usize, usize)>,
}

impl VertexPartitionSpec {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        VertexPartitionSpec { pairs }
    }
}

/// Result of a glue: the graph plus where each operand vertex landed.
/// The maps make the construction reusable as a decomposition certificate.
#[derive(Clone, Debug)]
pub struct GlueOutcome {
    pub graph: Graph,
    /// image of vertex i of the first operand
    pub map_first: Vec<usize>,
    /// image of vertex j of the second operand
    pub map_second: Vec<usize>,
}

/// Glue two graphs by identifying the listed vertex pairs. First-operand
/// vertices keep their indices; unidentified second-operand vertices are
/// appended in order. Edges that coincide after identification collapse
/// silently.
pub fn glue(
    g1: &Graph,
    g2: &Graph,
    spec: &VertexPartitionSpec,
) -> Result<Graph, GraphError> {
    glue_full(g1, g2, spec).map(|o| o.graph)
}

/// Glue, also returning the vertex maps.
pub fn glue_full(
    g1: &Graph,
    g2: &Graph,
    spec: &VertexPartitionSpec,
) -> Result<GlueOutcome, GraphError> {
    let (n1, n2) = (g1.vertex_count(), g2.vertex_count());
    let mut used1 = vec![false; n1];
    let mut image2 = vec![usize::MAX; n2];
    for &(a, b) in &spec.pairs {
        if a >= n1 {
            return Err(GraphError::VertexOutOfRange { vertex: a, n: n1 });
        }
        if b >= n2 {
            return Err(GraphError::VertexOutOfRange { vertex: b, n: n2 });
        }
        if used1[a] {
            return Err(GraphError::RepeatedIdentification(a));
        }
        if image2[b] != usize::MAX {
            return Err(GraphError::RepeatedIdentification(b));
        }
        used1[a] = true;
        image2[b] = a;
    }
    let mut next = n1;
    for img in image2.iter_mut() {
        if *img == usize::MAX {
            *img = next;
            next += 1;
        }
    }
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(u, v)| (image2[u], image2[v])));
    let graph = Graph::new(next, edges)?;
    Ok(GlueOutcome {
        graph,
        map_first: (0..n1).collect(),
        map_second: image2,
    })
}

/// Ring of k copies of K_5 (k >= 3), consecutive copies sharing an edge.
///
/// Block i lives on {a_i, b_i, t_i, a_{i+1}, b_{i+1}} with a_i = 3i,
/// b_i = 3i + 1, t_i = 3i + 2 (indices mod k). Every t_i has degree 4 and
/// block i shares the edge (a_{i+1}, b_{i+1}) with block i+1. The result has
/// 3k vertices and 9k edges.
pub fn ring_of_k5(k: usize) -> Result<Graph, GraphError> {
    if k < 3 {
        return Err(GraphError::RingTooShort(k));
    }
    let mut edges = Vec::new();
    for i in 0..k {
        let ip = (i + 1) % k;
        let block = [3 * i, 3 * i + 1, 3 * i + 2, 3 * ip, 3 * ip + 1];
        for x in 0..5 {
            for y in x + 1..5 {
                edges.push((block[x], block[y]));
            }
        }
    }
    Graph::new(3 * k, edges)
}

/// A rigid, redundantly rigid, 3-connected graph on 14 vertices and 40 edges
/// that is not M-connected in three dimensions.
///
/// Four edge-disjoint K_5 blocks: three outer blocks on
/// {e_{k-1}, e_k, b_k, c_k, d_k} chained in a ring through the e vertices,
/// and a hub block on {b_0, b_1, b_2, o_1, o_2} meeting each outer block in
/// the single vertex b_k. Indices: b_k = 4k, c_k = 4k+1, d_k = 4k+2,
/// e_k = 4k+3 for k in 0..3, then o_1 = 12, o_2 = 13.
pub fn figure1_graph() -> Graph {
    let b = |k: usize| 4 * (k % 3);
    let c = |k: usize| 4 * (k % 3) + 1;
    let d = |k: usize| 4 * (k % 3) + 2;
    let e = |k: usize| 4 * (k % 3) + 3;
    let (o1, o2) = (12, 13);
    let mut edges = Vec::new();
    for k in 0..3 {
        // triangle of block k
        edges.extend([(b(k), c(k)), (c(k), d(k)), (d(k), b(k))]);
        // apex e_k over its own triangle and the next one
        edges.extend([(e(k), b(k)), (e(k), c(k)), (e(k), d(k))]);
        edges.extend([(e(k), b(k + 1)), (e(k), c(k + 1)), (e(k), d(k + 1))]);
        // rings through the apexes and the hub vertices
        edges.push((e(k), e(k + 1)));
        edges.push((b(k), b(k + 1)));
        // hub spokes
        edges.extend([(b(k), o1), (b(k), o2)]);
    }
    edges.push((o1, o2));
    Graph::new(14, edges).expect("construction is valid")
}

// Band positions of the two figure-2 wheels. A block at position j sits on
// {O_j, O_{j+1}, I_j, I_{j+1}} plus a fifth vertex: a corner hub at the four
// positions below, a degree-4 apex elsewhere.
const CORNER_POSITIONS: [usize; 4] = [0, 3, 6, 9];
const APEX_POSITIONS: [usize; 8] = [1, 2, 4, 5, 7, 8, 10, 11];

fn figure2_band() -> Vec<(usize, usize)> {
    let o = |x: usize| x % 12;
    let i = |x: usize| 12 + x % 12;
    let w = |a: usize| 24 + a;
    let c = |c_i: usize| 32 + c_i;
    let mut edges = Vec::new();
    for x in 0..12 {
        edges.extend([
            (o(x), o(x + 1)),
            (i(x), i(x + 1)),
            (i(x), o(x)),
            (i(x), o(x + 1)),
            (i(x + 1), o(x)),
        ]);
    }
    for (c_i, &j) in CORNER_POSITIONS.iter().enumerate() {
        edges.extend([(c(c_i), o(j)), (c(c_i), o(j + 1)), (c(c_i), i(j)), (c(c_i), i(j + 1))]);
    }
    for (a_i, &j) in APEX_POSITIONS.iter().enumerate() {
        edges.extend([(w(a_i), o(j)), (w(a_i), o(j + 1)), (w(a_i), i(j)), (w(a_i), i(j + 1))]);
    }
    edges
}

/// A 4-connected, redundantly rigid graph on 37 vertices and 118 edges that
/// satisfies the Hendrickson conditions in three dimensions without being
/// globally rigid.
///
/// A double band of twelve K_5 blocks (outer cycle O_0..O_11 at 0..12, inner
/// cycle I_0..I_11 at 12..24), each block on {O_j, O_{j+1}, I_j, I_{j+1}}
/// plus a fifth vertex: eight degree-4 apexes W_0..W_7 at 24..32, and at the
/// four corner positions a hub C_0..C_3 at 32..36. The hubs plus the center
/// vertex o = 36 induce an additional K_5 that is edge-disjoint from the
/// band, making the rigidity matroid separable (ranks 96 + 9).
pub fn figure2a_graph() -> Graph {
    let c = |c_i: usize| 32 + c_i;
    let o_center = 36;
    let mut edges = figure2_band();
    for x in 0..4 {
        for y in x + 1..4 {
            edges.push((c(x), c(y)));
        }
        edges.push((c(x), o_center));
    }
    Graph::new(37, edges).expect("construction is valid")
}

/// The variant of `figure2a_graph` whose core is K_6 minus one edge: two
/// center vertices o = 36 and o' = 37, both joined to all four hubs but not
/// to each other. 38 vertices, 122 edges, ten of degree 4.
pub fn figure2b_graph() -> Graph {
    let c = |c_i: usize| 32 + c_i;
    let (o1, o2) = (36, 37);
    let mut edges = figure2_band();
    for x in 0..4 {
        for y in x + 1..4 {
            edges.push((c(x), c(y)));
        }
        edges.extend([(c(x), o1), (c(x), o2)]);
    }
    Graph::new(38, edges).expect("construction is valid")
}

/// Vertex connectivity by Menger's theorem: minimum over nonadjacent pairs
/// of the maximum number of internally vertex-disjoint paths, computed as
/// unit-capacity max-flow in the split digraph. Complete graphs are n - 1 by
/// convention; disconnected graphs are 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let adj = g.adjacency_lists();
    let mut best = n - 1;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            best = best.min(vertex_flow(&adj, u, v, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

/// Max number of internally disjoint u-v paths, capped at `limit`.
/// Splits each internal vertex w into w_in -> w_out with capacity one and
/// augments along BFS paths.
fn vertex_flow(adj: &[Vec<usize>], s: usize, t: usize, limit: usize) -> usize {
    let n = adj.len();
    // Node ids: w_in = 2w, w_out = 2w + 1. Residual graph as an adjacency
    // map with unit capacities; dense matrix keeps it simple at this scale.
    let size = 2 * n;
    let mut cap = vec![vec![0u8; size]; size];
    for w in 0..n {
        cap[2 * w][2 * w + 1] = 1;
    }
    cap[2 * s][2 * s + 1] = 2; // effectively infinite for source/sink
    cap[2 * t][2 * t + 1] = 2;
    for (w, nbrs) in adj.iter().enumerate() {
        for &x in nbrs {
            cap[2 * w + 1][2 * x] = 1;
            cap[2 * x + 1][2 * w] = 1;
        }
    }
    let (src, snk) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < limit {
        // BFS for an augmenting path
        let mut prev = vec![usize::MAX; size];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        prev[src] = src;
        while let Some(x) = queue.pop_front() {
            if x == snk {
                break;
            }
            for y in 0..size {
                if cap[x][y] > 0 && prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[snk] == usize::MAX {
            break;
        }
        let mut y = snk;
        while y != src {
            let x = prev[y];
            cap[x][y] -= 1;
            cap[y][x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

/// True iff g has at least k+1 vertices and no cut of fewer than k vertices.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return g.vertex_count() >= 1 && g.is_connected();
    }
    g.vertex_count() > k && vertex_connectivity(g) >= k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_clique(g: &Graph, verts: &[usize]) {
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                assert!(g.has_edge(u, v), "missing edge ({u}, {v})");
            }
        }
    }

    #[test]
    fn canonical_form_is_order_insensitive() {
        let a = Graph::new(4, vec![(3, 1), (0, 1), (1, 3), (2, 0)]).unwrap();
        let b = Graph::new(4, vec![(0, 2), (1, 3), (0, 1)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert_eq!(Graph::new(3, vec![(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, vec![(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let g = figure1_graph();
        let text = g.to_json();
        let back = Graph::from_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_json(), text);
        // reader canonicalizes scrambled input
        let scrambled = r#"{"n": 3, "edges": [[2,1],[1,0],[0,2]]}"#;
        let g2 = Graph::from_json(scrambled).unwrap();
        assert_eq!(g2.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn json_rejects_malformed_graphs() {
        assert!(Graph::from_json(r#"{"n": 2, "edges": [[0,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n": 2, "edges": [[0,5]]}"#).is_err());
        assert!(Graph::from_json("not json").is_err());
    }

    #[test]
    fn generators_have_expected_sizes() {
        assert_eq!(complete_graph(5).edge_count(), 10);
        assert_eq!(complete_graph(0).edge_count(), 0);
        assert_eq!(complete_bipartite(5, 5).edge_count(), 25);
        assert_eq!(complete_bipartite(3, 4).edge_count(), 12);
        assert_eq!(cycle_graph(7).edge_count(), 7);
        assert_eq!(path_graph(5).edge_count(), 4);
        let w = cone(&cycle_graph(5));
        assert_eq!((w.vertex_count(), w.edge_count()), (6, 10));
        assert_eq!(w.degree(5), 5);
    }

    #[test]
    fn delete_vertex_reindexes_compactly() {
        let g = complete_graph(4).delete_vertex(1).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let p = path_graph(4).delete_vertex(0).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn edge_edits_validate() {
        let g = cycle_graph(4);
        assert!(g.delete_edge(0, 2).is_err());
        assert!(g.add_edge(0, 1).is_err());
        let h = g.add_edge(0, 2).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.delete_edge(2, 0).unwrap(), g);
    }

    #[test]
    fn induced_and_edge_subgraphs_compact() {
        let g = complete_graph(5);
        let h = g.induced_subgraph(&[0, 2, 4]).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (3, 3));
        let (s, verts) = g.edge_subgraph(&[0, 1]); // (0,1), (0,2)
        assert_eq!(verts, vec![0, 1, 2]);
        assert_eq!(s.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn glue_identifies_and_collapses() {
        let k5 = complete_graph(5);
        let spec = VertexPartitionSpec::new(vec![(0, 0), (1, 1), (2, 2)]);
        let out = glue_full(&k5, &k5, &spec).unwrap();
        // shared triangle collapses: 10 + 10 - 3 edges on 5 + 5 - 3 vertices
        assert_eq!(out.graph.vertex_count(), 7);
        assert_eq!(out.graph.edge_count(), 17);
        assert_eq!(out.map_second[..3], [0, 1, 2]);
        assert_eq!(out.map_second[3..], [5, 6]);

        let k4 = complete_graph(4);
        let g = glue(&k4, &k4, &VertexPartitionSpec::new(vec![(0, 0), (1, 1), (2, 2)])).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (5, 9));
        // disjoint union when nothing is identified
        let d = glue(&k4, &k4, &VertexPartitionSpec::default()).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count()), (8, 12));
    }

    #[test]
    fn glue_rejects_bad_specs() {
        let k4 = complete_graph(4);
        assert!(glue(&k4, &k4, &VertexPartitionSpec::new(vec![(0, 9)])).is_err());
        assert!(glue(&k4, &k4, &VertexPartitionSpec::new(vec![(0, 0), (0, 1)])).is_err());
        assert!(glue(&k4, &k4, &VertexPartitionSpec::new(vec![(0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn ring_of_k5_structure() {
        assert!(ring_of_k5(2).is_err());
        for k in [3, 4, 6] {
            let g = ring_of_k5(k).unwrap();
            assert_eq!(g.vertex_count(), 3 * k);
            assert_eq!(g.edge_count(), 9 * k);
            for i in 0..k {
                // every block is a clique and every top vertex has degree 4
                let ip = (i + 1) % k;
                assert_clique(&g, &[3 * i, 3 * i + 1, 3 * i + 2, 3 * ip, 3 * ip + 1]);
                assert_eq!(g.degree(3 * i + 2), 4);
            }
        }
    }

    #[test]
    fn figure1_combinatorics() {
        let g = figure1_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 40));
        // hub block and the three outer blocks are K_5's
        assert_clique(&g, &[0, 4, 8, 12, 13]);
        for k in 0..3usize {
            let e_prev = 4 * ((k + 2) % 3) + 3;
            assert_clique(&g, &[e_prev, 4 * k + 3, 4 * k, 4 * k + 1, 4 * k + 2]);
        }
        assert_eq!(vertex_connectivity(&g), 3);
    }

    #[test]
    fn figure2a_combinatorics() {
        let g = figure2a_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (37, 118));
        let degs: Vec<usize> = (0..37).map(|v| g.degree(v)).collect();
        assert_eq!(degs.iter().filter(|&&d| d == 4).count(), 9);
        let mut kinds: Vec<usize> = degs.clone();
        kinds.sort_unstable();
        kinds.dedup();
        assert_eq!(kinds, vec![4, 7, 8]);
        // every band block is a K_5, as is the core
        for (c_i, &j) in CORNER_POSITIONS.iter().enumerate() {
            assert_clique(&g, &[j, (j + 1) % 12, 12 + j, 12 + (j + 1) % 12, 32 + c_i]);
        }
        for (a_i, &j) in APEX_POSITIONS.iter().enumerate() {
            assert_clique(&g, &[j, (j + 1) % 12, 12 + j, 12 + (j + 1) % 12, 24 + a_i]);
        }
        assert_clique(&g, &[32, 33, 34, 35, 36]);
        assert_eq!(vertex_connectivity(&g), 4);
    }

    #[test]
    fn figure2b_combinatorics() {
        let g = figure2b_graph();
        assert_eq!((g.vertex_count(), g.edge_count()), (38, 122));
        let deg4 = (0..38).filter(|&v| g.degree(v) == 4).count();
        assert_eq!(deg4, 10);
        // core is K_6 minus the edge between the two centers
        assert!(!g.has_edge(36, 37));
        for c_v in 32..36 {
            assert!(g.has_edge(c_v, 36) && g.has_edge(c_v, 37));
        }
        assert_clique(&g, &[32, 33, 34, 35]);
    }

    #[test]
    fn connectivity_matches_known_values() {
        assert_eq!(vertex_connectivity(&complete_graph(5)), 4);
        assert_eq!(vertex_connectivity(&complete_graph(2)), 1);
        assert_eq!(vertex_connectivity(&complete_graph(1)), 0);
        assert_eq!(vertex_connectivity(&complete_bipartite(5, 5)), 5);
        assert_eq!(vertex_connectivity(&complete_bipartite(3, 5)), 3);
        assert_eq!(vertex_connectivity(&cycle_graph(8)), 2);
        assert_eq!(vertex_connectivity(&path_graph(5)), 1);
        assert_eq!(vertex_connectivity(&Graph::new(4, vec![(0, 1), (2, 3)]).unwrap()), 0);
        assert_eq!(vertex_connectivity(&ring_of_k5(6).unwrap()), 4);
        // coning raises connectivity by one
        for g in [cycle_graph(6), complete_bipartite(3, 3), complete_graph(4)] {
            assert_eq!(vertex_connectivity(&cone(&g)), vertex_connectivity(&g) + 1);
        }
    }

    #[test]
    fn k_connected_conventions() {
        assert!(is_k_connected(&complete_graph(4), 3));
        assert!(!is_k_connected(&complete_graph(4), 4)); // needs k+1 vertices
        assert!(is_k_connected(&cycle_graph(5), 2));
        assert!(!is_k_connected(&path_graph(3), 2));
    }
}
