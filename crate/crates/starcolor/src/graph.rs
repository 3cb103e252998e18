//! Simple undirected graphs with dense vertex indices, plus the local edits
//! (vertex deletion, degree-2 suppression, edge contraction) used by the
//! reduction pipeline and the neighborhood queries used everywhere else.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Errors from graph construction and edits.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range (graph has {n} vertices)")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1} rejected")]
    DuplicateEdge(usize, usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {v} has degree {degree}, expected 2")]
    DegreeNotTwo { v: usize, degree: usize },
    #[error("adjacency not symmetric at {u}-{v}")]
    Asymmetric { u: usize, v: usize },
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency sets.
///
/// Invariants: adjacency is symmetric, there are no self-loops, and sets
/// preclude multi-edges. Edits return new graphs rather than mutating, so a
/// `Graph` can be shared read-only across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Partial injective map from old vertex indices to new ones.
///
/// Edits renumber the surviving vertices densely; removed vertices are
/// unmapped. Maps compose, so a chain of edits yields one relabeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    map: Vec<Option<usize>>,
}

impl VertexMap {
    /// Identity map on `0..n`.
    pub fn identity(n: usize) -> Self {
        VertexMap { map: (0..n).map(Some).collect() }
    }

    fn removal(n: usize, removed: usize) -> Self {
        let map = (0..n)
            .map(|w| {
                if w == removed {
                    None
                } else if w < removed {
                    Some(w)
                } else {
                    Some(w - 1)
                }
            })
            .collect();
        VertexMap { map }
    }

    /// New index of `old`, or `None` if it was removed.
    pub fn get(&self, old: usize) -> Option<usize> {
        self.map.get(old).copied().flatten()
    }

    /// Number of old indices the map is defined on.
    pub fn domain_len(&self) -> usize {
        self.map.len()
    }

    /// Compose with a later map: `(self.then(next))(v) = next(self(v))`.
    pub fn then(&self, next: &VertexMap) -> VertexMap {
        let map = self.map.iter().map(|slot| slot.and_then(|mid| next.get(mid))).collect();
        VertexMap { map }
    }
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { n, m: 0, adj: vec![BTreeSet::new(); n] }
    }

    /// Build from an edge list; rejects out-of-range endpoints, self-loops
    /// and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Insert the edge `u-v`. Errors on range, self-loop, or existing edge.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor set of `v`.
    pub fn adj(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Whether `u-v` is an edge.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in self.adj[u].range(u + 1..) {
                out.push((u, v));
            }
        }
        out
    }

    /// Maximum degree (0 for the empty graph).
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Whether the graph is connected. The empty graph and single vertices
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Re-check the representation invariants (symmetry, no loops).
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut edges = 0;
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                self.check_vertex(v)?;
                if !self.adj[v].contains(&u) {
                    return Err(GraphError::Asymmetric { u, v });
                }
                edges += 1;
            }
        }
        debug_assert_eq!(edges % 2, 0);
        debug_assert_eq!(edges / 2, self.m);
        Ok(())
    }

    /// Remove `v` and all incident edges; survivors are renumbered densely.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        let map = VertexMap::removal(self.n, v);
        let mut g = Graph::empty(self.n - 1);
        for (u, w) in self.edges() {
            if u != v && w != v {
                g.add_edge(map.get(u).unwrap(), map.get(w).unwrap())?;
            }
        }
        Ok((g, map))
    }

    /// Remove a degree-2 vertex and join its two neighbors (only if the
    /// joining edge is not already present).
    pub fn suppress_degree2(&self, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        if self.degree(v) != 2 {
            return Err(GraphError::DegreeNotTwo { v, degree: self.degree(v) });
        }
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        let (mut g, map) = self.delete_vertex(v)?;
        let (a, b) = (map.get(nbrs[0]).unwrap(), map.get(nbrs[1]).unwrap());
        if !g.has_edge(a, b) {
            g.add_edge(a, b)?;
        }
        Ok((g, map))
    }

    /// Contract the edge `u-v`: `v` is merged into `u`, the merged vertex is
    /// adjacent to `N(u) ∪ N(v) − {u, v}`, and any multi-edge that would
    /// appear is dropped. The merged vertex sits at `u`'s renumbered slot.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge(u, v));
        }
        let map = VertexMap::removal(self.n, v);
        let target = map.get(u).unwrap();
        let mut g = Graph::empty(self.n - 1);
        for (a, b) in self.edges() {
            let (a2, b2) = match (a == v, b == v) {
                (true, true) => unreachable!("self-loop"),
                (true, false) => (target, map.get(b).unwrap()),
                (false, true) => (map.get(a).unwrap(), target),
                (false, false) => (map.get(a).unwrap(), map.get(b).unwrap()),
            };
            if a2 != b2 && !g.has_edge(a2, b2) {
                g.add_edge(a2, b2)?;
            }
        }
        Ok((g, map))
    }

    /// Induced subgraph on `vertices` (ascending, duplicate free), with
    /// vertex `vertices[i]` renumbered to `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let index: std::collections::BTreeMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut sub = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                if let Some(&j) = index.get(&u) {
                    if i < j {
                        sub.add_edge(i, j).expect("induced edges are simple");
                    }
                }
            }
        }
        sub
    }

    /// `N(u) ∩ N(v)`. Requires `u ≠ v`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> Result<BTreeSet<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        debug_assert_ne!(u, v, "common_neighbors needs two distinct vertices");
        Ok(self.adj[u].intersection(&self.adj[v]).copied().collect())
    }

    /// Pairs of non-adjacent vertices at distance exactly two having at
    /// least `√delta` common neighbors. The threshold is evaluated in
    /// integers: a count `t` qualifies iff `t² ≥ delta`. `delta` should be
    /// the maximum degree of the graph.
    pub fn special_pairs(&self, delta: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adj[u].contains(&v) {
                    continue;
                }
                let common = self.adj[u].intersection(&self.adj[v]).count();
                if common >= 1 && common * common >= delta {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Constructors for the standard small graphs used throughout the tests and
/// the random-graph lab.
pub mod build {
    use super::Graph;

    /// Path on `n` vertices (`n ≥ 1`).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Cycle on `n ≥ 3` vertices.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Complete bipartite graph; side A is `0..a`, side B is `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// `rows × cols` grid; vertex `(r, c)` is `r * cols + c`.
    pub fn grid(rows: usize, cols: usize) -> Graph {
        let mut edges = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    edges.push((v, v + 1));
                }
                if r + 1 < rows {
                    edges.push((v, v + cols));
                }
            }
        }
        Graph::from_edges(rows * cols, &edges).unwrap()
    }
}
