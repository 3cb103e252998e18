//! Rotation systems (orientable combinatorial embeddings), face tracing, and
//! Euler genus.
//!
//! A rotation system stores, for each vertex, the cyclic order of its
//! neighbors. Faces are traced with the convention: the directed edge after
//! `(u, v)` is `(v, w)` where `w` is the cyclic successor of `u` in the
//! rotation of `v`. The opposite convention would give the mirror embedding
//! with the same genus; this one is fixed so outputs are byte stable.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("underlying graph is disconnected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex cyclic neighbor orders defining an orientable embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    order: Vec<Vec<usize>>,
}

impl RotationSystem {
    /// Validate and wrap neighbor orders: entries in range, no loops, no
    /// repeats, and symmetric (`u` in `order[v]` iff `v` in `order[u]`).
    pub fn new(order: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = order.len();
        for (v, nbs) in order.iter().enumerate() {
            let mut seen = std::collections::BTreeSet::new();
            for &u in nbs {
                if u >= n {
                    return Err(GraphError::VertexOutOfRange { v: u, n });
                }
                if u == v {
                    return Err(GraphError::SelfLoop(v));
                }
                if !seen.insert(u) {
                    return Err(GraphError::DuplicateEdge(v.min(u), v.max(u)));
                }
            }
        }
        for v in 0..n {
            for &u in &order[v] {
                if !order[u].contains(&v) {
                    return Err(GraphError::Asymmetric { u, v });
                }
            }
        }
        Ok(RotationSystem { order })
    }

    /// A canonical planar-style rotation for a graph: each vertex lists its
    /// neighbors in ascending order. (Rarely genus-minimal; useful as a
    /// deterministic default.)
    pub fn sorted_from_graph(g: &Graph) -> Self {
        RotationSystem { order: (0..g.n()).map(|v| g.neighbors(v).collect()).collect() }
    }

    pub fn n(&self) -> usize {
        self.order.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.order.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Cyclic neighbor order of `v`.
    pub fn order(&self, v: usize) -> &[usize] {
        &self.order[v]
    }

    /// The underlying simple graph.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        for v in 0..self.n() {
            for &u in &self.order[v] {
                if v < u {
                    g.add_edge(v, u).expect("validated rotation");
                }
            }
        }
        g
    }

    /// Reverse every rotation (the mirror embedding).
    pub fn mirrored(&self) -> RotationSystem {
        RotationSystem {
            order: self.order.iter().map(|nbs| nbs.iter().rev().copied().collect()).collect(),
        }
    }

    /// Cyclic successor of `u` within the rotation of `v`.
    fn successor(&self, v: usize, u: usize) -> usize {
        let nbs = &self.order[v];
        let i = nbs.iter().position(|&x| x == u).expect("u adjacent to v");
        nbs[(i + 1) % nbs.len()]
    }
}

/// The facial walks of an embedding, each a cyclic list of directed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<(usize, usize)>>,
}

impl FaceSet {
    /// Number of faces.
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// All facial walks.
    pub fn faces(&self) -> &[Vec<(usize, usize)>] {
        &self.faces
    }

    /// Length of face `f`.
    pub fn degree(&self, f: usize) -> usize {
        self.faces[f].len()
    }

    /// Boundary vertices of face `f` in walk order (tails of its darts,
    /// with repetitions if the walk revisits a vertex).
    pub fn boundary(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&(u, _)| u).collect()
    }
}

/// Trace all facial walks. Each of the `2m` directed edges lands in exactly
/// one walk; each walk starts at its lexicographically smallest dart.
pub fn trace_faces(r: &RotationSystem) -> FaceSet {
    let mut darts = std::collections::BTreeSet::new();
    for v in 0..r.n() {
        for &u in r.order(v) {
            darts.insert((v, u));
        }
    }
    let mut faces = Vec::new();
    while let Some(&start) = darts.iter().next() {
        let mut walk = Vec::new();
        let mut dart = start;
        loop {
            let removed = darts.remove(&dart);
            debug_assert!(removed, "dart revisited before walk closed");
            walk.push(dart);
            let (u, v) = dart;
            dart = (v, r.successor(v, u));
            if dart == start {
                break;
            }
        }
        faces.push(walk);
    }
    FaceSet { faces }
}

/// Euler genus `2 - n + m - |F|` of a connected embedded graph. Always even,
/// since rotation systems describe orientable surfaces.
pub fn euler_genus(r: &RotationSystem) -> Result<usize, EmbeddingError> {
    let g = r.graph();
    if !g.is_connected() {
        return Err(EmbeddingError::Disconnected);
    }
    if g.n() == 1 && g.m() == 0 {
        // One vertex on the sphere: a single face that tracing cannot see.
        return Ok(0);
    }
    let f = trace_faces(r).len();
    Ok(2 + g.m() - g.n() - f)
}

/// Cross-index between vertices and faces.
#[derive(Clone, Debug)]
pub struct FaceIncidences {
    /// `vertex_faces[v]` lists `(face, position)` pairs with
    /// `faces[face][position] = (v, _)`, one per incident dart.
    pub vertex_faces: Vec<Vec<(usize, usize)>>,
    /// `face_vertex_degrees[f][i]` is the graph degree of the `i`-th
    /// boundary vertex of face `f`.
    pub face_vertex_degrees: Vec<Vec<usize>>,
}

/// Build the vertex/face cross-index for a traced face set.
pub fn face_incidences(g: &Graph, fs: &FaceSet) -> FaceIncidences {
    let mut vertex_faces = vec![Vec::new(); g.n()];
    let mut face_vertex_degrees = Vec::with_capacity(fs.len());
    for (f, walk) in fs.faces().iter().enumerate() {
        let mut degs = Vec::with_capacity(walk.len());
        for (pos, &(u, _)) in walk.iter().enumerate() {
            vertex_faces[u].push((f, pos));
            degs.push(g.degree(u));
        }
        face_vertex_degrees.push(degs);
    }
    FaceIncidences { vertex_faces, face_vertex_degrees }
}
