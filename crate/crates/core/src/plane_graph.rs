//! Connected simple plane graphs given by rotation systems.
//!
//! A graph is described by the clockwise cyclic order of neighbors around
//! every vertex. Faces are recovered by face tracing: from the directed edge
//! `(u, v)` the walk continues with `(v, w)`, where `w` is the neighbor that
//! immediately precedes `u` in the clockwise rotation at `v`. Under this
//! convention every face boundary is traversed counterclockwise, and the
//! face of the directed edge `v -> v_i` is the face lying between `v v_i`
//! and `v v_{i+1}` at `v`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

/// Dense internal vertex index.
pub type Vertex = usize;
/// Dense face index.
pub type FaceId = usize;
/// External vertex label as it appears in graph files.
pub type Label = u32;

/// Clockwise neighbor order for every vertex, keyed by external label.
pub type RotationTable = BTreeMap<Label, Vec<Label>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("rotation is not symmetric: {0} lists {1} but {1} does not list {0}")]
    AsymmetricRotation(Label, Label),
    #[error("loop or repeated neighbor at vertex {0} (neighbor {1})")]
    LoopOrMultiEdge(Label, Label),
    #[error("graph is disconnected (vertex {0} unreachable from {1})")]
    Disconnected(Label, Label),
    #[error("rotation system is not planar: |V| - |E| + |F| = {0}")]
    EulerViolation(i64),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("unknown face {0}")]
    UnknownFace(usize),
}

/// A face with its boundary walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    /// Directed edges of the boundary walk, in traversal order.
    pub walk: Vec<(Vertex, Vertex)>,
}

impl Face {
    /// `d(f)`: the length of the boundary walk. Bridges count twice.
    pub fn degree(&self) -> usize {
        self.walk.len()
    }

    /// Boundary vertices in cyclic order (`f = [u1 u2 ... un]`).
    pub fn vertices(&self) -> Vec<Vertex> {
        self.walk.iter().map(|&(u, _)| u).collect()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.walk.iter().any(|&(u, _)| u == v)
    }

    pub fn contains_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.walk
            .iter()
            .any(|&(u, w)| (u == a && w == b) || (u == b && w == a))
    }
}

/// An immutable connected plane graph.
#[derive(Debug, Clone)]
pub struct PlaneGraph {
    labels: Vec<Label>,
    label_index: HashMap<Label, Vertex>,
    rotation: Vec<Vec<Vertex>>,
    dart_offset: Vec<usize>,
    dart_face: Vec<FaceId>,
    faces: Vec<Face>,
    edge_count: usize,
}

impl PlaneGraph {
    /// Builds a graph from a rotation table keyed by external labels.
    ///
    /// Internal indices follow increasing label order.
    pub fn build_from_rotation(table: &RotationTable) -> Result<Self, GraphError> {
        if table.is_empty() {
            return Err(GraphError::Empty);
        }
        let labels: Vec<Label> = table.keys().copied().collect();
        let label_index: HashMap<Label, Vertex> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut rotation = Vec::with_capacity(labels.len());
        for (&v, nbrs) in table {
            let mut row = Vec::with_capacity(nbrs.len());
            for &u in nbrs {
                if u == v || nbrs.iter().filter(|&&w| w == u).count() > 1 {
                    return Err(GraphError::LoopOrMultiEdge(v, u));
                }
                match label_index.get(&u) {
                    Some(&i) => row.push(i),
                    None => return Err(GraphError::AsymmetricRotation(v, u)),
                }
            }
            rotation.push(row);
        }
        Self::from_parts(labels, rotation)
    }

    /// Builds a graph from internal rotation rows; `labels[i]` names vertex `i`.
    pub fn from_parts(labels: Vec<Label>, rotation: Vec<Vec<Vertex>>) -> Result<Self, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let label_index: HashMap<Label, Vertex> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        for (v, row) in rotation.iter().enumerate() {
            for (i, &u) in row.iter().enumerate() {
                if u >= n {
                    return Err(GraphError::UnknownVertex(u));
                }
                if u == v || row[..i].contains(&u) {
                    return Err(GraphError::LoopOrMultiEdge(labels[v], labels[u]));
                }
                if !rotation[u].contains(&v) {
                    return Err(GraphError::AsymmetricRotation(labels[v], labels[u]));
                }
            }
        }

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &u in &rotation[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(GraphError::Disconnected(labels[v], labels[0]));
        }

        let mut dart_offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for row in &rotation {
            dart_offset.push(total);
            total += row.len();
        }
        dart_offset.push(total);
        let edge_count = total / 2;

        let mut graph = PlaneGraph {
            labels,
            label_index,
            rotation,
            dart_offset,
            dart_face: vec![usize::MAX; total],
            faces: Vec::new(),
            edge_count,
        };
        graph.trace_faces();

        let euler = n as i64 - edge_count as i64 + graph.faces.len() as i64;
        if euler != 2 {
            return Err(GraphError::EulerViolation(euler));
        }
        Ok(graph)
    }

    fn trace_faces(&mut self) {
        if self.edge_count == 0 {
            // A lone vertex sits in a single face with an empty boundary.
            self.faces.push(Face {
                id: 0,
                walk: Vec::new(),
            });
            return;
        }
        for v in 0..self.rotation.len() {
            for i in 0..self.rotation[v].len() {
                if self.dart_face[self.dart_offset[v] + i] != usize::MAX {
                    continue;
                }
                let id = self.faces.len();
                let mut walk = Vec::new();
                let (mut a, mut ai) = (v, i);
                loop {
                    let dart = self.dart_offset[a] + ai;
                    if self.dart_face[dart] != usize::MAX {
                        break;
                    }
                    self.dart_face[dart] = id;
                    let b = self.rotation[a][ai];
                    walk.push((a, b));
                    let pos = self.position(b, a);
                    let d = self.rotation[b].len();
                    ai = (pos + d - 1) % d;
                    a = b;
                }
                self.faces.push(Face { id, walk });
            }
        }
    }

    /// Index of `u` in the rotation at `v`. Panics if they are not adjacent.
    pub fn position(&self, v: Vertex, u: Vertex) -> usize {
        self.rotation[v]
            .iter()
            .position(|&w| w == u)
            .expect("symmetric rotation")
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.rotation.len()
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn vertex_of(&self, label: Label) -> Option<Vertex> {
        self.label_index.get(&label).copied()
    }

    /// Clockwise neighbor order at `v`.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn try_degree(&self, v: Vertex) -> Result<usize, GraphError> {
        self.rotation
            .get(v)
            .map(Vec::len)
            .ok_or(GraphError::UnknownVertex(v))
    }

    pub fn min_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rotation[u].contains(&v)
    }

    /// Every edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, row) in self.rotation.iter().enumerate() {
            out.extend(row.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    pub fn try_face_degree(&self, f: FaceId) -> Result<usize, GraphError> {
        self.faces
            .get(f)
            .map(Face::degree)
            .ok_or(GraphError::UnknownFace(f))
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].degree()
    }

    /// `v_i` with the index taken modulo `d(v)`.
    pub fn nbr(&self, v: Vertex, i: usize) -> Vertex {
        let row = &self.rotation[v];
        row[i % row.len()]
    }

    /// `f_i` with the index taken modulo `d(v)`.
    pub fn corner_face(&self, v: Vertex, i: usize) -> FaceId {
        self.dart_face(v, i % self.degree(v))
    }

    /// Face containing the directed edge from `v` to its `i`-th rotation neighbor.
    pub fn dart_face(&self, v: Vertex, i: usize) -> FaceId {
        self.dart_face[self.dart_offset[v] + i]
    }

    /// Face containing the directed edge `u -> v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> FaceId {
        self.dart_face(u, self.position(u, v))
    }

    /// `f_1, ..., f_{d(v)}` where `f_i` has `v v_i` and `v v_{i+1}` on its
    /// boundary. Under this indexing the face opposite to `f_i` at a
    /// 4-vertex is `f_{i+2}`.
    pub fn incident_faces(&self, v: Vertex) -> Vec<FaceId> {
        (0..self.degree(v)).map(|i| self.dart_face(v, i)).collect()
    }

    pub fn try_incident_faces(&self, v: Vertex) -> Result<Vec<FaceId>, GraphError> {
        if v >= self.vertex_count() {
            return Err(GraphError::UnknownVertex(v));
        }
        Ok(self.incident_faces(v))
    }

    /// The two faces on either side of edge `uv` (equal for a bridge).
    pub fn edge_faces(&self, u: Vertex, v: Vertex) -> (FaceId, FaceId) {
        (self.face_of_dart(u, v), self.face_of_dart(v, u))
    }

    pub fn rotation_table(&self) -> RotationTable {
        self.rotation
            .iter()
            .enumerate()
            .map(|(v, row)| {
                (
                    self.labels[v],
                    row.iter().map(|&u| self.labels[u]).collect(),
                )
            })
            .collect()
    }

    /// Removes the vertices flagged in `removed` and optionally one edge.
    ///
    /// The embedding is inherited. Each connected component of what remains
    /// comes back with a map from its vertices to vertices of `self`.
    pub fn subgraph_components(
        &self,
        removed: &[bool],
        removed_edge: Option<(Vertex, Vertex)>,
    ) -> Vec<(PlaneGraph, Vec<Vertex>)> {
        let n = self.vertex_count();
        let keeps_edge = |a: Vertex, b: Vertex| match removed_edge {
            Some((x, y)) => !((a == x && b == y) || (a == y && b == x)),
            None => true,
        };
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if removed[start] || comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for &u in &self.rotation[v] {
                    if !removed[u] && comp[u] == usize::MAX && keeps_edge(v, u) {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            let local: HashMap<Vertex, Vertex> =
                members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let rotation = members
                .iter()
                .map(|&v| {
                    self.rotation[v]
                        .iter()
                        .filter(|&&u| !removed[u] && keeps_edge(v, u))
                        .map(|u| local[u])
                        .collect()
                })
                .collect();
            let labels = members.iter().map(|&v| self.labels[v]).collect();
            let g = PlaneGraph::from_parts(labels, rotation)
                .expect("subgraph of a plane graph is a plane graph");
            out.push((g, members));
        }
        out
    }
}

impl fmt::Display for PlaneGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, row) in self.rotation.iter().enumerate() {
            write!(f, "{}:", self.labels[v])?;
            for &u in row {
                write!(f, " {}", self.labels[u])?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
