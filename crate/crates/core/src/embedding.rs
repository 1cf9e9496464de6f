//! Combinatorial embeddings: rotation systems, darts and face tracing.
//!
//! Each undirected edge `{u, v}` yields two darts, `u -> v` and `v -> u`.
//! A rotation system fixes a cyclic order of the darts leaving each vertex.
//! Faces are the orbits of the face permutation
//!
//! ```text
//! next(d) = successor of reverse(d) in the cyclic order at head(d)
//! ```
//!
//! Using the predecessor instead would trace the mirror embedding; every
//! count in this crate is mirror-invariant, so only one convention is used.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A directed half of an undirected edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dart {
    pub edge: usize,
    pub tail: usize,
    pub head: usize,
}

/// Cyclic neighbour orders at every vertex of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    rotation: Vec<Vec<usize>>,
    offset: Vec<usize>,
    darts: Vec<Dart>,
    reverse: Vec<usize>,
    // position of dart d inside the rotation of tail(d)
    position: Vec<usize>,
}

impl RotationSystem {
    /// `rotation[v]` lists the neighbours of `v` in cyclic order.
    pub fn new(rotation: Vec<Vec<usize>>) -> Result<Self> {
        let n = rotation.len();
        let mut offset = Vec::with_capacity(n + 1);
        let mut total = 0;
        for (v, nbrs) in rotation.iter().enumerate() {
            offset.push(total);
            total += nbrs.len();
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidRotation(format!("vertex {v} repeats a neighbour")));
            }
            for &u in nbrs {
                if u == v {
                    return Err(Error::InvalidRotation(format!("loop at vertex {v}")));
                }
                if u >= n {
                    return Err(Error::InvalidRotation(format!("vertex {v} lists missing vertex {u}")));
                }
            }
        }
        offset.push(total);

        let mut darts = Vec::with_capacity(total);
        let mut position = Vec::with_capacity(total);
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &u) in nbrs.iter().enumerate() {
                darts.push(Dart { edge: usize::MAX, tail: v, head: u });
                position.push(i);
            }
        }
        let mut reverse = vec![usize::MAX; total];
        let mut edge = 0;
        for d in 0..total {
            let Dart { tail, head, .. } = darts[d];
            let Some(j) = rotation[head].iter().position(|&w| w == tail) else {
                return Err(Error::InvalidRotation(format!("dart {tail}->{head} has no reverse dart (dangling)")));
            };
            let r = offset[head] + j;
            reverse[d] = r;
            if tail < head {
                darts[d].edge = edge;
                darts[r].edge = edge;
                edge += 1;
            }
        }
        Ok(RotationSystem { rotation, offset, darts, reverse, position })
    }

    /// Rotation whose cyclic orders are the sorted neighbour lists of `g`.
    pub fn lexicographic(g: &Graph) -> Self {
        let rotation = (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect();
        RotationSystem::new(rotation).expect("graph adjacency is a valid rotation")
    }

    pub fn n(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.darts.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.darts.len()
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn dart(&self, d: usize) -> Dart {
        self.darts[d]
    }

    pub fn darts(&self) -> &[Dart] {
        &self.darts
    }

    /// Dart leaving `v` at position `i` of its rotation.
    pub fn dart_at(&self, v: usize, i: usize) -> usize {
        self.offset[v] + i
    }

    pub fn reverse(&self, d: usize) -> usize {
        self.reverse[d]
    }

    /// The face permutation.
    pub fn next(&self, d: usize) -> usize {
        let r = self.reverse[d];
        let head = self.darts[d].head;
        let deg = self.rotation[head].len();
        self.offset[head] + (self.position[r] + 1) % deg
    }

    pub fn graph(&self) -> Graph {
        Graph::from_adjacency(self.rotation.clone()).expect("rotation validated at construction")
    }

    pub fn min_degree(&self) -> usize {
        self.rotation.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.graph().is_connected()
    }

    pub fn trace_faces(&self) -> FaceSet {
        trace_faces(self)
    }

    /// Genus `g` of the orientable surface, from `n - e + f = 2c - 2g` over
    /// `c` components.
    pub fn euler_genus(&self) -> usize {
        let comps = self.graph().components().len() as i64;
        let f = self.trace_faces().len() as i64;
        let chi = self.n() as i64 - self.edge_count() as i64 + f;
        ((2 * comps - chi) / 2) as usize
    }
}

/// Orbits of the face permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    faces: Vec<Vec<usize>>,
}

impl FaceSet {
    /// Face boundaries as dart sequences; an isolated vertex owns one empty face.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Boundary lengths with multiplicity (a bridge counts twice).
    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }
}

pub fn trace_faces(rotation: &RotationSystem) -> FaceSet {
    let total = rotation.dart_count();
    let mut seen = vec![false; total];
    let mut faces = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            face.push(d);
            d = rotation.next(d);
        }
        faces.push(face);
    }
    for v in 0..rotation.n() {
        if rotation.degree(v) == 0 {
            faces.push(Vec::new());
        }
    }
    FaceSet { faces }
}

/// The counting symbols `n, e, f, n3, f3, e3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphCounts {
    pub n: usize,
    pub e: usize,
    pub f: usize,
    /// Degree-3 vertices.
    pub n3: usize,
    /// Triangular faces.
    pub f3: usize,
    /// Distinct edges lying on at least one triangular face.
    pub e3: usize,
}

/// A connected simple graph with a genus-0 rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGraph {
    rotation: RotationSystem,
    faces: FaceSet,
    graph: Graph,
}

pub fn build_plane_graph(rotation: RotationSystem) -> Result<PlaneGraph> {
    PlaneGraph::new(rotation)
}

impl PlaneGraph {
    pub fn new(rotation: RotationSystem) -> Result<Self> {
        let graph = rotation.graph();
        if !graph.is_connected() {
            return Err(Error::NotConnected);
        }
        let faces = trace_faces(&rotation);
        let chi = rotation.n() as i64 - rotation.edge_count() as i64 + faces.len() as i64;
        if chi != 2 {
            return Err(Error::NotGenusZero(((2 - chi) / 2) as usize));
        }
        Ok(PlaneGraph { rotation, faces, graph })
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rotation
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn min_degree(&self) -> usize {
        self.rotation.min_degree()
    }

    /// Whether face `i` is a triangle: boundary length 3 on three distinct vertices.
    pub fn is_triangular_face(&self, i: usize) -> bool {
        let face = &self.faces.faces[i];
        if face.len() != 3 {
            return false;
        }
        let t: Vec<usize> = face.iter().map(|&d| self.rotation.dart(d).tail).collect();
        t[0] != t[1] && t[1] != t[2] && t[0] != t[2]
    }

    /// Length of the shortest non-triangular face, if any.
    pub fn min_non_triangular_face_length(&self) -> Option<usize> {
        (0..self.faces.len()).filter(|&i| !self.is_triangular_face(i)).map(|i| self.faces.faces[i].len()).min()
    }

    pub fn counts(&self) -> GraphCounts {
        let n = self.rotation.n();
        let e = self.rotation.edge_count();
        let n3 = (0..n).filter(|&v| self.rotation.degree(v) == 3).count();
        let mut on_triangle = vec![false; e];
        let mut f3 = 0;
        for i in 0..self.faces.len() {
            if self.is_triangular_face(i) {
                f3 += 1;
                for &d in &self.faces.faces[i] {
                    on_triangle[self.rotation.dart(d).edge] = true;
                }
            }
        }
        GraphCounts { n, e, f: self.faces.len(), n3, f3, e3: on_triangle.iter().filter(|&&b| b).count() }
    }
}

pub fn counts(g: &PlaneGraph) -> GraphCounts {
    g.counts()
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::RotationSystem;

    /// Prism drawn with the inner triangle 0,1,2 inside the outer triangle 3,4,5.
    pub fn prism_rotation() -> RotationSystem {
        RotationSystem::new(vec![
            vec![1, 3, 2],
            vec![2, 4, 0],
            vec![0, 5, 1],
            vec![0, 4, 5],
            vec![1, 5, 3],
            vec![2, 3, 4],
        ])
        .unwrap()
    }

    /// Cube with inner square 0,1,3,2 and outer square 4,5,7,6 (bit 2 = layer).
    pub fn cube_rotation() -> RotationSystem {
        RotationSystem::new(vec![
            vec![1, 4, 2],
            vec![3, 5, 0],
            vec![0, 6, 3],
            vec![2, 7, 1],
            vec![0, 5, 6],
            vec![1, 7, 4],
            vec![2, 4, 7],
            vec![3, 6, 5],
        ])
        .unwrap()
    }

    pub fn k4_rotation() -> RotationSystem {
        RotationSystem::new(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]]).unwrap()
    }
}
