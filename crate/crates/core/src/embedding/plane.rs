//! Combinatorial plane embeddings given by rotation systems.
//!
//! A dart `(u, v)` is the edge `uv` traversed from `u` to `v`. The face to the
//! right of `(u, v)` continues with `(v, w)` where `w` follows `u` in the
//! rotation at `v`. Every dart lies on exactly one face walk.

use std::collections::{BTreeMap, HashMap};

use crate::error::EmbeddingError;
use crate::graph::{edge, Edge, Graph};

pub type Dart = (usize, usize);

/// One face of a plane graph: its boundary closed walk as a dart sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    pub darts: Vec<Dart>,
    pub is_outer: bool,
}

impl Face {
    /// Number of darts in the boundary walk.
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    /// Boundary walk as the sequence of dart tails.
    pub fn walk(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.0).collect()
    }

    /// Distinct boundary vertices, sorted.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.walk();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.darts.iter().map(|&(u, v)| edge(u, v)).collect()
    }

    /// The walk rotated to its lexicographically smallest starting point.
    pub fn canonical_walk(&self) -> Vec<usize> {
        min_rotation(&self.walk())
    }
}

pub(crate) fn min_rotation(walk: &[usize]) -> Vec<usize> {
    (0..walk.len().max(1))
        .map(|s| walk.iter().cycle().skip(s).take(walk.len()).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// All faces of a connected plane graph plus the dart-to-face map.
#[derive(Debug, Clone)]
pub struct Faces {
    pub faces: Vec<Face>,
    pub outer: usize,
    dart_face: HashMap<Dart, usize>,
}

impl Faces {
    pub fn face_of_dart(&self, u: usize, v: usize) -> Option<usize> {
        self.dart_face.get(&(u, v)).copied()
    }

    /// The (up to two) faces on either side of edge `uv`.
    pub fn faces_of_edge(&self, u: usize, v: usize) -> Option<(usize, usize)> {
        Some((self.face_of_dart(u, v)?, self.face_of_dart(v, u)?))
    }

    /// Face-count vector: length `k` to number of `k`-faces.
    pub fn counts(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for f in &self.faces {
            *out.entry(f.len()).or_insert(0) += 1;
        }
        out
    }

    pub fn count_of_length(&self, k: usize) -> usize {
        self.faces.iter().filter(|f| f.len() == k).count()
    }

    pub fn outer_face(&self) -> &Face {
        &self.faces[self.outer]
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

/// Traces every dart orbit of a rotation system. Orbits are emitted in order of
/// their first dart, scanning vertices ascending and rotations in order.
pub(crate) fn trace_orbits(rotation: &[Vec<usize>]) -> Vec<Vec<Dart>> {
    let succ = successor_maps(rotation);
    let mut seen: HashMap<Dart, ()> = HashMap::new();
    let mut orbits = Vec::new();
    for (u, rot) in rotation.iter().enumerate() {
        for &v in rot {
            if seen.contains_key(&(u, v)) {
                continue;
            }
            let mut orbit = Vec::new();
            let (mut a, mut b) = (u, v);
            loop {
                seen.insert((a, b), ());
                orbit.push((a, b));
                let c = succ[b][&a];
                a = b;
                b = c;
                if (a, b) == (u, v) {
                    break;
                }
            }
            orbits.push(orbit);
        }
    }
    orbits
}

fn successor_maps(rotation: &[Vec<usize>]) -> Vec<HashMap<usize, usize>> {
    rotation
        .iter()
        .map(|rot| {
            let k = rot.len();
            (0..k).map(|i| (rot[i], rot[(i + 1) % k])).collect()
        })
        .collect()
}

/// A graph together with a rotation system and a designated outer face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneGraph {
    graph: Graph,
    rotation: Vec<Vec<usize>>,
    /// A dart on the outer face; `None` only when the graph has no edges.
    outer_dart: Option<Dart>,
}

impl PlaneGraph {
    /// Validates a rotation system and picks the outer face: the given walk if
    /// any, otherwise a longest face (ties: smallest canonical walk).
    pub fn new(
        graph: Graph,
        rotation: Vec<Vec<usize>>,
        outer_walk: Option<&[usize]>,
    ) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.order() {
            return Err(EmbeddingError::BadRotation(rotation.len().min(graph.order())));
        }
        for (v, rot) in rotation.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(EmbeddingError::BadRotation(v));
            }
        }
        let orbits = trace_orbits(&rotation);
        check_genus_zero(&graph, &orbits)?;
        let outer_dart = match outer_walk {
            Some(walk) => Some(find_walk(&orbits, walk).ok_or(EmbeddingError::BadOuterFace)?),
            None => select_outer(&orbits),
        };
        if graph.size() > 0 && outer_dart.is_none() {
            return Err(EmbeddingError::BadOuterFace);
        }
        Ok(PlaneGraph {
            graph,
            rotation,
            outer_dart,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rotation(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    pub fn outer_dart(&self) -> Option<Dart> {
        self.outer_dart
    }

    /// Faces of a connected plane graph.
    pub fn faces(&self) -> Result<Faces, EmbeddingError> {
        if !self.graph.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let orbits = trace_orbits(&self.rotation);
        if orbits.is_empty() {
            // single vertex (or empty graph): one face with an empty walk
            return Ok(Faces {
                faces: vec![Face {
                    id: 0,
                    darts: Vec::new(),
                    is_outer: true,
                }],
                outer: 0,
                dart_face: HashMap::new(),
            });
        }
        let od = self.outer_dart.expect("graph with edges has an outer dart");
        let mut dart_face = HashMap::new();
        let mut outer = 0;
        let faces = orbits
            .into_iter()
            .enumerate()
            .map(|(id, darts)| {
                for &d in &darts {
                    dart_face.insert(d, id);
                }
                let is_outer = darts.contains(&od);
                if is_outer {
                    outer = id;
                }
                Face { id, darts, is_outer }
            })
            .collect();
        Ok(Faces {
            faces,
            outer,
            dart_face,
        })
    }

    /// Same embedding with a different outer face.
    pub fn with_outer_face(&self, walk: &[usize]) -> Result<Self, EmbeddingError> {
        PlaneGraph::new(self.graph.clone(), self.rotation.clone(), Some(walk))
    }

    /// Same embedding with the outer face containing dart `d`.
    pub fn with_outer_dart(&self, d: Dart) -> Result<Self, EmbeddingError> {
        if !self.graph.has_edge(d.0, d.1) {
            return Err(EmbeddingError::BadOuterFace);
        }
        Ok(PlaneGraph {
            graph: self.graph.clone(),
            rotation: self.rotation.clone(),
            outer_dart: Some(d),
        })
    }

    /// Mirror image: every rotation reversed. The outer face is preserved.
    pub fn mirror(&self) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        PlaneGraph {
            graph: self.graph.clone(),
            rotation,
            outer_dart: self.outer_dart.map(|(u, v)| (v, u)),
        }
    }

    /// Relabels vertices: `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut rotation = vec![Vec::new(); self.order()];
        for (v, rot) in self.rotation.iter().enumerate() {
            rotation[perm[v]] = rot.iter().map(|&w| perm[w]).collect();
        }
        PlaneGraph {
            graph: self.graph.permute(perm),
            rotation,
            outer_dart: self.outer_dart.map(|(u, v)| (perm[u], perm[v])),
        }
    }

    /// Rotation system restricted to a subset of edges (same vertex labels).
    pub fn sub_rotation(&self, keep: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
        self.rotation
            .iter()
            .enumerate()
            .map(|(v, rot)| rot.iter().copied().filter(|&w| keep(v, w)).collect())
            .collect()
    }
}

/// Builds a plane graph from a drawing: vertex coordinates, with optional
/// departure directions for curved edges (`((from, to), direction)`). Rotations
/// list neighbors clockwise. The outer face is the face whose boundary has
/// exactly the vertex sequence `outer` (up to rotation and reversal).
pub fn from_drawing(
    n: usize,
    edges: &[Edge],
    coords: &[(f64, f64)],
    bends: &[(Dart, (f64, f64))],
    outer: &[usize],
) -> Result<PlaneGraph, EmbeddingError> {
    let graph = Graph::from_edges(n, edges)?;
    let bend: HashMap<Dart, (f64, f64)> = bends.iter().copied().collect();
    let rotation: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut nb: Vec<(f64, usize)> = graph
                .neighbors(v)
                .iter()
                .map(|&w| {
                    let (dx, dy) = bend.get(&(v, w)).copied().unwrap_or((
                        coords[w].0 - coords[v].0,
                        coords[w].1 - coords[v].1,
                    ));
                    (-dy.atan2(dx), w)
                })
                .collect();
            nb.sort_by(|a, b| a.0.total_cmp(&b.0));
            nb.into_iter().map(|x| x.1).collect()
        })
        .collect();
    let orbits = trace_orbits(&rotation);
    let want = min_rotation(outer);
    let rev: Vec<usize> = outer.iter().rev().copied().collect();
    let want_rev = min_rotation(&rev);
    let walk = orbits
        .iter()
        .map(|o| o.iter().map(|d| d.0).collect::<Vec<_>>())
        .find(|w| {
            let m = min_rotation(w);
            m == want || m == want_rev
        })
        .ok_or(EmbeddingError::BadOuterFace)?;
    PlaneGraph::new(graph, rotation, Some(&walk))
}

fn find_walk(orbits: &[Vec<Dart>], walk: &[usize]) -> Option<Dart> {
    let target = min_rotation(walk);
    orbits
        .iter()
        .find(|o| {
            let w: Vec<usize> = o.iter().map(|d| d.0).collect();
            w.len() == walk.len() && min_rotation(&w) == target
        })
        .map(|o| o[0])
}

/// Longest orbit; ties broken by the lexicographically smallest canonical walk.
pub(crate) fn select_outer(orbits: &[Vec<Dart>]) -> Option<Dart> {
    orbits
        .iter()
        .map(|o| {
            let w: Vec<usize> = o.iter().map(|d| d.0).collect();
            let canon = min_rotation(&w);
            (std::cmp::Reverse(o.len()), canon, o)
        })
        .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
        .map(|(_, canon, o)| {
            // start the dart at the canonical position so the choice is stable
            let start = (0..o.len())
                .find(|&i| {
                    (0..o.len()).all(|j| o[(i + j) % o.len()].0 == canon[j])
                })
                .unwrap_or(0);
            o[start]
        })
}

fn check_genus_zero(graph: &Graph, orbits: &[Vec<Dart>]) -> Result<(), EmbeddingError> {
    let comps = graph.components();
    let mut comp_of = vec![0; graph.order()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let mut faces = vec![0isize; comps.len()];
    for o in orbits {
        faces[comp_of[o[0].0]] += 1;
    }
    let mut edges = vec![0isize; comps.len()];
    for (u, _) in graph.edges() {
        edges[comp_of[u]] += 1;
    }
    for (i, c) in comps.iter().enumerate() {
        if edges[i] == 0 {
            continue;
        }
        if c.len() as isize - edges[i] + faces[i] != 2 {
            return Err(EmbeddingError::BadRotation(c[0]));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> PlaneGraph {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // 3 at the center of triangle 0-1-2
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 1, 2]];
        PlaneGraph::new(g, rot, None).unwrap()
    }

    #[test]
    fn k4_has_four_triangles() {
        let f = k4().faces().unwrap();
        assert_eq!(f.len(), 4);
        assert_eq!(f.count_of_length(3), 4);
    }

    #[test]
    fn c4_has_two_quadrilaterals() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let rot = vec![vec![1, 3], vec![2, 0], vec![3, 1], vec![0, 2]];
        let pg = PlaneGraph::new(g, rot, None).unwrap();
        let f = pg.faces().unwrap();
        assert_eq!(f.counts(), BTreeMap::from([(4, 2)]));
    }

    #[test]
    fn theta4_by_hand() {
        // 4-cycle a b c d (0 1 2 3) with chord b d (1 3); outer face abcda
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        let rot = vec![vec![1, 3], vec![2, 3, 0], vec![3, 1], vec![0, 1, 2]];
        let pg = PlaneGraph::new(g, rot, Some(&[0, 1, 2, 3])).unwrap();
        let f = pg.faces().unwrap();
        assert_eq!(f.count_of_length(3), 2);
        assert_eq!(f.count_of_length(4), 1);
        assert_eq!(f.outer_face().len(), 4);
    }

    #[test]
    fn rejects_toroidal_rotation() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        // inconsistent orientation at vertex 3 gives a genus-1 rotation system
        let rot = vec![vec![1, 3, 2], vec![2, 3, 0], vec![0, 3, 1], vec![0, 2, 1]];
        assert!(PlaneGraph::new(g, rot, None).is_err());
    }

    #[test]
    fn mirror_keeps_face_lengths_and_outer() {
        let pg = k4();
        let m = pg.mirror();
        let a = pg.faces().unwrap();
        let b = m.faces().unwrap();
        assert_eq!(a.counts(), b.counts());
        assert_eq!(a.outer_face().vertex_set(), b.outer_face().vertex_set());
    }

    #[test]
    fn disconnected_faces_error() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        let pg = PlaneGraph::new(g, rot, None).unwrap();
        assert_eq!(pg.faces().unwrap_err(), EmbeddingError::Disconnected);
    }
}
