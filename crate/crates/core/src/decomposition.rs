//! Triangular blocks and components of a plane graph, holes, junction
//! vertices, solid blocks, triangle density, and the theta-graph analysis of
//! edges lying on two 3-faces.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_rational::Ratio;

use crate::embedding::canon::canonical_form;
use crate::embedding::plane::{trace_orbits, Dart, Faces, PlaneGraph};
use crate::error::DecompositionError;
use crate::graph::{edge, Edge, Graph};
use crate::patterns::{fixture_plane, Fixture};

pub type Rational = Ratio<i64>;

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// A triangular block: one triangular-connected class of inner 3-faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriBlock {
    /// Host labels of the block's vertices, ascending; local vertex `i` is `labels[i]`.
    pub labels: Vec<usize>,
    /// Host edges of the block, ascending.
    pub edges: Vec<Edge>,
    /// Host inner 3-faces in the class, as boundary walks in host labels.
    pub faces: Vec<Vec<usize>>,
    /// Inner faces of the block that are not faces of the host.
    pub holes: Vec<Vec<usize>>,
    /// Triangular holes that `solidify` has reclassified as 3-faces.
    pub filled: Vec<Vec<usize>>,
    /// The block as a plane graph on local labels, with its own outer face.
    pub plane: PlaneGraph,
}

impl TriBlock {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Δ: host 3-faces in the block, plus faces filled by `solidify`.
    pub fn delta(&self) -> usize {
        self.faces.len() + self.filled.len()
    }

    /// Only the inner 3-faces of the block that are 3-faces of the host.
    pub fn host_delta(&self) -> usize {
        self.faces.len()
    }

    pub fn density(&self) -> Rational {
        Rational::new(self.delta() as i64, self.order() as i64)
    }

    pub fn is_solid(&self) -> bool {
        self.holes.iter().all(|h| h.len() != 3)
    }

    pub fn graph(&self) -> &Graph {
        self.plane.graph()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.labels
    }
}

/// A triangular component: blocks chained through shared vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriComponent {
    pub blocks: Vec<TriBlock>,
    /// Host labels, ascending.
    pub vertices: Vec<usize>,
    /// Vertices lying in two or more blocks of the component.
    pub junctions: Vec<usize>,
}

impl TriComponent {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn delta(&self) -> usize {
        self.blocks.iter().map(TriBlock::delta).sum()
    }

    pub fn density(&self) -> Rational {
        Rational::new(self.delta() as i64, self.order() as i64)
    }

    /// Abstract union of the block edges, relabeled to `0..order` in
    /// ascending host-label order.
    pub fn graph(&self) -> Graph {
        let idx: HashMap<usize, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let e: Vec<Edge> = self
            .blocks
            .iter()
            .flat_map(|b| b.edges.iter().map(|&(u, v)| (idx[&u], idx[&v])))
            .collect();
        Graph::from_edges(self.order(), &e).expect("blocks are edge-disjoint")
    }

    pub fn solidified(&self) -> TriComponent {
        TriComponent {
            blocks: self.blocks.iter().map(solidify).collect(),
            ..self.clone()
        }
    }
}

/// Anything with a triangle count and an order.
pub trait Dense {
    fn delta(&self) -> usize;
    fn order(&self) -> usize;
}

impl Dense for TriBlock {
    fn delta(&self) -> usize {
        TriBlock::delta(self)
    }
    fn order(&self) -> usize {
        TriBlock::order(self)
    }
}

impl Dense for TriComponent {
    fn delta(&self) -> usize {
        TriComponent::delta(self)
    }
    fn order(&self) -> usize {
        TriComponent::order(self)
    }
}

/// ρ = Δ / order, exact.
pub fn triangle_density<S: Dense>(s: &S) -> Rational {
    Rational::new(s.delta() as i64, s.order() as i64)
}

fn inner_triangles(faces: &Faces) -> Vec<usize> {
    faces
        .faces
        .iter()
        .filter(|f| f.len() == 3 && !f.is_outer)
        .map(|f| f.id)
        .collect()
}

pub fn triangular_blocks(pg: &PlaneGraph) -> Result<Vec<TriBlock>, DecompositionError> {
    let faces = pg.faces()?;
    let tri = inner_triangles(&faces);
    let is_tri: HashSet<usize> = tri.iter().copied().collect();
    let mut uf = UnionFind::new(faces.len());
    for (u, v) in pg.graph().edges() {
        let (a, b) = faces.faces_of_edge(u, v).expect("edge has two darts");
        if a != b && is_tri.contains(&a) && is_tri.contains(&b) {
            uf.union(a, b);
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &f in &tri {
        classes.entry(uf.find(f)).or_default().push(f);
    }
    Ok(classes
        .into_values()
        .map(|class| build_block(pg, &faces, &class))
        .collect())
}

fn build_block(pg: &PlaneGraph, faces: &Faces, class: &[usize]) -> TriBlock {
    let edge_set: BTreeSet<Edge> = class
        .iter()
        .flat_map(|&f| faces.faces[f].edges())
        .collect();
    let labels: Vec<usize> = edge_set
        .iter()
        .flat_map(|&(u, v)| [u, v])
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let local: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let rotation: Vec<Vec<usize>> = labels
        .iter()
        .map(|&v| {
            pg.rotation()[v]
                .iter()
                .filter(|&&w| edge_set.contains(&edge(v, w)))
                .map(|w| local[w])
                .collect()
        })
        .collect();

    // host faces in the same region of the block are joined across non-block edges
    let mut region = UnionFind::new(faces.len());
    for (u, v) in pg.graph().edges() {
        if !edge_set.contains(&(u, v)) {
            let (a, b) = faces.faces_of_edge(u, v).expect("edge has two darts");
            region.union(a, b);
        }
    }
    let outer_region = region.find(faces.outer);
    let in_class: HashSet<usize> = class.iter().copied().collect();

    let mut outer_dart: Option<Dart> = None;
    let mut holes = Vec::new();
    for orbit in trace_orbits(&rotation) {
        let host_darts: Vec<Dart> = orbit.iter().map(|&(a, b)| (labels[a], labels[b])).collect();
        let hf = faces
            .face_of_dart(host_darts[0].0, host_darts[0].1)
            .expect("block dart is a host dart");
        if region.find(hf) == outer_region {
            outer_dart = Some(orbit[0]);
            continue;
        }
        let same_as_host = faces.faces[hf].len() == host_darts.len()
            && host_darts.iter().all(|&(a, b)| faces.face_of_dart(a, b) == Some(hf));
        if same_as_host {
            debug_assert!(faces.faces[hf].len() != 3 || in_class.contains(&hf));
            continue;
        }
        holes.push(host_darts.iter().map(|d| d.0).collect());
    }
    let local_edges: Vec<Edge> = edge_set.iter().map(|&(u, v)| (local[&u], local[&v])).collect();
    let g = Graph::from_edges(labels.len(), &local_edges).expect("block is simple");
    let plane = PlaneGraph::new(g, rotation, None)
        .and_then(|p| p.with_outer_dart(outer_dart.expect("block has an outer face")))
        .expect("restriction of a plane embedding is plane");
    let mut class_faces: Vec<Vec<usize>> = class.iter().map(|&f| faces.faces[f].walk()).collect();
    class_faces.sort();
    holes.sort();
    TriBlock {
        labels,
        edges: edge_set.into_iter().collect(),
        faces: class_faces,
        holes,
        filled: Vec::new(),
        plane,
    }
}

/// Reclassifies every hole bounded by a 3-cycle as a 3-face of the block.
/// The abstract graph is unchanged, so pattern-freeness carries over.
pub fn solidify(b: &TriBlock) -> TriBlock {
    let (tri, rest): (Vec<_>, Vec<_>) = b.holes.iter().cloned().partition(|h| h.len() == 3);
    let mut filled = b.filled.clone();
    filled.extend(tri);
    filled.sort();
    TriBlock {
        holes: rest,
        filled,
        ..b.clone()
    }
}

pub fn triangular_components(pg: &PlaneGraph) -> Result<Vec<TriComponent>, DecompositionError> {
    Ok(components_of(triangular_blocks(pg)?))
}

/// Groups blocks into components by shared vertices.
pub fn components_of(blocks: Vec<TriBlock>) -> Vec<TriComponent> {
    let mut uf = UnionFind::new(blocks.len());
    let mut first: HashMap<usize, usize> = HashMap::new();
    let mut count: HashMap<usize, usize> = HashMap::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.labels {
            *count.entry(v).or_insert(0) += 1;
            match first.get(&v) {
                Some(&j) => uf.union(i, j),
                None => {
                    first.insert(v, i);
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<TriBlock>> = BTreeMap::new();
    for (i, b) in blocks.into_iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(b);
    }
    groups
        .into_values()
        .map(|blocks| {
            let vertices: BTreeSet<usize> = blocks.iter().flat_map(|b| b.labels.iter().copied()).collect();
            let junctions = vertices.iter().copied().filter(|v| count[v] >= 2).collect();
            TriComponent {
                blocks,
                vertices: vertices.into_iter().collect(),
                junctions,
            }
        })
        .collect()
}

/// Whether the outer face counts as a 3-face when collecting E_I and E′.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EiConvention {
    #[default]
    IncludeOuter,
    InnerOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EiAnalysis {
    /// Edges on two 3-faces.
    pub e_i: Vec<Edge>,
    /// Edges on exactly one 3-face.
    pub e_prime: Vec<Edge>,
    /// Degree of each vertex in the graph spanned by E_I.
    pub d_i: Vec<usize>,
    pub delta_i: usize,
    /// Number of 3-faces under the same convention.
    pub f3: usize,
}

fn is_three_face(faces: &Faces, f: usize, conv: EiConvention) -> bool {
    faces.faces[f].len() == 3 && (conv == EiConvention::IncludeOuter || f != faces.outer)
}

pub fn e_i_analysis(pg: &PlaneGraph, conv: EiConvention) -> Result<EiAnalysis, DecompositionError> {
    let faces = pg.faces()?;
    let mut e_i = Vec::new();
    let mut e_prime = Vec::new();
    let mut d_i = vec![0; pg.order()];
    for (u, v) in pg.graph().edges() {
        let (a, b) = faces.faces_of_edge(u, v).expect("edge has two darts");
        let k = is_three_face(&faces, a, conv) as usize + is_three_face(&faces, b, conv) as usize;
        match k {
            2 => {
                e_i.push((u, v));
                d_i[u] += 1;
                d_i[v] += 1;
            }
            1 => e_prime.push((u, v)),
            _ => {}
        }
    }
    let f3 = (0..faces.len()).filter(|&f| is_three_face(&faces, f, conv)).count();
    Ok(EiAnalysis {
        delta_i: d_i.iter().copied().max().unwrap_or(0),
        e_i,
        e_prime,
        d_i,
        f3,
    })
}

/// The theta graph of an edge lying on two 3-faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaEdge {
    pub edge: Edge,
    /// The two 3-faces as boundary walks.
    pub faces: [Vec<usize>; 2],
    /// The four vertices, ascending.
    pub vertices: Vec<usize>,
    /// The five edges, ascending.
    pub edges: Vec<Edge>,
}

pub fn theta_of_edge(
    pg: &PlaneGraph,
    e: Edge,
    conv: EiConvention,
) -> Result<ThetaEdge, DecompositionError> {
    let faces = pg.faces()?;
    theta_with_faces(pg, &faces, e, conv)
}

fn theta_with_faces(
    pg: &PlaneGraph,
    faces: &Faces,
    e: Edge,
    conv: EiConvention,
) -> Result<ThetaEdge, DecompositionError> {
    let e = edge(e.0, e.1);
    if !pg.graph().has_edge(e.0, e.1) {
        return Err(DecompositionError::NoSuchEdge(e));
    }
    let (a, b) = faces.faces_of_edge(e.0, e.1).expect("edge has two darts");
    if !(is_three_face(faces, a, conv) && is_three_face(faces, b, conv)) {
        return Err(DecompositionError::NotInEi(e));
    }
    let mut vertices: Vec<usize> = faces.faces[a]
        .walk()
        .into_iter()
        .chain(faces.faces[b].walk())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if vertices.len() != 4 {
        return Err(DecompositionError::DegenerateTheta(e));
    }
    vertices.sort_unstable();
    let edges: BTreeSet<Edge> = faces.faces[a].edges().into_iter().chain(faces.faces[b].edges()).collect();
    Ok(ThetaEdge {
        edge: e,
        faces: [faces.faces[a].walk(), faces.faces[b].walk()],
        vertices,
        edges: edges.into_iter().collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThetaPairClass {
    D1,
    D2,
    D3,
    Overlapping,
    Other,
}

/// Classifies the union of the theta graphs of two independent E_I edges.
pub fn classify_theta_pair(
    pg: &PlaneGraph,
    e: Edge,
    f: Edge,
    conv: EiConvention,
) -> Result<ThetaPairClass, DecompositionError> {
    let faces = pg.faces()?;
    classify_with_faces(pg, &faces, e, f, conv)
}

pub(crate) fn classify_with_faces(
    pg: &PlaneGraph,
    faces: &Faces,
    e: Edge,
    f: Edge,
    conv: EiConvention,
) -> Result<ThetaPairClass, DecompositionError> {
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return Err(DecompositionError::NotIndependent(edge(e.0, e.1), edge(f.0, f.1)));
    }
    let te = theta_with_faces(pg, faces, e, conv)?;
    let tf = theta_with_faces(pg, faces, f, conv)?;
    let shared = te.vertices.iter().filter(|v| tf.vertices.contains(v)).count();
    if shared != 2 {
        return Ok(ThetaPairClass::Overlapping);
    }
    let union: BTreeSet<Edge> = te.edges.iter().chain(&tf.edges).copied().collect();
    let (g, _) = pg.graph().edge_subgraph(&union.into_iter().collect::<Vec<_>>());
    let form = canonical_form(&g);
    for (fx, class) in [
        (Fixture::D1, ThetaPairClass::D1),
        (Fixture::D2, ThetaPairClass::D2),
        (Fixture::D3, ThetaPairClass::D3),
    ] {
        if canonical_form(fixture_plane(fx).graph()) == form {
            return Ok(class);
        }
    }
    Ok(ThetaPairClass::Other)
}

/// All pairs of independent E_I edges with their intersection size and class.
pub fn theta_pairs(
    pg: &PlaneGraph,
    conv: EiConvention,
) -> Result<Vec<(Edge, Edge, usize, ThetaPairClass)>, DecompositionError> {
    let faces = pg.faces()?;
    let ei = e_i_analysis(pg, conv)?.e_i;
    let thetas: Vec<Option<ThetaEdge>> = ei
        .iter()
        .map(|&e| theta_with_faces(pg, &faces, e, conv).ok())
        .collect();
    let mut out = Vec::new();
    for i in 0..ei.len() {
        for j in i + 1..ei.len() {
            let (e, f) = (ei[i], ei[j]);
            if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                continue;
            }
            let (Some(te), Some(tf)) = (&thetas[i], &thetas[j]) else {
                continue;
            };
            let shared = te.vertices.iter().filter(|v| tf.vertices.contains(v)).count();
            let class = classify_with_faces(pg, &faces, e, f, conv)?;
            out.push((e, f, shared, class));
        }
    }
    Ok(out)
}

/// One row of a density table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityRow {
    pub name: String,
    pub order: usize,
    pub delta: usize,
    pub rho: Rational,
}

/// CSV with columns `block,order,delta,rho`; ρ printed as `p/q`.
pub fn density_csv(rows: &[DensityRow]) -> String {
    let mut out = String::from("block,order,delta,rho\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}/{}\n",
            r.name,
            r.order,
            r.delta,
            r.rho.numer(),
            r.rho.denom()
        ));
    }
    out
}
