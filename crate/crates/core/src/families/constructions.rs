//! Extremal constructions: the wheel ring G_k, the B5 ring R_k and its
//! B'2 augmentations, K2 + M_t, K2 ∨ M_t and apex outerplanar graphs.

use crate::embedding::planarity::{all_plane_embeddings, embed};
use crate::embedding::{from_drawing, PlaneGraph};
use crate::error::FamilyError;
use crate::families::catalog::{block_graph, standalone_block_delta, BlockName};
use crate::graph::{Edge, Graph};
use crate::patterns::{is_free, PatternSpec};

fn invalid(family: &str, reason: &str) -> FamilyError {
    FamilyError::InvalidParameter {
        family: family.to_string(),
        reason: reason.to_string(),
    }
}

fn self_check(family: &str, reason: impl Into<String>) -> FamilyError {
    FamilyError::SelfCheck {
        family: family.to_string(),
        reason: reason.into(),
    }
}

fn embed_or_fail(family: &str, g: &Graph) -> Result<PlaneGraph, FamilyError> {
    embed(g).map_err(|w| self_check(family, format!("not planar ({:?} witness)", w.kind)))
}

/// G_k: k copies of W4 in a ring, with two apexes. Order 5k+2, size 13k.
///
/// Labels: apexes P = 0 (top) and Q = 1 (bottom); copy i has hub 2+5i and
/// rim BL, BR, TR, TL = 3+5i .. 6+5i.
pub fn wheel_ring(k: usize) -> Result<PlaneGraph, FamilyError> {
    if k < 3 {
        return Err(invalid("wheel_ring", "needs k >= 3"));
    }
    let (p, q) = (0, 1);
    let mut e: Vec<Edge> = Vec::with_capacity(13 * k);
    for i in 0..k {
        let h = 2 + 5 * i;
        let (bl, br, tr, tl) = (h + 1, h + 2, h + 3, h + 4);
        e.extend([(bl, br), (br, tr), (tr, tl), (tl, bl)]);
        e.extend([(h, bl), (h, br), (h, tr), (h, tl)]);
        e.extend([(p, tl), (p, tr), (q, bl), (q, br)]);
        let next_bl = 2 + 5 * ((i + 1) % k) + 1;
        e.push((tr, next_bl));
    }
    let g = Graph::from_edges(5 * k + 2, &e).map_err(|err| self_check("wheel_ring", err.to_string()))?;
    embed_or_fail("wheel_ring", &g)
}

/// K2 + M_{n-2}: an edge 01 joined to a matching on 2..n. For odd n the
/// last vertex is joined to the edge only.
pub fn k2_plus_matching(n: usize) -> Result<PlaneGraph, FamilyError> {
    if n < 6 {
        return Err(invalid("k2_plus_matching", "needs n >= 6"));
    }
    embed_or_fail("k2_plus_matching", &k2_matching_graph(n))
}

fn k2_matching_graph(n: usize) -> Graph {
    let mut e = vec![(0, 1)];
    for v in 2..n {
        e.extend([(0, v), (1, v)]);
    }
    for v in (2..n - 1).step_by(2) {
        e.push((v, v + 1));
    }
    Graph::from_edges(n, &e).expect("K2 + M is simple")
}

/// K2 ∨ M_{n-2} for odd n: K2 + M_{n-3} plus a vertex joined to one end of
/// each of the first two matching edges.
pub fn k2_vee_matching(n: usize) -> Result<PlaneGraph, FamilyError> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(invalid("k2_vee_matching", "needs odd n >= 7"));
    }
    let base = k2_matching_graph(n - 1);
    let g = base
        .with_vertex(&[2, 4])
        .map_err(|err| self_check("k2_vee_matching", err.to_string()))?;
    embed_or_fail("k2_vee_matching", &g)
}

/// {u} + O for odd n: apex 0 over the cycle 1..n-1 with chords from vertex 1
/// to 4, 6, ..., n-3.
pub fn apex_outerplanar(n: usize) -> Result<PlaneGraph, FamilyError> {
    if n < 7 || n.is_multiple_of(2) {
        return Err(invalid("apex_outerplanar", "needs odd n >= 7"));
    }
    embed_or_fail("apex_outerplanar", &apex_outerplanar_graph(n))
}

/// The C3-free outerplanar part O of [`apex_outerplanar`], on `n - 1` vertices.
pub fn outerplanar_part(n: usize) -> Graph {
    let m = n - 1;
    let mut e: Vec<Edge> = (0..m).map(|i| (i, (i + 1) % m)).collect();
    // cycle positions are 0-based here: v_j is j - 1
    e.extend((4..=m - 2).step_by(2).map(|j| (0, j - 1)));
    Graph::from_edges(m, &e).expect("outerplanar part is simple")
}

fn apex_outerplanar_graph(n: usize) -> Graph {
    let o = outerplanar_part(n);
    Graph::empty(1).join(&o)
}

/// R_k for even k >= 4: k copies of B5 on a row, their apexes on a k-cycle
/// and their bases on a 2k-cycle, completed by nested chords.
///
/// Labels: copy c has u_{2c+1} = 5c, u_{2c+2} = 5c+1, v_{c+1} = 5c+2 and
/// the two interior vertices 5c+3 (upper) and 5c+4 (lower).
pub fn b5_ring(k: usize) -> Result<PlaneGraph, FamilyError> {
    if k < 4 || k % 2 == 1 {
        return Err(invalid("b5_ring", "needs even k >= 4"));
    }
    let n = 5 * k;
    // 1-based indices from the construction
    let u = |j: usize| 5 * ((j - 1) / 2) + (j - 1) % 2;
    let v = |i: usize| 5 * (i - 1) + 2;
    let mut coords = vec![(0.0, 0.0); n];
    let mut e: Vec<Edge> = Vec::new();
    for c in 0..k {
        let x = 3.0 * c as f64;
        let b = 5 * c;
        coords[b] = (x, 0.0);
        coords[b + 1] = (x + 1.74, 0.0);
        coords[b + 2] = (x + 0.87, 1.5);
        coords[b + 3] = (x + 0.87, 0.9);
        coords[b + 4] = (x + 0.87, 0.38);
        for (s, t) in [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 3), (1, 3), (0, 4), (1, 4)] {
            e.push((b + s, b + t));
        }
    }
    let mut bends = Vec::new();
    let mut curve = |a: usize, b: usize, dir: (f64, f64), e: &mut Vec<Edge>| {
        e.push((a, b));
        bends.push(((a, b), dir));
        bends.push(((b, a), dir));
    };
    let up = (0.0, 1.0);
    let down = (0.0, -1.0);
    for i in 1..k {
        e.push((v(i), v(i + 1)));
    }
    curve(v(k), v(1), up, &mut e);
    for j in 1..2 * k {
        if j % 2 == 0 {
            e.push((u(j), u(j + 1)));
        }
    }
    curve(u(2 * k), u(1), down, &mut e);
    for i in 2..k / 2 {
        curve(v(i), v(k + 1 - i), up, &mut e);
    }
    for i in 2..k {
        curve(u(i), u(2 * k + 1 - i), down, &mut e);
    }
    from_drawing(n, &e, &coords, &bends, &[v(k), v(1), u(1), u(2 * k)])
        .map_err(|err| self_check("b5_ring", err.to_string()))
}

/// B'2 embedded with its outer 4-cycle 0 2 1 5 and all inner faces triangles.
fn b2prime_plane() -> PlaneGraph {
    let g = block_graph(BlockName::Prime(2)).expect("B'2 is a fixed block");
    all_plane_embeddings(&g)
        .into_iter()
        .filter_map(|pg| pg.with_outer_face(&[0, 2, 1, 5]).ok())
        .find(|pg| standalone_block_delta(pg) == Some(6))
        .expect("B'2 has an embedding with outer face 0 2 1 5")
}

/// The first inner 4-face of `pg`, as a boundary walk.
pub fn first_inner_four_face(pg: &PlaneGraph) -> Option<Vec<usize>> {
    let faces = pg.faces().ok()?;
    faces
        .faces
        .iter()
        .find(|f| !f.is_outer && f.len() == 4)
        .map(|f| f.walk())
}

fn insert_after(list: &mut Vec<usize>, after: usize, x: usize) {
    let i = list.iter().position(|&w| w == after).expect("neighbor in rotation");
    list.insert(i + 1, x);
}

/// Places a copy of B'2 inside the 4-face `face` of `pg` and matches the
/// face boundary to the outer cycle of the copy. Adds 6 vertices and 15
/// edges; the result is checked for planarity, H5-freeness and face lengths.
pub fn augment_with_b2prime(pg: &PlaneGraph, face: &[usize]) -> Result<PlaneGraph, FamilyError> {
    let faces = pg.faces().map_err(|err| self_check("augment", err.to_string()))?;
    let host_face = faces
        .faces
        .iter()
        .find(|f| f.len() == 4 && same_cycle(&f.walk(), face))
        .ok_or(FamilyError::NotFourFace)?;
    let f = host_face.walk();
    let n = pg.order();
    let h5 = PatternSpec::H5.build().expect("H5 builds");
    let outer_walk = faces.outer_face().walk();
    for copy in [b2prime_plane(), b2prime_plane().mirror()] {
        let cf = copy.faces().expect("B'2 is connected");
        let c: Vec<usize> = cf.outer_face().walk().iter().map(|&x| x + n).collect();
        for shift in 0..4 {
            for reflect in [false, true] {
                let sigma = |j: usize| if reflect { (4 + shift - j) % 4 } else { (shift + j) % 4 };
                let mut rot: Vec<Vec<usize>> = pg.rotation().to_vec();
                rot.extend(copy.rotation().iter().map(|l| l.iter().map(|&x| x + n).collect::<Vec<_>>()));
                for j in 0..4 {
                    let (fp, fj) = (f[(j + 3) % 4], f[j]);
                    let ci = sigma(j);
                    let (cp, cj) = (c[(ci + 3) % 4], c[ci]);
                    insert_after(&mut rot[fj], fp, cj);
                    insert_after(&mut rot[cj], cp, fj);
                }
                let mut adj = rot.clone();
                for l in &mut adj {
                    l.sort_unstable();
                }
                let Ok(g) = Graph::from_adjacency(adj) else { continue };
                let Ok(out) = PlaneGraph::new(g, rot, Some(&outer_walk)) else { continue };
                let Ok(of) = out.faces() else { continue };
                if of.faces.iter().any(|x| x.len() != 3 && x.len() != 4) {
                    continue;
                }
                if !is_free(out.graph(), &h5) {
                    continue;
                }
                return Ok(out);
            }
        }
    }
    Err(self_check("augment", "no alignment of B'2 keeps the graph H5-free with 3- and 4-faces"))
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let rev: Vec<usize> = b.iter().rev().copied().collect();
    (0..n).any(|s| (0..n).all(|i| a[(s + i) % n] == b[i]) || (0..n).all(|i| a[(s + i) % n] == rev[i]))
}

/// H_y on 10x + 6y vertices: R_{2x} followed by `y` augmentations, each at
/// the first inner 4-face.
pub fn h_family(x: usize, y: usize) -> Result<PlaneGraph, FamilyError> {
    let mut pg = b5_ring(2 * x)?;
    for _ in 0..y {
        let face = first_inner_four_face(&pg).ok_or(FamilyError::NotFourFace)?;
        pg = augment_with_b2prime(&pg, &face)?;
    }
    Ok(pg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::contains_subgraph;

    #[test]
    fn wheel_ring_counts() {
        let pg = wheel_ring(5).unwrap();
        assert_eq!((pg.order(), pg.size()), (27, 65));
        let f = pg.faces().unwrap();
        assert_eq!(f.count_of_length(3), 30);
        assert_eq!(f.count_of_length(4), 10);
    }

    #[test]
    fn matching_families_sizes() {
        assert_eq!(k2_plus_matching(10).unwrap().size(), 21);
        assert_eq!(k2_plus_matching(12).unwrap().size(), 26);
        assert_eq!(k2_vee_matching(11).unwrap().size(), 23);
        assert_eq!(k2_vee_matching(13).unwrap().size(), 28);
        assert_eq!(outerplanar_part(11).size(), 13);
        assert_eq!(outerplanar_part(7).size(), 7);
        assert_eq!(apex_outerplanar(11).unwrap().size(), 23);
        assert_eq!(apex_outerplanar(7).unwrap().size(), 13);
        let c3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!contains_subgraph(&outerplanar_part(15), &c3));
    }

    #[test]
    fn b5_ring_counts() {
        let pg = b5_ring(4).unwrap();
        assert_eq!((pg.order(), pg.size()), (20, 46));
        let pg = b5_ring(6).unwrap();
        assert_eq!((pg.order(), pg.size()), (30, 71));
    }

    #[test]
    fn one_augmentation() {
        let pg = h_family(2, 1).unwrap();
        assert_eq!((pg.order(), pg.size()), (26, 61));
    }

    #[test]
    fn parameter_errors() {
        assert!(wheel_ring(2).is_err());
        assert!(b5_ring(5).is_err());
        assert!(k2_vee_matching(10).is_err());
        assert!(apex_outerplanar(8).is_err());
        assert!(k2_plus_matching(5).is_err());
        let pg = b5_ring(4).unwrap();
        assert!(matches!(augment_with_b2prime(&pg, &[0, 1, 2]), Err(FamilyError::NotFourFace)));
    }
}
