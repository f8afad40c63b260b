//! Planarity testing and embedding by path addition (Demoucron, Malgrange and
//! Pertuiset), run separately on every biconnected block. The same routine can
//! branch over every admissible face to list all embeddings of a block.

use std::collections::{HashMap, HashSet};

use crate::embedding::plane::{select_outer, trace_orbits, PlaneGraph};
use crate::graph::{edge, Edge, Graph};

/// Which Kuratowski graph a witness subdivides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

/// An edge-minimal non-planar subgraph: a subdivision of K5 or K3,3.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

/// Embeds `g` in the plane, or returns a Kuratowski subgraph.
pub fn embed(g: &Graph) -> Result<PlaneGraph, Box<KuratowskiWitness>> {
    match rotation_system(g) {
        Some(rot) => {
            let pg = PlaneGraph::new(g.clone(), rot, None)
                .expect("path-addition embedding is a valid plane rotation system");
            Ok(pg)
        }
        None => Err(Box::new(kuratowski_witness(g))),
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    rotation_system(g).is_some()
}

/// A planar rotation system for `g`, or `None` when `g` is not planar.
pub fn rotation_system(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return None;
    }
    let (blocks, _) = g.biconnected_components();
    let mut rotation = vec![Vec::new(); n];
    for block in &blocks {
        let local = if block.len() == 1 {
            let (u, v) = block[0];
            HashMap::from([(u, vec![v]), (v, vec![u])])
        } else {
            let mut out = None;
            embed_block(block, &mut |r| {
                out = Some(r.clone());
                false
            });
            out?
        };
        let mut keys: Vec<_> = local.keys().copied().collect();
        keys.sort_unstable();
        for v in keys {
            rotation[v].extend_from_slice(&local[&v]);
        }
    }
    Some(rotation)
}

/// Every distinct plane embedding of a 2-connected graph, as plane graphs with
/// the default outer face. Mirror images are both reported.
pub fn all_block_embeddings(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let edges = g.edges();
    if edges.len() < 3 {
        return Vec::new();
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    embed_block(&edges, &mut |r| {
        let mut rot = vec![Vec::new(); g.order()];
        for (&v, list) in r {
            rot[v] = normalize_cycle(list);
        }
        if seen.insert(rot.clone()) {
            out.push(rot);
        }
        true
    });
    out.sort();
    out
}

fn normalize_cycle(list: &[usize]) -> Vec<usize> {
    let i = (0..list.len()).min_by_key(|&i| list[i]).unwrap_or(0);
    list[i..].iter().chain(&list[..i]).copied().collect()
}

/// All plane embeddings (every rotation system and every outer face) of a
/// connected graph, one `PlaneGraph` per (rotation system, face). Graphs with
/// cut vertices get every interleaving of their block rotations that has
/// genus zero.
pub fn all_plane_embeddings(g: &Graph) -> Vec<PlaneGraph> {
    if g.order() == 0 || !g.is_connected() {
        return Vec::new();
    }
    let rotations = if g.is_biconnected() && g.size() >= 3 {
        all_block_embeddings(g)
    } else {
        all_connected_rotations(g)
    };
    let mut out = Vec::new();
    for rot in rotations {
        let orbits = trace_orbits(&rot);
        if orbits.is_empty() {
            out.push(PlaneGraph::new(g.clone(), rot, None).expect("single vertex"));
            continue;
        }
        for o in &orbits {
            let pg = PlaneGraph::new(g.clone(), rot.clone(), None)
                .and_then(|p| p.with_outer_dart(o[0]))
                .expect("rotation has genus zero");
            out.push(pg);
        }
    }
    out
}

type LocalRotation = HashMap<usize, Vec<usize>>;

/// Rotation systems of genus zero for a connected graph with cut vertices.
fn all_connected_rotations(g: &Graph) -> Vec<Vec<Vec<usize>>> {
    let n = g.order();
    if g.size() == 0 {
        return vec![vec![Vec::new(); n]];
    }
    let (blocks, _) = g.biconnected_components();
    let options: Vec<Vec<LocalRotation>> = blocks
        .iter()
        .map(|b| {
            if b.len() == 1 {
                let (u, v) = b[0];
                return vec![HashMap::from([(u, vec![v]), (v, vec![u])])];
            }
            let (sub, labels) = g.edge_subgraph(b);
            all_block_embeddings(&sub)
                .into_iter()
                .map(|rot| {
                    rot.iter()
                        .enumerate()
                        .filter(|(_, l)| !l.is_empty())
                        .map(|(i, l)| (labels[i], l.iter().map(|&x| labels[x]).collect()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut choice = vec![0; blocks.len()];
    loop {
        let mut per_vertex: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
        for (b, &c) in choice.iter().enumerate() {
            for (&v, l) in &options[b][c] {
                per_vertex[v].push(l.clone());
            }
        }
        let merged: Vec<Vec<Vec<usize>>> = per_vertex.iter().map(|seqs| cyclic_merges(seqs)).collect();
        let mut pick = vec![0; n];
        loop {
            let rot: Vec<Vec<usize>> = (0..n).map(|v| merged[v][pick[v]].clone()).collect();
            if PlaneGraph::new(g.clone(), rot.clone(), None).is_ok() {
                out.push(rot);
            }
            if !advance(&mut pick, |v| merged[v].len()) {
                break;
            }
        }
        if !advance(&mut choice, |b| options[b].len()) {
            break;
        }
    }
    out.sort();
    out
}

/// Odometer step over mixed radices; false after the last combination.
fn advance(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in 0..digits.len() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// Every cyclic order of the union of `seqs` whose restriction to each
/// sequence is a rotation of it, written starting from `seqs[0][0]`.
fn cyclic_merges(seqs: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let Some(first) = seqs.first() else {
        return vec![Vec::new()];
    };
    let mut acc = vec![first.clone()];
    for s in &seqs[1..] {
        let mut next = Vec::new();
        for base in &acc {
            for r in 0..s.len() {
                let rotated: Vec<usize> = s[r..].iter().chain(&s[..r]).copied().collect();
                interleave(base, &rotated, &mut next);
            }
        }
        acc = next;
    }
    acc
}

/// Inserts `s` into `base` after position 0, keeping both orders.
fn interleave(base: &[usize], s: &[usize], out: &mut Vec<Vec<usize>>) {
    fn rec(base: &[usize], s: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if s.is_empty() {
            cur.extend_from_slice(base);
            out.push(cur.clone());
            cur.truncate(cur.len() - base.len());
            return;
        }
        if base.is_empty() {
            cur.extend_from_slice(s);
            out.push(cur.clone());
            cur.truncate(cur.len() - s.len());
            return;
        }
        cur.push(base[0]);
        rec(&base[1..], s, cur, out);
        cur.pop();
        cur.push(s[0]);
        rec(base, &s[1..], cur, out);
        cur.pop();
    }
    let mut cur = vec![base[0]];
    rec(&base[1..], s, &mut cur, out);
}

#[derive(Clone)]
struct State {
    embedded_v: HashSet<usize>,
    embedded_e: HashSet<Edge>,
    faces: Vec<Vec<usize>>,
}

/// Runs path addition on one biconnected block (at least 3 edges). The
/// callback receives each complete rotation map and returns whether to keep
/// searching. Returns `false` when the block is not planar.
fn embed_block(
    block: &[Edge],
    visit: &mut dyn FnMut(&LocalRotation) -> bool,
) -> bool {
    let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for l in adj.values_mut() {
        l.sort_unstable();
    }
    let cycle = find_cycle(&adj);
    let mut state = State {
        embedded_v: cycle.iter().copied().collect(),
        embedded_e: HashSet::new(),
        faces: vec![cycle.clone(), cycle.iter().rev().copied().collect()],
    };
    for i in 0..cycle.len() {
        state
            .embedded_e
            .insert(edge(cycle[i], cycle[(i + 1) % cycle.len()]));
    }
    let mut found = false;
    recurse(&adj, block.len(), state, visit, &mut found);
    found
}

/// Returns whether to continue the search.
fn recurse(
    adj: &HashMap<usize, Vec<usize>>,
    total: usize,
    state: State,
    visit: &mut dyn FnMut(&LocalRotation) -> bool,
    found: &mut bool,
) -> bool {
    if state.embedded_e.len() == total {
        *found = true;
        return visit(&rotation_from_faces(&state.faces));
    }
    let frags = fragments(adj, &state);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for (i, fr) in frags.iter().enumerate() {
        let adm: Vec<usize> = state
            .faces
            .iter()
            .enumerate()
            .filter(|(_, f)| fr.attachments.iter().all(|a| f.contains(a)))
            .map(|(j, _)| j)
            .collect();
        if adm.is_empty() {
            return true;
        }
        if best.as_ref().is_none_or(|(_, b)| adm.len() < b.len()) {
            best = Some((i, adm));
        }
    }
    let (fi, adm) = best.expect("an unembedded edge leaves at least one fragment");
    let path = fragment_path(adj, &state, &frags[fi]);
    for fidx in adm {
        let mut next = state.clone();
        insert_path(&mut next, fidx, &path);
        if !recurse(adj, total, next, visit, found) {
            return false;
        }
    }
    true
}

struct Fragment {
    /// Interior vertices (empty for a single chord edge).
    interior: Vec<usize>,
    attachments: Vec<usize>,
    chord: Option<Edge>,
}

fn fragments(adj: &HashMap<usize, Vec<usize>>, st: &State) -> Vec<Fragment> {
    let mut out = Vec::new();
    let mut verts: Vec<usize> = adj.keys().copied().collect();
    verts.sort_unstable();
    for &u in &verts {
        if !st.embedded_v.contains(&u) {
            continue;
        }
        for &v in &adj[&u] {
            if u < v && st.embedded_v.contains(&v) && !st.embedded_e.contains(&edge(u, v)) {
                out.push(Fragment {
                    interior: Vec::new(),
                    attachments: vec![u, v],
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen = HashSet::new();
    for &s in &verts {
        if st.embedded_v.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut comp = vec![s];
        let mut att = Vec::new();
        seen.insert(s);
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &adj[&x] {
                if st.embedded_v.contains(&y) {
                    att.push(y);
                } else if seen.insert(y) {
                    comp.push(y);
                }
            }
        }
        att.sort_unstable();
        att.dedup();
        comp.sort_unstable();
        out.push(Fragment {
            interior: comp,
            attachments: att,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &HashMap<usize, Vec<usize>>, st: &State, fr: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = fr.chord {
        return vec![u, v];
    }
    let inside: HashSet<usize> = fr.interior.iter().copied().collect();
    let a = fr.attachments[0];
    let start = *adj[&a]
        .iter()
        .find(|x| inside.contains(x))
        .expect("attachment touches its fragment");
    let mut parent: HashMap<usize, usize> = HashMap::from([(start, a)]);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[&x] {
            if st.embedded_v.contains(&y) {
                if y != a {
                    let mut path = vec![y, x];
                    let mut cur = x;
                    while cur != start {
                        cur = parent[&cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if inside.contains(&y) && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

fn insert_path(st: &mut State, fidx: usize, path: &[usize]) {
    let face = st.faces[fidx].clone();
    let a = path[0];
    let b = *path.last().expect("path has two ends");
    let i = face.iter().position(|&x| x == a).expect("a on face");
    let j = face.iter().position(|&x| x == b).expect("b on face");
    let interior = &path[1..path.len() - 1];
    let mut f1 = cyclic_run(&face, i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = cyclic_run(&face, j, i);
    f2.extend(interior.iter());
    st.faces[fidx] = f1;
    st.faces.push(f2);
    for w in path.windows(2) {
        st.embedded_e.insert(edge(w[0], w[1]));
    }
    st.embedded_v.extend(interior.iter().copied());
}

/// `face[from], face[from+1], ..., face[to]`, wrapping around.
fn cyclic_run(face: &[usize], from: usize, to: usize) -> Vec<usize> {
    let k = face.len();
    let len = (to + k - from) % k + 1;
    (0..len).map(|t| face[(from + t) % k]).collect()
}

/// Rebuilds rotations from oriented facial cycles: a corner `a, v, c` on a face
/// means `c` follows `a` in the rotation at `v`.
fn rotation_from_faces(faces: &[Vec<usize>]) -> HashMap<usize, Vec<usize>> {
    let mut succ: HashMap<usize, HashMap<usize, usize>> = HashMap::new();
    for f in faces {
        let k = f.len();
        for t in 0..k {
            let a = f[(t + k - 1) % k];
            let v = f[t];
            let c = f[(t + 1) % k];
            succ.entry(v).or_default().insert(a, c);
        }
    }
    let mut out = HashMap::new();
    for (v, s) in succ {
        let first = *s.keys().min().expect("vertex has neighbors");
        let mut rot = vec![first];
        let mut cur = s[&first];
        while cur != first {
            rot.push(cur);
            cur = s[&cur];
        }
        out.insert(v, rot);
    }
    out
}

fn find_cycle(adj: &HashMap<usize, Vec<usize>>) -> Vec<usize> {
    let root = *adj.keys().min().expect("nonempty block");
    let mut parent: HashMap<usize, usize> = HashMap::from([(root, usize::MAX)]);
    let mut depth: HashMap<usize, usize> = HashMap::from([(root, 0)]);
    let mut stack = vec![(root, 0usize)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx < adj[&v].len() {
            let w = adj[&v][*idx];
            *idx += 1;
            if w == parent[&v] {
                continue;
            }
            if let Some(&dw) = depth.get(&w) {
                if dw < depth[&v] {
                    let mut cyc = vec![v];
                    let mut cur = v;
                    while cur != w {
                        cur = parent[&cur];
                        cyc.push(cur);
                    }
                    return cyc;
                }
                continue;
            }
            parent.insert(w, v);
            depth.insert(w, depth[&v] + 1);
            stack.push((w, 0));
        } else {
            stack.pop();
        }
    }
    unreachable!("biconnected block with three or more edges has a cycle")
}

/// Deletes edges greedily while the graph stays non-planar; what remains is a
/// subdivision of K5 or K3,3.
pub fn kuratowski_witness(g: &Graph) -> KuratowskiWitness {
    let mut h = g.clone();
    for (u, v) in g.edges() {
        let t = h.without_edge(u, v);
        if rotation_system(&t).is_none() {
            h = t;
        }
    }
    let branch: Vec<usize> = (0..h.order()).filter(|&v| h.degree(v) >= 3).collect();
    let kind = if branch.len() == 5 && branch.iter().all(|&v| h.degree(v) == 4) {
        KuratowskiKind::K5
    } else {
        debug_assert!(branch.len() == 6 && branch.iter().all(|&v| h.degree(v) == 3));
        KuratowskiKind::K33
    };
    KuratowskiWitness {
        kind,
        branch_vertices: branch,
        edges: h.edges(),
    }
}

/// Outer-face choice used by `embed`, exposed for generators that build
/// rotation systems by hand.
pub fn default_outer(rotation: &[Vec<usize>]) -> Option<(usize, usize)> {
    select_outer(&trace_orbits(rotation))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    /// Genus-zero rotation systems by trying every cyclic order at every vertex.
    fn brute_force_rotations(g: &Graph) -> usize {
        fn perms(rest: &[usize]) -> Vec<Vec<usize>> {
            if rest.is_empty() {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for i in 0..rest.len() {
                let mut r = rest.to_vec();
                let x = r.remove(i);
                for mut p in perms(&r) {
                    p.insert(0, x);
                    out.push(p);
                }
            }
            out
        }
        let cyclic: Vec<Vec<Vec<usize>>> = (0..g.order())
            .map(|v| {
                let nb = g.neighbors(v);
                if nb.is_empty() {
                    return vec![Vec::new()];
                }
                perms(&nb[1..])
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, nb[0]);
                        p
                    })
                    .collect()
            })
            .collect();
        let mut pick = vec![0; g.order()];
        let mut count = 0;
        loop {
            let rot: Vec<Vec<usize>> = (0..g.order()).map(|v| cyclic[v][pick[v]].clone()).collect();
            if PlaneGraph::new(g.clone(), rot, None).is_ok() {
                count += 1;
            }
            if !advance(&mut pick, |v| cyclic[v].len()) {
                return count;
            }
        }
    }

    fn rotation_count(g: &Graph) -> usize {
        let mut rots: Vec<Vec<Vec<usize>>> = all_plane_embeddings(g)
            .into_iter()
            .map(|pg| pg.rotation().iter().map(|l| normalize_cycle(l)).collect())
            .collect();
        rots.sort();
        rots.dedup();
        rots.len()
    }

    #[test]
    fn embeddings_with_cut_vertices_match_brute_force() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        assert_eq!(rotation_count(&bowtie), 4);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(rotation_count(&star), 6);
        let k4_pendant = complete(4).disjoint_union(&Graph::empty(1)).with_edge(0, 4).unwrap();
        let two_k4 = Graph::from_edges(
            7,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5), (0, 6), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        let path_tri = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        for g in [bowtie, star, k4_pendant, two_k4, path_tri] {
            assert_eq!(rotation_count(&g), brute_force_rotations(&g));
        }
    }

    fn k33() -> Graph {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                e.push((i, j));
            }
        }
        Graph::from_edges(6, &e).unwrap()
    }

    #[test]
    fn k4_embeds_with_four_faces() {
        let pg = embed(&complete(4)).unwrap();
        assert_eq!(pg.faces().unwrap().len(), 4);
    }

    #[test]
    fn k5_has_k5_witness() {
        let w = embed(&complete(5)).unwrap_err();
        assert_eq!(w.kind, KuratowskiKind::K5);
        assert_eq!(w.edges.len(), 10);
    }

    #[test]
    fn k33_has_k33_witness() {
        let w = embed(&k33()).unwrap_err();
        assert_eq!(w.kind, KuratowskiKind::K33);
    }

    #[test]
    fn petersen_is_not_planar() {
        let outer = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let inner = [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)];
        let spokes = [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
        let e: Vec<_> = outer.iter().chain(&inner).chain(&spokes).copied().collect();
        let g = Graph::from_edges(10, &e).unwrap();
        assert!(!is_planar(&g));
        assert_eq!(kuratowski_witness(&g).kind, KuratowskiKind::K33);
    }

    #[test]
    fn octahedron_is_planar() {
        let mut e = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if j != i + 3 {
                    e.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(6, &e).unwrap();
        let pg = embed(&g).unwrap();
        assert_eq!(pg.faces().unwrap().count_of_length(3), 8);
    }

    #[test]
    fn cut_vertices_and_bridges() {
        // two triangles joined by a path of length 3
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)],
        )
        .unwrap();
        let pg = embed(&g).unwrap();
        let f = pg.faces().unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn k4_has_one_embedding_up_to_mirror() {
        let rots = all_block_embeddings(&complete(4));
        assert_eq!(rots.len(), 2);
    }

    #[test]
    fn theta4_plane_embeddings() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        // one rotation system up to mirror, three faces each
        let all = all_plane_embeddings(&g);
        assert_eq!(all.len(), 6);
    }
}
