//! Canonical labeling by partition refinement plus individualization, with
//! pruning by automorphisms discovered at the leaves.
//!
//! The certificate of a leaf is the graph6 bit string of the graph relabeled
//! by that leaf's discrete partition; the canonical labeling is the one with
//! the largest certificate.

use crate::embedding::io::to_graph6;
use crate::graph::Graph;

/// Canonical byte string: graph6 of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Vec<u8> {
    to_graph6(&canonical_graph(g)).into_bytes()
}

/// The canonically relabeled graph.
pub fn canonical_graph(g: &Graph) -> Graph {
    g.permute(&canonical_labeling(g))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_form(a) == canonical_form(b)
}

/// `perm[v]` is the canonical label of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let adj = dense(g);
    let mut initial = vec![(0..n).collect::<Vec<_>>()];
    refine(&adj, &mut initial);
    let mut search = Search {
        adj: &adj,
        n,
        best: None,
        autos: Vec::new(),
    };
    search.descend(initial, &mut Vec::new());
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    perm
}

fn dense(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Refines an ordered partition to the coarsest equitable refinement. Cells
/// split by neighbor counts into the splitter, sub-cells ordered by count.
fn refine(adj: &[Vec<bool>], cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s].clone();
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (splitter.iter().filter(|&&w| adj[v][w]).count(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|x| x.1).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    adj: &'a [Vec<bool>],
    n: usize,
    /// Best certificate so far and the vertex order that produced it.
    best: Option<(Vec<u8>, Vec<usize>)>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> Vec<u8> {
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.adj[order[i]][order[j]] as u8);
            }
        }
        bits
    }

    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = self.certificate(&order);
            match &self.best {
                None => self.best = Some((cert, order)),
                Some((b, border)) => {
                    if cert == *b {
                        // order and border give the same graph: record the map
                        let mut gamma = vec![0; self.n];
                        for i in 0..self.n {
                            gamma[border[i]] = order[i];
                        }
                        self.autos.push(gamma);
                    } else if cert > *b {
                        self.best = Some((cert, order));
                    }
                }
            }
            return;
        }
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() && self.in_tried_orbit(v, &tried, prefix) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&w| w != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            refine(self.adj, &mut next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an already tried vertex under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn in_tried_orbit(&self, v: usize, tried: &[usize], prefix: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.autos {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            any = true;
            for x in 0..self.n {
                let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn relabeled_c5_agrees() {
        let g = cycle(5);
        let h = g.permute(&[3, 0, 4, 1, 2]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
    }

    #[test]
    fn c6_differs_from_two_triangles() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&two));
    }

    #[test]
    fn large_symmetric_graphs_finish() {
        let mut e = Vec::new();
        for i in 0..12 {
            for j in i + 1..12 {
                e.push((i, j));
            }
        }
        let k12 = Graph::from_edges(12, &e).unwrap();
        assert_eq!(canonical_graph(&k12), k12);
        let empty = Graph::empty(12);
        assert_eq!(canonical_graph(&empty), empty);
    }
}
