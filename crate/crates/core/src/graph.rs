//! Simple undirected graphs on dense vertex labels `0..n`.

use std::fmt;

use crate::error::GraphError;

/// An edge stored with its smaller endpoint first.
pub type Edge = (usize, usize);

/// Normalizes an unordered vertex pair so the smaller label comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph. Immutable once built; edits return new values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            size: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u.max(v), order: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(v, w[0]));
            }
        }
        Ok(Graph {
            adj,
            size: edges.len(),
        })
    }

    /// Like [`Graph::from_edges`] but silently drops duplicate edges.
    pub fn from_edges_dedup(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut list: Vec<Edge> = edges.iter().map(|&(u, v)| edge(u, v)).collect();
        list.sort_unstable();
        list.dedup();
        Self::from_edges(n, &list)
    }

    /// Builds a graph from per-vertex neighbor lists; the relation must be symmetric.
    pub fn from_adjacency(adj: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
                }
                if !adj[v].contains(&u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
                if u < v {
                    edges.push((u, v));
                } else if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
            }
        }
        Self::from_edges(n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].binary_search(&b).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.size);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut e = self.edges();
        e.push(edge(u, v));
        Self::from_edges(self.order(), &e)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let target = edge(u, v);
        let e: Vec<Edge> = self.edges().into_iter().filter(|&x| x != target).collect();
        Self::from_edges(self.order(), &e).expect("subgraph of a simple graph is simple")
    }

    /// Appends a new vertex (labeled `n`) adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Self, GraphError> {
        let n = self.order();
        let mut e = self.edges();
        e.extend(nbrs.iter().map(|&u| (u, n)));
        Self::from_edges(n + 1, &e)
    }

    /// Deletes vertex `v`; vertices above it shift down by one.
    pub fn without_vertex(&self, v: usize) -> Self {
        let keep: Vec<usize> = (0..self.order()).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut e = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    e.push((i, j));
                }
            }
        }
        Self::from_edges(vertices.len(), &e).expect("induced subgraph of a simple graph is simple")
    }

    /// Subgraph spanned by an edge set, keeping only touched vertices.
    /// Returns the compacted graph and the original label of each new vertex.
    pub fn edge_subgraph(&self, edges: &[Edge]) -> (Graph, Vec<usize>) {
        let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let e: Vec<Edge> = edges.iter().map(|&(u, v)| (index[u], index[v])).collect();
        let g = Graph::from_edges_dedup(verts.len(), &e).expect("edge subgraph is simple");
        (g, verts)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order());
        let e: Vec<Edge> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::from_edges(self.order(), &e).expect("permutation preserves simplicity")
    }

    /// Vertex-disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.order();
        let mut e = self.edges();
        e.extend(other.edges().into_iter().map(|(u, v)| (u + shift, v + shift)));
        Self::from_edges(shift + other.order(), &e).expect("disjoint union is simple")
    }

    /// Join `self + other`: disjoint union plus all cross edges.
    pub fn join(&self, other: &Graph) -> Self {
        let shift = self.order();
        let mut e = self.disjoint_union(other).edges();
        for u in 0..shift {
            for v in 0..other.order() {
                e.push((u, v + shift));
            }
        }
        Self::from_edges(shift + other.order(), &e).expect("join is simple")
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Biconnected components as edge lists (bridges form singleton blocks),
    /// together with the articulation points.
    pub fn biconnected_components(&self) -> (Vec<Vec<Edge>>, Vec<usize>) {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut blocks = Vec::new();
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut time = 0;

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
                if *idx < self.adj[v].len() {
                    let w = self.adj[v][*idx];
                    *idx += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push((v, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push((v, w));
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] >= disc[parent] {
                            if parent != root {
                                is_cut[parent] = true;
                            }
                            let mut block = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                block.push(edge(e.0, e.1));
                                if e == (parent, v) {
                                    break;
                                }
                            }
                            block.sort_unstable();
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                is_cut[root] = true;
            }
        }
        let cuts = (0..n).filter(|&v| is_cut[v]).collect();
        (blocks, cuts)
    }

    /// True when connected, has at least three vertices and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.order() < 3 || !self.is_connected() {
            return false;
        }
        let (_, cuts) = self.biconnected_components();
        cuts.is_empty()
    }

    /// Number of triangles (3-cycles).
    pub fn triangle_count(&self) -> usize {
        let mut count = 0;
        for (u, v) in self.edges() {
            count += self.adj[u]
                .iter()
                .filter(|&&w| w > v && self.has_edge(v, w))
                .count();
        }
        count
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
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
    fn rejects_loops_and_parallel_edges() {
        assert!(matches!(Graph::from_edges(2, &[(0, 0)]), Err(GraphError::SelfLoop(0))));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::ParallelEdge(..))
        ));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn size_is_half_degree_sum() {
        let g = cycle(7).with_edge(0, 3).unwrap();
        let sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        assert_eq!(sum, 2 * g.size());
        assert_eq!(g.size(), 8);
    }

    #[test]
    fn bowtie_has_one_cut_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (blocks, cuts) = g.biconnected_components();
        assert_eq!(cuts, vec![2]);
        assert_eq!(blocks.len(), 2);
        assert!(!g.is_biconnected());
        assert!(cycle(5).is_biconnected());
        assert_eq!(g.triangle_count(), 2);
    }

    #[test]
    fn path_blocks_are_bridges() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (blocks, cuts) = g.biconnected_components();
        assert_eq!(blocks.len(), 3);
        assert_eq!(cuts, vec![1, 2]);
    }

    #[test]
    fn join_and_union_counts() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let g = k2.join(&m);
        assert_eq!((g.order(), g.size()), (6, 1 + 2 + 8));
        let u = cycle(3).disjoint_union(&cycle(4));
        assert_eq!((u.order(), u.size()), (7, 7));
        assert_eq!(u.components().len(), 2);
    }
}
