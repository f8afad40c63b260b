//! Isomorph-free generation by canonical vertex augmentation.
//!
//! A child `P + v` of a canonical parent `P` is kept when `v` has minimum
//! degree and deleting the minimum-degree vertex with the largest canonical
//! label gives a graph isomorphic to `P`. Every isomorphism class then has
//! exactly one parent class, so duplicates can only come from the same parent
//! and are removed per parent.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::embedding::io::to_graph6;
use crate::embedding::{canonical_form, canonical_labeling, is_planar};
use crate::error::SearchError;
use crate::graph::Graph;
use crate::patterns::find_subgraph_through;
use crate::search::SearchConfig;

/// Output filters for [`enumerate_graphs`]. Planarity and pattern freeness
/// are hereditary and are applied at every level; connectivity and the edge
/// range only to the final level.
#[derive(Debug, Clone, Default)]
pub struct Filters {
    pub connected: bool,
    pub planar: bool,
    /// Keep only graphs with no subgraph isomorphic to this one.
    pub free_of: Option<Graph>,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
}

impl Filters {
    pub fn planar() -> Self {
        Filters {
            planar: true,
            ..Filters::default()
        }
    }

    fn hereditary_ok(&self, child: &Graph, new_vertex: usize) -> bool {
        if self.planar {
            let n = child.order();
            if n >= 3 && child.size() > 3 * n - 6 {
                return false;
            }
            if !is_planar(child) {
                return false;
            }
        }
        match &self.free_of {
            Some(h) => find_subgraph_through(child, h, new_vertex).is_none(),
            None => true,
        }
    }

    fn final_ok(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && self.min_edges.is_none_or(|m| g.size() >= m)
            && self.max_edges.is_none_or(|m| g.size() <= m)
    }
}

/// Counters gathered while walking the augmentation tree.
#[derive(Debug, Default)]
pub(crate) struct Stats {
    pub enumerated: AtomicU64,
    pub pruned: AtomicU64,
}

/// Canonical children of the canonical graph `parent`.
pub(crate) fn children(parent: &Graph, filters: &Filters) -> Vec<Graph> {
    let m = parent.order();
    let parent_form = to_graph6(parent).into_bytes();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let d = mask.count_ones() as usize;
        if (0..m).any(|u| parent.degree(u) + ((mask >> u & 1) as usize) < d) {
            continue;
        }
        let nbrs: Vec<usize> = (0..m).filter(|&u| mask >> u & 1 == 1).collect();
        let child = parent.with_vertex(&nbrs).expect("new vertex has distinct neighbors");
        if !filters.hereditary_ok(&child, m) {
            continue;
        }
        let lab = canonical_labeling(&child);
        let w = (0..=m)
            .filter(|&x| child.degree(x) == d)
            .max_by_key(|&x| lab[x])
            .expect("the new vertex has minimum degree");
        if w != m && canonical_form(&child.without_vertex(w)) != parent_form {
            continue;
        }
        let canon = child.permute(&lab);
        if seen.insert(to_graph6(&canon)) {
            out.push(canon);
        }
    }
    out
}

/// Walks levels 1..=n. `prune` sees every node below the last level and cuts
/// its subtree when it returns true.
pub(crate) fn walk(
    n: usize,
    filters: &Filters,
    prune: &(dyn Fn(&Graph) -> bool + Sync),
    stats: &Stats,
) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    stats.enumerated.fetch_add(1, Ordering::Relaxed);
    for _ in 1..n {
        let next: Vec<Graph> = level
            .par_iter()
            .filter(|g| {
                let cut = prune(g);
                if cut {
                    stats.pruned.fetch_add(1, Ordering::Relaxed);
                }
                !cut
            })
            .flat_map_iter(|g| children(g, filters))
            .collect();
        stats.enumerated.fetch_add(next.len() as u64, Ordering::Relaxed);
        level = next;
    }
    level
}

/// All graphs on `n` vertices passing `filters`, one canonical representative
/// per isomorphism class, in a deterministic order.
pub fn enumerate_graphs(n: usize, filters: &Filters, cfg: &SearchConfig) -> Result<Vec<Graph>, SearchError> {
    cfg.check_ceiling(n)?;
    let stats = Stats::default();
    let level = cfg.install(|| walk(n, filters, &|_| false, &stats));
    Ok(level.into_iter().filter(|g| filters.final_ok(g)).collect())
}
