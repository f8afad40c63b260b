//! Exhaustive small-order search: isomorph-free generation, exact planar
//! Turán numbers, the solid triangular-block catalog and lemma checks over
//! exhaustive corpora.

pub mod corpus;
pub mod enumerate;
pub mod tb;

use std::sync::atomic::Ordering;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::embedding::io::to_graph6;
use crate::error::SearchError;
use crate::families::bounds::{bound, Bound};
use crate::graph::Graph;
use crate::patterns::PatternSpec;

pub use corpus::{
    random_planar_graph, verify_component_density, verify_face_identity, verify_theta_pairs, DensityLemma,
    Violation,
};
pub use enumerate::{enumerate_graphs, Filters};
pub use tb::{enumerate_solid_tbs, has_solid_block_embedding, OrderCatalog, TBCatalogReport};

/// Default order ceiling for exhaustive runs.
pub const DEFAULT_CEILING: usize = 9;

/// Limits and parallelism shared by every search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub ceiling: usize,
    pub workers: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            ceiling: DEFAULT_CEILING,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

impl SearchConfig {
    pub fn check_ceiling(&self, n: usize) -> Result<(), SearchError> {
        if n > self.ceiling {
            return Err(SearchError::CeilingExceeded {
                n,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }

    /// Runs `f` on a pool with `workers` threads.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers.max(1))
            .build()
            .expect("thread pool builds")
            .install(f)
    }
}

/// The theorem formula matching a pattern, when there is one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundComparison {
    pub which: String,
    pub value: String,
    pub in_range: bool,
}

/// Exact ex_P(n, H) with every extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub pattern: String,
    pub ex: usize,
    /// graph6 of each extremal graph, canonical and sorted.
    pub witnesses: Vec<String>,
    pub enumerated: u64,
    pub pruned: u64,
    pub elapsed_ms: u64,
    pub bound: Option<BoundComparison>,
}

impl SearchReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// The report with timing removed, for comparisons between runs.
    pub fn without_timing(&self) -> SearchReport {
        SearchReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }
}

fn theorem_for(pattern: &PatternSpec) -> Option<Bound> {
    match pattern {
        PatternSpec::H4 => Some(Bound::Thm1),
        PatternSpec::H5 => Some(Bound::Thm2),
        PatternSpec::H6 => Some(Bound::Thm3),
        PatternSpec::DisjointUnion(a, b)
            if matches!(
                (a.as_ref(), b.as_ref()),
                (PatternSpec::Cycle(3), PatternSpec::Theta4) | (PatternSpec::Theta4, PatternSpec::Cycle(3))
            ) =>
        {
            Some(Bound::Thm3)
        }
        _ => None,
    }
}

/// Largest edge count that any order-`n` descendant of `g` can reach. Each
/// added vertex has minimum degree in its graph, so its degree is at most
/// 5, at most one more than the previous minimum degree, and at most the
/// number of earlier vertices.
fn completion_bound(g: &Graph, n: usize) -> usize {
    let m = g.order();
    let mut total = g.size();
    let mut last = if m == 0 { usize::MAX } else { g.min_degree() };
    for i in 1..=n - m {
        let d = 5.min(last.saturating_add(1)).min(m + i - 1);
        total += d;
        last = d;
    }
    if n >= 3 {
        total.min(3 * n - 6)
    } else {
        total
    }
}

struct Run {
    ex: usize,
    witnesses: Vec<String>,
    enumerated: u64,
    pruned: u64,
}

fn run_order(n: usize, filters: &Filters, seed: usize) -> Run {
    let stats = enumerate::Stats::default();
    let prune = |g: &Graph| completion_bound(g, n) < seed;
    let level = enumerate::walk(n, filters, &prune, &stats);
    let ex = level.iter().map(Graph::size).max().unwrap_or(0);
    let mut witnesses: Vec<String> = level.iter().filter(|g| g.size() == ex).map(to_graph6).collect();
    witnesses.sort();
    Run {
        ex,
        witnesses,
        enumerated: stats.enumerated.load(Ordering::Relaxed),
        pruned: stats.pruned.load(Ordering::Relaxed),
    }
}

/// Exact ex_P(n, H) by exhaustive generation of H-free planar graphs.
///
/// Subtrees are cut when no completion can reach the value at order n - 1,
/// which is a lower bound (add an isolated vertex). The bound is computed
/// first, so pruning does not depend on scheduling.
pub fn exact_planar_turan(n: usize, pattern: &PatternSpec, cfg: &SearchConfig) -> Result<SearchReport, SearchError> {
    cfg.check_ceiling(n)?;
    let h = pattern
        .build()
        .map_err(|_| SearchError::NoCatalog(pattern.name()))?;
    let filters = Filters {
        planar: true,
        free_of: Some(h),
        ..Filters::default()
    };
    let start = Instant::now();
    let run = cfg.install(|| {
        let mut seed = 0;
        let mut last = None;
        for m in 1..=n {
            let r = run_order(m, &filters, seed);
            seed = r.ex;
            last = Some(r);
        }
        last.unwrap_or(Run {
            ex: 0,
            witnesses: vec![to_graph6(&Graph::empty(0))],
            enumerated: 1,
            pruned: 0,
        })
    });
    let bound = theorem_for(pattern).map(|b| {
        let v = bound(n, b);
        BoundComparison {
            which: b.to_string(),
            value: v.value.to_string(),
            in_range: v.in_range,
        }
    });
    Ok(SearchReport {
        n,
        pattern: pattern.name(),
        ex: run.ex,
        witnesses: run.witnesses,
        enumerated: run.enumerated,
        pruned: run.pruned,
        elapsed_ms: start.elapsed().as_millis() as u64,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::from_graph6;

    fn cfg() -> SearchConfig {
        SearchConfig {
            ceiling: 9,
            workers: 2,
        }
    }

    #[test]
    fn theta4_on_four() {
        let r = exact_planar_turan(4, &PatternSpec::Theta4, &cfg()).unwrap();
        assert_eq!(r.ex, 4);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(r
            .witnesses
            .iter()
            .any(|w| crate::embedding::are_isomorphic(&from_graph6(w).unwrap(), &c4)));
    }

    #[test]
    fn triangle_free_on_five() {
        assert_eq!(exact_planar_turan(5, &PatternSpec::Cycle(3), &cfg()).unwrap().ex, 6);
    }

    #[test]
    fn ceiling_enforced() {
        let c = SearchConfig { ceiling: 5, workers: 1 };
        assert!(matches!(
            exact_planar_turan(6, &PatternSpec::H5, &c),
            Err(SearchError::CeilingExceeded { n: 6, ceiling: 5 })
        ));
    }

    #[test]
    fn completion_bound_is_capped() {
        assert_eq!(completion_bound(&Graph::empty(0), 6), 12);
        assert_eq!(completion_bound(&Graph::empty(1), 3), 3);
    }
}
