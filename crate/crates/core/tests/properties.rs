//! Randomized properties of canonical forms, embeddings and the matcher.

use std::collections::BTreeSet;

use proptest::prelude::*;
use proptest::sample::subsequence;

use ptl_core::embedding::{canonical_form, embed, is_planar};
use ptl_core::graph::Graph;
use ptl_core::patterns::{find_subgraph, PatternSpec};

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

fn graph_on(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let all = pairs(n);
        let k = all.len();
        subsequence(all, 0..=k).prop_map(move |e| Graph::from_edges(n, &e).unwrap())
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_on(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

/// Subgraph containment by trying every injection.
fn contains_brute(g: &Graph, h: &Graph) -> bool {
    fn rec(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.order() {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if h.neighbors(i).iter().filter(|&&j| j < i).all(|&j| g.has_edge(v, map[j])) {
                map.push(v);
                if rec(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    h.order() <= g.order() && rec(g, h, &mut Vec::new())
}

fn small_patterns() -> Vec<Graph> {
    ["C3", "C4", "Theta4", "P3", "W3", "W4", "H4"]
        .iter()
        .map(|s| s.parse::<PatternSpec>().unwrap().build().unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonical_form_is_invariant((g, perm) in graph_with_perm(8)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.permute(&perm)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn euler_and_mirror(g in graph_on(9)) {
        prop_assume!(g.is_connected() && is_planar(&g));
        let pg = embed(&g).unwrap();
        let faces = pg.faces().unwrap();
        let (v, e, f) = (g.order() as i64, g.size() as i64, faces.len() as i64);
        prop_assert_eq!(v - e + f, 2);
        let total: usize = faces.faces.iter().map(|x| x.len()).sum();
        prop_assert_eq!(total, 2 * g.size());
        let mirrored = pg.mirror().faces().unwrap();
        let lengths = |fs: &ptl_core::embedding::Faces| {
            let mut l: Vec<usize> = fs.faces.iter().map(|x| x.len()).collect();
            l.sort_unstable();
            l
        };
        prop_assert_eq!(lengths(&faces), lengths(&mirrored));
        let walks: BTreeSet<BTreeSet<usize>> =
            faces.faces.iter().map(|x| x.walk().into_iter().collect()).collect();
        let mwalks: BTreeSet<BTreeSet<usize>> =
            mirrored.faces.iter().map(|x| x.walk().into_iter().collect()).collect();
        prop_assert_eq!(walks, mwalks);
    }

    #[test]
    fn matcher_agrees_with_brute_force(g in graph_on(6)) {
        for h in small_patterns() {
            let found = find_subgraph(&g, &h);
            prop_assert_eq!(found.is_some(), contains_brute(&g, &h));
            if let Some(map) = found {
                let distinct: BTreeSet<usize> = map.iter().copied().collect();
                prop_assert_eq!(distinct.len(), h.order());
                for (a, b) in h.edges() {
                    prop_assert!(g.has_edge(map[a], map[b]));
                }
            }
        }
    }

    #[test]
    fn containment_is_monotone(g in graph_on(6), extra in any::<prop::sample::Index>()) {
        let missing: Vec<(usize, usize)> =
            pairs(g.order()).into_iter().filter(|&(u, v)| !g.has_edge(u, v)).collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[extra.index(missing.len())];
        let bigger = g.with_edge(u, v).unwrap();
        for h in small_patterns() {
            if find_subgraph(&g, &h).is_some() {
                prop_assert!(find_subgraph(&bigger, &h).is_some());
            }
        }
    }
}

#[test]
fn eleven_graphs_on_four_vertices() {
    let all = pairs(4);
    let forms: BTreeSet<Vec<u8>> = (0u32..1 << all.len())
        .map(|mask| {
            let e: Vec<(usize, usize)> = (0..all.len()).filter(|&k| mask >> k & 1 == 1).map(|k| all[k]).collect();
            canonical_form(&Graph::from_edges(4, &e).unwrap())
        })
        .collect();
    assert_eq!(forms.len(), 11);
}
