//! Property checks over corpora of plane graphs: component densities, theta
//! pairs and the 3-face counting identity. Every plane embedding of every
//! connected component is examined.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::decomposition::{theta_of_edge, theta_pairs, triangular_components, EiConvention, Rational, ThetaPairClass};
use crate::embedding::io::to_graph6;
use crate::embedding::planarity::all_plane_embeddings;
use crate::embedding::{canonical_form, is_planar, PlaneGraph};
use crate::error::{DecompositionError, SearchError};
use crate::families::bounds::{bound, Bound};
use crate::families::catalog::{block_graph, BlockName};
use crate::families::verify::check_face_identity;
use crate::graph::{Edge, Graph};
use crate::patterns::{is_free, PatternSpec};

/// A counterexample found in a corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Position in the corpus.
    pub index: usize,
    /// graph6 of the corpus member.
    pub graph: String,
    pub detail: String,
}

/// Which density statement a corpus is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityLemma {
    /// H4-free: a component D of order at least 7, other than the antiprisms
    /// on 8 and 10 vertices, has ρ(D) <= (6|D| - 12) / (5|D|).
    Lemma2,
    /// H5-free: every component has ρ <= 1, with equality only for copies
    /// of B5 and B'2.
    Lemma4,
}

impl DensityLemma {
    pub fn for_pattern(p: &PatternSpec) -> Result<Self, SearchError> {
        match p {
            PatternSpec::H4 => Ok(DensityLemma::Lemma2),
            PatternSpec::H5 => Ok(DensityLemma::Lemma4),
            _ => Err(SearchError::NoCatalog(p.name())),
        }
    }
}

/// Every plane embedding of every connected component with an edge.
fn component_embeddings(g: &Graph) -> Vec<Vec<PlaneGraph>> {
    g.components()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .map(|c| all_plane_embeddings(&g.induced(&c)))
        .collect()
}

fn dec_err(e: DecompositionError) -> SearchError {
    match e {
        DecompositionError::Embedding(e) => SearchError::Embedding(e),
        other => SearchError::NoCatalog(other.to_string()),
    }
}

fn check_free(corpus: &[Graph], pattern: &PatternSpec) -> Result<(), SearchError> {
    let h = pattern.build().map_err(|_| SearchError::NoCatalog(pattern.name()))?;
    for (index, g) in corpus.iter().enumerate() {
        if !is_free(g, &h) || !is_planar(g) {
            return Err(SearchError::NotPatternFree {
                index,
                pattern: pattern.name(),
            });
        }
    }
    Ok(())
}

/// Checks the density lemma for `pattern` on every component of every
/// embedding of every corpus member. Components are solidified first.
pub fn verify_component_density(corpus: &[Graph], pattern: &PatternSpec) -> Result<Vec<Violation>, SearchError> {
    let lemma = DensityLemma::for_pattern(pattern)?;
    check_free(corpus, pattern)?;
    let excluded: Vec<Vec<u8>> = [8, 10]
        .iter()
        .map(|&n| canonical_form(&block_graph(BlockName::B15(n)).expect("antiprism")))
        .collect();
    let allowed: Vec<Vec<u8>> = [BlockName::B(5), BlockName::Prime(2)]
        .iter()
        .map(|&b| canonical_form(&block_graph(b).expect("fixed block")))
        .collect();
    let mut out = Vec::new();
    for (index, g) in corpus.iter().enumerate() {
        for pg in component_embeddings(g).into_iter().flatten() {
            for tc in triangular_components(&pg).map_err(dec_err)? {
                let s = tc.solidified();
                let d = s.order();
                let rho = s.density();
                let form = canonical_form(&s.graph());
                let bad = match lemma {
                    DensityLemma::Lemma2 => {
                        let b = bound(d, Bound::Lemma2(d));
                        (b.in_range && !excluded.contains(&form) && rho > b.value)
                            .then(|| format!("component {:?} has ρ = {rho} > {}", s.vertices, b.value))
                    }
                    DensityLemma::Lemma4 => {
                        let one = Rational::from_integer(1);
                        if rho > one {
                            Some(format!("component {:?} has ρ = {rho} > 1", s.vertices))
                        } else if rho == one && !allowed.contains(&form) {
                            Some(format!("component {:?} has ρ = 1 but is neither B5 nor B'2", s.vertices))
                        } else {
                            None
                        }
                    }
                };
                if let Some(detail) = bad {
                    out.push(Violation {
                        index,
                        graph: to_graph6(g),
                        detail,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// On C3 ∪ Θ4-free graphs: every two independent E_I edges have theta graphs
/// sharing at least two vertices, and when they share exactly two and one
/// edge has no endpoint on the other's theta graph, the union is one of D1,
/// D2, D3.
pub fn verify_theta_pairs(corpus: &[Graph], conv: EiConvention) -> Result<Vec<Violation>, SearchError> {
    check_free(corpus, &PatternSpec::H6)?;
    let mut out = Vec::new();
    for (index, g) in corpus.iter().enumerate() {
        let mut push = |detail: String| {
            out.push(Violation {
                index,
                graph: to_graph6(g),
                detail,
            })
        };
        let per_component = component_embeddings(g);
        let with_theta = per_component
            .iter()
            .filter(|embs| embs.iter().any(|pg| has_theta(pg, conv)))
            .count();
        if with_theta >= 2 {
            push("two components carry E_I edges; their theta graphs are disjoint".into());
        }
        for pg in per_component.into_iter().flatten() {
            for (e, f, shared, class) in theta_pairs(&pg, conv).map_err(dec_err)? {
                if shared < 2 {
                    push(format!("theta graphs of {e:?} and {f:?} share {shared} vertices"));
                } else if shared == 2
                    && detached(&pg, e, f, conv)
                    && !matches!(class, ThetaPairClass::D1 | ThetaPairClass::D2 | ThetaPairClass::D3)
                {
                    push(format!("theta graphs of {e:?} and {f:?} form {class:?}"));
                }
            }
        }
    }
    Ok(out)
}

/// Whether one of `e`, `f` has no endpoint on the theta graph of the other.
fn detached(pg: &PlaneGraph, e: Edge, f: Edge, conv: EiConvention) -> bool {
    let off = |a: Edge, b: Edge| {
        theta_of_edge(pg, a, conv).is_ok_and(|t| !t.vertices.contains(&b.0) && !t.vertices.contains(&b.1))
    };
    off(e, f) || off(f, e)
}

/// Whether some E_I edge of `pg` has a (four-vertex) theta graph.
fn has_theta(pg: &PlaneGraph, conv: EiConvention) -> bool {
    crate::decomposition::e_i_analysis(pg, conv)
        .is_ok_and(|a| a.e_i.iter().any(|&e| theta_of_edge(pg, e, conv).is_ok()))
}

/// Checks 3 f3 = |E'| + 2 |E_I| under both conventions on every embedding.
pub fn verify_face_identity(corpus: &[Graph]) -> Result<Vec<Violation>, SearchError> {
    let mut out = Vec::new();
    for (index, g) in corpus.iter().enumerate() {
        for pg in component_embeddings(g).into_iter().flatten() {
            for conv in [EiConvention::IncludeOuter, EiConvention::InnerOnly] {
                let (f3, ep, ei, ok) = check_face_identity(&pg, conv).map_err(dec_err)?;
                if !ok {
                    out.push(Violation {
                        index,
                        graph: to_graph6(g),
                        detail: format!("{conv:?}: 3·{f3} != {ep} + 2·{ei}"),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A random planar graph: edges are tried in random order up to a random
/// target size and kept when the graph stays planar.
pub fn random_planar_graph<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    pairs.shuffle(rng);
    let cap = if n >= 3 { 3 * n - 6 } else { n.saturating_sub(1) };
    let target = rng.gen_range(0..=cap);
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.size() >= target {
            break;
        }
        let h = g.with_edge(u, v).expect("pairs are distinct");
        if is_planar(&h) {
            g = h;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::constructions::b5_ring;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_graphs_are_planar() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_planar_graph(10, &mut rng);
            assert!(is_planar(&g));
        }
    }

    #[test]
    fn ring_density() {
        let g = b5_ring(4).unwrap().graph().clone();
        let v = verify_component_density(std::slice::from_ref(&g), &PatternSpec::H5).unwrap();
        assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn rejects_non_free_member() {
        let k4 = block_graph(BlockName::B(2)).unwrap();
        let t = PatternSpec::Theta4;
        assert!(DensityLemma::for_pattern(&t).is_err());
        let w5 = block_graph(BlockName::Wheel(5)).unwrap();
        let with_h5 = w5.disjoint_union(&k4);
        assert!(matches!(
            verify_component_density(&[with_h5], &PatternSpec::H4),
            Err(SearchError::NotPatternFree { .. })
        ));
    }
}
