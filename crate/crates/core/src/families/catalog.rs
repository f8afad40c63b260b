//! The named solid triangular blocks: B1..B15 for H4, B'1..B'3, wheels and
//! fans for H5.

use std::fmt;
use std::str::FromStr;

use crate::decomposition::{triangular_blocks, DensityRow, Rational};
use crate::embedding::planarity::all_plane_embeddings;
use crate::embedding::PlaneGraph;
use crate::error::FamilyError;
use crate::graph::{Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BlockName {
    /// B1..B10.
    B(u8),
    B11(usize),
    B12(usize),
    B13(usize),
    B14(usize),
    B15(usize),
    /// B'1..B'3.
    Prime(u8),
    Wheel(usize),
    Fan(usize),
}

impl fmt::Display for BlockName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockName::B(i) => write!(f, "B{i}"),
            BlockName::B11(n) => write!(f, "B11({n})"),
            BlockName::B12(n) => write!(f, "B12({n})"),
            BlockName::B13(n) => write!(f, "B13({n})"),
            BlockName::B14(n) => write!(f, "B14({n})"),
            BlockName::B15(n) => write!(f, "B15({n})"),
            BlockName::Prime(i) => write!(f, "B'{i}"),
            BlockName::Wheel(k) => write!(f, "W{k}"),
            BlockName::Fan(k) => write!(f, "F{k}"),
        }
    }
}

impl FromStr for BlockName {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::UnknownFamily(s.to_string());
        let s = s.trim();
        let param = |r: &str| -> Result<usize, FamilyError> {
            r.strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
                .ok_or_else(bad)
        };
        let name = if let Some(r) = s.strip_prefix("B'") {
            BlockName::Prime(r.parse().map_err(|_| bad())?)
        } else if let Some(r) = s.strip_prefix("B11") {
            BlockName::B11(param(r)?)
        } else if let Some(r) = s.strip_prefix("B12") {
            BlockName::B12(param(r)?)
        } else if let Some(r) = s.strip_prefix("B13") {
            BlockName::B13(param(r)?)
        } else if let Some(r) = s.strip_prefix("B14") {
            BlockName::B14(param(r)?)
        } else if let Some(r) = s.strip_prefix("B15") {
            BlockName::B15(param(r)?)
        } else if let Some(r) = s.strip_prefix('B') {
            BlockName::B(r.parse().map_err(|_| bad())?)
        } else if let Some(r) = s.strip_prefix('W') {
            BlockName::Wheel(r.parse().map_err(|_| bad())?)
        } else if let Some(r) = s.strip_prefix('F') {
            BlockName::Fan(r.parse().map_err(|_| bad())?)
        } else {
            return Err(bad());
        };
        block_graph(name)?;
        Ok(name)
    }
}

fn invalid(name: BlockName, reason: &str) -> FamilyError {
    FamilyError::InvalidParameter {
        family: name.to_string(),
        reason: reason.to_string(),
    }
}

fn g(n: usize, e: &[Edge]) -> Graph {
    Graph::from_edges(n, e).expect("catalog edge lists are simple")
}

/// Square of a path on `m` vertices, labeled `offset..offset+m`.
fn strip_edges(offset: usize, m: usize) -> Vec<Edge> {
    let mut e = Vec::new();
    for i in 0..m {
        if i + 1 < m {
            e.push((offset + i, offset + i + 1));
        }
        if i + 2 < m {
            e.push((offset + i, offset + i + 2));
        }
    }
    e
}

/// Strip on `1..n` plus an apex `0` joined to both ends of the strip.
fn capped_strip(n: usize) -> Graph {
    let m = n - 1;
    let mut e = strip_edges(1, m);
    e.extend([(0, 1), (0, 2), (0, m - 1), (0, m)]);
    g(n, &e)
}

fn b6_edges() -> Vec<Edge> {
    vec![(0, 3), (3, 1), (1, 4), (4, 2), (2, 5), (5, 0), (3, 4), (4, 5), (5, 3)]
}

fn k4_edges() -> Vec<Edge> {
    vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
}

fn b5_edges() -> Vec<Edge> {
    vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 3), (1, 3), (0, 4), (1, 4)]
}

/// Abstract graph of a catalog block.
pub fn block_graph(name: BlockName) -> Result<Graph, FamilyError> {
    Ok(match name {
        BlockName::B(1) => g(3, &[(0, 1), (1, 2), (0, 2)]),
        BlockName::B(2) => g(4, &k4_edges()),
        BlockName::B(3) => {
            let mut e = k4_edges();
            e.extend([(4, 1), (4, 2)]);
            g(5, &e)
        }
        BlockName::B(4) => g(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]),
        BlockName::B(5) => g(5, &b5_edges()),
        BlockName::B(6) => g(6, &b6_edges()),
        BlockName::B(7) => {
            let mut e = b6_edges();
            e.push((0, 2));
            g(6, &e)
        }
        BlockName::B(8) => {
            let mut e = b6_edges();
            e.extend([(0, 2), (1, 2)]);
            g(6, &e)
        }
        BlockName::B(9) => {
            let mut e = Vec::new();
            for i in 0..6 {
                for j in i + 1..6 {
                    if j != i + 3 {
                        e.push((i, j));
                    }
                }
            }
            g(6, &e)
        }
        BlockName::B(10) => g(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 0),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 2),
                (5, 3),
                (6, 0),
                (6, 1),
            ],
        ),
        BlockName::B(_) => return Err(invalid(name, "B1..B10 only")),
        BlockName::B11(n) => {
            if n < 4 || n % 2 == 1 {
                return Err(invalid(name, "needs even n >= 4"));
            }
            g(n, &strip_edges(0, n))
        }
        BlockName::B12(n) => {
            if n < 5 || n % 2 == 0 {
                return Err(invalid(name, "needs odd n >= 5"));
            }
            g(n, &strip_edges(0, n))
        }
        BlockName::B13(n) => {
            if n < 7 || n % 2 == 0 {
                return Err(invalid(name, "needs odd n >= 7"));
            }
            capped_strip(n)
        }
        BlockName::B14(n) => {
            if n < 6 || n % 2 == 1 {
                return Err(invalid(name, "needs even n >= 6"));
            }
            capped_strip(n)
        }
        BlockName::B15(n) => {
            if n < 6 || n % 2 == 1 {
                return Err(invalid(name, "needs even n >= 6"));
            }
            // antiprism: outer cycle 0..m, inner cycle m..2m
            let m = n / 2;
            let mut e = Vec::new();
            for i in 0..m {
                let j = (i + 1) % m;
                e.extend([(i, j), (m + i, m + j), (m + i, i), (m + i, j)]);
            }
            g(n, &e)
        }
        BlockName::Prime(1) => {
            let mut e = k4_edges();
            e.extend([(4, 0), (4, 2), (5, 1), (5, 2)]);
            g(6, &e)
        }
        BlockName::Prime(2) => {
            let mut e = b5_edges();
            e.extend([(5, 0), (5, 1)]);
            g(6, &e)
        }
        BlockName::Prime(3) => {
            let mut e = k4_edges();
            e.extend([(4, 0), (4, 2), (5, 1), (5, 2), (6, 0), (6, 1)]);
            g(7, &e)
        }
        BlockName::Prime(_) => return Err(invalid(name, "B'1..B'3 only")),
        BlockName::Wheel(k) => {
            if k < 3 {
                return Err(invalid(name, "needs k >= 3"));
            }
            let mut e: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
            e.extend((1..=k).map(|i| (i, i % k + 1)));
            g(k + 1, &e)
        }
        BlockName::Fan(k) => {
            if k < 2 {
                return Err(invalid(name, "needs k >= 2"));
            }
            let mut e: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
            e.extend((1..k).map(|i| (i, i + 1)));
            g(k + 1, &e)
        }
    })
}

/// Δ of `pg` read as one standalone block, or `None` when `pg` is not a
/// single block covering all of its edges.
pub fn standalone_block_delta(pg: &PlaneGraph) -> Option<usize> {
    let blocks = triangular_blocks(pg).ok()?;
    match blocks.as_slice() {
        [b] if b.edges.len() == pg.size() && b.order() == pg.order() && b.is_solid() => Some(b.delta()),
        _ => None,
    }
}

/// A plane embedding of `g` as a single solid block with the most inner
/// 3-faces. Ties keep the first embedding in enumeration order.
pub fn best_block_embedding(g: &Graph) -> Option<(PlaneGraph, usize)> {
    let mut best: Option<(PlaneGraph, usize)> = None;
    for pg in all_plane_embeddings(g) {
        if let Some(d) = standalone_block_delta(&pg) {
            if best.as_ref().is_none_or(|b| d > b.1) {
                best = Some((pg, d));
            }
        }
    }
    best
}

/// The named block as a plane graph.
pub fn catalog_block(name: BlockName) -> Result<PlaneGraph, FamilyError> {
    let g = block_graph(name)?;
    best_block_embedding(&g)
        .map(|(pg, _)| pg)
        .ok_or_else(|| FamilyError::SelfCheck {
            family: name.to_string(),
            reason: "no embedding forms a single solid block".into(),
        })
}

/// Δ and ρ of a catalog block read off its embedding.
pub fn block_density(name: BlockName) -> Result<(usize, usize, Rational), FamilyError> {
    let pg = catalog_block(name)?;
    let d = standalone_block_delta(&pg).expect("catalog blocks are single solid blocks");
    Ok((pg.order(), d, Rational::new(d as i64, pg.order() as i64)))
}

/// Δ listed in the density tables for a block.
fn table_delta(name: BlockName) -> usize {
    match name {
        BlockName::B(i) => [0, 1, 3, 4, 4, 5, 4, 5, 6, 7, 6][i as usize],
        BlockName::B11(n) | BlockName::B12(n) => n - 2,
        BlockName::B13(n) | BlockName::B14(n) => n - 1,
        BlockName::B15(n) => n,
        BlockName::Prime(i) => [0, 5, 6, 6][i as usize],
        BlockName::Wheel(k) => k,
        BlockName::Fan(k) => k - 1,
    }
}

/// ρ listed in the density tables for a block.
pub fn table_density(name: BlockName) -> Result<Rational, FamilyError> {
    let n = block_graph(name)?.order();
    Ok(Rational::new(table_delta(name) as i64, n as i64))
}

/// Which catalog a block list refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogSet {
    H4,
    H5,
}

impl FromStr for CatalogSet {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "H4" => Ok(CatalogSet::H4),
            "H5" => Ok(CatalogSet::H5),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

/// Expected solid blocks of order `n`, one name per isomorphism class.
pub fn expected_catalog(set: CatalogSet, n: usize) -> Vec<BlockName> {
    use BlockName::*;
    match set {
        CatalogSet::H4 => match n {
            3 => vec![B(1)],
            4 => vec![B(2), B11(4)],
            5 => vec![B(3), B(4), B(5), B12(5)],
            // B14(6) is B8 and B15(6) is B9
            6 => vec![B(6), B(7), B(8), B(9), B11(6)],
            7 => vec![B(10), B12(7), B13(7)],
            _ if n.is_multiple_of(2) => vec![B11(n), B14(n), B15(n)],
            _ => vec![B12(n), B13(n)],
        },
        CatalogSet::H5 => match n {
            3 => vec![B(1)],
            4 => vec![B(2), B11(4)],
            5 => vec![B(3), B(4), B(5), B12(5)],
            6 => vec![B(6), Prime(1), Prime(2), Wheel(5), Fan(5)],
            7 => vec![Prime(3), Wheel(6), Fan(6)],
            _ => vec![Wheel(n - 1), Fan(n - 1)],
        },
    }
}

/// Rows of the density tables: every fixed block, and parametric families at
/// the given orders.
pub fn table_rows(set: CatalogSet) -> Vec<BlockName> {
    use BlockName::*;
    match set {
        CatalogSet::H4 => {
            let mut v: Vec<BlockName> = (1..=10).map(B).collect();
            v.extend([4, 6, 8, 10].map(B11));
            v.extend([5, 7, 9, 11].map(B12));
            v.extend([7, 9, 11].map(B13));
            v.extend([8, 10, 12].map(B14));
            v.extend([8, 10, 12].map(B15));
            v
        }
        CatalogSet::H5 => {
            let mut v: Vec<BlockName> = (1..=3).map(Prime).collect();
            v.extend((3..=8).map(Wheel));
            v.extend((3..=9).map(Fan));
            v
        }
    }
}

/// Computed density table for a catalog set, one row per table entry.
pub fn density_rows(set: CatalogSet) -> Result<Vec<DensityRow>, FamilyError> {
    table_rows(set)
        .into_iter()
        .map(|b| {
            let (order, delta, rho) = block_density(b)?;
            Ok(DensityRow {
                name: b.to_string(),
                order,
                delta,
                rho,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_parse() {
        for s in ["B1", "B10", "B11(6)", "B15(8)", "B'2", "W5", "F6"] {
            let n: BlockName = s.parse().unwrap();
            assert_eq!(n.to_string(), s);
        }
        assert!("B11(5)".parse::<BlockName>().is_err());
        assert!("B13(8)".parse::<BlockName>().is_err());
        assert!("B16".parse::<BlockName>().is_err());
    }

    #[test]
    fn b5_block() {
        let pg = catalog_block(BlockName::B(5)).unwrap();
        assert_eq!((pg.order(), pg.size()), (5, 9));
        assert_eq!(block_density(BlockName::B(5)).unwrap().2, Rational::from_integer(1));
    }

    #[test]
    fn small_coincidences() {
        use crate::embedding::are_isomorphic;
        let b = |n| block_graph(n).unwrap();
        assert!(are_isomorphic(&b(BlockName::B14(6)), &b(BlockName::B(8))));
        assert!(are_isomorphic(&b(BlockName::B15(6)), &b(BlockName::B(9))));
        assert!(are_isomorphic(&b(BlockName::Fan(4)), &b(BlockName::B12(5))));
        assert!(are_isomorphic(&b(BlockName::Fan(3)), &b(BlockName::B11(4))));
        assert!(are_isomorphic(&b(BlockName::Wheel(4)), &b(BlockName::B(4))));
    }

    #[test]
    fn table_rows_match() {
        for set in [CatalogSet::H4, CatalogSet::H5] {
            for name in table_rows(set) {
                let (_, _, rho) = block_density(name).unwrap();
                assert_eq!(rho, table_density(name).unwrap(), "{name}");
            }
        }
    }
}
