//! Check bundles behind `verify thm1|thm2|thm3`.

use clap::ValueEnum;

use crate::decomposition::{EiConvention, Rational};
use crate::error::Error;
use crate::families::{
    apex_outerplanar, augment_with_b2prime, b5_ring, block_density, bound, first_inner_four_face, k2_plus_matching,
    k2_vee_matching, table_density, table_rows, verify_h5_extremal, wheel_ring, Bound, CatalogSet,
};
use crate::embedding::is_planar;
use crate::graph::Graph;
use crate::patterns::{is_free, PatternSpec};
use crate::search::{
    enumerate_graphs, enumerate_solid_tbs, exact_planar_turan, verify_component_density, verify_face_identity,
    verify_theta_pairs, Filters, SearchConfig,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Thm1,
    Thm2,
    Thm3,
}

/// One line of a bundle report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleLine {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn line(name: &str, pass: bool, detail: impl Into<String>) -> BundleLine {
    BundleLine {
        name: name.to_string(),
        pass,
        detail: detail.into(),
    }
}

fn extremal_size(n: usize) -> usize {
    (5 * n / 2).saturating_sub(4)
}

fn corpus(n: usize, p: &PatternSpec, cfg: &SearchConfig) -> Result<Vec<Graph>, Error> {
    let f = Filters {
        planar: true,
        free_of: Some(p.build()?),
        ..Filters::default()
    };
    Ok(enumerate_graphs(n, &f, cfg)?)
}

fn density_line(set: CatalogSet) -> Result<BundleLine, Error> {
    let rows = table_rows(set);
    let mut bad = Vec::new();
    for &b in &rows {
        let (_, _, rho) = block_density(b)?;
        if rho != table_density(b)? {
            bad.push(b.to_string());
        }
    }
    let detail = if bad.is_empty() {
        format!("{} rows", rows.len())
    } else {
        format!("mismatch at {}", bad.join(", "))
    };
    Ok(line("density table", bad.is_empty(), detail))
}

fn catalog_line(pattern: PatternSpec, max: usize, cfg: &SearchConfig) -> Result<BundleLine, Error> {
    let r = enumerate_solid_tbs(max, &pattern, cfg)?;
    let diffs: Vec<String> = r
        .orders
        .iter()
        .filter(|o| !o.missing.is_empty() || !o.unexpected.is_empty() || o.direct_agrees == Some(false))
        .map(|o| format!("order {}: missing {:?} unexpected {:?}", o.order, o.missing, o.unexpected))
        .collect();
    let detail = if diffs.is_empty() {
        format!("orders 3..{max} match")
    } else {
        diffs.join("; ")
    };
    Ok(line("solid block catalog", diffs.is_empty(), detail))
}

fn density_lemma_line(pattern: PatternSpec, n: usize, cfg: &SearchConfig) -> Result<BundleLine, Error> {
    let graphs = corpus(n, &pattern, cfg)?;
    let v = verify_component_density(&graphs, &pattern)?;
    let detail = match v.first() {
        None => format!("{} graphs on {n} vertices", graphs.len()),
        Some(x) => format!("{} violations, first {}: {}", v.len(), x.graph, x.detail),
    };
    Ok(line("component density", v.is_empty(), detail))
}

/// ex_P(n, H) against the theorem formula at the orders the ceiling allows.
fn oracle_line(pattern: PatternSpec, which: Bound, cfg: &SearchConfig) -> Result<BundleLine, Error> {
    let top = cfg.ceiling.min(7);
    let mut values = Vec::new();
    let mut pass = true;
    for n in 1..=top {
        let r = exact_planar_turan(n, &pattern, cfg)?;
        let b = bound(n, which);
        if b.in_range && Rational::from_integer(r.ex as i64) > b.value {
            pass = false;
        }
        values.push(r.ex.to_string());
    }
    Ok(line(
        "exact oracle",
        pass,
        format!("ex_P(1..{top}) = {}; in-range orders within the bound", values.join("/")),
    ))
}

fn thm1(cfg: &SearchConfig) -> Result<Vec<BundleLine>, Error> {
    let h4 = PatternSpec::H4.build()?;
    let mut bad = Vec::new();
    for k in 3..=20 {
        let g = wheel_ring(k)?;
        let ok = g.order() == 5 * k + 2 && g.size() == 13 * k && is_planar(g.graph()) && is_free(g.graph(), &h4);
        if !ok {
            bad.push(k);
        }
    }
    Ok(vec![
        density_line(CatalogSet::H4)?,
        catalog_line(PatternSpec::H4, 8, cfg)?,
        density_lemma_line(PatternSpec::H4, 7, cfg)?,
        line(
            "wheel ring k=3..20",
            bad.is_empty(),
            if bad.is_empty() { "18 graphs".to_string() } else { format!("failures at k = {bad:?}") },
        ),
        oracle_line(PatternSpec::H4, Bound::Thm1, cfg)?,
    ])
}

fn thm2(cfg: &SearchConfig) -> Result<Vec<BundleLine>, Error> {
    let h5 = PatternSpec::H5.build()?;
    let mut bad = Vec::new();
    let mut count = 0;
    for x in [2, 3] {
        let mut g = b5_ring(2 * x)?;
        for y in 0..=4 {
            if y > 0 {
                let f = first_inner_four_face(&g).ok_or_else(|| Error::Usage("no inner 4-face".into()))?;
                g = augment_with_b2prime(&g, &f)?;
            }
            let n = 10 * x + 6 * y;
            let rep = verify_h5_extremal(&g)?;
            let ok = g.order() == n && g.size() == extremal_size(n) && is_free(g.graph(), &h5) && rep.pass();
            if !ok {
                bad.push(format!("x={x} y={y}: {rep}"));
            }
            count += 1;
        }
    }
    Ok(vec![
        density_line(CatalogSet::H5)?,
        catalog_line(PatternSpec::H5, 9, cfg)?,
        density_lemma_line(PatternSpec::H5, 6, cfg)?,
        line(
            "b5 ring augmentations",
            bad.is_empty(),
            if bad.is_empty() { format!("{count} graphs extremal") } else { bad.join("; ") },
        ),
        oracle_line(PatternSpec::H5, Bound::Thm2, cfg)?,
    ])
}

fn thm3(cfg: &SearchConfig) -> Result<Vec<BundleLine>, Error> {
    let h6 = PatternSpec::H6.build()?;
    let mut bad = Vec::new();
    for n in (6..=30).step_by(2) {
        let g = k2_plus_matching(n)?;
        if g.size() != extremal_size(n) || !is_free(g.graph(), &h6) {
            bad.push(format!("k2_plus_matching({n})"));
        }
    }
    for n in (7..=31).step_by(2) {
        for (name, g) in [("k2_vee_matching", k2_vee_matching(n)?), ("apex_outerplanar", apex_outerplanar(n)?)] {
            if g.size() != extremal_size(n) || !is_free(g.graph(), &h6) {
                bad.push(format!("{name}({n})"));
            }
        }
    }
    let top = cfg.ceiling.min(7);
    let mut graphs = Vec::new();
    for n in 1..=top {
        graphs.extend(corpus(n, &PatternSpec::H6, cfg)?);
    }
    let pairs = verify_theta_pairs(&graphs, EiConvention::default())?;
    let identity = verify_face_identity(&graphs)?;
    let first = |v: &[crate::search::Violation]| {
        v.first()
            .map_or(format!("{} graphs, orders 1..{top}", graphs.len()), |x| format!("{}: {}", x.graph, x.detail))
    };
    Ok(vec![
        line(
            "extremal constructions",
            bad.is_empty(),
            if bad.is_empty() { "n = 6..31".to_string() } else { bad.join(", ") },
        ),
        line("theta pairs", pairs.is_empty(), first(&pairs)),
        line("face identity", identity.is_empty(), first(&identity)),
        oracle_line(PatternSpec::H6, Bound::Thm3, cfg)?,
    ])
}

/// Runs every check behind `theorem`.
pub fn run_bundle(theorem: Theorem, cfg: &SearchConfig) -> Result<Vec<BundleLine>, Error> {
    match theorem {
        Theorem::Thm1 => thm1(cfg),
        Theorem::Thm2 => thm2(cfg),
        Theorem::Thm3 => thm3(cfg),
    }
}
