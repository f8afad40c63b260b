//! Named graph families and extremal constructions. Every generated instance
//! is checked for planarity, order, size and pattern freeness before it is
//! returned.

pub mod bounds;
pub mod catalog;
pub mod constructions;
pub mod verify;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::embedding::{is_planar, PlaneGraph};
use crate::error::FamilyError;
use crate::patterns::{is_free, PatternSpec};

pub use bounds::{bound, Bound, BoundValue};
pub use catalog::{
    block_density, block_graph, catalog_block, density_rows, expected_catalog, table_density, table_rows, BlockName,
    CatalogSet,
};
pub use constructions::{
    apex_outerplanar, augment_with_b2prime, b5_ring, first_inner_four_face, h_family, k2_plus_matching,
    k2_vee_matching, wheel_ring,
};
pub use verify::{check_face_identity, check_lemma2, check_lemma4, verify_h5_extremal, ExtremalReport};

/// One self-check run on a generated instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// A generated graph together with the claims it was checked against.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub plane: PlaneGraph,
    pub expected_order: usize,
    pub expected_size: usize,
    pub pattern: PatternSpec,
    pub checks: Vec<Check>,
}

impl FamilyInstance {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    /// Pass/fail table, one check per line.
    pub fn report(&self) -> String {
        let mut out = format!("{} n={} e={}\n", self.family, self.plane.order(), self.plane.size());
        for c in &self.checks {
            out.push_str(&format!(
                "{:<12} {:<4} {}\n",
                c.name,
                if c.pass { "pass" } else { "FAIL" },
                c.detail
            ));
        }
        out
    }
}

/// Family names accepted by [`generate`].
pub const FAMILY_NAMES: &[&str] = &[
    "wheel_ring",
    "b5_ring",
    "h_family",
    "k2_plus_matching",
    "k2_vee_matching",
    "apex_outerplanar",
    "B1..B10, B11..B15 (param n), B'1..B'3, W (param k), F (param k)",
];

fn extremal_size(n: usize) -> usize {
    (5 * n / 2).saturating_sub(4)
}

fn param(family: &str, params: &BTreeMap<String, usize>, key: &str) -> Result<usize, FamilyError> {
    params.get(key).copied().ok_or_else(|| FamilyError::InvalidParameter {
        family: family.to_string(),
        reason: format!("missing parameter {key}"),
    })
}

fn block_name(family: &str, params: &BTreeMap<String, usize>) -> Result<BlockName, FamilyError> {
    let with = |key: &str| -> Result<String, FamilyError> { Ok(format!("{family}({})", param(family, params, key)?)) };
    let full = match family {
        "B11" | "B12" | "B13" | "B14" | "B15" => with("n")?,
        "W" | "F" => format!("{family}{}", param(family, params, "k")?),
        _ => family.to_string(),
    };
    full.parse()
}

/// Builds the named family member and runs its self-checks. A failed check
/// is returned as [`FamilyError::SelfCheck`].
pub fn generate(family: &str, params: &BTreeMap<String, usize>) -> Result<FamilyInstance, FamilyError> {
    let p = |k: &str| param(family, params, k);
    let (plane, order, size, pattern, extremal, block) = match family {
        "wheel_ring" | "G" => {
            let k = p("k")?;
            (wheel_ring(k)?, 5 * k + 2, 13 * k, PatternSpec::H4, false, None)
        }
        "b5_ring" | "R" => {
            let k = p("k")?;
            (b5_ring(k)?, 5 * k, extremal_size(5 * k), PatternSpec::H5, true, None)
        }
        "h_family" | "H" => {
            let (x, y) = (p("x")?, p("y")?);
            let n = 10 * x + 6 * y;
            (h_family(x, y)?, n, extremal_size(n), PatternSpec::H5, true, None)
        }
        "k2_plus_matching" => {
            let n = p("n")?;
            (k2_plus_matching(n)?, n, extremal_size(n), PatternSpec::H6, false, None)
        }
        "k2_vee_matching" => {
            let n = p("n")?;
            (k2_vee_matching(n)?, n, extremal_size(n), PatternSpec::H6, false, None)
        }
        "apex_outerplanar" => {
            let n = p("n")?;
            (apex_outerplanar(n)?, n, extremal_size(n), PatternSpec::H6, false, None)
        }
        _ => {
            let name = block_name(family, params)?;
            let g = block_graph(name)?;
            let pattern = match name {
                BlockName::Prime(_) | BlockName::Wheel(_) | BlockName::Fan(_) => PatternSpec::H5,
                _ => PatternSpec::H4,
            };
            (catalog_block(name)?, g.order(), g.size(), pattern, false, Some(name))
        }
    };
    let mut checks = Vec::new();
    let mut check = |name: &str, pass: bool, detail: String| {
        checks.push(Check {
            name: name.to_string(),
            pass,
            detail,
        })
    };
    check("planar", is_planar(plane.graph()), "independent planarity test".into());
    check(
        "order",
        plane.order() == order,
        format!("{} (expected {order})", plane.order()),
    );
    check("size", plane.size() == size, format!("{} (expected {size})", plane.size()));
    let h = pattern.build().expect("family patterns build");
    check("free", is_free(plane.graph(), &h), format!("{}-free", pattern.name()));
    if extremal {
        let r = verify_h5_extremal(&plane).map_err(|e| FamilyError::SelfCheck {
            family: family.to_string(),
            reason: e.to_string(),
        })?;
        check("extremal", r.pass(), r.to_string());
    }
    if let Some(name) = block {
        let got = catalog::standalone_block_delta(&plane);
        let want = table_density(name)?;
        let rho = got.map(|d| crate::decomposition::Rational::new(d as i64, plane.order() as i64));
        check(
            "density",
            rho == Some(want),
            format!("{} (table {want})", rho.map_or("not a single block".into(), |r| r.to_string())),
        );
    }
    let inst = FamilyInstance {
        family: family.to_string(),
        params: params.clone(),
        plane,
        expected_order: order,
        expected_size: size,
        pattern,
        checks,
    };
    if let Some(bad) = inst.checks.iter().find(|c| !c.pass) {
        return Err(FamilyError::SelfCheck {
            family: family.to_string(),
            reason: format!("{}: {}", bad.name, bad.detail),
        });
    }
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kv: &[(&str, usize)]) -> BTreeMap<String, usize> {
        kv.iter().map(|&(k, v)| (k.to_string(), v)).collect()
    }

    #[test]
    fn generators_self_check() {
        for (name, kv) in [
            ("wheel_ring", vec![("k", 3)]),
            ("b5_ring", vec![("k", 4)]),
            ("h_family", vec![("x", 2), ("y", 1)]),
            ("k2_plus_matching", vec![("n", 9)]),
            ("k2_vee_matching", vec![("n", 9)]),
            ("apex_outerplanar", vec![("n", 9)]),
            ("B15", vec![("n", 8)]),
            ("B'3", vec![]),
            ("F", vec![("k", 5)]),
        ] {
            let inst = generate(name, &params(&kv)).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(inst.passed(), "{}", inst.report());
        }
    }

    #[test]
    fn missing_parameter() {
        assert!(matches!(
            generate("wheel_ring", &params(&[])),
            Err(FamilyError::InvalidParameter { .. })
        ));
        assert!(generate("nonsense", &params(&[])).is_err());
    }
}
