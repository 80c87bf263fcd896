//! The curated catalog of test groups.
//!
//! Coverage is by phenomenon, not by order: cyclic and dihedral families,
//! the soluble critical groups, Frobenius groups, central extensions of
//! simple groups, outer-action witnesses such as `S₅`, and wreath products
//! whose base is a chief factor of rank 2.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use frlab_core::{Caps, Error as CoreError, GroupTable};

use crate::error::{Error, Result};
use crate::recipe::{parse_recipe, Recipe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Tiny,
    Small,
    Medium,
}

impl Tier {
    pub const ALL: [Tier; 3] = [Tier::Tiny, Tier::Small, Tier::Medium];

    pub fn bound(self) -> usize {
        match self {
            Tier::Tiny => 60,
            Tier::Small => 200,
            Tier::Medium => 2000,
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tier::Tiny => "tiny",
            Tier::Small => "small",
            Tier::Medium => "medium",
        })
    }
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tier> {
        match s {
            "tiny" => Ok(Tier::Tiny),
            "small" => Ok(Tier::Small),
            "medium" => Ok(Tier::Medium),
            other => Err(Error::UnknownTier(other.into())),
        }
    }
}

/// The one medium entry above the medium bound: its base `A₅ × A₅` is the
/// rank-2 non-abelian chief factor the rank tests need.
pub const OVERSIZE_WITNESS: &str = "A5wrS2";

const TINY: &[(&str, &str)] = &[
    ("C1", "cyclic(1)"),
    ("C2", "cyclic(2)"),
    ("C3", "cyclic(3)"),
    ("C4", "cyclic(4)"),
    ("C5", "cyclic(5)"),
    ("C6", "cyclic(6)"),
    ("C7", "cyclic(7)"),
    ("C8", "cyclic(8)"),
    ("C9", "cyclic(9)"),
    ("C10", "cyclic(10)"),
    ("C12", "cyclic(12)"),
    ("C16", "cyclic(16)"),
    ("C30", "cyclic(30)"),
    ("V4", "direct(cyclic(2), cyclic(2))"),
    ("C2^3", "direct(cyclic(2), cyclic(2), cyclic(2))"),
    ("C2xC4", "direct(cyclic(2), cyclic(4))"),
    ("C3xC3", "direct(cyclic(3), cyclic(3))"),
    ("C2xC6", "direct(cyclic(2), cyclic(6))"),
    ("C4xC4", "direct(cyclic(4), cyclic(4))"),
    ("S3", "symmetric(3)"),
    ("D8", "dihedral(8)"),
    ("D10", "dihedral(10)"),
    ("D12", "dihedral(12)"),
    ("D14", "dihedral(14)"),
    ("D16", "dihedral(16)"),
    ("D18", "dihedral(18)"),
    ("D20", "dihedral(20)"),
    ("D30", "dihedral(30)"),
    ("Q8", "quaternion(8)"),
    ("Q16", "quaternion(16)"),
    ("Dic12", "dicyclic(12)"),
    ("Dic20", "dicyclic(20)"),
    ("A4", "alternating(4)"),
    ("S4", "symmetric(4)"),
    ("A5", "alternating(5)"),
    ("SL(2,3)", "sl2(3)"),
    ("GL(2,3)", "gl2(3)"),
    ("C2xS3", "direct(cyclic(2), symmetric(3))"),
    ("C3xS3", "direct(cyclic(3), symmetric(3))"),
    ("S3xS3", "direct(symmetric(3), symmetric(3))"),
    ("C2xA4", "direct(cyclic(2), alternating(4))"),
    ("C3xA4", "direct(cyclic(3), alternating(4))"),
    ("C2xS4", "direct(cyclic(2), symmetric(4))"),
    ("C2xQ8", "direct(cyclic(2), quaternion(8))"),
    ("C2xD8", "direct(cyclic(2), dihedral(8))"),
    ("C4xS3", "direct(cyclic(4), symmetric(3))"),
    ("C5xS3", "direct(cyclic(5), symmetric(3))"),
    ("C3xQ8", "direct(cyclic(3), quaternion(8))"),
    ("V4xS3", "direct(cyclic(2), cyclic(2), symmetric(3))"),
    ("F20", "semidirect(cyclic(5), cyclic(4), power(2))"),
    ("F21", "semidirect(cyclic(7), cyclic(3), power(2))"),
    ("F39", "semidirect(cyclic(13), cyclic(3), power(3))"),
    ("C13:C4", "semidirect(cyclic(13), cyclic(4), power(5))"),
    ("F55", "semidirect(cyclic(11), cyclic(5), power(3))"),
    ("F42", "semidirect(cyclic(7), cyclic(6), power(3))"),
    ("C3^2:C2", "semidirect(direct(cyclic(3), cyclic(3)), cyclic(2), invert)"),
    ("C3^2:C4", "semidirect(direct(cyclic(3), cyclic(3)), cyclic(4), images(3, 2))"),
    ("C4:C4", "semidirect(cyclic(4), cyclic(4), power(3))"),
    ("C3:C8", "semidirect(cyclic(3), cyclic(8), invert)"),
    ("C2wrC2", "wreath(cyclic(2), 2)"),
    ("C3wrC2", "wreath(cyclic(3), 2)"),
    ("C2wrS3", "wreath(cyclic(2), 3)"),
    ("C2wrregC3", "wreath_reg(cyclic(2), cyclic(3))"),
];

const SMALL: &[(&str, &str)] = &[
    ("C64", "cyclic(64)"),
    ("C2^4", "direct(cyclic(2), cyclic(2), cyclic(2), cyclic(2))"),
    ("S5", "symmetric(5)"),
    ("C2xA5", "direct(cyclic(2), alternating(5))"),
    ("C3xA5", "direct(cyclic(3), alternating(5))"),
    ("SL(2,5)", "sl2(5)"),
    ("PSL(2,7)", "psl2(7)"),
    ("C3xS4", "direct(cyclic(3), symmetric(4))"),
    ("S3xS4", "direct(symmetric(3), symmetric(4))"),
    ("A4xA4", "direct(alternating(4), alternating(4))"),
    ("V4xS4", "direct(cyclic(2), cyclic(2), symmetric(4))"),
    ("S3xA4", "direct(symmetric(3), alternating(4))"),
    ("C2xSL(2,3)", "direct(cyclic(2), sl2(3))"),
    ("C3xSL(2,3)", "direct(cyclic(3), sl2(3))"),
    ("C2xGL(2,3)", "direct(cyclic(2), gl2(3))"),
    ("S3xSL(2,3)", "direct(symmetric(3), sl2(3))"),
    ("F110", "semidirect(cyclic(11), cyclic(10), power(2))"),
    ("F156", "semidirect(cyclic(13), cyclic(12), power(2))"),
    ("S3wrS2", "wreath(symmetric(3), 2)"),
    ("C3wrS3", "wreath(cyclic(3), 3)"),
    ("C4wrS2", "wreath(cyclic(4), 2)"),
    ("C2wrregC5", "wreath_reg(cyclic(2), cyclic(5))"),
    ("C3wrregC2", "wreath_reg(cyclic(3), cyclic(2))"),
    ("C2wrregV4", "wreath_reg(cyclic(2), direct(cyclic(2), cyclic(2)))"),
    ("C2^3xS3", "direct(cyclic(2), cyclic(2), cyclic(2), symmetric(3))"),
    ("Q8xS3", "direct(quaternion(8), symmetric(3))"),
    ("D8xS3", "direct(dihedral(8), symmetric(3))"),
    ("C5xA4", "direct(cyclic(5), alternating(4))"),
    ("C7xS3", "direct(cyclic(7), symmetric(3))"),
    ("C3xC3xS3", "direct(cyclic(3), cyclic(3), symmetric(3))"),
    ("C2xS3xS3", "direct(cyclic(2), symmetric(3), symmetric(3))"),
    ("C2xF20", "direct(cyclic(2), semidirect(cyclic(5), cyclic(4), power(2)))"),
    ("C3xF20", "direct(cyclic(3), semidirect(cyclic(5), cyclic(4), power(2)))"),
    ("S3xF20", "direct(symmetric(3), semidirect(cyclic(5), cyclic(4), power(2)))"),
    ("S3xD10", "direct(symmetric(3), dihedral(10))"),
    ("V4xA4", "direct(cyclic(2), cyclic(2), alternating(4))"),
    ("C3xD8", "direct(cyclic(3), dihedral(8))"),
    ("Dic24", "dicyclic(24)"),
    ("Dic28", "dicyclic(28)"),
    ("Dic36", "dicyclic(36)"),
    ("D100", "dihedral(100)"),
    ("C2xF21", "direct(cyclic(2), semidirect(cyclic(7), cyclic(3), power(2)))"),
];

const MEDIUM: &[(&str, &str)] = &[
    ("A6", "alternating(6)"),
    ("S6", "symmetric(6)"),
    ("PSL(2,8)", "psl2(8)"),
    ("PSL(2,11)", "psl2(11)"),
    ("PSL(2,13)", "psl2(13)"),
    ("SL(2,7)", "sl2(7)"),
    ("C2xS5", "direct(cyclic(2), symmetric(5))"),
    ("C3xS5", "direct(cyclic(3), symmetric(5))"),
    ("S3xA5", "direct(symmetric(3), alternating(5))"),
    ("C2xSL(2,5)", "direct(cyclic(2), sl2(5))"),
    ("A4xA5", "direct(alternating(4), alternating(5))"),
    ("S3xSL(2,5)", "direct(symmetric(3), sl2(5))"),
    ("D10xA5", "direct(dihedral(10), alternating(5))"),
    ("C2xPSL(2,7)", "direct(cyclic(2), psl2(7))"),
    ("A4wrS2", "wreath(alternating(4), 2)"),
    ("S4wrS2", "wreath(symmetric(4), 2)"),
    ("S3wrS3", "wreath(symmetric(3), 3)"),
    (OVERSIZE_WITNESS, "wreath(alternating(5), 2)"),
];

fn tier_list(t: Tier) -> &'static [(&'static str, &'static str)] {
    match t {
        Tier::Tiny => TINY,
        Tier::Small => SMALL,
        Tier::Medium => MEDIUM,
    }
}

/// `(label, recipe text, tier introducing it)` for every entry of `tier`,
/// in catalog order.
pub fn catalog_recipes(tier: Tier) -> Vec<(&'static str, &'static str, Tier)> {
    Tier::ALL
        .into_iter()
        .filter(|t| *t <= tier)
        .flat_map(|t| tier_list(t).iter().map(move |(l, r)| (*l, *r, t)))
        .collect()
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub label: String,
    pub recipe: Recipe,
    pub tier: Tier,
    pub table: Arc<GroupTable>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub tier: Tier,
    pub entries: Vec<CatalogEntry>,
    /// Entries not built because a cap was exceeded, with the reason.
    pub skipped: Vec<(String, String)>,
}

impl Catalog {
    /// Entries plus skipped entries.
    pub fn universe_size(&self) -> usize {
        self.entries.len() + self.skipped.len()
    }

    pub fn get(&self, label: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.label == label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Builds every entry of `tier` and the tiers below it. Entries beyond
/// `caps` are listed in `skipped`; any other failure is a bug in the list.
pub fn default_catalog(tier: Tier, caps: &Caps) -> Result<Catalog> {
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for (label, text, t) in catalog_recipes(tier) {
        let recipe = parse_recipe(text)?;
        match recipe.eval(caps, None) {
            Ok(table) => entries.push(CatalogEntry {
                label: label.to_string(),
                table: Arc::new(table.with_label(label)),
                recipe,
                tier: t,
            }),
            Err(Error::Group(e @ CoreError::OrderCapExceeded { .. })) => skipped.push((label.to_string(), e.to_string())),
            Err(e) => return Err(e),
        }
    }
    Ok(Catalog {
        tier,
        entries,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labels_unique_and_bounds_respected() {
        let all = catalog_recipes(Tier::Medium);
        let labels: HashSet<_> = all.iter().map(|e| e.0).collect();
        assert_eq!(labels.len(), all.len());
        for (label, text, tier) in all {
            let n = parse_recipe(text).unwrap().order().unwrap() as usize;
            if label != OVERSIZE_WITNESS {
                assert!(n <= tier.bound(), "{label} has order {n}");
            }
        }
    }

    #[test]
    fn tiny_contents() {
        let c = default_catalog(Tier::Tiny, &Caps::default()).unwrap();
        assert!(c.len() >= 40);
        assert!(c.skipped.is_empty());
        for l in ["S3", "D8", "Q8", "A4", "S4", "C2xS3", "A5"] {
            assert!(c.get(l).is_some(), "{l}");
        }
        assert_eq!(c.get("S4").unwrap().table.order(), 24);
        assert!(c.entries.iter().all(|e| e.table.order() <= 60 && e.table.check_associative(64)));
    }

    #[test]
    fn small_contents() {
        let c = default_catalog(Tier::Small, &Caps::default()).unwrap();
        assert!(c.len() >= 80);
        assert_eq!(c.get("SL(2,5)").unwrap().table.order(), 120);
        for l in ["S5", "C2xA5", "PSL(2,7)"] {
            assert!(c.get(l).is_some(), "{l}");
        }
    }

    #[test]
    fn lowered_caps_skip_instead_of_failing() {
        let caps = Caps {
            construction: 100,
            table_order: 100,
            ..Caps::default()
        };
        let c = default_catalog(Tier::Small, &caps).unwrap();
        assert!(c.get("S5").is_none());
        assert!(c.skipped.iter().any(|(l, _)| l == "S5"));
        assert_eq!(c.universe_size(), catalog_recipes(Tier::Small).len());
    }
}
