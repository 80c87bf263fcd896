//! Per-group analysis: chief series, characteristic subgroups and, per
//! class, membership, hypercenter, `Int` and residual.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use frlab_core::center::{hypercenter, int_x};
use frlab_core::charsub::characteristic_subgroups;
use frlab_core::class::{residual, CentralMode, ClassSpec};
use frlab_core::series::chief_series;
use frlab_core::{Caps, GroupTable};
use serde::{Deserialize, Serialize};

use crate::catalog::{catalog_recipes, Tier};
use crate::error::{Error, Result};
use crate::groupfile::load_group;
use crate::recipe::parse_recipe;

/// A `.grp` or `.grp-recipe` file, a catalog label, or a recipe expression.
pub fn load_source(src: &str, caps: &Caps) -> Result<GroupTable> {
    let path = Path::new(src);
    if path.is_file() {
        if path.extension().is_some_and(|e| e == "grp-recipe") {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.to_path_buf(),
                source,
            })?;
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            return Ok(parse_recipe(&text)?.eval(caps, path.parent())?.with_label(stem));
        }
        return load_group(path, caps);
    }
    if let Some((label, text, _)) = catalog_recipes(Tier::Medium).into_iter().find(|(l, _, _)| *l == src) {
        return Ok(parse_recipe(text)?.eval(caps, None)?.with_label(label));
    }
    parse_recipe(src)?.eval(caps, None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorInfo {
    pub upper_order: usize,
    pub lower_order: usize,
    pub order: usize,
    pub rank: u32,
    #[serde(rename = "type")]
    pub type_name: String,
    pub abelian: bool,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub class: String,
    pub member: bool,
    pub hypercenter_order: usize,
    pub int_order: usize,
    /// `None` when the class is not a formation.
    pub residual_order: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub group: String,
    pub order: usize,
    pub series: Vec<FactorInfo>,
    /// Orders of the characteristic subgroups.
    pub characteristic: BTreeMap<String, usize>,
    pub classes: Vec<ClassInfo>,
}

pub fn analyze(g: &GroupTable, classes: &[ClassSpec], caps: &Caps) -> Result<Analysis> {
    let series = chief_series(g)
        .factors(g)
        .into_iter()
        .map(|cf| FactorInfo {
            upper_order: cf.upper.size(),
            lower_order: cf.lower.size(),
            order: cf.factor_order,
            rank: cf.rank,
            type_name: cf.type_key.to_string(),
            abelian: cf.is_abelian,
            centralizer_order: cf.centralizer.size(),
        })
        .collect();
    let cs = characteristic_subgroups(g, caps)?;
    let characteristic = [
        ("center", &cs.center),
        ("derived", &cs.derived),
        ("fitting", &cs.fitting),
        ("frattini", &cs.frattini),
        ("soluble_radical", &cs.soluble_radical),
        ("socle", &cs.socle),
        ("generalized_fitting_tilde", &cs.generalized_fitting_tilde),
        ("hypercenter", &cs.hypercenter_classical),
    ]
    .into_iter()
    .map(|(k, s)| (k.to_string(), s.size()))
    .collect();
    let mut infos = Vec::new();
    for x in classes {
        infos.push(ClassInfo {
            class: x.id().to_string(),
            member: x.member(g, caps)?,
            hypercenter_order: hypercenter(g, x, CentralMode::PreferCanonical, caps)?.size(),
            int_order: int_x(g, x, caps)?.size(),
            residual_order: if x.flags().formation {
                Some(residual(g, x, caps)?.size())
            } else {
                None
            },
        });
    }
    Ok(Analysis {
        group: g.label().to_string(),
        order: g.order(),
        series,
        characteristic,
        classes: infos,
    })
}

impl Analysis {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "group {} of order {}", self.group, self.order);
        let mut chain = vec!["1".to_string()];
        chain.extend(self.series.iter().map(|f| f.upper_order.to_string()));
        let _ = writeln!(s, "chief series (orders): {}", chain.join(" < "));
        for f in &self.series {
            let _ = writeln!(
                s,
                "  {}/{}: order {} = {}^{} {} centralizer {}",
                f.upper_order,
                f.lower_order,
                f.order,
                f.type_name,
                f.rank,
                if f.abelian { "abelian" } else { "non-abelian" },
                f.centralizer_order
            );
        }
        let _ = writeln!(s, "characteristic subgroups (orders):");
        for (k, v) in &self.characteristic {
            let _ = writeln!(s, "  {k}: {v}");
        }
        for c in &self.classes {
            let _ = writeln!(
                s,
                "class {}: member {}; Z order {}; Int order {}; residual {}",
                c.class,
                if c.member { "yes" } else { "no" },
                c.hypercenter_order,
                c.int_order,
                c.residual_order.map_or("n/a".to_string(), |r| format!("order {r}"))
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classfile::Registry;

    #[test]
    fn s4_with_supersoluble() {
        let c = Caps::default();
        let g = load_source("S4", &c).unwrap();
        let u = Registry::default().resolve("supersoluble").unwrap();
        let a = analyze(&g, &[u], &c).unwrap();
        let orders: Vec<usize> = a.series.iter().map(|f| f.upper_order).collect();
        assert_eq!(orders, [4, 12, 24]);
        assert_eq!(a.classes[0].hypercenter_order, 1);
        assert_eq!(a.classes[0].int_order, 1);
        assert!(!a.classes[0].member);
        assert!(a.to_text().contains("1 < 4 < 12 < 24"));
    }

    #[test]
    fn trivial_group_and_sources() {
        let c = Caps::default();
        let g = load_source("cyclic(1)", &c).unwrap();
        let a = analyze(&g, &[], &c).unwrap();
        assert!(a.series.is_empty());
        assert!(a.to_text().contains("chief series (orders): 1\n"));
        let n = Registry::default().resolve("n_star").unwrap();
        let sl = load_source("SL(2,5)", &c).unwrap();
        assert!(analyze(&sl, &[n], &c).unwrap().classes[0].member);
        assert!(load_source("nonsense(", &c).is_err());
    }
}
