//! Witness searches. A witness is a finding, not a failure.

use std::sync::Arc;
use std::time::Instant;

use frlab_core::center::shemetkov_check;
use frlab_core::charsub::is_soluble;
use frlab_core::class::{s_critical, CentralMode, ClassSpec};
use frlab_core::subgroup::minimal_normal_subgroups;
use frlab_core::{Error as CoreError, GroupTable};

use crate::checks::{catalog_items, run_items, Item, VerifyOptions};
use crate::error::{Error, Result};
use crate::recipe::Recipe;
use crate::report::{detail, CheckReport, Detail, Outcome, ReportKind};

pub const PREDICATES: [&str; 2] = ["int-ne-z", "s-critical"];

fn is_simple_nonabelian(g: &GroupTable) -> bool {
    g.order() > 1 && !g.is_abelian() && minimal_normal_subgroups(g).iter().all(|n| n.size() == g.order())
}

/// The tier plus `G × C₂` for every insoluble entry and `S ≀ S₂` for every
/// non-abelian simple entry.
pub fn search_universe(opts: &VerifyOptions) -> Result<Vec<Item>> {
    let base = catalog_items(opts.tier, &opts.caps)?;
    let mut items = base.clone();
    let catalog = crate::catalog::catalog_recipes(opts.tier);
    for (label, g) in &base {
        let Ok(g) = g else { continue };
        let Some((_, text, _)) = catalog.iter().find(|(l, _, _)| l == label) else {
            continue;
        };
        let recipe: Recipe = text.parse()?;
        let mut extra = Vec::new();
        if !is_soluble(g) {
            extra.push((format!("{label}xC2"), Recipe::Direct(vec![recipe.clone(), Recipe::Cyclic(2)])));
        }
        if is_simple_nonabelian(g) {
            extra.push((format!("{label}wrS2"), Recipe::Wreath(Box::new(recipe.clone()), 2)));
        }
        for (l, r) in extra {
            if items.iter().any(|(x, _)| *x == l) {
                continue;
            }
            let built = match r.eval(&opts.caps, None) {
                Ok(t) => Ok(Arc::new(t.with_label(&l))),
                Err(Error::Group(e @ CoreError::OrderCapExceeded { .. })) => Err(e.to_string()),
                Err(e) => return Err(e),
            };
            items.push((l, built));
        }
    }
    if let Some(max) = opts.max_order {
        items.retain(|(_, g)| g.as_ref().map_or(true, |g| g.order() <= max));
    }
    Ok(items)
}

fn int_ne_z(g: &GroupTable, x: &ClassSpec, caps: &frlab_core::Caps) -> frlab_core::Result<Outcome> {
    let v = shemetkov_check(g, x, CentralMode::PreferCanonical, caps)?;
    Ok(if v.equal {
        Outcome::Pass
    } else {
        Outcome::fail([
            ("z_order", v.z.size().to_string()),
            ("int_order", v.int.size().to_string()),
            ("z_leq_int", v.z_leq_int.to_string()),
        ])
    })
}

pub fn search(pred: &str, opts: &VerifyOptions) -> Result<CheckReport> {
    let started = Instant::now();
    let caps = &opts.caps;
    let (default_class, extended) = match pred {
        "int-ne-z" => ("n_ca", true),
        "s-critical" => ("nilpotent", false),
        other => return Err(Error::UnknownCheck(other.to_string())),
    };
    let x = match opts.classes.first() {
        Some(c) => opts.registry.resolve(c)?,
        None => opts.registry.resolve(default_class)?,
    };
    let items = if extended {
        search_universe(opts)?
    } else {
        let mut items = catalog_items(opts.tier, caps)?;
        if let Some(max) = opts.max_order {
            items.retain(|(_, g)| g.as_ref().map_or(true, |g| g.order() <= max));
        }
        items
    };
    let outcomes = match pred {
        "int-ne-z" => run_items(&items, opts.jobs, |g| int_ne_z(g, &x, caps)),
        _ => run_items(&items, opts.jobs, |g| {
            Ok(if s_critical(g, &x, caps)? {
                Outcome::fail([("order", g.order().to_string())])
            } else {
                Outcome::Pass
            })
        }),
    };
    let mut params: Detail = detail([("class", x.id())]);
    if let Some(m) = opts.max_order {
        params.insert("max_order".into(), m.to_string());
    }
    let mut report = CheckReport::tally(pred, ReportKind::Search, params, &opts.tier.to_string(), caps, outcomes, started);
    let result = if report.fail == 0 {
        "none <= cap".to_string()
    } else {
        report.witnesses.iter().map(|w| w.group.as_str()).collect::<Vec<_>>().join(", ")
    };
    report.params.insert("result".into(), result);
    Ok(report)
}
