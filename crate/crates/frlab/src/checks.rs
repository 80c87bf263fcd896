//! Corpus-wide verification checks. Each check decides one property per
//! catalog group; a failure of a check is a counterexample and therefore an
//! implementation bug.

use std::sync::Arc;
use std::time::Instant;

use frlab_core::center::{hypercenter, hypercenter_ascending, int_x, shemetkov_check, t3_condition, OutFact, KNOWN_OUT};
use frlab_core::charsub::{frattini, hypercenter_classical, is_semisimple, is_soluble, soluble_radical};
use frlab_core::class::{is_f_central, locally_defined, CentralMode, ClassKind, ClassSpec, Route};
use frlab_core::fr::{preset, t2_structure};
use frlab_core::quotient::quotient;
use frlab_core::rank::RankSpec;
use frlab_core::series::{chief_series, chief_series_through, ChiefFactor};
use frlab_core::subgroup::join;
use frlab_core::table::induced_table;
use frlab_core::{Caps, Error as CoreError, GroupTable, Mask, Subgroup};
use rayon::prelude::*;

use crate::catalog::{default_catalog, Tier};
use crate::classfile::Registry;
use crate::error::{Error, Result};
use crate::recipe::parse_recipe;
use crate::report::{detail, CheckReport, Detail, Outcome, ReportKind};

pub const CHECKS: [&str; 14] = [
    "baer",
    "example1",
    "c21",
    "mt1_closure",
    "mt1_hered",
    "p7",
    "t2_equiv",
    "t32",
    "shemetkov",
    "c31",
    "t3_forward",
    "route",
    "ascending",
    "outtable",
];

#[derive(Clone)]
pub struct VerifyOptions {
    pub tier: Tier,
    /// Class ids or expressions; empty means the check's defaults.
    pub classes: Vec<String>,
    pub rank: Option<String>,
    pub item: Option<u8>,
    pub jobs: usize,
    pub caps: Caps,
    pub registry: Registry,
    /// Skip groups above this order (searches only).
    pub max_order: Option<usize>,
}

impl VerifyOptions {
    pub fn new(tier: Tier) -> VerifyOptions {
        VerifyOptions {
            tier,
            classes: Vec::new(),
            rank: None,
            item: None,
            jobs: 1,
            caps: Caps::default(),
            registry: Registry::default(),
            max_order: None,
        }
    }

    fn classes_or(&self, defaults: &[&str]) -> Result<Vec<ClassSpec>> {
        let ids: Vec<&str> = if self.classes.is_empty() {
            defaults.to_vec()
        } else {
            self.classes.iter().map(String::as_str).collect()
        };
        ids.into_iter().map(|c| self.registry.resolve(c)).collect()
    }
}

/// A group of the universe, or the reason it could not be built.
pub type Item = (String, std::result::Result<Arc<GroupTable>, String>);

pub fn catalog_items(tier: Tier, caps: &Caps) -> Result<Vec<Item>> {
    let cat = default_catalog(tier, caps)?;
    let mut items: Vec<Item> = cat.entries.into_iter().map(|e| (e.label, Ok(e.table))).collect();
    items.extend(cat.skipped.into_iter().map(|(l, why)| (l, Err(why))));
    Ok(items)
}

/// Applies `f` to every item on a pool of `jobs` workers, keeping item order.
pub fn run_items<F>(items: &[Item], jobs: usize, f: F) -> Vec<(String, Outcome)>
where
    F: Fn(&GroupTable) -> frlab_core::Result<Outcome> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| {
        items
            .par_iter()
            .map(|(label, g)| {
                let o = match g {
                    Ok(g) => Outcome::from_result(f(g)),
                    Err(why) => Outcome::Undecided(detail([("reason", why.clone())])),
                };
                (label.clone(), o)
            })
            .collect()
    })
}

fn sub(s: &Subgroup) -> String {
    if s.size() <= 12 {
        format!("order {} {:?}", s.size(), s.members())
    } else {
        format!("order {}", s.size())
    }
}

fn ids(classes: &[ClassSpec]) -> String {
    classes.iter().map(|c| c.id()).collect::<Vec<_>>().join(", ")
}

fn all_pass(parts: Vec<Outcome>) -> Outcome {
    let mut undecided = None;
    for o in parts {
        match o {
            Outcome::Fail(_) => return o,
            Outcome::Undecided(_) => undecided = undecided.or(Some(o)),
            Outcome::Pass => {}
        }
    }
    undecided.unwrap_or(Outcome::Pass)
}

/// Runs `f` once per class and merges: any failure fails, then any
/// undecided.
fn per_class<F>(g: &GroupTable, classes: &[ClassSpec], f: F) -> frlab_core::Result<Outcome>
where
    F: Fn(&GroupTable, &ClassSpec) -> frlab_core::Result<Outcome>,
{
    let parts = classes.iter().map(|x| tag(Outcome::from_result(f(g, x)), x)).collect();
    Ok(all_pass(parts))
}

fn subgroup_from(g: &GroupTable, elems: impl IntoIterator<Item = usize>) -> Subgroup {
    Subgroup::from_mask(Mask::from_indices(g.order(), elems))
}

fn member_of_quotient(g: &GroupTable, n: &Subgroup, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<bool> {
    if n.is_trivial() {
        return x.member(g, caps);
    }
    let (q, _) = quotient(g, n)?;
    x.member(&q, caps)
}

/// `Int_𝔑(G) = Z_𝔑(G) = Z_∞(G)`.
fn baer(g: &GroupTable, caps: &Caps) -> frlab_core::Result<Outcome> {
    let n = ClassSpec::nilpotent();
    let classical = hypercenter_classical(g);
    let z = hypercenter(g, &n, CentralMode::PreferCanonical, caps)?;
    let i = int_x(g, &n, caps)?;
    if z == classical && i == classical {
        Ok(Outcome::Pass)
    } else {
        Ok(Outcome::fail([("z_inf", sub(&classical)), ("z_n", sub(&z)), ("int_n", sub(&i))]))
    }
}

/// Independent oracles for the example classes, from the chief factors.
fn example_oracle(g: &GroupTable, item: u8, base: &ClassSpec, abelian_a: &frlab_core::rank::RankSet, caps: &Caps) -> frlab_core::Result<bool> {
    let factors = chief_series(g).factors(g);
    let whole = g.order();
    let inner = |cf: &ChiefFactor| join(g, &cf.upper, &cf.centralizer).size() == whole;
    // Centrality for a soluble base: non-abelian factors never are, abelian
    // ones are decided by the semidirect product only.
    let base_central = |cf: &ChiefFactor| -> frlab_core::Result<bool> {
        if !cf.is_abelian {
            return Ok(false);
        }
        Ok(is_f_central(g, cf, base, CentralMode::SemidirectOnly, caps)?.central)
    };
    Ok(match item {
        1 => ClassSpec::supersoluble().member(g, caps)?,
        2 => factors.iter().all(|cf| cf.rank == 1),
        3 => factors
            .iter()
            .all(|cf| cf.is_abelian || cf.type_key.order != 60 || cf.rank == 1),
        4 => is_soluble(g) && factors.iter().all(|cf| abelian_a.contains(cf.rank)),
        5 => ClassSpec::nilpotent().member(g, caps)?,
        6 => factors.iter().all(inner),
        7 => factors
            .iter()
            .all(|cf| if cf.is_abelian { cf.centralizer.size() == whole } else { cf.rank == 1 }),
        8 | 9 => {
            let mut ok = true;
            for cf in &factors {
                let escape = !cf.is_abelian && cf.rank == 1 && (item == 9 || inner(cf));
                if !escape && !base_central(cf)? {
                    ok = false;
                    break;
                }
            }
            ok
        }
        _ => return Err(CoreError::UnknownClass(format!("preset {item}"))),
    })
}

fn example1_items(opts: &VerifyOptions) -> Result<Vec<(u8, ClassSpec, ClassSpec)>> {
    let items: Vec<u8> = match opts.item {
        Some(i) if (1..=9).contains(&i) => vec![i],
        Some(i) => return Err(Error::Config(format!("example1 has items 1 to 9, not {i}"))),
        None => (1..=9).collect(),
    };
    let base = match opts.classes.first() {
        Some(c) => opts.registry.resolve(c)?,
        None => ClassSpec::nilpotent(),
    };
    let mut params = opts.registry.params.clone();
    params.base = Some(base.clone());
    items
        .into_iter()
        .map(|i| {
            let (b, r) = preset(i, &params)?;
            let x = frlab_core::fr::fr_class(&b, &r)?.with_id(r.id.clone());
            Ok((i, x, b))
        })
        .collect()
}

fn example1(g: &GroupTable, items: &[(u8, ClassSpec, ClassSpec)], a: &frlab_core::rank::RankSet, caps: &Caps) -> frlab_core::Result<Outcome> {
    for (i, x, base) in items {
        let m = x.member(g, caps)?;
        let o = example_oracle(g, *i, base, a, caps)?;
        if m != o {
            return Ok(Outcome::fail([
                ("item", i.to_string()),
                ("class", x.id().to_string()),
                ("member", m.to_string()),
                ("oracle", o.to_string()),
            ]));
        }
    }
    Ok(Outcome::Pass)
}

/// Quasinilpotent exactly when `G/Z_∞(G)` is semisimple.
fn c21(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let m = x.member(g, caps)?;
    let (q, _) = quotient(g, &hypercenter_classical(g))?;
    let s = is_semisimple(&q);
    Ok(if m == s {
        Outcome::Pass
    } else {
        Outcome::fail([("member", m.to_string()), ("quotient_semisimple", s.to_string())])
    })
}

/// Quotient closure, subdirect closure and soluble saturation on one group.
fn mt1_closure(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let normals = g.normal_subgroup_list();
    let member: Vec<bool> = normals
        .iter()
        .map(|n| member_of_quotient(g, n, x, caps))
        .collect::<frlab_core::Result<_>>()?;
    let idx = |s: &Subgroup| normals.iter().position(|n| n == s).expect("normal subgroup listed");
    for (i, m) in normals.iter().enumerate() {
        if !member[i] {
            continue;
        }
        for (j, n) in normals.iter().enumerate() {
            if m.is_subgroup_of(n) && !member[j] {
                return Ok(Outcome::fail([
                    ("property", "quotient closure".to_string()),
                    ("member_mod", sub(m)),
                    ("non_member_mod", sub(n)),
                ]));
            }
        }
    }
    let g_member = member[idx(&g.trivial())];
    if !g_member {
        for (i, m) in normals.iter().enumerate() {
            for (j, n) in normals.iter().enumerate().skip(i + 1) {
                if member[i] && member[j] && m.intersection(n).is_trivial() {
                    return Ok(Outcome::fail([
                        ("property", "subdirect closure".to_string()),
                        ("m", sub(m)),
                        ("n", sub(n)),
                    ]));
                }
            }
        }
        let r = soluble_radical(g);
        let (rt, emb) = induced_table(g, &r);
        let phi_r = frattini(&rt, caps)?;
        let phi = subgroup_from(g, phi_r.iter().map(|i| emb[i]));
        if member[idx(&phi)] {
            return Ok(Outcome::fail([
                ("property", "soluble saturation".to_string()),
                ("frattini_of_radical", sub(&phi)),
            ]));
        }
    }
    Ok(Outcome::Pass)
}

/// Every normal subgroup of a member is a member.
fn mt1_hered(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    if !x.member(g, caps)? {
        return Ok(Outcome::Pass);
    }
    for n in g.normal_subgroup_list() {
        if n.size() == g.order() {
            continue;
        }
        if !x.member(&induced_table(g, n).0, caps)? {
            return Ok(Outcome::fail([("normal_subgroup", sub(n))]));
        }
    }
    Ok(Outcome::Pass)
}

/// `Z_X(G) ≤ Int_X(G)`.
fn p7(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let z = hypercenter(g, x, CentralMode::PreferCanonical, caps)?;
    let i = int_x(g, x, caps)?;
    Ok(if z.is_subgroup_of(&i) {
        Outcome::Pass
    } else {
        Outcome::fail([("z", sub(&z)), ("int", sub(&i))])
    })
}

fn t2_equiv(g: &GroupTable, base: &ClassSpec, r: &RankSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let t = t2_structure(g, base, r, caps)?;
    Ok(if t.agree() {
        Outcome::Pass
    } else {
        Outcome::fail([
            ("v1", t.v1.to_string()),
            ("v2", t.v2.to_string()),
            ("v3", format!("{} ({}, {}, {})", t.v3(), t.v3a, t.v3b, t.v3c)),
            ("n", t.n.to_string()),
        ])
    })
}

/// The class locally defined by the canonical definition coincides with the
/// effective base.
fn t32(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let local = locally_defined(x)?;
    let base = x
        .as_fr()
        .and_then(|f| f.effective_base())
        .ok_or_else(|| CoreError::MissingDefinition(x.id().into()))?;
    let a = local.member(g, caps)?;
    let b = base.member(g, caps)?;
    Ok(if a == b {
        Outcome::Pass
    } else {
        Outcome::fail([("locally_defined", a.to_string()), (base.id(), b.to_string())])
    })
}

fn shemetkov(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let v = shemetkov_check(g, x, CentralMode::PreferCanonical, caps)?;
    Ok(if v.equal {
        Outcome::Pass
    } else {
        Outcome::fail([
            ("z", sub(&v.z)),
            ("int", sub(&v.int)),
            ("z_leq_int", v.z_leq_int.to_string()),
        ])
    })
}

/// Abelian chief factors below `Int_X(G)` are central in `G` (the saturated
/// part of these classes is `𝔑`).
fn t3_forward(g: &GroupTable, x: &ClassSpec, local: &ClassSpec, caps: &Caps) -> frlab_core::Result<Outcome> {
    let i = int_x(g, x, caps)?;
    for cf in chief_series_through(g, &i)?.factors(g) {
        if !cf.upper.is_subgroup_of(&i) || !cf.is_abelian {
            continue;
        }
        if !is_f_central(g, &cf, local, CentralMode::PreferCanonical, caps)?.central {
            return Ok(Outcome::fail([("int", sub(&i)), ("eccentric_factor_upper", sub(&cf.upper))]));
        }
    }
    Ok(Outcome::Pass)
}

/// Both centrality routes on every chief factor where both apply.
fn route(g: &GroupTable, classes: &[ClassSpec], caps: &Caps) -> frlab_core::Result<Outcome> {
    let factors = chief_series(g).factors(g);
    let (mut compared, mut skipped) = (0usize, 0usize);
    for x in classes {
        for cf in &factors {
            match is_f_central(g, cf, x, CentralMode::Both, caps) {
                Ok(c) if c.route == Route::Both => compared += 1,
                Ok(_) => skipped += 1,
                Err(CoreError::RouteDisagreement(m)) => {
                    return Ok(Outcome::fail([("class", x.id().to_string()), ("disagreement", m)]))
                }
                Err(CoreError::Undecidable(_)) => skipped += 1,
                Err(e) => return Err(e),
            }
        }
    }
    if compared == 0 && skipped > 0 {
        return Ok(Outcome::Undecided(detail([(
            "reason",
            format!("no factor decidable by both routes ({skipped} skipped)"),
        )])));
    }
    Ok(Outcome::Pass)
}

fn ascending(g: &GroupTable, classes: &[ClassSpec], caps: &Caps) -> frlab_core::Result<Outcome> {
    for x in classes {
        let a = hypercenter(g, x, CentralMode::PreferCanonical, caps)?;
        let b = hypercenter_ascending(g, x, CentralMode::PreferCanonical, caps)?;
        if a != b {
            return Ok(Outcome::fail([
                ("class", x.id().to_string()),
                ("lattice", sub(&a)),
                ("ascending", sub(&b)),
            ]));
        }
    }
    Ok(Outcome::Pass)
}

/// The simple groups of the known-facts table as recipes.
pub const SIMPLE_RECIPES: [(u64, &str); 8] = [
    (60, "alternating(5)"),
    (168, "psl2(7)"),
    (360, "alternating(6)"),
    (504, "psl2(8)"),
    (660, "psl2(11)"),
    (1092, "psl2(13)"),
    (2448, "psl2(17)"),
    (2520, "alternating(7)"),
];

/// Out facts for every table entry buildable within `caps`, and the orders
/// left out.
pub fn out_facts(caps: &Caps) -> Result<(Vec<OutFact>, Vec<u64>)> {
    let mut facts = Vec::new();
    let mut missing = Vec::new();
    for (order, text) in SIMPLE_RECIPES {
        match parse_recipe(text)?.eval(caps, None) {
            Ok(s) => match OutFact::new(s, caps) {
                Ok(f) => facts.push(f),
                Err(CoreError::OrderCapExceeded { .. }) => missing.push(order),
                Err(e) => return Err(e.into()),
            },
            Err(Error::Group(CoreError::OrderCapExceeded { .. })) => missing.push(order),
            Err(e) => return Err(e),
        }
    }
    Ok((facts, missing))
}

/// The three conditions of the nilpotent-base criterion, over the table of
/// known simple groups.
pub fn c31_conditions(r: &RankSpec, facts: &[OutFact], caps: &Caps) -> Result<(bool, String)> {
    let mut notes = Vec::new();
    let bounded = r.max_rank_nonabelian().is_some_and(|m| m <= 2);
    if !bounded {
        notes.push("ranks of non-abelian types exceed 2".to_string());
    }
    let v = t3_condition(&ClassSpec::nilpotent(), r, facts, caps)?;
    for f in &v.failures {
        notes.push(format!("Out of the simple group of order {} fails for n = {}", f.order, f.n));
    }
    let holds = bounded && v.holds;
    Ok((holds, if notes.is_empty() { "hold on the known simple groups".into() } else { notes.join("; ") }))
}

fn fr_parts(x: &ClassSpec) -> Result<(ClassSpec, RankSpec)> {
    let fr = x
        .as_fr()
        .ok_or_else(|| Error::Config(format!("`{}` is not a class of the form fr(base, rank)", x.id())))?;
    Ok((fr.base.clone(), fr.rank.clone()))
}

fn outtable(opts: &VerifyOptions, started: Instant) -> Result<CheckReport> {
    let caps = &opts.caps;
    let mut outcomes = Vec::new();
    for (order, text) in SIMPLE_RECIPES {
        let label = format!("{text} (order {order})");
        if order as usize > caps.automorphism {
            outcomes.push((label, Outcome::Undecided(detail([("reason", "above the automorphism cap")]))));
            continue;
        }
        let g = match parse_recipe(text)?.eval(caps, None) {
            Ok(g) => g,
            Err(Error::Group(e)) => {
                outcomes.push((label, Outcome::from_result(Err(e))));
                continue;
            }
            Err(e) => return Err(e),
        };
        let o = Outcome::from_result(OutFact::new(g, caps).map(|f| {
            if f.verified {
                Outcome::Pass
            } else {
                Outcome::Undecided(detail([("reason", "not verified")]))
            }
        }));
        outcomes.push((label, o));
    }
    debug_assert_eq!(outcomes.len(), KNOWN_OUT.len());
    Ok(CheckReport::tally(
        "outtable",
        ReportKind::Check,
        Detail::new(),
        "known-out",
        caps,
        outcomes,
        started,
    ))
}

/// Runs a check over `opts.tier`.
pub fn verify(check: &str, opts: &VerifyOptions) -> Result<CheckReport> {
    if !CHECKS.contains(&check) {
        return Err(Error::UnknownCheck(check.to_string()));
    }
    let started = Instant::now();
    if check == "outtable" {
        return outtable(opts, started);
    }
    let items = catalog_items(opts.tier, &opts.caps)?;
    verify_items(check, opts, &items, started)
}

/// Runs a check over an explicit universe.
pub fn verify_items(check: &str, opts: &VerifyOptions, items: &[Item], started: Instant) -> Result<CheckReport> {
    let caps = &opts.caps;
    let jobs = opts.jobs;
    let mut params = Detail::new();
    let mut kind = ReportKind::Check;
    let outcomes = match check {
        "baer" => {
            params.insert("class".into(), "nilpotent".into());
            run_items(items, jobs, |g| baer(g, caps))
        }
        "example1" => {
            let its = example1_items(opts)?;
            let a = opts.registry.params.abelian_a.clone();
            params.insert("items".into(), its.iter().map(|(i, x, _)| format!("{i}:{}", x.id())).collect::<Vec<_>>().join(", "));
            run_items(items, jobs, |g| example1(g, &its, &a, caps))
        }
        "c21" => {
            let x = opts.classes_or(&["n_star"])?.remove(0);
            params.insert("class".into(), x.id().into());
            run_items(items, jobs, |g| c21(g, &x, caps))
        }
        "mt1_closure" | "mt1_hered" | "p7" | "t32" => {
            let defaults: &[&str] = match check {
                "mt1_closure" => &["u_c", "n_star", "n_ca"],
                _ => &["n_star", "u_c"],
            };
            let classes = opts.classes_or(defaults)?;
            if check == "mt1_hered" {
                for x in &classes {
                    x.require("normally_hereditary")?;
                }
            }
            params.insert("classes".into(), ids(&classes));
            let f: fn(&GroupTable, &ClassSpec, &Caps) -> frlab_core::Result<Outcome> = match check {
                "mt1_closure" => mt1_closure,
                "mt1_hered" => mt1_hered,
                "p7" => p7,
                _ => t32,
            };
            run_items(items, jobs, |g| per_class(g, &classes, |g, x| f(g, x, caps)))
        }
        "t2_equiv" => {
            let base = opts.classes_or(&["nilpotent"])?.remove(0);
            let r = opts.registry.rank(opts.rank.as_deref().unwrap_or("n_star"))?;
            params.insert("base".into(), base.id().into());
            params.insert("rank".into(), r.id.clone());
            run_items(items, jobs, |g| t2_equiv(g, &base, &r, caps))
        }
        "shemetkov" => {
            let classes = opts.classes_or(&["n_star"])?;
            params.insert("classes".into(), ids(&classes));
            run_items(items, jobs, |g| per_class(g, &classes, |g, x| shemetkov(g, x, caps)))
        }
        "c31" => {
            let x = opts.classes_or(&["preset(8, nilpotent)"])?.remove(0);
            let (base, r) = fr_parts(&x)?;
            if !matches!(base.kind(), ClassKind::Nilpotent) {
                return Err(Error::Config(format!("c31 needs a nilpotent base, got `{}`", base.id())));
            }
            if !r.is_very_good() {
                return Err(Error::Config(format!("c31 needs a very good rank function, `{}` is not", r.id)));
            }
            let (facts, missing) = out_facts(caps)?;
            let (holds, why) = c31_conditions(&r, &facts, caps)?;
            params.insert("class".into(), x.id().into());
            params.insert("conditions".into(), why);
            if !missing.is_empty() {
                params.insert("simple_orders_beyond_caps".into(), format!("{missing:?}"));
            }
            if !holds {
                kind = ReportKind::Search;
            }
            run_items(items, jobs, |g| shemetkov(g, &x, caps))
        }
        "t3_forward" => {
            let classes = opts.classes_or(&["n_star", "n_ca"])?;
            let mut pairs = Vec::new();
            for x in classes {
                let local = x
                    .as_fr()
                    .and_then(|f| f.effective_base())
                    .filter(|b| matches!(b.kind(), ClassKind::Nilpotent))
                    .ok_or_else(|| Error::Config(format!("t3_forward needs a class whose saturated part is nilpotent, got `{}`", x.id())))?;
                pairs.push((x, local));
            }
            params.insert("classes".into(), pairs.iter().map(|p| p.0.id()).collect::<Vec<_>>().join(", "));
            run_items(items, jobs, |g| {
                let parts = pairs
                    .iter()
                    .map(|(x, l)| t3_forward(g, x, l, caps).map(|o| tag(o, x)))
                    .collect::<frlab_core::Result<Vec<_>>>()?;
                Ok(all_pass(parts))
            })
        }
        "route" => {
            let classes = opts.classes_or(&["nilpotent", "supersoluble", "soluble", "u_c", "n_star", "n_ca", "preset(8, nilpotent)"])?;
            params.insert("classes".into(), ids(&classes));
            run_items(items, jobs, |g| route(g, &classes, caps))
        }
        "ascending" => {
            let classes = opts.classes_or(&["nilpotent", "supersoluble"])?;
            params.insert("classes".into(), ids(&classes));
            run_items(items, jobs, |g| ascending(g, &classes, caps))
        }
        _ => return Err(Error::UnknownCheck(check.to_string())),
    };
    Ok(CheckReport::tally(
        check,
        kind,
        params,
        &opts.tier.to_string(),
        caps,
        outcomes,
        started,
    ))
}

fn tag(o: Outcome, x: &ClassSpec) -> Outcome {
    match o {
        Outcome::Fail(mut d) => {
            d.insert("class".into(), x.id().into());
            Outcome::Fail(d)
        }
        o => o,
    }
}
