//! The classes `𝔉(ℛ)`, the subgroups `Z(G, ℛ, 𝔉, n)`, the three-way
//! structure test and the standard presets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::charsub::{is_soluble, socle};
use crate::class::{e_closure, is_f_central, residual, CentralMode, ClassFlags, ClassKind, ClassSpec};
use crate::error::{Error, Result};
use crate::families::{alternating, cyclic};
use crate::quotient::{quotient, quotient_section};
use crate::rank::{RankEntry, RankSet, RankSpec, Selector};
use crate::series::{chief_series, gr_in_r, largest_normal_where, ChiefFactor, ChiefSeries, GrDecision};
use crate::subgroup::{minimal_normal_subgroups, normal_join_where, Subgroup};
use crate::table::{induced_table, is_prime, GroupTable};

/// Default bound `M` for preset rank functions.
pub const DEFAULT_BOUND: u32 = 16;

/// `𝔉(ℛ)` as data: the base class and the rank function.
#[derive(Clone, Debug)]
pub struct FrClass {
    pub base: ClassSpec,
    pub rank: RankSpec,
}

impl FrClass {
    /// The canonical local definition carried over from the base.
    ///
    /// Over the trivial base the abelian entry decides it: `({1},∅)` gives the
    /// supersoluble definition, `(∅,{1})` the nilpotent one and `(∅,∅)` the
    /// empty one, since the class then coincides with `𝔘(ℛ)`, `𝔑(ℛ)` or
    /// `𝔈(ℛ)` respectively on abelian factors.
    pub fn local_def(&self, p: u64) -> Option<ClassSpec> {
        if self.base.flags().contains_nilpotent {
            return self.base.local_def(p);
        }
        if !matches!(self.base.kind(), ClassKind::Trivial) {
            return None;
        }
        let e = self.rank.resolve(&crate::rank::SimpleTypeKey::cyclic(p));
        abelian_pattern(&e.a, &e.b)?.local_def(p)
    }

    /// The local base whose saturated part this class shares.
    pub fn effective_base(&self) -> Option<ClassSpec> {
        let f = self.base.flags();
        if f.contains_nilpotent && f.saturated {
            return Some(self.base.clone());
        }
        if !matches!(self.base.kind(), ClassKind::Trivial) {
            return None;
        }
        let (a, b) = self.rank.uniform_abelian()?;
        abelian_pattern(a, b)
    }
}

fn abelian_pattern(a: &RankSet, b: &RankSet) -> Option<ClassSpec> {
    let one = RankSet::of([1]);
    if a == &one && b.is_empty() {
        Some(ClassSpec::supersoluble())
    } else if a.is_empty() && b == &one {
        Some(ClassSpec::nilpotent())
    } else if a.is_empty() && b.is_empty() {
        Some(ClassSpec::trivial())
    } else {
        None
    }
}

/// The derived class spec of `𝔉(ℛ)`.
pub fn fr_class(base: &ClassSpec, r: &RankSpec) -> Result<ClassSpec> {
    let bf = base.flags();
    if !bf.formation {
        return Err(Error::NotAFormation(base.id().into()));
    }
    let fr = FrClass {
        base: base.clone(),
        rank: r.clone(),
    };
    let contains_nilpotent = bf.contains_nilpotent
        || fr
            .effective_base()
            .is_some_and(|e| e.flags().contains_nilpotent);
    let flags = ClassFlags {
        formation: true,
        solubly_saturated: true,
        normally_hereditary: bf.normally_hereditary && r.is_good(),
        contains_nilpotent,
        ..ClassFlags::default()
    };
    Ok(ClassSpec::from_fr(format!("fr({},{})", base.id(), r.id), fr, flags))
}

/// Verdict on one chief factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorVerdict {
    pub upper: Subgroup,
    pub lower: Subgroup,
    pub order: usize,
    pub rank: u32,
    pub central: bool,
    /// Whether the factor itself lies in the base (eccentric factors only).
    pub in_base: Option<bool>,
    pub gr: Option<GrDecision>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrDecision {
    pub member: bool,
    pub factor_log: Vec<FactorVerdict>,
}

fn judge(g: &GroupTable, cf: &ChiefFactor, base: &ClassSpec, r: &RankSpec, mode: CentralMode, caps: &Caps) -> Result<FactorVerdict> {
    let central = is_f_central(g, cf, base, mode, caps)?.central;
    let mut v = FactorVerdict {
        upper: cf.upper.clone(),
        lower: cf.lower.clone(),
        order: cf.factor_order,
        rank: cf.rank,
        central,
        in_base: None,
        gr: None,
        ok: central,
    };
    if !central {
        let in_base = base.member(&cf.section.table, caps)?;
        v.in_base = Some(in_base);
        if !in_base {
            let d = gr_in_r(g, cf, r, caps)?;
            v.ok = d.in_r;
            v.gr = Some(d);
        }
    }
    Ok(v)
}

/// Membership in `𝔉(ℛ)` along the given chief series. With `full` unset the
/// log stops at the first failing factor.
pub fn in_fr_along(
    g: &GroupTable,
    base: &ClassSpec,
    r: &RankSpec,
    series: &ChiefSeries,
    mode: CentralMode,
    full: bool,
    caps: &Caps,
) -> Result<FrDecision> {
    let mut log = Vec::new();
    let mut member = true;
    for w in series.terms.windows(2) {
        let cf = ChiefFactor::build(g, &w[1], &w[0]);
        let v = judge(g, &cf, base, r, mode, caps)?;
        member &= v.ok;
        log.push(v);
        if !member && !full {
            break;
        }
    }
    Ok(FrDecision {
        member,
        factor_log: log,
    })
}

/// `G ∈ 𝔉(ℛ)`, deciding centrality canonically where possible.
pub fn in_fr(g: &GroupTable, base: &ClassSpec, r: &RankSpec, caps: &Caps) -> Result<FrDecision> {
    in_fr_along(g, base, r, &chief_series(g), CentralMode::PreferCanonical, false, caps)
}

/// The defining property of `Z(G, ℛ, 𝔉, n)` for a single chief factor.
fn z_property(g: &GroupTable, cf: &ChiefFactor, base: &ClassSpec, r: &RankSpec, n: u32, caps: &Caps) -> Result<bool> {
    if is_f_central(g, cf, base, CentralMode::PreferCanonical, caps)?.central {
        return Ok(true);
    }
    if cf.rank <= n || base.member(&cf.section.table, caps)? {
        return Ok(false);
    }
    Ok(gr_in_r(g, cf, r, caps)?.in_r)
}

/// `Z(G, ℛ, 𝔉, n)`: the largest normal subgroup every `G`-chief factor below
/// which is `𝔉`-central or is outside `𝔉` with rank above `n` and
/// generalized rank in `ℛ`.
pub fn z_grfn(g: &GroupTable, r: &RankSpec, base: &ClassSpec, n: u32, caps: &Caps) -> Result<Subgroup> {
    largest_normal_where(g, |cf| z_property(g, cf, base, r, n, caps))
}

/// The constant `n` of statement (3): the least `n` such that `S_{n+1}` has
/// a simple section outside the base.
///
/// Simple sections of `S_k` for `k ≤ 6` are `C_p` (`p ≤ k`), `A_5` (from
/// `k = 5`) and `A_6` (from `k = 6`); each is already a subgroup of the same
/// degree, so the section and subgroup readings agree on this range.
pub fn t2_constant(base: &ClassSpec, caps: &Caps) -> Result<u32> {
    let big = Caps {
        table_order: caps.table_order.max(360),
        ..*caps
    };
    for k in 2..=6usize {
        let mut fresh = Vec::new();
        if is_prime(k as u64) {
            fresh.push(cyclic(k, caps)?);
        }
        if k >= 5 {
            fresh.push(alternating(k, &big)?);
        }
        for s in fresh {
            if !base.member(&s, caps)? {
                return Ok(k as u32 - 1);
            }
        }
    }
    Err(Error::Undecidable(format!(
        "every simple section of S_6 lies in {}; the scan stops at degree 6",
        base.id()
    )))
}

/// The three verdicts of the structure theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T2Report {
    pub v1: bool,
    pub v2: bool,
    pub v3a: bool,
    pub v3b: bool,
    pub v3c: bool,
    pub z4: Subgroup,
    pub n: u32,
    pub t: Subgroup,
}

impl T2Report {
    pub fn v3(&self) -> bool {
        self.v3a && self.v3b && self.v3c
    }

    pub fn agree(&self) -> bool {
        self.v1 == self.v2 && self.v2 == self.v3()
    }
}

/// Minimal normal subgroups of `G/T` as chief factors `N/T` of `G`.
fn minimal_over(g: &GroupTable, t: &Subgroup) -> Result<(crate::quotient::Section, Vec<ChiefFactor>)> {
    let sec = quotient_section(g, t)?;
    let cfs = minimal_normal_subgroups(&sec.table)
        .iter()
        .map(|m| ChiefFactor::build(g, &sec.preimage(m), t))
        .collect();
    Ok((sec, cfs))
}

pub fn t2_structure(g: &GroupTable, base: &ClassSpec, r: &RankSpec, caps: &Caps) -> Result<T2Report> {
    for flag in ["solubly_saturated", "contains_nilpotent", "contains_own_composition_factors"] {
        base.require(flag)?;
    }
    let v1 = in_fr(g, base, r, caps)?.member;

    let z4 = z_grfn(g, r, base, 4, caps)?;
    let (sec, cfs) = minimal_over(g, &z4)?;
    let mut v2 = true;
    for cf in &cfs {
        if !(1..=4).contains(&cf.rank) || !gr_in_r(g, cf, r, caps)?.in_r {
            v2 = false;
            break;
        }
    }
    if v2 {
        let (top, _) = quotient(&sec.table, &socle(&sec.table))?;
        v2 = is_soluble(&top) && base.member(&top, caps)?;
    }

    let ef = e_closure(base);
    let gf = residual(g, base, caps)?;
    let v3a = gf == residual(g, &ef, caps)?;

    let (rt, emb) = induced_table(g, &gf);
    let mut v3b = true;
    for n in g.normal_subgroup_list().iter().filter(|n| n.is_subgroup_of(&gf)) {
        let local = Subgroup::from_mask(crate::mask::Mask::from_indices(
            rt.order(),
            (0..rt.order()).filter(|&i| n.contains(emb[i])),
        ));
        let (q, _) = quotient(&rt, &local)?;
        let mut failed = None;
        let radical = normal_join_where(&q, |m| match ef.member_subgroup(&q, m, caps) {
            Ok(b) => b,
            Err(e) => {
                failed = Some(e);
                false
            }
        });
        if let Some(e) = failed {
            return Err(e);
        }
        if radical != crate::charsub::center(&q) {
            v3b = false;
            break;
        }
    }

    let n = t2_constant(base, caps)?;
    let t = gf.intersection(&z_grfn(g, r, base, n, caps)?);
    let (sec_t, cfs_t) = minimal_over(g, &t)?;
    let gf_bar = sec_t.image(&gf);
    let mut v3c = gf_bar.is_subgroup_of(&socle(&sec_t.table));
    if v3c {
        for cf in cfs_t.iter().filter(|cf| cf.upper.is_subgroup_of(&gf)) {
            if base.member(&cf.section.table, caps)? || cf.rank > n || !gr_in_r(g, cf, r, caps)?.in_r {
                v3c = false;
                break;
            }
        }
    }
    Ok(T2Report {
        v1,
        v2,
        v3a,
        v3b,
        v3c,
        z4,
        n,
        t,
    })
}

/// Parameters of the presets; each preset reads only what it needs.
#[derive(Clone, Debug)]
pub struct PresetParams {
    pub bound: u32,
    /// Orders of the simple types forming `𝔍` (item 3).
    pub types: Vec<u64>,
    /// `A` for abelian types (item 4).
    pub abelian_a: RankSet,
    /// Base for items 8 and 9: nilpotent or supersoluble.
    pub base: Option<ClassSpec>,
}

impl Default for PresetParams {
    fn default() -> Self {
        PresetParams {
            bound: DEFAULT_BOUND,
            types: alloc::vec![60],
            abelian_a: RankSet::of([1]),
            base: None,
        }
    }
}

pub const PRESET_NAMES: [&str; 9] = [
    "u_by_rank",
    "u_c",
    "jc_supersoluble",
    "rank_function",
    "n_by_rank",
    "n_star",
    "n_ca",
    "f_star",
    "f_ca",
];

/// The base class and rank function of a standard example, `1 ≤ item ≤ 9`.
pub fn preset(item: u8, params: &PresetParams) -> Result<(ClassSpec, RankSpec)> {
    let m = params.bound;
    let none = RankSet::empty;
    let one = || RankSet::of([1]);
    let name = |i: u8| String::from(PRESET_NAMES[i as usize - 1]);
    let trivial = ClassSpec::trivial();
    let supported_base = || -> Result<ClassSpec> {
        let b = params
            .base
            .clone()
            .ok_or_else(|| Error::UnsupportedBase("items 8 and 9 need a base".into()))?;
        if !matches!(b.kind(), ClassKind::Nilpotent | ClassKind::Supersoluble) {
            return Err(Error::UnsupportedBase(b.id().into()));
        }
        Ok(b)
    };
    let r = match item {
        1 => (trivial, RankSpec::split(name(1), m, (one(), none()), (none(), none()))?),
        2 => (trivial, RankSpec::constant(name(2), m, one(), none())?),
        3 => {
            let mut entries: Vec<RankEntry> = params
                .types
                .iter()
                .map(|&o| RankEntry {
                    selector: Selector::Order(o),
                    a: one(),
                    b: none(),
                })
                .collect();
            entries.push(RankEntry {
                selector: Selector::Default,
                a: RankSet::all(m),
                b: none(),
            });
            (trivial, RankSpec::new(name(3), m, entries)?)
        }
        4 => (trivial, RankSpec::split(name(4), m, (params.abelian_a.clone(), none()), (none(), none()))?),
        5 => (trivial, RankSpec::split(name(5), m, (none(), one()), (none(), none()))?),
        6 => (trivial, RankSpec::constant(name(6), m, none(), one())?),
        7 => (trivial, RankSpec::split(name(7), m, (none(), one()), (one(), none()))?),
        8 => {
            let b = supported_base()?;
            let id = format!("{}_star", b.id());
            (b, RankSpec::constant(id, m, none(), one())?)
        }
        9 => {
            let b = supported_base()?;
            let id = format!("{}_ca", b.id());
            (b, RankSpec::split(id, m, (none(), none()), (one(), none()))?)
        }
        _ => return Err(Error::UnknownClass(format!("preset {item}"))),
    };
    Ok(r)
}

/// `fr_class` of a preset, named after it.
pub fn preset_class(item: u8, params: &PresetParams) -> Result<ClassSpec> {
    let (base, r) = preset(item, params)?;
    let id = r.id.clone();
    Ok(fr_class(&base, &r)?.with_id(id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsub::{center, hypercenter_classical, is_semisimple};
    use crate::families::symmetric;
    use crate::perm::{from_permutations, parse_cycles};
    use crate::product::direct_product;
    use crate::series::chief_series_with;
    use crate::series::TieBreak;

    fn c() -> Caps {
        Caps::default()
    }

    fn sl25() -> GroupTable {
        let gens = [
            "(5 6 7 8 9)(10 12 14 11 13)(15 18 16 19 17)(20 24 23 22 21)",
            "(1 5 4 20)(2 10 3 15)(6 9 24 21)(7 14 23 16)(8 19 22 11)(12 13 18 17)",
        ];
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(24, s, 1).unwrap()).collect();
        from_permutations(24, &gens, &c()).unwrap()
    }

    fn params() -> PresetParams {
        PresetParams::default()
    }

    fn star(base: ClassSpec) -> (ClassSpec, RankSpec) {
        preset(8, &PresetParams { base: Some(base), ..params() }).unwrap()
    }

    #[test]
    fn membership_examples() {
        let (e, uc) = preset(2, &params()).unwrap();
        let a5 = alternating(5, &c()).unwrap();
        assert!(in_fr(&a5, &e, &uc, &c()).unwrap().member);
        let s4 = symmetric(4, &c()).unwrap();
        let d = in_fr(&s4, &e, &uc, &c()).unwrap();
        assert!(!d.member);
        assert_eq!(d.factor_log[0].rank, 2);
        let (n, nstar) = star(ClassSpec::nilpotent());
        let s5 = symmetric(5, &c()).unwrap();
        let d = in_fr(&s5, &n, &nstar, &c()).unwrap();
        assert!(!d.member);
        assert!(d.factor_log[0].gr.as_ref().unwrap().witness.is_some());
        let (e6, r6) = preset(6, &params()).unwrap();
        assert!(in_fr(&sl25(), &e6, &r6, &c()).unwrap().member);
    }

    #[test]
    fn presets_one_and_five_on_small_groups() {
        let u = ClassSpec::supersoluble();
        let nil = ClassSpec::nilpotent();
        let p1 = preset_class(1, &params()).unwrap();
        let p5 = preset_class(5, &params()).unwrap();
        for g in [
            symmetric(3, &c()).unwrap(),
            symmetric(4, &c()).unwrap(),
            alternating(4, &c()).unwrap(),
            crate::families::dihedral(8, &c()).unwrap(),
            crate::families::dicyclic(12, &c()).unwrap(),
            direct_product(&symmetric(3, &c()).unwrap(), &cyclic(3, &c()).unwrap(), &c()).unwrap(),
        ] {
            assert_eq!(p1.member(&g, &c()).unwrap(), u.member(&g, &c()).unwrap());
            assert_eq!(p5.member(&g, &c()).unwrap(), nil.member(&g, &c()).unwrap());
        }
    }

    #[test]
    fn jordan_holder_independence() {
        let (e, r) = preset(7, &params()).unwrap();
        let g = direct_product(&symmetric(3, &c()).unwrap(), &cyclic(6, &c()).unwrap(), &c()).unwrap();
        let a = in_fr_along(&g, &e, &r, &chief_series_with(&g, TieBreak::Least), CentralMode::Both, true, &c()).unwrap();
        let b = in_fr_along(&g, &e, &r, &chief_series_with(&g, TieBreak::Greatest), CentralMode::Both, true, &c()).unwrap();
        assert_eq!(a.member, b.member);
    }

    #[test]
    fn z_grfn_examples() {
        let (n, r) = star(ClassSpec::nilpotent());
        let g = sl25();
        let z = z_grfn(&g, &r, &n, 4, &c()).unwrap();
        assert_eq!(z, center(&g));
        let s4 = symmetric(4, &c()).unwrap();
        assert!(z_grfn(&s4, &r, &n, 4, &c()).unwrap().is_trivial());
        let d8 = crate::families::dihedral(8, &c()).unwrap();
        assert_eq!(z_grfn(&d8, &r, &n, 4, &c()).unwrap().size(), 8);
    }

    #[test]
    fn t2_examples() {
        let (n, r) = star(ClassSpec::nilpotent());
        let rep = t2_structure(&sl25(), &n, &r, &c()).unwrap();
        assert!(rep.v1 && rep.v2 && rep.v3(), "{rep:?}");
        assert_eq!(rep.n, 4);
        let rep = t2_structure(&symmetric(5, &c()).unwrap(), &n, &r, &c()).unwrap();
        assert!(!rep.v1 && !rep.v2 && !rep.v3(), "{rep:?}");
        let rep = t2_structure(&crate::families::dihedral(8, &c()).unwrap(), &n, &r, &c()).unwrap();
        assert!(rep.v1 && rep.agree());
        assert!(matches!(
            t2_structure(&sl25(), &ClassSpec::trivial(), &r, &c()),
            Err(Error::MissingFlag { .. })
        ));
    }

    #[test]
    fn quasinilpotent_iff_semisimple_mod_hypercenter() {
        let p6 = preset_class(6, &params()).unwrap();
        for g in [sl25(), symmetric(5, &c()).unwrap(), symmetric(4, &c()).unwrap(), alternating(5, &c()).unwrap()] {
            let (q, _) = quotient(&g, &hypercenter_classical(&g)).unwrap();
            assert_eq!(p6.member(&g, &c()).unwrap(), is_semisimple(&q));
        }
    }

    #[test]
    fn flags_and_goodness() {
        let p2 = preset_class(2, &params()).unwrap();
        assert!(p2.flags().solubly_saturated);
        let bad = RankSpec::new(
            "bad",
            8,
            alloc::vec![
                RankEntry { selector: Selector::Order(60), a: RankSet::of([4]), b: RankSet::empty() },
                RankEntry { selector: Selector::Default, a: RankSet::empty(), b: RankSet::empty() },
            ],
        )
        .unwrap();
        assert!(!fr_class(&ClassSpec::nilpotent(), &bad).unwrap().flags().normally_hereditary);
        let (n, r) = star(ClassSpec::nilpotent());
        assert!(fr_class(&n, &r).unwrap().flags().normally_hereditary);
        assert!(matches!(
            preset(8, &PresetParams { base: Some(ClassSpec::soluble()), ..params() }),
            Err(Error::UnsupportedBase(_))
        ));
        let eb = |i| preset_class(i, &params()).unwrap().as_fr().unwrap().effective_base().map(|b| String::from(b.id()));
        assert_eq!(eb(2).as_deref(), Some("supersoluble"));
        assert_eq!(eb(6).as_deref(), Some("nilpotent"));
        assert_eq!(eb(3), None);
    }
}
