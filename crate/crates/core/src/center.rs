//! `𝔛`-hypercenters, intersections of `𝔛`-maximal subgroups and the
//! constants bounding rank functions with `Int = Z`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::aut::out_order;
use crate::caps::Caps;
use crate::charsub::{fitting, generalized_fitting_tilde};
use crate::class::{is_f_central, s_critical, CentralMode, ClassKind, ClassSpec};
use crate::error::{Error, Result};
use crate::families::cyclic;
use crate::product::{direct_product, wreath_natural};
use crate::rank::{RankSpec, SimpleTypeKey};
use crate::series::{largest_normal_where, ChiefFactor};
use crate::subgroup::{all_subgroups, maximal_among, maximal_subgroups, minimal_normal_over, Subgroup};
use crate::table::{prime_divisors, profile_of, GroupTable};

/// `Z_𝔛(G)` by dynamic programming over the normal subgroup lattice.
pub fn hypercenter(g: &GroupTable, x: &ClassSpec, mode: CentralMode, caps: &Caps) -> Result<Subgroup> {
    largest_normal_where(g, |cf| Ok(is_f_central(g, cf, x, mode, caps)?.central))
}

/// `Z_𝔛(G)` by repeatedly adjoining an `𝔛`-central minimal normal subgroup
/// of `G/Z`.
pub fn hypercenter_ascending(g: &GroupTable, x: &ClassSpec, mode: CentralMode, caps: &Caps) -> Result<Subgroup> {
    let mut z = g.trivial();
    'grow: loop {
        for n in minimal_normal_over(g, &z) {
            let cf = ChiefFactor::build(g, &n, &z);
            if is_f_central(g, &cf, x, mode, caps)?.central {
                z = n;
                continue 'grow;
            }
        }
        return Ok(z);
    }
}

/// Inclusion-maximal subgroups lying in `X`.
pub fn x_maximal_subgroups(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> Result<Vec<Subgroup>> {
    if !x.member(&cyclic(1, caps)?, caps)? {
        return Err(Error::UnknownClass(format!("{} does not contain the trivial group", x.id())));
    }
    if x.member(g, caps)? {
        return Ok(alloc::vec![g.whole()]);
    }
    let mut members = Vec::new();
    for h in all_subgroups(g, caps)? {
        if x.member_subgroup(g, &h, caps)? {
            members.push(h);
        }
    }
    Ok(maximal_among(g, &members))
}

/// `Int_𝔛(G)`.
pub fn int_x(g: &GroupTable, x: &ClassSpec, caps: &Caps) -> Result<Subgroup> {
    Ok(x_maximal_subgroups(g, x, caps)?
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShemetkovVerdict {
    pub group: String,
    pub class: String,
    pub z: Subgroup,
    pub int: Subgroup,
    pub equal: bool,
    pub z_leq_int: bool,
    /// Up to four `𝔛`-maximal subgroups, smallest first.
    pub witnesses: Vec<Subgroup>,
}

pub fn shemetkov_check(g: &GroupTable, x: &ClassSpec, mode: CentralMode, caps: &Caps) -> Result<ShemetkovVerdict> {
    let z = hypercenter(g, x, mode, caps)?;
    let maxes = x_maximal_subgroups(g, x, caps)?;
    let int = maxes.iter().fold(g.whole(), |acc, m| acc.intersection(m));
    Ok(ShemetkovVerdict {
        group: g.label().into(),
        class: x.id().into(),
        equal: z == int,
        z_leq_int: z.is_subgroup_of(&int),
        witnesses: maxes.into_iter().take(4).collect(),
        z,
        int,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Bound {
    pub value: usize,
    pub witness: String,
}

/// Least `max |M| − 1` over corpus groups that are s-critical for `X` with
/// `F(G) = F̃(G)`: an upper bound for `C₁`.
pub fn c1_constant(x: &ClassSpec, corpus: &[(String, GroupTable)], caps: &Caps) -> Result<C1Bound> {
    let mut best: Option<C1Bound> = None;
    for (label, g) in corpus {
        if g.order() > caps.subgroup_enumeration || g.order() == 1 {
            continue;
        }
        if !s_critical(g, x, caps)? || fitting(g) != generalized_fitting_tilde(g, caps)? {
            continue;
        }
        let m = maximal_subgroups(g, caps)?.iter().map(|m| m.size()).max().unwrap_or(1);
        if best.as_ref().is_none_or(|b| m - 1 < b.value) {
            best = Some(C1Bound {
                value: m - 1,
                witness: label.clone(),
            });
        }
    }
    best.ok_or(Error::NoCandidate)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum C2Source {
    Table,
    Scan,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Value {
    pub value: u64,
    pub source: C2Source,
    /// Table values: the spot check on the corpus passed.
    pub spot_checked: bool,
}

/// Largest `m` with every `{q ≤ m}`-group in `X`.
///
/// Built-in nilpotent and supersoluble classes come from a table and are
/// spot-checked; other classes are scanned over the corpus, which only gives
/// lower-bound evidence.
pub fn c2_constant(x: &ClassSpec, corpus: &[(String, GroupTable)], caps: &Caps) -> Result<C2Value> {
    let bounded = |m: u64| -> Result<bool> {
        for (_, g) in corpus {
            if prime_divisors(g.order() as u64).iter().all(|&p| p <= m) && !x.member(g, caps)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let table = match x.kind() {
        ClassKind::Nilpotent | ClassKind::Supersoluble => Some(2),
        _ => None,
    };
    if let Some(v) = table {
        let outside = corpus.iter().try_fold(false, |found, (_, g)| -> Result<bool> {
            Ok(found || (prime_divisors(g.order() as u64).iter().all(|&p| p <= 3) && !x.member(g, caps)?))
        })?;
        return Ok(C2Value {
            value: v,
            source: C2Source::Table,
            spot_checked: bounded(2)? && outside,
        });
    }
    let mut primes: Vec<u64> = corpus
        .iter()
        .flat_map(|(_, g)| prime_divisors(g.order() as u64))
        .collect();
    primes.sort_unstable();
    primes.dedup();
    let mut value = 1;
    for p in primes {
        if !bounded(p)? {
            break;
        }
        value = p;
    }
    Ok(C2Value {
        value,
        source: C2Source::Scan,
        spot_checked: false,
    })
}

/// Shape of `Out(S)` for the simple groups of the known-facts table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutShape {
    Cyclic(usize),
    /// `C₂ × C₂`.
    Klein,
}

impl OutShape {
    pub fn order(self) -> usize {
        match self {
            OutShape::Cyclic(n) => n,
            OutShape::Klein => 4,
        }
    }

    pub fn table(self, caps: &Caps) -> Result<GroupTable> {
        match self {
            OutShape::Cyclic(n) => cyclic(n, caps),
            OutShape::Klein => direct_product(&cyclic(2, caps)?, &cyclic(2, caps)?, caps),
        }
    }
}

/// `|S| ↦ Out(S)` for `A₅, PSL(2,7), A₆, PSL(2,8), PSL(2,11), PSL(2,13),
/// PSL(2,17), A₇`.
pub const KNOWN_OUT: [(u64, OutShape); 8] = [
    (60, OutShape::Cyclic(2)),
    (168, OutShape::Cyclic(2)),
    (360, OutShape::Klein),
    (504, OutShape::Cyclic(3)),
    (660, OutShape::Cyclic(2)),
    (1092, OutShape::Cyclic(2)),
    (2448, OutShape::Cyclic(2)),
    (2520, OutShape::Cyclic(2)),
];

pub fn known_out(order: u64) -> Option<OutShape> {
    KNOWN_OUT.iter().find(|(o, _)| *o == order).map(|(_, s)| *s)
}

/// A simple group together with its outer automorphism group.
#[derive(Clone, Debug)]
pub struct OutFact {
    pub key: SimpleTypeKey,
    pub simple: GroupTable,
    pub out: GroupTable,
    /// Whether `|Out|` was confirmed by the automorphism search.
    pub verified: bool,
}

impl OutFact {
    /// Looks `|S|` up in the table; verifies by brute force when `|S|` is
    /// within the automorphism cap.
    pub fn new(simple: GroupTable, caps: &Caps) -> Result<OutFact> {
        let order = simple.order() as u64;
        let shape = known_out(order).ok_or(Error::MissingOutData(order))?;
        let verified = if simple.order() <= caps.automorphism {
            let o = out_order(&simple, caps)?;
            if o != shape.order() {
                return Err(Error::InvariantViolation(format!(
                    "|Out| of the simple group of order {order}: table {} but search {o}",
                    shape.order()
                )));
            }
            true
        } else {
            false
        };
        Ok(OutFact {
            key: SimpleTypeKey {
                order,
                abelian: false,
                profile: profile_of(simple.element_orders().iter().copied()),
            },
            out: shape.table(caps)?,
            simple,
            verified,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T3Failure {
    pub order: u64,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T3Verdict {
    pub holds: bool,
    pub failures: Vec<T3Failure>,
    /// Hypotheses of the theorem with whether each was met.
    pub hypotheses: Vec<(&'static str, bool)>,
    pub m: u64,
}

/// Whether `Out(S) ≀ S_n ∈ 𝔉` for every simple `S ∉ 𝔉` of the table and every
/// `n ≤ m` in `A_ℛ(S)`, with `m` the tabulated `C₂` of the base.
pub fn t3_condition(base: &ClassSpec, r: &RankSpec, facts: &[OutFact], caps: &Caps) -> Result<T3Verdict> {
    let f = base.flags();
    for (flag, ok) in [
        ("hereditary", f.hereditary),
        ("saturated", f.saturated),
        ("contains_nilpotent", f.contains_nilpotent),
    ] {
        if !ok {
            return Err(Error::MissingFlag {
                class: base.id().into(),
                flag,
            });
        }
    }
    let m = c2_constant(base, &[], caps)?.value;
    let hypotheses = alloc::vec![
        ("very_good", r.is_very_good()),
        ("ranks_within_m", r.max_rank().is_some_and(|k| u64::from(k) <= m)),
    ];
    let mut failures = Vec::new();
    for fact in facts {
        if base.member(&fact.simple, caps)? {
            continue;
        }
        let a = &r.resolve(&fact.key).a;
        for n in (1..=m as u32).filter(|&n| a.contains(n)) {
            let w = wreath_natural(&fact.out, n as usize, caps)?;
            if !base.member(&w, caps)? {
                failures.push(T3Failure {
                    order: fact.key.order,
                    n,
                });
            }
        }
    }
    Ok(T3Verdict {
        holds: failures.is_empty(),
        failures,
        hypotheses,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsub::hypercenter_classical;
    use crate::families::{alternating, dihedral, symmetric};
    use crate::fr::{preset, preset_class, PresetParams};
    use crate::rank::{RankEntry, RankSet, Selector};

    fn c() -> Caps {
        Caps::default()
    }

    #[test]
    fn hypercenters() {
        let s3c2 = direct_product(&symmetric(3, &c()).unwrap(), &cyclic(2, &c()).unwrap(), &c()).unwrap();
        let n = ClassSpec::nilpotent();
        let z = hypercenter(&s3c2, &n, CentralMode::Both, &c()).unwrap();
        assert_eq!(z, hypercenter_classical(&s3c2));
        assert_eq!(z.size(), 2);
        assert_eq!(hypercenter_ascending(&s3c2, &n, CentralMode::Both, &c()).unwrap(), z);
        let s4 = symmetric(4, &c()).unwrap();
        let u = ClassSpec::supersoluble();
        assert!(hypercenter(&s4, &u, CentralMode::Both, &c()).unwrap().is_trivial());
        let d8 = dihedral(8, &c()).unwrap();
        assert_eq!(hypercenter(&d8, &u, CentralMode::Both, &c()).unwrap().size(), 8);
    }

    #[test]
    fn maximal_subgroups_in_class() {
        let s3 = symmetric(3, &c()).unwrap();
        let n = ClassSpec::nilpotent();
        let m = x_maximal_subgroups(&s3, &n, &c()).unwrap();
        let mut sizes: Vec<usize> = m.iter().map(|h| h.size()).collect();
        sizes.sort();
        assert_eq!(sizes, [2, 2, 2, 3]);
        assert!(int_x(&s3, &n, &c()).unwrap().is_trivial());
        let s4 = symmetric(4, &c()).unwrap();
        let u = ClassSpec::supersoluble();
        let m = x_maximal_subgroups(&s4, &u, &c()).unwrap();
        let mut sizes: Vec<usize> = m.iter().map(|h| h.size()).collect();
        sizes.sort();
        assert_eq!(sizes, [6, 6, 6, 6, 8, 8, 8]);
        assert!(int_x(&s4, &u, &c()).unwrap().is_trivial());
        assert!(x_maximal_subgroups(&s4, &ClassSpec::empty(), &c()).is_err());
    }

    #[test]
    fn shemetkov_examples() {
        let s4 = symmetric(4, &c()).unwrap();
        let v = shemetkov_check(&s4, &ClassSpec::nilpotent(), CentralMode::Both, &c()).unwrap();
        assert!(v.equal && v.z.is_trivial());
        let v = shemetkov_check(&s4, &ClassSpec::all(), CentralMode::Both, &c()).unwrap();
        assert!(v.equal && v.z.size() == 24);
        let nstar = preset_class(8, &PresetParams { base: Some(ClassSpec::nilpotent()), ..Default::default() }).unwrap();
        let a5 = alternating(5, &c()).unwrap();
        let v = shemetkov_check(&a5, &nstar, CentralMode::PreferCanonical, &c()).unwrap();
        assert!(v.equal && v.z.size() == 60);
    }

    #[test]
    fn constants() {
        let corpus: Vec<(String, GroupTable)> = [
            ("S3", symmetric(3, &c()).unwrap()),
            ("S4", symmetric(4, &c()).unwrap()),
            ("D8", dihedral(8, &c()).unwrap()),
            ("A4", alternating(4, &c()).unwrap()),
        ]
        .into_iter()
        .map(|(l, g)| (String::from(l), g))
        .collect();
        let c1 = c1_constant(&ClassSpec::nilpotent(), &corpus, &c()).unwrap();
        assert_eq!(c1, C1Bound { value: 2, witness: "S3".into() });
        assert_eq!(c1_constant(&ClassSpec::all(), &corpus, &c()), Err(Error::NoCandidate));
        let c2 = c2_constant(&ClassSpec::nilpotent(), &corpus, &c()).unwrap();
        assert_eq!((c2.value, c2.source, c2.spot_checked), (2, C2Source::Table, true));
        assert!(c2_constant(&ClassSpec::supersoluble(), &corpus, &c()).unwrap().spot_checked);
        assert_eq!(c2_constant(&ClassSpec::all(), &corpus, &c()).unwrap().value, 3);
    }

    #[test]
    fn t3_for_a5() {
        let a5 = OutFact::new(alternating(5, &c()).unwrap(), &c()).unwrap();
        assert!(a5.verified);
        let n = ClassSpec::nilpotent();
        let with_a = |a: RankSet| {
            RankSpec::new(
                "r",
                4,
                alloc::vec![
                    RankEntry { selector: Selector::Order(60), a, b: RankSet::empty() },
                    RankEntry { selector: Selector::Default, a: RankSet::empty(), b: RankSet::empty() },
                ],
            )
            .unwrap()
        };
        let v = t3_condition(&n, &with_a(RankSet::of([1])), core::slice::from_ref(&a5), &c()).unwrap();
        assert!(v.holds);
        let v = t3_condition(&n, &with_a(RankSet::of([2])), core::slice::from_ref(&a5), &c()).unwrap();
        assert!(v.holds);
        assert!(!v.hypotheses[0].1);
        let (_, b) = preset(6, &PresetParams::default()).unwrap();
        assert!(t3_condition(&n, &b, &[a5], &c()).unwrap().holds);
        assert!(t3_condition(&ClassSpec::trivial(), &b, &[], &c()).is_err());
    }
}
