//! Generalized rank functions: a pair `(A, B)` of rank sets per simple type.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Isomorphism type of a simple group, identified by order, abelianness and
/// element-order profile (sufficient below order 20160).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimpleTypeKey {
    pub order: u64,
    pub abelian: bool,
    pub profile: Vec<(u32, u32)>,
}

impl SimpleTypeKey {
    /// Key of the cyclic group of prime order `p`.
    pub fn cyclic(p: u64) -> Self {
        SimpleTypeKey {
            order: p,
            abelian: true,
            profile: if p == 1 {
                alloc::vec![(1, 1)]
            } else {
                alloc::vec![(1, 1), (p as u32, p as u32 - 1)]
            },
        }
    }
}

impl fmt::Display for SimpleTypeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.abelian {
            write!(f, "C{}", self.order)
        } else {
            write!(f, "simple({})", self.order)
        }
    }
}

/// A finite set of ranks in `[1, M]`, or all natural numbers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RankSet {
    members: BTreeSet<u32>,
    unbounded: bool,
}

impl RankSet {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn of(it: impl IntoIterator<Item = u32>) -> Self {
        RankSet {
            members: it.into_iter().collect(),
            unbounded: false,
        }
    }

    /// All natural numbers; stored as `[1, bound]` plus the marker.
    pub fn all(bound: u32) -> Self {
        RankSet {
            members: (1..=bound).collect(),
            unbounded: true,
        }
    }

    pub fn contains(&self, r: u32) -> bool {
        self.unbounded || self.members.contains(&r)
    }

    pub fn is_empty(&self) -> bool {
        !self.unbounded && self.members.is_empty()
    }

    pub fn is_unbounded(&self) -> bool {
        self.unbounded
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.members.iter().copied()
    }

    pub fn max(&self) -> Option<u32> {
        if self.unbounded {
            None
        } else {
            self.members.iter().next_back().copied()
        }
    }

    pub fn union(&self, other: &RankSet) -> RankSet {
        RankSet {
            members: self.members.union(&other.members).copied().collect(),
            unbounded: self.unbounded || other.unbounded,
        }
    }

    fn disjoint(&self, other: &RankSet) -> bool {
        !(self.unbounded && !other.is_empty())
            && !(other.unbounded && !self.is_empty())
            && self.members.is_disjoint(&other.members)
    }
}

impl fmt::Display for RankSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.unbounded {
            return write!(f, "{{1..}}");
        }
        write!(f, "{{")?;
        for (i, r) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Selector {
    Exact(SimpleTypeKey),
    /// Every simple type of this order.
    Order(u64),
    Abelian,
    NonAbelian,
    Default,
}

impl Selector {
    fn level(&self) -> u8 {
        match self {
            Selector::Exact(_) | Selector::Order(_) => 0,
            Selector::Abelian | Selector::NonAbelian => 1,
            Selector::Default => 2,
        }
    }

    fn matches(&self, key: &SimpleTypeKey) -> bool {
        match self {
            Selector::Exact(k) => k == key,
            Selector::Order(n) => *n == key.order,
            Selector::Abelian => key.abelian,
            Selector::NonAbelian => !key.abelian,
            Selector::Default => true,
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Exact(k) => write!(f, "order:{}", k.order),
            Selector::Order(n) => write!(f, "order:{n}"),
            Selector::Abelian => write!(f, "abelian"),
            Selector::NonAbelian => write!(f, "nonabelian"),
            Selector::Default => write!(f, "default"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankEntry {
    pub selector: Selector,
    pub a: RankSet,
    pub b: RankSet,
}

/// A generalized rank function with explicit sets inside `[1, bound]`.
///
/// Resolution order: exact type or order, then abelian/nonabelian, then
/// default. Every key must resolve.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankSpec {
    pub id: String,
    bound: u32,
    entries: Vec<RankEntry>,
}

impl RankSpec {
    pub fn new(id: impl Into<String>, bound: u32, entries: Vec<RankEntry>) -> Result<Self> {
        if bound == 0 {
            return Err(Error::InvalidRankSpec("bound must be positive".into()));
        }
        for (i, e) in entries.iter().enumerate() {
            if !e.a.disjoint(&e.b) {
                return Err(Error::InvalidRankSpec(format!("A and B overlap for `{}`", e.selector)));
            }
            if let Some(r) = e.a.iter().chain(e.b.iter()).find(|&r| r == 0 || r > bound) {
                return Err(Error::InvalidRankSpec(format!(
                    "rank {r} for `{}` outside [1, {bound}]",
                    e.selector
                )));
            }
            if entries[..i].iter().any(|f| f.selector == e.selector) {
                return Err(Error::InvalidRankSpec(format!("duplicate selector `{}`", e.selector)));
            }
        }
        let has = |s: &Selector| entries.iter().any(|e| &e.selector == s);
        if !has(&Selector::Default) && !(has(&Selector::Abelian) && has(&Selector::NonAbelian)) {
            return Err(Error::InvalidRankSpec(
                "resolution is not total: add `default` or both `abelian` and `nonabelian`".into(),
            ));
        }
        Ok(RankSpec {
            id: id.into(),
            bound,
            entries,
        })
    }

    /// `ℛ ≡ (A, B)` for every simple type.
    pub fn constant(id: impl Into<String>, bound: u32, a: RankSet, b: RankSet) -> Result<Self> {
        Self::new(id, bound, alloc::vec![RankEntry { selector: Selector::Default, a, b }])
    }

    /// `ℛ(abelian) = (a₁, b₁)`, `ℛ(non-abelian) = (a₂, b₂)`.
    pub fn split(
        id: impl Into<String>,
        bound: u32,
        abelian: (RankSet, RankSet),
        nonabelian: (RankSet, RankSet),
    ) -> Result<Self> {
        Self::new(
            id,
            bound,
            alloc::vec![
                RankEntry { selector: Selector::Abelian, a: abelian.0, b: abelian.1 },
                RankEntry { selector: Selector::NonAbelian, a: nonabelian.0, b: nonabelian.1 },
            ],
        )
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn entries(&self) -> &[RankEntry] {
        &self.entries
    }

    pub fn resolve(&self, key: &SimpleTypeKey) -> &RankEntry {
        self.entries
            .iter()
            .filter(|e| e.selector.matches(key))
            .min_by_key(|e| e.selector.level())
            .expect("resolution is total by construction")
    }

    /// The common `(A, B)` of all abelian types, if it is uniform.
    pub fn uniform_abelian(&self) -> Option<(&RankSet, &RankSet)> {
        let general = self
            .entries
            .iter()
            .filter(|e| matches!(e.selector, Selector::Abelian | Selector::Default))
            .min_by_key(|e| e.selector.level())?;
        let uniform = self.entries.iter().all(|e| match &e.selector {
            Selector::Exact(k) if k.abelian => e.a == general.a && e.b == general.b,
            Selector::Order(n) if crate::table::is_prime(*n) => e.a == general.a && e.b == general.b,
            _ => true,
        });
        uniform.then_some((&general.a, &general.b))
    }

    /// Conditions (a) and (b) with `b | a` (good) or `b ≤ a` (very good),
    /// decided within the bound.
    fn check(&self, very: bool) -> bool {
        let below = |a: u32| -> Vec<u32> {
            if very {
                (1..=a).collect()
            } else {
                (1..=a).filter(|b| a.is_multiple_of(*b)).collect()
            }
        };
        self.entries.iter().all(|e| {
            let ab = e.a.union(&e.b);
            e.a.iter().all(|a| below(a).into_iter().all(|b| e.a.contains(b)))
                && e.b.iter().all(|a| {
                    below(a)
                        .into_iter()
                        .all(|b| if very { e.b.contains(b) } else { ab.contains(b) })
                })
        })
    }

    pub fn is_good(&self) -> bool {
        self.check(false)
    }

    pub fn is_very_good(&self) -> bool {
        self.check(true)
    }

    /// Largest rank in any `A` or `B` set, `None` if some set is unbounded.
    pub fn max_rank(&self) -> Option<u32> {
        let mut m = 0;
        for e in &self.entries {
            if e.a.is_unbounded() || e.b.is_unbounded() {
                return None;
            }
            m = m.max(e.a.max().unwrap_or(0)).max(e.b.max().unwrap_or(0));
        }
        Some(m)
    }

    /// Largest rank over the entries that can resolve a non-abelian type.
    pub fn max_rank_nonabelian(&self) -> Option<u32> {
        let mut m = 0;
        for e in self.entries.iter().filter(|e| {
            !matches!(e.selector, Selector::Abelian)
                && !matches!(&e.selector, Selector::Exact(k) if k.abelian)
                && !matches!(e.selector, Selector::Order(n) if crate::table::is_prime(n))
        }) {
            if e.a.is_unbounded() || e.b.is_unbounded() {
                return None;
            }
            m = m.max(e.a.max().unwrap_or(0)).max(e.b.max().unwrap_or(0));
        }
        Some(m)
    }
}

impl fmt::Display for RankSpec {
    /// The rank-spec file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound {}", self.bound)?;
        for e in &self.entries {
            writeln!(f, "type {} A={} B={}", e.selector, e.a, e.b)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a5_key() -> SimpleTypeKey {
        SimpleTypeKey {
            order: 60,
            abelian: false,
            profile: alloc::vec![(1, 1), (2, 15), (3, 20), (5, 24)],
        }
    }

    #[test]
    fn constant_specs_are_very_good() {
        let u = RankSpec::constant("c", 8, RankSet::of([1]), RankSet::empty()).unwrap();
        assert!(u.is_good() && u.is_very_good());
        let n = RankSpec::constant("q", 8, RankSet::empty(), RankSet::of([1])).unwrap();
        assert!(n.is_good() && n.is_very_good());
    }

    #[test]
    fn divisor_closure_fails_for_four_alone() {
        let r = RankSpec::new(
            "x",
            8,
            alloc::vec![
                RankEntry { selector: Selector::Order(60), a: RankSet::of([4]), b: RankSet::empty() },
                RankEntry { selector: Selector::Default, a: RankSet::empty(), b: RankSet::empty() },
            ],
        )
        .unwrap();
        assert!(!r.is_good());
        assert_eq!(r.resolve(&a5_key()).a, RankSet::of([4]));
        assert!(r.resolve(&SimpleTypeKey::cyclic(2)).a.is_empty());
    }

    #[test]
    fn good_but_not_very_good() {
        // {1, 3}: divisor-closed, not downward-closed
        let r = RankSpec::constant("x", 8, RankSet::of([1, 3]), RankSet::empty()).unwrap();
        assert!(r.is_good() && !r.is_very_good());
        // B = {2} with A = {1}: good, not very good
        let r = RankSpec::constant("y", 8, RankSet::of([1]), RankSet::of([2])).unwrap();
        assert!(r.is_good() && !r.is_very_good());
    }

    #[test]
    fn invalid_specs() {
        assert!(RankSpec::constant("x", 4, RankSet::of([1]), RankSet::of([1])).is_err());
        assert!(RankSpec::constant("x", 4, RankSet::of([5]), RankSet::empty()).is_err());
        assert!(RankSpec::new(
            "x",
            4,
            alloc::vec![RankEntry { selector: Selector::Abelian, a: RankSet::of([1]), b: RankSet::empty() }]
        )
        .is_err());
    }

    #[test]
    fn resolution_precedence_and_uniformity() {
        let r = RankSpec::new(
            "x",
            4,
            alloc::vec![
                RankEntry { selector: Selector::Default, a: RankSet::all(4), b: RankSet::empty() },
                RankEntry { selector: Selector::Abelian, a: RankSet::of([1]), b: RankSet::empty() },
                RankEntry { selector: Selector::Exact(a5_key()), a: RankSet::empty(), b: RankSet::of([1]) },
            ],
        )
        .unwrap();
        assert_eq!(r.resolve(&a5_key()).b, RankSet::of([1]));
        assert!(r.resolve(&SimpleTypeKey::cyclic(5)).a.contains(1));
        let other = SimpleTypeKey { order: 168, abelian: false, profile: alloc::vec![] };
        assert!(r.resolve(&other).a.contains(17));
        assert_eq!(r.uniform_abelian().unwrap().0, &RankSet::of([1]));
        assert_eq!(r.max_rank(), None);
    }
}
