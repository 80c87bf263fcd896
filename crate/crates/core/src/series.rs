//! Chief series, chief factor views and the generalized-rank test.

use alloc::vec;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::quotient::{centralizer_unchecked, Section};
use crate::rank::{RankSpec, SimpleTypeKey};
use crate::subgroup::{all_subgroups, extend, generators_of, is_normal, Subgroup};
use crate::table::{induced_table, prime_power_base, profile_of, GroupTable};

/// Which minimal normal subgroup to take when several are available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    #[default]
    Least,
    Greatest,
}

/// Ascending chief series `1 = N₀ < N₁ < … < N_k = G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
}

impl ChiefSeries {
    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn factors(&self, g: &GroupTable) -> Vec<ChiefFactor> {
        self.terms
            .windows(2)
            .map(|w| ChiefFactor::build(g, &w[1], &w[0]))
            .collect()
    }
}

/// Chief terms from `bottom` up to `top`, both normal with `bottom ≤ top`.
pub fn refine_between(g: &GroupTable, bottom: &Subgroup, top: &Subgroup, tie: TieBreak) -> Vec<Subgroup> {
    let mut terms = vec![bottom.clone()];
    let mut cur = bottom.clone();
    while cur.size() < top.size() {
        let between: Vec<&Subgroup> = g
            .normal_subgroup_list()
            .iter()
            .filter(|n| n.size() > cur.size() && cur.is_subgroup_of(n) && n.is_subgroup_of(top))
            .collect();
        let minimal = between.iter().filter(|n| {
            !between
                .iter()
                .any(|m| m.size() < n.size() && m.is_subgroup_of(n))
        });
        let next = match tie {
            TieBreak::Least => minimal.min_by(|a, b| a.mask().cmp(b.mask())),
            TieBreak::Greatest => minimal.max_by(|a, b| a.mask().cmp(b.mask())),
        }
        .map(|n| (*n).clone())
        .expect("top lies strictly above the current term");
        terms.push(next.clone());
        cur = next;
    }
    terms
}

pub fn chief_series(g: &GroupTable) -> ChiefSeries {
    chief_series_with(g, TieBreak::Least)
}

pub fn chief_series_with(g: &GroupTable, tie: TieBreak) -> ChiefSeries {
    ChiefSeries {
        terms: refine_between(g, &g.trivial(), &g.whole(), tie),
    }
}

/// A chief series having `n` among its terms.
pub fn chief_series_through(g: &GroupTable, n: &Subgroup) -> Result<ChiefSeries> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let mut terms = refine_between(g, &g.trivial(), n, TieBreak::Least);
    terms.extend(refine_between(g, n, &g.whole(), TieBreak::Least).into_iter().skip(1));
    Ok(ChiefSeries { terms })
}

/// The largest normal subgroup all of whose `G`-chief factors satisfy
/// `prop`, which must depend only on the `G`-isomorphism class of the factor.
///
/// A normal `N` qualifies iff some maximal normal `M < N` qualifies and
/// `N/M` satisfies `prop`; the join of the qualifying subgroups is checked
/// to qualify again.
pub fn largest_normal_where(
    g: &GroupTable,
    mut prop: impl FnMut(&ChiefFactor) -> Result<bool>,
) -> Result<Subgroup> {
    let normals = g.normal_subgroup_list();
    let mut good = vec![false; normals.len()];
    good[0] = true;
    let mut acc = g.trivial();
    for i in 1..normals.len() {
        let n = &normals[i];
        // sorted by size, so the last normal subgroup inside N is maximal in it
        let j = (0..i).rev().find(|&j| normals[j].is_subgroup_of(n)).expect("1 is below N");
        good[i] = good[j] && prop(&ChiefFactor::build(g, n, &normals[j]))?;
        if good[i] {
            acc = crate::subgroup::join(g, &acc, n);
        }
    }
    let k = normals.iter().position(|n| *n == acc).expect("joins of normal subgroups are normal");
    if !good[k] {
        return Err(Error::InvariantViolation(alloc::format!(
            "join of qualifying normal subgroups (order {}) does not qualify",
            acc.size()
        )));
    }
    Ok(acc)
}

/// A chief factor `H/K` of `G` with its cached structure.
#[derive(Clone, Debug)]
pub struct ChiefFactor {
    pub upper: Subgroup,
    pub lower: Subgroup,
    pub section: Section,
    pub factor_order: usize,
    pub is_abelian: bool,
    pub char_prime: Option<u64>,
    pub rank: u32,
    /// Simple direct factors, as subgroups of `section.table`.
    pub simple_factors: Vec<Subgroup>,
    pub centralizer: Subgroup,
    pub type_key: SimpleTypeKey,
}

impl ChiefFactor {
    /// Validates that `H/K` is a chief factor of `G`.
    pub fn new(g: &GroupTable, upper: &Subgroup, lower: &Subgroup) -> Result<ChiefFactor> {
        if !lower.is_subgroup_of(upper) || lower.size() == upper.size() {
            return Err(Error::NotASection("K must be a proper subgroup of H"));
        }
        if !is_normal(g, upper) || !is_normal(g, lower) {
            return Err(Error::NotASection("H and K must be normal in G"));
        }
        let strictly_between = g.normal_subgroup_list().iter().any(|n| {
            n.size() > lower.size()
                && n.size() < upper.size()
                && lower.is_subgroup_of(n)
                && n.is_subgroup_of(upper)
        });
        if strictly_between {
            return Err(Error::NotASection("a normal subgroup lies strictly between K and H"));
        }
        Ok(Self::build(g, upper, lower))
    }

    pub(crate) fn build(g: &GroupTable, upper: &Subgroup, lower: &Subgroup) -> ChiefFactor {
        let section = Section::build(g, upper, lower);
        let t = &section.table;
        let factor_order = section.order();
        let char_prime = prime_power_base(factor_order as u64).filter(|_| t.is_abelian());
        let is_abelian = char_prime.is_some();
        let simple_factors = if char_prime.is_some() {
            abelian_basis(t)
        } else {
            crate::subgroup::minimal_normal_subgroups(t)
        };
        let s0 = &simple_factors[0];
        let type_key = SimpleTypeKey {
            order: s0.size() as u64,
            abelian: is_abelian,
            profile: profile_of(s0.iter().map(|x| t.element_order(x))),
        };
        ChiefFactor {
            upper: upper.clone(),
            lower: lower.clone(),
            factor_order,
            is_abelian,
            char_prime,
            rank: simple_factors.len() as u32,
            centralizer: centralizer_unchecked(g, upper, lower),
            simple_factors,
            type_key,
            section,
        }
    }

    /// One simple direct factor as a standalone table.
    pub fn simple_table(&self) -> GroupTable {
        induced_table(&self.section.table, &self.simple_factors[0]).0
    }

    /// Prime divisors of the factor order.
    pub fn primes(&self) -> Vec<u64> {
        crate::table::prime_divisors(self.factor_order as u64)
    }
}

/// Cyclic direct factors along a greedy basis of an elementary abelian
/// group: ascending elements not yet in the span.
fn abelian_basis(t: &GroupTable) -> Vec<Subgroup> {
    let mut span = t.trivial();
    let mut basis: Vec<usize> = Vec::new();
    let mut factors = Vec::new();
    for x in 1..t.order() {
        if !span.contains(x) {
            let (next, nb) = extend(t, &span, &basis, [x]);
            span = next;
            basis = nb;
            factors.push(crate::subgroup::generate(t, &[x]));
        }
    }
    if factors.is_empty() {
        factors.push(t.trivial());
    }
    factors
}

/// Simple direct factors of the chief factor, as subgroups of `H/K`.
pub fn decompose_factor(cf: &ChiefFactor) -> Vec<Subgroup> {
    cf.simple_factors.clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    A,
    B,
    None,
}

/// An element `x` and an `x`-invariant composition factor `upper/lower` of
/// the chief factor (subgroups of `H/K`) on which `x` is not inner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrWitness {
    pub element: usize,
    pub upper: Subgroup,
    pub lower: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrDecision {
    pub in_r: bool,
    pub via: Via,
    pub witness: Option<GrWitness>,
}

/// Representatives of `G/C` for the centralizer `C` of the factor: elements
/// in one coset of `C` induce the same action on `H/K`.
fn action_representatives(g: &GroupTable, c: &Subgroup) -> Vec<usize> {
    let mut covered = Mask::empty(g.order());
    let cm = c.members();
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if covered.contains(x) {
            continue;
        }
        reps.push(x);
        for &y in &cm {
            covered.insert(g.mul(x, y));
        }
    }
    reps
}

/// First `x ∈ G` and `x`-invariant composition factor of `H/K` on which `x`
/// induces a non-inner automorphism; `None` if every such action is inner.
pub fn non_inner_witness(g: &GroupTable, cf: &ChiefFactor, caps: &Caps) -> Result<Option<GrWitness>> {
    if cf.is_abelian {
        abelian_witness(g, cf, caps)
    } else {
        Ok(nonabelian_witness(g, cf))
    }
}

fn nonabelian_witness(g: &GroupTable, cf: &ChiefFactor) -> Option<GrWitness> {
    let sec = &cf.section;
    let t = &sec.table;
    let factors: Vec<(&Subgroup, Vec<usize>, Vec<usize>)> = cf
        .simple_factors
        .iter()
        .map(|s| (s, generators_of(t, s), s.members()))
        .collect();
    for x in action_representatives(g, &cf.centralizer) {
        if x == 0 {
            continue;
        }
        for (s, gens, members) in &factors {
            let images: Vec<usize> = gens.iter().map(|&e| sec.index(g.conj(sec.reps[e], x))).collect();
            if !images.iter().all(|&y| s.contains(y)) {
                continue;
            }
            let inner = members
                .iter()
                .any(|&w| gens.iter().zip(&images).all(|(&e, &y)| t.conj(e, w) == y));
            if !inner {
                return Some(GrWitness {
                    element: x,
                    upper: (*s).clone(),
                    lower: t.trivial(),
                });
            }
        }
    }
    None
}

fn abelian_witness(g: &GroupTable, cf: &ChiefFactor, caps: &Caps) -> Result<Option<GrWitness>> {
    let sec = &cf.section;
    let t = &sec.table;
    if cf.rank == 1 {
        // The only composition factor is H/K itself; inner means trivial.
        let x = action_representatives(g, &cf.centralizer).into_iter().find(|&x| x != 0);
        return Ok(x.map(|x| GrWitness {
            element: x,
            upper: t.whole(),
            lower: t.trivial(),
        }));
    }
    Caps::check("abelian chief factor sections", t.order(), caps.abelian_section)?;
    let enum_caps = Caps {
        subgroup_enumeration: caps.abelian_section,
        ..*caps
    };
    let subs = all_subgroups(t, &enum_caps)?;
    let p = cf.char_prime.expect("abelian factor") as usize;
    let gens: Vec<Vec<usize>> = subs.iter().map(|s| generators_of(t, s)).collect();
    for x in action_representatives(g, &cf.centralizer) {
        if x == 0 {
            continue;
        }
        let act: Vec<usize> = sec.reps.iter().map(|&h| sec.index(g.conj(h, x))).collect();
        let invariant: Vec<usize> = (0..subs.len())
            .filter(|&i| gens[i].iter().all(|&e| subs[i].contains(act[e])))
            .collect();
        for &hi in &invariant {
            for &ki in &invariant {
                let (h, k) = (&subs[hi], &subs[ki]);
                if h.size() != p * k.size() || !k.is_subgroup_of(h) {
                    continue;
                }
                let trivial = gens[hi]
                    .iter()
                    .all(|&e| k.contains(t.mul(act[e], t.inv(e))));
                if !trivial {
                    return Ok(Some(GrWitness {
                        element: x,
                        upper: h.clone(),
                        lower: k.clone(),
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// `gr(H̄, G) ∈ ℛ(H̄)`.
pub fn gr_in_r(g: &GroupTable, cf: &ChiefFactor, r: &RankSpec, caps: &Caps) -> Result<GrDecision> {
    let entry = r.resolve(&cf.type_key);
    if entry.a.contains(cf.rank) {
        return Ok(GrDecision {
            in_r: true,
            via: Via::A,
            witness: None,
        });
    }
    if !entry.b.contains(cf.rank) {
        return Ok(GrDecision {
            in_r: false,
            via: Via::None,
            witness: None,
        });
    }
    let witness = non_inner_witness(g, cf, caps)?;
    Ok(GrDecision {
        in_r: witness.is_none(),
        via: if witness.is_none() { Via::B } else { Via::None },
        witness,
    })
}

/// Invariants of a chief factor under `G`-isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FactorSignature {
    pub type_key: SimpleTypeKey,
    pub rank: u32,
    pub centralizer: Mask,
    /// Whether every element acts innerly on every invariant composition
    /// factor; `None` when the section enumeration is over its cap.
    pub all_inner: Option<bool>,
}

pub fn factor_signature(g: &GroupTable, cf: &ChiefFactor, caps: &Caps) -> FactorSignature {
    FactorSignature {
        type_key: cf.type_key.clone(),
        rank: cf.rank,
        centralizer: cf.centralizer.mask().clone(),
        all_inner: non_inner_witness(g, cf, caps).ok().map(|w| w.is_none()),
    }
}

/// Sorted signatures of a chief series.
pub fn signature_multiset(g: &GroupTable, series: &ChiefSeries, caps: &Caps) -> Vec<FactorSignature> {
    let mut v: Vec<FactorSignature> = series
        .factors(g)
        .iter()
        .map(|cf| factor_signature(g, cf, caps))
        .collect();
    v.sort();
    v
}

/// `C^p(G)`: intersection of the centralizers of the abelian `p`-chief
/// factors of one chief series (`G` if there are none).
pub fn cp_subgroup(g: &GroupTable, p: u64) -> Subgroup {
    cp_subgroup_of(g, &chief_series(g), p)
}

pub fn cp_subgroup_of(g: &GroupTable, series: &ChiefSeries, p: u64) -> Subgroup {
    series
        .terms
        .windows(2)
        .map(|w| ChiefFactor::build(g, &w[1], &w[0]))
        .filter(|cf| cf.char_prime == Some(p))
        .fold(g.whole(), |acc, cf| acc.intersection(&cf.centralizer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{alternating, cyclic, symmetric};
    use crate::perm::{from_permutations, parse_cycles};
    use crate::product::{direct_product, wreath_natural};
    use crate::rank::RankSet;
    use crate::subgroup::minimal_normal_subgroups;

    fn c() -> Caps {
        Caps::default()
    }

    fn sl25() -> GroupTable {
        // SL(2,5) acting on the 24 nonzero vectors of F_5^2
        let gens = [
            "(5 6 7 8 9)(10 12 14 11 13)(15 18 16 19 17)(20 24 23 22 21)",
            "(1 5 4 20)(2 10 3 15)(6 9 24 21)(7 14 23 16)(8 19 22 11)(12 13 18 17)",
        ];
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(24, s, 1).unwrap()).collect();
        from_permutations(24, &gens, &c()).unwrap()
    }

    #[test]
    fn s4_series() {
        let s4 = symmetric(4, &c()).unwrap();
        let s = chief_series(&s4);
        let sizes: Vec<usize> = s.terms.iter().map(|t| t.size()).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
        let f = s.factors(&s4);
        assert_eq!(f[0].rank, 2);
        assert!(f[0].is_abelian);
        assert_eq!(decompose_factor(&f[0]).len(), 2);
        assert_eq!(f[0].centralizer.size(), 4);
        assert_eq!(f[1].char_prime, Some(3));
    }

    #[test]
    fn c6_either_order_same_signatures() {
        let c6 = cyclic(6, &c()).unwrap();
        let a = chief_series_with(&c6, TieBreak::Least);
        let b = chief_series_with(&c6, TieBreak::Greatest);
        assert_ne!(a, b);
        assert_eq!(signature_multiset(&c6, &a, &c()), signature_multiset(&c6, &b, &c()));
    }

    #[test]
    fn sl25_series() {
        let g = sl25();
        assert_eq!(g.order(), 120);
        let s = chief_series(&g);
        let f = s.factors(&g);
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].factor_order, 2);
        assert_eq!(f[1].type_key.order, 60);
        assert_eq!(f[1].rank, 1);
        let r = RankSpec::constant("q", 4, RankSet::empty(), RankSet::of([1])).unwrap();
        let d = gr_in_r(&g, &f[1], &r, &c()).unwrap();
        assert!(d.in_r);
        assert_eq!(d.via, Via::B);
    }

    #[test]
    fn s5_outer_action_on_a5() {
        let s5 = symmetric(5, &c()).unwrap();
        let f = chief_series(&s5).factors(&s5);
        let r = RankSpec::constant("q", 4, RankSet::empty(), RankSet::of([1])).unwrap();
        let d = gr_in_r(&s5, &f[0], &r, &c()).unwrap();
        assert!(!d.in_r);
        let w = d.witness.unwrap();
        assert_eq!(w.upper.size(), 60);
        // the witness acts as an odd permutation
        assert_eq!(s5.element_order(w.element) % 2, 0);
    }

    #[test]
    fn rank_one_abelian_via_a() {
        let s3 = symmetric(3, &c()).unwrap();
        let f = chief_series(&s3).factors(&s3);
        let r = RankSpec::constant("u", 4, RankSet::of([1]), RankSet::empty()).unwrap();
        assert_eq!(gr_in_r(&s3, &f[0], &r, &c()).unwrap().via, Via::A);
        // with B = {1} instead, C3 in S3 fails: inversion is not trivial
        let r = RankSpec::constant("q", 4, RankSet::empty(), RankSet::of([1])).unwrap();
        assert!(!gr_in_r(&s3, &f[0], &r, &c()).unwrap().in_r);
    }

    #[test]
    fn abelian_rank_two_sections() {
        // V4 in A4: C3 permutes the three order-2 subgroups, so no x outside
        // V4 fixes a composition factor pair; in S4 a transposition fixes one
        // C2 and acts trivially on it and on the quotient.
        let a4 = alternating(4, &c()).unwrap();
        let f = chief_series(&a4).factors(&a4);
        assert_eq!(non_inner_witness(&a4, &f[0], &c()).unwrap(), None);
        let s4 = symmetric(4, &c()).unwrap();
        let f = chief_series(&s4).factors(&s4);
        assert_eq!(non_inner_witness(&s4, &f[0], &c()).unwrap(), None);
    }

    #[test]
    fn wreath_base_has_rank_two() {
        let big = Caps { table_order: 8000, ..c() };
        let a5 = alternating(5, &c()).unwrap();
        let w = wreath_natural(&a5, 2, &big).unwrap();
        let mins = minimal_normal_subgroups(&w);
        assert_eq!(mins.len(), 1);
        let cf = ChiefFactor::new(&w, &mins[0], &w.trivial()).unwrap();
        assert_eq!(cf.rank, 2);
        assert_eq!(decompose_factor(&cf).len(), 2);
        assert!(decompose_factor(&cf).iter().all(|s| s.size() == 60));
    }

    #[test]
    fn series_through_normal_subgroups() {
        let s4 = symmetric(4, &c()).unwrap();
        let a4 = &s4.normal_subgroup_list()[2];
        let s = chief_series_through(&s4, a4).unwrap();
        assert!(s.terms.contains(a4));
        let a5 = alternating(5, &c()).unwrap();
        let g = direct_product(&a5, &cyclic(2, &c()).unwrap(), &c()).unwrap();
        let n = g.normal_subgroup_list().iter().find(|n| n.size() == 60).unwrap().clone();
        let s = chief_series_through(&g, &n).unwrap();
        let sizes: Vec<usize> = s.terms.iter().map(|t| t.size()).collect();
        assert_eq!(sizes, vec![1, 60, 120]);
    }

    #[test]
    fn cp_of_s4() {
        let s4 = symmetric(4, &c()).unwrap();
        assert_eq!(cp_subgroup(&s4, 2).size(), 4);
        assert_eq!(cp_subgroup(&s4, 5), s4.whole());
        // oracle: the single 3-factor A4/V4 has centralizer A4
        assert_eq!(cp_subgroup(&s4, 3).size(), 12);
        let other = cp_subgroup_of(&s4, &chief_series_with(&s4, TieBreak::Greatest), 2);
        assert_eq!(other, cp_subgroup(&s4, 2));
    }
}
