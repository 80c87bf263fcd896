use alloc::boxed::Box;
use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::Result;
use crate::mask::Mask;
use crate::table::{p_part, prime_divisors, GroupTable};

/// A subgroup of a parent [`GroupTable`], stored as a membership mask over
/// the parent's element indices.
///
/// Subgroups sort by `(size, mask)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Subgroup {
    size: usize,
    mask: Mask,
}

impl Subgroup {
    pub fn from_mask(mask: Mask) -> Self {
        Subgroup {
            size: mask.count(),
            mask,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.mask.contains(x)
    }

    /// Order of the parent group.
    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn members(&self) -> Vec<usize> {
        self.mask.to_vec()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.mask.is_subset(&other.mask)
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_mask(self.mask.intersection(&other.mask))
    }

    pub fn index_in(&self, parent: &Subgroup) -> usize {
        parent.size / self.size
    }

    /// Checks closure, identity membership and Lagrange against `g`.
    pub fn is_valid_in(&self, g: &GroupTable) -> bool {
        self.mask.len() == g.order()
            && self.contains(0)
            && g.order().is_multiple_of(self.size)
            && self
                .iter()
                .all(|a| self.contains(g.inv(a)) && self.iter().all(|b| self.contains(g.mul(a, b))))
    }
}

/// Subgroup generated by `gens`.
pub fn generate(g: &GroupTable, gens: &[usize]) -> Subgroup {
    let mut mask = Mask::from_indices(g.order(), [0]);
    close_into(g, &mut mask, vec![0], gens);
    Subgroup::from_mask(mask)
}

/// Extends `mask` (already closed under `gens` except for the elements in
/// `frontier`) to the closure under right multiplication by `gens`.
fn close_into(g: &GroupTable, mask: &mut Mask, frontier: Vec<usize>, gens: &[usize]) {
    let mut queue: VecDeque<usize> = frontier.into();
    while let Some(x) = queue.pop_front() {
        for &s in gens {
            let y = g.mul(x, s);
            if mask.insert(y) {
                queue.push_back(y);
            }
        }
    }
}

/// Adds `extra` elements to the subgroup generated by `gens`, returning the
/// new subgroup and the (possibly extended) generator list. Elements already
/// inside are skipped.
pub fn extend(
    g: &GroupTable,
    base: &Subgroup,
    base_gens: &[usize],
    extra: impl IntoIterator<Item = usize>,
) -> (Subgroup, Vec<usize>) {
    let mut gens: Vec<usize> = base_gens.to_vec();
    let mut mask = base.mask.clone();
    for x in extra {
        if mask.contains(x) {
            continue;
        }
        gens.push(x);
        // Every member must now also be multiplied by the new generator.
        let frontier: Vec<usize> = mask.to_vec();
        close_into(g, &mut mask, frontier, &gens);
    }
    (Subgroup::from_mask(mask), gens)
}

/// Greedy generating set: ascending members not yet in the closure of the
/// previously chosen ones.
pub fn generators_of(g: &GroupTable, h: &Subgroup) -> Vec<usize> {
    let mut cur = g.trivial();
    let mut gens = Vec::new();
    for x in h.iter() {
        if !cur.contains(x) {
            let (next, ng) = extend(g, &cur, &gens, [x]);
            cur = next;
            gens = ng;
            if cur.size() == h.size() {
                break;
            }
        }
    }
    gens
}

impl GroupTable {
    /// Cached greedy generating set of the whole group.
    pub fn generators(&self) -> &[usize] {
        self.gens
            .get_or_init(|| Box::new(generators_of(self, &self.whole())))
    }

    /// Cached list of normal subgroups, sorted by `(size, mask)`.
    pub fn normal_subgroup_list(&self) -> &[Subgroup] {
        self.normals
            .get_or_init(|| Box::new(compute_normal_subgroups(self)))
    }
}

pub fn join(g: &GroupTable, a: &Subgroup, b: &Subgroup) -> Subgroup {
    if a.is_subgroup_of(b) {
        return b.clone();
    }
    if b.is_subgroup_of(a) {
        return a.clone();
    }
    let ga = generators_of(g, a);
    let gb = generators_of(g, b);
    extend(g, a, &ga, gb).0
}

pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    let hg = generators_of(g, h);
    g.generators()
        .iter()
        .all(|&x| hg.iter().all(|&a| h.contains(g.conj(a, x))))
}

/// `h` normal in `k` (both subgroups of `g`).
pub fn is_normal_in(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> bool {
    let hg = generators_of(g, h);
    generators_of(g, k)
        .iter()
        .all(|&x| hg.iter().all(|&a| h.contains(g.conj(a, x))))
}

/// Smallest normal subgroup of `within` containing `elems` (conjugating by
/// `within`'s generators only).
pub fn normal_closure_in(g: &GroupTable, within: &Subgroup, elems: &[usize]) -> Subgroup {
    let wg = generators_of(g, within);
    let (mut h, mut gens) = extend(g, &g.trivial(), &[], elems.iter().copied());
    loop {
        let mut fresh = Vec::new();
        for &a in &gens {
            for &x in &wg {
                let c = g.conj(a, x);
                if !h.contains(c) {
                    fresh.push(c);
                }
            }
        }
        if fresh.is_empty() {
            return h;
        }
        let (nh, ng) = extend(g, &h, &gens, fresh);
        h = nh;
        gens = ng;
    }
}

pub fn normal_closure(g: &GroupTable, elems: &[usize]) -> Subgroup {
    normal_closure_in(g, &g.whole(), elems)
}

/// Derived subgroup of `h`.
pub fn derived_of(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let hg = generators_of(g, h);
    let mut comms = Vec::new();
    for (i, &a) in hg.iter().enumerate() {
        for &b in &hg[i + 1..] {
            comms.push(g.commutator(a, b));
        }
    }
    normal_closure_in(g, h, &comms)
}

pub fn is_soluble_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    let mut cur = h.clone();
    loop {
        if cur.is_trivial() {
            return true;
        }
        let d = derived_of(g, &cur);
        if d.size() == cur.size() {
            return false;
        }
        cur = d;
    }
}

/// Nilpotent iff every Sylow subgroup is normal, i.e. for each prime `p`
/// the `p`-elements of `h` number exactly `|h|_p`.
pub fn is_nilpotent_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    let n = h.size() as u64;
    prime_divisors(n).into_iter().all(|p| {
        let count = h
            .iter()
            .filter(|&x| is_power_of(g.element_order(x) as u64, p))
            .count() as u64;
        count == p_part(n, p)
    })
}

pub fn is_abelian_subgroup(g: &GroupTable, h: &Subgroup) -> bool {
    let hg = generators_of(g, h);
    hg.iter()
        .all(|&a| hg.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Conjugacy classes, each sorted, ordered by least member.
pub fn conjugacy_classes(g: &GroupTable) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let mut seen = Mask::empty(g.order());
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen.contains(x) {
            continue;
        }
        seen.insert(x);
        let mut class = vec![x];
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &s in gens {
                let c = g.conj(y, s);
                if seen.insert(c) {
                    class.push(c);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

fn compute_normal_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    // Normal closures of the conjugacy classes generate the lattice under joins.
    let mut closures: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut seen_closure = BTreeSet::new();
    for class in conjugacy_classes(g).into_iter().skip(1) {
        let (s, gens) = extend(g, &g.trivial(), &[], class.iter().copied());
        if seen_closure.insert(s.mask().clone()) {
            closures.push((s, gens));
        }
    }
    let trivial = g.trivial();
    let mut found: BTreeSet<Mask> = BTreeSet::new();
    found.insert(trivial.mask().clone());
    let mut list: Vec<(Subgroup, Vec<usize>)> = vec![(trivial, Vec::new())];
    let mut head = 0;
    while head < list.len() {
        let (n, ngens) = list[head].clone();
        head += 1;
        for (c, cgens) in &closures {
            if c.is_subgroup_of(&n) {
                continue;
            }
            let (j, jgens) = extend(g, &n, &ngens, cgens.iter().copied());
            if found.insert(j.mask().clone()) {
                list.push((j, jgens));
            }
        }
    }
    let mut out: Vec<Subgroup> = list.into_iter().map(|(s, _)| s).collect();
    out.sort();
    out
}

/// All normal subgroups including `1` and `G`, sorted by `(size, mask)`.
pub fn normal_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    g.normal_subgroup_list().to_vec()
}

/// Minimal normal subgroups of `g` strictly containing `k` (i.e. the minimal
/// normal subgroups of `G/K`, pulled back).
pub fn minimal_normal_over(g: &GroupTable, k: &Subgroup) -> Vec<Subgroup> {
    let above: Vec<&Subgroup> = g
        .normal_subgroup_list()
        .iter()
        .filter(|n| k.is_subgroup_of(n) && n.size() > k.size())
        .collect();
    above
        .iter()
        .filter(|n| {
            !above
                .iter()
                .any(|m| m.size() < n.size() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// Maximal normal subgroups of `g` strictly contained in `n`.
pub fn maximal_normal_below(g: &GroupTable, n: &Subgroup) -> Vec<Subgroup> {
    let below: Vec<&Subgroup> = g
        .normal_subgroup_list()
        .iter()
        .filter(|m| m.is_subgroup_of(n) && m.size() < n.size())
        .collect();
    below
        .iter()
        .filter(|m| {
            !below
                .iter()
                .any(|l| l.size() > m.size() && m.is_subgroup_of(l))
        })
        .map(|m| (*m).clone())
        .collect()
}

pub fn minimal_normal_subgroups(g: &GroupTable) -> Vec<Subgroup> {
    minimal_normal_over(g, &g.trivial())
}

/// Every subgroup of `g`, sorted by `(size, mask)`.
///
/// Cyclic subgroups are closed under joins with cyclic subgroups; every
/// subgroup is reached because it is the join of its cyclic subgroups.
pub fn all_subgroups(g: &GroupTable, caps: &Caps) -> Result<Vec<Subgroup>> {
    Caps::check("subgroup enumeration", g.order(), caps.subgroup_enumeration)?;
    let mut cyclic: Vec<(Subgroup, usize)> = Vec::new();
    let mut seen: BTreeSet<Mask> = BTreeSet::new();
    for x in 1..g.order() {
        let c = generate(g, &[x]);
        if seen.insert(c.mask().clone()) {
            cyclic.push((c, x));
        }
    }
    let mut found: BTreeSet<Mask> = BTreeSet::new();
    found.insert(g.trivial().mask().clone());
    let mut list: Vec<(Subgroup, Vec<usize>)> = vec![(g.trivial(), Vec::new())];
    let mut head = 0;
    while head < list.len() {
        let (h, hgens) = list[head].clone();
        head += 1;
        for (c, x) in &cyclic {
            if c.is_subgroup_of(&h) {
                continue;
            }
            let (j, jgens) = extend(g, &h, &hgens, [*x]);
            if found.insert(j.mask().clone()) {
                list.push((j, jgens));
            }
        }
    }
    let mut out: Vec<Subgroup> = list.into_iter().map(|(s, _)| s).collect();
    out.sort();
    Ok(out)
}

/// Maximal subgroups among the proper subgroups in `all`.
pub fn maximal_among(g: &GroupTable, all: &[Subgroup]) -> Vec<Subgroup> {
    let proper: Vec<&Subgroup> = all.iter().filter(|h| h.size() < g.order()).collect();
    proper
        .iter()
        .filter(|h| {
            !proper
                .iter()
                .any(|k| k.size() > h.size() && h.is_subgroup_of(k))
        })
        .map(|h| (*h).clone())
        .collect()
}

pub fn maximal_subgroups(g: &GroupTable, caps: &Caps) -> Result<Vec<Subgroup>> {
    Ok(maximal_among(g, &all_subgroups(g, caps)?))
}

/// Largest normal subgroup satisfying a property that is closed under
/// products of normal subgroups; returns the join of all qualifying ones.
pub(crate) fn normal_join_where(
    g: &GroupTable,
    mut pred: impl FnMut(&Subgroup) -> bool,
) -> Subgroup {
    let mut acc = g.trivial();
    for n in g.normal_subgroup_list() {
        if !n.is_subgroup_of(&acc) && pred(n) {
            acc = join(g, &acc, n);
        }
    }
    acc
}
