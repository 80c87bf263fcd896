use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::subgroup::Subgroup;

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. Tables are immutable once built; the
/// lazily computed normal-subgroup lattice and generating set are cached
/// behind race-safe cells, so a table can be shared across threads.
pub struct GroupTable {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    element_orders: Vec<u32>,
    label: String,
    provenance: String,
    pub(crate) normals: OnceBox<Vec<Subgroup>>,
    pub(crate) gens: OnceBox<Vec<usize>>,
}

impl Clone for GroupTable {
    fn clone(&self) -> Self {
        GroupTable {
            order: self.order,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            element_orders: self.element_orders.clone(),
            label: self.label.clone(),
            provenance: self.provenance.clone(),
            normals: OnceBox::new(),
            gens: OnceBox::new(),
        }
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("order", &self.order)
            .field("label", &self.label)
            .finish()
    }
}

impl PartialEq for GroupTable {
    /// Equal as labelled tables (same element numbering).
    fn eq(&self, other: &Self) -> bool {
        self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Builds a table from a product function on `0..order` where `0` must be
    /// the identity. Used by constructions that are correct by design.
    pub(crate) fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        let mut mul = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mul.push(f(a, b) as u16);
            }
        }
        Self::from_raw(order, mul)
    }

    pub(crate) fn from_raw(order: usize, mul: Vec<u16>) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            if let Some(b) = row.iter().position(|&x| x == 0) {
                inv[a] = b as u16;
            }
        }
        let mut element_orders = vec![1u32; order];
        for (a, slot) in element_orders.iter_mut().enumerate() {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * order + a] as usize;
                k += 1;
            }
            *slot = k;
        }
        GroupTable {
            order,
            mul,
            inv,
            element_orders,
            label: String::new(),
            provenance: String::new(),
            normals: OnceBox::new(),
            gens: OnceBox::new(),
        }
    }

    /// Validates and wraps a user-supplied table with rows of zero-based
    /// indices. Associativity is checked exhaustively up to order 200 and on
    /// a deterministic sample above.
    pub fn from_rows(rows: &[Vec<usize>], caps: &Caps) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        Caps::check("table", n, caps.table_order)?;
        let mut mul = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(alloc::format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || core::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(alloc::format!(
                        "row {i} is not a permutation of 0..{n}"
                    )));
                }
                mul.push(x as u16);
            }
        }
        for (x, _) in rows.iter().enumerate() {
            if mul[x] as usize != x || mul[x * n] as usize != x {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if core::mem::replace(&mut seen[mul[i * n + j] as usize], true) {
                    return Err(Error::InvalidTable(alloc::format!(
                        "column {j} repeats an entry"
                    )));
                }
            }
        }
        let g = Self::from_raw(n, mul);
        if !g.check_associative(200) {
            return Err(Error::InvalidTable("operation is not associative".into()));
        }
        Ok(g)
    }

    /// Exhaustive associativity check for `order <= exhaustive_up_to`,
    /// otherwise a deterministic spot check.
    pub fn check_associative(&self, exhaustive_up_to: usize) -> bool {
        let n = self.order;
        if n <= exhaustive_up_to {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return false;
                        }
                    }
                }
            }
            true
        } else {
            let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
            let mut next = || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state % n as u64) as usize
            };
            (0..20_000).all(|_| {
                let (a, b, c) = (next(), next(), next());
                self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
            })
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u32 {
        self.element_orders[a]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.element_orders
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `a⁻¹ b⁻¹ a b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let e = k % self.element_order(a) as u64;
        let mut x = 0;
        for _ in 0..e {
            x = self.mul(x, a);
        }
        x
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn with_label(mut self, label: impl ToString) -> Self {
        self.label = label.to_string();
        self
    }

    pub fn with_provenance(mut self, p: impl ToString) -> Self {
        self.provenance = p.to_string();
        self
    }

    pub fn set_label(&mut self, label: impl ToString) {
        self.label = label.to_string();
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Rows of the table as element indices.
    pub fn rows(&self) -> impl Iterator<Item = &[u16]> + '_ {
        self.mul.chunks(self.order)
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup::from_mask(Mask::full(self.order))
    }

    /// The trivial subgroup.
    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_mask(Mask::from_indices(self.order, [0]))
    }

    /// Multiset of element orders as sorted `(order, count)` pairs.
    pub fn order_profile(&self) -> Vec<(u32, u32)> {
        profile_of(self.element_orders.iter().copied())
    }

    /// Prime divisors of the group order, ascending.
    pub fn prime_divisors(&self) -> Vec<u32> {
        prime_divisors(self.order as u64)
            .into_iter()
            .map(|p| p as u32)
            .collect()
    }
}

pub(crate) fn profile_of(it: impl Iterator<Item = u32>) -> Vec<(u32, u32)> {
    let mut v: Vec<u32> = it.collect();
    v.sort_unstable();
    let mut out: Vec<(u32, u32)> = Vec::new();
    for o in v {
        match out.last_mut() {
            Some((k, c)) if *k == o => *c += 1,
            _ => out.push((o, 1)),
        }
    }
    out
}

pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// `Some(p)` when `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: u64) -> Option<u64> {
    match prime_divisors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

/// `p`-part of `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut r = 1;
    while n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}

/// A map between two tables, stored as the image of each source element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupHom {
    pub image_of: Vec<usize>,
}

impl GroupHom {
    pub fn identity(g: &GroupTable) -> Self {
        GroupHom {
            image_of: (0..g.order()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image_of[x]
    }

    pub fn is_homomorphism(&self, source: &GroupTable, target: &GroupTable) -> bool {
        let n = source.order();
        self.image_of.len() == n
            && self.image_of[0] == 0
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    self.image_of[source.mul(a, b)]
                        == target.mul(self.image_of[a], self.image_of[b])
                })
            })
    }

    pub fn is_bijective(&self, target: &GroupTable) -> bool {
        if self.image_of.len() != target.order() {
            return false;
        }
        let mut seen = Mask::empty(target.order());
        self.image_of.iter().all(|&x| seen.insert(x))
    }

    /// `self` then `other`.
    pub fn then(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            image_of: self.image_of.iter().map(|&x| other.image_of[x]).collect(),
        }
    }
}

/// A left action of `actor` on `0..domain_size`: `perm_of[a][x]` is the image
/// of `x` under `a`, and `perm_of[ab] = perm_of[a] ∘ perm_of[b]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub domain_size: usize,
    pub perm_of: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn trivial(actor: &GroupTable, domain_size: usize) -> Self {
        GroupAction {
            domain_size,
            perm_of: vec![(0..domain_size).collect(); actor.order()],
        }
    }

    pub fn validate(&self, actor: &GroupTable) -> Result<()> {
        if self.perm_of.len() != actor.order() {
            return Err(Error::InvalidAction("one permutation per actor element".into()));
        }
        for p in &self.perm_of {
            let mut seen = Mask::empty(self.domain_size);
            if p.len() != self.domain_size || !p.iter().all(|&x| x < self.domain_size && seen.insert(x)) {
                return Err(Error::InvalidAction("image is not a permutation".into()));
            }
        }
        if self.perm_of[0].iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for a in 0..actor.order() {
            for b in 0..actor.order() {
                let ab = &self.perm_of[actor.mul(a, b)];
                let pa = &self.perm_of[a];
                let pb = &self.perm_of[b];
                if (0..self.domain_size).any(|x| ab[x] != pa[pb[x]]) {
                    return Err(Error::InvalidAction("not a homomorphism".into()));
                }
            }
        }
        Ok(())
    }
}

/// Induced table of a subgroup; element `i` of the result is the `i`-th
/// smallest member of `h`. Returns the table and the embedding.
pub fn induced_table(g: &GroupTable, h: &Subgroup) -> (GroupTable, Vec<usize>) {
    let members = h.members();
    let mut index = vec![u16::MAX; g.order()];
    for (i, &m) in members.iter().enumerate() {
        index[m] = i as u16;
    }
    let t = GroupTable::from_fn(members.len(), |a, b| index[g.mul(members[a], members[b])] as usize);
    (t, members)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> GroupTable {
        GroupTable::from_fn(n, |a, b| (a + b) % n)
    }

    #[test]
    fn cyclic_orders_and_inverses() {
        let g = z(6);
        assert_eq!(g.element_orders(), &[1, 6, 3, 2, 3, 6]);
        assert_eq!(g.inv(2), 4);
        assert!(g.check_associative(200));
    }

    #[test]
    fn rejects_non_latin_rows() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            GroupTable::from_rows(&rows, &Caps::default()),
            Err(Error::InvalidTable(_))
        ));
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not a group (order-5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(GroupTable::from_rows(&rows, &Caps::default()).is_err());
    }

    #[test]
    fn primes() {
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(p_part(360, 2), 8);
    }
}
