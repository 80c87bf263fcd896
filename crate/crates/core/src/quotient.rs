//! Quotients `G/N`, sections `H/K` and their centralizers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::mask::Mask;
use crate::subgroup::{generators_of, is_normal, is_normal_in, Subgroup};
use crate::table::{GroupHom, GroupTable};

const NONE: u32 = u32::MAX;

/// The section `H/K` of a parent group, with `K` normal in `H`.
///
/// Section elements are the cosets `hK`, numbered by ascending least
/// representative, so the identity coset is `0`.
#[derive(Clone, Debug)]
pub struct Section {
    pub table: GroupTable,
    pub upper: Subgroup,
    pub lower: Subgroup,
    /// Least parent element of each coset.
    pub reps: Vec<usize>,
    index_of: Vec<u32>,
}

impl Section {
    /// Builds `H/K`; requires `K ≤ H` and `K` normal in `H`.
    pub fn new(g: &GroupTable, upper: &Subgroup, lower: &Subgroup) -> Result<Section> {
        if !lower.is_subgroup_of(upper) {
            return Err(Error::NotASection("lower term is not contained in upper term"));
        }
        if !is_normal_in(g, lower, upper) {
            return Err(Error::NotASection("lower term is not normal in upper term"));
        }
        Ok(Self::build(g, upper, lower))
    }

    pub(crate) fn build(g: &GroupTable, upper: &Subgroup, lower: &Subgroup) -> Section {
        let mut index_of = vec![NONE; g.order()];
        let mut reps = Vec::new();
        let kmembers = lower.members();
        for x in upper.iter() {
            if index_of[x] != NONE {
                continue;
            }
            let idx = reps.len() as u32;
            reps.push(x);
            for &k in &kmembers {
                index_of[g.mul(x, k)] = idx;
            }
        }
        let table = GroupTable::from_fn(reps.len(), |a, b| {
            index_of[g.mul(reps[a], reps[b])] as usize
        });
        Section {
            table,
            upper: upper.clone(),
            lower: lower.clone(),
            reps,
            index_of,
        }
    }

    /// Order of the section.
    pub fn order(&self) -> usize {
        self.reps.len()
    }

    /// Coset index of a parent element of `H`.
    #[inline]
    pub fn index(&self, x: usize) -> usize {
        debug_assert!(self.index_of[x] != NONE, "element outside the section");
        self.index_of[x] as usize
    }

    /// Whether parent element `x` lies in `H`.
    #[inline]
    pub fn covers(&self, x: usize) -> bool {
        self.index_of[x] != NONE
    }

    /// Pulls a subgroup of the section back to the parent.
    pub fn preimage(&self, s: &Subgroup) -> Subgroup {
        let mask = Mask::from_indices(
            self.index_of.len(),
            self.upper.iter().filter(|&x| s.contains(self.index(x))),
        );
        Subgroup::from_mask(mask)
    }

    /// Image in the section of a subgroup `U` with `K ≤ U ≤ H`, or of any
    /// subgroup of `H` (giving `UK/K`).
    pub fn image(&self, u: &Subgroup) -> Subgroup {
        Subgroup::from_mask(Mask::from_indices(
            self.order(),
            u.iter().filter(|&x| self.covers(x)).map(|x| self.index(x)),
        ))
    }

    /// The permutation of section elements induced by conjugation with the
    /// parent element `x` (which must normalize both `H` and `K`):
    /// `hK ↦ x⁻¹hxK`.
    pub fn conjugation(&self, g: &GroupTable, x: usize) -> Vec<usize> {
        self.reps.iter().map(|&h| self.index(g.conj(h, x))).collect()
    }
}

/// `G/N` with the canonical projection.
pub fn quotient(g: &GroupTable, n: &Subgroup) -> Result<(GroupTable, GroupHom)> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    let s = Section::build(g, &g.whole(), n);
    let proj = GroupHom {
        image_of: (0..g.order()).map(|x| s.index(x)).collect(),
    };
    Ok((s.table, proj))
}

/// `G/N` as a [`Section`] (keeps representatives and preimages).
pub fn quotient_section(g: &GroupTable, n: &Subgroup) -> Result<Section> {
    if !is_normal(g, n) {
        return Err(Error::NotNormal);
    }
    Ok(Section::build(g, &g.whole(), n))
}

/// `{x ∈ G : x⁻¹hx·h⁻¹ ∈ K for all h ∈ H}`.
pub fn centralizer_of_section(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Result<Subgroup> {
    if !k.is_subgroup_of(h) {
        return Err(Error::NotASection("K is not contained in H"));
    }
    if !is_normal(g, h) || !is_normal(g, k) {
        return Err(Error::NotASection("H and K must be normal in G"));
    }
    Ok(centralizer_unchecked(g, h, k))
}

pub(crate) fn centralizer_unchecked(g: &GroupTable, h: &Subgroup, k: &Subgroup) -> Subgroup {
    let hg = generators_of(g, h);
    let mask = Mask::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| {
            hg.iter()
                .all(|&a| k.contains(g.mul(g.conj(a, x), g.inv(a))))
        }),
    );
    Subgroup::from_mask(mask)
}

/// Centralizer in `G` of an arbitrary subset.
pub fn centralizer_of_set(g: &GroupTable, set: &[usize]) -> Subgroup {
    Subgroup::from_mask(Mask::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| set.iter().all(|&a| g.mul(a, x) == g.mul(x, a))),
    ))
}
