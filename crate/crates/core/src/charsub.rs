//! Characteristic subgroups computed over the normal-subgroup lattice.

use crate::caps::Caps;
use crate::error::Result;
use crate::quotient::{centralizer_unchecked, quotient_section};
use crate::subgroup::{
    derived_of, is_abelian_subgroup, is_nilpotent_subgroup, is_power_of, is_soluble_subgroup,
    join, maximal_subgroups, minimal_normal_subgroups, normal_join_where, Subgroup,
};
use crate::table::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicSubgroups {
    pub center: Subgroup,
    pub derived: Subgroup,
    pub fitting: Subgroup,
    pub frattini: Subgroup,
    pub soluble_radical: Subgroup,
    pub socle: Subgroup,
    pub generalized_fitting_tilde: Subgroup,
    pub hypercenter_classical: Subgroup,
}

/// All characteristic subgroups at once.
///
/// Fails with `OrderCapExceeded` only when the Frattini subgroup needs the
/// maximal subgroups of a group above the subgroup-enumeration cap.
pub fn characteristic_subgroups(g: &GroupTable, caps: &Caps) -> Result<CharacteristicSubgroups> {
    let frattini = frattini(g, caps)?;
    Ok(CharacteristicSubgroups {
        center: center(g),
        derived: derived(g),
        fitting: fitting(g),
        soluble_radical: soluble_radical(g),
        socle: socle(g),
        generalized_fitting_tilde: tilde_fitting_given(g, &frattini)?,
        hypercenter_classical: hypercenter_classical(g),
        frattini,
    })
}

pub fn center(g: &GroupTable) -> Subgroup {
    let w = g.whole();
    centralizer_unchecked(g, &w, &g.trivial())
}

pub fn derived(g: &GroupTable) -> Subgroup {
    derived_of(g, &g.whole())
}

/// Largest normal `p`-subgroup.
pub fn o_p(g: &GroupTable, p: u64) -> Subgroup {
    normal_join_where(g, |n| is_power_of(n.size() as u64, p))
}

pub fn fitting(g: &GroupTable) -> Subgroup {
    normal_join_where(g, |n| is_nilpotent_subgroup(g, n))
}

pub fn soluble_radical(g: &GroupTable) -> Subgroup {
    normal_join_where(g, |n| is_soluble_subgroup(g, n))
}

pub fn socle(g: &GroupTable) -> Subgroup {
    minimal_normal_subgroups(g)
        .iter()
        .fold(g.trivial(), |acc, n| join(g, &acc, n))
}

/// Intersection of the maximal subgroups.
///
/// `Φ(G)` is nilpotent and normal, so it is trivial whenever `F(G)` is; only
/// otherwise are maximal subgroups enumerated.
pub fn frattini(g: &GroupTable, caps: &Caps) -> Result<Subgroup> {
    if g.order() == 1 || fitting(g).is_trivial() {
        return Ok(g.trivial());
    }
    let maxes = maximal_subgroups(g, caps)?;
    Ok(maxes
        .iter()
        .fold(g.whole(), |acc, m| acc.intersection(m)))
}

/// `F̃(G)` defined by `F̃(G)/Φ(G) = Soc(G/Φ(G))`.
pub fn generalized_fitting_tilde(g: &GroupTable, caps: &Caps) -> Result<Subgroup> {
    tilde_fitting_given(g, &frattini(g, caps)?)
}

fn tilde_fitting_given(g: &GroupTable, phi: &Subgroup) -> Result<Subgroup> {
    let sec = quotient_section(g, phi)?;
    Ok(sec.preimage(&socle(&sec.table)))
}

/// Limit of the upper central series.
pub fn hypercenter_classical(g: &GroupTable) -> Subgroup {
    let w = g.whole();
    let mut z = g.trivial();
    loop {
        let next = centralizer_unchecked(g, &w, &z);
        if next.size() == z.size() {
            return z;
        }
        z = next;
    }
}

pub fn is_nilpotent(g: &GroupTable) -> bool {
    is_nilpotent_subgroup(g, &g.whole())
}

pub fn is_soluble(g: &GroupTable) -> bool {
    is_soluble_subgroup(g, &g.whole())
}

pub fn is_abelian(g: &GroupTable) -> bool {
    is_abelian_subgroup(g, &g.whole())
}

/// Trivial or a direct product of non-abelian simple groups: the socle is
/// the whole group and no minimal normal subgroup is abelian.
pub fn is_semisimple(g: &GroupTable) -> bool {
    if g.order() == 1 {
        return true;
    }
    let mins = minimal_normal_subgroups(g);
    mins.iter().all(|n| !is_abelian_subgroup(g, n))
        && mins
            .iter()
            .fold(g.trivial(), |acc, n| join(g, &acc, n))
            .size()
            == g.order()
}
