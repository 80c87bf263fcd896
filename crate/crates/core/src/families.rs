//! Standard families of small groups.

use alloc::format;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::perm::{perm_group, Perm, PermGroup};
use crate::table::GroupTable;

pub fn cyclic(n: usize, caps: &Caps) -> Result<GroupTable> {
    positive(n, "cyclic")?;
    Caps::check("cyclic group", n, caps.table_order)?;
    Ok(GroupTable::from_fn(n, |a, b| (a + b) % n).with_provenance(format!("cyclic({n})")))
}

/// Dihedral group of order `n` (`n` even, `n ≥ 2`): `rⁱsʲ` is element
/// `i + (n/2)·j`.
pub fn dihedral(n: usize, caps: &Caps) -> Result<GroupTable> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidTable(format!("dihedral order must be even, got {n}")));
    }
    Caps::check("dihedral group", n, caps.table_order)?;
    let m = n / 2;
    Ok(GroupTable::from_fn(n, |a, b| {
        let (i1, j1) = (a % m, a / m);
        let (i2, j2) = (b % m, b / m);
        let i = if j1 == 0 { i1 + i2 } else { i1 + m - i2 } % m;
        i + m * (j1 ^ j2)
    })
    .with_provenance(format!("dihedral({n})")))
}

/// Dicyclic group of order `4m`: `⟨a, x | a^{2m}, x² = a^m, aˣ = a⁻¹⟩`, with
/// `aⁱxʲ` as element `i + 2m·j`. For `4m` a power of two this is the
/// generalized quaternion group.
pub fn dicyclic(n: usize, caps: &Caps) -> Result<GroupTable> {
    if n < 4 || !n.is_multiple_of(4) {
        return Err(Error::InvalidTable(format!("dicyclic order must be a multiple of 4, got {n}")));
    }
    Caps::check("dicyclic group", n, caps.table_order)?;
    let m2 = n / 2;
    let m = n / 4;
    Ok(GroupTable::from_fn(n, |a, b| {
        let (i1, j1) = (a % m2, a / m2);
        let (i2, j2) = (b % m2, b / m2);
        match (j1, j2) {
            (0, j) => (i1 + i2) % m2 + m2 * j,
            (_, 0) => (i1 + m2 - i2) % m2 + m2,
            _ => (i1 + m2 - i2 + m) % m2,
        }
    })
    .with_provenance(format!("dicyclic({n})")))
}

/// Generalized quaternion group of order `n = 2^k ≥ 8`.
pub fn quaternion(n: usize, caps: &Caps) -> Result<GroupTable> {
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidTable(format!("quaternion order must be 2^k >= 8, got {n}")));
    }
    Ok(dicyclic(n, caps)?.with_provenance(format!("quaternion({n})")))
}

fn cycle(degree: usize, pts: impl IntoIterator<Item = usize>) -> Perm {
    let c: Vec<usize> = pts.into_iter().collect();
    Perm::from_cycles(degree, &[c]).expect("valid cycle")
}

fn positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidTable(format!("{what} degree must be positive")))
    } else {
        Ok(())
    }
}

/// `S_n` on `{1..n}` generated by `(1 2 … n)` and `(1 2)`.
pub fn symmetric_perm(n: usize, caps: &Caps) -> Result<PermGroup> {
    positive(n, "symmetric")?;
    let gens: Vec<Perm> = match n {
        1 => Vec::new(),
        2 => alloc::vec![cycle(2, [0, 1])],
        _ => alloc::vec![cycle(n, 0..n), cycle(n, [0, 1])],
    };
    let mut g = perm_group(n, &gens, caps)?;
    g.table.set_label(format!("S{n}"));
    g.table = g.table.with_provenance(format!("symmetric({n})"));
    Ok(g)
}

pub fn symmetric(n: usize, caps: &Caps) -> Result<GroupTable> {
    Ok(symmetric_perm(n, caps)?.table)
}

/// `A_n` generated by `(1 2 3)` and an `(n or n−1)`-cycle of even parity.
pub fn alternating(n: usize, caps: &Caps) -> Result<GroupTable> {
    positive(n, "alternating")?;
    let gens: Vec<Perm> = match n {
        1 | 2 => Vec::new(),
        3 => alloc::vec![cycle(3, 0..3)],
        _ if n % 2 == 1 => alloc::vec![cycle(n, 0..n), cycle(n, [0, 1, 2])],
        _ => alloc::vec![cycle(n, 1..n), cycle(n, [0, 1, 2])],
    };
    let mut g = perm_group(n, &gens, caps)?;
    g.table.set_label(format!("A{n}"));
    Ok(g.table.with_provenance(format!("alternating({n})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::is_isomorphic;
    use crate::perm::{from_permutations, parse_cycles};

    #[test]
    fn orders() {
        let c = Caps::default();
        assert_eq!(symmetric(4, &c).unwrap().order(), 24);
        assert_eq!(alternating(5, &c).unwrap().order(), 60);
        assert_eq!(alternating(6, &c).unwrap().order(), 360);
        assert_eq!(alternating(4, &c).unwrap().order(), 12);
        assert_eq!(alternating(2, &c).unwrap().order(), 1);
        assert_eq!(symmetric(1, &c).unwrap().order(), 1);
        assert_eq!(dicyclic(12, &c).unwrap().order(), 12);
    }

    #[test]
    fn tables_are_groups() {
        let c = Caps::default();
        for g in [
            dihedral(10, &c).unwrap(),
            dicyclic(12, &c).unwrap(),
            quaternion(16, &c).unwrap(),
            cyclic(7, &c).unwrap(),
        ] {
            assert!(g.check_associative(200));
            let rows: Vec<Vec<usize>> = g.rows().map(|r| r.iter().map(|&x| x as usize).collect()).collect();
            assert!(GroupTable::from_rows(&rows, &c).is_ok());
        }
    }

    #[test]
    fn matches_permutation_models() {
        let c = Caps::default();
        let d8 = from_permutations(4, &[parse_cycles(4, "(1 2 3 4)", 1).unwrap(), parse_cycles(4, "(1 3)", 1).unwrap()], &c).unwrap();
        assert!(is_isomorphic(&dihedral(8, &c).unwrap(), &d8, &c).unwrap());
        let q8 = from_permutations(8, &[parse_cycles(8, "(1 2 4 8)(3 6 7 5)", 1).unwrap(), parse_cycles(8, "(1 3 4 7)(2 5 8 6)", 1).unwrap()], &c).unwrap();
        assert!(is_isomorphic(&quaternion(8, &c).unwrap(), &q8, &c).unwrap());
        assert!(is_isomorphic(&dihedral(6, &c).unwrap(), &symmetric(3, &c).unwrap(), &c).unwrap());
    }
}
