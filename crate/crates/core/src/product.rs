//! Direct, semidirect and wreath products.

use alloc::format;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::families::symmetric_perm;
use crate::table::{GroupAction, GroupTable};

/// `A × B`; `(a, b)` is element `a + |A|·b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable, caps: &Caps) -> Result<GroupTable> {
    let n = a.order() * b.order();
    Caps::check("direct product", n, caps.construction)?;
    let na = a.order();
    Ok(GroupTable::from_fn(n, |x, y| {
        a.mul(x % na, y % na) + na * b.mul(x / na, y / na)
    })
    .with_provenance(format!("direct({}, {})", a.provenance(), b.provenance())))
}

/// `A ⋊ Q` with `(a₁,q₁)(a₂,q₂) = (a₁·act(q₁)(a₂), q₁q₂)`; `(a, q)` is
/// element `a + |A|·q`. `act` must be a left action of `Q` by automorphisms
/// of `A`.
pub fn semidirect_product(
    a: &GroupTable,
    q: &GroupTable,
    act: &GroupAction,
    caps: &Caps,
) -> Result<GroupTable> {
    let n = a.order() * q.order();
    Caps::check("semidirect product", n, caps.construction)?;
    if act.domain_size != a.order() {
        return Err(Error::InvalidAction("domain must be the elements of A".into()));
    }
    act.validate(q)?;
    for p in &act.perm_of {
        let ok = (0..a.order()).all(|x| (0..a.order()).all(|y| p[a.mul(x, y)] == a.mul(p[x], p[y])));
        if !ok {
            return Err(Error::InvalidAction("an image is not an automorphism of A".into()));
        }
    }
    Ok(semidirect_unchecked(a, q, &act.perm_of))
}

pub(crate) fn semidirect_unchecked(a: &GroupTable, q: &GroupTable, perm_of: &[Vec<usize>]) -> GroupTable {
    let na = a.order();
    GroupTable::from_fn(na * q.order(), |x, y| {
        let (a1, q1) = (x % na, x / na);
        let (a2, q2) = (y % na, y / na);
        a.mul(a1, perm_of[q1][a2]) + na * q.mul(q1, q2)
    })
}

/// `Nⁿ` with coordinate `i` weighted by `|N|^i`.
fn power(n: &GroupTable, k: usize, caps: &Caps) -> Result<GroupTable> {
    let size = n
        .order()
        .checked_pow(k as u32)
        .filter(|&s| s <= caps.construction.min(Caps::HARD_LIMIT))
        .ok_or(Error::OrderCapExceeded {
            what: "wreath product base",
            needed: usize::MAX,
            cap: caps.construction,
        })?;
    let m = n.order();
    Ok(GroupTable::from_fn(size, |x, y| {
        let (mut x, mut y) = (x, y);
        let mut out = 0;
        let mut w = 1;
        for _ in 0..k {
            out += w * n.mul(x % m, y % m);
            x /= m;
            y /= m;
            w *= m;
        }
        out
    }))
}

fn digits(mut f: usize, m: usize, k: usize) -> Vec<usize> {
    (0..k)
        .map(|_| {
            let d = f % m;
            f /= m;
            d
        })
        .collect()
}

fn undigits(d: &[usize], m: usize) -> usize {
    d.iter().rev().fold(0, |acc, &x| acc * m + x)
}

/// Checked order of a wreath product `|N|^k · |top|`.
fn wreath_order(n: usize, k: usize, top: usize, caps: &Caps) -> Result<()> {
    let needed = n
        .checked_pow(k as u32)
        .and_then(|b| b.checked_mul(top))
        .unwrap_or(usize::MAX);
    Caps::check("wreath product", needed, caps.construction)
}

/// `N ≀ S_k` permuting coordinates: `(σ·f)(i) = f(σ(i))`.
pub fn wreath_natural(n: &GroupTable, k: usize, caps: &Caps) -> Result<GroupTable> {
    let sk = symmetric_perm(k, caps)?;
    wreath_order(n.order(), k, sk.table.order(), caps)?;
    let base = power(n, k, caps)?;
    let m = n.order();
    let perm_of: Vec<Vec<usize>> = sk
        .elements
        .iter()
        .map(|sigma| {
            (0..base.order())
                .map(|f| {
                    let d = digits(f, m, k);
                    let moved: Vec<usize> = (0..k).map(|i| d[sigma.apply(i)]).collect();
                    undigits(&moved, m)
                })
                .collect()
        })
        .collect();
    Ok(semidirect_unchecked(&base, &sk.table, &perm_of)
        .with_provenance(format!("wreath({}, {k})", n.provenance())))
}

/// `S ≀_reg G` with `G` acting on `S^{|G|}` by `(g·f)(x) = f(xg)`.
pub fn wreath_regular(s: &GroupTable, g: &GroupTable, caps: &Caps) -> Result<GroupTable> {
    let k = g.order();
    wreath_order(s.order(), k, k, caps)?;
    let base = power(s, k, caps)?;
    let m = s.order();
    let perm_of: Vec<Vec<usize>> = (0..k)
        .map(|h| {
            (0..base.order())
                .map(|f| {
                    let d = digits(f, m, k);
                    let moved: Vec<usize> = (0..k).map(|x| d[g.mul(x, h)]).collect();
                    undigits(&moved, m)
                })
                .collect()
        })
        .collect();
    Ok(semidirect_unchecked(&base, g, &perm_of)
        .with_provenance(format!("wreath_reg({}, {})", s.provenance(), g.provenance())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aut::is_isomorphic;
    use crate::families::{cyclic, dihedral, symmetric};
    use crate::subgroup::normal_subgroups;

    #[test]
    fn c3_by_c2_inversion_is_s3() {
        let c = Caps::default();
        let c3 = cyclic(3, &c).unwrap();
        let c2 = cyclic(2, &c).unwrap();
        let act = GroupAction {
            domain_size: 3,
            perm_of: alloc::vec![alloc::vec![0, 1, 2], alloc::vec![0, 2, 1]],
        };
        let s3 = semidirect_product(&c3, &c2, &act, &c).unwrap();
        assert!(is_isomorphic(&s3, &symmetric(3, &c).unwrap(), &c).unwrap());
        let triv = semidirect_product(&c3, &c2, &GroupAction::trivial(&c2, 3), &c).unwrap();
        assert_eq!(triv, direct_product(&c3, &c2, &c).unwrap());
    }

    #[test]
    fn bad_action_is_rejected() {
        let c = Caps::default();
        let c3 = cyclic(3, &c).unwrap();
        let c2 = cyclic(2, &c).unwrap();
        let act = GroupAction {
            domain_size: 3,
            perm_of: alloc::vec![alloc::vec![0, 1, 2], alloc::vec![1, 0, 2]],
        };
        assert!(matches!(semidirect_product(&c3, &c2, &act, &c), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn wreaths() {
        let c = Caps::default();
        let c2 = cyclic(2, &c).unwrap();
        let w = wreath_natural(&c2, 2, &c).unwrap();
        assert_eq!(w.order(), 8);
        assert!(w.check_associative(200));
        assert!(is_isomorphic(&w, &dihedral(8, &c).unwrap(), &c).unwrap());
        let r = wreath_regular(&c2, &c2, &c).unwrap();
        assert!(is_isomorphic(&r, &w, &c).unwrap());
        let c3w = wreath_natural(&cyclic(3, &c).unwrap(), 3, &c).unwrap();
        assert_eq!(c3w.order(), 27 * 6);
        assert!(c3w.check_associative(0));
        assert!(normal_subgroups(&c3w).iter().any(|n| n.size() == 27));
        let tiny = Caps { construction: 100, ..c };
        assert!(wreath_natural(&c2, 5, &tiny).is_err());
    }
}
