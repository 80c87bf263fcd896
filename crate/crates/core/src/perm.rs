//! Permutations in disjoint-cycle notation and Cayley tables of
//! permutation groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::table::GroupTable;

/// A permutation of `0..degree`, stored as images. Products compose left to
/// right: `(p * q)(i) = q(p(i))`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Perm(images.into_iter().map(|x| x as u16).collect()))
    }

    /// Builds a permutation of `0..degree` from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = alloc::vec![false; degree];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} exceeds degree {degree}",
                        x + 1
                    )));
                }
                if core::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated in cycles",
                        x + 1
                    )));
                }
                images[x] = c[(k + 1) % c.len()];
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = alloc::vec![0u16; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            out[x as usize] = i as u16;
        }
        Perm(out)
    }

    pub fn is_even(&self) -> bool {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut transpositions = 0;
        for i in 0..self.0.len() {
            let mut j = i;
            let mut len = 0;
            while !seen[j] {
                seen[j] = true;
                j = self.0[j] as usize;
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        transpositions % 2 == 0
    }
}

impl fmt::Display for Perm {
    /// 1-based disjoint-cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut any = false;
        for i in 0..self.0.len() {
            if seen[i] || self.0[i] as usize == i {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut j = i;
            let mut first = true;
            while !seen[j] {
                seen[j] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", j + 1)?;
                first = false;
                j = self.0[j] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Parses 1-based disjoint-cycle notation such as `(1 2 3)(4 5)` or `()`.
/// Points may be separated by spaces or commas. `line` is used for error
/// positions.
pub fn parse_cycles(degree: usize, text: &str, line: usize) -> Result<Perm> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let err = |col: usize, message: String| Error::Syntax {
        line,
        column: col + 1,
        message,
    };
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c != b'(' {
            return Err(err(i, format!("expected `(`, found `{}`", c as char)));
        }
        let open = i;
        i += 1;
        let mut cycle = Vec::new();
        loop {
            while i < bytes.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(err(open, "unclosed cycle".into()));
            }
            if bytes[i] == b')' {
                i += 1;
                break;
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if start == i {
                return Err(err(i, format!("unexpected `{}` in cycle", bytes[i] as char)));
            }
            let point: usize = text[start..i]
                .parse()
                .map_err(|_| err(start, "point out of range".into()))?;
            if point == 0 || point > degree {
                return Err(err(start, format!("point {point} outside 1..={degree}")));
            }
            cycle.push(point - 1);
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
    }
    Perm::from_cycles(degree, &cycles)
}

/// A permutation group with its Cayley table and the permutation for every
/// table element.
#[derive(Clone, Debug)]
pub struct PermGroup {
    pub table: GroupTable,
    pub elements: Vec<Perm>,
}

/// Cayley table of the group generated by `generators`.
///
/// Elements are numbered by breadth-first closure from the identity,
/// multiplying on the right by the generators in input order.
pub fn from_permutations(degree: usize, generators: &[Perm], caps: &Caps) -> Result<GroupTable> {
    Ok(perm_group(degree, generators, caps)?.table)
}

pub fn perm_group(degree: usize, generators: &[Perm], caps: &Caps) -> Result<PermGroup> {
    for g in generators {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {}, expected {degree}",
                g.degree()
            )));
        }
    }
    let cap = caps.table_order.min(Caps::HARD_LIMIT);
    let k = generators.len();
    let mut elements = alloc::vec![Perm::identity(degree)];
    let mut index: BTreeMap<Perm, usize> = BTreeMap::new();
    index.insert(elements[0].clone(), 0);
    // parent[y] = (x, gen) with y = x * generators[gen]
    let mut parent: Vec<(usize, usize)> = alloc::vec![(0, 0)];
    let mut right: Vec<u16> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        for (gi, g) in generators.iter().enumerate() {
            let y = elements[head].then(g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    let i = elements.len();
                    if i >= cap {
                        return Err(Error::OrderCapExceeded {
                            what: "permutation group",
                            needed: i + 1,
                            cap,
                        });
                    }
                    index.insert(y.clone(), i);
                    elements.push(y);
                    parent.push((head, gi));
                    i
                }
            };
            right.push(idx as u16);
        }
        head += 1;
    }
    let n = elements.len();
    let mut mul = alloc::vec![0u16; n * n];
    for x in 0..n {
        let row = &mut mul[x * n..(x + 1) * n];
        row[0] = x as u16;
        for y in 1..n {
            let (p, gi) = parent[y];
            let xp = row[p] as usize;
            row[y] = right[xp * k + gi];
        }
    }
    let label: String = generators.iter().map(|g| format!("{g}")).collect::<Vec<_>>().join(", ");
    let table = GroupTable::from_raw(n, mul).with_provenance(format!("perm {degree}: {label}"));
    Ok(PermGroup { table, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(deg: usize, s: &str) -> Perm {
        parse_cycles(deg, s, 1).unwrap()
    }

    #[test]
    fn s3_and_trivial() {
        let caps = Caps::default();
        let s3 = from_permutations(3, &[p(3, "(1 2 3)"), p(3, "(1 2)")], &caps).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.check_associative(200));
        let t = from_permutations(1, &[], &caps).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn a5_has_order_half_of_5_factorial() {
        let caps = Caps::default();
        let a5 = from_permutations(5, &[p(5, "(1 2 3 4 5)"), p(5, "(1 2 3)")], &caps).unwrap();
        assert_eq!(a5.order(), 120 / 2);
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps {
            table_order: 10,
            ..Caps::default()
        };
        let r = from_permutations(4, &[p(4, "(1 2 3 4)"), p(4, "(1 2)")], &caps);
        assert!(matches!(r, Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn malformed_cycles_are_rejected() {
        assert!(matches!(parse_cycles(3, "(1 2", 4), Err(Error::Syntax { line: 4, .. })));
        assert!(parse_cycles(3, "(1 4)", 1).is_err());
        assert!(parse_cycles(3, "(1 2)(2 3)", 1).is_err());
        assert_eq!(p(3, "()"), Perm::identity(3));
    }

    #[test]
    fn display_roundtrips() {
        let q = p(6, "(1 3 5)(2 6)");
        assert_eq!(alloc::format!("{q}"), "(1 3 5)(2 6)");
        assert_eq!(p(6, &alloc::format!("{q}")), q);
        assert!(!p(3, "(1 2)").is_even());
    }
}
