//! Automorphisms and isomorphisms by generator-image search.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::caps::Caps;
use crate::charsub::{center, derived};
use crate::error::{Error, Result};
use crate::subgroup::{extend, Subgroup};
use crate::table::{GroupHom, GroupTable};

/// A short generating set: greedy over elements by descending order, so
/// that image tuples stay few.
pub fn small_generating_set(g: &GroupTable) -> Vec<usize> {
    let mut by_order: Vec<usize> = (1..g.order()).collect();
    by_order.sort_by_key(|&x| (core::cmp::Reverse(g.element_order(x)), x));
    let mut cur = g.trivial();
    let mut gens = Vec::new();
    for x in by_order {
        if cur.size() == g.order() {
            break;
        }
        if !cur.contains(x) {
            let (next, ng) = extend(g, &cur, &gens, [x]);
            cur = next;
            gens = ng;
        }
    }
    gens
}

/// Spanning data for checking candidate images: BFS order of `⟨gens[..=i]⟩`
/// for each prefix, as (element, parent, generator index) triples.
struct Spanning {
    /// `stages[i]` lists every edge `(x·s, x, s)` of `⟨gens[..=i]⟩`.
    stages: Vec<Vec<(usize, usize, usize)>>,
}

impl Spanning {
    fn new(g: &GroupTable, gens: &[usize]) -> Spanning {
        let mut members = vec![0usize];
        let mut stages = Vec::with_capacity(gens.len());
        for i in 0..gens.len() {
            // Re-close the subgroup with generators 0..=i, recording every
            // edge (x, s) so that all relations among the prefix are checked.
            let mut edges = Vec::new();
            let mut queue: VecDeque<usize> = members.iter().copied().collect();
            let mut seen_here = vec![false; g.order()];
            for &m in &members {
                seen_here[m] = true;
            }
            while let Some(x) = queue.pop_front() {
                for (si, &s) in gens[..=i].iter().enumerate() {
                    let y = g.mul(x, s);
                    edges.push((y, x, si));
                    if !seen_here[y] {
                        seen_here[y] = true;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            stages.push(edges);
        }
        Spanning { stages }
    }
}

/// Extends `image` (partial map, `usize::MAX` = unset) through stage `i`,
/// returning false on a relation clash. Edges are in BFS order, so each
/// edge's source is already mapped.
fn extend_stage(
    target: &GroupTable,
    stage: &[(usize, usize, usize)],
    gen_images: &[usize],
    image: &mut [usize],
    used: &mut [bool],
    touched: &mut Vec<usize>,
) -> bool {
    for &(y, x, si) in stage {
        let v = target.mul(image[x], gen_images[si]);
        if image[y] == usize::MAX {
            if used[v] {
                return false;
            }
            image[y] = v;
            used[v] = true;
            touched.push(y);
        } else if image[y] != v {
            return false;
        }
    }
    true
}

/// Enumerates injective homomorphisms `source → target` that are onto,
/// i.e. isomorphisms, by backtracking over generator images. Calls `visit`
/// for each; stops when `visit` returns false.
fn search_isomorphisms(
    source: &GroupTable,
    target: &GroupTable,
    mut visit: impl FnMut(GroupHom) -> bool,
) {
    if source.order() != target.order() {
        return;
    }
    let gens = small_generating_set(source);
    let span = Spanning::new(source, &gens);
    let n = source.order();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[0] = 0;
    used[0] = true;
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            (1..n)
                .filter(|&t| target.element_order(t) == source.element_order(s))
                .collect()
        })
        .collect();
    let mut gen_images = vec![0usize; gens.len()];
    let mut stop = false;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        depth: usize,
        target: &GroupTable,
        span: &Spanning,
        candidates: &[Vec<usize>],
        gen_images: &mut Vec<usize>,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        stop: &mut bool,
        visit: &mut dyn FnMut(GroupHom) -> bool,
    ) {
        if *stop {
            return;
        }
        if depth == candidates.len() {
            if image.iter().all(|&v| v != usize::MAX)
                && !visit(GroupHom {
                    image_of: image.clone(),
                }) {
                    *stop = true;
                }
            return;
        }
        for &c in &candidates[depth] {
            gen_images[depth] = c;
            let mut touched = Vec::new();
            let ok = extend_stage(target, &span.stages[depth], gen_images, image, used, &mut touched);
            if ok {
                rec(depth + 1, target, span, candidates, gen_images, image, used, stop, visit);
            }
            for y in touched {
                used[image[y]] = false;
                image[y] = usize::MAX;
            }
            if *stop {
                return;
            }
        }
    }
    rec(
        0,
        target,
        &span,
        &candidates,
        &mut gen_images,
        &mut image,
        &mut used,
        &mut stop,
        &mut visit,
    );
}

/// `Aut(G)` as a table plus the automorphisms, sorted lexicographically by
/// images (identity first). Products compose left to right:
/// `(φψ)(x) = ψ(φ(x))`.
pub fn automorphism_group(g: &GroupTable, caps: &Caps) -> Result<(GroupTable, Vec<GroupHom>)> {
    Caps::check("automorphism group", g.order(), caps.automorphism)?;
    let mut auts = Vec::new();
    let mut overflow = false;
    search_isomorphisms(g, g, |h| {
        auts.push(h);
        if auts.len() > caps.table_order.min(Caps::HARD_LIMIT) {
            overflow = true;
            return false;
        }
        true
    });
    if overflow {
        return Err(Error::OrderCapExceeded {
            what: "automorphism group table",
            needed: auts.len(),
            cap: caps.table_order.min(Caps::HARD_LIMIT),
        });
    }
    auts.sort();
    let index: BTreeMap<&[usize], usize> = auts
        .iter()
        .enumerate()
        .map(|(i, a)| (a.image_of.as_slice(), i))
        .collect();
    let m = auts.len();
    let table = GroupTable::from_fn(m, |a, b| {
        let c = auts[a].then(&auts[b]);
        index[c.image_of.as_slice()]
    })
    .with_provenance("automorphism group");
    Ok((table, auts))
}

/// A witness `x` with `φ(a) = x⁻¹ax` for all `a`, the least such index.
pub fn is_inner(g: &GroupTable, phi: &GroupHom) -> Result<Option<usize>> {
    if !phi.is_bijective(g) || !phi.is_homomorphism(g, g) {
        return Err(Error::NotAutomorphism);
    }
    Ok(inner_witness(g, &phi.image_of))
}

/// `is_inner` without the automorphism validation; `images` must be an
/// automorphism of `g`.
pub(crate) fn inner_witness(g: &GroupTable, images: &[usize]) -> Option<usize> {
    let gens = g.generators();
    (0..g.order()).find(|&x| gens.iter().all(|&s| images[s] == g.conj(s, x)))
}

/// Pre-filter invariants: order, element-order profile, `|Z|`, `|G'|`.
fn invariants(g: &GroupTable) -> (usize, Vec<(u32, u32)>, usize, usize) {
    (g.order(), g.order_profile(), center(g).size(), derived(g).size())
}

pub fn find_isomorphism(a: &GroupTable, b: &GroupTable, caps: &Caps) -> Result<Option<GroupHom>> {
    if invariants(a) != invariants(b) {
        return Ok(None);
    }
    Caps::check("isomorphism search", a.order(), caps.automorphism)?;
    let mut found = None;
    search_isomorphisms(a, b, |h| {
        found = Some(h);
        false
    });
    Ok(found)
}

/// Abelian groups are decided by their order profile; otherwise an explicit
/// isomorphism is searched for.
pub fn is_isomorphic(a: &GroupTable, b: &GroupTable, caps: &Caps) -> Result<bool> {
    if invariants(a) != invariants(b) {
        return Ok(false);
    }
    if a.is_abelian() {
        return Ok(true);
    }
    Ok(find_isomorphism(a, b, caps)?.is_some())
}

/// `|Out(G)| = |Aut(G)| · |Z(G)| / |G|`.
pub fn out_order(g: &GroupTable, caps: &Caps) -> Result<usize> {
    let (aut, _) = automorphism_group(g, caps)?;
    Ok(aut.order() * center(g).size() / g.order())
}

/// The inner automorphisms inside `Aut(G)` as computed by
/// [`automorphism_group`].
pub fn inner_subgroup(g: &GroupTable, auts: &[GroupHom]) -> Subgroup {
    let mask = crate::mask::Mask::from_indices(
        auts.len(),
        auts.iter()
            .enumerate()
            .filter(|(_, a)| inner_witness(g, &a.image_of).is_some())
            .map(|(i, _)| i),
    );
    Subgroup::from_mask(mask)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{from_permutations, parse_cycles, perm_group as pg, Perm};
    use crate::subgroup::is_normal;

    fn perm_group(deg: usize, gens: &[&str]) -> GroupTable {
        let gens: Vec<_> = gens.iter().map(|s| parse_cycles(deg, s, 1).unwrap()).collect();
        from_permutations(deg, &gens, &Caps::default()).unwrap()
    }

    /// Counts bijections fixing 0 that preserve the table.
    fn aut_count_oracle(g: &GroupTable) -> usize {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = g.order();
        perms(n - 1)
            .into_iter()
            .map(|p| {
                let mut img = vec![0];
                img.extend(p.into_iter().map(|x| x + 1));
                GroupHom { image_of: img }
            })
            .filter(|h| h.is_homomorphism(g, g))
            .count()
    }

    #[test]
    fn klein_and_c5() {
        let v4 = perm_group(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let (aut, auts) = automorphism_group(&v4, &Caps::default()).unwrap();
        assert_eq!(aut.order(), 6);
        assert_eq!(aut_count_oracle(&v4), 6);
        assert_eq!(auts[0], GroupHom::identity(&v4));
        let s3 = perm_group(3, &["(1 2 3)", "(1 2)"]);
        assert!(is_isomorphic(&aut, &s3, &Caps::default()).unwrap());
        let c5 = perm_group(5, &["(1 2 3 4 5)"]);
        assert_eq!(automorphism_group(&c5, &Caps::default()).unwrap().0.order(), 4);
    }

    #[test]
    fn a5_automorphisms() {
        let a5 = perm_group(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        let (aut, auts) = automorphism_group(&a5, &Caps::default()).unwrap();
        assert_eq!(aut.order(), 120);
        assert_eq!(out_order(&a5, &Caps::default()).unwrap(), 2);
        let inn = inner_subgroup(&a5, &auts);
        assert_eq!(inn.size(), 60);
        assert!(is_normal(&aut, &inn));
        assert!(aut.check_associative(0));
    }

    #[test]
    fn inner_and_outer_witnesses() {
        let caps = Caps::default();
        let gens = [parse_cycles(5, "(1 2 3 4 5)", 1).unwrap(), parse_cycles(5, "(1 2 3)", 1).unwrap()];
        let a5 = pg(5, &gens, &caps).unwrap();
        let conj_by = |p: &Perm| GroupHom {
            image_of: a5
                .elements
                .iter()
                .map(|e| {
                    let c = p.inverse().then(e).then(p);
                    a5.elements.iter().position(|f| *f == c).unwrap()
                })
                .collect(),
        };
        let inner = conj_by(&parse_cycles(5, "(1 2)(3 4)", 1).unwrap());
        assert!(is_inner(&a5.table, &inner).unwrap().is_some());
        let outer = conj_by(&parse_cycles(5, "(1 2)", 1).unwrap());
        assert_eq!(is_inner(&a5.table, &outer).unwrap(), None);
        let c4 = perm_group(4, &["(1 2 3 4)"]);
        assert_eq!(is_inner(&c4, &GroupHom::identity(&c4)).unwrap(), Some(0));
        let bad = GroupHom { image_of: vec![0, 1, 1, 3] };
        assert_eq!(is_inner(&c4, &bad).unwrap_err(), Error::NotAutomorphism);
    }

    #[test]
    fn d8_is_not_q8() {
        let d8 = perm_group(4, &["(1 2 3 4)", "(1 3)"]);
        let q8 = perm_group(8, &["(1 2 4 8)(3 6 7 5)", "(1 3 4 7)(2 5 8 6)"]);
        assert!(!is_isomorphic(&d8, &q8, &Caps::default()).unwrap());
        assert!(is_isomorphic(&q8, &q8, &Caps::default()).unwrap());
        let relabelled = perm_group(4, &["(1 3)", "(1 2 3 4)"]);
        let iso = find_isomorphism(&d8, &relabelled, &Caps::default()).unwrap().unwrap();
        assert!(iso.is_homomorphism(&d8, &relabelled) && iso.is_bijective(&relabelled));
    }
}
