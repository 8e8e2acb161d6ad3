//! Backtracking over generator images: homomorphism enumeration and naive
//! isomorphism search.

use super::{Group, GroupHom};

/// Calls `visit` with every homomorphism table `a -> b`, in lexicographic
/// order of generator images. `visit` returns `false` to stop early.
pub fn for_each_hom(a: &Group, b: &Group, mut visit: impl FnMut(&[usize]) -> bool) {
    let gens = a.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let k = a.element_order(g);
            b.elements()
                .filter(|&y| k % b.element_order(y) == 0)
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(a, b, &gens, &candidates, &mut images, &mut visit);
}

fn search(
    a: &Group,
    b: &Group,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        let map = extend(a, b, gens, images).expect("checked at previous depth");
        return visit(&map);
    }
    for &y in &candidates[depth] {
        images.push(y);
        let ok = extend(a, b, &gens[..=depth], images).is_some();
        if ok && !search(a, b, gens, candidates, images, visit) {
            images.pop();
            return false;
        }
        images.pop();
    }
    true
}

/// Extends generator images along the Cayley graph; `None` on a conflict.
///
/// The returned table is defined on the subgroup generated by `gens` and
/// `usize::MAX` elsewhere. Consistency on every edge `x -> x + g` makes the
/// extension a homomorphism on that subgroup.
fn extend(a: &Group, b: &Group, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; a.order()];
    map[a.zero()] = b.zero();
    let mut queue = vec![a.zero()];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a.add(x, g);
            let fy = b.add(map[x], img);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// All homomorphisms `a -> b`, as hom values.
pub fn homs(a: &Group, b: &Group) -> Vec<GroupHom> {
    let mut out = Vec::new();
    for_each_hom(a, b, |m| {
        out.push(GroupHom::from_map_unchecked(
            a.clone(),
            b.clone(),
            m.to_vec(),
        ));
        true
    });
    out
}

/// First isomorphism `a -> b` found by the search, if any.
pub fn find_isomorphism(a: &Group, b: &Group) -> Option<GroupHom> {
    if a.order() != b.order() {
        return None;
    }
    let mut found = None;
    for_each_hom(a, b, |m| {
        let mut seen = vec![false; b.order()];
        if m.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
            found = Some(m.to_vec());
            return false;
        }
        true
    });
    found.map(|m| GroupHom::from_map_unchecked(a.clone(), b.clone(), m))
}

pub fn are_isomorphic(a: &Group, b: &Group) -> bool {
    find_isomorphism(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::*;
    use crate::grp::{conjugation_action, direct_product, semidirect_product};
    use std::sync::Arc;

    /// Filters every map table `a -> b`; independent of the generator search.
    fn brute_force_count(a: &Group, b: &Group) -> usize {
        let (n, m) = (a.order(), b.order());
        let total = m.pow(n as u32);
        (0..total)
            .filter(|&code| {
                let map: Vec<usize> = (0..n).map(|i| (code / m.pow(i as u32)) % m).collect();
                a.elements().all(|x| {
                    a.elements()
                        .all(|y| map[a.add(x, y)] == b.add(map[x], map[y]))
                })
            })
            .count()
    }

    #[test]
    fn hom_counts_match_brute_force() {
        let groups = [trivial(), cyclic(2), cyclic(3), cyclic(4), klein()];
        for a in &groups {
            for b in &groups {
                assert_eq!(
                    homs(a, b).len(),
                    brute_force_count(a, b),
                    "{} -> {}",
                    a.name(),
                    b.name()
                );
            }
        }
        assert_eq!(
            homs(&symmetric3(), &cyclic(2)).len(),
            brute_force_count(&symmetric3(), &cyclic(2))
        );
    }

    #[test]
    fn every_enumerated_map_is_a_hom() {
        for f in homs(&dihedral4(), &symmetric3()) {
            f.validate().unwrap();
        }
    }

    #[test]
    fn isomorphism_search() {
        let s3_direct = Arc::new(semidirect_product(
            &cyclic(3),
            &cyclic(2),
            &inversion_action(&cyclic(2), &cyclic(3)),
        ));
        let iso = find_isomorphism(&symmetric3(), &s3_direct).unwrap();
        assert!(iso.is_isomorphism());
        assert!(!are_isomorphic(&cyclic(4), &klein()));
        assert!(!are_isomorphic(&dihedral4(), &quaternion()));
        let z2 = cyclic(2);
        assert!(are_isomorphic(
            &klein(),
            &Arc::new(direct_product(&z2, &z2))
        ));
        let s3 = symmetric3();
        let inner = Arc::new(semidirect_product(&s3, &s3, &conjugation_action(&s3)));
        assert!(are_isomorphic(&inner, &Arc::new(direct_product(&s3, &s3))));
    }
}
