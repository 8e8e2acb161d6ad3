//! Named base groups used by the examples, the enumerator and the CLI.

use std::sync::Arc;

use super::{direct_product, semidirect_product, FiniteGroup, Group, GroupAction};

/// Names accepted by [`by_name`], in ascending order.
pub const BASE_GROUPS: &[&str] = &[
    "1", "Z2", "Z3", "Z4", "K4", "Z5", "Z6", "S3", "Z7", "Z8", "D4", "Q8",
];

pub fn trivial() -> Group {
    Arc::new(FiniteGroup::from_fn("1", vec!["0".into()], |_, _| 0))
}

/// `Z/n` with elements `0..n`.
pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    if n == 1 {
        return trivial();
    }
    let names = (0..n).map(|i| i.to_string()).collect();
    Arc::new(FiniteGroup::from_fn(format!("Z{n}"), names, |a, b| {
        (a + b) % n
    }))
}

pub fn klein() -> Group {
    let z2 = cyclic(2);
    Arc::new(direct_product(&z2, &z2).with_name("K4"))
}

/// `b · a = -a` for the non-identity element `b` of a group of order 2.
pub fn inversion_action(actor: &Group, target: &Group) -> GroupAction {
    assert_eq!(actor.order(), 2);
    let z = actor.zero();
    GroupAction::from_fn(actor, target, |b, a| if b == z { a } else { target.neg(a) })
}

/// `S3` modelled as `Z3 ⋊ Z2` with the inversion action.
pub fn symmetric3() -> Group {
    let (z3, z2) = (cyclic(3), cyclic(2));
    let inv = inversion_action(&z2, &z3);
    Arc::new(semidirect_product(&z3, &z2, &inv).with_name("S3"))
}

/// `D4` (order 8) modelled as `Z4 ⋊ Z2` with the inversion action.
pub fn dihedral4() -> Group {
    let (z4, z2) = (cyclic(4), cyclic(2));
    let inv = inversion_action(&z2, &z4);
    Arc::new(semidirect_product(&z4, &z2, &inv).with_name("D4"))
}

/// Quaternion group on `1, -1, i, -i, j, -j, k, -k`, written additively.
pub fn quaternion() -> Group {
    // element 2u + s is (-1)^s times unit u, units 1, i, j, k
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // unit product table: (sign, unit)
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    Arc::new(FiniteGroup::from_fn("Q8", names, |x, y| {
        let (u, s) = (x / 2, x % 2);
        let (v, t) = (y / 2, y % 2);
        let (sign, w) = UNIT[u][v];
        2 * w + (s + t + sign) % 2
    }))
}

pub fn by_name(name: &str) -> Option<Group> {
    Some(match name {
        "1" | "Z1" => trivial(),
        "K4" => klein(),
        "S3" => symmetric3(),
        "D4" => dihedral4(),
        "Q8" => quaternion(),
        _ => {
            let n: usize = name.strip_prefix('Z')?.parse().ok()?;
            if !(1..=64).contains(&n) {
                return None;
            }
            cyclic(n)
        }
    })
}

/// The base-group catalog restricted to orders `<= max_order`.
pub fn base_groups(max_order: usize) -> Vec<Group> {
    BASE_GROUPS
        .iter()
        .map(|n| by_name(n).expect("catalog name"))
        .filter(|g| g.order() <= max_order)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::validate_group;

    #[test]
    fn catalog_groups_validate() {
        for g in base_groups(64) {
            validate_group(g.names(), &g.rows()).unwrap();
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion();
        let involutions: Vec<_> = q.elements().filter(|&x| q.element_order(x) == 2).collect();
        assert_eq!(involutions, vec![1]);
        assert!(!q.is_abelian());
        assert_eq!(q.element_order(q.index_of("i").unwrap()), 4);
    }

    #[test]
    fn dihedral_and_symmetric_are_nonabelian() {
        assert!(!symmetric3().is_abelian());
        assert!(!dihedral4().is_abelian());
        assert!(klein().is_abelian());
        assert_eq!(
            dihedral4()
                .elements()
                .filter(|&x| dihedral4().element_order(x) == 2)
                .count(),
            5
        );
    }

    #[test]
    fn names_resolve() {
        for &n in BASE_GROUPS {
            assert!(by_name(n).is_some(), "{n}");
        }
        assert!(by_name("X9").is_none());
        assert_eq!(by_name("Z12").unwrap().order(), 12);
    }
}
