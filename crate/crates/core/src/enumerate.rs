//! Exhaustive enumeration of small structures.
//!
//! Every enumerator filters a candidate space through the matching validator,
//! so its output is correct by construction. Results are sorted by their
//! table encoding, which keeps the order reproducible under parallel search.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::gpd::{GGMorphism, GroupGroupoid};
use crate::grp::catalog::base_groups;
use crate::grp::iso::homs;
use crate::grp::{compose, FiniteGroup, Group, GroupAction, GroupHom};
use crate::xmod::{XModGG, XModGroups};

/// Default bound on group orders.
pub const DEFAULT_MAX_ORDER: usize = 8;

/// Orders above this are refused whatever the configured bound.
pub const HARD_LIMIT: usize = 16;

pub const MAX_ORDER_VAR: &str = "GGX_MAX_ORDER";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumError {
    #[error("group {group} has order {order}, above the enumeration bound {bound}")]
    BoundExceeded {
        group: String,
        order: usize,
        bound: usize,
    },
    #[error("bound {0} is above the hard limit {HARD_LIMIT}")]
    BoundTooLarge(usize),
}

/// The bound from `GGX_MAX_ORDER`, or [`DEFAULT_MAX_ORDER`] when unset or
/// unparsable.
pub fn max_order_from_env() -> usize {
    std::env::var(MAX_ORDER_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ORDER)
}

fn check_bound(bound: usize, groups: &[&Group]) -> Result<(), EnumError> {
    if bound > HARD_LIMIT {
        return Err(EnumError::BoundTooLarge(bound));
    }
    match groups.iter().find(|g| g.order() > bound) {
        Some(g) => Err(EnumError::BoundExceeded {
            group: g.name().to_string(),
            order: g.order(),
            bound,
        }),
        None => Ok(()),
    }
}

pub fn all_homs(a: &Group, b: &Group, bound: usize) -> Result<Vec<GroupHom>, EnumError> {
    check_bound(bound, &[a, b])?;
    let mut out = homs(a, b);
    out.sort_by(|f, g| f.map().cmp(g.map()));
    Ok(out)
}

/// Automorphisms of `a` as permutation tables, identity first.
pub fn automorphisms(a: &Group) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = homs(a, a)
        .into_iter()
        .filter(|f| f.is_injective())
        .map(|f| f.map().to_vec())
        .collect();
    out.sort();
    out
}

/// `Aut(a)` under `σ + τ = σ ∘ τ`, with the permutation behind each element.
fn automorphism_group(a: &Group) -> (Group, Vec<Vec<usize>>) {
    let perms = automorphisms(a);
    let index: HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let names = (0..perms.len()).map(|i| format!("σ{i}")).collect();
    let table: Vec<usize> = perms
        .iter()
        .flat_map(|s| {
            perms
                .iter()
                .map(|t| index[t.iter().map(|&x| s[x]).collect::<Vec<_>>().as_slice()])
        })
        .collect();
    let n = perms.len();
    let aut = FiniteGroup::from_fn(format!("Aut({})", a.name()), names, |s, t| table[s * n + t]);
    (Arc::new(aut), perms)
}

/// Every action of `b` on `a`, one per homomorphism `b -> Aut(a)`.
pub fn all_actions(b: &Group, a: &Group, bound: usize) -> Result<Vec<GroupAction>, EnumError> {
    check_bound(bound, &[a, b])?;
    let (aut, perms) = automorphism_group(a);
    let mut out: Vec<GroupAction> = homs(b, &aut)
        .into_iter()
        .map(|rho| {
            let table = b.elements().map(|x| perms[rho.apply(x)].clone()).collect();
            GroupAction::from_perms(b.clone(), a.clone(), table)
                .expect("automorphism tables have the right shape")
        })
        .collect();
    out.sort_by_key(|act| act.perms());
    Ok(out)
}

pub fn all_xmod_groups(a: &Group, b: &Group, bound: usize) -> Result<Vec<XModGroups>, EnumError> {
    let boundaries = all_homs(a, b, bound)?;
    let actions = all_actions(b, a, bound)?;
    Ok(boundaries
        .par_iter()
        .flat_map_iter(|d| {
            actions.iter().filter_map(move |act| {
                let xm = XModGroups {
                    a: a.clone(),
                    b: b.clone(),
                    boundary: d.clone(),
                    action: act.clone(),
                };
                xm.validate().is_ok().then_some(xm)
            })
        })
        .collect())
}

/// Every `(d0, d1, ε)` making `g` a group-groupoid over `g0`, ordered by
/// `(ε, d0, d1)`.
pub fn all_gg_structures(
    g: &Group,
    g0: &Group,
    bound: usize,
) -> Result<Vec<GroupGroupoid>, EnumError> {
    let sections: Vec<GroupHom> = all_homs(g0, g, bound)?
        .into_iter()
        .filter(|e| e.is_injective())
        .collect();
    let retractions = all_homs(g, g0, bound)?;
    Ok(sections
        .par_iter()
        .flat_map_iter(|eps| {
            let split: Vec<&GroupHom> = retractions
                .iter()
                .filter(|d| g0.elements().all(|x| d.apply(eps.apply(x)) == x))
                .collect();
            let mut out = Vec::new();
            for &d0 in &split {
                for &d1 in &split {
                    let gg = GroupGroupoid {
                        arrows: g.clone(),
                        objects: g0.clone(),
                        d0: d0.clone(),
                        d1: d1.clone(),
                        eps: eps.clone(),
                    };
                    if gg.validate().is_ok() {
                        out.push(gg);
                    }
                }
            }
            out
        })
        .collect())
}

/// Naive isomorphism test: search arrow isomorphisms, the object map is
/// forced as `d0' ∘ f ∘ ε`.
pub fn gg_isomorphic(a: &GroupGroupoid, b: &GroupGroupoid) -> bool {
    if a.arrows.order() != b.arrows.order() || a.objects.order() != b.objects.order() {
        return false;
    }
    homs(&a.arrows, &b.arrows).into_iter().any(|f1| {
        if !f1.is_injective() {
            return false;
        }
        let f0 = GroupHom::from_fn(&a.objects, &b.objects, |x| {
            b.d0.apply(f1.apply(a.eps.apply(x)))
        });
        f0.is_injective()
            && GGMorphism {
                on_arrows: f1,
                on_objects: f0,
            }
            .validate(a, b)
            .is_ok()
    })
}

/// One group-groupoid per isomorphism class whose arrow group is a catalog
/// group of order `<= bound` and whose object group is a catalog group.
/// The first structure met in enumeration order represents its class.
pub fn catalog_group_groupoids(bound: usize) -> Result<Vec<GroupGroupoid>, EnumError> {
    check_bound(bound, &[])?;
    let groups = base_groups(bound);
    let mut reps: Vec<GroupGroupoid> = Vec::new();
    for g in &groups {
        for g0 in groups.iter().filter(|g0| g.order() % g0.order() == 0) {
            for gg in all_gg_structures(g, g0, bound)? {
                if !reps.iter().any(|r| gg_isomorphic(r, &gg)) {
                    reps.push(gg);
                }
            }
        }
    }
    Ok(reps)
}

/// Every crossed module `(G, H, ∂, ·)` of group-groupoids with `G` and `H`
/// drawn from [`catalog_group_groupoids`]. Instances are produced one
/// `(G, H)` pair at a time; candidates within a pair are filtered in
/// parallel.
pub fn all_xmod_gg(bound: usize) -> Result<impl Iterator<Item = XModGG>, EnumError> {
    let ggs = catalog_group_groupoids(bound)?;
    let pairs: Vec<(GroupGroupoid, GroupGroupoid)> = ggs
        .iter()
        .flat_map(|g| ggs.iter().map(move |h| (g.clone(), h.clone())))
        .collect();
    Ok(pairs
        .into_iter()
        .flat_map(move |(g, h)| xmod_gg_over(&g, &h, bound)))
}

/// The crossed modules of group-groupoids with the given domain and codomain.
pub fn xmod_gg_over(g: &GroupGroupoid, h: &GroupGroupoid, bound: usize) -> Vec<XModGG> {
    let boundaries = homs(&g.arrows, &h.arrows);
    let Ok(actions) = all_actions(&h.arrows, &g.arrows, bound) else {
        return Vec::new();
    };
    let mut out: Vec<XModGG> = boundaries
        .par_iter()
        .filter_map(|d1| {
            let d0 = compose(&compose(&h.d0, d1).ok()?, &g.eps).ok()?;
            let boundary = GGMorphism {
                on_arrows: d1.clone(),
                on_objects: d0,
            };
            boundary.validate(g, h).is_ok().then_some(boundary)
        })
        .flat_map_iter(|boundary| {
            actions.iter().filter_map(move |act| {
                let xm = XModGG {
                    g: g.clone(),
                    h: h.clone(),
                    boundary: boundary.clone(),
                    action: act.clone(),
                };
                (xm.arrow_level().validate().is_ok() && xm.validate().is_ok()).then_some(xm)
            })
        })
        .collect();
    out.sort_by(|x, y| {
        (x.boundary.on_arrows.map(), x.action.perms())
            .cmp(&(y.boundary.on_arrows.map(), y.action.perms()))
    });
    out
}

/// Frozen regression counts for every enumerator at a given bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub command: String,
    pub max_order: usize,
    /// `"A->B"` for catalog groups `A`, `B`.
    pub homs: BTreeMap<String, usize>,
    /// `"B on A"`.
    pub actions: BTreeMap<String, usize>,
    /// `"A->B"`.
    pub xmod_groups: BTreeMap<String, usize>,
    /// `"G over G0"`, listing only pairs with `|G0|` dividing `|G|`.
    pub gg_structures: BTreeMap<String, usize>,
    /// Isomorphism classes of catalog group-groupoids, by bound.
    pub gg_classes: BTreeMap<String, usize>,
    /// Size of the crossed-module corpus, by bound.
    pub xmod_gg: BTreeMap<String, usize>,
}

pub fn counts(bound: usize) -> Result<Counts, EnumError> {
    check_bound(bound, &[])?;
    let groups = base_groups(bound);
    let mut c = Counts {
        command: format!("ggx enumerate counts --max-order {bound}"),
        max_order: bound,
        homs: BTreeMap::new(),
        actions: BTreeMap::new(),
        xmod_groups: BTreeMap::new(),
        gg_structures: BTreeMap::new(),
        gg_classes: BTreeMap::new(),
        xmod_gg: BTreeMap::new(),
    };
    for a in &groups {
        for b in &groups {
            let (na, nb) = (a.name(), b.name());
            c.homs
                .insert(format!("{na}->{nb}"), all_homs(a, b, bound)?.len());
            c.actions
                .insert(format!("{na} on {nb}"), all_actions(a, b, bound)?.len());
            c.xmod_groups
                .insert(format!("{na}->{nb}"), all_xmod_groups(a, b, bound)?.len());
            if a.order() % b.order() == 0 {
                c.gg_structures.insert(
                    format!("{na} over {nb}"),
                    all_gg_structures(a, b, bound)?.len(),
                );
            }
        }
    }
    for k in 1..=bound {
        c.gg_classes
            .insert(k.to_string(), catalog_group_groupoids(k)?.len());
        c.xmod_gg.insert(k.to_string(), all_xmod_gg(k)?.count());
    }
    Ok(c)
}
