//! Group-groupoids: internal groupoids in groups.
//!
//! Composition is never stored. For `a : x -> y` and `b : y -> z` the
//! composite `b ∘ a` ("a, then b") is `b - ε(d0 b) + a`, which the kernel
//! commutation axiom makes equal to `a - ε(d1 a) + b`.

use std::sync::Arc;

use thiserror::Error;

use crate::grp::{
    compose, conjugation_action, pair_index, pair_parts, same_group, semidirect_product,
    FiniteGroup, Group, GroupAction, GroupHom, SplitExtension,
};
use crate::report::{Invalid, Report, WithinExt};
use crate::xmod::XModGroups;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("arrows {first} and {second} are not composable")]
pub struct NotComposable {
    pub first: usize,
    pub second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupGroupoid {
    pub arrows: Group,
    pub objects: Group,
    pub d0: GroupHom,
    pub d1: GroupHom,
    pub eps: GroupHom,
}

pub(crate) fn check_maps(pieces: &[(&str, &GroupHom, &Group, &Group)]) -> Report {
    for &(part, f, dom, cod) in pieces {
        if !same_group(f.domain(), dom) || !same_group(f.codomain(), cod) {
            return Err(Invalid::malformed(format!(
                "{part} should map {} to {}",
                dom.name(),
                cod.name()
            )));
        }
        f.validate().within(part)?;
    }
    Ok(())
}

impl GroupGroupoid {
    /// Every arrow is an identity: `G = G0`, all structure maps the identity.
    pub fn discrete(g: &Group) -> GroupGroupoid {
        let id = GroupHom::identity(g);
        GroupGroupoid {
            arrows: g.clone(),
            objects: g.clone(),
            d0: id.clone(),
            d1: id.clone(),
            eps: id,
        }
    }

    /// `A x A` on `A`: `d0(a, b) = a`, `d1(a, b) = b`, `ε(a) = (a, a)`.
    pub fn pair(a: &Group) -> GroupGroupoid {
        let arrows: Group = Arc::new(crate::grp::direct_product(a, a));
        let n = a.order();
        GroupGroupoid {
            d0: GroupHom::from_fn(&arrows, a, |i| pair_parts(i, n).0),
            d1: GroupHom::from_fn(&arrows, a, |i| pair_parts(i, n).1),
            eps: GroupHom::from_fn(a, &arrows, |x| pair_index(x, x, n)),
            arrows,
            objects: a.clone(),
        }
    }

    /// Group-groupoid of a crossed module of groups: arrows `A ⋊ B` over `B`,
    /// `d0(a, b) = b`, `d1(a, b) = ∂a + b`, `ε(b) = (0, b)`.
    pub fn from_xmod(xm: &XModGroups) -> GroupGroupoid {
        let (a, b) = (&xm.a, &xm.b);
        let arrows: Group = Arc::new(semidirect_product(a, b, &xm.action));
        let nb = b.order();
        let za = a.zero();
        GroupGroupoid {
            d0: GroupHom::from_fn(&arrows, b, |i| pair_parts(i, nb).1),
            d1: GroupHom::from_fn(&arrows, b, |i| {
                let (x, y) = pair_parts(i, nb);
                b.add(xm.boundary.apply(x), y)
            }),
            eps: GroupHom::from_fn(b, &arrows, |y| pair_index(za, y, nb)),
            arrows,
            objects: b.clone(),
        }
    }

    /// Crossed module `(Ker d0, G0, d1|, ε(b) + a - ε(b))`.
    pub fn to_xmod(&self) -> XModGroups {
        let (ker, emb) = self.ker_d0();
        let boundary = compose(&self.d1, &emb).expect("embedding into arrows");
        let g = &self.arrows;
        let action = GroupAction::from_fn(&self.objects, g, |y, a| g.conj(self.eps.apply(y), a))
            .restrict(&GroupHom::identity(&self.objects), &emb)
            .expect("conjugation by identities preserves Ker d0");
        XModGroups {
            a: ker,
            b: self.objects.clone(),
            boundary,
            action,
        }
    }

    /// The isomorphism `a ↦ (a - ε(d0 a), d0 a)` onto `from_xmod(to_xmod())`.
    pub fn splitting_iso(&self, rebuilt: &GroupGroupoid) -> GGMorphism {
        let (_, emb) = self.ker_d0();
        let mut local = vec![usize::MAX; self.arrows.order()];
        for (i, &k) in emb.map().iter().enumerate() {
            local[k] = i;
        }
        let n0 = self.objects.order();
        let on_arrows = GroupHom::from_fn(&self.arrows, &rebuilt.arrows, |a| {
            let x = self.d0.apply(a);
            let k = self.arrows.sub(a, self.eps.apply(x));
            pair_index(local[k], x, n0)
        });
        GGMorphism {
            on_arrows,
            on_objects: GroupHom::identity(&self.objects),
        }
    }

    /// Group-groupoid structure on `G ⋊ H` with componentwise structure maps.
    ///
    /// The object-level action is `y · x = d0(ε(y) · ε(x))`; fails if that is
    /// not a group action.
    pub fn semidirect(
        g: &GroupGroupoid,
        h: &GroupGroupoid,
        act: &GroupAction,
    ) -> Result<GroupGroupoid, Invalid> {
        let obj_act = induced_object_action(g, h, act);
        obj_act.validate().within("object action")?;
        let arrows: Group = Arc::new(semidirect_product(&g.arrows, &h.arrows, act));
        let objects: Group = Arc::new(semidirect_product(&g.objects, &h.objects, &obj_act));
        Ok(GroupGroupoid {
            d0: GroupHom::product(&g.d0, &h.d0, &arrows, &objects),
            d1: GroupHom::product(&g.d1, &h.d1, &arrows, &objects),
            eps: GroupHom::product(&g.eps, &h.eps, &objects, &arrows),
            arrows,
            objects,
        })
    }

    pub fn validate(&self) -> Report {
        check_maps(&[
            ("d0", &self.d0, &self.arrows, &self.objects),
            ("d1", &self.d1, &self.arrows, &self.objects),
            ("eps", &self.eps, &self.objects, &self.arrows),
        ])?;
        let (g, g0) = (&self.arrows, &self.objects);
        for (tag, d) in [("d0∘ε = id", &self.d0), ("d1∘ε = id", &self.d1)] {
            if let Some(y) = g0.elements().find(|&y| d.apply(self.eps.apply(y)) != y) {
                return Err(Invalid::axiom(
                    tag,
                    vec![y],
                    format!(
                        "object {} goes to {}",
                        g0.element_name(y),
                        g0.element_name(d.apply(self.eps.apply(y)))
                    ),
                ));
            }
        }
        let k0 = self.d0.kernel_mask();
        let k1 = self.d1.kernel_mask();
        for a in g.elements().filter(|&a| k0[a]) {
            for b in g.elements().filter(|&b| k1[b]) {
                if g.add(a, b) != g.add(b, a) {
                    return Err(Invalid::axiom(
                        "kernel commutation",
                        vec![a, b],
                        format!(
                            "{} in Ker d0 and {} in Ker d1 do not commute",
                            g.element_name(a),
                            g.element_name(b)
                        ),
                    ));
                }
            }
        }
        self.check_composition()
    }

    /// Groupoid laws of the derived composition, exhaustively.
    fn check_composition(&self) -> Report {
        let g = &self.arrows;
        let stars = self.stars();
        for a in g.elements() {
            let (x, y) = (self.d0.apply(a), self.d1.apply(a));
            if self.compose_unchecked(a, self.eps.apply(y)) != a
                || self.compose_unchecked(self.eps.apply(x), a) != a
            {
                return Err(Invalid::axiom(
                    "composition: identity",
                    vec![a],
                    format!("identities do not fix {}", g.element_name(a)),
                ));
            }
            let inv = self.inverse(a);
            if self.d0.apply(inv) != y
                || self.d1.apply(inv) != x
                || self.compose_unchecked(a, inv) != self.eps.apply(x)
                || self.compose_unchecked(inv, a) != self.eps.apply(y)
            {
                return Err(Invalid::axiom(
                    "composition: inverse",
                    vec![a],
                    format!("{} has no groupoid inverse", g.element_name(a)),
                ));
            }
            for &b in &stars[y] {
                let ba = self.compose_unchecked(a, b);
                let alt = g.add(g.sub(a, self.eps.apply(y)), b);
                if ba != alt {
                    return Err(Invalid::axiom(
                        "composition: two expressions",
                        vec![a, b],
                        format!(
                            "b - ε(d0 b) + a != a - ε(d1 a) + b for a = {}, b = {}",
                            g.element_name(a),
                            g.element_name(b)
                        ),
                    ));
                }
                if self.d0.apply(ba) != x || self.d1.apply(ba) != self.d1.apply(b) {
                    return Err(Invalid::axiom(
                        "composition: endpoints",
                        vec![a, b],
                        format!(
                            "{} then {} has wrong endpoints",
                            g.element_name(a),
                            g.element_name(b)
                        ),
                    ));
                }
                for &c in &stars[self.d1.apply(b)] {
                    let left = self.compose_unchecked(ba, c);
                    let right = self.compose_unchecked(a, self.compose_unchecked(b, c));
                    if left != right {
                        return Err(Invalid::axiom(
                            "composition: associativity",
                            vec![a, b, c],
                            format!(
                                "(c∘b)∘a != c∘(b∘a) for a = {}, b = {}, c = {}",
                                g.element_name(a),
                                g.element_name(b),
                                g.element_name(c)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `(b∘a) + (b1∘a1) = (b + b1)∘(a + a1)` over all composable pairs.
    pub fn check_interchange(&self) -> Report {
        let g = &self.arrows;
        let pairs = self.composable_pairs();
        for &(a, b) in &pairs {
            let ba = self.compose_unchecked(a, b);
            for &(a1, b1) in &pairs {
                let lhs = g.add(ba, self.compose_unchecked(a1, b1));
                let rhs = self.compose_unchecked(g.add(a, a1), g.add(b, b1));
                if lhs != rhs {
                    return Err(Invalid::axiom(
                        "interchange (sum/composition)",
                        vec![a, b, a1, b1],
                        format!(
                            "(b∘a) + (b1∘a1) != (b+b1)∘(a+a1) for a = {}, b = {}, a1 = {}, b1 = {}",
                            g.element_name(a),
                            g.element_name(b),
                            g.element_name(a1),
                            g.element_name(b1)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `b ∘ a` for `a` then `b`; requires `d1(a) = d0(b)`.
    pub fn compose(&self, a: usize, b: usize) -> Result<usize, NotComposable> {
        if self.d1.apply(a) != self.d0.apply(b) {
            return Err(NotComposable {
                first: a,
                second: b,
            });
        }
        Ok(self.compose_unchecked(a, b))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, a: usize, b: usize) -> usize {
        let g = &self.arrows;
        g.add(g.sub(b, self.eps.apply(self.d0.apply(b))), a)
    }

    /// `ε(d0 a) - a + ε(d1 a)`.
    pub fn inverse(&self, a: usize) -> usize {
        let g = &self.arrows;
        g.add(
            g.sub(self.eps.apply(self.d0.apply(a)), a),
            self.eps.apply(self.d1.apply(a)),
        )
    }

    pub fn is_composable(&self, a: usize, b: usize) -> bool {
        self.d1.apply(a) == self.d0.apply(b)
    }

    /// Arrows starting at `x`.
    pub fn star(&self, x: usize) -> Vec<usize> {
        self.arrows
            .elements()
            .filter(|&a| self.d0.apply(a) == x)
            .collect()
    }

    /// Arrows ending at `x`.
    pub fn costar(&self, x: usize) -> Vec<usize> {
        self.arrows
            .elements()
            .filter(|&a| self.d1.apply(a) == x)
            .collect()
    }

    /// `stars()[x] = star(x)` for every object.
    pub fn stars(&self) -> Vec<Vec<usize>> {
        let mut stars = vec![Vec::new(); self.objects.order()];
        for a in self.arrows.elements() {
            stars[self.d0.apply(a)].push(a);
        }
        stars
    }

    /// Pairs `(a, b)` with `d1 a = d0 b`.
    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let stars = self.stars();
        self.arrows
            .elements()
            .flat_map(|a| stars[self.d1.apply(a)].iter().map(move |&b| (a, b)))
            .collect()
    }

    pub fn ker_d0(&self) -> (Group, GroupHom) {
        FiniteGroup::subgroup(
            &self.arrows,
            &self.d0.kernel_mask(),
            format!("Ker d0({})", self.arrows.name()),
        )
    }

    pub fn ker_d1(&self) -> (Group, GroupHom) {
        FiniteGroup::subgroup(
            &self.arrows,
            &self.d1.kernel_mask(),
            format!("Ker d1({})", self.arrows.name()),
        )
    }

    pub fn is_discrete(&self) -> bool {
        self.arrows.order() == self.objects.order()
    }
}

/// `y · x = d0(ε(y) · ε(x))` for an action of `H` on `G`.
pub(crate) fn induced_object_action(
    g: &GroupGroupoid,
    h: &GroupGroupoid,
    act: &GroupAction,
) -> GroupAction {
    GroupAction::from_fn(&h.objects, &g.objects, |y, x| {
        g.d0.apply(act.act(h.eps.apply(y), g.eps.apply(x)))
    })
}

/// A functor between group-groupoids: homomorphisms on arrows and objects
/// commuting with `d0`, `d1` and `ε`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GGMorphism {
    pub on_arrows: GroupHom,
    pub on_objects: GroupHom,
}

impl GGMorphism {
    pub fn identity(g: &GroupGroupoid) -> GGMorphism {
        GGMorphism {
            on_arrows: GroupHom::identity(&g.arrows),
            on_objects: GroupHom::identity(&g.objects),
        }
    }

    pub fn validate(&self, dom: &GroupGroupoid, cod: &GroupGroupoid) -> Report {
        check_maps(&[
            ("on arrows", &self.on_arrows, &dom.arrows, &cod.arrows),
            ("on objects", &self.on_objects, &dom.objects, &cod.objects),
        ])?;
        let (f1, f0) = (&self.on_arrows, &self.on_objects);
        for (tag, d, d2) in [
            ("functor: d0", &dom.d0, &cod.d0),
            ("functor: d1", &dom.d1, &cod.d1),
        ] {
            if let Some(a) = dom
                .arrows
                .elements()
                .find(|&a| d2.apply(f1.apply(a)) != f0.apply(d.apply(a)))
            {
                return Err(Invalid::axiom(
                    tag,
                    vec![a],
                    format!("square fails at arrow {}", dom.arrows.element_name(a)),
                ));
            }
        }
        if let Some(x) = dom
            .objects
            .elements()
            .find(|&x| f1.apply(dom.eps.apply(x)) != cod.eps.apply(f0.apply(x)))
        {
            return Err(Invalid::axiom(
                "functor: ε",
                vec![x],
                format!("square fails at object {}", dom.objects.element_name(x)),
            ));
        }
        Ok(())
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &GGMorphism, inner: &GGMorphism) -> Result<GGMorphism, Invalid> {
        Ok(GGMorphism {
            on_arrows: compose(&outer.on_arrows, &inner.on_arrows)?,
            on_objects: compose(&outer.on_objects, &inner.on_objects)?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.on_arrows.inverse().is_some() && self.on_objects.inverse().is_some()
    }
}

/// A split extension of group-groupoids `G -> K -> H` with section `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtensionGG {
    pub kernel: GroupGroupoid,
    pub total: GroupGroupoid,
    pub quotient: GroupGroupoid,
    pub inclusion: GGMorphism,
    pub projection: GGMorphism,
    pub section: GGMorphism,
}

impl SplitExtensionGG {
    /// `G -> G ⋊ H -> H` with `ι(a) = (a, 0)`, `p(a, b) = b`, `s(b) = (0, b)` on both levels.
    pub fn semidirect(
        g: &GroupGroupoid,
        h: &GroupGroupoid,
        act: &GroupAction,
    ) -> Result<SplitExtensionGG, Invalid> {
        let total = GroupGroupoid::semidirect(g, h, act)?;
        let level = |kernel: &Group, quotient: &Group, tot: &Group| {
            let nb = quotient.order();
            let (za, zb) = (kernel.zero(), quotient.zero());
            (
                GroupHom::from_fn(kernel, tot, |x| pair_index(x, zb, nb)),
                GroupHom::from_fn(tot, quotient, |i| pair_parts(i, nb).1),
                GroupHom::from_fn(quotient, tot, |y| pair_index(za, y, nb)),
            )
        };
        let (i1, p1, s1) = level(&g.arrows, &h.arrows, &total.arrows);
        let (i0, p0, s0) = level(&g.objects, &h.objects, &total.objects);
        Ok(SplitExtensionGG {
            kernel: g.clone(),
            quotient: h.clone(),
            total,
            inclusion: GGMorphism {
                on_arrows: i1,
                on_objects: i0,
            },
            projection: GGMorphism {
                on_arrows: p1,
                on_objects: p0,
            },
            section: GGMorphism {
                on_arrows: s1,
                on_objects: s0,
            },
        })
    }

    /// Extension of `g` by itself associated with the conjugation action.
    pub fn conjugation(g: &GroupGroupoid) -> Result<SplitExtensionGG, Invalid> {
        Self::semidirect(g, g, &conjugation_action(&g.arrows))
    }

    pub fn arrow_level(&self) -> SplitExtension {
        SplitExtension {
            kernel: self.kernel.arrows.clone(),
            total: self.total.arrows.clone(),
            quotient: self.quotient.arrows.clone(),
            inclusion: self.inclusion.on_arrows.clone(),
            projection: self.projection.on_arrows.clone(),
            section: self.section.on_arrows.clone(),
        }
    }

    pub fn object_level(&self) -> SplitExtension {
        SplitExtension {
            kernel: self.kernel.objects.clone(),
            total: self.total.objects.clone(),
            quotient: self.quotient.objects.clone(),
            inclusion: self.inclusion.on_objects.clone(),
            projection: self.projection.on_objects.clone(),
            section: self.section.on_objects.clone(),
        }
    }

    pub fn validate(&self) -> Report {
        self.kernel.validate().within("kernel")?;
        self.total.validate().within("total")?;
        self.quotient.validate().within("quotient")?;
        self.inclusion
            .validate(&self.kernel, &self.total)
            .within("inclusion")?;
        self.projection
            .validate(&self.total, &self.quotient)
            .within("projection")?;
        self.section
            .validate(&self.quotient, &self.total)
            .within("section")?;
        self.arrow_level().validate().within("arrow level")?;
        self.object_level().validate().within("object level")
    }
}
