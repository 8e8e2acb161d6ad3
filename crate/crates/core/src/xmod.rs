//! Crossed modules over groups and over group-groupoids.

use crate::gpd::{check_maps, induced_object_action, GGMorphism, GroupGroupoid};
use crate::grp::{
    compose, conjugation_action, pair_index, pair_parts, same_group, trivial_action, FiniteGroup,
    Group, GroupAction, GroupHom,
};
use crate::report::{Invalid, Report, WithinExt};

/// `∂ : A -> B` with an action of `B` on `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModGroups {
    pub a: Group,
    pub b: Group,
    pub boundary: GroupHom,
    pub action: GroupAction,
}

impl XModGroups {
    /// `(G, G, id)` with conjugation.
    pub fn identity(g: &Group) -> XModGroups {
        XModGroups {
            a: g.clone(),
            b: g.clone(),
            boundary: GroupHom::identity(g),
            action: conjugation_action(g),
        }
    }

    /// `(A, B, 0)` with the given action; a crossed module only when `A` is abelian.
    pub fn zero_boundary(a: &Group, b: &Group, action: GroupAction) -> XModGroups {
        XModGroups {
            a: a.clone(),
            b: b.clone(),
            boundary: GroupHom::zero(a, b),
            action,
        }
    }

    /// `(N, G, inc)` for the subgroup marked by `mask`, with conjugation.
    pub fn inclusion(g: &Group, mask: &[bool]) -> Result<XModGroups, Invalid> {
        if mask.len() != g.order() || !g.is_subgroup(mask) {
            return Err(Invalid::malformed("mask does not mark a subgroup"));
        }
        if !g.is_normal(mask) {
            return Err(Invalid::axiom(
                "normal subgroup",
                vec![],
                "subgroup is not normal",
            ));
        }
        let (n, emb) = FiniteGroup::subgroup(g, mask, format!("N({})", g.name()));
        let action = conjugation_action(g).restrict(&GroupHom::identity(g), &emb)?;
        Ok(XModGroups {
            a: n,
            b: g.clone(),
            boundary: emb,
            action,
        })
    }

    pub fn validate(&self) -> Report {
        check_maps(&[("boundary", &self.boundary, &self.a, &self.b)])?;
        if !same_group(self.action.actor(), &self.b) || !same_group(self.action.target(), &self.a) {
            return Err(Invalid::malformed("action should be an action of B on A"));
        }
        self.action.validate().within("action")?;
        let (a, b, d) = (&self.a, &self.b, &self.boundary);
        for y in b.elements() {
            for x in a.elements() {
                if d.apply(self.action.act(y, x)) != b.conj(y, d.apply(x)) {
                    return Err(Invalid::axiom(
                        "CM1",
                        vec![y, x],
                        format!(
                            "∂({} · {}) != {} + ∂{} - {}",
                            b.element_name(y),
                            a.element_name(x),
                            b.element_name(y),
                            a.element_name(x),
                            b.element_name(y)
                        ),
                    ));
                }
            }
        }
        for x in a.elements() {
            for x1 in a.elements() {
                if self.action.act(d.apply(x), x1) != a.conj(x, x1) {
                    return Err(Invalid::axiom(
                        "CM2",
                        vec![x, x1],
                        format!(
                            "∂{} · {} != {} + {} - {}",
                            a.element_name(x),
                            a.element_name(x1),
                            a.element_name(x),
                            a.element_name(x1),
                            a.element_name(x)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModGroupsMorphism {
    pub f1: GroupHom,
    pub f2: GroupHom,
}

impl XModGroupsMorphism {
    pub fn identity(xm: &XModGroups) -> XModGroupsMorphism {
        XModGroupsMorphism {
            f1: GroupHom::identity(&xm.a),
            f2: GroupHom::identity(&xm.b),
        }
    }

    pub fn validate(&self, dom: &XModGroups, cod: &XModGroups) -> Report {
        check_maps(&[
            ("f1", &self.f1, &dom.a, &cod.a),
            ("f2", &self.f2, &dom.b, &cod.b),
        ])?;
        if let Some(x) = dom
            .a
            .elements()
            .find(|&x| self.f2.apply(dom.boundary.apply(x)) != cod.boundary.apply(self.f1.apply(x)))
        {
            return Err(Invalid::axiom(
                "morphism: boundary",
                vec![x],
                format!("f2∂ and ∂'f1 differ at {}", dom.a.element_name(x)),
            ));
        }
        for y in dom.b.elements() {
            for x in dom.a.elements() {
                let lhs = self.f1.apply(dom.action.act(y, x));
                let rhs = cod.action.act(self.f2.apply(y), self.f1.apply(x));
                if lhs != rhs {
                    return Err(Invalid::axiom(
                        "morphism: equivariance",
                        vec![y, x],
                        format!(
                            "f1({} · {}) != f2({}) · f1({})",
                            dom.b.element_name(y),
                            dom.a.element_name(x),
                            dom.b.element_name(y),
                            dom.a.element_name(x)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `outer ∘ inner`.
    pub fn compose(
        outer: &XModGroupsMorphism,
        inner: &XModGroupsMorphism,
    ) -> Result<XModGroupsMorphism, Invalid> {
        Ok(XModGroupsMorphism {
            f1: compose(&outer.f1, &inner.f1)?,
            f2: compose(&outer.f2, &inner.f2)?,
        })
    }

    /// The functor `from_xmod(dom) -> from_xmod(cod)`: `f1 x f2` on arrows, `f2` on objects.
    pub fn to_gg(&self, dom: &GroupGroupoid, cod: &GroupGroupoid) -> GGMorphism {
        GGMorphism {
            on_arrows: GroupHom::product(&self.f1, &self.f2, &dom.arrows, &cod.arrows),
            on_objects: self.f2.clone(),
        }
    }

    /// Restriction of a functor to `Ker d0 -> Ker d0` and objects.
    pub fn from_gg(
        f: &GGMorphism,
        dom: &GroupGroupoid,
        cod: &GroupGroupoid,
    ) -> Result<XModGroupsMorphism, Invalid> {
        let (_, e) = dom.ker_d0();
        let (_, e2) = cod.ker_d0();
        Ok(XModGroupsMorphism {
            f1: f.on_arrows.restrict(&e, &e2)?,
            f2: f.on_objects.clone(),
        })
    }
}

/// A crossed module over group-groupoids: `∂ = (∂1, ∂0) : G -> H` with an
/// action of the arrow group of `H` on the arrow group of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModGG {
    pub g: GroupGroupoid,
    pub h: GroupGroupoid,
    pub boundary: GGMorphism,
    pub action: GroupAction,
}

/// The three actions induced by a crossed module over group-groupoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedActions {
    /// `y · x = d0(ε(y) · ε(x))`, `H0` on `G0`.
    pub on_objects: GroupAction,
    /// `y · a = ε(y) · a`, `H0` on the arrows of `G`.
    pub objects_on_arrows: GroupAction,
    /// `b · x = d1(b) · x`, arrows of `H` on `G0`.
    pub arrows_on_objects: GroupAction,
}

impl XModGG {
    /// `(G, G, 1)` with conjugation.
    pub fn identity(gg: &GroupGroupoid) -> XModGG {
        XModGG {
            g: gg.clone(),
            h: gg.clone(),
            boundary: GGMorphism::identity(gg),
            action: conjugation_action(&gg.arrows),
        }
    }

    /// `(1, G, 0)`.
    pub fn zero(gg: &GroupGroupoid) -> XModGG {
        let one = GroupGroupoid::discrete(&crate::grp::catalog::trivial());
        XModGG {
            boundary: GGMorphism {
                on_arrows: GroupHom::zero(&one.arrows, &gg.arrows),
                on_objects: GroupHom::zero(&one.objects, &gg.objects),
            },
            action: trivial_action(&gg.arrows, &one.arrows),
            g: one,
            h: gg.clone(),
        }
    }

    /// A crossed module of groups over discrete group-groupoids.
    pub fn discrete(xm: &XModGroups) -> XModGG {
        XModGG {
            g: GroupGroupoid::discrete(&xm.a),
            h: GroupGroupoid::discrete(&xm.b),
            boundary: GGMorphism {
                on_arrows: xm.boundary.clone(),
                on_objects: xm.boundary.clone(),
            },
            action: xm.action.clone(),
        }
    }

    /// `(A x A, B x B, ∂ x ∂)` over the pair group-groupoids, acting componentwise.
    pub fn pair(xm: &XModGroups) -> XModGG {
        let g = GroupGroupoid::pair(&xm.a);
        let h = GroupGroupoid::pair(&xm.b);
        let (na, nb) = (xm.a.order(), xm.b.order());
        let action = GroupAction::from_fn(&h.arrows, &g.arrows, |y, x| {
            let ((y0, y1), (x0, x1)) = (pair_parts(y, nb), pair_parts(x, na));
            pair_index(xm.action.act(y0, x0), xm.action.act(y1, x1), na)
        });
        XModGG {
            boundary: GGMorphism {
                on_arrows: GroupHom::product(&xm.boundary, &xm.boundary, &g.arrows, &h.arrows),
                on_objects: xm.boundary.clone(),
            },
            action,
            g,
            h,
        }
    }

    /// `(N, G, inc)` for a normal subgroup-groupoid given by arrow and object masks.
    ///
    /// Normal means: closed under `d0`, `d1`, `ε`, with the arrow subgroup
    /// normal in the arrows and the object subgroup normal in the objects.
    pub fn inclusion(
        gg: &GroupGroupoid,
        arrow_mask: &[bool],
        object_mask: &[bool],
    ) -> Result<XModGG, Invalid> {
        let (g, g0) = (&gg.arrows, &gg.objects);
        if arrow_mask.len() != g.order() || object_mask.len() != g0.order() {
            return Err(Invalid::malformed(
                "mask lengths do not match the group-groupoid",
            ));
        }
        if !g.is_subgroup(arrow_mask) || !g0.is_subgroup(object_mask) {
            return Err(Invalid::malformed("masks do not mark subgroups"));
        }
        if let Some(a) = g.elements().find(|&a| {
            arrow_mask[a] && (!object_mask[gg.d0.apply(a)] || !object_mask[gg.d1.apply(a)])
        }) {
            return Err(Invalid::axiom(
                "subgroup-groupoid",
                vec![a],
                "arrow with an end outside the object subgroup",
            ));
        }
        if let Some(x) = g0
            .elements()
            .find(|&x| object_mask[x] && !arrow_mask[gg.eps.apply(x)])
        {
            return Err(Invalid::axiom(
                "subgroup-groupoid",
                vec![x],
                "identity arrow outside the arrow subgroup",
            ));
        }
        if !g.is_normal(arrow_mask) {
            return Err(Invalid::axiom(
                "normal subgroup-groupoid",
                vec![],
                "arrow subgroup is not normal",
            ));
        }
        if !g0.is_normal(object_mask) {
            return Err(Invalid::axiom(
                "normal subgroup-groupoid",
                vec![],
                "object subgroup is not normal",
            ));
        }
        let (n, emb) = FiniteGroup::subgroup(g, arrow_mask, format!("N({})", g.name()));
        let (n0, emb0) = FiniteGroup::subgroup(g0, object_mask, format!("N({})", g0.name()));
        let sub = GroupGroupoid {
            d0: gg.d0.restrict(&emb, &emb0)?,
            d1: gg.d1.restrict(&emb, &emb0)?,
            eps: gg.eps.restrict(&emb0, &emb)?,
            arrows: n,
            objects: n0,
        };
        let action = conjugation_action(g).restrict(&GroupHom::identity(g), &emb)?;
        Ok(XModGG {
            g: sub,
            h: gg.clone(),
            boundary: GGMorphism {
                on_arrows: emb,
                on_objects: emb0,
            },
            action,
        })
    }

    /// `(arrows G, arrows H, ∂1, action)`.
    pub fn arrow_level(&self) -> XModGroups {
        XModGroups {
            a: self.g.arrows.clone(),
            b: self.h.arrows.clone(),
            boundary: self.boundary.on_arrows.clone(),
            action: self.action.clone(),
        }
    }

    /// `(G0, H0, ∂0, y · x = d0(ε(y) · ε(x)))`.
    pub fn object_level(&self) -> XModGroups {
        XModGroups {
            a: self.g.objects.clone(),
            b: self.h.objects.clone(),
            boundary: self.boundary.on_objects.clone(),
            action: induced_object_action(&self.g, &self.h, &self.action),
        }
    }

    pub fn induced_actions(&self) -> InducedActions {
        let on_objects = induced_object_action(&self.g, &self.h, &self.action);
        let objects_on_arrows = GroupAction::from_fn(&self.h.objects, &self.g.arrows, |y, a| {
            self.action.act(self.h.eps.apply(y), a)
        });
        let arrows_on_objects = GroupAction::from_fn(&self.h.arrows, &self.g.objects, |b, x| {
            on_objects.act(self.h.d1.apply(b), x)
        });
        InducedActions {
            on_objects,
            objects_on_arrows,
            arrows_on_objects,
        }
    }

    pub fn validate(&self) -> Report {
        self.g.validate().within("G")?;
        self.h.validate().within("H")?;
        self.boundary
            .validate(&self.g, &self.h)
            .within("boundary")?;
        if !same_group(self.action.actor(), &self.h.arrows)
            || !same_group(self.action.target(), &self.g.arrows)
        {
            return Err(Invalid::malformed(
                "action should be an action of the arrows of H on the arrows of G",
            ));
        }
        self.action.validate().within("action")?;
        self.check_action_laws()?;
        self.arrow_level().validate().within("arrow level")
    }

    /// Compatibility of the action with the group-groupoid structure.
    fn check_action_laws(&self) -> Report {
        let (g, h) = (&self.g, &self.h);
        let act = &self.action;
        let obj = induced_object_action(g, h, act);
        let name = |b: usize, a: usize| {
            format!(
                "b = {}, a = {}",
                h.arrows.element_name(b),
                g.arrows.element_name(a)
            )
        };
        for b in h.arrows.elements() {
            for a in g.arrows.elements() {
                let ba = act.act(b, a);
                if g.d0.apply(ba) != obj.act(h.d0.apply(b), g.d0.apply(a)) {
                    return Err(Invalid::axiom(
                        "action: d0",
                        vec![b, a],
                        format!("d0(b · a) != d0(b) · d0(a) for {}", name(b, a)),
                    ));
                }
                if g.d1.apply(ba) != obj.act(h.d1.apply(b), g.d1.apply(a)) {
                    return Err(Invalid::axiom(
                        "action: d1",
                        vec![b, a],
                        format!("d1(b · a) != d1(b) · d1(a) for {}", name(b, a)),
                    ));
                }
            }
        }
        for y in h.objects.elements() {
            for x in g.objects.elements() {
                if act.act(h.eps.apply(y), g.eps.apply(x)) != g.eps.apply(obj.act(y, x)) {
                    return Err(Invalid::axiom(
                        "action: identities",
                        vec![y, x],
                        format!(
                            "1_y · 1_x is not an identity arrow for y = {}, x = {}",
                            h.objects.element_name(y),
                            g.objects.element_name(x)
                        ),
                    ));
                }
            }
        }
        for b in h.arrows.elements() {
            for a in g.arrows.elements() {
                if g.inverse(act.act(b, a)) != act.act(h.inverse(b), g.inverse(a)) {
                    return Err(Invalid::axiom(
                        "action: inverses",
                        vec![b, a],
                        format!("(b · a)⁻¹ != b⁻¹ · a⁻¹ for {}", name(b, a)),
                    ));
                }
            }
        }
        let (hp, gp) = (h.composable_pairs(), g.composable_pairs());
        for &(b1, b) in &hp {
            let bb = h.compose_unchecked(b1, b);
            for &(a1, a) in &gp {
                let lhs = act.act(bb, g.compose_unchecked(a1, a));
                let (first, second) = (act.act(b1, a1), act.act(b, a));
                let rhs = g.compose(first, second).ok();
                if rhs != Some(lhs) {
                    return Err(Invalid::axiom(
                        "action: composition",
                        vec![b, b1, a, a1],
                        format!(
                            "(b∘b1) · (a∘a1) {} (b · a)∘(b1 · a1) for b = {}, b1 = {}, a = {}, a1 = {}",
                            if rhs.is_some() { "!=" } else { "is defined but not" },
                            h.arrows.element_name(b),
                            h.arrows.element_name(b1),
                            g.arrows.element_name(a),
                            g.arrows.element_name(a1)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Consequences of the action laws on kernels:
    /// `Ker d0(H)` fixes `Ker d1(G)`, `Ker d1(H)` fixes `Ker d0(G)`,
    /// `b · a = ε(d1 b) · a` for `a` in `Ker d0(G)`, and
    /// `b · a = b · ε(d1 a) - ε(d1 a) + a` for `b` in `Ker d0(H)`.
    pub fn check_kernel_actions(&self) -> Report {
        let (g, h, act) = (&self.g, &self.h, &self.action);
        let (gk0, gk1) = (g.d0.kernel_mask(), g.d1.kernel_mask());
        let (hk0, hk1) = (h.d0.kernel_mask(), h.d1.kernel_mask());
        for b in h.arrows.elements() {
            for a in g.arrows.elements() {
                let ba = act.act(b, a);
                if hk0[b] && gk1[a] && ba != a {
                    return Err(Invalid::axiom(
                        "kernel action: Ker d0(H) on Ker d1(G)",
                        vec![b, a],
                        "not fixed",
                    ));
                }
                if hk1[b] && gk0[a] && ba != a {
                    return Err(Invalid::axiom(
                        "kernel action: Ker d1(H) on Ker d0(G)",
                        vec![b, a],
                        "not fixed",
                    ));
                }
                if gk0[a] && ba != act.act(h.eps.apply(h.d1.apply(b)), a) {
                    return Err(Invalid::axiom(
                        "kernel action: b · a = ε(d1 b) · a",
                        vec![b, a],
                        "differs",
                    ));
                }
                let e = g.eps.apply(g.d1.apply(a));
                if hk0[b] && ba != g.arrows.add(g.arrows.sub(act.act(b, e), e), a) {
                    return Err(Invalid::axiom(
                        "kernel action: b · a = b · ε(d1 a) - ε(d1 a) + a",
                        vec![b, a],
                        "differs",
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XModGGMorphism {
    pub f: GGMorphism,
    pub g: GGMorphism,
}

impl XModGGMorphism {
    pub fn identity(xm: &XModGG) -> XModGGMorphism {
        XModGGMorphism {
            f: GGMorphism::identity(&xm.g),
            g: GGMorphism::identity(&xm.h),
        }
    }

    pub fn validate(&self, dom: &XModGG, cod: &XModGG) -> Report {
        self.f.validate(&dom.g, &cod.g).within("f")?;
        self.g.validate(&dom.h, &cod.h).within("g")?;
        self.arrow_level()
            .validate(&dom.arrow_level(), &cod.arrow_level())
            .within("arrow level")
    }

    pub fn arrow_level(&self) -> XModGroupsMorphism {
        XModGroupsMorphism {
            f1: self.f.on_arrows.clone(),
            f2: self.g.on_arrows.clone(),
        }
    }

    /// `outer ∘ inner`.
    pub fn compose(
        outer: &XModGGMorphism,
        inner: &XModGGMorphism,
    ) -> Result<XModGGMorphism, Invalid> {
        Ok(XModGGMorphism {
            f: GGMorphism::compose(&outer.f, &inner.f)?,
            g: GGMorphism::compose(&outer.g, &inner.g)?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        self.f.is_bijective() && self.g.is_bijective()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::{cyclic, inversion_action, klein, symmetric3};

    fn sign() -> XModGroups {
        let (s3, z2) = (symmetric3(), cyclic(2));
        let boundary = GroupHom::from_fn(&s3, &z2, |i| pair_parts(i, 2).1);
        XModGroups {
            a: s3.clone(),
            b: z2.clone(),
            boundary,
            action: trivial_action(&z2, &s3),
        }
    }

    #[test]
    fn z2_identity_is_a_crossed_module() {
        let z2 = cyclic(2);
        let xm = XModGroups {
            a: z2.clone(),
            b: z2.clone(),
            boundary: GroupHom::identity(&z2),
            action: trivial_action(&z2, &z2),
        };
        xm.validate().unwrap();
        XModGroups::identity(&symmetric3()).validate().unwrap();
    }

    #[test]
    fn sign_map_with_trivial_action_fails_cm2() {
        let xm = sign();
        let v = xm.validate().unwrap_err();
        let w = v.violation().unwrap();
        assert_eq!(w.axiom, "CM2");
        let (x, x1) = (w.witness[0], w.witness[1]);
        assert_ne!(xm.a.add(x, x1), xm.a.add(x1, x));
    }

    #[test]
    fn zero_boundary_needs_abelian_target() {
        let z2 = cyclic(2);
        let s3 = symmetric3();
        assert_eq!(
            XModGroups::zero_boundary(&s3, &z2, trivial_action(&z2, &s3))
                .validate()
                .unwrap_err()
                .tag(),
            "CM2"
        );
        let z3 = cyclic(3);
        XModGroups::zero_boundary(&z3, &z2, inversion_action(&z2, &z3))
            .validate()
            .unwrap();
    }

    #[test]
    fn normal_inclusion() {
        let s3 = symmetric3();
        let z3_part: Vec<bool> = s3.elements().map(|i| pair_parts(i, 2).1 == 0).collect();
        XModGroups::inclusion(&s3, &z3_part)
            .unwrap()
            .validate()
            .unwrap();
        let z2_part: Vec<bool> = s3.elements().map(|i| pair_parts(i, 2).0 == 0).collect();
        assert!(XModGroups::inclusion(&s3, &z2_part).is_err());
    }

    #[test]
    fn catalog_examples_validate() {
        let pair = GroupGroupoid::pair(&symmetric3());
        XModGG::identity(&pair).validate().unwrap();
        XModGG::zero(&pair).validate().unwrap();
        XModGG::discrete(&XModGroups::identity(&symmetric3()))
            .validate()
            .unwrap();
        XModGG::pair(&XModGroups::identity(&symmetric3()))
            .validate()
            .unwrap();
        let z3 = cyclic(3);
        let z2 = cyclic(2);
        XModGG::pair(&XModGroups::zero_boundary(
            &z3,
            &z2,
            inversion_action(&z2, &z3),
        ))
        .validate()
        .unwrap();
    }

    #[test]
    fn discrete_validation_reduces_to_cm_axioms() {
        let xm = sign();
        let v = XModGG::discrete(&xm).validate().unwrap_err();
        assert_eq!(v.component_path(), vec!["arrow level"]);
        assert_eq!(v.tag(), "CM2");
    }

    #[test]
    fn normal_subgroupoid_inclusion() {
        let pair = GroupGroupoid::pair(&klein());
        let n = 4;
        let amask: Vec<bool> = pair
            .arrows
            .elements()
            .map(|i| pair_parts(i, n).0 < 2 && pair_parts(i, n).1 < 2)
            .collect();
        let omask: Vec<bool> = (0..n).map(|x| x < 2).collect();
        let xm = XModGG::inclusion(&pair, &amask, &omask).unwrap();
        xm.validate().unwrap();
        assert_eq!(xm.g.arrows.order(), 4);
        let s3 = GroupGroupoid::discrete(&symmetric3());
        let z2_part: Vec<bool> = s3
            .arrows
            .elements()
            .map(|i| pair_parts(i, 2).0 == 0)
            .collect();
        assert!(XModGG::inclusion(&s3, &z2_part, &z2_part).is_err());
    }

    #[test]
    fn object_level_of_identity_is_conjugation() {
        let pair = GroupGroupoid::pair(&symmetric3());
        let obj = XModGG::identity(&pair).object_level();
        obj.validate().unwrap();
        assert_eq!(obj.action, conjugation_action(&pair.objects));
        let xm = XModGroups::identity(&symmetric3());
        assert_eq!(XModGG::discrete(&xm).object_level(), xm);
    }

    #[test]
    fn induced_actions_on_abelian_identity_are_trivial() {
        let acts = XModGG::identity(&GroupGroupoid::pair(&cyclic(3))).induced_actions();
        assert!(acts.on_objects.is_trivial());
        assert!(acts.objects_on_arrows.is_trivial());
        assert!(acts.arrows_on_objects.is_trivial());
        let acts = XModGG::identity(&GroupGroupoid::pair(&symmetric3())).induced_actions();
        for a in [
            &acts.on_objects,
            &acts.objects_on_arrows,
            &acts.arrows_on_objects,
        ] {
            a.validate().unwrap();
        }
    }

    #[test]
    fn perturbed_action_breaks_d0_compatibility() {
        let z2 = cyclic(2);
        let xm = XModGG::pair(&XModGroups {
            a: z2.clone(),
            b: z2.clone(),
            boundary: GroupHom::identity(&z2),
            action: trivial_action(&z2, &z2),
        });
        // (b0, b1) acts by swapping coordinates when b0 = 1: an action, but not a functorial one
        let mut broken = xm.clone();
        broken.action = GroupAction::from_fn(&xm.h.arrows, &xm.g.arrows, |b, a| {
            let (p, q) = pair_parts(a, 2);
            if pair_parts(b, 2).0 == 1 {
                pair_index(q, p, 2)
            } else {
                a
            }
        });
        broken.action.validate().unwrap();
        let v = broken.validate().unwrap_err();
        assert_eq!(v.tag(), "action: d0");
        assert_eq!(
            v.violation().unwrap().witness,
            vec![pair_index(1, 0, 2), pair_index(0, 1, 2)]
        );
    }

    #[test]
    fn kernel_actions_hold_on_catalog() {
        for xm in [
            XModGG::identity(&GroupGroupoid::pair(&symmetric3())),
            XModGG::pair(&XModGroups::identity(&symmetric3())),
        ] {
            xm.check_kernel_actions().unwrap();
        }
    }

    #[test]
    fn morphisms_compose_and_identities_validate() {
        let xm = XModGG::pair(&XModGroups::identity(&cyclic(2)));
        let id = XModGGMorphism::identity(&xm);
        id.validate(&xm, &xm).unwrap();
        let twice = XModGGMorphism::compose(&id, &id).unwrap();
        assert_eq!(twice, id);
        let g = XModGroups::identity(&symmetric3());
        XModGroupsMorphism::identity(&g).validate(&g, &g).unwrap();
    }
}
