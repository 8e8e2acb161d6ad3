//! Crossed squares of groups.
//!
//! ```text
//!   L --λ--> M
//!   |        |
//!   λ'       μ
//!   v        v
//!   N --ν--> P
//! ```
//!
//! with actions of `P` on `L`, `M`, `N` and a function `h : M x N -> L`.
//! `M` and `N` act on `L` and on each other through `μ` and `ν`.

use crate::gpd::check_maps;
use crate::grp::{
    catalog, compose, conjugation_action, same_group, FiniteGroup, Group, GroupAction, GroupHom,
};
use crate::report::{Invalid, Report, WithinExt};
use crate::xmod::XModGroups;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossedSquare {
    pub l: Group,
    pub m: Group,
    pub n: Group,
    pub p: Group,
    pub lambda: GroupHom,
    pub lambda_prime: GroupHom,
    pub mu: GroupHom,
    pub nu: GroupHom,
    pub act_p_on_l: GroupAction,
    pub act_p_on_m: GroupAction,
    pub act_p_on_n: GroupAction,
    /// Row-major over `M x N`: `hmap[m * |N| + n] = h(m, n)`.
    pub hmap: Vec<usize>,
}

impl CrossedSquare {
    /// The square of trivial groups.
    pub fn trivial() -> CrossedSquare {
        let one = catalog::trivial();
        let id = GroupHom::identity(&one);
        let act = conjugation_action(&one);
        CrossedSquare {
            l: one.clone(),
            m: one.clone(),
            n: one.clone(),
            p: one,
            lambda: id.clone(),
            lambda_prime: id.clone(),
            mu: id.clone(),
            nu: id,
            act_p_on_l: act.clone(),
            act_p_on_m: act.clone(),
            act_p_on_n: act,
            hmap: vec![0],
        }
    }

    /// Normal sub-crossed module `(S, T, ∂|)` of `parent = (A, B, ∂)` given by
    /// masks on `A` and `B`, arranged as `L = S`, `M = T`, `N = A`, `P = B`
    /// with `h(t, a) = t · a - a`.
    pub fn norrie(
        parent: &XModGroups,
        s_mask: &[bool],
        t_mask: &[bool],
    ) -> Result<CrossedSquare, Invalid> {
        let (a, b) = (&parent.a, &parent.b);
        let act = &parent.action;
        if s_mask.len() != a.order() || t_mask.len() != b.order() {
            return Err(Invalid::malformed(
                "mask lengths do not match the crossed module",
            ));
        }
        if !a.is_subgroup(s_mask) || !b.is_subgroup(t_mask) {
            return Err(Invalid::malformed("masks do not mark subgroups"));
        }
        if let Some(x) = a
            .elements()
            .find(|&x| s_mask[x] && !t_mask[parent.boundary.apply(x)])
        {
            return Err(Invalid::axiom(
                "sub-crossed module: ∂S ⊆ T",
                vec![x],
                format!("∂{} is not in T", a.element_name(x)),
            ));
        }
        if !b.is_normal(t_mask) {
            return Err(Invalid::axiom(
                "normality: T normal in B",
                vec![],
                "T is not normal in B",
            ));
        }
        if !a.is_normal(s_mask) {
            return Err(Invalid::axiom(
                "normality: S normal in A",
                vec![],
                "S is not normal in A",
            ));
        }
        for y in b.elements() {
            if let Some(x) = a.elements().find(|&x| s_mask[x] && !s_mask[act.act(y, x)]) {
                return Err(Invalid::axiom(
                    "normality: B · S ⊆ S",
                    vec![y, x],
                    format!("{} · {} leaves S", b.element_name(y), a.element_name(x)),
                ));
            }
        }
        for t in b.elements().filter(|&t| t_mask[t]) {
            if let Some(x) = a.elements().find(|&x| !s_mask[a.sub(act.act(t, x), x)]) {
                return Err(Invalid::axiom(
                    "normality: t · a - a ∈ S",
                    vec![t, x],
                    format!(
                        "{} · {} - {} is not in S",
                        b.element_name(t),
                        a.element_name(x),
                        a.element_name(x)
                    ),
                ));
            }
        }
        let (s, s_emb) = FiniteGroup::subgroup(a, s_mask, format!("S({})", a.name()));
        let (t, t_emb) = FiniteGroup::subgroup(b, t_mask, format!("T({})", b.name()));
        let id_b = GroupHom::identity(b);
        let mut local = vec![usize::MAX; a.order()];
        for (i, &x) in s_emb.map().iter().enumerate() {
            local[x] = i;
        }
        let mut hmap = Vec::with_capacity(t.order() * a.order());
        for &ty in t_emb.map() {
            for x in a.elements() {
                hmap.push(local[a.sub(act.act(ty, x), x)]);
            }
        }
        Ok(CrossedSquare {
            lambda: parent.boundary.restrict(&s_emb, &t_emb)?,
            act_p_on_l: act.restrict(&id_b, &s_emb)?,
            act_p_on_m: conjugation_action(b).restrict(&id_b, &t_emb)?,
            act_p_on_n: act.clone(),
            lambda_prime: s_emb,
            mu: t_emb,
            nu: parent.boundary.clone(),
            l: s,
            m: t,
            n: a.clone(),
            p: b.clone(),
            hmap,
        })
    }

    #[inline]
    pub fn h(&self, m: usize, n: usize) -> usize {
        self.hmap[m * self.n.order() + n]
    }

    /// `M` on `L` through `μ`.
    pub fn m_on_l(&self) -> GroupAction {
        self.act_p_on_l.pull_back(&self.mu).expect("checked shapes")
    }

    /// `N` on `L` through `ν`.
    pub fn n_on_l(&self) -> GroupAction {
        self.act_p_on_l.pull_back(&self.nu).expect("checked shapes")
    }

    /// `M` on `N` through `μ`.
    pub fn m_on_n(&self) -> GroupAction {
        self.act_p_on_n.pull_back(&self.mu).expect("checked shapes")
    }

    /// `N` on `M` through `ν`.
    pub fn n_on_m(&self) -> GroupAction {
        self.act_p_on_m.pull_back(&self.nu).expect("checked shapes")
    }

    /// `(L, P, μλ)`.
    pub fn diagonal(&self) -> XModGroups {
        XModGroups {
            a: self.l.clone(),
            b: self.p.clone(),
            boundary: compose(&self.mu, &self.lambda).expect("checked shapes"),
            action: self.act_p_on_l.clone(),
        }
    }

    pub fn right(&self) -> XModGroups {
        XModGroups {
            a: self.m.clone(),
            b: self.p.clone(),
            boundary: self.mu.clone(),
            action: self.act_p_on_m.clone(),
        }
    }

    pub fn bottom(&self) -> XModGroups {
        XModGroups {
            a: self.n.clone(),
            b: self.p.clone(),
            boundary: self.nu.clone(),
            action: self.act_p_on_n.clone(),
        }
    }

    fn check_shapes(&self) -> Report {
        check_maps(&[
            ("lambda", &self.lambda, &self.l, &self.m),
            ("lambda_prime", &self.lambda_prime, &self.l, &self.n),
            ("mu", &self.mu, &self.m, &self.p),
            ("nu", &self.nu, &self.n, &self.p),
        ])?;
        for (part, act, target) in [
            ("act_p_on_l", &self.act_p_on_l, &self.l),
            ("act_p_on_m", &self.act_p_on_m, &self.m),
            ("act_p_on_n", &self.act_p_on_n, &self.n),
        ] {
            if !same_group(act.actor(), &self.p) || !same_group(act.target(), target) {
                return Err(Invalid::malformed(format!(
                    "{part} should be an action of P on {}",
                    target.name()
                )));
            }
            act.validate().within(part)?;
        }
        let expected = self.m.order() * self.n.order();
        if self.hmap.len() != expected {
            return Err(Invalid::malformed(format!(
                "h has {} entries, |M x N| = {expected}",
                self.hmap.len()
            )));
        }
        if let Some(i) = self.hmap.iter().position(|&v| v >= self.l.order()) {
            return Err(Invalid::malformed(format!(
                "h[{i}] = {} is out of range 0..{}",
                self.hmap[i],
                self.l.order()
            )));
        }
        Ok(())
    }

    pub fn validate(&self) -> Report {
        self.check_shapes()?;
        let (l, m, n, p) = (&self.l, &self.m, &self.n, &self.p);
        let (lam, lamp) = (&self.lambda, &self.lambda_prime);
        let nu_lamp = compose(&self.nu, lamp)?;
        let mu_lam = compose(&self.mu, lam)?;
        if let Some(x) = nu_lamp.first_difference(&mu_lam) {
            return Err(Invalid::axiom(
                "commuting square: νλ' = μλ",
                vec![x],
                format!("at {}", l.element_name(x)),
            ));
        }
        // CS1
        for y in p.elements() {
            for x in l.elements() {
                let moved = self.act_p_on_l.act(y, x);
                if lam.apply(moved) != self.act_p_on_m.act(y, lam.apply(x)) {
                    return Err(Invalid::axiom(
                        "CS1: λ equivariant",
                        vec![y, x],
                        "λ(p · l) != p · λ(l)",
                    ));
                }
                if lamp.apply(moved) != self.act_p_on_n.act(y, lamp.apply(x)) {
                    return Err(Invalid::axiom(
                        "CS1: λ' equivariant",
                        vec![y, x],
                        "λ'(p · l) != p · λ'(l)",
                    ));
                }
            }
        }
        self.right().validate().within("CS1: (M, P, μ)")?;
        self.bottom().validate().within("CS1: (N, P, ν)")?;
        self.diagonal().validate().within("CS1: (L, P, μλ)")?;
        let (m_on_l, n_on_l, m_on_n, n_on_m) =
            (self.m_on_l(), self.n_on_l(), self.m_on_n(), self.n_on_m());
        // CS2
        for mm in m.elements() {
            for nn in n.elements() {
                let hv = self.h(mm, nn);
                if lam.apply(hv) != m.add(mm, n_on_m.act(nn, m.neg(mm))) {
                    return Err(Invalid::axiom(
                        "CS2: λh(m, n) = m + n · (-m)",
                        vec![mm, nn],
                        format!("at m = {}, n = {}", m.element_name(mm), n.element_name(nn)),
                    ));
                }
                if lamp.apply(hv) != n.sub(m_on_n.act(mm, nn), nn) {
                    return Err(Invalid::axiom(
                        "CS2: λ'h(m, n) = m · n - n",
                        vec![mm, nn],
                        format!("at m = {}, n = {}", m.element_name(mm), n.element_name(nn)),
                    ));
                }
            }
        }
        // CS3
        for x in l.elements() {
            for nn in n.elements() {
                if self.h(lam.apply(x), nn) != l.add(x, n_on_l.act(nn, l.neg(x))) {
                    return Err(Invalid::axiom(
                        "CS3: h(λl, n) = l + n · (-l)",
                        vec![x, nn],
                        format!("at l = {}, n = {}", l.element_name(x), n.element_name(nn)),
                    ));
                }
            }
            for mm in m.elements() {
                if self.h(mm, lamp.apply(x)) != l.sub(m_on_l.act(mm, x), x) {
                    return Err(Invalid::axiom(
                        "CS3: h(m, λ'l) = m · l - l",
                        vec![mm, x],
                        format!("at m = {}, l = {}", m.element_name(mm), l.element_name(x)),
                    ));
                }
            }
        }
        // CS4
        for mm in m.elements() {
            for m1 in m.elements() {
                for nn in n.elements() {
                    let lhs = self.h(m.add(mm, m1), nn);
                    let rhs = l.add(m_on_l.act(mm, self.h(m1, nn)), self.h(mm, nn));
                    if lhs != rhs {
                        return Err(Invalid::axiom(
                            "CS4: h(m + m', n) = m · h(m', n) + h(m, n)",
                            vec![mm, m1, nn],
                            format!(
                                "at m = {}, m' = {}, n = {}",
                                m.element_name(mm),
                                m.element_name(m1),
                                n.element_name(nn)
                            ),
                        ));
                    }
                }
            }
        }
        for mm in m.elements() {
            for nn in n.elements() {
                for n1 in n.elements() {
                    let lhs = self.h(mm, n.add(nn, n1));
                    let rhs = l.add(self.h(mm, nn), n_on_l.act(nn, self.h(mm, n1)));
                    if lhs != rhs {
                        return Err(Invalid::axiom(
                            "CS4: h(m, n + n') = h(m, n) + n · h(m, n')",
                            vec![mm, nn, n1],
                            format!(
                                "at m = {}, n = {}, n' = {}",
                                m.element_name(mm),
                                n.element_name(nn),
                                n.element_name(n1)
                            ),
                        ));
                    }
                }
            }
        }
        // CS5
        for y in p.elements() {
            for mm in m.elements() {
                for nn in n.elements() {
                    let lhs = self.h(self.act_p_on_m.act(y, mm), self.act_p_on_n.act(y, nn));
                    if lhs != self.act_p_on_l.act(y, self.h(mm, nn)) {
                        return Err(Invalid::axiom(
                            "CS5: h(p · m, p · n) = p · h(m, n)",
                            vec![y, mm, nn],
                            format!(
                                "at p = {}, m = {}, n = {}",
                                p.element_name(y),
                                m.element_name(mm),
                                n.element_name(nn)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XSqMorphism {
    pub fl: GroupHom,
    pub fm: GroupHom,
    pub fn_: GroupHom,
    pub fp: GroupHom,
}

impl XSqMorphism {
    pub fn identity(xs: &CrossedSquare) -> XSqMorphism {
        XSqMorphism {
            fl: GroupHom::identity(&xs.l),
            fm: GroupHom::identity(&xs.m),
            fn_: GroupHom::identity(&xs.n),
            fp: GroupHom::identity(&xs.p),
        }
    }

    pub fn validate(&self, dom: &CrossedSquare, cod: &CrossedSquare) -> Report {
        check_maps(&[
            ("fl", &self.fl, &dom.l, &cod.l),
            ("fm", &self.fm, &dom.m, &cod.m),
            ("fn", &self.fn_, &dom.n, &cod.n),
            ("fp", &self.fp, &dom.p, &cod.p),
        ])?;
        let squares = [
            ("morphism: λ", &dom.lambda, &cod.lambda, &self.fl, &self.fm),
            (
                "morphism: λ'",
                &dom.lambda_prime,
                &cod.lambda_prime,
                &self.fl,
                &self.fn_,
            ),
            ("morphism: μ", &dom.mu, &cod.mu, &self.fm, &self.fp),
            ("morphism: ν", &dom.nu, &cod.nu, &self.fn_, &self.fp),
        ];
        for (tag, f, f2, src, dst) in squares {
            if let Some(x) = f
                .domain()
                .elements()
                .find(|&x| dst.apply(f.apply(x)) != f2.apply(src.apply(x)))
            {
                return Err(Invalid::axiom(
                    tag,
                    vec![x],
                    format!("square fails at {}", f.domain().element_name(x)),
                ));
            }
        }
        let actions = [
            (
                "morphism: P on L",
                &dom.act_p_on_l,
                &cod.act_p_on_l,
                &self.fl,
            ),
            (
                "morphism: P on M",
                &dom.act_p_on_m,
                &cod.act_p_on_m,
                &self.fm,
            ),
            (
                "morphism: P on N",
                &dom.act_p_on_n,
                &cod.act_p_on_n,
                &self.fn_,
            ),
        ];
        for (tag, act, act2, f) in actions {
            for y in dom.p.elements() {
                if let Some(x) = act
                    .target()
                    .elements()
                    .find(|&x| f.apply(act.act(y, x)) != act2.act(self.fp.apply(y), f.apply(x)))
                {
                    return Err(Invalid::axiom(tag, vec![y, x], "not equivariant"));
                }
            }
        }
        for mm in dom.m.elements() {
            for nn in dom.n.elements() {
                if self.fl.apply(dom.h(mm, nn)) != cod.h(self.fm.apply(mm), self.fn_.apply(nn)) {
                    return Err(Invalid::axiom(
                        "morphism: h",
                        vec![mm, nn],
                        "fl(h(m, n)) != h(fm(m), fn(n))",
                    ));
                }
            }
        }
        Ok(())
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &XSqMorphism, inner: &XSqMorphism) -> Result<XSqMorphism, Invalid> {
        Ok(XSqMorphism {
            fl: compose(&outer.fl, &inner.fl)?,
            fm: compose(&outer.fm, &inner.fm)?,
            fn_: compose(&outer.fn_, &inner.fn_)?,
            fp: compose(&outer.fp, &inner.fp)?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        [&self.fl, &self.fm, &self.fn_, &self.fp]
            .iter()
            .all(|f| f.is_isomorphism())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::{cyclic, symmetric3};
    use crate::grp::{pair_parts, trivial_action};

    fn z2_identity() -> XModGroups {
        let z2 = cyclic(2);
        XModGroups {
            a: z2.clone(),
            b: z2.clone(),
            boundary: GroupHom::identity(&z2),
            action: trivial_action(&z2, &z2),
        }
    }

    #[test]
    fn trivial_square_is_valid() {
        CrossedSquare::trivial().validate().unwrap();
    }

    #[test]
    fn whole_crossed_module_as_its_own_normal_sub() {
        let xm = XModGroups::identity(&symmetric3());
        let all = vec![true; 6];
        let xs = CrossedSquare::norrie(&xm, &all, &all).unwrap();
        xs.validate().unwrap();
        for t in 0..6 {
            for a in 0..6 {
                assert_eq!(xs.h(t, a), xm.a.sub(xm.action.act(t, a), a));
            }
        }
    }

    #[test]
    fn zero_sub_of_z2_identity() {
        let xm = z2_identity();
        let xs = CrossedSquare::norrie(&xm, &[true, false], &[true, false]).unwrap();
        xs.validate().unwrap();
        assert_eq!(xs.l.order(), 1);
        assert!(xs.hmap.iter().all(|&v| v == 0));
    }

    #[test]
    fn s3_conjugation_with_z3_part() {
        let s3 = symmetric3();
        let xm = XModGroups::identity(&s3);
        let z3: Vec<bool> = s3.elements().map(|i| pair_parts(i, 2).1 == 0).collect();
        let xs = CrossedSquare::norrie(&xm, &z3, &z3).unwrap();
        xs.validate().unwrap();
        assert_eq!(
            (xs.l.order(), xs.m.order(), xs.n.order(), xs.p.order()),
            (3, 3, 6, 6)
        );
        for mm in xs.m.elements() {
            assert_eq!(xs.h(mm, xs.n.zero()), xs.l.zero());
        }
    }

    #[test]
    fn non_normal_sub_is_rejected() {
        let s3 = symmetric3();
        let xm = XModGroups::identity(&s3);
        let z2: Vec<bool> = s3.elements().map(|i| pair_parts(i, 2).0 == 0).collect();
        let err = CrossedSquare::norrie(&xm, &z2, &z2).unwrap_err();
        assert!(err.tag().starts_with("normality"), "{err}");
    }

    #[test]
    fn zeroed_h_breaks_an_axiom() {
        let xm = XModGroups::identity(&symmetric3());
        let all = vec![true; 6];
        let mut xs = CrossedSquare::norrie(&xm, &all, &all).unwrap();
        xs.hmap.iter_mut().for_each(|v| *v = 0);
        let v = xs.validate().unwrap_err();
        assert!(v.tag().starts_with("CS2"), "{v}");
    }

    #[test]
    fn malformed_h_is_reported() {
        let mut xs = CrossedSquare::trivial();
        xs.hmap = vec![3];
        assert!(xs.validate().unwrap_err().is_malformed());
    }

    #[test]
    fn identity_morphism_validates() {
        let xm = XModGroups::identity(&symmetric3());
        let all = vec![true; 6];
        let xs = CrossedSquare::norrie(&xm, &all, &all).unwrap();
        let id = XSqMorphism::identity(&xs);
        id.validate(&xs, &xs).unwrap();
        assert_eq!(XSqMorphism::compose(&id, &id).unwrap(), id);
    }
}
