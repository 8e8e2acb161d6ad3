//! The functors between crossed modules over group-groupoids, double
//! group-groupoids and crossed squares, with their natural isomorphisms.
//!
//! `theta`/`gamma` relate crossed modules over group-groupoids and double
//! group-groupoids; `delta`/`eta` relate them with crossed squares. Each round
//! trip builds the comparison map explicitly and checks it is an isomorphism.

use crate::dgg::{DGGMorphism, DoubleGroupGroupoid};
use crate::gpd::{GGMorphism, GroupGroupoid};
use crate::grp::{pair_index, pair_parts, Group, GroupAction, GroupHom};
use crate::report::{Invalid, Report, WithinExt};
use crate::xmod::{XModGG, XModGGMorphism, XModGroups};
use crate::xsq::{CrossedSquare, XSqMorphism};

/// Outcome of a round trip: the comparison morphism, whether it is an
/// isomorphism, and notes on alternative formulas that were tried.
#[derive(Debug, Clone)]
pub struct RoundTrip<M> {
    pub morphism: M,
    pub verdict: Report,
    pub diagnostics: Vec<String>,
}

impl<M> RoundTrip<M> {
    pub fn is_isomorphism(&self) -> bool {
        self.verdict.is_ok()
    }
}

/// Parent index -> subgroup index for an embedding; `usize::MAX` off the image.
fn local_index(emb: &GroupHom) -> Vec<usize> {
    let mut local = vec![usize::MAX; emb.codomain().order()];
    for (i, &x) in emb.map().iter().enumerate() {
        local[x] = i;
    }
    local
}

fn bijective(parts: &[(&str, &GroupHom)]) -> Report {
    for (name, f) in parts {
        if !f.is_isomorphism() {
            return Err(Invalid::axiom(
                "bijective",
                vec![],
                format!("{name} is not a bijection"),
            ));
        }
    }
    Ok(())
}

/// The double group-groupoid of a crossed module over group-groupoids:
/// squares `G ⋊ H` over `H` horizontally and over `G0 ⋊ H0` vertically.
pub fn theta(xm: &XModGG) -> Result<DoubleGroupGroupoid, Invalid> {
    let vertical = GroupGroupoid::semidirect(&xm.g, &xm.h, &xm.action)?;
    let horizontal = GroupGroupoid::from_xmod(&xm.arrow_level());
    let v_edges = GroupGroupoid::from_xmod(&xm.object_level());
    Ok(DoubleGroupGroupoid {
        horizontal,
        vertical,
        h_edges: xm.h.clone(),
        v_edges,
    })
}

/// `(f1 x g1, g1, f0 x g0, g0)`.
pub fn theta_morphism(
    f: &XModGGMorphism,
    dom: &DoubleGroupGroupoid,
    cod: &DoubleGroupGroupoid,
) -> DGGMorphism {
    DGGMorphism {
        fs: GroupHom::product(&f.f.on_arrows, &f.g.on_arrows, dom.s(), cod.s()),
        fh: f.g.on_arrows.clone(),
        fv: GroupHom::product(&f.f.on_objects, &f.g.on_objects, dom.v(), cod.v()),
        fp: f.g.on_objects.clone(),
    }
}

/// The crossed module `Ker d0h -> H` over `Ker d0V -> P`, with `∂ = (d1h, d1V)`
/// and `b · α = εh(b) + α - εh(b)`.
pub fn gamma(d: &DoubleGroupGroupoid) -> Result<XModGG, Invalid> {
    let (k, k_emb) = d.horizontal.ker_d0();
    let (k0, k0_emb) = d.v_edges.ker_d0();
    let vt = &d.vertical;
    let g = GroupGroupoid {
        d0: vt.d0.restrict(&k_emb, &k0_emb).within("d0v on Ker d0h")?,
        d1: vt.d1.restrict(&k_emb, &k0_emb).within("d1v on Ker d0h")?,
        eps: vt.eps.restrict(&k0_emb, &k_emb).within("εv on Ker d0V")?,
        arrows: k,
        objects: k0,
    };
    let boundary = GGMorphism {
        on_arrows: crate::grp::compose(&d.horizontal.d1, &k_emb)?,
        on_objects: crate::grp::compose(&d.v_edges.d1, &k0_emb)?,
    };
    let s = d.s();
    let action = GroupAction::from_fn(d.h(), s, |b, alpha| {
        s.conj(d.horizontal.eps.apply(b), alpha)
    })
    .restrict(&GroupHom::identity(d.h()), &k_emb)
    .within("action on Ker d0h")?;
    Ok(XModGG {
        g,
        h: d.h_edges.clone(),
        boundary,
        action,
    })
}

/// Restriction of a double group-groupoid morphism to the kernels.
pub fn gamma_morphism(
    f: &DGGMorphism,
    dom: &DoubleGroupGroupoid,
    cod: &DoubleGroupGroupoid,
) -> Result<XModGGMorphism, Invalid> {
    let (_, k) = dom.horizontal.ker_d0();
    let (_, k2) = cod.horizontal.ker_d0();
    let (_, k0) = dom.v_edges.ker_d0();
    let (_, k02) = cod.v_edges.ker_d0();
    Ok(XModGGMorphism {
        f: GGMorphism {
            on_arrows: f.fs.restrict(&k, &k2)?,
            on_objects: f.fv.restrict(&k0, &k02)?,
        },
        g: GGMorphism {
            on_arrows: f.fh.clone(),
            on_objects: f.fp.clone(),
        },
    })
}

/// `θγ(d) -> d` with `f_s(α, b) = α + εh(b)`, `f_v(a, x) = a + εV(x)` and
/// identities on `H` and `P`.
///
/// The variant `f_s(α, b) = α - εh(b)` is evaluated first; when it fails,
/// its violation is kept as a diagnostic.
pub fn roundtrip_theta_gamma(d: &DoubleGroupGroupoid) -> Result<RoundTrip<DGGMorphism>, Invalid> {
    let rebuilt = theta(&gamma(d)?)?;
    let (_, k_emb) = d.horizontal.ker_d0();
    let (_, k0_emb) = d.v_edges.ker_d0();
    let (s, v) = (d.s(), d.v());
    let nh = d.h().order();
    let np = d.p().order();
    let make_fs = |sign_plus: bool| {
        GroupHom::from_fn(rebuilt.s(), s, |i| {
            let (alpha, b) = pair_parts(i, nh);
            let e = d.horizontal.eps.apply(b);
            let alpha = k_emb.apply(alpha);
            if sign_plus {
                s.add(alpha, e)
            } else {
                s.sub(alpha, e)
            }
        })
    };
    let fv = GroupHom::from_fn(rebuilt.v(), v, |i| {
        let (a, x) = pair_parts(i, np);
        v.add(k0_emb.apply(a), d.v_edges.eps.apply(x))
    });
    let fh = GroupHom::identity(d.h());
    let fp = GroupHom::identity(d.p());
    let check = |m: &DGGMorphism| -> Report {
        m.validate(&rebuilt, d)?;
        bijective(&[
            ("f_s", &m.fs),
            ("f_h", &m.fh),
            ("f_v", &m.fv),
            ("f_p", &m.fp),
        ])
    };
    let mut diagnostics = Vec::new();
    let printed = DGGMorphism {
        fs: make_fs(false),
        fh: fh.clone(),
        fv: fv.clone(),
        fp: fp.clone(),
    };
    match check(&printed) {
        Ok(()) => {
            return Ok(RoundTrip {
                morphism: printed,
                verdict: Ok(()),
                diagnostics,
            });
        }
        Err(e) => diagnostics.push(format!(
            "f_s(α, b) = α - εh(b) is not an isomorphism ({e}); using α + εh(b)"
        )),
    }
    let morphism = DGGMorphism {
        fs: make_fs(true),
        fh,
        fv,
        fp,
    };
    let verdict = check(&morphism);
    Ok(RoundTrip {
        morphism,
        verdict,
        diagnostics,
    })
}

/// `xm -> γθ(xm)`: `a ↦ (a, 0)` on arrows, `x ↦ (x, 0)` on objects of `G`,
/// identity on `H`.
pub fn roundtrip_gamma_theta(xm: &XModGG) -> Result<RoundTrip<XModGGMorphism>, Invalid> {
    let d = theta(xm)?;
    let rebuilt = gamma(&d)?;
    let (_, k_emb) = d.horizontal.ker_d0();
    let (_, k0_emb) = d.v_edges.ker_d0();
    let (lk, lk0) = (local_index(&k_emb), local_index(&k0_emb));
    let (nh, nh0) = (xm.h.arrows.order(), xm.h.objects.order());
    let (zh, zh0) = (xm.h.arrows.zero(), xm.h.objects.zero());
    let f = GGMorphism {
        on_arrows: GroupHom::from_fn(&xm.g.arrows, &rebuilt.g.arrows, |a| {
            lk[pair_index(a, zh, nh)]
        }),
        on_objects: GroupHom::from_fn(&xm.g.objects, &rebuilt.g.objects, |x| {
            lk0[pair_index(x, zh0, nh0)]
        }),
    };
    let g = GGMorphism::identity(&xm.h);
    let mut diagnostics = Vec::new();
    if xm.g.arrows.order() == nh {
        let zg = xm.g.arrows.zero();
        if let Some(a) =
            xm.g.arrows
                .elements()
                .find(|&a| lk[pair_index(zg, a, nh)] == usize::MAX)
        {
            diagnostics.push(format!(
                "a ↦ (0, a) leaves Ker d0h at a = {}: d0h(0, a) = a",
                xm.g.arrows.element_name(a)
            ));
        }
    } else {
        diagnostics.push("a ↦ (0, a) is not defined: G and H have different arrow groups".into());
    }
    let morphism = XModGGMorphism { f, g };
    let verdict = morphism.validate(xm, &rebuilt).and_then(|()| {
        bijective(&[
            ("f on arrows", &morphism.f.on_arrows),
            ("f on objects", &morphism.f.on_objects),
        ])
    });
    Ok(RoundTrip {
        morphism,
        verdict,
        diagnostics,
    })
}

/// The crossed square `Ker d0(G) -> Ker d0(H)` over `G0 -> H0`.
pub fn delta(xm: &XModGG) -> Result<CrossedSquare, Invalid> {
    let (g, h) = (&xm.g, &xm.h);
    let (l, l_emb) = g.ker_d0();
    let (m, m_emb) = h.ker_d0();
    let (ga, ha) = (&g.arrows, &h.arrows);
    let lambda = xm
        .boundary
        .on_arrows
        .restrict(&l_emb, &m_emb)
        .within("∂1 on Ker d0")?;
    let lambda_prime = crate::grp::compose(&g.d1, &l_emb)?;
    let mu = crate::grp::compose(&h.d1, &m_emb)?;
    let acts = xm.induced_actions();
    let id_p = GroupHom::identity(&h.objects);
    let act_p_on_l = acts
        .objects_on_arrows
        .restrict(&id_p, &l_emb)
        .within("H0 on Ker d0(G)")?;
    let act_p_on_m = GroupAction::from_fn(&h.objects, ha, |p, x| ha.conj(h.eps.apply(p), x))
        .restrict(&id_p, &m_emb)
        .within("H0 on Ker d0(H)")?;
    let ll = local_index(&l_emb);
    let nn = g.objects.order();
    let mut hmap = Vec::with_capacity(m.order() * nn);
    for &mm in m_emb.map() {
        for n in g.objects.elements() {
            let e = g.eps.apply(n);
            let v = ga.sub(xm.action.act(mm, e), e);
            if ll[v] == usize::MAX {
                return Err(Invalid::axiom(
                    "h lands in L",
                    vec![mm, n],
                    "m · ε(n) - ε(n) is not in Ker d0",
                ));
            }
            hmap.push(ll[v]);
        }
    }
    Ok(CrossedSquare {
        l,
        m,
        n: g.objects.clone(),
        p: h.objects.clone(),
        lambda,
        lambda_prime,
        mu,
        nu: xm.boundary.on_objects.clone(),
        act_p_on_l,
        act_p_on_m,
        act_p_on_n: acts.on_objects,
        hmap,
    })
}

/// Restriction of a morphism of crossed modules over group-groupoids to kernels and objects.
pub fn delta_morphism(
    f: &XModGGMorphism,
    dom: &XModGG,
    cod: &XModGG,
) -> Result<XSqMorphism, Invalid> {
    let (_, l) = dom.g.ker_d0();
    let (_, l2) = cod.g.ker_d0();
    let (_, m) = dom.h.ker_d0();
    let (_, m2) = cod.h.ker_d0();
    Ok(XSqMorphism {
        fl: f.f.on_arrows.restrict(&l, &l2)?,
        fm: f.g.on_arrows.restrict(&m, &m2)?,
        fn_: f.f.on_objects.clone(),
        fp: f.g.on_objects.clone(),
    })
}

/// The crossed module over group-groupoids `L ⋊ N -> M ⋊ P` of a crossed square,
/// acting by `(m, p) · (l, n) = (m · (p · l) + h(m, p · n), p · n)`.
pub fn eta(xs: &CrossedSquare) -> Result<XModGG, Invalid> {
    let left = XModGroups {
        a: xs.l.clone(),
        b: xs.n.clone(),
        boundary: xs.lambda_prime.clone(),
        action: xs.n_on_l(),
    };
    let right = xs.right();
    let g = GroupGroupoid::from_xmod(&left);
    let h = GroupGroupoid::from_xmod(&right);
    let (nn, np) = (xs.n.order(), xs.p.order());
    let m_on_l = xs.m_on_l();
    let l = &xs.l;
    let action = GroupAction::from_fn(&h.arrows, &g.arrows, |mp, ln| {
        let (m, p) = pair_parts(mp, np);
        let (x, n) = pair_parts(ln, nn);
        let pn = xs.act_p_on_n.act(p, n);
        let first = l.add(m_on_l.act(m, xs.act_p_on_l.act(p, x)), xs.h(m, pn));
        pair_index(first, pn, nn)
    });
    let boundary = GGMorphism {
        on_arrows: GroupHom::product(&xs.lambda, &xs.nu, &g.arrows, &h.arrows),
        on_objects: xs.nu.clone(),
    };
    Ok(XModGG {
        g,
        h,
        boundary,
        action,
    })
}

/// `(fl x fn, fn)` and `(fm x fp, fp)`.
pub fn eta_morphism(f: &XSqMorphism, dom: &XModGG, cod: &XModGG) -> XModGGMorphism {
    XModGGMorphism {
        f: GGMorphism {
            on_arrows: GroupHom::product(&f.fl, &f.fn_, &dom.g.arrows, &cod.g.arrows),
            on_objects: f.fn_.clone(),
        },
        g: GGMorphism {
            on_arrows: GroupHom::product(&f.fm, &f.fp, &dom.h.arrows, &cod.h.arrows),
            on_objects: f.fp.clone(),
        },
    }
}

/// `a ↦ (a - ε(d0 a), d0 a)` from a group-groupoid into `Ker d0 ⋊ objects`.
fn splitting(gg: &GroupGroupoid, rebuilt: &GroupGroupoid) -> GGMorphism {
    let (_, emb) = gg.ker_d0();
    let local = local_index(&emb);
    let n0 = gg.objects.order();
    GGMorphism {
        on_arrows: GroupHom::from_fn(&gg.arrows, &rebuilt.arrows, |a| {
            let x = gg.d0.apply(a);
            pair_index(local[gg.arrows.sub(a, gg.eps.apply(x))], x, n0)
        }),
        on_objects: GroupHom::identity(&gg.objects),
    }
}

/// `xm -> ηδ(xm)` by the splitting `a ↦ (a - ε(d0 a), d0 a)` on both components.
///
/// The `d1` variant `a ↦ (a - ε(d1 a), d1 a)` is checked for landing in
/// `Ker d0`; the first failure is kept as a diagnostic.
pub fn roundtrip_eta_delta(xm: &XModGG) -> Result<RoundTrip<XModGGMorphism>, Invalid> {
    let rebuilt = eta(&delta(xm)?)?;
    let mut diagnostics = Vec::new();
    for (name, gg) in [("G", &xm.g), ("H", &xm.h)] {
        let k0 = gg.d0.kernel_mask();
        let ga = &gg.arrows;
        if let Some(a) = ga
            .elements()
            .find(|&a| !k0[ga.sub(a, gg.eps.apply(gg.d1.apply(a)))])
        {
            diagnostics.push(format!(
                "in {name}, a - ε(d1 a) is not in Ker d0 for a = {}",
                ga.element_name(a)
            ));
        }
    }
    let morphism = XModGGMorphism {
        f: splitting(&xm.g, &rebuilt.g),
        g: splitting(&xm.h, &rebuilt.h),
    };
    let verdict = morphism.validate(xm, &rebuilt).and_then(|()| {
        bijective(&[
            ("f on arrows", &morphism.f.on_arrows),
            ("g on arrows", &morphism.g.on_arrows),
        ])
    });
    Ok(RoundTrip {
        morphism,
        verdict,
        diagnostics,
    })
}

/// `xs -> δη(xs)`: `l ↦ (l, 0)`, `m ↦ (m, 0)`, identity on `N` and `P`.
pub fn roundtrip_delta_eta(xs: &CrossedSquare) -> Result<RoundTrip<XSqMorphism>, Invalid> {
    let xm = eta(xs)?;
    let rebuilt = delta(&xm)?;
    let (_, l_emb) = xm.g.ker_d0();
    let (_, m_emb) = xm.h.ker_d0();
    let (ll, lm) = (local_index(&l_emb), local_index(&m_emb));
    let (nn, np) = (xs.n.order(), xs.p.order());
    let (zn, zp) = (xs.n.zero(), xs.p.zero());
    let morphism = XSqMorphism {
        fl: GroupHom::from_fn(&xs.l, &rebuilt.l, |l| ll[pair_index(l, zn, nn)]),
        fm: GroupHom::from_fn(&xs.m, &rebuilt.m, |m| lm[pair_index(m, zp, np)]),
        fn_: GroupHom::identity(&xs.n),
        fp: GroupHom::identity(&xs.p),
    };
    let verdict = morphism
        .validate(xs, &rebuilt)
        .and_then(|()| bijective(&[("fl", &morphism.fl), ("fm", &morphism.fm)]));
    Ok(RoundTrip {
        morphism,
        verdict,
        diagnostics: Vec::new(),
    })
}

/// Checks that `theta` sends identities to identities and composites to composites.
pub fn check_theta_functorial(
    f: &XModGGMorphism,
    g: &XModGGMorphism,
    a: &XModGG,
    b: &XModGG,
    c: &XModGG,
) -> Report {
    let (ta, tb, tc) = (theta(a)?, theta(b)?, theta(c)?);
    let (tf, tg) = (theta_morphism(f, &ta, &tb), theta_morphism(g, &tb, &tc));
    tf.validate(&ta, &tb).within("θ(f)")?;
    tg.validate(&tb, &tc).within("θ(g)")?;
    let composite = theta_morphism(&XModGGMorphism::compose(g, f)?, &ta, &tc);
    if composite != DGGMorphism::compose(&tg, &tf)? {
        return Err(Invalid::axiom(
            "functor: composition",
            vec![],
            "θ(g ∘ f) != θ(g) ∘ θ(f)",
        ));
    }
    if theta_morphism(&XModGGMorphism::identity(a), &ta, &ta) != DGGMorphism::identity(&ta) {
        return Err(Invalid::axiom("functor: identity", vec![], "θ(1) != 1"));
    }
    Ok(())
}

/// Orders of `S`, `H`, `V` and `P`.
pub fn component_orders(d: &DoubleGroupGroupoid) -> [(char, usize); 4] {
    let o = |g: &Group| g.order();
    [
        ('S', o(d.s())),
        ('H', o(d.h())),
        ('V', o(d.v())),
        ('P', o(d.p())),
    ]
}
