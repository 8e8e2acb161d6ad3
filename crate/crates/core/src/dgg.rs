//! Double group-groupoids and the special double groupoid of a crossed module.
//!
//! A double group-groupoid is stored as four group-groupoids sharing groups:
//! squares `S` over horizontal edges `H` (faces `d0h`, `d1h`, `εh`), squares
//! over vertical edges `V` (`d0v`, `d1v`, `εv`), `H` over points `P`
//! (`d0H`, `d1H`, `εH`) and `V` over `P` (`d0V`, `d1V`, `εV`).
//! `comp_h` composes in `S` over `H` and `comp_v` in `S` over `V`.

use crate::gpd::{GroupGroupoid, NotComposable};
use crate::grp::{compose, same_group, Group, GroupHom};
use crate::report::{Invalid, Report, WithinExt};
use crate::xmod::XModGroups;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleGroupGroupoid {
    /// `S` over `H`.
    pub horizontal: GroupGroupoid,
    /// `S` over `V`.
    pub vertical: GroupGroupoid,
    /// `H` over `P`.
    pub h_edges: GroupGroupoid,
    /// `V` over `P`.
    pub v_edges: GroupGroupoid,
}

/// Checks that `on_arrows` preserves composition and inverses.
fn check_functor(
    tag: &str,
    on_arrows: &GroupHom,
    dom: &GroupGroupoid,
    cod: &GroupGroupoid,
) -> Report {
    for (x, y) in dom.composable_pairs() {
        let image = cod.compose(on_arrows.apply(x), on_arrows.apply(y)).ok();
        if image != Some(on_arrows.apply(dom.compose_unchecked(x, y))) {
            return Err(Invalid::axiom(
                format!("{tag} preserves composition"),
                vec![x, y],
                format!(
                    "images of {} and {} do not compose to the image of their composite",
                    dom.arrows.element_name(x),
                    dom.arrows.element_name(y)
                ),
            ));
        }
    }
    if let Some(x) = dom
        .arrows
        .elements()
        .find(|&x| on_arrows.apply(dom.inverse(x)) != cod.inverse(on_arrows.apply(x)))
    {
        return Err(Invalid::axiom(
            format!("{tag} preserves inverses"),
            vec![x],
            format!(
                "image of the inverse of {} is not an inverse",
                dom.arrows.element_name(x)
            ),
        ));
    }
    Ok(())
}

impl DoubleGroupGroupoid {
    pub fn s(&self) -> &Group {
        &self.horizontal.arrows
    }

    pub fn h(&self) -> &Group {
        &self.horizontal.objects
    }

    pub fn v(&self) -> &Group {
        &self.vertical.objects
    }

    pub fn p(&self) -> &Group {
        &self.h_edges.objects
    }

    /// `(G, G, G0, G0)`: identity horizontal structure, vertical structure from `gg`.
    pub fn trivial(gg: &GroupGroupoid) -> DoubleGroupGroupoid {
        DoubleGroupGroupoid {
            horizontal: GroupGroupoid::discrete(&gg.arrows),
            vertical: gg.clone(),
            h_edges: gg.clone(),
            v_edges: GroupGroupoid::discrete(&gg.objects),
        }
    }

    pub fn validate(&self) -> Report {
        let shared = [
            ("S", &self.horizontal.arrows, &self.vertical.arrows),
            ("H", &self.horizontal.objects, &self.h_edges.arrows),
            ("V", &self.vertical.objects, &self.v_edges.arrows),
            ("P", &self.h_edges.objects, &self.v_edges.objects),
        ];
        for (name, x, y) in shared {
            if !same_group(x, y) {
                return Err(Invalid::malformed(format!(
                    "the two copies of {name} differ ({} vs {})",
                    x.name(),
                    y.name()
                )));
            }
        }
        self.horizontal.validate().within("horizontal (S over H)")?;
        self.vertical.validate().within("vertical (S over V)")?;
        self.h_edges
            .validate()
            .within("horizontal edges (H over P)")?;
        self.v_edges
            .validate()
            .within("vertical edges (V over P)")?;
        self.check_faces()?;
        self.check_functors()?;
        self.horizontal
            .check_interchange()
            .within("horizontal (S over H)")?;
        self.vertical
            .check_interchange()
            .within("vertical (S over V)")?;
        self.check_interchange()
    }

    /// Commuting squares between face and identity maps.
    fn check_faces(&self) -> Report {
        let (hz, vt, he, ve) = (
            &self.horizontal,
            &self.vertical,
            &self.h_edges,
            &self.v_edges,
        );
        let d = |g: &GroupGroupoid, i: usize| if i == 0 { g.d0.clone() } else { g.d1.clone() };
        let c = |f: &GroupHom, g: &GroupHom| compose(f, g).expect("shared groups checked");
        for i in 0..2 {
            for j in 0..2 {
                let lhs = c(&d(he, i), &d(hz, j));
                let rhs = c(&d(ve, j), &d(vt, i));
                if let Some(s) = lhs.first_difference(&rhs) {
                    return Err(Invalid::axiom(
                        format!("faces: d{i}H d{j}h = d{j}V d{i}v"),
                        vec![s],
                        format!("corners of square {} disagree", self.s().element_name(s)),
                    ));
                }
            }
        }
        for i in 0..2 {
            let lhs = c(&he.eps, &d(ve, i));
            let rhs = c(&d(hz, i), &vt.eps);
            if let Some(x) = lhs.first_difference(&rhs) {
                return Err(Invalid::axiom(
                    format!("faces: εH d{i}V = d{i}h εv"),
                    vec![x],
                    format!("at vertical edge {}", self.v().element_name(x)),
                ));
            }
            let lhs = c(&d(vt, i), &hz.eps);
            let rhs = c(&ve.eps, &d(he, i));
            if let Some(x) = lhs.first_difference(&rhs) {
                return Err(Invalid::axiom(
                    format!("faces: d{i}v εh = εV d{i}H"),
                    vec![x],
                    format!("at horizontal edge {}", self.h().element_name(x)),
                ));
            }
        }
        let lhs = c(&vt.eps, &ve.eps);
        let rhs = c(&hz.eps, &he.eps);
        if let Some(x) = lhs.first_difference(&rhs) {
            return Err(Invalid::axiom(
                "identities: εv εV = εh εH",
                vec![x],
                format!(
                    "identity squares of point {} differ",
                    self.p().element_name(x)
                ),
            ));
        }
        Ok(())
    }

    /// Faces and identities of one direction respect composition and inverses
    /// of the other.
    fn check_functors(&self) -> Report {
        let (hz, vt, he, ve) = (
            &self.horizontal,
            &self.vertical,
            &self.h_edges,
            &self.v_edges,
        );
        check_functor("d0v", &vt.d0, hz, ve)?;
        check_functor("d1v", &vt.d1, hz, ve)?;
        check_functor("d0h", &hz.d0, vt, he)?;
        check_functor("d1h", &hz.d1, vt, he)?;
        check_functor("εh", &hz.eps, he, vt)?;
        check_functor("εv", &vt.eps, ve, hz)
    }

    /// `comp_v(comp_h(x, y), comp_h(z, w)) = comp_h(comp_v(x, z), comp_v(y, w))`
    /// for every 2x2 grid `x y / z w` of composable squares.
    fn check_interchange(&self) -> Report {
        let (hz, vt) = (&self.horizontal, &self.vertical);
        let hstars = hz.stars();
        let vstars = vt.stars();
        let s = self.s();
        for x in s.elements() {
            for &y in &hstars[hz.d1.apply(x)] {
                let top = hz.compose_unchecked(x, y);
                for &z in &vstars[vt.d1.apply(x)] {
                    let left = vt.compose_unchecked(x, z);
                    for &w in &hstars[hz.d1.apply(z)] {
                        if vt.d0.apply(w) != vt.d1.apply(y) {
                            continue;
                        }
                        let bottom = hz.compose_unchecked(z, w);
                        let right = vt.compose_unchecked(y, w);
                        let lhs = vt.compose(top, bottom).ok();
                        let rhs = hz.compose(left, right).ok();
                        if lhs.is_none() || lhs != rhs {
                            return Err(Invalid::axiom(
                                "interchange (horizontal/vertical)",
                                vec![x, y, z, w],
                                format!(
                                    "grid {} {} / {} {} composes differently by rows and by columns",
                                    s.element_name(x),
                                    s.element_name(y),
                                    s.element_name(z),
                                    s.element_name(w)
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `α ∘h β` for `α` then `β`; requires `d1h α = d0h β`.
    pub fn comp_h(&self, alpha: usize, beta: usize) -> Result<usize, NotComposable> {
        self.horizontal.compose(alpha, beta)
    }

    /// `α ∘v β` for `α` then `β`; requires `d1v α = d0v β`.
    pub fn comp_v(&self, alpha: usize, beta: usize) -> Result<usize, NotComposable> {
        self.vertical.compose(alpha, beta)
    }

    /// `εh d0h β - β + εh d1h β`.
    pub fn inv_h(&self, beta: usize) -> usize {
        self.horizontal.inverse(beta)
    }

    /// `εv d0v α - α + εv d1v α`.
    pub fn inv_v(&self, alpha: usize) -> usize {
        self.vertical.inverse(alpha)
    }

    /// Kernel identities: squares in `Ker d1` and `Ker d0` of either direction
    /// compose by the group operation and commute, and conjugation inside
    /// `Ker d0` only depends on `ε d1` of the conjugator.
    pub fn check_kernel_identities(&self) -> Report {
        let s = self.s();
        for (dir, gg) in [("h", &self.horizontal), ("v", &self.vertical)] {
            let (k0, k1) = (gg.d0.kernel_mask(), gg.d1.kernel_mask());
            for a in s.elements().filter(|&a| k1[a]) {
                for a1 in s.elements().filter(|&a1| k0[a1]) {
                    let c = gg.compose_unchecked(a, a1);
                    if c != s.add(a1, a) || c != s.add(a, a1) {
                        return Err(Invalid::axiom(
                            format!("kernel composition ({dir})"),
                            vec![a, a1],
                            "composite is not the commuting sum",
                        ));
                    }
                }
            }
            for a in s.elements().filter(|&a| k0[a]) {
                let e = gg.eps.apply(gg.d1.apply(a));
                if gg.inverse(a) != s.sub(e, a) || gg.inverse(a) != s.add(s.neg(a), e) {
                    return Err(Invalid::axiom(
                        format!("kernel inverse ({dir})"),
                        vec![a],
                        "inverse formulas differ",
                    ));
                }
                for a1 in s.elements().filter(|&a1| k0[a1]) {
                    if s.conj(a, a1) != s.conj(e, a1) {
                        return Err(Invalid::axiom(
                            format!("kernel conjugation ({dir})"),
                            vec![a, a1],
                            "conjugation depends on more than ε d1",
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A morphism of double group-groupoids, one homomorphism per group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DGGMorphism {
    pub fs: GroupHom,
    pub fh: GroupHom,
    pub fv: GroupHom,
    pub fp: GroupHom,
}

impl DGGMorphism {
    pub fn identity(d: &DoubleGroupGroupoid) -> DGGMorphism {
        DGGMorphism {
            fs: GroupHom::identity(d.s()),
            fh: GroupHom::identity(d.h()),
            fv: GroupHom::identity(d.v()),
            fp: GroupHom::identity(d.p()),
        }
    }

    pub fn validate(&self, dom: &DoubleGroupGroupoid, cod: &DoubleGroupGroupoid) -> Report {
        use crate::gpd::GGMorphism;
        let parts = [
            (
                "horizontal",
                &self.fs,
                &self.fh,
                &dom.horizontal,
                &cod.horizontal,
            ),
            ("vertical", &self.fs, &self.fv, &dom.vertical, &cod.vertical),
            (
                "horizontal edges",
                &self.fh,
                &self.fp,
                &dom.h_edges,
                &cod.h_edges,
            ),
            (
                "vertical edges",
                &self.fv,
                &self.fp,
                &dom.v_edges,
                &cod.v_edges,
            ),
        ];
        for (part, f1, f0, d, c) in parts {
            GGMorphism {
                on_arrows: f1.clone(),
                on_objects: f0.clone(),
            }
            .validate(d, c)
            .within(part)?;
        }
        Ok(())
    }

    /// `outer ∘ inner`.
    pub fn compose(outer: &DGGMorphism, inner: &DGGMorphism) -> Result<DGGMorphism, Invalid> {
        Ok(DGGMorphism {
            fs: compose(&outer.fs, &inner.fs)?,
            fh: compose(&outer.fh, &inner.fh)?,
            fv: compose(&outer.fv, &inner.fv)?,
            fp: compose(&outer.fp, &inner.fp)?,
        })
    }

    pub fn is_bijective(&self) -> bool {
        [&self.fs, &self.fh, &self.fv, &self.fp]
            .iter()
            .all(|f| f.is_isomorphism())
    }
}

/// A square of the special double groupoid: a fill `α` in `A` and four edges
/// in `B` with `∂α = -bottom - left + top + right`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub fill: usize,
    pub left: usize,
    pub top: usize,
    pub bottom: usize,
    pub right: usize,
}

/// All squares over a crossed module of groups, with horizontal composition
/// along the right/left edges and vertical composition along bottom/top.
///
/// For `x` beside `y` (`x.right = y.left`) the composite has fill
/// `(-y.bottom) · x.fill + y.fill`; for `x` above `z` (`x.bottom = z.top`)
/// it has fill `z.fill + (-z.right) · x.fill`. Edges add along the direction
/// of composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialDoubleGroupoid {
    pub base: XModGroups,
    pub squares: Vec<Square>,
}

impl SpecialDoubleGroupoid {
    pub fn from_xmod(xm: &XModGroups) -> SpecialDoubleGroupoid {
        let (a, b) = (&xm.a, &xm.b);
        let mut fills = vec![Vec::new(); b.order()];
        for alpha in a.elements() {
            fills[xm.boundary.apply(alpha)].push(alpha);
        }
        let mut squares = Vec::new();
        for left in b.elements() {
            for top in b.elements() {
                for bottom in b.elements() {
                    for right in b.elements() {
                        let target = b.sum([b.neg(bottom), b.neg(left), top, right]);
                        for &fill in &fills[target] {
                            squares.push(Square {
                                fill,
                                left,
                                top,
                                bottom,
                                right,
                            });
                        }
                    }
                }
            }
        }
        SpecialDoubleGroupoid {
            base: xm.clone(),
            squares,
        }
    }

    pub fn is_square(&self, sq: &Square) -> bool {
        let b = &self.base.b;
        self.base.boundary.apply(sq.fill)
            == b.sum([b.neg(sq.bottom), b.neg(sq.left), sq.top, sq.right])
    }

    pub fn comp_h(&self, x: &Square, y: &Square) -> Result<Square, NotComposable> {
        if x.right != y.left {
            return Err(NotComposable {
                first: x.fill,
                second: y.fill,
            });
        }
        let (a, b, act) = (&self.base.a, &self.base.b, &self.base.action);
        Ok(Square {
            fill: a.add(act.act(b.neg(y.bottom), x.fill), y.fill),
            left: x.left,
            top: b.add(x.top, y.top),
            bottom: b.add(x.bottom, y.bottom),
            right: y.right,
        })
    }

    pub fn comp_v(&self, x: &Square, z: &Square) -> Result<Square, NotComposable> {
        if x.bottom != z.top {
            return Err(NotComposable {
                first: x.fill,
                second: z.fill,
            });
        }
        let (a, b, act) = (&self.base.a, &self.base.b, &self.base.action);
        Ok(Square {
            fill: a.add(z.fill, act.act(b.neg(z.right), x.fill)),
            left: b.add(x.left, z.left),
            top: x.top,
            bottom: z.bottom,
            right: b.add(x.right, z.right),
        })
    }

    /// Horizontal identity on a vertical edge.
    pub fn id_h(&self, edge: usize) -> Square {
        let (za, zb) = (self.base.a.zero(), self.base.b.zero());
        Square {
            fill: za,
            left: edge,
            top: zb,
            bottom: zb,
            right: edge,
        }
    }

    /// Vertical identity on a horizontal edge.
    pub fn id_v(&self, edge: usize) -> Square {
        let (za, zb) = (self.base.a.zero(), self.base.b.zero());
        Square {
            fill: za,
            left: zb,
            top: edge,
            bottom: edge,
            right: zb,
        }
    }

    pub fn inv_h(&self, x: &Square) -> Square {
        let (a, b, act) = (&self.base.a, &self.base.b, &self.base.action);
        Square {
            fill: a.neg(act.act(x.bottom, x.fill)),
            left: x.right,
            top: b.neg(x.top),
            bottom: b.neg(x.bottom),
            right: x.left,
        }
    }

    pub fn inv_v(&self, x: &Square) -> Square {
        let (a, b, act) = (&self.base.a, &self.base.b, &self.base.action);
        Square {
            fill: a.neg(act.act(x.right, x.fill)),
            left: b.neg(x.left),
            top: x.bottom,
            bottom: x.top,
            right: b.neg(x.right),
        }
    }

    /// Closure, associativity, identities, inverses and the interchange law,
    /// exhaustively over the enumerated squares.
    pub fn check_laws(&self) -> Report {
        let sq = &self.squares;
        let fail = |tag: &str, xs: &[&Square]| {
            Invalid::axiom(
                tag,
                xs.iter().map(|s| s.fill).collect(),
                format!("squares {xs:?}"),
            )
        };
        for x in sq {
            if !self.is_square(x) {
                return Err(fail("boundary relation", &[x]));
            }
            if self.comp_h(x, &self.id_h(x.right)).ok() != Some(*x)
                || self.comp_h(&self.id_h(x.left), x).ok() != Some(*x)
                || self.comp_v(x, &self.id_v(x.bottom)).ok() != Some(*x)
                || self.comp_v(&self.id_v(x.top), x).ok() != Some(*x)
            {
                return Err(fail("identity", &[x]));
            }
            let (ih, iv) = (self.inv_h(x), self.inv_v(x));
            if !self.is_square(&ih)
                || self.comp_h(x, &ih).ok() != Some(self.id_h(x.left))
                || self.comp_h(&ih, x).ok() != Some(self.id_h(x.right))
            {
                return Err(fail("horizontal inverse", &[x]));
            }
            if !self.is_square(&iv)
                || self.comp_v(x, &iv).ok() != Some(self.id_v(x.top))
                || self.comp_v(&iv, x).ok() != Some(self.id_v(x.bottom))
            {
                return Err(fail("vertical inverse", &[x]));
            }
        }
        let by_left = |e: usize| sq.iter().filter(move |s| s.left == e);
        let by_top = |e: usize| sq.iter().filter(move |s| s.top == e);
        for x in sq {
            for y in by_left(x.right) {
                let xy = self.comp_h(x, y).expect("matching edge");
                if !self.is_square(&xy) {
                    return Err(fail("closure (horizontal)", &[x, y]));
                }
                for z in by_left(y.right) {
                    if self.comp_h(&xy, z)
                        != self.comp_h(x, &self.comp_h(y, z).expect("matching edge"))
                    {
                        return Err(fail("associativity (horizontal)", &[x, y, z]));
                    }
                }
            }
            for z in by_top(x.bottom) {
                let xz = self.comp_v(x, z).expect("matching edge");
                if !self.is_square(&xz) {
                    return Err(fail("closure (vertical)", &[x, z]));
                }
                for w in by_top(z.bottom) {
                    if self.comp_v(&xz, w)
                        != self.comp_v(x, &self.comp_v(z, w).expect("matching edge"))
                    {
                        return Err(fail("associativity (vertical)", &[x, z, w]));
                    }
                }
            }
        }
        for x in sq {
            for y in by_left(x.right) {
                for z in by_top(x.bottom) {
                    for w in by_left(z.right).filter(|w| w.top == y.bottom) {
                        let rows = self
                            .comp_h(x, y)
                            .and_then(|r1| self.comp_v(&r1, &self.comp_h(z, w)?));
                        let cols = self
                            .comp_v(x, z)
                            .and_then(|c1| self.comp_h(&c1, &self.comp_v(y, w)?));
                        if rows.is_err() || rows != cols {
                            return Err(fail("interchange", &[x, y, z, w]));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}
