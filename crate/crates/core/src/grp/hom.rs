use std::sync::Arc;

use super::{FiniteGroup, Group};
use crate::report::{Invalid, Report};

/// A map between finite groups, stored as an index table.
///
/// Construction only checks the shape of the table; [`GroupHom::validate`]
/// checks the homomorphism law, so a candidate can be built and then rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    domain: Group,
    codomain: Group,
    map: Vec<usize>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupHom({} -> {}, {:?})",
            self.domain.name(),
            self.codomain.name(),
            self.map
        )
    }
}

pub(crate) fn same_group(a: &Group, b: &Group) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl GroupHom {
    pub fn from_map(domain: Group, codomain: Group, map: Vec<usize>) -> Result<GroupHom, Invalid> {
        if map.len() != domain.order() {
            return Err(Invalid::malformed(format!(
                "map has {} entries, domain {} has order {}",
                map.len(),
                domain.name(),
                domain.order()
            )));
        }
        if let Some(i) = map.iter().position(|&v| v >= codomain.order()) {
            return Err(Invalid::malformed(format!(
                "map[{i}] = {} is out of range for {} (order {})",
                map[i],
                codomain.name(),
                codomain.order()
            )));
        }
        Ok(GroupHom {
            domain,
            codomain,
            map,
        })
    }

    pub(crate) fn from_map_unchecked(domain: Group, codomain: Group, map: Vec<usize>) -> GroupHom {
        debug_assert_eq!(map.len(), domain.order());
        GroupHom {
            domain,
            codomain,
            map,
        }
    }

    /// Shape check plus homomorphism law.
    pub fn new(domain: Group, codomain: Group, map: Vec<usize>) -> Result<GroupHom, Invalid> {
        let f = Self::from_map(domain, codomain, map)?;
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn from_fn(
        domain: &Group,
        codomain: &Group,
        f: impl Fn(usize) -> usize,
    ) -> GroupHom {
        let map = domain.elements().map(f).collect();
        Self::from_map_unchecked(domain.clone(), codomain.clone(), map)
    }

    pub fn identity(g: &Group) -> GroupHom {
        Self::from_fn(g, g, |x| x)
    }

    pub fn zero(domain: &Group, codomain: &Group) -> GroupHom {
        let z = codomain.zero();
        Self::from_fn(domain, codomain, |_| z)
    }

    /// `f(a + a') = f(a) + f(a')` for all pairs, first failure in index order.
    pub fn validate(&self) -> Report {
        let (g, h) = (&self.domain, &self.codomain);
        for a in g.elements() {
            for b in g.elements() {
                let lhs = self.map[g.add(a, b)];
                let rhs = h.add(self.map[a], self.map[b]);
                if lhs != rhs {
                    return Err(Invalid::axiom(
                        "homomorphism",
                        vec![a, b],
                        format!(
                            "f({} + {}) = {} but f({}) + f({}) = {}",
                            g.element_name(a),
                            g.element_name(b),
                            h.element_name(lhs),
                            g.element_name(a),
                            g.element_name(b),
                            h.element_name(rhs)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn is_hom(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn domain(&self) -> &Group {
        &self.domain
    }

    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ self`: apply `self`, then `g`.
    pub fn then(&self, g: &GroupHom) -> Result<GroupHom, Invalid> {
        compose(g, self)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        self.map
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain.order()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.domain.order() == self.codomain.order() && self.is_injective() && self.is_hom()
    }

    /// Inverse map of a bijection.
    pub fn inverse(&self) -> Option<GroupHom> {
        if self.domain.order() != self.codomain.order() || !self.is_injective() {
            return None;
        }
        let mut inv = vec![0; self.codomain.order()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self::from_map_unchecked(
            self.codomain.clone(),
            self.domain.clone(),
            inv,
        ))
    }

    pub fn kernel_mask(&self) -> Vec<bool> {
        let z = self.codomain.zero();
        self.map.iter().map(|&y| y == z).collect()
    }

    pub fn image_mask(&self) -> Vec<bool> {
        let mut mask = vec![false; self.codomain.order()];
        for &y in &self.map {
            mask[y] = true;
        }
        mask
    }

    /// Kernel as a group with its inclusion into the domain.
    pub fn kernel(&self) -> (Group, GroupHom) {
        FiniteGroup::subgroup(
            &self.domain,
            &self.kernel_mask(),
            format!("Ker({})", self.domain.name()),
        )
    }

    /// Image as a group with its inclusion into the codomain.
    pub fn image(&self) -> (Group, GroupHom) {
        FiniteGroup::subgroup(
            &self.codomain,
            &self.image_mask(),
            format!("Im({})", self.domain.name()),
        )
    }

    /// Restricts to subgroups: `dom_emb : D -> domain`, `cod_emb : C -> codomain`.
    ///
    /// Fails with a `restriction` violation naming the first element of `D`
    /// whose image leaves `C`.
    pub fn restrict(&self, dom_emb: &GroupHom, cod_emb: &GroupHom) -> Result<GroupHom, Invalid> {
        if !same_group(dom_emb.codomain(), &self.domain)
            || !same_group(cod_emb.codomain(), &self.codomain)
        {
            return Err(Invalid::malformed(
                "restriction along embeddings of other groups",
            ));
        }
        let mut back = vec![usize::MAX; self.codomain.order()];
        for (i, &y) in cod_emb.map.iter().enumerate() {
            back[y] = i;
        }
        let mut map = Vec::with_capacity(dom_emb.domain.order());
        for x in dom_emb.domain.elements() {
            let y = self.map[dom_emb.map[x]];
            if back[y] == usize::MAX {
                return Err(Invalid::axiom(
                    "restriction",
                    vec![x],
                    format!(
                        "image of {} leaves {}",
                        dom_emb.domain.element_name(x),
                        cod_emb.domain.name()
                    ),
                ));
            }
            map.push(back[y]);
        }
        Ok(Self::from_map_unchecked(
            dom_emb.domain.clone(),
            cod_emb.domain.clone(),
            map,
        ))
    }

    /// Restricts the domain along an embedding, keeping the codomain.
    pub fn restrict_domain(&self, dom_emb: &GroupHom) -> Result<GroupHom, Invalid> {
        compose(self, dom_emb)
    }

    /// Pointwise comparison; the first element where the maps differ.
    pub fn first_difference(&self, other: &GroupHom) -> Option<usize> {
        self.map.iter().zip(&other.map).position(|(a, b)| a != b)
    }

    /// `f x g : A x B -> C x D` on pair-indexed groups.
    pub fn product(f: &GroupHom, g: &GroupHom, domain: &Group, codomain: &Group) -> GroupHom {
        let (nb, nd) = (g.domain.order(), g.codomain.order());
        debug_assert_eq!(domain.order(), f.domain.order() * nb);
        debug_assert_eq!(codomain.order(), f.codomain.order() * nd);
        Self::from_fn(domain, codomain, |i| {
            let (x, y) = super::pair_parts(i, nb);
            super::pair_index(f.apply(x), g.apply(y), nd)
        })
    }
}

/// `outer ∘ inner`.
pub fn compose(outer: &GroupHom, inner: &GroupHom) -> Result<GroupHom, Invalid> {
    if !same_group(&inner.codomain, &outer.domain) {
        return Err(Invalid::malformed(format!(
            "cannot compose: codomain {} does not match domain {}",
            inner.codomain.name(),
            outer.domain.name()
        )));
    }
    let map = inner.map.iter().map(|&y| outer.map[y]).collect();
    Ok(GroupHom::from_map_unchecked(
        inner.domain.clone(),
        outer.codomain.clone(),
        map,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::cyclic;

    #[test]
    fn mod_two_kernel_is_even_subgroup() {
        let (z4, z2) = (cyclic(4), cyclic(2));
        let f = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        let (k, emb) = f.kernel();
        assert_eq!(k.order(), 2);
        assert_eq!(emb.map(), &[0, 2]);
        assert!(f.is_surjective());
        assert!(!f.is_injective());
        let (im, _) = f.image();
        assert_eq!(im.order(), 2);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let (z4, z2) = (cyclic(4), cyclic(2));
        let (k, _) = GroupHom::zero(&z4, &z2).kernel();
        assert_eq!(k.order(), 4);
    }

    #[test]
    fn compose_with_identity() {
        let (z4, z2) = (cyclic(4), cyclic(2));
        let f = GroupHom::new(z4.clone(), z2.clone(), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(compose(&f, &GroupHom::identity(&z4)).unwrap(), f);
        assert_eq!(compose(&GroupHom::identity(&z2), &f).unwrap(), f);
        assert!(compose(&f, &f).unwrap_err().is_malformed());
    }

    #[test]
    fn non_hom_reports_first_pair() {
        let (z2, z4) = (cyclic(2), cyclic(4));
        let f = GroupHom::from_map(z2, z4, vec![0, 1]).unwrap();
        let e = f.validate().unwrap_err();
        assert_eq!(e.violation().unwrap().witness, vec![1, 1]);
    }

    #[test]
    fn restriction_reports_escape() {
        let z4 = cyclic(4);
        let (_, even) = FiniteGroup::subgroup(&z4, &[true, false, true, false], "2Z4");
        let id = GroupHom::identity(&z4);
        let r = id.restrict(&even, &even).unwrap();
        assert_eq!(r.map(), &[0, 1]);
        let succ = GroupHom::from_fn(&z4, &z4, |x| (3 * x) % 4);
        assert!(succ.restrict(&even, &even).is_ok());
        let whole = GroupHom::identity(&z4);
        assert_eq!(id.restrict(&whole, &even).unwrap_err().tag(), "restriction");
    }
}
