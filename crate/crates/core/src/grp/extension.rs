use std::sync::Arc;

use super::{compose, pair_index, pair_parts, semidirect_product, Group, GroupAction, GroupHom};
use crate::report::{Invalid, Report, WithinExt};

/// `0 -> G --ι--> K --p--> H -> 0` with a section `s` of `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtension {
    pub kernel: Group,
    pub total: Group,
    pub quotient: Group,
    pub inclusion: GroupHom,
    pub projection: GroupHom,
    pub section: GroupHom,
}

impl SplitExtension {
    /// `A -> A ⋊ B -> B` with `ι(a) = (a, 0)`, `p(a, b) = b`, `s(b) = (0, b)`.
    pub fn semidirect(a: &Group, b: &Group, act: &GroupAction) -> SplitExtension {
        let total: Group = Arc::new(semidirect_product(a, b, act));
        let nb = b.order();
        let (za, zb) = (a.zero(), b.zero());
        SplitExtension {
            inclusion: GroupHom::from_fn(a, &total, |x| pair_index(x, zb, nb)),
            projection: GroupHom::from_fn(&total, b, |i| pair_parts(i, nb).1),
            section: GroupHom::from_fn(b, &total, |y| pair_index(za, y, nb)),
            kernel: a.clone(),
            total,
            quotient: b.clone(),
        }
    }

    /// Split extension of `g` by itself associated with conjugation.
    pub fn conjugation(g: &Group) -> SplitExtension {
        Self::semidirect(g, g, &super::conjugation_action(g))
    }

    pub fn validate(&self) -> Report {
        let pieces = [
            ("inclusion", &self.inclusion, &self.kernel, &self.total),
            ("projection", &self.projection, &self.total, &self.quotient),
            ("section", &self.section, &self.quotient, &self.total),
        ];
        for (part, f, dom, cod) in pieces {
            if !super::hom::same_group(f.domain(), dom)
                || !super::hom::same_group(f.codomain(), cod)
            {
                return Err(Invalid::malformed(format!(
                    "{part} has the wrong domain or codomain"
                )));
            }
            f.validate().within(part)?;
        }
        if !self.inclusion.is_injective() {
            let (x, y) = first_collision(&self.inclusion);
            return Err(Invalid::axiom(
                "exactness: ι injective",
                vec![x, y],
                format!("ι identifies {x} and {y}"),
            ));
        }
        if !self.projection.is_surjective() {
            let missing = self
                .projection
                .image_mask()
                .iter()
                .position(|&m| !m)
                .unwrap_or(0);
            return Err(Invalid::axiom(
                "exactness: p surjective",
                vec![missing],
                format!(
                    "{} is not in the image of p",
                    self.quotient.element_name(missing)
                ),
            ));
        }
        let image = self.inclusion.image_mask();
        let kernel = self.projection.kernel_mask();
        if let Some(k) = self.total.elements().find(|&k| image[k] != kernel[k]) {
            return Err(Invalid::axiom(
                "exactness: Im ι = Ker p",
                vec![k],
                format!(
                    "{} is in {} but not in {}",
                    self.total.element_name(k),
                    if image[k] { "Im ι" } else { "Ker p" },
                    if image[k] { "Ker p" } else { "Im ι" }
                ),
            ));
        }
        let ps = compose(&self.projection, &self.section)?;
        if let Some(b) = ps.first_difference(&GroupHom::identity(&self.quotient)) {
            return Err(Invalid::axiom(
                "p∘s = id",
                vec![b],
                format!(
                    "p(s({})) = {}",
                    self.quotient.element_name(b),
                    self.quotient.element_name(ps.apply(b))
                ),
            ));
        }
        Ok(())
    }
}

fn first_collision(f: &GroupHom) -> (usize, usize) {
    let mut first = vec![usize::MAX; f.codomain().order()];
    for (x, &y) in f.map().iter().enumerate() {
        if first[y] != usize::MAX {
            return (first[y], x);
        }
        first[y] = x;
    }
    (0, 0)
}

/// The action `b · a = ι⁻¹(s(b) + ι(a) - s(b))` induced by the section.
///
/// Expects a valid extension; a conjugate escaping `Im ι` is reported as an
/// `internal consistency` violation.
pub fn derived_action(ext: &SplitExtension) -> Result<GroupAction, Invalid> {
    let k = &ext.total;
    let mut back = vec![usize::MAX; k.order()];
    for (a, &y) in ext.inclusion.map().iter().enumerate() {
        back[y] = a;
    }
    let mut perms = Vec::with_capacity(ext.quotient.order());
    for b in ext.quotient.elements() {
        let sb = ext.section.apply(b);
        let mut perm = Vec::with_capacity(ext.kernel.order());
        for a in ext.kernel.elements() {
            let c = k.conj(sb, ext.inclusion.apply(a));
            if back[c] == usize::MAX {
                return Err(Invalid::axiom(
                    "internal consistency",
                    vec![b, a],
                    format!("s({b}) + ι({a}) - s({b}) is not in Im ι"),
                ));
            }
            perm.push(back[c]);
        }
        perms.push(perm);
    }
    GroupAction::from_perms(ext.quotient.clone(), ext.kernel.clone(), perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::{cyclic, inversion_action, symmetric3};
    use crate::grp::{conjugation_action, trivial_action};

    #[test]
    fn conjugation_extension_recovers_conjugation() {
        let s3 = symmetric3();
        let ext = SplitExtension::conjugation(&s3);
        ext.validate().unwrap();
        let derived = derived_action(&ext).unwrap();
        derived.validate().unwrap();
        assert_eq!(derived, conjugation_action(&s3));
    }

    #[test]
    fn direct_product_extension_gives_trivial_action() {
        let (a, b) = (cyclic(3), cyclic(4));
        let ext = SplitExtension::semidirect(&a, &b, &trivial_action(&b, &a));
        ext.validate().unwrap();
        assert!(derived_action(&ext).unwrap().is_trivial());
    }

    #[test]
    fn inversion_is_recovered_from_s3() {
        let (z3, z2) = (cyclic(3), cyclic(2));
        let inv = inversion_action(&z2, &z3);
        let ext = SplitExtension::semidirect(&z3, &z2, &inv);
        let derived = derived_action(&ext).unwrap();
        assert_eq!(derived.perms(), vec![vec![0, 1, 2], vec![0, 2, 1]]);
    }

    #[test]
    fn broken_section_is_reported() {
        let (z3, z2) = (cyclic(3), cyclic(2));
        let mut ext = SplitExtension::semidirect(&z3, &z2, &trivial_action(&z2, &z3));
        ext.section = GroupHom::zero(&z2, &ext.total);
        assert_eq!(ext.validate().unwrap_err().tag(), "p∘s = id");
        let mut ext2 = SplitExtension::semidirect(&z3, &z2, &trivial_action(&z2, &z3));
        ext2.inclusion = GroupHom::zero(&z3, &ext2.total);
        assert_eq!(ext2.validate().unwrap_err().tag(), "exactness: ι injective");
    }
}
