//! Named example structures, addressable from the command line.

use crate::dgg::DoubleGroupGroupoid;
use crate::gpd::{GroupGroupoid, SplitExtensionGG};
use crate::grp::catalog::{self as groups, BASE_GROUPS};
use crate::grp::{pair_parts, Group, SplitExtension};
use crate::serial::Structure;
use crate::xmod::{XModGG, XModGroups};
use crate::xsq::CrossedSquare;

/// Groups carrying the crossed-module families.
pub const XMOD_BASES: &[&str] = &["Z2", "Z4", "K4", "S3"];

const XMOD_FAMILIES: &[&str] = &["identity", "zero", "pair", "discrete", "identity-pair"];

/// Every catalog name, in listing order.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = BASE_GROUPS.iter().map(|g| format!("group-{g}")).collect();
    for g in XMOD_BASES {
        out.push(format!("pair-gg-{g}"));
    }
    for family in XMOD_FAMILIES {
        for g in XMOD_BASES {
            out.push(format!("{family}-xmod-{g}"));
        }
    }
    for g in XMOD_BASES {
        out.push(format!("trivial-dgg-{g}"));
    }
    out.push("trivial-xsq".into());
    for g in XMOD_BASES {
        out.push(format!("norrie-xsq-{g}"));
    }
    out.push("norrie-xsq-S3-Z3".into());
    out.push("split-Z3-Z2".into());
    out.push("split-conj-S3".into());
    out.push("split-gg-conj-pair-Z2".into());
    out
}

/// The structure registered under `name`, matched case-insensitively.
pub fn build(name: &str) -> Option<Structure> {
    let name = names().into_iter().find(|n| n.eq_ignore_ascii_case(name))?;
    let base = |prefix: &str| name.strip_prefix(prefix).and_then(groups::by_name);
    if let Some(g) = base("group-") {
        return Some(Structure::Group(g));
    }
    if let Some(g) = base("pair-gg-") {
        return Some(Structure::GroupGroupoid(GroupGroupoid::pair(&g)));
    }
    if let Some(g) = base("trivial-dgg-") {
        return Some(Structure::Dgg(DoubleGroupGroupoid::trivial(
            &GroupGroupoid::pair(&g),
        )));
    }
    if let Some(g) = base("norrie-xsq-") {
        let all = vec![true; g.order()];
        return CrossedSquare::norrie(&XModGroups::identity(&g), &all, &all)
            .ok()
            .map(Structure::Xsq);
    }
    for family in XMOD_FAMILIES {
        if let Some(g) = base(&format!("{family}-xmod-")) {
            return Some(Structure::XModGG(xmod_family(family, &g)));
        }
    }
    Some(match name.as_str() {
        "trivial-xsq" => Structure::Xsq(CrossedSquare::trivial()),
        "norrie-xsq-S3-Z3" => {
            let s3 = groups::symmetric3();
            let z3: Vec<bool> = s3.elements().map(|i| pair_parts(i, 2).1 == 0).collect();
            Structure::Xsq(CrossedSquare::norrie(&XModGroups::identity(&s3), &z3, &z3).ok()?)
        }
        "split-Z3-Z2" => {
            let (z3, z2) = (groups::cyclic(3), groups::cyclic(2));
            Structure::SplitExtension(SplitExtension::semidirect(
                &z3,
                &z2,
                &groups::inversion_action(&z2, &z3),
            ))
        }
        "split-conj-S3" => {
            Structure::SplitExtension(SplitExtension::conjugation(&groups::symmetric3()))
        }
        "split-gg-conj-pair-Z2" => Structure::SplitExtensionGG(
            SplitExtensionGG::conjugation(&GroupGroupoid::pair(&groups::cyclic(2))).ok()?,
        ),
        _ => return None,
    })
}

fn xmod_family(family: &str, g: &Group) -> XModGG {
    match family {
        "identity" => XModGG::identity(&GroupGroupoid::discrete(g)),
        "zero" => XModGG::zero(&GroupGroupoid::discrete(g)),
        "pair" => XModGG::pair(&XModGroups::identity(g)),
        "discrete" => {
            let mut zero = vec![false; g.order()];
            zero[g.zero()] = true;
            XModGG::discrete(
                &XModGroups::inclusion(g, &zero).expect("the trivial subgroup is normal"),
            )
        }
        "identity-pair" => XModGG::identity(&GroupGroupoid::pair(g)),
        _ => unreachable!("family list is fixed"),
    }
}

/// Every catalog entry with its name.
pub fn all() -> Vec<(String, Structure)> {
    names()
        .into_iter()
        .map(|n| {
            let s = build(&n).expect("every listed name builds");
            (n, s)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_and_validates() {
        for (name, s) in all() {
            s.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn lookup_ignores_case() {
        assert_eq!(build("identity-xmod-z2"), build("identity-xmod-Z2"));
        assert!(build("no-such-entry").is_none());
    }
}
