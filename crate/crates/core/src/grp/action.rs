use super::hom::same_group;
use super::{pair_index, pair_names, pair_parts, FiniteGroup, Group, GroupHom};
use crate::report::{Invalid, Report};

/// A left action of `actor` on `target`, one permutation of the target per actor element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAction {
    actor: Group,
    target: Group,
    /// Row-major: `table[b * |target| + a] = b · a`.
    table: Vec<usize>,
}

impl std::fmt::Debug for GroupAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "GroupAction({} on {}, {:?})",
            self.actor.name(),
            self.target.name(),
            self.perms()
        )
    }
}

impl GroupAction {
    pub fn from_perms(
        actor: Group,
        target: Group,
        perms: Vec<Vec<usize>>,
    ) -> Result<GroupAction, Invalid> {
        let (nb, na) = (actor.order(), target.order());
        if perms.len() != nb {
            return Err(Invalid::malformed(format!(
                "action lists {} permutations, actor {} has order {nb}",
                perms.len(),
                actor.name()
            )));
        }
        for (b, p) in perms.iter().enumerate() {
            if p.len() != na {
                return Err(Invalid::malformed(format!(
                    "perms[{b}] has {} entries, target {} has order {na}",
                    p.len(),
                    target.name()
                )));
            }
            if let Some(a) = p.iter().position(|&v| v >= na) {
                return Err(Invalid::malformed(format!(
                    "perms[{b}][{a}] = {} is out of range 0..{na}",
                    p[a]
                )));
            }
        }
        Ok(GroupAction {
            actor,
            target,
            table: perms.into_iter().flatten().collect(),
        })
    }

    pub(crate) fn from_fn(
        actor: &Group,
        target: &Group,
        f: impl Fn(usize, usize) -> usize,
    ) -> GroupAction {
        let mut table = Vec::with_capacity(actor.order() * target.order());
        for b in actor.elements() {
            for a in target.elements() {
                table.push(f(b, a));
            }
        }
        GroupAction {
            actor: actor.clone(),
            target: target.clone(),
            table,
        }
    }

    pub fn actor(&self) -> &Group {
        &self.actor
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    /// `b · a`.
    #[inline]
    pub fn act(&self, b: usize, a: usize) -> usize {
        self.table[b * self.target.order() + a]
    }

    pub fn perm(&self, b: usize) -> &[usize] {
        let n = self.target.order();
        &self.table[b * n..(b + 1) * n]
    }

    pub fn perms(&self) -> Vec<Vec<usize>> {
        self.actor
            .elements()
            .map(|b| self.perm(b).to_vec())
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.actor
            .elements()
            .all(|b| self.target.elements().all(|a| self.act(b, a) == a))
    }

    /// Bijectivity, identity, compatibility and automorphism laws, exhaustively.
    pub fn validate(&self) -> Report {
        let (bg, ag) = (&self.actor, &self.target);
        for b in bg.elements() {
            let mut seen = vec![false; ag.order()];
            for a in ag.elements() {
                let v = self.act(b, a);
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Invalid::axiom(
                        "action: bijection",
                        vec![b],
                        format!("{} does not act by a permutation", bg.element_name(b)),
                    ));
                }
            }
        }
        let z = bg.zero();
        if let Some(a) = ag.elements().find(|&a| self.act(z, a) != a) {
            return Err(Invalid::axiom(
                "action: identity",
                vec![a],
                format!("0 · {} != {}", ag.element_name(a), ag.element_name(a)),
            ));
        }
        for b in bg.elements() {
            for b1 in bg.elements() {
                for a in ag.elements() {
                    if self.act(bg.add(b, b1), a) != self.act(b, self.act(b1, a)) {
                        return Err(Invalid::axiom(
                            "action: compatibility",
                            vec![b, b1, a],
                            format!(
                                "({} + {}) · {} != {} · ({} · {})",
                                bg.element_name(b),
                                bg.element_name(b1),
                                ag.element_name(a),
                                bg.element_name(b),
                                bg.element_name(b1),
                                ag.element_name(a)
                            ),
                        ));
                    }
                }
            }
        }
        for b in bg.elements() {
            for a in ag.elements() {
                for a1 in ag.elements() {
                    if self.act(b, ag.add(a, a1)) != ag.add(self.act(b, a), self.act(b, a1)) {
                        return Err(Invalid::axiom(
                            "action: automorphism",
                            vec![b, a, a1],
                            format!(
                                "{} · ({} + {}) != {} · {} + {} · {}",
                                bg.element_name(b),
                                ag.element_name(a),
                                ag.element_name(a1),
                                bg.element_name(b),
                                ag.element_name(a),
                                bg.element_name(b),
                                ag.element_name(a1)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The action of `C` obtained through `f : C -> actor`: `c · a = f(c) · a`.
    pub fn pull_back(&self, f: &GroupHom) -> Result<GroupAction, Invalid> {
        if !same_group(f.codomain(), &self.actor) {
            return Err(Invalid::malformed(
                "pull-back along a map into another group",
            ));
        }
        Ok(Self::from_fn(f.domain(), &self.target, |c, a| {
            self.act(f.apply(c), a)
        }))
    }

    /// Restricts the actor along `actor_emb` and the target to the subgroup
    /// embedded by `target_emb`; fails if the subgroup is not stable.
    pub fn restrict(
        &self,
        actor_emb: &GroupHom,
        target_emb: &GroupHom,
    ) -> Result<GroupAction, Invalid> {
        if !same_group(actor_emb.codomain(), &self.actor)
            || !same_group(target_emb.codomain(), &self.target)
        {
            return Err(Invalid::malformed(
                "restriction along embeddings of other groups",
            ));
        }
        let mut back = vec![usize::MAX; self.target.order()];
        for (i, &y) in target_emb.map().iter().enumerate() {
            back[y] = i;
        }
        let sub = target_emb.domain();
        let mut table = Vec::with_capacity(actor_emb.domain().order() * sub.order());
        for c in actor_emb.domain().elements() {
            for a in sub.elements() {
                let y = self.act(actor_emb.apply(c), target_emb.apply(a));
                if back[y] == usize::MAX {
                    return Err(Invalid::axiom(
                        "restriction",
                        vec![c, a],
                        format!(
                            "{} · {} leaves {}",
                            actor_emb.domain().element_name(c),
                            sub.element_name(a),
                            sub.name()
                        ),
                    ));
                }
                table.push(back[y]);
            }
        }
        Ok(GroupAction {
            actor: actor_emb.domain().clone(),
            target: sub.clone(),
            table,
        })
    }

    /// First actor element whose permutation differs from `other`'s.
    pub fn first_difference(&self, other: &GroupAction) -> Option<usize> {
        self.actor
            .elements()
            .find(|&b| self.perm(b) != other.perm(b))
    }
}

/// `b · a = b + a - b`.
pub fn conjugation_action(g: &Group) -> GroupAction {
    GroupAction::from_fn(g, g, |b, a| g.conj(b, a))
}

pub fn trivial_action(actor: &Group, target: &Group) -> GroupAction {
    GroupAction::from_fn(actor, target, |_, a| a)
}

/// `A ⋊ B` on pairs with `(a, b) + (a1, b1) = (a + b · a1, b + b1)`.
///
/// The pair `(x, y)` has index `x * |B| + y`.
pub fn semidirect_product(a: &Group, b: &Group, act: &GroupAction) -> FiniteGroup {
    debug_assert!(same_group(act.actor(), b) && same_group(act.target(), a));
    let nb = b.order();
    let name = if act.is_trivial() {
        format!("{}x{}", a.name(), b.name())
    } else {
        format!("{}⋊{}", a.name(), b.name())
    };
    FiniteGroup::from_fn(name, pair_names(a, b), |i, j| {
        let (x, y) = pair_parts(i, nb);
        let (x1, y1) = pair_parts(j, nb);
        pair_index(a.add(x, act.act(y, x1)), b.add(y, y1), nb)
    })
}
