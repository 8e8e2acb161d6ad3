//! Finite groups given by Cayley tables.
//!
//! The group operation is written `+` throughout, even for nonabelian groups:
//! `table[i][j]` is the index of `i + j`. Every algorithm works on element
//! indices; names are only carried for input and output.

mod action;
pub mod catalog;
mod extension;
mod hom;
pub mod iso;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::report::{Invalid, Report};

pub use action::{conjugation_action, semidirect_product, trivial_action, GroupAction};
pub use extension::{derived_action, SplitExtension};
pub(crate) use hom::same_group;
pub use hom::{compose, GroupHom};

/// Shared handle to a validated group; structures reference their groups through it.
pub type Group = Arc<FiniteGroup>;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    names: Vec<String>,
    table: Vec<usize>,
    zero: usize,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

/// Checks shape, then the group axioms, reporting the first failure.
///
/// Shape problems (non-square table, index out of range, label count) come
/// back as [`Invalid::Malformed`]; axiom failures carry a witness tuple.
pub fn validate_group(names: &[String], rows: &[Vec<usize>]) -> Report {
    check_shape(names, rows)?;
    let n = names.len();
    let at = |i: usize, j: usize| rows[i][j];

    // Latin square: scan rows in order, catching duplicates inside the row and
    // repeats against earlier rows in the same column.
    let mut col_seen = vec![vec![usize::MAX; n]; n];
    for (i, row) in rows.iter().enumerate() {
        let mut row_seen = vec![usize::MAX; n];
        for (j, &v) in row.iter().enumerate() {
            if row_seen[v] != usize::MAX {
                return Err(Invalid::axiom(
                    "Latin square",
                    vec![i, row_seen[v], j],
                    format!(
                        "row {i}: element {v} appears in columns {} and {j}",
                        row_seen[v]
                    ),
                ));
            }
            row_seen[v] = j;
            if col_seen[j][v] != usize::MAX {
                return Err(Invalid::axiom(
                    "Latin square",
                    vec![i, j, col_seen[j][v]],
                    format!(
                        "row {i}: column {j} repeats element {v} already in row {}",
                        col_seen[j][v]
                    ),
                ));
            }
            col_seen[j][v] = i;
        }
    }

    for a in 0..n {
        for b in 0..n {
            let ab = at(a, b);
            for c in 0..n {
                if at(ab, c) != at(a, at(b, c)) {
                    return Err(Invalid::axiom(
                        "associativity",
                        vec![a, b, c],
                        format!("({a} + {b}) + {c} != {a} + ({b} + {c})"),
                    ));
                }
            }
        }
    }

    let zero = match (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)) {
        Some(e) => e,
        None => {
            return Err(Invalid::axiom(
                "identity",
                vec![],
                "no two-sided identity element",
            ))
        }
    };
    for x in 0..n {
        let found = (0..n).any(|y| at(x, y) == zero && at(y, x) == zero);
        if !found {
            return Err(Invalid::axiom(
                "inverse",
                vec![x],
                format!("element {x} has no two-sided inverse"),
            ));
        }
    }
    Ok(())
}

fn check_shape(names: &[String], rows: &[Vec<usize>]) -> Report {
    let n = names.len();
    if n == 0 {
        return Err(Invalid::malformed("a group needs at least one element"));
    }
    let mut distinct = HashSet::new();
    for (i, name) in names.iter().enumerate() {
        if !distinct.insert(name.as_str()) {
            return Err(Invalid::malformed(format!(
                "elements[{i}]: duplicate label {name:?}"
            )));
        }
    }
    if rows.len() != n {
        return Err(Invalid::malformed(format!(
            "table has {} rows, expected {n}",
            rows.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Invalid::malformed(format!(
                "table[{i}] has {} entries, expected {n}",
                row.len()
            )));
        }
        if let Some(j) = row.iter().position(|&v| v >= n) {
            return Err(Invalid::malformed(format!(
                "table[{i}][{j}] = {} is out of range 0..{n}",
                row[j]
            )));
        }
    }
    Ok(())
}

impl FiniteGroup {
    /// Validates the table and builds the group, caching identity and inverses.
    pub fn from_table(
        name: impl Into<String>,
        names: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<FiniteGroup, Invalid> {
        validate_group(&names, &rows)?;
        let n = names.len();
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        Ok(Self::assemble(name.into(), names, table, n))
    }

    /// Builds a group from an operation known to satisfy the axioms.
    ///
    /// Callers are constructions (products, subgroups) whose output is a group
    /// by construction; the table is still validated in debug builds.
    pub(crate) fn from_fn(
        name: impl Into<String>,
        names: Vec<String>,
        op: impl Fn(usize, usize) -> usize,
    ) -> FiniteGroup {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(op(a, b));
            }
        }
        debug_assert!(validate_group(
            &names,
            &table.chunks(n).map(|r| r.to_vec()).collect::<Vec<_>>()
        )
        .is_ok());
        Self::assemble(name.into(), names, table, n)
    }

    fn assemble(name: String, names: Vec<String>, table: Vec<usize>, n: usize) -> FiniteGroup {
        let zero = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x))
            .expect("validated table has an identity");
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] == zero)
                    .expect("validated table has inverses")
            })
            .collect();
        FiniteGroup {
            name,
            names,
            table,
            zero,
            inverse,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn element_name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a - b`, i.e. `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `b + a - b`.
    #[inline]
    pub fn conj(&self, b: usize, a: usize) -> usize {
        self.sub(self.add(b, a), b)
    }

    /// Sum of a sequence, left to right.
    pub fn sum(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.zero, |acc, x| self.add(acc, x))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order())
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.non_commuting_pair().is_none()
    }

    /// Lexicographically first pair with `a + b != b + a`.
    pub fn non_commuting_pair(&self) -> Option<(usize, usize)> {
        for a in self.elements() {
            for b in a + 1..self.order() {
                if self.add(a, b) != self.add(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order()];
        inside[self.zero] = true;
        let mut frontier = vec![self.zero];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.add(x, g);
                if !inside[y] {
                    inside[y] = true;
                    frontier.push(y);
                }
            }
        }
        inside
    }

    /// A generating set chosen greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = self.closure(&gens);
        for x in self.elements() {
            if !inside[x] {
                gens.push(x);
                inside = self.closure(&gens);
            }
        }
        gens
    }

    pub fn is_subgroup(&self, mask: &[bool]) -> bool {
        if !mask[self.zero] {
            return false;
        }
        self.elements().filter(|&a| mask[a]).all(|a| {
            self.elements()
                .filter(|&b| mask[b])
                .all(|b| mask[self.sub(a, b)])
        })
    }

    pub fn is_normal(&self, mask: &[bool]) -> bool {
        self.is_subgroup(mask)
            && self.elements().all(|g| {
                self.elements()
                    .filter(|&a| mask[a])
                    .all(|a| mask[self.conj(g, a)])
            })
    }

    /// The subgroup on the marked elements, with its embedding into `parent`.
    ///
    /// Elements keep their parent names and ascending parent order.
    pub fn subgroup(parent: &Group, mask: &[bool], name: impl Into<String>) -> (Group, GroupHom) {
        debug_assert!(parent.is_subgroup(mask));
        let members: Vec<usize> = parent.elements().filter(|&x| mask[x]).collect();
        let mut local = vec![usize::MAX; parent.order()];
        for (i, &x) in members.iter().enumerate() {
            local[x] = i;
        }
        let names = members.iter().map(|&x| parent.names[x].clone()).collect();
        let sub = Arc::new(FiniteGroup::from_fn(name, names, |a, b| {
            local[parent.add(members[a], members[b])]
        }));
        let emb = GroupHom::from_map_unchecked(sub.clone(), parent.clone(), members);
        (sub, emb)
    }
}

/// Index of the pair `(x, y)` in a product whose right factor has order `right`.
#[inline]
pub fn pair_index(x: usize, y: usize, right: usize) -> usize {
    x * right + y
}

/// Inverse of [`pair_index`].
#[inline]
pub fn pair_parts(i: usize, right: usize) -> (usize, usize) {
    (i / right, i % right)
}

/// Direct product `A x B` on pairs, coordinatewise.
pub fn direct_product(a: &Group, b: &Group) -> FiniteGroup {
    let nb = b.order();
    let names = pair_names(a, b);
    FiniteGroup::from_fn(format!("{}x{}", a.name(), b.name()), names, |i, j| {
        let (x, y) = pair_parts(i, nb);
        let (x1, y1) = pair_parts(j, nb);
        pair_index(a.add(x, x1), b.add(y, y1), nb)
    })
}

pub(crate) fn pair_names(a: &FiniteGroup, b: &FiniteGroup) -> Vec<String> {
    let mut names = Vec::with_capacity(a.order() * b.order());
    for x in a.elements() {
        for y in b.elements() {
            names.push(format!("({},{})", a.element_name(x), b.element_name(y)));
        }
    }
    names
}
