//! Text documents for every structure kind.
//!
//! A document is a JSON object `{"format_version", "kind", "payload"}` using
//! only objects, strings, integers and lists. Groups are written as labelled
//! Cayley tables, maps as image lists, actions as one permutation per actor
//! element. Any object field other than `name` may instead hold a string: a
//! path, relative to the referring file, of a `group` or `group-groupoid`
//! document whose payload is substituted.
//!
//! Parsing checks shapes and index ranges only. Group axioms are checked by
//! [`Payload::build`]; everything else by [`Structure::validate`].

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::dgg::DoubleGroupGroupoid;
use crate::gpd::{GGMorphism, GroupGroupoid, SplitExtensionGG};
use crate::grp::{FiniteGroup, Group, GroupAction, GroupHom, SplitExtension};
use crate::report::{Invalid, Report, WithinExt};
use crate::xmod::{XModGG, XModGroups};
use crate::xsq::CrossedSquare;

pub const FORMAT_VERSION: u64 = 1;

pub const KINDS: &[&str] = &[
    "group",
    "hom",
    "action",
    "xmod-groups",
    "group-groupoid",
    "xmod-gg",
    "dgg",
    "xsq",
    "split-extension",
    "split-extension-gg",
];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{file}: syntax error at line {line}, column {column}: {msg}")]
    Syntax {
        file: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("{file}: {path}: {msg}")]
    At {
        file: String,
        path: String,
        msg: String,
    },
    #[error("{file}: unknown kind {kind:?}")]
    UnknownKind { file: String, kind: String },
    #[error("{file}: format_version {found} is not supported, expected {FORMAT_VERSION}")]
    Version { file: String, found: String },
    #[error("{file}: {msg}")]
    Io { file: String, msg: String },
    #[error("{file}: reference cycle")]
    Cycle { file: String },
}

impl ParseError {
    /// JSON path of the offending value, for errors that have one.
    pub fn path(&self) -> Option<&str> {
        match self {
            ParseError::At { path, .. } => Some(path),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub name: String,
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDoc {
    pub domain: GroupDoc,
    pub codomain: GroupDoc,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub actor: GroupDoc,
    pub target: GroupDoc,
    pub perms: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XModGroupsDoc {
    pub a: GroupDoc,
    pub b: GroupDoc,
    pub boundary: Vec<usize>,
    /// Permutations of `a`, one per element of `b`.
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupGroupoidDoc {
    pub arrows: GroupDoc,
    pub objects: GroupDoc,
    pub d0: Vec<usize>,
    pub d1: Vec<usize>,
    pub eps: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub arrows: Vec<usize>,
    pub objects: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XModGGDoc {
    pub g: GroupGroupoidDoc,
    pub h: GroupGroupoidDoc,
    pub boundary: MorphismDoc,
    /// Permutations of the arrows of `g`, one per arrow of `h`.
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DggDoc {
    pub horizontal: GroupGroupoidDoc,
    pub vertical: GroupGroupoidDoc,
    pub h_edges: GroupGroupoidDoc,
    pub v_edges: GroupGroupoidDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct XSqDoc {
    pub l: GroupDoc,
    pub m: GroupDoc,
    pub n: GroupDoc,
    pub p: GroupDoc,
    pub lambda: Vec<usize>,
    pub lambda_prime: Vec<usize>,
    pub mu: Vec<usize>,
    pub nu: Vec<usize>,
    pub act_p_on_l: Vec<Vec<usize>>,
    pub act_p_on_m: Vec<Vec<usize>>,
    pub act_p_on_n: Vec<Vec<usize>>,
    /// `h[m][n]`.
    pub h: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitExtensionDoc {
    pub kernel: GroupDoc,
    pub total: GroupDoc,
    pub quotient: GroupDoc,
    pub inclusion: Vec<usize>,
    pub projection: Vec<usize>,
    pub section: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitExtensionGGDoc {
    pub kernel: GroupGroupoidDoc,
    pub total: GroupGroupoidDoc,
    pub quotient: GroupGroupoidDoc,
    pub inclusion: MorphismDoc,
    pub projection: MorphismDoc,
    pub section: MorphismDoc,
}

/// A parsed, shape-checked document body.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Group(GroupDoc),
    Hom(HomDoc),
    Action(ActionDoc),
    XModGroups(XModGroupsDoc),
    GroupGroupoid(GroupGroupoidDoc),
    XModGG(XModGGDoc),
    Dgg(DggDoc),
    Xsq(XSqDoc),
    SplitExtension(SplitExtensionDoc),
    SplitExtensionGG(SplitExtensionGGDoc),
}

/// A structure built from a document, ready for validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structure {
    Group(Group),
    Hom(GroupHom),
    Action(GroupAction),
    XModGroups(XModGroups),
    GroupGroupoid(GroupGroupoid),
    XModGG(XModGG),
    Dgg(DoubleGroupGroupoid),
    Xsq(CrossedSquare),
    SplitExtension(SplitExtension),
    SplitExtensionGG(SplitExtensionGG),
}

/// Parses document text. File references resolve against `base`.
pub fn parse_str(text: &str, base: &Path) -> Result<Payload, ParseError> {
    let mut stack = Vec::new();
    parse_text(text, "<input>", base, &mut stack)
}

pub fn parse_file(path: &Path) -> Result<Payload, ParseError> {
    let mut stack = Vec::new();
    parse_path(path, &mut stack)
}

fn parse_path(path: &Path, stack: &mut Vec<PathBuf>) -> Result<Payload, ParseError> {
    let file = path.display().to_string();
    let canonical = path.canonicalize().map_err(|e| ParseError::Io {
        file: file.clone(),
        msg: e.to_string(),
    })?;
    if stack.contains(&canonical) {
        return Err(ParseError::Cycle { file });
    }
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::Io {
        file: file.clone(),
        msg: e.to_string(),
    })?;
    let base = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    stack.push(canonical);
    let out = parse_text(&text, &file, &base, stack);
    stack.pop();
    out
}

fn parse_text(
    text: &str,
    file: &str,
    base: &Path,
    stack: &mut Vec<PathBuf>,
) -> Result<Payload, ParseError> {
    let (kind, mut payload) = read_document(text, file)?;
    resolve_refs(&mut payload, "$.payload", file, base, stack)?;
    decode(&kind, payload, file)
}

fn read_document(text: &str, file: &str) -> Result<(String, Value), ParseError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        file: file.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let at = |path: &str, msg: &str| ParseError::At {
        file: file.to_string(),
        path: path.to_string(),
        msg: msg.to_string(),
    };
    let Value::Object(mut fields) = doc else {
        return Err(at("$", "a document is an object"));
    };
    if let Some(extra) = fields
        .keys()
        .find(|k| !["format_version", "kind", "payload"].contains(&k.as_str()))
    {
        return Err(at(&format!("$.{extra}"), "unknown field"));
    }
    match fields.get("format_version") {
        Some(Value::Number(n)) if n.as_u64() == Some(FORMAT_VERSION) => {}
        Some(v) => {
            return Err(ParseError::Version {
                file: file.to_string(),
                found: v.to_string(),
            })
        }
        None => return Err(at("$.format_version", "missing field")),
    }
    let kind = match fields.get("kind") {
        Some(Value::String(k)) => k.clone(),
        Some(_) => return Err(at("$.kind", "expected a string")),
        None => return Err(at("$.kind", "missing field")),
    };
    if !KINDS.contains(&kind.as_str()) {
        return Err(ParseError::UnknownKind {
            file: file.to_string(),
            kind,
        });
    }
    let payload = fields
        .remove("payload")
        .ok_or_else(|| at("$.payload", "missing field"))?;
    Ok((kind, payload))
}

fn resolve_refs(
    value: &mut Value,
    path: &str,
    file: &str,
    base: &Path,
    stack: &mut Vec<PathBuf>,
) -> Result<(), ParseError> {
    match value {
        Value::Object(fields) => {
            for (key, v) in fields.iter_mut() {
                let here = format!("{path}.{key}");
                if let (Value::String(target), false) = (&*v, key == "name") {
                    *v = load_ref(&base.join(target), &here, file, stack)?;
                } else {
                    resolve_refs(v, &here, file, base, stack)?;
                }
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter_mut().enumerate() {
                if v.is_object() {
                    resolve_refs(v, &format!("{path}[{i}]"), file, base, stack)?;
                }
            }
        }
        _ => {}
    }
    Ok(())
}

fn load_ref(
    target: &Path,
    path: &str,
    file: &str,
    stack: &mut Vec<PathBuf>,
) -> Result<Value, ParseError> {
    let at = |msg: String| ParseError::At {
        file: file.to_string(),
        path: path.to_string(),
        msg,
    };
    let canonical = target
        .canonicalize()
        .map_err(|e| at(format!("cannot open {}: {e}", target.display())))?;
    if stack.contains(&canonical) {
        return Err(ParseError::Cycle {
            file: target.display().to_string(),
        });
    }
    let ref_file = target.display().to_string();
    let text =
        std::fs::read_to_string(target).map_err(|e| at(format!("cannot read {ref_file}: {e}")))?;
    let (kind, mut payload) = read_document(&text, &ref_file)?;
    if kind != "group" && kind != "group-groupoid" {
        return Err(at(format!(
            "{ref_file} is a {kind} document; only groups and group-groupoids can be referenced"
        )));
    }
    let base = target.parent().unwrap_or(Path::new(".")).to_path_buf();
    stack.push(canonical);
    let out = resolve_refs(&mut payload, "$.payload", &ref_file, &base, stack);
    stack.pop();
    out?;
    Ok(payload)
}

fn from_value<T: DeserializeOwned>(payload: Value, file: &str) -> Result<T, ParseError> {
    serde_path_to_error::deserialize(payload).map_err(|e| {
        let inner = e.path().to_string();
        let path = if inner == "." {
            "$.payload".to_string()
        } else {
            format!("$.payload.{inner}")
        };
        ParseError::At {
            file: file.to_string(),
            path,
            msg: e.into_inner().to_string(),
        }
    })
}

fn decode(kind: &str, payload: Value, file: &str) -> Result<Payload, ParseError> {
    let p = match kind {
        "group" => Payload::Group(from_value(payload, file)?),
        "hom" => Payload::Hom(from_value(payload, file)?),
        "action" => Payload::Action(from_value(payload, file)?),
        "xmod-groups" => Payload::XModGroups(from_value(payload, file)?),
        "group-groupoid" => Payload::GroupGroupoid(from_value(payload, file)?),
        "xmod-gg" => Payload::XModGG(from_value(payload, file)?),
        "dgg" => Payload::Dgg(from_value(payload, file)?),
        "xsq" => Payload::Xsq(from_value(payload, file)?),
        "split-extension" => Payload::SplitExtension(from_value(payload, file)?),
        "split-extension-gg" => Payload::SplitExtensionGG(from_value(payload, file)?),
        other => {
            return Err(ParseError::UnknownKind {
                file: file.to_string(),
                kind: other.to_string(),
            })
        }
    };
    let mut shape = Shape { file, errors: None };
    p.check(&mut shape);
    match shape.errors {
        Some(e) => Err(e),
        None => Ok(p),
    }
}

/// Collects the first shape error; later checks are skipped.
struct Shape<'a> {
    file: &'a str,
    errors: Option<ParseError>,
}

impl Shape<'_> {
    fn fail(&mut self, path: String, msg: String) {
        if self.errors.is_none() {
            self.errors = Some(ParseError::At {
                file: self.file.to_string(),
                path,
                msg,
            });
        }
    }

    fn group(&mut self, path: &str, g: &GroupDoc) -> usize {
        let n = g.elements.len();
        if n == 0 {
            self.fail(
                format!("{path}.elements"),
                "a group needs at least one element".into(),
            );
        }
        if g.table.len() != n {
            self.fail(
                format!("{path}.table"),
                format!("{} rows, expected {n}", g.table.len()),
            );
        }
        self.rows(&format!("{path}.table"), &g.table, n, n);
        n
    }

    fn gg(&mut self, path: &str, g: &GroupGroupoidDoc) -> (usize, usize) {
        let a = self.group(&format!("{path}.arrows"), &g.arrows);
        let o = self.group(&format!("{path}.objects"), &g.objects);
        self.map(&format!("{path}.d0"), &g.d0, a, o);
        self.map(&format!("{path}.d1"), &g.d1, a, o);
        self.map(&format!("{path}.eps"), &g.eps, o, a);
        (a, o)
    }

    fn map(&mut self, path: &str, map: &[usize], dom: usize, cod: usize) {
        if map.len() != dom {
            self.fail(
                path.to_string(),
                format!("{} entries, expected {dom}", map.len()),
            );
        }
        if let Some(i) = map.iter().position(|&v| v >= cod) {
            self.fail(
                format!("{path}[{i}]"),
                format!("{} is out of range 0..{cod}", map[i]),
            );
        }
    }

    fn morphism(&mut self, path: &str, f: &MorphismDoc, dom: (usize, usize), cod: (usize, usize)) {
        self.map(&format!("{path}.arrows"), &f.arrows, dom.0, cod.0);
        self.map(&format!("{path}.objects"), &f.objects, dom.1, cod.1);
    }

    /// `rows` has `count` rows of `width` entries below `bound`.
    fn rows(&mut self, path: &str, rows: &[Vec<usize>], count: usize, width: usize) {
        self.rows_bounded(path, rows, count, width, width);
    }

    fn rows_bounded(
        &mut self,
        path: &str,
        rows: &[Vec<usize>],
        count: usize,
        width: usize,
        bound: usize,
    ) {
        if rows.len() != count {
            self.fail(
                path.to_string(),
                format!("{} rows, expected {count}", rows.len()),
            );
        }
        for (i, row) in rows.iter().enumerate() {
            self.map(&format!("{path}[{i}]"), row, width, bound);
        }
    }
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Group(_) => "group",
            Payload::Hom(_) => "hom",
            Payload::Action(_) => "action",
            Payload::XModGroups(_) => "xmod-groups",
            Payload::GroupGroupoid(_) => "group-groupoid",
            Payload::XModGG(_) => "xmod-gg",
            Payload::Dgg(_) => "dgg",
            Payload::Xsq(_) => "xsq",
            Payload::SplitExtension(_) => "split-extension",
            Payload::SplitExtensionGG(_) => "split-extension-gg",
        }
    }

    fn check(&self, s: &mut Shape) {
        const P: &str = "$.payload";
        match self {
            Payload::Group(g) => {
                s.group(P, g);
            }
            Payload::Hom(h) => {
                let a = s.group(&format!("{P}.domain"), &h.domain);
                let b = s.group(&format!("{P}.codomain"), &h.codomain);
                s.map(&format!("{P}.map"), &h.map, a, b);
            }
            Payload::Action(act) => {
                let b = s.group(&format!("{P}.actor"), &act.actor);
                let a = s.group(&format!("{P}.target"), &act.target);
                s.rows(&format!("{P}.perms"), &act.perms, b, a);
            }
            Payload::XModGroups(x) => {
                let a = s.group(&format!("{P}.a"), &x.a);
                let b = s.group(&format!("{P}.b"), &x.b);
                s.map(&format!("{P}.boundary"), &x.boundary, a, b);
                s.rows(&format!("{P}.action"), &x.action, b, a);
            }
            Payload::GroupGroupoid(g) => {
                s.gg(P, g);
            }
            Payload::XModGG(x) => {
                let g = s.gg(&format!("{P}.g"), &x.g);
                let h = s.gg(&format!("{P}.h"), &x.h);
                s.morphism(&format!("{P}.boundary"), &x.boundary, g, h);
                s.rows(&format!("{P}.action"), &x.action, h.0, g.0);
            }
            Payload::Dgg(d) => {
                s.gg(&format!("{P}.horizontal"), &d.horizontal);
                s.gg(&format!("{P}.vertical"), &d.vertical);
                s.gg(&format!("{P}.h_edges"), &d.h_edges);
                s.gg(&format!("{P}.v_edges"), &d.v_edges);
            }
            Payload::Xsq(x) => {
                let l = s.group(&format!("{P}.l"), &x.l);
                let m = s.group(&format!("{P}.m"), &x.m);
                let n = s.group(&format!("{P}.n"), &x.n);
                let p = s.group(&format!("{P}.p"), &x.p);
                s.map(&format!("{P}.lambda"), &x.lambda, l, m);
                s.map(&format!("{P}.lambda_prime"), &x.lambda_prime, l, n);
                s.map(&format!("{P}.mu"), &x.mu, m, p);
                s.map(&format!("{P}.nu"), &x.nu, n, p);
                s.rows(&format!("{P}.act_p_on_l"), &x.act_p_on_l, p, l);
                s.rows(&format!("{P}.act_p_on_m"), &x.act_p_on_m, p, m);
                s.rows(&format!("{P}.act_p_on_n"), &x.act_p_on_n, p, n);
                s.rows_bounded(&format!("{P}.h"), &x.h, m, n, l);
            }
            Payload::SplitExtension(e) => {
                let k = s.group(&format!("{P}.kernel"), &e.kernel);
                let t = s.group(&format!("{P}.total"), &e.total);
                let q = s.group(&format!("{P}.quotient"), &e.quotient);
                s.map(&format!("{P}.inclusion"), &e.inclusion, k, t);
                s.map(&format!("{P}.projection"), &e.projection, t, q);
                s.map(&format!("{P}.section"), &e.section, q, t);
            }
            Payload::SplitExtensionGG(e) => {
                let k = s.gg(&format!("{P}.kernel"), &e.kernel);
                let t = s.gg(&format!("{P}.total"), &e.total);
                let q = s.gg(&format!("{P}.quotient"), &e.quotient);
                s.morphism(&format!("{P}.inclusion"), &e.inclusion, k, t);
                s.morphism(&format!("{P}.projection"), &e.projection, t, q);
                s.morphism(&format!("{P}.section"), &e.section, q, t);
            }
        }
    }

    /// Builds the typed structure, checking the group axioms of every
    /// constituent group on the way.
    pub fn build(&self) -> Result<Structure, Invalid> {
        Ok(match self {
            Payload::Group(g) => Structure::Group(build_group(g)?),
            Payload::Hom(h) => {
                let a = build_group(&h.domain).within("domain")?;
                let b = build_group(&h.codomain).within("codomain")?;
                Structure::Hom(GroupHom::from_map(a, b, h.map.clone())?)
            }
            Payload::Action(act) => {
                let b = build_group(&act.actor).within("actor")?;
                let a = build_group(&act.target).within("target")?;
                Structure::Action(GroupAction::from_perms(b, a, act.perms.clone())?)
            }
            Payload::XModGroups(x) => {
                let a = build_group(&x.a).within("A")?;
                let b = build_group(&x.b).within("B")?;
                Structure::XModGroups(XModGroups {
                    boundary: GroupHom::from_map(a.clone(), b.clone(), x.boundary.clone())?,
                    action: GroupAction::from_perms(b.clone(), a.clone(), x.action.clone())?,
                    a,
                    b,
                })
            }
            Payload::GroupGroupoid(g) => Structure::GroupGroupoid(build_gg(g)?),
            Payload::XModGG(x) => {
                let g = build_gg(&x.g).within("G")?;
                let h = build_gg(&x.h).within("H")?;
                Structure::XModGG(XModGG {
                    boundary: build_morphism(&x.boundary, &g, &h)?,
                    action: GroupAction::from_perms(
                        h.arrows.clone(),
                        g.arrows.clone(),
                        x.action.clone(),
                    )?,
                    g,
                    h,
                })
            }
            Payload::Dgg(d) => Structure::Dgg(DoubleGroupGroupoid {
                horizontal: build_gg(&d.horizontal).within("horizontal")?,
                vertical: build_gg(&d.vertical).within("vertical")?,
                h_edges: build_gg(&d.h_edges).within("h_edges")?,
                v_edges: build_gg(&d.v_edges).within("v_edges")?,
            }),
            Payload::Xsq(x) => {
                let l = build_group(&x.l).within("L")?;
                let m = build_group(&x.m).within("M")?;
                let n = build_group(&x.n).within("N")?;
                let p = build_group(&x.p).within("P")?;
                Structure::Xsq(CrossedSquare {
                    lambda: GroupHom::from_map(l.clone(), m.clone(), x.lambda.clone())?,
                    lambda_prime: GroupHom::from_map(l.clone(), n.clone(), x.lambda_prime.clone())?,
                    mu: GroupHom::from_map(m.clone(), p.clone(), x.mu.clone())?,
                    nu: GroupHom::from_map(n.clone(), p.clone(), x.nu.clone())?,
                    act_p_on_l: GroupAction::from_perms(
                        p.clone(),
                        l.clone(),
                        x.act_p_on_l.clone(),
                    )?,
                    act_p_on_m: GroupAction::from_perms(
                        p.clone(),
                        m.clone(),
                        x.act_p_on_m.clone(),
                    )?,
                    act_p_on_n: GroupAction::from_perms(
                        p.clone(),
                        n.clone(),
                        x.act_p_on_n.clone(),
                    )?,
                    hmap: x.h.concat(),
                    l,
                    m,
                    n,
                    p,
                })
            }
            Payload::SplitExtension(e) => {
                let k = build_group(&e.kernel).within("kernel")?;
                let t = build_group(&e.total).within("total")?;
                let q = build_group(&e.quotient).within("quotient")?;
                Structure::SplitExtension(SplitExtension {
                    inclusion: GroupHom::from_map(k.clone(), t.clone(), e.inclusion.clone())?,
                    projection: GroupHom::from_map(t.clone(), q.clone(), e.projection.clone())?,
                    section: GroupHom::from_map(q.clone(), t.clone(), e.section.clone())?,
                    kernel: k,
                    total: t,
                    quotient: q,
                })
            }
            Payload::SplitExtensionGG(e) => {
                let k = build_gg(&e.kernel).within("kernel")?;
                let t = build_gg(&e.total).within("total")?;
                let q = build_gg(&e.quotient).within("quotient")?;
                Structure::SplitExtensionGG(SplitExtensionGG {
                    inclusion: build_morphism(&e.inclusion, &k, &t)?,
                    projection: build_morphism(&e.projection, &t, &q)?,
                    section: build_morphism(&e.section, &q, &t)?,
                    kernel: k,
                    total: t,
                    quotient: q,
                })
            }
        })
    }
}

fn build_group(g: &GroupDoc) -> Result<Group, Invalid> {
    let group = FiniteGroup::from_table(g.name.clone(), g.elements.clone(), g.table.clone())?;
    Ok(Arc::new(group))
}

fn build_gg(g: &GroupGroupoidDoc) -> Result<GroupGroupoid, Invalid> {
    let arrows = build_group(&g.arrows).within("arrows")?;
    let objects = build_group(&g.objects).within("objects")?;
    Ok(GroupGroupoid {
        d0: GroupHom::from_map(arrows.clone(), objects.clone(), g.d0.clone())?,
        d1: GroupHom::from_map(arrows.clone(), objects.clone(), g.d1.clone())?,
        eps: GroupHom::from_map(objects.clone(), arrows.clone(), g.eps.clone())?,
        arrows,
        objects,
    })
}

fn build_morphism(
    f: &MorphismDoc,
    dom: &GroupGroupoid,
    cod: &GroupGroupoid,
) -> Result<GGMorphism, Invalid> {
    Ok(GGMorphism {
        on_arrows: GroupHom::from_map(dom.arrows.clone(), cod.arrows.clone(), f.arrows.clone())?,
        on_objects: GroupHom::from_map(
            dom.objects.clone(),
            cod.objects.clone(),
            f.objects.clone(),
        )?,
    })
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Group(_) => "group",
            Structure::Hom(_) => "hom",
            Structure::Action(_) => "action",
            Structure::XModGroups(_) => "xmod-groups",
            Structure::GroupGroupoid(_) => "group-groupoid",
            Structure::XModGG(_) => "xmod-gg",
            Structure::Dgg(_) => "dgg",
            Structure::Xsq(_) => "xsq",
            Structure::SplitExtension(_) => "split-extension",
            Structure::SplitExtensionGG(_) => "split-extension-gg",
        }
    }

    /// Runs the validator matching the kind. Groups are already valid.
    pub fn validate(&self) -> Report {
        match self {
            Structure::Group(_) => Ok(()),
            Structure::Hom(f) => f.validate(),
            Structure::Action(a) => a.validate(),
            Structure::XModGroups(x) => x.validate(),
            Structure::GroupGroupoid(g) => g.validate(),
            Structure::XModGG(x) => x.validate(),
            Structure::Dgg(d) => d.validate(),
            Structure::Xsq(x) => x.validate(),
            Structure::SplitExtension(e) => e.validate(),
            Structure::SplitExtensionGG(e) => e.validate(),
        }
    }

    /// One-line description of the component orders.
    pub fn summary(&self) -> String {
        match self {
            Structure::Group(g) => format!("{} of order {}", g.name(), g.order()),
            Structure::Hom(f) => format!("{} -> {}", f.domain().name(), f.codomain().name()),
            Structure::Action(a) => format!("{} on {}", a.actor().name(), a.target().name()),
            Structure::XModGroups(x) => format!("|A| = {}, |B| = {}", x.a.order(), x.b.order()),
            Structure::GroupGroupoid(g) => format!(
                "|arrows| = {}, |objects| = {}",
                g.arrows.order(),
                g.objects.order()
            ),
            Structure::XModGG(x) => format!(
                "|G| = {} over {}, |H| = {} over {}",
                x.g.arrows.order(),
                x.g.objects.order(),
                x.h.arrows.order(),
                x.h.objects.order()
            ),
            Structure::Dgg(d) => format!(
                "|S| = {}, |H| = {}, |V| = {}, |P| = {}",
                d.s().order(),
                d.h().order(),
                d.v().order(),
                d.p().order()
            ),
            Structure::Xsq(x) => format!(
                "|L| = {}, |M| = {}, |N| = {}, |P| = {}",
                x.l.order(),
                x.m.order(),
                x.n.order(),
                x.p.order()
            ),
            Structure::SplitExtension(e) => format!(
                "{} -> {} -> {}",
                e.kernel.order(),
                e.total.order(),
                e.quotient.order()
            ),
            Structure::SplitExtensionGG(e) => format!(
                "{} -> {} -> {} arrows",
                e.kernel.arrows.order(),
                e.total.arrows.order(),
                e.quotient.arrows.order()
            ),
        }
    }

    pub fn to_payload(&self) -> Payload {
        match self {
            Structure::Group(g) => Payload::Group(group_doc(g)),
            Structure::Hom(f) => Payload::Hom(HomDoc {
                domain: group_doc(f.domain()),
                codomain: group_doc(f.codomain()),
                map: f.map().to_vec(),
            }),
            Structure::Action(a) => Payload::Action(ActionDoc {
                actor: group_doc(a.actor()),
                target: group_doc(a.target()),
                perms: a.perms(),
            }),
            Structure::XModGroups(x) => Payload::XModGroups(XModGroupsDoc {
                a: group_doc(&x.a),
                b: group_doc(&x.b),
                boundary: x.boundary.map().to_vec(),
                action: x.action.perms(),
            }),
            Structure::GroupGroupoid(g) => Payload::GroupGroupoid(gg_doc(g)),
            Structure::XModGG(x) => Payload::XModGG(XModGGDoc {
                g: gg_doc(&x.g),
                h: gg_doc(&x.h),
                boundary: morphism_doc(&x.boundary),
                action: x.action.perms(),
            }),
            Structure::Dgg(d) => Payload::Dgg(DggDoc {
                horizontal: gg_doc(&d.horizontal),
                vertical: gg_doc(&d.vertical),
                h_edges: gg_doc(&d.h_edges),
                v_edges: gg_doc(&d.v_edges),
            }),
            Structure::Xsq(x) => Payload::Xsq(XSqDoc {
                l: group_doc(&x.l),
                m: group_doc(&x.m),
                n: group_doc(&x.n),
                p: group_doc(&x.p),
                lambda: x.lambda.map().to_vec(),
                lambda_prime: x.lambda_prime.map().to_vec(),
                mu: x.mu.map().to_vec(),
                nu: x.nu.map().to_vec(),
                act_p_on_l: x.act_p_on_l.perms(),
                act_p_on_m: x.act_p_on_m.perms(),
                act_p_on_n: x.act_p_on_n.perms(),
                h: x.hmap.chunks(x.n.order()).map(<[usize]>::to_vec).collect(),
            }),
            Structure::SplitExtension(e) => Payload::SplitExtension(SplitExtensionDoc {
                kernel: group_doc(&e.kernel),
                total: group_doc(&e.total),
                quotient: group_doc(&e.quotient),
                inclusion: e.inclusion.map().to_vec(),
                projection: e.projection.map().to_vec(),
                section: e.section.map().to_vec(),
            }),
            Structure::SplitExtensionGG(e) => Payload::SplitExtensionGG(SplitExtensionGGDoc {
                kernel: gg_doc(&e.kernel),
                total: gg_doc(&e.total),
                quotient: gg_doc(&e.quotient),
                inclusion: morphism_doc(&e.inclusion),
                projection: morphism_doc(&e.projection),
                section: morphism_doc(&e.section),
            }),
        }
    }

    pub fn to_document(&self) -> String {
        print(&self.to_payload())
    }
}

fn group_doc(g: &Group) -> GroupDoc {
    GroupDoc {
        name: g.name().to_string(),
        elements: g.names().to_vec(),
        table: g.rows(),
    }
}

fn gg_doc(g: &GroupGroupoid) -> GroupGroupoidDoc {
    GroupGroupoidDoc {
        arrows: group_doc(&g.arrows),
        objects: group_doc(&g.objects),
        d0: g.d0.map().to_vec(),
        d1: g.d1.map().to_vec(),
        eps: g.eps.map().to_vec(),
    }
}

fn morphism_doc(f: &GGMorphism) -> MorphismDoc {
    MorphismDoc {
        arrows: f.on_arrows.map().to_vec(),
        objects: f.on_objects.map().to_vec(),
    }
}

/// The canonical text of a payload.
pub fn print(payload: &Payload) -> String {
    let body = match payload {
        Payload::Group(p) => serde_json::to_value(p),
        Payload::Hom(p) => serde_json::to_value(p),
        Payload::Action(p) => serde_json::to_value(p),
        Payload::XModGroups(p) => serde_json::to_value(p),
        Payload::GroupGroupoid(p) => serde_json::to_value(p),
        Payload::XModGG(p) => serde_json::to_value(p),
        Payload::Dgg(p) => serde_json::to_value(p),
        Payload::Xsq(p) => serde_json::to_value(p),
        Payload::SplitExtension(p) => serde_json::to_value(p),
        Payload::SplitExtensionGG(p) => serde_json::to_value(p),
    }
    .expect("documents contain only strings, integers, lists and objects");
    let mut doc = BTreeMap::new();
    doc.insert("format_version", Value::from(FORMAT_VERSION));
    doc.insert("kind", Value::from(payload.kind()));
    doc.insert("payload", body);
    canonical(&serde_json::to_value(doc).expect("string keys"))
}

/// Deterministic layout: sorted keys, two-space indentation, lists of scalars
/// on one line, trailing newline.
pub fn canonical(value: &Value) -> String {
    let mut out = String::new();
    write_value(value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(value: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Object(fields) if !fields.is_empty() => {
            let mut keys: Vec<&String> = fields.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (i, key) in keys.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::from(key.as_str()).to_string());
                out.push_str(": ");
                write_value(&fields[key.as_str()], depth + 1, out);
                out.push_str(if i + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        Value::Array(items) if items.iter().any(|v| v.is_array() || v.is_object()) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(item, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        other => out.push_str(&other.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::catalog::*;

    fn z2_doc() -> String {
        Structure::Group(cyclic(2)).to_document()
    }

    #[test]
    fn group_document_layout() {
        let expected = "{\n  \"format_version\": 1,\n  \"kind\": \"group\",\n  \"payload\": {\n    \"elements\": [\"0\", \"1\"],\n    \"name\": \"Z2\",\n    \"table\": [\n      [0, 1],\n      [1, 0]\n    ]\n  }\n}\n";
        assert_eq!(z2_doc(), expected);
    }

    #[test]
    fn group_round_trip() {
        let p = parse_str(&z2_doc(), Path::new(".")).unwrap();
        let Structure::Group(g) = p.build().unwrap() else {
            panic!()
        };
        assert_eq!(g, cyclic(2));
        assert_eq!(print(&p), z2_doc());
    }

    #[test]
    fn out_of_range_entry_names_its_path() {
        let text = z2_doc().replace("[1, 0]", "[5, 0]");
        let err = parse_str(&text, Path::new(".")).unwrap_err();
        assert_eq!(err.path(), Some("$.payload.table[1][0]"));
    }

    #[test]
    fn type_errors_name_their_path() {
        let text = z2_doc().replace("[1, 0]", "[1, 0.5]");
        let err = parse_str(&text, Path::new(".")).unwrap_err();
        assert_eq!(err.path(), Some("$.payload.table[1][1]"));
        let text = z2_doc().replace("\"name\"", "\"label\"");
        assert!(parse_str(&text, Path::new(".")).is_err());
    }

    #[test]
    fn header_errors() {
        let unknown = z2_doc().replace("\"group\"", "\"monoid\"");
        assert!(matches!(
            parse_str(&unknown, Path::new(".")),
            Err(ParseError::UnknownKind { .. })
        ));
        let version = z2_doc().replace("\"format_version\": 1", "\"format_version\": 2");
        assert!(matches!(
            parse_str(&version, Path::new(".")),
            Err(ParseError::Version { .. })
        ));
        assert!(matches!(
            parse_str("{", Path::new(".")),
            Err(ParseError::Syntax { .. })
        ));
    }

    #[test]
    fn broken_table_parses_but_fails_to_build() {
        let text = z2_doc().replace("[1, 0]", "[0, 0]");
        let p = parse_str(&text, Path::new(".")).unwrap();
        let err = p.build().unwrap_err();
        assert_eq!(err.tag(), "Latin square");
    }

    #[test]
    fn composite_structures_round_trip() {
        let gg = GroupGroupoid::pair(&klein());
        let samples = vec![
            Structure::XModGG(XModGG::identity(&gg)),
            Structure::Dgg(DoubleGroupGroupoid::trivial(&gg)),
            Structure::Xsq(CrossedSquare::trivial()),
            Structure::SplitExtension(SplitExtension::conjugation(&symmetric3())),
            Structure::SplitExtensionGG(
                SplitExtensionGG::conjugation(&GroupGroupoid::discrete(&cyclic(3))).unwrap(),
            ),
            Structure::Action(inversion_action(&cyclic(2), &cyclic(4))),
        ];
        for s in samples {
            let text = s.to_document();
            let p = parse_str(&text, Path::new(".")).unwrap();
            let back = p.build().unwrap();
            assert_eq!(back, s, "{}", s.kind());
            assert_eq!(print(&p), text);
            back.validate().unwrap();
        }
    }

    #[test]
    fn file_references_and_cycles() {
        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("z2.doc"), z2_doc()).unwrap();
        let hom = "{\"format_version\": 1, \"kind\": \"hom\", \"payload\": {\"domain\": \"z2.doc\", \"codomain\": \"z2.doc\", \"map\": [0, 1]}}";
        std::fs::write(dir.path().join("hom.doc"), hom).unwrap();
        let p = parse_file(&dir.path().join("hom.doc")).unwrap();
        let Structure::Hom(f) = p.build().unwrap() else {
            panic!()
        };
        assert_eq!(f, GroupHom::identity(&cyclic(2)));

        let looped = "{\"format_version\": 1, \"kind\": \"group-groupoid\", \"payload\": {\"arrows\": \"loop.doc\", \"objects\": \"z2.doc\", \"d0\": [0, 1], \"d1\": [0, 1], \"eps\": [0, 1]}}";
        std::fs::write(dir.path().join("loop.doc"), looped).unwrap();
        let err = parse_file(&dir.path().join("loop.doc")).unwrap_err();
        assert!(matches!(err, ParseError::Cycle { .. }), "{err}");
    }
}
