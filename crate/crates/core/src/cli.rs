//! The `ggx` command line.
//!
//! Exit codes: 0 valid or success, 1 structure invalid, 2 usage or parse error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::enumerate::{self, EnumError};
use crate::equiv;
use crate::grp::catalog as groups;
use crate::grp::Group;
use crate::report::Invalid;
use crate::serial::{self, canonical, Structure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ggx",
    version,
    about = "Check group-groupoids, crossed modules, double group-groupoids and crossed squares"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document of any kind.
    Verify {
        file: PathBuf,
        /// Print a machine-readable report.
        #[arg(long)]
        json: bool,
    },
    /// Apply one of the functors and write the resulting document.
    Apply {
        functor: Functor,
        file: PathBuf,
        /// Output file; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Rewrite a document in canonical form without validating it.
    Format {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that a composite of two functors is naturally isomorphic to the identity.
    Roundtrip { trip: Trip, file: PathBuf },
    /// Enumerate structures exhaustively.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// List or print named example structures.
    Catalog {
        #[command(subcommand)]
        what: Catalog,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Functor {
    Theta,
    Gamma,
    Delta,
    Eta,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Trip {
    ThetaGamma,
    GammaTheta,
    DeltaEta,
    EtaDelta,
}

#[derive(Debug, clap::Args)]
struct EnumOpts {
    /// Bound on group orders; overrides GGX_MAX_ORDER.
    #[arg(long)]
    max_order: Option<usize>,
    /// Write one document per result into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Enumerate {
    /// Homomorphisms between two catalog groups.
    Homs {
        domain: String,
        codomain: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Actions of one catalog group on another.
    Actions {
        actor: String,
        target: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Crossed modules `A -> B` of catalog groups.
    XmodGroups {
        a: String,
        b: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Group-groupoid structures on catalog groups.
    Gg {
        arrows: String,
        objects: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// The crossed-module corpus over catalog group-groupoids.
    XmodGg {
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Regression counts for every enumerator, as a document.
    Counts {
        #[arg(long)]
        max_order: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
enum Catalog {
    List,
    Emit {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_INVALID
        }
    }
}

enum Failure {
    Usage(String),
    Invalid(String),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Verify { file, json } => verify(&file, json, out),
        Command::Apply {
            functor,
            file,
            output,
        } => apply(functor, &file, output.as_deref(), out),
        Command::Format { file, output } => {
            let payload = serial::parse_file(&file).map_err(|e| Failure::Usage(e.to_string()))?;
            emit(&serial::print(&payload), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Roundtrip { trip, file } => roundtrip(trip, &file, out),
        Command::Enumerate { what } => run_enumerate(what, out),
        Command::Catalog { what } => match what {
            Catalog::List => {
                for name in crate::catalog::names() {
                    writeln!(out, "{name}")?;
                }
                Ok(EXIT_OK)
            }
            Catalog::Emit { name, output } => {
                let s = crate::catalog::build(&name)
                    .ok_or_else(|| Failure::Usage(format!("no catalog entry {name:?}")))?;
                emit(&s.to_document(), output.as_deref(), out)?;
                Ok(EXIT_OK)
            }
        },
    }
}

/// Outcome of loading a file: a built structure, or the reason it failed
/// before validation.
enum Loaded {
    Built(Structure),
    /// Group axioms or shape failures found while building.
    Unbuildable {
        kind: &'static str,
        error: Invalid,
    },
}

fn load(file: &Path) -> Result<Loaded, Failure> {
    let payload = serial::parse_file(file).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(match payload.build() {
        Ok(s) => Loaded::Built(s),
        Err(error) => Loaded::Unbuildable {
            kind: payload.kind(),
            error,
        },
    })
}

/// Loads and validates, or fails with the invalidity report.
fn load_valid(file: &Path) -> Result<Structure, Failure> {
    match load(file)? {
        Loaded::Built(s) => match s.validate() {
            Ok(()) => Ok(s),
            Err(e) => Err(Failure::Invalid(human_report(s.kind(), s.kind(), &e))),
        },
        Loaded::Unbuildable { kind, error } => {
            Err(Failure::Invalid(human_report(kind, "group", &error)))
        }
    }
}

fn human_report(kind: &str, axiom_owner: &str, e: &Invalid) -> String {
    let mut lines = vec![format!("invalid {kind}")];
    let path = e.component_path();
    if !path.is_empty() {
        lines.push(format!("  in: {}", path.join(" / ")));
    }
    match e.violation() {
        Some(v) => {
            lines.push(format!("  {axiom_owner} axiom: {}, {}", v.axiom, v.detail));
            lines.push(format!("  witness: {:?}", v.witness));
        }
        None => lines.push(format!("  {}", innermost(e))),
    }
    lines.join("\n")
}

fn innermost(e: &Invalid) -> String {
    match e {
        Invalid::Component { inner, .. } => innermost(inner),
        other => other.to_string(),
    }
}

fn json_report(kind: &str, summary: Option<String>, result: Result<(), &Invalid>) -> Value {
    match result {
        Ok(()) => json!({ "kind": kind, "valid": true, "summary": summary }),
        Err(e) => {
            let v = e.violation();
            json!({
                "kind": kind,
                "valid": false,
                "summary": summary,
                "component": e.component_path(),
                "axiom": e.tag(),
                "witness": v.map(|v| v.witness.clone()).unwrap_or_default(),
                "detail": v.map(|v| v.detail.clone()).unwrap_or_else(|| innermost(e)),
            })
        }
    }
}

fn verify(file: &Path, as_json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let (kind, summary, result, owner) = match load(file)? {
        Loaded::Built(s) => (s.kind(), Some(s.summary()), s.validate(), s.kind()),
        Loaded::Unbuildable { kind, error } => (kind, None, Err(error), "group"),
    };
    if as_json {
        write!(
            out,
            "{}",
            canonical(&json_report(kind, summary, result.as_ref().map(|_| ())))
        )?;
    } else {
        match &result {
            Ok(()) => writeln!(out, "valid {kind}: {}", summary.unwrap_or_default())?,
            Err(e) => writeln!(out, "{}", human_report(kind, owner, e))?,
        }
    }
    Ok(if result.is_ok() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn wrong_kind(s: &Structure, wanted: &str) -> Failure {
    Failure::Usage(format!("expected a {wanted} document, found {}", s.kind()))
}

fn invalid(e: Invalid) -> Failure {
    Failure::Invalid(human_report("result", "construction", &e))
}

fn apply(
    functor: Functor,
    file: &Path,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let s = load_valid(file)?;
    let result = match (functor, &s) {
        (Functor::Theta, Structure::XModGG(xm)) => {
            Structure::Dgg(equiv::theta(xm).map_err(invalid)?)
        }
        (Functor::Gamma, Structure::Dgg(d)) => Structure::XModGG(equiv::gamma(d).map_err(invalid)?),
        (Functor::Delta, Structure::XModGG(xm)) => {
            Structure::Xsq(equiv::delta(xm).map_err(invalid)?)
        }
        (Functor::Eta, Structure::Xsq(xs)) => Structure::XModGG(equiv::eta(xs).map_err(invalid)?),
        (f, _) => {
            let wanted = match f {
                Functor::Theta | Functor::Delta => "xmod-gg",
                Functor::Gamma => "dgg",
                Functor::Eta => "xsq",
            };
            return Err(wrong_kind(&s, wanted));
        }
    };
    emit(&result.to_document(), output, out)?;
    Ok(EXIT_OK)
}

fn roundtrip(trip: Trip, file: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let s = load_valid(file)?;
    let (verdict, diagnostics, size) = match (trip, &s) {
        (Trip::ThetaGamma, Structure::Dgg(d)) => {
            let r = equiv::roundtrip_theta_gamma(d).map_err(invalid)?;
            (r.verdict, r.diagnostics, format!("|S| = {}", d.s().order()))
        }
        (Trip::GammaTheta, Structure::XModGG(xm)) => {
            let r = equiv::roundtrip_gamma_theta(xm).map_err(invalid)?;
            let n = xm.g.arrows.order() * xm.h.arrows.order();
            (r.verdict, r.diagnostics, format!("|G⋊H| = {n}"))
        }
        (Trip::EtaDelta, Structure::XModGG(xm)) => {
            let r = equiv::roundtrip_eta_delta(xm).map_err(invalid)?;
            (r.verdict, r.diagnostics, s.summary())
        }
        (Trip::DeltaEta, Structure::Xsq(xs)) => {
            let r = equiv::roundtrip_delta_eta(xs).map_err(invalid)?;
            (r.verdict, r.diagnostics, s.summary())
        }
        (t, _) => {
            let wanted = match t {
                Trip::ThetaGamma => "dgg",
                Trip::GammaTheta | Trip::EtaDelta => "xmod-gg",
                Trip::DeltaEta => "xsq",
            };
            return Err(wrong_kind(&s, wanted));
        }
    };
    for d in &diagnostics {
        writeln!(out, "note: {d}")?;
    }
    match verdict {
        Ok(()) => {
            writeln!(out, "isomorphism verified, {size}")?;
            Ok(EXIT_OK)
        }
        Err(e) => {
            writeln!(out, "round trip is not an isomorphism")?;
            writeln!(out, "{}", human_report("comparison map", "morphism", &e))?;
            Ok(EXIT_INVALID)
        }
    }
}

fn group(name: &str) -> Result<Group, Failure> {
    groups::by_name(name).ok_or_else(|| Failure::Usage(format!("unknown group {name:?}")))
}

fn run_enumerate(what: Enumerate, out: &mut dyn Write) -> Result<i32, Failure> {
    let bound = |b: Option<usize>| b.unwrap_or_else(enumerate::max_order_from_env);
    let (docs, dir): (Vec<Structure>, Option<PathBuf>) = match what {
        Enumerate::Homs {
            domain,
            codomain,
            opts,
        } => {
            let found =
                enumerate::all_homs(&group(&domain)?, &group(&codomain)?, bound(opts.max_order))?;
            (found.into_iter().map(Structure::Hom).collect(), opts.out)
        }
        Enumerate::Actions {
            actor,
            target,
            opts,
        } => {
            let found =
                enumerate::all_actions(&group(&actor)?, &group(&target)?, bound(opts.max_order))?;
            (found.into_iter().map(Structure::Action).collect(), opts.out)
        }
        Enumerate::XmodGroups { a, b, opts } => {
            let found =
                enumerate::all_xmod_groups(&group(&a)?, &group(&b)?, bound(opts.max_order))?;
            (
                found.into_iter().map(Structure::XModGroups).collect(),
                opts.out,
            )
        }
        Enumerate::Gg {
            arrows,
            objects,
            opts,
        } => {
            let found = enumerate::all_gg_structures(
                &group(&arrows)?,
                &group(&objects)?,
                bound(opts.max_order),
            )?;
            (
                found.into_iter().map(Structure::GroupGroupoid).collect(),
                opts.out,
            )
        }
        Enumerate::XmodGg { opts } => {
            let found = enumerate::all_xmod_gg(bound(opts.max_order))?;
            (found.map(Structure::XModGG).collect(), opts.out)
        }
        Enumerate::Counts { max_order } => {
            let counts = enumerate::counts(bound(max_order))?;
            let value = serde_json::to_value(counts).expect("counts serialize");
            write!(out, "{}", canonical(&value))?;
            return Ok(EXIT_OK);
        }
    };
    if let Some(dir) = dir {
        std::fs::create_dir_all(&dir)?;
        for (i, s) in docs.iter().enumerate() {
            std::fs::write(
                dir.join(format!("{}-{:04}.doc", s.kind(), i + 1)),
                s.to_document(),
            )?;
        }
    }
    writeln!(out, "count: {}", docs.len())?;
    Ok(EXIT_OK)
}

fn emit(text: &str, output: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => write!(out, "{text}")?,
    }
    Ok(())
}
