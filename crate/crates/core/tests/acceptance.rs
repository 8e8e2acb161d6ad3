//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::Value;

use ggx::dgg::{DoubleGroupGroupoid, SpecialDoubleGroupoid, Square};
use ggx::enumerate::{
    all_actions, all_gg_structures, all_homs, all_xmod_gg, all_xmod_groups, counts,
};
use ggx::equiv::{
    delta, roundtrip_delta_eta, roundtrip_eta_delta, roundtrip_gamma_theta, roundtrip_theta_gamma,
    theta,
};
use ggx::gpd::GroupGroupoid;
use ggx::grp::catalog::{base_groups, cyclic, inversion_action};
use ggx::grp::{derived_action, Group, GroupHom, SplitExtension};
use ggx::serial::{parse_file, parse_str, print, Structure};
use ggx::xmod::{XModGG, XModGroups};

/// Wall-clock budget for criterion 1.
const CATALOG_BUDGET: Duration = Duration::from_secs(1);
/// Per-instance budget for criterion 4.
const INSTANCE_BUDGET: Duration = Duration::from_secs(5);
/// Corpus bound: arrow groups of order at most 8 on each side, so `|G⋊H| <= 64`.
const CORPUS_BOUND: usize = 8;
/// Arrow-order bound for criterion 3.
const GG_BOUND: usize = 16;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    match failures.first() {
        None => Outcome {
            pass: true,
            detail: summary,
        },
        Some(first) => Outcome {
            pass: false,
            detail: format!("{} failure(s), first: {first}", failures.len()),
        },
    }
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn expectations() -> serde_json::Map<String, Value> {
    let text =
        std::fs::read_to_string(fixtures().join("expectations.json")).expect("expectations file");
    serde_json::from_str(&text).expect("expectations parse")
}

fn corpus() -> Vec<XModGG> {
    all_xmod_gg(CORPUS_BOUND)
        .expect("bound within limits")
        .collect()
}

/// 1. Catalog structures validate and single-entry perturbations fail with their tags.
fn catalog_soundness() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let catalog = ggx::catalog::all();
    for (name, s) in &catalog {
        if let Err(e) = s.validate() {
            failures.push(format!("{name}: {e}"));
        }
    }
    let mut perturbed = 0;
    for (file, want) in expectations() {
        let Some(axiom) = want.get("axiom").and_then(Value::as_str) else {
            continue;
        };
        perturbed += 1;
        let result = parse_file(&fixtures().join(&file))
            .map_err(|e| e.to_string())
            .and_then(|p| {
                p.build()
                    .and_then(|s| s.validate())
                    .map_err(|e| e.tag().to_string())
            });
        match result {
            Err(tag) if tag == axiom => {}
            other => failures.push(format!("{file}: expected {axiom}, got {other:?}")),
        }
    }
    let elapsed = start.elapsed();
    if elapsed >= CATALOG_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {CATALOG_BUDGET:?}"));
    }
    outcome(
        failures,
        format!("{} catalog structures valid, {perturbed} perturbations rejected, {elapsed:.2?} < {CATALOG_BUDGET:?}", catalog.len()),
    )
}

/// 2. The action read back from every semidirect product is the input action.
fn derived_actions() -> Outcome {
    let groups = base_groups(8);
    let mut failures = Vec::new();
    let mut checked = 0;
    for a in &groups {
        for b in &groups {
            for act in all_actions(b, a, 8).expect("catalog within bound") {
                checked += 1;
                match derived_action(&SplitExtension::semidirect(a, b, &act)) {
                    Ok(d) if d.perms() == act.perms() => {}
                    other => failures.push(format!("{} on {}: {other:?}", b.name(), a.name())),
                }
            }
        }
    }
    outcome(
        failures,
        format!("{checked} split extensions, exact equality"),
    )
}

/// `a` then `b` as `a - ε(d1 a) + b`, the second of the two expressions.
fn compose_oracle(g: &GroupGroupoid, a: usize, b: usize) -> usize {
    let x = &g.arrows;
    x.add(x.sub(a, g.eps.apply(g.d1.apply(a))), b)
}

fn composable(g: &GroupGroupoid) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in g.arrows.elements() {
        for b in g.arrows.elements() {
            if g.d1.apply(a) == g.d0.apply(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Composition coherence and interchange, checked independently of the
/// library's own validator.
fn gg_coherence(g: &GroupGroupoid) -> Result<usize, String> {
    g.validate().map_err(|e| e.to_string())?;
    g.check_interchange().map_err(|e| e.to_string())?;
    let x = &g.arrows;
    let pairs = composable(g);
    for &(a, b) in &pairs {
        let first = x.add(x.sub(b, g.eps.apply(g.d0.apply(b))), a);
        if first != compose_oracle(g, a, b) || g.compose(a, b) != Ok(first) {
            return Err(format!("expressions disagree at ({a}, {b})"));
        }
    }
    for &(a, b) in &pairs {
        for &(a1, b1) in &pairs {
            let lhs = x.add(compose_oracle(g, a, b), compose_oracle(g, a1, b1));
            let rhs = compose_oracle(g, x.add(a, a1), x.add(b, b1));
            if lhs != rhs {
                return Err(format!("interchange fails at ({a}, {b}), ({a1}, {b1})"));
            }
        }
    }
    Ok(pairs.len())
}

/// Group-groupoids of arrow order at most 16: every structure on catalog
/// groups, pair groupoids, and the semidirect products from the corpus.
fn gg_family(corpus: &[XModGG]) -> Vec<GroupGroupoid> {
    let groups = base_groups(8);
    let mut family = Vec::new();
    for g in &groups {
        for g0 in groups.iter().filter(|g0| g.order() % g0.order() == 0) {
            family.extend(all_gg_structures(g, g0, 8).expect("within bound"));
        }
    }
    for g in groups.iter().filter(|g| g.order() * g.order() <= GG_BOUND) {
        family.push(GroupGroupoid::pair(g));
    }
    for xm in corpus
        .iter()
        .filter(|xm| xm.g.arrows.order() * xm.h.arrows.order() <= GG_BOUND)
    {
        family.push(
            GroupGroupoid::semidirect(&xm.g, &xm.h, &xm.action).expect("valid corpus member"),
        );
    }
    family
}

/// 3. Composition coherence on group-groupoids.
fn composition_coherence(corpus: &[XModGG]) -> Outcome {
    let family = gg_family(corpus);
    let results: Vec<Result<usize, String>> = family.par_iter().map(gg_coherence).collect();
    let pairs: usize = results.iter().filter_map(|r| r.as_ref().ok()).sum();
    let failures = results.into_iter().filter_map(Result::err).collect();
    outcome(
        failures,
        format!(
            "{} group-groupoids, {pairs} composable pairs, exact",
            family.len()
        ),
    )
}

/// Horizontal/vertical interchange over every 2x2 grid where both sides are defined.
fn grid_interchange(d: &DoubleGroupGroupoid) -> Result<usize, String> {
    let s = d.s();
    let right_of =
        |x: usize| -> Vec<usize> { s.elements().filter(|&y| d.comp_h(x, y).is_ok()).collect() };
    let below =
        |x: usize| -> Vec<usize> { s.elements().filter(|&z| d.comp_v(x, z).is_ok()).collect() };
    let rights: Vec<Vec<usize>> = s.elements().map(right_of).collect();
    let belows: Vec<Vec<usize>> = s.elements().map(below).collect();
    let mut grids = 0;
    for x in s.elements() {
        for &y in &rights[x] {
            for &z in &belows[x] {
                for &w in &rights[z] {
                    if !belows[y].contains(&w) {
                        continue;
                    }
                    grids += 1;
                    let top = d.comp_h(x, y).unwrap();
                    let bottom = d.comp_h(z, w).unwrap();
                    let left = d.comp_v(x, z).unwrap();
                    let right = d.comp_v(y, w).unwrap();
                    let rows_first = d
                        .comp_v(top, bottom)
                        .map_err(|_| format!("rows not composable at {x},{y},{z},{w}"))?;
                    let cols_first = d
                        .comp_h(left, right)
                        .map_err(|_| format!("columns not composable at {x},{y},{z},{w}"))?;
                    if rows_first != cols_first {
                        return Err(format!("interchange fails at {x},{y},{z},{w}"));
                    }
                }
            }
        }
    }
    Ok(grids)
}

/// 4. Double interchange and kernel corollaries on every corpus image.
fn double_interchange(corpus: &[XModGG]) -> Outcome {
    let results: Vec<Result<(usize, Duration), String>> = corpus
        .par_iter()
        .map(|xm| {
            let start = Instant::now();
            let d = theta(xm).map_err(|e| e.to_string())?;
            d.validate().map_err(|e| e.to_string())?;
            for g in [&d.horizontal, &d.vertical] {
                gg_coherence(g)?;
            }
            let grids = grid_interchange(&d)?;
            d.check_kernel_identities().map_err(|e| e.to_string())?;
            xm.check_kernel_actions().map_err(|e| e.to_string())?;
            let elapsed = start.elapsed();
            if elapsed > INSTANCE_BUDGET {
                return Err(format!("instance took {elapsed:?}"));
            }
            Ok((grids, elapsed))
        })
        .collect();
    let grids: usize = results
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|r| r.0)
        .sum();
    let slowest = results
        .iter()
        .filter_map(|r| r.as_ref().ok())
        .map(|r| r.1)
        .max()
        .unwrap_or_default();
    let failures = results.into_iter().filter_map(Result::err).collect();
    outcome(
        failures,
        format!(
            "{} instances, {grids} grids, slowest {slowest:.2?} < {INSTANCE_BUDGET:?}",
            corpus.len()
        ),
    )
}

/// 5. θ/γ round trips.
fn theta_gamma(corpus: &[XModGG]) -> Outcome {
    let results: Vec<Result<(bool, bool), String>> = corpus
        .par_iter()
        .map(|xm| {
            let gt = roundtrip_gamma_theta(xm).map_err(|e| e.to_string())?;
            gt.verdict.clone().map_err(|e| format!("γθ: {e}"))?;
            let tg = roundtrip_theta_gamma(&theta(xm).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            tg.verdict.clone().map_err(|e| format!("θγ: {e}"))?;
            Ok((!gt.diagnostics.is_empty(), !tg.diagnostics.is_empty()))
        })
        .collect();
    let noted_gt = results
        .iter()
        .filter(|r| matches!(r, Ok((true, _))))
        .count();
    let noted_tg = results
        .iter()
        .filter(|r| matches!(r, Ok((_, true))))
        .count();
    let failures = results.into_iter().filter_map(Result::err).collect();
    outcome(
        failures,
        format!(
            "{} instances both ways; alternative formula needed for γθ on {noted_gt}, θγ on {noted_tg}",
            corpus.len()
        ),
    )
}

/// 6. δ lands in crossed squares; η/δ round trips on the corpus and Norrie squares.
fn delta_eta(corpus: &[XModGG]) -> Outcome {
    let mut failures: Vec<String> = corpus
        .par_iter()
        .filter_map(|xm| {
            let check = || -> Result<(), String> {
                let xs = delta(xm).map_err(|e| e.to_string())?;
                xs.validate().map_err(|e| format!("δ: {e}"))?;
                roundtrip_eta_delta(xm)
                    .map_err(|e| e.to_string())?
                    .verdict
                    .map_err(|e| format!("ηδ: {e}"))?;
                roundtrip_delta_eta(&xs)
                    .map_err(|e| e.to_string())?
                    .verdict
                    .map_err(|e| format!("δη: {e}"))?;
                Ok(())
            };
            check().err()
        })
        .collect();
    let mut norrie = 0;
    for (name, s) in ggx::catalog::all() {
        if let Structure::Xsq(xs) = s {
            norrie += 1;
            match roundtrip_delta_eta(&xs) {
                Ok(r) if r.is_isomorphism() => {}
                Ok(r) => failures.push(format!("{name}: {:?}", r.verdict)),
                Err(e) => failures.push(format!("{name}: {e}")),
            }
        }
    }
    outcome(
        failures,
        format!(
            "{} corpus instances, {norrie} catalog crossed squares",
            corpus.len()
        ),
    )
}

/// Tuples of four edges and a fill satisfying the boundary relation, by direct filtering.
fn square_oracle(xm: &XModGroups) -> usize {
    let (a, b) = (&xm.a, &xm.b);
    let mut count = 0;
    for fill in a.elements() {
        for left in b.elements() {
            for top in b.elements() {
                for bottom in b.elements() {
                    for right in b.elements() {
                        let rhs = b.add(b.add(b.add(b.neg(bottom), b.neg(left)), top), right);
                        if xm.boundary.apply(fill) == rhs {
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    count
}

fn boundary_holds(xm: &XModGroups, s: &Square) -> bool {
    let b = &xm.b;
    xm.boundary.apply(s.fill) == b.add(b.add(b.add(b.neg(s.bottom), b.neg(s.left)), s.top), s.right)
}

/// 7. Special double groupoid laws and square count.
fn special_double_groupoid() -> Outcome {
    let z2 = cyclic(2);
    let z3 = cyclic(3);
    let cases = [
        ("(Z2, Z2, id)", XModGroups::identity(&z2), 16),
        (
            "(Z3, Z2, 0, inversion)",
            XModGroups::zero_boundary(&z3, &z2, inversion_action(&z2, &z3)),
            24,
        ),
    ];
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for (name, xm, expected) in cases {
        let sdg = SpecialDoubleGroupoid::from_xmod(&xm);
        let oracle = square_oracle(&xm);
        if sdg.squares.len() != oracle || oracle != expected {
            failures.push(format!(
                "{name}: {} squares, oracle {oracle}",
                sdg.squares.len()
            ));
        }
        if let Err(e) = sdg.check_laws() {
            failures.push(format!("{name}: {e}"));
        }
        for x in &sdg.squares {
            for y in &sdg.squares {
                for composite in [sdg.comp_h(x, y), sdg.comp_v(x, y)].into_iter().flatten() {
                    if !boundary_holds(&xm, &composite) || !sdg.squares.contains(&composite) {
                        failures.push(format!(
                            "{name}: composite {composite:?} leaves the square set"
                        ));
                    }
                }
            }
        }
        counts.push(format!("{name}: {}", sdg.squares.len()));
    }
    outcome(failures, format!("squares {}", counts.join(", ")))
}

/// Every map table `a -> b` satisfying the hom law, by direct filtering.
fn hom_oracle(a: &Group, b: &Group) -> Vec<Vec<usize>> {
    let (n, m) = (a.order(), b.order());
    (0..m.pow(n as u32))
        .map(|code| {
            (0..n)
                .map(|i| (code / m.pow(i as u32)) % m)
                .collect::<Vec<_>>()
        })
        .filter(|f| {
            a.elements()
                .all(|x| a.elements().all(|y| f[a.add(x, y)] == b.add(f[x], f[y])))
        })
        .collect()
}

/// 8. Enumeration counts against direct oracles and the frozen regression file.
fn enumeration_counts() -> Outcome {
    let (z2, z3) = (cyclic(2), cyclic(3));
    let mut failures = Vec::new();
    let mut expect = |what: &str, got: usize, oracle: usize, pinned: usize| {
        if got != oracle || got != pinned {
            failures.push(format!(
                "{what}: got {got}, oracle {oracle}, expected {pinned}"
            ));
        }
    };
    expect(
        "homs(Z2, Z2)",
        all_homs(&z2, &z2, 8).unwrap().len(),
        hom_oracle(&z2, &z2).len(),
        2,
    );
    expect(
        "homs(Z3, Z2)",
        all_homs(&z3, &z2, 8).unwrap().len(),
        hom_oracle(&z3, &z2).len(),
        1,
    );
    // actions of Z2 on Z3 are homs Z2 -> Aut(Z3), and Aut(Z3) is the bijective part of homs(Z3, Z3)
    let aut_z3: Vec<Vec<usize>> = hom_oracle(&z3, &z3)
        .into_iter()
        .filter(|f| (0..3).all(|y| f.contains(&y)))
        .collect();
    let action_oracle = aut_z3
        .iter()
        .filter(|p| (0..3).all(|x| p[p[x]] == x))
        .count();
    expect(
        "actions(Z2 on Z3)",
        all_actions(&z2, &z3, 8).unwrap().len(),
        action_oracle,
        2,
    );
    let xmod_oracle = hom_oracle(&z2, &z2)
        .into_iter()
        .filter(|d| {
            let d = GroupHom::new(z2.clone(), z2.clone(), d.clone()).unwrap();
            XModGroups {
                a: z2.clone(),
                b: z2.clone(),
                boundary: d,
                action: ggx::grp::trivial_action(&z2, &z2),
            }
            .validate()
            .is_ok()
        })
        .count();
    expect(
        "xmod_groups(Z2, Z2)",
        all_xmod_groups(&z2, &z2, 8).unwrap().len(),
        xmod_oracle,
        2,
    );

    let frozen: Value =
        serde_json::from_str(&std::fs::read_to_string(fixtures().join("counts.json")).unwrap())
            .unwrap();
    let current = serde_json::to_value(counts(8).unwrap()).unwrap();
    if frozen != current {
        failures.push("counts differ from fixtures/counts.json".into());
    }
    let corpus = current["xmod_gg"]["8"].as_u64().unwrap_or(0);
    outcome(
        failures,
        format!("pinned counts match oracles; frozen counts stable (corpus at bound 8: {corpus})"),
    )
}

fn fixture_docs() -> Vec<PathBuf> {
    let mut out = Vec::new();
    for dir in [fixtures(), fixtures().join("perturbed")] {
        for entry in std::fs::read_dir(dir).unwrap() {
            let p = entry.unwrap().path();
            if p.extension().is_some_and(|e| e == "doc") {
                out.push(p);
            }
        }
    }
    out.sort();
    out
}

/// 9. Serialization loop, CLI exit codes and reproducible witnesses.
fn serialization_loop() -> Outcome {
    let mut failures = Vec::new();
    let docs = fixture_docs();
    for path in &docs {
        let first = match parse_file(path) {
            Ok(p) => print(&p),
            Err(e) => {
                failures.push(e.to_string());
                continue;
            }
        };
        match parse_str(&first, path.parent().unwrap()) {
            Ok(p) if print(&p) == first => {}
            other => failures.push(format!("{}: reprint differs: {other:?}", path.display())),
        }
    }
    let run = |file: &str| {
        Command::new(env!("CARGO_BIN_EXE_ggx"))
            .args(["verify", "--json", file])
            .current_dir(fixtures())
            .output()
            .expect("binary runs")
    };
    let expectations = expectations();
    for (file, want) in &expectations {
        let (a, b) = (run(file), run(file));
        if a.status.code().map(i64::from) != want["exit"].as_i64() {
            failures.push(format!(
                "{file}: exit {:?}, expected {}",
                a.status.code(),
                want["exit"]
            ));
        }
        if a.stdout != b.stdout {
            failures.push(format!("{file}: reports differ between runs"));
        }
    }
    outcome(
        failures,
        format!(
            "{} fixtures reprint identically, {} exit codes and reports reproduced",
            docs.len(),
            expectations.len()
        ),
    )
}

fn main() {
    let start = Instant::now();
    let corpus = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        ("axiom-suite soundness", Box::new(catalog_soundness)),
        ("derived-action correctness", Box::new(derived_actions)),
        (
            "group-groupoid composition coherence",
            Box::new(|| composition_coherence(&corpus)),
        ),
        (
            "double interchange and corollaries",
            Box::new(|| double_interchange(&corpus)),
        ),
        ("θ/γ round trips", Box::new(|| theta_gamma(&corpus))),
        (
            "δ/η round trips and crossed-square axioms",
            Box::new(|| delta_eta(&corpus)),
        ),
        ("special double groupoid", Box::new(special_double_groupoid)),
        ("enumeration regressions", Box::new(enumeration_counts)),
        ("serialization loop", Box::new(serialization_loop)),
    ];
    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "{} {}. {title}: {}",
            if o.pass { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{} of {} criteria passed in {:.1?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
