use std::path::{Path, PathBuf};

use ggx::serial::{parse_file, parse_str, print};

fn fixture_docs() -> Vec<PathBuf> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut out = Vec::new();
    for dir in [root.clone(), root.join("perturbed")] {
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

#[test]
fn print_parse_print_is_stable() {
    let docs = fixture_docs();
    assert!(docs.len() >= 12);
    for path in docs {
        let first = print(&parse_file(&path).unwrap());
        let second = print(&parse_str(&first, path.parent().unwrap()).unwrap());
        assert_eq!(first, second, "{}", path.display());
    }
}

#[test]
fn fixtures_without_references_are_canonical() {
    for path in fixture_docs() {
        let text = std::fs::read_to_string(&path).unwrap();
        let refs = path.file_name().unwrap() == "z2-identity-hom.doc";
        let canonical = print(&parse_file(&path).unwrap());
        assert_eq!(text == canonical, !refs, "{}", path.display());
    }
}

#[test]
fn catalog_full_loop() {
    for (name, s) in ggx::catalog::all() {
        let text = s.to_document();
        let back = parse_str(&text, Path::new(".")).unwrap().build().unwrap();
        assert_eq!(back, s, "{name}");
        assert_eq!(back.validate(), s.validate(), "{name}");
        assert_eq!(back.to_document(), text, "{name}");
    }
}
