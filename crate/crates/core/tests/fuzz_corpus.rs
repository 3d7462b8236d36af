//! Replays the fuzz corpus through the fuzz targets' round-trip checks, so
//! the seeds stay meaningful on a stable toolchain.

use std::fs;
use std::path::PathBuf;

use overpoly::enumerator::{Overpartition, PartConfig};
use overpoly::polyring::{format_rational, parse_poly, parse_rational, MultiPoly};

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<Vec<u8>> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| fs::read(e.unwrap().path()).unwrap())
        .collect();
    assert!(!out.is_empty(), "no seeds for {target}");
    out.sort();
    out
}

#[test]
fn multipoly_json() {
    let mut accepted = 0;
    for s in seeds("multipoly_json") {
        if let Ok(p) = MultiPoly::from_json(std::str::from_utf8(&s).unwrap()) {
            assert_eq!(MultiPoly::from_json(&p.to_json()).unwrap(), p);
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}

#[test]
fn poly_text() {
    let names = ["x", "y1", "y2", "y3"];
    let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    for s in seeds("poly_text") {
        let p = parse_poly(std::str::from_utf8(&s).unwrap(), &names).unwrap();
        let shown = p.display_with(&owned).to_string();
        assert_eq!(parse_poly(&shown, &names).unwrap(), p);
    }
}

#[test]
fn rational() {
    for s in seeds("rational") {
        if let Ok(r) = parse_rational(std::str::from_utf8(&s).unwrap()) {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}

#[test]
fn overpartition() {
    let mut accepted = 0;
    for s in seeds("overpartition") {
        let (&sel, rest) = s.split_first().unwrap();
        let cfg = PartConfig::new(2 + (sel % 4) as u32, 1 + (sel / 4 % 4) as u32).unwrap();
        if let Ok(p) = Overpartition::parse(std::str::from_utf8(rest).unwrap(), &cfg) {
            for compact in [false, true] {
                assert_eq!(
                    Overpartition::parse(&p.render(&cfg, compact), &cfg).unwrap(),
                    p
                );
            }
            accepted += 1;
        }
    }
    assert!(accepted > 0);
}
