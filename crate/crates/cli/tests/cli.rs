//! Script parsing, the binary's exit codes, and the checked-in fixtures.

use std::path::{Path, PathBuf};
use std::process::{Command as Process, Output};

use primdec_cli::{parse, run_file, validate_file};
use primdec_core::polyring::Submodule;
use primdec_core::primdec::PrimdecConfig;
use primdec_core::verify::{corpus_ring, random_ideal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn primdec(args: &[&str]) -> Output {
    Process::new(env!("CARGO_BIN_EXE_primdec"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("primdec-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn parse_err(source: &str) -> (usize, usize, String) {
    let e = parse(source).unwrap_err();
    (e.line, e.column, e.message)
}

#[test]
fn ideal_needs_a_ring() {
    let (line, col, msg) = parse_err("ideal I = x;");
    assert_eq!((line, col), (1, 7));
    assert!(msg.contains("no active ring"), "{msg}");
}

#[test]
fn positive_characteristic_rejected() {
    let (_, _, msg) = parse_err("ring r = 7, (x), dp;");
    assert!(msg.contains("characteristic 0"), "{msg}");
}

#[test]
fn unknown_identifier() {
    let (line, _, msg) = parse_err("ring r = 0, (x), dp;\nprimdec J;");
    assert_eq!(line, 2);
    assert!(msg.contains("unknown identifier 'J'"), "{msg}");
}

#[test]
fn juxtaposed_exponent_is_not_a_power() {
    assert!(parse("ring r = 0, (x,y), dp; ideal I = x2y;").is_err());
    assert!(parse("ring r = 0, (x,y), dp; ideal I = x^2*y;").is_ok());
}

#[test]
fn orderings() {
    assert!(parse("ring r = 0, (x,y,z), wp(1,2,3); ideal I = x*y;").is_ok());
    assert!(parse("ring r = 0, (x,y), lp; ideal I = x*y;").is_ok());
    assert!(parse("ring r = 0, (x,y,z), wp(1,2); ideal I = x;").is_err());
    assert!(parse("ring r = 0, (x,y), wp(0,1); ideal I = x;").is_err());
    assert!(parse("ring r = 0, (x,y), ds; ideal I = x;").is_err());
}

#[test]
fn module_rank_must_agree() {
    assert!(parse("ring r = 0, (x,y), dp; module M = [x,y], [x];").is_err());
    let s = parse("ring r = 0, (x,y), dp; module M = [x,y], [y,0]; primdec M;").unwrap();
    assert_eq!(s.commands().next().unwrap().value.rank(), 2);
}

#[test]
fn identifiers_belong_to_their_ring() {
    let src = "ring a = 0, (x,y), dp; ideal I = x;\nring b = 0, (x,y), dp; primdec I;";
    let (line, _, msg) = parse_err(src);
    assert_eq!(line, 2);
    assert!(msg.contains("belongs to ring 'a'"), "{msg}");
    let back = "ring a = 0, (x), dp; ideal I = x; ring b = 0, (y), dp; ring a = 0, (x), dp;";
    assert!(parse(back).is_ok());
}

fn reparse(m: &Submodule) -> Submodule {
    let names = m.ring().names().join(",");
    let s = parse(&format!("ring r = 0, ({names}), dp; ideal I = {m}; primdec I;")).unwrap();
    let value = s.commands().next().unwrap().value.clone();
    value
}

#[test]
fn printed_polynomials_parse_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for k in 0..200 {
        let ring = corpus_ring(2 + k % 3);
        let m = random_ideal(&mut rng, &ring, 3, 4);
        let back = reparse(&m);
        assert_eq!(back.gens(), m.gens(), "instance {k}: <{m}>");
    }
}

#[test]
fn fixtures_validate() {
    let dir = fixtures();
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("pd") {
            continue;
        }
        let expected = path.with_extension("json");
        let o = validate_file(&path, &expected, PrimdecConfig::default());
        assert_eq!(o.code, 0, "{}: {}{}", path.display(), o.stdout, o.stderr);
        seen += 1;
    }
    assert!(seen >= 5);
}

#[test]
fn json_output_is_stable() {
    let path = fixtures().join("monomial_three.pd");
    let a = run_file(&path, true, PrimdecConfig::default());
    let b = run_file(&path, true, PrimdecConfig::default());
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    let text = std::fs::read_to_string(fixtures().join("monomial_three.json")).unwrap();
    assert_eq!(a.stdout, text);
}

#[test]
fn exit_success() {
    let o = primdec(&["run", "worked_example.pd"]);
    assert_eq!(o.status.code(), Some(0));
    let out = String::from_utf8(o.stdout).unwrap();
    assert!(out.contains("validation: pass"), "{out}");
    let o = primdec(&["validate", "worked_example.pd", "worked_example.json"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_usage() {
    let dir = scratch("usage");
    let bad = dir.join("bad.pd");
    std::fs::write(&bad, "ring r = 7, (x), dp;\n").unwrap();
    let o = primdec(&["run", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.pd:1:10: only characteristic 0"));
    assert_eq!(primdec(&["run", "missing.pd"]).status.code(), Some(1));
    assert_eq!(primdec(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(primdec(&["run", "--bound", "0", "worked_example.pd"]).status.code(), Some(1));
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn exit_compute_failure() {
    // the embedded component of <x^2,xy> needs the square of its prime
    let o = primdec(&["run", "--bound", "1", "worked_example.pd"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("line 4: primdec I:"));
}

fn tampered(dir: &Path) -> PathBuf {
    let text = std::fs::read_to_string(fixtures().join("worked_example.json")).unwrap();
    let changed = text.replacen("\"codim\": 2", "\"codim\": 1", 1);
    assert_ne!(text, changed);
    let path = dir.join("tampered.json");
    std::fs::write(&path, changed).unwrap();
    path
}

#[test]
fn exit_mismatch() {
    let dir = scratch("mismatch");
    let expected = tampered(&dir);
    let o = primdec(&["validate", "worked_example.pd", expected.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stdout).contains("codim 2, expected 1"));

    let script = dir.join("check.pd");
    let body = std::fs::read_to_string(fixtures().join("worked_example.pd")).unwrap();
    std::fs::write(&script, body.replace("primdec I;", "validate I, tampered.json;")).unwrap();
    let o = primdec(&["run", script.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let _ = std::fs::remove_dir_all(dir);
}
