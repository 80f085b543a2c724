use std::path::Path;
use std::process::Command;

use jetlink_cli::{run, Outcome};
use tempfile::TempDir;

fn jetlink(args: &[&str]) -> Outcome {
    run(std::iter::once("jetlink").chain(args.iter().copied()))
}

fn value<'a>(out: &'a Outcome, key: &str) -> Option<&'a str> {
    out.stdout.lines().find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn eye_invariants() {
    let dir = TempDir::new().unwrap();
    let eye = path(&dir, "eye.front");
    assert_eq!(jetlink(&["gen", "eye", "-o", &eye]).code, 0);
    let text = std::fs::read_to_string(&eye).unwrap();
    assert_eq!(text, "front v1\nstrands 1\nevents\nL 2\nX 1\nX 1\nR 2\n");
    let out = jetlink(&["invariants", &eye]);
    assert_eq!(out.code, 0);
    assert_eq!(value(&out, "components"), Some("2"));
    assert_eq!(value(&out, "component.1.tb"), Some("-1"));
    assert_eq!(value(&out, "component.1.rot"), Some("0"));
    assert_eq!(value(&out, "component.1.winding"), Some("0"));
}

#[test]
fn tbmax_with_oracle() {
    let out = jetlink(&["tbmax", "-p", "2", "-q", "3", "-m", "1", "--oracle"]);
    assert_eq!(out.code, 0);
    assert_eq!(value(&out, "tb_max"), Some("4"));
    assert_eq!(value(&out, "oracle"), Some("4"));
    assert_eq!(value(&out, "match"), Some("true"));
    let neg = jetlink(&["tbmax", "-p", "3", "-q", "-2", "-m", "1"]);
    assert_eq!((value(&neg, "p"), value(&neg, "tb_max")), (Some("-3"), Some("-7")));
}

#[test]
fn helix_classification() {
    let zero = ["classify", "--helix", "--tb0", "0", "--rot0", "0", "--tb1", "0", "--rot1", "0"];
    let out = jetlink(&zero);
    assert_eq!(out.code, 3);
    assert!(out.stdout.contains("ExceptionalPair: 2 classes"));
    let mut ordered = zero.to_vec();
    ordered.extend(["--height", "first-below", "--vs-height", "first-above"]);
    let out = jetlink(&ordered);
    assert_eq!((out.code, value(&out, "verdict")), (0, Some("NotIsotopic")));
    let out = jetlink(&["classify", "--helix", "--tb0", "-2", "--rot0", "0", "--tb1", "-1", "--rot1", "-1"]);
    assert_eq!(value(&out, "normal_form"), Some("[1,1,0,1]"));
    let out = jetlink(&["classify", "--helix", "--tb0", "-1", "--rot0", "2", "--tb1", "0", "--rot1", "0"]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr.lines().count(), 1);
}

#[test]
fn cable_classification() {
    let base = ["classify", "--cable", "-p", "2", "-q", "3", "-m", "1", "--rot0", "1", "--tb1", "2", "--rot1", "2"];
    let out = jetlink(&base);
    assert_eq!((out.code, value(&out, "verdict")), (0, Some("Isotopic")));
    assert_eq!(value(&out, "realizable"), Some("yes"));
    let mut other = base.to_vec();
    other.extend(["--vs-rot1", "0"]);
    assert_eq!(value(&jetlink(&other), "verdict"), Some("NotIsotopic"));
    let out = jetlink(&["classify", "--cable", "-p", "-3", "-q", "2", "-m", "1", "--rot0", "1", "--tb1", "-8", "--rot1", "7"]);
    assert_eq!((out.code, value(&out, "verdict")), (3, Some("UnknownCase4Rot")));
}

#[test]
fn enumerate_and_translate() {
    let out = jetlink(&["--json", "enumerate", "-p", "2", "-q", "3", "-m", "0", "--floor", "2"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["pairs"], serde_json::json!([[4, 0], [3, 1], [3, -1], [2, 2], [2, 0], [2, -2]]));
    assert_eq!(jetlink(&["enumerate", "-p", "-3", "-q", "2", "-m", "1", "--floor", "-9"]).code, 3);
    let out = jetlink(&["translate", "-p", "2", "-q", "3", "--tb", "4", "-m", "2"]);
    assert_eq!(
        [value(&out, "s3_p"), value(&out, "s3_q"), value(&out, "s3_tb"), value(&out, "s3_m")],
        [Some("-3"), Some("1"), Some("-5"), Some("3")]
    );
    let out = jetlink(&["translate", "-p", "2", "-q", "5"]);
    assert_eq!(value(&out, "noimage_gap"), Some("2"));
}

#[test]
fn parse_errors_are_located() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.front", "front v1\nstrands -1\nevents\n");
    let out = jetlink(&["validate", &bad]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column 9"), "{}", out.stderr);
    let broken = write(&dir, "broken.front", "front v1\nstrands 1\nevents\nX 1\n");
    let out = jetlink(&["invariants", &broken]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr.lines().count(), 1);
    assert_eq!(jetlink(&["invariants", &path(&dir, "missing.front")]).code, 1);
    assert_eq!(jetlink(&["tbmax", "-p", "2"]).code, 1);
}

#[test]
fn search_outcomes_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let flat = path(&dir, "flat.front");
    jetlink(&["gen", "lambda", "2", "-o", &flat]);
    let swapped = write(&dir, "swapped.front", "front v1\nstrands 2\nevents\nlabel 0 1\nlabel 1 0\n");
    let out = jetlink(&["search-isotopy", &flat, &swapped, "--depth", "6"]);
    assert_eq!((out.code, value(&out, "result")), (2, Some("not-found")));

    let a = path(&dir, "a.front");
    let b = path(&dir, "b.front");
    jetlink(&["stabilize", &flat, "--component", "1", "--sign", "+", "-o", &a]);
    jetlink(&["stabilize", &swapped, "--component", "0", "--sign", "+", "-o", &b]);
    let dump = path(&dir, "steps");
    let out = jetlink(&["search-isotopy", &a, &b, "--dump-dir", &dump]);
    assert_eq!((out.code, value(&out, "result")), (0, Some("found")));
    let dumped: usize = value(&out, "dumped").unwrap().parse().unwrap();
    assert_eq!(std::fs::read_dir(&dump).unwrap().count(), dumped);

    let c = path(&dir, "c.front");
    jetlink(&["stabilize", &flat, "--component", "1", "--sign", "-", "-o", &c]);
    let out = jetlink(&["search-isotopy", &a, &c]);
    assert_eq!((out.code, value(&out, "result")), (0, Some("not-isotopic")));
}

#[test]
fn render_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let braid = path(&dir, "braid.front");
    jetlink(&["gen", "braid", "2", "3", "-o", &braid]);
    let (s1, s2) = (path(&dir, "1.svg"), path(&dir, "2.svg"));
    assert_eq!(jetlink(&["render", &braid, "-o", &s1]).code, 0);
    assert_eq!(jetlink(&["render", &braid, "-o", &s2]).code, 0);
    let svg = std::fs::read(&s1).unwrap();
    assert_eq!(svg, std::fs::read(&s2).unwrap());
    assert!(String::from_utf8(svg).unwrap().starts_with("<svg"));
}

#[test]
fn generated_files_parse_back() {
    let dir = TempDir::new().unwrap();
    for family in [vec!["lambda", "3"], vec!["eye"], vec!["braid", "3", "2"], vec!["cable", "2", "3"]] {
        let f = path(&dir, "g.front");
        let mut args = vec!["gen"];
        args.extend(family.iter().copied());
        args.extend(["-o", f.as_str()]);
        assert_eq!(jetlink(&args).code, 0, "{family:?}");
        assert_eq!(jetlink(&["validate", &f]).code, 0, "{family:?}");
    }
}

#[test]
fn binary_reports_json_and_exit_codes() {
    let exe = Path::new(env!("CARGO_BIN_EXE_jetlink"));
    let out = Command::new(exe)
        .args(["--json", "classify", "--helix", "--tb0", "0", "--rot0", "0", "--tb1", "0", "--rot1", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "ExceptionalPair");
    assert_eq!(v["classes"], 2);
    let out = Command::new(exe).args(["tbmax", "-p", "2", "-q", "4", "-m", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
}
