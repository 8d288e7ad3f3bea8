use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tamelie::catalog::{catalog_get, j_ab, j_t};
use tamelie::io::{parse_lie, write_matrix};
use tamelie::scalar::{int, ratio};
use tamelie::tameness::{Classification, ConeVerdict};
use tamelie::AlmostComplexStructure;

const J0: &str = "0 -1 0 0\n1 0 0 0\n0 0 0 -1\n0 0 1 0\n";

fn tamelie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tamelie"))
        .args(args)
        .output()
        .expect("run tamelie")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn write_j(dir: &Path, name: &str, j: &AlmostComplexStructure) -> PathBuf {
    write(dir, name, &write_matrix(j.matrix()))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_nil3() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "nil3.lie", "# nil3 x R\ndim 4\n1 3 2 1\n");
    let o = tamelie(&["validate", s(&f), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["unimodular"], true);
    assert_eq!(v["betti"][2], 4);
}

#[test]
fn validate_abelian() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "r4.lie", "dim 4\n");
    let o = tamelie(&["validate", s(&f)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for (k, b) in [1, 4, 6, 4, 1].iter().enumerate() {
        assert!(text.contains(&format!("b{k}          {b}")), "{text}");
    }
}

#[test]
fn validate_reports_parse_line() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.lie", "dim 4\n# comment\n1 2 x 3\n");
    let o = tamelie(&["validate", s(&f)]);
    assert_eq!(o.status.code(), Some(11));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn validate_reports_jacobi_triple() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.lie", "dim 3\n1 2 3 1\n1 3 3 1\n2 3 1 1\n");
    let o = tamelie(&["validate", s(&f)]);
    assert_eq!(o.status.code(), Some(12));
    assert!(stderr(&o).contains("Jacobi identity fails at"), "{}", stderr(&o));
}

#[test]
fn classify_j0_is_tamed() {
    let dir = tempfile::tempdir().unwrap();
    let j = write(dir.path(), "j.txt", J0);
    let o = tamelie(&["classify", "nil3xR", s(&j)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("compatible form  f^{12} + f^{34}"), "{}", stdout(&o));

    let o = tamelie(&["classify", "nil3xR", s(&j), "--format", "json"]);
    let c: Classification = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(c.tamed && c.almost_kahler);
}

#[test]
fn classify_j11_is_not_tamed() {
    let dir = tempfile::tempdir().unwrap();
    let j = write_j(dir.path(), "j.txt", &j_ab(&int(1), &int(1)).unwrap());
    let alg = write(dir.path(), "nil3.lie", "dim 4\n1 3 2 1\n");

    let o = tamelie(&["classify", s(&alg), s(&j)]);
    assert_eq!(o.status.code(), Some(12));
    assert!(stderr(&o).contains("--zeta -1"), "{}", stderr(&o));

    let o = tamelie(&["--zeta", "-1", "classify", s(&alg), s(&j)]);
    assert_eq!(o.status.code(), Some(10), "{}", stderr(&o));
    assert!(stdout(&o).contains("obstruction v"));

    let o = tamelie(&["classify", s(&alg), s(&j), "--zeta", "-1", "--format", "json"]);
    let c: Classification = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!c.tamed);
}

#[test]
fn classify_nil4_half_is_not_tamed() {
    let dir = tempfile::tempdir().unwrap();
    let j = write_j(dir.path(), "j.txt", &j_t(&ratio(1, 2)).unwrap());
    let o = tamelie(&["classify", "nil4", s(&j)]);
    assert_eq!(o.status.code(), Some(10), "{}", stderr(&o));
}

#[test]
fn classify_rejects_non_unimodular() {
    let dir = tempfile::tempdir().unwrap();
    let alg = write(dir.path(), "r2.lie", "dim 4\n1 2 2 1\n");
    let j = write(dir.path(), "j.txt", J0);
    let o = tamelie(&["classify", s(&alg), s(&j)]);
    assert_eq!(o.status.code(), Some(12));
    assert!(stderr(&o).contains("not unimodular"));
}

#[test]
fn cone_queries() {
    let dir = tempfile::tempdir().unwrap();
    let j = write(dir.path(), "j.txt", J0);
    for (class, inside) in [("1,1,0", true), ("1,1,1", false), ("2,3,2", true)] {
        let o = tamelie(&["cone", "nil3xR", s(&j), "--class", class, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v: ConeVerdict = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v.in_compatible_cone, inside, "{class}");
        assert_eq!(v.plus_basis.len(), 3);
    }
    let o = tamelie(&["cone", "nil3xR", s(&j), "--class", "1,x,0"]);
    assert_eq!(o.status.code(), Some(11));
    let o = tamelie(&["cone", "nil3xR", s(&j), "--class", "1,1"]);
    assert_eq!(o.status.code(), Some(12));
}

#[test]
fn cone_requires_tamed() {
    let dir = tempfile::tempdir().unwrap();
    let j = write_j(dir.path(), "j.txt", &j_t(&ratio(1, 2)).unwrap());
    let o = tamelie(&["cone", "nil4", s(&j), "--class", "1,0"]);
    assert_eq!(o.status.code(), Some(12));
}

#[test]
fn catalog_list_and_export() {
    let o = tamelie(&["catalog", "--list", "--format", "json"]);
    let names: Vec<String> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(names.len(), 5);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nil4.lie");
    let o = tamelie(&["catalog", "--export", "nil4", s(&path)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(parse_lie(&text).unwrap(), catalog_get("nil4").unwrap().algebra);

    let o = tamelie(&["catalog", "--show", "nil3xR"]);
    assert!(stdout(&o).contains("J_0:"));
    let o = tamelie(&["catalog", "--show", "nope"]);
    assert_eq!(o.status.code(), Some(11));
}

#[test]
fn usage_errors() {
    assert_eq!(tamelie(&[]).status.code(), Some(11));
    assert_eq!(tamelie(&["catalog"]).status.code(), Some(11));
    assert_eq!(tamelie(&["--zeta", "2", "catalog", "--list"]).status.code(), Some(11));
    assert_eq!(tamelie(&["validate", "/nonexistent/x.lie"]).status.code(), Some(11));
    assert_eq!(tamelie(&["--help"]).status.code(), Some(0));
}

#[test]
fn selftest_passes_with_default_seed() {
    let o = tamelie(&["selftest"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
}
