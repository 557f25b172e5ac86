use std::io::Write;
use std::path::PathBuf;
use std::process::Command;

fn symb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symb")).args(args).output().expect("run symb");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn defs(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn fermat_square_is_unequal() {
    let (code, out, _) = symb(&["powers-equal", "--ideal", &data("fermat3.id"), "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("UNEQUAL, witness degree "), "{out}");
}

#[test]
fn grid_classification() {
    let (code, out, _) = symb(&["classify", "--config", &data("grid_2x2.p1p1"), "--max-m", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("CI verdict"), "{out}");
    assert!(out.contains("all equal"), "{out}");
}

#[test]
fn classify_json_layout() {
    let (code, out, _) = symb(&["classify", "--ideal", &data("fermat3.id"), "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["mu"], 3);
    assert_eq!(v["verdicts"][1]["m"], 2);
    assert_eq!(v["verdicts"][1]["equal"], false);
    assert!(v["witness"].is_string());
    assert!(v["hypotheses"]["failures"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["resolve", "--ideal", &data("fermat3.id")];
    assert_eq!(symb(&args), symb(&args));
}

#[test]
fn exit_codes() {
    // Input error: unknown variable.
    let bad = defs("ring R = QQ[x,y]\nideal I = z\n");
    let (code, _, err) = symb(&["gb", "--ideal", bad.path().to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
    // Refusal: no symbolic-power route without tags or components.
    let untagged = defs("ring R = QQ[x,y,z]\nideal I = x*y, y*z, x*z\n");
    let (code, _, _) = symb(&["powers-equal", "--ideal", untagged.path().to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 1);
    // Refusal: the strand complex hypotheses fail for a codimension-3 ideal.
    let codim3 = defs("ring R = QQ[x,y,z,w]\nideal I = x, y, z\nassert I = lci, unmixed\n");
    let (code, _, err) = symb(&["power-complex", "--ideal", codim3.path().to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 1, "{err}");
    // Unknown repro target is an input error.
    assert_eq!(symb(&["repro", "no-such-example"]).0, 2);
}

#[test]
fn ideal_operations() {
    let f = defs("ring R = QQ[x0,x1,x2,x3]\nideal A = x0, x1\nideal B = x2, x3\n");
    let p = f.path().to_str().unwrap();
    let (_, prod, _) = symb(&["ideal", "product", "--ideal", p, "--name", "A", "--with", "B"]);
    assert_eq!(prod.lines().count(), 4);
    let (_, inter, _) = symb(&["ideal", "intersect", "--ideal", p, "--name", "A", "--with", "B", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&inter).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 4);
    let (code, _, _) = symb(&["ideal", "sum", "--ideal", p, "--name", "A"]);
    assert_eq!(code, 2);
    let (_, nf, _) = symb(&["nf", "--ideal", p, "--name", "A", "--poly", "x0*x2 + x3^2"]);
    assert_eq!(nf.trim(), "x3^2");
}

#[test]
fn lines_and_points_records() {
    let f = defs("ring P = QQ[x0,x1,x2,x3]\nline L = x0, x1\nline L = x2, x3\n");
    let (code, out, _) = symb(&["powers-equal", "--ideal", f.path().to_str().unwrap(), "--m", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("EQUAL (routes: components, saturation)"), "{out}");
    let g = defs("ring R = QQ[x,y,z]\npoint X = [1:0:0] mult 2\npoint X = [0:1:0]\n");
    let (code, out, _) = symb(&["hilbert", "--ideal", g.path().to_str().unwrap(), "--upto", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("[1, 3, 4, 4, 4]"), "{out}");
}

#[test]
fn strand_complex_command() {
    let f = defs("ring R = QQ[x,y,z]\nideal I = x, y\nassert I = lci, unmixed\n");
    let (code, out, _) = symb(&["power-complex", "--ideal", f.path().to_str().unwrap(), "--m", "3", "--verify"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify: ok"), "{out}");
    assert!(out.contains("Tot:  1  4  3"), "{out}");
}

#[test]
fn p1p1_twists_and_repro() {
    let (code, out, _) = symb(&["p1p1", "--twists", "2,1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("[matches]").count(), 3);
    let (code, out, _) = symb(&["repro", "triple-points-2-1"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("PASS"), "{out}");
    let (code, out, _) = symb(&["repro", "skew-lines", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
}

#[test]
fn example_34_repro() {
    let (code, out, _) = symb(&["repro", "example-3.4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("Tot:  1  4  5  2"), "{out}");
    assert!(out.contains("Tot:   1  10  17   9   1"), "{out}");
    assert!(out.trim_end().ends_with("PASS"));
}
