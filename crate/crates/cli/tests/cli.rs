use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use d2lie::construct::{catalog, catalog_names};
use d2lie::io::{parse_algebra, serialize_algebra};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_d2lie"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn d2lie")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn d2lie");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str, text: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path
}

fn catalog_file(name: &str) -> PathBuf {
    let file = format!("{}.lie", name.replace(['(', ')'], "_"));
    scratch(&file, &serialize_algebra(&catalog(name).unwrap()))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn validate_accepts_catalog_entries() {
    let o = run(&["validate", p(&catalog_file("L4_paper"))]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o), "L4_paper: valid\n");
}

#[test]
fn validate_reports_axiom_lines() {
    let text = "basis: A B C\nbracket A B = A\nbracket B C = B\n";
    let o = run(&["validate", p(&scratch("bad_jacobi.lie", text))]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("jacobi"), "{}", stdout(&o));
    assert!(stdout(&o).contains("line"), "{}", stdout(&o));
}

#[test]
fn eps_violations_exit_one() {
    // eps X = Y with [X, Y] = Y breaks [eps X, X] = eps [X, X]
    let text = "basis: X Y\nbracket X Y = Y\neps X = Y\n";
    let o = run(&["validate", p(&scratch("bad_eps.lie", text))]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
}

#[test]
fn parse_errors_exit_two() {
    for (file, text) in [
        ("no_basis.lie", "bracket A B = A\n"),
        ("bad_rhs.lie", "basis: A B\nbracket A B = 2*Q\n"),
        ("bad_order.lie", "basis: A B\nbracket B A = A\n"),
        ("bad_p.lie", "basis: A\np = 1\n"),
    ] {
        let o = run(&["validate", p(&scratch(file, text))]);
        assert_eq!(code(&o), 2, "{file}: {}", stderr(&o));
        assert!(stderr(&o).contains("line"), "{file}: {}", stderr(&o));
    }
    let o = run(&["validate", "/nonexistent/file.lie"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["report", "x.lie", "--format", "xml"])), 2);
}

#[test]
fn preconditions_exit_three() {
    let o = run(&["dualize", p(&catalog_file("L4_paper"))]);
    assert_eq!(code(&o), 3, "{}", stderr(&o));
    let o = run(&["dualize", "--p", "1", p(&catalog_file("sl2R"))]);
    assert_eq!(code(&o), 3);
    let o = run(&["min-abelian-ideal", p(&catalog_file("sl2R"))]);
    assert_eq!(code(&o), 3);
    let o = run(&["catalog", "show", "nope"]);
    assert_eq!(code(&o), 3);
    let o = run(&["catalog", "show", "glnD2(9)"]);
    assert_eq!(code(&o), 3);
}

#[test]
fn dualize_matches_catalog() {
    let o = run(&["dualize", p(&catalog_file("sl2R"))]);
    assert_eq!(code(&o), 0);
    let d = parse_algebra(&stdout(&o)).unwrap();
    assert_eq!(d, catalog("sl2R_dual").unwrap());

    let o = run(&["dualize", "--p", "3", p(&catalog_file("heis3"))]);
    assert_eq!(code(&o), 0);
    let d = parse_algebra(&stdout(&o)).unwrap();
    assert_eq!((d.dim(), d.nilpotency_index()), (9, 3));
    assert!(stdout(&o).contains("p = 3"));
}

#[test]
fn dualize_writes_output_file() {
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli").join("aff1_dual.lie");
    let o = run(&["dualize", p(&catalog_file("aff1")), "-o", p(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "");
    let d = parse_algebra(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(d.name(), "aff1_dual");
}

#[test]
fn stdin_input() {
    let text = serialize_algebra(&catalog("heis3").unwrap());
    let o = run_stdin(&["validate", "-"], &text);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "heis3: valid\n");
}

#[test]
fn catalog_list_and_show() {
    let o = run(&["catalog", "list"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    for name in catalog_names() {
        assert!(out.contains(&name), "{name}");
    }
    let o = run(&["catalog", "show", "TnD2(2)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(parse_algebra(&stdout(&o)).unwrap(), catalog("TnD2(2)").unwrap());
}

#[test]
fn check_exit_status_follows_violations() {
    let o = run(&["check", "--trials", "30", p(&catalog_file("abelian(2)"))]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("total violations: 0"));
    // U + eps U fails to be a subalgebra for U = span(E, F)
    let o = run(&["check", "--trials", "30", p(&catalog_file("sl2R_dual"))]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("saturation-subalgebra    FAILED"));
}

#[test]
fn check_is_seed_deterministic() {
    let f = catalog_file("e2_dual");
    let a = stdout(&run(&["check", "--trials", "10", "--seed", "3", p(&f)]));
    let b = stdout(&run(&["check", "--trials", "10", "--seed", "3", p(&f)]));
    let c = stdout(&run(&["check", "--trials", "10", "--seed", "4", p(&f)]));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn report_trees_match_goldens() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for name in catalog_names() {
        let file = name.replace(['(', ')'], "_");
        let expected = fs::read_to_string(golden.join(format!("{file}.tree"))).unwrap();
        let o = run(&["report", "--format", "tree", "--seed", "0", p(&catalog_file(&name))]);
        assert_eq!(code(&o), 0, "{name}");
        assert_eq!(stdout(&o), expected, "{name}");
    }
}

#[test]
fn report_text_of_an_invalid_algebra() {
    let text = "basis: A B C\nbracket A B = A\nbracket B C = B\n";
    let o = run(&["report", p(&scratch("bad_report.lie", text))]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("algebra\n"));
    assert!(!stdout(&o).contains("fingerprint"));
}

#[test]
fn line_ideals_of_aff1() {
    let o = run(&["find-line-ideals", p(&catalog_file("aff1"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "line ideals:\n  Y  (weights 1 0)\nconclusive: true\n");
}

#[test]
fn minimal_ideal_of_l4() {
    let o = run(&["min-abelian-ideal", p(&catalog_file("L4_paper"))]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "dim: 1\nideal: span(eX)\nsearched: span(eX, eY)\n");
}

#[test]
fn engel_triangularizes() {
    let text = "rank: 2\nmatrix\n1 -1\n1 -1\nmatrix\n2e -2e\n2e -2e\n";
    let o = run(&["engel", p(&scratch("engel.txt", text))]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("# basis change g"));
    let body: String = out.lines().skip(1).map(|l| format!("{l}\n")).collect();
    let parsed = d2lie::io::MatrixFile::parse(&body).unwrap();
    assert_eq!(parsed.matrices.len(), 3);
    for m in &parsed.matrices[1..] {
        assert!(m.is_eps_triangular(), "{m}");
    }
}

#[test]
fn engel_failures() {
    let o = run(&["engel", p(&scratch("engel_id.txt", "rank: 1\nmatrix\n1\n"))]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).starts_with("not nilpotent"));
    let rotation = "rank: 2\nmatrix\n0 -1e\n1e 0\n";
    let o = run(&["engel", p(&scratch("engel_rot.txt", rotation))]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    let o = run(&["engel", p(&scratch("engel_bad.txt", "rank: 2\nmatrix\n1 2\n"))]);
    assert_eq!(code(&o), 2);
}
