//! Acceptance criteria 1-12, one PASS/FAIL line each. Exits nonzero when
//! any criterion fails.
//!
//! Derived facts are re-checked here with direct bracket and matrix
//! arithmetic rather than by trusting the library's own verdicts.

use std::fs;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use d2lie::calculus::{bracket_space, eps_image, eps_image_full, random_vector};
use d2lie::construct::{catalog, catalog_names, dualize};
use d2lie::io::{build_report, run_checks, serialize_algebra};
use d2lie::lie::{DualMatrix, LieAlgebra};
use d2lie::linalg::{is_zero_vector, rat, unit_vector, Rational, Subspace, Vector};
use d2lie::structure::{
    class_flags, engel_triangularize, eps_split_check, fingerprint, killing_form, levi_check,
    minimal_abelian_d2_ideal, nilradical, radical, random_engel_instance, triangularity,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn load(name: &str) -> Result<LieAlgebra, String> {
    catalog(name).map_err(|e| format!("{name}: {e}"))
}

fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

/// `[e_i, s] ⊆ s` for every basis element, computed bracket by bracket.
fn is_ideal(l: &LieAlgebra, s: &Subspace) -> bool {
    basis(l.dim()).iter().all(|e| {
        s.basis_vectors()
            .iter()
            .all(|v| s.contains(&l.bracket(e, v).expect("dims")))
    })
}

fn is_abelian(l: &LieAlgebra, s: &Subspace) -> bool {
    let vs = s.basis_vectors();
    vs.iter()
        .all(|a| vs.iter().all(|b| is_zero_vector(&l.bracket(a, b).expect("dims"))))
}

fn eps_invariant(l: &LieAlgebra, s: &Subspace) -> bool {
    s.basis_vectors().iter().all(|v| s.contains(&l.apply_eps(v)))
}

/// Derived series of a subalgebra reaches zero.
fn solvable_by_brackets(l: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    for _ in 0..=l.dim() {
        if cur.is_zero() {
            return true;
        }
        cur = bracket_space(l, &cur, &cur).expect("dims");
    }
    cur.is_zero()
}

fn nilpotent_by_brackets(l: &LieAlgebra, s: &Subspace) -> bool {
    let mut cur = s.clone();
    for _ in 0..=l.dim() {
        if cur.is_zero() {
            return true;
        }
        cur = bracket_space(l, s, &cur).expect("dims");
    }
    cur.is_zero()
}

fn tmp_dir() -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    fs::create_dir_all(&dir).expect("tmp dir");
    dir
}

fn algebra_file(name: &str) -> Result<PathBuf, String> {
    let path = tmp_dir().join(format!("{}.lie", name.replace(['(', ')'], "_")));
    fs::write(&path, serialize_algebra(&load(name)?)).map_err(|e| e.to_string())?;
    Ok(path)
}

fn cli(args: &[&str]) -> Result<(i32, String), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_d2lie"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    Ok((code, String::from_utf8_lossy(&out.stdout).into_owned()))
}

fn criterion_1() -> Outcome {
    let mut slowest = Duration::ZERO;
    for name in catalog_names() {
        let l = load(&name)?;
        let start = Instant::now();
        let report = l.validate();
        let took = start.elapsed();
        ensure(report.is_valid(), || format!("{name}: {}", report.lines().join("; ")))?;
        ensure(took < Duration::from_secs(1), || format!("{name}: validate took {took:?}"))?;
        slowest = slowest.max(took);
    }
    Ok(format!("{} entries, slowest {slowest:?}", catalog_names().len()))
}

fn criterion_2() -> Outcome {
    const SUITES: [&str; 4] = [
        "eps-image-abelian",
        "ideal-images",
        "saturation-subalgebra",
        "centralizer-normalizer",
    ];
    let mut failures = Vec::new();
    let mut tested = 0;
    for name in catalog_names() {
        let l = load(&name)?;
        let r = run_checks(&l, 200, 0).map_err(|e| format!("{name}: {e}"))?;
        for suite in SUITES {
            let s = r.suite(suite).ok_or_else(|| format!("missing suite {suite}"))?;
            tested += s.tested;
            if s.violations > 0 {
                failures.push(format!(
                    "{name}/{suite}: {} of {} ({})",
                    s.violations,
                    s.tested,
                    s.witness.as_deref().unwrap_or("")
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{tested} trials, zero violations"))
    } else {
        Err(format!("{} failing suites: {}", failures.len(), failures.join(" | ")))
    }
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for name in catalog_names() {
        let l = load(&name)?;
        if l.eps().is_zero() {
            continue;
        }
        count += 1;
        let degenerate = killing_form(&l).determinant().map_err(|e| e.to_string())? == rat(0);
        ensure(degenerate, || format!("{name}: Killing form nondegenerate"))?;
        ensure(!class_flags(&l).semisimple, || format!("{name}: reported semisimple"))?;
    }
    Ok(format!("{count} entries with eps != 0, none semisimple"))
}

fn criterion_4() -> Outcome {
    for name in catalog_names() {
        let l = load(&name)?;
        let r = radical(&l).map_err(|e| e.to_string())?;
        let n = nilradical(&l).map_err(|e| e.to_string())?;
        ensure(eps_invariant(&l, &r), || format!("{name}: radical not eps-invariant"))?;
        ensure(eps_invariant(&l, &n), || format!("{name}: nilradical not eps-invariant"))?;
        ensure(n.contains_subspace(&eps_image_full(&l)), || format!("{name}: Im eps outside nilradical"))?;
        ensure(is_ideal(&l, &r) && solvable_by_brackets(&l, &r), || {
            format!("{name}: radical is not a solvable ideal")
        })?;
        let q = l.quotient(&r).map_err(|e| e.to_string())?;
        let q_ss = q.dim() == 0 || killing_form(&q).determinant().map_err(|e| e.to_string())? != rat(0);
        ensure(q_ss, || format!("{name}: L / radical not semisimple"))?;
        ensure(is_ideal(&l, &n) && nilpotent_by_brackets(&l, &n), || {
            format!("{name}: nilradical is not a nilpotent ideal")
        })?;
    }
    Ok("radical and nilradical verified on every entry".into())
}

fn criterion_5() -> Outcome {
    let mut details = Vec::new();
    for name in ["sl2R_dual", "su2_dual", "e2_dual"] {
        let l = load(name)?;
        let half = l.dim() / 2;
        let s = Subspace::span(l.dim(), &basis(l.dim())[..half]).map_err(|e| e.to_string())?;
        let a = eps_image(&l, &s).map_err(|e| e.to_string())?;
        ensure(s.intersect(&a).map_err(|e| e.to_string())?.is_zero(), || {
            format!("{name}: eps S meets S")
        })?;
        ensure(is_abelian(&l, &a), || format!("{name}: eps S not abelian"))?;
        let s_hat = s.sum(&a).map_err(|e| e.to_string())?;
        ensure(s_hat.dim() == s.dim() + a.dim(), || format!("{name}: sum not direct"))?;
        let a_ideal = a.contains_subspace(&bracket_space(&l, &s_hat, &a).map_err(|e| e.to_string())?);
        ensure(a_ideal, || format!("{name}: eps S not an ideal of S^"))?;
        if class_flags(&l.restrict(&s).map_err(|e| e.to_string())?).semisimple {
            let rep = levi_check(&l, &s).map_err(|e| e.to_string())?;
            ensure(rep.passes() && rep.levi_decomposition == Some(true), || {
                format!("{name}: {rep:?}")
            })?;
            let r = radical(&l).map_err(|e| e.to_string())?;
            let direct = s.intersect(&r).map_err(|e| e.to_string())?.is_zero()
                && s.dim() + r.dim() == l.dim();
            ensure(direct, || format!("{name}: L != S + radical"))?;
            details.push(format!("{name}: L = S + R"));
        } else {
            let split = eps_split_check(&l, &s).map_err(|e| e.to_string())?;
            ensure(split.passes(), || format!("{name}: {split:?}"))?;
            details.push(format!("{name}: split only"));
        }
    }
    Ok(details.join(", "))
}

/// Independent check: `g⁻¹` from the realified inverse, `g⁻¹ g = 1`, and
/// every conjugate upper triangular with zero real diagonal.
fn triangular_by_entries(ms: &[DualMatrix], g: &DualMatrix) -> bool {
    let Some(ri) = g.realify().inverse() else {
        return false;
    };
    let Ok(gi) = DualMatrix::from_realified(&ri) else {
        return false;
    };
    let m = g.rank();
    if &gi * g != DualMatrix::identity(m) {
        return false;
    }
    let zero = rat(0);
    ms.iter().all(|x| {
        let c = &(&gi * x) * g;
        (0..m).all(|i| {
            (0..=i).all(|j| {
                let (a, b) = c.entry(i, j);
                *a == zero && (i == j || *b == zero)
            })
        })
    })
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let start = Instant::now();
    let mut matrices = 0;
    for k in 0..50 {
        let m = 2 + k % 3;
        let ms = random_engel_instance(&mut rng, m);
        let g = engel_triangularize(&ms, m).map_err(|e| format!("instance {k}: {e}"))?;
        ensure(triangular_by_entries(&ms, &g), || format!("instance {k}: conjugates not triangular"))?;
        matrices += ms.len();
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(10), || format!("took {took:?}"))?;
    Ok(format!("50 instances, {matrices} matrices, {took:?}"))
}

fn criterion_7() -> Outcome {
    let mut details = Vec::new();
    for (name, want) in [("e2_dual", 2), ("L4_paper", 1)] {
        let l = load(name)?;
        let m = minimal_abelian_d2_ideal(&l).map_err(|e| e.to_string())?;
        ensure(m.dim() == want, || format!("{name}: dim {} != {want}", m.dim()))?;
        ensure(eps_image_full(&l).contains_subspace(&m.space), || format!("{name}: outside Im eps"))?;
        ensure(is_ideal(&l, &m.space), || format!("{name}: not an ideal"))?;
        ensure(is_abelian(&l, &m.space), || format!("{name}: not abelian"))?;
        ensure(eps_invariant(&l, &m.space), || format!("{name}: not eps-invariant"))?;
        details.push(format!("{name} dim {want}"));
    }
    Ok(details.join(", "))
}

fn criterion_8() -> Outcome {
    let fp = |name: &str| -> Result<_, String> { fingerprint(&load(name)?).map_err(|e| e.to_string()) };
    let r = fp("abelian(1)")?;
    let d2 = fp("dual_numbers")?;
    ensure(r.essential_dim == 1 && d2.essential_dim == 1, || "d(R), d(D2) != 1".into())?;
    ensure(r != d2, || "R and D2 share a fingerprint".into())?;

    let nil = ["abelian(1)", "abelian(2)", "dual_numbers", "heis3", "dual_numbers_plus_R"];
    let mut fps = Vec::new();
    for name in nil {
        let l = load(name)?;
        ensure(nilpotent_by_brackets(&l, &Subspace::full(l.dim())), || format!("{name} not nilpotent"))?;
        fps.push((name, fingerprint(&l).map_err(|e| e.to_string())?));
    }
    for i in 0..fps.len() {
        for j in i + 1..fps.len() {
            ensure(fps[i].1 != fps[j].1, || format!("{} and {} share a fingerprint", fps[i].0, fps[j].0))?;
        }
    }

    let mut simple = Vec::new();
    for name in ["sl2R_dual", "su2_dual"] {
        let l = load(name)?;
        let f = fingerprint(&l).map_err(|e| e.to_string())?;
        ensure(!solvable_by_brackets(&l, &Subspace::full(l.dim())), || format!("{name} solvable"))?;
        ensure(f.dim == 6 && f.essential_dim == 3 && !f.solvable, || format!("{name}: {f:?}"))?;
        simple.push(f);
    }
    ensure(simple[0] != simple[1], || "sl2R_dual and su2_dual share a fingerprint".into())?;
    Ok("R vs D2, five nilpotent algebras, two non-solvable dualizations all distinct".into())
}

/// The line through `v` is an ideal iff every `[e_i, v]` is a multiple of `v`.
fn line_is_ideal(l: &LieAlgebra, v: &[Rational]) -> bool {
    let line = Subspace::span(l.dim(), &[v.to_vec()]).expect("dims");
    basis(l.dim())
        .iter()
        .all(|e| line.contains(&l.bracket(e, v).expect("dims")))
}

fn criterion_9() -> Outcome {
    let path = algebra_file("e2_dual")?;
    let (code, out) = cli(&["find-line-ideals", path.to_str().unwrap()])?;
    ensure(code == 0, || format!("exit {code}"))?;
    ensure(out.contains("line ideals: none"), || format!("output: {out}"))?;
    ensure(out.contains("conclusive: true"), || format!("output: {out}"))?;
    let l = load("e2_dual")?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut rejected = 0;
    while rejected < 1000 {
        let v = random_vector(&mut rng, l.dim());
        if is_zero_vector(&v) {
            continue;
        }
        ensure(!line_is_ideal(&l, &v), || format!("line {v:?} is an ideal"))?;
        rejected += 1;
    }
    Ok("none, conclusive; 1000 random lines rejected".into())
}

fn criterion_10() -> Outcome {
    let l4 = load("L4_paper")?;
    let f = fingerprint(&l4).map_err(|e| e.to_string())?;
    for base in ["abelian(2)", "aff1"] {
        let d = dualize(&load(base)?, 2).map_err(|e| e.to_string())?;
        let fd = fingerprint(&d).map_err(|e| e.to_string())?;
        ensure(f != fd, || format!("L4 matches dualize({base})"))?;
    }
    let real = fingerprint(&l4.realification()).map_err(|e| e.to_string())?;
    let target = fingerprint(&load("heis3_plus_R")?.realification()).map_err(|e| e.to_string())?;
    ensure(real == target, || format!("realification {real:?} != {target:?}"))?;
    let report = build_report(&l4, 0).map_err(|e| e.to_string())?.render_tree();
    ensure(report.contains("rank of eps is 2"), || "rank note missing from report".into())?;
    Ok(format!("rank eps {} noted in report; realification matches heis3 + R", f.rank_eps))
}

fn criterion_11() -> Outcome {
    for (name, want) in [
        ("TnD2(2)", true),
        ("TnD2(3)", true),
        ("e2", false),
        ("borel_cx_realified", false),
    ] {
        let t = triangularity(&load(name)?);
        ensure(t.triangular == want, || format!("{name}: triangular = {}", t.triangular))?;
    }
    let path = algebra_file("borel_cx_realified")?;
    let (code, out) = cli(&["report", "--format", "tree", path.to_str().unwrap()])?;
    ensure(code == 0, || format!("report exit {code}"))?;
    let witness: Vec<&str> = out
        .lines()
        .skip_while(|line| !line.trim_start().starts_with("witness:"))
        .take(4)
        .collect();
    ensure(witness.len() == 4 && witness[1].contains("element:"), || "no witness in report".into())?;
    let w = triangularity(&load("borel_cx_realified")?).witness.ok_or("no witness")?;
    let l = load("borel_cx_realified")?;
    ensure(w.real_roots < l.dim(), || "witness has a real spectrum".into())?;
    println!("  borel_cx_realified witness:");
    for line in &witness[1..] {
        println!("    {}", line.trim());
    }
    Ok("TnD2(2), TnD2(3) triangular; e2, borel_cx_realified not".into())
}

fn criterion_12() -> Outcome {
    let names = catalog_names();
    for name in &names {
        let path = algebra_file(name)?;
        let path = path.to_str().unwrap();
        let (c1, a) = cli(&["report", "--seed", "0", path])?;
        let (c2, b) = cli(&["report", "--seed", "0", path])?;
        ensure(c1 == 0 && c2 == 0, || format!("{name}: exit {c1}, {c2}"))?;
        ensure(a == b && !a.is_empty(), || format!("{name}: reports differ"))?;
    }
    Ok(format!("{} entries byte-identical", names.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("axioms validate on every catalog entry", criterion_1),
        ("randomized subspace suites, seed 0, 200 trials", criterion_2),
        ("eps != 0 implies not semisimple", criterion_3),
        ("radical and nilradical", criterion_4),
        ("semisimple factor splitting", criterion_5),
        ("dual-number Engel triangularization", criterion_6),
        ("minimal abelian D2-ideals", criterion_7),
        ("classification facts", criterion_8),
        ("E(2) dualized has no line ideals", criterion_9),
        ("L4 is not a dualization", criterion_10),
        ("triangularity", criterion_11),
        ("report determinism", criterion_12),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (title, f)) in criteria.iter().enumerate() {
        let outcome = match panic::catch_unwind(AssertUnwindSafe(f)) {
            Ok(o) => o,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into())),
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {title}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
