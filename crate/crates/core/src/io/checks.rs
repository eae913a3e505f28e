//! Randomized property suites over a single algebra.
//!
//! Every suite draws from its own ChaCha8 stream (`seed`, stream = suite
//! position), so adding trials to one suite never shifts another. Random
//! vectors have independent coordinates uniform in `-3..=3`.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::format::format_combination;
use crate::calculus::{
    bracket_space, centralizer, classify_subspace, eps_image, eps_image_full, generated_d2_subalgebra,
    generated_ideal, generated_subalgebra, normalizer, random_subspace, random_vector, saturate,
};
use crate::error::Result;
use crate::lie::LieAlgebra;
use crate::linalg::{zero_vector, Subspace, Vector};
use crate::structure::{class_flags, essential, levi_check, nilradical, radical};

/// Default number of trials per randomized suite.
pub const DEFAULT_TRIALS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub claim: &'static str,
    /// Trials in which the claim was tested.
    pub tested: usize,
    /// Trials whose sample did not meet the claim's hypothesis.
    pub skipped: usize,
    pub violations: usize,
    /// The first violating sample.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub algebra: String,
    pub seed: u64,
    pub trials: usize,
    pub suites: Vec<SuiteResult>,
}

impl CheckReport {
    pub fn violations(&self) -> usize {
        self.suites.iter().map(|s| s.violations).sum()
    }

    pub fn passes(&self) -> bool {
        self.violations() == 0
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteResult> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "checks for {} (seed {}, {} trials)", self.algebra, self.seed, self.trials)?;
        for s in &self.suites {
            let status = if s.violations == 0 { "ok" } else { "FAILED" };
            writeln!(
                f,
                "{:<24} {status}: {} tested, {} skipped, {} violations  [{}]",
                s.name, s.tested, s.skipped, s.violations, s.claim
            )?;
            if let Some(w) = &s.witness {
                writeln!(f, "    witness: {w}")?;
            }
        }
        writeln!(f, "total violations: {}", self.violations())
    }
}

fn span_text(l: &LieAlgebra, u: &Subspace) -> String {
    let parts: Vec<String> = u
        .basis_vectors()
        .iter()
        .map(|v| format_combination(l.labels(), v))
        .collect();
    format!("span({})", parts.join(", "))
}

struct Tally {
    result: SuiteResult,
}

impl Tally {
    fn new(name: &'static str, claim: &'static str) -> Self {
        Tally {
            result: SuiteResult {
                name,
                claim,
                tested: 0,
                skipped: 0,
                violations: 0,
                witness: None,
            },
        }
    }

    fn skip(&mut self) {
        self.result.skipped += 1;
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.result.tested += 1;
        if !ok {
            self.result.violations += 1;
            if self.result.witness.is_none() {
                self.result.witness = Some(witness());
            }
        }
    }
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn random_vectors(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Vec<Vector> {
    let k = rng.gen_range(1..=max);
    (0..k).map(|_| random_vector(rng, n)).collect()
}

fn eps_image_abelian(l: &LieAlgebra, trials: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new("eps-image-abelian", "[eps U, eps U] = 0");
    for _ in 0..trials {
        let u = random_subspace(rng, l.dim());
        if l.nilpotency_index() != 2 {
            t.skip();
            continue;
        }
        let e = eps_image(l, &u)?;
        let ok = bracket_space(l, &e, &e)?.is_zero();
        t.record(ok, || format!("U = {}", span_text(l, &u)));
    }
    Ok(t.result)
}

fn ideal_images(l: &LieAlgebra, trials: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new(
        "ideal-images",
        "U ideal => eps U and U + eps U ideals, [U + eps U, L] in U",
    );
    let full = Subspace::full(l.dim());
    for _ in 0..trials {
        let gens = random_vectors(rng, l.dim(), 2);
        let u = generated_ideal(l, &gens)?;
        let e = eps_image(l, &u)?;
        let hat = saturate(l, &u)?;
        let e_ideal = classify_subspace(l, &e)?.is_ideal;
        let hat_ideal = classify_subspace(l, &hat)?.is_ideal;
        let inside = u.contains_subspace(&bracket_space(l, &hat, &full)?);
        t.record(e_ideal && hat_ideal && inside, || {
            format!(
                "U = {}: eps U ideal {e_ideal}, U + eps U ideal {hat_ideal}, [U + eps U, L] in U {inside}",
                span_text(l, &u)
            )
        });
    }
    Ok(t.result)
}

fn saturation_subalgebra(l: &LieAlgebra, trials: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new(
        "saturation-subalgebra",
        "U + eps U is an eps-invariant subalgebra",
    );
    for _ in 0..trials {
        let u = random_subspace(rng, l.dim());
        let hat = saturate(l, &u)?;
        let c = classify_subspace(l, &hat)?;
        t.record(c.is_subalgebra && c.is_d2_invariant, || {
            let leaving = hat
                .basis_vectors()
                .iter()
                .enumerate()
                .flat_map(|(i, a)| {
                    hat.basis_vectors()
                        .into_iter()
                        .skip(i + 1)
                        .map(move |b| (a.clone(), b))
                })
                .find_map(|(a, b)| {
                    let c = l.bracket(&a, &b).ok()?;
                    (!hat.contains(&c)).then(|| {
                        format!(
                            "[{}, {}] = {}",
                            format_combination(l.labels(), &a),
                            format_combination(l.labels(), &b),
                            format_combination(l.labels(), &c)
                        )
                    })
                });
            match leaving {
                Some(b) => format!("U = {}: {b} leaves U + eps U", span_text(l, &u)),
                None => format!("U = {}: U + eps U not eps-invariant", span_text(l, &u)),
            }
        });
    }
    Ok(t.result)
}

fn centralizer_normalizer(l: &LieAlgebra, trials: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new(
        "centralizer-normalizer",
        "U eps-invariant subalgebra => Z(U), N(U) eps-invariant",
    );
    for _ in 0..trials {
        let gens = random_vectors(rng, l.dim(), 2);
        let u = generated_d2_subalgebra(l, &gens)?;
        let z = centralizer(l, &u)?;
        let nz = normalizer(l, &u)?;
        let z_ok = z.contains_subspace(&eps_image(l, &z)?);
        let n_ok = nz.contains_subspace(&eps_image(l, &nz)?);
        t.record(z_ok && n_ok, || {
            format!(
                "U = {}: centralizer invariant {z_ok}, normalizer invariant {n_ok}",
                span_text(l, &u)
            )
        });
    }
    Ok(t.result)
}

/// Samples `S` generated by two random combinations of the essential basis
/// and tests the splitting whenever `S` is nonzero and semisimple.
fn semisimple_split(l: &LieAlgebra, trials: usize, rng: &mut ChaCha8Rng) -> Result<SuiteResult> {
    let mut t = Tally::new(
        "semisimple-split",
        "S semisimple => S meets eps S trivially, S + eps S = S (+) eps S, eps S abelian ideal",
    );
    let (_, ess) = essential(l);
    let n = l.dim();
    for _ in 0..trials {
        let gens: Vec<Vector> = (0..2)
            .map(|_| {
                let c = random_vector(rng, ess.len());
                let mut v = zero_vector(n);
                for (x, b) in c.iter().zip(&ess) {
                    crate::linalg::axpy(&mut v, x, b);
                }
                v
            })
            .collect();
        if l.nilpotency_index() != 2 || !l.has_eps() {
            t.skip();
            continue;
        }
        let s = generated_subalgebra(l, &gens)?;
        if s.is_zero() || !class_flags(&l.restrict(&s)?).semisimple {
            t.skip();
            continue;
        }
        let report = levi_check(l, &s)?;
        t.record(report.passes(), || format!("S = {}: {:?}", span_text(l, &s), report));
    }
    Ok(t.result)
}

fn radical_closure(l: &LieAlgebra) -> SuiteResult {
    let mut t = Tally::new(
        "radical-nilradical",
        "radical, nilradical eps-invariant; Im eps in nilradical",
    );
    let outcome = (|| -> Result<Option<String>> {
        let r = radical(l)?;
        let nil = nilradical(l)?;
        if !r.contains_subspace(&eps_image(l, &r)?) {
            return Ok(Some(format!("radical {} not eps-invariant", span_text(l, &r))));
        }
        if !nil.contains_subspace(&eps_image(l, &nil)?) {
            return Ok(Some(format!("nilradical {} not eps-invariant", span_text(l, &nil))));
        }
        if l.nilpotency_index() == 2 && !nil.contains_subspace(&eps_image_full(l)) {
            return Ok(Some(format!("Im eps not inside nilradical {}", span_text(l, &nil))));
        }
        Ok(None)
    })();
    match outcome {
        Ok(None) => t.record(true, String::new),
        Ok(Some(w)) => t.record(false, || w),
        Err(e) => t.record(false, || e.to_string()),
    }
    t.result
}

fn eps_not_semisimple(l: &LieAlgebra) -> SuiteResult {
    let mut t = Tally::new("eps-not-semisimple", "eps != 0 => not semisimple");
    if l.has_eps() {
        t.record(!class_flags(l).semisimple, || "semisimple with eps != 0".to_string());
    } else {
        t.skip();
    }
    t.result
}

/// Runs every suite. Randomized suites use `trials` samples each; the
/// structural suites run once.
pub fn run_checks(l: &LieAlgebra, trials: usize, seed: u64) -> Result<CheckReport> {
    let suites = vec![
        eps_image_abelian(l, trials, &mut stream(seed, 1))?,
        ideal_images(l, trials, &mut stream(seed, 2))?,
        saturation_subalgebra(l, trials, &mut stream(seed, 3))?,
        centralizer_normalizer(l, trials, &mut stream(seed, 4))?,
        semisimple_split(l, trials, &mut stream(seed, 5))?,
        radical_closure(l),
        eps_not_semisimple(l),
    ];
    Ok(CheckReport {
        algebra: l.name().to_string(),
        seed,
        trials,
        suites,
    })
}
