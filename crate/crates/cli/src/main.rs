//! `d2lie`: validate, report on and construct Lie algebras with a dual-number
//! structure operator.
//!
//! Exit codes: 0 success, 1 validation or check failure, 2 I/O or parse
//! error (including bad command lines), 3 precondition violation.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use d2lie::construct::{catalog, catalog_entries, dualize};
use d2lie::io::{build_report, format_combination, run_checks, serialize_algebra, AlgebraFile, MatrixFile, DEFAULT_TRIALS};
use d2lie::lie::LieAlgebra;
use d2lie::structure::{engel_triangularize, find_line_ideals, minimal_abelian_d2_ideal};
use d2lie::Error;

const EXIT_VALIDATION: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "d2lie", version, about = "Exact computations on Lie algebras with a dual-number structure")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Jacobi, eps^p = 0 and eps-compatibility on all basis elements.
    Validate { file: PathBuf },
    /// Full invariant report.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Randomized property suites; fails on any violation.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Tensor with the plural numbers R[e]/(e^p).
    Dualize {
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Built-in algebras.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// One-dimensional ideals, and whether the search is exhaustive.
    FindLineIdeals { file: PathBuf },
    /// A minimal abelian eps-invariant ideal of a solvable algebra.
    MinAbelianIdeal { file: PathBuf },
    /// Triangularize a set of nilpotent matrices over the dual numbers.
    Engel { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    List,
    Show {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Tree,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_IO,
            Error::Verification(_) => EXIT_VALIDATION,
            Error::NoTriangularForm(_) => EXIT_VALIDATION,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

type CliResult = Result<u8, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn write_output(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_document(path: &Path) -> Result<AlgebraFile, Failure> {
    let text = read_input(path)?;
    AlgebraFile::parse(&text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))
}

/// Parses and validates; axiom violations fail with their source lines.
fn load_valid(path: &Path) -> Result<LieAlgebra, Failure> {
    let doc = parse_document(path)?;
    let (l, violations) = doc
        .validate()
        .map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", path.display())))?;
    if !violations.is_empty() {
        let lines: Vec<String> = violations.iter().map(|v| format!("violation: {v}")).collect();
        return Err(Failure::new(EXIT_VALIDATION, lines.join("\n")));
    }
    Ok(l)
}

fn validate(file: &Path) -> CliResult {
    let doc = parse_document(file)?;
    let (l, violations) = doc.validate()?;
    if violations.is_empty() {
        println!("{}: valid", l.name());
        return Ok(0);
    }
    for v in &violations {
        println!("violation: {v}");
    }
    Ok(EXIT_VALIDATION)
}

fn report(file: &Path, format: Format, seed: u64) -> CliResult {
    let doc = parse_document(file)?;
    let l = doc.to_algebra()?;
    let r = build_report(&l, seed)?;
    let text = match format {
        Format::Text => r.render_text(),
        Format::Tree => r.render_tree(),
    };
    print!("{text}");
    Ok(if l.validate().is_valid() { 0 } else { EXIT_VALIDATION })
}

fn check(file: &Path, trials: usize, seed: u64) -> CliResult {
    let l = load_valid(file)?;
    let r = run_checks(&l, trials, seed)?;
    print!("{r}");
    Ok(if r.passes() { 0 } else { EXIT_VALIDATION })
}

fn dualize_cmd(file: &Path, p: usize, output: Option<&Path>) -> CliResult {
    let l = load_valid(file)?;
    let d = dualize(&l, p)?;
    write_output(output, &serialize_algebra(&d))?;
    Ok(0)
}

fn catalog_cmd(command: &CatalogCommand) -> CliResult {
    match command {
        CatalogCommand::List => {
            for e in catalog_entries() {
                let g = &e.golden;
                println!("{:<20} dim {:>2}  rank eps {:>2}  d {:>2}", e.name, g.dim, g.rank_eps, g.essential_dim);
            }
            println!("families: abelian(n), glnD2(n), NnD2(n), TnD2(n)");
        }
        CatalogCommand::Show { name, output } => {
            let l = catalog(name)?;
            write_output(output.as_deref(), &serialize_algebra(&l))?;
        }
    }
    Ok(0)
}

fn find_line_ideals_cmd(file: &Path) -> CliResult {
    let l = load_valid(file)?;
    let lines = find_line_ideals(&l)?;
    if lines.is_empty() {
        println!("line ideals: none");
    } else {
        println!("line ideals:");
        for f in &lines.families {
            let basis: Vec<String> = f
                .space
                .basis_vectors()
                .iter()
                .map(|v| format_combination(l.labels(), v))
                .collect();
            let weights: Vec<String> = f.eigenvalues.iter().map(|x| x.to_string()).collect();
            if f.space.dim() == 1 {
                println!("  {}  (weights {})", basis[0], weights.join(" "));
            } else {
                println!("  every line in span({})  (weights {})", basis.join(", "), weights.join(" "));
            }
        }
    }
    println!("conclusive: {}", lines.conclusive);
    Ok(0)
}

fn min_abelian_ideal_cmd(file: &Path) -> CliResult {
    let l = load_valid(file)?;
    let m = minimal_abelian_d2_ideal(&l)?;
    let fmt = |s: &d2lie::linalg::Subspace| -> String {
        let b: Vec<String> = s
            .basis_vectors()
            .iter()
            .map(|v| format_combination(l.labels(), v))
            .collect();
        format!("span({})", b.join(", "))
    };
    println!("dim: {}", m.dim());
    println!("ideal: {}", fmt(&m.space));
    println!("searched: {}", fmt(&m.searched));
    if let Some(n) = &m.note {
        println!("note: {n}");
    }
    Ok(0)
}

fn engel_cmd(file: &Path) -> CliResult {
    let text = read_input(file)?;
    let input = MatrixFile::parse(&text).map_err(|e| Failure::new(EXIT_IO, format!("{}: {e}", file.display())))?;
    match engel_triangularize(&input.matrices, input.rank) {
        Ok(g) => {
            let gi = g.inverse().expect("verified invertible");
            let mut out = String::new();
            out.push_str("# basis change g, then g^-1 M g for each input\n");
            let mut all = vec![g.clone()];
            all.extend(input.matrices.iter().map(|m| &(&gi * m) * &g));
            out.push_str(
                &MatrixFile {
                    rank: input.rank,
                    matrices: all,
                }
                .to_string(),
            );
            print!("{out}");
            Ok(0)
        }
        Err(e @ Error::NotNilpotent { .. }) => {
            println!("not nilpotent: {e}");
            Ok(EXIT_PRECONDITION)
        }
        Err(e) => Err(e.into()),
    }
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Report { file, format, seed } => report(file, *format, *seed),
        Command::Check { file, trials, seed } => check(file, *trials, *seed),
        Command::Dualize { file, p, output } => dualize_cmd(file, *p, output.as_deref()),
        Command::Catalog { command } => catalog_cmd(command),
        Command::FindLineIdeals { file } => find_line_ideals_cmd(file),
        Command::MinAbelianIdeal { file } => min_abelian_ideal_cmd(file),
        Command::Engel { file } => engel_cmd(file),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { EXIT_IO } else { 0 };
            return ExitCode::from(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    };
    let _ = io::stdout().flush();
    ExitCode::from(code)
}
