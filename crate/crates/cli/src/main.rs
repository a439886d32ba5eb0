use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use weakbrace::correspond::affine::check_affine;
use weakbrace::io::report::{
    affine_error_message, algebra_error_message, brace_error_message, brace_file,
    classification_json, classification_text, report_json, summary, tables,
};
use weakbrace::io::{load_semilattice, read_table_file, LoadError, TableFile};
use weakbrace::search::{
    enumerate_affine_structures, enumerate_gamma_functions, enumerate_good_subsemigroups,
    oracle_enumerate_braces, EnumerationReport, Fixed, SearchError, SearchOptions, DEFAULT_BUDGET,
};
use weakbrace::special::{classify, compose_semilattice, decompose_semilattice};
use weakbrace::{CayleyTable, CliffordStructure, Holomorph, InverseSemigroup, WeakBrace};

const EXIT_INVALID: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_IMPLICATION: u8 = 4;

#[derive(Parser)]
#[command(name = "weakbrace", version, about = "Weak left braces on finite carriers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the tables of a file as a given structure.
    Check {
        path: PathBuf,
        #[arg(long = "as", value_enum)]
        kind: Kind,
        /// Block to check for the one-table kinds; defaults to the first block.
        #[arg(long)]
        op: Option<String>,
    },
    /// List every structure of one kind over the given table.
    Enumerate {
        path: PathBuf,
        #[arg(long, value_enum)]
        route: RouteArg,
        #[arg(long, value_enum, default_value = "summary")]
        emit: Emit,
        /// Operation held fixed by the oracle; defaults to add when present.
        #[arg(long, value_enum)]
        fix: Option<FixArg>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Report which special classes a brace belongs to.
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Build a brace from a strong-semilattice description.
    Semilattice {
        path: PathBuf,
        #[arg(long, conflicts_with = "roundtrip", required_unless_present = "roundtrip")]
        compose: bool,
        #[arg(long)]
        roundtrip: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Semigroup,
    Inverse,
    Clifford,
    Brace,
    DualBrace,
    Affine,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Gamma,
    Good,
    Affine,
    Oracle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Summary,
    Tables,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum FixArg {
    Add,
    Mul,
}

/// A message and the exit code it ends the process with.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl fmt::Display) -> Self {
        Failure { code, message: message.to_string() }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        let code = match e {
            LoadError::Semilattice(_) => EXIT_INVALID,
            _ => EXIT_PARSE,
        };
        Failure::new(code, e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check { path, kind, op } => check(&path, kind, op.as_deref()),
        Command::Enumerate { path, route, emit, fix, budget, jobs } => {
            enumerate(&path, route, emit, fix, SearchOptions { budget, jobs })
        }
        Command::Classify { path, json } => classify_file(&path, json),
        Command::Semilattice { path, roundtrip, .. } => semilattice(&path, roundtrip),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.code == EXIT_PARSE || f.code == EXIT_BUDGET {
                eprintln!("error: {}", f.message);
            } else {
                println!("{}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn block<'a>(file: &'a TableFile, label: &str) -> Result<&'a CayleyTable, Failure> {
    file.op(label)
        .ok_or_else(|| Failure::new(EXIT_PARSE, format!("no `op {label}:` block in the file")))
}

fn chosen<'a>(file: &'a TableFile, label: Option<&str>) -> Result<&'a CayleyTable, Failure> {
    match label {
        Some(l) => block(file, l),
        None => Ok(&file.blocks[0].1),
    }
}

fn load_brace(file: &TableFile, what: &str) -> Result<WeakBrace, Failure> {
    let (add, mul) = (block(file, "add")?, block(file, "mul")?);
    WeakBrace::new(add, mul).map_err(|e| {
        Failure::new(EXIT_INVALID, format!("{what} ✗ {}", brace_error_message(&e, &file.names)))
    })
}

fn check(path: &Path, kind: Kind, label: Option<&str>) -> Result<(), Failure> {
    let file = read_table_file(path)?;
    let names = &file.names;
    let invalid = |what: &str, msg: String| Failure::new(EXIT_INVALID, format!("{what} ✗ {msg}"));
    match kind {
        Kind::Semigroup => {
            let t = chosen(&file, label)?;
            if let Some([x, y, z]) = t.associativity_witness() {
                let w = format!("not associative, witness ({}, {}, {})", names[x], names[y], names[z]);
                return Err(invalid("semigroup", w));
            }
            println!("semigroup ✓");
        }
        Kind::Inverse => {
            InverseSemigroup::new(chosen(&file, label)?.clone())
                .map_err(|e| invalid("inverse semigroup", algebra_error_message(&e, names)))?;
            println!("inverse semigroup ✓");
        }
        Kind::Clifford => {
            CliffordStructure::from_table(chosen(&file, label)?.clone())
                .map_err(|e| invalid("Clifford semigroup", algebra_error_message(&e, names)))?;
            println!("Clifford semigroup ✓");
        }
        Kind::Brace | Kind::DualBrace => {
            let what = if let Kind::DualBrace = kind { "dual weak brace" } else { "weak brace" };
            let b = load_brace(&file, what)?;
            if let Kind::DualBrace = kind {
                if let Some(a) = b.mul().clifford_witness() {
                    return Err(invalid("dual weak brace", format!("mul not Clifford, witness {}", names[a])));
                }
                println!("dual weak brace ✓");
            } else {
                println!("weak brace ✓");
            }
        }
        Kind::Affine => {
            let mul = InverseSemigroup::new(block(&file, "mul")?.clone())
                .map_err(|e| invalid("affine structure", format!("mul {}", algebra_error_message(&e, names))))?;
            check_affine(&mul, block(&file, "diamond")?)
                .map_err(|e| invalid("affine structure", affine_error_message(&e, names)))?;
            println!("affine structure ✓");
        }
    }
    Ok(())
}

fn clifford_add(file: &TableFile) -> Result<CliffordStructure, Failure> {
    CliffordStructure::from_table(block(file, "add")?.clone()).map_err(|e| {
        Failure::new(EXIT_INVALID, format!("add is not a Clifford semigroup: {}", algebra_error_message(&e, &file.names)))
    })
}

fn inverse_block(file: &TableFile, label: &str) -> Result<InverseSemigroup, Failure> {
    InverseSemigroup::new(block(file, label)?.clone()).map_err(|e| {
        Failure::new(
            EXIT_INVALID,
            format!("{label} is not an inverse semigroup: {}", algebra_error_message(&e, &file.names)),
        )
    })
}

fn render(r: &EnumerationReport, emit: Emit) -> String {
    match emit {
        Emit::Summary => summary(r),
        Emit::Tables => tables(r),
        Emit::Json => format!("{:#}\n", report_json(r)),
    }
}

fn enumerate(
    path: &Path,
    route: RouteArg,
    emit: Emit,
    fix: Option<FixArg>,
    opts: SearchOptions,
) -> Result<(), Failure> {
    let file = read_table_file(path)?;
    let result = match route {
        RouteArg::Gamma => enumerate_gamma_functions(&clifford_add(&file)?, &opts),
        RouteArg::Good => {
            let hol = Holomorph::new(&clifford_add(&file)?, weakbrace::morphism::DEFAULT_ENDO_BOUND)
                .map_err(|e| Failure::new(EXIT_BUDGET, e))?;
            enumerate_good_subsemigroups(&hol, &opts)
        }
        RouteArg::Affine => enumerate_affine_structures(&inverse_block(&file, "mul")?, &opts),
        RouteArg::Oracle => {
            let which = match fix {
                Some(FixArg::Add) => Fixed::Add,
                Some(FixArg::Mul) => Fixed::Mul,
                None if file.op("add").is_some() => Fixed::Add,
                None => Fixed::Mul,
            };
            let label = if which == Fixed::Add { "add" } else { "mul" };
            oracle_enumerate_braces(&inverse_block(&file, label)?, which, &opts)
        }
    };
    match result {
        Ok(r) => {
            print!("{}", render(&r, emit));
            Ok(())
        }
        Err(SearchError::BudgetExceeded { budget, partial }) => {
            print!("{}", render(&partial, emit));
            Err(Failure::new(EXIT_BUDGET, format!("search budget of {budget} nodes exhausted")))
        }
        Err(e @ (SearchError::CarrierTooLarge { .. } | SearchError::Morphism(_))) => {
            Err(Failure::new(EXIT_BUDGET, e))
        }
        Err(e) => Err(Failure::new(EXIT_IMPLICATION, e)),
    }
}

fn classify_file(path: &Path, json: bool) -> Result<(), Failure> {
    let file = read_table_file(path)?;
    let b = load_brace(&file, "weak")?;
    let c = classify(&b);
    if json {
        println!("{:#}", classification_json(&c, &b));
    } else {
        print!("{}", classification_text(&c, &b));
    }
    if c.violations.is_empty() {
        Ok(())
    } else {
        eprintln!("error: {} implication(s) violated", c.violations.len());
        std::process::exit(EXIT_IMPLICATION.into());
    }
}

fn semilattice(path: &Path, roundtrip: bool) -> Result<(), Failure> {
    let sl = load_semilattice(path)?;
    let b = compose_semilattice(&sl).map_err(|e| Failure::new(EXIT_INVALID, e))?;
    if !roundtrip {
        print!("{}", brace_file(&b).emit());
        return Ok(());
    }
    let d = decompose_semilattice(&b).map_err(|e| Failure::new(EXIT_IMPLICATION, e))?;
    let again = compose_semilattice(&d.sl).map_err(|e| Failure::new(EXIT_IMPLICATION, e))?;
    let n = b.len();
    let same = (0..n).all(|x| {
        (0..n).all(|y| {
            let (px, py) = (d.position[x], d.position[y]);
            again.sum(px, py) == d.position[b.sum(x, y)] && again.prod(px, py) == d.position[b.prod(x, y)]
        })
    });
    if !same {
        return Err(Failure::new(EXIT_IMPLICATION, "recomposed tables differ from the composed brace"));
    }
    println!(
        "roundtrip ✓ ({} elements, {} components)",
        n,
        d.sl.components().len()
    );
    Ok(())
}
