//! `tamelie`: validate Lie algebra files, classify almost complex
//! structures, query cones and run the self-test suite.
//!
//! Exit codes: 0 success (or tamed), 10 not tamed, 11 usage or parse
//! error, 12 mathematical precondition failed, 13 internal invariant
//! violated, 14 self-test failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use tamelie::acceptance::{self, Config};
use tamelie::catalog::{catalog_all, catalog_get, CatalogEntry};
use tamelie::io::{parse_acs, parse_class, parse_lie, write_lie, write_matrix};
use tamelie::scalar::{self, Scalar};
use tamelie::tameness::{classify, cone_membership, Classification, ConeVerdict, Witness};
use tamelie::{AlmostComplexStructure, Error, KForm, LieAlgebra, Orientation};

const NOT_TAMED: u8 = 10;
const USAGE: u8 = 11;
const PRECONDITION: u8 = 12;
const INVARIANT: u8 = 13;
const SELFTEST: u8 = 14;

#[derive(Parser, Debug)]
#[command(name = "tamelie", version, about = "Tamed and almost-Kähler structures on 4-dimensional Lie algebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Orientation sign: 1 for f1^f2^f3^f4, -1 for its negative.
    #[arg(long, global = true, default_value_t = 1, allow_hyphen_values = true,
          value_parser = parse_sign)]
    zeta: i32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check Jacobi and unimodularity and print Betti numbers.
    Validate {
        /// `.lie` file or catalog name.
        algebra: String,
    },
    /// Decide whether J is tamed; exits 0 if tamed, 10 if not.
    Classify {
        /// `.lie` file or catalog name.
        algebra: String,
        /// File with the 4x4 matrix of J.
        j: PathBuf,
    },
    /// Membership of a class in the compatible and tamed cones.
    Cone {
        algebra: String,
        j: PathBuf,
        /// H+ coordinates, optionally followed by `;` and H- coordinates.
        #[arg(long)]
        class: String,
    },
    /// Inspect or export the built-in algebras.
    Catalog(CatalogArgs),
    /// Run the acceptance suite.
    Selftest {
        #[arg(long, default_value_t = acceptance::DEFAULT_SEED)]
        seed: u64,
        /// Random J per algebra in the sweeps.
        #[arg(long, default_value_t = 100)]
        sweeps: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct CatalogArgs {
    #[arg(long)]
    list: bool,
    #[arg(long, value_name = "NAME")]
    show: Option<String>,
    #[arg(long, num_args = 2, value_names = ["NAME", "PATH"])]
    export: Option<Vec<String>>,
}

fn parse_sign(s: &str) -> Result<i32, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("expected 1 or -1, got `{s}`")),
    }
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Parse { .. } | Error::UnknownCatalogEntry(_)) => USAGE,
            Some(Error::InvariantViolated(_)) => INVARIANT,
            Some(_) => PRECONDITION,
            None => USAGE,
        };
        Self { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            if matches!(f.error.downcast_ref::<Error>(), Some(Error::OrientationMismatch)) {
                eprintln!("hint: pass --zeta {} or negate one basis vector (a row and column of J)", -cli.zeta);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { algebra } => validate(cli, algebra),
        Command::Classify { algebra, j } => classify_cmd(cli, algebra, j),
        Command::Cone { algebra, j, class } => cone(cli, algebra, j, class),
        Command::Catalog(args) => catalog(cli, args),
        Command::Selftest { seed, sweeps } => selftest(cli, *seed, *sweeps),
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

/// A `.lie` file, or a catalog name when no such file exists.
fn load_algebra(arg: &str) -> Result<LieAlgebra, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(e) = catalog_get(arg) {
            return Ok(e.algebra);
        }
    }
    let text = read(path)?;
    parse_lie(&text)
        .map_err(|e| anyhow::Error::new(e).context(path.display().to_string()).into())
}

fn load_acs(path: &Path) -> Result<AlmostComplexStructure, Failure> {
    let text = read(path)?;
    parse_acs(&text).map_err(|e| anyhow::Error::new(e).context(path.display().to_string()).into())
}

fn orientation(cli: &Cli) -> Orientation {
    let or = Orientation::standard(4);
    if cli.zeta < 0 {
        or.negated()
    } else {
        or
    }
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).context("serializing report")?;
    println!("{text}");
    Ok(())
}

fn join(xs: &[Scalar]) -> String {
    xs.iter().map(scalar::format).collect::<Vec<_>>().join(", ")
}

fn join_forms(xs: &[KForm]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

fn validate(cli: &Cli, arg: &str) -> Outcome {
    let g = load_algebra(arg)?;
    let betti = g.betti_numbers();
    let unimodular = g.is_unimodular();
    if cli.format == Format::Json {
        print_json(&serde_json::json!({
            "dim": g.dim(),
            "jacobi": true,
            "unimodular": unimodular,
            "betti": betti,
        }))?;
    } else {
        println!("dimension   {}", g.dim());
        println!("jacobi      holds");
        println!("unimodular  {unimodular}");
        for (k, b) in betti.iter().enumerate() {
            println!("b{k}          {b}");
        }
    }
    Ok(0)
}

fn print_classification(c: &Classification) {
    let r = &c.report;
    println!("tamed          {}", c.tamed);
    println!("almost Kahler  {}", c.almost_kahler);
    println!("integrable     {}", c.integrable);
    println!("b2 = {}, b+ = {}, h+ = {}, h- = {}", r.b2, r.b_plus, r.h_plus, r.h_minus);
    let s = &c.plus_signature;
    println!("signature on Z+_J  ({}, {}, {})", s.positive, s.negative, s.null);
    println!("H+_J basis     {}", join_forms(&r.plus_representatives));
    println!("H-_J basis     {}", join_forms(&r.minus_basis));
    match &c.witness {
        Witness::CompatibleForm { form } => println!("compatible form  {form}"),
        Witness::ObstructionVector { vector, bivector } => {
            println!("obstruction v  ({})", join(vector));
            println!("v ^ Jv         {bivector}");
        }
    }
}

fn classify_cmd(cli: &Cli, arg: &str, j: &Path) -> Outcome {
    let g = load_algebra(arg)?;
    let j = load_acs(j)?;
    let c = classify(&g, &orientation(cli), &j)?;
    if cli.format == Format::Json {
        print_json(&c)?;
    } else {
        print_classification(&c);
    }
    Ok(if c.tamed { 0 } else { NOT_TAMED })
}

fn print_cone(v: &ConeVerdict) {
    println!("compatible cone  {}", v.in_compatible_cone);
    println!("tamed cone       {}", v.in_tamed_cone);
    println!("e^2              {}", scalar::format(&v.square));
    println!("H+ part          {}", v.plus_part);
    println!("H- part          {}", v.minus_part);
    println!("H+ basis         {}", join_forms(&v.plus_basis));
    println!("H- basis         {}", join_forms(&v.minus_basis));
    if let Some(note) = &v.note {
        println!("note             {note}");
    }
}

fn cone(cli: &Cli, arg: &str, j: &Path, class: &str) -> Outcome {
    let g = load_algebra(arg)?;
    let j = load_acs(j)?;
    let (plus, minus) = parse_class(class).context("malformed --class")?;
    let v = cone_membership(&g, &orientation(cli), &j, &plus, minus.as_deref())?;
    if cli.format == Format::Json {
        print_json(&v)?;
    } else {
        print_cone(&v);
    }
    Ok(0)
}

fn show(cli: &Cli, e: &CatalogEntry) -> Result<(), Failure> {
    let families: Vec<String> = e
        .families
        .iter()
        .map(|f| format!("{}({}) [{}]", f.name, f.params.join(", "), f.constraint))
        .collect();
    if cli.format == Format::Json {
        let brackets: Vec<_> = e
            .algebra
            .structure_constants()
            .iter()
            .map(|c| serde_json::json!([c.i, c.j, c.k, scalar::format(&c.coeff)]))
            .collect();
        print_json(&serde_json::json!({
            "name": e.name,
            "title": e.title,
            "structure_constants": brackets,
            "families": families,
            "expected": e.expected,
        }))?;
    } else {
        println!("{}: {}", e.name, e.title);
        print!("{}", write_lie(&e.algebra, None));
        println!("b+ = {}, betti = {:?}", e.expected.b_plus, e.expected.betti);
        println!("families: {}", families.join("; "));
        if let Ok(j) = e.family_j("J_0", &[]) {
            println!("J_0:");
            print!("{}", write_matrix(j.matrix()));
        }
    }
    Ok(())
}

fn catalog(cli: &Cli, args: &CatalogArgs) -> Outcome {
    if args.list {
        let all = catalog_all();
        if cli.format == Format::Json {
            let names: Vec<&str> = all.iter().map(|e| e.name).collect();
            print_json(&names)?;
        } else {
            for e in all {
                println!("{:<8} {}", e.name, e.title);
            }
        }
    } else if let Some(name) = &args.show {
        show(cli, &catalog_get(name)?)?;
    } else if let Some([name, path]) = args.export.as_deref() {
        let e = catalog_get(name)?;
        std::fs::write(path, write_lie(&e.algebra, Some(e.title)))
            .with_context(|| format!("cannot write {path}"))?;
    }
    Ok(0)
}

fn selftest(cli: &Cli, seed: u64, sweeps: u64) -> Outcome {
    let cfg = Config {
        seed,
        sweep_count: sweeps,
        ..Config::default()
    };
    let outcomes = acceptance::run_all(&cfg);
    if cli.format == Format::Json {
        print_json(&outcomes)?;
    } else {
        for o in &outcomes {
            println!("{o}");
        }
    }
    Ok(if outcomes.iter().all(|o| o.passed) { 0 } else { SELFTEST })
}
