use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use equichar::cache::DiskCache;
use equichar::length::{length_bound, length_theorem_report, LengthReport};
use equichar::moduli::{Engine, MemoKey};
use equichar::render;
use equichar::verify::{self, Suite};
use equichar::Error;

const USAGE: u8 = 1;
const VERIFY_FAILED: u8 = 2;
const CACHE_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "equichar",
    version,
    about = "Equivariant cohomology of weighted moduli spaces of pointed rational curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the character E^n_{k,l}(q).
    Compute(ComputeArgs),
    /// Print the Poincaré polynomial of the moduli space of n-pointed stable rational curves.
    Betti(BettiArgs),
    /// Tabulate lengths and leading constituents for 3 <= n <= n-max.
    LengthTable(SweepArgs),
    /// Run a self-check suite and print a JSON summary.
    Verify(VerifyArgs),
    /// Inspect or clear the disk cache.
    Cache(CacheArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory holding cached characters.
    #[arg(long, env = "EQUICHAR_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    n: u32,
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    l: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct BettiArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    n: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(3..))]
    n_max: u32,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    /// Largest n (or degree, for the oracle suite) to check.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    n_max: Option<u32>,
    #[arg(long, env = "EQUICHAR_CACHE")]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct CacheArgs {
    #[arg(value_enum)]
    action: CacheAction,
    #[arg(long, env = "EQUICHAR_CACHE")]
    cache: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    #[value(name = "paper-examples")]
    ReferenceExamples,
    Duality,
    Oracles,
    LengthTheorem,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::ReferenceExamples => Suite::ReferenceExamples,
            SuiteArg::Duality => Suite::Duality,
            SuiteArg::Oracles => Suite::Oracles,
            SuiteArg::LengthTheorem => Suite::LengthTheorem,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CacheAction {
    /// List cached keys.
    List,
    /// Recompute every entry and compare it with the file.
    Check,
    /// Delete every entry.
    Clear,
}

enum Failure {
    Error(Error),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(Error::Io(e))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Error(Error::Json(e))
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Cache { .. } | Error::Json(_) | Error::Io(_) => CACHE_ERROR,
        Error::InvalidArgument(_)
        | Error::SizeMismatch(..)
        | Error::DegreeMismatch(_)
        | Error::Inhomogeneous
        | Error::ZeroInput => USAGE,
        Error::InexactDivision { .. } | Error::NotEffective { .. } => VERIFY_FAILED,
    }
}

fn engine(cache: &Option<PathBuf>) -> Result<Engine, Error> {
    match cache {
        Some(dir) => Engine::with_cache(dir),
        None => Ok(Engine::new()),
    }
}

fn compute(args: &ComputeArgs, out: &mut impl Write) -> Result<(), Failure> {
    let (n, k, l) = (args.n as usize, args.k as usize, args.l as usize);
    let key = MemoKey::new(n, k, l)?;
    let engine = engine(&args.common.cache)?;
    let value = engine.e_schur(n, k, l)?;
    match args.common.format {
        Format::Text => writeln!(out, "{}", render::text(&value))?,
        Format::Latex => writeln!(out, "{}", render::latex(&value))?,
        Format::Json => write!(out, "{}", DiskCache::encode(key, &value)?)?,
    }
    Ok(())
}

fn betti(args: &BettiArgs, out: &mut impl Write) -> Result<(), Failure> {
    let n = args.n as usize;
    let poly = engine(&args.common.cache)?.poincare_polynomial(n)?;
    match args.common.format {
        Format::Text => {
            writeln!(out, "{poly}")?;
            writeln!(out, "{}", render::coefficient_list(&poly))?;
        }
        Format::Latex => writeln!(out, "{}", poly.to_latex())?,
        Format::Json => {
            let coeffs: Vec<serde_json::Value> = poly
                .coeffs()
                .iter()
                .map(|c| serde_json::Value::String(equichar::qpoly::format_rational(c)))
                .collect();
            let doc = serde_json::json!({ "v": 1, "n": n, "betti": coeffs });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
    }
    Ok(())
}

fn status(report: &LengthReport, i: usize) -> String {
    let row = &report.rows[i];
    match row.lambda_mult {
        Some(m) => format!("lambda mult={m}"),
        None if row.star => "star".into(),
        None => "no-star".into(),
    }
}

fn length_table(args: &SweepArgs, out: &mut impl Write) -> Result<(), Failure> {
    let engine = engine(&args.common.cache)?;
    let mut reports = Vec::new();
    for n in 3..=args.n_max as usize {
        reports.push(length_theorem_report(&engine, n)?);
    }
    let passed = reports.iter().all(LengthReport::passed);
    match args.common.format {
        Format::Json => {
            let doc = serde_json::json!({ "v": 1, "passed": passed, "reports": reports });
            writeln!(out, "{}", serde_json::to_string(&doc)?)?;
        }
        Format::Text | Format::Latex => {
            writeln!(out, "{:>3} {:>3} {:>6} {:>5} {:>5}  {:<16} check", "n", "i", "length", "bound", "match", "w")?;
            for report in &reports {
                for (idx, row) in report.rows.iter().enumerate() {
                    let bound = length_bound(report.n, row.i);
                    let ok = report.row_failures(row).is_empty();
                    writeln!(
                        out,
                        "{:>3} {:>3} {:>6} {:>5} {:>5}  {:<16} {}",
                        report.n,
                        row.i,
                        row.length,
                        bound,
                        ok,
                        row.w.to_string(),
                        status(report, idx)
                    )?;
                }
            }
        }
    }
    if passed {
        Ok(())
    } else {
        let failures: Vec<String> = reports.iter().flat_map(LengthReport::failures).collect();
        Err(Failure::Verification(failures.join("; ")))
    }
}

fn run_verify(args: &VerifyArgs, out: &mut impl Write) -> Result<(), Failure> {
    let suite = Suite::from(args.suite);
    let n_max = args.n_max.map_or(suite.default_n_max(), |n| n as usize);
    let engine = engine(&args.cache)?;
    let report = verify::run(suite, &engine, n_max)?;
    writeln!(out, "{}", serde_json::to_string(&report)?)?;
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification(format!(
            "{} of {} checks failed",
            report.failed, report.total
        )))
    }
}

fn cache(args: &CacheArgs, out: &mut impl Write) -> Result<(), Failure> {
    let disk = DiskCache::open(&args.cache)?;
    match args.action {
        CacheAction::List => {
            for key in disk.entries()? {
                writeln!(out, "{}", disk.path_for(key).display())?;
            }
        }
        CacheAction::Clear => {
            let removed = disk.clear()?;
            writeln!(out, "removed {removed} entries")?;
        }
        CacheAction::Check => {
            let fresh = Engine::new();
            let mut stale = Vec::new();
            let keys = disk.entries()?;
            for &key in &keys {
                let stored = std::fs::read_to_string(disk.path_for(key))?;
                disk.load(key)?;
                let value = fresh.e(key.n, key.k, key.l)?;
                if DiskCache::encode(key, &value)? != stored {
                    stale.push(disk.path_for(key).display().to_string());
                }
            }
            writeln!(out, "checked {} entries, {} mismatched", keys.len(), stale.len())?;
            if !stale.is_empty() {
                return Err(Failure::Verification(stale.join(" ")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = match &cli.command {
        Command::Compute(args) => compute(args, &mut out),
        Command::Betti(args) => betti(args, &mut out),
        Command::LengthTable(args) => length_table(args, &mut out),
        Command::Verify(args) => run_verify(args, &mut out),
        Command::Cache(args) => cache(args, &mut out),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Error(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Verification(why)) => {
            eprintln!("verification failed: {why}");
            ExitCode::from(VERIFY_FAILED)
        }
    }
}
