mod cache;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use higgsmotive::adhm::{multicover_check, solve_recursion, verify_wallcrossing, Slope};
use higgsmotive::higgs::{check_hn_properties, CurveParams};
use higgsmotive::Error;

use cache::Cache;
use emit::Doc;

/// Exact Higgs-bundle invariants and wall-crossing checks.
#[derive(Parser)]
#[command(name = "higgsmotive", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Directory for cached `H_n` results; `HIGGSMOTIVE_CACHE` takes precedence.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Args, Clone, Copy)]
struct Curve {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    twist: u32,
}

impl Curve {
    fn params(self) -> CurveParams {
        CurveParams::new(self.genus, self.twist)
    }
}

#[derive(Args, Clone, Copy)]
struct RankArgs {
    #[command(flatten)]
    curve: Curve,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rank: u32,
    /// Number of `t` exponents to compute; the default leaves a guard band above `D`.
    #[arg(long)]
    tprec: Option<i64>,
}

#[derive(Args, Clone, Copy)]
struct AdhmArgs {
    #[command(flatten)]
    curve: Curve,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    rmax: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_slope, default_value = "0")]
    mu: Slope,
    /// Charges in `[-window, window]` are compared.
    #[arg(long, default_value_t = 8)]
    window: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    E,
    P,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// `H_n(t)` with coefficients in `u, v`.
    Hn(RankArgs),
    /// E-polynomial `E(u, v)`.
    Epoly(RankArgs),
    /// Poincaré polynomial `P(y)`.
    Poincare(RankArgs),
    /// Hodge polynomial in `u, v`.
    Hodge(RankArgs),
    /// Mixed Hodge polynomial of the character variety (twist 0 only).
    Charvar(RankArgs),
    /// Degree, palindromy, divisibility and sign checks on `H_n`.
    VerifyProperties(RankArgs),
    /// Solves the wall-crossing recursion for `Ω_1..Ω_rmax` and checks it at every charge.
    VerifyRecursion {
        #[command(flatten)]
        curve: Curve,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        rmax: u32,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
    /// Checks the wall-crossing identity at slope `mu`.
    VerifyWallcrossing(AdhmArgs),
    /// Compares the multicover form of `C_{≥mu}` with its product form.
    MulticoverCheck(AdhmArgs),
    /// A block of E and/or P rows for a range of ranks.
    Table {
        #[command(flatten)]
        curve: Curve,
        /// `a..b` (inclusive) or a single rank.
        #[arg(long, value_parser = parse_ranks)]
        ranks: (u32, u32),
        #[arg(long, value_enum, default_value_t = Kind::P)]
        kind: Kind,
        #[arg(long)]
        tprec: Option<i64>,
    },
}

fn parse_slope(s: &str) -> Result<Slope, Error> {
    s.parse()
}

fn parse_ranks(s: &str) -> Result<(u32, u32), String> {
    let bad = || format!("expected a..b or a rank, got {s:?}");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| bad())?;
    let b: u32 = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok((a, b))
}

/// What a command produced: the document and whether its check passed.
struct Outcome {
    doc: Doc,
    pass: bool,
}

fn done(doc: Doc) -> Outcome {
    Outcome { doc, pass: true }
}

fn run(cli: &Cli, cache: &Cache) -> higgsmotive::Result<Outcome> {
    let fmt = cli.format;
    Ok(match &cli.command {
        Command::Hn(a) => done(emit::hn(&cache.hn(a.curve.params(), a.rank, a.tprec)?, fmt)),
        Command::Epoly(a) => done(emit::epoly(
            &cache.hn(a.curve.params(), a.rank, a.tprec)?,
            fmt,
        )?),
        Command::Poincare(a) => done(emit::poincare(
            &cache.hn(a.curve.params(), a.rank, a.tprec)?,
            fmt,
        )?),
        Command::Hodge(a) => done(emit::hodge(
            &cache.hn(a.curve.params(), a.rank, a.tprec)?,
            fmt,
        )?),
        Command::Charvar(a) => done(emit::charvar(
            &cache.hn(a.curve.params(), a.rank, a.tprec)?,
            fmt,
        )?),
        Command::VerifyProperties(a) => {
            let h = cache.hn(a.curve.params(), a.rank, a.tprec)?;
            if !h.is_proven() {
                return Err(Error::TruncationInsufficient(format!(
                    "H_{} is not certified below t^{}",
                    a.rank, h.tprec
                )));
            }
            let rep = check_hn_properties(&h)?;
            Outcome {
                pass: rep.all_pass(),
                doc: emit::properties(&rep, fmt),
            }
        }
        Command::VerifyRecursion {
            curve,
            rmax,
            window,
        } => {
            let rep = solve_recursion(curve.params(), *rmax, *window)?;
            done(emit::recursion(&rep, fmt))
        }
        Command::VerifyWallcrossing(a) => {
            let rep = verify_wallcrossing(a.curve.params(), a.mu, a.rmax, a.window)?;
            Outcome {
                pass: rep.pass,
                doc: emit::wallcrossing(&rep, fmt),
            }
        }
        Command::MulticoverCheck(a) => {
            let rep = multicover_check(a.curve.params(), a.mu, a.rmax, a.window)?;
            Outcome {
                pass: rep.pass,
                doc: emit::multicover(&rep, fmt),
            }
        }
        Command::Table {
            curve,
            ranks,
            kind,
            tprec,
        } => {
            let mut rows = Vec::new();
            for n in ranks.0..=ranks.1 {
                rows.push(cache.hn(curve.params(), n, *tprec)?);
            }
            done(emit::table(&rows, *kind, fmt)?)
        }
    })
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::TruncationInsufficient(_) | Error::WindowInsufficient(_) => 2,
        Error::InvalidArgument(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let dir = std::env::var_os("HIGGSMOTIVE_CACHE")
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
        .or_else(|| cli.cache_dir.clone());
    let cache = Cache::new(dir);
    match run(&cli, &cache) {
        Ok(out) => {
            print!("{}", out.doc.render());
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
