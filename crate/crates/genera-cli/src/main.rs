//! Command-line front end: compute single genus values, tabulate sweeps,
//! and run the identity verification harness.
//!
//! Exit codes: 0 success, 1 verification or internal failure, 2 invalid
//! input. All rational values are emitted as exact strings `p` or `p/q`;
//! no output ever contains a floating-point literal.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use genera::closed::{ahat_closed, ak_closed, euler_closed, todd_t2};
use genera::engine::genus_value;
use genera::oracle::genus_value_oracle;
use genera::rational::{format_rational, parse_rational, Rational};
use genera::verify::{self, Bounds, VerifyReport};
use genera::{Error, Genus, Space};

const CUSTOM_FILE_HELP: &str = "\
CUSTOM GENUS FILES:
  Line-oriented text; '#' starts a comment and blank lines are skipped.
  The first content line must be `name: <string>`. Every following line
  holds one rational coefficient of Q(x) = 1 + q1 x + q2 x^2 + ...,
  one per line, q1 first. Rationals are written `p` or `p/q` with q > 0,
  for example `-1/24`. Computing on a space of dimension n needs at least
  n coefficients.

EXIT CODES:
  0  success        1  verification or internal failure        2  bad input";

#[derive(Parser)]
#[command(
    name = "genera",
    version,
    about = "Exact Hirzebruch genera of complete intersections X_n(d1,...,dr)",
    after_help = CUSTOM_FILE_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one genus value and print it as a JSON record
    Compute(ComputeArgs),
    /// Tabulate genus values over all spaces within bounds
    Table(TableArgs),
    /// Run identity verification sweeps; exits 0 only if every check passes
    Verify(VerifyArgs),
}

#[derive(Args)]
#[command(after_help = CUSTOM_FILE_HELP)]
struct ComputeArgs {
    /// Complex dimension n
    #[arg(short = 'n', long = "dimension")]
    dimension: usize,

    /// Degrees d1,d2,... (omit for projective space)
    #[arg(short = 'd', long = "degrees", value_delimiter = ',')]
    degrees: Vec<u32>,

    /// Genus: todd, ahat, signature, euler, ty, ak, alpha or custom
    #[arg(long)]
    genus: String,

    /// Evaluation point for ty, as a rational (e.g. 1/2 or -1)
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,

    /// Index k >= 1 for ak
    #[arg(long)]
    k: Option<u32>,

    /// Computation route (alpha always uses its closed form)
    #[arg(long, value_enum, default_value_t = Method::Residue)]
    method: Method,

    /// Custom genus coefficient file (format below)
    #[arg(long)]
    custom: Option<PathBuf>,

    /// Output format; compute always emits a single JSON object
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Args)]
struct TableArgs {
    /// Dimension or inclusive range, e.g. 3 or 1..4
    #[arg(short = 'n', long = "dimension")]
    dimension: String,

    /// Largest degree to enumerate
    #[arg(long, default_value_t = 4)]
    dmax: u32,

    /// Largest number of hypersurfaces to enumerate
    #[arg(long, default_value_t = 2)]
    rmax: usize,

    /// Comma-separated genus names (as for compute)
    #[arg(long, value_delimiter = ',')]
    genus: Vec<String>,

    /// Evaluation point for ty entries
    #[arg(long, allow_hyphen_values = true)]
    y: Option<String>,

    /// Index for ak entries
    #[arg(long)]
    k: Option<u32>,

    /// Custom genus coefficient file for custom entries
    #[arg(long)]
    custom: Option<PathBuf>,

    /// Output format
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Args)]
#[command(after_help = identity_help())]
struct VerifyArgs {
    /// Largest dimension in the sweep
    #[arg(long, default_value_t = 6)]
    nmax: usize,

    /// Largest degree in the sweep
    #[arg(long, default_value_t = 4)]
    dmax: u32,

    /// Largest number of hypersurfaces in the sweep
    #[arg(long, default_value_t = 2)]
    rmax: usize,

    /// Run every identity (the default when --only is absent)
    #[arg(long, conflicts_with = "only")]
    all: bool,

    /// Run only the named identity; may be repeated
    #[arg(long)]
    only: Vec<String>,

    /// Output format: text summary or one JSON object per report
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    format: VerifyFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Residue,
    Closed,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Residue => "residue",
            Method::Closed => "closed",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyFormat {
    Text,
    Jsonl,
}

fn identity_help() -> String {
    let mut s = String::from("IDENTITIES (for --only):\n");
    for (name, description) in verify::IDENTITIES {
        s.push_str(&format!("  {name:<18} {description}\n"));
    }
    s
}

/// A failure with its exit code: 2 for bad input, 1 for everything else.
enum Failure {
    Usage(String),
    Internal(String),
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure::Usage(msg.into())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CoeffBeyondOrder { .. }
            | Error::RecipZeroConstant
            | Error::ExpNonzeroConstant
            | Error::LogConstantNotOne => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Write one output line, exiting quietly when the consumer closed the pipe.
fn emit(out: &mut impl Write, line: std::fmt::Arguments) {
    let result = out.write_fmt(line).and_then(|_| out.write_all(b"\n"));
    if let Err(e) = result {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Table(args) => table(args),
        Command::Verify(args) => verify_cmd(args),
    }
}

#[derive(Serialize)]
struct ComputeRecord<'a> {
    dimension: usize,
    degrees: &'a [u32],
    genus: &'a str,
    params: serde_json::Map<String, serde_json::Value>,
    c1: i64,
    spin: bool,
    value: String,
    method: &'a str,
}

fn compute(args: ComputeArgs) -> Result<ExitCode, Failure> {
    if args.format != "json" {
        return Err(Failure::usage("compute only supports --format json"));
    }
    let space = Space::new(args.dimension, args.degrees.clone())?;

    let record = if args.genus == "alpha" {
        let alpha = genera::closed::alpha_invariant(&space)?;
        let mut params = serde_json::Map::new();
        params.insert("form".into(), alpha.form().into());
        ComputeRecord {
            dimension: space.n(),
            degrees: space.degrees(),
            genus: "alpha",
            params,
            c1: space.c1(),
            spin: space.is_spin(),
            value: format_rational(&alpha.value()),
            method: "closed",
        }
    } else {
        let resolved = ResolvedGenus::resolve(
            &args.genus,
            args.y.as_deref(),
            args.k,
            args.custom.as_deref(),
        )?;
        let value = evaluate(&space, &resolved.genus, args.method)?;
        ComputeRecord {
            dimension: space.n(),
            degrees: space.degrees(),
            genus: resolved.base_name,
            params: resolved.params,
            c1: space.c1(),
            spin: space.is_spin(),
            value: format_rational(&value),
            method: args.method.name(),
        }
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    emit(
        &mut out,
        format_args!(
            "{}",
            serde_json::to_string(&record).expect("record serializes")
        ),
    );
    Ok(ExitCode::SUCCESS)
}

/// A resolved genus plus the name/params split used in output records.
struct ResolvedGenus {
    genus: Genus,
    base_name: &'static str,
    params: serde_json::Map<String, serde_json::Value>,
}

impl ResolvedGenus {
    fn resolve(
        name: &str,
        y: Option<&str>,
        k: Option<u32>,
        custom: Option<&std::path::Path>,
    ) -> Result<ResolvedGenus, Failure> {
        let mut params = serde_json::Map::new();
        let (genus, base_name) = match name {
            "todd" => (Genus::Todd, "todd"),
            "ahat" => (Genus::Ahat, "ahat"),
            "signature" => (Genus::Signature, "signature"),
            "euler" => (Genus::Euler, "euler"),
            "ty" => {
                let y = y.ok_or_else(|| Failure::usage("--genus ty needs --y <rational>"))?;
                let y = parse_rational(y)?;
                params.insert("y".into(), format_rational(&y).into());
                let genus = Genus::ty(y);
                if genus == Genus::Euler {
                    // the y = -1 limit is the Euler characteristic
                    params.clear();
                    (Genus::Euler, "euler")
                } else {
                    (genus, "ty")
                }
            }
            "ak" => {
                let k = k.ok_or_else(|| Failure::usage("--genus ak needs --k <integer>"))?;
                if k < 1 {
                    return Err(Failure::usage("--k must be at least 1"));
                }
                params.insert("k".into(), k.into());
                (Genus::ak(k), "ak")
            }
            "custom" => {
                let path =
                    custom.ok_or_else(|| Failure::usage("--genus custom needs --custom <file>"))?;
                let genus = Genus::from_file(path)?;
                if let Genus::Custom { name, .. } = &genus {
                    params.insert("name".into(), name.clone().into());
                }
                (genus, "custom")
            }
            other => {
                return Err(Failure::usage(format!(
                    "unknown genus {other:?}; expected todd, ahat, signature, euler, ty, ak, alpha or custom"
                )))
            }
        };
        Ok(ResolvedGenus {
            genus,
            base_name,
            params,
        })
    }
}

fn evaluate(space: &Space, genus: &Genus, method: Method) -> Result<Rational, Failure> {
    match method {
        Method::Residue => Ok(genus_value(space, genus)?),
        Method::Oracle => Ok(genus_value_oracle(space, genus)?),
        Method::Closed => match genus {
            Genus::Todd => Ok(todd_t2(space)),
            Genus::Ahat => Ok(ahat_closed(space)),
            Genus::Euler => Ok(euler_closed(space)),
            Genus::Ak(k) => Ok(ak_closed(space, *k)),
            other => Err(Failure::usage(format!(
                "no closed-form route for {other}; use --method residue or oracle"
            ))),
        },
    }
}

#[derive(Serialize)]
struct TableRow<'a> {
    n: usize,
    degrees: &'a [u32],
    c1: i64,
    spin: bool,
    genus: String,
    value: String,
}

fn table(args: TableArgs) -> Result<ExitCode, Failure> {
    let (lo, hi) = parse_dimension_range(&args.dimension)?;
    if args.dmax < 1 {
        return Err(Failure::usage("--dmax must be at least 1"));
    }
    if args.genus.is_empty() || args.genus.iter().any(|g| g.is_empty()) {
        return Err(Failure::usage("--genus needs at least one genus name"));
    }

    let mut genera = Vec::new();
    for name in &args.genus {
        if name == "alpha" {
            return Err(Failure::usage(
                "alpha is not tabulated; use compute for single alpha values",
            ));
        }
        let resolved = ResolvedGenus::resolve(
            name,
            args.y.as_deref(),
            args.k,
            args.custom.as_deref(),
        )?;
        genera.push(resolved.genus);
    }
    genera.sort_by_key(|g| g.name());
    genera.dedup();

    let tuples = verify::degree_tuples(args.dmax, args.rmax);
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());

    if args.format == TableFormat::Csv {
        emit(&mut out, format_args!("n,degrees,c1,spin,genus,value"));
    }
    for n in lo..=hi {
        for tuple in &tuples {
            let space = Space::new(n, tuple.clone())?;
            for genus in &genera {
                let value = genus_value(&space, genus)?;
                let row = TableRow {
                    n,
                    degrees: space.degrees(),
                    c1: space.c1(),
                    spin: space.is_spin(),
                    genus: genus.name(),
                    value: format_rational(&value),
                };
                match args.format {
                    TableFormat::Csv => {
                        let degrees = row
                            .degrees
                            .iter()
                            .map(|d| d.to_string())
                            .collect::<Vec<_>>()
                            .join(" ");
                        emit(
                            &mut out,
                            format_args!(
                                "{},{},{},{},{},{}",
                                row.n, degrees, row.c1, row.spin, row.genus, row.value
                            ),
                        );
                    }
                    TableFormat::Jsonl => {
                        emit(
                            &mut out,
                            format_args!(
                                "{}",
                                serde_json::to_string(&row).expect("row serializes")
                            ),
                        );
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_dimension_range(text: &str) -> Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("bad dimension {text:?}; expected n or a..b"));
    if let Some((a, b)) = text.split_once("..") {
        let lo: usize = a.parse().map_err(|_| bad())?;
        let hi: usize = b.parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(Failure::usage(format!("empty dimension range {text:?}")));
        }
        Ok((lo, hi))
    } else {
        let n: usize = text.parse().map_err(|_| bad())?;
        Ok((n, n))
    }
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    identity: &'a str,
    instance: &'a str,
    lhs: &'a str,
    rhs: &'a str,
    pass: bool,
}

fn verify_cmd(args: VerifyArgs) -> Result<ExitCode, Failure> {
    if args.dmax < 1 {
        return Err(Failure::usage("--dmax must be at least 1"));
    }
    let bounds = Bounds {
        nmax: args.nmax,
        dmax: args.dmax,
        rmax: args.rmax,
    };

    let selected: Vec<&'static str> = if args.only.is_empty() {
        verify::IDENTITIES.iter().map(|(name, _)| *name).collect()
    } else {
        let mut names = Vec::new();
        for wanted in &args.only {
            let known = verify::IDENTITIES
                .iter()
                .map(|(name, _)| *name)
                .find(|name| name == wanted)
                .ok_or_else(|| {
                    Failure::usage(format!(
                        "unknown identity {wanted:?}; see `genera verify --help` for the list"
                    ))
                })?;
            names.push(known);
        }
        names
    };

    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut total = 0usize;
    let mut failed = 0usize;

    for identity in &selected {
        let reports = verify::run(identity, &bounds)?;
        let failures: Vec<&VerifyReport> = reports.iter().filter(|r| !r.pass).collect();
        total += reports.len();
        failed += failures.len();
        match args.format {
            VerifyFormat::Text => {
                for f in &failures {
                    emit(
                        &mut out,
                        format_args!(
                            "FAIL {} {}: lhs = {} vs rhs = {}",
                            f.identity, f.instance, f.lhs, f.rhs
                        ),
                    );
                }
                if failures.is_empty() {
                    emit(
                        &mut out,
                        format_args!("ok {identity}: {} checks", reports.len()),
                    );
                } else {
                    emit(
                        &mut out,
                        format_args!(
                            "FAIL {identity}: {} of {} checks failed",
                            failures.len(),
                            reports.len()
                        ),
                    );
                }
            }
            VerifyFormat::Jsonl => {
                for r in &reports {
                    let record = ReportRecord {
                        identity: r.identity,
                        instance: &r.instance,
                        lhs: &r.lhs,
                        rhs: &r.rhs,
                        pass: r.pass,
                    };
                    emit(
                        &mut out,
                        format_args!(
                            "{}",
                            serde_json::to_string(&record).expect("report serializes")
                        ),
                    );
                }
            }
        }
    }

    emit(
        &mut out,
        format_args!(
            "summary: {} identities, {} checks, {} failures",
            selected.len(),
            total,
            failed
        ),
    );
    let _ = out.flush();

    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
