use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use symsplit::cache::{default_dir, TableCache};
use symsplit::characters::{global, Decomposition};
use symsplit::closed_forms::{self, FormulaId, Range};
use symsplit::conjectures::{self, ScanId};
use symsplit::kronecker::{ag, kronecker_coefficient, sg, square_split};
use symsplit::modular::{self, ModularCheck};
use symsplit::partitions::{max_n, set_max_n, Partition};
use symsplit::report::{ClaimReport, Status, VerificationReport};
use symsplit::Error;

const EXIT_MISMATCH: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

/// Symmetric and alternating parts of Kronecker squares of symmetric group characters.
#[derive(Parser)]
#[command(name = "symsplit", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Character table cache directory (default: $SYMSPLIT_CACHE_DIR, then the user cache dir).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Largest n allowed; also the top of n-indexed sweeps.
    #[arg(long, global = true)]
    max_n: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose S²[λ] and A²[λ].
    Split {
        /// Partition such as 3,2,2 or 3,2^2.
        lambda: Partition,
        #[command(flatten)]
        format: Format,
    },
    /// Print g(λ,μ,ν), sg(λ,μ) or ag(λ,μ).
    Coeff {
        kind: CoeffKind,
        lambda: Partition,
        mu: Partition,
        nu: Option<Partition>,
    },
    /// Check a closed formula, modular identity or conjecture over a range.
    Verify(VerifyArgs),
    /// List every id accepted by `verify`.
    Ids,
    /// Manage persisted character tables.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Args)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    tsv: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffKind {
    G,
    Sg,
    Ag,
}

#[derive(Args)]
struct VerifyArgs {
    id: String,
    /// Top of k-indexed sweeps.
    #[arg(long)]
    max_k: Option<usize>,
    /// Run a single k.
    #[arg(long, conflicts_with = "n")]
    k: Option<usize>,
    /// Run a single n.
    #[arg(long)]
    n: Option<usize>,
    /// Allow the staircase checks beyond k = 4.
    #[arg(long)]
    long_run: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum CacheAction {
    Status,
    Clear,
    Warm {
        #[arg(long)]
        n: usize,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::ResourceGuard { .. } => EXIT_GUARD,
                Error::Parse { .. } | Error::Contract(_) => EXIT_USAGE,
                _ => EXIT_MISMATCH,
            })
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    if let Some(m) = cli.max_n {
        set_max_n(m)?;
    }
    match &cli.command {
        Command::Split { lambda, format } => split(cli, lambda, format),
        Command::Coeff {
            kind,
            lambda,
            mu,
            nu,
        } => coeff(cli, *kind, lambda, mu, nu.as_ref()),
        Command::Verify(args) => verify(cli, args),
        Command::Ids => {
            for id in all_ids() {
                println!("{id}");
            }
            Ok(true)
        }
        Command::Cache { action } => cache(cli, action),
    }
}

fn cache_handle(cli: &Cli) -> Option<TableCache> {
    cli.cache_dir
        .clone()
        .or_else(default_dir)
        .map(TableCache::new)
}

/// Installs a cached table for `n` when one is present and sound.
fn preload(cli: &Cli, n: usize) {
    if n > max_n() {
        return;
    }
    if let Some(cache) = cache_handle(cli) {
        if let Err(e) = cache.load_into(global(), n) {
            eprintln!("warning: ignoring cache: {e}");
        }
    }
}

fn half_line(name: &str, lambda: &Partition, d: &Decomposition) -> String {
    format!(
        "{name}[{}] = {d}",
        lambda
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

#[derive(Serialize)]
struct SplitJson<'a> {
    sym: &'a Decomposition,
    alt: &'a Decomposition,
}

fn split(cli: &Cli, lambda: &Partition, format: &Format) -> Outcome {
    preload(cli, lambda.size());
    let s = square_split(lambda)?;
    if format.json {
        let body = serde_json::to_string(&SplitJson {
            sym: &s.sym,
            alt: &s.alt,
        })
        .expect("serialisable");
        println!("{body}");
    } else if format.tsv {
        println!("part\tconstituent\tmultiplicity");
        for (half, d) in [("S", &s.sym), ("A", &s.alt)] {
            for (p, m) in d.iter() {
                println!("{half}\t{p}\t{m}");
            }
        }
    } else {
        println!("{}", half_line("S^2", lambda, &s.sym));
        println!("{}", half_line("A^2", lambda, &s.alt));
    }
    Ok(true)
}

fn coeff(
    cli: &Cli,
    kind: CoeffKind,
    lambda: &Partition,
    mu: &Partition,
    nu: Option<&Partition>,
) -> Outcome {
    let n = lambda.size();
    let shapes: Vec<&Partition> = [Some(mu), nu].into_iter().flatten().collect();
    if let Some(bad) = shapes.iter().find(|p| p.size() != n) {
        return Err(Failure::Usage(format!("{bad} is not a partition of {n}")));
    }
    preload(cli, n);
    let value = match (kind, nu) {
        (CoeffKind::G, Some(nu)) => kronecker_coefficient(lambda, mu, nu)?,
        (CoeffKind::G, None) => return Err(Failure::Usage("g needs three partitions".into())),
        (_, Some(_)) => return Err(Failure::Usage("sg and ag take two partitions".into())),
        (CoeffKind::Sg, None) => sg(lambda, mu)?,
        (CoeffKind::Ag, None) => ag(lambda, mu)?,
    };
    println!("{value}");
    Ok(true)
}

enum Target {
    Formula(FormulaId),
    Modular(ModularCheck),
    Scan(ScanId),
}

fn all_ids() -> Vec<&'static str> {
    let mut ids: Vec<&str> = FormulaId::ALL.iter().map(|f| f.name()).collect();
    ids.extend(ModularCheck::ALL.iter().map(|m| m.name()));
    ids.extend(ScanId::ALL.iter().map(|s| s.name()));
    ids
}

fn lookup(id: &str) -> Option<Target> {
    id.parse()
        .map(Target::Formula)
        .or_else(|_| id.parse().map(Target::Modular))
        .or_else(|_| id.parse().map(Target::Scan))
        .ok()
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    let target = lookup(&args.id).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown id {:?}; available ids:\n  {}",
            args.id,
            all_ids().join("\n  ")
        ))
    })?;
    let only = args.k.or(args.n);
    match target {
        Target::Formula(id) => {
            let max = if id.indexed_by_k() {
                args.max_k
            } else {
                cli.max_n
            };
            emit_verifications(closed_forms::verify(id, Range { max, only })?, args.json)
        }
        Target::Modular(check) => {
            // modular sweeps always start at the smallest case; a single value caps the range
            let max = only.or(if check.indexed_by_k() {
                args.max_k
            } else {
                cli.max_n
            });
            emit_verifications(modular::verify(check, max)?, args.json)
        }
        Target::Scan(scan) => {
            let (lo, hi) = scan.default_range();
            let top = if scan.indexed_by_k() {
                args.max_k
            } else {
                cli.max_n
            };
            let values: Vec<usize> = match only {
                Some(v) => vec![v],
                None => (lo..=top.unwrap_or(hi)).collect(),
            };
            if scan == ScanId::SaxlRefined && !args.long_run {
                if let Some(k) = values.iter().find(|&&k| k > 4) {
                    return Err(Failure::Usage(format!("k = {k} needs --long-run")));
                }
            }
            run_scans(scan, &values, args.json)
        }
    }
}

fn emit_verifications(reports: Vec<VerificationReport>, json: bool) -> Outcome {
    let ok = reports.iter().all(VerificationReport::passed);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("serialisable")
        );
    } else {
        for r in &reports {
            println!("{r}");
        }
        let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
        println!(
            "{} pass, {} fail, {} skip",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip)
        );
    }
    Ok(ok)
}

fn show(list: &[Partition]) -> String {
    if list.is_empty() {
        "none".into()
    } else {
        list.iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn run_scans(scan: ScanId, values: &[usize], json: bool) -> Outcome {
    let mut reports: Vec<ClaimReport> = Vec::new();
    let mut details: Vec<String> = Vec::new();
    for &v in values {
        match scan {
            ScanId::SaxlRefined => {
                let c = conjectures::saxl_refined_check(v)?;
                details.push(format!(
                    "k={v} n={} sym_missing: {}",
                    c.n,
                    show(&c.sym_missing)
                ));
                details.push(format!(
                    "k={v} n={} alt_missing: {}",
                    c.n,
                    show(&c.alt_missing)
                ));
                reports.extend(c.reports);
            }
            ScanId::HstzRefined => {
                let h = conjectures::hstz_refined_scan(v)?;
                details.push(format!(
                    "n={v} doubly_optimal_symmetric: {}",
                    show(&h.doubly_optimal_symmetric)
                ));
                reports.extend(h.reports);
            }
            _ => reports.extend(conjectures::run_scan(scan, v)?),
        }
    }
    let ok = reports.iter().all(ClaimReport::consistent);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("serialisable")
        );
    } else {
        for d in &details {
            println!("{d}");
        }
        for r in &reports {
            println!("{r}");
        }
    }
    Ok(ok)
}

fn cache(cli: &Cli, action: &CacheAction) -> Outcome {
    let cache = cache_handle(cli)
        .ok_or_else(|| Failure::Usage("no cache directory; pass --cache-dir".into()))?;
    match action {
        CacheAction::Status => {
            let entries = cache.status()?;
            println!("cache: {}", cache.dir().display());
            if entries.is_empty() {
                println!("empty");
            }
            for e in entries {
                let tag = if e.stale { " (stale format)" } else { "" };
                println!("n={} rows={}{tag}", e.n, e.rows);
            }
        }
        CacheAction::Clear => println!(
            "removed {} table(s) from {}",
            cache.clear()?,
            cache.dir().display()
        ),
        CacheAction::Warm { n } => {
            let (path, rows) = cache.warm(*n)?;
            println!("n={n} rows={rows} -> {}", path.display());
        }
    }
    Ok(true)
}
