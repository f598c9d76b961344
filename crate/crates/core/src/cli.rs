//! Command-line front end. Exit codes: 0 success, 1 a violation or
//! containment was found, 2 usage or input error.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, check_consistency, LemmaConfig, Suite};
use crate::cache::{Cache, CacheRecord, ENGINE_VERSION};
use crate::constructions::{self, Family};
use crate::doublestar::{contains_double_star, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph6::{self, GRAPH6_MAX_VERTICES};
use crate::planarity::is_planar;
use crate::search::{exact_planar_turan, SearchConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "planar-turan", version, about = "Exact planar Turán numbers of double stars S_{m,k}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute ex_P(n, S_{m,k}) by exhaustive search.
    Exact(ExactArgs),
    /// Build and certify a lower-bound construction.
    Construct(ConstructArgs),
    /// Check graph6 lines from standard input for the pattern.
    Verify(VerifyArgs),
    /// Compare computed values with the known bounds and conjectures.
    Bounds(BoundsArgs),
    /// Run structural predicate suites.
    Lemmas(LemmasArgs),
}

#[derive(Args, Debug)]
struct ExactArgs {
    #[arg(long)]
    n: usize,
    /// Pattern as M,K.
    #[arg(long)]
    pattern: String,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Stop after this many search nodes; the value is then a lower bound.
    #[arg(long)]
    budget: Option<u64>,
    /// Append-only result cache.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    copies: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    pattern: String,
    /// Report non-planar inputs as NONPLANAR instead of testing them.
    #[arg(long)]
    require_planar: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Table,
    Records,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    #[arg(long)]
    pattern: String,
    /// Inclusive range of orders, A..B.
    #[arg(long)]
    range: String,
    /// Compute exact values for orders up to this one.
    #[arg(long)]
    exact_upto: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Args, Debug)]
struct LemmasArgs {
    /// Suite name, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Exact(a) => exact(a, stdout, stderr),
        Command::Construct(a) => construct(a, stdout),
        Command::Verify(a) => verify(a, stdin, stdout),
        Command::Bounds(a) => bounds_cmd(a, stdout),
        Command::Lemmas(a) => lemmas(a, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Io(e)) => {
            let _ = writeln!(stderr, "error: output failed: {e}");
            EXIT_USAGE
        }
        Err(CliError::Engine(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum CliError {
    Io(std::io::Error),
    Engine(Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

type CliResult = std::result::Result<i32, CliError>;

/// Parses `M,K` and announces a swap when `M > K`.
fn pattern_arg(text: &str, out: &mut dyn Write) -> std::result::Result<DoubleStarPattern, CliError> {
    let p: DoubleStarPattern = text.parse()?;
    let first = text.split(',').next().and_then(|m| m.trim().parse::<usize>().ok());
    if first != Some(p.m()) {
        writeln!(out, "# pattern {} read as {p}", text.trim())?;
    }
    Ok(p)
}

fn search_config(threads: Option<usize>) -> Result<SearchConfig> {
    let mut cfg = SearchConfig::default();
    if let Some(t) = threads {
        if t == 0 {
            return Err(Error::OutOfRange("--threads must be at least 1".into()));
        }
        cfg.worker_count = t;
    }
    Ok(cfg)
}

fn exact(a: ExactArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let p = pattern_arg(&a.pattern, out)?;
    let cache = a.cache.map(Cache::new);
    if let Some(hit) = cache.as_ref().map(|c| c.lookup(a.n, p)).transpose()?.flatten() {
        writeln!(out, "value={} exact=true", hit.record.value)?;
        writeln!(out, "source=cache")?;
        writeln!(out, "{}", hit.record.witness)?;
        return Ok(EXIT_OK);
    }

    let mut cfg = search_config(a.threads)?;
    cfg.node_budget = a.budget;
    let r = exact_planar_turan(a.n, p, &cfg)?;
    writeln!(out, "value={} exact={}", r.value, r.exact)?;
    match r.extremal_classes {
        Some(c) => writeln!(out, "extremal_classes={c}")?,
        None => writeln!(out, "extremal_classes=unknown")?,
    }
    let witnesses: Vec<String> = r.extremal.iter().map(graph6::encode).collect::<Result<_>>()?;
    for w in &witnesses {
        writeln!(out, "{w}")?;
    }
    writeln!(err, "nodes={} elapsed_ms={}", r.nodes_explored, r.elapsed.as_millis())?;

    if let (Some(cache), Some(witness)) = (cache, witnesses.first()) {
        cache.append(&CacheRecord {
            n: a.n,
            pattern: p,
            value: r.value,
            exact: r.exact,
            witness: witness.clone(),
            version: ENGINE_VERSION.to_string(),
        })?;
    }
    Ok(EXIT_OK)
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> CliResult {
    let family: Family = a.family.parse()?;
    let report = match constructions::build(family, a.n, a.copies) {
        Ok(r) => r,
        Err(e @ Error::Verification { .. }) => {
            writeln!(out, "FAILED {e}")?;
            return Ok(EXIT_VIOLATION);
        }
        Err(e) => return Err(e.into()),
    };
    let g = &report.graph;
    if g.vertex_count() <= GRAPH6_MAX_VERTICES {
        writeln!(out, "{}", graph6::encode(g)?)?;
    } else {
        writeln!(out, "# graph6 unavailable for n={} > {GRAPH6_MAX_VERTICES}", g.vertex_count())?;
    }
    writeln!(out, "family={} copies={} n={}", report.family, report.copies, g.vertex_count())?;
    writeln!(
        out,
        "edges={} planar={} free({})={}",
        g.edge_count(),
        report.verified_planar,
        report.verified_free_of,
        true
    )?;
    let profile: Vec<String> = report.degree_profile.iter().map(|(d, c)| format!("{d}:{c}")).collect();
    writeln!(out, "predicted_edges={} degrees={}", report.predicted_edges, profile.join(","))?;
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, stdin: &mut dyn Read, out: &mut dyn Write) -> CliResult {
    let p = pattern_arg(&a.pattern, out)?;
    let mut bytes = Vec::new();
    stdin.read_to_end(&mut bytes)?;
    let text = String::from_utf8_lossy(&bytes);
    let (mut malformed, mut violations) = (false, false);
    for (line, decoded) in graph6::decode_lines(&text) {
        let g = match decoded {
            Ok(g) => g,
            Err(e) => {
                malformed = true;
                writeln!(out, "line {line}: ERROR {e}")?;
                continue;
            }
        };
        if a.require_planar && !is_planar(&g) {
            violations = true;
            writeln!(out, "line {line}: NONPLANAR")?;
            continue;
        }
        match contains_double_star(&g, p) {
            Some(w) => {
                violations = true;
                writeln!(out, "line {line}: CONTAINS {w}")?;
            }
            None => writeln!(out, "line {line}: FREE")?,
        }
    }
    Ok(if malformed {
        EXIT_USAGE
    } else if violations {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::OutOfRange(format!("expected a range A..B, got {text:?}"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(Error::OutOfRange(format!("range {text:?} must satisfy 1 <= A <= B")));
    }
    Ok((a, b))
}

fn bounds_cmd(a: BoundsArgs, out: &mut dyn Write) -> CliResult {
    let p = pattern_arg(&a.pattern, out)?;
    let (lo, hi) = parse_range(&a.range)?;
    let mut cfg = search_config(a.threads)?;
    cfg.collect_extremal = false;
    let mut reports = Vec::new();
    for n in lo..=hi {
        let exact = match a.exact_upto {
            Some(x) if n <= x => Some(exact_planar_turan(n, p, &cfg)?.value),
            _ => None,
        };
        reports.push(check_consistency(p, n, exact)?);
    }
    let text = match a.format {
        Format::Table => bounds::render_table(&reports),
        Format::Records => bounds::render_records(&reports),
    };
    out.write_all(text.as_bytes())?;
    Ok(if reports.iter().all(|r| r.consistent) { EXIT_OK } else { EXIT_VIOLATION })
}

fn lemmas(a: LemmasArgs, out: &mut dyn Write) -> CliResult {
    let suites = Suite::parse_many(&a.suite)?;
    let cfg = LemmaConfig {
        samples: a.samples,
        seed: a.seed,
        ..LemmaConfig::default()
    };
    let mut failed = false;
    for s in suites {
        let outcome = bounds::run_suite(s, &cfg)?;
        failed |= !outcome.passed;
        writeln!(out, "{outcome}")?;
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}
