mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use input::{graph_spec, index_list, read_graph, Format};
use rothlab::bounds::{baigolub_sweep, cycle_sweep, path_sweep, BoundRow};
use rothlab::census::{conjecture_sweep, run_census, CensusOptions, ConjectureKind, SweepOptions};
use rothlab::graph::InstanceJson;
use rothlab::report::{analyze, noise_recovery, AnalysisReport, NoiseConfig};
use rothlab::CompositeInstance;

/// Exit status for a completed run whose answer is negative.
const NEGATIVE: u8 = 3;

#[derive(Parser)]
#[command(name = "rothlab", version, about = "Sign pattern of the smallest signless Laplacian eigenvector on bipartite scaffolds")]
struct Cli {
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true, env = "ROTHLAB_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report on one instance; exit 0 if S-Roth, 3 if not.
    Analyze(AnalyzeArgs),
    /// Census table rows over all connected scaffolds.
    Census(CensusArgs),
    /// Recovery rate of the planted sign pattern under random edits.
    Noise(NoiseArgs),
    /// Search a conjectured family for instances that are not S-Roth; exit 3 if any.
    Conjecture(ConjectureArgs),
    /// Inverse and trace bound sweeps; exit 3 if any row fails.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 or edge-list file.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    format: Format,
    /// The input is H; S is this vertex list (e.g. `4-10` or `0,3,5`).
    #[arg(long, conflicts_with = "complete_scaffold", required_unless_present = "complete_scaffold")]
    s_vertices: Option<String>,
    /// The input is G; H is G joined with s independent vertices.
    #[arg(long, value_name = "S")]
    complete_scaffold: Option<usize>,
    /// Pretty-print the JSON.
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    t: usize,
    /// One or more sizes of S, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    s: Vec<usize>,
    /// Intra-T graph: K4, P4, C4 or graph6 (defaults to K_t).
    #[arg(long)]
    g: Option<String>,
    /// Directory for the scaffold cache and per-instance records.
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Continue from records in the cache directory.
    #[arg(long, requires = "cache_dir")]
    resume: bool,
    /// Permit sizes beyond the exhaustive limit.
    #[arg(long)]
    allow_long: bool,
    /// Count only scaffolds in which S is maximal independent.
    #[arg(long)]
    require_s_maximal: bool,
    /// Write the table here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NoiseArgs {
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 0)]
    deletions: usize,
    #[arg(long, default_value_t = 0)]
    additions: usize,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// One row per trial instead of the summary.
    #[arg(long)]
    per_trial: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Tree,
    Maxdeg,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long, default_value = "6-8")]
    s_range: String,
    #[arg(long, default_value = "7-9")]
    t_range: String,
    /// Also run pairs outside t > s ≥ 6.
    #[arg(long)]
    relaxed: bool,
    /// Largest t generated exhaustively; larger t is sampled.
    #[arg(long, default_value_t = 9)]
    exhaustive_max_t: usize,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sweep {
    Cycle,
    Path,
    Baigolub,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    sweep: Sweep,
    /// Block sizes (cycle, path).
    #[arg(long)]
    k_range: Option<String>,
    /// Shifts for the cycle sweep.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.5,1,2.1,3,5,10,50,100")]
    lambdas: Vec<f64>,
    /// Size of S for the path sweep.
    #[arg(long, default_value_t = 6)]
    s: usize,
    /// Random matrices for the Bai–Golub sweep.
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Serialize)]
struct AnalyzeOutput {
    #[serde(flatten)]
    report: AnalysisReport,
    graph: InstanceJson,
}

fn write_csv<T: Serialize>(rows: impl IntoIterator<Item = T>, out: Box<dyn Write>) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_analyze(a: AnalyzeArgs) -> Result<u8> {
    let g = read_graph(&a.input, a.format)?;
    let inst = match (a.complete_scaffold, &a.s_vertices) {
        (Some(s), _) => CompositeInstance::compose(s, &g, None)?,
        (None, Some(spec)) => CompositeInstance::from_graph(&g, &index_list(spec)?)?,
        (None, None) => bail!("give --s-vertices or --complete-scaffold"),
    };
    let report = analyze(&inst)?;
    let code = if report.s_roth { 0 } else { NEGATIVE };
    let out = AnalyzeOutput { report, graph: inst.to_json() };
    let text = if a.pretty { serde_json::to_string_pretty(&out)? } else { serde_json::to_string(&out)? };
    println!("{text}");
    Ok(code)
}

fn cmd_census(a: CensusArgs) -> Result<u8> {
    let g = match &a.g {
        Some(spec) => graph_spec(spec)?,
        None => rothlab::Graph::complete(a.t),
    };
    let opts = CensusOptions {
        jobs: None,
        cache_dir: a.cache_dir,
        resume: a.resume,
        allow_long: a.allow_long,
        require_s_maximal: a.require_s_maximal,
    };
    let mut rows = Vec::new();
    for &s in &a.s {
        let out = run_census(a.t, s, &g, &opts).with_context(|| format!("census t={} s={s}", a.t))?;
        if out.resumed > 0 {
            eprintln!("s={s}: reused {} records", out.resumed);
        }
        rows.push(out.row);
    }
    match &a.out {
        Some(p) => {
            write_csv(&rows, Box::new(std::fs::File::create(p).with_context(|| format!("creating {}", p.display()))?))?;
            println!("{}", p.display());
        }
        None => write_csv(&rows, Box::new(std::io::stdout()))?,
    }
    Ok(0)
}

#[derive(Serialize)]
struct NoiseRow {
    s: usize,
    t: usize,
    deletions: usize,
    additions: usize,
    trials: usize,
    recovered: usize,
    rate: f64,
}

fn cmd_noise(a: NoiseArgs) -> Result<u8> {
    let cfg = NoiseConfig { s: a.s, t: a.t, deletions: a.deletions, additions: a.additions, trials: a.trials, seed: a.seed };
    let r = noise_recovery(&cfg)?;
    if a.per_trial {
        write_csv(&r.trials, Box::new(std::io::stdout()))?;
    } else {
        let row = NoiseRow {
            s: cfg.s,
            t: cfg.t,
            deletions: cfg.deletions,
            additions: cfg.additions,
            trials: cfg.trials,
            recovered: r.recovered,
            rate: r.rate,
        };
        write_csv([row], Box::new(std::io::stdout()))?;
    }
    Ok(0)
}

fn cmd_conjecture(a: ConjectureArgs) -> Result<u8> {
    let kind = match a.kind {
        Kind::Tree => ConjectureKind::Tree,
        Kind::Maxdeg => ConjectureKind::MaxDeg,
    };
    let opts = SweepOptions { relaxed: a.relaxed, exhaustive_max_t: a.exhaustive_max_t, samples: a.samples, seed: a.seed };
    let r = conjecture_sweep(kind, index_list(&a.s_range)?, index_list(&a.t_range)?, &opts)?;
    eprintln!("checked {}, skipped {} pairs, {} counterexamples", r.checked, r.skipped.len(), r.counterexamples.len());
    let found = !r.counterexamples.is_empty();
    write_csv(r.counterexamples, Box::new(std::io::stdout()))?;
    Ok(if found { NEGATIVE } else { 0 })
}

fn cmd_bounds(a: BoundsArgs) -> Result<u8> {
    let ks = |default: &str| index_list(a.k_range.as_deref().unwrap_or(default));
    let rows: Vec<BoundRow> = match a.sweep {
        Sweep::Cycle => cycle_sweep(&ks("3-200")?, &a.lambdas)?,
        Sweep::Path => path_sweep(a.s, &ks("3-60")?)?,
        Sweep::Baigolub => baigolub_sweep(a.count, a.n_max, a.seed)?,
    };
    let failed = rows.iter().filter(|r| !r.holds).count();
    eprintln!("{} rows, {failed} violated", rows.len());
    write_csv(rows, Box::new(std::io::stdout()))?;
    Ok(if failed > 0 { NEGATIVE } else { 0 })
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global().context("thread pool")?;
    }
    match cli.cmd {
        Cmd::Analyze(a) => cmd_analyze(a),
        Cmd::Census(a) => cmd_census(a),
        Cmd::Noise(a) => cmd_noise(a),
        Cmd::Conjecture(a) => cmd_conjecture(a),
        Cmd::Bounds(a) => cmd_bounds(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
