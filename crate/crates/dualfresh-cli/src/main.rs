//! `dualfresh`: closed-form and simulated age-of-information metrics for
//! dual-source status-update systems.

mod output;
mod sweep;
mod system;
mod validate;

use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use dualfresh::sim::{run, SimConfig, TransitionRecord};
use serde::Deserialize;
use serde_json::{json, Value};

use output::{fmt, sig12, Metric};
use system::SystemArgs;

#[derive(Parser)]
#[command(
    name = "dualfresh",
    version,
    about = "Age-of-information metrics for dual-source status-update systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate closed-form metrics for a system that has them.
    Analytic(AnalyticArgs),
    /// Run the discrete-event simulator and print statistics as JSON.
    Simulate(SimulateArgs),
    /// Evaluate metrics over a parameter grid and write CSV.
    Sweep(sweep::SweepArgs),
    /// Cross-check closed forms, state graph, and simulator; print a report.
    Validate(ValidateArgs),
}

#[derive(Debug, clap::Args)]
struct AnalyticArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Metrics to print, comma separated (default: all).
    #[arg(long, value_enum, value_delimiter = ',')]
    metrics: Option<Vec<Metric>>,
    /// Emit JSON instead of the plain table.
    #[arg(long)]
    json: bool,
}

#[derive(Debug, clap::Args)]
struct SimulateArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Master seed (default: config file, then DUALFRESH_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
    /// Accepted deliveries to measure after warmup.
    #[arg(long)]
    accepted: Option<u64>,
    /// Accepted deliveries discarded before measurement.
    #[arg(long)]
    warmup: Option<u64>,
    /// Batch count for the confidence intervals.
    #[arg(long)]
    batches: Option<usize>,
    /// TOML file with defaults for seed/accepted/warmup/batches.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Write the refresh trace to this CSV file.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct ValidateArgs {
    /// Master seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Optional key-value configuration; flags take precedence over every key.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub seed: Option<u64>,
    pub accepted: Option<u64>,
    pub warmup: Option<u64>,
    pub batches: Option<usize>,
    pub replications: Option<u32>,
    pub workers: Option<usize>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(FileConfig::default());
        };
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("invalid config file {}", path.display()))
    }
}

/// Run-size knobs after merging flags, config file, and defaults.
pub struct RunControls {
    pub accepted: u64,
    pub warmup: u64,
    pub batches: usize,
    pub replications: u32,
}

/// Seed precedence: flag, then config file, then DUALFRESH_SEED, then 0.
pub fn resolve_seed(flag: Option<u64>, file: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag.or(file) {
        return Ok(seed);
    }
    match std::env::var("DUALFRESH_SEED") {
        Ok(text) => text
            .trim()
            .parse()
            .map_err(|_| anyhow!("DUALFRESH_SEED must be an unsigned integer, got {text:?}")),
        Err(_) => Ok(0),
    }
}

fn cmd_analytic(args: AnalyticArgs) -> Result<()> {
    let resolved = system::resolve(&args.system)?;
    let closed = resolved
        .closed()
        .ok_or_else(|| anyhow!("--system {}: no closed form; use simulate", resolved.label()))?;
    let metrics = args.metrics.unwrap_or_else(|| Metric::ALL.to_vec());

    if args.json {
        let mut table = serde_json::Map::new();
        for metric in &metrics {
            table.insert(metric.name().into(), Value::from(sig12(closed.pick(*metric))));
        }
        let doc = json!({
            "config": { "system": resolved.echo() },
            "metrics": table,
        });
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("system {}", resolved.label());
        for metric in &metrics {
            println!("{} {}", metric.name(), fmt(closed.pick(*metric)));
        }
    }
    Ok(())
}

fn cmd_simulate(args: SimulateArgs) -> Result<()> {
    let file = FileConfig::load(args.config.as_deref())?;
    let resolved = system::resolve(&args.system)?;
    let spec = resolved
        .spec()?
        .ok_or_else(|| anyhow!("--system single has no simulator; use analytic"))?;
    let seed = resolve_seed(args.seed, file.seed)?;
    let accepted = args.accepted.or(file.accepted).unwrap_or(100_000);
    let warmup = args.warmup.or(file.warmup).unwrap_or(1_000);
    let batches = args.batches.or(file.batches).unwrap_or(32);

    let mut config = SimConfig::new(spec, seed);
    config.target_accepted = accepted
        .checked_add(warmup)
        .ok_or_else(|| anyhow!("--accepted plus --warmup overflows"))?;
    config.warmup_accepted = warmup;
    config.batch_count = batches;
    config.emit_trace = args.trace.is_some();
    let output = run(&config)?;
    if let Some(path) = &args.trace {
        write_trace(path, &output.trace)
            .with_context(|| format!("cannot write trace to {}", path.display()))?;
    }

    let stats = &output.stats;
    let reference = match resolved.closed() {
        Some(closed) => json!({
            "avg_aoi": sig12(closed.avg_aoi),
            "avg_aoi_rel_error": sig12((stats.avg_aoi - closed.avg_aoi).abs() / closed.avg_aoi),
            "avg_paoi": sig12(closed.avg_paoi),
            "avg_paoi_rel_error": sig12((stats.avg_paoi - closed.avg_paoi).abs() / closed.avg_paoi),
        }),
        None => Value::Null,
    };
    let doc = json!({
        "config": {
            "system": resolved.echo(),
            "seed": seed,
            "accepted": accepted,
            "warmup": warmup,
            "batches": batches,
            "target_accepted": config.target_accepted,
        },
        "stats": {
            "avg_aoi": sig12(stats.avg_aoi),
            "avg_paoi": sig12(stats.avg_paoi),
            "effective_arrival_rate": sig12(stats.effective_arrival_rate),
            "obsolete_ratio": sig12(stats.obsolete_ratio),
            "n_accepted": stats.n_accepted,
            "n_obsolete": stats.n_obsolete,
            "sim_time": sig12(stats.sim_time),
            "half_width_aoi": sig12(stats.half_width_aoi),
            "half_width_paoi": sig12(stats.half_width_paoi),
        },
        "reference": reference,
    });
    println!("{}", serde_json::to_string_pretty(&doc)?);
    Ok(())
}

fn write_trace(path: &Path, trace: &[TransitionRecord]) -> Result<()> {
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record([
        "t",
        "gen_time",
        "sensor",
        "prev_state",
        "new_state",
        "path_l",
        "Y",
        "T_service",
    ])?;
    for rec in trace {
        writer.write_record([
            fmt(rec.t),
            fmt(rec.gen_time),
            rec.sensor.label().to_string(),
            rec.prev_state.map_or(String::new(), |s| s.label().to_string()),
            rec.new_state.map_or(String::new(), |s| s.label().to_string()),
            rec.path.map_or(String::new(), |p| p.to_string()),
            fmt(rec.gap),
            fmt(rec.service),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

fn dispatch() -> Result<()> {
    match Cli::parse().command {
        Command::Analytic(args) => cmd_analytic(args),
        Command::Simulate(args) => cmd_simulate(args),
        Command::Sweep(args) => sweep::cmd_sweep(args),
        Command::Validate(args) => {
            let file = FileConfig::load(args.config.as_deref())?;
            validate::cmd_validate(resolve_seed(args.seed, file.seed)?)
        }
    }
}

fn main() -> std::process::ExitCode {
    if let Err(e) = dispatch() {
        eprintln!("error: {e:#}");
        return std::process::ExitCode::FAILURE;
    }
    std::process::ExitCode::SUCCESS
}
