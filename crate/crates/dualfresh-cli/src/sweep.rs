//! Parameter sweeps: evaluate closed forms and/or simulate over a grid and
//! emit CSV with a fixed schema.

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::ValueEnum;
use dualfresh::sim::{run, SimConfig};
use dualfresh::DdOffset;
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::output::{fmt, Metric};
use crate::system::{CliSystem, ResolvedSystem};
use crate::{FileConfig, RunControls};

pub const HEADER: [&str; 7] = [
    "system",
    "param",
    "metric",
    "analytic",
    "simulated",
    "ci_half_width",
    "seed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Variable {
    /// Equal per-sensor service rate; the grid value is that rate.
    ServiceRate,
    /// Sensor B rate over sensor A rate, with sensor A fixed at rate 1.
    RateRatio,
    /// Deterministic period of sensor B, with sensor A fixed at rate 1.
    Period,
}

impl Variable {
    fn label(self) -> &'static str {
        match self {
            Variable::ServiceRate => "service-rate",
            Variable::RateRatio => "rate-ratio",
            Variable::Period => "period",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Analytic,
    Simulate,
    Both,
}

impl Mode {
    fn label(self) -> &'static str {
        match self {
            Mode::Analytic => "analytic",
            Mode::Simulate => "simulate",
            Mode::Both => "both",
        }
    }

    fn simulates(self) -> bool {
        matches!(self, Mode::Simulate | Mode::Both)
    }

    fn analyzes(self) -> bool {
        matches!(self, Mode::Analytic | Mode::Both)
    }
}

#[derive(Debug, clap::Args)]
pub struct SweepArgs {
    /// Systems to sweep, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub systems: Vec<CliSystem>,
    /// Grid variable.
    #[arg(long, value_enum)]
    pub variable: Variable,
    /// First grid value.
    #[arg(long)]
    pub start: f64,
    /// Last grid value (inclusive).
    #[arg(long)]
    pub stop: f64,
    /// Number of grid points.
    #[arg(long)]
    pub steps: usize,
    /// Metrics to report, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Metric::AvgAoi, Metric::AvgPaoi])]
    pub metrics: Vec<Metric>,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: Mode,
    /// Master seed; per-point seeds derive from it.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Accepted deliveries measured per simulated point.
    #[arg(long)]
    pub accepted: Option<u64>,
    #[arg(long)]
    pub warmup: Option<u64>,
    #[arg(long)]
    pub batches: Option<usize>,
    /// Independent runs averaged per point.
    #[arg(long)]
    pub replications: Option<u32>,
    /// Worker threads for simulation (0 = all cores).
    #[arg(long)]
    pub workers: Option<usize>,
    /// TOML file with defaults for seed/accepted/warmup/batches/replications/workers.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Output file (standard output when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Load factor of the shared-queue system: lambda = load * (mu_a + mu_b).
    #[arg(long, default_value_t = 0.56)]
    pub mm2_load: f64,
    /// Arrival factor of the preemptive system: lambda = factor * mu.
    #[arg(long, default_value_t = 4.0)]
    pub mm11_factor: f64,
}

/// Place one system at one grid value.
fn instantiate(
    system: CliSystem,
    variable: Variable,
    x: f64,
    mm2_load: f64,
    mm11_factor: f64,
) -> Result<ResolvedSystem> {
    if !x.is_finite() || x <= 0.0 {
        bail!("grid value must be positive and finite, got {x}");
    }
    let unsupported =
        || anyhow!("--variable {} does not apply to --system {}", variable.label(), system.label());
    Ok(match variable {
        Variable::ServiceRate => match system {
            CliSystem::Mm => ResolvedSystem::Mm { mu_a: x, mu_b: x },
            CliSystem::Md => ResolvedSystem::Md { mu: x, period: 1.0 / x },
            CliSystem::Dd => ResolvedSystem::Dd {
                period_a: 1.0 / x,
                period_b: 1.0 / x,
                offset: DdOffset::Randomized,
            },
            CliSystem::Mm2 => ResolvedSystem::Mm2 { lambda: mm2_load * 2.0 * x, mu: x },
            CliSystem::Mm11p => ResolvedSystem::Mm11p { lambda: mm11_factor * x, mu: x },
            CliSystem::Single => ResolvedSystem::Single { mu: x },
        },
        Variable::RateRatio => match system {
            CliSystem::Mm => ResolvedSystem::Mm { mu_a: 1.0, mu_b: x },
            CliSystem::Md => ResolvedSystem::Md { mu: 1.0, period: 1.0 / x },
            CliSystem::Dd => ResolvedSystem::Dd {
                period_a: 1.0,
                period_b: 1.0 / x,
                offset: DdOffset::Randomized,
            },
            _ => return Err(unsupported()),
        },
        Variable::Period => match system {
            CliSystem::Md => ResolvedSystem::Md { mu: 1.0, period: x },
            CliSystem::Dd => ResolvedSystem::Dd {
                period_a: 1.0,
                period_b: x,
                offset: DdOffset::Randomized,
            },
            _ => return Err(unsupported()),
        },
    })
}

/// Well-spread per-point seed; identical across systems at the same grid
/// point so curves share their random draws.
fn point_seed(base: u64, point: usize, replication: u32) -> u64 {
    base.wrapping_add((point as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add((replication as u64).wrapping_mul(0x2545_F491_4F6C_DD1D))
}

struct Cell {
    simulated: f64,
    half_width: f64,
}

/// One simulated grid point: per-metric estimate and half-width. With one
/// replication the batch-means half-widths apply where tracked; with more,
/// a t-interval across replications covers every metric.
fn simulate_point(
    system: ResolvedSystem,
    metrics: &[Metric],
    seed_base: u64,
    point: usize,
    controls: &RunControls,
) -> Result<Vec<Cell>> {
    let spec = system
        .spec()?
        .ok_or_else(|| anyhow!("--system single has no simulator; sweep it in analytic mode"))?;
    let reps = controls.replications.max(1);
    let mut samples: Vec<Vec<f64>> = vec![Vec::with_capacity(reps as usize); metrics.len()];
    let mut batch_half: Vec<f64> = vec![f64::NAN; metrics.len()];
    for rep in 0..reps {
        let mut config = SimConfig::new(spec.clone(), point_seed(seed_base, point, rep));
        config.target_accepted = controls.accepted + controls.warmup;
        config.warmup_accepted = controls.warmup;
        config.batch_count = controls.batches;
        let stats = run(&config)?.stats;
        for (slot, metric) in metrics.iter().enumerate() {
            let (value, half) = match metric {
                Metric::AvgAoi => (stats.avg_aoi, stats.half_width_aoi),
                Metric::AvgPaoi => (stats.avg_paoi, stats.half_width_paoi),
                Metric::EffectiveRate => (stats.effective_arrival_rate, f64::NAN),
                Metric::ObsoleteRatio => (stats.obsolete_ratio, f64::NAN),
            };
            samples[slot].push(value);
            batch_half[slot] = half;
        }
    }
    Ok(metrics
        .iter()
        .enumerate()
        .map(|(slot, _)| {
            let values = &samples[slot];
            if values.len() == 1 {
                Cell {
                    simulated: values[0],
                    half_width: batch_half[slot],
                }
            } else {
                let n = values.len() as f64;
                let mean = values.iter().sum::<f64>() / n;
                let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
                let t = StudentsT::new(0.0, 1.0, n - 1.0).unwrap().inverse_cdf(0.975);
                Cell {
                    simulated: mean,
                    half_width: t * (var / n).sqrt(),
                }
            }
        })
        .collect())
}

pub fn cmd_sweep(args: SweepArgs) -> Result<()> {
    if !(args.start < args.stop) {
        bail!("--start must be below --stop, got {} and {}", args.start, args.stop);
    }
    if args.steps < 2 {
        bail!("--steps must be at least 2, got {}", args.steps);
    }
    if args.systems.is_empty() {
        bail!("--systems must name at least one system");
    }
    let file = FileConfig::load(args.config.as_deref())?;
    let controls = RunControls {
        accepted: args.accepted.or(file.accepted).unwrap_or(10_000),
        warmup: args.warmup.or(file.warmup).unwrap_or(1_000),
        batches: args.batches.or(file.batches).unwrap_or(32),
        replications: args.replications.or(file.replications).unwrap_or(1),
    };
    let seed = crate::resolve_seed(args.seed, file.seed)?;
    let workers = args.workers.or(file.workers).unwrap_or(0);

    let grid: Vec<f64> = (0..args.steps)
        .map(|i| args.start + i as f64 * (args.stop - args.start) / (args.steps - 1) as f64)
        .collect();

    // Validate every (system, point) placement up front so errors surface
    // before any simulation work starts.
    let mut tasks = Vec::new();
    for &system in &args.systems {
        for (point, &x) in grid.iter().enumerate() {
            let resolved = instantiate(system, args.variable, x, args.mm2_load, args.mm11_factor)?;
            if args.mode.analyzes() && !args.mode.simulates() && resolved.closed().is_none() {
                bail!(
                    "--system {}: no closed form; use simulate",
                    resolved.label()
                );
            }
            tasks.push((resolved, point, x));
        }
    }

    let run_task = |&(resolved, point, x): &(ResolvedSystem, usize, f64)| -> Result<Vec<[String; 7]>> {
        let closed = resolved.closed();
        let cells = if args.mode.simulates() {
            Some(simulate_point(resolved, &args.metrics, seed, point, &controls)?)
        } else {
            None
        };
        Ok(args
            .metrics
            .iter()
            .enumerate()
            .map(|(slot, &metric)| {
                let analytic = match (args.mode.analyzes(), &closed) {
                    (true, Some(c)) => fmt(c.pick(metric)),
                    _ => String::new(),
                };
                let (simulated, half, row_seed) = match &cells {
                    Some(cells) => (
                        fmt(cells[slot].simulated),
                        fmt(cells[slot].half_width),
                        point_seed(seed, point, 0).to_string(),
                    ),
                    None => (String::new(), String::new(), String::new()),
                };
                [
                    resolved.label().to_string(),
                    fmt(x),
                    metric.name().to_string(),
                    analytic,
                    simulated,
                    half,
                    row_seed,
                ]
            })
            .collect())
    };

    let results: Result<Vec<Vec<[String; 7]>>> = if workers == 0 {
        tasks.par_iter().map(run_task).collect()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .context("building the sweep worker pool")?
            .install(|| tasks.par_iter().map(run_task).collect())
    };

    let mut buf = Vec::new();
    writeln!(
        buf,
        "# mode={} variable={} accepted={} warmup={} batches={} replications={} seed={}",
        args.mode.label(),
        args.variable.label(),
        controls.accepted,
        controls.warmup,
        controls.batches,
        controls.replications,
        seed,
    )?;
    let mut writer = csv::Writer::from_writer(&mut buf);
    writer.write_record(HEADER)?;
    for rows in results? {
        for row in rows {
            writer.write_record(&row)?;
        }
    }
    writer.flush()?;
    drop(writer);

    match &args.out {
        Some(path) => std::fs::write(path, &buf)
            .with_context(|| format!("cannot write sweep output to {}", path.display()))?,
        None => std::io::stdout().write_all(&buf)?,
    }
    Ok(())
}
