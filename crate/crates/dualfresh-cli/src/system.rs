//! Flag parsing for system selection, shared by every subcommand.

use anyhow::{anyhow, bail, Result};
use clap::ValueEnum;
use dualfresh::analytic::{
    md_avg_aoi, md_effective_rate, md_obsolete_ratio, md_peak_aoi, mm11_preempt_avg_aoi,
    mm11_preempt_peak_aoi, mm_avg_aoi, mm_effective_rate, mm_obsolete_ratio, mm_peak_aoi,
    single_queue_avg_aoi, single_queue_peak_aoi,
};
use dualfresh::{DdOffset, SystemSpec};
use serde_json::{json, Value};

use crate::output::{sig12, Metric};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CliSystem {
    /// Two exponential sensors.
    Mm,
    /// An exponential sensor plus a deterministic one.
    Md,
    /// Two deterministic sensors.
    Dd,
    /// Two shared FCFS servers fed by Poisson arrivals.
    Mm2,
    /// One preemptive server fed by Poisson arrivals.
    Mm11p,
    /// One exponential sensor alone, the baseline.
    Single,
}

impl CliSystem {
    pub fn label(self) -> &'static str {
        match self {
            CliSystem::Mm => "mm",
            CliSystem::Md => "md",
            CliSystem::Dd => "dd",
            CliSystem::Mm2 => "mm2",
            CliSystem::Mm11p => "mm11p",
            CliSystem::Single => "single",
        }
    }
}

#[derive(Debug, clap::Args)]
pub struct SystemArgs {
    /// System kind to evaluate.
    #[arg(long, value_enum)]
    pub system: CliSystem,
    /// Service rate of sensor A (mm).
    #[arg(long)]
    pub mu_a: Option<f64>,
    /// Service rate of sensor B (mm).
    #[arg(long)]
    pub mu_b: Option<f64>,
    /// Exponential service rate (md, mm2, mm11p, single).
    #[arg(long)]
    pub mu: Option<f64>,
    /// Deterministic service period (md).
    #[arg(long)]
    pub period: Option<f64>,
    /// Period of sensor A (dd).
    #[arg(long)]
    pub period_a: Option<f64>,
    /// Period of sensor B (dd).
    #[arg(long)]
    pub period_b: Option<f64>,
    /// Arrival rate (mm2, mm11p).
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Phase of sensor B in [0, period_b), or "random" (dd).
    #[arg(long)]
    pub offset: Option<String>,
}

/// A fully validated system with its parameters, pre-echo.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ResolvedSystem {
    Mm { mu_a: f64, mu_b: f64 },
    Md { mu: f64, period: f64 },
    Dd { period_a: f64, period_b: f64, offset: DdOffset },
    Mm2 { lambda: f64, mu: f64 },
    Mm11p { lambda: f64, mu: f64 },
    Single { mu: f64 },
}

/// Closed-form values for the systems that have them.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedForms {
    pub avg_aoi: f64,
    pub avg_paoi: f64,
    pub effective_rate: f64,
    pub obsolete_ratio: f64,
}

impl ClosedForms {
    pub fn pick(&self, metric: Metric) -> f64 {
        match metric {
            Metric::AvgAoi => self.avg_aoi,
            Metric::AvgPaoi => self.avg_paoi,
            Metric::EffectiveRate => self.effective_rate,
            Metric::ObsoleteRatio => self.obsolete_ratio,
        }
    }
}

fn need(system: CliSystem, flag: &str, value: Option<f64>) -> Result<f64> {
    let v = value.ok_or_else(|| anyhow!("--system {} needs --{flag}", system.label()))?;
    if !v.is_finite() || v <= 0.0 {
        bail!("--{flag} must be positive and finite, got {v}");
    }
    Ok(v)
}

pub fn resolve(args: &SystemArgs) -> Result<ResolvedSystem> {
    let system = args.system;
    let resolved = match system {
        CliSystem::Mm => ResolvedSystem::Mm {
            mu_a: need(system, "mu-a", args.mu_a)?,
            mu_b: need(system, "mu-b", args.mu_b)?,
        },
        CliSystem::Md => ResolvedSystem::Md {
            mu: need(system, "mu", args.mu)?,
            period: need(system, "period", args.period)?,
        },
        CliSystem::Dd => {
            let period_b = need(system, "period-b", args.period_b)?;
            let offset = match args.offset.as_deref() {
                None | Some("random") => DdOffset::Randomized,
                Some(text) => {
                    let off: f64 = text
                        .parse()
                        .map_err(|_| anyhow!("--offset must be a number or \"random\", got {text:?}"))?;
                    if !off.is_finite() || off < 0.0 || off >= period_b {
                        bail!("--offset must lie in [0, period_b), got {off}");
                    }
                    DdOffset::Fixed(off)
                }
            };
            ResolvedSystem::Dd {
                period_a: need(system, "period-a", args.period_a)?,
                period_b,
                offset,
            }
        }
        CliSystem::Mm2 => ResolvedSystem::Mm2 {
            lambda: need(system, "lambda", args.lambda)?,
            mu: need(system, "mu", args.mu)?,
        },
        CliSystem::Mm11p => ResolvedSystem::Mm11p {
            lambda: need(system, "lambda", args.lambda)?,
            mu: need(system, "mu", args.mu)?,
        },
        CliSystem::Single => ResolvedSystem::Single {
            mu: need(system, "mu", args.mu)?,
        },
    };

    let allowed: &[&str] = match system {
        CliSystem::Mm => &["mu-a", "mu-b"],
        CliSystem::Md => &["mu", "period"],
        CliSystem::Dd => &["period-a", "period-b", "offset"],
        CliSystem::Mm2 | CliSystem::Mm11p => &["lambda", "mu"],
        CliSystem::Single => &["mu"],
    };
    let provided = [
        ("mu-a", args.mu_a.is_some()),
        ("mu-b", args.mu_b.is_some()),
        ("mu", args.mu.is_some()),
        ("period", args.period.is_some()),
        ("period-a", args.period_a.is_some()),
        ("period-b", args.period_b.is_some()),
        ("lambda", args.lambda.is_some()),
        ("offset", args.offset.is_some()),
    ];
    for (flag, given) in provided {
        if given && !allowed.contains(&flag) {
            bail!("--{flag} does not apply to --system {}", system.label());
        }
    }
    Ok(resolved)
}

impl ResolvedSystem {
    pub fn label(&self) -> &'static str {
        match self {
            ResolvedSystem::Mm { .. } => "mm",
            ResolvedSystem::Md { .. } => "md",
            ResolvedSystem::Dd { .. } => "dd",
            ResolvedSystem::Mm2 { .. } => "mm2",
            ResolvedSystem::Mm11p { .. } => "mm11p",
            ResolvedSystem::Single { .. } => "single",
        }
    }

    /// Simulator spec; `None` for the analytic-only baseline.
    pub fn spec(&self) -> Result<Option<SystemSpec>> {
        let spec = match *self {
            ResolvedSystem::Mm { mu_a, mu_b } => Some(SystemSpec::mm(mu_a, mu_b)?),
            ResolvedSystem::Md { mu, period } => Some(SystemSpec::md(mu, period)?),
            ResolvedSystem::Dd {
                period_a,
                period_b,
                offset,
            } => Some(SystemSpec::dd(period_a, period_b, offset)?),
            ResolvedSystem::Mm2 { lambda, mu } => Some(SystemSpec::mm2(lambda, mu)?),
            ResolvedSystem::Mm11p { lambda, mu } => Some(SystemSpec::mm11_preempt(lambda, mu)?),
            ResolvedSystem::Single { .. } => None,
        };
        Ok(spec)
    }

    /// Closed-form metric values; `None` where only the simulator applies.
    pub fn closed(&self) -> Option<ClosedForms> {
        match *self {
            ResolvedSystem::Mm { mu_a, mu_b } => Some(ClosedForms {
                avg_aoi: mm_avg_aoi(mu_a, mu_b).ok()?,
                avg_paoi: mm_peak_aoi(mu_a, mu_b).ok()?,
                effective_rate: mm_effective_rate(mu_a, mu_b).ok()?,
                obsolete_ratio: mm_obsolete_ratio(mu_a, mu_b).ok()?,
            }),
            ResolvedSystem::Md { mu, period } => Some(ClosedForms {
                avg_aoi: md_avg_aoi(mu, period).ok()?,
                avg_paoi: md_peak_aoi(mu, period).ok()?,
                effective_rate: md_effective_rate(mu, period).ok()?,
                obsolete_ratio: md_obsolete_ratio(mu, period).ok()?,
            }),
            ResolvedSystem::Mm11p { lambda, mu } => Some(ClosedForms {
                avg_aoi: mm11_preempt_avg_aoi(lambda, mu).ok()?,
                avg_paoi: mm11_preempt_peak_aoi(lambda, mu).ok()?,
                effective_rate: lambda * mu / (lambda + mu),
                obsolete_ratio: 0.0,
            }),
            ResolvedSystem::Single { mu } => Some(ClosedForms {
                avg_aoi: single_queue_avg_aoi(mu).ok()?,
                avg_paoi: single_queue_peak_aoi(mu).ok()?,
                effective_rate: mu,
                obsolete_ratio: 0.0,
            }),
            ResolvedSystem::Dd { .. } | ResolvedSystem::Mm2 { .. } => None,
        }
    }

    /// Parameter echo for JSON outputs.
    pub fn echo(&self) -> Value {
        match *self {
            ResolvedSystem::Mm { mu_a, mu_b } => json!({
                "kind": "mm", "mu_a": sig12(mu_a), "mu_b": sig12(mu_b),
            }),
            ResolvedSystem::Md { mu, period } => json!({
                "kind": "md", "mu": sig12(mu), "period": sig12(period),
            }),
            ResolvedSystem::Dd {
                period_a,
                period_b,
                offset,
            } => json!({
                "kind": "dd",
                "period_a": sig12(period_a),
                "period_b": sig12(period_b),
                "offset": match offset {
                    DdOffset::Randomized => Value::from("random"),
                    DdOffset::Fixed(off) => Value::from(sig12(off)),
                },
            }),
            ResolvedSystem::Mm2 { lambda, mu } => json!({
                "kind": "mm2", "lambda": sig12(lambda), "mu": sig12(mu),
            }),
            ResolvedSystem::Mm11p { lambda, mu } => json!({
                "kind": "mm11p", "lambda": sig12(lambda), "mu": sig12(mu),
            }),
            ResolvedSystem::Single { mu } => json!({
                "kind": "single", "mu": sig12(mu),
            }),
        }
    }
}
