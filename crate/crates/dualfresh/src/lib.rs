//! Age-of-information analysis for dual-source status update systems.
//!
//! A monitor tracks a remote process through updates delivered by two
//! sensors working in parallel. Each sensor samples the process the moment
//! it starts transmitting and immediately begins a new update once the
//! previous one is acknowledged, so the monitor's age of information (AoI),
//! the time elapsed since the generation of its freshest update, evolves as
//! a sawtooth. Because the sensors race each other, a delivery can arrive
//! carrying an older timestamp than something the monitor already has; such
//! obsolete updates are discarded on arrival.
//!
//! The crate provides three independent routes to the same quantities and
//! the machinery to check them against each other:
//!
//! * [`analytic`]: closed-form average AoI and peak AoI for the
//!   exponential-exponential and exponential-deterministic sensor pairs,
//!   plus single-queue and preemptive M/M/1/1 baselines.
//! * [`markov`]: the refresh-state graph of the exponential-exponential
//!   system, its steady state, per-transition statistics, and the
//!   trapezoid-sum route to the average AoI.
//! * [`sim`]: a seeded discrete-event simulator for five system kinds,
//!   with batch-means confidence intervals and classified refresh traces.
//!
//! ```
//! use dualfresh::analytic;
//!
//! let avg = analytic::mm_avg_aoi(1.0, 1.0).unwrap();
//! let peak = analytic::mm_peak_aoi(1.0, 1.0).unwrap();
//! assert!((avg - 1.25).abs() < 1e-12);
//! assert!((peak - 4.0 / 3.0).abs() < 1e-12);
//! ```

pub mod analytic;
pub mod markov;
pub mod model;
pub mod sim;
pub mod streams;

pub use model::{AoiPath, DdOffset, Delivery, Sensor, ServiceModel, SimStats, SystemKind, SystemSpec};

use markov::MmState;

/// Errors reported by constructors and evaluators across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("{name} must be nonnegative and finite, got {value}")]
    Negative { name: &'static str, value: f64 },
    #[error("time step must be nonnegative and finite, got {0}")]
    BadStep(f64),
    #[error("generation time {generation} lies after delivery time {now}")]
    GenerationAfterDelivery { generation: f64, now: f64 },
    #[error("delivery at {now} precedes the accumulated path time {clock}")]
    DeliveryBeforeClock { now: f64, clock: f64 },
    #[error("offset {offset} must lie in [0, {period})")]
    OffsetOutOfRange { offset: f64, period: f64 },
    #[error("simplex volume is defined for at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("no transition path joins {from:?} to {to:?}")]
    NoSuchPath { from: MmState, to: MmState },
    #[error("target_accepted ({target}) must exceed warmup_accepted ({warmup})")]
    TargetNotAboveWarmup { target: u64, warmup: u64 },
    #[error("batch_count must be at least 1")]
    ZeroBatches,
    #[error("need at least {needed} samples, got {got}")]
    TooFewSamples { needed: u64, got: u64 },
    #[error("deliveries must be sorted by time")]
    UnsortedTrace,
    #[error("horizon {horizon} ends before the last delivery at {last}")]
    HorizonTooShort { horizon: f64, last: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Guide chapters, compiled so every code block in the book stays honest.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/closed-forms.md")]
    mod closed_forms {}
    #[doc = include_str!("../../../book/src/state-graph.md")]
    mod state_graph {}
    #[doc = include_str!("../../../book/src/simulation.md")]
    mod simulation {}
    #[doc = include_str!("../../../book/src/validation.md")]
    mod validation {}
}
