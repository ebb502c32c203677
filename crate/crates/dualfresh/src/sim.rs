//! Seeded discrete-event simulation of the five system kinds.
//!
//! The simulator shares the monitor bookkeeping ([`crate::AoiPath`]) across
//! all systems and differs only in how deliveries are produced:
//!
//! * M-M, M-D, D-D: both sensors are always busy. A completion at time `t`
//!   delivers the update generated when that service started, and the
//!   sensor immediately begins a new update generated at `t`.
//! * M/M/2: external Poisson arrivals queue FCFS for two exponential
//!   servers; a packet's generation time is its arrival time, and packets
//!   can complete out of order.
//! * M/M/1/1 with preemption: Poisson arrivals, one exponential server, a
//!   new arrival replaces whatever is in service.
//!
//! Every run is reproducible from its seed: each random ingredient (sensor
//! A, sensor B, external arrivals, the D-D phase draw) has its own named
//! stream, so changing one part of the system leaves the others' draws
//! untouched. Statistics cover the post-warmup window and come with
//! batch-means confidence half-widths.

use std::collections::{BinaryHeap, VecDeque};
use std::cmp::Reverse;

use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::markov::{path_for_edge, refresh_state, MmState, RefreshContext};
use crate::model::{
    AoiPath, DdOffset, Delivery, Sensor, ServiceModel, SimStats, SystemKind, SystemSpec,
};
use crate::streams::{self, named_stream};
use crate::{Error, Result};

pub const DEFAULT_TARGET_ACCEPTED: u64 = 100_000;
pub const DEFAULT_WARMUP_ACCEPTED: u64 = 1_000;
pub const DEFAULT_BATCH_COUNT: usize = 32;

/// Everything a single simulation run depends on. Two runs with equal
/// configs produce identical statistics and traces.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub spec: SystemSpec,
    pub seed: u64,
    /// Stop once this many deliveries have been accepted in total.
    pub target_accepted: u64,
    /// Accepted deliveries discarded before measurement starts.
    pub warmup_accepted: u64,
    /// Number of batches for the batch-means confidence intervals.
    pub batch_count: usize,
    pub emit_trace: bool,
}

impl SimConfig {
    /// Config with the default sample size (100k accepted, 1k warmup,
    /// 32 batches, no trace).
    pub fn new(spec: SystemSpec, seed: u64) -> Self {
        SimConfig {
            spec,
            seed,
            target_accepted: DEFAULT_TARGET_ACCEPTED,
            warmup_accepted: DEFAULT_WARMUP_ACCEPTED,
            batch_count: DEFAULT_BATCH_COUNT,
            emit_trace: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.target_accepted <= self.warmup_accepted {
            return Err(Error::TargetNotAboveWarmup {
                target: self.target_accepted,
                warmup: self.warmup_accepted,
            });
        }
        if self.batch_count == 0 {
            return Err(Error::ZeroBatches);
        }
        let measured = self.target_accepted - self.warmup_accepted;
        if measured < self.batch_count as u64 {
            return Err(Error::TooFewSamples {
                needed: self.batch_count as u64,
                got: measured,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    ServiceCompletionA,
    ServiceCompletionB,
    ExternalArrival,
}

impl EventKind {
    fn rank(self) -> u8 {
        match self {
            EventKind::ServiceCompletionA => 0,
            EventKind::ServiceCompletionB => 1,
            EventKind::ExternalArrival => 2,
        }
    }
}

/// One scheduled occurrence. Events are processed in nondecreasing time
/// order; simultaneous events resolve by kind (A completion, B completion,
/// arrival) and then by insertion order, so ties between deterministic
/// sensors are broken the same way on every run.
#[derive(Debug, Clone, Copy)]
pub struct Event {
    pub time: f64,
    pub kind: EventKind,
    /// Generation time of the completing update; for arrivals, the arrival
    /// instant itself.
    pub generation: f64,
    /// Identity of the service this completion belongs to; lets a
    /// preempting arrival invalidate the completion already on the queue.
    token: u64,
    seq: u64,
}

impl PartialEq for Event {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == std::cmp::Ordering::Equal
    }
}

impl Eq for Event {}

impl PartialOrd for Event {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Event {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.time
            .total_cmp(&other.time)
            .then_with(|| self.kind.rank().cmp(&other.kind.rank()))
            .then_with(|| self.seq.cmp(&other.seq))
    }
}

struct EventQueue {
    heap: BinaryHeap<Reverse<Event>>,
    next_seq: u64,
}

impl EventQueue {
    fn new() -> Self {
        EventQueue {
            heap: BinaryHeap::new(),
            next_seq: 0,
        }
    }

    fn push(&mut self, time: f64, kind: EventKind, generation: f64, token: u64) {
        let seq = self.next_seq;
        self.next_seq += 1;
        self.heap.push(Reverse(Event {
            time,
            kind,
            generation,
            token,
            seq,
        }));
    }

    fn pop(&mut self) -> Event {
        self.heap
            .pop()
            .expect("event queue cannot empty while the system is running")
            .0
    }
}

/// One accepted delivery as written to the trace. `gap` is the time since
/// the previous refresh (the sawtooth interarrival Y) and `service` the age
/// of the update on arrival (its system time T). The state and path fields
/// are filled for the dual always-busy systems; the first refresh of a run
/// has no previous state and therefore no path.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransitionRecord {
    pub t: f64,
    pub gen_time: f64,
    pub sensor: Sensor,
    pub prev_state: Option<MmState>,
    pub new_state: Option<MmState>,
    pub path: Option<usize>,
    pub gap: f64,
    pub service: f64,
}

#[derive(Debug, Clone)]
pub struct SimOutput {
    pub stats: SimStats,
    /// Empty unless the config asked for a trace. Covers the whole run,
    /// warmup included; the statistics cover only the post-warmup window.
    pub trace: Vec<TransitionRecord>,
}

/// Monitor-side bookkeeping shared by all system kinds: applies deliveries,
/// classifies refreshes, collects the trace, and records batch boundaries.
struct Recorder {
    path: AoiPath,
    warmup: u64,
    target: u64,
    emit_trace: bool,
    trace: Vec<TransitionRecord>,
    prev_state: Option<MmState>,
    last_refresh_time: f64,
    total_accepted: u64,
    cum_bounds: Vec<u64>,
    next_bound: usize,
    /// (clock, integrated area) at measurement start and after each batch.
    boundaries: Vec<(f64, f64)>,
    done: bool,
}

/// Cumulative accepted-delivery counts closing each batch; sizes differ by
/// at most one so every batch carries weight.
fn batch_bounds(measured: u64, batches: usize) -> Vec<u64> {
    let b = batches as u64;
    let base = measured / b;
    let extra = measured % b;
    let mut cum = Vec::with_capacity(batches);
    let mut acc = 0;
    for i in 0..b {
        acc += base + if i < extra { 1 } else { 0 };
        cum.push(acc);
    }
    cum
}

impl Recorder {
    fn new(config: &SimConfig) -> Self {
        Recorder {
            path: AoiPath::new(),
            warmup: config.warmup_accepted,
            target: config.target_accepted,
            emit_trace: config.emit_trace,
            trace: Vec::new(),
            prev_state: None,
            last_refresh_time: 0.0,
            total_accepted: 0,
            cum_bounds: batch_bounds(
                config.target_accepted - config.warmup_accepted,
                config.batch_count,
            ),
            next_bound: 0,
            boundaries: vec![(0.0, 0.0)],
            done: false,
        }
    }

    /// Apply one completed update. `other_generation` carries the
    /// generation time of the other sensor's in-service update for the
    /// dual always-busy systems, and `None` where the state graph does not
    /// apply.
    fn deliver(
        &mut self,
        now: f64,
        generation: f64,
        sensor: Sensor,
        other_generation: Option<f64>,
    ) -> Result<()> {
        match self.path.deliver(generation, now)? {
            Delivery::Obsolete => return Ok(()),
            Delivery::Accepted { .. } => {}
        }
        self.total_accepted += 1;
        let new_state = other_generation.map(|other| {
            refresh_state(RefreshContext {
                delivering: sensor,
                other_generation: other,
                refreshed_generation: generation,
            })
        });
        let path = match (self.prev_state, new_state) {
            (Some(prev), Some(next)) => Some(
                path_for_edge(prev, next).ok_or(Error::NoSuchPath {
                    from: prev,
                    to: next,
                })?,
            ),
            _ => None,
        };
        if self.emit_trace {
            self.trace.push(TransitionRecord {
                t: now,
                gen_time: generation,
                sensor,
                prev_state: self.prev_state,
                new_state,
                path,
                gap: now - self.last_refresh_time,
                service: now - generation,
            });
        }
        self.prev_state = new_state;
        self.last_refresh_time = now;
        if self.total_accepted == self.warmup {
            self.path.reset_statistics();
            self.boundaries = vec![(self.path.time(), 0.0)];
        } else if self.total_accepted > self.warmup {
            let measured = self.total_accepted - self.warmup;
            if self.cum_bounds[self.next_bound] == measured {
                self.boundaries
                    .push((self.path.time(), self.path.integrated_area()));
                self.next_bound += 1;
            }
            if self.total_accepted == self.target {
                self.done = true;
            }
        }
        Ok(())
    }

    fn finish(self) -> SimOutput {
        let accepted = self.path.deliveries_accepted();
        let obsolete = self.path.deliveries_obsolete();
        let elapsed = self.path.elapsed();

        let aoi_means: Vec<f64> = self
            .boundaries
            .windows(2)
            .map(|w| (w[1].1 - w[0].1) / (w[1].0 - w[0].0))
            .collect();

        let peaks = self.path.peaks();
        let mut paoi_means = Vec::with_capacity(self.cum_bounds.len());
        let mut start = 0usize;
        for &end in &self.cum_bounds {
            let slice = &peaks[start..end as usize];
            paoi_means.push(slice.iter().sum::<f64>() / slice.len() as f64);
            start = end as usize;
        }

        let stats = SimStats {
            avg_aoi: self.path.average_aoi(),
            avg_paoi: self.path.average_paoi(),
            effective_arrival_rate: accepted as f64 / elapsed,
            obsolete_ratio: obsolete as f64 / (accepted + obsolete) as f64,
            n_accepted: accepted,
            n_obsolete: obsolete,
            sim_time: elapsed,
            half_width_aoi: half_width(&aoi_means),
            half_width_paoi: half_width(&paoi_means),
        };
        SimOutput {
            stats,
            trace: self.trace,
        }
    }
}

/// Batch-means 95% confidence half-width; NaN with fewer than two batches.
fn half_width(means: &[f64]) -> f64 {
    let b = means.len();
    if b < 2 {
        return f64::NAN;
    }
    let mean = means.iter().sum::<f64>() / b as f64;
    let var = means.iter().map(|m| (m - mean) * (m - mean)).sum::<f64>() / (b as f64 - 1.0);
    let student = StudentsT::new(0.0, 1.0, (b - 1) as f64)
        .expect("valid Student t for at least two batches");
    student.inverse_cdf(0.975) * (var / b as f64).sqrt()
}

/// Run one simulation to completion.
///
/// ```
/// use dualfresh::sim::{run, SimConfig};
/// use dualfresh::SystemSpec;
/// let mut config = SimConfig::new(SystemSpec::mm(1.0, 1.0).unwrap(), 7);
/// config.target_accepted = 5_000;
/// config.warmup_accepted = 500;
/// let out = run(&config).unwrap();
/// assert!((out.stats.avg_aoi - 1.25).abs() < 0.1);
/// ```
pub fn run(config: &SimConfig) -> Result<SimOutput> {
    config.validate()?;
    match config.spec.kind {
        SystemKind::Mm | SystemKind::Md | SystemKind::Dd => run_dual_busy(config),
        SystemKind::Mm2 => run_mm2(config),
        SystemKind::Mm11Preempt => run_mm11_preempt(config),
    }
}

/// M-M, M-D and D-D: two always-busy sensors delivering straight to the
/// monitor.
fn run_dual_busy(config: &SimConfig) -> Result<SimOutput> {
    let model_a = config.spec.sensor_a;
    let model_b = config
        .spec
        .sensor_b
        .expect("dual systems carry two sensor models");
    let mut stream_a = named_stream(config.seed, streams::SENSOR_A);
    let mut stream_b = named_stream(config.seed, streams::SENSOR_B);

    // Sensor B may start with a phase offset (D-D only); its first service
    // begins there, so its first completion lands at offset + service.
    let offset = match config.spec.dd_offset {
        None => 0.0,
        Some(DdOffset::Fixed(x)) => x,
        Some(DdOffset::Randomized) => {
            let mut stream = named_stream(config.seed, streams::DD_OFFSET);
            rand::Rng::random::<f64>(&mut stream) * model_b.mean()
        }
    };

    let mut rec = Recorder::new(config);
    let mut queue = EventQueue::new();
    // Generation time of each sensor's in-service update.
    let mut gen_a = 0.0;
    let mut gen_b = offset;
    queue.push(
        model_a.sample(&mut stream_a),
        EventKind::ServiceCompletionA,
        gen_a,
        0,
    );
    queue.push(
        offset + model_b.sample(&mut stream_b),
        EventKind::ServiceCompletionB,
        gen_b,
        0,
    );

    while !rec.done {
        let ev = queue.pop();
        match ev.kind {
            EventKind::ServiceCompletionA => {
                rec.deliver(ev.time, ev.generation, Sensor::A, Some(gen_b))?;
                gen_a = ev.time;
                queue.push(
                    ev.time + model_a.sample(&mut stream_a),
                    EventKind::ServiceCompletionA,
                    gen_a,
                    0,
                );
            }
            EventKind::ServiceCompletionB => {
                rec.deliver(ev.time, ev.generation, Sensor::B, Some(gen_a))?;
                gen_b = ev.time;
                queue.push(
                    ev.time + model_b.sample(&mut stream_b),
                    EventKind::ServiceCompletionB,
                    gen_b,
                    0,
                );
            }
            EventKind::ExternalArrival => unreachable!("dual systems schedule no arrivals"),
        }
    }
    Ok(rec.finish())
}

/// M/M/2: Poisson arrivals, unbounded FCFS queue, two exponential servers.
/// A freed server takes the head of the queue; simultaneous idle servers
/// fill in fixed order.
fn run_mm2(config: &SimConfig) -> Result<SimOutput> {
    let lambda = config
        .spec
        .arrival_rate
        .expect("mm2 specs carry an arrival rate");
    let arrival_law = ServiceModel::exponential(lambda)?;
    let servers = [
        config.spec.sensor_a,
        config
            .spec
            .sensor_b
            .expect("mm2 specs carry two server models"),
    ];
    let kinds = [EventKind::ServiceCompletionA, EventKind::ServiceCompletionB];
    let labels = [Sensor::A, Sensor::B];
    let mut arrival_stream = named_stream(config.seed, streams::ARRIVALS);
    let mut server_streams = [
        named_stream(config.seed, streams::SENSOR_A),
        named_stream(config.seed, streams::SENSOR_B),
    ];

    let mut rec = Recorder::new(config);
    let mut queue = EventQueue::new();
    let mut busy = [false, false];
    let mut waiting: VecDeque<f64> = VecDeque::new();
    let first = arrival_law.sample(&mut arrival_stream);
    queue.push(first, EventKind::ExternalArrival, first, 0);

    while !rec.done {
        let ev = queue.pop();
        match ev.kind {
            EventKind::ExternalArrival => {
                let next = ev.time + arrival_law.sample(&mut arrival_stream);
                queue.push(next, EventKind::ExternalArrival, next, 0);
                match busy.iter().position(|&b| !b) {
                    Some(s) => {
                        busy[s] = true;
                        queue.push(
                            ev.time + servers[s].sample(&mut server_streams[s]),
                            kinds[s],
                            ev.generation,
                            0,
                        );
                    }
                    None => waiting.push_back(ev.generation),
                }
            }
            EventKind::ServiceCompletionA | EventKind::ServiceCompletionB => {
                let s = if ev.kind == EventKind::ServiceCompletionA {
                    0
                } else {
                    1
                };
                rec.deliver(ev.time, ev.generation, labels[s], None)?;
                match waiting.pop_front() {
                    Some(generation) => queue.push(
                        ev.time + servers[s].sample(&mut server_streams[s]),
                        kinds[s],
                        generation,
                        0,
                    ),
                    None => busy[s] = false,
                }
            }
        }
    }
    Ok(rec.finish())
}

/// M/M/1/1 with preemption in service: the newest packet always wins the
/// server. Completions left over from a preempted service are recognized by
/// their token and dropped.
fn run_mm11_preempt(config: &SimConfig) -> Result<SimOutput> {
    let lambda = config
        .spec
        .arrival_rate
        .expect("mm11 specs carry an arrival rate");
    let arrival_law = ServiceModel::exponential(lambda)?;
    let service = config.spec.sensor_a;
    let mut arrival_stream = named_stream(config.seed, streams::ARRIVALS);
    let mut service_stream = named_stream(config.seed, streams::SENSOR_A);

    let mut rec = Recorder::new(config);
    let mut queue = EventQueue::new();
    let mut next_token = 0u64;
    let mut in_service: Option<u64> = None;
    let first = arrival_law.sample(&mut arrival_stream);
    queue.push(first, EventKind::ExternalArrival, first, 0);

    while !rec.done {
        let ev = queue.pop();
        match ev.kind {
            EventKind::ExternalArrival => {
                let next = ev.time + arrival_law.sample(&mut arrival_stream);
                queue.push(next, EventKind::ExternalArrival, next, 0);
                next_token += 1;
                in_service = Some(next_token);
                queue.push(
                    ev.time + service.sample(&mut service_stream),
                    EventKind::ServiceCompletionA,
                    ev.generation,
                    next_token,
                );
            }
            EventKind::ServiceCompletionA => {
                if in_service == Some(ev.token) {
                    in_service = None;
                    rec.deliver(ev.time, ev.generation, Sensor::A, None)?;
                }
            }
            EventKind::ServiceCompletionB => {
                unreachable!("single-server system schedules no B completions")
            }
        }
    }
    Ok(rec.finish())
}

/// Rebuild the age process from a sorted delivery log and integrate it from
/// scratch, independently of the incremental accumulator.
///
/// Starts at time zero with age zero, applies the same freshness rule
/// (strictly newer generations refresh, the rest are discarded), and runs
/// to `horizon`. Returns `(avg_aoi, avg_paoi)`; the peak average is NaN if
/// nothing was accepted.
///
/// ```
/// let (aoi, paoi) = dualfresh::sim::replay_oracle(&[(1.0, 0.5)], 2.0).unwrap();
/// assert!((aoi - 0.75).abs() < 1e-12);
/// assert!((paoi - 1.0).abs() < 1e-12);
/// ```
pub fn replay_oracle(deliveries: &[(f64, f64)], horizon: f64) -> Result<(f64, f64)> {
    let mut last_gen = 0.0;
    let mut prev_time = 0.0;
    let mut area = 0.0;
    let mut peak_sum = 0.0;
    let mut peak_count = 0u64;
    for &(t, generation) in deliveries {
        if t < prev_time {
            return Err(Error::UnsortedTrace);
        }
        area += (t - prev_time) * ((prev_time + t) / 2.0 - last_gen);
        if generation > last_gen {
            peak_sum += t - last_gen;
            peak_count += 1;
            last_gen = generation;
        }
        prev_time = t;
    }
    if horizon < prev_time {
        return Err(Error::HorizonTooShort {
            horizon,
            last: prev_time,
        });
    }
    area += (horizon - prev_time) * ((prev_time + horizon) / 2.0 - last_gen);
    let avg_paoi = if peak_count == 0 {
        f64::NAN
    } else {
        peak_sum / peak_count as f64
    };
    Ok((area / horizon, avg_paoi))
}

/// Monte-Carlo estimate of the per-period age statistics of the M-D system
/// conditioned on the state `(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConditionalEstimate {
    pub peak_count: f64,
    pub peak_sum: f64,
    pub peak_sum_se: f64,
    pub area: f64,
    pub area_se: f64,
}

/// Estimate the conditional per-period peak and area statistics of the M-D
/// system by sampling delivery placements and replaying the exact sawtooth.
///
/// Conditioned on `k` exponential-sensor completions in the previous period
/// and `n` in the current one, the completion instants are distributed as
/// sorted uniforms within their periods; the service rate drops out
/// entirely. `rate` is validated but otherwise unused, mirroring the
/// unconditional caller's signature.
///
/// Exact sawtooth per sample, with the period running from the periodic
/// sensor's delivery at time 0 to the next at `period`:
///
/// * the delivery at time 0 carries generation `-period` and is accepted
///   only if at most one completion landed in the previous period
///   (otherwise the monitor already holds something fresher);
/// * the i-th completion of the current period delivers the update
///   generated at the previous completion, with the first one reaching back
///   to the previous period (or earlier, if that period was empty);
/// * the closing delivery at `period` carries generation 0.
///
/// Peaks in the half-open window `(0, period]` belong to this period.
pub fn conditional_md_oracle(
    rate: f64,
    period: f64,
    k: u64,
    n: u64,
    samples: u64,
    seed: u64,
) -> Result<ConditionalEstimate> {
    crate::ensure_positive("rate", rate)?;
    let t = crate::ensure_positive("period", period)?;
    if samples < 2 {
        return Err(Error::TooFewSamples {
            needed: 2,
            got: samples,
        });
    }
    let mut stream = named_stream(seed, streams::CONDITIONAL);
    let mut count_sum = 0.0;
    let mut peak_acc = (0.0, 0.0);
    let mut area_acc = (0.0, 0.0);
    let mut prev = Vec::with_capacity(k as usize);
    let mut cur = Vec::with_capacity(n as usize);
    for _ in 0..samples {
        sorted_uniforms(&mut stream, k as usize, -t, 0.0, &mut prev);
        sorted_uniforms(&mut stream, n as usize, 0.0, t, &mut cur);

        // Monitor state just after the periodic delivery at time 0.
        let mut monitor_gen = if k >= 2 { prev[k as usize - 2] } else { -t };
        let mut peaks = 0u64;
        let mut peak_sum = 0.0;
        let mut area = 0.0;
        let mut clock = 0.0;
        let mut deliver = |time: f64, generation: f64| {
            area += (time - clock) * ((clock + time) / 2.0 - monitor_gen);
            if generation > monitor_gen {
                peaks += 1;
                peak_sum += time - monitor_gen;
                monitor_gen = generation;
            }
            clock = time;
        };
        for (i, &v) in cur.iter().enumerate() {
            let generation = if i > 0 {
                cur[i - 1]
            } else if k >= 1 {
                prev[k as usize - 1]
            } else {
                // Empty previous period: the in-flight update predates it.
                -2.0 * t
            };
            deliver(v, generation);
        }
        deliver(t, 0.0);

        count_sum += peaks as f64;
        peak_acc.0 += peak_sum;
        peak_acc.1 += peak_sum * peak_sum;
        area_acc.0 += area;
        area_acc.1 += area * area;
    }
    let m = samples as f64;
    let se = |acc: (f64, f64)| {
        let mean = acc.0 / m;
        let var = (acc.1 / m - mean * mean).max(0.0) * m / (m - 1.0);
        (mean, (var / m).sqrt())
    };
    let (peak_sum, peak_sum_se) = se(peak_acc);
    let (area, area_se) = se(area_acc);
    Ok(ConditionalEstimate {
        peak_count: count_sum / m,
        peak_sum,
        peak_sum_se,
        area,
        area_se,
    })
}

/// Fill `out` with `count` sorted uniform draws from `[lo, hi)`.
fn sorted_uniforms(
    stream: &mut impl rand::Rng,
    count: usize,
    lo: f64,
    hi: f64,
    out: &mut Vec<f64>,
) {
    out.clear();
    for _ in 0..count {
        out.push(lo + stream.random::<f64>() * (hi - lo));
    }
    out.sort_by(f64::total_cmp);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic;
    use approx::assert_relative_eq;

    fn quick(spec: SystemSpec, seed: u64, target: u64) -> SimConfig {
        SimConfig {
            spec,
            seed,
            target_accepted: target,
            warmup_accepted: 1_000,
            batch_count: 16,
            emit_trace: false,
        }
    }

    #[test]
    fn identical_configs_reproduce_bitwise() {
        let mut config = quick(SystemSpec::mm(1.0, 2.0).unwrap(), 99, 4_000);
        config.emit_trace = true;
        let a = run(&config).unwrap();
        let b = run(&config).unwrap();
        assert_eq!(a.stats.avg_aoi.to_bits(), b.stats.avg_aoi.to_bits());
        assert_eq!(a.stats.avg_paoi.to_bits(), b.stats.avg_paoi.to_bits());
        assert_eq!(a.trace.len(), b.trace.len());
        assert_eq!(a.trace.last(), b.trace.last());
    }

    #[test]
    fn different_seeds_differ() {
        let a = run(&quick(SystemSpec::mm(1.0, 1.0).unwrap(), 1, 4_000)).unwrap();
        let b = run(&quick(SystemSpec::mm(1.0, 1.0).unwrap(), 2, 4_000)).unwrap();
        assert_ne!(a.stats.avg_aoi, b.stats.avg_aoi);
    }

    #[test]
    fn mm_run_approaches_closed_forms() {
        let out = run(&quick(SystemSpec::mm(1.0, 1.0).unwrap(), 42, 30_000)).unwrap();
        assert_relative_eq!(out.stats.avg_aoi, 1.25, max_relative = 0.05);
        assert_relative_eq!(out.stats.avg_paoi, 4.0 / 3.0, max_relative = 0.05);
        assert_relative_eq!(out.stats.obsolete_ratio, 0.25, max_relative = 0.1);
        assert_relative_eq!(out.stats.effective_arrival_rate, 1.5, max_relative = 0.05);
        assert!(out.stats.avg_paoi >= out.stats.avg_aoi);
        assert!(out.stats.half_width_aoi > 0.0);
        assert!(out.stats.half_width_paoi > 0.0);
    }

    #[test]
    fn md_run_approaches_closed_forms() {
        let out = run(&quick(SystemSpec::md(1.0, 1.0).unwrap(), 7, 30_000)).unwrap();
        assert_relative_eq!(
            out.stats.avg_paoi,
            analytic::md_peak_aoi(1.0, 1.0).unwrap(),
            max_relative = 0.05
        );
        assert_relative_eq!(
            out.stats.avg_aoi,
            analytic::md_avg_aoi(1.0, 1.0).unwrap(),
            max_relative = 0.05
        );
        assert_relative_eq!(
            out.stats.effective_arrival_rate,
            analytic::md_effective_rate(1.0, 1.0).unwrap(),
            max_relative = 0.05
        );
    }

    #[test]
    fn dd_half_period_offset_is_exactly_periodic() {
        let spec = SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.5)).unwrap();
        let out = run(&quick(spec, 3, 5_000)).unwrap();
        assert_relative_eq!(out.stats.avg_aoi, 1.25, epsilon = 1e-10);
        assert_relative_eq!(out.stats.avg_paoi, 1.5, epsilon = 1e-10);
    }

    #[test]
    fn dd_quarter_period_offset() {
        let spec = SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.25)).unwrap();
        let out = run(&quick(spec, 3, 5_000)).unwrap();
        // Peaks alternate between 1.75 and 1.25.
        assert_relative_eq!(out.stats.avg_paoi, 1.5, epsilon = 1e-10);
        assert_relative_eq!(out.stats.avg_aoi, 0.0625 - 0.25 + 1.5, epsilon = 1e-10);
    }

    #[test]
    fn dd_aligned_sensors_discard_every_b_delivery() {
        let spec = SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.0)).unwrap();
        let out = run(&quick(spec, 5, 5_000)).unwrap();
        assert_relative_eq!(out.stats.avg_paoi, 2.0, epsilon = 1e-10);
        assert_relative_eq!(out.stats.avg_aoi, 1.5, epsilon = 1e-10);
        assert_relative_eq!(out.stats.obsolete_ratio, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn dd_randomized_offset_is_deterministic_per_seed() {
        let spec = SystemSpec::dd(1.0, 1.0, DdOffset::Randomized).unwrap();
        let a = run(&quick(spec.clone(), 11, 5_000)).unwrap();
        let b = run(&quick(spec, 11, 5_000)).unwrap();
        assert_eq!(a.stats.avg_aoi.to_bits(), b.stats.avg_aoi.to_bits());
        // Peak average is offset-independent.
        assert_relative_eq!(a.stats.avg_paoi, 1.5, epsilon = 1e-9);
    }

    #[test]
    fn mm11_preempt_never_discards() {
        let out = run(&quick(
            SystemSpec::mm11_preempt(4.0, 1.0).unwrap(),
            13,
            20_000,
        ))
        .unwrap();
        assert_eq!(out.stats.n_obsolete, 0);
        assert_relative_eq!(out.stats.avg_aoi, 1.25, max_relative = 0.05);
        assert_relative_eq!(
            out.stats.avg_paoi,
            analytic::mm11_preempt_peak_aoi(4.0, 1.0).unwrap(),
            max_relative = 0.05
        );
        // Delivery rate of the preemptive server.
        assert_relative_eq!(
            out.stats.effective_arrival_rate,
            4.0 / 5.0,
            max_relative = 0.1
        );
    }

    #[test]
    fn mm2_is_worse_than_dual_mm_at_matched_load() {
        let out = run(&quick(SystemSpec::mm2(1.12, 1.0).unwrap(), 29, 20_000)).unwrap();
        assert!(out.stats.avg_aoi > 1.25);
        assert!(out.stats.avg_paoi >= out.stats.avg_aoi);
    }

    #[test]
    fn trace_matches_statistics_under_replay() {
        let mut config = quick(SystemSpec::mm(1.3, 0.8).unwrap(), 17, 3_000);
        config.warmup_accepted = 0;
        config.batch_count = 8;
        config.emit_trace = true;
        let out = run(&config).unwrap();
        let log: Vec<(f64, f64)> = out.trace.iter().map(|r| (r.t, r.gen_time)).collect();
        let (aoi, paoi) = replay_oracle(&log, out.stats.sim_time).unwrap();
        assert_relative_eq!(aoi, out.stats.avg_aoi, max_relative = 1e-9);
        assert_relative_eq!(paoi, out.stats.avg_paoi, max_relative = 1e-9);
    }

    #[test]
    fn trace_classifies_every_refresh_after_the_first() {
        let mut config = quick(SystemSpec::mm(1.0, 1.0).unwrap(), 23, 3_000);
        config.emit_trace = true;
        let out = run(&config).unwrap();
        assert!(out.trace[0].path.is_none());
        for record in &out.trace[1..] {
            let l = record.path.expect("classified");
            assert!((1..=10).contains(&l));
            assert_eq!(record.new_state.unwrap().sensor(), record.sensor);
            assert!(record.gap > 0.0);
            assert!(record.service > 0.0);
        }
        // Consecutive records chain: this record's new state is the next
        // record's previous state.
        for pair in out.trace.windows(2) {
            assert_eq!(pair[0].new_state, pair[1].prev_state);
        }
    }

    #[test]
    fn replay_oracle_examples() {
        let (aoi, paoi) = replay_oracle(&[], 4.0).unwrap();
        assert_relative_eq!(aoi, 2.0, epsilon = 1e-15);
        assert!(paoi.is_nan());
        let (aoi, paoi) = replay_oracle(&[(1.0, 0.5)], 2.0).unwrap();
        assert_relative_eq!(aoi, 0.75, epsilon = 1e-15);
        assert_relative_eq!(paoi, 1.0, epsilon = 1e-15);
        // Obsolete rows change nothing.
        let (aoi, paoi) = replay_oracle(&[(1.0, 0.5), (1.5, 0.2)], 2.0).unwrap();
        assert_relative_eq!(aoi, 0.75, epsilon = 1e-15);
        assert_relative_eq!(paoi, 1.0, epsilon = 1e-15);
        assert!(replay_oracle(&[(2.0, 1.0), (1.0, 0.5)], 3.0).is_err());
        assert!(replay_oracle(&[(2.0, 1.0)], 1.5).is_err());
    }

    #[test]
    fn conditional_oracle_matches_exact_cells() {
        // (0, 0) has no randomness at all.
        let est = conditional_md_oracle(1.0, 2.0, 0, 0, 100, 1).unwrap();
        assert_relative_eq!(est.peak_count, 1.0, epsilon = 1e-15);
        assert_relative_eq!(est.peak_sum, 4.0, epsilon = 1e-12);
        assert_relative_eq!(est.area, 6.0, epsilon = 1e-12);
        assert!(est.peak_sum_se < 1e-12);

        let exact = analytic::md_state_expectation(1.0, 1.0, 1, 1).unwrap();
        let est = conditional_md_oracle(1.0, 1.0, 1, 1, 40_000, 2).unwrap();
        assert_relative_eq!(est.peak_count, exact.peak_count, max_relative = 0.02);
        assert_relative_eq!(est.peak_sum, exact.peak_sum, max_relative = 0.02);
        assert_relative_eq!(est.area, exact.area, max_relative = 0.02);
        assert!((est.peak_sum - exact.peak_sum).abs() < 4.0 * est.peak_sum_se);
        assert!((est.area - exact.area).abs() < 4.0 * est.area_se);

        let exact = analytic::md_state_expectation(1.0, 1.0, 0, 3).unwrap();
        let est = conditional_md_oracle(1.0, 1.0, 0, 3, 40_000, 3).unwrap();
        assert_relative_eq!(est.peak_sum, exact.peak_sum, max_relative = 0.02);
        assert_relative_eq!(est.peak_sum, 2.0, max_relative = 0.02);
    }

    #[test]
    fn config_validation() {
        let spec = SystemSpec::mm(1.0, 1.0).unwrap();
        let mut config = SimConfig::new(spec, 1);
        config.target_accepted = 100;
        config.warmup_accepted = 100;
        assert!(run(&config).is_err());
        config.warmup_accepted = 0;
        config.batch_count = 0;
        assert!(run(&config).is_err());
        config.batch_count = 200;
        assert!(run(&config).is_err());
    }

    #[test]
    fn event_ordering_breaks_ties_deterministically() {
        let mut queue = EventQueue::new();
        queue.push(1.0, EventKind::ExternalArrival, 0.0, 0);
        queue.push(1.0, EventKind::ServiceCompletionB, 0.0, 0);
        queue.push(1.0, EventKind::ServiceCompletionA, 0.0, 0);
        queue.push(0.5, EventKind::ExternalArrival, 0.0, 0);
        assert_eq!(queue.pop().kind, EventKind::ExternalArrival);
        assert_eq!(queue.pop().kind, EventKind::ServiceCompletionA);
        assert_eq!(queue.pop().kind, EventKind::ServiceCompletionB);
        assert_eq!(queue.pop().kind, EventKind::ExternalArrival);
    }

    #[test]
    fn batch_bounds_spread_the_remainder() {
        assert_eq!(batch_bounds(10, 3), vec![4, 7, 10]);
        assert_eq!(batch_bounds(9, 3), vec![3, 6, 9]);
        assert_eq!(batch_bounds(5, 5), vec![1, 2, 3, 4, 5]);
    }
}
