//! Shared domain types: service-time laws, scenario descriptions, and the
//! piecewise-linear AoI sample-path accumulator.

use rand::Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};

use crate::{ensure_positive, Error, Result};

/// A sensor's service-time law.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ServiceModel {
    /// Exponentially distributed service with the given rate (mean `1/rate`).
    Exponential { rate: f64 },
    /// Constant service taking exactly `period`.
    Deterministic { period: f64 },
}

impl ServiceModel {
    pub fn exponential(rate: f64) -> Result<Self> {
        ensure_positive("rate", rate)?;
        Ok(ServiceModel::Exponential { rate })
    }

    pub fn deterministic(period: f64) -> Result<Self> {
        ensure_positive("period", period)?;
        Ok(ServiceModel::Deterministic { period })
    }

    /// Mean service time.
    pub fn mean(&self) -> f64 {
        match *self {
            ServiceModel::Exponential { rate } => 1.0 / rate,
            ServiceModel::Deterministic { period } => period,
        }
    }

    /// Long-run completion rate of an always-busy sensor with this law.
    pub fn rate(&self) -> f64 {
        1.0 / self.mean()
    }

    /// Draws one service time from the law.
    pub fn sample<R: Rng + ?Sized>(&self, stream: &mut R) -> f64 {
        match *self {
            ServiceModel::Exponential { rate } => {
                Exp::new(rate).expect("rate validated at construction").sample(stream)
            }
            ServiceModel::Deterministic { period } => period,
        }
    }
}

/// Which of the two parallel sensors produced an event.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sensor {
    A,
    B,
}

impl Sensor {
    pub fn label(self) -> &'static str {
        match self {
            Sensor::A => "A",
            Sensor::B => "B",
        }
    }

    pub fn other(self) -> Sensor {
        match self {
            Sensor::A => Sensor::B,
            Sensor::B => Sensor::A,
        }
    }
}

/// The five system configurations the simulator understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SystemKind {
    /// Two always-busy exponential sensors in parallel.
    Mm,
    /// An exponential sensor in parallel with a deterministic one.
    Md,
    /// Two deterministic sensors in parallel.
    Dd,
    /// A two-server FCFS queue fed by Poisson arrivals.
    Mm2,
    /// A single server with Poisson generation and preemption in service.
    Mm11Preempt,
}

impl SystemKind {
    pub fn label(self) -> &'static str {
        match self {
            SystemKind::Mm => "mm",
            SystemKind::Md => "md",
            SystemKind::Dd => "dd",
            SystemKind::Mm2 => "mm2",
            SystemKind::Mm11Preempt => "mm11p",
        }
    }
}

/// Relative phase of the second deterministic sensor in a D-D system.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DdOffset {
    /// Draw the offset uniformly in `[0, period_b)` from the run's seed.
    Randomized,
    /// Use the given offset.
    Fixed(f64),
}

/// A complete scenario: system kind plus its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub kind: SystemKind,
    pub sensor_a: ServiceModel,
    /// Absent for the single-queue kinds (`Mm2`, `Mm11Preempt`).
    pub sensor_b: Option<ServiceModel>,
    /// External generation rate; present only for `Mm2` and `Mm11Preempt`.
    pub arrival_rate: Option<f64>,
    /// Phase of sensor B; present only for `Dd`.
    pub dd_offset: Option<DdOffset>,
}

impl SystemSpec {
    /// Two parallel exponential sensors with rates `mu_a` and `mu_b`.
    pub fn mm(mu_a: f64, mu_b: f64) -> Result<Self> {
        Ok(SystemSpec {
            kind: SystemKind::Mm,
            sensor_a: ServiceModel::exponential(mu_a)?,
            sensor_b: Some(ServiceModel::exponential(mu_b)?),
            arrival_rate: None,
            dd_offset: None,
        })
    }

    /// An exponential sensor (rate `mu`) plus a deterministic one (period `period`).
    pub fn md(mu: f64, period: f64) -> Result<Self> {
        Ok(SystemSpec {
            kind: SystemKind::Md,
            sensor_a: ServiceModel::exponential(mu)?,
            sensor_b: Some(ServiceModel::deterministic(period)?),
            arrival_rate: None,
            dd_offset: None,
        })
    }

    /// Two deterministic sensors; `offset` phases sensor B against sensor A.
    pub fn dd(period_a: f64, period_b: f64, offset: DdOffset) -> Result<Self> {
        let b = ServiceModel::deterministic(period_b)?;
        if let DdOffset::Fixed(off) = offset {
            if !off.is_finite() || off < 0.0 || off >= period_b {
                return Err(Error::OffsetOutOfRange { offset: off, period: period_b });
            }
        }
        Ok(SystemSpec {
            kind: SystemKind::Dd,
            sensor_a: ServiceModel::deterministic(period_a)?,
            sensor_b: Some(b),
            arrival_rate: None,
            dd_offset: Some(offset),
        })
    }

    /// Two identical rate-`mu` servers behind one FCFS queue, Poisson(`lambda`) arrivals.
    pub fn mm2(lambda: f64, mu: f64) -> Result<Self> {
        ensure_positive("lambda", lambda)?;
        Ok(SystemSpec {
            kind: SystemKind::Mm2,
            sensor_a: ServiceModel::exponential(mu)?,
            sensor_b: Some(ServiceModel::exponential(mu)?),
            arrival_rate: Some(lambda),
            dd_offset: None,
        })
    }

    /// Poisson(`lambda`) generation into a single rate-`mu` server with preemption.
    pub fn mm11_preempt(lambda: f64, mu: f64) -> Result<Self> {
        ensure_positive("lambda", lambda)?;
        Ok(SystemSpec {
            kind: SystemKind::Mm11Preempt,
            sensor_a: ServiceModel::exponential(mu)?,
            sensor_b: None,
            arrival_rate: Some(lambda),
            dd_offset: None,
        })
    }

    /// Combined completion rate of all always-busy sensors or servers.
    pub fn total_service_rate(&self) -> f64 {
        match self.kind {
            SystemKind::Mm | SystemKind::Md | SystemKind::Dd => {
                self.sensor_a.rate() + self.sensor_b.as_ref().map_or(0.0, ServiceModel::rate)
            }
            SystemKind::Mm2 => 2.0 * self.sensor_a.rate(),
            SystemKind::Mm11Preempt => self.sensor_a.rate(),
        }
    }
}

/// Outcome of one delivery at the monitor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Delivery {
    /// The update was fresher than anything seen; `peak` is the age it interrupted.
    Accepted { peak: f64 },
    /// The update was stale and was discarded.
    Obsolete,
}

/// Piecewise-linear AoI sample path, accumulated in closed form.
///
/// The age at time `t` is `t - u(t)` where `u(t)` is the generation time of
/// the freshest delivered update. [`AoiPath::advance`] grows the age linearly
/// and adds the exact trapezoid under the segment; [`AoiPath::deliver`]
/// classifies a delivery and, when accepted, records the interrupted age as a
/// peak and drops the age to the delivered update's own age.
///
/// `reset_statistics` zeroes the area, peak, and counter accumulators without
/// touching the age itself, which is how a warm-up prefix is discarded.
#[derive(Debug, Clone, PartialEq)]
pub struct AoiPath {
    current_age: f64,
    last_refresh_timestamp: f64,
    clock: f64,
    integrated_area: f64,
    elapsed: f64,
    peaks: Vec<f64>,
    deliveries_accepted: u64,
    deliveries_obsolete: u64,
}

impl AoiPath {
    /// A path starting at time zero with age zero.
    pub fn new() -> Self {
        AoiPath::starting_at(0.0)
    }

    /// A path starting at time zero whose freshest update was generated at
    /// `generation` (so the initial age is `-generation`).
    pub fn starting_at(generation: f64) -> Self {
        AoiPath {
            current_age: -generation,
            last_refresh_timestamp: generation,
            clock: 0.0,
            integrated_area: 0.0,
            elapsed: 0.0,
            peaks: Vec::new(),
            deliveries_accepted: 0,
            deliveries_obsolete: 0,
        }
    }

    /// Advances the clock by `dt`, accumulating the exact area under the ramp.
    pub fn advance(&mut self, dt: f64) -> Result<()> {
        if !dt.is_finite() || dt < 0.0 {
            return Err(Error::BadStep(dt));
        }
        self.integrated_area += self.current_age * dt + dt * dt / 2.0;
        self.current_age += dt;
        self.clock += dt;
        self.elapsed += dt;
        Ok(())
    }

    /// Applies a delivery observed at `now` carrying `generation_time`.
    ///
    /// The path is first advanced to `now`. The delivery refreshes the
    /// monitor only if strictly fresher than the current holding; a timestamp
    /// tie counts as obsolete since it cannot reduce the age.
    pub fn deliver(&mut self, generation_time: f64, now: f64) -> Result<Delivery> {
        if generation_time > now {
            return Err(Error::GenerationAfterDelivery { generation: generation_time, now });
        }
        if now < self.clock {
            return Err(Error::DeliveryBeforeClock { now, clock: self.clock });
        }
        self.advance(now - self.clock)?;
        if generation_time > self.last_refresh_timestamp {
            let peak = now - self.last_refresh_timestamp;
            self.peaks.push(peak);
            self.current_age = now - generation_time;
            self.last_refresh_timestamp = generation_time;
            self.deliveries_accepted += 1;
            Ok(Delivery::Accepted { peak })
        } else {
            self.deliveries_obsolete += 1;
            Ok(Delivery::Obsolete)
        }
    }

    /// Clears the accumulated statistics while keeping the age state.
    pub fn reset_statistics(&mut self) {
        self.integrated_area = 0.0;
        self.elapsed = 0.0;
        self.peaks.clear();
        self.deliveries_accepted = 0;
        self.deliveries_obsolete = 0;
    }

    pub fn age(&self) -> f64 {
        self.current_age
    }

    pub fn last_refresh_timestamp(&self) -> f64 {
        self.last_refresh_timestamp
    }

    /// Absolute time reached by the path.
    pub fn time(&self) -> f64 {
        self.clock
    }

    /// Area accumulated since construction or the last statistics reset.
    pub fn integrated_area(&self) -> f64 {
        self.integrated_area
    }

    /// Time accumulated since construction or the last statistics reset.
    pub fn elapsed(&self) -> f64 {
        self.elapsed
    }

    pub fn peaks(&self) -> &[f64] {
        &self.peaks
    }

    pub fn deliveries_accepted(&self) -> u64 {
        self.deliveries_accepted
    }

    pub fn deliveries_obsolete(&self) -> u64 {
        self.deliveries_obsolete
    }

    /// Time-average age over the accumulated window.
    pub fn average_aoi(&self) -> f64 {
        self.integrated_area / self.elapsed
    }

    /// Mean recorded peak.
    pub fn average_paoi(&self) -> f64 {
        let n = self.peaks.len();
        if n == 0 {
            return f64::NAN;
        }
        self.peaks.iter().sum::<f64>() / n as f64
    }
}

impl Default for AoiPath {
    fn default() -> Self {
        AoiPath::new()
    }
}

/// Point estimates and confidence half-widths from one simulation run.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SimStats {
    /// Time-average AoI over the measured window.
    pub avg_aoi: f64,
    /// Mean peak AoI over the measured refreshes.
    pub avg_paoi: f64,
    /// Accepted deliveries per unit time.
    pub effective_arrival_rate: f64,
    /// Fraction of completed updates discarded as obsolete.
    pub obsolete_ratio: f64,
    pub n_accepted: u64,
    pub n_obsolete: u64,
    /// Length of the measured window.
    pub sim_time: f64,
    /// 95% batch-means half-width for `avg_aoi` (NaN with fewer than 2 batches).
    pub half_width_aoi: f64,
    /// 95% batch-means half-width for `avg_paoi`.
    pub half_width_paoi: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    const EPS: f64 = 1e-12;

    #[test]
    fn deterministic_sample_is_the_period() {
        let model = ServiceModel::deterministic(2.0).unwrap();
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(0);
        assert_eq!(model.sample(&mut rng), 2.0);
    }

    #[test]
    fn exponential_sample_mean_matches_rate() {
        for (rate, tol) in [(1.0, 0.01), (4.0, 0.003)] {
            let model = ServiceModel::exponential(rate).unwrap();
            let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
            let n = 1_000_000;
            let sum: f64 = (0..n).map(|_| model.sample(&mut rng)).sum();
            assert!(
                (sum / n as f64 - 1.0 / rate).abs() < tol,
                "rate {rate}: sample mean {} vs {}",
                sum / n as f64,
                1.0 / rate
            );
        }
    }

    #[test]
    fn invalid_models_are_rejected() {
        assert!(ServiceModel::exponential(0.0).is_err());
        assert!(ServiceModel::exponential(-1.0).is_err());
        assert!(ServiceModel::exponential(f64::INFINITY).is_err());
        assert!(ServiceModel::deterministic(0.0).is_err());
        assert!(ServiceModel::deterministic(f64::NAN).is_err());
    }

    #[test]
    fn advance_accumulates_trapezoids() {
        let mut path = AoiPath::new();
        path.advance(1.0).unwrap();
        assert!((path.integrated_area() - 0.5).abs() < EPS);

        let mut path = AoiPath::starting_at(-2.0);
        path.advance(1.0).unwrap();
        assert!((path.integrated_area() - 2.5).abs() < EPS);

        let area = path.integrated_area();
        path.advance(0.0).unwrap();
        assert_eq!(path.integrated_area(), area);

        assert!(path.advance(-0.1).is_err());
    }

    #[test]
    fn deliver_examples() {
        // Freshest update generated at 5; delivery generated at 7 arrives at 9.
        let mut path = AoiPath::starting_at(5.0);
        match path.deliver(7.0, 9.0).unwrap() {
            Delivery::Accepted { peak } => assert!((peak - 4.0).abs() < EPS),
            Delivery::Obsolete => panic!("fresh delivery discarded"),
        }
        assert!((path.age() - 2.0).abs() < EPS);
        assert_eq!(path.deliveries_accepted(), 1);

        // A stale delivery leaves the age untouched.
        let mut path = AoiPath::starting_at(5.0);
        let age_before = {
            path.advance(9.0).unwrap();
            path.age()
        };
        assert_eq!(path.deliver(4.0, 9.0).unwrap(), Delivery::Obsolete);
        assert_eq!(path.age(), age_before);
        assert_eq!(path.peaks().len(), 0);

        // A timestamp tie cannot reduce the age and counts as obsolete.
        let mut path = AoiPath::starting_at(5.0);
        assert_eq!(path.deliver(5.0, 9.0).unwrap(), Delivery::Obsolete);

        let mut path = AoiPath::new();
        assert!(path.deliver(3.0, 2.0).is_err());
    }

    #[test]
    fn reset_keeps_age_state() {
        let mut path = AoiPath::new();
        path.deliver(1.0, 2.0).unwrap();
        path.advance(1.0).unwrap();
        let age = path.age();
        let clock = path.time();
        path.reset_statistics();
        assert_eq!(path.age(), age);
        assert_eq!(path.time(), clock);
        assert_eq!(path.integrated_area(), 0.0);
        assert_eq!(path.elapsed(), 0.0);
        assert!(path.peaks().is_empty());
    }

    #[test]
    fn spec_constructors_validate() {
        assert!(SystemSpec::mm(1.0, 1.0).is_ok());
        assert!(SystemSpec::mm(1.0, 0.0).is_err());
        assert!(SystemSpec::md(1.0, 1.0).is_ok());
        assert!(SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.5)).is_ok());
        assert!(SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(1.0)).is_err());
        assert!(SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(-0.1)).is_err());
        assert!(SystemSpec::mm2(1.12, 1.0).is_ok());
        assert!(SystemSpec::mm11_preempt(0.0, 1.0).is_err());
    }

    #[test]
    fn total_rate_counts_both_sensors() {
        assert_eq!(SystemSpec::mm(1.0, 1.0).unwrap().total_service_rate(), 2.0);
        assert_eq!(SystemSpec::md(1.0, 1.0).unwrap().total_service_rate(), 2.0);
        assert_eq!(SystemSpec::mm2(1.12, 1.0).unwrap().total_service_rate(), 2.0);
    }
}
