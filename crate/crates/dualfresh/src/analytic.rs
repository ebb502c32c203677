//! Closed-form age metrics for dual-source status update systems.
//!
//! Every function here evaluates an exact expression; nothing in this module
//! simulates. The two dual-source configurations are named by the service
//! processes of their sensors:
//!
//! * **M-M**: both sensors sample a fresh update and ship it through an
//!   exponential service time, immediately starting over on completion.
//! * **M-D**: sensor A is exponential, sensor B delivers on a fixed period.
//!
//! The monitor keeps only the freshest information, so a delivery whose
//! generation time is not strictly newer than what the monitor already holds
//! is discarded. All metrics below account for that discard rule.
//!
//! The M-D averages come in two flavors: direct closed forms
//! ([`md_peak_aoi`], [`md_avg_aoi`]) and aggregation over the per-period
//! state expectations ([`md_avg_paoi_aggregate`], [`md_avg_aoi_aggregate`]).
//! The aggregate route exists so the two can be checked against each other;
//! they agree to near machine precision.

use statrs::distribution::{Discrete, Poisson};
use statrs::function::factorial::factorial;

use crate::{ensure_positive, Error, Result};

/// Average peak age of information for the M-M system.
///
/// With service rates `rate_a` and `rate_b`, writing `s = rate_a + rate_b`
/// and `xi = rate_a^2 + rate_a * rate_b + rate_b^2`, the mean peak age is
/// `2 s / xi`.
///
/// ```
/// let paoi = dualfresh::analytic::mm_peak_aoi(1.0, 1.0).unwrap();
/// assert!((paoi - 4.0 / 3.0).abs() < 1e-15);
/// ```
pub fn mm_peak_aoi(rate_a: f64, rate_b: f64) -> Result<f64> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    let xi = a * a + a * b + b * b;
    Ok(2.0 * (a + b) / xi)
}

/// Average age of information for the M-M system.
///
/// Equals `2 (rate_a^2 + 3 rate_a rate_b + rate_b^2) / (rate_a + rate_b)^3`.
/// At equal unit rates this is `10/8 = 1.25`, a 37.5% reduction from the
/// single-sensor value of 2.
pub fn mm_avg_aoi(rate_a: f64, rate_b: f64) -> Result<f64> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    let s = a + b;
    Ok(2.0 * (a * a + 3.0 * a * b + b * b) / (s * s * s))
}

/// Average peak age of information for the M-D system.
///
/// `rate` is sensor A's exponential service rate, `period` sensor B's fixed
/// delivery period. With `a = rate * period`:
///
/// ```text
///            2 + 2a + e^a (a (2 e^a + a) - 2)
/// paoi = ------------------------------------------
///              rate (1 + e^a (1 + e^a) a)
/// ```
///
/// Both the `rate -> 0` limit (`2 * period`, sensor B alone) and the
/// `period -> inf` limit (`2 / rate`, sensor A alone) fall out of the
/// expression.
pub fn md_peak_aoi(rate: f64, period: f64) -> Result<f64> {
    let mu = ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let a = mu * t;
    let ea = a.exp();
    let num = 2.0 + 2.0 * a + ea * (a * (2.0 * ea + a) - 2.0);
    let den = mu * (1.0 + ea * (1.0 + ea) * a);
    Ok(num / den)
}

/// Average age of information for the M-D system.
///
/// With `a = rate * period`:
///
/// ```text
///          3 + 2a + e^a ((2 e^a - 1) a - 3)
/// aoi = --------------------------------------
///              period * rate^2 * e^(2a)
/// ```
pub fn md_avg_aoi(rate: f64, period: f64) -> Result<f64> {
    let mu = ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let a = mu * t;
    let ea = a.exp();
    let num = 3.0 + 2.0 * a + ea * ((2.0 * ea - 1.0) * a - 3.0);
    Ok(num / (t * mu * mu * ea * ea))
}

/// Average age of information for a single always-busy exponential sensor.
///
/// The update process renews at every delivery, giving `2 / rate`.
pub fn single_queue_avg_aoi(rate: f64) -> Result<f64> {
    Ok(2.0 / ensure_positive("rate", rate)?)
}

/// Average peak age of information for a single always-busy exponential
/// sensor, also `2 / rate`: each peak is the sum of two independent service
/// times.
pub fn single_queue_peak_aoi(rate: f64) -> Result<f64> {
    Ok(2.0 / ensure_positive("rate", rate)?)
}

/// Average age of information for an M/M/1/1 queue with preemption in
/// service: `1 / arrival_rate + 1 / service_rate`.
pub fn mm11_preempt_avg_aoi(arrival_rate: f64, service_rate: f64) -> Result<f64> {
    let lambda = ensure_positive("arrival_rate", arrival_rate)?;
    let mu = ensure_positive("service_rate", service_rate)?;
    Ok(1.0 / lambda + 1.0 / mu)
}

/// Average peak age of information for an M/M/1/1 queue with preemption in
/// service: `1 / arrival_rate + 1 / service_rate + 1 / (arrival_rate +
/// service_rate)`.
pub fn mm11_preempt_peak_aoi(arrival_rate: f64, service_rate: f64) -> Result<f64> {
    let lambda = ensure_positive("arrival_rate", arrival_rate)?;
    let mu = ensure_positive("service_rate", service_rate)?;
    Ok(1.0 / lambda + 1.0 / mu + 1.0 / (lambda + mu))
}

/// Rate of accepted (non-obsolete) deliveries in the M-M system.
///
/// The raw delivery rate is `rate_a + rate_b`, but a fraction of deliveries
/// carry updates older than what the monitor holds. The surviving rate is
/// `xi / (rate_a + rate_b)` with `xi = rate_a^2 + rate_a rate_b + rate_b^2`.
pub fn mm_effective_rate(rate_a: f64, rate_b: f64) -> Result<f64> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    Ok((a * a + a * b + b * b) / (a + b))
}

/// Fraction of M-M deliveries discarded as obsolete:
/// `1 - xi / (rate_a + rate_b)^2`. At equal rates, one in four.
pub fn mm_obsolete_ratio(rate_a: f64, rate_b: f64) -> Result<f64> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    let s = a + b;
    Ok(1.0 - (a * a + a * b + b * b) / (s * s))
}

/// Expected number of accepted deliveries per period in the M-D system:
/// `e^(-2a) + a e^(-a) + a` with `a = rate * period`.
///
/// Dividing by `period` gives the effective refresh rate; see
/// [`md_effective_rate`].
pub fn md_peak_count(rate: f64, period: f64) -> Result<f64> {
    let mu = ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let a = mu * t;
    Ok((-2.0 * a).exp() + a * (-a).exp() + a)
}

/// Rate of accepted deliveries in the M-D system, `md_peak_count / period`.
pub fn md_effective_rate(rate: f64, period: f64) -> Result<f64> {
    Ok(md_peak_count(rate, period)? / period)
}

/// Fraction of M-D deliveries discarded as obsolete. The raw delivery rate
/// is `rate + 1 / period`.
pub fn md_obsolete_ratio(rate: f64, period: f64) -> Result<f64> {
    let raw = rate + 1.0 / period;
    Ok(1.0 - md_effective_rate(rate, period)? / raw)
}

/// Probability that an M-D period sees `k` sensor-A deliveries in the
/// previous period and `n` in the current one.
///
/// The two counts are independent Poisson variables with mean
/// `rate * period`. Evaluated in log space so large counts do not overflow
/// the intermediate factorials.
pub fn md_state_probability(rate: f64, period: f64, k: u64, n: u64) -> Result<f64> {
    let mu = ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let pois = Poisson::new(mu * t).expect("rate and period validated above");
    Ok((pois.ln_pmf(k) + pois.ln_pmf(n)).exp())
}

/// Per-period age statistics of the M-D system conditioned on the state
/// `(k, n)`: `k` sensor-A deliveries in the previous period, `n` in the
/// current one.
///
/// All quantities refer to one period of length `period`, with sensor B's
/// delivery closing it. `peak_count` counts accepted deliveries, `peak_sum`
/// their summed peak ages, and `area` the integral of the age curve over
/// the period, so that ratios of Poisson-weighted sums over states yield
/// the unconditional averages.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MdStateExpectation {
    pub k: u64,
    pub n: u64,
    pub peak_count: f64,
    pub peak_sum: f64,
    pub area: f64,
}

/// Conditional per-period expectations for the M-D state `(k, n)`.
///
/// The values are exact conditional expectations over the placement of the
/// Poisson delivery instants, which given the counts are distributed as
/// uniform order statistics within each period.
///
/// ```
/// use dualfresh::analytic::md_state_expectation;
/// let e = md_state_expectation(1.0, 1.0, 1, 1).unwrap();
/// assert_eq!(e.peak_count, 2.0);
/// assert!((e.peak_sum - 3.0).abs() < 1e-15);
/// assert!((e.area - 1.25).abs() < 1e-15);
/// ```
pub fn md_state_expectation(rate: f64, period: f64, k: u64, n: u64) -> Result<MdStateExpectation> {
    ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let (peak_count, peak_sum, area) = state_cells(t, k, n);
    Ok(MdStateExpectation {
        k,
        n,
        peak_count,
        peak_sum,
        area,
    })
}

/// Shared branch table for [`md_state_expectation`] and the aggregate sums.
/// Arguments are already validated.
fn state_cells(t: f64, k: u64, n: u64) -> (f64, f64, f64) {
    let kf = k as f64;
    let nf = n as f64;
    let count = match (k, n) {
        (0, 0) | (0, 1) => 1.0,
        (0, _) => nf - 1.0,
        (_, 0) => 1.0,
        (_, 1) => 2.0,
        (_, _) => nf,
    };
    let peak_sum = match (k, n) {
        (0, 0) | (0, 1) => 2.0 * t,
        (0, _) => (3.0 * nf - 1.0) * t / (1.0 + nf),
        (_, 0) => (3.0 + kf) * t / (1.0 + kf),
        (_, 1) => (9.0 + 3.0 * kf) * t / (2.0 * (1.0 + kf)),
        (_, _) => (2.0 * nf * kf + 5.0 * nf - kf + 2.0) * t / ((1.0 + kf) * (1.0 + nf)),
    };
    let t2 = t * t;
    let area = match (k, n) {
        (0, 0) => 1.5 * t2,
        (0, _) => (4.0 * nf + 5.0) * t2 / ((1.0 + nf) * (2.0 + nf)),
        (_, 0) => (5.0 + kf) * t2 / (2.0 * (1.0 + kf)),
        (_, _) => {
            (2.0 * nf * kf + 5.0 * nf + kf + 7.0) * t2 / ((1.0 + kf) * (1.0 + nf) * (2.0 + nf))
        }
    };
    (count, peak_sum, area)
}

/// Poisson weights and conditional cells summed over the truncated state
/// grid. Returns `(peak_count, peak_sum, area)` expectations per period.
fn md_aggregate_sums(rate: f64, period: f64) -> Result<(f64, f64, f64)> {
    let mu = ensure_positive("rate", rate)?;
    let t = ensure_positive("period", period)?;
    let a = mu * t;
    let k_max = ((10.0 * a).ceil() as u64).max(60);
    let pois = Poisson::new(a).expect("rate and period validated above");
    let pmf: Vec<f64> = (0..=k_max).map(|i| pois.ln_pmf(i).exp()).collect();
    let mass: f64 = pmf.iter().sum();
    assert!(
        mass * mass > 1.0 - 1e-12,
        "state grid truncated too early at {k_max} for rate*period = {a}"
    );
    let mut count = 0.0;
    let mut peaks = 0.0;
    let mut area = 0.0;
    for (k, wk) in pmf.iter().enumerate() {
        let mut row_count = 0.0;
        let mut row_peaks = 0.0;
        let mut row_area = 0.0;
        for (n, wn) in pmf.iter().enumerate() {
            let (c, p, q) = state_cells(t, k as u64, n as u64);
            row_count += wn * c;
            row_peaks += wn * p;
            row_area += wn * q;
        }
        count += wk * row_count;
        peaks += wk * row_peaks;
        area += wk * row_area;
    }
    Ok((count, peaks, area))
}

/// Average peak age of the M-D system computed by aggregating the
/// conditional per-period expectations: total expected peak age per period
/// divided by expected accepted deliveries per period.
///
/// Agrees with [`md_peak_aoi`] to near machine precision; the two follow
/// independent routes and are kept as a cross-check on each other.
pub fn md_avg_paoi_aggregate(rate: f64, period: f64) -> Result<f64> {
    let (count, peaks, _) = md_aggregate_sums(rate, period)?;
    Ok(peaks / count)
}

/// Average age of the M-D system computed by aggregating the conditional
/// per-period area expectations: expected area per period divided by the
/// period. Agrees with [`md_avg_aoi`] to near machine precision.
pub fn md_avg_aoi_aggregate(rate: f64, period: f64) -> Result<f64> {
    let (_, _, area) = md_aggregate_sums(rate, period)?;
    Ok(area / period)
}

/// Volume of the ordered simplex spanned by `points - 2` interior points
/// inside an interval of length `span`: `span^(points - 2) / (points - 2)!`.
///
/// This is the weight that turns conditional order-statistic integrals into
/// the expectations of [`md_state_expectation`]. `points` counts the
/// interval endpoints too, so `points = 2` means no interior points and a
/// volume of one.
pub fn simplex_volume(span: f64, points: usize) -> Result<f64> {
    if !span.is_finite() || span < 0.0 {
        return Err(Error::Negative {
            name: "span",
            value: span,
        });
    }
    if points < 2 {
        return Err(Error::TooFewPoints(points));
    }
    let interior = (points - 2) as u64;
    Ok(span.powi(interior as i32) / factorial(interior))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn mm_peak_matches_known_points() {
        assert_relative_eq!(mm_peak_aoi(1.0, 1.0).unwrap(), 4.0 / 3.0, epsilon = 1e-15);
        assert_relative_eq!(mm_peak_aoi(2.0, 3.0).unwrap(), 10.0 / 19.0, epsilon = 1e-15);
        // A vanishing second sensor leaves the single-queue value.
        assert_relative_eq!(mm_peak_aoi(1.0, 1e-12).unwrap(), 2.0, epsilon = 1e-9);
    }

    #[test]
    fn mm_avg_matches_known_points() {
        assert_relative_eq!(mm_avg_aoi(1.0, 1.0).unwrap(), 1.25, epsilon = 1e-15);
        assert_relative_eq!(mm_avg_aoi(2.0, 3.0).unwrap(), 62.0 / 125.0, epsilon = 1e-15);
        assert_relative_eq!(mm_avg_aoi(1.0, 1e-12).unwrap(), 2.0, epsilon = 1e-9);
    }

    #[test]
    fn mm_metrics_scale_with_rate() {
        let c = 3.7;
        assert_relative_eq!(
            mm_peak_aoi(c * 2.0, c * 3.0).unwrap(),
            mm_peak_aoi(2.0, 3.0).unwrap() / c,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            mm_avg_aoi(c * 2.0, c * 3.0).unwrap(),
            mm_avg_aoi(2.0, 3.0).unwrap() / c,
            epsilon = 1e-14
        );
    }

    #[test]
    fn md_closed_forms_match_frozen_values() {
        assert_relative_eq!(
            md_peak_aoi(1.0, 1.0).unwrap(),
            1.445_875_733_176_368,
            epsilon = 1e-14
        );
        assert_relative_eq!(
            md_avg_aoi(1.0, 1.0).unwrap(),
            1.205_158_651_497_294,
            epsilon = 1e-14
        );
        // Scale invariance: (rate, period) -> (c * rate, period / c).
        assert_relative_eq!(
            md_avg_aoi(2.0, 0.5).unwrap(),
            1.205_158_651_497_294 / 2.0,
            epsilon = 1e-14
        );
    }

    #[test]
    fn md_limits_recover_single_sensor_values() {
        // Slow exponential sensor: the periodic sensor alone gives 2 * period.
        assert_relative_eq!(md_peak_aoi(1e-9, 1.0).unwrap(), 2.0, epsilon = 1e-6);
        // Long period: the exponential sensor alone gives 2 / rate.
        assert_relative_eq!(md_peak_aoi(1.0, 40.0).unwrap(), 2.0, epsilon = 1e-9);
        assert_relative_eq!(md_avg_aoi(1.0, 40.0).unwrap(), 2.0, epsilon = 1e-9);
    }

    #[test]
    fn aggregates_agree_with_closed_forms() {
        for &(mu, t) in &[(1.0, 1.0), (2.0, 0.3), (0.5, 4.0), (1.0, 5.0)] {
            assert_relative_eq!(
                md_avg_paoi_aggregate(mu, t).unwrap(),
                md_peak_aoi(mu, t).unwrap(),
                max_relative = 1e-12
            );
            assert_relative_eq!(
                md_avg_aoi_aggregate(mu, t).unwrap(),
                md_avg_aoi(mu, t).unwrap(),
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn accepted_count_per_period() {
        let e2 = (-2.0f64).exp();
        let e1 = (-1.0f64).exp();
        assert_relative_eq!(
            md_peak_count(1.0, 1.0).unwrap(),
            e2 + e1 + 1.0,
            epsilon = 1e-15
        );
        // One accepted delivery per period when the exponential sensor is idle.
        assert_relative_eq!(md_peak_count(1e-12, 1.0).unwrap(), 1.0, epsilon = 1e-9);
        // Fast sensor A: nearly every exponential delivery is accepted.
        assert_relative_eq!(
            md_effective_rate(50.0, 1.0).unwrap(),
            50.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn obsolete_ratios_at_equal_speeds() {
        assert_relative_eq!(mm_obsolete_ratio(1.0, 1.0).unwrap(), 0.25, epsilon = 1e-15);
        assert_relative_eq!(mm_effective_rate(1.0, 1.0).unwrap(), 1.5, epsilon = 1e-15);
        let ratio = md_obsolete_ratio(1.0, 1.0).unwrap();
        assert_relative_eq!(ratio, 0.248_392_637_795_97, epsilon = 1e-12);
    }

    #[test]
    fn state_probability_is_a_poisson_product() {
        let p00 = md_state_probability(1.0, 1.0, 0, 0).unwrap();
        assert_relative_eq!(p00, (-2.0f64).exp(), epsilon = 1e-15);
        let p12 = md_state_probability(1.0, 1.0, 1, 2).unwrap();
        assert_relative_eq!(p12, (-2.0f64).exp() / 2.0, epsilon = 1e-15);
        let total: f64 = (0..50)
            .flat_map(|k| (0..50).map(move |n| (k, n)))
            .map(|(k, n)| md_state_probability(1.0, 1.0, k, n).unwrap())
            .sum();
        assert_relative_eq!(total, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn state_expectation_cells() {
        let t = 2.0;
        let e = md_state_expectation(1.0, t, 0, 0).unwrap();
        assert_eq!(e.peak_count, 1.0);
        assert_relative_eq!(e.peak_sum, 2.0 * t, epsilon = 1e-15);
        assert_relative_eq!(e.area, 1.5 * t * t, epsilon = 1e-15);

        let e = md_state_expectation(1.0, t, 0, 4).unwrap();
        assert_eq!(e.peak_count, 3.0);
        assert_relative_eq!(e.peak_sum, 11.0 * t / 5.0, epsilon = 1e-15);
        assert_relative_eq!(e.area, 21.0 * t * t / 30.0, epsilon = 1e-15);

        let e = md_state_expectation(1.0, t, 2, 0).unwrap();
        assert_eq!(e.peak_count, 1.0);
        assert_relative_eq!(e.peak_sum, 5.0 * t / 3.0, epsilon = 1e-15);
        assert_relative_eq!(e.area, 7.0 * t * t / 6.0, epsilon = 1e-15);

        let e = md_state_expectation(1.0, t, 2, 3).unwrap();
        assert_eq!(e.peak_count, 3.0);
        assert_relative_eq!(e.peak_sum, 27.0 * t / 12.0, epsilon = 1e-15);
        assert_relative_eq!(e.area, 36.0 * t * t / 60.0, epsilon = 1e-15);
    }

    #[test]
    fn mean_conditional_peak_stays_within_twice_the_period() {
        let t = 1.0;
        for k in 0..40u64 {
            for n in 0..40u64 {
                let e = md_state_expectation(1.0, t, k, n).unwrap();
                let mean_peak = e.peak_sum / e.peak_count;
                assert!(
                    mean_peak > 0.0 && mean_peak <= 2.0 * t + 1e-12,
                    "mean peak {mean_peak} out of range at ({k}, {n})"
                );
            }
        }
    }

    #[test]
    fn single_queue_values() {
        assert_eq!(single_queue_avg_aoi(2.0).unwrap(), 1.0);
        assert_eq!(single_queue_peak_aoi(2.0).unwrap(), 1.0);
    }

    #[test]
    fn preemptive_queue_values() {
        assert_relative_eq!(
            mm11_preempt_avg_aoi(4.0, 1.0).unwrap(),
            1.25,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            mm11_preempt_peak_aoi(1.0, 1.0).unwrap(),
            2.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn simplex_volume_examples() {
        assert_eq!(simplex_volume(3.0, 2).unwrap(), 1.0);
        assert_eq!(simplex_volume(3.0, 3).unwrap(), 3.0);
        assert_relative_eq!(simplex_volume(2.0, 5).unwrap(), 8.0 / 6.0, epsilon = 1e-15);
        assert!(simplex_volume(1.0, 1).is_err());
        assert!(simplex_volume(-1.0, 3).is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(mm_peak_aoi(0.0, 1.0).is_err());
        assert!(mm_avg_aoi(1.0, f64::NAN).is_err());
        assert!(md_peak_aoi(-1.0, 1.0).is_err());
        assert!(md_avg_aoi(1.0, 0.0).is_err());
        assert!(md_state_probability(1.0, f64::INFINITY, 0, 0).is_err());
        assert!(mm11_preempt_avg_aoi(0.0, 1.0).is_err());
    }
}
