//! Randomized invariants: scaling laws, symmetries, orderings, and the
//! agreement between independent computation routes.

use dualfresh::analytic::{
    md_avg_aoi, md_avg_aoi_aggregate, md_avg_paoi_aggregate, md_peak_aoi, md_state_expectation,
    mm_avg_aoi, mm_peak_aoi, simplex_volume,
};
use dualfresh::markov::{
    mm_avg_aoi_graphical, mm_path_table, mm_steady_state, mm_steady_state_numeric,
    mm_two_step_table,
};
use dualfresh::sim::replay_oracle;
use dualfresh::AoiPath;
use proptest::prelude::*;

fn rate() -> impl Strategy<Value = f64> {
    0.1f64..10.0
}

proptest! {
    /// Time is the only scale: multiplying every rate by c divides both
    /// age metrics by c.
    #[test]
    fn mm_metrics_scale_with_rate(a in rate(), b in rate(), c in rate()) {
        let avg = mm_avg_aoi(a, b).unwrap();
        let peak = mm_peak_aoi(a, b).unwrap();
        prop_assert!((mm_avg_aoi(c * a, c * b).unwrap() - avg / c).abs() <= 1e-9 * (avg / c));
        prop_assert!((mm_peak_aoi(c * a, c * b).unwrap() - peak / c).abs() <= 1e-9 * (peak / c));
    }

    #[test]
    fn md_metrics_scale_with_rate(mu in rate(), t in 0.1f64..5.0, c in rate()) {
        let avg = md_avg_aoi(mu, t).unwrap();
        let peak = md_peak_aoi(mu, t).unwrap();
        prop_assert!((md_avg_aoi(c * mu, t / c).unwrap() - avg / c).abs() <= 1e-9 * (avg / c));
        prop_assert!((md_peak_aoi(c * mu, t / c).unwrap() - peak / c).abs() <= 1e-9 * (peak / c));
    }

    /// Sensor labels carry no meaning in the symmetric system.
    #[test]
    fn mm_metrics_are_symmetric(a in rate(), b in rate()) {
        let avg = mm_avg_aoi(a, b).unwrap();
        let peak = mm_peak_aoi(a, b).unwrap();
        prop_assert!((mm_avg_aoi(b, a).unwrap() - avg).abs() <= 1e-12 * avg);
        prop_assert!((mm_peak_aoi(b, a).unwrap() - peak).abs() <= 1e-12 * peak);
        let graphical = mm_avg_aoi_graphical(a, b).unwrap();
        prop_assert!((mm_avg_aoi_graphical(b, a).unwrap() - graphical).abs() <= 1e-9 * graphical);
    }

    /// The second sensor always helps: the dual beats the faster sensor
    /// alone, and the mean never exceeds the mean peak.
    #[test]
    fn mm_orderings(a in rate(), b in rate()) {
        let avg = mm_avg_aoi(a, b).unwrap();
        let peak = mm_peak_aoi(a, b).unwrap();
        let best_single = 2.0 / a.max(b);
        prop_assert!(avg < best_single);
        prop_assert!(peak < best_single);
        prop_assert!(avg <= peak);
    }

    /// Strict analytically; the slack absorbs rounding where large
    /// rate-period products push the metrics onto their limits.
    #[test]
    fn md_orderings(mu in rate(), t in 0.1f64..5.0) {
        let avg = md_avg_aoi(mu, t).unwrap();
        let peak = md_peak_aoi(mu, t).unwrap();
        prop_assert!(avg < 2.0 / mu * (1.0 + 1e-12));
        prop_assert!(avg < 1.5 * t + 1e-12);
        prop_assert!(avg <= peak * (1.0 + 1e-12));
    }

    /// Both refresh-weight tables are probability distributions.
    #[test]
    fn path_tables_are_distributions(a in rate(), b in rate()) {
        let single: f64 = mm_path_table(a, b).unwrap().iter().map(|p| p.occurrence).sum();
        let double: f64 = mm_two_step_table(a, b).unwrap().iter().map(|c| c.prob).sum();
        prop_assert!((single - 1.0).abs() <= 1e-12);
        prop_assert!((double - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn steady_state_numeric_matches_closed(a in rate(), b in rate()) {
        let closed = mm_steady_state(a, b).unwrap();
        let numeric = mm_steady_state_numeric(a, b).unwrap();
        for s in 0..4 {
            prop_assert!((closed[s] - numeric[s]).abs() <= 1e-12);
        }
    }

    /// A refresh can never find the monitor holding anything older than
    /// two periods, so conditional mean peaks live in (0, 2T].
    #[test]
    fn conditional_mean_peak_is_bounded(
        mu in 0.2f64..4.0,
        t in 0.1f64..5.0,
        k in 0u64..25,
        n in 0u64..25,
    ) {
        let cell = md_state_expectation(mu, t, k, n).unwrap();
        let mean_peak = cell.peak_sum / cell.peak_count;
        prop_assert!(mean_peak > 0.0);
        prop_assert!(mean_peak <= 2.0 * t + 1e-12);
    }

    #[test]
    fn simplex_volume_is_homogeneous(span in 0.1f64..4.0, c in 0.1f64..4.0, points in 2usize..8) {
        let scaled = simplex_volume(c * span, points).unwrap();
        let reference = simplex_volume(span, points).unwrap() * c.powi(points as i32 - 2);
        prop_assert!((scaled - reference).abs() <= 1e-12 * reference.max(1e-300));
    }

    /// Replaying a delivery list through the trapezoid oracle agrees with
    /// the incremental sample path, obsolete deliveries included.
    #[test]
    fn replay_matches_incremental_path(
        steps in prop::collection::vec((0.01f64..1.0, 0.0f64..2.0), 1..40),
        tail in 0.01f64..1.0,
    ) {
        let mut deliveries = Vec::with_capacity(steps.len());
        let mut t = 0.0;
        for (dt, back) in steps {
            t += dt;
            deliveries.push((t, t - back));
        }
        let horizon = t + tail;

        let mut path = AoiPath::new();
        for &(time, generation) in &deliveries {
            path.deliver(generation, time).unwrap();
        }
        path.advance(horizon - path.time()).unwrap();

        let (avg, paoi) = replay_oracle(&deliveries, horizon).unwrap();
        prop_assert!((avg - path.average_aoi()).abs() <= 1e-9 * avg.abs().max(1.0));
        if path.deliveries_accepted() > 0 {
            prop_assert!((paoi - path.average_paoi()).abs() <= 1e-9 * paoi.abs().max(1.0));
        } else {
            prop_assert!(paoi.is_nan());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// The per-state series route and the closed forms agree everywhere,
    /// not just on the frozen grid.
    #[test]
    fn md_aggregates_match_closed_forms(mu in 0.2f64..3.0, t in 0.2f64..3.0) {
        let peak = md_peak_aoi(mu, t).unwrap();
        let avg = md_avg_aoi(mu, t).unwrap();
        prop_assert!((md_avg_paoi_aggregate(mu, t).unwrap() - peak).abs() <= 1e-9 * peak);
        prop_assert!((md_avg_aoi_aggregate(mu, t).unwrap() - avg).abs() <= 1e-9 * avg);
    }
}
