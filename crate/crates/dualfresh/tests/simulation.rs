//! Simulator-level checks that need full runs: shared named streams across
//! system kinds, confidence-interval coverage, and flow conservation.

use std::collections::HashSet;

use dualfresh::analytic::{md_avg_aoi, md_peak_aoi, mm_avg_aoi, mm_peak_aoi};
use dualfresh::sim::{run, SimConfig};
use dualfresh::streams::{named_stream, SENSOR_A};
use dualfresh::{DdOffset, Sensor, ServiceModel, SystemSpec};

/// Sensor A's completion clock depends only on the master seed and its own
/// named stream, so runs of different system kinds at the same seed see
/// sensor A complete at bitwise-identical instants.
#[test]
fn sensor_a_clock_is_shared_across_system_kinds() {
    let seed = 42;
    let model = ServiceModel::exponential(1.0).unwrap();
    let mut stream = named_stream(seed, SENSOR_A);
    let mut grid = HashSet::new();
    grid.insert(0.0_f64.to_bits());
    let mut t = 0.0;
    for _ in 0..100_000 {
        t += model.sample(&mut stream);
        grid.insert(t.to_bits());
    }

    for spec in [
        SystemSpec::mm(1.0, 1.0).unwrap(),
        SystemSpec::md(1.0, 0.7).unwrap(),
    ] {
        let mut config = SimConfig::new(spec, seed);
        config.target_accepted = 3_000;
        config.warmup_accepted = 0;
        config.emit_trace = true;
        let output = run(&config).unwrap();
        let a_rows: Vec<_> = output
            .trace
            .iter()
            .filter(|rec| rec.sensor == Sensor::A)
            .collect();
        assert!(a_rows.len() > 500);
        for rec in a_rows {
            assert!(grid.contains(&rec.t.to_bits()), "delivery off the grid: {}", rec.t);
            assert!(
                grid.contains(&rec.gen_time.to_bits()),
                "generation off the grid: {}",
                rec.gen_time
            );
        }
    }
}

/// The 95% batch-means intervals should cover the closed forms in the
/// vast majority of independently seeded runs.
#[test]
fn interval_coverage_across_seeds() {
    let cases = [
        (
            SystemSpec::mm(1.0, 1.0).unwrap(),
            mm_avg_aoi(1.0, 1.0).unwrap(),
            mm_peak_aoi(1.0, 1.0).unwrap(),
        ),
        (
            SystemSpec::md(1.0, 1.0).unwrap(),
            md_avg_aoi(1.0, 1.0).unwrap(),
            md_peak_aoi(1.0, 1.0).unwrap(),
        ),
    ];
    for (spec, truth_avg, truth_peak) in cases {
        let mut covered_aoi = 0;
        let mut covered_paoi = 0;
        for seed in 0..50 {
            let mut config = SimConfig::new(spec.clone(), seed);
            config.target_accepted = 21_000;
            config.warmup_accepted = 1_000;
            config.batch_count = 16;
            let stats = run(&config).unwrap().stats;
            if (stats.avg_aoi - truth_avg).abs() <= stats.half_width_aoi {
                covered_aoi += 1;
            }
            if (stats.avg_paoi - truth_peak).abs() <= stats.half_width_paoi {
                covered_paoi += 1;
            }
        }
        assert!(covered_aoi >= 45, "avg AoI covered in {covered_aoi}/50 runs");
        assert!(covered_paoi >= 45, "peak AoI covered in {covered_paoi}/50 runs");
    }
}

/// Every completion is either accepted or discarded, so the delivery rate
/// observed over the measured window equals the total service rate.
#[test]
fn delivery_rate_matches_service_rate() {
    let cases = [
        (SystemSpec::mm(1.0, 2.0).unwrap(), 3.0),
        (SystemSpec::md(2.0, 0.8).unwrap(), 3.25),
        (SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.3)).unwrap(), 2.0),
    ];
    for (i, (spec, total_rate)) in cases.into_iter().enumerate() {
        let mut config = SimConfig::new(spec, 7 + i as u64);
        config.target_accepted = 41_000;
        config.warmup_accepted = 1_000;
        let stats = run(&config).unwrap().stats;
        let delivered = (stats.n_accepted + stats.n_obsolete) as f64 / stats.sim_time;
        assert!(
            (delivered - total_rate).abs() <= 0.02 * total_rate,
            "delivered {delivered} per unit time, service rate {total_rate}"
        );
    }
}
