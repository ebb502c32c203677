//! The `validate` subcommand: cross-checks the closed forms, the state
//! graph, and the simulator against each other and prints a report.

use anyhow::{bail, Result};
use dualfresh::analytic::{
    md_avg_aoi, md_avg_aoi_aggregate, md_avg_paoi_aggregate, md_peak_aoi, md_state_expectation,
    mm11_preempt_avg_aoi, mm_avg_aoi, mm_peak_aoi,
};
use dualfresh::markov::{
    mm_avg_aoi_graphical, mm_path_table, mm_steady_state, mm_steady_state_numeric,
};
use dualfresh::sim::{conditional_md_oracle, run, SimConfig};
use dualfresh::streams::named_stream;
use dualfresh::{SimStats, SystemSpec};
use rand::Rng;

struct Report {
    passed: usize,
    total: usize,
}

impl Report {
    fn item(&mut self, name: &str, ok: bool, detail: String) {
        println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        self.total += 1;
        self.passed += usize::from(ok);
    }
}

fn simulate(spec: SystemSpec, seed: u64, accepted: u64) -> Result<SimStats> {
    let mut config = SimConfig::new(spec, seed);
    config.target_accepted = accepted + config.warmup_accepted;
    Ok(run(&config)?.stats)
}

/// Simulated value against its closed form: inside three half-widths or 2%.
fn agrees(stats_value: f64, half_width: f64, closed: f64) -> bool {
    (stats_value - closed).abs() <= (3.0 * half_width).max(0.02 * closed)
}

pub fn cmd_validate(seed: u64) -> Result<()> {
    let mut report = Report { passed: 0, total: 0 };
    let r = &mut report;

    point_values(r);
    route_equivalence(r, seed);
    steady_state(r, seed);
    series_aggregation(r);
    simulation_vs_closed(r, seed)?;
    path_frequencies(r, seed)?;
    conditional_cells(r, seed)?;
    preemptive_equivalence(r, seed)?;

    println!("validation: {}/{} checks passed", report.passed, report.total);
    if report.passed != report.total {
        bail!("validation failed");
    }
    Ok(())
}

fn point_values(r: &mut Report) {
    let mm_avg = mm_avg_aoi(1.0, 1.0).unwrap();
    let mm_peak = mm_peak_aoi(1.0, 1.0).unwrap();
    let md_avg = md_avg_aoi(1.0, 1.0).unwrap();
    let md_peak = md_peak_aoi(1.0, 1.0).unwrap();
    let ok = mm_avg == 1.25
        && (mm_peak - 4.0 / 3.0).abs() <= 1e-9
        && (md_avg - 1.2052).abs() <= 1e-3
        && (md_peak - 1.4459).abs() <= 1e-3;
    r.item(
        "closed-form point values",
        ok,
        format!("mm {mm_avg}/{mm_peak:.6}, md {md_avg:.6}/{md_peak:.6} at unit rates"),
    );
}

fn route_equivalence(r: &mut Report, seed: u64) {
    let mut rng = named_stream(seed, "validate-rate-pairs");
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a = 0.1 + 9.9 * rng.random::<f64>();
        let b = 0.1 + 9.9 * rng.random::<f64>();
        let avg = mm_avg_aoi(a, b).unwrap();
        let peak = mm_peak_aoi(a, b).unwrap();
        let graphical = mm_avg_aoi_graphical(a, b).unwrap();
        let routed: f64 = mm_path_table(a, b)
            .unwrap()
            .iter()
            .map(|p| p.occurrence * p.mean_peak())
            .sum();
        worst = worst
            .max((graphical - avg).abs() / avg)
            .max((routed - peak).abs() / peak);
    }
    r.item(
        "state-graph routes",
        worst <= 1e-10,
        format!("20 rate pairs, worst relative deviation {worst:.2e}"),
    );
}

fn steady_state(r: &mut Report, seed: u64) {
    let mut rng = named_stream(seed, "validate-steady-pairs");
    let mut worst: f64 = 0.0;
    for _ in 0..20 {
        let a = 0.1 + 9.9 * rng.random::<f64>();
        let b = 0.1 + 9.9 * rng.random::<f64>();
        let closed = mm_steady_state(a, b).unwrap();
        let numeric = mm_steady_state_numeric(a, b).unwrap();
        for s in 0..4 {
            worst = worst.max((closed[s] - numeric[s]).abs());
        }
    }
    r.item(
        "steady-state solver",
        worst <= 1e-12,
        format!("20 rate pairs, worst component deviation {worst:.2e}"),
    );
}

fn series_aggregation(r: &mut Report) {
    let mut worst: f64 = 0.0;
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let peak = md_peak_aoi(1.0, t).unwrap();
        let avg = md_avg_aoi(1.0, t).unwrap();
        worst = worst
            .max((md_avg_paoi_aggregate(1.0, t).unwrap() - peak).abs() / peak)
            .max((md_avg_aoi_aggregate(1.0, t).unwrap() - avg).abs() / avg);
    }
    r.item(
        "per-state series aggregation",
        worst <= 1e-10,
        format!("periods 0.1 to 5, worst relative deviation {worst:.2e}"),
    );
}

fn simulation_vs_closed(r: &mut Report, seed: u64) -> Result<()> {
    let mm = simulate(SystemSpec::mm(1.0, 1.0)?, seed.wrapping_add(11), 20_000)?;
    let md = simulate(SystemSpec::md(1.0, 1.0)?, seed.wrapping_add(12), 20_000)?;
    let ok = agrees(mm.avg_aoi, mm.half_width_aoi, mm_avg_aoi(1.0, 1.0)?)
        && agrees(mm.avg_paoi, mm.half_width_paoi, mm_peak_aoi(1.0, 1.0)?)
        && agrees(md.avg_aoi, md.half_width_aoi, md_avg_aoi(1.0, 1.0)?)
        && agrees(md.avg_paoi, md.half_width_paoi, md_peak_aoi(1.0, 1.0)?);
    r.item(
        "simulation vs closed forms",
        ok,
        format!(
            "mm avg {:.4} peak {:.4}, md avg {:.4} peak {:.4} at 20k accepted",
            mm.avg_aoi, mm.avg_paoi, md.avg_aoi, md.avg_paoi
        ),
    );
    Ok(())
}

fn path_frequencies(r: &mut Report, seed: u64) -> Result<()> {
    let mut config = SimConfig::new(SystemSpec::mm(1.0, 1.0)?, seed.wrapping_add(13));
    config.target_accepted = 101_000;
    config.warmup_accepted = 1_000;
    config.emit_trace = true;
    let output = run(&config)?;

    #[derive(Default, Clone, Copy)]
    struct Agg {
        n: f64,
        gap: f64,
        gap2: f64,
        gap4: f64,
        service: f64,
        service2: f64,
    }
    let mut agg = [Agg::default(); 10];
    let mut from_count = [0.0_f64; 4];
    for rec in &output.trace[config.warmup_accepted as usize..] {
        let (Some(path), Some(prev)) = (rec.path, rec.prev_state) else {
            continue;
        };
        from_count[prev.index()] += 1.0;
        let cell = &mut agg[path - 1];
        cell.n += 1.0;
        cell.gap += rec.gap;
        cell.gap2 += rec.gap * rec.gap;
        cell.gap4 += rec.gap * rec.gap * rec.gap * rec.gap;
        cell.service += rec.service;
        cell.service2 += rec.service * rec.service;
    }

    let mut worst_z: f64 = 0.0;
    for row in mm_path_table(1.0, 1.0)? {
        let cell = agg[row.path_index - 1];
        let n_from = from_count[row.from_state.index()];
        let p_hat = cell.n / n_from;
        let p_se = (p_hat * (1.0 - p_hat) / n_from).sqrt();
        worst_z = worst_z.max((p_hat - row.prob).abs() / p_se);

        let gap_mean = cell.gap / cell.n;
        let gap_se = ((cell.gap2 / cell.n - gap_mean * gap_mean) / cell.n).sqrt();
        worst_z = worst_z.max((gap_mean - row.mean_interarrival).abs() / gap_se);

        let service_mean = cell.service / cell.n;
        let service_se = ((cell.service2 / cell.n - service_mean * service_mean) / cell.n).sqrt();
        worst_z = worst_z.max((service_mean - row.mean_service).abs() / service_se);

        let gap2_mean = cell.gap2 / cell.n;
        let gap2_se = ((cell.gap4 / cell.n - gap2_mean * gap2_mean) / cell.n).sqrt();
        worst_z = worst_z.max((gap2_mean - row.second_moment_interarrival).abs() / gap2_se);
    }
    r.item(
        "path-table frequencies",
        worst_z <= 4.0,
        format!("40 statistics from 100k classified refreshes, worst z-score {worst_z:.2}"),
    );
    Ok(())
}

fn conditional_cells(r: &mut Report, seed: u64) -> Result<()> {
    let mut worst_z: f64 = 0.0;
    let mut counts_exact = true;
    for k in 0..=2_u64 {
        for n in 0..=2_u64 {
            let est = conditional_md_oracle(1.0, 1.0, k, n, 20_000, seed.wrapping_add(20 + 3 * k + n))?;
            let want = md_state_expectation(1.0, 1.0, k, n)?;
            counts_exact &= (est.peak_count - want.peak_count).abs() <= 1e-12;
            if est.peak_sum_se > 0.0 {
                worst_z = worst_z.max((est.peak_sum - want.peak_sum).abs() / est.peak_sum_se);
            }
            if est.area_se > 0.0 {
                worst_z = worst_z.max((est.area - want.area).abs() / est.area_se);
            }
        }
    }
    r.item(
        "conditional per-state cells",
        counts_exact && worst_z <= 4.0,
        format!("9 cells at 20k samples, counts exact, worst z-score {worst_z:.2}"),
    );
    Ok(())
}

fn preemptive_equivalence(r: &mut Report, seed: u64) -> Result<()> {
    let closed_equal = mm11_preempt_avg_aoi(4.0, 1.0)? == mm_avg_aoi(1.0, 1.0)?;
    let stats = simulate(SystemSpec::mm11_preempt(4.0, 1.0)?, seed.wrapping_add(31), 30_000)?;
    let ok = closed_equal && agrees(stats.avg_aoi, stats.half_width_aoi, 1.25);
    r.item(
        "preemptive single-queue equivalence",
        ok,
        format!("closed forms equal at 4x, simulated avg {:.4} vs 1.25", stats.avg_aoi),
    );
    Ok(())
}
