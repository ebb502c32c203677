//! Acceptance suite: one test per release criterion, each printing a single
//! PASS/FAIL line (visible with `--nocapture`). Every check runs at a fixed
//! seed, so a passing suite stays passing.

use dualfresh::analytic::{
    md_avg_aoi, md_avg_aoi_aggregate, md_avg_paoi_aggregate, md_effective_rate,
    md_obsolete_ratio, md_peak_aoi, md_state_expectation, mm11_preempt_avg_aoi,
    mm11_preempt_peak_aoi, mm_avg_aoi, mm_effective_rate, mm_obsolete_ratio, mm_peak_aoi,
    simplex_volume,
};
use dualfresh::markov::{mm_avg_aoi_graphical, mm_path_table, mm_steady_state,
    mm_steady_state_numeric};
use dualfresh::sim::{conditional_md_oracle, run, SimConfig};
use dualfresh::streams::named_stream;
use dualfresh::{DdOffset, SimStats, SystemSpec};
use rand::Rng;

/// Collects named check failures for one criterion and prints the verdict.
struct Criterion {
    id: &'static str,
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: &'static str, label: &'static str) -> Self {
        Criterion {
            id,
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    fn close_abs(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        if !((got - want).abs() <= tol) {
            self.failures
                .push(format!("{name}: got {got}, want {want} within {tol}"));
        }
    }

    fn close_rel(&mut self, name: &str, got: f64, want: f64, tol: f64) {
        if !((got - want).abs() <= tol * want.abs().max(1e-300)) {
            self.failures.push(format!(
                "{name}: got {got}, want {want} within relative {tol}"
            ));
        }
    }

    fn finish(self) {
        if self.failures.is_empty() {
            println!("criterion {}: PASS - {}", self.id, self.label);
        } else {
            println!(
                "criterion {}: FAIL - {} ({})",
                self.id,
                self.label,
                self.failures.join("; ")
            );
            panic!("criterion {} failed:\n  {}", self.id, self.failures.join("\n  "));
        }
    }
}

fn simulate(spec: SystemSpec, seed: u64, accepted: u64) -> SimStats {
    let mut config = SimConfig::new(spec, seed);
    config.target_accepted = accepted + config.warmup_accepted;
    run(&config).expect("simulation runs").stats
}

#[test]
fn criterion_01_closed_form_point_values() {
    let mut c = Criterion::new("01", "closed-form point values at unit rates");

    // The same formulas re-typed from scratch, arranged differently from
    // the library's implementation.
    let (a, b) = (1.0_f64, 1.0_f64);
    let xi = a * (a + b) + b * b;
    let retyped_mm_peak = (a + b) * 2.0 / xi;
    let retyped_mm_avg = (a * a + 3.0 * a * b + b * b) * 2.0 / ((a + b) * (a + b) * (a + b));

    let (mu, t) = (1.0_f64, 1.0_f64);
    let x = mu * t;
    let e = x.exp();
    let retyped_md_peak =
        (2.0 + 2.0 * x + e * (x * (2.0 * e + x) - 2.0)) / (mu * (1.0 + e * (1.0 + e) * x));
    let retyped_md_avg = (3.0 + 2.0 * x + e * ((2.0 * e - 1.0) * x - 3.0))
        / (t * mu * mu * (2.0 * x).exp());

    c.close_abs("mm avg vs retyped", mm_avg_aoi(a, b).unwrap(), retyped_mm_avg, 1e-9);
    c.close_abs("mm peak vs retyped", mm_peak_aoi(a, b).unwrap(), retyped_mm_peak, 1e-9);
    c.close_abs("md avg vs retyped", md_avg_aoi(mu, t).unwrap(), retyped_md_avg, 1e-9);
    c.close_abs("md peak vs retyped", md_peak_aoi(mu, t).unwrap(), retyped_md_peak, 1e-9);

    c.check("mm avg is 1.25", mm_avg_aoi(1.0, 1.0).unwrap() == 1.25);
    c.close_abs("mm peak is 4/3", mm_peak_aoi(1.0, 1.0).unwrap(), 4.0 / 3.0, 1e-9);
    c.close_abs("md avg near 1.2052", md_avg_aoi(1.0, 1.0).unwrap(), 1.2052, 1e-3);
    c.close_abs("md peak near 1.4459", md_peak_aoi(1.0, 1.0).unwrap(), 1.4459, 1e-3);

    c.finish();
}

#[test]
fn criterion_02_reduction_over_single_sensor() {
    let mut c = Criterion::new("02", "age reductions against one sensor alone");
    let single = 2.0;

    let mm_avg_cut = (single - mm_avg_aoi(1.0, 1.0).unwrap()) / single;
    let mm_peak_cut = (single - mm_peak_aoi(1.0, 1.0).unwrap()) / single;
    let md_avg_cut = (single - md_avg_aoi(1.0, 1.0).unwrap()) / single;
    let md_peak_cut = (single - md_peak_aoi(1.0, 1.0).unwrap()) / single;

    c.check("mm avg cut is exactly 37.5%", mm_avg_cut == 0.375);
    c.close_abs("mm peak cut is 1/3", mm_peak_cut, 1.0 / 3.0, 1e-12);
    c.close_abs("md avg cut near 39.7%", md_avg_cut * 100.0, 39.7, 0.1);
    c.close_abs("md peak cut near 27.7%", md_peak_cut * 100.0, 27.7, 0.1);

    c.finish();
}

#[test]
fn criterion_03_path_routes_match_closed_forms() {
    let mut c = Criterion::new("03", "state-graph routes reproduce the closed forms");
    let mut rng = named_stream(3, "acceptance-rate-pairs");
    for i in 0..100 {
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
        c.close_abs(
            &format!("graphical avg, pair {i} ({a:.4},{b:.4})"),
            graphical,
            avg,
            1e-10 * avg.max(1.0),
        );
        c.close_abs(
            &format!("path-route peak, pair {i} ({a:.4},{b:.4})"),
            routed,
            peak,
            1e-10 * peak.max(1.0),
        );
    }
    c.finish();
}

#[test]
fn criterion_04_md_series_equals_closed_forms() {
    let mut c = Criterion::new("04", "per-state series aggregation matches closed forms");
    for t in [0.1, 0.5, 1.0, 2.0, 5.0] {
        let peak = md_peak_aoi(1.0, t).unwrap();
        let avg = md_avg_aoi(1.0, t).unwrap();
        c.close_rel(
            &format!("aggregated peak at period {t}"),
            md_avg_paoi_aggregate(1.0, t).unwrap(),
            peak,
            1e-10,
        );
        c.close_rel(
            &format!("aggregated avg at period {t}"),
            md_avg_aoi_aggregate(1.0, t).unwrap(),
            avg,
            1e-10,
        );
    }
    c.finish();
}

#[test]
fn criterion_05_simulation_matches_closed_forms() {
    let mut c = Criterion::new("05", "simulations track closed forms within 2%");
    for (i, mu) in [2.0, 3.0, 4.0, 5.0].into_iter().enumerate() {
        let mm = simulate(SystemSpec::mm(mu, mu).unwrap(), 50 + i as u64, 100_000);
        c.close_rel(
            &format!("mm avg at rate {mu}"),
            mm.avg_aoi,
            mm_avg_aoi(mu, mu).unwrap(),
            0.02,
        );
        c.close_rel(
            &format!("mm peak at rate {mu}"),
            mm.avg_paoi,
            mm_peak_aoi(mu, mu).unwrap(),
            0.02,
        );

        let md = simulate(SystemSpec::md(mu, 1.0 / mu).unwrap(), 55 + i as u64, 100_000);
        c.close_rel(
            &format!("md avg at rate {mu}"),
            md.avg_aoi,
            md_avg_aoi(mu, 1.0 / mu).unwrap(),
            0.02,
        );
        c.close_rel(
            &format!("md peak at rate {mu}"),
            md.avg_paoi,
            md_peak_aoi(mu, 1.0 / mu).unwrap(),
            0.02,
        );
    }
    c.finish();
}

#[derive(Clone, Copy, Default)]
struct PathAgg {
    n: f64,
    gap: f64,
    gap2: f64,
    gap4: f64,
    service: f64,
    service2: f64,
}

#[test]
fn criterion_06_classified_refreshes_match_path_table() {
    let mut c = Criterion::new("06", "a million classified refreshes match the path table");
    for (rates, seed) in [((1.0, 1.0), 600), ((1.0, 2.0), 601)] {
        let mut config = SimConfig::new(SystemSpec::mm(rates.0, rates.1).unwrap(), seed);
        config.target_accepted = 1_001_000;
        config.warmup_accepted = 1_000;
        config.emit_trace = true;
        let output = run(&config).expect("simulation runs");

        let mut agg = [PathAgg::default(); 10];
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

        for row in mm_path_table(rates.0, rates.1).unwrap() {
            let cell = agg[row.path_index - 1];
            let tag = format!("rates {rates:?} path {}", row.path_index);
            let n_from = from_count[row.from_state.index()];

            let p_hat = cell.n / n_from;
            let p_se = (p_hat * (1.0 - p_hat) / n_from).sqrt();
            c.close_abs(&format!("{tag} probability"), p_hat, row.prob, 3.0 * p_se);

            let gap_mean = cell.gap / cell.n;
            let gap_se = ((cell.gap2 / cell.n - gap_mean * gap_mean) / cell.n).sqrt();
            c.close_abs(
                &format!("{tag} mean gap"),
                gap_mean,
                row.mean_interarrival,
                3.0 * gap_se,
            );

            let service_mean = cell.service / cell.n;
            let service_se =
                ((cell.service2 / cell.n - service_mean * service_mean) / cell.n).sqrt();
            c.close_abs(
                &format!("{tag} mean service"),
                service_mean,
                row.mean_service,
                3.0 * service_se,
            );

            let gap2_mean = cell.gap2 / cell.n;
            let gap2_se = ((cell.gap4 / cell.n - gap2_mean * gap2_mean) / cell.n).sqrt();
            c.close_abs(
                &format!("{tag} gap second moment"),
                gap2_mean,
                row.second_moment_interarrival,
                3.0 * gap2_se,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_07_steady_state_numeric_vs_closed() {
    let mut c = Criterion::new("07", "numeric steady state matches the closed form");
    let mut rng = named_stream(7, "acceptance-rate-pairs");
    for i in 0..20 {
        let a = 0.1 + 9.9 * rng.random::<f64>();
        let b = 0.1 + 9.9 * rng.random::<f64>();
        let closed = mm_steady_state(a, b).unwrap();
        let numeric = mm_steady_state_numeric(a, b).unwrap();
        for s in 0..4 {
            c.close_abs(
                &format!("pair {i} component {s}"),
                numeric[s],
                closed[s],
                1e-12,
            );
        }
    }
    let unit = mm_steady_state(1.0, 1.0).unwrap();
    for (s, want) in [1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0].into_iter().enumerate() {
        c.close_abs(&format!("unit-rate component {s}"), unit[s], want, 1e-15);
    }
    c.finish();
}

/// Composite Simpson rule; exact for the cubic-or-lower integrands below.
fn simpson(lo: f64, hi: f64, panels: usize, f: &mut dyn FnMut(f64) -> f64) -> f64 {
    let h = (hi - lo) / panels as f64;
    let mut acc = f(lo) + f(hi);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(lo + i as f64 * h);
    }
    acc * h / 3.0
}

/// Volume of the ordered tuple of interior points by direct nested
/// integration, the slow route `simplex_volume` short-cuts.
fn nested_volume(points: usize, lo: f64, hi: f64) -> f64 {
    if points <= 2 {
        return 1.0;
    }
    simpson(lo, hi, 16, &mut |x| nested_volume(points - 1, x, hi))
}

#[test]
fn criterion_08_simplex_volume_vs_nested_integration() {
    let mut c = Criterion::new("08", "ordered-placement volume matches nested integration");
    for points in [2_usize, 3, 4, 5] {
        for span in [0.25, 0.5, 1.0] {
            c.close_rel(
                &format!("{points} points over span {span}"),
                simplex_volume(span, points).unwrap(),
                nested_volume(points, 0.0, span),
                1e-6,
            );
        }
    }
    c.finish();
}

#[test]
fn criterion_09_conditional_oracles_match_tables() {
    let mut c = Criterion::new("09", "sampled conditional cells match the per-state table");
    for k in 0..=3_u64 {
        for n in 0..=3_u64 {
            let est = conditional_md_oracle(1.0, 1.0, k, n, 100_000, 900 + 4 * k + n).unwrap();
            let want = md_state_expectation(1.0, 1.0, k, n).unwrap();
            let tag = format!("cell ({k},{n})");
            c.close_abs(&format!("{tag} peak count"), est.peak_count, want.peak_count, 1e-12);
            c.close_rel(&format!("{tag} peak sum"), est.peak_sum, want.peak_sum, 0.02);
            c.close_rel(&format!("{tag} area"), est.area, want.area, 0.02);
        }
    }
    c.finish();
}

#[test]
fn criterion_10_qualitative_orderings() {
    let mut c = Criterion::new("10", "qualitative orderings across systems");

    // (a) A shared-queue pair at load 0.56 is strictly worse than any of
    // the always-busy duals at the same total service rate.
    let mm = simulate(SystemSpec::mm(1.0, 1.0).unwrap(), 1001, 50_000);
    let md = simulate(SystemSpec::md(1.0, 1.0).unwrap(), 1002, 50_000);
    let dd = simulate(
        SystemSpec::dd(1.0, 1.0, DdOffset::Randomized).unwrap(),
        1003,
        50_000,
    );
    let mm2 = simulate(SystemSpec::mm2(1.12, 1.0).unwrap(), 1004, 50_000);
    c.check("mm2 worse than mm", mm2.avg_aoi > mm.avg_aoi);
    c.check("mm2 worse than md", mm2.avg_aoi > md.avg_aoi);
    c.check("mm2 worse than dd", mm2.avg_aoi > dd.avg_aoi);

    // (b) Peak age over the rate ratio rises then falls, with the maximum
    // strictly inside the ratio range.
    let ratios: Vec<f64> = (1..=20).map(|i| i as f64 * 0.05).collect();
    let peaks: Vec<f64> = ratios
        .iter()
        .map(|&r| md_peak_aoi(1.0, 1.0 / r).unwrap())
        .collect();
    let rises: Vec<bool> = peaks.windows(2).map(|w| w[1] > w[0]).collect();
    let direction_changes = rises.windows(2).filter(|w| w[0] != w[1]).count();
    c.check("peak over ratio changes direction once", direction_changes == 1);
    c.check(
        "maximum is interior",
        rises.first() == Some(&true) && rises.last() == Some(&false),
    );

    // (c) The average-age curves of the two duals cross near ratio 0.8.
    let f = |r: f64| mm_avg_aoi(1.0, r).unwrap() - md_avg_aoi(1.0, 1.0 / r).unwrap();
    let (mut lo, mut hi) = (0.5, 1.0);
    c.check("bracketing signs differ", f(lo) * f(hi) < 0.0);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    c.close_abs("crossing ratio", 0.5 * (lo + hi), 0.8, 0.05);

    // (d) At equal unit rates both duals refresh at about 1.5 per unit
    // time and discard about a quarter of completions.
    c.check(
        "mm effective rate is exactly 1.5",
        mm_effective_rate(1.0, 1.0).unwrap() == 1.5,
    );
    c.check(
        "mm obsolete ratio is exactly 1/4",
        mm_obsolete_ratio(1.0, 1.0).unwrap() == 0.25,
    );
    c.close_abs("md effective rate", md_effective_rate(1.0, 1.0).unwrap(), 1.5, 0.01);
    c.close_abs(
        "md obsolete ratio",
        md_obsolete_ratio(1.0, 1.0).unwrap() * 100.0,
        25.0,
        1.0,
    );
    c.close_rel("simulated mm effective rate", mm.effective_arrival_rate, 1.5, 0.02);
    c.close_abs("simulated mm obsolete ratio", mm.obsolete_ratio * 100.0, 25.0, 1.0);
    c.close_abs("simulated md obsolete ratio", md.obsolete_ratio * 100.0, 25.0, 1.0);

    c.finish();
}

#[test]
fn criterion_11_preemptive_single_queue_equivalence() {
    let mut c = Criterion::new("11", "preemptive single queue reproduces the dual at 4x/5.54x");
    for mu in [0.5, 1.0, 2.0] {
        c.check(
            &format!("avg equal at rate {mu}"),
            mm11_preempt_avg_aoi(4.0 * mu, mu).unwrap() == mm_avg_aoi(mu, mu).unwrap(),
        );
    }
    c.close_abs(
        "peak equal at 5.54x",
        mm11_preempt_peak_aoi(5.54, 1.0).unwrap(),
        mm_peak_aoi(1.0, 1.0).unwrap(),
        1e-3,
    );

    let avg_run = simulate(SystemSpec::mm11_preempt(4.0, 1.0).unwrap(), 1100, 100_000);
    c.close_rel("simulated avg", avg_run.avg_aoi, mm_avg_aoi(1.0, 1.0).unwrap(), 0.02);
    let peak_run = simulate(SystemSpec::mm11_preempt(5.54, 1.0).unwrap(), 1101, 100_000);
    c.close_rel(
        "simulated peak",
        peak_run.avg_paoi,
        mm11_preempt_peak_aoi(5.54, 1.0).unwrap(),
        0.02,
    );

    c.finish();
}
