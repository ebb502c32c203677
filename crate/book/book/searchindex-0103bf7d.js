window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","getting-started.html#getting-started","getting-started.html#building","getting-started.html#library-in-one-minute","getting-started.html#cli-in-one-minute","closed-forms.html#closed-forms","closed-forms.html#baselines","closed-forms.html#m-m","closed-forms.html#m-d","closed-forms.html#refresh-rates-and-discards","closed-forms.html#the-m-d-period-state-by-state","state-graph.html#the-refresh-state-graph","state-graph.html#four-states-ten-paths","state-graph.html#steady-state-and-occurrence-weights","state-graph.html#peak-age-from-the-paths","state-graph.html#two-steps-and-the-sawtooth-area","state-graph.html#classifying-simulated-refreshes","simulation.html#simulation","simulation.html#running","simulation.html#determinism-and-named-streams","simulation.html#traces","simulation.html#the-replay-oracle","simulation.html#d-d-phase","simulation.html#the-conditional-m-d-oracle","validation.html#validation","validation.html#the-cross-check-web","validation.html#the-acceptance-suite","validation.html#reproducibility"],"index":{"documentStore":{"docInfo":{"0":{"body":255,"breadcrumbs":2,"title":1},"1":{"body":0,"breadcrumbs":4,"title":2},"10":{"body":177,"breadcrumbs":7,"title":5},"11":{"body":17,"breadcrumbs":6,"title":3},"12":{"body":140,"breadcrumbs":7,"title":4},"13":{"body":80,"breadcrumbs":7,"title":4},"14":{"body":42,"breadcrumbs":6,"title":3},"15":{"body":81,"breadcrumbs":7,"title":4},"16":{"body":82,"breadcrumbs":6,"title":3},"17":{"body":27,"breadcrumbs":2,"title":1},"18":{"body":87,"breadcrumbs":2,"title":1},"19":{"body":77,"breadcrumbs":4,"title":3},"2":{"body":36,"breadcrumbs":3,"title":1},"20":{"body":65,"breadcrumbs":2,"title":1},"21":{"body":61,"breadcrumbs":3,"title":2},"22":{"body":96,"breadcrumbs":4,"title":3},"23":{"body":53,"breadcrumbs":5,"title":4},"24":{"body":20,"breadcrumbs":2,"title":1},"25":{"body":206,"breadcrumbs":4,"title":3},"26":{"body":95,"breadcrumbs":3,"title":2},"27":{"body":26,"breadcrumbs":2,"title":1},"3":{"body":50,"breadcrumbs":5,"title":3},"4":{"body":139,"breadcrumbs":5,"title":3},"5":{"body":16,"breadcrumbs":4,"title":2},"6":{"body":76,"breadcrumbs":3,"title":1},"7":{"body":115,"breadcrumbs":4,"title":2},"8":{"body":95,"breadcrumbs":4,"title":2},"9":{"body":69,"breadcrumbs":5,"title":3}},"docs":{"0":{"body":"A monitor wants the current state of some process. Sensors watch the\\nprocess, and each sensor repeats the same loop forever: sample the process,\\ntransmit the sample, and the moment the transmission is acknowledged, sample\\nagain. Transmission takes time, so what the monitor holds is always somewhat\\nstale. The age of information (AoI) makes that staleness precise: at\\ntime t, if the freshest update the monitor has received was generated at\\ntime u(t), the age is age(t) = t - u(t) The age grows at slope one and drops whenever a fresher update arrives,\\ntracing the familiar sawtooth. Two summary numbers matter: average AoI: the time average of age(t); average peak AoI: the average of the age values reached immediately\\nbefore each refresh, the worst staleness per cycle. dualfresh is about what happens when two sensors report the same\\nprocess over separate channels. Two sensors refresh the monitor more often,\\nbut they also step on each other: an update that arrives carrying a\\ngeneration time no newer than what the monitor already holds is useless and\\nis discarded as obsolete. Ties count as obsolete. All analysis and\\nsimulation in this crate accounts for that discard rule. Systems are named by the two service-time laws. M is an exponential\\n(memoryless) channel, D a deterministic one: M-M: both channels exponential, rates mu_A and mu_B; M-D: one exponential channel and one fixed-period channel; D-D: both deterministic, interesting mostly for its phase behavior. For context the crate also covers two single-channel references: a lone\\nalways-busy exponential sensor, and the M/M/1/1 queue with preemption in\\nservice. The simulator additionally handles an M/M/2 setup where both\\nservers feed from one queue of externally arriving samples, which is the\\nnatural “one shared queue” alternative to two independent sensors. The crate gives three independent routes to the same numbers: closed forms for the M-M and M-D averages; a state-graph construction for the M-M system that\\nrebuilds the same averages out of per-transition statistics; a seeded discrete-event simulator for all five system\\nkinds. The validation chapter shows how the three routes are\\nplayed against each other, which is also exactly what the test suite does. Everything is exposed both as a library ( dualfresh) and as a command-line\\ntool ( dualfresh), described in Getting started.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"","breadcrumbs":"Getting started » Getting started","id":"1","title":"Getting started"},"10":{"body":"The M-D averages can also be assembled from per-period conditional\\nexpectations. Condition on the pair (k, n): the number of exponential\\ncompletions in the previous period and in the current one. Given the\\ncounts, the completion instants are uniform order statistics, and the peak\\ncount, summed peak age, and sawtooth area of the period all have exact\\nconditional expectations, computed by md_state_expectation. The weight of\\neach state is a product of two Poisson probabilities. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{md_state_expectation, md_state_probability}; let e = md_state_expectation(1.0, 1.0, 1, 1).unwrap();\\nassert_eq!(e.peak_count, 2.0);\\nassert!((e.peak_sum - 3.0).abs() < 1e-15);\\nassert!((e.area - 1.25).abs() < 1e-15); let p = md_state_probability(1.0, 1.0, 0, 0).unwrap();\\nassert!((p - (-2.0f64).exp()).abs() < 1e-15); } Weighting the cells by their probabilities and summing gives a second,\\nindependent route to the M-D averages. The truncation is chosen so the\\nneglected Poisson tail is far below any tolerance used here: #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{ md_avg_aoi, md_avg_aoi_aggregate, md_avg_paoi_aggregate, md_peak_aoi,\\n}; for (mu, period) in [(1.0, 1.0), (2.0, 0.3), (0.5, 4.0)] { let direct = md_peak_aoi(mu, period).unwrap(); let summed = md_avg_paoi_aggregate(mu, period).unwrap(); assert!((direct - summed).abs() / direct < 1e-12); let direct = md_avg_aoi(mu, period).unwrap(); let summed = md_avg_aoi_aggregate(mu, period).unwrap(); assert!((direct - summed).abs() / direct < 1e-12);\\n} } The order-statistic integrals behind the conditional cells reduce to\\nvolumes of ordered simplexes, exposed as simplex_volume: placing points - 2 ordered interior points inside an interval of length span\\nhas weight span^(points-2) / (points-2)!. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::simplex_volume; assert_eq!(simplex_volume(2.0, 2).unwrap(), 1.0);\\nassert!((simplex_volume(2.0, 5).unwrap() - 8.0 / 6.0).abs() < 1e-15); }","breadcrumbs":"Closed forms » The M-D period, state by state","id":"10","title":"The M-D period, state by state"},"11":{"body":"The M-M closed forms can be rebuilt from the structure of the refresh\\nprocess itself. The machinery lives in dualfresh::markov and doubles as a\\nvalidation harness for simulated traces.","breadcrumbs":"The refresh state graph » The refresh state graph","id":"11","title":"The refresh state graph"},"12":{"body":"Right after an accepted delivery the system is described by two bits: which\\nsensor delivered, and whether the other sensor’s in-service update is\\nstill fresh, meaning generated after the sample the monitor now holds. That\\ngives four states A0, A1, B0, B1 ( 0 fresh, 1 stale). Between refreshes those bits evolve deterministically except for the race\\nbetween the two exponential services, and exactly ten transitions are\\npossible. Each carries its own statistics: the transition probability, the\\nexpected age of the arriving update (its service time T), and the first\\ntwo moments of the refresh gap Y. #![allow(unused)] fn main() {\\nuse dualfresh::markov::{mm_path_table, MmState}; let table = mm_path_table(1.0, 1.0).unwrap();\\nassert_eq!(table.len(), 10); // First path: sensor A delivers twice in a row out of A0.\\nlet p = &table[0];\\nassert_eq!((p.from_state, p.to_state), (MmState::A0, MmState::A1));\\nassert_eq!(p.prob, 0.5);\\nassert_eq!(p.mean_service, 0.5);\\nassert_eq!(p.mean_interarrival, 0.5);\\nassert_eq!(p.second_moment_interarrival, 0.5); // Probabilities out of each state sum to one.\\nfor state in MmState::ALL { let out: f64 = table .iter() .filter(|p| p.from_state == state) .map(|p| p.prob) .sum(); assert!((out - 1.0).abs() < 1e-14);\\n} } A gap moment of 2/s or 6/s^2 (with s the total rate) marks the\\ntransitions that need two stages: an obsolete completion thrown away, then\\nthe completion that actually refreshes.","breadcrumbs":"The refresh state graph » Four states, ten paths","id":"12","title":"Four states, ten paths"},"13":{"body":"The ten transition probabilities form a 4x4 stochastic matrix whose\\nstationary distribution has a closed form; a direct linear solve of the\\nfixed point is kept alongside it as a cross-check. Weighting each path’s\\nprobability by the stationary weight of its source state gives the\\noccurrence probabilities, which sum to one over all ten paths. #![allow(unused)] fn main() {\\nuse dualfresh::markov::{mm_path_table, mm_steady_state, mm_steady_state_numeric}; let pi = mm_steady_state(1.0, 1.0).unwrap();\\nassert!((pi[0] - 1.0 / 6.0).abs() < 1e-15);\\nassert!((pi[1] - 1.0 / 3.0).abs() < 1e-15); let numeric = mm_steady_state_numeric(1.0, 1.0).unwrap();\\nfor (c, n) in pi.iter().zip(&numeric) { assert!((c - n).abs() < 1e-12);\\n} let total: f64 = mm_path_table(1.0, 1.0) .unwrap() .iter() .map(|p| p.occurrence) .sum();\\nassert!((total - 1.0).abs() < 1e-14); }","breadcrumbs":"The refresh state graph » Steady state and occurrence weights","id":"13","title":"Steady state and occurrence weights"},"14":{"body":"The mean refresh gap and the mean on-arrival age both come out as s / xi, and their sum is the peak AoI: the same value the closed form\\ngives, reached through entirely different bookkeeping. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::mm_peak_aoi;\\nuse dualfresh::markov::{mm_mean_interarrival, mm_mean_service}; let peak = mm_mean_service(2.0, 3.0).unwrap() + mm_mean_interarrival(2.0, 3.0).unwrap();\\nassert!((peak - mm_peak_aoi(2.0, 3.0).unwrap()).abs() < 1e-12); }","breadcrumbs":"The refresh state graph » Peak age from the paths","id":"14","title":"Peak age from the paths"},"15":{"body":"The average AoI needs one more ingredient: each sawtooth trapezoid spans two consecutive refreshes, so its expected area depends on the pair of\\npaths around it. Chaining every path with every compatible successor gives\\n26 ordered cases. The first thirteen start from a refresh by sensor A; the\\nother thirteen are their mirror images under swapping the sensor labels,\\nwhich exchanges the two rates. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::mm_avg_aoi;\\nuse dualfresh::markov::{mm_avg_aoi_graphical, mm_two_step_table}; let cases = mm_two_step_table(1.0, 1.0).unwrap();\\nassert_eq!(cases.len(), 26);\\nlet total: f64 = cases.iter().map(|c| c.prob).sum();\\nassert!((total - 1.0).abs() < 1e-14); // Occurrence-weighted trapezoid area over mean gap equals the closed form.\\nlet graphical = mm_avg_aoi_graphical(2.0, 3.0).unwrap();\\nassert!((graphical - mm_avg_aoi(2.0, 3.0).unwrap()).abs() < 1e-12); }","breadcrumbs":"The refresh state graph » Two steps and the sawtooth area","id":"15","title":"Two steps and the sawtooth area"},"16":{"body":"classify_refresh is the bridge between the simulator and this chapter: given\\nthe state after the previous refresh and what just happened (who delivered,\\nhow fresh the other sensor’s in-service update is), it returns the path\\nindex the refresh traveled. The simulator uses it to label every accepted\\ndelivery in its trace, and the test suite compares the resulting empirical\\npath statistics against the table above. #![allow(unused)] fn main() {\\nuse dualfresh::markov::{classify_refresh, MmState, RefreshContext};\\nuse dualfresh::Sensor; // From A0, sensor A delivers again: path 1 into A1.\\nlet l = classify_refresh( MmState::A0, RefreshContext { delivering: Sensor::A, other_generation: 0.4, refreshed_generation: 1.0, },\\n)\\n.unwrap();\\nassert_eq!(l, 1); // A pair of states with no connecting edge is a caller bug, not a panic.\\nassert!(classify_refresh( MmState::A0, RefreshContext { delivering: Sensor::A, other_generation: 2.0, refreshed_generation: 1.0, },\\n)\\n.is_err()); }","breadcrumbs":"The refresh state graph » Classifying simulated refreshes","id":"16","title":"Classifying simulated refreshes"},"17":{"body":"dualfresh::sim is a seeded discrete-event simulator for all five system\\nkinds. It exists to check the closed forms against something that knows\\nnothing about them: the engine only plays out services, deliveries, and the\\nobsolete-discard rule, and measures the resulting sawtooth.","breadcrumbs":"Simulation » Simulation","id":"17","title":"Simulation"},"18":{"body":"A run is described by a SimConfig: the system, a seed, how many accepted\\ndeliveries to collect, how many of the first accepted deliveries to discard\\nas warmup, and how many batches to split the measurement into for\\nconfidence intervals. #![allow(unused)] fn main() {\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let mut config = SimConfig::new(SystemSpec::md(1.0, 1.0).unwrap(), 42);\\nconfig.target_accepted = 8_000;\\nconfig.warmup_accepted = 500;\\nconfig.batch_count = 16;\\nlet out = run(&config).unwrap(); let stats = out.stats;\\nassert!(stats.avg_paoi >= stats.avg_aoi);\\nassert!(stats.half_width_aoi > 0.0);\\nassert!((stats.avg_paoi - 1.4459).abs() < 0.05); } SimStats carries the two age averages with their 95% batch-means\\nhalf-widths, the accepted and obsolete delivery counts, the effective\\n(accepted) delivery rate, and the measured time horizon. Stopping is by\\naccepted-delivery count, not by simulated time, so the per-delivery peak\\nstatistic has a fixed sample size at any parameter point.","breadcrumbs":"Simulation » Running","id":"18","title":"Running"},"19":{"body":"Every source of randomness draws from its own stream, derived from the\\nmaster seed and a fixed name (sensor A, sensor B, external arrivals, the\\nD-D phase draw). Two consequences: identical configs reproduce identical results, bit for bit; changing one ingredient leaves the other streams’ draws untouched, so\\ne.g. an M-M and an M-D run with the same seed see the same sensor-A\\nservice times, which is ideal for comparing systems without Monte-Carlo noise\\nbetween them. #![allow(unused)] fn main() {\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let mut config = SimConfig::new(SystemSpec::mm(1.0, 2.0).unwrap(), 9);\\nconfig.target_accepted = 2_000;\\nconfig.warmup_accepted = 100;\\nlet a = run(&config).unwrap();\\nlet b = run(&config).unwrap();\\nassert_eq!(a.stats.avg_aoi.to_bits(), b.stats.avg_aoi.to_bits()); }","breadcrumbs":"Simulation » Determinism and named streams","id":"19","title":"Determinism and named streams"},"2":{"body":"The repository is a cargo workspace with two crates: the dualfresh\\nlibrary and the dualfresh-cli front end, whose binary is named dualfresh. cargo build --workspace --release\\ncargo test --workspace # full suite, including the acceptance tests\\ncargo run -p dualfresh-cli -- # run the CLI without installing","breadcrumbs":"Getting started » Building","id":"2","title":"Building"},"20":{"body":"With emit_trace set, the run records every accepted delivery: time,\\ngeneration time, delivering sensor, the refresh gap Y, the on-arrival age T, and, for the dual always-busy systems, the state-graph labels from the previous chapter. #![allow(unused)] fn main() {\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let mut config = SimConfig::new(SystemSpec::mm(1.0, 1.0).unwrap(), 5);\\nconfig.target_accepted = 1_000;\\nconfig.warmup_accepted = 16;\\nconfig.batch_count = 8;\\nconfig.emit_trace = true;\\nlet out = run(&config).unwrap();\\nassert_eq!(out.trace.len() as u64, out.stats.n_accepted + 16); // Every refresh after the first is classified onto one of the ten paths.\\nfor record in &out.trace[1..] { let path = record.path.unwrap(); assert!((1..=10).contains(&path));\\n} }","breadcrumbs":"Simulation » Traces","id":"20","title":"Traces"},"21":{"body":"Statistics are accumulated incrementally during the run; replay_oracle\\nrecomputes them from nothing but the delivery log, with independent\\narithmetic. The two must agree, and the tests hold them to it. #![allow(unused)] fn main() {\\nuse dualfresh::sim::replay_oracle; // A single delivery at t=1 carrying a sample generated at 0.5,\\n// watched until t=2: two trapezoids and one peak.\\nlet (avg_aoi, avg_paoi) = replay_oracle(&[(1.0, 0.5)], 2.0).unwrap();\\nassert!((avg_aoi - 0.75).abs() < 1e-12);\\nassert!((avg_paoi - 1.0).abs() < 1e-12); // Obsolete deliveries are discarded by the replay too.\\nlet (with_stale, _) = replay_oracle(&[(1.0, 0.5), (1.5, 0.2)], 2.0).unwrap();\\nassert_eq!(with_stale, avg_aoi); }","breadcrumbs":"Simulation » The replay oracle","id":"21","title":"The replay oracle"},"22":{"body":"Two deterministic sensors never race; everything hinges on their relative\\nphase. The offset is configurable and defaults to a per-seed uniform draw,\\nsince a fixed alignment would be an arbitrary choice. With equal periods T and offset phi * T, the steady sawtooth is exactly periodic: peaks\\nalternate between (2 - phi) T and (1 + phi) T, so the average peak is 1.5 T for every interior phase, while the average AoI is (phi^2 - phi + 1.5) T. At phi = 0 the sensors collide and the tie rule\\ndiscards every B delivery, leaving the single-sensor sawtooth. #![allow(unused)] fn main() {\\nuse dualfresh::model::DdOffset;\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let spec = SystemSpec::dd(1.0, 1.0, DdOffset::Fixed(0.25)).unwrap();\\nlet mut config = SimConfig::new(spec, 1);\\nconfig.target_accepted = 4_000;\\nconfig.warmup_accepted = 200;\\nlet out = run(&config).unwrap();\\nassert!((out.stats.avg_paoi - 1.5).abs() < 1e-9);\\nassert!((out.stats.avg_aoi - 1.3125).abs() < 1e-9); }","breadcrumbs":"Simulation » D-D phase","id":"22","title":"D-D phase"},"23":{"body":"The per-state expectations of the M-D analysis have their own dedicated\\nchecker: conditional_md_oracle fixes the state (k, n), samples the\\ncompletion instants as sorted uniforms, replays the exact sawtooth of the\\nperiod, and reports means with standard errors. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::md_state_expectation;\\nuse dualfresh::sim::conditional_md_oracle; let exact = md_state_expectation(1.0, 1.0, 1, 1).unwrap();\\nlet est = conditional_md_oracle(1.0, 1.0, 1, 1, 20_000, 3).unwrap();\\nassert!((est.peak_sum - exact.peak_sum).abs() < 4.0 * est.peak_sum_se);\\nassert!((est.area - exact.area).abs() < 4.0 * est.area_se); }","breadcrumbs":"Simulation » The conditional M-D oracle","id":"23","title":"The conditional M-D oracle"},"24":{"body":"No single number in this crate is trusted on its own authority. Every\\nquantity is reachable by at least two routes that share as little machinery\\nas possible, and the test suite exists to force those routes to agree.","breadcrumbs":"Validation » Validation","id":"24","title":"Validation"},"25":{"body":"Closed form vs. state graph. The M-M peak AoI comes from an algebraic\\nformula and, separately, from occurrence-weighted path statistics; the\\naverage AoI comes from a formula and from the 26-case trapezoid sum. Both\\npairs agree to near machine precision over random rate grids. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{mm_avg_aoi, mm_peak_aoi};\\nuse dualfresh::markov::{mm_avg_aoi_graphical, mm_mean_interarrival, mm_mean_service}; for (a, b) in [(0.3, 1.7), (2.0, 3.0), (5.0, 0.2)] { let peak_paths = mm_mean_service(a, b).unwrap() + mm_mean_interarrival(a, b).unwrap(); assert!((peak_paths - mm_peak_aoi(a, b).unwrap()).abs() < 1e-12); let avg_graph = mm_avg_aoi_graphical(a, b).unwrap(); assert!((avg_graph - mm_avg_aoi(a, b).unwrap()).abs() < 1e-12);\\n} } Closed form vs. per-state aggregation. The M-D averages come from\\ndirect formulas and from Poisson-weighted sums of conditional per-period\\nexpectations; they agree to twelve digits across the parameter range. Conditional cells vs. Monte Carlo. Each conditional cell is itself\\nvalidated by conditional_md_oracle, which replays the period’s exact\\nsawtooth on sampled completion placements. Analytic vs. simulation. The simulator knows only the protocol. Its\\nestimates land within the batch-means confidence intervals of the closed\\nforms, and across many seeds the nominal 95% intervals cover the true\\nvalues at close to the nominal rate. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::mm_avg_aoi;\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let mut config = SimConfig::new(SystemSpec::mm(2.0, 2.0).unwrap(), 11);\\nconfig.target_accepted = 10_000;\\nconfig.warmup_accepted = 500;\\nlet stats = run(&config).unwrap().stats;\\nlet truth = mm_avg_aoi(2.0, 2.0).unwrap();\\nassert!((stats.avg_aoi - truth).abs() < 5.0 * stats.half_width_aoi.max(0.01)); } Incremental vs. replayed integration. The running accumulator and replay_oracle integrate the same sample path with different arithmetic\\nand must match to ten digits on real traces. Trace vs. transition table. Classified simulation traces yield\\nempirical per-path frequencies and moments, which are compared against\\nthe state-graph table within Monte-Carlo error.","breadcrumbs":"Validation » The cross-check web","id":"25","title":"The cross-check web"},"26":{"body":"cargo test --workspace runs everything. The dedicated acceptance test\\ntarget walks the checks above at fixed seeds and prints one line per\\ncriterion; it covers the point values, the reduction percentages against\\nthe single-sensor baseline, the equivalence of all independent routes, the\\nsimulation agreement at 10^5 accepted deliveries, the empirical path-table\\nvalidation at 10^6 refreshes, and the qualitative orderings between the\\nsystem kinds (where the M/M/2 arrangement loses to every dual-sensor\\nsystem, and the preemptive M/M/1/1 needs a 4x faster sampler to tie the\\nM-M average). cargo test --workspace\\ncargo test -p dualfresh --test acceptance -- --nocapture The CLI exposes the same idea as a command: dualfresh validate --seed 7 which runs the analytic-vs-simulation and table-validation suites at a\\nreduced sample size and prints a pass/fail report.","breadcrumbs":"Validation » The acceptance suite","id":"26","title":"The acceptance suite"},"27":{"body":"All simulation-backed checks use fixed seeds and named random streams, so a\\nfailure reproduces exactly. Sweep outputs echo every configuration value\\nthat produced them, and all numbers serialize with 12 significant digits so\\nthat a regression diff is meaningful.","breadcrumbs":"Validation » Reproducibility","id":"27","title":"Reproducibility"},"3":{"body":"Closed forms are plain functions; the simulator takes a config and returns\\nstatistics with confidence half-widths. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{mm_avg_aoi, mm_peak_aoi};\\nuse dualfresh::sim::{run, SimConfig};\\nuse dualfresh::SystemSpec; let avg = mm_avg_aoi(1.0, 1.0).unwrap();\\nlet peak = mm_peak_aoi(1.0, 1.0).unwrap();\\nassert_eq!(avg, 1.25);\\nassert!((peak - 4.0 / 3.0).abs() < 1e-12); let mut config = SimConfig::new(SystemSpec::mm(1.0, 1.0).unwrap(), 7);\\nconfig.target_accepted = 5_000;\\nconfig.warmup_accepted = 500;\\nlet out = run(&config).unwrap();\\nassert!((out.stats.avg_aoi - avg).abs() < 0.1); }","breadcrumbs":"Getting started » Library in one minute","id":"3","title":"Library in one minute"},"4":{"body":"Evaluate closed forms: dualfresh analytic --system mm --mu-a 1 --mu-b 1\\ndualfresh analytic --system md --mu 1 --period 1 --json Simulate with a fixed seed (JSON output echoes the full configuration and,\\nwhere a closed form exists, the reference value and relative error): dualfresh simulate --system mm --mu-a 1 --mu-b 1 --seed 42\\ndualfresh simulate --system dd --period-a 1 --period-b 1 --offset 0.25 \\\\ --accepted 20000 --trace trace.csv Sweep a parameter across systems and write a CSV ready for plotting: dualfresh sweep --systems mm,md --variable rate-ratio --start 0.05 --stop 1 \\\\ --steps 20 --metrics avg_aoi,avg_paoi --mode both --seed 1 --out sweep.csv Run the built-in validation suite (analytic vs. simulation vs. tables): dualfresh validate --seed 7 The default seed for all commands can also be set through the DUALFRESH_SEED environment variable; an explicit --seed wins. Flags\\nlikewise take precedence over values from an optional --config TOML file. Numbers in JSON and CSV output are serialized with 12 significant digits,\\nso regression comparisons survive a round-trip through text.","breadcrumbs":"Getting started » CLI in one minute","id":"4","title":"CLI in one minute"},"5":{"body":"All closed forms live in dualfresh::analytic. Rates must be positive and\\nfinite; everything returns Result and rejects bad parameters instead of\\nproducing NaN.","breadcrumbs":"Closed forms » Closed forms","id":"5","title":"Closed forms"},"6":{"body":"A single always-busy exponential sensor of rate mu refreshes the monitor\\nwith every completion, and both its average and peak AoI are 2 / mu. This\\nis the yardstick the dual systems are measured against. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{single_queue_avg_aoi, single_queue_peak_aoi}; assert_eq!(single_queue_avg_aoi(1.0).unwrap(), 2.0);\\nassert_eq!(single_queue_peak_aoi(1.0).unwrap(), 2.0); } The M/M/1/1 queue with preemption in service (Poisson sampling at rate lambda, one exponential server of rate mu, a new sample replaces\\nwhatever is being sent) has average AoI 1/lambda + 1/mu and peak AoI 1/lambda + 1/mu + 1/(lambda + mu). #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{mm11_preempt_avg_aoi, mm11_preempt_peak_aoi}; assert!((mm11_preempt_avg_aoi(4.0, 1.0).unwrap() - 1.25).abs() < 1e-15);\\nassert!((mm11_preempt_peak_aoi(1.0, 1.0).unwrap() - 2.5).abs() < 1e-15); }","breadcrumbs":"Closed forms » Baselines","id":"6","title":"Baselines"},"7":{"body":"Write s = mu_a + mu_b and xi = mu_a^2 + mu_a mu_b + mu_b^2. Then peak = 2 s / xi\\navg = 2 (mu_a^2 + 3 mu_a mu_b + mu_b^2) / s^3 At equal unit rates the average drops from the single-sensor 2 to 1.25, a\\n37.5% reduction; the peak drops from 2 to 4/3, one third off. Doubling the\\nsecond sensor’s rate helps more: #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{mm_avg_aoi, mm_peak_aoi}; assert_eq!(mm_avg_aoi(1.0, 1.0).unwrap(), 1.25);\\nassert!((mm_peak_aoi(1.0, 1.0).unwrap() - 4.0 / 3.0).abs() < 1e-15);\\nassert!((mm_avg_aoi(2.0, 3.0).unwrap() - 62.0 / 125.0).abs() < 1e-15);\\nassert!((mm_peak_aoi(2.0, 3.0).unwrap() - 10.0 / 19.0).abs() < 1e-15); } Both metrics scale like a time: multiplying all rates by c divides the\\nage by c. And a second sensor can only help: at any rates the dual\\nvalues sit below the better single sensor’s 2 / mu: #![allow(unused)] fn main() {\\nuse dualfresh::analytic::mm_avg_aoi; let c = 10.0;\\nlet base = mm_avg_aoi(2.0, 3.0).unwrap();\\nassert!((mm_avg_aoi(2.0 * c, 3.0 * c).unwrap() - base / c).abs() < 1e-14);\\nassert!(mm_avg_aoi(1.0, 0.001).unwrap() < 2.0); }","breadcrumbs":"Closed forms » M-M","id":"7","title":"M-M"},"8":{"body":"One exponential sensor of rate mu, one deterministic sensor delivering\\nevery period. With a = mu * period: peak = (2 + 2a + e^a (a (2 e^a + a) - 2)) / (mu (1 + e^a (1 + e^a) a))\\navg = (3 + 2a + e^a ((2 e^a - 1) a - 3)) / (period mu^2 e^(2a)) #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{md_avg_aoi, md_peak_aoi}; assert!((md_peak_aoi(1.0, 1.0).unwrap() - 1.445_875_733_176_368).abs() < 1e-14);\\nassert!((md_avg_aoi(1.0, 1.0).unwrap() - 1.205_158_651_497_294).abs() < 1e-14); } Both single-sensor limits fall out: a vanishing exponential rate leaves the\\nperiodic sensor’s 2 * period, and a very long period leaves the\\nexponential sensor’s 2 / mu. #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{md_avg_aoi, md_peak_aoi}; assert!((md_peak_aoi(1e-9, 1.0).unwrap() - 2.0).abs() < 1e-6);\\nassert!((md_peak_aoi(1.0, 40.0).unwrap() - 2.0).abs() < 1e-9);\\nassert!((md_avg_aoi(1.0, 40.0).unwrap() - 2.0).abs() < 1e-9); }","breadcrumbs":"Closed forms » M-D","id":"8","title":"M-D"},"9":{"body":"Not every completed update refreshes the monitor. The fraction discarded as\\nobsolete, and the surviving effective refresh rate, have closed forms too: #![allow(unused)] fn main() {\\nuse dualfresh::analytic::{ md_effective_rate, md_obsolete_ratio, md_peak_count, mm_effective_rate, mm_obsolete_ratio,\\n}; // M-M at equal unit rates: raw delivery rate 2, one in four discarded.\\nassert!((mm_effective_rate(1.0, 1.0).unwrap() - 1.5).abs() < 1e-15);\\nassert!((mm_obsolete_ratio(1.0, 1.0).unwrap() - 0.25).abs() < 1e-15); // M-D: accepted deliveries per period, e^(-2a) + a e^(-a) + a.\\nlet per_period = md_peak_count(1.0, 1.0).unwrap();\\nassert!((per_period - 1.503_214_724_408_055).abs() < 1e-12);\\nassert_eq!(md_effective_rate(1.0, 1.0).unwrap(), per_period);\\nassert!((md_obsolete_ratio(1.0, 1.0).unwrap() - 0.2484).abs() < 1e-4); }","breadcrumbs":"Closed forms » Refresh rates and discards","id":"9","title":"Refresh rates and discards"}},"length":28,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{"0":{"1":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.0}}},"df":1,"docs":{"18":{"tf":1.0}}},"1":{"df":1,"docs":{"3":{"tf":1.0}}},"2":{"4":{"8":{"4":{")":{".":{"a":{"b":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{")":{".":{"a":{"b":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"4":{"tf":1.0}}},"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}}},"3":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.0}}},"4":{"df":1,"docs":{"16":{"tf":1.0}}},"5":{"df":3,"docs":{"10":{"tf":1.0},"12":{"tf":2.0},"21":{"tf":1.7320508075688772}}},"7":{"5":{")":{".":{"a":{"b":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0}}},"1":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":10,"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772},"9":{"tf":2.23606797749979}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":5,"docs":{"10":{"tf":2.23606797749979},"13":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.4142135623730951}}},"2":{"0":{"5":{"_":{"1":{"5":{"8":{"_":{"6":{"5":{"1":{"_":{"4":{"9":{"7":{"_":{"2":{"9":{"4":{")":{".":{"a":{"b":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{")":{".":{"a":{"b":{"df":2,"docs":{"10":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"3":{"1":{"2":{"5":{")":{".":{"a":{"b":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"4":{"5":{"9":{")":{".":{"a":{"b":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"8":{"7":{"5":{"_":{"7":{"3":{"3":{"_":{"1":{"7":{"6":{"_":{"3":{"6":{"8":{")":{".":{"a":{"b":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{")":{".":{"a":{"b":{"df":2,"docs":{"22":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"3":{"_":{"2":{"1":{"4":{"_":{"7":{"2":{"4":{"_":{"4":{"0":{"8":{"_":{"0":{"5":{"5":{")":{".":{"a":{"b":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.4142135623730951}}},"7":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"/":{"(":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"m":{"b":{"d":{"a":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"u":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}}},"0":{".":{"0":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"19":{"tf":1.0}}},"^":{"5":{"df":1,"docs":{"26":{"tf":1.0}}},"6":{"df":1,"docs":{"26":{"tf":1.0}}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"1":{"df":1,"docs":{"25":{"tf":1.0}}},"2":{"5":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":10,"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"9":{"tf":1.0}}},"4":{"df":5,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"5":{"df":5,"docs":{"10":{"tf":2.0},"13":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}},"6":{"df":2,"docs":{"18":{"tf":1.0},"20":{"tf":1.4142135623730951}}},"9":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":7,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"4":{"tf":3.1622776601683795},"8":{"tf":1.7320508075688772}},"e":{"df":13,"docs":{"10":{"tf":2.449489742783178},"12":{"tf":1.0},"13":{"tf":2.0},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":2.0},"8":{"tf":2.23606797749979},"9":{"tf":2.0}}}},"2":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"8":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":3,"docs":{"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":5,"docs":{"10":{"tf":1.4142135623730951},"16":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}},"f":{"6":{"4":{")":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"a":{"b":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"5":{")":{".":{"a":{"b":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"df":1,"docs":{"12":{"tf":1.0}}},"0":{"0":{"0":{"0":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"22":{"tf":1.0}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"4":{"tf":1.0}}},"6":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"25":{"tf":1.0}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":2,"docs":{"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":6,"docs":{"10":{"tf":1.7320508075688772},"22":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":2.23606797749979},"8":{"tf":2.449489742783178},"9":{"tf":1.0}}},"3":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"a":{"b":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"7":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":2,"docs":{"25":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"7":{".":{"5":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"4":{".":{"0":{"df":4,"docs":{"10":{"tf":1.0},"23":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"/":{"3":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"0":{".":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.0}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"9":{"tf":1.0}},"x":{"4":{"df":1,"docs":{"13":{"tf":1.0}}},"df":1,"docs":{"26":{"tf":1.0}}}},"5":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"0":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"0":{"0":{"df":3,"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"20":{"tf":1.0}}},"6":{".":{"0":{")":{".":{"a":{"b":{"df":2,"docs":{"10":{"tf":1.0},"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"df":0,"docs":{},"s":{"^":{"2":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"2":{".":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}},"7":{"df":3,"docs":{"26":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}},"8":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"_":{"0":{"0":{"0":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"20":{"tf":1.0}}},"9":{"5":{"df":2,"docs":{"18":{"tf":1.0},"25":{"tf":1.0}}},"df":3,"docs":{"19":{"tf":1.0},"22":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}}},"_":{"df":1,"docs":{"21":{"tf":1.0}}},"a":{"0":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0}}},"1":{"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.0}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":2,"docs":{"16":{"tf":1.0},"26":{"tf":1.0}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":8,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":2.23606797749979},"2":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.7320508075688772},"4":{"tf":1.0},"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}}}}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}}}}}}},"df":7,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"12":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0}},"e":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}}}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":18,"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"23":{"tf":1.0}}}},"t":{"df":3,"docs":{"25":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.7320508075688772}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772}}}},"r":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{"a":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"1":{".":{".":{"=":{"1":{"0":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"c":{"df":1,"docs":{"13":{"tf":1.0}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"e":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"d":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"(":{"1":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"1":{"1":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"4":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"2":{".":{"0":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"(":{"1":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":2,"docs":{"22":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":1,"docs":{"12":{"tf":1.0}}}}},"p":{"df":1,"docs":{"10":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":2,"docs":{"14":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"i":{"[":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"1":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"(":{"2":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"(":{"df":0,"docs":{},"p":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"a":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}}}},"c":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"l":{"df":1,"docs":{"16":{"tf":1.0}}},"m":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"p":{".":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"(":{"2":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":9,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"g":{")":{".":{"a":{"b":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{",":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":3,"docs":{"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"w":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"b":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{")":{".":{"a":{"b":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"25":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"0":{"df":1,"docs":{"12":{"tf":1.0}}},"1":{"df":1,"docs":{"12":{"tf":1.0}}},"a":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"27":{"tf":1.0}}}},"d":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"25":{"tf":1.0}}}},"df":0,"docs":{}}},"df":4,"docs":{"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.7320508075688772}},"e":{"df":1,"docs":{"6":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"t":{"df":0,"docs":{},"h":{"df":7,"docs":{"0":{"tf":2.0},"14":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0}}}}}},"c":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":2,"docs":{"2":{"tf":2.0},"26":{"tf":1.7320508075688772}}}},"l":{"df":0,"docs":{},"o":{"df":2,"docs":{"19":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":1.4142135623730951},"25":{"tf":1.0}},"s":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"p":{"(":{"df":0,"docs":{},"|":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":2,"docs":{"13":{"tf":1.0},"7":{"tf":2.0}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}}}},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":2.449489742783178}}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":4,"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":2,"docs":{"20":{"tf":1.0},"25":{"tf":1.0}}},"y":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"i":{"df":2,"docs":{"2":{"tf":1.7320508075688772},"26":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":11,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":2.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"25":{"tf":1.7320508075688772}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":6,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":2.0},"25":{"tf":1.7320508075688772}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"m":{"d":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}},"e":{"(":{"1":{".":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{},"g":{".":{"b":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"20":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"_":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"_":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":7,"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"22":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"19":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":1.0},"24":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}}}}}},"y":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"d":{"d":{"df":1,"docs":{"4":{"tf":1.0}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":0,"docs":{},"e":{"d":{"(":{"0":{".":{"2":{"5":{")":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":6,"docs":{"0":{"tf":2.23606797749979},"10":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"23":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.0}},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"23":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":2.0},"20":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":9,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":2.449489742783178},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"22":{"tf":1.0},"26":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"19":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"18":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.0}}}}}}}}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"27":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"25":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"25":{"tf":1.4142135623730951},"27":{"tf":1.0},"4":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":2.0},"13":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"w":{"df":2,"docs":{"19":{"tf":1.7320508075688772},"22":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"20":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{":":{":":{"a":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"i":{"c":{":":{":":{"df":0,"docs":{},"m":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":3,"docs":{"15":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}}}}},"{":{"df":0,"docs":{},"m":{"d":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"1":{"1":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":3,"docs":{"25":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{":":{":":{"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":2,"docs":{"15":{"tf":1.0},"25":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{":":{":":{"d":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"m":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"m":{"d":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"{":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"17":{"tf":1.0}}}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":4,"docs":{"0":{"tf":1.7320508075688772},"2":{"tf":2.0},"26":{"tf":1.4142135623730951},"4":{"tf":2.449489742783178}}}}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"^":{"(":{"2":{"a":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"8":{"tf":2.449489742783178}}},"df":0,"docs":{}},"a":{"c":{"df":0,"docs":{},"h":{"df":6,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":2,"docs":{"10":{"tf":1.0},"9":{"tf":1.4142135623730951}},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0}}}}}},"n":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"15":{"tf":1.0},"22":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"_":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":1,"docs":{"23":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"26":{"tf":1.0},"5":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{")":{".":{"a":{"b":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{")":{".":{"a":{"b":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":3,"docs":{"10":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"22":{"tf":1.0},"27":{"tf":1.0}}}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"17":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":5,"docs":{"0":{"tf":2.0},"10":{"tf":1.0},"12":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}}}}}}},"s":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"26":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}}}}}}}},"f":{"6":{"4":{"df":3,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":1,"docs":{"10":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"p":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"x":{"df":9,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"n":{"df":18,"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}},"m":{"df":11,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"25":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"9":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"25":{"tf":1.7320508075688772}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"2":{"tf":1.0},"4":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"p":{"df":4,"docs":{"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}},"n":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":3,"docs":{"0":{"tf":1.0},"20":{"tf":1.0},"25":{"tf":1.4142135623730951}},"i":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"18":{"tf":1.0},"3":{"tf":1.0}}}},"n":{"d":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"16":{"tf":1.0}}}}}},"r":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"22":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"26":{"tf":1.0}},"l":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":2,"docs":{"15":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"2":{"tf":1.0}}},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"5":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"10":{"tf":1.0},"22":{"tf":1.0}}}}},"v":{"df":3,"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}}}},"s":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":2,"docs":{"11":{"tf":1.0},"25":{"tf":1.0}}}}}}}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.7320508075688772}}}}}},"k":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":2,"docs":{"17":{"tf":1.0},"25":{"tf":1.0}}}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":3,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}}},"df":0,"docs":{},"m":{"b":{"d":{"a":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"n":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"w":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":1,"docs":{"16":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"v":{"df":3,"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}}},"t":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"5":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"21":{"tf":1.0}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}},"g":{"df":1,"docs":{"8":{"tf":1.0}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"m":{"/":{"df":0,"docs":{},"m":{"/":{"1":{"/":{"1":{"df":3,"docs":{"0":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":2,"docs":{"0":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"24":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":18,"docs":{"10":{"tf":1.7320508075688772},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":2,"docs":{"18":{"tf":1.7320508075688772},"25":{"tf":1.0}}}},"p":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"p":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"12":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"13":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"d":{"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"_":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"_":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":2,"docs":{"10":{"tf":1.0},"8":{"tf":1.4142135623730951}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"1":{".":{"0":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"9":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"1":{".":{"0":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"(":{"1":{".":{"0":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":1,"docs":{"4":{"tf":1.0}}},"df":8,"docs":{"0":{"tf":3.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"23":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}},"e":{"a":{"df":0,"docs":{},"n":{"df":6,"docs":{"12":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"27":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"m":{",":{"df":0,"docs":{},"m":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}},"1":{"1":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":3,"docs":{"15":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"l":{"(":{"2":{".":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"(":{"2":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":1,"docs":{"25":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"14":{"tf":1.0},"25":{"tf":1.0}},"e":{"(":{"2":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"(":{"1":{".":{"0":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":3,"docs":{"25":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}},"i":{"c":{"(":{"1":{".":{"0":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"(":{"1":{".":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":1,"docs":{"4":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"a":{"0":{"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.4142135623730951}}},"1":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"12":{"tf":1.0},"16":{"tf":1.0}}}}},"df":0,"docs":{}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"25":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":2.23606797749979},"12":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.0}}}}}},"t":{"df":2,"docs":{"19":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"u":{"^":{"2":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"_":{"a":{"^":{"2":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.7320508075688772}}},"b":{"^":{"2":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":5,"docs":{"10":{"tf":1.0},"4":{"tf":2.23606797749979},"6":{"tf":2.0},"7":{"tf":1.0},"8":{"tf":2.0}},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"t":{"df":6,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}},"n":{")":{".":{"a":{"b":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"27":{"tf":1.0}}}},"n":{"df":1,"docs":{"5":{"tf":1.0}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":3,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"23":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":3,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"26":{"tf":1.0}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"22":{"tf":1.0}}}}},"w":{"df":1,"docs":{"6":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"o":{"c":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"17":{"tf":1.0},"21":{"tf":1.0}}}},"w":{"df":1,"docs":{"12":{"tf":1.0}}}},"u":{"df":0,"docs":{},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"24":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":2,"docs":{"22":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}}}},"n":{"df":13,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":1,"docs":{"20":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}}},"r":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":2.0},"15":{"tf":1.0},"26":{"tf":1.0}}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}},"s":{".":{"df":0,"docs":{},"n":{"_":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"e":{"[":{"1":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":10,"docs":{"0":{"tf":1.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}}}}}},"p":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":4,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"18":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"26":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":7,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"20":{"tf":1.4142135623730951},"25":{"tf":1.7320508075688772},"26":{"tf":1.0}},"’":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":4,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"2":{"tf":1.0},"26":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"25":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"9":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"26":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":8,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"d":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":2.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":8,"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.7320508075688772},"8":{"tf":2.449489742783178},"9":{"tf":1.0}},"’":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"i":{"^":{"2":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"22":{"tf":2.23606797749979}}}},"i":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"z":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"(":{"&":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":1,"docs":{"13":{"tf":1.0}}},"l":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}},"y":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"18":{"tf":1.0},"26":{"tf":1.0}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"25":{"tf":1.0},"6":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"6":{"tf":1.0}}}},"v":{"df":1,"docs":{"26":{"tf":1.0}}}}}}}},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":3,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.4142135623730951}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":2.0},"11":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"27":{"tf":1.0},"5":{"tf":1.0}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.7320508075688772},"6":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":3,"docs":{"19":{"tf":1.0},"25":{"tf":1.0},"27":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":11,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":2.0},"8":{"tf":1.4142135623730951},"9":{"tf":1.7320508075688772}}},"i":{"df":0,"docs":{},"o":{"df":1,"docs":{"4":{"tf":1.0}}}}},"w":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}},"df":2,"docs":{"0":{"tf":1.0},"14":{"tf":1.0}}}},"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}},"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"r":{"d":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"10":{"tf":1.0},"26":{"tf":1.0}},"t":{"df":2,"docs":{"26":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.7320508075688772}}}}}}}}},"df":10,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"26":{"tf":1.0},"6":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"d":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.0}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":2,"docs":{"22":{"tf":1.0},"4":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"a":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"21":{"tf":1.0},"25":{"tf":1.0}},"e":{"(":{"&":{"[":{"(":{"1":{".":{"0":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":3,"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"26":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"19":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"5":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":3,"docs":{"16":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"24":{"tf":1.4142135623730951},"26":{"tf":1.0}}}},"w":{"df":1,"docs":{"12":{"tf":1.0}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.0}}}},"n":{"(":{"&":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"(":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":8,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"4":{"tf":1.0}}}}},"s":{"^":{"3":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":2.0},"14":{"tf":1.0},"19":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":8,"docs":{"0":{"tf":2.0},"12":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.0},"6":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0}}}}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"df":3,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"7":{"tf":1.4142135623730951}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"10":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"d":{"df":9,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"22":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"4":{"tf":2.449489742783178}}},"df":1,"docs":{"19":{"tf":1.0}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"a":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":11,"docs":{"0":{"tf":2.449489742783178},"12":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"22":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}},"’":{"df":4,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}}}},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.0}}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"6":{"tf":1.0}}}},"i":{"c":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}}},"t":{"df":2,"docs":{"20":{"tf":1.0},"4":{"tf":1.0}},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"24":{"tf":1.0}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"0":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}}}},"m":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"m":{"d":{"(":{"1":{".":{"0":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"(":{"1":{".":{"0":{"df":3,"docs":{"19":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{".":{"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":1,"docs":{"10":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":1.7320508075688772},"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"18":{"tf":1.0},"25":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951},"27":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":2.0}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":8,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}},"t":{"df":1,"docs":{"7":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":2,"docs":{"18":{"tf":1.0},"26":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"13":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"17":{"tf":1.0}}}},"w":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"c":{"df":2,"docs":{"13":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}}}},"p":{"a":{"df":0,"docs":{},"n":{"^":{"(":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{},"e":{"c":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0}}}},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}}}},"t":{"df":2,"docs":{"18":{"tf":1.0},"25":{"tf":1.0}},"e":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"12":{"tf":2.0},"13":{"tf":1.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.7320508075688772}}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0},"3":{"tf":1.0}}}}},"s":{".":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"g":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"a":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"0":{".":{"0":{"1":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":2,"docs":{"0":{"tf":1.0},"4":{"tf":1.0}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}}},"o":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"p":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"27":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"u":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":1.0},"4":{"tf":1.0}}}},"m":{"df":5,"docs":{"10":{"tf":2.0},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"25":{"tf":1.4142135623730951}},"m":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"d":{")":{".":{"a":{"b":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"4":{"tf":1.0},"9":{"tf":1.0}}}}}}},"w":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":2,"docs":{"27":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}}},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":9,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"26":{"tf":1.4142135623730951},"4":{"tf":2.449489742783178},"6":{"tf":1.0}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"d":{"d":{"(":{"1":{".":{"0":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"t":{"=":{"1":{"df":1,"docs":{"21":{"tf":1.0}}},"2":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"a":{"b":{"df":0,"docs":{},"l":{"df":5,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"25":{"tf":1.4142135623730951},"26":{"tf":1.4142135623730951},"4":{"tf":1.0}},"e":{"[":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}}},"df":4,"docs":{"0":{"tf":1.4142135623730951},"12":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":2.449489742783178}},"e":{"df":0,"docs":{},"n":{"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"20":{"tf":1.0},"25":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"24":{"tf":1.0},"26":{"tf":2.23606797749979}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.0},"24":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":2,"docs":{"14":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"i":{"df":1,"docs":{"0":{"tf":1.0}},"e":{"df":2,"docs":{"22":{"tf":1.0},"26":{"tf":1.0}}},"m":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":2.449489742783178},"12":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"16":{"tf":1.0},"25":{"tf":1.7320508075688772},"4":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"25":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}},"u":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"25":{"tf":1.0}}},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{")":{".":{"a":{"b":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"25":{"tf":1.0}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"25":{"tf":1.0}}}}},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":10,"docs":{"0":{"tf":2.449489742783178},"10":{"tf":1.0},"12":{"tf":2.0},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0}}}}},"u":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"6":{"4":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":3,"docs":{"10":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}}}}},"t":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"13":{"tf":1.0},"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"p":{"d":{"a":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":19,"docs":{"10":{"tf":2.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"18":{"tf":1.4142135623730951},"19":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.7320508075688772},"23":{"tf":1.4142135623730951},"25":{"tf":2.23606797749979},"27":{"tf":1.0},"3":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"u":{"df":7,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"s":{"df":3,"docs":{"25":{"tf":2.449489742783178},"26":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"26":{"tf":1.0}}}},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":4,"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}}}},"h":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"13":{"tf":1.0},"2":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"18":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"19":{"tf":1.0},"2":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":2,"docs":{"2":{"tf":1.7320508075688772},"26":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"4":{"tf":1.0},"7":{"tf":1.0}}}}}}},"x":{"df":0,"docs":{},"i":{"df":2,"docs":{"14":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"y":{"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":2,"docs":{"12":{"tf":1.0},"20":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"breadcrumbs":{"root":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"b":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":6,"docs":{"10":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"d":{"df":4,"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":6,"docs":{"10":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":6,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"m":{"df":4,"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":7,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":8,"docs":{"16":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":4,"docs":{"1":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":7,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"15":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":4,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0},"26":{"tf":1.0},"27":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"e":{"b":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}}},"title":{"root":{"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"df":1,"docs":{"14":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}},"b":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"d":{"df":4,"docs":{"10":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"8":{"tf":1.0}},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"i":{"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"5":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"h":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"m":{"df":4,"docs":{"10":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"21":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":3,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"9":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"27":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}},"s":{"a":{"df":0,"docs":{},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}},"t":{"df":0,"docs":{},"e":{"df":4,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"26":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"o":{"df":1,"docs":{"15":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"e":{"b":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));