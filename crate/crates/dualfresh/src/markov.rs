//! State-flow machinery for the M-M system.
//!
//! Between two accepted deliveries the pair of sensors is always in one of
//! four states: the last refresh came from A or from B, and the update the
//! *other* sensor currently has in service is either fresh (generated after
//! the monitor's newest sample) or already obsolete. We write these `A0`,
//! `A1`, `B0`, `B1`, where the digit is 0 for fresh and 1 for obsolete.
//!
//! Refreshes move the system along one of ten directed edges of that state
//! graph, and each edge carries its own service-time and refresh-gap
//! statistics ([`PathStats`]). Weighting the per-edge statistics by how
//! often each edge fires reproduces the closed-form peak age, and chaining
//! two consecutive edges ([`TwoStepCase`]) reproduces the average age via
//! the sawtooth-area route ([`mm_avg_aoi_graphical`]). Both serve as
//! independent cross-checks on the formulas in [`crate::analytic`].
//!
//! [`classify_refresh`] maps an accepted delivery observed in a simulation
//! onto its edge, which is how simulated traces are compared against the
//! per-path statistics here.

use nalgebra::{Matrix4, Vector4};

use crate::model::Sensor;
use crate::{ensure_positive, Error, Result};

/// Joint sensor state right after an accepted delivery.
///
/// The letter names the sensor that delivered; the digit says whether the
/// other sensor's in-service update was still fresh (`0`) or already
/// obsolete (`1`) relative to the update that just refreshed the monitor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MmState {
    A0,
    A1,
    B0,
    B1,
}

impl MmState {
    pub const ALL: [MmState; 4] = [MmState::A0, MmState::A1, MmState::B0, MmState::B1];

    /// Row and column position in the transition matrix.
    pub fn index(self) -> usize {
        match self {
            MmState::A0 => 0,
            MmState::A1 => 1,
            MmState::B0 => 2,
            MmState::B1 => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MmState::A0 => "A0",
            MmState::A1 => "A1",
            MmState::B0 => "B0",
            MmState::B1 => "B1",
        }
    }

    /// Sensor that produced the refresh this state records.
    pub fn sensor(self) -> Sensor {
        match self {
            MmState::A0 | MmState::A1 => Sensor::A,
            MmState::B0 | MmState::B1 => Sensor::B,
        }
    }

    /// Whether the other sensor's in-service update was already obsolete.
    pub fn other_is_stale(self) -> bool {
        matches!(self, MmState::A1 | MmState::B1)
    }

    /// Mirror image under swapping the sensor labels.
    pub fn swapped(self) -> MmState {
        match self {
            MmState::A0 => MmState::B0,
            MmState::A1 => MmState::B1,
            MmState::B0 => MmState::A0,
            MmState::B1 => MmState::A1,
        }
    }
}

/// One directed edge of the refresh state graph with its statistics.
///
/// `prob` is the chance the system leaves `from_state` along this edge.
/// `occurrence` weights that by the steady-state probability of standing in
/// `from_state`, so occurrences over all ten paths sum to one.
/// `mean_service` is the expected age of the refreshing update on arrival,
/// `mean_interarrival` the expected gap since the previous refresh, and
/// `second_moment_interarrival` that gap's second moment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PathStats {
    pub path_index: usize,
    pub from_state: MmState,
    pub to_state: MmState,
    pub prob: f64,
    pub occurrence: f64,
    pub mean_service: f64,
    pub mean_interarrival: f64,
    pub second_moment_interarrival: f64,
}

impl PathStats {
    /// Expected peak age when a refresh arrives along this path.
    pub fn mean_peak(&self) -> f64 {
        self.mean_service + self.mean_interarrival
    }
}

/// Two consecutive edges of the state graph with the joint statistics the
/// sawtooth-area method needs: `prob` of observing the pair, the product
/// moment E[T Y] of the first edge's service time and the second edge's
/// refresh gap, and the second moment of that gap.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoStepCase {
    pub case_index: usize,
    pub states: [MmState; 3],
    pub first_path: usize,
    pub second_path: usize,
    pub prob: f64,
    pub mean_service_times_interarrival: f64,
    pub second_moment: f64,
}

/// The ten directed edges as (from, to) pairs, in path order.
const EDGES: [(MmState, MmState); 10] = [
    (MmState::A0, MmState::A1),
    (MmState::A0, MmState::B0),
    (MmState::A1, MmState::A0),
    (MmState::A1, MmState::A1),
    (MmState::A1, MmState::B1),
    (MmState::B0, MmState::A0),
    (MmState::B0, MmState::B1),
    (MmState::B1, MmState::A1),
    (MmState::B1, MmState::B0),
    (MmState::B1, MmState::B1),
];

/// Path index (1..=10) of the edge between two states, if one exists.
/// Every ordered state pair appears at most once in the graph.
pub fn path_for_edge(from: MmState, to: MmState) -> Option<usize> {
    EDGES.iter().position(|&e| e == (from, to)).map(|i| i + 1)
}

/// Transition matrix of the refresh state graph, rows and columns ordered
/// `A0, A1, B0, B1`. Entry `(i, j)` is the probability that the next
/// refresh moves the system from state `i` to state `j`.
pub fn mm_transition_matrix(rate_a: f64, rate_b: f64) -> Result<[[f64; 4]; 4]> {
    let table = mm_path_table(rate_a, rate_b)?;
    let mut m = [[0.0; 4]; 4];
    for path in &table {
        m[path.from_state.index()][path.to_state.index()] = path.prob;
    }
    Ok(m)
}

/// Steady-state distribution over the four refresh states, in closed form.
///
/// With `s = rate_a + rate_b` and `xi = rate_a^2 + rate_a rate_b +
/// rate_b^2` the vector is
/// `(a^2 b / (xi s), a^2 / xi, a b^2 / (xi s), b^2 / xi)`.
///
/// ```
/// let pi = dualfresh::markov::mm_steady_state(1.0, 1.0).unwrap();
/// assert!((pi[1] - 1.0 / 3.0).abs() < 1e-15);
/// ```
pub fn mm_steady_state(rate_a: f64, rate_b: f64) -> Result<[f64; 4]> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    let s = a + b;
    let xi = a * a + a * b + b * b;
    Ok([
        a * a * b / (xi * s),
        a * a / xi,
        a * b * b / (xi * s),
        b * b / xi,
    ])
}

/// Steady state obtained by solving the fixed point `pi = pi * M` with the
/// normalization `sum(pi) = 1` replacing one redundant equation. A direct
/// 4x4 solve, kept as an independent check on [`mm_steady_state`].
pub fn mm_steady_state_numeric(rate_a: f64, rate_b: f64) -> Result<[f64; 4]> {
    let m = mm_transition_matrix(rate_a, rate_b)?;
    // Solve (M^T - I) pi = 0 with the last row swapped for normalization.
    let mut sys = Matrix4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            sys[(i, j)] = m[j][i] - if i == j { 1.0 } else { 0.0 };
        }
    }
    for j in 0..4 {
        sys[(3, j)] = 1.0;
    }
    let rhs = Vector4::new(0.0, 0.0, 0.0, 1.0);
    let pi = sys
        .lu()
        .solve(&rhs)
        .expect("normalized fixed-point system is nonsingular for positive rates");
    Ok([pi[0], pi[1], pi[2], pi[3]])
}

/// All ten paths of the refresh state graph with their statistics.
///
/// The service and gap moments come from the structure of each edge: an
/// edge either needs a single exponential completion (gap mean `1/s`,
/// second moment `2/s^2` with `s = rate_a + rate_b`) or an obsolete
/// completion followed by a fresh one (mean `2/s`, second moment `6/s^2`),
/// and likewise for the delivered update's age.
pub fn mm_path_table(rate_a: f64, rate_b: f64) -> Result<Vec<PathStats>> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    let s = a + b;
    let s2 = s * s;
    let pi = mm_steady_state(a, b)?;
    // (prob, mean_service, mean_interarrival, second_moment_interarrival)
    let rows: [(f64, f64, f64, f64); 10] = [
        (a / s, 1.0 / s, 1.0 / s, 2.0 / s2),
        (b / s, 2.0 / s, 1.0 / s, 2.0 / s2),
        (a * b / s2, 2.0 / s, 2.0 / s, 6.0 / s2),
        (a / s, 1.0 / s, 1.0 / s, 2.0 / s2),
        (b * b / s2, 1.0 / s, 2.0 / s, 6.0 / s2),
        (a / s, 2.0 / s, 1.0 / s, 2.0 / s2),
        (b / s, 1.0 / s, 1.0 / s, 2.0 / s2),
        (a * a / s2, 1.0 / s, 2.0 / s, 6.0 / s2),
        (a * b / s2, 2.0 / s, 2.0 / s, 6.0 / s2),
        (b / s, 1.0 / s, 1.0 / s, 2.0 / s2),
    ];
    Ok(EDGES
        .iter()
        .zip(rows.iter())
        .enumerate()
        .map(|(i, (&(from, to), &(p, t, y, y2)))| PathStats {
            path_index: i + 1,
            from_state: from,
            to_state: to,
            prob: p,
            occurrence: pi[from.index()] * p,
            mean_service: t,
            mean_interarrival: y,
            second_moment_interarrival: y2,
        })
        .collect())
}

/// Mean gap between consecutive refreshes, `(rate_a + rate_b) / xi`.
pub fn mm_mean_interarrival(rate_a: f64, rate_b: f64) -> Result<f64> {
    let a = ensure_positive("rate_a", rate_a)?;
    let b = ensure_positive("rate_b", rate_b)?;
    Ok((a + b) / (a * a + a * b + b * b))
}

/// Mean age of a refreshing update on arrival. Equals the mean refresh gap:
/// each accepted update was generated at the previous refresh.
pub fn mm_mean_service(rate_a: f64, rate_b: f64) -> Result<f64> {
    mm_mean_interarrival(rate_a, rate_b)
}

/// All 26 ordered pairs of consecutive paths, in a fixed order: the first
/// path ascending, then the second. The first thirteen start from a
/// refresh by sensor A, and the rest are their mirror images, so swapping
/// the rates maps each half onto the other.
pub fn mm_two_step_table(rate_a: f64, rate_b: f64) -> Result<Vec<TwoStepCase>> {
    let table = mm_path_table(rate_a, rate_b)?;
    let mut cases = Vec::with_capacity(26);
    for first in &table {
        for second in &table {
            if second.from_state != first.to_state {
                continue;
            }
            cases.push(TwoStepCase {
                case_index: cases.len() + 1,
                states: [first.from_state, first.to_state, second.to_state],
                first_path: first.path_index,
                second_path: second.path_index,
                prob: first.occurrence * second.prob,
                mean_service_times_interarrival: first.mean_service * second.mean_interarrival,
                second_moment: second.second_moment_interarrival,
            });
        }
    }
    debug_assert_eq!(cases.len(), 26);
    Ok(cases)
}

/// Average age of information assembled from the sawtooth geometry: each
/// refresh contributes a trapezoid of expected area
/// `E[T Y] + E[Y^2] / 2` depending on the surrounding pair of paths, and
/// dividing the occurrence-weighted sum by the mean refresh gap gives the
/// time average.
///
/// Agrees with [`crate::analytic::mm_avg_aoi`] to near machine precision
/// while sharing none of its algebra.
pub fn mm_avg_aoi_graphical(rate_a: f64, rate_b: f64) -> Result<f64> {
    let cases = mm_two_step_table(rate_a, rate_b)?;
    let area: f64 = cases
        .iter()
        .map(|c| c.prob * (c.mean_service_times_interarrival + 0.5 * c.second_moment))
        .sum();
    Ok(area / mm_mean_interarrival(rate_a, rate_b)?)
}

/// Everything needed to place an accepted delivery in the state graph:
/// which sensor delivered, the generation time of the update the *other*
/// sensor currently has in service, and the generation time the monitor
/// holds right after the refresh (its `last_refresh_timestamp`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefreshContext {
    pub delivering: Sensor,
    pub other_generation: f64,
    pub refreshed_generation: f64,
}

/// State the system lands in after the refresh described by `ctx`.
pub fn refresh_state(ctx: RefreshContext) -> MmState {
    let stale = ctx.other_generation <= ctx.refreshed_generation;
    match (ctx.delivering, stale) {
        (Sensor::A, false) => MmState::A0,
        (Sensor::A, true) => MmState::A1,
        (Sensor::B, false) => MmState::B0,
        (Sensor::B, true) => MmState::B1,
    }
}

/// Path index (1..=10) of an accepted delivery, given the state after the
/// previous refresh. Fails if no edge connects the two states, which means
/// the caller's bookkeeping is inconsistent with the graph.
///
/// ```
/// use dualfresh::markov::{classify_refresh, MmState, RefreshContext};
/// use dualfresh::Sensor;
/// let path = classify_refresh(
///     MmState::A0,
///     RefreshContext {
///         delivering: Sensor::A,
///         other_generation: 0.4,
///         refreshed_generation: 1.0,
///     },
/// )
/// .unwrap();
/// assert_eq!(path, 1);
/// ```
pub fn classify_refresh(prev_state: MmState, ctx: RefreshContext) -> Result<usize> {
    let next = refresh_state(ctx);
    path_for_edge(prev_state, next).ok_or(Error::NoSuchPath {
        from: prev_state,
        to: next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    /// Path index of the mirror image under swapping sensor labels.
    fn swapped_path(l: usize) -> usize {
        match l {
            1 => 7,
            2 => 6,
            3 => 9,
            4 => 10,
            5 => 8,
            6 => 2,
            7 => 1,
            8 => 5,
            9 => 3,
            10 => 4,
            _ => unreachable!(),
        }
    }

    #[test]
    fn transition_matrix_at_equal_rates() {
        let m = mm_transition_matrix(1.0, 1.0).unwrap();
        assert_eq!(m[0], [0.0, 0.5, 0.5, 0.0]);
        assert_eq!(m[1], [0.25, 0.5, 0.0, 0.25]);
        assert_eq!(m[2], [0.5, 0.0, 0.0, 0.5]);
        assert_eq!(m[3], [0.0, 0.25, 0.25, 0.5]);
    }

    #[test]
    fn transition_rows_are_stochastic() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2)] {
            let m = mm_transition_matrix(a, b).unwrap();
            for row in &m {
                assert_relative_eq!(row.iter().sum::<f64>(), 1.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn steady_state_closed_form() {
        let pi = mm_steady_state(1.0, 1.0).unwrap();
        let expect = [1.0 / 6.0, 1.0 / 3.0, 1.0 / 6.0, 1.0 / 3.0];
        for (got, want) in pi.iter().zip(&expect) {
            assert_relative_eq!(got, want, epsilon = 1e-15);
        }
        let pi = mm_steady_state(2.0, 1.0).unwrap();
        assert_relative_eq!(pi[1], 4.0 / 7.0, epsilon = 1e-15);
    }

    #[test]
    fn numeric_steady_state_matches_closed_form() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2), (9.0, 0.05)] {
            let closed = mm_steady_state(a, b).unwrap();
            let numeric = mm_steady_state_numeric(a, b).unwrap();
            for (c, n) in closed.iter().zip(&numeric) {
                assert_relative_eq!(c, n, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn steady_state_is_a_fixed_point() {
        let m = mm_transition_matrix(2.0, 3.0).unwrap();
        let pi = mm_steady_state(2.0, 3.0).unwrap();
        for j in 0..4 {
            let next: f64 = (0..4).map(|i| pi[i] * m[i][j]).sum();
            assert_relative_eq!(next, pi[j], epsilon = 1e-15);
        }
    }

    #[test]
    fn path_table_known_rows() {
        let table = mm_path_table(1.0, 1.0).unwrap();
        assert_eq!(table.len(), 10);
        let l1 = &table[0];
        assert_eq!(
            (l1.from_state, l1.to_state),
            (MmState::A0, MmState::A1)
        );
        assert_relative_eq!(l1.prob, 0.5, epsilon = 1e-15);
        assert_relative_eq!(l1.mean_service, 0.5, epsilon = 1e-15);
        assert_relative_eq!(l1.mean_interarrival, 0.5, epsilon = 1e-15);
        assert_relative_eq!(l1.second_moment_interarrival, 0.5, epsilon = 1e-15);
        let l3 = &table[2];
        assert_relative_eq!(l3.prob, 0.25, epsilon = 1e-15);
        assert_relative_eq!(l3.mean_service, 1.0, epsilon = 1e-15);
        assert_relative_eq!(l3.mean_interarrival, 1.0, epsilon = 1e-15);
        assert_relative_eq!(l3.second_moment_interarrival, 1.5, epsilon = 1e-15);
        assert_relative_eq!(table[3].occurrence, 1.0 / 6.0, epsilon = 1e-15);
    }

    #[test]
    fn path_probabilities_are_consistent() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2)] {
            let table = mm_path_table(a, b).unwrap();
            for state in MmState::ALL {
                let out: f64 = table
                    .iter()
                    .filter(|p| p.from_state == state)
                    .map(|p| p.prob)
                    .sum();
                assert_relative_eq!(out, 1.0, epsilon = 1e-14);
            }
            let total: f64 = table.iter().map(|p| p.occurrence).sum();
            assert_relative_eq!(total, 1.0, epsilon = 1e-14);
            for p in &table {
                let ey = p.mean_interarrival;
                assert!(p.second_moment_interarrival >= ey * ey);
            }
        }
    }

    #[test]
    fn mean_gap_and_service() {
        assert_relative_eq!(
            mm_mean_interarrival(1.0, 1.0).unwrap(),
            2.0 / 3.0,
            epsilon = 1e-15
        );
        assert_relative_eq!(
            mm_mean_service(2.0, 3.0).unwrap(),
            5.0 / 19.0,
            epsilon = 1e-15
        );
        // Recompute from the path table.
        let table = mm_path_table(2.0, 3.0).unwrap();
        let ey: f64 = table
            .iter()
            .map(|p| p.occurrence * p.mean_interarrival)
            .sum();
        assert_relative_eq!(ey, mm_mean_interarrival(2.0, 3.0).unwrap(), epsilon = 1e-12);
        let et: f64 = table.iter().map(|p| p.occurrence * p.mean_service).sum();
        assert_relative_eq!(et, mm_mean_service(2.0, 3.0).unwrap(), epsilon = 1e-12);
    }

    #[test]
    fn peak_from_paths_matches_closed_form() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2)] {
            let peak = mm_mean_service(a, b).unwrap() + mm_mean_interarrival(a, b).unwrap();
            assert_relative_eq!(
                peak,
                crate::analytic::mm_peak_aoi(a, b).unwrap(),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn two_step_known_cases() {
        let cases = mm_two_step_table(1.0, 1.0).unwrap();
        assert_eq!(cases.len(), 26);
        let c1 = &cases[0];
        assert_eq!(c1.states, [MmState::A0, MmState::A1, MmState::A0]);
        assert_eq!((c1.first_path, c1.second_path), (1, 3));
        assert_relative_eq!(c1.prob, 1.0 / 48.0, epsilon = 1e-15);
        assert_relative_eq!(c1.mean_service_times_interarrival, 0.5, epsilon = 1e-15);
        assert_relative_eq!(c1.second_moment, 1.5, epsilon = 1e-15);
        let c9 = &cases[8];
        assert_eq!(c9.states, [MmState::A1, MmState::A1, MmState::A1]);
        assert_relative_eq!(c9.prob, 1.0 / 12.0, epsilon = 1e-15);
        assert_relative_eq!(c9.mean_service_times_interarrival, 0.25, epsilon = 1e-15);
        assert_relative_eq!(c9.second_moment, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn two_step_probabilities_sum_to_one() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2), (1.0, 9.0)] {
            let cases = mm_two_step_table(a, b).unwrap();
            let total: f64 = cases.iter().map(|c| c.prob).sum();
            assert_relative_eq!(total, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn second_half_mirrors_first_under_rate_swap() {
        let (a, b) = (2.0, 3.0);
        let fwd = mm_two_step_table(a, b).unwrap();
        let rev = mm_two_step_table(b, a).unwrap();
        for case in &fwd {
            let mirror = rev
                .iter()
                .find(|c| {
                    c.first_path == swapped_path(case.first_path)
                        && c.second_path == swapped_path(case.second_path)
                })
                .expect("mirror case exists");
            assert_relative_eq!(case.prob, mirror.prob, epsilon = 1e-14);
            assert_relative_eq!(
                case.mean_service_times_interarrival,
                mirror.mean_service_times_interarrival,
                epsilon = 1e-14
            );
            assert_relative_eq!(case.second_moment, mirror.second_moment, epsilon = 1e-14);
            for (s, m) in case.states.iter().zip(&mirror.states) {
                assert_eq!(s.swapped(), *m);
            }
        }
    }

    #[test]
    fn graphical_average_matches_closed_form() {
        for &(a, b) in &[(1.0, 1.0), (2.0, 3.0), (0.3, 1.7), (5.0, 0.2)] {
            assert_relative_eq!(
                mm_avg_aoi_graphical(a, b).unwrap(),
                crate::analytic::mm_avg_aoi(a, b).unwrap(),
                epsilon = 1e-12
            );
        }
        assert_relative_eq!(mm_avg_aoi_graphical(1.0, 1.0).unwrap(), 1.25, epsilon = 1e-13);
        assert_relative_eq!(
            mm_avg_aoi_graphical(2.0, 3.0).unwrap(),
            62.0 / 125.0,
            epsilon = 1e-13
        );
    }

    #[test]
    fn classify_refresh_examples() {
        // A redelivers from A0; the other sensor's update predates the
        // refresh, so the system lands in A1 along path 1.
        let l = classify_refresh(
            MmState::A0,
            RefreshContext {
                delivering: Sensor::A,
                other_generation: 0.4,
                refreshed_generation: 1.0,
            },
        )
        .unwrap();
        assert_eq!(l, 1);
        // Two consecutive deliveries from B with the other update stale.
        let l = classify_refresh(
            MmState::A1,
            RefreshContext {
                delivering: Sensor::B,
                other_generation: 0.2,
                refreshed_generation: 0.9,
            },
        )
        .unwrap();
        assert_eq!(l, 5);
        // A delivers from B0 while B already holds a fresher sample.
        let l = classify_refresh(
            MmState::B0,
            RefreshContext {
                delivering: Sensor::A,
                other_generation: 2.0,
                refreshed_generation: 1.0,
            },
        )
        .unwrap();
        assert_eq!(l, 6);
    }

    #[test]
    fn classify_refresh_rejects_missing_edges() {
        // No edge A0 -> A0 exists in the graph.
        let err = classify_refresh(
            MmState::A0,
            RefreshContext {
                delivering: Sensor::A,
                other_generation: 2.0,
                refreshed_generation: 1.0,
            },
        );
        assert!(err.is_err());
    }

    #[test]
    fn tie_between_generations_counts_as_stale() {
        let state = refresh_state(RefreshContext {
            delivering: Sensor::B,
            other_generation: 1.0,
            refreshed_generation: 1.0,
        });
        assert_eq!(state, MmState::B1);
    }
}
