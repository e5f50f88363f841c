//! The no-information benchmark: the receiver's optimal strategy and the
//! payoff/cost pair it induces, which floor and cap every equilibrium.

use serde::Serialize;

use crate::model::{stage_payoff, Belief, GameParams};

/// The three undominated receiver strategies without information.
///
/// `AC` acts in period 1 and acts again in period 2 iff the period-1 signal
/// was positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BenchmarkStrategy {
    RR,
    AC,
    AA,
}

impl std::fmt::Display for BenchmarkStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BenchmarkStrategy::RR => write!(f, "RR"),
            BenchmarkStrategy::AC => write!(f, "AC"),
            BenchmarkStrategy::AA => write!(f, "AA"),
        }
    }
}

/// Receiver strategy, receiver payoff, and sender cost with no information.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchmarkReport {
    pub strategy: BenchmarkStrategy,
    pub receiver_payoff: f64,
    pub sender_cost: f64,
}

/// The cutoffs separating the RR / AC / AA regions.
pub(crate) fn cutoffs(params: &GameParams) -> (f64, f64) {
    let (c, ag, al) = (params.c(), params.alpha_g(), params.alpha_l());
    let q_i = c * (1.0 + al) / ((1.0 + ag) + c * (1.0 + al));
    let q_ii = c * (1.0 - al) / ((1.0 - ag) + c * (1.0 - al));
    (q_i, q_ii)
}

/// The receiver's optimal no-information payoff `pi(q)`.
///
/// Piecewise linear and convex: 0 up to `q_i`, the act-if-positive value on
/// `(q_i, q_ii]`, and twice the stage payoff above `q_ii`.
pub fn pi(q: Belief, params: &GameParams) -> f64 {
    let (q_i, q_ii) = cutoffs(params);
    pi_with_cutoffs(q, params, q_i, q_ii)
}

pub(crate) fn pi_with_cutoffs(q: Belief, params: &GameParams, q_i: f64, q_ii: f64) -> f64 {
    let qv = q.value();
    if qv <= q_i {
        0.0
    } else if qv <= q_ii {
        qv * (1.0 + params.alpha_g()) - (1.0 - qv) * (1.0 + params.alpha_l()) * params.c()
    } else {
        2.0 * stage_payoff(q, params)
    }
}

/// The sender cost `N(q)` induced by the receiver's optimal strategy.
pub fn n_cost(q: Belief, params: &GameParams) -> f64 {
    let (q_i, q_ii) = cutoffs(params);
    let qv = q.value();
    if qv <= q_i {
        0.0
    } else if qv <= q_ii {
        1.0 + qv * params.alpha_g() + (1.0 - qv) * params.alpha_l()
    } else {
        2.0
    }
}

/// The receiver's optimal strategy and both induced values. Ties at the
/// breakpoints resolve to the sender-cheaper strategy.
pub fn optimal_no_info(q: Belief, params: &GameParams) -> BenchmarkReport {
    let (q_i, q_ii) = cutoffs(params);
    let qv = q.value();
    let strategy = if qv <= q_i {
        BenchmarkStrategy::RR
    } else if qv <= q_ii {
        BenchmarkStrategy::AC
    } else {
        BenchmarkStrategy::AA
    };
    BenchmarkReport {
        strategy,
        receiver_payoff: pi(q, params),
        sender_cost: n_cost(q, params),
    }
}
