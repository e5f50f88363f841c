//! Game primitives: payoff/signal parameters, beliefs, Bayes-plausible splits,
//! and the closed-form cutoff beliefs that organize every equilibrium.

use serde::Serialize;
use thiserror::Error;

/// Errors raised by constructors and belief arithmetic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("c must be positive, got {0}")]
    CostNotPositive(f64),
    #[error("signal likelihoods must lie strictly between 0 and 1, got alpha_g={alpha_g}, alpha_l={alpha_l}")]
    LikelihoodOutOfRange { alpha_g: f64, alpha_l: f64 },
    #[error("alpha ordering violated: need alpha_l < alpha_g, got alpha_g={alpha_g}, alpha_l={alpha_l}")]
    AlphaOrdering { alpha_g: f64, alpha_l: f64 },
    #[error("belief must lie in [0, 1], got {0}")]
    BeliefOutOfRange(f64),
    #[error("split intensity gamma must lie in [0, 1], got {0}")]
    GammaOutOfRange(f64),
    #[error("split target r={r} exceeds the prior q={q}")]
    SplitTargetAbovePrior { r: f64, q: f64 },
    #[error("cannot split a prior of zero")]
    SplitZeroPrior,
    #[error("xi is undefined above p_star: q={q} > p_star={p_star}")]
    XiAbovePStar { q: f64, p_star: f64 },
    #[error("threshold invariant violated: {0}")]
    ThresholdInvariant(String),
}

/// The primitives of the game: the receiver's expected loss magnitude in the
/// bad state and the positive-signal likelihood in each state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GameParams {
    c: f64,
    alpha_g: f64,
    alpha_l: f64,
}

impl GameParams {
    /// Validates `c > 0` and `0 < alpha_l < alpha_g < 1`.
    pub fn new(c: f64, alpha_g: f64, alpha_l: f64) -> Result<Self, ModelError> {
        if !(c.is_finite() && c > 0.0) {
            return Err(ModelError::CostNotPositive(c));
        }
        let in_open_unit = |x: f64| x.is_finite() && x > 0.0 && x < 1.0;
        if !in_open_unit(alpha_g) || !in_open_unit(alpha_l) {
            return Err(ModelError::LikelihoodOutOfRange { alpha_g, alpha_l });
        }
        if alpha_g <= alpha_l {
            return Err(ModelError::AlphaOrdering { alpha_g, alpha_l });
        }
        Ok(GameParams { c, alpha_g, alpha_l })
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn alpha_g(&self) -> f64 {
        self.alpha_g
    }

    pub fn alpha_l(&self) -> f64 {
        self.alpha_l
    }
}

/// Probability assigned to the good state.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct Belief(f64);

impl Belief {
    pub const ZERO: Belief = Belief(0.0);
    pub const ONE: Belief = Belief(1.0);

    pub fn new(q: f64) -> Result<Self, ModelError> {
        if q.is_finite() && (0.0..=1.0).contains(&q) {
            Ok(Belief(q))
        } else {
            Err(ModelError::BeliefOutOfRange(q))
        }
    }

    /// Wraps an internally computed posterior, absorbing sub-ulp drift at the
    /// interval ends. Panics (debug) if the drift is larger than rounding noise.
    pub(crate) fn from_posterior(q: f64) -> Self {
        debug_assert!(
            q > -1e-9 && q < 1.0 + 1e-9,
            "posterior out of range: {q}"
        );
        Belief(q.clamp(0.0, 1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    pub fn is_interior(self) -> bool {
        self.0 > 0.0 && self.0 < 1.0
    }
}

/// Outcome of acting: the signal is informative only if the receiver acted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Signal {
    Positive,
    Negative,
}

impl Signal {
    pub const ALL: [Signal; 2] = [Signal::Positive, Signal::Negative];

    pub fn index(self) -> usize {
        match self {
            Signal::Positive => 0,
            Signal::Negative => 1,
        }
    }
}

impl std::fmt::Display for Signal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Signal::Positive => write!(f, "+"),
            Signal::Negative => write!(f, "-"),
        }
    }
}

/// Expected one-stage payoff from acting at belief `q`: `q - (1 - q) c`.
pub fn stage_payoff(q: Belief, params: &GameParams) -> f64 {
    q.value() - (1.0 - q.value()) * params.c
}

/// Bayes update of `q` after acting and observing `signal`.
///
/// Degenerate beliefs are absorbing: at q in {0, 1} the same belief returns.
pub fn posterior_update(q: Belief, signal: Signal, params: &GameParams) -> Belief {
    let qv = q.value();
    if qv == 0.0 || qv == 1.0 {
        return q;
    }
    let (like_g, like_l) = match signal {
        Signal::Positive => (params.alpha_g, params.alpha_l),
        Signal::Negative => (1.0 - params.alpha_g, 1.0 - params.alpha_l),
    };
    let num = qv * like_g;
    Belief::from_posterior(num / (num + (1.0 - qv) * like_l))
}

/// One branch of a belief split.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitBranch {
    pub posterior: Belief,
    pub probability: f64,
}

/// A Bayes-plausible two-posterior decomposition `<r; 1>` of a prior.
///
/// The high branch carries posterior 1 (the good state revealed) and is reached
/// with probability `q * gamma`; the low branch keeps posterior `r`. `gamma` is
/// the probability of the revealing message in the good state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BeliefSplit {
    low: SplitBranch,
    high: SplitBranch,
    gamma: f64,
}

impl BeliefSplit {
    pub fn low(&self) -> SplitBranch {
        self.low
    }

    pub fn high(&self) -> SplitBranch {
        self.high
    }

    /// Branches in `[low, high]` order.
    pub fn branches(&self) -> [SplitBranch; 2] {
        [self.low, self.high]
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The prior this split decomposes (the probability-weighted posterior mean).
    pub fn prior(&self) -> Belief {
        Belief::from_posterior(
            self.low.probability * self.low.posterior.value()
                + self.high.probability * self.high.posterior.value(),
        )
    }

    /// True when the split reveals nothing (the high branch has probability 0).
    pub fn is_degenerate(&self) -> bool {
        self.high.probability == 0.0
    }
}

/// Splits `q` into `<r; 1>`: reveal the good state with probability
/// `gamma = (q - r) / ((1 - r) q)`, pool on `r` otherwise.
pub fn make_split(q: Belief, r: Belief) -> Result<BeliefSplit, ModelError> {
    let (qv, rv) = (q.value(), r.value());
    if qv == 0.0 {
        return Err(ModelError::SplitZeroPrior);
    }
    if rv > qv {
        return Err(ModelError::SplitTargetAbovePrior { r: rv, q: qv });
    }
    let gamma = if rv == qv {
        0.0
    } else {
        (qv - rv) / ((1.0 - rv) * qv)
    };
    Ok(split_from_gamma(q, r, gamma))
}

/// Splits `q` by revealing the good state with probability `gamma`; the pooled
/// posterior is `q (1 - gamma) / (1 - q gamma)`.
pub fn extreme_split(q: Belief, gamma: f64) -> Result<BeliefSplit, ModelError> {
    if !(gamma.is_finite() && (0.0..=1.0).contains(&gamma)) {
        return Err(ModelError::GammaOutOfRange(gamma));
    }
    let qv = q.value();
    let pooled_mass = 1.0 - qv * gamma;
    let r = if pooled_mass > 0.0 {
        Belief::from_posterior(qv * (1.0 - gamma) / pooled_mass)
    } else {
        Belief::ZERO
    };
    Ok(split_from_gamma(q, r, gamma))
}

fn split_from_gamma(q: Belief, r: Belief, gamma: f64) -> BeliefSplit {
    let reveal_mass = q.value() * gamma;
    BeliefSplit {
        low: SplitBranch {
            posterior: r,
            probability: 1.0 - reveal_mass,
        },
        high: SplitBranch {
            posterior: Belief::ONE,
            probability: reveal_mass,
        },
        gamma,
    }
}

/// All cutoff beliefs derived from the parameters.
///
/// `p_star_star` and `p_e` exist only when `alpha_g > 1/2`; below that the
/// signal-based regime collapses onto the action-based one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Thresholds {
    pub q_i: Belief,
    pub q_ii: Belief,
    pub q_m: Belief,
    pub p_star: Belief,
    pub p_star_star: Option<Belief>,
    pub p_e: Option<Belief>,
}

/// Computes every threshold in closed form and checks their ordering before
/// returning. An error here indicates an implementation bug, not bad input.
pub fn thresholds(params: &GameParams) -> Result<Thresholds, ModelError> {
    let (c, ag, al) = (params.c, params.alpha_g, params.alpha_l);

    let q_i = c * (1.0 + al) / ((1.0 + ag) + c * (1.0 + al));
    let q_ii = c * (1.0 - al) / ((1.0 - ag) + c * (1.0 - al));
    let q_m = c / (1.0 + c);

    // The fixed point of the no-information payoff sits on the act-always
    // branch when 2 alpha_g - alpha_l <= 1 and on the act-if-positive branch
    // otherwise; at the knife edge both formulas coincide.
    let low_info_gain = 2.0 * ag - al <= 1.0;
    let p_star = if low_info_gain {
        2.0 * c / (1.0 + 2.0 * c)
    } else {
        (1.0 + al) * c / (ag + (1.0 + al) * c)
    };

    let (p_star_star, p_e) = if ag > 0.5 {
        let pss = c / (ag + c);
        // Root of u(q)/(1 - alpha_g) = q (1 + alpha_g) - (1 - q)(1 + alpha_l) c,
        // i.e. q alpha_g^2 = (1 - q) c (alpha_g - alpha_l + alpha_g alpha_l).
        let k = c * (ag - al + ag * al);
        let pe = k / (ag * ag + k);
        (Some(pss), Some(pe))
    } else {
        (None, None)
    };

    let th = Thresholds {
        q_i: Belief::from_posterior(q_i),
        q_ii: Belief::from_posterior(q_ii),
        q_m: Belief::from_posterior(q_m),
        p_star: Belief::from_posterior(p_star),
        p_star_star: p_star_star.map(Belief::from_posterior),
        p_e: p_e.map(Belief::from_posterior),
    };
    verify_threshold_invariants(&th, low_info_gain)?;
    Ok(th)
}

fn verify_threshold_invariants(th: &Thresholds, low_info_gain: bool) -> Result<(), ModelError> {
    // Slack of 1e-12 absorbs rounding at knife-edge parameters; the orderings
    // themselves are strict for valid inputs.
    const TOL: f64 = 1e-12;
    let (q_i, q_m, q_ii) = (th.q_i.value(), th.q_m.value(), th.q_ii.value());
    let p_star = th.p_star.value();

    let mut fail = |msg: String| Err(ModelError::ThresholdInvariant(msg));

    if !(0.0 < q_i && q_i < q_m && q_m < q_ii && q_ii < 1.0) {
        return fail(format!(
            "expected 0 < q_i < q_m < q_ii < 1, got ({q_i}, {q_m}, {q_ii})"
        ));
    }
    if p_star <= q_m {
        return fail(format!("expected p_star > q_m, got ({p_star}, {q_m})"));
    }
    if low_info_gain && p_star < q_ii - TOL {
        return fail(format!(
            "expected p_star >= q_ii when 2 alpha_g - alpha_l <= 1, got ({p_star}, {q_ii})"
        ));
    }
    if !low_info_gain && p_star > q_ii + TOL {
        return fail(format!(
            "expected p_star < q_ii when 2 alpha_g - alpha_l > 1, got ({p_star}, {q_ii})"
        ));
    }
    if let (Some(pe), Some(pss)) = (th.p_e, th.p_star_star) {
        let (pe, pss) = (pe.value(), pss.value());
        let cap = p_star.min(q_ii);
        if !(q_m - TOL < pe && pe < cap + TOL) {
            return fail(format!(
                "expected q_m < p_e < min(p_star, q_ii), got p_e={pe}, q_m={q_m}, cap={cap}"
            ));
        }
        if pe >= pss + TOL {
            return fail(format!(
                "expected p_e < p_star_star, got ({pe}, {pss})"
            ));
        }
    }
    Ok(())
}

/// The pooled posterior `xi(q) = (q - pi(q)) / (1 - pi(q))` that makes the
/// promise of period-2 revelation worth exactly the no-information payoff.
///
/// Defined for `q <= p_star`, where it is a valid belief.
pub fn xi(q: Belief, params: &GameParams) -> Result<Belief, ModelError> {
    let th = thresholds(params)?;
    if q.value() > th.p_star.value() + 1e-12 {
        return Err(ModelError::XiAbovePStar {
            q: q.value(),
            p_star: th.p_star.value(),
        });
    }
    let payoff = crate::benchmark::pi(q, params);
    Ok(Belief::from_posterior(
        (q.value() - payoff) / (1.0 - payoff),
    ))
}
