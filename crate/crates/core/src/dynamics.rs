//! Discounted profit streams and the multi-period entry-deterrence
//! simulation.
//!
//! The stream operations value a competitive phase of `T` periods followed
//! (for the industry) by a monopoly phase forever after; a discount factor
//! strictly below one keeps the monopoly tail finite. The simulator walks
//! a scenario in which the pirate population shrinks linearly while
//! industry deterrence spending rises linearly, producing a per-period
//! trace from which breakeven, the fight-or-accommodate call, and the
//! incumbent-behavior classification are read off.

use crate::error::Error;
use crate::market::MarketParams;
use crate::scalar::Scalar;
use crate::Result;

/// How per-period profits are computed during the competitive phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum StreamMode {
    /// Revenue share only (`p·Q/n`), matching the stream operations.
    Literal,
    /// Full competitive profit `p·Q/n - c - D`; the default, and the only
    /// mode in which deterrence spending can push the industry into loss.
    #[default]
    Eq1,
}

/// Exogenous time paths driving one simulation run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicScenario<T> {
    /// Market primitives; `producers` is the initial count `n0`, and the
    /// deterrence fields are the period-0 spending levels.
    pub market: MarketParams<T>,
    /// Producers leaving per period (`r` >= 0).
    pub n_decrement: T,
    /// Industry deterrence spending added per period (`g` >= 0).
    pub industry_deterrence_increment: T,
    /// Pirate deterrence spending added per period (>= 0).
    pub pirate_deterrence_increment: T,
    /// Per-period discount factor, strictly inside (0, 1).
    pub discount: T,
    /// Number of periods simulated (>= 1).
    pub horizon: usize,
    pub mode: StreamMode,
}

impl<T: Scalar> DynamicScenario<T> {
    /// Scenario with no deterrence growth, default mode, and zero initial
    /// deterrence; callers adjust fields from there.
    pub fn new(market: MarketParams<T>, discount: T, horizon: usize) -> Result<Self> {
        let scenario = DynamicScenario {
            market,
            n_decrement: T::zero(),
            industry_deterrence_increment: T::zero(),
            pirate_deterrence_increment: T::zero(),
            discount,
            horizon,
            mode: StreamMode::default(),
        };
        scenario.validate()?;
        Ok(scenario)
    }

    pub fn validate(&self) -> Result<()> {
        self.market.validate()?;
        if !(self.discount > T::zero() && self.discount < T::one()) {
            return Err(Error::param(
                "discount",
                format!("{} must lie strictly inside (0, 1)", self.discount),
            ));
        }
        if self.horizon < 1 {
            return Err(Error::param("horizon", "must be at least 1"));
        }
        for (name, v) in [
            ("n_decrement", self.n_decrement),
            ("industry_deterrence_increment", self.industry_deterrence_increment),
            ("pirate_deterrence_increment", self.pirate_deterrence_increment),
        ] {
            if !(v.is_finite() && v >= T::zero()) {
                return Err(Error::param(name, format!("{v} must be a nonnegative real")));
            }
        }
        Ok(())
    }
}

/// One simulated period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodRecord<T> {
    pub t: usize,
    /// Producer count, floored at 1.
    pub producers: T,
    pub pirate_deterrence: T,
    pub industry_deterrence: T,
    pub pirate_profit: T,
    pub industry_profit: T,
    /// Partial sum of `discount^s * pirate_profit_s` for `s <= t`.
    pub disc_cum_pirate: T,
    /// Partial sum of `discount^s * industry_profit_s` for `s <= t`.
    pub disc_cum_industry: T,
}

/// Full simulation output.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationTrace<T> {
    pub periods: Vec<PeriodRecord<T>>,
    /// First period at which competition has left the market (producer
    /// path at or below 1), if it happens within the horizon.
    pub monopoly_onset: Option<usize>,
}

/// Whether a trace argues for fighting the entrants or accommodating them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Fight,
    Accommodate,
}

/// Incumbent behavior taxonomy read from a trace and the entrant's value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IncumbentBehavior {
    /// Entry fails although the incumbent spends nothing on deterrence.
    Blockaded,
    /// Entry fails because of positive incumbent deterrence spending.
    Deterred,
    /// Entry is profitable and allowed.
    Accommodated,
}

/// Discounted pirate revenue stream over `periods` competitive periods at
/// constant `n`: `Σ_{t<periods} δ^t · p·(Q/n)`.
///
/// `discount` may be exactly 1 here (plain sum); the closed form
/// `p·(Q/n)·(1 - δ^T)/(1 - δ)` is used otherwise.
pub fn pirate_stream_literal<T: Scalar>(
    params: &MarketParams<T>,
    periods: u32,
    discount: T,
) -> Result<T> {
    params.validate()?;
    if periods < 1 {
        return Err(Error::param("periods", "must be at least 1"));
    }
    if !(discount > T::zero() && discount <= T::one()) {
        return Err(Error::param(
            "discount",
            format!("{discount} must lie in (0, 1]"),
        ));
    }
    let per_period = params.price * (params.demand / params.producers);
    let t = T::from_u32(periods).unwrap();
    if discount == T::one() {
        return Ok(per_period * t);
    }
    Ok(per_period * (T::one() - discount.powi(periods as i32)) / (T::one() - discount))
}

/// Discounted industry stream: `periods` competitive periods at constant
/// `n` followed by the monopoly revenue `p·Q` forever:
/// `p·(Q/n)·(1 - δ^T)/(1 - δ) + p·Q·δ^T/(1 - δ)`.
///
/// Requires `discount` strictly below 1; the infinite monopoly tail
/// diverges otherwise.
pub fn industry_stream_literal<T: Scalar>(
    params: &MarketParams<T>,
    periods: u32,
    discount: T,
) -> Result<T> {
    params.validate()?;
    if periods < 1 {
        return Err(Error::param("periods", "must be at least 1"));
    }
    if discount <= T::zero() {
        return Err(Error::param(
            "discount",
            format!("{discount} must be positive"),
        ));
    }
    if discount >= T::one() {
        return Err(Error::DivergentTail(discount.to_f64().unwrap_or(f64::NAN)));
    }
    let competitive = params.price * (params.demand / params.producers);
    let monopoly_revenue = params.price * params.demand;
    let delta_t = discount.powi(periods as i32);
    Ok(competitive * (T::one() - delta_t) / (T::one() - discount)
        + monopoly_revenue * delta_t / (T::one() - discount))
}

/// Walks the scenario period by period.
///
/// The producer path is `n_t = max(1, n0 - r·t)`; competition has left the
/// market at the first `t` where `n0 - r·t <= 1`, deterrence spending stops
/// there, the pirate earns nothing from then on, and the industry earns the
/// monopoly profit `p·Q - c`.
pub fn simulate_attrition<T: Scalar>(scenario: &DynamicScenario<T>) -> Result<SimulationTrace<T>> {
    scenario.validate()?;
    let m = &scenario.market;
    let eps = T::tolerance();
    let mut periods = Vec::with_capacity(scenario.horizon);
    let mut monopoly_onset = None;
    let mut cum_pirate = T::zero();
    let mut cum_industry = T::zero();
    let mut weight = T::one();
    for t in 0..scenario.horizon {
        let t_scalar = T::from_usize(t).unwrap();
        let raw_n = m.producers - scenario.n_decrement * t_scalar;
        let producers = raw_n.max(T::one());
        if monopoly_onset.is_none() && raw_n <= T::one() + eps {
            monopoly_onset = Some(t);
        }
        let competitive = monopoly_onset.is_none_or(|onset| t < onset);
        let (pirate_deterrence, industry_deterrence) = if competitive {
            (
                m.deterrence_pirate + scenario.pirate_deterrence_increment * t_scalar,
                m.deterrence_industry + scenario.industry_deterrence_increment * t_scalar,
            )
        } else {
            (T::zero(), T::zero())
        };
        let (pirate_profit, industry_profit) = if competitive {
            let revenue_share = m.price * (m.demand / producers);
            match scenario.mode {
                StreamMode::Literal => (revenue_share, revenue_share),
                StreamMode::Eq1 => (
                    revenue_share - m.unit_cost - pirate_deterrence,
                    revenue_share - m.unit_cost - industry_deterrence,
                ),
            }
        } else {
            (T::zero(), m.price * m.demand - m.unit_cost)
        };
        cum_pirate = cum_pirate + weight * pirate_profit;
        cum_industry = cum_industry + weight * industry_profit;
        periods.push(PeriodRecord {
            t,
            producers,
            pirate_deterrence,
            industry_deterrence,
            pirate_profit,
            industry_profit,
            disc_cum_pirate: cum_pirate,
            disc_cum_industry: cum_industry,
        });
        weight = weight * scenario.discount;
    }
    Ok(SimulationTrace {
        periods,
        monopoly_onset,
    })
}

impl<T: Scalar> SimulationTrace<T> {
    /// First period where the discounted industry cumulative is back at or
    /// above zero after having been negative earlier; absent when it never
    /// dips or never recovers within the horizon.
    pub fn breakeven_period(&self) -> Option<usize> {
        let mut dipped = false;
        for record in &self.periods {
            if dipped && record.disc_cum_industry >= T::zero() {
                return Some(record.t);
            }
            if record.disc_cum_industry < T::zero() {
                dipped = true;
            }
        }
        None
    }

    /// Fight when the total discounted industry stream over the horizon is
    /// positive; accommodating earns zero.
    pub fn accommodation_decision(&self) -> Decision {
        let total = self
            .periods
            .last()
            .map(|r| r.disc_cum_industry)
            .unwrap_or_else(T::zero);
        if total > T::zero() {
            Decision::Fight
        } else {
            Decision::Accommodate
        }
    }

    /// Entry-threat classification: is entry unprofitable on its own, only
    /// because of deterrence spending, or profitable and tolerated?
    pub fn classify_incumbent(&self, entrant_profit_at_entry: T) -> IncumbentBehavior {
        if entrant_profit_at_entry > T::zero() {
            return IncumbentBehavior::Accommodated;
        }
        let spent = self
            .periods
            .iter()
            .any(|r| r.industry_deterrence > T::zero());
        if spent {
            IncumbentBehavior::Deterred
        } else {
            IncumbentBehavior::Blockaded
        }
    }
}
