//! Market profit functions and the game constructors built from them.
//!
//! Profits follow the per-firm competitive form `p·(Q/n) - c - D` and the
//! monopoly form `p·Q - c`; the free-entry producer count is where the
//! competitive profit hits zero. Each constructor returns a 2×2
//! [`NormalFormGame`] ready for the analysis pipeline in [`crate::game`].

use crate::error::Error;
use crate::game::NormalFormGame;
use crate::scalar::{lit, Scalar};
use crate::Result;

/// Market primitives shared by the piracy and bioprospecting models.
///
/// `producers` is the number of firms `n` sharing demand; it is a real
/// (free-entry counts need not be integers). One-time costs
/// (`patent_investment`, `entrance_cost`) and per-period deterrence
/// spending (`deterrence_pirate`, `deterrence_industry`) default to zero
/// via [`MarketParams::new`] and can be set directly on the fields.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarketParams<T> {
    /// Price per unit, `p` > 0.
    pub price: T,
    /// Total demand per period, `Q` > 0.
    pub demand: T,
    /// Production cost per period, `c` >= 0.
    pub unit_cost: T,
    /// Per-period deterrence/evasion spending of the pirate side, >= 0.
    pub deterrence_pirate: T,
    /// Per-period deterrence spending of the industry side, >= 0.
    pub deterrence_industry: T,
    /// One-time cost of synthesizing and patenting, `INV` >= 0.
    pub patent_investment: T,
    /// One-time market entrance cost, `f` >= 0.
    pub entrance_cost: T,
    /// Number of producers sharing demand, `n` >= 1.
    pub producers: T,
}

impl<T: Scalar> MarketParams<T> {
    /// Params with the given core market data and all costs that default
    /// to zero (deterrence, patent investment, entrance cost).
    pub fn new(price: T, demand: T, unit_cost: T, producers: T) -> Result<Self> {
        let params = MarketParams {
            price,
            demand,
            unit_cost,
            deterrence_pirate: T::zero(),
            deterrence_industry: T::zero(),
            patent_investment: T::zero(),
            entrance_cost: T::zero(),
            producers,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("price", self.price), ("demand", self.demand)] {
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::param(name, format!("{v} must be a positive real")));
            }
        }
        if !(self.producers.is_finite() && self.producers >= T::one()) {
            return Err(Error::param(
                "producers",
                format!("{} must be at least 1", self.producers),
            ));
        }
        for (name, v) in [
            ("unit_cost", self.unit_cost),
            ("deterrence_pirate", self.deterrence_pirate),
            ("deterrence_industry", self.deterrence_industry),
            ("patent_investment", self.patent_investment),
            ("entrance_cost", self.entrance_cost),
        ] {
            if !(v.is_finite() && v >= T::zero()) {
                return Err(Error::param(name, format!("{v} must be a nonnegative real")));
            }
        }
        Ok(())
    }

    /// Per-firm profit in competitive equilibrium: `p·(Q/n) - c - D`.
    pub fn competitive_profit(&self, deterrence: T) -> T {
        self.price * (self.demand / self.producers) - self.unit_cost - deterrence
    }

    /// Monopoly profit: `p·Q - c`.
    pub fn monopoly_profit(&self) -> T {
        self.price * self.demand - self.unit_cost
    }

    /// Producer count `n* = p·Q / (c + D)` at which competitive profit is
    /// zero. The divisor groups `c` with the deterrence cost; that is the
    /// only grouping under which the zero-profit condition holds, and the
    /// CLI prints the verification residual alongside the result.
    pub fn free_entry_n(&self, deterrence: T) -> Result<T> {
        let divisor = self.unit_cost + deterrence;
        if divisor <= T::zero() {
            return Err(Error::UnboundedEntry);
        }
        Ok(self.price * self.demand / divisor)
    }

    /// [`Self::free_entry_n`] floored to a whole producer count, for
    /// display next to the continuous value.
    pub fn free_entry_n_floor(&self, deterrence: T) -> Result<T> {
        Ok(self.free_entry_n(deterrence)?.floor())
    }

    /// Per-healer benefit of public-domain knowledge: `p·(Q/n) - c`.
    pub fn healer_profit(&self) -> T {
        self.competitive_profit(T::zero())
    }

    /// Bioprospector's patent payoff: `p·Q - c - INV`.
    pub fn bioprospector_profit(&self) -> T {
        self.monopoly_profit() - self.patent_investment
    }
}

fn two_by_two<T: Scalar>(
    row_labels: [&str; 2],
    col_labels: [&str; 2],
    cells: [[(T, T); 2]; 2],
) -> Result<NormalFormGame<T>> {
    NormalFormGame::new(
        row_labels.iter().map(|s| s.to_string()).collect(),
        col_labels.iter().map(|s| s.to_string()).collect(),
        cells.into_iter().map(|r| r.to_vec()).collect(),
    )
}

/// Symmetric Fight/Leave contest over a prize `Q`: fighting splits the
/// prize when both fight, takes it all against a leaver, and leaving
/// earns nothing.
pub fn build_carcass_game<T: Scalar>(prize: T) -> Result<NormalFormGame<T>> {
    if !(prize.is_finite() && prize > T::zero()) {
        return Err(Error::param("prize", format!("{prize} must be a positive real")));
    }
    let half = prize / lit::<T>(2.0);
    let z = T::zero();
    two_by_two(
        ["Fight", "Leave"],
        ["Fight", "Leave"],
        [
            [(half, half), (prize, z)],
            [(z, prize), (z, z)],
        ],
    )
}

/// Blockade/Accommodate contest over a prize `Q` where mutual blockade
/// costs the row player `d1` and the column player `d2`. With both costs
/// zero this is exactly the carcass game; with costs above `Q/2` it turns
/// into chicken.
pub fn build_deterrence_game<T: Scalar>(prize: T, d1: T, d2: T) -> Result<NormalFormGame<T>> {
    if !(prize.is_finite() && prize > T::zero()) {
        return Err(Error::param("prize", format!("{prize} must be a positive real")));
    }
    for (name, d) in [("d1", d1), ("d2", d2)] {
        if !(d.is_finite() && d >= T::zero()) {
            return Err(Error::param(name, format!("{d} must be a nonnegative real")));
        }
    }
    let half = prize / lit::<T>(2.0);
    let z = T::zero();
    two_by_two(
        ["Blockade", "Accommodate"],
        ["Blockade", "Accommodate"],
        [
            [(half - d1, half - d2), (prize, z)],
            [(z, prize), (z, z)],
        ],
    )
}

/// Pirate-vs-industry entry game on competitive-market payoffs: mutual
/// blockade earns each side its competitive profit net of its own
/// deterrence spending, a lone blockader earns the monopoly profit, and
/// accommodation earns zero.
pub fn build_entry_game<T: Scalar>(params: &MarketParams<T>) -> Result<NormalFormGame<T>> {
    params.validate()?;
    let pirate = params.competitive_profit(params.deterrence_pirate);
    let industry = params.competitive_profit(params.deterrence_industry);
    let monopoly = params.monopoly_profit();
    let z = T::zero();
    two_by_two(
        ["Blockade", "Accommodate"],
        ["Blockade", "Accommodate"],
        [
            [(pirate, industry), (monopoly, z)],
            [(z, monopoly), (z, z)],
        ],
    )
}

/// Entry game over whole discounted profit streams: mutual blockade nets
/// each stream its lump deterrence cost; intended inputs are
/// [`crate::dynamics::pirate_stream_literal`] and
/// [`crate::dynamics::industry_stream_literal`].
pub fn build_dynamic_game<T: Scalar>(
    pirate_stream: T,
    industry_stream: T,
    pirate_cost: T,
    industry_cost: T,
) -> Result<NormalFormGame<T>> {
    for (name, d) in [("pirate_cost", pirate_cost), ("industry_cost", industry_cost)] {
        if !(d.is_finite() && d >= T::zero()) {
            return Err(Error::param(name, format!("{d} must be a nonnegative real")));
        }
    }
    let z = T::zero();
    two_by_two(
        ["Blockade", "Accommodate"],
        ["Blockade", "Accommodate"],
        [
            [
                (pirate_stream - pirate_cost, industry_stream - industry_cost),
                (pirate_stream, z),
            ],
            [(z, industry_stream), (z, z)],
        ],
    )
}

/// Healers-vs-bioprospector game, reproduced cell for cell including its
/// asymmetries: healers keep their profit whenever no patent is taken but
/// forfeit it under (Accommodate, Patent), and the bioprospector pays the
/// entrance cost `f` only when patenting against a blockade.
pub fn build_bioprospecting_game<T: Scalar>(
    healer_profit: T,
    patent_profit: T,
    entrance_cost: T,
) -> Result<NormalFormGame<T>> {
    if !(entrance_cost.is_finite() && entrance_cost >= T::zero()) {
        return Err(Error::param(
            "entrance_cost",
            format!("{entrance_cost} must be a nonnegative real"),
        ));
    }
    let z = T::zero();
    two_by_two(
        ["Blockade", "Accommodate"],
        ["Patent", "NotPatent"],
        [
            [
                (healer_profit, patent_profit - entrance_cost),
                (healer_profit, z),
            ],
            [(z, patent_profit), (healer_profit, z)],
        ],
    )
}
