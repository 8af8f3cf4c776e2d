//! Game-theory toolkit for wars of attrition in intellectual-property markets.
//!
//! The crate covers four layers:
//!
//! - [`game`] — finite two-player normal-form games: best responses,
//!   dominance, pure Nash enumeration, 2×2 mixed equilibria, and symmetric
//!   ESS checks, all under a single comparison tolerance.
//! - [`attrition`] — the continuous-time symmetric war of attrition: the
//!   exponential ESS persistence density, numeric verification of its payoff
//!   indifference, and seeded Monte Carlo contests.
//! - [`market`] — profit functions for pirate/industry and
//!   healer/bioprospector markets, the free-entry producer count, and
//!   constructors for every 2×2 game the models give rise to.
//! - [`dynamics`] — discounted profit streams and the multi-period
//!   entry-deterrence simulation with breakeven detection and incumbent
//!   behavior classification.
//!
//! All numeric code is generic over [`Scalar`] (`f32` or `f64`); the `*64`
//! and `*32` aliases below pin concrete precisions. `f64` is the intended
//! default and what the CLI uses.

pub mod attrition;
pub mod dynamics;
pub mod error;
pub mod game;
pub mod market;
pub mod scalar;

pub use error::Error;
pub use scalar::Scalar;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

pub type Game64 = game::NormalFormGame<f64>;
pub type Game32 = game::NormalFormGame<f32>;
pub type Mixed64 = game::MixedStrategy<f64>;
pub type Mixed32 = game::MixedStrategy<f32>;
pub type Report64 = game::EquilibriumReport<f64>;
pub type Report32 = game::EquilibriumReport<f32>;
pub type Contest64 = attrition::AttritionContest<f64>;
pub type Contest32 = attrition::AttritionContest<f32>;
pub type MarketParams64 = market::MarketParams<f64>;
pub type MarketParams32 = market::MarketParams<f32>;
pub type Scenario64 = dynamics::DynamicScenario<f64>;
pub type Scenario32 = dynamics::DynamicScenario<f32>;
pub type Trace64 = dynamics::SimulationTrace<f64>;
pub type Trace32 = dynamics::SimulationTrace<f32>;
