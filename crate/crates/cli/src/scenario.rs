//! Strict scenario-file schema.
//!
//! A scenario is a flat JSON document: a `model` name, a `params` map of
//! named reals, and (for the dynamics model only) an optional `mode`.
//! Parsing is strict on purpose — unknown top-level fields, unknown
//! parameter keys, and keys that the chosen model does not use are all
//! rejected so a typo cannot silently change the economics of a run.

use std::collections::BTreeMap;

use ipwar_core::dynamics::{DynamicScenario, StreamMode};
use ipwar_core::market::MarketParams;
use serde::Deserialize;

use crate::CliError;

/// Every parameter key any model may use.
const VOCABULARY: [&str; 20] = [
    "p", "Q", "c", "n0", "D_P", "D_I", "d1", "d2", "INV", "f", "pi_H", "pi_M", "V", "k", "r",
    "g", "delta", "horizon", "T", "seed",
];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    model: String,
    params: BTreeMap<String, f64>,
    #[serde(default)]
    mode: Option<String>,
}

/// A parsed, validated scenario ready to execute.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    Carcass {
        prize: f64,
    },
    Deterrence {
        prize: f64,
        d1: f64,
        d2: f64,
    },
    Entry {
        params: MarketParams<f64>,
    },
    DynamicGame {
        params: MarketParams<f64>,
        periods: u32,
        discount: f64,
    },
    Bioprospecting {
        healer_profit: f64,
        patent_profit: f64,
        entrance_cost: f64,
    },
    Dynamics {
        scenario: DynamicScenario<f64>,
    },
    ClassicAttrition {
        prize: f64,
        cost_rate: f64,
        seed: u64,
    },
    FreeEntry {
        price: f64,
        demand: f64,
        unit_cost: f64,
        deterrence: f64,
    },
}

impl Scenario {
    pub fn model_name(&self) -> &'static str {
        match self {
            Scenario::Carcass { .. } => "carcass",
            Scenario::Deterrence { .. } => "deterrence",
            Scenario::Entry { .. } => "entry",
            Scenario::DynamicGame { .. } => "dynamic_game",
            Scenario::Bioprospecting { .. } => "bioprospecting",
            Scenario::Dynamics { .. } => "dynamics",
            Scenario::ClassicAttrition { .. } => "classic_attrition",
            Scenario::FreeEntry { .. } => "free_entry",
        }
    }

    /// Reads and validates a scenario file.
    pub fn load(path: &std::path::Path) -> Result<Scenario, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        let raw: RawScenario = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        Scenario::from_raw(raw)
    }

    fn from_raw(raw: RawScenario) -> Result<Scenario, CliError> {
        for key in raw.params.keys() {
            if !VOCABULARY.contains(&key.as_str()) {
                return Err(CliError::Validation(format!(
                    "unknown parameter key {key:?}; known keys: {}",
                    VOCABULARY.join(", ")
                )));
            }
        }
        if raw.mode.is_some() && raw.model != "dynamics" {
            return Err(CliError::Validation(format!(
                "mode applies only to the dynamics model, not {:?}",
                raw.model
            )));
        }
        let fields = Fields(&raw.params);
        let scenario = match raw.model.as_str() {
            "carcass" => {
                fields.allow(&["Q"])?;
                Scenario::Carcass {
                    prize: fields.require("Q")?,
                }
            }
            "deterrence" => {
                fields.allow(&["Q", "d1", "d2"])?;
                Scenario::Deterrence {
                    prize: fields.require("Q")?,
                    d1: fields.require("d1")?,
                    d2: fields.require("d2")?,
                }
            }
            "entry" => {
                fields.allow(&["p", "Q", "c", "n0", "D_P", "D_I"])?;
                Scenario::Entry {
                    params: fields.market_params()?,
                }
            }
            "dynamic_game" => {
                fields.allow(&["p", "Q", "c", "n0", "D_P", "D_I", "T", "delta"])?;
                Scenario::DynamicGame {
                    params: fields.market_params()?,
                    periods: fields.positive_integer("T")?,
                    discount: fields.require("delta")?,
                }
            }
            "bioprospecting" => {
                // Two shapes: direct profits, or market primitives from
                // which the profits are derived.
                if fields.has("pi_H") || fields.has("pi_M") {
                    fields.allow(&["pi_H", "pi_M", "f"])?;
                    Scenario::Bioprospecting {
                        healer_profit: fields.require("pi_H")?,
                        patent_profit: fields.require("pi_M")?,
                        entrance_cost: fields.require("f")?,
                    }
                } else {
                    fields.allow(&["p", "Q", "c", "n0", "INV", "f"])?;
                    let mut params = fields.market_params()?;
                    params.patent_investment = fields.require("INV")?;
                    params
                        .validate()
                        .map_err(|e| CliError::Validation(e.to_string()))?;
                    Scenario::Bioprospecting {
                        healer_profit: params.healer_profit(),
                        patent_profit: params.bioprospector_profit(),
                        entrance_cost: fields.require("f")?,
                    }
                }
            }
            "dynamics" => {
                fields.allow(&["p", "Q", "c", "n0", "D_P", "D_I", "r", "g", "delta", "horizon"])?;
                let market = fields.market_params()?;
                let mut scenario = DynamicScenario::new(
                    market,
                    fields.require("delta")?,
                    fields.positive_integer("horizon")? as usize,
                )
                .map_err(|e| CliError::Validation(e.to_string()))?;
                scenario.n_decrement = fields.require("r")?;
                scenario.industry_deterrence_increment = fields.require("g")?;
                scenario.mode = match raw.mode.as_deref() {
                    None | Some("eq1") => StreamMode::Eq1,
                    Some("literal") => StreamMode::Literal,
                    Some(other) => {
                        return Err(CliError::Validation(format!(
                            "mode must be \"literal\" or \"eq1\", got {other:?}"
                        )))
                    }
                };
                scenario
                    .validate()
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Scenario::Dynamics { scenario }
            }
            "classic_attrition" => {
                fields.allow(&["V", "k", "seed"])?;
                let prize = fields.require("V")?;
                let cost_rate = fields.require("k")?;
                ipwar_core::Contest64::new(prize, cost_rate)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Scenario::ClassicAttrition {
                    prize,
                    cost_rate,
                    seed: fields.unsigned_or("seed", 0)?,
                }
            }
            "free_entry" => {
                fields.allow(&["p", "Q", "c", "D_I"])?;
                Scenario::FreeEntry {
                    price: fields.require("p")?,
                    demand: fields.require("Q")?,
                    unit_cost: fields.require("c")?,
                    deterrence: fields.optional("D_I").unwrap_or(0.0),
                }
            }
            other => {
                return Err(CliError::Validation(format!(
                    "unknown model {other:?}; expected one of carcass, deterrence, entry, \
                     dynamic_game, bioprospecting, dynamics, classic_attrition, free_entry"
                )))
            }
        };
        Ok(scenario)
    }
}

struct Fields<'a>(&'a BTreeMap<String, f64>);

impl Fields<'_> {
    fn has(&self, key: &str) -> bool {
        self.0.contains_key(key)
    }

    /// Rejects any present key outside this model's parameter set.
    fn allow(&self, keys: &[&str]) -> Result<(), CliError> {
        for key in self.0.keys() {
            if !keys.contains(&key.as_str()) {
                return Err(CliError::Validation(format!(
                    "parameter {key:?} does not apply to this model; allowed: {}",
                    keys.join(", ")
                )));
            }
        }
        Ok(())
    }

    fn require(&self, key: &str) -> Result<f64, CliError> {
        let v = *self
            .0
            .get(key)
            .ok_or_else(|| CliError::Validation(format!("missing required parameter {key:?}")))?;
        if !v.is_finite() {
            return Err(CliError::Validation(format!("parameter {key:?} is not finite")));
        }
        Ok(v)
    }

    fn optional(&self, key: &str) -> Option<f64> {
        self.0.get(key).copied()
    }

    fn positive_integer(&self, key: &str) -> Result<u32, CliError> {
        let v = self.require(key)?;
        if v < 1.0 || v.fract() != 0.0 || v > u32::MAX as f64 {
            return Err(CliError::Validation(format!(
                "parameter {key:?} must be a positive whole number, got {v}"
            )));
        }
        Ok(v as u32)
    }

    fn unsigned_or(&self, key: &str, default: u64) -> Result<u64, CliError> {
        match self.optional(key) {
            None => Ok(default),
            Some(v) if v >= 0.0 && v.fract() == 0.0 && v <= u64::MAX as f64 => Ok(v as u64),
            Some(v) => Err(CliError::Validation(format!(
                "parameter {key:?} must be a nonnegative whole number, got {v}"
            ))),
        }
    }

    /// Builds market params from p, Q, c, n0 plus optional deterrence
    /// levels, validated by the core constructor.
    fn market_params(&self) -> Result<MarketParams<f64>, CliError> {
        let mut params = MarketParams::new(
            self.require("p")?,
            self.require("Q")?,
            self.require("c")?,
            self.require("n0")?,
        )
        .map_err(|e| CliError::Validation(e.to_string()))?;
        params.deterrence_pirate = self.optional("D_P").unwrap_or(0.0);
        params.deterrence_industry = self.optional("D_I").unwrap_or(0.0);
        params
            .validate()
            .map_err(|e| CliError::Validation(e.to_string()))?;
        Ok(params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(json: &str) -> Result<Scenario, CliError> {
        let raw: RawScenario = serde_json::from_str(json).map_err(|e| CliError::Parse(e.to_string()))?;
        Scenario::from_raw(raw)
    }

    #[test]
    fn carcass_roundtrip() {
        let s = parse(r#"{"model": "carcass", "params": {"Q": 10}}"#).unwrap();
        assert_eq!(s, Scenario::Carcass { prize: 10.0 });
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let err = parse(r#"{"model": "carcass", "params": {"Q": 10, "zz": 1}}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        // A known key that the model does not use is still rejected.
        let err = parse(r#"{"model": "carcass", "params": {"Q": 10, "INV": 1}}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        // Unknown top-level field.
        let err = parse(r#"{"model": "carcass", "params": {"Q": 10}, "extra": 1}"#).unwrap_err();
        assert!(matches!(err, CliError::Parse(_)));
    }

    #[test]
    fn missing_required_keys_are_rejected() {
        let err = parse(r#"{"model": "deterrence", "params": {"Q": 10, "d1": 6}}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn mode_is_dynamics_only() {
        let err =
            parse(r#"{"model": "carcass", "params": {"Q": 10}, "mode": "eq1"}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        let ok = parse(
            r#"{"model": "dynamics", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "delta": 0.95, "horizon": 30}, "mode": "literal"}"#,
        )
        .unwrap();
        match ok {
            Scenario::Dynamics { scenario } => assert_eq!(scenario.mode, StreamMode::Literal),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bioprospecting_accepts_both_shapes() {
        let direct = parse(
            r#"{"model": "bioprospecting", "params": {"pi_H": 5, "pi_M": 10, "f": 3}}"#,
        )
        .unwrap();
        assert_eq!(
            direct,
            Scenario::Bioprospecting {
                healer_profit: 5.0,
                patent_profit: 10.0,
                entrance_cost: 3.0
            }
        );
        let derived = parse(
            r#"{"model": "bioprospecting", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "INV": 40, "f": 3}}"#,
        )
        .unwrap();
        assert_eq!(
            derived,
            Scenario::Bioprospecting {
                healer_profit: 4.0,
                patent_profit: 59.0,
                entrance_cost: 3.0
            }
        );
        // Mixing the two shapes fails.
        let err = parse(
            r#"{"model": "bioprospecting", "params": {"pi_H": 5, "pi_M": 10, "f": 3, "INV": 40}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn integer_fields_must_be_whole() {
        let err = parse(
            r#"{"model": "dynamics", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "delta": 0.95, "horizon": 29.5}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }

    #[test]
    fn core_validation_propagates() {
        // discount outside (0, 1)
        let err = parse(
            r#"{"model": "dynamics", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "delta": 1.5, "horizon": 10}}"#,
        )
        .unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
        let err =
            parse(r#"{"model": "classic_attrition", "params": {"V": -1, "k": 1}}"#).unwrap_err();
        assert!(matches!(err, CliError::Validation(_)));
    }
}
