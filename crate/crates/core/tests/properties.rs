//! Property tests: invariance laws and oracle cross-checks for the whole
//! library, driven by randomized inputs.

use ipwar_core::dynamics::{self, DynamicScenario, StreamMode};
use ipwar_core::game::{EssVerdict, MixedEquilibrium, MixedStrategy, NormalFormGame, Player};
use ipwar_core::market::{self, MarketParams};
use proptest::prelude::*;

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn payoff() -> impl Strategy<Value = f64> {
    -10.0..10.0
}

/// Random bimatrix game up to 4x4 with payoffs in [-10, 10].
fn arb_game() -> impl Strategy<Value = NormalFormGame<f64>> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(m, n)| {
        proptest::collection::vec(
            proptest::collection::vec((payoff(), payoff()), n),
            m,
        )
        .prop_map(move |cells| {
            NormalFormGame::new(labels("R", m), labels("C", n), cells).unwrap()
        })
    })
}

/// Random symmetric game: column payoffs are the transpose of row payoffs.
fn arb_symmetric_game() -> impl Strategy<Value = NormalFormGame<f64>> {
    (2usize..=4)
        .prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(payoff(), n), n)
                .prop_map(move |u| (n, u))
        })
        .prop_map(|(n, u)| {
            let cells = (0..n)
                .map(|i| (0..n).map(|j| (u[i][j], u[j][i])).collect())
                .collect();
            NormalFormGame::new(labels("A", n), labels("A", n), cells).unwrap()
        })
}

/// Random point on the probability simplex.
fn arb_mix(n: usize) -> impl Strategy<Value = MixedStrategy<f64>> {
    proptest::collection::vec(0.01..1.0f64, n).prop_map(|raw| {
        let total: f64 = raw.iter().sum();
        MixedStrategy::new(raw.into_iter().map(|x| x / total).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// pure_nash agrees exactly with the exhaustive oracle's pure subset.
    #[test]
    fn pure_nash_matches_brute_force(game in arb_game()) {
        let oracle = game.brute_force_nash(1);
        prop_assert_eq!(game.pure_nash(), oracle.pure);
    }

    /// Positive scaling changes payoffs but no reported set or verdict.
    #[test]
    fn positive_scaling_preserves_analysis(game in arb_symmetric_game(), lambda in 0.1..100.0f64) {
        let scaled = NormalFormGame::new(
            game.row_actions().to_vec(),
            game.col_actions().to_vec(),
            (0..game.rows())
                .map(|i| (0..game.cols()).map(|j| {
                    let (a, b) = game.payoff(i, j);
                    (lambda * a, lambda * b)
                }).collect())
                .collect(),
        ).unwrap();
        prop_assert_eq!(game.pure_nash(), scaled.pure_nash());
        prop_assert_eq!(
            game.dominant_action(Player::Row).map(|(a, _)| a),
            scaled.dominant_action(Player::Row).map(|(a, _)| a)
        );
        prop_assert_eq!(
            game.dominant_action(Player::Col).map(|(a, _)| a),
            scaled.dominant_action(Player::Col).map(|(a, _)| a)
        );
        for a in 0..game.rows() {
            let candidate = MixedStrategy::pure(a, game.rows());
            prop_assert_eq!(
                game.ess_check(&candidate).unwrap(),
                scaled.ess_check(&candidate).unwrap()
            );
        }
    }

    /// Adding a constant to one player's payoffs leaves that player's
    /// best-response sets unchanged.
    #[test]
    fn payoff_shift_preserves_best_responses(game in arb_game(), shift in -50.0..50.0f64) {
        let shifted = NormalFormGame::new(
            game.row_actions().to_vec(),
            game.col_actions().to_vec(),
            (0..game.rows())
                .map(|i| (0..game.cols()).map(|j| {
                    let (a, b) = game.payoff(i, j);
                    (a + shift, b)
                }).collect())
                .collect(),
        ).unwrap();
        for j in 0..game.cols() {
            let col_pure = MixedStrategy::pure(j, game.cols());
            prop_assert_eq!(
                game.best_response(Player::Row, &col_pure).unwrap(),
                shifted.best_response(Player::Row, &col_pure).unwrap()
            );
        }
    }

    /// Any candidate judged ESS (or Nash-but-not-ESS) passes an
    /// independently recomputed symmetric-Nash test.
    #[test]
    fn ess_implies_nash(game in arb_symmetric_game(), seed_mix in arb_mix(4)) {
        let n = game.rows();
        let mut candidates: Vec<MixedStrategy<f64>> =
            (0..n).map(|a| MixedStrategy::pure(a, n)).collect();
        let trimmed: Vec<f64> = seed_mix.probabilities()[..n].to_vec();
        let total: f64 = trimmed.iter().sum();
        candidates.push(MixedStrategy::new(trimmed.into_iter().map(|x| x / total).collect()).unwrap());
        for candidate in candidates {
            let verdict = game.ess_check(&candidate).unwrap();
            if verdict != EssVerdict::NotNash {
                // Independent check: no pure action beats the candidate
                // against itself.
                let probs = candidate.probabilities();
                let against = |a: usize| -> f64 {
                    (0..n).map(|b| probs[b] * game.payoff(a, b).0).sum()
                };
                let e_ss: f64 = (0..n).map(|a| probs[a] * against(a)).sum();
                for m in 0..n {
                    prop_assert!(against(m) <= e_ss + 1e-9);
                }
            }
        }
    }

    /// Interior mixed equilibria equalize each player's two actions.
    #[test]
    fn interior_mix_is_indifferent(game in arb_game().prop_filter("2x2", |g| g.rows() == 2 && g.cols() == 2)) {
        if let MixedEquilibrium::Interior(row_mix, col_mix) = game.mixed_nash_2x2().unwrap() {
            let row_payoffs = game.expected_payoffs(Player::Row, &col_mix).unwrap();
            let col_payoffs = game.expected_payoffs(Player::Col, &row_mix).unwrap();
            prop_assert!((row_payoffs[0] - row_payoffs[1]).abs() < 1e-9);
            prop_assert!((col_payoffs[0] - col_payoffs[1]).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Free entry zeroes the competitive profit and shrinks as staying in
    /// the market gets more expensive.
    #[test]
    fn free_entry_zero_profit_and_monotone(
        p in 0.1..5.0f64,
        q in 1.0..200.0f64,
        c in 0.01..5.0f64,
        d in 0.0..5.0f64,
        bump in 0.01..2.0f64,
    ) {
        let params = MarketParams::new(p, q, c, 2.0).unwrap();
        let n_star = params.free_entry_n(d).unwrap();
        let mut at_star = params;
        at_star.producers = n_star.max(1.0);
        if n_star >= 1.0 {
            prop_assert!(at_star.competitive_profit(d).abs() < 1e-9);
        }
        prop_assert!(params.free_entry_n(d + bump).unwrap() < n_star);
        let costlier = MarketParams::new(p, q, c + bump, 2.0).unwrap();
        prop_assert!(costlier.free_entry_n(d).unwrap() < n_star);
    }

    /// The healer profit is the zero-deterrence competitive profit.
    #[test]
    fn healer_profit_identity(
        p in 0.1..5.0f64,
        q in 1.0..200.0f64,
        c in 0.0..5.0f64,
        n in 1.0..50.0f64,
    ) {
        let params = MarketParams::new(p, q, c, n).unwrap();
        prop_assert_eq!(params.healer_profit(), params.competitive_profit(0.0));
        prop_assert!(params.monopoly_profit() >= params.competitive_profit(0.0) - 1e-12);
    }

    /// Zero-cost deterrence reproduces the carcass cells.
    #[test]
    fn deterrence_degenerates_to_carcass(q in 0.1..1000.0f64) {
        let deterrence = market::build_deterrence_game(q, 0.0, 0.0).unwrap();
        let carcass = market::build_carcass_game(q).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                prop_assert_eq!(deterrence.payoff(i, j), carcass.payoff(i, j));
            }
        }
    }

    /// Mutual blockade survives as an equilibrium exactly while both
    /// deterrence costs stay at or below half the prize.
    #[test]
    fn deterrence_regime_boundary(
        q in 0.5..100.0f64,
        f1 in 0.0..1.0f64,
        f2 in 0.0..1.0f64,
    ) {
        let d1 = f1 * q;
        let d2 = f2 * q;
        // Stay clear of the tolerance band around the boundary.
        prop_assume!((d1 - q / 2.0).abs() > 1e-6 * q.max(1.0));
        prop_assume!((d2 - q / 2.0).abs() > 1e-6 * q.max(1.0));
        let game = market::build_deterrence_game(q, d1, d2).unwrap();
        let has_bb = game.pure_nash().contains(&(0, 0));
        prop_assert_eq!(has_bb, d1 <= q / 2.0 && d2 <= q / 2.0);
    }

    /// Bioprospecting regimes against the exhaustive oracle: patenting
    /// stays an equilibrium while it covers the entrance cost; otherwise
    /// blockade-and-no-patent takes over.
    #[test]
    fn bioprospecting_regimes(
        pi_h in 0.1..10.0f64,
        pi_m in 0.1..20.0f64,
        f in 0.0..25.0f64,
    ) {
        prop_assume!((pi_m - f).abs() > 1e-6);
        let game = market::build_bioprospecting_game(pi_h, pi_m, f).unwrap();
        let nash = game.pure_nash();
        prop_assert_eq!(&nash, &game.brute_force_nash(1).pure);
        prop_assert_eq!(nash.contains(&(0, 0)), pi_m >= f);
        if pi_m < f {
            prop_assert!(nash.contains(&(0, 1)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Stream closed forms agree with term-by-term summation, and the
    /// industry stream always beats the pirate stream.
    ///
    /// The dominance is strict in exact arithmetic for every valid input;
    /// in f64 the monopoly tail `pQ·δ^T/(1-δ)` must stay above rounding
    /// relative to the competitive part, which `δ ≥ 0.2, T ≤ 20` ensures
    /// (`δ^T ≥ 1e-14`, far above machine epsilon).
    #[test]
    fn streams_match_oracle_and_dominate(
        p in 0.1..5.0f64,
        q in 1.0..200.0f64,
        n in 1.0..50.0f64,
        periods in 1u32..=20,
        delta in 0.2..0.9f64,
    ) {
        let params = MarketParams::new(p, q, 0.0, n).unwrap();
        let pirate = dynamics::pirate_stream_literal(&params, periods, delta).unwrap();
        let industry = dynamics::industry_stream_literal(&params, periods, delta).unwrap();
        prop_assert!(industry > pirate);

        let oracle_pirate: f64 = (0..periods).map(|t| delta.powi(t as i32) * p * (q / n)).sum();
        let oracle_industry: f64 = oracle_pirate
            + (periods..periods + 1000).map(|t| delta.powi(t as i32) * p * q).sum::<f64>();
        let remainder = delta.powi(periods as i32 + 1000) * p * q / (1.0 - delta);
        prop_assert!((pirate - oracle_pirate).abs() < 1e-9);
        prop_assert!((industry - oracle_industry).abs() < 1e-9 + remainder);
    }

    /// Every cumulative column of a trace equals its recomputation from
    /// the per-period columns.
    #[test]
    fn trace_cumulative_self_consistency(
        p in 0.1..2.0f64,
        q in 1.0..100.0f64,
        c in 0.0..3.0f64,
        n0 in 1.0..30.0f64,
        r in 0.0..3.0f64,
        g in 0.0..5.0f64,
        delta in 0.5..0.99f64,
        horizon in 1usize..40,
        literal in proptest::bool::ANY,
    ) {
        let market = MarketParams::new(p, q, c, n0).unwrap();
        let mut scenario = DynamicScenario::new(market, delta, horizon).unwrap();
        scenario.n_decrement = r;
        scenario.industry_deterrence_increment = g;
        scenario.mode = if literal { StreamMode::Literal } else { StreamMode::Eq1 };
        let trace = dynamics::simulate_attrition(&scenario).unwrap();
        let mut cum_p = 0.0;
        let mut cum_i = 0.0;
        for rec in &trace.periods {
            let w = delta.powi(rec.t as i32);
            cum_p += w * rec.pirate_profit;
            cum_i += w * rec.industry_profit;
            prop_assert!((cum_p - rec.disc_cum_pirate).abs() < 1e-9);
            prop_assert!((cum_i - rec.disc_cum_industry).abs() < 1e-9);
            // Producer path invariant.
            prop_assert_eq!(rec.producers, (n0 - r * rec.t as f64).max(1.0));
        }
        if let Some(onset) = trace.monopoly_onset {
            for rec in &trace.periods[onset..] {
                prop_assert_eq!(rec.pirate_profit, 0.0);
                prop_assert_eq!(rec.industry_profit, p * q - c);
            }
        }
    }

    /// Raising the deterrence growth rate never raises the industry's
    /// total discounted profit.
    #[test]
    fn deterrence_growth_is_costly(
        g in 0.0..5.0f64,
        extra in 0.1..5.0f64,
        r in 0.0..2.0f64,
        horizon in 2usize..40,
    ) {
        let market = MarketParams::new(1.0, 100.0, 1.0, 20.0).unwrap();
        let mut scenario = DynamicScenario::new(market, 0.95, horizon).unwrap();
        scenario.n_decrement = r;
        scenario.industry_deterrence_increment = g;
        let base = dynamics::simulate_attrition(&scenario).unwrap();
        scenario.industry_deterrence_increment = g + extra;
        let steeper = dynamics::simulate_attrition(&scenario).unwrap();
        let total = |t: &ipwar_core::Trace64| t.periods.last().unwrap().disc_cum_industry;
        prop_assert!(total(&steeper) <= total(&base) + 1e-9);
    }

    /// A higher discount factor puts more present value on the monopoly
    /// phase.
    #[test]
    fn patience_weights_the_monopoly_phase(
        d1 in 0.5..0.8f64,
        gap in 0.05..0.19f64,
    ) {
        let market = MarketParams::new(1.0, 100.0, 1.0, 10.0).unwrap();
        let monopoly_value = |delta: f64| {
            let mut scenario = DynamicScenario::new(market, delta, 25).unwrap();
            scenario.n_decrement = 1.0;
            let trace = dynamics::simulate_attrition(&scenario).unwrap();
            let onset = trace.monopoly_onset.expect("onset within horizon");
            trace.periods[onset..]
                .iter()
                .map(|rec| delta.powi(rec.t as i32) * rec.industry_profit)
                .sum::<f64>()
        };
        prop_assert!(monopoly_value(d1 + gap) >= monopoly_value(d1));
    }

    /// In literal mode with a constant population the trace reproduces the
    /// stream partial sums.
    #[test]
    fn literal_trace_matches_streams(
        p in 0.1..2.0f64,
        q in 1.0..100.0f64,
        n in 1.5..30.0f64,
        delta in 0.5..0.99f64,
        horizon in 1usize..30,
    ) {
        let market = MarketParams::new(p, q, 0.0, n).unwrap();
        let mut scenario = DynamicScenario::new(market, delta, horizon).unwrap();
        scenario.mode = StreamMode::Literal;
        let trace = dynamics::simulate_attrition(&scenario).unwrap();
        prop_assert_eq!(trace.monopoly_onset, None);
        for rec in &trace.periods {
            let stream = dynamics::pirate_stream_literal(&market, rec.t as u32 + 1, delta).unwrap();
            prop_assert!((rec.disc_cum_pirate - stream).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The ESS density is a probability density and persisting against it
    /// earns zero regardless of the persistence level.
    #[test]
    fn attrition_indifference(
        v in 0.1..10.0f64,
        k in 0.1..10.0f64,
        frac in 0.0..1.0f64,
    ) {
        let contest = ipwar_core::Contest64::new(v, k).unwrap();
        let x = frac * 10.0 * v / k;
        prop_assert!(contest.payoff_vs_ess(x).abs() < 1e-6);
        // Density mass over [0, 100 V/k] by fixed-step Simpson.
        let hi = 100.0 * v / k;
        let steps = 40_000;
        let h = hi / steps as f64;
        let mut mass = contest.ess_density(0.0).unwrap() + contest.ess_density(hi).unwrap();
        for i in 1..steps {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            mass += w * contest.ess_density(i as f64 * h).unwrap();
        }
        mass *= h / 3.0;
        prop_assert!((mass - 1.0).abs() < 1e-9);
    }
}
