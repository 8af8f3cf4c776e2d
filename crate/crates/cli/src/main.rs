//! `ipwar` — scenario-driven analysis of war-of-attrition models for
//! intellectual-property markets.

mod numfmt;
mod report;
mod scenario;
mod svg;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use ipwar_core::dynamics::{
    industry_stream_literal, pirate_stream_literal, simulate_attrition, Decision,
    IncumbentBehavior, SimulationTrace,
};
use ipwar_core::market::{
    build_bioprospecting_game, build_carcass_game, build_deterrence_game, build_dynamic_game,
    build_entry_game, MarketParams,
};
use ipwar_core::Contest64;

use numfmt::fmt_sig;
use scenario::Scenario;

const SIG: usize = 9;

/// Command failure with its scripting exit code.
#[derive(Debug)]
pub enum CliError {
    /// Exit 2: the scenario file cannot be read or is not well-formed.
    Parse(String),
    /// Exit 3: inputs are well-formed but violate a model's domain.
    Validation(String),
    /// Exit 4: an output path cannot be written.
    Io(String),
    /// Exit 5: a command's internal numeric self-check failed.
    SelfCheck(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Validation(_) => 3,
            CliError::Io(_) => 4,
            CliError::SelfCheck(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Validation(m) | CliError::Io(m) | CliError::SelfCheck(m) => m,
        }
    }
}

const MODEL_HELP: &str = "\
Scenario models (JSON files: {\"model\": ..., \"params\": {...}, \"mode\"?}):
  carcass            symmetric Fight/Leave contest splitting a prize Q;
                     params: Q
  deterrence         Blockade/Accommodate contest where mutual blockade
                     costs each side d1/d2 out of the prize; params: Q, d1, d2
  entry              pirate-vs-industry entry game on competitive profits
                     p(Q/n)-c-D per side; params: p, Q, c, n0 [, D_P, D_I]
  dynamic_game       entry game over discounted profit streams: T
                     competitive periods at discount delta, monopoly after;
                     params: p, Q, c, n0, T, delta [, D_P, D_I]
  bioprospecting     healers-vs-bioprospector patent game; params either
                     pi_H, pi_M, f directly or p, Q, c, n0, INV, f
  dynamics           multi-period simulation with n falling by r and
                     industry deterrence rising by g per period; params:
                     p, Q, c, n0, r, g, delta, horizon [, D_P, D_I];
                     mode: \"eq1\" (default) or \"literal\"
  classic_attrition  continuous war of attrition over prize V at cost
                     rate k; params: V, k [, seed]
  free_entry         zero-profit producer count; params: p, Q, c [, D_I]

`analyze` reads the five game models; `simulate` reads dynamics; the
classic_attrition and free_entry computations are exposed through the
attrition-ess and free-entry subcommands.

Exit codes: 0 success, 2 parse failure, 3 validation failure,
4 output I/O failure, 5 numeric self-check failure.";

#[derive(Parser)]
#[command(
    name = "ipwar",
    version,
    about = "War-of-attrition analysis of intellectual-property markets",
    after_long_help = MODEL_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the equilibrium report for a game scenario file
    Analyze {
        /// Scenario file (model: carcass, deterrence, entry, dynamic_game,
        /// or bioprospecting)
        file: PathBuf,
    },
    /// Run a dynamics scenario; write the trace CSV and an optional SVG chart
    Simulate {
        /// Scenario file (model: dynamics)
        file: PathBuf,
        /// CSV output path
        #[arg(long)]
        out: PathBuf,
        /// Optional SVG profit-chart output path
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Verify the classic war-of-attrition ESS: analytic indifference on a
    /// grid of persistence levels plus Monte Carlo tournament fitness
    #[command(name = "attrition-ess")]
    AttritionEss {
        /// Prize V (> 0)
        #[arg(long, allow_negative_numbers = true)]
        prize: f64,
        /// Persistence cost rate k (> 0)
        #[arg(long, allow_negative_numbers = true)]
        cost: f64,
        /// Number of persistence levels spread over [0, 10 V/k]
        #[arg(long, default_value_t = 11)]
        grid: usize,
        /// Monte Carlo rounds per level
        #[arg(long, default_value_t = 100_000)]
        rounds: usize,
        /// RNG seed (defaults to 0, never to entropy)
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Solve the free-entry producer count where per-firm profit is zero
    #[command(name = "free-entry")]
    FreeEntry {
        /// Price per unit
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        /// Total demand
        #[arg(long = "Q", allow_negative_numbers = true)]
        q: f64,
        /// Production cost
        #[arg(long, allow_negative_numbers = true)]
        c: f64,
        /// Per-period deterrence cost
        #[arg(long = "D", allow_negative_numbers = true)]
        d: f64,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {}", e.message());
        std::process::exit(e.code());
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { file } => cmd_analyze(&file),
        Command::Simulate { file, out, svg } => cmd_simulate(&file, &out, svg.as_deref()),
        Command::AttritionEss {
            prize,
            cost,
            grid,
            rounds,
            seed,
        } => cmd_attrition_ess(prize, cost, grid, rounds, seed),
        Command::FreeEntry { p, q, c, d } => cmd_free_entry(p, q, c, d),
    }
}

fn validation(e: ipwar_core::Error) -> CliError {
    CliError::Validation(e.to_string())
}

fn cmd_analyze(file: &Path) -> Result<(), CliError> {
    let scenario = Scenario::load(file)?;
    let (game, row_role, col_role, notes) = match &scenario {
        Scenario::Carcass { prize } => (
            build_carcass_game(*prize).map_err(validation)?,
            "Troop 1",
            "Troop 2",
            Vec::new(),
        ),
        Scenario::Deterrence { prize, d1, d2 } => (
            build_deterrence_game(*prize, *d1, *d2).map_err(validation)?,
            "Pirate",
            "Industry",
            Vec::new(),
        ),
        Scenario::Entry { params } => (
            build_entry_game(params).map_err(validation)?,
            "Pirate",
            "Industry",
            Vec::new(),
        ),
        Scenario::DynamicGame {
            params,
            periods,
            discount,
        } => {
            let pirate = pirate_stream_literal(params, *periods, *discount).map_err(validation)?;
            let industry =
                industry_stream_literal(params, *periods, *discount).map_err(validation)?;
            let game = build_dynamic_game(
                pirate,
                industry,
                params.deterrence_pirate,
                params.deterrence_industry,
            )
            .map_err(validation)?;
            let notes = vec![format!(
                "stream values at delta = {}: pirate {} over {} competitive periods, industry {} \
                 including the monopoly phase",
                fmt_sig(*discount, SIG),
                fmt_sig(pirate, SIG),
                periods,
                fmt_sig(industry, SIG)
            )];
            (game, "Pirate", "Industry", notes)
        }
        Scenario::Bioprospecting {
            healer_profit,
            patent_profit,
            entrance_cost,
        } => {
            let game = build_bioprospecting_game(*healer_profit, *patent_profit, *entrance_cost)
                .map_err(validation)?;
            let mut notes = vec![
                "the payoff matrix is asymmetric by construction: healers keep their profit \
                 under (Accommodate, NotPatent) but forfeit it under (Accommodate, Patent)"
                    .to_string(),
            ];
            if *healer_profit > 0.0 {
                notes.push(
                    "with positive healer profit, Accommodate is never a healer best response, \
                     so no patent-and-accommodate equilibrium exists in this matrix despite the \
                     common claim that patenting firms face accommodation"
                        .to_string(),
                );
            }
            (game, "Healers", "Bioprospector", notes)
        }
        Scenario::Dynamics { .. } => {
            return Err(CliError::Validation(
                "model dynamics is handled by the simulate subcommand".into(),
            ))
        }
        Scenario::ClassicAttrition { .. } => {
            return Err(CliError::Validation(
                "model classic_attrition is handled by the attrition-ess subcommand".into(),
            ))
        }
        Scenario::FreeEntry { .. } => {
            return Err(CliError::Validation(
                "model free_entry is handled by the free-entry subcommand".into(),
            ))
        }
    };
    print!(
        "{}",
        report::render(scenario.model_name(), row_role, col_role, &game, &notes)
    );
    Ok(())
}

fn write_csv(trace: &SimulationTrace<f64>) -> String {
    let mut csv = String::from("t,n,D_P,D_I,pirate_profit,industry_profit,disc_cum_pirate,disc_cum_industry\n");
    for r in &trace.periods {
        csv.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.t,
            fmt_sig(r.producers, SIG),
            fmt_sig(r.pirate_deterrence, SIG),
            fmt_sig(r.industry_deterrence, SIG),
            fmt_sig(r.pirate_profit, SIG),
            fmt_sig(r.industry_profit, SIG),
            fmt_sig(r.disc_cum_pirate, SIG),
            fmt_sig(r.disc_cum_industry, SIG),
        ));
    }
    csv
}

fn cmd_simulate(file: &Path, out: &Path, svg_out: Option<&Path>) -> Result<(), CliError> {
    let scenario = match Scenario::load(file)? {
        Scenario::Dynamics { scenario } => scenario,
        other => {
            return Err(CliError::Validation(format!(
                "simulate requires a dynamics scenario, got model {:?}",
                other.model_name()
            )))
        }
    };
    let trace = simulate_attrition(&scenario).map_err(validation)?;

    // All validation is done; only now touch the filesystem.
    std::fs::write(out, write_csv(&trace))
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", out.display())))?;
    if let Some(svg_path) = svg_out {
        std::fs::write(svg_path, svg::profit_chart(&trace))
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", svg_path.display())))?;
    }

    match trace.monopoly_onset {
        Some(t) => println!("monopoly onset: period {t}"),
        None => println!("monopoly onset: none within the horizon"),
    }
    match trace.breakeven_period() {
        Some(t) => println!("breakeven period: {t}"),
        None => println!("breakeven period: none (cumulative never dipped negative or never recovered)"),
    }
    let decision = match trace.accommodation_decision() {
        Decision::Fight => "fight (total discounted industry stream is positive)",
        Decision::Accommodate => "accommodate (total discounted industry stream is not positive)",
    };
    println!("accommodation decision: {decision}");
    let entrant_value = trace
        .periods
        .last()
        .map(|r| r.disc_cum_pirate)
        .unwrap_or(0.0);
    let class = match trace.classify_incumbent(entrant_value) {
        IncumbentBehavior::Blockaded => "blockaded (entry unprofitable with no deterrence spending)",
        IncumbentBehavior::Deterred => "deterred (entry unprofitable because of deterrence spending)",
        IncumbentBehavior::Accommodated => "accommodated (entry is profitable)",
    };
    println!(
        "incumbent behavior: {class}; entrant value = discounted pirate total {}",
        fmt_sig(entrant_value, SIG)
    );
    println!("wrote {}", out.display());
    if let Some(svg_path) = svg_out {
        println!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn cmd_attrition_ess(
    prize: f64,
    cost: f64,
    grid: usize,
    rounds: usize,
    seed: u64,
) -> Result<(), CliError> {
    let contest = Contest64::new(prize, cost).map_err(validation)?;
    if grid < 1 {
        return Err(CliError::Validation("grid must be at least 1".into()));
    }
    if rounds < 1 {
        return Err(CliError::Validation("rounds must be at least 1".into()));
    }
    let span = 10.0 * prize / cost;
    let levels: Vec<f64> = if grid == 1 {
        vec![0.0]
    } else {
        (0..grid)
            .map(|i| span * i as f64 / (grid - 1) as f64)
            .collect()
    };
    let analytic: Vec<f64> = levels.iter().map(|&x| contest.payoff_vs_ess(x)).collect();
    let monte_carlo = contest.simulate_tournament(&levels, seed, rounds);

    println!(
        "war of attrition: V = {}, k = {}, seed = {seed}, rounds = {rounds}",
        fmt_sig(prize, SIG),
        fmt_sig(cost, SIG)
    );
    println!("against the ESS density (k/V)exp(-kx/V), every persistence level earns 0:");
    println!("{:>14}  {:>14}  {:>14}  {:>14}", "level", "analytic", "mc_mean", "mc_se");
    for (a, mc) in analytic.iter().zip(&monte_carlo) {
        println!(
            "{:>14}  {:>14}  {:>14}  {:>14}",
            fmt_sig(mc.level, 6),
            fmt_sig(*a, 6),
            fmt_sig(mc.mean, 6),
            fmt_sig(mc.std_error, 6)
        );
    }
    let worst = analytic.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    if worst > 1e-6 {
        return Err(CliError::SelfCheck(format!(
            "analytic indifference violated: max |payoff| = {worst:e} exceeds 1e-6"
        )));
    }
    println!("self-check passed: max |analytic payoff| = {} <= 1e-6", fmt_sig(worst, 3));
    Ok(())
}

fn cmd_free_entry(p: f64, q: f64, c: f64, d: f64) -> Result<(), CliError> {
    if d < 0.0 || !d.is_finite() {
        return Err(CliError::Validation(format!(
            "invalid parameter D: {d} must be a nonnegative real"
        )));
    }
    let mut params = MarketParams::new(p, q, c, 1.0).map_err(validation)?;
    let n_star = params.free_entry_n(d).map_err(validation)?;
    println!("free entry: n* = p*Q/(c + D) (the production cost shares the divisor with D)");
    println!("n* = {}", fmt_sig(n_star, SIG));
    println!("floor(n*) = {}", fmt_sig(n_star.floor(), SIG));
    if n_star >= 1.0 {
        params.producers = n_star;
        let residual = params.competitive_profit(d);
        println!(
            "verification: per-firm profit at n* is {} (zero up to rounding)",
            fmt_sig(residual, SIG)
        );
    } else {
        println!("note: n* is below one producer; even a single firm cannot break even here");
    }
    Ok(())
}
