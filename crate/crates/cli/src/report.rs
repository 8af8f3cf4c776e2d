//! Plain-text rendering of equilibrium reports.

use ipwar_core::game::{Dominance, EssVerdict, MixedEquilibrium, NormalFormGame};

use crate::numfmt::fmt_sig;

const SIG: usize = 9;

/// Renders the full analysis of one game: matrix, dominance, pure Nash
/// set, 2×2 mixed equilibrium, ESS verdicts, and any model notes.
pub fn render(
    model: &str,
    row_role: &str,
    col_role: &str,
    game: &NormalFormGame<f64>,
    notes: &[String],
) -> String {
    let report = game.report();
    let mut out = String::new();
    out.push_str(&format!(
        "Model: {model} ({}x{})\n",
        game.rows(),
        game.cols()
    ));
    out.push_str(&format!("Rows: {row_role}; Columns: {col_role}\n\n"));

    // Payoff matrix with padded columns.
    let cell = |i: usize, j: usize| {
        let (a, b) = game.payoff(i, j);
        format!("({}, {})", fmt_sig(a, SIG), fmt_sig(b, SIG))
    };
    let row_label_width = game
        .row_actions()
        .iter()
        .map(|a| a.len())
        .max()
        .unwrap_or(0);
    let col_widths: Vec<usize> = (0..game.cols())
        .map(|j| {
            (0..game.rows())
                .map(|i| cell(i, j).len())
                .chain(std::iter::once(game.col_actions()[j].len()))
                .max()
                .unwrap_or(0)
        })
        .collect();
    out.push_str(&format!("  {:row_label_width$}", ""));
    for (label, width) in game.col_actions().iter().zip(&col_widths) {
        out.push_str(&format!("  {label:>width$}"));
    }
    out.push('\n');
    for (i, label) in game.row_actions().iter().enumerate() {
        out.push_str(&format!("  {:row_label_width$}", label));
        for (j, width) in col_widths.iter().enumerate() {
            out.push_str(&format!("  {:>width$}", cell(i, j)));
        }
        out.push('\n');
    }
    out.push('\n');

    let dominance = |found: Option<(usize, Dominance)>, labels: &[String]| match found {
        Some((a, Dominance::Strict)) => format!("{} (strict)", labels[a]),
        Some((a, Dominance::Weak)) => format!("{} (weak)", labels[a]),
        None => "none".to_string(),
    };
    out.push_str(&format!(
        "Dominant action ({row_role}): {}\n",
        dominance(report.dominant_row, game.row_actions())
    ));
    out.push_str(&format!(
        "Dominant action ({col_role}): {}\n",
        dominance(report.dominant_col, game.col_actions())
    ));

    if report.pure_nash.is_empty() {
        out.push_str("Pure Nash equilibria: none\n");
    } else {
        let profiles: Vec<String> = report
            .pure_nash
            .iter()
            .map(|&(i, j)| {
                let (a, b) = game.payoff(i, j);
                format!(
                    "({}, {}) with payoffs ({}, {})",
                    game.row_actions()[i],
                    game.col_actions()[j],
                    fmt_sig(a, SIG),
                    fmt_sig(b, SIG)
                )
            })
            .collect();
        out.push_str(&format!("Pure Nash equilibria: {}\n", profiles.join("; ")));
    }

    if let Some(mixed) = &report.mixed_2x2 {
        match mixed {
            MixedEquilibrium::Interior(row_mix, col_mix) => {
                out.push_str(&format!(
                    "Mixed equilibrium: {row_role} plays {} with probability {}; {col_role} plays {} with probability {}\n",
                    game.row_actions()[0],
                    fmt_sig(row_mix.probabilities()[0], SIG),
                    game.col_actions()[0],
                    fmt_sig(col_mix.probabilities()[0], SIG),
                ));
            }
            MixedEquilibrium::Continuum => {
                out.push_str(
                    "Mixed equilibrium: degenerate indifference (0 = 0); a continuum of mixed equilibria exists\n",
                );
            }
            MixedEquilibrium::Absent => {
                out.push_str("Mixed equilibrium: none (no interior solution)\n");
            }
        }
    }

    if !report.ess.is_empty() {
        out.push_str("ESS check (symmetric game, pure mutants):\n");
        for entry in &report.ess {
            let name = match entry.strategy.as_pure() {
                Some(a) => format!("pure {}", game.row_actions()[a]),
                None => {
                    let probs: Vec<String> = entry
                        .strategy
                        .probabilities()
                        .iter()
                        .map(|&p| fmt_sig(p, SIG))
                        .collect();
                    format!("mixed ({})", probs.join(", "))
                }
            };
            let verdict = match entry.verdict {
                EssVerdict::Ess => "ESS",
                EssVerdict::NashNotEss => "Nash but not ESS",
                EssVerdict::NotNash => "not a Nash equilibrium",
            };
            out.push_str(&format!("  {name}: {verdict}\n"));
        }
    }

    for note in notes {
        out.push_str(&format!("Note: {note}\n"));
    }
    out
}
