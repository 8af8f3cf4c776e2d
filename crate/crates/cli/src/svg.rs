//! Self-contained SVG line chart for simulation traces.
//!
//! Output is a standalone SVG 1.1 document with a fixed 800x600 viewBox,
//! built purely from the data: no timestamps, no generated ids, so equal
//! traces render byte-identical files.

use ipwar_core::dynamics::SimulationTrace;

use crate::numfmt::fmt_sig;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 630.0; // leaves room for the legend column
const TOP: f64 = 40.0;
const BOTTOM: f64 = 540.0;
const DIVISIONS: usize = 5;

/// Renders per-period industry (solid) and pirate (dashed) profits
/// against the period index.
pub fn profit_chart(trace: &SimulationTrace<f64>) -> String {
    let ts: Vec<f64> = trace.periods.iter().map(|r| r.t as f64).collect();
    let industry: Vec<f64> = trace.periods.iter().map(|r| r.industry_profit).collect();
    let pirate: Vec<f64> = trace.periods.iter().map(|r| r.pirate_profit).collect();

    let (x_min, x_max) = padded_extent(&ts);
    let (y_min, y_max) = padded_extent(&[industry.clone(), pirate.clone()].concat());
    let x = |t: f64| LEFT + (t - x_min) / (x_max - x_min) * (RIGHT - LEFT);
    let y = |v: f64| BOTTOM - (v - y_min) / (y_max - y_min) * (BOTTOM - TOP);

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" width=\"{WIDTH}\" height=\"{HEIGHT}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));

    // Axis ticks and labels on five even divisions.
    for i in 0..=DIVISIONS {
        let frac = i as f64 / DIVISIONS as f64;
        let tx = LEFT + frac * (RIGHT - LEFT);
        let ty = BOTTOM - frac * (BOTTOM - TOP);
        let x_value = x_min + frac * (x_max - x_min);
        let y_value = y_min + frac * (y_max - y_min);
        svg.push_str(&format!(
            "  <line x1=\"{c}\" y1=\"{b}\" x2=\"{c}\" y2=\"{b2}\" stroke=\"black\"/>\n",
            c = coord(tx),
            b = coord(BOTTOM),
            b2 = coord(BOTTOM + 6.0)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            coord(tx),
            coord(BOTTOM + 20.0),
            fmt_sig(x_value, 6)
        ));
        svg.push_str(&format!(
            "  <line x1=\"{l2}\" y1=\"{c}\" x2=\"{l}\" y2=\"{c}\" stroke=\"black\"/>\n",
            l2 = coord(LEFT - 6.0),
            l = coord(LEFT),
            c = coord(ty)
        ));
        svg.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n",
            coord(LEFT - 10.0),
            coord(ty + 4.0),
            fmt_sig(y_value, 6)
        ));
    }

    // Zero-profit gridline when zero is inside the range.
    if y_min < 0.0 && y_max > 0.0 {
        svg.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{z}\" x2=\"{}\" y2=\"{z}\" stroke=\"#999999\" stroke-dasharray=\"3 4\"/>\n",
            coord(LEFT),
            coord(RIGHT),
            z = coord(y(0.0))
        ));
    }

    // Plot frame.
    svg.push_str(&format!(
        "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        coord(LEFT),
        coord(TOP),
        coord(RIGHT - LEFT),
        coord(BOTTOM - TOP)
    ));

    let points = |values: &[f64]| -> String {
        ts.iter()
            .zip(values)
            .map(|(&t, &v)| format!("{},{}", coord(x(t)), coord(y(v))))
            .collect::<Vec<_>>()
            .join(" ")
    };
    svg.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n",
        points(&industry)
    ));
    svg.push_str(&format!(
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#c23b22\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n",
        points(&pirate)
    ));

    // Legend.
    let legend_x = RIGHT + 14.0;
    svg.push_str(&format!(
        "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y1}\" stroke=\"#1f6feb\" stroke-width=\"2\"/>\n",
        x1 = coord(legend_x),
        x2 = coord(legend_x + 28.0),
        y1 = coord(TOP + 14.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\">industry</text>\n",
        coord(legend_x + 34.0),
        coord(TOP + 18.0)
    ));
    svg.push_str(&format!(
        "  <line x1=\"{x1}\" y1=\"{y1}\" x2=\"{x2}\" y2=\"{y1}\" stroke=\"#c23b22\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n",
        x1 = coord(legend_x),
        x2 = coord(legend_x + 28.0),
        y1 = coord(TOP + 38.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\">pirate</text>\n",
        coord(legend_x + 34.0),
        coord(TOP + 42.0)
    ));

    // Axis labels; the vertical axis reads per-period profit.
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">t (periods)</text>\n",
        coord((LEFT + RIGHT) / 2.0),
        coord(BOTTOM + 42.0)
    ));
    svg.push_str(&format!(
        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 {x} {y})\">per-period profit (currency)</text>\n",
        coord(20.0),
        coord((TOP + BOTTOM) / 2.0),
        x = coord(20.0),
        y = coord((TOP + BOTTOM) / 2.0)
    ));
    svg.push_str("</svg>\n");
    svg
}

/// Data extent widened by 5% on each side; a flat series pads by one unit.
fn padded_extent(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if (max - min).abs() < f64::EPSILON {
        (min - 1.0, max + 1.0)
    } else {
        let pad = 0.05 * (max - min);
        (min - pad, max + pad)
    }
}

/// Six-significant-digit coordinates keep the file compact and stable.
fn coord(v: f64) -> String {
    fmt_sig(v, 6)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ipwar_core::dynamics::{simulate_attrition, DynamicScenario};
    use ipwar_core::market::MarketParams;

    fn trace(horizon: usize) -> SimulationTrace<f64> {
        let market = MarketParams::new(1.0, 100.0, 1.0, 20.0).unwrap();
        let mut s = DynamicScenario::new(market, 0.95, horizon).unwrap();
        s.n_decrement = 1.0;
        s.industry_deterrence_increment = 2.0;
        simulate_attrition(&s).unwrap()
    }

    #[test]
    fn chart_is_deterministic_and_well_formed() {
        let t = trace(30);
        let a = profit_chart(&t);
        let b = profit_chart(&t);
        assert_eq!(a, b);
        assert!(a.starts_with("<?xml"));
        assert!(a.contains("version=\"1.1\""));
        assert!(a.contains("viewBox=\"0 0 800 600\""));
        assert_eq!(a.matches("<polyline").count(), 2);
        assert!(a.contains("stroke-dasharray=\"6 4\""));
        assert!(a.ends_with("</svg>\n"));
    }

    #[test]
    fn single_period_traces_render() {
        let a = profit_chart(&trace(1));
        assert!(a.contains("<polyline"));
    }

    #[test]
    fn zero_line_present_when_profits_cross_zero() {
        let a = profit_chart(&trace(30)); // dips to -25 then rises to 99
        assert!(a.contains("stroke-dasharray=\"3 4\""));
    }
}
