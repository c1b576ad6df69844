//! Self-contained SVG quantile plots.

use std::fmt::Write;

use crate::distribution::DistributionReport;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 36.0;
const BOTTOM: f64 = 48.0;
const TICKS: usize = 5;

const CURVE: &str = "#00008b";
const MARKER: &str = "#1f4fff";

/// Sorted empirical values as markers over the symbol quantile curve, both
/// against the quantile position `(i + 1/2)/K`.
pub fn quantile_plot(report: &DistributionReport, title: &str) -> String {
    let k = report.empirical.len();
    let xs: Vec<f64> = (0..k).map(|i| (i as f64 + 0.5) / k as f64).collect();
    let (mut lo, mut hi) = report
        .empirical
        .iter()
        .chain(&report.symbol_quantiles)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    if !lo.is_finite() || !hi.is_finite() {
        lo = 0.0;
        hi = 1.0;
    }
    if hi - lo < 1e-12 {
        lo -= 0.5;
        hi += 0.5;
    }
    let pad = 0.05 * (hi - lo);
    let (lo, hi) = (lo - pad, hi + pad);

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + x * plot_w;
    let py = |y: f64| TOP + (hi - y) / (hi - lo) * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="20" text-anchor="middle" font-size="13">{}</text>"#,
        WIDTH / 2.0,
        escape(title)
    );

    let _ = writeln!(
        s,
        r#"<rect x="{LEFT:.3}" y="{TOP:.3}" width="{plot_w:.3}" height="{plot_h:.3}" fill="none" stroke="black"/>"#
    );
    for t in 0..=TICKS {
        let f = t as f64 / TICKS as f64;
        let x = px(f);
        let y0 = TOP + plot_h;
        let _ = writeln!(
            s,
            r#"<line x1="{x:.3}" y1="{y0:.3}" x2="{x:.3}" y2="{:.3}" stroke="black"/><text x="{x:.3}" y="{:.3}" text-anchor="middle">{f:.3}</text>"#,
            y0 + 5.0,
            y0 + 18.0
        );
        let v = lo + f * (hi - lo);
        let y = py(v);
        let _ = writeln!(
            s,
            r#"<line x1="{:.3}" y1="{y:.3}" x2="{LEFT:.3}" y2="{y:.3}" stroke="black"/><text x="{:.3}" y="{:.3}" text-anchor="end">{v:.3}</text>"#,
            LEFT - 5.0,
            LEFT - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" text-anchor="middle">quantile position</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );

    let mut points = String::new();
    for (x, y) in xs.iter().zip(&report.symbol_quantiles) {
        let _ = write!(points, "{:.3},{:.3} ", px(*x), py(*y));
    }
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="{CURVE}" stroke-width="1.5"/>"#,
        points.trim_end()
    );
    for (x, y) in xs.iter().zip(&report.empirical) {
        let _ = writeln!(
            s,
            r#"<circle cx="{:.3}" cy="{:.3}" r="2" fill="{MARKER}"/>"#,
            px(*x),
            py(*y)
        );
    }
    s.push_str("</svg>\n");
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distribution::Mode;
    use crate::symbol::KernelPartition;

    fn report() -> DistributionReport {
        DistributionReport {
            mode: Mode::Sv,
            kernel: KernelPartition::right(1),
            nvec: vec![2],
            empirical: vec![1.0, 2.0, 3.0, 4.0],
            symbol_quantiles: vec![1.5, 2.0, 3.0, 3.5],
            l1_quantile_distance: 0.25,
            bounds: None,
            scatter: None,
        }
    }

    #[test]
    fn one_marker_per_value_and_one_curve() {
        let svg = quantile_plot(&report(), "sv R <2>");
        assert_eq!(svg.matches("<circle").count(), 4);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains("&lt;2&gt;"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn constant_data_still_has_a_range() {
        let mut r = report();
        r.empirical = vec![1.0; 4];
        r.symbol_quantiles = vec![1.0; 4];
        assert!(!quantile_plot(&r, "flat").contains("NaN"));
    }
}
