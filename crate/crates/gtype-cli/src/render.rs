//! Static SVG of a type: one square per rectangle with its horizontal bands
//! labelled by their images, vertical bands dashed, and optional ribbon ends.

use std::fmt::Write;

use gtype_core::GeometricType;
use gtype_oracle::{Q, Ribbon};
use num_traits::ToPrimitive;

const SIDE: f64 = 240.0;
const GAP: f64 = 60.0;
const MARGIN: f64 = 40.0;
const TOP: f64 = 70.0;
const COLORS: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

fn left(i: usize) -> f64 {
    MARGIN + (i - 1) as f64 * (SIDE + GAP)
}

fn f(x: &Q) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

/// Byte-identical output for identical input.
pub fn render_svg(t: &GeometricType, ribbons: &[Ribbon]) -> String {
    let n = t.n();
    let width = 2.0 * MARGIN + n as f64 * SIDE + (n - 1) as f64 * GAP;
    let height = TOP + SIDE + MARGIN + if ribbons.is_empty() { 0.0 } else { 20.0 };
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}" font-family="monospace" font-size="11">"#
    );
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">",
        "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#333\"/></marker></defs>\n"
    ));
    for i in 1..=n {
        let x = left(i);
        let _ = writeln!(s, r#"<g id="rect-{i}">"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}" text-anchor="middle" font-size="14">R{i}</text>"#, x + SIDE / 2.0, TOP - 24.0);
        let h = t.h(i);
        let bh = SIDE / h as f64;
        for j in 1..=h {
            // band j = 1 at the bottom
            let y = TOP + SIDE - j as f64 * bh;
            let fill = if j % 2 == 1 { "#eef3fb" } else { "#dde7f6" };
            let _ = writeln!(
                s,
                r##"<rect class="hband" x="{x:.2}" y="{y:.2}" width="{SIDE:.2}" height="{bh:.2}" fill="{fill}" stroke="#7a8fb5" stroke-width="0.5"/>"##
            );
            let to = t.rho(i, j);
            let up = t.eps(i, j) > 0;
            let (y0, y1) = if up { (y + bh * 0.8, y + bh * 0.2) } else { (y + bh * 0.2, y + bh * 0.8) };
            let ax = x + 18.0;
            let _ = writeln!(
                s,
                r##"<line x1="{ax:.2}" y1="{y0:.2}" x2="{ax:.2}" y2="{y1:.2}" stroke="#333" stroke-width="1.2" marker-end="url(#arrow)"/>"##
            );
            let _ = writeln!(
                s,
                r#"<text x="{:.2}" y="{:.2}" dominant-baseline="middle">H({i},{j}) -&gt; V({},{}) {}</text>"#,
                x + 32.0,
                y + bh / 2.0,
                to.k,
                to.l,
                if up { "+1" } else { "-1" }
            );
        }
        let v = t.v(i);
        for l in 1..v {
            let vx = x + SIDE * l as f64 / v as f64;
            let _ = writeln!(
                s,
                r##"<line class="vband" x1="{vx:.2}" y1="{TOP:.2}" x2="{vx:.2}" y2="{:.2}" stroke="#555" stroke-dasharray="4 3"/>"##,
                TOP + SIDE
            );
        }
        let _ = writeln!(s, r##"<rect x="{x:.2}" y="{TOP:.2}" width="{SIDE:.2}" height="{SIDE:.2}" fill="none" stroke="#000" stroke-width="1.5"/>"##);
        s.push_str("</g>\n");
    }
    for r in ribbons {
        let color = COLORS[(r.generation - 1) % COLORS.len()];
        let _ = writeln!(s, r#"<g class="ribbon" data-generation="{}" data-stripe="{}">"#, r.generation, r.stripe);
        for e in &r.ends {
            let x = left(e.rect);
            // later generations sit slightly further from the edge
            let off = 3.0 * r.generation as f64;
            let y = if e.side > 0 { TOP - off } else { TOP + SIDE + off };
            let _ = writeln!(
                s,
                r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2.5"/>"#,
                x + SIDE * f(&e.x0),
                x + SIDE * f(&e.x1)
            );
        }
        s.push_str("</g>\n");
    }
    if !ribbons.is_empty() {
        let last = ribbons.iter().map(|r| r.generation).max().unwrap_or(0);
        let _ = writeln!(s, r#"<text x="{MARGIN:.2}" y="{:.2}">ribbon ends, generations 1..={last}</text>"#, height - 12.0);
    }
    s.push_str("</svg>\n");
    s
}
