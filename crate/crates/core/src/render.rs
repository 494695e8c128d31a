//! Arc diagrams: vertices on a horizontal line in layout order, every edge an
//! arc above the line colored by its page.

use std::fmt::Write;

use crate::io::page_key;
use crate::layout::Layout;

/// Colors cycled by page index.
pub const DEFAULT_PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

/// Drawing options for [`render_arc_diagram`].
#[derive(Clone, Debug, PartialEq)]
pub struct RenderSpec {
    /// One color per page; reused cyclically when there are more pages.
    pub page_palette: Vec<String>,
    /// Horizontal distance between consecutive vertices.
    pub spacing: u32,
    /// Vertical radius over horizontal radius. 1.0 draws semicircles.
    pub height_scale: f64,
    pub show_weights: bool,
    pub show_labels: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            page_palette: DEFAULT_PALETTE.iter().map(|s| s.to_string()).collect(),
            spacing: 60,
            height_scale: 1.0,
            show_weights: false,
            show_labels: true,
        }
    }
}

impl RenderSpec {
    pub fn color(&self, page: usize) -> &str {
        if self.page_palette.is_empty() {
            "#000000"
        } else {
            &self.page_palette[page % self.page_palette.len()]
        }
    }
}

const MARGIN: f64 = 30.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// Coordinates are printed with two decimals so output is byte-stable.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

/// Renders `layout` as a standalone SVG document.
pub fn render_arc_diagram(layout: &Layout, spec: &RenderSpec) -> String {
    let g = layout.graph();
    let ord = layout.ordering();
    let step = spec.spacing.max(1) as f64;
    let hs = if spec.height_scale.is_finite() && spec.height_scale > 0.0 { spec.height_scale } else { 1.0 };
    let max_span = (0..g.m())
        .map(|e| {
            let (a, b) = layout.ends(e);
            ord.position(b) - ord.position(a)
        })
        .max()
        .unwrap_or(0) as f64;
    let base = MARGIN + max_span * step / 2.0 * hs;
    let width = 2.0 * MARGIN + (g.n().saturating_sub(1)) as f64 * step;
    let height = base + MARGIN + if spec.show_labels { 14.0 } else { 0.0 };
    let x = |pos: usize| MARGIN + pos as f64 * step;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(out, r##"<line x1="{}" y1="{b}" x2="{}" y2="{b}" stroke="#444" stroke-width="1"/>"##, num(x(0)), num(x(g.n().saturating_sub(1))), b = num(base));

    // Longer arcs first so short ones stay visible on top.
    let mut edges: Vec<usize> = (0..g.m()).collect();
    edges.sort_by_key(|&e| {
        let (a, b) = layout.ends(e);
        (std::cmp::Reverse(ord.position(b) - ord.position(a)), ord.position(a), e)
    });
    for e in edges {
        let (a, b) = layout.ends(e);
        let (x1, x2) = (x(ord.position(a)), x(ord.position(b)));
        let rx = (x2 - x1) / 2.0;
        let ry = rx * hs;
        let page = layout.page(e);
        let _ = write!(
            out,
            r#"<path d="M {} {b} A {} {} 0 0 1 {} {b}" fill="none" stroke="{}" stroke-width="2" data-edge="{}" data-page="{page}""#,
            num(x1),
            num(rx),
            num(ry),
            num(x2),
            escape(spec.color(page)),
            page_key(a.min(b), a.max(b)),
            b = num(base)
        );
        let _ = writeln!(out, "><title>{}-{} w={} page {page}</title></path>", escape(&g.label(a)), escape(&g.label(b)), g.weight(e));
        if spec.show_weights {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="11" text-anchor="middle" fill="{}">{}</text>"#,
                num((x1 + x2) / 2.0),
                num(base - ry - 3.0),
                escape(spec.color(page)),
                escape(&g.weight(e).to_string())
            );
        }
    }
    for (pos, &v) in ord.order().iter().enumerate() {
        let _ = writeln!(out, r##"<circle cx="{}" cy="{}" r="4" fill="#000"/>"##, num(x(pos)), num(base));
        if spec.show_labels {
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{}" font-size="12" text-anchor="middle">{}</text>"#,
                num(x(pos)),
                num(base + 18.0),
                escape(&g.label(v))
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Renders `layout` in Graphviz DOT with pinned positions (use `neato -n`).
pub fn render_dot(layout: &Layout, spec: &RenderSpec) -> String {
    let g = layout.graph();
    let ord = layout.ordering();
    let mut out = String::from("graph layout {\n  node [shape=circle, width=0.3, fixedsize=true];\n");
    for (pos, &v) in ord.order().iter().enumerate() {
        let _ = writeln!(
            out,
            "  {v} [label=\"{}\", pos=\"{},0!\"];",
            g.label(v).replace('"', "\\\""),
            pos as u64 * spec.spacing.max(1) as u64
        );
    }
    for e in 0..g.m() {
        let (a, b) = layout.ends(e);
        let page = layout.page(e);
        let _ = write!(out, "  {a} -- {b} [color=\"{}\", page={page}", spec.color(page));
        if spec.show_weights {
            let _ = write!(out, ", label=\"{}\"", g.weight(e));
        }
        out.push_str("];\n");
    }
    out.push_str("}\n");
    out
}
