//! SVG and DOT drawings of chord diagrams and of the three trees.
//!
//! Output is a pure function of the input, the [`Style`] and
//! [`RENDER_VERSION`]; coordinates are printed with two decimals.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moments::{monomial_from_table, Monomial, Parity};
use crate::tables::CatalanTable;
use crate::trees::{pocket_tree, ThreadKind, ThreadTree};
use crate::tuples::CatalanTuple;

pub const RENDER_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Svg,
    Dot,
}

impl Format {
    pub fn extension(&self) -> &'static str {
        match self {
            Format::Svg => "svg",
            Format::Dot => "dot",
        }
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "svg" => Ok(Format::Svg),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeKind {
    Pocket,
    Direct,
    Opposite,
}

impl FromStr for TreeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pocket" => Ok(TreeKind::Pocket),
            "direct" => Ok(TreeKind::Direct),
            "opposite" => Ok(TreeKind::Opposite),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

/// Colors and stroke widths. Chords default to green, even threads to
/// orange and odd threads to blue.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Style {
    pub chord_color: String,
    pub even_thread_color: String,
    pub odd_thread_color: String,
    pub chord_width: f64,
    pub thread_width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            chord_color: "#2ca02c".into(),
            even_thread_color: "#ff7f0e".into(),
            odd_thread_color: "#1f77b4".into(),
            chord_width: 2.5,
            thread_width: 1.5,
        }
    }
}

impl Style {
    pub fn thread_color(&self, parity: Parity) -> &str {
        match parity {
            Parity::Even => &self.even_thread_color,
            Parity::Odd => &self.odd_thread_color,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiagramThread {
    pub from: usize,
    pub to: usize,
    pub parity: Parity,
    /// Threads of the same parity nested strictly inside this one.
    pub depth: usize,
}

/// Geometry of a chord diagram: `n` nodes on a circle, `b_0` at the top and
/// the rest counterclockwise.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramSpec {
    pub n: usize,
    pub positions: Vec<(f64, f64)>,
    pub chords: Vec<(usize, usize)>,
    pub threads: Vec<DiagramThread>,
    pub style: Style,
    pub caption: String,
}

const CANVAS: f64 = 400.0;
const RADIUS: f64 = 150.0;

impl DiagramSpec {
    pub fn from_monomial(monomial: &Monomial, style: Style) -> Self {
        let n = monomial.point_count();
        let center = CANVAS / 2.0;
        let positions = (0..n)
            .map(|j| {
                let angle = PI / 2.0 + 2.0 * PI * j as f64 / n as f64;
                (center + RADIUS * angle.cos(), center - RADIUS * angle.sin())
            })
            .collect();
        let threads = monomial
            .threads()
            .iter()
            .map(|t| {
                let (a, b) = t.sorted();
                let depth = monomial
                    .threads()
                    .iter()
                    .filter(|o| o.parity() == t.parity())
                    .filter(|o| {
                        let (c, d) = o.sorted();
                        a <= c && d <= b && (c, d) != (a, b)
                    })
                    .count();
                DiagramThread {
                    from: t.from,
                    to: t.to,
                    parity: t.parity(),
                    depth,
                }
            })
            .collect();
        DiagramSpec {
            n,
            positions,
            chords: monomial.chords().to_vec(),
            threads,
            style,
            caption: monomial.table().to_string(),
        }
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

pub fn render_chord_diagram(table: &CatalanTable, format: Format) -> String {
    render_chord_diagram_styled(table, format, &Style::default())
}

pub fn render_chord_diagram_styled(table: &CatalanTable, format: Format, style: &Style) -> String {
    let spec = DiagramSpec::from_monomial(&monomial_from_table(table), style.clone());
    match format {
        Format::Svg => chord_svg(&spec),
        Format::Dot => chord_dot(&spec),
    }
}

fn svg_header(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<!-- catalan render v{RENDER_VERSION} -->
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height),
    );
}

fn chord_svg(spec: &DiagramSpec) -> String {
    let mut out = String::new();
    let center = CANVAS / 2.0;
    svg_header(&mut out, CANVAS, CANVAS + 30.0);
    let _ = writeln!(
        out,
        r##"  <circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##,
        c = num(center),
        r = num(RADIUS)
    );
    let _ = writeln!(out, r#"  <g class="chords">"#);
    for &(l, m) in &spec.chords {
        let (x1, y1) = spec.positions[l];
        let (x2, y2) = spec.positions[m];
        let _ = writeln!(
            out,
            r#"    <line class="chord" data-ends="{l} {m}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{}" stroke-width="{}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2),
            spec.style.chord_color,
            num(spec.style.chord_width)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g class="threads">"#);
    for t in &spec.threads {
        let (x1, y1) = spec.positions[t.from];
        let (x2, y2) = spec.positions[t.to];
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        let pull = (0.25 + 0.12 * t.depth.min(5) as f64).min(0.9);
        let (cx, cy) = (mx + (center - mx) * pull, my + (center - my) * pull);
        let parity = match t.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        let _ = writeln!(
            out,
            r#"    <path class="thread {parity}" data-ends="{} {}" d="M {} {} Q {} {} {} {}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            t.from,
            t.to,
            num(x1),
            num(y1),
            num(cx),
            num(cy),
            num(x2),
            num(y2),
            spec.style.thread_color(t.parity),
            num(spec.style.thread_width)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(
        out,
        r#"  <g class="nodes" font-family="sans-serif" font-size="12">"#
    );
    for (j, &(x, y)) in spec.positions.iter().enumerate() {
        let (fill, r) = if j == 0 {
            ("#000000", 6.0)
        } else {
            ("#ffffff", 4.5)
        };
        let _ = writeln!(
            out,
            r##"    <circle class="node" cx="{}" cy="{}" r="{}" fill="{fill}" stroke="#000000" stroke-width="1"/>"##,
            num(x),
            num(y),
            num(r)
        );
        let angle = PI / 2.0 + 2.0 * PI * j as f64 / spec.n as f64;
        let (lx, ly) = (
            center + (RADIUS + 18.0) * angle.cos(),
            center - (RADIUS + 18.0) * angle.sin() + 4.0,
        );
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" text-anchor="middle">b{j}</text>"#,
            num(lx),
            num(ly)
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="13">{}</text>"#,
        num(center),
        num(CANVAS + 18.0),
        escape(&spec.caption)
    );
    out.push_str("</svg>\n");
    out
}

fn chord_dot(spec: &DiagramSpec) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "// catalan render v{RENDER_VERSION}");
    let _ = writeln!(out, "digraph chord_diagram {{");
    let _ = writeln!(out, "  layout=neato;");
    let _ = writeln!(out, "  label=\"{}\";", spec.caption);
    let _ = writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true];");
    for (j, &(x, y)) in spec.positions.iter().enumerate() {
        let extra = if j == 0 {
            ", style=filled, fillcolor=black, fontcolor=white"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "  b{j} [pos=\"{},{}!\"{extra}];",
            num(x / 72.0),
            num((CANVAS - y) / 72.0)
        );
    }
    for &(l, m) in &spec.chords {
        let _ = writeln!(
            out,
            "  b{l} -> b{m} [dir=none, class=chord, color=\"{}\", penwidth={}];",
            spec.style.chord_color,
            num(spec.style.chord_width)
        );
    }
    for t in &spec.threads {
        let _ = writeln!(
            out,
            "  b{} -> b{} [class=thread, color=\"{}\", penwidth={}];",
            t.from,
            t.to,
            spec.style.thread_color(t.parity),
            num(spec.style.thread_width)
        );
    }
    out.push_str("}\n");
    out
}

pub fn render_tree(tuple: &CatalanTuple, kind: TreeKind, format: Format) -> String {
    match (kind, format) {
        (TreeKind::Pocket, Format::Svg) => pocket_svg(tuple),
        (TreeKind::Pocket, Format::Dot) => pocket_dot(tuple),
        (TreeKind::Direct, f) => thread_tree_doc(tuple, ThreadKind::Direct, f),
        (TreeKind::Opposite, f) => thread_tree_doc(tuple, ThreadKind::Opposite, f),
    }
}

const STEP: f64 = 50.0;
const MARGIN: f64 = 30.0;

fn pocket_svg(tuple: &CatalanTuple) -> String {
    let tree = pocket_tree(tuple);
    let n = tree.pocket_count();
    // Leaves take consecutive slots; inner pockets sit above their children.
    let mut x = vec![0.0; n];
    let mut next_slot = 0.0;
    fn place(tree: &crate::trees::PocketTree, v: usize, x: &mut [f64], next: &mut f64) {
        if tree.is_leaf(v) {
            x[v] = *next;
            *next += 1.0;
            return;
        }
        for &c in tree.children(v) {
            place(tree, c, x, next);
        }
        let first = x[tree.children(v)[0]];
        let last = x[*tree.children(v).last().expect("non-leaf")];
        x[v] = (first + last) / 2.0;
    }
    place(&tree, 0, &mut x, &mut next_slot);
    let depth = (0..n).map(|m| tree.level(m)).max().unwrap_or(0);
    let width = 2.0 * MARGIN + STEP * (next_slot - 1.0).max(0.0);
    let height = 2.0 * MARGIN + STEP * depth as f64 + 20.0;
    let pos = |m: usize| (MARGIN + STEP * x[m], MARGIN + STEP * tree.level(m) as f64);

    let mut out = String::new();
    svg_header(&mut out, width, height);
    for m in 1..n {
        let (x1, y1) = pos(tree.parent(m).expect("non-root"));
        let (x2, y2) = pos(m);
        let _ = writeln!(
            out,
            r##"  <line class="edge" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#000000" stroke-width="1.5"/>"##,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        );
    }
    for m in 0..n {
        let (cx, cy) = pos(m);
        let _ = writeln!(
            out,
            r##"  <circle class="pocket" data-index="{m}" cx="{}" cy="{}" r="5" fill="#000000"/>"##,
            num(cx),
            num(cy)
        );
    }
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="12">{}</text>"#,
        num(width / 2.0),
        num(height - 8.0),
        escape(&tuple.to_string())
    );
    out.push_str("</svg>\n");
    out
}

fn pocket_dot(tuple: &CatalanTuple) -> String {
    let tree = pocket_tree(tuple);
    let mut out = String::new();
    let _ = writeln!(out, "// catalan render v{RENDER_VERSION}");
    let _ = writeln!(out, "digraph pocket_tree {{");
    let _ = writeln!(out, "  label=\"{tuple}\";");
    let _ = writeln!(out, "  ordering=out;");
    let _ = writeln!(out, "  node [shape=point, width=0.12];");
    for m in 0..tree.pocket_count() {
        let _ = writeln!(out, "  P{m};");
    }
    for m in 1..tree.pocket_count() {
        let _ = writeln!(
            out,
            "  P{} -> P{m} [dir=none];",
            tree.parent(m).expect("non-root")
        );
    }
    out.push_str("}\n");
    out
}

fn thread_tree_doc(tuple: &CatalanTuple, kind: ThreadKind, format: Format) -> String {
    let tree = ThreadTree::new(kind, tuple);
    match format {
        Format::Svg => thread_svg(tuple, &tree),
        Format::Dot => thread_dot(tuple, &tree),
    }
}

fn thread_svg(tuple: &CatalanTuple, tree: &ThreadTree) -> String {
    let widest = tree.threads.iter().map(|&(a, b)| b - a).max().unwrap_or(0);
    let width = 2.0 * MARGIN + STEP * (tree.nodes - 1) as f64;
    let base = MARGIN + 0.6 * STEP * widest as f64 / 2.0 + 10.0;
    let height = base + MARGIN + 10.0;
    let mut out = String::new();
    svg_header(&mut out, width, height);
    for &(a, b) in &tree.threads {
        let (x1, x2) = (MARGIN + STEP * a as f64, MARGIN + STEP * b as f64);
        let rx = (x2 - x1) / 2.0;
        let _ = writeln!(
            out,
            r##"  <path class="thread" data-ends="{a} {b}" d="M {} {} A {} {} 0 0 1 {} {}" fill="none" stroke="#000000" stroke-width="1.5"/>"##,
            num(x1),
            num(base),
            num(rx),
            num(0.6 * rx),
            num(x2),
            num(base)
        );
    }
    for i in 0..tree.nodes {
        let _ = writeln!(
            out,
            r##"  <circle class="node" data-index="{i}" cx="{}" cy="{}" r="4" fill="#000000"/>"##,
            num(MARGIN + STEP * i as f64),
            num(base)
        );
    }
    let kind = match tree.kind {
        ThreadKind::Direct => "direct",
        ThreadKind::Opposite => "opposite",
    };
    let _ = writeln!(
        out,
        r#"  <text x="{}" y="{}" text-anchor="middle" font-family="sans-serif" font-size="12">{} {kind}</text>"#,
        num(width / 2.0),
        num(height - 8.0),
        escape(&tuple.to_string())
    );
    out.push_str("</svg>\n");
    out
}

fn thread_dot(tuple: &CatalanTuple, tree: &ThreadTree) -> String {
    let kind = match tree.kind {
        ThreadKind::Direct => "direct",
        ThreadKind::Opposite => "opposite",
    };
    let mut out = String::new();
    let _ = writeln!(out, "// catalan render v{RENDER_VERSION}");
    let _ = writeln!(out, "digraph {kind}_tree {{");
    let _ = writeln!(out, "  label=\"{tuple} {kind}\";");
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=point, width=0.12];");
    let nodes: Vec<String> = (0..tree.nodes).map(|i| format!("n{i}")).collect();
    let _ = writeln!(out, "  {{ rank=same; {}; }}", nodes.join("; "));
    for &(a, b) in &tree.threads {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
