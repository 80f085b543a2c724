//! Deterministic SVG drawings of fronts.
//!
//! Events sit at uniform x-spacing and strand positions at uniform z-spacing.
//! Each component becomes one `<path>`, traced in its orientation; strands
//! moving between positions are cubic curves with horizontal ends and cusps
//! are drawn as semicubical points.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::front::{EventKind, FrontDiagram, FrontError, SegmentId};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvgOptions {
    pub column_width: f64,
    pub strand_gap: f64,
    pub margin: f64,
    pub stroke_width: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { column_width: 40.0, strand_gap: 24.0, margin: 20.0, stroke_width: 2.0 }
    }
}

const PALETTE: [&str; 6] = ["#1f4e79", "#a33b20", "#2e7d32", "#6a1b9a", "#b8860b", "#00838f"];

struct Layout<'a> {
    o: &'a SvgOptions,
    events: usize,
    top: usize,
}

impl Layout<'_> {
    fn event_x(&self, k: usize) -> f64 {
        self.o.margin + (k as f64 + 1.0) * self.o.column_width
    }

    /// Start and end of the horizontal part of column `k`'s strands.
    fn column_span(&self, k: usize) -> (f64, f64) {
        let half = self.o.column_width / 4.0;
        let left = if k == 0 { self.o.margin } else { self.event_x(k - 1) + half };
        let right = if k == self.events { self.width() - self.o.margin } else { self.event_x(k) - half };
        (left, right)
    }

    fn y(&self, position: usize) -> f64 {
        self.o.margin + (self.top - position) as f64 * self.o.strand_gap
    }

    fn width(&self) -> f64 {
        2.0 * self.o.margin + (self.events as f64 + 1.0) * self.o.column_width
    }

    fn height(&self) -> f64 {
        2.0 * self.o.margin + (self.top.max(1) - 1) as f64 * self.o.strand_gap
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".into() } else { s.into() }
}

fn pt(x: f64, y: f64) -> String {
    format!("{} {}", num(x), num(y))
}

/// Walks one component in orientation order. Physical column `E` is the
/// right-hand piece of column 0.
struct Pen<'a, 'b> {
    lay: &'a Layout<'b>,
    path: String,
}

impl Pen<'_, '_> {
    fn op(&mut self, op: &str, pts: &[(f64, f64)]) {
        let pts: Vec<String> = pts.iter().map(|&(x, y)| pt(x, y)).collect();
        let _ = write!(self.path, "{op} {} ", pts.join(", "));
    }

    /// Horizontal run along a segment entered in physical column `pc`;
    /// returns the physical column it leaves from.
    fn run(&mut self, column: usize, pc: usize, dir: i64, y: f64) -> usize {
        let e = self.lay.events;
        let (m, w) = (self.lay.o.margin, self.lay.width() - self.lay.o.margin);
        if column != 0 {
            let (a, b) = self.lay.column_span(column);
            self.op("L", &[(if dir > 0 { b } else { a }, y)]);
            return column;
        }
        if dir > 0 {
            if pc == e {
                self.op("L", &[(w, y)]);
                self.op("M", &[(m, y)]);
            }
            self.op("L", &[(self.lay.column_span(0).1, y)]);
            0
        } else {
            if pc == 0 {
                self.op("L", &[(m, y)]);
                self.op("M", &[(w, y)]);
            }
            self.op("L", &[(self.lay.column_span(e).0, y)]);
            e
        }
    }

    fn curve(&mut self, from: (f64, f64), to: (f64, f64)) {
        let mid = (from.0 + to.0) / 2.0;
        self.op("C", &[(mid, from.1), (mid, to.1), to]);
    }
}

/// Renders `d`, which must be valid.
pub fn render_svg(d: &FrontDiagram, options: &SvgOptions) -> Result<String, FrontError> {
    let trace = d.trace_components()?;
    let e = d.events.len();
    let top = trace.counts.iter().copied().max().unwrap_or(0).max(1);
    let lay = Layout { o: options, events: e, top };
    let (w, h) = (num(lay.width()), num(lay.height()));
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    );
    let _ = writeln!(out, r##"<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>"##);
    for (c, comp) in trace.components.iter().enumerate() {
        let segs: Vec<SegmentId> = comp
            .segments
            .iter()
            .map(|s| SegmentId { column: if s.column >= e { 0 } else { s.column }, position: s.position })
            .collect();
        let mut pen = Pen { lay: &lay, path: String::new() };
        if e == 0 {
            let y = lay.y(segs[0].position);
            let (a, b) = (options.margin, lay.width() - options.margin);
            let (from, to) = if trace.direction_of(segs[0]) > 0 { (a, b) } else { (b, a) };
            pen.op("M", &[(from, y)]);
            pen.op("L", &[(to, y)]);
        } else {
            let first_dir = trace.direction_of(segs[0]);
            let first_pc = if segs[0].column == 0 && first_dir < 0 { e } else { segs[0].column };
            let (a, b) = lay.column_span(first_pc);
            pen.op("M", &[(if first_dir > 0 { a } else { b }, lay.y(segs[0].position))]);
            let mut pc = first_pc;
            for (i, s) in segs.iter().enumerate() {
                let dir = trace.direction_of(*s);
                let y = lay.y(s.position);
                let end = pen.run(s.column, pc, dir, y);
                let t = segs[(i + 1) % segs.len()];
                let ty = lay.y(t.position);
                let (a, b) = lay.column_span(end);
                let x = if dir > 0 { b } else { a };
                let event = d.events[if dir > 0 { end } else { end - 1 }];
                let wanted = if dir > 0 { EventKind::RightCusp } else { EventKind::LeftCusp };
                if event.kind == wanted && (s.position == event.position || s.position == event.position + 1) {
                    let tip = if dir > 0 { lay.event_x(end) } else { lay.event_x(end - 1) };
                    let ym = (y + ty) / 2.0;
                    pen.op("C", &[((x + tip) / 2.0, y), (tip, ym), (tip, ym)]);
                    pen.op("C", &[(tip, ym), ((x + tip) / 2.0, ty), (x, ty)]);
                    pc = end;
                } else {
                    pc = if dir > 0 { end + 1 } else { end - 1 };
                    let (ta, tb) = lay.column_span(pc);
                    pen.curve((x, y), (if dir > 0 { ta } else { tb }, ty));
                }
            }
            // Close the seam if the walk re-entered column 0 from the other side.
            if pc != first_pc {
                let y = lay.y(segs[0].position);
                let edge = if first_dir > 0 { lay.width() - options.margin } else { options.margin };
                pen.op("L", &[(edge, y)]);
            }
        }
        let _ = writeln!(
            out,
            r#"<path d="{}" fill="none" stroke="{}" stroke-width="{}" data-component="{}" data-label="{}"/>"#,
            pen.path.trim_end(),
            PALETTE[d.label(c) % PALETTE.len()],
            num(options.stroke_width),
            c,
            d.label(c)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
