//! Deterministic SVG rendering of the bounded-chamber subdivision.
//!
//! Exact coordinates are converted to `f64` for display only; nothing is
//! computed from the floats.  Elements are emitted in id order and floats
//! are printed with a fixed precision, so equal inputs render to identical
//! bytes.

use std::fmt::Write as _;

use dplane_core::chamber::ChamberComplex;
use dplane_core::geometry::Point;
use num_traits::ToPrimitive;

const CANVAS: f64 = 800.0;
const PAD: f64 = 40.0;

fn to_f64(p: &Point) -> (f64, f64) {
    (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0))
}

#[derive(Clone, Copy, Debug)]
struct Frame {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
    scale: f64,
}

impl Frame {
    /// World box covering the given points with a proportional margin,
    /// mapped onto the canvas with the y axis pointing up.
    fn covering(points: &[(f64, f64)]) -> Frame {
        let (mut x0, mut y0) = (f64::MAX, f64::MAX);
        let (mut x1, mut y1) = (f64::MIN, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if points.is_empty() {
            (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
        }
        let span = (x1 - x0).max(y1 - y0).max(1.0);
        let margin = 0.15 * span;
        x0 -= margin;
        y0 -= margin;
        x1 += margin;
        y1 += margin;
        let scale = (CANVAS - 2.0 * PAD) / (x1 - x0).max(y1 - y0);
        Frame {
            x0,
            y0,
            x1,
            y1,
            scale,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            PAD + (x - self.x0) * self.scale,
            PAD + (self.y1 - y) * self.scale,
        )
    }

    fn width(&self) -> f64 {
        2.0 * PAD + (self.x1 - self.x0) * self.scale
    }

    fn height(&self) -> f64 {
        2.0 * PAD + (self.y1 - self.y0) * self.scale
    }
}

/// Clips the line `a x + b y + c = 0` to the frame's world box.
fn clip_line(a: f64, b: f64, c: f64, f: &Frame) -> Option<((f64, f64), (f64, f64))> {
    // Intersect with the four border lines and keep points inside the box.
    let eps = 1e-9 * (1.0 + f.x1.abs().max(f.y1.abs()));
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b.abs() > f64::EPSILON {
        for x in [f.x0, f.x1] {
            let y = -(a * x + c) / b;
            if y >= f.y0 - eps && y <= f.y1 + eps {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > f64::EPSILON {
        for y in [f.y0, f.y1] {
            let x = -(b * y + c) / a;
            if x >= f.x0 - eps && x <= f.x1 + eps {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite coordinates"));
    hits.dedup_by(|p, q| (p.0 - q.0).abs() < eps && (p.1 - q.1).abs() < eps);
    if hits.len() < 2 {
        return None;
    }
    Some((hits[0], *hits.last().unwrap()))
}

fn fmt_pt((x, y): (f64, f64)) -> String {
    format!("{x:.3},{y:.3}")
}

/// Renders the subdivision: arrangement lines clipped to the view box,
/// bounded chambers as filled polygons labeled `id:k-gon`, and vertices as
/// dots.
pub fn render(cc: &ChamberComplex) -> String {
    let world: Vec<(f64, f64)> = cc.vertices().iter().map(|v| to_f64(&v.point)).collect();
    let frame = Frame::covering(&world);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.0} {:.0}\">",
        frame.width(),
        frame.height(),
        frame.width(),
        frame.height()
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{:.0}\" height=\"{:.0}\" fill=\"#ffffff\"/>",
        frame.width(),
        frame.height()
    );

    // Filled bounded chambers under the lines, labels and dots above them.
    for ch in cc.bounded_chambers() {
        // Boundary vertices arrive in cyclic order from the face walk.
        let pts: Vec<String> = ch
            .vertices
            .iter()
            .map(|&v| fmt_pt(frame.map(to_f64(&cc.vertex(v).point))))
            .collect();
        let _ = writeln!(
            out,
            "<polygon points=\"{}\" fill=\"#cfe3f7\" stroke=\"#4d7fb5\" stroke-width=\"1\"/>",
            pts.join(" ")
        );
    }

    for line in cc.arrangement().lines() {
        let (a, b, c) = (
            line.a().to_f64().unwrap_or(0.0),
            line.b().to_f64().unwrap_or(0.0),
            line.c().to_f64().unwrap_or(0.0),
        );
        if let Some((p, q)) = clip_line(a, b, c, &frame) {
            let (x1, y1) = frame.map(p);
            let (x2, y2) = frame.map(q);
            let _ = writeln!(
                out,
                "<line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"#333333\" stroke-width=\"1.5\"/>"
            );
        }
    }

    for ch in cc.bounded_chambers() {
        // Label at the vertex centroid; display-only, so floats are fine.
        let k = ch.vertices.len();
        let (mut cx, mut cy) = (0.0, 0.0);
        for &v in &ch.vertices {
            let (x, y) = to_f64(&cc.vertex(v).point);
            cx += x;
            cy += y;
        }
        let (lx, ly) = frame.map((cx / k as f64, cy / k as f64));
        let _ = writeln!(
            out,
            "<text x=\"{lx:.3}\" y=\"{ly:.3}\" font-size=\"12\" text-anchor=\"middle\" fill=\"#1a3a5c\">{}:{}-gon</text>",
            ch.id, k
        );
    }

    for v in cc.vertices() {
        let (x, y) = frame.map(to_f64(&v.point));
        let _ = writeln!(
            out,
            "<circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"3\" fill=\"#b23a3a\"/>"
        );
    }

    out.push_str("</svg>\n");
    out
}
