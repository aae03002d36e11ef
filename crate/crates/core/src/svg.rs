//! SVG 1.1 pictures of a placement.
//!
//! Facilities are drawn as circles (squares under the rectilinear metric),
//! demand points as crosses. World `y` grows upward, so it is negated on
//! output.

use std::fmt::Write;

use crate::geom::{Metric, Point};
use crate::io::AnyInstance;

struct Canvas {
    body: String,
    min: Point,
    max: Point,
}

impl Canvas {
    fn new() -> Self {
        Self {
            body: String::new(),
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn include(&mut self, x: f64, y: f64, pad: f64) {
        self.min.x = self.min.x.min(x - pad);
        self.min.y = self.min.y.min(y - pad);
        self.max.x = self.max.x.max(x + pad);
        self.max.y = self.max.y.max(y + pad);
    }

    fn finish(self, stroke: f64) -> String {
        let (w, h) = (self.max.x - self.min.x, self.max.y - self.min.y);
        let margin = 0.05 * w.max(h).max(1e-9);
        let (x0, y0) = (self.min.x - margin, -self.max.y - margin);
        let (w, h) = (w + 2.0 * margin, h + 2.0 * margin);
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{x0} {y0} {w} {h}\" \
             width=\"800\" height=\"{}\">",
            (800.0 * h / w).round().max(1.0)
        );
        let _ = writeln!(out, "<g fill=\"none\" stroke-width=\"{stroke}\">");
        out.push_str(&self.body);
        out.push_str("</g>\n</svg>\n");
        out
    }
}

/// Renders `inst` with facilities of radius `radius` at `centers`
/// (x-coordinates on a segment, angles on a circle).
pub fn render(inst: &AnyInstance, radius: f64, centers: &[f64]) -> String {
    let mut c = Canvas::new();
    let (metric, facility_points, points, scale): (Metric, Vec<Point>, &[Point], f64) = match inst {
        AnyInstance::Segment(s) => {
            let (p, q) = (s.p(), s.q());
            c.include(p.x, p.y, radius);
            c.include(q.x, q.y, radius);
            let scale = s.length();
            let _ = writeln!(
                c.body,
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
                p.x, -p.y, q.x, -q.y
            );
            let fp = centers.iter().map(|&x| Point::new(x, p.y)).collect();
            (s.metric(), fp, s.points(), scale)
        }
        AnyInstance::Circle(ci) => {
            let o = ci.center();
            c.include(o.x, o.y, ci.r_c() + radius);
            let _ = writeln!(
                c.body,
                "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" stroke=\"black\"/>",
                o.x, -o.y, ci.r_c()
            );
            let fp = centers.iter().map(|&t| ci.position(t)).collect();
            (Metric::Euclidean, fp, ci.points(), 2.0 * ci.r_c())
        }
    };
    let stroke = scale / 400.0;
    for f in &facility_points {
        c.include(f.x, f.y, radius);
        match metric {
            Metric::Euclidean => {
                let _ = writeln!(
                    c.body,
                    "<circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" stroke=\"steelblue\"/>",
                    f.x, -f.y
                );
            }
            Metric::Rectilinear => {
                let _ = writeln!(
                    c.body,
                    "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" stroke=\"steelblue\"/>",
                    f.x - radius,
                    -f.y - radius,
                    2.0 * radius,
                    2.0 * radius
                );
            }
        }
    }
    let arm = scale / 100.0;
    for p in points {
        c.include(p.x, p.y, arm);
        let (x, y) = (p.x, -p.y);
        let _ = writeln!(
            c.body,
            "<path d=\"M{} {} L{} {} M{} {} L{} {}\" stroke=\"crimson\"/>",
            x - arm, y - arm, x + arm, y + arm, x - arm, y + arm, x + arm, y - arm
        );
    }
    c.finish(stroke)
}
