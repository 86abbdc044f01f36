//! Deterministic SVG figures of a point set and, optionally, its certified
//! ordinary line. Output depends only on the input: coordinates are
//! rounded to four decimals and elements are emitted in input order.

use std::fmt::Write as _;

use sylvester_core::geometry::{foot_of_perpendicular, LinePair, Point};
use sylvester_core::sylvester::{Disposition, OrdinaryLineCertificate, PointSet};

// Four decimals, with negative zero folded into zero.
fn num(value: f64) -> String {
    let text = format!("{value:.4}");
    if text.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0.0000".into()
    } else {
        text
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
    scale: f64,
}

impl Frame {
    fn new(points: &[Point]) -> Frame {
        let xs: Vec<f64> = points.iter().map(|p| p.x.to_f64()).collect();
        let ys: Vec<f64> = points.iter().map(|p| p.y.to_f64()).collect();
        let fold = |v: &[f64], pick: fn(f64, f64) -> f64| v.iter().copied().reduce(pick).unwrap_or(0.0);
        let widen = |lo: f64, hi: f64| if hi > lo { (lo, hi) } else { (lo - 0.5, hi + 0.5) };
        let (min_x, max_x) = widen(fold(&xs, f64::min), fold(&xs, f64::max));
        let (min_y, max_y) = widen(fold(&ys, f64::min), fold(&ys, f64::max));
        let (span_x, span_y) = (max_x - min_x, max_y - min_y);
        let (mx, my) = (0.1 * span_x, 0.1 * span_y);
        Frame {
            min_x: min_x - mx,
            max_y: max_y + my,
            width: span_x + 2.0 * mx,
            height: span_y + 2.0 * my,
            scale: span_x.max(span_y),
        }
    }

    // y is flipped so that up in the plane is up in the picture
    fn at(&self, p: &Point) -> (String, String) {
        (num(p.x.to_f64()), num(-p.y.to_f64()))
    }
}

pub fn plot_svg(s: &PointSet, cert: Option<&OrdinaryLineCertificate>) -> String {
    let points = s.points();
    let frame = Frame::new(points);
    let radius = num(0.015 * frame.scale);
    let stroke = num(0.004 * frame.scale);
    let font = num(0.04 * frame.scale);
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(frame.min_x),
        num(-frame.max_y),
        num(frame.width),
        num(frame.height)
    );

    if let Some(line) = cert.and_then(|c| certified_line(points, c)) {
        let (a, b) = (line.a(), line.b());
        let (ax, ay) = (a.x.to_f64(), a.y.to_f64());
        let (dx, dy) = (b.x.to_f64() - ax, b.y.to_f64() - ay);
        let len = (dx * dx + dy * dy).sqrt();
        // long enough to leave the view box on both sides
        let reach = 4.0 * (frame.width + frame.height) / len;
        let _ = writeln!(
            w,
            r#"  <line class="ordinary-line" x1="{}" y1="{}" x2="{}" y2="{}" stroke="crimson" stroke-width="{stroke}"/>"#,
            num(ax - reach * dx),
            num(-(ay - reach * dy)),
            num(ax + reach * dx),
            num(-(ay + reach * dy)),
        );
        for (index, disposition) in cert
            .map(|c| &c.dispositions[..])
            .unwrap_or(&[])
            .iter()
            .enumerate()
        {
            let Disposition::OffLine { sq_gap } = disposition else {
                continue;
            };
            let p = &points[index];
            let foot = foot_of_perpendicular(p, &line);
            let (x1, y1) = frame.at(p);
            let (x2, y2) = frame.at(&foot);
            let _ = writeln!(
                w,
                r#"  <line class="gap" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="gray" stroke-width="{stroke}" stroke-dasharray="{} {}"><title>sq_gap {sq_gap}</title></line>"#,
                num(0.02 * frame.scale),
                num(0.01 * frame.scale),
            );
        }
    }

    for (index, p) in points.iter().enumerate() {
        let (cx, cy) = frame.at(p);
        let _ = writeln!(
            w,
            r#"  <circle cx="{cx}" cy="{cy}" r="{radius}" fill="black"><title>{index}: {p}</title></circle>"#
        );
        let _ = writeln!(
            w,
            r#"  <text x="{}" y="{}" font-size="{font}" font-family="monospace">{index}</text>"#,
            num(p.x.to_f64() + 0.02 * frame.scale),
            num(-p.y.to_f64() - 0.02 * frame.scale),
        );
    }
    out.push_str("</svg>\n");
    out
}

fn certified_line(points: &[Point], c: &OrdinaryLineCertificate) -> Option<LinePair> {
    let a = points.get(c.a_idx)?;
    let b = points.get(c.b_idx)?;
    if c.dispositions.len() != points.len() {
        return None;
    }
    LinePair::new(a.clone(), b.clone()).ok()
}
