//! Layered SVG figures. Every figure has the same groups in the same order,
//! empty when the command has nothing to draw in them.

use std::f64::consts::PI;
use std::fmt::Write;

use capgeo_core::piece::{loop_bbox, Piece};
use capgeo_core::{Domain, Point, Region};

/// What to draw on top of the domain boundary.
#[derive(Clone, Debug, Default)]
pub struct Figure {
    pub erosion: Option<Region>,
    pub cheeger_set: Option<Region>,
    pub witness: Option<Domain>,
    /// Center and radius of a rolling disk.
    pub disk: Option<(Point, f64)>,
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        "0".into()
    } else {
        s
    }
}

/// Path data with y flipped so the figure reads like the plane.
pub fn path_data(d: &Domain) -> String {
    let pieces = d.pieces();
    let mut out = String::new();
    let start = d.start;
    write!(out, "M{} {}", num(start.x), num(-start.y)).unwrap();
    for p in &pieces {
        match *p {
            Piece::Line { b, .. } => {
                write!(out, " L{} {}", num(b.x), num(-b.y)).unwrap();
            }
            Piece::Arc { radius, sweep, .. } => {
                // one elliptical-arc command cannot draw more than half a turn reliably
                let parts = if sweep.abs() > PI - 1e-9 { 2 } else { 1 };
                for k in 0..parts {
                    let sub = p.sub(k as f64 / parts as f64, (k + 1) as f64 / parts as f64);
                    let b = sub.end();
                    let flag = if sweep > 0.0 { 0 } else { 1 };
                    let r = num(radius);
                    write!(out, " A{r} {r} 0 0 {flag} {} {}", num(b.x), num(-b.y)).unwrap();
                }
            }
        }
    }
    out.push_str(" Z");
    out
}

fn region_paths(out: &mut String, r: &Region) {
    for c in &r.components {
        writeln!(out, "    <path d=\"{}\"/>", path_data(c)).unwrap();
    }
}

fn group(out: &mut String, id: &str, style: &str, body: impl FnOnce(&mut String)) {
    writeln!(out, "  <g id=\"{id}\" {style}>").unwrap();
    body(out);
    out.push_str("  </g>\n");
}

pub fn render(boundary: &Domain, fig: &Figure) -> String {
    let bb = loop_bbox(&boundary.pieces());
    let pad = 0.05 * bb.width().max(bb.height());
    let (x0, y0) = (bb.min.x - pad, -bb.max.y - pad);
    let (w, h) = (bb.width() + 2.0 * pad, bb.height() + 2.0 * pad);
    let stroke = num(0.004 * w.max(h));
    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\" width=\"800\" height=\"{}\">",
        num(x0),
        num(y0),
        num(w),
        num(h),
        (800.0 * h / w).round() as i64
    )
    .unwrap();
    group(&mut out, "boundary", &format!("fill=\"#e8eef7\" stroke=\"#1f3b73\" stroke-width=\"{stroke}\""), |o| {
        writeln!(o, "    <path d=\"{}\"/>", path_data(boundary)).unwrap();
    });
    group(&mut out, "erosion", &format!("fill=\"#b9d3ee\" stroke=\"#3a6ea5\" stroke-width=\"{stroke}\""), |o| {
        if let Some(r) = &fig.erosion {
            region_paths(o, r);
        }
    });
    group(&mut out, "cheeger-set", &format!("fill=\"none\" stroke=\"#c0392b\" stroke-width=\"{stroke}\""), |o| {
        if let Some(r) = &fig.cheeger_set {
            region_paths(o, r);
        }
    });
    group(&mut out, "witness", &format!("fill=\"#f5b041\" fill-opacity=\"0.5\" stroke=\"#b9770e\" stroke-width=\"{stroke}\""), |o| {
        if let Some(d) = &fig.witness {
            writeln!(o, "    <path d=\"{}\"/>", path_data(d)).unwrap();
        }
    });
    group(&mut out, "rolling-disk", &format!("fill=\"none\" stroke=\"#27ae60\" stroke-width=\"{stroke}\" stroke-dasharray=\"{} {}\"", num(0.02 * w), num(0.01 * w)), |o| {
        if let Some((c, r)) = fig.disk {
            writeln!(o, "    <circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", num(c.x), num(-c.y), num(r)).unwrap();
        }
    });
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use capgeo_core::gallery::{make_disk, make_square};

    #[test]
    fn groups_are_fixed() {
        let s = render(&make_square(1.0).unwrap(), &Figure::default());
        let ids: Vec<&str> = s.match_indices("<g id=\"").map(|(i, _)| &s[i + 7..i + 7 + s[i + 7..].find('"').unwrap()]).collect();
        assert_eq!(ids, ["boundary", "erosion", "cheeger-set", "witness", "rolling-disk"]);
    }

    #[test]
    fn half_circles_split_and_flip() {
        let d = path_data(&make_disk(1.0).unwrap());
        assert!(d.starts_with("M1.000000 0 A1.000000 1.000000 0 0 0 "), "{d}");
        assert_eq!(d.matches(" A").count(), 4);
        assert!(d.ends_with(" Z"));
    }
}
