//! Pairwise intersections of lines and arcs.

use alloc::vec::Vec;

use crate::math::{abs, sqrt, BBox, Point};
use crate::piece::Piece;

/// An intersection point with its parameter on each of the two pieces.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hit {
    pub tp: f64,
    pub tq: f64,
    pub point: Point,
}

fn param_ok(t: f64, len: f64, eps: f64) -> Option<f64> {
    let slack = if len > 0.0 { eps / len } else { 0.0 };
    if t >= -slack && t <= 1.0 + slack {
        Some(t.clamp(0.0, 1.0))
    } else {
        None
    }
}

fn push_unique(out: &mut Vec<Hit>, h: Hit, eps: f64) {
    if !out.iter().any(|o| o.point.dist(h.point) <= eps) {
        out.push(h);
    }
}

/// All intersections between `p` and `q`. Parameters within `eps` (in length
/// units) of a piece's ends are accepted and clamped. Collinear or concentric
/// overlaps report the overlap endpoints.
pub fn intersect(p: &Piece, q: &Piece, eps: f64) -> Vec<Hit> {
    match (p, q) {
        (Piece::Line { .. }, Piece::Line { .. }) => line_line(p, q, eps),
        (Piece::Line { .. }, Piece::Arc { .. }) => line_arc(p, q, eps, false),
        (Piece::Arc { .. }, Piece::Line { .. }) => line_arc(q, p, eps, true),
        (Piece::Arc { .. }, Piece::Arc { .. }) => arc_arc(p, q, eps),
    }
}

fn line_line(p: &Piece, q: &Piece, eps: f64) -> Vec<Hit> {
    let mut out = Vec::new();
    let (a, b, c, d) = (p.start(), p.end(), q.start(), q.end());
    let (u, v, w) = (b - a, d - c, c - a);
    let (lu, lv) = (u.norm(), v.norm());
    if lu == 0.0 || lv == 0.0 {
        return out;
    }
    let den = u.cross(v);
    if abs(den) > 1e-13 * lu * lv {
        let t = w.cross(v) / den;
        let s = w.cross(u) / den;
        if let (Some(tp), Some(tq)) = (param_ok(t, lu, eps), param_ok(s, lv, eps)) {
            out.push(Hit {
                tp,
                tq,
                point: a + u * t,
            });
        }
        return out;
    }
    // parallel
    if abs(u.cross(w)) / lu > eps {
        return out;
    }
    let tc = w.dot(u) / (lu * lu);
    let td = (d - a).dot(u) / (lu * lu);
    let lo = tc.min(td).max(0.0);
    let hi = tc.max(td).min(1.0);
    if hi < lo - eps / lu {
        return out;
    }
    for t in [lo, hi.max(lo)] {
        let point = a + u * t;
        let s = ((point - c).dot(v) / (lv * lv)).clamp(0.0, 1.0);
        push_unique(
            &mut out,
            Hit {
                tp: t.clamp(0.0, 1.0),
                tq: s,
                point,
            },
            eps,
        );
    }
    out
}

fn line_arc(line: &Piece, arc: &Piece, eps: f64, swapped: bool) -> Vec<Hit> {
    let mut out = Vec::new();
    let (a, b) = (line.start(), line.end());
    let (cc, r) = arc.circle().expect("arc");
    let u = b - a;
    let lu2 = u.norm_sq();
    if lu2 == 0.0 {
        return out;
    }
    let lu = sqrt(lu2);
    let t0 = (cc - a).dot(u) / lu2;
    let foot = a + u * t0;
    let h2 = r * r - (foot - cc).norm_sq();
    if h2 < 0.0 {
        return out;
    }
    let dt = sqrt(h2) / lu;
    let arc_len = arc.length();
    for t in [t0 - dt, t0 + dt] {
        let Some(tl) = param_ok(t, lu, eps) else {
            continue;
        };
        let point = a + u * t;
        let Some(ta) = arc
            .param_of_angle((point - cc).angle())
            .and_then(|s| param_ok(s, arc_len, eps))
        else {
            continue;
        };
        let hit = if swapped {
            Hit {
                tp: ta,
                tq: tl,
                point,
            }
        } else {
            Hit {
                tp: tl,
                tq: ta,
                point,
            }
        };
        push_unique(&mut out, hit, 1e-15 * (1.0 + r));
    }
    out
}

fn arc_arc(p: &Piece, q: &Piece, eps: f64) -> Vec<Hit> {
    let mut out = Vec::new();
    let (c1, r1) = p.circle().expect("arc");
    let (c2, r2) = q.circle().expect("arc");
    let (lp, lq) = (p.length(), q.length());
    let dv = c2 - c1;
    let dist = dv.norm();
    if dist <= 1e-12 * (1.0 + r1.max(r2)) {
        if abs(r1 - r2) > eps {
            return out;
        }
        // same circle: report overlap endpoints
        for (pt, on_p) in [
            (p.start(), true),
            (p.end(), true),
            (q.start(), false),
            (q.end(), false),
        ] {
            let other = if on_p { q } else { p };
            let other_len = if on_p { lq } else { lp };
            let Some(to) = other
                .param_of_angle((pt - c1).angle())
                .and_then(|s| param_ok(s, other_len, eps))
            else {
                continue;
            };
            let own = if on_p { p } else { q };
            let own_len = if on_p { lp } else { lq };
            let Some(tw) = own
                .param_of_angle((pt - c1).angle())
                .and_then(|s| param_ok(s, own_len, eps))
            else {
                continue;
            };
            let hit = if on_p {
                Hit {
                    tp: tw,
                    tq: to,
                    point: pt,
                }
            } else {
                Hit {
                    tp: to,
                    tq: tw,
                    point: pt,
                }
            };
            push_unique(&mut out, hit, eps);
        }
        return out;
    }
    if dist > r1 + r2 || dist < abs(r1 - r2) {
        return out;
    }
    let x = (dist * dist + r1 * r1 - r2 * r2) / (2.0 * dist);
    let h2 = r1 * r1 - x * x;
    if h2 < 0.0 {
        return out;
    }
    let h = sqrt(h2);
    let e = dv * (1.0 / dist);
    let base = c1 + e * x;
    for sgn in [-1.0, 1.0] {
        let point = base + e.perp() * (sgn * h);
        let tp = p
            .param_of_angle((point - c1).angle())
            .and_then(|s| param_ok(s, lp, eps));
        let tq = q
            .param_of_angle((point - c2).angle())
            .and_then(|s| param_ok(s, lq, eps));
        if let (Some(tp), Some(tq)) = (tp, tq) {
            push_unique(&mut out, Hit { tp, tq, point }, 1e-15 * (1.0 + r1));
        }
    }
    out
}

/// Index pairs `(i, j)`, `i < j`, whose bounding boxes overlap within
/// `margin`, found with a sweep along x.
pub fn candidate_pairs(boxes: &[BBox], margin: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&i, &j| boxes[i].min.x.total_cmp(&boxes[j].min.x));
    let mut out = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        let bi = &boxes[i];
        for &j in &order[k + 1..] {
            let bj = &boxes[j];
            if bj.min.x > bi.max.x + margin {
                break;
            }
            if bi.overlaps(bj, margin) {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out
}

/// Smallest distance between two pieces.
pub fn piece_distance(p: &Piece, q: &Piece) -> f64 {
    if !intersect(p, q, 0.0).is_empty() {
        return 0.0;
    }
    let mut best = f64::INFINITY;
    for (x, other) in [(p.start(), q), (p.end(), q), (q.start(), p), (q.end(), p)] {
        best = best.min(other.distance(x));
    }
    // interior critical points: where the connecting segment is normal to both
    let mut probe = |arc: &Piece, dir: Point, other: &Piece| {
        let (c, r) = arc.circle().expect("arc");
        let dir = dir.normalized();
        for s in [-1.0, 1.0] {
            let x = c + dir * (s * r);
            if let Some(t) = arc.param_of_angle((x - c).angle()) {
                if (0.0..=1.0).contains(&t) {
                    best = best.min(other.distance(x));
                }
            }
        }
    };
    match (p, q) {
        (Piece::Arc { .. }, Piece::Line { a, b }) => probe(p, (*b - *a).perp(), q),
        (Piece::Line { a, b }, Piece::Arc { .. }) => probe(q, (*b - *a).perp(), p),
        (Piece::Arc { center: c1, .. }, Piece::Arc { center: c2, .. }) => {
            let dv = *c2 - *c1;
            if dv.norm() > 0.0 {
                probe(p, dv, q);
                probe(q, dv, p);
            }
        }
        _ => {}
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    #[test]
    fn crossing_lines() {
        let p = Piece::line(Point::new(0.0, 0.0), Point::new(2.0, 2.0));
        let q = Piece::line(Point::new(0.0, 2.0), Point::new(2.0, 0.0));
        let h = intersect(&p, &q, 1e-12);
        assert_eq!(h.len(), 1);
        assert!((h[0].point - Point::new(1.0, 1.0)).norm() < 1e-15);
        assert!((h[0].tp - 0.5).abs() < 1e-15 && (h[0].tq - 0.5).abs() < 1e-15);
    }

    #[test]
    fn collinear_overlap_reports_endpoints() {
        let p = Piece::line(Point::new(0.0, 0.0), Point::new(2.0, 0.0));
        let q = Piece::line(Point::new(3.0, 0.0), Point::new(1.0, 0.0));
        let h = intersect(&p, &q, 1e-12);
        assert_eq!(h.len(), 2);
        assert!((h[0].point.x - 1.0).abs() < 1e-15);
        assert!((h[1].point.x - 2.0).abs() < 1e-15);
    }

    #[test]
    fn line_through_half_circle() {
        let arc = Piece::arc_from_sweep(Point::ORIGIN, Point::new(1.0, 0.0), PI);
        let line = Piece::line(Point::new(-2.0, 0.5), Point::new(2.0, 0.5));
        let h = intersect(&line, &arc, 1e-12);
        assert_eq!(h.len(), 2);
        let h = intersect(&arc, &line, 1e-12);
        assert_eq!(h.len(), 2);
        for hit in h {
            assert!((arc.point_at(hit.tp) - hit.point).norm() < 1e-14);
            assert!((line.point_at(hit.tq) - hit.point).norm() < 1e-14);
        }
        let below = Piece::line(Point::new(-2.0, -0.5), Point::new(2.0, -0.5));
        assert!(intersect(&below, &arc, 1e-12).is_empty());
    }

    #[test]
    fn two_circles() {
        let p = Piece::arc_from_sweep(Point::ORIGIN, Point::new(1.0, 0.0), 2.0 * PI);
        let q = Piece::arc_from_sweep(Point::new(1.0, 0.0), Point::new(2.0, 0.0), 2.0 * PI);
        let h = intersect(&p, &q, 1e-12);
        assert_eq!(h.len(), 2);
        for hit in h {
            assert!((hit.point.x - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn concentric_overlap() {
        let p = Piece::arc_from_sweep(Point::ORIGIN, Point::new(1.0, 0.0), PI);
        let q = Piece::arc_from_sweep(Point::ORIGIN, Point::new(0.0, 1.0), PI);
        let h = intersect(&p, &q, 1e-12);
        assert_eq!(h.len(), 2);
    }

    #[test]
    fn distance_between_facing_arcs() {
        let p = Piece::arc_from_sweep(Point::ORIGIN, Point::new(0.0, -1.0), PI);
        let q = Piece::arc_from_sweep(Point::new(3.0, 0.0), Point::new(3.0, 1.0), PI);
        assert!((piece_distance(&p, &q) - 1.0).abs() < 1e-14);
        let l = Piece::line(Point::new(0.0, 2.0), Point::new(4.0, 2.0));
        let top = Piece::arc_from_sweep(Point::ORIGIN, Point::new(1.0, 0.0), PI);
        assert!((piece_distance(&top, &l) - 1.0).abs() < 1e-14);
    }
}
