//! Line segments and circular arcs: the primitives every boundary is made of.

use core::f64::consts::PI;

use crate::math::{abs, atan2, cos, sin, sqrt, wrap_positive, wrap_signed, BBox, Point, TAU};

/// One oriented boundary primitive with explicit endpoints.
///
/// Arcs carry a signed `sweep` (positive counterclockwise); `|sweep| = 2π`
/// with `a == b` is a full circle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Piece {
    Line {
        a: Point,
        b: Point,
    },
    Arc {
        a: Point,
        b: Point,
        center: Point,
        radius: f64,
        sweep: f64,
    },
}

impl Piece {
    pub fn line(a: Point, b: Point) -> Piece {
        Piece::Line { a, b }
    }

    /// Arc around `center` starting at `a` and turning by `sweep` radians.
    pub fn arc_from_sweep(center: Point, a: Point, sweep: f64) -> Piece {
        let radius = a.dist(center);
        let b = if abs(abs(sweep) - TAU) < 1e-15 {
            a
        } else {
            center + (a - center).rotated(sweep)
        };
        Piece::Arc {
            a,
            b,
            center,
            radius,
            sweep,
        }
    }

    #[inline]
    pub fn start(&self) -> Point {
        match *self {
            Piece::Line { a, .. } | Piece::Arc { a, .. } => a,
        }
    }

    #[inline]
    pub fn end(&self) -> Point {
        match *self {
            Piece::Line { b, .. } | Piece::Arc { b, .. } => b,
        }
    }

    pub fn is_arc(&self) -> bool {
        matches!(self, Piece::Arc { .. })
    }

    pub fn length(&self) -> f64 {
        match *self {
            Piece::Line { a, b } => a.dist(b),
            Piece::Arc { radius, sweep, .. } => radius * abs(sweep),
        }
    }

    fn start_angle(center: Point, a: Point) -> f64 {
        atan2(a.y - center.y, a.x - center.x)
    }

    pub fn point_at(&self, t: f64) -> Point {
        match *self {
            Piece::Line { a, b } => {
                if t == 1.0 {
                    b
                } else {
                    a.lerp(b, t)
                }
            }
            Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            } => {
                if t == 0.0 {
                    a
                } else if t == 1.0 {
                    b
                } else {
                    center + Point::from_angle(Self::start_angle(center, a) + t * sweep) * radius
                }
            }
        }
    }

    pub fn midpoint(&self) -> Point {
        self.point_at(0.5)
    }

    /// Unit tangent in the direction of travel.
    pub fn tangent_at(&self, t: f64) -> Point {
        match *self {
            Piece::Line { a, b } => (b - a).normalized(),
            Piece::Arc {
                a, center, sweep, ..
            } => {
                let phi = Self::start_angle(center, a) + t * sweep;
                let radial = Point::from_angle(phi);
                if sweep >= 0.0 {
                    radial.perp()
                } else {
                    -radial.perp()
                }
            }
        }
    }

    pub fn start_tangent(&self) -> Point {
        self.tangent_at(0.0)
    }

    pub fn end_tangent(&self) -> Point {
        self.tangent_at(1.0)
    }

    /// Parameter of the arc point at polar angle `phi` around the center,
    /// unwrapped around the arc midpoint so that slightly-outside angles give
    /// parameters slightly outside `[0, 1]`. Lines return `None`.
    pub fn param_of_angle(&self, phi: f64) -> Option<f64> {
        match *self {
            Piece::Line { .. } => None,
            Piece::Arc {
                a, center, sweep, ..
            } => {
                let mid = Self::start_angle(center, a) + 0.5 * sweep;
                let delta = wrap_signed(phi - mid);
                Some(0.5 + delta / sweep)
            }
        }
    }

    /// Closest point on the piece to `p`, with its parameter and distance.
    pub fn closest(&self, p: Point) -> (Point, f64, f64) {
        match *self {
            Piece::Line { a, b } => {
                let ab = b - a;
                let len2 = ab.norm_sq();
                let t = if len2 > 0.0 {
                    ((p - a).dot(ab) / len2).clamp(0.0, 1.0)
                } else {
                    0.0
                };
                let q = self.point_at(t);
                (q, t, q.dist(p))
            }
            Piece::Arc {
                a,
                b,
                center,
                radius,
                ..
            } => {
                let v = p - center;
                let r = v.norm();
                if r > 0.0 {
                    let t = self.param_of_angle(v.angle()).unwrap_or(0.0);
                    if (0.0..=1.0).contains(&t) {
                        let q = center + v * (radius / r);
                        return (q, t, abs(r - radius));
                    }
                }
                let (da, db) = (a.dist(p), b.dist(p));
                if da <= db {
                    (a, 0.0, da)
                } else {
                    (b, 1.0, db)
                }
            }
        }
    }

    pub fn distance(&self, p: Point) -> f64 {
        self.closest(p).2
    }

    pub fn bbox(&self) -> BBox {
        let mut bb = BBox::EMPTY;
        bb.include(self.start());
        bb.include(self.end());
        if let Piece::Arc { center, radius, .. } = *self {
            for k in 0..4 {
                let phi = k as f64 * PI / 2.0;
                if let Some(t) = self.param_of_angle(phi) {
                    if (0.0..=1.0).contains(&t) {
                        bb.include(center + Point::from_angle(phi) * radius);
                    }
                }
            }
        }
        bb
    }

    /// Contribution to the signed enclosed area of a closed loop: the chord
    /// shoelace term plus the circular-segment term for arcs.
    pub fn area_term(&self) -> f64 {
        self.area_term_about(Point::ORIGIN)
    }

    /// Same as [`Piece::area_term`] with the shoelace fan rooted at `o`.
    pub fn area_term_about(&self, o: Point) -> f64 {
        let chord = 0.5 * (self.start() - o).cross(self.end() - o);
        match *self {
            Piece::Line { .. } => chord,
            Piece::Arc { radius, sweep, .. } => {
                chord + 0.5 * radius * radius * (sweep - sin(sweep))
            }
        }
    }

    /// Angle subtended at `p` while traversing the piece (winding contribution).
    pub fn winding_angle(&self, p: Point) -> f64 {
        let (a, b) = (self.start() - p, self.end() - p);
        let chord = atan2(a.cross(b), a.dot(b));
        match *self {
            Piece::Line { .. } => chord,
            Piece::Arc {
                center,
                radius,
                sweep,
                ..
            } => {
                let inside_circle = (p - center).norm_sq() < radius * radius;
                if !inside_circle || abs(sweep) < 1e-6 {
                    return chord;
                }
                // seen from inside the circle the direction to the arc turns monotonically
                if abs(sweep) >= TAU - 1e-12 {
                    if sweep > 0.0 {
                        TAU
                    } else {
                        -TAU
                    }
                } else if sweep > 0.0 {
                    wrap_positive(chord)
                } else {
                    -wrap_positive(-chord)
                }
            }
        }
    }

    /// Signed crossings of the horizontal ray `{(x, p.y) : x > p.x}`, upward
    /// positive. Endpoints count half-open (`y > p.y`), so pieces sharing an
    /// endpoint never double count.
    pub fn ray_crossings(&self, p: Point) -> i32 {
        let y = p.y;
        let step = |u: Point, v: Point, x: f64| -> i32 {
            if (u.y > y) == (v.y > y) || x <= p.x {
                0
            } else if v.y > u.y {
                1
            } else {
                -1
            }
        };
        match *self {
            Piece::Line { a, b } => {
                if (a.y > y) == (b.y > y) {
                    return 0;
                }
                let x = a.x + (y - a.y) / (b.y - a.y) * (b.x - a.x);
                step(a, b, x.clamp(a.x.min(b.x), a.x.max(b.x)))
            }
            Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            } => {
                // split at the top and bottom of the circle into y-monotone parts
                let start = Self::start_angle(center, a);
                let mut cuts: [(f64, Point); 6] = [(0.0, a); 6];
                let mut n = 1;
                for k in -4i32..=4 {
                    let phi = PI / 2.0 + k as f64 * PI;
                    let t = (phi - start) / sweep;
                    if t > 0.0 && t < 1.0 && n < 5 {
                        let top = if k.rem_euclid(2) == 0 { radius } else { -radius };
                        cuts[n] = (t, Point::new(center.x, center.y + top));
                        n += 1;
                    }
                }
                cuts[1..n].sort_by(|u, v| u.0.total_cmp(&v.0));
                cuts[n] = (1.0, b);
                let mut total = 0;
                for w in cuts[..=n].windows(2) {
                    let (u, v) = (w[0].1, w[1].1);
                    if (u.y > y) == (v.y > y) {
                        continue;
                    }
                    let mid = start + 0.5 * (w[0].0 + w[1].0) * sweep;
                    let dy = y - center.y;
                    let dx = sqrt((radius * radius - dy * dy).max(0.0));
                    let side = if cos(mid) >= 0.0 { 1.0 } else { -1.0 };
                    let x = center.x + side * dx;
                    total += step(u, v, x);
                }
                total
            }
        }
    }

    /// `max <x, u>` over points of the piece.
    pub fn support(&self, u: Point) -> f64 {
        let mut best = self.start().dot(u).max(self.end().dot(u));
        if let Piece::Arc { center, radius, .. } = *self {
            if let Some(t) = self.param_of_angle(u.angle()) {
                if (0.0..=1.0).contains(&t) {
                    best = best.max(center.dot(u) + radius * u.norm());
                }
            }
        }
        best
    }

    /// Parallel curve at signed distance `delta` along the left normal
    /// (inward for a counterclockwise loop). Arcs whose radius reaches zero
    /// collapse and yield `None`; a negative radius flips to the opposite side
    /// of the center with the same sweep.
    pub fn offset(&self, delta: f64, collapse: f64) -> Option<Piece> {
        match *self {
            Piece::Line { a, b } => {
                let n = (b - a).normalized().perp();
                Some(Piece::Line {
                    a: a + n * delta,
                    b: b + n * delta,
                })
            }
            Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            } => {
                let signed = radius - delta * if sweep > 0.0 { 1.0 } else { -1.0 };
                if abs(signed) <= collapse {
                    return None;
                }
                let k = signed / radius;
                Some(Piece::Arc {
                    a: center + (a - center) * k,
                    b: center + (b - center) * k,
                    center,
                    radius: abs(signed),
                    sweep,
                })
            }
        }
    }

    /// Sub-piece between parameters `t0 < t1`.
    pub fn sub(&self, t0: f64, t1: f64) -> Piece {
        match *self {
            Piece::Line { .. } => Piece::Line {
                a: self.point_at(t0),
                b: self.point_at(t1),
            },
            Piece::Arc {
                center,
                radius,
                sweep,
                ..
            } => Piece::Arc {
                a: self.point_at(t0),
                b: self.point_at(t1),
                center,
                radius,
                sweep: sweep * (t1 - t0),
            },
        }
    }

    pub fn with_endpoints(&self, a: Point, b: Point) -> Piece {
        match *self {
            Piece::Line { .. } => Piece::Line { a, b },
            Piece::Arc {
                center,
                radius,
                sweep,
                ..
            } => Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            },
        }
    }

    /// Point reflection through `z` (rotation by π).
    pub fn reflected(&self, z: Point) -> Piece {
        let r = |p: Point| z * 2.0 - p;
        match *self {
            Piece::Line { a, b } => Piece::Line { a: r(a), b: r(b) },
            Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            } => Piece::Arc {
                a: r(a),
                b: r(b),
                center: r(center),
                radius,
                sweep,
            },
        }
    }

    /// Applies the similarity `p -> scale * rotate(angle, p) + shift`.
    pub fn transformed(&self, scale: f64, angle: f64, shift: Point) -> Piece {
        let f = |p: Point| p.rotated(angle) * scale + shift;
        match *self {
            Piece::Line { a, b } => Piece::Line { a: f(a), b: f(b) },
            Piece::Arc {
                a,
                b,
                center,
                radius,
                sweep,
            } => Piece::Arc {
                a: f(a),
                b: f(b),
                center: f(center),
                radius: radius * scale,
                sweep,
            },
        }
    }

    /// Circle carrying an arc: center, radius.
    pub fn circle(&self) -> Option<(Point, f64)> {
        match *self {
            Piece::Arc { center, radius, .. } => Some((center, radius)),
            Piece::Line { .. } => None,
        }
    }
}

/// Signed area enclosed by a closed loop of pieces.
pub fn loop_area(pieces: &[Piece]) -> f64 {
    let o = pieces.first().map(Piece::start).unwrap_or_default();
    pieces.iter().map(|p| p.area_term_about(o)).sum()
}

pub fn loop_length(pieces: &[Piece]) -> f64 {
    pieces.iter().map(Piece::length).sum()
}

pub fn loop_bbox(pieces: &[Piece]) -> BBox {
    pieces.iter().fold(BBox::EMPTY, |bb, p| bb.union(p.bbox()))
}

/// Winding number of a closed loop around `p`.
pub fn loop_winding(pieces: &[Piece], p: Point) -> i32 {
    let total: f64 = pieces.iter().map(|q| q.winding_angle(p)).sum();
    libm::round(total / TAU) as i32
}
