//! Exact constructors for the reference families of cross-sections.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::domain::{Domain, Orientation, Segment};
use crate::error::{Error, Result};
use crate::math::{cos, sin, sqrt, Point, TAU};
use crate::root::bisect;
use crate::tolerance::Tolerance;

fn positive(x: f64) -> bool {
    x.is_finite() && x > 0.0
}

fn ccw(end: Point, center: Point) -> Segment {
    Segment::Arc {
        end,
        center,
        orientation: Orientation::Ccw,
    }
}

fn cw(end: Point, center: Point) -> Segment {
    Segment::Arc {
        end,
        center,
        orientation: Orientation::Cw,
    }
}

fn line(end: Point) -> Segment {
    Segment::Line { end }
}

/// Disk of radius `r` centered at the origin, as two half circles.
pub fn make_disk(r: f64) -> Result<Domain> {
    if !positive(r) {
        return Err(Error::InvalidParameters("disk radius must be positive"));
    }
    Ok(Domain::new(
        Point::new(r, 0.0),
        vec![
            ccw(Point::new(-r, 0.0), Point::ORIGIN),
            ccw(Point::new(r, 0.0), Point::ORIGIN),
        ],
    ))
}

/// The square `[0, a]²`.
pub fn make_square(a: f64) -> Result<Domain> {
    if !positive(a) {
        return Err(Error::InvalidParameters("square side must be positive"));
    }
    Ok(Domain::new(
        Point::ORIGIN,
        vec![
            line(Point::new(a, 0.0)),
            line(Point::new(a, a)),
            line(Point::new(0.0, a)),
            line(Point::ORIGIN),
        ],
    ))
}

/// Rectangle `2r × l` capped by half disks of radius `r`, centered at the
/// origin with the straight sides horizontal. `l = 0` gives the disk.
pub fn make_stadium(r: f64, l: f64) -> Result<Domain> {
    if !positive(r) || !(l.is_finite() && l >= 0.0) {
        return Err(Error::InvalidParameters(
            "stadium needs positive radius and nonnegative length",
        ));
    }
    if l == 0.0 {
        return make_disk(r);
    }
    let h = 0.5 * l;
    Ok(Domain::new(
        Point::new(-h, -r),
        vec![
            line(Point::new(h, -r)),
            ccw(Point::new(h, r), Point::new(h, 0.0)),
            line(Point::new(-h, r)),
            ccw(Point::new(-h, -r), Point::new(-h, 0.0)),
        ],
    ))
}

/// Polygon inscribed in the ellipse with semi-axes `a` (along x) and `b`,
/// with `n` vertices at uniformly spaced outer-normal angles.
///
/// Vertex `k` is the ellipse point whose normal has angle `2πk/n`, so the
/// polygon's support function agrees with the ellipse's at those angles.
pub fn make_ellipse(a: f64, b: f64, n: usize) -> Result<Domain> {
    if !positive(a) || !positive(b) {
        return Err(Error::InvalidParameters("ellipse semi-axes must be positive"));
    }
    if n < 64 {
        return Err(Error::InvalidParameters("ellipse needs at least 64 vertices"));
    }
    let vertex = |k: usize| {
        let th = TAU * k as f64 / n as f64;
        let (c, s) = (cos(th), sin(th));
        let p = sqrt(a * a * c * c + b * b * s * s);
        Point::new(a * a * c / p, b * b * s / p)
    };
    let segments = (1..=n).map(|k| line(vertex(k % n))).collect();
    Ok(Domain::new(vertex(0), segments))
}

/// Two overlapping disks with the reentrant corners rounded by fillet arcs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoBallParams {
    /// Radius of the disk centered at the origin.
    pub big_radius: f64,
    /// Radius of the disk centered at `(distance, 0)`.
    pub small_radius: f64,
    pub distance: f64,
    pub fillet: f64,
}

impl TwoBallParams {
    /// Fillet of `0.05 * small_radius`.
    pub fn new(big_radius: f64, small_radius: f64, distance: f64) -> Self {
        TwoBallParams {
            big_radius,
            small_radius,
            distance,
            fillet: 0.05 * small_radius,
        }
    }

    /// Half-angle, seen from each center, of the arc cut off by the other disk.
    pub fn junction_angles(&self) -> (f64, f64) {
        let (big, small, d) = (self.big_radius, self.small_radius, self.distance);
        let cr = (big * big + d * d - small * small) / (2.0 * big * d);
        let cs = (small * small + d * d - big * big) / (2.0 * small * d);
        (
            crate::math::acos(cr),
            PI - crate::math::acos(cs),
        )
    }

    /// The large-separation limit `2(R + r)/(R² + r²)` of the quotient.
    pub fn limit_quotient(&self) -> f64 {
        let (big, small) = (self.big_radius, self.small_radius);
        2.0 * (big + small) / (big * big + small * small)
    }
}

impl Default for TwoBallParams {
    fn default() -> Self {
        TwoBallParams {
            big_radius: 1.0,
            small_radius: 0.6,
            distance: 1.55,
            fillet: 0.05,
        }
    }
}

pub fn two_balls(p: &TwoBallParams) -> Result<Domain> {
    let (big, small, d, f) = (p.big_radius, p.small_radius, p.distance, p.fillet);
    if !positive(big) || !positive(small) || !positive(d) || !positive(f) {
        return Err(Error::InvalidParameters("two-ball parameters must be positive"));
    }
    if small > big {
        return Err(Error::InvalidParameters("small radius exceeds big radius"));
    }
    if !(d > big - small && d < big + small) {
        return Err(Error::InvalidParameters("disks must overlap properly"));
    }
    let (rf, sf) = (big + f, small + f);
    let x = (rf * rf - sf * sf + d * d) / (2.0 * d);
    let y2 = rf * rf - x * x;
    if y2 <= 0.0 {
        return Err(Error::InvalidParameters("fillet does not fit"));
    }
    let y = sqrt(y2);
    let c = Point::new(d, 0.0);
    let upper = Point::new(x, y);
    let lower = Point::new(x, -y);
    let on_big = |q: Point| q * (big / rf);
    let on_small = |q: Point| c + (q - c) * (small / sf);
    let alpha = on_big(upper).angle();
    let beta = (on_small(upper) - c).angle();
    let exposed = on_big(upper).dist(c) > small && on_small(upper).norm() > big;
    if y <= f || !exposed || !(alpha > 0.0 && alpha < PI) || !(beta > 0.0 && beta < PI) {
        return Err(Error::InvalidParameters("fillet does not fit"));
    }
    Ok(Domain::new(
        on_big(upper),
        vec![
            ccw(on_big(lower), Point::ORIGIN),
            cw(on_small(lower), lower),
            ccw(on_small(upper), c),
            cw(on_big(upper), upper),
        ],
    ))
}

/// Two-ball family with `r = R/2`, centers nearly `R + r` apart, so the big-disk junction
/// half-angle is below 0.15.
pub fn finn_giusti() -> TwoBallParams {
    TwoBallParams {
        big_radius: 1.0,
        small_radius: 0.5,
        distance: 1.495,
        fillet: 0.0025,
    }
}

/// Two equal unit disks with centers 1.9 apart.
pub fn equal_balls() -> TwoBallParams {
    TwoBallParams {
        big_radius: 1.0,
        small_radius: 1.0,
        distance: 1.9,
        fillet: 0.05,
    }
}

/// Unit disk with a nose of half-width `sin θ` and length `length`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PinocchioParams {
    pub theta: f64,
    pub length: f64,
}

impl PinocchioParams {
    pub fn with_length(length: f64) -> Self {
        PinocchioParams {
            theta: pinocchio_angle(),
            length,
        }
    }

    /// Closed-form area `π − θ + sin θ cos θ + π sin²θ / 2 + 2 T sin θ`.
    pub fn area(&self) -> f64 {
        let (s, c) = (sin(self.theta), cos(self.theta));
        PI - self.theta + s * c + 0.5 * PI * s * s + 2.0 * s * self.length
    }

    /// Closed-form perimeter `2(π − θ) + π sin θ + 2T`.
    pub fn perimeter(&self) -> f64 {
        2.0 * (PI - self.theta) + PI * sin(self.theta) + 2.0 * self.length
    }
}

fn pinocchio_balance(theta: f64) -> f64 {
    let (s, c) = (sin(theta), cos(theta));
    TAU * s - 2.0 * theta * s + 0.5 * PI * s * s - PI + theta - s * c
}

/// Angle θ₀ at which the disk with nose is a Cheeger set of itself, i.e.
/// `sin θ = |Ω_θ| / P(Ω_θ)`, bisected on `(0.1, 1.0)` to `eps_root`.
pub fn solve_pinocchio_angle(tol: &Tolerance) -> Result<f64> {
    tol.validate()?;
    bisect(pinocchio_balance, 0.1, 1.0, tol.eps_root, 200)
}

/// θ₀ resolved to the last floating-point bit.
pub fn pinocchio_angle() -> f64 {
    bisect(pinocchio_balance, 0.1, 1.0, 0.0, 200).expect("bracketed by construction")
}

pub fn pinocchio(p: &PinocchioParams) -> Result<Domain> {
    let th = p.theta;
    if !(th.is_finite() && th > 0.0 && th < 0.5 * PI) {
        return Err(Error::InvalidParameters("theta must lie in (0, pi/2)"));
    }
    if !(p.length.is_finite() && p.length >= 0.0) {
        return Err(Error::InvalidParameters("nose length must be nonnegative"));
    }
    let (s, c) = (sin(th), cos(th));
    let t = p.length;
    let mut segments = vec![ccw(Point::new(c, -s), Point::ORIGIN)];
    if t == 0.0 {
        segments.push(ccw(Point::new(c, s), Point::new(c, 0.0)));
    } else {
        segments.push(line(Point::new(c + t, -s)));
        segments.push(ccw(Point::new(c + t, s), Point::new(c + t, 0.0)));
        segments.push(line(Point::new(c, s)));
    }
    Ok(Domain::new(Point::new(c, s), segments))
}

/// Two disks joined by a straight corridor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DumbbellParams {
    pub radius: f64,
    /// Distance between the disk centers.
    pub distance: f64,
    pub half_width: f64,
}

impl Default for DumbbellParams {
    fn default() -> Self {
        DumbbellParams {
            radius: 1.0,
            distance: 4.0,
            half_width: 0.1,
        }
    }
}

pub fn dumbbell(p: &DumbbellParams) -> Result<Domain> {
    let (r, d, w) = (p.radius, p.distance, p.half_width);
    if !positive(r) || !positive(w) || !(d.is_finite() && d > 2.0 * r) || w >= r {
        return Err(Error::InvalidParameters(
            "dumbbell needs disjoint disks and 0 < half_width < radius",
        ));
    }
    let h = 0.5 * d;
    let x = sqrt(r * r - w * w);
    let (xl, xr) = (-h + x, h - x);
    Ok(Domain::new(
        Point::new(xl, -w),
        vec![
            line(Point::new(xr, -w)),
            ccw(Point::new(xr, w), Point::new(h, 0.0)),
            line(Point::new(xl, w)),
            ccw(Point::new(xl, -w), Point::new(-h, 0.0)),
        ],
    ))
}

/// A named family with a one-line description of its default parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub defaults: &'static str,
}

pub const FAMILIES: &[Family] = &[
    Family { name: "disk", defaults: "R=1" },
    Family { name: "square", defaults: "a=1" },
    Family { name: "stadium", defaults: "R=1 L=2" },
    Family { name: "ellipse", defaults: "a=2 b=1 n=4096" },
    Family { name: "two_balls", defaults: "R=1 r=0.6 d=1.55 fillet=0.05" },
    Family { name: "finn_giusti", defaults: "R=1 r=0.5 d=1.495 fillet=0.0025" },
    Family { name: "equal_balls", defaults: "R=1 r=1 d=1.9 fillet=0.05" },
    Family { name: "pinocchio", defaults: "theta=theta0 T=1" },
    Family { name: "dumbbell", defaults: "R=1 d=4 w=0.1" },
];

/// Every family at its default parameters.
pub fn defaults() -> Vec<(&'static str, Domain)> {
    let build = |name: &'static str| -> Domain {
        match name {
            "disk" => make_disk(1.0),
            "square" => make_square(1.0),
            "stadium" => make_stadium(1.0, 2.0),
            "ellipse" => make_ellipse(2.0, 1.0, 4096),
            "two_balls" => two_balls(&TwoBallParams::default()),
            "finn_giusti" => two_balls(&finn_giusti()),
            "equal_balls" => two_balls(&equal_balls()),
            "pinocchio" => pinocchio(&PinocchioParams::with_length(1.0)),
            _ => dumbbell(&DumbbellParams::default()),
        }
        .expect("default parameters are valid")
    };
    FAMILIES.iter().map(|f| (f.name, build(f.name))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{area, perimeter, quotient, validate};

    #[test]
    fn defaults_validate() {
        let tol = Tolerance::default();
        for (name, d) in defaults() {
            assert_eq!(validate(&d, &tol), Ok(()), "{name}");
        }
    }

    #[test]
    fn stadium_measures() {
        let d = make_stadium(1.0, 2.0).unwrap();
        assert!((area(&d) - (PI + 4.0)).abs() < 1e-13);
        assert!((perimeter(&d) - (TAU + 4.0)).abs() < 1e-13);
    }

    #[test]
    fn pinocchio_closed_forms() {
        for t in [0.0, 0.25, 1.0] {
            let p = PinocchioParams::with_length(t);
            let d = pinocchio(&p).unwrap();
            assert!((area(&d) - p.area()).abs() < 1e-13);
            assert!((perimeter(&d) - p.perimeter()).abs() < 1e-13);
            assert!((quotient(&d) - 1.0 / sin(p.theta)).abs() < 1e-12);
        }
    }

    #[test]
    fn pinocchio_angle_values() {
        let th = solve_pinocchio_angle(&Tolerance::default()).unwrap();
        assert!((th - 0.531).abs() < 1e-3);
        assert!((sin(th) - 0.5063).abs() < 1e-3);
        assert!((cos(th) - 0.8623).abs() < 1e-3);
        assert!((pinocchio_angle() - th).abs() < 1e-9);
    }

    #[test]
    fn two_ball_rejects_oversized_fillet() {
        let p = TwoBallParams {
            big_radius: 1.0,
            small_radius: 0.5,
            distance: 0.501,
            fillet: 0.1,
        };
        assert!(two_balls(&p).is_err());
    }

    #[test]
    fn ellipse_area_converges() {
        let d = make_ellipse(2.0, 1.0, 4096).unwrap();
        assert!((area(&d) - TAU).abs() / TAU < 1e-3);
    }
}
