//! Random domains and the property checks shared by the integration suites.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use capgeo_core::cheeger::inner_cheeger_radius;
use capgeo_core::gallery::{
    dumbbell, make_disk, make_ellipse, make_square, make_stadium, pinocchio, two_balls,
    DumbbellParams, PinocchioParams, TwoBallParams,
};
use capgeo_core::geometry::{area, quotient, signed_distance};
use capgeo_core::morphology::{erode, has_no_neck, inradius, opening};
use capgeo_core::raster::Raster;
use capgeo_core::reach::reach_report;
use capgeo_core::verdict::{decide, necessary_quotient, Status};
use capgeo_core::{Domain, Point, Region, Tolerance};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Check = Result<(), TestCaseError>;

/// Unscaled family member named by a tag, for failure messages.
#[derive(Clone, Debug)]
pub struct Shape {
    pub tag: String,
    pub domain: Domain,
}

fn shape(tag: String, d: capgeo_core::Result<Domain>) -> Option<Shape> {
    d.ok().map(|domain| Shape { tag, domain })
}

pub fn disks() -> impl Strategy<Value = Shape> {
    (0.3..2.0f64).prop_filter_map("disk", |r| shape(format!("disk {r}"), make_disk(r)))
}

pub fn squares() -> impl Strategy<Value = Shape> {
    (0.5..2.0f64).prop_filter_map("square", |a| shape(format!("square {a}"), make_square(a)))
}

pub fn stadiums() -> impl Strategy<Value = Shape> {
    (0.3..1.5f64, 0.1..3.0f64).prop_filter_map("stadium", |(r, l)| {
        shape(format!("stadium {r} {l}"), make_stadium(r, l))
    })
}

pub fn ellipses() -> impl Strategy<Value = Shape> {
    (1.2..2.5f64).prop_filter_map("ellipse", |a| {
        shape(format!("ellipse {a}"), make_ellipse(a, 1.0, 128))
    })
}

/// `R = 1`, center distance at fraction `t` of the overlap range.
pub fn two_ball_params() -> impl Strategy<Value = TwoBallParams> {
    (0.3..1.0f64, 0.35..0.92f64).prop_map(|(r, t)| TwoBallParams::new(1.0, r, 1.0 - r + 2.0 * r * t))
}

pub fn two_ball_shapes() -> impl Strategy<Value = Shape> {
    two_ball_params().prop_filter_map("fillet fits", |p| shape(format!("{p:?}"), two_balls(&p)))
}

pub fn pinocchios() -> impl Strategy<Value = Shape> {
    (0.0..2.0f64).prop_filter_map("pinocchio", |t| {
        shape(format!("pinocchio {t}"), pinocchio(&PinocchioParams::with_length(t)))
    })
}

pub fn dumbbells() -> impl Strategy<Value = Shape> {
    (2.5..5.0f64, 0.05..0.5f64).prop_filter_map("dumbbell", |(distance, half_width)| {
        let p = DumbbellParams {
            radius: 1.0,
            distance,
            half_width,
        };
        shape(format!("{p:?}"), dumbbell(&p))
    })
}

pub fn convex_shapes() -> impl Strategy<Value = Shape> {
    prop_oneof![disks(), squares(), stadiums()]
}

pub fn shapes() -> impl Strategy<Value = Shape> {
    prop_oneof![
        disks(),
        squares(),
        stadiums(),
        ellipses(),
        two_ball_shapes(),
        pinocchios(),
        dumbbells(),
    ]
}

/// A shape moved by a random similarity.
pub fn placed_shapes() -> impl Strategy<Value = Shape> {
    (shapes(), 0.5..2.0f64, -PI..PI, -3.0..3.0f64, -3.0..3.0f64).prop_map(
        |(s, scale, angle, x, y)| Shape {
            tag: format!("{} @ {scale} {angle} ({x}, {y})", s.tag),
            domain: s.domain.transformed(scale, angle, Point::new(x, y)),
        },
    )
}

/// A shape with a radius given as a fraction of its inradius.
pub fn shape_and_fraction() -> impl Strategy<Value = (Shape, f64)> {
    (placed_shapes(), 0.02..0.95f64)
}

fn inr(d: &Domain, tol: &Tolerance) -> Result<f64, TestCaseError> {
    inradius(d, tol).map_err(|e| TestCaseError::fail(format!("inradius: {e}")))
}

macro_rules! ok {
    ($e:expr) => {
        $e.map_err(|e| TestCaseError::fail(format!("{}: {e}", stringify!($e))))?
    };
}

/// Every boundary point of `reg` is in `d` up to `eps_geom`, and the area
/// does not exceed it.
pub fn region_within(reg: &Region, d: &Domain, tol: &Tolerance) -> bool {
    let inside = reg.components.iter().all(|c| {
        c.pieces().iter().all(|p| {
            (0..16).all(|k| signed_distance(d, p.point_at(k as f64 / 16.0)) <= tol.eps_geom)
        })
    });
    inside && reg.area() <= area(d) + tol.eps_area
}

/// Erosion area is nonincreasing in the radius.
pub fn erosion_monotone(s: &Shape, f1: f64, f2: f64, tol: &Tolerance) -> Check {
    let d = &s.domain;
    let rin = inr(d, tol)?;
    let (a, b) = (f1.min(f2) * rin, f1.max(f2) * rin);
    let ea = ok!(erode(d, a, tol)).area();
    let eb = ok!(erode(d, b, tol)).area();
    prop_assert!(eb <= ea + tol.eps_area, "{}: |E({b})| = {eb} > |E({a})| = {ea}", s.tag);
    Ok(())
}

/// The opening lies inside the domain, and opening it again changes nothing.
pub fn opening_anti_extensive_idempotent(s: &Shape, frac: f64, tol: &Tolerance) -> Check {
    let d = &s.domain;
    let r = frac * inr(d, tol)?;
    let once = ok!(opening(d, r, tol));
    prop_assert!(region_within(&once, d, tol), "{}: opening at {r} leaves the domain", s.tag);
    if once.len() == 1 {
        let twice = ok!(opening(&once.components[0], r, tol));
        let gap = once.area() - twice.area();
        prop_assert!(gap.abs() < tol.eps_area, "{}: reopening at {r} changed area by {gap}", s.tag);
        prop_assert!(region_within(&twice, &once.components[0], tol));
    }
    Ok(())
}

/// Vector and raster erosions agree within the raster's boundary band.
pub fn erosion_matches_raster(s: &Shape, frac: f64, grid: usize, tol: &Tolerance) -> Check {
    let d = &s.domain;
    let r = frac * inr(d, tol)?;
    let vector = ok!(erode(d, r, tol)).area();
    let raster = Raster::of_domain(d, grid, 0.05).erode(r);
    let band = 4.0 * raster.pixel_area() * raster.boundary_pixel_count() as f64;
    let bound = tol.eps_area.max(band).max(2.0 * raster.pixel_area());
    prop_assert!(
        (vector - raster.area()).abs() <= bound,
        "{}: r = {r}, vector {vector}, raster {}, bound {bound}",
        s.tag,
        raster.area()
    );
    Ok(())
}

/// Strict rolling implies weak rolling, and weak rolling implies no neck.
pub fn rolling_implications(s: &Shape, frac: f64, tol: &Tolerance) -> Check {
    let d = &s.domain;
    let r = frac * inr(d, tol)?;
    let rep = ok!(reach_report(d, r, tol));
    prop_assert!(!rep.strict || rep.rolling, "{}: strict without weak at {r}", s.tag);
    if rep.rolling {
        prop_assert!(ok!(has_no_neck(d, r, tol)), "{}: rolls at {r} but has a neck", s.tag);
    }
    Ok(())
}

/// `r*(λΩ) = λ r*(Ω)` and `h(λΩ) = h(Ω)/λ`, relative to `eps_root`.
pub fn cheeger_scaling(s: &Shape, lambda: f64, tol: &Tolerance) -> Check {
    let base = ok!(inner_cheeger_radius(&s.domain, tol));
    let scaled = ok!(inner_cheeger_radius(&s.domain.scaled(lambda), tol));
    let rel = (scaled / (lambda * base) - 1.0).abs();
    prop_assert!(rel <= tol.eps_root, "{}: r* ratio off by {rel}", s.tag);
    let rel_h = ((1.0 / scaled) * lambda / (1.0 / base) - 1.0).abs();
    prop_assert!(rel_h <= tol.eps_root, "{}: h ratio off by {rel_h}", s.tag);
    Ok(())
}

/// A witness re-evaluated from scratch still violates the strict inequality.
/// Returns whether a witness was emitted.
pub fn witness_sound(d: &Domain, tol: &Tolerance) -> Result<bool, TestCaseError> {
    let v = ok!(decide(d, 0.0, tol));
    let Some(w) = v.witness else {
        return Ok(false);
    };
    prop_assert_eq!(v.status, Status::Nonexistence);
    let q = ok!(necessary_quotient(d, &w.subset, 0.0, tol));
    prop_assert!((q - w.quotient_e).abs() <= 1e-9 * q, "{q} vs reported {}", w.quotient_e);
    prop_assert!((w.quotient_omega - quotient(d)).abs() <= 1e-12 * w.quotient_omega);
    prop_assert!(q <= quotient(d) + tol.eps_root, "witness quotient {q} > {}", quotient(d));
    prop_assert!(area(&w.subset) < area(d) - tol.eps_area, "witness is not proper");
    Ok(true)
}

/// Over increasing angles the quotient never rises, while the quotient
/// divided by `cos γ` never falls.
pub fn gamma_monotone(s: &Shape, frac: f64, gammas: &mut [f64], tol: &Tolerance) -> Check {
    let d = &s.domain;
    let r = frac * inr(d, tol)?;
    let e = match ok!(opening(d, r, tol)).components.into_iter().next() {
        Some(e) => e,
        None => return Ok(()),
    };
    gammas.sort_by(f64::total_cmp);
    let mut prev: Option<(f64, f64)> = None;
    for &g in gammas.iter() {
        let q = ok!(necessary_quotient(d, &e, g, tol));
        let scaled = if g < FRAC_PI_2 { q / g.cos() } else { f64::INFINITY };
        if let Some((pq, ps)) = prev {
            prop_assert!(q <= pq + 1e-9 * pq, "{}: quotient rose {pq} -> {q} at {g}", s.tag);
            prop_assert!(scaled >= ps - 1e-9 * ps, "{}: scaled fell {ps} -> {scaled}", s.tag);
        }
        prev = Some((q, scaled));
    }
    Ok(())
}

pub fn gammas() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0..=FRAC_PI_2, 2..6)
}
