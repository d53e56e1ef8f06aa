mod common;

use std::f64::consts::PI;

use capgeo_core::cheeger::{cheeger_constant, classify};
use capgeo_core::convex::{is_convex, support_function, curvature_profile};
use capgeo_core::gallery::{equal_balls, two_balls, TwoBallParams};
use capgeo_core::geometry::{area, isoperimetric_bound, perimeter, quotient, signed_distance};
use capgeo_core::morphology::{erode, inradius};
use capgeo_core::raster::Raster;
use capgeo_core::reach::rolling_ball;
use capgeo_core::verdict::{decide, decide_with, DecideOptions, Status};
use capgeo_core::{Point, Tolerance};
use common::*;
use proptest::prelude::*;

fn tol() -> Tolerance {
    Tolerance::default()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 24,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn erosion_is_monotone((s, f1) in shape_and_fraction(), f2 in 0.02..0.95f64) {
        erosion_monotone(&s, f1, f2, &tol())?;
    }

    #[test]
    fn opening_is_anti_extensive_and_idempotent((s, f) in shape_and_fraction()) {
        opening_anti_extensive_idempotent(&s, f, &tol())?;
    }

    #[test]
    fn erosion_agrees_with_raster((s, f) in shape_and_fraction()) {
        erosion_matches_raster(&s, f, 384, &tol())?;
    }

    #[test]
    fn strict_implies_weak_implies_no_neck((s, f) in shape_and_fraction()) {
        rolling_implications(&s, f, &tol())?;
    }

    #[test]
    fn cheeger_radius_scales(s in shapes(), lambda in 0.25..4.0f64) {
        cheeger_scaling(&s, lambda, &tol())?;
    }

    #[test]
    fn witnesses_survive_reevaluation(p in two_ball_params()) {
        if let Ok(d) = two_balls(&p) {
            witness_sound(&d, &tol())?;
        }
    }

    #[test]
    fn quotient_is_monotone_in_gamma((s, f) in shape_and_fraction(), mut gs in gammas()) {
        gamma_monotone(&s, f, &mut gs, &tol())?;
    }

    #[test]
    fn cheeger_constant_below_quotient(s in placed_shapes()) {
        let (h, _) = cheeger_constant(&s.domain, &tol()).unwrap();
        prop_assert!(h <= quotient(&s.domain) + 1e-9, "{}: h {h}", s.tag);
        prop_assert!(h >= isoperimetric_bound(area(&s.domain)) - 1e-9);
    }

    #[test]
    fn isoperimetric_inequality(s in placed_shapes()) {
        prop_assert!(quotient(&s.domain) >= isoperimetric_bound(area(&s.domain)) * (1.0 - 1e-12));
    }

    #[test]
    fn rigid_motions_preserve_measures(s in shapes(), angle in -PI..PI, x in -5.0..5.0f64, y in -5.0..5.0f64) {
        let moved = s.domain.transformed(1.0, angle, Point::new(x, y));
        let close = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(1.0) * 10.0;
        prop_assert!(close(area(&s.domain), area(&moved)));
        prop_assert!(close(perimeter(&s.domain), perimeter(&moved)));
        prop_assert!(close(quotient(&s.domain), quotient(&moved)));
    }

    #[test]
    fn signed_distance_is_lipschitz(s in placed_shapes(), t in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 2)) {
        let c = s.domain.vertices().next().unwrap();
        let a = c + Point::new(t[0].0, t[0].1) * 2.0;
        let b = c + Point::new(t[1].0, t[1].1) * 2.0;
        let mut prev = (a, signed_distance(&s.domain, a));
        for k in 1..=64 {
            let p = a.lerp(b, k as f64 / 64.0);
            let v = signed_distance(&s.domain, p);
            prop_assert!((v - prev.1).abs() <= p.dist(prev.0) * (1.0 + 1e-9) + 1e-12);
            prev = (p, v);
        }
    }

    #[test]
    fn shoelace_matches_pixel_count(s in placed_shapes()) {
        let r = Raster::of_domain(&s.domain, 256, 0.01);
        let exact = area(&s.domain);
        let bound = 2.0 / (r.count() as f64).sqrt();
        prop_assert!((exact - r.area()).abs() / exact <= bound, "{}", s.tag);
    }

    #[test]
    fn convex_semigroup(s in convex_shapes(), fa in 0.05..0.45f64, fb in 0.05..0.45f64) {
        let tol = tol();
        let rin = inradius(&s.domain, &tol).unwrap();
        let (a, b) = (fa * rin, fb * rin);
        let step = erode(&s.domain, a, &tol).unwrap();
        prop_assert_eq!(step.len(), 1);
        let twice = erode(&step.components[0], b, &tol).unwrap().area();
        let once = erode(&s.domain, a + b, &tol).unwrap().area();
        prop_assert!((twice - once).abs() < tol.eps_area, "{}: {twice} vs {once}", s.tag);
    }

    #[test]
    fn convex_criteria_agree(s in convex_shapes()) {
        let tol = tol();
        let direct = decide(&s.domain, 0.0, &tol).unwrap();
        let skip = decide_with(&s.domain, 0.0, &tol, DecideOptions { skip_convex: true }).unwrap();
        prop_assert_eq!(direct.status, skip.status, "{}", s.tag);
        let c = classify(&s.domain, &tol).unwrap();
        let giusti = direct.status == Status::Exists;
        prop_assert_eq!(giusti, c.self_cheeger, "{}", s.tag);
    }

    #[test]
    fn convex_cheeger_sets_are_convex(s in convex_shapes()) {
        let tol = tol();
        let c = classify(&s.domain, &tol).unwrap();
        prop_assert_eq!(c.cheeger_set.len(), 1);
        let set = &c.cheeger_set.components[0];
        prop_assert!(is_convex(set, &tol).unwrap());
        prop_assert!(region_within(&c.cheeger_set, &s.domain, &tol));
        let sf = support_function(set, 256, &tol).unwrap();
        prop_assert!(curvature_profile(&sf, &tol).rho.iter().all(|&r| r >= -tol.eps_geom));
    }

    #[test]
    fn smooth_convex_rolls_below_curvature_radius(r in 0.3..1.5f64, l in 0.1..3.0f64, f in 0.1..0.99f64) {
        let tol = tol();
        let d = capgeo_core::gallery::make_stadium(r, l).unwrap();
        prop_assert!(rolling_ball(&d, f * r, &tol).unwrap());
    }

    #[test]
    fn equal_balls_never_refuted(d in 1.7..1.95f64) {
        let p = TwoBallParams { distance: d, ..equal_balls() };
        let v = decide(&two_balls(&p).unwrap(), 0.0, &tol()).unwrap();
        prop_assert_ne!(v.status, Status::Nonexistence, "{:?}", v);
    }
}
