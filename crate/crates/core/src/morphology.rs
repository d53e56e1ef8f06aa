//! Inner parallel sets, disk dilations, openings and necks.

use alloc::vec::Vec;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::{ensure_valid, Boundary};
use crate::offset::{offset_loops, Mode};
use crate::piece::{loop_area, loop_bbox, loop_length, Piece};
use crate::root::last_true;
use crate::tolerance::Tolerance;

/// A finite union of domains with pairwise disjoint interiors.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Region {
    pub components: Vec<Domain>,
}

impl Region {
    pub fn empty() -> Self {
        Region::default()
    }

    pub fn single(d: Domain) -> Self {
        Region {
            components: alloc::vec![d],
        }
    }

    pub(crate) fn from_loops(loops: &[Vec<Piece>]) -> Self {
        Region {
            components: loops.iter().map(|l| Domain::from_pieces(l)).collect(),
        }
    }

    pub(crate) fn loops(&self) -> Vec<Vec<Piece>> {
        self.components.iter().map(Domain::pieces).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn area(&self) -> f64 {
        self.components.iter().map(|c| loop_area(&c.pieces())).sum()
    }

    pub fn perimeter(&self) -> f64 {
        self.components.iter().map(|c| loop_length(&c.pieces())).sum()
    }

    /// Winding-number membership in any component.
    pub fn contains(&self, p: crate::math::Point) -> bool {
        self.components
            .iter()
            .any(|c| Boundary::new(c.pieces()).contains(p))
    }
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

fn significant(loops: Vec<Vec<Piece>>, tol: &Tolerance) -> Vec<Vec<Piece>> {
    loops
        .into_iter()
        .filter(|l| loop_area(l) >= tol.eps_area)
        .collect()
}

pub(crate) fn erode_loops(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<Vec<Vec<Piece>>> {
    if r == 0.0 {
        return Ok(alloc::vec![pieces.to_vec()]);
    }
    offset_loops(&[pieces.to_vec()], r, Mode::Erode, tol)
}

pub(crate) fn dilate_loops(loops: &[Vec<Piece>], r: f64, tol: &Tolerance) -> Result<Vec<Vec<Piece>>> {
    if r == 0.0 || loops.is_empty() {
        return Ok(loops.to_vec());
    }
    offset_loops(loops, r, Mode::Dilate, tol)
}

/// Closed inner parallel set `{dist >= r}` evaluated at a radius a quarter
/// `eps_geom` short of `r`, so that boundary-touching parts survive. Tiny
/// components are kept.
pub(crate) fn closed_erosion(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<Vec<Vec<Piece>>> {
    erode_loops(pieces, tol.closed_radius(r), tol)
}

/// Opening at the closed radius; tiny components are kept.
pub(crate) fn open_loops(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<Vec<Vec<Piece>>> {
    let rc = tol.closed_radius(r);
    let core = erode_loops(pieces, rc, tol)?;
    dilate_loops(&core, rc, tol)
}

/// Inner parallel set at distance `r`, split into connected components.
/// Components with area below `eps_area` are dropped.
pub fn erode(d: &Domain, r: f64, tol: &Tolerance) -> Result<Region> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(Region::single(d.clone()));
    }
    let loops = erode_loops(&d.pieces(), r, tol)?;
    Ok(Region::from_loops(&significant(loops, tol)))
}

/// Minkowski sum of a region with the closed disk of radius `r`; overlapping
/// dilations are merged.
pub fn dilate(reg: &Region, r: f64, tol: &Tolerance) -> Result<Region> {
    tol.validate()?;
    check_radius(r)?;
    for c in &reg.components {
        ensure_valid(c, tol)?;
    }
    let loops = dilate_loops(&reg.loops(), r, tol)?;
    Ok(Region::from_loops(&loops))
}

/// Erosion followed by dilation with the same radius.
pub fn opening(d: &Domain, r: f64, tol: &Tolerance) -> Result<Region> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    if r == 0.0 {
        return Ok(Region::single(d.clone()));
    }
    let loops = open_loops(&d.pieces(), r, tol)?;
    Ok(Region::from_loops(&significant(loops, tol)))
}

/// Connectivity of the inner parallel set at one radius.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeckReport {
    /// Components of area at least `eps_area`.
    pub components: usize,
    /// The inner parallel set is (numerically) empty, so connectivity holds vacuously.
    pub vacuous: bool,
    pub no_neck: bool,
}

pub fn neck_report(d: &Domain, r: f64, tol: &Tolerance) -> Result<NeckReport> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    Ok(neck_of(&d.pieces(), r, tol)?)
}

pub(crate) fn neck_of(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<NeckReport> {
    let loops = closed_erosion(pieces, r, tol)?;
    let components = loops
        .iter()
        .filter(|l| loop_area(l) >= tol.eps_area)
        .count();
    Ok(NeckReport {
        components,
        vacuous: components == 0,
        no_neck: components <= 1,
    })
}

/// True iff the inner parallel set at distance `r` is connected (vacuously
/// true when it is empty).
pub fn has_no_neck(d: &Domain, r: f64, tol: &Tolerance) -> Result<bool> {
    Ok(neck_report(d, r, tol)?.no_neck)
}

/// Radius of the largest inscribed disk.
pub fn inradius(d: &Domain, tol: &Tolerance) -> Result<f64> {
    ensure_valid(d, tol)?;
    inradius_of(&d.pieces(), tol)
}

pub(crate) fn inradius_of(pieces: &[Piece], tol: &Tolerance) -> Result<f64> {
    let bb = loop_bbox(pieces);
    let hi = 0.5 * bb.width().min(bb.height()) * (1.0 + 1e-9);
    let mut failure = None;
    let r = last_true(
        |r| match erode_loops(pieces, r, tol) {
            Ok(l) => !l.is_empty(),
            Err(e) => {
                failure = Some(e);
                false
            }
        },
        0.0,
        hi,
        0.25 * tol.eps_root,
        80,
    );
    match failure {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::{Orientation, Segment};
    use crate::math::Point;
    use core::f64::consts::PI;

    fn disk(r: f64) -> Domain {
        Domain::new(
            Point::new(r, 0.0),
            alloc::vec![
                Segment::Arc {
                    end: Point::new(-r, 0.0),
                    center: Point::ORIGIN,
                    orientation: Orientation::Ccw,
                },
                Segment::Arc {
                    end: Point::new(r, 0.0),
                    center: Point::ORIGIN,
                    orientation: Orientation::Ccw,
                },
            ],
        )
    }

    fn unit_square() -> Domain {
        Domain::new(
            Point::new(0.0, 0.0),
            alloc::vec![
                Segment::Line { end: Point::new(1.0, 0.0) },
                Segment::Line { end: Point::new(1.0, 1.0) },
                Segment::Line { end: Point::new(0.0, 1.0) },
                Segment::Line { end: Point::new(0.0, 0.0) },
            ],
        )
    }

    #[test]
    fn disk_erosion() {
        let tol = Tolerance::default();
        let e = erode(&disk(1.0), 0.3, &tol).unwrap();
        assert_eq!(e.len(), 1);
        assert!((e.area() - 0.49 * PI).abs() < 1e-12);
    }

    #[test]
    fn zero_radius_is_identity() {
        let tol = Tolerance::default();
        let e = erode(&unit_square(), 0.0, &tol).unwrap();
        assert_eq!(e.components, alloc::vec![unit_square()]);
    }

    #[test]
    fn negative_radius_rejected() {
        let tol = Tolerance::default();
        assert!(matches!(
            erode(&unit_square(), -0.1, &tol),
            Err(Error::InvalidRadius(_))
        ));
    }

    #[test]
    fn square_opening_fillets_corners() {
        let tol = Tolerance::default();
        let o = opening(&unit_square(), 0.2, &tol).unwrap();
        assert_eq!(o.len(), 1);
        assert!((o.area() - (1.0 - (4.0 - PI) * 0.04)).abs() < 1e-7);
    }

    #[test]
    fn disk_is_open_up_to_its_radius() {
        let tol = Tolerance::default();
        let o = opening(&disk(1.0), 1.0, &tol).unwrap();
        assert!((o.area() - PI).abs() < 1e-8);
    }

    #[test]
    fn inradius_of_square() {
        let tol = Tolerance::default();
        let r = inradius(&unit_square(), &tol).unwrap();
        assert!((r - 0.5).abs() < 1e-9, "{r}");
    }
}
