//! Inner Cheeger radius, Cheeger constant and the maximal Cheeger set.
//!
//! For a domain without necks the Cheeger set is the opening at the radius
//! `r*` solving `|inner parallel set at r*| = π r*²`, and `h = 1/r*`.

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::ensure_valid;
use crate::math::abs;
use crate::morphology::{erode_loops, neck_of, open_loops, Region};
use crate::piece::{loop_area, loop_bbox, loop_length, Piece};
use crate::reach::report_of;
use crate::root::bisect;
use crate::tolerance::Tolerance;
use core::f64::consts::PI;

/// Cheeger data of one domain.
#[derive(Clone, Debug, PartialEq)]
pub struct CheegerResult {
    pub r_star: f64,
    pub h: f64,
    /// Opening at `r_star`; the maximal Cheeger set when `no_neck_valid`.
    pub cheeger_set: Region,
    /// The inner parallel set at `r_star` is connected.
    pub no_neck_valid: bool,
    /// The domain is its own Cheeger set with `r_star = |Ω|/P(Ω)`.
    pub self_cheeger: bool,
    /// Self-Cheeger and the strict rolling-ball condition holds at `r_phys`.
    pub minimal: bool,
    /// `minimal` or `no_neck_valid`: the classification is certified.
    pub determinate: bool,
    pub r_phys: f64,
}

/// Root of `|erode(d, r)| = π r²`.
pub fn inner_cheeger_radius(d: &Domain, tol: &Tolerance) -> Result<f64> {
    ensure_valid(d, tol)?;
    radius_of(&d.pieces(), tol)
}

pub(crate) fn radius_of(pieces: &[Piece], tol: &Tolerance) -> Result<f64> {
    let bb = loop_bbox(pieces);
    let hi = 0.5 * bb.width().min(bb.height());
    let mut failure = None;
    let r = bisect(
        |r| match erode_loops(pieces, r, tol) {
            Ok(loops) => loops.iter().map(|l| loop_area(l)).sum::<f64>() - PI * r * r,
            Err(e) => {
                failure = Some(e);
                f64::NAN
            }
        },
        0.0,
        hi,
        1e-3 * tol.eps_root,
        80,
    );
    match failure {
        Some(e) => Err(e),
        None => r,
    }
}

/// `h = 1/r*` and whether the no-neck condition validates it.
pub fn cheeger_constant(d: &Domain, tol: &Tolerance) -> Result<(f64, bool)> {
    ensure_valid(d, tol)?;
    let pieces = d.pieces();
    let r = radius_of(&pieces, tol)?;
    Ok((1.0 / r, neck_of(&pieces, r, tol)?.no_neck))
}

/// Opening at the inner Cheeger radius; refused when that radius has a neck.
pub fn maximal_cheeger_set(d: &Domain, tol: &Tolerance) -> Result<Region> {
    ensure_valid(d, tol)?;
    let pieces = d.pieces();
    let r = radius_of(&pieces, tol)?;
    let neck = neck_of(&pieces, r, tol)?;
    if !neck.no_neck {
        return Err(Error::NeckAtCheegerRadius {
            components: neck.components,
        });
    }
    candidate_set(&pieces, r, tol)
}

pub(crate) fn candidate_set(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<Region> {
    let loops = open_loops(pieces, r, tol)?;
    let kept: alloc::vec::Vec<_> = loops
        .into_iter()
        .filter(|l| loop_area(l) >= tol.eps_area)
        .collect();
    Ok(Region::from_loops(&kept))
}

/// Full Cheeger classification.
pub fn classify(d: &Domain, tol: &Tolerance) -> Result<CheegerResult> {
    ensure_valid(d, tol)?;
    let pieces = d.pieces();
    let r_star = radius_of(&pieces, tol)?;
    let no_neck_valid = neck_of(&pieces, r_star, tol)?.no_neck;
    let cheeger_set = candidate_set(&pieces, r_star, tol)?;
    let area = loop_area(&pieces);
    let r_phys = area / loop_length(&pieces);
    let self_cheeger =
        area - cheeger_set.area() < tol.eps_area && abs(r_star - r_phys) < tol.eps_root;
    let minimal = self_cheeger && report_of(&pieces, r_phys, tol)?.strict;
    Ok(CheegerResult {
        r_star,
        h: 1.0 / r_star,
        cheeger_set,
        no_neck_valid,
        self_cheeger,
        minimal,
        determinate: minimal || no_neck_valid,
        r_phys,
    })
}
