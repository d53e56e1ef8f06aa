//! Interior rolling-ball tests.
//!
//! The weak condition of radius `r` is r-openness: the opening of the domain
//! by a disk of radius `r` recovers the domain up to `eps_area`. The strict
//! condition additionally forbids any rolling disk from touching the
//! boundary at two antipodal points. Rolling positions are sampled on the
//! boundary of the closed inner parallel set.

use alloc::vec::Vec;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::{ensure_valid, Boundary};
use crate::intersect::piece_distance;
use crate::math::{abs, acos, ceil, sqrt, Point, TAU};
use crate::morphology::{closed_erosion, open_loops};
use crate::piece::{loop_area, loop_length, Piece};
use crate::tolerance::Tolerance;

/// Contacts of one rolling disk with the boundary.
#[derive(Clone, Debug, PartialEq)]
pub struct ContactSet {
    pub center: Point,
    /// Nearest point of each boundary stretch within `r + eps_geom` of the center.
    pub contacts: Vec<Point>,
}

/// Outcome of the rolling-ball tests at one radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReachReport {
    pub radius: f64,
    /// Weak condition: the domain is r-open.
    pub rolling: bool,
    /// Weak condition holds and no sampled disk has antipodal contacts.
    pub strict: bool,
    /// Smallest `|(x - z) + (y - z)|` over sampled centers `z` and contacts
    /// `x, y`; infinite when no center was sampled.
    pub worst_antipodal_defect: f64,
    pub centers_checked: usize,
    /// Strict holds but some contacts are antipodal within `10 eps_geom`.
    pub near_miss: bool,
    /// Every sampled boundary point lies on some rolling disk.
    pub pointwise: bool,
    /// `rolling` and `pointwise` disagree.
    pub disagreement: bool,
}

fn check_radius(r: f64) -> Result<()> {
    if r.is_finite() && r > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidRadius(r))
    }
}

/// Weak interior rolling-ball condition of radius `r`.
pub fn rolling_ball(d: &Domain, r: f64, tol: &Tolerance) -> Result<bool> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    rolling_of(&d.pieces(), r, tol)
}

/// Strict interior rolling-ball condition of radius `r`.
pub fn strict_rolling_ball(d: &Domain, r: f64, tol: &Tolerance) -> Result<bool> {
    Ok(reach_report(d, r, tol)?.strict)
}

pub(crate) fn rolling_of(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<bool> {
    let opened: f64 = open_loops(pieces, r, tol)?.iter().map(|l| loop_area(l)).sum();
    Ok(loop_area(pieces) - opened < tol.eps_area)
}

/// Both rolling-ball tests with their diagnostics.
pub fn reach_report(d: &Domain, r: f64, tol: &Tolerance) -> Result<ReachReport> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    report_of(&d.pieces(), r, tol)
}

pub(crate) fn report_of(pieces: &[Piece], r: f64, tol: &Tolerance) -> Result<ReachReport> {
    let rolling = rolling_of(pieces, r, tol)?;
    let core = closed_erosion(pieces, r, tol)?;
    let boundary = Boundary::new(pieces.to_vec());
    let centers = sample_loops(&core, tol.n_samples);
    let mut worst = f64::INFINITY;
    for &z in &centers {
        let stretches = contact_pieces(&boundary, z, r + tol.eps_geom);
        worst = worst.min(antipodal_defect(&stretches, z));
    }
    let pointwise = pointwise_rolling(pieces, &core, r, tol);
    let strict = rolling && worst >= tol.eps_geom;
    Ok(ReachReport {
        radius: r,
        rolling,
        strict,
        worst_antipodal_defect: worst,
        centers_checked: centers.len(),
        near_miss: strict && worst < 10.0 * tol.eps_geom,
        pointwise,
        disagreement: rolling != pointwise,
    })
}

/// Contact set of the disk of radius `r` centered at `z`.
pub fn contact_set(d: &Domain, z: Point, r: f64, tol: &Tolerance) -> Result<ContactSet> {
    ensure_valid(d, tol)?;
    check_radius(r)?;
    let boundary = Boundary::new(d.pieces());
    let mut contacts: Vec<Point> = Vec::new();
    for p in contact_pieces(&boundary, z, r + tol.eps_geom) {
        let x = p.closest(z).0;
        if contacts.iter().all(|c| c.dist(x) > tol.eps_geom) {
            contacts.push(x);
        }
    }
    Ok(ContactSet {
        center: z,
        contacts,
    })
}

/// Points spaced by about `perimeter / n` along the loops, including every
/// piece start.
pub(crate) fn sample_loops(loops: &[Vec<Piece>], n: usize) -> Vec<Point> {
    let total: f64 = loops.iter().map(|l| loop_length(l)).sum();
    let mut out = Vec::new();
    if total <= 0.0 {
        for l in loops {
            out.extend(l.iter().map(Piece::start));
        }
        return out;
    }
    let step = total / n.max(1) as f64;
    for p in loops.iter().flatten() {
        let m = (ceil(p.length() / step) as usize).max(1);
        for k in 0..m {
            out.push(p.point_at(k as f64 / m as f64));
        }
    }
    out
}

/// Parts of the boundary within distance `rho` of `z`.
fn contact_pieces(boundary: &Boundary, z: Point, rho: f64) -> Vec<Piece> {
    let mut out = Vec::new();
    for k in boundary.near(z, rho) {
        let p = &boundary.pieces[k];
        for (t0, t1) in within_disk(p, z, rho) {
            if t1 - t0 <= 0.0 || (t1 - t0) * p.length() <= 1e-15 {
                let q = p.point_at(0.5 * (t0 + t1));
                out.push(Piece::Line { a: q, b: q });
            } else {
                out.push(p.sub(t0, t1));
            }
        }
    }
    out
}

/// Parameter intervals of `p` lying in the closed disk `B(z, rho)`.
fn within_disk(p: &Piece, z: Point, rho: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    match *p {
        Piece::Line { a, b } => {
            let u = b - a;
            let w = a - z;
            let qa = u.norm_sq();
            let qb = 2.0 * w.dot(u);
            let qc = w.norm_sq() - rho * rho;
            if qa == 0.0 {
                if qc <= 0.0 {
                    out.push((0.0, 1.0));
                }
                return out;
            }
            let disc = qb * qb - 4.0 * qa * qc;
            if disc < 0.0 {
                return out;
            }
            let s = sqrt(disc);
            let (t0, t1) = ((-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa));
            let (t0, t1) = (t0.max(0.0), t1.min(1.0));
            if t0 <= t1 {
                out.push((t0, t1));
            }
        }
        Piece::Arc {
            a,
            center,
            radius,
            sweep,
            ..
        } => {
            let w = z - center;
            let dist = w.norm();
            let half = if dist == 0.0 {
                if radius <= rho {
                    TAU
                } else {
                    return out;
                }
            } else {
                let k = (dist * dist + radius * radius - rho * rho) / (2.0 * radius * dist);
                if k > 1.0 {
                    return out;
                }
                if k <= -1.0 {
                    TAU
                } else {
                    acos(k)
                }
            };
            if half >= TAU * 0.5 {
                out.push((0.0, 1.0));
                return out;
            }
            let start = (a - center).angle();
            let psi = w.angle();
            let span = half / abs(sweep);
            for m in -2..=2 {
                let target = psi + m as f64 * TAU - start;
                let tc = target / sweep;
                let (t0, t1) = ((tc - span).max(0.0), (tc + span).min(1.0));
                if t0 <= t1 {
                    out.push((t0, t1));
                }
            }
            out.sort_by(|x, y| x.0.total_cmp(&y.0));
            out.dedup_by(|next, prev| {
                if next.0 <= prev.1 {
                    prev.1 = prev.1.max(next.1);
                    true
                } else {
                    false
                }
            });
        }
    }
    out
}

/// `min |(x - z) + (y - z)|` over contact points `x, y`.
fn antipodal_defect(stretches: &[Piece], z: Point) -> f64 {
    let mut best = f64::INFINITY;
    for (i, p) in stretches.iter().enumerate() {
        let mirrored = p.reflected(z);
        for q in &stretches[i..] {
            best = best.min(piece_distance(&mirrored, q));
        }
    }
    best
}

/// Every boundary sample lies within `r + eps_geom` of the closed inner
/// parallel set.
fn pointwise_rolling(pieces: &[Piece], core: &[Vec<Piece>], r: f64, tol: &Tolerance) -> bool {
    if core.is_empty() {
        return false;
    }
    let inner = Boundary::from_loops(core);
    sample_loops(&[pieces.to_vec()], tol.n_samples)
        .iter()
        .all(|&x| inner.contains(x) || inner.distance(x) <= r + tol.eps_geom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{make_disk, make_square, pinocchio, PinocchioParams};

    #[test]
    fn disk_rolls_up_to_its_radius() {
        let tol = Tolerance::default();
        let d = make_disk(1.0).unwrap();
        assert!(rolling_ball(&d, 1.0, &tol).unwrap());
        assert!(!rolling_ball(&d, 1.01, &tol).unwrap());
        assert!(strict_rolling_ball(&d, 0.5, &tol).unwrap());
        assert!(!strict_rolling_ball(&d, 1.0, &tol).unwrap());
    }

    #[test]
    fn square_corners_block_rolling() {
        let tol = Tolerance::default();
        let d = make_square(1.0).unwrap();
        let rep = reach_report(&d, 0.1, &tol).unwrap();
        assert!(!rep.rolling && !rep.strict);
        assert!(!rep.disagreement);
    }

    #[test]
    fn pinocchio_is_weak_but_not_strict() {
        let tol = Tolerance::default();
        let p = PinocchioParams::with_length(1.0);
        let d = pinocchio(&p).unwrap();
        let rep = reach_report(&d, p.theta.sin(), &tol).unwrap();
        assert!(rep.rolling, "{rep:?}");
        assert!(!rep.strict, "{rep:?}");
    }

    #[test]
    fn contacts_of_centered_disk() {
        let tol = Tolerance::default();
        let d = make_disk(1.0).unwrap();
        let c = contact_set(&d, Point::new(0.5, 0.0), 0.5, &tol).unwrap();
        assert_eq!(c.contacts.len(), 1);
        assert!(c.contacts[0].dist(Point::new(1.0, 0.0)) < 1e-12);
        let rejected = contact_set(&d, Point::ORIGIN, 0.0, &tol);
        assert!(matches!(rejected, Err(Error::InvalidRadius(_))));
    }
}
