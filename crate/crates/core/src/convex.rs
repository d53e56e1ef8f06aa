//! Support functions and curvature bounds of convex domains.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::{ensure_valid, quotient};
use crate::math::{atan2, cos, sin, Point};
use crate::piece::Piece;
use crate::tolerance::Tolerance;

/// Samples `p(θ_k)` of the support function at `θ_k = 2πk/n`.
#[derive(Clone, Debug, PartialEq)]
pub struct SupportFunction {
    pub n: usize,
    pub values: Vec<f64>,
}

/// Sampled curvature radius `ρ = p + p''` and the curvature supremum.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureProfile {
    pub rho: Vec<f64>,
    /// `f64::INFINITY` when some `ρ_k` is at most `eps_geom`.
    pub kappa_bar: f64,
}

/// All arcs bulge outward and every junction turns left (within `eps_geom`).
pub fn is_convex(d: &Domain, tol: &Tolerance) -> Result<bool> {
    ensure_valid(d, tol)?;
    Ok(convex_pieces(&d.pieces(), tol))
}

fn convex_pieces(pieces: &[Piece], tol: &Tolerance) -> bool {
    let arcs_ok = pieces.iter().all(|p| match *p {
        Piece::Arc { sweep, .. } => sweep > 0.0,
        Piece::Line { .. } => true,
    });
    let n = pieces.len();
    arcs_ok
        && (0..n).all(|i| {
            let t1 = pieces[i].end_tangent();
            let t2 = pieces[(i + 1) % n].start_tangent();
            atan2(t1.cross(t2), t1.dot(t2)) >= -tol.eps_geom
        })
}

fn check_count(n: usize) -> Result<()> {
    if n >= 64 && n % 2 == 0 {
        Ok(())
    } else {
        Err(Error::BadSampleCount(n))
    }
}

/// Exact support function of a convex domain, sampled at `n` directions.
pub fn support_function(d: &Domain, n: usize, tol: &Tolerance) -> Result<SupportFunction> {
    ensure_valid(d, tol)?;
    check_count(n)?;
    let pieces = d.pieces();
    if !convex_pieces(&pieces, tol) {
        return Err(Error::NotConvex);
    }
    let values = (0..n)
        .map(|k| {
            let u = Point::from_angle(2.0 * PI * k as f64 / n as f64);
            pieces
                .iter()
                .map(|p| p.support(u))
                .fold(f64::NEG_INFINITY, f64::max)
        })
        .collect();
    Ok(SupportFunction { n, values })
}

impl SupportFunction {
    pub fn step(&self) -> f64 {
        2.0 * PI / self.n as f64
    }

    fn at(&self, k: isize) -> f64 {
        self.values[k.rem_euclid(self.n as isize) as usize]
    }

    /// Periodic derivative `p'`, exact for first harmonics.
    pub fn derivative(&self) -> Vec<f64> {
        let s = 2.0 * sin(self.step());
        (0..self.n as isize)
            .map(|k| (self.at(k + 1) - self.at(k - 1)) / s)
            .collect()
    }

    /// Perimeter as `∫ p dθ`.
    pub fn perimeter(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.step()
    }

    /// Boundary points `p u + p' u⊥` recovered from the samples.
    pub fn reconstruct(&self) -> Vec<Point> {
        let dp = self.derivative();
        self.values
            .iter()
            .zip(&dp)
            .enumerate()
            .map(|(k, (&p, &q))| {
                let u = Point::from_angle(k as f64 * self.step());
                u * p + u.perp() * q
            })
            .collect()
    }
}

/// `ρ_k = p_k + p''_k` with the second difference scaled by `2(1 - cos h)`,
/// which is exact on translations.
pub fn curvature_profile(sf: &SupportFunction, tol: &Tolerance) -> CurvatureProfile {
    let scale = 2.0 * (1.0 - cos(sf.step()));
    let rho: Vec<f64> = (0..sf.n as isize)
        .map(|k| {
            let p = sf.at(k);
            p + (sf.at(k + 1) - 2.0 * p + sf.at(k - 1)) / scale
        })
        .collect();
    let kappa_bar = if rho.iter().any(|&r| r <= tol.eps_geom) {
        f64::INFINITY
    } else {
        rho.iter().map(|&r| 1.0 / r).fold(0.0, f64::max)
    };
    CurvatureProfile { rho, kappa_bar }
}

/// Sample count used by the criterion: `n_samples` rounded up to an even
/// number of at least 64.
pub fn criterion_samples(tol: &Tolerance) -> usize {
    let n = tol.n_samples.max(64);
    n + n % 2
}

/// `κ̄` of a convex domain at the tolerance's sample count.
pub fn kappa_bar(d: &Domain, tol: &Tolerance) -> Result<f64> {
    let sf = support_function(d, criterion_samples(tol), tol)?;
    Ok(curvature_profile(&sf, tol).kappa_bar)
}

/// Existence criterion for convex domains at zero contact angle:
/// `κ̄ ≤ P(Ω)/|Ω|`.
pub fn giusti_criterion(d: &Domain, tol: &Tolerance) -> Result<bool> {
    Ok(kappa_bar(d, tol)? <= quotient(d) + tol.eps_root)
}
