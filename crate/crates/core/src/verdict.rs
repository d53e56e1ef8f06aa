//! Existence decision for capillary surfaces over a cross-section.
//!
//! At zero contact angle the criteria are tried from certificates to
//! heuristics: the convex curvature criterion, the strict rolling ball at
//! `r = |Ω|/P(Ω)`, the no-neck criterion, a search for subsets violating the
//! necessary quotient inequality, and finally the Cheeger candidate. Positive
//! angles inherit existence from zero angle but never nonexistence.

use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use crate::cheeger::{candidate_set, radius_of};
use crate::convex::giusti_criterion;
use crate::domain::Domain;
use crate::error::{Error, Result};
use crate::geometry::{ensure_valid, Boundary};
use crate::math::{ceil, cos, pow};
use crate::morphology::{dilate_loops, erode_loops, inradius_of, neck_of};
use crate::piece::{loop_area, loop_length, Piece};
use crate::reach::{report_of, sample_loops};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Exists,
    Nonexistence,
    Unresolved,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Exists => "exists",
            Status::Nonexistence => "nonexistence",
            Status::Unresolved => "unresolved",
        }
    }
}

/// Which criterion produced (or contributed to) a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Criterion {
    ConvexIff,
    StrictRollingBall,
    NoNeckIff,
    WitnessViolation,
    CheegerGap,
    GammaReduction,
    GammaTrivial,
}

impl Criterion {
    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::ConvexIff => "convex_iff",
            Criterion::StrictRollingBall => "strict_rolling_ball",
            Criterion::NoNeckIff => "no_neck_iff",
            Criterion::WitnessViolation => "witness_violation",
            Criterion::CheegerGap => "cheeger_gap",
            Criterion::GammaReduction => "gamma_reduction",
            Criterion::GammaTrivial => "gamma_trivial",
        }
    }
}

/// A proper subset whose quotient does not exceed the domain's.
#[derive(Clone, Debug, PartialEq)]
pub struct SubsetWitness {
    pub subset: Domain,
    pub quotient_e: f64,
    pub quotient_omega: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub gamma: f64,
    pub status: Status,
    pub criterion_path: Vec<Criterion>,
    pub r_phys: f64,
    pub witness: Option<SubsetWitness>,
    pub notes: Vec<String>,
}

/// Pipeline switches.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecideOptions {
    /// Go straight to the rolling-ball criteria even for convex domains.
    pub skip_convex: bool,
}

/// Number of geometric levels in the witness search.
pub const WITNESS_LEVELS: u32 = 32;
/// Ratio between consecutive witness radii.
pub const WITNESS_RATIO: f64 = 0.9;

fn check_gamma(gamma: f64) -> Result<()> {
    if (0.0..=FRAC_PI_2).contains(&gamma) {
        Ok(())
    } else {
        Err(Error::GammaOutOfRange(gamma))
    }
}

/// `(P(E; Ω) + cos γ P(E; ∂Ω)) / |E|` for `E ⊆ Ω`.
pub fn necessary_quotient(omega: &Domain, e: &Domain, gamma: f64, tol: &Tolerance) -> Result<f64> {
    ensure_valid(omega, tol)?;
    ensure_valid(e, tol)?;
    check_gamma(gamma)?;
    let outer = Boundary::new(omega.pieces());
    quotient_of(&outer, loop_area(&omega.pieces()), &e.pieces(), gamma, tol)
}

fn quotient_of(
    outer: &Boundary,
    outer_area: f64,
    e: &[Piece],
    gamma: f64,
    tol: &Tolerance,
) -> Result<f64> {
    let area = loop_area(e);
    if area < tol.eps_area {
        return Err(Error::DegenerateSubset);
    }
    let inside = sample_loops(&[e.to_vec()], tol.n_samples)
        .iter()
        .all(|&x| outer.signed_distance(x) <= tol.eps_geom);
    if !inside || area > outer_area + tol.eps_area {
        return Err(Error::NotASubset);
    }
    let (free, shared) = split_length(outer, e, tol);
    Ok((free + cos(gamma) * shared) / area)
}

/// Lengths of `e`'s boundary away from and within `eps_geom` of the outer
/// boundary, by classifying the midpoints of sub-intervals of length about
/// `P/n_samples`.
fn split_length(outer: &Boundary, e: &[Piece], tol: &Tolerance) -> (f64, f64) {
    let step = loop_length(e) / tol.n_samples.max(1) as f64;
    let (mut free, mut shared) = (0.0, 0.0);
    for p in e {
        let len = p.length();
        let m = (ceil(len / step) as usize).max(1);
        for k in 0..m {
            let x = p.point_at((k as f64 + 0.5) / m as f64);
            if outer.distance(x) <= tol.eps_geom {
                shared += len / m as f64;
            } else {
                free += len / m as f64;
            }
        }
    }
    (free, shared)
}

/// Decision with the default pipeline.
pub fn decide(omega: &Domain, gamma: f64, tol: &Tolerance) -> Result<Verdict> {
    decide_with(omega, gamma, tol, DecideOptions::default())
}

pub fn decide_with(
    omega: &Domain,
    gamma: f64,
    tol: &Tolerance,
    opts: DecideOptions,
) -> Result<Verdict> {
    ensure_valid(omega, tol)?;
    check_gamma(gamma)?;
    let pieces = omega.pieces();
    let r_phys = loop_area(&pieces) / loop_length(&pieces);
    if gamma >= FRAC_PI_2 {
        return Ok(Verdict {
            gamma,
            status: Status::Exists,
            criterion_path: alloc::vec![Criterion::GammaTrivial],
            r_phys,
            witness: None,
            notes: Vec::new(),
        });
    }
    let mut v = decide_zero(omega, &pieces, r_phys, tol, opts)?;
    v.gamma = gamma;
    if gamma > 0.0 {
        match v.status {
            Status::Exists => v.criterion_path.push(Criterion::GammaReduction),
            Status::Nonexistence => {
                v.status = Status::Unresolved;
                v.witness = None;
                v.notes
                    .push(String::from("nonexistence at zero contact angle does not carry over to positive angles"));
            }
            Status::Unresolved => {}
        }
    }
    Ok(v)
}

fn decide_zero(
    omega: &Domain,
    pieces: &[Piece],
    r_phys: f64,
    tol: &Tolerance,
    opts: DecideOptions,
) -> Result<Verdict> {
    let mut v = Verdict {
        gamma: 0.0,
        status: Status::Unresolved,
        criterion_path: Vec::new(),
        r_phys,
        witness: None,
        notes: Vec::new(),
    };
    if !opts.skip_convex && crate::convex::is_convex(omega, tol)? {
        v.criterion_path.push(Criterion::ConvexIff);
        v.status = if giusti_criterion(omega, tol)? {
            Status::Exists
        } else {
            Status::Nonexistence
        };
        return Ok(v);
    }

    let reach = report_of(pieces, r_phys, tol)?;
    if reach.disagreement {
        v.notes
            .push(String::from("r-openness and sampled rolling positions disagree"));
    }
    if reach.strict {
        if reach.near_miss {
            v.notes
                .push(String::from("antipodal contacts within ten eps_geom of each other"));
        }
        v.criterion_path.push(Criterion::StrictRollingBall);
        v.status = Status::Exists;
        return Ok(v);
    }

    let neck = neck_of(pieces, r_phys, tol)?;
    if neck.no_neck {
        if neck.vacuous {
            v.notes
                .push(String::from("inner parallel set at r_phys is empty; connectivity holds vacuously"));
        }
        v.criterion_path.push(Criterion::NoNeckIff);
        v.status = Status::Nonexistence;
        return Ok(v);
    }

    let outer = Boundary::new(pieces.to_vec());
    let area = loop_area(pieces);
    let q_omega = 1.0 / r_phys;
    if let Some(w) = witness_search(&outer, pieces, area, q_omega, tol)? {
        v.criterion_path.push(Criterion::WitnessViolation);
        v.status = Status::Nonexistence;
        v.witness = Some(w);
        return Ok(v);
    }

    let r_star = radius_of(pieces, tol)?;
    for c in candidate_set(pieces, r_star, tol)?.components {
        let e = c.pieces();
        if area - loop_area(&e) < tol.eps_area {
            continue;
        }
        if let Ok(q) = quotient_of(&outer, area, &e, 0.0, tol) {
            if q < q_omega - tol.eps_root {
                v.criterion_path.push(Criterion::CheegerGap);
                v.status = Status::Nonexistence;
                v.witness = Some(SubsetWitness {
                    subset: c,
                    quotient_e: q,
                    quotient_omega: q_omega,
                });
                return Ok(v);
            }
        }
    }
    v.notes.push(alloc::format!(
        "no certificate found; Cheeger candidate h = {} against P/|A| = {}",
        1.0 / r_star,
        q_omega
    ));
    Ok(v)
}

/// Smallest-quotient proper subset among dilations of erosion components
/// over the geometric radius grid, if it violates the strict inequality.
fn witness_search(
    outer: &Boundary,
    pieces: &[Piece],
    area: f64,
    q_omega: f64,
    tol: &Tolerance,
) -> Result<Option<SubsetWitness>> {
    let inradius = inradius_of(pieces, tol)?;
    let mut best: Option<(f64, Vec<Piece>)> = None;
    for k in 1..=WITNESS_LEVELS {
        let rho = inradius * pow(WITNESS_RATIO, k as f64);
        let core = erode_loops(pieces, rho, tol)?;
        for c in core.iter().filter(|l| loop_area(l) >= tol.eps_area) {
            let grown = match dilate_loops(core::slice::from_ref(c), rho, tol) {
                Ok(g) if g.len() == 1 => g.into_iter().next().expect("one loop"),
                _ => continue,
            };
            if area - loop_area(&grown) < tol.eps_area {
                continue;
            }
            let domain = Domain::from_pieces(&grown);
            if ensure_valid(&domain, tol).is_err() {
                continue;
            }
            if let Ok(q) = quotient_of(outer, area, &domain.pieces(), 0.0, tol) {
                if best.as_ref().map_or(true, |(b, _)| q < *b) {
                    best = Some((q, domain.pieces()));
                }
            }
        }
    }
    Ok(best.and_then(|(q, e)| {
        (q <= q_omega + tol.eps_root).then(|| SubsetWitness {
            subset: Domain::from_pieces(&e),
            quotient_e: q,
            quotient_omega: q_omega,
        })
    }))
}
