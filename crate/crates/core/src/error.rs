use core::fmt;

use crate::geometry::Violation;

/// Errors raised by the geometric operations.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// The input curve failed validation.
    InvalidDomain(Violation),
    /// A radius argument was negative (or nonpositive where a strictly positive one is required).
    InvalidRadius(f64),
    /// A tolerance field is out of range.
    InvalidTolerance(&'static str),
    /// Contact angle outside `[0, π/2]`.
    GammaOutOfRange(f64),
    /// Operation requires a convex domain.
    NotConvex,
    /// Constructor parameters violate the family's invariants.
    InvalidParameters(&'static str),
    /// Bisection endpoints do not bracket a sign change.
    NotBracketed { lo: f64, hi: f64 },
    /// The inner parallel set at the Cheeger radius is disconnected.
    NeckAtCheegerRadius { components: usize },
    /// A subset argument is not contained in the ambient domain.
    NotASubset,
    /// A subset argument has (numerically) zero area.
    DegenerateSubset,
    /// Support function sample count must be even and at least 64.
    BadSampleCount(usize),
    /// A dilation produced a hole, which a `Region` cannot represent.
    HoleInDilation { area: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDomain(v) => write!(f, "invalid domain: {v}"),
            Error::InvalidRadius(r) => write!(f, "invalid radius {r}"),
            Error::InvalidTolerance(what) => write!(f, "invalid tolerance: {what}"),
            Error::GammaOutOfRange(g) => write!(f, "contact angle {g} outside [0, pi/2]"),
            Error::NotConvex => f.write_str("domain is not convex"),
            Error::InvalidParameters(what) => write!(f, "invalid parameters: {what}"),
            Error::NotBracketed { lo, hi } => {
                write!(f, "bisection interval [{lo}, {hi}] does not bracket a root")
            }
            Error::NeckAtCheegerRadius { components } => write!(
                f,
                "inner parallel set at the Cheeger radius has {components} components"
            ),
            Error::NotASubset => f.write_str("subset is not contained in the domain"),
            Error::DegenerateSubset => f.write_str("subset has zero area"),
            Error::BadSampleCount(n) => {
                write!(f, "sample count {n} must be even and at least 64")
            }
            Error::HoleInDilation { area } => {
                write!(f, "dilation encloses a hole of area {area}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
