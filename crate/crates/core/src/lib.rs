//! Geometry of planar cross-sections bounded by lines and circular arcs.
//!
//! The crate answers whether a vertical-walled tube with a given
//! cross-section admits a capillary surface at a given contact angle. It
//! provides exact area and perimeter of arc/line curves, inner parallel sets
//! and disk dilations, interior rolling-ball tests, Cheeger constants and
//! sets, support-function curvature bounds for convex domains, and a verdict
//! pipeline combining them.
//!
//! Everything here works without `std`; allocation is required.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cheeger;
pub mod convex;
pub mod domain;
pub mod error;
pub mod gallery;
pub mod geometry;
pub mod intersect;
pub mod math;
pub mod morphology;
mod offset;
pub mod piece;
pub mod raster;
pub mod reach;
pub mod root;
pub mod tolerance;
pub mod verdict;

pub use cheeger::CheegerResult;
pub use convex::{CurvatureProfile, SupportFunction};
pub use domain::{Domain, Orientation, Segment};
pub use error::{Error, Result};
pub use geometry::{Violation, ViolationKind};
pub use math::Point;
pub use morphology::Region;
pub use reach::{ContactSet, ReachReport};
pub use tolerance::Tolerance;
pub use verdict::{Criterion, DecideOptions, Status, SubsetWitness, Verdict};
