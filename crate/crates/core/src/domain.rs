//! Boundary representation of a cross-section: a start point followed by
//! line and arc segments that close back on it, counterclockwise.

use alloc::vec::Vec;

use crate::math::{wrap_positive, Point, TAU};
use crate::piece::Piece;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
}

/// One boundary segment, from the previous segment's end (or the domain's
/// start) to `end`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Segment {
    Line {
        end: Point,
    },
    Arc {
        end: Point,
        center: Point,
        orientation: Orientation,
    },
}

impl Segment {
    pub fn end(&self) -> Point {
        match *self {
            Segment::Line { end } | Segment::Arc { end, .. } => end,
        }
    }
}

/// A simple closed curve made of lines and circular arcs.
#[derive(Clone, Debug, PartialEq)]
pub struct Domain {
    pub start: Point,
    pub segments: Vec<Segment>,
}

impl Domain {
    pub fn new(start: Point, segments: Vec<Segment>) -> Self {
        Domain { start, segments }
    }

    /// Explicit pieces with resolved arc sweeps.
    ///
    /// A lone arc whose end meets its start is a full circle; in a multi-segment
    /// curve an arc with (numerically) coincident endpoints is a vanishing arc.
    pub fn pieces(&self) -> Vec<Piece> {
        let single = self.segments.len() == 1;
        let mut prev = self.start;
        let mut out = Vec::with_capacity(self.segments.len());
        for seg in &self.segments {
            match *seg {
                Segment::Line { end } => out.push(Piece::Line { a: prev, b: end }),
                Segment::Arc {
                    end,
                    center,
                    orientation,
                } => {
                    let radius = prev.dist(center);
                    let a0 = (prev - center).angle();
                    let a1 = (end - center).angle();
                    let ccw = orientation == Orientation::Ccw;
                    let raw = if ccw {
                        wrap_positive(a1 - a0)
                    } else {
                        wrap_positive(a0 - a1)
                    };
                    let chord = prev.dist(end);
                    let magnitude = if single && chord <= 1e-12 * (1.0 + radius) {
                        TAU
                    } else if raw > TAU - 1e-9 || raw == 0.0 {
                        // vanishing arc whose endpoints straddle the start angle
                        if radius > 0.0 {
                            (chord / radius).min(TAU)
                        } else {
                            0.0
                        }
                    } else {
                        raw
                    };
                    out.push(Piece::Arc {
                        a: prev,
                        b: end,
                        center,
                        radius,
                        sweep: if ccw { magnitude } else { -magnitude },
                    });
                }
            }
            prev = seg.end();
        }
        out
    }

    /// Rebuilds a domain from a closed chain of pieces.
    pub fn from_pieces(pieces: &[Piece]) -> Self {
        let start = pieces.first().map(Piece::start).unwrap_or_default();
        let segments = pieces
            .iter()
            .map(|p| match *p {
                Piece::Line { b, .. } => Segment::Line { end: b },
                Piece::Arc {
                    b, center, sweep, ..
                } => Segment::Arc {
                    end: b,
                    center,
                    orientation: if sweep >= 0.0 {
                        Orientation::Ccw
                    } else {
                        Orientation::Cw
                    },
                },
            })
            .collect();
        Domain { start, segments }
    }

    /// Image under `p -> scale * rotate(angle, p) + shift`.
    pub fn transformed(&self, scale: f64, angle: f64, shift: Point) -> Domain {
        let pieces: Vec<Piece> = self
            .pieces()
            .iter()
            .map(|p| p.transformed(scale, angle, shift))
            .collect();
        Domain::from_pieces(&pieces)
    }

    pub fn translated(&self, shift: Point) -> Domain {
        self.transformed(1.0, 0.0, shift)
    }

    pub fn scaled(&self, scale: f64) -> Domain {
        self.transformed(scale, 0.0, Point::ORIGIN)
    }

    pub fn rotated(&self, angle: f64) -> Domain {
        self.transformed(1.0, angle, Point::ORIGIN)
    }

    /// Same curve traversed the other way.
    pub fn reversed(&self) -> Domain {
        let pieces: Vec<Piece> = self
            .pieces()
            .iter()
            .rev()
            .map(|p| match *p {
                Piece::Line { a, b } => Piece::Line { a: b, b: a },
                Piece::Arc {
                    a,
                    b,
                    center,
                    radius,
                    sweep,
                } => Piece::Arc {
                    a: b,
                    b: a,
                    center,
                    radius,
                    sweep: -sweep,
                },
            })
            .collect();
        Domain::from_pieces(&pieces)
    }

    /// Endpoints of every segment, starting with `start`.
    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        core::iter::once(self.start).chain(self.segments.iter().map(Segment::end))
    }
}
