//! Validation and exact measures of line/arc domains.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::domain::{Domain, Segment};
use crate::error::{Error, Result};
use crate::intersect::{candidate_pairs, intersect};
use crate::math::{abs, sqrt, BBox, Point};
use crate::piece::{loop_area, loop_bbox, loop_length, Piece};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    Empty,
    NonFinite,
    DegenerateSegment,
    ArcRadiusMismatch,
    NotClosed,
    SelfIntersection,
    Orientation,
}

/// First violated domain invariant, with where it happens.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub segment: Option<usize>,
    pub location: Point,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            ViolationKind::Empty => "no segments",
            ViolationKind::NonFinite => "non-finite coordinate",
            ViolationKind::DegenerateSegment => "zero-length line or zero-radius arc",
            ViolationKind::ArcRadiusMismatch => "arc endpoints at different distances from center",
            ViolationKind::NotClosed => "curve does not close",
            ViolationKind::SelfIntersection => "curve self-intersects",
            ViolationKind::Orientation => "curve is not counterclockwise",
        };
        write!(f, "{what} at ({}, {})", self.location.x, self.location.y)?;
        if let Some(i) = self.segment {
            write!(f, " (segment {i})")?;
        }
        Ok(())
    }
}

fn violation(kind: ViolationKind, segment: Option<usize>, location: Point) -> Violation {
    Violation {
        kind,
        segment,
        location,
    }
}

/// Checks closure, simplicity and counterclockwise orientation.
pub fn validate(d: &Domain, tol: &Tolerance) -> core::result::Result<(), Violation> {
    let eps = tol.eps_geom;
    if d.segments.is_empty() {
        return Err(violation(ViolationKind::Empty, None, d.start));
    }
    for (i, seg) in d.segments.iter().enumerate() {
        let ok = seg.end().is_finite()
            && match seg {
                Segment::Arc { center, .. } => center.is_finite(),
                Segment::Line { .. } => true,
            };
        if !ok || !d.start.is_finite() {
            return Err(violation(ViolationKind::NonFinite, Some(i), seg.end()));
        }
    }
    let mut prev = d.start;
    for (i, seg) in d.segments.iter().enumerate() {
        match *seg {
            Segment::Line { end } => {
                if prev.dist(end) <= eps {
                    return Err(violation(ViolationKind::DegenerateSegment, Some(i), end));
                }
            }
            Segment::Arc { end, center, .. } => {
                let (r0, r1) = (prev.dist(center), end.dist(center));
                if r0 <= eps {
                    return Err(violation(ViolationKind::DegenerateSegment, Some(i), center));
                }
                if abs(r0 - r1) > eps {
                    return Err(violation(ViolationKind::ArcRadiusMismatch, Some(i), end));
                }
            }
        }
        prev = seg.end();
    }
    if prev.dist(d.start) > eps {
        return Err(violation(
            ViolationKind::NotClosed,
            Some(d.segments.len() - 1),
            prev,
        ));
    }
    let pieces = d.pieces();
    if let Some((i, p)) = first_self_intersection(&pieces, eps) {
        return Err(violation(ViolationKind::SelfIntersection, Some(i), p));
    }
    if loop_area(&pieces) <= 0.0 {
        return Err(violation(ViolationKind::Orientation, None, d.start));
    }
    Ok(())
}

/// Validation as an `Error`, for operations that require a valid domain.
pub fn ensure_valid(d: &Domain, tol: &Tolerance) -> Result<()> {
    tol.validate()?;
    validate(d, tol).map_err(Error::InvalidDomain)
}

fn first_self_intersection(pieces: &[Piece], eps: f64) -> Option<(usize, Point)> {
    let n = pieces.len();
    if n < 2 {
        return None;
    }
    let boxes: Vec<BBox> = pieces.iter().map(Piece::bbox).collect();
    let mut pairs = candidate_pairs(&boxes, eps);
    pairs.sort_unstable();
    for (i, j) in pairs {
        let next = j == i + 1;
        let wrap = i == 0 && j == n - 1;
        for hit in intersect(&pieces[i], &pieces[j], eps) {
            let mut allowed = false;
            if next && hit.point.dist(pieces[i].end()) <= eps {
                allowed = true;
            }
            if wrap && hit.point.dist(pieces[i].start()) <= eps {
                allowed = true;
            }
            if !allowed {
                return Some((j, hit.point));
            }
        }
    }
    None
}

/// Signed enclosed area (positive for a valid domain).
pub fn area(d: &Domain) -> f64 {
    loop_area(&d.pieces())
}

/// Total boundary length.
pub fn perimeter(d: &Domain) -> f64 {
    loop_length(&d.pieces())
}

/// Perimeter-to-area ratio `P/|Ω|`.
pub fn quotient(d: &Domain) -> f64 {
    let pieces = d.pieces();
    loop_length(&pieces) / loop_area(&pieces)
}

/// Area, perimeter and quotient of a domain, after validation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Measures {
    pub area: f64,
    pub perimeter: f64,
    pub quotient: f64,
}

pub fn measure(d: &Domain, tol: &Tolerance) -> Result<Measures> {
    ensure_valid(d, tol)?;
    let pieces = d.pieces();
    let area = loop_area(&pieces);
    let perimeter = loop_length(&pieces);
    Ok(Measures {
        area,
        perimeter,
        quotient: perimeter / area,
    })
}

/// Euclidean distance to the boundary: negative inside, positive outside.
pub fn signed_distance(d: &Domain, p: Point) -> f64 {
    Boundary::new(d.pieces()).signed_distance(p)
}

/// Lower bound `2 sqrt(π/|Ω|)` on `P/|Ω|` from the isoperimetric inequality.
pub fn isoperimetric_bound(area: f64) -> f64 {
    2.0 * sqrt(PI / area)
}

/// Boundary pieces with a uniform grid index for point queries.
#[derive(Clone, Debug)]
pub(crate) struct Boundary {
    pub pieces: Vec<Piece>,
    boxes: Vec<BBox>,
    pub bbox: BBox,
    grid: Grid,
}

#[derive(Clone, Debug)]
struct Grid {
    origin: Point,
    cell: f64,
    nx: usize,
    ny: usize,
    cells: Vec<Vec<u32>>,
    rows: Vec<Vec<u32>>,
}

impl Grid {
    fn new(boxes: &[BBox], bbox: BBox) -> Grid {
        let n = boxes.len();
        let (w, h) = (bbox.width(), bbox.height());
        let side = w.max(h);
        let mut cell = if w > 0.0 && h > 0.0 {
            sqrt(w * h / n.max(1) as f64) * 2.0
        } else {
            side / n.max(1) as f64
        };
        cell = cell.max(side / 2048.0);
        if !(cell > 0.0) || !cell.is_finite() {
            cell = 1.0;
        }
        let nx = ((w / cell) as usize + 1).min(4096);
        let ny = ((h / cell) as usize + 1).min(4096);
        let mut grid = Grid {
            origin: bbox.min,
            cell,
            nx,
            ny,
            cells: alloc::vec![Vec::new(); nx * ny],
            rows: alloc::vec![Vec::new(); ny],
        };
        for (k, b) in boxes.iter().enumerate() {
            let (i0, j0) = grid.index(b.min);
            let (i1, j1) = grid.index(b.max);
            for j in j0..=j1 {
                grid.rows[j].push(k as u32);
                for i in i0..=i1 {
                    grid.cells[j * nx + i].push(k as u32);
                }
            }
        }
        grid
    }

    fn cell_distance(&self, i: usize, j: usize, p: Point) -> f64 {
        let x0 = self.origin.x + i as f64 * self.cell;
        let y0 = self.origin.y + j as f64 * self.cell;
        let dx = (x0 - p.x).max(p.x - x0 - self.cell).max(0.0);
        let dy = (y0 - p.y).max(p.y - y0 - self.cell).max(0.0);
        sqrt(dx * dx + dy * dy)
    }

    /// Cell containing `p`, clamped to the grid.
    fn index(&self, p: Point) -> (usize, usize) {
        let fx = ((p.x - self.origin.x) / self.cell).max(0.0);
        let fy = ((p.y - self.origin.y) / self.cell).max(0.0);
        let i = if fx.is_finite() { (fx as usize).min(self.nx - 1) } else { self.nx - 1 };
        let j = if fy.is_finite() { (fy as usize).min(self.ny - 1) } else { self.ny - 1 };
        (i, j)
    }
}

impl Boundary {
    pub fn new(pieces: Vec<Piece>) -> Self {
        let boxes: Vec<BBox> = pieces.iter().map(Piece::bbox).collect();
        let bbox = loop_bbox(&pieces);
        let grid = Grid::new(&boxes, bbox);
        Boundary {
            pieces,
            boxes,
            bbox,
            grid,
        }
    }

    pub fn from_loops(loops: &[Vec<Piece>]) -> Self {
        Boundary::new(loops.iter().flatten().copied().collect())
    }

    /// Nearest-first scan of grid rings around `p`. `visit` receives each
    /// candidate piece index and returns `true` to stop; the scan also stops once
    /// the ring lower bound exceeds `*bound`.
    fn scan<F>(&self, p: Point, bound: &mut f64, mut visit: F)
    where
        F: FnMut(usize, &mut f64) -> bool,
    {
        if self.pieces.is_empty() {
            return;
        }
        let g = &self.grid;
        let (ci, cj) = g.index(p);
        let base = self.bbox.distance(p);
        let rings = g.nx.max(g.ny);
        for k in 0..=rings {
            let lb = base.max((k as f64 - 1.0) * g.cell);
            if lb > *bound {
                return;
            }
            let (i0, i1) = (ci.saturating_sub(k), (ci + k).min(g.nx - 1));
            let (j0, j1) = (cj.saturating_sub(k), (cj + k).min(g.ny - 1));
            for j in j0..=j1 {
                let edge_row = j + k == cj || j == cj + k;
                for i in i0..=i1 {
                    if !edge_row && i + k != ci && i != ci + k {
                        continue;
                    }
                    if g.cell_distance(i, j, p) > *bound {
                        continue;
                    }
                    for &idx in &g.cells[j * g.nx + i] {
                        if visit(idx as usize, bound) {
                            return;
                        }
                    }
                }
            }
        }
    }

    pub fn distance(&self, p: Point) -> f64 {
        let mut best = f64::INFINITY;
        self.scan(p, &mut best, |k, best| {
            if self.boxes[k].distance(p) < *best {
                *best = best.min(self.pieces[k].distance(p));
            }
            false
        });
        best
    }

    /// Indices of pieces whose bounding box lies within `rho` of `p`.
    pub fn near(&self, p: Point, rho: f64) -> Vec<usize> {
        let mut out = Vec::new();
        let mut bound = rho;
        self.scan(p, &mut bound, |idx, _| {
            if self.boxes[idx].distance(p) <= rho {
                out.push(idx);
            }
            false
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    /// True when some boundary point lies strictly closer than `limit`.
    pub fn closer_than(&self, p: Point, limit: f64) -> bool {
        let mut bound = limit;
        let mut found = false;
        self.scan(p, &mut bound, |k, _| {
            found = self.boxes[k].distance(p) < limit && self.pieces[k].distance(p) < limit;
            found
        });
        found
    }

    /// Winding number of the boundary around `p` by signed ray crossings;
    /// assumes a single closed loop or a union of disjoint closed loops.
    pub fn winding(&self, p: Point) -> i32 {
        if self.pieces.is_empty() || self.bbox.distance(p) > 0.0 {
            return 0;
        }
        let (_, j) = self.grid.index(p);
        self.grid.rows[j]
            .iter()
            .map(|&k| k as usize)
            .filter(|&k| {
                let b = &self.boxes[k];
                b.max.x > p.x && b.min.y <= p.y && b.max.y >= p.y
            })
            .map(|k| self.pieces[k].ray_crossings(p))
            .sum()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.winding(p) != 0
    }

    pub fn signed_distance(&self, p: Point) -> f64 {
        let dist = self.distance(p);
        if self.contains(p) {
            -dist
        } else {
            dist
        }
    }
}
