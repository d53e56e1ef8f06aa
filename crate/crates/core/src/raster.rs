//! Pixel-grid model of domains: scanline fill, exact Euclidean distance
//! transform, and the morphology built on it. Serves as an independent
//! cross-check of the vector operations.

use alloc::vec;
use alloc::vec::Vec;

use crate::domain::Domain;
use crate::math::{ceil, floor, sqrt, BBox, Point};
use crate::piece::{loop_bbox, Piece};

const FAR: f64 = 1e30;

/// A boolean image over an axis-aligned grid of square pixels.
#[derive(Clone, Debug, PartialEq)]
pub struct Raster {
    pub origin: Point,
    pub h: f64,
    pub nx: usize,
    pub ny: usize,
    pub inside: Vec<bool>,
}

impl Raster {
    /// Rasterizes `d` with `n` pixels across the longer side of its bounding
    /// box, padded by `pad` on every side.
    pub fn of_domain(d: &Domain, n: usize, pad: f64) -> Raster {
        let pieces = d.pieces();
        let bb = loop_bbox(&pieces);
        Raster::of_loops(&[pieces], bb, n, pad)
    }

    /// Rasterizes the union of closed loops over `bb` (plus `pad`).
    pub fn of_loops(loops: &[Vec<Piece>], bb: BBox, n: usize, pad: f64) -> Raster {
        let n = n.max(8);
        let h = bb.width().max(bb.height()) / n as f64;
        // irrational shifts keep scanlines off vertices and tangencies
        let origin = Point::new(
            bb.min.x - pad - h * 0.318_309_886_183_790_7,
            bb.min.y - pad - h * 0.271_828_182_845_904_5,
        );
        let nx = ((bb.max.x + pad - origin.x) / h) as usize + 2;
        let ny = ((bb.max.y + pad - origin.y) / h) as usize + 2;
        let mut inside = vec![false; nx * ny];
        let mut xs: Vec<f64> = Vec::new();
        for j in 0..ny {
            let y = origin.y + (j as f64 + 0.5) * h;
            xs.clear();
            for l in loops {
                for p in l {
                    crossings(p, y, &mut xs);
                }
            }
            xs.sort_by(f64::total_cmp);
            for pair in xs.chunks_exact(2) {
                let i0 = ceil((pair[0] - origin.x) / h - 0.5).max(0.0) as usize;
                let i1 = floor((pair[1] - origin.x) / h - 0.5);
                if i1 < 0.0 {
                    continue;
                }
                let i1 = (i1 as usize).min(nx - 1);
                for i in i0..=i1 {
                    inside[j * nx + i] = true;
                }
            }
        }
        Raster {
            origin,
            h,
            nx,
            ny,
            inside,
        }
    }

    fn blank_like(&self) -> Raster {
        Raster {
            inside: vec![false; self.inside.len()],
            ..self.clone()
        }
    }

    pub fn center(&self, i: usize, j: usize) -> Point {
        Point::new(
            self.origin.x + (i as f64 + 0.5) * self.h,
            self.origin.y + (j as f64 + 0.5) * self.h,
        )
    }

    pub fn at(&self, i: usize, j: usize) -> bool {
        self.inside[j * self.nx + i]
    }

    /// Whether the pixel containing `p` is set; points off the grid are outside.
    pub fn contains(&self, p: Point) -> bool {
        let fx = (p.x - self.origin.x) / self.h;
        let fy = (p.y - self.origin.y) / self.h;
        if fx < 0.0 || fy < 0.0 {
            return false;
        }
        let (i, j) = (fx as usize, fy as usize);
        i < self.nx && j < self.ny && self.at(i, j)
    }

    pub fn pixel_area(&self) -> f64 {
        self.h * self.h
    }

    pub fn count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn area(&self) -> f64 {
        self.count() as f64 * self.pixel_area()
    }

    /// Set pixels with at least one unset 4-neighbour.
    pub fn boundary_pixel_count(&self) -> usize {
        let mut n = 0;
        for j in 0..self.ny {
            for i in 0..self.nx {
                if !self.at(i, j) {
                    continue;
                }
                let edge = i == 0
                    || j == 0
                    || i + 1 == self.nx
                    || j + 1 == self.ny
                    || !self.at(i - 1, j)
                    || !self.at(i + 1, j)
                    || !self.at(i, j - 1)
                    || !self.at(i, j + 1);
                if edge {
                    n += 1;
                }
            }
        }
        n
    }

    /// Euclidean distance from every pixel center to the nearest pixel center
    /// whose value differs from `target`.
    fn distance_to(&self, target: bool) -> Vec<f64> {
        let mut f: Vec<f64> = self
            .inside
            .iter()
            .map(|&b| if b == target { FAR } else { 0.0 })
            .collect();
        let mut line = vec![0.0; self.nx.max(self.ny)];
        let mut out = vec![0.0; self.nx.max(self.ny)];
        for i in 0..self.nx {
            for j in 0..self.ny {
                line[j] = f[j * self.nx + i];
            }
            edt_1d(&line[..self.ny], &mut out[..self.ny]);
            for j in 0..self.ny {
                f[j * self.nx + i] = out[j];
            }
        }
        for j in 0..self.ny {
            let row = &mut f[j * self.nx..(j + 1) * self.nx];
            line[..self.nx].copy_from_slice(row);
            edt_1d(&line[..self.nx], &mut out[..self.nx]);
            row.copy_from_slice(&out[..self.nx]);
        }
        f.iter().map(|&d2| sqrt(d2) * self.h).collect()
    }

    /// Pixels whose estimated distance to the complement is at least `r`.
    pub fn erode(&self, r: f64) -> Raster {
        let d = self.distance_to(true);
        let mut out = self.blank_like();
        for (k, &b) in self.inside.iter().enumerate() {
            out.inside[k] = b && d[k] - 0.5 * self.h >= r;
        }
        out
    }

    /// Pixels within `r` of the set.
    pub fn dilate(&self, r: f64) -> Raster {
        let d = self.distance_to(false);
        let mut out = self.blank_like();
        for (k, &b) in self.inside.iter().enumerate() {
            out.inside[k] = b || d[k] - 0.5 * self.h <= r;
        }
        out
    }

    pub fn opening(&self, r: f64) -> Raster {
        self.erode(r).dilate(r)
    }

    /// Number of 4-connected components of set pixels.
    pub fn components(&self) -> usize {
        let mut seen = vec![false; self.inside.len()];
        let mut stack = Vec::new();
        let mut count = 0;
        for start in 0..self.inside.len() {
            if !self.inside[start] || seen[start] {
                continue;
            }
            count += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(k) = stack.pop() {
                let (i, j) = (k % self.nx, k / self.nx);
                let mut visit = |k2: usize| {
                    if self.inside[k2] && !seen[k2] {
                        seen[k2] = true;
                        stack.push(k2);
                    }
                };
                if i > 0 {
                    visit(k - 1);
                }
                if i + 1 < self.nx {
                    visit(k + 1);
                }
                if j > 0 {
                    visit(k - self.nx);
                }
                if j + 1 < self.ny {
                    visit(k + self.nx);
                }
            }
        }
        count
    }

    /// Area of pixels set in exactly one of two rasters on the same grid.
    pub fn symmetric_difference_area(&self, other: &Raster) -> f64 {
        assert_eq!(self.inside.len(), other.inside.len(), "grids differ");
        let n = self
            .inside
            .iter()
            .zip(&other.inside)
            .filter(|(a, b)| a != b)
            .count();
        n as f64 * self.pixel_area()
    }
}

/// x-coordinates where the horizontal line at height `y` crosses `p`.
fn crossings(p: &Piece, y: f64, xs: &mut Vec<f64>) {
    match *p {
        Piece::Line { a, b } => {
            if (a.y < y) != (b.y < y) {
                let t = (y - a.y) / (b.y - a.y);
                xs.push(a.x + t * (b.x - a.x));
            }
        }
        Piece::Arc { center, radius, .. } => {
            let dy = y - center.y;
            let h2 = radius * radius - dy * dy;
            if h2 <= 0.0 {
                return;
            }
            let dx = sqrt(h2);
            for x in [center.x - dx, center.x + dx] {
                let q = Point::new(x, y);
                if let Some(t) = p.param_of_angle((q - center).angle()) {
                    if (0.0..1.0).contains(&t) {
                        xs.push(x);
                    }
                }
            }
        }
    }
}

/// One-dimensional squared distance transform (lower envelope of parabolas).
/// Entries of `f` at or above `FAR` are treated as infinitely far.
fn edt_1d(f: &[f64], d: &mut [f64]) {
    let n = f.len();
    let mut v: Vec<usize> = Vec::with_capacity(n);
    let mut z: Vec<f64> = Vec::with_capacity(n + 1);
    for q in 0..n {
        if f[q] >= FAR {
            continue;
        }
        let mut s = f64::NEG_INFINITY;
        while let Some(&p) = v.last() {
            s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q - p) as f64);
            if s <= *z.last().expect("boundary per parabola") {
                v.pop();
                z.pop();
                s = f64::NEG_INFINITY;
            } else {
                break;
            }
        }
        v.push(q);
        z.push(s);
    }
    if v.is_empty() {
        d.iter_mut().for_each(|x| *x = FAR);
        return;
    }
    let mut k = 0;
    for (q, out) in d.iter_mut().enumerate() {
        while k + 1 < v.len() && z[k + 1] < q as f64 {
            k += 1;
        }
        let p = v[k];
        let dq = q as f64 - p as f64;
        *out = dq * dq + f[p];
    }
}
