//! Trimmed parallel curves of closed arc/line loops.
//!
//! The raw offset of each loop (translated lines, re-radiused arcs and round
//! joins at corners) is split at all mutual intersections, pieces that are
//! too close to the source boundary are discarded, and the survivors are
//! stitched back into closed loops.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geometry::Boundary;
use crate::intersect::{candidate_pairs, intersect};
use crate::math::{abs, atan2, BBox, Point};
use crate::piece::{loop_area, Piece};
use crate::tolerance::Tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    /// Inner parallel set of a single counterclockwise loop.
    Erode,
    /// Union of disk dilations of disjoint counterclockwise loops.
    Dilate,
}

struct Edge {
    piece: Piece,
    from: usize,
    to: usize,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn add(&mut self) -> usize {
        let id = self.parent.len();
        self.parent.push(id);
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Raw offset chain of one closed loop, as edges between node ids.
fn raw_loop(
    pieces: &[Piece],
    delta: f64,
    snap: f64,
    nodes: &mut Vec<Point>,
    uf: &mut UnionFind,
    out: &mut Vec<Edge>,
) {
    let n = pieces.len();
    let node = |p: Point, nodes: &mut Vec<Point>, uf: &mut UnionFind| {
        nodes.push(p);
        uf.add()
    };
    let mut pending: Option<usize> = None;
    let mut first_node: Option<usize> = None;
    for i in 0..n {
        let cur = &pieces[i];
        let next = &pieces[(i + 1) % n];
        if let Some(off) = cur.offset(delta, snap) {
            let from = match pending.take() {
                Some(id) => {
                    nodes[id] = off.start();
                    id
                }
                None => node(off.start(), nodes, uf),
            };
            if first_node.is_none() {
                first_node = Some(from);
            }
            let to = node(off.end(), nodes, uf);
            out.push(Edge {
                piece: off,
                from,
                to,
            });
            pending = Some(to);
        }
        // corner join at the vertex shared by `cur` and `next`
        let t1 = cur.end_tangent();
        let t2 = next.start_tangent();
        let phi = atan2(t1.cross(t2), t1.dot(t2));
        if abs(phi) * abs(delta) <= snap {
            continue;
        }
        let v = cur.end();
        let a = v + t1.perp() * delta;
        let join = Piece::Arc {
            a,
            b: v + t2.perp() * delta,
            center: v,
            radius: abs(delta),
            sweep: phi,
        };
        let from = match pending.take() {
            Some(id) => id,
            None => node(a, nodes, uf),
        };
        if first_node.is_none() {
            first_node = Some(from);
        }
        let to = node(join.end(), nodes, uf);
        out.push(Edge {
            piece: join,
            from,
            to,
        });
        pending = Some(to);
    }
    if let (Some(last), Some(first)) = (pending, first_node) {
        uf.union(first, last);
    }
}

/// Merges all nodes closer than `snap`.
fn merge_close(nodes: &[Point], uf: &mut UnionFind, snap: f64) {
    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&i, &j| nodes[i].x.total_cmp(&nodes[j].x));
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if nodes[j].x - nodes[i].x > snap {
                break;
            }
            if nodes[i].dist(nodes[j]) <= snap {
                uf.union(i, j);
            }
        }
    }
}

/// Trimmed offset of `loops` by distance `r`: inward for erosion, outward for
/// dilation. Returns closed loops of positive orientation; tiny loops are kept.
pub(crate) fn offset_loops(
    loops: &[Vec<Piece>],
    r: f64,
    mode: Mode,
    tol: &Tolerance,
) -> Result<Vec<Vec<Piece>>> {
    let snap = tol.snap();
    let keep = tol.keep();
    if r <= snap {
        return Ok(loops.to_vec());
    }
    let delta = match mode {
        Mode::Erode => r,
        Mode::Dilate => -r,
    };

    let mut nodes: Vec<Point> = Vec::new();
    let mut uf = UnionFind::new();
    let mut raw: Vec<Edge> = Vec::new();
    for l in loops {
        raw_loop(l, delta, snap, &mut nodes, &mut uf, &mut raw);
    }
    if raw.is_empty() {
        return Ok(Vec::new());
    }

    // pieces lying entirely too close to the source take no part
    let source = Boundary::from_loops(loops);
    let dead: Vec<bool> = raw
        .iter()
        .map(|e| {
            let reach = r - keep - 0.5 * e.piece.length();
            reach > 0.0 && source.closer_than(e.piece.midpoint(), reach)
        })
        .collect();

    // intersections
    let boxes: Vec<BBox> = raw.iter().map(|e| e.piece.bbox()).collect();
    let mut splits: Vec<Vec<(f64, usize)>> = vec![Vec::new(); raw.len()];
    for (i, j) in candidate_pairs(&boxes, snap) {
        if dead[i] || dead[j] {
            continue;
        }
        let hits = intersect(&raw[i].piece, &raw[j].piece, snap);
        for h in hits {
            nodes.push(h.point);
            let id = uf.add();
            for (k, t) in [(i, h.tp), (j, h.tq)] {
                let len = raw[k].piece.length();
                if t * len <= snap {
                    uf.union(id, raw[k].from);
                } else if (1.0 - t) * len <= snap {
                    uf.union(id, raw[k].to);
                } else {
                    splits[k].push((t, id));
                }
            }
        }
    }
    merge_close(&nodes, &mut uf, snap);

    // split and filter
    let mut edges: Vec<Edge> = Vec::new();
    for (k, e) in raw.iter().enumerate() {
        if dead[k] {
            continue;
        }
        let s = &mut splits[k];
        s.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut cuts: Vec<(f64, usize)> = Vec::with_capacity(s.len() + 2);
        cuts.push((0.0, e.from));
        cuts.extend(s.iter().copied());
        cuts.push((1.0, e.to));
        let total = e.piece.length();
        // heavily cut pieces test their sub-pieces against a local list
        let local: Option<Vec<(f64, usize)>> = (cuts.len() > 16).then(|| {
            let mid = e.piece.midpoint();
            let mut near: Vec<(f64, usize)> = source
                .near(mid, r + 0.5 * total)
                .into_iter()
                .map(|k| (source.pieces[k].distance(mid), k))
                .collect();
            near.sort_by(|a, b| a.0.total_cmp(&b.0));
            near
        });
        for w in cuts.windows(2) {
            let (t0, n0) = w[0];
            let (t1, n1) = w[1];
            let (r0, r1) = (uf.find(n0), uf.find(n1));
            let len = (t1 - t0) * total;
            if r0 == r1 && len <= 16.0 * snap {
                continue;
            }
            if t1 <= t0 {
                continue;
            }
            let sub = e.piece.sub(t0, t1);
            let m = sub.midpoint();
            let dist_ok = match &local {
                Some(near) => !near.iter().any(|&(_, k)| source.pieces[k].distance(m) < r - keep),
                None => !source.closer_than(m, r - keep),
            };
            if !dist_ok {
                continue;
            }
            let inside = source.contains(m);
            let side_ok = match mode {
                Mode::Erode => inside,
                Mode::Dilate => !inside,
            };
            if !side_ok {
                continue;
            }
            let (a, b) = (nodes[r0], nodes[r1]);
            // sliver arcs become chords so their sweep cannot flip
            let piece = match sub {
                Piece::Arc { .. } if sub.length() <= 64.0 * snap => Piece::Line { a, b },
                _ => sub.with_endpoints(a, b),
            };
            edges.push(Edge {
                piece,
                from: r0,
                to: r1,
            });
        }
    }

    let loops_out = stitch(&edges);
    let mut result = Vec::new();
    for l in loops_out {
        let a = loop_area(&l);
        if a > 0.0 {
            result.push(l);
        } else if mode == Mode::Dilate && -a >= tol.eps_area {
            return Err(Error::HoleInDilation { area: -a });
        }
    }
    Ok(result)
}

fn turn(tin: Point, tout: Point) -> f64 {
    atan2(tin.cross(tout), tin.dot(tout))
}

/// Joins directed edges into closed loops, taking the sharpest left turn at
/// branching nodes. A walk that returns to one of its own nodes closes the
/// sub-loop there and carries on. Open paths are dropped.
fn stitch(edges: &[Edge]) -> Vec<Vec<Piece>> {
    let max_node = edges.iter().map(|e| e.from.max(e.to)).max().unwrap_or(0);
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); max_node + 1];
    for (i, e) in edges.iter().enumerate() {
        outgoing[e.from].push(i);
    }
    let mut used = vec![false; edges.len()];
    // position in the current path of the edge leaving each node
    let mut slot: Vec<Option<usize>> = vec![None; max_node + 1];
    let mut loops = Vec::new();
    for seed in 0..edges.len() {
        if used[seed] {
            continue;
        }
        used[seed] = true;
        let mut path = vec![seed];
        slot[edges[seed].from] = Some(0);
        let mut cur = seed;
        loop {
            let at = edges[cur].to;
            if let Some(k) = slot[at] {
                loops.push(path[k..].iter().map(|&i| edges[i].piece).collect());
                for &i in &path[k + 1..] {
                    slot[edges[i].from] = None;
                }
                path.truncate(k);
                if path.is_empty() {
                    slot[at] = None;
                    break;
                }
            } else {
                slot[at] = Some(path.len());
            }
            let tin = edges[cur].piece.end_tangent();
            let mut best: Option<(f64, usize)> = None;
            for &o in &outgoing[at] {
                if used[o] {
                    continue;
                }
                let phi = turn(tin, edges[o].piece.start_tangent());
                if best.map_or(true, |(b, _)| phi > b) {
                    best = Some((phi, o));
                }
            }
            match best {
                Some((_, o)) => {
                    used[o] = true;
                    path.push(o);
                    cur = o;
                }
                None => {
                    for &i in &path {
                        slot[edges[i].from] = None;
                    }
                    slot[at] = None;
                    break;
                }
            }
        }
    }
    loops
}
