//! Simple-polygon checks shared by quadrilaterals and hexagons.

use std::f64::consts::PI;

use crate::error::{DegenerateKind, GeomError};
use crate::geom::{cross, Point};

/// Relative threshold for zero-length edges and collinear vertices.
const DEGENERACY_EPS: f64 = 1e-12;

pub fn signed_area(pts: &[Point]) -> f64 {
    let n = pts.len();
    0.5 * (0..n).map(|i| cross(pts[i], pts[(i + 1) % n])).sum::<f64>()
}

/// Largest pairwise distance.
pub fn diameter(pts: &[Point]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            d = d.max((p - q).norm());
        }
    }
    d
}

/// Hausdorff distance between two finite point sets.
pub fn hausdorff(a: &[Point], b: &[Point]) -> f64 {
    let directed = |x: &[Point], y: &[Point]| {
        x.iter()
            .map(|p| {
                y.iter()
                    .map(|q| (p - q).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

/// Keeps the first vertex and reverses the rest: `[a1, a2, …, an] → [a1, an, …, a2]`.
pub fn reversed<const N: usize>(pts: [Point; N]) -> [Point; N] {
    std::array::from_fn(|k| pts[(N - k) % N])
}

fn orientation(a: Point, b: Point, c: Point) -> f64 {
    cross(b - a, c - a)
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    p.re >= a.re.min(b.re)
        && p.re <= a.re.max(b.re)
        && p.im >= a.im.min(b.im)
        && p.im <= a.im.max(b.im)
}

/// Closed-segment intersection test (touching counts).
pub fn segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool {
    let d1 = orientation(q1, q2, p1);
    let d2 = orientation(q1, q2, p2);
    let d3 = orientation(p1, p2, q1);
    let d4 = orientation(p1, p2, q2);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    (d1 == 0.0 && on_segment(q1, q2, p1))
        || (d2 == 0.0 && on_segment(q1, q2, p2))
        || (d3 == 0.0 && on_segment(p1, p2, q1))
        || (d4 == 0.0 && on_segment(p1, p2, q2))
}

/// Validates a labelled polygon and returns it counterclockwise, together
/// with whether the vertex order had to be reversed.
pub fn normalize<const N: usize>(pts: [Point; N]) -> Result<([Point; N], bool), GeomError> {
    if let Some(vertex) = pts
        .iter()
        .position(|p| !p.re.is_finite() || !p.im.is_finite())
    {
        return Err(GeomError::NonFinite { vertex: vertex + 1 });
    }
    let diam = diameter(&pts);
    if diam == 0.0 {
        return Err(GeomError::Degenerate {
            vertex: 1,
            kind: DegenerateKind::ZeroDiameter,
        });
    }
    for i in 0..N {
        if (pts[(i + 1) % N] - pts[i]).norm() <= DEGENERACY_EPS * diam {
            return Err(GeomError::Degenerate {
                vertex: i + 1,
                kind: DegenerateKind::ZeroEdge,
            });
        }
    }
    for i in 0..N {
        let e_in = pts[i] - pts[(i + N - 1) % N];
        let e_out = pts[(i + 1) % N] - pts[i];
        if cross(e_in, e_out).abs() <= DEGENERACY_EPS * e_in.norm() * e_out.norm() {
            return Err(GeomError::Degenerate {
                vertex: i + 1,
                kind: DegenerateKind::CollinearVertex,
            });
        }
    }
    for i in 0..N {
        for j in i + 2..N {
            // Edges i and j share a vertex when they are cyclically adjacent.
            if i == 0 && j == N - 1 {
                continue;
            }
            if segments_intersect(pts[i], pts[(i + 1) % N], pts[j], pts[(j + 1) % N]) {
                return Err(GeomError::NotSimple {
                    first: i + 1,
                    second: j + 1,
                });
            }
        }
    }
    if signed_area(&pts) < 0.0 {
        Ok((reversed(pts), true))
    } else {
        Ok((pts, false))
    }
}

/// Interior angles of a counterclockwise simple polygon, each in `(0, 2π)`;
/// reflex vertices get values above `π`.
pub fn interior_angles<const N: usize>(pts: &[Point; N]) -> Result<[f64; N], GeomError> {
    let mut out = [0.0; N];
    for i in 0..N {
        let e_in = pts[i] - pts[(i + N - 1) % N];
        let e_out = pts[(i + 1) % N] - pts[i];
        let turn = (e_out * e_in.conj()).arg();
        let interior = PI - turn;
        if interior <= 1e-12 || interior >= 2.0 * PI - 1e-12 {
            return Err(GeomError::Degenerate {
                vertex: i + 1,
                kind: DegenerateKind::ZeroAngle,
            });
        }
        out[i] = interior;
    }
    Ok(out)
}

pub fn is_convex<const N: usize>(pts: &[Point; N]) -> bool {
    (0..N).all(|i| {
        let e_in = pts[i] - pts[(i + N - 1) % N];
        let e_out = pts[(i + 1) % N] - pts[i];
        cross(e_in, e_out) > 0.0
    })
}
