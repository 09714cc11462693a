//! Planar polygons, their edge lines, and classical centers.
//!
//! A [`Polygon`] is validated once at construction: it must be simple, have
//! positive area, and is stored counterclockwise so that every edge's inward
//! normal is the left normal of its direction. Signed distances to edge
//! lines are positive on the interior side.

use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lp;

/// A point (or vector) in the plane. Serialized as `[x, y]`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point2 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// Supporting line of one polygon edge.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EdgeLine {
    /// Unit normal pointing to the interior side.
    pub unit_normal: Point2,
    /// `signed_distance(x) = unit_normal · x + offset`.
    pub offset: f64,
    pub length: f64,
}

impl EdgeLine {
    fn through(start: Point2, end: Point2) -> Self {
        let dir = end - start;
        let length = dir.norm();
        let unit_normal = Point2::new(-dir.y / length, dir.x / length);
        Self {
            unit_normal,
            offset: -unit_normal.dot(start),
            length,
        }
    }

    #[inline]
    pub fn signed_distance(&self, p: Point2) -> f64 {
        self.unit_normal.dot(p) + self.offset
    }
}

/// Signed distances of one point to every edge line, in edge order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceProfile {
    pub point: Point2,
    pub distances: Vec<f64>,
}

impl DistanceProfile {
    pub fn min(&self) -> f64 {
        self.distances.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn all_positive(&self) -> bool {
        self.distances.iter().all(|&d| d > 0.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IncircleResult {
    pub center: Point2,
    pub radius: f64,
}

/// A max-min point: center of a largest inscribed disk of a convex polygon.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChebyshevResult {
    pub center: Point2,
    pub radius: f64,
}

/// On-disk polygon format: `{"vertices": [[x0, y0], [x1, y1], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonFile {
    pub vertices: Vec<[f64; 2]>,
}

/// Degeneracy threshold on `area / diameter²`.
const MIN_RELATIVE_AREA: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point2>,
    edges: Vec<EdgeLine>,
    area: f64,
    perimeter: f64,
    diameter: f64,
}

impl Polygon {
    /// Validates and normalizes a vertex loop.
    ///
    /// The loop is implicitly closed; do not repeat the first vertex. A
    /// clockwise loop is reversed. Fails with [`Error::DegenerateInput`] for
    /// fewer than three points, non-finite or repeated consecutive points,
    /// and (near-)zero area, and with [`Error::SelfIntersecting`] when two
    /// edges cross or overlap.
    pub fn new(points: impl Into<Vec<Point2>>) -> Result<Self> {
        let mut vertices: Vec<Point2> = points.into();
        let m = vertices.len();
        if m < 3 {
            return Err(Error::DegenerateInput(format!(
                "a polygon needs at least 3 vertices, got {m}"
            )));
        }
        if let Some(i) = vertices.iter().position(|p| !p.is_finite()) {
            return Err(Error::DegenerateInput(format!(
                "vertex {i} has a non-finite coordinate"
            )));
        }
        for i in 0..m {
            if vertices[i] == vertices[(i + 1) % m] {
                return Err(Error::DegenerateInput(format!(
                    "vertices {i} and {} coincide",
                    (i + 1) % m
                )));
            }
        }

        let diameter = diameter(&vertices);
        let signed = signed_area(&vertices);
        if signed.abs() <= MIN_RELATIVE_AREA * diameter * diameter {
            return Err(Error::DegenerateInput(
                "polygon has zero area (collinear vertices)".into(),
            ));
        }
        if signed < 0.0 {
            vertices.reverse();
        }
        check_simple(&vertices)?;

        let edges: Vec<EdgeLine> = (0..m)
            .map(|i| EdgeLine::through(vertices[i], vertices[(i + 1) % m]))
            .collect();
        let perimeter = edges.iter().map(|e| e.length).sum();
        Ok(Self {
            area: signed.abs(),
            vertices,
            edges,
            perimeter,
            diameter,
        })
    }

    pub fn from_coords(coords: &[[f64; 2]]) -> Result<Self> {
        Self::new(coords.iter().copied().map(Point2::from).collect::<Vec<_>>())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: PolygonFile = serde_json::from_str(text)?;
        Self::from_coords(&file.vertices)
    }

    pub fn to_file(&self) -> PolygonFile {
        PolygonFile {
            vertices: self.vertices.iter().map(|&p| p.into()).collect(),
        }
    }

    /// Vertices in counterclockwise order.
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1` (cyclically).
    pub fn edges(&self) -> &[EdgeLine] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn area(&self) -> f64 {
        self.area
    }

    pub fn perimeter(&self) -> f64 {
        self.perimeter
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> f64 {
        self.diameter
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    /// True when every turn is left or straight.
    pub fn is_convex(&self) -> bool {
        let m = self.vertices.len();
        (0..m).all(|i| {
            let prev = self.vertices[(i + m - 1) % m];
            let cur = self.vertices[i];
            let next = self.vertices[(i + 1) % m];
            let a = cur - prev;
            let b = next - cur;
            a.cross(b) >= -1e-12 * a.norm() * b.norm()
        })
    }

    /// `(lower-left, upper-right)` corners of the axis-aligned bounding box.
    pub fn bounding_box(&self) -> (Point2, Point2) {
        let mut lo = Point2::new(f64::INFINITY, f64::INFINITY);
        let mut hi = Point2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in &self.vertices {
            lo = Point2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        (lo, hi)
    }

    pub fn signed_distances(&self, point: Point2) -> DistanceProfile {
        DistanceProfile {
            point,
            distances: self
                .edges
                .iter()
                .map(|e| e.signed_distance(point))
                .collect(),
        }
    }

    /// Even-odd ray casting. Points on the boundary may land either way.
    pub fn contains(&self, p: Point2) -> bool {
        let m = self.vertices.len();
        let mut inside = false;
        let mut j = m - 1;
        for i in 0..m {
            let a = self.vertices[i];
            let b = self.vertices[j];
            if (a.y > p.y) != (b.y > p.y) {
                let x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if p.x < x_cross {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Area centroid.
    pub fn centroid(&self) -> Point2 {
        let m = self.vertices.len();
        let mut cx = 0.0;
        let mut cy = 0.0;
        let mut twice_area = 0.0;
        // Relative to the first vertex to limit cancellation far from the origin.
        let origin = self.vertices[0];
        for i in 0..m {
            let p = self.vertices[i] - origin;
            let q = self.vertices[(i + 1) % m] - origin;
            let cross = p.cross(q);
            twice_area += cross;
            cx += (p.x + q.x) * cross;
            cy += (p.y + q.y) * cross;
        }
        let scale = 1.0 / (3.0 * twice_area);
        origin + Point2::new(cx * scale, cy * scale)
    }

    /// Closed-form incenter `(a·A + b·B + c·C) / (a + b + c)` and inradius
    /// `2·area / perimeter`.
    pub fn triangle_incenter(&self) -> Result<IncircleResult> {
        if !self.is_triangle() {
            return Err(Error::NotATriangle(self.vertices.len()));
        }
        let [a_pt, b_pt, c_pt] = [self.vertices[0], self.vertices[1], self.vertices[2]];
        // Edge 0 is AB, edge 1 is BC, edge 2 is CA.
        let c = self.edges[0].length;
        let a = self.edges[1].length;
        let b = self.edges[2].length;
        let p = a + b + c;
        let center = (a_pt * a + b_pt * b + c_pt * c) * (1.0 / p);
        Ok(IncircleResult {
            center,
            radius: 2.0 * self.area / p,
        })
    }

    /// Largest inscribed disk of a convex polygon.
    ///
    /// Solves `max ρ s.t. n_i·x + o_i >= ρ` by the simplex method. When the
    /// optimal set is a segment any point of it may be returned.
    pub fn chebyshev_center(&self) -> Result<ChebyshevResult> {
        if !self.is_convex() {
            return Err(Error::NotConvex);
        }
        // Shift to the centroid so the origin is strictly feasible and the
        // constraint data is well scaled.
        let anchor = self.centroid();
        let rows: Vec<Vec<f64>> = self
            .edges
            .iter()
            .map(|e| vec![-e.unit_normal.x, -e.unit_normal.y, 1.0])
            .collect();
        let rhs: Vec<f64> = self
            .edges
            .iter()
            .map(|e| e.signed_distance(anchor))
            .collect();
        let sol = lp::maximize(&[0.0, 0.0, 1.0], &rows, &rhs)
            .map_err(|e| Error::DegenerateInput(format!("inscribed-disk program failed: {e}")))?;
        let center = anchor + Point2::new(sol.x[0], sol.x[1]);
        let radius = self.signed_distances(center).min();
        if radius <= 0.0 {
            return Err(Error::DegenerateInput(
                "polygon has no interior point".into(),
            ));
        }
        Ok(ChebyshevResult { center, radius })
    }
}

fn signed_area(vertices: &[Point2]) -> f64 {
    let m = vertices.len();
    let origin = vertices[0];
    let twice: f64 = (0..m)
        .map(|i| (vertices[i] - origin).cross(vertices[(i + 1) % m] - origin))
        .sum();
    0.5 * twice
}

fn diameter(vertices: &[Point2]) -> f64 {
    let mut best = 0.0_f64;
    for (i, &p) in vertices.iter().enumerate() {
        for &q in &vertices[i + 1..] {
            best = best.max(p.distance(q));
        }
    }
    best
}

fn orient(a: Point2, b: Point2, c: Point2) -> f64 {
    (b - a).cross(c - a)
}

fn on_segment(a: Point2, b: Point2, p: Point2) -> bool {
    p.x >= a.x.min(b.x) && p.x <= a.x.max(b.x) && p.y >= a.y.min(b.y) && p.y <= a.y.max(b.y)
}

/// Closed-segment intersection test (touching counts).
fn segments_intersect(p1: Point2, p2: Point2, q1: Point2, q2: Point2) -> bool {
    let d1 = orient(q1, q2, p1);
    let d2 = orient(q1, q2, p2);
    let d3 = orient(p1, p2, q1);
    let d4 = orient(p1, p2, q2);
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

/// O(m²) pairwise edge test.
fn check_simple(vertices: &[Point2]) -> Result<()> {
    let m = vertices.len();
    let seg = |i: usize| (vertices[i], vertices[(i + 1) % m]);
    for i in 0..m {
        // Adjacent edges share a vertex; they only conflict when the second
        // folds back onto the first.
        let (a0, a1) = seg(i);
        let (_, b1) = seg((i + 1) % m);
        let u = a1 - a0;
        let v = b1 - a1;
        if u.cross(v).abs() <= 1e-14 * u.norm() * v.norm() && u.dot(v) < 0.0 {
            return Err(Error::SelfIntersecting {
                first: i,
                second: (i + 1) % m,
            });
        }
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue;
            }
            let (b0, b1) = seg(j);
            if segments_intersect(a0, a1, b0, b1) {
                return Err(Error::SelfIntersecting {
                    first: i,
                    second: j,
                });
            }
        }
    }
    Ok(())
}
