#![allow(dead_code)]

use conecenter::{Point2, Polygon};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const TRAPEZOID: [[f64; 2]; 4] = [[0.0, -1.0], [2.0, -2.0], [2.0, 2.0], [0.0, 1.0]];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn trapezoid() -> Polygon {
    Polygon::from_coords(&TRAPEZOID).unwrap()
}

pub fn rel_err(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Triangle with vertices uniform in `[-10, 10]²` and area at least 0.1.
pub fn random_triangle(rng: &mut impl Rng) -> Polygon {
    loop {
        let pts: Vec<Point2> = (0..3)
            .map(|_| Point2::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)))
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            if p.area() >= 0.1 {
                return p;
            }
        }
    }
}

/// Convex polygon with `m` vertices: sorted random angles on a circle,
/// pushed through a random linear map and shift.
pub fn random_convex(rng: &mut impl Rng, m: usize) -> Polygon {
    loop {
        let mut angles: Vec<f64> = (0..m)
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let min_gap = angles
            .windows(2)
            .map(|w| w[1] - w[0])
            .chain(std::iter::once(
                angles[0] + std::f64::consts::TAU - angles[m - 1],
            ))
            .fold(f64::INFINITY, f64::min);
        if min_gap < 0.15 {
            continue;
        }
        let radius = rng.gen_range(1.0..4.0);
        let (sx, sy) = (rng.gen_range(0.5..1.5), rng.gen_range(0.5..1.5));
        let shear = rng.gen_range(-0.5..0.5);
        let shift = Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let pts: Vec<Point2> = angles
            .iter()
            .map(|&t| {
                let (x, y) = (radius * t.cos(), radius * t.sin());
                Point2::new(sx * x + shear * y, sy * y) + shift
            })
            .collect();
        if let Ok(p) = Polygon::new(pts) {
            if p.is_convex() {
                return p;
            }
        }
    }
}

/// Rotation by `theta` followed by scaling by `scale` and translation.
pub fn similarity(theta: f64, scale: f64, shift: Point2) -> impl Fn(Point2) -> Point2 {
    let (s, c) = theta.sin_cos();
    move |p| Point2::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift
}

pub fn transform(poly: &Polygon, f: &impl Fn(Point2) -> Point2) -> Polygon {
    Polygon::new(poly.vertices().iter().map(|&p| f(p)).collect::<Vec<_>>()).unwrap()
}

pub fn random_point_in_box(rng: &mut impl Rng, poly: &Polygon, pad: f64) -> Point2 {
    let (lo, hi) = poly.bounding_box();
    Point2::new(
        rng.gen_range(lo.x - pad..hi.x + pad),
        rng.gen_range(lo.y - pad..hi.y + pad),
    )
}
