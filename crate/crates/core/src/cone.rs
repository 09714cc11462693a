//! Cones over a polygon base with apex at positive height.
//!
//! The cone over a polygon with apex `p = (D, h)` has the base polygon plus
//! one lateral triangle per edge as its boundary. The lateral triangle over
//! edge `i` has base length `a_i` and slant height `√(d_i² + h²)`, where
//! `d_i` is the signed distance of `D` to the edge line. The ratio
//! `f = (boundary area)³ / volume²` is the planar (`n = 2`) case of
//! `(boundary)^(n+1) / volume^n` and is invariant under scaling.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{Point2, Polygon};

/// Candidate cone vertex: projection onto the base plane and height above it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Apex {
    pub projection: Point2,
    pub height: f64,
}

impl Apex {
    pub fn new(projection: Point2, height: f64) -> Result<Self> {
        check_height(height)?;
        Ok(Self { projection, height })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConeMetrics {
    pub base_area: f64,
    pub lateral_area: f64,
    pub boundary_area: f64,
    pub volume: f64,
    pub ratio: f64,
}

impl ConeMetrics {
    pub fn evaluate(poly: &Polygon, apex: &Apex) -> Self {
        let base_area = poly.area();
        let lateral_area = lateral_area(poly, apex);
        let boundary_area = base_area + lateral_area;
        let volume = base_area * apex.height / 3.0;
        Self {
            base_area,
            lateral_area,
            boundary_area,
            volume,
            ratio: boundary_area.powi(3) / (volume * volume),
        }
    }
}

pub(crate) fn check_height(height: f64) -> Result<()> {
    // Written so that NaN is rejected too.
    if height > 0.0 && height.is_finite() {
        Ok(())
    } else {
        Err(Error::NonpositiveHeight(height))
    }
}

/// `Σ ½ a_i √(d_i² + h²)` with the apex projection at `point`.
///
/// Used directly by the solvers and the grid oracle; the height is assumed
/// positive.
#[inline]
pub fn lateral_area_at(poly: &Polygon, point: Point2, height: f64) -> f64 {
    let h2 = height * height;
    0.5 * poly
        .edges()
        .iter()
        .map(|e| {
            let d = e.signed_distance(point);
            e.length * (d * d + h2).sqrt()
        })
        .sum::<f64>()
}

pub fn lateral_area(poly: &Polygon, apex: &Apex) -> f64 {
    lateral_area_at(poly, apex.projection, apex.height)
}

/// Total boundary area: base plus lateral faces.
pub fn boundary_area(poly: &Polygon, apex: &Apex) -> f64 {
    poly.area() + lateral_area(poly, apex)
}

pub fn cone_volume(poly: &Polygon, height: f64) -> Result<f64> {
    check_height(height)?;
    Ok(poly.area() * height / 3.0)
}

/// `boundary_area³ / volume²`.
pub fn isoperimetric_ratio(poly: &Polygon, apex: &Apex) -> Result<f64> {
    check_height(apex.height)?;
    Ok(ConeMetrics::evaluate(poly, apex).ratio)
}

/// `(1 + √(1 + t²))³ / t²`.
///
/// For a triangle with inradius `r` and apex over the incenter at height
/// `h`, the ratio equals `(9 S / r²) · phi(h / r)`. Its minimum is 8 at
/// `t = 2√2`.
pub fn phi(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::NonpositiveArgument(t));
    }
    Ok((1.0 + (1.0 + t * t).sqrt()).powi(3) / (t * t))
}

/// Spread `max_i s_i − min_i s_i` of `s_i = d_i / √(d_i² + h²)`.
///
/// `s_i` is the cosine of the angle between lateral face `i` and the base
/// plane, signed by the side of the edge line. The spread vanishes exactly
/// when all faces meet the base at the same angle, the stationarity
/// condition of the fixed-height problem for a convex base.
pub fn equal_angle_residual(poly: &Polygon, point: Point2, height: f64) -> Result<f64> {
    check_height(height)?;
    let h2 = height * height;
    let (lo, hi) = poly
        .edges()
        .iter()
        .map(|e| {
            let d = e.signed_distance(point);
            d / (d * d + h2).sqrt()
        })
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| {
            (lo.min(s), hi.max(s))
        });
    Ok(hi - lo)
}
