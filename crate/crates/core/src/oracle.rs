//! Brute-force reference minimizers.
//!
//! Exhaustive grid scans with successive zoom-in, used to check the Newton
//! and golden-section solvers. Only the cone evaluators are called here; no
//! code is shared with [`crate::optimize`].

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{check_height, lateral_area_at};
use crate::error::{Error, Result};
use crate::geometry::{Point2, Polygon};

/// Axis-aligned scan box with a refinement schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    lo: Point2,
    hi: Point2,
    resolution: usize,
    refine_rounds: usize,
    refine_zoom: f64,
}

impl GridSpec {
    pub const DEFAULT_RESOLUTION: usize = 201;
    pub const DEFAULT_ROUNDS: usize = 6;
    pub const DEFAULT_ZOOM: f64 = 5.0;

    pub fn new(
        lo: Point2,
        hi: Point2,
        resolution: usize,
        refine_rounds: usize,
        refine_zoom: f64,
    ) -> Result<Self> {
        if resolution < 3 {
            return Err(Error::InvalidGrid(format!(
                "resolution must be at least 3, got {resolution}"
            )));
        }
        if !(refine_zoom > 1.0 && refine_zoom.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "zoom factor must exceed 1, got {refine_zoom}"
            )));
        }
        if !(lo.is_finite() && hi.is_finite() && hi.x > lo.x && hi.y > lo.y) {
            return Err(Error::InvalidGrid("box must have positive extent".into()));
        }
        Ok(Self {
            lo,
            hi,
            resolution,
            refine_rounds,
            refine_zoom,
        })
    }

    /// Bounding box padded by one diameter on every side, default schedule.
    pub fn around(poly: &Polygon) -> Self {
        let (lo, hi) = poly.bounding_box();
        let pad = Point2::new(poly.diameter(), poly.diameter());
        Self {
            lo: lo - pad,
            hi: hi + pad,
            resolution: Self::DEFAULT_RESOLUTION,
            refine_rounds: Self::DEFAULT_ROUNDS,
            refine_zoom: Self::DEFAULT_ZOOM,
        }
    }

    pub fn with_schedule(
        self,
        resolution: usize,
        refine_rounds: usize,
        refine_zoom: f64,
    ) -> Result<Self> {
        Self::new(self.lo, self.hi, resolution, refine_rounds, refine_zoom)
    }

    pub fn lo(&self) -> Point2 {
        self.lo
    }

    pub fn hi(&self) -> Point2 {
        self.hi
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn refine_rounds(&self) -> usize {
        self.refine_rounds
    }

    pub fn refine_zoom(&self) -> f64 {
        self.refine_zoom
    }

    /// Grid step of the last refinement round (larger axis).
    pub fn final_spacing(&self) -> f64 {
        let extent = (self.hi.x - self.lo.x).max(self.hi.y - self.lo.y);
        extent / self.refine_zoom.powi(self.refine_rounds as i32) / (self.resolution - 1) as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridMinimum {
    pub point: Point2,
    pub value: f64,
    /// Grid step of the final round.
    pub spacing: f64,
    /// Best value after each round, coarsest first.
    pub round_values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridRatioMinimum {
    pub point: Point2,
    pub height: f64,
    pub value: f64,
    pub spacing: f64,
    pub height_spacing: f64,
}

/// `(value, x, y)` ordering: smaller value wins, ties go to the
/// lexicographically smallest point so the parallel reduction is
/// deterministic.
fn better(a: &(f64, Point2), b: &(f64, Point2)) -> Ordering {
    a.0.total_cmp(&b.0)
        .then(a.1.x.total_cmp(&b.1.x))
        .then(a.1.y.total_cmp(&b.1.y))
}

fn lerp(lo: f64, hi: f64, i: usize, n: usize) -> f64 {
    (lo + (hi - lo) * (i as f64 / (n - 1) as f64)).min(hi)
}

fn scan<F>(lo: Point2, hi: Point2, n: usize, f: &F) -> (f64, Point2)
where
    F: Fn(Point2) -> f64 + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|i| {
            let x = lerp(lo.x, hi.x, i, n);
            (0..n)
                .map(|j| {
                    let p = Point2::new(x, lerp(lo.y, hi.y, j, n));
                    (f(p), p)
                })
                .min_by(better)
                .expect("grid row is nonempty")
        })
        .min_by(better)
        .expect("grid is nonempty")
}

/// Sub-box of `outer` with half-widths `half`, centered on `c` as far as
/// the outer box allows.
fn clamp_box(c: Point2, half: Point2, outer_lo: Point2, outer_hi: Point2) -> (Point2, Point2) {
    let axis = |c: f64, half: f64, lo: f64, hi: f64| {
        let start = (c - half).max(lo);
        let start = start.min(hi - 2.0 * half);
        (start, (start + 2.0 * half).min(hi))
    };
    let (x0, x1) = axis(c.x, half.x, outer_lo.x, outer_hi.x);
    let (y0, y1) = axis(c.y, half.y, outer_lo.y, outer_hi.y);
    (Point2::new(x0, y0), Point2::new(x1, y1))
}

/// Zooming grid search for the minimum of `f` inside the box of `spec`.
pub fn grid_minimize<F>(f: F, spec: &GridSpec) -> GridMinimum
where
    F: Fn(Point2) -> f64 + Sync,
{
    let n = spec.resolution;
    let (mut lo, mut hi) = (spec.lo, spec.hi);
    let mut best = scan(lo, hi, n, &f);
    let mut round_values = vec![best.0];
    for _ in 0..spec.refine_rounds {
        let half = (hi - lo) * (0.5 / spec.refine_zoom);
        (lo, hi) = clamp_box(best.1, half, spec.lo, spec.hi);
        let candidate = scan(lo, hi, n, &f);
        if better(&candidate, &best) == Ordering::Less {
            best = candidate;
        }
        round_values.push(best.0);
    }
    GridMinimum {
        point: best.1,
        value: best.0,
        spacing: ((hi.x - lo.x).max(hi.y - lo.y)) / (n - 1) as f64,
        round_values,
    }
}

/// Grid minimum of the boundary area over apex projections at `height`.
pub fn grid_min_boundary(poly: &Polygon, height: f64, spec: &GridSpec) -> Result<GridMinimum> {
    check_height(height)?;
    let base = poly.area();
    Ok(grid_minimize(
        |p| base + lateral_area_at(poly, p, height),
        spec,
    ))
}

/// Grid minimum of `(boundary area)³ / volume²` over apex projections and
/// heights in `h_range`.
///
/// Heights are sampled uniformly; around the best height the range shrinks
/// by the spec's zoom factor for the same number of rounds as the spatial
/// grid.
pub fn grid_min_ratio(
    poly: &Polygon,
    spec_xy: &GridSpec,
    h_range: (f64, f64),
    h_samples: usize,
) -> Result<GridRatioMinimum> {
    let (h_lo, h_hi) = h_range;
    if !(h_lo > 0.0 && h_hi > h_lo && h_hi.is_finite()) {
        return Err(Error::InvalidGrid(format!(
            "height range must satisfy 0 < lo < hi, got ({h_lo}, {h_hi})"
        )));
    }
    if h_samples < 3 {
        return Err(Error::InvalidGrid(format!(
            "need at least 3 height samples, got {h_samples}"
        )));
    }
    let base = poly.area();
    let ratio_at = |h: f64| -> (f64, GridMinimum) {
        let m = grid_minimize(|p| base + lateral_area_at(poly, p, h), spec_xy);
        let volume = base * h / 3.0;
        (m.value.powi(3) / (volume * volume), m)
    };

    let (mut lo, mut hi) = (h_lo, h_hi);
    let mut best: Option<(f64, f64, GridMinimum)> = None;
    for _ in 0..=spec_xy.refine_rounds {
        for k in 0..h_samples {
            let h = lerp(lo, hi, k, h_samples);
            let (value, m) = ratio_at(h);
            if best.as_ref().is_none_or(|(v, _, _)| value < *v) {
                best = Some((value, h, m));
            }
        }
        let center = best.as_ref().expect("sampled at least once").1;
        let half = 0.5 * (hi - lo) / spec_xy.refine_zoom;
        let start = (center - half).max(h_lo).min(h_hi - 2.0 * half);
        (lo, hi) = (start, (start + 2.0 * half).min(h_hi));
    }
    let (value, height, m) = best.expect("sampled at least once");
    Ok(GridRatioMinimum {
        point: m.point,
        height,
        value,
        spacing: m.spacing,
        height_spacing: (hi - lo) * spec_xy.refine_zoom / (h_samples - 1) as f64,
    })
}

/// Central differences `(f(x + s e_k) − f(x − s e_k)) / 2s` per axis.
pub fn finite_diff_gradient<F>(objective: F, point: Point2, step: f64) -> Result<Point2>
where
    F: Fn(Point2) -> f64,
{
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::NonpositiveArgument(step));
    }
    let dx = Point2::new(step, 0.0);
    let dy = Point2::new(0.0, step);
    Ok(Point2::new(
        (objective(point + dx) - objective(point - dx)) / (2.0 * step),
        (objective(point + dy) - objective(point - dy)) / (2.0 * step),
    ))
}
