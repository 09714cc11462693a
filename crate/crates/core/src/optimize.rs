//! Minimization of boundary area over apex positions.
//!
//! At fixed height `h` the lateral area `g(x) = Σ ½ a_i √(ℓ_i(x)² + h²)`,
//! with `ℓ_i` the signed-distance affine form of edge `i`, is smooth and
//! convex in the apex projection `x`. [`center_at_height`] minimizes it by
//! damped Newton. [`optimal_cone`] then minimizes the scale-free ratio
//! `F(h) = (S + min_x g)³ / (S h / 3)²` over the height by golden-section
//! search.

use rayon::prelude::*;
use serde::Serialize;

use crate::cone::{check_height, Apex, ConeMetrics};
use crate::error::{Error, Result};
use crate::geometry::{DistanceProfile, Point2, Polygon};

pub const DEFAULT_TOL: f64 = 1e-10;

const MAX_NEWTON_ITERATIONS: usize = 200;
const MAX_HALVINGS: usize = 60;
const ARMIJO_SLOPE: f64 = 1e-4;
const MAX_CONDITION: f64 = 1e12;
const POLISH_STEPS: usize = 3;
/// Height ladder `h0 · 2^k` for `k` in `-LADDER..=LADDER`.
const LADDER: i32 = 6;
const INV_GOLDEN: f64 = 0.618_033_988_749_894_8;

/// Lateral area of the cone as a function of the apex projection at a fixed
/// height, with analytic derivatives.
#[derive(Debug, Clone, Copy)]
pub struct LateralObjective<'a> {
    poly: &'a Polygon,
    height: f64,
}

impl<'a> LateralObjective<'a> {
    pub fn new(poly: &'a Polygon, height: f64) -> Result<Self> {
        check_height(height)?;
        Ok(Self { poly, height })
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn value(&self, x: Point2) -> f64 {
        crate::cone::lateral_area_at(self.poly, x, self.height)
    }

    /// `Σ ½ a_i ℓ_i n_i / √(ℓ_i² + h²)`.
    pub fn gradient(&self, x: Point2) -> Point2 {
        let h2 = self.height * self.height;
        self.poly.edges().iter().fold(Point2::default(), |acc, e| {
            let d = e.signed_distance(x);
            acc + e.unit_normal * (0.5 * e.length * d / (d * d + h2).sqrt())
        })
    }

    /// `Σ ½ a_i h² n_i n_iᵀ / (ℓ_i² + h²)^{3/2}` as `[xx, xy, yy]`.
    pub fn hessian(&self, x: Point2) -> [f64; 3] {
        let h2 = self.height * self.height;
        self.poly.edges().iter().fold([0.0; 3], |[xx, xy, yy], e| {
            let d = e.signed_distance(x);
            let q = d * d + h2;
            let w = 0.5 * e.length * h2 / (q * q.sqrt());
            let n = e.unit_normal;
            [xx + w * n.x * n.x, xy + w * n.x * n.y, yy + w * n.y * n.y]
        })
    }
}

/// Minimizer of the boundary area at one height.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CenterResult {
    pub center: Point2,
    pub height: f64,
    pub boundary_area: f64,
    pub gradient_norm: f64,
    pub distance_profile: DistanceProfile,
    pub iterations: usize,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OptimalCone {
    pub center: Point2,
    pub height: f64,
    pub ratio: f64,
    /// Height in units of the inradius; triangles only.
    pub height_over_inradius: Option<f64>,
    /// Every inner solve performed, in evaluation order.
    pub inner_results: Vec<CenterResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub height: f64,
    pub center: CenterResult,
    pub ratio: f64,
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Newton direction `-H⁻¹ g`, or a scaled steepest-descent direction when
/// the Hessian is near-singular.
fn descent_direction(grad: Point2, [xx, xy, yy]: [f64; 3]) -> Point2 {
    let tr = xx + yy;
    let det = xx * yy - xy * xy;
    let disc = ((xx - yy) * (xx - yy) / 4.0 + xy * xy).sqrt();
    let lambda_max = tr / 2.0 + disc;
    let lambda_min = det / lambda_max;
    if lambda_min > 0.0 && lambda_max / lambda_min <= MAX_CONDITION {
        Point2::new(
            -(yy * grad.x - xy * grad.y) / det,
            -(xx * grad.y - xy * grad.x) / det,
        )
    } else {
        -grad * (1.0 / lambda_max.max(f64::MIN_POSITIVE))
    }
}

/// Minimizes the boundary area over apex projections at fixed `height`.
///
/// Starts from the area centroid and stops once
/// `‖∇g‖ <= tol · perimeter / 2`. If the iteration budget runs out, or the
/// line search can make no further progress, the best iterate is returned
/// inside [`Error::MaxIterations`].
pub fn center_at_height(poly: &Polygon, height: f64, tol: f64) -> Result<CenterResult> {
    check_tol(tol)?;
    let objective = LateralObjective::new(poly, height)?;
    let threshold = tol * poly.perimeter() / 2.0;

    let mut x = poly.centroid();
    let mut value = objective.value(x);
    let mut grad = objective.gradient(x);
    let mut iterations = 0;
    let mut converged = grad.norm() <= threshold;

    while !converged && iterations < MAX_NEWTON_ITERATIONS {
        iterations += 1;
        let dir = descent_direction(grad, objective.hessian(x));
        let slope = grad.dot(dir);
        let noise = 8.0 * f64::EPSILON * value.abs();

        let mut step = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let trial = x + dir * step;
            let trial_value = objective.value(trial);
            if trial_value <= value + ARMIJO_SLOPE * step * slope {
                accepted = Some((trial, trial_value, objective.gradient(trial)));
                break;
            }
            // Near the optimum the decrease drops below rounding; accept a
            // step that is flat to rounding but shrinks the gradient.
            if trial_value <= value + noise {
                let trial_grad = objective.gradient(trial);
                if trial_grad.norm() < grad.norm() {
                    accepted = Some((trial, trial_value, trial_grad));
                    break;
                }
            }
            step *= 0.5;
        }
        let Some((next, next_value, next_grad)) = accepted else {
            break;
        };
        x = next;
        value = next_value;
        grad = next_grad;
        converged = grad.norm() <= threshold;
    }

    // Polish: a converged gradient can still leave a visible position error
    // where the Hessian is weak (small h, far edges). Full Newton steps are
    // kept only while they shrink the gradient.
    if converged {
        for _ in 0..POLISH_STEPS {
            let trial = x + descent_direction(grad, objective.hessian(x));
            let trial_grad = objective.gradient(trial);
            if trial_grad.norm() >= grad.norm() {
                break;
            }
            x = trial;
            grad = trial_grad;
            value = objective.value(x);
        }
    }

    let result = CenterResult {
        center: x,
        height,
        boundary_area: poly.area() + value,
        gradient_norm: grad.norm(),
        distance_profile: poly.signed_distances(x),
        iterations,
        converged,
    };
    if converged {
        Ok(result)
    } else {
        Err(Error::MaxIterations(Box::new(result)))
    }
}

/// Runs independent fixed-height solves, in parallel, preserving input
/// order. A failure at one height does not abort the others.
pub fn height_sweep(poly: &Polygon, heights: &[f64], tol: f64) -> Vec<Result<SweepEntry>> {
    heights
        .par_iter()
        .map(|&height| {
            let center = center_at_height(poly, height, tol)?;
            let ratio = ratio_at(poly, &center);
            Ok(SweepEntry {
                height,
                center,
                ratio,
            })
        })
        .collect()
}

fn ratio_at(poly: &Polygon, result: &CenterResult) -> f64 {
    let volume = poly.area() * result.height / 3.0;
    result.boundary_area.powi(3) / (volume * volume)
}

/// Starting height for the outer search: the inradius of a triangle, the
/// inscribed-disk radius of a convex polygon, `2·area / perimeter` otherwise.
fn reference_height(poly: &Polygon) -> Result<f64> {
    if poly.is_triangle() {
        return Ok(poly.triangle_incenter()?.radius);
    }
    if poly.is_convex() {
        return Ok(poly.chebyshev_center()?.radius);
    }
    Ok(2.0 * poly.area() / poly.perimeter())
}

/// Finds the isoperimetrically optimal cone: the apex minimizing
/// `(boundary area)³ / volume²` over all positive heights.
///
/// `F(h)` is evaluated by a full inner solve at each height. A ladder of
/// heights `h0·2^k`, `|k| <= 6`, brackets the minimum; golden-section search
/// then narrows the bracket to `tol` relative width.
pub fn optimal_cone(poly: &Polygon, tol: f64) -> Result<OptimalCone> {
    check_tol(tol)?;
    let h0 = reference_height(poly)?;
    let mut inner_results = Vec::new();
    let mut trace: Vec<(f64, f64)> = Vec::new();

    let mut eval = |h: f64, inner: &mut Vec<CenterResult>| -> Result<f64> {
        let result = center_at_height(poly, h, tol)?;
        let ratio = ratio_at(poly, &result);
        trace.push((h, ratio));
        inner.push(result);
        Ok(ratio)
    };

    let ladder: Vec<f64> = (-LADDER..=LADDER).map(|k| h0 * 2f64.powi(k)).collect();
    let values = ladder
        .iter()
        .map(|&h| eval(h, &mut inner_results))
        .collect::<Result<Vec<f64>>>()?;
    let best = values
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .expect("ladder is nonempty");
    if best == 0 || best == ladder.len() - 1 {
        return Err(Error::BracketingFailed { trace });
    }

    let (mut lo, mut hi) = (ladder[best - 1], ladder[best + 1]);
    let mut left = hi - INV_GOLDEN * (hi - lo);
    let mut right = lo + INV_GOLDEN * (hi - lo);
    let mut f_left = eval(left, &mut inner_results)?;
    let mut f_right = eval(right, &mut inner_results)?;
    while hi - lo > tol * 0.5 * (hi + lo) {
        if f_left <= f_right {
            hi = right;
            right = left;
            f_right = f_left;
            left = hi - INV_GOLDEN * (hi - lo);
            f_left = eval(left, &mut inner_results)?;
        } else {
            lo = left;
            left = right;
            f_left = f_right;
            right = lo + INV_GOLDEN * (hi - lo);
            f_right = eval(right, &mut inner_results)?;
        }
    }

    let best = inner_results
        .iter()
        .min_by(|a, b| ratio_at(poly, a).total_cmp(&ratio_at(poly, b)))
        .expect("at least one inner solve");
    let apex = Apex {
        projection: best.center,
        height: best.height,
    };
    let ratio = ConeMetrics::evaluate(poly, &apex).ratio;
    let height_over_inradius = if poly.is_triangle() {
        Some(best.height / h0)
    } else {
        None
    };
    Ok(OptimalCone {
        center: best.center,
        height: best.height,
        ratio,
        height_over_inradius,
        inner_results,
    })
}
