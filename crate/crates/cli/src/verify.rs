//! Oracle cross-checks for the `verify` subcommand.

use conecenter::oracle::{finite_diff_gradient, grid_min_boundary, GridSpec};
use conecenter::{
    center_at_height, equal_angle_residual, optimal_cone, LateralObjective, Point2, Polygon,
};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: String, passed: bool, detail: String) -> Check {
    Check {
        name,
        passed,
        detail,
    }
}

/// Runs every applicable check at each height. Triangles additionally get
/// the incenter, equal-angle, and optimal-height checks.
pub fn run_checks(poly: &Polygon, heights: &[f64], tol: f64) -> Result<Vec<Check>, CliError> {
    let spec = GridSpec::around(poly);
    let incenter = poly.triangle_incenter().ok();
    let (lo, hi) = poly.bounding_box();
    let probes = [lo, hi, Point2::new(lo.x, hi.y), Point2::new(hi.x, lo.y)];
    let step = 1e-6 * poly.diameter();
    let mut checks = Vec::new();

    for &h in heights {
        let solved = center_at_height(poly, h, tol)?;
        let grid = grid_min_boundary(poly, h, &spec)?;

        let value_err = (grid.value - solved.boundary_area).abs() / solved.boundary_area;
        checks.push(check(
            format!("oracle-value h={h}"),
            value_err <= 1e-6,
            format!("relative difference {value_err:.3e} (limit 1e-6)"),
        ));
        let offset = grid.point.distance(solved.center) / grid.spacing;
        checks.push(check(
            format!("oracle-point h={h}"),
            offset <= 10.0,
            format!("{offset:.3} grid steps apart (limit 10)"),
        ));

        let objective = LateralObjective::new(poly, h)?;
        let worst = probes
            .iter()
            .map(|&p| {
                let numeric = finite_diff_gradient(|x| objective.value(x), p, step)?;
                let analytic = objective.gradient(p);
                Ok((analytic - numeric).norm() / analytic.norm())
            })
            .collect::<conecenter::Result<Vec<f64>>>()?
            .into_iter()
            .fold(0.0, f64::max);
        checks.push(check(
            format!("gradient h={h}"),
            worst <= 1e-6,
            format!("finite-difference relative error {worst:.3e} (limit 1e-6)"),
        ));

        let scaled = solved.gradient_norm / (poly.perimeter() / 2.0);
        checks.push(check(
            format!("stationarity h={h}"),
            scaled <= tol,
            format!("gradient norm / half-perimeter {scaled:.3e} (limit {tol:e})"),
        ));

        if let Some(inc) = incenter {
            let offset = solved.center.distance(inc.center) / poly.diameter();
            checks.push(check(
                format!("incenter h={h}"),
                offset <= 1e-7,
                format!("distance to incenter / diameter {offset:.3e} (limit 1e-7)"),
            ));
            let residual = equal_angle_residual(poly, solved.center, h)?;
            checks.push(check(
                format!("equal-angle h={h}"),
                residual <= 1e-8,
                format!("residual {residual:.3e} (limit 1e-8)"),
            ));
        }
    }

    if incenter.is_some() {
        let opt = optimal_cone(poly, tol)?;
        let t = opt.height_over_inradius.expect("triangle reports h/r");
        let err = (t - 2.0 * std::f64::consts::SQRT_2).abs();
        checks.push(check(
            "optimal-height".into(),
            err <= 1e-6,
            format!("h/r = {t:.10}, |h/r - 2√2| = {err:.3e} (limit 1e-6)"),
        ));
    }
    Ok(checks)
}

pub fn to_text(checks: &[Check]) -> String {
    checks
        .iter()
        .map(|c| {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            format!("{tag} {}: {}\n", c.name, c.detail)
        })
        .collect()
}

pub fn to_csv(checks: &[Check]) -> String {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(Vec::new());
    writer
        .write_record(["check", "passed", "detail"])
        .expect("in-memory write");
    for c in checks {
        writer
            .write_record([
                c.name.as_str(),
                if c.passed { "true" } else { "false" },
                c.detail.as_str(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8 output")
}
