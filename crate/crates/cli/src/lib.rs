//! Command-line front end for cone isoperimetric centers.
//!
//! [`run`] executes one parsed [`Cli`] request and returns the rendered
//! output; `main` only handles I/O and exit codes so the commands can be
//! tested in-process.

mod output;
mod verify;

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use conecenter::{
    center_at_height, equal_angle_residual, height_sweep, optimal_cone, Apex, ConeMetrics, Polygon,
    DEFAULT_TOL,
};
use serde_json::json;

pub use output::{round_sig, Table};

#[derive(Debug, Parser)]
#[command(
    name = "conecenter",
    version,
    about = "Cone isoperimetric centers of planar polygons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Solver tolerance (relative gradient norm / relative height width).
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,

    /// Output format; defaults to csv for `sweep` and json otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write results to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Incenter and inradius of a triangle.
    Incenter { polygon: PathBuf },
    /// Center and radius of the largest inscribed disk of a convex polygon.
    Chebyshev { polygon: PathBuf },
    /// Area centroid.
    Centroid { polygon: PathBuf },
    /// Apex projection minimizing the boundary area at a fixed height.
    Center {
        polygon: PathBuf,
        #[arg(long)]
        height: f64,
    },
    /// Apex minimizing (boundary area)^3 / volume^2.
    Optimal { polygon: PathBuf },
    /// Fixed-height centers over a list or range of heights.
    Sweep {
        polygon: PathBuf,
        #[command(flatten)]
        heights: HeightArgs,
    },
    /// Cross-check the solvers against the brute-force oracle.
    Verify {
        polygon: PathBuf,
        #[command(flatten)]
        heights: HeightArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct HeightArgs {
    /// Comma-separated heights.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["h_min", "h_max", "h_steps"])]
    pub heights: Option<Vec<f64>>,
    #[arg(long, requires_all = ["h_max", "h_steps"])]
    pub h_min: Option<f64>,
    #[arg(long, requires_all = ["h_min", "h_steps"])]
    pub h_max: Option<f64>,
    /// Number of evenly spaced heights from h-min to h-max inclusive.
    #[arg(long, requires_all = ["h_min", "h_max"])]
    pub h_steps: Option<usize>,
}

/// Failure classes, mapped to exit statuses by `main`.
#[derive(Debug)]
pub enum CliError {
    /// Bad file, JSON, polygon, or parameter: exit status 2.
    Input(String),
    /// Solver failure or failed verification: exit status 1.
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "input error: {msg}"),
            CliError::Compute(msg) => write!(f, "computation error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<conecenter::Error> for CliError {
    fn from(e: conecenter::Error) -> Self {
        use conecenter::Error as E;
        match e {
            E::MaxIterations(_) | E::BracketingFailed { .. } => CliError::Compute(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Rendered command output plus whether it signals a failure (verify).
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub failed: bool,
}

pub fn load_polygon(path: &Path) -> Result<Polygon, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Polygon::from_json(&text).map_err(CliError::from)
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Input(format!("{name} must be positive, got {v}")))
    }
}

impl HeightArgs {
    pub fn resolve(&self, default: &[f64]) -> Result<Vec<f64>, CliError> {
        let heights = match (&self.heights, self.h_min, self.h_max, self.h_steps) {
            (Some(list), ..) => list.clone(),
            (None, Some(lo), Some(hi), Some(steps)) => {
                if steps == 0 {
                    return Err(CliError::Input("--h-steps must be at least 1".into()));
                }
                if hi < lo {
                    return Err(CliError::Input("--h-max must not be below --h-min".into()));
                }
                if steps == 1 {
                    vec![lo]
                } else {
                    (0..steps)
                        .map(|k| lo + (hi - lo) * k as f64 / (steps - 1) as f64)
                        .collect()
                }
            }
            _ => default.to_vec(),
        };
        if heights.is_empty() {
            return Err(CliError::Input("no heights given".into()));
        }
        heights.into_iter().map(|h| positive("height", h)).collect()
    }
}

/// Executes one request.
pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let tol = positive("--tol", cli.tol)?;
    let as_json = |format: Option<Format>| format.unwrap_or(Format::Json) == Format::Json;
    let ok = |text: String| {
        Ok(Report {
            text,
            failed: false,
        })
    };

    match &cli.command {
        Command::Incenter { polygon } => {
            let inc = load_polygon(polygon)?.triangle_incenter()?;
            let table = Table::single(
                &["center_x", "center_y", "radius"],
                &[inc.center.x, inc.center.y, inc.radius],
            );
            ok(if as_json(cli.format) {
                output::json(
                    &json!({ "center": output::point(inc.center), "radius": round_sig(inc.radius) }),
                )
            } else {
                table.to_csv()
            })
        }
        Command::Chebyshev { polygon } => {
            let ch = load_polygon(polygon)?.chebyshev_center()?;
            let table = Table::single(
                &["center_x", "center_y", "radius"],
                &[ch.center.x, ch.center.y, ch.radius],
            );
            ok(if as_json(cli.format) {
                output::json(
                    &json!({ "center": output::point(ch.center), "radius": round_sig(ch.radius) }),
                )
            } else {
                table.to_csv()
            })
        }
        Command::Centroid { polygon } => {
            let c = load_polygon(polygon)?.centroid();
            ok(if as_json(cli.format) {
                output::json(&json!({ "centroid": output::point(c) }))
            } else {
                Table::single(&["centroid_x", "centroid_y"], &[c.x, c.y]).to_csv()
            })
        }
        Command::Center { polygon, height } => {
            let poly = load_polygon(polygon)?;
            let height = positive("--height", *height)?;
            let res = center_at_height(&poly, height, tol)?;
            let residual = equal_angle_residual(&poly, res.center, height)?;
            let metrics = ConeMetrics::evaluate(&poly, &Apex::new(res.center, height)?);
            ok(if as_json(cli.format) {
                output::json(&json!({
                    "center": output::point(res.center),
                    "height": round_sig(height),
                    "boundary_area": round_sig(res.boundary_area),
                    "volume": round_sig(metrics.volume),
                    "ratio": round_sig(metrics.ratio),
                    "gradient_norm": round_sig(res.gradient_norm),
                    "distances": res.distance_profile.distances.iter().map(|&d| round_sig(d)).collect::<Vec<_>>(),
                    "equal_angle_residual": round_sig(residual),
                    "iterations": res.iterations,
                    "converged": res.converged,
                }))
            } else {
                output::sweep_table(&[(height, res, metrics, residual)]).to_csv()
            })
        }
        Command::Optimal { polygon } => {
            let poly = load_polygon(polygon)?;
            let opt = optimal_cone(&poly, tol)?;
            let metrics = ConeMetrics::evaluate(&poly, &Apex::new(opt.center, opt.height)?);
            ok(if as_json(cli.format) {
                let mut value = json!({
                    "center": output::point(opt.center),
                    "height": round_sig(opt.height),
                    "ratio": round_sig(opt.ratio),
                    "boundary_area": round_sig(metrics.boundary_area),
                    "volume": round_sig(metrics.volume),
                    "evaluations": opt.inner_results.len(),
                });
                if let Some(t) = opt.height_over_inradius {
                    value["height_over_inradius"] = json!(round_sig(t));
                }
                output::json(&value)
            } else {
                let mut cols = vec!["center_x", "center_y", "height", "ratio"];
                let mut vals = vec![opt.center.x, opt.center.y, opt.height, opt.ratio];
                if let Some(t) = opt.height_over_inradius {
                    cols.push("height_over_inradius");
                    vals.push(t);
                }
                Table::single(&cols, &vals).to_csv()
            })
        }
        Command::Sweep { polygon, heights } => {
            let poly = load_polygon(polygon)?;
            let heights = heights.resolve(&[])?;
            let mut rows = Vec::with_capacity(heights.len());
            let mut failures = Vec::new();
            for (h, entry) in heights.iter().zip(height_sweep(&poly, &heights, tol)) {
                match entry {
                    Ok(e) => {
                        let residual = equal_angle_residual(&poly, e.center.center, e.height)?;
                        let metrics =
                            ConeMetrics::evaluate(&poly, &Apex::new(e.center.center, e.height)?);
                        rows.push((e.height, e.center, metrics, residual));
                    }
                    Err(err) => failures.push(format!("height {h}: {err}")),
                }
            }
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => output::sweep_table(&rows).to_csv(),
                Format::Json => output::json(&output::sweep_json(&rows)),
            };
            if failures.is_empty() {
                ok(text)
            } else {
                Err(CliError::Compute(failures.join("; ")))
            }
        }
        Command::Verify { polygon, heights } => {
            let poly = load_polygon(polygon)?;
            let heights = heights.resolve(&[1.0])?;
            let checks = verify::run_checks(&poly, &heights, tol)?;
            let failed = checks.iter().any(|c| !c.passed);
            let text = match cli.format {
                Some(Format::Json) => output::json(&checks),
                Some(Format::Csv) => verify::to_csv(&checks),
                None => verify::to_text(&checks),
            };
            Ok(Report { text, failed })
        }
    }
}
