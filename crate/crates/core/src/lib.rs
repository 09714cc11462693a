//! Cone isoperimetric centers of planar polygons.
//!
//! For a polygon `Ω` and an apex `p` above the plane, the cone over `Ω` with
//! vertex `p` has a boundary area and a volume. This crate finds
//!
//! * the apex projection minimizing the boundary area at a fixed height
//!   ([`center_at_height`]), which for triangles is the incenter, and
//! * the apex minimizing the scale-free ratio `(boundary area)³ / volume²`
//!   ([`optimal_cone`]), which for triangles sits over the incenter at
//!   height `2√2` times the inradius,
//!
//! alongside the classical incenter, inscribed-disk (Chebyshev) center and
//! centroid, plus a brute-force grid oracle ([`oracle`]) that checks the
//! solvers independently.

pub mod cone;
pub mod error;
pub mod geometry;
pub mod lp;
pub mod optimize;
pub mod oracle;

pub use cone::{
    boundary_area, cone_volume, equal_angle_residual, isoperimetric_ratio, lateral_area, phi, Apex,
    ConeMetrics,
};
pub use error::{Error, Result};
pub use geometry::{
    ChebyshevResult, DistanceProfile, EdgeLine, IncircleResult, Point2, Polygon, PolygonFile,
};
pub use optimize::{
    center_at_height, height_sweep, optimal_cone, CenterResult, LateralObjective, OptimalCone,
    SweepEntry, DEFAULT_TOL,
};
