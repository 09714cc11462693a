mod common;

use common::*;
use conecenter::oracle::{grid_min_boundary, grid_min_ratio, GridSpec};
use conecenter::{
    boundary_area, center_at_height, cone_volume, equal_angle_residual, height_sweep,
    isoperimetric_ratio, optimal_cone, Apex, ConeMetrics, LateralObjective, Point2, Polygon,
    DEFAULT_TOL,
};
use proptest::prelude::*;
use rand::Rng;

fn arb_triangle() -> impl Strategy<Value = Polygon> {
    any::<u64>().prop_map(|seed| random_triangle(&mut rng(seed)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn closed_form_over_incenter(tri in arb_triangle(), h in 0.01..50.0f64) {
        let inc = tri.triangle_incenter().unwrap();
        let s = tri.area();
        let t = h / inc.radius;
        let expected = s * (1.0 + (1.0 + t * t).sqrt());
        let direct = boundary_area(&tri, &Apex::new(inc.center, h).unwrap());
        prop_assert!(rel_err(direct, expected) <= 1e-12);
    }

    #[test]
    fn minimum_boundary_matches_reduction(tri in arb_triangle(), h in 0.05..20.0f64) {
        let inc = tri.triangle_incenter().unwrap();
        let t = h / inc.radius;
        let expected = tri.area() * (1.0 + (1.0 + t * t).sqrt());
        let res = center_at_height(&tri, h, DEFAULT_TOL).unwrap();
        prop_assert!(rel_err(res.boundary_area, expected) <= 1e-10);
        prop_assert!(res.distance_profile.all_positive());
        prop_assert!(equal_angle_residual(&tri, res.center, h).unwrap() <= 1e-8);
    }

    #[test]
    fn boundary_exceeds_slant_bound(seed in any::<u64>(), m in 3usize..9, h in 0.01..10.0f64) {
        let mut rng = rng(seed);
        let poly = random_convex(&mut rng, m);
        let x = random_point_in_box(&mut rng, &poly, poly.diameter());
        let metrics = ConeMetrics::evaluate(&poly, &Apex::new(x, h).unwrap());
        prop_assert!(metrics.boundary_area > poly.area() + 0.5 * poly.perimeter() * h);
        prop_assert!(metrics.lateral_area >= 0.5 * poly.perimeter() * h);
        prop_assert_eq!(metrics.boundary_area, metrics.base_area + metrics.lateral_area);
        prop_assert!(rel_err(metrics.volume, cone_volume(&poly, h).unwrap()) <= 1e-12);
        prop_assert!(rel_err(metrics.ratio, metrics.boundary_area.powi(3) / metrics.volume.powi(2)) <= 1e-12);
    }
}

#[test]
fn metrics_invariant_under_rigid_motion() {
    let mut rng = rng(21);
    for i in 0..100 {
        let poly = random_convex(&mut rng, 3 + i % 6);
        let apex = Apex::new(
            random_point_in_box(&mut rng, &poly, 1.0),
            rng.gen_range(0.1..4.0),
        )
        .unwrap();
        let map = similarity(
            rng.gen_range(0.0..std::f64::consts::TAU),
            1.0,
            Point2::new(rng.gen_range(-20.0..20.0), rng.gen_range(-20.0..20.0)),
        );
        let moved = transform(&poly, &map);
        let moved_apex = Apex::new(map(apex.projection), apex.height).unwrap();
        let a = ConeMetrics::evaluate(&poly, &apex);
        let b = ConeMetrics::evaluate(&moved, &moved_apex);
        assert!(rel_err(b.boundary_area, a.boundary_area) <= 1e-10);
        assert!(rel_err(b.volume, a.volume) <= 1e-10);
        assert!(rel_err(b.ratio, a.ratio) <= 1e-10);
    }
}

#[test]
fn ratio_invariant_under_listed_scales() {
    let mut rng = rng(22);
    for i in 0..20 {
        let poly = random_convex(&mut rng, 3 + i % 6);
        let apex = Apex::new(
            random_point_in_box(&mut rng, &poly, 1.0),
            rng.gen_range(0.1..4.0),
        )
        .unwrap();
        let f = isoperimetric_ratio(&poly, &apex).unwrap();
        for scale in [0.1, 1.0, 7.3] {
            let map = similarity(0.0, scale, Point2::default());
            let scaled = transform(&poly, &map);
            let scaled_apex = Apex::new(map(apex.projection), apex.height * scale).unwrap();
            assert!(rel_err(isoperimetric_ratio(&scaled, &scaled_apex).unwrap(), f) <= 1e-10);
        }
    }
}

#[test]
fn boundary_strictly_increasing_in_height() {
    let mut rng = rng(23);
    for i in 0..20 {
        let poly = random_convex(&mut rng, 3 + i % 6);
        let x = random_point_in_box(&mut rng, &poly, poly.diameter());
        let values: Vec<f64> = (1..=50)
            .map(|k| boundary_area(&poly, &Apex::new(x, 0.1 * k as f64).unwrap()))
            .collect();
        assert!(values.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn objective_is_convex() {
    let mut rng = rng(24);
    for i in 0..10 {
        let poly = random_convex(&mut rng, 3 + i % 6);
        let obj = LateralObjective::new(&poly, rng.gen_range(0.1..3.0)).unwrap();
        for _ in 0..100 {
            let x = random_point_in_box(&mut rng, &poly, poly.diameter());
            let y = random_point_in_box(&mut rng, &poly, poly.diameter());
            let t = rng.gen_range(0.0..1.0);
            let mid = obj.value(x * t + y * (1.0 - t));
            let chord = t * obj.value(x) + (1.0 - t) * obj.value(y);
            assert!(mid <= chord + 1e-12 * chord);
        }
    }
}

#[test]
fn center_beats_random_probes() {
    let mut rng = rng(25);
    for i in 0..10 {
        let poly = random_convex(&mut rng, 3 + i % 6);
        let h = rng.gen_range(0.1..3.0);
        let res = center_at_height(&poly, h, DEFAULT_TOL).unwrap();
        assert!(res.converged);
        assert!(res.gradient_norm <= DEFAULT_TOL * poly.perimeter() / 2.0);
        for _ in 0..100 {
            let probe = random_point_in_box(&mut rng, &poly, 0.5 * poly.diameter());
            assert!(res.boundary_area <= boundary_area(&poly, &Apex::new(probe, h).unwrap()));
        }
    }
}

/// Stationarity in gradient form: Σ a_i s_i n_i = 0 with
/// s_i = d_i / √(d_i² + h²). For m >= 4 edges this does not force equal s_i.
#[test]
fn convex_centers_are_stationary_but_not_equal_angle() {
    let mut rng = rng(26);
    for i in 0..20 {
        let poly = random_convex(&mut rng, 4 + i % 5);
        let h = rng.gen_range(0.2..3.0);
        let res = center_at_height(&poly, h, DEFAULT_TOL).unwrap();
        let weighted = poly.edges().iter().fold(Point2::default(), |acc, e| {
            let d = e.signed_distance(res.center);
            acc + e.unit_normal * (e.length * d / (d * d + h * h).sqrt())
        });
        assert!(weighted.norm() <= 1e-9 * poly.perimeter());
    }
    // The trapezoid is not tangential, so its center has unequal face angles.
    let res = center_at_height(&trapezoid(), 1.0, DEFAULT_TOL).unwrap();
    assert!(equal_angle_residual(&trapezoid(), res.center, 1.0).unwrap() > 1e-2);
    // A square is tangential and its center does satisfy the equal-angle form.
    let square = Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
    let res = center_at_height(&square, 0.7, DEFAULT_TOL).unwrap();
    assert!(equal_angle_residual(&square, res.center, 0.7).unwrap() <= 1e-8);
}

#[test]
fn trapezoid_centers_drift_toward_short_side() {
    let sweep = height_sweep(&trapezoid(), &[1.0, 2.0, 3.0, 4.0], DEFAULT_TOL);
    let xs: Vec<f64> = sweep
        .iter()
        .map(|e| e.as_ref().unwrap().center.center.x)
        .collect();
    assert!(xs.windows(2).all(|w| w[1] < w[0]), "{xs:?}");
}

#[test]
fn sweep_triangle_heights_hit_incenter() {
    let tri = Polygon::from_coords(&[[0.0, 0.0], [5.0, 1.0], [1.0, 4.0]]).unwrap();
    let inc = tri.triangle_incenter().unwrap();
    for entry in height_sweep(&tri, &[0.5, 5.0], DEFAULT_TOL) {
        assert!(entry.unwrap().center.center.distance(inc.center) <= 1e-7 * tri.diameter());
    }
}

#[test]
fn sweep_is_deterministic() {
    let heights: Vec<f64> = (1..=40).map(|k| 0.1 * k as f64).collect();
    let a = height_sweep(&trapezoid(), &heights, DEFAULT_TOL);
    let b: Vec<_> = heights
        .iter()
        .map(|&h| center_at_height(&trapezoid(), h, DEFAULT_TOL).unwrap())
        .collect();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(&x.as_ref().unwrap().center, y);
    }
}

#[test]
fn optimal_cone_ratio_is_consistent() {
    let mut rng = rng(27);
    for i in 0..5 {
        let poly = random_convex(&mut rng, 3 + i);
        let opt = optimal_cone(&poly, DEFAULT_TOL).unwrap();
        let direct =
            isoperimetric_ratio(&poly, &Apex::new(opt.center, opt.height).unwrap()).unwrap();
        assert!(rel_err(opt.ratio, direct) <= 1e-12);
        for inner in &opt.inner_results {
            let volume = poly.area() * inner.height / 3.0;
            let nested = inner.boundary_area.powi(3) / volume.powi(2);
            let at = isoperimetric_ratio(&poly, &Apex::new(inner.center, inner.height).unwrap())
                .unwrap();
            assert!(rel_err(nested, at) <= 1e-10);
            assert!(opt.ratio <= nested * (1.0 + 1e-12));
        }
    }
}

#[test]
fn oracle_agrees_with_solver_on_trapezoid_optimum() {
    let trap = trapezoid();
    let spec = GridSpec::around(&trap).with_schedule(61, 5, 5.0).unwrap();
    let grid = grid_min_ratio(&trap, &spec, (0.5, 10.0), 21).unwrap();
    assert!((grid.height - 3.250).abs() <= 5e-3, "h = {}", grid.height);
    let opt = optimal_cone(&trap, DEFAULT_TOL).unwrap();
    assert!((grid.height - opt.height).abs() <= 5e-3);
    assert!(rel_err(grid.value, opt.ratio) <= 1e-6);
}

#[test]
fn oracle_confirms_square_optimum() {
    let square = Polygon::from_coords(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]).unwrap();
    let spec = GridSpec::around(&square).with_schedule(61, 5, 5.0).unwrap();
    let grid = grid_min_ratio(&square, &spec, (0.05, 10.0), 21).unwrap();
    assert!(
        (grid.height - 2f64.sqrt()).abs() <= 1e-3,
        "h = {}",
        grid.height
    );
    assert!(grid.point.distance(Point2::new(0.5, 0.5)) <= 1e-3);
}

#[test]
fn oracle_tracks_solver_on_nonconvex_base() {
    let l_shape = Polygon::from_coords(&[
        [0.0, 0.0],
        [3.0, 0.0],
        [3.0, 1.0],
        [1.0, 1.0],
        [1.0, 3.0],
        [0.0, 3.0],
    ])
    .unwrap();
    for h in [0.3, 1.0, 3.0] {
        let solved = center_at_height(&l_shape, h, DEFAULT_TOL).unwrap();
        let grid = grid_min_boundary(&l_shape, h, &GridSpec::around(&l_shape)).unwrap();
        assert!(rel_err(grid.value, solved.boundary_area) <= 1e-6);
        assert!(grid.point.distance(solved.center) <= 10.0 * grid.spacing);
    }
    let opt = optimal_cone(&l_shape, DEFAULT_TOL).unwrap();
    assert!(opt.height > 0.0 && opt.height_over_inradius.is_none());
}
