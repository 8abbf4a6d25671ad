//! The congruent translated cone through the same section: translated-cone
//! implicit form, the intersection plane with the origin cone, recovery of
//! the apex translation from three section points, and the shared-conic
//! residual report.
//!
//! The origin cone is fixed as x^2 + y^2 - z^2 = 0 (apex at the origin, axis
//! on z, half-angle π/4); a congruent copy with apex at t has the same
//! quadratic part, so the difference of the two forms is the plane carrying
//! the shared conic.

use crate::dualquat::Point3;
use crate::error::{Error, Result};

/// Absolute residual below which a point counts as lying on the origin cone.
pub const ON_CONE_TOL: f64 = 1e-3;

/// Value of the origin cone form at a point.
pub fn origin_cone(p: &Point3) -> f64 {
    p.x * p.x + p.y * p.y - p.z * p.z
}

/// Right circular cone congruent to the origin cone, apex translated to t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConeModel {
    pub t: [f64; 3],
}

impl ConeModel {
    /// Constant term t1^2 + t2^2 - t3^2 of the implicit form.
    pub fn constant(&self) -> f64 {
        let [t1, t2, t3] = self.t;
        t1 * t1 + t2 * t2 - t3 * t3
    }

    /// Linear coefficients (-2 t1, -2 t2, +2 t3).
    pub fn linear(&self) -> [f64; 3] {
        let [t1, t2, t3] = self.t;
        [-2.0 * t1, -2.0 * t2, 2.0 * t3]
    }

    /// Implicit form: constant + linear·(x,y,z) + x^2 + y^2 - z^2.
    pub fn evaluate(&self, p: &Point3) -> f64 {
        let l = self.linear();
        self.constant() + l[0] * p.x + l[1] * p.y + l[2] * p.z + origin_cone(p)
    }
}

/// The translated cone for an apex translation t.
pub fn translated_cone(t: [f64; 3]) -> ConeModel {
    ConeModel { t }
}

/// Plane as coefficients (c0, c1, c2, c3) of c0 + c1 x + c2 y + c3 z = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Plane3f {
    pub c: [f64; 4],
}

impl Plane3f {
    pub fn evaluate(&self, p: &Point3) -> f64 {
        self.c[0] + self.c[1] * p.x + self.c[2] * p.y + self.c[3] * p.z
    }

    /// Scaled so the largest-magnitude coefficient is 1.
    pub fn canonical(&self) -> Plane3f {
        let m = self
            .c
            .iter()
            .copied()
            .max_by(|a, b| a.abs().total_cmp(&b.abs()))
            .unwrap_or(1.0);
        Plane3f {
            c: self.c.map(|v| v / m),
        }
    }
}

/// Difference of the origin-cone and translated-cone forms: the quadratic
/// terms cancel and the plane of the shared conic remains, in the raw form
/// (t1^2+t2^2-t3^2, -2t1, -2t2, +2t3).
pub fn intersection_plane(t: [f64; 3]) -> Result<Plane3f> {
    if t.iter().all(|v| v.abs() < 1e-12) {
        return Err(Error::ZeroTranslation);
    }
    let cone = translated_cone(t);
    let l = cone.linear();
    Ok(Plane3f {
        c: [cone.constant(), l[0], l[1], l[2]],
    })
}

/// Recover the apex translations consistent with three points of the shared
/// conic: substituting each point into the plane form and subtracting the
/// first equation leaves two homogeneous linear equations whose null
/// direction, fed back into the first (quadratic) equation, yields all real
/// solutions. The trivial translation is always included.
pub fn recover_translation(p1: &Point3, p2: &Point3, p3: &Point3) -> Result<Vec<[f64; 3]>> {
    for (i, p) in [p1, p2, p3].into_iter().enumerate() {
        let r = origin_cone(p);
        if r.abs() > ON_CONE_TOL {
            return Err(Error::PointsOffCone {
                index: i,
                residual: r,
            });
        }
    }
    // eq(p): C - 2 t1 p.x - 2 t2 p.y + 2 t3 p.z = 0 with C = t1^2+t2^2-t3^2;
    // eq(p_k) - eq(p_1) is linear in t
    let row = |p: &Point3| [-2.0 * (p.x - p1.x), -2.0 * (p.y - p1.y), 2.0 * (p.z - p1.z)];
    let l2 = row(p2);
    let l3 = row(p3);
    let d = [
        l2[1] * l3[2] - l2[2] * l3[1],
        l2[2] * l3[0] - l2[0] * l3[2],
        l2[0] * l3[1] - l2[1] * l3[0],
    ];
    let scale = |v: &[f64; 3]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if scale(&d) < 1e-9 * (scale(&l2) * scale(&l3)).max(1e-9) {
        return Err(Error::DegenerateTriple);
    }
    // t = τ d in the quadratic first equation:
    // τ^2 (d1^2 + d2^2 - d3^2) + τ (-2 d·(p1.x, p1.y, -p1.z)) = 0
    let a = d[0] * d[0] + d[1] * d[1] - d[2] * d[2];
    let b = -2.0 * (d[0] * p1.x + d[1] * p1.y - d[2] * p1.z);
    let mut out = vec![[0.0, 0.0, 0.0]];
    if a.abs() > 1e-12 {
        let tau = -b / a;
        if tau.abs() > 1e-12 {
            out.push([tau * d[0], tau * d[1], tau * d[2]]);
        }
    }
    Ok(out)
}

/// Residual report for a point set against the origin cone, the translated
/// cone, and the intersection plane, plus the proportionality factor between
/// the raw plane fit through the first three points and the raw
/// cone-difference plane.
#[derive(Debug, Clone)]
pub struct SharedConicReport {
    pub origin_residuals: Vec<f64>,
    pub translated_residuals: Vec<f64>,
    pub plane_residuals: Vec<f64>,
    pub fitted_plane: Option<Plane3f>,
    /// Least-squares scale between the fitted and difference planes.
    pub plane_ratio: Option<f64>,
    pub max_abs_residual: f64,
}

/// Plane through three points as the raw cross-product normal
/// n = (p2-p1) x (p3-p1) with coefficients (n·p1, -n).
pub fn plane_through(p1: &Point3, p2: &Point3, p3: &Point3) -> Option<Plane3f> {
    let u = [p2.x - p1.x, p2.y - p1.y, p2.z - p1.z];
    let v = [p3.x - p1.x, p3.y - p1.y, p3.z - p1.z];
    let n = [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ];
    if n.iter().map(|x| x * x).sum::<f64>().sqrt() < 1e-12 {
        return None;
    }
    Some(Plane3f {
        c: [
            n[0] * p1.x + n[1] * p1.y + n[2] * p1.z,
            -n[0],
            -n[1],
            -n[2],
        ],
    })
}

pub fn shared_conic_check(points: &[Point3], t: [f64; 3]) -> SharedConicReport {
    let cone = translated_cone(t);
    let plane = intersection_plane(t).ok();
    let origin_residuals: Vec<f64> = points.iter().map(origin_cone).collect();
    let translated_residuals: Vec<f64> = points.iter().map(|p| cone.evaluate(p)).collect();
    let plane_residuals: Vec<f64> = match &plane {
        Some(pl) => points.iter().map(|p| pl.evaluate(p)).collect(),
        None => origin_residuals
            .iter()
            .zip(&translated_residuals)
            .map(|(a, b)| a - b)
            .collect(),
    };
    let fitted_plane = if points.len() >= 3 {
        plane_through(&points[0], &points[1], &points[2])
    } else {
        None
    };
    let plane_ratio = match (&fitted_plane, &plane) {
        (Some(f), Some(pl)) => {
            let num: f64 = f.c.iter().zip(&pl.c).map(|(a, b)| a * b).sum();
            let den: f64 = pl.c.iter().map(|b| b * b).sum();
            (den > 0.0).then(|| num / den)
        }
        _ => None,
    };
    let max_abs_residual = origin_residuals
        .iter()
        .chain(&translated_residuals)
        .chain(&plane_residuals)
        .fold(0.0f64, |m, v| m.max(v.abs()));
    SharedConicReport {
        origin_residuals,
        translated_residuals,
        plane_residuals,
        fitted_plane,
        plane_ratio,
        max_abs_residual,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn images_abc() -> (Point3, Point3, Point3) {
        let im = fixtures::images_first();
        (im[0], im[1], im[2])
    }

    #[test]
    fn translated_cone_forms() {
        let zero = translated_cone([0.0; 3]);
        assert_eq!(zero.constant(), 0.0);
        assert_eq!(zero.linear(), [0.0, 0.0, 0.0]);
        let unit = translated_cone([1.0, 0.0, 0.0]);
        assert_eq!(unit.constant(), 1.0);
        assert_eq!(unit.linear(), [-2.0, 0.0, 0.0]);
        // reference translation reproduces the printed coefficients
        let cone = translated_cone(fixtures::cone_translation());
        let want = fixtures::translated_cone_reference();
        assert!((cone.constant() - want[0]).abs() < 1e-3);
        let l = cone.linear();
        assert!((l[0] - want[1]).abs() < 1e-3);
        assert!((l[1] - want[2]).abs() < 1e-3);
        assert!((l[2] - want[3]).abs() < 1e-3);
    }

    #[test]
    fn intersection_plane_cases() {
        assert_eq!(
            intersection_plane([0.0; 3]).unwrap_err(),
            Error::ZeroTranslation
        );
        let pl = intersection_plane([0.0, 0.0, 1.0]).unwrap();
        // -1 + 2z = 0
        assert_eq!(pl.c, [-1.0, 0.0, 0.0, 2.0]);
        let pl = intersection_plane(fixtures::cone_translation()).unwrap();
        let want = fixtures::translated_cone_reference();
        for (got, want) in pl.c.iter().zip(&want) {
            assert!((got - want).abs() < 1e-3);
        }
    }

    #[test]
    fn recover_translation_fixture() {
        let (a, b, c) = images_abc();
        let sols = recover_translation(&a, &b, &c).unwrap();
        assert_eq!(sols.len(), 2);
        assert_eq!(sols[0], [0.0, 0.0, 0.0]);
        let t = sols[1];
        let want = fixtures::cone_translation();
        for k in 0..3 {
            assert!((t[k] - want[k]).abs() < 1e-3, "t[{k}] = {}", t[k]);
        }
    }

    #[test]
    fn recover_translation_roundtrip_vertical() {
        // three points on the circle z = 1/2 of the origin cone, which also
        // lies on the cone translated by (0,0,1)
        let pts: Vec<Point3> = [0.3f64, 1.9, 4.4]
            .iter()
            .map(|th| Point3::new(0.5 * th.cos(), 0.5 * th.sin(), 0.5))
            .collect();
        let sols = recover_translation(&pts[0], &pts[1], &pts[2]).unwrap();
        assert!(sols
            .iter()
            .any(|t| (t[0]).abs() < 1e-9 && (t[1]).abs() < 1e-9 && (t[2] - 1.0).abs() < 1e-9));
    }

    #[test]
    fn off_cone_and_collinear_rejected() {
        let (a, b, c) = images_abc();
        let mut bad = a;
        bad.x += 0.1;
        assert!(matches!(
            recover_translation(&bad, &b, &c),
            Err(Error::PointsOffCone { index: 0, .. })
        ));
        // collinear: three points on one generator
        let g1 = Point3::new(1.0, 0.0, 1.0);
        let g2 = Point3::new(2.0, 0.0, 2.0);
        let g3 = Point3::new(3.0, 0.0, 3.0);
        assert_eq!(
            recover_translation(&g1, &g2, &g3),
            Err(Error::DegenerateTriple)
        );
    }

    #[test]
    fn shared_conic_report_fixture() {
        let im = fixtures::images_first();
        let report = shared_conic_check(&im, fixtures::cone_translation());
        assert!(report.max_abs_residual < 2e-2, "{}", report.max_abs_residual);
        let ratio = report.plane_ratio.unwrap();
        assert!((ratio - 0.9449).abs() < 1e-3, "ratio {ratio}");
        // fitted plane reproduces the printed section plane
        let fp = report.fitted_plane.unwrap();
        for (got, want) in fp.c.iter().zip(&fixtures::image_plane_reference()) {
            assert!((got - want).abs() < 5e-4, "{got} vs {want}");
        }
    }

    #[test]
    fn zero_translation_report_degenerates_gracefully() {
        let pts: Vec<Point3> = [0.5f64, 2.0, 3.6]
            .iter()
            .map(|th| Point3::new(th.cos(), th.sin(), 1.0))
            .collect();
        let report = shared_conic_check(&pts, [0.0; 3]);
        for (a, b) in report
            .origin_residuals
            .iter()
            .zip(&report.translated_residuals)
        {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn perturbed_point_is_flagged() {
        let mut im = fixtures::images_first().to_vec();
        im[3].y += 0.1;
        let report = shared_conic_check(&im, fixtures::cone_translation());
        assert!(report.max_abs_residual > 0.05);
    }

    #[test]
    fn plane_canonical_scaling() {
        let pl = Plane3f {
            c: [3.0, -6.0, 1.5, 0.0],
        };
        let c = pl.canonical();
        assert_eq!(c.c, [-0.5, 1.0, -0.25, -0.0]);
    }
}
