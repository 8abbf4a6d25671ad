//! Reference data sets used by the bundled verification suite and the CLI
//! `selfcheck` command: a five-point conic with known integer coefficients, a
//! nine-point quadric with known multipliers, and a five-point cone placement
//! with known Study parameters, image points and univariate factors.

use crate::conic::Conic;
use crate::dualquat::{DualQuaternion, Point3};
use crate::projective::{HPoint2, HPoint3};
use crate::quadric::Quadric;
use crate::rat::{rat, rat_i, Rat};

/// The five plane points P, Q, R, S, T of the conic example.
pub fn conic_points() -> [HPoint2; 5] {
    [
        HPoint2::affine_i(2, 3),
        HPoint2::affine_i(3, 5),
        HPoint2::affine_i(7, 7),
        HPoint2::affine_i(13, 6),
        HPoint2::affine_i(11, 2),
    ]
}

/// Reference conic through [`conic_points`], as printed with doubled mixed
/// terms: -238868 x0^2 + 57912 x0x1 + 83676 x0x2 - 5092 x1^2 + 5092 x1x2
/// - 15352 x2^2.
pub fn conic_reference() -> Conic {
    Conic::from_full_coeffs([
        rat_i(-238868),
        rat_i(57912),
        rat_i(83676),
        rat_i(-5092),
        rat_i(5092),
        rat_i(-15352),
    ])
}

/// The pencil multipliers selecting the reference conic.
pub fn conic_multipliers() -> (Rat, Rat) {
    (rat_i(494), rat_i(1064))
}

/// The nine points of the quadric example: six octahedron vertices A..F and
/// the three substitution points G, H, J.
///
/// C is (9, 8, 3): the reference quadric and multiplier system below have
/// exact zero residuals only at this value (a transposed variant circulates;
/// it fails the residual check by 6.2e16).
pub fn quadric_points() -> [HPoint3; 9] {
    [
        HPoint3::affine_i(4, 3, 0),
        HPoint3::affine_i(4, 10, 4),
        HPoint3::affine_i(9, 8, 3),
        HPoint3::affine_i(-1, 7, 2),
        HPoint3::affine_i(2, 3, 5),
        HPoint3::affine_i(-3, 9, 7),
        HPoint3::affine_i(12, 0, 0),
        HPoint3::affine_i(0, 10, 0),
        HPoint3::affine_i(0, 0, 5),
    ]
}

/// The 3x4 multiplier system produced by the default pair choice on
/// [`quadric_points`].
pub fn quadric_system_reference() -> [[i64; 4]; 3] {
    [
        [-103944, 9700, 7410, -109136],
        [3552, 6968, 15936, -38612],
        [-15343, -9167, -3699, 19918],
    ]
}

/// The Grassmannian multipliers (α, β, γ, δ) of the reference system.
pub fn quadric_multipliers_reference() -> [i64; 4] {
    [
        -9842336242680,
        39532196597640,
        19311493179280,
        14198910257520,
    ]
}

/// Reference quadric through [`quadric_points`], from the printed affine
/// form (constant in the x0^2 slot, full mixed coefficients halved).
pub fn quadric_reference() -> Quadric {
    let h = |n: i64| rat(n, 2);
    Quadric::new([
        rat_i(-27426081179298420),
        h(4710658547758491),
        h(4323601509519942),
        h(9186924265547229),
        rat_i(-202095981901413),
        h(22422685213194),
        h(-1191822696049068),
        rat_i(-158099339159010),
        h(-558476852988570),
        rat_i(-740341605937509),
    ])
}

/// The coplanar pentagon A..E placed on the cone, in source coordinates.
pub fn pentagon() -> [Point3; 5] {
    [
        Point3::new(0.0, 0.0, 0.0),
        Point3::new(5.0, 0.0, 0.0),
        Point3::new(1.0, -1.0, 0.0),
        Point3::new(0.0, -3.0, 0.0),
        Point3::new(4.0, -2.0, 0.0),
    ]
}

/// The pentagon as 2D projective points (for the conic commands).
pub fn pentagon_2d() -> [HPoint2; 5] {
    [
        HPoint2::affine_i(0, 0),
        HPoint2::affine_i(5, 0),
        HPoint2::affine_i(1, -1),
        HPoint2::affine_i(0, -3),
        HPoint2::affine_i(4, -2),
    ]
}

/// First reference displacement (x0 = 0.1380 solution class, 4-decimal
/// parameters).
pub fn dq_first() -> DualQuaternion {
    DualQuaternion::new(
        [0.1380, 0.8324, -0.2391, 0.4806],
        [1.8555, -0.5330, -0.4972, 0.1428],
    )
}

/// Second reference displacement (x0 = 0.6333 solution class).
pub fn dq_second() -> DualQuaternion {
    DualQuaternion::new(
        [0.6333, 0.3411, -0.3656, 0.5907],
        [0.7005, -0.7510, 0.1877, -0.2012],
    )
}

/// Published image of the pentagon under the first displacement.
pub fn images_first() -> [Point3; 5] {
    [
        Point3::new(-2.8265, 0.0, -2.8265),
        Point3::new(-0.7076, -1.3267, 1.5036),
        Point3::new(-1.8720, 0.5822, -1.9605),
        Point3::new(-1.2344, 2.5427, -2.8265),
        Point3::new(-0.0700, 0.6337, 0.6376),
    ]
}

/// Published image of the pentagon under the second displacement.
pub fn images_second() -> [Point3; 5] {
    [
        Point3::new(-1.5036, 0.0, -1.5036),
        Point3::new(-1.3301, 2.4940, 2.8265),
        Point3::new(-0.4713, 0.4294, -0.6376),
        Point3::new(1.4891, -0.2082, -1.5036),
        Point3::new(0.6304, 1.8564, 1.9605),
    ]
}

/// The eight placement solution classes by their |x0| values, descending.
pub fn x0_table() -> [f64; 8] {
    [0.8324, 0.6333, 0.5907, 0.4806, 0.3656, 0.3411, 0.2391, 0.1380]
}

/// Apex translation of the congruent second cone.
pub fn cone_translation() -> [f64; 3] {
    [-1.9418, 1.2160, -1.3227]
}

/// Implicit form of the translated cone: 3.5 + 3.884x - 2.432y - 2.6458z
/// + x^2 + y^2 - z^2, as (constant, x, y, z) for the non-quadratic part.
pub fn translated_cone_reference() -> [f64; 4] {
    [3.5, 3.884, -2.432, -2.6458]
}

/// Plane through the first three image points, as printed:
/// 3.3069 + 3.6699x - 2.2981y - 2.5z = 0.
pub fn image_plane_reference() -> [f64; 4] {
    [3.3069, 3.6699, -2.2981, -2.5000]
}
