//! Dual-quaternion representation of spatial displacements: the point
//! sandwich transform, the norming and Study conditions, and the
//! direct/mirrored comparison of placement solutions.

use crate::error::{Error, Result};
use crate::quat::{qadd, qdot, qmul, qscale, qsub, sandwich};

/// Cartesian point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn dist(&self, other: &Point3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

/// Spatial displacement as eight homogeneous Study parameters
/// (x0..x3 | y0..y3). Q and -Q act identically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DualQuaternion {
    pub x: [f64; 4],
    pub y: [f64; 4],
}

/// Validity gate for [`DualQuaternion::act`]: inputs quoted to a few decimals
/// pass, grossly inconsistent parameter vectors do not.
pub const VALIDITY_TOL: f64 = 1e-2;

impl DualQuaternion {
    pub fn new(x: [f64; 4], y: [f64; 4]) -> Self {
        Self { x, y }
    }

    pub fn identity() -> Self {
        Self::new([1.0, 0.0, 0.0, 0.0], [0.0; 4])
    }

    /// Pure rotation by `angle` about a unit `axis` through the origin.
    pub fn rotation(axis: [f64; 3], angle: f64) -> Self {
        let n = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        let (s, c) = ((angle / 2.0).sin(), (angle / 2.0).cos());
        Self::new(
            [c, s * axis[0] / n, s * axis[1] / n, s * axis[2] / n],
            [0.0; 4],
        )
    }

    /// Residual of the norming condition x0^2+x1^2+x2^2+x3^2-1.
    pub fn norm_condition(&self) -> f64 {
        qdot(self.x, self.x) - 1.0
    }

    /// Residual of the Study condition x0y0+x1y1+x2y2+x3y3.
    pub fn study_condition(&self) -> f64 {
        qdot(self.x, self.y)
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.norm_condition().abs() <= tol && self.study_condition().abs() <= tol
    }

    /// Dual quaternion product (a + εb)(c + εd) = ac + ε(ad + bc).
    pub fn mul(&self, other: &DualQuaternion) -> DualQuaternion {
        DualQuaternion::new(
            qmul(self.x, other.x),
            qadd(qmul(self.x, other.y), qmul(self.y, other.x)),
        )
    }

    pub fn negated(&self) -> DualQuaternion {
        DualQuaternion::new(qscale(self.x, -1.0), qscale(self.y, -1.0))
    }

    /// Nearest exactly-rigid representative: unit rotation part, dual part
    /// projected onto the Study quadric.
    pub fn normalized(&self) -> DualQuaternion {
        let n2 = qdot(self.x, self.x);
        let n = n2.sqrt();
        let x = qscale(self.x, 1.0 / n);
        let y = qscale(qsub(self.y, qscale(self.x, qdot(self.x, self.y) / n2)), 1.0 / n);
        DualQuaternion::new(x, y)
    }

    /// Image of a point under the displacement: the sandwich product
    /// Q C Q'ε computed from first principles on the normalized
    /// representative, so the action is exactly rigid for any input within
    /// the validity tolerance.
    pub fn act(&self, p: Point3) -> Result<Point3> {
        self.act_with_tol(p, VALIDITY_TOL)
    }

    pub fn act_with_tol(&self, p: Point3, tol: f64) -> Result<Point3> {
        if !self.is_valid(tol) {
            return Err(Error::InvalidDisplacement {
                norm: self.norm_condition(),
                study: self.study_condition(),
            });
        }
        let q = self.normalized();
        let img = sandwich(q.x, q.y, [p.x, p.y, p.z]);
        Ok(Point3::new(img[1], img[2], img[3]))
    }
}

/// Printed-expansion form of the sandwich for a point (c1, c2, 0) of the
/// source plane: rotation columns scaled by 2 plus translation, with the
/// identity part subtracted back in. Used to cross-check the structural form
/// against the product implementation.
pub fn sandwich_expanded(q: &DualQuaternion, c1: f64, c2: f64) -> Point3 {
    let [x0, x1, x2, x3] = q.x;
    let [y0, y1, y2, y3] = q.y;
    let rot = [
        c1 * (x0 * x0 + x1 * x1) - c2 * (x0 * x3 - x1 * x2),
        c1 * (x0 * x3 + x1 * x2) + c2 * (x0 * x0 + x2 * x2),
        -c1 * (x0 * x2 - x3 * x1) + c2 * (x0 * x1 + x2 * x3),
    ];
    let tra = [
        x0 * y1 - x1 * y0 + x2 * y3 - x3 * y2,
        x0 * y2 - x2 * y0 + x3 * y1 - x1 * y3,
        x0 * y3 - x3 * y0 + x1 * y2 - x2 * y1,
    ];
    Point3::new(
        2.0 * (rot[0] + tra[0]) - c1,
        2.0 * (rot[1] + tra[1]) - c2,
        2.0 * (rot[2] + tra[2]),
    )
}

/// Outcome of comparing two placement solutions through their image
/// pentagons.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolutionRelation {
    DirectPair,
    MirroredPair,
    Unrelated(f64),
}

/// In-plane coordinates of a coplanar point set: centroid-anchored, basis
/// right-handed about the plane normal oriented by the rule "z-component
/// positive" (falling back to x, then y, for vertical planes).
pub(crate) fn inplane_coords(points: &[Point3]) -> Option<Vec<[f64; 2]>> {
    let n = points.len() as f64;
    let cx = points.iter().map(|p| p.x).sum::<f64>() / n;
    let cy = points.iter().map(|p| p.y).sum::<f64>() / n;
    let cz = points.iter().map(|p| p.z).sum::<f64>() / n;
    let rel: Vec<[f64; 3]> = points
        .iter()
        .map(|p| [p.x - cx, p.y - cy, p.z - cz])
        .collect();
    // Newell-style accumulated normal for robustness
    let mut nrm = [0.0f64; 3];
    for i in 0..rel.len() {
        let a = rel[i];
        let b = rel[(i + 1) % rel.len()];
        nrm[0] += a[1] * b[2] - a[2] * b[1];
        nrm[1] += a[2] * b[0] - a[0] * b[2];
        nrm[2] += a[0] * b[1] - a[1] * b[0];
    }
    let len = (nrm[0] * nrm[0] + nrm[1] * nrm[1] + nrm[2] * nrm[2]).sqrt();
    if len < 1e-9 {
        return None; // collinear
    }
    let mut nrm = nrm.map(|v| v / len);
    let flip = if nrm[2].abs() > 1e-9 {
        nrm[2] < 0.0
    } else if nrm[0].abs() > 1e-9 {
        nrm[0] < 0.0
    } else {
        nrm[1] < 0.0
    };
    if flip {
        nrm = nrm.map(|v| -v);
    }
    // e1 from the first spread direction, projected into the plane
    let mut e1 = rel
        .iter()
        .find(|v| v.iter().map(|x| x * x).sum::<f64>() > 1e-18)?
        .to_owned();
    let d = e1[0] * nrm[0] + e1[1] * nrm[1] + e1[2] * nrm[2];
    for k in 0..3 {
        e1[k] -= d * nrm[k];
    }
    let l1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    if l1 < 1e-12 {
        return None;
    }
    let e1 = e1.map(|v| v / l1);
    let e2 = [
        nrm[1] * e1[2] - nrm[2] * e1[1],
        nrm[2] * e1[0] - nrm[0] * e1[2],
        nrm[0] * e1[1] - nrm[1] * e1[0],
    ];
    Some(
        rel.iter()
            .map(|v| {
                [
                    v[0] * e1[0] + v[1] * e1[1] + v[2] * e1[2],
                    v[0] * e2[0] + v[1] * e2[1] + v[2] * e2[2],
                ]
            })
            .collect(),
    )
}

/// Best aligning in-plane isometry between two centered 2D point lists:
/// returns (direct_rms, mirrored_rms).
pub(crate) fn procrustes2(u: &[[f64; 2]], v: &[[f64; 2]]) -> (f64, f64) {
    let rms = |pts: &[[f64; 2]], q: &[[f64; 2]], theta: f64, reflect: bool| -> f64 {
        let (s, c) = theta.sin_cos();
        let mut acc = 0.0;
        for (a, b) in pts.iter().zip(q) {
            let ax = a[0];
            let ay = if reflect { -a[1] } else { a[1] };
            let rx = c * ax - s * ay;
            let ry = s * ax + c * ay;
            acc += (rx - b[0]).powi(2) + (ry - b[1]).powi(2);
        }
        (acc / pts.len() as f64).sqrt()
    };
    let best_theta = |reflect: bool| -> f64 {
        let mut num = 0.0;
        let mut den = 0.0;
        for (a, b) in u.iter().zip(v) {
            let ax = a[0];
            let ay = if reflect { -a[1] } else { a[1] };
            num += ax * b[1] - ay * b[0];
            den += ax * b[0] + ay * b[1];
        }
        num.atan2(den)
    };
    let direct = rms(u, v, best_theta(false), false);
    let mirrored = rms(u, v, best_theta(true), true);
    (direct, mirrored)
}

/// Compare the image pentagons of two solutions: DirectPair if the best
/// aligning in-plane isometry is a rotation within `tol` RMS, MirroredPair if
/// it needs a reflection, Unrelated otherwise.
pub fn compare_solutions(
    q1: &DualQuaternion,
    q2: &DualQuaternion,
    source: &[Point3; 5],
    tol: f64,
) -> Result<SolutionRelation> {
    if source.iter().any(|p| p.z.abs() > 1e-9) {
        return Err(Error::DegenerateSource);
    }
    let img1: Vec<Point3> = source
        .iter()
        .map(|p| q1.act(*p))
        .collect::<Result<_>>()?;
    let img2: Vec<Point3> = source
        .iter()
        .map(|p| q2.act(*p))
        .collect::<Result<_>>()?;
    let u = inplane_coords(&img1).ok_or(Error::DegenerateSource)?;
    let v = inplane_coords(&img2).ok_or(Error::DegenerateSource)?;
    let (direct, mirrored) = procrustes2(&u, &v);
    if direct <= mirrored && direct < tol {
        Ok(SolutionRelation::DirectPair)
    } else if mirrored < direct && mirrored < tol {
        Ok(SolutionRelation::MirroredPair)
    } else {
        Ok(SolutionRelation::Unrelated(direct.min(mirrored)))
    }
}
