//! Exact homogeneous-coordinate primitives: joins, meets, incidence and
//! canonical scaling, shared by the pencil constructions.
//!
//! Points carry lower-case coordinates `{x0 : x1 : x2}`, lines and planes the
//! dual upper-case coordinates; a point and a hyperplane are incident iff the
//! inner product of their coordinate vectors vanishes. All values are
//! immutable and every operation is a pure function.

use crate::error::{Error, Result};
use crate::flop::FlopCounter;
use crate::rat::{canonical_vec, rat_i, Rat};
use num_traits::Zero;

/// Projective point of the plane, `{x0 : x1 : x2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint2(pub [Rat; 3]);

/// Projective line of the plane; `P0·x0 + P1·x1 + P2·x2 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HLine2(pub [Rat; 3]);

/// Projective point of 3-space, `{x0 : x1 : x2 : x3}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoint3(pub [Rat; 4]);

/// Projective plane of 3-space; `P0·x0 + P1·x1 + P2·x2 + P3·x3 = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HPlane3(pub [Rat; 4]);

macro_rules! coords_impl {
    ($ty:ident, $n:literal) => {
        impl $ty {
            pub fn new(coords: [Rat; $n]) -> Self {
                Self(coords)
            }

            pub fn from_ints(coords: [i64; $n]) -> Self {
                Self(coords.map(rat_i))
            }

            pub fn is_zero(&self) -> bool {
                self.0.iter().all(|c| c.is_zero())
            }

            /// Canonical representative: integer entries, gcd 1, first
            /// nonzero entry positive.
            pub fn canonical(&self) -> Self {
                let v = canonical_vec(&self.0);
                Self(v.try_into().expect("length preserved"))
            }

            /// True iff the two coordinate vectors are proportional.
            pub fn projectively_eq(&self, other: &Self) -> bool {
                self.canonical() == other.canonical()
            }
        }
    };
}

coords_impl!(HPoint2, 3);
coords_impl!(HLine2, 3);
coords_impl!(HPoint3, 4);
coords_impl!(HPlane3, 4);

impl HPoint2 {
    /// Affine point (x, y) as {1 : x : y}.
    pub fn affine(x: Rat, y: Rat) -> Self {
        Self([rat_i(1), x, y])
    }

    pub fn affine_i(x: i64, y: i64) -> Self {
        Self([rat_i(1), rat_i(x), rat_i(y)])
    }
}

impl HPoint3 {
    /// Affine point (x, y, z) as {1 : x : y : z}.
    pub fn affine(x: Rat, y: Rat, z: Rat) -> Self {
        Self([rat_i(1), x, y, z])
    }

    pub fn affine_i(x: i64, y: i64, z: i64) -> Self {
        Self([rat_i(1), rat_i(x), rat_i(y), rat_i(z)])
    }
}

/// Cross product of two homogeneous triples, without canonicalization.
/// Counts 2 muls + 1 sub per coordinate.
pub(crate) fn raw_cross(a: &[Rat; 3], b: &[Rat; 3], flops: &mut FlopCounter) -> [Rat; 3] {
    flops.mul(6);
    flops.add(3);
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Line through two distinct points, canonically scaled.
pub fn join_points2(a: &HPoint2, b: &HPoint2) -> Result<HLine2> {
    let mut fl = FlopCounter::new();
    let c = raw_cross(&a.0, &b.0, &mut fl);
    if c.iter().all(|x| x.is_zero()) {
        return Err(Error::CoincidentPoints);
    }
    Ok(HLine2(c).canonical())
}

/// Common point of two distinct lines, canonically scaled.
pub fn meet_lines2(l: &HLine2, m: &HLine2) -> Result<HPoint2> {
    let mut fl = FlopCounter::new();
    let c = raw_cross(&l.0, &m.0, &mut fl);
    if c.iter().all(|x| x.is_zero()) {
        return Err(Error::CoincidentLines);
    }
    Ok(HPoint2(c).canonical())
}

/// Signed 3x3 cofactors of the 3x4 coordinate matrix of three points: the
/// plane through them, unscaled. Zero vector iff the points are collinear
/// (rank < 3).
pub(crate) fn raw_plane3(a: &HPoint3, b: &HPoint3, c: &HPoint3) -> [Rat; 4] {
    let rows = [&a.0, &b.0, &c.0];
    let det3 = |cols: [usize; 3]| -> Rat {
        let m = |r: usize, k: usize| &rows[r][cols[k]];
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
            - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    [
        det3([1, 2, 3]),
        -det3([0, 2, 3]),
        det3([0, 1, 3]),
        -det3([0, 1, 2]),
    ]
}

/// Plane through three non-collinear points, canonically scaled, with exact
/// zero incidence residual at each of them.
pub fn plane_through_points3(a: &HPoint3, b: &HPoint3, c: &HPoint3) -> Result<HPlane3> {
    let n = raw_plane3(a, b, c);
    if n.iter().all(|x| x.is_zero()) {
        return Err(Error::CollinearPoints);
    }
    Ok(HPlane3(n).canonical())
}

/// Incidence residual of a point and a line: exact inner product; zero iff
/// incident.
pub fn incidence2(p: &HPoint2, l: &HLine2) -> Rat {
    p.0.iter().zip(&l.0).map(|(a, b)| a * b).sum()
}

/// Incidence residual of a point and a plane.
pub fn incidence3(p: &HPoint3, pl: &HPlane3) -> Rat {
    p.0.iter().zip(&pl.0).map(|(a, b)| a * b).sum()
}
