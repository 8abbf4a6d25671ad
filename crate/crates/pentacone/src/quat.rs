//! Quaternion arithmetic on f64 quadruples (w, x, y, z), shared by the
//! dual-quaternion transform and the placement constraint system.

pub(crate) fn qmul(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
        a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
        a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
        a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
    ]
}

pub(crate) fn qconj(a: [f64; 4]) -> [f64; 4] {
    [a[0], -a[1], -a[2], -a[3]]
}

pub(crate) fn qdot(a: [f64; 4], b: [f64; 4]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

pub(crate) fn qadd(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

pub(crate) fn qsub(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

pub(crate) fn qscale(a: [f64; 4], s: f64) -> [f64; 4] {
    [a[0] * s, a[1] * s, a[2] * s, a[3] * s]
}

/// Raw image of the point quaternion (0, p) under the displacement (x | y):
/// vector part of x p x* + y x* - x y*. Exact polynomial in the eight
/// parameters; homogeneous weight |x|^2 on the rotational term.
pub(crate) fn sandwich(x: [f64; 4], y: [f64; 4], p: [f64; 3]) -> [f64; 4] {
    let c = [0.0, p[0], p[1], p[2]];
    let rot = qmul(qmul(x, c), qconj(x));
    let tra = qsub(qmul(y, qconj(x)), qmul(x, qconj(y)));
    qadd(rot, tra)
}
