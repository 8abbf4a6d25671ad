//! Placement of a coplanar five-point array on the right cone
//! x^2 + y^2 - z^2 = 0: the eight-constraint polynomial system in the Study
//! parameters, a seeded multi-start damped Newton solver over the reals, and
//! checks against the factored univariate polynomials of the example.
//!
//! Constraints, in residual order: the image of the first point (anchored at
//! the origin) lies on the generator cut by the planes y = 0 and x - z = 0
//! (two residuals); the images of the remaining four points lie on the cone
//! (four residuals); the norming and Study conditions close the system.

use crate::dualquat::{compare_solutions, DualQuaternion, Point3, SolutionRelation};
use crate::error::{Error, Result};
use crate::quat::{qconj, qmul, qsub, sandwich};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// The square 8x8 polynomial system for one pentagon.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    pentagon: [Point3; 5],
}

/// Basis quaternion e_i.
fn basis(i: usize) -> [f64; 4] {
    let mut e = [0.0; 4];
    e[i] = 1.0;
    e
}

impl ConstraintSystem {
    pub fn pentagon(&self) -> &[Point3; 5] {
        &self.pentagon
    }

    /// The eight residuals at a parameter vector (x0..x3, y0..y3).
    pub fn residuals(&self, s: &[f64; 8]) -> [f64; 8] {
        let x = [s[0], s[1], s[2], s[3]];
        let y = [s[4], s[5], s[6], s[7]];
        let mut r = [0.0; 8];
        // image of the anchored point: pure translation term
        let h = qsub(qmul(y, qconj(x)), qmul(x, qconj(y)));
        r[0] = h[2];
        r[1] = h[1] - h[3];
        for (k, p) in self.pentagon[1..].iter().enumerate() {
            let c = sandwich(x, y, [p.x, p.y, p.z]);
            r[2 + k] = c[1] * c[1] + c[2] * c[2] - c[3] * c[3];
        }
        r[6] = x.iter().map(|v| v * v).sum::<f64>() - 1.0;
        r[7] = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        r
    }

    /// Analytic Jacobian, column k = partial derivatives in s_k.
    pub fn jacobian(&self, s: &[f64; 8]) -> [[f64; 8]; 8] {
        let x = [s[0], s[1], s[2], s[3]];
        let y = [s[4], s[5], s[6], s[7]];
        let mut jac = [[0.0; 8]; 8];
        let images: Vec<[f64; 4]> = self.pentagon[1..]
            .iter()
            .map(|p| sandwich(x, y, [p.x, p.y, p.z]))
            .collect();
        for k in 0..8 {
            let e = basis(k % 4);
            // derivative of the translation term y x* - x y*
            let dh = if k < 4 {
                qsub(qmul(y, qconj(e)), qmul(e, qconj(y)))
            } else {
                qsub(qmul(e, qconj(x)), qmul(x, qconj(e)))
            };
            jac[0][k] = dh[2];
            jac[1][k] = dh[1] - dh[3];
            for (row, p) in self.pentagon[1..].iter().enumerate() {
                let c = [0.0, p.x, p.y, p.z];
                let dphi = if k < 4 {
                    let rot = add4(
                        qmul(qmul(e, c), qconj(x)),
                        qmul(qmul(x, c), qconj(e)),
                    );
                    add4(rot, dh)
                } else {
                    dh
                };
                let img = images[row];
                jac[2 + row][k] =
                    2.0 * (img[1] * dphi[1] + img[2] * dphi[2] - img[3] * dphi[3]);
            }
            jac[6][k] = if k < 4 { 2.0 * x[k] } else { 0.0 };
            jac[7][k] = if k < 4 { y[k] } else { x[k - 4] };
        }
        jac
    }
}

fn add4(a: [f64; 4], b: [f64; 4]) -> [f64; 4] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

/// Build the constraint system. The pentagon must lie on z = 0 with its
/// first point at the origin.
pub fn build_constraints(pentagon: &[Point3; 5]) -> Result<ConstraintSystem> {
    let a = pentagon[0];
    if a.x != 0.0 || a.y != 0.0 || a.z != 0.0 {
        return Err(Error::BadPentagon("first point must be the origin".into()));
    }
    if pentagon.iter().any(|p| p.z.abs() > 1e-12) {
        return Err(Error::BadPentagon("points must lie on z = 0".into()));
    }
    Ok(ConstraintSystem {
        pentagon: *pentagon,
    })
}

/// Solver knobs; all exposed as CLI flags.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    pub seed: u64,
    pub max_starts: usize,
    pub tol_residual: f64,
    pub tol_dedup: f64,
    pub early_stop_window: usize,
    pub newton_max_iter: usize,
    pub y_radius: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            max_starts: 2000,
            tol_residual: 1e-10,
            tol_dedup: 1e-6,
            early_stop_window: 500,
            newton_max_iter: 100,
            y_radius: 5.0,
        }
    }
}

/// One sign-canonical solution class.
#[derive(Debug, Clone)]
pub struct PlacementSolution {
    pub dq: DualQuaternion,
    /// Max-norm of the residual vector at the stored parameters.
    pub residual: f64,
}

impl PlacementSolution {
    pub fn x0(&self) -> f64 {
        self.dq.x[0]
    }

    pub fn params(&self) -> [f64; 8] {
        let mut s = [0.0; 8];
        s[..4].copy_from_slice(&self.dq.x);
        s[4..].copy_from_slice(&self.dq.y);
        s
    }
}

/// All solution classes found, q ~ -q collapsed, sorted by x0 descending then
/// lexicographically.
#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub solutions: Vec<PlacementSolution>,
    /// False when the start budget ran out before the class count had been
    /// stable for the configured window.
    pub complete: bool,
    pub starts_used: usize,
}

impl SolutionSet {
    pub fn x0_values(&self) -> Vec<f64> {
        self.solutions.iter().map(|s| s.x0()).collect()
    }
}

/// Sign-canonical representative: x0 >= 0, ties broken by the first entry
/// of significant magnitude.
fn canonicalize_sign(s: &mut [f64; 8]) {
    let tie = 1e-9;
    let flip = if s[0] < -tie {
        true
    } else if s[0] > tie {
        false
    } else {
        match s.iter().find(|v| v.abs() > tie) {
            Some(v) => *v < 0.0,
            None => false,
        }
    };
    if flip {
        for v in s.iter_mut() {
            *v = -*v;
        }
    }
}

/// Dense 8x8 linear solve with partial pivoting. Returns None on a
/// numerically singular matrix.
fn solve8(mut a: [[f64; 8]; 8], mut b: [f64; 8]) -> Option<[f64; 8]> {
    for k in 0..8 {
        let (piv, max) = (k..8)
            .map(|i| (i, a[i][k].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if max < 1e-14 {
            return None;
        }
        a.swap(k, piv);
        b.swap(k, piv);
        for i in k + 1..8 {
            let f = a[i][k] / a[k][k];
            for j in k..8 {
                a[i][j] -= f * a[k][j];
            }
            b[i] -= f * b[k];
        }
    }
    let mut x = [0.0; 8];
    for k in (0..8).rev() {
        let mut acc = b[k];
        for j in k + 1..8 {
            acc -= a[k][j] * x[j];
        }
        x[k] = acc / a[k][k];
    }
    Some(x)
}

fn norm2(v: &[f64; 8]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn norm_inf(v: &[f64; 8]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Damped Newton from one start; returns the converged parameter vector.
fn newton(system: &ConstraintSystem, start: [f64; 8], cfg: &SolverConfig) -> Option<[f64; 8]> {
    let mut s = start;
    for _ in 0..cfg.newton_max_iter {
        let r = system.residuals(&s);
        if norm_inf(&r) < cfg.tol_residual {
            return Some(s);
        }
        let j = system.jacobian(&s);
        let neg_r = std::array::from_fn(|i| -r[i]);
        let step = solve8(j, neg_r)?;
        let base = norm2(&r);
        let mut lambda = 1.0;
        let mut accepted = false;
        for _ in 0..40 {
            let cand = std::array::from_fn(|i| s[i] + lambda * step[i]);
            if norm2(&system.residuals(&cand)) < base {
                s = cand;
                accepted = true;
                break;
            }
            lambda *= 0.5;
        }
        if !accepted {
            return None;
        }
    }
    let r = system.residuals(&s);
    (norm_inf(&r) < cfg.tol_residual).then_some(s)
}

/// Multi-start solve. Starts draw the rotation part uniformly from the unit
/// 3-sphere and the dual part uniformly from a ball; the run stops early once
/// the class count has been stable for `early_stop_window` consecutive
/// starts.
pub fn solve(system: &ConstraintSystem, cfg: &SolverConfig) -> SolutionSet {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut classes: Vec<[f64; 8]> = Vec::new();
    let mut stable = 0usize;
    let mut starts_used = 0usize;
    let mut complete = false;
    while starts_used < cfg.max_starts {
        starts_used += 1;
        let mut start = [0.0f64; 8];
        loop {
            let mut n2 = 0.0;
            for v in &mut start[..4] {
                *v = rng.sample(StandardNormal);
                n2 += *v * *v;
            }
            if n2 > 1e-12 {
                let n = n2.sqrt();
                for v in &mut start[..4] {
                    *v /= n;
                }
                break;
            }
        }
        loop {
            let mut n2 = 0.0;
            for v in &mut start[4..] {
                *v = rng.gen_range(-cfg.y_radius..cfg.y_radius);
                n2 += *v * *v;
            }
            if n2 <= cfg.y_radius * cfg.y_radius {
                break;
            }
        }
        stable += 1;
        if let Some(mut sol) = newton(system, start, cfg) {
            canonicalize_sign(&mut sol);
            let dist = |a: &[f64; 8], b: &[f64; 8]| -> f64 {
                a.iter()
                    .zip(b)
                    .map(|(x, y)| (x - y) * (x - y))
                    .sum::<f64>()
                    .sqrt()
            };
            if !classes.iter().any(|c| dist(c, &sol) < cfg.tol_dedup) {
                classes.push(sol);
                stable = 0;
            }
        }
        if stable >= cfg.early_stop_window {
            complete = true;
            break;
        }
    }
    classes.sort_by(|a, b| {
        b[0].total_cmp(&a[0])
            .then_with(|| a.iter().zip(b.iter()).fold(std::cmp::Ordering::Equal, |o, (x, y)| o.then(x.total_cmp(y))))
    });
    let solutions = classes
        .into_iter()
        .map(|s| {
            let residual = norm_inf(&system.residuals(&s));
            PlacementSolution {
                dq: DualQuaternion::new(
                    [s[0], s[1], s[2], s[3]],
                    [s[4], s[5], s[6], s[7]],
                ),
                residual,
            }
        })
        .collect();
    SolutionSet {
        solutions,
        complete,
        starts_used,
    }
}

/// Polish a parameter vector onto the constraint manifold (a few undamped
/// Newton steps); used to identify the solution class a rounded parameter
/// vector denotes.
pub fn polish(system: &ConstraintSystem, dq: &DualQuaternion) -> Option<PlacementSolution> {
    let mut s = [0.0f64; 8];
    s[..4].copy_from_slice(&dq.x);
    s[4..].copy_from_slice(&dq.y);
    let cfg = SolverConfig::default();
    let mut sol = newton(system, s, &cfg)?;
    canonicalize_sign(&mut sol);
    let residual = norm_inf(&system.residuals(&sol));
    Some(PlacementSolution {
        dq: DualQuaternion::new([sol[0], sol[1], sol[2], sol[3]], [sol[4], sol[5], sol[6], sol[7]]),
        residual,
    })
}

/// Pair the solution classes whose image pentagons are in-plane mirrors and
/// nearest to each other in space; with mutual nearest-neighbor matching the
/// pairing is unique and involutive.
pub fn mirror_pairs(
    set: &SolutionSet,
    source: &[Point3; 5],
) -> Result<Vec<(usize, usize)>> {
    let n = set.solutions.len();
    let mut images: Vec<Vec<Point3>> = Vec::with_capacity(n);
    for s in &set.solutions {
        images.push(source.iter().map(|p| s.dq.act(*p)).collect::<Result<_>>()?);
    }
    let rms = |a: &[Point3], b: &[Point3]| -> f64 {
        (a.iter()
            .zip(b)
            .map(|(p, q)| p.dist(q).powi(2))
            .sum::<f64>()
            / a.len() as f64)
            .sqrt()
    };
    let mut nearest: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if i == j {
                continue;
            }
            let rel = compare_solutions(
                &set.solutions[i].dq,
                &set.solutions[j].dq,
                source,
                1e-6,
            )?;
            if rel == SolutionRelation::MirroredPair {
                let d = rms(&images[i], &images[j]);
                if best.map_or(true, |(_, bd)| d < bd) {
                    best = Some((j, d));
                }
            }
        }
        nearest[i] = best.map(|(j, _)| j);
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        if let Some(j) = nearest[i] {
            if j > i && nearest[j] == Some(i) {
                pairs.push((i, j));
            }
        }
    }
    Ok(pairs)
}

/// Printed univariate factors of the placement eliminant in x0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UvpFactor {
    /// Degree 8, leading coefficient 1183744.
    F8a,
    /// Degree 8 with the leading coefficient corrected to 1183744.
    F8b,
    /// Degree 8 exactly as printed (leading coefficient 111183744).
    F8bPrinted,
    /// Degree 16, as printed.
    F16,
}

/// Coefficients, highest power first (even powers only; odd slots zero).
fn factor_coeffs(f: UvpFactor) -> &'static [f64] {
    match f {
        UvpFactor::F8a => &[
            1183744.0, 0.0, -591872.0, 0.0, 97600.0, 0.0, -5904.0, 0.0, 81.0,
        ],
        UvpFactor::F8b => &[
            1183744.0, 0.0, -1775616.0, 0.0, 878400.0, 0.0, -159408.0, 0.0, 6561.0,
        ],
        UvpFactor::F8bPrinted => &[
            111183744.0, 0.0, -1775616.0, 0.0, 878400.0, 0.0, -159408.0, 0.0, 6561.0,
        ],
        UvpFactor::F16 => &[
            516716384256.0,
            0.0,
            -10233432768512.0,
            0.0,
            7827661127680.0,
            0.0,
            -1021055926272.0,
            0.0,
            -834991220736.0,
            0.0,
            75713882112.0,
            0.0,
            209299178880.0,
            0.0,
            60512832.0,
            0.0,
            6561.0,
        ],
    }
}

/// Value of the selected factor at x0 (Horner).
pub fn uvp_value(x0: f64, factor: UvpFactor) -> f64 {
    factor_coeffs(factor).iter().fold(0.0, |acc, c| acc * x0 + c)
}

/// |value| normalized by the largest term magnitude; near zero only at a
/// root.
pub fn uvp_scaled_residual(x0: f64, factor: UvpFactor) -> f64 {
    let coeffs = factor_coeffs(factor);
    let deg = coeffs.len() - 1;
    let mut sum = 0.0;
    let mut max_term = 0.0f64;
    for (i, c) in coeffs.iter().enumerate() {
        let term = c * x0.powi((deg - i) as i32);
        sum += term;
        max_term = max_term.max(term.abs());
    }
    if max_term == 0.0 {
        0.0
    } else {
        sum.abs() / max_term
    }
}

/// Sampling spec for the positivity check of the degree-16 factor.
#[derive(Debug, Clone, Copy)]
pub struct SamplingSpec {
    pub lo: f64,
    pub hi: f64,
    pub samples: usize,
    pub max_depth: u32,
}

impl Default for SamplingSpec {
    fn default() -> Self {
        Self {
            lo: -2.0,
            hi: 2.0,
            samples: 4001,
            max_depth: 40,
        }
    }
}

/// True iff the printed degree-16 factor is strictly positive on [lo, hi]
/// (dense sign sampling plus derivative-bounded interval refinement) and its
/// leading/constant behavior confirms positivity outside the interval.
pub fn f16_no_real_roots_check(grid: &SamplingSpec) -> bool {
    let coeffs = factor_coeffs(UvpFactor::F16);
    let f = |x: f64| coeffs.iter().fold(0.0, |acc, c| acc * x + c);
    // quick scan
    for i in 0..grid.samples {
        let x = grid.lo + (grid.hi - grid.lo) * i as f64 / (grid.samples - 1) as f64;
        if f(x) <= 0.0 {
            return false;
        }
    }
    // derivative magnitude bound on [-m, m]
    let deg = coeffs.len() - 1;
    let dbound = |m: f64| -> f64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = (deg - i) as f64;
                c.abs() * k * m.powf((k - 1.0).max(0.0))
            })
            .sum()
    };
    fn certify(
        f: &dyn Fn(f64) -> f64,
        dbound: &dyn Fn(f64) -> f64,
        lo: f64,
        hi: f64,
        depth: u32,
    ) -> bool {
        let mid = 0.5 * (lo + hi);
        let v = f(mid);
        if v <= 0.0 {
            return false;
        }
        let m = lo.abs().max(hi.abs());
        if dbound(m) * 0.5 * (hi - lo) < v {
            return true;
        }
        if depth == 0 {
            return false;
        }
        certify(f, dbound, lo, mid, depth - 1) && certify(f, dbound, mid, hi, depth - 1)
    }
    if !certify(&f, &dbound, grid.lo, grid.hi, grid.max_depth) {
        return false;
    }
    // outside: the leading term must dominate the rest at the boundary (and
    // hence beyond, since its share only grows with |x|)
    let m = grid.lo.abs().max(grid.hi.abs());
    let lead = coeffs[0] * m.powi(deg as i32);
    let rest: f64 = coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, c)| c.abs() * m.powi((deg - 1 - i) as i32))
        .sum();
    coeffs[0] > 0.0 && lead > rest
}
