//! Nine-point quadric via four complementary plane pairs of the octahedral
//! covering, the Grassmannian multiplier solve, and a ten-sub-determinant
//! oracle.
//!
//! The first six input points are the octahedron vertices A..F, the last
//! three the substitution points. Each complementary partition of the
//! vertices into two triples yields a degenerate plane-pair quadric covering
//! all six; four independent pairs span the system of quadrics through the
//! vertices, and the three substitution points pin the member through all
//! nine.
//!
//! Coefficients are stored as `(a00, a01, a02, a03, a11, a12, a13, a22, a23,
//! a33)` with the doubled mixed-term convention, as for [`crate::conic::Conic`].

use crate::error::{Error, Result};
use crate::projective::{raw_plane3, HPlane3, HPoint3};
use crate::rat::{canonical_vec, rat, rat_i, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Implicit second-degree surface.
#[derive(Debug, Clone, PartialEq)]
pub struct Quadric {
    pub coeffs: [Rat; 10],
}

/// Index pairs (i, j) of the monomial order x0^2, x0x1, x0x2, x0x3, x1^2,
/// x1x2, x1x3, x2^2, x2x3, x3^2.
const MONOMIALS: [(usize, usize); 10] = [
    (0, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (1, 1),
    (1, 2),
    (1, 3),
    (2, 2),
    (2, 3),
    (3, 3),
];

impl Quadric {
    pub fn new(coeffs: [Rat; 10]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(coeffs: [i64; 10]) -> Self {
        Self::new(coeffs.map(rat_i))
    }

    /// Full implicit form at a point; exactly zero iff incident.
    pub fn evaluate(&self, p: &HPoint3) -> Rat {
        let two = rat_i(2);
        let mut acc = Rat::zero();
        for (c, (i, j)) in self.coeffs.iter().zip(MONOMIALS) {
            let term = c * &p.0[i] * &p.0[j];
            acc += if i == j { term } else { &two * term };
        }
        acc
    }

    pub fn canonical(&self) -> Quadric {
        let v = canonical_vec(&self.coeffs);
        Quadric::new(v.try_into().expect("length preserved"))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Degenerate quadric that factors into two planes.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanePairQuadric {
    pub p1: HPlane3,
    pub p2: HPlane3,
    pub quadric: Quadric,
}

/// Expand the product of two plane forms; planes are used exactly as given.
pub fn plane_pair(p1: &HPlane3, p2: &HPlane3) -> PlanePairQuadric {
    let a = &p1.0;
    let b = &p2.0;
    let half = rat(1, 2);
    let coeffs = std::array::from_fn(|k| {
        let (i, j) = MONOMIALS[k];
        if i == j {
            &a[i] * &b[i]
        } else {
            (&a[i] * &b[j] + &a[j] * &b[i]) * &half
        }
    });
    PlanePairQuadric {
        p1: p1.clone(),
        p2: p2.clone(),
        quadric: Quadric::new(coeffs),
    }
}

/// One complementary partition of the six vertex labels into two triples; the
/// triple containing vertex 0 comes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplementaryPair {
    pub first: [usize; 3],
    pub second: [usize; 3],
}

impl ComplementaryPair {
    /// Label string like "ABF<->CDE".
    pub fn label(&self) -> String {
        let name = |t: &[usize; 3]| -> String {
            t.iter().map(|&i| (b'A' + i as u8) as char).collect()
        };
        format!("{}<->{}", name(&self.first), name(&self.second))
    }
}

/// The ten complementary partitions, ordered by the triple containing A:
/// ABC<->DEF, ABD<->CEF, ABE<->CDF, ABF<->CDE, ACD<->BEF, ACE<->BDF,
/// ACF<->BDE, ADE<->BCF, ADF<->BCE, AEF<->BCD.
pub fn enumerate_pairs() -> [ComplementaryPair; 10] {
    let mut out = Vec::with_capacity(10);
    for b in 1..6 {
        for c in (b + 1)..6 {
            let first = [0, b, c];
            let second: Vec<usize> = (0..6).filter(|i| !first.contains(i)).collect();
            out.push(ComplementaryPair {
                first,
                second: second.try_into().expect("three left"),
            });
        }
    }
    out.try_into().expect("exactly ten")
}

/// An ordered selection of four of the ten complementary pairs; the order
/// fixes which multiplier slot each pair occupies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairChoice {
    pub indices: [usize; 4],
}

impl PairChoice {
    pub fn new(indices: [usize; 4]) -> Result<Self> {
        for (k, &i) in indices.iter().enumerate() {
            if i >= 10 {
                return Err(Error::DegenerateConfiguration(format!(
                    "pair index {i} out of range 0..10"
                )));
            }
            if indices[..k].contains(&i) {
                return Err(Error::DegenerateConfiguration(
                    "pair indices must be distinct".into(),
                ));
            }
        }
        Ok(Self { indices })
    }

    /// The selection used for the reference fixture:
    /// ABF<->CDE, ADE<->BCF, ADF<->BCE, ABE<->CDF.
    pub fn default_choice() -> Self {
        Self {
            indices: [3, 7, 8, 2],
        }
    }
}

/// Full result of the pencil construction on nine points.
#[derive(Debug, Clone)]
pub struct NinePointQuadric {
    pub pairs: [PlanePairQuadric; 4],
    /// Rows of the multiplier system, one per substitution point.
    pub system: [[Rat; 4]; 3],
    /// Grassmannian multipliers (α, β, γ, δ), unreduced signed minors.
    pub multipliers: [Rat; 4],
    pub quadric: Quadric,
    pub choice: PairChoice,
}

/// Build the four plane-pair quadrics for a choice. Planes are raw cofactor
/// vectors of the triple's points in label order, so integer inputs produce
/// the reproducible integer system.
fn build_pairs(pts: &[HPoint3; 9], choice: &PairChoice) -> Result<[PlanePairQuadric; 4]> {
    let all = enumerate_pairs();
    let mut pairs = Vec::with_capacity(4);
    for &idx in &choice.indices {
        let cp = all[idx];
        let plane_of = |t: &[usize; 3]| -> Result<HPlane3> {
            let n = raw_plane3(&pts[t[0]], &pts[t[1]], &pts[t[2]]);
            if n.iter().all(|x| x.is_zero()) {
                return Err(Error::CoplanarTriple);
            }
            Ok(HPlane3(n))
        };
        pairs.push(plane_pair(&plane_of(&cp.first)?, &plane_of(&cp.second)?));
    }
    Ok(pairs.try_into().expect("four pairs"))
}

/// Signed 3x3 minors (+, -, +, -) of a 3x4 system: the null vector when the
/// rank is 3. Exact and unreduced; canonical scaling happens at the quadric
/// level.
pub fn solve_multipliers4(system: &[[Rat; 4]; 3]) -> Result<[Rat; 4]> {
    let minors = signed_minors(system);
    if minors.iter().all(|m| m.is_zero()) {
        return Err(Error::RankDeficient);
    }
    Ok(minors)
}

fn signed_minors(system: &[[Rat; 4]; 3]) -> [Rat; 4] {
    std::array::from_fn(|skip| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        let m = std::array::from_fn(|r| std::array::from_fn(|c| system[r][cols[c]].clone()));
        let d = crate::rat::det3(&m);
        if skip % 2 == 0 {
            d
        } else {
            -d
        }
    })
}

/// Nine-point quadric for one explicit pair choice, with the intermediate
/// system and multipliers exposed.
pub fn nine_point_quadric(pts: &[HPoint3; 9], choice: &PairChoice) -> Result<NinePointQuadric> {
    for i in 0..9 {
        if pts[i].is_zero() {
            return Err(Error::DegenerateConfiguration(
                "zero coordinate vector".into(),
            ));
        }
        for j in (i + 1)..9 {
            if pts[i].projectively_eq(&pts[j]) {
                return Err(Error::DuplicatePoints);
            }
        }
    }
    let pairs = build_pairs(pts, choice)?;
    let system: [[Rat; 4]; 3] = std::array::from_fn(|r| {
        let x = &pts[6 + r];
        std::array::from_fn(|k| {
            let e1: Rat = pairs[k].p1.0.iter().zip(&x.0).map(|(a, b)| a * b).sum();
            let e2: Rat = pairs[k].p2.0.iter().zip(&x.0).map(|(a, b)| a * b).sum();
            e1 * e2
        })
    });
    let multipliers = solve_multipliers4(&system).map_err(|_| Error::DegenerateChoice)?;
    let mut coeffs: [Rat; 10] = Default::default();
    for (pair, m) in pairs.iter().zip(&multipliers) {
        for (c, pc) in coeffs.iter_mut().zip(&pair.quadric.coeffs) {
            *c += m * pc;
        }
    }
    let quadric = Quadric::new(coeffs);
    if quadric.is_zero() {
        // the four pair quadrics were linearly dependent: the minors recover
        // the dependency, not a member through the nine points
        return Err(Error::DegenerateChoice);
    }
    let quadric = quadric.canonical();
    debug_assert!(pts.iter().all(|p| quadric.evaluate(p).is_zero()));
    Ok(NinePointQuadric {
        pairs,
        system,
        multipliers,
        quadric,
        choice: *choice,
    })
}

/// Quadric through nine points. Tries the given choice first and falls back
/// to the remaining 4-subsets of the ten pairs before surfacing an error.
pub fn quadric_through_9(pts: &[HPoint3; 9], choice: &PairChoice) -> Result<Quadric> {
    let first = match nine_point_quadric(pts, choice) {
        Ok(r) => return Ok(r.quadric),
        Err(e @ (Error::DuplicatePoints | Error::DegenerateConfiguration(_))) => return Err(e),
        Err(e) => e,
    };
    for alt in all_choices() {
        if alt.indices == choice.indices {
            continue;
        }
        if let Ok(r) = nine_point_quadric(pts, &alt) {
            return Ok(r.quadric);
        }
    }
    Err(first)
}

/// All 210 four-subsets of the ten pairs, lexicographic.
pub fn all_choices() -> Vec<PairChoice> {
    let mut out = Vec::with_capacity(210);
    for a in 0..10 {
        for b in (a + 1)..10 {
            for c in (b + 1)..10 {
                for d in (c + 1)..10 {
                    out.push(PairChoice {
                        indices: [a, b, c, d],
                    });
                }
            }
        }
    }
    out
}

/// True iff two valid choices produce identical canonical quadrics.
pub fn choice_invariance_check(
    pts: &[HPoint3; 9],
    a: &PairChoice,
    b: &PairChoice,
) -> Result<bool> {
    let qa = nine_point_quadric(pts, a)?.quadric;
    let qb = nine_point_quadric(pts, b)?.quadric;
    Ok(qa == qb)
}

/// Independent oracle: the ten signed 9x9 sub-determinants of the monomial
/// row matrix, via fraction-free Bareiss elimination over the integers.
pub fn quadric_oracle_det(pts: &[HPoint3; 9]) -> Result<Quadric> {
    // scale each point to integer coordinates; row scaling multiplies every
    // cofactor by the same factor
    let mut rows: Vec<[BigInt; 10]> = Vec::with_capacity(9);
    for p in pts {
        let mut l = BigInt::one();
        for c in &p.0 {
            l = l.lcm(c.denom());
        }
        let ints: [BigInt; 4] = std::array::from_fn(|i| p.0[i].numer() * (&l / p.0[i].denom()));
        rows.push(std::array::from_fn(|k| {
            let (i, j) = MONOMIALS[k];
            &ints[i] * &ints[j]
        }));
    }
    let mut coeffs: [Rat; 10] = Default::default();
    for (k, c) in coeffs.iter_mut().enumerate() {
        let minor: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let d = bareiss_det(minor);
        let signed = if k % 2 == 0 { d } else { -d };
        // cofactors are full-monomial coefficients; halve the mixed ones
        let (i, j) = MONOMIALS[k];
        *c = if i == j {
            Rat::from_integer(signed)
        } else {
            Rat::new(signed, BigInt::from(2))
        };
    }
    if coeffs.iter().all(|c| c.is_zero()) {
        return Err(Error::DegenerateConfiguration(
            "all ten sub-determinants vanish".into(),
        ));
    }
    Ok(Quadric::new(coeffs).canonical())
}

/// Fraction-free determinant of a square integer matrix.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
