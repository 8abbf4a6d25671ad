//! Machine-readable result documents. Field order is fixed by the struct
//! definitions and floats serialize through the shortest-round-trip printer,
//! so identical inputs, flags and seed produce byte-identical output.

use pentacone::conic::Conic;
use pentacone::flop::FlopReport;
use pentacone::quadric::Quadric;
use serde::Serialize;

use crate::doc::PointSetDocument;

#[derive(Serialize)]
pub struct InputEcho {
    pub dimension: u8,
    pub homogeneous: bool,
    pub points: Vec<crate::doc::LabeledPoint>,
}

impl InputEcho {
    pub fn from_doc(doc: &PointSetDocument) -> Self {
        Self {
            dimension: doc.dimension,
            homogeneous: doc.homogeneous,
            points: doc.points.clone(),
        }
    }
}

#[derive(Serialize)]
pub struct ConicResult {
    /// Canonical (a00, a01, a02, a11, a12, a22), exact integer strings.
    pub coefficients: [String; 6],
    pub equation: String,
    pub classification: String,
}

impl ConicResult {
    pub fn from_conic(c: &Conic, class: &str) -> Self {
        let coefficients = std::array::from_fn(|i| c.coeffs[i].to_string());
        Self {
            coefficients,
            equation: conic_equation(c),
            classification: class.to_string(),
        }
    }
}

/// Human-readable implicit form with the doubled mixed coefficients inline.
pub fn conic_equation(c: &Conic) -> String {
    let two = pentacone::rat::rat_i(2);
    let terms = [
        (c.coeffs[0].clone(), "x0^2"),
        (&two * &c.coeffs[1], "x0*x1"),
        (&two * &c.coeffs[2], "x0*x2"),
        (c.coeffs[3].clone(), "x1^2"),
        (&two * &c.coeffs[4], "x1*x2"),
        (c.coeffs[5].clone(), "x2^2"),
    ];
    join_terms(terms.iter().map(|(c, m)| (c.to_string(), *m)))
}

pub fn quadric_equation(q: &Quadric) -> String {
    let two = pentacone::rat::rat_i(2);
    let names = [
        "x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2",
    ];
    let doubled = [false, true, true, true, false, true, true, false, true, false];
    join_terms(q.coeffs.iter().zip(names).zip(doubled).map(|((c, m), d)| {
        let v = if d { &two * c } else { c.clone() };
        (v.to_string(), m)
    }))
}

fn join_terms<'a>(terms: impl Iterator<Item = (String, &'a str)>) -> String {
    let mut out = String::new();
    for (coeff, monomial) in terms {
        if coeff == "0" {
            continue;
        }
        if out.is_empty() {
            out.push_str(&coeff);
        } else if let Some(stripped) = coeff.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(&coeff);
        }
        out.push('*');
        out.push_str(monomial);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Serialize)]
pub struct FlopsEcho {
    pub pencil_adds: u64,
    pub pencil_muls: u64,
    pub pencil_divs: u64,
    pub pencil_total: u64,
    pub det_adds: u64,
    pub det_muls: u64,
    pub det_divs: u64,
    pub det_total: u64,
    pub ratio: f64,
}

impl FlopsEcho {
    pub fn from_report(r: &FlopReport) -> Self {
        Self {
            pencil_adds: r.pencil.adds,
            pencil_muls: r.pencil.muls,
            pencil_divs: r.pencil.divs,
            pencil_total: r.pencil.total(),
            det_adds: r.det.adds,
            det_muls: r.det.muls,
            det_divs: r.det.divs,
            det_total: r.det.total(),
            ratio: r.ratio(),
        }
    }
}

#[derive(Serialize)]
pub struct Conic5Report {
    pub command: String,
    pub flags: serde_json::Value,
    pub input: InputEcho,
    pub pencil: ConicResult,
    pub multipliers: [String; 2],
    pub lines: Vec<[String; 3]>,
    pub role_permutation: [usize; 5],
    pub oracle: Option<OracleEcho>,
    /// Exact incidence residuals, one per input point.
    pub residuals: Vec<String>,
    pub flops: FlopsEcho,
    pub plot: Option<String>,
}

#[derive(Serialize)]
pub struct OracleEcho {
    pub coefficients: Vec<String>,
    pub agrees_with_pencil: bool,
}

#[derive(Serialize)]
pub struct Quadric9Report {
    pub command: String,
    pub flags: serde_json::Value,
    pub input: InputEcho,
    pub pairing: [usize; 4],
    pub pairing_labels: [String; 4],
    pub system: [[String; 4]; 3],
    pub multipliers: [String; 4],
    pub coefficients: [String; 10],
    pub equation: String,
    pub oracle: Option<OracleEcho>,
    pub residuals: Vec<String>,
    pub mesh: Option<String>,
}

#[derive(Serialize)]
pub struct ClassReport {
    pub x: [f64; 4],
    pub y: [f64; 4],
    pub x0: f64,
    pub residual: f64,
    pub images: Vec<[f64; 3]>,
    pub uvp_f8a_scaled: f64,
    pub uvp_f8b_scaled: f64,
    pub uvp_factor: String,
}

#[derive(Serialize)]
pub struct PlaceConeReport {
    pub command: String,
    pub flags: serde_json::Value,
    pub input: InputEcho,
    pub seed: u64,
    pub max_starts: usize,
    pub starts_used: usize,
    pub complete: bool,
    pub class_count: usize,
    pub x0_values: Vec<f64>,
    pub classes: Vec<ClassReport>,
    pub mirror_pairs: Vec<[usize; 2]>,
}

#[derive(Serialize)]
pub struct ConePairReport {
    pub command: String,
    pub flags: serde_json::Value,
    pub input: InputEcho,
    pub translations: Vec<[f64; 3]>,
    pub selected_translation: Option<[f64; 3]>,
    pub origin_cone: String,
    pub translated_cone: Option<TranslatedConeEcho>,
    pub intersection_plane: Option<[f64; 4]>,
    pub shared_conic: Option<SharedConicEcho>,
    pub scene: Option<String>,
}

#[derive(Serialize)]
pub struct TranslatedConeEcho {
    pub constant: f64,
    pub linear: [f64; 3],
    pub equation: String,
}

#[derive(Serialize)]
pub struct SharedConicEcho {
    pub origin_residuals: Vec<f64>,
    pub translated_residuals: Vec<f64>,
    pub plane_residuals: Vec<f64>,
    pub fitted_plane: Option<[f64; 4]>,
    pub plane_ratio: Option<f64>,
    pub max_abs_residual: f64,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}
