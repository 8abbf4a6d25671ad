//! The five subcommands: conic5, quadric9, place-cone, cone-pair, selfcheck.

use num_traits::Zero;
use pentacone::cone_pair::{intersection_plane, recover_translation, shared_conic_check, translated_cone};
use pentacone::cone_solver::{
    build_constraints, mirror_pairs, polish, solve, uvp_scaled_residual, SolverConfig, UvpFactor,
};
use pentacone::conic::{classify_conic, conic_oracle_det, five_point_conic, flop_report};
use pentacone::dualquat::{compare_solutions, Point3, SolutionRelation};
use pentacone::fixtures;
use pentacone::quadric::{nine_point_quadric, quadric_oracle_det, PairChoice};
use pentacone::Error;
use serde_json::json;

use crate::doc::PointSetDocument;
use crate::report::*;
use crate::{mesh, plot, Failure};

fn write_artifact(path: &str, content: &str) -> Result<(), Failure> {
    std::fs::write(path, content)
        .map_err(|e| Failure::input(format!("cannot write '{path}': {e}")))
}

pub fn conic5(
    doc: &PointSetDocument,
    oracle: bool,
    plot_path: Option<&str>,
    resolution: usize,
) -> Result<String, Failure> {
    doc.expect_count(5, "conic5")?;
    let pts_vec = doc.to_hpoints2()?;
    let pts: [pentacone::projective::HPoint2; 5] =
        pts_vec.clone().try_into().expect("five points");
    let detail = five_point_conic(&pts)?;
    let class = classify_conic(&detail.conic);
    // independent residual pass before reporting success
    let residuals: Vec<String> = pts
        .iter()
        .map(|p| detail.conic.evaluate(p).to_string())
        .collect();
    if residuals.iter().any(|r| r != "0") {
        return Err(Failure {
            code: 2,
            message: "internal: nonzero residual on the reported conic".into(),
        });
    }
    let oracle_echo = if oracle {
        let o = conic_oracle_det(&pts)?;
        Some(OracleEcho {
            coefficients: o.coeffs.iter().map(|c| c.to_string()).collect(),
            agrees_with_pencil: o == detail.conic,
        })
    } else {
        None
    };
    let flops = flop_report(&pts)?;
    let plot_written = match plot_path {
        Some(path) => {
            let svg = plot::conic_svg(&detail.conic, &pts, resolution.max(16));
            write_artifact(path, &svg)?;
            Some(path.to_string())
        }
        None => None,
    };
    let report = Conic5Report {
        command: "conic5".into(),
        flags: json!({
            "oracle": oracle,
            "plot": plot_path,
            "resolution": resolution,
        }),
        input: InputEcho::from_doc(doc),
        pencil: ConicResult::from_conic(&detail.conic, &format!("{class:?}")),
        multipliers: [detail.lambda.to_string(), detail.mu.to_string()],
        lines: detail
            .lines
            .iter()
            .map(|l| std::array::from_fn(|i| l.0[i].to_string()))
            .collect(),
        role_permutation: detail.permutation,
        oracle: oracle_echo,
        residuals,
        flops: FlopsEcho::from_report(&flops),
        plot: plot_written,
    };
    Ok(to_json(&report))
}

pub fn quadric9(
    doc: &PointSetDocument,
    oracle: bool,
    pairing: Option<[usize; 4]>,
    mesh_path: Option<&str>,
    resolution: usize,
) -> Result<String, Failure> {
    doc.expect_count(9, "quadric9")?;
    let pts_vec = doc.to_hpoints3()?;
    let pts: [pentacone::projective::HPoint3; 9] =
        pts_vec.clone().try_into().expect("nine points");
    let choice = match pairing {
        Some(idx) => PairChoice::new(idx)?,
        None => PairChoice::default_choice(),
    };
    let r = nine_point_quadric(&pts, &choice)?;
    let residuals: Vec<String> = pts
        .iter()
        .map(|p| r.quadric.evaluate(p).to_string())
        .collect();
    if residuals.iter().any(|x| x != "0") {
        return Err(Failure {
            code: 2,
            message: "internal: nonzero residual on the reported quadric".into(),
        });
    }
    let oracle_echo = if oracle {
        let o = quadric_oracle_det(&pts)?;
        Some(OracleEcho {
            coefficients: o.coeffs.iter().map(|c| c.to_string()).collect(),
            agrees_with_pencil: o == r.quadric,
        })
    } else {
        None
    };
    let labels = pentacone::quadric::enumerate_pairs();
    let mesh_written = match mesh_path {
        Some(path) => {
            let m = mesh::quadric_mesh(&r.quadric, &pts, resolution);
            write_artifact(path, &m.to_obj("nine-point quadric"))?;
            Some(path.to_string())
        }
        None => None,
    };
    let report = Quadric9Report {
        command: "quadric9".into(),
        flags: json!({
            "oracle": oracle,
            "pairing": pairing.map(|p| p.to_vec()),
            "mesh": mesh_path,
            "resolution": resolution,
        }),
        input: InputEcho::from_doc(doc),
        pairing: r.choice.indices,
        pairing_labels: std::array::from_fn(|i| labels[r.choice.indices[i]].label()),
        system: std::array::from_fn(|i| std::array::from_fn(|j| r.system[i][j].to_string())),
        multipliers: std::array::from_fn(|i| r.multipliers[i].to_string()),
        coefficients: std::array::from_fn(|i| r.quadric.coeffs[i].to_string()),
        equation: quadric_equation(&r.quadric),
        oracle: oracle_echo,
        residuals,
        mesh: mesh_written,
    };
    Ok(to_json(&report))
}

pub struct PlaceConeFlags {
    pub seed: Option<u64>,
    pub max_starts: Option<usize>,
    pub tol: Option<f64>,
}

pub fn place_cone(doc: &PointSetDocument, flags: &PlaceConeFlags) -> Result<(String, bool), Failure> {
    doc.expect_count(5, "place-cone")?;
    let pts = doc.to_points3f()?;
    let pentagon: [Point3; 5] = pts.try_into().expect("five points");
    let system = build_constraints(&pentagon)?;
    let mut cfg = SolverConfig::default();
    if let Some(s) = flags.seed {
        cfg.seed = s;
    }
    if let Some(m) = flags.max_starts {
        cfg.max_starts = m;
    }
    if let Some(t) = flags.tol {
        cfg.tol_residual = t;
    }
    let set = solve(&system, &cfg);
    let mut classes = Vec::with_capacity(set.solutions.len());
    for sol in &set.solutions {
        let images: Vec<[f64; 3]> = pentagon
            .iter()
            .map(|p| sol.dq.act(*p).map(|q| q.to_array()))
            .collect::<pentacone::Result<_>>()?;
        let f8a = uvp_scaled_residual(sol.x0(), UvpFactor::F8a);
        let f8b = uvp_scaled_residual(sol.x0(), UvpFactor::F8b);
        classes.push(ClassReport {
            x: sol.dq.x,
            y: sol.dq.y,
            x0: sol.x0(),
            residual: sol.residual,
            images,
            uvp_f8a_scaled: f8a,
            uvp_f8b_scaled: f8b,
            uvp_factor: if f8a <= f8b { "F8a".into() } else { "F8b".into() },
        });
    }
    let pairs = mirror_pairs(&set, &pentagon)?;
    let report = PlaceConeReport {
        command: "place-cone".into(),
        flags: json!({
            "seed": cfg.seed,
            "max_starts": cfg.max_starts,
            "tol": cfg.tol_residual,
        }),
        input: InputEcho::from_doc(doc),
        seed: cfg.seed,
        max_starts: cfg.max_starts,
        starts_used: set.starts_used,
        complete: set.complete,
        class_count: set.solutions.len(),
        x0_values: set.x0_values(),
        classes,
        mirror_pairs: pairs.iter().map(|&(a, b)| [a, b]).collect(),
    };
    Ok((to_json(&report), set.complete))
}

pub fn cone_pair(
    doc: &PointSetDocument,
    mesh_path: Option<&str>,
    resolution: usize,
) -> Result<String, Failure> {
    if doc.points.len() < 3 {
        return Err(Failure::input(format!(
            "cone-pair needs at least 3 points, got {}",
            doc.points.len()
        )));
    }
    let pts = doc.to_points3f()?;
    let translations = recover_translation(&pts[0], &pts[1], &pts[2])?;
    let selected = translations
        .iter()
        .copied()
        .find(|t| t.iter().any(|v| v.abs() > 1e-9));
    let (cone_echo, plane_echo, shared_echo, scene_written) = match selected {
        Some(t) => {
            let cone = translated_cone(t);
            let plane = intersection_plane(t).map_err(Error::from)?;
            let report = shared_conic_check(&pts, t);
            let scene = match mesh_path {
                Some(path) => {
                    let m = mesh::cone_pair_scene(t, &pts, resolution);
                    write_artifact(path, &m.to_obj("cone pair"))?;
                    Some(path.to_string())
                }
                None => None,
            };
            let l = cone.linear();
            (
                Some(TranslatedConeEcho {
                    constant: cone.constant(),
                    linear: l,
                    equation: {
                        let term = |v: f64, m: &str| {
                            format!(" {} {:.4}*{m}", if v < 0.0 { "-" } else { "+" }, v.abs())
                        };
                        format!(
                            "{:.4}{}{}{} + x^2 + y^2 - z^2",
                            cone.constant(),
                            term(l[0], "x"),
                            term(l[1], "y"),
                            term(l[2], "z")
                        )
                    },
                }),
                Some(plane.c),
                Some(SharedConicEcho {
                    origin_residuals: report.origin_residuals,
                    translated_residuals: report.translated_residuals,
                    plane_residuals: report.plane_residuals,
                    fitted_plane: report.fitted_plane.map(|p| p.c),
                    plane_ratio: report.plane_ratio,
                    max_abs_residual: report.max_abs_residual,
                }),
                scene,
            )
        }
        None => (None, None, None, None),
    };
    let report = ConePairReport {
        command: "cone-pair".into(),
        flags: json!({
            "mesh": mesh_path,
            "resolution": resolution,
        }),
        input: InputEcho::from_doc(doc),
        translations,
        selected_translation: selected,
        origin_cone: "x^2 + y^2 - z^2".into(),
        translated_cone: cone_echo,
        intersection_plane: plane_echo,
        shared_conic: shared_echo,
        scene: scene_written,
    };
    Ok(to_json(&report))
}

/// Built-in fixture verification; returns (text, all_passed).
pub fn selfcheck() -> (String, bool) {
    let mut out = String::new();
    let mut ok = true;
    let mut check = |name: &str, pass: bool, detail: String| {
        ok &= pass;
        out.push_str(&format!(
            "{} {name}: {detail}\n",
            if pass { "PASS" } else { "FAIL" }
        ));
    };

    // five-point conic
    match five_point_conic(&fixtures::conic_points()) {
        Ok(d) => {
            let want = fixtures::conic_reference().canonical();
            check(
                "conic coefficients",
                d.conic == want,
                format!("canonical {:?}", d.conic.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            );
            let (l, m) = fixtures::conic_multipliers();
            check(
                "conic multipliers",
                d.lambda == l && d.mu == m,
                format!("({}, {})", d.lambda, d.mu),
            );
            match conic_oracle_det(&fixtures::conic_points()) {
                Ok(o) => check("conic determinant oracle", o == want, "agrees".into()),
                Err(e) => check("conic determinant oracle", false, e.to_string()),
            }
        }
        Err(e) => check("conic coefficients", false, e.to_string()),
    }

    // nine-point quadric
    match nine_point_quadric(&fixtures::quadric_points(), &PairChoice::default_choice()) {
        Ok(r) => {
            let sys_ok = r
                .system
                .iter()
                .zip(fixtures::quadric_system_reference())
                .all(|(row, want)| {
                    row.iter()
                        .zip(want)
                        .all(|(a, b)| *a == pentacone::rat::rat_i(b))
                });
            check("quadric system rows", sys_ok, "exact".into());
            let mult_ok = r
                .multipliers
                .iter()
                .zip(fixtures::quadric_multipliers_reference())
                .all(|(a, b)| *a == pentacone::rat::rat_i(b));
            check("quadric multipliers", mult_ok, "exact".into());
            check(
                "quadric coefficients",
                r.quadric == fixtures::quadric_reference().canonical(),
                "canonical match".into(),
            );
        }
        Err(e) => check("quadric system rows", false, e.to_string()),
    }

    // displacements and images
    let pent = fixtures::pentagon();
    match build_constraints(&pent) {
        Ok(sys) => {
            for (name, dq, images) in [
                ("first displacement images", fixtures::dq_first(), fixtures::images_first()),
                ("second displacement images", fixtures::dq_second(), fixtures::images_second()),
            ] {
                match polish(&sys, &dq) {
                    Some(class) => {
                        let mut worst = 0.0f64;
                        for (p, want) in pent.iter().zip(&images) {
                            if let Ok(got) = class.dq.act(*p) {
                                worst = worst.max(got.dist(want));
                            } else {
                                worst = f64::INFINITY;
                            }
                        }
                        check(name, worst < 1e-3, format!("max deviation {worst:.2e}"));
                    }
                    None => check(name, false, "class did not polish".into()),
                }
            }
            let set = solve(&sys, &SolverConfig::default());
            let mut got = set.x0_values();
            got.sort_by(|a, b| b.total_cmp(a));
            let table_ok = set.solutions.len() == 8
                && got
                    .iter()
                    .zip(fixtures::x0_table())
                    .all(|(g, w)| (g - w).abs() < 1e-3);
            check(
                "placement classes",
                table_ok,
                format!("{} classes, {} starts", set.solutions.len(), set.starts_used),
            );
            let factors_ok = set.solutions.iter().all(|s| {
                uvp_scaled_residual(s.x0(), UvpFactor::F8a)
                    .min(uvp_scaled_residual(s.x0(), UvpFactor::F8b))
                    < 1e-4
            });
            check("univariate factors", factors_ok, "all roots accepted".into());
            match mirror_pairs(&set, &pent) {
                Ok(pairs) => check(
                    "mirror pairing",
                    pairs.len() == 4,
                    format!("{} pairs", pairs.len()),
                ),
                Err(e) => check("mirror pairing", false, e.to_string()),
            }
            let rel = compare_solutions(
                &fixtures::dq_first(),
                &fixtures::dq_second(),
                &pent,
                5e-3,
            );
            check(
                "reference pair mirrored",
                rel == Ok(SolutionRelation::MirroredPair),
                format!("{rel:?}"),
            );
        }
        Err(e) => check("placement classes", false, e.to_string()),
    }

    // cone pair
    let im = fixtures::images_first();
    match recover_translation(&im[0], &im[1], &im[2]) {
        Ok(sols) => {
            let want = fixtures::cone_translation();
            let hit = sols
                .iter()
                .any(|t| t.iter().zip(&want).all(|(a, b)| (a - b).abs() < 1e-3));
            check(
                "translation recovery",
                hit && sols.iter().any(|t| t.iter().all(|v| v.is_zero() || v.abs() < 1e-12)),
                format!("{sols:?}"),
            );
            if let Some(t) = sols.iter().find(|t| t.iter().any(|v| v.abs() > 1e-9)) {
                let report = shared_conic_check(&im, *t);
                let ratio = report.plane_ratio.unwrap_or(f64::NAN);
                check(
                    "shared conic plane ratio",
                    (ratio - 0.9449).abs() < 1e-3,
                    format!("{ratio:.4}"),
                );
            }
        }
        Err(e) => check("translation recovery", false, e.to_string()),
    }

    out.push_str(if ok { "selfcheck: all PASS\n" } else { "selfcheck: FAILURES\n" });
    (out, ok)
}
