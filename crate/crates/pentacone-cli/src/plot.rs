//! SVG plot of an implicit conic: the zero set traced by marching squares
//! over a padded bounding box of the input points, with the points marked.

use pentacone::conic::Conic;
use pentacone::projective::HPoint2;

use crate::doc::rat_to_f64;

/// Affine evaluation closure of a conic in the chart x0 = 1.
fn affine_form(c: &Conic) -> impl Fn(f64, f64) -> f64 {
    let v: Vec<f64> = c.coeffs.iter().map(rat_to_f64).collect();
    move |x: f64, y: f64| {
        v[0] + 2.0 * v[1] * x + 2.0 * v[2] * y + v[3] * x * x + 2.0 * v[4] * x * y + v[5] * y * y
    }
}

fn affine_points(pts: &[HPoint2]) -> Vec<(f64, f64)> {
    pts.iter()
        .filter_map(|p| {
            let w = rat_to_f64(&p.0[0]);
            (w.abs() > 1e-12).then(|| (rat_to_f64(&p.0[1]) / w, rat_to_f64(&p.0[2]) / w))
        })
        .collect()
}

/// Render the conic and its defining points. `cells` is the marching grid
/// resolution along each axis.
pub fn conic_svg(conic: &Conic, pts: &[HPoint2], cells: usize) -> String {
    let f = affine_form(conic);
    let markers = affine_points(pts);
    let (mut xmin, mut xmax) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut ymin, mut ymax) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &markers {
        xmin = xmin.min(x);
        xmax = xmax.max(x);
        ymin = ymin.min(y);
        ymax = ymax.max(y);
    }
    let pad = 0.35 * ((xmax - xmin).max(ymax - ymin)).max(1.0);
    xmin -= pad;
    xmax += pad;
    ymin -= pad;
    ymax += pad;

    let n = cells.max(8);
    let dx = (xmax - xmin) / n as f64;
    let dy = (ymax - ymin) / n as f64;
    // sample grid values once
    let mut vals = vec![0.0f64; (n + 1) * (n + 1)];
    for j in 0..=n {
        for i in 0..=n {
            vals[j * (n + 1) + i] = f(xmin + i as f64 * dx, ymin + j as f64 * dy);
        }
    }
    let mut segments: Vec<[f64; 4]> = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let x0 = xmin + i as f64 * dx;
            let y0 = ymin + j as f64 * dy;
            let v = [
                vals[j * (n + 1) + i],
                vals[j * (n + 1) + i + 1],
                vals[(j + 1) * (n + 1) + i + 1],
                vals[(j + 1) * (n + 1) + i],
            ];
            let corners = [
                (x0, y0),
                (x0 + dx, y0),
                (x0 + dx, y0 + dy),
                (x0, y0 + dy),
            ];
            let mut crossings: Vec<(f64, f64)> = Vec::new();
            for e in 0..4 {
                let (a, b) = (v[e], v[(e + 1) % 4]);
                if (a < 0.0) != (b < 0.0) {
                    let t = a / (a - b);
                    let (pa, pb) = (corners[e], corners[(e + 1) % 4]);
                    crossings.push((pa.0 + t * (pb.0 - pa.0), pa.1 + t * (pb.1 - pa.1)));
                }
            }
            match crossings.len() {
                2 => segments.push([
                    crossings[0].0,
                    crossings[0].1,
                    crossings[1].0,
                    crossings[1].1,
                ]),
                4 => {
                    // saddle cell: split by the center sign
                    let center = f(x0 + 0.5 * dx, y0 + 0.5 * dy);
                    let pairs = if (center < 0.0) == (v[0] < 0.0) {
                        [(0usize, 3usize), (1, 2)]
                    } else {
                        [(0, 1), (2, 3)]
                    };
                    for (a, b) in pairs {
                        segments.push([
                            crossings[a].0,
                            crossings[a].1,
                            crossings[b].0,
                            crossings[b].1,
                        ]);
                    }
                }
                _ => {}
            }
        }
    }

    let w = 720.0;
    let h = 720.0;
    let sx = w / (xmax - xmin);
    let sy = h / (ymax - ymin);
    let map = |x: f64, y: f64| -> (f64, f64) { ((x - xmin) * sx, (ymax - y) * sy) };
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    ));
    out.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    out.push_str("<g stroke=\"#1f5fbf\" stroke-width=\"1.4\" fill=\"none\">\n");
    for s in &segments {
        let (x1, y1) = map(s[0], s[1]);
        let (x2, y2) = map(s[2], s[3]);
        out.push_str(&format!(
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>\n"
        ));
    }
    out.push_str("</g>\n<g fill=\"#c23b22\">\n");
    for &(x, y) in &markers {
        let (cx, cy) = map(x, y);
        out.push_str(&format!("<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\"/>\n"));
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pentacone::conic::conic_through_5;

    #[test]
    fn svg_contains_curve_and_markers() {
        let pts = pentacone::fixtures::conic_points();
        let c = conic_through_5(&pts).unwrap();
        let svg = conic_svg(&c, &pts, 64);
        assert!(svg.starts_with("<svg"));
        assert!(svg.matches("<circle").count() == 5);
        assert!(svg.matches("<line").count() > 50);
        // curve points satisfy the implicit form loosely (grid resolution)
        let f = affine_form(&c);
        // spot check: marker residuals are tiny relative to coefficients
        for (x, y) in affine_points(&pts) {
            assert!(f(x, y).abs() < 1e-6 * 238868.0);
        }
    }
}
