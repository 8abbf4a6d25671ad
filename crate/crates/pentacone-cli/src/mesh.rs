//! Indexed triangle meshes of implicit surfaces by marching tetrahedra over
//! a regular grid, written as Wavefront OBJ. Deterministic: cells are visited
//! row-major and vertices are indexed in creation order.

use std::collections::HashMap;

use pentacone::dualquat::Point3;
use pentacone::projective::HPoint3;
use pentacone::quadric::Quadric;

use crate::doc::rat_to_f64;

pub struct Mesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[u32; 3]>,
}

impl Mesh {
    pub fn new() -> Self {
        Self {
            vertices: Vec::new(),
            triangles: Vec::new(),
        }
    }

    pub fn to_obj(&self, comment: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {comment}\n"));
        for v in &self.vertices {
            out.push_str(&format!("v {:.6} {:.6} {:.6}\n", v[0], v[1], v[2]));
        }
        for t in &self.triangles {
            out.push_str(&format!("f {} {} {}\n", t[0] + 1, t[1] + 1, t[2] + 1));
        }
        out
    }

    /// Small octahedron marker at a point.
    pub fn push_marker(&mut self, p: [f64; 3], r: f64) {
        let base = self.vertices.len() as u32;
        let offsets = [
            [r, 0.0, 0.0],
            [-r, 0.0, 0.0],
            [0.0, r, 0.0],
            [0.0, -r, 0.0],
            [0.0, 0.0, r],
            [0.0, 0.0, -r],
        ];
        for o in offsets {
            self.vertices.push([p[0] + o[0], p[1] + o[1], p[2] + o[2]]);
        }
        let faces: [[u32; 3]; 8] = [
            [0, 2, 4],
            [2, 1, 4],
            [1, 3, 4],
            [3, 0, 4],
            [2, 0, 5],
            [1, 2, 5],
            [3, 1, 5],
            [0, 3, 5],
        ];
        for f in faces {
            self.triangles.push([base + f[0], base + f[1], base + f[2]]);
        }
    }
}

impl Default for Mesh {
    fn default() -> Self {
        Self::new()
    }
}

/// The six-tetrahedron decomposition of a cube around the 0-6 diagonal; cube
/// corners numbered by bit pattern (x, y, z).
const TETS: [[usize; 4]; 6] = [
    [0, 5, 1, 6],
    [0, 1, 3, 6],
    [0, 3, 2, 6],
    [0, 2, 7, 6],
    // corner numbering below: see `corner_offset`
    [0, 7, 4, 6],
    [0, 4, 5, 6],
];

fn corner_offset(c: usize) -> [usize; 3] {
    // order chosen so consecutive tets share faces: 0=(0,0,0) 1=(1,0,0)
    // 2=(0,1,0) 3=(1,1,0) 4=(0,0,1) 5=(1,0,1) 6=(1,1,1) 7=(0,1,1)
    [
        [0, 0, 0],
        [1, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [0, 0, 1],
        [1, 0, 1],
        [1, 1, 1],
        [0, 1, 1],
    ][c]
}

/// March an implicit function over `res`^3 cells of the box [lo, hi].
pub fn march(f: &dyn Fn(f64, f64, f64) -> f64, lo: [f64; 3], hi: [f64; 3], res: usize) -> Mesh {
    let res = res.max(4);
    let n = res + 1;
    let step = [
        (hi[0] - lo[0]) / res as f64,
        (hi[1] - lo[1]) / res as f64,
        (hi[2] - lo[2]) / res as f64,
    ];
    let gp = |i: usize, j: usize, k: usize| -> [f64; 3] {
        [
            lo[0] + i as f64 * step[0],
            lo[1] + j as f64 * step[1],
            lo[2] + k as f64 * step[2],
        ]
    };
    let mut vals = vec![0.0f64; n * n * n];
    for k in 0..n {
        for j in 0..n {
            for i in 0..n {
                let p = gp(i, j, k);
                vals[(k * n + j) * n + i] = f(p[0], p[1], p[2]);
            }
        }
    }
    let vid = |i: usize, j: usize, k: usize| -> u64 { ((k * n + j) * n + i) as u64 };

    let mut mesh = Mesh::new();
    let mut edge_cache: HashMap<(u64, u64), u32> = HashMap::new();
    let emit = |mesh: &mut Mesh,
                    cache: &mut HashMap<(u64, u64), u32>,
                    a: (u64, [f64; 3], f64),
                    b: (u64, [f64; 3], f64)|
     -> u32 {
        let key = if a.0 < b.0 { (a.0, b.0) } else { (b.0, a.0) };
        if let Some(&idx) = cache.get(&key) {
            return idx;
        }
        let t = a.2 / (a.2 - b.2);
        let v = [
            a.1[0] + t * (b.1[0] - a.1[0]),
            a.1[1] + t * (b.1[1] - a.1[1]),
            a.1[2] + t * (b.1[2] - a.1[2]),
        ];
        let idx = mesh.vertices.len() as u32;
        mesh.vertices.push(v);
        cache.insert(key, idx);
        idx
    };

    for k in 0..res {
        for j in 0..res {
            for i in 0..res {
                // gather the cube corners
                let corner = |c: usize| -> (u64, [f64; 3], f64) {
                    let o = corner_offset(c);
                    let (ci, cj, ck) = (i + o[0], j + o[1], k + o[2]);
                    (vid(ci, cj, ck), gp(ci, cj, ck), vals[(ck * n + cj) * n + ci])
                };
                let cube: [(u64, [f64; 3], f64); 8] = std::array::from_fn(corner);
                for tet in TETS {
                    let vs = [cube[tet[0]], cube[tet[1]], cube[tet[2]], cube[tet[3]]];
                    let inside: Vec<usize> =
                        (0..4).filter(|&q| vs[q].2 < 0.0).collect();
                    match inside.len() {
                        1 => {
                            let a = inside[0];
                            let others: Vec<usize> = (0..4).filter(|&q| q != a).collect();
                            let tri = [
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[0]]),
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[1]]),
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[2]]),
                            ];
                            mesh.triangles.push(tri);
                        }
                        3 => {
                            let a = (0..4).find(|q| !inside.contains(q)).unwrap();
                            let others: Vec<usize> = (0..4).filter(|&q| q != a).collect();
                            let tri = [
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[0]]),
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[1]]),
                                emit(&mut mesh, &mut edge_cache, vs[a], vs[others[2]]),
                            ];
                            mesh.triangles.push(tri);
                        }
                        2 => {
                            let (a, b) = (inside[0], inside[1]);
                            let out: Vec<usize> =
                                (0..4).filter(|q| !inside.contains(q)).collect();
                            let p = emit(&mut mesh, &mut edge_cache, vs[a], vs[out[0]]);
                            let q = emit(&mut mesh, &mut edge_cache, vs[a], vs[out[1]]);
                            let r = emit(&mut mesh, &mut edge_cache, vs[b], vs[out[0]]);
                            let s = emit(&mut mesh, &mut edge_cache, vs[b], vs[out[1]]);
                            mesh.triangles.push([p, q, r]);
                            mesh.triangles.push([q, s, r]);
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    mesh
}

/// Affine evaluation closure of a quadric in the chart x0 = 1.
pub fn quadric_form(q: &Quadric) -> impl Fn(f64, f64, f64) -> f64 {
    let v: Vec<f64> = q.coeffs.iter().map(rat_to_f64).collect();
    // normalize magnitudes so interpolation stays well-scaled
    let m = v.iter().fold(0.0f64, |a, b| a.max(b.abs())).max(1.0);
    move |x, y, z| {
        (v[0]
            + 2.0 * (v[1] * x + v[2] * y + v[3] * z)
            + v[4] * x * x
            + 2.0 * v[5] * x * y
            + 2.0 * v[6] * x * z
            + v[7] * y * y
            + 2.0 * v[8] * y * z
            + v[9] * z * z)
            / m
    }
}

/// Mesh of a quadric over a padded bounding box of its defining points, with
/// point markers.
pub fn quadric_mesh(q: &Quadric, pts: &[HPoint3], res: usize) -> Mesh {
    let markers: Vec<[f64; 3]> = pts
        .iter()
        .filter_map(|p| {
            let w = rat_to_f64(&p.0[0]);
            (w.abs() > 1e-12).then(|| {
                [
                    rat_to_f64(&p.0[1]) / w,
                    rat_to_f64(&p.0[2]) / w,
                    rat_to_f64(&p.0[3]) / w,
                ]
            })
        })
        .collect();
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    for m in &markers {
        for a in 0..3 {
            lo[a] = lo[a].min(m[a]);
            hi[a] = hi[a].max(m[a]);
        }
    }
    let span = (0..3).map(|a| hi[a] - lo[a]).fold(1.0f64, f64::max);
    let pad = 0.3 * span;
    for a in 0..3 {
        lo[a] -= pad;
        hi[a] += pad;
    }
    let f = quadric_form(q);
    let mut mesh = march(&|x, y, z| f(x, y, z), lo, hi, res);
    let r = 0.01 * span;
    for m in &markers {
        mesh.push_marker(*m, r);
    }
    mesh
}

/// Scene for a cone pair: both cones, the intersection plane patch, and
/// point markers.
pub fn cone_pair_scene(t: [f64; 3], points: &[Point3], res: usize) -> Mesh {
    let mut lo = [f64::INFINITY; 3];
    let mut hi = [f64::NEG_INFINITY; 3];
    let mut include = |p: [f64; 3]| {
        for a in 0..3 {
            lo[a] = lo[a].min(p[a]);
            hi[a] = hi[a].max(p[a]);
        }
    };
    include([0.0; 3]);
    include(t);
    for p in points {
        include([p.x, p.y, p.z]);
    }
    let span = (0..3).map(|a| hi[a] - lo[a]).fold(1.0f64, f64::max);
    let pad = 0.4 * span;
    for a in 0..3 {
        lo[a] -= pad;
        hi[a] += pad;
    }
    let origin = |x: f64, y: f64, z: f64| x * x + y * y - z * z;
    let cone2 = pentacone::cone_pair::translated_cone(t);
    let mut mesh = march(&origin, lo, hi, res);
    let second = march(
        &|x, y, z| cone2.evaluate(&Point3::new(x, y, z)),
        lo,
        hi,
        res,
    );
    let base = mesh.vertices.len() as u32;
    mesh.vertices.extend(second.vertices);
    mesh.triangles
        .extend(second.triangles.iter().map(|t| t.map(|i| i + base)));
    let r = 0.015 * span;
    for p in points {
        mesh.push_marker([p.x, p.y, p.z], r);
    }
    mesh
}
