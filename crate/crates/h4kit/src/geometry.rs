//! 3D geometry plumbing: projection frames, shell extraction for the
//! H3/A3-preserving projections, a small exact-predicate convex hull, and
//! OFF/OBJ/JSON export.

use crate::branching::{branch_a3, branch_h3, BranchTable};
use crate::coxeter::{generate_capped, FiniteGroup, SystemName};
use crate::golden::GoldenScalar as Gs;
use crate::orbit::WeightVector;
use crate::quat::Quaternion;
use crate::shared;
use serde::Serialize;
use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum GeometryError {
    #[error("points do not affinely span 3D (rank {rank})")]
    DegenerateHull { rank: usize },
    #[error("refusing to hull {n} points (limit 128)")]
    TooManyPoints { n: usize },
    #[error("empty face list — nothing to export")]
    EmptyMesh,
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// The orthogonal frame (a, e1·a, e2·a, e3·a) built on an axis quaternion.
/// The three imaginary directions span the hyperplane orthogonal to `a`.
pub struct ProjectionFrame {
    pub axis: Quaternion,
    pub basis: [Quaternion; 3],
}

impl ProjectionFrame {
    pub fn new(axis: Quaternion) -> Self {
        assert!(!axis.is_zero());
        let basis = std::array::from_fn(|i| &Quaternion::unit(i + 1) * &axis);
        // frame orthogonality (a quaternion identity, but cheap to insist on)
        for i in 0..3 {
            assert!(axis.dot(&basis[i]).is_zero());
            for j in i + 1..3 {
                assert!(basis[i].dot(&basis[j]).is_zero());
            }
        }
        ProjectionFrame { axis, basis }
    }

    /// Exact coordinates of `x` along the three in-hyperplane directions.
    pub fn project(&self, x: &Quaternion) -> [Gs; 3] {
        std::array::from_fn(|i| x.dot(&self.basis[i]))
    }
}

/// One shell of a branched orbit: the sub-orbit at a fixed height along the
/// subgroup-invariant axis, as exact 3D points.
#[derive(Clone, Debug, Serialize)]
pub struct Shell {
    pub height: Gs,
    pub label: &'static str,
    pub dominant: Vec<Gs>,
    pub points: Vec<[Gs; 3]>,
}

fn shell_label(subgroup: SystemName, weight: &[Gs]) -> &'static str {
    let mask: Vec<bool> = weight.iter().map(|c| !c.is_zero()).collect();
    if mask.iter().all(|m| !m) {
        return "point";
    }
    // same classification as the H4 cell families: H3 masks behave like the
    // deleted-node-4 parabolic, A3 masks like the deleted-node-1 parabolic
    match subgroup {
        SystemName::H3 => crate::orbit::cell_label(3, &mask),
        SystemName::A3 => crate::orbit::cell_label(0, &mask),
        _ => panic!("shells are defined for the rank-3 subgroups"),
    }
}

/// The rank-3 subgroup's reflection group in the ambient 4-space used by the
/// corresponding branch table: W(H3) ⊂ W(H4), or W(A3) = ⟨r1,r2,r3⟩ ⊂ W(A4).
fn shell_group(subgroup: SystemName) -> FiniteGroup {
    match subgroup {
        SystemName::H3 => shared::group(SystemName::H3).clone(),
        SystemName::A3 => {
            let a4 = shared::system(SystemName::A4);
            generate_capped("W(A3)<W(A4)", &a4.gens[..3], Some(24), 50)
        }
        _ => panic!("shells are defined for the rank-3 subgroups"),
    }
}

/// The invariant axis of the rank-3 subgroup inside its 4D ambient space.
fn shell_axis(subgroup: SystemName) -> Quaternion {
    match subgroup {
        // ω4 of H4 spans the line fixed by W(H3)
        SystemName::H3 => shared::system(SystemName::H3)
            .ortho_weight
            .clone()
            .unwrap(),
        SystemName::A3 => {
            let a4 = shared::system(SystemName::A4);
            let rows: Vec<Vec<Gs>> = a4.roots[..3].iter().map(|r| r.0.to_vec()).collect();
            let ns = crate::linalg::null_space(&rows);
            assert_eq!(ns.len(), 1);
            Quaternion([
                ns[0][0].clone(),
                ns[0][1].clone(),
                ns[0][2].clone(),
                ns[0][3].clone(),
            ])
        }
        _ => panic!("shells are defined for the rank-3 subgroups"),
    }
}

/// Split an H4 orbit into its 3D shells under W(H3) or W(A3) (§3): one shell
/// per branch term, with exact in-hyperplane coordinates from the invariant
/// projection frame.  Labels follow the §3 classification of rank-3 orbits
/// (dodecahedron / icosidodecahedron / icosahedron and friends).
pub fn project_shells(seed: &WeightVector, subgroup: SystemName) -> Vec<Shell> {
    let table: BranchTable = match subgroup {
        SystemName::H3 => branch_h3(seed),
        SystemName::A3 => branch_a3(seed),
        _ => panic!("project_shells expects H3 or A3"),
    };
    let group = shell_group(subgroup);
    let axis = shell_axis(subgroup);
    let frame = ProjectionFrame::new(axis);
    // the shell's v-part lives in the root span; rebuild it from the dominant
    // coefficients via the subgroup's weights in the same ambient space
    let weights: Vec<Quaternion> = match subgroup {
        SystemName::H3 => shared::system(SystemName::H3).weights.clone(),
        SystemName::A3 => {
            // weights dual to α1..α3 of A4 inside their span
            let a4 = shared::system(SystemName::A4);
            let roots = &a4.roots[..3];
            let gram: Vec<Vec<Gs>> = roots
                .iter()
                .map(|a| roots.iter().map(|b| a.dot(b)).collect())
                .collect();
            let inv = crate::linalg::invert(&gram);
            (0..3)
                .map(|i| {
                    let mut w = Quaternion::zero();
                    for j in 0..3 {
                        w = w + roots[j].scale(&inv[i][j]);
                    }
                    w
                })
                .collect()
        }
        _ => unreachable!(),
    };
    table
        .terms
        .iter()
        .map(|t| {
            let mut v = Quaternion::zero();
            for (c, w) in t.weight.iter().zip(&weights) {
                v = v + w.scale(c);
            }
            let mut pts: Vec<Quaternion> = group.elements.iter().map(|g| g.apply(&v)).collect();
            pts.sort();
            pts.dedup();
            Shell {
                height: t.height.clone().unwrap(),
                label: shell_label(subgroup, &t.weight),
                dominant: t.weight.clone(),
                points: pts.iter().map(|p| frame.project(p)).collect(),
            }
        })
        .collect()
}

/// Sign of the orientation determinant of (b−a, c−a, d−a): float fast path,
/// exact GoldenScalar arithmetic when the float value is too close to zero.
fn orient(points: &[[Gs; 3]], floats: &[[f64; 3]], a: usize, b: usize, c: usize, d: usize) -> i32 {
    let u = [
        floats[b][0] - floats[a][0],
        floats[b][1] - floats[a][1],
        floats[b][2] - floats[a][2],
    ];
    let v = [
        floats[c][0] - floats[a][0],
        floats[c][1] - floats[a][1],
        floats[c][2] - floats[a][2],
    ];
    let w = [
        floats[d][0] - floats[a][0],
        floats[d][1] - floats[a][1],
        floats[d][2] - floats[a][2],
    ];
    let det = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0])
        + u[2] * (v[0] * w[1] - v[1] * w[0]);
    if det.abs() > 1e-9 {
        return if det > 0.0 { 1 } else { -1 };
    }
    // exact fallback
    let diff = |p: usize| -> [Gs; 3] { std::array::from_fn(|i| &points[p][i] - &points[a][i]) };
    let (u, v, w) = (diff(b), diff(c), diff(d));
    let det = &(&(&u[0] * &(&(&v[1] * &w[2]) - &(&v[2] * &w[1])))
        - &(&u[1] * &(&(&v[0] * &w[2]) - &(&v[2] * &w[0]))))
        + &(&u[2] * &(&(&v[0] * &w[1]) - &(&v[1] * &w[0])));
    match det.sign() {
        crate::golden::Sign::Positive => 1,
        crate::golden::Sign::Negative => -1,
        crate::golden::Sign::Zero => 0,
    }
}

/// Convex hull of ≤128 exact 3D points by gift wrapping, producing maximal
/// planar polygon faces (outward-oriented) and a fan triangulation.
pub struct Hull {
    pub faces: Vec<Vec<usize>>,
    pub triangles: Vec<[usize; 3]>,
}

pub fn hull3(points: &[[Gs; 3]]) -> Result<Hull, GeometryError> {
    let n = points.len();
    if n > 128 {
        return Err(GeometryError::TooManyPoints { n });
    }
    let rank = {
        let rows: Vec<Vec<Gs>> = points[1..]
            .iter()
            .map(|p| (0..3).map(|i| &p[i] - &points[0][i]).collect())
            .collect();
        crate::linalg::rank(&rows)
    };
    if rank != 3 {
        return Err(GeometryError::DegenerateHull { rank });
    }
    let floats: Vec<[f64; 3]> = points
        .iter()
        .map(|p| std::array::from_fn(|i| p[i].to_f64()))
        .collect();

    // gift wrapping on supporting planes: each hull plane is found from an
    // open directed edge by pivoting to the extreme point
    let first_face = initial_face(points, &floats);
    let mut plane_faces: Vec<Vec<usize>> = Vec::new();
    let mut seen_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut queue: Vec<(usize, usize)> = Vec::new();
    let push_face = |face: &Vec<usize>,
                         queue: &mut Vec<(usize, usize)>,
                         seen: &mut BTreeSet<(usize, usize)>| {
        let m = face.len();
        for k in 0..m {
            let e = (face[k], face[(k + 1) % m]);
            seen.insert(e);
            let rev = (e.1, e.0);
            if !seen.contains(&rev) {
                queue.push(rev);
            }
        }
    };
    push_face(&first_face, &mut queue, &mut seen_edges);
    plane_faces.push(first_face);
    while let Some((a, b)) = queue.pop() {
        if seen_edges.contains(&(a, b)) {
            continue;
        }
        // pivot: find c with every point on the non-positive side of (a,b,c)
        let mut c = (0..n).find(|&i| i != a && i != b).unwrap();
        for d in 0..n {
            if d == a || d == b || d == c {
                continue;
            }
            if orient(points, &floats, a, b, c, d) > 0 {
                c = d;
            }
        }
        let face = planar_face(points, &floats, a, b, c);
        push_face(&face, &mut queue, &mut seen_edges);
        plane_faces.push(face);
    }
    let triangles = plane_faces
        .iter()
        .flat_map(|f| (1..f.len() - 1).map(move |k| [f[0], f[k], f[k + 1]]))
        .collect();
    Ok(Hull {
        faces: plane_faces,
        triangles,
    })
}

/// A first hull face to seed the wrap: fix the lexicographically smallest
/// point (certainly on the hull) and scan pairs until a supporting plane is
/// found — brute force, but cheap at ≤128 points and immune to projection
/// degeneracies.
fn initial_face(points: &[[Gs; 3]], floats: &[[f64; 3]]) -> Vec<usize> {
    let n = points.len();
    let a = (0..n)
        .min_by(|&i, &j| {
            floats[i]
                .partial_cmp(&floats[j])
                .unwrap()
                .then(points[i].cmp(&points[j]))
        })
        .unwrap();
    for b in 0..n {
        if b == a {
            continue;
        }
        'pair: for c in 0..n {
            if c == a || c == b {
                continue;
            }
            let mut side = 0;
            for d in 0..n {
                if d == a || d == b || d == c {
                    continue;
                }
                let s = orient(points, floats, a, b, c, d);
                if s == 0 {
                    continue;
                }
                if side == 0 {
                    side = s;
                } else if s != side {
                    continue 'pair;
                }
            }
            // supporting plane found; orient so the interior is negative
            return if side > 0 {
                planar_face(points, floats, a, c, b)
            } else {
                planar_face(points, floats, a, b, c)
            };
        }
    }
    unreachable!("rank-3 point set must have a hull face");
}

/// Collect every point on the plane of (a, b, c) and order them into an
/// outward-oriented convex polygon.
fn planar_face(points: &[[Gs; 3]], floats: &[[f64; 3]], a: usize, b: usize, c: usize) -> Vec<usize> {
    let n = points.len();
    let mut on_plane: Vec<usize> = (0..n)
        .filter(|&d| d == a || d == b || d == c || orient(points, floats, a, b, c, d) == 0)
        .collect();
    // order around the centroid in the plane's 2D basis
    let centroid: [f64; 3] = {
        let mut s = [0.0; 3];
        for &i in &on_plane {
            for k in 0..3 {
                s[k] += floats[i][k];
            }
        }
        s.map(|x| x / on_plane.len() as f64)
    };
    let sub = |p: [f64; 3], q: [f64; 3]| [p[0] - q[0], p[1] - q[1], p[2] - q[2]];
    let cross = |u: [f64; 3], v: [f64; 3]| {
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    };
    let dot = |u: [f64; 3], v: [f64; 3]| u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    let normal = cross(sub(floats[b], floats[a]), sub(floats[c], floats[a]));
    let u_axis = sub(floats[a], centroid);
    let v_axis = cross(normal, u_axis);
    on_plane.sort_by(|&i, &j| {
        let ang = |k: usize| {
            let d = sub(floats[k], centroid);
            dot(d, v_axis).atan2(dot(d, u_axis))
        };
        ang(i).partial_cmp(&ang(j)).unwrap()
    });
    // orient the polygon so every off-plane point lies on its negative side
    // (a, b need not be adjacent polygon vertices — for the seed face they
    // can span a diagonal — so fix orientation with an off-plane witness)
    let q = (0..n)
        .find(|i| !on_plane.contains(i))
        .expect("rank-3 point set has points off any single plane");
    if orient(points, floats, on_plane[0], on_plane[1], on_plane[2], q) > 0 {
        on_plane.reverse();
    }
    on_plane
}

/// Check V − E + F = 2 on a polygonal face list.
pub fn euler_characteristic(hull: &Hull, n_vertices: usize) -> i64 {
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for f in &hull.faces {
        let m = f.len();
        for k in 0..m {
            let (x, y) = (f[k], f[(k + 1) % m]);
            edges.insert((x.min(y), x.max(y)));
        }
    }
    n_vertices as i64 - edges.len() as i64 + hull.faces.len() as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeshFormat {
    Off,
    Obj,
}

impl std::str::FromStr for MeshFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "off" => Ok(MeshFormat::Off),
            "obj" => Ok(MeshFormat::Obj),
            other => Err(format!("unknown mesh format `{other}` (off|obj)")),
        }
    }
}

/// Write a polygon mesh.  Vertices are converted to floats only here; all
/// upstream geometry stays exact.
pub fn export_mesh(
    vertices: &[[Gs; 3]],
    faces: &[Vec<usize>],
    path: &Path,
    format: MeshFormat,
) -> Result<(), GeometryError> {
    if faces.is_empty() {
        return Err(GeometryError::EmptyMesh);
    }
    let io_err = |source| GeometryError::Io {
        path: path.display().to_string(),
        source,
    };
    let mut out = Vec::new();
    match format {
        MeshFormat::Off => {
            let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
            for f in faces {
                for k in 0..f.len() {
                    let (x, y) = (f[k], f[(k + 1) % f.len()]);
                    edges.insert((x.min(y), x.max(y)));
                }
            }
            writeln!(out, "OFF").unwrap();
            writeln!(out, "{} {} {}", vertices.len(), faces.len(), edges.len()).unwrap();
            for v in vertices {
                writeln!(
                    out,
                    "{:.15} {:.15} {:.15}",
                    v[0].to_f64(),
                    v[1].to_f64(),
                    v[2].to_f64()
                )
                .unwrap();
            }
            for f in faces {
                write!(out, "{}", f.len()).unwrap();
                for &i in f {
                    write!(out, " {i}").unwrap();
                }
                writeln!(out).unwrap();
            }
        }
        MeshFormat::Obj => {
            for v in vertices {
                writeln!(
                    out,
                    "v {:.15} {:.15} {:.15}",
                    v[0].to_f64(),
                    v[1].to_f64(),
                    v[2].to_f64()
                )
                .unwrap();
            }
            for f in faces {
                write!(out, "f").unwrap();
                for &i in f {
                    write!(out, " {}", i + 1).unwrap();
                }
                writeln!(out).unwrap();
            }
        }
    }
    std::fs::write(path, out).map_err(io_err)
}

/// Serialize any table as pretty JSON.
pub fn export_table<T: Serialize>(data: &T, path: &Path) -> Result<(), GeometryError> {
    let json = serde_json::to_string_pretty(data).expect("serializable table");
    std::fs::write(path, json).map_err(|source| GeometryError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Congruence up to one global similarity scale: compare the pairwise
/// distance multisets after normalizing each by its maximum (relative
/// tolerance 1e-9).
pub fn congruent_up_to_similarity(a: &[[f64; 3]], b: &[[f64; 3]]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let dists = |pts: &[[f64; 3]]| -> Vec<f64> {
        let mut d = Vec::new();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                d.push(
                    (0..3)
                        .map(|k| (pts[i][k] - pts[j][k]).powi(2))
                        .sum::<f64>()
                        .sqrt(),
                );
            }
        }
        let max = d.iter().cloned().fold(0.0f64, f64::max);
        assert!(max > 0.0, "congruence comparison needs ≥ 2 distinct points");
        d.iter_mut().for_each(|x| *x /= max);
        d.sort_by(|x, y| x.partial_cmp(y).unwrap());
        d
    };
    let (da, db) = (dists(a), dists(b));
    da.iter().zip(&db).all(|(x, y)| (x - y).abs() <= 1e-9)
}

/// Float rendering of exact 3D points.
pub fn to_f64_points(points: &[[Gs; 3]]) -> Vec<[f64; 3]> {
    points
        .iter()
        .map(|p| std::array::from_fn(|i| p[i].to_f64()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(i: i64) -> Gs {
        Gs::from_int(i)
    }

    #[test]
    fn hull_of_tetrahedron() {
        let pts = vec![
            [gs(0), gs(0), gs(0)],
            [gs(1), gs(0), gs(0)],
            [gs(0), gs(1), gs(0)],
            [gs(0), gs(0), gs(1)],
        ];
        let h = hull3(&pts).unwrap();
        assert_eq!(h.faces.len(), 4);
        assert_eq!(h.triangles.len(), 4);
        assert_eq!(euler_characteristic(&h, 4), 2);
    }

    #[test]
    fn hull_of_cube_merges_coplanar_faces() {
        let mut pts = Vec::new();
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    pts.push([gs(x), gs(y), gs(z)]);
                }
            }
        }
        let h = hull3(&pts).unwrap();
        assert_eq!(h.faces.len(), 6);
        assert!(h.faces.iter().all(|f| f.len() == 4));
        assert_eq!(h.triangles.len(), 12);
        assert_eq!(euler_characteristic(&h, 8), 2);
    }

    #[test]
    fn hull_rejects_degenerate() {
        let pts = vec![
            [gs(0), gs(0), gs(0)],
            [gs(1), gs(0), gs(0)],
            [gs(2), gs(0), gs(0)],
            [gs(3), gs(1), gs(0)],
        ];
        assert!(matches!(
            hull3(&pts),
            Err(GeometryError::DegenerateHull { rank: 2 })
        ));
    }

    #[test]
    fn shells_of_600_cell_under_h3() {
        let seed = WeightVector::from_ints(SystemName::H4, &[0, 0, 0, 1]).unwrap();
        let shells = project_shells(&seed, SystemName::H3);
        assert_eq!(shells.len(), 9); // Eq. 21
        let mut labels: Vec<(&str, usize)> = shells
            .iter()
            .map(|s| (s.label, s.points.len()))
            .collect();
        labels.sort();
        assert_eq!(
            labels,
            vec![
                ("dodecahedron", 20),
                ("dodecahedron", 20),
                ("icosahedron", 12),
                ("icosahedron", 12),
                ("icosahedron", 12),
                ("icosahedron", 12),
                ("icosidodecahedron", 30),
                ("point", 1),
                ("point", 1),
            ]
        );
        let total: usize = shells.iter().map(|s| s.points.len()).sum();
        assert_eq!(total, 120);
        // shell radius² + height²·|ω4|² = |Λ|², with the frame carrying a
        // factor |ω4|² on each coordinate
        let w4n = shared::system(SystemName::H3)
            .ortho_weight
            .as_ref()
            .unwrap()
            .norm();
        let lam_sq = seed.ambient.norm();
        for s in &shells {
            for p in &s.points {
                let r2 = p.iter().fold(Gs::zero(), |acc, c| acc + c * c);
                // projection coords are dots with e_i·ω4, so r2 = |v|²·|ω4|²
                let expect = (&lam_sq - &(&(&s.height * &s.height) * &w4n)) * &w4n;
                assert_eq!(r2, expect);
            }
        }
        // hulls of the polygon-faced shells (regression: the wrap must not
        // terminate after a single plane when faces are non-triangular)
        for s in &shells {
            let (faces, euler) = match s.label {
                "dodecahedron" => (12, 2),
                "icosahedron" => (20, 2),
                "icosidodecahedron" => (32, 2),
                _ => continue,
            };
            let h = hull3(&s.points).unwrap();
            assert_eq!(h.faces.len(), faces, "{}", s.label);
            assert_eq!(euler_characteristic(&h, s.points.len()), euler);
        }
    }

    #[test]
    fn shells_of_600_cell_under_a3() {
        let seed = WeightVector::from_ints(SystemName::H4, &[0, 0, 0, 1]).unwrap();
        let shells = project_shells(&seed, SystemName::A3);
        assert_eq!(shells.len(), 15); // Eq. 35
        let total: usize = shells.iter().map(|s| s.points.len()).sum();
        assert_eq!(total, 120);
        // tetrahedral shells at the extreme heights
        let mut by_abs_height = shells.clone();
        by_abs_height.sort_by(|a, b| b.height.abs().cmp(&a.height.abs()));
        assert_eq!(by_abs_height[0].label, "tetrahedron");
        assert_eq!(by_abs_height[0].points.len(), 4);
    }

    #[test]
    fn off_export_roundtrip() {
        let pts = vec![
            [gs(0), gs(0), gs(0)],
            [gs(1), gs(0), gs(0)],
            [gs(0), gs(1), gs(0)],
            [gs(0), gs(0), gs(1)],
        ];
        let h = hull3(&pts).unwrap();
        let dir = std::env::temp_dir().join("h4kit-test-off");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("tet.off");
        export_mesh(&pts, &h.faces, &path, MeshFormat::Off).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("4 4 6"));
        // floats match the exact coordinates
        for (line, p) in lines.by_ref().take(4).zip(&pts) {
            let vals: Vec<f64> = line
                .split_whitespace()
                .map(|t| t.parse().unwrap())
                .collect();
            for (v, c) in vals.iter().zip(p) {
                assert!((v - c.to_f64()).abs() < 1e-12);
            }
        }
        assert!(matches!(
            export_mesh(&pts, &[], &path, MeshFormat::Off),
            Err(GeometryError::EmptyMesh)
        ));
    }

    #[test]
    fn congruence_is_scale_invariant() {
        let a = vec![[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]];
        let b: Vec<[f64; 3]> = a.iter().map(|p| p.map(|x| 2.5 * x + 0.0)).collect();
        assert!(congruent_up_to_similarity(&a, &b));
        let mut c = b.clone();
        c[0] = [0.3, 0.0, 0.0];
        assert!(!congruent_up_to_similarity(&a, &c));
    }
}
