//! Mesh export: project the 600-cell onto its W(H3) shells (Eq. 21 — two
//! poles, four icosahedra, two dodecahedra, one icosidodecahedron), take
//! exact 3D convex hulls, and write OFF/OBJ files, plus the pentagonal
//! dipyramid dual cell of §5.2.
//!
//! Run with `cargo run --release --example export_meshes`; files land in
//! `meshes/` under the current directory.

use std::path::Path;

use h4kit::coxeter::SystemName;
use h4kit::dual::{dual_cell_geometry, dual_polytope};
use h4kit::geometry::{euler_characteristic, export_mesh, hull3, project_shells, MeshFormat};
use h4kit::orbit::WeightVector;

fn main() {
    let dir = Path::new("meshes");
    std::fs::create_dir_all(dir).expect("create meshes/");

    let seed = WeightVector::from_ints(SystemName::H4, &[0, 0, 0, 1]).unwrap();
    for (i, shell) in project_shells(&seed, SystemName::H3).iter().enumerate() {
        if shell.points.len() < 4 {
            println!("shell {i}: {} at height {} (skipped, no volume)", shell.label, shell.height);
            continue;
        }
        let hull = hull3(&shell.points).unwrap();
        assert_eq!(euler_characteristic(&hull, shell.points.len()), 2);
        let path = dir.join(format!("600cell_shell{i}_{}.off", shell.label.replace(' ', "_")));
        export_mesh(&shell.points, &hull.faces, &path, MeshFormat::Off).unwrap();
        println!(
            "shell {i}: {} at height {} → {} ({} vertices, {} faces)",
            shell.label,
            shell.height,
            path.display(),
            shell.points.len(),
            hull.faces.len()
        );
    }

    // §5.2: the dual of O(0,1,0,0) has pentagonal-dipyramid cells
    let seed = WeightVector::from_ints(SystemName::H4, &[0, 1, 0, 0]).unwrap();
    let spec = dual_polytope(&seed, Some(4)).unwrap();
    let cell = dual_cell_geometry(&spec);
    let hull = hull3(&cell).unwrap();
    let path = dir.join("dual_0100_cell.obj");
    export_mesh(&cell, &hull.faces, &path, MeshFormat::Obj).unwrap();
    println!(
        "dual cell of W(H4)(0,1,0,0) → {} ({} vertices, {} faces: pentagonal dipyramid)",
        path.display(),
        cell.len(),
        hull.faces.len()
    );
}
