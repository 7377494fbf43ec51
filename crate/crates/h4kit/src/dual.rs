//! Dual polytopes of the uniform W(H4) orbits (§5): cells incident to a
//! vertex, their centers, the per-cell-type scale factors that flatten the
//! centers into a hyperplane orthogonal to the vertex, dual vertex orbits,
//! radii, and the representative dual-cell 3D geometry.

use crate::coxeter::SystemName;
use crate::golden::GoldenScalar as Gs;
use crate::orbit::{affine_rank, cell_label, parabolic_nodes, parabolic_orbit, WeightVector};
use crate::quat::Quaternion;
use crate::shared;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Debug, thiserror::Error)]
pub enum DualError {
    #[error("no 3D cells incident to the seed — is the weight trivial?")]
    NoCells,
    #[error("cell center of node {node} is orthogonal to the vertex (degenerate hyperplane)")]
    DegenerateCenter { node: usize },
}

/// The cells of one family incident to the seed vertex Λ, represented by
/// their (unscaled) center directions g·ω_j.
#[derive(Clone, Debug, Serialize)]
pub struct IncidentFamily {
    /// 1-based deleted Dynkin node.
    pub node: usize,
    pub label: &'static str,
    pub centers: Vec<Quaternion>,
}

/// Enumerate all primal cells containing the vertex Λ, grouped by family.
/// A cell g·(W_S·Λ) contains Λ iff g⁻¹·Λ ∈ W_S·Λ; its center is g·ω_j
/// (well-defined because Stab(ω_j) = W_S).
pub fn incident_cells(seed: &WeightVector) -> Vec<IncidentFamily> {
    assert_eq!(seed.system, SystemName::H4);
    let h4 = shared::system(SystemName::H4);
    let group = shared::group(SystemName::H4);
    let mut out = Vec::new();
    for j in 0..4 {
        let base_cell = parabolic_orbit(j, &seed.ambient);
        if affine_rank(&base_cell) != 3 {
            continue;
        }
        let base_set: HashSet<Quaternion> = base_cell.into_iter().collect();
        let mut centers: Vec<Quaternion> = group
            .elements
            .par_iter()
            .filter(|g| base_set.contains(&g.inverse().apply(&seed.ambient)))
            .map(|g| g.apply(&h4.weights[j]))
            .collect();
        centers.sort();
        centers.dedup();
        let (nodes, _, _) = parabolic_nodes(j);
        let mask: Vec<bool> = nodes.iter().map(|&i| !seed.coeffs[i].is_zero()).collect();
        out.push(IncidentFamily {
            node: j + 1,
            label: cell_label(j, &mask),
            centers,
        });
    }
    out
}

/// One scaled dual-vertex orbit of a dual polytope.
#[derive(Clone, Debug, Serialize)]
pub struct DualOrbit {
    pub node: usize,
    pub label: &'static str,
    /// Scale s with (s·center, Λ) = (anchor center, Λ); the anchor has s = 1.
    pub scale: Gs,
    pub is_anchor: bool,
    /// Number of dual vertices on this orbit = number of primal cells.
    pub count: usize,
    /// |s·ω_node| under the real embedding.
    pub radius: f64,
    /// Scaled center directions of the cells at the seed vertex — the
    /// dual-cell vertices contributed by this family.
    pub scaled_centers_at_vertex: Vec<Quaternion>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DualSpec {
    pub seed: WeightVector,
    pub orbits: Vec<DualOrbit>,
    /// Total cell count of the primal.
    pub dual_vertex_count: usize,
    /// Vertex count of the primal.
    pub dual_cell_count: usize,
}

impl DualSpec {
    /// All scaled centers at the seed vertex — the representative dual cell.
    pub fn cell_vertices(&self) -> Vec<Quaternion> {
        let mut v: Vec<Quaternion> = self
            .orbits
            .iter()
            .flat_map(|o| o.scaled_centers_at_vertex.iter().cloned())
            .collect();
        v.sort();
        v.dedup();
        v
    }
}

/// Build the dual polytope of the uniform polytope with dominant H4 seed Λ.
///
/// Every incident cell type's centers are rescaled so that all centers share
/// one exact inner product with Λ (the hyperplane condition, §5).  `anchor`
/// selects which node stays unscaled — the paper picks a different one per
/// subsection; `None` chooses the type with the largest exact center·Λ.
pub fn dual_polytope(seed: &WeightVector, anchor: Option<usize>) -> Result<DualSpec, DualError> {
    let h4 = shared::system(SystemName::H4);
    let families = incident_cells(seed);
    if families.is_empty() {
        return Err(DualError::NoCells);
    }
    // center·Λ is constant within a family (asserted): the stabilizer of Λ
    // permutes the family's centers and preserves the inner product.
    let mut dots = Vec::new();
    for f in &families {
        let d = f.centers[0].dot(&seed.ambient);
        for c in &f.centers[1..] {
            assert_eq!(c.dot(&seed.ambient), d, "non-constant center·Λ in a family");
        }
        if d.is_zero() {
            return Err(DualError::DegenerateCenter { node: f.node });
        }
        dots.push(d);
    }
    let anchor_idx = match anchor {
        Some(node) => families
            .iter()
            .position(|f| f.node == node)
            .expect("anchor node has no incident cells"),
        None => {
            let mut best = 0;
            for i in 1..families.len() {
                if dots[i] > dots[best] {
                    best = i;
                }
            }
            best
        }
    };
    let anchor_dot = dots[anchor_idx].clone();
    let census = crate::orbit::cell_census(seed).map_err(|_| DualError::NoCells)?;
    let orbits: Vec<DualOrbit> = families
        .iter()
        .zip(&dots)
        .map(|(f, d)| {
            let scale = &anchor_dot / d;
            let fam = census
                .families
                .iter()
                .find(|c| c.deleted_node == f.node)
                .expect("census family missing");
            assert_eq!(fam.cells_per_vertex, f.centers.len());
            let w = &h4.weights[f.node - 1];
            DualOrbit {
                node: f.node,
                label: f.label,
                is_anchor: f.node == families[anchor_idx].node,
                radius: scale.to_f64() * w.norm().to_f64().sqrt(),
                scaled_centers_at_vertex: f.centers.iter().map(|c| c.scale(&scale)).collect(),
                count: fam.cell_count,
                scale,
            }
        })
        .collect();
    // hyperplane condition, exact: all scaled centers share one dot with Λ
    for o in &orbits {
        for c in &o.scaled_centers_at_vertex {
            assert_eq!(c.dot(&seed.ambient), anchor_dot);
        }
    }
    Ok(DualSpec {
        seed: seed.clone(),
        dual_vertex_count: census.total_cells(),
        dual_cell_count: census.orbit_size,
        orbits,
    })
}

/// Exact 3D coordinates of the representative dual cell in the projection
/// frame (Λ, e1Λ, e2Λ, e3Λ): each scaled center c maps to
/// ((c, e1Λ), (c, e2Λ), (c, e3Λ)).  The Λ-components are equal by the
/// hyperplane condition and are dropped.
pub fn dual_cell_geometry(spec: &DualSpec) -> Vec<[Gs; 3]> {
    let lam = &spec.seed.ambient;
    let frame: Vec<Quaternion> = (1..4).map(|i| &Quaternion::unit(i) * lam).collect();
    spec.cell_vertices()
        .iter()
        .map(|c| [c.dot(&frame[0]), c.dot(&frame[1]), c.dot(&frame[2])])
        .collect()
}

/// The full dual vertex set (union of the scaled ω_j orbits).  Exact but
/// potentially large (up to 14400 + … points); used for the §5.1 involution
/// check and mesh export, not for the per-polytope reports.
pub fn dual_vertices(spec: &DualSpec) -> Vec<Quaternion> {
    let h4 = shared::system(SystemName::H4);
    let group = shared::group(SystemName::H4);
    let mut out = Vec::new();
    for o in &spec.orbits {
        let seedpt = h4.weights[o.node - 1].scale(&o.scale);
        out.extend(crate::orbit::orbit_points(group, &seedpt));
    }
    out.sort();
    out.dedup();
    out
}
