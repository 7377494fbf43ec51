//! Wythoff orbit polytopes: W(G)·Λ vertex sets, stabilizers, and the cell
//! census of a uniform W(H4) polytope via its rank-3 parabolic subgroups.

use crate::coxeter::{FiniteGroup, GroupElement, SystemName};
use crate::golden::{GoldenScalar as Gs, Sign};
use crate::linalg;
use crate::quat::Quaternion;
use crate::shared;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Debug, thiserror::Error)]
pub enum OrbitError {
    #[error("{system:?} needs {expected} weight coefficients, got {got}")]
    WrongRank {
        system: SystemName,
        expected: usize,
        got: usize,
    },
    #[error("weight is not dominant: a{index} = {value} < 0 (reduce via dominant_rep first)")]
    NotDominant { index: usize, value: String },
    #[error("trivial weight (all coefficients zero) has no orbit polytope")]
    TrivialWeight,
}

/// A dominant weight Λ = Σ a_i ω_i in the named system's weight basis,
/// with the ambient quaternion cached.
#[derive(Clone, Debug, Serialize)]
pub struct WeightVector {
    pub system: SystemName,
    pub coeffs: Vec<Gs>,
    pub ambient: Quaternion,
}

impl WeightVector {
    pub fn new(system: SystemName, coeffs: Vec<Gs>) -> Result<Self, OrbitError> {
        let rank = system.rank();
        if coeffs.len() != rank {
            return Err(OrbitError::WrongRank {
                system,
                expected: rank,
                got: coeffs.len(),
            });
        }
        for (i, c) in coeffs.iter().enumerate() {
            if c.sign() == Sign::Negative {
                return Err(OrbitError::NotDominant {
                    index: i + 1,
                    value: c.to_string(),
                });
            }
        }
        let sys = shared::system(system);
        let mut ambient = Quaternion::zero();
        for (c, w) in coeffs.iter().zip(&sys.weights) {
            ambient = ambient + w.scale(c);
        }
        Ok(WeightVector {
            system,
            coeffs,
            ambient,
        })
    }

    pub fn from_ints(system: SystemName, coeffs: &[i64]) -> Result<Self, OrbitError> {
        Self::new(system, coeffs.iter().map(|&c| Gs::from_int(c)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// The orbit W(G)·Λ as a canonical vertex set.
#[derive(Clone)]
pub struct OrbitPolytope {
    pub seed: WeightVector,
    pub vertices: Vec<Quaternion>,
    pub stabilizer_order: usize,
}

impl OrbitPolytope {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Apply every element of `group` to `point` and return the sorted
/// deduplicated image set.  Deterministic regardless of parallelism.
pub fn orbit_points(group: &FiniteGroup, point: &Quaternion) -> Vec<Quaternion> {
    let mut pts: Vec<Quaternion> = group
        .elements
        .par_iter()
        .map(|g| g.apply(point))
        .collect();
    pts.sort();
    pts.dedup();
    pts
}

pub fn orbit(seed: &WeightVector) -> Result<OrbitPolytope, OrbitError> {
    if seed.is_trivial() {
        return Err(OrbitError::TrivialWeight);
    }
    let group = shared::group(seed.system);
    let vertices = orbit_points(group, &seed.ambient);
    let stabilizer_order = group
        .elements
        .par_iter()
        .filter(|g| g.apply(&seed.ambient) == seed.ambient)
        .count();
    assert_eq!(
        vertices.len() * stabilizer_order,
        group.order(),
        "orbit–stabilizer identity violated"
    );
    Ok(OrbitPolytope {
        seed: seed.clone(),
        vertices,
        stabilizer_order,
    })
}

/// One cell family of a uniform W(H4) polytope: the cells generated by the
/// parabolic subgroup W_S with S = all diagram nodes except `deleted_node`.
#[derive(Clone, Debug, Serialize)]
pub struct CellFamily {
    /// 1-based index of the deleted Dynkin node (the cell centers lie on the
    /// W(H4) orbit of ω_deleted_node).
    pub deleted_node: usize,
    /// Coxeter type of the parabolic subgroup (A3, A1×A2, H2×A1, H3).
    pub subsystem: &'static str,
    /// Polyhedron name of the cell (tetrahedron, pentagonal prism, …).
    pub label: &'static str,
    pub parabolic_order: usize,
    /// Vertices of one cell: |W_S · Λ|.
    pub cell_vertex_count: usize,
    /// Number of cells of this family: |W(H4)| / |W_S|.
    pub cell_count: usize,
    /// Eq. 36: cell_count × cell_vertex_count / |orbit|.
    pub cells_per_vertex: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CellCensus {
    pub seed: WeightVector,
    pub orbit_size: usize,
    pub families: Vec<CellFamily>,
}

impl CellCensus {
    pub fn total_cells(&self) -> usize {
        self.families.iter().map(|f| f.cell_count).sum()
    }
}

/// Nodes of the parabolic obtained by deleting `j` (0-based) from the H4
/// diagram, with its Coxeter type and order.
pub(crate) fn parabolic_nodes(j: usize) -> (Vec<usize>, &'static str, usize) {
    match j {
        0 => (vec![1, 2, 3], "A3", 24),
        1 => (vec![0, 2, 3], "A1×A2", 12),
        2 => (vec![0, 1, 3], "H2×A1", 20),
        3 => (vec![0, 1, 2], "H3", 120),
        _ => unreachable!(),
    }
}

/// Polyhedron label of the W_S·Λ cell, from which of Λ's coefficients on S
/// are nonzero.  `mask[k]` corresponds to the k-th node of `parabolic_nodes`.
pub(crate) fn cell_label(j: usize, mask: &[bool]) -> &'static str {
    match (j, mask) {
        // A3 on nodes {2,3,4}
        (0, [true, false, false]) | (0, [false, false, true]) => "tetrahedron",
        (0, [false, true, false]) => "octahedron",
        (0, [true, true, false]) | (0, [false, true, true]) => "truncated tetrahedron",
        (0, [true, false, true]) => "cuboctahedron",
        (0, [true, true, true]) => "truncated octahedron",
        // A1×A2 on nodes {1} ∪ {3,4}
        (1, [true, true, true]) => "hexagonal prism",
        (1, [true, _, _]) => "triangular prism",
        // H2×A1 on nodes {1,2} ∪ {4}
        (2, [true, true, true]) => "decagonal prism",
        (2, [_, _, true]) => "pentagonal prism",
        // H3 on nodes {1,2,3}
        (3, [true, false, false]) => "dodecahedron",
        (3, [false, true, false]) => "icosidodecahedron",
        (3, [false, false, true]) => "icosahedron",
        (3, [true, true, false]) => "truncated dodecahedron",
        (3, [false, true, true]) => "truncated icosahedron",
        (3, [true, false, true]) => "rhombicosidodecahedron",
        (3, [true, true, true]) => "truncated icosidodecahedron",
        _ => unreachable!("label requested for a degenerate cell"),
    }
}

/// The orbit of `point` under the parabolic subgroup deleting node `j`.
pub(crate) fn parabolic_orbit(j: usize, point: &Quaternion) -> Vec<Quaternion> {
    let h4 = shared::system(SystemName::H4);
    let (nodes, _, order) = parabolic_nodes(j);
    let gens: Vec<GroupElement> = nodes.iter().map(|&i| h4.gens[i].clone()).collect();
    let sub = crate::coxeter::generate_capped("parabolic", &gens, Some(order), order + 1);
    let mut pts: Vec<Quaternion> = sub.elements.iter().map(|g| g.apply(point)).collect();
    pts.sort();
    pts.dedup();
    pts
}

/// Exact affine dimension of a point set.
pub(crate) fn affine_rank(points: &[Quaternion]) -> usize {
    let Some(base) = points.first() else { return 0 };
    let rows: Vec<Vec<Gs>> = points[1..]
        .iter()
        .map(|p| (p - base).0.to_vec())
        .collect();
    linalg::rank(&rows)
}

/// Cell census of the uniform polytope with dominant H4 seed Λ (Eqs. 36–37).
/// A deleted node contributes a family iff W_S·Λ spans an affine 3-space —
/// decided by exact rank, not by which coefficients vanish.
pub fn cell_census(seed: &WeightVector) -> Result<CellCensus, OrbitError> {
    assert_eq!(seed.system, SystemName::H4, "cell census is defined for H4 seeds");
    if seed.is_trivial() {
        return Err(OrbitError::TrivialWeight);
    }
    // seed coefficients are dominant by WeightVector's invariant, so the
    // cheap coefficient-orbit closure gives |W(H4)·Λ| directly
    let orbit_size =
        crate::coxeter::coeff_orbit_size(shared::system(SystemName::H4), &seed.coeffs);
    let mut families = Vec::new();
    for j in 0..4 {
        let cell = parabolic_orbit(j, &seed.ambient);
        if affine_rank(&cell) != 3 {
            continue;
        }
        let (nodes, subsystem, order) = parabolic_nodes(j);
        let mask: Vec<bool> = nodes.iter().map(|&i| !seed.coeffs[i].is_zero()).collect();
        let cell_count = 14400 / order;
        families.push(CellFamily {
            deleted_node: j + 1,
            subsystem,
            label: cell_label(j, &mask),
            parabolic_order: order,
            cell_vertex_count: cell.len(),
            cell_count,
            cells_per_vertex: cell_count * cell.len() / orbit_size,
        });
    }
    Ok(CellCensus {
        seed: seed.clone(),
        orbit_size,
        families,
    })
}

/// Explicit enumeration of the distinct cell centers {g·ω_j : g ∈ W(H4)} —
/// the independent cross-check of the |W(H4)|/|W_S| counting formula.
pub fn distinct_center_count(j: usize) -> usize {
    let h4 = shared::system(SystemName::H4);
    orbit_points(shared::group(SystemName::H4), &h4.weights[j]).len()
}

/// All distinct cells of family `j` incident to the vertex `v`, each cell
/// identified by its canonical (sorted) vertex list.  Used for cross-checks
/// and by the dual builder.
pub fn cells_at_vertex(j: usize, seed: &WeightVector, v: &Quaternion) -> Vec<Vec<Quaternion>> {
    let group = shared::group(SystemName::H4);
    let base_cell = parabolic_orbit(j, &seed.ambient);
    if affine_rank(&base_cell) != 3 {
        return Vec::new();
    }
    let base_set: HashSet<Quaternion> = base_cell.iter().cloned().collect();
    // g·cell contains v  ⇔  g⁻¹·v ∈ cell
    let mut cells: Vec<Vec<Quaternion>> = group
        .elements
        .par_iter()
        .filter(|g| base_set.contains(&g.inverse().apply(v)))
        .map(|g| {
            let mut c: Vec<Quaternion> = base_cell.iter().map(|p| g.apply(p)).collect();
            c.sort();
            c
        })
        .collect();
    cells.sort();
    cells.dedup();
    cells
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(coeffs: &[i64]) -> WeightVector {
        WeightVector::from_ints(SystemName::H4, coeffs).unwrap()
    }

    #[test]
    fn orbit_sizes_600_cell_family() {
        let o = orbit(&wv(&[0, 0, 0, 1])).unwrap();
        assert_eq!(o.size(), 120);
        assert_eq!(o.stabilizer_order, 120);
        let o = orbit(&wv(&[1, 0, 0, 0])).unwrap();
        assert_eq!(o.size(), 600);
        assert_eq!(o.stabilizer_order, 24);
    }

    #[test]
    fn orbit_rejects_bad_seeds() {
        assert!(matches!(
            orbit(&wv(&[0, 0, 0, 0])),
            Err(OrbitError::TrivialWeight)
        ));
        assert!(matches!(
            WeightVector::from_ints(SystemName::H4, &[-1, 0, 0, 0]),
            Err(OrbitError::NotDominant { index: 1, .. })
        ));
        assert!(matches!(
            WeightVector::from_ints(SystemName::H4, &[1, 0, 0]),
            Err(OrbitError::WrongRank { .. })
        ));
    }

    #[test]
    fn vertices_of_600_cell_are_binary_icosahedral_group() {
        // §3.1: O(0,0,0,1) scaled by 1/|ω4| is the set I of 120 unit quaternions.
        use crate::qgroups::{build_set, SetName};
        let o = orbit(&wv(&[0, 0, 0, 1])).unwrap();
        let norm = o.seed.ambient.norm(); // 2τ²
        let inv_len = norm.inv().unwrap(); // scale by 1/|ω4|² then compare q·|ω4|… simpler: compare normalized sets
        let mut scaled: Vec<Quaternion> = o
            .vertices
            .iter()
            .map(|v| {
                // v/|ω4|: multiply by |ω4|/norm = 1/|ω4|; |ω4| = √2·τ
                let len = Gs::sqrt2() * Gs::tau();
                v.scale(&(&len * &inv_len))
            })
            .collect();
        scaled.sort();
        let i = build_set(SetName::I).elements;
        assert_eq!(scaled, i);
    }

    #[test]
    fn census_600_cell() {
        let c = cell_census(&wv(&[0, 0, 0, 1])).unwrap();
        assert_eq!(c.orbit_size, 120);
        assert_eq!(c.families.len(), 1);
        let f = &c.families[0];
        assert_eq!(f.label, "tetrahedron");
        assert_eq!(f.cell_count, 600);
        assert_eq!(f.cell_vertex_count, 4);
        assert_eq!(f.cells_per_vertex, 20); // Eq. 36
    }

    #[test]
    fn census_eq37_and_prisms() {
        // O(0,1,0,0): 600 tetrahedra + 120 icosidodecahedra (Eq. 37)
        let c = cell_census(&wv(&[0, 1, 0, 0])).unwrap();
        let mut got: Vec<(&str, usize)> = c
            .families
            .iter()
            .map(|f| (f.label, f.cell_count))
            .collect();
        got.sort();
        assert_eq!(got, vec![("icosidodecahedron", 120), ("tetrahedron", 600)]);
        // §5.5: O(0,1,0,1) has 120 icosidodecahedra + 600 cuboctahedra +
        // 720 pentagonal prisms = 1440 cells on 3600 vertices.
        let c = cell_census(&wv(&[0, 1, 0, 1])).unwrap();
        assert_eq!(c.orbit_size, 3600);
        assert_eq!(c.total_cells(), 1440);
        let mut got: Vec<(&str, usize)> = c
            .families
            .iter()
            .map(|f| (f.label, f.cell_count))
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                ("cuboctahedron", 600),
                ("icosidodecahedron", 120),
                ("pentagonal prism", 720)
            ]
        );
    }

    #[test]
    fn census_counting_formula_matches_explicit_centers() {
        for j in 0..4 {
            let (_, _, order) = parabolic_nodes(j);
            assert_eq!(distinct_center_count(j), 14400 / order, "node {}", j + 1);
        }
    }

    #[test]
    fn cells_at_vertex_match_census() {
        let seed = wv(&[0, 0, 0, 1]);
        let o = orbit(&seed).unwrap();
        let v = &o.vertices[0];
        // deleting node 4 leaves H3, which fixes ω4 — no 3D cell there
        assert!(cells_at_vertex(3, &seed, v).is_empty());
        // deleting node 1 leaves A3: the 20 tetrahedra at each vertex
        let cells = cells_at_vertex(0, &seed, v);
        assert_eq!(cells.len(), 20);
        for c in &cells {
            assert_eq!(c.len(), 4);
            assert!(c.contains(v));
        }
    }
}
