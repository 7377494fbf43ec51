//! Branching of W(H4) orbits under W(H3), W(A4), and W(A3) (Eqs. 17–35).
//!
//! The right-coset decomposition W(H4) = Σ_i W(G) g^i uses the 120
//! representatives {[p, 1] : p ∈ I}; each sub-orbit is W(G)·(g^i Λ),
//! recorded by its dominant weight and (except for A4) the height along the
//! subgroup-invariant direction.

use crate::coxeter::{coeff_orbit_size, dominant_rep, GroupElement, SystemName};
use crate::golden::GoldenScalar as Gs;
use crate::orbit::WeightVector;
use crate::qgroups::{build_set, SetName};
use crate::quat::Quaternion;
use crate::shared;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashMap;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BranchTerm {
    /// Dominant coefficients of the sub-orbit (rank 3, or rank 4 for A4).
    pub weight: Vec<Gs>,
    /// Coordinate along the invariant direction; `None` for A4 branching,
    /// which uses all four dimensions.
    pub height: Option<Gs>,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchTable {
    pub seed: WeightVector,
    pub subgroup: SystemName,
    pub terms: Vec<BranchTerm>,
}

impl BranchTable {
    /// Σ multiplicity × |sub-orbit| — must equal the seed's orbit size.
    pub fn total_vertices(&self) -> usize {
        let sys = shared::system(self.subgroup);
        self.terms
            .iter()
            .map(|t| t.multiplicity * coeff_orbit_size(sys, &t.weight))
            .sum()
    }
}

/// The 120 right-coset representatives {[p, 1] : p ∈ I} shared by the
/// index-120 subgroups W(H3) and W(A4) (§3).
pub fn coset_reps() -> Vec<GroupElement> {
    build_set(SetName::I)
        .elements
        .into_iter()
        .map(|p| GroupElement::new(false, p, Quaternion::one()))
        .collect()
}

/// Sort terms by |height| descending, then by weight and height.
fn sort_terms(mut terms: Vec<BranchTerm>) -> Vec<BranchTerm> {
    terms.sort_by(|a, b| {
        let abs = |t: &BranchTerm| t.height.as_ref().map(|h| h.abs()).unwrap_or_else(Gs::zero);
        abs(b)
            .cmp(&abs(a))
            .then_with(|| a.weight.cmp(&b.weight))
            .then_with(|| a.height.cmp(&b.height))
    });
    terms
}

/// Turn per-coset (weight, height) images into a branch table.  When Λ has a
/// nontrivial stabilizer in W(H4), several cosets land in the same sub-orbit;
/// the true multiplicity is
/// n_cosets · |W_sub| / (|sub-orbit| · |Stab(Λ)|).
fn aggregate_cosets(
    seed: &WeightVector,
    subgroup: SystemName,
    raw: Vec<(Vec<Gs>, Option<Gs>)>,
) -> BranchTable {
    let mut counts: HashMap<(Vec<Gs>, Option<Gs>), usize> = HashMap::new();
    for key in raw {
        *counts.entry(key).or_insert(0) += 1;
    }
    let seed_orbit =
        coeff_orbit_size(shared::system(SystemName::H4), &seed.coeffs);
    let stab = SystemName::H4.group_order() / seed_orbit;
    let sub_order = subgroup.group_order();
    let sub_sys = shared::system(subgroup);
    let terms: Vec<BranchTerm> = counts
        .into_iter()
        .map(|((weight, height), n_cosets)| {
            let size = coeff_orbit_size(sub_sys, &weight);
            let num = n_cosets * sub_order;
            assert_eq!(num % (size * stab), 0, "non-integral branch multiplicity");
            BranchTerm {
                multiplicity: num / (size * stab),
                weight,
                height,
            }
        })
        .collect();
    BranchTable {
        seed: seed.clone(),
        subgroup,
        terms: sort_terms(terms),
    }
}

/// Aggregate entries that are already true multiplicities (one entry per
/// sub-orbit occurrence).
fn aggregate_terms(
    seed: &WeightVector,
    subgroup: SystemName,
    raw: Vec<(Vec<Gs>, Option<Gs>)>,
) -> BranchTable {
    let mut counts: HashMap<(Vec<Gs>, Option<Gs>), usize> = HashMap::new();
    for key in raw {
        *counts.entry(key).or_insert(0) += 1;
    }
    let terms: Vec<BranchTerm> = counts
        .into_iter()
        .map(|((weight, height), multiplicity)| BranchTerm {
            weight,
            height,
            multiplicity,
        })
        .collect();
    BranchTable {
        seed: seed.clone(),
        subgroup,
        terms: sort_terms(terms),
    }
}

/// Eq. 20: decompose an H4 orbit under W(H3).  Each coset image Λ^(i) is
/// expressed as (b1, b2, b3; b4) in the H3-in-H4 basis, the rank-3 part is
/// reduced to dominant form, and b4 (the coordinate along ω4) is the shell
/// height.
pub fn branch_h3(seed: &WeightVector) -> BranchTable {
    assert_eq!(seed.system, SystemName::H4);
    let h3 = shared::system(SystemName::H3);
    let raw: Vec<(Vec<Gs>, Option<Gs>)> = coset_reps()
        .par_iter()
        .map(|g| {
            let x = g.apply(&seed.ambient);
            let coords = crate::coxeter::weight_coords(h3, &x);
            let (dom, _) = dominant_rep(h3, &coords[..3]);
            (dom, Some(coords[3].clone()))
        })
        .collect();
    aggregate_cosets(seed, SystemName::H3, raw)
}

/// Eq. 29: decompose an H4 orbit under W(A4) in the v-basis.
pub fn branch_a4(seed: &WeightVector) -> BranchTable {
    assert_eq!(seed.system, SystemName::H4);
    let a4 = shared::system(SystemName::A4);
    let raw: Vec<(Vec<Gs>, Option<Gs>)> = coset_reps()
        .par_iter()
        .map(|g| {
            let x = g.apply(&seed.ambient);
            let coords = crate::coxeter::weight_coords(a4, &x);
            let (dom, _) = dominant_rep(a4, &coords);
            (dom, None)
        })
        .collect();
    aggregate_cosets(seed, SystemName::A4, raw)
}

/// Eq. 34's five-term rule for one W(A4) orbit under W(A3) = ⟨r1, r2, r3⟩,
/// with heights normalized so the identity coset sits at −(a1+2a2+3a3+4a4).
///
/// The paper's printed middle three height forms have the signs of a2, a3,
/// a4 flipped; the forms below are the corrected ones, which reproduce the
/// paper's own composite table Eq. 35 and agree with the geometric coset
/// decomposition (asserted in tests).  Terms that coincide (degenerate
/// seeds) are merged.
pub fn branch_a4_to_a3(a: &[Gs]) -> Vec<(Vec<Gs>, Gs)> {
    assert_eq!(a.len(), 4);
    let [a1, a2, a3, a4] = [&a[0], &a[1], &a[2], &a[3]];
    let i = Gs::from_int;
    let lin = |c1: i64, c2: i64, c3: i64, c4: i64| {
        &(&(a1 * &i(c1)) + &(a2 * &i(c2))) + &(&(a3 * &i(c3)) + &(a4 * &i(c4)))
    };
    let candidates: [(Vec<Gs>, Gs); 5] = [
        (vec![a1.clone(), a2.clone(), a3.clone()], lin(-1, -2, -3, -4)),
        (vec![a1.clone(), a2.clone(), a3 + a4], lin(-1, -2, -3, 1)),
        (vec![a1.clone(), a2 + a3, a4.clone()], lin(-1, -2, 2, 1)),
        (vec![a1 + a2, a3.clone(), a4.clone()], lin(-1, 3, 2, 1)),
        (vec![a2.clone(), a3.clone(), a4.clone()], lin(4, 3, 2, 1)),
    ];
    let mut out: Vec<(Vec<Gs>, Gs)> = Vec::new();
    for cand in candidates {
        if !out.contains(&cand) {
            out.push(cand);
        }
    }
    out
}

/// Geometric counterpart of [`branch_a4_to_a3`]: enumerate the actual W(A4)
/// orbit, split it into W(A3) orbits, and report each sub-orbit's dominant
/// triple with its raw coordinate (x, u) along the A3-invariant axis u
/// (normal to α1, α2, α3 of A4).  Heights here differ from Eq. 34's by one
/// global normalization constant.
pub fn branch_a4_to_a3_geometric(a: &[Gs]) -> Vec<(Vec<Gs>, Gs)> {
    let a4 = shared::system(SystemName::A4);
    let a3 = shared::system(SystemName::A3); // same A3 Cartan matrix
    let root_rows: Vec<Vec<Gs>> = a4.roots[..3].iter().map(|r| r.0.to_vec()).collect();
    let axis_coords = crate::linalg::null_space(&root_rows);
    assert_eq!(axis_coords.len(), 1);
    let u = Quaternion([
        axis_coords[0][0].clone(),
        axis_coords[0][1].clone(),
        axis_coords[0][2].clone(),
        axis_coords[0][3].clone(),
    ]);
    let mut ambient = Quaternion::zero();
    for (c, w) in a.iter().zip(&a4.weights) {
        ambient = ambient + w.scale(c);
    }
    let points = crate::orbit::orbit_points(shared::group(SystemName::A4), &ambient);
    let mut out: Vec<(Vec<Gs>, Gs)> = Vec::new();
    for x in &points {
        let coords: Vec<Gs> = a4.roots[..3].iter().map(|r| x.dot(r)).collect();
        let (dom, _) = dominant_rep(a3, &coords);
        let key = (dom, x.dot(&u));
        if !out.contains(&key) {
            out.push(key);
        }
    }
    out.sort();
    out
}

/// Composite H4 → A3 table (Eq. 35): branch under W(A4) first, then apply
/// the Eq. 34 rule to every A4 term, aggregating equal (triple, height)
/// pairs.
pub fn branch_a3(seed: &WeightVector) -> BranchTable {
    let a4_table = branch_a4(seed);
    let mut raw: Vec<(Vec<Gs>, Option<Gs>)> = Vec::new();
    for term in &a4_table.terms {
        for (triple, h) in branch_a4_to_a3(&term.weight) {
            for _ in 0..term.multiplicity {
                raw.push((triple.clone(), Some(h.clone())));
            }
        }
    }
    aggregate_terms(seed, SystemName::A3, raw)
}

/// Dispatch used by the CLI.
pub fn branch(seed: &WeightVector, subgroup: SystemName) -> BranchTable {
    match subgroup {
        SystemName::H3 => branch_h3(seed),
        SystemName::A4 => branch_a4(seed),
        SystemName::A3 => branch_a3(seed),
        SystemName::H4 => panic!("branching target must be a proper subgroup"),
    }
}
