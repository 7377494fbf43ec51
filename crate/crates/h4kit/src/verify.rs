//! The paper-comparison harness: every numeric claim of Koca–Koca–Al-Ajmi
//! (group orders, Table 1, Cartan data, orbit sizes, cell censuses, branch
//! tables, dual scale factors, radii ratios, dual-cell shapes, duality
//! involution) replayed against this crate's exact constructions.
//!
//! Checks come in three states: `Pass` (paper and computation agree),
//! `PassFlagged` (the computation reproduces the paper's number only under a
//! diagnosed misprint, which the note spells out), and `Fail`.  Flagged
//! diffs are recorded, never silently resolved; the solver's exact value is
//! ground truth for downstream checks.

use crate::branching::{branch_a3, branch_a4, branch_h3, BranchTable, BranchTerm};
use crate::coxeter::SystemName;
use crate::dual::{dual_cell_geometry, dual_polytope, dual_vertices, DualSpec};
use crate::geometry::{congruent_up_to_similarity, to_f64_points};
use crate::golden::GoldenScalar as Gs;
use crate::orbit::{cell_census, orbit, WeightVector};
use crate::qgroups::{build_set, conjugacy_classes, SetName};
use crate::shared;
use serde::Serialize;

const TAU: f64 = 1.618033988749895;
const SIG: f64 = 1.0 - TAU;
const S5: f64 = 2.23606797749979;

/// Numeric tolerance for the paper's 3–4 significant-figure radii ratios.
pub const RADII_TOL: f64 = 5e-3;
/// Relative tolerance for dual-cell congruence (distance multisets).
pub const CONGRUENCE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    PassFlagged,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub section: String,
    pub status: Status,
    /// What was compared: exact/numeric values on both sides.
    pub detail: String,
    /// For flagged checks: the diagnosed paper misprint.
    pub note: Option<String>,
}

fn pass(id: &str, section: &str, detail: String) -> Check {
    Check {
        id: id.into(),
        section: section.into(),
        status: Status::Pass,
        detail,
        note: None,
    }
}

fn flagged(id: &str, section: &str, detail: String, note: &str) -> Check {
    Check {
        id: id.into(),
        section: section.into(),
        status: Status::PassFlagged,
        detail,
        note: Some(note.into()),
    }
}

fn fail(id: &str, section: &str, detail: String) -> Check {
    Check {
        id: id.into(),
        section: section.into(),
        status: Status::Fail,
        detail,
        note: None,
    }
}

fn check(id: &str, section: &str, ok: bool, detail: String) -> Check {
    if ok {
        pass(id, section, detail)
    } else {
        fail(id, section, detail)
    }
}

fn gs(lit: &str) -> Gs {
    lit.parse().unwrap_or_else(|e| panic!("bad literal `{lit}`: {e}"))
}

fn wv(coeffs: [i64; 4]) -> WeightVector {
    WeightVector::from_ints(SystemName::H4, &coeffs).unwrap()
}

// ---------------------------------------------------------------- groups

fn check_groups() -> Vec<Check> {
    let mut out = Vec::new();
    for (name, n) in [(SetName::T, 24), (SetName::O, 48), (SetName::I, 120)] {
        let got = build_set(name).elements.len();
        out.push(check(
            &format!("set-{name:?}"),
            "Eqs. 6-8",
            got == n,
            format!("|{name:?}| = {got}, expected {n}"),
        ));
    }
    for (sys, n) in [
        (SystemName::H4, 14400),
        (SystemName::H3, 120),
        (SystemName::A4, 120),
        (SystemName::A3, 24),
    ] {
        let got = shared::group(sys).order();
        out.push(check(
            &format!("group-{sys:?}"),
            "Eq. 16 / §2",
            got == n,
            format!("|W({sys:?})| = {got}, expected {n}"),
        ));
    }
    let aut = crate::coxeter::build_aut_a4().order();
    out.push(check(
        "group-AutA4",
        "Eq. 16",
        aut == 240,
        format!("|Aut(A4)| = {aut}, expected 240"),
    ));
    out
}

fn check_table1() -> Check {
    let classes = conjugacy_classes(&build_set(SetName::I));
    let mut pairs: Vec<(usize, usize)> = classes
        .iter()
        .map(|c| (c.members.len(), c.element_order))
        .collect();
    pairs.sort();
    let expect = vec![
        (1, 1),
        (1, 2),
        (12, 5),
        (12, 5),
        (12, 10),
        (12, 10),
        (20, 3),
        (20, 6),
        (30, 4),
    ];
    let c30_imaginary = classes
        .iter()
        .find(|c| c.members.len() == 30)
        .is_some_and(|c| c.members.iter().all(|q| q.0[0].is_zero()));
    check(
        "table1",
        "Table 1",
        pairs == expect && c30_imaginary,
        format!("(size, order) classes = {pairs:?}; 30-class purely imaginary: {c30_imaginary}"),
    )
}

// ---------------------------------------------------------------- cartan

fn mat_eq(a: &[Vec<Gs>], b: &[Vec<Gs>]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x == y)
}

fn parse_matrix(rows: &[&str]) -> Vec<Vec<Gs>> {
    rows.iter()
        .map(|r| r.split(';').map(|c| gs(c.trim())).collect())
        .collect()
}

fn check_cartan() -> Vec<Check> {
    let mut out = Vec::new();
    let cases = [
        (
            SystemName::H4,
            "Eq. 11",
            vec!["2;-t;0;0", "-t;2;-1;0", "0;-1;2;-1", "0;0;-1;2"],
            // printed inverse: τ⁴ × [[4,3τ,2τ,τ],[3τ,6,4,2],[2τ,4,2(2+σ),2+σ],[τ,2,2+σ,2σ²]]
            vec![
                "(3*t+2)*4;(3*t+2)*3*t;(3*t+2)*2*t;(3*t+2)*t",
                "(3*t+2)*3*t;(3*t+2)*6;(3*t+2)*4;(3*t+2)*2",
                "(3*t+2)*2*t;(3*t+2)*4;(3*t+2)*2*(2+s);(3*t+2)*(2+s)",
                "(3*t+2)*t;(3*t+2)*2;(3*t+2)*(2+s);(3*t+2)*2*s*s",
            ],
        ),
        (
            SystemName::H3,
            "Eq. 18",
            vec!["2;-t;0", "-t;2;-1", "0;-1;2"],
            // (1/2) × [[3τ²,2τ³,τ³],[2τ³,4τ²,2τ²],[τ³,2τ²,τ+2]]
            vec![
                "3*(t+1)/2;(2*t+1);(2*t+1)/2",
                "(2*t+1);2*(t+1);(t+1)",
                "(2*t+1)/2;(t+1);(t+2)/2",
            ],
        ),
        (
            SystemName::A4,
            "Eq. 26",
            vec!["2;-1;0;0", "-1;2;-1;0", "0;-1;2;-1", "0;0;-1;2"],
            vec!["4/5;3/5;2/5;1/5", "3/5;6/5;4/5;2/5", "2/5;4/5;6/5;3/5", "1/5;2/5;3/5;4/5"],
        ),
    ];
    for (sys, section, cartan_rows, inv_rows) in cases {
        let s = shared::system(sys);
        let cartan_ok = mat_eq(&s.cartan, &parse_matrix(&cartan_rows));
        let printed_inv_ok = mat_eq(&s.cartan_inv, &parse_matrix(&inv_rows));
        let identity_ok = mat_eq(
            &crate::linalg::mat_mul(&s.cartan, &s.cartan_inv),
            &crate::linalg::identity(s.roots.len()),
        );
        // (C⁻¹)_ij = (ω_i, ω_j)
        let gram_ok = (0..s.roots.len()).all(|i| {
            (0..s.roots.len()).all(|j| s.weights[i].dot(&s.weights[j]) == s.cartan_inv[i][j])
        });
        out.push(check(
            &format!("cartan-{sys:?}"),
            section,
            cartan_ok && identity_ok && gram_ok,
            format!(
                "Cartan entries match: {cartan_ok}; C·C⁻¹ = 1: {identity_ok}; (C⁻¹)_ij = (ω_i,ω_j): {gram_ok}"
            ),
        ));
        // a printed-inverse mismatch is a flagged diff against the paper,
        // not a failure: the identity checks above are the correctness gate
        out.push(if printed_inv_ok {
            pass(
                &format!("cartan-inverse-printed-{sys:?}"),
                section,
                "computed exact inverse matches the paper's printed inverse entrywise".into(),
            )
        } else {
            flagged(
                &format!("cartan-inverse-printed-{sys:?}"),
                section,
                "computed exact inverse differs from the paper's printed inverse".into(),
                "the computed inverse satisfies C·C⁻¹ = 1 and (C⁻¹)_ij = (ω_i,ω_j) exactly; the printed matrix does not",
            )
        });
    }
    out
}

// ---------------------------------------------------------------- orbits

const UNIFORM_SEEDS: [([i64; 4], usize, &str); 15] = [
    ([0, 0, 0, 1], 120, "§3.1/§5.1"),
    ([1, 0, 0, 0], 600, "§3.2/§5.1"),
    ([0, 1, 0, 0], 1200, "§5.2"),
    ([0, 0, 1, 0], 720, "§5.3"),
    ([1, 0, 0, 1], 2400, "§5.4"),
    ([0, 1, 0, 1], 3600, "§5.5"),
    ([0, 0, 1, 1], 1440, "§5.6"),
    ([0, 1, 1, 0], 3600, "§5.7"),
    ([1, 0, 1, 0], 3600, "§5.8"),
    ([1, 1, 0, 0], 2400, "§5.9"),
    ([1, 1, 1, 0], 7200, "§5.10"),
    ([1, 1, 0, 1], 7200, "§5.11"),
    ([1, 0, 1, 1], 7200, "§5.12"),
    ([0, 1, 1, 1], 7200, "§5.13"),
    ([1, 1, 1, 1], 14400, "§5.14"),
];

fn check_orbit_sizes() -> Vec<Check> {
    UNIFORM_SEEDS
        .iter()
        .map(|&(seed, expect, section)| {
            let o = orbit(&wv(seed)).unwrap();
            check(
                &format!("orbit-size-{seed:?}"),
                section,
                o.size() == expect && o.size() * o.stabilizer_order == 14400,
                format!(
                    "|O{seed:?}| = {} (expected {expect}), stabilizer {}",
                    o.size(),
                    o.stabilizer_order
                ),
            )
        })
        .collect()
}

/// Per seed: (node, label, cell count, cells per vertex, vertices per cell).
type CensusRow = (usize, &'static str, usize, usize, usize);

fn expected_census(seed: [i64; 4]) -> Vec<CensusRow> {
    match seed {
        [0, 0, 0, 1] => vec![(1, "tetrahedron", 600, 20, 4)],
        [1, 0, 0, 0] => vec![(4, "dodecahedron", 120, 4, 20)],
        [0, 1, 0, 0] => vec![
            (1, "tetrahedron", 600, 2, 4),
            (4, "icosidodecahedron", 120, 3, 30),
        ],
        [0, 0, 1, 0] => vec![(1, "octahedron", 600, 5, 6), (4, "icosahedron", 120, 2, 12)],
        [1, 0, 0, 1] => vec![
            (1, "tetrahedron", 600, 1, 4),
            (2, "triangular prism", 1200, 3, 6),
            (3, "pentagonal prism", 720, 3, 10),
            (4, "dodecahedron", 120, 1, 20),
        ],
        [0, 1, 0, 1] => vec![
            (1, "cuboctahedron", 600, 2, 12),
            (3, "pentagonal prism", 720, 2, 10),
            (4, "icosidodecahedron", 120, 1, 30),
        ],
        [0, 0, 1, 1] => vec![
            (1, "truncated tetrahedron", 600, 5, 12),
            (4, "icosahedron", 120, 1, 12),
        ],
        [0, 1, 1, 0] => vec![
            (1, "truncated tetrahedron", 600, 2, 12),
            (4, "truncated icosahedron", 120, 2, 60),
        ],
        [1, 0, 1, 0] => vec![
            (1, "octahedron", 600, 1, 6),
            (2, "triangular prism", 1200, 2, 6),
            (4, "rhombicosidodecahedron", 120, 2, 60),
        ],
        [1, 1, 0, 0] => vec![
            (1, "tetrahedron", 600, 1, 4),
            (4, "truncated dodecahedron", 120, 3, 60),
        ],
        [1, 1, 1, 0] => vec![
            (1, "truncated tetrahedron", 600, 1, 12),
            (2, "triangular prism", 1200, 1, 6),
            (4, "truncated icosidodecahedron", 120, 2, 120),
        ],
        [1, 1, 0, 1] => vec![
            (1, "cuboctahedron", 600, 1, 12),
            (2, "triangular prism", 1200, 1, 6),
            (3, "decagonal prism", 720, 2, 20),
            (4, "truncated dodecahedron", 120, 1, 60),
        ],
        [1, 0, 1, 1] => vec![
            (1, "truncated tetrahedron", 600, 1, 12),
            (2, "hexagonal prism", 1200, 2, 12),
            (3, "pentagonal prism", 720, 1, 10),
            (4, "rhombicosidodecahedron", 120, 1, 60),
        ],
        [0, 1, 1, 1] => vec![
            (1, "truncated octahedron", 600, 2, 24),
            (3, "pentagonal prism", 720, 1, 10),
            (4, "truncated icosahedron", 120, 1, 60),
        ],
        [1, 1, 1, 1] => vec![
            (1, "truncated octahedron", 600, 1, 24),
            (2, "hexagonal prism", 1200, 1, 12),
            (3, "decagonal prism", 720, 1, 20),
            (4, "truncated icosidodecahedron", 120, 1, 120),
        ],
        _ => unreachable!(),
    }
}

fn check_censuses() -> Vec<Check> {
    UNIFORM_SEEDS
        .iter()
        .map(|&(seed, _, section)| {
            let census = cell_census(&wv(seed)).unwrap();
            let got: Vec<CensusRow> = census
                .families
                .iter()
                .map(|f| {
                    (
                        f.deleted_node,
                        f.label,
                        f.cell_count,
                        f.cells_per_vertex,
                        f.cell_vertex_count,
                    )
                })
                .collect();
            let expect = expected_census(seed);
            check(
                &format!("census-{seed:?}"),
                section,
                got == expect,
                format!("cell families {got:?}"),
            )
        })
        .collect()
}

// ---------------------------------------------------------------- branching

fn parse_terms(entries: &[(&str, &str, usize)]) -> Vec<BranchTerm> {
    let mut v: Vec<BranchTerm> = entries
        .iter()
        .map(|(w, h, m)| BranchTerm {
            weight: w.split(',').map(|c| gs(c.trim())).collect(),
            height: Some(gs(h)),
            multiplicity: *m,
        })
        .collect();
    v.sort();
    v
}

fn table_matches(table: &BranchTable, expect: &[BranchTerm]) -> bool {
    let mut got = table.terms.clone();
    got.sort();
    got == expect
}

fn check_branching() -> Vec<Check> {
    let mut out = Vec::new();

    // Eq. 21: 600-cell under W(H3)
    let t21 = branch_h3(&wv([0, 0, 0, 1]));
    let e21 = parse_terms(&[
        ("0,0,0", "1", 1),
        ("0,0,0", "-1", 1),
        ("0,0,1", "t/2", 1),
        ("0,0,1", "-t/2", 1),
        ("0,0,t", "s/2", 1),
        ("0,0,t", "-s/2", 1),
        ("1,0,0", "1/2", 1),
        ("1,0,0", "-1/2", 1),
        ("0,1,0", "0", 1),
    ]);
    out.push(check(
        "eq21",
        "Eq. 21",
        table_matches(&t21, &e21) && t21.total_vertices() == 120,
        format!("9 terms, conservation {} = 120", t21.total_vertices()),
    ));

    // Eq. 23: O(0,1,0,0) under W(H3); the paper prints one term as "(1,10)"
    // with a missing comma — the computed table confirms it reads (1,1,0).
    let t23 = branch_h3(&wv([0, 1, 0, 0]));
    let e23 = parse_terms(&[
        ("t,0,0", "3*t/2", 1),
        ("t,0,0", "0-3*t/2", 1),
        ("0,1,0", "t+1", 1),
        ("0,1,0", "0-t-1", 1),
        ("0,t*t,0", "1", 1),
        ("0,t*t,0", "0-1", 1),
        ("1,1,0", "(2*t+1)/2", 1),
        ("1,1,0", "0-(2*t+1)/2", 1),
        ("0,t,1", "(t+2)/2", 1),
        ("0,t,1", "0-(t+2)/2", 1),
        ("0,t,t", "(t+1)/2", 1),
        ("0,t,t", "0-(t+1)/2", 1),
        ("1,0,t*t", "t", 1),
        ("1,0,t*t", "0-t", 1),
        ("t*t,0,1", "1/2", 1),
        ("t*t,0,1", "0-1/2", 1),
        ("t,0,t*t", "s/2", 1),
        ("t,0,t*t", "0-s/2", 1),
        ("1,1,t", "t/2", 1),
        ("1,1,t", "0-t/2", 1),
        ("2*t,0,0", "0", 1),
        ("0,1,2*t", "0", 1),
    ]);
    let ok23 = table_matches(&t23, &e23) && t23.total_vertices() == 1200;
    out.push(if ok23 {
        flagged(
            "eq23",
            "Eq. 23",
            format!("22 terms, conservation {} = 1200", t23.total_vertices()),
            "the paper prints the term \"(1,10)\" with a missing comma; the computed table confirms it is (1,1,0) at ±τ³/2",
        )
    } else {
        fail(
            "eq23",
            "Eq. 23",
            format!("terms {}, total {}", t23.terms.len(), t23.total_vertices()),
        )
    });

    // Eq. 24: O(0,0,1,0) under W(H3)
    let t24 = branch_h3(&wv([0, 0, 1, 0]));
    let e24 = parse_terms(&[
        ("0,0,1", "(t+2)/2", 1),
        ("0,0,1", "(0-(t+2))/2", 1),
        ("0,0,t*t", "(2*t-1)/2", 1),
        ("0,0,t*t", "(1-2*t)/2", 1),
        ("0,1,0", "t", 1),
        ("0,1,0", "0-t", 1),
        ("0,0,2*t", "0", 1),
        ("0,1,t", "s/2", 1),
        ("0,1,t", "(0-s)/2", 1),
        ("1,0,1", "t*t/2", 1),
        ("1,0,1", "(0-t*t)/2", 1),
        ("1,0,t", "t/2", 1),
        ("1,0,t", "(0-t)/2", 1),
        ("1,1,0", "1/2", 1),
        ("1,1,0", "(0-1)/2", 1),
        ("t,0,1", "0", 1),
        ("0,t,0", "1", 1),
        ("0,t,0", "0-1", 1),
    ]);
    out.push(check(
        "eq24",
        "Eq. 24",
        table_matches(&t24, &e24) && t24.total_vertices() == 720,
        format!("18 terms, conservation {} = 720", t24.total_vertices()),
    ));

    // Eq. 30: 600-cell under W(A4)
    let t30 = branch_a4(&wv([0, 0, 0, 1]));
    let mut e30: Vec<Vec<Gs>> = ["0,0,1,t", "t,1,0,0", "t,0,0,t", "1,0,t,0", "0,t,0,1"]
        .iter()
        .map(|w| w.split(',').map(gs).collect())
        .collect();
    e30.sort();
    let mut g30: Vec<Vec<Gs>> = t30.terms.iter().map(|t| t.weight.clone()).collect();
    g30.sort();
    out.push(check(
        "eq30",
        "Eq. 30",
        g30 == e30 && t30.total_vertices() == 120,
        format!("5 A4 orbits, conservation {} = 120", t30.total_vertices()),
    ));

    // Eq. 31: 120-cell under W(A4), 13 terms
    let t31 = branch_a4(&wv([1, 0, 0, 0]));
    let mut e31: Vec<Vec<Gs>> = [
        "3*t+1,0,0,0",
        "0,0,0,3*t+1",
        "1,2*t+1,0,0",
        "0,0,2*t+1,1",
        "t,0,0,2*t+2",
        "2*t+2,0,0,t",
        "0,t+1,t+1,0",
        "1,t,0,2*t+1",
        "2*t+1,0,t,1",
        "t,t+1,t,0",
        "0,t,t+1,t",
        "t+1,t,1,t",
        "t,1,t,t+1",
    ]
    .iter()
    .map(|w| w.split(',').map(gs).collect())
    .collect();
    e31.sort();
    let mut g31: Vec<Vec<Gs>> = t31.terms.iter().map(|t| t.weight.clone()).collect();
    g31.sort();
    out.push(check(
        "eq31",
        "Eq. 31",
        g31 == e31 && t31.total_vertices() == 600,
        format!("13 A4 orbits, conservation {} = 600", t31.total_vertices()),
    ));

    // Eq. 34: the five-term rule.  The paper's printed middle three height
    // forms have flipped signs on a2, a3, a4; the corrected forms are what
    // reproduce the paper's own Eq. 35 (checked next) and the geometric
    // decomposition.
    let generic: Vec<Gs> = (1..=4).map(Gs::from_int).collect();
    let analytic = crate::branching::branch_a4_to_a3(&generic);
    let geometric = crate::branching::branch_a4_to_a3_geometric(&generic);
    let triples_match = {
        let mut a: Vec<Vec<Gs>> = analytic.iter().map(|(t, _)| t.clone()).collect();
        let mut g: Vec<Vec<Gs>> = geometric.iter().map(|(t, _)| t.clone()).collect();
        a.sort();
        g.sort();
        a == g
    };
    out.push(if triples_match && analytic.len() == 5 {
        flagged(
            "eq34",
            "Eq. 34",
            "five-term rule agrees with the geometric W(A3)-coset decomposition on a generic seed".into(),
            "the printed heights of the middle three summands have the signs of a2, a3, a4 flipped; the corrected forms −a1−2a2−3a3+a4, −a1−2a2+2a3+a4, −a1+3a2+2a3+a4 are used (they reproduce Eq. 35 exactly)",
        )
    } else {
        fail("eq34", "Eq. 34", "analytic rule disagrees with geometry".into())
    });

    // Eq. 35: composite 600-cell → W(A3) table, 15 terms
    let t35 = branch_a3(&wv([0, 0, 0, 1]));
    let e35 = parse_terms(&[
        ("1,0,0", "3+4*t", 1),
        ("0,0,1", "0-3-4*t", 1),
        ("0,0,t", "5*t", 1),
        ("t,0,0", "0-5*t", 1),
        ("t,0,1", "1+3*t", 1),
        ("1,0,t", "0-1-3*t", 1),
        ("0,1,t", "2+t", 1),
        ("t,1,0", "0-2-t", 1),
        ("1,t,0", "2*t-1", 1),
        ("0,t,1", "1-2*t", 1),
        ("t*t,0,0", "3-t", 1),
        ("0,0,t*t", "t-3", 1),
        ("t,0,t", "0", 1),
        ("0,t,0", "4+2*t", 1),
        ("0,t,0", "0-4-2*t", 1),
    ]);
    let ok35 = table_matches(&t35, &e35) && t35.total_vertices() == 120;
    out.push(if ok35 {
        flagged(
            "eq35",
            "Eq. 35",
            format!("15 terms, conservation {} = 120", t35.total_vertices()),
            "the paper writes the (0,τ,0)(±(2τ+4)) entry only once; both signs occur (each once), as required by the height-mirror symmetry",
        )
    } else {
        fail("eq35", "Eq. 35", "composite table mismatch".into())
    });

    out
}

// ---------------------------------------------------------------- duals

struct Section {
    name: &'static str,
    seed: [i64; 4],
    anchor: usize,
    /// (node, paper closed form) for every non-anchor incident type.
    scales: &'static [(usize, &'static str)],
    cell_eq: &'static str,
}

const SECTIONS: [Section; 13] = [
    Section { name: "§5.2", seed: [0, 1, 0, 0], anchor: 4, scales: &[(1, "2/(3*t)")], cell_eq: "Eq. 39" },
    Section { name: "§5.3", seed: [0, 0, 1, 0], anchor: 1, scales: &[(4, "2*t/(2+s)")], cell_eq: "Eq. 41" },
    Section { name: "§5.4", seed: [1, 0, 0, 1], anchor: 2, scales: &[(3, "t*t*t*t/(t+3)"), (1, "t*t*t*t/(t+4)"), (4, "t*t*t*t/(s+3)")], cell_eq: "Eq. 45" },
    Section { name: "§5.5", seed: [0, 1, 0, 1], anchor: 3, scales: &[(4, "(4*t+13)/10"), (1, "(7*t-8)/4")], cell_eq: "Eq. 48" },
    Section { name: "§5.6", seed: [0, 0, 1, 1], anchor: 1, scales: &[(4, "(21*t+9)/19")], cell_eq: "Eq. 51" },
    Section { name: "§5.7", seed: [0, 1, 1, 0], anchor: 1, scales: &[(4, "5*t/(4+s)")], cell_eq: "Eq. 54" },
    Section { name: "§5.8", seed: [1, 0, 1, 0], anchor: 4, scales: &[(1, "3/(4+2*t)"), (2, "3/(4+3*t)")], cell_eq: "Eq. 57" },
    Section { name: "§5.9", seed: [1, 1, 0, 0], anchor: 4, scales: &[(1, "(t+2)/(3*t+4)")], cell_eq: "Eq. 60" },
    Section { name: "§5.10", seed: [1, 1, 1, 0], anchor: 4, scales: &[(1, "5/(5*t+4)"), (2, "5/(3*t+10)")], cell_eq: "Eq. 63" },
    Section { name: "§5.11", seed: [1, 1, 0, 1], anchor: 3, scales: &[(1, "(6*s+7)/4"), (2, "(13*s+61)/79"), (4, "(13*t+36)/29")], cell_eq: "Eq. 66" },
    Section { name: "§5.12", seed: [1, 0, 1, 1], anchor: 2, scales: &[(4, "(33*t+36)/31"), (1, "(6*s+27)/19"), (3, "(33*t+51)/71")], cell_eq: "Eq. 69" },
    Section { name: "§5.13", seed: [0, 1, 1, 1], anchor: 1, scales: &[(4, "(6*t+2)/5"), (3, "6*(13*t+3)/121")], cell_eq: "Eq. 72" },
    Section { name: "§5.14", seed: [1, 1, 1, 1], anchor: 4, scales: &[(1, "(31*s+20)/2"), (2, "(17*s+30)/57"), (3, "(17*s+89)/155")], cell_eq: "Eq. 75" },
];

/// The anchor node the paper uses for a given uniform seed, if the seed is
/// one of the fourteen treated in §5.
pub fn paper_anchor(seed: &WeightVector) -> Option<usize> {
    SECTIONS
        .iter()
        .find(|s| {
            seed.coeffs.len() == 4
                && s.seed
                    .iter()
                    .zip(&seed.coeffs)
                    .all(|(&n, c)| c == &Gs::from_int(n))
        })
        .map(|s| s.anchor)
}

fn scale_of(spec: &DualSpec, node: usize) -> &Gs {
    &spec
        .orbits
        .iter()
        .find(|o| o.node == node)
        .unwrap_or_else(|| panic!("no incident type {node}"))
        .scale
}

fn radius_of(spec: &DualSpec, node: usize) -> f64 {
    spec.orbits.iter().find(|o| o.node == node).unwrap().radius
}

fn omega_norm(node: usize) -> f64 {
    shared::system(SystemName::H4).weights[node - 1]
        .norm()
        .to_f64()
        .sqrt()
}

fn check_scales(section: &Section, spec: &DualSpec) -> Check {
    let id = format!("scales-{}", section.name.trim_start_matches('§'));
    let anchor_ok = scale_of(spec, section.anchor) == &Gs::one();
    let mut detail = Vec::new();
    let mut ok = anchor_ok;
    for (node, lit) in section.scales {
        let expect = gs(lit);
        let got = scale_of(spec, *node);
        detail.push(format!("node {node}: {got} (paper {lit})"));
        ok &= got == &expect;
    }
    if section.name == "§5.3" {
        if ok {
            return flagged(
                &id,
                section.name,
                detail.join("; "),
                "the §5.3 body text's λ = 2τ/(2+σ) is the exact solver value; the Figure 4 caption prints 2τ/(3+σ) ≈ 2.34 incorrectly",
            );
        }
        return fail(&id, section.name, detail.join("; "));
    }
    check(&id, section.name, ok, detail.join("; "))
}

/// One radii-ratio comparison: computed value vs the paper's printed value,
/// optionally flagged with the diagnosed misprint it reproduces.
fn ratio(
    out: &mut Vec<Check>,
    id: &str,
    section: &str,
    label: &str,
    computed: f64,
    paper: f64,
    flag: Option<&str>,
) {
    let ok = (computed - paper).abs() <= RADII_TOL;
    let detail = format!("{label}: computed {computed:.5}, paper {paper}");
    out.push(match (ok, flag) {
        (true, None) => pass(id, section, detail),
        (true, Some(note)) => flagged(id, section, detail, note),
        (false, _) => fail(id, section, detail),
    });
}

fn check_radii(section: &Section, spec: &DualSpec) -> Vec<Check> {
    let mut out = Vec::new();
    let r = |n: usize| radius_of(spec, n);
    let sec = section.name;
    let id = format!("radii-{}", sec.trim_start_matches('§'));
    let t2 = TAU * TAU;
    match section.seed {
        [0, 1, 0, 0] => ratio(&mut out, &id, sec, "R4/R1", r(4) / r(1), 1.061, None),
        [0, 0, 1, 0] => ratio(&mut out, &id, sec, "R4/R1", r(4) / r(1), 1.023, None),
        [1, 0, 0, 1] => {
            // Eq. 44 lists radii in units of τ² = |ω4|/√2τ⁻¹… i.e. R_j/τ².
            ratio(&mut out, &format!("{id}-a"), sec, "R2/τ²", r(2) / t2, 2.45, None);
            ratio(&mut out, &format!("{id}-b"), sec, "R3/τ²", r(3) / t2, 2.47, None);
            ratio(&mut out, &format!("{id}-c"), sec, "R4/τ²", r(4) / t2, 2.52, None);
            // the printed 2.97 applies λ (the ω3 factor) to ω1 instead of ρ
            let lam = scale_of(spec, 3).to_f64();
            ratio(
                &mut out,
                &format!("{id}-d"),
                sec,
                "λ·|ω1|/τ² (reproduces the printed 2.97)",
                lam * omega_norm(1) / t2,
                2.97,
                Some("Eq. 44's fourth radius 2.97 uses λ = τ⁴/(τ+3) on ω1; the correct factor is ρ = τ⁴/(τ+4), giving R1/τ² = 2.44"),
            );
        }
        [0, 1, 0, 1] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R3/τ²", r(3) / t2, 1.6625, None);
            ratio(&mut out, &format!("{id}-b"), sec, "R1/τ²", r(1) / t2, 1.6631, None);
            ratio(&mut out, &format!("{id}-c"), sec, "R4/τ²", r(4) / t2, 1.7019, None);
        }
        [0, 0, 1, 1] => ratio(&mut out, &id, sec, "R1/R4", r(1) / r(4), 1.012, None),
        [0, 1, 1, 0] => ratio(&mut out, &id, sec, "R1/R4", r(1) / r(4), 0.957, None),
        [1, 0, 1, 0] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R2/R4", r(2) / r(4), 0.9495, None);
            ratio(
                &mut out,
                &format!("{id}-b"),
                sec,
                "R1/R2 (reproduces the printed 0.9991)",
                r(1) / r(2),
                0.9991,
                Some("Eq. 56 prints 0.9991 in the R1 slot, but that value is R1/R2; the true R1/R4 = 0.94868"),
            );
        }
        [1, 1, 0, 0] => ratio(&mut out, &id, sec, "R1/R4", r(1) / r(4), 0.935, None),
        [1, 1, 1, 0] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R2/R4", r(2) / r(4), 0.9433, None);
            ratio(
                &mut out,
                &format!("{id}-b"),
                sec,
                "R1/R2 (reproduces the printed 1.0032)",
                r(1) / r(2),
                1.0032,
                Some("Eq. 62 prints 1.0032 in the R1 slot, but that value is R1/R2; the true R1/R4 = 0.94632"),
            );
        }
        [1, 1, 0, 1] => {
            // Eq. 65's list 1.00 : 1.33 : 1.88 : 1.90 divides by the unscaled
            // |ω4| and forgets two of the three scale factors.
            let w4 = omega_norm(4);
            ratio(
                &mut out,
                &format!("{id}-a"),
                sec,
                "λ·|ω1|/(2τ) (reproduces the printed 1.33)",
                scale_of(spec, 1).to_f64() * omega_norm(1) / (2.0 * TAU),
                1.33,
                Some("Eq. 65's 1.33 divides λ|ω1| by 2τ instead of |ω4| = √2·τ; the true R1/R3 = 0.99001"),
            );
            ratio(
                &mut out,
                &format!("{id}-b"),
                sec,
                "R2/|ω4| (reproduces the printed 1.88)",
                r(2) / w4,
                1.88,
                Some("Eq. 65 normalizes by the unscaled |ω4| rather than a dual radius"),
            );
            ratio(
                &mut out,
                &format!("{id}-c"),
                sec,
                "|ω3|/|ω4| (reproduces the printed 1.90)",
                omega_norm(3) / w4,
                1.90,
                Some("Eq. 65's 1.90 is |ω3|/|ω4| with no scale factor applied"),
            );
        }
        [1, 0, 1, 1] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R2/R3", r(2) / r(3), 1.002, None);
            ratio(&mut out, &format!("{id}-b"), sec, "R4/R3", r(4) / r(3), 1.031, None);
            ratio(
                &mut out,
                &format!("{id}-c"),
                sec,
                "√2·R1/R3 (reproduces the printed 1.418)",
                std::f64::consts::SQRT_2 * r(1) / r(3),
                1.418,
                Some("Eq. 68's 1.418 carries a spurious √2; the true R1/R3 = 1.00298"),
            );
        }
        [0, 1, 1, 1] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R3/R1", r(3) / r(1), 0.9906, None);
            ratio(&mut out, &format!("{id}-b"), sec, "R4/R1", r(4) / r(1), 1.0233, None);
        }
        [1, 1, 1, 1] => {
            ratio(&mut out, &format!("{id}-a"), sec, "R1/R4", r(1) / r(4), 0.9621, None);
            ratio(&mut out, &format!("{id}-b"), sec, "R2/R4", r(2) / r(4), 0.9584, None);
            ratio(&mut out, &format!("{id}-c"), sec, "R3/R4", r(3) / r(4), 0.9632, None);
        }
        _ => unreachable!(),
    }
    out
}

/// The paper's dual-cell coordinate lists (Eqs. 39–75, odd steps), evaluated
/// as floats.  The two diagnosed misprints (Eq. 63 and Eq. 66 first points)
/// are corrected here; the flags on those checks record the printed forms.
fn paper_cell_points(section: &Section) -> Vec<[f64; 3]> {
    let s2 = SIG * SIG;
    match section.seed {
        [0, 1, 0, 0] => vec![
            [0.0, 0.0, 1.0],
            [SIG / 2.0, TAU / 2.0, -0.5],
            [-SIG / 2.0, -TAU / 2.0, -0.5],
            [-1.0 / 3.0, -s2 / 3.0, 0.0],
            [1.0 / 3.0, s2 / 3.0, 0.0],
        ],
        [0, 0, 1, 0] => {
            let h = S5 / 2.0;
            vec![
                [0.0, 1.0, TAU],
                [0.0, -1.0, -TAU],
                [-h, -h * SIG, -h * s2],
                [h * s2, h, h * SIG],
                [-2.0 * h * SIG, 0.0, 0.0],
                [h * s2, -h, -h * SIG],
                [-h, h * SIG, h * s2],
            ]
        }
        [1, 0, 0, 1] => {
            let t4 = TAU.powi(4);
            let (l, r, e) = (t4 / (TAU + 3.0), t4 / (TAU + 4.0), t4 / (SIG + 3.0));
            vec![
                [r * s2, 0.0, r],
                [-1.0, -s2, -2.0 * SIG],
                [-SIG, SIG + 2.0, -SIG],
                [-2.0 * SIG, -1.0, s2],
                [-l, l, -l * SIG.powi(3)],
                [-l * s2, -l * (SIG + 2.0), 0.0],
                [-2.0 * l * SIG, l * s2, l * SIG],
                [-e * s2, 0.0, -e],
            ]
        }
        [0, 1, 0, 1] => {
            let (l, r) = ((4.0 * TAU + 13.0) / 10.0, (7.0 * TAU - 8.0) / 4.0);
            vec![
                [-r * S5, r * SIG, -r * TAU],
                [r * S5, -r * SIG, -r * TAU],
                [-SIG, -S5, 0.0],
                [SIG, S5, 0.0],
                [0.0, 0.0, 2.0 * l],
            ]
        }
        [0, 0, 1, 1] => {
            let l = (21.0 * TAU + 9.0) / 19.0;
            vec![
                [S5, -1.0, S5],
                [2.0 * SIG, -TAU, TAU * TAU],
                [-3.0, 1.0, 1.0],
                [SIG, 2.0 * TAU, -s2],
                [TAU * TAU, 2.0, s2],
                [0.0, l * SIG, -l],
            ]
        }
        [0, 1, 1, 0] => {
            let l = 5.0 * TAU / (4.0 + SIG);
            vec![
                [-2.0 * TAU * TAU, -SIG, -1.0],
                [TAU + 2.0, TAU + 2.0, -TAU],
                [0.0, l, 3.0 * l * TAU],
                [l, -l * (TAU + 2.0), -2.0 * l * TAU],
            ]
        }
        [1, 0, 1, 0] => {
            let (l, r) = (3.0 / (4.0 + 2.0 * TAU), 3.0 / (4.0 + 3.0 * TAU));
            vec![
                [-l * TAU * TAU, l * TAU, -l],
                [r * TAU, r * (TAU + 2.0), -r * TAU],
                [-2.0 * r * TAU, -r * TAU * TAU, r],
                [1.0, 1.0, TAU.powi(3)],
                [TAU, -TAU * TAU, -2.0 * TAU],
            ]
        }
        [1, 1, 0, 0] => {
            let l = (TAU + 2.0) / (3.0 * TAU + 4.0);
            vec![
                [-l * TAU * TAU, -l, 0.0],
                [1.0, 0.0, 3.0 * TAU + 1.0],
                [-1.0, 2.0 * TAU * TAU, -TAU * TAU],
                [TAU * TAU, -TAU.powi(3), -2.0 * TAU],
            ]
        }
        [1, 1, 1, 0] => {
            let (l, r) = (5.0 / (5.0 * TAU + 4.0), 5.0 / (3.0 * TAU + 10.0));
            vec![
                // corrected from the printed λ(2τ², σ, τ)
                [-2.0 * l * TAU * TAU, -l * SIG, -l],
                [r * TAU, r * (TAU + 2.0), -r * TAU],
                [1.0, 1.0, 4.0 * TAU + 1.0],
                [TAU * TAU, -2.0 * TAU * TAU, -3.0 * TAU],
            ]
        }
        [1, 1, 0, 1] => {
            let (l, r, e) = (
                (6.0 * SIG + 7.0) / 4.0,
                (13.0 * SIG + 61.0) / 79.0,
                (13.0 * TAU + 36.0) / 29.0,
            );
            vec![
                // corrected from the printed (λ/2)(2−3σ, −2σ, −σ²)
                [l * S5, -l * SIG, l * TAU],
                [-r * TAU, r * SIG, 2.0 * r],
                [e * SIG, 0.0, -e * (TAU + 2.0)],
                [-S5, 2.0 * TAU, SIG],
                [0.0, 3.0 * SIG - 2.0, -1.0],
            ]
        }
        [1, 0, 1, 1] => {
            let (l, r, e) = (
                (33.0 * TAU + 36.0) / 31.0,
                (6.0 * SIG + 27.0) / 19.0,
                (33.0 * TAU + 51.0) / 71.0,
            );
            vec![
                [r * S5, -r, r * S5],
                [-e * TAU, e * TAU, e * s2],
                [l * SIG, l * SIG, -l * TAU * TAU],
                [-1.0, -S5, 3.0],
                [3.0, S5, 1.0],
            ]
        }
        [0, 1, 1, 1] => {
            let (l, r) = ((6.0 * TAU + 2.0) / 5.0, 6.0 * (13.0 * TAU + 3.0) / 121.0);
            vec![
                [-(2.0 * TAU + 3.0), -SIG, -(TAU + 2.0)],
                [TAU + 3.0, TAU + 2.0, -(2.0 * TAU + 1.0)],
                [r, -r * (TAU + 2.0), 0.0],
                [0.0, l, 3.0 * l * TAU],
            ]
        }
        [1, 1, 1, 1] => {
            let (l, r, e) = (
                (31.0 * SIG + 20.0) / 2.0,
                (17.0 * SIG + 30.0) / 57.0,
                (17.0 * SIG + 89.0) / 155.0,
            );
            vec![
                [-l * (5.0 * TAU + 2.0), l, -l * (3.0 * TAU + 1.0)],
                [r * (TAU + 1.0), r * (3.0 * TAU + 1.0), -3.0 * r * (TAU + 1.0)],
                [e * (3.0 * TAU + 1.0), -2.0 * e * (2.0 * TAU + 1.0), e * TAU],
                [TAU, TAU, 4.0 + 5.0 * TAU],
            ]
        }
        _ => unreachable!(),
    }
}

fn check_cell_shape(section: &Section, spec: &DualSpec) -> Check {
    let id = format!("cell-{}", section.cell_eq.replace(". ", "").to_lowercase());
    let ours = to_f64_points(&dual_cell_geometry(spec));
    let paper = paper_cell_points(section);
    let ok = congruent_up_to_similarity(&ours, &paper);
    let detail = format!(
        "{}: {} computed dual-cell vertices vs {} paper points, congruent: {ok}",
        section.cell_eq,
        ours.len(),
        paper.len()
    );
    let misprint = match section.seed {
        [1, 1, 1, 0] => Some(
            "Eq. 63 prints the first vertex as λ(2τ², σ, τ); in the frame of the other three printed vertices the cell geometry forces −λ(2τ², σ, 1), which is what the comparison uses",
        ),
        [1, 1, 0, 1] => Some(
            "Eq. 66 prints the first vertex as (λ/2)(2−3σ, −2σ, −σ²); the hyperplane condition forces λ(√5, −σ, τ), which is what the comparison uses",
        ),
        _ => None,
    };
    match (ok, misprint) {
        (true, None) => pass(&id, section.name, detail),
        (true, Some(note)) => flagged(&id, section.name, detail, note),
        (false, _) => fail(&id, section.name, detail),
    }
}

fn check_duality_involution() -> Check {
    // §5.1: the dual of the 600-cell is the 120-cell and vice versa.
    let spec4 = dual_polytope(&wv([0, 0, 0, 1]), None).unwrap();
    let dv4 = dual_vertices(&spec4);
    let o1 = orbit(&wv([1, 0, 0, 0])).unwrap();
    let forward = dv4 == o1.vertices;
    let spec1 = dual_polytope(&wv([1, 0, 0, 0]), None).unwrap();
    let dv1 = dual_vertices(&spec1);
    let scale = spec1.orbits[0].scale.clone();
    let o4 = orbit(&wv([0, 0, 0, 1])).unwrap();
    let mut scaled: Vec<crate::quat::Quaternion> =
        o4.vertices.iter().map(|v| v.scale(&scale)).collect();
    scaled.sort();
    let backward = dv1 == scaled;
    check(
        "involution-5.1",
        "§5.1",
        forward && backward,
        format!("dual(600-cell) = O(1,0,0,0): {forward}; dual(120-cell) = scaled O(0,0,0,1): {backward}"),
    )
}

/// Run the full manifest.  Each entry is one paper claim.
pub fn run_all() -> Vec<Check> {
    let mut out = Vec::new();
    out.extend(check_groups());
    out.push(check_table1());
    out.extend(check_cartan());
    out.extend(check_orbit_sizes());
    out.extend(check_censuses());
    out.extend(check_branching());
    for section in &SECTIONS {
        let spec = dual_polytope(&wv(section.seed), Some(section.anchor)).unwrap();
        out.push(check_scales(section, &spec));
        out.extend(check_radii(section, &spec));
        out.push(check_cell_shape(section, &spec));
        // hyperplane condition: every scaled center incident to the vertex Λ
        // has the same exact dot product with Λ
        let lam = &spec.seed.ambient;
        let dots: Vec<Gs> = spec
            .orbits
            .iter()
            .flat_map(|o| o.scaled_centers_at_vertex.iter().map(|c| c.dot(lam)))
            .collect();
        let coplanar = dots.windows(2).all(|w| w[0] == w[1]);
        out.push(check(
            &format!("hyperplane-{}", section.name.trim_start_matches('§')),
            section.name,
            coplanar,
            format!(
                "(c − c′)·Λ = 0 exactly across all {} incident cell centers",
                dots.len()
            ),
        ));
        // dual counting identities (criterion: dual vertex count = primal
        // cell count, dual cell count = primal vertex count)
        let census = cell_census(&wv(section.seed)).unwrap();
        out.push(check(
            &format!("dual-counts-{}", section.name.trim_start_matches('§')),
            section.name,
            spec.dual_vertex_count == census.total_cells()
                && spec.dual_cell_count == census.orbit_size,
            format!(
                "dual vertices {} = primal cells {}; dual cells {} = primal vertices {}",
                spec.dual_vertex_count,
                census.total_cells(),
                spec.dual_cell_count,
                census.orbit_size
            ),
        ));
    }
    out.push(check_duality_involution());
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

/// Human-readable one-line-per-check report.
pub fn render(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let tag = match c.status {
            Status::Pass => "PASS ",
            Status::PassFlagged => "PASS*",
            Status::Fail => "FAIL ",
        };
        s.push_str(&format!("[{tag}] {:28} {:10} {}\n", c.id, c.section, c.detail));
        if let Some(note) = &c.note {
            s.push_str(&format!("        note: {note}\n"));
        }
    }
    let n_pass = checks.iter().filter(|c| c.status == Status::Pass).count();
    let n_flag = checks
        .iter()
        .filter(|c| c.status == Status::PassFlagged)
        .count();
    let n_fail = checks.iter().filter(|c| c.status == Status::Fail).count();
    s.push_str(&format!(
        "{} checks: {n_pass} pass, {n_flag} pass with flagged paper misprints, {n_fail} fail\n",
        checks.len()
    ));
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_literals_in_manifest_parse() {
        for section in &SECTIONS {
            for (_, lit) in section.scales {
                let v = gs(lit);
                assert!(v.to_f64() > 0.0, "{lit}");
            }
        }
    }

    #[test]
    fn cartan_checks_pass() {
        for c in check_cartan() {
            assert_eq!(c.status, Status::Pass, "{c:?}");
        }
    }
}
