//! Branching of W(H4) orbits under the maximal subgroups: the 600-cell and
//! the 1200-vertex O(0,1,0,0) under W(H3) (Eqs. 21, 23), the 600-cell and
//! 120-cell under W(A4) (Eqs. 30, 31), and the composite decomposition of
//! the 600-cell under W(A3) (Eq. 35).
//!
//! Run with `cargo run --release --example branch_tables`.

use h4kit::branching::{branch, BranchTable};
use h4kit::coxeter::SystemName;
use h4kit::orbit::WeightVector;

fn show(title: &str, table: &BranchTable) {
    println!("{title}");
    for t in &table.terms {
        let w: Vec<String> = t.weight.iter().map(|c| c.to_string()).collect();
        let h = t
            .height
            .as_ref()
            .map(|h| format!("({h})"))
            .unwrap_or_default();
        let m = if t.multiplicity > 1 {
            format!("  ×{}", t.multiplicity)
        } else {
            String::new()
        };
        println!("    ({}){h}{m}", w.join(","));
    }
    println!(
        "    → {} terms, {} vertices conserved\n",
        table.terms.len(),
        table.total_vertices()
    );
}

fn main() {
    let seed = |c: [i64; 4]| WeightVector::from_ints(SystemName::H4, &c).unwrap();

    // under W(H3): weights in the (ω1,ω2,ω3) basis of H3, heights along the
    // orthogonal ω4 axis — each term is one 3D shell of the projection
    show(
        "600-cell under W(H3)  [Eq. 21]:",
        &branch(&seed([0, 0, 0, 1]), SystemName::H3),
    );
    show(
        "O(0,1,0,0) under W(H3)  [Eq. 23]:",
        &branch(&seed([0, 1, 0, 0]), SystemName::H3),
    );

    // under W(A4): pure orbit unions, no invariant axis
    show(
        "600-cell under W(A4)  [Eq. 30]:",
        &branch(&seed([0, 0, 0, 1]), SystemName::A4),
    );
    show(
        "120-cell under W(A4)  [Eq. 31]:",
        &branch(&seed([1, 0, 0, 0]), SystemName::A4),
    );

    // under W(A3) = ⟨r1,r2,r3⟩ of A4, composed through the W(A4) branching
    show(
        "600-cell under W(A3)  [Eq. 35]:",
        &branch(&seed([0, 0, 0, 1]), SystemName::A3),
    );
}
