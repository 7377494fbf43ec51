//! Duals of the fourteen uniform W(H4) polytopes (§5): for each seed, the
//! cell-center orbits with their exact scale factors (solved from the
//! hyperplane condition, no floats), the circumradii of the scaled orbits,
//! and the vertex/cell counts of the dual.
//!
//! Run with `cargo run --release --example dual_polytopes` (the full scan
//! over all fourteen polytopes takes a minute or two).

use h4kit::coxeter::SystemName;
use h4kit::dual::dual_polytope;
use h4kit::orbit::WeightVector;
use h4kit::verify;

const SEEDS: [([i64; 4], &str); 14] = [
    ([0, 0, 0, 1], "§5.1 (600-cell ↔ 120-cell)"),
    ([0, 1, 0, 0], "§5.2"),
    ([0, 0, 1, 0], "§5.3"),
    ([1, 0, 0, 1], "§5.4"),
    ([0, 1, 0, 1], "§5.5"),
    ([0, 0, 1, 1], "§5.6"),
    ([0, 1, 1, 0], "§5.7"),
    ([1, 0, 1, 0], "§5.8"),
    ([1, 1, 0, 0], "§5.9"),
    ([1, 1, 1, 0], "§5.10"),
    ([1, 1, 0, 1], "§5.11"),
    ([1, 0, 1, 1], "§5.12"),
    ([0, 1, 1, 1], "§5.13"),
    ([1, 1, 1, 1], "§5.14"),
];

fn main() {
    for (coeffs, section) in SEEDS {
        let seed = WeightVector::from_ints(SystemName::H4, &coeffs).unwrap();
        // anchor the same cell-center orbit the paper leaves unscaled
        let spec = dual_polytope(&seed, verify::paper_anchor(&seed)).unwrap();
        println!("dual of W(H4){coeffs:?}  [{section}]:");
        for o in &spec.orbits {
            let tag = if o.is_anchor { "  (anchor)" } else { "" };
            println!(
                "    node {} ({:<24}) scale = {:<18} radius ≈ {:.6}{tag}",
                o.node,
                o.label,
                o.scale.to_string(),
                o.radius
            );
        }
        println!(
            "    dual: {} vertices, {} cells\n",
            spec.dual_vertex_count, spec.dual_cell_count
        );
    }
}
