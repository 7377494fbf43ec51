//! Cartan matrices, exact inverses, and simple roots / fundamental weights
//! as quaternions for H4, H3, A4, and A3 (Eqs. 10–11, 17–18, 26–27).
//!
//! Run with `cargo run --example cartan_tables`.

use h4kit::coxeter::SystemName;
use h4kit::golden::GoldenScalar as Gs;
use h4kit::shared;

fn print_matrix(title: &str, m: &[Vec<Gs>]) {
    println!("{title}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>12}")).collect();
        println!("    {}", cells.join(" "));
    }
}

fn main() {
    for sys in [SystemName::H4, SystemName::H3, SystemName::A4, SystemName::A3] {
        let s = shared::system(sys);
        println!("== {sys:?} (|W| = {}) ==", sys.group_order());
        print_matrix("Cartan matrix C", &s.cartan);
        print_matrix("exact inverse C⁻¹", &s.cartan_inv);
        for (i, (alpha, omega)) in s.roots.iter().zip(&s.weights).enumerate() {
            println!(
                "    α{} = [{}, {}, {}, {}]   ω{} = [{}, {}, {}, {}]",
                i + 1,
                alpha.0[0], alpha.0[1], alpha.0[2], alpha.0[3],
                i + 1,
                omega.0[0], omega.0[1], omega.0[2], omega.0[3],
            );
        }
        // (ω_i, α_j) = δ_ij · |α_j|²/2 — the defining duality, checked exactly
        for (i, omega) in s.weights.iter().enumerate() {
            for (j, alpha) in s.roots.iter().enumerate() {
                let d = omega.dot(alpha);
                if i == j {
                    assert_eq!(d, Gs::one());
                } else {
                    assert!(d.is_zero());
                }
            }
        }
        println!();
    }
    println!("duality (ω_i, α_j) = δ_ij verified exactly for all four systems");
}
