//! Exact arithmetic in Q(τ, √2), the scalar field everything else is built
//! on, plus the literal grammar the CLI accepts in `--weight` flags.
//!
//! Run with `cargo run --example scalar_arithmetic`.

use h4kit::golden::{GoldenScalar as Gs, Sign};

fn main() {
    let tau = Gs::tau();
    let sigma = Gs::sigma();

    // τ and σ = 1 − τ are the roots of x² = x + 1
    assert_eq!(&tau * &tau, &tau + &Gs::one());
    assert_eq!(&tau + &sigma, Gs::one());
    assert_eq!(&tau * &sigma, -Gs::one());
    println!("τ² = τ + 1,  τ + σ = 1,  τσ = −1   (all exact)");

    // the Galois involution τ ↔ σ exchanges the two roots
    let x = "(3*t+2)/5 + r2".parse::<Gs>().unwrap();
    println!("x        = {x}");
    println!("x̄ (τ↔σ) = {}", x.galois());

    // exact sign decisions never consult floats: τ¹⁰ = 55τ + 34 exactly
    let tiny = "t*t*t*t*t*t*t*t*t*t - 55*t - 34".parse::<Gs>().unwrap();
    println!("τ¹⁰ − 55τ − 34 = {tiny}  (sign: {:?})", tiny.sign());
    assert_eq!(tiny.sign(), Sign::Zero);

    // Display output is re-parseable: a round trip is the identity
    let y = "2*t/(2+s)".parse::<Gs>().unwrap();
    let z = y.to_string().parse::<Gs>().unwrap();
    assert_eq!(y, z);
    println!("2τ/(2+σ) = {y} ≈ {:.6}  (round-trips through Display)", y.to_f64());
}
