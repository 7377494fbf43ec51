//! The binary tetrahedral, octahedral, and icosahedral quaternion groups
//! (Eqs. 6–8) and the conjugacy classes of the binary icosahedral group I,
//! reproducing Table 1 of the paper.
//!
//! Run with `cargo run --example quaternion_groups`.

use h4kit::qgroups::{build_set, conjugacy_classes, SetName};

fn main() {
    for name in [SetName::T, SetName::O, SetName::I] {
        let set = build_set(name);
        let kind = if name.is_group() { "group" } else { "coset set" };
        println!("{name:?}: {} unit quaternions ({kind})", set.elements.len());
    }

    println!("\nconjugacy classes of I (Table 1):");
    println!("{:>6}  {:>6}  representative", "size", "order");
    for class in conjugacy_classes(&build_set(SetName::I)) {
        let q = &class.representative;
        println!(
            "{:>6}  {:>6}  [{}, {}, {}, {}]",
            class.members.len(),
            class.element_order,
            q.0[0], q.0[1], q.0[2], q.0[3]
        );
    }
}
