//! Lazily built, process-wide copies of the expensive shared objects: the
//! four Coxeter systems and their reflection groups.  Group generation over
//! exact scalars is not free (W(H4) has 14400 elements), so everything that
//! needs a group should go through these accessors rather than regenerating.

use crate::coxeter::{build_system, generate_capped, CoxeterSystem, FiniteGroup, SystemName};
use once_cell::sync::Lazy;

static H4_SYSTEM: Lazy<CoxeterSystem> = Lazy::new(|| build_system(SystemName::H4));
static H3_SYSTEM: Lazy<CoxeterSystem> = Lazy::new(|| build_system(SystemName::H3));
static A4_SYSTEM: Lazy<CoxeterSystem> = Lazy::new(|| build_system(SystemName::A4));
static A3_SYSTEM: Lazy<CoxeterSystem> = Lazy::new(|| build_system(SystemName::A3));

pub fn system(name: SystemName) -> &'static CoxeterSystem {
    match name {
        SystemName::H4 => &H4_SYSTEM,
        SystemName::H3 => &H3_SYSTEM,
        SystemName::A4 => &A4_SYSTEM,
        SystemName::A3 => &A3_SYSTEM,
    }
}

static W_H4: Lazy<FiniteGroup> = Lazy::new(|| {
    generate_capped("W(H4)", &H4_SYSTEM.gens, Some(14400), 15000)
});
static W_H3: Lazy<FiniteGroup> =
    Lazy::new(|| generate_capped("W(H3)", &H3_SYSTEM.gens, Some(120), 200));
static W_A4: Lazy<FiniteGroup> =
    Lazy::new(|| generate_capped("W(A4)", &A4_SYSTEM.gens, Some(120), 200));
static W_A3: Lazy<FiniteGroup> =
    Lazy::new(|| generate_capped("W(A3)", &A3_SYSTEM.gens, Some(24), 50));

pub fn group(name: SystemName) -> &'static FiniteGroup {
    match name {
        SystemName::H4 => &W_H4,
        SystemName::H3 => &W_H3,
        SystemName::A4 => &W_A4,
        SystemName::A3 => &W_A3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GroupElement;

    #[test]
    fn wh4_order_and_structure() {
        let g = group(SystemName::H4);
        assert_eq!(g.order(), 14400);
        // Eq. 14: W(H4) = {[p,q]} ∪ {[p,q]*} with p,q ∈ I — so exactly half
        // the elements are starred.
        let starred = g.elements.iter().filter(|e| e.star).count();
        assert_eq!(starred, 7200);
        assert!(g.contains(&GroupElement::identity()));
        // closure spot-check on a few products
        for i in [0usize, 137, 7200, 14399] {
            let a = &g.elements[i];
            let b = &g.elements[(i * 31 + 7) % g.order()];
            assert!(g.contains(&a.compose(b)));
            assert!(g.contains(&a.inverse()));
        }
    }

    #[test]
    fn wh4_pairs_lie_in_icosahedral_group() {
        use crate::qgroups::{build_set, SetName};
        use std::collections::HashSet;
        let i: HashSet<_> = build_set(SetName::I).elements.into_iter().collect();
        let g = group(SystemName::H4);
        for e in g.elements.iter().step_by(97) {
            assert!(i.contains(&e.p), "p component outside I");
            assert!(i.contains(&e.q) || i.contains(&-&e.q), "q component outside ±I");
        }
    }
}
