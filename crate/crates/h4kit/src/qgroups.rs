//! The finite quaternion groups behind W(H4): the binary tetrahedral group T,
//! its rotated copy T′, the binary octahedral group O = T ∪ T′, the binary
//! icosahedral group I (also the 600-cell's vertices), the snub 24-cell set
//! S with I = T ⊕ S, and the Galois-conjugate group Ĩ — together with the
//! conjugacy-class structure of I (Table 1).

use crate::golden::GoldenScalar as Gs;
use crate::quat::Quaternion;
use serde::Serialize;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SetName {
    T,
    Tprime,
    O,
    I,
    S,
    Itilde,
}

impl SetName {
    pub fn expected_size(self) -> usize {
        match self {
            SetName::T | SetName::Tprime => 24,
            SetName::O => 48,
            SetName::I | SetName::Itilde => 120,
            SetName::S => 96,
        }
    }

    /// Whether the set is closed under multiplication (S and T′ are not).
    pub fn is_group(self) -> bool {
        !matches!(self, SetName::S | SetName::Tprime)
    }
}

/// A deduplicated, canonically sorted set of unit quaternions.
#[derive(Clone, Debug)]
pub struct QuaternionSet {
    pub name: SetName,
    pub elements: Vec<Quaternion>,
}

fn sorted_dedup(mut v: Vec<Quaternion>) -> Vec<Quaternion> {
    v.sort();
    v.dedup();
    v
}

/// All 2^k sign choices of the given components, assembled at the listed
/// imaginary (or scalar) positions and halved.
fn half_signs(parts: &[(usize, Gs)]) -> Vec<Quaternion> {
    let half = Gs::ratio(1, 2);
    let n = parts.len();
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..(1u32 << n) {
        let mut q = Quaternion::zero();
        for (bit, (idx, val)) in parts.iter().enumerate() {
            let signed = if mask & (1 << bit) != 0 { -val } else { val.clone() };
            q.0[*idx] = signed * &half;
        }
        out.push(q);
    }
    out
}

fn build_t() -> Vec<Quaternion> {
    let mut v = Vec::new();
    for i in 0..4 {
        let mut q = Quaternion::zero();
        q.0[i] = Gs::one();
        v.push(q.clone());
        v.push(-q);
    }
    v.extend(half_signs(&[
        (0, Gs::one()),
        (1, Gs::one()),
        (2, Gs::one()),
        (3, Gs::one()),
    ]));
    sorted_dedup(v)
}

fn build_tprime() -> Vec<Quaternion> {
    let h = Gs::sqrt2() * Gs::ratio(1, 2); // 1/√2
    let pairs: [(usize, usize); 6] = [(0, 1), (2, 3), (0, 2), (3, 1), (0, 3), (1, 2)];
    let mut v = Vec::new();
    for (i, j) in pairs {
        for si in [1i64, -1] {
            for sj in [1i64, -1] {
                let mut q = Quaternion::zero();
                q.0[i] = Gs::from_int(si) * &h;
                q.0[j] = Gs::from_int(sj) * &h;
                v.push(q);
            }
        }
    }
    sorted_dedup(v)
}

fn build_s() -> Vec<Quaternion> {
    let t = Gs::tau();
    let s = Gs::sigma();
    let one = Gs::one();
    // Eq. 9: four families of ½(x ± y ± z), each cycled over e1,e2,e3.
    // (scalar, ei, ej coefficient patterns; position 0 is the scalar part)
    let rows: Vec<[(usize, Gs); 3]> = vec![
        // ½(±τ ± e1 ± σe3) and cyclic
        [(0, t.clone()), (1, one.clone()), (3, s.clone())],
        [(0, t.clone()), (2, one.clone()), (1, s.clone())],
        [(0, t.clone()), (3, one.clone()), (2, s.clone())],
        // ½(±σ ± e1 ± τe2) and cyclic
        [(0, s.clone()), (1, one.clone()), (2, t.clone())],
        [(0, s.clone()), (2, one.clone()), (3, t.clone())],
        [(0, s.clone()), (3, one.clone()), (1, t.clone())],
        // ½(±1 ± τe1 ± σe2) and cyclic
        [(0, one.clone()), (1, t.clone()), (2, s.clone())],
        [(0, one.clone()), (2, t.clone()), (3, s.clone())],
        [(0, one.clone()), (3, t.clone()), (1, s.clone())],
        // ½(±σe1 ± τe2 ± e3) and cyclic — purely imaginary
        [(1, s.clone()), (2, t.clone()), (3, one.clone())],
        [(2, s.clone()), (3, t.clone()), (1, one.clone())],
        [(3, s.clone()), (1, t.clone()), (2, one.clone())],
    ];
    let mut v = Vec::new();
    for row in rows {
        v.extend(half_signs(&row));
    }
    sorted_dedup(v)
}

/// Closure of a generator set under quaternion multiplication.
fn close(gens: &[Quaternion], cap: usize) -> Vec<Quaternion> {
    let mut seen: HashSet<Quaternion> = gens.iter().cloned().collect();
    seen.insert(Quaternion::one());
    let mut frontier: Vec<Quaternion> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in gens {
                let prod = g * h;
                if seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        assert!(
            seen.len() <= cap,
            "quaternion closure exceeded expected size {cap} — arithmetic bug"
        );
        frontier = next;
    }
    sorted_dedup(seen.into_iter().collect())
}

fn build_i() -> Vec<Quaternion> {
    let half = Gs::ratio(1, 2);
    let b = Quaternion::new(
        Gs::tau() * &half,
        Gs::sigma() * &half,
        half.clone(),
        Gs::zero(),
    );
    let c = Quaternion::new(
        Gs::tau() * &half,
        -(Gs::sigma() * &half),
        half.clone(),
        Gs::zero(),
    );
    let generated = close(&[b, c], 120);
    // Independent cross-check of the Eq. 8/9 transcription: ⟨b,c⟩ = T ∪ S.
    let mut union = build_t();
    union.extend(build_s());
    let union = sorted_dedup(union);
    assert_eq!(
        generated, union,
        "⟨b,c⟩ closure disagrees with T ∪ S — transcription bug"
    );
    generated
}

pub fn build_set(name: SetName) -> QuaternionSet {
    let elements = match name {
        SetName::T => build_t(),
        SetName::Tprime => build_tprime(),
        SetName::O => {
            let mut v = build_t();
            v.extend(build_tprime());
            sorted_dedup(v)
        }
        SetName::I => build_i(),
        SetName::S => build_s(),
        SetName::Itilde => sorted_dedup(
            build_i()
                .into_iter()
                .map(|q| Quaternion(std::array::from_fn(|i| q.0[i].galois())))
                .collect(),
        ),
    };
    assert_eq!(elements.len(), name.expected_size(), "{name:?} has wrong size");
    for q in &elements {
        assert!(q.is_unit(), "{name:?} contains a non-unit quaternion");
    }
    QuaternionSet { name, elements }
}

/// One conjugacy class of a quaternion group.
#[derive(Clone, Debug, Serialize)]
pub struct ConjugacyClass {
    pub representative: Quaternion,
    pub members: Vec<Quaternion>,
    pub element_order: usize,
}

fn element_order(q: &Quaternion) -> usize {
    let one = Quaternion::one();
    let mut p = q.clone();
    let mut n = 1;
    while p != one {
        p = &p * q;
        n += 1;
        assert!(n <= 256, "element order runaway — not a finite group element?");
    }
    n
}

/// Conjugacy classes under g ↦ x g x⁻¹ (x⁻¹ = x̄ for unit quaternions),
/// sorted by (class size, element order, representative).
pub fn conjugacy_classes(set: &QuaternionSet) -> Vec<ConjugacyClass> {
    assert!(set.name.is_group(), "{:?} is not a group", set.name);
    let mut remaining: HashSet<Quaternion> = set.elements.iter().cloned().collect();
    let mut classes = Vec::new();
    for g in &set.elements {
        if !remaining.contains(g) {
            continue;
        }
        let mut members: Vec<Quaternion> = set
            .elements
            .iter()
            .map(|x| x * g * x.conj())
            .collect();
        members.sort();
        members.dedup();
        for m in &members {
            remaining.remove(m);
        }
        classes.push(ConjugacyClass {
            representative: members[0].clone(),
            element_order: element_order(g),
            members,
        });
    }
    classes.sort_by_key(|c| (c.members.len(), c.element_order, c.representative.clone()));
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_sizes() {
        assert_eq!(build_set(SetName::T).elements.len(), 24);
        assert_eq!(build_set(SetName::Tprime).elements.len(), 24);
        assert_eq!(build_set(SetName::O).elements.len(), 48);
        assert_eq!(build_set(SetName::I).elements.len(), 120);
        assert_eq!(build_set(SetName::S).elements.len(), 96);
        assert_eq!(build_set(SetName::Itilde).elements.len(), 120);
    }

    #[test]
    fn i_is_disjoint_union_of_t_and_s() {
        let t: HashSet<_> = build_set(SetName::T).elements.into_iter().collect();
        let s: HashSet<_> = build_set(SetName::S).elements.into_iter().collect();
        let i: HashSet<_> = build_set(SetName::I).elements.into_iter().collect();
        assert!(t.is_disjoint(&s));
        assert_eq!(i, t.union(&s).cloned().collect());
    }

    #[test]
    fn groups_are_closed() {
        for name in [SetName::T, SetName::O, SetName::I, SetName::Itilde] {
            let set = build_set(name);
            let all: HashSet<_> = set.elements.iter().cloned().collect();
            for g in &set.elements {
                for h in &set.elements {
                    assert!(all.contains(&(g * h)), "{name:?} not closed");
                }
            }
            assert!(all.contains(&Quaternion::one()));
            for g in &set.elements {
                assert!(all.contains(&g.conj()), "{name:?} missing inverse");
            }
        }
    }

    #[test]
    fn itilde_differs_from_i() {
        let i: HashSet<_> = build_set(SetName::I).elements.into_iter().collect();
        let it: HashSet<_> = build_set(SetName::Itilde).elements.into_iter().collect();
        assert_ne!(i, it);
        assert_eq!(i.intersection(&it).count(), 24); // they share exactly T
    }

    #[test]
    fn table1_conjugacy_classes() {
        let i = build_set(SetName::I);
        let classes = conjugacy_classes(&i);
        let sizes: Vec<usize> = classes.iter().map(|c| c.members.len()).collect();
        let orders: Vec<usize> = classes.iter().map(|c| c.element_order).collect();
        assert_eq!(sizes, vec![1, 1, 12, 12, 12, 12, 20, 20, 30]);
        // matched by (size, order) pairs of Table 1
        let mut pairs: Vec<(usize, usize)> =
            sizes.iter().copied().zip(orders.iter().copied()).collect();
        pairs.sort();
        assert_eq!(
            pairs,
            vec![
                (1, 1),
                (1, 2),
                (12, 5),
                (12, 5),
                (12, 10),
                (12, 10),
                (20, 3),
                (20, 6),
                (30, 4)
            ]
        );
        // the 30-class is purely imaginary and contains ±e1, ±e2, ±e3
        let c30 = classes.iter().find(|c| c.members.len() == 30).unwrap();
        for q in &c30.members {
            assert!(q.0[0].is_zero());
        }
        for k in 1..4 {
            let e = Quaternion::unit(k);
            assert!(c30.members.contains(&e));
            assert!(c30.members.contains(&(-e)));
        }
    }
}
