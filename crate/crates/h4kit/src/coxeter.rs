//! Coxeter systems H4, H3, A4, A3 built from quaternionic simple roots, the
//! [p,q]/[p,q]* orthogonal transformations, reflection generators, and full
//! group generation (W(H4) of order 14400, W(H3), W(A4), W(A3), Aut(A4)).

use crate::golden::{GoldenScalar as Gs, Sign};
use crate::linalg::{self, Mat};
use crate::quat::Quaternion;
use serde::Serialize;
use std::collections::HashSet;
use std::fmt;

/// An element of O(4) written with unit quaternions:
/// `[p,q] : r ↦ p r q` (rotation) or `[p,q]* : r ↦ p r̄ q` (reflection class).
/// `[p,q]` and `[−p,−q]` act identically, so the stored pair is canonicalized:
/// the first nonzero component of `p` is positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub star: bool,
    pub p: Quaternion,
    pub q: Quaternion,
}

impl GroupElement {
    pub fn new(star: bool, p: Quaternion, q: Quaternion) -> Self {
        assert!(p.is_unit() && q.is_unit(), "group element needs unit quaternions");
        Self::new_unchecked(star, p, q)
    }

    fn new_unchecked(star: bool, p: Quaternion, q: Quaternion) -> Self {
        let (p, flipped) = p.canonical_sign();
        let q = if flipped { -q } else { q };
        GroupElement { star, p, q }
    }

    pub fn identity() -> Self {
        GroupElement {
            star: false,
            p: Quaternion::one(),
            q: Quaternion::one(),
        }
    }

    /// The action on a quaternion.
    pub fn apply(&self, r: &Quaternion) -> Quaternion {
        let mid = if self.star { r.conj() } else { r.clone() };
        &self.p * &mid * &self.q
    }

    /// Function composition: `apply(g.compose(h), r) = apply(g, apply(h, r))`.
    pub fn compose(&self, h: &GroupElement) -> GroupElement {
        let (g, h) = (self, h);
        match (g.star, h.star) {
            // g(h(r)) = p (p' r q') q
            (false, false) => {
                GroupElement::new_unchecked(false, &g.p * &h.p, &h.q * &g.q)
            }
            // g(h(r)) = p (p' r̄ q') q
            (false, true) => {
                GroupElement::new_unchecked(true, &g.p * &h.p, &h.q * &g.q)
            }
            // g(h(r)) = p (p' r q')̄ q = (p q̄') r̄ (p̄' q)
            (true, false) => GroupElement::new_unchecked(
                true,
                &g.p * &h.q.conj(),
                &h.p.conj() * &g.q,
            ),
            // g(h(r)) = p (p' r̄ q')̄ q = (p q̄') r (p̄' q)
            (true, true) => GroupElement::new_unchecked(
                false,
                &g.p * &h.q.conj(),
                &h.p.conj() * &g.q,
            ),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        if self.star {
            // ([p,q]*)⁻¹ = [q,p]*
            GroupElement::new_unchecked(true, self.q.clone(), self.p.clone())
        } else {
            GroupElement::new_unchecked(false, self.p.conj(), self.q.conj())
        }
    }

    /// The reflection in the hyperplane orthogonal to a root α of norm 2:
    /// `[α/√2, −α/√2]*`.
    pub fn reflection(alpha: &Quaternion) -> GroupElement {
        let inv_r2 = Gs::sqrt2() * Gs::ratio(1, 2); // 1/√2
        let p = alpha.scale(&inv_r2);
        assert!(p.is_unit(), "reflection expects a root of squared length 2");
        GroupElement::new(true, p.clone(), -p)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?}, {:?}]{}",
            self.p,
            self.q,
            if self.star { "*" } else { "" }
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SystemName {
    H4,
    H3,
    A4,
    A3,
}

impl SystemName {
    pub fn rank(self) -> usize {
        match self {
            SystemName::H4 | SystemName::A4 => 4,
            SystemName::H3 | SystemName::A3 => 3,
        }
    }

    pub fn group_order(self) -> usize {
        match self {
            SystemName::H4 => 14400,
            SystemName::H3 => 120,
            SystemName::A4 => 120,
            SystemName::A3 => 24,
        }
    }
}

impl std::str::FromStr for SystemName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "h4" => Ok(SystemName::H4),
            "h3" => Ok(SystemName::H3),
            "a4" => Ok(SystemName::A4),
            "a3" => Ok(SystemName::A3),
            other => Err(format!("unknown system `{other}` (expected h4|h3|a4|a3)")),
        }
    }
}

/// Simple roots, Cartan data, fundamental weights and reflection generators
/// of one of the shipped diagrams.
#[derive(Clone)]
pub struct CoxeterSystem {
    pub name: SystemName,
    pub roots: Vec<Quaternion>,
    pub cartan: Mat,
    pub cartan_inv: Mat,
    /// Fundamental weights in the span of the roots: (weights[i], roots[j]) = δ_ij.
    pub weights: Vec<Quaternion>,
    pub gens: Vec<GroupElement>,
    /// For H3 (a rank-3 system living inside the 4D ambient space): the H4
    /// weight ω4, which spans the invariant line orthogonal to α1, α2, α3.
    pub ortho_weight: Option<Quaternion>,
}

fn h4_roots() -> Vec<Quaternion> {
    let z = Gs::zero;
    let h = || Gs::sqrt2() * Gs::ratio(1, 2); // √2/2
    vec![
        // α1 = −√2 e1
        Quaternion::new(z(), -Gs::sqrt2(), z(), z()),
        // α2 = (√2/2)(τe1 + e2 + σe3)
        Quaternion::new(z(), Gs::tau() * h(), h(), Gs::sigma() * h()),
        // α3 = −√2 e2
        Quaternion::new(z(), z(), -Gs::sqrt2(), z()),
        // α4 = (√2/2)(σ + e2 + τe3)
        Quaternion::new(Gs::sigma() * h(), z(), h(), Gs::tau() * h()),
    ]
}

fn a4_roots() -> Vec<Quaternion> {
    let z = Gs::zero;
    let h = || Gs::sqrt2() * Gs::ratio(1, 2);
    vec![
        // α1 = −√2
        Quaternion::new(-Gs::sqrt2(), z(), z(), z()),
        // α2 = (√2/2)(1 + e1 + e2 + e3)
        Quaternion::new(h(), h(), h(), h()),
        // α3 = −√2 e1
        Quaternion::new(z(), -Gs::sqrt2(), z(), z()),
        // α4 = (√2/2)(e1 − σe2 − τe3)
        Quaternion::new(z(), h(), -(Gs::sigma() * h()), -(Gs::tau() * h())),
    ]
}

pub fn build_system(name: SystemName) -> CoxeterSystem {
    let roots: Vec<Quaternion> = match name {
        SystemName::H4 => h4_roots(),
        SystemName::H3 => h4_roots()[..3].to_vec(),
        SystemName::A4 => a4_roots(),
        // A3 = ⟨r2, r3, r4⟩ of H4
        SystemName::A3 => h4_roots()[1..].to_vec(),
    };
    let n = roots.len();
    let cartan: Mat = (0..n)
        .map(|i| (0..n).map(|j| roots[i].dot(&roots[j])).collect())
        .collect();
    let cartan_inv = linalg::invert(&cartan);
    // ω_i = Σ_j (C⁻¹)_ij α_j keeps the weights inside the root span and
    // gives (ω_i, α_j) = δ_ij exactly.
    let weights: Vec<Quaternion> = (0..n)
        .map(|i| {
            let mut w = Quaternion::zero();
            for j in 0..n {
                w = w + roots[j].scale(&cartan_inv[i][j]);
            }
            w
        })
        .collect();
    let gens = roots.iter().map(GroupElement::reflection).collect();
    let ortho_weight = match name {
        SystemName::H3 => Some(build_system(SystemName::H4).weights[3].clone()),
        _ => None,
    };
    CoxeterSystem {
        name,
        roots,
        cartan,
        cartan_inv,
        weights,
        gens,
        ortho_weight,
    }
}

/// Coefficients of `r` in the system's weight basis: b_i = (r, α_i), so that
/// the root-span part of r equals Σ b_i ω_i.  For H3 a fourth coordinate is
/// appended: the coefficient of ω4 along the invariant direction,
/// b4 = (r, ω4)/|ω4|².
pub fn weight_coords(system: &CoxeterSystem, r: &Quaternion) -> Vec<Gs> {
    let mut coords: Vec<Gs> = system.roots.iter().map(|a| r.dot(a)).collect();
    if let Some(w4) = &system.ortho_weight {
        coords.push(r.dot(w4) / w4.norm());
    }
    coords
}

/// A finite group of canonical `GroupElement`s, closed under composition.
#[derive(Clone)]
pub struct FiniteGroup {
    pub name: String,
    pub elements: Vec<GroupElement>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }
}

/// Breadth-first closure of a generator list under composition.  Aborts if
/// the closure exceeds `cap` (default 30000) — a sign of an arithmetic bug.
pub fn generate(
    name: &str,
    generators: &[GroupElement],
    expected_order: Option<usize>,
) -> FiniteGroup {
    generate_capped(name, generators, expected_order, 30_000)
}

pub fn generate_capped(
    name: &str,
    generators: &[GroupElement],
    expected_order: Option<usize>,
    cap: usize,
) -> FiniteGroup {
    let mut seen: HashSet<GroupElement> = HashSet::new();
    seen.insert(GroupElement::identity());
    let mut frontier = vec![GroupElement::identity()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for h in generators {
                let prod = h.compose(g);
                if seen.insert(prod.clone()) {
                    next.push(prod);
                }
            }
        }
        assert!(seen.len() <= cap, "group closure exceeded cap {cap}");
        frontier = next;
    }
    let mut elements: Vec<GroupElement> = seen.into_iter().collect();
    elements.sort();
    if let Some(n) = expected_order {
        assert_eq!(elements.len(), n, "group {name} has unexpected order");
    }
    FiniteGroup {
        name: name.to_string(),
        elements,
    }
}

/// Aut(A4) of order 240: the reflections of A4 extended by the Dynkin-diagram
/// rotation γ = [a, b] with a = ½(−τe1 + e2 + σe3), b = ½(σe1 − τe2 − e3),
/// which maps α1 ↔ α4 and α2 ↔ α3.
pub fn build_aut_a4() -> FiniteGroup {
    let a4 = build_system(SystemName::A4);
    let half = Gs::ratio(1, 2);
    let a = Quaternion::new(
        Gs::zero(),
        -(Gs::tau() * &half),
        half.clone(),
        Gs::sigma() * &half,
    );
    let b = Quaternion::new(
        Gs::zero(),
        Gs::sigma() * &half,
        -(Gs::tau() * &half),
        -half.clone(),
    );
    let gamma = GroupElement::new(false, a, b);
    // sanity: γ realizes the diagram symmetry on the simple roots
    assert_eq!(gamma.apply(&a4.roots[0]), a4.roots[3]);
    assert_eq!(gamma.apply(&a4.roots[1]), a4.roots[2]);
    let mut gens = a4.gens.clone();
    gens.push(gamma);
    generate("Aut(A4)", &gens, Some(240))
}

/// Reduce arbitrary weight-basis coefficients to the dominant chamber by
/// repeatedly applying simple reflections (coefficient action
/// b ↦ b − b_i·(Cartan row i) whenever b_i < 0).  Returns the dominant
/// coefficients together with a witness group element mapping the input
/// vector to the dominant one.
pub fn dominant_rep(system: &CoxeterSystem, coeffs: &[Gs]) -> (Vec<Gs>, GroupElement) {
    let n = system.roots.len();
    assert!(coeffs.len() >= n);
    let mut b: Vec<Gs> = coeffs[..n].to_vec();
    let mut witness = GroupElement::identity();
    loop {
        let Some(i) = (0..n).find(|&i| b[i].sign() == Sign::Negative) else {
            return (b, witness);
        };
        let bi = b[i].clone();
        for j in 0..n {
            b[j] = &b[j] - &(&bi * &system.cartan[i][j]);
        }
        witness = system.gens[i].compose(&witness);
    }
}

/// The size of the Weyl orbit of dominant coefficients, computed by closing
/// the coefficient action — cheap (coefficients only, no ambient vectors).
pub fn coeff_orbit_size(system: &CoxeterSystem, dominant: &[Gs]) -> usize {
    let n = system.roots.len();
    let mut seen: HashSet<Vec<Gs>> = HashSet::new();
    seen.insert(dominant[..n].to_vec());
    let mut frontier = vec![dominant[..n].to_vec()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for b in &frontier {
            for i in 0..n {
                if b[i].is_zero() {
                    continue;
                }
                let bi = b[i].clone();
                let y: Vec<Gs> = (0..n)
                    .map(|j| &b[j] - &(&bi * &system.cartan[i][j]))
                    .collect();
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgroups::{build_set, SetName};

    #[test]
    fn cartan_matrices_match_paper() {
        let h4 = build_system(SystemName::H4);
        // Eq. 11 top row: 2, −τ, 0, 0
        assert_eq!(h4.cartan[0][0], Gs::from_int(2));
        assert_eq!(h4.cartan[0][1], -Gs::tau());
        assert_eq!(h4.cartan[0][2], Gs::zero());
        assert_eq!(h4.cartan[1][2], Gs::from_int(-1));
        assert_eq!(h4.cartan[2][3], Gs::from_int(-1));
        assert_eq!(h4.cartan[1][3], Gs::zero());
        let a4 = build_system(SystemName::A4);
        for i in 0..4 {
            for j in 0..4 {
                let expect = match (i as i64 - j as i64).abs() {
                    0 => Gs::from_int(2),
                    1 => Gs::from_int(-1),
                    _ => Gs::zero(),
                };
                assert_eq!(a4.cartan[i][j], expect);
            }
        }
    }

    #[test]
    fn weights_are_dual_to_roots() {
        for name in [SystemName::H4, SystemName::H3, SystemName::A4, SystemName::A3] {
            let sys = build_system(name);
            for i in 0..sys.roots.len() {
                for j in 0..sys.roots.len() {
                    let d = sys.weights[i].dot(&sys.roots[j]);
                    let expect = if i == j { Gs::one() } else { Gs::zero() };
                    assert_eq!(d, expect, "{name:?} (ω{}, α{})", i + 1, j + 1);
                }
            }
        }
    }

    #[test]
    fn omega4_and_v4_closed_forms() {
        // Eq. 12: ω4 = −√2 τ (a pure scalar quaternion)
        let h4 = build_system(SystemName::H4);
        let w4 = &h4.weights[3];
        assert_eq!(w4.0[0], -(Gs::sqrt2() * Gs::tau()));
        for i in 1..4 {
            assert!(w4.0[i].is_zero());
        }
        // Eq. 27: v4 = (1/√10)(2e2 − 2e3); 1/√10 = √2(2τ−1)/10
        let a4 = build_system(SystemName::A4);
        let inv_sqrt10 = Gs::sqrt2() * Gs::lin(-1, 2) * Gs::ratio(1, 10);
        let expect = Quaternion::new(
            Gs::zero(),
            Gs::zero(),
            Gs::from_int(2) * &inv_sqrt10,
            Gs::from_int(-2) * &inv_sqrt10,
        );
        assert_eq!(a4.weights[3], expect);
    }

    #[test]
    fn compose_matches_apply() {
        let h4 = build_system(SystemName::H4);
        let r1 = &h4.gens[0];
        let r2 = &h4.gens[1];
        let probe = [
            Quaternion::one(),
            Quaternion::unit(1),
            Quaternion::new(Gs::tau(), Gs::one(), Gs::sigma(), Gs::sqrt2()),
        ];
        let combos = [
            r1.compose(r2),
            r2.compose(r1),
            r1.compose(&r2.compose(r1)),
            r1.compose(r1),
        ];
        let funcs: [Box<dyn Fn(&Quaternion) -> Quaternion>; 4] = [
            Box::new(|r| r1.apply(&r2.apply(r))),
            Box::new(|r| r2.apply(&r1.apply(r))),
            Box::new(|r| r1.apply(&r2.apply(&r1.apply(r)))),
            Box::new(|r| r1.apply(&r1.apply(r))),
        ];
        for (g, f) in combos.iter().zip(&funcs) {
            for r in &probe {
                assert_eq!(g.apply(r), f(r));
            }
        }
        assert_eq!(r1.compose(r1), GroupElement::identity());
        assert_eq!(GroupElement::identity().compose(r2), r2.clone());
        // two star elements compose to a plain element
        assert!(!r1.compose(r2).star);
    }

    #[test]
    fn inverse_is_exact() {
        let h4 = build_system(SystemName::H4);
        let g = h4.gens[0].compose(&h4.gens[1]).compose(&h4.gens[3]);
        assert_eq!(g.compose(&g.inverse()), GroupElement::identity());
        assert_eq!(g.inverse().compose(&g), GroupElement::identity());
    }

    #[test]
    fn small_group_orders() {
        let h4 = build_system(SystemName::H4);
        assert_eq!(generate("W(H3)", &h4.gens[..3], None).order(), 120);
        assert_eq!(
            generate("W(A3)", &build_system(SystemName::A3).gens, None).order(),
            24
        );
        assert_eq!(
            generate("W(A4)", &build_system(SystemName::A4).gens, None).order(),
            120
        );
        assert_eq!(build_aut_a4().order(), 240);
    }

    #[test]
    fn wh3_equals_p_pbar_form() {
        // Eq. 13: W(H3) = {[p, p̄]} ∪ {[p, p̄]*} over p ∈ I.
        let h4 = build_system(SystemName::H4);
        let wh3 = generate("W(H3)", &h4.gens[..3], Some(120));
        let i = build_set(SetName::I);
        let mut closed: Vec<GroupElement> = Vec::new();
        for p in &i.elements {
            closed.push(GroupElement::new(false, p.clone(), p.conj()));
            closed.push(GroupElement::new(true, p.clone(), p.conj()));
        }
        closed.sort();
        closed.dedup();
        assert_eq!(closed, wh3.elements);
    }

    #[test]
    fn weight_coords_examples() {
        let h4 = build_system(SystemName::H4);
        // α1 in the ω-basis is the first Cartan row (Eq. 11)
        let c = weight_coords(&h4, &h4.roots[0]);
        assert_eq!(c, vec![Gs::from_int(2), -Gs::tau(), Gs::zero(), Gs::zero()]);
        // H3-in-H4: ω4 ↦ (0,0,0; 1)
        let h3 = build_system(SystemName::H3);
        let w4 = h3.ortho_weight.clone().unwrap();
        let c = weight_coords(&h3, &w4);
        assert_eq!(c, vec![Gs::zero(), Gs::zero(), Gs::zero(), Gs::one()]);
        // ω1 of H4 in the A4 v-basis is row 1 of Eq. 28's D: (τ⁴, −2τ², 1, τ)
        let a4 = build_system(SystemName::A4);
        let c = weight_coords(&a4, &h4.weights[0]);
        assert_eq!(
            c,
            vec![
                Gs::lin(2, 3),                 // τ⁴ = 3τ+2
                Gs::lin(-2, -2),               // −2τ²
                Gs::one(),
                Gs::tau(),
            ]
        );
    }

    #[test]
    fn dominant_rep_works() {
        let h4 = build_system(SystemName::H4);
        let coeffs = vec![Gs::from_int(-1), Gs::zero(), Gs::zero(), Gs::zero()];
        let (dom, wit) = dominant_rep(&h4, &coeffs);
        for c in &dom {
            assert!(c.sign() != Sign::Negative);
        }
        // the witness really maps the input vector to the dominant vector
        let v_in = {
            let mut v = Quaternion::zero();
            for (c, w) in coeffs.iter().zip(&h4.weights) {
                v = v + w.scale(c);
            }
            v
        };
        let v_dom = {
            let mut v = Quaternion::zero();
            for (c, w) in dom.iter().zip(&h4.weights) {
                v = v + w.scale(c);
            }
            v
        };
        assert_eq!(wit.apply(&v_in), v_dom);
        // already dominant: identity witness
        let (d2, w2) = dominant_rep(&h4, &dom);
        assert_eq!(d2, dom);
        assert_eq!(w2, GroupElement::identity());
    }

    #[test]
    fn coeff_orbit_sizes() {
        let h4 = build_system(SystemName::H4);
        let one = Gs::one;
        let zero = Gs::zero;
        assert_eq!(coeff_orbit_size(&h4, &[zero(), zero(), zero(), one()]), 120);
        assert_eq!(coeff_orbit_size(&h4, &[one(), zero(), zero(), zero()]), 600);
        let h3 = build_system(SystemName::H3);
        assert_eq!(coeff_orbit_size(&h3, &[one(), zero(), zero()]), 20);
        assert_eq!(coeff_orbit_size(&h3, &[zero(), one(), zero()]), 30);
        assert_eq!(coeff_orbit_size(&h3, &[zero(), zero(), one()]), 12);
    }
}
