//! Quaternions over Q(τ,√2) and the reflection action used throughout.
//!
//! Components are taken along the basis (1, e1, e2, e3) with the Hamilton
//! relations e_i e_j = −δ_ij + ε_ijk e_k.  The Euclidean inner product of two
//! quaternions is the scalar part of (p q̄ + q p̄)/2, i.e. the component-wise
//! dot product.

use crate::golden::{GoldenScalar, Sign};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Quaternion(pub [GoldenScalar; 4]);

impl Quaternion {
    pub fn new(q0: GoldenScalar, q1: GoldenScalar, q2: GoldenScalar, q3: GoldenScalar) -> Self {
        Quaternion([q0, q1, q2, q3])
    }

    pub fn zero() -> Self {
        Quaternion(std::array::from_fn(|_| GoldenScalar::zero()))
    }

    pub fn one() -> Self {
        let mut q = Self::zero();
        q.0[0] = GoldenScalar::one();
        q
    }

    /// The imaginary unit e_i (i in 1..=3).
    pub fn unit(i: usize) -> Self {
        assert!(i <= 3);
        let mut q = Self::zero();
        q.0[i] = GoldenScalar::one();
        q
    }

    pub fn scalar(s: GoldenScalar) -> Self {
        let mut q = Self::zero();
        q.0[0] = s;
        q
    }

    pub fn conj(&self) -> Self {
        Quaternion([
            self.0[0].clone(),
            -&self.0[1],
            -&self.0[2],
            -&self.0[3],
        ])
    }

    /// q q̄ — the squared Euclidean length, a non-negative scalar.
    pub fn norm(&self) -> GoldenScalar {
        self.dot(self)
    }

    /// Euclidean 4D inner product.
    pub fn dot(&self, other: &Quaternion) -> GoldenScalar {
        let mut acc = GoldenScalar::zero();
        for i in 0..4 {
            acc = acc + &self.0[i] * &other.0[i];
        }
        acc
    }

    pub fn scale(&self, s: &GoldenScalar) -> Self {
        Quaternion(std::array::from_fn(|i| &self.0[i] * s))
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == GoldenScalar::one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Reflection of `r` in the hyperplane orthogonal to `normal`:
    /// r ↦ −(n r̄ n)/(n n̄).  Exact for any nonzero normal.
    pub fn reflect(normal: &Quaternion, r: &Quaternion) -> Quaternion {
        assert!(!normal.is_zero(), "reflection normal must be nonzero");
        let n2 = normal.norm();
        let prod = normal * &r.conj() * normal;
        -prod.scale(&n2.inv().expect("nonzero normal has nonzero norm"))
    }

    pub fn to_f64(&self) -> [f64; 4] {
        std::array::from_fn(|i| self.0[i].to_f64())
    }

    /// Canonical sign: flips the quaternion if its first nonzero component is
    /// negative.  Used to quotient the ±q ambiguity of rotation pairs.
    pub fn canonical_sign(&self) -> (Quaternion, bool) {
        for c in &self.0 {
            match c.sign() {
                Sign::Positive => return (self.clone(), false),
                Sign::Negative => return (-self, true),
                Sign::Zero => continue,
            }
        }
        (self.clone(), false)
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

impl<'b> Mul<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &'b Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        ])
    }
}

impl<'b> Add<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &'b Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<'b> Sub<&'b Quaternion> for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &'b Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion(std::array::from_fn(|i| -&self.0[i]))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        -&self
    }
}

macro_rules! forward_owned_q {
    ($trait:ident, $method:ident) => {
        impl $trait<Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Quaternion> for Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: &Quaternion) -> Quaternion {
                (&self).$method(rhs)
            }
        }
        impl $trait<Quaternion> for &Quaternion {
            type Output = Quaternion;
            fn $method(self, rhs: Quaternion) -> Quaternion {
                self.$method(&rhs)
            }
        }
    };
}
forward_owned_q!(Mul, mul);
forward_owned_q!(Add, add);
forward_owned_q!(Sub, sub);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::GoldenScalar as Gs;

    #[test]
    fn hamilton_relations() {
        let e1 = Quaternion::unit(1);
        let e2 = Quaternion::unit(2);
        let e3 = Quaternion::unit(3);
        assert_eq!(&e1 * &e2, e3);
        assert_eq!(&e2 * &e3, e1);
        assert_eq!(&e3 * &e1, e2);
        assert_eq!(&e1 * &e1, -Quaternion::one());
        assert_eq!(&e2 * &e1, -&e3);
        let q = Quaternion::new(Gs::tau(), Gs::sigma(), Gs::one(), Gs::sqrt2());
        assert_eq!(Quaternion::one() * &q, q);
    }

    #[test]
    fn unit_generator_of_icosahedral_group() {
        // b = ½(τ + σe1 + e2): τ² + σ² + 1 = 4, so |b|² = 1.
        let half = Gs::ratio(1, 2);
        let b = Quaternion::new(
            Gs::tau() * &half,
            Gs::sigma() * &half,
            half.clone(),
            Gs::zero(),
        );
        assert!(b.is_unit());
    }

    #[test]
    fn conj_and_dot() {
        let q = Quaternion::new(Gs::one(), Gs::tau(), Gs::sigma(), Gs::ratio(1, 2));
        assert_eq!(q.conj().conj(), q);
        assert_eq!(Quaternion::unit(1).dot(&Quaternion::unit(2)), Gs::zero());
        // norm via product: scalar part of q q̄ equals dot(q, q)
        let prod = &q * &q.conj();
        assert_eq!(prod.0[0], q.norm());
        for i in 1..4 {
            assert!(prod.0[i].is_zero());
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Quaternion::new(Gs::one(), Gs::tau(), Gs::zero(), Gs::sqrt2());
        let q = Quaternion::new(Gs::sigma(), Gs::ratio(2, 3), Gs::one(), Gs::zero());
        assert_eq!((&p * &q).norm(), p.norm() * q.norm());
    }

    #[test]
    fn reflection_properties() {
        let alpha = Quaternion::new(Gs::zero(), -Gs::sqrt2(), Gs::zero(), Gs::zero());
        // reflect(α, α) = −α
        assert_eq!(Quaternion::reflect(&alpha, &alpha), -&alpha);
        // orthogonal vectors are fixed
        let r = Quaternion::new(Gs::tau(), Gs::zero(), Gs::one(), Gs::sigma());
        assert_eq!(alpha.dot(&r), Gs::zero());
        assert_eq!(Quaternion::reflect(&alpha, &r), r);
        // involution on a generic vector
        let v = Quaternion::new(Gs::one(), Gs::ratio(1, 3), Gs::tau(), Gs::sqrt2());
        assert_eq!(
            Quaternion::reflect(&alpha, &Quaternion::reflect(&alpha, &v)),
            v
        );
    }

    #[test]
    fn canonical_sign_flips_leading_negative() {
        let q = Quaternion::new(Gs::zero(), -Gs::tau(), Gs::one(), Gs::zero());
        let (c, flipped) = q.canonical_sign();
        assert!(flipped);
        assert_eq!(c.0[1], Gs::tau());
        let (c2, f2) = c.canonical_sign();
        assert!(!f2);
        assert_eq!(c2, c);
    }
}
